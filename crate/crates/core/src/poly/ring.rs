use std::fmt;
use std::sync::Arc;

use super::monomial::TermOrder;
use super::PolyError;

/// Variable names plus the active term order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    order: TermOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], order: TermOrder) -> Result<RingRef, PolyError> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(PolyError::BadVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::BadVariableName(v.clone()));
            }
        }
        Ok(Arc::new(Ring { vars, order }))
    }

    /// `prefix0, prefix1, …, prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize, order: TermOrder) -> RingRef {
        let vars: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Ring::new(&vars, order).expect("generated names are valid")
    }

    /// Projective 3-space coordinates `x0..x3`, grevlex.
    pub fn projective3() -> RingRef {
        Self::indexed("x", 4, TermOrder::Grevlex)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: TermOrder) -> RingRef {
        Arc::new(Ring {
            vars: self.vars.clone(),
            order,
        })
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}; {}]", self.vars.join(", "), self.order)
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
