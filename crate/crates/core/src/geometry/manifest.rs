//! Plain-text family manifests: one `key = polynomial` line per form, `#` comments.
//!
//! ```text
//! # contact quadric 49*x1^2 + x2^2 - 36*x3^2 - 14*x0^2
//! Lp  = x0
//! Lpp = x1
//! Fp  = x2
//! Fpp = x3
//! R   = -14*x0^2 - x0*x1 + 49*x1^2 + x2^2 - 36*x3^2
//! ```

use crate::poly::{parse, Poly, Ring, RingRef};

use super::{DivisibleFamily, GeometryError};

pub const MANIFEST_KEYS: [&str; 5] = ["Lp", "Lpp", "Fp", "Fpp", "R"];

/// The five parsed forms in `MANIFEST_KEYS` order.
#[derive(Clone, Debug, PartialEq)]
pub struct Manifest {
    pub forms: [Poly; 5],
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self, GeometryError> {
        Self::parse_in(&Ring::projective3(), text)
    }

    pub fn parse_in(ring: &RingRef, text: &str) -> Result<Self, GeometryError> {
        let mut slots: [Option<Poly>; 5] = Default::default();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: String| GeometryError::Manifest { line, msg };
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err("expected `key = polynomial`".into()))?;
            let key = key.trim();
            let idx = MANIFEST_KEYS
                .iter()
                .position(|k| *k == key)
                .ok_or_else(|| err(format!("unknown key `{key}`")))?;
            if slots[idx].is_some() {
                return Err(err(format!("duplicate key `{key}`")));
            }
            let poly = parse(ring, value.trim()).map_err(|e| err(e.to_string()))?;
            slots[idx] = Some(poly);
        }
        let missing: Vec<&str> = MANIFEST_KEYS
            .iter()
            .zip(&slots)
            .filter(|(_, s)| s.is_none())
            .map(|(k, _)| *k)
            .collect();
        if !missing.is_empty() {
            return Err(GeometryError::Manifest {
                line: 0,
                msg: format!("missing keys: {}", missing.join(", ")),
            });
        }
        let [a, b, c, d, e] = slots.map(|s| s.expect("checked"));
        Ok(Manifest { forms: [a, b, c, d, e] })
    }

    pub fn into_family(self) -> Result<DivisibleFamily, GeometryError> {
        let [lp, lpp, fp, fpp, r] = self.forms;
        DivisibleFamily::new(lp, lpp, fp, fpp, r)
    }

    /// Echo of the inputs as `(key, polynomial)` pairs.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        MANIFEST_KEYS
            .iter()
            .copied()
            .zip(self.forms.iter().map(|f| f.to_string()))
            .collect()
    }
}

pub fn format_manifest(family: &DivisibleFamily) -> String {
    let forms = [family.lp(), family.lpp(), family.fp(), family.fpp(), family.r()];
    MANIFEST_KEYS
        .iter()
        .zip(forms)
        .map(|(k, f)| format!("{k:<3} = {f}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# comment\nLp = x0\nLpp = x1\nFp = x2  # trailing\nFpp = x3\nR = x3^2 - x2^2 - x0*x1\n";
        let fam = Manifest::parse(text).unwrap().into_family().unwrap();
        let again = Manifest::parse(&format_manifest(&fam)).unwrap().into_family().unwrap();
        assert_eq!(fam.y4(), again.y4());
    }

    #[test]
    fn errors_carry_lines() {
        let e = Manifest::parse("Lp = x0\nQ = x1\n").unwrap_err();
        assert!(matches!(e, GeometryError::Manifest { line: 2, .. }));
        let e = Manifest::parse("Lp = x0\nLpp = x1 +\n").unwrap_err();
        assert!(matches!(e, GeometryError::Manifest { line: 2, .. }));
        let e = Manifest::parse("Lp = x0\n").unwrap_err();
        assert!(matches!(e, GeometryError::Manifest { line: 0, .. }));
        let e = Manifest::parse("Lp = x0\nLpp = x0\nFp = x2\nFpp = x3\nR = x0^2\n")
            .unwrap()
            .into_family();
        assert_eq!(e.unwrap_err(), GeometryError::DependentForms);
    }
}
