//! The [8, 2, {6}] ternary code, its weights, supports and the Griesmer bound.
use cuspkit::codes::{eight_cusp_code, griesmer_holds, griesmer_sum, F3Vector, TernaryCode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = eight_cusp_code();
    println!(
        "dimension {}, weights {:?}",
        code.dimension(),
        code.weight_distribution()
    );
    for w in code.codewords() {
        println!("  {w}  support {:?}", w.support());
    }
    for d in [2, 3] {
        println!(
            "Griesmer [8,{d},6]: sum {} -> {}",
            griesmer_sum(d, 6),
            griesmer_holds(8, d, 6)
        );
    }

    let c = TernaryCode::from_words(vec![F3Vector::parse("110")?, F3Vector::parse("0 1 -1")?])?;
    println!("[3,{}] code with weights {:?}", c.dimension(), c.weight_distribution());
    Ok(())
}
