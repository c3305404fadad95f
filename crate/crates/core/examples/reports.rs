//! Running a full verification pipeline programmatically and emitting the
//! same JSON report as the command-line tool.
use cuspkit::geometry::catalog::TWISTED_CUBIC_MANIFEST;
use cuspkit::pipeline::{construct, verify_example, Options};
use cuspkit::report::Status;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = Options::default();
    let report = construct(TWISTED_CUBIC_MANIFEST, false, &opts)?;
    println!("{}", report.to_json());

    let full = verify_example("ex62", None, &opts)?;
    let failed: Vec<_> = full.results.iter().filter(|e| e.status == Status::Fail).collect();
    println!(
        "ex62: verified = {}, {} checks, {} failed",
        full.verified,
        full.results.len(),
        failed.len()
    );
    Ok(())
}
