//! Operator inequalities on growing truncations; margins are the smallest
//! eigenvalue of the difference on the leading block.

use conformal_nuclearity::rep::{verify_operator_inequality, Inequality, TruncationGrid};

fn main() -> conformal_nuclearity::Result<()> {
    let grid = TruncationGrid::new(vec![50, 100, 200], 10, 1e-10)?;
    let cases = [
        (Inequality::M2, 0.5),
        (Inequality::M2, 2.0),
        (Inequality::KoBound, 0.0),
        (Inequality::KdcVector, 0.125),
        (Inequality::KdcVector, 0.2),
    ];
    for (which, param) in cases {
        let r = verify_operator_inequality(1.0, param, &grid, which)?;
        println!(
            "{:>3}({param}): margins {} -> {}",
            which.name(),
            r.diagnostics["margins"],
            if r.passed() { "pass" } else { "fail" }
        );
    }
    Ok(())
}
