//! `e^{-2sL0}` against its three-factor form on truncated lowest-weight
//! modules, plus the Golden-Thompson slack of the same instances.

use conformal_nuclearity::rep::{verify_t2_equals_t1, TruncationGrid, DEFAULT_IDENTITY_TOLERANCE};
use conformal_nuclearity::report::to_json_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = TruncationGrid::new(vec![50, 100, 200], 10, DEFAULT_IDENTITY_TOLERANCE)?;
    for alpha in [1.0, 2.5] {
        for s in [0.5, 1.0, 2.0] {
            let r = verify_t2_equals_t1(alpha, s, &grid)?;
            println!(
                "alpha = {alpha}, s = {s}: residuals {:?} -> {}",
                r.residuals,
                if r.passed() { "pass" } else { "fail" }
            );
        }
    }
    print!(
        "{}",
        to_json_string(&verify_t2_equals_t1(1.0, 1.0, &grid)?)?
    );
    Ok(())
}
