//! Trace norm of the truncated `e^{-tH} e^{-2tH'} e^{-tH}` against the character.

use conformal_nuclearity::rep::nuclear_norm_of_t;

fn main() -> conformal_nuclearity::Result<()> {
    // t = sinh(s/2) puts the operator at inner distance s
    for alpha in [1.0, 2.0] {
        for n in [100, 200, 400] {
            let nn = nuclear_norm_of_t(alpha, 0.5f64.sinh(), n)?;
            println!(
                "alpha = {alpha}, N = {n:>3}: |T|_1 = {:.12}, character = {:.12}, rel err {:.1e}, dropped {}",
                nn.value, nn.target, nn.relative_error, nn.dropped_count
            );
        }
    }
    Ok(())
}
