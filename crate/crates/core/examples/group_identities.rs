//! The 2x2 identities behind the operator factorizations.

use conformal_nuclearity::sl2::{
    verify_bch_identity, verify_euclidean_factorization, verify_half_turn,
    verify_rotation_factorization,
};

fn main() -> conformal_nuclearity::Result<()> {
    for (s, t) in [(0.3, 0.1), (1.0, -0.5), (2.0, 2.0)] {
        let r = verify_bch_identity(s, t);
        println!(
            "bch       s = {s:>4}, t = {t:>4}: residual {:.2e}",
            r.final_residual()
        );
    }
    for s in [0.5, 2.0, 3.0] {
        let r = verify_rotation_factorization(s)?;
        println!("rotation  s = {s:>4}: residual {:.2e}", r.final_residual());
    }
    match verify_rotation_factorization(std::f64::consts::PI) {
        Err(e) => println!("rotation  s = pi: {e}"),
        Ok(_) => unreachable!("tan(pi/2) has a pole"),
    }
    println!(
        "half turn: residual {:.2e}",
        verify_half_turn().final_residual()
    );
    for s in [0.5, 1.0, 4.0] {
        let r = verify_euclidean_factorization(s);
        println!("euclidean s = {s:>4}: residual {:.2e}", r.final_residual());
    }
    Ok(())
}
