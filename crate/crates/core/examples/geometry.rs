//! Inner distances of a few inclusions, and the decomposition into translations.

use conformal_nuclearity::geometry::{
    inner_distance, symmetric_subinterval, translation_decomposition, InnerDistances, Interval,
};

fn main() -> conformal_nuclearity::Result<()> {
    let cases = [
        ((-2.0, 2.0), (-1.0, 1.0)),
        ((0.0, f64::INFINITY), (1.0, 3.0)),
        ((-1.0, 5.0), (0.5, 0.75)),
    ];
    for ((a, b), (c, d)) in cases {
        let outer = Interval::from_line(a, b)?;
        let inner = Interval::from_line(c, d)?;
        let dist = InnerDistances::of(&outer, &inner)?;
        let (ta, tap) = translation_decomposition(&outer, &inner)?;
        println!(
            "{inner} in {outer}: ell = {:.6}, ell' = {:.6} (sinh(ell/2) = {:.6}), a = {ta:.6}, a' = {tap:.6}",
            dist.ell,
            dist.ell_prime,
            (dist.ell / 2.0).sinh()
        );
    }

    // the interval at inner distance s inside the upper half line
    for s in [0.5, 1.0, 2.0] {
        let sub = symmetric_subinterval(s)?;
        let ell = inner_distance(&Interval::upper_half(), &sub.interval)?;
        println!("s = {s}: {} recovers ell = {ell:.12}", sub.interval);
    }
    Ok(())
}
