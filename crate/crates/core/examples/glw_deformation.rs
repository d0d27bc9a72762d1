//! Deforming the weight-1 module into weight alpha: the compressed spectrum
//! approaches `alpha, alpha + 1, ...`.

use conformal_nuclearity::rep::glw_spectrum;

fn main() -> conformal_nuclearity::Result<()> {
    for alpha in [1.5, 2.0, 2.5, 4.0] {
        for n in [200, 400, 800] {
            let spec = glw_spectrum(alpha, n, 5)?;
            let eigs: Vec<String> = spec.eigenvalues.iter().map(|e| format!("{e:.8}")).collect();
            println!(
                "alpha = {alpha}, N = {n}: [{}], max deviation {:.1e}",
                eigs.join(", "),
                spec.max_deviation
            );
        }
    }
    Ok(())
}
