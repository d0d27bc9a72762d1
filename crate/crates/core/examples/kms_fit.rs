//! Power-law fit of the Fock log trace at small `s` and the resulting KMS verdict.

use conformal_nuclearity::branching::free_field_spectrum;
use conformal_nuclearity::characters::{log_ellipticity_fit, log_grid, MultiplicitySpectrum};

fn main() -> conformal_nuclearity::Result<()> {
    let grid = log_grid(1e-3, 1e-2, 10);
    let spectra = [
        ("free field d = 1", free_field_spectrum(1)?),
        ("free field d = 3", free_field_spectrum(3)?),
        ("free field d = 5", free_field_spectrum(5)?),
        ("single weight 2", MultiplicitySpectrum::single(2.0)),
    ];
    for (name, spec) in &spectra {
        let fit = log_ellipticity_fit(spec, &grid)?;
        println!(
            "{name}: alpha = {:.4}, residual {:.1e}; {}",
            fit.alpha, fit.residual, fit.verdict
        );
    }
    Ok(())
}
