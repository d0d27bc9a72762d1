//! Characters of a small spectrum, the nuclearity chain for a concentric
//! inclusion and the distal split threshold.

use conformal_nuclearity::characters::{
    bw_asymptotic_bound, bw_nuclearity_bound, character, split_distance, MultiplicitySpectrum,
};
use conformal_nuclearity::geometry::Interval;
use conformal_nuclearity::report::to_json_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = MultiplicitySpectrum::from_pairs(&[(0.5, 1), (2.0, 3), (3.5, 2)]);
    for s in [0.1, 0.5, 1.0, 4.0] {
        println!("Tr e^(-{s} L0) = {:.10}", character(&spec, s)?);
    }

    let outer = Interval::from_line(-2.0, 2.0)?;
    let inner = Interval::from_line(-1.0, 1.0)?;
    let mut chain = bw_nuclearity_bound(&spec, &outer, &inner, 0.1)?;
    chain.asymptotic = Some(bw_asymptotic_bound(&spec, &outer, &inner, 0.05)?);
    print!("{}", to_json_string(&chain)?);

    let split = split_distance(&spec, 1.0)?;
    println!(
        "split once ell > {} (norm {:.6})",
        split.threshold, split.norm
    );
    Ok(())
}
