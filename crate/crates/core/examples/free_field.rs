//! Free scalar field in odd dimensions: branching multiplicities, the
//! one-particle partition function and double-cone norms.

use conformal_nuclearity::branching::{
    branching_table, free_field_partition, l2_nuclearity_double_cone,
};

fn main() -> conformal_nuclearity::Result<()> {
    for d in [1, 3, 5, 7] {
        let row: Vec<String> = branching_table(d, 8)?
            .iter()
            .map(|r| r.multiplicity.to_string())
            .collect();
        println!("d = {d}: N_d = {}", row.join(" "));
    }
    for s in [0.05, 0.5, 1.0, 5.0] {
        let p = free_field_partition(3, s)?;
        println!(
            "d = 3, s = {s}: series {:.15e} (+{} terms), closed form {:.15e}, 2/s^3 = {:.6e}",
            p.series.value,
            p.series.terms,
            p.closed_form,
            2.0 / s.powi(3)
        );
    }
    for r in [1.01, 1.1, 2.0] {
        let n = l2_nuclearity_double_cone(r, 3)?;
        println!(
            "r = {r}: one-particle {:.6e} vs {:.6e}, Fock log {:.6e} vs {:.6e}",
            n.one_particle_trace,
            n.one_particle_asymptotic,
            n.fock_log_trace,
            n.fock_log_asymptotic
        );
    }
    Ok(())
}
