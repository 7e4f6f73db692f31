//! Checks the large constructions for asymmetry and shows how much search it took.

use std::time::Instant;

use asymhg::{aut, constructions};

fn main() -> asymhg::Result<()> {
    let cases = [
        ("H(2,3,4)", constructions::gen_H(4, &[2, 3, 4])?),
        ("H3(2,3)", constructions::gen_H3(2, 3)?),
        ("H5(2,3)", constructions::gen_H5(2, 3)?),
        ("H(2,3) k=3", constructions::gen_H(3, &[2, 3])?),
    ];
    for (name, h) in &cases {
        let start = Instant::now();
        let report = aut::symmetry_report(h)?;
        println!(
            "{name:12} n={:3} m={:3} asymmetric={} nodes={} in {:.2?}",
            h.n(),
            h.m(),
            report.asymmetric,
            report.nodes_explored,
            start.elapsed()
        );
        if let Some(w) = &report.witness {
            let moved: Vec<Vec<&str>> =
                w.cycles().into_iter().map(|c| c.into_iter().map(|v| h.label(v)).collect()).collect();
            println!("  witness cycles: {moved:?}");
        }
    }
    Ok(())
}
