//! Generates each construction family and prints its structural summary.

use asymhg::constructions::{generate, ConstructionParams};

fn main() -> asymhg::Result<()> {
    let families = [
        ConstructionParams::G { k: 4, t: 2 },
        ConstructionParams::G { k: 6, t: 3 },
        ConstructionParams::H { k: 4, ts: vec![2, 3, 4] },
        ConstructionParams::H { k: 3, ts: vec![2, 3] },
        ConstructionParams::H3 { t: 2, t_prime: 3 },
        ConstructionParams::H5 { t: 2, t_prime: 3 },
        ConstructionParams::Frucht,
        ConstructionParams::RandomRegular { n: 16, r: 3, seed: 1 },
        ConstructionParams::Dual { r: 4, n: Some(12), seed: 5 },
    ];
    for params in &families {
        let g = generate(params)?;
        let h = &g.graph;
        println!(
            "{:<55} k={} n={:3} m={:3} max_degree={} max_codegree={} {}",
            serde_json::to_string(params).unwrap(),
            h.k(),
            h.n(),
            h.m(),
            h.max_degree(),
            h.max_codegree()?,
            g.warnings.join("; ")
        );
    }
    Ok(())
}
