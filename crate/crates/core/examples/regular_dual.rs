//! Regular asymmetric graphs and their hypergraph duals, including lifting a
//! dual automorphism back to the graph.

use asymhg::{aut, constructions};

fn main() -> asymhg::Result<()> {
    let f = constructions::frucht();
    let d = constructions::dual(&f)?;
    println!("dual(frucht): k={} n={} m={} asymmetric={}", d.k(), d.n(), d.m(), aut::is_asymmetric(&d)?);

    for (n, r, seed) in [(14, 4, 1), (16, 3, 2), (18, 4, 3)] {
        let g = constructions::asymmetric_regular(n, r, seed, constructions::ASYMMETRY_ATTEMPTS)?;
        let d = constructions::dual(&g)?;
        println!("asymmetric {r}-regular on {n}: dual is {}-uniform with {} vertices, asymmetric={}", d.k(), d.n(), aut::is_asymmetric(&d)?);
    }

    let cube = constructions::random_regular(8, 3, 0)?;
    let d = constructions::dual(&cube)?;
    if let Some(p) = aut::find_nontrivial_automorphism(&d)? {
        let phi = constructions::lift_dual_automorphism(&cube, &p)?;
        println!("lifted dual symmetry is a graph automorphism: {}", cube.is_automorphism(&phi)?);
    }
    Ok(())
}
