//! Looks for non-identity automorphisms fixing the spine edge E_1.
//! Only k = 5 has one among the components tried.

use asymhg::{aut, constructions};

fn main() -> asymhg::Result<()> {
    for k in 4..=7 {
        let g = constructions::gen_G(k, 2)?;
        let e1 = g.edge_by_name("E_1").expect("named edge");
        match aut::edge_stabilizer_nontrivial(&g, e1)? {
            None => println!("k={k}: only the identity fixes E_1"),
            Some(p) => {
                let action = aut::classify_l_edge_action(&g, &p)?;
                println!("k={k}: {:?} with j={} fixes E_1", action.kind, action.j);
                for cycle in p.cycles().iter().take(6) {
                    let names: Vec<&str> = cycle.iter().map(|&v| g.label(v)).collect();
                    println!("    ({})", names.join(" "));
                }
            }
        }
    }
    Ok(())
}
