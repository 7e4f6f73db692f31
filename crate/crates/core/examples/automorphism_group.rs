//! Enumerates the automorphism groups of the components and classifies how
//! each element acts on the spine edges.

use std::collections::BTreeMap;

use asymhg::{aut, constructions};

fn main() -> asymhg::Result<()> {
    for k in 3..=6 {
        for t in 2..=3 {
            let g = constructions::gen_G(k, t)?;
            let report = aut::automorphism_group(&g, 5000)?;
            let elems = aut::group_elements(g.n(), &report.generators, 5000).expect("small group");
            let mut actions: BTreeMap<String, usize> = BTreeMap::new();
            for p in &elems {
                let a = aut::classify_l_edge_action(&g, p)?;
                *actions.entry(format!("{:?} j={}", a.kind, a.j)).or_default() += 1;
            }
            let repeated = actions.values().filter(|&&c| c > 1).count();
            println!(
                "G_{{{k},{t}}}: order {:?}, {} generators, {} distinct spine actions, {} shared by several elements",
                report.group_order,
                report.generators.len(),
                actions.len(),
                repeated
            );
        }
    }
    Ok(())
}
