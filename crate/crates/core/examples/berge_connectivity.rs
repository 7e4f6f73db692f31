//! Edge-disjoint Berge paths: inside a component and across copies.

use asymhg::connectivity::max_edge_disjoint_paths;
use asymhg::constructions;

fn describe(h: &asymhg::Hypergraph, from: &str, to: &str) -> asymhg::Result<()> {
    let (u, v) = (h.vertex_by_label(from).unwrap(), h.vertex_by_label(to).unwrap());
    let family = max_edge_disjoint_paths(h, u, v)?;
    println!("{from} -> {to}: {} edge-disjoint paths", family.count);
    for p in &family.paths {
        let mut parts = vec![h.label(p.vertices[0]).to_string()];
        for (e, &x) in p.edges.iter().zip(&p.vertices[1..]) {
            parts.push(h.edge_name(*e).unwrap_or("?").to_string());
            parts.push(h.label(x).to_string());
        }
        println!("    {}", parts.join(" "));
    }
    Ok(())
}

fn main() -> asymhg::Result<()> {
    let g = constructions::gen_G(3, 2)?;
    describe(&g, "v_1", "v_2")?;
    let h = constructions::gen_H(4, &[2, 3, 4])?;
    describe(&h, "u1_1", "u2_1")?;
    describe(&h, "v2_1", "w2_3_1")?;
    Ok(())
}
