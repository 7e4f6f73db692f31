//! Minimality scans: exhaustive on a small tree, deletion and sampling on the
//! constructions, plus the single-deletion witness table.

use asymhg::constructions;
use asymhg::minimality::{check_minimal, deletion_witness_table, Mode, ScanOptions};
use asymhg::Hypergraph;

fn main() -> asymhg::Result<()> {
    let labels = (0..7).map(|i| i.to_string()).collect();
    let tree = Hypergraph::build(
        2,
        labels,
        vec![vec![0, 1], vec![0, 2], vec![2, 3], vec![0, 4], vec![4, 5], vec![5, 6]],
    )?;
    let r = check_minimal(&tree, &ScanOptions::new(Mode::Exhaustive))?;
    println!("7-vertex tree: certified minimal = {} after {} subsets", r.certified(), r.subsets_checked);

    let h3 = constructions::gen_H3(2, 3)?;
    for opts in [ScanOptions::new(Mode::Deletion1), ScanOptions::sampled(500, 7)] {
        let r = check_minimal(&h3, &opts)?;
        println!("H3(2,3) {:?}: passed = {} ({} subsets)", r.mode, r.passed(), r.subsets_checked);
    }

    let h = constructions::gen_H(4, &[2, 3, 4])?;
    for row in deletion_witness_table(&h)?.iter().filter(|r| ["u1_1", "v1_1"].contains(&r.deleted_label.as_str())) {
        println!("delete {:6} -> {:?}", row.deleted_label, &row.cycles[..row.cycles.len().min(3)]);
    }
    Ok(())
}
