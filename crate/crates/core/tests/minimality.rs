mod common;

use asymhg::aut;
use asymhg::constructions::{gen_H, gen_H3};
use asymhg::minimality::{check_minimal, deletion_witness_table, Mode, ScanOptions};
use asymhg::{Error, Hypergraph};
use common::*;

#[test]
fn exhaustive_agrees_with_brute_force_on_trees_and_random_graphs() {
    let mut fixtures = vec![spider(&[1, 2, 3]), spider(&[1, 2, 4]), spider(&[2, 2, 3]), spider(&[1, 1, 2])];
    let mut rng = seeded(3);
    for i in 0..12 {
        fixtures.push(random_hypergraph(&mut rng, 5 + i % 3, 2 + i % 2, 4 + i % 5));
    }
    for h in fixtures {
        let r = check_minimal(&h, &ScanOptions::new(Mode::Exhaustive)).unwrap();
        assert_eq!(r.asymmetric_root, !brute_force_symmetric(&h));
        assert_eq!(!r.all_symmetric, brute_force_has_asymmetric_subset(&h), "{h:?}");
        if let Some(c) = &r.counterexample {
            assert!((2..h.n()).contains(&c.subset.len()));
            assert!(!brute_force_symmetric(&h.induced(&c.subset).unwrap()));
        }
        let d = check_minimal(&h, &ScanOptions::new(Mode::Deletion1)).unwrap();
        if r.all_symmetric {
            assert!(d.all_symmetric);
        }
    }
}

#[test]
fn single_edge_plus_isolated_vertex() {
    let h = Hypergraph::build(3, labels(4), vec![vec![0, 1, 2]]).unwrap();
    let r = check_minimal(&h, &ScanOptions::new(Mode::Exhaustive)).unwrap();
    assert!(!r.asymmetric_root);
    assert!(!r.passed());
}

#[test]
fn sample_scan_is_reproducible() {
    let h = gen_H3(2, 3).unwrap();
    let a = check_minimal(&h, &ScanOptions::sampled(100, 7)).unwrap();
    let b = check_minimal(&h, &ScanOptions::sampled(100, 7)).unwrap();
    assert_eq!(a, b);
    assert!(a.passed());
    assert_eq!(a.subsets_checked, 100 + h.n());
    assert_eq!((a.seed, a.samples), (Some(7), Some(100)));
}

#[test]
fn exhaustive_refuses_large_inputs() {
    let h = gen_H3(2, 3).unwrap();
    assert_eq!(
        check_minimal(&h, &ScanOptions::new(Mode::Exhaustive)),
        Err(Error::SizeLimitExceeded { n: 33, limit: 20 })
    );
}

#[test]
fn deletion_witnesses_on_h() {
    let h = gen_H(4, &[2, 3, 4]).unwrap();
    let table = deletion_witness_table(&h).unwrap();
    assert_eq!(table.len(), h.n());
    for row in &table {
        let keep: Vec<usize> = (0..h.n()).filter(|&v| v != row.deleted).collect();
        let sub = h.induced(&keep).unwrap();
        assert!(sub.is_automorphism(&row.witness).unwrap());
        assert!(!row.witness.is_identity());
    }
    // Deleting a w-vertex of the first copy leaves E_0 fixed.
    let row = table.iter().find(|r| r.deleted_label == "w1_1_1").unwrap();
    let keep: Vec<usize> = (0..h.n()).filter(|&v| v != row.deleted).collect();
    let sub = h.induced(&keep).unwrap();
    let e0 = eid(&sub, "E_0");
    let mut img = sub.edge_image(e0, &row.witness);
    img.sort_unstable();
    assert_eq!(img, sub.edge(e0));
}

#[test]
fn deleting_y_from_h3_leaves_a_symmetry() {
    let h = gen_H3(2, 3).unwrap();
    let keep: Vec<usize> = (0..h.n()).filter(|&v| h.label(v) != "y").collect();
    let sub = h.induced(&keep).unwrap();
    let p = aut::find_nontrivial_automorphism(&sub).unwrap().unwrap();
    assert!(sub.is_automorphism(&p).unwrap());
}

#[test]
fn scans_do_not_depend_on_worker_count() {
    let h = spider(&[1, 2, 4]);
    let opts = ScanOptions::new(Mode::Exhaustive);
    let one = asymhg::with_jobs(1, || check_minimal(&h, &opts).unwrap());
    let many = asymhg::with_jobs(8, || check_minimal(&h, &opts).unwrap());
    assert_eq!(one, many);
    let d2 = check_minimal(&gen_H3(2, 3).unwrap(), &ScanOptions::new(Mode::Deletion2)).unwrap();
    assert_eq!(d2.mode, Mode::Deletion2);
}
