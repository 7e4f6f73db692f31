mod common;

use asymhg::aut::{self, ActionKind, OrderedPartition};
use asymhg::constructions::{frucht, g_rotation, gen_G, gen_H, gen_H3, gen_H5};
use asymhg::Permutation;
use common::*;

#[test]
fn random_small_hypergraphs_match_exhaustive_search() {
    let mut rng = seeded(11);
    for case in 0..150 {
        let n = 2 + case % 7;
        let k = 2 + case % 3;
        if k > n {
            continue;
        }
        let m = case % 9;
        let h = random_hypergraph(&mut rng, n, k, m);
        let found = aut::find_nontrivial_automorphism(&h).unwrap();
        assert_eq!(found.is_some(), brute_force_symmetric(&h), "{h:?}");
        if let Some(p) = found {
            assert!(h.is_automorphism(&p).unwrap() && !p.is_identity());
        }
        let group = aut::automorphism_group(&h, 50_000).unwrap();
        assert_eq!(group.group_order, Some(brute_force_automorphisms(&h).len() as u64));
    }
}

#[test]
fn g32_group_matches_brute_force() {
    let g = gen_G(3, 2).unwrap();
    let all = brute_force_automorphisms(&g);
    assert_eq!(all.len(), 12);
    let report = aut::automorphism_group(&g, 100).unwrap();
    assert_eq!(report.group_order, Some(12));
    let elems = aut::group_elements(g.n(), &report.generators, 100).unwrap();
    assert_eq!(elems, all);
}

#[test]
fn rigid_instances_have_trivial_group() {
    for h in [gen_H3(2, 3).unwrap(), frucht(), gen_H(4, &[2, 3, 4]).unwrap(), gen_H5(2, 3).unwrap()] {
        let r = aut::automorphism_group(&h, 100).unwrap();
        assert_eq!(r.group_order, Some(1));
        assert!(r.asymmetric && r.witness.is_none() && r.generators.is_empty());
    }
}

#[test]
fn rotation_witness_on_g42() {
    let g = gen_G(4, 2).unwrap();
    let p = aut::find_nontrivial_automorphism(&g).unwrap().unwrap();
    assert!(g.is_automorphism(&p).unwrap());
    let rot = g_rotation(4, 2, 4).unwrap();
    assert!(g.is_automorphism(&rot).unwrap());
    let action = aut::classify_l_edge_action(&g, &rot).unwrap();
    assert_eq!((action.kind, action.j), (ActionKind::Rotation, 5));
}

#[test]
fn identity_classifies_as_trivial_rotation() {
    let g = gen_G(3, 2).unwrap();
    let a = aut::classify_l_edge_action(&g, &Permutation::identity(g.n())).unwrap();
    assert_eq!((a.kind, a.j), (ActionKind::Rotation, 1));
}

#[test]
fn e1_fixing_reflection_of_g52() {
    let g = gen_G(5, 2).unwrap();
    let p = e1_fixing_reflection(&g, 2);
    assert!(g.is_automorphism(&p).unwrap());
    let a = aut::classify_l_edge_action(&g, &p).unwrap();
    // E_i -> E_{2-i}, so E_1 is fixed.
    assert_eq!((a.kind, a.j), (ActionKind::Reflection, 1));
    let found = aut::edge_stabilizer_nontrivial(&g, eid(&g, "E_1")).unwrap().unwrap();
    let mut img = g.edge_image(eid(&g, "E_1"), &found);
    img.sort_unstable();
    assert_eq!(img, g.edge(eid(&g, "E_1")));
    assert_eq!(found, p);
}

#[test]
fn stabilizer_trivial_away_from_k5() {
    for k in [4, 6, 7] {
        let g = gen_G(k, 2).unwrap();
        assert_eq!(aut::edge_stabilizer_nontrivial(&g, eid(&g, "E_1")).unwrap(), None, "k={k}");
    }
}

#[test]
fn stabilizer_agrees_with_brute_force_on_g32() {
    let g = gen_G(3, 2).unwrap();
    let e = eid(&g, "E_1");
    let fixing: Vec<_> = brute_force_automorphisms(&g)
        .into_iter()
        .filter(|p| {
            let mut img = g.edge_image(e, p);
            img.sort_unstable();
            img == g.edge(e)
        })
        .collect();
    let report = aut::edge_stabilizer_group(&g, e, 100).unwrap();
    assert_eq!(report.group_order, Some(fixing.len() as u64));
}

#[test]
fn x0_is_isolated_by_refinement() {
    let h = gen_H(4, &[2, 3, 4]).unwrap();
    let p = aut::refine(&h, &OrderedPartition::unit(h.n()));
    let x0 = vid(&h, "x0");
    assert_eq!(p.cells()[p.cell_of(x0)], vec![x0]);
}

#[test]
fn refinement_splits_degrees_on_g32() {
    let g = gen_G(3, 2).unwrap();
    let p = aut::refine(&g, &OrderedPartition::unit(g.n()));
    let (u1, v1) = (vid(&g, "u_1"), vid(&g, "v_1"));
    assert_ne!(p.cell_of(u1), p.cell_of(v1));
    for i in 2..=6 {
        assert_eq!(p.cell_of(vid(&g, &format!("u_{i}"))), p.cell_of(u1));
        assert_eq!(p.cell_of(vid(&g, &format!("v_{i}"))), p.cell_of(v1));
    }
}

#[test]
fn reports_are_deterministic_across_pools() {
    let g = gen_G(5, 3).unwrap();
    let one = asymhg::with_jobs(1, || aut::automorphism_group(&g, 500).unwrap());
    let many = asymhg::with_jobs(8, || aut::automorphism_group(&g, 500).unwrap());
    assert_eq!(one, many);
}
