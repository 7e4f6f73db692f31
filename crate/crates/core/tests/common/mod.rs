//! Independent brute-force oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use asymhg::{Hypergraph, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn edge_set(h: &Hypergraph) -> BTreeSet<Vec<usize>> {
    h.edges().iter().cloned().collect()
}

/// Depth-first assignment of images `0, 1, ...`; an edge is checked once its
/// largest member is assigned. Stops early when `visit` returns true.
fn for_each_automorphism(h: &Hypergraph, mut visit: impl FnMut(&[usize]) -> bool) {
    let n = h.n();
    let edges = edge_set(h);
    let mut closing: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); n];
    for e in &edges {
        closing[*e.last().unwrap()].push(e);
    }
    fn go(
        i: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        edges: &BTreeSet<Vec<usize>>,
        closing: &[Vec<&Vec<usize>>],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == img.len() {
            return visit(img);
        }
        for x in 0..img.len() {
            if used[x] {
                continue;
            }
            img[i] = x;
            let ok = closing[i].iter().all(|e| {
                let mut m: Vec<usize> = e.iter().map(|&v| img[v]).collect();
                m.sort_unstable();
                edges.contains(&m)
            });
            if ok {
                used[x] = true;
                let stop = go(i + 1, img, used, edges, closing, visit);
                used[x] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    go(0, &mut vec![0; n], &mut vec![false; n], &edges, &closing, &mut visit);
}

/// Every automorphism of `h` by exhaustive search.
pub fn brute_force_automorphisms(h: &Hypergraph) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_automorphism(h, |p| {
        out.push(Permutation::new(p.to_vec()).unwrap());
        false
    });
    out.sort_by(|a, b| a.image().cmp(b.image()));
    out
}

pub fn brute_force_symmetric(h: &Hypergraph) -> bool {
    let mut found = false;
    for_each_automorphism(h, |p| {
        found = p.iter().enumerate().any(|(i, &x)| i != x);
        found
    });
    found
}

/// Random `k`-uniform hypergraph on `n` vertices with about `m` distinct edges.
pub fn random_hypergraph(rng: &mut impl Rng, n: usize, k: usize, m: usize) -> Hypergraph {
    let mut edges = BTreeSet::new();
    for _ in 0..m {
        let mut e = rand::seq::index::sample(rng, n, k).into_vec();
        e.sort_unstable();
        edges.insert(e);
    }
    Hypergraph::build(k, labels(n), edges.into_iter().collect()).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Edge sets (as bitmasks) of every Berge path from `u` to `v`.
fn all_berge_paths(h: &Hypergraph, u: usize, v: usize) -> Vec<u32> {
    fn walk(h: &Hypergraph, at: usize, v: usize, seen: &mut Vec<bool>, used: u32, out: &mut Vec<u32>) {
        if at == v {
            out.push(used);
            return;
        }
        for &e in h.incident(at) {
            if used & (1 << e) != 0 {
                continue;
            }
            for &next in h.edge(e) {
                if !seen[next] {
                    seen[next] = true;
                    walk(h, next, v, seen, used | (1 << e), out);
                    seen[next] = false;
                }
            }
        }
    }
    let mut seen = vec![false; h.n()];
    seen[u] = true;
    let mut out = Vec::new();
    walk(h, u, v, &mut seen, 0, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// Largest number of pairwise edge-disjoint Berge paths, by exhaustive packing.
pub fn brute_force_path_count(h: &Hypergraph, u: usize, v: usize) -> usize {
    assert!(h.m() <= 32);
    fn pack(paths: &[u32], used: u32) -> usize {
        let mut best = 0;
        for (i, &p) in paths.iter().enumerate() {
            if p & used == 0 {
                best = best.max(1 + pack(&paths[i + 1..], used | p));
            }
        }
        best
    }
    pack(&all_berge_paths(h, u, v), 0)
}

/// Whether some induced sub-hypergraph on `2 <= |W| < n` vertices is asymmetric.
pub fn brute_force_has_asymmetric_subset(h: &Hypergraph) -> bool {
    let n = h.n();
    (1u32..(1 << n) - 1).any(|mask| {
        let w: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        w.len() >= 2 && !brute_force_symmetric(&h.induced(&w).unwrap())
    })
}

/// Tree with legs of the given lengths hanging off vertex 0.
pub fn spider(legs: &[usize]) -> Hypergraph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push(vec![prev, next]);
            prev = next;
            next += 1;
        }
    }
    Hypergraph::build(2, labels(next), edges).unwrap()
}

pub fn vid(h: &Hypergraph, label: &str) -> usize {
    h.vertex_by_label(label).unwrap_or_else(|| panic!("no vertex {label}"))
}

pub fn eid(h: &Hypergraph, name: &str) -> usize {
    h.edge_by_name(name).unwrap_or_else(|| panic!("no edge {name}"))
}

/// The reflection of `G_{5,t}` fixing `E_1`: `u_i -> u_{2-i}`, `v_i -> v_{3-i}`,
/// `w_{i,j} -> w_{2-i,3-j}`, indices modulo `5t`.
pub fn e1_fixing_reflection(g: &Hypergraph, t: usize) -> Permutation {
    let len = 5 * t as i64;
    let norm = |i: i64| (i - 1).rem_euclid(len) + 1;
    let image = g
        .labels()
        .iter()
        .map(|l| {
            let parts: Vec<&str> = l.split('_').collect();
            let i: i64 = parts[1].parse().unwrap();
            let target = match parts[0] {
                "u" => format!("u_{}", norm(2 - i)),
                "v" => format!("v_{}", norm(3 - i)),
                "w" => {
                    let j: i64 = parts[2].parse().unwrap();
                    format!("w_{}_{}", norm(2 - i), 3 - j)
                }
                other => panic!("unexpected label {other}"),
            };
            vid(g, &target)
        })
        .collect();
    Permutation::new(image).unwrap()
}
