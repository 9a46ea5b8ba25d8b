//! Worked examples for every public operation, checked against the
//! independent Floyd–Warshall oracle where the value is computed rather than
//! quoted.

mod common;

use std::collections::BTreeSet;

use common::{brute_db, brute_sdb, cell, floyd_warshall};
use distbal::families::{folkman_qr, folkman_qr_spec, generalized_folkman, residue_set, TetraVertex};
use distbal::partition::{
    balance_triple, distance_partition, is_distance_balanced, is_distance_degree_regular,
    is_sdb_via_spheres, is_strongly_distance_balanced, EdgeMetrics,
};
use distbal::{Graph, GpSpec};

fn gp(n: usize, k: usize) -> Graph {
    GpSpec::new(n, k).unwrap().build()
}

#[test]
fn folkman_is_four_regular_with_diameter_four() {
    let g = folkman_qr(5).unwrap();
    assert_eq!(g.vertex_count(), 20);
    assert_eq!(g.regular_degree(), Some(4));
    assert_eq!(g.diameter().unwrap(), 4);
    assert!(g.is_bipartite().is_bipartite());
}

#[test]
fn petersen_distances_bounded_by_two() {
    let g = gp(5, 2);
    let d = g.bfs_distances(0).unwrap().into_finite().unwrap();
    assert!(d.iter().all(|&x| x <= 2));
    let fw = floyd_warshall(&g);
    assert_eq!(d, fw[0].iter().map(|x| x.unwrap()).collect::<Vec<_>>());
}

#[test]
fn gp_3k3_profiles_and_diameter() {
    let g = gp(42, 13);
    assert_eq!(g.sphere_profile(0).unwrap().sizes, vec![1, 3, 6, 12, 16, 14, 12, 12, 7, 1]);
    assert_eq!(g.diameter().unwrap(), 9);
    let g = gp(45, 14);
    assert_eq!(g.sphere_profile(0).unwrap().sizes, vec![1, 3, 6, 12, 16, 14, 12, 12, 12, 2]);
}

#[test]
fn bipartite_examples() {
    assert!(gp(8, 3).is_bipartite().is_bipartite());
    assert!(!gp(5, 2).is_bipartite().is_bipartite());
}

#[test]
fn folkman_qr7_edge_partition() {
    let spec = folkman_qr_spec(7).unwrap();
    let g = spec.build();
    let (x0, y1) = (spec.id(TetraVertex::X(0)), spec.id(TetraVertex::Y(1)));
    let p = distance_partition(&g, x0, y1).unwrap();
    assert_eq!(p.above_counts(), &[1, 5, 7, 0]);
    assert_eq!(p.below_counts(), &[1, 5, 8, 1]);
    assert_eq!(p.level_counts(), &[0, 0, 0, 0]);

    // the same cells by enumeration over Floyd–Warshall distances
    let d = floyd_warshall(&g);
    let above: Vec<usize> = (1..=4).map(|k| cell(&d, x0, y1, k - 1, k)).collect();
    let below: Vec<usize> = (1..=4).map(|k| cell(&d, x0, y1, k, k - 1)).collect();
    assert_eq!(above, p.above_counts());
    assert_eq!(below, p.below_counts());

    let t = balance_triple(&g, x0, y1).unwrap();
    assert_eq!((t.left, t.central, t.right), (13, 0, 15));
}

#[test]
fn folkman_qr7_spheres_match_coordinate_sets() {
    let spec = folkman_qr_spec(7).unwrap();
    let g = spec.build();
    let squares = [1usize, 2, 4];
    let dist = g.bfs_distances(spec.id(TetraVertex::X(0))).unwrap().into_finite().unwrap();
    let level = |i: u32| -> BTreeSet<usize> { (0..g.vertex_count()).filter(|&x| dist[x] == i).collect() };
    let s1: BTreeSet<usize> = squares
        .iter()
        .flat_map(|&s| [spec.id(TetraVertex::Y(s)), spec.id(TetraVertex::W(s))])
        .collect();
    assert_eq!(level(1), s1);
    let s2: BTreeSet<usize> = (1..7)
        .flat_map(|i| [spec.id(TetraVertex::X(i)), spec.id(TetraVertex::U(i))])
        .collect();
    assert_eq!(level(2), s2);
    let s3: BTreeSet<usize> = (0..7)
        .filter(|i| !squares.contains(i))
        .flat_map(|i| [spec.id(TetraVertex::Y(i)), spec.id(TetraVertex::W(i))])
        .collect();
    assert_eq!(level(3), s3);
    assert_eq!(level(4), BTreeSet::from([spec.id(TetraVertex::U(0))]));
}

#[test]
fn gp_24_4_has_cell_witness_but_is_balanced() {
    let g = gp(24, 4);
    let verdict = is_strongly_distance_balanced(&g).unwrap();
    let w = verdict.witness().expect("GP(24,4) is not strongly balanced");
    assert_ne!(w.below, w.above);
    // frozen from the exhaustive edge search; smallest (u, v, k)
    assert_eq!((w.u, w.v, w.k, w.below, w.above), (0, 24, 4, 5, 6));
    let d = floyd_warshall(&g);
    let k = w.k as u32;
    assert_eq!(cell(&d, w.u, w.v, k, k - 1), w.below);
    assert_eq!(cell(&d, w.u, w.v, k - 1, k), w.above);
    assert!(is_distance_balanced(&g).unwrap().holds());
    assert!(brute_db(&g));
}

#[test]
fn k2_triple() {
    let g = Graph::from_edges(2, [(0, 1)]).unwrap();
    for (u, v) in [(0, 1), (1, 0)] {
        let t = balance_triple(&g, u, v).unwrap();
        assert_eq!((t.left, t.central, t.right), (1, 0, 1));
    }
}

#[test]
fn petersen_triples_balanced() {
    let g = gp(5, 2);
    let m = EdgeMetrics::new(&g).unwrap();
    for t in m.triples() {
        assert_eq!((t.left, t.central, t.right), (3, 4, 3));
    }
}

#[test]
fn balance_examples() {
    assert!(!is_distance_balanced(&folkman_qr(5).unwrap()).unwrap().holds());
    assert!(is_distance_balanced(&gp(5, 2)).unwrap().holds());
}

#[test]
fn strong_balance_examples() {
    for (n, k, expected) in [(35, 8, false), (10, 2, true), (9, 2, false)] {
        let g = gp(n, k);
        assert_eq!(is_strongly_distance_balanced(&g).unwrap().holds(), expected, "GP({n},{k})");
        assert_eq!(brute_sdb(&g), expected, "GP({n},{k}) brute force");
    }
}

#[test]
fn sphere_route_examples() {
    assert!(is_sdb_via_spheres(&gp(10, 2)).unwrap());
    let g = gp(13, 2);
    assert!(!is_sdb_via_spheres(&g).unwrap());
    assert_eq!(g.sphere_profile(0).unwrap().size(3), 6);
    // v_0 sees 8 vertices at distance 3, not 4; the spheres still differ
    assert_eq!(g.sphere_profile(13).unwrap().size(3), 8);
    assert!(is_sdb_via_spheres(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap());
}

#[test]
fn distance_degree_regular_examples() {
    assert!(is_distance_degree_regular(&gp(10, 2)).unwrap());
    assert!(!is_distance_degree_regular(&gp(13, 2)).unwrap());
    let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(!is_distance_degree_regular(&star).unwrap());
}

#[test]
fn generalized_folkman_examples() {
    let r = residue_set(5, &[1, 4]).unwrap();
    let t = residue_set(5, &[2, 3]).unwrap();
    assert_eq!(generalized_folkman(5, &r, &t).unwrap(), folkman_qr(5).unwrap());
    let one = residue_set(5, &[1]).unwrap();
    let g = generalized_folkman(5, &one, &one).unwrap();
    assert_eq!(g.vertex_count(), 20);
    assert_eq!(g.regular_degree(), Some(2));
}
