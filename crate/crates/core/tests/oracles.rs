use std::collections::{BTreeMap, HashMap, VecDeque};

use flipgraph::oracles::*;
use flipgraph::{Ball, SurfaceSig};

fn sig(s: &str) -> SurfaceSig {
    s.parse().unwrap()
}

#[test]
fn farey_model_sizes() {
    for r in 0..=12 {
        let (v, e) = farey_ball(r);
        assert_eq!(v.len(), 3 * (1 << r) - 2);
        assert_eq!(e.len() + 1, v.len(), "tree at radius {r}");
    }
    let root = FareyVertex::root();
    let ns = farey_neighbors(&root);
    for n in &ns {
        assert_eq!(n.0.iter().filter(|s| root.0.contains(s)).count(), 2);
    }
    assert!(ns[0] != ns[1] && ns[1] != ns[2] && ns[0] != ns[2]);
}

#[test]
fn torus_ball_matches_slope_model() {
    for r in 0..=10 {
        let b = Ball::new(&sig("S1,1"), r).unwrap();
        let rep = check_torus_ball(&b).unwrap();
        assert!(rep.ok(), "radius {r}: {:?}", &rep.failures[..rep.failures.len().min(5)]);
        assert!(rep.coordinate_checks > 0);
    }
}

#[test]
fn annulus_ball_matches_winding_model() {
    assert_eq!(annulus_model_ball(0).len(), 1);
    assert_eq!(annulus_model_ball(4).len(), 9);
    for r in [0, 1, 2, 5, 13, 30] {
        let b = Ball::new(&sig("S0,0,(1,1)"), r).unwrap();
        let rep = check_annulus_ball(&b).unwrap();
        assert!(rep.ok(), "radius {r}: {:?}", &rep.failures[..rep.failures.len().min(5)]);
    }
}

#[test]
fn enumeration_class_counts() {
    let en = enumerate_all(&sig("S0,4"), u128::MAX).unwrap();
    assert_eq!(en.classes.len(), 6);
    let en = enumerate_all(&sig("S1,0,(1)"), u128::MAX).unwrap();
    assert_eq!(en.classes.len(), 1);
}

#[test]
fn enumeration_agrees_with_engine_canonical_classes() {
    for s in ["S0,4", "S1,1", "S0,2,(1)", "S0,0,(1,2)", "S1,0,(1)", "S0,1,(3)"] {
        let en = enumerate_all(&sig(s), u128::MAX).unwrap();
        let mut engine: Vec<_> = en.classes.values().map(|t| t.canonical_class()).collect();
        engine.sort();
        engine.dedup();
        assert_eq!(engine.len(), en.classes.len(), "{s}");
    }
}

#[test]
fn enumeration_is_closed_under_flips() {
    for s in ["S0,4", "S1,1", "S1,0,(1)", "S0,2,(2)", "S0,0,(2,2)"] {
        let en = enumerate_all(&sig(s), u128::MAX).unwrap();
        let engine: Vec<_> = en.classes.values().map(|t| t.canonical_class()).collect();
        for t in en.classes.values() {
            for a in t.flippable_arcs() {
                let f = t.flip(a.id).unwrap();
                assert!(engine.contains(&f.canonical_class()), "{s}: flip leaves the enumerated classes");
            }
        }
    }
}

#[test]
fn finite_flip_graphs_match_labeled_counts() {
    for s in ["S0,3", "S0,0,(4)", "S0,0,(5)", "S0,0,(6)", "S0,1,(1)", "S0,1,(2)", "S0,1,(3)"] {
        let b = Ball::new(&sig(s), 20).unwrap();
        assert!(b.is_saturated(), "{s}");
        assert_eq!(count_labeled(&sig(s), u128::MAX).unwrap(), b.len() as u128, "{s}");
    }
    assert!(count_labeled(&sig("S1,1"), u128::MAX).is_err());
}

#[test]
fn enumeration_respects_limit() {
    assert!(matches!(
        enumerate_all(&sig("S0,5"), 1000),
        Err(flipgraph::Error::ResourceLimit { .. })
    ));
    assert_eq!(gluing_count(&sig("S0,4")), 10395);
}

#[test]
fn shipped_exceptional_table_is_current() {
    let shipped = include_str!("../data/exceptional.txt");
    assert_eq!(render_exceptional_table().unwrap(), shipped);
    let derived = exceptional_signatures().unwrap();
    assert!(derived.contains(&sig("S0,1,(2)")));
    assert!(derived.iter().all(|s| s.genus() <= 1));
}

fn farey_distance(a: &FareyVertex, b: &FareyVertex) -> usize {
    let mut seen = HashMap::from([(*a, 0usize)]);
    let mut q = VecDeque::from([*a]);
    while let Some(v) = q.pop_front() {
        let d = seen[&v];
        if v == *b {
            return d;
        }
        for w in farey_neighbors(&v) {
            seen.entry(w).or_insert_with(|| {
                q.push_back(w);
                d + 1
            });
        }
    }
    unreachable!()
}

#[test]
fn capping_is_a_tree_projection() {
    let r = 6;
    let b = Ball::new(&sig("S1,0,(1)"), r).unwrap();
    let img = capped_projection(&b).unwrap();
    let mut type0 = vec![0usize; b.len()];
    let mut fiber_edges: BTreeMap<FareyVertex, usize> = BTreeMap::new();
    for e in b.edges() {
        if img[e.u] == img[e.v] {
            type0[e.u] += 1;
            type0[e.v] += 1;
            *fiber_edges.entry(img[e.u]).or_default() += 1;
        } else {
            assert!(farey_neighbors(&img[e.u]).contains(&img[e.v]), "edge {}-{}", e.u, e.v);
        }
    }
    for v in 0..b.len() {
        if b.dist(v) < r {
            assert_eq!(type0[v], 2, "vertex {v}");
        }
        assert!(farey_distance(&img[b.root()], &img[v]) <= b.dist(v));
    }
    let mut fibers: BTreeMap<FareyVertex, usize> = BTreeMap::new();
    for i in &img {
        *fibers.entry(*i).or_default() += 1;
    }
    assert!(fibers.values().all(|&n| n <= 2 * r + 1));
    // type-0 edges inside each fiber form a forest of paths
    assert!(type0.iter().all(|&d| d <= 2));
    for (f, e) in &fiber_edges {
        assert!(*e < fibers[f]);
    }
}

#[test]
fn capping_matches_frozen_vectors() {
    let b = Ball::new(&sig("S1,0,(1)"), 3).unwrap();
    let img = capped_projection(&b).unwrap();
    let mut rows: Vec<(String, String)> = (0..b.len())
        .map(|v| {
            let [x, y, z] = img[v].0;
            (b.vertex(v).key.to_string(), format!("{x} {y} {z}"))
        })
        .collect();
    rows.sort();
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/capping_r3.json");
    if std::env::var_os("FLIPGRAPH_FREEZE").is_some() {
        std::fs::write(path, serde_json::to_string_pretty(&rows).unwrap() + "\n").unwrap();
    }
    let frozen: Vec<(String, String)> = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(rows, frozen);
}

#[test]
fn cap_boundary_rejects_bad_data() {
    assert!(cap_boundary(&[H1(1, 0), H1(0, 1)]).is_err());
    assert!(cap_boundary(&[H1(2, 0), H1(0, 1), H1(1, 1)]).is_err());
    let v = cap_boundary(&[H1(0, 0), H1(1, 0), H1(0, -1), H1(1, 1)]).unwrap();
    assert_eq!(v, FareyVertex::root());
}
