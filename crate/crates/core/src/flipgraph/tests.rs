use super::*;

fn sig(s: &str) -> SurfaceSig {
    s.parse().unwrap()
}

#[test]
fn torus_ball_sizes() {
    for r in 0..6 {
        let b = Ball::new(&sig("S1,1"), r).unwrap();
        assert_eq!(b.len(), 3 * (1 << r) - 2, "radius {r}");
        assert_eq!(b.edges().len(), b.len() - 1);
    }
}

#[test]
fn annulus_ball_is_a_path() {
    let b = Ball::new(&sig("S0,0,(1,1)"), 4).unwrap();
    assert_eq!(b.len(), 9);
    assert_eq!(b.edges().len(), 8);
    assert_eq!(b.degree_profile(), BTreeMap::from([(2, 7)]));
}

#[test]
fn finite_graphs_saturate() {
    let b = Ball::new(&sig("S0,3"), 20).unwrap();
    assert!(b.is_saturated());
    assert_eq!(b.complete_to(), 20);
    let n = b.len();
    let b2 = Ball::new(&sig("S0,3"), 30).unwrap();
    assert_eq!(b2.len(), n);
    let hex = Ball::new(&sig("S0,0,(6)"), 10).unwrap();
    assert!(hex.is_saturated());
    assert_eq!(hex.len(), 14);
    let pent = Ball::new(&sig("S0,0,(5)"), 10).unwrap();
    assert_eq!(pent.len(), 5);
}

#[test]
fn degenerate_balls() {
    for s in ["S0,2", "S0,1,(1)", "S0,0,(3)"] {
        let b = Ball::new(&sig(s), 3).unwrap();
        assert_eq!(b.len(), 1, "{s}");
        assert!(b.is_saturated());
    }
}

#[test]
fn pentagon_chain_degrees() {
    let b = Ball::new(&sig("S0,0,(1,2)"), 6).unwrap();
    let prof = b.degree_profile();
    assert!(prof.keys().all(|d| *d == 2 || *d == 3), "{prof:?}");
}

#[test]
fn budget_is_enforced() {
    let cfg = BallConfig { radius: 6, budget: 50, threads: Some(1) };
    assert_eq!(Ball::with_config(&sig("S1,1"), &cfg).unwrap_err(), Error::ResourceLimit { budget: 50 });
}

#[test]
fn no_triangles_in_flip_graphs() {
    for s in ["S0,4", "S0,0,(1,2)", "S1,0,(1)", "S0,1,(3)"] {
        let b = Ball::new(&sig(s), 4).unwrap();
        for y in 0..b.len() {
            let ns: Vec<usize> = b.neighbors(y).collect();
            for (i, &x) in ns.iter().enumerate() {
                for &z in &ns[i + 1..] {
                    assert!(!b.has_edge(x, z), "{s}");
                }
            }
        }
    }
}

#[test]
fn short_cycles_match_classification() {
    for s in ["S0,4", "S0,0,(1,2)", "S1,0,(1)", "S0,2,(1)", "S1,1"] {
        let b = Ball::new(&sig(s), 4).unwrap();
        for y in 0..b.len() {
            if b.dist(y) + 2 > b.radius() && !b.is_saturated() {
                continue;
            }
            let st = b.state(y).unwrap();
            let arcs = st.tri.flippable_arcs();
            for (i, a) in arcs.iter().enumerate() {
                for c in &arcs[i + 1..] {
                    let class = classify_path2(&st.tri, &st.coords, a.id, c.id).unwrap();
                    let x = b.neighbor_via(y, a.id).unwrap().unwrap();
                    let z = b.neighbor_via(y, c.id).unwrap().unwrap();
                    let cycles = cycles_through(&b, [x, y, z], 5).unwrap();
                    assert!(cycles_through(&b, [x, y, z], 3).unwrap().is_empty());
                    match class.cycle_len() {
                        None => assert!(cycles.is_empty(), "{s}"),
                        Some(l) => {
                            assert_eq!(cycles.len(), 1, "{s}");
                            assert_eq!(cycles[0].len(), l, "{s}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn cycles_need_radius() {
    let b = Ball::new(&sig("S0,4"), 2).unwrap();
    let y = b.sphere(1).next().unwrap();
    let ns: Vec<usize> = b.neighbors(y).collect();
    assert!(ns.len() >= 2);
    assert!(matches!(cycles_through(&b, [ns[0], y, ns[1]], 5), Err(Error::InsufficientRadius(_))));
}

#[test]
fn export_round_trip_and_determinism() {
    let b = Ball::new(&sig("S0,0,(1,2)"), 3).unwrap();
    let j = export(&b, Format::Json);
    let back = import(&j).unwrap();
    assert!(back.graph_eq(&b));
    assert_eq!(export(&back, Format::Json), j);
    let again = Ball::with_config(&sig("S0,0,(1,2)"), &BallConfig { radius: 3, budget: 1000, threads: Some(3) }).unwrap();
    assert_eq!(export(&again, Format::Json), j);
    assert_eq!(export(&again, Format::Dot), export(&b, Format::Dot));
    let one = Ball::new(&sig("S1,1"), 0).unwrap();
    let v: serde_json::Value = serde_json::from_str(&export(&one, Format::Json)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(v["edges"].as_array().unwrap().len(), 0);
}

#[test]
fn parents_reproduce_vertices() {
    let b = Ball::new(&sig("S0,5"), 2).unwrap();
    for v in 1..b.len() {
        let st = b.state(v).unwrap();
        let (p, a) = st.parent.unwrap();
        assert_eq!(b.dist(p) + 1, b.dist(v));
        assert_eq!(b.neighbor_via(p, a).unwrap(), Some(v));
        assert_eq!(b.arc_between(p, v).unwrap(), a);
    }
}
