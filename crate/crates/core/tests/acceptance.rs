//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any line is FAIL.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use flipgraph::arcid::{self, TriKey};
use flipgraph::flipgraph::{verify_path2, Path2Class};
use flipgraph::oracles::*;
use flipgraph::rigidity::*;
use flipgraph::surface::{arc_count, is_simple, triangle_count};
use flipgraph::trimap::base_triangulation;
use flipgraph::{Ball, SurfaceSig};

const TREE_BUDGET: Duration = Duration::from_secs(30);
const PATH2_BUDGET: Duration = Duration::from_secs(300);
/// Measured: closure from the root star of the radius-10 annulus ball.
const CLOSURE_COLLAR: usize = 2;
const CLOSURE_FORCED: usize = 66;
const FUZZ_SEQUENCES: usize = 10_000;
const FUZZ_LENGTH: usize = 8;

fn sig(s: &str) -> SurfaceSig {
    s.parse().unwrap()
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn tree_balls() -> Outcome {
    let start = Instant::now();
    for n in 0..=10 {
        let b = Ball::new(&sig("S1,1"), n).map_err(|e| e.to_string())?;
        ensure(b.len() == 3 * (1 << n) - 2, format!("radius {n}: {} vertices", b.len()))?;
        let rep = check_torus_ball(&b).map_err(|e| e.to_string())?;
        ensure(rep.ok(), format!("radius {n}: {:?}", rep.failures.first()))?;
        ensure(rep.edges == rep.model_edges, format!("radius {n}: edge counts differ"))?;
    }
    let t = start.elapsed();
    ensure(t < TREE_BUDGET, format!("took {t:?}"))?;
    Ok(format!("sizes 3*2^n-2 for n <= 10, slope model agrees, {t:.1?}"))
}

fn line_balls() -> Outcome {
    let b = Ball::new(&sig("S0,0,(1,1)"), 30).map_err(|e| e.to_string())?;
    ensure(b.len() == 61, format!("{} vertices", b.len()))?;
    ensure(b.edges().len() == 60, "not a tree")?;
    for v in 0..b.len() {
        let want = if b.dist(v) < b.radius() { 2 } else { 1 };
        ensure(b.degree_in_ball(v) == want, format!("vertex {v} has degree {}", b.degree_in_ball(v)))?;
    }
    let rep = check_annulus_ball(&b).map_err(|e| e.to_string())?;
    ensure(rep.ok(), format!("{:?}", rep.failures.first()))?;
    Ok(format!("61-vertex path, {} coordinates checked", rep.coordinate_checks))
}

fn length_two_paths() -> Outcome {
    let start = Instant::now();
    let mut total = [0usize; 3];
    for s in ["S0,4", "S1,0,(1)", "S0,0,(1,2)", "S0,2,(1)", "S0,2,(2)", "S0,0,(2,2)"] {
        let b = Ball::new(&sig(s), 7).map_err(|e| e.to_string())?;
        let rep = verify_path2(&b).map_err(|e| e.to_string())?;
        ensure(rep.ok(), format!("{s}: {:?}", rep.failures.first()))?;
        ensure(rep.paths > 0, format!("{s}: no paths checked"))?;
        for i in 0..3 {
            total[i] += rep.by_common[i];
        }
    }
    let t = start.elapsed();
    ensure(t < PATH2_BUDGET, format!("took {t:?}"))?;
    Ok(format!("paths by common triangles {total:?}, {t:.1?}"))
}

fn classes_until_stable(s: &SurfaceSig) -> Result<usize, String> {
    let mut prev = 0;
    let mut seen = BTreeSet::new();
    for r in 0.. {
        let b = Ball::new(s, r).map_err(|e| e.to_string())?;
        for v in 0..b.len() {
            seen.insert(b.triangulation(v).map_err(|e| e.to_string())?.canonical_class());
        }
        if b.is_saturated() || (r >= 3 && seen.len() == prev) {
            break;
        }
        prev = seen.len();
    }
    Ok(seen.len())
}

fn homeomorphism_classes() -> Outcome {
    let mut out = Vec::new();
    for (s, want) in [("S1,0,(1)", 1), ("S0,4", 6)] {
        let found = classes_until_stable(&sig(s))?;
        let en = enumerate_all(&sig(s), u128::MAX).map_err(|e| e.to_string())?;
        ensure(found == want && en.classes.len() == want, format!("{s}: sampled {found}, enumerated {}", en.classes.len()))?;
        out.push(format!("{s}: {found}"));
    }
    Ok(out.join(", "))
}

fn counting() -> Outcome {
    ensure(growth_inequality_max_n() == 61, format!("max n {}", growth_inequality_max_n()))?;
    ensure(growth_inequality_holds(61) && !growth_inequality_holds(62), "boundary at 61/62")?;
    for n in 1..=64 {
        let b = average_distance_bound(n);
        ensure(b == average_distance_sum(n), format!("n = {n}"))?;
        ensure(b == num_rational::BigRational::new((2 * n).into(), 3.into()), format!("n = {n} is not 2n/3"))?;
    }
    Ok("max n = 61, average distance 2n/3 for n <= 64".into())
}

fn fibers() -> Outcome {
    let b = Ball::new(&sig("S1,0,(1)"), 8).map_err(|e| e.to_string())?;
    let p = fiber_edges(&b).map_err(|e| e.to_string())?;
    let rep = check_fibers(&b, &p);
    ensure(rep.ok(), format!("{:?}", rep.failures.first()))?;
    ensure(rep.vertices_checked > 0, "nothing checked")?;
    // 1-Lipschitz: every edge lands on an edge or a point of the slope model
    for e in b.edges() {
        let (x, y) = (p.image[e.u], p.image[e.v]);
        ensure(x == y || farey_neighbors(&x).contains(&y), format!("edge {}-{} stretches", e.u, e.v))?;
    }
    Ok(format!(
        "{} vertices checked, {} fibers, largest fiber in a ball {}",
        rep.vertices_checked, rep.fibers, rep.largest_fiber_in_ball
    ))
}

fn rigid_closure_collar() -> Outcome {
    let s = sig("S0,0,(1,2)");
    let dom = Ball::new(&s, 10).map_err(|e| e.to_string())?;
    let host = Ball::new(&s, 12).map_err(|e| e.to_string())?;
    ensure(dom.degree_in_ball(dom.root()) == 3, "root is not of degree 3")?;
    let mut seeds: Vec<usize> = std::iter::once(dom.root()).chain(dom.neighbors(dom.root())).collect();
    seeds.sort();
    let pm = PartialMap::identity_on(&dom, &host, &seeds).map_err(|e| e.to_string())?;
    let pm = rigid_closure(pm, Rules::R1).map_err(|e| e.to_string())?;
    let reach = (0..=dom.radius())
        .take_while(|&d| dom.sphere(d).all(|v| pm.get(v).is_some()))
        .last()
        .unwrap_or(0);
    let collar = dom.radius() - reach;
    ensure(collar == CLOSURE_COLLAR, format!("collar {collar}"))?;
    ensure(pm.len() == CLOSURE_FORCED, format!("{} forced", pm.len()))?;
    for (&d, &h) in pm.assignment() {
        ensure(dom.vertex(d).key == host.vertex(h).key, format!("vertex {d} forced off the identity"))?;
    }
    let pairs: Vec<_> = seeds.iter().map(|&v| (v, host.index_of(&dom.vertex(v).key).unwrap())).collect();
    let replayed = replay_trace(&dom, &host, &pairs, pm.trace()).map_err(|e| e.to_string())?;
    ensure(&replayed == pm.assignment(), "replay disagrees")?;
    Ok(format!("{} of {} forced, collar {collar}, trace of {} replays", pm.len(), dom.len(), pm.trace().len()))
}

fn bset_forcing() -> Outcome {
    let mut out = Vec::new();
    for name in ["S0,5", "S1,2"] {
        let ball = Ball::new(&sig(name), 5).map_err(|e| e.to_string())?;
        let sites: Vec<_> = (0..ball.len())
            .filter(|&v| ball.dist(v) <= 3)
            .flat_map(|v| {
                let t = ball.triangulation(v).unwrap();
                let arcs = t.arc_ids();
                arcs.iter()
                    .flat_map(|&a| arcs.iter().map(move |&b| (a, b)))
                    .filter(|&(a, b)| a != b && t.common_triangles(a, b).unwrap() == 2)
                    .map(|(a, b)| (v, a, b))
                    .collect::<Vec<_>>()
            })
            .collect();
        let results: Vec<Result<Option<Arrangement>, String>> = sites
            .par_iter()
            .map(|&(v, a, b)| {
                let st = ball.state(v).map_err(|e| e.to_string())?;
                let bs = build_bset(&st.tri, &st.coords, a, b).map_err(|e| format!("vertex {v}: {e}"))?;
                let Some(loc) = bs.locate(&ball) else { return Ok(None) };
                let seeds: Vec<usize> =
                    ["T", "T_b", "T_c", "T_e", "T_eb", "T_bc", "T_cb"].iter().map(|r| loc[r]).collect();
                let pm = PartialMap::identity_on(&ball, &ball, &seeds).map_err(|e| e.to_string())?.with_site_radius(3);
                let pm = rigid_closure(pm, Rules::R2).map_err(|e| format!("vertex {v} ({a}, {b}): {e}"))?;
                ensure(pm.get(loc["T_a"]) == Some(loc["T_a"]), format!("vertex {v} ({a}, {b}): T_a not forced"))?;
                Ok(Some(bs.config.arrangement))
            })
            .collect();
        let mut arrangements: BTreeMap<String, usize> = BTreeMap::new();
        for r in results {
            if let Some(a) = r? {
                *arrangements.entry(format!("{a:?}")).or_default() += 1;
            }
        }
        let checked: usize = arrangements.values().sum();
        ensure(checked > 0, format!("{name}: no sites"))?;
        out.push(format!("{name}: {checked} sites {arrangements:?}"));
    }
    Ok(out.join("; "))
}

fn disjoint_pairs() -> Outcome {
    let mut out = Vec::new();
    for name in ["S0,5", "S1,2"] {
        let s = sig(name);
        let b = Ball::new(&s, 5).map_err(|e| e.to_string())?;
        ensure(b.len() >= 500, format!("{name}: ball too small"))?;
        let sample: Vec<_> = (0..500).map(|v| b.triangulation(v).unwrap().clone()).collect();
        let rep = check_lemma_5_1(&s, &sample).map_err(|e| e.to_string())?;
        ensure(rep.ok(), format!("{name}: {:?}", rep.violations.first()))?;
        out.push(format!("{name}: {} triangulations, {} configurations", rep.triangulations, rep.configurations));
    }
    Ok(out.join("; "))
}

fn non_rigidity() -> Outcome {
    let ann = Ball::new(&sig("S0,0,(1,1)"), 4).map_err(|e| e.to_string())?;
    let g = Graph::from_ball(&ann);
    let start = (0..g.len()).find(|&v| g.neighbors(v).len() == 1).ok_or("no endpoint")?;
    let mut order = vec![start];
    while order.len() < g.len() {
        let last = *order.last().unwrap();
        order.push(g.neighbors(last).iter().copied().find(|w| !order.contains(w)).unwrap());
    }
    let host = Ball::new(&sig("S1,1"), 10).map_err(|e| e.to_string())?;
    let seg6 = g.induced(&order[..6]);
    let seg8 = g.induced(&order[..8]);
    let embs = search_injective_homs(&seg6, &host, &[(0, host.root())], usize::MAX).map_err(|e| e.to_string())?;
    let first = embs.first().ok_or("no embedding of the segment")?;
    let seed: Vec<(usize, usize)> = first.iter().copied().enumerate().collect();
    let ext = search_injective_homs(&seg8, &host, &seed, usize::MAX).map_err(|e| e.to_string())?;
    ensure(ext.len() >= 2, format!("{} extensions", ext.len()))?;

    let b = Ball::new(&sig("S1,2"), 2).map_err(|e| e.to_string())?;
    let ladder = (0..b.len())
        .find_map(|v| {
            let st = b.state(v).ok()?;
            let arcs = st.tri.arc_ids();
            for &a in &arcs {
                for &c in &arcs {
                    let Ok(Some(cfg)) = case_three(&st.tri, a, c) else { continue };
                    if a == c || cfg.arrangement != Arrangement::Second {
                        continue;
                    }
                    for e in st.tri.flippable_arcs() {
                        if ![a, c, cfg.c.id, cfg.d.id].contains(&e.id) {
                            return build_ladder(&st.tri, &st.coords, a, c, e.id, 3).ok();
                        }
                    }
                }
            }
            None
        })
        .ok_or("no ladder")?;
    ensure(!ladder.squares.is_empty(), "ladder has no squares")?;
    ensure(
        ladder.squares.iter().all(|s| matches!(s, Path2Class::FourCycle(_))) && ladder.squares_ok(),
        "ladder square is not a 4-cycle",
    )?;
    Ok(format!(
        "{} embeddings, {} two-step extensions; ladder of {} vertices",
        embs.len(),
        ext.len(),
        ladder.len()
    ))
}

fn fuzz_surfaces() -> Vec<SurfaceSig> {
    let mut v: Vec<SurfaceSig> = [
        "S0,1", "S0,2", "S0,3", "S0,4", "S0,0,(1)", "S0,0,(2)", "S0,0,(3)", "S0,0,(4)", "S0,0,(5)", "S0,0,(6)",
        "S0,1,(1)", "S0,1,(2)", "S0,1,(3)", "S0,1,(4)", "S0,2,(1)", "S0,2,(2)", "S0,0,(1,1)", "S0,0,(1,2)",
        "S0,0,(2,2)", "S1,1", "S1,0,(1)",
    ]
    .iter()
    .map(|s| sig(s))
    .collect();
    assert!(v.iter().all(is_simple));
    v.push(sig("S0,5"));
    v.push(sig("S1,2"));
    v
}

fn fuzz_one(s: &SurfaceSig, seed: u64) -> Result<usize, String> {
    let err = |e: flipgraph::Error| format!("{s} seed {seed}: {e}");
    let mut t = base_triangulation(s).map_err(err)?;
    let (_, mut coords) = arcid::base_coords(&t);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut quads = 0;
    for step in 0..FUZZ_LENGTH {
        let here = format!("{s} seed {seed} step {step}");
        ensure(t.signature().map_err(err)? == *s, format!("{here}: signature changed"))?;
        // the twice-punctured sphere has its one arc but no triangles
        let arcs_expected = if triangle_count(s) == 0 { 0 } else { arc_count(s) };
        ensure(t.interior_arc_count() == arcs_expected, format!("{here}: arc count changed"))?;
        let key = arcid::tri_key(&t, &coords).map_err(err)?;
        let back: TriKey = key.to_string().parse().map_err(err)?;
        ensure(back == key && back.digest() == key.digest(), format!("{here}: key text round-trip"))?;
        let arcs = t.flippable_arcs();
        if arcs.is_empty() {
            break;
        }
        let a = arcs[rng.gen_range(0..arcs.len())].id;
        let removed = coords.get(a).cloned().ok_or_else(|| format!("{here}: arc without coordinates"))?;
        let (out, next) = arcid::flip_with_coords(&t, &coords, a).map_err(err)?;
        let sides: BTreeSet<_> = out.quad.sides.iter().map(|r| r.id).collect();
        if sides.len() == 4 {
            quads += 1;
            let holds = arcid::ptolemy_holds(&out.triangulation, &next, out.added, &removed).map_err(err)?;
            ensure(holds, format!("{here}: exchange relation fails"))?;
        }
        let (undo, undo_coords) = arcid::flip_with_coords(&out.triangulation, &next, out.added).map_err(err)?;
        ensure(arcid::tri_key(&undo.triangulation, &undo_coords).map_err(err)? == key, format!("{here}: flip is not an involution"))?;
        ensure(undo.triangulation.canonical_class() == t.canonical_class(), format!("{here}: class changes under a double flip"))?;
        t = out.triangulation;
        coords = next;
    }
    Ok(quads)
}

fn engine_fuzz() -> Outcome {
    let surfaces = fuzz_surfaces();
    let mut quads = 0;
    for s in &surfaces {
        let res: Result<Vec<usize>, String> = (0..FUZZ_SEQUENCES as u64).into_par_iter().map(|k| fuzz_one(s, k)).collect();
        quads += res?.iter().sum::<usize>();
    }
    Ok(format!(
        "{} surfaces x {FUZZ_SEQUENCES} sequences, {quads} exchange relations checked",
        surfaces.len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("tree balls", tree_balls),
        ("line balls", line_balls),
        ("length-two paths", length_two_paths),
        ("homeomorphism classes", homeomorphism_classes),
        ("counting", counting),
        ("fiber structure", fibers),
        ("rigid closure", rigid_closure_collar),
        ("B-set forcing", bset_forcing),
        ("disjoint pairs", disjoint_pairs),
        ("non-rigidity witnesses", non_rigidity),
        ("engine fuzzing", engine_fuzz),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(msg) => println!("criterion {}: PASS {name}: {msg}", i + 1),
            Err(msg) => {
                println!("criterion {}: FAIL {name}: {msg}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}
