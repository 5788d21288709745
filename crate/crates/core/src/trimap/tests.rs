use super::*;

fn sig(s: &str) -> SurfaceSig {
    s.parse().unwrap()
}

const SAMPLE: &[&str] = &[
    "S1,1", "S0,3", "S0,4", "S0,5", "S1,2", "S2,1", "S0,0,(1,1)", "S0,0,(1,2)", "S0,1,(1)",
    "S0,1,(4)", "S1,0,(1)", "S0,2,(2)", "S0,0,(4)", "S0,0,(7)", "S0,0,(2,2,1)", "S1,0,(2,1)",
    "S0,3,(1)", "S0,0,(3)",
];

#[test]
fn base_triangulations_have_expected_shape() {
    for s in SAMPLE {
        let g = sig(s);
        let t = base_triangulation(&g).unwrap();
        assert_eq!(t.signature().unwrap(), g, "{s}");
        assert_eq!(t.interior_arc_count(), surface::arc_count(&g), "{s}");
        assert_eq!(t.triangle_count(), surface::triangle_count(&g), "{s}");
        assert_eq!(t.boundary_segments().len() as u32, g.boundary_marked(), "{s}");
        t.validate().unwrap();
    }
}

#[test]
fn degenerate_surfaces() {
    for s in ["S0,1", "S0,2", "S0,0,(1)", "S0,0,(2)"] {
        let t = base_triangulation(&sig(s)).unwrap();
        assert_eq!(t.triangle_count(), 0);
        assert!(t.flippable_arcs().is_empty());
        assert_eq!(t.signature().unwrap(), sig(s));
    }
}

#[test]
fn once_punctured_monogon_is_folded() {
    let t = base_triangulation(&sig("S0,1,(1)")).unwrap();
    assert_eq!(t.triangle_count(), 1);
    assert_eq!(t.folded_triangles(), vec![0]);
    assert!(t.flippable_arcs().is_empty());
    let a = t.arcs()[0].id;
    assert_eq!(t.flip(a).unwrap_err(), Error::NotFlippable(a.0));
}

#[test]
fn flip_is_an_involution_up_to_ids() {
    for s in SAMPLE {
        let t = base_triangulation(&sig(s)).unwrap();
        for a in t.flippable_arcs() {
            let o = t.flip_detailed(a.id).unwrap();
            o.triangulation.validate().unwrap();
            assert!(!o.triangulation.contains_arc(a.id));
            assert!(o.triangulation.contains_arc(o.added));
            let back = o.triangulation.flip(o.added).unwrap();
            assert_eq!(back.canonical_class(), t.canonical_class(), "{s}");
            assert_eq!(back.signature().unwrap(), sig(s));
        }
    }
}

#[test]
fn flip_errors() {
    let t = base_triangulation(&sig("S0,0,(4)")).unwrap();
    let b = t.boundary_segments()[0].id;
    assert_eq!(t.flip(b).unwrap_err(), Error::NotInterior(b.0));
    assert_eq!(t.flip(ArcId(999)).unwrap_err(), Error::UnknownArc(999));
    let a = t.arcs()[0].id;
    assert_eq!(t.common_triangles(a, a).unwrap_err(), Error::SameArc(a.0));
}

#[test]
fn quad_sides_of_a_square() {
    let t = base_triangulation(&sig("S0,0,(4)")).unwrap();
    let a = t.arcs()[0].id;
    let q = t.quad(a).unwrap();
    assert!(q.sides.iter().all(|s| s.kind == ArcKind::Boundary));
    let mut ids: Vec<_> = q.sides.iter().map(|s| s.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), 4);
}

#[test]
fn torus_flips_stay_on_torus() {
    let t = base_triangulation(&sig("S1,1")).unwrap();
    assert_eq!(t.flippable_arcs().len(), 3);
    let arcs = t.arc_ids();
    assert_eq!(t.common_triangles(arcs[0], arcs[1]).unwrap(), 2);
    let u = t.flip(arcs[0]).unwrap();
    assert_eq!(u.canonical_class(), t.canonical_class());
}

#[test]
fn text_round_trip() {
    for s in SAMPLE.iter().chain(&["S0,2", "S0,0,(2)"]) {
        let t = base_triangulation(&sig(s)).unwrap();
        let text = t.to_string();
        let back: Triangulation = text.parse().unwrap();
        assert_eq!(back.to_string(), text);
        assert_eq!(back, t.normalized());
    }
}

#[test]
fn text_errors_name_token() {
    let e = "triangles=1\npair (0,0)-(0,1)\nboundery (0,2)".parse::<Triangulation>().unwrap_err();
    assert!(matches!(e, Error::Parse { ref token, .. } if token == "boundery"), "{e}");
    let e = "triangles=1\npair (0,0)-(0,5)".parse::<Triangulation>().unwrap_err();
    assert!(matches!(e, Error::Parse { ref token, .. } if token == "5"), "{e}");
    assert!("triangles=1\npair (0,0)-(0,1)".parse::<Triangulation>().is_err());
}

#[test]
fn canonical_class_ignores_labels_and_orientation() {
    for s in ["S0,5", "S1,2", "S0,0,(1,2)", "S2,1"] {
        let t = base_triangulation(&sig(s)).unwrap();
        let k = t.triangle_count();
        let perm: Vec<usize> = (0..k).rev().collect();
        let rot: Vec<usize> = (0..k).map(|i| i % 3).collect();
        assert_eq!(t.relabeled(&perm, &rot).canonical_class(), t.canonical_class());
        assert_eq!(t.mirrored().canonical_class(), t.canonical_class());
        assert_eq!(t.mirrored().signature().unwrap(), sig(s));
    }
}

#[test]
fn cutting_along_all_arcs_gives_triangles() {
    let t = base_triangulation(&sig("S1,2")).unwrap();
    let pieces = t.cut_along(&t.arc_ids()).unwrap();
    assert_eq!(pieces.len(), t.triangle_count());
    assert!(pieces.iter().all(|p| *p == sig("S0,0,(3)")));
    assert_eq!(t.cut_along(&[]).unwrap(), vec![sig("S1,2")]);
}

#[test]
fn cutting_annulus_along_one_arc() {
    let t = base_triangulation(&sig("S0,0,(1,1)")).unwrap();
    let a = t.arc_ids()[0];
    assert_eq!(t.cut_along(&[a]).unwrap(), vec![sig("S0,0,(4)")]);
}
