mod common;

use logkit::diagram::{classify_face, validate_diagram, DiagramFailure, FaceClass};
use logkit::{
    apply_cancellation, canonical_edge_sphere, canonical_power_sphere, curvature_report, find_cancellation_pairs,
    AngleAssignment, SurfaceDiagram,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #[test]
    fn random_gluings_are_valid_closed_surfaces(seed in any::<u64>()) {
        let (d, p) = common::random_closed_diagram(&mut rng(seed), 7, &["x", "y"]);
        let r = validate_diagram(&d, &p);
        prop_assert!(r.valid && r.closed, "{:?}", r.failures);
        // an orientable closed surface has even Euler characteristic at most 2
        let chi = d.euler_characteristic();
        prop_assert!(chi <= 2 && chi % 2 == 0);
    }

    #[test]
    fn gauss_bonnet_for_any_angles(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (d, _) = common::random_closed_diagram(&mut r, 7, &["x", "y", "z"]);
        let angles = AngleAssignment::new(
            d.faces.iter().map(|f| (0..f.len()).map(|_| common::random_rational(&mut r)).collect()).collect(),
        );
        let c = curvature_report(&d, &angles).unwrap();
        prop_assert_eq!(c.total(), BigRational::from_integer(BigInt::from(2 * d.euler_characteristic())));
        prop_assert!(c.gauss_bonnet_holds);
    }

    #[test]
    fn json_round_trip_is_byte_identical(seed in any::<u64>()) {
        let (d, _) = common::random_closed_diagram(&mut rng(seed), 6, &["x", "y"]);
        let text = d.to_json();
        let back = SurfaceDiagram::from_json(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn dipole_insertion_and_removal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (d, p) = common::random_closed_diagram(&mut r, 5, &["x", "y"]);
        let edge = r.gen_range(0..d.edges.len());
        let (s, q) = common::insert_dipole(&d, &p, edge, "u", "w");
        prop_assert_eq!(s.euler_characteristic(), d.euler_characteristic());
        prop_assert!(validate_diagram(&s, &q).valid);
        let last = s.faces.len() - 1;
        let pair = find_cancellation_pairs(&s).into_iter().find(|c| (c.first, c.second) == (last - 1, last));
        prop_assert!(pair.is_some());
        let out = apply_cancellation(&s, &pair.unwrap()).unwrap();
        prop_assert_eq!(out.faces.len(), d.faces.len());
        prop_assert_eq!(out.edges.len(), d.edges.len());
        prop_assert_eq!(out.vertex_count, d.vertex_count);
        let r = validate_diagram(&out, &q);
        prop_assert!(r.valid && r.closed, "{:?}", r.failures);
    }
}

#[test]
fn relabelled_edge_breaks_boundary_words() {
    let (mut d, p) = common::random_closed_diagram(&mut rng(3), 4, &["x", "y"]);
    d.edges[0].label = "stranger".into();
    let r = validate_diagram(&d, &p);
    assert!(!r.valid);
    assert!(r.failures.iter().any(|f| matches!(f, DiagramFailure::BoundaryWord { .. })));
}

#[test]
fn paper_scheme_flattens_canonical_faces() {
    for n in 2..=9 {
        let s = canonical_edge_sphere("a", "b", "c", n).unwrap();
        for f in 0..n {
            assert_eq!(classify_face(&s, f), FaceClass::Square);
        }
        let c = curvature_report(&s, &AngleAssignment::paper_scheme(&s).unwrap()).unwrap();
        assert!(c.faces.iter().all(|f| f.kappa == BigRational::default()));
        assert_eq!(c.total(), BigRational::from_integer(4.into()));
    }
    for n in 2..=9 {
        let s = canonical_power_sphere("g", n).unwrap();
        assert!(matches!(classify_face(&s, 0), FaceClass::Power { exponent, .. } if exponent == n));
        let c = curvature_report(&s, &AngleAssignment::paper_scheme(&s).unwrap()).unwrap();
        let per_vertex = BigRational::new(BigInt::from(4), BigInt::from(n));
        assert!(c.vertices.iter().all(|v| v.kappa == per_vertex));
    }
}

#[test]
fn sphere_json_round_trip() {
    let s = canonical_edge_sphere("a", "b", "c", 5).unwrap();
    let text = s.to_json();
    assert!(text.ends_with('\n'));
    assert_eq!(SurfaceDiagram::from_json(&text).unwrap().to_json(), text);
}

#[test]
fn random_cancellations_keep_surfaces() {
    let mut r = rng(21);
    let mut moves = 0;
    for _ in 0..300 {
        let (d, p) = common::random_closed_diagram(&mut r, 5, &["x"]);
        for pair in find_cancellation_pairs(&d) {
            let Ok(out) = apply_cancellation(&d, &pair) else { continue };
            moves += 1;
            assert_eq!(out.faces.len() + 2, d.faces.len());
            if !out.is_empty() {
                assert_eq!(out.euler_characteristic(), d.euler_characteristic());
                let v = validate_diagram(&out, &p);
                assert!(v.valid && v.closed, "{:?}", v.failures);
            }
        }
    }
    assert!(moves > 0);
}
