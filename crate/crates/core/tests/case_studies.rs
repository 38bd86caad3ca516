use arrcalc::lattice::{cubic_threefold_lattice, eisenstein_a, gaussian_e7, hyperbolic_plane, RingTag, SignConvention};
use arrcalc::numeric::{rat_int, FieldElem};
use arrcalc::report::case_study::{run_case_study, CaseStudy, Provenance};
use arrcalc::report::lattice::perpendicular_pair;

#[test]
fn profiles_and_conventions() {
    let e7 = gaussian_e7().signature();
    assert_eq!((e7.positive, e7.negative, e7.null), (6, 1, 0));
    assert_eq!(e7.convention(), SignConvention::OneNegative);
    let a10 = eisenstein_a(10).signature();
    assert_eq!((a10.positive, a10.negative, a10.null), (9, 1, 0));
    let lambda = cubic_threefold_lattice();
    assert_eq!(lambda.rank(), 11);
    assert_eq!(lambda.signature().profile(), (1, 10));
    let a4 = eisenstein_a(4).signature();
    assert_eq!((a4.positive, a4.negative), (4, 0));
    assert_eq!(a4.ball_dimension(), None);
}

#[test]
fn hyperbolic_plane_determinant() {
    let u = hyperbolic_plane(RingTag::Eisenstein).unwrap();
    // Off-diagonal sqrt(-3) gives det = -|sqrt(-3)|^2 = -3.
    assert_eq!(u.gram().determinant().unwrap(), FieldElem::from_rat(u.field(), rat_int(-3)));
    assert_eq!(u.signature().profile(), (1, 1));
}

#[test]
fn phi_from_perpendicular_roots() {
    let a10 = eisenstein_a(10);
    let pair = perpendicular_pair(&a10, 2).unwrap().expect("pair within bound 2");
    assert!(a10.is_root(&pair.first).unwrap() && a10.is_root(&pair.second).unwrap());
    assert!(a10.inner(&pair.first, &pair.second).unwrap().is_zero());
    assert_eq!(pair.sum_norm, rat_int(6));
    let phi = arrcalc::lattice::orthogonal_complement(&a10, &pair.sum).unwrap();
    assert_eq!(phi.lattice.rank(), 9);
    assert_eq!(phi.lattice.signature().profile(), (1, 8));
    for b in &phi.basis {
        assert!(a10.inner(b, &pair.sum).unwrap().is_zero());
        assert!(b.iter().all(FieldElem::is_integral));
    }
}

#[test]
fn presets_separate_fixtures_from_results() {
    for study in CaseStudy::ALL {
        let r = run_case_study(study, None).unwrap();
        assert!(r.passed(), "{study}");
        assert_eq!(r.lattice.provenance, Provenance::Computed);
        assert!(r.fixtures.iter().all(|f| f.provenance == Provenance::Fixture));
        assert_eq!(r.to_json(), run_case_study(study, None).unwrap().to_json());
    }
    let res = run_case_study(CaseStudy::Res, None).unwrap();
    let names: Vec<&str> = res.fixtures.iter().map(|f| f.name).collect();
    assert!(names.contains(&"restricted_arrangement_invariants"));
    let phi = res.phi.unwrap().value;
    assert_eq!(phi.signature.ball_dimension, Some(8));
}
