use super::*;
use crate::algebra::quotient;
use crate::catalog::{kronecker_witness, lambda, trunc_poly, zigzag_swap};
use crate::field::{Gfp, Rationals};
use crate::algebra::quiver;

fn gf(p: u64) -> Gfp {
    Gfp::new(p).unwrap()
}

fn linear_path_algebra(f: &Gfp, n: usize) -> Result<Arc<Algebra<Gfp>>> {
    quiver::linear_path_algebra(f, n).map(Arc::new)
}

fn opts() -> KsOptions {
    KsOptions::with_seed(7)
}

fn truncation_chain(f: &Gfp) -> Vec<(Arc<Algebra<Gfp>>, AlgebraHom<Gfp>)> {
    let mut top = trunc_poly(f, 4, "x4").unwrap();
    let mut out = Vec::new();
    for k in (2..4).rev() {
        let x = top.parse_element("x").unwrap();
        let mut power = x.clone();
        for _ in 1..k {
            power = top.mul(&power, &x);
        }
        let (q, phi) = quotient(&top, &[power]).unwrap();
        out.push((q.clone(), phi));
        top = q;
    }
    out
}

#[test]
fn identity_witness() {
    let f = gf(5);
    let a = linear_path_algebra(&f, 3).unwrap();
    let c = verify_j_geq(&JWitnessPair::identity(&a), &opts()).unwrap();
    assert_eq!((c.tensor_dim(), c.complement_dim()), (a.dim(), 0));
}

#[test]
fn witness_sides_are_checked() {
    let f = gf(5);
    let a = linear_path_algebra(&f, 2).unwrap();
    let b = linear_path_algebra(&f, 3).unwrap();
    let r = Bimodule::regular(&a);
    let s = Bimodule::regular(&b);
    assert!(matches!(JWitnessPair::new(r, s, 0), Err(Error::AlgebraMismatch(_))));
}

#[test]
fn kronecker_witness_over_both_fields() {
    let w = kronecker_witness(&gf(101)).unwrap();
    let c = verify_j_geq(&w, &opts()).unwrap();
    assert_eq!((c.tensor_dim(), c.complement_dim()), (2, 0));
    let w = kronecker_witness(&Rationals).unwrap();
    let c = verify_j_geq(&w, &opts()).unwrap();
    assert_eq!((c.tensor_dim(), c.complement_dim()), (2, 0));
    // The reverse direction fails.
    assert!(matches!(verify_j_geq(&w.reversed(), &opts()), Err(Error::NotASummand(_))));
}

#[test]
fn quotient_witnesses_split_canonically() {
    let f = gf(11);
    for (_, phi) in truncation_chain(&f) {
        let c = quotient_certificate(&phi).unwrap();
        assert_eq!(c.tensor_dim(), c.regular.dim());
        let searched = verify_j_geq(&quotient_witness(&phi).unwrap(), &opts()).unwrap();
        assert_eq!(searched.complement_dim(), 0);
    }
    let l = lambda(&f, 3, 2, "lambda").unwrap();
    let (_, phi) = quotient(&l, &[l.parse_element("a3").unwrap()]).unwrap();
    let c = quotient_certificate(&phi).unwrap();
    assert_eq!(c.regular.dim(), 5);
    assert!(quotient_witness(&AlgebraHom::identity(l)).is_ok());
}

#[test]
fn non_surjection_is_rejected() {
    let act = zigzag_swap(&gf(7)).unwrap();
    let (_, emb) = invariant_subalgebra(&act).unwrap();
    assert!(matches!(quotient_witness(&emb), Err(Error::NotSurjective)));
}

#[test]
fn tampered_certificates_are_rejected() {
    let c = verify_j_geq(&kronecker_witness(&gf(101)).unwrap(), &opts()).unwrap();
    let rec = c.to_record();
    rec.replay().unwrap();
    let json = rec.to_canonical_json();
    let back = CertificateRecord::from_json(&json).unwrap();
    assert_eq!(back.to_canonical_json(), json);
    back.replay().unwrap();

    let mut bad = rec.clone();
    bad.section[0][0] = if bad.section[0][0] == "0" { "1".into() } else { "0".into() };
    assert!(matches!(bad.replay(), Err(Error::CertificateRejected(_))));
    let mut bad = rec;
    bad.tensor_right[0][0][0] = "5".into();
    assert!(bad.replay().is_err());
}

#[test]
fn certificate_json_is_deterministic() {
    let a = verify_j_geq(&kronecker_witness(&gf(101)).unwrap(), &opts()).unwrap();
    let b = verify_j_geq(&kronecker_witness(&gf(101)).unwrap(), &opts()).unwrap();
    assert_eq!(a.to_record().to_canonical_json(), b.to_record().to_canonical_json());
}

#[test]
fn structural_checks_on_kronecker() {
    let f = gf(101);
    let w = kronecker_witness(&f).unwrap();
    let c = verify_j_geq(&w, &opts()).unwrap();
    assert!(generators_check(&w, &c, &opts()).unwrap());
    assert!(faithful_projinj_check(&w, &c, &opts()).unwrap());
    let q = separable_quality(&w, &c, &opts()).unwrap();
    assert_eq!(q.len(), 4);
    assert!(q.values().any(|v| !v));
}

#[test]
fn projective_injectives_of_small_algebras() {
    let f = gf(5);
    let a2 = linear_path_algebra(&f, 2).unwrap();
    assert_eq!(projective_injectives(&a2).unwrap().len(), 1);
    let d = trunc_poly(&f, 2, "d").unwrap();
    assert_eq!(projective_injectives(&d).unwrap().len(), 1);
}

#[test]
fn k_split_detection() {
    let f = gf(5);
    let a = linear_path_algebra(&f, 2).unwrap();
    let d = trunc_poly(&f, 2, "d").unwrap();
    let e = a.primitive_idempotents().unwrap()[0].clone();
    let p = Bimodule::projective(&a, &e, &d, d.unit());
    assert!(is_k_split(&p, &opts()).unwrap());
    assert!(!is_k_split(&Bimodule::regular(&d), &opts()).unwrap());
    assert!(is_k_split(&Bimodule::zero(&a, &d), &opts()).unwrap());
}

#[test]
fn lrproj_on_sampled_projectives() {
    let f = gf(5);
    let a = linear_path_algebra(&f, 3).unwrap();
    let d = trunc_poly(&f, 2, "d").unwrap();
    for seed in 0..4 {
        let m = sample_projective_bimodule(&a, &d, seed).unwrap();
        let out = lrproj_projectivity_check(&m, &opts()).unwrap();
        assert!(out.left_right_projective && out.conclusion_holds);
    }
    let mut proper = 0;
    for seed in 0..10 {
        let (m, sub) = sample_lrproj_bimodule(&a, &d, seed).unwrap();
        proper += usize::from(sub);
        let out = lrproj_projectivity_check(&m, &opts()).unwrap();
        assert!(out.left_right_projective && out.conclusion_holds);
    }
    assert!(proper > 0);
    let bad = Bimodule::regular(&d);
    assert!(matches!(lrproj_projectivity_check(&bad, &opts()), Err(Error::HypothesisViolated(_))));
    let a2 = linear_path_algebra(&f, 2).unwrap();
    let non_si = Bimodule::regular(&a2);
    assert!(matches!(lrproj_projectivity_check(&non_si, &opts()), Err(Error::HypothesisViolated(_))));
}

#[test]
fn composition_is_transitive() {
    let f = gf(11);
    let chain = truncation_chain(&f);
    let w1 = quotient_witness(&chain[1].1).unwrap();
    let w2 = quotient_witness(&chain[0].1).unwrap();
    let w = compose_witnesses(&w1, &w2).unwrap();
    assert_eq!((w.a.dim(), w.b.dim()), (2, 4));
    verify_j_geq(&w, &opts()).unwrap();
    assert!(compose_witnesses(&w2, &w2).is_err());
}

#[test]
fn opposite_and_tensor_transports() {
    let f = gf(101);
    let w = kronecker_witness(&f).unwrap();
    let op = opposite_witness(&w).unwrap();
    assert_eq!(verify_j_geq(&op, &opts()).unwrap().complement_dim(), 0);
    let c = linear_path_algebra(&f, 2).unwrap();
    let t = tensor_witness(&w, &c).unwrap();
    let cert = verify_j_geq(&t, &opts()).unwrap();
    assert_eq!(cert.regular.dim(), 2 * 3);
}

#[test]
fn group_action_witnesses() {
    let f = gf(7);
    let act = zigzag_swap(&f).unwrap();
    verify_j_geq(&invariants_geq_witness(&act).unwrap(), &opts()).unwrap();
    verify_j_geq(&free_action_witness(&act).unwrap(), &opts()).unwrap();
    let s = skew_splits(&act, &opts()).unwrap();
    assert_eq!(s.skew.dim(), 8);
    let (sec, ret) = &s.restriction_split;
    assert!(ret.mul(sec).is_identity());
    s.multiplication_split.replay().unwrap();
    s.restriction_certificate.replay().unwrap();
}

#[test]
fn equivalence_packaging() {
    let f = gf(7);
    let act = zigzag_swap(&f).unwrap();
    let up = invariants_geq_witness(&act).unwrap();
    let down = free_action_witness(&act).unwrap();
    let (c1, c2) = verify_j_equiv(&up, &down, &opts()).unwrap();
    assert_eq!((c1.direction, c2.direction), (Direction::Equiv, Direction::Equiv));
    let both = package_equivalence(&up, &down).unwrap();
    verify_j_geq(&both, &opts()).unwrap();
    verify_j_geq(&both.reversed(), &opts()).unwrap();
    assert!(verify_j_equiv(&up, &up, &opts()).is_err());
}

#[test]
fn sampled_bimodules_are_indecomposable() {
    let f = gf(5);
    let a = linear_path_algebra(&f, 3).unwrap();
    let b = linear_path_algebra(&f, 2).unwrap();
    let ms = sample_indecomposable_bimodules(&a, &b, 6, 3, &opts()).unwrap();
    assert_eq!(ms.len(), 6);
    for m in &ms {
        assert!(decompose(m, &opts()).unwrap().is_indecomposable());
        assert!(top_dim(m) >= 1);
    }
}

#[test]
fn loewy_report_flags_differences() {
    let f = gf(5);
    let a = linear_path_algebra(&f, 3).unwrap();
    let d = trunc_poly(&f, 2, "d").unwrap();
    let r = loewy_experiment(&[("same".into(), a.clone(), a.clone()), ("diff".into(), a, d)]);
    assert!(r.rows[0].equal && !r.rows[1].equal);
    assert!(!r.conjecture_consistent);
}
