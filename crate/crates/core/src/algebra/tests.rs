use super::quiver::{algebra_from_quiver, linear_path_algebra, QuiverPresentation};
use super::*;
use crate::field::{Gfp, Rationals};
use proptest::prelude::*;

fn gf(p: u64) -> Gfp {
    Gfp::new(p).unwrap()
}

/// Cyclic quiver on `n` vertices with all paths of length `k` killed.
fn cyclic(n: usize, k: usize) -> QuiverPresentation {
    let mut q = QuiverPresentation::new().vertices((1..=n).map(|i| i.to_string()));
    for i in 1..=n {
        let t = i % n + 1;
        q = q.arrow(&format!("a{i}"), &i.to_string(), &t.to_string()).unwrap();
    }
    for i in 1..=n {
        let path: Vec<String> = (0..k).map(|s| format!("a{}", (i - 1 + s) % n + 1)).collect();
        q = q.relation(&path.join("*")).unwrap();
    }
    q
}

/// Linear quiver `1 -> 2 -> ... -> n` with paths of length `k` killed.
fn linear_truncated(n: usize, k: usize) -> QuiverPresentation {
    let mut q = QuiverPresentation::new().vertices((1..=n).map(|i| i.to_string()));
    for i in 1..n {
        q = q.arrow(&format!("a{i}"), &i.to_string(), &(i + 1).to_string()).unwrap();
    }
    for i in 1..n {
        if i + k <= n {
            let path: Vec<String> = (i..i + k).map(|s| format!("a{s}")).collect();
            q = q.relation(&path.join("*")).unwrap();
        }
    }
    q
}

/// Number of paths (including trivial ones) with no run of `k` arrows, by
/// walking the quiver.
fn count_paths_shorter_than(q: &QuiverPresentation, k: usize) -> usize {
    let mut total = q.vertices.len();
    let mut frontier: Vec<usize> = q.arrows.iter().map(|a| a.target).collect();
    let mut len = 1;
    while len < k && !frontier.is_empty() {
        total += frontier.len();
        frontier = frontier
            .iter()
            .flat_map(|&v| q.arrows.iter().filter(move |a| a.source == v).map(|a| a.target))
            .collect();
        len += 1;
    }
    total
}

#[test]
fn dual_numbers() {
    let f = gf(5);
    let q = QuiverPresentation::new().vertex("1").arrow("x", "1", "1").unwrap().relation("x*x").unwrap();
    let a = algebra_from_quiver(&f, &q).unwrap();
    assert_eq!(a.dim(), 2);
    assert_eq!(a.labels(), &["e1".to_string(), "x".to_string()]);
    assert_eq!(a.radical().dim(), 1);
    assert_eq!(a.loewy_length(), 2);
}

#[test]
fn a2_has_one_arrow() {
    let f = gf(7);
    let a = linear_path_algebra(&f, 2).unwrap();
    assert_eq!(a.dim(), 3);
    assert_eq!(a.radical().dim(), 1);
    assert_eq!(a.computed_radical(), *a.radical());
}

#[test]
fn cyclic_truncations_match_path_count() {
    let f = gf(101);
    for n in 1..=4 {
        for k in 2..=4 {
            let q = cyclic(n, k);
            let a = algebra_from_quiver(&f, &q).unwrap();
            assert_eq!(a.dim(), count_paths_shorter_than(&q, k), "n={n} k={k}");
            assert_eq!(a.dim(), n * k);
            assert_eq!(a.radical().dim(), n * (k - 1));
            assert_eq!(a.loewy_length(), k);
            assert_eq!(a.computed_radical(), *a.radical());
        }
    }
}

#[test]
fn kronecker_quiver() {
    let f = gf(7);
    let q = QuiverPresentation::new()
        .vertices(["1", "2"])
        .arrow("alpha", "1", "2")
        .unwrap()
        .arrow("beta", "1", "2")
        .unwrap();
    let a = Arc::new(algebra_from_quiver(&f, &q).unwrap());
    assert_eq!(a.dim(), 4);
    assert_eq!(a.radical().dim(), 2);
    assert!(is_connected(&a).unwrap());
}

#[test]
fn infinite_dimensional_is_rejected() {
    let f = gf(7);
    let q = QuiverPresentation::new().vertex("1").arrow("x", "1", "1").unwrap();
    assert!(matches!(algebra_from_quiver(&f, &q), Err(Error::NotFiniteDimensional(_))));
}

#[test]
fn short_relation_is_not_admissible() {
    let f = gf(7);
    let q = QuiverPresentation::new().vertices(["1", "2"]).arrow("a", "1", "2").unwrap().relation("a").unwrap();
    assert!(matches!(algebra_from_quiver(&f, &q), Err(Error::NotAdmissible(_))));
}

#[test]
fn text_format_round_trip() {
    let text = "field GF(7)\nvertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation a*b  # kill it\n";
    let q = QuiverPresentation::parse(text).unwrap();
    assert_eq!(QuiverPresentation::parse(&q.to_text()).unwrap().to_text(), q.to_text());
    let a = algebra_from_quiver(&gf(7), &q).unwrap();
    assert_eq!(a.dim(), 5);
    let err = QuiverPresentation::parse("vertex 1\narrow a 1 -> 1\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 2, .. }));
}

#[test]
fn opposite_is_an_involution() {
    let f = gf(7);
    let a = algebra_from_quiver(&f, &cyclic(3, 2)).unwrap();
    let aa = opposite(&opposite(&a));
    assert_eq!(aa, a);
    assert_eq!(aa.radical(), a.radical());
}

#[test]
fn opposite_reverses_arrows() {
    let f = gf(7);
    let a3 = QuiverPresentation::new()
        .vertices(["1", "2", "3"])
        .arrow("a", "1", "2")
        .unwrap()
        .arrow("b", "3", "2")
        .unwrap();
    let rev = QuiverPresentation::new()
        .vertices(["1", "2", "3"])
        .arrow("a", "2", "1")
        .unwrap()
        .arrow("b", "2", "3")
        .unwrap();
    let op = opposite(&algebra_from_quiver(&f, &a3).unwrap());
    let direct = algebra_from_quiver(&f, &rev).unwrap();
    assert_eq!(op.fingerprint().unwrap(), direct.fingerprint().unwrap());
    assert_eq!(op.cartan_dims().unwrap(), direct.cartan_dims().unwrap());
    // Same labels, and the table agrees after renaming nothing: paths of
    // length one multiply to zero in both.
    assert_eq!(op.labels(), direct.labels());
    assert_eq!(op.table(), direct.table());
    let arrows: Vec<(usize, usize)> = op.quiver().unwrap().arrows.iter().map(|a| (a.source, a.target)).collect();
    assert_eq!(arrows, vec![(1, 0), (1, 2)]);
}

#[test]
fn a2_tensor_a2_op_is_commuting_square() {
    let f = gf(7);
    let a2 = linear_path_algebra(&f, 2).unwrap();
    let t = tensor_product(&a2, &opposite(&a2)).unwrap();
    let square = QuiverPresentation::new()
        .vertices(["11", "12", "21", "22"])
        .arrow("x", "11", "12")
        .unwrap()
        .arrow("y", "12", "22")
        .unwrap()
        .arrow("u", "11", "21")
        .unwrap()
        .arrow("v", "21", "22")
        .unwrap()
        .relation("x*y - u*v")
        .unwrap();
    let s = algebra_from_quiver(&f, &square).unwrap();
    assert_eq!(t.dim(), 9);
    assert_eq!(t.fingerprint().unwrap(), s.fingerprint().unwrap());
    assert_eq!(t.computed_radical(), *t.radical());
}

#[test]
fn tensor_radical_dimension() {
    let f = gf(11);
    let a = algebra_from_quiver(&f, &cyclic(2, 2)).unwrap();
    let b = linear_path_algebra(&f, 3).unwrap();
    let t = tensor_product(&a, &b).unwrap();
    let (ra, rb) = (a.radical().dim(), b.radical().dim());
    assert_eq!(t.radical().dim(), a.dim() * b.dim() - (a.dim() - ra) * (b.dim() - rb));
    assert_eq!(t.computed_radical(), *t.radical());
}

#[test]
fn truncating_polynomials() {
    let f = gf(7);
    let q = QuiverPresentation::new().vertex("1").arrow("x", "1", "1").unwrap().relation("x*x*x").unwrap();
    let a = Arc::new(algebra_from_quiver(&f, &q).unwrap());
    let x2 = a.parse_element("x*x").unwrap();
    let (d, hom) = quotient(&a, &[x2]).unwrap();
    assert_eq!(d.dim(), 2);
    assert!(hom.is_surjective());
    let (same, id) = quotient(&a, &[]).unwrap();
    assert_eq!(same.dim(), 3);
    assert!(id.is_identity());
    assert!(matches!(quotient(&a, &[a.unit().clone()]), Err(Error::IdealIsWholeAlgebra)));
}

#[test]
fn cutting_the_cycle() {
    let f = gf(101);
    for (n, k) in [(3, 2), (4, 3), (3, 3)] {
        let a = Arc::new(algebra_from_quiver(&f, &cyclic(n, k)).unwrap());
        let closing = a.parse_element(&format!("a{n}")).unwrap();
        let (qa, _) = quotient(&a, &[closing]).unwrap();
        let direct = algebra_from_quiver(&f, &linear_truncated(n, k)).unwrap();
        assert_eq!(qa.fingerprint().unwrap(), direct.fingerprint().unwrap());
        assert_eq!(qa.computed_radical(), *qa.radical());
    }
}

#[test]
fn triangular_matrices() {
    let f = gf(7);
    let a = algebra_from_quiver(&f, &cyclic(2, 2)).unwrap();
    for n in 1..=3 {
        let t = triangular_matrix_algebra(&a, n).unwrap();
        assert_eq!(t.dim(), a.dim() * n * (n + 1) / 2);
        assert_eq!(t.loewy_length(), a.loewy_length() + n - 1);
    }
    let t2 = triangular_matrix_algebra(&linear_path_algebra(&f, 1).unwrap(), 2).unwrap();
    assert_eq!(t2.fingerprint().unwrap(), linear_path_algebra(&f, 2).unwrap().fingerprint().unwrap());
}

#[test]
fn semisimple_product_is_disconnected() {
    let f = gf(7);
    let kk = QuiverPresentation::new().vertices(["1", "2"]);
    let a = Arc::new(algebra_from_quiver(&f, &kk).unwrap());
    assert!(a.is_semisimple());
    assert_eq!(a.loewy_length(), 1);
    assert!(!is_connected(&a).unwrap());
    let b = Arc::new(tensor_product(&linear_path_algebra(&f, 2).unwrap(), &a).unwrap());
    assert!(!is_connected(&b).unwrap());
    let c = Arc::new(algebra_from_quiver(&f, &cyclic(3, 2)).unwrap());
    assert!(is_connected(&c).unwrap());
}

#[test]
fn computed_idempotents_without_structure() {
    // Forget the vertex idempotents of kA_3 and recover them.
    let f = gf(7);
    let a = linear_path_algebra(&f, 3).unwrap();
    let bare = Algebra::new(f.clone(), a.labels().to_vec(), a.table().clone(), a.unit().clone(), "bare").unwrap();
    assert_eq!(bare.radical_method(), RadicalMethod::TraceForm);
    assert_eq!(bare.radical(), a.radical());
    let idem = bare.primitive_idempotents().unwrap();
    assert_eq!(idem.len(), 3);
    assert_eq!(bare.fingerprint().unwrap(), a.fingerprint().unwrap());
}

#[test]
fn small_characteristic_radical() {
    // Over GF(2) the trace form is degenerate on kA_4; the generalized
    // trace method must still find the arrow ideal.
    let f = gf(2);
    let a = algebra_from_quiver(&f, &cyclic(2, 3)).unwrap();
    let bare = Algebra::new(f.clone(), a.labels().to_vec(), a.table().clone(), a.unit().clone(), "bare").unwrap();
    assert_eq!(bare.radical_method(), RadicalMethod::GeneralizedTrace);
    assert_eq!(bare.radical(), a.radical());
}

#[test]
fn rationals_work() {
    let q = Rationals;
    let a = algebra_from_quiver(&q, &cyclic(2, 2)).unwrap();
    assert_eq!(a.computed_radical(), *a.radical());
    let x = a.parse_element("1/2*a1 - 3*e1").unwrap();
    assert_eq!(a.format_element(&x), "-3*e1 + 1/2*a1");
}

#[test]
fn fingerprint_display() {
    let a = linear_path_algebra(&gf(7), 2).unwrap();
    assert_eq!(a.fingerprint().unwrap().to_string(), "(3, [3, 1, 0], 2, 2)");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn structural_radical_agrees_with_trace_form(n in 1usize..4, k in 2usize..4, p in prop::sample::select(vec![2u64, 3, 101])) {
        let f = gf(p);
        let a = algebra_from_quiver(&f, &cyclic(n, k)).unwrap();
        prop_assert_eq!(a.computed_radical(), a.radical().clone());
        let op = opposite(&a);
        prop_assert_eq!(op.computed_radical(), op.radical().clone());
    }
}
