use super::*;
use crate::algebra::quiver::{algebra_from_quiver, linear_path_algebra, QuiverPresentation};
use crate::field::Gfp;
use crate::linalg::nullspace;
use crate::module::{projective_module, simple_modules, Module};
use rand::Rng;

fn gf(p: u64) -> Gfp {
    Gfp::new(p).unwrap()
}

fn a2(f: &Gfp) -> Arc<Algebra<Gfp>> {
    Arc::new(linear_path_algebra(f, 2).unwrap())
}

fn dual_numbers(f: &Gfp) -> Arc<Algebra<Gfp>> {
    let q = QuiverPresentation::new().vertex("1").arrow("x", "1", "1").unwrap().relation("x*x").unwrap();
    Arc::new(algebra_from_quiver(f, &q).unwrap())
}

fn sum_all<R: Rep<Gfp>>(ms: &[R]) -> R {
    ms[1..].iter().fold(ms[0].clone(), |acc, m| acc.direct_sum(m))
}

#[test]
fn endomorphisms_of_simple_and_dual_numbers() {
    let f = gf(7);
    let a = a2(&f);
    for s in simple_modules(&a).unwrap() {
        let e = endomorphism_algebra(&s).unwrap();
        assert_eq!(e.algebra.dim(), 1);
        assert_eq!(e.algebra.radical().dim(), 0);
    }
    let d = dual_numbers(&f);
    let e = endomorphism_algebra(&Module::regular(&d)).unwrap();
    assert_eq!(e.algebra.dim(), 2);
    assert_eq!(e.algebra.radical().dim(), 1);
}

#[test]
fn endomorphisms_of_doubled_projective() {
    // End(P + P) = M_2(End P) and End P = e A e is the field here.
    let f = gf(7);
    let a = a2(&f);
    let idem = a.primitive_idempotents().unwrap().to_vec();
    let (p1, _) = projective_module(&a, &idem[0]);
    let corner = a.corner(&idem[0], &idem[0]).dim();
    let e = endomorphism_algebra(&p1.direct_sum(&p1)).unwrap();
    assert_eq!(e.algebra.dim(), 4 * corner);
    assert_eq!(e.algebra.radical().dim(), 0);
    let (p2, _) = projective_module(&a, &idem[1]);
    let e = endomorphism_algebra(&p1.direct_sum(&p2)).unwrap();
    assert_eq!(e.algebra.dim(), 3);
    assert_eq!(e.algebra.radical().dim(), 1);
}

#[test]
fn idempotents_in_small_algebras() {
    let f = gf(5);
    let k = linear_path_algebra(&f, 1).unwrap();
    assert!(find_nontrivial_idempotent(&k, 0, DEFAULT_BUDGET).unwrap().is_none());
    let kk = algebra_from_quiver(&f, &QuiverPresentation::new().vertices(["1", "2"])).unwrap();
    let e = find_nontrivial_idempotent(&kk, 0, DEFAULT_BUDGET).unwrap().unwrap();
    assert_eq!(kk.mul(&e, &e), e);
    assert!(e == vec![1, 0] || e == vec![0, 1]);
    // End(S + S) is a full matrix algebra.
    let a = a2(&f);
    let s = &simple_modules(&a).unwrap()[0];
    let end = endomorphism_algebra(&s.direct_sum(s)).unwrap();
    let y = find_nontrivial_idempotent(&end.algebra, 3, DEFAULT_BUDGET).unwrap().unwrap();
    let m = end.matrix(&y);
    assert_eq!(m.mul(&m), m);
    assert_eq!(rank(&m), 1);
}

#[test]
fn non_split_field_quotient_is_certified() {
    // GF(3)[x]/(x^2 + 1) = GF(9) is local with a field quotient.
    let f = gf(3);
    let table = vec![vec![(0, 1)], vec![(1, 1)], vec![(1, 1)], vec![(0, 2)]];
    let a = Algebra::new(f, vec!["1".into(), "x".into()], table, vec![1, 0], "gf9").unwrap();
    match search_idempotent(&a, 0, DEFAULT_BUDGET).unwrap() {
        IdempotentSearch::Local(IndecomposabilityCertificate::FieldQuotient { min_poly }) => {
            assert_eq!(min_poly.len(), 3);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn semisimple_multiplicities() {
    let f = gf(7);
    let a = a2(&f);
    let s = simple_modules(&a).unwrap();
    let m = sum_all(&[s[0].clone(), s[1].clone(), s[1].clone()]);
    let d = decompose(&m, &KsOptions::default()).unwrap();
    let mut mult: Vec<usize> = d.classes.iter().map(|c| c.1).collect();
    mult.sort();
    assert_eq!(mult, vec![1, 2]);
    let idem = d.idempotents();
    let mut total = Matrix::zeros(&f, 3, 3);
    for (i, e) in idem.iter().enumerate() {
        assert_eq!(e.mul(e), *e);
        for (j, e2) in idem.iter().enumerate() {
            if i != j {
                assert!(e.mul(e2).is_zero());
            }
        }
        total = total.add(e);
    }
    assert!(total.is_identity());
}

#[test]
fn isomorphism_and_summands() {
    let f = gf(7);
    let a = a2(&f);
    let idem = a.primitive_idempotents().unwrap().to_vec();
    let (p1, _) = projective_module(&a, &idem[0]);
    let s = simple_modules(&a).unwrap();
    let opts = KsOptions::default();
    let id = are_isomorphic(&p1, &p1, &opts).unwrap().unwrap();
    assert_eq!(rank(&id), p1.dim());
    let (fm, gm) = is_direct_summand(&p1, &p1.direct_sum(&s[1]), &opts).unwrap().unwrap();
    assert!(gm.mul(&fm).is_identity());
    // The top of P1 is not a summand of it.
    assert!(is_direct_summand(&s[0], &p1, &opts).unwrap().is_none());
    // A conjugated copy is isomorphic.
    let m = p1.direct_sum(&s[0]);
    let p = Matrix::from_i64(&f, 3, 3, &[1, 2, 0, 0, 1, 3, 1, 0, 2]);
    let mc = m.conjugate(&p).unwrap();
    let iso = are_isomorphic(&m, &mc, &opts).unwrap().unwrap();
    assert!(crate::module::intertwines(&m, &mc, &iso));
    assert_eq!(rank(&iso), 3);
    assert!(are_isomorphic(&m, &p1.direct_sum(&s[1]), &opts).unwrap().is_none());
}

#[test]
fn regular_bimodule_of_connected_algebra_is_indecomposable() {
    let f = gf(7);
    let d = dual_numbers(&f);
    let r = crate::bimodule::Bimodule::regular(&d);
    assert!(decompose(&r, &KsOptions::default()).unwrap().is_indecomposable());
}

// Oracle: intertwiners by one big linear system, idempotents by exhaustive
// enumeration over GF(2).

fn brute_end(m: &Module<Gfp>) -> Vec<Matrix<Gfp>> {
    let f = m.field().clone();
    let n = m.dim();
    let mut rows = Vec::new();
    for act in m.actions() {
        // act X - X act = 0 with X flattened row-major.
        for i in 0..n {
            for j in 0..n {
                let mut r = vec![0u64; n * n];
                for k in 0..n {
                    r[k * n + j] = f.add(&r[k * n + j], act.get(i, k));
                    r[i * n + k] = f.sub(&r[i * n + k], act.get(k, j));
                }
                rows.push(r);
            }
        }
    }
    let sys = Matrix::from_rows(&f, n * n, &rows);
    nullspace(&sys).into_iter().map(|v| Matrix::new(f.clone(), n, n, v)).collect()
}

fn brute_combos(f: &Gfp, basis: &[Matrix<Gfp>], n: usize) -> Vec<Matrix<Gfp>> {
    (0u64..1 << basis.len())
        .map(|mask| {
            let mut x = Matrix::zeros(f, n, n);
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x = x.add(b);
                }
            }
            x
        })
        .collect()
}

/// Maximal splitting by exhaustive idempotent search.
fn brute_split(m: &Module<Gfp>, out: &mut Vec<Module<Gfp>>) {
    let f = m.field().clone();
    let n = m.dim();
    let end = brute_end(m);
    let all = brute_combos(&f, &end, n);
    let e = all.iter().find(|x| x.mul(x) == **x && !x.is_zero() && !x.is_identity());
    match e {
        None => out.push(m.clone()),
        Some(e) => {
            let (s1, r1, s2, r2) = complementary_split(e);
            brute_split(&m.transport(&s1, &r1), out);
            brute_split(&m.transport(&s2, &r2), out);
        }
    }
}

fn brute_iso(x: &Module<Gfp>, y: &Module<Gfp>) -> bool {
    if x.dim() != y.dim() {
        return false;
    }
    let f = x.field().clone();
    let n = x.dim();
    let s = x.direct_sum(y);
    // Hom(x, y) sits in the lower left block of End(x + y).
    let hom: Vec<Matrix<Gfp>> = brute_end(&s)
        .iter()
        .map(|e| e.select_rows(&(n..2 * n).collect::<Vec<_>>()).select_cols(&(0..n).collect::<Vec<_>>()))
        .collect();
    let basis = Subspace::span(&f, n * n, &hom.iter().map(|h| h.data().to_vec()).collect::<Vec<_>>());
    let mats: Vec<Matrix<Gfp>> = basis.basis().iter().map(|v| Matrix::new(f.clone(), n, n, v.clone())).collect();
    brute_combos(&f, &mats, n).iter().any(|h| rank(h) == n)
}

fn random_a2_module(f: &Gfp, a: &Arc<Algebra<Gfp>>, rng: &mut ChaCha8Rng) -> Module<Gfp> {
    let d1 = rng.gen_range(0..=3);
    let d2 = rng.gen_range(0..=3);
    let n = d1 + d2;
    let idem = a.primitive_idempotents().unwrap().to_vec();
    let arrow = a.parse_element("a1").unwrap();
    let e1 = Matrix::from_fn(f, n, n, |i, j| u64::from(i == j && i < d1));
    let e2 = Matrix::from_fn(f, n, n, |i, j| u64::from(i == j && i >= d1));
    let act = Matrix::from_fn(f, n, n, |i, j| if i >= d1 && j < d1 { rng.gen_range(0..2) } else { 0 });
    Module::from_generator_actions(a.clone(), n, &[(idem[0].clone(), e1), (idem[1].clone(), e2), (arrow, act)]).unwrap()
}

#[test]
fn random_gf2_modules_match_exhaustive_oracle() {
    let f = gf(2);
    let a = a2(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for round in 0..80 {
        let m = random_a2_module(&f, &a, &mut rng);
        if m.dim() == 0 || brute_end(&m).len() > 16 {
            continue;
        }
        let mut oracle = Vec::new();
        brute_split(&m, &mut oracle);
        let mut oracle_classes: Vec<usize> = Vec::new();
        for (i, x) in oracle.iter().enumerate() {
            if !oracle[..i].iter().any(|y| brute_iso(x, y)) {
                oracle_classes.push(i);
            }
        }
        let d = decompose(&m, &KsOptions::with_seed(round)).unwrap();
        let mut dims = d.summand_dims();
        dims.sort();
        let mut odims: Vec<usize> = oracle.iter().map(|x| x.dim()).collect();
        odims.sort();
        assert_eq!(dims, odims, "round {round}");
        assert_eq!(d.classes.len(), oracle_classes.len(), "round {round}");
        checked += 1;
    }
    assert!(checked >= 30, "only {checked} cases");
}

#[test]
fn different_seeds_give_the_same_decomposition() {
    let f = gf(3);
    let a = a2(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let m = random_a2_module(&f, &a, &mut rng);
        let d1 = decompose(&m, &KsOptions::with_seed(1)).unwrap();
        let d2 = decompose(&m, &KsOptions::with_seed(99)).unwrap();
        let mut g1: Vec<(usize, usize)> = d1.grouped().iter().map(|(r, k)| (r.dim(), *k)).collect();
        let mut g2: Vec<(usize, usize)> = d2.grouped().iter().map(|(r, k)| (r.dim(), *k)).collect();
        g1.sort();
        g2.sort();
        assert_eq!(g1, g2);
    }
}

#[test]
fn summand_endomorphisms_are_local() {
    let f = gf(3);
    let a = a2(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..10 {
        let m = random_a2_module(&f, &a, &mut rng);
        for s in decompose(&m, &KsOptions::default()).unwrap().summands {
            let e = endomorphism_algebra(&s.module).unwrap();
            let rad = e.algebra.radical();
            let residue = e.algebra.dim() - rad.dim();
            assert_eq!(residue, 1);
            for (i, b) in e.hom.basis.iter().enumerate() {
                let unit = rank(b) == s.module.dim();
                assert!(unit || rad.contains(&e.algebra.basis(i)));
            }
        }
    }
}

#[test]
fn primitive_idempotents_of_product_of_matrix_algebras() {
    // End(S1 + S1 + S2) = M_2(k) x k: three primitive idempotents.
    let f = gf(7);
    let a = a2(&f);
    let s = simple_modules(&a).unwrap();
    let m = sum_all(&[s[0].clone(), s[0].clone(), s[1].clone()]);
    let e = endomorphism_algebra(&m).unwrap();
    let idem = primitive_idempotents_of(&e.algebra, 4).unwrap();
    assert_eq!(idem.len(), 3);
    let mut total = e.algebra.zero_vec();
    for x in &idem {
        assert_eq!(e.algebra.mul(x, x), *x);
        total = crate::linalg::vec_add(&f, &total, x);
    }
    assert_eq!(total, *e.algebra.unit());
}

#[test]
fn decomposition_records_replay() {
    let f = gf(7);
    let a = a2(&f);
    let idem = a.primitive_idempotents().unwrap().to_vec();
    let (p1, _) = projective_module(&a, &idem[0]);
    let s = simple_modules(&a).unwrap();
    let m = sum_all(&[p1, s[0].clone(), s[1].clone()]);
    let rec = decompose(&m, &KsOptions::default()).unwrap().to_record();
    assert_eq!(rec.summands.len(), 3);
    rec.replay().unwrap();
    let back = DecompositionRecord::from_json(&rec.to_canonical_json()).unwrap();
    assert_eq!(back, rec);

    let mut bad = rec.clone();
    bad.idempotents.swap_remove(0);
    bad.summands.swap_remove(0);
    assert!(matches!(bad.replay(), Err(Error::CertificateRejected(_))));
    let mut bad = rec;
    let e = &mut bad.idempotents[0];
    e[0][1] = if e[0][1] == "0" { "1".into() } else { "0".into() };
    assert!(matches!(bad.replay(), Err(Error::CertificateRejected(_))));
}
