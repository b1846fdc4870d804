use super::*;
use crate::algebra::quiver::{algebra_from_quiver, QuiverPresentation};
use crate::field::{Gfp, Rationals};

fn gf(p: u64) -> Gfp {
    Gfp::new(p).unwrap()
}

fn zigzag<F: Field>(f: &F) -> Arc<Algebra<F>> {
    let q = QuiverPresentation::new()
        .vertices(["1", "2"])
        .arrow("al", "1", "2")
        .unwrap()
        .arrow("be", "2", "1")
        .unwrap()
        .relation("al*be")
        .unwrap()
        .relation("be*al")
        .unwrap();
    Arc::new(algebra_from_quiver(f, &q).unwrap())
}

fn cyclic_truncated<F: Field>(f: &F, n: usize, k: usize) -> Arc<Algebra<F>> {
    let mut q = QuiverPresentation::new().vertices((1..=n).map(|i| i.to_string()));
    for i in 1..=n {
        q = q.arrow(&format!("a{i}"), &i.to_string(), &(i % n + 1).to_string()).unwrap();
    }
    for i in 1..=n {
        let path: Vec<String> = (0..k).map(|s| format!("a{}", (i - 1 + s) % n + 1)).collect();
        q = q.relation(&path.join("*")).unwrap();
    }
    Arc::new(algebra_from_quiver(f, &q).unwrap())
}

fn trunc_poly<F: Field>(f: &F, k: usize) -> Arc<Algebra<F>> {
    let rel = vec!["x"; k].join("*");
    let q = QuiverPresentation::new().vertex("1").arrow("x", "1", "1").unwrap().relation(&rel).unwrap();
    Arc::new(algebra_from_quiver(f, &q).unwrap())
}

fn auto<F: Field>(a: &Arc<Algebra<F>>, pairs: &[(&str, &str)]) -> AlgebraHom<F> {
    let ps: Vec<_> = pairs
        .iter()
        .map(|(s, t)| (a.basis(a.label_index(s).unwrap()), a.parse_element(t).unwrap()))
        .collect();
    AlgebraHom::extend_from_generators(a.clone(), a.clone(), &ps).unwrap()
}

fn zigzag_swap<F: Field>(f: &F) -> AlgebraAction<F> {
    let a = zigzag(f);
    let c = auto(&a, &[("e1", "e2"), ("e2", "e1"), ("al", "be"), ("be", "al")]);
    AlgebraAction::cyclic(a, c).unwrap()
}

fn rotation<F: Field>(f: &F, n: usize, k: usize) -> AlgebraAction<F> {
    let a = cyclic_truncated(f, n, k);
    let mut pairs = Vec::new();
    for i in 1..=n {
        let j = i % n + 1;
        pairs.push((format!("e{i}"), format!("e{j}")));
        pairs.push((format!("a{i}"), format!("a{j}")));
    }
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
    let c = auto(&a, &refs);
    AlgebraAction::cyclic(a, c).unwrap()
}

fn negation<F: Field>(f: &F) -> AlgebraAction<F> {
    let a = trunc_poly(f, 2);
    let c = auto(&a, &[("x", "-1*x")]);
    AlgebraAction::cyclic(a, c).unwrap()
}

#[test]
fn group_validation() {
    let g = FiniteGroup::cyclic(6);
    assert_eq!(g.exponent(), 6);
    assert_eq!(g.element_order(2), 3);
    assert!(g.is_abelian());
    let bad = FiniteGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![1, 1]]);
    assert!(matches!(bad, Err(Error::NotAGroup(_))));
    // S3 as permutations of {0,1,2}.
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table = perms
        .iter()
        .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
        .collect();
    let s3 = FiniteGroup::new((0..6).map(|i| i.to_string()).collect(), table).unwrap();
    assert!(!s3.is_abelian());
    assert!(matches!(s3.characters(&gf(7)), Err(Error::NonAbelianGroup)));
}

#[test]
fn characters_are_homomorphisms() {
    let f = gf(13);
    let c2 = FiniteGroup::cyclic(2);
    let c6 = FiniteGroup::cyclic(6);
    let mut table = Vec::new();
    for a in 0..12 {
        table.push((0..12).map(|b| c2.mul(a / 6, b / 6) * 6 + c6.mul(a % 6, b % 6)).collect());
    }
    let g = FiniteGroup::new((0..12).map(|i| i.to_string()).collect(), table).unwrap();
    let chars = g.characters(&f).unwrap();
    assert_eq!(chars.len(), 12);
    for chi in &chars {
        for a in 0..12 {
            for b in 0..12 {
                assert_eq!(chi[g.mul(a, b)], f.mul(&chi[a], &chi[b]));
            }
        }
    }
    assert!(matches!(FiniteGroup::cyclic(3).characters(&Rationals), Err(Error::RootsOfUnityUnavailable(_))));
}

#[test]
fn trivial_action() {
    let f = gf(7);
    let a = zigzag(&f);
    let act = AlgebraAction::trivial(a.clone());
    let (inv, emb) = invariant_subalgebra(&act).unwrap();
    assert_eq!(inv.dim(), a.dim());
    assert!(emb.is_surjective());
    let comps = isotypic_decomposition(&act).unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].space.dim(), a.dim());
    let (skew, iota) = skew_group_algebra(&act).unwrap();
    assert_eq!(skew.dim(), a.dim());
    assert!(iota.is_surjective());
    assert!(verify_free_quiver_action(&act).unwrap());
}

#[test]
fn action_validation() {
    let f = gf(7);
    let a = zigzag(&f);
    let swap = auto(&a, &[("e1", "e2"), ("e2", "e1"), ("al", "be"), ("be", "al")]);
    let id = AlgebraHom::identity(a.clone());
    // Swap does not square to itself, so it cannot represent C2's identity.
    let bad = AlgebraAction::new(FiniteGroup::cyclic(2), a.clone(), vec![swap.clone(), id.clone()]);
    assert!(matches!(bad, Err(Error::NotAutomorphism(_))));
    let ok = AlgebraAction::new(FiniteGroup::cyclic(2), a.clone(), vec![id, swap]).unwrap();
    assert_eq!(ok.group().order(), 2);
}

#[test]
fn zigzag_invariants_are_dual_numbers() {
    let f = gf(7);
    let act = zigzag_swap(&f);
    assert_eq!(act.group().order(), 2);
    let (inv, emb) = invariant_subalgebra(&act).unwrap();
    assert_eq!(inv.dim(), 2);
    let a = act.algebra();
    let s = a.parse_element("al + be").unwrap();
    assert!(is_invariant(&act, &s));
    let image = Subspace::column_space(emb.matrix());
    assert!(image.contains(&s) && image.contains(a.unit()));
    let dual = trunc_poly(&f, 2);
    let x = act.fixed_space().coords(&s).unwrap();
    let iso = AlgebraHom::extend_from_generators(dual.clone(), inv.clone(), &[(dual.basis(dual.label_index("x").unwrap()), x)])
        .unwrap();
    assert!(iso.inverse().is_some());
    assert_eq!(inv.fingerprint().unwrap(), dual.fingerprint().unwrap());
}

#[test]
fn rotation_invariants_are_truncated_polynomials() {
    let f = gf(7);
    for (n, k) in [(2, 2), (3, 2), (3, 3), (4, 2)] {
        let act = rotation(&f, n, k);
        let (inv, _) = invariant_subalgebra(&act).unwrap();
        assert_eq!(inv.dim(), k);
        assert_eq!(inv.dim() * n, act.algebra().dim());
        let a = act.algebra();
        let arrows: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
        let sum = a.parse_element(&arrows.join(" + ")).unwrap();
        let poly = trunc_poly(&f, k);
        let x = act.fixed_space().coords(&sum).unwrap();
        let iso =
            AlgebraHom::extend_from_generators(poly.clone(), inv.clone(), &[(poly.basis(poly.label_index("x").unwrap()), x)])
                .unwrap();
        assert!(iso.inverse().is_some(), "n={n} k={k}");
        assert!(verify_free_quiver_action(&act).unwrap());
    }
}

#[test]
fn isotypic_components() {
    let f = gf(7);
    let act = zigzag_swap(&f);
    let comps = isotypic_decomposition(&act).unwrap();
    assert_eq!(comps.iter().map(|c| c.space.dim()).collect::<Vec<_>>(), vec![2, 2]);
    let a = act.algebra();
    let sign = comps.iter().find(|c| !f.is_one(&c.character[1])).unwrap();
    assert!(sign.space.contains(&a.parse_element("e1 - e2").unwrap()));
    assert!(sign.space.contains(&a.parse_element("al - be").unwrap()));

    let act = rotation(&f, 3, 2);
    let comps = isotypic_decomposition(&act).unwrap();
    assert_eq!(comps.iter().map(|c| c.space.dim()).collect::<Vec<_>>(), vec![2, 2, 2]);

    assert!(matches!(isotypic_decomposition(&rotation(&gf(5), 3, 2)), Err(Error::RootsOfUnityUnavailable(_))));
    assert!(matches!(isotypic_decomposition(&zigzag_swap(&gf(2))), Err(Error::BadCharacteristic(_))));
}

#[test]
fn skew_of_dual_numbers_matches_cyclic_truncation() {
    let f = gf(7);
    let act = negation(&f);
    let (skew, iota) = skew_group_algebra(&act).unwrap();
    assert_eq!(skew.dim(), 4);
    assert_eq!(skew.radical().dim(), 2);
    assert_eq!(skew.radical(), &skew.computed_radical());
    assert_eq!(skew.loewy_length(), 2);
    assert_eq!(skew.fingerprint().unwrap(), cyclic_truncated(&f, 2, 2).fingerprint().unwrap());
    assert!(iota.is_injective());
    assert!(!verify_free_quiver_action(&act).unwrap());
}

#[test]
fn skew_preserves_loewy_length() {
    let f = gf(7);
    for act in [zigzag_swap(&f), rotation(&f, 3, 3), negation(&f)] {
        let (skew, _) = skew_group_algebra(&act).unwrap();
        assert_eq!(skew.dim(), act.algebra().dim() * act.group().order());
        assert_eq!(skew.radical().dim(), act.algebra().radical().dim() * act.group().order());
        assert_eq!(skew.radical(), &skew.computed_radical());
        assert_eq!(skew.loewy_length(), act.algebra().loewy_length());
    }
}

#[test]
fn non_quiver_action_rejected() {
    let f = gf(7);
    let a = zigzag(&f);
    // Inner automorphism by 1 + al moves e1 off the vertex basis.
    let u = a.parse_element("e1 + e2 + al").unwrap();
    let uinv = a.parse_element("e1 + e2 - 1*al").unwrap();
    let m = Matrix::from_cols(&f, a.dim(), &(0..a.dim()).map(|i| a.mul(&a.mul(&u, &a.basis(i)), &uinv)).collect::<Vec<_>>());
    let g = AlgebraHom::new(a.clone(), a.clone(), m).unwrap();
    let act = AlgebraAction::generated(a, vec![("u".into(), g)], 64).unwrap();
    assert_eq!(act.group().order(), 7);
    assert!(matches!(verify_free_quiver_action(&act), Err(Error::NotQuiverCompatible(_))));
}

#[test]
fn action_file() {
    let f = gf(7);
    let text = "algebra zigzag.alg\n# swap\nauto c: e1 -> e2\nauto c: e2 -> e1\nauto c: al -> be\nauto c: be -> al\n";
    let spec = ActionSpec::parse(text).unwrap();
    assert_eq!(spec.algebra_ref, "zigzag.alg");
    let act = spec.build(&zigzag(&f), 64).unwrap();
    assert_eq!(act.group().order(), 2);
    assert!(matches!(ActionSpec::parse("algebra a\nbogus\n"), Err(Error::Parse { line: 2, .. })));
    let bad = ActionSpec::parse("algebra a\nauto c: al -> e1\n").unwrap();
    assert!(bad.build(&zigzag(&f), 64).is_err());
}

#[test]
fn action_text_rebuilds_the_action() {
    let f = gf(7);
    let act = rotation(&f, 3, 2);
    let text = ActionSpec::of(&act, "cycle.alg").to_text();
    let back = ActionSpec::parse(&text).unwrap().build(act.algebra(), 64).unwrap();
    assert_eq!(back.group().order(), 3);
    for g in back.automorphisms() {
        assert!(act.automorphisms().iter().any(|h| h.matrix() == g.matrix()));
    }
}
