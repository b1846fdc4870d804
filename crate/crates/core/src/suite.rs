//! Reproduction suite: the named computations with their checks, run in a
//! fixed order from one seed and collected into a deterministic report.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::quiver::linear_path_algebra;
use crate::algebra::{quotient, Algebra, AlgebraHom};
use crate::bimodule::{hom_to_regular, is_adjoint_pair_witness, is_symmetric, tensor_over, Bimodule};
use crate::catalog::{
    self, kronecker_m_blocks, kronecker_witness, lambda, lambda_rotation, list, trunc_poly, trunc_poly_rotation,
    zigzag_dual_index, zigzag_dual_map, zigzag_dual_tables, zigzag_swap, CatalogRef, Entry,
};
use crate::error::{Error, Result};
use crate::field::{Field, Gfp, Rationals};
use crate::group::{invariant_subalgebra, isotypic_decomposition, verify_free_quiver_action, AlgebraAction};
use crate::jorder::{
    faithful_projinj_check, free_action_witness, generators_check, invariants_geq_witness, is_k_split,
    lrproj_projectivity_check, opposite_witness, quotient_certificate, quotient_witness, sample_indecomposable_bimodules,
    sample_lrproj_bimodule, separable_quality, skew_splits, subalgebra_witnesses, tensor_witness, top_dim,
    verify_j_equiv, verify_j_geq, CertificateRecord, JCertificate, JWitnessPair, LoewyReport, LoewyRow,
};
use crate::krull_schmidt::{are_isomorphic, decompose, derive_seed, KsOptions};
use crate::linalg::{inverse, nullspace, rank, unit_vec, Subspace};
use crate::matrix::Matrix;
use crate::module::{indecomposable_projectives, intertwines, is_self_injective, Module, Rep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub title: String,
    pub checks: Vec<Check>,
    pub certificates: Vec<CertificateRecord>,
    /// Error that stopped the case early.
    pub error: Option<String>,
    pub inconclusive: bool,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub cases: Vec<CaseReport>,
    pub loewy: LoewyReport,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(CaseReport::passed)
    }

    pub fn inconclusive(&self) -> bool {
        self.cases.iter().any(|c| c.inconclusive)
    }

    pub fn case(&self, id: &str) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.id == id)
    }
}

/// Case identifiers and titles in run order.
pub const CASES: [(&str, &str); 14] = [
    ("catalog", "every catalog entry matches its recorded fingerprint"),
    ("c01", "Kronecker witness: M (x)_Theta N is the regular D-bimodule"),
    ("c02", "zigzag algebra with the vertex swap: invariants, dual tables, D(A) = A^c"),
    ("c03", "A (x)_{A^G} A splits into the twists gA for lambda(3, 2) under C3"),
    ("c04", "lambda(n, k) and k[x]/(x^k) are J-equivalent through the rotation invariants"),
    ("c05", "skew group algebras: both splits, radical dimension and Loewy length"),
    ("c06", "quotient witnesses"),
    ("c07", "Krull-Schmidt against exhaustive idempotent enumeration over GF(2)"),
    ("c08", "left-right projective (A3, D)-bimodules are projective; Kronecker witness is not separable"),
    ("c09", "generators and faithful projective-injective checks on every certificate"),
    ("c10", "opposite and tensor transports of the Kronecker certificate"),
    ("c11", "indecomposable A4-A2-bimodules have top of dimension at most 2"),
    ("c12", "Loewy lengths of the equivalent pairs"),
    ("examples", "worked examples: projectivity, adjunction, covers, symmetry"),
];

type StructureJob = Box<dyn Fn(&KsOptions) -> Result<(bool, bool)>>;

struct Ctx {
    structure: Vec<(String, StructureJob)>,
    loewy: Vec<LoewyRow>,
}

impl Ctx {
    fn keep<F: Field + 'static>(&mut self, label: &str, w: &JWitnessPair<F>, c: &JCertificate<F>) {
        let (w, c) = (w.clone(), c.clone());
        self.structure.push((
            label.to_string(),
            Box::new(move |o| Ok((generators_check(&w, &c, o)?, faithful_projinj_check(&w, &c, o)?))),
        ));
    }

    fn loewy<F: Field>(&mut self, label: &str, a: &Algebra<F>, b: &Algebra<F>) {
        let (l, r) = (a.loewy_length(), b.loewy_length());
        self.loewy.push(LoewyRow { label: label.to_string(), left: l, right: r, equal: l == r });
    }
}

struct Case {
    report: CaseReport,
    opts: KsOptions,
}

impl Case {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.report.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    fn cert<F: Field>(&mut self, c: &JCertificate<F>) {
        self.report.certificates.push(c.to_record());
    }

    fn opts(&self, i: u64) -> KsOptions {
        KsOptions { seed: derive_seed(self.opts.seed, i), ..self.opts }
    }
}

type CaseFn = fn(&mut Case, &mut Ctx) -> Result<()>;

const CASE_FNS: [CaseFn; 14] = [
    case_catalog,
    case_kronecker,
    case_zigzag,
    case_twists,
    case_lambda,
    case_skew,
    case_quotients,
    case_oracle,
    case_lrproj,
    case_structure,
    case_transports,
    case_top_bound,
    case_loewy,
    case_examples,
];

/// Runs cases one at a time. Case `c09` checks the certificates of
/// whichever of `c01`..`c06` ran before it, and `c12` the pairs of
/// `c03`..`c05`.
pub struct Suite {
    seed: u64,
    budget: usize,
    ctx: Ctx,
    cases: Vec<CaseReport>,
}

impl Suite {
    pub fn new(seed: u64, budget: usize) -> Self {
        Suite { seed, budget, ctx: Ctx { structure: Vec::new(), loewy: Vec::new() }, cases: Vec::new() }
    }

    /// Runs one case with a seed derived from the suite seed and the case
    /// position.
    pub fn run(&mut self, id: &str) -> Result<&CaseReport> {
        let i = CASES.iter().position(|(c, _)| *c == id).ok_or_else(|| Error::UnknownEntry(id.to_string()))?;
        let mut case = Case {
            report: CaseReport {
                id: id.to_string(),
                title: CASES[i].1.to_string(),
                checks: Vec::new(),
                certificates: Vec::new(),
                error: None,
                inconclusive: false,
            },
            opts: KsOptions { seed: derive_seed(self.seed, i as u64), budget: self.budget },
        };
        if let Err(e) = CASE_FNS[i](&mut case, &mut self.ctx) {
            case.report.inconclusive = matches!(e, Error::Inconclusive(_));
            case.report.error = Some(e.to_string());
        }
        self.cases.push(case.report);
        Ok(self.cases.last().expect("just pushed"))
    }

    pub fn finish(self) -> SuiteReport {
        let conjecture_consistent = self.ctx.loewy.iter().all(|r| r.equal);
        SuiteReport {
            seed: self.seed,
            cases: self.cases,
            loewy: LoewyReport { rows: self.ctx.loewy, conjecture_consistent },
        }
    }
}

/// Runs every case in order.
pub fn run_suite(seed: u64, budget: usize) -> SuiteReport {
    run_cases(seed, budget, &CASES.iter().map(|(id, _)| *id).collect::<Vec<_>>())
}

/// Runs the named cases in suite order.
pub fn run_cases(seed: u64, budget: usize, ids: &[&str]) -> SuiteReport {
    let mut suite = Suite::new(seed, budget);
    for (id, _) in CASES.iter().filter(|(id, _)| ids.contains(id)) {
        suite.run(id).expect("known case");
    }
    suite.finish()
}

fn gf(p: u64) -> Gfp {
    Gfp::new(p).expect("prime")
}

fn arc<F: Field>(a: Result<Algebra<F>>) -> Result<Arc<Algebra<F>>> {
    a.map(Arc::new)
}

fn sample_refs() -> Vec<String> {
    let params = |id: &str| -> &'static str {
        match id {
            "A_n" => "?n=3",
            "kA_n_mod_Rk" => "?m=4&k=3",
            "trunc_poly" => "?k=3",
            "lambda" | "lambda_rot" => "?n=3&k=2",
            "lambda_mid" => "?n=3",
            "auslander" => "?n=2",
            "Qprime" => "?n=2",
            "trunc_poly_rot" => "?k=2&n=2",
            "kronecker_rot" => "?n=2",
            "skew" => "?of=zigzag_c2",
            _ => "",
        }
    };
    list().iter().map(|e| format!("catalog:{}{}", e.id, params(e.id))).collect()
}

fn case_catalog(case: &mut Case, _: &mut Ctx) -> Result<()> {
    let f = gf(catalog::DEFAULT_PRIME);
    for r in sample_refs() {
        let outcome = catalog::build(&f, &CatalogRef::parse(&r)?);
        let detail = match &outcome {
            Ok(e) => e.algebra().fingerprint().map(|fp| fp.to_string()).unwrap_or_default(),
            Err(e) => e.to_string(),
        };
        case.check(r, outcome.is_ok(), detail);
    }
    Ok(())
}

fn kronecker_over<F: Field + 'static>(case: &mut Case, ctx: &mut Ctx, f: &F) -> Result<()> {
    let tag = f.spec().to_string();
    let w = kronecker_witness(f)?;
    let c = verify_j_geq(&w, &case.opts)?;
    case.check(format!("{tag}: tensor_dim = 2"), c.tensor_dim() == 2, c.tensor_dim().to_string());
    case.check(format!("{tag}: complement X = 0"), c.complement_dim() == 0, c.complement_dim().to_string());
    case.check(format!("{tag}: split pair replays"), c.replay().is_ok(), "");
    let iso = are_isomorphic(&c.tensor, &Bimodule::regular(&w.a), &case.opts)?;
    case.check(format!("{tag}: M (x) N is isomorphic to the regular D-bimodule"), iso.is_some(), "");
    case.cert(&c);
    ctx.keep(&format!("kronecker {tag}"), &w, &c);
    Ok(())
}

fn case_kronecker(case: &mut Case, ctx: &mut Ctx) -> Result<()> {
    kronecker_over(case, ctx, &gf(101))?;
    kronecker_over(case, ctx, &Rationals)
}

fn case_zigzag(case: &mut Case, _: &mut Ctx) -> Result<()> {
    let f = gf(catalog::DEFAULT_PRIME);
    let act = zigzag_swap(&f)?;
    let a = act.algebra().clone();
    let (inv, emb) = invariant_subalgebra(&act)?;
    let image = Subspace::column_space(emb.matrix());
    let expected = Subspace::span(&f, a.dim(), &[a.unit().clone(), a.parse_element("al + be")?]);
    case.check("invariants = span{1, al + be}", image.is_subspace_of(&expected) && expected.is_subspace_of(&image), "");
    let fp = inv.fingerprint()?.to_string();
    case.check("invariants have the dual-numbers fingerprint", fp == "(2, [2, 1, 0], 1, 2)", fp);
    let dims: Vec<usize> = isotypic_decomposition(&act)?.iter().map(|c| c.space.dim()).collect();
    case.check("isotypic components 2 + 2", dims == [2, 2], format!("{dims:?}"));

    let dual = Bimodule::regular(&a).dual();
    let (left, right) = zigzag_dual_tables();
    let vec_of = |name: &str| zigzag_dual_index(&a, name).map(|i| unit_vec(&f, 4, i));
    let mut mismatches = Vec::new();
    for el in ["e1", "e2", "al", "be"] {
        let x = a.parse_element(el)?;
        for fname in ["f1", "f2", "f_al", "f_be"] {
            let v = vec_of(fname).ok_or_else(|| Error::InvalidInput(format!("no dual vector {fname}")))?;
            for (side, table, got) in [
                ("left", &left, dual.act_left(&x).mul_vec(&v)),
                ("right", &right, dual.act_right(&x).mul_vec(&v)),
            ] {
                let want = table
                    .iter()
                    .find(|(e, d, _)| *e == el && *d == fname)
                    .and_then(|(_, _, r)| vec_of(r))
                    .unwrap_or_else(|| vec![f.zero(); 4]);
                if got != want {
                    mismatches.push(format!("{side} {el} on {fname}"));
                }
            }
        }
    }
    case.check("dual-basis action tables reproduced entry for entry", mismatches.is_empty(), mismatches.join(", "));

    let phi = zigzag_dual_map(&a)?;
    let c = &act.automorphisms()[1];
    let twisted = Bimodule::regular(&a).twist_right(c)?;
    let ok = inverse(&phi).is_some() && intertwines(&dual, &twisted, &phi);
    case.check("f_al -> e1, f_be -> e2, f2 -> al, f1 -> be is an isomorphism D(A) -> A^c", ok, "");
    let untwisted = are_isomorphic(&dual, &Bimodule::regular(&a), &case.opts)?;
    case.check("D(A) is not the untwisted regular bimodule", untwisted.is_none(), "");
    Ok(())
}

fn case_twists(case: &mut Case, ctx: &mut Ctx) -> Result<()> {
    let f = gf(7);
    let act = lambda_rotation(&f, 3, 2)?;
    let a = act.algebra().clone();
    let (inv, emb) = invariant_subalgebra(&act)?;
    let t = tensor_over(&Bimodule::regular_restricted_right(&emb), &Bimodule::regular_restricted_left(&emb))?;
    let dim = t.bimodule.dim();
    case.check("dim A (x)_{A^G} A = |G| dim A = 18", dim == 18, dim.to_string());
    let d = decompose(&t.bimodule, &case.opts(1))?;
    let dims = d.summand_dims();
    case.check("three indecomposable summands of dim 6", dims == [6, 6, 6], format!("{dims:?}"));
    case.check("summands pairwise non-isomorphic", d.classes.len() == 3, d.classes.len().to_string());
    let twists: Vec<Bimodule<Gfp>> =
        act.automorphisms().iter().map(|g| Bimodule::regular(&a).twist_left(g)).collect::<Result<_>>()?;
    let mut matched = Vec::new();
    for s in &d.summands {
        let mut hit = None;
        for (gi, tw) in twists.iter().enumerate() {
            if are_isomorphic(&s.module, tw, &case.opts(2))?.is_some() {
                hit = Some(gi);
                break;
            }
        }
        matched.push(hit);
    }
    case.check("each summand is a twist gA", matched.iter().all(Option::is_some), format!("{matched:?}"));
    let mut distinct: Vec<usize> = matched.iter().flatten().copied().collect();
    distinct.sort();
    distinct.dedup();
    case.check("the twists by e, c, c^2 all occur", distinct.len() == 3, format!("{distinct:?}"));
    let regular = matched.iter().filter(|m| **m == Some(0)).count();
    case.check("exactly one summand is the regular bimodule", regular == 1, regular.to_string());

    let up = invariants_geq_witness(&act)?;
    let down = free_action_witness(&act)?;
    let (c1, c2) = verify_j_equiv(&up, &down, &case.opts(3))?;
    case.check("A^G >= A and A >= A^G certificates verify", true, format!("{} / {}", c1.tensor_dim(), c2.tensor_dim()));
    case.cert(&c1);
    case.cert(&c2);
    ctx.keep("lambda(3,2) invariants up", &up, &c1);
    ctx.keep("lambda(3,2) invariants down", &down, &c2);
    ctx.loewy("lambda(3,2) ~ invariants under C3", &a, &inv);
    Ok(())
}

/// The isomorphism `k[x]/(x^k) -> A^G`, `x -> sum of arrows`.
fn rotation_iso<F: Field>(act: &AlgebraAction<F>, n: usize, k: usize) -> Result<AlgebraHom<F>> {
    let f = act.algebra().field();
    let a = act.algebra();
    let (inv, _) = invariant_subalgebra(act)?;
    let poly = trunc_poly(f, k, &CatalogRef::new("trunc_poly", &[("k", k)]).to_string())?;
    let arrows: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let sum = a.parse_element(&arrows.join(" + "))?;
    let x = act
        .fixed_space()
        .coords(&sum)
        .ok_or_else(|| Error::InvalidInput("sum of arrows is not invariant".into()))?;
    let xi = poly.label_index("x").expect("x in k[x]/(x^k)");
    AlgebraHom::extend_from_generators(poly.clone(), inv, &[(poly.basis(xi), x)])
}

fn case_lambda(case: &mut Case, ctx: &mut Ctx) -> Result<()> {
    let f = gf(catalog::DEFAULT_PRIME);
    for (i, (n, k)) in [(2usize, 2usize), (3, 2), (3, 3)].into_iter().enumerate() {
        let tag = format!("lambda({n},{k})");
        let act = lambda_rotation(&f, n, k)?;
        case.check(format!("{tag}: rotation acts freely on the quiver"), verify_free_quiver_action(&act)?, "");
        let iso = rotation_iso(&act, n, k)?;
        let inv_hom = iso.inverse();
        let ok = match &inv_hom {
            Some(g) => {
                AlgebraHom::new(g.source().clone(), g.target().clone(), g.matrix().clone()).is_ok()
                    && g.compose(&iso)?.is_identity()
                    && iso.compose(g)?.is_identity()
            }
            None => false,
        };
        case.check(format!("{tag}: x^j -> a_j is an algebra isomorphism with inverse"), ok, "");
        let (_, emb) = invariant_subalgebra(&act)?;
        let phi = emb.compose(&iso)?;
        let (up, down) = subalgebra_witnesses(&phi)?;
        let (c1, c2) = verify_j_equiv(&up, &down, &case.opts(i as u64))?;
        case.check(format!("{tag}: both direction certificates verify"), c1.replay().is_ok() && c2.replay().is_ok(), "");
        for (dir, w, c) in [("up", &up, &c1), ("down", &down, &c2)] {
            let q = separable_quality(w, c, &case.opts(10 + i as u64))?;
            let lr = q["m_left_right_projective"] && q["n_left_right_projective"];
            case.check(format!("{tag} {dir}: witnesses are left-right projective"), lr, format!("{q:?}"));
            case.cert(c);
            ctx.keep(&format!("{tag} {dir}"), w, c);
        }
        ctx.loewy(&format!("{tag} ~ k[x]/(x^{k})"), &up.a, &up.b);
    }
    Ok(())
}

fn skew_case<F: Field + 'static>(case: &mut Case, ctx: &mut Ctx, tag: &str, act: &AlgebraAction<F>, i: u64) -> Result<()> {
    let a = act.algebra().clone();
    let g = act.group().order();
    let s = skew_splits(act, &case.opts(i))?;
    let (sec, ret) = &s.restriction_split;
    let restricted = Bimodule::regular(&s.skew).restrict_both(&s.embedding);
    let regular = Bimodule::regular(&a);
    let ok = ret.mul(sec).is_identity() && intertwines(&regular, &restricted, sec) && intertwines(&restricted, &regular, ret);
    case.check(format!("{tag}: A is an A-A-summand of A*G"), ok, "");
    case.check(format!("{tag}: A*G is a summand of A*G (x)_A A*G"), s.multiplication_split.replay().is_ok(), "");
    case.check(format!("{tag}: A >= A*G certificate verifies"), s.restriction_certificate.replay().is_ok(), "");
    let rad = s.skew.computed_radical().dim();
    let want = a.computed_radical().dim() * g;
    case.check(format!("{tag}: dim rad(A*G) = |G| dim rad(A)"), rad == want, format!("{rad} vs {want}"));
    let (la, ls) = (a.loewy_length(), s.skew.loewy_length());
    case.check(format!("{tag}: equal Loewy lengths"), la == ls, format!("{la} vs {ls}"));
    let (up, down) = subalgebra_witnesses(&s.embedding)?;
    case.cert(&s.multiplication_split);
    case.cert(&s.restriction_certificate);
    ctx.keep(&format!("{tag} multiplication"), &up, &s.multiplication_split);
    ctx.keep(&format!("{tag} restriction"), &down, &s.restriction_certificate);
    ctx.loewy(&format!("{tag}: A ~ A*G"), &a, &s.skew);
    Ok(())
}

fn case_skew(case: &mut Case, ctx: &mut Ctx) -> Result<()> {
    let f = gf(catalog::DEFAULT_PRIME);
    skew_case(case, ctx, "zigzag*C2", &zigzag_swap(&f)?, 1)?;
    skew_case(case, ctx, "k[x]/(x^2)*C2", &trunc_poly_rotation(&f, 2, 2)?, 2)
}

fn case_quotients(case: &mut Case, ctx: &mut Ctx) -> Result<()> {
    let f = gf(catalog::DEFAULT_PRIME);
    let cubic = trunc_poly(&f, 3, &CatalogRef::new("trunc_poly", &[("k", 3)]).to_string())?;
    let (_, phi) = quotient(&cubic, &[cubic.parse_element("x*x")?])?;
    let c = quotient_certificate(&phi)?;
    case.check("k[x]/(x^3) -> k[x]/(x^2): tensor_dim = 2", c.tensor_dim() == 2, c.tensor_dim().to_string());
    case.check("k[x]/(x^3) -> k[x]/(x^2): X = 0", c.complement_dim() == 0, c.complement_dim().to_string());
    let searched = verify_j_geq(&quotient_witness(&phi)?, &case.opts(1))?;
    case.check("k[x]/(x^3) -> k[x]/(x^2): search agrees", searched.complement_dim() == 0, "");
    case.cert(&c);
    ctx.keep("k[x]/(x^3) -> k[x]/(x^2)", &quotient_witness(&phi)?, &c);

    let l = lambda(&f, 3, 2, &CatalogRef::new("lambda", &[("n", 3), ("k", 2)]).to_string())?;
    let (q, phi) = quotient(&l, &[l.parse_element("a3")?])?;
    let line = catalog::build_algebra(&f, &CatalogRef::new("A_n", &[("n", 3)]))?;
    let same = q.fingerprint()? == line.fingerprint()?;
    case.check("lambda(3,2) / (a3) has the fingerprint of kA3/R^2", same, q.fingerprint()?.to_string());
    let c = quotient_certificate(&phi)?;
    case.check("lambda(3,2) -> kA3/R^2 certificate verifies", c.replay().is_ok(), c.tensor_dim().to_string());
    case.cert(&c);
    ctx.keep("lambda(3,2) -> kA3/R^2", &quotient_witness(&phi)?, &c);
    Ok(())
}

/// Largest number of endomorphisms enumerated per idempotent search.
pub const ORACLE_CAP: u64 = 1 << 24;

/// Summand dimensions of a module over GF(2) by enumerating `End(M)` in
/// Gray-code order until a nontrivial idempotent appears, splitting
/// recursively. A summand is declared indecomposable only after the whole
/// of its endomorphism ring has been enumerated; `None` when that would
/// take more than [`ORACLE_CAP`] steps.
pub fn gf2_oracle_split(m: &Module<Gfp>) -> Option<Vec<usize>> {
    let f = m.field().clone();
    assert_eq!(f.characteristic(), 2);
    let n = m.dim();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut rows = Vec::new();
    for act in m.actions() {
        for i in 0..n {
            for j in 0..n {
                let mut r = vec![0u64; n * n];
                for k in 0..n {
                    r[k * n + j] ^= *act.get(i, k);
                    r[i * n + k] ^= *act.get(k, j);
                }
                rows.push(r);
            }
        }
    }
    let basis = nullspace(&Matrix::from_rows(&f, n * n, &rows));
    let bits: Vec<Vec<u64>> =
        basis.iter().map(|v| (0..n).map(|i| (0..n).fold(0, |acc, j| acc | (v[i * n + j] << j))).collect()).collect();
    let id: Vec<u64> = (0..n).map(|i| 1 << i).collect();
    let mut x = vec![0u64; n];
    let mut found = None;
    let total = 1u64.checked_shl(basis.len() as u32).unwrap_or(u64::MAX);
    for step in 1u64..total {
        if step > ORACLE_CAP {
            return None;
        }
        for (xr, br) in x.iter_mut().zip(&bits[step.trailing_zeros() as usize]) {
            *xr ^= br;
        }
        if x.iter().all(|r| *r == 0) || x == id {
            continue;
        }
        let sq: Vec<u64> = x
            .iter()
            .map(|r| (0..n).filter(|j| r >> j & 1 == 1).fold(0, |acc, j| acc ^ x[j]))
            .collect();
        if sq == x {
            found = Some(x.clone());
            break;
        }
    }
    let Some(e) = found else { return Some(vec![n]) };
    let e = Matrix::from_fn(&f, n, n, |i, j| e[i] >> j & 1);
    let one_minus = Matrix::identity(&f, n).sub(&e);
    let s1 = Subspace::column_space(&e).basis_matrix();
    let s2 = Subspace::column_space(&one_minus).basis_matrix();
    let k = s1.cols();
    let p = Matrix::from_fn(&f, n, n, |i, j| if j < k { *s1.get(i, j) } else { *s2.get(i, j - k) });
    let pinv = inverse(&p).expect("complementary images span");
    let r1 = Matrix::from_fn(&f, k, n, |i, j| *pinv.get(i, j));
    let r2 = Matrix::from_fn(&f, n - k, n, |i, j| *pinv.get(k + i, j));
    let mut out = gf2_oracle_split(&m.transport(&s1, &r1))?;
    out.extend(gf2_oracle_split(&m.transport(&s2, &r2))?);
    Some(out)
}

/// A random module of dimension at most 6 over `k A_2` or `k[x]/(x^2)`
/// over GF(2).
pub fn random_small_module(a: &Arc<Algebra<Gfp>>, seed: u64) -> Result<Module<Gfp>> {
    let f = a.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if a.simple_count()? == 2 {
        let (d1, d2) = loop {
            let (d1, d2) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
            if d1 + d2 > 0 {
                break (d1, d2);
            }
        };
        let n = d1 + d2;
        let idem = a.primitive_idempotents()?.to_vec();
        let arrow = a.parse_element("a1")?;
        let e1 = Matrix::from_fn(&f, n, n, |i, j| u64::from(i == j && i < d1));
        let e2 = Matrix::from_fn(&f, n, n, |i, j| u64::from(i == j && i >= d1));
        let act = Matrix::from_fn(&f, n, n, |i, j| if i >= d1 && j < d1 { rng.gen_range(0..2) } else { 0 });
        Module::from_generator_actions(a.clone(), n, &[(idem[0].clone(), e1), (idem[1].clone(), e2), (arrow, act)])
    } else {
        let n = rng.gen_range(1..=6);
        let r = rng.gen_range(0..=n / 2);
        let jordan = Matrix::from_fn(&f, n, n, |i, j| u64::from(j < 2 * r && j % 2 == 0 && i == j + 1));
        let p = loop {
            let p = Matrix::from_fn(&f, n, n, |_, _| rng.gen_range(0..2));
            if rank(&p) == n {
                break p;
            }
        };
        let x = p.mul(&jordan).mul(&inverse(&p).expect("invertible"));
        let xe = a.parse_element("x")?;
        Module::from_generator_actions(a.clone(), n, &[(a.unit().clone(), Matrix::identity(&f, n)), (xe, x)])
    }
}

/// Per algebra: (label, cases, agreements, mismatches, inconclusive, oracle skips).
pub type OracleTally = (String, usize, usize, usize, usize, usize);

pub fn oracle_comparison(seed: u64, count: usize, budget: usize) -> Result<Vec<OracleTally>> {
    let f = gf(2);
    let a2 = arc(linear_path_algebra(&f, 2))?;
    let d = trunc_poly(&f, 2, "catalog:trunc_poly?k=2")?;
    let mut out = Vec::new();
    for (ai, (label, a)) in [("kA2", a2), ("k[x]/(x^2)", d)].into_iter().enumerate() {
        let (mut agree, mut mismatch, mut inconclusive, mut skipped) = (0, 0, 0, 0);
        for i in 0..count {
            let s = derive_seed(derive_seed(seed, ai as u64), i as u64);
            let m = random_small_module(&a, s)?;
            let mut dims = match decompose(&m, &KsOptions { seed: s, budget }) {
                Ok(dcmp) => dcmp.summand_dims(),
                Err(Error::Inconclusive(_)) => {
                    inconclusive += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let Some(mut oracle) = gf2_oracle_split(&m) else {
                skipped += 1;
                continue;
            };
            dims.sort();
            oracle.sort();
            if dims == oracle {
                agree += 1;
            } else {
                mismatch += 1;
            }
        }
        out.push((label.to_string(), count, agree, mismatch, inconclusive, skipped));
    }
    Ok(out)
}

fn case_oracle(case: &mut Case, _: &mut Ctx) -> Result<()> {
    for (label, count, agree, mismatch, inconclusive, skipped) in oracle_comparison(case.opts.seed, 200, case.opts.budget)? {
        let detail = format!("{agree}/{count} agree, {mismatch} mismatches, {inconclusive} inconclusive, {skipped} beyond the oracle cap");
        case.check(format!("{label}: decompositions match the oracle"), mismatch == 0 && skipped == 0, detail.clone());
        case.check(format!("{label}: no inconclusive decompositions"), inconclusive == 0, detail);
    }
    Ok(())
}

fn case_lrproj(case: &mut Case, _: &mut Ctx) -> Result<()> {
    let f = gf(catalog::DEFAULT_PRIME);
    let a3 = arc(linear_path_algebra(&f, 3))?;
    let d = trunc_poly(&f, 2, "catalog:trunc_poly?k=2")?;
    let (mut lr, mut holds, mut proper) = (0, 0, 0);
    let total = 100;
    for i in 0..total {
        let (m, sub) = sample_lrproj_bimodule(&a3, &d, derive_seed(case.opts.seed, i))?;
        proper += usize::from(sub);
        let out = lrproj_projectivity_check(&m, &case.opts(i))?;
        lr += usize::from(out.left_right_projective);
        holds += usize::from(out.left_right_projective && out.conclusion_holds);
    }
    case.check("samples are left-right projective", lr == total as usize, format!("{lr}/{total}, {proper} proper sub-bimodules"));
    case.check("every sample decomposes into projective bimodules", holds == total as usize, format!("{holds}/{total}"));
    let w = kronecker_witness(&f)?;
    let c = verify_j_geq(&w, &case.opts(1000))?;
    let q = separable_quality(&w, &c, &case.opts(1001))?;
    let some_false = q.get("m_left_right_projective") == Some(&false) || q.get("n_left_right_projective") == Some(&false);
    case.check("Kronecker witness has a witness that is not left-right projective", some_false, format!("{q:?}"));
    Ok(())
}

fn case_structure(case: &mut Case, ctx: &mut Ctx) -> Result<()> {
    case.check("certificates available", !ctx.structure.is_empty(), ctx.structure.len().to_string());
    for (i, (label, job)) in ctx.structure.iter().enumerate() {
        let (gens, faithful) = job(&case.opts(i as u64))?;
        case.check(format!("{label}: projective covers are generators"), gens, "");
        case.check(format!("{label}: faithful with all projective-injectives"), faithful, "");
    }
    Ok(())
}

fn case_transports(case: &mut Case, _: &mut Ctx) -> Result<()> {
    let f = gf(catalog::DEFAULT_PRIME);
    let w = kronecker_witness(&f)?;
    let op = opposite_witness(&w)?;
    let c = verify_j_geq(&op, &case.opts(1))?;
    case.check("opposite witness verifies", c.complement_dim() == 0, c.tensor_dim().to_string());
    case.cert(&c);
    let a2 = arc(linear_path_algebra(&f, 2))?;
    let t = tensor_witness(&w, &a2)?;
    let c = verify_j_geq(&t, &case.opts(2))?;
    case.check("witness tensored with kA2 verifies", c.regular.dim() == 6, format!("tensor_dim {}", c.tensor_dim()));
    case.cert(&c);
    Ok(())
}

fn case_top_bound(case: &mut Case, _: &mut Ctx) -> Result<()> {
    let f = gf(catalog::DEFAULT_PRIME);
    let a4 = arc(linear_path_algebra(&f, 4))?;
    let a2 = arc(linear_path_algebra(&f, 2))?;
    let ms = sample_indecomposable_bimodules(&a4, &a2, 50, case.opts.seed, &case.opts)?;
    let tops: Vec<usize> = ms.iter().map(top_dim).collect();
    let worst = tops.iter().copied().max().unwrap_or(0);
    case.check("50 samples", ms.len() == 50, ms.len().to_string());
    case.check("dim top <= 2 for every sample", worst <= 2, format!("max {worst}"));
    Ok(())
}

fn case_loewy(case: &mut Case, ctx: &mut Ctx) -> Result<()> {
    case.check("pairs available", !ctx.loewy.is_empty(), ctx.loewy.len().to_string());
    for row in &ctx.loewy {
        case.check(format!("{}: equal Loewy lengths", row.label), row.equal, format!("{} vs {}", row.left, row.right));
    }
    Ok(())
}

fn case_examples(case: &mut Case, _: &mut Ctx) -> Result<()> {
    let f = gf(catalog::DEFAULT_PRIME);
    let w = kronecker_witness(&f)?;
    let (alpha, beta, x) = kronecker_m_blocks();
    let block = |m: &Matrix<Gfp>, r: usize, c: usize| -> [[i64; 2]; 2] {
        let e = |i, j| f.format(m.get(2 * r + i, 2 * c + j)).parse::<i64>().unwrap_or(-1);
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    };
    let al = w.m.act_right(&w.b.parse_element("al")?);
    let be = w.m.act_right(&w.b.parse_element("be")?);
    let xm = w.m.act_left(&w.a.parse_element("x")?);
    let ok = block(&al, 0, 1) == alpha && block(&be, 0, 1) == beta && block(&xm, 0, 0) == x && block(&xm, 1, 1) == x;
    case.check("Kronecker M: displayed action matrices", ok, "");
    let left = decompose(&w.m.restrict_left(), &case.opts(1))?;
    let reg = Module::regular(&w.a);
    let mut free = left.summands.len() == 2;
    for s in &left.summands {
        free &= are_isomorphic(&s.module, &reg, &case.opts(2))?.is_some();
    }
    case.check("Kronecker M is free of rank 2 over D", free, format!("{:?}", left.summand_dims()));
    let hom = hom_to_regular(&w.m)?;
    case.check("N = Hom_D(M, D)", are_isomorphic(&hom, &w.n, &case.opts(3))?.is_some(), "");
    case.check("(M (x) -, N (x) -) is an adjoint pair", is_adjoint_pair_witness(&w.m, &w.n, &case.opts(4))?.holds, "");

    let a2 = arc(linear_path_algebra(&f, 2))?;
    let d = trunc_poly(&f, 2, "catalog:trunc_poly?k=2")?;
    for (tag, a) in [("kA2", &a2), ("k[x]/(x^2)", &d)] {
        let cover = Bimodule::regular(a).projective_cover()?;
        let want: usize = indecomposable_projectives(a)?
            .iter()
            .zip(indecomposable_projectives(&Arc::new(crate::algebra::opposite(a)))?)
            .map(|(p, q)| p.dim() * q.dim())
            .sum();
        let ok = cover.is_projective()? && cover.dim() == want;
        case.check(format!("{tag}: projective cover of A is the sum of P_i (x) P_i'"), ok, format!("{} vs {want}", cover.dim()));
    }
    let mut all = true;
    for e in a2.primitive_idempotents()? {
        for g in d.primitive_idempotents()? {
            let p = Bimodule::projective(&a2, e, &d, g);
            all &= p.is_projective()? && p.is_left_right_projective()? && is_k_split(&p, &case.opts(5))?;
        }
    }
    case.check("P_i (x) Q_j: projective, left-right projective, k-split", all, "");
    let zig = catalog::build_algebra(&f, &CatalogRef::new("zigzag", &[]))?;
    let mut lr = true;
    for a in [&a2, &d, &zig] {
        lr &= Bimodule::regular(a).is_left_right_projective()?;
    }
    case.check("regular bimodules are left-right projective", lr, "");
    for k in [2, 3] {
        let t = trunc_poly(&f, k, "trunc")?;
        case.check(format!("k[x]/(x^{k}) is symmetric"), is_symmetric(&t, &case.opts(6))?, "");
    }
    let l = catalog::build_algebra(&f, &CatalogRef::new("lambda", &[("n", 2), ("k", 2)]))?;
    case.check("lambda(2,2) is self-injective", is_self_injective(&l)?, "");
    case.check("lambda(2,2) is not symmetric", !is_symmetric(&l, &case.opts(7))?, "");
    let e = catalog::build(&f, &CatalogRef::parse("catalog:lambda_rot?n=3&k=2")?)?;
    if let Entry::Action(act) = e {
        case.check("rotation acts freely on the cyclic quiver", verify_free_quiver_action(&act)?, "");
    }
    Ok(())
}
