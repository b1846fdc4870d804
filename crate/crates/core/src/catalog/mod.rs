//! Named algebras, group actions and witness bimodules, addressed by
//! `catalog:<id>?<param>=<value>&...` references.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::quiver::{algebra_from_quiver, QuiverPresentation};
use crate::algebra::{Algebra, AlgebraHom, Fingerprint};
use crate::bimodule::{hom_to_regular, Bimodule};
use crate::error::{Error, Result};
use crate::field::{is_prime, Field};
use crate::group::{skew_group_algebra, AlgebraAction};
use crate::jorder::JWitnessPair;
use crate::matrix::Matrix;

pub const DEFAULT_PRIME: u64 = 101;

/// A parsed catalog reference.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CatalogRef {
    pub id: String,
    pub params: BTreeMap<String, String>,
}

impl CatalogRef {
    pub fn new(id: &str, params: &[(&str, usize)]) -> Self {
        CatalogRef {
            id: id.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        }
    }

    /// Parses `catalog:id?k=v&...`; the `catalog:` prefix is optional.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.strip_prefix("catalog:").unwrap_or(s);
        let (id, query) = body.split_once('?').unwrap_or((body, ""));
        if id.is_empty() {
            return Err(Error::UnknownEntry(s.to_string()));
        }
        let mut params = BTreeMap::new();
        for kv in query.split('&').filter(|t| !t.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::BadParams(format!("expected key=value, got `{kv}`")))?;
            params.insert(k.to_string(), v.to_string());
        }
        Ok(CatalogRef { id: id.to_string(), params })
    }

    fn usize_param(&self, key: &str, min: usize, max: usize) -> Result<usize> {
        let raw = self
            .params
            .get(key)
            .ok_or_else(|| Error::BadParams(format!("{}: missing parameter `{key}`", self.id)))?;
        let v: usize = raw
            .parse()
            .map_err(|_| Error::BadParams(format!("{}: `{key}` must be a non-negative integer", self.id)))?;
        if v < min || v > max {
            return Err(Error::BadParams(format!("{}: `{key}` = {v} outside {min}..={max}", self.id)));
        }
        Ok(v)
    }

    fn allow_only(&self, keys: &[&str]) -> Result<()> {
        for k in self.params.keys() {
            if !keys.contains(&k.as_str()) {
                return Err(Error::BadParams(format!("{}: unexpected parameter `{k}`", self.id)));
            }
        }
        Ok(())
    }

    /// The reference of the action named by a `skew` entry.
    fn inner_action(&self) -> Result<CatalogRef> {
        let of = self
            .params
            .get("of")
            .ok_or_else(|| Error::BadParams("skew: missing parameter `of`".into()))?;
        let params = self.params.iter().filter(|(k, _)| *k != "of").map(|(k, v)| (k.clone(), v.clone())).collect();
        Ok(CatalogRef { id: of.clone(), params })
    }
}

impl fmt::Display for CatalogRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "catalog:{}", self.id)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { '?' } else { '&' })?;
        }
        Ok(())
    }
}

/// What an entry builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Algebra,
    Action,
    Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EntryInfo {
    pub id: &'static str,
    pub params: &'static str,
    pub kind: EntryKind,
    pub description: &'static str,
}

pub fn list() -> Vec<EntryInfo> {
    use EntryKind::*;
    let e = |id, params, kind, description| EntryInfo { id, params, kind, description };
    vec![
        e("A_n", "n>=1", Algebra, "linear quiver 1->...->n modulo paths of length 2"),
        e("kA_n_mod_Rk", "m>=1, k>=2", Algebra, "linear quiver on m vertices modulo paths of length k"),
        e("trunc_poly", "k>=2", Algebra, "k[x]/(x^k)"),
        e("lambda", "n>=1, k>=2", Algebra, "cyclic quiver on n vertices modulo paths of length k"),
        e("lambda_mid", "n>=3", Algebra, "cyclic quiver modulo paths of length 3 and the path a1*a2"),
        e("auslander", "n>=1", Algebra, "cyclic quiver on 2n vertices modulo all paths between odd vertices"),
        e("kronecker", "", Algebra, "path algebra of the Kronecker quiver al, be: 1 -> 2"),
        e("A3prime", "", Algebra, "path algebra of 1 -> 2 <- 3"),
        e("C4_algebra", "", Algebra, "linear quiver on 4 vertices modulo the path from 2 to 4"),
        e("Qprime", "n>=2", Algebra, "alternating cycle on 2n vertices (odd vertices are sources)"),
        e("zigzag", "", Algebra, "two-cycle 1 <-> 2 modulo al*be and be*al"),
        e("zigzag_c2", "", Action, "swap of the two vertices and arrows of the zigzag algebra"),
        e("lambda_rot", "n>=1, k>=2", Action, "rotation of the cyclic quiver acting on lambda(n, k)"),
        e("trunc_poly_rot", "k>=2, n>=1", Action, "x -> zeta x on k[x]/(x^k), zeta a primitive n-th root of unity"),
        e("kronecker_rot", "n>=1", Action, "al -> al, be -> zeta be on the Kronecker algebra"),
        e("kronecker_witness", "", Witness, "explicit dual-numbers/Kronecker bimodule M and N = Hom_D(M, D)"),
        e("skew", "of=<action id>, action params", Algebra, "skew group algebra of a catalog action"),
    ]
}

/// A built entry.
#[derive(Clone, Debug)]
pub enum Entry<F: Field> {
    Algebra(Arc<Algebra<F>>),
    Action(AlgebraAction<F>),
    Witness(JWitnessPair<F>),
}

impl<F: Field> Entry<F> {
    /// The algebra of an algebra entry, the acted-on algebra of an action,
    /// or the larger algebra of a witness.
    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        match self {
            Entry::Algebra(a) => a,
            Entry::Action(act) => act.algebra(),
            Entry::Witness(w) => &w.a,
        }
    }
}

/// Smallest prime `p >= 101` with `n | p - 1`, preferring 101.
pub fn prime_with_roots_of_unity(n: u64) -> u64 {
    let mut p = DEFAULT_PRIME;
    while !(is_prime(p) && (p - 1) % n.max(1) == 0) {
        p += 1;
    }
    p
}

/// A suitable default characteristic for an entry: 101 unless the entry
/// needs roots of unity of an order not dividing 100.
pub fn default_prime(r: &CatalogRef) -> u64 {
    let id = if r.id == "skew" { r.params.get("of").map(String::as_str).unwrap_or("") } else { r.id.as_str() };
    match id {
        "trunc_poly_rot" | "kronecker_rot" => r
            .params
            .get("n")
            .and_then(|v| v.parse::<u64>().ok())
            .map(prime_with_roots_of_unity)
            .unwrap_or(DEFAULT_PRIME),
        _ => DEFAULT_PRIME,
    }
}

const MAX_PARAM: usize = 64;

pub fn build<F: Field>(f: &F, r: &CatalogRef) -> Result<Entry<F>> {
    let entry = match r.id.as_str() {
        "zigzag_c2" => {
            r.allow_only(&[])?;
            Entry::Action(zigzag_swap(f)?)
        }
        "lambda_rot" => {
            r.allow_only(&["n", "k"])?;
            Entry::Action(lambda_rotation(f, r.usize_param("n", 1, MAX_PARAM)?, r.usize_param("k", 2, MAX_PARAM)?)?)
        }
        "trunc_poly_rot" => {
            r.allow_only(&["k", "n"])?;
            Entry::Action(trunc_poly_rotation(f, r.usize_param("k", 2, MAX_PARAM)?, r.usize_param("n", 1, MAX_PARAM)?)?)
        }
        "kronecker_rot" => {
            r.allow_only(&["n"])?;
            Entry::Action(kronecker_rotation(f, r.usize_param("n", 1, MAX_PARAM)?)?)
        }
        "kronecker_witness" => {
            r.allow_only(&[])?;
            Entry::Witness(kronecker_witness(f)?)
        }
        _ => Entry::Algebra(build_algebra(f, r)?),
    };
    Ok(entry)
}

/// Builds an algebra entry and checks its fingerprint against the recorded
/// expectation.
pub fn build_algebra<F: Field>(f: &F, r: &CatalogRef) -> Result<Arc<Algebra<F>>> {
    let prov = r.to_string();
    let a = match presentation(r)? {
        Some(q) => quiver_algebra(f, &q, &prov)?,
        None => {
            let inner = r.inner_action()?;
            let act = match build(f, &inner)? {
                Entry::Action(act) => act,
                _ => return Err(Error::BadParams(format!("skew: `{}` is not an action", inner.id))),
            };
            let (s, _) = skew_group_algebra(&act)?;
            Arc::new((*s).clone().with_provenance(prov))
        }
    };
    check_fingerprint(f, r, &a)?;
    Ok(a)
}

/// The quiver presentation of an algebra entry; `None` for skew entries.
pub fn presentation(r: &CatalogRef) -> Result<Option<QuiverPresentation>> {
    let q = match r.id.as_str() {
        "A_n" => {
            r.allow_only(&["n"])?;
            line_quiver(r.usize_param("n", 1, MAX_PARAM)?, 2)?
        }
        "kA_n_mod_Rk" => {
            r.allow_only(&["m", "k"])?;
            line_quiver(r.usize_param("m", 1, MAX_PARAM)?, r.usize_param("k", 2, MAX_PARAM)?)?
        }
        "trunc_poly" => {
            r.allow_only(&["k"])?;
            trunc_poly_quiver(r.usize_param("k", 2, MAX_PARAM)?)?
        }
        "lambda" => {
            r.allow_only(&["n", "k"])?;
            cycle(r.usize_param("n", 1, MAX_PARAM)?, r.usize_param("k", 2, MAX_PARAM)?)?
        }
        "lambda_mid" => {
            r.allow_only(&["n"])?;
            cycle(r.usize_param("n", 3, MAX_PARAM)?, 3)?.relation("a1*a2")?
        }
        "auslander" => {
            r.allow_only(&["n"])?;
            let n = r.usize_param("n", 1, MAX_PARAM / 2)?;
            let mut q = cycle(2 * n, usize::MAX)?;
            for i in (1..=2 * n).step_by(2) {
                q = q.relation(&format!("a{}*a{}", i, i % (2 * n) + 1))?;
            }
            q
        }
        "kronecker" => {
            r.allow_only(&[])?;
            kronecker_quiver()?
        }
        "A3prime" => {
            r.allow_only(&[])?;
            QuiverPresentation::new().vertices(["1", "2", "3"]).arrow("a", "1", "2")?.arrow("b", "3", "2")?
        }
        "C4_algebra" => {
            r.allow_only(&[])?;
            line_quiver(4, usize::MAX)?.relation("a2*a3")?
        }
        "Qprime" => {
            r.allow_only(&["n"])?;
            qprime_quiver(r.usize_param("n", 2, MAX_PARAM / 2)?)?
        }
        "zigzag" => {
            r.allow_only(&[])?;
            zigzag_quiver()?
        }
        "skew" => return Ok(None),
        "zigzag_c2" | "lambda_rot" | "trunc_poly_rot" | "kronecker_rot" | "kronecker_witness" => {
            return Err(Error::BadParams(format!("`{}` is not an algebra entry", r.id)))
        }
        _ => return Err(Error::UnknownEntry(r.id.clone())),
    };
    Ok(Some(q))
}

fn check_fingerprint<F: Field>(f: &F, r: &CatalogRef, a: &Algebra<F>) -> Result<()> {
    let actual = a.fingerprint()?;
    let expected = match expected_fingerprint(r)? {
        Some(e) => e,
        None => {
            // Skew group algebras: layers scale by |G| when the order is
            // invertible; simples are not predicted.
            let inner = r.inner_action()?;
            let Entry::Action(act) = build(f, &inner)? else { unreachable!() };
            let g = act.group().order();
            let p = f.characteristic();
            if p != 0 && g as u64 % p == 0 {
                return Ok(());
            }
            let base = act.algebra().fingerprint()?;
            Fingerprint {
                dim: base.dim * g,
                radical_layers: base.radical_layers.iter().map(|d| d * g).collect(),
                simples: actual.simples,
                loewy_length: base.loewy_length,
            }
        }
    };
    if expected != actual {
        return Err(Error::FingerprintMismatch { id: r.to_string(), expected: expected.to_string(), actual: actual.to_string() });
    }
    Ok(())
}

fn fp(layers: Vec<usize>, simples: usize) -> Fingerprint {
    Fingerprint { dim: layers[0], loewy_length: layers.len() - 1, radical_layers: layers, simples }
}

/// Recorded fingerprint of an algebra entry (`None` for skew entries,
/// which are checked against their action).
pub fn expected_fingerprint(r: &CatalogRef) -> Result<Option<Fingerprint>> {
    let get = |k: &str, min: usize, max: usize| r.usize_param(k, min, max);
    let out = match r.id.as_str() {
        "A_n" => Some(line_layers(get("n", 1, MAX_PARAM)?, 2)),
        "kA_n_mod_Rk" => Some(line_layers(get("m", 1, MAX_PARAM)?, get("k", 2, MAX_PARAM)?)),
        "trunc_poly" => {
            let k = get("k", 2, MAX_PARAM)?;
            Some(fp((0..=k).rev().collect(), 1))
        }
        "lambda" => {
            let (n, k) = (get("n", 1, MAX_PARAM)?, get("k", 2, MAX_PARAM)?);
            Some(fp((0..=k).rev().map(|j| n * j).collect(), n))
        }
        "lambda_mid" => {
            let n = get("n", 3, MAX_PARAM)?;
            Some(fp(vec![3 * n - 1, 2 * n - 1, n - 1, 0], n))
        }
        "auslander" => {
            let n = get("n", 1, MAX_PARAM / 2)?;
            Some(fp(vec![5 * n, 3 * n, n, 0], 2 * n))
        }
        "kronecker" => Some(fp(vec![4, 2, 0], 2)),
        "A3prime" => Some(fp(vec![5, 2, 0], 3)),
        "C4_algebra" => Some(fp(vec![8, 4, 1, 0], 4)),
        "Qprime" => {
            let n = get("n", 2, MAX_PARAM / 2)?;
            Some(fp(vec![4 * n, 2 * n, 0], 2 * n))
        }
        "zigzag" => Some(fp(vec![4, 2, 0], 2)),
        "skew" => None,
        _ => return Err(Error::UnknownEntry(r.id.clone())),
    };
    Ok(out)
}

/// Layers of the linear quiver on `m` vertices modulo paths of length `k`.
fn line_layers(m: usize, k: usize) -> Fingerprint {
    let top = k.min(m);
    let layers = (0..=top).map(|j| (j..top).map(|l| m - l).sum()).collect();
    fp(layers, m)
}

fn quiver_algebra<F: Field>(f: &F, q: &QuiverPresentation, prov: &str) -> Result<Arc<Algebra<F>>> {
    Ok(Arc::new(algebra_from_quiver(f, q)?.with_provenance(prov)))
}

/// `1 -> 2 -> ... -> m` with arrows `a_i: i -> i+1`, modulo paths of
/// length `k` (no relations when `k` exceeds the longest path).
fn line_quiver(m: usize, k: usize) -> Result<QuiverPresentation> {
    let mut q = QuiverPresentation::new().vertices((1..=m).map(|i| i.to_string()));
    for i in 1..m {
        q = q.arrow(&format!("a{i}"), &i.to_string(), &(i + 1).to_string())?;
    }
    for i in 1..m {
        if k < m && i + k <= m {
            let path: Vec<String> = (i..i + k).map(|s| format!("a{s}")).collect();
            q = q.relation(&path.join("*"))?;
        }
    }
    Ok(q)
}

/// Cyclic quiver with arrows `a_i: i -> i+1 (mod n)` modulo paths of length
/// `k` (no relations for `k = usize::MAX`).
fn cycle(n: usize, k: usize) -> Result<QuiverPresentation> {
    let mut q = QuiverPresentation::new().vertices((1..=n).map(|i| i.to_string()));
    for i in 1..=n {
        q = q.arrow(&format!("a{i}"), &i.to_string(), &(i % n + 1).to_string())?;
    }
    if k != usize::MAX {
        for i in 1..=n {
            let path: Vec<String> = (0..k).map(|s| format!("a{}", (i - 1 + s) % n + 1)).collect();
            q = q.relation(&path.join("*"))?;
        }
    }
    Ok(q)
}

pub fn line<F: Field>(f: &F, m: usize, k: usize, prov: &str) -> Result<Arc<Algebra<F>>> {
    quiver_algebra(f, &line_quiver(m, k)?, prov)
}

/// `k[x]/(x^k)` with basis labels `e1, x, x*x, ...`.
pub fn trunc_poly<F: Field>(f: &F, k: usize, prov: &str) -> Result<Arc<Algebra<F>>> {
    quiver_algebra(f, &trunc_poly_quiver(k)?, prov)
}

fn trunc_poly_quiver(k: usize) -> Result<QuiverPresentation> {
    QuiverPresentation::new().vertex("1").arrow("x", "1", "1")?.relation(&vec!["x"; k].join("*"))
}

pub fn lambda<F: Field>(f: &F, n: usize, k: usize, prov: &str) -> Result<Arc<Algebra<F>>> {
    quiver_algebra(f, &cycle(n, k)?, prov)
}

/// Kronecker quiver with arrows `al, be: 1 -> 2`.
pub fn kronecker<F: Field>(f: &F, prov: &str) -> Result<Arc<Algebra<F>>> {
    quiver_algebra(f, &kronecker_quiver()?, prov)
}

fn kronecker_quiver() -> Result<QuiverPresentation> {
    QuiverPresentation::new().vertices(["1", "2"]).arrow("al", "1", "2")?.arrow("be", "1", "2")
}

/// `1 <-> 2` with arrows `al: 1 -> 2`, `be: 2 -> 1`, modulo `al*be`,
/// `be*al`.
pub fn zigzag<F: Field>(f: &F, prov: &str) -> Result<Arc<Algebra<F>>> {
    quiver_algebra(f, &zigzag_quiver()?, prov)
}

fn zigzag_quiver() -> Result<QuiverPresentation> {
    QuiverPresentation::new()
        .vertices(["1", "2"])
        .arrow("al", "1", "2")?
        .arrow("be", "2", "1")?
        .relation("al*be")?
        .relation("be*al")
}

/// Vertices `1..2n`; arrows `b_i` from each odd vertex to its even
/// neighbours, closing up through vertex `2n`.
pub fn qprime<F: Field>(f: &F, n: usize, prov: &str) -> Result<Arc<Algebra<F>>> {
    quiver_algebra(f, &qprime_quiver(n)?, prov)
}

fn qprime_quiver(n: usize) -> Result<QuiverPresentation> {
    let v = 2 * n;
    let mut q = QuiverPresentation::new().vertices((1..=v).map(|i| i.to_string()));
    let mut count = 0;
    let mut arrow = |q: QuiverPresentation, s: usize, t: usize| {
        count += 1;
        q.arrow(&format!("b{count}"), &s.to_string(), &t.to_string())
    };
    for i in (1..v).step_by(2) {
        if i > 1 {
            q = arrow(q, i, i - 1)?;
        }
        q = arrow(q, i, i + 1)?;
    }
    arrow(q, 1, v)
}

fn auto<F: Field>(a: &Arc<Algebra<F>>, pairs: &[(String, String)]) -> Result<AlgebraHom<F>> {
    let mut ps = Vec::new();
    for (s, t) in pairs {
        let i = a.label_index(s).ok_or_else(|| Error::InvalidInput(format!("unknown label `{s}`")))?;
        ps.push((a.basis(i), a.parse_element(t)?));
    }
    AlgebraHom::extend_from_generators(a.clone(), a.clone(), &ps)
}

fn pairs(items: &[(&str, &str)]) -> Vec<(String, String)> {
    items.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

pub fn zigzag_swap<F: Field>(f: &F) -> Result<AlgebraAction<F>> {
    let a = zigzag(f, &CatalogRef::new("zigzag", &[]).to_string())?;
    let c = auto(&a, &pairs(&[("e1", "e2"), ("e2", "e1"), ("al", "be"), ("be", "al")]))?;
    AlgebraAction::cyclic(a, c)
}

pub fn lambda_rotation<F: Field>(f: &F, n: usize, k: usize) -> Result<AlgebraAction<F>> {
    let a = lambda(f, n, k, &CatalogRef::new("lambda", &[("n", n), ("k", k)]).to_string())?;
    let mut ps = Vec::new();
    for i in 1..=n {
        let j = i % n + 1;
        ps.push((format!("e{i}"), format!("e{j}")));
        ps.push((format!("a{i}"), format!("a{j}")));
    }
    let c = auto(&a, &ps)?;
    if n == 1 {
        return Ok(AlgebraAction::trivial(a));
    }
    AlgebraAction::cyclic(a, c)
}

fn root_of_unity<F: Field>(f: &F, n: usize) -> Result<F::Elem> {
    f.primitive_root_of_unity(n as u64)
        .ok_or_else(|| Error::RootsOfUnityUnavailable(format!("no primitive {n}-th root of unity in {}", f.spec())))
}

pub fn trunc_poly_rotation<F: Field>(f: &F, k: usize, n: usize) -> Result<AlgebraAction<F>> {
    let a = trunc_poly(f, k, &CatalogRef::new("trunc_poly", &[("k", k)]).to_string())?;
    let z = root_of_unity(f, n)?;
    if n == 1 {
        return Ok(AlgebraAction::trivial(a));
    }
    let c = auto(&a, &[("x".to_string(), format!("{}*x", f.format(&z)))])?;
    AlgebraAction::cyclic(a, c)
}

pub fn kronecker_rotation<F: Field>(f: &F, n: usize) -> Result<AlgebraAction<F>> {
    let a = kronecker(f, &CatalogRef::new("kronecker", &[]).to_string())?;
    let z = root_of_unity(f, n)?;
    if n == 1 {
        return Ok(AlgebraAction::trivial(a));
    }
    let c = auto(
        &a,
        &pairs(&[("e1", "e1"), ("e2", "e2"), ("al", "al")])
            .into_iter()
            .chain([("be".to_string(), format!("{}*be", f.format(&z)))])
            .collect::<Vec<_>>(),
    )?;
    AlgebraAction::cyclic(a, c)
}

/// Right actions of `al`, `be` and left action of `x` on the four-dimensional
/// dual-numbers/Kronecker bimodule `M`, in the basis `m1, m2` (vertex 1),
/// `m3, m4` (vertex 2). Columns are images.
pub fn kronecker_m_blocks() -> ([[i64; 2]; 2], [[i64; 2]; 2], [[i64; 2]; 2]) {
    let alpha = [[1, 0], [0, 1]];
    let beta = [[1, 0], [1, 1]];
    let x = [[0, 0], [1, 0]];
    (alpha, beta, x)
}

/// The witness `(M, Hom_D(M, D))` for the dual numbers `D` over the
/// Kronecker algebra.
pub fn kronecker_witness<F: Field>(f: &F) -> Result<JWitnessPair<F>> {
    let d = trunc_poly(f, 2, &CatalogRef::new("trunc_poly", &[("k", 2)]).to_string())?;
    let theta = kronecker(f, &CatalogRef::new("kronecker", &[]).to_string())?;
    let (alpha, beta, x) = kronecker_m_blocks();
    let z = |r: usize, c: usize, b: &[[i64; 2]; 2]| Matrix::from_fn(f, 4, 4, |i, j| {
        if i / 2 == r && j / 2 == c {
            f.from_i64(b[i % 2][j % 2])
        } else {
            f.zero()
        }
    });
    let id = [[1, 0], [0, 1]];
    // Arrows go from vertex 1 to vertex 2, so on the right they carry
    // M e_2 into M e_1.
    let right = vec![
        (theta.parse_element("e1")?, z(0, 0, &id)),
        (theta.parse_element("e2")?, z(1, 1, &id)),
        (theta.parse_element("al")?, z(0, 1, &alpha)),
        (theta.parse_element("be")?, z(0, 1, &beta)),
    ];
    let xm = z(0, 0, &x).add(&z(1, 1, &x));
    let left = vec![(d.parse_element("x")?, xm)];
    let m = Bimodule::from_generator_actions(d.clone(), theta.clone(), 4, &left, &right)?;
    let n = hom_to_regular(&m)?;
    JWitnessPair::new(m, n, 0)
}

/// The printed actions of the zigzag algebra on the dual basis
/// `f1, f2, f_al, f_be` of `Hom_k(A, k)`: entries `(element, dual vector,
/// result)` for the nonzero left products `a . f` and right products
/// `f . a`.
pub type ActionTable = Vec<(&'static str, &'static str, &'static str)>;

pub fn zigzag_dual_tables() -> (ActionTable, ActionTable) {
    let left = vec![
        ("e1", "f1", "f1"),
        ("e1", "f_al", "f_al"),
        ("e2", "f2", "f2"),
        ("e2", "f_be", "f_be"),
        ("al", "f_al", "f2"),
        ("be", "f_be", "f1"),
    ];
    let right = vec![
        ("e1", "f1", "f1"),
        ("e2", "f2", "f2"),
        ("e2", "f_al", "f_al"),
        ("al", "f_al", "f1"),
        ("e1", "f_be", "f_be"),
        ("be", "f_be", "f2"),
    ];
    (left, right)
}

/// Index of the dual basis vector `f_<label>` (vertices `f1`, `f2`).
pub fn zigzag_dual_index<F: Field>(a: &Algebra<F>, name: &str) -> Option<usize> {
    let label = match name {
        "f1" => "e1",
        "f2" => "e2",
        "f_al" => "al",
        "f_be" => "be",
        _ => return None,
    };
    a.label_index(label)
}

/// The map `Hom_k(A, k) -> A` with `f_al -> e1`, `f_be -> e2`, `f2 -> al`,
/// `f1 -> be`.
pub fn zigzag_dual_map<F: Field>(a: &Algebra<F>) -> Result<Matrix<F>> {
    let f = a.field();
    let images = [("f_al", "e1"), ("f_be", "e2"), ("f2", "al"), ("f1", "be")];
    let mut m = Matrix::zeros(f, a.dim(), a.dim());
    for (src, dst) in images {
        let j = zigzag_dual_index(a, src).ok_or_else(|| Error::InvalidInput(src.into()))?;
        let i = a.label_index(dst).ok_or_else(|| Error::InvalidInput(dst.into()))?;
        m.set(i, j, f.one());
    }
    Ok(m)
}
