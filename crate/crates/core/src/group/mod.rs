//! Finite groups acting on algebras by automorphisms: invariants,
//! isotypic components and skew group algebras.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraHom, Vector};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{is_zero_vec, nullspace, Subspace};
use crate::matrix::Matrix;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checked constructor: `table[g][h]` is the index of `g h`.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || names.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table must be square with entries in range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", names[g])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, table, identity, inverse })
    }

    /// The cyclic group of order `n`, elements `c^0, ..., c^(n-1)`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("c^{i}") }).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::new(names, table).expect("cyclic group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|g| (0..n).all(|h| self.table[g][h] == self.table[h][g]))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][g];
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|g| self.element_order(g)).fold(1, num_integer::lcm)
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for g in 0..self.order() {
            if span.contains(&g) {
                continue;
            }
            gens.push(g);
            span = self.closure(&gens);
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![self.identity];
        let mut i = 0;
        while i < seen.len() {
            for &g in gens {
                let x = self.table[seen[i]][g];
                if !seen.contains(&x) {
                    seen.push(x);
                }
            }
            i += 1;
        }
        seen
    }

    /// All homomorphisms into the roots of unity of `f`, as value tables.
    /// Requires an abelian group whose exponent divides the order of the
    /// roots of unity available.
    pub fn characters<F: Field>(&self, f: &F) -> Result<Vec<Vec<F::Elem>>> {
        if !self.is_abelian() {
            return Err(Error::NonAbelianGroup);
        }
        let e = self.exponent() as u64;
        let zeta = f
            .primitive_root_of_unity(e)
            .ok_or_else(|| Error::RootsOfUnityUnavailable(format!("no primitive {e}-th root of unity in {}", f.spec())))?;
        let gens = self.generators();
        let mut out = Vec::new();
        // Each generator goes to some power of zeta; keep the consistent
        // assignments.
        let mut choice = vec![0u64; gens.len()];
        loop {
            if let Some(chi) = self.extend_character(f, &gens, &choice, &zeta) {
                out.push(chi);
            }
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < e {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
        debug_assert_eq!(out.len(), self.order());
        Ok(out)
    }

    fn extend_character<F: Field>(&self, f: &F, gens: &[usize], choice: &[u64], zeta: &F::Elem) -> Option<Vec<F::Elem>> {
        let n = self.order();
        let mut chi: Vec<Option<F::Elem>> = vec![None; n];
        chi[self.identity] = Some(f.one());
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for (gi, &g) in gens.iter().enumerate() {
                let y = self.table[x][g];
                let v = f.mul(chi[x].as_ref().unwrap(), &f.pow(zeta, choice[gi]));
                match &chi[y] {
                    Some(w) if *w != v => return None,
                    Some(_) => {}
                    None => {
                        chi[y] = Some(v);
                        queue.push(y);
                    }
                }
            }
        }
        Some(chi.into_iter().map(|c| c.expect("generators generate")).collect())
    }
}

/// A group acting on an algebra by automorphisms.
#[derive(Clone, Debug)]
pub struct AlgebraAction<F: Field> {
    group: FiniteGroup,
    algebra: Arc<Algebra<F>>,
    automorphisms: Vec<AlgebraHom<F>>,
}

impl<F: Field> AlgebraAction<F> {
    /// Checked constructor: each map is an automorphism and the maps
    /// compose according to the group law.
    pub fn new(group: FiniteGroup, algebra: Arc<Algebra<F>>, automorphisms: Vec<AlgebraHom<F>>) -> Result<Self> {
        if automorphisms.len() != group.order() {
            return Err(Error::DimensionMismatch("one automorphism per group element".into()));
        }
        for g in &automorphisms {
            if !crate::algebra::same_algebra(g.source(), &algebra) || !crate::algebra::same_algebra(g.target(), &algebra) {
                return Err(Error::NotAutomorphism("map does not act on the given algebra".into()));
            }
            if g.inverse().is_none() {
                return Err(Error::NotAutomorphism("map is not invertible".into()));
            }
        }
        if !automorphisms[group.identity()].is_identity() {
            return Err(Error::NotAutomorphism("identity element does not act trivially".into()));
        }
        let n = group.order();
        for g in 0..n {
            for h in 0..n {
                let gh = automorphisms[g].matrix().mul(automorphisms[h].matrix());
                if gh != *automorphisms[group.mul(g, h)].matrix() {
                    return Err(Error::NotAutomorphism(format!(
                        "action of {} {} does not match the group law",
                        group.names[g], group.names[h]
                    )));
                }
            }
        }
        Ok(AlgebraAction { group, algebra, automorphisms })
    }

    /// The group generated by the given automorphisms, found by closure.
    pub fn generated(algebra: Arc<Algebra<F>>, gens: Vec<(String, AlgebraHom<F>)>, cap: usize) -> Result<Self> {
        let n = algebra.dim();
        let mut mats: Vec<Matrix<F>> = vec![Matrix::identity(algebra.field(), n)];
        let mut names = vec!["1".to_string()];
        let mut index: HashMap<Vec<F::Elem>, usize> = HashMap::new();
        index.insert(mats[0].data().to_vec(), 0);
        let mut i = 0;
        while i < mats.len() {
            for (name, g) in &gens {
                let m = g.matrix().mul(&mats[i]);
                if !index.contains_key(m.data()) {
                    if mats.len() >= cap {
                        return Err(Error::NotAGroup(format!("group order exceeds the cap {cap}")));
                    }
                    index.insert(m.data().to_vec(), mats.len());
                    names.push(if i == 0 { name.clone() } else { format!("{name}*{}", names[i]) });
                    mats.push(m);
                }
            }
            i += 1;
        }
        let k = mats.len();
        let table = (0..k)
            .map(|a| (0..k).map(|b| index[mats[a].mul(&mats[b]).data()]).collect())
            .collect();
        let group = FiniteGroup::new(names, table)?;
        let autos = mats
            .into_iter()
            .map(|m| AlgebraHom::new(algebra.clone(), algebra.clone(), m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, algebra, autos)
    }

    /// Cyclic group generated by one automorphism.
    pub fn cyclic(algebra: Arc<Algebra<F>>, g: AlgebraHom<F>) -> Result<Self> {
        Self::generated(algebra, vec![("c".into(), g)], 64)
    }

    pub fn trivial(algebra: Arc<Algebra<F>>) -> Self {
        let id = AlgebraHom::identity(algebra.clone());
        AlgebraAction { group: FiniteGroup::cyclic(1), algebra, automorphisms: vec![id] }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn automorphisms(&self) -> &[AlgebraHom<F>] {
        &self.automorphisms
    }

    pub fn automorphism(&self, g: usize) -> &AlgebraHom<F> {
        &self.automorphisms[g]
    }

    fn order_is_invertible(&self) -> bool {
        let p = self.algebra.field().characteristic();
        p == 0 || self.group.order() as u64 % p != 0
    }

    /// Fixed points `A^G`.
    pub fn fixed_space(&self) -> Subspace<F> {
        let f = self.algebra.field();
        let n = self.algebra.dim();
        let mut rows = Vec::new();
        for g in self.group.generators() {
            let d = self.automorphisms[g].matrix().sub(&Matrix::identity(f, n));
            rows.extend(d.row_vecs());
        }
        if rows.is_empty() {
            return Subspace::full(f, n);
        }
        Subspace::span(f, n, &nullspace(&Matrix::from_rows(f, n, &rows)))
    }
}

/// `A^G` as an algebra with its embedding into `A`.
pub fn invariant_subalgebra<F: Field>(act: &AlgebraAction<F>) -> Result<(Arc<Algebra<F>>, AlgebraHom<F>)> {
    let a = act.algebra();
    let f = a.field();
    let fixed = act.fixed_space();
    let (sub, inclusion) = a.subalgebra(&fixed, &format!("{}^G", a.provenance()))?;
    let mut sub = sub;
    if act.order_is_invertible() {
        // rad(A^G) = rad(A) meet A^G; cross-checked against the generic
        // computation.
        let meet = a.radical().intersection(&fixed);
        let coords: Vec<Vector<F>> = meet.basis().iter().map(|v| fixed.coords(v).expect("in fixed space")).collect();
        let rad = Subspace::span(f, sub.dim(), &coords);
        assert_eq!(rad, sub.computed_radical(), "radical of the invariant subalgebra");
        sub = sub.with_radical(rad)?;
    }
    let sub = Arc::new(sub);
    let emb = AlgebraHom::new(sub.clone(), a.clone(), inclusion)?;
    Ok((sub, emb))
}

/// An isotypic component `A_chi = { a : g a = chi(g) a }`.
#[derive(Clone, Debug)]
pub struct IsotypicComponent<F: Field> {
    pub character: Vec<F::Elem>,
    pub space: Subspace<F>,
}

/// Decomposition of `A` into isotypic components for an abelian group of
/// order invertible in the field.
pub fn isotypic_decomposition<F: Field>(act: &AlgebraAction<F>) -> Result<Vec<IsotypicComponent<F>>> {
    let a = act.algebra();
    let f = a.field();
    let g = act.group();
    if !g.is_abelian() {
        return Err(Error::NonAbelianGroup);
    }
    if !act.order_is_invertible() {
        return Err(Error::BadCharacteristic(format!("|G| = {} in {}", g.order(), f.spec())));
    }
    let chars = g.characters(f)?;
    let n = a.dim();
    let inv_order = f.inv(&f.from_i64(g.order() as i64)).expect("invertible order");
    let mut out = Vec::new();
    for chi in chars {
        let mut proj = Matrix::zeros(f, n, n);
        for h in 0..g.order() {
            let c = f.mul(&inv_order, &f.inv(&chi[h]).expect("root of unity"));
            proj.add_scaled(&c, act.automorphism(h).matrix());
        }
        out.push(IsotypicComponent { character: chi, space: Subspace::column_space(&proj) });
    }
    let total: usize = out.iter().map(|c| c.space.dim()).sum();
    assert_eq!(total, n, "isotypic components do not fill the algebra");
    let fixed = act.fixed_space();
    let trivial = out.iter().find(|c| c.character.iter().all(|x| f.is_one(x))).expect("trivial character");
    assert_eq!(trivial.space, fixed, "trivial component differs from the invariants");
    for c in &out {
        for x in fixed.basis() {
            for y in c.space.basis() {
                assert!(c.space.contains(&a.mul(x, y)) && c.space.contains(&a.mul(y, x)), "component is not an A^G-bimodule");
            }
        }
    }
    Ok(out)
}

/// The skew group algebra `A * G`, basis `b_i (x) g` at index
/// `i * |G| + g`, with `(a (x) g)(a' (x) h) = a g(a') (x) gh`, and the
/// embedding `a -> a (x) 1`.
pub fn skew_group_algebra<F: Field>(act: &AlgebraAction<F>) -> Result<(Arc<Algebra<F>>, AlgebraHom<F>)> {
    let a = act.algebra();
    let f = a.field();
    let grp = act.group();
    let (n, k) = (a.dim(), grp.order());
    let dim = n * k;
    let mut table = Vec::with_capacity(dim * dim);
    for i in 0..n {
        for g in 0..k {
            let autg = act.automorphism(g).matrix();
            for j in 0..n {
                let gbj = autg.col(j);
                let prod = a.mul(&a.basis(i), &gbj);
                for h in 0..k {
                    let gh = grp.mul(g, h);
                    let entries = prod
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !f.is_zero(c))
                        .map(|(m, c)| (m * k + gh, c.clone()))
                        .collect();
                    table.push(entries);
                }
            }
        }
    }
    let labels = a
        .labels()
        .iter()
        .flat_map(|l| grp.names().iter().map(move |g| format!("{l}|{g}")))
        .collect();
    let embed_vec = |v: &[F::Elem]| -> Vector<F> {
        let mut out = vec![f.zero(); dim];
        for (i, c) in v.iter().enumerate() {
            out[i * k + grp.identity()] = c.clone();
        }
        out
    };
    let unit = embed_vec(a.unit());
    let mut skew = Algebra::new(f.clone(), labels, table, unit, format!("{}*G", a.provenance()))?;
    if act.order_is_invertible() {
        let mut rad = Vec::new();
        for r in a.radical().basis() {
            for g in 0..k {
                let mut v = vec![f.zero(); dim];
                for (i, c) in r.iter().enumerate() {
                    v[i * k + g] = c.clone();
                }
                rad.push(v);
            }
        }
        skew = skew.with_radical(Subspace::span(f, dim, &rad))?;
    }
    let mut gens: Vec<Vector<F>> = a.generators().iter().map(|x| embed_vec(x)).collect();
    for g in grp.generators() {
        let mut v = vec![f.zero(); dim];
        for (i, c) in a.unit().iter().enumerate() {
            v[i * k + g] = c.clone();
        }
        gens.push(v);
    }
    let skew = Arc::new(skew.with_generators(gens));
    let emb = Matrix::from_cols(f, dim, &(0..n).map(|i| embed_vec(&a.basis(i))).collect::<Vec<_>>());
    let hom = AlgebraHom::new(a.clone(), skew.clone(), emb)?;
    Ok((skew, hom))
}

/// Whether the induced action on the quiver of the algebra is free. Each
/// automorphism must permute the vertex idempotents and send arrows to
/// multiples of arrows.
pub fn verify_free_quiver_action<F: Field>(act: &AlgebraAction<F>) -> Result<bool> {
    let a = act.algebra();
    let f = a.field();
    let q = a
        .quiver()
        .ok_or_else(|| Error::NotQuiverCompatible("algebra has no quiver presentation".into()))?;
    let image_index = |v: &Vector<F>, candidates: &[usize], scalar: bool| -> Option<usize> {
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !f.is_zero(&v[i])).collect();
        if nz.len() != 1 || !candidates.contains(&nz[0]) || (!scalar && !f.is_one(&v[nz[0]])) {
            return None;
        }
        candidates.iter().position(|&c| c == nz[0])
    };
    let mut free = true;
    for g in 0..act.group().order() {
        let m = act.automorphism(g).matrix();
        let trivial = g == act.group().identity();
        for (vi, &b) in q.vertex_basis.iter().enumerate() {
            let w = image_index(&m.col(b), &q.vertex_basis, false).ok_or_else(|| {
                Error::NotQuiverCompatible(format!("{} does not map vertex {} to a vertex", act.group().names()[g], q.vertices[vi]))
            })?;
            if !trivial && w == vi {
                free = false;
            }
        }
        for (ai, &b) in q.arrow_basis.iter().enumerate() {
            let w = image_index(&m.col(b), &q.arrow_basis, true).ok_or_else(|| {
                Error::NotQuiverCompatible(format!("{} does not map arrow {} to an arrow", act.group().names()[g], q.arrows[ai].name))
            })?;
            if !trivial && w == ai {
                free = false;
            }
        }
    }
    Ok(free)
}

/// Parsed action file: the algebra reference and, per generator, images of
/// some basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    pub algebra_ref: String,
    pub generators: Vec<(String, Vec<(String, String)>)>,
}

impl ActionSpec {
    /// Lines `algebra <ref>` and `auto <g>: <basis label> -> <combination>`;
    /// `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut algebra_ref = None;
        let mut generators: Vec<(String, Vec<(String, String)>)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
            let rest = rest.trim();
            match kw {
                "algebra" if !rest.is_empty() => algebra_ref = Some(rest.to_string()),
                "auto" => {
                    let (name, map) = rest
                        .split_once(':')
                        .ok_or_else(|| Error::Parse { line, msg: "expected `auto g: b -> combination`".into() })?;
                    let (src, dst) = map
                        .split_once("->")
                        .ok_or_else(|| Error::Parse { line, msg: "expected `b -> combination`".into() })?;
                    let name = name.trim().to_string();
                    let pair = (src.trim().to_string(), dst.trim().to_string());
                    match generators.iter_mut().find(|(n, _)| *n == name) {
                        Some((_, v)) => v.push(pair),
                        None => generators.push((name, vec![pair])),
                    }
                }
                _ => return Err(Error::Parse { line, msg: format!("unexpected line `{body}`") }),
            }
        }
        let algebra_ref = algebra_ref.ok_or(Error::Parse { line: 1, msg: "missing `algebra` line".into() })?;
        if generators.is_empty() {
            return Err(Error::Parse { line: 1, msg: "no `auto` lines".into() });
        }
        Ok(ActionSpec { algebra_ref, generators })
    }

    /// The generators of `act` as images of every basis element.
    pub fn of<F: Field>(act: &AlgebraAction<F>, algebra_ref: &str) -> Self {
        let a = act.algebra();
        let generators = act
            .group()
            .generators()
            .into_iter()
            .map(|g| {
                let hom = act.automorphism(g);
                let pairs = (0..a.dim())
                    .map(|i| (a.labels()[i].clone(), a.format_element(&hom.apply(&a.basis(i)))))
                    .collect();
                (act.group().names()[g].clone(), pairs)
            })
            .collect();
        ActionSpec { algebra_ref: algebra_ref.to_string(), generators }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("algebra {}\n", self.algebra_ref);
        for (name, pairs) in &self.generators {
            for (src, dst) in pairs {
                out.push_str(&format!("auto {name}: {src} -> {dst}\n"));
            }
        }
        out
    }

    /// Builds the action on `algebra`, extending each generator from the
    /// listed basis elements and closing under composition.
    pub fn build<F: Field>(&self, algebra: &Arc<Algebra<F>>, cap: usize) -> Result<AlgebraAction<F>> {
        let mut gens = Vec::new();
        for (name, pairs) in &self.generators {
            let mut ps = Vec::new();
            for (src, dst) in pairs {
                let i = algebra
                    .label_index(src)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown basis label `{src}`")))?;
                ps.push((algebra.basis(i), algebra.parse_element(dst)?));
            }
            let hom = AlgebraHom::extend_from_generators(algebra.clone(), algebra.clone(), &ps)
                .map_err(|e| Error::NotAutomorphism(format!("{name}: {e}")))?;
            if hom.inverse().is_none() {
                return Err(Error::NotAutomorphism(format!("{name} is not invertible")));
            }
            gens.push((name.clone(), hom));
        }
        AlgebraAction::generated(algebra.clone(), gens, cap)
    }
}

/// Whether `v` is fixed by the whole group.
pub fn is_invariant<F: Field>(act: &AlgebraAction<F>, v: &[F::Elem]) -> bool {
    let f = act.algebra().field();
    act.automorphisms().iter().all(|g| is_zero_vec(f, &crate::linalg::vec_sub(f, &g.apply(v), v)))
}

#[cfg(test)]
mod tests;
