//! Quivers with homogeneous relations and their bound path algebras.
//!
//! Paths are written in traversal order: `a*b` means "first `a`, then
//! `b`" and requires `target(a) = source(b)`. Multiplication in the path
//! algebra composes like maps, right to left, so the path `a*b` is the
//! algebra product `b * a`. The trivial path at vertex `v` is the basis
//! element `e<v>`.

use std::collections::HashMap;

use super::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::linalg::{unit_vec, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A quiver with relations. Relation coefficients are kept as text and
/// interpreted in the field at build time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub field: Option<FieldSpec>,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<(String, Vec<usize>)>>,
    pub max_path_length: usize,
}

impl Default for QuiverPresentation {
    fn default() -> Self {
        QuiverPresentation {
            field: None,
            vertices: Vec::new(),
            arrows: Vec::new(),
            relations: Vec::new(),
            max_path_length: 30,
        }
    }
}

/// Quiver data retained by a path algebra: which basis elements are the
/// vertex idempotents and the arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverInfo {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub vertex_basis: Vec<usize>,
    pub arrow_basis: Vec<usize>,
}

impl QuiverInfo {
    pub fn opposite(&self) -> QuiverInfo {
        QuiverInfo {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
            vertex_basis: self.vertex_basis.clone(),
            arrow_basis: self.arrow_basis.clone(),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == n
    }
}

impl QuiverPresentation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_field(mut self, f: FieldSpec) -> Self {
        self.field = Some(f);
        self
    }

    pub fn vertex(mut self, label: impl Into<String>) -> Self {
        self.vertices.push(label.into());
        self
    }

    pub fn vertices<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        self.vertices.extend(labels.into_iter().map(Into::into));
        self
    }

    fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown vertex `{label}`")))
    }

    fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrow(mut self, name: &str, source: &str, target: &str) -> Result<Self> {
        self.add_arrow(name, source, target)?;
        Ok(self)
    }

    fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<()> {
        if self.arrow_index(name).is_some() {
            return Err(Error::InvalidInput(format!("duplicate arrow `{name}`")));
        }
        if name.is_empty() || name.contains(['*', '+', '-', ' ']) {
            return Err(Error::InvalidInput(format!("bad arrow name `{name}`")));
        }
        let source = self.vertex_index(source)?;
        let target = self.vertex_index(target)?;
        self.arrows.push(Arrow { name: name.into(), source, target });
        Ok(())
    }

    pub fn relation(mut self, text: &str) -> Result<Self> {
        self.add_relation(text)?;
        Ok(self)
    }

    fn add_relation(&mut self, text: &str) -> Result<()> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut pieces = Vec::new();
        for ch in t.chars() {
            if ch == '+' || ch == '-' {
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                    neg = false;
                }
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        if !cur.is_empty() {
            pieces.push((neg, cur));
        }
        if pieces.is_empty() {
            return Err(Error::InvalidInput("empty relation".into()));
        }
        for (neg, piece) in pieces {
            let mut factors: Vec<&str> = piece.split('*').collect();
            let mut coef = String::from("1");
            if self.arrow_index(factors[0]).is_none() && factors.len() > 1 {
                coef = factors.remove(0).to_string();
            }
            let path = factors
                .iter()
                .map(|a| {
                    self.arrow_index(a)
                        .ok_or_else(|| Error::InvalidInput(format!("unknown arrow `{a}` in relation")))
                })
                .collect::<Result<Vec<_>>>()?;
            if neg {
                coef = if let Some(c) = coef.strip_prefix('-') { c.to_string() } else { format!("-{coef}") };
            }
            terms.push((coef, path));
        }
        self.relations.push(terms);
        Ok(())
    }

    /// Parse the line-oriented text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut q = QuiverPresentation::new();
        let perr = |line: usize, e: Error| Error::Parse { line, msg: e.to_string() };
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
            let rest = rest.trim();
            match kw {
                "field" => q.field = Some(rest.parse().map_err(|e| perr(line, e))?),
                "vertex" | "vertices" => {
                    if rest.is_empty() {
                        return Err(Error::Parse { line, msg: "vertex line without labels".into() });
                    }
                    for v in rest.split_whitespace() {
                        if q.vertices.iter().any(|w| w == v) {
                            return Err(Error::Parse { line, msg: format!("duplicate vertex `{v}`") });
                        }
                        q.vertices.push(v.to_string());
                    }
                }
                "arrow" => {
                    let (name, ends) = rest
                        .split_once(':')
                        .ok_or_else(|| Error::Parse { line, msg: "expected `arrow name: s -> t`".into() })?;
                    let (s, t) = ends
                        .split_once("->")
                        .ok_or_else(|| Error::Parse { line, msg: "expected `s -> t`".into() })?;
                    q.add_arrow(name.trim(), s.trim(), t.trim()).map_err(|e| perr(line, e))?;
                }
                "relation" => q.add_relation(rest).map_err(|e| perr(line, e))?,
                "max_path_length" => {
                    q.max_path_length = rest
                        .parse()
                        .map_err(|_| Error::Parse { line, msg: format!("bad length `{rest}`") })?;
                }
                other => return Err(Error::Parse { line, msg: format!("unknown keyword `{other}`") }),
            }
        }
        if q.vertices.is_empty() {
            return Err(Error::Parse { line: text.lines().count().max(1), msg: "no vertices declared".into() });
        }
        Ok(q)
    }

    /// Render in the text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(f) = self.field {
            out.push_str(&format!("field {f}\n"));
        }
        out.push_str(&format!("vertex {}\n", self.vertices.join(" ")));
        for a in &self.arrows {
            out.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.name, self.vertices[a.source], self.vertices[a.target]
            ));
        }
        for r in &self.relations {
            let terms: Vec<String> = r
                .iter()
                .map(|(c, p)| {
                    let path: Vec<&str> = p.iter().map(|&i| self.arrows[i].name.as_str()).collect();
                    if c == "1" {
                        path.join("*")
                    } else {
                        format!("{c}*{}", path.join("*"))
                    }
                })
                .collect();
            out.push_str(&format!("relation {}\n", terms.join(" + ").replace("+ -", "- ")));
        }
        out
    }

    fn path_ends(&self, p: &[usize]) -> Option<(usize, usize)> {
        for w in p.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return None;
            }
        }
        Some((self.arrows[p[0]].source, self.arrows[*p.last()?].target))
    }

    fn path_label(&self, p: &[usize]) -> String {
        p.iter().map(|&i| self.arrows[i].name.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// Bound path algebra of a quiver with homogeneous admissible relations.
pub fn algebra_from_quiver<F: Field>(field: &F, q: &QuiverPresentation) -> Result<Algebra<F>> {
    if let Some(spec) = q.field {
        if spec != field.spec() {
            return Err(Error::FieldMismatch(spec.to_string(), field.spec().to_string()));
        }
    }
    if q.vertices.is_empty() {
        return Err(Error::InvalidInput("quiver without vertices".into()));
    }
    let nv = q.vertices.len();
    // Relations grouped by degree.
    let mut rels: HashMap<usize, Vec<Vec<(F::Elem, Vec<usize>)>>> = HashMap::new();
    for r in &q.relations {
        let mut ends = None;
        let mut deg = None;
        let mut terms = Vec::new();
        for (c, p) in r {
            let label = q.path_label(p);
            if p.len() < 2 {
                return Err(Error::NotAdmissible(format!("term `{label}` has length < 2")));
            }
            let e = q
                .path_ends(p)
                .ok_or_else(|| Error::NotAdmissible(format!("path `{label}` is not composable")))?;
            if *ends.get_or_insert(e) != e {
                return Err(Error::NotAdmissible(format!("term `{label}` is not parallel to the others")));
            }
            if *deg.get_or_insert(p.len()) != p.len() {
                return Err(Error::NotAdmissible(format!(
                    "relation mixes path lengths (term `{label}`); only homogeneous relations are supported"
                )));
            }
            terms.push((field.parse_elem(c)?, p.clone()));
        }
        if let Some(d) = deg {
            rels.entry(d).or_default().push(terms);
        }
    }

    // paths[d]: all composable arrow sequences of length d, in increasing
    // order of (source vertex, arrow sequence).
    let sort_key = |p: &Vec<usize>| (q.arrows[p[0]].source, p.clone());
    let mut paths: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    let mut ideals: Vec<Subspace<F>> = vec![Subspace::zero(field, 0)];
    // Column c of degree d corresponds to paths[d][len - 1 - c], so the
    // largest path is pivoted first and normal forms use smaller paths.
    let mut index: Vec<HashMap<Vec<usize>, usize>> = vec![HashMap::new()];
    let mut normal: Vec<Vec<usize>> = vec![Vec::new()];
    let mut d = 1;
    loop {
        let mut cur: Vec<Vec<usize>> = if d == 1 {
            (0..q.arrows.len()).map(|a| vec![a]).collect()
        } else {
            let mut v = Vec::new();
            for p in &paths[d - 1] {
                let t = q.arrows[*p.last().unwrap()].target;
                for (ai, a) in q.arrows.iter().enumerate() {
                    if a.source == t {
                        let mut np = p.clone();
                        np.push(ai);
                        v.push(np);
                    }
                }
            }
            v
        };
        cur.sort_by_key(sort_key);
        let len = cur.len();
        if len > 200_000 {
            return Err(Error::NotFiniteDimensional(d));
        }
        let idx: HashMap<Vec<usize>, usize> = cur.iter().enumerate().map(|(i, p)| (p.clone(), len - 1 - i)).collect();
        let mut gens: Vec<Vector<F>> = Vec::new();
        if let Some(rs) = rels.get(&d) {
            for r in rs {
                let mut v = vec![field.zero(); len];
                for (c, p) in r {
                    let col = idx[p];
                    v[col] = field.add(&v[col], c);
                }
                gens.push(v);
            }
        }
        if d >= 2 {
            let prev = &paths[d - 1];
            let plen = prev.len();
            for x in ideals[d - 1].basis() {
                for (ai, a) in q.arrows.iter().enumerate() {
                    let mut pre = vec![field.zero(); len];
                    let mut post = vec![field.zero(); len];
                    let (mut any_pre, mut any_post) = (false, false);
                    for (c, coef) in x.iter().enumerate() {
                        if field.is_zero(coef) {
                            continue;
                        }
                        let p = &prev[plen - 1 - c];
                        if q.arrows[p[0]].source == a.target {
                            let mut np = vec![ai];
                            np.extend_from_slice(p);
                            pre[idx[&np]] = coef.clone();
                            any_pre = true;
                        }
                        if q.arrows[*p.last().unwrap()].target == a.source {
                            let mut np = p.clone();
                            np.push(ai);
                            post[idx[&np]] = coef.clone();
                            any_post = true;
                        }
                    }
                    if any_pre {
                        gens.push(pre);
                    }
                    if any_post {
                        gens.push(post);
                    }
                }
            }
        }
        let ideal = Subspace::span(field, len, &gens);
        let mut free = ideal.free_columns();
        free.reverse();
        let normal_paths: Vec<usize> = free.iter().map(|&c| len - 1 - c).collect();
        paths.push(cur);
        ideals.push(ideal);
        index.push(idx);
        let empty = normal_paths.is_empty();
        normal.push(normal_paths);
        if empty {
            break;
        }
        if d >= q.max_path_length {
            return Err(Error::NotFiniteDimensional(q.max_path_length));
        }
        d += 1;
    }
    let top = d; // degree at which the quotient vanishes

    // Basis: vertices, then normal paths by degree.
    let mut labels: Vec<String> = q.vertices.iter().map(|v| format!("e{v}")).collect();
    let mut basis_paths: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut basis_of: Vec<HashMap<usize, usize>> = vec![HashMap::new(); top + 1];
    for deg in 1..top {
        for &pi in &normal[deg] {
            let p = paths[deg][pi].clone();
            basis_of[deg].insert(pi, labels.len());
            labels.push(q.path_label(&p));
            basis_paths.push(p);
        }
    }
    let n = labels.len();
    let ends = |i: usize| -> (usize, usize) {
        if i < nv {
            (i, i)
        } else {
            q.path_ends(&basis_paths[i]).unwrap()
        }
    };
    let mut table: Vec<Vec<(usize, F::Elem)>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // b_i * b_j: traverse b_j, then b_i.
            let (si, _ti) = ends(i);
            let (_sj, tj) = ends(j);
            let mut entries = Vec::new();
            if tj == si {
                if i < nv {
                    entries.push((j, field.one()));
                } else if j < nv {
                    entries.push((i, field.one()));
                } else {
                    let mut p = basis_paths[j].clone();
                    p.extend_from_slice(&basis_paths[i]);
                    let deg = p.len();
                    if deg < top {
                        let len = paths[deg].len();
                        let col = index[deg][&p];
                        let res = ideals[deg].residue(&unit_vec(field, len, col));
                        for (c, coef) in res.iter().enumerate() {
                            if !field.is_zero(coef) {
                                let pi = len - 1 - c;
                                entries.push((basis_of[deg][&pi], coef.clone()));
                            }
                        }
                    }
                }
            }
            table.push(entries);
        }
    }
    let mut unit = vec![field.zero(); n];
    for u in unit.iter_mut().take(nv) {
        *u = field.one();
    }
    let mut alg = Algebra::new(field.clone(), labels, table, unit, "quiver")?;
    let rad: Vec<Vector<F>> = (nv..n).map(|i| unit_vec(field, n, i)).collect();
    alg = alg.with_radical(Subspace::span(field, n, &rad))?;
    let idem: Vec<Vector<F>> = (0..nv).map(|i| unit_vec(field, n, i)).collect();
    alg = alg.with_idempotents(idem)?;
    let arrow_basis: Vec<usize> = (0..q.arrows.len())
        .map(|a| basis_of[1][&index[1][&vec![a]]])
        .collect();
    let mut gens: Vec<Vector<F>> = (0..nv).map(|i| unit_vec(field, n, i)).collect();
    gens.extend(arrow_basis.iter().map(|&b| unit_vec(field, n, b)));
    alg = alg.with_generators(gens);
    alg.set_quiver(QuiverInfo {
        vertices: q.vertices.clone(),
        arrows: q.arrows.clone(),
        vertex_basis: (0..nv).collect(),
        arrow_basis,
    });
    Ok(alg)
}

/// Path algebra of the linearly oriented quiver `1 -> 2 -> ... -> n`.
pub fn linear_path_algebra<F: Field>(field: &F, n: usize) -> Result<Algebra<F>> {
    let mut q = QuiverPresentation::new().vertices((1..=n).map(|i| i.to_string()));
    for i in 1..n {
        q = q.arrow(&format!("a{i}"), &i.to_string(), &(i + 1).to_string())?;
    }
    Ok(algebra_from_quiver(field, &q)?.with_provenance(format!("kA{n}")))
}
