//! Command-line front end: builds algebras, computes with bimodules,
//! verifies and replays certificates, and runs the reproduction suite.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use twosided::algebra::{is_connected, Algebra};
use twosided::bimodule::{is_symmetric, tensor_over};
use twosided::catalog::{self, CatalogRef, Entry};
use twosided::group::{invariant_subalgebra, isotypic_decomposition, skew_group_algebra, verify_free_quiver_action, ActionSpec, AlgebraAction};
use twosided::io::{self, canonical_json, common_field, is_catalog_ref, Document, Resolver};
use twosided::jorder::{
    comparability_search, faithful_projinj_check, generators_check, separable_quality, verify_j_geq, CertificateRecord,
    JWitnessPair,
};
use twosided::krull_schmidt::{decompose, DecompositionRecord, KsOptions, DEFAULT_BUDGET};
use twosided::module::{is_self_injective, Rep};
use twosided::suite::run_suite;
use twosided::{Error, Field, FieldSpec, Gfp, Rationals, Result};

const ACTION_CAP: usize = 1024;

#[derive(Parser)]
#[command(name = "twosided", version, about = "Exact computations with finite-dimensional algebras and bimodules")]
struct Cli {
    /// Ground field: GF(p) or Q. Defaults to the field recorded by the inputs.
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per idempotent search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of an algebra given by a quiver file or catalog reference.
    AlgebraInfo { algebra: String },
    /// Tensor product of two bimodule documents over the middle algebra.
    Tensor {
        m: String,
        n: String,
        /// Write the product as a bimodule document.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Krull-Schmidt decomposition of a module or bimodule document.
    Decompose { input: String },
    /// Checks that a witness pair exhibits the regular bimodule as a summand.
    VerifyJgeq {
        witness: String,
        /// Write the certificate to this path.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Replays a certificate, or every certificate of a report.
    VerifyCert { input: String },
    /// Runs every reproduction case and prints a pass/fail table.
    PaperSuite,
    /// Group action given by an action file or catalog reference.
    ActionInfo { action: String },
    /// Bounded search for small witnesses between two algebras.
    Search {
        a: String,
        b: String,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
    },
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Lists the catalog entries.
    List,
    /// Prints an entry as a quiver file, action file or witness document.
    Dump { entry: String },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Inconclusive,
}

struct Outcome {
    results: Value,
    text: Vec<String>,
    certificates: Vec<Value>,
    status: Status,
}

impl Outcome {
    fn pass(results: Value, text: Vec<String>) -> Self {
        Outcome { results, text, certificates: Vec::new(), status: Status::Pass }
    }
}

#[derive(Serialize)]
struct Input {
    #[serde(rename = "ref")]
    reference: String,
    sha256: String,
}

#[derive(Serialize)]
struct ErrorObject {
    kind: String,
    message: String,
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs: Vec<Input>,
    field: Option<String>,
    seed: u64,
    budget: usize,
    status: String,
    results: Value,
    certificates: Vec<Value>,
    error: Option<ErrorObject>,
}

/// Input references with the hash of their content; catalog references
/// hash their canonical text.
#[derive(Default)]
struct Inputs(BTreeMap<String, String>);

impl Inputs {
    fn add(&mut self, reference: &str, base: &Path) -> Result<()> {
        let (key, bytes) = if is_catalog_ref(reference) {
            let canon = CatalogRef::parse(reference)?.to_string();
            (canon.clone(), canon.into_bytes())
        } else {
            let path = base.join(reference);
            let bytes = std::fs::read(&path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            (path.to_string_lossy().into_owned(), bytes)
        };
        let digest = Sha256::digest(&bytes);
        self.0.insert(key, digest.iter().map(|b| format!("{b:02x}")).collect());
        Ok(())
    }

    fn list(self) -> Vec<Input> {
        self.0.into_iter().map(|(reference, sha256)| Input { reference, sha256 }).collect()
    }
}

struct Ctx {
    opts: KsOptions,
    explicit_field: Option<FieldSpec>,
    field: Option<FieldSpec>,
    inputs: Inputs,
}

impl Ctx {
    fn choose_field(&mut self, refs: &[&str], base: &Path) -> Result<FieldSpec> {
        let f = common_field(refs, base, self.explicit_field)?;
        self.field = Some(f);
        Ok(f)
    }
}

macro_rules! over_field {
    ($spec:expr, $fun:ident ( $($arg:expr),* )) => {
        match $spec {
            FieldSpec::Prime(p) => $fun(Gfp::new(p)?, $($arg),*),
            FieldSpec::Rationals => $fun(Rationals, $($arg),*),
        }
    };
}

fn parent(path: &str) -> PathBuf {
    Path::new(path).parent().map(Path::to_path_buf).unwrap_or_default()
}

fn read_document(path: &str, ctx: &mut Ctx) -> Result<(Document, PathBuf)> {
    ctx.inputs.add(path, Path::new(""))?;
    let doc = Document::parse(&io::read(Path::new(path))?)?;
    let base = parent(path);
    for r in doc.algebra_refs() {
        ctx.inputs.add(r, &base)?;
    }
    Ok((doc, base))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn algebra_info(ctx: &mut Ctx, r: &str) -> Result<Outcome> {
    ctx.inputs.add(r, Path::new(""))?;
    let spec = ctx.choose_field(&[r], Path::new(""))?;
    over_field!(spec, algebra_info_in(ctx, r))
}

fn algebra_info_in<F: Field>(field: F, ctx: &mut Ctx, r: &str) -> Result<Outcome> {
    let a = Resolver::new(field, "").algebra(r)?;
    let fp = a.fingerprint()?;
    let connected = is_connected(&a)?;
    let self_injective = is_self_injective(&a)?;
    let symmetric = self_injective && is_symmetric(&a, &ctx.opts)?;
    let results = json!({
        "dim": fp.dim,
        "simples": fp.simples,
        "radical_layers": fp.radical_layers,
        "loewy_length": fp.loewy_length,
        "connected": connected,
        "self_injective": self_injective,
        "symmetric": symmetric,
        "radical_method": a.radical_method(),
    });
    let text = vec![
        format!("algebra: {}", a.provenance()),
        format!("dimension: {}", fp.dim),
        format!("simples: {}", fp.simples),
        format!("radical layers: {:?}", fp.radical_layers),
        format!("Loewy length: {}", fp.loewy_length),
        format!("connected: {}", yes_no(connected)),
        format!("self-injective: {}", yes_no(self_injective)),
        format!("symmetric: {}", yes_no(symmetric)),
    ];
    Ok(Outcome::pass(results, text))
}

fn tensor(ctx: &mut Ctx, m: &str, n: &str, emit: Option<&Path>) -> Result<Outcome> {
    let (dm, bm) = read_document(m, ctx)?;
    let (dn, bn) = read_document(n, ctx)?;
    let (Document::Bimodule(dm), Document::Bimodule(dn)) = (dm, dn) else {
        return Err(Error::InvalidInput("tensor expects two bimodule documents".into()));
    };
    if bm != bn {
        return Err(Error::InvalidInput("both documents must sit in the same directory".into()));
    }
    let refs = [dm.left_algebra_ref.as_str(), dm.right_algebra_ref.as_str(), dn.right_algebra_ref.as_str()];
    let spec = ctx.choose_field(&refs, &bm)?;
    over_field!(spec, tensor_in(&bm, &dm, &dn, emit))
}

fn tensor_in<F: Field>(field: F, base: &Path, dm: &io::BimoduleDoc, dn: &io::BimoduleDoc, emit: Option<&Path>) -> Result<Outcome> {
    let mut res = Resolver::new(field, base);
    let m = res.bimodule(dm)?;
    let n = res.bimodule(dn)?;
    let t = tensor_over(&m, &n)?;
    let doc = io::bimodule_doc(&t.bimodule, &dm.left_algebra_ref, &dn.right_algebra_ref);
    if let Some(path) = emit {
        write_file(path, &canonical_json(&doc))?;
    }
    let results = json!({
        "m_dim": m.dim(),
        "n_dim": n.dim(),
        "tensor_dim": t.bimodule.dim(),
        "balancing_rank": t.balancing_rank,
        "bimodule": doc,
    });
    let text = vec![
        format!("dim M = {}, dim N = {}", m.dim(), n.dim()),
        format!("balancing rank: {}", t.balancing_rank),
        format!("dim M (x) N = {}", t.bimodule.dim()),
    ];
    Ok(Outcome::pass(results, text))
}

fn decompose_cmd(ctx: &mut Ctx, input: &str) -> Result<Outcome> {
    let (doc, base) = read_document(input, ctx)?;
    if matches!(doc, Document::Witness(_)) {
        return Err(Error::InvalidInput("decompose expects a module or bimodule document".into()));
    }
    let spec = ctx.choose_field(&doc.algebra_refs(), &base)?;
    over_field!(spec, decompose_in(ctx, &base, &doc))
}

fn decompose_in<F: Field>(field: F, ctx: &mut Ctx, base: &Path, doc: &Document) -> Result<Outcome> {
    let mut res = Resolver::new(field, base);
    match doc {
        Document::Module(d) => decomposition_outcome(&res.module(d)?, &ctx.opts),
        Document::Bimodule(d) => decomposition_outcome(&res.bimodule(d)?, &ctx.opts),
        Document::Witness(_) => unreachable!("rejected by the caller"),
    }
}

fn decomposition_outcome<F: Field, R: Rep<F>>(m: &R, opts: &KsOptions) -> Result<Outcome> {
    let d = decompose(m, opts)?;
    let record = d.to_record();
    record.replay()?;
    let classes: Vec<Value> = d
        .classes
        .iter()
        .map(|&(r, mult)| json!({"dim": d.summands[r].module.dim(), "multiplicity": mult}))
        .collect();
    let results = json!({
        "dim": m.dim(),
        "summand_dims": d.summand_dims(),
        "classes": classes,
        "indecomposable": d.is_indecomposable(),
    });
    let mut text = vec![format!("dimension: {}", m.dim()), format!("summand dims: {:?}", d.summand_dims())];
    for (i, &(r, mult)) in d.classes.iter().enumerate() {
        text.push(format!("class {i}: dim {} x{mult}", d.summands[r].module.dim()));
    }
    let mut out = Outcome::pass(results, text);
    out.certificates.push(serde_json::to_value(&record).expect("serializable"));
    Ok(out)
}

fn verify_jgeq(ctx: &mut Ctx, witness: &str, cert: Option<&Path>) -> Result<Outcome> {
    if is_catalog_ref(witness) {
        ctx.inputs.add(witness, Path::new(""))?;
        let spec = ctx.choose_field(&[witness], Path::new(""))?;
        return over_field!(spec, verify_catalog_witness(ctx, witness, cert));
    }
    let (doc, base) = read_document(witness, ctx)?;
    let Document::Witness(w) = doc else {
        return Err(Error::InvalidInput("verify-jgeq expects a witness document or catalog witness".into()));
    };
    let refs = Document::Witness(w.clone());
    let spec = ctx.choose_field(&refs.algebra_refs(), &base)?;
    over_field!(spec, verify_witness_file(ctx, &base, &w, cert))
}

fn verify_catalog_witness<F: Field>(field: F, ctx: &mut Ctx, r: &str, cert: Option<&Path>) -> Result<Outcome> {
    match catalog::build(&field, &CatalogRef::parse(r)?)? {
        Entry::Witness(w) => verify_pair(&w, &ctx.opts, cert),
        _ => Err(Error::InvalidInput(format!("`{r}` is not a witness entry"))),
    }
}

fn verify_witness_file<F: Field>(field: F, ctx: &mut Ctx, base: &Path, doc: &io::WitnessDoc, cert: Option<&Path>) -> Result<Outcome> {
    let w = Resolver::new(field, base).witness(doc)?;
    verify_pair(&w, &ctx.opts, cert)
}

fn verify_pair<F: Field>(w: &JWitnessPair<F>, opts: &KsOptions, cert: Option<&Path>) -> Result<Outcome> {
    let c = match verify_j_geq(w, opts) {
        Ok(c) => c,
        Err(Error::NotASummand(dims)) => {
            let t = tensor_over(&w.m, &w.n)?;
            let record = decompose(&t.bimodule, opts)?.to_record();
            let results = json!({"summand": false, "tensor_dim": t.bimodule.dim(), "tensor_summand_dims": dims});
            let text = vec![
                format!("tensor dim: {}", t.bimodule.dim()),
                format!("regular bimodule is not a summand; tensor summand dims {dims:?}"),
            ];
            return Ok(Outcome {
                results,
                text,
                certificates: vec![serde_json::to_value(&record).expect("serializable")],
                status: Status::Fail,
            });
        }
        Err(e) => return Err(e),
    };
    let generators = generators_check(w, &c, opts)?;
    let projinj = faithful_projinj_check(w, &c, opts)?;
    let quality = separable_quality(w, &c, opts)?;
    let record = c.to_record();
    record.replay()?;
    if let Some(path) = cert {
        write_file(path, &format!("{}\n", record.to_canonical_json()))?;
    }
    let results = json!({
        "summand": true,
        "a_ref": record.a_ref,
        "b_ref": record.b_ref,
        "a_dim": record.a_dim,
        "tensor_dim": record.tensor_dim,
        "complement_dim": record.complement_dim,
        "generators_check": generators,
        "faithful_projinj_check": projinj,
        "separable_quality": quality,
    });
    let mut text = vec![
        format!("A = {}, B = {}", record.a_ref, record.b_ref),
        format!("tensor dim: {} (regular {} + complement {})", record.tensor_dim, record.a_dim, record.complement_dim),
        "split pair replayed: yes".to_string(),
        format!("generators check: {}", yes_no(generators)),
        format!("faithful projective-injective check: {}", yes_no(projinj)),
    ];
    for (k, v) in &quality {
        text.push(format!("{k}: {}", yes_no(*v)));
    }
    if let Some(path) = cert {
        text.push(format!("certificate written to {}", path.display()));
    }
    Ok(Outcome {
        results,
        text,
        certificates: vec![serde_json::to_value(&record).expect("serializable")],
        status: if generators && projinj { Status::Pass } else { Status::Fail },
    })
}

fn replay_value(v: &Value) -> Result<&'static str> {
    let text = v.to_string();
    match v.get("kind").and_then(Value::as_str) {
        Some("decomposition") => DecompositionRecord::from_json(&text)?.replay().map(|_| "decomposition"),
        Some(_) => CertificateRecord::from_json(&text)?.replay().map(|_| "split pair"),
        None => Err(Error::InvalidInput("certificate without a `kind`".into())),
    }
}

fn verify_cert(ctx: &mut Ctx, input: &str) -> Result<Outcome> {
    ctx.inputs.add(input, Path::new(""))?;
    let text = io::read(Path::new(input))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    let certs: Vec<Value> = match v.get("certificates") {
        Some(Value::Array(cs)) => cs.clone(),
        Some(_) => return Err(Error::InvalidInput("`certificates` is not a list".into())),
        None => vec![v],
    };
    let mut lines = Vec::new();
    let mut rejected = Vec::new();
    for (i, c) in certs.iter().enumerate() {
        match replay_value(c) {
            Ok(kind) => lines.push(format!("certificate {i} ({kind}): replayed")),
            Err(Error::CertificateRejected(why)) => {
                lines.push(format!("certificate {i}: rejected ({why})"));
                rejected.push(json!({"index": i, "reason": why}));
            }
            Err(e) => return Err(e),
        }
    }
    let status = if rejected.is_empty() { Status::Pass } else { Status::Fail };
    let results = json!({"certificates": certs.len(), "rejected": rejected});
    Ok(Outcome { results, text: lines, certificates: Vec::new(), status })
}

fn paper_suite(ctx: &mut Ctx) -> Result<Outcome> {
    let report = run_suite(ctx.opts.seed, ctx.opts.budget);
    let mut text = Vec::new();
    let mut cases = Vec::new();
    let mut certificates = Vec::new();
    for c in &report.cases {
        let verdict = if c.passed() {
            "PASS"
        } else if c.inconclusive {
            "INCONCLUSIVE"
        } else {
            "FAIL"
        };
        text.push(format!("{:<9} {:<12} {}", c.id, verdict, c.title));
        for check in c.checks.iter().filter(|k| !k.passed) {
            text.push(format!("          failed: {} {}", check.name, check.detail));
        }
        if let Some(e) = &c.error {
            text.push(format!("          error: {e}"));
        }
        certificates.extend(c.certificates.iter().map(|r| serde_json::to_value(r).expect("serializable")));
        cases.push(json!({
            "id": c.id,
            "title": c.title,
            "passed": c.passed(),
            "inconclusive": c.inconclusive,
            "error": c.error,
            "checks": c.checks,
            "certificates": c.certificates.len(),
        }));
    }
    text.push(format!("Loewy lengths equal on all pairs: {}", yes_no(report.loewy.conjecture_consistent)));
    let status = if report.passed() {
        Status::Pass
    } else if report.inconclusive() {
        Status::Inconclusive
    } else {
        Status::Fail
    };
    let results = json!({"cases": cases, "loewy": report.loewy});
    Ok(Outcome { results, text, certificates, status })
}

fn load_action<F: Field>(field: F, r: &str) -> Result<AlgebraAction<F>> {
    if is_catalog_ref(r) {
        return match catalog::build(&field, &CatalogRef::parse(r)?)? {
            Entry::Action(a) => Ok(a),
            _ => Err(Error::InvalidInput(format!("`{r}` is not an action entry"))),
        };
    }
    let spec = ActionSpec::parse(&io::read(Path::new(r))?)?;
    let a = Resolver::new(field, parent(r)).algebra(&spec.algebra_ref)?;
    spec.build(&a, ACTION_CAP)
}

fn action_info(ctx: &mut Ctx, r: &str) -> Result<Outcome> {
    ctx.inputs.add(r, Path::new(""))?;
    let spec = if is_catalog_ref(r) {
        ctx.choose_field(&[r], Path::new(""))?
    } else {
        let algebra_ref = ActionSpec::parse(&io::read(Path::new(r))?)?.algebra_ref;
        ctx.inputs.add(&algebra_ref, &parent(r))?;
        ctx.choose_field(&[algebra_ref.as_str()], &parent(r))?
    };
    over_field!(spec, action_info_in(r))
}

fn action_info_in<F: Field>(field: F, r: &str) -> Result<Outcome> {
    let act = load_action(field, r)?;
    let (inv, _) = invariant_subalgebra(&act)?;
    let (skew, _) = skew_group_algebra(&act)?;
    let components: Vec<usize> = isotypic_decomposition(&act)?.iter().map(|c| c.space.dim()).collect();
    let free = act.algebra().quiver().is_some() && verify_free_quiver_action(&act)?;
    let (afp, ifp, sfp) = (act.algebra().fingerprint()?, inv.fingerprint()?, skew.fingerprint()?);
    let results = json!({
        "group_order": act.group().order(),
        "algebra": afp,
        "invariant_subalgebra": ifp,
        "skew_group_algebra": sfp,
        "isotypic_dims": components,
        "free_on_quiver": free,
    });
    let text = vec![
        format!("group order: {}", act.group().order()),
        format!("algebra fingerprint: {afp}"),
        format!("invariant subalgebra fingerprint: {ifp}"),
        format!("skew group algebra fingerprint: {sfp}"),
        format!("isotypic component dims: {components:?}"),
        format!("free on vertices and arrows: {}", yes_no(free)),
    ];
    Ok(Outcome::pass(results, text))
}

fn search(ctx: &mut Ctx, a: &str, b: &str, max_dim: usize) -> Result<Outcome> {
    ctx.inputs.add(a, Path::new(""))?;
    ctx.inputs.add(b, Path::new(""))?;
    let spec = ctx.choose_field(&[a, b], Path::new(""))?;
    over_field!(spec, search_in(ctx, a, b, max_dim))
}

fn search_in<F: Field>(field: F, ctx: &mut Ctx, a: &str, b: &str, max_dim: usize) -> Result<Outcome> {
    let mut res = Resolver::new(field, "");
    let (x, y): (Arc<Algebra<F>>, Arc<Algebra<F>>) = (res.algebra(a)?, res.algebra(b)?);
    let r = comparability_search(&x, &y, max_dim, &ctx.opts)?;
    let text = vec![
        format!("candidate pairs tried: {}", r.pairs_tried),
        format!("A >= B witness found: {}", yes_no(r.a_geq_b_found)),
        format!("B >= A witness found: {}", yes_no(r.b_geq_a_found)),
    ];
    Ok(Outcome::pass(serde_json::to_value(&r).expect("serializable"), text))
}

fn catalog_list() -> Outcome {
    let entries = catalog::list();
    let text = entries
        .iter()
        .map(|e| format!("{:<16} {:<14} {:<9} {}", e.id, e.params, format!("{:?}", e.kind).to_lowercase(), e.description))
        .collect();
    Outcome::pass(serde_json::to_value(&entries).expect("serializable"), text)
}

fn catalog_dump(ctx: &mut Ctx, r: &str) -> Result<String> {
    let cref = CatalogRef::parse(r)?;
    let spec = ctx.choose_field(&[r], Path::new(""))?;
    let kind = catalog::list().into_iter().find(|e| e.id == cref.id).map(|e| e.kind);
    if kind == Some(catalog::EntryKind::Algebra) {
        if let Some(mut q) = catalog::presentation(&cref)? {
            q.field = Some(spec);
            return Ok(q.to_text());
        }
    }
    over_field!(spec, dump_entry(&cref))
}

fn dump_entry<F: Field>(field: F, r: &CatalogRef) -> Result<String> {
    match catalog::build(&field, r)? {
        Entry::Algebra(_) => Err(Error::InvalidInput(format!("`{r}` has no quiver presentation"))),
        Entry::Action(act) => Ok(ActionSpec::of(&act, act.algebra().provenance()).to_text()),
        Entry::Witness(w) => Ok(canonical_json(&io::witness_doc(&w))),
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconclusive(_) => 3,
        Error::NotASummand(_) | Error::CertificateRejected(_) | Error::FingerprintMismatch { .. } => 2,
        _ => 4,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::AlgebraInfo { .. } => "algebra-info",
        Command::Tensor { .. } => "tensor",
        Command::Decompose { .. } => "decompose",
        Command::VerifyJgeq { .. } => "verify-jgeq",
        Command::VerifyCert { .. } => "verify-cert",
        Command::PaperSuite => "paper-suite",
        Command::ActionInfo { .. } => "action-info",
        Command::Search { .. } => "search",
        Command::Catalog(CatalogCommand::List) => "catalog list",
        Command::Catalog(CatalogCommand::Dump { .. }) => "catalog dump",
    }
}

fn run(cli: &Cli, ctx: &mut Ctx) -> Result<Outcome> {
    match &cli.command {
        Command::AlgebraInfo { algebra } => algebra_info(ctx, algebra),
        Command::Tensor { m, n, emit } => tensor(ctx, m, n, emit.as_deref()),
        Command::Decompose { input } => decompose_cmd(ctx, input),
        Command::VerifyJgeq { witness, cert } => verify_jgeq(ctx, witness, cert.as_deref()),
        Command::VerifyCert { input } => verify_cert(ctx, input),
        Command::PaperSuite => paper_suite(ctx),
        Command::ActionInfo { action } => action_info(ctx, action),
        Command::Search { a, b, max_dim } => search(ctx, a, b, *max_dim),
        Command::Catalog(CatalogCommand::List) => Ok(catalog_list()),
        Command::Catalog(CatalogCommand::Dump { .. }) => unreachable!("handled separately"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let explicit_field = match cli.field.as_deref().map(str::parse::<FieldSpec>).transpose() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(4);
        }
    };
    let mut ctx = Ctx {
        opts: KsOptions { seed: cli.seed, budget: cli.budget },
        explicit_field,
        field: None,
        inputs: Inputs::default(),
    };

    if let Command::Catalog(CatalogCommand::Dump { entry }) = &cli.command {
        return match catalog_dump(&mut ctx, entry) {
            Ok(text) => {
                match &cli.out {
                    Some(path) => {
                        if let Err(e) = write_file(path, &text) {
                            eprintln!("error: {e}");
                            return ExitCode::from(4);
                        }
                    }
                    None => emit(&text),
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(exit_code(&e))
            }
        };
    }

    let outcome = run(&cli, &mut ctx);
    let (status, code, results, text, certificates, error) = match outcome {
        Ok(o) => {
            let (s, c) = match o.status {
                Status::Pass => ("pass", 0),
                Status::Fail => ("fail", 2),
                Status::Inconclusive => ("inconclusive", 3),
            };
            (s, c, o.results, o.text, o.certificates, None)
        }
        Err(e) => {
            let code = exit_code(&e);
            let status = match code {
                2 => "fail",
                3 => "inconclusive",
                _ => "error",
            };
            let err = ErrorObject { kind: error_kind(&e), message: e.to_string() };
            (status, code, Value::Null, Vec::new(), Vec::new(), Some(err))
        }
    };
    let report = Report {
        command: command_name(&cli.command).to_string(),
        inputs: std::mem::take(&mut ctx.inputs).list(),
        field: ctx.field.map(|f| f.to_string()),
        seed: cli.seed,
        budget: cli.budget,
        status: status.to_string(),
        results,
        certificates,
        error,
    };
    let json = canonical_json(&report);
    if let Some(path) = &cli.out {
        if let Err(e) = write_file(path, &json) {
            eprintln!("error: {e}");
            return ExitCode::from(4);
        }
    }
    match cli.format {
        Format::Json => emit(&json),
        Format::Text => {
            if let Some(e) = &report.error {
                eprintln!("error: {}", e.message);
            }
            let mut body: String = text.iter().map(|l| format!("{l}\n")).collect();
            body.push_str(&format!("status: {status}\n"));
            emit(&body);
        }
    }
    ExitCode::from(code)
}
