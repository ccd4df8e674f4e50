use std::path::Path;

use serde_json::{json, Map, Value};
use spreadsplit::ass::{
    certify_witness, find_witness, verify_prop33, verify_thm51, verify_thm53, AssCertificate, AssStatus,
};
use spreadsplit::rees::{
    family_im, family_prop33, family_thm51, family_thm53, family_toric345, rees_presentation, spread_duplicate,
    spread_monomial_fine, split_ideal, SplittingSpec,
};
use spreadsplit::report::{verdict, Check, CheckStatus, Report};
use spreadsplit::{
    ComputationBudget, Error, Field, FieldSpec, Ideal, MonomialIdeal, PrimeField, Rationals, TermOrder,
};

use crate::format::{parse_lines, render_ideal, IdealFile, MapFile};
use crate::{Ass, Cli, Command, Family, Global, SpreadKind, Verify};

pub enum CliError {
    /// Bad arguments or unreadable input; exit code 2.
    Usage(String),
    /// Anything else that stops a command before it produces a report.
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::UnknownVariable(_)
            | Error::NameCollision(_)
            | Error::InvalidField(_)
            | Error::Unsupported(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

pub struct Outcome {
    pub command: String,
    pub inputs: Value,
    pub field: FieldSpec,
    pub order: Option<TermOrder>,
    pub seed: u64,
    pub report: Report,
    pub engine: Value,
    pub text: String,
}

impl Outcome {
    fn status(&self) -> &'static str {
        if self.report.passed() {
            "pass"
        } else if self.report.budget_exceeded() {
            "budget-exceeded"
        } else {
            "fail"
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status() {
            "pass" => 0,
            "budget-exceeded" => 3,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "tool": "spreadsplit",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "inputs": self.inputs,
            "field": self.field.to_string(),
            "order": self.order.as_ref().map(ToString::to_string),
            "seed": self.seed,
            "status": self.status(),
            "checks": self.report.checks,
            "summary": self.report.summary,
            "engine": self.engine,
        })
    }
}

macro_rules! dispatch {
    ($spec:expr, $func:ident ( $($arg:expr),* $(,)? )) => {
        match $spec {
            FieldSpec::Rationals => $func(Rationals, $($arg),*),
            FieldSpec::PrimeField { modulus } => $func(PrimeField::new(modulus)?, $($arg),*),
        }
    };
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn budget(g: &Global) -> ComputationBudget {
    let mut b = ComputationBudget::default();
    if let Some(p) = g.budget_pairs {
        b = b.with_pairs(p);
    }
    if let Some(s) = g.budget_seconds {
        b = b.with_seconds(s);
    }
    b
}

/// Runs `f` as one check and hands back its payload when it succeeded.
fn step<T>(
    report: &mut Report,
    name: &str,
    f: impl FnOnce() -> Result<(CheckStatus, Value, T), Error>,
) -> Option<T> {
    let mut out = None;
    report.push(Check::run(name, false, || {
        let (status, data, payload) = f()?;
        out = Some(payload);
        Ok((status, data))
    }));
    out
}

fn strings<F: Field>(ideal: &Ideal<F>) -> Vec<String> {
    ideal.generators().iter().map(ToString::to_string).collect()
}

/// Moves `ideal` to a ring with the requested order, if any, as a reduced
/// Gröbner basis for that order.
fn ordered<F: Field>(ideal: Ideal<F>, order: Option<&TermOrder>, b: &ComputationBudget) -> Result<Ideal<F>, Error> {
    match order {
        Some(o) if o != ideal.ring().order() => {
            let moved = ideal.transport(&ideal.ring().with_order(o.clone())?)?;
            Ideal::new(moved.ring(), moved.groebner(b)?.elements().to_vec())
        }
        _ => Ok(ideal),
    }
}

struct Ctx<'a> {
    global: &'a Global,
    budget: ComputationBudget,
    report: Report,
    text: String,
}

impl<'a> Ctx<'a> {
    fn new(global: &'a Global) -> Self {
        Ctx {
            global,
            budget: budget(global),
            report: Report::new(),
            text: String::new(),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn finish(self, command: &str, inputs: Value, field: FieldSpec, order: Option<TermOrder>) -> Outcome {
        let engine = serde_json::to_value(self.budget.stats()).expect("serializable");
        Outcome {
            command: command.to_string(),
            inputs,
            field,
            order,
            seed: self.global.seed,
            report: self.report,
            engine,
            text: self.text,
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Gb { file } => ideal_command(g, "gb", file, Query::Gb),
        Command::Nf { poly, file } => ideal_command(g, "nf", file, Query::Nf(poly)),
        Command::Member { poly, file } => ideal_command(g, "member", file, Query::Member(poly)),
        Command::RadicalMember { poly, file } => ideal_command(g, "radical-member", file, Query::Radical(poly)),
        Command::Rees { kind, file } => ideal_command(g, "rees", file, Query::Rees(*kind)),
        Command::Split { spec, file } => {
            let spec: SplittingSpec = spec.parse()?;
            ideal_command(g, "split", file, Query::Split(&spec))
        }
        Command::Spread { kind, params, file } => ideal_command(g, "spread", file, Query::Spread(*kind, params)),
        Command::Ass(Ass::Monomial { file }) => ideal_command(g, "ass monomial", file, Query::AssMonomial),
        Command::Kernel { map } => {
            let parsed = MapFile::parse(&read(map)?)?;
            let field = g.field.or(parsed.field).unwrap_or_default();
            dispatch!(field, kernel(g, &parsed, field, map))
        }
        Command::Certify { ideal, prime, witness } => {
            let parsed = IdealFile::parse(&read(ideal)?)?;
            let prime_file = IdealFile::parse(&read(prime)?)?;
            let field = g.field.or(parsed.field).unwrap_or_default();
            let inputs = json!({ "ideal": ideal, "prime": prime, "witness": witness });
            dispatch!(field, certify(g, &parsed, &prime_file, witness.as_deref(), field, inputs))
        }
        Command::Family(f) => {
            let field = g.field.unwrap_or_default();
            dispatch!(field, family(g, f, field))
        }
        Command::Verify(v) => {
            let field = g.field.unwrap_or_default();
            dispatch!(field, verify(g, v, field))
        }
    }
}

enum Query<'a> {
    Gb,
    Nf(&'a str),
    Member(&'a str),
    Radical(&'a str),
    Rees(spreadsplit::ReesKind),
    Split(&'a SplittingSpec),
    Spread(SpreadKind, &'a str),
    AssMonomial,
}

fn ideal_command(g: &Global, name: &str, file: &Path, q: Query<'_>) -> CliResult<Outcome> {
    let parsed = IdealFile::parse(&read(file)?)?;
    let field = g.field.or(parsed.field).unwrap_or_default();
    dispatch!(field, ideal_query(g, name, file, &parsed, q, field))
}

fn ideal_query<F: Field>(
    field_value: F,
    g: &Global,
    name: &str,
    file: &Path,
    parsed: &IdealFile,
    q: Query<'_>,
    field: FieldSpec,
) -> CliResult<Outcome> {
    let ideal = parsed.build(field_value, g.order.as_ref())?;
    let order = Some(ideal.ring().order().clone());
    let mut inputs = json!({ "file": file, "generators": strings(&ideal) });
    let mut cx = Ctx::new(g);
    let b = cx.budget.clone();
    match q {
        Query::Gb => {
            if let Some(basis) = step(&mut cx.report, "groebner basis", || {
                let gb = ideal.groebner(&b)?;
                let basis = Ideal::new(ideal.ring(), gb.elements().to_vec())?;
                Ok((CheckStatus::Pass, json!({ "basis": strings(&basis), "size": gb.len() }), basis))
            }) {
                cx.text = render_ideal(&basis);
            }
        }
        Query::Nf(p) | Query::Member(p) | Query::Radical(p) => {
            let f = parse_lines(ideal.ring(), &[(1, p.to_string())])?.remove(0);
            inputs["poly"] = json!(f.to_string());
            let shown = match q {
                Query::Nf(_) => step(&mut cx.report, "normal form", || {
                    let nf = ideal.groebner(&b)?.normal_form(&f)?.to_string();
                    Ok((CheckStatus::Pass, json!({ "normal_form": nf }), nf))
                }),
                Query::Member(_) => step(&mut cx.report, "membership", || {
                    let m = ideal.contains(&f, &b)?;
                    Ok((verdict(m), json!({ "member": m }), m.to_string()))
                }),
                _ => step(&mut cx.report, "radical membership", || {
                    let m = ideal.radical_contains(&f, &b)?;
                    Ok((verdict(m), json!({ "member": m }), m.to_string()))
                }),
            };
            if let Some(s) = shown {
                cx.line(s);
            }
        }
        Query::Rees(kind) => {
            inputs["kind"] = json!(kind.to_string());
            if let Some(p) = step(&mut cx.report, "presentation ideal", || {
                let pres = rees_presentation(&ideal, kind, None, &b)?;
                let p = Ideal::new(pres.ring(), pres.prime.groebner(&b)?.elements().to_vec())?;
                Ok((CheckStatus::Pass, json!({ "variables": pres.ring().vars(), "generators": strings(&p) }), p))
            }) {
                cx.text = render_ideal(&p);
            }
        }
        Query::Split(spec) => {
            inputs["spec"] = json!(spec.to_string());
            if let Some(img) = step(&mut cx.report, "splitting", || {
                let (img, _) = split_ideal(&ideal, spec)?;
                Ok((CheckStatus::Pass, json!({ "generators": strings(&img) }), img))
            }) {
                cx.text = render_ideal(&img);
            }
        }
        Query::Spread(kind, params) => {
            inputs["params"] = json!(params);
            let blocks = spread_params(params)?;
            let sp = match kind {
                SpreadKind::Dup => {
                    if blocks.len() != 1 {
                        return Err(CliError::Usage("dup takes a single `var:count`".into()));
                    }
                    let var = ideal.ring().var_index(&blocks[0].0)?;
                    step(&mut cx.report, "spreading", || {
                        let s = spread_duplicate(&ideal, var, blocks[0].1)?;
                        Ok((CheckStatus::Pass, json!({ "generators": strings(&s) }), s))
                    })
                }
                SpreadKind::Monomial => {
                    if !ideal.is_monomial() {
                        return Err(CliError::Usage("monomial spreading needs a monomial ideal".into()));
                    }
                    step(&mut cx.report, "spreading", || {
                        let s = spread_monomial_fine(&ideal, &blocks)?;
                        Ok((CheckStatus::Pass, json!({ "generators": strings(&s) }), s))
                    })
                }
            };
            if let Some(s) = sp {
                cx.text = render_ideal(&s);
            }
        }
        Query::AssMonomial => {
            let mono = MonomialIdeal::from_ideal(&ideal)?;
            let names = ideal.ring().vars();
            let prime = |s: &[usize]| format!("({})", s.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(","));
            let pd = mono.primary_decomposition();
            let embedded = mono.embedded_primes();
            let comps: Vec<Value> = pd
                .iter()
                .map(|(s, c)| {
                    let gens = strings(&c.to_ideal(ideal.ring()).expect("same ring"));
                    json!({ "prime": prime(s), "component": gens, "embedded": embedded.contains(s) })
                })
                .collect();
            for (s, c) in &pd {
                let gens = strings(&c.to_ideal(ideal.ring())?).join(", ");
                let tag = if embedded.contains(s) { " embedded" } else { "" };
                cx.line(format!("{}{tag}: ({gens})", prime(s)));
            }
            cx.report.push(Check::run("primary decomposition", false, || {
                Ok((CheckStatus::Pass, json!({ "components": comps })))
            }));
            cx.report.set("ass_count", pd.len());
            cx.report.set("embedded_count", embedded.len());
        }
    }
    Ok(cx.finish(name, inputs, field, order))
}

/// `var:count` items separated by commas.
fn spread_params(s: &str) -> CliResult<Vec<(String, usize)>> {
    s.split(',')
        .map(|item| {
            let (v, n) = item
                .split_once(':')
                .ok_or_else(|| CliError::Usage(format!("expected `var:count`, got `{item}`")))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad count in `{item}`")))?;
            Ok((v.trim().to_string(), n))
        })
        .collect()
}

fn kernel<F: Field>(field_value: F, g: &Global, parsed: &MapFile, field: FieldSpec, path: &Path) -> CliResult<Outcome> {
    let map = parsed.build(field_value, g.order.as_ref())?;
    let order = Some(map.source().order().clone());
    let inputs = json!({
        "map": path,
        "images": map.images().iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    let mut cx = Ctx::new(g);
    let b = cx.budget.clone();
    if let Some(k) = step(&mut cx.report, "kernel", || {
        let k = map.kernel(&b)?;
        let k = Ideal::new(k.ring(), k.groebner(&b)?.elements().to_vec())?;
        Ok((CheckStatus::Pass, json!({ "generators": strings(&k) }), k))
    }) {
        cx.text = render_ideal(&k);
    }
    Ok(cx.finish("kernel", inputs, field, order))
}

fn certify<F: Field>(
    field_value: F,
    g: &Global,
    parsed: &IdealFile,
    prime_file: &IdealFile,
    witness: Option<&str>,
    field: FieldSpec,
    inputs: Value,
) -> CliResult<Outcome> {
    let ideal = parsed.build(field_value, g.order.as_ref())?;
    let prime = Ideal::new(ideal.ring(), parse_lines(ideal.ring(), &prime_file.body)?)?;
    let w = match witness {
        Some(w) => Some(parse_lines(ideal.ring(), &[(1, w.to_string())])?.remove(0)),
        None => None,
    };
    let order = Some(ideal.ring().order().clone());
    let mut cx = Ctx::new(g);
    let b = cx.budget.clone();
    let seed = g.seed;
    let cert: Option<AssCertificate<F>> = step(&mut cx.report, "associated prime certificate", || {
        let cert = match &w {
            Some(w) => certify_witness(&ideal, &prime, w, &b)?,
            None => find_witness(&ideal, &prime, seed, &b)?,
        };
        let status = match cert.status {
            AssStatus::Verified => CheckStatus::Pass,
            AssStatus::WitnessNotFound => CheckStatus::Inconclusive,
            AssStatus::Refuted => CheckStatus::Fail,
        };
        Ok((status, cert.to_json(), cert))
    });
    if let Some(c) = cert {
        let status = serde_json::to_value(c.status).expect("serializable");
        cx.line(format!("status: {}", status.as_str().unwrap_or_default()));
        if let Some(w) = &c.witness {
            cx.line(format!("witness: {w}"));
        }
    }
    Ok(cx.finish("certify", inputs, field, order))
}

fn family<F: Field>(field_value: F, g: &Global, f: &Family, field: FieldSpec) -> CliResult<Outcome> {
    let mut cx = Ctx::new(g);
    let b = cx.budget.clone();
    let (name, inputs) = match f {
        Family::Toric345 => ("toric345", json!({})),
        Family::Im { m } => ("im", json!({ "m": m })),
        Family::Thm51 { m, v } => ("thm51", json!({ "m": m, "v": v })),
        Family::Prop33 => ("prop33", json!({})),
        Family::Thm53 { n } => ("thm53", json!({ "n": n })),
    };
    let built = step(&mut cx.report, name, || {
        let ideal = match f {
            Family::Toric345 => family_toric345(field_value, &b)?,
            Family::Im { m } => family_im(field_value, *m)?,
            Family::Thm51 { m, v } => {
                if v.len() != *m {
                    return Err(Error::Domain(format!("--v needs {m} entries")));
                }
                family_thm51(field_value, *m, v)?.0
            }
            Family::Prop33 => {
                let p = family_prop33(field_value, &b)?.presentation.prime;
                Ideal::new(p.ring(), p.groebner(&b)?.elements().to_vec())?
            }
            Family::Thm53 { n } => {
                let p = family_thm53(field_value, *n, &b)?.presentation.prime;
                Ideal::new(p.ring(), p.groebner(&b)?.elements().to_vec())?
            }
        };
        let ideal = ordered(ideal, g.order.as_ref(), &b)?;
        Ok((CheckStatus::Pass, json!({ "variables": ideal.ring().vars(), "generators": strings(&ideal) }), ideal))
    });
    let order = built.as_ref().map(|i| i.ring().order().clone());
    if let Some(i) = built {
        cx.text = render_ideal(&i);
    }
    Ok(cx.finish(&format!("family {name}"), inputs, field, order))
}

fn verify<F: Field>(field_value: F, g: &Global, v: &Verify, field: FieldSpec) -> CliResult<Outcome> {
    let mut cx = Ctx::new(g);
    let b = cx.budget.clone();
    let (name, inputs, result) = match v {
        Verify::Thm51 { m, v, e, exhaustive } => {
            if v.len() != *m {
                return Err(CliError::Usage(format!("--v needs {m} entries")));
            }
            let r = verify_thm51(field_value, *m, v, *e, *exhaustive, g.seed, &b);
            ("thm51", json!({ "m": m, "v": v, "e": e, "exhaustive": exhaustive }), r)
        }
        Verify::Prop33 { deep } => ("prop33", json!({ "deep": deep }), verify_prop33(field_value, *deep, &b)),
        Verify::Thm53 { n, deep } => {
            let r = verify_thm53(field_value, *n, *deep, g.seed, &b);
            ("thm53", json!({ "n": n, "deep": deep }), r)
        }
    };
    cx.report = result.map_err(|e| match e {
        Error::Domain(m) => CliError::Usage(m),
        other => CliError::from(other),
    })?;
    let checks = cx.report.checks.clone();
    for c in &checks {
        let tag = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::BudgetExceeded => "BUDGET",
            CheckStatus::Inconclusive => "INCONCLUSIVE",
        };
        let opt = if c.optional { " (optional)" } else { "" };
        let line = format!("[{tag}] {}{opt}", c.name);
        cx.line(line);
    }
    let summary: Map<String, Value> = cx.report.summary.clone();
    for (k, v) in &summary {
        if k == "generators" {
            continue;
        }
        let shown = v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
        cx.line(format!("{k}: {shown}"));
    }
    let status = if cx.report.passed() { "pass" } else if cx.report.budget_exceeded() { "budget exceeded" } else { "fail" };
    cx.line(format!("status: {status}"));
    Ok(cx.finish(&format!("verify {name}"), inputs, field, Some(TermOrder::GrevLex)))
}
