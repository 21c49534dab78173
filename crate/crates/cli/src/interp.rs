//! Script interpreter and report document.
//!
//! Statements run in order against a single ring. Every result is recorded
//! in a JSON document (`"schema": 1`); the text format is rendered from that
//! document. Timings live in a separate `timing_ms` field so that the rest
//! of the document is reproducible for a given script and configuration.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use serde_json::{json, Value};
use stellate_core::infinite::{truncation_crosscheck, verify_counterexample};
use stellate_core::suites::{
    check_colon_product_law, check_gv_criterion, check_idempotence_criterion,
    check_localization_criterion, check_localizing_gv_criterion, check_star_axioms,
    check_transform_laws, check_transform_representation,
};
use stellate_core::{
    check_colon_product, in_saturation, is_gv, loc_star, s_transform, t_close, transform_witness,
    v_close, Error as CoreError, ExponentVector, MonomialModule, MultiplicativeSet, PrimeFamily,
    PropertyReport, Sampler, StarOperator, DEFAULT_MAX_ITER,
};
use thiserror::Error;

use crate::dsl::{parse, Expr, MonomialLit, Script, Span, Statement, Stmt};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

pub const SCHEMA_VERSION: u32 = 1;

pub const SUITES: [&str; 9] = [
    "star-axioms",
    "transform-laws",
    "gv-criterion",
    "idempotence",
    "localizing-gv",
    "transform-representation",
    "localization",
    "colon-product",
    "truncation",
];

pub const CHECKS: [&str; 9] = [
    "gv",
    "gv-system",
    "insat",
    "member",
    "subset",
    "equal",
    "covering",
    "colon-product",
    "witness",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_deg: i64,
    pub max_iter: usize,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            samples: 100,
            max_deg: 4,
            max_iter: DEFAULT_MAX_ITER,
            format: Format::Text,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("{0}")]
    Parse(#[from] crate::dsl::ParseError),
    #[error("{span}: undefined name `{name}`")]
    UndefinedName { name: String, span: Span },
    #[error("{span}: arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch {
        expected: usize,
        found: usize,
        span: Span,
    },
    #[error("{span}: {detail}")]
    Usage { detail: String, span: Span },
    #[error("{span}: {source}")]
    Core { source: CoreError, span: Span },
}

impl ScriptError {
    pub fn span(&self) -> Span {
        match self {
            ScriptError::Parse(p) => p.span,
            ScriptError::UndefinedName { span, .. }
            | ScriptError::ArityMismatch { span, .. }
            | ScriptError::Usage { span, .. }
            | ScriptError::Core { span, .. } => *span,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            ScriptError::Core {
                source: CoreError::NonStabilizing { .. },
                ..
            } => EXIT_GUARD,
            _ => EXIT_USAGE,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            ScriptError::Parse(_) => "parse",
            ScriptError::UndefinedName { .. } => "undefined-name",
            ScriptError::ArityMismatch { .. } => "arity-mismatch",
            ScriptError::Usage { .. } => "usage",
            ScriptError::Core {
                source: CoreError::NonStabilizing { .. },
                ..
            } => "non-stabilizing",
            ScriptError::Core { .. } => "domain",
        }
    }
}

fn core_at(span: Span) -> impl Fn(CoreError) -> ScriptError {
    move |e| match e {
        CoreError::ArityMismatch { expected, found } => ScriptError::ArityMismatch {
            expected,
            found,
            span,
        },
        source => ScriptError::Core { source, span },
    }
}

fn usage<T>(span: Span, detail: impl Into<String>) -> Result<T, ScriptError> {
    Err(ScriptError::Usage {
        detail: detail.into(),
        span,
    })
}

/// Values a script expression can denote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScriptValue {
    Module(MonomialModule),
    Set(MultiplicativeSet),
    Family(PrimeFamily),
    Star(StarOperator),
    Bool(bool),
}

impl ScriptValue {
    fn type_name(&self) -> &'static str {
        match self {
            ScriptValue::Module(_) => "ideal",
            ScriptValue::Set(_) => "mset",
            ScriptValue::Family(_) => "family",
            ScriptValue::Star(_) => "star",
            ScriptValue::Bool(_) => "bool",
        }
    }

    pub fn render(&self) -> String {
        match self {
            ScriptValue::Module(m) => m.to_string(),
            ScriptValue::Set(s) => s.to_string(),
            ScriptValue::Family(f) => f.to_string(),
            ScriptValue::Star(s) => s.to_string(),
            ScriptValue::Bool(b) => b.to_string(),
        }
    }
}

/// Result of running a script: the report document and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: Value,
    pub exit_code: i32,
}

impl Outcome {
    /// The document without its `timing_ms` field, serialized.
    pub fn deterministic_json(&self) -> String {
        let mut d = self.document.clone();
        if let Some(o) = d.as_object_mut() {
            o.remove("timing_ms");
        }
        serde_json::to_string_pretty(&d).expect("serializable")
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(&self.document).expect("serializable")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json() + "\n",
            Format::Text => render_text(&self.document),
        }
    }
}

struct Interp<'c> {
    cfg: &'c RunConfig,
    nvars: Option<usize>,
    names: HashMap<String, ScriptValue>,
    results: Vec<Value>,
    timing: Vec<Value>,
    failed: bool,
}

impl Interp<'_> {
    fn ring(&self, span: Span) -> Result<usize, ScriptError> {
        match self.nvars {
            Some(n) => Ok(n),
            None => usage(
                span,
                "no ring declared; start the script with `ring R = monomial(vars=N)`",
            ),
        }
    }

    fn monomial(&self, lit: &MonomialLit, nvars: usize) -> Result<ExponentVector, ScriptError> {
        let mut v = vec![0i64; nvars];
        for &(i, e) in &lit.factors {
            if i > nvars {
                return Err(ScriptError::ArityMismatch {
                    expected: nvars,
                    found: i,
                    span: lit.span,
                });
            }
            v[i - 1] += e;
        }
        Ok(ExponentVector::new(v))
    }

    fn eval(&self, e: &Expr) -> Result<ScriptValue, ScriptError> {
        match e {
            Expr::Name(n, span) => match self.names.get(n) {
                Some(v) => Ok(v.clone()),
                None => match n.as_str() {
                    "d" => Ok(ScriptValue::Star(StarOperator::D)),
                    "v" => Ok(ScriptValue::Star(StarOperator::V)),
                    "t" => Ok(ScriptValue::Star(StarOperator::T)),
                    _ => Err(ScriptError::UndefinedName {
                        name: n.clone(),
                        span: *span,
                    }),
                },
            },
            Expr::Ideal(lits, span) => {
                let nvars = self.ring(*span)?;
                let gens = lits
                    .iter()
                    .map(|l| self.monomial(l, nvars))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ScriptValue::Module(
                    MonomialModule::new(nvars, gens).map_err(core_at(*span))?,
                ))
            }
            Expr::Closure(members, span) => {
                let mods = members
                    .iter()
                    .map(|m| self.module(m))
                    .collect::<Result<Vec<_>, _>>()?;
                let set = MultiplicativeSet::new(mods).map_err(core_at(*span))?;
                Ok(ScriptValue::Set(set.with_max_iter(self.cfg.max_iter)))
            }
            Expr::Family(sigmas, span) => {
                let nvars = self.ring(*span)?;
                let mut out = Vec::new();
                for sigma in sigmas {
                    let mut s = Vec::new();
                    for &(i, vspan) in sigma {
                        if i > nvars {
                            return Err(ScriptError::ArityMismatch {
                                expected: nvars,
                                found: i,
                                span: vspan,
                            });
                        }
                        s.push(i - 1);
                    }
                    out.push(s);
                }
                Ok(ScriptValue::Family(
                    PrimeFamily::new(nvars, out).map_err(core_at(*span))?,
                ))
            }
            Expr::Call { func, args, span } => self.call(func, args, *span),
        }
    }

    fn module(&self, e: &Expr) -> Result<MonomialModule, ScriptError> {
        match self.eval(e)? {
            ScriptValue::Module(m) => Ok(m),
            other => usage(
                e.span(),
                format!("expected an ideal, found a {}", other.type_name()),
            ),
        }
    }

    fn set(&self, e: &Expr) -> Result<MultiplicativeSet, ScriptError> {
        match self.eval(e)? {
            ScriptValue::Set(s) => Ok(s),
            other => usage(
                e.span(),
                format!("expected an mset, found a {}", other.type_name()),
            ),
        }
    }

    fn family(&self, e: &Expr) -> Result<PrimeFamily, ScriptError> {
        match self.eval(e)? {
            ScriptValue::Family(f) => Ok(f),
            other => usage(
                e.span(),
                format!("expected a family, found a {}", other.type_name()),
            ),
        }
    }

    fn star(&self, e: &Expr) -> Result<StarOperator, ScriptError> {
        match self.eval(e)? {
            ScriptValue::Star(s) => Ok(s),
            other => usage(
                e.span(),
                format!(
                    "expected a star (d, v, t, stransform(S) or locstar(F)), found a {}",
                    other.type_name()
                ),
            ),
        }
    }

    fn call(&self, func: &str, args: &[Expr], span: Span) -> Result<ScriptValue, ScriptError> {
        let err = core_at(span);
        let arity = |n: usize| -> Result<(), ScriptError> {
            if args.len() == n {
                Ok(())
            } else {
                usage(
                    span,
                    format!("{func} takes {n} argument(s), got {}", args.len()),
                )
            }
        };
        let fold =
            |op: fn(&MonomialModule, &MonomialModule) -> stellate_core::Result<MonomialModule>| {
                if args.len() < 2 {
                    return usage(span, format!("{func} takes at least 2 arguments"));
                }
                let mut acc = self.module(&args[0])?;
                for a in &args[1..] {
                    acc = op(&acc, &self.module(a)?).map_err(&err)?;
                }
                Ok(ScriptValue::Module(acc))
            };
        use ScriptValue::*;
        match func {
            "vclose" => {
                arity(1)?;
                Ok(Module(v_close(&self.module(&args[0])?)))
            }
            "tclose" => {
                arity(1)?;
                Ok(Module(t_close(&self.module(&args[0])?)))
            }
            "inverse" => {
                arity(1)?;
                Ok(Module(self.module(&args[0])?.inverse()))
            }
            "stransform" if args.len() == 1 => {
                Ok(Star(StarOperator::Transform(self.set(&args[0])?)))
            }
            "stransform" => {
                arity(2)?;
                let (a, s) = (self.module(&args[0])?, self.set(&args[1])?);
                Ok(Module(s_transform(&a, &s).map_err(err)?))
            }
            "locstar" if args.len() == 1 => {
                Ok(Star(StarOperator::Localization(self.family(&args[0])?)))
            }
            "locstar" => {
                arity(2)?;
                let (a, f) = (self.module(&args[0])?, self.family(&args[1])?);
                Ok(Module(loc_star(&a, &f).map_err(err)?))
            }
            "colon" => {
                arity(2)?;
                Ok(Module(
                    self.module(&args[0])?
                        .colon(&self.module(&args[1])?)
                        .map_err(err)?,
                ))
            }
            "intersect" => fold(MonomialModule::intersect),
            "add" => fold(MonomialModule::add),
            "mul" => fold(MonomialModule::mul),
            "gv" => {
                arity(1)?;
                Ok(Bool(is_gv(&self.module(&args[0])?).map_err(err)?))
            }
            "insat" => {
                arity(2)?;
                let (a, s) = (self.module(&args[0])?, self.set(&args[1])?);
                Ok(Bool(in_saturation(&a, &s).map_err(err)?))
            }
            _ => Err(ScriptError::UndefinedName {
                name: func.to_string(),
                span,
            }),
        }
    }

    fn principal_gen(&self, e: &Expr) -> Result<ExponentVector, ScriptError> {
        let m = self.module(e)?;
        if !m.is_principal() {
            return usage(
                e.span(),
                format!("expected a principal ideal <monomial>, found {m}"),
            );
        }
        Ok(m.gens()[0].clone())
    }

    fn check(
        &self,
        name: &str,
        args: &[Expr],
        span: Span,
    ) -> Result<(bool, BTreeMap<String, String>), ScriptError> {
        let err = core_at(span);
        let arity = |n: usize| -> Result<(), ScriptError> {
            if args.len() == n {
                Ok(())
            } else {
                usage(
                    span,
                    format!("check {name} takes {n} argument(s), got {}", args.len()),
                )
            }
        };
        let mut detail = BTreeMap::new();
        let holds = match name {
            "gv" => {
                arity(1)?;
                let a = self.module(&args[0])?;
                detail.insert("inverse".into(), a.inverse().to_string());
                is_gv(&a).map_err(err)?
            }
            "gv-system" => {
                arity(1)?;
                self.set(&args[0])?.is_gv_system()
            }
            "insat" => {
                arity(2)?;
                in_saturation(&self.module(&args[0])?, &self.set(&args[1])?).map_err(err)?
            }
            "member" => {
                arity(2)?;
                let x = self.principal_gen(&args[1])?;
                self.module(&args[0])?.contains(&x).map_err(err)?
            }
            "subset" => {
                arity(2)?;
                self.module(&args[0])?
                    .is_subset_of(&self.module(&args[1])?)
                    .map_err(err)?
            }
            "equal" => {
                arity(2)?;
                self.module(&args[0])?
                    .equals(&self.module(&args[1])?)
                    .map_err(err)?
            }
            "covering" => {
                arity(1)?;
                let f = self.family(&args[0])?;
                let missing: Vec<String> = f
                    .uncovered()
                    .iter()
                    .map(|j| format!("x{}", j + 1))
                    .collect();
                if !missing.is_empty() {
                    detail.insert("uncovered".into(), missing.join(", "));
                }
                f.is_covering()
            }
            "colon-product" => {
                arity(2)?;
                let r = check_colon_product(&self.module(&args[0])?, &self.module(&args[1])?)
                    .map_err(err)?;
                detail.insert("(A:B)B".into(), r.product.to_string());
                detail.insert("A ∩ B".into(), r.intersection.to_string());
                detail.insert("equal".into(), r.equal.to_string());
                r.holds()
            }
            "witness" => {
                arity(3)?;
                let star = self.star(&args[0])?;
                let a = self.module(&args[1])?;
                let x = self.principal_gen(&args[2])?;
                let w = transform_witness(&star, &a, &x).map_err(err)?;
                detail.insert("J".into(), w.ideal.to_string());
                w.verdict
            }
            _ => {
                return usage(
                    span,
                    format!("unknown check `{name}`; known: {}", CHECKS.join(", ")),
                )
            }
        };
        Ok((holds, detail))
    }

    fn sampler(&self, nvars: usize) -> Sampler {
        Sampler::fractional(nvars, self.cfg.max_deg.max(1), 3, 1)
    }

    fn suite(&self, name: &str, args: &[Expr], span: Span) -> Result<PropertyReport, ScriptError> {
        let err = core_at(span);
        let arity = |n: usize| -> Result<(), ScriptError> {
            if args.len() == n {
                Ok(())
            } else {
                usage(
                    span,
                    format!("suite {name} takes {n} argument(s), got {}", args.len()),
                )
            }
        };
        let (n, seed) = (self.cfg.samples, self.cfg.seed);
        Ok(match name {
            "star-axioms" => {
                arity(1)?;
                let star = self.star(&args[0])?;
                check_star_axioms(&star, &self.sampler(self.ring(span)?), n, seed)
            }
            "transform-laws" => {
                arity(1)?;
                let s = self.set(&args[0])?;
                check_transform_laws(&s, &self.sampler(s.nvars()), n, seed)
            }
            "gv-criterion" => {
                arity(1)?;
                let s = self.set(&args[0])?;
                check_gv_criterion(&s, &self.sampler(s.nvars()), n, seed)
            }
            "idempotence" => {
                arity(1)?;
                let s = self.set(&args[0])?;
                check_idempotence_criterion(&s, &self.sampler(s.nvars()), n, seed).map_err(err)?
            }
            "localizing-gv" => {
                arity(1)?;
                let s = self.set(&args[0])?;
                check_localizing_gv_criterion(&s, &self.sampler(s.nvars()), n, seed)
            }
            "transform-representation" => {
                arity(1)?;
                let star = self.star(&args[0])?;
                check_transform_representation(&star, &self.sampler(self.ring(span)?), n, seed)
            }
            "localization" => {
                arity(1)?;
                let f = self.family(&args[0])?;
                check_localization_criterion(&f, &self.sampler(f.nvars()), n, seed).map_err(err)?
            }
            "colon-product" => {
                arity(0)?;
                let nvars = self.ring(span)?;
                check_colon_product_law(
                    &Sampler::integral(nvars, self.cfg.max_deg.max(1), 3),
                    n,
                    seed,
                )
            }
            "truncation" => {
                arity(0)?;
                truncation_crosscheck(6, 6, n, seed)
            }
            _ => {
                return usage(
                    span,
                    format!("unknown suite `{name}`; known: {}", SUITES.join(", ")),
                )
            }
        })
    }

    fn record_report(&mut self, st: &Statement, kind: &str, report: PropertyReport) {
        let mut v = serde_json::to_value(&report).expect("serializable");
        let elapsed = v.as_object_mut().and_then(|o| o.remove("elapsed_ms"));
        self.timing
            .push(json!({"line": st.span.line, "elapsed_ms": elapsed}));
        if !report.pass {
            self.failed = true;
        }
        self.results.push(json!({
            "kind": kind,
            "line": st.span.line,
            "statement": st.text,
            "report": v,
        }));
    }

    fn declare(&mut self, st: &Statement, name: &str, value: ScriptValue) {
        self.results.push(json!({
            "kind": "declare",
            "line": st.span.line,
            "statement": st.text,
            "name": name,
            "type": value.type_name(),
            "value": value.render(),
        }));
        self.names.insert(name.to_string(), value);
    }

    fn statement(&mut self, st: &Statement) -> Result<(), ScriptError> {
        match &st.stmt {
            Stmt::Ring { name, nvars } => {
                if self.nvars.is_some() {
                    return usage(st.span, "only one ring per script");
                }
                self.nvars = Some(*nvars);
                self.results.push(json!({
                    "kind": "ring",
                    "line": st.span.line,
                    "statement": st.text,
                    "name": name,
                    "vars": nvars,
                }));
            }
            Stmt::Ideal { name, value } => {
                let m = self.module(value)?;
                self.declare(st, name, ScriptValue::Module(m));
            }
            Stmt::Mset { name, value } => {
                let s = self.set(value)?;
                self.declare(st, name, ScriptValue::Set(s));
            }
            Stmt::Family { name, value } => {
                let f = self.family(value)?;
                self.declare(st, name, ScriptValue::Family(f));
            }
            Stmt::Print(e) => {
                let v = self.eval(e)?;
                self.results.push(json!({
                    "kind": "print",
                    "line": st.span.line,
                    "statement": st.text,
                    "type": v.type_name(),
                    "value": v.render(),
                }));
            }
            Stmt::Check { name, args } => {
                let (holds, detail) = self.check(name, args, st.span)?;
                if !holds {
                    self.failed = true;
                }
                self.results.push(json!({
                    "kind": "check",
                    "line": st.span.line,
                    "statement": st.text,
                    "name": name,
                    "holds": holds,
                    "detail": detail,
                }));
            }
            Stmt::Suite { name, args } => {
                let report = self.suite(name, args, st.span)?;
                self.record_report(st, "suite", report);
            }
            Stmt::Counterexample(name) => {
                if name != "ex2-10" {
                    return usage(
                        st.span,
                        format!("unknown counterexample `{name}`; known: ex2-10"),
                    );
                }
                let report = verify_counterexample(self.cfg.seed);
                self.record_report(st, "counterexample", report);
            }
        }
        Ok(())
    }
}

fn error_entry(e: &ScriptError, statement: Option<&Statement>) -> Value {
    json!({
        "kind": e.kind(),
        "line": e.span().line,
        "col": e.span().col,
        "message": e.to_string(),
        "statement": statement.map(|s| s.text.clone()),
    })
}

fn document(
    cfg: &RunConfig,
    results: Vec<Value>,
    timing: Vec<Value>,
    error: Option<Value>,
    exit_code: i32,
) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "config": {
            "seed": cfg.seed,
            "samples": cfg.samples,
            "max_deg": cfg.max_deg,
            "max_iter": cfg.max_iter,
        },
        "results": results,
        "error": error,
        "exit_code": exit_code,
        "timing_ms": timing,
    })
}

/// Runs a parsed script. Execution stops at the first error; a failing
/// suite or check does not stop it.
pub fn run(script: &Script, cfg: &RunConfig) -> Outcome {
    let mut it = Interp {
        cfg,
        nvars: None,
        names: HashMap::new(),
        results: Vec::new(),
        timing: Vec::new(),
        failed: false,
    };
    let mut error = None;
    let mut exit_code = EXIT_OK;
    for st in &script.statements {
        if let Err(e) = it.statement(st) {
            exit_code = e.exit_code();
            error = Some(error_entry(&e, Some(st)));
            break;
        }
    }
    if error.is_none() && it.failed {
        exit_code = EXIT_VIOLATIONS;
    }
    Outcome {
        document: document(cfg, it.results, it.timing, error, exit_code),
        exit_code,
    }
}

/// Parses and runs script text.
pub fn execute(src: &str, cfg: &RunConfig) -> Outcome {
    match parse(src) {
        Ok(script) => run(&script, cfg),
        Err(e) => {
            let e = ScriptError::from(e);
            Outcome {
                document: document(
                    cfg,
                    Vec::new(),
                    Vec::new(),
                    Some(error_entry(&e, None)),
                    EXIT_USAGE,
                ),
                exit_code: EXIT_USAGE,
            }
        }
    }
}

/// Script run by `selftest`: every suite on fixed GV and non-GV inputs,
/// plus the counterexample. All of it passes.
pub fn selftest_script() -> &'static str {
    "ring R = monomial(vars=2)
mset G = closure{<x1, x2>, <x1^2, x2>}
mset N = closure{<x1>}
family F = {{x1}, {x2}}
suite star-axioms v
suite star-axioms t
suite star-axioms stransform(G)
suite star-axioms locstar(F)
suite transform-laws G
suite gv-criterion G
suite gv-criterion N
suite idempotence G
suite localizing-gv G
suite localizing-gv N
suite transform-representation d
suite transform-representation v
suite transform-representation stransform(G)
suite transform-representation locstar(F)
suite localization F
suite colon-product
suite truncation
counterexample ex2-10
"
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_report(out: &mut String, r: &Value) {
    let pass = r["pass"].as_bool().unwrap_or(false);
    out.push_str(&format!(
        "  {}: {} ({} samples, seed {}, {} violations)\n",
        text_value(&r["suite"]),
        if pass { "PASS" } else { "FAIL" },
        r["samples"],
        r["seed"],
        r["violation_count"],
    ));
    for v in r["verdicts"].as_array().into_iter().flatten() {
        let w = v
            .get("witness")
            .map(|w| format!(" [witness {}]", text_value(w)))
            .unwrap_or_default();
        out.push_str(&format!(
            "    verdict {}: {}{}\n",
            text_value(&v["name"]),
            if v["pass"].as_bool().unwrap_or(false) {
                "holds"
            } else {
                "fails"
            },
            w
        ));
    }
    for v in r["violations"].as_array().into_iter().flatten() {
        let inputs: Vec<String> = v["inputs"]
            .as_object()
            .into_iter()
            .flatten()
            .map(|(k, x)| format!("{k} = {}", text_value(x)))
            .collect();
        let w = v
            .get("witness")
            .map(|w| format!("; witness {}", text_value(w)))
            .unwrap_or_default();
        out.push_str(&format!(
            "    violation [{}] expected {}; {}{}\n",
            text_value(&v["clause"]),
            text_value(&v["expected"]),
            inputs.join(", "),
            w
        ));
    }
    for n in r["notes"].as_array().into_iter().flatten() {
        out.push_str(&format!("    note: {}\n", text_value(n)));
    }
}

/// Human-readable rendering of a report document.
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    for r in doc["results"].as_array().into_iter().flatten() {
        match r["kind"].as_str() {
            Some("print") => out.push_str(&format!("{}\n", text_value(&r["value"]))),
            Some("check") => {
                let holds = r["holds"].as_bool().unwrap_or(false);
                let detail: Vec<String> = r["detail"]
                    .as_object()
                    .into_iter()
                    .flatten()
                    .map(|(k, x)| format!("{k} = {}", text_value(x)))
                    .collect();
                out.push_str(&format!(
                    "{}: {}{}\n",
                    text_value(&r["statement"]),
                    if holds { "holds" } else { "fails" },
                    if detail.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", detail.join(", "))
                    }
                ));
            }
            Some("suite") | Some("counterexample") => {
                out.push_str(&format!("{}\n", text_value(&r["statement"])));
                render_report(&mut out, &r["report"]);
            }
            _ => {}
        }
    }
    if let Some(e) = doc["error"].as_object() {
        out.push_str(&format!("error: {}\n", text_value(&e["message"])));
        if let Some(Value::String(s)) = e.get("statement") {
            out.push_str(&format!("  in statement: {s}\n"));
        }
    }
    out
}
