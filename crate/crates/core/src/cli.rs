//! Command-line front end: argument parsing, dispatch and reports.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::descriptor::{build_gl, parse_dmodule, parse_gl_desc, parse_glmodule};
use crate::dmod::{DModule, Gen, WeylElement};
use crate::duality::{dual_tensor, tensor_invariance_residual};
use crate::error::{Error, Result};
use crate::glmod::GlModule;
use crate::lattice::{fmt_scalar, parse_scalar, wn_roots_up_to, Mode, Scalar, Shadow, SupportSet, Weight, Window};
use crate::levi::{backtotensor_check, FrsModule, KModule, LeviAlg};
use crate::linalg::random_combination;
use crate::localize::{conjugation_check, phi, twist_action_check, twisted_localize, TwistData};
use crate::tensormod::{
    classify_case, derham_complex_residual, derham_d, derham_module, field, mult_table, submodule_closure,
    tmod_mult, tmod_support, Case, TensorModule,
};

#[derive(Parser, Debug)]
#[command(name = "wnrep", version, about = "Exact computations with weight modules of polynomial vector fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Support of P, or of T(P, V) when --V is given.
    Support(Common),
    /// Weight multiplicities of T(P, V) on a window.
    Mult(Common),
    /// Finite-multiplicity criterion for T(P, V).
    Criterion(Common),
    /// Checks d o d = 0 on the de Rham complex of P.
    Derham(Common),
    /// Window closure of a random seed in T(P, V).
    Closure(Common),
    /// Twisted localization of P at x_i or d_i.
    Localize(LocalizeArgs),
    /// The twist automorphism and its action formula.
    Twist(LocalizeArgs),
    /// Restricted dual of T(P, V) and its pairing.
    Dualize(Common),
    /// Which case of the classification T(P, V) falls in.
    Classify(Common),
    /// Levi algebra axioms and the comparison with T(P~, S^).
    LeviCheck(LeviArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// D-module descriptor, e.g. "O*OF*XL(1/2)".
    #[arg(long = "P")]
    pub p: String,
    /// gl(n)-module descriptor, e.g. "wedge(1)" or "resD(O*OF;1)".
    #[arg(long = "V")]
    pub v: Option<String>,
    /// k-module descriptor for levi-check; blocks separated by '|'.
    #[arg(long = "S")]
    pub s: Option<String>,
    /// Window radius per coordinate.
    #[arg(long, default_value_t = 4)]
    pub window: i64,
    /// Margin between the window and its interior.
    #[arg(long, default_value_t = 1)]
    pub margin: u32,
    /// Largest |alpha| of the generators x^alpha d_k used by closure.
    #[arg(long = "gen-degree", default_value_t = 2)]
    pub gen_degree: u32,
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct LocalizeArgs {
    #[command(flatten)]
    pub common: Common,
    /// Coordinate (1-based).
    #[arg(long)]
    pub at: usize,
    #[arg(long, value_enum)]
    pub elem: Elem,
    /// Twist exponent.
    #[arg(long, allow_hyphen_values = true)]
    pub exp: String,
}

#[derive(Args, Debug, Clone)]
pub struct LeviArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub n: usize,
    #[arg(long = "p")]
    pub pdim: usize,
    #[arg(long)]
    pub m: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elem {
    X,
    D,
}

/// One verification inside a report.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// "exact" for decided facts, "window heuristic" for closure evidence.
    pub kind: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, Value)>,
    pub results: Vec<(String, Value)>,
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    fn input(&mut self, k: &str, v: impl Into<Value>) {
        self.inputs.push((k.into(), v.into()));
    }

    fn result(&mut self, k: &str, v: impl Into<Value>) {
        self.results.push((k.into(), v.into()));
    }

    fn check(&mut self, name: &str, pass: bool, kind: &'static str, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, kind, detail: detail.into() });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("inputs".into(), Value::Object(self.inputs.iter().cloned().collect()));
        m.insert("results".into(), Value::Object(self.results.iter().cloned().collect()));
        if let Some((cols, rows)) = &self.table {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(cols.iter().cloned().zip(r.iter().map(|x| json!(x))).collect()))
                .collect();
            m.insert("table".into(), Value::Array(rows));
        }
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass, "kind": c.kind, "detail": c.detail}))
            .collect();
        m.insert("checks".into(), Value::Array(checks));
        m.insert("pass".into(), json!(self.pass()));
        serde_json::to_string_pretty(&Value::Object(m)).expect("serializable") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let cell = |v: &Value| match v {
            Value::String(s) => csv_escape(s),
            other => csv_escape(&other.to_string()),
        };
        out.push_str("section,key,value\n");
        out.push_str(&format!("command,name,{}\n", csv_escape(&self.command)));
        for (k, v) in &self.inputs {
            out.push_str(&format!("input,{},{}\n", csv_escape(k), cell(v)));
        }
        for (k, v) in &self.results {
            out.push_str(&format!("result,{},{}\n", csv_escape(k), cell(v)));
        }
        for c in &self.checks {
            out.push_str(&format!("check,{},{}\n", csv_escape(&c.name), if c.pass { "pass" } else { "fail" }));
        }
        if let Some((cols, rows)) = &self.table {
            out.push('\n');
            out.push_str(&cols.iter().map(|c| csv_escape(c)).collect::<Vec<_>>().join(","));
            out.push('\n');
            for r in rows {
                out.push_str(&r.iter().map(|c| csv_escape(c)).collect::<Vec<_>>().join(","));
                out.push('\n');
            }
        }
        out
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn weight_json(w: &Weight) -> Value {
    Value::Array(w.0.iter().map(|x| json!(fmt_scalar(x))).collect())
}

fn mode_name(m: &Mode) -> &'static str {
    match m {
        Mode::NonNeg => ">=0",
        Mode::NonPos => "<=0",
        Mode::Full => "Z",
        Mode::Point => "0",
    }
}

fn support_json(s: &SupportSet) -> Value {
    Value::Array(
        s.cones
            .iter()
            .map(|c| {
                json!({
                    "base": weight_json(&c.base),
                    "modes": c.modes.iter().map(mode_name).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn roots_json(r: &std::collections::BTreeSet<(usize, usize)>) -> Value {
    Value::Array(r.iter().map(|(i, j)| json!(format!("e{}-e{}", i + 1, j + 1))).collect())
}

fn shadow_json(s: &Shadow) -> Value {
    json!({
        "F": roots_json(&s.finite),
        "I": roots_json(&s.injective),
        "Plus": roots_json(&s.plus),
        "Minus": roots_json(&s.minus),
    })
}

fn window(c: &Common, n: usize) -> Window {
    Window::radius(n, c.window).with_margin(c.margin)
}

fn module_p(c: &Common) -> Result<DModule> {
    parse_dmodule(&c.p)
}

fn module_v(c: &Common, n: usize) -> Result<GlModule> {
    let text = c.v.as_deref().ok_or_else(|| Error::Validation("--V is required".into()))?;
    parse_glmodule(text, n)
}

fn tensor(c: &Common) -> Result<TensorModule> {
    let p = module_p(c)?;
    let v = module_v(c, p.n())?;
    TensorModule::new(p, v)
}

fn common_inputs(r: &mut Report, c: &Common) {
    r.input("P", c.p.clone());
    if let Some(v) = &c.v {
        r.input("V", v.clone());
    }
    r.input("window", c.window);
}

fn mult_rows(t: &TensorModule, w: &Window) -> Vec<(Weight, usize)> {
    mult_table(t, w).into_iter().collect()
}

pub fn run(cli: &Cli) -> Result<(Report, Format)> {
    match &cli.command {
        Command::Support(c) => support(c).map(|r| (r, c.format)),
        Command::Mult(c) => mult(c).map(|r| (r, c.format)),
        Command::Criterion(c) => criterion(c).map(|r| (r, c.format)),
        Command::Derham(c) => derham(c).map(|r| (r, c.format)),
        Command::Closure(c) => closure(c).map(|r| (r, c.format)),
        Command::Localize(a) => localize(a).map(|r| (r, a.common.format)),
        Command::Twist(a) => twist(a).map(|r| (r, a.common.format)),
        Command::Dualize(c) => dualize(c).map(|r| (r, c.format)),
        Command::Classify(c) => classify(c).map(|r| (r, c.format)),
        Command::LeviCheck(a) => levi_check(a).map(|r| (r, a.common.format)),
    }
}

fn support(c: &Common) -> Result<Report> {
    let mut r = Report::new("support");
    common_inputs(&mut r, c);
    let p = module_p(c)?;
    let n = p.n();
    let w = Window::radius(n, c.window);
    if c.v.is_none() {
        let s = p.support();
        let brute = crate::dmod::enumerate_support(&p, &w);
        r.result("support", support_json(&s));
        r.result("points_in_window", brute.len());
        r.check("support_matches_enumeration", s.enumerate(&w) == brute, "exact", "cone description vs basis enumeration");
        return Ok(r);
    }
    let t = TensorModule::new(p, module_v(c, n)?)?;
    let brute: std::collections::BTreeSet<Weight> = mult_table(&t, &w).into_keys().collect();
    match tmod_support(&t) {
        Ok(s) => {
            r.result("support", support_json(&s));
            r.check("support_matches_enumeration", s.enumerate(&w) == brute, "exact", "Minkowski sum vs basis enumeration");
        }
        Err(Error::Unsupported(msg)) => r.result("support", json!(msg)),
        Err(e) => return Err(e),
    }
    r.result("points_in_window", brute.len());
    r.table = Some((
        vec!["weight".into()],
        brute.iter().map(|w| vec![w.to_string()]).collect(),
    ));
    Ok(r)
}

fn mult(c: &Common) -> Result<Report> {
    let mut r = Report::new("mult");
    common_inputs(&mut r, c);
    let t = tensor(c)?;
    let w = Window::radius(t.n(), c.window);
    let rows = mult_rows(&t, &w);
    r.result("module", t.to_string());
    r.result("window", json!({"lo": weight_json(&Weight(w.lo.clone())), "hi": weight_json(&Weight(w.hi.clone()))}));
    r.result(
        "mult",
        Value::Array(rows.iter().map(|(wt, d)| json!({"weight": weight_json(wt), "dim": d})).collect()),
    );
    r.table = Some((
        vec!["weight".into(), "dim".into()],
        rows.iter().map(|(wt, d)| vec![wt.to_string(), d.to_string()]).collect(),
    ));
    Ok(r)
}

fn criterion(c: &Common) -> Result<Report> {
    let mut r = Report::new("criterion");
    common_inputs(&mut r, c);
    let t = tensor(c)?;
    let sp = t.p.shadow()?;
    let sv = t.v.shadow()?;
    let ok = crate::lattice::finmult_criterion(&sp, &sv)?;
    r.result("shadow_P", shadow_json(&sp));
    r.result("shadow_V", shadow_json(&sv));
    r.result("finite_multiplicities", ok);
    Ok(r)
}

fn derham(c: &Common) -> Result<Report> {
    let mut r = Report::new("derham");
    common_inputs(&mut r, c);
    r.input("samples", c.samples);
    r.input("seed", c.seed);
    let p = module_p(c)?;
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let res = derham_complex_residual(&p, &Window::radius(p.n(), c.window), c.samples, &mut rng)?;
    r.result("max_residual", fmt_scalar(&res));
    r.check("d_squared_zero", res == Scalar::from_integer(0.into()), "exact", "max coefficient of d(d(v)) over samples");
    Ok(r)
}

fn closure(c: &Common) -> Result<Report> {
    let mut r = Report::new("closure");
    common_inputs(&mut r, c);
    r.input("margin", c.margin);
    r.input("gen_degree", c.gen_degree);
    r.input("seed", c.seed);
    let t = tensor(c)?;
    let w = window(c, t.n());
    let inner = w.interior();
    let labels: Vec<_> = t.labels_in(&inner).into_iter().filter(|l| inner.contains(&t.weight(l))).collect();
    if labels.is_empty() {
        return Err(Error::Validation("interior window holds no basis vectors".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let seed = random_combination(&labels, 3, &mut rng);
    let cl = submodule_closure(&t, &seed, &w, c.gen_degree)?;
    let full = mult_table(&t, &inner);
    let rows: Vec<Vec<String>> = full
        .iter()
        .map(|(wt, d)| vec![wt.to_string(), cl.interior.get(wt).copied().unwrap_or(0).to_string(), d.to_string()])
        .collect();
    let saturated = full.iter().all(|(wt, d)| cl.interior.get(wt) == Some(d));
    r.result("module", t.to_string());
    r.result("evidence", "window heuristic");
    r.result("saturated", saturated);
    r.result("basis_vectors", cl.total);
    r.table = Some((vec!["weight".into(), "closure_dim".into(), "module_dim".into()], rows));
    Ok(r)
}

fn twist_data(a: &LocalizeArgs, n: usize) -> Result<TwistData> {
    if a.at == 0 || a.at > n {
        return Err(Error::Range { what: "coordinate", index: a.at });
    }
    let c = parse_scalar(&a.exp).ok_or_else(|| Error::Syntax { pos: 0, msg: format!("malformed rational '{}'", a.exp) })?;
    let g = match a.elem {
        Elem::X => Gen::X,
        Elem::D => Gen::D,
    };
    Ok(TwistData::new(a.at - 1, g, c))
}

fn localize(a: &LocalizeArgs) -> Result<Report> {
    let c = &a.common;
    let mut r = Report::new("localize");
    r.input("P", c.p.clone());
    r.input("at", a.at);
    r.input("elem", format!("{:?}", a.elem).to_lowercase());
    r.input("exp", a.exp.clone());
    let p = module_p(c)?;
    let t = twist_data(a, p.n())?;
    let out = twisted_localize(&p, &t)?;
    r.result("module", out.to_string());
    r.result("nonsimple", out.nonsimple());
    if let Some(d) = out.as_dmodule() {
        r.result("support", support_json(&d.support()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    for g in [Gen::X, Gen::D] {
        let u = WeylElement::gen(p.n(), t.i, g);
        let res = twist_action_check(&p, &t, &u, c.window, c.samples, &mut rng)?;
        let name = format!("twist_formula_{}{}", if g == Gen::X { "x" } else { "d" }, t.i + 1);
        r.check(&name, res == Scalar::from_integer(0.into()), "exact", format!("residual {}", fmt_scalar(&res)));
    }
    Ok(r)
}

fn twist(a: &LocalizeArgs) -> Result<Report> {
    let c = &a.common;
    let mut r = Report::new("twist");
    r.input("P", c.p.clone());
    r.input("at", a.at);
    r.input("elem", format!("{:?}", a.elem).to_lowercase());
    r.input("exp", a.exp.clone());
    let p = module_p(c)?;
    let n = p.n();
    let t = twist_data(a, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    for g in [Gen::X, Gen::D] {
        let u = WeylElement::gen(n, t.i, g);
        let name = format!("{}{}", if g == Gen::X { "x" } else { "d" }, t.i + 1);
        r.result(&format!("phi({name})"), phi(&u, &t, 64)?.to_string());
        let res = twist_action_check(&p, &t, &u, c.window, c.samples, &mut rng)?;
        r.check(&format!("twist_formula_{name}"), res == Scalar::from_integer(0.into()), "exact", format!("residual {}", fmt_scalar(&res)));
        if t.c.is_integer() {
            let res = conjugation_check(&p, &t, &u, c.window, c.samples, &mut rng)?;
            r.check(&format!("conjugation_{name}"), res == Scalar::from_integer(0.into()), "exact", format!("residual {}", fmt_scalar(&res)));
        }
    }
    Ok(r)
}

fn dualize(c: &Common) -> Result<Report> {
    let mut r = Report::new("dualize");
    common_inputs(&mut r, c);
    r.input("seed", c.seed);
    let t = tensor(c)?;
    let d = dual_tensor(&t)?;
    r.result("dual", d.to_string());
    let w = Window::radius(t.n(), c.window);
    let weights: Vec<Weight> = mult_table(&t, &w).into_keys().collect();
    let rows: Vec<(Weight, usize, usize)> = weights
        .par_iter()
        .map(|mu| (mu.clone(), tmod_mult(&t, mu, &w), tmod_mult(&d, &-mu, &w)))
        .collect();
    let equal = rows.iter().all(|(_, a, b)| a == b);
    r.check("dim_T_mu_equals_dim_dual_minus_mu", equal, "exact", format!("{} weights compared", rows.len()));
    r.table = Some((
        vec!["weight".into(), "dim_T".into(), "dim_dual_at_minus_weight".into()],
        rows.iter().map(|(mu, a, b)| vec![mu.to_string(), a.to_string(), b.to_string()]).collect(),
    ));
    if t.v.is_finite() {
        let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
        let mut worst = Scalar::from_integer(0.into());
        for root in wn_roots_up_to(t.n(), 2) {
            let res = tensor_invariance_residual(&t, &field(root), &w, c.samples.max(1).div_ceil(10), &mut rng)?;
            worst = worst.max(res);
        }
        r.check("pairing_invariance", worst == Scalar::from_integer(0.into()), "exact", format!("residual {}", fmt_scalar(&worst)));
    }
    Ok(r)
}

fn classify(c: &Common) -> Result<Report> {
    let mut r = Report::new("classify");
    common_inputs(&mut r, c);
    let t = tensor(c)?;
    let cl = classify_case(&t)?;
    r.result("case", cl.case.to_string());
    r.result("notes", Value::Array(cl.notes.iter().map(|s| json!(s)).collect()));
    let n = t.n();
    if cl.case == Case::DerhamImage && t.v.fundamental_degree() == Some(n) {
        // Boundary case: attach closure evidence from the image of d.
        let below = derham_module(&t.p, n - 1)?;
        let w = window(c, n);
        let inner = w.interior();
        let labels: Vec<_> = below.labels_in(&inner);
        let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
        let seed = derham_d(&below, &random_combination(&labels, 3, &mut rng))?;
        if !seed.is_zero() {
            let top = derham_module(&t.p, n)?;
            let cl = submodule_closure(&top, &seed, &w, c.gen_degree)?;
            let full = mult_table(&top, &inner);
            let saturated = full.iter().all(|(wt, d)| cl.interior.get(wt) == Some(d));
            r.result("closure_of_d_image_saturates", json!({"evidence": "window heuristic", "value": saturated}));
        }
    }
    Ok(r)
}

fn levi_check(a: &LeviArgs) -> Result<Report> {
    let c = &a.common;
    let mut r = Report::new("levi-check");
    r.input("n", a.n);
    r.input("p", a.pdim);
    r.input("m", a.m);
    common_inputs(&mut r, c);
    let alg = LeviAlg::new(a.n, a.pdim, a.m)?;
    let p = module_p(c)?;
    if p.n() != a.m {
        return Err(Error::Dimension { expected: a.m, got: p.n() });
    }
    let v = module_v(c, a.m)?;
    let s_text = c.s.as_deref().ok_or_else(|| Error::Validation("--S is required".into()))?;
    let parts: Vec<&str> = s_text.split('|').collect();
    let sizes = alg.blocks();
    if parts.len() != sizes.len() {
        return Err(Error::Validation(format!("--S needs {} block(s) separated by '|'", sizes.len())));
    }
    let blocks = parts
        .iter()
        .zip(&sizes)
        .map(|(t, &sz)| build_gl(&parse_gl_desc(t)?, sz))
        .collect::<Result<Vec<_>>>()?;
    let s = KModule { blocks };
    let coords: Vec<String> = (0..a.m).map(|i| format!("x{} -> x{}", a.pdim + i + 1, i + 1)).collect();
    r.result("variables", Value::Array(coords.into_iter().map(Value::from).collect()));
    let f = FrsModule::new(alg, TensorModule::new(p.clone(), v.clone())?, s.clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let res = f.check_g_axioms(&Window::radius(a.m, c.window), c.samples, &mut rng)?;
    r.check("g_axioms", res == Scalar::from_integer(0.into()), "exact", format!("residual {}", fmt_scalar(&res)));
    let w = Window::radius(a.n, c.window);
    match backtotensor_check(&alg, &p, &v, &s, &w) {
        Ok(b) => {
            r.result("tilde_P", b.tilde_p.to_string());
            r.result("S_hat", b.s_hat.desc.to_string());
            r.result("highest_weight", weight_json(&b.highest_weight));
            r.check("top_support_equals_F_support", b.top == b.f_support, "exact", format!("{} weights in window", b.top.len()));
            let bad: BTreeMap<String, (usize, usize)> =
                b.mults.iter().filter(|(_, (x, y))| x != y).map(|(w, v)| (w.to_string(), *v)).collect();
            r.check("top_multiplicities_match", bad.is_empty(), "exact", format!("{} mismatches", bad.len()));
            r.table = Some((
                vec!["weight".into(), "mult_T".into(), "mult_F".into()],
                b.mults.iter().map(|(w, (x, y))| vec![w.to_string(), x.to_string(), y.to_string()]).collect(),
            ));
        }
        Err(Error::Unsupported(msg)) => r.result("backtotensor", json!({"unsupported": msg})),
        Err(e) => return Err(e),
    }
    Ok(r)
}

/// Runs the CLI and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(n) = std::env::var("WNREP_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(&cli) {
        Ok((report, format)) => {
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            print!("{text}");
            if report.pass() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let v = json!({"error": {"code": e.code(), "message": e.to_string()}});
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            2
        }
    }
}
