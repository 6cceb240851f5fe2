//! Command-line surface: products, intervals, chains, operator words,
//! verification sweeps and reproduction of the bundled worked examples.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::fixtures::{self, FigureOrder};
use crate::kbruhat::{interval_k, is_peakless, Chain, LabeledPoset};
use crate::operators::{self, act, chain_word, classify, diagram_dot, diagram_text, is_forest_shaped, rc_decompose, yellow_window, OperatorWord};
use crate::qbruhat::q_interval;
use crate::qschubert::{fgp_product, ll_path, ll_product, q_hook_multiply, q_monk_multiply, q_powersum_multiply, q_powersum_via_hooks, quantum_lr, Pick, QLRQuery};
use crate::schubert::{
    hook_multiply_chains, hook_multiply_minimal, oracle_product, powersum_multiply, powersum_via_hooks, Ambient, Expansion,
};
use crate::verify;
use crate::{Partition, Permutation, QElement};

#[derive(Parser, Debug)]
#[command(name = "flagmn", version, about = "Monk, hook and Murnaghan-Nakayama products on flag manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiply a Schubert class by a Schur or power-sum class in x_1..x_k.
    Product(ProductArgs),
    /// Build the interval [u, target] in the k-Bruhat or quantum k-Bruhat order.
    Interval(IntervalArgs),
    /// List the saturated chains of an interval.
    Chains(ChainArgs),
    /// Act with, classify and draw operator words; print the degree-two relation table.
    Operators(OperatorArgs),
    /// Run verification sweeps.
    Verify(VerifyArgs),
    /// Recompute a bundled worked example and compare with its expected output.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    HookTheorem,
    LlReduce,
    FgpOracle,
    Chains,
    Minimal,
}

#[derive(Args, Debug)]
struct Common {
    /// Ambient S_n; defaults to the smallest n holding u with k < n.
    #[arg(long)]
    n: Option<usize>,
    /// Permutation in one-line notation, cycle notation, or `e`.
    #[arg(long)]
    u: String,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ProductArgs {
    #[command(flatten)]
    common: Common,
    /// Hook (b,1^{a-1}) given as `a,b`.
    #[arg(long, value_parser = parse_pair, group = "class_choice")]
    hook: Option<(usize, usize)>,
    /// Power sum p_r.
    #[arg(long, group = "class_choice")]
    powersum: Option<usize>,
    /// Partition `p1,p2,...`.
    #[arg(long, group = "class_choice")]
    lambda: Option<String>,
    /// Schur class such as `s1`, `s21` or `s(2,1)`.
    #[arg(long, group = "class_choice")]
    class: Option<String>,
    #[arg(long)]
    quantum: bool,
    #[arg(long, value_enum)]
    basis: Option<Basis>,
}

#[derive(Args, Debug)]
struct IntervalArgs {
    #[command(flatten)]
    common: Common,
    /// Top element, a permutation or `q-monomial permutation`.
    #[arg(long)]
    target: String,
    #[arg(long)]
    quantum: bool,
}

#[derive(Args, Debug)]
struct ChainArgs {
    #[command(flatten)]
    interval: IntervalArgs,
    /// Keep only peakless chains of this height.
    #[arg(long)]
    height: Option<usize>,
}

#[derive(Args, Debug)]
struct OperatorArgs {
    /// Word such as `v(4,1) v(1,2)`; the rightmost letter acts first.
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    u: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    /// Print the degree-two relation table.
    #[arg(long)]
    relations: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `all` or one suite name.
    #[arg(default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 5)]
    n: usize,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    /// One of q-monk, mn-example, q-minimal, figures.
    name: String,
    /// Compare against this file instead of the bundled expectation.
    #[arg(long)]
    expected: Option<std::path::PathBuf>,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b but got {s}"))?;
    Ok((a.trim().parse().map_err(|_| format!("bad number {a}"))?, b.trim().parse().map_err(|_| format!("bad number {b}"))?))
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;
type Run = std::result::Result<(), Failure>;

/// Parse `args` (including the program name), run the command and return the
/// exit code: 0 success, 1 failed check, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    configure_threads();
    let r = match cli.command {
        Command::Product(a) => product(&a, out),
        Command::Interval(a) => interval(&a, out),
        Command::Chains(a) => chains(&a, out),
        Command::Operators(a) => operators_cmd(&a, out),
        Command::Verify(a) => verify_cmd(&a, out),
        Command::Reproduce(a) => reproduce(&a, out),
    };
    match r {
        Ok(()) => 0,
        Err(Failure::Check(m)) => {
            let _ = writeln!(err, "{m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

fn configure_threads() {
    if let Some(t) = std::env::var("FLAGMN_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
}

fn natural_n(s: &str) -> Result<usize> {
    let s = s.trim();
    if s == "e" {
        Ok(1)
    } else if s.starts_with('(') {
        Ok(Permutation::parse_in(s, 1)?.n())
    } else {
        Ok(s.parse::<Permutation>()?.n())
    }
}

fn ambient(n: Option<usize>, u: &str, k: usize) -> Result<(usize, Permutation)> {
    let n = match n {
        Some(n) => n,
        None => natural_n(u)?.max(k + 1),
    };
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { index: k, max: n.saturating_sub(1) });
    }
    Ok((n, Permutation::parse_in(u, n)?))
}

fn parse_class(s: &str) -> Result<Partition> {
    let body = s.trim().strip_prefix('s').ok_or_else(|| Error::BadPartition(s.to_string()))?;
    body.trim_start_matches('_').parse()
}

fn hooks_of(r: usize, k: usize, n: usize) -> Vec<(usize, usize, i64)> {
    (1..=r.min(k))
        .filter(|&a| r + 1 - a <= n - k)
        .map(|a| (a, r + 1 - a, if a % 2 == 1 { 1 } else { -1 }))
        .collect()
}

fn classical_part(e: &Expansion) -> Expansion {
    let mut out = Expansion::new();
    for (x, c) in e.iter().filter(|(x, _)| x.q.is_one()) {
        out.add_term(x.clone(), c);
    }
    out
}

fn lambda_product(u: &Permutation, lam: &Partition, k: usize, n: usize, quantum: bool, basis: Option<Basis>) -> std::result::Result<Expansion, Failure> {
    if !lam.fits(k, n) {
        return Err(Error::OutsideRectangle(lam.to_string(), k, n - k).into());
    }
    let hook = lam.as_hook();
    let need_hook = |b: &str| Failure::Usage(format!("basis {b} needs a hook partition, got {lam}"));
    let amb = Ambient::Ring(n);
    Ok(match (quantum, basis) {
        (true, None) => match hook {
            Some((a, b)) => q_hook_multiply(u, a, b, k)?,
            None => ll_product(u, lam, k)?,
        },
        (true, Some(Basis::HookTheorem)) => {
            let (a, b) = hook.ok_or_else(|| need_hook("hook-theorem"))?;
            q_hook_multiply(u, a, b, k)?
        }
        (true, Some(Basis::LlReduce)) => ll_product(u, lam, k)?,
        (true, Some(Basis::FgpOracle)) => fgp_product(u, lam, k, n)?,
        (true, Some(b)) => return Err(Failure::Usage(format!("basis {b:?} is classical only"))),
        (false, None) | (false, Some(Basis::HookTheorem)) | (false, Some(Basis::Minimal)) => match hook {
            Some((a, b)) => hook_multiply_minimal(u, a, b, k, amb)?,
            None if basis.is_none() => oracle_product(u, lam, k, amb)?,
            None => return Err(need_hook("minimal")),
        },
        (false, Some(Basis::Chains)) => {
            let (a, b) = hook.ok_or_else(|| need_hook("chains"))?;
            hook_multiply_chains(u, a, b, k, amb)?
        }
        (false, Some(Basis::FgpOracle)) => oracle_product(u, lam, k, amb)?,
        (false, Some(Basis::LlReduce)) => classical_part(&ll_product(u, lam, k)?),
    })
}

fn product(a: &ProductArgs, out: Out) -> Run {
    let c = &a.common;
    let (n, u) = ambient(c.n, &c.u, c.k)?;
    let k = c.k;
    let e = if let Some(r) = a.powersum {
        match (a.quantum, a.basis) {
            (true, None) => q_powersum_multiply(&u, r, k)?,
            (true, Some(Basis::HookTheorem)) => q_powersum_via_hooks(&u, r, k)?,
            (false, None) => powersum_multiply(&u, r, k, Ambient::Ring(n))?,
            (false, Some(Basis::HookTheorem)) => powersum_via_hooks(&u, r, k, Ambient::Ring(n))?,
            (q, b) => {
                let mut acc = Expansion::new();
                for (ha, hb, s) in hooks_of(r, k, n) {
                    acc = acc.add(&lambda_product(&u, &Partition::hook(ha, hb), k, n, q, b)?.scale(s));
                }
                acc
            }
        }
    } else {
        let lam = if let Some((ha, hb)) = a.hook {
            if ha == 0 || hb == 0 {
                return Err(Failure::Usage("hook entries must be positive".into()));
            }
            Partition::hook(ha, hb)
        } else if let Some(l) = &a.lambda {
            l.parse()?
        } else if let Some(s) = &a.class {
            parse_class(s)?
        } else {
            return Err(Failure::Usage("one of --hook, --powersum, --lambda, --class is required".into()));
        };
        if lam.is_empty() {
            Expansion::single(QElement::classical(u.clone()))
        } else if a.quantum && lam.size() == 1 && a.basis.is_none() {
            q_monk_multiply(&Expansion::single(QElement::classical(u.clone())), k)?
        } else {
            lambda_product(&u, &lam, k, n, a.quantum, a.basis)?
        }
    };
    match c.format {
        Format::Text => write!(out, "{}", if e.is_empty() { "0\n".to_string() } else { e.to_text() })?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&e.to_json()).unwrap())?,
        Format::Dot => return Err(Failure::Usage("products have no DOT form".into())),
    }
    Ok(())
}

enum Built {
    Classical(LabeledPoset<Permutation>),
    Quantum(LabeledPoset<QElement>),
}

fn build(a: &IntervalArgs) -> std::result::Result<Built, Failure> {
    let c = &a.common;
    let n = match c.n {
        Some(n) => n,
        None => natural_n(&c.u)?.max(c.k + 1).max(target_n(&a.target)?),
    };
    let (n, u) = ambient(Some(n), &c.u, c.k)?;
    let t = QElement::parse_in(&a.target, n)?;
    let built = if a.quantum || !t.q.is_one() {
        Built::Quantum(q_interval(&QElement::classical(u.clone()), &t, c.k)?)
    } else {
        Built::Classical(interval_k(&u, &t.w, c.k)?)
    };
    let empty = match &built {
        Built::Classical(p) => p.is_empty(),
        Built::Quantum(p) => p.is_empty(),
    };
    if empty {
        return Err(Failure::Check(format!("{u} is not below {t} at k={}", c.k)));
    }
    Ok(built)
}

fn target_n(s: &str) -> Result<usize> {
    let tail = s.rsplit(|c: char| c.is_whitespace() || c == '*' || c == '}').next().unwrap_or("");
    natural_n(tail)
}

fn interval(a: &IntervalArgs, out: Out) -> Run {
    let text = match (build(a)?, a.common.format) {
        (Built::Classical(p), Format::Text) => p.to_text(),
        (Built::Classical(p), Format::Json) => serde_json::to_string_pretty(&p.to_json()).unwrap() + "\n",
        (Built::Classical(p), Format::Dot) => p.to_dot(),
        (Built::Quantum(p), Format::Text) => p.to_text(),
        (Built::Quantum(p), Format::Json) => serde_json::to_string_pretty(&p.to_json()).unwrap() + "\n",
        (Built::Quantum(p), Format::Dot) => p.to_dot(),
    };
    write!(out, "{text}")?;
    Ok(())
}

fn chain_line<T: std::fmt::Display>(c: &Chain<T>) -> String {
    let els: Vec<String> = c.elements.iter().map(|x| x.to_string()).collect();
    let labels: Vec<String> = c.labels.iter().map(|l| l.to_string()).collect();
    format!("{}  [{}]", els.join(" < "), labels.join(" "))
}

fn chains(a: &ChainArgs, out: Out) -> Run {
    let keep = |labels: &[usize]| a.height.map_or(true, |h| is_peakless(labels, h));
    let rows: Vec<(String, Vec<String>, Vec<usize>, Option<String>)> = match build(&a.interval)? {
        Built::Classical(p) => p
            .chains()
            .into_iter()
            .filter(|c| keep(&c.labels))
            .map(|c| (chain_line(&c), c.elements.iter().map(|x| x.to_string()).collect(), c.labels.clone(), None))
            .collect(),
        Built::Quantum(p) => p
            .chains()
            .into_iter()
            .filter(|c| keep(&c.labels))
            .map(|c| {
                let w = chain_word(&c).to_string();
                (format!("{}  {w}", chain_line(&c)), c.elements.iter().map(|x| x.to_string()).collect(), c.labels.clone(), Some(w))
            })
            .collect(),
    };
    match a.interval.common.format {
        Format::Text => {
            for r in &rows {
                writeln!(out, "{}", r.0)?;
            }
            writeln!(out, "{} chains", rows.len())?;
        }
        Format::Json => {
            let v: Vec<serde_json::Value> =
                rows.iter().map(|r| json!({"elements": r.1, "labels": r.2, "word": r.3})).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "chains": v })).unwrap())?;
        }
        Format::Dot => return Err(Failure::Usage("chains have no DOT form; use `interval --format dot`".into())),
    }
    Ok(())
}

fn operators_cmd(a: &OperatorArgs, out: Out) -> Run {
    if a.relations {
        let rep = operators::relation_table();
        write!(out, "{}", rep.to_text())?;
        writeln!(out, "{} checks, {} failed", rep.checks.len(), rep.failures().len())?;
        if !rep.all_hold() {
            return Err(Failure::Check("relation table has failures".into()));
        }
        if a.word.is_none() {
            return Ok(());
        }
    }
    let w: OperatorWord = a.word.as_deref().ok_or_else(|| Failure::Usage("--word or --relations is required".into()))?.parse()?;
    let n = a.n.unwrap_or(0).max(w.max_index()).max(a.u.as_deref().map(natural_n).transpose()?.unwrap_or(0)).max(2);
    if a.format == Format::Dot {
        write!(out, "{}", diagram_dot(&w, n)?)?;
        return Ok(());
    }
    let action = match (&a.u, a.k) {
        (Some(u), Some(k)) => {
            let (_, u) = ambient(Some(n), u, k)?;
            let r = act(&w, &u, k)?;
            let rc = match &r {
                Some(_) if is_forest_shaped(&w) => rc_decompose(&w, &u, k)?,
                _ => None,
            };
            Some((u, k, r, rc))
        }
        (None, None) => None,
        _ => return Err(Failure::Usage("--u and --k go together".into())),
    };
    let class = classify(&w);
    let window: Vec<String> = yellow_window(&w).iter().map(|(i, j)| format!("({i},{j})")).collect();
    if a.format == Format::Json {
        let mut v = json!({
            "word": w.to_string(),
            "applied": w.applied(),
            "n": n,
            "zeta": w.zeta(n)?.to_string(),
            "minimal": w.is_minimal(),
            "class": class.to_string(),
            "window": window,
            "cyclic_shift": w.o_shift(n, 1)?.to_string(),
            "w0": w.w0(n)?.to_string(),
            "reverse": w.rho().to_string(),
        });
        if let Some((u, k, r, rc)) = &action {
            v["u"] = json!(u.to_string());
            v["k"] = json!(k);
            v["result"] = json!(r.as_ref().map(|x| x.to_string()));
            v["decomposition"] = json!(rc.as_ref().map(|d| json!({"row": d.row.to_string(), "column": d.column.to_string(), "shift": d.shift})));
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap())?;
        return Ok(());
    }
    writeln!(out, "word      {w}")?;
    writeln!(out, "zeta      {}", w.zeta(n)?)?;
    writeln!(out, "minimal   {}", w.is_minimal())?;
    writeln!(out, "class     {class}")?;
    writeln!(out, "shift     {}", w.o_shift(n, 1)?)?;
    writeln!(out, "w0        {}", w.w0(n)?)?;
    writeln!(out, "reverse   {}", w.rho())?;
    if let Some((u, k, r, rc)) = &action {
        writeln!(out, "action    {w} on {u} at k={k} = {}", r.as_ref().map_or("0".to_string(), |x| x.to_string()))?;
        if let Some(d) = rc {
            writeln!(out, "row       {}", d.row)?;
            writeln!(out, "column    {}", d.column)?;
            writeln!(out, "rc-shift  {}", d.shift)?;
        }
    }
    writeln!(out, "{}", diagram_text(&w, n)?)?;
    Ok(())
}

fn verify_cmd(a: &VerifyArgs, out: Out) -> Run {
    if a.n < 3 || a.n > 6 {
        return Err(Failure::Usage(format!("--n must lie in 3..=6, got {}", a.n)));
    }
    let names: Vec<&str> = if a.suite == "all" {
        verify::SUITES.to_vec()
    } else if verify::SUITES.contains(&a.suite.as_str()) {
        vec![a.suite.as_str()]
    } else {
        return Err(Failure::Usage(format!("unknown suite {}; choose all or one of {}", a.suite, verify::SUITES.join(", "))));
    };
    let mut failed = 0;
    for name in names {
        match verify::run_suite(name, a.n).expect("listed suite") {
            Ok(m) => writeln!(out, "{name}: PASS  {m}")?,
            Err(m) => {
                failed += 1;
                writeln!(out, "{name}: FAIL  {m}")?;
            }
        }
    }
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} suite(s) failed")));
    }
    Ok(())
}

fn expectation(a: &ReproduceArgs) -> std::result::Result<String, Failure> {
    match &a.expected {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => fixtures::bundled(&a.name)
            .map(str::to_string)
            .ok_or_else(|| Failure::Usage(format!("unknown example {}; choose q-monk, mn-example, q-minimal or figures", a.name))),
    }
}

fn diff_expansions(got: &Expansion, want: &Expansion, out: Out) -> std::result::Result<bool, Failure> {
    let mut same = true;
    for (x, c) in want.iter() {
        if got.coeff(x) != c {
            same = false;
            writeln!(out, "< {}{} {x}", if c < 0 { "-" } else { "+" }, c.abs())?;
        }
    }
    for (x, c) in got.iter() {
        if want.coeff(x) != c {
            same = false;
            writeln!(out, "> {}{} {x}", if c < 0 { "-" } else { "+" }, c.abs())?;
        }
    }
    Ok(same)
}

fn reproduce(a: &ReproduceArgs, out: Out) -> Run {
    let text = expectation(a)?;
    let ok = match a.name.as_str() {
        "q-monk" | "mn-example" => {
            let f = fixtures::parse_product(&text)?;
            let got = if let Some(r) = f.header.get("powersum") {
                let r = r.parse().map_err(|_| Failure::Usage(format!("bad powersum {r}")))?;
                q_powersum_multiply(&f.u, r, f.k)?
            } else {
                let lam = match f.header.get("class") {
                    Some(c) => parse_class(c)?,
                    None => Partition::hook(1, 1),
                };
                if lam.size() == 1 {
                    q_monk_multiply(&Expansion::single(QElement::classical(f.u.clone())), f.k)?
                } else {
                    lambda_product(&f.u, &lam, f.k, f.n, true, None)?
                }
            };
            write!(out, "{}", got.to_text())?;
            diff_expansions(&got, &f.expected, out)?
        }
        "q-minimal" => {
            let f = fixtures::parse_reduction(&text)?;
            let lam = f.values.first().map(|v| v.0.clone()).unwrap_or_else(|| Partition::hook(1, 1));
            let base = QLRQuery { u: f.u.clone(), w: f.w.clone(), alpha: f.alpha.clone(), lambda: lam, k: f.k };
            let (path, _) = ll_path(&base, Pick::Smallest);
            let mut ok = path.len() == f.steps.len();
            for (idx, (i, q)) in path.iter().enumerate() {
                writeln!(out, "step {i} {} {} {}", q.u, q.w, q.alpha)?;
                if let Some(s) = f.steps.get(idx) {
                    if (s.i, &s.u, &s.w, &s.alpha) != (*i, &q.u, &q.w, &q.alpha) {
                        ok = false;
                        writeln!(out, "< step {} {} {} {}", s.i, s.u, s.w, s.alpha)?;
                    }
                }
            }
            for (lam, want) in &f.values {
                let got = if lam.fits(f.k, f.n) { quantum_lr(&QLRQuery { lambda: lam.clone(), ..base.clone() })? } else { 0 };
                writeln!(out, "N {lam} {got}")?;
                if got != *want {
                    ok = false;
                    writeln!(out, "< N {lam} {want}")?;
                }
            }
            ok
        }
        "figures" => {
            let mut ok = true;
            for f in fixtures::parse_figures(&text)? {
                let kind = match f.order {
                    FigureOrder::Classical => "classical",
                    FigureOrder::Quantum => "quantum",
                    FigureOrder::Levels => "levels",
                };
                match verify::figure_matches(&f) {
                    Ok(m) => writeln!(out, "figure {} ({kind}): match, {m}", f.name)?,
                    Err(m) => {
                        ok = false;
                        writeln!(out, "figure {} ({kind}): MISMATCH {m}", f.name)?;
                    }
                }
            }
            ok
        }
        other => return Err(Failure::Usage(format!("unknown example {other}"))),
    };
    if ok {
        writeln!(out, "{}: match", a.name)?;
        Ok(())
    } else {
        writeln!(out, "{}: MISMATCH", a.name)?;
        Err(Failure::Check(format!("{} differs from the expected output", a.name)))
    }
}
