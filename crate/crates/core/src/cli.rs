//! The `wordlab` command line.
//!
//! Exit status: 0 when the check holds or the report is complete, 1 when a
//! verdict is false (the witness is in the output), 2 on usage or input
//! errors, 3 when enumeration was refused by the budget, 4 on internal
//! errors.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{catalog_group_with_cap, STANDARD_CATALOG};
use crate::characters::{GroupCharacters, TripleCountReport};
use crate::classes::ClassTable;
use crate::conciseness::{corollary_check, fam_bound_check, lemma_concise_report};
use crate::error::{Result, WordlabError};
use crate::group::{gcd, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::perm::{parse_generator_file, Permutation};
use crate::rationality::{power_closed, rational_on, weakly_rational_on};
use crate::word::Word;
use crate::wordmap::{evaluate_word, verbal_subgroup, word_image, Assignment, Enumeration, DEFAULT_BUDGET};

pub const BUDGET_ENV: &str = "WORDLAB_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "wordlab", version, about = "Word maps and rationality checks on finite groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Maximum number of word evaluations per enumeration.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads for enumeration.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
    /// Largest group order that will be built.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP, global = true)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RationalMode {
    Weak,
    Full,
}

#[derive(Debug, Args)]
struct GroupSource {
    /// Catalog name such as S4, D5, Q8, SL(2,3), PSL(2,7).
    #[arg(long)]
    group: Option<String>,
    /// File with one generator per line in cycle notation.
    #[arg(long)]
    gens_file: Option<String>,
}

#[derive(Debug, Args)]
struct GroupAndWord {
    #[command(flatten)]
    source: GroupSource,
    #[arg(long)]
    word: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inspect catalog or user-supplied groups.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Evaluate words and enumerate word maps.
    #[command(subcommand)]
    Word(WordCommand),
    /// Decide (weak) rationality of a word on one group.
    Rational {
        #[command(flatten)]
        target: GroupAndWord,
        #[arg(long, value_enum, default_value_t = RationalMode::Full)]
        mode: RationalMode,
    },
    /// Character table by Dixon's method.
    Chartab {
        #[command(flatten)]
        source: GroupSource,
        /// Include lifted complex values (always on).
        #[arg(long)]
        lift: bool,
        /// Also dump the table over the Dixon prime.
        #[arg(long)]
        mod_p: bool,
    },
    /// Verification suites: triple counts, commutator-power words, index bounds.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Structural checks on sets of elements.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Order, exponent, generators and conjugacy classes.
    Info {
        /// Catalog name (alternative to --group).
        spec: Option<String>,
        #[command(flatten)]
        source: GroupSource,
    },
    /// The standard catalog with orders.
    List,
}

#[derive(Debug, Subcommand)]
enum WordCommand {
    /// Evaluate at one assignment, e.g. --assign x1=3 --assign "x2=(0 1)".
    Eval {
        #[command(flatten)]
        target: GroupAndWord,
        #[arg(long = "assign")]
        assign: Vec<String>,
    },
    /// All values of the word.
    Image {
        #[command(flatten)]
        target: GroupAndWord,
    },
    /// Subgroup generated by the values.
    Verbal {
        #[command(flatten)]
        target: GroupAndWord,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Triple counts N(D,C,C⁻¹) against the character formula and under powering.
    Ra {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long = "D")]
        d: Option<String>,
        #[arg(long = "C")]
        c: Option<String>,
        #[arg(long)]
        e: Option<i64>,
        /// Every class pair and every exponent prime to |G|.
        #[arg(long)]
        all: bool,
    },
    /// Rationality of [...[x1^n1,x2]^n2,...,xk]^nk over catalog groups.
    Corollary {
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
        /// Defaults to the catalog groups of order at most 24.
        #[arg(long, value_delimiter = ';')]
        groups: Vec<String>,
    },
    /// The inequality chain bounding |w(G)| by the number of values.
    Concise {
        #[command(flatten)]
        target: GroupAndWord,
    },
}

#[derive(Debug, Subcommand)]
enum CheckCommand {
    /// Closure of a union of classes under coprime powers.
    PowerClosed {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_delimiter = ',', required = true)]
        class_union: Vec<String>,
    },
}

/// Everything a run produces; `main` only prints this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Serialize)]
pub struct RunDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub elapsed_ms: u128,
    pub payload: Value,
}

struct Outcome {
    payload: Value,
    verdict: Option<bool>,
    table: Option<String>,
}

impl Outcome {
    fn report<T: Serialize>(payload: &T) -> Self {
        Outcome {
            payload: serde_json::to_value(payload).expect("reports serialize"),
            verdict: None,
            table: None,
        }
    }

    fn verdict<T: Serialize>(payload: &T, holds: bool) -> Self {
        Outcome {
            verdict: Some(holds),
            ..Outcome::report(payload)
        }
    }
}

struct Context {
    cap: usize,
    enumeration: Enumeration,
}

pub fn main_exit() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    let out = run(&argv);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

pub fn run<S: AsRef<str>>(argv: &[S]) -> CliOutput {
    let argv: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput { code, stdout: text, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let budget = match cli.budget.map(Ok).unwrap_or_else(env_budget) {
        Ok(b) => b,
        Err(e) => return failure(&e),
    };
    let ctx = Context {
        cap: cli.cap,
        enumeration: Enumeration { budget, jobs: cli.jobs.max(1) },
    };
    let start = Instant::now();
    let outcome = match dispatch(&cli.command, &ctx) {
        Ok(o) => o,
        Err(e) => return failure(&e),
    };
    let code = match outcome.verdict {
        Some(false) => 1,
        _ => 0,
    };
    let stdout = match cli.format {
        Format::Json => {
            let doc = RunDocument {
                tool: "wordlab",
                version: env!("CARGO_PKG_VERSION"),
                command: argv.iter().skip(1).cloned().collect(),
                elapsed_ms: start.elapsed().as_millis(),
                payload: outcome.payload,
            };
            serde_json::to_string_pretty(&doc).expect("document serializes") + "\n"
        }
        Format::Table => outcome.table.unwrap_or_else(|| render_table(&outcome.payload)),
    };
    CliOutput { code, stdout, stderr: String::new() }
}

fn env_budget() -> Result<u64> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| WordlabError::Validation(format!("{BUDGET_ENV}={v} is not an integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn exit_code(e: &WordlabError) -> i32 {
    match e {
        WordlabError::BudgetExceeded { .. } => 3,
        WordlabError::Internal(_) => 4,
        _ => 2,
    }
}

fn failure(e: &WordlabError) -> CliOutput {
    CliOutput {
        code: exit_code(e),
        stdout: String::new(),
        stderr: format!("wordlab: {e}\n"),
    }
}

fn load_group(source: &GroupSource, positional: Option<&str>, cap: usize) -> Result<FiniteGroup> {
    let named = positional.or(source.group.as_deref());
    match (named, &source.gens_file) {
        (Some(spec), None) => catalog_group_with_cap(spec, cap),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let gens = parse_generator_file(&text)?;
            FiniteGroup::build_with_cap(&gens, path, cap)
        }
        (Some(_), Some(_)) => Err(WordlabError::Validation(
            "give either --group or --gens-file, not both".into(),
        )),
        (None, None) => Err(WordlabError::Validation("a group is required (--group or --gens-file)".into())),
    }
}

fn element_json(g: &FiniteGroup, x: usize) -> Value {
    json!({ "index": x, "cycles": g.describe(x), "order": g.element_order(x) })
}

fn dispatch(cmd: &Command, ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.enumeration;
    match cmd {
        Command::Group(GroupCommand::Info { spec, source }) => {
            let g = load_group(source, spec.as_deref(), ctx.cap)?;
            let t = ClassTable::new(&g);
            Ok(Outcome::report(&json!({
                "group": g.name(),
                "order": g.order(),
                "degree": g.degree(),
                "exponent": g.exponent(),
                "abelian": g.is_abelian(),
                "generators": g.generators().iter().map(|&x| g.describe(x)).collect::<Vec<_>>(),
                "classes": t.info(&g),
            })))
        }
        Command::Group(GroupCommand::List) => {
            let mut rows = Vec::new();
            for spec in STANDARD_CATALOG {
                let g = catalog_group_with_cap(spec, ctx.cap)?;
                rows.push(json!({
                    "group": spec,
                    "order": g.order(),
                    "degree": g.degree(),
                    "classes": ClassTable::new(&g).len(),
                }));
            }
            Ok(Outcome::report(&json!({ "groups": rows })))
        }
        Command::Word(WordCommand::Eval { target, assign }) => {
            let g = load_group(&target.source, None, ctx.cap)?;
            let w = Word::parse(&target.word)?;
            let a = parse_assignment(&g, assign)?;
            let v = evaluate_word(&g, &w, &a)?;
            let bindings: serde_json::Map<String, Value> = w
                .variables()
                .iter()
                .map(|&i| (format!("x{i}"), element_json(&g, a.get(i).unwrap())))
                .collect();
            Ok(Outcome::report(&json!({
                "group": g.name(),
                "word": w.to_string(),
                "assignment": bindings,
                "value": element_json(&g, v),
            })))
        }
        Command::Word(WordCommand::Image { target }) => {
            let g = load_group(&target.source, None, ctx.cap)?;
            let w = Word::parse(&target.word)?;
            let img = word_image(&g, &w, cfg)?;
            Ok(Outcome::report(&json!({
                "group": g.name(),
                "word": w.to_string(),
                "m": img.len(),
                "values": img.members().iter().map(|&x| element_json(&g, x)).collect::<Vec<_>>(),
            })))
        }
        Command::Word(WordCommand::Verbal { target }) => {
            let g = load_group(&target.source, None, ctx.cap)?;
            let w = Word::parse(&target.word)?;
            let img = word_image(&g, &w, cfg)?;
            let v = verbal_subgroup(&g, &w, cfg)?;
            Ok(Outcome::report(&json!({
                "group": g.name(),
                "word": w.to_string(),
                "m": img.len(),
                "order": v.order(),
                "index": v.index(),
                "normal": v.is_normal(),
                "abelian": v.is_abelian(),
                "members": v.members().iter().map(|&x| element_json(&g, x)).collect::<Vec<_>>(),
            })))
        }
        Command::Rational { target, mode } => {
            let g = load_group(&target.source, None, ctx.cap)?;
            let w = Word::parse(&target.word)?;
            let verdict = match mode {
                RationalMode::Weak => weakly_rational_on(&g, &w, cfg)?,
                RationalMode::Full => rational_on(&g, &w, cfg)?,
            };
            Ok(Outcome::verdict(&verdict, verdict.holds))
        }
        Command::Chartab { source, mod_p, .. } => {
            let g = load_group(source, None, ctx.cap)?;
            let ch = GroupCharacters::new(&g)?;
            let export = ch.export(*mod_p);
            let mut out = Outcome::report(&export);
            out.table = Some(character_table_text(&ch));
            Ok(out)
        }
        Command::Verify(VerifyCommand::Ra { source, d, c, e, all }) => {
            let g = load_group(source, None, ctx.cap)?;
            let ch = GroupCharacters::new(&g)?;
            let t = &ch.classes;
            if *all {
                let order = g.order() as u64;
                let exps: Vec<i64> = (1..=g.exponent() as i64)
                    .filter(|&x| gcd(x as u64, order) == 1)
                    .collect();
                let mut reports: Vec<TripleCountReport> = Vec::new();
                for dd in 0..t.len() {
                    for cc in 0..t.len() {
                        for &x in &exps {
                            reports.push(ch.galois_check(dd, cc, x)?);
                        }
                    }
                }
                let holds = reports.iter().all(|r| r.holds);
                return Ok(Outcome::verdict(
                    &json!({ "group": g.name(), "checks": reports.len(), "holds": holds, "reports": reports }),
                    holds,
                ));
            }
            let (Some(d), Some(c)) = (d, c) else {
                return Err(WordlabError::Validation("--D and --C are required unless --all is given".into()));
            };
            let report = ch.galois_check(t.by_name(d)?, t.by_name(c)?, e.unwrap_or(1))?;
            Ok(Outcome::verdict(&report, report.holds))
        }
        Command::Verify(VerifyCommand::Corollary { exponents, groups }) => {
            let list: Vec<FiniteGroup> = if groups.is_empty() {
                let mut v = Vec::new();
                for spec in STANDARD_CATALOG {
                    let g = catalog_group_with_cap(spec, ctx.cap)?;
                    if g.order() <= 24 {
                        v.push(g);
                    }
                }
                v
            } else {
                groups
                    .iter()
                    .flat_map(|s| s.split(';'))
                    .map(|s| catalog_group_with_cap(s.trim(), ctx.cap))
                    .collect::<Result<_>>()?
            };
            let report = corollary_check(exponents, &list, cfg)?;
            Ok(Outcome::verdict(&report, report.aggregate))
        }
        Command::Verify(VerifyCommand::Concise { target }) => {
            let g = load_group(&target.source, None, ctx.cap)?;
            let w = Word::parse(&target.word)?;
            let report = lemma_concise_report(&g, &w, cfg)?;
            let fam = match fam_bound_check(&g, &w, cfg) {
                Ok(r) => serde_json::to_value(r).unwrap(),
                Err(e @ WordlabError::Classification(_)) => json!({ "skipped": e.to_string() }),
                Err(e) => return Err(e),
            };
            let mut payload = serde_json::to_value(&report).unwrap();
            payload["fam_bound"] = fam;
            Ok(Outcome {
                payload,
                verdict: Some(report.passes),
                table: Some(report.to_table()),
            })
        }
        Command::Check(CheckCommand::PowerClosed { source, class_union }) => {
            let g = load_group(source, None, ctx.cap)?;
            let t = ClassTable::new(&g);
            let mut set = Vec::new();
            let mut names = Vec::new();
            for name in class_union {
                let k = t.by_name(name)?;
                names.push(t.name(k).to_string());
                set.extend_from_slice(t.class(k));
            }
            let report = power_closed(&g, &set);
            let mut payload = serde_json::to_value(&report).unwrap();
            payload["classes"] = json!(names);
            Ok(Outcome {
                payload,
                verdict: Some(report.power_closed),
                table: None,
            })
        }
    }
}

fn parse_assignment(g: &FiniteGroup, specs: &[String]) -> Result<Assignment> {
    let mut pairs = Vec::new();
    for spec in specs {
        let (var, value) = spec
            .split_once('=')
            .ok_or_else(|| WordlabError::Validation(format!("expected x<i>=<element>, got `{spec}`")))?;
        let var: u32 = var
            .trim()
            .strip_prefix('x')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| WordlabError::Validation(format!("bad variable `{var}`")))?;
        let value = value.trim();
        let elem = if value.starts_with('(') {
            let p = Permutation::parse_cycles(value, g.degree())?;
            g.index_of(&p)
                .ok_or_else(|| WordlabError::Validation(format!("{value} is not in {}", g.name())))?
        } else {
            value
                .parse()
                .ok()
                .filter(|&x: &usize| x < g.order())
                .ok_or_else(|| WordlabError::Validation(format!("bad element index `{value}`")))?
        };
        pairs.push((var, elem));
    }
    Ok(pairs.into_iter().collect())
}

fn character_table_text(ch: &GroupCharacters<'_>) -> String {
    let t = &ch.classes;
    let mut out = format!("{}  order {}  p = {}\n", ch.group.name(), ch.group.order(), ch.mod_p.prime);
    let cell = |z: num_complex::Complex64| {
        if z.im.abs() < 1e-9 {
            format!("{:.4}", z.re + 0.0)
        } else {
            format!("{:.3}{:+.3}i", z.re + 0.0, z.im)
        }
    };
    let mut rows: Vec<Vec<String>> = vec![std::iter::once(String::new())
        .chain((0..t.len()).map(|k| t.name(k).to_string()))
        .collect()];
    rows.push(
        std::iter::once("size".to_string())
            .chain((0..t.len()).map(|k| t.size(k).to_string()))
            .collect(),
    );
    for chi in 0..ch.table.len() {
        rows.push(
            std::iter::once(format!("X.{}", chi + 1))
                .chain((0..t.len()).map(|k| cell(ch.table.value(chi, k))))
                .collect(),
        );
    }
    out.push_str(&align(&rows));
    out
}

fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

/// Plain-text rendering of a JSON payload: scalars as `key  value`, arrays
/// of objects as aligned tables.
fn render_table(v: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = v else {
        return format!("{v}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (k, val) in map {
        match val {
            Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                let _ = writeln!(out, "{k}:");
                let mut header: Vec<String> = Vec::new();
                for item in items {
                    for key in item.as_object().unwrap().keys() {
                        if !header.contains(key) {
                            header.push(key.clone());
                        }
                    }
                }
                let mut rows = vec![header.clone()];
                for item in items {
                    rows.push(header.iter().map(|h| scalar(item.get(h).unwrap_or(&Value::Null))).collect());
                }
                for line in align(&rows).lines() {
                    let _ = writeln!(out, "  {line}");
                }
            }
            _ => {
                let _ = writeln!(out, "{k:width$}  {}", scalar(val));
            }
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
