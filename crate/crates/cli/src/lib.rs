//! The `noecover` command line. [`run`] executes one invocation in-process
//! and returns the exit code with everything that would be printed.
//!
//! Exit codes: 0 when the computation finished and the examined property
//! holds, 1 when it fails (a witness is printed), 2 on input errors.

pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use noecover_core::closure::{IntersectionDefect, TopologyDefect};
use noecover_core::format::{build_system, parse_system, BuildOptions, SystemKind};
use noecover_core::gmp::{
    claim1_check, eq1_violation, gmp_construct, gmp_normalize, gmp_verify, recovered_irreducibles, BlockDefect,
    GmpDecomposition, IdealDefect,
};
use noecover_core::harness::{construct_dense_noetherian, run_all};
use noecover_core::independence::{boolean_embedding, independence_check, max_independent, min_generating};
use noecover_core::irreducible::{decompose, validate_decomposition, Strategy};
use noecover_core::minmax::{minmax_report, qur_partition};
use noecover_core::order::correspondence_check;
use noecover_core::separating::{
    chain_from_independent, independent_from_separating, is_separating, nonseparating_witness, Ambient, ClosedChain,
    Mode,
};
use noecover_core::{ClosureSystem, Completion, Error, Limits, Poset, Representation, SubsetMask};

use report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Min,
    Components,
    Noether,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Full,
    ToDepth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AmbientArg {
    Induced,
    Whole,
}

#[derive(Debug, Parser)]
#[command(name = "noecover", version, about = "Exact checks on finite closure systems")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closure axioms, intersection closure and topological status.
    Check {
        file: PathBuf,
        /// Complete a Moore family under intersections instead of checking it.
        #[arg(long)]
        complete: bool,
    },
    /// Closure of a subset.
    Closure { file: PathBuf, subset: String },
    /// All closed sets.
    Closed { file: PathBuf },
    /// Decomposition of a closed set (default: the ground) into irreducibles.
    Decompose {
        file: PathBuf,
        subset: Option<String>,
        #[arg(long, value_enum, default_value = "min")]
        strategy: StrategyArg,
    },
    /// Independence of a subset, or the largest independent and smallest
    /// generating sets.
    Independent { file: PathBuf, subset: Option<String> },
    /// Dense subset of a closed set built from the specialization order.
    Dense { file: PathBuf, subset: Option<String> },
    /// Checks a chain of closed sets for separation.
    Separating {
        file: PathBuf,
        /// Members separated by `;`, largest first.
        chain: Option<String>,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        /// Work in the system induced on this subset.
        #[arg(long)]
        induce: Option<String>,
        /// Build the chain from this independent set instead.
        #[arg(long, conflicts_with = "chain")]
        from: Option<String>,
        #[arg(long, value_enum, default_value = "induced", requires = "from")]
        ambient: AmbientArg,
    },
    /// Finds a finite set witnessing that a chain is not separating.
    Witness {
        file: PathBuf,
        chain: String,
        #[arg(long)]
        induce: Option<String>,
    },
    /// Block decomposition with ideals: construction, or checks of a given
    /// decomposition literal.
    Gmp {
        file: PathBuf,
        decomposition: Option<String>,
    },
    /// Up-independent sets against ideal and consistent covers.
    Minmax { file: PathBuf },
    /// Order notions against topological ones on every subset.
    Correspond { file: PathBuf },
    /// All verification pipelines over each file.
    Harness {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Environment variable overriding the subset-enumeration budget.
pub const LIMIT_VAR: &str = "NOECOVER_LIMIT";

fn limits_from_env() -> Result<Limits, String> {
    match std::env::var(LIMIT_VAR) {
        Err(_) => Ok(Limits::default()),
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|budget| Limits::default().with_budget(budget))
            .map_err(|_| format!("{LIMIT_VAR} must be a positive integer, got `{v}`")),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let limits = match limits_from_env() {
        Ok(l) => l,
        Err(message) => return input_error(message),
    };
    match execute(&cli.command, limits) {
        Ok(report) => Outcome {
            code: if report.violated() { 1 } else { 0 },
            stdout: match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            },
            stderr: String::new(),
        },
        Err(message) => input_error(message),
    }
}

fn input_error(message: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
    }
}

type CmdResult = Result<Report, String>;

fn load(file: &Path, completion: Completion, limits: Limits) -> Result<ClosureSystem, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let name = display_name(file);
    let spec = parse_system(&text).map_err(|e| format!("{name}: {e}"))?;
    build_system(&spec, &BuildOptions { completion, limits }).map_err(|e| match e {
        Error::NotIntersectionClosed { a, b } => {
            let set = |s: SubsetMask| {
                let labels: Vec<_> = s.iter().map(|i| spec.elements[i].as_str()).collect();
                format!("{{{}}}", labels.join(","))
            };
            format!(
                "{name}: Moore family is not closed under intersection: {} and {} (use `check` to inspect it)",
                set(a),
                set(b)
            )
        }
        other => format!("{name}: {other}"),
    })
}

fn display_name(file: &Path) -> String {
    file.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| file.display().to_string())
}

fn subset(sys: &ClosureSystem, text: Option<&str>) -> Result<SubsetMask, String> {
    match text {
        None => Ok(sys.full()),
        Some(t) => sys.parse_set(t).map_err(|e| explain(sys, e)),
    }
}

/// Error text with sets written in labels.
fn explain(sys: &ClosureSystem, e: Error) -> String {
    let set = |s: SubsetMask| sys.format_set(s);
    match e {
        Error::NotClosed(s) => format!("{} is not closed", set(s)),
        Error::OutOfGround(s) => format!("{s:?} is not within the ground set"),
        Error::NotIndependent(x) => format!("not independent: `{}` lies in the closure of the others", sys.label(x)),
        Error::NotInitialSegment(s) => format!("{} is not an initial segment", set(s)),
        Error::ConditionFails(s) => format!("decomposition fails the generating-set condition at {}", set(s)),
        other => other.to_string(),
    }
}

fn execute(command: &Command, limits: Limits) -> CmdResult {
    match command {
        Command::Check { file, complete } => {
            let completion = if *complete {
                Completion::Complete
            } else {
                Completion::Keep
            };
            check(&load(file, completion, limits)?)
        }
        Command::Closure { file, subset: s } => {
            let sys = load(file, Completion::Reject, limits)?;
            let x = subset(&sys, Some(s))?;
            let mut r = Report::new("closure");
            let c = sys.closure(x);
            r.set("subset", &sys, x).set("closure", &sys, c).bool("closed", c == x);
            Ok(r)
        }
        Command::Closed { file } => {
            let sys = load(file, Completion::Reject, limits)?;
            let closed = sys.closed_family().map_err(|e| explain(&sys, e))?;
            let mut r = Report::new("closed");
            r.int("count", closed.len()).sets("closed_sets", &sys, &closed);
            Ok(r)
        }
        Command::Decompose {
            file,
            subset: s,
            strategy,
        } => {
            let sys = load(file, Completion::Reject, limits)?;
            decompose_cmd(&sys, subset(&sys, s.as_deref())?, *strategy)
        }
        Command::Independent { file, subset: s } => {
            let sys = load(file, Completion::Reject, limits)?;
            match s {
                Some(s) => independent_cmd(&sys, subset(&sys, Some(s))?),
                None => extremes_cmd(&sys),
            }
        }
        Command::Dense { file, subset: s } => {
            let sys = load(file, Completion::Reject, limits)?;
            let c = subset(&sys, s.as_deref())?;
            let d = construct_dense_noetherian(&sys, c).map_err(|e| explain(&sys, e))?;
            let mut r = Report::new("dense");
            let dense = c.is_subset(sys.closure(d.set));
            r.set("closed_set", &sys, c)
                .set("dense_subset", &sys, d.set)
                .set("closure", &sys, sys.closure(d.set))
                .bool("dense", dense)
                .int("longest_closed_chain", d.longest_chain);
            if !dense {
                r.violate();
            }
            Ok(r)
        }
        Command::Separating {
            file,
            chain,
            mode,
            induce,
            from,
            ambient,
        } => {
            let sys = load(file, Completion::Reject, limits)?;
            let sys = induced(&sys, induce.as_deref())?;
            let mode = match mode {
                ModeArg::Full => Mode::Full,
                ModeArg::ToDepth => Mode::ToDepth,
            };
            match (chain, from) {
                (Some(chain), None) => {
                    let chain = ClosedChain::parse(&sys, chain).map_err(|e| explain(&sys, e))?;
                    separating_cmd(&sys, &chain, mode, None)
                }
                (None, Some(x)) => {
                    let x = subset(&sys, Some(x))?;
                    let ambient = match ambient {
                        AmbientArg::Induced => Ambient::Induced,
                        AmbientArg::Whole => Ambient::Whole,
                    };
                    let (space, chain) = chain_from_independent(&sys, x, ambient).map_err(|e| explain(&sys, e))?;
                    separating_cmd(&space, &chain, mode, Some(x))
                }
                _ => Err("separating needs a CHAIN or --from SUBSET".into()),
            }
        }
        Command::Witness { file, chain, induce } => {
            let sys = load(file, Completion::Reject, limits)?;
            let sys = induced(&sys, induce.as_deref())?;
            let chain = ClosedChain::parse(&sys, chain).map_err(|e| explain(&sys, e))?;
            let found = nonseparating_witness(&sys, &chain).map_err(|e| explain(&sys, e))?;
            let mut r = Report::new("witness");
            r.sets("chain", &sys, chain.sets());
            match found {
                Some((m, f)) => {
                    r.bool("separating", false)
                        .int("member_index", m)
                        .set("member", &sys, chain.sets()[m])
                        .set("finite_set", &sys, f)
                        .set("closure", &sys, sys.closure(f));
                    r.violate();
                }
                None => {
                    r.bool("separating", true);
                }
            }
            Ok(r)
        }
        Command::Gmp { file, decomposition } => {
            let sys = load(file, Completion::Reject, limits)?;
            match decomposition {
                None => gmp_construct_cmd(&sys),
                Some(text) => {
                    let d = GmpDecomposition::parse(&sys, text).map_err(|e| explain(&sys, e))?;
                    gmp_check_cmd(&sys, &d)
                }
            }
        }
        Command::Minmax { file } => {
            let (sys, poset, classes) = load_poset(file, limits)?;
            minmax_cmd(&sys, &poset, classes, &limits)
        }
        Command::Correspond { file } => {
            let (sys, poset, classes) = load_poset(file, limits)?;
            correspond_cmd(&sys, &poset, classes, &limits)
        }
        Command::Harness { files } => harness_cmd(files, limits),
    }
}

fn induced(sys: &ClosureSystem, induce: Option<&str>) -> Result<ClosureSystem, String> {
    match induce {
        None => Ok(sys.clone()),
        Some(t) => Ok(sys.induce(subset(sys, Some(t))?)),
    }
}

fn check(sys: &ClosureSystem) -> CmdResult {
    let a = sys.axiom_report().map_err(|e| explain(sys, e))?;
    let mut r = Report::new("check");
    r.int("elements", sys.len());
    r.bool("extensive", a.extensive.is_none());
    if let Some(x) = a.extensive {
        r.set("extensive_witness", sys, x);
    }
    r.bool("monotone", a.monotone.is_none());
    if let Some((x, y)) = a.monotone {
        r.sets("monotone_witness", sys, &[x, y]);
    }
    r.bool("idempotent", a.idempotent.is_none());
    if let Some(x) = a.idempotent {
        r.set("idempotent_witness", sys, x);
    }
    r.bool("intersection_closed", a.intersection_closed.is_none());
    match a.intersection_closed {
        Some(IntersectionDefect::MissingFullSet) => {
            r.set("missing_set", sys, sys.full());
        }
        Some(IntersectionDefect::MissingMeet(x, y)) => {
            r.sets("meet_of", sys, &[x, y]).set("missing_set", sys, x & y);
        }
        None => {}
    }
    r.bool("closure_system", a.is_closure_system());
    r.bool("topological", a.is_topological());
    match a.topological {
        Some(TopologyDefect::EmptyNotClosed(b)) => {
            r.set("closure_of_empty", sys, b);
        }
        Some(TopologyDefect::UnionNotPreserved(x, y)) => {
            r.sets("union_not_preserved", sys, &[x, y]);
        }
        None => {}
    }
    let closed = sys.closed_family().map_err(|e| explain(sys, e))?;
    r.int("closed_sets", closed.len());
    if !a.is_closure_system() {
        r.violate();
    }
    Ok(r)
}

fn decompose_cmd(sys: &ClosureSystem, c: SubsetMask, strategy: StrategyArg) -> CmdResult {
    let (strategy, name) = match strategy {
        StrategyArg::Min => (Strategy::Min, "min"),
        StrategyArg::Components => (Strategy::Components, "components"),
        StrategyArg::Noether => (Strategy::Noether, "noether"),
    };
    let d = decompose(sys, c, strategy).map_err(|e| explain(sys, e))?;
    let valid = validate_decomposition(sys, &d).map_err(|e| explain(sys, e))?;
    let mut r = Report::new("decompose");
    r.set("target", sys, c)
        .text("strategy", name)
        .sets("parts", sys, &d.parts)
        .int("min_parts", d.min_size)
        .int("components", d.components_size)
        .bool("valid", valid);
    if !valid {
        r.violate();
    }
    Ok(r)
}

fn independent_cmd(sys: &ClosureSystem, x: SubsetMask) -> CmdResult {
    let rep = independence_check(sys, x).map_err(|e| explain(sys, e))?;
    let mut r = Report::new("independent");
    r.set("subset", sys, x).bool("independent", rep.independent);
    if let Some(e) = rep.violating {
        r.set("violating", sys, SubsetMask::singleton(e))
            .set("closure_of_rest", sys, sys.closure(x.remove(e)));
        r.violate();
    }
    match &rep.discrete {
        Some(d) => {
            r.bool("discrete", d.holds);
            if let Some(y) = d.non_closed {
                r.set("non_closed_in_subspace", sys, y);
            }
        }
        None => {
            r.text("discrete", "undefined (not topological)");
        }
    }
    r.bool("generating", rep.generating);
    Ok(r)
}

fn extremes_cmd(sys: &ClosureSystem) -> CmdResult {
    let best = max_independent(sys).map_err(|e| explain(sys, e))?;
    let gen = min_generating(sys).map_err(|e| explain(sys, e))?;
    let emb = boolean_embedding(sys, best.set).map_err(|e| explain(sys, e))?;
    let mut r = Report::new("independent");
    r.set("max_independent", sys, best.set)
        .int("max_independent_size", best.size)
        .bool("embedding_verified", emb.verified)
        .set("min_generating", sys, gen.set)
        .int("min_generating_size", gen.size);
    if !emb.verified {
        r.violate();
    }
    Ok(r)
}

fn separating_cmd(sys: &ClosureSystem, chain: &ClosedChain, mode: Mode, from: Option<SubsetMask>) -> CmdResult {
    let v = is_separating(sys, chain, mode).map_err(|e| explain(sys, e))?;
    let mut r = Report::new("separating");
    r.sets("chain", sys, chain.sets())
        .text("mode", if mode == Mode::Full { "full" } else { "to-depth" })
        .bool("separating", v.separating);
    if let Some((m, f)) = v.witness {
        r.int("member_index", m)
            .set("member", sys, chain.sets()[m])
            .set("finite_set", sys, f);
        r.violate();
    }
    if from.is_some() && chain.len() >= 2 {
        let back = independent_from_separating(sys, chain).map_err(|e| explain(sys, e))?;
        r.set("recovered_independent", sys, back);
    }
    Ok(r)
}

fn render_block_defect(sys: &ClosureSystem, d: &BlockDefect) -> String {
    let set = |s: SubsetMask| sys.format_set(s);
    let what = match d.defect {
        IdealDefect::Empty => "empty".to_string(),
        IdealDefect::NotDownwardClosed(y) => format!("not downward closed at {}", set(y)),
        IdealDefect::NotUnionClosed(a, b) => format!("union of {} and {} missing", set(a), set(b)),
        IdealDefect::Improper => "contains its block".to_string(),
        IdealDefect::OutsideBlock(y) => format!("{} is outside the block", set(y)),
    };
    format!("block {}: {what}", d.block)
}

fn gmp_construct_cmd(sys: &ClosureSystem) -> CmdResult {
    let d = gmp_construct(sys).map_err(|e| explain(sys, e))?;
    let mut r = Report::new("gmp");
    r.int("blocks", d.blocks.len()).text("decomposition", d.format(sys));
    gmp_verdict(sys, &d, &mut r)?;
    if r.violated() {
        return Ok(r);
    }
    r.bool("eq1", eq1_violation(sys, &d).is_none());
    let c1 = claim1_check(sys, &d).map_err(|e| explain(sys, e))?;
    r.bool("claim1", c1.holds());
    r.sets("recovered_irreducibles", sys, &recovered_irreducibles(sys, &d));
    if !c1.holds() {
        r.violate();
    }
    Ok(r)
}

fn gmp_verdict(sys: &ClosureSystem, d: &GmpDecomposition, r: &mut Report) -> Result<(), String> {
    let v = gmp_verify(sys, d).map_err(|e| explain(sys, e))?;
    r.bool("condition", v.counterexample.is_none())
        .int("subsets_checked", v.subsets_checked as usize);
    if let Some(x) = v.counterexample {
        r.set("counterexample", sys, x)
            .bool("counterexample_generates", sys.is_generating(x));
    }
    if let Some((i, j)) = v.overlap {
        r.text("overlap", format!("blocks {i} and {j}"));
    }
    r.bool("ideals_valid", v.ideal_defects.is_empty());
    for d in &v.ideal_defects {
        r.text("ideal_defect", render_block_defect(sys, d));
    }
    if !v.holds {
        r.violate();
    }
    Ok(())
}

fn gmp_check_cmd(sys: &ClosureSystem, d: &GmpDecomposition) -> CmdResult {
    let mut r = Report::new("gmp");
    r.int("blocks", d.blocks.len()).text("decomposition", d.format(sys));
    gmp_verdict(sys, d, &mut r)?;
    if r.violated() {
        return Ok(r);
    }
    let eq1 = eq1_violation(sys, d);
    r.bool("eq1", eq1.is_none());
    let n = gmp_normalize(sys, d).map_err(|e| explain(sys, e))?;
    if eq1.is_some() {
        r.text("normalized", n.format(sys));
    }
    let c1 = claim1_check(sys, &n).map_err(|e| explain(sys, e))?;
    r.bool("claim1", c1.holds());
    for b in c1.blocks.iter().filter(|b| b.mismatch.is_some() || !b.irreducible) {
        if let Some(y) = b.mismatch {
            r.set("claim1_mismatch", sys, y);
        }
        if !b.irreducible {
            r.set("reducible_closure", sys, b.closure);
        }
    }
    r.sets("recovered_irreducibles", sys, &recovered_irreducibles(sys, &n));
    if !c1.holds() {
        r.violate();
    }
    Ok(r)
}

/// Posets come from preorder files; equivalent elements are merged first.
fn load_poset(file: &Path, limits: Limits) -> Result<(ClosureSystem, Poset, Option<Vec<SubsetMask>>), String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let spec = parse_system(&text).map_err(|e| format!("{}: {e}", display_name(file)))?;
    if spec.kind != SystemKind::Preorder {
        return Err(format!(
            "{}: this command needs a `system preorder` file, found `{}`",
            display_name(file),
            spec.kind.keyword()
        ));
    }
    let sys = load(file, Completion::Reject, limits)?;
    let Representation::AlexandroffOf(order) = sys.representation() else {
        unreachable!("preorder files build Alexandroff systems")
    };
    if order.is_antisymmetric() {
        let poset = Poset::new(order.clone()).map_err(|e| explain(&sys, e))?;
        return Ok((sys, poset, None));
    }
    let q = order.quotient();
    let labels: Vec<String> = q.classes.iter().map(|&c| sys.labels_of(c).join("_")).collect();
    let merged = ClosureSystem::alexandroff(labels, q.poset.order().clone())
        .and_then(|s| s.with_limits(limits))
        .map_err(|e| explain(&sys, e))?;
    let classes = q.classes.clone();
    Ok((merged, q.poset, Some(classes)))
}

fn minmax_cmd(sys: &ClosureSystem, p: &Poset, classes: Option<Vec<SubsetMask>>, limits: &Limits) -> CmdResult {
    let m = minmax_report(p, limits).map_err(|e| explain(sys, e))?;
    let qur = qur_partition(p);
    let mut r = Report::new("minmax");
    if let Some(classes) = classes {
        r.int("merged_classes", classes.len());
    }
    let (a, b, c) = m.sizes();
    r.set("max_up_independent", sys, m.max_up_independent.set)
        .sets("min_ideal_cover", sys, &m.min_ideal_cover)
        .sets("min_consistent_cover", sys, &m.min_consistent_cover)
        .int("maximal_elements", p.maximal_elements().len())
        .bool("certified", m.certified)
        .bool("ideals_principal", m.ideals_principal)
        .set("q", sys, qur.q)
        .set("u", sys, qur.u)
        .set("r", sys, qur.r)
        .text(
            "summary",
            format!("{a} {b} {c} {}", if m.equal { "equal" } else { "unequal" }),
        );
    if !(m.equal && m.certified && m.ideals_principal && qur.r_empty()) {
        r.violate();
    }
    Ok(r)
}

fn correspond_cmd(sys: &ClosureSystem, p: &Poset, classes: Option<Vec<SubsetMask>>, limits: &Limits) -> CmdResult {
    let c = correspondence_check(p, limits).map_err(|e| explain(sys, e))?;
    let mut r = Report::new("correspond");
    if let Some(classes) = classes {
        r.int("merged_classes", classes.len());
    }
    r.int("subsets_checked", c.subsets_checked)
        .int("antichains", c.antichains)
        .int("cofinal", c.cofinal)
        .sets("ideals", sys, &c.ideals)
        .sets("irreducible_closed", sys, &c.irreducible_closed)
        .bool("holds", c.holds());
    if let Some(v) = c.violations.first() {
        r.set("violation", sys, v.subset)
            .text("violation_kind", format!("{:?}", v.kind));
        r.violate();
    }
    Ok(r)
}

fn harness_cmd(files: &[PathBuf], limits: Limits) -> CmdResult {
    let mut r = Report::new("harness");
    for file in files {
        let name = display_name(file);
        let sys = load(file, Completion::Keep, limits)?;
        let report = run_all(&sys).map_err(|e| format!("{name}: {e}"))?;
        r.text("file", name.clone())
            .bool("topological", sys.is_topological().map_err(|e| explain(&sys, e))?);
        for check in &report.checks {
            let mut line = format!("{} ({})", if check.passed { "pass" } else { "fail" }, check.detail);
            if let Some(w) = check.witness {
                line.push_str(&format!(" witness {}", sys.format_set(w)));
            }
            r.text(&check.name, line);
        }
        if !report.passed() {
            r.violate();
        }
    }
    Ok(r)
}
