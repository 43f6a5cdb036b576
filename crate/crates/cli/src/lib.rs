//! The `grpfact` command line.

pub mod cache;
pub mod record;

use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use grpfact_core::catalog::{Catalog, Tag};
use grpfact_core::classify::{classify_catalog, seed_store, ClassificationReport, GroupVerdict, OutcomeCache};
use grpfact_core::engine::{decide, theorem6_hypotheses, EvidenceMethod};
use grpfact_core::subgroups::{is_clt, is_supersolvable, maximal_subgroup_orders};
use grpfact_core::{Error, Group, Matrix2, Outcome, Permutation, SearchBudget, Shape};

use cache::DirCache;
use record::{verify_record, ResultRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONE: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_INVALID: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "grpfact", version, about = "Exact factorizations of small finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Node limit per search
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock limit per search, in seconds
    #[arg(long)]
    pub budget_secs: Option<u64>,
    /// Split searches across threads
    #[arg(long)]
    pub parallel: bool,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default().parallel(self.parallel);
        if let Some(n) = self.budget_nodes {
            b.max_nodes = n;
        }
        if let Some(s) = self.budget_secs {
            b.max_time = Duration::from_secs(s);
        }
        b
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Catalog groups with order and supersolvability
    List,
    /// Invariants of one catalog group
    Info { group: String },
    /// Decide one shape for one group
    Factorize {
        group: String,
        /// comma-separated factor sizes, e.g. 2,3,2
        shape: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// write the result record here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Multifold verdicts for every catalog group up to an order
    Classify {
        #[arg(long, default_value_t = 60)]
        max_order: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: Option<PathBuf>,
        /// result cache directory; defaults to $GRPFACT_CACHE
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Re-check a result record
    Verify { record: PathBuf },
    /// Exploratory runs outside the catalog
    Experiment {
        name: Experiment,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Experiment {
    /// F_3^2 extended by the quaternion Sylow 2-subgroup of SL(2,3), shape (3,8,3)
    #[value(name = "question4-p3")]
    Question4P3,
    /// the p = 7 analogue
    #[value(name = "question4-p7")]
    Question4P7,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                let _ = writeln!(err, "error: {msg}");
            }
            code
        }
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted { .. } => EXIT_INCONCLUSIVE,
            Error::VerifyFailed(_) => EXIT_INVALID,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure(EXIT_OK, String::new());
        }
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Res = Result<i32, Failure>;

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Res {
    let catalog = Catalog::builtin();
    match cmd {
        Command::List => list(&catalog, out),
        Command::Info { group } => info(&catalog, &group, out),
        Command::Factorize { group, shape, budget, json } => {
            let g = catalog.build(&group)?;
            let shape: Shape = shape.parse()?;
            if shape.product() != g.order() {
                return Err(Failure(
                    EXIT_USAGE,
                    format!("shape {shape} multiplies to {}, but |{}| = {}", shape.product(), g.id(), g.order()),
                ));
            }
            let store = seed_store(&catalog)?;
            factorize(&g, &shape, &budget.budget(), Some(&store), json, out)
        }
        Command::Classify { max_order, budget, json, cache } => {
            let budget = budget.budget();
            let cache = DirCache::from_flag_or_env(cache, &budget)?;
            let report = classify_catalog(&catalog, max_order, &budget, cache.as_ref().map(|c| c as &dyn OutcomeCache))?;
            print_report(&report, out)?;
            if let Some(path) = json {
                std::fs::write(path, serde_json::to_string_pretty(&report).expect("reports serialize"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { record } => {
            let text = std::fs::read_to_string(&record)?;
            let rec: ResultRecord = serde_json::from_str(&text)
                .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", record.display())))?;
            let g = resolve_group(&catalog, &rec.group_id).map_err(|e| Failure(EXIT_INVALID, e.to_string()))?;
            match verify_record(&g, &rec) {
                Ok(()) => {
                    writeln!(out, "ok: {} {} {}", rec.group_id, rec.shape, rec.outcome)?;
                    Ok(EXIT_OK)
                }
                Err(msg) => {
                    writeln!(err, "invalid: {msg}")?;
                    Ok(EXIT_INVALID)
                }
            }
        }
        Command::Experiment { name, budget, json } => match name {
            Experiment::Question4P7 => {
                writeln!(err, "out of scope (order 784 exceeds cap)")?;
                Ok(EXIT_USAGE)
            }
            Experiment::Question4P3 => {
                let g = question4_group()?;
                writeln!(out, "group: {} of order {}", g.id(), g.order())?;
                let shape = Shape::new(vec![3, 8, 3])?;
                let code = factorize(&g, &shape, &budget.budget(), None, json, out)?;
                Ok(if code == EXIT_INCONCLUSIVE { EXIT_OK } else { code })
            }
        },
    }
}

fn list(catalog: &Catalog, out: &mut dyn Write) -> Res {
    writeln!(out, "{:<28} {:>5}  {:<13}  kind", "id", "order", "supersolvable")?;
    for e in catalog.entries() {
        let g = catalog.build(&e.id)?;
        let kind = match e.tag {
            Tag::NonSupersolvable => "",
            Tag::Control => "control",
            Tag::Extra => "extra",
        };
        writeln!(out, "{:<28} {:>5}  {:<13}  {kind}", e.id, e.order, is_supersolvable(&g))?;
    }
    Ok(EXIT_OK)
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn info(catalog: &Catalog, id: &str, out: &mut dyn Write) -> Res {
    let g = catalog.build(id)?;
    let fp = g.fingerprint();
    let t6 = theorem6_hypotheses(&g);
    writeln!(out, "id: {}", g.id())?;
    writeln!(out, "order: {}", g.order())?;
    writeln!(out, "digest: {}", g.digest_hex())?;
    writeln!(out, "element orders: {}", join(fp.order_histogram.iter().map(|(k, v)| format!("{k}:{v}"))))?;
    writeln!(out, "class sizes: {}", join(&fp.class_sizes))?;
    writeln!(out, "center: {}", fp.center_order)?;
    writeln!(out, "derived subgroup: {}", fp.derived_order)?;
    let ab = if fp.abelianization.is_empty() { "trivial".to_string() } else { join(&fp.abelianization) };
    writeln!(out, "abelianization: {ab}")?;
    writeln!(out, "supersolvable: {}", is_supersolvable(&g))?;
    writeln!(out, "CLT: {}", is_clt(&g))?;
    writeln!(out, "maximal subgroup orders: {}", join(maximal_subgroup_orders(&g)))?;
    writeln!(out, "theorem6: {}", if t6.holds() { "applicable" } else { "not applicable" })?;
    writeln!(
        out,
        "  sylow2 order {}, elementary abelian {}, one involution class {}, centralizer = P x H {}",
        t6.sylow2_order, t6.sylow2_elementary_abelian, t6.involutions_single_class, t6.centralizer_is_p_times_h
    )?;
    Ok(EXIT_OK)
}

fn factorize(
    g: &Group,
    shape: &Shape,
    budget: &SearchBudget,
    store: Option<&grpfact_core::engine::CertificateStore>,
    json: Option<PathBuf>,
    out: &mut dyn Write,
) -> Res {
    let start = Instant::now();
    let outcome = decide(g, shape, budget, store)?;
    let elapsed = start.elapsed().as_secs_f64();
    let code = match &outcome {
        Outcome::Found(cert) => {
            writeln!(out, "found {} factorization of {} ({})", shape, g.id(), cert.method)?;
            for (i, f) in cert.factors.iter().enumerate() {
                let labels: Vec<&str> = f.iter().map(|&x| g.label(x)).collect();
                writeln!(out, "  A{} = {{{}}}", i + 1, labels.join(", "))?;
            }
            EXIT_OK
        }
        Outcome::NoneComplete(ev) => {
            match &ev.method {
                EvidenceMethod::ExhaustiveComplete { search, nodes_visited, .. } => writeln!(
                    out,
                    "no {} factorization of {}: complete {:?} search, {} nodes",
                    shape,
                    g.id(),
                    search,
                    nodes_visited
                )?,
                EvidenceMethod::Theorem6 { merged_to, .. } => writeln!(
                    out,
                    "no {} factorization of {}: it merges to {}, excluded by the involution criterion",
                    shape,
                    g.id(),
                    merged_to
                )?,
            }
            EXIT_NONE
        }
        Outcome::Inconclusive(stats) => {
            writeln!(
                out,
                "inconclusive: budget exhausted after {} nodes, {:.1}s",
                stats.nodes_visited, stats.elapsed_secs
            )?;
            EXIT_INCONCLUSIVE
        }
    };
    writeln!(out, "elapsed: {elapsed:.3}s")?;
    if let Some(path) = json {
        std::fs::write(path, ResultRecord::new(g, shape, &outcome, elapsed).to_json())?;
    }
    Ok(code)
}

fn verdict_line(v: &GroupVerdict) -> String {
    let detail = match (&v.failing_shape, v.outcomes.iter().find(|o| o.outcome.is_none())) {
        (Some(s), Some(r)) => {
            let how = match &r.outcome {
                Outcome::NoneComplete(ev) => match &ev.method {
                    EvidenceMethod::Theorem6 { merged_to, .. } => format!("involution criterion via {merged_to}"),
                    EvidenceMethod::ExhaustiveComplete { search, .. } => format!("complete {search:?} search"),
                },
                _ => String::new(),
            };
            let check = v.cross_check.as_ref().map_or(String::new(), |c| format!(", {} searched: none", c.shape));
            format!("no {s}: {how}{check}")
        }
        _ => format!("{} classes certified", v.outcomes.len()),
    };
    format!("{:<28} {:>5}  {:<9}  {detail}", v.group_id, v.order, if v.multifold { "yes" } else { "NO" })
}

fn print_report(r: &ClassificationReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{:<28} {:>5}  {:<9}  detail", "group", "order", "multifold")?;
    for v in &r.verdicts {
        writeln!(out, "{}", verdict_line(v))?;
    }
    let ok = r.controls.iter().filter(|v| v.multifold).count();
    writeln!(out, "controls: {ok}/{} supersolvable groups multifold", r.controls.len())?;
    writeln!(out, "negatives ({}):", r.negatives.len())?;
    for id in &r.negatives {
        writeln!(out, "  {id}")?;
    }
    writeln!(out, "elapsed: {:.2}s", r.elapsed_secs)
}

/// A catalog group, or the experiment group by its id.
pub fn resolve_group(catalog: &Catalog, id: &str) -> grpfact_core::Result<Group> {
    if id == QUESTION4_ID {
        return question4_group();
    }
    catalog.build(id)
}

pub const QUESTION4_ID: &str = "F3^2 : Q8";

/// `F_3^2` extended by the quaternion subgroup of SL(2,3), acting on the
/// nine vectors as affine permutations.
pub fn question4_group() -> grpfact_core::Result<Group> {
    let p = 3i64;
    let point = |x: i64, y: i64| (x.rem_euclid(p) + p * y.rem_euclid(p)) as u8;
    let perm = |f: &dyn Fn(i64, i64) -> (i64, i64)| {
        Permutation((0..9).map(|i| {
            let (x, y) = f(i % p, i / p);
            point(x, y)
        }).collect())
    };
    let q8 = [Matrix2::new(3, [[0, 1], [-1, 0]]), Matrix2::new(3, [[1, 1], [1, -1]])];
    let mut gens = vec![perm(&|x, y| (x + 1, y)), perm(&|x, y| (x, y + 1))];
    for m in &q8 {
        let e = m.m.map(i64::from);
        gens.push(perm(&|x, y| (e[0] * x + e[1] * y, e[2] * x + e[3] * y)));
    }
    Group::from_permutation_generators(QUESTION4_ID, 9, &gens)
}
