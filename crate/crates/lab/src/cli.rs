use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use plunnecke_core::campaign::{CampaignConfig, CheckKind};
use plunnecke_core::correspondence::{orbit_closure, verify_correspondence};
use plunnecke_core::magnification::{mag_ratio, mag_ratio_delta, mag_ratio_oracle};
use plunnecke_core::rational::format as fmt_q;
use plunnecke_core::spectral::{equidist_defect, three_halves_powers, uniform_grid, weyl_defect_window};
use plunnecke_core::{FiniteSet, GroupSpec, MagnificationResult, Tail, ZSetDesc};

use crate::formats::{
    parse_rational, DensityDoc, EquidistDoc, FloatDoc, InstanceDoc, MagnificationDoc, SumsetDoc, WeylDoc, ZSetDoc,
};
use crate::report::{run_parallel, write_csv, write_json, ReportDoc};
use crate::LabError;

#[derive(Parser, Debug)]
#[command(name = "plunnecke", version, about = "Exact sumsets, densities, magnification ratios and Plünnecke-type inequality checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// A+B in a finite abelian group, with its density.
    Sumset(SumsetArgs),
    /// Upper and lower Banach density of an eventually periodic set of integers.
    Density(DensityArgs),
    /// Magnification ratio c(A,B) = min over B' in B of mu(AB')/mu(B').
    Magratio(MagratioArgs),
    /// Seeded random verification campaign.
    Verify(VerifyArgs),
    /// Correspondence principle relations for an eventually periodic set.
    Correspond(CorrespondArgs),
    /// Equidistribution defect (largest normalized non-trivial character sum).
    Equidist(EquidistArgs),
}

#[derive(Args, Debug)]
pub struct SetArgs {
    /// Instance JSON file (group or system, A, B, parameters).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Orders of the cyclic factors, e.g. 8 or 4,6.
    #[arg(long, value_delimiter = ',')]
    pub group: Vec<usize>,
    #[arg(long = "A", visible_alias = "a", value_delimiter = ',')]
    pub a: Vec<usize>,
    #[arg(long = "B", visible_alias = "b", value_delimiter = ',')]
    pub b: Vec<usize>,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

impl SetArgs {
    fn instance(&self) -> Result<InstanceDoc, LabError> {
        match &self.input {
            Some(p) => read_json(p),
            None if self.group.is_empty() => Err(LabError::Invalid("either --input or --group is required".into())),
            None => Ok(InstanceDoc { group: Some(self.group.clone()), a: self.a.clone(), b: self.b.clone(), ..Default::default() }),
        }
    }
}

#[derive(Args, Debug)]
pub struct SumsetArgs {
    #[command(flatten)]
    pub set: SetArgs,
}

#[derive(Args, Debug)]
pub struct ZSetArgs {
    /// Eventually periodic set as JSON: {"lo","hi","head","left","right"}.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Period shared by both tails.
    #[arg(long)]
    pub period: Option<u64>,
    /// Residues of both tails modulo the period.
    #[arg(long, value_delimiter = ',')]
    pub pattern: Vec<u64>,
    /// Head window [lo, hi) overriding the tails.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub lo: i64,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub hi: i64,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub head: Vec<i64>,
}

impl ZSetArgs {
    fn build(&self) -> Result<ZSetDesc, LabError> {
        if let Some(p) = &self.input {
            return read_json::<ZSetDoc>(p)?.build();
        }
        let tail = match self.period {
            Some(p) => Some(Tail::new(p, self.pattern.iter().copied())?),
            None if self.pattern.is_empty() => None,
            None => return Err(LabError::Invalid("--pattern needs --period".into())),
        };
        Ok(ZSetDesc::new(self.lo, self.hi, self.head.iter().copied(), tail.clone(), tail)?)
    }
}

#[derive(Args, Debug)]
pub struct DensityArgs {
    #[command(flatten)]
    pub set: ZSetArgs,
    /// Also report the k-fold sumset kS.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct MagratioArgs {
    #[command(flatten)]
    pub set: SetArgs,
    /// c_delta(A,B): only B' with mu(B') >= delta mu(B) compete.
    #[arg(long)]
    pub delta: Option<String>,
    /// Solve by exhaustive enumeration as well and require agreement.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Instances per check.
    #[arg(long, default_value_t = 100)]
    pub instances: usize,
    /// Comma-separated check names (default: all).
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
    #[arg(long, default_value_t = 16)]
    pub max_order: usize,
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
    #[arg(long, value_delimiter = ',', default_value = "1/4,1/2,3/4")]
    pub deltas: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "1/10,1/100")]
    pub epsilons: Vec<String>,
    /// Report file; defaults to report.<format> in the output directory, or stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, env = "PLUNNECKE_OUT_DIR")]
    pub out_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    pub format: ReportFormat,
    /// Worker threads (0 = one per core). The report does not depend on it.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Do not print the per-check summary on stderr.
    #[arg(long, short)]
    pub quiet: bool,
}

#[derive(Args, Debug)]
pub struct CorrespondArgs {
    #[command(flatten)]
    pub set: ZSetArgs,
    /// Finite set of integers translating S.
    #[arg(long = "A", visible_alias = "a", value_delimiter = ',', allow_negative_numbers = true, required = true)]
    pub a: Vec<i64>,
    /// Half-width of the window on which B_{x_o} = S is checked.
    #[arg(long, default_value_t = 200)]
    pub window: i64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct EquidistArgs {
    #[arg(long, value_delimiter = ',')]
    pub group: Vec<usize>,
    #[arg(long = "A", visible_alias = "a", value_delimiter = ',')]
    pub a: Vec<usize>,
    /// Weyl sums of {floor(n^(3/2))} below --window instead of a group set.
    #[arg(long)]
    pub weyl: bool,
    #[arg(long, default_value_t = 1000)]
    pub window: u64,
    /// Frequencies k/den, 0 < k < den.
    #[arg(long, default_value_t = 1000)]
    pub grid: u64,
    #[arg(long)]
    pub json: bool,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, LabError> {
    let file = File::open(path).map_err(|e| LabError::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_reader(std::io::BufReader::new(file)).map_err(|e| LabError::Invalid(format!("{}: {e}", path.display())))
}

fn braces(xs: impl IntoIterator<Item = usize>) -> String {
    let v: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn json_line<T: serde::Serialize>(out: &mut dyn Write, v: &T) -> Result<(), LabError> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn command() -> clap::Command {
    let checks: String = CheckKind::ALL.iter().map(|k| format!("  {:<15}{}\n", k.name(), k.statement())).collect();
    Cli::command().mut_subcommand("verify", |c| {
        c.after_help(format!("Checks:\n{checks}\nExit status: 0 all hold, 1 violation found, 2 invalid input."))
    })
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit code. Errors go to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match command().try_get_matches_from(args).and_then(|m| Cli::from_arg_matches(&m)) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("plunnecke: {e}");
            e.exit_code()
        }
    }
}

pub fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), LabError> {
    match cmd {
        Command::Sumset(a) => cmd_sumset(&a, out),
        Command::Density(a) => cmd_density(&a, out),
        Command::Magratio(a) => cmd_magratio(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Correspond(a) => cmd_correspond(&a, out),
        Command::Equidist(a) => cmd_equidist(&a, out),
    }
}

pub fn cmd_sumset(args: &SumsetArgs, out: &mut dyn Write) -> Result<(), LabError> {
    let inst = args.set.instance()?;
    let group = inst.group()?;
    let sum = inst.set_a(&group)?.sumset(&inst.set_b(&group)?)?;
    if args.set.json {
        let doc = SumsetDoc {
            group: group.orders().to_vec(),
            sumset: sum.to_vec(),
            cardinality: sum.len(),
            density: fmt_q(&sum.density()),
        };
        return json_line(out, &doc);
    }
    writeln!(out, "A+B = {}", braces(sum.iter()))?;
    writeln!(out, "|A+B| = {}", sum.len())?;
    writeln!(out, "density = {}", fmt_q(&sum.density()))?;
    Ok(())
}

pub fn cmd_density(args: &DensityArgs, out: &mut dyn Write) -> Result<(), LabError> {
    let s = args.set.build()?;
    let mut docs = vec![("S".to_string(), s.normalized())];
    if let Some(k) = args.k {
        docs.push((format!("{k}S"), s.iterated(k)?.normalized()));
    }
    if args.json {
        let v: Vec<DensityDoc> = docs
            .iter()
            .map(|(_, d)| DensityDoc { set: ZSetDoc::from_desc(d), upper: fmt_q(&d.upper_density()), lower: fmt_q(&d.lower_density()) })
            .collect();
        return json_line(out, &v);
    }
    for (name, d) in &docs {
        writeln!(out, "{name} = {}", plunnecke_core::correspondence::describe(d))?;
        writeln!(out, "d*({name}) = {}", fmt_q(&d.upper_density()))?;
        writeln!(out, "d_*({name}) = {}", fmt_q(&d.lower_density()))?;
    }
    Ok(())
}

fn print_mag(out: &mut dyn Write, json: bool, r: &MagnificationResult) -> Result<(), LabError> {
    if json {
        return json_line(out, &MagnificationDoc::from(r));
    }
    writeln!(out, "{}, witness {:?}, method {}", fmt_q(&r.value), r.witness.to_vec(), r.method.as_str())?;
    Ok(())
}

pub fn cmd_magratio(args: &MagratioArgs, out: &mut dyn Write) -> Result<(), LabError> {
    let inst = args.set.instance()?;
    let sys = inst.system()?;
    let a = inst.set_a(sys.group())?;
    let b = inst.states_b(&sys)?;
    let delta = args.delta.as_ref().or(inst.delta.as_ref());
    if let Some(d) = delta {
        let r = mag_ratio_delta(&sys, &a, &b, &parse_rational(d)?)?;
        return print_mag(out, args.set.json, &r);
    }
    if args.oracle {
        let oracle = mag_ratio_oracle(&sys, &a, &b)?;
        let flow = mag_ratio(&sys, &a, &b)?;
        print_mag(out, args.set.json, &oracle)?;
        if flow.value != oracle.value {
            return Err(LabError::Violation(format!(
                "min-cut value {} differs from enumeration {}",
                fmt_q(&flow.value),
                fmt_q(&oracle.value)
            )));
        }
        return Ok(());
    }
    print_mag(out, args.set.json, &mag_ratio(&sys, &a, &b)?)
}

pub fn campaign_config(args: &VerifyArgs) -> Result<CampaignConfig, LabError> {
    let checks = if args.checks.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        args.checks.iter().map(|c| CheckKind::parse(c.trim())).collect::<Result<_, _>>()?
    };
    let parse_all = |v: &[String]| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>();
    let cfg = CampaignConfig {
        seed: args.seed,
        instances: args.instances,
        max_order: args.max_order,
        k_max: args.k_max,
        deltas: parse_all(&args.deltas)?,
        epsilons: parse_all(&args.epsilons)?,
        checks,
    };
    cfg.validate()?;
    Ok(cfg)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), LabError> {
    let cfg = campaign_config(args)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .map_err(|e| LabError::Invalid(format!("thread pool: {e}")))?;
    let rep = pool.install(|| run_parallel(&cfg))?;
    let doc = ReportDoc::new(&cfg, &rep);
    let ext = match args.format {
        ReportFormat::Csv => "csv",
        ReportFormat::Json => "json",
    };
    let target = args.out.clone().or_else(|| args.out_dir.as_ref().map(|d| d.join(format!("report.{ext}"))));
    let emit = |w: &mut dyn Write| match args.format {
        ReportFormat::Csv => write_csv(w, &doc),
        ReportFormat::Json => write_json(w, &doc),
    };
    match &target {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            let mut w = BufWriter::new(File::create(path)?);
            emit(&mut w)?;
            w.flush()?;
        }
        None => emit(out)?,
    }
    if !args.quiet {
        for line in rep.summary_lines() {
            eprintln!("{line}");
        }
        if let Some(path) = &target {
            eprintln!("report written to {}", path.display());
        }
    }
    if !rep.all_hold() {
        return Err(LabError::Violation(format!("{} check(s) violated", rep.counterexamples.len())));
    }
    Ok(())
}

pub fn cmd_correspond(args: &CorrespondArgs, out: &mut dyn Write) -> Result<(), LabError> {
    let s = args.set.build()?;
    let rep = verify_correspondence(&s, &args.a)?;
    let orbit = orbit_closure(&s)?;
    let w = args.window;
    let recovered = orbit.pullback(-w, w + 1) == (-w..=w).filter(|&n| s.contains(n)).collect::<Vec<_>>();
    if args.json {
        let rows: Vec<serde_json::Value> = rep
            .relations
            .iter()
            .map(|r| {
                serde_json::json!({
                    "check": r.name, "lhs": fmt_q(&r.lhs), "relation": r.relation.symbol(),
                    "rhs": fmt_q(&r.rhs), "holds": r.holds,
                })
            })
            .collect();
        json_line(out, &serde_json::json!({ "set": ZSetDoc::from_desc(&s), "relations": rows, "recovered": recovered }))?;
    } else {
        writeln!(out, "S = {}", plunnecke_core::correspondence::describe(&s))?;
        for (i, l) in orbit.limits.iter().enumerate() {
            writeln!(
                out,
                "orbit {i} ({:?} tail, {} states): mu(B) = {}, mu(AB) = {}",
                l.side,
                l.period(),
                fmt_q(&l.mass_of_clopen()),
                fmt_q(&l.mass_of_translates(&args.a)?)
            )?;
        }
        writeln!(out, "mu = orbit {}, nu = orbit {}", rep.mu, rep.nu)?;
        for r in &rep.relations {
            let verdict = if r.holds { "holds" } else { "VIOLATED" };
            writeln!(out, "{}: {} {} {} {verdict}", r.name, fmt_q(&r.lhs), r.relation.symbol(), fmt_q(&r.rhs))?;
        }
        writeln!(out, "B_x = S on [-{w}, {w}]: {recovered}")?;
    }
    if !rep.all_hold() || !recovered {
        return Err(LabError::Violation("correspondence relation failed".into()));
    }
    Ok(())
}

pub fn cmd_equidist(args: &EquidistArgs, out: &mut dyn Write) -> Result<(), LabError> {
    if args.weyl {
        let set = three_halves_powers(args.window);
        let r = weyl_defect_window(&set, args.window, &uniform_grid(args.grid))?;
        let worst = format!("{}/{}", r.worst.0, r.worst.1);
        if args.json {
            let doc = WeylDoc {
                window: r.window,
                set_size: r.set_size,
                grid_denominator: args.grid,
                defect: FloatDoc::new(r.defect),
                worst_frequency: worst,
            };
            return json_line(out, &doc);
        }
        writeln!(out, "|A| = {} below {}", r.set_size, r.window)?;
        writeln!(out, "defect = {:.12e} (float64) at frequency {worst}", r.defect)?;
        return Ok(());
    }
    if args.group.is_empty() {
        return Err(LabError::Invalid("--group is required unless --weyl is given".into()));
    }
    let group = GroupSpec::new(&args.group)?;
    let a = FiniteSet::new(&group, args.a.iter().copied())?;
    let r = equidist_defect(&a)?;
    if args.json {
        let doc = EquidistDoc { group: args.group.clone(), set: a.to_vec(), defect: FloatDoc::new(r.defect), worst_character: r.worst };
        return json_line(out, &doc);
    }
    writeln!(out, "defect = {:.12e} (float64)", r.defect)?;
    match r.worst {
        Some(chi) => writeln!(out, "worst character = {chi} {:?}", group.decode(chi))?,
        None => writeln!(out, "trivial group: no non-trivial character")?,
    }
    Ok(())
}
