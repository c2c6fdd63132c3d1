use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mporder::multipartitions::{tau, Charge, MultiPartition};
use mporder::orders::{a_order, c_order, dominance_order, facet_order, geometric_order, j_classes};
use mporder::params::{c_wall_forms, git_walls, is_git_regular, walls_through, ParamPoint};
use mporder::rat::parse_q_list;
use mporder::verify::{multipartition_count, run_suite, SuiteOptions, MAX_ELEMENTS};
use mporder::weyl::alcove_data;
use mporder::{AlcoveMode, OrderRelation};

#[derive(Parser)]
#[command(name = "mporder", version, about = "Orderings on multipartitions from cyclotomic parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alcove data and walls through a parameter point.
    Classify(PointArgs),
    /// Print an ordering on P(l, n).
    Order(OrderArgs),
    /// Covering pairs of an ordering on P(l, n).
    Hasse(OrderArgs),
    /// List G.I.T. walls or c-walls for (l, n).
    Walls(WallsArgs),
    /// Classes of fixed points at a wall point, or tau_s labels for a charge.
    FixedPoints(FixedArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Level {
    #[arg(short = 'l', default_value_t = 2)]
    ell: usize,
    #[arg(short = 'n', default_value_t = 2)]
    n: usize,
}

#[derive(Args)]
struct Point {
    /// The parameter h, e.g. -1 or 1/2.
    #[arg(long = "h", allow_hyphen_values = true)]
    h: String,
    /// H_1,...,H_{l-1} as a comma list.
    #[arg(long = "H", allow_hyphen_values = true, default_value = "")]
    big_h: String,
}

#[derive(Args)]
struct PointArgs {
    #[command(flatten)]
    level: Level,
    #[command(flatten)]
    point: Point,
    #[arg(long, value_enum, default_value_t = Mode::Canonical)]
    alcove_mode: Mode,
}

#[derive(Args)]
struct OrderArgs {
    #[command(flatten)]
    level: Level,
    #[command(flatten)]
    point: Point,
    #[arg(long, value_enum, default_value_t = Which::Geometric)]
    which: Which,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Mode::Canonical)]
    alcove_mode: Mode,
}

#[derive(Args)]
struct WallsArgs {
    #[command(flatten)]
    level: Level,
    #[arg(long, value_enum, default_value_t = WallKind::Git)]
    which: WallKind,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct FixedArgs {
    #[command(flatten)]
    level: Level,
    #[arg(long = "h", allow_hyphen_values = true)]
    h: Option<String>,
    #[arg(long = "H", allow_hyphen_values = true, default_value = "")]
    big_h: String,
    /// Charge s as a comma list summing to zero; lists tau_s(λ) for every λ.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "h")]
    charge: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Mode::Canonical)]
    alcove_mode: Mode,
}

#[derive(Args)]
struct VerifyArgs {
    /// Only run checks whose name contains this string.
    #[arg(long)]
    only: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Mode::Canonical)]
    alcove_mode: Mode,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Canonical,
    UpperClosure,
}

impl From<Mode> for AlcoveMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Canonical => AlcoveMode::Canonical,
            Mode::UpperClosure => AlcoveMode::UpperClosure,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    C,
    A,
    Geometric,
    Facet,
    Dominance,
}

#[derive(Clone, Copy, ValueEnum)]
enum WallKind {
    Git,
    C,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<mporder::Error> for Failure {
    fn from(e: mporder::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn parse_point(level: &Level, h: &str, big_h: &str) -> Result<ParamPoint, Failure> {
    if level.ell == 0 || level.n == 0 {
        return Err(Failure::Usage("l and n must be at least 1".into()));
    }
    if multipartition_count(level.ell, level.n) > MAX_ELEMENTS {
        return Err(mporder::Error::ResourceGuard(level.ell, level.n).into());
    }
    let h = mporder::rat::parse_q(h)?;
    let hs = parse_q_list(big_h)?;
    if hs.len() + 1 != level.ell {
        return Err(Failure::Usage(format!(
            "--H needs {} entries for l = {}, got {}",
            level.ell - 1,
            level.ell,
            hs.len()
        )));
    }
    Ok(ParamPoint::new(h, hs))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn classify(args: &PointArgs) -> Outcome {
    let p = parse_point(&args.level, &args.point.h, &args.point.big_h)?;
    let d = alcove_data(&p, args.alcove_mode.into())?;
    let mut v = d.to_json();
    let walls: Vec<String> = walls_through(&p, args.level.n).iter().map(|f| f.to_string()).collect();
    v["point"] = json!(p.to_string());
    v["mode"] = json!(d.mode.to_string());
    v["walls"] = json!(walls);
    v["regular"] = json!(is_git_regular(&p, args.level.n));
    Ok(json_text(&v))
}

fn build_order(args: &OrderArgs) -> Result<OrderRelation, Failure> {
    let p = parse_point(&args.level, &args.point.h, &args.point.big_h)?;
    let n = args.level.n;
    let mode = args.alcove_mode.into();
    Ok(match args.which {
        Which::C => c_order(&p, n),
        Which::A => a_order(&p, n)?,
        Which::Geometric => geometric_order(&p, n, mode)?,
        Which::Facet => facet_order(&p, n, mode)?,
        Which::Dominance => dominance_order(args.level.ell, n),
    })
}

fn order(args: &OrderArgs) -> Outcome {
    let rel = build_order(args)?;
    Ok(match args.format {
        Format::Json => json_text(&rel.to_json()),
        Format::Dot => rel.to_dot(),
        Format::Table => rel.to_table(),
    })
}

fn hasse(args: &OrderArgs) -> Outcome {
    let rel = build_order(args)?;
    let covers = rel.hasse();
    Ok(match args.format {
        Format::Dot => rel.to_dot(),
        Format::Json => {
            let edges: Vec<Value> = covers.iter().map(|&(a, b)| json!([rel.labels[a], rel.labels[b]])).collect();
            json_text(&json!({"provenance": rel.provenance, "covers": edges}))
        }
        Format::Table => {
            let mut out = format!("# {}\n", rel.provenance);
            for (a, b) in covers {
                let _ = writeln!(out, "{} < {}", rel.labels[a], rel.labels[b]);
            }
            out
        }
    })
}

fn walls(args: &WallsArgs) -> Outcome {
    let (ell, n) = (args.level.ell, args.level.n);
    if ell == 0 || n == 0 {
        return Err(Failure::Usage("l and n must be at least 1".into()));
    }
    let git = git_walls(ell, n);
    let cw = c_wall_forms(ell, n);
    let (label, forms) = match args.which {
        WallKind::Git => ("git", &git),
        WallKind::C => ("c", &cw),
    };
    let names: Vec<String> = forms.iter().map(|f| f.to_string()).collect();
    let contained = git.is_subset(&cw);
    Ok(match args.format {
        Format::Json => json_text(&json!({"which": label, "l": ell, "n": n, "forms": names, "git_in_c": contained})),
        Format::Dot => return Err(Failure::Usage("walls has no dot output".into())),
        Format::Table => {
            let mut out =
                format!("# {} {label}-walls for l={ell} n={n}; git walls among c-walls: {contained}\n", names.len());
            for f in names {
                out.push_str(&f);
                out.push('\n');
            }
            out
        }
    })
}

fn fixed_points(args: &FixedArgs) -> Outcome {
    let (ell, n) = (args.level.ell, args.level.n);
    if let Some(c) = &args.charge {
        let entries = c
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("bad charge entry '{t}'"))))
            .collect::<Result<Vec<_>, _>>()?;
        if multipartition_count(ell, n) > MAX_ELEMENTS {
            return Err(mporder::Error::ResourceGuard(ell, n).into());
        }
        if entries.len() != ell {
            return Err(Failure::Usage(format!("--charge needs {ell} entries, got {}", entries.len())));
        }
        let s = Charge::new(entries)?;
        let mut rows = Vec::new();
        for m in MultiPartition::enumerate(ell, n) {
            rows.push((m.to_string(), tau(&s, &m)?.to_string()));
        }
        return Ok(match args.format {
            Format::Json => {
                let v: Vec<Value> = rows.iter().map(|(m, nu)| json!({"multipartition": m, "tau": nu})).collect();
                json_text(&json!({"charge": s.to_string(), "core": s.core().to_string(), "labels": v}))
            }
            Format::Table => rows.iter().map(|(m, nu)| format!("{m} -> {nu}\n")).collect(),
            Format::Dot => return Err(Failure::Usage("fixed-points has no dot output".into())),
        });
    }
    let h = args.h.as_deref().ok_or_else(|| Failure::Usage("give either --h/--H or --charge".into()))?;
    let p = parse_point(&args.level, h, &args.big_h)?;
    let mode = args.alcove_mode.into();
    let d = alcove_data(&p, mode)?;
    let classes = j_classes(&p, n, mode)?;
    let names: Vec<Vec<String>> = classes.iter().map(|c| c.iter().map(|m| m.to_string()).collect()).collect();
    Ok(match args.format {
        Format::Json => {
            json_text(&json!({"point": p.to_string(), "mode": d.mode.to_string(), "J": d.j, "classes": names}))
        }
        Format::Table => {
            let j: Vec<String> = d.j.iter().map(|x| x.to_string()).collect();
            let mut out = format!("# {} classes at {p} ({}, J={{{}}})\n", names.len(), d.mode, j.join(","));
            for c in names {
                let _ = writeln!(out, "{}", c.join(" "));
            }
            out
        }
        Format::Dot => return Err(Failure::Usage("fixed-points has no dot output".into())),
    })
}

fn verify(args: &VerifyArgs) -> Outcome {
    if args.format == Format::Dot {
        return Err(Failure::Usage("verify has no dot output".into()));
    }
    let opts = SuiteOptions { mode: args.alcove_mode.into(), only: args.only.clone(), inject_fault: args.inject_fault };
    let reports = run_suite(&opts)?;
    if reports.is_empty() {
        return Err(Failure::Usage(format!("no check matches '{}'", args.only.as_deref().unwrap_or(""))));
    }
    let mut out = String::new();
    for r in &reports {
        if args.format == Format::Json {
            out.push_str(&r.to_json_line());
            out.push('\n');
        } else {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "{verdict} {} [{}]", r.name, r.grid);
            if let Some(w) = &r.witness {
                let _ = write!(out, ": {w}");
            }
            out.push('\n');
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    print!("{out}");
    eprintln!("{} checks, {failed} failed", reports.len());
    if failed > 0 {
        Err(Failure::Check)
    } else {
        Ok(String::new())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Order(a) => order(a),
        Command::Hasse(a) => hasse(a),
        Command::Walls(a) => walls(a),
        Command::FixedPoints(a) => fixed_points(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
