//! `obstrukt`: representation tables, class computations and bundle
//! decisions from the command line.

mod decide_cmd;
mod load;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use obstrukt::charclass::{coeff_profile, q1_poly_of, table::table_rows, Parity};
use obstrukt::cohomodel::validate_model;
use obstrukt::reps::{enumerate_reps, parse_rep};
use obstrukt::Int;
use serde_json::json;

#[derive(Parser)]
#[command(name = "obstrukt", version, about = "Characteristic classes and structure-group reductions for rank 6/7 bundles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate the (a, b[, c, d]) table of a representation family list.
    Table {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["6", "7"]))]
        dim: String,
        /// Parameters range over [-R, R].
        #[arg(long, default_value_t = 2)]
        range: u32,
        #[arg(long)]
        json: bool,
    },
    /// Canonical form and classes of one representation.
    Rep(RepArgs),
    /// All canonical representations of a dimension with bounded parameters.
    Enumerate {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        kbound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Decide a criterion for a bundle over a manifold model.
    Decide(decide_cmd::DecideArgs),
    /// Check a manifold model for consistency.
    Validate {
        #[arg(long)]
        manifold: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct RepArgs {
    expr: String,
    /// Print `a=.. b=..` (and `c=.. d=..` in dimension 6).
    #[arg(long, group = "mode")]
    profile: bool,
    /// Print the weights of the complexification.
    #[arg(long, group = "mode")]
    weights: bool,
    /// Print the spin^c characteristic class as a polynomial in l, u.
    #[arg(long, group = "mode")]
    q1: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> anyhow::Result<u8> {
    match cmd {
        Command::Table { dim, range, json } => table(dim.parse()?, range, json),
        Command::Rep(args) => rep(args),
        Command::Enumerate { dim, kbound, json } => enumerate(dim, kbound, json),
        Command::Decide(args) => decide_cmd::run(args),
        Command::Validate { manifold, json } => validate(&manifold, json),
    }
}

fn table(dim: usize, range: u32, as_json: bool) -> anyhow::Result<u8> {
    let rows = table_rows::<Int>(dim, range)?;
    if as_json {
        let out: Vec<_> = rows
            .iter()
            .map(|r| {
                let mut v = json!({
                    "family": r.family,
                    "params": r.params,
                    "representation": r.label,
                    "canonical": r.rep.to_string(),
                    "a": r.profile.a.to_string(),
                    "b": r.profile.b.to_string(),
                });
                if let (Some(c), Some(d)) = (&r.profile.c, &r.profile.d) {
                    v["c"] = json!(c.to_string());
                    v["d"] = json!(d.to_string());
                }
                v
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(0);
    }
    if dim == 6 {
        println!("representation\ta\tb\tc\td\tcanonical");
    } else {
        println!("representation\ta\tb\tcanonical");
    }
    for r in rows {
        let p = &r.profile;
        match (&p.c, &p.d) {
            (Some(c), Some(d)) => println!("{}\t{}\t{}\t{}\t{}\t{}", r.label, p.a, p.b, c, d, r.rep),
            _ => println!("{}\t{}\t{}\t{}", r.label, p.a, p.b, r.rep),
        }
    }
    Ok(0)
}

fn rep(args: RepArgs) -> anyhow::Result<u8> {
    let v = parse_rep(&args.expr)?;
    if args.weights {
        let ws: Vec<String> = v.complexified_weights().iter().map(|w| format!("({},{})", w.alpha, w.beta)).collect();
        println!("{}", ws.join(" "));
    } else if args.q1 {
        let s = q1_poly_of::<Int>(&v)?;
        let parity = match s.parity {
            Parity::Even => "b even, w2 = 0",
            Parity::Odd => "b odd, w2 = rho2(l)",
        };
        println!("q1 = {} ({parity})", s.poly);
    } else if args.profile {
        println!("{}", coeff_profile::<Int>(&v)?);
    } else {
        println!("{v}");
        println!("dim {}", v.dim());
        if matches!(v.dim(), 6 | 7) {
            println!("{}", coeff_profile::<Int>(&v)?);
        }
    }
    Ok(0)
}

fn enumerate(dim: usize, kbound: u32, as_json: bool) -> anyhow::Result<u8> {
    let reps = enumerate_reps(dim, kbound)?;
    let with_profile = matches!(dim, 6 | 7);
    if as_json {
        let out: Vec<_> = reps
            .iter()
            .map(|v| {
                let mut o = json!({"representation": v.to_string()});
                if with_profile {
                    let p = coeff_profile::<Int>(v).expect("dimension checked");
                    o["a"] = json!(p.a.to_string());
                    o["b"] = json!(p.b.to_string());
                }
                o
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(0);
    }
    for v in &reps {
        if with_profile {
            println!("{v}\t{}", coeff_profile::<Int>(v)?);
        } else {
            println!("{v}");
        }
    }
    Ok(0)
}

fn validate(path: &str, as_json: bool) -> anyhow::Result<u8> {
    let m = load::manifold(path)?;
    let r = validate_model(&m);
    if as_json {
        let locked: serde_json::Map<_, _> = r.locked.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        let out = json!({
            "clean": r.is_clean(),
            "violations": r.violations.iter().map(|v| json!({"check": v.check, "detail": v.detail})).collect::<Vec<_>>(),
            "skipped": r.skipped,
            "unlocked": r.unlocked,
            "locked": locked,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        if r.is_clean() {
            println!("ok: no violations");
        }
        for v in &r.violations {
            println!("violation: {v}");
        }
        for s in &r.skipped {
            println!("skipped: {s}");
        }
        println!("unlocked: {}", r.unlocked.join(", "));
        for (op, miss) in &r.locked {
            println!("locked: {op} (needs {})", miss.join(", "));
        }
    }
    Ok(if r.is_clean() { 0 } else { 1 })
}
