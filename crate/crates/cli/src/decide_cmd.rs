//! `obstrukt decide`.

use std::env;

use anyhow::{anyhow, bail};
use clap::{Args, ValueEnum};
use obstrukt::decide::{
    cases_json, cor6_cases, exists_u2, exists_u3, g2_reduce, iso_6, iso_7, prop_7u3, reduce_so3_7, reduce_u2_6,
    reduce_u2_7, sections_7, sp1_menu, Cases,
};
use obstrukt::reps::parse_rep;
use obstrukt::{Bundle, Decision, Element, Int, Manifold, RealRep, Verdict};

use crate::load;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    /// U(2)-structure through --rep with c1 = the lift (dimension 6 or 7).
    U2,
    /// SO(3)-structure through --rep (dimension 7).
    So3,
    /// Isomorphism with the bundle in --other.
    Iso,
    /// Sp(1) divisibility menu (dimension 7).
    Sp1,
    /// G2-structure (dimension 7).
    G2,
    /// --k linearly independent sections (dimension 7).
    Sections,
    /// The seven special structures (dimension 6).
    Cor6,
    /// Splitting ξ ≅ ζ ⊕ R with c(ζ) = (lift, --u, --v) (dimension 7).
    U3,
    /// Rank-2 complex bundle with c1 = lift, c2 = --u.
    ExistsU2,
    /// Rank-3 complex bundle with c = (lift, --u, --v).
    ExistsU3,
}

#[derive(Args)]
pub struct DecideArgs {
    #[arg(long)]
    manifold: String,
    #[arg(long)]
    bundle: Option<String>,
    #[arg(long)]
    rep: Option<String>,
    /// Lift of w2 as a JSON file; defaults to the model's l0, then the bundle's l_ref.
    #[arg(long)]
    lift: Option<String>,
    #[arg(long, value_enum, default_value_t = Op::U2)]
    op: Op,
    /// Second bundle for `--op iso`.
    #[arg(long)]
    other: Option<String>,
    /// Number of sections for `--op sections`.
    #[arg(long)]
    k: Option<u32>,
    /// Degree-4 class, inline (`[1]`) or a file.
    #[arg(long)]
    u: Option<String>,
    /// Degree-6 class, inline (`[2]`) or a file.
    #[arg(long)]
    v: Option<String>,
    #[arg(long)]
    json: bool,
}

enum Outcome {
    One(Decision),
    Many(Cases<Int>),
}

fn need<'a>(x: &'a Option<String>, flag: &str, op: Op) -> anyhow::Result<&'a str> {
    x.as_deref().ok_or_else(|| anyhow!("--op {} needs --{flag}", op.to_possible_value().expect("named").get_name()))
}

fn rep_arg(args: &DecideArgs) -> anyhow::Result<RealRep> {
    Ok(parse_rep(need(&args.rep, "rep", args.op)?)?)
}

fn default_lift(m: &Manifold, args: &DecideArgs, xi: Option<&Bundle>) -> anyhow::Result<Element> {
    if let Some(path) = &args.lift {
        return load::lift(m, path);
    }
    if let Some(l0) = m.l0() {
        return Ok(l0.clone());
    }
    match xi {
        Some(xi) => Ok(xi.l_ref().clone()),
        None => bail!("no lift available: pass --lift or add l0 to the model"),
    }
}

pub fn run(args: DecideArgs) -> anyhow::Result<u8> {
    let m = load::manifold(&args.manifold)?;
    let xi = args.bundle.as_deref().map(|p| load::bundle(&m, p)).transpose()?;
    let bundle = || xi.as_ref().ok_or_else(|| anyhow!("this decision needs --bundle"));
    let explicit_lift = args.lift.as_deref().map(|p| load::lift(&m, p)).transpose()?;
    let outcome = match args.op {
        Op::U2 => {
            let (xi, v) = (bundle()?, rep_arg(&args)?);
            let l = default_lift(&m, &args, Some(xi))?;
            Outcome::One(match m.dim() {
                6 => reduce_u2_6(&m, xi, &v, &l)?,
                _ => reduce_u2_7(&m, xi, &v, &l)?,
            })
        }
        Op::So3 => Outcome::One(reduce_so3_7(&m, bundle()?, &rep_arg(&args)?)?),
        Op::Iso => {
            let other = load::bundle(&m, need(&args.other, "other", args.op)?)?;
            Outcome::One(match m.dim() {
                6 => iso_6(&m, bundle()?, &other, explicit_lift.as_ref())?,
                _ => iso_7(&m, bundle()?, &other, explicit_lift.as_ref())?,
            })
        }
        Op::Sp1 => Outcome::Many(sp1_menu(&m, bundle()?)?),
        Op::G2 => Outcome::One(g2_reduce(&m, bundle()?)?),
        Op::Sections => {
            let k = args.k.ok_or_else(|| anyhow!("--op sections needs --k"))?;
            Outcome::One(sections_7(&m, bundle()?, k)?)
        }
        Op::Cor6 => Outcome::Many(cor6_cases(&m, bundle()?, explicit_lift.as_ref())?),
        Op::U3 => {
            let xi = bundle()?;
            let l = default_lift(&m, &args, Some(xi))?;
            let u = load::class(&m, 4, need(&args.u, "u", args.op)?, "u")?;
            let v = load::class(&m, 6, need(&args.v, "v", args.op)?, "v")?;
            Outcome::One(prop_7u3(&m, xi, &l, &u, &v)?)
        }
        Op::ExistsU2 => {
            let l = default_lift(&m, &args, xi.as_ref())?;
            let u = load::class(&m, 4, need(&args.u, "u", args.op)?, "u")?;
            Outcome::One(exists_u2(&m, &l, &u)?)
        }
        Op::ExistsU3 => {
            let l = default_lift(&m, &args, xi.as_ref())?;
            let u = load::class(&m, 4, need(&args.u, "u", args.op)?, "u")?;
            let v = load::class(&m, 6, need(&args.v, "v", args.op)?, "v")?;
            Outcome::One(exists_u3(&m, &l, &u, &v)?)
        }
    };
    let trace = env::var("OBSTRUKT_TRACE").is_ok_and(|v| v == "1");
    Ok(report(&outcome, args.json, trace)?)
}

fn print_decision(label: Option<&str>, d: &Decision, trace: bool) {
    let prefix = label.map(|l| format!("({l}) ")).unwrap_or_default();
    println!("{prefix}{}", d.verdict());
    for f in &d.hypothesis_failures {
        println!("  hypothesis: {f}");
    }
    for (name, w) in &d.witnesses {
        println!("  {name} = {} in H^{}", w.value, w.degree);
    }
    if trace {
        for line in &d.trace {
            eprintln!("  | {line}");
        }
    }
}

/// Exit code: a single decision maps its verdict; a menu exits 2 if any case
/// had unmet hypotheses and 0 otherwise.
fn report(outcome: &Outcome, as_json: bool, trace: bool) -> serde_json::Result<u8> {
    match outcome {
        Outcome::One(d) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&d.to_json())?);
            } else {
                print_decision(None, d, trace);
            }
            Ok(d.verdict().exit_code() as u8)
        }
        Outcome::Many(cases) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&cases_json(cases))?);
            } else {
                for (label, d) in cases {
                    print_decision(Some(label), d, trace);
                }
            }
            let any_hyp = cases.iter().any(|(_, d)| d.verdict() == Verdict::HypothesisFailure);
            Ok(if any_hyp { 2 } else { 0 })
        }
    }
}

