use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use newtonian_core::curve::{ea_candidate, GroupPoint};
use newtonian_core::fermat::q_poly;
use newtonian_core::ledger::{run_ledger, ClaimStatus};
use newtonian_core::pythagoras::{partition, triple_from_params, Ordering, Triple, TripleParams};
use newtonian_core::ring::RingRow;
use newtonian_core::search::{
    cubic_square_search, fermat_search, pythagorean_search, q_power_scan, r3_exactness_search,
    SearchReport,
};
use newtonian_core::triangle::{delta_carry, delta_positional, row};
use newtonian_core::Rational;

const MAX_BOUND_VAR: &str = "NEWTONIAN_MAX_BOUND";

#[derive(Parser)]
#[command(
    name = "newtonian",
    version,
    about = "Exact arithmetic on Newtonian triangles"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print row N(y, n) of the Newtonian triangle.
    Row {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        y: Rational,
        #[arg(long)]
        n: u32,
        /// Also print the positional reading of the row in this base.
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        base: Option<Rational>,
    },
    /// Read row N(y, n) as a base-10 number.
    Delta {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        y: Rational,
        #[arg(long)]
        n: u32,
        /// Propagate carries digit by digit (integral, nonnegative rows only).
        #[arg(long)]
        carry: bool,
    },
    /// Print the Fermat polynomial Q_{n-1,a} or its value at a point.
    Qpoly {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        eval: Option<Rational>,
    },
    /// Generate the Pythagorean triple for parameters (p, q, x, a).
    Triple {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        p: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        q: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = ordering, default_value = "alpha-min")]
        order: Ordering,
    },
    /// Split integral triples from a file into gcd classes.
    Partition {
        /// JSON array of triples, or one `alpha beta gamma` per line.
        #[arg(long)]
        file: PathBuf,
    },
    /// Operate on rows of the triangle ring.
    Ring(RingArgs),
    /// Operate on points of the group on y² = 2ax + a(20 + a).
    Group(GroupArgs),
    /// Evaluate the E_a parametrization with a = k²/3 and its residual.
    Ea {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        p: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        q: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        z: Rational,
        #[arg(long, allow_hyphen_values = true)]
        k: BigInt,
    },
    /// Run a bounded exhaustive search.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Check every claim and print the verification ledger.
    Verify {
        /// Also write the ledger JSON to this path.
        #[arg(long)]
        ledger: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RingOp {
    Add,
    Mul,
    Scale,
}

#[derive(Args)]
struct RingArgs {
    #[arg(long, value_enum)]
    op: RingOp,
    #[arg(long)]
    n: u32,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    y1: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, required_if_eq_any = [("op", "add"), ("op", "mul")])]
    y2: Option<Rational>,
    /// Integer scalar for `--op scale`.
    #[arg(long, allow_hyphen_values = true, required_if_eq("op", "scale"))]
    alpha: Option<BigInt>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupOp {
    Mul,
    Inv,
    Id,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long, value_enum)]
    op: GroupOp,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, required_if_eq_any = [("op", "mul"), ("op", "inv")])]
    p: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, required_if_eq_any = [("op", "mul"), ("op", "inv")])]
    q: Option<Rational>,
    /// Second factor for `--op mul`.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, required_if_eq("op", "mul"))]
    p2: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, required_if_eq("op", "mul"))]
    q2: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    z: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    a: Rational,
}

#[derive(Subcommand)]
enum SearchKind {
    /// u^n + v^n = w^n with 1 <= u <= v < w <= bound.
    Fermat {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        bound: u64,
    },
    /// Integral Pythagorean triples with hypotenuse <= bound.
    Pyth {
        #[arg(long)]
        bound: u64,
    },
    /// u^3 - v^3 = w^2 with 1 <= v < u <= bound.
    Cubsq {
        #[arg(long)]
        bound: u64,
    },
    /// Integer (y, a, b) with R_{3,a,b}(y) a cube, |y|, |a|, |b| <= bound.
    R3 {
        #[arg(long)]
        bound: u64,
    },
    /// Integer y in [-bound, bound] with Q_{n-1,a}(y) an exact n-th power.
    Qpower {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long)]
        bound: u64,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    s.parse()
        .map_err(|_| format!("malformed rational '{s}' (expected num/den or an integer)"))
}

fn ordering(s: &str) -> Result<Ordering, String> {
    s.parse()
        .map_err(|_| format!("unknown ordering '{s}' (expected alpha-min or beta-min)"))
}

type Outcome = Result<ExitCode, String>;

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn joined<'a>(items: impl IntoIterator<Item = &'a Rational>) -> String {
    items
        .into_iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Applies the `NEWTONIAN_MAX_BOUND` cap, warning on stderr when it bites.
fn clamp(bound: u64) -> Result<u64, String> {
    let Ok(raw) = std::env::var(MAX_BOUND_VAR) else {
        return Ok(bound);
    };
    let cap: u64 = raw
        .parse()
        .map_err(|_| format!("{MAX_BOUND_VAR} must be a nonnegative integer, got '{raw}'"))?;
    if bound > cap {
        eprintln!("bound {bound} capped at {cap} by {MAX_BOUND_VAR}");
        return Ok(cap);
    }
    Ok(bound)
}

fn signed(bound: u64) -> Result<i64, String> {
    i64::try_from(bound).map_err(|_| format!("bound {bound} is too large"))
}

fn report<W: Serialize + std::fmt::Debug>(r: &SearchReport<W>, json: bool) {
    if json {
        print_json(r);
        return;
    }
    println!(
        "{}: {} witness(es), exhaustive = {}",
        r.query,
        r.witnesses.len(),
        r.exhaustive
    );
    for w in &r.witnesses {
        println!("{}", serde_json::to_string(w).expect("serializable"));
    }
}

fn read_triples(path: &PathBuf) -> Result<Vec<Triple>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()));
    }
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            let fields: Vec<&str> = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|f| !f.is_empty())
                .collect();
            let [alpha, beta, gamma] = fields[..] else {
                return Err(format!(
                    "{}:{}: expected three numbers",
                    path.display(),
                    i + 1
                ));
            };
            let parse =
                |s: &str| rational(s).map_err(|e| format!("{}:{}: {e}", path.display(), i + 1));
            Ok(Triple::new(parse(alpha)?, parse(beta)?, parse(gamma)?))
        })
        .collect()
}

fn run(command: Command, json: bool) -> Outcome {
    let err = |e: newtonian_core::Error| e.to_string();
    match command {
        Command::Row { y, n, base } => {
            let r = row(&y, n);
            let reading = base.as_ref().map(|b| delta_positional(&r, b));
            if json {
                let mut out = serde_json::json!({ "y": y, "n": n, "entries": r.entries });
                if let (Some(b), Some(v)) = (&base, &reading) {
                    out["base"] = serde_json::json!(b);
                    out["value"] = serde_json::json!(v);
                }
                print_json(&out);
            } else {
                println!("{}", joined(&r.entries));
                if let Some(v) = reading {
                    println!("{v}");
                }
            }
        }
        Command::Delta { y, n, carry } => {
            let r = row(&y, n);
            if carry {
                let c = delta_carry(&r, 10).map_err(err)?;
                if json {
                    print_json(
                        &serde_json::json!({ "y": y, "n": n, "digits": c.digits, "value": c.value.to_string() }),
                    );
                } else {
                    println!("{}", c.digits);
                }
            } else {
                let v = delta_positional(&r, &Rational::from(10));
                if json {
                    print_json(&serde_json::json!({ "y": y, "n": n, "value": v }));
                } else {
                    println!("{v}");
                }
            }
        }
        Command::Qpoly { n, a, eval } => {
            let poly = q_poly(n, &a).map_err(err)?;
            match (eval, json) {
                (Some(at), true) => print_json(
                    &serde_json::json!({ "n": n, "a": a, "y": at, "value": poly.eval(&at) }),
                ),
                (Some(at), false) => println!("{}", poly.eval(&at)),
                (None, true) => {
                    print_json(&serde_json::json!({ "n": n, "a": a, "coefficients": poly }))
                }
                (None, false) => println!("{poly}"),
            }
        }
        Command::Triple { p, q, x, a, order } => {
            let params = TripleParams::new(p, q, x, a).with_ordering(order);
            let t = triple_from_params(&params).map_err(err)?;
            if json {
                print_json(&t);
            } else {
                println!("{}", joined(t.components()));
            }
        }
        Command::Partition { file } => {
            let triples = read_triples(&file)?;
            let classes = partition(&triples).map_err(err)?;
            if json {
                let out: serde_json::Map<String, serde_json::Value> = classes
                    .iter()
                    .map(|(m, ts)| (m.to_string(), serde_json::json!(ts)))
                    .collect();
                print_json(&out);
            } else {
                for (m, ts) in &classes {
                    let listed: Vec<String> = ts
                        .iter()
                        .map(|t| format!("({})", joined(t.components())))
                        .collect();
                    println!("{m}: {}", listed.join(" "));
                }
            }
        }
        Command::Ring(args) => {
            let u = RingRow::new(args.y1, args.n);
            let result = match args.op {
                RingOp::Add => u.add(&RingRow::new(args.y2.expect("required by clap"), args.n)),
                RingOp::Mul => u.mul(&RingRow::new(args.y2.expect("required by clap"), args.n)),
                RingOp::Scale => Ok(u.scale(&args.alpha.expect("required by clap"))),
            }
            .map_err(err)?;
            let r = result.row();
            if json {
                print_json(
                    &serde_json::json!({ "y": result.y, "n": result.n, "entries": r.entries }),
                );
            } else {
                println!("{}", joined(&r.entries));
            }
        }
        Command::Group(args) => {
            let point = |p: Option<Rational>, q: Option<Rational>| {
                GroupPoint::new(
                    p.expect("required by clap"),
                    q.expect("required by clap"),
                    args.z.clone(),
                    args.a.clone(),
                )
            };
            let result = match args.op {
                GroupOp::Id => GroupPoint::identity(args.z.clone(), args.a.clone()),
                GroupOp::Inv => point(args.p.clone(), args.q.clone()).map(|u| u.inverse()),
                GroupOp::Mul => point(args.p.clone(), args.q.clone())
                    .and_then(|u| point(args.p2.clone(), args.q2.clone()).and_then(|v| u.mul(&v))),
            }
            .map_err(err)?;
            if json {
                print_json(&result);
            } else {
                println!(
                    "p = {}, q = {}, x = {}, y = {}",
                    result.p,
                    result.q,
                    result.x(),
                    result.y()
                );
            }
        }
        Command::Ea { p, q, z, k } => {
            let c = ea_candidate(&p, &q, &z, &k).map_err(err)?;
            if json {
                print_json(&c);
            } else {
                println!("a = {}, x = {}, y = {}", c.a, c.x, c.y);
                println!(
                    "residual = {} ({})",
                    c.residual,
                    if c.on_curve() { "on E_a" } else { "off E_a" }
                );
            }
        }
        Command::Search { kind } => match kind {
            SearchKind::Fermat { n, bound } => {
                if n < 3 {
                    return Err("search fermat needs --n >= 3".into());
                }
                report(&fermat_search(n, clamp(bound)?), json);
            }
            SearchKind::Pyth { bound } => report(&pythagorean_search(clamp(bound)?), json),
            SearchKind::Cubsq { bound } => report(&cubic_square_search(clamp(bound)?), json),
            SearchKind::R3 { bound } => {
                let b = signed(clamp(bound)?)?;
                report(&r3_exactness_search(-b..=b, -b..=b, -b..=b), json);
            }
            SearchKind::Qpower { n, a, bound } => {
                let b = signed(clamp(bound)?)?;
                report(&q_power_scan(n, &a, -b..=b).map_err(err)?, json);
            }
        },
        Command::Verify { ledger } => {
            let result = run_ledger();
            if let Some(path) = ledger {
                let text = serde_json::to_string_pretty(&result).expect("serializable");
                fs::write(&path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
            }
            if json {
                print_json(&result);
            } else {
                for entry in &result.entries {
                    let status = match entry.status {
                        ClaimStatus::Verified => "verified",
                        ClaimStatus::RefutedAtDeskScale => "refuted-at-desk-scale",
                        ClaimStatus::ClaimOnly => "claim-only",
                    };
                    println!("{status:<22} {:<28} {}", entry.claim_id, entry.paper_ref);
                }
            }
            if result.has_disagreement() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command, cli.json) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
