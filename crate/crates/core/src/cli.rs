//! The `zslab` command line.
//!
//! Exit codes: 0 success, 1 refutation or counterexample (a witness is
//! printed), 2 usage error, 3 budget exceeded. JSON goes to stdout,
//! diagnostics to stderr.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::json;

use crate::congruence::{build_system, closed_form, davenport_formula, eta_formula, s_leq_formula, solve_by_elimination};
use crate::error::Error;
use crate::group::GroupSpec;
use crate::report::verify_theorem;
use crate::search::{
    compute_davenport_by_search, compute_eta_by_search, enumerate_extremal, enumerate_minimal_zero_sums,
    s_leq_by_search, Budget, SearchOptions, SearchTask,
};
use crate::sequence::{ParseMode, Sequence};
use crate::structure::{lift_sequence, match_form, FormName};
use crate::symmetry::{canonicalize, SymmetryTable};
use crate::zerosum::ZeroSumEngine;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "zslab", version, about = "Zero-sum sequences over small abelian groups")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Emit::Json, global = true)]
    emit: Emit,
    /// Worker threads for searches; output does not depend on it.
    #[arg(long, default_value_t = 1, global = true)]
    workers: usize,
    /// Seed for randomized subcommands.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Accept unreduced coefficients in sequences and reduce them.
    #[arg(long, global = true)]
    reduce: bool,
    /// Report elapsed_ms as 0 so that output is byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Stat {
    Davenport,
    Eta,
    #[value(name = "s_leq")]
    SLeq,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full structural verification over C_p ⊕ C_p for one k.
    VerifyTheorem {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: u32,
    },
    /// Orbit representatives of long sequences without short zero-sums.
    Extremal {
        #[arg(long)]
        group: GroupSpec,
        /// Uses |S| = D(G)+k-1 and forbids zero-sums of length ≤ D(G)-k.
        #[arg(long, required_unless_present_all = ["length", "forbidden"])]
        k: Option<u32>,
        #[arg(long, requires = "forbidden")]
        length: Option<usize>,
        #[arg(long, requires = "length")]
        forbidden: Option<usize>,
        #[arg(long)]
        no_symmetry: bool,
    },
    /// D(G), η(G) or s_{≤D(G)-k}(G) by exhaustive search.
    Invariant {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long, value_enum)]
        stat: Stat,
        #[arg(long, required_if_eq("stat", "s_leq"))]
        k: Option<u32>,
    },
    /// Orbit representatives of minimal zero-sum sequences of one length.
    MinimalZeroSums {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        length: usize,
    },
    /// Exact zero-sum counts N^i(S).
    Count {
        #[arg(long)]
        seq: String,
        /// Also report the counts modulo this prime.
        #[arg(long)]
        mod_p: Option<u32>,
    },
    /// Length of the shortest nonempty zero-sum subsequence, with a witness.
    Shortest {
        #[arg(long)]
        seq: String,
    },
    /// Match a sequence against a structural template.
    Match {
        #[arg(long)]
        form: FormName,
        #[arg(long)]
        seq: String,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Canonical orbit representative.
    Canon {
        #[arg(long)]
        seq: String,
    },
    /// Lift a sequence over C_n ⊕ C_n to C_n^3.
    Lift {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        k: u32,
    },
    /// Build and solve the binomial congruence system.
    CongruenceSystem {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u64,
    },
    /// Σ(-1)^i N^i(S) mod p, for one sequence or random samples.
    OlsonCheck {
        #[arg(long, conflicts_with = "group")]
        seq: Option<String>,
        #[arg(long, required_unless_present = "seq")]
        group: Option<GroupSpec>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Sample lengths are drawn from [D(G), D(G)+extra].
        #[arg(long, default_value_t = 6)]
        extra: usize,
    },
}

/// Outcome of one command before printing.
struct Output {
    code: i32,
    json: String,
    text: String,
}

impl Output {
    fn ok<T: Serialize>(value: &T, text: impl Into<String>) -> Self {
        Output {
            code: EXIT_OK,
            json: serde_json::to_string_pretty(value).expect("serializable output"),
            text: text.into(),
        }
    }

    fn code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Counterexample(_) => EXIT_REFUTED,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = match cli.emit {
                Emit::Json => writeln!(out, "{}", o.json),
                Emit::Text => writeln!(out, "{}", o.text),
            };
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn parse_seq(cli: &Cli, text: &str) -> crate::Result<Sequence> {
    let mode = if cli.reduce { ParseMode::Reduce } else { ParseMode::Strict };
    Sequence::parse_with(text, mode)
}

fn options(cli: &Cli, symmetry: bool) -> SearchOptions {
    SearchOptions {
        budget: Budget::from_env(),
        symmetry,
        workers: cli.workers,
    }
}

fn execute(cli: &Cli) -> crate::Result<Output> {
    match &cli.command {
        Command::VerifyTheorem { p, k } => {
            let mut v = verify_theorem(*p, *k, Budget::from_env(), cli.workers)?;
            if cli.no_timing {
                v.extremal.elapsed_ms = 0;
            }
            let code = if v.is_refuted() {
                EXIT_REFUTED
            } else if v.is_incomplete() {
                EXIT_BUDGET
            } else {
                EXIT_OK
            };
            Ok(Output::ok(&v, v.to_string()).code(code))
        }
        Command::Extremal {
            group,
            k,
            length,
            forbidden,
            no_symmetry,
        } => {
            let task = match (k, length, forbidden) {
                (_, Some(l), Some(f)) => {
                    let mut t = SearchTask::new(group, *l, *f);
                    t.k = *k;
                    t
                }
                (Some(k), _, _) => SearchTask::extremal(group, *k)?,
                _ => return Err(Error::Precondition("give --k or --length with --forbidden".into())),
            };
            let task = task.with_symmetry(!no_symmetry).with_workers(cli.workers);
            let report = enumerate_extremal(&task)?;
            let json = report.to_json(!cli.no_timing);
            let mut text = format!(
                "{} |S| = {}, no zero-sum of length ≤ {}: {} orbit(s){}",
                group,
                task.target_length,
                task.forbidden,
                report.orbits.len(),
                if report.exhaustive { "" } else { " (NOT exhaustive)" }
            );
            for o in &report.orbits {
                text.push_str(&format!("\n  {}  orbit size {}", o.canonical.render_terms(), o.orbit_size));
            }
            let code = if report.exhaustive { EXIT_OK } else { EXIT_BUDGET };
            Ok(Output::ok(&json, text).code(code))
        }
        Command::Invariant { group, stat, k } => {
            let opts = options(cli, true);
            let (name, value, formula) = match stat {
                Stat::Davenport => (
                    "davenport",
                    compute_davenport_by_search(group, &opts)?,
                    davenport_formula(group).ok(),
                ),
                Stat::Eta => ("eta", compute_eta_by_search(group, &opts)?, eta_formula(group).ok()),
                Stat::SLeq => {
                    let k = k.expect("clap requires --k");
                    let d = davenport_formula(group)? as usize;
                    if k as usize >= d {
                        return Err(Error::OutOfRange(format!("k = {k} must be below D(G) = {d}")));
                    }
                    let value = s_leq_by_search(group, d - k as usize, &opts)?;
                    let formula = match group.factors() {
                        [m, n] => s_leq_formula(*m as u64, *n as u64, k as u64).ok(),
                        _ => None,
                    };
                    ("s_leq", value, formula)
                }
            };
            let agrees = formula.map(|f| f == value as u64);
            let json = json!({
                "group": group.to_string(),
                "stat": name,
                "k": k,
                "value": value,
                "formula": formula,
                "agrees": agrees,
            });
            let text = format!("{name}({group}) = {value}");
            let code = if agrees == Some(false) { EXIT_REFUTED } else { EXIT_OK };
            Ok(Output::ok(&json, text).code(code))
        }
        Command::MinimalZeroSums { group, length } => {
            let reps = enumerate_minimal_zero_sums(group, *length, &options(cli, true))?;
            let rendered: Vec<String> = reps.iter().map(Sequence::render_terms).collect();
            let json = json!({ "group": group.to_string(), "length": length, "orbits": rendered });
            Ok(Output::ok(&json, rendered.join("\n")))
        }
        Command::Count { seq, mod_p } => {
            let s = parse_seq(cli, seq)?;
            let engine = ZeroSumEngine::new(s.spec())?;
            let profile = engine.count_zero_sums(&s)?;
            let mut json = serde_json::to_value(profile.to_json()).unwrap();
            let mut text = profile
                .counts()
                .iter()
                .enumerate()
                .map(|(i, c)| format!("N^{i} = {c}"))
                .collect::<Vec<_>>()
                .join("\n");
            if let Some(p) = mod_p {
                let residues = engine.count_zero_sums_mod(&s, *p)?;
                json["mod_p"] = json!({ "p": p, "counts": residues });
                text.push_str(&format!("\nmod {p}: {residues:?}"));
            }
            Ok(Output::ok(&json, text))
        }
        Command::Shortest { seq } => {
            let s = parse_seq(cli, seq)?;
            let engine = ZeroSumEngine::new(s.spec())?;
            let shortest = engine.shortest_nonempty_zero_sum(&s)?;
            let witness = match shortest {
                Some(l) => engine.extract_witness(&s, l)?.map(|w| w.render()),
                None => None,
            };
            let json = json!({ "shortest": shortest, "witness": witness });
            let text = match (&shortest, &witness) {
                (Some(l), Some(w)) => format!("{l}: {w}"),
                _ => "zero-sum free".to_string(),
            };
            Ok(Output::ok(&json, text))
        }
        Command::Match { form, seq, k } => {
            let s = parse_seq(cli, seq)?;
            let m = match_form(*form, &s, *k)?;
            let json = m.to_json();
            let text = match &m.basis_witness {
                Some(b) => format!(
                    "{form}: matched with basis {}",
                    b.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                ),
                None => format!("{form}: no match"),
            };
            Ok(Output::ok(&json, text))
        }
        Command::Canon { seq } => {
            let s = parse_seq(cli, seq)?;
            let c = canonicalize(&s)?;
            let orbit_size = SymmetryTable::new(s.spec()).ok().map(|t| t.orbit_size(&s));
            let json = json!({ "canonical": c.render(), "orbit_size": orbit_size });
            Ok(Output::ok(&json, c.render()))
        }
        Command::Lift { seq, k } => {
            let s = parse_seq(cli, seq)?;
            let lift = lift_sequence(&s, *k)?;
            let engine = ZeroSumEngine::new(lift.lifted.spec())?;
            let minimal = engine.is_minimal_zero_sum(&lift.lifted)?;
            let json = json!({
                "lifted": lift.lifted.render(),
                "parts": lift.parts.iter().map(Sequence::render_terms).collect::<Vec<_>>(),
                "length": lift.lifted.len(),
                "sigma_zero": lift.lifted.sigma().is_zero(),
                "minimal_zero_sum": minimal,
            });
            let text = format!("{}\nminimal zero-sum: {minimal}", lift.lifted.render());
            Ok(Output::ok(&json, text))
        }
        Command::CongruenceSystem { p, k } => {
            let sys = build_system(*p, *k)?;
            let sol = solve_by_elimination(&sys)?;
            let closed = closed_form(*p, *k)?;
            let agrees = sol.unique && sol.values == closed.values;
            let json = json!({
                "p": p,
                "k": k,
                "matrix": sys.matrix,
                "solution": sol,
                "closed_form": closed.values,
                "agrees": agrees,
            });
            let text = format!("x = {:?} (closed form {:?})", sol.values, closed.values);
            let code = if agrees { EXIT_OK } else { EXIT_REFUTED };
            Ok(Output::ok(&json, text).code(code))
        }
        Command::OlsonCheck {
            seq,
            group,
            samples,
            extra,
        } => olson(cli, seq.as_deref(), group.as_ref(), *samples, *extra),
    }
}

fn olson(cli: &Cli, seq: Option<&str>, group: Option<&GroupSpec>, samples: usize, extra: usize) -> crate::Result<Output> {
    let mut sequences = Vec::new();
    match (seq, group) {
        (Some(text), _) => sequences.push(parse_seq(cli, text)?),
        (None, Some(spec)) => {
            let d = davenport_formula(spec)? as usize;
            let mut rng = StdRng::seed_from_u64(cli.seed);
            for _ in 0..samples {
                let len = rng.gen_range(d..=d + extra);
                let elems: Vec<_> = (0..len).map(|_| spec.element_at(rng.gen_range(0..spec.order()))).collect();
                sequences.push(Sequence::from_elements(spec, &elems)?);
            }
        }
        (None, None) => return Err(Error::Precondition("give --seq or --group".into())),
    }
    let spec = sequences[0].spec().clone();
    let p = spec.p_group_prime().ok_or_else(|| Error::UnsupportedSpec {
        group: spec.to_string(),
        reason: "needs a p-group".into(),
    })?;
    let d = davenport_formula(&spec)? as usize;
    let engine = ZeroSumEngine::new(&spec)?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for s in &sequences {
        if s.len() < d {
            return Err(Error::Precondition(format!("|S| = {} is below D(G) = {d}", s.len())));
        }
        let alt = engine.olson_alternating_check(s, p)?;
        checked += 1;
        if alt != 0 {
            failures.push(json!({ "sequence": s.render(), "alternating_sum_mod_p": alt }));
        }
    }
    let json = json!({
        "group": spec.to_string(),
        "p": p,
        "checked": checked,
        "seed": seq.is_none().then_some(cli.seed),
        "counterexamples": failures,
    });
    let text = format!("{checked} sequence(s) checked, {} counterexample(s)", failures.len());
    let code = if failures.is_empty() { EXIT_OK } else { EXIT_REFUTED };
    Ok(Output::ok(&json, text).code(code))
}
