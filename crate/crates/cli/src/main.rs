//! `orbit-classes` command-line front end.

mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orbit_classes::certify::DEFAULT_TRIALS;
use orbit_classes::classes::{
    klyachko_terms, uniform_degree_terms, uniform_matrix_class_lr, uniform_matrix_class_omega,
    uniform_orbit_localized, ClassError, LocalizedForm,
};
use orbit_classes::exactpoly::VarSpace;
use orbit_classes::localize::{full_orbit_tuple, gkm_check, orbit_chow_localization, GkmTuple};
use orbit_classes::matroid::{Subset, MAX_GROUND};
use orbit_classes::split::{factorial_expand, lift, resolve_convention, schubert_expand_tuple, RestrictionConvention};
use orbit_classes::symfunc::{render_schur_form, schur_expand, Partition};
use orbit_classes::verify::{run_suite, Mode, Suite, VerifyOptions, EXACT_MAX_N};
use orbit_classes::Poly;

use input::{parse_basis, parse_partition, read_matroid, CliError};

#[derive(Parser)]
#[command(name = "orbit-classes", version, about = "Equivariant classes of matrix and torus orbit closures")]
struct Cli {
    #[command(flatten)]
    cfg: Config,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct Config {
    /// Exact normal forms or seeded random evaluation; defaults by size.
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Random evaluation points per identity in certify mode.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS as u64, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Allow exact computation above n = 6.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Certify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Lr,
    Omega,
    Localized,
}

#[derive(Subcommand)]
enum Command {
    /// Matroid of the columns of a matrix file.
    Matroid { input: String },
    /// Orbit-closure localization at one basis or at every r-subset.
    Localize {
        /// Matrix or matroid JSON file (`-` for stdin).
        input: String,
        #[arg(long, conflicts_with = "all")]
        basis: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Full GKM tuple of a matrix or matroid, with its edge-condition check.
    Tuple { input: String },
    /// Closed-form class of the uniform matroid orbit closure.
    Class {
        r: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = FormArg::Lr)]
        form: FormArg,
        /// With `--form localized`: one basis instead of all of them.
        #[arg(long)]
        basis: Option<String>,
    },
    /// Ambient class lifted from a GKM tuple file.
    Lift { input: String },
    /// Factorial Schur expansion of an ambient class file.
    Expand {
        input: String,
        /// Needed when the polynomial is zero and the space cannot be inferred.
        #[arg(long, requires = "n")]
        r: Option<usize>,
        #[arg(long, requires = "r")]
        n: Option<usize>,
    },
    /// Degree of the uniform matrix orbit closure.
    Degree { r: usize, n: usize },
    /// Klyachko's coefficient, `lam` as comma-separated parts.
    Klyachko {
        lam: String,
        r: usize,
        n: usize,
        /// First index of the alternating sum.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(0..=1))]
        variant: u64,
    },
    /// Run one verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long, default_value_t = EXACT_MAX_N)]
        max_n: usize,
    },
}

struct Ctx {
    cfg: Config,
}

impl Ctx {
    fn mode_for(&self, n: usize) -> Mode {
        match self.cfg.mode {
            Some(ModeArg::Exact) => Mode::Exact,
            Some(ModeArg::Certify) => Mode::Certify,
            None => Mode::default_for(n),
        }
    }

    /// Refuses exact work above `n = 6` unless forced.
    fn check_exact_size(&self, n: usize) -> Result<(), CliError> {
        if n > EXACT_MAX_N && !self.cfg.force {
            return Err(CliError::size(format!(
                "n = {n} exceeds the exact-mode limit {EXACT_MAX_N}; pass --force to compute anyway"
            )));
        }
        Ok(())
    }

    fn convention(&self, r: usize, n: usize) -> Result<(RestrictionConvention, &'static str), CliError> {
        if n <= EXACT_MAX_N + 1 {
            let c = resolve_convention(r, n).map_err(CliError::domain)?;
            Ok((c, "resolved"))
        } else {
            let c = resolve_convention(2, 4).map_err(CliError::domain)?;
            Ok((c, "resolved at (2,4)"))
        }
    }

    fn envelope(&self, command: &str, size: Option<(usize, usize)>, result: Value) -> Result<Value, CliError> {
        let mut env = json!({
            "version": env!("CARGO_PKG_VERSION"),
            "command": command,
            "seed": self.cfg.seed,
        });
        match size {
            Some((r, n)) => {
                let (conv, source) = self.convention(r, n)?;
                env["r"] = json!(r);
                env["n"] = json!(n);
                env["mode"] = json!(self.mode_for(n));
                env["convention"] = json!(conv.to_json());
                env["convention_source"] = json!(source);
            }
            None => {
                env["r"] = Value::Null;
                env["n"] = Value::Null;
            }
        }
        env["result"] = result;
        Ok(env)
    }
}

fn check_size(r: usize, n: usize) -> Result<VarSpace, CliError> {
    if r == 0 || r >= n {
        return Err(CliError::domain(format!("need 1 <= r < n, got r={r}, n={n}")));
    }
    if n > MAX_GROUND {
        return Err(CliError::size(format!("n = {n} exceeds the limit {MAX_GROUND}")));
    }
    VarSpace::new(r, n).map_err(CliError::domain)
}

fn class_json(p: &Poly) -> Value {
    json!({
        "class": p.to_json(),
        "rendering": render_schur_form(p),
        "schur_expansion": schur_expand(p).map(|e| json!(e.to_json())).unwrap_or(Value::Null),
    })
}

fn tuple_json(f: &GkmTuple) -> Value {
    json!(f.to_json())
}

fn run(cli: Cli) -> Result<Value, CliError> {
    let ctx = Ctx { cfg: cli.cfg };
    match cli.cmd {
        Command::Matroid { input } => {
            let m = read_matroid(&input)?;
            ctx.envelope("matroid", Some((m.r(), m.n())), json!(m.to_json()))
        }
        Command::Localize { input, basis, all } => {
            let m = read_matroid(&input)?;
            ctx.check_exact_size(m.n())?;
            let size = Some((m.r(), m.n()));
            match (basis, all) {
                (Some(b), _) => {
                    let b = parse_basis(&b, m.r(), m.n())?;
                    let v = orbit_chow_localization(&m, b).map_err(CliError::domain)?;
                    let res = json!({"basis": b.to_vec(), "value": v.to_json(), "text": v.to_string()});
                    ctx.envelope("localize", size, res)
                }
                (None, true) => {
                    let f = full_orbit_tuple(&m).map_err(CliError::domain)?;
                    ctx.envelope("localize", size, tuple_json(&f))
                }
                (None, false) => Err(CliError::domain("pass --basis B or --all")),
            }
        }
        Command::Tuple { input } => {
            let m = read_matroid(&input)?;
            ctx.check_exact_size(m.n())?;
            let f = full_orbit_tuple(&m).map_err(CliError::domain)?;
            let violations = gkm_check(&f);
            let res = json!({"tuple": tuple_json(&f), "gkm_ok": violations.is_empty(), "gkm_violations": violations});
            ctx.envelope("tuple", Some((m.r(), m.n())), res)
        }
        Command::Class { r, n, form, basis } => {
            let space = check_size(r, n)?;
            ctx.check_exact_size(n)?;
            let res = match form {
                FormArg::Lr => class_json(&uniform_matrix_class_lr(r, n).map_err(class_err)?),
                FormArg::Omega => class_json(&uniform_matrix_class_omega(r, n).map_err(class_err)?),
                FormArg::Localized => {
                    let at = |b: Subset| uniform_orbit_localized(r, n, b, LocalizedForm::Transposed).map_err(class_err);
                    match basis {
                        Some(b) => {
                            let b = parse_basis(&b, r, n)?;
                            let v = at(b)?;
                            json!({"basis": b.to_vec(), "value": v.to_json(), "text": v.to_string()})
                        }
                        None => {
                            let mut vals = std::collections::BTreeMap::new();
                            for b in Subset::all_of_size(n, r) {
                                vals.insert(b, at(b)?);
                            }
                            tuple_json(&GkmTuple::new(space, vals).map_err(CliError::domain)?)
                        }
                    }
                }
            };
            let mut res = res;
            res["form"] = json!(match form {
                FormArg::Lr => "lr",
                FormArg::Omega => "omega",
                FormArg::Localized => "localized",
            });
            ctx.envelope("class", Some((r, n)), res)
        }
        Command::Lift { input } => {
            let f = input::read_tuple(&input)?;
            let space = f.space();
            ctx.check_exact_size(space.n)?;
            let violations = gkm_check(&f);
            if !violations.is_empty() {
                return Err(CliError::domain(format!(
                    "tuple fails the GKM condition on {} edges, first {:?}-{:?}",
                    violations.len(),
                    violations[0].basis,
                    violations[0].other
                )));
            }
            let (conv, _) = ctx.convention(space.r, space.n)?;
            let e = schubert_expand_tuple(&f, conv).map_err(CliError::domain)?;
            let c = lift(&e).map_err(CliError::domain)?;
            let mut res = class_json(&c);
            res["schubert_expansion"] = json!(e.to_json());
            ctx.envelope("lift", Some((space.r, space.n)), res)
        }
        Command::Expand { input, r, n } => {
            let p = input::read_poly(&input, r.zip(n))?;
            let space = p.space();
            check_size(space.r, space.n)?;
            let (conv, _) = ctx.convention(space.r, space.n)?;
            let e = factorial_expand(&p, conv.eps_t).map_err(CliError::domain)?;
            let res = json!({"expansion": e.to_json(), "width_bounded": e.overflow.is_zero()});
            ctx.envelope("expand", Some((space.r, space.n)), res)
        }
        Command::Degree { r, n } => {
            check_size(r, n)?;
            let (total, terms) = uniform_degree_terms(r, n).map_err(class_err)?;
            let terms: Vec<Value> = terms
                .iter()
                .map(|(l, c, v)| json!({"lambda": l, "complement": c, "value": v.to_string()}))
                .collect();
            ctx.envelope("degree", Some((r, n)), json!({"degree": total.to_string(), "terms": terms}))
        }
        Command::Klyachko { lam, r, n, variant } => {
            check_size(r, n)?;
            let lam: Partition = parse_partition(&lam)?;
            let (total, terms) = klyachko_terms(&lam, r, n, variant as usize).map_err(class_err)?;
            let res = json!({
                "lambda": lam,
                "variant": variant,
                "value": total.to_string(),
                "terms": terms,
            });
            ctx.envelope("klyachko", Some((r, n)), res)
        }
        Command::Verify { suite, max_n } => verify(&ctx, &suite, max_n),
    }
}

fn class_err(e: ClassError) -> CliError {
    CliError::domain(e)
}

fn verify(ctx: &Ctx, suite: &str, max_n: usize) -> Result<Value, CliError> {
    if !(2..=MAX_GROUND).contains(&max_n) {
        return Err(CliError::domain(format!("--max-n must lie in 2..={MAX_GROUND}")));
    }
    let mode = ctx.mode_for(max_n);
    if mode == Mode::Exact {
        ctx.check_exact_size(max_n)?;
    }
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(CliError::domain)?]
    };
    let opts = VerifyOptions {
        mode,
        trials: ctx.cfg.trials as usize,
        seed: ctx.cfg.seed,
        max_n,
    };
    let mut reports = Vec::new();
    let mut failure: Option<String> = None;
    for s in suites {
        let rep = run_suite(s, opts).map_err(CliError::domain)?;
        if failure.is_none() {
            if let Some(c) = rep.first_failure() {
                failure = Some(format!("{}: {} {}", rep.suite, c.case, c.detail));
            }
        }
        reports.push(rep);
    }
    let passed = failure.is_none();
    let mut env = ctx.envelope("verify", None, json!({"passed": passed, "suites": reports}))?;
    env["mode"] = json!(mode);
    env["max_n"] = json!(max_n);
    if let Some(msg) = failure {
        return Err(CliError::verify(msg, env));
    }
    Ok(env)
}

fn emit(v: &Value, output: Output) {
    let text = match output {
        Output::Json => serde_json::to_string(v),
        Output::Pretty => serde_json::to_string_pretty(v),
    }
    .expect("JSON values serialise");
    println!("{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.cfg.output;
    match run(cli) {
        Ok(v) => {
            emit(&v, output);
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Some(report) = &e.report {
                emit(report, output);
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
