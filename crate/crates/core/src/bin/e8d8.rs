use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use e8d8::characters::{graded_character, theta_series, verify_branching, Lattice, Module};
use e8d8::chevalley::CheckMode;
use e8d8::classification::{integrality_filter_report, lowest_weights};
use e8d8::embedding::{degree_operator_suite, identity_report, seed_invariance, Identity, SuiteConfig};
use e8d8::fock::parse_q;
use e8d8::grids::{current_primary_grid, GridConfig};
use e8d8::report::{self, run_all, Report, SuiteOptions};
use e8d8::sugawara::{central_charge, conformal_weight, solve_central_charge_equality};
use e8d8::{Chevalley, Label, RootSystem, VacuumModule, Q};

#[derive(Parser)]
#[command(name = "e8d8", version, about = "Exact checks for the level-one D8 ⊂ E8 conformal embedding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    E8,
    D8,
}

impl From<Algebra> for Label {
    fn from(a: Algebra) -> Label {
        match a {
            Algebra::E8 => Label::E8,
            Algebra::D8 => Label::D8,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Simple roots, positive roots, highest root and fundamental weights.
    Roots {
        #[arg(value_enum, ignore_case = true)]
        algebra: Algebra,
    },
    /// Nonzero N_{α,β}, or a Jacobi check with --check-jacobi.
    StructureConstants {
        /// `full` or `sample=N`.
        #[arg(long, value_parser = parse_jacobi_mode)]
        check_jacobi: Option<JacobiMode>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    CentralCharge {
        #[arg(long, value_enum, ignore_case = true)]
        algebra: Algebra,
        #[arg(long, value_parser = parse_level, allow_hyphen_values = true)]
        level: Q,
    },
    /// Lowest conformal weight of L(k, μ), μ given by fundamental-weight coefficients.
    ConformalWeight {
        #[arg(long, value_enum, ignore_case = true)]
        algebra: Algebra,
        #[arg(long, value_parser = parse_level, allow_hyphen_values = true)]
        level: Q,
        /// Eight comma-separated coefficients.
        #[arg(long, value_delimiter = ',')]
        weight: Vec<u32>,
    },
    /// Levels where c(E8, k) = c(D8, k).
    SolveLevel,
    ClassifyModules {
        #[arg(long, value_enum, ignore_case = true)]
        algebra: Algebra,
        #[arg(long)]
        level: u32,
        /// Include weight vectors and the integrality cross-check.
        #[arg(long)]
        weights: bool,
    },
    #[command(subcommand)]
    Verify(Verify),
    Characters {
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long)]
        branch: bool,
    },
    /// Runs every check and writes the JSON report.
    Report {
        #[arg(long)]
        json: PathBuf,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Coset-root identities for all 64 positive roots of E8 outside D8.
    Lemmas {
        #[arg(long, value_parser = parse_identity, num_args = 1.., default_value = "all")]
        which: Vec<Vec<Identity>>,
        #[arg(long, default_value_t = 0)]
        cocycle_seed: u64,
        /// Rerun under this cocycle and compare.
        #[arg(long)]
        second_seed: Option<u64>,
    },
    /// L_E8(0) and L_D8(0) against the degree operator.
    SugawaraZero {
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long, default_value_t = 2)]
        exhaustive_through: u32,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    Virasoro {
        #[arg(long, default_value_t = 2)]
        mmax: i32,
        #[arg(long, default_value_t = 2)]
        nmax: i32,
        /// Highest degree of test vectors.
        #[arg(long, default_value_t = 3)]
        degree: u32,
        /// Degree-one test vectors (at most 248).
        #[arg(long, default_value_t = 12)]
        degree_one: usize,
        /// Test vectors at each degree above one.
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        cap: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    CurrentPrimary {
        #[arg(long, value_enum, ignore_case = true, default_value = "e8")]
        algebra: Algebra,
        #[command(flatten)]
        grid: GridArgs,
        /// Largest defect degree sent to the radical test (D8 only).
        #[arg(long, default_value_t = 3)]
        radical_degree: u32,
    },
    SingularVectors,
    OmegaRadical,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = 2)]
    mmax: i32,
    #[arg(long, default_value_t = 2)]
    nmax: i32,
    /// Degree-one vectors; all 248 when omitted.
    #[arg(long)]
    degree_one: Option<usize>,
    #[arg(long, default_value_t = 6)]
    degree_two: usize,
    /// Currents; all 248 when omitted.
    #[arg(long)]
    currents: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy)]
enum JacobiMode {
    Full,
    Sample(u64),
}

fn parse_jacobi_mode(s: &str) -> Result<JacobiMode, String> {
    match s {
        "full" => Ok(JacobiMode::Full),
        _ => s
            .strip_prefix("sample=")
            .and_then(|n| n.parse().ok())
            .map(JacobiMode::Sample)
            .ok_or_else(|| format!("expected `full` or `sample=N`, got `{s}`")),
    }
}

fn parse_level(s: &str) -> Result<Q, String> {
    parse_q(s).ok_or_else(|| format!("not a rational number: `{s}`"))
}

fn parse_identity(s: &str) -> Result<Vec<Identity>, String> {
    if s == "all" {
        return Ok(Identity::ALL.to_vec());
    }
    Identity::parse(s).map(|i| vec![i]).ok_or_else(|| {
        format!("unknown identity `{s}`; expected cartan-squares, root-pairs, cartan-image, mirror or all")
    })
}

fn emit(value: &impl Serialize, pass: bool) -> ExitCode {
    // a closed pipe on stdout is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(value).expect("serializable"));
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Roots { algebra } => emit(&RootSystem::build(algebra.into()).to_export(), true),
        Command::StructureConstants { check_jacobi, seed } => {
            let alg = Chevalley::new();
            match check_jacobi {
                None => {
                    let sc = alg.structure_constants();
                    emit(&json!({ "count": sc.len(), "constants": sc }), true)
                }
                Some(mode) => {
                    let e8_mode = match mode {
                        JacobiMode::Full => CheckMode::Full,
                        JacobiMode::Sample(n) => CheckMode::Sampled { n, seed },
                    };
                    let d8 = alg.check_jacobi(Label::D8, CheckMode::Full);
                    let e8 = alg.check_jacobi(Label::E8, e8_mode);
                    let sl2 = alg.check_sl2();
                    let pass = d8.pass && e8.pass && sl2.pass;
                    emit(&json!({ "jacobi_d8": d8, "jacobi_e8": e8, "sl2": sl2, "pass": pass }), pass)
                }
            }
        }
        Command::CentralCharge { algebra, level } => match central_charge(algebra.into(), level) {
            Ok(c) => emit(&json!({ "algebra": Label::from(algebra), "level": level.to_string(), "c": c.to_string() }), true),
            Err(e) => usage(e),
        },
        Command::ConformalWeight { algebra, level, weight } => {
            let rs = RootSystem::build(algebra.into());
            let Ok(coeffs) = <[u32; 8]>::try_from(weight) else {
                return usage("--weight takes exactly eight coefficients");
            };
            let mu = rs.weight_from_coefficients(&coeffs);
            match conformal_weight(&mu, level, algebra.into()) {
                Ok(h) => emit(&json!({ "weight": mu, "level": level.to_string(), "conformal_weight": h.to_string() }), true),
                Err(e) => usage(e),
            }
        }
        Command::SolveLevel => {
            let roots: Vec<String> = solve_central_charge_equality().iter().map(Q::to_string).collect();
            emit(&json!({ "levels": roots }), true)
        }
        Command::ClassifyModules { algebra, level, weights } => {
            if level == 0 {
                return usage("level must be a positive integer");
            }
            let label = algebra.into();
            let list: Vec<_> = lowest_weights(label, level)
                .into_iter()
                .map(|l| {
                    let mut item = json!({
                        "coeffs": l.weight.coefficients,
                        "name": l.name,
                        "conformal_weight": l.conformal_weight.to_string(),
                    });
                    if weights {
                        item["vec"] = json!(l.weight.vec);
                    }
                    item
                })
                .collect();
            if weights {
                let filter = integrality_filter_report(label, level);
                let pass = filter.pass;
                emit(&json!({ "modules": list, "integrality": filter }), pass)
            } else {
                emit(&list, true)
            }
        }
        Command::Verify(v) => verify(v),
        Command::Characters { order, branch } => {
            let series = json!({
                "theta_e8": theta_series(Lattice::E8, order),
                "theta_d8": theta_series(Lattice::D8, order),
                "theta_spinor": theta_series(Lattice::D8Spinor, order),
                "e8_vacuum": graded_character(Module::E8Vacuum, order),
                "d8_vacuum": graded_character(Module::D8Vacuum, order),
                "d8_spinor": graded_character(Module::D8Spinor, order),
            });
            if branch {
                let r = verify_branching(order);
                let pass = r.pass;
                emit(&json!({ "series": series, "branch_check": pass, "details": r }), pass)
            } else {
                emit(&json!({ "series": series }), true)
            }
        }
        Command::Report { json } => {
            let r = run_all(&SuiteOptions::default());
            print_summary(&r);
            let text = serde_json::to_string_pretty(&r).expect("serializable");
            if let Err(e) = std::fs::write(&json, text) {
                return usage(format!("cannot write {}: {e}", json.display()));
            }
            if r.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn print_summary(r: &Report) {
    for c in &r.checks {
        println!("{:<20} {}", c.name, if c.pass { "PASS" } else { "FAIL" });
    }
    println!("{}/{} checks passed", r.summary.passed, r.summary.total);
}

fn verify(v: Verify) -> ExitCode {
    match v {
        Verify::Lemmas {
            which,
            cocycle_seed,
            second_seed,
        } => {
            let mut chosen: Vec<Identity> = which.into_iter().flatten().collect();
            chosen.dedup();
            let r = identity_report(&chosen, cocycle_seed);
            let inv = second_seed.map(seed_invariance);
            let pass = r.pass && inv.as_ref().map_or(true, |i| i.pass);
            emit(&json!({ "identities": r, "seed_invariance": inv, "pass": pass }), pass)
        }
        Verify::SugawaraZero {
            max_degree,
            exhaustive_through,
            samples,
            seed,
        } => {
            let alg = Chevalley::new();
            let r = degree_operator_suite(
                &alg,
                SuiteConfig {
                    max_degree,
                    exhaustive_through,
                    samples,
                    seed,
                },
            );
            let pass = r.pass;
            emit(&r, pass)
        }
        Verify::Virasoro {
            mmax,
            nmax,
            degree,
            degree_one,
            samples,
            cap,
            seed,
        } => {
            if degree > 3 {
                return usage("test vectors are drawn up to degree 3");
            }
            let config = GridConfig {
                m_max: mmax,
                n_max: nmax,
                degree_one: Some(if degree >= 1 { degree_one } else { 0 }),
                degree_two: if degree >= 2 { samples } else { 0 },
                degree_three: if degree >= 3 { samples } else { 0 },
                currents: None,
                seed,
            };
            let alg = Chevalley::new();
            let c = report::virasoro(&alg, config, cap);
            let pass = c.pass;
            emit(&c, pass)
        }
        Verify::CurrentPrimary {
            algebra,
            grid,
            radical_degree,
        } => {
            let alg = Chevalley::new();
            let config = GridConfig {
                m_max: grid.mmax,
                n_max: grid.nmax,
                degree_one: grid.degree_one,
                degree_two: grid.degree_two,
                degree_three: 0,
                currents: grid.currents,
                seed: grid.seed,
            };
            let g = current_primary_grid(VacuumModule::new(&alg, Q::from_integer(1)), algebra.into(), config, radical_degree);
            let pass = g.pass;
            emit(&g, pass)
        }
        Verify::SingularVectors => {
            let c = report::singular_vectors(&Chevalley::new());
            let pass = c.pass;
            emit(&c, pass)
        }
        Verify::OmegaRadical => {
            let c = report::omega_radical(&Chevalley::new());
            let pass = c.pass;
            emit(&c, pass)
        }
    }
}
