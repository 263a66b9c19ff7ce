//! Command-line front end: Macdonald polynomials, denominators, spectra,
//! paths, jump checks, staircase pole verification, specializations and the
//! operator relation suite.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use serde_json::json;

use nsmac::denom::{den_of, factored_json, ratio};
use nsmac::error::Error;
use nsmac::graph::{canonical_path, Composition, MacEngine};
use nsmac::hecke::{check_relation, random_macpoly, RELATION_IDS};
use nsmac::jumps::{block_divisor_bound, block_jump, block_jump_dual_route, JumpSpec};
use nsmac::specialize::{parse_identity, specialize_mac, SpecPoint};
use nsmac::spectral::{spectre_hat, spectre_y, std_perm};
use nsmac::staircase::{grid, verify_unreachable_pole, CellLimits};

#[derive(Parser)]
#[command(name = "nsmac", version, about = "nonsymmetric Macdonald polynomial engine")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Cap on n*k for grid verification.
    #[arg(long, global = true, default_value_t = 8)]
    max_grid: usize,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the nonsymmetric Macdonald polynomial M_v.
    Mac { v: String },
    /// Print the factored denominator Den(v).
    Den { v: String },
    /// Print std(v) and both spectral vectors of v.
    Spectre { v: String },
    /// Print a canonical Yang-Baxter path from 0^N to v.
    Path { v: String },
    /// Check a block jump against its stepwise path and divisor bound.
    JumpCheck {
        /// Source composition u'a^k b^ell u''.
        v: String,
        /// 1-based position of the first block.
        pos: usize,
        /// First block length.
        k: usize,
        /// Second block length.
        ell: usize,
    },
    /// Verify that 1 - q^a t^{k+1} is absent from Den(staircase(k, a, n)).
    StaircaseVerify {
        k: Option<usize>,
        a: Option<u32>,
        n: Option<usize>,
        /// Verify the whole default grid instead of one cell.
        #[arg(long)]
        grid: bool,
        /// Term-count guard for one cell.
        #[arg(long, default_value_t = 2_000_000)]
        max_terms: usize,
    },
    /// Specialize M_v at q^a t^b = 1, or check an identity file.
    Specialize {
        v: Option<String>,
        /// Point in the form q^a*t^b=1.
        #[arg(long)]
        point: Option<String>,
        /// omega exponent k, meaning omega = zeta_a^k.
        #[arg(long, default_value_t = 1)]
        omega: u32,
        /// Declarative identity file to check.
        #[arg(long)]
        identity_file: Option<String>,
    },
    /// Run the operator relation catalog on random polynomials.
    Relations {
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) | Error::RangeViolation(_) => 2,
                Error::NotProductForm { .. } => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.cmd {
        Cmd::Mac { v } => {
            let v: Composition = v.parse()?;
            let mut eng = MacEngine::new();
            let m = eng.mac(&v)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&m.to_json()).unwrap());
            } else {
                println!("{m}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Den { v } => {
            let v: Composition = v.parse()?;
            let mut eng = MacEngine::new();
            let d = den_of(&mut eng, &v)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&factored_json(&d)).unwrap());
            } else {
                println!("{d}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Spectre { v } => {
            let v: Composition = v.parse()?;
            let hat = spectre_hat(v.parts());
            let y = spectre_y(v.parts());
            let sigma = std_perm(v.parts());
            if cli.json {
                let out = json!({
                    "std": sigma,
                    "hat": hat.to_json(),
                    "y": y.to_json(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                let s: Vec<String> = sigma.iter().map(|x| x.to_string()).collect();
                println!("std  = {}", s.join(""));
                println!("zhat = {hat}");
                println!("z    = {y}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Path { v } => {
            let v: Composition = v.parse()?;
            let p = canonical_path(&v);
            if cli.json {
                let steps: Vec<String> = p.steps.iter().map(|s| s.to_string()).collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"start": p.start.to_string(), "steps": steps}))
                        .unwrap()
                );
            } else {
                println!("{p}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::JumpCheck { v, pos, k, ell } => {
            let v: Composition = v.parse()?;
            let spec = JumpSpec::from_vertex(&v, *pos, *k, *ell)?;
            let mut eng = MacEngine::new();
            let source = eng.mac(&v)?;
            let target = spec.target(&v)?;
            let direct = eng.mac(&target)?;
            let via_jump = block_jump(&source, &spec)?;
            let via_dual = block_jump_dual_route(&source, &spec)?;
            let ok_jump = via_jump == *direct;
            let ok_dual = via_dual == *direct;
            let bound = block_divisor_bound(&spec);
            let (num, den) = ratio(&mut eng, &v, &target)?;
            let sound = nsmac::factored::denominator_divides(&num, &bound);
            if cli.json {
                let out = json!({
                    "source": v.to_string(),
                    "target": target.to_string(),
                    "jump_route_matches": ok_jump,
                    "dual_route_matches": ok_dual,
                    "bound": factored_json(&bound),
                    "ratio_num": num.to_string(),
                    "ratio_den": den.to_string(),
                    "ratio_divides_bound": sound,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("{v} -jump({pos};{k},{ell})-> {target}");
                println!("jump route matches direct computation: {ok_jump}");
                println!("dual route matches direct computation: {ok_dual}");
                println!("divisor bound: {bound}");
                println!("den ratio: ({num})/({den}), divides bound: {sound}");
            }
            if ok_jump && ok_dual && sound {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Cmd::StaircaseVerify { k, a, n, grid: do_grid, max_terms } => {
            let limits = CellLimits { max_terms: *max_terms };
            let cells: Vec<(usize, u32, usize)> = if *do_grid {
                grid(cli.max_grid, 3)
            } else {
                match (k, a, n) {
                    (Some(k), Some(a), Some(n)) => vec![(*k, *a, *n)],
                    _ => {
                        return Err(Error::Parse(
                            "staircase-verify needs either k a n or --grid".into(),
                        ))
                    }
                }
            };
            let mut all_ok = true;
            let mut reports = Vec::new();
            for (k, a, n) in cells {
                let mut eng = MacEngine::new();
                match verify_unreachable_pole(&mut eng, k, a, n, limits) {
                    Ok(report) => {
                        all_ok &= report.absent && report.consistent;
                        if cli.json {
                            reports.push(report.to_json());
                        } else {
                            println!(
                                "staircase({k},{a},{n}): den {} | target 1-q^{}t^{} absent: {} | consistent: {}",
                                report.den, a, k + 1, report.absent, report.consistent
                            );
                        }
                    }
                    Err(Error::ResourceLimit(msg)) => {
                        all_ok = false;
                        if cli.json {
                            reports.push(json!({"k": k, "a": a, "n": n, "error": msg}));
                        } else {
                            println!("staircase({k},{a},{n}): resource limit: {msg}");
                        }
                    }
                    Err(e) => return Err(e),
                }
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json!(reports)).unwrap());
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Specialize { v, point, omega, identity_file } => {
            let mut eng = MacEngine::new();
            if let Some(path) = identity_file {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
                let id = parse_identity(&text)?;
                let ok = id.check(&mut eng)?;
                if cli.json {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({"identity": id.name, "holds": ok}))
                            .unwrap()
                    );
                } else {
                    println!("identity {}: {}", id.name, if ok { "holds" } else { "FAILS" });
                }
                return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
            }
            let v: Composition = v
                .as_deref()
                .ok_or_else(|| Error::Parse("specialize needs a composition".into()))?
                .parse()?;
            let (a, b) = SpecPoint::parse(
                point.as_deref().ok_or_else(|| Error::Parse("specialize needs --point".into()))?,
            )?;
            let sp = SpecPoint::new(a, b, *omega)?;
            let s = specialize_mac(&mut eng, &v, sp)?;
            println!("{s}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Relations { trials, n } => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed);
            let mut failures = 0usize;
            for id in RELATION_IDS {
                for _ in 0..*trials {
                    let p = random_macpoly(&mut rng, *n, 3, 4);
                    if !check_relation(id, &p)? {
                        eprintln!("relation {id} FAILED");
                        failures += 1;
                        break;
                    }
                }
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &json!({"relations": RELATION_IDS, "trials": trials, "failures": failures})
                    )
                    .unwrap()
                );
            } else {
                println!(
                    "{} relations x {} trials at N={}: {} failures",
                    RELATION_IDS.len(),
                    trials,
                    n,
                    failures
                );
            }
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
