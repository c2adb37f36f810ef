//! Command line front end: normalize a seven-tuple, analyze a parameter
//! pair, run the verification suite, compute Igusa invariants, and sweep
//! parameter grids to CSV.
//!
//! Every numeric field on the wire is an exact rational rendered as
//! `p/q` (or `p` for integers). JSON objects print with sorted keys, so
//! output is canonical: parsing and re-serializing is byte-identical.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use cubic5::igusa::{absolute_invariants, igusa_clebsch, IgusaInvariants};
use cubic5::prymcurves as pc;
use cubic5::threefold as tf;
use cubic5::verifysuite::{self, Mode};
use cubic5::{QUni, Rat};

#[derive(Parser)]
#[command(name = "cubic5", version, about = "exact toolkit for a dihedral family of cubic threefolds and its curve tower")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize a seven-coefficient member into the standard form.
    Normalize {
        /// Seven rationals a1,...,a7 (each `p/q` or integer).
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Full curve tower, invariants and decomposition at one parameter pair.
    Analyze {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Skip the Igusa invariants of the genus-2 curve.
        #[arg(long)]
        skip_igusa: bool,
    },
    /// Run the claim-verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyMode::Symbolic)]
        mode: VerifyMode,
        /// Specialization count in sampled mode.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Restrict to these check ids (repeatable).
        #[arg(long)]
        only: Vec<String>,
        /// Emit the JSON report instead of the table.
        #[arg(long)]
        json: bool,
        /// List registered checks and exit.
        #[arg(long)]
        list: bool,
    },
    /// Igusa-Clebsch invariants of a quintic or sextic.
    Igusa {
        /// Coefficients c0,...,cn low to high (degree five or six).
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Sweep a parameter grid to CSV.
    Sweep {
        /// Range `lo:hi` for a (rational endpoints).
        #[arg(long, value_name = "LO:HI", allow_hyphen_values = true)]
        a_range: String,
        /// Range `lo:hi` for b.
        #[arg(long, value_name = "LO:HI", allow_hyphen_values = true)]
        b_range: String,
        /// Grid step (rational, positive).
        #[arg(long, allow_hyphen_values = true)]
        step: String,
        /// Output CSV path.
        #[arg(long)]
        out: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Symbolic,
    Sampled,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s.trim()).map_err(|e| format!("cannot parse rational {s:?}: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Normalize { coeffs } => {
            let vals: Vec<Rat> = coeffs.iter().map(|s| parse_rat(s)).collect::<Result<_, _>>()?;
            let t = tf::SevenTuple(vals.try_into().map_err(|_| "need exactly seven coefficients".to_string())?);
            println!("{}", normalize_json(&t));
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { a, b, skip_igusa } => {
            let p = tf::StandardParams::new(parse_rat(&a)?, parse_rat(&b)?);
            println!("{}", analyze_json(&p, skip_igusa));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { mode, samples, seed, only, json, list } => {
            if list {
                let width = verifysuite::check_ids().iter().map(|i| i.len()).max().unwrap_or(8);
                for c in verifysuite::registry() {
                    println!("{:width$}  {}", c.id, c.description);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let mode = match mode {
                VerifyMode::Symbolic => Mode::Symbolic,
                VerifyMode::Sampled => Mode::Sampled { n: samples, seed },
            };
            let selection = (!only.is_empty()).then_some(only.as_slice());
            let results = verifysuite::run_suite(mode, selection);
            if results.is_empty() {
                return Err("no checks selected".into());
            }
            let all_pass = results.iter().all(|r| r.passed());
            if json {
                println!("{}", serde_json::to_string(&results).unwrap());
            } else {
                let width = results.iter().map(|r| r.check_id.len()).max().unwrap_or(8);
                for r in &results {
                    println!(
                        "{:width$}  {:4}  {:>6} ms  {}",
                        r.check_id,
                        r.status,
                        r.millis,
                        r.witness.clone().or(r.detail.clone()).unwrap_or_default()
                    );
                }
                println!(
                    "{} checks, {} passed, {} failed",
                    results.len(),
                    results.iter().filter(|r| r.passed()).count(),
                    results.iter().filter(|r| !r.passed()).count()
                );
            }
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Igusa { coeffs } => {
            if !(6..=7).contains(&coeffs.len()) {
                return Err("need six or seven coefficients, low to high".into());
            }
            let vals: Vec<Rat> = coeffs.iter().map(|s| parse_rat(s)).collect::<Result<_, _>>()?;
            let f = QUni::from_coeffs("x", vals);
            let inv = igusa_clebsch(&f).map_err(|e| e.to_string())?;
            println!("{}", inv.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { a_range, b_range, step, out } => {
            let (alo, ahi) = parse_range(&a_range)?;
            let (blo, bhi) = parse_range(&b_range)?;
            let step = parse_rat(&step)?;
            if step <= Rat::zero() {
                return Err("step must be positive".into());
            }
            let csv = sweep_csv(&alo, &ahi, &blo, &bhi, &step);
            let mut file = std::fs::File::create(&out)
                .map_err(|e| format!("cannot write {out}: {e}"))?;
            file.write_all(csv.as_bytes()).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_range(s: &str) -> Result<(Rat, Rat), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("range {s:?} is not LO:HI"))?;
    let lo = parse_rat(lo)?;
    let hi = parse_rat(hi)?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

fn normalize_json(t: &tf::SevenTuple) -> Value {
    match tf::normalize(t) {
        tf::NormalizationResult::Standard { params, trace } => json!({
            "variant": "standard",
            "a": params.a.to_string(),
            "b": params.b.to_string(),
            "trace": {
                "swapped": trace.swapped,
                "working_tuple": trace.working_tuple,
                "primes": trace.primes,
                "double_primes": trace.double_primes,
                "mu15": trace.mu15,
                "alt_pair": trace.alt_pair,
            },
        }),
        tf::NormalizationResult::SpecialX0 => json!({
            "variant": "special_x0",
            "model": tf::special_x0_model().to_string(),
        }),
        tf::NormalizationResult::Singular(w) => match w {
            tf::SingularWitness::Point { name, coords } => json!({
                "variant": "singular",
                "witness": name,
                "point": coords.to_vec(),
            }),
            tf::SingularWitness::DeltaVanishes => json!({
                "variant": "singular",
                "witness": "Delta",
            }),
        },
    }
}

fn rat_str(r: &Rat) -> String {
    r.to_string()
}

fn analyze_json(p: &tf::StandardParams, skip_igusa: bool) -> Value {
    let d = tf::big_d2(p);
    let delta = tf::delta2(p);
    let d1 = pc::discriminant_d1(p);
    let apb1 = &p.a + &p.b - Rat::one();
    let bm8 = &p.b - cubic5::rat(8);
    let mut notes: Vec<String> = vec![];
    if p.a == cubic5::rat(-2) && p.b == cubic5::rat(-2) {
        notes.push(format!(
            "D1 = {d1} = 2^4 5^4; the quintic is the twisted Fermat quintic x^5 + z^5 - 2y^5"
        ));
    }
    if apb1.is_zero() {
        notes.push("a+b-1 = 0: the conic over (1:1:1) degenerates to a double line (D1 = 0)".into());
    }
    let smoothness = json!({
        "D": rat_str(&d),
        "D1": rat_str(&d1),
        "Delta": rat_str(&delta),
        "a_plus_b_minus_1": rat_str(&apb1),
        "b_minus_8": rat_str(&bm8),
    });
    if d.is_zero() {
        let witness = if p.a.is_zero() { "a = 0" } else { "Delta(a,b) = 0" };
        return json!({
            "schema": "cubic5/analyze/1",
            "params": {"a": rat_str(&p.a), "b": rat_str(&p.b)},
            "smoothness": smoothness,
            "singular": witness,
            "notes": notes,
            "decomposition": pc::decompose(p),
        });
    }
    let mut curves: Vec<Value> = vec![];
    curves.push(pc::quintic_h(p).expect("consistent quintic").to_json());
    curves.push(pc::genus2_hbar(p).expect("degree five").to_json());
    curves.push(pc::genus3_cover(p).expect("degree eight").to_json());
    curves.push(pc::genus1_quotient(p).expect("degree four").to_json());
    curves.push(pc::plane_quintic_dab(p).to_json());
    curves.push(pc::genus2_dab(p).expect("chain verified").to_json());

    let e = pc::elliptic_eprime(p);
    let eprime = json!({
        "a1": rat_str(&e.a1), "a2": rat_str(&e.a2), "a3": rat_str(&e.a3),
        "a4": rat_str(&e.a4), "a6": rat_str(&e.a6),
        "disc": rat_str(&e.disc()),
        "j": e.j().ok().map(|j| j.to_string()),
    });

    let galois = bm8.is_zero();
    let bigonal = if galois {
        Value::Null
    } else {
        let c = pc::bigonal_c(p).expect("not the Galois case");
        let inv = if skip_igusa { None } else { igusa_clebsch(&c.f).ok() };
        json!({
            "model": format!("y^2 = {}", c.f),
            "f6": pc::f6_in(&p.a, &p.b).to_string(),
            "disc": rat_str(&c.disc),
            "igusa": inv.as_ref().map(IgusaInvariants::to_json),
        })
    };
    let b8 = if galois {
        let plus = pc::b8_elliptic(&p.a, pc::SignChoice::Plus).ok();
        let minus = pc::b8_elliptic(&p.a, pc::SignChoice::Minus).ok();
        let common = pc::b8_common_model(&p.a).ok();
        json!({
            "c_plus": plus.map(|m| m.to_json()),
            "c_minus": minus.map(|m| m.to_json()),
            "common": common.map(|m| json!({
                "label": m.label,
                "model": format!("y^2 = {}", m.cubic),
                "disc": rat_str(&m.disc),
                "j": m.j().ok().map(|j| j.to_string()),
                "note": "isomorphic to both sign choices over Q(s5, i)",
            })),
        })
    } else {
        Value::Null
    };

    json!({
        "schema": "cubic5/analyze/1",
        "params": {"a": rat_str(&p.a), "b": rat_str(&p.b)},
        "smoothness": smoothness,
        "notes": notes,
        "curves": curves,
        "eprime": eprime,
        "bigonal": bigonal,
        "b8": b8,
        "decomposition": pc::decompose(p),
    })
}

fn grid(lo: &Rat, hi: &Rat, step: &Rat) -> Vec<Rat> {
    let mut out = vec![];
    let mut x = lo.clone();
    while &x <= hi {
        out.push(x.clone());
        x = &x + step;
    }
    out
}

fn sweep_csv(alo: &Rat, ahi: &Rat, blo: &Rat, bhi: &Rat, step: &Rat) -> String {
    let avals = grid(alo, ahi, step);
    let bvals = grid(blo, bhi, step);
    let cells: Vec<(Rat, Rat)> = avals
        .iter()
        .flat_map(|a| bvals.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let rows: Vec<String> = cells
        .par_iter()
        .map(|(a, b)| sweep_row(a, b))
        .collect();
    let mut csv = String::from("a,b,D,D1,jE,I2,I4,I6,I10,abs1,abs2,abs3,flags\n");
    for row in rows {
        csv.push_str(&row);
        csv.push('\n');
    }
    csv
}

fn sweep_row(a: &Rat, b: &Rat) -> String {
    let p = tf::StandardParams::new(a.clone(), b.clone());
    let d = tf::big_d2(&p);
    let d1 = pc::discriminant_d1(&p);
    let mut flags: Vec<String> = vec![];
    if d.is_zero() {
        flags.push("singular".into());
        return format!("{a},{b},{d},{d1},,,,,,,,,{}", flags.join(";"));
    }
    let je = pc::elliptic_eprime(&p).j().map(|j| j.to_string()).unwrap_or_default();
    if (a + b - Rat::one()).is_zero() {
        flags.push("D1=0".into());
    }
    if (b - cubic5::rat(8)).is_zero() {
        flags.push("galois_b8".into());
        let jc = pc::b8_common_model(a)
            .and_then(|m| m.j())
            .map(|j| j.to_string())
            .unwrap_or_default();
        flags.push(format!("jC={jc}"));
        return format!("{a},{b},{d},{d1},{je},,,,,,,,{}", flags.join(";"));
    }
    let c = pc::bigonal_c(&p).expect("not the Galois case");
    let (i2, i4, i6, i10, a1, a2, a3) = match igusa_clebsch(&c.f) {
        Ok(inv) => {
            let abs = absolute_invariants(&inv).ok();
            let (x, y, z) = abs
                .map(|[x, y, z]| (x.to_string(), y.to_string(), z.to_string()))
                .unwrap_or_default();
            (
                inv.i2.to_string(),
                inv.i4.to_string(),
                inv.i6.to_string(),
                inv.i10.to_string(),
                x,
                y,
                z,
            )
        }
        Err(_) => Default::default(),
    };
    format!("{a},{b},{d},{d1},{je},{i2},{i4},{i6},{i10},{a1},{a2},{a3},{}", flags.join(";"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rat("3/4").unwrap(), cubic5::ratq(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), cubic5::rat(-7));
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn normalize_json_variants() {
        let std_form = normalize_json(&tf::SevenTuple::from_ints([1, 0, 1, 1, 1, 1, 1]));
        assert_eq!(std_form["variant"], "standard");
        assert_eq!(std_form["a"], "32");
        assert_eq!(std_form["b"], "0");
        let x0 = normalize_json(&tf::SevenTuple::from_ints([1, 0, 0, 1, 1, 1, 1]));
        assert_eq!(x0["variant"], "special_x0");
        let sing = normalize_json(&tf::SevenTuple::from_ints([0, 1, 1, 1, 1, 1, 1]));
        assert_eq!(sing["variant"], "singular");
        assert_eq!(sing["witness"], "P1");
    }

    #[test]
    fn analyze_round_trips_byte_identical() {
        let p = tf::StandardParams::from_ints(1, 1);
        let v = analyze_json(&p, false);
        let text = serde_json::to_string(&v).unwrap();
        let reparsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&reparsed).unwrap(), text);
    }

    #[test]
    fn sweep_grid_shapes() {
        // 3x3 grid around (1,1): no singular members
        let csv = sweep_csv(&cubic5::rat(0), &cubic5::rat(2), &cubic5::rat(0), &cubic5::rat(2), &cubic5::rat(1));
        let lines: Vec<&str> = csv.trim_end().lines().collect();
        assert_eq!(lines[0], "a,b,D,D1,jE,I2,I4,I6,I10,abs1,abs2,abs3,flags");
        assert_eq!(lines.len(), 10);
        // a = 0 column is singular
        assert!(lines[1].contains("singular"));
        // the (1,0) row carries the double-line flag
        assert!(lines
            .iter()
            .any(|l| l.starts_with("1,0,") && l.contains("D1=0")));
    }

    #[test]
    fn sweep_galois_rows_flag_and_carry_jc() {
        let csv = sweep_csv(&cubic5::rat(1), &cubic5::rat(1), &cubic5::rat(7), &cubic5::rat(9), &cubic5::rat(1));
        let row = csv.lines().find(|l| l.starts_with("1,8,")).unwrap();
        assert!(row.contains("galois_b8"));
        assert!(row.contains("jC="));
    }
}
