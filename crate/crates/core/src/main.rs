use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qgalois::expr::{parse, Evaluator};
use qgalois::output::{
    complex_json, format_complex, format_dx_forms, format_matrix, format_matrix_approx, format_xpoly, matrix_json,
    plane_json, scalar_json, to_json_string, xpoly_json,
};
use qgalois::qplane::{represent, PlaneElement};
use qgalois::{calculus::PlaneCalculus, scalar::CyclotomicField, verify};

#[derive(Parser)]
#[command(name = "qgalois", version, about = "Exact q-differential calculus on the reduced quantum plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Order N of the primitive root of unity q (N ≥ 2)
    #[arg(long = "order", short = 'n')]
    order: usize,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print an expression in normal form Σ β y^k x^l
    Normalize {
        #[command(flatten)]
        common: Common,
        /// Also print complex values of the coefficients
        #[arg(long)]
        approx: bool,
        expr: String,
    },
    /// Check every identity at the given order
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Samples per randomized identity
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Largest accepted order
        #[arg(long, default_value_t = 8)]
        max_order: usize,
    },
    /// Tabulate P_k, Q_k, Φ_k and the Δ_q^(k) coefficients
    Tables {
        #[command(flatten)]
        common: Common,
    },
    /// Print the N×N matrix representing an expression
    Matrix {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        approx: bool,
        expr: String,
    },
    /// Differentiate an expression and print it in the (dx)^k basis
    Diff {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

fn evaluate(order: usize, text: &str) -> Result<(Evaluator, PlaneElement), Failure> {
    let ev = Evaluator::new(order).map_err(|e| Failure::Usage(e.to_string()))?;
    let e = parse(text).map_err(|e| Failure::Usage(e.to_string()))?;
    let a = ev.eval(&e).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((ev, a))
}

fn check_order(order: usize) -> Result<(), Failure> {
    if order < 2 {
        return Err(Failure::Usage(format!("--order must be at least 2, got {order}")));
    }
    Ok(())
}

fn emit(json: bool, value: Value, text: String) {
    if json {
        print!("{}", to_json_string(&value));
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Normalize { common, approx, expr } => {
            check_order(common.order)?;
            let (_, a) = evaluate(common.order, &expr)?;
            let mut value = plane_json(&a);
            let mut text = a.to_string();
            if approx {
                let terms: Vec<_> = a.terms().map(|(k, l, c)| (k, l, c.embed_complex())).collect();
                value["approx"] = Value::Array(
                    terms
                        .iter()
                        .map(|&(k, l, z)| json!({ "k": k, "l": l, "value": complex_json(z) }))
                        .collect(),
                );
                for (k, l, z) in terms {
                    text.push_str(&format!("\n  y^{k}x^{l}: {}", format_complex(z)));
                }
            }
            emit(common.json, value, text);
        }
        Command::Verify {
            common,
            seed,
            cases,
            max_order,
        } => {
            check_order(common.order)?;
            if common.order > max_order {
                return Err(Failure::Usage(format!(
                    "--order {} exceeds --max-order {max_order}",
                    common.order
                )));
            }
            let report = verify::run(common.order, seed, cases).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = report.to_text();
            emit(common.json, report.to_json(), text.trim_end().to_string());
            if !report.all_pass() {
                return Err(Failure::Verification);
            }
        }
        Command::Tables { common } => {
            check_order(common.order)?;
            let field = CyclotomicField::new(common.order).map_err(|e| Failure::Usage(e.to_string()))?;
            let calc = PlaneCalculus::new(field).map_err(|e| Failure::Usage(e.to_string()))?;
            let fam = calc.families();
            let n = common.order;
            let mut lines = Vec::new();
            let named = |name: &str, rows: &[qgalois::qplane::XPoly], lines: &mut Vec<String>| {
                for (i, r) in rows.iter().enumerate() {
                    lines.push(format!("{name}_{} = {}", i + 1, format_xpoly(r)));
                }
            };
            named("P", fam.ps(), &mut lines);
            named("Q", fam.qs(), &mut lines);
            named("Phi", fam.phis(), &mut lines);
            let coefficients: Vec<_> = (0..n as i64).map(|k| calc.delta_coefficient(k)).collect();
            for (k, c) in coefficients.iter().enumerate() {
                lines.push(format!("Delta^({k}) coefficient = {c}"));
            }
            let value = json!({
                "order": n,
                "P": fam.ps().iter().map(xpoly_json).collect::<Vec<_>>(),
                "Q": fam.qs().iter().map(xpoly_json).collect::<Vec<_>>(),
                "Phi": fam.phis().iter().map(xpoly_json).collect::<Vec<_>>(),
                "delta_coefficients": coefficients.iter().map(scalar_json).collect::<Vec<_>>(),
            });
            emit(common.json, value, lines.join("\n"));
        }
        Command::Matrix { common, approx, expr } => {
            check_order(common.order)?;
            let (_, a) = evaluate(common.order, &expr)?;
            let m = represent(&a);
            let mut value = matrix_json(&m);
            let mut text = format_matrix(&m);
            if approx {
                value["approx"] = Value::Array(
                    m.rows()
                        .map(|row| Value::Array(row.iter().map(|c| complex_json(c.embed_complex())).collect()))
                        .collect(),
                );
                text.push_str("\n\n");
                text.push_str(&format_matrix_approx(&m));
            }
            emit(common.json, value, text);
        }
        Command::Diff { common, expr } => {
            check_order(common.order)?;
            let (ev, a) = evaluate(common.order, &expr)?;
            let da = ev.plane().differential(&a);
            let parts = ev.calculus().dx_expansion(&da);
            let value = json!({
                "differential": plane_json(&da),
                "dx_basis": parts
                    .iter()
                    .map(|(k, r)| json!({ "degree": k, "coeff": xpoly_json(r) }))
                    .collect::<Vec<_>>(),
                "order": common.order,
            });
            emit(common.json, value, format_dx_forms(&parts));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
