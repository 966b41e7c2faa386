use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use hecke_llt::chromatic::{chromatic_qsym, graph_from_permutation, llt_poly};
use hecke_llt::hecke::{c_tilde, kl_polynomial, r_polynomial, HeckeElement};
use hecke_llt::qmatrix::{self, QMonomial};
use hecke_llt::traces::{family_table, Family};
use hecke_llt::verify::Suite;
use hecke_llt::{Basis, Error, Partition, Permutation, Result};

#[derive(Parser)]
#[command(
    name = "hecke-llt",
    version,
    about = "Exact Hecke algebra traces, KL polynomials and LLT identities"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kazhdan-Lusztig polynomial P_{u,w} (or R_{u,w} with --r).
    Klpoly {
        #[arg(long)]
        u: Permutation,
        #[arg(long)]
        w: Permutation,
        #[arg(long)]
        r: bool,
    },
    /// Evaluate a trace at T_w or C̃_w.
    Trace {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        family: Family,
        #[arg(long)]
        lambda: Partition,
        /// `T:<w>` or `ctilde:<w>`.
        #[arg(long)]
        at: String,
    },
    /// Straighten a word such as `2,2;1,1` in the quantum matrix bialgebra.
    Qnormalize {
        #[arg(long)]
        word: QMonomial,
    },
    /// Immanant of a trace in the quantum matrix bialgebra.
    Immanant {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        family: Family,
        #[arg(long)]
        lambda: Partition,
    },
    /// Unicellular LLT polynomial of a 312-avoiding permutation.
    Llt {
        #[arg(long)]
        w: Permutation,
        #[arg(long, default_value = "m")]
        basis: Basis,
        /// Number of variables (default n).
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Chromatic quasisymmetric function of a 312-avoiding permutation.
    Chromatic {
        #[arg(long)]
        w: Permutation,
        #[arg(long, default_value = "m")]
        basis: Basis,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        n: usize,
        /// Run every size from 1 to n.
        #[arg(long)]
        upto: bool,
    },
}

fn check_n(n: Option<usize>, actual: usize) -> Result<()> {
    match n {
        Some(n) if n != actual => Err(Error::SizeMismatch {
            expected: n,
            got: actual,
        }),
        _ => Ok(()),
    }
}

fn parse_point(at: &str) -> Result<(HeckeElement, String)> {
    let (kind, w) = at.split_once(':').unwrap_or(("T", at));
    let w: Permutation = w.parse()?;
    match kind {
        "T" | "t" => Ok((HeckeElement::t(&w), format!("T_{w}"))),
        "ctilde" | "C" => Ok((c_tilde(&w)?, format!("ctilde_{w}"))),
        _ => Err(Error::Parse(format!(
            "--at expects T:<w> or ctilde:<w>, got {at:?}"
        ))),
    }
}

fn print(json: bool, value: serde_json::Value, text: impl std::fmt::Display) {
    if json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<bool> {
    let json = cli.json;
    match cli.command {
        Command::Klpoly { u, w, r } => {
            let (name, p) = if r {
                ("R", r_polynomial(&u, &w)?)
            } else {
                ("P", kl_polynomial(&u, &w)?)
            };
            print(
                json,
                json!({ "u": u.to_string(), "w": w.to_string(), name: p.to_string() }),
                &p,
            );
        }
        Command::Trace {
            n,
            family,
            lambda,
            at,
        } => {
            check_n(n, lambda.size())?;
            let (d, label) = parse_point(&at)?;
            check_n(Some(lambda.size()), d.n())?;
            let value = family_table(family, &lambda)?.eval(&d)?;
            print(
                json,
                json!({ "family": family.tag(), "lambda": lambda.to_string(), "at": label, "value": value.to_string() }),
                &value,
            );
        }
        Command::Qnormalize { word } => {
            let e = qmatrix::normalize(&word);
            let terms: serde_json::Map<String, serde_json::Value> = e
                .terms()
                .map(|(m, c)| (m.to_string(), json!(c.to_string())))
                .collect();
            print(
                json,
                json!({ "word": word.to_string(), "terms": terms }),
                &e,
            );
        }
        Command::Immanant { n, family, lambda } => {
            check_n(n, lambda.size())?;
            let t = family_table(family, &lambda)?;
            let e = qmatrix::immanant(t.values(), t.n())?;
            let terms: serde_json::Map<String, serde_json::Value> = e
                .terms()
                .map(|(m, c)| (m.to_string(), json!(c.to_string())))
                .collect();
            print(
                json,
                json!({ "family": family.tag(), "lambda": lambda.to_string(), "terms": terms }),
                &e,
            );
        }
        Command::Llt { w, basis, vars } => {
            let g = graph_from_permutation(&w)?;
            let f = llt_poly(&g, vars.unwrap_or(w.size()))?.change_basis(basis)?;
            print(json, f.to_json(), &f);
        }
        Command::Chromatic { w, basis, vars } => {
            let g = graph_from_permutation(&w)?;
            let f = chromatic_qsym(&g, vars.unwrap_or(w.size()))?.change_basis(basis)?;
            print(json, f.to_json(), &f);
        }
        Command::Verify { suite, n, upto } => {
            let sizes: Vec<usize> = if upto { (1..=n).collect() } else { vec![n] };
            let mut all_pass = true;
            for k in sizes {
                for report in suite.run(k)? {
                    all_pass &= report.passed();
                    let value = serde_json::to_value(&report).expect("report serializes");
                    print(json, value, &report);
                }
            }
            return Ok(all_pass);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
