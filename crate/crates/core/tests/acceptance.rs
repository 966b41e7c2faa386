//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_llt::verify::{Report, Suite};
use hecke_llt::Result;

type Run = (Suite, &'static [usize], Option<&'static [&'static str]>);

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Duration,
    runs: &'static [Run],
}

const UP_TO_4: &[usize] = &[1, 2, 3, 4];
const UP_TO_5: &[usize] = &[1, 2, 3, 4, 5];
const UP_TO_7: &[usize] = &[1, 2, 3, 4, 5, 6, 7];

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "Hecke associativity and q=1 group algebra, n<=4",
        budget: Duration::from_secs(10),
        runs: &[(Suite::Hecke, UP_TO_4, None)],
    },
    Criterion {
        id: 2,
        title: "R-polynomial oracle n<=4; KL degree bounds and smoothness n<=5",
        budget: Duration::from_secs(60),
        runs: &[
            (Suite::Kl, UP_TO_4, Some(&["r_polynomial_oracle", "bruhat_subword_oracle"])),
            (Suite::Kl, UP_TO_5, Some(&["kl_degree_bounds", "smooth_iff_trivial_kl"])),
        ],
    },
    Criterion {
        id: 3,
        title: "minimal-length class elements and their lower intervals are smooth and minimal, n<=7",
        budget: Duration::from_secs(120),
        runs: &[(Suite::MinLength, UP_TO_7, None)],
    },
    Criterion {
        id: 4,
        title: "straightening confluence n<=3; longest-word expansion n<=4",
        budget: Duration::from_secs(60),
        runs: &[
            (Suite::Straightening, &[1, 2, 3], Some(&["straightening_confluence"])),
            (Suite::Straightening, UP_TO_4, Some(&["longest_word_expansion"])),
        ],
    },
    Criterion {
        id: 5,
        title: "induced LLT immanants equal ordered-set-partition sums n<=4; plethystic route agrees n<=5",
        budget: Duration::from_secs(300),
        runs: &[(Suite::LltImmanants, UP_TO_4, None), (Suite::LltRoutes, UP_TO_5, None)],
    },
    Criterion {
        id: 6,
        title: "eps^n_LLT(C~_w) = 1 for every smooth w, n<=5",
        budget: Duration::from_secs(300),
        runs: &[(Suite::SmoothCtilde, UP_TO_5, None)],
    },
    Criterion {
        id: 7,
        title: "psi_LLT scalar formula equals plethystic transform, n<=5",
        budget: Duration::from_secs(300),
        runs: &[(Suite::PsiLlt, UP_TO_5, None)],
    },
    Criterion {
        id: 8,
        title: "eight principal-specialization chains as full tables, n<=4",
        budget: Duration::from_secs(600),
        runs: &[(Suite::Chains, UP_TO_4, None)],
    },
    Criterion {
        id: 9,
        title: "X = Y_q(C~_w), LLT = sum eps_LLT(C~_w) m, plethystic relation, N-independence, n<=5",
        budget: Duration::from_secs(600),
        runs: &[(Suite::Chromatic, UP_TO_5, None)],
    },
    Criterion {
        id: 10,
        title: "both expansion lists give identical traces on 50 random elements, n<=5",
        budget: Duration::from_secs(300),
        runs: &[(Suite::Expansions, UP_TO_5, None)],
    },
];

fn run(c: &Criterion) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (suite, sizes, only) in c.runs {
        for &n in *sizes {
            out.extend(
                suite
                    .run(n)?
                    .into_iter()
                    .filter(|r| only.is_none_or(|names| names.contains(&r.identity.as_str()))),
            );
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut all_pass = true;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = run(c);
        let elapsed = start.elapsed();
        let (pass, note) = match &outcome {
            Err(e) => (false, format!("error: {e}")),
            Ok(reports) => match reports.iter().find(|r| !r.passed()) {
                Some(r) => (false, format!("{r}")),
                None if reports.is_empty() => (false, "no checks ran".to_string()),
                None => (true, format!("{} checks", reports.len())),
            },
        };
        let over = elapsed > c.budget;
        let status = if pass && !over { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2}: {status} [{:.2?} / {:?}] {} ({note})",
            c.id, elapsed, c.budget, c.title
        );
        if let Ok(reports) = &outcome {
            for r in reports.iter().filter(|r| r.detail.is_some()) {
                println!("    {r}");
            }
        }
        all_pass &= pass && !over;
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
