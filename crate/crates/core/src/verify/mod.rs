//! Named verification suites with machine-readable reports.

pub mod oracles;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub identity: String,
    pub n: usize,
    pub status: Status,
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub wall_time_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "{status} {} n={} ({} ms)",
            self.identity, self.n, self.wall_time_ms
        )?;
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample={c}")?;
        }
        Ok(())
    }
}

/// Result of one check: pass with an optional note, or a counterexample.
pub(crate) enum Outcome {
    Pass(Option<String>),
    Fail(Value),
}

pub(crate) fn run_check(
    identity: impl Into<String>,
    n: usize,
    f: impl FnOnce() -> Result<Outcome>,
) -> Result<Report> {
    let start = Instant::now();
    let outcome = f()?;
    let wall_time_ms = start.elapsed().as_millis();
    let (status, counterexample, detail) = match outcome {
        Outcome::Pass(d) => (Status::Pass, None, d),
        Outcome::Fail(c) => (Status::Fail, Some(c), None),
    };
    Ok(Report {
        identity: identity.into(),
        n,
        status,
        counterexample,
        detail,
        wall_time_ms,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hecke,
    Kl,
    MinLength,
    Straightening,
    LltImmanants,
    LltRoutes,
    SmoothCtilde,
    PsiLlt,
    Chains,
    Chromatic,
    Expansions,
    Trace,
    All,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Hecke,
        Suite::Kl,
        Suite::MinLength,
        Suite::Straightening,
        Suite::LltImmanants,
        Suite::LltRoutes,
        Suite::SmoothCtilde,
        Suite::PsiLlt,
        Suite::Chains,
        Suite::Chromatic,
        Suite::Expansions,
        Suite::Trace,
        Suite::All,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Suite::Hecke => "hecke",
            Suite::Kl => "kl",
            Suite::MinLength => "min-length",
            Suite::Straightening => "straightening",
            Suite::LltImmanants => "llt-immanants",
            Suite::LltRoutes => "llt-routes",
            Suite::SmoothCtilde => "smooth-ctilde",
            Suite::PsiLlt => "psi-llt",
            Suite::Chains => "chains",
            Suite::Chromatic => "chromatic",
            Suite::Expansions => "expansions",
            Suite::Trace => "trace",
            Suite::All => "all",
        }
    }

    /// Runs the suite at size n.
    pub fn run(self, n: usize) -> Result<Vec<Report>> {
        if n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        match self {
            Suite::Hecke => suites::hecke(n),
            Suite::Kl => suites::kl(n),
            Suite::MinLength => suites::lemma4(n),
            Suite::Straightening => suites::straightening(n),
            Suite::LltImmanants => suites::ordered_set_partition_sums(n),
            Suite::LltRoutes => suites::routes(n),
            Suite::SmoothCtilde => suites::smooth_ctilde(n),
            Suite::PsiLlt => suites::psi_llt_scalar(n),
            Suite::Chains => suites::chains(n),
            Suite::Chromatic => suites::chromatic(n),
            Suite::Expansions => suites::expansion_lists(n, 50),
            Suite::Trace => suites::trace_tables(n),
            Suite::All => {
                let mut out = Vec::new();
                for s in Suite::ALL.into_iter().filter(|&s| s != Suite::All) {
                    out.extend(s.run(n)?);
                }
                Ok(out)
            }
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Accepts the names from [`Suite::tag`] and a few short aliases.
impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = match s {
            "lemma4" => "min-length",
            "thm9_10" => "llt-immanants",
            "routes" => "llt-routes",
            "eq6" => "smooth-ctilde",
            "prop7" => "psi-llt",
            "cor11" => "chains",
            "prop2" => "expansions",
            other => other,
        };
        Suite::ALL
            .into_iter()
            .find(|x| x.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}
