//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 no solution or infeasible input, 2 usage or overflow.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    bound_arbitrary, bound_intervals, decompose, density_guarantee, extremal_profile, extremal_sum,
    tightness_instance,
};
use crate::collections::{
    enumerate_solutions_capped, exact_count, CyclicInterval, ResidueCollection, ResidueSet,
    DEFAULT_ENUMERATION_CAP,
};
use crate::congruence::{gcd, lcm, solve, Congruence, CongruenceSystem};
use crate::error::Error;
use crate::runner::{two_runner_witness, RunnerPair};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_SOLUTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dcrt",
    version,
    about = "Solution counts and density bounds for pairs of congruences"
)]
pub struct Cli {
    /// Emit one JSON record instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve x ≡ a_i (mod m_i) for congruences written a:m.
    Solve {
        #[arg(required = true, allow_hyphen_values = true, value_name = "A:M")]
        congruences: Vec<String>,
    },
    /// Count solutions of x ≡ a (mod m), x ≡ b (mod n) over a in A, b in B.
    ///
    /// Collections are "{r1,r2,...}" or "start+len" (cyclic interval).
    Count {
        #[arg(long)]
        m: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Also list the solutions by brute force.
        #[arg(long)]
        enumerate: bool,
        /// Largest modulus the enumeration will scan.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Lower bound on the count from the collection sizes alone.
    Bound {
        #[arg(long, value_enum)]
        mode: BoundMode,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        size_a: u64,
        #[arg(long)]
        size_b: u64,
    },
    /// Extremal step profiles and their reversed dot product.
    Extremal {
        #[arg(long)]
        size_a: u64,
        #[arg(long)]
        cap_a: u64,
        #[arg(long)]
        size_b: u64,
        #[arg(long)]
        cap_b: u64,
        #[arg(long)]
        length: u64,
    },
    /// Density-one-third intervals mod 3M and 6M with no common solution.
    Tightness {
        #[arg(long = "M", value_name = "M")]
        big_m: u64,
    },
    /// A time at which two runners are both at distance >= 1/3 from the start.
    Runner {
        #[arg(long, value_delimiter = ',', value_name = "M,N")]
        speeds: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundMode {
    Arbitrary,
    Interval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    #[default]
    Ok,
    NoSolution,
    Error,
}

/// One record per invocation. Absent fields are omitted from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gcd: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remainder_a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remainder_b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub guaranteed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile_a: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile_b: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval_a: Option<IntervalRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval_b: Option<IntervalRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_numerator: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_denominator: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_m_numerator: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_m_denominator: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_n_numerator: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_n_denominator: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRecord {
    pub modulus: u64,
    pub start: u64,
    pub length: u64,
}

impl From<CyclicInterval> for IntervalRecord {
    fn from(iv: CyclicInterval) -> Self {
        IntervalRecord {
            modulus: iv.modulus(),
            start: iv.start(),
            length: iv.len(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(Error::Infeasible { .. }) => EXIT_NO_SOLUTION,
            _ => EXIT_USAGE,
        }
    }

    fn status(&self) -> Status {
        match self.exit_code() {
            EXIT_NO_SOLUTION => Status::NoSolution,
            _ => Status::Error,
        }
    }
}

fn parse_error(token: &str, reason: impl Into<String>) -> CliError {
    CliError::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn parse_int(token: &str) -> Result<i64, CliError> {
    token
        .trim()
        .parse::<i64>()
        .map_err(|e| parse_error(token.trim(), e.to_string()))
}

/// Parses `"{r1,r2,...}"` as an explicit set or `"start+len"` as a cyclic
/// interval. Residues and starts are reduced modulo `modulus`.
pub fn parse_collection(text: &str, modulus: u64) -> Result<ResidueCollection, CliError> {
    if modulus == 0 {
        return Err(Error::ZeroModulus.into());
    }
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('{') {
        let inner = inner
            .strip_suffix('}')
            .ok_or_else(|| parse_error(text, "missing closing '}'"))?;
        let mut members = Vec::new();
        if !inner.trim().is_empty() {
            for token in inner.split(',') {
                let r = (parse_int(token)? as i128).rem_euclid(modulus as i128) as u64;
                if members.contains(&r) {
                    return Err(parse_error(
                        token.trim(),
                        format!("duplicate residue {r} (mod {modulus})"),
                    ));
                }
                members.push(r);
            }
        }
        return Ok(ResidueSet::new(modulus, members)?.into());
    }
    if let Some((start, len)) = text.split_once('+') {
        let start = (parse_int(start)? as i128).rem_euclid(modulus as i128) as u64;
        let length: u64 = len
            .trim()
            .parse()
            .map_err(|e: std::num::ParseIntError| parse_error(len.trim(), e.to_string()))?;
        if length > modulus {
            return Err(parse_error(
                len.trim(),
                format!("length exceeds modulus {modulus}"),
            ));
        }
        return Ok(CyclicInterval::new(modulus, start, length)?.into());
    }
    Err(parse_error(
        text,
        "expected \"{r1,r2,...}\" or \"start+len\"",
    ))
}

fn parse_congruence(token: &str) -> Result<Congruence, CliError> {
    let (a, m) = token
        .split_once(':')
        .ok_or_else(|| parse_error(token, "expected a:m"))?;
    let m: u64 = m
        .trim()
        .parse()
        .map_err(|e: std::num::ParseIntError| parse_error(m.trim(), e.to_string()))?;
    if m == 0 {
        return Err(parse_error(token, "modulus must be positive"));
    }
    Ok(Congruence::new(parse_int(a)?, m)?)
}

fn ratio_parts(r: num_rational::Ratio<u64>) -> (u64, u64) {
    (*r.numer(), *r.denom())
}

/// Executes one command, returning the report and its exit code.
pub fn execute(command: &Command) -> Result<(Report, i32, String), CliError> {
    let mut report = Report::default();
    let mut text: String;
    let mut code = EXIT_OK;
    match command {
        Command::Solve { congruences } => {
            report.command = Some("solve".into());
            let system = CongruenceSystem::new(
                congruences
                    .iter()
                    .map(|t| parse_congruence(t))
                    .collect::<Result<_, _>>()?,
            )?;
            match solve(&system)? {
                Some(sol) => {
                    report.residue = Some(sol.residue);
                    report.modulus = Some(sol.modulus);
                    text = sol.to_string();
                }
                None => {
                    report.modulus = Some(system.lcm()?);
                    code = EXIT_NO_SOLUTION;
                    text = "no solution".into();
                }
            }
        }
        Command::Count {
            m,
            a,
            n,
            b,
            enumerate,
            cap,
        } => {
            report.command = Some("count".into());
            let ca = parse_collection(a, *m)?;
            let cb = parse_collection(b, *n)?;
            let modulus = lcm(*m, *n)?;
            let count = exact_count(&ca, &cb)?;
            report.m = Some(*m);
            report.n = Some(*n);
            report.gcd = Some(gcd(*m, *n));
            report.modulus = Some(modulus);
            report.count = Some(count);
            text = format!("A = {ca}\nB = {cb}\ncount = {count} solutions (mod {modulus})");
            if *enumerate {
                let sols: Vec<u64> = enumerate_solutions_capped(&ca, &cb, *cap)?
                    .into_iter()
                    .map(|s| s.residue)
                    .collect();
                let listed: Vec<String> = sols.iter().map(u64::to_string).collect();
                text.push_str(&format!("\nsolutions: {}", listed.join(", ")));
                report.solutions = Some(sols);
            }
        }
        Command::Bound {
            mode,
            m,
            n,
            size_a,
            size_b,
        } => {
            report.command = Some("bound".into());
            let g = gcd(*m, *n);
            report.m = Some(*m);
            report.n = Some(*n);
            report.gcd = Some(g);
            match mode {
                BoundMode::Arbitrary => {
                    let r = bound_arbitrary(*m, *n, *size_a, *size_b)?;
                    let da = decompose(*size_a, m / g);
                    let db = decompose(*size_b, n / g);
                    report.bound = Some(r.lower_bound);
                    report.case = Some(r.case.to_string());
                    report.quotient_a = Some(da.quotient);
                    report.remainder_a = Some(da.remainder);
                    report.quotient_b = Some(db.quotient);
                    report.remainder_b = Some(db.remainder);
                    text = format!(
                        "g = {g}, |A| = {}·{} + {}, |B| = {}·{} + {}\nbound = {} (case {})",
                        da.quotient,
                        da.divisor,
                        da.remainder,
                        db.quotient,
                        db.divisor,
                        db.remainder,
                        r.lower_bound,
                        r.case
                    );
                }
                BoundMode::Interval => {
                    let bound = bound_intervals(*m, *n, *size_a, *size_b)?;
                    let da = decompose(*size_a, g);
                    let db = decompose(*size_b, g);
                    let guaranteed = density_guarantee(*m, *n, *size_a, *size_b);
                    report.bound = Some(bound);
                    report.quotient_a = Some(da.quotient);
                    report.remainder_a = Some(da.remainder);
                    report.quotient_b = Some(db.quotient);
                    report.remainder_b = Some(db.remainder);
                    report.guaranteed = Some(guaranteed);
                    text = format!(
                        "g = {g}, |A| = {}·{g} + {}, |B| = {}·{g} + {}\nbound = {bound}\ndensity guarantee: {}",
                        da.quotient,
                        da.remainder,
                        db.quotient,
                        db.remainder,
                        if guaranteed { "yes" } else { "no" }
                    );
                }
            }
        }
        Command::Extremal {
            size_a,
            cap_a,
            size_b,
            cap_b,
            length,
        } => {
            report.command = Some("extremal".into());
            let pa = extremal_profile(*size_a, *cap_a, *length)?;
            let pb = extremal_profile(*size_b, *cap_b, *length)?;
            let r = extremal_sum(*size_a, *cap_a, *size_b, *cap_b, *length)?;
            text = format!(
                "profile A = {:?}\nprofile B = {:?}\nextremal sum = {} (case {})",
                pa.values, pb.values, r.lower_bound, r.case
            );
            report.profile_a = Some(pa.values);
            report.profile_b = Some(pb.values);
            report.bound = Some(r.lower_bound);
            report.case = Some(r.case.to_string());
        }
        Command::Tightness { big_m } => {
            report.command = Some("tightness".into());
            let (a, b) = tightness_instance(*big_m)?;
            let count = exact_count(&a.into(), &b.into())?;
            report.m = Some(a.modulus());
            report.n = Some(b.modulus());
            report.gcd = Some(gcd(a.modulus(), b.modulus()));
            report.modulus = Some(lcm(a.modulus(), b.modulus())?);
            report.count = Some(count);
            report.interval_a = Some(a.into());
            report.interval_b = Some(b.into());
            text = format!(
                "m = {}, n = {}\nA = {a}\nB = {b}\ncount = {count}",
                a.modulus(),
                b.modulus()
            );
        }
        Command::Runner { speeds } => {
            report.command = Some("runner".into());
            let [m, n] = speeds[..] else {
                return Err(CliError::Usage(format!(
                    "--speeds takes exactly two values, got {}",
                    speeds.len()
                )));
            };
            let w = two_runner_witness(RunnerPair::new(m, n)?)?;
            let (dm_num, dm_den) = ratio_parts(w.distance_m);
            let (dn_num, dn_den) = ratio_parts(w.distance_n);
            report.m = Some(m);
            report.n = Some(n);
            report.modulus = Some(w.big_q);
            report.witness_numerator = Some(w.time.numerator());
            report.witness_denominator = Some(w.time.denominator());
            report.distance_m_numerator = Some(dm_num);
            report.distance_m_denominator = Some(dm_den);
            report.distance_n_numerator = Some(dn_num);
            report.distance_n_denominator = Some(dn_den);
            text = format!(
                "t = {}, distances {}, {}",
                w.time, w.distance_m, w.distance_n
            );
        }
    }
    report.status = if code == EXIT_OK {
        Status::Ok
    } else {
        Status::NoSolution
    };
    Ok((report, code, text))
}

/// Parses `argv` (program name first), runs the command, writes to the given
/// streams and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match execute(&cli.command) {
        Ok((report, code, text)) => {
            if cli.json {
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else {
                let _ = writeln!(out, "{text}");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if cli.json {
                let report = Report {
                    status: e.status(),
                    message: Some(e.to_string()),
                    ..Report::default()
                };
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            }
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_collection_examples() {
        let c = parse_collection("{0,2,4}", 6).unwrap();
        assert_eq!(c, ResidueSet::new(6, [0, 2, 4]).unwrap().into());

        let c = parse_collection("4+3", 5).unwrap();
        assert_eq!(c, CyclicInterval::new(5, 4, 3).unwrap().into());
        assert_eq!(c.to_set().members(), &[0, 1, 4]);

        let c = parse_collection("{7}", 5).unwrap();
        assert_eq!(c.to_set().members(), &[2]);

        assert!(parse_collection("{}", 5).unwrap().is_empty());
        assert_eq!(
            parse_collection(" { 1 , -1 } ", 5)
                .unwrap()
                .to_set()
                .members(),
            &[1, 4]
        );
    }

    #[test]
    fn parse_collection_errors_name_the_token() {
        let e = parse_collection("{1,6}", 5).unwrap_err().to_string();
        assert!(e.contains("\"6\"") && e.contains("duplicate"), "{e}");
        let e = parse_collection("{1,x}", 5).unwrap_err().to_string();
        assert!(e.contains("\"x\""), "{e}");
        let e = parse_collection("0+6", 5).unwrap_err().to_string();
        assert!(e.contains("\"6\"") && e.contains("exceeds"), "{e}");
        let e = parse_collection("{1,2", 5).unwrap_err().to_string();
        assert!(e.contains("closing"), "{e}");
        assert!(parse_collection("1..3", 5).is_err());
        assert!(parse_collection("0+-1", 5).is_err());
    }

    #[test]
    fn parse_congruence_forms() {
        assert_eq!(
            parse_congruence("2:3").unwrap(),
            Congruence::new(2, 3).unwrap()
        );
        assert_eq!(parse_congruence("-1:5").unwrap().residue(), 4);
        assert!(parse_congruence("2").is_err());
        assert!(parse_congruence("2:0").is_err());
    }
}
