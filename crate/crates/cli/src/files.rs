//! Hand-editable text formats: pmf files, CSV emitters, and the small
//! grammars used by CLI flags. All output is locale-independent (period
//! decimal separator, ASCII only) and every CSV ends with a newline.

use polar_scs::analysis::{Pmf, SweepPoint, BETA_GRID_PUBLISHED};
use polar_scs::Error;

use crate::harness::ErrorEstimate;
use crate::CliError;

/// Parses the pmf text format: one decimal mass per line in non-increasing
/// order, `#` starts a comment (whole-line or trailing), blank lines are
/// ignored. Violations report 1-based line numbers.
pub fn parse_pmf_text(text: &str) -> Result<Pmf, CliError> {
    let mut masses = Vec::new();
    let mut lines = Vec::new();
    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mass: f64 = content.parse().map_err(|_| CliError::File {
            line: Some(line),
            message: format!("\"{content}\" is not a real number"),
        })?;
        masses.push(mass);
        lines.push(line);
    }
    if masses.is_empty() {
        return Err(CliError::File {
            line: None,
            message: "the pmf file lists no masses".into(),
        });
    }
    Pmf::new(masses).map_err(|e| match e {
        Error::Pmf { reason, index } => CliError::File {
            line: lines.get(index).or_else(|| lines.last()).copied(),
            message: reason.into(),
        },
        other => CliError::File { line: None, message: other.to_string() },
    })
}

/// A float with 10 significant digits in scientific notation — fixed width,
/// locale-independent, round-trips through parsing well under any of the
/// tolerances used here.
pub fn fmt_sig10(v: f64) -> String {
    format!("{v:.9e}")
}

/// The sweep table as CSV: `beta,agents,error`, one row per point.
pub fn sweep_csv(points: &[SweepPoint]) -> String {
    let mut out = String::from("beta,agents,error\n");
    for p in points {
        out.push_str(&format!("{},{},{}\n", fmt_sig10(p.beta), p.agents, fmt_sig10(p.error)));
    }
    out
}

/// The paired-comparison table as CSV, one row per decoder.
pub fn compare_csv(rows: &[(String, ErrorEstimate)]) -> String {
    let mut out =
        String::from("decoder,errors,trials,p_hat,ci_low,ci_high,mean_restarts,exhausted_fraction\n");
    for (label, e) in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            label,
            e.errors,
            e.trials,
            fmt_sig10(e.p_hat),
            fmt_sig10(e.ci_low),
            fmt_sig10(e.ci_high),
            fmt_sig10(e.mean_restarts),
            fmt_sig10(e.exhausted_fraction),
        ));
    }
    out
}

/// Parses the `--betas` grammar: `paper` (the published table's 100-value
/// grid), `lin:start:stop:count` (uniform grid, endpoints included), or a
/// comma-separated list of non-negative reals.
pub fn parse_beta_grid(arg: &str) -> Result<Vec<f64>, CliError> {
    if arg == "paper" {
        return Ok(BETA_GRID_PUBLISHED.to_vec());
    }
    if let Some(rest) = arg.strip_prefix("lin:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::Config(format!(
                "\"lin:\" takes start:stop:count, got \"{arg}\""
            )));
        }
        let start: f64 = parse_real(parts[0], "start")?;
        let stop: f64 = parse_real(parts[1], "stop")?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| CliError::Config(format!("\"{}\" is not a count", parts[2])))?;
        if count == 0 {
            return Err(CliError::Config("the grid needs at least one point".into()));
        }
        if count == 1 {
            return Ok(vec![start]);
        }
        let step = (stop - start) / (count - 1) as f64;
        return Ok((0..count).map(|i| start + step * i as f64).collect());
    }
    arg.split(',').map(|s| parse_real(s.trim(), "beta")).collect()
}

/// Parses the `--agents` grammar: a comma-separated list of positive
/// integers.
pub fn parse_agent_list(arg: &str) -> Result<Vec<usize>, CliError> {
    arg.split(',')
        .map(|s| {
            let value: usize = s
                .trim()
                .parse()
                .map_err(|_| CliError::Config(format!("\"{s}\" is not an agent count")))?;
            if value == 0 {
                return Err(CliError::Config("agent counts must be at least 1".into()));
            }
            Ok(value)
        })
        .collect()
}

fn parse_real(s: &str, name: &str) -> Result<f64, CliError> {
    s.parse()
        .map_err(|_| CliError::Config(format!("\"{s}\" is not a real number for {name}")))
}
