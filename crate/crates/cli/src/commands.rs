//! The `eval`, `lift`, `table` and `check` commands, independent of argument
//! parsing so they can be driven from tests.

use gproj::checks::{run_check, CheckConfig, CheckError, CheckName, CheckReport, Execution};
use gproj::embedding::lift_map;
use gproj::multivector::blade_name;
use gproj::signature::blade_mul;
use gproj::{AlgebraError, ProjectionKind, Signature};
use thiserror::Error;

use crate::eval::{eval, EvalError};
use crate::parser::{parse, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("evaluation error: {0}")]
    Eval(#[from] EvalError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => EXIT_USAGE,
            CliError::Eval(_) => EXIT_DOMAIN,
        }
    }
}

impl From<CheckError> for CliError {
    fn from(e: CheckError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parses `"p,q,r"` under an optional dimension ceiling.
pub fn parse_algebra(text: &str, max_dim: Option<usize>) -> Result<Signature, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let counts = match parts.as_slice() {
        [p, q, r] => [p, q, r].map(|s| s.parse::<usize>()),
        _ => {
            return Err(CliError::Usage(format!(
                "algebra must be `p,q,r`, got `{text}`"
            )))
        }
    };
    let [Ok(p), Ok(q), Ok(r)] = counts else {
        return Err(CliError::Usage(format!(
            "algebra counts must be non-negative integers, got `{text}`"
        )));
    };
    let sig = match max_dim {
        Some(limit) => Signature::with_max_dim(p, q, r, limit),
        None => Signature::new(p, q, r),
    };
    sig.map_err(|e: AlgebraError| CliError::Usage(e.to_string()))
}

pub fn cmd_eval(sig: Signature, expr_text: &str) -> Result<String, CliError> {
    let ast = parse(expr_text, sig)?;
    Ok(eval(&ast, sig)?.to_string())
}

/// Evaluates the expression and maps the result through the lift of `sig`.
pub fn cmd_lift(sig: Signature, expr_text: &str) -> Result<String, CliError> {
    let ast = parse(expr_text, sig)?;
    let value = eval(&ast, sig)?;
    let lifted = lift_map(value.sig())
        .apply(&value)
        .map_err(EvalError::from)?;
    Ok(lifted.to_string())
}

/// Cayley table of the basis blades, columns padded to a common width.
pub fn cmd_table(sig: Signature) -> String {
    let blades: Vec<_> = sig.blades().collect();
    let mut cells: Vec<Vec<String>> = Vec::with_capacity(blades.len() + 1);
    let mut header = vec![String::new()];
    header.extend(blades.iter().map(|&b| blade_name(b)));
    cells.push(header);
    for &a in &blades {
        let mut row = vec![blade_name(a)];
        for &b in &blades {
            let (m, s) = blade_mul(a, b, &sig);
            row.push(match s {
                0 => "0".to_string(),
                1 => blade_name(m),
                _ => format!("-{}", blade_name(m)),
            });
        }
        cells.push(row);
    }
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn cmd_check(
    check: CheckName,
    sig: Signature,
    kind: Option<ProjectionKind>,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<CheckReport, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let config = CheckConfig {
        check,
        sig,
        kind,
        trials,
        seed,
    };
    Ok(run_check(&config, exec)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_argument() {
        assert_eq!(
            parse_algebra("3,0,0", None).unwrap(),
            Signature::new(3, 0, 0).unwrap()
        );
        assert_eq!(
            parse_algebra(" 1, 1 ,0", None).unwrap(),
            Signature::new(1, 1, 0).unwrap()
        );
        assert!(parse_algebra("3,0", None).is_err());
        assert!(parse_algebra("a,0,0", None).is_err());
        assert!(parse_algebra("4,0,0", Some(3)).is_err());
        assert!(parse_algebra("17,0,0", None).is_err());
    }

    #[test]
    fn table_cl11() {
        let table = cmd_table(Signature::new(1, 1, 0).unwrap());
        let rows: Vec<Vec<&str>> = table
            .lines()
            .map(|l| l.split_whitespace().collect())
            .collect();
        assert_eq!(rows[0], vec!["1", "e1", "e2", "e1^e2"]);
        assert_eq!(rows[1], vec!["1", "1", "e1", "e2", "e1^e2"]);
        assert_eq!(rows[2], vec!["e1", "e1", "1", "e1^e2", "e2"]);
        assert_eq!(rows[3], vec!["e2", "e2", "-e1^e2", "-1", "e1"]);
        assert_eq!(rows[4], vec!["e1^e2", "e1^e2", "-e2", "-e1", "1"]);
        let widths: Vec<usize> = table.lines().map(str::len).collect();
        assert!(widths.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn error_exit_codes() {
        let sig = Signature::new(3, 0, 0).unwrap();
        assert_eq!(cmd_eval(sig, "e7").unwrap_err().exit_code(), EXIT_USAGE);
        let sig1 = Signature::new(1, 0, 0).unwrap();
        assert_eq!(
            cmd_eval(sig1, "inv(1+e1)").unwrap_err().exit_code(),
            EXIT_DOMAIN
        );
        let err = cmd_check(
            CheckName::Lemma,
            sig,
            Some(ProjectionKind::Inverse),
            5,
            0,
            Execution::Sequential,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn lift_command() {
        let sig = Signature::new(1, 0, 1).unwrap();
        assert_eq!(cmd_lift(sig, "e1^e2").unwrap(), "e1^e2 + e1^e3");
        assert_eq!(
            cmd_lift(Signature::new(2, 0, 0).unwrap(), "e1 + 2").unwrap(),
            "2 + e1"
        );
    }
}
