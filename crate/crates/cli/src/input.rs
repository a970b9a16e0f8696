use std::fmt;
use std::io::Read;

use serde::de::DeserializeOwned;
use serde_json::Value;

use orbit_classes::exactpoly::{PolyJson, Polynomial, VarSpace};
use orbit_classes::localize::{GkmTuple, GkmTupleJson};
use orbit_classes::matroid::{matroid_of_matrix, Matroid, MatroidError, MatroidJson, RationalMatrix, Subset};
use orbit_classes::symfunc::Partition;
use orbit_classes::Poly;

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_RANK: u8 = 3;
pub const EXIT_DOMAIN: u8 = 4;
pub const EXIT_SIZE: u8 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    /// Printed to stdout before the message, for verification failures.
    pub report: Option<Value>,
}

impl CliError {
    fn new(code: u8, e: impl fmt::Display) -> Self {
        CliError {
            code,
            message: e.to_string(),
            report: None,
        }
    }

    pub fn parse(e: impl fmt::Display) -> Self {
        Self::new(EXIT_PARSE, e)
    }

    pub fn domain(e: impl fmt::Display) -> Self {
        Self::new(EXIT_DOMAIN, e)
    }

    pub fn size(e: impl fmt::Display) -> Self {
        Self::new(EXIT_SIZE, e)
    }

    pub fn verify(msg: String, report: Value) -> Self {
        CliError {
            code: EXIT_VERIFY,
            message: format!("verification failed: {msg}"),
            report: Some(report),
        }
    }
}

impl From<MatroidError> for CliError {
    fn from(e: MatroidError) -> Self {
        let code = match e {
            MatroidError::RankDeficient { .. } => EXIT_RANK,
            MatroidError::TooLarge(_) => EXIT_SIZE,
            MatroidError::InvalidSubset { .. } => EXIT_DOMAIN,
            MatroidError::Parse(_) | MatroidError::Shape(_) | MatroidError::NotMatroid(_) => EXIT_PARSE,
        };
        CliError::new(code, e)
    }
}

/// Reads a file, or standard input for `-`.
fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{path}: {e}")))
    }
}

pub fn read_json<T: DeserializeOwned>(path: &str) -> Result<T, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| CliError::parse(format!("{path}: {e}")))
}

/// Reads a document, unwrapping a command envelope and then `key` if present,
/// so one command's output can feed the next.
fn read_payload(path: &str, key: &str) -> Result<Value, CliError> {
    let mut v: Value = read_json(path)?;
    for k in ["result", key] {
        if let Some(inner) = v.get_mut(k) {
            v = inner.take();
        }
    }
    Ok(v)
}

fn from_value<T: DeserializeOwned>(v: Value, what: &str) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::parse(format!("malformed {what}: {e}")))
}

/// A matroid from either a matrix file or a matroid file.
pub fn read_matroid(path: &str) -> Result<Matroid, CliError> {
    let v = read_payload(path, "matroid")?;
    let is = |k: &str| v.get(k).is_some();
    if is("entries") {
        let m = RationalMatrix::from_json(&from_value(v, "matrix")?)?;
        Ok(matroid_of_matrix(&m)?)
    } else if is("bases") {
        Ok(Matroid::from_json(&from_value::<MatroidJson>(v, "matroid")?)?)
    } else {
        Err(CliError::parse(format!(
            "{path}: expected a matrix {{\"rows\",\"cols\",\"entries\"}} or a matroid {{\"n\",\"r\",\"bases\"}}"
        )))
    }
}

/// A complete tuple; `r` is the basis size and `n` the largest element.
pub fn read_tuple(path: &str) -> Result<GkmTuple, CliError> {
    let j: GkmTupleJson = from_value(read_payload(path, "tuple")?, "tuple")?;
    let r = j.0.first().map(|e| e.basis.len()).unwrap_or(0);
    let n = j.0.iter().flat_map(|e| e.basis.iter().copied()).max().unwrap_or(0);
    let space = VarSpace::new(r, n).map_err(CliError::parse)?;
    if r >= n {
        return Err(CliError::domain(format!("tuple has r={r}, n={n}; need r < n")));
    }
    GkmTuple::from_json(&j, space).map_err(CliError::parse)
}

pub fn read_poly(path: &str, size: Option<(usize, usize)>) -> Result<Poly, CliError> {
    let j: PolyJson = from_value(read_payload(path, "class")?, "polynomial")?;
    let space = match (size, j.infer_space()) {
        (Some((r, n)), _) => VarSpace::new(r, n).map_err(CliError::domain)?,
        (None, Some(s)) => s.map_err(CliError::parse)?,
        (None, None) => return Err(CliError::domain("zero polynomial: pass --r and --n")),
    };
    Polynomial::from_json(&j, space).map_err(CliError::parse)
}

fn parse_list(s: &str) -> Result<Vec<u64>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| CliError::domain(format!("bad list entry {x:?} in {s:?}"))))
        .collect()
}

/// `"1,2"` as an `r`-subset of `[n]`.
pub fn parse_basis(s: &str, r: usize, n: usize) -> Result<Subset, CliError> {
    let elems = parse_list(s)?;
    let mut sorted = elems.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if elems.len() != r || sorted.len() != r || sorted.iter().any(|&x| x == 0 || x as usize > n) {
        return Err(CliError::domain(format!("{s:?} is not a {r}-subset of 1..={n}")));
    }
    Ok(Subset::from_elems(sorted.into_iter().map(|x| x as usize)))
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let parts = parse_list(s)?
        .into_iter()
        .map(|x| u32::try_from(x).map_err(|_| CliError::domain(format!("part {x} too large"))))
        .collect::<Result<Vec<u32>, _>>()?;
    Partition::new(parts).map_err(CliError::domain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_parsing() {
        assert_eq!(parse_basis("1,2", 2, 4).unwrap(), Subset::from_elems([1, 2]));
        assert_eq!(parse_basis(" 3, 1 ", 2, 4).unwrap(), Subset::from_elems([1, 3]));
        for bad in ["1,2,3", "1,1", "0,1", "1,5", "a,b", ""] {
            assert_eq!(parse_basis(bad, 2, 4).unwrap_err().code, EXIT_DOMAIN, "{bad}");
        }
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(parse_partition("2,1").unwrap().parts(), &[2, 1]);
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert_eq!(parse_partition("1,2").unwrap_err().code, EXIT_DOMAIN);
    }

    #[test]
    fn matroid_error_codes() {
        let e: CliError = MatroidError::RankDeficient { rank: 1, rows: 2 }.into();
        assert_eq!(e.code, EXIT_RANK);
        assert_eq!(CliError::from(MatroidError::TooLarge(20)).code, EXIT_SIZE);
        assert_eq!(CliError::from(MatroidError::Parse("x".into())).code, EXIT_PARSE);
    }
}
