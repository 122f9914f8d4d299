//! Text and JSON formats for ideals, generator matrices and m-counts.
//!
//! Ideal file: first line `n=<int>`, then one generator per non-blank line
//! as `n` whitespace-separated exponents. Matrix file: first line
//! `n=<int> jmin=<int>`, then one row of `n` counts per line. In both, lines
//! starting with `#` are comments.

use serde_json::{json, Value};

use crate::betti::Corner;
use crate::error::{Error, Result};
use crate::ideal::{GeneratorMatrix, MCounts, MVector, MonomialIdeal};
use crate::monomial::Monomial;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header_value(word: &str, key: &str, line: usize) -> Result<u64> {
    let rest = word
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| {
            Error::Parse(format!("line {line}: expected `{key}=<int>`, got {word:?}"))
        })?;
    rest.parse()
        .map_err(|_| Error::Parse(format!("line {line}: `{key}` needs a nonnegative integer")))
}

fn parse_row(line: &str, n: usize, lineno: usize) -> Result<Vec<u64>> {
    let vals: Vec<u64> = line
        .split_whitespace()
        .map(|w| {
            w.parse::<u64>().map_err(|_| {
                Error::Parse(format!("line {lineno}: {w:?} is not a nonnegative integer"))
            })
        })
        .collect::<Result<_>>()?;
    if vals.len() != n {
        return Err(Error::Parse(format!(
            "line {lineno}: expected {n} entries, found {}",
            vals.len()
        )));
    }
    Ok(vals)
}

/// Parses an ideal file. A file with a header and no generators is the zero
/// ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty ideal file".into()))?;
    let n = header_value(header, "n", lineno)? as usize;
    if n == 0 {
        return Err(Error::Parse("n must be positive".into()));
    }
    let mut gens = Vec::new();
    for (lineno, line) in lines {
        let row = parse_row(line, n, lineno)?;
        let exps = row
            .into_iter()
            .map(|e| {
                u32::try_from(e)
                    .map_err(|_| Error::Parse(format!("line {lineno}: exponent too large")))
            })
            .collect::<Result<Vec<u32>>>()?;
        gens.push(Monomial::new(exps)?);
    }
    if gens.is_empty() {
        return Ok(MonomialIdeal::zero(n));
    }
    MonomialIdeal::new(n, gens)
}

/// Writes an ideal file with the minimal generators in decreasing order.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("n={}\n", ideal.n());
    for g in ideal.gens() {
        let row: Vec<String> = g.exps().iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<GeneratorMatrix> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    if words.len() != 2 {
        return Err(Error::Parse(format!(
            "line {lineno}: expected `n=<int> jmin=<int>`"
        )));
    }
    let n = header_value(words[0], "n", lineno)? as usize;
    let jmin = header_value(words[1], "jmin", lineno)?;
    if n == 0 || jmin == 0 {
        return Err(Error::Parse(format!(
            "line {lineno}: n and jmin must be positive"
        )));
    }
    let jmin = u32::try_from(jmin).map_err(|_| Error::Parse("jmin too large".into()))?;
    let rows = lines
        .map(|(k, l)| parse_row(l, n, k).map(MVector))
        .collect::<Result<Vec<_>>>()?;
    GeneratorMatrix::new(n, jmin, rows).map_err(|e| Error::Parse(e.to_string()))
}

pub fn write_matrix(m: &GeneratorMatrix) -> String {
    let mut out = format!("n={} jmin={}\n", m.n(), m.jmin());
    for r in m.rows() {
        let row: Vec<String> = r.iter().map(u64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn ideal_json(ideal: &MonomialIdeal) -> Value {
    json!({
        "n": ideal.n(),
        "generators": ideal.gens().iter().map(|g| g.exps().to_vec()).collect::<Vec<_>>(),
    })
}

pub fn matrix_json(m: &GeneratorMatrix) -> Value {
    json!({
        "n": m.n(),
        "jmin": m.jmin(),
        "rows": m.rows().iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
    })
}

/// `[[k, d, m_{k,d}], ...]` sorted by `(k, d)`.
pub fn counts_json(c: &MCounts) -> Value {
    Value::Array(c.iter().map(|(&(k, d), &v)| json!([k, d, v])).collect())
}

/// `[[i, j, b], ...]` for extremal corners.
pub fn corners_json(c: &[Corner]) -> Value {
    Value::Array(c.iter().map(|c| json!([c.i, c.d, c.value])).collect())
}

/// `(i,j,b)` triples joined by spaces.
pub fn corners_text(c: &[Corner]) -> String {
    if c.is_empty() {
        return "(none)".into();
    }
    c.iter()
        .map(|c| format!("({},{},{})", c.i, c.d, c.value))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_roundtrip() {
        let text = "# a comment\nn=3\n2 0 0\n\n1 1 0\n# more\n0 2 0\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.gens().len(), 3);
        assert_eq!(write_ideal(&i), "n=3\n2 0 0\n1 1 0\n0 2 0\n");
        assert_eq!(parse_ideal(&write_ideal(&i)).unwrap(), i);
        assert!(parse_ideal("n=2\n").unwrap().is_zero());
    }

    #[test]
    fn ideal_errors() {
        assert!(matches!(parse_ideal(""), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("m=3\n1 0 0"), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("n=3\n1 0"), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("n=2\n1 -1"), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("n=2\n0 0"), Err(Error::UnitIdeal)));
    }

    #[test]
    fn matrix_roundtrip() {
        let text = "n=4 jmin=5\n1 3 2 2\n1 4 6 9\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.jmin(), 5);
        assert_eq!(write_matrix(&m), text);
        assert!(parse_matrix("n=4\n1 3 2 2").is_err());
        assert!(parse_matrix("n=4 jmin=0\n1 3 2 2").is_err());
        assert!(parse_matrix("n=2 jmin=1\n1 2 3").is_err());
    }

    #[test]
    fn json_shapes() {
        let i = parse_ideal("n=2\n1 0\n0 2\n").unwrap();
        assert_eq!(
            ideal_json(&i).to_string(),
            r#"{"generators":[[0,2],[1,0]],"n":2}"#
        );
        let c: MCounts = [((1, 2), 1), ((2, 2), -1)].into_iter().collect();
        assert_eq!(counts_json(&c).to_string(), "[[1,2,1],[2,2,-1]]");
    }
}
