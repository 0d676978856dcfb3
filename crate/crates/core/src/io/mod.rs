//! Line-oriented `key = value` text formats for descriptors and eigenforms.
//!
//! Blank lines and lines starting with `#` are ignored. Every key must be
//! known and appear once; errors carry the 1-based line they refer to.

mod descriptor_file;
mod eigenform_file;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use descriptor_file::{parse_descriptor, serialize_descriptor};
pub use eigenform_file::{parse_eigenform, serialize_eigenform};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    /// 1-based; one past the last line for keys that are missing.
    pub line: usize,
    pub reason: String,
}

impl ParseError {
    pub fn new(line: usize, reason: impl Into<String>) -> Self {
        Self {
            line,
            reason: reason.into(),
        }
    }
}

/// A `key = value` record and its line.
#[derive(Clone, Debug)]
struct Record<'a> {
    line: usize,
    key: &'a str,
    value: &'a str,
}

/// Splits `key = value` lines, rejecting unknown and repeated keys. Lines for
/// which `stop` holds end the header; their index is returned.
fn header<'a>(
    lines: &[&'a str],
    known: &[&str],
    stop: impl Fn(&str) -> bool,
) -> Result<(Vec<Record<'a>>, usize), ParseError> {
    let mut out: Vec<Record<'a>> = Vec::new();
    for (idx, raw) in lines.iter().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        if stop(text) {
            return Ok((out, idx));
        }
        let (key, value) = text.split_once('=').ok_or_else(|| {
            ParseError::new(line, format!("expected `key = value`, found {text:?}"))
        })?;
        let (key, value) = (key.trim(), value.trim());
        if !known.contains(&key) {
            return Err(ParseError::new(line, format!("unknown key {key:?}")));
        }
        if let Some(prev) = out.iter().find(|r| r.key == key) {
            return Err(ParseError::new(
                line,
                format!("key {key:?} already set on line {}", prev.line),
            ));
        }
        out.push(Record { line, key, value });
    }
    Ok((out, lines.len()))
}

struct Fields<'a> {
    records: Vec<Record<'a>>,
    end: usize,
}

impl<'a> Fields<'a> {
    fn get(&self, key: &str) -> Result<&Record<'a>, ParseError> {
        self.records
            .iter()
            .find(|r| r.key == key)
            .ok_or_else(|| ParseError::new(self.end, format!("missing key {key:?}")))
    }

    fn opt(&self, key: &str) -> Option<&Record<'a>> {
        self.records.iter().find(|r| r.key == key)
    }

    fn parse<T: FromStr>(&self, key: &str) -> Result<(T, usize), ParseError>
    where
        T::Err: fmt::Display,
    {
        let r = self.get(key)?;
        let v = parse_one(r.value, r.line, key)?;
        Ok((v, r.line))
    }
}

fn parse_one<T: FromStr>(s: &str, line: usize, what: &str) -> Result<T, ParseError>
where
    T::Err: fmt::Display,
{
    s.trim()
        .parse()
        .map_err(|e| ParseError::new(line, format!("bad {what} {s:?}: {e}")))
}

/// Comma-separated list; the empty string is the empty list.
fn parse_list<T: FromStr>(s: &str, line: usize, what: &str) -> Result<Vec<T>, ParseError>
where
    T::Err: fmt::Display,
{
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| parse_one(x, line, what)).collect()
}

fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn parse_rationals(s: &str, line: usize) -> Result<Vec<BigRational>, ParseError> {
    parse_list::<BigRational>(s, line, "rational")
}

fn parse_ints(s: &str, line: usize) -> Result<Vec<BigInt>, ParseError> {
    parse_list::<BigInt>(s, line, "integer")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_rules() {
        let lines = ["# c", "a = 1", "", "b=x,y", "7 1"];
        let (recs, stop) = header(&lines, &["a", "b"], |t| t.starts_with('7')).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!((recs[1].key, recs[1].value), ("b", "x,y"));
        assert_eq!(stop, 4);
        assert_eq!(header(&["c = 1"], &["a"], |_| false).unwrap_err().line, 1);
        assert_eq!(
            header(&["a = 1", "a = 2"], &["a"], |_| false)
                .unwrap_err()
                .line,
            2
        );
        assert_eq!(header(&["a"], &["a"], |_| false).unwrap_err().line, 1);
        assert!(parse_ints("", 1).unwrap().is_empty());
        assert!(parse_ints("1,,2", 3).is_err());
    }
}
