//! Line-based lattice text format.
//!
//! ```text
//! lattice <n>
//! names <label> <label> ...   (optional, whitespace-free labels)
//! cover <i> <j>               (i is covered by j)
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Serialization is canonical
//! (header, names, covers sorted ascending), so parse and format round-trip
//! bit-exactly.

use std::fmt;

use super::{FiniteLattice, LatticeError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TextError {
    Syntax { line: usize, msg: String },
    Lattice(LatticeError),
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextError::Syntax { line, msg } => write!(f, "line {line}: {msg}"),
            TextError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TextError {}

impl From<LatticeError> for TextError {
    fn from(e: LatticeError) -> Self {
        TextError::Lattice(e)
    }
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice, TextError> {
    let mut size: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut covers: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut words = line.split_whitespace();
        let Some(keyword) = words.next() else {
            continue;
        };
        let syntax = |msg: &str| TextError::Syntax {
            line: lineno,
            msg: msg.to_string(),
        };
        match keyword {
            "lattice" => {
                if size.is_some() {
                    return Err(syntax("duplicate lattice header"));
                }
                let n = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax("expected `lattice <n>`"))?;
                if words.next().is_some() {
                    return Err(syntax("trailing tokens after size"));
                }
                size = Some(n);
            }
            "names" => {
                let n = size.ok_or_else(|| syntax("names before lattice header"))?;
                if names.is_some() {
                    return Err(syntax("duplicate names line"));
                }
                let labels: Vec<String> = words.map(str::to_string).collect();
                if labels.len() != n {
                    return Err(syntax(&format!(
                        "expected {n} names, got {}",
                        labels.len()
                    )));
                }
                names = Some(labels);
            }
            "cover" => {
                if size.is_none() {
                    return Err(syntax("cover before lattice header"));
                }
                let lo = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax("expected `cover <i> <j>`"))?;
                let hi = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax("expected `cover <i> <j>`"))?;
                if words.next().is_some() {
                    return Err(syntax("trailing tokens after cover pair"));
                }
                covers.push((lo, hi));
            }
            other => {
                return Err(syntax(&format!("unknown keyword {other:?}")));
            }
        }
    }
    let n = size.ok_or(TextError::Syntax {
        line: text.lines().count() + 1,
        msg: "missing `lattice <n>` header".to_string(),
    })?;
    Ok(FiniteLattice::from_covers(n, &covers, names)?)
}

/// Canonical serialization: header, optional names, covers sorted ascending.
pub fn format_lattice(l: &FiniteLattice) -> String {
    let mut out = format!("lattice {}\n", l.size());
    if let Some(ns) = l.names() {
        for name in ns {
            assert!(
                !name.is_empty() && !name.chars().any(char::is_whitespace),
                "element names must be nonempty and whitespace-free"
            );
        }
        out.push_str("names ");
        out.push_str(&ns.join(" "));
        out.push('\n');
    }
    for (lo, hi) in l.covers() {
        out.push_str(&format!("cover {lo} {hi}\n"));
    }
    out
}
