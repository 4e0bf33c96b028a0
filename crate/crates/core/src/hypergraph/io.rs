//! Text format: a header line `n r m`, then `m` lines of `r` vertex ids.
//! Lines starting with `#` and blank lines are skipped.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use super::Hypergraph;
use crate::error::{Error, Result};

pub fn load(path: impl AsRef<Path>) -> Result<Hypergraph> {
    fs::read_to_string(path)?.parse()
}

/// Non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_numbers<T: FromStr>(line_no: usize, line: &str) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::parse(line_no, format!("expected an integer, got {tok:?}")))
        })
        .collect()
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header"))?;
        let header: Vec<usize> = parse_numbers(line_no, header)?;
        let [n, r, m] = header[..] else {
            return Err(Error::parse(line_no, "header must be `n r m`"));
        };
        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines {
            if edges.len() == m {
                return Err(Error::parse(line_no, format!("more than {m} edge lines")));
            }
            edges.push(parse_numbers(line_no, line)?);
        }
        if edges.len() != m {
            return Err(Error::parse(
                text.lines().count(),
                format!("expected {m} edges, found {}", edges.len()),
            ));
        }
        Hypergraph::new(n, r, edges)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.n, self.r, self.num_edges())?;
        for edge in self.edges() {
            let mut first = true;
            for v in edge {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Hypergraph {
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_string())?;
        Ok(())
    }
}
