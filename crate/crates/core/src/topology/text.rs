//! Poset format: `poset <name>`, `points <n>`, then one `le <i> <j>` line per
//! strict relation. Relations are closed transitively on load.

use std::fmt::Write as _;

use super::SpectralSpace;
use crate::error::{Error, Result};

pub fn write_poset(s: &SpectralSpace) -> String {
    let mut out = format!("poset {}\npoints {}\n", s.name(), s.len());
    for (i, j) in s.strict_relations() {
        let _ = writeln!(out, "le {i} {j}");
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

pub fn parse_poset(text: &str) -> Result<SpectralSpace> {
    let lines: Vec<&str> = text.lines().collect();
    let header = |idx: usize, kw: &str| -> Result<&str> {
        let line = lines.get(idx).ok_or_else(|| err(idx + 1, 1, format!("missing `{kw}` line")))?.trim_end();
        match line.strip_prefix(kw) {
            Some(rest) if rest.starts_with(' ') => Ok(rest.trim()),
            _ => Err(err(idx + 1, 1, format!("expected `{kw} ...`, found {line:?}"))),
        }
    };
    let name = header(0, "poset")?;
    if name.is_empty() {
        return Err(err(1, 7, "missing poset name"));
    }
    let count = header(1, "points")?;
    let n: usize = count.parse().map_err(|_| err(2, 8, format!("{count:?} is not a point count")))?;
    let mut relations = Vec::new();
    for (idx, line) in lines.iter().enumerate().skip(2) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 || toks[0] != "le" {
            return Err(err(idx + 1, 1, format!("expected `le <i> <j>`, found {line:?}")));
        }
        let parse = |t: &str, col: usize| -> Result<usize> {
            let v: usize = t.parse().map_err(|_| err(idx + 1, col, format!("{t:?} is not a point index")))?;
            if v >= n {
                return Err(err(idx + 1, col, format!("point {v} out of range 0..{n}")));
            }
            Ok(v)
        };
        relations.push((parse(toks[1], 2)?, parse(toks[2], 3)?));
    }
    SpectralSpace::from_relations(name, n, &relations)
}
