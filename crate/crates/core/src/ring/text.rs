//! Line-oriented ring format:
//!
//! ```text
//! ring Z3
//! size 3
//! zero 0
//! one 1
//! add
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! mul
//! 0 0 0
//! 0 1 2
//! 0 2 1
//! ```

use std::fmt::Write as _;

use super::FiniteRing;
use crate::error::{Error, Result};

pub fn write_ring(r: &FiniteRing) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring {}", r.name());
    let _ = writeln!(out, "size {}", r.size());
    let _ = writeln!(out, "zero {}", r.zero());
    let _ = writeln!(out, "one {}", r.one());
    for (label, op) in [("add", FiniteRing::add as fn(&FiniteRing, usize, usize) -> usize), ("mul", FiniteRing::mul)] {
        let _ = writeln!(out, "{label}");
        for a in r.elements() {
            let row: Vec<String> = r.elements().map(|b| op(r, a, b).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

impl<'a> Lines<'a> {
    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let n = self.pos + 1;
        let line = self.lines.get(self.pos).ok_or_else(|| err(n, 1, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok((n, line.trim_end()))
    }

    /// A line `keyword <rest>`, returning the rest.
    fn keyword(&mut self, kw: &str) -> Result<(usize, &'a str)> {
        let (n, line) = self.next(&format!("`{kw}`"))?;
        match line.strip_prefix(kw) {
            Some(rest) if rest.is_empty() || rest.starts_with(' ') => Ok((n, rest.trim())),
            _ => Err(err(n, 1, format!("expected `{kw}`, found {line:?}"))),
        }
    }

    fn number(&mut self, kw: &str) -> Result<usize> {
        let (n, rest) = self.keyword(kw)?;
        rest.parse().map_err(|_| err(n, kw.len() + 2, format!("expected a non-negative integer after `{kw}`, found {rest:?}")))
    }

    fn table(&mut self, kw: &str, size: usize) -> Result<Vec<usize>> {
        let (n, rest) = self.keyword(kw)?;
        if !rest.is_empty() {
            return Err(err(n, kw.len() + 2, format!("unexpected text after `{kw}`")));
        }
        let mut out = Vec::with_capacity(size * size);
        for row in 0..size {
            let (n, line) = self.next(&format!("{kw} row {row}"))?;
            let toks = tokens(line);
            if toks.len() != size {
                return Err(err(n, 1, format!("{kw} row {row} has {} entries, expected {size}", toks.len())));
            }
            for (col, (c, tok)) in toks.into_iter().enumerate() {
                let v: usize = tok.parse().map_err(|_| err(n, c, format!("{kw} row {row}, column {col}: {tok:?} is not an integer")))?;
                if v >= size {
                    return Err(err(n, c, format!("{kw} row {row}, column {col}: entry {v} out of range 0..{size}")));
                }
                out.push(v);
            }
        }
        Ok(out)
    }
}

/// Parses the ring format and validates the axioms.
pub fn parse_ring(text: &str) -> Result<FiniteRing> {
    let mut lines = Lines { lines: text.lines().collect(), pos: 0 };
    let (_, name) = lines.keyword("ring")?;
    if name.is_empty() {
        return Err(err(1, 6, "missing ring name"));
    }
    let size = lines.number("size")?;
    if size == 0 {
        return Err(err(2, 6, "size must be positive"));
    }
    let zero = lines.number("zero")?;
    let one = lines.number("one")?;
    let add = lines.table("add", size)?;
    let mul = lines.table("mul", size)?;
    if let Some(extra) = lines.lines[lines.pos..].iter().position(|l| !l.trim().is_empty()) {
        return Err(err(lines.pos + extra + 1, 1, "trailing content after mul table"));
    }
    FiniteRing::new(name, size, zero, one, add, mul)
}
