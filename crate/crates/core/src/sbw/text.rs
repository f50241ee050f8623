//! The line-oriented `sbw 1` text format.
//!
//! ```text
//! sbw 1
//! n 2
//! phi 1.SE 2.SW
//! phi 1.NW 2.NE
//! phi 2.SE 1.SW
//! phi 2.NW 1.NE
//! ```

use std::fmt;
use std::str::FromStr;

use super::{Corner, CornerRef, SbwSpec, SpecError};

pub const FORMAT_VERSION: u32 = 1;

fn syntax(line: usize, message: impl Into<String>) -> SpecError {
    SpecError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_corner(token: &str, line: usize) -> Result<CornerRef, SpecError> {
    let (sq, corner) = token
        .split_once('.')
        .ok_or_else(|| syntax(line, format!("expected <square>.<corner>, got `{token}`")))?;
    let square: usize = sq
        .parse()
        .map_err(|_| syntax(line, format!("bad square index `{sq}`")))?;
    let corner = match corner {
        "SW" => Corner::SW,
        "SE" => Corner::SE,
        "NE" => Corner::NE,
        "NW" => Corner::NW,
        other => return Err(syntax(line, format!("unknown corner `{other}`"))),
    };
    Ok(CornerRef::new(square, corner))
}

impl FromStr for SbwSpec {
    type Err = SpecError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (ln, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
        match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["sbw", v] if *v == FORMAT_VERSION.to_string() => {}
            ["sbw", v] => return Err(syntax(ln, format!("unsupported version `{v}`"))),
            _ => return Err(syntax(ln, "expected header `sbw 1`")),
        }

        let (ln, count) = lines
            .next()
            .ok_or_else(|| syntax(ln + 1, "missing `n <count>` line"))?;
        let n: usize = match count.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", k] => k
                .parse()
                .map_err(|_| syntax(ln, format!("bad count `{k}`")))?,
            _ => return Err(syntax(ln, "expected `n <count>`")),
        };
        if n == 0 {
            return Err(SpecError::Empty);
        }

        let mut pairs = Vec::with_capacity(2 * n);
        for (ln, line) in lines {
            match line.split_whitespace().collect::<Vec<_>>().as_slice() {
                ["phi", from, to] => pairs.push((parse_corner(from, ln)?, parse_corner(to, ln)?)),
                _ => return Err(syntax(ln, "expected `phi <sq>.<SE|NW> <sq>.<SW|NE>`")),
            }
        }
        if pairs.len() != 2 * n {
            return Err(SpecError::LineCount {
                expected: 2 * n,
                found: pairs.len(),
            });
        }
        SbwSpec::new(n, pairs)
    }
}

impl fmt::Display for SbwSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sbw {FORMAT_VERSION}")?;
        writeln!(f, "n {}", self.n())?;
        for (v, w) in self.pairs() {
            writeln!(f, "phi {v} {w}")?;
        }
        Ok(())
    }
}
