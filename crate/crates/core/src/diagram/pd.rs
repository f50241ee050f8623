//! Planar diagram codes: one `X a b c d` record per crossing, labels listed
//! counterclockwise from the incoming under-strand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::DiagramError;
use crate::union_find::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
}

impl PdCode {
    /// Validates label multiplicities and connectivity.
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        let mut seen: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (k, x) in crossings.iter().enumerate() {
            for &label in x {
                if label == 0 {
                    return Err(DiagramError::BadLabel("0".into()));
                }
                seen.entry(label).or_default().push(k);
            }
        }
        for (&label, at) in &seen {
            match at.len() {
                2 => {}
                1 => return Err(DiagramError::UnpairedLabel(label)),
                count => return Err(DiagramError::RepeatedLabel { label, count }),
            }
        }
        let mut uf = UnionFind::new(crossings.len());
        for at in seen.values() {
            uf.union(at[0], at[1]);
        }
        let components = uf.classes().1;
        if components > 1 {
            return Err(DiagramError::Disconnected { components });
        }
        Ok(PdCode { crossings })
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Mirror image: every crossing read clockwise instead.
    pub fn mirror(&self) -> PdCode {
        PdCode {
            crossings: self
                .crossings
                .iter()
                .map(|&[a, b, c, d]| [a, d, c, b])
                .collect(),
        }
    }
}

pub fn parse_pd(text: &str) -> Result<PdCode, DiagramError> {
    let mut crossings = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for record in line.split('/') {
            let cleaned: String = record
                .chars()
                .map(|ch| {
                    if matches!(ch, '[' | ']' | ',' | '(' | ')') {
                        ' '
                    } else {
                        ch
                    }
                })
                .collect();
            let mut tokens = cleaned.split_whitespace();
            let Some(head) = tokens.next() else { continue };
            if head != "X" {
                return Err(DiagramError::Syntax {
                    line: i + 1,
                    message: format!("expected `X`, got `{head}`"),
                });
            }
            let labels = tokens
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| DiagramError::BadLabel(t.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let arity = labels.len();
            let labels: [u32; 4] = labels.try_into().map_err(|_| DiagramError::Arity {
                crossing: crossings.len() + 1,
                found: arity,
            })?;
            crossings.push(labels);
        }
    }
    PdCode::new(crossings)
}

impl FromStr for PdCode {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for [a, b, c, d] in &self.crossings {
            writeln!(f, "X {a} {b} {c} {d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_standard_forms() {
        let trefoil = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        assert_eq!(trefoil.len(), 3);
        let same = parse_pd("# trefoil\nX[1,4,2,5]\nX[3,6,4,1]\n\nX[5,2,6,3]\n").unwrap();
        assert_eq!(trefoil, same);
        assert_eq!(parse_pd("X 1 1 2 2").unwrap().crossings, vec![[1, 1, 2, 2]]);
        assert_eq!(parse_pd(&trefoil.to_string()).unwrap(), trefoil);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_pd(""), Err(DiagramError::Empty));
        assert_eq!(
            parse_pd("X 1 2 3"),
            Err(DiagramError::Arity {
                crossing: 1,
                found: 3
            })
        );
        assert_eq!(parse_pd("X 1 1 2 3"), Err(DiagramError::UnpairedLabel(2)));
        assert_eq!(
            parse_pd("X 1 1 1 2 / X 2 3 3 4"),
            Err(DiagramError::RepeatedLabel { label: 1, count: 3 })
        );
        assert_eq!(
            parse_pd("X 1 1 2 2 / X 3 3 4 4"),
            Err(DiagramError::Disconnected { components: 2 })
        );
        assert!(matches!(
            parse_pd("X 1 a 2 2"),
            Err(DiagramError::BadLabel(_))
        ));
        assert!(matches!(
            parse_pd("Y 1 1 2 2"),
            Err(DiagramError::Syntax { .. })
        ));
        assert!(matches!(
            parse_pd("X 0 0 2 2"),
            Err(DiagramError::BadLabel(_))
        ));
    }
}
