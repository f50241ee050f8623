//! Group presentations and their abelianisation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Generators are numbered from 1; a relator letter `k` stands for
/// generator `|k|`, inverted when `k < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<i64>>,
}

impl GroupPresentation {
    pub fn is_valid(&self) -> bool {
        self.relators
            .iter()
            .flatten()
            .all(|&k| k != 0 && k.unsigned_abs() as usize <= self.generators)
    }

    /// Rows are relators, columns generators; entries are exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<BigInt>> {
        self.relators
            .iter()
            .map(|word| {
                let mut row = vec![BigInt::zero(); self.generators];
                for &k in word {
                    let col = k.unsigned_abs() as usize - 1;
                    row[col] += if k > 0 { 1 } else { -1 };
                }
                row
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    #[serde(serialize_with = "as_decimal")]
    pub torsion: Vec<BigInt>,
}

fn as_decimal<S: serde::Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(|v| v.to_string()))
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".into()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn first_homology(p: &GroupPresentation) -> AbelianGroup {
    let diagonal = smith_diagonal(p.exponent_matrix());
    AbelianGroup {
        rank: p.generators - diagonal.len(),
        torsion: diagonal.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Nonzero invariant factors of an integer matrix, in divisibility order.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero magnitude in the trailing block
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !m[r][c].is_zero())
            .min_by(|&(r1, c1), &(r2, c2)| m[r1][c1].abs().cmp(&m[r2][c2].abs()))
        else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }

        let mut done = true;
        for r in t + 1..rows {
            if m[r][t].is_zero() {
                continue;
            }
            let q = m[r][t].div_floor(&m[t][t]);
            let (head, tail) = m.split_at_mut(r);
            for (x, p) in tail[0][t..].iter_mut().zip(&head[t][t..]) {
                *x -= &q * p;
            }
            if !m[r][t].is_zero() {
                done = false;
            }
        }
        for c in t + 1..cols {
            if m[t][c].is_zero() {
                continue;
            }
            let q = m[t][c].div_floor(&m[t][t]);
            for row in &mut m[t..] {
                let sub = &q * &row[t];
                row[c] -= sub;
            }
            if !m[t][c].is_zero() {
                done = false;
            }
        }
        if done {
            diag.push(m[t][t].abs());
            t += 1;
        }
    }

    // normalise to a divisibility chain
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}
