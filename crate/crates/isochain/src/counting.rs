//! Exact counts: histograms by height and by fixed points, closed forms,
//! and the triangular tables gathering them for chains `0..=max_n`.
//!
//! Histograms are computed from the reference enumerator; the closed forms
//! are independent arithmetic. Tests and the verification suites hold the
//! two routes equal.

use serde::Serialize;

use crate::element::ChainSize;
use crate::error::Error;
use crate::family::{enumerate_oracle, FamilyId};

/// Binomial coefficient by the Pascal recursion, exact in `u64`.
/// `k > n` yields 0.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let mut row: Vec<u64> = vec![1];
    for _ in 0..n {
        let mut next = vec![1u64];
        for j in 1..row.len() {
            next.push(row[j - 1] + row[j]);
        }
        next.push(1);
        row = next;
    }
    row[k as usize]
}

/// Element counts per height `0..=n`.
pub fn count_by_height(family: FamilyId, n: ChainSize, ceiling: u32) -> Result<Vec<u64>, Error> {
    let mut hist = vec![0u64; n.get() as usize + 1];
    for el in enumerate_oracle(family, n, ceiling)? {
        hist[el.height() as usize] += 1;
    }
    Ok(hist)
}

/// Element counts per number of fixed points `0..=n`.
pub fn count_by_fix(family: FamilyId, n: ChainSize, ceiling: u32) -> Result<Vec<u64>, Error> {
    let mut hist = vec![0u64; n.get() as usize + 1];
    for el in enumerate_oracle(family, n, ceiling)? {
        hist[el.stats().fix as usize] += 1;
    }
    Ok(hist)
}

/// Total number of elements, by enumeration.
pub fn order(family: FamilyId, n: ChainSize, ceiling: u32) -> Result<u64, Error> {
    Ok(enumerate_oracle(family, n, ceiling)?.len() as u64)
}

/// Closed count of order-preserving order-decreasing isometries of height
/// `p`: `binomial(n + 1, p + 1)` for `p >= 1`, and 1 for `p = 0`.
pub fn closed_height_oddp(n: u32, p: u32) -> Result<u64, Error> {
    if p > n {
        return Err(Error::IndexOutOfRange {
            what: "height",
            value: p,
            max: n,
        });
    }
    if p == 0 {
        return Ok(1);
    }
    Ok(binomial(n + 1, p + 1))
}

/// Closed order of the order-preserving order-decreasing isometries:
/// `2^(n+1) - (n+1)`.
pub fn closed_order_oddp(n: u32) -> u64 {
    assert!(n <= 62, "count exceeds u64 range");
    (1u64 << (n + 1)) - u64::from(n) - 1
}

/// Order of the order-decreasing isometries by the recurrence
/// `a_n = 3 a_(n-1) - 2 a_(n-2) - 2^floor(n/2) + (n + 1)`
/// with seeds `a_0 = 1`, `a_1 = 2`.
pub fn closed_order_ddp(n: u32) -> u64 {
    let mut a: Vec<i128> = vec![1, 2];
    for k in 2..=n as usize {
        let value = 3 * a[k - 1] - 2 * a[k - 2] - (1i128 << (k / 2)) + (k as i128 + 1);
        a.push(value);
    }
    u64::try_from(a[n as usize]).expect("count exceeds u64 range")
}

/// Closed count of elements with exactly `m` fixed points, for the two
/// order-decreasing isometry families.
pub fn closed_fix(family: FamilyId, n: u32, m: u32) -> Result<u64, Error> {
    if m > n {
        return Err(Error::IndexOutOfRange {
            what: "fixed-point count",
            value: m,
            max: n,
        });
    }
    match family {
        FamilyId::OrderPreservingDecreasingIsometry => Ok(match m {
            0 if n == 0 => 1,
            0 => closed_order_oddp(n - 1),
            _ => binomial(n, m),
        }),
        FamilyId::DecreasingIsometry => Ok(match m {
            0 if n == 0 => 1,
            0 => closed_order_ddp(n - 1),
            // A single interior fixed point allows reflective elements, so
            // the count depends on the parity of n.
            1 => {
                if n.is_multiple_of(2) {
                    (1u64 << (n / 2 + 1)) - 2
                } else {
                    3 * (1u64 << (n / 2)) - 2
                }
            }
            _ => binomial(n, m),
        }),
        other => Err(Error::UnsupportedFamily { family: other }),
    }
}

/// Which statistic a triangle tabulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StatKind {
    Height,
    Fix,
}

impl StatKind {
    fn corner_label(self) -> &'static str {
        match self {
            StatKind::Height => "n\\p",
            StatKind::Fix => "n\\m",
        }
    }
}

/// Histogram rows for chains `0..=max_n` plus their sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTriangle {
    pub family: FamilyId,
    pub stat: StatKind,
    /// Row `n` has `n + 1` entries.
    pub rows: Vec<Vec<u64>>,
    pub row_sums: Vec<u64>,
}

/// Tabulates the requested histogram for every chain size up to `max_n`.
pub fn triangle(
    family: FamilyId,
    stat: StatKind,
    max_n: u32,
    ceiling: u32,
) -> Result<CountTriangle, Error> {
    let mut rows = Vec::new();
    let mut row_sums = Vec::new();
    for n in 0..=max_n {
        let row = match stat {
            StatKind::Height => count_by_height(family, ChainSize::new(n), ceiling)?,
            StatKind::Fix => count_by_fix(family, ChainSize::new(n), ceiling)?,
        };
        row_sums.push(row.iter().sum());
        rows.push(row);
    }
    Ok(CountTriangle {
        family,
        stat,
        rows,
        row_sums,
    })
}

impl CountTriangle {
    fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Comma-separated table: header `n\p` (or `n\m`), one column per
    /// statistic value, trailing `sum` column, LF line endings, cells above
    /// the diagonal left empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(self.stat.corner_label());
        for j in 0..=self.max_n() {
            out.push(',');
            out.push_str(&j.to_string());
        }
        out.push_str(",sum\n");
        for (n, row) in self.rows.iter().enumerate() {
            out.push_str(&n.to_string());
            for j in 0..=self.max_n() {
                out.push(',');
                if let Some(v) = row.get(j) {
                    out.push_str(&v.to_string());
                }
            }
            out.push(',');
            out.push_str(&self.row_sums[n].to_string());
            out.push('\n');
        }
        out
    }

    /// Right-aligned plain-text rendering of the same table.
    pub fn to_text(&self) -> String {
        let columns = self.max_n() + 3;
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![self.stat.corner_label().to_string()];
        header.extend((0..=self.max_n()).map(|j| j.to_string()));
        header.push("sum".to_string());
        grid.push(header);
        for (n, row) in self.rows.iter().enumerate() {
            let mut line = vec![n.to_string()];
            for j in 0..=self.max_n() {
                line.push(row.get(j).map_or_else(String::new, |v| v.to_string()));
            }
            line.push(self.row_sums[n].to_string());
            grid.push(line);
        }
        let widths: Vec<usize> = (0..columns)
            .map(|c| grid.iter().map(|line| line[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in &grid {
            let rendered: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:>w$}"))
                .collect();
            out.push_str(rendered.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}
