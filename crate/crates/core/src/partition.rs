use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::clan::{Clan, Symbol};
use crate::error::{Error, Result};

/// A partition given by its row lengths, longest (top) row first. Trailing
/// zero rows are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{rows:?}")));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The full `p x q` rectangle, `p` rows of length `q`.
    pub fn rectangle(p: usize, q: usize) -> Self {
        if q == 0 {
            return Partition::empty();
        }
        Partition { rows: vec![q; p] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn fits(&self, p: usize, q: usize) -> bool {
        self.rows.len() <= p && self.rows.first().is_none_or(|&r| r <= q)
    }

    pub fn check_fits(&self, p: usize, q: usize) -> Result<()> {
        if self.fits(p, q) {
            Ok(())
        } else {
            Err(Error::PartitionOutOfBox {
                partition: self.to_string(),
                p,
                q,
            })
        }
    }

    /// Length of the row at `height` (1 = bottom row of the `p`-tall box).
    pub fn row_at_height(&self, height: usize, p: usize) -> usize {
        if height == 0 || height > p {
            return 0;
        }
        self.rows.get(p - height).copied().unwrap_or(0)
    }

    /// Number of boxes in column `column` (1-based).
    pub fn column_length(&self, column: usize) -> usize {
        self.rows.iter().take_while(|&&r| r >= column).count()
    }

    /// Whether the box with north-east corner `(column, height)` lies in the
    /// diagram drawn in a `p`-tall box.
    pub fn contains(&self, column: usize, height: usize, p: usize) -> bool {
        column >= 1 && column <= self.row_at_height(height, p)
    }

    /// All partitions fitting in the `p x q` box, ordered by size and then by
    /// row lengths.
    pub fn all_in_box(p: usize, q: usize) -> Vec<Partition> {
        fn go(max: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { rows: cur.clone() });
            if rows_left == 0 {
                return;
            }
            for r in 1..=max {
                cur.push(r);
                go(r, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(q, p, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.rows.cmp(&b.rows)));
        out
    }
}

/// Comma-separated row lengths; the empty partition renders as `0`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if s.is_empty() || s == "\u{2205}" {
            return Ok(Partition::empty());
        }
        let rows = s
            .split(',')
            .map(|r| r.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(rows)
    }
}

/// Heights of the lattice path under each column: `h[k-1]` counts the `+`
/// symbols before the k-th `-`.
fn path_heights(tau: &Clan) -> Vec<usize> {
    let mut heights = Vec::with_capacity(tau.q());
    let mut plus = 0;
    for s in tau.symbols() {
        match s {
            Symbol::Plus => plus += 1,
            Symbol::Minus => heights.push(plus),
            Symbol::Pair(_) => {}
        }
    }
    heights
}

/// Reads a matchless clan as a lattice path (`-` east, `+` north) and returns
/// the partition of boxes above it.
pub fn matchless_to_partition(tau: &Clan) -> Result<Partition> {
    if !tau.is_matchless() {
        return Err(Error::NotMatchless(tau.to_string()));
    }
    let heights = path_heights(tau);
    let p = tau.p();
    let rows = (1..=p)
        .rev()
        .map(|l| heights.iter().filter(|&&h| h < l).count())
        .collect();
    Partition::new(rows)
}

pub fn partition_to_matchless(lambda: &Partition, p: usize, q: usize) -> Result<Clan> {
    lambda.check_fits(p, q)?;
    let mut symbols = Vec::with_capacity(p + q);
    let mut height = 0;
    for k in 1..=q {
        let h = p - lambda.column_length(k);
        symbols.extend(std::iter::repeat_n(Symbol::Plus, h - height));
        symbols.push(Symbol::Minus);
        height = h;
    }
    symbols.extend(std::iter::repeat_n(Symbol::Plus, p - height));
    Clan::matchless(&symbols, p, q)
}
