//! Partial permutations attached to clans, including hidden rooks.

use std::fmt;

use crate::clan::{Clan, Symbol};
use crate::partition::Partition;
use crate::rook::{Coordinates, RookPlacement};

/// A map `[q] -> [p] ∪ {0}` in one-line notation, injective on its non-zero
/// values. `values()[k - 1]` is the image of column `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPermutation {
    values: Vec<usize>,
}

impl PartialPermutation {
    pub fn new(values: Vec<usize>) -> Option<Self> {
        let mut seen: Vec<usize> = values.iter().copied().filter(|&v| v != 0).collect();
        let n = seen.len();
        seen.sort_unstable();
        seen.dedup();
        (seen.len() == n).then_some(PartialPermutation { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Image of column `k` (1-based).
    pub fn get(&self, k: usize) -> usize {
        self.values[k - 1]
    }

    pub fn nonzero_count(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }

    /// Non-zero entries among the first `k` columns.
    pub fn nonzero_prefix(&self, k: usize) -> usize {
        self.values[..k].iter().filter(|&&v| v != 0).count()
    }

    /// The rooks `(k, phi(k))` as a placement in the full `p x q` rectangle.
    pub fn to_rectangle(&self, p: usize) -> RookPlacement {
        let q = self.values.len();
        let rooks = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(k, &v)| (k + 1, v));
        RookPlacement::new(Partition::rectangle(p, q), p, q, rooks)
            .expect("partial permutation fits its rectangle")
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Where the leftmost/rightmost search for the next `1212` pattern starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanOrder {
    Leftmost,
    Rightmost,
}

fn find_crossing(pairs: &[(usize, usize)], order: ScanOrder) -> Option<(usize, usize)> {
    let mut hits = (0..pairs.len()).flat_map(|x| (0..pairs.len()).map(move |y| (x, y)));
    let crosses = |&(x, y): &(usize, usize)| {
        let (a, c) = pairs[x];
        let (b, d) = pairs[y];
        a < b && b < c && c < d
    };
    match order {
        ScanOrder::Leftmost => hits.find(crosses),
        ScanOrder::Rightmost => hits.rfind(crosses),
    }
}

/// Rewrites `1212` patterns to `1221` until none remain.
pub fn uncross(clan: &Clan, order: ScanOrder) -> Clan {
    let mut pairs = clan.pairs();
    while let Some((x, y)) = find_crossing(&pairs, order) {
        let (a, c) = pairs[x];
        let (b, d) = pairs[y];
        pairs[x] = (a, d);
        pairs[y] = (b, c);
        pairs.sort_unstable();
    }
    let mut symbols = clan.symbols().to_vec();
    for (id, &(i, j)) in pairs.iter().enumerate() {
        symbols[i] = Symbol::Pair(id as u32 + 1);
        symbols[j] = Symbol::Pair(id as u32 + 1);
    }
    clan.with_symbols(symbols)
}

/// The visible rooks only: `phi(k) = l` for each pair at column k, height l.
pub fn visible_partial_permutation(clan: &Clan) -> PartialPermutation {
    let coords = Coordinates::of(clan);
    let mut values = vec![0; clan.q()];
    for (i, j) in clan.pairs() {
        values[coords.column(i) - 1] = coords.height(j);
    }
    PartialPermutation { values }
}

/// One assignment made while peeling simple innermost `1+-1` patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HiddenRook {
    pub column: usize,
    pub height: usize,
    /// Deletion round (0 for the normalized clan itself).
    pub round: usize,
    /// Positions of the enclosing pair.
    pub pair: (usize, usize),
}

/// Hidden rooks of `clan`, by deletion round then column.
pub fn hidden_rooks(clan: &Clan) -> Vec<HiddenRook> {
    let coords = Coordinates::of(clan);
    let normalized = uncross(clan, ScanOrder::Leftmost);
    let symbols = normalized.symbols();
    let mates = normalized.mates();
    let mut alive = vec![true; symbols.len()];
    let mut out = Vec::new();

    for round in 0.. {
        let signs: Vec<usize> = (0..symbols.len())
            .filter(|&i| alive[i] && symbols[i].is_sign())
            .collect();
        let pairs: Vec<(usize, usize)> = (0..symbols.len())
            .filter(|&i| alive[i])
            .filter_map(|i| mates[i].filter(|&j| j > i).map(|j| (i, j)))
            .collect();
        let mut found = Vec::new();
        // Adjacent alive signs have only numbers between them: the simple patterns.
        for w in signs.windows(2) {
            let (x, y) = (w[0], w[1]);
            if symbols[x] != Symbol::Plus || symbols[y] != Symbol::Minus {
                continue;
            }
            for &(a, b) in pairs.iter().filter(|&&(a, b)| a < x && y < b) {
                let innermost = !pairs.iter().any(|&(k, l)| a < k && k < x && y < l && l < b);
                if innermost {
                    found.push((a, b, x, y));
                }
            }
        }
        if found.is_empty() {
            break;
        }
        for &(a, b, x, y) in &found {
            out.push(HiddenRook {
                column: coords.column(y),
                height: coords.height(x),
                round,
                pair: (a, b),
            });
            for i in [a, b, x, y] {
                alive[i] = false;
            }
        }
    }
    out.sort_by_key(|h| (h.round, h.column));
    out
}

/// The partial permutation `phi` of a clan: visible rooks from its pairs plus
/// hidden rooks from the `1+-1` peeling of its uncrossed form.
pub fn partial_permutation(clan: &Clan) -> PartialPermutation {
    let mut phi = visible_partial_permutation(clan);
    for h in hidden_rooks(clan) {
        debug_assert_eq!(phi.values[h.column - 1], 0);
        phi.values[h.column - 1] = h.height;
    }
    debug_assert!(PartialPermutation::new(phi.values.clone()).is_some());
    phi
}
