//! Exhaustive EL-labelling checks over the intervals of a sect.

use rayon::prelude::*;

use crate::cover::CoverLabel;
use crate::error::{Error, Result};
use crate::mcc::{increasing_chain, mcc_cover};
use crate::poset::SectPoset;

pub const DEFAULT_CHAIN_LIMIT: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Intervals with more maximal chains than this are reported, not checked.
    pub max_chains: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_chains: DEFAULT_CHAIN_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ELReport {
    pub lower: usize,
    pub upper: usize,
    pub length: usize,
    pub chain_count: u128,
    /// Saturated chains whose labels weakly increase.
    pub increasing_chain_count: u128,
    /// The lexicographically least label sequence over all chains.
    pub lex_least_labels: Vec<CoverLabel>,
    /// Exactly one chain carries `lex_least_labels`.
    pub lex_least_unique: bool,
    pub lex_least_is_increasing: bool,
    /// The chain carrying `lex_least_labels`, when unique.
    pub lex_least_chain: Option<Vec<usize>>,
    /// Iterating minimal covering clans walks `lex_least_chain`.
    pub mcc_chain_matches: bool,
    /// The minimal covering clan carries the least atom label.
    pub atom_minimal: bool,
}

impl ELReport {
    /// The increasing chain is lexicographically at most every other chain.
    pub fn weak_lex(&self) -> bool {
        self.increasing_chain_count == 1 && self.lex_least_is_increasing
    }

    /// The increasing chain is lexicographically smaller than every other.
    pub fn strict_lex(&self) -> bool {
        self.weak_lex() && self.lex_least_unique
    }

    pub fn passes(&self) -> bool {
        self.weak_lex() && self.mcc_chain_matches && self.atom_minimal
    }
}

fn in_interval(poset: &SectPoset, z: usize, lower: usize, upper: usize) -> bool {
    poset.leq(lower, z) && poset.leq(z, upper)
}

/// Checks the EL conditions on `[lower, upper]`.
pub fn verify_el_interval(
    poset: &SectPoset,
    lower: usize,
    upper: usize,
    limits: Limits,
) -> Result<ELReport> {
    if !poset.leq(lower, upper) {
        return Err(Error::NotBelow {
            lower: poset.element(lower).to_string(),
            upper: poset.element(upper).to_string(),
        });
    }
    let mut nodes = poset.interval(lower, upper);
    nodes.sort_by_key(|&z| std::cmp::Reverse(poset.rank(z)));

    // chains[z]: saturated chains from z up to `upper`.
    // increasing[e]: weakly increasing chains that start with edge e.
    let mut chains = vec![0u128; poset.len()];
    let mut increasing = vec![0u128; poset.edges().len()];
    let edges = poset.edges();
    chains[upper] = 1;
    for &z in &nodes {
        if z == upper {
            continue;
        }
        for i in poset.up_edge_indices(z) {
            let e = &edges[i];
            if !in_interval(poset, e.to, lower, upper) {
                continue;
            }
            chains[z] = chains[z].saturating_add(chains[e.to]);
            increasing[i] = if e.to == upper {
                1
            } else {
                poset
                    .up_edge_indices(e.to)
                    .filter(|&j| {
                        edges[j].label >= e.label && in_interval(poset, edges[j].to, lower, upper)
                    })
                    .fold(0u128, |acc, j| acc.saturating_add(increasing[j]))
            };
        }
    }
    let chain_count = chains[lower];
    if chain_count > limits.max_chains {
        return Err(Error::ChainLimitExceeded {
            count: chain_count,
            limit: limits.max_chains,
        });
    }
    let increasing_chain_count = if lower == upper {
        1
    } else {
        poset
            .up_edge_indices(lower)
            .filter(|&i| in_interval(poset, edges[i].to, lower, upper))
            .fold(0u128, |acc, i| acc.saturating_add(increasing[i]))
    };

    // Lex-least label sequence: advance the whole frontier of chains that
    // carry the least prefix, so tied labels cannot hide a smaller tail.
    let mut frontier = vec![lower];
    let mut path = vec![lower];
    let mut labels = Vec::new();
    let mut unique = true;
    while frontier != [upper] {
        let steps: Vec<(CoverLabel, usize)> = frontier
            .iter()
            .flat_map(|&z| poset.up_edges(z))
            .filter(|e| in_interval(poset, e.to, lower, upper))
            .map(|e| (e.label, e.to))
            .collect();
        let least = steps.iter().map(|s| s.0).min().expect("interval is graded");
        let mut next: Vec<usize> = steps.iter().filter(|s| s.0 == least).map(|s| s.1).collect();
        unique &= next.len() == 1;
        next.sort_unstable();
        next.dedup();
        labels.push(least);
        path.push(next[0]);
        frontier = next;
    }
    let lex_least_is_increasing = labels.windows(2).all(|w| w[0] <= w[1]);
    let lex_least_chain = unique.then_some(path);

    let (mcc_chain_matches, atom_minimal) = if lower == upper {
        (true, true)
    } else {
        let gamma = poset.element(lower);
        let tau = poset.element(upper);
        let walked: Option<Vec<usize>> = increasing_chain(gamma, tau).ok().map(|chain| {
            std::iter::once(lower)
                .chain(chain.iter().filter_map(|(c, _)| poset.index_of(c).ok()))
                .collect()
        });
        let matches = walked.is_some() && walked == lex_least_chain;
        let least_atom = poset
            .up_edges(lower)
            .iter()
            .filter(|e| in_interval(poset, e.to, lower, upper))
            .map(|e| e.label)
            .min();
        let minimal = mcc_cover(gamma, tau).is_ok_and(|c| {
            Some(c.label) == least_atom
                && poset
                    .index_of(&c.target)
                    .is_ok_and(|t| in_interval(poset, t, lower, upper))
        });
        (matches, minimal)
    };

    Ok(ELReport {
        lower,
        upper,
        length: poset.rank(upper) - poset.rank(lower),
        chain_count,
        increasing_chain_count,
        lex_least_labels: labels,
        lex_least_unique: unique,
        lex_least_is_increasing,
        lex_least_chain,
        mcc_chain_matches,
        atom_minimal,
    })
}

/// Outcome for one strict interval `lower < upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalOutcome {
    Checked(ELReport),
    LimitExceeded {
        lower: usize,
        upper: usize,
        count: u128,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ELSummary {
    pub elements: usize,
    /// Strict intervals `lower < upper`, in `(lower, upper)` order.
    pub outcomes: Vec<IntervalOutcome>,
}

impl ELSummary {
    pub fn intervals(&self) -> usize {
        self.outcomes.len()
    }

    pub fn reports(&self) -> impl Iterator<Item = &ELReport> {
        self.outcomes.iter().filter_map(|o| match o {
            IntervalOutcome::Checked(r) => Some(r),
            IntervalOutcome::LimitExceeded { .. } => None,
        })
    }

    pub fn failures(&self) -> impl Iterator<Item = &ELReport> {
        self.reports().filter(|r| !r.passes())
    }

    pub fn limit_exceeded(&self) -> usize {
        self.outcomes.len() - self.reports().count()
    }

    /// Intervals passing under the weak lex reading but not the strict one.
    pub fn strict_only_failures(&self) -> usize {
        self.reports()
            .filter(|r| r.weak_lex() && !r.strict_lex())
            .count()
    }

    pub fn max_chain_count(&self) -> u128 {
        self.reports().map(|r| r.chain_count).max().unwrap_or(0)
    }

    pub fn passes(&self) -> bool {
        self.limit_exceeded() == 0 && self.failures().next().is_none()
    }
}

/// Runs [`verify_el_interval`] on every strict interval of the sect, in
/// parallel on the current rayon pool. The result does not depend on the
/// number of threads.
pub fn verify_el_sect(poset: &SectPoset, limits: Limits) -> ELSummary {
    let pairs: Vec<(usize, usize)> = (0..poset.len())
        .flat_map(|x| (0..poset.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && poset.leq(x, y))
        .collect();
    let outcomes = pairs
        .par_iter()
        .map(|&(x, y)| match verify_el_interval(poset, x, y, limits) {
            Ok(r) => IntervalOutcome::Checked(r),
            Err(Error::ChainLimitExceeded { count, .. }) => IntervalOutcome::LimitExceeded {
                lower: x,
                upper: y,
                count,
            },
            Err(e) => unreachable!("comparable pair rejected: {e}"),
        })
        .collect();
    ELSummary {
        elements: poset.len(),
        outcomes,
    }
}
