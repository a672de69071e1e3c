//! Action index, cover value and the minimal covering clan of an interval.

use crate::clan::Clan;
use crate::cover::{sect_covers, Cover, CoverLabel, MoveKind};
use crate::error::{Error, Result};
use crate::phi::{partial_permutation, PartialPermutation};
use crate::rook::{clan_to_rooks, rank_leq, Coordinates};

/// `lower <= upper` in the Bruhat order of their common sect.
pub fn sect_leq(lower: &Clan, upper: &Clan) -> Result<bool> {
    if lower.p() != upper.p() || lower.q() != upper.q() || lower.base_clan() != upper.base_clan() {
        return Err(Error::DifferentSects(lower.to_string(), upper.to_string()));
    }
    rank_leq(&clan_to_rooks(lower), &clan_to_rooks(upper))
}

fn require_below(lower: &Clan, upper: &Clan, strict: bool) -> Result<()> {
    if !sect_leq(lower, upper)? || (strict && lower == upper) {
        return Err(Error::NotBelow {
            lower: lower.to_string(),
            upper: upper.to_string(),
        });
    }
    Ok(())
}

/// Data attached to a strict interval `gamma < tau`. Column indices are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalContext {
    pub phi_lower: PartialPermutation,
    pub phi_upper: PartialPermutation,
    /// Columns where the partial permutations differ.
    pub differ: Vec<usize>,
    /// Columns empty below and occupied above.
    pub entering: Vec<usize>,
    /// Entry points; empty unless `entering` is non-empty.
    pub entry_points: Vec<usize>,
    pub action_index: usize,
    pub cover_value: usize,
    /// The cover value from the value conditions alone (free values and
    /// swap witnesses, or the rook-count subcases for entry points), without
    /// asking that the move stay below `tau`. `None` when nothing qualifies.
    /// It differs from `cover_value` on some intervals; see the tests.
    pub literal_cover_value: Option<usize>,
}

impl IntervalContext {
    /// `(a_t, v)`: the label the minimal covering clan must carry.
    pub fn label(&self) -> CoverLabel {
        CoverLabel::new(self.phi_lower.get(self.action_index), self.cover_value)
    }

    /// The first entering column, when there is one.
    pub fn first_entering(&self) -> Option<usize> {
        self.entering.first().copied()
    }
}

fn is_entry_move(cover: &Cover, position: usize) -> bool {
    cover.mv.rise.i == position && matches!(cover.mv.kind, MoveKind::Ff | MoveKind::Fe)
}

/// Action index and cover value of `gamma < tau`. The action index follows
/// the lowest out-of-place rook, or the entry points when some column gains
/// a rook. The cover value is the least second label among the moves at the
/// action index whose result is still below `tau`.
pub fn interval_context(gamma: &Clan, tau: &Clan) -> Result<IntervalContext> {
    require_below(gamma, tau, true)?;
    let a = partial_permutation(gamma);
    let b = partial_permutation(tau);
    let q = gamma.q();
    let p = gamma.p();
    let differ: Vec<usize> = (1..=q).filter(|&k| a.get(k) != b.get(k)).collect();
    let entering: Vec<usize> = (1..=q)
        .filter(|&k| a.get(k) == 0 && b.get(k) != 0)
        .collect();
    let covers = sect_covers(gamma);
    let below_tau = |c: &Cover| sect_leq(&c.target, tau).unwrap_or(false);

    let no_move = |label: String| Error::NoCoveringClan {
        clan: gamma.to_string(),
        label,
    };

    let Some(&first) = entering.first() else {
        let t = *differ
            .iter()
            .min_by_key(|&&k| a.get(k))
            .expect("distinct comparable clans differ somewhere");
        let x = a.get(t);
        let literal = (x + 1..=p).find(|&v| {
            let unused = (1..=q).all(|u| a.get(u) != v);
            let swap = (t + 1..=q).any(|u| {
                a.get(u) == v
                    && differ
                        .iter()
                        .any(|&s| s >= u && b.get(s) == x && x < a.get(s))
            });
            unused || swap
        });
        let v = covers
            .iter()
            .filter(|c| c.label.first == x && below_tau(c))
            .map(|c| c.label.second)
            .min()
            .ok_or_else(|| no_move(format!("({x},?)")))?;
        return Ok(IntervalContext {
            phi_lower: a,
            phi_upper: b,
            differ,
            entering,
            entry_points: Vec::new(),
            action_index: t,
            cover_value: v,
            literal_cover_value: literal,
        });
    };

    let coords = Coordinates::of(gamma);
    let entry_points: Vec<usize> = (first..=q)
        .filter(|&k| {
            a.get(k) == 0
                && b.nonzero_prefix(k) > a.nonzero_prefix(k)
                && covers
                    .iter()
                    .any(|c| is_entry_move(c, coords.minus_position(k)))
        })
        .collect();
    let allow_ff = a.nonzero_count() < b.nonzero_count();
    let best = |keep: &dyn Fn(&Cover) -> bool| {
        entry_points
            .iter()
            .flat_map(|&k| {
                let pos = coords.minus_position(k);
                covers
                    .iter()
                    .filter(move |c| is_entry_move(c, pos))
                    .filter(|c| keep(c))
                    .map(move |c| (c.label.second, k))
            })
            .min()
    };
    let literal = best(&|c| allow_ff || c.mv.kind == MoveKind::Fe).map(|(v, _)| v);
    let (v, t) = best(&|c| below_tau(c)).ok_or_else(|| no_move("(0,?)".to_string()))?;
    Ok(IntervalContext {
        phi_lower: a,
        phi_upper: b,
        differ,
        entering,
        entry_points,
        action_index: t,
        cover_value: v,
        literal_cover_value: literal,
    })
}

/// The minimal covering clan of `gamma` toward `tau`, with its label.
pub fn mcc_cover(gamma: &Clan, tau: &Clan) -> Result<Cover> {
    let ctx = interval_context(gamma, tau)?;
    let label = ctx.label();
    let at =
        (!ctx.entering.is_empty()).then(|| Coordinates::of(gamma).minus_position(ctx.action_index));
    sect_covers(gamma)
        .into_iter()
        .find(|c| {
            c.label == label
                && at.is_none_or(|pos| c.mv.rise.i == pos)
                && sect_leq(&c.target, tau).unwrap_or(false)
        })
        .ok_or_else(|| Error::NoCoveringClan {
            clan: gamma.to_string(),
            label: label.to_string(),
        })
}

pub fn mcc(gamma: &Clan, tau: &Clan) -> Result<Clan> {
    mcc_cover(gamma, tau).map(|c| c.target)
}

/// The saturated chain `gamma < mcc(gamma) < mcc(mcc(gamma)) < ... < tau`,
/// listing each clan after `gamma` with the label of the edge into it.
pub fn increasing_chain(gamma: &Clan, tau: &Clan) -> Result<Vec<(Clan, CoverLabel)>> {
    require_below(gamma, tau, false)?;
    let mut chain = Vec::new();
    let mut current = gamma.clone();
    let steps = crate::involution::clan_length(tau) - crate::involution::clan_length(gamma);
    for _ in 0..steps {
        let cover = mcc_cover(&current, tau)?;
        current = cover.target.clone();
        chain.push((cover.target, cover.label));
    }
    if &current != tau {
        return Err(Error::NotBelow {
            lower: current.to_string(),
            upper: tau.to_string(),
        });
    }
    Ok(chain)
}
