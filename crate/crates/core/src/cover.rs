//! Covering moves at suitable rises and the standard edge labelling.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clan::{Clan, Symbol};
use crate::error::{Error, Result};
use crate::involution::{rises, PointKind, Rise};
use crate::phi::{partial_permutation, PartialPermutation};

/// Edge label in `N x N`, ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoverLabel {
    pub first: usize,
    pub second: usize,
}

impl CoverLabel {
    pub fn new(first: usize, second: usize) -> Self {
        CoverLabel { first, second }
    }
}

impl fmt::Display for CoverLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// `-+ -> 11` (or `+- -> 11` outside a sect).
    Ff,
    /// `-11 -> 1-1` (or `+11 -> 1+1`).
    Fe,
    /// `11+ -> 1+1` (or `11- -> 1-1`).
    Ef,
    /// `1212 -> 1221`.
    EeNoncrossing,
    /// `1122 -> 1+-1`.
    EeCrossing,
    /// `1122 -> 1-+1`; leaves the sect.
    EeCrossingSwapped,
    /// `1122 -> 1212` at an excedance/deficiency rise; leaves the sect.
    Ed,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::Ff => "ff",
            MoveKind::Fe => "fe",
            MoveKind::Ef => "ef",
            MoveKind::EeNoncrossing => "ee-noncrossing",
            MoveKind::EeCrossing => "ee-crossing",
            MoveKind::EeCrossingSwapped => "ee-crossing-1",
            MoveKind::Ed => "ed",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            MoveKind::Ff,
            MoveKind::Fe,
            MoveKind::Ef,
            MoveKind::EeNoncrossing,
            MoveKind::EeCrossing,
            MoveKind::EeCrossingSwapped,
            MoveKind::Ed,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverMove {
    pub kind: MoveKind,
    pub rise: Rise,
    /// Positions whose symbols change, ascending.
    pub touched: Vec<usize>,
}

/// A cover `gamma < target` inside a sect together with its standard label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cover {
    pub target: Clan,
    pub label: CoverLabel,
    pub mv: CoverMove,
}

fn fresh_id(symbols: &[Symbol]) -> u32 {
    symbols
        .iter()
        .filter_map(|s| match s {
            Symbol::Pair(id) => Some(*id),
            _ => None,
        })
        .max()
        .unwrap_or(0)
        + 1
}

struct Applied {
    kind: MoveKind,
    symbols: Vec<Symbol>,
    touched: Vec<usize>,
}

/// Every move at `rise` listed for the full poset.
fn moves_at(clan: &Clan, mates: &[Option<usize>], rise: &Rise) -> Vec<Applied> {
    use PointKind::*;
    let sym = clan.symbols();
    let (i, j) = (rise.i, rise.j);
    let mut out = Vec::new();
    let mut apply = |kind: MoveKind, edits: &[(usize, Symbol)]| {
        let mut symbols = sym.to_vec();
        for &(pos, s) in edits {
            symbols[pos] = s;
        }
        let mut touched: Vec<usize> = edits.iter().map(|e| e.0).collect();
        touched.sort_unstable();
        out.push(Applied {
            kind,
            symbols,
            touched,
        });
    };
    let id = Symbol::Pair(fresh_id(sym));
    let id2 = Symbol::Pair(fresh_id(sym) + 1);
    match rise.kind {
        (Fixed, Fixed) if sym[i] != sym[j] => apply(MoveKind::Ff, &[(i, id), (j, id)]),
        (Fixed, Excedance) => {
            let m = mates[j].expect("excedance is paired");
            apply(MoveKind::Fe, &[(i, id), (m, id), (j, sym[i])]);
        }
        (Excedance, Fixed) => {
            let m = mates[i].expect("excedance is paired");
            apply(MoveKind::Ef, &[(i, id), (j, id), (m, sym[j])]);
        }
        (Excedance, Excedance) => {
            let mi = mates[i].expect("paired");
            let mj = mates[j].expect("paired");
            if j < mi {
                apply(
                    MoveKind::EeNoncrossing,
                    &[(i, id), (mj, id), (j, id2), (mi, id2)],
                );
            } else {
                apply(
                    MoveKind::EeCrossing,
                    &[(i, id), (mj, id), (mi, Symbol::Plus), (j, Symbol::Minus)],
                );
                apply(
                    MoveKind::EeCrossingSwapped,
                    &[(i, id), (mj, id), (mi, Symbol::Minus), (j, Symbol::Plus)],
                );
            }
        }
        (Excedance, Deficiency) => {
            let mi = mates[i].expect("paired");
            let mj = mates[j].expect("paired");
            apply(MoveKind::Ed, &[(i, id), (mj, id), (mi, id2), (j, id2)]);
        }
        _ => {}
    }
    out
}

/// Covers of `clan` in the full poset of `(p,q)`-clans.
pub fn full_covers(clan: &Clan) -> Vec<Clan> {
    let mates = clan.mates();
    let mut out: Vec<Clan> = rises(clan)
        .iter()
        .filter(|r| r.suitable)
        .flat_map(|r| moves_at(clan, &mates, r))
        .map(|a| clan.with_symbols(a.symbols))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The label read off the change `before -> after` of partial permutations:
/// `(a_k, b_k)` when a single column `k` moves up, `(x, y)` when two columns
/// holding `x < y` swap. `None` for any other change.
pub fn phi_change_label(
    before: &PartialPermutation,
    after: &PartialPermutation,
) -> Option<CoverLabel> {
    let changed: Vec<usize> = (1..=before.values().len())
        .filter(|&k| before.get(k) != after.get(k))
        .collect();
    match changed[..] {
        [k] if before.get(k) < after.get(k) => Some(CoverLabel::new(before.get(k), after.get(k))),
        [k, m]
            if before.get(k) == after.get(m)
                && before.get(m) == after.get(k)
                && before.get(k) < before.get(m) =>
        {
            Some(CoverLabel::new(before.get(k), before.get(m)))
        }
        _ => None,
    }
}

/// Whether `kind` applied at `rise` stays inside the sect.
fn is_sect_move(sym: &[Symbol], kind: MoveKind, rise: &Rise) -> bool {
    match kind {
        MoveKind::Ff | MoveKind::Fe => sym[rise.i] == Symbol::Minus,
        MoveKind::Ef => sym[rise.j] == Symbol::Plus,
        MoveKind::EeNoncrossing | MoveKind::EeCrossing => true,
        MoveKind::EeCrossingSwapped | MoveKind::Ed => false,
    }
}

/// Covers of `clan` inside its own sect, each with its standard label,
/// ordered by label.
pub fn sect_covers(clan: &Clan) -> Vec<Cover> {
    let mates = clan.mates();
    let sym = clan.symbols();
    let phi = partial_permutation(clan);
    let mut out = Vec::new();
    for rise in rises(clan).into_iter().filter(|r| r.suitable) {
        for applied in moves_at(clan, &mates, &rise) {
            if !is_sect_move(sym, applied.kind, &rise) {
                continue;
            }
            let target = clan.with_symbols(applied.symbols);
            let label = phi_change_label(&phi, &partial_permutation(&target))
                .expect("sect covers move one rook up or swap two");
            out.push(Cover {
                target,
                label,
                mv: CoverMove {
                    kind: applied.kind,
                    rise,
                    touched: applied.touched,
                },
            });
        }
    }
    out.sort_by(|a, b| a.label.cmp(&b.label).then_with(|| a.target.cmp(&b.target)));
    out
}

/// The standard label of the covering pair `lower < upper`.
pub fn cover_label(lower: &Clan, upper: &Clan) -> Result<CoverLabel> {
    if lower.p() != upper.p() || lower.q() != upper.q() || lower.base_clan() != upper.base_clan() {
        return Err(Error::DifferentSects(lower.to_string(), upper.to_string()));
    }
    sect_covers(lower)
        .into_iter()
        .find(|c| &c.target == upper)
        .map(|c| c.label)
        .ok_or_else(|| Error::NotACover {
            lower: lower.to_string(),
            upper: upper.to_string(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::clan_length;

    fn clan(s: &str) -> Clan {
        Clan::parse(s, 3, 3).unwrap()
    }

    #[test]
    fn labelled_example_edge() {
        let label = cover_label(&clan("1+21-2"), &clan("1+22-1")).unwrap();
        assert_eq!(label, CoverLabel::new(2, 3));
        let cover = sect_covers(&clan("1+21-2"))
            .into_iter()
            .find(|c| c.target == clan("1+22-1"))
            .unwrap();
        assert_eq!(cover.mv.kind, MoveKind::EeNoncrossing);
    }

    #[test]
    fn bottom_fan_of_the_staircase_sect() {
        let covers = sect_covers(&clan("-+-+-+"));
        let labels: Vec<String> = covers.iter().map(|c| c.label.to_string()).collect();
        assert_eq!(labels, vec!["(0,1)", "(0,2)", "(0,3)"]);
        let targets: Vec<String> = covers.iter().map(|c| c.target.to_string()).collect();
        assert_eq!(targets, vec!["11-+-+", "-+11-+", "-+-+11"]);
    }

    #[test]
    fn top_has_no_sect_covers() {
        assert!(sect_covers(&clan("1+22-1")).is_empty());
    }

    #[test]
    fn full_cover_examples() {
        let covers = full_covers(&clan("+++---"));
        assert_eq!(covers, vec![clan("++11--")]);
        let covers = full_covers(&Clan::parse("1122", 2, 2).unwrap());
        assert!(covers.contains(&Clan::parse("1212", 2, 2).unwrap()));
    }

    #[test]
    fn covers_raise_length_by_one() {
        for c in crate::clan::all_clans(3, 3) {
            let len = clan_length(&c);
            for t in full_covers(&c) {
                assert_eq!(clan_length(&t), len + 1, "{c} -> {t}");
            }
            for cov in sect_covers(&c) {
                assert_eq!(cov.target.base_clan(), c.base_clan());
            }
        }
    }

    #[test]
    fn label_errors() {
        assert!(matches!(
            cover_label(&clan("-+-+-+"), &clan("1+22-1")),
            Err(Error::NotACover { .. })
        ));
        assert!(matches!(
            cover_label(&clan("-+-+-+"), &clan("1+-221")),
            Err(Error::DifferentSects(..))
        ));
    }

    #[test]
    fn move_names_round_trip() {
        for k in [
            "ff",
            "fe",
            "ef",
            "ee-noncrossing",
            "ee-crossing",
            "ee-crossing-1",
            "ed",
        ] {
            assert_eq!(MoveKind::parse(k).unwrap().as_str(), k);
        }
        assert!(MoveKind::parse("xx").is_none());
    }
}
