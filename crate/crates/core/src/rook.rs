//! Rook placements in a partition shape, their rank tableaux, and the bijection
//! with the clans of a sect.
//!
//! Rooks are addressed by the north-east corner of their box: `(column,
//! height)` with columns counted from the left and heights from the bottom of
//! the `p`-tall box, both starting at 1.

use std::collections::BTreeSet;

use crate::clan::{Clan, Symbol};
use crate::error::{Error, Result};
use crate::partition::{matchless_to_partition, partition_to_matchless, Partition};

/// Column/height coordinates of the positions of a clan, read off its base
/// clan: the k-th `-` of the base clan is column k, the l-th `+` is height l.
#[derive(Clone, Debug)]
pub struct Coordinates {
    column: Vec<usize>,
    height: Vec<usize>,
    minus_positions: Vec<usize>,
    plus_positions: Vec<usize>,
}

impl Coordinates {
    pub fn of(clan: &Clan) -> Self {
        let base = clan.base_clan();
        Self::of_matchless(&base)
    }

    pub(crate) fn of_matchless(base: &Clan) -> Self {
        let n = base.len();
        let mut column = vec![0; n];
        let mut height = vec![0; n];
        let mut minus_positions = Vec::with_capacity(base.q());
        let mut plus_positions = Vec::with_capacity(base.p());
        for (i, s) in base.symbols().iter().enumerate() {
            match s {
                Symbol::Minus => {
                    minus_positions.push(i);
                    column[i] = minus_positions.len();
                }
                Symbol::Plus => {
                    plus_positions.push(i);
                    height[i] = plus_positions.len();
                }
                Symbol::Pair(_) => unreachable!("base clan is matchless"),
            }
        }
        Coordinates {
            column,
            height,
            minus_positions,
            plus_positions,
        }
    }

    /// Column index of position `i`, or 0 when the base clan has `+` there.
    pub fn column(&self, i: usize) -> usize {
        self.column[i]
    }

    /// Height index of position `i`, or 0 when the base clan has `-` there.
    pub fn height(&self, i: usize) -> usize {
        self.height[i]
    }

    pub fn minus_position(&self, column: usize) -> usize {
        self.minus_positions[column - 1]
    }

    pub fn plus_position(&self, height: usize) -> usize {
        self.plus_positions[height - 1]
    }
}

/// Which boxes count toward a rank-tableau entry, relative to the box itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    /// Rooks in columns `<=` and heights `>=` the box.
    NorthWest,
    /// Rooks in columns `<=` and heights `<=` the box.
    SouthWest,
}

/// The orientation under which the rank order matches the Bruhat order on a
/// sect. Chosen by `tests/order_oracle.rs`, which checks every sect with
/// `p+q <= 6` against covering-move reachability.
pub const RANK_CORNER: Corner = Corner::NorthWest;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookPlacement {
    p: usize,
    q: usize,
    shape: Partition,
    rooks: BTreeSet<(usize, usize)>,
}

impl RookPlacement {
    pub fn new(
        shape: Partition,
        p: usize,
        q: usize,
        rooks: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        shape.check_fits(p, q)?;
        let rooks: BTreeSet<(usize, usize)> = rooks.into_iter().collect();
        for &(column, height) in &rooks {
            if !shape.contains(column, height, p) {
                return Err(Error::RookOutsideShape { column, height });
            }
        }
        let mut columns = BTreeSet::new();
        let mut heights = BTreeSet::new();
        for &(column, height) in &rooks {
            if !columns.insert(column) {
                return Err(Error::AttackingRooks(format!("column {column}")));
            }
            if !heights.insert(height) {
                return Err(Error::AttackingRooks(format!("height {height}")));
            }
        }
        Ok(RookPlacement { p, q, shape, rooks })
    }

    pub fn empty(shape: Partition, p: usize, q: usize) -> Result<Self> {
        Self::new(shape, p, q, [])
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn rooks(&self) -> &BTreeSet<(usize, usize)> {
        &self.rooks
    }

    fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.p).rev().flat_map(move |height| {
            (1..=self.shape.row_at_height(height, self.p)).map(move |column| (column, height))
        })
    }

    pub fn rank_tableau(&self) -> RankTableau {
        self.rank_tableau_with(RANK_CORNER)
    }

    pub fn rank_tableau_with(&self, corner: Corner) -> RankTableau {
        let entries = self
            .boxes()
            .map(|(column, height)| {
                let count = self
                    .rooks
                    .iter()
                    .filter(|&&(k, l)| {
                        k <= column
                            && match corner {
                                Corner::NorthWest => l >= height,
                                Corner::SouthWest => l <= height,
                            }
                    })
                    .count();
                ((column, height), count)
            })
            .collect();
        RankTableau { entries }
    }
}

/// Rank-tableau entries in row-major order from the top row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTableau {
    entries: Vec<((usize, usize), usize)>,
}

impl RankTableau {
    pub fn get(&self, column: usize, height: usize) -> Option<usize> {
        self.entries
            .iter()
            .find(|(b, _)| *b == (column, height))
            .map(|&(_, e)| e)
    }

    pub fn entries(&self) -> &[((usize, usize), usize)] {
        &self.entries
    }

    pub fn leq(&self, other: &RankTableau) -> bool {
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|((_, a), (_, b))| a <= b)
    }
}

/// `rho <= pi` in the rank-tableau order on a common shape.
pub fn rank_leq(rho: &RookPlacement, pi: &RookPlacement) -> Result<bool> {
    rank_leq_with(rho, pi, RANK_CORNER)
}

pub fn rank_leq_with(rho: &RookPlacement, pi: &RookPlacement, corner: Corner) -> Result<bool> {
    if rho.shape != pi.shape || rho.p != pi.p || rho.q != pi.q {
        return Err(Error::ShapeMismatch);
    }
    Ok(rho
        .rank_tableau_with(corner)
        .leq(&pi.rank_tableau_with(corner)))
}

pub fn clan_to_rooks(clan: &Clan) -> RookPlacement {
    let base = clan.base_clan();
    let shape = matchless_to_partition(&base).expect("base clan is matchless");
    let coords = Coordinates::of_matchless(&base);
    let rooks = clan
        .pairs()
        .into_iter()
        .map(|(i, j)| (coords.column(i), coords.height(j)))
        .collect();
    RookPlacement {
        p: clan.p(),
        q: clan.q(),
        shape,
        rooks,
    }
}

pub fn rooks_to_clan(placement: &RookPlacement, p: usize, q: usize) -> Result<Clan> {
    // Revalidate in case the caller's p, q differ from the placement's.
    let placement = RookPlacement::new(
        placement.shape.clone(),
        p,
        q,
        placement.rooks.iter().copied(),
    )?;
    let base = partition_to_matchless(&placement.shape, p, q)?;
    let coords = Coordinates::of_matchless(&base);
    let mut symbols = base.symbols().to_vec();
    for (id, &(column, height)) in placement.rooks.iter().enumerate() {
        let id = id as u32 + 1;
        symbols[coords.minus_position(column)] = Symbol::Pair(id);
        symbols[coords.plus_position(height)] = Symbol::Pair(id);
    }
    Ok(Clan::canonical(symbols, p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clan(s: &str) -> Clan {
        Clan::parse(s, 3, 3).unwrap()
    }

    fn rooks(c: &Clan) -> Vec<(usize, usize)> {
        clan_to_rooks(c).rooks().iter().copied().collect()
    }

    #[test]
    fn clan_to_rooks_examples() {
        let c = clan("1+-221");
        let r = clan_to_rooks(&c);
        assert_eq!(r.shape().rows(), &[3, 3, 1]);
        assert_eq!(rooks(&c), vec![(1, 3), (3, 2)]);
        assert!(clan_to_rooks(&clan("-+-+-+")).rooks().is_empty());
        let top = clan("1+22-1");
        assert_eq!(clan_to_rooks(&top).shape().rows(), &[3, 2, 1]);
        // (3,1) is a hidden rook below the shape, not part of the placement.
        assert_eq!(rooks(&top), vec![(1, 3), (2, 2)]);
    }

    #[test]
    fn rooks_to_clan_examples() {
        let shape: Partition = "3,3,1".parse().unwrap();
        let r = RookPlacement::new(shape, 3, 3, [(1, 3), (3, 2)]).unwrap();
        assert_eq!(rooks_to_clan(&r, 3, 3).unwrap().to_string(), "1+-221");
        let stair: Partition = "3,2,1".parse().unwrap();
        let empty = RookPlacement::empty(stair.clone(), 3, 3).unwrap();
        assert_eq!(rooks_to_clan(&empty, 3, 3).unwrap().to_string(), "-+-+-+");
        let one = RookPlacement::new(stair, 3, 3, [(1, 1)]).unwrap();
        assert_eq!(rooks_to_clan(&one, 3, 3).unwrap().to_string(), "11-+-+");
    }

    #[test]
    fn invalid_placements() {
        let stair: Partition = "3,2,1".parse().unwrap();
        assert!(matches!(
            RookPlacement::new(stair.clone(), 3, 3, [(3, 1)]),
            Err(Error::RookOutsideShape {
                column: 3,
                height: 1
            })
        ));
        assert!(matches!(
            RookPlacement::new(stair, 3, 3, [(1, 3), (1, 2)]),
            Err(Error::AttackingRooks(_))
        ));
    }

    #[test]
    fn rank_tableau_examples() {
        let stair: Partition = "3,2,1".parse().unwrap();
        let empty = RookPlacement::empty(stair.clone(), 3, 3).unwrap();
        assert!(empty.rank_tableau().entries().iter().all(|&(_, e)| e == 0));
        let full = clan_to_rooks(&clan("1+22-1"));
        let t = full.rank_tableau();
        assert_eq!(t.get(1, 3), Some(1));
        assert_eq!(t.get(2, 2), Some(2));
        assert_eq!(t.get(1, 1), Some(1));
        assert_eq!(t.get(3, 3), Some(1));
        assert_eq!(t.get(3, 1), None);

        let single = clan_to_rooks(&clan("1+-+-1")).rooks().clone();
        assert_eq!(single.into_iter().collect::<Vec<_>>(), vec![(1, 3)]);
        let shape: Partition = "3,3,1".parse().unwrap();
        let r = RookPlacement::new(shape, 3, 3, [(1, 3)]).unwrap();
        let t = r.rank_tableau();
        for &((k, l), e) in t.entries() {
            assert_eq!(e >= 1, k >= 1 && l <= 3, "box ({k},{l})");
        }
    }

    #[test]
    fn rank_leq_examples() {
        let a = clan_to_rooks(&clan("1+21-2"));
        let b = clan_to_rooks(&clan("1+22-1"));
        assert!(rank_leq(&a, &b).unwrap());
        assert!(!rank_leq(&b, &a).unwrap());
        assert!(rank_leq(&a, &a).unwrap());
        let bottom = clan_to_rooks(&clan("-+-+-+"));
        assert!(rank_leq(&bottom, &a).unwrap());
        let other = clan_to_rooks(&clan("1+-221"));
        assert_eq!(rank_leq(&a, &other), Err(Error::ShapeMismatch));
    }
}
