//! Underlying involutions of clans, the two length functions, and rises.

use std::fmt;

use crate::clan::{Clan, Symbol};

/// An involution of `{0, .., n-1}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Involution {
    values: Vec<usize>,
}

impl Involution {
    /// Returns `None` unless `values` is a permutation squaring to the identity.
    pub fn new(values: Vec<usize>) -> Option<Self> {
        let n = values.len();
        let ok = values.iter().all(|&v| v < n && values[v] < n)
            && values.iter().enumerate().all(|(i, &v)| values[v] == i);
        ok.then_some(Involution { values })
    }

    /// Parses 1-based one-line notation, either `156423` or `1,5,6,4,2,3`.
    pub fn parse_one_line(text: &str) -> Option<Self> {
        let values: Option<Vec<usize>> = if text.contains(',') {
            text.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let values = values?;
        if values.contains(&0) {
            return None;
        }
        Involution::new(values.into_iter().map(|v| v - 1).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn inversions(&self) -> usize {
        let v = &self.values;
        (0..v.len())
            .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| v[i] > v[j])
            .count()
    }

    pub fn excedances(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v > i)
            .count()
    }

    pub fn point_kind(&self, i: usize) -> PointKind {
        let v = self.values[i];
        match v.cmp(&i) {
            std::cmp::Ordering::Equal => PointKind::Fixed,
            std::cmp::Ordering::Greater => PointKind::Excedance,
            std::cmp::Ordering::Less => PointKind::Deficiency,
        }
    }
}

/// 1-based one-line notation; entries are comma separated once `n > 9`.
impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.values.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.values.iter().map(|v| (v + 1).to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

pub fn underlying_involution(clan: &Clan) -> Involution {
    let values = clan
        .mates()
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.unwrap_or(i))
        .collect();
    Involution { values }
}

/// Length of a clan: for each pair `i < j`, `j - i` minus the number of pairs
/// `s < i < t < j`.
pub fn clan_length(clan: &Clan) -> usize {
    let pairs = clan.pairs();
    pairs
        .iter()
        .map(|&(i, j)| {
            let crossing = pairs
                .iter()
                .filter(|&&(s, t)| s < i && i < t && t < j)
                .count();
            j - i - crossing
        })
        .sum()
}

/// `(inv + exc) / 2`.
pub fn involution_length(pi: &Involution) -> usize {
    let total = pi.inversions() + pi.excedances();
    debug_assert!(total.is_multiple_of(2), "inv + exc is even for involutions");
    total / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKind {
    Fixed,
    Excedance,
    Deficiency,
}

impl PointKind {
    pub fn letter(self) -> char {
        match self {
            PointKind::Fixed => 'f',
            PointKind::Excedance => 'e',
            PointKind::Deficiency => 'd',
        }
    }
}

/// A rise `(i, j)` of an involution: `i < j` and `pi(i) < pi(j)`. Positions
/// are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rise {
    pub i: usize,
    pub j: usize,
    pub kind: (PointKind, PointKind),
    pub free: bool,
    pub suitable: bool,
}

impl Rise {
    pub fn type_name(&self) -> String {
        format!("{}{}", self.kind.0.letter(), self.kind.1.letter())
    }
}

impl fmt::Display for Rise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) {}", self.i + 1, self.j + 1, self.type_name())?;
        if self.suitable {
            f.write_str(" suitable")
        } else if self.free {
            f.write_str(" free")
        } else {
            Ok(())
        }
    }
}

fn suitable_kind(kind: (PointKind, PointKind)) -> bool {
    use PointKind::*;
    matches!(
        kind,
        (Fixed, Fixed)
            | (Fixed, Excedance)
            | (Excedance, Fixed)
            | (Excedance, Excedance)
            | (Excedance, Deficiency)
    )
}

/// Free in the involution sense: no `k` strictly between with
/// `pi(i) < pi(k) < pi(j)`.
pub fn is_free_rise(pi: &Involution, i: usize, j: usize) -> bool {
    let (lo, hi) = (pi.apply(i), pi.apply(j));
    !(i + 1..j).any(|k| lo < pi.apply(k) && pi.apply(k) < hi)
}

/// The clan-level blocking test: no sign and no complete pair strictly
/// between `i` and `j`. Agrees with [`is_free_rise`] on rises between two
/// fixed points; for rises at excedances it is neither weaker nor stronger.
pub fn clan_blocking_free(clan: &Clan, i: usize, j: usize) -> bool {
    let mates = clan.mates();
    (i + 1..j).all(|k| match clan.symbols()[k] {
        Symbol::Plus | Symbol::Minus => false,
        Symbol::Pair(_) => {
            let m = mates[k].expect("paired");
            m <= i || m >= j
        }
    })
}

/// All rises of the underlying involution, ordered by `(i, j)`.
pub fn rises(clan: &Clan) -> Vec<Rise> {
    let pi = underlying_involution(clan);
    let n = pi.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pi.apply(i) >= pi.apply(j) {
                continue;
            }
            let kind = (pi.point_kind(i), pi.point_kind(j));
            let free = is_free_rise(&pi, i, j);
            out.push(Rise {
                i,
                j,
                kind,
                free,
                suitable: free && suitable_kind(kind),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use PointKind::*;

    fn clan(s: &str) -> Clan {
        Clan::parse(s, 3, 3).unwrap()
    }

    #[test]
    fn involution_examples() {
        assert_eq!(underlying_involution(&clan("+12-12")).to_string(), "156423");
        assert_eq!(underlying_involution(&clan("-+-+-+")).to_string(), "123456");
        let pi = underlying_involution(&clan("1+-221"));
        assert_eq!(pi.to_string(), "623541");
        assert!(Involution::new(pi.values().to_vec()).is_some());
    }

    #[test]
    fn length_examples() {
        assert_eq!(clan_length(&clan("-+-+-+")), 0);
        assert_eq!(clan_length(&clan("1+-221")), 6);
        assert_eq!(clan_length(&clan("1+22-1")), 6);
        let pi = Involution::parse_one_line("623541").unwrap();
        assert_eq!((pi.inversions(), pi.excedances()), (10, 2));
        assert_eq!(involution_length(&pi), 6);
        assert_eq!(
            involution_length(&Involution::parse_one_line("156423").unwrap()),
            5
        );
        assert_eq!(clan_length(&clan("+12-12")), 5);
        assert_eq!(
            involution_length(&Involution::parse_one_line("123").unwrap()),
            0
        );
    }

    #[test]
    fn parse_one_line_rejects_non_involutions() {
        assert!(Involution::parse_one_line("231").is_none());
        assert!(Involution::parse_one_line("103").is_none());
        assert!(Involution::parse_one_line("2,1,3").is_some());
    }

    fn find(rs: &[Rise], i: usize, j: usize) -> Rise {
        *rs.iter().find(|r| r.i == i && r.j == j).expect("rise")
    }

    #[test]
    fn rise_examples() {
        let rs = rises(&clan("-+-+-+"));
        let r = find(&rs, 0, 1);
        assert_eq!(r.kind, (Fixed, Fixed));
        assert!(r.free && r.suitable);
        assert!(!find(&rs, 0, 2).free);

        let rs = rises(&clan("+12-12"));
        assert_eq!(find(&rs, 0, 1).kind, (Fixed, Excedance));

        // pi = 623541: positions 2 and 3 (1-based) are fixed points
        let rs = rises(&clan("1+-221"));
        let r = find(&rs, 1, 2);
        assert_eq!(r.kind, (Fixed, Fixed));
        assert!(r.free);
    }

    #[test]
    fn suitable_implies_free_and_listed_type() {
        for c in crate::clan::all_clans(3, 3) {
            for r in rises(&c) {
                assert!(r.i < r.j);
                if r.suitable {
                    assert!(r.free);
                    assert!(suitable_kind(r.kind));
                }
            }
        }
    }

    #[test]
    fn blocking_test_matches_free_on_fixed_point_rises() {
        for c in crate::clan::all_clans(3, 3) {
            for r in rises(&c).into_iter().filter(|r| r.kind == (Fixed, Fixed)) {
                assert_eq!(r.free, clan_blocking_free(&c, r.i, r.j), "{c} {r}");
            }
        }
    }

    #[test]
    fn blocking_test_differs_on_excedance_rises() {
        // 1-212: the sign between the first mates does not block the ee rise.
        let c = Clan::parse("1-212", 2, 3).unwrap();
        let r = find(&rises(&c), 0, 2);
        assert!(r.free);
        assert!(!clan_blocking_free(&c, 0, 2));
        // -2121: the pair straddling j blocks the fe rise.
        let c = Clan::parse("-2121", 2, 3).unwrap();
        let r = find(&rises(&c), 0, 2);
        assert!(!r.free);
        assert!(clan_blocking_free(&c, 0, 2));
    }
}
