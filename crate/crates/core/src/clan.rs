//! The clan data type: strings over `+`, `-` and matched natural-number pairs.
//!
//! Positions are 0-based throughout the crate. Pair ids are kept in canonical
//! form (1, 2, 3, ... in order of first occurrence), so two clans that differ
//! only by a renaming of their pairs compare equal.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Plus,
    Minus,
    Pair(u32),
}

impl Symbol {
    pub fn is_sign(self) -> bool {
        !matches!(self, Symbol::Pair(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clan {
    p: usize,
    q: usize,
    symbols: Vec<Symbol>,
}

impl Clan {
    /// Validates `symbols` as a `(p,q)`-clan and renumbers its pairs canonically.
    pub fn new(symbols: Vec<Symbol>, p: usize, q: usize) -> Result<Self> {
        if symbols.len() != p + q {
            return Err(Error::WrongLength {
                expected: p + q,
                found: symbols.len(),
            });
        }
        let mut counts = std::collections::BTreeMap::new();
        for s in &symbols {
            if let Symbol::Pair(id) = s {
                *counts.entry(*id).or_insert(0usize) += 1;
            }
        }
        if let Some((&id, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::PairCount { id, count });
        }
        let plus = symbols.iter().filter(|s| **s == Symbol::Plus).count();
        let minus = symbols.iter().filter(|s| **s == Symbol::Minus).count();
        let diff = p as i64 - q as i64;
        if plus as i64 - minus as i64 != diff {
            return Err(Error::SignBalance { plus, minus, diff });
        }
        Ok(Self::canonical(symbols, p, q))
    }

    /// Builds a clan from symbols already known to be valid. Pair ids only need
    /// to be distinct between pairs.
    pub(crate) fn canonical(mut symbols: Vec<Symbol>, p: usize, q: usize) -> Self {
        let mut renames: Vec<(u32, u32)> = Vec::new();
        for s in symbols.iter_mut() {
            if let Symbol::Pair(id) = s {
                let new = match renames.iter().find(|(old, _)| old == id) {
                    Some(&(_, new)) => new,
                    None => {
                        let new = renames.len() as u32 + 1;
                        renames.push((*id, new));
                        new
                    }
                };
                *id = new;
            }
        }
        debug_assert_eq!(symbols.len(), p + q);
        Clan { p, q, symbols }
    }

    /// Parses either the compact form (`1+-221`) or the token form
    /// (`1 + - 2 2 1`). Text containing whitespace is read as tokens.
    pub fn parse(text: &str, p: usize, q: usize) -> Result<Self> {
        let text = text.trim();
        let symbols = if text.chars().any(char::is_whitespace) {
            text.split_whitespace()
                .map(parse_token)
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| parse_token(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>>>()?
        };
        Clan::new(symbols, p, q)
    }

    /// The clan with no pairs whose `+`/`-` string is `signs`.
    pub fn matchless(signs: &[Symbol], p: usize, q: usize) -> Result<Self> {
        if signs.iter().any(|s| !s.is_sign()) {
            return Err(Error::NotMatchless(render_compact(signs)));
        }
        Clan::new(signs.to_vec(), p, q)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn pair_count(&self) -> usize {
        self.symbols.iter().filter(|s| !s.is_sign()).count() / 2
    }

    pub fn is_matchless(&self) -> bool {
        self.symbols.iter().all(|s| s.is_sign())
    }

    /// `mates()[i]` is the position of the other half of the pair at `i`.
    pub fn mates(&self) -> Vec<Option<usize>> {
        let mut mates = vec![None; self.len()];
        let mut open: Vec<(u32, usize)> = Vec::new();
        for (i, s) in self.symbols.iter().enumerate() {
            if let Symbol::Pair(id) = *s {
                if let Some(idx) = open.iter().position(|&(o, _)| o == id) {
                    let (_, first) = open.swap_remove(idx);
                    mates[first] = Some(i);
                    mates[i] = Some(first);
                } else {
                    open.push((id, i));
                }
            }
        }
        mates
    }

    /// Pairs as `(first mate, second mate)`, ordered by first mate.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mates()
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.filter(|&j| j > i).map(|j| (i, j)))
            .collect()
    }

    /// The matchless clan obtained by turning every first mate into `-` and
    /// every second mate into `+`.
    pub fn base_clan(&self) -> Clan {
        let mates = self.mates();
        let symbols = self
            .symbols
            .iter()
            .enumerate()
            .map(|(i, &s)| match mates[i] {
                Some(j) if j > i => Symbol::Minus,
                Some(_) => Symbol::Plus,
                None => s,
            })
            .collect();
        Clan {
            p: self.p,
            q: self.q,
            symbols,
        }
    }

    /// Returns a copy with `symbols` replaced, renumbered canonically.
    pub(crate) fn with_symbols(&self, symbols: Vec<Symbol>) -> Clan {
        Clan::canonical(symbols, self.p, self.q)
    }

    pub fn render_compact(&self) -> Result<String> {
        if self.pair_count() > 9 {
            return Err(Error::CompactOverflow);
        }
        Ok(render_compact(&self.symbols))
    }

    pub fn render_tokens(&self) -> String {
        self.symbols
            .iter()
            .map(|s| match s {
                Symbol::Plus => "+".to_string(),
                Symbol::Minus => "-".to_string(),
                Symbol::Pair(id) => id.to_string(),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn render_compact(symbols: &[Symbol]) -> String {
    symbols
        .iter()
        .map(|s| match s {
            Symbol::Plus => '+',
            Symbol::Minus => '-',
            Symbol::Pair(id) => char::from_digit(*id, 10).unwrap_or('?'),
        })
        .collect()
}

fn parse_token(token: &str) -> Result<Symbol> {
    match token {
        "+" => Ok(Symbol::Plus),
        "-" | "\u{2212}" => Ok(Symbol::Minus),
        t => t
            .parse::<u32>()
            .map(Symbol::Pair)
            .map_err(|_| Error::InvalidToken(t.to_string())),
    }
}

/// Compact form when every pair id is a single digit, token form otherwise.
impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render_compact() {
            Ok(s) => f.write_str(&s),
            Err(_) => f.write_str(&self.render_tokens()),
        }
    }
}

/// Every `(p,q)`-clan, in no particular order. Exponential; meant for small
/// `p+q`.
pub fn all_clans(p: usize, q: usize) -> Vec<Clan> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        pos: usize,
        n: usize,
        plus_left: usize,
        minus_left: usize,
        open: &mut Vec<u32>,
        next_id: u32,
        current: &mut Vec<Symbol>,
        out: &mut Vec<Vec<Symbol>>,
    ) {
        let remaining = n - pos;
        if remaining == 0 {
            if open.is_empty() && plus_left == 0 && minus_left == 0 {
                out.push(current.clone());
            }
            return;
        }
        if open.len() + plus_left + minus_left > remaining {
            return;
        }
        if plus_left > 0 {
            current.push(Symbol::Plus);
            go(
                pos + 1,
                n,
                plus_left - 1,
                minus_left,
                open,
                next_id,
                current,
                out,
            );
            current.pop();
        }
        if minus_left > 0 {
            current.push(Symbol::Minus);
            go(
                pos + 1,
                n,
                plus_left,
                minus_left - 1,
                open,
                next_id,
                current,
                out,
            );
            current.pop();
        }
        for idx in 0..open.len() {
            let id = open.remove(idx);
            current.push(Symbol::Pair(id));
            go(
                pos + 1,
                n,
                plus_left,
                minus_left,
                open,
                next_id,
                current,
                out,
            );
            current.pop();
            open.insert(idx, id);
        }
        open.push(next_id);
        current.push(Symbol::Pair(next_id));
        go(
            pos + 1,
            n,
            plus_left,
            minus_left,
            open,
            next_id + 1,
            current,
            out,
        );
        current.pop();
        open.pop();
    }

    let n = p + q;
    let mut out = Vec::new();
    // k pairs leave p-k plus signs and q-k minus signs.
    for pairs in 0..=p.min(q) {
        let mut raw = Vec::new();
        go(
            0,
            n,
            p - pairs,
            q - pairs,
            &mut Vec::new(),
            1,
            &mut Vec::new(),
            &mut raw,
        );
        out.extend(
            raw.into_iter()
                .filter(|s| s.iter().filter(|x| !x.is_sign()).count() == 2 * pairs)
                .map(|s| Clan::canonical(s, p, q)),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_compact_and_token_forms() {
        let a = Clan::parse("1+-221", 3, 3).unwrap();
        let b = Clan::parse("1 + - 2 2 1", 3, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1+-221");
        assert_eq!(a.pairs(), vec![(0, 5), (3, 4)]);
    }

    #[test]
    fn equivalent_clans_are_equal() {
        let a = Clan::parse("+1212-", 3, 3).unwrap();
        let b = Clan::parse("+1717-", 3, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_malformed_clans() {
        assert_eq!(
            Clan::parse("1+1", 3, 1),
            Err(Error::WrongLength {
                expected: 4,
                found: 3
            })
        );
        assert!(Clan::parse("+1+1", 3, 1).is_ok());
        assert!(Clan::parse("12+21", 3, 2).is_ok());
        assert!(matches!(
            Clan::parse("1+-121", 3, 3),
            Err(Error::PairCount { id: 1, count: 3 })
        ));
        assert!(matches!(
            Clan::parse("++--++", 3, 3),
            Err(Error::SignBalance { .. })
        ));
        assert!(matches!(
            Clan::parse("1x1---", 3, 3),
            Err(Error::InvalidToken(_))
        ));
    }

    #[test]
    fn unicode_minus_is_accepted() {
        let a = Clan::parse("1+\u{2212}221", 3, 3).unwrap();
        assert_eq!(a.to_string(), "1+-221");
    }

    #[test]
    fn base_clan_examples() {
        let base = |s: &str| Clan::parse(s, 3, 3).unwrap().base_clan().to_string();
        assert_eq!(base("1+-221"), "-+--++");
        assert_eq!(base("-+-+-+"), "-+-+-+");
        assert_eq!(base("1+21-2"), "-+-+-+");
    }

    #[test]
    fn many_pairs_fall_back_to_tokens() {
        let mut symbols = Vec::new();
        for id in 1..=10 {
            symbols.push(Symbol::Pair(id));
        }
        for id in (1..=10).rev() {
            symbols.push(Symbol::Pair(id));
        }
        let clan = Clan::new(symbols, 10, 10).unwrap();
        assert_eq!(clan.render_compact(), Err(Error::CompactOverflow));
        let text = clan.to_string();
        assert!(text.starts_with("1 2 3"));
        assert_eq!(Clan::parse(&text, 10, 10).unwrap(), clan);
    }

    #[test]
    fn all_clans_small_counts() {
        // (1,1): +-, -+, 11
        assert_eq!(all_clans(1, 1).len(), 3);
        let mut all = all_clans(2, 2);
        let n = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), n);
    }
}
