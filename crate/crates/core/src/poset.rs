//! A sect as an explicit graded poset: elements, labelled Hasse edges and
//! the reachability order.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::clan::Clan;
use crate::cover::{sect_covers, CoverLabel, MoveKind};
use crate::error::{Error, Result};
use crate::involution::clan_length;
use crate::partition::Partition;
use crate::phi::{partial_permutation, PartialPermutation};
use crate::sect::enumerate_sect;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: CoverLabel,
    pub kind: MoveKind,
}

#[derive(Clone, Debug)]
pub struct SectPoset {
    p: usize,
    q: usize,
    lambda: Partition,
    elements: Vec<Clan>,
    index: HashMap<Clan, usize>,
    ranks: Vec<usize>,
    phis: Vec<PartialPermutation>,
    /// Sorted by `(from, label, to)`.
    edges: Vec<Edge>,
    /// For each element, the range of its outgoing edges in `edges`.
    out: Vec<std::ops::Range<usize>>,
    /// `above[x]` holds every `y` with `x <= y`, including `x`.
    above: Vec<FixedBitSet>,
}

impl SectPoset {
    pub fn build(p: usize, q: usize, lambda: &Partition) -> Result<Self> {
        let elements = enumerate_sect(p, q, lambda)?;
        let index: HashMap<Clan, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let mut edges = Vec::new();
        for (from, clan) in elements.iter().enumerate() {
            for cover in sect_covers(clan) {
                let to = index[&cover.target];
                edges.push(Edge {
                    from,
                    to,
                    label: cover.label,
                    kind: cover.mv.kind,
                });
            }
        }
        Self::from_parts(p, q, lambda.clone(), elements, edges)
    }

    /// Assembles a poset from elements and edges, recomputing ranks, partial
    /// permutations and reachability. Edges must go up exactly one rank.
    pub fn from_parts(
        p: usize,
        q: usize,
        lambda: Partition,
        elements: Vec<Clan>,
        mut edges: Vec<Edge>,
    ) -> Result<Self> {
        let n = elements.len();
        let index: HashMap<Clan, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        if index.len() != n {
            return Err(Error::Document("duplicate element".into()));
        }
        let ranks: Vec<usize> = elements.iter().map(clan_length).collect();
        let phis = elements.iter().map(partial_permutation).collect();
        for e in &edges {
            if e.from >= n || e.to >= n || ranks[e.to] != ranks[e.from] + 1 {
                return Err(Error::Document(format!(
                    "edge {} -> {} does not join consecutive ranks",
                    e.from, e.to
                )));
            }
        }
        edges.sort_by_key(|e| (e.from, e.label, e.to));
        edges.dedup();

        let mut out = vec![0..0; n];
        let mut start = 0;
        for (x, range) in out.iter_mut().enumerate() {
            let end = start + edges[start..].iter().take_while(|e| e.from == x).count();
            *range = start..end;
            start = end;
        }

        // Reachability, processing elements from the highest rank down.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(ranks[x]));
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &x in &order {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for e in &edges[out[x].clone()] {
                set.union_with(&above[e.to]);
            }
            above[x] = set;
        }

        Ok(SectPoset {
            p,
            q,
            lambda,
            elements,
            index,
            ranks,
            phis,
            edges,
            out,
            above,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Clan] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &Clan {
        &self.elements[x]
    }

    pub fn index_of(&self, clan: &Clan) -> Result<usize> {
        self.index
            .get(clan)
            .copied()
            .ok_or_else(|| Error::UnknownElement(clan.to_string()))
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn phi(&self, x: usize) -> &PartialPermutation {
        &self.phis[x]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges leaving `x`, ordered by label.
    pub fn up_edges(&self, x: usize) -> &[Edge] {
        &self.edges[self.out[x].clone()]
    }

    /// Indices into [`SectPoset::edges`] of the edges leaving `x`.
    pub fn up_edge_indices(&self, x: usize) -> std::ops::Range<usize> {
        self.out[x].clone()
    }

    pub fn edge(&self, from: usize, to: usize) -> Option<&Edge> {
        self.up_edges(from).iter().find(|e| e.to == to)
    }

    /// `x <= y` by reachability along Hasse edges.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.out[x].is_empty())
            .collect()
    }

    /// The greatest element, when there is one.
    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements()[..] {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Elements of the closed interval `[x, y]`.
    pub fn interval(&self, x: usize, y: usize) -> Vec<usize> {
        self.above[x].ones().filter(|&z| self.leq(z, y)).collect()
    }

    fn check_leq(&self, x: usize, y: usize) -> Result<()> {
        if self.leq(x, y) {
            Ok(())
        } else {
            Err(Error::NotBelow {
                lower: self.elements[x].to_string(),
                upper: self.elements[y].to_string(),
            })
        }
    }

    /// Every saturated chain of `[x, y]`, depth first with edges taken in
    /// label order; the first chain produced is the lexicographically least.
    pub fn maximal_chains(&self, x: usize, y: usize) -> Result<MaximalChains<'_>> {
        self.check_leq(x, y)?;
        Ok(MaximalChains {
            poset: self,
            top: y,
            nodes: vec![x],
            labels: Vec::new(),
            cursor: vec![self.out[x].start],
            done: false,
        })
    }
}

/// A saturated chain: `nodes[i] -> nodes[i + 1]` carries `labels[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub nodes: Vec<usize>,
    pub labels: Vec<CoverLabel>,
}

/// Streaming depth-first enumeration; state is one path of the interval.
pub struct MaximalChains<'a> {
    poset: &'a SectPoset,
    top: usize,
    nodes: Vec<usize>,
    labels: Vec<CoverLabel>,
    /// Next edge to try from each node on the path.
    cursor: Vec<usize>,
    done: bool,
}

impl Iterator for MaximalChains<'_> {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        if self.done {
            return None;
        }
        if self.nodes.len() == 1 && self.nodes[0] == self.top {
            self.done = true;
            return Some(Chain {
                nodes: self.nodes.clone(),
                labels: Vec::new(),
            });
        }
        loop {
            let depth = self.nodes.len() - 1;
            let here = self.nodes[depth];
            let end = self.poset.out[here].end;
            let next = (self.cursor[depth]..end)
                .find(|&i| self.poset.leq(self.poset.edges[i].to, self.top));
            match next {
                None => {
                    self.nodes.pop();
                    self.cursor.pop();
                    if self.nodes.is_empty() {
                        self.done = true;
                        return None;
                    }
                    self.labels.pop();
                }
                Some(i) => {
                    let e = self.poset.edges[i];
                    self.cursor[depth] = i + 1;
                    self.nodes.push(e.to);
                    self.labels.push(e.label);
                    self.cursor.push(self.poset.out[e.to].start);
                    if e.to == self.top {
                        let chain = Chain {
                            nodes: self.nodes.clone(),
                            labels: self.labels.clone(),
                        };
                        self.nodes.pop();
                        self.cursor.pop();
                        self.labels.pop();
                        return Some(chain);
                    }
                }
            }
        }
    }
}
