//! Hasse diagram export as Graphviz DOT and as a JSON document.

use std::collections::HashSet;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::clan::Clan;
use crate::cover::{CoverLabel, MoveKind};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poset::{Edge, SectPoset};
use crate::sect::sect_of;
use crate::verify::{verify_el_interval, Limits};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub p: usize,
    pub q: usize,
    pub lambda: Vec<usize>,
    pub elements: Vec<ElementRecord>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementRecord {
    pub id: usize,
    pub clan: String,
    pub phi: Vec<usize>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub from: usize,
    pub to: usize,
    pub label: [usize; 2],
    #[serde(rename = "move")]
    pub kind: String,
}

impl PosetDocument {
    pub fn from_poset(poset: &SectPoset) -> Self {
        PosetDocument {
            p: poset.p(),
            q: poset.q(),
            lambda: poset.lambda().rows().to_vec(),
            elements: (0..poset.len())
                .map(|x| ElementRecord {
                    id: x,
                    clan: poset.element(x).to_string(),
                    phi: poset.phi(x).values().to_vec(),
                    rank: poset.rank(x),
                })
                .collect(),
            edges: poset
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    from: e.from,
                    to: e.to,
                    label: [e.label.first, e.label.second],
                    kind: e.kind.as_str().to_string(),
                })
                .collect(),
        }
    }

    /// Rebuilds the poset, checking every recorded rank, φ and sect.
    pub fn to_poset(&self) -> Result<SectPoset> {
        let bad = |msg: String| Error::Document(msg);
        let lambda = Partition::new(self.lambda.clone())?;
        lambda.check_fits(self.p, self.q)?;
        let mut elements = Vec::with_capacity(self.elements.len());
        for (pos, record) in self.elements.iter().enumerate() {
            if record.id != pos {
                return Err(bad(format!("element {pos} has id {}", record.id)));
            }
            let clan = Clan::parse(&record.clan, self.p, self.q)?;
            if sect_of(&clan) != lambda {
                return Err(bad(format!("{clan} is not in the sect of ({lambda})")));
            }
            elements.push(clan);
        }
        let edges = self
            .edges
            .iter()
            .map(|r| {
                let kind = MoveKind::parse(&r.kind)
                    .ok_or_else(|| bad(format!("unknown move {:?}", r.kind)))?;
                Ok(Edge {
                    from: r.from,
                    to: r.to,
                    label: CoverLabel::new(r.label[0], r.label[1]),
                    kind,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let poset = SectPoset::from_parts(self.p, self.q, lambda, elements, edges)?;
        for (x, record) in self.elements.iter().enumerate() {
            if poset.rank(x) != record.rank || poset.phi(x).values() != record.phi.as_slice() {
                return Err(bad(format!("element {x} has inconsistent rank or phi")));
            }
        }
        Ok(poset)
    }
}

/// Pretty-printed JSON with a trailing newline; keys in schema order.
pub fn to_json(poset: &SectPoset) -> String {
    let mut text = serde_json::to_string_pretty(&PosetDocument::from_poset(poset))
        .expect("document serializes");
    text.push('\n');
    text
}

pub fn from_json(text: &str) -> Result<SectPoset> {
    let doc: PosetDocument =
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    doc.to_poset()
}

/// Edges of the unique increasing chain from the bottom to the top, if the
/// sect has a top and that chain exists.
pub fn increasing_spine(poset: &SectPoset) -> Vec<(usize, usize)> {
    let Some(top) = poset.top() else {
        return Vec::new();
    };
    let limits = Limits {
        max_chains: u128::MAX,
    };
    match verify_el_interval(poset, poset.bottom(), top, limits) {
        Ok(r) if r.weak_lex() => r
            .lex_least_chain
            .map(|c| c.windows(2).map(|w| (w[0], w[1])).collect())
            .unwrap_or_default(),
        _ => Vec::new(),
    }
}

fn quote(text: &str) -> String {
    format!("\"{}\"", text.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Bottom-to-top DOT; nodes read `clan | phi`, the increasing spine is red.
pub fn to_dot(poset: &SectPoset) -> String {
    let spine: HashSet<(usize, usize)> = increasing_spine(poset).into_iter().collect();
    let mut out = String::new();
    let _ = writeln!(out, "digraph sect {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    let _ = writeln!(out, "  edge [arrowhead=none];");
    for x in 0..poset.len() {
        let label = format!("{} | {}", poset.element(x), poset.phi(x));
        let _ = writeln!(out, "  n{x} [label={}];", quote(&label));
    }
    for e in poset.edges() {
        let red = if spine.contains(&(e.from, e.to)) {
            ", color=red, fontcolor=red, penwidth=2"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  n{} -> n{} [label={}{red}];",
            e.from,
            e.to,
            quote(&e.label.to_string())
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn staircase() -> SectPoset {
        SectPoset::build(3, 3, &"3,2,1".parse().unwrap()).unwrap()
    }

    #[test]
    fn dot_of_the_staircase() {
        let dot = to_dot(&staircase());
        assert_eq!(dot.matches(" [label=\"").count(), 15 + 24);
        assert_eq!(dot.matches("penwidth=2").count(), 6);
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("\"1+22-1 | (3,2,1)\""));
    }

    #[test]
    fn single_node_exports() {
        let poset = SectPoset::build(3, 3, &Partition::empty()).unwrap();
        let dot = to_dot(&poset);
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("n0 [label").count(), 1);
        let doc = PosetDocument::from_poset(&poset);
        assert_eq!((doc.elements.len(), doc.edges.len()), (1, 0));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let text = to_json(&staircase());
        let again = to_json(&from_json(&text).unwrap());
        assert_eq!(text, again);
        assert!(text.starts_with("{\n  \"p\": 3,\n  \"q\": 3,\n  \"lambda\""));
        assert!(text.contains("\"move\": \"ff\""));
    }

    #[test]
    fn import_rejects_tampering() {
        let text = to_json(&staircase());
        assert!(from_json(&text.replacen("\"rank\": 0", "\"rank\": 1", 1)).is_err());
        assert!(from_json(&text.replacen("\"move\": \"ff\"", "\"move\": \"zz\"", 1)).is_err());
        assert!(from_json("{}").is_err());
    }
}
