//! Möbius and cylinder octagonal-quadrilateral chain graphs.
//!
//! A chain of order `n` has two vertex rows of length `4n`, a plain row
//! `1..4n` and a primed row `1'..4n'`. Each row carries a path, rung edges
//! join the rows at positions `j ≡ 0, 1 (mod 4)`, and two closure edges wrap
//! the chain: crossing to the opposite row for the Möbius variant,
//! `(4n, 1')` and `(4n', 1)`, or staying within the row for the cylinder,
//! `(4n, 1)` and `(4n', 1')`. The result is `8n` vertices and `10n` edges
//! whose faces alternate between octagons and quadrilaterals.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Which vertex row a label lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Plain,
    Primed,
}

/// A 1-based vertex label `(side, index)` with `1 <= index <= 4n`.
///
/// Serialized as `p<j>` for plain and `q<j>` for primed vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub side: Side,
    pub index: usize,
}

impl VertexId {
    pub fn plain(index: usize) -> Self {
        Self { side: Side::Plain, index }
    }

    pub fn primed(index: usize) -> Self {
        Self { side: Side::Primed, index }
    }

    pub fn parse(label: &str) -> Result<Self> {
        let bad = || Error::BadGraphJson(format!("bad vertex label {label:?}"));
        let (head, tail) = label.split_at(1.min(label.len()));
        let index: usize = tail.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        match head {
            "p" => Ok(Self::plain(index)),
            "q" => Ok(Self::primed(index)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Plain => write!(f, "p{}", self.index),
            Side::Primed => write!(f, "q{}", self.index),
        }
    }
}

/// Closure rule for the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainVariant {
    /// Closure edges cross rows: `(4n, 1')` and `(4n', 1)`.
    Mobius,
    /// Closure edges stay within rows: `(4n, 1)` and `(4n', 1')`.
    Cylinder,
}

impl ChainVariant {
    pub fn name(self) -> &'static str {
        match self {
            ChainVariant::Mobius => "mobius",
            ChainVariant::Cylinder => "cylinder",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "mobius" => Ok(ChainVariant::Mobius),
            "cylinder" => Ok(ChainVariant::Cylinder),
            other => Err(Error::BadGraphJson(format!("unknown variant {other:?}"))),
        }
    }

    pub const BOTH: [ChainVariant; 2] = [ChainVariant::Mobius, ChainVariant::Cylinder];
}

impl fmt::Display for ChainVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether position `j` (1-based) carries a rung edge.
pub fn is_rung_position(j: usize) -> bool {
    matches!(j % 4, 0 | 1)
}

/// An immutable chain graph. Edges are stored `(min, max)` under the
/// `(side, index)` lexicographic order so edge-set equality is well defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainGraph {
    n: usize,
    variant: ChainVariant,
    edges: BTreeSet<(VertexId, VertexId)>,
}

fn normalize(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Build the chain of order `n` for the given closure variant.
pub fn build_chain(n: usize, variant: ChainVariant) -> Result<ChainGraph> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let graph = ChainGraph {
        n,
        variant,
        edges: raw_edge_list(n, variant)
            .into_iter()
            .map(|(a, b)| normalize(a, b))
            .collect(),
    };
    debug_assert_eq!(graph.edge_count(), 10 * n);
    Ok(graph)
}

/// Edge list in generation order: plain path, primed path, rungs ascending,
/// closure edges last.
fn raw_edge_list(n: usize, variant: ChainVariant) -> Vec<(VertexId, VertexId)> {
    let len = 4 * n;
    let mut edges = Vec::with_capacity(10 * n);
    for j in 1..len {
        edges.push((VertexId::plain(j), VertexId::plain(j + 1)));
    }
    for j in 1..len {
        edges.push((VertexId::primed(j), VertexId::primed(j + 1)));
    }
    for j in 1..=len {
        if is_rung_position(j) {
            edges.push((VertexId::plain(j), VertexId::primed(j)));
        }
    }
    match variant {
        ChainVariant::Mobius => {
            edges.push((VertexId::plain(len), VertexId::primed(1)));
            edges.push((VertexId::primed(len), VertexId::plain(1)));
        }
        ChainVariant::Cylinder => {
            edges.push((VertexId::plain(len), VertexId::plain(1)));
            edges.push((VertexId::primed(len), VertexId::primed(1)));
        }
    }
    edges
}

impl ChainGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> ChainVariant {
        self.variant
    }

    pub fn vertex_count(&self) -> usize {
        8 * self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in matrix order: `p1..p4n` then `q1..q4n`.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        let len = 4 * self.n;
        (1..=len)
            .map(VertexId::plain)
            .chain((1..=len).map(VertexId::primed))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index >= 1 && v.index <= 4 * self.n
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.contains(&normalize(a, b))
    }

    /// Degree of a vertex, counted from the stored edge set.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v.to_string(), 4 * self.n));
        }
        Ok(self.edges.iter().filter(|(a, b)| *a == v || *b == v).count())
    }

    /// Deterministic edge order: plain path, primed path, rungs, closures.
    pub fn canonical_edge_list(&self) -> Vec<(VertexId, VertexId)> {
        raw_edge_list(self.n, self.variant)
    }

    /// Row index of a vertex in the Laplacian ordering (plain row first).
    pub fn matrix_index(&self, v: VertexId) -> usize {
        debug_assert!(self.contains_vertex(v));
        match v.side {
            Side::Plain => v.index - 1,
            Side::Primed => 4 * self.n + v.index - 1,
        }
    }

    /// Edges as (matrix index, matrix index) pairs.
    pub fn edges_by_index(&self) -> Vec<(usize, usize)> {
        self.canonical_edge_list()
            .iter()
            .map(|&(a, b)| (self.matrix_index(a), self.matrix_index(b)))
            .collect()
    }

    /// Adjacency lists over matrix indices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (u, v) in self.edges_by_index() {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; adj.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == adj.len()
    }

    /// Connected components left after dropping every rung edge, as sorted
    /// component sizes. Möbius chains leave one `8n`-cycle, cylinders two
    /// `4n`-cycles.
    pub fn rungless_component_sizes(&self) -> Vec<usize> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(a, b) in self.edges.iter() {
            // rung edges are exactly the equal-index cross-row pairs
            if a.side != b.side && a.index == b.index {
                continue;
            }
            let (u, v) = (self.matrix_index(a), self.matrix_index(b));
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; adj.len()];
        let mut sizes = Vec::new();
        for start in 0..adj.len() {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut size = 1;
            while let Some(u) = stack.pop() {
                assert_eq!(adj[u].len(), 2, "rungless subgraph must be 2-regular");
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        size += 1;
                        stack.push(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        sizes
    }

    /// JSON export.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "variant": self.variant.name(),
            "vertices": self.vertices().map(|v| v.to_string()).collect::<Vec<_>>(),
            "edges": self
                .canonical_edge_list()
                .iter()
                .map(|(a, b)| json!([a.to_string(), b.to_string()]))
                .collect::<Vec<_>>(),
        })
    }

    /// Strict JSON import: the payload must describe exactly the graph
    /// `build_chain(n, variant)` would produce.
    pub fn from_json(value: &Value) -> Result<ChainGraph> {
        let bad = |msg: &str| Error::BadGraphJson(msg.to_string());
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing integer field \"n\""))? as usize;
        let variant = ChainVariant::parse(
            value
                .get("variant")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing string field \"variant\""))?,
        )?;
        let graph = build_chain(n, variant)?;

        let vertices = value
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array field \"vertices\""))?;
        let mut parsed_vertices = BTreeSet::new();
        for v in vertices {
            let label = v.as_str().ok_or_else(|| bad("vertex labels must be strings"))?;
            parsed_vertices.insert(VertexId::parse(label)?);
        }
        if parsed_vertices != graph.vertices().collect() {
            return Err(bad("vertex set does not match the declared chain"));
        }

        let edges = value
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array field \"edges\""))?;
        let mut parsed_edges = BTreeSet::new();
        for e in edges {
            let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                bad("edges must be two-element arrays")
            })?;
            let a = VertexId::parse(pair[0].as_str().ok_or_else(|| bad("edge endpoints must be strings"))?)?;
            let b = VertexId::parse(pair[1].as_str().ok_or_else(|| bad("edge endpoints must be strings"))?)?;
            parsed_edges.insert(normalize(a, b));
        }
        if parsed_edges != graph.edges {
            return Err(bad("edge set does not match the declared chain"));
        }
        Ok(graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts_match_order() {
        let g = build_chain(1, ChainVariant::Mobius).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 10);
        let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v).unwrap()).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 2, 3, 3, 3, 3]);

        let g3 = build_chain(3, ChainVariant::Cylinder).unwrap();
        assert_eq!(g3.vertex_count(), 24);
        assert_eq!(g3.edge_count(), 30);
    }

    #[test]
    fn rejects_order_zero() {
        assert!(matches!(build_chain(0, ChainVariant::Mobius), Err(Error::ZeroOrder)));
    }

    #[test]
    fn rung_positions_and_closures() {
        let g = build_chain(2, ChainVariant::Mobius).unwrap();
        let rungs: Vec<usize> = (1..=8)
            .filter(|&j| g.has_edge(VertexId::plain(j), VertexId::primed(j)))
            .collect();
        assert_eq!(rungs, vec![1, 4, 5, 8]);
        assert!(g.has_edge(VertexId::plain(8), VertexId::primed(1)));
        assert!(g.has_edge(VertexId::primed(8), VertexId::plain(1)));
        assert!(!g.has_edge(VertexId::plain(8), VertexId::plain(1)));
    }

    #[test]
    fn degree_examples() {
        let g = build_chain(1, ChainVariant::Mobius).unwrap();
        assert_eq!(g.degree(VertexId::plain(1)).unwrap(), 3);
        assert_eq!(g.degree(VertexId::plain(2)).unwrap(), 2);
        let g2 = build_chain(2, ChainVariant::Cylinder).unwrap();
        assert_eq!(g2.degree(VertexId::primed(8)).unwrap(), 3);
        assert!(g.degree(VertexId::plain(9)).is_err());
    }

    #[test]
    fn canonical_list_closure_order() {
        let cyl = build_chain(1, ChainVariant::Cylinder).unwrap();
        let list = cyl.canonical_edge_list();
        assert_eq!(
            &list[list.len() - 2..],
            &[
                (VertexId::plain(4), VertexId::plain(1)),
                (VertexId::primed(4), VertexId::primed(1)),
            ]
        );
        let mob = build_chain(1, ChainVariant::Mobius).unwrap();
        let list = mob.canonical_edge_list();
        assert_eq!(
            &list[list.len() - 2..],
            &[
                (VertexId::plain(4), VertexId::primed(1)),
                (VertexId::primed(4), VertexId::plain(1)),
            ]
        );
        assert_eq!(build_chain(2, ChainVariant::Mobius).unwrap().canonical_edge_list().len(), 20);
    }

    #[test]
    fn rungless_structure() {
        for n in 1..=6 {
            let mob = build_chain(n, ChainVariant::Mobius).unwrap();
            assert_eq!(mob.rungless_component_sizes(), vec![8 * n]);
            let cyl = build_chain(n, ChainVariant::Cylinder).unwrap();
            assert_eq!(cyl.rungless_component_sizes(), vec![4 * n, 4 * n]);
        }
    }

    #[test]
    fn json_round_trip() {
        for variant in ChainVariant::BOTH {
            let g = build_chain(3, variant).unwrap();
            let back = ChainGraph::from_json(&g.to_json()).unwrap();
            assert_eq!(back.canonical_edge_list(), g.canonical_edge_list());
        }
        let mut tampered = build_chain(1, ChainVariant::Mobius).unwrap().to_json();
        tampered["edges"].as_array_mut().unwrap().pop();
        assert!(ChainGraph::from_json(&tampered).is_err());
    }

    proptest! {
        #[test]
        fn structural_invariants(n in 1usize..=12, mobius in any::<bool>()) {
            let variant = if mobius { ChainVariant::Mobius } else { ChainVariant::Cylinder };
            let g = build_chain(n, variant).unwrap();
            prop_assert_eq!(g.vertex_count(), 8 * n);
            prop_assert_eq!(g.edge_count(), 10 * n);
            let degree_sum: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
            prop_assert_eq!(degree_sum, 20 * n);
            let deg3 = g.vertices().filter(|&v| g.degree(v).unwrap() == 3).count();
            prop_assert_eq!(deg3, 4 * n);
            for v in g.vertices() {
                let expect = if is_rung_position(v.index) { 3 } else { 2 };
                prop_assert_eq!(g.degree(v).unwrap(), expect);
            }
            prop_assert!(g.is_connected());
            // determinism
            let again = build_chain(n, variant).unwrap();
            prop_assert_eq!(again.canonical_edge_list(), g.canonical_edge_list());
        }
    }
}
