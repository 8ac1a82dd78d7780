//! Finite simplicial graphs over string-labelled vertices.
//!
//! Vertices are kept in lexicographic label order and every operation
//! iterates in that order, so repeated runs over the same input produce
//! byte-identical output. Vertex subsets are bitmasks over the canonical
//! order, which keeps the exponential searches elsewhere in the crate
//! cheap.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap imposed by the `u64` bitmask representation of [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices of some [`SimplicialGraph`], as a bitmask over
/// the graph's canonical vertex order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn full(n: usize) -> Self {
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet(0);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex index in the set, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate over member indices in increasing (canonical) order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Lexicographic order on the increasing index sequences, e.g.
    /// `{0,3} < {1,2}` and `{1} < {1,2}`. This is the "lexicographically
    /// least vertex set" order used for canonical enumeration, and differs
    /// from the numeric order on the underlying masks.
    pub fn lex_cmp(self, other: VertexSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Witness that a graph is the join of the two sides: every cross pair is
/// an edge. `nontrivial` holds exactly when neither side spans a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinWitness {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub nontrivial: bool,
}

/// A finite simplicial graph: distinct string labels, no loops, no
/// multi-edges. Labels are sorted, and all indices refer to that order.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialGraph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialGraph({} vertices: ", self.labels.len())?;
        for (u, v) in self.edges() {
            write!(f, " {}-{}", self.labels[u], self.labels[v])?;
        }
        write!(f, ")")
    }
}

impl SimplicialGraph {
    /// Build a graph from labels and label pairs. Labels are deduplicated
    /// and sorted; edges may be given in any order.
    pub fn new<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<SimplicialGraph> {
        let mut names: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        for (u, v) in edges {
            names.push(u.as_ref().to_string());
            names.push(v.as_ref().to_string());
        }
        names.sort();
        names.dedup();
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(names.len()));
        }
        let mut g = SimplicialGraph {
            adj: vec![VertexSet::EMPTY; names.len()],
            labels: names,
        };
        for (u, v) in edges {
            let ui = g.index_of(u.as_ref())?;
            let vi = g.index_of(v.as_ref())?;
            if ui == vi {
                return Err(Error::SelfLoop(u.as_ref().to_string()));
            }
            g.adj[ui].insert(vi);
            g.adj[vi].insert(ui);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| Error::UnknownVertex(label.to_string()))
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.labels.len())
    }

    pub fn vertex_set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for l in labels {
            s.insert(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    pub fn set_labels(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighbourhood of `v` as a set (open: `v` itself excluded).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.labels.len() {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph spanned by `s`: vertex set `s`, and exactly the edges
    /// of `self` with both endpoints in `s`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<SimplicialGraph> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(Error::NotASubset);
        }
        let keep: Vec<usize> = s.iter().collect();
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut adj = vec![VertexSet::EMPTY; keep.len()];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.adj[u].contains(v) {
                    adj[i].insert(j);
                }
            }
        }
        Ok(SimplicialGraph { labels, adj })
    }

    /// Same vertices, complemented edge set.
    pub fn complement(&self) -> SimplicialGraph {
        let n = self.labels.len();
        let full = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut a = full.difference(self.adj[v]);
                a.remove(v);
                a
            })
            .collect();
        SimplicialGraph {
            labels: self.labels.clone(),
            adj,
        }
    }

    /// Every pair of vertices is an edge. The empty graph and a single
    /// vertex count as cliques.
    pub fn is_clique(&self) -> bool {
        self.set_is_clique(self.vertex_set())
    }

    /// Whether `s` spans a clique in this graph.
    pub fn set_is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.difference(VertexSet::singleton(v)).is_subset_of(self.adj[v]))
    }

    /// Whether `s` spans a set with no edges at all.
    pub fn set_is_edgeless(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].intersection(s).is_empty())
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|a| a.is_empty())
    }

    /// Connected components of the subgraph spanned by `s`, each a set,
    /// ordered by smallest member.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut remaining = s;
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v].intersection(s).difference(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(self.vertex_set()).len() <= 1
    }

    pub fn set_is_connected(&self, s: VertexSet) -> bool {
        self.components_within(s).len() <= 1
    }

    /// Connected and acyclic. The single vertex is a tree; the empty graph
    /// is not considered one.
    pub fn is_tree(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.is_connected() && self.edge_count() == n - 1
    }

    pub fn set_is_tree(&self, s: VertexSet) -> bool {
        if s.is_empty() || !self.set_is_connected(s) {
            return false;
        }
        let edges: usize = s.iter().map(|v| self.adj[v].intersection(s).len()).sum::<usize>() / 2;
        edges == s.len() - 1
    }

    /// Whether some edge of the graph lies inside `s`... negated clique on
    /// the complement; used by join detection.
    pub fn set_has_non_edge(&self, s: VertexSet) -> bool {
        !self.set_is_clique(s)
    }

    /// Connected components of the complement, restricted to `s`.
    pub fn complement_components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut remaining = s;
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    let non_nb = s
                        .difference(self.adj[v])
                        .difference(VertexSet::singleton(v));
                    next = next.union(non_nb.difference(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Decompose the graph as a join of two non-empty sides, if possible.
    ///
    /// A graph is a join exactly when its complement is disconnected. The
    /// returned witness prefers `nontrivial = true` whenever some join
    /// split has a non-edge on both sides, which happens exactly when the
    /// complement has at least two components of two or more vertices.
    /// `side_a` always contains the smallest vertex.
    pub fn join_split(&self) -> Result<Option<JoinWitness>> {
        let n = self.vertex_count();
        if n < 2 {
            return Err(Error::TooFewVertices { needed: 2, got: n });
        }
        Ok(self.join_split_within(self.vertex_set()))
    }

    /// [`Self::join_split`] for the subgraph spanned by `s`.
    pub fn join_split_within(&self, s: VertexSet) -> Option<JoinWitness> {
        let comps = self.complement_components_within(s);
        if comps.len() < 2 {
            return None;
        }
        let big: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].len() >= 2).collect();
        let mut side_a = comps[0];
        if big.len() >= 2 && comps[0].len() < 2 {
            // pull the first big component over so both sides keep a non-edge
            side_a = side_a.union(comps[big[0]]);
        }
        let side_b = s.difference(side_a);
        let nontrivial = self.set_has_non_edge(side_a) && self.set_has_non_edge(side_b);
        debug_assert_eq!(nontrivial, big.len() >= 2);
        Some(JoinWitness {
            side_a,
            side_b,
            nontrivial,
        })
    }

    /// Split `g = {x, y} * K` with `x`, `y` non-adjacent and `K` a
    /// non-empty clique. Returns `(pair, clique)` for the first qualifying
    /// pair in canonical order. The two-isolated-vertices case (empty `K`)
    /// is deliberately not reported here.
    pub fn suspension_of_clique(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.vertex_count();
        if n < 3 {
            return None;
        }
        let all = self.vertex_set();
        for x in 0..n {
            for y in x + 1..n {
                if self.adjacent(x, y) {
                    continue;
                }
                let pair = VertexSet::from_indices([x, y]);
                let clique = all.difference(pair);
                if !self.set_is_clique(clique) {
                    continue;
                }
                // every clique vertex must see both suspension points
                if clique.is_subset_of(self.adj[x]) && clique.is_subset_of(self.adj[y]) {
                    return Some((pair, clique));
                }
            }
        }
        None
    }

    /// Validate a join witness against this graph.
    pub fn check_join_witness(&self, w: &JoinWitness, require_nontrivial: bool) -> Result<()> {
        let all = self.vertex_set();
        if w.side_a.is_empty() || w.side_b.is_empty() {
            return Err(Error::Replay("join side is empty".into()));
        }
        if !w.side_a.intersection(w.side_b).is_empty() {
            return Err(Error::Replay("join sides overlap".into()));
        }
        if !w.side_a.union(w.side_b).is_subset_of(all) {
            return Err(Error::Replay("join sides leave the graph".into()));
        }
        for a in w.side_a.iter() {
            if !w.side_b.is_subset_of(self.adj[a]) {
                return Err(Error::Replay("missing cross edge in join".into()));
            }
        }
        let nontrivial = self.set_has_non_edge(w.side_a) && self.set_has_non_edge(w.side_b);
        if nontrivial != w.nontrivial {
            return Err(Error::Replay("nontrivial flag does not replay".into()));
        }
        if require_nontrivial && !nontrivial {
            return Err(Error::Replay("join is trivial".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_graph;

    fn c4() -> SimplicialGraph {
        parse_graph("vertices v1 v2 v3 v4\nedges v1 v2, v2 v3, v3 v4, v4 v1")
            .unwrap()
            .graph
    }

    fn c5() -> SimplicialGraph {
        parse_graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v1").unwrap().graph
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = c4();
        let s = g.vertex_set_from_labels(&["v1", "v2", "v3"]).unwrap();
        let h = g.induced_subgraph(s).unwrap();
        assert_eq!(h.labels(), &["v1", "v2", "v3"]);
        assert_eq!(h.edges().len(), 2);

        let s = g.vertex_set_from_labels(&["v1", "v3"]).unwrap();
        let h = g.induced_subgraph(s).unwrap();
        assert!(h.is_edgeless());

        let h = g.induced_subgraph(g.vertex_set()).unwrap();
        assert_eq!(h, g);

        let bad = VertexSet::full(5);
        assert!(g.induced_subgraph(bad).is_err());
    }

    #[test]
    fn complement_examples() {
        let g = c4();
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(c.complement(), g);

        let k3 = SimplicialGraph::new(&[], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert!(k3.complement().is_edgeless());
    }

    #[test]
    fn clique_examples() {
        let k3 = SimplicialGraph::new(&[], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert!(k3.is_clique());
        let e2 = SimplicialGraph::new(&["a", "b"], &[]).unwrap();
        assert!(!e2.is_clique());
        let empty = SimplicialGraph::new::<&str>(&[], &[]).unwrap();
        assert!(empty.is_clique());
    }

    #[test]
    fn join_split_examples() {
        let g = c4();
        let w = g.join_split().unwrap().unwrap();
        assert!(w.nontrivial);
        assert_eq!(g.set_labels(w.side_a), vec!["v1", "v3"]);
        assert_eq!(g.set_labels(w.side_b), vec!["v2", "v4"]);

        let p3 = SimplicialGraph::new(&[], &[("a", "b"), ("b", "c")]).unwrap();
        let w = p3.join_split().unwrap().unwrap();
        assert!(!w.nontrivial);
        let sides = [p3.set_labels(w.side_a), p3.set_labels(w.side_b)];
        assert!(sides.contains(&vec!["b".to_string()]));
        assert!(sides.contains(&vec!["a".to_string(), "c".to_string()]));
        // canonical side: the one holding the smallest vertex
        assert!(w.side_a.contains(0));

        assert_eq!(c5().join_split().unwrap(), None);

        let k1 = SimplicialGraph::new(&["a"], &[]).unwrap();
        assert!(k1.join_split().is_err());
    }

    #[test]
    fn suspension_examples() {
        let p3 = SimplicialGraph::new(&[], &[("a", "b"), ("b", "c")]).unwrap();
        let (pair, clique) = p3.suspension_of_clique().unwrap();
        assert_eq!(p3.set_labels(pair), vec!["a", "c"]);
        assert_eq!(p3.set_labels(clique), vec!["b"]);

        assert_eq!(c4().suspension_of_clique(), None);

        let k3 = SimplicialGraph::new(&[], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(k3.suspension_of_clique(), None);
    }

    #[test]
    fn components_and_trees() {
        let g = SimplicialGraph::new(&["x"], &[("a", "b"), ("b", "c")]).unwrap();
        let comps = g.components_within(g.vertex_set());
        assert_eq!(comps.len(), 2);
        assert!(!g.is_connected());
        let p3 = SimplicialGraph::new(&[], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p3.is_tree());
        assert!(!c4().is_tree());
    }

    #[test]
    fn vertex_set_lex_order() {
        let a = VertexSet::from_indices([0, 3]);
        let b = VertexSet::from_indices([1, 2]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        let c = VertexSet::from_indices([1]);
        assert_eq!(c.lex_cmp(b), Ordering::Less);
        assert!(a.lex_cmp(a) == Ordering::Equal);
    }
}
