//! The four-cycle graph and the CFS / CFS0 graph classes.

use crate::cycles::{induced_four_cycles, Cycle};
use crate::graph::{SimplicialGraph, VertexSet};
use crate::planar::{bridges, cut_vertices, is_planar};

/// The graph whose vertices are the induced 4-cycles of a base graph; two
/// of them are linked when they share a pair of vertices that is
/// non-adjacent in the base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourCycleGraph {
    pub nodes: Vec<Cycle>,
    /// Links as index pairs `(i, j)` with `i < j`, in canonical order.
    pub links: Vec<(usize, usize)>,
}

impl FourCycleGraph {
    pub fn support_of(&self, node: usize) -> VertexSet {
        self.nodes[node].vertex_set()
    }

    /// Connected components as sorted node-index lists, ordered by their
    /// smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &self.links {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Union of the supports of a set of nodes.
    pub fn support_of_nodes(&self, nodes: &[usize]) -> VertexSet {
        nodes
            .iter()
            .fold(VertexSet::EMPTY, |acc, &i| acc.union(self.support_of(i)))
    }
}

pub fn four_cycle_graph(g: &SimplicialGraph) -> FourCycleGraph {
    let nodes = induced_four_cycles(g);
    let mut links = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let shared = nodes[i].vertex_set().intersection(nodes[j].vertex_set());
            let mut linked = false;
            let members: Vec<usize> = shared.iter().collect();
            'outer: for (a, &u) in members.iter().enumerate() {
                for &v in &members[a + 1..] {
                    if !g.adjacent(u, v) {
                        linked = true;
                        break 'outer;
                    }
                }
            }
            if linked {
                links.push((i, j));
            }
        }
    }
    FourCycleGraph { nodes, links }
}

/// The set of vertices adjacent to every other vertex. Such vertices are
/// pairwise adjacent, so they span the canonical clique factor of the
/// graph.
pub fn clique_factor(g: &SimplicialGraph) -> VertexSet {
    let n = g.vertex_count();
    let all = g.vertex_set();
    VertexSet::from_indices((0..n).filter(|&v| {
        g.neighbors(v) == all.difference(VertexSet::singleton(v))
    }))
}

/// CFS membership: `g = core * clique-factor` where the four-cycle graph
/// of the (non-empty) core has a connected component supporting all of the
/// core's vertices.
pub fn is_cfs(g: &SimplicialGraph) -> bool {
    let k = clique_factor(g);
    let core_set = g.vertex_set().difference(k);
    if core_set.is_empty() {
        return false;
    }
    let core = g
        .induced_subgraph(core_set)
        .expect("core is a subset of the graph");
    let fcg = four_cycle_graph(&core);
    let all = core.vertex_set();
    fcg.components()
        .iter()
        .any(|comp| fcg.support_of_nodes(comp) == all)
}

/// Outcome of the CFS0 test; `reason` names the first failing clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cfs0Verdict {
    pub is_member: bool,
    pub reason: Option<String>,
}

fn has_triangle(g: &SimplicialGraph) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        for v in g.neighbors(u).iter() {
            if v > u && !g.neighbors(u).intersection(g.neighbors(v)).is_empty() {
                return true;
            }
        }
    }
    false
}

/// CFS0: CFS, connected, triangle-free, planar, at least five vertices,
/// and free of cut vertices and bridges, checked in that order.
pub fn is_cfs0(g: &SimplicialGraph) -> Cfs0Verdict {
    let fail = |reason: &str| Cfs0Verdict {
        is_member: false,
        reason: Some(reason.to_string()),
    };
    if !is_cfs(g) {
        return fail("not CFS");
    }
    if !g.is_connected() {
        return fail("not connected");
    }
    if has_triangle(g) {
        return fail("not triangle-free");
    }
    if !is_planar(g) {
        return fail("not planar");
    }
    if g.vertex_count() < 5 {
        return fail("fewer than 5 vertices");
    }
    if !cut_vertices(g).is_empty() {
        return fail("has a cut vertex");
    }
    if !bridges(g).is_empty() {
        return fail("has a bridge");
    }
    Cfs0Verdict {
        is_member: true,
        reason: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_graph;

    fn graph(text: &str) -> SimplicialGraph {
        parse_graph(text).unwrap().graph
    }

    fn k23() -> SimplicialGraph {
        graph("edges a x, a y, a z, b x, b y, b z")
    }

    fn c6g() -> SimplicialGraph {
        graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v6, v6 v1, u v1, u v3")
    }

    #[test]
    fn four_cycle_graph_of_c4() {
        let g = graph("edges v1 v2, v2 v3, v3 v4, v4 v1");
        let fcg = four_cycle_graph(&g);
        assert_eq!(fcg.nodes.len(), 1);
        assert!(fcg.links.is_empty());
    }

    #[test]
    fn four_cycle_graph_of_c5_is_empty() {
        let g = graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v1");
        assert!(four_cycle_graph(&g).nodes.is_empty());
    }

    #[test]
    fn four_cycle_graph_of_k23_is_a_triangle() {
        let g = k23();
        let fcg = four_cycle_graph(&g);
        let rendered: Vec<Vec<String>> = fcg.nodes.iter().map(|c| c.labels(&g)).collect();
        assert_eq!(
            rendered,
            vec![
                vec!["a", "x", "b", "y"],
                vec!["a", "x", "b", "z"],
                vec!["a", "y", "b", "z"],
            ]
        );
        assert_eq!(fcg.links, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(fcg.components().len(), 1);
    }

    #[test]
    fn cfs_examples() {
        assert!(is_cfs(&graph("edges v1 v2, v2 v3, v3 v4, v4 v1")));
        assert!(is_cfs(&k23()));
        assert!(!is_cfs(&graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v1")));
        assert!(!is_cfs(&c6g()));
        // a clique factor on top of a 4-cycle is still CFS
        let suspended = graph(
            "edges v1 v2, v2 v3, v3 v4, v4 v1, t v1, t v2, t v3, t v4",
        );
        assert!(is_cfs(&suspended));
        // a bare clique has an empty core
        assert!(!is_cfs(&graph("edges a b, b c, a c")));
    }

    #[test]
    fn cfs0_examples() {
        assert_eq!(
            is_cfs0(&k23()),
            Cfs0Verdict {
                is_member: true,
                reason: None
            }
        );
        let c4 = graph("edges v1 v2, v2 v3, v3 v4, v4 v1");
        assert_eq!(is_cfs0(&c4).reason.as_deref(), Some("fewer than 5 vertices"));
        assert_eq!(is_cfs0(&c6g()).reason.as_deref(), Some("not CFS"));
    }
}
