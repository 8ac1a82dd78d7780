//! Planarity testing.
//!
//! A graph is planar iff each biconnected component is, so the test
//! splits the graph first and then runs the classic
//! Demoucron–Malgrange–Pertuiset face-embedding algorithm on every
//! component: keep a partial embedding as a list of faces, and embed one
//! path of a pending fragment per round. A fragment with no admissible
//! face refutes planarity; fragments with a unique admissible face are
//! forced and handled first. Quadratic, which is ample at <= 64 vertices.

use crate::graph::{SimplicialGraph, VertexSet};

pub fn is_planar(g: &SimplicialGraph) -> bool {
    let n = g.vertex_count();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    biconnected_components(g)
        .into_iter()
        .all(|edges| component_is_planar(g, &edges))
}

/// Vertices whose removal increases the number of connected components.
pub fn cut_vertices(g: &SimplicialGraph) -> Vec<usize> {
    let all = g.vertex_set();
    let before = g.components_within(all).len();
    (0..g.vertex_count())
        .filter(|&v| {
            let rest = all.difference(VertexSet::singleton(v));
            g.components_within(rest).len() > before
        })
        .collect()
}

/// Edges whose removal disconnects their endpoints.
pub fn bridges(g: &SimplicialGraph) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| {
            // reachability from u to v avoiding the edge itself
            let mut seen = VertexSet::singleton(u);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for x in frontier.iter() {
                    let mut nb = g.neighbors(x);
                    if x == u {
                        nb.remove(v);
                    }
                    if x == v {
                        nb.remove(u);
                    }
                    next = next.union(nb.difference(seen));
                }
                seen = seen.union(next);
                frontier = next;
            }
            !seen.contains(v)
        })
        .collect()
}

/// Edge sets of the biconnected components (Hopcroft–Tarjan).
fn biconnected_components(g: &SimplicialGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    fn dfs(
        g: &SimplicialGraph,
        u: usize,
        parent: Option<usize>,
        disc: &mut [usize],
        low: &mut [usize],
        timer: &mut usize,
        stack: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        disc[u] = *timer;
        low[u] = *timer;
        *timer += 1;
        for v in g.neighbors(u).iter() {
            if Some(v) == parent {
                continue;
            }
            if disc[v] == usize::MAX {
                stack.push((u, v));
                dfs(g, v, Some(u), disc, low, timer, stack, out);
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut comp = Vec::new();
                    while let Some(e) = stack.pop() {
                        let done = e == (u, v);
                        comp.push(e);
                        if done {
                            break;
                        }
                    }
                    out.push(comp);
                }
            } else if disc[v] < disc[u] {
                stack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        }
    }

    for s in 0..n {
        if disc[s] == usize::MAX {
            dfs(g, s, None, &mut disc, &mut low, &mut timer, &mut stack, &mut out);
        }
    }
    out
}

struct Embedding {
    adj: Vec<VertexSet>,
    vertices: VertexSet,
    embedded_vertices: VertexSet,
    embedded_edges: Vec<VertexSet>, // bitset of embedded neighbours per vertex
    faces: Vec<Vec<usize>>,
}

fn component_is_planar(g: &SimplicialGraph, edges: &[(usize, usize)]) -> bool {
    if edges.len() <= 2 {
        return true;
    }
    let mut vertices = VertexSet::EMPTY;
    let mut adj = vec![VertexSet::EMPTY; g.vertex_count()];
    for &(u, v) in edges {
        vertices.insert(u);
        vertices.insert(v);
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let n = vertices.len();
    if n < 5 {
        return true;
    }
    if edges.len() > 3 * n - 6 {
        return false;
    }

    let cycle = match find_cycle(&adj, vertices) {
        Some(c) => c,
        None => return true, // acyclic pieces are trivially planar
    };
    let mut emb = Embedding {
        adj,
        vertices,
        embedded_vertices: VertexSet::from_indices(cycle.iter().copied()),
        embedded_edges: vec![VertexSet::EMPTY; g.vertex_count()],
        faces: vec![cycle.clone(), cycle.iter().rev().copied().collect()],
    };
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb.embedded_edges[u].insert(v);
        emb.embedded_edges[v].insert(u);
    }
    loop {
        match emb.step() {
            StepResult::Done => return true,
            StepResult::Stuck => return false,
            StepResult::Progress => {}
        }
    }
}

enum StepResult {
    Done,
    Stuck,
    Progress,
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices (empty for a chord).
    interior: VertexSet,
    chord: Option<(usize, usize)>,
}

impl Embedding {
    fn fragments(&self) -> Vec<Fragment> {
        let mut out = Vec::new();
        for u in self.embedded_vertices.iter() {
            for v in self.adj[u]
                .intersection(self.embedded_vertices)
                .difference(self.embedded_edges[u])
                .iter()
            {
                if v > u {
                    out.push(Fragment {
                        attachments: vec![u, v],
                        interior: VertexSet::EMPTY,
                        chord: Some((u, v)),
                    });
                }
            }
        }
        let outside = self.vertices.difference(self.embedded_vertices);
        let mut remaining = outside;
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for x in frontier.iter() {
                    next = next.union(self.adj[x].intersection(outside).difference(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            remaining = remaining.difference(comp);
            let mut attach = VertexSet::EMPTY;
            for x in comp.iter() {
                attach = attach.union(self.adj[x].intersection(self.embedded_vertices));
            }
            out.push(Fragment {
                attachments: attach.iter().collect(),
                interior: comp,
                chord: None,
            });
        }
        out
    }

    fn admissible_faces(&self, frag: &Fragment) -> Vec<usize> {
        let attach = VertexSet::from_indices(frag.attachments.iter().copied());
        (0..self.faces.len())
            .filter(|&i| {
                attach.is_subset_of(VertexSet::from_indices(self.faces[i].iter().copied()))
            })
            .collect()
    }

    fn step(&mut self) -> StepResult {
        let frags = self.fragments();
        if frags.is_empty() {
            return StepResult::Done;
        }
        let mut choice: Option<(usize, Vec<usize>)> = None;
        for (i, f) in frags.iter().enumerate() {
            let adm = self.admissible_faces(f);
            if adm.is_empty() {
                return StepResult::Stuck;
            }
            let forced = adm.len() == 1;
            if choice.is_none() || forced {
                choice = Some((i, adm));
                if forced {
                    break;
                }
            }
        }
        let (idx, adm) = choice.unwrap();
        let frag = &frags[idx];
        let path = self.alpha_path(frag);
        self.embed_path(adm[0], &path);
        StepResult::Progress
    }

    /// A path through the fragment connecting two distinct attachments.
    fn alpha_path(&self, frag: &Fragment) -> Vec<usize> {
        if let Some((u, v)) = frag.chord {
            return vec![u, v];
        }
        let a0 = frag.attachments[0];
        // BFS from a0 through the interior to any other attachment
        let mut prev: Vec<Option<usize>> = vec![None; self.adj.len()];
        let mut seen = VertexSet::singleton(a0);
        let mut queue: Vec<usize> = vec![a0];
        while let Some(x) = queue.pop() {
            let next = if x == a0 {
                self.adj[x].intersection(frag.interior)
            } else {
                self.adj[x]
            };
            for y in next.iter() {
                if seen.contains(y) {
                    continue;
                }
                if frag.interior.contains(y) {
                    seen.insert(y);
                    prev[y] = Some(x);
                    queue.push(y);
                } else if self.embedded_vertices.contains(y) && y != a0 {
                    // reached another attachment
                    let mut path = vec![y, x];
                    let mut cur = x;
                    while let Some(p) = prev[cur] {
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    return path;
                }
            }
        }
        unreachable!("fragment of a biconnected graph has two attachments");
    }

    fn embed_path(&mut self, face_idx: usize, path: &[usize]) {
        let face = self.faces.swap_remove(face_idx);
        let u = path[0];
        let v = *path.last().unwrap();
        let iu = face.iter().position(|&x| x == u).unwrap();
        let iv = face.iter().position(|&x| x == v).unwrap();
        let len = face.len();
        let walk = |from: usize, to: usize| {
            let mut arc = Vec::new();
            let mut i = from;
            loop {
                arc.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % len;
            }
            arc
        };
        let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
        let mut face1 = walk(iu, iv);
        face1.extend(interior.iter().rev());
        let mut face2 = walk(iv, iu);
        face2.extend(interior.iter());
        self.faces.push(face1);
        self.faces.push(face2);
        for w in path.windows(2) {
            self.embedded_edges[w[0]].insert(w[1]);
            self.embedded_edges[w[1]].insert(w[0]);
        }
        for &x in &interior {
            self.embedded_vertices.insert(x);
        }
    }
}

fn find_cycle(adj: &[VertexSet], vertices: VertexSet) -> Option<Vec<usize>> {
    // Recursive DFS: in an undirected graph every non-tree edge then leads
    // to an ancestor, so climbing the parent chain recovers a cycle.
    fn dfs(
        adj: &[VertexSet],
        vertices: VertexSet,
        u: usize,
        parent: &mut [Option<usize>],
        seen: &mut VertexSet,
    ) -> Option<(usize, usize)> {
        for v in adj[u].intersection(vertices).iter() {
            if !seen.contains(v) {
                seen.insert(v);
                parent[v] = Some(u);
                if let Some(found) = dfs(adj, vertices, v, parent, seen) {
                    return Some(found);
                }
            } else if parent[u] != Some(v) {
                return Some((u, v));
            }
        }
        None
    }
    let start = vertices.min()?;
    let mut parent: Vec<Option<usize>> = vec![None; adj.len()];
    let mut seen = VertexSet::singleton(start);
    let (u, v) = dfs(adj, vertices, start, &mut parent, &mut seen)?;
    let mut path = vec![u];
    let mut cur = u;
    while cur != v {
        cur = parent[cur].expect("back edge leads to an ancestor");
        path.push(cur);
    }
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_graph;

    fn graph(text: &str) -> SimplicialGraph {
        parse_graph(text).unwrap().graph
    }

    fn complete(n: usize) -> SimplicialGraph {
        let labels: Vec<String> = (0..n).map(|i| format!("x{i:02}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
        SimplicialGraph::new(&labels, &edges).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete(6)));
    }

    #[test]
    fn k33_is_not_planar() {
        let g = graph("edges a x, a y, a z, b x, b y, b z, c x, c y, c z");
        assert!(is_planar(&graph("edges a x, a y, a z, b x, b y, b z")));
        assert!(!is_planar(&g));
    }

    #[test]
    fn petersen_is_not_planar() {
        let g = graph(
            "edges o1 o2, o2 o3, o3 o4, o4 o5, o5 o1, \
             i1 i3, i3 i5, i5 i2, i2 i4, i4 i1, \
             o1 i1, o2 i2, o3 i3, o4 i4, o5 i5",
        );
        assert!(!is_planar(&g));
    }

    #[test]
    fn glued_cycle_is_planar() {
        let g = graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v6, v6 v1, u v1, u v3");
        assert!(is_planar(&g));
    }

    #[test]
    fn k5_plus_pendant_tree_detected_through_bicomponents() {
        let mut k5 = complete(5);
        let mut edges: Vec<(String, String)> = k5
            .edges()
            .iter()
            .map(|&(u, v)| (k5.label(u).to_string(), k5.label(v).to_string()))
            .collect();
        edges.push(("x00".into(), "pendant".into()));
        k5 = SimplicialGraph::new::<String>(&[], &edges).unwrap();
        assert!(!is_planar(&k5));
    }

    #[test]
    fn cut_vertices_and_bridges() {
        let p3 = graph("edges a b, b c");
        assert_eq!(cut_vertices(&p3), vec![1]);
        assert_eq!(bridges(&p3).len(), 2);
        let c4 = graph("edges v1 v2, v2 v3, v3 v4, v4 v1");
        assert!(cut_vertices(&c4).is_empty());
        assert!(bridges(&c4).is_empty());
    }
}
