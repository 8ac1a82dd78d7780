//! Induced (chordless) cycle enumeration.

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, VertexSet};

/// An induced cycle, stored in canonical form: the rotation starting at
/// the smallest vertex whose second entry is smaller than its last (this
/// quotients out rotation and reflection).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    verts: Vec<usize>,
}

impl Cycle {
    /// Validate `verts` as an induced cycle of `g` and canonicalize it.
    pub fn new(g: &SimplicialGraph, verts: &[usize]) -> Result<Cycle> {
        let k = verts.len();
        let set = VertexSet::from_indices(verts.iter().copied());
        let bad = || Error::NotAnInducedCycle { min_len: 3 };
        if k < 3 || set.len() != k || !set.is_subset_of(g.vertex_set()) {
            return Err(bad());
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.adjacent(verts[i], verts[j]) != consecutive {
                    return Err(bad());
                }
            }
        }
        Ok(Cycle {
            verts: canonical_rotation(verts),
        })
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_indices(self.verts.iter().copied())
    }

    pub fn labels(&self, g: &SimplicialGraph) -> Vec<String> {
        self.verts.iter().map(|&v| g.label(v).to_string()).collect()
    }

    /// Edges of the cycle as unordered index pairs `(min, max)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.verts.len();
        (0..k)
            .map(|i| {
                let (u, v) = (self.verts[i], self.verts[(i + 1) % k]);
                (u.min(v), u.max(v))
            })
            .collect()
    }

    /// Vertex pairs of the cycle that are non-consecutive along it (and
    /// hence non-adjacent in the ambient graph, the cycle being induced).
    pub fn non_adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.verts.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if !consecutive {
                    let (u, v) = (self.verts[i], self.verts[j]);
                    out.push((u.min(v), u.max(v)));
                }
            }
        }
        out
    }
}

fn canonical_rotation(verts: &[usize]) -> Vec<usize> {
    let k = verts.len();
    let start = (0..k).min_by_key(|&i| verts[i]).unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| verts[(start + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| verts[(start + k - i) % k]).collect();
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

/// All induced cycles of length at least `k` (`k >= 3`), in canonical
/// order: sorted by length, then lexicographically. Unbounded variant of
/// [`induced_cycles_budgeted`].
pub fn induced_cycles_at_least(g: &SimplicialGraph, k: usize) -> Vec<Cycle> {
    induced_cycles_budgeted(g, k, u64::MAX).expect("unbounded enumeration cannot exhaust budget")
}

/// As [`induced_cycles_at_least`] with a cap on the number of enumerated
/// cycles; exceeding it aborts with [`Error::CycleBudgetExceeded`] rather
/// than returning a silently incomplete list.
pub fn induced_cycles_budgeted(
    g: &SimplicialGraph,
    k: usize,
    budget: u64,
) -> Result<Vec<Cycle>> {
    assert!(k >= 3, "cycles have at least 3 vertices");
    let n = g.vertex_count();
    let mut found: Vec<Cycle> = Vec::new();
    let mut count: u64 = 0;
    let mut emit = |verts: &[usize]| -> Result<()> {
        count += 1;
        if count > budget {
            return Err(Error::CycleBudgetExceeded(budget));
        }
        found.push(Cycle {
            verts: verts.to_vec(),
        });
        Ok(())
    };

    if k == 3 {
        for m in 0..n {
            for a in m + 1..n {
                if !g.adjacent(m, a) {
                    continue;
                }
                for b in a + 1..n {
                    if g.adjacent(m, b) && g.adjacent(a, b) {
                        emit(&[m, a, b])?;
                    }
                }
            }
        }
    }

    // Chordless cycles of length >= 4, grown as induced paths
    // m, u1, ..., ut with every ui > m; a closing vertex x > u1 kills the
    // reflected duplicate.
    let min_len = k.max(4);
    let mut path: Vec<usize> = Vec::new();
    for m in 0..n {
        for u1 in g.neighbors(m).iter() {
            if u1 <= m {
                continue;
            }
            path.clear();
            path.push(m);
            path.push(u1);
            grow(g, m, u1, &mut path, min_len, &mut emit)?;
        }
    }

    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.verts.cmp(&b.verts)));
    found.dedup();
    Ok(found)
}

fn grow(
    g: &SimplicialGraph,
    m: usize,
    u1: usize,
    path: &mut Vec<usize>,
    min_len: usize,
    emit: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let tip = *path.last().unwrap();
    for x in g.neighbors(tip).iter() {
        if x <= m || path.contains(&x) {
            continue;
        }
        let chord = path[1..path.len() - 1]
            .iter()
            .any(|&p| g.adjacent(x, p));
        if chord {
            continue;
        }
        if g.adjacent(x, m) {
            // closing; x is adjacent only to m and the tip among the path
            if x > u1 && path.len() + 1 >= min_len {
                path.push(x);
                emit(path)?;
                path.pop();
            }
            continue;
        }
        path.push(x);
        grow(g, m, u1, path, min_len, emit)?;
        path.pop();
    }
    Ok(())
}

/// The induced 4-cycles of `g`, by direct scan over 4-subsets: a subset
/// induces a 4-cycle exactly when its complement inside the subset is a
/// perfect matching.
pub fn induced_four_cycles(g: &SimplicialGraph) -> Vec<Cycle> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    // a is smallest; the cycle visits its two neighbours
                    // among {b,c,d} with the non-neighbour opposite.
                    let quad = [a, b, c, d];
                    let non: Vec<(usize, usize)> = (0..4)
                        .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| !g.adjacent(quad[i], quad[j]))
                        .collect();
                    if non.len() != 2 {
                        continue;
                    }
                    let (p, q) = (non[0], non[1]);
                    if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
                        continue; // shares a vertex: not a matching
                    }
                    // opposite pairs are the two non-edges
                    let opposite = quad[if p.0 == 0 { p.1 } else { q.1 }];
                    let mut rest: Vec<usize> =
                        quad[1..].iter().copied().filter(|&v| v != opposite).collect();
                    rest.sort();
                    let verts = [a, rest[0], opposite, rest[1]];
                    out.push(Cycle {
                        verts: canonical_rotation(&verts),
                    });
                }
            }
        }
    }
    out.sort_by(|x, y| x.verts.cmp(&y.verts));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_graph;

    fn graph(text: &str) -> SimplicialGraph {
        parse_graph(text).unwrap().graph
    }

    pub(crate) fn c6g() -> SimplicialGraph {
        graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v6, v6 v1, u v1, u v3")
    }

    #[test]
    fn five_cycle_is_its_own_enumeration() {
        let c5 = graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v1");
        let cycles = induced_cycles_at_least(&c5, 5);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].labels(&c5), vec!["v1", "v2", "v3", "v4", "v5"]);
    }

    #[test]
    fn four_cycle_has_no_long_cycles() {
        let c4 = graph("edges v1 v2, v2 v3, v3 v4, v4 v1");
        assert!(induced_cycles_at_least(&c4, 5).is_empty());
        assert_eq!(induced_four_cycles(&c4).len(), 1);
    }

    #[test]
    fn glued_graph_has_two_long_cycles() {
        let g = c6g();
        let cycles = induced_cycles_at_least(&g, 5);
        let rendered: Vec<Vec<String>> = cycles.iter().map(|c| c.labels(&g)).collect();
        assert_eq!(
            rendered,
            vec![
                vec!["u", "v1", "v6", "v5", "v4", "v3"],
                vec!["v1", "v2", "v3", "v4", "v5", "v6"],
            ]
        );
    }

    #[test]
    fn canonical_form_kills_rotation_and_reflection() {
        let c4 = graph("edges v1 v2, v2 v3, v3 v4, v4 v1");
        let a = Cycle::new(&c4, &[2, 3, 0, 1]).unwrap();
        let b = Cycle::new(&c4, &[0, 3, 2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn rejects_non_cycles() {
        let c4 = graph("edges v1 v2, v2 v3, v3 v4, v4 v1");
        assert!(Cycle::new(&c4, &[0, 1, 2]).is_err());
        let k4 = graph("edges a b, a c, a d, b c, b d, c d");
        assert!(Cycle::new(&k4, &[0, 1, 2, 3]).is_err()); // chords everywhere
    }

    #[test]
    fn budget_is_enforced() {
        let k33 = graph("edges a x, a y, a z, b x, b y, b z, c x, c y, c z");
        assert_eq!(induced_four_cycles(&k33).len(), 9);
        match induced_cycles_budgeted(&k33, 4, 3) {
            Err(Error::CycleBudgetExceeded(3)) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }
}
