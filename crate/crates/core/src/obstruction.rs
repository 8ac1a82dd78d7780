//! The circle obstruction: an induced cycle of length at least five such
//! that no induced 4-cycle of the graph shares a non-adjacent vertex pair
//! with it. A right-angled Coxeter group whose defining graph contains
//! such a cycle has a circle in its Morse boundary, which rules out every
//! totally disconnected classification. Absence of the obstruction proves
//! nothing on its own.

use crate::cycles::{induced_cycles_budgeted, induced_four_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;

pub const DEFAULT_CYCLE_BUDGET: u64 = 1_000_000;

/// A 4-cycle glued to `c`: an induced 4-cycle of `g` containing at least
/// one pair of vertices of `c` that is non-adjacent in `g` (equivalently,
/// non-consecutive along `c`). Returns the first such 4-cycle in
/// canonical order.
pub fn has_glued_four_cycle(g: &SimplicialGraph, c: &Cycle) -> Result<Option<Cycle>> {
    if c.len() < 5 {
        return Err(Error::NotAnInducedCycle { min_len: 5 });
    }
    // re-validate the cycle against the graph
    let c = Cycle::new(g, c.vertices()).map_err(|_| Error::NotAnInducedCycle { min_len: 5 })?;
    let pairs = c.non_adjacent_pairs();
    for q in induced_four_cycles(g) {
        let qs = q.vertex_set();
        if pairs.iter().any(|&(u, v)| qs.contains(u) && qs.contains(v)) {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// First induced cycle of length at least five admitting no glued
/// 4-cycle, scanning cycles shortest-first and lexicographically within a
/// length. `budget` caps the number of enumerated cycles.
pub fn find_circle_obstruction_budgeted(
    g: &SimplicialGraph,
    budget: u64,
) -> Result<Option<Cycle>> {
    let cycles = induced_cycles_budgeted(g, 5, budget)?;
    for c in cycles {
        if has_glued_four_cycle(g, &c)?.is_none() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

pub fn find_circle_obstruction(g: &SimplicialGraph) -> Result<Option<Cycle>> {
    find_circle_obstruction_budgeted(g, DEFAULT_CYCLE_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_graph;

    fn graph(text: &str) -> SimplicialGraph {
        parse_graph(text).unwrap().graph
    }

    fn c5() -> SimplicialGraph {
        graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v1")
    }

    fn c6g() -> SimplicialGraph {
        graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v6, v6 v1, u v1, u v3")
    }

    #[test]
    fn glued_four_cycle_on_the_hexagon() {
        let g = c6g();
        let ids: Vec<usize> = ["v1", "v2", "v3", "v4", "v5", "v6"]
            .iter()
            .map(|l| g.index_of(l).unwrap())
            .collect();
        let hexagon = Cycle::new(&g, &ids).unwrap();
        let q = has_glued_four_cycle(&g, &hexagon).unwrap().unwrap();
        assert_eq!(q.labels(&g), vec!["u", "v1", "v2", "v3"]);
    }

    #[test]
    fn no_four_cycle_in_c5() {
        let g = c5();
        let c = Cycle::new(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(has_glued_four_cycle(&g, &c).unwrap(), None);
    }

    #[test]
    fn other_hexagon_is_glued_through_v1_v3() {
        let g = c6g();
        let ids: Vec<usize> = ["u", "v1", "v6", "v5", "v4", "v3"]
            .iter()
            .map(|l| g.index_of(l).unwrap())
            .collect();
        let c = Cycle::new(&g, &ids).unwrap();
        let q = has_glued_four_cycle(&g, &c).unwrap().unwrap();
        assert_eq!(q.labels(&g), vec!["u", "v1", "v2", "v3"]);
    }

    #[test]
    fn rejects_short_or_foreign_cycles() {
        let g = c6g();
        let c4g = graph("edges a b, b c, c d, d a");
        let c = Cycle::new(&c4g, &[0, 1, 2, 3]).unwrap();
        assert!(has_glued_four_cycle(&g, &c).is_err());
    }

    #[test]
    fn obstruction_examples() {
        let g = c5();
        let c = find_circle_obstruction(&g).unwrap().unwrap();
        assert_eq!(c.labels(&g), vec!["v1", "v2", "v3", "v4", "v5"]);

        assert_eq!(find_circle_obstruction(&c6g()).unwrap(), None);

        let c4 = graph("edges a b, b c, c d, d a");
        assert_eq!(find_circle_obstruction(&c4).unwrap(), None);

        let c6 = graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v6, v6 v1");
        assert!(find_circle_obstruction(&c6).unwrap().is_some());
    }
}
