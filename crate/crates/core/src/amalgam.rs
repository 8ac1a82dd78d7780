//! Amalgam structure of a graph split.
//!
//! A split of the defining graph into two proper induced subgraphs whose
//! union carries every edge presents the group as an amalgamated free
//! product of the two special subgroups over the one on the intersection.
//! The cosets of the factors form the vertices of the Bass–Serre tree;
//! cosets of the intersection subgroup are its edges ("walls"). Elements
//! decompose into alternating factor syllables, and the block/wall path
//! from the base block to the nearest block containing an element is its
//! itinerary. A wall lying on one itinerary but not another separates the
//! two endpoints in the Cayley graph, which `cutset_check` probes inside
//! a finite ball.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, VertexSet};
use crate::words::{
    ids_in_subgroup, inv_ids, min_coset_rep, mul_ids, nf_ids, parabolic_prefix, GroupWord,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }
}

/// Which factor a syllable lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    One,
    Two,
    Lambda,
}

impl Factor {
    pub fn name(&self) -> &'static str {
        match self {
            Factor::One => "1",
            Factor::Two => "2",
            Factor::Lambda => "lambda",
        }
    }
}

/// A cover of the defining graph by two proper induced subgraphs carrying
/// every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSplit {
    pub delta1: VertexSet,
    pub delta2: VertexSet,
    pub lambda: VertexSet,
}

impl GraphSplit {
    pub fn new(g: &SimplicialGraph, delta1: VertexSet, delta2: VertexSet) -> Result<GraphSplit> {
        let all = g.vertex_set();
        let bad = |m: &str| Err(Error::InvalidSplit(m.into()));
        if !delta1.is_subset_of(all) || !delta2.is_subset_of(all) {
            return bad("sides contain unknown vertices");
        }
        if delta1.union(delta2) != all {
            return bad("sides do not cover the vertex set");
        }
        if delta1 == all || delta2 == all {
            return bad("both sides must be proper");
        }
        for (u, v) in g.edges() {
            let in1 = delta1.contains(u) && delta1.contains(v);
            let in2 = delta2.contains(u) && delta2.contains(v);
            if !in1 && !in2 {
                return bad("an edge lies in neither side");
            }
        }
        Ok(GraphSplit {
            lambda: delta1.intersection(delta2),
            delta1,
            delta2,
        })
    }

    pub fn factor_set(&self, side: Side) -> VertexSet {
        match side {
            Side::One => self.delta1,
            Side::Two => self.delta2,
        }
    }
}

/// Left coset of a factor subgroup, by its unique shortest representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCoset {
    pub side: Side,
    pub rep: GroupWord,
}

impl BlockCoset {
    /// Coset equality by membership, not by the stored representative.
    pub fn same(&self, other: &BlockCoset, split: &GraphSplit, g: &SimplicialGraph) -> Result<bool> {
        if self.side != other.side {
            return Ok(false);
        }
        let a = self.rep.to_ids(g)?;
        let b = other.rep.to_ids(g)?;
        let d = mul_ids(&inv_ids(&a), &b, g);
        Ok(ids_in_subgroup(&d, split.factor_set(self.side)))
    }
}

/// Left coset of the intersection subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCoset {
    pub rep: GroupWord,
}

impl WallCoset {
    pub fn same(&self, other: &WallCoset, split: &GraphSplit, g: &SimplicialGraph) -> Result<bool> {
        let a = self.rep.to_ids(g)?;
        let b = other.rep.to_ids(g)?;
        let d = mul_ids(&inv_ids(&a), &b, g);
        Ok(ids_in_subgroup(&d, split.lambda))
    }
}

/// Geodesic block/wall path in the Bass–Serre tree, starting at the base
/// block (side 1, identity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Itinerary {
    pub blocks: Vec<BlockCoset>,
    pub walls: Vec<WallCoset>,
}

impl Itinerary {
    pub fn tree_distance(&self) -> usize {
        self.walls.len()
    }
}

/// Greedy maximal-prefix decomposition into alternating factor syllables.
/// An element of the intersection subgroup is the single syllable
/// `lambda`; otherwise every syllable lies in its factor but outside the
/// intersection, and the factors alternate.
pub fn syllable_decomposition(
    w: &GroupWord,
    split: &GraphSplit,
    g: &SimplicialGraph,
) -> Result<Vec<(GroupWord, Factor)>> {
    let x = nf_ids(&w.to_ids(g)?, g);
    if ids_in_subgroup(&x, split.lambda) {
        return Ok(vec![(GroupWord::from_ids(&x, g), Factor::Lambda)]);
    }
    let mut out = Vec::new();
    let mut rest = x;
    let mut side: Option<Side> = None;
    while !rest.is_empty() {
        let next_side = match side {
            Some(s) => s.other(),
            None => {
                let (p1, _) = parabolic_prefix(&rest, split.delta1, g);
                let (p2, _) = parabolic_prefix(&rest, split.delta2, g);
                if p1.len() >= p2.len() {
                    Side::One
                } else {
                    Side::Two
                }
            }
        };
        let (syllable, remainder) = parabolic_prefix(&rest, split.factor_set(next_side), g);
        debug_assert!(!syllable.is_empty(), "peeling always makes progress");
        let factor = match next_side {
            Side::One => Factor::One,
            Side::Two => Factor::Two,
        };
        out.push((GroupWord::from_ids(&syllable, g), factor));
        rest = remainder;
        side = Some(next_side);
    }
    Ok(out)
}

/// The tree geodesic from the base block to the nearest block containing
/// the element of `w`, derived from the syllable decomposition. Block and
/// wall representatives are minimal coset representatives.
pub fn itinerary(w: &GroupWord, split: &GraphSplit, g: &SimplicialGraph) -> Result<Itinerary> {
    let syllables = syllable_decomposition(w, split, g)?;
    let block = |side: Side, rep: &[usize]| BlockCoset {
        side,
        rep: GroupWord::from_ids(&min_coset_rep(rep, split.factor_set(side), g), g),
    };
    let wall = |rep: &[usize]| WallCoset {
        rep: GroupWord::from_ids(&min_coset_rep(rep, split.lambda, g), g),
    };

    let mut blocks = vec![block(Side::One, &[])];
    let mut walls = Vec::new();
    if syllables.len() == 1 && syllables[0].1 == Factor::Lambda {
        return Ok(Itinerary { blocks, walls });
    }
    let sides: Vec<Side> = syllables
        .iter()
        .map(|(_, f)| match f {
            Factor::One => Side::One,
            Factor::Two => Side::Two,
            Factor::Lambda => unreachable!("lambda only appears alone"),
        })
        .collect();
    if sides[0] == Side::Two {
        walls.push(wall(&[]));
        blocks.push(block(Side::Two, &[]));
    }
    let mut prefix: Vec<usize> = Vec::new();
    for j in 0..syllables.len() - 1 {
        prefix = mul_ids(&prefix, &syllables[j].0.to_ids(g)?, g);
        walls.push(wall(&prefix));
        blocks.push(block(sides[j + 1], &prefix));
    }
    Ok(Itinerary { blocks, walls })
}

/// Validate the itinerary invariants: the path starts at the base block,
/// sides alternate, consecutive blocks share the wall between them, and
/// no wall repeats (so the path is a tree geodesic).
pub fn check_itinerary(it: &Itinerary, split: &GraphSplit, g: &SimplicialGraph) -> Result<()> {
    let fail = |m: &str| Err(Error::Replay(m.into()));
    if it.blocks.len() != it.walls.len() + 1 {
        return fail("blocks and walls do not alternate");
    }
    if it.blocks[0].side != Side::One || !it.blocks[0].rep.is_identity() {
        return fail("path does not start at the base block");
    }
    for pair in it.blocks.windows(2) {
        if pair[0].side == pair[1].side {
            return fail("consecutive blocks on the same side");
        }
    }
    for (i, w) in it.walls.iter().enumerate() {
        for other in &it.walls[i + 1..] {
            if w.same(other, split, g)? {
                return fail("a wall repeats along the path");
            }
        }
        // the wall lies in both neighbouring blocks
        for b in [&it.blocks[i], &it.blocks[i + 1]] {
            let d = mul_ids(&inv_ids(&b.rep.to_ids(g)?), &w.rep.to_ids(g)?, g);
            if !ids_in_subgroup(&d, split.factor_set(b.side)) {
                return fail("wall does not lie in its neighbouring block");
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct CutsetReport {
    pub wall: WallCoset,
    pub wall_members_in_ball: Vec<GroupWord>,
    pub separated: bool,
    pub witness_path: Option<Vec<GroupWord>>,
    pub radius: usize,
    /// Separation is only verified inside the finite ball; a positive
    /// answer is consistency evidence, not a proof.
    pub note: &'static str,
}

/// Ball of the Cayley graph with cached itineraries and wall-removal
/// component maps, so sweeps over many pairs stay cheap.
pub struct CutsetContext<'g> {
    g: &'g SimplicialGraph,
    split: GraphSplit,
    radius: usize,
    elements: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    neighbors: Vec<Vec<usize>>,
    itineraries: HashMap<usize, Itinerary>,
    components: HashMap<Vec<usize>, Vec<i64>>,
}

impl<'g> CutsetContext<'g> {
    pub fn new(g: &'g SimplicialGraph, split: GraphSplit, radius: usize) -> CutsetContext<'g> {
        let (elements, index) = cayley_ball(g, radius);
        let mut neighbors = vec![Vec::new(); elements.len()];
        for (i, x) in elements.iter().enumerate() {
            for v in 0..g.vertex_count() {
                let y = mul_ids(x, &[v], g);
                if let Some(&j) = index.get(&y) {
                    neighbors[i].push(j);
                }
            }
        }
        CutsetContext {
            g,
            split,
            radius,
            elements,
            index,
            neighbors,
            itineraries: HashMap::new(),
            components: HashMap::new(),
        }
    }

    pub fn ball_size(&self) -> usize {
        self.elements.len()
    }

    pub fn element_words(&self) -> Vec<GroupWord> {
        self.elements
            .iter()
            .map(|ids| GroupWord::from_ids(ids, self.g))
            .collect()
    }

    fn itinerary_of(&mut self, idx: usize) -> Result<Itinerary> {
        if let Some(it) = self.itineraries.get(&idx) {
            return Ok(it.clone());
        }
        let w = GroupWord::from_ids(&self.elements[idx], self.g);
        let it = itinerary(&w, &self.split, self.g)?;
        self.itineraries.insert(idx, it.clone());
        Ok(it)
    }

    fn wall_members(&self, wall_rep: &[usize]) -> Vec<usize> {
        let inv = inv_ids(wall_rep);
        (0..self.elements.len())
            .filter(|&i| {
                let d = mul_ids(&inv, &self.elements[i], self.g);
                ids_in_subgroup(&d, self.split.lambda)
            })
            .collect()
    }

    fn components_without(&mut self, wall_rep: &[usize]) -> Vec<i64> {
        if let Some(c) = self.components.get(wall_rep) {
            return c.clone();
        }
        let removed: Vec<usize> = self.wall_members(wall_rep);
        let mut comp = vec![-1i64; self.elements.len()];
        for &r in &removed {
            comp[r] = -2;
        }
        let mut next = 0i64;
        for s in 0..self.elements.len() {
            if comp[s] != -1 {
                continue;
            }
            comp[s] = next;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &v in &self.neighbors[u] {
                    if comp[v] == -1 {
                        comp[v] = next;
                        queue.push(v);
                    }
                }
            }
            next += 1;
        }
        self.components.insert(wall_rep.to_vec(), comp.clone());
        comp
    }

    pub fn check(&mut self, w1: &GroupWord, w2: &GroupWord) -> Result<CutsetReport> {
        let x1 = nf_ids(&w1.to_ids(self.g)?, self.g);
        let x2 = nf_ids(&w2.to_ids(self.g)?, self.g);
        let needed = x1.len().max(x2.len()) + 2;
        if self.radius < needed {
            return Err(Error::RadiusTooSmall {
                radius: self.radius,
                needed,
            });
        }
        let i1 = *self.index.get(&x1).expect("element lies inside the ball");
        let i2 = *self.index.get(&x2).expect("element lies inside the ball");
        let it1 = self.itinerary_of(i1)?;
        let it2 = self.itinerary_of(i2)?;

        let mut candidates: Vec<&WallCoset> = Vec::new();
        for w in &it1.walls {
            if !walls_contain(&it2.walls, w, &self.split, self.g)? {
                candidates.push(w);
            }
        }
        for w in &it2.walls {
            if !walls_contain(&it1.walls, w, &self.split, self.g)? {
                candidates.push(w);
            }
        }
        if candidates.is_empty() {
            return Err(Error::EqualItineraries);
        }
        let lambda = self.split.lambda;
        let mut chosen: Option<Vec<usize>> = None;
        for w in candidates {
            let rep = w.rep.to_ids(self.g)?;
            let inv = inv_ids(&rep);
            let holds_endpoint = [&x1, &x2].iter().any(|x| {
                ids_in_subgroup(&mul_ids(&inv, x, self.g), lambda)
            });
            if !holds_endpoint {
                chosen = Some(rep);
                break;
            }
        }
        let Some(wall_rep) = chosen else {
            return Err(Error::WallContainsEndpoint);
        };

        let comp = self.components_without(&wall_rep);
        let separated = comp[i1] != comp[i2];
        let witness_path = if separated {
            None
        } else {
            Some(self.path_avoiding(i1, i2, &wall_rep))
        };
        Ok(CutsetReport {
            wall: WallCoset {
                rep: GroupWord::from_ids(&wall_rep, self.g),
            },
            wall_members_in_ball: self
                .wall_members(&wall_rep)
                .into_iter()
                .map(|i| GroupWord::from_ids(&self.elements[i], self.g))
                .collect(),
            separated,
            witness_path,
            radius: self.radius,
            note: "separation is checked inside the finite ball only",
        })
    }

    fn path_avoiding(&self, from: usize, to: usize, wall_rep: &[usize]) -> Vec<GroupWord> {
        let removed: Vec<usize> = self.wall_members(wall_rep);
        let mut prev = vec![usize::MAX; self.elements.len()];
        let mut seen = vec![false; self.elements.len()];
        for &r in &removed {
            seen[r] = true;
        }
        seen[from] = true;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        path.into_iter()
            .map(|i| GroupWord::from_ids(&self.elements[i], self.g))
            .collect()
    }
}

fn walls_contain(
    walls: &[WallCoset],
    w: &WallCoset,
    split: &GraphSplit,
    g: &SimplicialGraph,
) -> Result<bool> {
    for other in walls {
        if w.same(other, split, g)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// One-shot form of [`CutsetContext::check`].
pub fn cutset_check(
    w1: &GroupWord,
    w2: &GroupWord,
    split: &GraphSplit,
    radius: usize,
    g: &SimplicialGraph,
) -> Result<CutsetReport> {
    let mut ctx = CutsetContext::new(g, split.clone(), radius);
    ctx.check(w1, w2)
}

/// Normal forms of every element of the radius-`r` ball, with an index.
pub fn cayley_ball(
    g: &SimplicialGraph,
    radius: usize,
) -> (Vec<Vec<usize>>, HashMap<Vec<usize>, usize>) {
    let mut elements: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(Vec::new(), 0);
    let mut frontier: Vec<usize> = vec![0];
    for _ in 0..radius {
        let mut next = Vec::new();
        for &i in &frontier {
            let x = elements[i].clone();
            for v in 0..g.vertex_count() {
                let y = mul_ids(&x, &[v], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    next.push(elements.len());
                    elements.push(y);
                }
            }
        }
        frontier = next;
    }
    (elements, index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_graph;

    fn e3() -> SimplicialGraph {
        parse_graph("vertices a b c\nedges\n").unwrap().graph
    }

    fn e3_split(g: &SimplicialGraph) -> GraphSplit {
        GraphSplit::new(
            g,
            g.vertex_set_from_labels(&["a", "b"]).unwrap(),
            g.vertex_set_from_labels(&["b", "c"]).unwrap(),
        )
        .unwrap()
    }

    fn syllables(word: &str, g: &SimplicialGraph, split: &GraphSplit) -> Vec<(String, &'static str)> {
        syllable_decomposition(&GroupWord::parse(word), split, g)
            .unwrap()
            .into_iter()
            .map(|(w, f)| (w.render(), f.name()))
            .collect()
    }

    #[test]
    fn split_validation() {
        let g = parse_graph("edges v1 v2, v2 v3, v3 v4, v4 v1").unwrap().graph;
        let d1 = g.vertex_set_from_labels(&["v1", "v2", "v4"]).unwrap();
        let d2 = g.vertex_set_from_labels(&["v2", "v3"]).unwrap();
        // edge v3 v4 lies in neither side
        assert!(matches!(
            GraphSplit::new(&g, d1, d2),
            Err(Error::InvalidSplit(_))
        ));
    }

    #[test]
    fn syllable_examples() {
        let g = e3();
        let split = e3_split(&g);
        assert_eq!(syllables("b", &g, &split), vec![("b".to_string(), "lambda")]);
        assert_eq!(
            syllables("a c", &g, &split),
            vec![("a".to_string(), "1"), ("c".to_string(), "2")]
        );
        assert_eq!(
            syllables("c a", &g, &split),
            vec![("c".to_string(), "2"), ("a".to_string(), "1")]
        );
    }

    #[test]
    fn itinerary_examples() {
        let g = e3();
        let split = e3_split(&g);
        let render = |it: &Itinerary| {
            let mut out = vec![format!("B{}:{}", it.blocks[0].side.number(), it.blocks[0].rep.render())];
            for i in 0..it.walls.len() {
                out.push(format!("W:{}", it.walls[i].rep.render()));
                out.push(format!(
                    "B{}:{}",
                    it.blocks[i + 1].side.number(),
                    it.blocks[i + 1].rep.render()
                ));
            }
            out.join(" ")
        };

        let it = itinerary(&GroupWord::parse("b"), &split, &g).unwrap();
        assert_eq!(render(&it), "B1:e");
        check_itinerary(&it, &split, &g).unwrap();

        let it = itinerary(&GroupWord::parse("a c"), &split, &g).unwrap();
        assert_eq!(render(&it), "B1:e W:a B2:a");
        check_itinerary(&it, &split, &g).unwrap();

        let it = itinerary(&GroupWord::parse("c a"), &split, &g).unwrap();
        assert_eq!(render(&it), "B1:e W:e B2:e W:c B1:c");
        check_itinerary(&it, &split, &g).unwrap();
    }

    #[test]
    fn cutset_examples() {
        let g = e3();
        let split = e3_split(&g);
        let report = cutset_check(
            &GroupWord::parse("a"),
            &GroupWord::parse("c"),
            &split,
            5,
            &g,
        )
        .unwrap();
        assert!(report.separated);
        let members: Vec<String> = report
            .wall_members_in_ball
            .iter()
            .map(|w| w.render())
            .collect();
        assert_eq!(members, vec!["e", "b"]);

        // same block: itineraries coincide
        assert!(matches!(
            cutset_check(&GroupWord::parse("a"), &GroupWord::parse("a b"), &split, 5, &g),
            Err(Error::EqualItineraries)
        ));

        assert!(matches!(
            cutset_check(&GroupWord::parse("a"), &GroupWord::parse("c"), &split, 2, &g),
            Err(Error::RadiusTooSmall { .. })
        ));
    }

    #[test]
    fn ball_sizes_match_the_free_product_tree() {
        let g = e3();
        let (elements, _) = cayley_ball(&g, 3);
        // 1 + 3 * (2^3 - 1)
        assert_eq!(elements.len(), 22);
    }
}
