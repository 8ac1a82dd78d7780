//! Certificate-producing membership tests for the recursively defined
//! graph classes that guarantee a totally disconnected Morse boundary.
//!
//! Base leaves: edgeless graphs, trees, cliques, non-trivial joins (any
//! join of two non-empty graphs in the Artin variant) and Charney–Sultan
//! graphs. The closure rule covers a graph by two proper induced
//! subgraphs whose intersection is empty, a clique, or contained in a
//! non-trivial join of two induced subgraphs of the covered graph; both
//! cover sides must be members themselves.
//!
//! The search is exact: a `Refuted` answer means the full split space was
//! exhausted. Budgets abort with an error instead of guessing.

use std::collections::HashMap;
use std::rc::Rc;

use crate::cycles::{induced_cycles_budgeted, induced_four_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::{JoinWitness, SimplicialGraph, VertexSet};
use crate::obstruction::DEFAULT_CYCLE_BUDGET;

/// Which class is being decided: the Coxeter variant admits only
/// non-trivial joins as leaves, the Artin variant admits every join of
/// two non-empty graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassVariant {
    Coxeter,
    Artin,
}

/// The side condition placed on the intersection of a split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaCondition {
    Empty,
    Clique,
    InNontrivialJoin(JoinWitness),
}

impl LambdaCondition {
    pub fn name(&self) -> &'static str {
        match self {
            LambdaCondition::Empty => "empty",
            LambdaCondition::Clique => "clique",
            LambdaCondition::InNontrivialJoin(_) => "in-nontrivial-join",
        }
    }
}

/// Witness for a Charney–Sultan decomposition: an induced cycle of length
/// at least five and a non-trivial join covering the rest of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharneySultanWitness {
    pub cycle: Cycle,
    pub join_part: VertexSet,
    pub join: JoinWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub lambda1: VertexSet,
    pub lambda2: VertexSet,
    pub lambda: VertexSet,
    pub condition: LambdaCondition,
}

/// Record attached to a refutation: how much ground the exhaustive search
/// covered. `exhaustive` is always true for certificates this module
/// emits; running out of budget raises an error instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutationRecord {
    pub splits_examined: u64,
    pub subproblems: u64,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    Edgeless,
    Tree,
    Clique,
    NontrivialJoin(JoinWitness),
    /// Possibly trivial join of two non-empty graphs; Artin variant only.
    Join(JoinWitness),
    CharneySultan(CharneySultanWitness),
    Split(SplitWitness),
    Refuted(RefutationRecord),
}

impl CertificateKind {
    pub fn name(&self) -> &'static str {
        match self {
            CertificateKind::Edgeless => "Edgeless",
            CertificateKind::Tree => "Tree",
            CertificateKind::Clique => "Clique",
            CertificateKind::NontrivialJoin(_) => "NontrivialJoin",
            CertificateKind::Join(_) => "Join",
            CertificateKind::CharneySultan(_) => "CharneySultan",
            CertificateKind::Split(_) => "Split",
            CertificateKind::Refuted(_) => "Refuted",
        }
    }
}

/// A replayable derivation tree over vertex subsets of a fixed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub subject: VertexSet,
    pub kind: CertificateKind,
    pub children: Vec<Certificate>,
}

impl Certificate {
    pub fn is_member(&self) -> bool {
        !matches!(self.kind, CertificateKind::Refuted(_))
    }

    fn leaf(subject: VertexSet, kind: CertificateKind) -> Certificate {
        Certificate {
            subject,
            kind,
            children: Vec::new(),
        }
    }
}

/// Search limits. `split_nodes = None` runs the exact search to
/// completion; a bound makes the search abort with
/// [`Error::BudgetExceeded`] once that many candidate splits and
/// subproblems have been examined.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub split_nodes: Option<u64>,
    pub cycle_cap: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            split_nodes: None,
            cycle_cap: DEFAULT_CYCLE_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub splits_examined: u64,
    pub subproblems: u64,
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub variant: ClassVariant,
    pub certificate: Certificate,
    pub stats: SearchStats,
}

pub fn decide_coxeter_class(g: &SimplicialGraph) -> Result<Decision> {
    decide_class(g, ClassVariant::Coxeter, SearchBudget::default())
}

pub fn decide_artin_class(g: &SimplicialGraph) -> Result<Decision> {
    decide_class(g, ClassVariant::Artin, SearchBudget::default())
}

pub fn decide_class(
    g: &SimplicialGraph,
    variant: ClassVariant,
    budget: SearchBudget,
) -> Result<Decision> {
    let mut searcher = Searcher {
        g,
        variant,
        budget,
        memo: HashMap::new(),
        stats: SearchStats::default(),
    };
    let subject = g.vertex_set();
    let certificate = match searcher.decide(subject)? {
        Some(cert) => (*cert).clone(),
        None => Certificate::leaf(
            subject,
            CertificateKind::Refuted(RefutationRecord {
                splits_examined: searcher.stats.splits_examined,
                subproblems: searcher.stats.subproblems,
                exhaustive: true,
            }),
        ),
    };
    Ok(Decision {
        variant,
        certificate,
        stats: searcher.stats,
    })
}

struct Searcher<'g> {
    g: &'g SimplicialGraph,
    variant: ClassVariant,
    budget: SearchBudget,
    memo: HashMap<u64, Option<Rc<Certificate>>>,
    stats: SearchStats,
}

impl<'g> Searcher<'g> {
    fn tick(&mut self, splits: u64) -> Result<()> {
        self.stats.splits_examined += splits;
        if let Some(max) = self.budget.split_nodes {
            let used = self.stats.splits_examined + self.stats.subproblems;
            if used > max {
                return Err(Error::BudgetExceeded(used));
            }
        }
        Ok(())
    }

    fn decide(&mut self, subject: VertexSet) -> Result<Option<Rc<Certificate>>> {
        if let Some(hit) = self.memo.get(&subject.0) {
            return Ok(hit.clone());
        }
        self.stats.subproblems += 1;
        self.tick(0)?;
        let result = self.decide_uncached(subject)?;
        self.memo.insert(subject.0, result.clone());
        Ok(result)
    }

    fn decide_uncached(&mut self, subject: VertexSet) -> Result<Option<Rc<Certificate>>> {
        let g = self.g;
        let member = |kind| Ok(Some(Rc::new(Certificate::leaf(subject, kind))));

        if g.set_is_edgeless(subject) {
            return member(CertificateKind::Edgeless);
        }
        if g.set_is_tree(subject) {
            return member(CertificateKind::Tree);
        }
        if g.set_is_clique(subject) {
            return member(CertificateKind::Clique);
        }
        if subject.len() >= 2 {
            if let Some(w) = g.join_split_within(subject) {
                match self.variant {
                    ClassVariant::Coxeter if w.nontrivial => {
                        return member(CertificateKind::NontrivialJoin(w));
                    }
                    ClassVariant::Artin => {
                        return member(CertificateKind::Join(w));
                    }
                    _ => {}
                }
            }
        }
        if g.set_is_connected(subject) {
            if let Some(cs) = charney_sultan_within(g, subject, self.budget.cycle_cap)? {
                return member(CertificateKind::CharneySultan(cs));
            }
        }

        let mut stream = SplitStream::over_subset(g, subject);
        while let Some(split) = stream.next() {
            self.tick(stream.take_ticks())?;
            let Some(c1) = self.decide(split.lambda1)? else {
                continue;
            };
            let Some(c2) = self.decide(split.lambda2)? else {
                continue;
            };
            let cert = Certificate {
                subject,
                kind: CertificateKind::Split(SplitWitness {
                    lambda1: split.lambda1,
                    lambda2: split.lambda2,
                    lambda: split.lambda,
                    condition: split.condition,
                }),
                children: vec![(*c1).clone(), (*c2).clone()],
            };
            return Ok(Some(Rc::new(cert)));
        }
        self.tick(stream.take_ticks())?;
        Ok(None)
    }
}

/// One admissible cover of a graph by two proper induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSplit {
    pub lambda1: VertexSet,
    pub lambda2: VertexSet,
    pub lambda: VertexSet,
    pub condition: LambdaCondition,
}

/// Stream of admissible splits of the whole graph, smallest intersection
/// first, lexicographic within a size, without duplicates (the side
/// containing the smallest uncovered vertex is always `lambda1`).
pub fn admissible_splits(g: &SimplicialGraph) -> Result<SplitStream<'_>> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, got: n });
    }
    Ok(SplitStream::over_subset(g, g.vertex_set()))
}

pub struct SplitStream<'g> {
    g: &'g SimplicialGraph,
    subject: VertexSet,
    members: Vec<usize>,
    /// Induced 4-cycles of the subject subgraph, in root indices, shared
    /// by the intersection-condition checks.
    four_cycles: Vec<VertexSet>,
    lam_size: usize,
    combos: Combinations,
    current: Option<PendingLambda>,
    ticks: u64,
}

struct PendingLambda {
    lambda: VertexSet,
    condition: LambdaCondition,
    comps: Vec<VertexSet>,
    next_assignment: u64,
}

impl<'g> SplitStream<'g> {
    fn over_subset(g: &'g SimplicialGraph, subject: VertexSet) -> SplitStream<'g> {
        let members: Vec<usize> = subject.iter().collect();
        let four_cycles = four_cycles_within(g, subject);
        SplitStream {
            g,
            subject,
            combos: Combinations::new(members.clone(), 0),
            members,
            four_cycles,
            lam_size: 0,
            current: None,
            ticks: 0,
        }
    }

    fn take_ticks(&mut self) -> u64 {
        std::mem::take(&mut self.ticks)
    }
}

impl<'g> Iterator for SplitStream<'g> {
    type Item = AdmissibleSplit;

    fn next(&mut self) -> Option<AdmissibleSplit> {
        loop {
            if let Some(cur) = &mut self.current {
                let m = cur.comps.len();
                let max = 1u64 << (m - 1);
                if cur.next_assignment < max {
                    let t = cur.next_assignment;
                    cur.next_assignment += 1;
                    let mut side2 = VertexSet::EMPTY;
                    for i in 0..m - 1 {
                        if t >> i & 1 == 1 {
                            side2 = side2.union(cur.comps[i + 1]);
                        }
                    }
                    let side1 = self.subject.difference(cur.lambda).difference(side2);
                    self.ticks += 1;
                    return Some(AdmissibleSplit {
                        lambda1: cur.lambda.union(side1),
                        lambda2: cur.lambda.union(side2),
                        lambda: cur.lambda,
                        condition: cur.condition.clone(),
                    });
                }
                self.current = None;
            }
            match self.combos.next() {
                Some(lambda) => {
                    self.ticks += 1;
                    let condition = if lambda.is_empty() {
                        LambdaCondition::Empty
                    } else if self.g.set_is_clique(lambda) {
                        LambdaCondition::Clique
                    } else {
                        match nontrivial_join_containing(
                            self.g,
                            self.subject,
                            &self.four_cycles,
                            lambda,
                        ) {
                            Some(w) => LambdaCondition::InNontrivialJoin(w),
                            None => continue,
                        }
                    };
                    let comps = self
                        .g
                        .components_within(self.subject.difference(lambda));
                    if comps.len() < 2 {
                        continue;
                    }
                    self.current = Some(PendingLambda {
                        lambda,
                        condition,
                        comps,
                        next_assignment: 1,
                    });
                }
                None => {
                    // the intersection leaves at least two vertices aside
                    self.lam_size += 1;
                    if self.lam_size + 2 > self.subject.len() {
                        return None;
                    }
                    self.combos = Combinations::new(self.members.clone(), self.lam_size);
                }
            }
        }
    }
}

/// Size-`k` subsets of `members` (which must be ascending), emitted in
/// lexicographic order as vertex sets.
struct Combinations {
    members: Vec<usize>,
    k: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(members: Vec<usize>, k: usize) -> Combinations {
        let done = k > members.len();
        Combinations {
            idx: (0..k).collect(),
            members,
            k,
            done,
        }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = VertexSet::from_indices(self.idx.iter().map(|&i| self.members[i]));
        if self.k == 0 {
            self.done = true;
            return Some(out);
        }
        let n = self.members.len();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] != i + n - self.k {
                self.idx[i] += 1;
                for j in i + 1..self.k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

fn four_cycles_within(g: &SimplicialGraph, subject: VertexSet) -> Vec<VertexSet> {
    if subject == g.vertex_set() {
        return induced_four_cycles(g)
            .iter()
            .map(|c| c.vertex_set())
            .collect();
    }
    let sub = g
        .induced_subgraph(subject)
        .expect("subject lies inside the graph");
    let back: Vec<usize> = subject.iter().collect();
    induced_four_cycles(&sub)
        .iter()
        .map(|c| VertexSet::from_indices(c.vertices().iter().map(|&v| back[v])))
        .collect()
}

/// Search for disjoint sets `A`, `B` inside `subject`, completely joined
/// in `g`, each containing a non-edge, with `lambda` inside their union.
///
/// Any such join contains an induced 4-cycle with a non-edge on each
/// side, so it is enough to try every induced 4-cycle as an anchor: two
/// vertices that are non-adjacent can never sit on opposite sides, so the
/// components of the complement graph on (anchor + lambda) must each go
/// wholly to one side, and the two anchor non-edges pin two of them.
fn nontrivial_join_containing(
    g: &SimplicialGraph,
    subject: VertexSet,
    four_cycles: &[VertexSet],
    lambda: VertexSet,
) -> Option<JoinWitness> {
    debug_assert!(lambda.is_subset_of(subject));
    for &quad in four_cycles {
        let core = quad.union(lambda);
        let comps = g.complement_components_within(core);
        // the two non-edges of the 4-cycle: opposite pairs
        let qs: Vec<usize> = quad.iter().collect();
        let (a_pair, b_pair) = four_cycle_non_edges(g, &qs);
        let mut side_a = VertexSet::EMPTY;
        let mut side_b = VertexSet::EMPTY;
        let mut consistent = true;
        for comp in &comps {
            let touches_a = !comp.intersection(a_pair).is_empty();
            let touches_b = !comp.intersection(b_pair).is_empty();
            match (touches_a, touches_b) {
                (true, true) => {
                    consistent = false;
                    break;
                }
                (false, true) => side_b = side_b.union(*comp),
                // free components join side A
                _ => side_a = side_a.union(*comp),
            }
        }
        if consistent {
            return Some(JoinWitness {
                side_a,
                side_b,
                nontrivial: true,
            });
        }
    }
    None
}

fn four_cycle_non_edges(g: &SimplicialGraph, quad: &[usize]) -> (VertexSet, VertexSet) {
    debug_assert_eq!(quad.len(), 4);
    let a = quad[0];
    let partner = quad[1..]
        .iter()
        .copied()
        .find(|&v| !g.adjacent(a, v))
        .expect("an induced 4-cycle has a vertex opposite to each vertex");
    let rest: Vec<usize> = quad[1..].iter().copied().filter(|&v| v != partner).collect();
    (
        VertexSet::from_indices([a, partner]),
        VertexSet::from_indices(rest),
    )
}

/// Public form of the intersection-condition search on a whole graph.
pub fn contained_in_nontrivial_join(
    g: &SimplicialGraph,
    lambda: VertexSet,
) -> Result<Option<JoinWitness>> {
    if !lambda.is_subset_of(g.vertex_set()) {
        return Err(Error::NotASubset);
    }
    let four_cycles: Vec<VertexSet> = induced_four_cycles(g)
        .iter()
        .map(|c| c.vertex_set())
        .collect();
    Ok(nontrivial_join_containing(
        g,
        g.vertex_set(),
        &four_cycles,
        lambda,
    ))
}

/// Charney–Sultan decomposition of a connected graph: a proper induced
/// cycle of length at least five plus a proper induced non-trivial join
/// covering all remaining vertices and edges. For each candidate cycle
/// the join part must contain every endpoint of an edge outside the
/// cycle; supersets of that forced core are tried in increasing size.
pub fn is_charney_sultan(g: &SimplicialGraph) -> Result<Option<CharneySultanWitness>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    charney_sultan_within(g, g.vertex_set(), DEFAULT_CYCLE_BUDGET)
}

fn charney_sultan_within(
    g: &SimplicialGraph,
    subject: VertexSet,
    cycle_cap: u64,
) -> Result<Option<CharneySultanWitness>> {
    let back: Vec<usize> = subject.iter().collect();
    let sub = g
        .induced_subgraph(subject)
        .expect("subject lies inside the graph");
    let to_root = |s: VertexSet| VertexSet::from_indices(s.iter().map(|v| back[v]));

    for cycle in induced_cycles_budgeted(&sub, 5, cycle_cap)? {
        if cycle.len() == sub.vertex_count() {
            continue; // the cycle must be a proper subgraph
        }
        let cycle_edges = cycle.edges();
        let mut s_min = sub.vertex_set().difference(cycle.vertex_set());
        for (u, v) in sub.edges() {
            if !cycle_edges.contains(&(u, v)) {
                s_min.insert(u);
                s_min.insert(v);
            }
        }
        if s_min == sub.vertex_set() {
            continue;
        }
        let extras: Vec<usize> = sub.vertex_set().difference(s_min).iter().collect();
        for k in 0..=extras.len() {
            let mut found = None;
            for extra in Combinations::new(extras.clone(), k) {
                let s = s_min.union(extra);
                if s == sub.vertex_set() {
                    continue;
                }
                if let Some(w) = sub.join_split_within(s) {
                    if w.nontrivial {
                        found = Some((s, w));
                        break;
                    }
                }
            }
            if let Some((s, w)) = found {
                let root_cycle: Vec<usize> =
                    cycle.vertices().iter().map(|&v| back[v]).collect();
                return Ok(Some(CharneySultanWitness {
                    cycle: Cycle::new(g, &root_cycle).expect("cycle survives re-indexing"),
                    join_part: to_root(s),
                    join: JoinWitness {
                        side_a: to_root(w.side_a),
                        side_b: to_root(w.side_b),
                        nontrivial: true,
                    },
                }));
            }
        }
    }
    Ok(None)
}

/// Independent re-validation of a member certificate against the graph:
/// every node is checked directly against the class definitions.
pub fn replay(g: &SimplicialGraph, variant: ClassVariant, cert: &Certificate) -> Result<()> {
    if cert.subject != g.vertex_set() {
        return Err(Error::Replay(
            "root certificate does not cover the whole graph".into(),
        ));
    }
    replay_node(g, variant, cert)
}

fn replay_node(g: &SimplicialGraph, variant: ClassVariant, cert: &Certificate) -> Result<()> {
    let subject = cert.subject;
    let fail = |m: &str| Err(Error::Replay(m.into()));
    if !subject.is_subset_of(g.vertex_set()) {
        return fail("subject leaves the graph");
    }
    if !matches!(cert.kind, CertificateKind::Split(_)) && !cert.children.is_empty() {
        return fail("leaf node with children");
    }
    match &cert.kind {
        CertificateKind::Edgeless => {
            if !g.set_is_edgeless(subject) {
                return fail("edgeless leaf has an edge");
            }
        }
        CertificateKind::Tree => {
            if !g.set_is_tree(subject) {
                return fail("tree leaf is not a tree");
            }
        }
        CertificateKind::Clique => {
            if !g.set_is_clique(subject) {
                return fail("clique leaf is not a clique");
            }
        }
        CertificateKind::NontrivialJoin(w) => {
            check_join(g, subject, w, true)?;
        }
        CertificateKind::Join(w) => {
            if variant != ClassVariant::Artin {
                return fail("trivial join leaf outside the Artin variant");
            }
            check_join(g, subject, w, false)?;
        }
        CertificateKind::CharneySultan(cs) => {
            if !g.set_is_connected(subject) {
                return fail("Charney–Sultan subject is disconnected");
            }
            let cycle = Cycle::new(g, cs.cycle.vertices())
                .map_err(|_| Error::Replay("witness cycle is not an induced cycle".into()))?;
            if cycle.len() < 5 {
                return fail("witness cycle shorter than five");
            }
            let cset = cycle.vertex_set();
            if !cset.is_subset_of(subject) || cset == subject {
                return fail("witness cycle is not a proper subgraph");
            }
            if !cs.join_part.is_subset_of(subject) || cs.join_part == subject {
                return fail("join part is not a proper subgraph");
            }
            if cset.union(cs.join_part) != subject {
                return fail("cycle and join do not cover the vertices");
            }
            let cycle_edges = cycle.edges();
            for u in subject.iter() {
                for v in g.neighbors(u).intersection(subject).iter() {
                    if v <= u {
                        continue;
                    }
                    let in_cycle = cycle_edges.contains(&(u, v));
                    let in_join = cs.join_part.contains(u) && cs.join_part.contains(v);
                    if !in_cycle && !in_join {
                        return fail("edge outside both the cycle and the join part");
                    }
                }
            }
            if cs.join.side_a.union(cs.join.side_b) != cs.join_part {
                return fail("join witness does not span the join part");
            }
            check_join(g, cs.join_part, &cs.join, true)?;
        }
        CertificateKind::Split(sw) => {
            if sw.lambda1.union(sw.lambda2) != subject {
                return fail("split sides do not cover the subject");
            }
            if sw.lambda1 == subject || sw.lambda2 == subject {
                return fail("split side is not proper");
            }
            if sw.lambda1.intersection(sw.lambda2) != sw.lambda {
                return fail("split intersection mismatch");
            }
            for u in subject.iter() {
                for v in g.neighbors(u).intersection(subject).iter() {
                    if v <= u {
                        continue;
                    }
                    let in1 = sw.lambda1.contains(u) && sw.lambda1.contains(v);
                    let in2 = sw.lambda2.contains(u) && sw.lambda2.contains(v);
                    if !in1 && !in2 {
                        return fail("edge not covered by either split side");
                    }
                }
            }
            match &sw.condition {
                LambdaCondition::Empty => {
                    if !sw.lambda.is_empty() {
                        return fail("intersection is not empty");
                    }
                }
                LambdaCondition::Clique => {
                    if !g.set_is_clique(sw.lambda) {
                        return fail("intersection is not a clique");
                    }
                }
                LambdaCondition::InNontrivialJoin(w) => {
                    if !w.side_a.union(w.side_b).is_subset_of(subject) {
                        return fail("containing join leaves the subject");
                    }
                    if !sw.lambda.is_subset_of(w.side_a.union(w.side_b)) {
                        return fail("intersection not inside the join");
                    }
                    check_join(g, w.side_a.union(w.side_b), w, true)?;
                }
            }
            if cert.children.len() != 2 {
                return fail("split must have two children");
            }
            if cert.children[0].subject != sw.lambda1 || cert.children[1].subject != sw.lambda2 {
                return fail("children do not certify the split sides");
            }
            for child in &cert.children {
                replay_node(g, variant, child)?;
            }
        }
        CertificateKind::Refuted(_) => {
            return fail("refutations are records, not replayable proofs");
        }
    }
    Ok(())
}

fn check_join(
    g: &SimplicialGraph,
    span: VertexSet,
    w: &JoinWitness,
    require_nontrivial: bool,
) -> Result<()> {
    let fail = |m: &str| Err(Error::Replay(m.into()));
    if w.side_a.is_empty() || w.side_b.is_empty() {
        return fail("join side is empty");
    }
    if !w.side_a.intersection(w.side_b).is_empty() {
        return fail("join sides overlap");
    }
    if !w.side_a.union(w.side_b).is_subset_of(span) {
        return fail("join sides leave their span");
    }
    for a in w.side_a.iter() {
        if !w.side_b.is_subset_of(g.neighbors(a)) {
            return fail("missing cross edge in join");
        }
    }
    if require_nontrivial && (g.set_is_clique(w.side_a) || g.set_is_clique(w.side_b)) {
        return fail("join is trivial where a non-trivial one is required");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_graph;

    fn graph(text: &str) -> SimplicialGraph {
        parse_graph(text).unwrap().graph
    }

    fn c6g() -> SimplicialGraph {
        graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v6, v6 v1, u v1, u v3")
    }

    fn c5() -> SimplicialGraph {
        graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v1")
    }

    #[test]
    fn charney_sultan_examples() {
        let g = c6g();
        let w = is_charney_sultan(&g).unwrap().unwrap();
        assert_eq!(w.cycle.labels(&g), vec!["u", "v1", "v6", "v5", "v4", "v3"]);
        assert_eq!(g.set_labels(w.join_part), vec!["u", "v1", "v2", "v3"]);
        assert!(w.join.nontrivial);

        assert_eq!(is_charney_sultan(&c5()).unwrap(), None);
        let c4 = graph("edges a b, b c, c d, d a");
        assert_eq!(is_charney_sultan(&c4).unwrap(), None);
        let disconnected = graph("vertices x\nedges a b");
        assert!(is_charney_sultan(&disconnected).is_err());
    }

    #[test]
    fn contained_in_nontrivial_join_examples() {
        let c4 = graph("edges v1 v2, v2 v3, v3 v4, v4 v1");
        let lam = c4.vertex_set_from_labels(&["v1", "v3"]).unwrap();
        let w = contained_in_nontrivial_join(&c4, lam).unwrap().unwrap();
        assert_eq!(c4.set_labels(w.side_a), vec!["v1", "v3"]);
        assert_eq!(c4.set_labels(w.side_b), vec!["v2", "v4"]);

        let g = c5();
        let lam = g.vertex_set_from_labels(&["v1"]).unwrap();
        assert_eq!(contained_in_nontrivial_join(&g, lam).unwrap(), None);

        let k3 = graph("edges a b, b c, a c");
        assert_eq!(
            contained_in_nontrivial_join(&k3, VertexSet::EMPTY).unwrap(),
            None
        );
    }

    #[test]
    fn decide_base_cases() {
        let e3 = graph("vertices a b c\nedges\n");
        let d = decide_coxeter_class(&e3).unwrap();
        assert_eq!(d.certificate.kind, CertificateKind::Edgeless);
        replay(&e3, ClassVariant::Coxeter, &d.certificate).unwrap();

        let g = c6g();
        let d = decide_coxeter_class(&g).unwrap();
        assert!(matches!(d.certificate.kind, CertificateKind::CharneySultan(_)));
        replay(&g, ClassVariant::Coxeter, &d.certificate).unwrap();

        let d = decide_coxeter_class(&c5()).unwrap();
        assert!(matches!(d.certificate.kind, CertificateKind::Refuted(_)));
        assert!(!d.certificate.is_member());
    }

    #[test]
    fn artin_variant_examples() {
        let p4 = graph("edges a b, b c, c d");
        let d = decide_artin_class(&p4).unwrap();
        assert_eq!(d.certificate.kind, CertificateKind::Tree);

        // trees come before joins in the derivation order
        let p3 = graph("edges a b, b c");
        let d = decide_artin_class(&p3).unwrap();
        assert_eq!(d.certificate.kind, CertificateKind::Tree);

        // a trivial join that is neither a tree nor a clique lands on the
        // Artin join leaf: a cone over the 4-path
        let cone = graph("edges a b, b c, c d, x a, x b, x c, x d");
        let d = decide_artin_class(&cone).unwrap();
        match &d.certificate.kind {
            CertificateKind::Join(w) => assert!(!w.nontrivial),
            other => panic!("unexpected kind: {other:?}"),
        }
        replay(&cone, ClassVariant::Artin, &d.certificate).unwrap();

        let c4 = graph("edges a b, b c, c d, d a");
        let d = decide_artin_class(&c4).unwrap();
        assert!(matches!(d.certificate.kind, CertificateKind::Join(_)));

        let d = decide_artin_class(&c5()).unwrap();
        assert!(matches!(d.certificate.kind, CertificateKind::Refuted(_)));
    }

    #[test]
    fn admissible_split_examples() {
        let g = c6g();
        let splits: Vec<AdmissibleSplit> = admissible_splits(&g).unwrap().collect();
        let l1 = g
            .vertex_set_from_labels(&["v1", "v2", "v3", "v4", "v5", "v6"])
            .unwrap();
        let l2 = g.vertex_set_from_labels(&["u", "v1", "v2", "v3"]).unwrap();
        let lam = g.vertex_set_from_labels(&["v1", "v2", "v3"]).unwrap();
        assert!(splits.iter().any(|s| {
            (s.lambda1 == l1 && s.lambda2 == l2 || s.lambda1 == l2 && s.lambda2 == l1)
                && s.lambda == lam
                && matches!(s.condition, LambdaCondition::InNontrivialJoin(_))
        }));

        let two_edges = graph("edges a b, c d");
        let splits: Vec<AdmissibleSplit> = admissible_splits(&two_edges).unwrap().collect();
        assert!(splits.iter().any(|s| {
            s.lambda.is_empty()
                && two_edges.set_labels(s.lambda1) == vec!["a", "b"]
                && two_edges.set_labels(s.lambda2) == vec!["c", "d"]
        }));

        let k3 = graph("edges a b, b c, a c");
        assert_eq!(admissible_splits(&k3).unwrap().count(), 0);
    }

    #[test]
    fn budget_aborts_instead_of_refuting() {
        let g = c5();
        let tight = SearchBudget {
            split_nodes: Some(3),
            cycle_cap: DEFAULT_CYCLE_BUDGET,
        };
        match decide_class(&g, ClassVariant::Coxeter, tight) {
            Err(Error::BudgetExceeded(_)) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn replay_rejects_tampered_certificates() {
        let g = c6g();
        let mut d = decide_coxeter_class(&g).unwrap();
        if let CertificateKind::CharneySultan(cs) = &mut d.certificate.kind {
            cs.join_part.remove(cs.join_part.min().unwrap());
        }
        assert!(replay(&g, ClassVariant::Coxeter, &d.certificate).is_err());
    }
}
