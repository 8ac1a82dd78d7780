//! Final boundary verdicts for a defining graph, as a fixed decision
//! ladder over the other modules. Every non-`Unknown` verdict carries a
//! witness that re-validates against the graph; `Unknown` is an honest
//! outcome, not a failure.

use crate::cycles::{induced_four_cycles, Cycle};
use crate::decomposition::{
    decide_class, replay, Certificate, ClassVariant, SearchBudget,
};
use crate::error::{Error, Result};
use crate::graph::{JoinWitness, SimplicialGraph, VertexSet};
use crate::obstruction::find_circle_obstruction_budgeted;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Racg,
    Raag,
}

impl GroupKind {
    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::Racg => "racg",
            GroupKind::Raag => "raag",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Empty,
    TwoPoints,
    Cantor,
    OmegaCantor,
    TotallyDisconnected,
    ContainsCircle,
    Unknown,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Empty => "Empty",
            Verdict::TwoPoints => "TwoPoints",
            Verdict::Cantor => "Cantor",
            Verdict::OmegaCantor => "OmegaCantor",
            Verdict::TotallyDisconnected => "TotallyDisconnected",
            Verdict::ContainsCircle => "ContainsCircle",
            Verdict::Unknown => "Unknown",
        }
    }
}

/// The witness backing a verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Clique(VertexSet),
    Join(JoinWitness),
    TwoNonAdjacentVertices(VertexSet),
    Suspension { pair: VertexSet, clique: VertexSet },
    SingleVertex,
    Membership {
        certificate: Certificate,
        has_induced_four_cycle: bool,
    },
    Circle(Cycle),
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnknownReason {
    LadderExhausted,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryVerdict {
    pub group: GroupKind,
    pub verdict: Verdict,
    /// Short tag naming the criterion that fired.
    pub theorem: &'static str,
    pub witness: Witness,
    pub reason: Option<UnknownReason>,
}

pub fn classify_racg(g: &SimplicialGraph) -> BoundaryVerdict {
    classify(g, GroupKind::Racg, SearchBudget::default())
}

pub fn classify_raag(g: &SimplicialGraph) -> BoundaryVerdict {
    classify(g, GroupKind::Raag, SearchBudget::default())
}

pub fn classify(g: &SimplicialGraph, group: GroupKind, budget: SearchBudget) -> BoundaryVerdict {
    match group {
        GroupKind::Racg => classify_racg_budgeted(g, budget),
        GroupKind::Raag => classify_raag_budgeted(g, budget),
    }
}

fn budget_unknown(group: GroupKind) -> BoundaryVerdict {
    BoundaryVerdict {
        group,
        verdict: Verdict::Unknown,
        theorem: "search-budget-exceeded",
        witness: Witness::None,
        reason: Some(UnknownReason::BudgetExceeded),
    }
}

fn classify_racg_budgeted(g: &SimplicialGraph, budget: SearchBudget) -> BoundaryVerdict {
    let group = GroupKind::Racg;
    let done = |verdict, theorem, witness| BoundaryVerdict {
        group,
        verdict,
        theorem,
        witness,
        reason: None,
    };

    // (a) finite group or product of two infinite ones
    if g.is_clique() {
        return done(
            Verdict::Empty,
            "empty-iff-clique-or-nontrivial-join",
            Witness::Clique(g.vertex_set()),
        );
    }
    if g.vertex_count() >= 2 {
        if let Ok(Some(w)) = g.join_split() {
            if w.nontrivial {
                return done(
                    Verdict::Empty,
                    "empty-iff-clique-or-nontrivial-join",
                    Witness::Join(w),
                );
            }
        }
    }
    // (b) virtually cyclic groups
    if g.vertex_count() == 2 && g.edge_count() == 0 {
        return done(
            Verdict::TwoPoints,
            "virtually-cyclic-two-points",
            Witness::TwoNonAdjacentVertices(g.vertex_set()),
        );
    }
    if let Some((pair, clique)) = g.suspension_of_clique() {
        return done(
            Verdict::TwoPoints,
            "virtually-cyclic-two-points",
            Witness::Suspension { pair, clique },
        );
    }
    // (c) totally disconnected by class membership, refined by hyperbolicity
    let decision = match decide_class(g, ClassVariant::Coxeter, budget) {
        Ok(d) => d,
        Err(Error::BudgetExceeded(_)) | Err(Error::CycleBudgetExceeded(_)) => {
            return budget_unknown(group)
        }
        Err(_) => unreachable!("class decision only fails on budgets"),
    };
    if decision.certificate.is_member() {
        let has_square = !induced_four_cycles(g).is_empty();
        let verdict = if has_square {
            Verdict::OmegaCantor
        } else {
            Verdict::Cantor
        };
        let theorem = if has_square {
            "totally-disconnected-with-induced-four-cycle"
        } else {
            "totally-disconnected-hyperbolic"
        };
        return done(
            verdict,
            theorem,
            Witness::Membership {
                certificate: decision.certificate,
                has_induced_four_cycle: has_square,
            },
        );
    }
    // (d) circle obstruction
    match find_circle_obstruction_budgeted(g, budget.cycle_cap) {
        Ok(Some(cycle)) => done(
            Verdict::ContainsCircle,
            "unglued-long-cycle-gives-circle",
            Witness::Circle(cycle),
        ),
        Ok(None) => BoundaryVerdict {
            group,
            verdict: Verdict::Unknown,
            theorem: "ladder-exhausted",
            witness: Witness::None,
            reason: Some(UnknownReason::LadderExhausted),
        },
        Err(_) => budget_unknown(group),
    }
}

fn classify_raag_budgeted(g: &SimplicialGraph, budget: SearchBudget) -> BoundaryVerdict {
    let group = GroupKind::Raag;
    let done = |verdict, theorem, witness| BoundaryVerdict {
        group,
        verdict,
        theorem,
        witness,
        reason: None,
    };
    // (a) joins of two non-empty graphs give products of infinite groups
    if g.vertex_count() >= 2 {
        if let Ok(Some(w)) = g.join_split() {
            return done(Verdict::Empty, "empty-iff-join", Witness::Join(w));
        }
    }
    // (b) the infinite cyclic group
    if g.vertex_count() == 1 {
        return done(
            Verdict::TwoPoints,
            "infinite-cyclic-two-points",
            Witness::SingleVertex,
        );
    }
    // (c) class membership
    let decision = match decide_class(g, ClassVariant::Artin, budget) {
        Ok(d) => d,
        Err(Error::BudgetExceeded(_)) | Err(Error::CycleBudgetExceeded(_)) => {
            return budget_unknown(group)
        }
        Err(_) => unreachable!("class decision only fails on budgets"),
    };
    if decision.certificate.is_member() {
        return done(
            Verdict::TotallyDisconnected,
            "totally-disconnected-class-member",
            Witness::Membership {
                certificate: decision.certificate,
                has_induced_four_cycle: false,
            },
        );
    }
    BoundaryVerdict {
        group,
        verdict: Verdict::Unknown,
        theorem: "ladder-exhausted",
        witness: Witness::None,
        reason: Some(UnknownReason::LadderExhausted),
    }
}

/// Re-validate the witness backing a verdict. `Unknown` verdicts have
/// nothing to replay and always pass.
pub fn replay_verdict(g: &SimplicialGraph, v: &BoundaryVerdict) -> Result<()> {
    let fail = |m: &str| Err(Error::Replay(m.into()));
    match (&v.verdict, &v.witness) {
        (Verdict::Unknown, _) => Ok(()),
        (Verdict::Empty, Witness::Clique(s)) => {
            if *s == g.vertex_set() && g.is_clique() {
                Ok(())
            } else {
                fail("graph is not the claimed clique")
            }
        }
        (Verdict::Empty, Witness::Join(w)) => {
            if w.side_a.union(w.side_b) != g.vertex_set() {
                return fail("join witness does not span the graph");
            }
            let need_nontrivial = v.group == GroupKind::Racg;
            g.check_join_witness(w, need_nontrivial)
        }
        (Verdict::TwoPoints, Witness::TwoNonAdjacentVertices(s)) => {
            if g.vertex_count() == 2 && g.edge_count() == 0 && *s == g.vertex_set() {
                Ok(())
            } else {
                fail("graph is not two non-adjacent vertices")
            }
        }
        (Verdict::TwoPoints, Witness::Suspension { pair, clique }) => {
            match g.suspension_of_clique() {
                Some(_) => {
                    let all = pair.union(*clique);
                    let ps: Vec<usize> = pair.iter().collect();
                    if all != g.vertex_set()
                        || ps.len() != 2
                        || g.adjacent(ps[0], ps[1])
                        || !g.set_is_clique(*clique)
                        || !clique.is_subset_of(g.neighbors(ps[0]))
                        || !clique.is_subset_of(g.neighbors(ps[1]))
                    {
                        fail("suspension witness does not replay")
                    } else {
                        Ok(())
                    }
                }
                None => fail("graph is not a suspension of a clique"),
            }
        }
        (Verdict::TwoPoints, Witness::SingleVertex) => {
            if v.group == GroupKind::Raag && g.vertex_count() == 1 {
                Ok(())
            } else {
                fail("graph is not a single vertex")
            }
        }
        (Verdict::Cantor | Verdict::OmegaCantor, Witness::Membership { certificate, has_induced_four_cycle }) => {
            if v.group != GroupKind::Racg {
                return fail("refined verdicts are reserved for the Coxeter case");
            }
            let squares = !induced_four_cycles(g).is_empty();
            if squares != *has_induced_four_cycle {
                return fail("induced 4-cycle flag does not replay");
            }
            if (v.verdict == Verdict::OmegaCantor) != squares {
                return fail("verdict does not match the 4-cycle refinement");
            }
            replay(g, ClassVariant::Coxeter, certificate)
        }
        (Verdict::TotallyDisconnected, Witness::Membership { certificate, .. }) => {
            if v.group != GroupKind::Raag {
                return fail("unrefined verdict is reserved for the Artin case");
            }
            replay(g, ClassVariant::Artin, certificate)
        }
        (Verdict::ContainsCircle, Witness::Circle(c)) => {
            let c = Cycle::new(g, c.vertices())
                .map_err(|_| Error::Replay("witness is not an induced cycle".into()))?;
            if c.len() < 5 {
                return fail("witness cycle shorter than five");
            }
            match crate::obstruction::has_glued_four_cycle(g, &c)? {
                None => Ok(()),
                Some(_) => fail("witness cycle has a glued 4-cycle"),
            }
        }
        _ => fail("witness does not fit the verdict"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_graph;

    fn graph(text: &str) -> SimplicialGraph {
        parse_graph(text).unwrap().graph
    }

    fn verdict_racg(text: &str) -> Verdict {
        let g = graph(text);
        let v = classify_racg(&g);
        replay_verdict(&g, &v).unwrap();
        v.verdict
    }

    fn verdict_raag(text: &str) -> Verdict {
        let g = graph(text);
        let v = classify_raag(&g);
        replay_verdict(&g, &v).unwrap();
        v.verdict
    }

    #[test]
    fn racg_ladder() {
        assert_eq!(verdict_racg("edges v1 v2, v2 v3, v3 v4, v4 v1"), Verdict::Empty);
        assert_eq!(
            verdict_racg("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v1"),
            Verdict::ContainsCircle
        );
        assert_eq!(
            verdict_racg("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v6, v6 v1, u v1, u v3"),
            Verdict::OmegaCantor
        );
        assert_eq!(verdict_racg("edges a b, b c"), Verdict::TwoPoints);
        assert_eq!(verdict_racg("vertices a b c\nedges\n"), Verdict::Cantor);
        assert_eq!(verdict_racg("vertices a\nedges\n"), Verdict::Empty);
        assert_eq!(verdict_racg("vertices a b\nedges\n"), Verdict::TwoPoints);
        assert_eq!(verdict_racg("edges a b, b c, c d"), Verdict::Cantor);
    }

    #[test]
    fn raag_ladder() {
        assert_eq!(verdict_raag("edges a b"), Verdict::Empty);
        assert_eq!(verdict_raag("vertices a\nedges\n"), Verdict::TwoPoints);
        assert_eq!(verdict_raag("edges a b, b c"), Verdict::Empty);
        assert_eq!(
            verdict_raag("edges a b, b c, c d"),
            Verdict::TotallyDisconnected
        );
        assert_eq!(verdict_raag("vertices a b\nedges\n"), Verdict::TotallyDisconnected);
    }

    #[test]
    fn budget_propagates_as_unknown() {
        let g = graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v1");
        let tight = SearchBudget {
            split_nodes: Some(1),
            cycle_cap: crate::obstruction::DEFAULT_CYCLE_BUDGET,
        };
        let v = classify(&g, GroupKind::Racg, tight);
        assert_eq!(v.verdict, Verdict::Unknown);
        assert_eq!(v.reason, Some(UnknownReason::BudgetExceeded));
    }
}
