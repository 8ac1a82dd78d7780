//! JSON views of the structured results. Vertex sets are rendered as
//! sorted label arrays, so the output is stable across runs; parsing a
//! certificate back requires the graph it talks about.

use serde_json::{json, Value};

use crate::amalgam::{CutsetReport, Itinerary};
use crate::cfs::FourCycleGraph;
use crate::classify::{BoundaryVerdict, UnknownReason, Witness};
use crate::cycles::Cycle;
use crate::decomposition::{
    Certificate, CertificateKind, CharneySultanWitness, LambdaCondition, RefutationRecord,
    SplitWitness,
};
use crate::error::{Error, Result};
use crate::graph::{JoinWitness, SimplicialGraph, VertexSet};

pub fn set_to_json(g: &SimplicialGraph, s: VertexSet) -> Value {
    Value::Array(
        g.set_labels(s)
            .into_iter()
            .map(Value::String)
            .collect(),
    )
}

fn set_from_json(g: &SimplicialGraph, v: &Value) -> Result<VertexSet> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json("expected an array of vertex labels".into()))?;
    let mut out = VertexSet::EMPTY;
    for item in arr {
        let label = item
            .as_str()
            .ok_or_else(|| Error::Json("vertex labels must be strings".into()))?;
        out.insert(g.index_of(label)?);
    }
    Ok(out)
}

pub fn cycle_to_json(g: &SimplicialGraph, c: &Cycle) -> Value {
    Value::Array(c.labels(g).into_iter().map(Value::String).collect())
}

fn cycle_from_json(g: &SimplicialGraph, v: &Value) -> Result<Cycle> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json("expected a cycle as a label array".into()))?;
    let mut ids = Vec::new();
    for item in arr {
        let label = item
            .as_str()
            .ok_or_else(|| Error::Json("cycle entries must be strings".into()))?;
        ids.push(g.index_of(label)?);
    }
    Cycle::new(g, &ids)
}

pub fn join_to_json(g: &SimplicialGraph, w: &JoinWitness) -> Value {
    json!({
        "side_a": set_to_json(g, w.side_a),
        "side_b": set_to_json(g, w.side_b),
        "nontrivial": w.nontrivial,
    })
}

fn join_from_json(g: &SimplicialGraph, v: &Value) -> Result<JoinWitness> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("expected a join witness object".into()))?;
    Ok(JoinWitness {
        side_a: set_from_json(g, obj.get("side_a").unwrap_or(&Value::Null))?,
        side_b: set_from_json(g, obj.get("side_b").unwrap_or(&Value::Null))?,
        nontrivial: obj
            .get("nontrivial")
            .and_then(Value::as_bool)
            .ok_or_else(|| Error::Json("missing 'nontrivial'".into()))?,
    })
}

pub fn certificate_to_json(g: &SimplicialGraph, cert: &Certificate) -> Value {
    let witness = match &cert.kind {
        CertificateKind::Edgeless | CertificateKind::Tree | CertificateKind::Clique => Value::Null,
        CertificateKind::NontrivialJoin(w) | CertificateKind::Join(w) => join_to_json(g, w),
        CertificateKind::CharneySultan(cs) => json!({
            "cycle": cycle_to_json(g, &cs.cycle),
            "join_part": set_to_json(g, cs.join_part),
            "join": join_to_json(g, &cs.join),
        }),
        CertificateKind::Split(sw) => json!({
            "lambda1": set_to_json(g, sw.lambda1),
            "lambda2": set_to_json(g, sw.lambda2),
            "lambda": set_to_json(g, sw.lambda),
            "condition": sw.condition.name(),
            "condition_join": match &sw.condition {
                LambdaCondition::InNontrivialJoin(w) => join_to_json(g, w),
                _ => Value::Null,
            },
        }),
        CertificateKind::Refuted(r) => json!({
            "splits_examined": r.splits_examined,
            "subproblems": r.subproblems,
            "exhaustive": r.exhaustive,
        }),
    };
    json!({
        "kind": cert.kind.name(),
        "subject": set_to_json(g, cert.subject),
        "witness": witness,
        "children": cert
            .children
            .iter()
            .map(|c| certificate_to_json(g, c))
            .collect::<Vec<_>>(),
    })
}

pub fn certificate_from_json(g: &SimplicialGraph, v: &Value) -> Result<Certificate> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("expected a certificate object".into()))?;
    let kind_name = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Json("missing certificate 'kind'".into()))?;
    let subject = set_from_json(g, obj.get("subject").unwrap_or(&Value::Null))?;
    let witness = obj.get("witness").unwrap_or(&Value::Null);
    let kind = match kind_name {
        "Edgeless" => CertificateKind::Edgeless,
        "Tree" => CertificateKind::Tree,
        "Clique" => CertificateKind::Clique,
        "NontrivialJoin" => CertificateKind::NontrivialJoin(join_from_json(g, witness)?),
        "Join" => CertificateKind::Join(join_from_json(g, witness)?),
        "CharneySultan" => {
            let w = witness
                .as_object()
                .ok_or_else(|| Error::Json("missing Charney–Sultan witness".into()))?;
            CertificateKind::CharneySultan(CharneySultanWitness {
                cycle: cycle_from_json(g, w.get("cycle").unwrap_or(&Value::Null))?,
                join_part: set_from_json(g, w.get("join_part").unwrap_or(&Value::Null))?,
                join: join_from_json(g, w.get("join").unwrap_or(&Value::Null))?,
            })
        }
        "Split" => {
            let w = witness
                .as_object()
                .ok_or_else(|| Error::Json("missing split witness".into()))?;
            let condition = match w.get("condition").and_then(Value::as_str) {
                Some("empty") => LambdaCondition::Empty,
                Some("clique") => LambdaCondition::Clique,
                Some("in-nontrivial-join") => LambdaCondition::InNontrivialJoin(join_from_json(
                    g,
                    w.get("condition_join").unwrap_or(&Value::Null),
                )?),
                other => {
                    return Err(Error::Json(format!(
                        "unknown split condition {other:?}"
                    )))
                }
            };
            CertificateKind::Split(SplitWitness {
                lambda1: set_from_json(g, w.get("lambda1").unwrap_or(&Value::Null))?,
                lambda2: set_from_json(g, w.get("lambda2").unwrap_or(&Value::Null))?,
                lambda: set_from_json(g, w.get("lambda").unwrap_or(&Value::Null))?,
                condition,
            })
        }
        "Refuted" => {
            let w = witness
                .as_object()
                .ok_or_else(|| Error::Json("missing refutation record".into()))?;
            CertificateKind::Refuted(RefutationRecord {
                splits_examined: w
                    .get("splits_examined")
                    .and_then(Value::as_u64)
                    .unwrap_or(0),
                subproblems: w.get("subproblems").and_then(Value::as_u64).unwrap_or(0),
                exhaustive: w
                    .get("exhaustive")
                    .and_then(Value::as_bool)
                    .unwrap_or(false),
            })
        }
        other => return Err(Error::Json(format!("unknown certificate kind '{other}'"))),
    };
    let mut children = Vec::new();
    if let Some(arr) = obj.get("children").and_then(Value::as_array) {
        for c in arr {
            children.push(certificate_from_json(g, c)?);
        }
    }
    Ok(Certificate {
        subject,
        kind,
        children,
    })
}

pub fn verdict_to_json(g: &SimplicialGraph, v: &BoundaryVerdict) -> Value {
    let witness = match &v.witness {
        Witness::Clique(s) => json!({"type": "clique", "vertices": set_to_json(g, *s)}),
        Witness::Join(w) => json!({"type": "join", "join": join_to_json(g, w)}),
        Witness::TwoNonAdjacentVertices(s) => {
            json!({"type": "two-non-adjacent-vertices", "vertices": set_to_json(g, *s)})
        }
        Witness::Suspension { pair, clique } => json!({
            "type": "suspension-of-clique",
            "pair": set_to_json(g, *pair),
            "clique": set_to_json(g, *clique),
        }),
        Witness::SingleVertex => json!({"type": "single-vertex"}),
        Witness::Membership {
            certificate,
            has_induced_four_cycle,
        } => json!({
            "type": "class-membership",
            "certificate": certificate_to_json(g, certificate),
            "has_induced_four_cycle": has_induced_four_cycle,
        }),
        Witness::Circle(c) => json!({"type": "circle", "cycle": cycle_to_json(g, c)}),
        Witness::None => Value::Null,
    };
    json!({
        "group": v.group.name(),
        "verdict": v.verdict.name(),
        "theorem": v.theorem,
        "witness": witness,
        "reason": match v.reason {
            Some(UnknownReason::LadderExhausted) => Value::String("ladder-exhausted".into()),
            Some(UnknownReason::BudgetExceeded) => Value::String("budget-exceeded".into()),
            None => Value::Null,
        },
    })
}

pub fn four_cycle_graph_to_json(g: &SimplicialGraph, fcg: &FourCycleGraph) -> Value {
    json!({
        "nodes": fcg
            .nodes
            .iter()
            .map(|c| cycle_to_json(g, c))
            .collect::<Vec<_>>(),
        "links": fcg.links.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
        "supports": (0..fcg.nodes.len())
            .map(|i| set_to_json(g, fcg.support_of(i)))
            .collect::<Vec<_>>(),
        "components": fcg.components(),
    })
}

pub fn itinerary_to_json(it: &Itinerary) -> Value {
    let mut path = Vec::new();
    path.push(json!({
        "type": "block",
        "side": it.blocks[0].side.number(),
        "rep": it.blocks[0].rep.render(),
    }));
    for i in 0..it.walls.len() {
        path.push(json!({"type": "wall", "rep": it.walls[i].rep.render()}));
        path.push(json!({
            "type": "block",
            "side": it.blocks[i + 1].side.number(),
            "rep": it.blocks[i + 1].rep.render(),
        }));
    }
    json!({
        "start_block": {"side": 1, "rep": "e"},
        "path": path,
        "tree_distance": it.tree_distance(),
    })
}

pub fn cutset_to_json(report: &CutsetReport) -> Value {
    json!({
        "wall": {"rep": report.wall.rep.render()},
        "wall_members_in_ball": report
            .wall_members_in_ball
            .iter()
            .map(|w| w.render())
            .collect::<Vec<_>>(),
        "separated": report.separated,
        "witness_path": report
            .witness_path
            .as_ref()
            .map(|p| p.iter().map(|w| w.render()).collect::<Vec<_>>()),
        "radius": report.radius,
        "note": report.note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{decide_coxeter_class, replay, ClassVariant};
    use crate::parse::parse_graph;

    #[test]
    fn certificate_round_trip() {
        let g = parse_graph("edges v1 v2, v2 v3, v3 v4, v4 v5, v5 v6, v6 v1, u v1, u v3")
            .unwrap()
            .graph;
        let d = decide_coxeter_class(&g).unwrap();
        let v = certificate_to_json(&g, &d.certificate);
        let back = certificate_from_json(&g, &v).unwrap();
        assert_eq!(back, d.certificate);
        replay(&g, ClassVariant::Coxeter, &back).unwrap();
    }
}
