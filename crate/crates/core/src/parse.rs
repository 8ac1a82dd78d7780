//! The two input formats for graphs.
//!
//! Edge-list text:
//!
//! ```text
//! # comment
//! vertices a b c d
//! edges a b, b c
//! edges c d
//! ```
//!
//! The `vertices` line is optional; without it the vertex set is inferred
//! from the edges. With it, every edge endpoint must be declared.
//!
//! JSON: `{"vertices": ["a", "b"], "edges": [["a", "b"]]}`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, MAX_VERTICES};

/// A parsed graph together with non-fatal diagnostics (currently only
/// duplicate-edge warnings).
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: SimplicialGraph,
    pub warnings: Vec<String>,
}

/// Parse either format; a document whose first non-space byte is `{` is
/// treated as JSON.
pub fn parse_graph(text: &str) -> Result<Parsed> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

fn build(
    declared: Option<Vec<String>>,
    edges: Vec<(String, String, usize)>,
) -> Result<Parsed> {
    let mut warnings = Vec::new();
    let mut labels: BTreeSet<String> = BTreeSet::new();
    if let Some(decl) = &declared {
        labels.extend(decl.iter().cloned());
    }
    for (u, v, line) in &edges {
        if u == v {
            return Err(Error::SelfLoop(u.clone()));
        }
        if let Some(_decl) = &declared {
            for w in [u, v] {
                if !labels.contains(w) {
                    let _ = line;
                    return Err(Error::UndeclaredVertex(w.clone()));
                }
            }
        } else {
            labels.insert(u.clone());
            labels.insert(v.clone());
        }
    }
    if labels.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(labels.len()));
    }
    let mut seen: BTreeSet<(String, String)> = BTreeSet::new();
    let mut dedup: Vec<(String, String)> = Vec::new();
    for (u, v, line) in edges {
        let key = if u <= v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
        if !seen.insert(key) {
            warnings.push(format!("line {line}: duplicate edge {u} {v} ignored"));
        } else {
            dedup.push((u, v));
        }
    }
    let labels: Vec<String> = labels.into_iter().collect();
    let graph = SimplicialGraph::new(&labels, &dedup)?;
    Ok(Parsed { graph, warnings })
}

fn parse_edge_list(text: &str) -> Result<Parsed> {
    let mut declared: Option<Vec<String>> = None;
    let mut edges: Vec<(String, String, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match keyword {
            "vertices" => {
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                declared.get_or_insert_with(Vec::new).extend(names);
            }
            "edges" => {
                if rest.is_empty() {
                    continue;
                }
                for pair in rest.split(',') {
                    let parts: Vec<&str> = pair.split_whitespace().collect();
                    if parts.len() != 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("expected 'u v', got '{}'", pair.trim()),
                        });
                    }
                    edges.push((parts[0].to_string(), parts[1].to_string(), line_no));
                }
            }
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unknown directive '{other}'"),
                })
            }
        }
    }
    build(declared, edges)
}

fn parse_json(text: &str) -> Result<Parsed> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Json("top-level value must be an object".into()))?;
    let verts = obj
        .get("vertices")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Json("missing 'vertices' array".into()))?;
    let declared: Vec<String> = verts
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Json("vertex labels must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let mut edges = Vec::new();
    if let Some(arr) = obj.get("edges") {
        let arr = arr
            .as_array()
            .ok_or_else(|| Error::Json("'edges' must be an array".into()))?;
        for e in arr {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Json("each edge must be a two-element array".into()))?;
            let u = pair[0]
                .as_str()
                .ok_or_else(|| Error::Json("edge endpoints must be strings".into()))?;
            let v = pair[1]
                .as_str()
                .ok_or_else(|| Error::Json("edge endpoints must be strings".into()))?;
            edges.push((u.to_string(), v.to_string(), 0));
        }
    }
    build(Some(declared), edges)
}

/// Canonical edge-list rendering of a graph; parsing it back yields an
/// identical graph.
pub fn to_edge_list(g: &SimplicialGraph) -> String {
    let mut out = String::from("vertices");
    for l in g.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    let edges = g.edges();
    if !edges.is_empty() {
        out.push_str("edges ");
        let rendered: Vec<String> = edges
            .iter()
            .map(|&(u, v)| format!("{} {}", g.label(u), g.label(v)))
            .collect();
        out.push_str(&rendered.join(", "));
        out.push('\n');
    }
    out
}

/// Canonical JSON rendering (`vertices` sorted, edges in canonical order).
pub fn to_json(g: &SimplicialGraph) -> serde_json::Value {
    serde_json::json!({
        "vertices": g.labels(),
        "edges": g
            .edges()
            .iter()
            .map(|&(u, v)| vec![g.label(u).to_string(), g.label(v).to_string()])
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_edge_set() {
        let p = parse_graph("vertices a b\nedges\n").unwrap();
        assert_eq!(p.graph.vertex_count(), 2);
        assert_eq!(p.graph.edge_count(), 0);
    }

    #[test]
    fn four_cycle() {
        let p = parse_graph("vertices v1 v2 v3 v4\nedges v1 v2, v2 v3, v3 v4, v4 v1").unwrap();
        assert_eq!(p.graph.vertex_count(), 4);
        assert_eq!(p.graph.edge_count(), 4);
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(parse_graph("edges a a"), Err(Error::SelfLoop(_))));
    }

    #[test]
    fn duplicate_edge_warns() {
        let p = parse_graph("edges a b, b a").unwrap();
        assert_eq!(p.graph.edge_count(), 1);
        assert_eq!(p.warnings.len(), 1);
    }

    #[test]
    fn undeclared_vertex_rejected() {
        let r = parse_graph("vertices a b\nedges a c");
        assert!(matches!(r, Err(Error::UndeclaredVertex(_))));
    }

    #[test]
    fn syntax_error_carries_line() {
        match parse_graph("vertices a b\nedges a") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let p = parse_graph(r#"{"vertices":["b","a"],"edges":[["a","b"]]}"#).unwrap();
        assert_eq!(p.graph.labels(), &["a", "b"]);
        let back = parse_graph(&to_json(&p.graph).to_string()).unwrap();
        assert_eq!(back.graph, p.graph);
        let back = parse_graph(&to_edge_list(&p.graph)).unwrap();
        assert_eq!(back.graph, p.graph);
    }

    #[test]
    fn deterministic_canonical_form() {
        let a = parse_graph("edges b a, c b").unwrap().graph;
        let b = parse_graph("edges c b, a b").unwrap().graph;
        assert_eq!(a, b);
        assert_eq!(to_edge_list(&a), to_edge_list(&b));
    }
}
