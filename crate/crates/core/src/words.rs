//! The word problem for right-angled Coxeter groups.
//!
//! Generators are the vertices of the defining graph; each squares to the
//! identity and two commute exactly when they are adjacent. A word is
//! reduced to a geodesic by deletion moves (two equal letters whose
//! in-between letters all commute with them cancel), and the geodesic is
//! then straightened to the unique shortlex normal form by greedily
//! emitting the smallest letter whose earlier letters in the word all
//! commute past it. All geodesic representatives of an element differ
//! only by swaps of adjacent commuting letters, which makes both phases
//! sound; the test suite additionally pins this against a Cayley-ball
//! oracle built on the geometric representation.

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, VertexSet};

/// A word over the generators of the group defined by a fixed graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    pub letters: Vec<String>,
}

impl GroupWord {
    pub fn identity() -> GroupWord {
        GroupWord {
            letters: Vec::new(),
        }
    }

    /// Parse whitespace- or comma-separated generator labels.
    pub fn parse(text: &str) -> GroupWord {
        GroupWord {
            letters: text
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        if self.letters.is_empty() {
            "e".to_string()
        } else {
            self.letters.join(" ")
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn to_ids(&self, g: &SimplicialGraph) -> Result<Vec<usize>> {
        self.letters
            .iter()
            .map(|l| {
                g.index_of(l)
                    .map_err(|_| Error::UnknownGenerator(l.clone()))
            })
            .collect()
    }

    pub(crate) fn from_ids(ids: &[usize], g: &SimplicialGraph) -> GroupWord {
        GroupWord {
            letters: ids.iter().map(|&v| g.label(v).to_string()).collect(),
        }
    }
}

/// Shortlex normal form of `w` in the group defined by `g`.
pub fn normal_form(w: &GroupWord, g: &SimplicialGraph) -> Result<GroupWord> {
    let ids = w.to_ids(g)?;
    Ok(GroupWord::from_ids(&nf_ids(&ids, g), g))
}

/// True when the element of `w` lies in the special subgroup generated by
/// `s`: its geodesic letters all come from `s` (the letter multiset of a
/// geodesic is an invariant of the element).
pub fn subgroup_membership(w: &GroupWord, s: VertexSet, g: &SimplicialGraph) -> Result<bool> {
    if !s.is_subset_of(g.vertex_set()) {
        return Err(Error::NotASubset);
    }
    let ids = w.to_ids(g)?;
    Ok(ids_in_subgroup(&nf_ids(&ids, g), s))
}

pub(crate) fn ids_in_subgroup(nf: &[usize], s: VertexSet) -> bool {
    nf.iter().all(|&v| s.contains(v))
}

fn commute(g: &SimplicialGraph, a: usize, b: usize) -> bool {
    g.adjacent(a, b)
}

/// Delete pairs of equal letters separated only by letters commuting with
/// them, until none remain. The result is a geodesic word for the same
/// element.
fn reduce(word: &mut Vec<usize>, g: &SimplicialGraph) {
    'outer: loop {
        for j in 1..word.len() {
            let mut i = j;
            while i > 0 {
                i -= 1;
                if word[i] == word[j] {
                    word.remove(j);
                    word.remove(i);
                    continue 'outer;
                }
                if !commute(g, word[i], word[j]) {
                    break;
                }
            }
        }
        return;
    }
}

/// Lexicographically least representative of a geodesic word's
/// commutation class: repeatedly emit the smallest letter all of whose
/// predecessors in the word commute with it.
fn lex_least(word: &[usize], g: &SimplicialGraph) -> Vec<usize> {
    let n = word.len();
    let mut used = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<usize> = None;
        for (pos, &letter) in word.iter().enumerate() {
            if used[pos] {
                continue;
            }
            let free = word[..pos]
                .iter()
                .enumerate()
                .all(|(q, &earlier)| used[q] || (earlier != letter && commute(g, earlier, letter)));
            if free {
                match best {
                    Some(b) if word[b] <= letter => {}
                    _ => best = Some(pos),
                }
            }
        }
        let pos = best.expect("some unused letter is always available");
        used[pos] = true;
        out.push(word[pos]);
    }
    out
}

pub(crate) fn nf_ids(word: &[usize], g: &SimplicialGraph) -> Vec<usize> {
    let mut w = word.to_vec();
    reduce(&mut w, g);
    lex_least(&w, g)
}

/// Concatenate and renormalize.
pub(crate) fn mul_ids(a: &[usize], b: &[usize], g: &SimplicialGraph) -> Vec<usize> {
    let mut w = Vec::with_capacity(a.len() + b.len());
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    nf_ids(&w, g)
}

/// Inverse: every generator is an involution, so reverse the word.
pub(crate) fn inv_ids(a: &[usize]) -> Vec<usize> {
    a.iter().rev().copied().collect()
}

/// Greedy parabolic prefix: the longest `u` in the subgroup generated by
/// `sub` such that `x = u * v` with `len(x) = len(u) + len(v)`. Returns
/// `(u, v)` in normal form. Peeling the smallest left descent from `sub`
/// at each step keeps the outcome deterministic.
pub(crate) fn parabolic_prefix(
    x: &[usize],
    sub: VertexSet,
    g: &SimplicialGraph,
) -> (Vec<usize>, Vec<usize>) {
    let mut prefix: Vec<usize> = Vec::new();
    let mut rest = nf_ids(x, g);
    'peel: loop {
        for s in sub.iter() {
            let candidate = mul_ids(&[s], &rest, g);
            if candidate.len() < rest.len() {
                prefix.push(s);
                rest = candidate;
                continue 'peel;
            }
        }
        return (nf_ids(&prefix, g), rest);
    }
}

/// Shortest element of the left coset `x * W_sub` (unique); the canonical
/// representative used when printing cosets.
pub(crate) fn min_coset_rep(x: &[usize], sub: VertexSet, g: &SimplicialGraph) -> Vec<usize> {
    let mut rep = nf_ids(x, g);
    'peel: loop {
        for s in sub.iter() {
            let candidate = mul_ids(&rep, &[s], g);
            if candidate.len() < rep.len() {
                rep = candidate;
                continue 'peel;
            }
        }
        return rep;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_graph;

    fn graph(text: &str) -> SimplicialGraph {
        parse_graph(text).unwrap().graph
    }

    fn e3() -> SimplicialGraph {
        graph("vertices a b c\nedges\n")
    }

    fn c4() -> SimplicialGraph {
        graph("edges v1 v2, v2 v3, v3 v4, v4 v1")
    }

    fn nf(word: &str, g: &SimplicialGraph) -> String {
        normal_form(&GroupWord::parse(word), g).unwrap().render()
    }

    #[test]
    fn involutions_cancel() {
        assert_eq!(nf("a a", &e3()), "e");
        assert_eq!(nf("a b b a", &e3()), "e");
    }

    #[test]
    fn commuting_letters_sort() {
        assert_eq!(nf("v2 v1", &c4()), "v1 v2");
        assert_eq!(nf("v1 v2 v1 v2", &c4()), "e");
    }

    #[test]
    fn free_product_words_stay_put() {
        assert_eq!(nf("a b a", &e3()), "a b a");
    }

    #[test]
    fn hidden_cancellation_through_commutation() {
        // b and the letters between it commute pairwise with b, but the
        // between letters disagree about sorting direction; naive
        // sorted-order swapping misses this cancellation.
        let g = graph("edges a b, b c");
        assert_eq!(nf("b c a b", &g), "c a");
        assert_eq!(nf("v2 v3 v1 v2", &c4()), "v1 v3");
    }

    #[test]
    fn membership_examples() {
        let g = e3();
        let s = g.vertex_set_from_labels(&["a", "b"]).unwrap();
        assert!(subgroup_membership(&GroupWord::parse("a b a"), s, &g).unwrap());
        assert!(!subgroup_membership(&GroupWord::parse("a c"), s, &g).unwrap());
        let g = c4();
        let s = g.vertex_set_from_labels(&["v1"]).unwrap();
        assert!(subgroup_membership(&GroupWord::parse("v1 v2 v1 v2"), s, &g).unwrap());
    }

    #[test]
    fn unknown_generator_is_an_error() {
        assert!(matches!(
            normal_form(&GroupWord::parse("a z"), &e3()),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn parabolic_prefix_examples() {
        let g = e3();
        let sub = g.vertex_set_from_labels(&["a", "b"]).unwrap();
        let (u, v) = parabolic_prefix(&[0, 2, 1], sub, &g); // "a c b"
        assert_eq!(u, vec![0]);
        assert_eq!(v, vec![2, 1]);
        let (u, v) = parabolic_prefix(&[2, 0], sub, &g); // "c a"
        assert!(u.is_empty());
        assert_eq!(v, vec![2, 0]);
    }

    #[test]
    fn min_coset_rep_examples() {
        let g = e3();
        let sub = g.vertex_set_from_labels(&["b"]).unwrap();
        assert_eq!(min_coset_rep(&[0, 1], sub, &g), vec![0]); // a b W_b = a W_b
        assert_eq!(min_coset_rep(&[1], sub, &g), Vec::<usize>::new());
    }
}
