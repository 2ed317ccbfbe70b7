//! Feedback loops and shortest signed paths on a signed digraph.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Sign, SignedDigraph};

/// A walk `v0 -> v1 -> .. -> vk` (k >= 1) with the sign of every arc used.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignedPath {
    pub vertices: Vec<usize>,
    pub signs: Vec<Sign>,
}

impl SignedPath {
    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Product of the arc signs.
    pub fn sign(&self) -> Sign {
        self.signs.iter().fold(Sign::Positive, |acc, &s| acc * s)
    }

    /// Whether every step is an arc of `graph` with the recorded sign.
    pub fn is_walk_in(&self, graph: &SignedDigraph) -> bool {
        self.vertices.len() == self.signs.len() + 1
            && self
                .vertices
                .windows(2)
                .zip(&self.signs)
                .all(|(w, &s)| graph.has_arc(w[0], w[1], s))
    }
}

impl fmt::Display for SignedPath {
    /// `1 -[+]-> 2 -[-]-> 3`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices[0])?;
        for (v, s) in self.vertices[1..].iter().zip(&self.signs) {
            write!(f, " -[{s}]-> {v}")?;
        }
        Ok(())
    }
}

/// A simple cycle stored with its smallest vertex first; the closing
/// vertex is repeated at the end of `path.vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SignedCycle {
    pub path: SignedPath,
}

impl SignedCycle {
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sign(&self) -> Sign {
        self.path.sign()
    }

    /// Distinct vertices in cycle order.
    pub fn vertices(&self) -> &[usize] {
        &self.path.vertices[..self.path.vertices.len() - 1]
    }

    fn sort_key(&self) -> (usize, &[usize], &[Sign]) {
        (self.len(), self.vertices(), &self.path.signs)
    }
}

impl PartialOrd for SignedCycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedCycle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for SignedCycle {
    /// `(+) 1 -[+]-> 2 -[+]-> 1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.sign(), self.path)
    }
}

/// Signs available on the arc `from -> to`.
fn arc_signs(graph: &SignedDigraph, from: usize, to: usize) -> Vec<Sign> {
    [Sign::Positive, Sign::Negative]
        .into_iter()
        .filter(|&s| graph.has_arc(from, to, s))
        .collect()
}

/// Every simple signed cycle with at most `max_len` arcs.
///
/// Each vertex cycle is rooted at its smallest vertex and explored only
/// through larger vertices, so it is produced once; parallel arcs of
/// different signs then expand into one cycle per sign assignment.
/// Sorted by length, vertex sequence, then sign pattern.
pub fn enumerate_cycles(graph: &SignedDigraph, max_len: usize) -> Vec<SignedCycle> {
    let n = graph.size();
    let successors: Vec<Vec<usize>> = (0..=n)
        .map(|v| {
            if v == 0 {
                return Vec::new();
            }
            let mut targets: Vec<usize> = graph.out_arcs(v).map(|a| a.to).collect();
            targets.dedup();
            targets
        })
        .collect();

    let mut cycles = Vec::new();
    let mut on_path = vec![false; n + 1];
    for root in 1..=n {
        let mut path = vec![root];
        on_path[root] = true;
        extend(graph, &successors, root, max_len, &mut path, &mut on_path, &mut cycles);
        on_path[root] = false;
    }
    cycles.sort();
    cycles
}

fn extend(
    graph: &SignedDigraph,
    successors: &[Vec<usize>],
    root: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<SignedCycle>,
) {
    let last = *path.last().unwrap();
    for &next in &successors[last] {
        if next == root {
            let mut vertices = path.clone();
            vertices.push(root);
            expand_signs(graph, &vertices, out);
        } else if next > root && !on_path[next] && path.len() < max_len {
            on_path[next] = true;
            path.push(next);
            extend(graph, successors, root, max_len, path, on_path, out);
            path.pop();
            on_path[next] = false;
        }
    }
}

fn expand_signs(graph: &SignedDigraph, vertices: &[usize], out: &mut Vec<SignedCycle>) {
    let choices: Vec<Vec<Sign>> = vertices
        .windows(2)
        .map(|w| arc_signs(graph, w[0], w[1]))
        .collect();
    let mut patterns: Vec<Vec<Sign>> = vec![Vec::new()];
    for options in &choices {
        patterns = patterns
            .into_iter()
            .flat_map(|p| {
                options.iter().map(move |&s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .collect();
    }
    out.extend(patterns.into_iter().map(|signs| SignedCycle {
        path: SignedPath {
            vertices: vertices.to_vec(),
            signs,
        },
    }));
}

/// Shortest walk (at least one arc) from `from` to `to` whose sign product
/// is `sign`, or `None` if no such walk exists.
///
/// Breadth-first search over (vertex, parity of negative arcs so far).
pub fn shortest_signed_path(
    graph: &SignedDigraph,
    from: usize,
    to: usize,
    sign: Sign,
) -> Result<Option<SignedPath>> {
    graph.check_vertex(from)?;
    graph.check_vertex(to)?;
    let n = graph.size();
    let layer = |s: Sign| (s == Sign::Negative) as usize;
    let slot = |v: usize, parity: usize| v * 2 + parity;

    // parent[slot] = (previous slot, sign of the arc taken); walks start at
    // a virtual root because (from, even) may itself be revisited.
    const ROOT: usize = usize::MAX;
    let mut parent: Vec<Option<(usize, Sign)>> = vec![None; (n + 1) * 2];
    let mut queue = VecDeque::new();
    let goal = slot(to, layer(sign));
    for arc in graph.out_arcs(from) {
        let s = slot(arc.to, layer(arc.sign));
        if parent[s].is_none() {
            parent[s] = Some((ROOT, arc.sign));
            queue.push_back(s);
        }
    }
    while let Some(current) = queue.pop_front() {
        if current == goal {
            break;
        }
        let (v, parity) = (current / 2, current % 2);
        for arc in graph.out_arcs(v) {
            let s = slot(arc.to, parity ^ layer(arc.sign));
            if parent[s].is_none() {
                parent[s] = Some((current, arc.sign));
                queue.push_back(s);
            }
        }
    }
    if parent[goal].is_none() {
        return Ok(None);
    }

    let mut vertices = vec![to];
    let mut signs = Vec::new();
    let mut current = goal;
    while current != ROOT {
        let (prev, s) = parent[current].expect("reachable slot has a parent");
        signs.push(s);
        vertices.push(if prev == ROOT { from } else { prev / 2 });
        current = prev;
    }
    vertices.reverse();
    signs.reverse();
    Ok(Some(SignedPath { vertices, signs }))
}

/// Whether any signed walk of exactly `len` arcs joins `from` to `to` with
/// sign `sign`. Exponential; meant for cross-checking on small graphs.
pub fn walk_exists(graph: &SignedDigraph, from: usize, to: usize, sign: Sign, len: usize) -> Result<bool> {
    graph.check_vertex(from)?;
    graph.check_vertex(to)?;
    fn go(g: &SignedDigraph, v: usize, to: usize, acc: Sign, want: Sign, left: usize) -> bool {
        if left == 0 {
            return v == to && acc == want;
        }
        g.out_arcs(v)
            .any(|a| go(g, a.to, to, acc * a.sign, want, left - 1))
    }
    Ok(len > 0 && go(graph, from, to, Sign::Positive, sign, len))
}

/// Count of simple cycles by length, index 0 unused.
pub fn cycle_length_histogram(cycles: &[SignedCycle], max_len: usize) -> Vec<usize> {
    let mut counts = vec![0; max_len + 1];
    for c in cycles {
        if c.len() <= max_len {
            counts[c.len()] += 1;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::BooleanFunction;
    use crate::graph::{build_graph, BooleanNetwork};
    use Sign::{Negative, Positive};

    fn example_graph() -> SignedDigraph {
        let rules = [168, 128, 17]
            .iter()
            .map(|&v| BooleanFunction::from_u64(3, v).unwrap())
            .collect();
        build_graph(&BooleanNetwork::new(rules).unwrap())
    }

    fn complete_positive(n: usize) -> SignedDigraph {
        let mut g = SignedDigraph::new(n);
        for i in 1..=n {
            for j in 1..=n {
                g.add_arc(i, j, Positive).unwrap();
            }
        }
        g
    }

    fn shortest_len(g: &SignedDigraph, from: usize, to: usize, sign: Sign) -> Option<usize> {
        shortest_signed_path(g, from, to, sign).unwrap().map(|p| p.len())
    }

    #[test]
    fn example_cycles() {
        let rendered: Vec<String> = enumerate_cycles(&example_graph(), 3)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            rendered,
            [
                "(+) 1 -[+]-> 1",
                "(+) 2 -[+]-> 2",
                "(-) 3 -[-]-> 3",
                "(+) 1 -[+]-> 2 -[+]-> 1",
                "(-) 2 -[-]-> 3 -[+]-> 2",
                "(-) 1 -[+]-> 2 -[-]-> 3 -[+]-> 1",
            ]
        );
    }

    #[test]
    fn trivial_cycle_cases() {
        assert!(enumerate_cycles(&SignedDigraph::new(3), 3).is_empty());
        let mut g = SignedDigraph::new(1);
        g.add_arc(1, 1, Positive).unwrap();
        let cycles = enumerate_cycles(&g, 1);
        assert_eq!(cycles.len(), 1);
        assert_eq!((cycles[0].len(), cycles[0].sign()), (1, Positive));
    }

    #[test]
    fn max_len_bounds_cycles() {
        let g = example_graph();
        assert_eq!(enumerate_cycles(&g, 1).len(), 3);
        assert_eq!(enumerate_cycles(&g, 2).len(), 5);
    }

    #[test]
    fn parallel_arcs_split_cycles() {
        let mut g = SignedDigraph::new(2);
        g.add_arc(1, 2, Positive).unwrap();
        g.add_arc(1, 2, Negative).unwrap();
        g.add_arc(2, 1, Negative).unwrap();
        let cycles = enumerate_cycles(&g, 2);
        let signs: Vec<Sign> = cycles.iter().map(SignedCycle::sign).collect();
        assert_eq!(signs, [Negative, Positive]);
    }

    #[test]
    fn complete_graph_cycle_counts() {
        // C(n,k)(k-1)! simple cycles of length k >= 2, plus n self-loops.
        for n in 1..=5usize {
            let cycles = enumerate_cycles(&complete_positive(n), n);
            let hist = cycle_length_histogram(&cycles, n);
            assert_eq!(hist[1], n);
            for (k, &count) in hist.iter().enumerate().skip(2) {
                let choose = (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
                let arrangements: usize = (1..k).product();
                assert_eq!(count, choose * arrangements, "n={n} k={k}");
            }
        }
        assert_eq!(enumerate_cycles(&complete_positive(3), 3).len(), 8);
    }

    #[test]
    fn example_shortest_paths() {
        let g = example_graph();
        assert_eq!(shortest_len(&g, 2, 3, Negative), Some(1));
        assert_eq!(shortest_len(&g, 1, 1, Positive), Some(1));
        assert_eq!(shortest_len(&g, 1, 3, Negative), Some(2));
        // 1 -> 2 -> 3 picks up one negative arc; the negative self-loop at 3
        // supplies the second.
        let p = shortest_signed_path(&g, 1, 3, Positive).unwrap().unwrap();
        assert_eq!(p.to_string(), "1 -[+]-> 2 -[-]-> 3 -[-]-> 3");
        assert_eq!(shortest_len(&g, 3, 1, Negative), Some(2));
        assert!(shortest_signed_path(&g, 0, 1, Positive).is_err());
        assert!(shortest_signed_path(&g, 1, 4, Positive).is_err());
    }

    #[test]
    fn positive_only_graph_has_no_negative_paths() {
        let g = example_graph().filter_sign(Positive);
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(shortest_len(&g, i, j, Negative), None);
            }
        }
        assert_eq!(shortest_len(&g, 3, 3, Positive), None);
    }

    #[test]
    fn paths_are_sound_and_minimal_on_small_graphs() {
        // Every signed digraph on 2 vertices plus a sample on 3.
        let arcs2: Vec<(usize, usize, Sign)> = (1..=2)
            .flat_map(|i| (1..=2).flat_map(move |j| [(i, j, Positive), (i, j, Negative)]))
            .collect();
        let mut graphs = Vec::new();
        for mask in 0u32..1 << arcs2.len() {
            let mut g = SignedDigraph::new(2);
            for (k, &(i, j, s)) in arcs2.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_arc(i, j, s).unwrap();
                }
            }
            graphs.push(g);
        }
        let mut seed = 0x9E37_79B9_7F4A_7C15u64;
        for _ in 0..200 {
            let mut g = SignedDigraph::new(4);
            for i in 1..=4 {
                for j in 1..=4 {
                    for s in [Positive, Negative] {
                        seed ^= seed << 13;
                        seed ^= seed >> 7;
                        seed ^= seed << 17;
                        if seed.is_multiple_of(5) {
                            g.add_arc(i, j, s).unwrap();
                        }
                    }
                }
            }
            graphs.push(g);
        }
        for g in &graphs {
            let n = g.size();
            for i in 1..=n {
                for j in 1..=n {
                    for s in [Positive, Negative] {
                        let found = shortest_signed_path(g, i, j, s).unwrap();
                        let limit = 2 * n;
                        let brute = (1..=limit).find(|&l| walk_exists(g, i, j, s, l).unwrap());
                        match found {
                            Some(p) => {
                                assert!(p.is_walk_in(g));
                                assert_eq!(p.sign(), s);
                                assert_eq!((p.vertices[0], *p.vertices.last().unwrap()), (i, j));
                                assert_eq!(Some(p.len()), brute);
                            }
                            None => assert_eq!(brute, None),
                        }
                    }
                }
            }
        }
    }
}
