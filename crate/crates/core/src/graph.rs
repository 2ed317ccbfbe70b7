//! Boolean networks and their signed interaction graphs.
//!
//! Vertex `i` stands for variable `x_i` and for node `i`, whose rule is the
//! `i`-th function of the network. An arc `i -> j` carries sign `+` when some
//! 2-bit fragment of rule `j` in `x_i` is `01`, and sign `-` when one is `10`.
//! A variable with both witnesses contributes both arcs.

use std::collections::BTreeSet;
use std::fmt::{self, Write};

use serde::Serialize;

use crate::decompose::influence;
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// Ordered list of rules, one per node, each over all node variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanNetwork {
    rules: Vec<BooleanFunction>,
}

impl BooleanNetwork {
    pub fn new(rules: Vec<BooleanFunction>) -> Result<Self> {
        if rules.is_empty() {
            return Err(Error::EmptyNetwork);
        }
        let expected = rules.len();
        for (i, rule) in rules.iter().enumerate() {
            if rule.arity() != expected {
                return Err(Error::RuleArity {
                    node: i + 1,
                    expected,
                    found: rule.arity(),
                });
            }
        }
        Ok(BooleanNetwork { rules })
    }

    pub fn size(&self) -> usize {
        self.rules.len()
    }

    pub fn rules(&self) -> &[BooleanFunction] {
        &self.rules
    }

    /// Rule of node `node` (1-based).
    pub fn rule(&self, node: usize) -> &BooleanFunction {
        &self.rules[node - 1]
    }

    /// Network with every rule complemented.
    pub fn complement(&self) -> Self {
        BooleanNetwork {
            rules: self.rules.iter().map(BooleanFunction::complement).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" | "pos" | "positive" => Ok(Sign::Positive),
            "-" | "neg" | "negative" => Ok(Sign::Negative),
            _ => Err(Error::Literal(s.to_string())),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// A signed arc `from -> to`; vertices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignedArc {
    pub from: usize,
    pub to: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedDigraph {
    size: usize,
    arcs: BTreeSet<SignedArc>,
}

impl SignedDigraph {
    pub fn new(size: usize) -> Self {
        SignedDigraph {
            size,
            arcs: BTreeSet::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex == 0 || vertex > self.size {
            Err(Error::VertexOutOfRange {
                vertex,
                size: self.size,
            })
        } else {
            Ok(())
        }
    }

    /// Inserts an arc; returns false if it was already present.
    pub fn add_arc(&mut self, from: usize, to: usize, sign: Sign) -> Result<bool> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        Ok(self.arcs.insert(SignedArc { from, to, sign }))
    }

    pub fn has_arc(&self, from: usize, to: usize, sign: Sign) -> bool {
        self.arcs.contains(&SignedArc { from, to, sign })
    }

    /// Arcs sorted by `(from, to, sign)`.
    pub fn arcs(&self) -> impl Iterator<Item = &SignedArc> {
        self.arcs.iter()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn count_sign(&self, sign: Sign) -> usize {
        self.arcs.iter().filter(|a| a.sign == sign).count()
    }

    /// Outgoing arcs of `vertex`, sorted by target then sign.
    pub fn out_arcs(&self, vertex: usize) -> impl Iterator<Item = &SignedArc> {
        let lo = SignedArc { from: vertex, to: 0, sign: Sign::Positive };
        let hi = SignedArc { from: vertex, to: usize::MAX, sign: Sign::Negative };
        self.arcs.range(lo..=hi)
    }

    /// Graph with only the arcs of `sign` kept.
    pub fn filter_sign(&self, sign: Sign) -> Self {
        SignedDigraph {
            size: self.size,
            arcs: self.arcs.iter().filter(|a| a.sign == sign).copied().collect(),
        }
    }

    /// Whether the graph has no directed cycle, self-loops included, arcs of
    /// either sign counted.
    pub fn is_acyclic(&self) -> bool {
        let mut indegree = vec![0usize; self.size + 1];
        let mut successors = vec![BTreeSet::new(); self.size + 1];
        for arc in &self.arcs {
            if successors[arc.from].insert(arc.to) {
                indegree[arc.to] += 1;
            }
        }
        let mut ready: Vec<usize> = (1..=self.size).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = ready.pop() {
            removed += 1;
            for &w in &successors[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        removed == self.size
    }

    pub fn matrices(&self) -> SignedAdjacencyMatrices {
        let mut positive = vec![vec![0i8; self.size]; self.size];
        let mut negative = vec![vec![0i8; self.size]; self.size];
        for arc in &self.arcs {
            match arc.sign {
                Sign::Positive => positive[arc.from - 1][arc.to - 1] = 1,
                Sign::Negative => negative[arc.from - 1][arc.to - 1] = -1,
            }
        }
        SignedAdjacencyMatrices { positive, negative }
    }

    /// Rebuilds the arc set from a pair of matrices.
    pub fn from_matrices(matrices: &SignedAdjacencyMatrices) -> Self {
        let size = matrices.positive.len();
        let mut graph = SignedDigraph::new(size);
        for i in 0..size {
            for j in 0..size {
                if matrices.positive[i][j] == 1 {
                    graph.arcs.insert(SignedArc { from: i + 1, to: j + 1, sign: Sign::Positive });
                }
                if matrices.negative[i][j] == -1 {
                    graph.arcs.insert(SignedArc { from: i + 1, to: j + 1, sign: Sign::Negative });
                }
            }
        }
        graph
    }

    /// Graphviz rendering. Positive arcs are solid, negative arcs dashed;
    /// statements are emitted in sorted order so output is byte-stable.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph interaction {\n");
        for v in 1..=self.size {
            writeln!(out, "    {v} [label=\"x{v}\"];").unwrap();
        }
        for arc in &self.arcs {
            let style = match arc.sign {
                Sign::Positive => "solid",
                Sign::Negative => "dashed",
            };
            writeln!(
                out,
                "    {} -> {} [label=\"{}\", style={style}];",
                arc.from, arc.to, arc.sign
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `{"n": .., "arcs": [{"from": i, "to": j, "sign": "+"|"-"}, ..]}`, arcs sorted.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct View<'a> {
            n: usize,
            arcs: Vec<&'a SignedArc>,
        }
        serde_json::to_string(&View {
            n: self.size,
            arcs: self.arcs.iter().collect(),
        })
        .expect("plain data serializes")
    }
}

/// Separate positive and negative adjacency matrices; row = source, column = target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedAdjacencyMatrices {
    /// Entries in `{0, 1}`.
    pub positive: Vec<Vec<i8>>,
    /// Entries in `{0, -1}`.
    pub negative: Vec<Vec<i8>>,
}

impl SignedAdjacencyMatrices {
    /// Combined ternary view; `None` where both signs are present.
    pub fn combined(&self) -> Vec<Vec<Option<i8>>> {
        self.positive
            .iter()
            .zip(&self.negative)
            .map(|(p, n)| {
                p.iter()
                    .zip(n)
                    .map(|(&a, &b)| if a != 0 && b != 0 { None } else { Some(a + b) })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for SignedAdjacencyMatrices {
    /// `M+` rows, a blank line, then `M-` rows; entries separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &Vec<i8>| r.iter().map(i8::to_string).collect::<Vec<_>>().join(" ");
        for r in &self.positive {
            writeln!(f, "{}", row(r))?;
        }
        writeln!(f)?;
        for r in &self.negative {
            writeln!(f, "{}", row(r))?;
        }
        Ok(())
    }
}

/// Interaction graph of a network.
pub fn build_graph(network: &BooleanNetwork) -> SignedDigraph {
    let n = network.size();
    let mut graph = SignedDigraph::new(n);
    for (j, rule) in network.rules().iter().enumerate() {
        for i in 1..=n {
            let sign = influence(rule, i).expect("rule arity equals network size");
            if sign.has_positive() {
                graph.arcs.insert(SignedArc { from: i, to: j + 1, sign: Sign::Positive });
            }
            if sign.has_negative() {
                graph.arcs.insert(SignedArc { from: i, to: j + 1, sign: Sign::Negative });
            }
        }
    }
    graph
}
