//! Synchronous dynamics of a Boolean network.
//!
//! A state is indexed the same way as a truth table: `x1` is the most
//! significant bit. Rule `j` evaluated at state index `s` is therefore
//! just table bit `s` of rule `j`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{assignment_index, index_assignment};
use crate::graph::BooleanNetwork;

/// Largest network size whose state space is built explicitly.
pub const MAX_STATE_NODES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NetworkState(Vec<bool>);

impl NetworkState {
    pub fn new(bits: Vec<bool>) -> Self {
        NetworkState(bits)
    }

    pub fn from_index(size: usize, index: usize) -> Self {
        NetworkState(index_assignment(size, index))
    }

    /// Parses a bitstring `x1..xn`.
    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                found => Err(Error::BadBitstringChar { found, position: i + 1 }),
            })
            .collect::<Result<Vec<_>>>()
            .map(NetworkState)
    }

    pub fn index(&self) -> usize {
        assignment_index(&self.0)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NetworkState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn successor_index(network: &BooleanNetwork, index: usize) -> usize {
    network
        .rules()
        .iter()
        .fold(0, |acc, rule| (acc << 1) | rule.bit(index) as usize)
}

/// One synchronous update.
pub fn step(network: &BooleanNetwork, state: &NetworkState) -> Result<NetworkState> {
    if state.len() != network.size() {
        return Err(Error::AssignmentLength {
            expected: network.size(),
            found: state.len(),
        });
    }
    Ok(NetworkState::from_index(
        network.size(),
        successor_index(network, state.index()),
    ))
}

fn check_size(network: &BooleanNetwork) -> Result<()> {
    if network.size() > MAX_STATE_NODES {
        return Err(Error::StateSpaceLimit {
            size: network.size(),
            limit: MAX_STATE_NODES,
        });
    }
    Ok(())
}

/// States equal to their own successor, ascending.
pub fn fixed_points(network: &BooleanNetwork) -> Result<Vec<NetworkState>> {
    check_size(network)?;
    let n = network.size();
    Ok((0..1usize << n)
        .filter(|&s| successor_index(network, s) == s)
        .map(|s| NetworkState::from_index(n, s))
        .collect())
}

/// Complete synchronous state-transition structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateTransitionSystem {
    size: usize,
    successors: Vec<usize>,
    attractor_of: Vec<usize>,
    heights: Vec<usize>,
    /// Each cycle starts at its smallest state; sorted by that state.
    attractors: Vec<Vec<usize>>,
}

const UNSEEN: usize = usize::MAX;

pub fn state_graph(network: &BooleanNetwork) -> Result<StateTransitionSystem> {
    check_size(network)?;
    let n = network.size();
    let count = 1usize << n;
    let successors: Vec<usize> = (0..count).map(|s| successor_index(network, s)).collect();

    // Pointer-chase each unvisited state until the walk meets a visited
    // state; if that state lies on the current walk, a new cycle is closed.
    let mut walk_id = vec![UNSEEN; count];
    let mut attractor_of = vec![UNSEEN; count];
    let mut heights = vec![0usize; count];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut path = Vec::new();
    for start in 0..count {
        if walk_id[start] != UNSEEN {
            continue;
        }
        path.clear();
        let mut s = start;
        while walk_id[s] == UNSEEN {
            walk_id[s] = start;
            path.push(s);
            s = successors[s];
        }
        let mut tail_end = path.len();
        if walk_id[s] == start && attractor_of[s] == UNSEEN {
            let entry = path.iter().position(|&p| p == s).expect("cycle entry on path");
            let id = cycles.len();
            let mut cycle = path[entry..].to_vec();
            for &c in &cycle {
                attractor_of[c] = id;
                heights[c] = 0;
            }
            let min_pos = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
            cycle.rotate_left(min_pos);
            cycles.push(cycle);
            tail_end = entry;
        }
        for &p in path[..tail_end].iter().rev() {
            let next = successors[p];
            attractor_of[p] = attractor_of[next];
            heights[p] = heights[next] + 1;
        }
    }

    let mut order: Vec<usize> = (0..cycles.len()).collect();
    order.sort_by_key(|&i| cycles[i][0]);
    let mut relabel = vec![0; cycles.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new;
    }
    for a in &mut attractor_of {
        *a = relabel[*a];
    }
    let attractors = order.into_iter().map(|i| cycles[i].clone()).collect();

    Ok(StateTransitionSystem {
        size: n,
        successors,
        attractor_of,
        heights,
        attractors,
    })
}

impl StateTransitionSystem {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn state_count(&self) -> usize {
        self.successors.len()
    }

    /// Successor of each state index.
    pub fn successors(&self) -> &[usize] {
        &self.successors
    }

    pub fn successor(&self, state: &NetworkState) -> NetworkState {
        NetworkState::from_index(self.size, self.successors[state.index()])
    }

    /// Attractors as state-index cycles.
    pub fn attractor_indices(&self) -> &[Vec<usize>] {
        &self.attractors
    }

    pub fn attractors(&self) -> Vec<Vec<NetworkState>> {
        self.attractors
            .iter()
            .map(|c| c.iter().map(|&s| NetworkState::from_index(self.size, s)).collect())
            .collect()
    }

    /// Length-one attractors.
    pub fn fixed_points(&self) -> Vec<NetworkState> {
        self.attractors
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| NetworkState::from_index(self.size, c[0]))
            .collect()
    }

    /// Attractor id of each state index.
    pub fn attractor_ids(&self) -> &[usize] {
        &self.attractor_of
    }

    /// Steps from each state index to its attractor.
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn max_height(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    pub fn average_height(&self) -> f64 {
        self.heights.iter().sum::<usize>() as f64 / self.heights.len() as f64
    }

    /// Full JSON report: per-state successor, attractor id and height.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct StateRow {
            state: String,
            successor: String,
            attractor: usize,
            height: usize,
        }
        #[derive(Serialize)]
        struct Report {
            n: usize,
            states: Vec<StateRow>,
            attractors: Vec<Vec<String>>,
            fixed_points: Vec<String>,
            max_height: usize,
            average_height: f64,
        }
        let render = |s: usize| NetworkState::from_index(self.size, s).to_string();
        let report = Report {
            n: self.size,
            states: (0..self.state_count())
                .map(|s| StateRow {
                    state: render(s),
                    successor: render(self.successors[s]),
                    attractor: self.attractor_of[s],
                    height: self.heights[s],
                })
                .collect(),
            attractors: self
                .attractors
                .iter()
                .map(|c| c.iter().map(|&s| render(s)).collect())
                .collect(),
            fixed_points: self.fixed_points().iter().map(ToString::to_string).collect(),
            max_height: self.max_height(),
            average_height: self.average_height(),
        };
        serde_json::to_string_pretty(&report).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::BooleanFunction;

    fn network(arity: usize, values: &[u64]) -> BooleanNetwork {
        BooleanNetwork::new(
            values
                .iter()
                .map(|&v| BooleanFunction::from_u64(arity, v).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn state(text: &str) -> NetworkState {
        NetworkState::parse(text).unwrap()
    }

    /// Independent evaluation: read each rule's rendered bitstring directly.
    fn oracle_successor(rules: &[u64], n: usize, s: usize) -> usize {
        rules
            .iter()
            .fold(0, |acc, &r| (acc << 1) | ((r >> s) & 1) as usize)
            & ((1 << n) - 1)
    }

    #[test]
    fn step_examples() {
        let net = network(3, &[168, 128, 17]);
        assert_eq!(step(&net, &state("111")).unwrap(), state("110"));
        let zero = network(3, &[0, 0, 0]);
        assert_eq!(step(&zero, &state("101")).unwrap(), state("000"));
        let id = network(2, &[12, 10]);
        for s in ["00", "01", "10", "11"] {
            assert_eq!(step(&id, &state(s)).unwrap(), state(s));
        }
        assert!(step(&net, &state("11")).is_err());
    }

    #[test]
    fn example_state_graph() {
        let rules = [168, 128, 17];
        let sts = state_graph(&network(3, &rules)).unwrap();
        for s in 0..8 {
            assert_eq!(sts.successors()[s], oracle_successor(&rules, 3, s));
        }
        assert!(sts.fixed_points().is_empty());
        assert_eq!(sts.attractors(), vec![vec![state("000"), state("001")]]);
        assert!(sts.max_height() <= 3);
        assert!(fixed_points(&network(3, &rules)).unwrap().is_empty());
    }

    #[test]
    fn identity_and_and_networks() {
        let id = network(2, &[12, 10]);
        assert_eq!(state_graph(&id).unwrap().fixed_points().len(), 4);
        let id3 = network(3, &[240, 204, 170]);
        assert_eq!(fixed_points(&id3).unwrap().len(), 8);
        let and3 = network(3, &[128, 128, 128]);
        assert_eq!(fixed_points(&and3).unwrap(), vec![state("000"), state("111")]);
    }

    #[test]
    fn acyclic_chain_has_unique_fixed_point() {
        // rule1 = 0, rule2 = x1
        let net = network(2, &[0, 12]);
        assert_eq!(fixed_points(&net).unwrap(), vec![state("00")]);
        let sts = state_graph(&net).unwrap();
        assert_eq!(sts.attractors().len(), 1);
    }

    #[test]
    fn heights_and_attractors_are_consistent() {
        let nets = [
            network(3, &[168, 128, 17]),
            network(3, &[23, 51, 3]),
            network(3, &[1, 8, 47]),
            network(4, &[0x6996, 0x8001, 0xF0F0, 0x1234]),
        ];
        for net in &nets {
            let sts = state_graph(net).unwrap();
            let on_cycle: std::collections::HashSet<usize> =
                sts.attractor_indices().iter().flatten().copied().collect();
            for s in 0..sts.state_count() {
                let next = sts.successors()[s];
                if on_cycle.contains(&s) {
                    assert_eq!(sts.heights()[s], 0);
                } else {
                    assert_eq!(sts.heights()[s], sts.heights()[next] + 1);
                }
                assert_eq!(sts.attractor_ids()[s], sts.attractor_ids()[next]);
            }
            assert_eq!(sts.fixed_points(), fixed_points(net).unwrap());
            for cycle in sts.attractor_indices() {
                for (k, &c) in cycle.iter().enumerate() {
                    assert_eq!(sts.successors()[c], cycle[(k + 1) % cycle.len()]);
                }
                assert_eq!(cycle[0], *cycle.iter().min().unwrap());
            }
        }
    }

    #[test]
    fn json_report_shape() {
        let sts = state_graph(&network(3, &[168, 128, 17])).unwrap();
        let json: serde_json::Value = serde_json::from_str(&sts.to_json()).unwrap();
        assert_eq!(json["n"], 3);
        assert_eq!(json["states"].as_array().unwrap().len(), 8);
        assert_eq!(json["states"][7]["state"], "111");
        assert_eq!(json["states"][7]["successor"], "110");
        assert_eq!(json["attractors"][0][0], "000");
    }
}
