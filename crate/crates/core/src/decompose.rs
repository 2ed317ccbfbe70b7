//! Decomposition of a truth table by fixing a subset of variables.
//!
//! Fixing every variable except `x_i` leaves 2-bit fragments. A fragment
//! `01` (output rises with `x_i`) witnesses a positive influence of `x_i`,
//! `10` a negative one.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{index_shift, BooleanFunction};

/// The restriction of a function to one assignment of the fixed variables.
///
/// Renders in ascending assignment order of the free variables, so a 2-bit
/// fragment reads `f(free = 0)` then `f(free = 1)`. Use [`Fragment::function`]
/// for the ordinary MSB-first function rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment(BooleanFunction);

impl Fragment {
    pub fn function(&self) -> &BooleanFunction {
        &self.0
    }

    /// Fragment bits, lowest assignment first.
    pub fn bits(&self) -> Vec<bool> {
        (0..self.0.table_len()).map(|k| self.0.bit(k)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.table_len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self
            .bits()
            .into_iter()
            .map(|b| if b { '1' } else { '0' })
            .collect();
        f.write_str(&text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTable {
    arity: usize,
    fixed: Vec<usize>,
    free: Vec<usize>,
    fragments: Vec<Fragment>,
}

impl DecompositionTable {
    /// Fixed variables, ascending.
    pub fn fixed_set(&self) -> &[usize] {
        &self.fixed
    }

    /// Free variables, ascending; these index each fragment.
    pub fn free_set(&self) -> &[usize] {
        &self.free
    }

    /// Fragment for the fixed-set assignment with key `key`, where the lowest
    /// numbered fixed variable is the most significant key bit.
    pub fn fragment(&self, key: usize) -> &Fragment {
        &self.fragments[key]
    }

    /// `(assignment, fragment)` pairs in ascending lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<bool>, &Fragment)> {
        let width = self.fixed.len();
        self.fragments.iter().enumerate().map(move |(key, frag)| {
            let assignment = (0..width).map(|t| key >> (width - 1 - t) & 1 == 1).collect();
            (assignment, frag)
        })
    }

    /// `"<assignment> <fragment>"` lines.
    pub fn lines(&self) -> Vec<String> {
        self.entries()
            .map(|(assignment, frag)| {
                let a: String = assignment.iter().map(|&b| if b { '1' } else { '0' }).collect();
                format!("{a} {frag}")
            })
            .collect()
    }

    /// Reassembles the original function from its fragments.
    pub fn reassemble(&self) -> BooleanFunction {
        let n = self.arity;
        BooleanFunction::from_fn(n, |index| {
            let key = gather(index, n, &self.fixed);
            let inner = gather(index, n, &self.free);
            self.fragments[key].0.bit(inner)
        })
        .expect("arity already validated")
    }
}

/// Packs the bits of `index` belonging to `vars` (ascending) into a smaller
/// index, first variable most significant.
fn gather(index: usize, arity: usize, vars: &[usize]) -> usize {
    vars.iter()
        .fold(0, |acc, &v| (acc << 1) | (index >> (arity - v) & 1))
}

/// Inverse of [`gather`] for two complementary variable sets.
fn scatter(arity: usize, fixed: &[usize], key: usize, free: &[usize], inner: usize) -> usize {
    let mut index = 0;
    for (t, &v) in fixed.iter().enumerate() {
        index |= (key >> (fixed.len() - 1 - t) & 1) << (arity - v);
    }
    for (t, &v) in free.iter().enumerate() {
        index |= (inner >> (free.len() - 1 - t) & 1) << (arity - v);
    }
    index
}

/// Decomposes `f` by fixing the variables in `fixed` (any order, duplicates ignored).
pub fn decompose(f: &BooleanFunction, fixed: &[usize]) -> Result<DecompositionTable> {
    let n = f.arity();
    if fixed.is_empty() {
        return Err(Error::EmptyFixedSet);
    }
    for &v in fixed {
        index_shift(n, v)?;
    }
    let mut fixed = fixed.to_vec();
    fixed.sort_unstable();
    fixed.dedup();
    let free: Vec<usize> = (1..=n).filter(|v| !fixed.contains(v)).collect();

    let fragments = (0..1usize << fixed.len())
        .map(|key| {
            BooleanFunction::from_fn(free.len(), |inner| {
                f.bit(scatter(n, &fixed, key, &free, inner))
            })
            .map(Fragment)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(DecompositionTable {
        arity: n,
        fixed,
        free,
        fragments,
    })
}

/// Direction in which a variable moves a function's output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InfluenceSign {
    /// Neither `01` nor `10` occurs: the variable is inessential.
    #[serde(rename = "none")]
    Inessential,
    Positive,
    Negative,
    /// Both `01` and `10` occur.
    Dual,
}

impl InfluenceSign {
    pub fn from_witnesses(rises: bool, falls: bool) -> Self {
        match (rises, falls) {
            (false, false) => InfluenceSign::Inessential,
            (true, false) => InfluenceSign::Positive,
            (false, true) => InfluenceSign::Negative,
            (true, true) => InfluenceSign::Dual,
        }
    }

    pub fn has_positive(self) -> bool {
        matches!(self, InfluenceSign::Positive | InfluenceSign::Dual)
    }

    pub fn has_negative(self) -> bool {
        matches!(self, InfluenceSign::Negative | InfluenceSign::Dual)
    }

    /// The sign seen by the complemented function.
    pub fn flipped(self) -> Self {
        Self::from_witnesses(self.has_negative(), self.has_positive())
    }
}

impl fmt::Display for InfluenceSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InfluenceSign::Inessential => "none",
            InfluenceSign::Positive => "positive",
            InfluenceSign::Negative => "negative",
            InfluenceSign::Dual => "dual",
        })
    }
}

/// Sign of the influence of `x_var` on `f`, read off the 2-bit fragments.
pub fn influence(f: &BooleanFunction, var: usize) -> Result<InfluenceSign> {
    let shift = index_shift(f.arity(), var)?;
    let (mut rises, mut falls) = (false, false);
    for index in (0..f.table_len()).filter(|k| k >> shift & 1 == 0) {
        match (f.bit(index), f.bit(index | 1 << shift)) {
            (false, true) => rises = true,
            (true, false) => falls = true,
            _ => {}
        }
        if rises && falls {
            break;
        }
    }
    Ok(InfluenceSign::from_witnesses(rises, falls))
}

/// Influence of every variable, `x1` first.
pub fn influences(f: &BooleanFunction) -> Vec<InfluenceSign> {
    (1..=f.arity())
        .map(|var| influence(f, var).expect("variable in range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(arity: usize, value: u64) -> BooleanFunction {
        BooleanFunction::from_u64(arity, value).unwrap()
    }

    fn rendered(table: &DecompositionTable) -> Vec<String> {
        table.lines()
    }

    #[test]
    fn example_tables_for_21() {
        let g = f(3, 21);
        assert_eq!(
            rendered(&decompose(&g, &[2, 3]).unwrap()),
            ["00 11", "01 00", "10 10", "11 00"]
        );
        assert_eq!(
            rendered(&decompose(&g, &[1, 3]).unwrap()),
            ["00 11", "01 00", "10 10", "11 00"]
        );
        assert_eq!(
            rendered(&decompose(&g, &[1, 2]).unwrap()),
            ["00 10", "01 10", "10 10", "11 00"]
        );
        assert_eq!(
            rendered(&decompose(&g, &[3, 2, 3]).unwrap()),
            rendered(&decompose(&g, &[2, 3]).unwrap())
        );
    }

    #[test]
    fn constant_zero_fragments() {
        let table = decompose(&f(3, 0), &[2, 3]).unwrap();
        assert!(table.entries().all(|(_, frag)| frag.to_string() == "00"));
    }

    #[test]
    fn single_variable_cofactors() {
        // Index-split oracle: table indices 0..4 and 4..8 of decimal 21.
        let lo = BooleanFunction::from_fn(2, |k| 21u64 >> k & 1 == 1).unwrap();
        let hi = BooleanFunction::from_fn(2, |k| 21u64 >> (k + 4) & 1 == 1).unwrap();
        let table = decompose(&f(3, 21), &[1]).unwrap();
        assert_eq!(table.fragment(0).function(), &lo);
        assert_eq!(table.fragment(1).function(), &hi);
        assert_eq!(table.fragment(0).function().to_string(), "0101");
        assert_eq!(table.fragment(1).function().to_string(), "0001");
        // Fragment text lists outputs in ascending assignment order.
        assert_eq!(table.fragment(0).to_string(), "1010");
        assert_eq!(table.fragment(1).to_string(), "1000");
    }

    #[test]
    fn full_fixed_set_gives_single_bits() {
        let table = decompose(&f(2, 6), &[1, 2]).unwrap();
        assert_eq!(rendered(&table), ["00 0", "01 1", "10 1", "11 0"]);
        assert_eq!(table.free_set(), &[] as &[usize]);
    }

    #[test]
    fn decompose_errors() {
        assert_eq!(decompose(&f(3, 21), &[]), Err(Error::EmptyFixedSet));
        assert_eq!(
            decompose(&f(3, 21), &[0]),
            Err(Error::VariableOutOfRange { index: 0, arity: 3 })
        );
        assert_eq!(
            decompose(&f(3, 21), &[1, 4]),
            Err(Error::VariableOutOfRange { index: 4, arity: 3 })
        );
    }

    #[test]
    fn influence_examples() {
        assert_eq!(influence(&f(3, 17), 1).unwrap(), InfluenceSign::Inessential);
        assert_eq!(influence(&f(3, 17), 2).unwrap(), InfluenceSign::Negative);
        assert_eq!(influence(&f(3, 168), 1).unwrap(), InfluenceSign::Positive);
        assert_eq!(influence(&f(2, 6), 1).unwrap(), InfluenceSign::Dual);
        assert!(influence(&f(2, 6), 3).is_err());
    }

    /// Fragment-reading route: fix everything but `var`, look for 01 / 10.
    fn influence_from_fragments(g: &BooleanFunction, var: usize) -> InfluenceSign {
        let others: Vec<usize> = (1..=g.arity()).filter(|&v| v != var).collect();
        if others.is_empty() {
            let text = g.to_string().chars().rev().collect::<String>();
            return InfluenceSign::from_witnesses(text == "01", text == "10");
        }
        let table = decompose(g, &others).unwrap();
        let texts: Vec<String> = table.entries().map(|(_, fr)| fr.to_string()).collect();
        InfluenceSign::from_witnesses(
            texts.iter().any(|t| t == "01"),
            texts.iter().any(|t| t == "10"),
        )
    }

    fn is_monotone(g: &BooleanFunction) -> bool {
        let len = g.table_len();
        (0..len).all(|x| (0..len).all(|y| x & y != x || !g.bit(x) || g.bit(y)))
    }

    #[test]
    fn exhaustive_sign_properties() {
        for arity in 1..=3 {
            for value in 0..1u64 << (1 << arity) {
                let g = f(arity, value);
                let signs = influences(&g);
                let flipped = influences(&g.complement());
                for var in 1..=arity {
                    let s = signs[var - 1];
                    assert_eq!(s, influence_from_fragments(&g, var));
                    assert_eq!(flipped[var - 1], s.flipped());
                    let (lo, hi) = g.cofactors(var).unwrap();
                    assert_eq!(s == InfluenceSign::Inessential, lo == hi);
                }
                let unate_up = signs
                    .iter()
                    .all(|s| matches!(s, InfluenceSign::Inessential | InfluenceSign::Positive));
                assert_eq!(unate_up, is_monotone(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn exhaustive_reassembly() {
        for arity in 1..=3usize {
            for value in 0..1u64 << (1 << arity) {
                let g = f(arity, value);
                for mask in 1..1usize << arity {
                    let fixed: Vec<usize> = (1..=arity).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                    assert_eq!(decompose(&g, &fixed).unwrap().reassemble(), g);
                }
            }
        }
    }

    #[test]
    fn fragments_are_restrictions() {
        let g = f(4, 0xB6E1);
        let table = decompose(&g, &[2, 4]).unwrap();
        for (assignment, frag) in table.entries() {
            let expected = g
                .restrict(4, assignment[1])
                .unwrap()
                .restrict(2, assignment[0])
                .unwrap();
            assert_eq!(frag.function(), &expected);
        }
    }

    proptest! {
        #[test]
        fn random_reassembly(arity in 4usize..=8, seed in any::<u64>(), mask in any::<u16>()) {
            let mut state = seed | 1;
            let g = BooleanFunction::from_fn(arity, |_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                state >> 63 == 1
            }).unwrap();
            let mut fixed: Vec<usize> = (1..=arity).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            if fixed.is_empty() {
                fixed.push(1);
            }
            prop_assert_eq!(decompose(&g, &fixed).unwrap().reassemble(), g);
        }
    }
}
