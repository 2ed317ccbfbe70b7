//! Function classes defined by the shape of the interaction graph a rule
//! induces, and exhaustive censuses of them for small arity.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::decompose::{influences, InfluenceSign};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// Largest arity for which [`enumerate_class`] will scan every function.
pub const CENSUS_MAX_ARITY: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionClass {
    /// Every influence is positive or absent, at least one positive.
    OnlyPositive,
    /// Every influence is negative or absent, at least one negative.
    OnlyNegative,
    /// Every variable has a positive influence.
    CompletePositive,
    /// Every variable has a negative influence.
    CompleteNegative,
    NestedCanalizing,
}

impl FunctionClass {
    pub const ALL: [FunctionClass; 5] = [
        FunctionClass::OnlyPositive,
        FunctionClass::OnlyNegative,
        FunctionClass::CompletePositive,
        FunctionClass::CompleteNegative,
        FunctionClass::NestedCanalizing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionClass::OnlyPositive => "only_positive",
            FunctionClass::OnlyNegative => "only_negative",
            FunctionClass::CompletePositive => "complete_positive",
            FunctionClass::CompleteNegative => "complete_negative",
            FunctionClass::NestedCanalizing => "ncf",
        }
    }
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.replace('-', "_").as_str() {
            "only_positive" | "pbf" => FunctionClass::OnlyPositive,
            "only_negative" | "nbf" => FunctionClass::OnlyNegative,
            "complete_positive" => FunctionClass::CompletePositive,
            "complete_negative" => FunctionClass::CompleteNegative,
            "ncf" | "nested_canalizing" => FunctionClass::NestedCanalizing,
            _ => return Err(Error::Literal(s.to_string())),
        })
    }
}

/// Canalizing layers of a nested canalizing function.
///
/// The function returns `canalized_outputs[k]` as soon as
/// `x_{order[k]} == canalizing_inputs[k]` (checked in order), and the
/// negation of the last canalized output when no layer fires.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NcfWitness {
    pub order: Vec<usize>,
    pub canalizing_inputs: Vec<bool>,
    pub canalized_outputs: Vec<bool>,
}

impl NcfWitness {
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        for ((&var, &input), &output) in self
            .order
            .iter()
            .zip(&self.canalizing_inputs)
            .zip(&self.canalized_outputs)
        {
            if assignment[var - 1] == input {
                return output;
            }
        }
        !*self.canalized_outputs.last().expect("witness has at least one layer")
    }

    /// Truth table obtained by replaying the layers.
    pub fn replay(&self, arity: usize) -> Result<BooleanFunction> {
        BooleanFunction::from_fn(arity, |index| {
            let a = crate::function::index_assignment(arity, index);
            self.evaluate(&a)
        })
    }
}

/// Searches for canalizing layers; variables ascending, input 0 before 1.
///
/// `vars` maps the variables of `f` back to the caller's numbering.
fn ncf_layers(f: &BooleanFunction, vars: &[usize], layers: &mut NcfWitness) -> bool {
    for local in 1..=f.arity() {
        let (lo, hi) = f.cofactors(local).expect("variable in range");
        for (input, canalized, rest) in [(false, &lo, &hi), (true, &hi, &lo)] {
            let Some(output) = canalized.constant_value() else {
                continue;
            };
            let depth = layers.order.len();
            layers.order.push(vars[local - 1]);
            layers.canalizing_inputs.push(input);
            layers.canalized_outputs.push(output);
            let done = if f.arity() == 1 {
                // The other cofactor must be the opposite constant: f = x or !x.
                rest.constant_value() == Some(!output)
            } else {
                let remaining: Vec<usize> =
                    vars.iter().copied().filter(|&v| v != vars[local - 1]).collect();
                rest.constant_value().is_none() && ncf_layers(rest, &remaining, layers)
            };
            if done {
                return true;
            }
            layers.order.truncate(depth);
            layers.canalizing_inputs.truncate(depth);
            layers.canalized_outputs.truncate(depth);
        }
    }
    false
}

/// Nested canalizing test; returns the first witness found.
pub fn nested_canalizing_witness(f: &BooleanFunction) -> Option<NcfWitness> {
    if f.arity() == 0 {
        return None;
    }
    let vars: Vec<usize> = (1..=f.arity()).collect();
    let mut layers = NcfWitness {
        order: Vec::new(),
        canalizing_inputs: Vec::new(),
        canalized_outputs: Vec::new(),
    };
    ncf_layers(f, &vars, &mut layers).then_some(layers)
}

pub fn is_nested_canalizing(f: &BooleanFunction) -> bool {
    nested_canalizing_witness(f).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub arity: usize,
    pub decimal: String,
    pub bitstring: String,
    pub influences: Vec<InfluenceSign>,
    pub essential: Vec<usize>,
    pub only_positive: bool,
    pub only_negative: bool,
    pub complete_positive: bool,
    pub complete_negative: bool,
    pub nested_canalizing: bool,
    pub ncf_witness: Option<NcfWitness>,
}

impl ClassificationReport {
    pub fn is_member(&self, class: FunctionClass) -> bool {
        match class {
            FunctionClass::OnlyPositive => self.only_positive,
            FunctionClass::OnlyNegative => self.only_negative,
            FunctionClass::CompletePositive => self.complete_positive,
            FunctionClass::CompleteNegative => self.complete_negative,
            FunctionClass::NestedCanalizing => self.nested_canalizing,
        }
    }

    pub fn classes(&self) -> Vec<FunctionClass> {
        FunctionClass::ALL
            .into_iter()
            .filter(|&c| self.is_member(c))
            .collect()
    }
}

fn sign_flags(signs: &[InfluenceSign]) -> [bool; 4] {
    use InfluenceSign::*;
    let only = |s: InfluenceSign| {
        signs.iter().all(|&x| x == Inessential || x == s) && signs.contains(&s)
    };
    let complete = |s: InfluenceSign| signs.iter().all(|&x| x == s);
    [only(Positive), only(Negative), complete(Positive), complete(Negative)]
}

pub fn classify(f: &BooleanFunction) -> ClassificationReport {
    let signs = influences(f);
    let [only_positive, only_negative, complete_positive, complete_negative] = sign_flags(&signs);
    let ncf_witness = nested_canalizing_witness(f);
    ClassificationReport {
        arity: f.arity(),
        decimal: f.decimal().to_string(),
        bitstring: f.to_string(),
        essential: signs
            .iter()
            .enumerate()
            .filter(|(_, s)| **s != InfluenceSign::Inessential)
            .map(|(i, _)| i + 1)
            .collect(),
        influences: signs,
        only_positive,
        only_negative,
        complete_positive,
        complete_negative,
        nested_canalizing: ncf_witness.is_some(),
        ncf_witness,
    }
}

/// Membership test for one class, skipping the unrelated checks.
pub fn is_member(f: &BooleanFunction, class: FunctionClass) -> bool {
    match class {
        FunctionClass::NestedCanalizing => is_nested_canalizing(f),
        _ => {
            let flags = sign_flags(&influences(f));
            match class {
                FunctionClass::OnlyPositive => flags[0],
                FunctionClass::OnlyNegative => flags[1],
                FunctionClass::CompletePositive => flags[2],
                FunctionClass::CompleteNegative => flags[3],
                FunctionClass::NestedCanalizing => unreachable!(),
            }
        }
    }
}

/// Decimal identities of every member of `class` at `arity`, ascending.
pub fn enumerate_class(arity: usize, class: FunctionClass) -> Result<Vec<u64>> {
    if arity > CENSUS_MAX_ARITY {
        return Err(Error::CensusLimit {
            arity,
            limit: CENSUS_MAX_ARITY,
        });
    }
    if arity == 0 {
        return Err(Error::ArityOutOfRange(0));
    }
    let mut members = Vec::new();
    for value in 0..1u64 << (1 << arity) {
        let f = BooleanFunction::from_u64(arity, value)?;
        if is_member(&f, class) {
            members.push(value);
        }
    }
    Ok(members)
}
