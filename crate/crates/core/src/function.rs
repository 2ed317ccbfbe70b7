//! Truth-table representation of n-variable Boolean functions.
//!
//! Variables are numbered `x1..xn`. An input assignment maps to the table
//! index `k = sum(x_m * 2^(n-m))`, so `x1` is the most significant index bit.
//! A function renders as an MSB-first bitstring: the leftmost character is
//! the output at index `2^n - 1`, the rightmost the output at index 0. The
//! decimal identity of a function is `sum(table[k] * 2^k)`, so the rendered
//! bitstring is simply the decimal value written in binary.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_ARITY: usize = 16;

/// An n-variable Boolean function stored as a packed truth table.
///
/// Arity 0 (a constant, one table bit) only arises from restricting every
/// variable away; the public constructors require arity `1..=16`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    arity: usize,
    words: Vec<u64>,
}

fn word_count(arity: usize) -> usize {
    (1usize << arity).div_ceil(64)
}

fn check_arity(arity: usize) -> Result<()> {
    if (1..=MAX_ARITY).contains(&arity) {
        Ok(())
    } else {
        Err(Error::ArityOutOfRange(arity))
    }
}

impl BooleanFunction {
    /// Builds a function of `arity` variables from a predicate over table indices.
    ///
    /// Accepts arity 0 for internal use by restriction and decomposition.
    pub fn from_fn(arity: usize, mut output: impl FnMut(usize) -> bool) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::ArityOutOfRange(arity));
        }
        let mut words = vec![0u64; word_count(arity)];
        for index in 0..1usize << arity {
            if output(index) {
                words[index / 64] |= 1 << (index % 64);
            }
        }
        Ok(BooleanFunction { arity, words })
    }

    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        check_arity(arity)?;
        Self::from_fn(arity, |_| value)
    }

    /// The projection `f(x1..xn) = x_var`.
    pub fn variable(arity: usize, var: usize) -> Result<Self> {
        check_arity(arity)?;
        let shift = index_shift(arity, var)?;
        Self::from_fn(arity, |index| (index >> shift) & 1 == 1)
    }

    pub fn from_decimal(arity: usize, value: &BigUint) -> Result<Self> {
        check_arity(arity)?;
        if value.bits() > 1u64 << arity {
            return Err(Error::ValueTooLarge { arity });
        }
        let mut words = value.to_u64_digits();
        words.resize(word_count(arity), 0);
        Ok(BooleanFunction { arity, words })
    }

    pub fn from_u64(arity: usize, value: u64) -> Result<Self> {
        Self::from_decimal(arity, &BigUint::from(value))
    }

    /// Parses an MSB-first bitstring such as `"00010101"`.
    pub fn from_bitstring(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let len = chars.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::BadBitstringLength(len));
        }
        let arity = len.trailing_zeros() as usize;
        check_arity(arity)?;
        let mut bits = Vec::with_capacity(len);
        for (position, &c) in chars.iter().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                found => return Err(Error::BadBitstringChar { found, position: position + 1 }),
            }
        }
        Self::from_fn(arity, |index| bits[len - 1 - index])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of table entries, `2^arity`.
    pub fn table_len(&self) -> usize {
        1 << self.arity
    }

    /// Output at table index `index`.
    #[inline]
    pub fn bit(&self, index: usize) -> bool {
        debug_assert!(index < self.table_len());
        (self.words[index / 64] >> (index % 64)) & 1 == 1
    }

    /// Evaluates the function at an assignment `(x1, .., xn)`.
    pub fn evaluate(&self, assignment: &[bool]) -> Result<bool> {
        if assignment.len() != self.arity {
            return Err(Error::AssignmentLength {
                expected: self.arity,
                found: assignment.len(),
            });
        }
        Ok(self.bit(assignment_index(assignment)))
    }

    pub fn decimal(&self) -> BigUint {
        BigUint::new(
            self.words
                .iter()
                .flat_map(|w| [*w as u32, (*w >> 32) as u32])
                .collect(),
        )
    }

    /// The decimal identity when the table fits in 64 bits (arity <= 6).
    pub fn to_u64(&self) -> Option<u64> {
        (self.arity <= 6).then(|| self.words[0])
    }

    pub fn complement(&self) -> Self {
        !self
    }

    /// Fixes `x_var = value`, returning a function of the remaining variables
    /// in their original relative order.
    pub fn restrict(&self, var: usize, value: bool) -> Result<Self> {
        let shift = index_shift(self.arity, var)?;
        let low_mask = (1usize << shift) - 1;
        let fixed = (value as usize) << shift;
        Self::from_fn(self.arity - 1, |j| {
            let index = ((j & !low_mask) << 1) | fixed | (j & low_mask);
            self.bit(index)
        })
    }

    /// Both cofactors `(f|x_var=0, f|x_var=1)`.
    pub fn cofactors(&self, var: usize) -> Result<(Self, Self)> {
        Ok((self.restrict(var, false)?, self.restrict(var, true)?))
    }

    /// `Some(value)` if the function is constant.
    pub fn constant_value(&self) -> Option<bool> {
        let first = self.bit(0);
        (0..self.table_len())
            .all(|index| self.bit(index) == first)
            .then_some(first)
    }

    /// Whether the output changes with `x_var` for some assignment of the others.
    pub fn depends_on(&self, var: usize) -> Result<bool> {
        let shift = index_shift(self.arity, var)?;
        Ok((0..self.table_len())
            .filter(|index| index >> shift & 1 == 0)
            .any(|index| self.bit(index) != self.bit(index | 1 << shift)))
    }

    /// Essential variables, ascending (1-based).
    pub fn essential_variables(&self) -> Vec<usize> {
        (1..=self.arity)
            .filter(|&var| self.depends_on(var).unwrap_or(false))
            .collect()
    }

    /// Number of true entries in the table.
    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    fn mask_tail(&mut self) {
        if self.arity < 6 {
            self.words[0] &= (1u64 << (1 << self.arity)) - 1;
        }
    }
}

/// Bit position of `x_var` inside a table index for the given arity.
pub(crate) fn index_shift(arity: usize, var: usize) -> Result<usize> {
    if var == 0 || var > arity {
        return Err(Error::VariableOutOfRange { index: var, arity });
    }
    Ok(arity - var)
}

/// Table index of an assignment `(x1, .., xn)`.
pub fn assignment_index(assignment: &[bool]) -> usize {
    assignment
        .iter()
        .fold(0, |acc, &bit| (acc << 1) | bit as usize)
}

/// The assignment `(x1, .., xn)` at a table index.
pub fn index_assignment(arity: usize, index: usize) -> Vec<bool> {
    (1..=arity).map(|var| (index >> (arity - var)) & 1 == 1).collect()
}

impl Not for &BooleanFunction {
    type Output = BooleanFunction;

    fn not(self) -> BooleanFunction {
        let mut out = BooleanFunction {
            arity: self.arity,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.mask_tail();
        out
    }
}

macro_rules! bitwise_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &BooleanFunction {
            type Output = BooleanFunction;

            /// Panics if the operands have different arities.
            fn $method(self, rhs: &BooleanFunction) -> BooleanFunction {
                assert_eq!(self.arity, rhs.arity, "arity mismatch");
                BooleanFunction {
                    arity: self.arity,
                    words: self.words.iter().zip(&rhs.words).map(|(a, b)| a $op b).collect(),
                }
            }
        }
    };
}

bitwise_op!(BitAnd, bitand, &);
bitwise_op!(BitOr, bitor, |);

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = (0..self.table_len())
            .rev()
            .map(|index| if self.bit(index) { '1' } else { '0' })
            .collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction({}@{})", self.decimal(), self.arity)
    }
}
