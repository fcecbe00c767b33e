//! The center `Z = {ω^j I}` of `SL_n`, cyclic of order `n`, and its characters.
//!
//! A character is stored as the exponent `k` with `χ_k(ω) = ω^k`, and a
//! subgroup as the exponent `g | n` of its generator `ω^g`. Every statement
//! about kernels and orders reduces to arithmetic mod `n`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// The character `χ_k` of `Z ≅ Z/n`; `k = 0` is the trivial character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralCharacter {
    n: usize,
    k: usize,
}

impl CentralCharacter {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if k >= n {
            return Err(Error::OutOfRange {
                what: "character exponent",
                value: k,
                lo: 0,
                hi: n - 1,
            });
        }
        Ok(Self { n, k })
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponent(&self) -> usize {
        self.k
    }

    pub fn is_trivial(&self) -> bool {
        self.k == 0
    }

    /// `n / gcd(n, k)`, with `gcd(n, 0) = n`.
    pub fn order(&self) -> usize {
        self.n / self.n.gcd(&self.k)
    }

    pub fn kernel(&self) -> CentralSubgroup {
        CentralSubgroup {
            n: self.n,
            generator_exponent: self.order(),
        }
    }

    /// Whether `χ_k(ω^j) = 1`.
    pub fn is_trivial_on(&self, j: usize) -> bool {
        (self.k * j).is_multiple_of(self.n)
    }

    /// `ι` for the trivial character, `χ_k` otherwise.
    pub fn label(&self) -> String {
        if self.is_trivial() {
            "ι".to_string()
        } else {
            format!("χ_{}", self.k)
        }
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The subgroup `{1, ω^g, ω^{2g}, ...}` of `Z`, where `g | n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CentralSubgroup {
    n: usize,
    generator_exponent: usize,
}

impl CentralSubgroup {
    pub fn new(n: usize, generator_exponent: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if generator_exponent == 0 || !n.is_multiple_of(generator_exponent) {
            return Err(Error::DivisorOfRank {
                n,
                divisor: generator_exponent,
            });
        }
        Ok(Self {
            n,
            generator_exponent,
        })
    }

    pub fn whole(n: usize) -> Result<Self> {
        Self::new(n, 1)
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::new(n, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator_exponent(&self) -> usize {
        self.generator_exponent
    }

    pub fn size(&self) -> usize {
        self.n / self.generator_exponent
    }

    pub fn is_trivial(&self) -> bool {
        self.generator_exponent == self.n
    }

    pub fn contains(&self, j: usize) -> bool {
        j.is_multiple_of(self.generator_exponent)
    }

    /// Exponents `j` with `ω^j` in the subgroup, ascending in `0..n`.
    pub fn elements(&self) -> Vec<usize> {
        (0..self.n).step_by(self.generator_exponent).collect()
    }

    pub fn is_subgroup_of(&self, other: &CentralSubgroup) -> bool {
        self.n == other.n && self.generator_exponent.is_multiple_of(other.generator_exponent)
    }
}

impl fmt::Display for CentralSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self
            .elements()
            .into_iter()
            .map(|j| match j {
                0 => "1".to_string(),
                1 => "ω".to_string(),
                _ => format!("ω^{j}"),
            })
            .collect();
        write!(f, "{{{}}}", elems.join(", "))
    }
}

/// `χ_0, ..., χ_{n-1}` in exponent order.
pub fn all_characters(n: usize) -> Result<Vec<CentralCharacter>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok((0..n).map(|k| CentralCharacter { n, k }).collect())
}

/// Characters of order exactly `d`; empty unless `d | n`.
pub fn characters_of_order(n: usize, d: usize) -> Result<Vec<CentralCharacter>> {
    Ok(all_characters(n)?
        .into_iter()
        .filter(|c| c.order() == d)
        .collect())
}

/// Image in `Ẑ` of the generator of the Levi component group `Ĉ_d`:
/// `χ_{n/d}`, a character of order `d`.
pub fn pullback_from_levi(n: usize, d: usize) -> Result<CentralCharacter> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::DivisorOfRank { n, divisor: d });
    }
    CentralCharacter::new(n, (n / d) % n)
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
