//! Stabilizers `Z^x` and strata of the toric variety, read off from which
//! simple-root coordinates `x_c` vanish at a point.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::characters::{all_characters, CentralCharacter, CentralSubgroup};
use crate::error::{Error, Result};

/// The set `C ⊆ {1, ..., n-1}` of positions where `x_c = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VanishingPattern {
    n: usize,
    zeros: BTreeSet<usize>,
}

impl VanishingPattern {
    pub fn new(n: usize, zeros: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        let zeros: BTreeSet<usize> = zeros.into_iter().collect();
        if let Some(&c) = zeros.iter().find(|&&c| c == 0 || c >= n) {
            return Err(Error::OutOfRange {
                what: "vanishing coordinate",
                value: c,
                lo: 1,
                hi: n.saturating_sub(1),
            });
        }
        Ok(Self { n, zeros })
    }

    /// The regular locus: no coordinate vanishes.
    pub fn regular(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// Bit `c - 1` of `mask` set means `x_c = 0`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        let zeros = (1..n).filter(|c| c - 1 < 64 && mask >> (c - 1) & 1 == 1);
        let vp = Self::new(n, zeros)?;
        if n <= 64 && mask >> (n - 1) != 0 {
            return Err(Error::OutOfRange {
                what: "vanishing mask bit",
                value: 64 - mask.leading_zeros() as usize,
                lo: 1,
                hi: n - 1,
            });
        }
        Ok(vp)
    }

    /// All `2^{n-1}` patterns for rank `n`, in mask order.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if n > 64 {
            return Err(Error::OutOfRange {
                what: "rank for exhaustive patterns",
                value: n,
                lo: 1,
                hi: 64,
            });
        }
        (0..1u64 << (n - 1)).map(|m| Self::from_mask(n, m)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zeros(&self) -> &BTreeSet<usize> {
        &self.zeros
    }

    pub fn is_regular(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn is_subset_of(&self, other: &VanishingPattern) -> bool {
        self.n == other.n && self.zeros.is_subset(&other.zeros)
    }

    /// `r = lcm(n / gcd(n, c))` over the zero positions; `1` when none vanish.
    pub fn stabilizer_index(&self) -> usize {
        self.zeros
            .iter()
            .map(|c| self.n / self.n.gcd(c))
            .fold(1, |r, ri| r.lcm(&ri))
    }
}

impl fmt::Display for VanishingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z: Vec<String> = self.zeros.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", z.join(","))
    }
}

/// `Z^x = ker χ_r` with `r` the [`VanishingPattern::stabilizer_index`].
pub fn stabilizer(vp: &VanishingPattern) -> CentralSubgroup {
    CentralCharacter::new(vp.n, vp.stabilizer_index() % vp.n)
        .expect("r divides n")
        .kernel()
}

/// `{k : r ∤ k}`: the `v_k` forced to vanish by the pattern.
pub fn forced_v_zero_set(vp: &VanishingPattern) -> BTreeSet<usize> {
    let r = vp.stabilizer_index();
    (1..vp.n).filter(|k| k % r != 0).collect()
}

/// Whether a point with this pattern lies in the stratum for `chi`: every
/// vanishing position is a multiple of `order(chi)`.
pub fn in_stratum(vp: &VanishingPattern, chi: &CentralCharacter) -> Result<bool> {
    if vp.n != chi.n() {
        return Err(Error::RankMismatch {
            left: vp.n,
            right: chi.n(),
        });
    }
    let d = chi.order();
    Ok(vp.zeros.iter().all(|c| c % d == 0))
}

/// Characters `χ` with `Z^x ⊆ ker χ`, in exponent order. There are
/// `n / |Z^x|` of them.
pub fn admitting_characters(vp: &VanishingPattern) -> Vec<CentralCharacter> {
    all_characters(vp.n)
        .expect("n > 0")
        .into_iter()
        .filter(|chi| in_stratum(vp, chi).expect("same rank"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vp(n: usize, zeros: &[usize]) -> VanishingPattern {
        VanishingPattern::new(n, zeros.iter().copied()).unwrap()
    }

    fn chi(n: usize, k: usize) -> CentralCharacter {
        CentralCharacter::new(n, k).unwrap()
    }

    #[test]
    fn stabilizers() {
        let s = stabilizer(&vp(6, &[4]));
        assert_eq!(s.elements(), vec![0, 2, 4]);
        for n in 1..9 {
            assert!(stabilizer(&VanishingPattern::regular(n).unwrap()).is_trivial());
        }
        for n in 2..9 {
            assert_eq!(stabilizer(&vp(n, &[1])).size(), n);
            let all: Vec<usize> = (1..n).collect();
            assert_eq!(stabilizer(&vp(n, &all)).size(), n);
        }
    }

    #[test]
    fn forced_zeros() {
        assert_eq!(forced_v_zero_set(&vp(6, &[4])), BTreeSet::from([1, 2, 4, 5]));
        assert!(forced_v_zero_set(&vp(6, &[])).is_empty());
        assert_eq!(
            forced_v_zero_set(&vp(12, &[6])),
            BTreeSet::from([1, 3, 5, 7, 9, 11])
        );
    }

    #[test]
    fn strata_membership() {
        assert!(in_stratum(&vp(6, &[4]), &chi(6, 3)).unwrap());
        assert!(!in_stratum(&vp(6, &[3]), &chi(6, 3)).unwrap());
        assert!(in_stratum(&vp(6, &[1, 2, 3]), &chi(6, 0)).unwrap());
        assert_eq!(
            in_stratum(&vp(6, &[4]), &chi(4, 1)).unwrap_err(),
            Error::RankMismatch { left: 6, right: 4 }
        );
    }

    #[test]
    fn admitting() {
        assert_eq!(admitting_characters(&vp(6, &[])).len(), 6);
        assert_eq!(admitting_characters(&vp(6, &[4])), vec![chi(6, 0), chi(6, 3)]);
        assert_eq!(admitting_characters(&vp(6, &[1])), vec![chi(6, 0)]);
    }

    #[test]
    fn pattern_construction() {
        assert!(VanishingPattern::new(6, [6]).is_err());
        assert!(VanishingPattern::new(6, [0]).is_err());
        assert_eq!(VanishingPattern::from_mask(6, 0b1000).unwrap(), vp(6, &[4]));
        assert!(VanishingPattern::from_mask(6, 0b100000).is_err());
        assert_eq!(VanishingPattern::all(6).unwrap().len(), 32);
        assert_eq!(VanishingPattern::all(1).unwrap(), vec![vp(1, &[])]);
        assert_eq!(vp(6, &[4, 2]).to_string(), "{2,4}");
    }
}
