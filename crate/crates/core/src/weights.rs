//! Fundamental weights `λ_k` of `sl_n` in the simple-root basis, their
//! reductions `μ_k` modulo the root lattice, and the monomial relations
//! `v_k^d = ∏ x_i^{e_i}` they induce on the toric variety.
//!
//! Every coefficient has denominator dividing `n`, so an expansion is stored
//! as the integer numerators over the fixed denominator `n`. Simple roots are
//! indexed `1..=n-1`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// `λ_k`
    Fundamental,
    /// `μ_k`, coefficients in `[0, 1)`
    Reduced,
}

/// `Σ_i (numerators[i-1] / n) α_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightExpansion {
    n: usize,
    k: usize,
    kind: WeightKind,
    numerators: Vec<usize>,
}

impl WeightExpansion {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    /// Numerators over the denominator `n`, for `α_1..α_{n-1}`.
    pub fn numerators(&self) -> &[usize] {
        &self.numerators
    }

    /// Coefficient of `α_i` as a reduced fraction `(num, den)`.
    pub fn coefficient(&self, i: usize) -> Result<(usize, usize)> {
        check_root_index(self.n, i)?;
        let num = self.numerators[i - 1];
        let g = num.gcd(&self.n);
        Ok((num / g, self.n / g))
    }

    /// Least common denominator of all coefficients.
    pub fn common_denominator(&self) -> usize {
        let g = self.numerators.iter().fold(self.n, |g, &a| g.gcd(&a));
        self.n / g
    }

    /// Whether `α_c` has a nonzero coefficient.
    pub fn contains_root(&self, c: usize) -> Result<bool> {
        check_root_index(self.n, c)?;
        Ok(self.numerators[c - 1] != 0)
    }

    /// `n` times the coordinates in the `ε`-basis, using `α_i = ε_i - ε_{i+1}`.
    /// The result has `n` entries summing to zero.
    pub fn scaled_epsilon_coordinates(&self) -> Vec<i64> {
        let a = |i: usize| -> i64 {
            if i == 0 || i == self.n {
                0
            } else {
                self.numerators[i - 1] as i64
            }
        };
        (1..=self.n).map(|j| a(j) - a(j - 1)).collect()
    }

    fn render_over(&self, den: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .numerators
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| {
                let c = a * den / self.n;
                if c == 1 {
                    format!("α_{}", i + 1)
                } else {
                    format!("{c}α_{}", i + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        if den == 1 {
            write!(f, "{}", terms.join(" + "))
        } else {
            write!(f, "(1/{den})({})", terms.join(" + "))
        }
    }
}

impl fmt::Display for WeightExpansion {
    /// Fundamental weights over `n`, reduced weights over their least common
    /// denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = match self.kind {
            WeightKind::Fundamental => self.n,
            WeightKind::Reduced => self.common_denominator(),
        };
        self.render_over(den, f)
    }
}

/// `v_k^degree = ∏_i x_i^{exponents[i-1]}` with `degree` minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialRelation {
    n: usize,
    k: usize,
    degree: usize,
    exponents: Vec<usize>,
}

impl MonomialRelation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// Right-hand side as text, e.g. `x_1^2 x_2 x_4^2`.
    pub fn monomial(&self) -> String {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| match e {
                1 => format!("x_{}", i + 1),
                _ => format!("x_{}^{e}", i + 1),
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join(" ")
        }
    }
}

impl fmt::Display for MonomialRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "v_{} = {}", self.k, self.monomial())
        } else {
            write!(f, "v_{}^{} = {}", self.k, self.degree, self.monomial())
        }
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "rank parameter",
            value: n,
            lo: 2,
            hi: usize::MAX,
        });
    }
    Ok(())
}

fn check_root_index(n: usize, i: usize) -> Result<()> {
    check_rank(n)?;
    if i == 0 || i >= n {
        return Err(Error::OutOfRange {
            what: "simple root index",
            value: i,
            lo: 1,
            hi: n - 1,
        });
    }
    Ok(())
}

/// `λ_k`: numerator `i(n-k)` for `i <= k` and `k(n-i)` for `i > k`.
pub fn fundamental_weight(n: usize, k: usize) -> Result<WeightExpansion> {
    check_root_index(n, k)?;
    let numerators = (1..n)
        .map(|i| if i <= k { i * (n - k) } else { k * (n - i) })
        .collect();
    Ok(WeightExpansion {
        n,
        k,
        kind: WeightKind::Fundamental,
        numerators,
    })
}

/// `μ_k`: the fractional parts of the coefficients of `λ_k`.
pub fn reduced_weight(n: usize, k: usize) -> Result<WeightExpansion> {
    let lambda = fundamental_weight(n, k)?;
    Ok(WeightExpansion {
        kind: WeightKind::Reduced,
        numerators: lambda.numerators.iter().map(|a| a % n).collect(),
        ..lambda
    })
}

/// Whether `α_c` occurs in `μ_k`: true iff `n / gcd(n, c)` does not divide `k`.
pub fn occurs(n: usize, c: usize, k: usize) -> Result<bool> {
    check_root_index(n, c)?;
    check_root_index(n, k)?;
    let r = n / n.gcd(&c);
    Ok(!k.is_multiple_of(r))
}

/// The `k` in `1..n` for which `α_c` does not occur in `μ_k`.
pub fn occurrence_exceptions(n: usize, c: usize) -> Result<Vec<usize>> {
    check_root_index(n, c)?;
    let r = n / n.gcd(&c);
    Ok((1..n).filter(|k| k % r == 0).collect())
}

/// The relation `v_k^d = ∏ x_i^{d a_{ki}}` with `d` the least common
/// denominator of the coefficients of `μ_k`.
pub fn toric_relation(n: usize, k: usize) -> Result<MonomialRelation> {
    let mu = reduced_weight(n, k)?;
    let degree = mu.common_denominator();
    let exponents = mu.numerators.iter().map(|a| a * degree / n).collect();
    Ok(MonomialRelation {
        n,
        k,
        degree,
        exponents,
    })
}
