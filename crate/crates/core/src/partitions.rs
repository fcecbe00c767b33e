//! Partitions of `n` (Jordan types of nilpotent orbits), their contraction by a
//! common divisor, standard Young tableaux and irreducible `S_n` dimensions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Default largest `n` for which [`Partition::standard_tableaux`] will run.
pub const DEFAULT_TABLEAU_CAP: usize = 12;

/// A partition of `n`: nonempty, weakly decreasing, positive parts.
///
/// The derived ordering is lexicographic on the parts, so the "largest first"
/// enumeration order is simply descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let reason = if parts.is_empty() {
            Some("no parts")
        } else if parts.contains(&0) {
            Some("zero part")
        } else if parts.windows(2).any(|w| w[0] < w[1]) {
            Some("parts not weakly decreasing")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidPartition { parts, reason }),
            None => Ok(Self { parts }),
        }
    }

    /// Sorts the parts into weakly decreasing order before validating.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// The one-row partition `(n)`, Jordan type of the principal orbit.
    pub fn row(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// The one-column partition `(1^n)`, Jordan type of the zero orbit.
    pub fn column(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Self::new(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn gcd_of_parts(&self) -> usize {
        self.parts.iter().fold(0, |g, &p| g.gcd(&p))
    }

    pub fn divisible_by(&self, d: usize) -> bool {
        d != 0 && self.parts.iter().all(|p| p % d == 0)
    }

    /// Divides every part by `d`, giving a partition of `n / d`.
    pub fn contract(&self, d: usize) -> Result<Self> {
        if !self.divisible_by(d) {
            return Err(Error::NotDivisible {
                partition: self.to_string(),
                divisor: d,
            });
        }
        Ok(Self {
            parts: self.parts.iter().map(|p| p / d).collect(),
        })
    }

    /// Multiplies every part by `d`; inverse of [`Partition::contract`].
    pub fn scale(&self, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self {
            parts: self.parts.iter().map(|p| p * d).collect(),
        })
    }

    pub fn conjugate(&self) -> Self {
        let parts = (0..self.parts[0])
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Self { parts }
    }

    /// Hook lengths row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j) + (conj.parts[j] - i) - 1).collect())
            .collect()
    }

    /// Dimension of the irreducible `S_n` representation labelled by this
    /// partition, by the hook-length formula `n! / prod(hooks)`.
    pub fn irrep_dimension(&self) -> BigUint {
        let n = self.size();
        let factorial: BigUint = (1..=n).map(BigUint::from).product();
        let hooks: BigUint = self
            .hook_lengths()
            .into_iter()
            .flatten()
            .map(BigUint::from)
            .product();
        let (quotient, remainder) = factorial.div_rem(&hooks);
        debug_assert!(remainder == BigUint::ZERO);
        quotient
    }

    pub fn standard_tableaux(&self) -> Result<Vec<StandardTableau>> {
        self.standard_tableaux_with_cap(DEFAULT_TABLEAU_CAP)
    }

    /// All standard tableaux of this shape, sorted by row-reading word.
    pub fn standard_tableaux_with_cap(&self, cap: usize) -> Result<Vec<StandardTableau>> {
        let n = self.size();
        if n > cap {
            return Err(Error::CapExceeded { size: n, cap });
        }
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.parts.len()];
        let mut out = Vec::new();
        self.place(1, n, &mut rows, &mut out);
        out.sort_by_cached_key(StandardTableau::reading_word);
        Ok(out)
    }

    fn place(
        &self,
        next: usize,
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > n {
            out.push(StandardTableau {
                shape: self.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..self.parts.len() {
            let len = rows[r].len();
            let fits = len < self.parts[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                self.place(next + 1, n, rows, out);
                rows[r].pop();
            }
        }
    }

    /// Parts joined by `-`, as used in CSV output.
    pub fn dashed(&self) -> String {
        self.parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join("-")
    }
}

impl fmt::Display for Partition {
    /// Bracketed with repeated parts as exponents, e.g. `[2^2 1^2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{p}^{run}")?;
            } else {
                write!(f, "{p}")?;
            }
            i += run;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3 2 1]`, `3,2,1`, `3-2-1` and exponent shorthand like `2^2 1^2`.
    fn from_str(s: &str) -> Result<Self> {
        let syntax = || Error::PartitionSyntax(s.to_string());
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for token in body
            .split(|c: char| c.is_whitespace() || c == ',' || c == '-')
            .filter(|t| !t.is_empty())
        {
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| syntax())?),
                None => (token, 1),
            };
            let base = base.parse::<usize>().map_err(|_| syntax())?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Self::new(parts)
    }
}

/// Iterator over the partitions of `n` in descending lexicographic order.
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self {
            next: Some(vec![n]),
        })
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: lower the last part exceeding 1 and refill greedily.
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let v = current[i] - 1;
            let mut rem = current[i + 1..].iter().sum::<usize>() + 1;
            let mut succ = current[..i].to_vec();
            succ.push(v);
            while rem >= v {
                succ.push(v);
                rem -= v;
            }
            if rem > 0 {
                succ.push(rem);
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// All partitions of `n`, from `(n)` down to `(1^n)`.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    Ok(Partitions::new(n)?.collect())
}

/// A standard Young tableau, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let invalid = |reason| Error::InvalidPartition {
            parts: shape.parts.clone(),
            reason,
        };
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || std::mem::replace(&mut seen[e], true) {
                return Err(invalid("entries are not a permutation of 1..n"));
            }
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(invalid("row not increasing"));
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(invalid("column not increasing"));
            }
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entries read row by row, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_small_cases() {
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p(&[1])]);
        // Frozen from the brute-force composition filter in `oracle`.
        assert_eq!(
            enumerate_partitions(4).unwrap(),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let six = enumerate_partitions(6).unwrap();
        assert_eq!(six.len(), 11);
        assert_eq!(six.first(), Some(&p(&[6])));
        assert_eq!(six.last(), Some(&p(&[1; 6])));
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(enumerate_partitions(0).unwrap_err(), Error::ZeroRank);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap(), p(&[3, 2, 1]));
    }

    #[test]
    fn divisibility_and_contraction() {
        assert!(p(&[2, 2, 2]).divisible_by(2));
        assert!(!p(&[3, 2, 1]).divisible_by(2));
        assert!(p(&[3, 2, 1]).divisible_by(1));
        assert!(!p(&[3]).divisible_by(0));
        assert_eq!(p(&[4, 2]).contract(2).unwrap(), p(&[2, 1]));
        assert_eq!(p(&[6]).contract(6).unwrap(), p(&[1]));
        assert_eq!(p(&[2, 2, 2]).contract(2).unwrap(), p(&[1, 1, 1]));
        assert!(matches!(
            p(&[3, 2, 1]).contract(2),
            Err(Error::NotDivisible { divisor: 2, .. })
        ));
        assert_eq!(p(&[2, 1]).scale(2).unwrap(), p(&[4, 2]));
    }

    #[test]
    fn gcd_of_parts() {
        assert_eq!(p(&[3, 3]).gcd_of_parts(), 3);
        assert_eq!(p(&[2, 1, 1]).gcd_of_parts(), 1);
        assert_eq!(p(&[4, 2]).gcd_of_parts(), 2);
        assert_eq!(p(&[6]).gcd_of_parts(), 6);
    }

    #[test]
    fn hook_length_dimensions() {
        assert_eq!(p(&[3, 2, 1]).irrep_dimension(), BigUint::from(16u32));
        assert_eq!(p(&[7]).irrep_dimension(), BigUint::from(1u32));
        assert_eq!(p(&[2, 1]).irrep_dimension(), BigUint::from(2u32));
        assert_eq!(p(&[4, 2]).irrep_dimension(), BigUint::from(9u32));
        assert_eq!(p(&[3, 3, 2, 1]).hook_lengths(), vec![vec![6, 4, 2], vec![5, 3, 1], vec![3, 1], vec![1]]);
    }

    #[test]
    fn tableaux() {
        let t = p(&[2, 2, 2]).standard_tableaux().unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t[0].rows(), &[vec![1, 2], vec![3, 4], vec![5, 6]]);
        assert_eq!(p(&[5]).standard_tableaux().unwrap().len(), 1);
        assert_eq!(p(&[4, 2]).standard_tableaux().unwrap().len(), 9);
        let words: Vec<_> = t.iter().map(StandardTableau::reading_word).collect();
        assert!(words.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn tableau_cap() {
        assert_eq!(
            p(&[13]).standard_tableaux().unwrap_err(),
            Error::CapExceeded { size: 13, cap: 12 }
        );
        assert_eq!(p(&[13]).standard_tableaux_with_cap(13).unwrap().len(), 1);
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3, 4]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 4], vec![2, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p(&[2, 2, 1, 1]).to_string(), "[2^2 1^2]");
        assert_eq!(p(&[3, 2, 1]).to_string(), "[3 2 1]");
        assert_eq!("[2 1^4]".parse::<Partition>().unwrap(), p(&[2, 1, 1, 1, 1]));
        assert_eq!("4-2".parse::<Partition>().unwrap(), p(&[4, 2]));
        assert_eq!("3,3".parse::<Partition>().unwrap(), p(&[3, 3]));
        assert!("3 x".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 2, 1]).dashed(), "3-2-1");
    }
}
