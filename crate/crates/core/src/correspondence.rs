//! Cuspidal data, Lusztig-sheaf decompositions and the generalized Springer
//! correspondence table for `SL_n`.
//!
//! For a central character `χ` of order `d`, the Lusztig sheaf `A_χ` has one
//! simple summand `IC(O_λ, L_χ)` for every partition `λ ⊢ n` whose parts are
//! all divisible by `d`. It appears with multiplicity `dim V_λ̄`, where `λ̄` is
//! `λ` with every part divided by `d` and `V_λ̄` is the corresponding
//! irreducible representation of the relative Weyl group `S_{n/d}`. The
//! trivial character gives the ordinary Springer sheaf.

use std::fmt;

use num_bigint::BigUint;

use crate::characters::{all_characters, CentralCharacter};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

/// `(L, O_L^pr, L_χ^L)` for `L = S(GL_d × ... × GL_d)` with `n/d` blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CuspidalDatum {
    chi: CentralCharacter,
}

impl CuspidalDatum {
    pub fn character(&self) -> CentralCharacter {
        self.chi
    }

    pub fn n(&self) -> usize {
        self.chi.n()
    }

    /// `d = order(χ)`.
    pub fn block_size(&self) -> usize {
        self.chi.order()
    }

    /// Number of `GL_d` factors, `n / d`.
    pub fn block_count(&self) -> usize {
        self.n() / self.block_size()
    }

    /// The relative Weyl group is `S_m` for this `m`.
    pub fn relative_weyl_degree(&self) -> usize {
        self.block_count()
    }

    pub fn is_cuspidal_on_group(&self) -> bool {
        self.block_count() == 1
    }

    /// `T`, `G`, or `S(GL_d × ... × GL_d)`.
    pub fn levi_label(&self) -> String {
        let d = self.block_size();
        if d == 1 {
            "T".to_string()
        } else if self.is_cuspidal_on_group() {
            "G".to_string()
        } else {
            let blocks = vec![format!("GL_{d}"); self.block_count()];
            format!("S({})", blocks.join(" × "))
        }
    }

    pub fn relative_weyl_label(&self) -> String {
        match self.relative_weyl_degree() {
            1 => "trivial".to_string(),
            m => format!("S_{m}"),
        }
    }
}

impl fmt::Display for CuspidalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: order {}, L = {}, W(L) = {}",
            self.chi,
            self.block_size(),
            self.levi_label(),
            self.relative_weyl_label()
        )
    }
}

pub fn cuspidal_datum(chi: CentralCharacter) -> CuspidalDatum {
    CuspidalDatum { chi }
}

/// `IC(O_λ, L_χ) ⊗ V_λ̄` with its multiplicity `dim V_λ̄`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SheafSummand {
    orbit: Partition,
    chi: CentralCharacter,
    multiplicity_partition: Partition,
    multiplicity: BigUint,
}

impl SheafSummand {
    /// Fails unless `order(chi)` divides every part of `orbit`.
    pub fn new(orbit: Partition, chi: CentralCharacter) -> Result<Self> {
        if orbit.size() != chi.n() {
            return Err(Error::RankMismatch {
                left: orbit.size(),
                right: chi.n(),
            });
        }
        let multiplicity_partition = orbit.contract(chi.order())?;
        let multiplicity = multiplicity_partition.irrep_dimension();
        Ok(Self {
            orbit,
            chi,
            multiplicity_partition,
            multiplicity,
        })
    }

    pub fn orbit(&self) -> &Partition {
        &self.orbit
    }

    pub fn character(&self) -> CentralCharacter {
        self.chi
    }

    pub fn multiplicity_partition(&self) -> &Partition {
        &self.multiplicity_partition
    }

    pub fn multiplicity(&self) -> &BigUint {
        &self.multiplicity
    }
}

impl fmt::Display for SheafSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IC({}, L_{}) ⊗ V_{}  (dim {})",
            self.orbit, self.chi, self.multiplicity_partition, self.multiplicity
        )
    }
}

/// Summands of `A_χ` in partition enumeration order.
pub fn lusztig_sheaf(chi: CentralCharacter) -> Vec<SheafSummand> {
    let d = chi.order();
    enumerate_partitions(chi.n())
        .expect("n > 0")
        .into_iter()
        .filter(|lam| lam.divisible_by(d))
        .map(|lam| SheafSummand::new(lam, chi).expect("d divides every part"))
        .collect()
}

/// Number of irreducible equivariant local systems on `O_λ`: `gcd(λ)`.
pub fn orbit_character_count(n: usize, lam: &Partition) -> Result<usize> {
    if lam.size() != n {
        return Err(Error::RankMismatch {
            left: lam.size(),
            right: n,
        });
    }
    Ok(lam.gcd_of_parts())
}

/// Every summand of every Lusztig sheaf for `SL_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceTable {
    n: usize,
    rows: Vec<SheafSummand>,
}

impl CorrespondenceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Orbits in enumeration order `(n), ..., (1^n)`, then characters by
    /// exponent.
    pub fn rows(&self) -> &[SheafSummand] {
        &self.rows
    }

    pub fn rows_for_orbit<'a>(
        &'a self,
        orbit: &'a Partition,
    ) -> impl Iterator<Item = &'a SheafSummand> + 'a {
        self.rows.iter().filter(move |s| s.orbit() == orbit)
    }

    /// Orbits from `(1^n)` up to `(n)`, with the trivial system first on each.
    pub fn figure_order(&self) -> Vec<&SheafSummand> {
        let mut rows: Vec<&SheafSummand> = self.rows.iter().collect();
        rows.sort_by(|a, b| {
            a.orbit()
                .cmp(b.orbit())
                .then(a.character().exponent().cmp(&b.character().exponent()))
        });
        rows
    }
}

pub fn full_table(n: usize) -> Result<CorrespondenceTable> {
    let mut rows: Vec<SheafSummand> = all_characters(n)?
        .into_iter()
        .flat_map(lusztig_sheaf)
        .collect();
    // Descending orbit, then ascending exponent.
    rows.sort_by(|a, b| {
        b.orbit()
            .cmp(a.orbit())
            .then(a.character().exponent().cmp(&b.character().exponent()))
    });
    Ok(CorrespondenceTable { n, rows })
}
