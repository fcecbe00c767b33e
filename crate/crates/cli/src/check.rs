//! Invariant suites behind the `check` subcommand.
//!
//! Each suite compares a closed-form computation against a brute-force
//! oracle or a stored transcription, for every rank up to `n_max` or the
//! suite's own ceiling, whichever is smaller. A failing suite reports the
//! first counterexample it found.

use std::collections::BTreeSet;
use std::thread;

use num_bigint::BigUint;
use serde_json::json;
use springer_core::characters::{all_characters, characters_of_order, divisors, pullback_from_levi};
use springer_core::correspondence::{full_table, lusztig_sheaf};
use springer_core::golden;
use springer_core::oracle;
use springer_core::partitions::enumerate_partitions;
use springer_core::strata::{admitting_characters, forced_v_zero_set, in_stratum, stabilizer};
use springer_core::weights::{fundamental_weight, occurrence_exceptions, occurs, reduced_weight, toric_relation};
use springer_core::{CentralCharacter, Partition, VanishingPattern};

use crate::document::{json_document, Format, OutputDocument, TextGrid};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteStatus {
    Pass { checks: u64 },
    Fail { checks: u64, counterexample: String },
    /// `n_max` is below the smallest rank the suite needs.
    Skip { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub status: SuiteStatus,
}

impl SuiteResult {
    pub fn failed(&self) -> bool {
        matches!(self.status, SuiteStatus::Fail { .. })
    }
}

/// Counts checks and stops at the first failure.
struct Tally {
    checks: u64,
}

impl Tally {
    fn ensure(&mut self, ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(what())
        }
    }
}

type SuiteFn = fn(usize, &mut Tally) -> Result<(), String>;

struct Suite {
    name: &'static str,
    /// Smallest `n_max` at which the suite runs.
    min_n: usize,
    run: SuiteFn,
}

const SUITES: &[Suite] = &[
    Suite { name: "partition-enumeration", min_n: 1, run: partition_enumeration },
    Suite { name: "hook-length", min_n: 1, run: hook_length },
    Suite { name: "contraction-bijection", min_n: 1, run: contraction_bijection },
    Suite { name: "character-kernels", min_n: 1, run: character_kernels },
    Suite { name: "character-orders", min_n: 1, run: character_orders },
    Suite { name: "occurrence", min_n: 2, run: occurrence },
    Suite { name: "weight-expansions", min_n: 2, run: weight_expansions },
    Suite { name: "stabilizers", min_n: 1, run: stabilizers },
    Suite { name: "table-coverage", min_n: 1, run: table_coverage },
    Suite { name: "lusztig-totals", min_n: 1, run: lusztig_totals },
    Suite { name: "golden-sl4", min_n: 4, run: golden_sl4 },
    Suite { name: "golden-table-sl6", min_n: 6, run: golden_sl6_table },
    Suite { name: "golden-steinberg-sl6", min_n: 6, run: golden_steinberg },
    Suite { name: "golden-weights-sl12", min_n: 12, run: golden_weights },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Runs every suite, one thread per suite, results in suite order.
pub fn run_suites(n_max: usize) -> Vec<SuiteResult> {
    thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|suite| {
                scope.spawn(move || {
                    let status = if n_max < suite.min_n {
                        SuiteStatus::Skip {
                            reason: format!("needs n_max >= {}", suite.min_n),
                        }
                    } else {
                        let mut tally = Tally { checks: 0 };
                        match (suite.run)(n_max, &mut tally) {
                            Ok(()) => SuiteStatus::Pass { checks: tally.checks },
                            Err(counterexample) => SuiteStatus::Fail {
                                checks: tally.checks,
                                counterexample,
                            },
                        }
                    };
                    SuiteResult { name: suite.name, status }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

/// Renders the suite report; the flag is true when every suite passed or
/// was skipped.
pub fn cmd_check(n_max: usize, format: Format) -> (OutputDocument, bool) {
    let results = run_suites(n_max);
    let all_ok = !results.iter().any(SuiteResult::failed);
    let payload = match format {
        Format::Json => {
            let rows = results
                .iter()
                .map(|r| match &r.status {
                    SuiteStatus::Pass { checks } => {
                        json!({"suite": r.name, "status": "pass", "checks": checks, "detail": ""})
                    }
                    SuiteStatus::Fail { checks, counterexample } => {
                        json!({"suite": r.name, "status": "fail", "checks": checks, "detail": counterexample})
                    }
                    SuiteStatus::Skip { reason } => {
                        json!({"suite": r.name, "status": "skip", "checks": 0, "detail": reason})
                    }
                })
                .collect();
            json_document(n_max, "check", None, rows)
        }
        Format::Csv => {
            let mut out = String::from("suite,status,checks,detail\n");
            for r in &results {
                let (status, checks, detail) = status_fields(&r.status);
                out.push_str(&format!("{},{status},{checks},\"{}\"\n", r.name, detail.replace('"', "\"\"")));
            }
            out
        }
        Format::Text => {
            let mut grid = TextGrid::new();
            for r in &results {
                let (status, checks, detail) = status_fields(&r.status);
                grid.row(vec![
                    status.to_uppercase(),
                    r.name.to_string(),
                    format!("{checks} checks"),
                    detail,
                ]);
            }
            format!(
                "Invariant suites up to n = {n_max}\n\n{}\n{}\n",
                grid.render(),
                if all_ok { "all suites passed" } else { "FAILED" }
            )
        }
    };
    (OutputDocument { format, payload }, all_ok)
}

fn status_fields(status: &SuiteStatus) -> (&'static str, u64, String) {
    match status {
        SuiteStatus::Pass { checks } => ("pass", *checks, String::new()),
        SuiteStatus::Fail { checks, counterexample } => ("fail", *checks, counterexample.clone()),
        SuiteStatus::Skip { reason } => ("skip", 0, reason.clone()),
    }
}

fn partition_enumeration(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 1..=n_max.min(16) {
        let ours: Vec<Vec<usize>> = enumerate_partitions(n)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        let unique: BTreeSet<_> = ours.iter().collect();
        t.ensure(unique.len() == ours.len(), || format!("duplicate partitions of {n}"))?;
        t.ensure(ours == oracle::partitions_by_compositions(n), || {
            format!("partitions of {n} differ from composition search")
        })?;
    }
    Ok(())
}

fn hook_length(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 1..=n_max.min(10) {
        for lam in enumerate_partitions(n).map_err(|e| e.to_string())? {
            let count = lam.standard_tableaux().map_err(|e| e.to_string())?.len();
            let dim = lam.irrep_dimension();
            t.ensure(dim == BigUint::from(count), || {
                format!("{lam}: hook length {dim}, tableaux {count}")
            })?;
        }
    }
    for n in 1..=n_max.min(20) {
        let total: BigUint = enumerate_partitions(n)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|l| l.irrep_dimension().pow(2))
            .sum();
        t.ensure(total == oracle::factorial(n), || format!("sum of squared dims for n = {n} is {total}"))?;
    }
    Ok(())
}

fn contraction_bijection(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 1..=n_max.min(30) {
        let all = enumerate_partitions(n).map_err(|e| e.to_string())?;
        for d in divisors(n) {
            let contracted: BTreeSet<Partition> = all
                .iter()
                .filter(|l| l.divisible_by(d))
                .map(|l| l.contract(d).expect("divisible"))
                .collect();
            let count = all.iter().filter(|l| l.divisible_by(d)).count();
            let target: BTreeSet<Partition> =
                enumerate_partitions(n / d).map_err(|e| e.to_string())?.into_iter().collect();
            t.ensure(contracted == target && count == target.len(), || {
                format!("contraction by {d} is not a bijection onto partitions of {}", n / d)
            })?;
        }
    }
    Ok(())
}

fn character_kernels(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 1..=n_max.min(60) {
        for chi in all_characters(n).map_err(|e| e.to_string())? {
            let k = chi.exponent();
            t.ensure(chi.kernel().elements() == oracle::kernel_by_search(n, k), || {
                format!("kernel of χ_{k} for n = {n}")
            })?;
            t.ensure(chi.order() == oracle::character_order_by_powering(n, k), || {
                format!("order of χ_{k} for n = {n}")
            })?;
        }
    }
    Ok(())
}

fn character_orders(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 1..=n_max.min(60) {
        let mut total = 0;
        for d in divisors(n) {
            let chars = characters_of_order(n, d).map_err(|e| e.to_string())?;
            total += chars.len();
            t.ensure(chars.iter().all(|c| c.kernel() == chars[0].kernel()), || {
                format!("order-{d} characters of Z/{n} have different kernels")
            })?;
            let pulled = pullback_from_levi(n, d).map_err(|e| e.to_string())?;
            t.ensure(pulled.order() == d, || format!("pullback for n = {n}, d = {d} has order {}", pulled.order()))?;
        }
        t.ensure(total == n, || format!("character orders of Z/{n} count {total}"))?;
    }
    Ok(())
}

fn occurrence(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 2..=n_max.min(40) {
        for k in 1..n {
            let mu = reduced_weight(n, k).map_err(|e| e.to_string())?;
            for c in 1..n {
                let closed = occurs(n, c, k).map_err(|e| e.to_string())?;
                let direct = mu.contains_root(c).map_err(|e| e.to_string())?;
                t.ensure(closed == direct && direct == oracle::occurs_by_fraction(n, c, k), || {
                    format!("occurrence of α_{c} in μ_{k} for n = {n}")
                })?;
            }
        }
    }
    Ok(())
}

fn weight_expansions(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 2..=n_max.min(40) {
        for k in 1..n {
            let lambda = fundamental_weight(n, k).map_err(|e| e.to_string())?;
            let mu = reduced_weight(n, k).map_err(|e| e.to_string())?;
            let rel = toric_relation(n, k).map_err(|e| e.to_string())?;
            for c in 1..n {
                let a = lambda.numerators()[c - 1];
                t.ensure(a as i64 == oracle::fundamental_coefficient_numerator(n, k, c), || {
                    format!("coefficient of α_{c} in λ_{k} for n = {n}")
                })?;
                t.ensure((a - mu.numerators()[c - 1]) % n == 0 && mu.numerators()[c - 1] < n, || {
                    format!("μ_{k} is not the reduction of λ_{k} for n = {n}")
                })?;
                t.ensure(rel.exponents()[c - 1] * n == rel.degree() * mu.numerators()[c - 1], || {
                    format!("relation for v_{k} unbalanced at x_{c}, n = {n}")
                })?;
            }
            let reduced = (1..rel.degree()).all(|d| mu.numerators().iter().any(|a| (d * a) % n != 0));
            t.ensure(reduced, || format!("relation for v_{k} not reduced, n = {n}"))?;
        }
    }
    Ok(())
}

fn stabilizers(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 1..=n_max.min(12) {
        let patterns = VanishingPattern::all(n).map_err(|e| e.to_string())?;
        let chars = all_characters(n).map_err(|e| e.to_string())?;
        for vp in patterns {
            let stab = stabilizer(&vp);
            t.ensure(stab.elements() == oracle::stabilizer_by_search(&vp), || {
                format!("stabilizer of {vp} for n = {n}")
            })?;
            t.ensure(forced_v_zero_set(&vp) == oracle::v_zero_set_by_search(&vp), || {
                format!("forced v-zeros of {vp} for n = {n}")
            })?;
            let admitted = admitting_characters(&vp);
            t.ensure(admitted.len() * stab.size() == n, || {
                format!("{} admitting characters with |Z^x| = {} for {vp}, n = {n}", admitted.len(), stab.size())
            })?;
            for chi in &chars {
                let inside = in_stratum(&vp, chi).map_err(|e| e.to_string())?;
                t.ensure(inside == stab.is_subgroup_of(&chi.kernel()), || {
                    format!("stratum membership of {vp} for {chi}, n = {n}")
                })?;
            }
        }
    }
    Ok(())
}

fn table_coverage(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 1..=n_max.min(12) {
        let table = full_table(n).map_err(|e| e.to_string())?;
        let got: Vec<(Partition, usize)> = table
            .rows()
            .iter()
            .map(|s| (s.orbit().clone(), s.character().exponent()))
            .collect();
        let unique: BTreeSet<_> = got.iter().cloned().collect();
        t.ensure(unique.len() == got.len(), || format!("duplicate rows in table for n = {n}"))?;
        let mut expected = BTreeSet::new();
        for lam in enumerate_partitions(n).map_err(|e| e.to_string())? {
            for chi in all_characters(n).map_err(|e| e.to_string())? {
                if lam.gcd_of_parts() % chi.order() == 0 {
                    expected.insert((lam.clone(), chi.exponent()));
                }
            }
        }
        t.ensure(unique == expected, || format!("table for n = {n} does not cover every pair exactly once"))?;
        for s in table.rows() {
            let lam_bar = s.orbit().contract(s.character().order()).map_err(|e| e.to_string())?;
            t.ensure(*s.multiplicity() == lam_bar.irrep_dimension(), || {
                format!("multiplicity of {} for n = {n}", s)
            })?;
        }
        let principal = Partition::row(n).map_err(|e| e.to_string())?;
        let on_principal: Vec<_> = table.rows_for_orbit(&principal).collect();
        let total: BigUint = on_principal.iter().map(|s| s.multiplicity().clone()).sum();
        t.ensure(total == BigUint::from(n) && on_principal.len() == n, || {
            format!("principal orbit total multiplicity {total} for n = {n}")
        })?;
    }
    Ok(())
}

fn lusztig_totals(n_max: usize, t: &mut Tally) -> Result<(), String> {
    for n in 1..=n_max.min(8) {
        let springer: BigUint = lusztig_sheaf(CentralCharacter::trivial(n).map_err(|e| e.to_string())?)
            .iter()
            .map(|s| s.multiplicity().pow(2))
            .sum();
        t.ensure(springer == oracle::factorial(n), || format!("Springer column squares for n = {n}"))?;
    }
    for n in 1..=n_max.min(16) {
        for chi in all_characters(n).map_err(|e| e.to_string())? {
            let m = n / chi.order();
            if m > 8 {
                continue;
            }
            let total: BigUint = lusztig_sheaf(chi).iter().map(|s| s.multiplicity().clone()).sum();
            t.ensure(total == BigUint::from(oracle::involutions_by_search(m)), || {
                format!("total multiplicity of the sheaf for {chi}, n = {n}, is {total}")
            })?;
        }
    }
    Ok(())
}

fn golden_sl4(_: usize, t: &mut Tally) -> Result<(), String> {
    let expected: BTreeSet<_> = golden::lusztig_sl4().into_iter().collect();
    let actual: BTreeSet<_> = all_characters(4)
        .map_err(|e| e.to_string())?
        .into_iter()
        .flat_map(lusztig_sheaf)
        .map(|s| (s.character().exponent(), s.orbit().clone(), s.multiplicity_partition().clone()))
        .collect();
    t.ensure(expected == actual, || "SL_4 Lusztig sheaves differ from stored data".to_string())
}

fn golden_sl6_table(_: usize, t: &mut Tally) -> Result<(), String> {
    let table = full_table(6).map_err(|e| e.to_string())?;
    let verdict = golden::compare_with_sl6_table(&table);
    t.ensure(verdict.is_ok(), || verdict.unwrap_err())
}

fn golden_steinberg(_: usize, t: &mut Tally) -> Result<(), String> {
    let chi = CentralCharacter::new(6, 3).map_err(|e| e.to_string())?;
    let tableaux = golden::steinberg_sl6_order2();
    for s in lusztig_sheaf(chi) {
        let count = tableaux.iter().filter(|tab| tab.shape() == s.orbit()).count();
        t.ensure(BigUint::from(count) == *s.multiplicity(), || {
            format!("{count} stored tableaux of shape {} vs multiplicity {}", s.orbit(), s.multiplicity())
        })?;
    }
    Ok(())
}

fn golden_weights(_: usize, t: &mut Tally) -> Result<(), String> {
    let g = golden::weights_sl12();
    for (k, nums) in &g.lambdas {
        let lam = fundamental_weight(12, *k).map_err(|e| e.to_string())?;
        t.ensure(lam.numerators() == nums.as_slice(), || format!("λ_{k} for n = 12"))?;
    }
    for (k, den, nums) in &g.mus {
        let mu = reduced_weight(12, *k).map_err(|e| e.to_string())?;
        let scaled: Vec<usize> = mu.numerators().iter().map(|a| a * den / 12).collect();
        t.ensure(mu.common_denominator() == *den && &scaled == nums, || format!("μ_{k} for n = 12"))?;
    }
    for (k, degree, exps) in &g.relations {
        let rel = toric_relation(12, *k).map_err(|e| e.to_string())?;
        t.ensure(rel.degree() == *degree && rel.exponents() == exps.as_slice(), || {
            format!("relation for v_{k}, n = 12")
        })?;
    }
    for (c, ks) in &g.absent {
        let ours = occurrence_exceptions(12, *c).map_err(|e| e.to_string())?;
        t.ensure(&ours == ks, || format!("occurrence of α_{c}, n = 12"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_reports_counterexample() {
        let mut t = Tally { checks: 0 };
        let r = t.ensure(true, || unreachable!()).and_then(|_| t.ensure(false, || "boom".into()));
        assert_eq!(r, Err("boom".to_string()));
        assert_eq!(t.checks, 2);
    }

    #[test]
    fn degenerate_rank() {
        let results = run_suites(1);
        assert!(results.iter().all(|r| !r.failed()));
        let skipped: Vec<_> = results
            .iter()
            .filter(|r| matches!(r.status, SuiteStatus::Skip { .. }))
            .map(|r| r.name)
            .collect();
        assert!(skipped.contains(&"golden-table-sl6"));
        assert!(skipped.contains(&"occurrence"));
    }
}
