use std::collections::BTreeSet;

use serde_json::{json, Value};
use springer_core::characters::{characters_of_order, divisors};
use springer_core::correspondence::{cuspidal_datum, full_table, lusztig_sheaf};
use springer_core::strata::{admitting_characters, forced_v_zero_set, in_stratum, stabilizer};
use springer_core::weights::{fundamental_weight, occurrence_exceptions, reduced_weight, toric_relation};
use springer_core::{CentralCharacter, CuspidalDatum, SheafSummand, VanishingPattern};

use crate::document::{dashed, json_document, json_uint, Format, OutputDocument, TextGrid};
use crate::CliError;

/// Default upper bound on `n` for `table` and `lusztig`.
pub const DEFAULT_MAX_N: usize = 30;

/// How a character is named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterSpec {
    /// `χ_k` by exponent.
    Exponent(usize),
    /// The `index`-th (1-based) character of order `order`, in exponent order.
    ByOrder { order: usize, index: usize },
}

impl CharacterSpec {
    pub fn resolve(self, n: usize) -> Result<CentralCharacter, CliError> {
        match self {
            CharacterSpec::Exponent(k) => CentralCharacter::new(n, k).map_err(|_| {
                CliError::Usage(format!("character exponent {k} must lie in 0..{n}"))
            }),
            CharacterSpec::ByOrder { order, index } => {
                let chars = characters_of_order(n, order)?;
                if chars.is_empty() {
                    return Err(CliError::Usage(format!("{order} does not divide {n}")));
                }
                index
                    .checked_sub(1)
                    .and_then(|i| chars.get(i).copied())
                    .ok_or_else(|| {
                        CliError::Usage(format!(
                            "index {index} must lie in 1..={} for order {order}",
                            chars.len()
                        ))
                    })
            }
        }
    }
}

fn check_n(n: usize, lo: usize, max_n: usize) -> Result<(), CliError> {
    if n < lo || n > max_n {
        return Err(CliError::Usage(format!("n = {n} must lie in {lo}..={max_n}")));
    }
    Ok(())
}

pub const CSV_HEADER: &str = "n,orbit,chi_exponent,chi_order,mult_partition,multiplicity";

fn summand_csv(n: usize, s: &SheafSummand) -> String {
    format!(
        "{n},{},{},{},{},{}",
        s.orbit().dashed(),
        s.character().exponent(),
        s.character().order(),
        s.multiplicity_partition().dashed(),
        s.multiplicity()
    )
}

fn summand_json(s: &SheafSummand) -> Value {
    let chi = s.character();
    json!({
        "orbit": s.orbit().parts(),
        "orbit_label": s.orbit().to_string(),
        "chi_exponent": chi.exponent(),
        "chi_order": chi.order(),
        "chi_label": chi.label(),
        "levi": cuspidal_datum(chi).levi_label(),
        "mult_partition": s.multiplicity_partition().parts(),
        "mult_partition_label": s.multiplicity_partition().to_string(),
        "multiplicity": json_uint(s.multiplicity()),
    })
}

fn summands_csv(n: usize, rows: &[&SheafSummand]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for s in rows {
        out.push_str(&summand_csv(n, s));
        out.push('\n');
    }
    out
}

fn levi_column_header(datum: &CuspidalDatum) -> (String, String) {
    let d = datum.block_size();
    let n = datum.n();
    let levi = if d == 1 {
        "L_d=T".to_string()
    } else if d == n {
        "L_d=G (Cuspidal)".to_string()
    } else {
        format!("L_d≅{}", datum.levi_label())
    };
    let weyl = match datum.relative_weyl_degree() {
        1 => "S_{n/d} trivial".to_string(),
        m => format!("S_{{n/d}} = S_{m}"),
    };
    (levi, weyl)
}

fn local_system_label(chi: &CentralCharacter) -> String {
    if chi.is_trivial() {
        "Triv".to_string()
    } else {
        format!("Order {} ({})", chi.order(), chi.label())
    }
}

fn dim_cell(s: &SheafSummand) -> String {
    let d = s.character().order();
    if d == 1 || d == s.orbit().size() {
        format!("dim V={}", s.multiplicity())
    } else {
        format!("dim V={}; {}", s.multiplicity(), s.multiplicity_partition())
    }
}

/// The full correspondence table for `SL_n`.
pub fn cmd_table(n: usize, format: Format, max_n: usize) -> Result<OutputDocument, CliError> {
    check_n(n, 1, max_n)?;
    let table = full_table(n)?;
    let payload = match format {
        Format::Json => json_document(
            n,
            "table",
            None,
            table.rows().iter().map(summand_json).collect(),
        ),
        Format::Csv => summands_csv(n, &table.rows().iter().collect::<Vec<_>>()),
        Format::Text => {
            let levels = divisors(n);
            let mut grid = TextGrid::new();
            let mut top = vec![String::new(), "Local".to_string()];
            let mut second = vec!["Orbit".to_string(), "System".to_string()];
            for &d in &levels {
                let chi = characters_of_order(n, d)?[0];
                let (levi, weyl) = levi_column_header(&cuspidal_datum(chi));
                top.push(levi);
                second.push(weyl);
            }
            grid.row(top);
            grid.row(second);
            let mut previous = None;
            for s in table.figure_order() {
                let first_on_orbit = previous != Some(s.orbit());
                if first_on_orbit {
                    grid.rule();
                }
                previous = Some(s.orbit());
                let mut cells = vec![
                    if first_on_orbit { s.orbit().to_string() } else { String::new() },
                    local_system_label(&s.character()),
                ];
                for &d in &levels {
                    cells.push(if d == s.character().order() { dim_cell(s) } else { String::new() });
                }
                grid.row(cells);
            }
            grid.rule();
            format!("Generalized Springer correspondence for SL_{n}\n\n{}", grid.render())
        }
    };
    Ok(OutputDocument { format, payload })
}

/// Decomposition of one Lusztig sheaf.
pub fn cmd_lusztig(
    n: usize,
    chi: CharacterSpec,
    format: Format,
    max_n: usize,
) -> Result<OutputDocument, CliError> {
    check_n(n, 1, max_n)?;
    let chi = chi.resolve(n)?;
    let datum = cuspidal_datum(chi);
    let summands = lusztig_sheaf(chi);
    let payload = match format {
        Format::Json => {
            let header = json!({
                "chi_exponent": chi.exponent(),
                "chi_order": chi.order(),
                "chi_label": chi.label(),
                "levi": datum.levi_label(),
                "block_size": datum.block_size(),
                "block_count": datum.block_count(),
                "relative_weyl": datum.relative_weyl_label(),
            });
            json_document(n, "lusztig", Some(header), summands.iter().map(summand_json).collect())
        }
        Format::Csv => summands_csv(n, &summands.iter().collect::<Vec<_>>()),
        Format::Text => {
            let mut grid = TextGrid::new();
            grid.row(vec!["orbit".into(), "V".into(), "dim V".into()]);
            grid.rule();
            for s in &summands {
                grid.row(vec![
                    s.orbit().to_string(),
                    s.multiplicity_partition().to_string(),
                    s.multiplicity().to_string(),
                ]);
            }
            format!(
                "Lusztig sheaf for {} on SL_{n}\norder d = {}; L = {}; W(L) = {}\n\n{}",
                chi,
                datum.block_size(),
                datum.levi_label(),
                datum.relative_weyl_label(),
                grid.render()
            )
        }
    };
    Ok(OutputDocument { format, payload })
}

/// Fundamental and reduced weights, toric relations and occurrence data.
pub fn cmd_weights(n: usize, format: Format) -> Result<OutputDocument, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("weights need n >= 2, got {n}")));
    }
    let mut lambdas = Vec::new();
    let mut mus = Vec::new();
    let mut relations = Vec::new();
    for k in 1..n {
        lambdas.push(fundamental_weight(n, k)?);
        mus.push(reduced_weight(n, k)?);
        relations.push(toric_relation(n, k)?);
    }
    let absent: Vec<(usize, Vec<usize>)> = (1..n)
        .map(|c| occurrence_exceptions(n, c).map(|ks| (c, ks)))
        .collect::<Result<_, _>>()?;

    let payload = match format {
        Format::Json => {
            let rows = (0..n - 1)
                .map(|i| {
                    let (lam, mu, rel) = (&lambdas[i], &mus[i], &relations[i]);
                    let den = mu.common_denominator();
                    let reduced: Vec<usize> = mu.numerators().iter().map(|a| a * den / n).collect();
                    json!({
                        "k": i + 1,
                        "lambda_numerators": lam.numerators(),
                        "lambda_denominator": n,
                        "lambda": lam.to_string(),
                        "mu_numerators": reduced,
                        "mu_denominator": den,
                        "mu": mu.to_string(),
                        "relation_degree": rel.degree(),
                        "relation_exponents": rel.exponents(),
                        "relation": rel.to_string(),
                    })
                })
                .collect();
            let occurrence: Vec<Value> = absent
                .iter()
                .map(|(c, ks)| json!({"root": c, "absent_in": ks}))
                .collect();
            json_document(n, "weights", Some(json!({ "occurrence": occurrence })), rows)
        }
        Format::Csv => {
            let mut out = String::from(
                "n,k,lambda_denominator,lambda_numerators,mu_denominator,mu_numerators,relation_degree,relation_exponents\n",
            );
            for i in 0..n - 1 {
                let den = mus[i].common_denominator();
                let reduced: Vec<usize> = mus[i].numerators().iter().map(|a| a * den / n).collect();
                out.push_str(&format!(
                    "{n},{},{n},{},{den},{},{},{}\n",
                    i + 1,
                    dashed(lambdas[i].numerators()),
                    dashed(&reduced),
                    relations[i].degree(),
                    dashed(relations[i].exponents()),
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!("Weights for SL_{n}\n\nFundamental weights\n");
            for lam in &lambdas {
                out.push_str(&format!("  λ_{} = {lam}\n", lam.index()));
            }
            out.push_str("\nReduced weights\n");
            for mu in &mus {
                out.push_str(&format!("  μ_{} = {mu}\n", mu.index()));
            }
            out.push_str("\nToric relations\n");
            for rel in &relations {
                out.push_str(&format!("  {rel}\n"));
            }
            out.push_str("\nOccurrence\n");
            for (c, ks) in &absent {
                if ks.is_empty() {
                    out.push_str(&format!("  α_{c} occurs in all μ_k\n"));
                } else {
                    let list: Vec<String> = ks.iter().map(|k| format!("μ_{k}")).collect();
                    out.push_str(&format!("  α_{c} occurs in all μ_k except {}\n", list.join(", ")));
                }
            }
            out
        }
    };
    Ok(OutputDocument { format, payload })
}

/// Parses a comma list such as `1,4`; the empty string is the empty set.
pub fn parse_zero_list(n: usize, list: &str) -> Result<VanishingPattern, CliError> {
    let zeros = list
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("malformed zero list {list:?}")))
        })
        .collect::<Result<BTreeSet<usize>, _>>()?;
    VanishingPattern::new(n, zeros)
        .map_err(|e| CliError::Usage(format!("malformed zero list {list:?}: {e}")))
}

/// Stabilizer and strata data for one vanishing pattern.
pub fn cmd_stratum(
    n: usize,
    zeros: &str,
    chi: Option<CharacterSpec>,
    format: Format,
) -> Result<OutputDocument, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be positive".into()));
    }
    let vp = parse_zero_list(n, zeros)?;
    let chi = chi.map(|c| c.resolve(n)).transpose()?;
    let stab = stabilizer(&vp);
    let forced = forced_v_zero_set(&vp);
    let admitted = admitting_characters(&vp);
    let verdict = chi.map(|c| in_stratum(&vp, &c)).transpose()?;

    let payload = match format {
        Format::Json => {
            let header = json!({
                "zeros": vp.zeros(),
                "regular": vp.is_regular(),
                "stabilizer_index": vp.stabilizer_index(),
                "stabilizer": {
                    "generator_exponent": stab.generator_exponent(),
                    "size": stab.size(),
                    "elements": stab.elements(),
                },
                "forced_v_zeros": forced,
                "chi_exponent": chi.map(|c| c.exponent()),
                "in_stratum": verdict,
            });
            let rows = admitted
                .iter()
                .map(|c| json!({"chi_exponent": c.exponent(), "chi_order": c.order(), "chi_label": c.label()}))
                .collect();
            json_document(n, "stratum", Some(header), rows)
        }
        Format::Csv => {
            let mut out = String::from("n,zeros,chi_exponent,chi_order,admitted\n");
            let zeros = dashed(&vp.zeros().iter().collect::<Vec<_>>());
            for c in springer_core::characters::all_characters(n)? {
                out.push_str(&format!(
                    "{n},{zeros},{},{},{}\n",
                    c.exponent(),
                    c.order(),
                    admitted.contains(&c)
                ));
            }
            out
        }
        Format::Text => {
            let forced: Vec<String> = forced.iter().map(usize::to_string).collect();
            let labels: Vec<String> = admitted.iter().map(|c| c.label()).collect();
            let mut out = format!(
                "Vanishing pattern {vp} for SL_{n}\n\
                 regular locus: {}\n\
                 stabilizer index r = {}\n\
                 stabilizer Z^x = {stab}\n\
                 stabilizer size: {}\n\
                 forced v-zeros: {{{}}}\n\
                 admitting characters ({}): {}\n",
                vp.is_regular(),
                vp.stabilizer_index(),
                stab.size(),
                forced.join(","),
                admitted.len(),
                labels.join(", "),
            );
            if let (Some(c), Some(v)) = (chi, verdict) {
                out.push_str(&format!("{} (order {}) in stratum: {v}\n", c.label(), c.order()));
            }
            out
        }
    };
    Ok(OutputDocument { format, payload })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_specs() {
        assert_eq!(CharacterSpec::Exponent(3).resolve(6).unwrap().exponent(), 3);
        assert!(CharacterSpec::Exponent(6).resolve(6).is_err());
        let by_order = |order, index| CharacterSpec::ByOrder { order, index }.resolve(6);
        assert_eq!(by_order(3, 1).unwrap().exponent(), 2);
        assert_eq!(by_order(3, 2).unwrap().exponent(), 4);
        assert!(by_order(3, 3).is_err());
        assert!(by_order(3, 0).is_err());
        assert!(by_order(4, 1).is_err());
    }

    #[test]
    fn zero_lists() {
        assert!(parse_zero_list(6, "").unwrap().is_regular());
        assert_eq!(parse_zero_list(6, "1, 4").unwrap().zeros().len(), 2);
        assert!(parse_zero_list(6, "1;4").is_err());
        assert!(parse_zero_list(6, "7").is_err());
        assert!(parse_zero_list(6, "0").is_err());
    }

    #[test]
    fn range_checks() {
        assert!(matches!(cmd_table(0, Format::Text, 30), Err(CliError::Usage(_))));
        assert!(matches!(cmd_table(31, Format::Text, 30), Err(CliError::Usage(_))));
        assert!(cmd_table(31, Format::Csv, 31).is_ok());
        assert!(matches!(cmd_weights(1, Format::Text), Err(CliError::Usage(_))));
    }
}
