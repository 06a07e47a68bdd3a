//! Checks of the almost-maximal-width machinery: the virtual character `χ`
//! built from `γ = μ∩ν` and its removable nodes, and the statements about
//! which `[m-1,θ]` it produces.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::families::blocks;
use super::special::pair_data;
use super::{check_bound, check_n_max, pair_label, Checker, Counterexample, VerificationReport};
use crate::error::{Error, Result};
use crate::extreme::{almost_width_chi, hypothesis_star, is_linear, is_near_trivial};
use crate::kronecker::{
    dvir_coefficient, induce_one_step, kron_characters, kron_coefficient, kron_decompose,
    skew_character, DvirEngine, Method,
};
use crate::par::{map_ordered, Execution};
use crate::partition::{partitions_of, Partition, SkewShape};
use crate::vchar::{Decomposition, VirtualCharacter};

/// Largest `n` for the rectangle-against-`[d-1,1]` check.
pub const MAX_RECTANGLE_N: usize = 12;

fn skew(outer: &Partition, inner: &Partition) -> Result<Decomposition> {
    skew_character(outer, inner).ok_or_else(|| Error::NotContained {
        outer: outer.clone(),
        inner: inner.clone(),
    })
}

/// `Σ_A [μ/γ_A]·[ν/γ_A]` over removable nodes `A` of `γ = μ∩ν`.
fn removal_sum(mu: &Partition, nu: &Partition) -> Result<VirtualCharacter> {
    let gamma = mu.intersect(nu);
    let d = mu.size() - gamma.size();
    let mut sum = VirtualCharacter::zero(d + 1);
    for a in gamma.removable_nodes() {
        let smaller = gamma.remove(a)?;
        sum = &sum + &kron_characters(&skew(mu, &smaller)?, &skew(nu, &smaller)?)?;
    }
    Ok(sum)
}

/// Ordered pairs `(μ,ν)` of partitions of `n`.
fn ordered_pairs(n: usize) -> Vec<(Partition, Partition)> {
    let labels = partitions_of(n);
    let mut out = Vec::with_capacity(labels.len() * labels.len());
    for a in &labels {
        for b in &labels {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Every `θ` in `χ` gives `d(μ,ν;(m-1,θ)) = ⟨χ,θ⟩ > 0`.
fn check_lifts(
    ck: &mut Checker,
    mu: &Partition,
    nu: &Partition,
    chi: &VirtualCharacter,
    product: &Decomposition,
    m: usize,
) {
    for (theta, c) in chi.iter() {
        let lambda = theta.with_first_row(m - 1);
        let actual = lambda.as_ref().map_or(0, |l| product.get(l));
        ck.check(c > 0 && actual == c, || {
            Counterexample::new(pair_label(mu, nu), format!("θ = {theta} should give [m-1,θ]"))
                .with_values(c, actual)
        });
    }
}

/// Statements about `χ` for non-special pairs, over all ordered pairs with
/// `n ≤ n_max`. The rectangle case is capped at [`MAX_RECTANGLE_N`].
pub fn verify_section_lemmas(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let parts = vec![
        verify_width_bound(n_max)?,
        verify_row_lifts(n_max)?,
        verify_row_classification(n_max)?,
        verify_rectangle_case(n_max.min(MAX_RECTANGLE_N))?,
    ];
    Ok(VerificationReport::merge("lemmas", n_max, parts))
}

/// Under the standing hypothesis, when `ν/γ` is a row, or when both skew
/// characters are irreducible with a two-component product, every
/// constituent `θ` of `Σ_A [μ/γ_A]·[ν/γ_A]` has `θ_1 ≤ m-1`.
pub fn verify_width_bound(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut ck = Checker::new("width-bound", n_max);
    for n in 1..=n_max {
        let results = map_ordered(&ordered_pairs(n), Execution::auto(), |(mu, nu)| {
            if !hypothesis_star(mu, nu)?.satisfied {
                return Ok(None);
            }
            let gamma = mu.intersect(nu);
            let row = SkewShape::new(nu.clone(), gamma.clone())?.is_row();
            let a = skew(mu, &gamma)?;
            let b = skew(nu, &gamma)?;
            let two = a.total_multiplicity() == 1
                && b.total_multiplicity() == 1
                && kron_characters(&a, &b)?.component_count() == 2;
            if !(row || two) {
                return Ok(None);
            }
            let widest = removal_sum(mu, nu)?
                .constituents()
                .iter()
                .map(Partition::width)
                .max()
                .unwrap_or(0);
            Ok(Some((mu.clone(), nu.clone(), gamma.size(), widest)))
        })?;
        for (mu, nu, m, widest) in results.into_iter().flatten() {
            ck.check(widest < m, || {
                Counterexample::new(pair_label(&mu, &nu), "constituent of width m in the removal sum")
                    .with_values(format!("<= {}", m - 1), widest)
            });
        }
    }
    Ok(ck.finish())
}

/// For `μ ≠ ν`, neither near-trivial, `ν/γ` a row and `[μ/γ] = [α]`:
/// `[m,α]` is a constituent, and every `θ` with positive coefficient in
/// `Σ_A [μ/γ_A]·[ν/γ_A] − [α]↑` gives a constituent `[m-1,θ]`.
pub fn verify_row_lifts(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut ck = Checker::new("row-lifts", n_max);
    for n in 1..=n_max {
        let results = map_ordered(&ordered_pairs(n), Execution::auto(), |(mu, nu)| {
            if mu == nu || is_near_trivial(mu) || is_near_trivial(nu) {
                return Ok(None);
            }
            let gamma = mu.intersect(nu);
            if !SkewShape::new(nu.clone(), gamma.clone())?.is_row() {
                return Ok(None);
            }
            let a = skew(mu, &gamma)?;
            if a.total_multiplicity() != 1 {
                return Ok(None);
            }
            let chi = &removal_sum(mu, nu)? - &induce_one_step(&a);
            let product = kron_decompose(mu, nu, Method::Brute)?;
            Ok(Some((mu.clone(), nu.clone(), gamma.size(), a, chi, product)))
        })?;
        for (mu, nu, m, a, chi, product) in results.into_iter().flatten() {
            let alpha = a.constituents().remove(0);
            let top = alpha.with_first_row(m);
            ck.check(top.as_ref().is_some_and(|l| product.get(l) > 0), || {
                Counterexample::new(pair_label(&mu, &nu), "missing [m,α]")
                    .with_values(format!("[{m},{alpha}]"), &product)
            });
            for (theta, c) in chi.iter().filter(|&(_, c)| c > 0) {
                let lambda = theta.with_first_row(m - 1);
                ck.check(lambda.as_ref().is_some_and(|l| product.get(l) > 0), || {
                    Counterexample::new(pair_label(&mu, &nu), format!("θ = {theta} (coefficient {c})"))
                        .with_values("[m-1,θ] present", &product)
                });
            }
        }
    }
    Ok(ck.finish())
}

/// Component count, `μ`, `ν` and the stated `χ` of one listed shape.
type Listed = (u8, Option<Partition>, Option<Partition>, Option<VirtualCharacter>);

/// The exceptional shapes with two or three components in `χ`, with the
/// stated `χ`, in the order (two-component families) then (three).
fn listed_chi(mu: &Partition, nu: &Partition, d: usize) -> Option<(u8, VirtualCharacter)> {
    let vc = |s: &str| s.parse::<VirtualCharacter>().ok();
    let d_ = d as i64;
    let candidates: Vec<Listed> = {
        let mut c = Vec::new();
        let a_len = mu.length() as i64;
        let a_w = mu.width() as i64;
        if d == 2 {
            let a = a_len - 1;
            if a >= 1 {
                c.push((2, blocks(&[(4, a + 1)]), blocks(&[(4, a), (2, 2)]), vc("2[2,1] + [1^3]")));
            }
            let a = a_len - 2;
            if a >= 1 {
                c.push((2, blocks(&[(2, a + 2)]), blocks(&[(4, 1), (2, a)]), vc("[2,1] + [1^3]")));
            }
            let a = a_w - 3;
            if a >= 1 {
                c.push((2, blocks(&[(a + 3, 2)]), blocks(&[(a + 2, 2), (2, 1)]), vc("[2,1] + [3]")));
            }
        }
        if d.is_multiple_of(2) && d > 2 {
            let k = d_ / 2;
            let a = nu.width() as i64;
            if a > d_ {
                c.push((
                    3,
                    blocks(&[(a + k, 2)]),
                    blocks(&[(a, 2), (2 * k, 1)]),
                    super::families::character(&[
                        (blocks(&[(k + 2, 1), (k - 1, 1)]), 1),
                        (blocks(&[(k + 1, 1), (k, 1)]), 1),
                        (blocks(&[(k + 1, 1), (k - 1, 1), (1, 1)]), 1),
                    ]),
                ));
            }
            let a = a_len - k;
            if a > 1 {
                c.push((
                    3,
                    blocks(&[(2, a + k)]),
                    blocks(&[(2 * k + 2, 1), (2, a - 1)]),
                    super::families::character(&[
                        (blocks(&[(2, k), (1, 1)]), 1),
                        (blocks(&[(3, 1), (2, k - 2), (1, 2)]), 1),
                        (blocks(&[(2, k - 1), (1, 3)]), 1),
                    ]),
                ));
            }
            c.push((
                3,
                blocks(&[(k + 1, 3)]),
                blocks(&[(3 * k + 1, 1), (2, 1)]),
                super::families::character(&[
                    (blocks(&[(k + 1, 1), (k, 1)]), 1),
                    (blocks(&[(k, 2), (1, 1)]), 1),
                    (blocks(&[(k + 1, 1), (k - 1, 1), (1, 1)]), 1),
                ]),
            ));
            c.push((
                3,
                blocks(&[(2, k + 2)]),
                blocks(&[(2 * k + 2, 1), (1, 2)]),
                super::families::character(&[
                    (blocks(&[(3, 1), (2, k - 1)]), 1),
                    (blocks(&[(2, k), (1, 1)]), 1),
                    (blocks(&[(2, k - 1), (1, 3)]), 1),
                ]),
            ));
        }
        if d > 2 {
            let a = a_len - 1;
            if a >= 1 {
                c.push((
                    3,
                    blocks(&[(2 * d_, a + 1)]),
                    blocks(&[(2 * d_, a), (d_, 2)]),
                    super::families::character(&[
                        (blocks(&[(d_, 1), (1, 1)]), 2),
                        (blocks(&[(d_ - 1, 1), (1, 2)]), 1),
                        (blocks(&[(d_ - 1, 1), (2, 1)]), 1),
                    ]),
                ));
            }
            let a = a_w - d_ - 1;
            if a >= 1 {
                c.push((
                    3,
                    blocks(&[(d_ + a + 1, d_)]),
                    blocks(&[(d_ + a, d_), (d_, 1)]),
                    super::families::character(&[
                        (blocks(&[(2, 1), (1, d_ - 1)]), 1),
                        (blocks(&[(2, 2), (1, d_ - 3)]), 1),
                        (blocks(&[(3, 1), (1, d_ - 2)]), 1),
                    ]),
                ));
            }
            let a = a_len - 2;
            if a >= 1 {
                c.push((
                    3,
                    blocks(&[(d_, a + 2)]),
                    blocks(&[(2 * d_, 1), (d_, a)]),
                    super::families::character(&[
                        (blocks(&[(d_, 1), (1, 1)]), 1),
                        (blocks(&[(d_ - 1, 1), (2, 1)]), 1),
                        (blocks(&[(d_ - 1, 1), (1, 2)]), 1),
                    ]),
                ));
            }
        }
        c
    };
    candidates.into_iter().find_map(|(c, m, n, chi)| {
        (m.as_ref() == Some(mu) && n.as_ref() == Some(nu)).then_some(())?;
        Some((c, chi?))
    })
}

/// Under the standing hypothesis, with `[μ/γ]` irreducible, `ν/γ` a row and
/// some removable `γ`-node disconnected from `ν/γ`: `χ` is a character with
/// at least four components, or one of the listed shapes with two or three
/// components and the stated `χ`; every constituent `θ` gives `[m-1,θ]`.
pub fn verify_row_classification(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut ck = Checker::new("row-classification", n_max);
    let (mut pairs, mut listed_hits) = (0usize, 0usize);
    for n in 1..=n_max {
        let results = map_ordered(&ordered_pairs(n), Execution::auto(), |(mu, nu)| {
            if !hypothesis_star(mu, nu)?.satisfied {
                return Ok(None);
            }
            let gamma = mu.intersect(nu);
            let row = SkewShape::new(nu.clone(), gamma.clone())?;
            if !row.is_row() || skew(mu, &gamma)?.total_multiplicity() != 1 {
                return Ok(None);
            }
            if gamma.removable_nodes().iter().all(|&a| row.is_connected_to(a)) {
                return Ok(None);
            }
            let chi = almost_width_chi(mu, nu)?;
            let product = kron_decompose(mu, nu, Method::Brute)?;
            Ok(Some((mu.clone(), nu.clone(), gamma.size(), chi, product)))
        })?;
        for (mu, nu, m, chi, product) in results.into_iter().flatten() {
            let d = n - m;
            let label = pair_label(&mu, &nu);
            pairs += 1;
            ck.check(chi.is_character(), || {
                Counterexample::new(label.clone(), "χ is not a character").with_values("character", &chi)
            });
            let c = chi.component_count();
            let listed = listed_chi(&mu, &nu, d);
            if let Some((lc, expected)) = &listed {
                listed_hits += 1;
                ck.check(c == *lc as usize && chi == *expected, || {
                    Counterexample::new(label.clone(), "listed shape").with_values(expected, &chi)
                });
            }
            let ok = match c {
                0 | 1 => false,
                2 => d == 1 || (d == 2 && listed.is_some()),
                3 => (d == 2 && listed.is_none()) || (d > 2 && listed.is_some()),
                _ => true,
            };
            ck.check(ok, || {
                Counterexample::new(label.clone(), format!("χ has {c} components with d = {d}"))
                    .with_values("on the list", &chi)
            });
            check_lifts(&mut ck, &mu, &nu, &chi, &product, m);
        }
    }
    ck.note(format!("{pairs} pairs satisfy the hypotheses, {listed_hits} of them on the exceptional list"));
    Ok(ck.finish())
}

/// Under the standing hypothesis, with `[μ/γ] = [a^b]`, `a,b > 1`, and
/// `[ν/γ] = [d-1,1]`: `χ` is a character with at least five components and
/// every constituent `θ` gives `[m-1,θ]`.
pub fn verify_rectangle_case(n_max: usize) -> Result<VerificationReport> {
    check_bound("n_max", n_max, MAX_RECTANGLE_N)?;
    let mut ck = Checker::new("rectangle-case", n_max);
    let mut found = 0usize;
    for n in 1..=n_max {
        let results = map_ordered(&ordered_pairs(n), Execution::auto(), |(mu, nu)| {
            if !hypothesis_star(mu, nu)?.satisfied {
                return Ok(None);
            }
            let gamma = mu.intersect(nu);
            let d = n - gamma.size();
            if d < 2 {
                return Ok(None);
            }
            let a = skew(mu, &gamma)?;
            let b = skew(nu, &gamma)?;
            let rect = a.total_multiplicity() == 1 && a.constituents()[0].is_nontrivial_rectangle();
            if !rect || b != VirtualCharacter::irreducible(Partition::of(&[d - 1, 1])) {
                return Ok(None);
            }
            let chi = almost_width_chi(mu, nu)?;
            let product = kron_decompose(mu, nu, Method::Brute)?;
            Ok(Some((mu.clone(), nu.clone(), gamma.size(), chi, product)))
        })?;
        for (mu, nu, m, chi, product) in results.into_iter().flatten() {
            found += 1;
            let label = pair_label(&mu, &nu);
            ck.check(chi.is_character() && chi.component_count() >= 5, || {
                Counterexample::new(label.clone(), "χ should be a character with >= 5 components")
                    .with_values(">= 5 components", &chi)
            });
            check_lifts(&mut ck, &mu, &nu, &chi, &product, m);
        }
    }
    ck.note(format!("{found} pairs satisfy the hypotheses"));
    Ok(ck.finish())
}

/// Every constituent `λ` of a product of two nonlinear characters has
/// `h_11(λ) < |μ∩ν| + |μ∩ν'| - 1`.
pub fn verify_hook_bound(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut ck = Checker::new("hook-bound", n_max);
    for n in 1..=n_max {
        for d in pair_data(n, |a, b| !is_linear(a) && !is_linear(b))? {
            let bound = d.report.m + d.report.m_tilde;
            let worst = d.product.constituents().iter().map(Partition::first_hook).max().unwrap_or(0);
            ck.check(worst + 1 < bound, || {
                Counterexample::new(pair_label(&d.mu, &d.nu), "largest first hook")
                    .with_values(format!("< {}", bound - 1), worst)
            });
        }
    }
    Ok(ck.finish())
}

/// `d(μ,ν;(m-1,λ̂)) = ⟨χ,[λ̂]⟩` for every pair and every `λ̂ ⊢ d+1` with
/// `λ̂_1 ≤ m-1`.
pub fn verify_almost_width(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut ck = Checker::new("almost-width", n_max);
    for n in 1..=n_max {
        for d in pair_data(n, |_, _| true)? {
            let m = d.report.m;
            if m < 2 {
                continue;
            }
            let chi = almost_width_chi(&d.mu, &d.nu)?;
            for hat in partitions_of(n - m + 1) {
                let Some(lambda) = hat.with_first_row(m - 1) else {
                    continue;
                };
                let (expected, actual) = (chi.get(&hat), d.product.get(&lambda));
                ck.check(expected == actual, || {
                    Counterexample::new(pair_label(&d.mu, &d.nu), format!("coefficient of {lambda}"))
                        .with_values(expected, actual)
                });
            }
        }
    }
    Ok(ck.finish())
}

/// The first-row recursion agrees with the character table on every
/// coefficient `d(μ,ν;λ)` with `n ≤ n_max`.
pub fn verify_dvir_oracle(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut ck = Checker::new("dvir-oracle", n_max);
    for n in 1..=n_max {
        let labels = partitions_of(n);
        let mut pairs = Vec::new();
        for i in 0..labels.len() {
            for j in i..labels.len() {
                pairs.push((labels[i].clone(), labels[j].clone()));
            }
        }
        let results = map_ordered(&pairs, Execution::auto(), |(mu, nu)| {
            let brute = kron_decompose(mu, nu, Method::Brute)?;
            let mut engine = DvirEngine::new();
            let mut diffs = Vec::new();
            for lambda in &labels {
                let (a, b) = (brute.get(lambda), engine.coefficient(mu, nu, lambda)?);
                if a != b {
                    diffs.push((lambda.clone(), a, b));
                }
            }
            Ok(diffs)
        })?;
        for ((mu, nu), diffs) in pairs.iter().zip(results) {
            ck.checked += labels.len() as u64 - diffs.len() as u64;
            for (lambda, a, b) in diffs {
                ck.check(false, || {
                    Counterexample::new(pair_label(mu, nu), format!("d(μ,ν;{lambda})")).with_values(a, b)
                });
            }
        }
    }
    Ok(ck.finish())
}

/// `samples` triples drawn uniformly (with replacement) from the partitions
/// of `n`, compared between the recursion and the character table.
pub fn verify_dvir_random(n: usize, samples: usize, seed: u64) -> Result<VerificationReport> {
    check_n_max(n)?;
    let mut ck = Checker::new("dvir-random", n);
    let labels = partitions_of(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[Partition; 3]> = (0..samples)
        .map(|_| {
            [(); 3].map(|_| labels.choose(&mut rng).expect("nonempty").clone())
        })
        .collect();
    let results = map_ordered(&triples, Execution::auto(), |[mu, nu, lambda]| {
        Ok((kron_coefficient(mu, nu, lambda)?, dvir_coefficient(mu, nu, lambda)?))
    })?;
    for ([mu, nu, lambda], (a, b)) in triples.iter().zip(results) {
        ck.check(a == b, || {
            Counterexample::new(pair_label(mu, nu), format!("d(μ,ν;{lambda})")).with_values(a, b)
        });
    }
    ck.note(format!("seed {seed}, {samples} samples"));
    Ok(ck.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds() {
        for r in [
            verify_section_lemmas(7).unwrap(),
            verify_hook_bound(6).unwrap(),
            verify_almost_width(6).unwrap(),
            verify_dvir_oracle(5).unwrap(),
            verify_dvir_random(6, 200, 1).unwrap(),
        ] {
            assert!(r.pass, "{}: {:?}", r.theorem, r.counterexamples);
        }
    }
}
