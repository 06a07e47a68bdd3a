//! Constituents of maximal and almost maximal width or length.
//!
//! For `γ = μ∩ν ⊢ m` and `γ̃ = μ∩ν' ⊢ m̃`, every constituent of `[μ]·[ν]`
//! has width at most `m` and length at most `m̃`. The width-`m` part is read
//! off `[μ/γ]·[ν/γ]`, the length-`m̃` part off
//! `[μ/(μ∩ν')]·[ν/(μ'∩ν)]`, and the width-`(m-1)` part off the virtual
//! character returned by [`almost_width_chi`].

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kronecker::{induce_one_step, kron_characters, kron_decompose, skew_character, Method};
use crate::partition::Partition;
use crate::vchar::{Decomposition, VirtualCharacter};

/// `(n)` or `(1^n)`: the linear characters.
pub fn is_linear(p: &Partition) -> bool {
    p.length() <= 1 || p.width() <= 1
}

/// `(n)`, `(n-1,1)`, `(1^n)` or `(2,1^{n-2})`.
pub fn is_near_trivial(p: &Partition) -> bool {
    let n = p.size();
    if is_linear(p) {
        return true;
    }
    n >= 2 && (*p == Partition::of(&[n - 1, 1]) || p.conjugate() == Partition::of(&[n - 1, 1]))
}

fn check_sizes(mu: &Partition, nu: &Partition) -> Result<()> {
    if mu.size() != nu.size() {
        return Err(Error::size_mismatch(mu.size(), nu.size()));
    }
    Ok(())
}

/// Which clauses of the standing hypothesis fail for a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarVerdict {
    pub satisfied: bool,
    pub failed_clauses: Vec<u8>,
}

/// Clause 1: neither partition is near-trivial. Clause 2: `μ ≠ ν` and
/// `μ ≠ ν'`. Clause 3: the two are not both 2-line partitions and not both
/// hooks.
pub fn hypothesis_star(mu: &Partition, nu: &Partition) -> Result<StarVerdict> {
    check_sizes(mu, nu)?;
    let mut failed = Vec::new();
    if is_near_trivial(mu) || is_near_trivial(nu) {
        failed.push(1);
    }
    if mu == nu || *mu == nu.conjugate() {
        failed.push(2);
    }
    if (mu.is_two_line() && nu.is_two_line()) || (mu.is_hook() && nu.is_hook()) {
        failed.push(3);
    }
    Ok(StarVerdict {
        satisfied: failed.is_empty(),
        failed_clauses: failed,
    })
}

/// `[μ/γ]·[ν/γ]` for `γ = μ∩ν`.
pub fn width_skew_product(mu: &Partition, nu: &Partition) -> Result<VirtualCharacter> {
    check_sizes(mu, nu)?;
    let gamma = mu.intersect(nu);
    kron_characters(&skew(mu, &gamma)?, &skew(nu, &gamma)?)
}

/// `[μ/(μ∩ν')]·[ν/(μ'∩ν)]`.
pub fn length_skew_product(mu: &Partition, nu: &Partition) -> Result<VirtualCharacter> {
    check_sizes(mu, nu)?;
    let a = skew(mu, &mu.intersect(&nu.conjugate()))?;
    let b = skew(nu, &mu.conjugate().intersect(nu))?;
    kron_characters(&a, &b)
}

fn skew(outer: &Partition, inner: &Partition) -> Result<Decomposition> {
    skew_character(outer, inner).ok_or_else(|| Error::NotContained {
        outer: outer.clone(),
        inner: inner.clone(),
    })
}

/// Width-maximal and length-maximal constituents with multiplicities,
/// computed from the skew products rather than from the full product.
pub fn extreme_components(mu: &Partition, nu: &Partition) -> Result<(Decomposition, Decomposition)> {
    check_sizes(mu, nu)?;
    let n = mu.size();
    let m = mu.intersect(nu).size();
    let m_tilde = mu.intersect(&nu.conjugate()).size();

    let mut width = VirtualCharacter::zero(n);
    for (alpha, c) in width_skew_product(mu, nu)?.iter() {
        let lambda = alpha.with_first_row(m).ok_or_else(|| {
            Error::Internal(format!("({m},{alpha}) is not a partition for {mu}*{nu}"))
        })?;
        width.add_term(lambda, c)?;
    }
    let mut length = VirtualCharacter::zero(n);
    for (beta, c) in length_skew_product(mu, nu)?.iter() {
        let lambda = beta.with_first_column(m_tilde).ok_or_else(|| {
            Error::Internal(format!("{beta}+(1^{m_tilde}) is not a partition for {mu}*{nu}"))
        })?;
        length.add_term(lambda, c)?;
    }
    Ok((width, length))
}

/// `χ = Σ_A [μ/γ_A]·[ν/γ_A] − ([μ/γ]·[ν/γ])↑`, summed over removable nodes
/// `A` of `γ = μ∩ν`; a virtual character of `S_{n-m+1}`.
pub fn almost_width_chi(mu: &Partition, nu: &Partition) -> Result<VirtualCharacter> {
    check_sizes(mu, nu)?;
    let gamma = mu.intersect(nu);
    if gamma.is_empty() {
        return Err(Error::OutOfRange {
            what: "|μ∩ν|",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let d = mu.size() - gamma.size();
    let mut chi = VirtualCharacter::zero(d + 1);
    for node in gamma.removable_nodes() {
        let smaller = gamma.remove(node)?;
        let term = kron_characters(&skew(mu, &smaller)?, &skew(nu, &smaller)?)?;
        chi = &chi + &term;
    }
    let base = width_skew_product(mu, nu)?;
    Ok(&chi - &induce_one_step(&base))
}

/// `(m-1, θ)` for every `θ` with `θ_1 ≤ m-1`, with the coefficient of `θ`
/// in `χ`; this is the width-`(m-1)` part of the product.
fn almost_width_from_chi(chi: &VirtualCharacter, m: usize, n: usize) -> Result<VirtualCharacter> {
    let mut out = VirtualCharacter::zero(n);
    for (theta, c) in chi.iter() {
        if theta.width() < m {
            if let Some(lambda) = theta.with_first_row(m - 1) {
                out.add_term(lambda, c)?;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremeReport {
    pub m: usize,
    pub m_tilde: usize,
    pub width_max: Decomposition,
    pub width_almost: Decomposition,
    pub length_max: Decomposition,
    pub length_almost: Decomposition,
    /// Distinct constituents over the four lists.
    pub count: usize,
}

impl ExtremeReport {
    /// Builds the report by scanning a full decomposition of `[μ]·[ν]`.
    pub fn from_product(product: &Decomposition, m: usize, m_tilde: usize) -> Self {
        let width_max = product.filter(|l| l.width() == m);
        let width_almost = product.filter(|l| l.width() + 1 == m);
        let length_max = product.filter(|l| l.length() == m_tilde);
        let length_almost = product.filter(|l| l.length() + 1 == m_tilde);
        let mut distinct = BTreeSet::new();
        for list in [&width_max, &width_almost, &length_max, &length_almost] {
            distinct.extend(list.constituents());
        }
        ExtremeReport {
            m,
            m_tilde,
            width_max,
            width_almost,
            length_max,
            length_almost,
            count: distinct.len(),
        }
    }

    /// Every constituent in the four lists.
    pub fn constituents(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        for list in [&self.width_max, &self.width_almost, &self.length_max, &self.length_almost] {
            out.extend(list.constituents());
        }
        out
    }
}

/// Extreme and almost extreme constituents of `[μ]·[ν]`, taken from the
/// brute-force decomposition and cross-checked against the skew-product
/// formulas. A disagreement is reported as [`Error::Internal`].
pub fn almost_extreme_report(mu: &Partition, nu: &Partition) -> Result<ExtremeReport> {
    check_sizes(mu, nu)?;
    let product = kron_decompose(mu, nu, Method::Brute)?;
    let report = checked_report(mu, nu, &product)?;
    Ok(report)
}

/// [`almost_extreme_report`] for a product that is already known.
pub fn checked_report(mu: &Partition, nu: &Partition, product: &Decomposition) -> Result<ExtremeReport> {
    let n = mu.size();
    let m = mu.intersect(nu).size();
    let m_tilde = mu.intersect(&nu.conjugate()).size();
    let report = ExtremeReport::from_product(product, m, m_tilde);
    if n == 0 {
        return Ok(report);
    }

    let (width, length) = extreme_components(mu, nu)?;
    let mismatch = |what: &str, a: &VirtualCharacter, b: &VirtualCharacter| {
        Error::Internal(format!("{what} of {mu}*{nu}: scan gives {a}, formula gives {b}"))
    };
    if width != report.width_max {
        return Err(mismatch("width-maximal part", &report.width_max, &width));
    }
    if length != report.length_max {
        return Err(mismatch("length-maximal part", &report.length_max, &length));
    }
    if m >= 2 {
        let chi = almost_width_chi(mu, nu)?;
        let expected = almost_width_from_chi(&chi, m, n)?;
        if expected != report.width_almost {
            return Err(mismatch("width-almost part", &report.width_almost, &expected));
        }
    }
    if m_tilde >= 2 {
        // [μ]·[ν'] is the conjugate of [μ]·[ν]
        let nu_conj = nu.conjugate();
        let chi = almost_width_chi(mu, &nu_conj)?;
        let expected = almost_width_from_chi(&chi, m_tilde, n)?.conjugate();
        if expected != report.length_almost {
            return Err(mismatch("length-almost part", &report.length_almost, &expected));
        }
    }
    Ok(report)
}

/// Whether every constituent `λ` of `[μ]·[ν]` satisfies
/// `h_11(λ) < |μ∩ν| + |μ∩ν'| − 1`. Refuses linear characters.
pub fn hook_bound_check(mu: &Partition, nu: &Partition) -> Result<bool> {
    check_sizes(mu, nu)?;
    for p in [mu, nu] {
        if is_linear(p) {
            return Err(Error::TrivialCharacter(p.clone()));
        }
    }
    let (m, m_tilde) = crate::kronecker::rect_hull(mu, nu)?;
    let product = kron_decompose(mu, nu, Method::Brute)?;
    Ok(product
        .constituents()
        .iter()
        .all(|l| l.first_hook() + 1 < m + m_tilde))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn vc(s: &str) -> VirtualCharacter {
        s.parse().unwrap()
    }

    #[test]
    fn star_examples() {
        let v = hypothesis_star(&p("3,2"), &p("4,1")).unwrap();
        assert!(!v.satisfied);
        assert!(v.failed_clauses.contains(&1));
        // both have two rows, so clause 3 fails as well
        assert_eq!(v.failed_clauses, vec![1, 3]);
        let v = hypothesis_star(&p("4,2,2"), &p("3,3,1,1")).unwrap();
        assert_eq!(v.failed_clauses, vec![2]);
        assert!(hypothesis_star(&p("3,2,1"), &p("2,2,2")).unwrap().satisfied);
    }

    #[test]
    fn extreme_component_examples() {
        let (w, l) = extreme_components(&p("3,2"), &p("4,1")).unwrap();
        assert_eq!(w, vc("[4,1]"));
        assert_eq!(l, vc("[3,1^2] + [2^2,1]"));
        let (w, l) = extreme_components(&p("3,3"), &p("3,3")).unwrap();
        assert_eq!(w, vc("[6]"));
        // m̃ = |(3,3)∩(2,2,2)| = 4, so the length-maximal constituent is [3,1^3]
        assert_eq!(l, vc("[3,1^3]"));
        let (w, l) = extreme_components(&p("4"), &p("2,2")).unwrap();
        assert_eq!(w, vc("[2^2]"));
        assert_eq!(l, vc("[2^2]"));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(
            almost_width_chi(&p("4,2,2"), &p("3,3,1,1")).unwrap(),
            vc("[3] + 5[2,1] + 4[1^3]")
        );
        assert_eq!(almost_width_chi(&p("3,2"), &p("4,1")).unwrap(), vc("[2] + [1^2]"));
        assert!(almost_width_chi(&p("2,2"), &p("2,2")).unwrap().is_zero());
    }

    #[test]
    fn report_examples() {
        let r = almost_extreme_report(&p("2,1"), &p("2,1")).unwrap();
        assert_eq!(r.count, 3);
        let r = almost_extreme_report(&p("3,3"), &p("2,2,2")).unwrap();
        assert_eq!(r.count, 3);
        assert_eq!(r.width_max, vc("[4,1^2]"));
        assert_eq!(r.width_almost, vc("[3^2]"));
        assert_eq!(r.length_max, vc("[1^6]"));
        assert!(r.length_almost.is_zero());
        let r = almost_extreme_report(&p("3,2,1"), &p("3,2,1")).unwrap();
        assert_eq!(r.count, 4);
    }

    #[test]
    fn report_json_shape() {
        let r = almost_extreme_report(&p("3,2"), &p("4,1")).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"m":4,"m_tilde":3,"width_max":{"4,1":1},"width_almost":"#));
        assert!(json.ends_with(r#""count":4}"#));
    }

    #[test]
    fn hook_bound_examples() {
        assert!(hook_bound_check(&p("2,1"), &p("2,1")).unwrap());
        assert!(hook_bound_check(&p("3,2"), &p("4,1")).unwrap());
        assert!(matches!(
            hook_bound_check(&p("4"), &p("2,2")),
            Err(Error::TrivialCharacter(_))
        ));
    }
}
