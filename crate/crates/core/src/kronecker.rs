//! Kronecker products `[μ]·[ν] = Σ d(μ,ν;λ)[λ]`.
//!
//! Two independent routes are provided. The brute route evaluates inner
//! products of class functions from the character table. The recursive route
//! uses only LR decompositions of skew characters and smaller Kronecker
//! coefficients, peeling off the first row of `λ`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::str::FromStr;

use crate::characters::character_table;
use crate::error::{Error, Result};
use crate::lr::skew_decompose;
use crate::partition::{partitions_of, Partition, SkewShape};
use crate::vchar::{Decomposition, VirtualCharacter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Inner products against the character table.
    Brute,
    /// First-row recursion on skew characters.
    Dvir,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "dvir" => Ok(Method::Dvir),
            other => Err(Error::parse(other, "expected brute or dvir")),
        }
    }
}

fn check_sizes(mu: &Partition, nu: &Partition) -> Result<()> {
    if mu.size() != nu.size() {
        return Err(Error::size_mismatch(mu.size(), nu.size()));
    }
    Ok(())
}

pub fn kron_decompose(mu: &Partition, nu: &Partition, method: Method) -> Result<Decomposition> {
    check_sizes(mu, nu)?;
    match method {
        Method::Brute => character_table(mu.size())?.kronecker(mu, nu),
        Method::Dvir => DVIR.with(|e| e.borrow_mut().decompose(mu, nu)),
    }
}

/// `d(μ,ν;λ)` from the character table.
pub fn kron_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<i64> {
    check_sizes(mu, nu)?;
    check_sizes(mu, lambda)?;
    character_table(mu.size())?.kronecker_coefficient(mu, nu, lambda)
}

/// `d(μ,ν;λ)` by the first-row recursion, with a per-thread memo.
pub fn dvir_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<i64> {
    DVIR.with(|e| e.borrow_mut().coefficient(mu, nu, lambda))
}

/// Maximal width and maximal length of the constituents of `[μ]·[ν]`:
/// `(|μ∩ν|, |μ∩ν'|)`.
pub fn rect_hull(mu: &Partition, nu: &Partition) -> Result<(usize, usize)> {
    check_sizes(mu, nu)?;
    Ok((mu.intersect(nu).size(), mu.intersect(&nu.conjugate()).size()))
}

/// Number of distinct constituents of `[μ]·[ν]`.
pub fn component_count(mu: &Partition, nu: &Partition) -> Result<usize> {
    Ok(kron_decompose(mu, nu, Method::Brute)?.component_count())
}

/// Branching rule `[θ]↑ = Σ_B [θ^B]`, extended linearly.
pub fn induce_one_step(psi: &VirtualCharacter) -> VirtualCharacter {
    let mut out = VirtualCharacter::zero(psi.n() + 1);
    for (theta, c) in psi.iter() {
        for node in theta.addable_nodes() {
            let bigger = theta.add(node).expect("addable node");
            out.add_term(bigger, c).expect("size n+1");
        }
    }
    out
}

/// Kronecker product of two (virtual) characters of the same degree,
/// computed through class functions.
pub fn kron_characters(a: &VirtualCharacter, b: &VirtualCharacter) -> Result<VirtualCharacter> {
    if a.n() != b.n() {
        return Err(Error::size_mismatch(a.n(), b.n()));
    }
    let table = character_table(a.n())?;
    let f = table.class_function(a)?;
    let g = table.class_function(b)?;
    table.decompose(&f.product(&g)?)
}

/// `[outer/inner]`, or `None` when `inner ⊄ outer`.
pub(crate) fn skew_character(outer: &Partition, inner: &Partition) -> Option<Decomposition> {
    SkewShape::new(outer.clone(), inner.clone())
        .ok()
        .map(|s| skew_decompose(&s))
}

thread_local! {
    static DVIR: RefCell<DvirEngine> = RefCell::new(DvirEngine::new());
}

type Triple = (Partition, Partition, Partition);

/// Memoized evaluator of the first-row recursion. Not shared between
/// threads; each worker owns one.
#[derive(Default)]
pub struct DvirEngine {
    memo: HashMap<Triple, i64>,
    skew: HashMap<(Partition, Partition), Decomposition>,
}

impl DvirEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn skew(&mut self, outer: &Partition, inner: &Partition) -> Decomposition {
        let key = (outer.clone(), inner.clone());
        if let Some(d) = self.skew.get(&key) {
            return d.clone();
        }
        let d = skew_character(outer, inner).expect("caller checks containment");
        self.skew.insert(key, d.clone());
        d
    }

    /// `⟨[A]·[B], [λ]⟩` for characters `A`, `B` of the same degree.
    fn paired(&mut self, a: &Decomposition, b: &Decomposition, lambda: &Partition) -> Result<i64> {
        let mut total = 0i64;
        for (rho, x) in a.iter() {
            for (tau, y) in b.iter() {
                let d = self.coefficient(rho, tau, lambda)?;
                total += x * y * d;
            }
        }
        Ok(total)
    }

    pub fn coefficient(&mut self, mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<i64> {
        check_sizes(mu, nu)?;
        check_sizes(mu, lambda)?;
        let n = mu.size();
        if n <= 1 {
            return Ok(1);
        }
        let gamma = mu.intersect(nu);
        let m = gamma.size();
        let gamma_tilde = mu.intersect(&nu.conjugate());
        let m_tilde = gamma_tilde.size();
        if lambda.width() > m || lambda.length() > m_tilde {
            return Ok(0);
        }
        let key = (mu.clone(), nu.clone(), lambda.clone());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let value = if lambda.width() == m {
            let a = self.skew(mu, &gamma);
            let b = self.skew(nu, &gamma);
            self.paired(&a, &b, &lambda.drop_first_row())?
        } else if lambda.length() == m_tilde {
            let a = self.skew(mu, &gamma_tilde);
            let b = self.skew(nu, &mu.conjugate().intersect(nu));
            self.paired(&a, &b, &lambda.drop_first_column())?
        } else {
            self.full_recursion(mu, nu, lambda, &gamma)?
        };
        if value < 0 {
            return Err(Error::Internal(format!(
                "negative Kronecker coefficient d({mu},{nu};{lambda}) = {value}"
            )));
        }
        self.memo.insert(key, value);
        Ok(value)
    }

    fn full_recursion(
        &mut self,
        mu: &Partition,
        nu: &Partition,
        lambda: &Partition,
        gamma: &Partition,
    ) -> Result<i64> {
        let m = gamma.size();
        let hat = lambda.drop_first_row();
        let mut total = 0i64;
        for alpha in crate::partition::partitions_inside(lambda.width(), gamma) {
            let a = self.skew(mu, &alpha);
            let b = self.skew(nu, &alpha);
            total += self.paired(&a, &b, &hat)?;
        }
        for eta in horizontal_strip_extensions(lambda) {
            if eta != *lambda && eta.width() <= m {
                total -= self.coefficient(mu, nu, &eta)?;
            }
        }
        Ok(total)
    }

    /// All `λ` with `d(μ,ν;λ) > 0`, in decreasing lexicographic order.
    pub fn decompose(&mut self, mu: &Partition, nu: &Partition) -> Result<Decomposition> {
        check_sizes(mu, nu)?;
        let n = mu.size();
        let mut out = VirtualCharacter::zero(n);
        for lambda in partitions_of(n) {
            let d = self.coefficient(mu, nu, &lambda)?;
            out.add_term(lambda, d)?;
        }
        Ok(out)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

/// Partitions `η ⊢ |λ|` with `η_i ≥ λ_{i+1} ≥ η_{i+1}` for all `i`: those
/// obtained from `(λ_2, λ_3, ...)` by adding a horizontal strip of size `λ_1`.
pub fn horizontal_strip_extensions(lambda: &Partition) -> Vec<Partition> {
    let n = lambda.size();
    let k = lambda.length();
    let mut out = Vec::new();
    // choose η_2..η_k with η_i ∈ [λ_{i+1}, λ_i]; η_j = 0 beyond k
    fn fill(
        i: usize,
        k: usize,
        lambda: &Partition,
        tail: &mut Vec<usize>,
        n: usize,
        out: &mut Vec<Partition>,
    ) {
        if i > k {
            let rest: usize = tail.iter().sum();
            if rest > n {
                return;
            }
            let first = n - rest;
            if first < lambda.part(2) {
                return;
            }
            let mut parts = vec![first];
            parts.extend_from_slice(tail);
            if let Ok(eta) = Partition::new(parts) {
                out.push(eta);
            }
            return;
        }
        for v in lambda.part(i + 1)..=lambda.part(i) {
            tail.push(v);
            fill(i + 1, k, lambda, tail, n, out);
            tail.pop();
        }
    }
    fill(2, k, lambda, &mut Vec::new(), n, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
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
    fn decompose_examples_both_methods() {
        let cases = [
            ("2,1", "2,1", "[3] + [2,1] + [1^3]"),
            ("5,1", "3,3", "[4,2] + [3,2,1]"),
            ("4", "2,2", "[2^2]"),
            ("4,1", "3,2", "[4,1] + [3,2] + [3,1^2] + [2^2,1]"),
        ];
        for (mu, nu, expected) in cases {
            for method in [Method::Brute, Method::Dvir] {
                assert_eq!(
                    kron_decompose(&p(mu), &p(nu), method).unwrap(),
                    vc(expected),
                    "{mu} * {nu} via {method:?}"
                );
            }
        }
        assert!(matches!(
            kron_decompose(&p("3,1"), &p("2,1"), Method::Brute),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(kron_coefficient(&p("3,2"), &p("4,1"), &p("4,1")).unwrap(), 1);
        assert_eq!(kron_coefficient(&p("2,2"), &p("4"), &p("2,2")).unwrap(), 1);
        assert_eq!(kron_coefficient(&p("2,2"), &p("4"), &p("3,1")).unwrap(), 0);
        assert_eq!(kron_coefficient(&p("3,3"), &p("3,3"), &p("6")).unwrap(), 1);
        assert_eq!(dvir_coefficient(&p("3,2"), &p("4,1"), &p("4,1")).unwrap(), 1);
        assert_eq!(dvir_coefficient(&p("3,3"), &p("3,3"), &p("6")).unwrap(), 1);
        assert_eq!(dvir_coefficient(&p("2,1"), &p("2,1"), &p("2,1")).unwrap(), 1);
    }

    #[test]
    fn hull_examples() {
        assert_eq!(rect_hull(&p("3,2"), &p("4,1")).unwrap(), (4, 3));
        assert_eq!(rect_hull(&p("2,1"), &p("2,1")).unwrap(), (3, 3));
        assert_eq!(rect_hull(&p("4"), &p("2,2")).unwrap(), (2, 2));
    }

    #[test]
    fn induction_examples() {
        assert_eq!(induce_one_step(&vc("[2]")), vc("[3] + [2,1]"));
        assert_eq!(induce_one_step(&vc("[1]")), vc("[2] + [1^2]"));
        assert_eq!(induce_one_step(&vc("[2] + [1^2]")), vc("[3] + 2[2,1] + [1^3]"));
    }

    #[test]
    fn component_count_examples() {
        assert_eq!(component_count(&p("2,1"), &p("2,1")).unwrap(), 3);
        assert_eq!(component_count(&p("3,3"), &p("3,3")).unwrap(), 4);
        assert_eq!(component_count(&p("4"), &p("2,2")).unwrap(), 1);
    }

    #[test]
    fn strip_extensions_are_wider() {
        for n in 1..=8 {
            for lambda in partitions_of(n) {
                let ys = horizontal_strip_extensions(&lambda);
                assert!(ys.contains(&lambda));
                for eta in ys {
                    assert_eq!(eta.size(), n);
                    if eta != lambda {
                        assert!(eta.width() > lambda.width(), "{eta} from {lambda}");
                    }
                }
            }
        }
    }
}
