//! Products with at most four components, products with the natural
//! character, Kronecker squares, and products of two-part partitions and of
//! hooks.

use std::collections::BTreeSet;

use super::families::{blocks, hook_times_natural, printed_product};
use super::sweep::exception_tag;
use super::{check_n_max, pair_label, Checker, Counterexample, VerificationReport};
use crate::error::Result;
use crate::extreme::{checked_report, is_linear, ExtremeReport};
use crate::kronecker::{kron_decompose, Method};
use crate::par::{map_ordered, Execution};
use crate::partition::{partitions_of, Partition};
use crate::vchar::{Decomposition, VirtualCharacter};

pub(crate) struct PairData {
    pub mu: Partition,
    pub nu: Partition,
    pub product: Decomposition,
    pub report: ExtremeReport,
}

impl PairData {
    fn label(&self) -> String {
        pair_label(&self.mu, &self.nu)
    }

    fn c(&self) -> usize {
        self.product.component_count()
    }

    fn all_extreme(&self) -> bool {
        let ext = self.report.constituents();
        self.product.constituents().iter().all(|l| ext.contains(l))
    }
}

fn compute(mu: &Partition, nu: &Partition) -> Result<PairData> {
    let product = kron_decompose(mu, nu, Method::Brute)?;
    let report = checked_report(mu, nu, &product)?;
    Ok(PairData {
        mu: mu.clone(),
        nu: nu.clone(),
        product,
        report,
    })
}

/// Unordered pairs `μ ≤ ν` (decreasing lexicographic order) of partitions
/// of `n` satisfying `keep`.
pub(crate) fn pair_data(
    n: usize,
    keep: impl Fn(&Partition, &Partition) -> bool,
) -> Result<Vec<PairData>> {
    let labels = partitions_of(n);
    let mut pairs = Vec::new();
    for i in 0..labels.len() {
        for j in i..labels.len() {
            if keep(&labels[i], &labels[j]) {
                pairs.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    map_ordered(&pairs, Execution::auto(), |(mu, nu)| compute(mu, nu))
}

fn natural(n: usize) -> Partition {
    Partition::of(&[n - 1, 1])
}

fn natural_like(p: &Partition) -> bool {
    let n = p.size();
    n >= 2 && (*p == natural(n) || p.conjugate() == natural(n))
}

fn near_square(p: &Partition, k: usize) -> bool {
    *p == Partition::of(&[k + 1, k]) || p.conjugate() == Partition::of(&[k + 1, k])
}

fn check_printed(ck: &mut Checker, d: &PairData) {
    match printed_product(&d.mu, &d.nu) {
        Some(expected) => ck.check(expected == d.product, || {
            Counterexample::new(d.label(), "printed decomposition differs")
                .with_values(expected.render(), d.product.render())
        }),
        None => ck.fail(Counterexample::new(d.label(), "no printed decomposition")),
    }
}

/// Products with three and with four homogeneous components, and their
/// printed decompositions, over all pairs with `n ≤ n_max`.
pub fn verify_34c(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut ck = Checker::new("34c", n_max);
    for n in 1..=n_max {
        for d in pair_data(n, |_, _| true)? {
            let (mu, nu) = (&d.mu, &d.nu);
            let three = mu == nu
                && ((n == 3 && *mu == Partition::of(&[2, 1]))
                    || (n == 4 && *mu == Partition::of(&[2, 2])));
            let four = n >= 4 && {
                let both_natural = natural_like(mu) && natural_like(nu);
                let odd = n % 2 == 1 && {
                    let k = n / 2;
                    (natural_like(mu) && near_square(nu, k)) || (natural_like(nu) && near_square(mu, k))
                };
                let sq = |p: &Partition| *p == Partition::of(&[3, 3]) || *p == Partition::of(&[2, 2, 2]);
                both_natural || odd || (sq(mu) && sq(nu))
            };
            let c = d.c();
            ck.check((c == 3) == three, || {
                Counterexample::new(d.label(), "three components").with_values(three, &d.product)
            });
            ck.check((c == 4) == four, || {
                Counterexample::new(d.label(), "four components").with_values(four, &d.product)
            });
            if three || four {
                check_printed(&mut ck, &d);
            }
        }
    }
    Ok(ck.finish())
}

/// At least five (almost) extreme components outside the seven exceptional
/// families; in families (i)-(v) the product equals the printed one.
pub fn verify_extcomp(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut ck = Checker::new("extcomp", n_max);
    let mut tagged_with_five = 0usize;
    let mut count_only = 0usize;
    for n in 1..=n_max {
        for d in pair_data(n, |_, _| true)? {
            match exception_tag(&d.mu, &d.nu) {
                None => ck.check(d.report.count >= 5, || {
                    Counterexample::new(d.label(), "fewer than five (almost) extreme components")
                        .with_values(">= 5", d.report.count)
                }),
                Some(tag) => {
                    if d.report.count >= 5 {
                        tagged_with_five += 1;
                    }
                    if matches!(tag, "vi" | "vii") {
                        count_only += 1;
                    } else {
                        check_printed(&mut ck, &d);
                    }
                }
            }
        }
    }
    ck.note(format!(
        "{count_only} pairs in families (vi)/(vii) have no closed form and are only counted"
    ));
    ck.note(format!(
        "{tagged_with_five} pairs in an exceptional family still have at least five (almost) extreme components"
    ));
    Ok(ck.finish())
}

/// Products with `[n-1,1]`, Kronecker squares, two-part partitions and
/// hooks.
pub fn verify_special(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let parts = vec![
        natural_products(n_max)?,
        squares(n_max)?,
        two_part(n_max)?,
        hooks(n_max)?,
    ];
    Ok(VerificationReport::merge("special", n_max, parts))
}

fn natural_products(n_max: usize) -> Result<VerificationReport> {
    let mut ck = Checker::new("natural", n_max);
    for n in 3..=n_max {
        let nat = natural(n);
        let data = map_ordered(&partitions_of(n), Execution::auto(), |mu| compute(mu, &nat))?;
        for d in &data {
            let mu = &d.mu;
            // Σ_A Σ_B [(μ_A)^B] − [μ]
            let mut expected = VirtualCharacter::irreducible(mu.clone()).scale(-1);
            for a in mu.removable_nodes() {
                let smaller = mu.remove(a)?;
                for b in smaller.addable_nodes() {
                    expected.add_term(smaller.add(b)?, 1)?;
                }
            }
            ck.check(expected == d.product, || {
                Counterexample::new(d.label(), "remove-add formula").with_values(&expected, &d.product)
            });

            let c = d.c();
            let k_case = (2..n).any(|k| 2 * k + 1 == n && near_square(mu, k));
            let expected_c = if is_linear(mu) {
                1
            } else if mu.is_nontrivial_rectangle() {
                2
            } else if n == 3 && *mu == Partition::of(&[2, 1]) {
                3
            } else if (n >= 4 && natural_like(mu)) || k_case {
                4
            } else {
                0
            };
            ck.check(
                if expected_c == 0 { c >= 5 } else { c == expected_c },
                || {
                    Counterexample::new(d.label(), "component count")
                        .with_values(format!("{expected_c} (0 means at least 5)"), c)
                },
            );
            if expected_c > 0 {
                check_printed(&mut ck, d);
                ck.check(d.all_extreme(), || {
                    Counterexample::new(d.label(), "a component is not (almost) extreme")
                        .with_values(format!("{:?}", d.report.constituents()), &d.product)
                });
            }
            if d.report.count <= 4 {
                ck.check(expected_c > 0, || {
                    Counterexample::new(d.label(), "at most four (almost) extreme components off the list")
                        .with_values("listed", &d.product)
                });
            }
            if mu.is_hook() {
                let k = mu.length() - 1;
                if 1 < k && k + 2 < n {
                    let formula = hook_times_natural(n as i64, k as i64);
                    ck.check(formula.as_ref() == Some(&d.product), || {
                        Counterexample::new(d.label(), "hook formula")
                            .with_values(format!("{formula:?}"), &d.product)
                    });
                    ck.check(d.c() == 5 && d.all_extreme(), || {
                        Counterexample::new(d.label(), "hook product has five (almost) extreme components")
                            .with_values(5, d.report.count)
                    });
                }
            }
        }
    }
    Ok(ck.finish())
}

fn squares(n_max: usize) -> Result<VerificationReport> {
    let mut ck = Checker::new("squares", n_max);
    for n in 1..=n_max {
        let data = map_ordered(&partitions_of(n), Execution::auto(), |l| compute(l, l))?;
        for d in &data {
            let l = &d.mu;
            let at_most_four = is_linear(l)
                || (n >= 4 && natural_like(l))
                || (n == 3 && *l == Partition::of(&[2, 1]))
                || (n == 4 && *l == Partition::of(&[2, 2]))
                || (n == 6 && (*l == Partition::of(&[3, 3]) || *l == Partition::of(&[2, 2, 2])));
            ck.check((d.c() <= 4) == at_most_four, || {
                Counterexample::new(d.label(), "square with at most four components")
                    .with_values(at_most_four, &d.product)
            });
            if at_most_four {
                check_printed(&mut ck, d);
            }
            let rect = l.is_rectangle() && l.width() > 1 && l.width().abs_diff(l.length()) == 1;
            let few_extreme = is_linear(l)
                || (n >= 4 && natural_like(l))
                || (n > 1 && l.is_symmetric())
                || (rect && l.length() > 1);
            ck.check((d.report.count <= 4) == few_extreme, || {
                Counterexample::new(d.label(), "square with at most four (almost) extreme components")
                    .with_values(few_extreme, d.report.count)
            });
        }
    }
    Ok(ck.finish())
}

fn length4(product: &Decomposition) -> usize {
    product.constituents().iter().filter(|l| l.length() == 4).count()
}

fn require(ck: &mut Checker, d: &PairData, what: &str, label: Option<Partition>) {
    let present = label.as_ref().is_some_and(|l| d.product.get(l) > 0);
    ck.check(present, || {
        Counterexample::new(d.label(), format!("missing constituent {what}"))
            .with_values(label.map_or("not a partition".to_string(), |l| l.to_string()), &d.product)
    });
}

fn two_part(n_max: usize) -> Result<VerificationReport> {
    let mut ck = Checker::new("two-part", n_max);
    let proper = |p: &Partition| p.length() == 2;
    let corrected: VirtualCharacter = "[5,1] + [4,1^2] + [3^2] + [3,2,1] + [2^2,1^2]".parse()?;
    for n in 2..=n_max {
        for d in pair_data(n, |a, b| proper(a) && proper(b))? {
            let (mu, nu) = (&d.mu, &d.nu);
            // corollary: c ≤ 4 exactly on the list
            let k = n / 2;
            let expected_c = if n == 2 {
                1
            } else if n % 2 == 0 && n >= 4 && {
                let sq = Partition::of(&[k, k]);
                (*mu == natural(n) && *nu == sq) || (*nu == natural(n) && *mu == sq)
            } {
                2
            } else if mu == nu && ((n == 3 && mu.width() == 2) || (n == 4 && *mu == Partition::of(&[2, 2]))) {
                3
            } else if (n >= 4 && mu == nu && *mu == natural(n))
                || (n % 2 == 1 && n >= 5 && {
                    let ns = Partition::of(&[k + 1, k]);
                    (*mu == natural(n) && *nu == ns) || (*nu == natural(n) && *mu == ns)
                })
                || (n == 6 && mu == nu && *mu == Partition::of(&[3, 3]))
            {
                4
            } else {
                0
            };
            ck.check(
                if expected_c == 0 { d.c() >= 5 } else { d.c() == expected_c },
                || {
                    Counterexample::new(d.label(), "two-part component count")
                        .with_values(format!("{expected_c} (0 means at least 5)"), d.c())
                },
            );

            // μ = (n-k,k), ν = (n-l,l), 1 < l < k
            let (k, l) = (mu.part(2).max(nu.part(2)), mu.part(2).min(nu.part(2)));
            if !(1 < l && l < k) {
                continue;
            }
            let (mu, _nu) = if mu.part(2) == k { (mu, nu) } else { (nu, mu) };
            let (n_, k_, l_) = (n as i64, k as i64, l as i64);
            let m = n_ - k_ + l_;
            let square = mu.part(1) == mu.part(2);
            require(&mut ck, &d, "[m,n-m]", blocks(&[(m, 1), (n_ - m, 1)]));
            if !square {
                require(&mut ck, &d, "[m-1,n-m+1]", blocks(&[(m - 1, 1), (n_ - m + 1, 1)]));
            }
            require(&mut ck, &d, "[m-1,n-m,1]", blocks(&[(m - 1, 1), (n_ - m, 1), (1, 1)]));
            let len4 = length4(&d.product);
            if l == 2 {
                let only = blocks(&[(n_ - k_ - 1, 1), (k_ - 1, 1), (1, 2)]);
                let ok = len4 == 1 && only.as_ref().is_some_and(|p| d.product.get(p) > 0);
                ck.check(ok, || {
                    Counterexample::new(d.label(), "single length-4 constituent")
                        .with_values(format!("{only:?}"), &d.product)
                });
                require(&mut ck, &d, "[n-k,k-1,1]", blocks(&[(n_ - k_, 1), (k_ - 1, 1), (1, 1)]));
                if k > 3 {
                    require(&mut ck, &d, "[n-k,k-2,2]", blocks(&[(n_ - k_, 1), (k_ - 2, 1), (2, 1)]));
                }
                if k == 3 && n >= 7 {
                    require(&mut ck, &d, "[n-4,2^2]", blocks(&[(n_ - 4, 1), (2, 2)]));
                }
            } else {
                ck.check(len4 >= 2, || {
                    Counterexample::new(d.label(), "two length-4 constituents").with_values(">= 2", len4)
                });
            }
            if square && l > 3 {
                ck.check(len4 >= 3, || {
                    Counterexample::new(d.label(), "three length-4 constituents").with_values(">= 3", len4)
                });
            }
            if square && l == 3 {
                require(&mut ck, &d, "[k+1,k-1]", blocks(&[(k_ + 1, 1), (k_ - 1, 1)]));
            }
            if n == 6 && square && l == 2 {
                ck.check(d.product == corrected, || {
                    Counterexample::new(d.label(), "[3^2]*[4,2]").with_values(&corrected, &d.product)
                });
            } else {
                ck.check(d.report.count >= 5, || {
                    Counterexample::new(d.label(), "two-part pair with fewer than five (almost) extreme components")
                        .with_values(">= 5", d.report.count)
                });
            }
        }
    }
    ck.note("the [3^2]*[4,2] product is checked with [2^2,1^2] in place of the misprinted [2^2,1^1]");
    Ok(ck.finish())
}

fn hooks(n_max: usize) -> Result<VerificationReport> {
    let mut ck = Checker::new("hooks", n_max);
    for n in 1..=n_max {
        for d in pair_data(n, |a, b| a.is_hook() && b.is_hook())? {
            let (mu, nu) = (&d.mu, &d.nu);
            let expected_c = if is_linear(mu) || is_linear(nu) {
                1
            } else if mu == nu && *mu == Partition::of(&[2, 1]) {
                3
            } else if n >= 4 && natural_like(mu) && natural_like(nu) {
                4
            } else {
                0
            };
            ck.check(
                if expected_c == 0 { d.c() >= 5 } else { d.c() == expected_c },
                || {
                    Counterexample::new(d.label(), "hook component count")
                        .with_values(format!("{expected_c} (0 means at least 5)"), d.c())
                },
            );

            let (k, l) = (mu.length().max(nu.length()) - 1, mu.length().min(nu.length()) - 1);
            if !(1 < l && l < k && n > 2 * k) {
                continue;
            }
            let (n_, k_, l_) = (n as i64, k as i64, l as i64);
            let m = n_ - k_ + l_;
            let listed = [
                blocks(&[(m, 1), (1, n_ - m)]),
                blocks(&[(m - 1, 1), (2, 1), (1, n_ - m - 1)]),
                blocks(&[(m - 1, 1), (1, n_ - m + 1)]),
                blocks(&[(n_ - k_ - l_, 1), (1, k_ + l_)]),
                blocks(&[(n_ - k_ - l_ + 1, 1), (1, k_ + l_ - 1)]),
                blocks(&[(n_ - k_ - l_, 1), (2, 1), (1, k_ + l_ - 2)]),
            ];
            let ext = d.report.constituents();
            let mut distinct = BTreeSet::new();
            for (i, label) in listed.into_iter().enumerate() {
                let ok = label.as_ref().is_some_and(|p| d.product.get(p) > 0 && ext.contains(p));
                ck.check(ok, || {
                    Counterexample::new(d.label(), format!("hook constituent ({})", i + 1))
                        .with_values(format!("{label:?}"), &d.product)
                });
                distinct.extend(label);
            }
            ck.check(distinct.len() == 6 && d.report.count >= 6, || {
                Counterexample::new(d.label(), "six (almost) extreme components")
                    .with_values(6, d.report.count)
            });
        }
    }
    Ok(ck.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds() {
        for r in [verify_34c(7).unwrap(), verify_extcomp(7).unwrap(), verify_special(8).unwrap()] {
            assert!(r.pass, "{}: {:?}", r.theorem, r.counterexamples);
        }
    }
}
