//! Component counts for every unordered pair of partitions of `n`.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::characters::MAX_TABLE_N;
use crate::error::{Error, Result};
use crate::extreme::{checked_report, is_linear};
use crate::kronecker::{kron_decompose, Method};
use crate::par::{map_ordered, Execution};
use crate::partition::{partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub mu: Partition,
    pub nu: Partition,
    /// Number of distinct constituents of `[μ]·[ν]`.
    pub c: usize,
    /// Distinct constituents of (almost) maximal width or length.
    pub extreme_count: usize,
    /// First exceptional family the pair belongs to, `"i"` to `"vii"`.
    pub exception_tag: Option<String>,
}

fn in_natural_pair(p: &Partition) -> bool {
    let n = p.size();
    n >= 2 && (*p == Partition::of(&[n - 1, 1]) || p.conjugate() == Partition::of(&[n - 1, 1]))
}

fn either<F: Fn(&Partition, &Partition) -> bool>(mu: &Partition, nu: &Partition, f: F) -> bool {
    f(mu, nu) || f(nu, mu)
}

fn is_near_square(p: &Partition, k: usize) -> bool {
    *p == Partition::of(&[k + 1, k]) || p.conjugate() == Partition::of(&[k + 1, k])
}

fn is_long_natural(p: &Partition, k: usize) -> bool {
    *p == Partition::of(&[2 * k, 1]) || p.conjugate() == Partition::of(&[2 * k, 1])
}

/// The exceptional families for which fewer than five (almost) extreme
/// constituents are possible, checked in order:
///
/// - `i`: one factor is linear;
/// - `ii`: a nontrivial rectangle against `(n-1,1)` or `(2,1^{n-2})`;
/// - `iii`: both factors in `{(n-1,1), (2,1^{n-2})}`;
/// - `iv`: `n = 2k+1`, `k > 1`, one of `(2k,1), (2,1^{2k-1})` against one of
///   `(k+1,k), (2^k,1)`;
/// - `v`: one of `(3^2), (2^3)` against one of `(4,2), (2^2,1^2)`;
/// - `vi`: `μ = ν` symmetric;
/// - `vii`: both in `{((a+1)^a), (a^{a+1})}` for some `a > 1`.
pub fn exception_tag(mu: &Partition, nu: &Partition) -> Option<&'static str> {
    let n = mu.size();
    if mu.size() != nu.size() {
        return None;
    }
    if is_linear(mu) || is_linear(nu) {
        return Some("i");
    }
    if either(mu, nu, |a, b| a.is_nontrivial_rectangle() && in_natural_pair(b)) {
        return Some("ii");
    }
    if in_natural_pair(mu) && in_natural_pair(nu) {
        return Some("iii");
    }
    if n % 2 == 1 && n >= 5 {
        let k = n / 2;
        if either(mu, nu, |a, b| is_long_natural(a, k) && is_near_square(b, k)) {
            return Some("iv");
        }
    }
    if n == 6 {
        let sq = |p: &Partition| *p == Partition::of(&[3, 3]) || *p == Partition::of(&[2, 2, 2]);
        let other = |p: &Partition| *p == Partition::of(&[4, 2]) || *p == Partition::of(&[2, 2, 1, 1]);
        if either(mu, nu, |a, b| sq(a) && other(b)) {
            return Some("v");
        }
    }
    if mu == nu && mu.is_symmetric() {
        return Some("vi");
    }
    let near_square_rect = |p: &Partition| {
        p.is_rectangle() && !p.is_empty() && {
            let (w, l) = (p.width(), p.length());
            w > 1 && l > 1 && w.abs_diff(l) == 1
        }
    };
    if near_square_rect(mu) && near_square_rect(nu) {
        return Some("vii");
    }
    None
}

/// `(μ,ν)` and `(μ',ν')` have the same product; both map to one key.
fn canonical_key(mu: &Partition, nu: &Partition) -> (Partition, Partition) {
    let sorted = |a: Partition, b: Partition| if a <= b { (a, b) } else { (b, a) };
    let direct = sorted(mu.clone(), nu.clone());
    let conj = sorted(mu.conjugate(), nu.conjugate());
    direct.min(conj)
}

/// All unordered pairs `μ ≤ ν` of partitions of `n`, in decreasing
/// lexicographic order of the labels, computed in parallel when available.
pub fn sweep(n: usize) -> Result<Vec<SweepEntry>> {
    sweep_with(n, Execution::auto())
}

pub fn sweep_with(n: usize, exec: Execution) -> Result<Vec<SweepEntry>> {
    if !(2..=MAX_TABLE_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 2,
            max: MAX_TABLE_N,
        });
    }
    let labels = partitions_of(n);
    let mut pairs = Vec::new();
    for i in 0..labels.len() {
        for j in i..labels.len() {
            pairs.push((labels[i].clone(), labels[j].clone()));
        }
    }
    // one computation per conjugation class of pairs
    let mut keys: Vec<(Partition, Partition)> =
        pairs.iter().map(|(a, b)| canonical_key(a, b)).collect();
    keys.sort();
    keys.dedup();
    let computed = map_ordered(&keys, exec, |(mu, nu)| {
        let product = kron_decompose(mu, nu, Method::Brute)?;
        let report = checked_report(mu, nu, &product)?;
        Ok((product.component_count(), report.count))
    })?;
    let by_key: BTreeMap<_, _> = keys.into_iter().zip(computed).collect();

    Ok(pairs
        .into_iter()
        .map(|(mu, nu)| {
            let (c, extreme_count) = by_key[&canonical_key(&mu, &nu)];
            let exception_tag = exception_tag(&mu, &nu).map(str::to_string);
            SweepEntry {
                mu,
                nu,
                c,
                extreme_count,
                exception_tag,
            }
        })
        .collect())
}

/// One JSON object per line.
pub fn write_catalog<W: Write>(entries: &[SweepEntry], mut out: W) -> Result<()> {
    for e in entries {
        serde_json::to_writer(&mut out, e)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}
