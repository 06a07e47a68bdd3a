//! Independent oracle: irreducible characters from permutation characters of
//! Young subgroups and Kostka numbers, by unitriangular back substitution.
//! Shares nothing with the rim-hook code in the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

/// Partitions of `n` in decreasing lexicographic order, as plain vectors.
pub fn parts(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Ways to assign the cycles of `rho` to the rows of `alpha` so that row `i`
/// receives cycles of total length `alpha[i]`.
fn permutation_character(alpha: &[usize], rho: &[usize]) -> i64 {
    fn go(rho: &[usize], room: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), i64>) -> i64 {
        let Some((&c, rest)) = rho.split_first() else {
            return room.iter().all(|&r| r == 0) as i64;
        };
        let key = (rho.len(), room.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c {
                room[i] -= c;
                total += go(rest, room, memo);
                room[i] += c;
            }
        }
        memo.insert(key, total);
        total
    }
    go(rho, &mut alpha.to_vec(), &mut HashMap::new())
}

/// Semistandard tableaux of shape `lambda` and content `alpha`: the entries
/// equal to the last letter form a horizontal strip, so peel it off.
fn kostka(lambda: &[usize], alpha: &[usize]) -> i64 {
    fn go(lambda: Vec<usize>, alpha: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
        let Some((&a, rest)) = alpha.split_last() else {
            return lambda.is_empty() as i64;
        };
        if lambda.len() > alpha.len() {
            return 0;
        }
        let key = (lambda.clone(), alpha.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        // κ_i ranges over [λ_{i+1}, λ_i] with Σ(λ_i - κ_i) = a
        fn strips(lambda: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == lambda.len() {
                if left == 0 {
                    let mut k = cur.clone();
                    while k.last() == Some(&0) {
                        k.pop();
                    }
                    out.push(k);
                }
                return;
            }
            let floor = lambda.get(i + 1).copied().unwrap_or(0);
            for k in floor..=lambda[i] {
                let take = lambda[i] - k;
                if take <= left {
                    cur.push(k);
                    strips(lambda, i + 1, left - take, cur, out);
                    cur.pop();
                }
            }
        }
        let mut inner = Vec::new();
        strips(&lambda, 0, a, &mut Vec::new(), &mut inner);
        let v = inner.into_iter().map(|k| go(k, rest, memo)).sum();
        memo.insert(key, v);
        v
    }
    go(lambda.to_vec(), alpha, &mut HashMap::new())
}

/// Character table of `S_n` keyed by (λ, ρ).
pub struct Oracle {
    pub n: usize,
    pub labels: Vec<Vec<usize>>,
    pub chi: BTreeMap<Vec<usize>, Vec<i64>>,
    pub class_sizes: Vec<i128>,
}

impl Oracle {
    pub fn new(n: usize) -> Self {
        let labels = parts(n);
        let mut chi: BTreeMap<Vec<usize>, Vec<i64>> = BTreeMap::new();
        // labels run in decreasing lex order, so every λ that dominates α is
        // already known when α is reached
        for alpha in &labels {
            let mut row: Vec<i64> = labels.iter().map(|rho| permutation_character(alpha, rho)).collect();
            for lambda in &labels {
                if lambda == alpha {
                    break;
                }
                let k = kostka(lambda, alpha);
                if k != 0 {
                    for (x, y) in row.iter_mut().zip(&chi[lambda]) {
                        *x -= k * y;
                    }
                }
            }
            chi.insert(alpha.clone(), row);
        }
        let fact: i128 = (1..=n as i128).product();
        let class_sizes = labels
            .iter()
            .map(|rho| {
                let mut z: i128 = 1;
                let mut counts = BTreeMap::new();
                for &c in rho {
                    *counts.entry(c).or_insert(0i128) += 1;
                }
                for (c, m) in counts {
                    z *= (c as i128).pow(m as u32) * (1..=m).product::<i128>();
                }
                fact / z
            })
            .collect();
        Oracle {
            n,
            labels,
            chi,
            class_sizes,
        }
    }

    pub fn value(&self, lambda: &[usize], rho: &[usize]) -> i64 {
        let j = self.labels.iter().position(|r| r == rho).unwrap();
        self.chi[lambda][j]
    }

    pub fn kronecker(&self, mu: &[usize], nu: &[usize], lambda: &[usize]) -> i64 {
        let (a, b, c) = (&self.chi[mu], &self.chi[nu], &self.chi[lambda]);
        let total: i128 = (0..self.labels.len())
            .map(|j| self.class_sizes[j] * (a[j] * b[j] * c[j]) as i128)
            .sum();
        let order: i128 = self.class_sizes.iter().sum();
        assert_eq!(total % order, 0);
        (total / order) as i64
    }

    /// Nonzero `(λ, d(μ,ν;λ))` in decreasing lex order of `λ`.
    pub fn kronecker_product(&self, mu: &[usize], nu: &[usize]) -> Vec<(Vec<usize>, i64)> {
        self.labels
            .iter()
            .map(|l| (l.clone(), self.kronecker(mu, nu, l)))
            .filter(|(_, d)| *d != 0)
            .collect()
    }
}
