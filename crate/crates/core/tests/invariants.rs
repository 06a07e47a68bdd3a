mod common;

use std::collections::BTreeMap;

use kronlab::characters::{character_table, degree};
use kronlab::kronecker::{kron_coefficient, kron_decompose, rect_hull};
use kronlab::lr::{lr_coefficient, outer_product_expand, skew_decompose, skew_syt_count};
use kronlab::{partitions_of, Method, Partition, SkewShape, VirtualCharacter};
use num_traits::ToPrimitive;
use proptest::prelude::*;

use common::Oracle;

fn as_map(v: &VirtualCharacter) -> BTreeMap<Vec<usize>, i64> {
    v.iter().map(|(l, c)| (l.parts().to_vec(), c)).collect()
}

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn pair(max_n: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_n).prop_flat_map(|n| {
        let all = partitions_of(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

#[test]
fn table_matches_independent_oracle() {
    for n in 1..=10 {
        let oracle = Oracle::new(n);
        let table = character_table(n).unwrap();
        let labels: Vec<Vec<usize>> = table.labels().iter().map(|l| l.parts().to_vec()).collect();
        assert_eq!(labels, oracle.labels);
        let classes: Vec<Vec<usize>> = table.classes().iter().map(|l| l.parts().to_vec()).collect();
        assert_eq!(classes, oracle.labels);
        for (i, l) in labels.iter().enumerate() {
            assert_eq!(table.row_values(i), &oracle.chi[l][..], "row {l:?}");
        }
    }
}

#[test]
fn kronecker_products_match_oracle() {
    for n in 1..=7 {
        let oracle = Oracle::new(n);
        for mu in partitions_of(n) {
            for nu in partitions_of(n) {
                let got = kron_decompose(&mu, &nu, Method::Brute).unwrap();
                let want: BTreeMap<_, _> = oracle.kronecker_product(mu.parts(), nu.parts()).into_iter().collect();
                assert_eq!(as_map(&got), want, "{mu} * {nu}");
            }
        }
    }
}

#[test]
fn orthogonality_and_degrees() {
    for n in 1..=9 {
        let table = character_table(n).unwrap();
        let k = table.labels().len();
        let sizes: Vec<i128> = table.class_sizes().iter().map(|s| s.to_i128().unwrap()).collect();
        let order: i128 = sizes.iter().sum();
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (table.row_values(i), table.row_values(j));
                let s: i128 = (0..k).map(|c| sizes[c] * (a[c] * b[c]) as i128).sum();
                assert_eq!(s, if i == j { order } else { 0 });
            }
            let id = table.row_values(i)[k - 1];
            assert_eq!(degree(&table.labels()[i]).to_i64().unwrap(), id);
        }
    }
}

#[test]
fn small_products() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    let got = kron_decompose(&p("2,1"), &p("2,1"), Method::Brute).unwrap();
    assert_eq!(got.render(), "[3] + [2,1] + [1^3]");
    let got = kron_decompose(&p("2,2"), &p("2,2"), Method::Dvir).unwrap();
    assert_eq!(got.render(), "[4] + [2^2] + [1^4]");
    assert_eq!(outer_product_expand(&p("1"), &p("1")).render(), "[2] + [1^2]");
    let s: SkewShape = "3,2/1".parse().unwrap();
    assert_eq!(skew_decompose(&s).render(), "[3,1] + [2^2]");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(lambda in partition(14)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        prop_assert_eq!(lambda.conjugate().width(), lambda.length());
    }

    #[test]
    fn grammar_round_trip(lambda in partition(14)) {
        let parsed: Partition = lambda.to_grammar_string().parse().unwrap();
        prop_assert_eq!(parsed, lambda);
    }

    #[test]
    fn degree_counts_standard_tableaux(lambda in partition(12)) {
        let d = degree(&lambda).to_u128().unwrap();
        prop_assert_eq!(d, skew_syt_count(&SkewShape::straight(lambda.clone())));
    }

    #[test]
    fn sign_twist((mu, nu) in pair(8)) {
        // [μ]·[ν'] = ([μ]·[ν])', and the product is symmetric
        let a = kron_decompose(&mu, &nu, Method::Brute).unwrap();
        let b = kron_decompose(&mu, &nu.conjugate(), Method::Brute).unwrap();
        let c = kron_decompose(&nu, &mu, Method::Brute).unwrap();
        prop_assert_eq!(b, a.conjugate());
        prop_assert_eq!(c, a);
    }

    #[test]
    fn coefficient_is_symmetric_in_three_arguments((mu, nu) in pair(8), k in 0usize..1000) {
        let all = partitions_of(mu.size());
        let lambda = &all[k % all.len()];
        let d = kron_coefficient(&mu, &nu, lambda).unwrap();
        prop_assert_eq!(d, kron_coefficient(&nu, lambda, &mu).unwrap());
        prop_assert_eq!(d, kron_coefficient(lambda, &mu, &nu).unwrap());
        prop_assert!(d >= 0);
    }

    #[test]
    fn product_dimension((mu, nu) in pair(8)) {
        let prod = kron_decompose(&mu, &nu, Method::Brute).unwrap();
        let dim: u128 = prod.iter().map(|(l, c)| c as u128 * degree(l).to_u128().unwrap()).sum();
        prop_assert_eq!(dim, degree(&mu).to_u128().unwrap() * degree(&nu).to_u128().unwrap());
    }

    #[test]
    fn hull_is_attained((mu, nu) in pair(8)) {
        let (w, l) = rect_hull(&mu, &nu).unwrap();
        prop_assert_eq!(w, mu.intersect(&nu).size());
        prop_assert_eq!(l, mu.intersect(&nu.conjugate()).size());
        let prod = kron_decompose(&mu, &nu, Method::Brute).unwrap();
        prop_assert_eq!(prod.constituents().iter().map(|x| x.width()).max(), Some(w));
        prop_assert_eq!(prod.constituents().iter().map(|x| x.length()).max(), Some(l));
    }

    #[test]
    fn lr_is_symmetric(beta in partition(5), gamma in partition(5)) {
        let a = outer_product_expand(&beta, &gamma);
        prop_assert_eq!(&a, &outer_product_expand(&gamma, &beta));
        for (alpha, c) in a.iter() {
            prop_assert_eq!(c as u64, lr_coefficient(alpha, &beta, &gamma));
        }
        let dim: u128 = a.iter().map(|(l, c)| c as u128 * degree(l).to_u128().unwrap()).sum();
        // dim of the induced module is binom(n, |β|)·f^β·f^γ
        let n = beta.size() + gamma.size();
        let binom = (0..beta.size()).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
        prop_assert_eq!(dim, binom * degree(&beta).to_u128().unwrap() * degree(&gamma).to_u128().unwrap());
    }

    #[test]
    fn skew_degree_counts_tableaux((outer, k) in (partition(9), 0usize..1000)) {
        let inners: Vec<Partition> = (0..=outer.size())
            .flat_map(|s| kronlab::partition::partitions_inside(s, &outer))
            .collect();
        let inner = inners[k % inners.len()].clone();
        let shape = SkewShape::new(outer, inner).unwrap();
        let dec = skew_decompose(&shape);
        let dim: u128 = dec.iter().map(|(l, c)| c as u128 * degree(l).to_u128().unwrap()).sum();
        prop_assert_eq!(dim, skew_syt_count(&shape));
    }
}
