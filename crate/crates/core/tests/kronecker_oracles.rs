use kronlab::kronecker::{dvir_coefficient, kron_coefficient};
use kronlab::partitions_of;

#[test]
fn dvir_matches_table_up_to_8() {
    for n in 0..=8 {
        let ps = partitions_of(n);
        for mu in &ps {
            for nu in &ps {
                for lambda in &ps {
                    assert_eq!(
                        dvir_coefficient(mu, nu, lambda).unwrap(),
                        kron_coefficient(mu, nu, lambda).unwrap(),
                        "{mu} {nu} {lambda}"
                    );
                }
            }
        }
    }
}
