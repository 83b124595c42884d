//! The triple test against direct enumeration of multiplicity vectors, on
//! every domain of at most six orders over at most four alternatives.
//! Relabelling alternatives maps domains onto each other, so over four
//! alternatives only domains containing the identity order are visited.

mod common;

use median_voting::domain::{condorcet_oracle, is_condorcet_domain};
use median_voting::order::LinearOrder;

use common::{all_orders, subsets};

fn compare(domain: &[LinearOrder]) {
    assert_eq!(
        is_condorcet_domain(domain),
        condorcet_oracle(domain, 5),
        "domain {:?}",
        domain.iter().map(|r| r.to_string()).collect::<Vec<_>>()
    );
}

#[test]
fn triple_test_matches_oracle_up_to_three_alternatives() {
    for m in 1..=3 {
        let orders = all_orders(m);
        for size in 1..=6.min(orders.len()) {
            for s in subsets(orders.len(), size) {
                compare(&s.iter().map(|&i| orders[i].clone()).collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn triple_test_matches_oracle_on_four_alternatives() {
    let orders = all_orders(4);
    let (identity, rest) = orders.split_first().unwrap();
    let mut count = 0;
    let mut condorcet = 0;
    for size in 0..=5 {
        for s in subsets(rest.len(), size) {
            let mut domain = vec![identity.clone()];
            domain.extend(s.iter().map(|&i| rest[i].clone()));
            compare(&domain);
            count += 1;
            condorcet += usize::from(is_condorcet_domain(&domain));
        }
    }
    assert_eq!(count, 1 + 23 + 253 + 1771 + 8855 + 33649);
    assert!(condorcet > 0 && condorcet < count);
}
