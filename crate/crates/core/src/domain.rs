//! Condorcet-domain verification.
//!
//! [`is_condorcet_domain`] uses the triple test: a set of linear orders is a
//! Condorcet domain iff no triple of alternatives carries a full cyclic set
//! (`xyz, yzx, zxy` or its reverse) among the restrictions of the domain.
//! [`condorcet_oracle`] checks the defining property directly on every
//! multiplicity vector up to a bound and serves as the cross-check.

use crate::order::LinearOrder;
use crate::profile::MajorityRelation;

/// Triple test. An empty domain is vacuously a Condorcet domain.
pub fn is_condorcet_domain(domain: &[LinearOrder]) -> bool {
    let Some(first) = domain.first() else {
        return true;
    };
    let m = first.m();
    for x in 0..m {
        for y in x + 1..m {
            for z in y + 1..m {
                // Bit i of `seen` marks the restriction pattern i of {x, y, z}.
                let mut seen = 0u8;
                for r in domain {
                    seen |= 1 << restriction_pattern(r, x, y, z);
                }
                if seen & CYCLE_FORWARD == CYCLE_FORWARD || seen & CYCLE_BACKWARD == CYCLE_BACKWARD {
                    return false;
                }
            }
        }
    }
    true
}

// Patterns index the six orders of (x, y, z):
// 0 xyz, 1 xzy, 2 yxz, 3 yzx, 4 zxy, 5 zyx.
const CYCLE_FORWARD: u8 = 1 << 0 | 1 << 3 | 1 << 4;
const CYCLE_BACKWARD: u8 = 1 << 1 | 1 << 5 | 1 << 2;

fn restriction_pattern(r: &LinearOrder, x: usize, y: usize, z: usize) -> u8 {
    let (px, py, pz) = (r.position(x), r.position(y), r.position(z));
    match (px < py, py < pz, px < pz) {
        (true, true, _) => 0,
        (true, false, true) => 1,
        (false, _, true) => 2,
        (false, true, false) => 3,
        (true, false, false) => 4,
        (false, false, _) => 5,
    }
}

/// Enumerates every multiplicity vector over `domain` with total weight in
/// `1..=max_total` and checks that the strict majority relation is
/// transitive for each.
pub fn condorcet_oracle(domain: &[LinearOrder], max_total: u32) -> bool {
    let d = domain.len();
    if d == 0 {
        return true;
    }
    let m = domain[0].m();
    // Per-order pair contributions, as flat m*m indicator vectors.
    let prefs: Vec<Vec<u64>> = domain
        .iter()
        .map(|r| {
            let mut v = vec![0u64; m * m];
            for a in 0..m {
                for b in 0..m {
                    if a != b && r.prefers(a, b) {
                        v[a * m + b] = 1;
                    }
                }
            }
            v
        })
        .collect();
    let mut counts = vec![0u64; m * m];
    let mut mult = vec![0u32; d];
    let mut total = 0u32;
    // Odometer over multiplicity vectors with total <= max_total.
    loop {
        let mut i = 0;
        loop {
            if i == d {
                return true;
            }
            if total < max_total {
                mult[i] += 1;
                total += 1;
                for (c, p) in counts.iter_mut().zip(&prefs[i]) {
                    *c += p;
                }
                break;
            }
            total -= mult[i];
            for (c, p) in counts.iter_mut().zip(&prefs[i]) {
                *c -= p * mult[i] as u64;
            }
            mult[i] = 0;
            i += 1;
        }
        if !MajorityRelation::from_counts(m, &counts).is_strict_transitive() {
            return false;
        }
    }
}
