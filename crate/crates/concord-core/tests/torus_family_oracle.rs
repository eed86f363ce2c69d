//! Closed-form oracles for the two torus-knot families in the catalog,
//! checked against the exact-arithmetic engine at every rational point of
//! order up to 20, including the jump points where the form degenerates.
//!
//! For T(2,k) the form's eigenvalue crossings sit at (2j-1)/(2k) with
//! j = 1..(k-1)/2, each dropping the signature by 2 on the right-handed
//! knot. At a crossing the matrix has a one-dimensional kernel and the
//! signature takes the midpoint value. T(3,5) has crossings at m/15 for
//! m in {1,2,4,7} (and conjugates), again all simple and all downward.

use concord_core::catalog::{knot_10_124, torus_knot_2k, Handedness};
use concord_core::root::RootOfUnity;
use concord_core::signature::lt_signature;

/// (sigma, eta) of T(2,k) right-handed at p/d, from the crossing pattern
/// alone. Works at crossings too.
fn t2k_oracle(k: u64, d: u64, p: u64) -> (i64, usize) {
    let (p, d) = if 2 * p > d { (d - p, d) } else { (p, d) };
    let mut below = 0i64;
    let mut exact = 0usize;
    for j in 1..=(k - 1) / 2 {
        // compare (2j-1)/(2k) with p/d exactly
        let lhs = (2 * j - 1) * d;
        let rhs = 2 * k * p;
        if lhs < rhs {
            below += 1;
        } else if lhs == rhs {
            exact = 1;
        }
    }
    (-2 * below - exact as i64, exact)
}

/// Same for T(3,5) right-handed, crossings at {1,2,4,7}/15.
fn t35_oracle(d: u64, p: u64) -> (i64, usize) {
    let (p, d) = if 2 * p > d { (d - p, d) } else { (p, d) };
    let mut below = 0i64;
    let mut exact = 0usize;
    for m in [1u64, 2, 4, 7] {
        let lhs = m * d;
        let rhs = 15 * p;
        if lhs < rhs {
            below += 1;
        } else if lhs == rhs {
            exact = 1;
        }
    }
    (-2 * below - exact as i64, exact)
}

fn engine(j: &concord_core::catalog::SeifertMatrix, d: u32, p: u32) -> (i64, usize) {
    let v = lt_signature(j, RootOfUnity::new(d, p).unwrap()).unwrap();
    (v.sigma, v.eta)
}

#[test]
fn t2k_family_matches_closed_form_everywhere() {
    for k in [3u32, 5, 7, 9, 11, 15] {
        let right = torus_knot_2k(k, Handedness::Right).unwrap();
        let left = torus_knot_2k(k, Handedness::Left).unwrap();
        for d in 2u32..=20 {
            for p in 1..d {
                let want = t2k_oracle(k as u64, d as u64, p as u64);
                let got = engine(&right, d, p);
                assert_eq!(got, want, "T(2,{k}) right at ({d},{p})");
                let got = engine(&left, d, p);
                assert_eq!(got, (-want.0, want.1), "T(2,{k}) left at ({d},{p})");
            }
        }
    }
}

#[test]
fn t2k_crossings_have_unit_nullity_only_at_alexander_roots() {
    // eta = 1 exactly when p/d reduces to an odd multiple of 1/(2k)
    // other than 1/2; spot the full pattern for k = 7 at d = 14.
    let j = torus_knot_2k(7, Handedness::Right).unwrap();
    for p in 1..14u32 {
        let (_, eta) = engine(&j, 14, p);
        let expected = usize::from(p % 2 == 1 && p != 7);
        assert_eq!(eta, expected, "T(2,7) at (14,{p})");
    }
}

#[test]
fn t35_matches_closed_form_everywhere() {
    let right = knot_10_124(Handedness::Right);
    let left = knot_10_124(Handedness::Left);
    for d in 2u32..=20 {
        for p in 1..d {
            let want = t35_oracle(d as u64, p as u64);
            let got = engine(&right, d, p);
            assert_eq!(got, want, "T(3,5) right at ({d},{p})");
            let got = engine(&left, d, p);
            assert_eq!(got, (-want.0, want.1), "T(3,5) left at ({d},{p})");
        }
    }
}

#[test]
fn t35_degenerates_exactly_at_order_fifteen_primitives() {
    let j = knot_10_124(Handedness::Right);
    let mut seen = Vec::new();
    for p in 1..15u32 {
        let (sigma, eta) = engine(&j, 15, p);
        if eta > 0 {
            seen.push((p, sigma, eta));
        }
    }
    assert_eq!(
        seen,
        vec![
            (1, -1, 1),
            (2, -3, 1),
            (4, -5, 1),
            (7, -7, 1),
            (8, -7, 1),
            (11, -5, 1),
            (13, -3, 1),
            (14, -1, 1),
        ]
    );
}
