//! End-to-end certificate behavior: searches at two winding numbers, the
//! wide surgery-coefficient sweep, serialization round-trips, and invariance
//! of every verdict under a change of surface basis.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use concord_core::branched::{dbc_homology, determinant, moebius_obstruction};
use concord_core::catalog::{full_catalog, parse_knot_spec, SeifertMatrix};
use concord_core::matrix::IntMatrix;
use concord_core::obstruct::{
    certify_nonslice_with, lambda_sweep, search_seed_knot_with, NonSliceCertificate,
};
use concord_core::root::RootOfUnity;
use concord_core::signature::lt_signature;

#[test]
fn winding_five_certificate_survives_a_wide_sweep() {
    let j = parse_knot_spec("sum:12*t2k:3:r+6*t2k:7:l").unwrap();
    let cert = certify_nonslice_with(5, &j, -50..=50).unwrap().expect("certificate");
    assert_eq!(cert.transcript.rows.len(), 101);
    for row in &cert.transcript.rows {
        assert!(row.contradiction, "no contradiction at lambda = {}", row.lambda);
    }
    cert.check().unwrap();
}

/// At w = 25 the search exploits order-25 characters: T(2,7) already jumps
/// at 2/25 (its first crossing 1/14 < 2/25) while T(2,5) is still flat
/// (first crossing 1/10 > 2/25), so 26 left T(2,7) supply +52 > 2w there;
/// at 8/25 both have jumped twice and the 39 right T(2,5) dominate with
/// -156 + 104 = -52 < -2w. Total 65 summands, smaller than any witness
/// available from order-5 characters alone (those need 78).
#[test]
fn winding_twentyfive_search_uses_order_twentyfive_characters() {
    let (desc, cert) = search_seed_knot_with(25, 80, -3..=3)
        .unwrap()
        .expect("seed exists within budget");
    assert_eq!(desc.expression(), "sum:39*t2k:5:r+26*t2k:7:l");
    assert_eq!(cert.w, 25);
    assert_eq!(cert.d, 25);
    assert_eq!((cert.zeta1, cert.zeta2), (
        RootOfUnity::new(25, 2).unwrap(),
        RootOfUnity::new(25, 8).unwrap(),
    ));
    assert_eq!((cert.sigma1, cert.sigma2), (52, -52));
    cert.check().unwrap();

    // Cross-check both certifying values against the closed-form crossing
    // counts: sigma = -2m |{j : (2j-1)/10 < p/25}| + 2n |{j : (2j-1)/14 < p/25}|.
    let crossings = |two_k: u64, p: u64| {
        (1..=(two_k / 2 - 1) / 2).filter(|j| (2 * j - 1) * 25 < two_k * p).count() as i64
    };
    for (p, want) in [(2u64, 52i64), (8, -52)] {
        let oracle = -2 * 39 * crossings(10, p) + 2 * 26 * crossings(14, p);
        assert_eq!(oracle, want, "closed form disagrees at p = {p}");
        let v = lt_signature(&desc.knot(), RootOfUnity::new(25, p as u32).unwrap()).unwrap();
        assert_eq!((v.sigma, v.eta), (want, 0), "engine disagrees at p = {p}");
    }
}

#[test]
fn certificates_round_trip_through_json() {
    let j = parse_knot_spec("sum:12*t2k:3:r+6*t2k:7:l").unwrap();
    let cert = certify_nonslice_with(5, &j, -3..=3).unwrap().expect("certificate");
    let text = serde_json::to_string(&cert).unwrap();
    let back: NonSliceCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
    back.check().unwrap();
}

/// A change of Seifert-surface basis replaces A by P^T A P with P
/// unimodular. Every invariant downstream must not move.
#[test]
fn verdicts_are_basis_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let points: Vec<RootOfUnity> = [(2u32, 1u32), (5, 2), (12, 5)]
        .iter()
        .map(|&(d, p)| RootOfUnity::new(d, p).unwrap())
        .collect();
    for j in full_catalog() {
        if j.size() == 0 {
            continue;
        }
        let n = j.size();
        // random product of elementary matrices, det +-1 by construction
        let mut p = IntMatrix::identity(n);
        for _ in 0..3 * n {
            let mut e = IntMatrix::identity(n);
            let r = rng.random_range(0..n);
            let mut s = rng.random_range(0..n);
            if n > 1 {
                while s == r {
                    s = rng.random_range(0..n);
                }
                e.set(r, s, BigInt::from(rng.random_range(-2i64..=2)));
            }
            p = p.mul(&e);
        }
        let a2 = p.transpose().mul(j.matrix()).mul(&p);
        let j2 = SeifertMatrix::new(a2, Some(format!("{}-rebased", j.name()))).unwrap();

        assert_eq!(determinant(&j2), determinant(&j), "{}", j.name());
        assert_eq!(
            dbc_homology(&j2).nontrivial_factors(),
            dbc_homology(&j).nontrivial_factors(),
            "{}",
            j.name()
        );
        assert_eq!(
            moebius_obstruction(&j2).unwrap(),
            moebius_obstruction(&j).unwrap(),
            "{}",
            j.name()
        );
        for &zeta in &points {
            let a = lt_signature(&j, zeta).unwrap();
            let b = lt_signature(&j2, zeta).unwrap();
            assert_eq!((a.sigma, a.eta), (b.sigma, b.eta), "{} at {zeta}", j.name());
        }
    }
}

#[test]
fn transcripts_report_every_row_with_exact_windows() {
    let sweep = lambda_sweep(5, -2..=2, 5, 12, -12).unwrap();
    assert_eq!(sweep.rows.len(), 5);
    for row in &sweep.rows {
        assert_eq!(row.f, -10 * row.lambda);
        assert!(row.contradiction);
    }
    let json = serde_json::to_string(&sweep).unwrap();
    let back: concord_core::obstruct::LambdaSweep = serde_json::from_str(&json).unwrap();
    assert_eq!(back, sweep);
}
