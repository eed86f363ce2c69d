//! Deterministic replay of the library's anchor computations: frozen example
//! values and the seven quantified verification suites. Reports carry no
//! timing or environment data, so output depends only on the seed and the
//! lambda range.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::branched::{
    dbc_homology, determinant, linking_form, moebius_obstruction, nonorientable_genus_upper_bound,
    MoebiusVerdict,
};
use crate::catalog::{
    connected_sum, figure_eight, full_catalog, knot_10_124, mirror, reverse, torus_knot_2k,
    unknot, Handedness, SeifertMatrix,
};
use crate::cyclotomic::CycNum;
use crate::hermitian::{
    certified_signature, signature_via_char_poly, signature_via_intervals, CyclotomicHermitian,
};
use crate::matrix::IntMatrix;
use crate::obstruct::{
    certify_nonslice, certify_nonslice_with, f_bound_exhaustive_check, f_value, lambda_sweep,
    search_seed_knot_with, signature_window, signature_window_mirrored, SeedDescription,
};
use crate::root::RootOfUnity;
use crate::signature::{cable_21_signature, lt_signature};
use crate::smith::smith_normal_form;
use crate::surgery::{boundary_presentation, framing_constraint, h1_of_presentation};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_LAMBDA_RANGE: (i64, i64) = (-3, 3);

/// One named check with a deterministic detail line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproduceReport {
    pub version: String,
    pub seed: u64,
    pub lambda_range: (i64, i64),
    pub checks: Vec<CheckItem>,
    pub passed: bool,
}

impl ReproduceReport {
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        writeln!(s, "reproduce report").unwrap();
        writeln!(s, "version: {}", self.version).unwrap();
        writeln!(s, "seed: {}", self.seed).unwrap();
        writeln!(s, "lambda range: [{}, {}]", self.lambda_range.0, self.lambda_range.1).unwrap();
        writeln!(s, "checks:").unwrap();
        for c in &self.checks {
            let tag = if c.passed { "pass" } else { "FAIL" };
            writeln!(s, "  [{tag}] {}: {}", c.name, c.detail).unwrap();
        }
        let n_pass = self.checks.iter().filter(|c| c.passed).count();
        writeln!(
            s,
            "result: {} ({n_pass}/{} checks)",
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len()
        )
        .unwrap();
        s
    }
}

/// Collects violations; empty means the check passed.
struct Tally {
    name: &'static str,
    violations: Vec<String>,
    summary: String,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally { name, violations: Vec::new(), summary: String::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.violations.len() < 5 {
            self.violations.push(what());
        } else if !ok {
            self.violations.push("...".to_string());
        }
    }

    fn finish(mut self, summary: String) -> CheckItem {
        self.violations.dedup();
        let passed = self.violations.is_empty();
        self.summary = if passed {
            summary
        } else {
            format!("{summary}; violations: {}", self.violations.join(" | "))
        };
        CheckItem { name: self.name.to_string(), passed, detail: self.summary }
    }
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn zeta(d: u32, p: u32) -> RootOfUnity {
    RootOfUnity::new(d, p).expect("valid root parameters")
}

fn sig(j: &SeifertMatrix, d: u32, p: u32) -> (i64, usize) {
    let v = lt_signature(j, zeta(d, p)).expect("signature evaluation");
    (v.sigma, v.eta)
}

/// Closed-form count of Levine-Tristram jumps of T(2,k) passed by p/d:
/// sigma = -2 |{ j in [1,(k-1)/2] : (2j-1)/(2k) < p/d }| for the right-handed
/// knot, negated for the left-handed one. Independent of the matrix engine.
pub fn torus_2k_signature_oracle(k: u32, hand: Handedness, d: u64, p: u64) -> i64 {
    let (p, d) = if 2 * p > d { (d - p, d) } else { (p, d) };
    let mut count = 0i64;
    for j in 1..=(k as u64 - 1) / 2 {
        // (2j-1)/(2k) < p/d  <=>  (2j-1) d < 2 k p
        if (2 * j - 1) * d < 2 * k as u64 * p {
            count += 1;
        }
    }
    match hand {
        Handedness::Right => -2 * count,
        Handedness::Left => 2 * count,
    }
}

/// Frozen Smith-form examples.
pub fn check_smith_examples() -> CheckItem {
    let mut t = Tally::new("smith normal form examples");
    let cases: [(&[&[i64]], &[i64]); 4] = [
        (&[&[1, 0], &[0, 1]], &[1, 1]),
        (&[&[2, 0], &[0, 3]], &[1, 6]),
        (&[&[5, 0], &[-10, 5]], &[5, 5]),
        (&[&[4, 0], &[0, 6]], &[2, 12]),
    ];
    for (rows, want) in cases {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        let m = IntMatrix::from_rows_i64(&rows).unwrap();
        let s = smith_normal_form(&m);
        let got = s.diagonal();
        let want: Vec<BigInt> = want.iter().map(|&v| BigInt::from(v)).collect();
        t.expect(got == want, || format!("smith{rows:?} gave {got:?}"));
    }
    t.finish("4 frozen diagonals".to_string())
}

/// Frozen signature values and cable reductions.
pub fn check_signature_examples() -> CheckItem {
    let mut t = Tally::new("signature examples");
    let t3 = torus_knot_2k(3, Handedness::Right).unwrap();
    let t5 = torus_knot_2k(5, Handedness::Right).unwrap();
    let cases: [(&SeifertMatrix, u32, u32, (i64, usize)); 7] = [
        (&t3, 2, 1, (-2, 0)),
        (&t5, 5, 1, (-2, 0)),
        (&t5, 5, 2, (-4, 0)),
        (&figure_eight(), 2, 1, (0, 0)),
        (&knot_10_124(Handedness::Right), 2, 1, (-8, 0)),
        (&unknot(), 7, 3, (0, 0)),
        (&t3, 6, 1, (-1, 1)),
    ];
    for (j, d, p, want) in cases {
        let got = sig(j, d, p);
        t.expect(got == want, || format!("{} at ({d},{p}) gave {got:?}", j.name()));
    }
    let cable = cable_21_signature(&t3, zeta(8, 1)).unwrap();
    let direct = lt_signature(&t3, zeta(4, 1)).unwrap();
    t.expect(cable == direct, || "cable at (8,1) differs from (4,1)".to_string());
    let degenerate = cable_21_signature(&t3, zeta(2, 1)).unwrap();
    t.expect(
        (degenerate.sigma, degenerate.eta) == (0, 0),
        || "cable at (2,1) not 0".to_string(),
    );
    t.finish("7 frozen values at exact roots, 2 cable reductions".to_string())
}

/// Frozen window, F, homology, branched-cover, and crosscap examples.
pub fn check_pipeline_examples() -> CheckItem {
    let mut t = Tally::new("pipeline examples");

    let w = signature_window(5, 0, 12);
    t.expect(
        (w.lower.clone(), w.upper.clone()) == (rat(3, 1), rat(21, 1)),
        || format!("window(5,0,12) = {w}"),
    );
    let w = signature_window(5, -10, 12);
    t.expect(
        (w.lower.clone(), w.upper.clone()) == (rat(-7, 1), rat(21, 1)),
        || format!("window(5,-10,12) = {w}"),
    );
    let w = signature_window_mirrored(5, 0, 12);
    t.expect(
        (w.lower.clone(), w.upper.clone()) == (rat(-2, 1), rat(21, 1)),
        || format!("mirrored(5,0,12) = {w}"),
    );
    let w = signature_window_mirrored(5, 20, 12);
    t.expect(
        (w.lower.clone(), w.upper.clone()) == (rat(3, 1), rat(36, 1)),
        || format!("mirrored(5,20,12) = {w}"),
    );

    t.expect(f_value(5, 0, 5, 1, 1).unwrap() == rat(-9, 5), || "F(5,0,5,1,1)".to_string());
    t.expect(f_value(1, 0, 2, 1, 1).unwrap() == rat(0, 1), || "F(1,0,2,1,1)".to_string());
    let r = f_bound_exhaustive_check(5, -10, 5).unwrap();
    t.expect(
        r.holds && r.lower == rat(-15, 1) && r.upper == rat(5, 1),
        || "fbound(5,-10,5)".to_string(),
    );
    let r = f_bound_exhaustive_check(-3, 7, 4).unwrap();
    t.expect(r.holds, || "fbound(-3,7,4)".to_string());

    t.expect(framing_constraint(5, 1) == -10, || "framing(5,1)".to_string());
    t.expect(framing_constraint(7, -3) == 42, || "framing(7,-3)".to_string());
    let h1 = |w, f| h1_of_presentation(&boundary_presentation(w, f).unwrap());
    let factors = |w, f| {
        h1(w, f).nontrivial_factors().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    };
    t.expect(factors(5, -10) == "5,5", || format!("h1(5,-10) = {}", factors(5, -10)));
    t.expect(factors(5, 1) == "25", || format!("h1(5,1) = {}", factors(5, 1)));
    t.expect(factors(1, -2).is_empty(), || format!("h1(1,-2) = {}", factors(1, -2)));
    t.expect(factors(6, 0) == "6,6", || format!("h1(6,0) = {}", factors(6, 0)));

    t.expect(determinant(&unknot()) == BigInt::from(1), || "det(unknot)".to_string());
    t.expect(determinant(&figure_eight()) == BigInt::from(5), || "det(fig8)".to_string());
    t.expect(
        determinant(&knot_10_124(Handedness::Right)) == BigInt::from(1),
        || "det(10_124)".to_string(),
    );
    let t3 = torus_knot_2k(3, Handedness::Right).unwrap();
    let dbc = dbc_homology(&t3);
    t.expect(dbc.nontrivial_factors() == vec![BigInt::from(3)], || "dbc(trefoil)".to_string());
    let lk = linking_form(&figure_eight()).unwrap();
    t.expect(
        lk.self_link == rat(2, 5) || lk.self_link == rat(3, 5),
        || format!("lk(fig8) = {}", lk.self_link),
    );

    for (w, want) in [(1i64, 0u64), (5, 2), (-7, 3)] {
        t.expect(
            nonorientable_genus_upper_bound(w).unwrap() == want,
            || format!("crosscap bound at w = {w}"),
        );
    }
    t.expect(nonorientable_genus_upper_bound(4).is_err(), || "even w accepted".to_string());

    t.finish("windows, F, homology, covers, crosscap".to_string())
}

/// Criterion suite: strict F bounds on the full (a, f, d) box.
pub fn check_f_bounds_box() -> CheckItem {
    let mut t = Tally::new("F bound box (a in [-10,10], f in [-20,20], d in [2,40])");
    let mut triples = Vec::new();
    for a in -10i64..=10 {
        if a == 0 {
            continue;
        }
        for f in -20i64..=20 {
            for d in 2u64..=40 {
                triples.push((a, f, d));
            }
        }
    }
    let bad: Vec<String> = triples
        .par_iter()
        .filter_map(|&(a, f, d)| {
            let r = f_bound_exhaustive_check(a, f, d).expect("in-scope parameters");
            if r.holds {
                None
            } else {
                Some(format!("violation at (a,f,d) = ({a},{f},{d})"))
            }
        })
        .collect();
    let cells: u64 = triples.iter().map(|&(_, _, d)| (d - 1) * (d - 1)).sum();
    for b in &bad {
        t.expect(false, || b.clone());
    }
    t.finish(format!("{} grids, {cells} cells, all strict", triples.len()))
}

/// Criterion suite: boundary homology is (Z/w)^2 with both generators of
/// full order, for w in [1,50] and lambda in [-5,5].
pub fn check_boundary_homology_box() -> CheckItem {
    let mut t = Tally::new("boundary homology box (w in [1,50], lambda in [-5,5])");
    let mut count = 0u32;
    for w in 1i64..=50 {
        for lambda in -5i64..=5 {
            let f = framing_constraint(w, lambda);
            let g = h1_of_presentation(&boundary_presentation(w, f).unwrap());
            count += 1;
            let want: Vec<BigInt> = if w == 1 {
                vec![]
            } else {
                vec![BigInt::from(w), BigInt::from(w)]
            };
            t.expect(
                g.nontrivial_factors() == want,
                || format!("group at (w,lambda) = ({w},{lambda}) is {g}"),
            );
            for j in 0..2 {
                t.expect(
                    g.order_of_generator(j) == BigInt::from(w),
                    || format!("generator {j} at (w,lambda) = ({w},{lambda}) has wrong order"),
                );
            }
        }
    }
    t.finish(format!("{count} presentations, all (Z/w)^2 with full-order generators"))
}

/// Criterion suite: Moebius-band verdicts.
pub fn check_moebius_verdicts() -> CheckItem {
    let mut t = Tally::new("Moebius verdicts");
    let fig8 = figure_eight();
    t.expect(
        moebius_obstruction(&fig8).unwrap() == MoebiusVerdict::Obstructed,
        || "fig8 not obstructed".to_string(),
    );
    for hand in [Handedness::Right, Handedness::Left] {
        let j = connected_sum(&fig8, &knot_10_124(hand));
        let lk = linking_form(&j).unwrap();
        t.expect(lk.n == BigInt::from(5), || format!("order after det-1 sum is {}", lk.n));
        t.expect(
            moebius_obstruction(&j).unwrap() == MoebiusVerdict::Obstructed,
            || "fig8 # 10_124 not obstructed".to_string(),
        );
    }
    let t3 = torus_knot_2k(3, Handedness::Right).unwrap();
    t.expect(
        moebius_obstruction(&t3).unwrap() == MoebiusVerdict::NotObstructed,
        || "trefoil obstructed".to_string(),
    );
    t.expect(
        matches!(moebius_obstruction(&unknot()).unwrap(), MoebiusVerdict::Inapplicable { .. }),
        || "unknot verdict not inapplicable".to_string(),
    );
    t.finish("fig8 obstructed, det-1 sums obstructed at n = 5, trefoil clear".to_string())
}

/// Criterion suite: the w = 5 certificate search and the frozen regression
/// candidate, cross-checked against the closed-form torus jump oracle.
pub fn check_seed_certificate(lambdas: std::ops::RangeInclusive<i64>) -> CheckItem {
    let mut t = Tally::new("w = 5 seed certificate");
    match search_seed_knot_with(5, 40, lambdas.clone()) {
        Ok(Some((desc, cert))) => {
            t.expect(cert.d == 5, || format!("certificate order {}", cert.d));
            t.expect(
                cert.zeta1.is_primitive() && cert.zeta2.is_primitive(),
                || "roots not primitive".to_string(),
            );
            t.expect(
                cert.sigma1 > 10 && cert.sigma2 < -10,
                || format!("sigmas ({}, {}) inside band", cert.sigma1, cert.sigma2),
            );
            t.expect(cert.check().is_ok(), || "certificate re-check failed".to_string());
            t.expect(
                desc.expression() == "sum:12*t2k:3:r+6*t2k:7:l",
                || format!("search winner changed: {}", desc.expression()),
            );
        }
        other => t.expect(false, || format!("search(5, 40) gave {other:?}")),
    }

    // Regression candidate: 12 T(2,5) + 18 mirrored T(2,3). Verify its
    // certifying signatures against the jump-count oracle before trusting
    // the certificate.
    let candidate = SeedDescription {
        m: 12,
        k1: 5,
        hand1: Handedness::Right,
        n: 18,
        k2: 3,
        hand2: Handedness::Left,
    };
    for p in [1u64, 2] {
        let oracle = 12 * torus_2k_signature_oracle(5, Handedness::Right, 5, p)
            + 18 * torus_2k_signature_oracle(3, Handedness::Left, 5, p);
        let engine = sig(&candidate.knot(), 5, p as u32).0;
        t.expect(oracle == engine, || {
            format!("oracle {oracle} vs engine {engine} at (5,{p}) for {candidate}")
        });
    }
    match certify_nonslice_with(5, &candidate.knot(), lambdas) {
        Ok(Some(cert)) => {
            t.expect(
                (cert.zeta1, cert.zeta2) == (zeta(5, 1), zeta(5, 2)),
                || format!("candidate roots ({}, {})", cert.zeta1, cert.zeta2),
            );
            t.expect(
                (cert.sigma1, cert.sigma2) == (12, -12),
                || format!("candidate sigmas ({}, {})", cert.sigma1, cert.sigma2),
            );
        }
        other => t.expect(false, || format!("candidate certification gave {other:?}")),
    }
    t.finish("search winner frozen; regression candidate oracle-verified".to_string())
}

/// Criterion suite: winding numbers 1 and 3 yield no certificates, and the
/// w = 1 window control never excludes [-1, 1].
pub fn check_low_winding_consistency() -> CheckItem {
    let mut t = Tally::new("winding number 1 and 3 consistency");
    for j in full_catalog() {
        for w in [1u64, 3] {
            match certify_nonslice(w, &j) {
                Ok(None) => {}
                other => t.expect(false, || format!("w = {w}, {}: {other:?}", j.name())),
            }
        }
    }
    let control = lambda_sweep(1, -50..=50, 5, 0, 0).unwrap();
    for row in &control.rows {
        for wm in [
            &row.coprime_at_zeta1,
            &row.coprime_at_zeta2,
            &row.mirrored_at_zeta1,
            &row.mirrored_at_zeta2,
        ] {
            t.expect(
                !wm.excludes_pm_one && wm.window.covers_pm_one(),
                || format!("w = 1 window at lambda = {} escapes", row.lambda),
            );
        }
    }
    let w3 = crate::obstruct::search_seed_knot(3, 10);
    t.expect(
        matches!(w3, Err(crate::Error::Inapplicable(_))),
        || "w = 3 seed search not inapplicable".to_string(),
    );
    t.finish(format!(
        "{} catalog knots empty at w = 1 and 3; 101-lambda control window covers [-1,1]",
        full_catalog().len()
    ))
}

/// Criterion suite: signature symmetry laws over the catalog at all orders
/// d <= 24.
pub fn check_signature_symmetries() -> CheckItem {
    let mut t = Tally::new("signature symmetries (catalog, d <= 24)");
    let catalog = full_catalog();
    let points: Vec<(u32, u32)> =
        (2u32..=24).flat_map(|d| (1..d).map(move |p| (d, p))).collect();

    // Unknot vanishes; mirror negates; reverse and conjugation fix.
    let per_knot: Vec<String> = catalog
        .par_iter()
        .flat_map(|j| {
            let m = mirror(j);
            let r = reverse(j);
            points
                .par_iter()
                .filter_map(|&(d, p)| {
                    let (s, eta) = sig(j, d, p);
                    let (sm, em) = sig(&m, d, p);
                    let (sr, er) = sig(&r, d, p);
                    let (sc, ec) = sig(j, d, d - p);
                    if (sm, em) != (-s, eta) {
                        Some(format!("mirror law fails for {} at ({d},{p})", j.name()))
                    } else if (sr, er) != (s, eta) {
                        Some(format!("reverse law fails for {} at ({d},{p})", j.name()))
                    } else if (sc, ec) != (s, eta) {
                        Some(format!("conjugation law fails for {} at ({d},{p})", j.name()))
                    } else {
                        None
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    for v in per_knot {
        t.expect(false, || v);
    }
    for &(d, p) in &points {
        let (s, eta) = sig(&unknot(), d, p);
        t.expect((s, eta) == (0, 0), || format!("unknot at ({d},{p})"));
    }

    // Additivity over unordered catalog pairs.
    let mut pairs = Vec::new();
    for i in 0..catalog.len() {
        for k in i..catalog.len() {
            pairs.push((i, k));
        }
    }
    let additivity: Vec<String> = pairs
        .par_iter()
        .flat_map(|&(i, k)| {
            let s = connected_sum(&catalog[i], &catalog[k]);
            points
                .par_iter()
                .filter_map(|&(d, p)| {
                    let lhs = sig(&s, d, p).0;
                    let rhs = sig(&catalog[i], d, p).0 + sig(&catalog[k], d, p).0;
                    (lhs != rhs).then(|| {
                        format!(
                            "additivity fails for {} # {} at ({d},{p})",
                            catalog[i].name(),
                            catalog[k].name()
                        )
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    for v in additivity {
        t.expect(false, || v);
    }

    t.finish(format!(
        "{} knots, {} points, {} sum pairs: mirror/reverse/conjugation/additivity exact",
        catalog.len(),
        points.len(),
        pairs.len()
    ))
}

/// Criterion suite: certified signatures against an independent
/// high-precision interval evaluation on seeded random congruences of known
/// inertia.
pub fn check_interval_crosscheck(seed: u64) -> CheckItem {
    let mut t = Tally::new("interval cross-check (200 seeded instances)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agreements = 0u32;
    for case in 0..200u32 {
        let n = rng.random_range(1..=6usize);
        let d = rng.random_range(2..=12u32);

        // Diagonal of known inertia.
        let mut pos = 0i64;
        let mut neg = 0i64;
        let diag: Vec<BigRational> = (0..n)
            .map(|_| {
                let mut num = 0i64;
                while num == 0 {
                    num = rng.random_range(-6..=6i64);
                }
                if num > 0 {
                    pos += 1;
                } else {
                    neg += 1;
                }
                rat(num, rng.random_range(1..=4i64))
            })
            .collect();
        let mut h = CyclotomicHermitian::from_fn(d, n, |i, j| {
            if i == j {
                CycNum::from_rational(d, &diag[i])
            } else {
                CycNum::zero(d)
            }
        })
        .expect("diagonal form");

        // Random invertible congruences: transvections I + c E_{ij}.
        for _ in 0..rng.random_range(n..=2 * n) {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n);
            if n == 1 {
                continue;
            }
            while j == i {
                j = rng.random_range(0..n);
            }
            let mut c = 0i64;
            while c == 0 {
                c = rng.random_range(-2..=2i64);
            }
            let e = rng.random_range(0..d as i64);
            let coeff = CycNum::root_power(d, e).scale_int(c);
            let p: Vec<Vec<CycNum>> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|s| {
                            if r == s {
                                CycNum::one(d)
                            } else if (r, s) == (i, j) {
                                coeff.clone()
                            } else {
                                CycNum::zero(d)
                            }
                        })
                        .collect()
                })
                .collect();
            h = h.congruence(&p).expect("transvection congruence");
        }

        let truth = (pos - neg, 0usize);
        let certified = certified_signature(&h).expect("certified signature");
        let char_poly = signature_via_char_poly(&h).expect("characteristic polynomial route");
        let interval = signature_via_intervals(&h, 768)
            .or_else(|| signature_via_intervals(&h, 3072));
        let ok = certified == truth && char_poly == truth && interval == Some(truth);
        if ok {
            agreements += 1;
        }
        t.expect(ok, || {
            format!(
                "case {case} (n = {n}, d = {d}): truth {truth:?}, certified {certified:?}, \
                 char-poly {char_poly:?}, interval {interval:?}"
            )
        });
    }
    t.finish(format!("{agreements}/200 instances agree on all three routes"))
}

/// Full deterministic replay.
pub fn run_reproduce(seed: u64, lambda_range: (i64, i64)) -> ReproduceReport {
    let lambdas = lambda_range.0..=lambda_range.1;
    let checks = vec![
        check_smith_examples(),
        check_signature_examples(),
        check_pipeline_examples(),
        check_f_bounds_box(),
        check_boundary_homology_box(),
        check_moebius_verdicts(),
        check_seed_certificate(lambdas.clone()),
        check_low_winding_consistency(),
        check_signature_symmetries(),
        check_interval_crosscheck(seed),
    ];
    let passed = checks.iter().all(|c| c.passed);
    ReproduceReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed,
        lambda_range,
        checks,
        passed,
    }
}
