//! The non-sliceness pipeline: the correction function F and its strict
//! bounds, signature windows for both gcd branches, per-lambda contradiction
//! transcripts, non-sliceness certificates, and the seed-knot search.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd_with, prime_power, prime_power_divisors};
use crate::catalog::{connected_sum, multiple_sum, torus_knot_2k, Handedness, SeifertMatrix};
use crate::root::RootOfUnity;
use crate::signature::lt_signature;
use crate::surgery::{framing_constraint, GcdBranch};
use crate::{Error, Result};

/// Largest winding number and framing magnitude accepted by the pipeline.
const SCOPE: i64 = 1_000_000_000;
/// Largest grid size for the exhaustive F check: (d-1)^2 cells.
const F_GRID_SCOPE: u64 = 4096;

fn rat_int(v: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// A character on the first homology of the surgered manifold, described by
/// its prime-power order d, a primitive exponent p, and the lift parameter
/// lambda whose gcd with d selects the window branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterData {
    d: u64,
    p: u64,
    lambda: i64,
    branch: GcdBranch,
}

impl CharacterData {
    pub fn new(d: u64, p: u64, lambda: i64) -> Result<CharacterData> {
        if prime_power(d).is_none() {
            return Err(Error::invalid(format!("d = {d} is not a prime power >= 2")));
        }
        if p == 0 || p >= d || gcd_with(p as i64, d) != 1 {
            return Err(Error::invalid(format!(
                "exponent p = {p} must lie in [1, {}] and be coprime to {d}",
                d - 1
            )));
        }
        let branch = if gcd_with(lambda, d) == 1 { GcdBranch::Coprime } else { GcdBranch::Shared };
        Ok(CharacterData { d, p, lambda, branch })
    }

    pub fn order(&self) -> u64 {
        self.d
    }

    pub fn exponent(&self) -> u64 {
        self.p
    }

    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    pub fn branch(&self) -> GcdBranch {
        self.branch
    }
}

/// The correction function
/// F(a, f, d, n1, n2) = -a + 2a(n1/d + n2/d - 2 n1 n2 / d^2) + 2(n2/d)(1 - n2/d) f,
/// as an exact rational.
pub fn f_value(a: i64, f: i64, d: u64, n1: u64, n2: u64) -> Result<BigRational> {
    if d < 2 {
        return Err(Error::invalid(format!("d must be at least 2, got {d}")));
    }
    if n1 == 0 || n1 >= d || n2 == 0 || n2 >= d {
        return Err(Error::invalid(format!(
            "n1 = {n1}, n2 = {n2} must lie in [1, {}]",
            d - 1
        )));
    }
    if a.unsigned_abs() > SCOPE as u64 || f.unsigned_abs() > SCOPE as u64 || d > F_GRID_SCOPE {
        return Err(Error::invalid("parameters exceed the supported scope"));
    }
    Ok(rat_int(f_numerator(a, f, d, n1, n2)) / rat_int((d * d) as i128))
}

/// Numerator of F over the common denominator d^2; exact in i128 for all
/// in-scope parameters.
fn f_numerator(a: i64, f: i64, d: u64, n1: u64, n2: u64) -> i128 {
    let (a, f, d, n1, n2) = (a as i128, f as i128, d as i128, n1 as i128, n2 as i128);
    -a * d * d + 2 * a * (n1 * d + n2 * d - 2 * n1 * n2) + 2 * n2 * (d - n2) * f
}

/// One extremal cell of the F grid with its distance to the violated bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FMargin {
    pub n1: u64,
    pub n2: u64,
    #[serde(with = "crate::matrix::bigrational_string")]
    pub margin: BigRational,
}

/// Outcome of checking -|a| + min(0,f) < F < |a| + max(0,f) on the full
/// (n1, n2) grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FBoundReport {
    pub holds: bool,
    #[serde(with = "crate::matrix::bigrational_string")]
    pub lower: BigRational,
    #[serde(with = "crate::matrix::bigrational_string")]
    pub upper: BigRational,
    pub worst_low: FMargin,
    pub worst_high: FMargin,
}

/// Checks the strict double bound on F over every grid cell
/// n1, n2 in [1, d-1], reporting the extremal cells and their margins.
/// Rows are scanned in parallel and merged by an ordered minimum, so the
/// result is identical at any thread count.
pub fn f_bound_exhaustive_check(a: i64, f: i64, d: u64) -> Result<FBoundReport> {
    if a == 0 {
        return Err(Error::invalid("a must be nonzero"));
    }
    if d < 2 {
        return Err(Error::invalid(format!("d must be at least 2, got {d}")));
    }
    if a.unsigned_abs() > SCOPE as u64 || f.unsigned_abs() > SCOPE as u64 {
        return Err(Error::invalid("parameters exceed the supported scope"));
    }
    if d > F_GRID_SCOPE {
        return Err(Error::invalid(format!(
            "grid for d = {d} exceeds the exhaustive-check scope {F_GRID_SCOPE}"
        )));
    }

    let dd = (d * d) as i128;
    let lower_num = (-(a.unsigned_abs() as i128) + (f as i128).min(0)) * dd;
    let upper_num = (a.unsigned_abs() as i128 + (f as i128).max(0)) * dd;

    // (margin numerator, n1, n2); lexicographic min is the worst cell with
    // the smallest indices as a deterministic tie-break.
    let min_key = |x: (i128, u64, u64), y: (i128, u64, u64)| if y < x { y } else { x };
    let id = (i128::MAX, u64::MAX, u64::MAX);
    let (low, high) = (1..d)
        .into_par_iter()
        .map(|n1| {
            let mut low = id;
            let mut high = id;
            for n2 in 1..d {
                let v = f_numerator(a, f, d, n1, n2);
                low = min_key(low, (v - lower_num, n1, n2));
                high = min_key(high, (upper_num - v, n1, n2));
            }
            (low, high)
        })
        .reduce(|| (id, id), |x, y| (min_key(x.0, y.0), min_key(x.1, y.1)));

    let margin = |key: (i128, u64, u64)| FMargin {
        n1: key.1,
        n2: key.2,
        margin: rat_int(key.0) / rat_int(dd),
    };
    Ok(FBoundReport {
        holds: low.0 > 0 && high.0 > 0,
        lower: rat_int(lower_num) / rat_int(dd),
        upper: rat_int(upper_num) / rat_int(dd),
        worst_low: margin(low),
        worst_high: margin(high),
    })
}

/// An open interval certified to contain the Casson-Gordon signature of the
/// surgered manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureWindow {
    #[serde(with = "crate::matrix::bigrational_string")]
    pub lower: BigRational,
    #[serde(with = "crate::matrix::bigrational_string")]
    pub upper: BigRational,
}

impl SignatureWindow {
    fn from_ints(lower: i128, upper: i128) -> SignatureWindow {
        debug_assert!(lower < upper);
        SignatureWindow { lower: rat_int(lower), upper: rat_int(upper) }
    }

    /// True when the window lies strictly above 1 or strictly below -1, so
    /// the |sigma| <= 1 conclusion is contradicted.
    pub fn excludes_pm_one(&self) -> bool {
        self.lower >= rat_int(1) || self.upper <= rat_int(-1)
    }

    /// True when the closure of the window contains all of [-1, 1].
    pub fn covers_pm_one(&self) -> bool {
        self.lower <= rat_int(-1) && self.upper >= rat_int(1)
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }
}

impl std::fmt::Display for SignatureWindow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.lower, self.upper)
    }
}

/// Window for the branch gcd(lambda, d) = 1:
/// (sigma + 1 - 2w + min(0,f), sigma - 1 + 2w + max(0,f)).
pub fn signature_window(w: u64, f: i64, sigma: i64) -> SignatureWindow {
    debug_assert!(w >= 1);
    let (w, f, sigma) = (w as i128, f as i128, sigma as i128);
    SignatureWindow::from_ints(sigma + 1 - 2 * w + f.min(0), sigma - 1 + 2 * w + f.max(0))
}

/// Window for the branch gcd(lambda, d) > 1, which passes through the
/// mirrored knot: (sigma + 1 - 2w - max(0, w-f), sigma - 1 + 2w - min(0, w-f)).
pub fn signature_window_mirrored(w: u64, f: i64, sigma: i64) -> SignatureWindow {
    debug_assert!(w >= 1);
    let (w, f, sigma) = (w as i128, f as i128, sigma as i128);
    let wf = w - f;
    SignatureWindow::from_ints(sigma + 1 - 2 * w - wf.max(0), sigma - 1 + 2 * w - wf.min(0))
}

/// One window together with its exclusion mark.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowMark {
    pub window: SignatureWindow,
    pub excludes_pm_one: bool,
}

fn mark(window: SignatureWindow) -> WindowMark {
    let excludes_pm_one = window.excludes_pm_one();
    WindowMark { window, excludes_pm_one }
}

/// Window evaluations for a single lambda: both branches at both roots, the
/// branch that actually applies, and whether that branch yields a
/// contradiction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaRow {
    pub lambda: i64,
    pub f: i64,
    pub branch: GcdBranch,
    pub coprime_at_zeta1: WindowMark,
    pub coprime_at_zeta2: WindowMark,
    pub mirrored_at_zeta1: WindowMark,
    pub mirrored_at_zeta2: WindowMark,
    pub contradiction: bool,
}

/// Per-lambda window transcript for fixed (w, d, sigma1, sigma2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaSweep {
    pub w: u64,
    pub d: u64,
    pub sigma1: i64,
    pub sigma2: i64,
    pub rows: Vec<LambdaRow>,
}

/// Evaluates both windows at both roots for every lambda in the range,
/// marking exclusions of [-1, 1]. The order d enters only through the
/// gcd(lambda, d) branch tag.
pub fn lambda_sweep(
    w: u64,
    lambdas: std::ops::RangeInclusive<i64>,
    d: u64,
    sigma1: i64,
    sigma2: i64,
) -> Result<LambdaSweep> {
    if w == 0 || w as i64 > SCOPE {
        return Err(Error::invalid(format!("winding number {w} out of scope")));
    }
    if d == 0 {
        return Err(Error::invalid("order d must be positive"));
    }
    if lambdas.start().unsigned_abs() > SCOPE as u64 / (2 * w)
        || lambdas.end().unsigned_abs() > SCOPE as u64 / (2 * w)
    {
        return Err(Error::invalid("lambda range out of scope"));
    }
    let rows = lambdas
        .map(|lambda| {
            let f = framing_constraint(w as i64, lambda);
            let branch =
                if gcd_with(lambda, d) == 1 { GcdBranch::Coprime } else { GcdBranch::Shared };
            let row = LambdaRow {
                lambda,
                f,
                branch,
                coprime_at_zeta1: mark(signature_window(w, f, sigma1)),
                coprime_at_zeta2: mark(signature_window(w, f, sigma2)),
                mirrored_at_zeta1: mark(signature_window_mirrored(w, f, sigma1)),
                mirrored_at_zeta2: mark(signature_window_mirrored(w, f, sigma2)),
                contradiction: false,
            };
            let contradiction = match branch {
                GcdBranch::Coprime => {
                    row.coprime_at_zeta1.excludes_pm_one || row.coprime_at_zeta2.excludes_pm_one
                }
                GcdBranch::Shared => {
                    row.mirrored_at_zeta1.excludes_pm_one || row.mirrored_at_zeta2.excludes_pm_one
                }
            };
            LambdaRow { contradiction, ..row }
        })
        .collect();
    Ok(LambdaSweep { w, d, sigma1, sigma2, rows })
}

/// A verified non-sliceness certificate: a prime-power divisor d of w and two
/// primitive d-th roots whose signatures escape the band [-2w, 2w] on
/// opposite sides, together with the per-lambda contradiction transcript.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonSliceCertificate {
    pub w: u64,
    pub d: u64,
    pub zeta1: RootOfUnity,
    pub zeta2: RootOfUnity,
    pub sigma1: i64,
    pub sigma2: i64,
    pub inequality1: String,
    pub inequality2: String,
    pub transcript: LambdaSweep,
}

impl NonSliceCertificate {
    /// Re-derives every invariant of the certificate from scratch: divisor
    /// arithmetic, primitivity, the two strict inequalities, and the full
    /// window transcript including each contradiction mark.
    pub fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::invalid(msg));
        if self.w == 0 {
            return fail("w must be positive".into());
        }
        if prime_power(self.d).is_none() {
            return fail(format!("d = {} is not a prime power", self.d));
        }
        if self.w % self.d != 0 {
            return fail(format!("d = {} does not divide w = {}", self.d, self.w));
        }
        for (zeta, name) in [(self.zeta1, "zeta1"), (self.zeta2, "zeta2")] {
            if u64::from(zeta.order()) != self.d {
                return fail(format!("{name} has order {} instead of {}", zeta.order(), self.d));
            }
            if !zeta.is_primitive() {
                return fail(format!("{name} = {zeta} is not primitive"));
            }
        }
        if self.zeta1 == self.zeta2 {
            return fail(format!("zeta1 = zeta2 = {}", self.zeta1));
        }
        let two_w = 2 * self.w as i64;
        if self.sigma1 <= two_w {
            return fail(format!("sigma1 = {} fails to exceed 2w = {two_w}", self.sigma1));
        }
        if self.sigma2 >= -two_w {
            return fail(format!("sigma2 = {} fails to fall below -2w = {}", self.sigma2, -two_w));
        }
        let t = &self.transcript;
        if (t.w, t.d, t.sigma1, t.sigma2) != (self.w, self.d, self.sigma1, self.sigma2) {
            return fail("transcript header disagrees with certificate fields".into());
        }
        for row in &t.rows {
            let expected = lambda_sweep(self.w, row.lambda..=row.lambda, self.d, self.sigma1, self.sigma2)?;
            if expected.rows.len() != 1 || expected.rows[0] != *row {
                return fail(format!("transcript row at lambda = {} does not replay", row.lambda));
            }
            if !row.contradiction {
                return fail(format!("no contradiction at lambda = {}", row.lambda));
            }
        }
        Ok(())
    }

    /// Canonical human-readable rendering; fields in declaration order.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(s, "w: {}", self.w).unwrap();
        writeln!(s, "d: {}", self.d).unwrap();
        writeln!(s, "zeta1: {}", self.zeta1).unwrap();
        writeln!(s, "zeta2: {}", self.zeta2).unwrap();
        writeln!(s, "sigma1: {}", self.sigma1).unwrap();
        writeln!(s, "sigma2: {}", self.sigma2).unwrap();
        writeln!(s, "inequality1: {}", self.inequality1).unwrap();
        writeln!(s, "inequality2: {}", self.inequality2).unwrap();
        writeln!(s, "transcript:").unwrap();
        for row in &self.transcript.rows {
            writeln!(
                s,
                "- lambda = {}, f = {}, branch = {}, contradiction = {}",
                row.lambda,
                row.f,
                row.branch,
                yn(row.contradiction)
            )
            .unwrap();
            for (label, wm) in [
                ("coprime window at zeta1", &row.coprime_at_zeta1),
                ("coprime window at zeta2", &row.coprime_at_zeta2),
                ("mirrored window at zeta1", &row.mirrored_at_zeta1),
                ("mirrored window at zeta2", &row.mirrored_at_zeta2),
            ] {
                writeln!(
                    s,
                    "    {label} = {}, excludes [-1,1] = {}",
                    wm.window,
                    yn(wm.excludes_pm_one)
                )
                .unwrap();
            }
        }
        s
    }
}

/// Primitive exponents of d up to d/2; conjugation symmetry of the signature
/// makes the upper half redundant.
fn half_primitive_exponents(d: u64) -> Vec<u64> {
    (1..=d / 2).filter(|&p| gcd_with(p as i64, d) == 1).collect()
}

/// Searches every prime-power divisor d >= 2 of w (ascending) and every
/// ordered pair of primitive exponents p1 != p2 up to d/2 (lexicographic) for
/// signatures with 2w < sigma(zeta1) and sigma(zeta2) < -2w. Returns the
/// first hit as a certificate with a transcript over `lambdas`; None means
/// the search was exhausted without a certificate (not a sliceness proof).
pub fn certify_nonslice_with(
    w: u64,
    j: &SeifertMatrix,
    lambdas: std::ops::RangeInclusive<i64>,
) -> Result<Option<NonSliceCertificate>> {
    if w == 0 || w as i64 > SCOPE {
        return Err(Error::invalid(format!(
            "winding number must be a positive integer within scope, got {w}"
        )));
    }
    let two_w = 2 * w as i64;
    for d in prime_power_divisors(w) {
        let ps = half_primitive_exponents(d);
        if ps.len() < 2 {
            continue;
        }
        let sigmas: Vec<i64> = ps
            .iter()
            .map(|&p| {
                let zeta = RootOfUnity::new(d as u32, p as u32)?;
                Ok(lt_signature(j, zeta)?.sigma)
            })
            .collect::<Result<_>>()?;
        for (i1, &p1) in ps.iter().enumerate() {
            if sigmas[i1] <= two_w {
                continue;
            }
            for (i2, &p2) in ps.iter().enumerate() {
                if p2 == p1 || sigmas[i2] >= -two_w {
                    continue;
                }
                let (sigma1, sigma2) = (sigmas[i1], sigmas[i2]);
                let transcript = lambda_sweep(w, lambdas.clone(), d, sigma1, sigma2)?;
                let cert = NonSliceCertificate {
                    w,
                    d,
                    zeta1: RootOfUnity::new(d as u32, p1 as u32)?,
                    zeta2: RootOfUnity::new(d as u32, p2 as u32)?,
                    sigma1,
                    sigma2,
                    inequality1: format!("2w = {two_w} < {sigma1} = sigma_J(zeta1)"),
                    inequality2: format!("sigma_J(zeta2) = {sigma2} < {} = -2w", -two_w),
                    transcript,
                };
                cert.check().map_err(|e| {
                    Error::internal(format!("freshly built certificate failed its own check: {e}"))
                })?;
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// `certify_nonslice_with` over the default transcript range [-3, 3].
pub fn certify_nonslice(w: u64, j: &SeifertMatrix) -> Result<Option<NonSliceCertificate>> {
    certify_nonslice_with(w, j, -3..=3)
}

/// A two-family connected sum m * T(2,k1)^h1 # n * T(2,k2)^h2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedDescription {
    pub m: u64,
    pub k1: u32,
    pub hand1: Handedness,
    pub n: u64,
    pub k2: u32,
    pub hand2: Handedness,
}

impl SeedDescription {
    /// Expression accepted by the knot-spec parser.
    pub fn expression(&self) -> String {
        format!(
            "sum:{}*t2k:{}:{}+{}*t2k:{}:{}",
            self.m,
            self.k1,
            self.hand1.tag(),
            self.n,
            self.k2,
            self.hand2.tag()
        )
    }

    pub fn knot(&self) -> SeifertMatrix {
        let copies = |c: u64| u32::try_from(c).expect("summand count in range");
        let a = multiple_sum(&torus_knot_2k(self.k1, self.hand1).expect("odd k"), copies(self.m));
        let b = multiple_sum(&torus_knot_2k(self.k2, self.hand2).expect("odd k"), copies(self.n));
        connected_sum(&a, &b).with_name(self.expression())
    }

    pub fn total_summands(&self) -> u64 {
        self.m + self.n
    }
}

impl std::fmt::Display for SeedDescription {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.expression())
    }
}

const SEARCH_KS: [u32; 4] = [3, 5, 7, 9];
const SEARCH_HANDS: [Handedness; 2] = [Handedness::Right, Handedness::Left];

/// Brute-force search for a seed knot certifying non-sliceness at winding
/// number w: combinations m * T(2,k1)^{+-} # n * T(2,k2)^{+-} with
/// m + n <= max_summands, k in {3,5,7,9}. Candidates are screened with exact
/// per-summand signatures (additivity), in lexicographic order on
/// (m + n, k1, k2, m, handedness pair); the first hit is re-verified from its
/// actual Seifert matrix and returned with that certificate.
///
/// Requires w >= 5 with a prime-power divisor >= 5; smaller divisors carry at
/// most one primitive exponent class and can never satisfy both inequalities.
pub fn search_seed_knot_with(
    w: u64,
    max_summands: u64,
    lambdas: std::ops::RangeInclusive<i64>,
) -> Result<Option<(SeedDescription, NonSliceCertificate)>> {
    if w == 0 || w as i64 > SCOPE {
        return Err(Error::invalid(format!(
            "winding number must be a positive integer within scope, got {w}"
        )));
    }
    let divisors: Vec<u64> = prime_power_divisors(w).into_iter().filter(|&d| d >= 5).collect();
    if w < 5 || divisors.is_empty() {
        return Err(Error::inapplicable(format!(
            "seed search needs w >= 5 with a prime-power divisor >= 5; w = {w} has none"
        )));
    }

    // sigma of each torus-knot type at each candidate root, computed once.
    // Key order matches the (d, exponent-list) iteration below.
    let mut sigma: std::collections::BTreeMap<(u64, u64, u32, Handedness), i64> =
        std::collections::BTreeMap::new();
    for &d in &divisors {
        for p in half_primitive_exponents(d) {
            let zeta = RootOfUnity::new(d as u32, p as u32)?;
            for k in SEARCH_KS {
                for hand in SEARCH_HANDS {
                    let j = torus_knot_2k(k, hand)?;
                    sigma.insert((d, p, k, hand), lt_signature(&j, zeta)?.sigma);
                }
            }
        }
    }

    let two_w = 2 * w as i64;
    let passes = |m: u64, k1: u32, h1: Handedness, n: u64, k2: u32, h2: Handedness| -> bool {
        divisors.iter().any(|&d| {
            let ps = half_primitive_exponents(d);
            let total = |p: u64| {
                m as i64 * sigma[&(d, p, k1, h1)] + n as i64 * sigma[&(d, p, k2, h2)]
            };
            ps.iter().any(|&p1| total(p1) > two_w)
                && ps.iter().any(|&p2| total(p2) < -two_w)
        })
    };

    for total in 2..=max_summands {
        for k1 in SEARCH_KS {
            for k2 in SEARCH_KS {
                for m in 1..total {
                    let n = total - m;
                    for h1 in SEARCH_HANDS {
                        for h2 in SEARCH_HANDS {
                            if !passes(m, k1, h1, n, k2, h2) {
                                continue;
                            }
                            let desc = SeedDescription { m, k1, hand1: h1, n, k2, hand2: h2 };
                            let cert = certify_nonslice_with(w, &desc.knot(), lambdas)?
                                .ok_or_else(|| {
                                    Error::internal(
                                        "screened candidate failed exact verification".to_string(),
                                    )
                                })?;
                            return Ok(Some((desc, cert)));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `search_seed_knot_with` over the default transcript range [-3, 3].
pub fn search_seed_knot(
    w: u64,
    max_summands: u64,
) -> Result<Option<(SeedDescription, NonSliceCertificate)>> {
    search_seed_knot_with(w, max_summands, -3..=3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{figure_eight, unknot};

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn f_value_samples() {
        assert_eq!(f_value(5, 0, 5, 1, 1).unwrap(), rat(-9, 5));
        assert_eq!(f_value(1, 0, 2, 1, 1).unwrap(), rat(0, 1));
        // a = 0 leaves only the f term.
        for (f, d, n2) in [(7i64, 5u64, 2u64), (-3, 8, 5)] {
            let expect = rat(2 * n2 as i64 * (d - n2) as i64 * f, (d * d) as i64);
            assert_eq!(f_value(0, f, d, 1, n2).unwrap(), expect);
        }
        assert!(f_value(1, 0, 5, 0, 1).is_err());
        assert!(f_value(1, 0, 5, 1, 5).is_err());
        assert!(f_value(1, 0, 1, 1, 1).is_err());
    }

    #[test]
    fn f_bound_holds_on_samples() {
        let r = f_bound_exhaustive_check(5, -10, 5).unwrap();
        assert!(r.holds);
        assert_eq!(r.lower, rat(-15, 1));
        assert_eq!(r.upper, rat(5, 1));
        let r = f_bound_exhaustive_check(-3, 7, 4).unwrap();
        assert!(r.holds);
        assert_eq!((r.lower, r.upper), (rat(-3, 1), rat(10, 1)));
        assert!(r.worst_low.margin > rat(0, 1));
        assert!(r.worst_high.margin > rat(0, 1));
        assert!(f_bound_exhaustive_check(0, 1, 5).is_err());
    }

    #[test]
    fn f_margins_shrink_with_d_but_stay_positive() {
        // At a = 1, f = 0 the worst margin is 4(d-1)/d^2, strictly
        // decreasing and positive.
        let mut last: Option<BigRational> = None;
        for d in 2..=40u64 {
            let r = f_bound_exhaustive_check(1, 0, d).unwrap();
            assert!(r.holds, "d = {d}");
            let worst = r.worst_low.margin.clone().min(r.worst_high.margin.clone());
            assert_eq!(worst, rat(4 * (d as i64 - 1), (d * d) as i64), "d = {d}");
            if let Some(prev) = last {
                assert!(worst < prev, "margin did not shrink at d = {d}");
            }
            last = Some(worst);
        }
    }

    #[test]
    fn window_formulas_match_frozen_values() {
        let win = |w, f, s| {
            let v = signature_window(w, f, s);
            (v.lower, v.upper)
        };
        assert_eq!(win(5, 0, 12), (rat(3, 1), rat(21, 1)));
        assert_eq!(win(5, -10, 12), (rat(-7, 1), rat(21, 1)));
        assert_eq!(win(1, 0, 0), (rat(-1, 1), rat(1, 1)));

        let winm = |w, f, s| {
            let v = signature_window_mirrored(w, f, s);
            (v.lower, v.upper)
        };
        assert_eq!(winm(5, 0, 12), (rat(-2, 1), rat(21, 1)));
        assert_eq!(winm(5, 20, 12), (rat(3, 1), rat(36, 1)));
        assert_eq!(winm(1, 0, 0), (rat(-2, 1), rat(1, 1)));
    }

    #[test]
    fn window_width_formula() {
        for w in 1..=6u64 {
            for f in -9i64..=9 {
                for s in [-12i64, 0, 7] {
                    let v = signature_window(w, f, s);
                    let expect = rat(2 * (2 * w as i64 - 1) + f.abs(), 1);
                    assert_eq!(v.width(), expect);
                    assert!(v.width() >= rat(2, 1));
                    let m = signature_window_mirrored(w, f, s);
                    assert_eq!(m.width(), rat(2 * (2 * w as i64 - 1) + (w as i64 - f).abs(), 1));
                }
            }
        }
    }

    #[test]
    fn character_data_validation() {
        let c = CharacterData::new(5, 2, -1).unwrap();
        assert_eq!(c.branch(), GcdBranch::Coprime);
        assert_eq!(CharacterData::new(5, 2, 10).unwrap().branch(), GcdBranch::Shared);
        assert_eq!(CharacterData::new(5, 2, 0).unwrap().branch(), GcdBranch::Shared);
        assert!(CharacterData::new(6, 1, 0).is_err()); // not a prime power
        assert!(CharacterData::new(9, 3, 0).is_err()); // not primitive
        assert!(CharacterData::new(5, 0, 0).is_err());
        assert!(CharacterData::new(5, 5, 0).is_err());
    }

    #[test]
    fn sweep_at_lambda_zero_reduces() {
        let sweep = lambda_sweep(5, 0..=0, 5, 12, -12).unwrap();
        let row = &sweep.rows[0];
        assert_eq!(row.f, 0);
        assert_eq!(row.coprime_at_zeta1.window, signature_window(5, 0, 12));
        assert_eq!(
            (row.coprime_at_zeta1.window.lower.clone(), row.coprime_at_zeta1.window.upper.clone()),
            (rat(12 + 1 - 10, 1), rat(12 - 1 + 10, 1))
        );
        assert_eq!(row.branch, GcdBranch::Shared); // gcd(0, 5) = 5
    }

    #[test]
    fn winding_one_control_never_excludes() {
        for lambda in -50..=50 {
            let sweep = lambda_sweep(1, lambda..=lambda, 5, 0, 0).unwrap();
            let row = &sweep.rows[0];
            for wm in [
                &row.coprime_at_zeta1,
                &row.coprime_at_zeta2,
                &row.mirrored_at_zeta1,
                &row.mirrored_at_zeta2,
            ] {
                assert!(!wm.excludes_pm_one, "lambda = {lambda}");
                assert!(wm.window.covers_pm_one(), "lambda = {lambda}");
            }
            assert!(!row.contradiction);
        }
    }

    #[test]
    fn certificate_hypotheses_force_contradiction_everywhere() {
        let sweep = lambda_sweep(5, -10..=10, 5, 12, -12).unwrap();
        assert_eq!(sweep.rows.len(), 21);
        for row in &sweep.rows {
            assert!(row.contradiction, "lambda = {}", row.lambda);
        }
    }

    #[test]
    fn certify_trivial_cases_return_empty() {
        for j in [unknot(), figure_eight()] {
            assert!(certify_nonslice(1, &j).unwrap().is_none());
            assert!(certify_nonslice(3, &j).unwrap().is_none());
        }
        assert!(certify_nonslice(5, &unknot()).unwrap().is_none());
        assert!(certify_nonslice(0, &unknot()).is_err());
    }

    #[test]
    fn certify_seed_example() {
        let desc = SeedDescription {
            m: 12,
            k1: 3,
            hand1: Handedness::Right,
            n: 6,
            k2: 7,
            hand2: Handedness::Left,
        };
        let cert = certify_nonslice(5, &desc.knot()).unwrap().expect("certificate");
        assert_eq!((cert.w, cert.d), (5, 5));
        assert_eq!(cert.zeta1, RootOfUnity::new(5, 2).unwrap());
        assert_eq!(cert.zeta2, RootOfUnity::new(5, 1).unwrap());
        assert_eq!((cert.sigma1, cert.sigma2), (12, -12));
        cert.check().unwrap();
        assert_eq!(cert.transcript.rows.len(), 7);
    }

    #[test]
    fn certificate_text_and_json_round_trip() {
        let desc = SeedDescription {
            m: 12,
            k1: 3,
            hand1: Handedness::Right,
            n: 6,
            k2: 7,
            hand2: Handedness::Left,
        };
        let cert = certify_nonslice_with(5, &desc.knot(), -1..=1).unwrap().unwrap();
        let text = cert.to_text();
        assert!(text.starts_with("w: 5\nd: 5\nzeta1: (5, 2)\nzeta2: (5, 1)\n"));
        assert!(text.contains("sigma1: 12\nsigma2: -12\n"));
        assert!(text.contains("inequality1: 2w = 10 < 12 = sigma_J(zeta1)"));
        assert!(text.contains("- lambda = 0, f = 0, branch = gcd(lambda,d)>1, contradiction = yes"));
        let json = serde_json::to_string_pretty(&cert).unwrap();
        let back: NonSliceCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        back.check().unwrap();
    }

    #[test]
    fn seed_search_finds_the_minimal_witness() {
        let (desc, cert) = search_seed_knot(5, 18).unwrap().expect("witness at 18 summands");
        assert_eq!(desc.expression(), "sum:12*t2k:3:r+6*t2k:7:l");
        assert_eq!(desc.total_summands(), 18);
        assert_eq!((cert.sigma1, cert.sigma2), (12, -12));
        // One fewer summand admits no witness in this family.
        assert!(search_seed_knot(5, 17).unwrap().is_none());
    }

    #[test]
    fn seed_search_rejects_out_of_scope_winding() {
        for w in [1u64, 2, 3, 4, 6, 12] {
            assert!(
                matches!(search_seed_knot(w, 10), Err(Error::Inapplicable(_))),
                "w = {w}"
            );
        }
    }

    #[test]
    fn tampered_certificates_fail_check() {
        let desc = SeedDescription {
            m: 12,
            k1: 3,
            hand1: Handedness::Right,
            n: 6,
            k2: 7,
            hand2: Handedness::Left,
        };
        let cert = certify_nonslice_with(5, &desc.knot(), 0..=0).unwrap().unwrap();
        let mut bad = cert.clone();
        bad.sigma1 = 10;
        assert!(bad.check().is_err());
        let mut bad = cert.clone();
        bad.zeta2 = bad.zeta1;
        assert!(bad.check().is_err());
        let mut bad = cert.clone();
        bad.d = 25;
        assert!(bad.check().is_err());
        let mut bad = cert;
        bad.transcript.rows[0].f += 1;
        assert!(bad.check().is_err());
    }
}
