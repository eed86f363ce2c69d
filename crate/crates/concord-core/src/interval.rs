//! Dyadic interval arithmetic with outward rounding.
//!
//! Endpoints are integers at a fixed binary scale: the interval (lo, hi, prec)
//! is [lo / 2^prec, hi / 2^prec]. Addition is exact; multiplication and
//! division round outward, so every interval rigorously encloses the true
//! value. Used for certified sign determination of real cyclotomic numbers
//! and for the fast path of the Hermitian signature engine.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyInterval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub prec: u32,
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -(-a).div_floor(b)
}

impl DyInterval {
    pub fn new(lo: BigInt, hi: BigInt, prec: u32) -> DyInterval {
        assert!(lo <= hi, "inverted interval");
        DyInterval { lo, hi, prec }
    }

    pub fn exact_int(v: &BigInt, prec: u32) -> DyInterval {
        let m = v << prec;
        DyInterval { lo: m.clone(), hi: m, prec }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> DyInterval {
        let scaled_num = q.numer() << prec;
        let lo = div_floor(&scaled_num, q.denom());
        let hi = div_ceil(&scaled_num, q.denom());
        DyInterval { lo, hi, prec }
    }

    pub fn zero(prec: u32) -> DyInterval {
        DyInterval { lo: BigInt::zero(), hi: BigInt::zero(), prec }
    }

    fn same(&self, other: &DyInterval) {
        assert_eq!(self.prec, other.prec, "mixed interval precisions");
    }

    pub fn add(&self, other: &DyInterval) -> DyInterval {
        self.same(other);
        DyInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &DyInterval) -> DyInterval {
        self.same(other);
        DyInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> DyInterval {
        DyInterval { lo: -self.hi.clone(), hi: -self.lo.clone(), prec: self.prec }
    }

    pub fn mul(&self, other: &DyInterval) -> DyInterval {
        self.same(other);
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap();
        let hi = candidates.iter().max().unwrap();
        let scale = BigInt::one() << self.prec;
        DyInterval {
            lo: div_floor(lo, &scale),
            hi: div_ceil(hi, &scale),
            prec: self.prec,
        }
    }

    /// Multiplication by an exact integer (scale-preserving, no rounding).
    pub fn mul_int(&self, k: &BigInt) -> DyInterval {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if k.is_negative() {
            DyInterval { lo: b, hi: a, prec: self.prec }
        } else {
            DyInterval { lo: a, hi: b, prec: self.prec }
        }
    }

    /// Division by an exact positive integer, outward rounding.
    pub fn div_int(&self, k: &BigInt) -> DyInterval {
        assert!(k.is_positive());
        DyInterval {
            lo: div_floor(&self.lo, k),
            hi: div_ceil(&self.hi, k),
            prec: self.prec,
        }
    }

    /// Division by an interval that excludes zero.
    pub fn div(&self, other: &DyInterval) -> DyInterval {
        self.same(other);
        assert!(!other.contains_zero(), "division by interval containing zero");
        let scale = BigInt::one() << self.prec;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                let num = a * &scale;
                let f = div_floor(&num, b);
                let c = div_ceil(&num, b);
                lo = Some(match lo {
                    Some(x) => x.min(f),
                    None => f,
                });
                hi = Some(match hi {
                    Some(x) => x.max(c),
                    None => c,
                });
            }
        }
        DyInterval { lo: lo.unwrap(), hi: hi.unwrap(), prec: self.prec }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified sign: Some(1) strictly positive, Some(-1) strictly negative,
    /// None when the interval straddles or touches zero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    /// An exact dyadic point inside the interval.
    pub fn midpoint(&self) -> BigInt {
        (&self.lo + &self.hi) >> 1
    }

    /// Outward re-rounding to a coarser or finer scale.
    pub fn round_to(&self, prec: u32) -> DyInterval {
        if prec == self.prec {
            return self.clone();
        }
        if prec > self.prec {
            let shift = prec - self.prec;
            return DyInterval {
                lo: &self.lo << shift,
                hi: &self.hi << shift,
                prec,
            };
        }
        let shift = self.prec - prec;
        let scale = BigInt::one() << shift;
        DyInterval {
            lo: div_floor(&self.lo, &scale),
            hi: div_ceil(&self.hi, &scale),
            prec,
        }
    }

    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    /// Widen both endpoints by an integer amount at the same scale.
    pub fn widen(&self, slop: &BigInt) -> DyInterval {
        assert!(!slop.is_negative());
        DyInterval {
            lo: &self.lo - slop,
            hi: &self.hi + slop,
            prec: self.prec,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mid = self.midpoint();
        let p = 2f64.powi(-(self.prec as i32));
        mid.to_f64().map(|m| m * p).unwrap_or(f64::NAN)
    }
}

/// Rectangular complex interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CplxInterval {
    pub re: DyInterval,
    pub im: DyInterval,
}

impl CplxInterval {
    pub fn new(re: DyInterval, im: DyInterval) -> CplxInterval {
        assert_eq!(re.prec, im.prec);
        CplxInterval { re, im }
    }

    pub fn zero(prec: u32) -> CplxInterval {
        CplxInterval { re: DyInterval::zero(prec), im: DyInterval::zero(prec) }
    }

    pub fn exact_real_int(v: &BigInt, prec: u32) -> CplxInterval {
        CplxInterval {
            re: DyInterval::exact_int(v, prec),
            im: DyInterval::zero(prec),
        }
    }

    pub fn add(&self, o: &CplxInterval) -> CplxInterval {
        CplxInterval { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CplxInterval) -> CplxInterval {
        CplxInterval { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> CplxInterval {
        CplxInterval { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> CplxInterval {
        CplxInterval { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &CplxInterval) -> CplxInterval {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        CplxInterval { re, im }
    }

    pub fn mul_int(&self, k: &BigInt) -> CplxInterval {
        CplxInterval { re: self.re.mul_int(k), im: self.im.mul_int(k) }
    }

    pub fn div_int(&self, k: &BigInt) -> CplxInterval {
        CplxInterval { re: self.re.div_int(k), im: self.im.div_int(k) }
    }

    /// Division by a real interval excluding zero.
    pub fn div_real(&self, r: &DyInterval) -> CplxInterval {
        CplxInterval { re: self.re.div(r), im: self.im.div(r) }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    /// True when the box provably excludes the origin.
    pub fn excludes_zero(&self) -> bool {
        !self.re.contains_zero() || !self.im.contains_zero()
    }

    pub fn midpoint(&self) -> (BigInt, BigInt) {
        (self.re.midpoint(), self.im.midpoint())
    }
}

const GUARD_BITS: u32 = 32;

static PI_CACHE: OnceLock<Mutex<BTreeMap<u32, DyInterval>>> = OnceLock::new();

/// atan(1/x) enclosure by the alternating Gregory series, as an exact
/// rational bracket.
fn atan_inv_bracket(x: u64, bits: u32) -> (BigRational, BigRational) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut term = BigRational::new(BigInt::one(), x.clone());
    let mut sum = BigRational::zero();
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let mut k: u64 = 0;
    loop {
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        // next term: t * (2k+1) / ((2k+3) x^2)
        let next_num = term.numer() * BigInt::from(2 * k + 1);
        let next_den = term.denom() * BigInt::from(2 * k + 3) * &x2;
        term = BigRational::new(next_num, next_den);
        k += 1;
        if term < threshold {
            break;
        }
        assert!(k < 100_000, "atan series failed to converge");
    }
    (sum.clone() - term.clone(), sum + term)
}

/// Enclosure of pi at the requested precision (Machin's formula).
pub fn pi_interval(prec: u32) -> DyInterval {
    let cache = PI_CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(v) = guard.get(&prec) {
        return v.clone();
    }
    let bits = prec + GUARD_BITS;
    let (a5_lo, a5_hi) = atan_inv_bracket(5, bits);
    let (a239_lo, a239_hi) = atan_inv_bracket(239, bits);
    let sixteen = BigRational::from(BigInt::from(16));
    let four = BigRational::from(BigInt::from(4));
    let lo = &sixteen * &a5_lo - &four * &a239_hi;
    let hi = &sixteen * &a5_hi - &four * &a239_lo;
    let lo_d = DyInterval::from_rational(&lo, prec);
    let hi_d = DyInterval::from_rational(&hi, prec);
    let out = DyInterval::new(lo_d.lo, hi_d.hi, prec);
    guard.insert(prec, out.clone());
    out
}

/// Simultaneous cos and sin enclosures of an exact dyadic argument |m| <= 8,
/// by Taylor series with a certified remainder bound.
fn cos_sin_dyadic(m: &DyInterval) -> (DyInterval, DyInterval) {
    let prec = m.prec;
    // The argument must be a genuine point or narrow interval; Taylor is run
    // on the interval directly, and remainder slop is added at the end.
    let m2 = m.mul(m);
    let mut cos_acc = DyInterval::exact_int(&BigInt::one(), prec);
    let mut sin_acc = m.clone();
    let mut cos_term = DyInterval::exact_int(&BigInt::one(), prec);
    let mut sin_term = m.clone();
    let mut j: u64 = 0;
    let tail = loop {
        j += 1;
        // cos term index 2j, sin term index 2j+1.
        let c_div = BigInt::from((2 * j - 1) * (2 * j));
        cos_term = cos_term.mul(&m2).div_int(&c_div).neg();
        cos_acc = cos_acc.add(&cos_term);
        let s_div = BigInt::from((2 * j) * (2 * j + 1));
        sin_term = sin_term.mul(&m2).div_int(&s_div).neg();
        sin_acc = sin_acc.add(&sin_term);
        let bound = cos_term
            .lo
            .abs()
            .max(cos_term.hi.abs())
            .max(sin_term.lo.abs())
            .max(sin_term.hi.abs());
        // Once (2j+2)(2j+3) >= 2 m^2 the tail is geometric with ratio <= 1/2,
        // so the remainder is at most the current term bound.
        let next_factor = BigInt::from((2 * j + 2) * (2 * j + 3)) << prec;
        let ratio_ok = m2.hi.clone() * 2 <= next_factor;
        if ratio_ok && bound <= BigInt::from(4) {
            break bound + 1;
        }
        assert!(j < 10_000, "cos/sin series failed to converge");
    };
    (cos_acc.widen(&tail), sin_acc.widen(&tail))
}

/// Enclosure of (cos, sin) of 2 pi k / d.
fn cos_sin_2pi_frac(k: u64, d: u64, prec: u32) -> (DyInterval, DyInterval) {
    assert!(d >= 1 && k < d);
    let work = prec + GUARD_BITS;
    if k == 0 {
        return (
            DyInterval::exact_int(&BigInt::one(), prec),
            DyInterval::zero(prec),
        );
    }
    let pi = pi_interval(work);
    let theta = pi
        .mul_int(&BigInt::from(2 * k))
        .div_int(&BigInt::from(d));
    let (c, s) = cos_sin_dyadic(&theta);
    (c.round_to(prec), s.round_to(prec))
}

static ROOT_CACHE: OnceLock<Mutex<BTreeMap<(u32, u32), Arc<Vec<CplxInterval>>>>> =
    OnceLock::new();

/// Enclosures of zeta_d^k for k = 0 .. d-1, cached per (d, precision).
pub fn unit_root_powers(d: u32, prec: u32) -> Arc<Vec<CplxInterval>> {
    let cache = ROOT_CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(v) = guard.get(&(d, prec)) {
        return v.clone();
    }
    let mut powers = Vec::with_capacity(d as usize);
    for k in 0..d as u64 {
        let (re, im) = cos_sin_2pi_frac(k, d as u64, prec);
        powers.push(CplxInterval::new(re, im));
    }
    let arc = Arc::new(powers);
    guard.insert((d, prec), arc.clone());
    arc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn contains_rat(iv: &DyInterval, q: &BigRational) -> bool {
        // lo/2^p <= q <= hi/2^p
        let scale = BigInt::one() << iv.prec;
        let lhs = q.numer() * &scale;
        &iv.lo * q.denom() <= lhs && lhs <= &iv.hi * q.denom()
    }

    #[test]
    fn basic_arithmetic_rounds_outward() {
        let prec = 64;
        let a = DyInterval::from_rational(&rat(1, 3), prec);
        let b = DyInterval::from_rational(&rat(3, 7), prec);
        assert!(contains_rat(&a.add(&b), &rat(16, 21)));
        assert!(contains_rat(&a.sub(&b), &rat(-2, 21)));
        assert!(contains_rat(&a.mul(&b), &rat(1, 7)));
        assert!(contains_rat(&a.div(&b), &rat(7, 9)));
        assert!(a.sign() == Some(1));
        assert!(a.neg().sign() == Some(-1));
    }

    #[test]
    fn pi_matches_reference_digits() {
        let iv = pi_interval(128);
        // 3.14159265358979323 < pi < 3.14159265358979324
        let den = BigInt::from(100000000000000000i64);
        let num_lo = BigInt::from(314159265358979323i64);
        let num_hi = BigInt::from(314159265358979324i64);
        assert!(&iv.lo * &den > (num_lo << 128u32));
        assert!(&iv.hi * &den < (num_hi << 128u32));
        // Width is tiny (a few ulps at the output scale).
        assert!(iv.width() < BigInt::from(1000));
    }

    #[test]
    fn unit_roots_lie_on_the_circle() {
        for d in [2u32, 3, 4, 5, 6, 12] {
            let powers = unit_root_powers(d, 96);
            for z in powers.iter() {
                let norm = z.re.mul(&z.re).add(&z.im.mul(&z.im));
                assert!(contains_rat(&norm, &rat(1, 1)), "d={d}");
                assert!(norm.width() < BigInt::from(1u64 << 20));
            }
        }
    }

    #[test]
    fn known_root_values() {
        let p = unit_root_powers(4, 96);
        // zeta_4 = i
        assert!(contains_rat(&p[1].re, &rat(0, 1)));
        assert!(contains_rat(&p[1].im, &rat(1, 1)));
        // zeta_4^2 = -1
        assert!(contains_rat(&p[2].re, &rat(-1, 1)));
        assert!(contains_rat(&p[2].im, &rat(0, 1)));
        let p6 = unit_root_powers(6, 96);
        // Re(zeta_6) = 1/2
        assert!(contains_rat(&p6[1].re, &rat(1, 2)));
        // Re(zeta_6^2) = -1/2
        assert!(contains_rat(&p6[2].re, &rat(-1, 2)));
        let p2 = unit_root_powers(2, 96);
        assert!(contains_rat(&p2[1].re, &rat(-1, 1)));
        assert!(p2[1].re.sign() == Some(-1));
    }

    #[test]
    fn rounding_to_coarser_scale_keeps_enclosure() {
        let x = DyInterval::from_rational(&rat(22, 7), 200);
        let y = x.round_to(50);
        assert!(contains_rat(&y, &rat(22, 7)));
        assert!(y.prec == 50);
        let z = y.round_to(80);
        assert!(contains_rat(&z, &rat(22, 7)));
    }
}
