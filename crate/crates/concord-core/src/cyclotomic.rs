//! Exact arithmetic in cyclotomic fields Q(zeta_d).
//!
//! Elements are integer-coefficient residues of degree < phi(d) modulo the
//! d-th cyclotomic polynomial, over a shared positive denominator. The
//! representation is kept canonical (content and denominator coprime), so
//! equality and zero-testing are exact structural checks.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::euler_phi;

/// Coefficients ascending: p[0] + p[1] x + ...
type Poly = Vec<BigInt>;

fn poly_trim(p: &mut Poly) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

/// Exact division by a monic divisor; panics if the division leaves a
/// remainder (only used where exactness is guaranteed).
fn poly_div_exact(num: &Poly, div: &Poly) -> Poly {
    assert!(div.last().map(|c| c.is_one()).unwrap_or(false), "divisor not monic");
    let mut rem = num.clone();
    let dn = div.len() - 1;
    if rem.len() <= dn {
        assert!(rem.iter().all(|c| c.is_zero()));
        return vec![BigInt::zero()];
    }
    let mut quo = vec![BigInt::zero(); rem.len() - dn];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        quo[k] = c.clone();
        for (i, di) in div.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    poly_trim(&mut quo);
    quo
}

/// d-th cyclotomic polynomial, integer coefficients ascending.
pub fn cyclotomic_polynomial(d: u32) -> Poly {
    assert!(d >= 1);
    if d == 1 {
        return vec![BigInt::from(-1), BigInt::one()];
    }
    // (x^d - 1) / prod of cyclotomic polynomials of the proper divisors.
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = BigInt::from(-1);
    num[d as usize] = BigInt::one();
    let mut div = vec![BigInt::one()];
    for e in crate::arith::divisors(d as u64) {
        if (e as u32) < d {
            div = poly_mul(&div, &cyclotomic_polynomial(e as u32));
        }
    }
    poly_div_exact(&num, &div)
}

/// Precomputed data for one field order: phi(d), the minimal polynomial, and
/// reduction rows expressing x^k mod Phi_d in the power basis for every
/// exponent any operation can produce (products reach 2 phi - 2, conjugation
/// reaches d - 1).
pub struct CycContext {
    pub d: u32,
    pub phi: usize,
    pub min_poly: Poly,
    red: Vec<Vec<BigInt>>,
}

impl CycContext {
    fn build(d: u32) -> CycContext {
        let phi = euler_phi(d) as usize;
        let min_poly = cyclotomic_polynomial(d);
        assert_eq!(min_poly.len(), phi + 1);
        let max_exp = (2 * phi).saturating_sub(2).max(d as usize - 1).max(1);
        let mut red: Vec<Vec<BigInt>> = Vec::with_capacity(max_exp + 1);
        for k in 0..=max_exp {
            if k < phi {
                let mut row = vec![BigInt::zero(); phi];
                row[k] = BigInt::one();
                red.push(row);
            } else {
                // x^k = x * x^(k-1), then fold the overflow coefficient via
                // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}).
                let prev = red[k - 1].clone();
                let mut row = vec![BigInt::zero(); phi];
                for i in 1..phi {
                    row[i] = prev[i - 1].clone();
                }
                let top = prev[phi - 1].clone();
                if !top.is_zero() {
                    for i in 0..phi {
                        row[i] -= &top * &min_poly[i];
                    }
                }
                red.push(row);
            }
        }
        CycContext { d, phi, min_poly, red }
    }

    /// x^k mod Phi_d in the power basis; k may be any exponent up to the
    /// precomputed table size.
    pub fn reduce_power(&self, k: usize) -> &[BigInt] {
        &self.red[k]
    }
}

static CONTEXTS: OnceLock<Mutex<BTreeMap<u32, Arc<CycContext>>>> = OnceLock::new();

pub fn context(d: u32) -> Arc<CycContext> {
    let map = CONTEXTS.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = map.lock().unwrap();
    guard.entry(d).or_insert_with(|| Arc::new(CycContext::build(d))).clone()
}

/// An element of Q(zeta_d): numerator coefficients in the power basis
/// 1, z, ..., z^(phi-1) over a positive denominator, gcd-reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycNum {
    d: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    fn make(d: u32, num: Vec<BigInt>, den: BigInt) -> CycNum {
        let mut x = CycNum { d, num, den };
        x.canonicalize();
        x
    }

    fn canonicalize(&mut self) {
        assert!(!self.den.is_zero());
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in &mut self.num {
                *c = -c.clone();
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
        }
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn zero(d: u32) -> CycNum {
        let phi = euler_phi(d) as usize;
        CycNum { d, num: vec![BigInt::zero(); phi], den: BigInt::one() }
    }

    pub fn one(d: u32) -> CycNum {
        CycNum::from_int(d, 1)
    }

    pub fn from_int(d: u32, v: i64) -> CycNum {
        CycNum::from_bigint(d, BigInt::from(v))
    }

    pub fn from_bigint(d: u32, v: BigInt) -> CycNum {
        let phi = euler_phi(d) as usize;
        let mut num = vec![BigInt::zero(); phi];
        num[0] = v;
        CycNum { d, num, den: BigInt::one() }
    }

    pub fn from_rational(d: u32, v: &BigRational) -> CycNum {
        let phi = euler_phi(d) as usize;
        let mut num = vec![BigInt::zero(); phi];
        num[0] = v.numer().clone();
        CycNum::make(d, num, v.denom().clone())
    }

    /// zeta_d^k for any integer exponent k.
    pub fn root_power(d: u32, k: i64) -> CycNum {
        let ctx = context(d);
        let k = k.rem_euclid(d as i64) as usize;
        CycNum::make(d, ctx.reduce_power(k).to_vec(), BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(|c| c.is_zero())
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &CycNum) {
        assert_eq!(self.d, other.d, "mixed cyclotomic orders");
    }

    pub fn add(&self, other: &CycNum) -> CycNum {
        self.assert_same_field(other);
        let den = self.den.lcm(&other.den);
        let la = &den / &self.den;
        let lb = &den / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &la + b * &lb)
            .collect();
        CycNum::make(self.d, num, den)
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            d: self.d,
            num: self.num.iter().map(|c| -c.clone()).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &CycNum) -> CycNum {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CycNum) -> CycNum {
        self.assert_same_field(other);
        let ctx = context(self.d);
        let phi = ctx.phi;
        let mut conv = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let mut num = vec![BigInt::zero(); phi];
        for (k, c) in conv.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                num[k] += c;
            } else {
                for (i, r) in ctx.reduce_power(k).iter().enumerate() {
                    if !r.is_zero() {
                        num[i] += c * r;
                    }
                }
            }
        }
        CycNum::make(self.d, num, &self.den * &other.den)
    }

    pub fn scale(&self, s: &BigRational) -> CycNum {
        let num = self.num.iter().map(|c| c * s.numer()).collect();
        CycNum::make(self.d, num, &self.den * s.denom())
    }

    pub fn scale_int(&self, s: i64) -> CycNum {
        let s = BigInt::from(s);
        let num = self.num.iter().map(|c| c * &s).collect();
        CycNum::make(self.d, num, self.den.clone())
    }

    /// Complex conjugation, the ring map induced by z -> z^(d-1).
    pub fn conj(&self) -> CycNum {
        let ctx = context(self.d);
        let phi = ctx.phi;
        let mut num = vec![BigInt::zero(); phi];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let target = if k == 0 { 0 } else { self.d as usize - k };
            for (i, r) in ctx.reduce_power(target).iter().enumerate() {
                if !r.is_zero() {
                    num[i] += c * r;
                }
            }
        }
        CycNum::make(self.d, num, self.den.clone())
    }

    pub fn is_conj_fixed(&self) -> bool {
        self.conj() == *self
    }

    pub fn pow(&self, e: u32) -> CycNum {
        let mut acc = CycNum::one(self.d);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl std::fmt::Display for CycNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            });
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let s = terms.join(" + ");
        if self.den.is_one() {
            write!(f, "{s}")
        } else {
            write!(f, "({s})/{}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_i64(p: &[i64]) -> Poly {
        p.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(cyclotomic_polynomial(1), poly_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), poly_i64(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), poly_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), poly_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(5), poly_i64(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), poly_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(10), poly_i64(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), poly_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(15),
            poly_i64(&[1, -1, 0, 1, -1, 1, 0, -1, 1])
        );
    }

    #[test]
    fn divisor_product_recovers_x_n_minus_1() {
        for n in 1u32..=24 {
            let mut prod = vec![BigInt::one()];
            for e in crate::arith::divisors(n as u64) {
                prod = poly_mul(&prod, &cyclotomic_polynomial(e as u32));
            }
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[n as usize] = BigInt::one();
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn root_power_satisfies_minimal_polynomial() {
        for d in [2u32, 3, 4, 5, 6, 8, 12, 15] {
            let z = CycNum::root_power(d, 1);
            // Sum of z^k over the minimal polynomial's coefficients is zero.
            let ctx = context(d);
            let mut acc = CycNum::zero(d);
            for (k, c) in ctx.min_poly.iter().enumerate() {
                let term = CycNum::root_power(d, k as i64)
                    .scale(&BigRational::from(c.clone()));
                acc = acc.add(&term);
            }
            assert!(acc.is_zero(), "Phi_{d}(zeta) != 0");
            // z^d = 1.
            assert_eq!(z.pow(d), CycNum::one(d));
        }
    }

    #[test]
    fn conjugation_is_an_involution_and_fixes_rationals() {
        for d in [3u32, 5, 8, 12] {
            let z = CycNum::root_power(d, 1);
            let half = CycNum::from_rational(d, &BigRational::new(1.into(), 2.into()));
            let x = z.add(&half).mul(&z.sub(&CycNum::from_int(d, 3)));
            assert_eq!(x.conj().conj(), x);
            assert!(half.is_conj_fixed());
            // z * conj(z) = 1 since conj(z) = z^{d-1}.
            assert_eq!(z.mul(&z.conj()), CycNum::one(d));
            // z + conj(z) is fixed by conjugation.
            assert!(z.add(&z.conj()).is_conj_fixed());
        }
    }

    #[test]
    fn arithmetic_and_canonical_form() {
        let d = 5;
        let z = CycNum::root_power(d, 1);
        let a = z.scale(&BigRational::new(2.into(), 4.into()));
        let b = z.scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(a, b);
        assert!(a.sub(&b).is_zero());
        // (1 + z)(1 - z) = 1 - z^2
        let one = CycNum::one(d);
        let lhs = one.add(&z).mul(&one.sub(&z));
        let rhs = one.sub(&z.mul(&z));
        assert_eq!(lhs, rhs);
        // In Q(zeta_5): 1 + z + z^2 + z^3 + z^4 = 0, with z^4 reduced.
        let mut acc = CycNum::zero(d);
        for k in 0..5 {
            acc = acc.add(&CycNum::root_power(d, k));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn rational_detection() {
        let d = 7;
        let z = CycNum::root_power(d, 1);
        assert!(!z.is_rational());
        let x = CycNum::from_rational(d, &BigRational::new(22.into(), 7.into()));
        assert_eq!(x.as_rational(), Some(BigRational::new(22.into(), 7.into())));
        // Norm-like product z * z^6 = 1 is rational.
        assert_eq!(z.mul(&z.pow(6)).as_rational(), Some(BigRational::one()));
    }

    #[test]
    fn order_two_field_is_signed_rationals() {
        let x = CycNum::root_power(2, 1);
        assert_eq!(x.as_rational(), Some(BigRational::from(BigInt::from(-1))));
        assert_eq!(x.mul(&x), CycNum::one(2));
    }
}
