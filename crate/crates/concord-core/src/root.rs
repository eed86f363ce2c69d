//! Exact roots of unity as (order, exponent) pairs.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNum;
use crate::error::Error;
use crate::Result;

/// zeta = e^(2 pi i p / d) with 1 <= p <= d-1, so the value 1 is not
/// representable and degenerate evaluation points are ruled out by
/// construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity {
    d: u32,
    p: u32,
}

impl RootOfUnity {
    pub fn new(d: u32, p: u32) -> Result<RootOfUnity> {
        if d < 2 {
            return Err(Error::invalid(format!("root order must be >= 2, got {d}")));
        }
        if p == 0 || p >= d {
            return Err(Error::invalid(format!(
                "root exponent must satisfy 1 <= p <= d-1, got p={p}, d={d}"
            )));
        }
        Ok(RootOfUnity { d, p })
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn exponent(&self) -> u32 {
        self.p
    }

    pub fn is_primitive(&self) -> bool {
        self.p.gcd(&self.d) == 1
    }

    pub fn conjugate(&self) -> RootOfUnity {
        RootOfUnity { d: self.d, p: self.d - self.p }
    }

    /// The same root written with gcd(p, d) = 1. The order never drops to 1
    /// because p >= 1 rules out the value 1.
    pub fn reduced(&self) -> RootOfUnity {
        let g = self.p.gcd(&self.d);
        RootOfUnity { d: self.d / g, p: self.p / g }
    }

    /// zeta^2 in lowest terms; None when zeta^2 = 1.
    pub fn squared(&self) -> Option<RootOfUnity> {
        let p2 = (2 * self.p) % self.d;
        if p2 == 0 {
            return None;
        }
        Some(RootOfUnity { d: self.d, p: p2 }.reduced())
    }

    /// The field element zeta in Q(zeta_d') for the reduced order d'.
    pub fn as_cyclotomic(&self) -> CycNum {
        let r = self.reduced();
        CycNum::root_power(r.d, r.p as i64)
    }
}

impl std::fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.d, self.p)
    }
}
