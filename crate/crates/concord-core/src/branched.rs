//! Double branched cover homology, knot determinant, linking forms of cyclic
//! covers, and the Moebius-band obstruction they support.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::SeifertMatrix;
use crate::surgery::{cokernel_of_rows, AbelianGroupWithGens};
use crate::{Error, Result};

/// Knot determinant: |det(A + A^T)|, the order of the first homology of the
/// double branched cover when finite.
pub fn determinant(j: &SeifertMatrix) -> BigInt {
    let a = j.matrix();
    a.add(&a.transpose()).determinant().expect("square by construction").abs()
}

/// First homology of the double branched cover: cokernel of A + A^T.
pub fn dbc_homology(j: &SeifertMatrix) -> AbelianGroupWithGens {
    let a = j.matrix();
    let m = a.add(&a.transpose());
    let labels = (1..=m.cols()).map(|i| format!("g{i}")).collect();
    cokernel_of_rows(&m, labels)
}

/// Linking form data of a cyclic double branched cover: the order and the
/// self-linking of one explicit generator, as a rational mod 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingFormData {
    #[serde(with = "crate::matrix::bigint_string")]
    pub n: BigInt,
    #[serde(with = "crate::matrix::bigrational_string")]
    pub self_link: BigRational,
    pub cyclic: bool,
}

impl std::fmt::Display for LinkingFormData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Z/{} with lk(g,g) = {} mod 1", self.n, self.self_link)
    }
}

/// Self-linking of a generator of H_1 of the double branched cover, under
/// the convention lk = -(A + A^T)^{-1} reduced mod 1 into [0, 1).
///
/// Inapplicable unless that homology is finite cyclic of order > 1.
pub fn linking_form(j: &SeifertMatrix) -> Result<LinkingFormData> {
    let group = dbc_homology(j);
    if !group.is_finite() {
        return Err(Error::inapplicable("double cover homology is infinite"));
    }
    if !group.is_cyclic() {
        return Err(Error::inapplicable(format!(
            "double cover homology {group} is not cyclic"
        )));
    }
    let n = group.order().expect("finite checked above");
    if n.is_one() {
        return Err(Error::inapplicable(
            "double cover homology is trivial: no generator to evaluate",
        ));
    }

    // The lone nontrivial invariant factor is the last one; pull its basis
    // vector back to the presentation generators.
    let size = group.factors().len();
    let g = group.factor_generator(size - 1);
    let a = j.matrix();
    let m = a.add(&a.transpose());
    let m_inv = m.inverse_rational().expect("nonzero determinant");
    let mut v = BigRational::zero();
    for (r, gr) in g.iter().enumerate() {
        for (c, gc) in g.iter().enumerate() {
            v += &m_inv[r][c] * BigRational::from(gr * gc);
        }
    }
    let self_link = {
        let neg = -v;
        &neg - neg.floor()
    };
    // lk(g,g) must be a fraction with exact denominator n for a generator of
    // a nondegenerate form on Z/n.
    let scaled = &self_link * BigRational::from(n.clone());
    if !scaled.is_integer() {
        return Err(Error::internal(format!(
            "self-linking {self_link} is not an n-th: denominator does not divide {n}"
        )));
    }
    Ok(LinkingFormData { n, self_link, cyclic: true })
}

/// Verdict of the Moebius-band obstruction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoebiusVerdict {
    /// No generator self-links to +-1/n: the knot bounds no Moebius band
    /// (as a locally flat surface) with the stated cover data.
    Obstructed,
    /// Some generator realizes +-1/n; the test says nothing.
    NotObstructed,
    /// The hypotheses fail (non-cyclic, infinite, trivial, an even prime
    /// exponent in n, or out-of-scope size); no verdict.
    Inapplicable { reason: String },
}

impl std::fmt::Display for MoebiusVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MoebiusVerdict::Obstructed => write!(f, "obstructed"),
            MoebiusVerdict::NotObstructed => write!(f, "not obstructed"),
            MoebiusVerdict::Inapplicable { reason } => write!(f, "inapplicable: {reason}"),
        }
    }
}

const MOEBIUS_SCOPE: u64 = 1_000_000_000;

/// Moebius-band obstruction: with H_1 of the double branched cover cyclic of
/// order n, every prime in n appearing with odd exponent, a bounding Moebius
/// band would force some generator a with lk(a,a) = +-1/n. All generators
/// u*g (u a unit mod n) are checked; Obstructed means none qualifies.
pub fn moebius_obstruction(j: &SeifertMatrix) -> Result<MoebiusVerdict> {
    let lk = match linking_form(j) {
        Ok(lk) => lk,
        Err(Error::Inapplicable(reason)) => return Ok(MoebiusVerdict::Inapplicable { reason }),
        Err(e) => return Err(e),
    };
    let n = match lk.n.to_u64() {
        Some(n) if n <= MOEBIUS_SCOPE => n,
        _ => {
            return Ok(MoebiusVerdict::Inapplicable {
                reason: format!("order {} exceeds the enumeration scope {MOEBIUS_SCOPE}", lk.n),
            })
        }
    };
    for (p, e) in crate::arith::factorize(n) {
        if e % 2 == 0 {
            return Ok(MoebiusVerdict::Inapplicable {
                reason: format!("prime {p} divides the order {n} with even exponent {e}"),
            });
        }
    }

    let q = (&lk.self_link * BigRational::from(BigInt::from(n)))
        .to_integer()
        .to_u64()
        .expect("reduced into [0, n) by construction");
    if num_integer::gcd(q, n) != 1 {
        return Err(Error::internal(format!(
            "degenerate linking form: gcd({q}, {n}) > 1"
        )));
    }

    // Generators of Z/n are exactly u*g for units u, with self-linking
    // u^2 q / n. Sweeping all u in [1, n) is equivalent: for a non-unit u,
    // u^2 q shares a factor with n and can never be +-1 mod n.
    let hit = (1..n).any(|u| {
        let t = (u * u) % n * q % n;
        t == 1 || t == n - 1
    });
    Ok(if hit { MoebiusVerdict::NotObstructed } else { MoebiusVerdict::Obstructed })
}

/// Crosscap bound from an odd winding number w = 2k + 1: the pattern bounds
/// a surface with k crosscaps, so the nonorientable 4-genus is at most k.
pub fn nonorientable_genus_upper_bound(w: i64) -> Result<u64> {
    if w % 2 == 0 {
        return Err(Error::invalid(format!("winding number must be odd, got {w}")));
    }
    Ok((w.unsigned_abs() - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        connected_sum, figure_eight, knot_10_124, mirror, reverse, torus_knot_2k, unknot,
        Handedness,
    };

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn determinants_of_catalog_knots() {
        assert_eq!(determinant(&unknot()), BigInt::one());
        assert_eq!(determinant(&figure_eight()), BigInt::from(5));
        assert_eq!(determinant(&knot_10_124(Handedness::Right)), BigInt::one());
        assert_eq!(
            determinant(&torus_knot_2k(9, Handedness::Left).unwrap()),
            BigInt::from(9)
        );
    }

    #[test]
    fn double_cover_homology_groups() {
        assert!(dbc_homology(&unknot()).is_trivial());
        assert_eq!(
            dbc_homology(&figure_eight()).nontrivial_factors(),
            vec![BigInt::from(5)]
        );
        let t3 = torus_knot_2k(3, Handedness::Right).unwrap();
        assert_eq!(dbc_homology(&t3).nontrivial_factors(), vec![BigInt::from(3)]);
        let granny = connected_sum(&t3, &t3);
        assert_eq!(
            dbc_homology(&granny).nontrivial_factors(),
            vec![BigInt::from(3), BigInt::from(3)]
        );
    }

    #[test]
    fn order_matches_determinant() {
        for j in crate::catalog::full_catalog() {
            let g = dbc_homology(&j);
            assert_eq!(g.order(), Some(determinant(&j)), "{}", j.name());
        }
    }

    #[test]
    fn linking_forms_of_small_knots() {
        let lk = linking_form(&figure_eight()).unwrap();
        assert_eq!(lk.n, BigInt::from(5));
        assert!(lk.self_link == rat(2, 5) || lk.self_link == rat(3, 5), "{}", lk.self_link);

        let t3 = torus_knot_2k(3, Handedness::Right).unwrap();
        let lk = linking_form(&t3).unwrap();
        assert_eq!(lk.n, BigInt::from(3));
        assert!(lk.self_link == rat(1, 3) || lk.self_link == rat(2, 3));

        let granny = connected_sum(&t3, &t3);
        assert!(matches!(linking_form(&granny), Err(Error::Inapplicable(_))));
        assert!(matches!(linking_form(&unknot()), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn moebius_verdicts() {
        assert_eq!(
            moebius_obstruction(&figure_eight()).unwrap(),
            MoebiusVerdict::Obstructed
        );
        let t3 = torus_knot_2k(3, Handedness::Right).unwrap();
        assert_eq!(moebius_obstruction(&t3).unwrap(), MoebiusVerdict::NotObstructed);
        let granny = connected_sum(&t3, &t3);
        assert!(matches!(
            moebius_obstruction(&granny).unwrap(),
            MoebiusVerdict::Inapplicable { .. }
        ));
        // Determinant 9 = 3^2 has an even prime exponent.
        let t9 = torus_knot_2k(9, Handedness::Right).unwrap();
        assert!(matches!(
            moebius_obstruction(&t9).unwrap(),
            MoebiusVerdict::Inapplicable { .. }
        ));
    }

    #[test]
    fn determinant_one_summands_change_nothing() {
        let j = connected_sum(&figure_eight(), &knot_10_124(Handedness::Right));
        let lk = linking_form(&j).unwrap();
        assert_eq!(lk.n, BigInt::from(5));
        assert_eq!(moebius_obstruction(&j).unwrap(), MoebiusVerdict::Obstructed);
        let j2 = connected_sum(&j, &knot_10_124(Handedness::Left));
        assert_eq!(moebius_obstruction(&j2).unwrap(), MoebiusVerdict::Obstructed);
    }

    #[test]
    fn verdicts_respect_symmetries() {
        for j in [figure_eight(), torus_knot_2k(3, Handedness::Right).unwrap()] {
            let base = moebius_obstruction(&j).unwrap();
            assert_eq!(moebius_obstruction(&reverse(&j)).unwrap(), base);
            assert_eq!(moebius_obstruction(&mirror(&j)).unwrap(), base);
        }
    }

    #[test]
    fn crosscap_bound_arithmetic() {
        assert_eq!(nonorientable_genus_upper_bound(1).unwrap(), 0);
        assert_eq!(nonorientable_genus_upper_bound(5).unwrap(), 2);
        assert_eq!(nonorientable_genus_upper_bound(-7).unwrap(), 3);
        assert!(nonorientable_genus_upper_bound(4).is_err());
    }
}
