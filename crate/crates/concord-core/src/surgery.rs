//! First homology of 3-manifolds presented by framed-link linking matrices,
//! with tracked generator expressions, plus the boundary presentation and
//! framing arithmetic used by the obstruction pipeline.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::matrix::IntMatrix;
use crate::smith::smith_normal_form;
use crate::{Error, Result};

/// A surgery presentation: symmetric linking-framing matrix (diagonal =
/// framings, off-diagonal = linking numbers) and one label per component.
/// Rows are read as relations over the labeled generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedLinkPresentation {
    l: IntMatrix,
    labels: Vec<String>,
}

impl FramedLinkPresentation {
    pub fn new(l: IntMatrix, labels: Vec<String>) -> Result<FramedLinkPresentation> {
        let n = l.rows();
        if n == 0 || l.cols() != n {
            return Err(Error::invalid(format!(
                "presentation matrix must be square and nonempty, got {}x{}",
                l.rows(),
                l.cols()
            )));
        }
        if l != l.transpose() {
            return Err(Error::invalid("linking-framing matrix must be symmetric"));
        }
        if labels.len() != n {
            return Err(Error::invalid(format!(
                "expected {} labels, got {}",
                n,
                labels.len()
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::invalid(format!("duplicate generator label {a:?}")));
            }
        }
        Ok(FramedLinkPresentation { l, labels })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.l
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dimension(&self) -> usize {
        self.l.rows()
    }
}

/// A finitely generated abelian group in invariant-factor form, remembering
/// how the original presentation generators sit inside it.
///
/// `factors` lists the diagonal of the Smith form padded to one entry per
/// generator: d_1 | d_2 | ... with 0 encoding an infinite (free) factor.
/// Column j of `expression` writes original generator j in invariant-factor
/// coordinates; `expression_inv` is its inverse, so column i pulls the i-th
/// invariant-factor basis vector back to the original generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroupWithGens {
    #[serde(with = "crate::matrix::bigint_vec")]
    factors: Vec<BigInt>,
    expression: IntMatrix,
    expression_inv: IntMatrix,
    labels: Vec<String>,
}

impl AbelianGroupWithGens {
    /// Full factor list, one per original generator (1 = trivial factor).
    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    /// Invariant factors with trivial ones dropped: entries > 1, then 0s.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn is_finite(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.nontrivial_factors().is_empty()
    }

    /// Number of elements, or None when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(self.factors.iter().product())
    }

    /// True when the group needs at most one generator (Z counts as cyclic).
    pub fn is_cyclic(&self) -> bool {
        self.nontrivial_factors().len() <= 1
    }

    pub fn expression(&self) -> &IntMatrix {
        &self.expression
    }

    /// Original-generator coordinates of the i-th invariant-factor generator.
    pub fn factor_generator(&self, i: usize) -> Vec<BigInt> {
        (0..self.factors.len()).map(|r| self.expression_inv.get(r, i).clone()).collect()
    }

    /// Invariant-factor coordinates of original generator j, reduced into
    /// [0, d_i) on finite factors.
    pub fn image_of_generator(&self, j: usize) -> Vec<BigInt> {
        (0..self.factors.len())
            .map(|i| {
                let y = self.expression.get(i, j);
                let d = &self.factors[i];
                if d.is_zero() {
                    y.clone()
                } else {
                    y.mod_floor(d)
                }
            })
            .collect()
    }

    /// Order of the class of original generator j; 0 encodes infinite.
    pub fn order_of_generator(&self, j: usize) -> BigInt {
        let mut ord = BigInt::one();
        for (i, d) in self.factors.iter().enumerate() {
            let y = self.expression.get(i, j);
            if d.is_zero() {
                if !y.is_zero() {
                    return BigInt::zero();
                }
            } else {
                ord = ord.lcm(&(d / d.gcd(y)));
            }
        }
        ord
    }
}

impl std::fmt::Display for AbelianGroupWithGens {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nt = self.nontrivial_factors();
        if nt.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = nt
            .iter()
            .map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cokernel of the row span of `m` acting on one generator per column,
/// carrying labels through. The Smith transform of the transpose supplies
/// both the invariant factors and the change of basis.
pub fn cokernel_of_rows(m: &IntMatrix, labels: Vec<String>) -> AbelianGroupWithGens {
    let cols = m.cols();
    debug_assert_eq!(labels.len(), cols);
    let s = smith_normal_form(&m.transpose());
    let mut factors = s.diagonal();
    factors.resize(cols, BigInt::zero());
    AbelianGroupWithGens { factors, expression: s.u.clone(), expression_inv: s.u_inv.clone(), labels }
}

/// First homology of the presented 3-manifold: the cokernel of the
/// linking-framing relations.
pub fn h1_of_presentation(p: &FramedLinkPresentation) -> AbelianGroupWithGens {
    cokernel_of_rows(p.matrix(), p.labels().to_vec())
}

/// The two-component boundary presentation with relations
/// f*mu_K + w*H = 0 and w*mu_K = 0.
pub fn boundary_presentation(w: i64, f: i64) -> Result<FramedLinkPresentation> {
    if w == 0 {
        return Err(Error::invalid("winding number w must be nonzero"));
    }
    let l = IntMatrix::from_rows_i64(&[vec![f, w], vec![w, 0]]).expect("fixed 2x2 shape");
    FramedLinkPresentation::new(l, vec!["mu_K".to_string(), "H".to_string()])
}

/// The framing forced by a lift choice: f = -2 w lambda.
pub fn framing_constraint(w: i64, lambda: i64) -> i64 {
    -2 * w * lambda
}

/// Which side of the gcd(lambda, d) dichotomy a framing falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GcdBranch {
    Coprime,
    Shared,
}

impl std::fmt::Display for GcdBranch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GcdBranch::Coprime => write!(f, "gcd(lambda,d)=1"),
            GcdBranch::Shared => write!(f, "gcd(lambda,d)>1"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleFraming {
    pub lambda: i64,
    pub f: i64,
    pub branch: GcdBranch,
}

/// All framings f = -2 w lambda over a lambda range, each tagged with its
/// gcd(lambda, d) branch. Note gcd(0, d) = d, so lambda = 0 is Shared for
/// every d > 1.
pub fn admissible_framings(
    w: i64,
    lambda_range: std::ops::RangeInclusive<i64>,
    d: u64,
) -> Result<Vec<AdmissibleFraming>> {
    if w == 0 {
        return Err(Error::invalid("winding number w must be nonzero"));
    }
    if d == 0 {
        return Err(Error::invalid("divisor d must be positive"));
    }
    Ok(lambda_range
        .map(|lambda| {
            let branch = if crate::arith::gcd_with(lambda, d) == 1 {
                GcdBranch::Coprime
            } else {
                GcdBranch::Shared
            };
            AdmissibleFraming { lambda, f: framing_constraint(w, lambda), branch }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn group(w: i64, f: i64) -> AbelianGroupWithGens {
        h1_of_presentation(&boundary_presentation(w, f).unwrap())
    }

    #[test]
    fn single_zero_framed_component_gives_z() {
        let p = FramedLinkPresentation::new(
            IntMatrix::from_rows_i64(&[vec![0]]).unwrap(),
            vec!["mu".to_string()],
        )
        .unwrap();
        let g = h1_of_presentation(&p);
        assert_eq!(g.nontrivial_factors(), vec![BigInt::from(0)]);
        assert_eq!(g.rank(), 1);
        assert!(g.is_cyclic() && !g.is_finite());
        assert_eq!(g.order_of_generator(0), BigInt::from(0));
    }

    #[test]
    fn boundary_presentations_match_known_groups() {
        let g = group(5, -10);
        assert_eq!(g.nontrivial_factors(), vec![BigInt::from(5), BigInt::from(5)]);
        assert_eq!(g.order(), Some(BigInt::from(25)));
        assert!(!g.is_cyclic());

        let g = group(5, 1);
        assert_eq!(g.nontrivial_factors(), vec![BigInt::from(25)]);
        assert!(g.is_cyclic());

        assert!(group(1, -2).is_trivial());

        let g = group(6, 0);
        assert_eq!(g.nontrivial_factors(), vec![BigInt::from(6), BigInt::from(6)]);

        assert!(boundary_presentation(0, 3).is_err());
    }

    #[test]
    fn generator_images_have_full_order_in_square_case() {
        // With f = -2 w lambda both mu_K and H generate a Z/w factor.
        for (w, lambda) in [(5i64, 1i64), (7, -2), (4, 0), (9, 3)] {
            let g = group(w, framing_constraint(w, lambda));
            assert_eq!(
                g.nontrivial_factors(),
                vec![BigInt::from(w), BigInt::from(w)],
                "w={w} lambda={lambda}"
            );
            for j in 0..2 {
                assert_eq!(g.order_of_generator(j), BigInt::from(w));
            }
        }
    }

    #[test]
    fn group_order_equals_determinant_magnitude() {
        for (w, f) in [(5i64, -10i64), (5, 1), (3, 7), (12, -6), (1, 0)] {
            let p = boundary_presentation(w, f).unwrap();
            let det = p.matrix().determinant().unwrap().abs();
            let g = h1_of_presentation(&p);
            assert_eq!(g.order(), Some(det), "w={w} f={f}");
        }
    }

    #[test]
    fn expression_round_trips() {
        let g = group(5, -10);
        let n = g.factors().len();
        let id = IntMatrix::identity(n);
        assert_eq!(g.expression().mul(&g.expression_inv), id);
        // Pulling back factor generators and pushing them forward hits the
        // standard basis.
        for i in 0..n {
            let back = g.factor_generator(i);
            let mut image = vec![BigInt::zero(); n];
            for (r, row_img) in image.iter_mut().enumerate() {
                for (c, b) in back.iter().enumerate() {
                    *row_img += g.expression().get(r, c) * b;
                }
            }
            for (r, v) in image.iter().enumerate() {
                assert_eq!(*v, if r == i { BigInt::one() } else { BigInt::zero() });
            }
        }
    }

    #[test]
    fn framing_constraint_table() {
        assert_eq!(framing_constraint(5, 0), 0);
        assert_eq!(framing_constraint(5, 1), -10);
        assert_eq!(framing_constraint(7, -3), 42);
    }

    #[test]
    fn framing_enumeration_and_branch_tags() {
        let list = admissible_framings(5, -2..=2, 5).unwrap();
        let fs: Vec<i64> = list.iter().map(|a| a.f).collect();
        assert_eq!(fs, vec![20, 10, 0, -10, -20]);
        for a in &list {
            assert_eq!(a.f % 5, 0);
            assert_eq!(a.f, framing_constraint(5, a.lambda));
            let expect = if a.lambda == 0 { GcdBranch::Shared } else { GcdBranch::Coprime };
            assert_eq!(a.branch, expect, "lambda={}", a.lambda);
        }
        let wide = admissible_framings(5, 4..=6, 5).unwrap();
        assert_eq!(wide[1].lambda, 5);
        assert_eq!(wide[1].branch, GcdBranch::Shared);
        assert_eq!(wide[0].branch, GcdBranch::Coprime);
        assert!(admissible_framings(0, 0..=1, 5).is_err());
    }

    #[test]
    fn presentation_validation() {
        let asym = IntMatrix::from_rows_i64(&[vec![0, 1], vec![2, 0]]).unwrap();
        assert!(FramedLinkPresentation::new(asym, vec!["a".into(), "b".into()]).is_err());
        let sym = IntMatrix::from_rows_i64(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(FramedLinkPresentation::new(sym.clone(), vec!["a".into(), "a".into()]).is_err());
        assert!(FramedLinkPresentation::new(sym, vec!["a".into()]).is_err());
    }
}
