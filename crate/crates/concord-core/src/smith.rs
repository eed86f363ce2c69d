//! Smith normal form with unimodular transforms.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// Result of a Smith normal form computation: `u * a * v = d` where `u`, `v`
/// are unimodular, `d` is diagonal with nonnegative entries and each diagonal
/// entry divides the next. `u_inv` and `v_inv` are the exact inverses, tracked
/// alongside the elimination so no matrix inversion is ever needed.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal of `d` as a vector of length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// row[i] += c * row[j]; the inverse operation on u_inv is col[j] -= c * col[i].
    fn addmul_row(&mut self, i: usize, j: usize, c: &BigInt) {
        self.a.addmul_row(i, j, c);
        self.u.addmul_row(i, j, c);
        let neg = -c;
        self.u_inv.addmul_col(j, i, &neg);
    }

    fn addmul_col(&mut self, i: usize, j: usize, c: &BigInt) {
        self.a.addmul_col(i, j, c);
        self.v.addmul_col(i, j, c);
        let neg = -c;
        self.v_inv.addmul_row(j, i, &neg);
    }
}

/// Position of a nonzero entry of minimal absolute value in the trailing
/// submatrix starting at (t, t).
fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Clears row and column `t` against the pivot at (t, t), shrinking the pivot
/// whenever a remainder appears. Returns once the cross is zero and the pivot
/// divides every entry of the trailing submatrix.
fn reduce_at(w: &mut Work, t: usize) {
    loop {
        let (pi, pj) = match min_pivot(&w.a, t) {
            Some(p) => p,
            None => return,
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }

        let mut dirty = false;
        for i in t + 1..w.a.rows() {
            if !w.a.get(i, t).is_zero() {
                let q = w.a.get(i, t) / w.a.get(t, t);
                let neg = -q;
                w.addmul_row(i, t, &neg);
                if !w.a.get(i, t).is_zero() {
                    dirty = true; // remainder became the new smallest entry
                }
            }
        }
        for j in t + 1..w.a.cols() {
            if !w.a.get(t, j).is_zero() {
                let q = w.a.get(t, j) / w.a.get(t, t);
                let neg = -q;
                w.addmul_col(j, t, &neg);
                if !w.a.get(t, j).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }

        // Cross is clear; make sure the pivot divides the rest of the block.
        let piv = w.a.get(t, t).clone();
        let mut offender = None;
        'scan: for i in t + 1..w.a.rows() {
            for j in t + 1..w.a.cols() {
                if !(w.a.get(i, j) % &piv).is_zero() {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        match offender {
            Some(i) => {
                // Fold the offending row into row t and restart; the next
                // pivot will be a proper divisor of the current one.
                let one = BigInt::from(1);
                w.addmul_row(t, i, &one);
            }
            None => return,
        }
    }
}

/// Smith normal form of an arbitrary integer matrix (square or not).
///
/// Pivots are chosen by minimal absolute value, each pivot clears its whole
/// row and column before the algorithm moves on, and a final pass repairs the
/// divisibility chain. All four transforms are maintained through every
/// elementary operation.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: IntMatrix::identity(r),
        u_inv: IntMatrix::identity(r),
        v: IntMatrix::identity(c),
        v_inv: IntMatrix::identity(c),
    };

    let steps = r.min(c);
    for t in 0..steps {
        reduce_at(&mut w, t);
        if w.a.get(t, t).is_zero() {
            break; // trailing block is zero
        }
    }

    // reduce_at guarantees d[t] divides everything in the trailing block, and
    // in particular d[t] | d[t+1], so the chain already holds; assert rather
    // than re-fix.
    debug_assert!({
        let n = steps;
        (1..n).all(|i| {
            let prev = w.a.get(i - 1, i - 1);
            let cur = w.a.get(i, i);
            prev.is_zero() && cur.is_zero() || !prev.is_zero() && (cur % prev).is_zero()
        })
    });

    SmithDecomposition {
        d: w.a,
        u: w.u,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows_i64(rows).unwrap()
    }

    fn check(s: &SmithDecomposition, original: &IntMatrix) {
        // u * a * v = d
        let lhs = s.u.mul(original).mul(&s.v);
        assert_eq!(lhs, s.d, "transform identity failed");
        // unimodularity via tracked inverses and determinant
        assert!(s.u.mul(&s.u_inv).is_identity());
        assert!(s.v.mul(&s.v_inv).is_identity());
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        // diagonal, nonnegative, divisibility chain
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero(), "off-diagonal residue");
                }
            }
        }
        let diag = s.diagonal();
        for x in &diag {
            assert!(!x.is_negative());
        }
        for k in 1..diag.len() {
            if diag[k - 1].is_zero() {
                assert!(diag[k].is_zero());
            } else {
                assert!((&diag[k] % &diag[k - 1]).is_zero(), "chain broken");
            }
        }
    }

    #[test]
    fn identity_stays_identity() {
        let a = IntMatrix::identity(3);
        let s = smith_normal_form(&a);
        check(&s, &a);
        assert_eq!(s.d, IntMatrix::identity(3));
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(3));
    }

    #[test]
    fn coprime_diagonal_collapses() {
        let a = m(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&a);
        check(&s, &a);
        assert_eq!(s.diagonal(), vec![BigInt::one(), BigInt::from(6)]);
    }

    #[test]
    fn shared_factor_preserved() {
        let a = m(&[vec![5, 0], vec![-10, 5]]);
        let s = smith_normal_form(&a);
        check(&s, &a);
        assert_eq!(s.diagonal(), vec![BigInt::from(5), BigInt::from(5)]);
    }

    #[test]
    fn rectangular_and_zero() {
        let a = m(&[vec![0, 0], vec![0, 0], vec![0, 0]]);
        let s = smith_normal_form(&a);
        check(&s, &a);
        assert_eq!(s.rank(), 0);

        let b = m(&[vec![2, 4, 4]]);
        let s = smith_normal_form(&b);
        check(&s, &b);
        assert_eq!(s.diagonal(), vec![BigInt::from(2)]);

        let c = m(&[vec![6, 8], vec![4, 10], vec![2, 2]]);
        let s = smith_normal_form(&c);
        check(&s, &c);
    }

    #[test]
    fn divisibility_repair() {
        // 2x2 with entries forcing a gcd fix: diag(4, 6) -> diag(2, 12).
        let a = m(&[vec![4, 0], vec![0, 6]]);
        let s = smith_normal_form(&a);
        check(&s, &a);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn empty_matrix() {
        let a = IntMatrix::zeros(0, 0);
        let s = smith_normal_form(&a);
        assert_eq!(s.d.rows(), 0);
        assert!(s.u.is_identity() && s.v.is_identity());
    }
}
