//! Seifert matrices for the knots the toolkit works with, and the knot
//! operations mirror, reverse, and connected sum.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::IntMatrix;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    pub fn parse(s: &str) -> Result<Handedness> {
        match s {
            "r" | "right" => Ok(Handedness::Right),
            "l" | "left" => Ok(Handedness::Left),
            other => Err(Error::invalid(format!("unknown handedness '{other}'"))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Handedness::Right => "r",
            Handedness::Left => "l",
        }
    }
}

/// A knot in S^3 presented by a Seifert matrix: a square integer matrix of
/// even size 2g with det(A - A^T) = 1. The 0x0 matrix is the unknot.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeifertMatrix {
    a: IntMatrix,
    name: Option<String>,
}

impl SeifertMatrix {
    pub fn new(a: IntMatrix, name: Option<String>) -> Result<SeifertMatrix> {
        if a.rows() != a.cols() {
            return Err(Error::invalid(format!(
                "Seifert matrix must be square, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        if a.rows() % 2 != 0 {
            return Err(Error::invalid(format!(
                "Seifert matrix size must be even, got {}",
                a.rows()
            )));
        }
        let skew = a.sub(&a.transpose());
        if skew.determinant()? != 1.into() {
            return Err(Error::invalid(
                "det(A - A^T) != 1: not a valid Seifert matrix".to_string(),
            ));
        }
        Ok(SeifertMatrix { a, name })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn size(&self) -> usize {
        self.a.rows()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("(unnamed)")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> SeifertMatrix {
        self.name = Some(name.into());
        self
    }

    /// Matrix-level equality; display names are ignored.
    pub fn same_matrix(&self, other: &SeifertMatrix) -> bool {
        self.a == other.a
    }
}

fn from_rows(rows: &[Vec<i64>], name: &str) -> SeifertMatrix {
    let a = IntMatrix::from_rows_i64(rows).expect("catalog literal is rectangular");
    SeifertMatrix::new(a, Some(name.to_string())).expect("catalog literal is valid")
}

/// The unknot: empty Seifert matrix.
pub fn unknot() -> SeifertMatrix {
    SeifertMatrix { a: IntMatrix::zeros(0, 0), name: Some("unknot".to_string()) }
}

/// The (2, k) torus knot for odd k >= 3. The right-handed matrix is the
/// (k-1)x(k-1) band with -1 on the diagonal and +1 on the superdiagonal;
/// left-handed is its mirror.
pub fn torus_knot_2k(k: u32, hand: Handedness) -> Result<SeifertMatrix> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::invalid(format!(
            "torus knot parameter must be odd and >= 3, got {k}"
        )));
    }
    let n = (k - 1) as usize;
    let right = IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            -1
        } else if j == i + 1 {
            1
        } else {
            0
        }
    });
    let name = format!("t2k:{k}:{}", hand.tag());
    let a = match hand {
        Handedness::Right => right,
        Handedness::Left => right.transpose().neg(),
    };
    SeifertMatrix::new(a, Some(name))
}

/// The figure-eight knot.
pub fn figure_eight() -> SeifertMatrix {
    from_rows(&[vec![1, 1], vec![0, -1]], "fig8")
}

/// The knot 10_124, realized as the (3,5) torus knot. The frozen literal is
/// the tensor product of the bidiagonal blocks for the (3,*) and (*,5)
/// directions; its determinant is 1 and its classical signature is -8 in the
/// right-handed convention (tests re-derive it from the tensor construction
/// and match the Alexander polynomial).
pub fn knot_10_124(hand: Handedness) -> SeifertMatrix {
    let right = from_rows(
        &[
            vec![-1, 1, 0, 0, 1, -1, 0, 0],
            vec![0, -1, 1, 0, 0, 1, -1, 0],
            vec![0, 0, -1, 1, 0, 0, 1, -1],
            vec![0, 0, 0, -1, 0, 0, 0, 1],
            vec![0, 0, 0, 0, -1, 1, 0, 0],
            vec![0, 0, 0, 0, 0, -1, 1, 0],
            vec![0, 0, 0, 0, 0, 0, -1, 1],
            vec![0, 0, 0, 0, 0, 0, 0, -1],
        ],
        "10_124_r",
    );
    match hand {
        Handedness::Right => right,
        Handedness::Left => mirror(&right).with_name("10_124_l"),
    }
}

/// Mirror image: A -> -A^T. Signatures negate.
pub fn mirror(j: &SeifertMatrix) -> SeifertMatrix {
    let a = j.a.transpose().neg();
    let name = j.name.as_ref().map(|n| format!("mirror({n})"));
    SeifertMatrix::new(a, name).expect("mirror preserves validity")
}

/// Reverse: A -> A^T. Signatures are unchanged.
pub fn reverse(j: &SeifertMatrix) -> SeifertMatrix {
    let a = j.a.transpose();
    let name = j.name.as_ref().map(|n| format!("reverse({n})"));
    SeifertMatrix::new(a, name).expect("reverse preserves validity")
}

/// Connected sum: block-diagonal Seifert matrix.
pub fn connected_sum(j1: &SeifertMatrix, j2: &SeifertMatrix) -> SeifertMatrix {
    let a = j1.a.block_diag(&j2.a);
    let name = match (&j1.name, &j2.name) {
        (Some(a), Some(b)) => Some(format!("{a} # {b}")),
        _ => None,
    };
    SeifertMatrix::new(a, name).expect("connected sum preserves validity")
}

/// n-fold connected sum of copies of one knot.
pub fn multiple_sum(j: &SeifertMatrix, copies: u32) -> SeifertMatrix {
    let mut acc = unknot();
    for _ in 0..copies {
        acc = connected_sum(&acc, j);
    }
    if copies > 0 {
        if let Some(n) = &j.name {
            acc = acc.with_name(format!("{copies}*{n}"));
        }
    }
    acc
}

/// Resolve a bare catalog name.
pub fn resolve_name(name: &str) -> Result<SeifertMatrix> {
    match name {
        "unknot" => Ok(unknot()),
        "trefoil_r" => torus_knot_2k(3, Handedness::Right),
        "trefoil_l" => torus_knot_2k(3, Handedness::Left),
        "fig8" => Ok(figure_eight()),
        "10_124_r" => Ok(knot_10_124(Handedness::Right)),
        "10_124_l" => Ok(knot_10_124(Handedness::Left)),
        other => {
            let parts: Vec<&str> = other.split(':').collect();
            if parts.len() == 3 && parts[0] == "t2k" {
                let k: u32 = parts[1]
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad torus parameter '{}'", parts[1])))?;
                let hand = Handedness::parse(parts[2])?;
                return torus_knot_2k(k, hand);
            }
            Err(Error::invalid(format!("unknown catalog knot '{other}'")))
        }
    }
}

/// Parse any knot specification accepted on the command line: a catalog
/// name, a "sum:" expression such as "sum:12*t2k:5:r+18*t2k:3:l", or an
/// explicit Seifert matrix as a JSON array of integer rows.
pub fn parse_knot_spec(spec: &str) -> Result<SeifertMatrix> {
    let trimmed = spec.trim();
    if trimmed.starts_with('[') {
        let rows: Vec<Vec<i64>> = serde_json::from_str(trimmed)
            .map_err(|e| Error::invalid(format!("bad matrix JSON: {e}")))?;
        let a = IntMatrix::from_rows_i64(&rows)?;
        return SeifertMatrix::new(a, None);
    }
    if let Some(body) = trimmed.strip_prefix("sum:") {
        let mut acc = unknot();
        for term in body.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::invalid("empty term in sum expression".to_string()));
            }
            let (count, name) = match term.split_once('*') {
                Some((c, n)) => {
                    let c: u32 = c.trim().parse().map_err(|_| {
                        Error::invalid(format!("bad multiplier '{}' in sum expression", c.trim()))
                    })?;
                    if c == 0 {
                        return Err(Error::invalid(
                            "zero multiplier in sum expression".to_string(),
                        ));
                    }
                    (c, n.trim())
                }
                None => (1, term),
            };
            let knot = resolve_name(name)?;
            acc = connected_sum(&acc, &multiple_sum(&knot, count));
        }
        return Ok(acc.with_name(trimmed.to_string()));
    }
    resolve_name(trimmed)
}

/// Every catalog knot, with its canonical name (used by sweep-style tests
/// and the reproduce pipeline).
pub fn full_catalog() -> Vec<SeifertMatrix> {
    let mut out = vec![unknot()];
    for k in [3u32, 5, 7, 9] {
        for hand in [Handedness::Right, Handedness::Left] {
            out.push(torus_knot_2k(k, hand).expect("valid parameters"));
        }
    }
    out.push(figure_eight());
    out.push(knot_10_124(Handedness::Right));
    out.push(knot_10_124(Handedness::Left));
    out
}
