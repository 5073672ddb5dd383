//! Row reduction over an exact field and affine subspaces in canonical form.

use std::fmt;

use crate::scalar::Field;

/// Brings `rows` to reduced row-echelon form in place and drops zero rows.
/// Returns the pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][col].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..width {
                    let d = f.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - d;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Rank of a matrix (rows are copied).
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// A nonempty affine subspace of `F^d`, stored as the reduced row-echelon
/// form of its defining system `[A | b]` (each row `a·x = b`). Two flats are
/// equal iff their canonical systems are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineFlat<F> {
    dim: usize,
    rows: Vec<Vec<F>>,
}

impl<F: Field> AffineFlat<F> {
    pub fn ambient(dim: usize) -> Self {
        AffineFlat { dim, rows: Vec::new() }
    }

    /// The solution set of `rows` (each of length `dim + 1`, constant last),
    /// or `None` when the system is inconsistent.
    pub fn from_equations(dim: usize, rows: Vec<Vec<F>>) -> Option<Self> {
        let mut rows = rows;
        assert!(rows.iter().all(|r| r.len() == dim + 1), "equation width");
        let pivots = rref(&mut rows);
        if pivots.last() == Some(&dim) {
            return None;
        }
        Some(AffineFlat { dim, rows })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim - self.rows.len()
    }

    pub fn equations(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Intersection with the hyperplane `eq` (length `dim + 1`).
    pub fn meet(&self, eq: &[F]) -> Option<Self> {
        let mut rows = self.rows.clone();
        rows.push(eq.to_vec());
        AffineFlat::from_equations(self.dim, rows)
    }

    /// Whether every point of `self` satisfies `eq`.
    pub fn lies_in(&self, eq: &[F]) -> bool {
        self.meet(eq).is_some_and(|m| m.codim() == self.codim())
    }

    /// Whether `self` is contained in `other`.
    pub fn is_subspace_of(&self, other: &AffineFlat<F>) -> bool {
        other.rows.iter().all(|r| self.lies_in(r))
    }
}

impl<F: Field> fmt::Display for AffineFlat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "F^{}", self.dim);
        }
        let eqs: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let lhs: Vec<String> = r[..self.dim].iter().map(|c| c.to_string()).collect();
                format!("{} | {}", lhs.join(" "), r[self.dim])
            })
            .collect();
        write!(f, "{}", eqs.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = vec![q(&[2, 4, 6]), q(&[1, 1, 1])];
        let mut b = vec![q(&[1, 2, 3]), q(&[0, 1, 2]), q(&[3, 5, 7])];
        assert_eq!(rref(&mut a), vec![0, 1]);
        assert_eq!(rref(&mut b), vec![0, 1]);
        assert_eq!(a, b);
        assert_eq!(a, vec![q(&[1, 0, -1]), q(&[0, 1, 2])]);
    }

    #[test]
    fn flats_meet_and_contain() {
        let plane = AffineFlat::from_equations(2, vec![q(&[1, -1, 0])]).unwrap();
        let shifted = q(&[1, -1, 1]);
        assert!(plane.meet(&shifted).is_none());
        let point = plane.meet(&q(&[1, 1, 2])).unwrap();
        assert_eq!(point.dim(), 0);
        assert!(point.is_subspace_of(&plane));
        assert!(!plane.is_subspace_of(&point));
        assert!(plane.lies_in(&q(&[2, -2, 0])));
    }

    #[test]
    fn works_over_prime_fields() {
        // over F_2 the rows x + y and x - y coincide
        let rows: Vec<Vec<Fp<2>>> = vec![vec![Fp::new(1), Fp::new(1), Fp::new(0)], vec![Fp::new(1), Fp::new(-1), Fp::new(0)]];
        assert_eq!(rank(&rows), 1);
    }
}
