use std::fmt;

use super::poly::Poly;
use super::AlgebraError;

/// A dense matrix of noncommutative polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl SymbolicMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SymbolicMatrix {
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SymbolicMatrix::zero(n, n);
        for k in 0..n {
            m.set(k, k, Poly::one());
        }
        m
    }

    /// Builds a matrix entry by entry, row-major.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let entries = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c))
            .collect();
        SymbolicMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    fn same_shape(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_shape(other)?;
        Ok(SymbolicMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) + other.get(r, c)
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_shape(other)?;
        Ok(SymbolicMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) - other.get(r, c)
        }))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(SymbolicMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Poly::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(r, k), other.get(k, c));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    /// Block diagonal sum, blocks in the given order.
    pub fn direct_sum<'a>(blocks: impl IntoIterator<Item = &'a SymbolicMatrix>) -> Self {
        let blocks: Vec<_> = blocks.into_iter().collect();
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = SymbolicMatrix::zero(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

/// Entrywise equations `lhs[r][c] = rhs[r][c]`, row-major.
pub fn expand_matrix_relation(
    lhs: &SymbolicMatrix,
    rhs: &SymbolicMatrix,
) -> Result<Vec<(Poly, Poly)>, AlgebraError> {
    lhs.same_shape(rhs)?;
    Ok(lhs
        .entries
        .iter()
        .cloned()
        .zip(rhs.entries.iter().cloned())
        .collect())
}

impl fmt::Display for SymbolicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} matrix", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entrywise_expansion_of_sigma_sigma_prime() {
        // symbols 0..6 for a 2x3 sigma, 6..12 for its 3x2 partner
        let s = SymbolicMatrix::from_fn(2, 3, |r, c| Poly::symbol((r * 3 + c) as u32));
        let sp = SymbolicMatrix::from_fn(3, 2, |r, c| Poly::symbol(6 + (r * 2 + c) as u32));
        let eqs =
            expand_matrix_relation(&s.mul(&sp).unwrap(), &SymbolicMatrix::identity(2)).unwrap();
        assert_eq!(eqs.len(), 4);
        for (k, (l, r)) in eqs.iter().enumerate() {
            assert_eq!(l.len(), 3);
            assert_eq!(r == &Poly::one(), k == 0 || k == 3);
        }
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = SymbolicMatrix::identity(1);
        let b = SymbolicMatrix::zero(1, 2);
        assert!(expand_matrix_relation(&a, &b).is_err());
        assert!(b.mul(&a).is_err());
        assert!(a.mul(&b).is_ok());
    }

    #[test]
    fn direct_sum_dimensions() {
        let e = SymbolicMatrix::from_fn(1, 1, |_, _| Poly::symbol(0));
        let i2 = SymbolicMatrix::identity(2);
        let d = SymbolicMatrix::direct_sum([&e, &i2]);
        assert_eq!((d.rows(), d.cols()), (3, 3));
        assert_eq!(d.get(0, 0), &Poly::symbol(0));
        assert!(d.get(0, 1).is_zero());
        assert_eq!(d.get(2, 2), &Poly::one());
    }
}
