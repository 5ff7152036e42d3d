//! Dense square max-plus matrices and column vectors.
//!
//! Entry `a(i, j)` is addressed with 0-based `(row, column)` indices in code;
//! the CLI and file formats are 1-based. The matrix product follows the
//! semiring: `(A ⊗ B)(i, j) = max_k (a(i, k) + b(k, j))` with eps absorbing.
//! Instances stay tiny (tens of nodes), so storage is a dense row-major
//! `Vec` and products are the cubic textbook loop.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Square max-plus matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>, // row-major, length n * n
}

impl Matrix {
    /// Builds a matrix from rows. Panics if the rows are empty or ragged;
    /// use the file parsers for untrusted input.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Matrix {
        let n = rows.len();
        assert!(n >= 1, "matrix dimension must be >= 1");
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix rows must all have length {n}");
            entries.extend(row);
        }
        Matrix { n, entries }
    }

    /// Literal constructor: one string per row, whitespace-separated tokens
    /// (`eps`, integers, `p/q`, decimals). Panics on malformed input.
    ///
    /// ```
    /// use maxplus::Matrix;
    /// let a = Matrix::from_str_rows(&["2 eps 3", "6 2 eps", "eps 4 3"]);
    /// assert_eq!(a.dim(), 3);
    /// ```
    pub fn from_str_rows(rows: &[&str]) -> Matrix {
        let parsed = rows
            .iter()
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| tok.parse::<Scalar>().expect("malformed scalar token"))
                    .collect()
            })
            .collect();
        Matrix::from_rows(parsed)
    }

    /// The all-eps matrix, the neutral element of matrix ⊕.
    pub fn null(n: usize) -> Matrix {
        assert!(n >= 1);
        Matrix {
            n,
            entries: vec![Scalar::NegInf; n * n],
        }
    }

    /// Max-plus identity: 0 on the diagonal, eps elsewhere.
    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::null(n);
        for i in 0..n {
            *m.get_mut(i, i) = Scalar::zero();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.n + j]
    }

    fn check_dim(&self, other: usize) -> Result<()> {
        if self.n == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: other,
            })
        }
    }

    /// Entrywise max: `A ⊕ B`.
    pub fn oplus(&self, other: &Matrix) -> Result<Matrix> {
        self.check_dim(other.n)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.oplus(b))
            .collect();
        Ok(Matrix {
            n: self.n,
            entries,
        })
    }

    /// Max-plus product: `(A ⊗ B)(i, j) = max_k (a(i, k) + b(k, j))`.
    pub fn otimes(&self, other: &Matrix) -> Result<Matrix> {
        self.check_dim(other.n)?;
        let n = self.n;
        let mut out = Matrix::null(n);
        for i in 0..n {
            for j in 0..n {
                let mut best = Scalar::NegInf;
                for k in 0..n {
                    let cand = self.get(i, k).otimes(other.get(k, j));
                    if cand > best {
                        best = cand;
                    }
                }
                *out.get_mut(i, j) = best;
            }
        }
        Ok(out)
    }

    /// l-fold max-plus power by repeated squaring; `A^0` is the identity.
    pub fn pow(&self, exp: usize) -> Matrix {
        let mut result = Matrix::identity(self.n);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.otimes(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.otimes(&base).expect("same dimension");
            }
        }
        result
    }

    /// Max-plus scalar multiple `lambda ⊗ A`: adds lambda to every finite
    /// entry, leaving eps entries eps. Returns `Err(NullScalar)` if lambda
    /// is eps.
    pub fn scale(&self, lambda: &Scalar) -> Result<Matrix> {
        if lambda.is_eps() {
            return Err(Error::NullScalar);
        }
        let entries = self.entries.iter().map(|e| lambda.otimes(e)).collect();
        Ok(Matrix {
            n: self.n,
            entries,
        })
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = Matrix::null(n);
        for i in 0..n {
            for j in 0..n {
                *out.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        out
    }

    /// True iff every main diagonal entry is finite.
    pub fn has_finite_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i).is_finite())
    }

    /// Matrix-vector product `A ⊗ x`.
    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        self.check_dim(x.dim())?;
        let entries = (0..self.n)
            .map(|i| {
                let mut best = Scalar::NegInf;
                for j in 0..self.n {
                    let cand = self.get(i, j).otimes(&x[j]);
                    if cand > best {
                        best = cand;
                    }
                }
                best
            })
            .collect();
        Ok(Vector { entries })
    }

    /// Column j as a vector.
    pub fn column(&self, j: usize) -> Vector {
        Vector {
            entries: (0..self.n).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.n)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        self.get(i, j)
    }
}

/// One row of tokens per line, matching the file-format body.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Max-plus column vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Vector {
        assert!(!entries.is_empty(), "vector dimension must be >= 1");
        Vector { entries }
    }

    /// Literal constructor from whitespace-separated tokens; panics on
    /// malformed input.
    pub fn from_str_row(row: &str) -> Vector {
        Vector::new(
            row.split_whitespace()
                .map(|tok| tok.parse::<Scalar>().expect("malformed scalar token"))
                .collect(),
        )
    }

    /// All-zeros (finite 0) vector, the default simulation start.
    pub fn zeros(n: usize) -> Vector {
        Vector {
            entries: vec![Scalar::zero(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// A vector is zero iff all entries are eps.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_eps)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Scalar> {
        self.entries.iter()
    }

    /// `lambda ⊗ x`: adds lambda to every finite entry. Errors on eps lambda.
    pub fn scale(&self, lambda: &Scalar) -> Result<Vector> {
        if lambda.is_eps() {
            return Err(Error::NullScalar);
        }
        Ok(Vector {
            entries: self.entries.iter().map(|e| lambda.otimes(e)).collect(),
        })
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}
