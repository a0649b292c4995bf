//! Dense row-major matrices over a coefficient ring, plus the left Kronecker
//! product of coordinate vectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Ring, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Value>,
}

impl DenseMatrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, entries: Vec<Value>) -> DenseMatrix {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        DenseMatrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(ring: Ring, rows: usize, cols: usize) -> DenseMatrix {
        let entries = vec![ring.zero(); rows * cols];
        DenseMatrix::new(ring, rows, cols, entries)
    }

    pub fn identity(ring: Ring, n: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zero(ring, n, n);
        for i in 0..n {
            let one = m.ring.one();
            m.set(i, i, one);
        }
        m
    }

    /// Assembles an n×k matrix from its k columns.
    pub fn from_columns(ring: Ring, rows: usize, columns: &[Vec<Value>]) -> DenseMatrix {
        let cols = columns.len();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for col in columns {
                assert_eq!(col.len(), rows, "column length must equal row count");
                entries.push(col[i].clone());
            }
        }
        DenseMatrix::new(ring, rows, cols, entries)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Value {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Value) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Value> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.ring, other.ring, "matrix ring mismatch");
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "matrix shape mismatch: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        DenseMatrix::new(self.ring.clone(), self.rows, self.cols, entries)
    }

    /// Exact dense product; entry products keep self's entries on the left.
    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.ring, other.ring, "matrix ring mismatch");
        assert_eq!(
            self.cols, other.rows,
            "matrix shape mismatch: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    acc = self.ring.add(&acc, &self.ring.mul(self.get(i, k), other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        DenseMatrix::new(self.ring.clone(), self.rows, other.cols, entries)
    }

    /// Exact matrix-vector product; entry products keep matrix entries on the
    /// left.
    pub fn mul_vec(&self, v: &[Value]) -> Vec<Value> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = self.ring.zero();
            for j in 0..self.cols {
                acc = self.ring.add(&acc, &self.ring.mul(self.get(i, j), &v[j]));
            }
            out.push(acc);
        }
        out
    }

    /// Repackages a square matrix over a scalar ring as a single element of
    /// the corresponding `mat:n:<ring>` value ring.
    pub fn to_ring_value(&self) -> Result<(Ring, Value)> {
        if self.rows != self.cols {
            return Err(Error::Precondition(format!(
                "only square matrices embed into a matrix ring, got {}x{}",
                self.rows, self.cols
            )));
        }
        let ring = Ring::matrix(self.rows, self.ring.clone())?;
        let value = Value::Matrix(self.entries.clone().into_boxed_slice());
        Ok((ring, value))
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The left Kronecker product of two coordinate vectors of equal length n:
/// block j (1-indexed) of the n²-vector is `x·y_j`, i.e. entry `(j−1)n + i`
/// is `x_i·y_j` with `x_i` multiplied on the left.
///
/// This orientation is not the usual convention: for commutative rings it
/// equals the standard Kronecker product of `y` with `x`.
pub fn kronecker_left(ring: &Ring, x: &[Value], y: &[Value]) -> Vec<Value> {
    assert_eq!(x.len(), y.len(), "kronecker factors must have equal length");
    let mut out = Vec::with_capacity(x.len() * y.len());
    for yj in y {
        for xi in x {
            out.push(ring.mul(xi, yj));
        }
    }
    out
}
