//! Companion matrices of monic polynomials, the block structure matrix
//! (I C … C^{n−1}) used by the Kronecker multiplication formula, and the
//! circulant specialization for X^n − 1.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::poly::{MonicModulus, Poly};
use crate::ring::{Ring, Value};

/// The companion matrix C of a monic modulus f = X^n + a_{n−1}X^{n−1} + … +
/// a_0: ones on the subdiagonal, −a_i down the last column, zeros elsewhere.
/// Satisfies f(C) = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionMatrix {
    modulus: MonicModulus,
    matrix: DenseMatrix,
}

impl CompanionMatrix {
    pub fn new(f: &MonicModulus) -> CompanionMatrix {
        let n = f.degree();
        let ring = f.ring().clone();
        let mut matrix = DenseMatrix::zero(ring.clone(), n, n);
        for i in 0..n - 1 {
            matrix.set(i + 1, i, ring.one());
        }
        for i in 0..n {
            matrix.set(i, n - 1, ring.neg(f.coefficient(i)));
        }
        #[cfg(feature = "fault-injection")]
        {
            // Deliberate sign corruption so the verification suite can be
            // shown to catch a broken companion matrix.
            let flipped = ring.neg(matrix.get(0, n - 1));
            matrix.set(0, n - 1, flipped);
        }
        CompanionMatrix {
            modulus: f.clone(),
            matrix,
        }
    }

    pub fn modulus(&self) -> &MonicModulus {
        &self.modulus
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    /// C·v in O(n) ring operations, exploiting the companion sparsity:
    /// out_1 = −a_0·v_n and out_i = v_{i−1} − a_{i−1}·v_n. Reads the stored
    /// last column, so it always agrees with the dense matrix.
    pub fn matvec(&self, v: &[Value]) -> Vec<Value> {
        let n = self.degree();
        assert_eq!(v.len(), n, "vector length must equal the degree");
        let ring = self.modulus.ring();
        let last = &v[n - 1];
        let mut out = Vec::with_capacity(n);
        out.push(ring.mul(self.matrix.get(0, n - 1), last));
        for i in 1..n {
            let shifted = ring.mul(self.matrix.get(i, n - 1), last);
            out.push(ring.add(&v[i - 1], &shifted));
        }
        out
    }
}

/// The n×n² block matrix (I C … C^{n−1}); block j (1-indexed) is C^{j−1}.
/// Applied to a left Kronecker product it yields product coordinates in
/// R[X]/(f).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMatrix {
    modulus: MonicModulus,
    matrix: DenseMatrix,
}

impl StructureMatrix {
    /// Builds the blocks column-by-column with [`CompanionMatrix::matvec`],
    /// O(n³) ring operations total.
    pub fn new(companion: &CompanionMatrix) -> StructureMatrix {
        let n = companion.degree();
        let ring = companion.modulus().ring().clone();
        let mut columns: Vec<Vec<Value>> = Vec::with_capacity(n * n);
        for j in 0..n {
            let mut e = vec![ring.zero(); n];
            e[j] = ring.one();
            columns.push(e);
        }
        for block in 1..n {
            for j in 0..n {
                let prev = &columns[(block - 1) * n + j];
                let next = companion.matvec(prev);
                columns.push(next);
            }
        }
        StructureMatrix {
            modulus: companion.modulus().clone(),
            matrix: DenseMatrix::from_columns(ring, n, &columns),
        }
    }

    pub fn modulus(&self) -> &MonicModulus {
        &self.modulus
    }

    /// The full n×n² matrix.
    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    /// Block j (1-indexed), equal to C^{j−1}, as an n×n matrix.
    pub fn block(&self, j: usize) -> DenseMatrix {
        let n = self.degree();
        assert!(j >= 1 && j <= n, "block index must be in 1..=n");
        let columns: Vec<Vec<Value>> = (0..n)
            .map(|c| self.matrix.column((j - 1) * n + c))
            .collect();
        DenseMatrix::from_columns(self.modulus.ring().clone(), n, &columns)
    }

    /// Applies the structure matrix to an n²-vector.
    pub fn apply(&self, v: &[Value]) -> Vec<Value> {
        self.matrix.mul_vec(v)
    }
}

/// The n×n circulant whose first column is [g] padded to length n; each later
/// column is a cyclic downward shift. Equals g(C) for f = X^n − 1. Requires
/// deg g < n, and a commutative ring (or central coefficients) for the
/// circulant identity to hold.
pub fn circulant_of(g: &Poly, n: usize) -> Result<DenseMatrix> {
    match g.degree() {
        Some(d) if d >= n => {
            return Err(Error::DegreeTooLarge {
                degree: d,
                bound: n,
            })
        }
        _ => {}
    }
    let ring: Ring = g.ring().clone();
    let mut m = DenseMatrix::zero(ring, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, g.coeff((i + n - j) % n));
        }
    }
    Ok(m)
}

#[cfg(all(test, not(feature = "fault-injection")))]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn modulus(ring: &Ring, coeffs: &[i64]) -> MonicModulus {
        MonicModulus::new(Poly::from_i64_coeffs(ring, coeffs)).unwrap()
    }

    fn dense(ring: &Ring, rows: usize, cols: usize, vals: &[i64]) -> DenseMatrix {
        DenseMatrix::new(
            ring.clone(),
            rows,
            cols,
            vals.iter().map(|&v| ring.from_i64(v)).collect(),
        )
    }

    #[test]
    fn companion_of_x2_plus_1() {
        let r = Ring::Rational;
        let c = CompanionMatrix::new(&modulus(&r, &[1, 0, 1]));
        assert_eq!(c.matrix(), &dense(&r, 2, 2, &[0, -1, 1, 0]));
    }

    #[test]
    fn companion_of_x3_minus_1() {
        let r = Ring::Rational;
        let c = CompanionMatrix::new(&modulus(&r, &[-1, 0, 0, 1]));
        assert_eq!(c.matrix(), &dense(&r, 3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]));
    }

    #[test]
    fn companion_of_degree_one() {
        let r = Ring::Rational;
        let c = CompanionMatrix::new(&modulus(&r, &[5, 1]));
        assert_eq!(c.matrix(), &dense(&r, 1, 1, &[-5]));
    }

    #[test]
    fn matvec_moves_basis_vectors() {
        let r = Ring::Rational;
        let c = CompanionMatrix::new(&modulus(&r, &[1, 0, 1]));
        let e1 = vec![r.from_i64(1), r.from_i64(0)];
        let e2 = vec![r.from_i64(0), r.from_i64(1)];
        assert_eq!(c.matvec(&e1), e2);
        assert_eq!(c.matvec(&e2), vec![r.from_i64(-1), r.from_i64(0)]);
    }

    #[test]
    fn matvec_agrees_with_dense_product() {
        let r = Ring::Rational;
        let c = CompanionMatrix::new(&modulus(&r, &[-1, 0, 0, 1]));
        let v: Vec<Value> = [1, 2, 3].iter().map(|&x| r.from_i64(x)).collect();
        let fast = c.matvec(&v);
        assert_eq!(fast, c.matrix().mul_vec(&v));
        assert_eq!(fast, vec![r.from_i64(3), r.from_i64(1), r.from_i64(2)]);
    }

    #[test]
    fn structure_of_x3_minus_1() {
        let r = Ring::Rational;
        let s = StructureMatrix::new(&CompanionMatrix::new(&modulus(&r, &[-1, 0, 0, 1])));
        let expected = dense(
            &r,
            3,
            9,
            &[
                1, 0, 0, 0, 0, 1, 0, 1, 0, //
                0, 1, 0, 1, 0, 0, 0, 0, 1, //
                0, 0, 1, 0, 1, 0, 1, 0, 0,
            ],
        );
        assert_eq!(s.matrix(), &expected);
    }

    #[test]
    fn structure_of_x2_plus_1() {
        let r = Ring::Rational;
        let s = StructureMatrix::new(&CompanionMatrix::new(&modulus(&r, &[1, 0, 1])));
        let expected = dense(&r, 2, 4, &[1, 0, 0, -1, 0, 1, 1, 0]);
        assert_eq!(s.matrix(), &expected);
    }

    #[test]
    fn structure_of_degree_one() {
        let r = Ring::Rational;
        let s = StructureMatrix::new(&CompanionMatrix::new(&modulus(&r, &[5, 1])));
        assert_eq!(s.matrix(), &dense(&r, 1, 1, &[1]));
    }

    #[test]
    fn structure_blocks_are_companion_powers() {
        let r = Ring::modular(7).unwrap();
        let c = CompanionMatrix::new(&modulus(&r, &[3, 2, 1, 1]));
        let s = StructureMatrix::new(&c);
        assert_eq!(s.block(1), DenseMatrix::identity(r.clone(), 3));
        for j in 2..=3 {
            assert_eq!(s.block(j), c.matrix().mul(&s.block(j - 1)));
        }
    }

    #[test]
    fn companion_square_for_x3_minus_1() {
        let r = Ring::Rational;
        let c = CompanionMatrix::new(&modulus(&r, &[-1, 0, 0, 1]));
        let c2 = c.matrix().mul(c.matrix());
        assert_eq!(c2, dense(&r, 3, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]));
    }

    #[test]
    fn circulant_layout() {
        let r = Ring::Rational;
        // First column b0,b1,b2; later columns shift downward.
        let g = Poly::from_i64_coeffs(&r, &[2, 3, 5]);
        let m = circulant_of(&g, 3).unwrap();
        assert_eq!(m, dense(&r, 3, 3, &[2, 5, 3, 3, 2, 5, 5, 3, 2]));
    }

    #[test]
    fn circulant_of_constant_one() {
        let r = Ring::Rational;
        let g = Poly::from_i64_coeffs(&r, &[1]);
        for n in 1..=4 {
            assert_eq!(
                circulant_of(&g, n).unwrap(),
                DenseMatrix::identity(r.clone(), n)
            );
        }
    }

    #[test]
    fn circulant_of_x_is_cyclic_permutation() {
        let r = Ring::Rational;
        let g = Poly::from_i64_coeffs(&r, &[0, 1]);
        let c = CompanionMatrix::new(&modulus(&r, &[-1, 0, 0, 1]));
        assert_eq!(&circulant_of(&g, 3).unwrap(), c.matrix());
    }

    #[test]
    fn circulant_rejects_large_degree() {
        let r = Ring::Rational;
        let g = Poly::from_i64_coeffs(&r, &[1, 1, 1, 1]);
        assert!(matches!(
            circulant_of(&g, 3),
            Err(Error::DegreeTooLarge { degree: 3, bound: 3 })
        ));
    }

    #[test]
    fn companion_annihilated_by_modulus() {
        // f(C) = 0 via evaluation in the matrix ring.
        let r = Ring::modular(7).unwrap();
        let f = modulus(&r, &[3, 2, 1, 1]);
        let c = CompanionMatrix::new(&f);
        let (mat_ring, value) = c.matrix().to_ring_value().unwrap();
        let image = f.poly().eval(&value, &mat_ring).unwrap();
        assert_eq!(image, mat_ring.zero());
    }
}
