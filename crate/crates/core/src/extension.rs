//! The quotient ring R[X]/(f) as a computational object.
//!
//! Elements are coordinate vectors of length n relative to the basis
//! 1, ξ, …, ξ^{n−1} and are always stored reduced. Products can be computed
//! three ways, all exactly equivalent:
//!
//! * `naive` — multiply the lifted polynomials, reduce mod f (the oracle);
//! * `kronecker` — apply (I C … C^{n−1}) to the left Kronecker product of the
//!   coordinate vectors, O(n³) after setup;
//! * `regular` — Horner evaluation a(C)·[b] using the O(n) companion
//!   matrix-vector product, O(n²) total (the default).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;

use crate::companion::{CompanionMatrix, StructureMatrix};
use crate::error::{Error, Result};
use crate::matrix::{kronecker_left, DenseMatrix};
use crate::poly::{MonicModulus, Poly};
use crate::ring::{Ring, Value};

/// Multiplication strategy selector. `Regular` has the lowest asymptotic
/// cost and is the default; `Naive` is the reduction oracle the others are
/// checked against.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    Naive,
    Kronecker,
    #[default]
    Regular,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Naive, Strategy::Kronecker, Strategy::Regular];

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::Kronecker => "kronecker",
            Strategy::Regular => "regular",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "naive" => Ok(Strategy::Naive),
            "kronecker" => Ok(Strategy::Kronecker),
            "regular" => Ok(Strategy::Regular),
            other => Err(Error::UnknownStrategy(other.to_string())),
        }
    }
}

/// A quotient ring R[X]/(f) with its companion matrix C and structure matrix
/// (I C … C^{n−1}) precomputed eagerly. Contexts are immutable; build one
/// per modulus, wrap it in an [`Arc`] and share it freely across threads.
#[derive(Debug)]
pub struct ExtensionContext {
    modulus: MonicModulus,
    companion: CompanionMatrix,
    structure: StructureMatrix,
}

impl ExtensionContext {
    pub fn new(modulus: MonicModulus) -> ExtensionContext {
        let companion = CompanionMatrix::new(&modulus);
        let structure = StructureMatrix::new(&companion);
        ExtensionContext {
            modulus,
            companion,
            structure,
        }
    }

    /// Parses modulus text over `ring` and builds a shared context.
    pub fn from_text(ring: &Ring, text: &str) -> Result<Arc<ExtensionContext>> {
        Ok(Arc::new(ExtensionContext::new(MonicModulus::parse(
            text, ring,
        )?)))
    }

    pub fn ring(&self) -> &Ring {
        self.modulus.ring()
    }

    pub fn modulus(&self) -> &MonicModulus {
        &self.modulus
    }

    pub fn companion(&self) -> &CompanionMatrix {
        &self.companion
    }

    pub fn structure(&self) -> &StructureMatrix {
        &self.structure
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    /// Wraps explicit coordinates; they must already have length n.
    pub fn element(self: &Arc<Self>, coords: Vec<Value>) -> Result<Element> {
        if coords.len() != self.degree() {
            return Err(Error::Precondition(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        debug_assert!(coords.iter().all(|c| self.ring().contains(c)));
        Ok(Element {
            ctx: Arc::clone(self),
            coords,
        })
    }

    pub fn element_from_i64(self: &Arc<Self>, coords: &[i64]) -> Result<Element> {
        self.element(coords.iter().map(|&c| self.ring().from_i64(c)).collect())
    }

    /// Reduces a polynomial of any degree into coordinates via division by f.
    pub fn element_from_poly(self: &Arc<Self>, g: &Poly) -> Result<Element> {
        if g.ring() != self.ring() {
            return Err(Error::RingMismatch {
                expected: self.ring().to_string(),
                found: g.ring().to_string(),
            });
        }
        let (_, rem) = g.divmod_monic(&self.modulus);
        Ok(self.from_reduced(&rem))
    }

    /// Pads an already-reduced polynomial (deg < n) out to n coordinates.
    fn from_reduced(self: &Arc<Self>, rem: &Poly) -> Element {
        let n = self.degree();
        let mut coords = rem.coeffs().to_vec();
        coords.resize(n, self.ring().zero());
        Element {
            ctx: Arc::clone(self),
            coords,
        }
    }

    pub fn zero(self: &Arc<Self>) -> Element {
        let coords = vec![self.ring().zero(); self.degree()];
        Element {
            ctx: Arc::clone(self),
            coords,
        }
    }

    pub fn one(self: &Arc<Self>) -> Element {
        self.power(0)
    }

    /// The class of X, reduced (for n = 1 this is the constant −a₀).
    pub fn generator(self: &Arc<Self>) -> Element {
        self.power(1)
    }

    /// Coordinates of ξ^k, computed as C^k·e₁ by k companion matrix-vector
    /// products; equals e_{k+1} for k < n.
    pub fn power(self: &Arc<Self>, k: u64) -> Element {
        let n = self.degree();
        let mut v = vec![self.ring().zero(); n];
        v[0] = self.ring().one();
        for _ in 0..k {
            v = self.companion.matvec(&v);
        }
        Element {
            ctx: Arc::clone(self),
            coords: v,
        }
    }

    pub fn random_element(self: &Arc<Self>, rng: &mut (impl Rng + ?Sized)) -> Element {
        let coords = (0..self.degree()).map(|_| self.ring().random(rng)).collect();
        Element {
            ctx: Arc::clone(self),
            coords,
        }
    }
}

/// An element of R[X]/(f): the coordinate vector [α] relative to the basis
/// 1, ξ, …, ξ^{n−1}, always of length exactly n.
#[derive(Clone, Debug)]
pub struct Element {
    ctx: Arc<ExtensionContext>,
    coords: Vec<Value>,
}

impl Element {
    pub fn context(&self) -> &Arc<ExtensionContext> {
        &self.ctx
    }

    pub fn coords(&self) -> &[Value] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        let ring = self.ctx.ring();
        self.coords.iter().all(|c| ring.is_zero(c))
    }

    /// Reads the coordinates back as a polynomial of degree < n.
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.ctx.ring().clone(), self.coords.clone())
    }

    fn assert_same_context(&self, other: &Element) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx),
            "elements belong to different extension contexts"
        );
    }

    pub fn add(&self, other: &Element) -> Element {
        self.assert_same_context(other);
        let ring = self.ctx.ring();
        let coords = self
            .coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| ring.add(a, b))
            .collect();
        Element {
            ctx: Arc::clone(&self.ctx),
            coords,
        }
    }

    pub fn neg(&self) -> Element {
        let ring = self.ctx.ring();
        Element {
            ctx: Arc::clone(&self.ctx),
            coords: self.coords.iter().map(|c| ring.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    /// Product with the default strategy.
    pub fn mul(&self, other: &Element) -> Element {
        self.mul_with(other, Strategy::default())
    }

    pub fn mul_with(&self, other: &Element, strategy: Strategy) -> Element {
        match strategy {
            Strategy::Naive => self.mul_naive(other),
            Strategy::Kronecker => self.mul_kronecker(other),
            Strategy::Regular => self.mul_regular(other),
        }
    }

    /// Oracle strategy: multiply the lifted polynomials and take the
    /// remainder mod f.
    pub fn mul_naive(&self, other: &Element) -> Element {
        self.assert_same_context(other);
        let product = self.to_poly().mul(&other.to_poly());
        let (_, rem) = product.divmod_monic(self.ctx.modulus());
        self.ctx.from_reduced(&rem)
    }

    /// The closed formula: [αβ] = (I C … C^{n−1})([α]⊗[β]) with the left
    /// Kronecker product.
    pub fn mul_kronecker(&self, other: &Element) -> Element {
        self.assert_same_context(other);
        let ring = self.ctx.ring();
        let kron = kronecker_left(ring, &self.coords, &other.coords);
        Element {
            ctx: Arc::clone(&self.ctx),
            coords: self.ctx.structure.apply(&kron),
        }
    }

    /// a(C)·[b] by Horner over the companion matrix-vector product, O(n²)
    /// ring operations. Coordinates of `self` multiply on the left.
    pub fn mul_regular(&self, other: &Element) -> Element {
        self.assert_same_context(other);
        let ring = self.ctx.ring();
        let n = self.ctx.degree();
        let b = &other.coords;
        let mut acc = scale_left(ring, &self.coords[n - 1], b);
        for i in (0..n - 1).rev() {
            acc = self.ctx.companion.matvec(&acc);
            let term = scale_left(ring, &self.coords[i], b);
            for (w, t) in acc.iter_mut().zip(term) {
                *w = ring.add(w, &t);
            }
        }
        Element {
            ctx: Arc::clone(&self.ctx),
            coords: acc,
        }
    }

    /// The matrix of "multiply by self" in the power basis: column j is
    /// C^{j−1}·[self].
    pub fn regular_representation(&self) -> DenseMatrix {
        let n = self.ctx.degree();
        let mut columns = Vec::with_capacity(n);
        columns.push(self.coords.clone());
        for j in 1..n {
            let next = self.ctx.companion.matvec(&columns[j - 1]);
            columns.push(next);
        }
        DenseMatrix::from_columns(self.ctx.ring().clone(), n, &columns)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) && self.coords == other.coords
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

fn scale_left(ring: &Ring, s: &Value, v: &[Value]) -> Vec<Value> {
    v.iter().map(|x| ring.mul(s, x)).collect()
}

/// Theorem-2 product on polynomials of degree < n: the polynomial whose
/// coefficient vector is (I C … C^{n−1})([g]⊗[h]). Inputs must already lie
/// in R_n[X]; this operation does not reduce. Over noncommutative rings the
/// coefficients of f must be central.
pub fn odot(f: &MonicModulus, g: &Poly, h: &Poly) -> Result<Poly> {
    let ring = f.ring();
    for p in [g, h] {
        if p.ring() != ring {
            return Err(Error::RingMismatch {
                expected: ring.to_string(),
                found: p.ring().to_string(),
            });
        }
    }
    let n = f.degree();
    for p in [g, h] {
        if let Some(d) = p.degree() {
            if d >= n {
                return Err(Error::DegreeTooLarge { degree: d, bound: n });
            }
        }
    }
    let structure = StructureMatrix::new(&CompanionMatrix::new(f));
    let mut gv = g.coeffs().to_vec();
    gv.resize(n, ring.zero());
    let mut hv = h.coeffs().to_vec();
    hv.resize(n, ring.zero());
    let coords = structure.apply(&kronecker_left(ring, &gv, &hv));
    Ok(Poly::new(ring.clone(), coords))
}

/// Verifies g(ξ)h(ξ) = (g⊙h)(ξ) at a concrete point ξ with f(ξ) = 0.
///
/// `point_ring` is typically a matrix ring over the coefficient ring (ξ a
/// matrix annihilated by f); the coefficient ring itself also works. Returns
/// `Ok(false)` only when the identity itself fails; a point with f(ξ) ≠ 0 is
/// reported as a distinct precondition error.
pub fn theorem2_check(
    f: &MonicModulus,
    point_ring: &Ring,
    xi: &Value,
    g: &Poly,
    h: &Poly,
) -> Result<bool> {
    let f_at_xi = f.poly().eval(xi, point_ring)?;
    if !point_ring.is_zero(&f_at_xi) {
        return Err(Error::Precondition(
            "f(ξ) must be zero at the supplied point".into(),
        ));
    }
    let combined = odot(f, g, h)?;
    let lhs = point_ring.mul(&g.eval(xi, point_ring)?, &h.eval(xi, point_ring)?);
    let rhs = combined.eval(xi, point_ring)?;
    Ok(point_ring.eq(&lhs, &rhs))
}

#[cfg(all(test, not(feature = "fault-injection")))]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx(ring: &Ring, text: &str) -> Arc<ExtensionContext> {
        ExtensionContext::from_text(ring, text).unwrap()
    }

    fn el(c: &Arc<ExtensionContext>, coords: &[i64]) -> Element {
        c.element_from_i64(coords).unwrap()
    }

    #[test]
    fn context_golden_companions() {
        let r = Ring::Rational;
        let gaussian = ctx(&r, "x^2+1");
        assert_eq!(
            gaussian.companion().matrix(),
            &DenseMatrix::new(
                r.clone(),
                2,
                2,
                [0, -1, 1, 0].iter().map(|&v| r.from_i64(v)).collect()
            )
        );
        let linear = ctx(&r, "x+5");
        assert_eq!(linear.degree(), 1);
    }

    #[test]
    fn context_rejects_bad_moduli() {
        let r = Ring::Rational;
        assert!(ExtensionContext::from_text(&r, "2*x^2+1").is_err());
        assert!(ExtensionContext::from_text(&r, "7").is_err());
    }

    #[test]
    fn reduction_into_coordinates() {
        let r = Ring::Rational;
        let gaussian = ctx(&r, "x^2+1");
        // X³ ≡ −X, from the long-division oracle (i³ = −i).
        let cube = gaussian
            .element_from_poly(&Poly::parse("x^3", &r).unwrap())
            .unwrap();
        assert_eq!(cube, el(&gaussian, &[0, -1]));
        let constant = gaussian
            .element_from_poly(&Poly::parse("7", &r).unwrap())
            .unwrap();
        assert_eq!(constant, el(&gaussian, &[7, 0]));
        let cyclic = ctx(&r, "x^3-1");
        let cube = cyclic
            .element_from_poly(&Poly::parse("x^3", &r).unwrap())
            .unwrap();
        assert_eq!(cube, el(&cyclic, &[1, 0, 0]));
    }

    #[test]
    fn element_from_poly_checks_ring() {
        let gaussian = ctx(&Ring::Rational, "x^2+1");
        let foreign = Poly::parse("x", &Ring::modular(7).unwrap()).unwrap();
        assert!(matches!(
            gaussian.element_from_poly(&foreign),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn gaussian_product_formula() {
        // [b0,b1]·[c0,c1] = [b0c0 − b1c1, b1c0 + b0c1]; distinct primes stand
        // in for symbols.
        let gaussian = ctx(&Ring::Rational, "x^2+1");
        let (b0, b1, c0, c1) = (2i64, 3, 5, 7);
        let expected = el(&gaussian, &[b0 * c0 - b1 * c1, b1 * c0 + b0 * c1]);
        let b = el(&gaussian, &[b0, b1]);
        let c = el(&gaussian, &[c0, c1]);
        for s in Strategy::ALL {
            assert_eq!(b.mul_with(&c, s), expected, "strategy {s}");
        }
    }

    #[test]
    fn complex_arithmetic_oracle() {
        // (1+2i)(3+4i) = −5+10i.
        let gaussian = ctx(&Ring::Rational, "x^2+1");
        let a = el(&gaussian, &[1, 2]);
        let b = el(&gaussian, &[3, 4]);
        for s in Strategy::ALL {
            assert_eq!(a.mul_with(&b, s), el(&gaussian, &[-5, 10]), "strategy {s}");
        }
    }

    #[test]
    fn cyclic_product_oracle() {
        // Convolution then reduction mod X³−1: [1,2,3]·[4,5,6] = [31,31,28].
        let cyclic = ctx(&Ring::Rational, "x^3-1");
        let a = el(&cyclic, &[1, 2, 3]);
        let b = el(&cyclic, &[4, 5, 6]);
        for s in Strategy::ALL {
            assert_eq!(a.mul_with(&b, s), el(&cyclic, &[31, 31, 28]), "strategy {s}");
        }
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let cyclic = ctx(&Ring::modular(7).unwrap(), "x^3-1");
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let x = cyclic.random_element(&mut rng);
            for s in Strategy::ALL {
                assert_eq!(cyclic.one().mul_with(&x, s), x);
                assert_eq!(x.mul_with(&cyclic.one(), s), x);
            }
        }
    }

    #[test]
    fn fibonacci_relation() {
        // ξ² = ξ + 1 in R[X]/(X² − X − 1).
        let golden = ctx(&Ring::Rational, "x^2-x-1");
        let xi = golden.generator();
        assert_eq!(xi.mul_naive(&xi), el(&golden, &[1, 1]));
    }

    #[test]
    fn zero_annihilates() {
        let gaussian = ctx(&Ring::Rational, "x^2+1");
        let a = el(&gaussian, &[4, -3]);
        for s in Strategy::ALL {
            assert!(a.mul_with(&gaussian.zero(), s).is_zero());
        }
    }

    #[test]
    fn regular_strategy_with_generator_is_matvec() {
        let cyclic = ctx(&Ring::modular(7).unwrap(), "x^3-1");
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let b = cyclic.random_element(&mut rng);
        let xi = cyclic.generator();
        let expected = cyclic.companion().matvec(b.coords());
        assert_eq!(xi.mul_regular(&b).coords(), expected.as_slice());
    }

    #[test]
    fn addition_is_coordinatewise() {
        let gaussian = ctx(&Ring::Rational, "x^2+1");
        let a = el(&gaussian, &[1, 2]);
        let b = el(&gaussian, &[3, 4]);
        assert_eq!(a.add(&b), el(&gaussian, &[4, 6]));
        assert!(a.add(&a.neg()).is_zero());
        assert_eq!(a.add(&gaussian.zero()), a);
    }

    #[test]
    fn regular_representation_goldens() {
        let r = Ring::Rational;
        let gaussian = ctx(&r, "x^2+1");
        assert_eq!(
            &gaussian.generator().regular_representation(),
            gaussian.companion().matrix()
        );
        assert_eq!(
            gaussian.one().regular_representation(),
            DenseMatrix::identity(r.clone(), 2)
        );
        // Over X³−1 the representation is the circulant of the coordinates.
        let cyclic = ctx(&r, "x^3-1");
        let a = el(&cyclic, &[2, 3, 5]);
        let circ = crate::companion::circulant_of(&a.to_poly(), 3).unwrap();
        assert_eq!(a.regular_representation(), circ);
    }

    #[test]
    fn powers_of_the_generator() {
        let gaussian = ctx(&Ring::Rational, "x^2+1");
        assert_eq!(gaussian.power(0), el(&gaussian, &[1, 0]));
        assert_eq!(gaussian.power(2), el(&gaussian, &[-1, 0]));
        // i³ = −i.
        assert_eq!(gaussian.power(3), el(&gaussian, &[0, -1]));
    }

    #[test]
    fn strategy_parsing() {
        assert_eq!("naive".parse::<Strategy>().unwrap(), Strategy::Naive);
        assert_eq!("kronecker".parse::<Strategy>().unwrap(), Strategy::Kronecker);
        assert_eq!("regular".parse::<Strategy>().unwrap(), Strategy::Regular);
        assert_eq!(Strategy::default(), Strategy::Regular);
        assert!(matches!(
            "fast".parse::<Strategy>(),
            Err(Error::UnknownStrategy(_))
        ));
    }

    #[test]
    fn odot_matches_cyclic_formula() {
        let r = Ring::Rational;
        let f = MonicModulus::parse("x^3-1", &r).unwrap();
        let (b, c) = ([2i64, 3, 5], [7i64, 11, 13]);
        let g = Poly::from_i64_coeffs(&r, &b);
        let h = Poly::from_i64_coeffs(&r, &c);
        let expected = Poly::from_i64_coeffs(
            &r,
            &[
                b[0] * c[0] + b[2] * c[1] + b[1] * c[2],
                b[1] * c[0] + b[0] * c[1] + b[2] * c[2],
                b[2] * c[0] + b[1] * c[1] + b[0] * c[2],
            ],
        );
        assert_eq!(odot(&f, &g, &h).unwrap(), expected);
    }

    #[test]
    fn odot_identity_and_degree_guard() {
        let r = Ring::Rational;
        let f = MonicModulus::parse("x^3-1", &r).unwrap();
        let h = Poly::from_i64_coeffs(&r, &[4, 5, 6]);
        assert_eq!(odot(&f, &Poly::from_i64_coeffs(&r, &[1]), &h).unwrap(), h);
        let too_big = Poly::from_i64_coeffs(&r, &[0, 0, 0, 1]);
        assert!(matches!(
            odot(&f, &too_big, &h),
            Err(Error::DegreeTooLarge { degree: 3, bound: 3 })
        ));
        // X ⊙ X = −1 in R_2[X] for f = X²+1.
        let f = MonicModulus::parse("x^2+1", &r).unwrap();
        let x = Poly::from_i64_coeffs(&r, &[0, 1]);
        assert_eq!(odot(&f, &x, &x).unwrap(), Poly::from_i64_coeffs(&r, &[-1]));
    }

    #[test]
    fn theorem2_at_companion_point() {
        let r = Ring::modular(7).unwrap();
        let f = MonicModulus::parse("x^3-1", &r).unwrap();
        let c = CompanionMatrix::new(&f);
        let (mat_ring, xi) = c.matrix().to_ring_value().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = Poly::new(r.clone(), (0..3).map(|_| r.random(&mut rng)).collect());
            let h = Poly::new(r.clone(), (0..3).map(|_| r.random(&mut rng)).collect());
            assert_eq!(theorem2_check(&f, &mat_ring, &xi, &g, &h), Ok(true));
        }
    }

    #[test]
    fn theorem2_gaussian_instance() {
        let r = Ring::Rational;
        let f = MonicModulus::parse("x^2+1", &r).unwrap();
        let mat_ring = Ring::matrix(2, r.clone()).unwrap();
        let xi = mat_ring.parse_value("[[0,-1];[1,0]]").unwrap();
        let g = Poly::from_i64_coeffs(&r, &[1, 2]);
        let h = Poly::from_i64_coeffs(&r, &[3, 4]);
        assert_eq!(theorem2_check(&f, &mat_ring, &xi, &g, &h), Ok(true));
        // Both sides equal −5·I + 10·ξ.
        let lhs = mat_ring.mul(
            &g.eval(&xi, &mat_ring).unwrap(),
            &h.eval(&xi, &mat_ring).unwrap(),
        );
        let expected = mat_ring.add(
            &mat_ring.from_i64(-5),
            &mat_ring.mul(&mat_ring.from_i64(10), &xi),
        );
        assert_eq!(lhs, expected);
    }

    #[test]
    fn theorem2_rejects_non_roots() {
        let r = Ring::Rational;
        let f = MonicModulus::parse("x^2+1", &r).unwrap();
        let mat_ring = Ring::matrix(2, r.clone()).unwrap();
        let g = Poly::from_i64_coeffs(&r, &[1, 2]);
        let h = Poly::from_i64_coeffs(&r, &[3, 4]);
        // f(I) = 2·I ≠ 0 is a precondition violation, not a failed check.
        assert!(matches!(
            theorem2_check(&f, &mat_ring, &mat_ring.one(), &g, &h),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    #[should_panic(expected = "different extension contexts")]
    fn cross_context_multiplication_panics() {
        let r = Ring::Rational;
        let a = ctx(&r, "x^2+1");
        let b = ctx(&r, "x^2+1");
        let _ = el(&a, &[1, 0]).mul(&el(&b, &[1, 0]));
    }
}
