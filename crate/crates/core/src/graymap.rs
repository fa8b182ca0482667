//! The Gray map R_k -> F_q^{p^r} and its extension Φ to
//! R_k[x]/<x^N - λ> -> F_q[x]/<x^{p^r N} - ϑ>.
//!
//! The matrix P_k intertwines a(J_k) and J_k (P_k a(J_k) = J_k P_k). For
//! α = (1, u, ..., u^{k-1}) B the image is
//!
//! ```text
//!   φ(α) = Σ_i h_i (z - a_0)^{p^r - k + i},   (h_0, ..., h_{k-1})ᵗ = P_k B,
//! ```
//!
//! read as a vector in the monomial basis 1, z, ..., z^{p^r - 1} of
//! F_q[z]/<(z - a_0)^{p^r}>. Hamming weight of φ(α) is the Lee weight of α.

use crate::chainring::{Ambient, ChainRing, RingElem, RingPoly};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::Matrix;
use crate::poly::{omega_adic_expand, Poly};

/// Coefficients (f_0, ..., f_{p^r - 1}) of an element of
/// F_q[z]/<(z - a_0)^{p^r}> in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrayVector(pub Vec<Elem>);

impl GrayVector {
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn to_text(&self) -> String {
        self.0
            .iter()
            .map(|c| c.value().to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The unique r with p^{r-1} < k <= p^r.
pub fn derive_r(k: usize, p: u32) -> Result<u32> {
    if k < 2 {
        return Err(Error::BadK(k));
    }
    let mut r = 0u32;
    let mut pr = 1usize;
    while pr < k {
        pr *= p as usize;
        r += 1;
    }
    Ok(r)
}

/// P_k by the recursion P_2 = I_2, P_i = [[1, 0], [Y_i, P_{i-1}]] with
/// (1, y_1, ..., y_{i-2})ᵗ = P_{i-1} (1, a_2, ..., a_{i-1})ᵗ and y_{i-1} = 0.
pub fn build_p(ring: &ChainRing) -> Matrix {
    let f = ring.field();
    let a = ring.lambda_coeffs();
    let mut p = Matrix::identity(2);
    for i in 3..=ring.k() {
        // ξ = (1, a_2, ..., a_{i-1})
        let mut xi = vec![Elem::ONE];
        xi.extend_from_slice(&a[2..i]);
        let col = p.mul_vec(&xi, f);
        debug_assert_eq!(col[0], Elem::ONE);
        let mut next = Matrix::zero(i, i);
        next[(0, 0)] = Elem::ONE;
        // Y_i = (y_1, ..., y_{i-2}, 0)
        for (row, &y) in col.iter().enumerate().skip(1) {
            next[(row, 0)] = y;
        }
        for r in 0..i - 1 {
            for c in 0..i - 1 {
                next[(r + 1, c + 1)] = p[(r, c)];
            }
        }
        p = next;
    }
    assert_eq!(
        p.mul(&ring.a_of_j(), f),
        Matrix::lower_shift(ring.k()).mul(&p, f),
        "P a(J) = J P"
    );
    p
}

/// Y = I_k + Σ_{i=1}^{k-1} y_i J_k^i for the tail (y_1, ..., y_{k-1}).
pub fn build_y(tail: &[Elem]) -> Matrix {
    let k = tail.len() + 1;
    let mut y = Matrix::identity(k);
    for row in 1..k {
        for col in 0..row {
            y[(row, col)] = tail[row - col - 1];
        }
    }
    y
}

/// Precomputed Gray machinery for one (R_k, λ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayContext {
    ring: ChainRing,
    r: u32,
    pr: usize,
    vartheta: Elem,
    p: Matrix,
    p_inv: Matrix,
    y: Matrix,
    tail: Vec<Elem>,
    /// Row i: monomial coefficients of (z - a_0)^{p^r - k + i}.
    z_basis: Matrix,
}

impl GrayContext {
    pub fn new(ring: ChainRing) -> Result<GrayContext> {
        let p = build_p(&ring);
        GrayContext::with_p_matrix(ring, p)
    }

    /// Builds a context around an arbitrary invertible lower matrix in place
    /// of P_k. Used to feed deliberately wrong matrices to the checks.
    #[doc(hidden)]
    pub fn with_p_matrix(ring: ChainRing, p: Matrix) -> Result<GrayContext> {
        let f = ring.field().clone();
        let k = ring.k();
        let r = derive_r(k, f.characteristic())?;
        let pr = (f.characteristic() as usize).pow(r);
        let vartheta = f.pow_u(ring.a0(), pr as u64);
        let p_inv = p.inverse(&f)?;
        // First column of P_k is (1, y_1, ..., y_{k-1})ᵗ.
        let tail: Vec<Elem> = p.column(0)[1..].to_vec();
        let y = build_y(&tail);
        let z_minus_a0 = Poly::new(vec![f.neg(ring.a0()), Elem::ONE]);
        let mut z_basis = Matrix::zero(k, pr);
        for i in 0..k {
            let power = z_minus_a0.pow((pr - k + i) as u64, &f);
            for (j, &c) in power.coeffs().iter().enumerate() {
                z_basis[(i, j)] = c;
            }
        }
        Ok(GrayContext {
            ring,
            r,
            pr,
            vartheta,
            p,
            p_inv,
            y,
            tail,
            z_basis,
        })
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn k(&self) -> usize {
        self.ring.k()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// p^r, the length of one Gray block.
    pub fn block_len(&self) -> usize {
        self.pr
    }

    /// ϑ = a_0^{p^r}.
    pub fn vartheta(&self) -> Elem {
        self.vartheta
    }

    pub fn p_matrix(&self) -> &Matrix {
        &self.p
    }

    pub fn p_inverse(&self) -> &Matrix {
        &self.p_inv
    }

    pub fn y_matrix(&self) -> &Matrix {
        &self.y
    }

    /// (y_1, ..., y_{k-1}).
    pub fn tail(&self) -> &[Elem] {
        &self.tail
    }

    /// Coordinates (h_0, ..., h_{k-1}) = P_k B of φ(α) in the basis
    /// (z - a_0)^{p^r - k + i}.
    pub fn phi_shifted_coords(&self, alpha: &RingElem) -> Vec<Elem> {
        self.p.mul_vec(alpha.coeffs(), self.field())
    }

    /// Change of basis from (z - a_0)^{p^r - k + i} coordinates to monomials.
    pub fn shifted_to_monomial(&self, h: &[Elem]) -> GrayVector {
        GrayVector(self.z_basis.vec_mul(h, self.field()))
    }

    pub fn phi(&self, alpha: &RingElem) -> GrayVector {
        self.shifted_to_monomial(&self.phi_shifted_coords(alpha))
    }

    pub fn lee_weight(&self, alpha: &RingElem) -> usize {
        self.phi(alpha).weight()
    }

    /// Lee weight of Σ α_j x^j, the sum over coordinates.
    pub fn lee_weight_poly(&self, c: &RingPoly) -> usize {
        c.coeffs().iter().map(|a| self.lee_weight(a)).sum()
    }

    /// Interleaves N blocks: the coefficient of x^{sN + j} is entry s of block j.
    pub fn sigma(&self, blocks: &[GrayVector], len: usize) -> Result<Poly> {
        sigma(blocks, len, self.pr)
    }

    /// Φ = σ ∘ φ̃ ∘ τ.
    pub fn phi_big(&self, c: &RingPoly) -> Result<Poly> {
        let out = self.phi_big_interleaved(c)?;
        #[cfg(debug_assertions)]
        assert_eq!(out, self.phi_big_matrix(c)?, "the two routes to Φ disagree");
        Ok(out)
    }

    pub fn phi_big_interleaved(&self, c: &RingPoly) -> Result<Poly> {
        self.check_poly(c)?;
        let blocks: Vec<GrayVector> = c.coeffs().iter().map(|a| self.phi(a)).collect();
        sigma(&blocks, c.len(), self.pr)
    }

    /// Φ(c) = (ω^{p^r-k}, ..., ω^{p^r-1}) (P_k A_c) (1, x, ..., x^{N-1})ᵗ.
    pub fn phi_big_matrix(&self, c: &RingPoly) -> Result<Poly> {
        self.check_poly(c)?;
        let f = self.field();
        let len = c.len();
        let k = self.k();
        let amb = Ambient::new(self.ring.clone(), len)?;
        let h = self.p.mul(&amb.coefficient_matrix(c), f);
        let omega = Poly::binomial(len, self.ring.a0(), f);
        let mut omega_pow = omega.pow((self.pr - k) as u64, f);
        let mut out = Poly::zero();
        for i in 0..k {
            let row = Poly::new(h.row(i).to_vec());
            out = out.add(&omega_pow.mul(&row, f), f);
            omega_pow = omega_pow.mul(&omega, f);
        }
        Ok(out.reduce_constacyclic(self.pr * len, self.vartheta, f))
    }

    /// Preimage under Φ of g ∈ <(x^N - a_0)^{p^r - k}>: writes g = ω^{p^r-k} b,
    /// expands b = Σ b_i ω^i and returns (1, u, ..., u^{k-1}) P_k^{-1} B.
    pub fn preimage(&self, g: &Poly, len: usize) -> Result<RingPoly> {
        let f = self.field();
        let k = self.k();
        let total = self.pr * len;
        let g = g.reduce_constacyclic(total, self.vartheta, f);
        let omega = Poly::binomial(len, self.ring.a0(), f);
        let lead = omega.pow((self.pr - k) as u64, f);
        let b = g
            .div_exact(&lead, f)?
            .ok_or_else(|| Error::NotInImage(g.to_coeff_string()))?;
        let parts = omega_adic_expand(&b, len, self.ring.a0(), k, f)?;
        let rows: Vec<Vec<Elem>> = parts.iter().map(|p| p.to_vec(len)).collect();
        let bmat = Matrix::from_rows(rows);
        let amb = Ambient::new(self.ring.clone(), len)?;
        amb.from_matrix(&self.p_inv.mul(&bmat, f))
    }

    /// g(u) = 1 + Σ y_i a(u)^i, the unit with
    /// (1, u, ..., u^{k-1}) P^{-1} Y = g(u) (1, u, ..., u^{k-1}) P^{-1}.
    pub fn g_unit(&self) -> RingElem {
        let r = &self.ring;
        let a = r.a_of_u();
        let mut acc = r.one();
        let mut a_pow = r.one();
        for &y in &self.tail {
            a_pow = r.mul(&a_pow, &a);
            acc = r.add(&acc, &r.scale(y, &a_pow));
        }
        acc
    }

    fn check_poly(&self, c: &RingPoly) -> Result<()> {
        if let Some(bad) = c.coeffs().iter().find(|a| a.coeffs().len() != self.k()) {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                got: bad.coeffs().len(),
            });
        }
        if c.is_empty() {
            return Err(Error::BadLength);
        }
        Ok(())
    }
}

/// σ: coefficient of x^{sN + j} is entry s of block j.
pub fn sigma(blocks: &[GrayVector], len: usize, block_len: usize) -> Result<Poly> {
    if blocks.len() != len {
        return Err(Error::LengthMismatch {
            expected: len,
            got: blocks.len(),
        });
    }
    let mut out = vec![Elem::ZERO; block_len * len];
    for (j, b) in blocks.iter().enumerate() {
        if b.0.len() != block_len {
            return Err(Error::LengthMismatch {
                expected: block_len,
                got: b.0.len(),
            });
        }
        for (s, &c) in b.0.iter().enumerate() {
            out[s * len + j] = c;
        }
    }
    Ok(Poly::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx3() -> GrayContext {
        let ring = ChainRing::parse(Field::prime(3).unwrap(), 3, "2,1,2").unwrap();
        GrayContext::new(ring).unwrap()
    }

    fn ctx5() -> GrayContext {
        let ring = ChainRing::parse(Field::prime(5).unwrap(), 4, "2,1,2,4").unwrap();
        GrayContext::new(ring).unwrap()
    }

    #[test]
    fn r_from_k() {
        assert_eq!(derive_r(3, 3), Ok(1));
        assert_eq!(derive_r(4, 5), Ok(1));
        assert_eq!(derive_r(4, 3), Ok(2));
        assert_eq!(derive_r(2, 2), Ok(1));
        assert_eq!(derive_r(5, 2), Ok(3));
        assert_eq!(derive_r(1, 3), Err(Error::BadK(1)));
    }

    #[test]
    fn p_matrices() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(
            *ctx3().p_matrix(),
            Matrix::from_ints(&[&[1, 0, 0], &[2, 1, 0], &[0, 0, 1]], &f3)
        );
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            *ctx5().p_matrix(),
            Matrix::from_ints(
                &[&[1, 0, 0, 0], &[4, 1, 0, 0], &[4, 2, 1, 0], &[0, 0, 0, 1]],
                &f5
            )
        );
        let ring = ChainRing::parse(f5, 2, "3,1").unwrap();
        assert_eq!(build_p(&ring), Matrix::identity(2));
    }

    #[test]
    fn y_matrices() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(
            *ctx3().y_matrix(),
            Matrix::from_ints(&[&[1, 0, 0], &[2, 1, 0], &[0, 2, 1]], &f3)
        );
        // (1, y_1, y_2)ᵗ = P_3 (1, a_2, a_3)ᵗ = (1, 4, 4), y_3 = 0.
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            *ctx5().y_matrix(),
            Matrix::from_ints(
                &[&[1, 0, 0, 0], &[4, 1, 0, 0], &[4, 4, 1, 0], &[0, 4, 4, 1]],
                &f5
            )
        );
        let ring = ChainRing::parse(f5, 2, "3,1").unwrap();
        assert_eq!(
            *GrayContext::new(ring).unwrap().y_matrix(),
            Matrix::identity(2)
        );
    }

    #[test]
    fn phi_values() {
        let c = ctx3();
        let r = c.ring().clone();
        let v = |s: &str| c.phi(&r.parse_elem(s).unwrap()).to_text();
        assert_eq!(v("0,0,1"), "1,2,1");
        assert_eq!(v("0,0,0"), "0,0,0");
        assert_eq!(v("1,0,0"), "0,2,0");
        assert_eq!(v("2,1,2"), "0,0,2");
        assert_eq!(c.lee_weight(&r.parse_elem("0,0,1").unwrap()), 3);
        assert_eq!(c.lee_weight(&r.zero()), 0);
        assert_eq!(c.lee_weight(&r.parse_elem("2,1,2").unwrap()), 1);
    }

    #[test]
    fn sigma_interleaves() {
        let z = GrayVector(vec![Elem::ZERO; 3]);
        assert!(sigma(&[z.clone(), z.clone()], 2, 3).unwrap().is_zero());
        let b0 = GrayVector(vec![Elem(1), Elem(0), Elem(0)]);
        let b1 = GrayVector(vec![Elem(0), Elem(1), Elem(0)]);
        let f = Field::prime(3).unwrap();
        assert_eq!(
            sigma(&[b0, b1], 2, 3).unwrap(),
            Poly::parse("x^3+1", &f).unwrap()
        );
        let single = GrayVector(vec![Elem(2), Elem(0), Elem(1)]);
        assert_eq!(
            sigma(&[single], 1, 3).unwrap(),
            Poly::parse("2,0,1", &f).unwrap()
        );
        assert!(sigma(&[z], 2, 3).is_err());
    }

    #[test]
    fn phi_big_of_constant_is_spread_phi() {
        let c = ctx3();
        let amb = Ambient::new(c.ring().clone(), 4).unwrap();
        let alpha = c.ring().parse_elem("1,2,1").unwrap();
        let img = c.phi_big(&amb.constant(alpha.clone())).unwrap();
        let phi = c.phi(&alpha);
        for (s, &v) in phi.0.iter().enumerate() {
            assert_eq!(img.coeff(4 * s), v);
        }
        assert_eq!(img.weight(), phi.weight());
        assert!(c.phi_big(&amb.zero()).unwrap().is_zero());
    }

    #[test]
    fn preimage_roundtrip_small() {
        let c = ctx5();
        let amb = Ambient::new(c.ring().clone(), 3).unwrap();
        let x = amb.random(&mut rand::thread_rng());
        let g = c.phi_big(&x).unwrap();
        assert_eq!(c.preimage(&g, 3).unwrap(), x);
        // x^0 = 1 is not a multiple of ω = x^3 - 2 when p^r - k = 1.
        assert!(matches!(
            c.preimage(&Poly::one(), 3),
            Err(Error::NotInImage(_))
        ));
    }

    #[test]
    fn corrupted_p_is_accepted_by_the_hook() {
        let c = ctx3();
        let mut p = c.p_matrix().clone();
        p[(2, 1)] = Elem(1);
        let bad = GrayContext::with_p_matrix(c.ring().clone(), p).unwrap();
        let f = bad.field();
        assert_ne!(
            bad.p_matrix().mul(&bad.ring().a_of_j(), f),
            Matrix::lower_shift(3).mul(bad.p_matrix(), f)
        );
    }
}
