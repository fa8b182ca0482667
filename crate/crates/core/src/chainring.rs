//! The chain ring R_k = F_q[u]/<u^k> and the quotient R_k[x]/<x^N - λ>.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// An element b_0 + b_1 u + ... + b_{k-1} u^{k-1} of R_k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem(Vec<Elem>);

impl RingElem {
    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    /// Constant term; the element is a unit iff this is nonzero.
    pub fn constant(&self) -> Elem {
        self.0[0]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Comma-separated integer encodings, `b0,b1,...,b_{k-1}`.
    pub fn to_text(&self) -> String {
        self.0
            .iter()
            .map(|c| c.value().to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Human form such as `2u^2+u+2`, highest power first.
impl fmt::Display for RingElem {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, "+")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(out, "{v}")?,
                (1, 1) => write!(out, "u")?,
                (1, v) => write!(out, "{v}u")?,
                (d, 1) => write!(out, "u^{d}")?,
                (d, v) => write!(out, "{v}u^{d}")?,
            }
        }
        if first {
            write!(out, "0")?;
        }
        Ok(())
    }
}

/// R_k together with the shift unit λ = a_0 + u + a_2 u^2 + ... + a_{k-1} u^{k-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRing {
    field: Field,
    k: usize,
    lambda: Vec<Elem>,
}

impl ChainRing {
    /// `lambda` holds (a_0, a_1, ..., a_{k-1}); a_0 must be nonzero and a_1
    /// must equal 1.
    pub fn new(field: Field, k: usize, lambda: Vec<Elem>) -> Result<ChainRing> {
        if k < 2 {
            return Err(Error::BadK(k));
        }
        if lambda.len() != k {
            return Err(Error::InvalidLambda(format!(
                "expected {k} coefficients a0,...,a{}, got {}",
                k - 1,
                lambda.len()
            )));
        }
        if let Some(bad) = lambda.iter().find(|c| c.value() >= field.order()) {
            return Err(Error::ElementOutOfRange {
                value: bad.value() as u64,
                order: field.order() as u64,
            });
        }
        if lambda[0].is_zero() {
            return Err(Error::InvalidLambda("a0 must be nonzero".into()));
        }
        if lambda[1] != Elem::ONE {
            return Err(Error::InvalidLambda(format!(
                "a1 must be 1 (lambda is normalized as a0 + u + a2 u^2 + ...), got {}",
                lambda[1]
            )));
        }
        Ok(ChainRing { field, k, lambda })
    }

    /// Parses λ from its text form `a0,a1,...,a_{k-1}`.
    pub fn parse(field: Field, k: usize, lambda: &str) -> Result<ChainRing> {
        let coeffs = parse_elems(lambda, &field)?;
        ChainRing::new(field, k, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// (a_0, a_1, ..., a_{k-1}).
    pub fn lambda_coeffs(&self) -> &[Elem] {
        &self.lambda
    }

    pub fn a0(&self) -> Elem {
        self.lambda[0]
    }

    pub fn lambda(&self) -> RingElem {
        RingElem(self.lambda.clone())
    }

    /// a(u) = λ - a_0.
    pub fn a_of_u(&self) -> RingElem {
        let mut c = self.lambda.clone();
        c[0] = Elem::ZERO;
        RingElem(c)
    }

    /// The matrix a(J_k) = J_k + Σ_{i>=2} a_i J_k^i, representing
    /// multiplication by a(u) in the basis 1, u, ..., u^{k-1}.
    pub fn a_of_j(&self) -> Matrix {
        let mut m = Matrix::zero(self.k, self.k);
        for row in 1..self.k {
            for col in 0..row {
                m[(row, col)] = self.lambda[row - col];
            }
        }
        m
    }

    /// Number of elements, q^k.
    pub fn order(&self) -> u128 {
        (self.field.order() as u128).pow(self.k as u32)
    }

    pub fn elem(&self, coeffs: Vec<Elem>) -> Result<RingElem> {
        if coeffs.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: coeffs.len(),
            });
        }
        if let Some(bad) = coeffs.iter().find(|c| c.value() >= self.field.order()) {
            return Err(Error::ElementOutOfRange {
                value: bad.value() as u64,
                order: self.field.order() as u64,
            });
        }
        Ok(RingElem(coeffs))
    }

    pub fn parse_elem(&self, s: &str) -> Result<RingElem> {
        self.elem(parse_elems(s, &self.field)?)
    }

    pub fn zero(&self) -> RingElem {
        RingElem(vec![Elem::ZERO; self.k])
    }

    pub fn one(&self) -> RingElem {
        self.from_field(Elem::ONE)
    }

    pub fn from_field(&self, c: Elem) -> RingElem {
        let mut v = vec![Elem::ZERO; self.k];
        v[0] = c;
        RingElem(v)
    }

    /// u^i, zero once i >= k.
    pub fn u_pow(&self, i: usize) -> RingElem {
        let mut v = vec![Elem::ZERO; self.k];
        if i < self.k {
            v[i] = Elem::ONE;
        }
        RingElem(v)
    }

    /// Element with integer index `idx`, whose base-q digits are b_0, b_1, ...
    pub fn elem_from_index(&self, mut idx: u128) -> RingElem {
        let q = self.field.order() as u128;
        RingElem(
            (0..self.k)
                .map(|_| {
                    let d = (idx % q) as u32;
                    idx /= q;
                    Elem(d)
                })
                .collect(),
        )
    }

    pub fn random_elem<R: Rng>(&self, rng: &mut R) -> RingElem {
        RingElem(
            (0..self.k)
                .map(|_| Elem(rng.gen_range(0..self.field.order())))
                .collect(),
        )
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| self.field.add(x, y))
                .collect(),
        )
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| self.field.sub(x, y))
                .collect(),
        )
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        RingElem(a.0.iter().map(|&x| self.field.neg(x)).collect())
    }

    pub fn scale(&self, c: Elem, a: &RingElem) -> RingElem {
        RingElem(a.0.iter().map(|&x| self.field.mul(c, x)).collect())
    }

    /// Truncated product; terms of degree >= k vanish.
    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.k];
        for (i, &x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.0[..self.k - i].iter().enumerate() {
                out[i + j] = f.mul_add(x, y, out[i + j]);
            }
        }
        RingElem(out)
    }

    pub fn pow(&self, a: &RingElem, e: u32) -> RingElem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn is_unit(&self, a: &RingElem) -> bool {
        !a.constant().is_zero()
    }

    /// Inverse of a unit b_0 (1 + n) with n nilpotent, as
    /// b_0^{-1} (1 - n + n^2 - ... ± n^{k-1}).
    pub fn inv(&self, a: &RingElem) -> Result<RingElem> {
        let f = &self.field;
        let b0_inv = f.inv(a.constant()).map_err(|_| Error::NotAUnit)?;
        let mut nil = self.scale(b0_inv, a);
        nil.0[0] = Elem::ZERO;
        let neg_nil = self.neg(&nil);
        let mut term = self.one();
        let mut sum = self.one();
        for _ in 1..self.k {
            term = self.mul(&term, &neg_nil);
            sum = self.add(&sum, &term);
        }
        Ok(self.scale(b0_inv, &sum))
    }
}

fn parse_elems(s: &str, f: &Field) -> Result<Vec<Elem>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let v: u64 = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad element '{t}'")))?;
            f.elem(v)
        })
        .collect()
}

/// An element Σ_j α_j x^j of R_k[x]/<x^N - λ>, stored as its N coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingPoly(Vec<RingElem>);

impl RingPoly {
    pub fn coeffs(&self) -> &[RingElem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(RingElem::is_zero)
    }
}

/// The ambient ring R_k[x]/<x^N - λ> for a fixed length N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    ring: ChainRing,
    len: usize,
}

impl Ambient {
    pub fn new(ring: ChainRing, len: usize) -> Result<Ambient> {
        if len == 0 {
            return Err(Error::BadLength);
        }
        Ok(Ambient { ring, len })
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn from_coeffs(&self, coeffs: Vec<RingElem>) -> Result<RingPoly> {
        if coeffs.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: coeffs.len(),
            });
        }
        for c in &coeffs {
            if c.0.len() != self.ring.k {
                return Err(Error::LengthMismatch {
                    expected: self.ring.k,
                    got: c.0.len(),
                });
            }
        }
        Ok(RingPoly(coeffs))
    }

    pub fn zero(&self) -> RingPoly {
        RingPoly(vec![self.ring.zero(); self.len])
    }

    pub fn one(&self) -> RingPoly {
        self.constant(self.ring.one())
    }

    pub fn constant(&self, c: RingElem) -> RingPoly {
        let mut v = vec![self.ring.zero(); self.len];
        v[0] = c;
        RingPoly(v)
    }

    /// x^i reduced modulo x^N - λ.
    pub fn x_pow(&self, i: usize) -> RingPoly {
        let mut c = self.ring.one();
        for _ in 0..i / self.len {
            c = self.ring.mul(&c, &self.ring.lambda());
        }
        let mut v = vec![self.ring.zero(); self.len];
        v[i % self.len] = c;
        RingPoly(v)
    }

    /// Image of a polynomial over F_q, reduced with x^N = λ.
    pub fn from_field_poly(&self, p: &Poly) -> RingPoly {
        let mut out = self.zero();
        // Horner in the quotient ring, from the top coefficient down.
        for &c in p.coeffs().iter().rev() {
            out = self.mul_x(&out);
            out.0[0] = self.ring.add(&out.0[0], &self.ring.from_field(c));
        }
        out
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> RingPoly {
        RingPoly((0..self.len).map(|_| self.ring.random_elem(rng)).collect())
    }

    fn check(&self, a: &RingPoly) -> Result<()> {
        if a.0.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: a.0.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, a: &RingPoly, b: &RingPoly) -> Result<RingPoly> {
        self.check(a)?;
        self.check(b)?;
        Ok(RingPoly(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| self.ring.add(x, y))
                .collect(),
        ))
    }

    pub fn sub(&self, a: &RingPoly, b: &RingPoly) -> Result<RingPoly> {
        self.check(a)?;
        self.check(b)?;
        Ok(RingPoly(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| self.ring.sub(x, y))
                .collect(),
        ))
    }

    /// Multiplication by a field scalar.
    pub fn scale(&self, c: Elem, a: &RingPoly) -> RingPoly {
        RingPoly(a.0.iter().map(|x| self.ring.scale(c, x)).collect())
    }

    /// Multiplication by a constant of R_k.
    pub fn scale_ring(&self, c: &RingElem, a: &RingPoly) -> RingPoly {
        RingPoly(a.0.iter().map(|x| self.ring.mul(c, x)).collect())
    }

    /// x · a, folding x^N back as λ.
    pub fn mul_x(&self, a: &RingPoly) -> RingPoly {
        let mut v = Vec::with_capacity(self.len);
        v.push(self.ring.mul(&self.ring.lambda(), &a.0[self.len - 1]));
        v.extend_from_slice(&a.0[..self.len - 1]);
        RingPoly(v)
    }

    /// Product in R_k[x]/<x^N - λ>.
    pub fn mul(&self, a: &RingPoly, b: &RingPoly) -> Result<RingPoly> {
        self.check(a)?;
        self.check(b)?;
        let r = &self.ring;
        let lambda = r.lambda();
        let mut out = self.zero();
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                let mut t = r.mul(x, y);
                let mut idx = i + j;
                if idx >= self.len {
                    t = r.mul(&t, &lambda);
                    idx -= self.len;
                }
                out.0[idx] = r.add(&out.0[idx], &t);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, a: &RingPoly, e: u32) -> Result<RingPoly> {
        (0..e).try_fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// The k × N matrix whose (i, j) entry is the u^i coefficient of α_j.
    pub fn coefficient_matrix(&self, c: &RingPoly) -> Matrix {
        let k = self.ring.k;
        let mut m = Matrix::zero(k, self.len);
        for (j, alpha) in c.0.iter().enumerate() {
            for (i, &b) in alpha.0.iter().enumerate() {
                m[(i, j)] = b;
            }
        }
        m
    }

    pub fn from_matrix(&self, m: &Matrix) -> Result<RingPoly> {
        if m.rows() != self.ring.k || m.cols() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.ring.k * self.len,
                got: m.rows() * m.cols(),
            });
        }
        Ok(RingPoly(
            (0..self.len).map(|j| RingElem(m.column(j))).collect(),
        ))
    }

    /// Flattened F_q coordinates (α_0, ..., α_{N-1}), each α_j as k entries.
    pub fn to_field_vec(&self, c: &RingPoly) -> Vec<Elem> {
        c.0.iter().flat_map(|a| a.0.iter().copied()).collect()
    }

    pub fn from_field_vec(&self, v: &[Elem]) -> Result<RingPoly> {
        let k = self.ring.k;
        if v.len() != k * self.len {
            return Err(Error::LengthMismatch {
                expected: k * self.len,
                got: v.len(),
            });
        }
        Ok(RingPoly(
            v.chunks(k).map(|c| RingElem(c.to_vec())).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> ChainRing {
        ChainRing::parse(Field::prime(3).unwrap(), 3, "2,1,2").unwrap()
    }

    fn e(r: &ChainRing, s: &str) -> RingElem {
        r.parse_elem(s).unwrap()
    }

    #[test]
    fn lambda_validation() {
        let f = Field::prime(3).unwrap();
        let err = ChainRing::parse(f.clone(), 3, "2,2,2").unwrap_err();
        assert!(err.to_string().contains("a1 must be 1"), "{err}");
        assert!(ChainRing::parse(f.clone(), 3, "0,1,2").is_err());
        assert!(ChainRing::parse(f.clone(), 3, "2,1").is_err());
        assert!(ChainRing::parse(f.clone(), 1, "2").is_err());
        assert!(ChainRing::parse(f, 2, "1,1").is_ok());
    }

    #[test]
    fn truncated_products() {
        let r = r3();
        assert!(r.mul(&r.u_pow(1), &r.u_pow(2)).is_zero());
        assert_eq!(r.mul(&e(&r, "1,1,0"), &e(&r, "1,2,0")), e(&r, "1,0,2"));
        let a = e(&r, "2,1,2");
        assert_eq!(r.mul(&a, &r.one()), a);
        for i in 0..4 {
            for j in 0..4 {
                let prod = r.mul(&r.u_pow(i), &r.u_pow(j));
                assert_eq!(prod.is_zero(), i + j >= 3);
            }
        }
    }

    #[test]
    fn inverses() {
        let r = r3();
        assert_eq!(r.inv(&r.one()), Ok(r.one()));
        assert_eq!(r.inv(&e(&r, "1,1,0")), Ok(e(&r, "1,2,1")));
        assert_eq!(r.inv(&r.u_pow(1)), Err(Error::NotAUnit));
    }

    #[test]
    fn unit_criterion_exhaustive() {
        // q^k = 3^5 elements of F_3[u]/<u^5>.
        let r = ChainRing::parse(Field::prime(3).unwrap(), 5, "1,1,0,2,1").unwrap();
        for idx in 0..r.order() {
            let a = r.elem_from_index(idx);
            match r.inv(&a) {
                Ok(b) => {
                    assert!(r.is_unit(&a));
                    assert_eq!(r.mul(&a, &b), r.one());
                }
                Err(_) => assert!(a.constant().is_zero()),
            }
        }
    }

    #[test]
    fn quotient_products() {
        let r = r3();
        let amb = Ambient::new(r.clone(), 4).unwrap();
        let a = amb.random(&mut rand::thread_rng());
        assert_eq!(amb.mul(&a, &amb.one()).unwrap(), a);
        assert_eq!(
            amb.mul(&amb.x_pow(3), &amb.x_pow(1)).unwrap(),
            amb.constant(r.lambda())
        );
        let expect = amb.scale_ring(&r.lambda(), &amb.x_pow(1));
        assert_eq!(amb.mul(&amb.x_pow(2), &amb.x_pow(3)).unwrap(), expect);
        assert_eq!(amb.x_pow(5), expect);
    }

    #[test]
    fn coefficient_matrix_roundtrip() {
        let r = r3();
        let amb = Ambient::new(r.clone(), 4).unwrap();
        assert_eq!(amb.coefficient_matrix(&amb.zero()), Matrix::zero(3, 4));
        let ux = amb.scale_ring(&r.u_pow(1), &amb.x_pow(1));
        let m = amb.coefficient_matrix(&ux);
        let mut expect = Matrix::zero(3, 4);
        expect[(1, 1)] = Elem::ONE;
        assert_eq!(m, expect);
        let c = amb.random(&mut rand::thread_rng());
        assert_eq!(amb.from_matrix(&amb.coefficient_matrix(&c)).unwrap(), c);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let r = r3();
        let a4 = Ambient::new(r.clone(), 4).unwrap();
        let a5 = Ambient::new(r, 5).unwrap();
        assert!(matches!(
            a4.mul(&a4.one(), &a5.one()),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn a_of_j_represents_multiplication_by_a() {
        // (1, u, ..., u^{k-1}) a(u) = (1, u, ..., u^{k-1}) a(J_k)
        let r = ChainRing::parse(Field::prime(5).unwrap(), 4, "2,1,2,4").unwrap();
        let aj = r.a_of_j();
        for col in 0..4 {
            let lhs = r.mul(&r.u_pow(col), &r.a_of_u());
            let column = aj.column(col);
            let rhs = (0..4).fold(r.zero(), |acc, i| {
                r.add(&acc, &r.scale(column[i], &r.u_pow(i)))
            });
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn field_poly_embedding() {
        let r = r3();
        let amb = Ambient::new(r.clone(), 4).unwrap();
        let f = r.field();
        // x^4 - 2 = λ - 2 = a(u)
        let omega = Poly::binomial(4, Elem(2), f);
        assert_eq!(amb.from_field_poly(&omega), amb.constant(r.a_of_u()));
    }

    #[test]
    fn text_forms() {
        let r = r3();
        let a = e(&r, "2,1,2");
        assert_eq!(a.to_text(), "2,1,2");
        assert_eq!(a.to_string(), "2u^2+u+2");
        assert_eq!(r.zero().to_string(), "0");
    }
}
