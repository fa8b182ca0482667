//! Arithmetic in F_p and F_{p^m}.
//!
//! Elements are stored by their integer encoding: an element with polynomial
//! representation `c_0 + c_1 t + ... + c_{m-1} t^{m-1}` over F_p is the
//! integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. For prime fields this is the
//! usual residue. All arithmetic goes through a [`Field`] value.

use std::fmt;

use crate::error::{Error, Result};

/// An element of a finite field, stored by its base-p integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field F_{p^m} in polynomial basis over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u32,
    m: usize,
    /// Monic modulus over F_p, ascending coefficients, length m + 1.
    modulus: Vec<u32>,
    order: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Small helpers for polynomials over F_p with plain u32 coefficients, used
// for modulus validation and extension-field multiplication.

fn fp_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = fp_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let t = r[shift + i] as u64 + (p - c) as u64 * bi as u64;
            r[shift + i] = (t % p as u64) as u32;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Checks irreducibility over F_p by trial division against every monic
/// polynomial of degree 1..=deg/2.
fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                g.push((v % p as u64) as u32);
                v /= p as u64;
            }
            g.push(1);
            if fp_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree m, comparing coefficients
/// constant-term first.
fn default_modulus(p: u32, m: usize) -> Vec<u32> {
    let count = (p as u64).pow(m as u32);
    for idx in 0..count {
        // c_0 is the most significant digit of idx so that the scan order is
        // lexicographic from the constant term upward.
        let mut coeffs = vec![0u32; m + 1];
        let mut v = idx;
        for i in (0..m).rev() {
            coeffs[i] = (v % p as u64) as u32;
            v /= p as u64;
        }
        coeffs[m] = 1;
        if fp_is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds F_{p^m}. When `modulus` is `None` and `m > 1`, the smallest
    /// monic irreducible of degree m is used.
    pub fn new(p: u32, m: usize, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        let order = (p as u64)
            .checked_pow(m as u32)
            .filter(|&q| q <= u32::MAX as u64 / 2)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{m} is too large")))?
            as u32;
        let modulus = match modulus {
            Some(c) => {
                let ok = c.len() == m + 1
                    && c[m] == 1
                    && c.iter().all(|&x| x < p)
                    && (m == 1 || fp_is_irreducible(&c, p));
                if !ok {
                    return Err(Error::BadModulus(c, m));
                }
                c
            }
            None if m == 1 => vec![0, 1],
            None => default_modulus(p, m),
        };
        Ok(Field {
            p,
            m,
            modulus,
            order,
        })
    }

    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Element from its integer encoding.
    pub fn elem(&self, value: u64) -> Result<Elem> {
        if value >= self.order as u64 {
            return Err(Error::ElementOutOfRange {
                value,
                order: self.order as u64,
            });
        }
        Ok(Elem(value as u32))
    }

    /// Image of an integer under Z -> F_p -> F_{p^m}.
    pub fn from_int(&self, value: i64) -> Elem {
        Elem(value.rem_euclid(self.p as i64) as u32)
    }

    /// Every element, in integer-encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    /// Coefficients of `a` over F_p, ascending, length m.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        let mut v = 0u32;
        for &d in digits.iter().rev() {
            v = v * self.p + d % self.p;
        }
        Elem(v)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.m == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.m == 1 {
            return Elem(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        Elem(out)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.m == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let p = self.p as u64;
        let mut prod = vec![0u32; 2 * self.m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        self.from_digits(&fp_rem(&prod, &self.modulus, self.p))
    }

    /// `a * b + c`, the inner step of most linear algebra here.
    #[inline]
    pub fn mul_add(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        if self.m == 1 {
            return Elem(((a.0 as u64 * b.0 as u64 + c.0 as u64) % self.p as u64) as u32);
        }
        self.add(self.mul(a, b), c)
    }

    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if e < 0 {
            let inv = self.inv(a)?;
            return Ok(self.pow_u(inv, e.unsigned_abs()));
        }
        Ok(self.pow_u(a, e as u64))
    }

    pub fn pow_u(&self, a: Elem, mut e: u64) -> Elem {
        let mut result = Elem::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow_u(a, self.order as u64 - 2))
    }

    /// The unique θ with θ^{p^e} = a0, computed as a0^s with
    /// s = (p^e)^{-1} mod (p^m - 1).
    pub fn pe_root(&self, a0: Elem, e: u32) -> Result<Elem> {
        if a0.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let group = self.order as u64 - 1;
        let mut pe_mod = 1u64 % group;
        for _ in 0..e {
            pe_mod = pe_mod * self.p as u64 % group;
        }
        let s = mod_inverse(pe_mod, group);
        let theta = self.pow_u(a0, s);
        let mut check = theta;
        for _ in 0..e {
            check = self.pow_u(check, self.p as u64);
        }
        assert_eq!(check, a0, "p^e-th root postcondition");
        Ok(theta)
    }
}

/// Inverse of `a` modulo `m` for gcd(a, m) = 1; returns 0 when m = 1.
fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn prime_fields() {
        let f3 = f(3);
        assert_eq!(f3.order(), 3);
        assert_eq!(f3.modulus(), &[0, 1]);
        assert_eq!(f(5).order(), 5);
    }

    #[test]
    fn default_modulus_gf4() {
        let f4 = Field::new(2, 2, None).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(f4.order(), 4);
    }

    #[test]
    fn default_modulus_gf9_scans_constant_term_first() {
        // x^2 + 1 is irreducible over F_3 and has the smallest constant term
        // among the irreducible candidates with c_1 = 0.
        let f9 = Field::new(3, 2, None).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(3, 2, None).unwrap(), f9);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 1, None), Err(Error::NotPrime(4)));
        assert!(matches!(
            Field::new(2, 2, Some(vec![1, 0, 1])),
            Err(Error::BadModulus(..))
        ));
        assert!(matches!(
            Field::new(3, 2, Some(vec![1, 1])),
            Err(Error::BadModulus(..))
        ));
        assert!(Field::new(3, 2, Some(vec![2, 1, 1])).is_ok());
    }

    #[test]
    fn small_arithmetic() {
        let f3 = f(3);
        assert_eq!(f3.add(Elem(2), Elem(2)), Elem(1));
        assert_eq!(f3.mul(Elem(2), Elem(2)), Elem(1));
        let f5 = f(5);
        assert_eq!(f5.mul(Elem(4), Elem(2)), Elem(3));
        assert_eq!(f5.sub(Elem(1), Elem(3)), Elem(3));
        assert_eq!(f5.neg(Elem(0)), Elem(0));
    }

    #[test]
    fn inverses() {
        assert_eq!(f(3).inv(Elem(2)), Ok(Elem(2)));
        assert_eq!(f(5).inv(Elem(2)), Ok(Elem(3)));
        assert_eq!(f(5).inv(Elem(4)), Ok(Elem(4)));
        assert_eq!(f(5).inv(Elem(0)), Err(Error::ZeroInverse));
    }

    #[test]
    fn powers() {
        assert_eq!(f(3).pow(Elem(2), 3), Ok(Elem(2)));
        assert_eq!(f(5).pow(Elem(2), 5), Ok(Elem(2)));
        assert_eq!(f(5).pow(Elem(2), -1), Ok(Elem(3)));
        assert_eq!(f(5).pow(Elem(0), -1), Err(Error::ZeroInverse));
        assert_eq!(f(5).pow(Elem(0), 0), Ok(Elem(1)));
        for fld in [
            f(2),
            f(3),
            f(5),
            Field::new(2, 3, None).unwrap(),
            Field::new(5, 2, None).unwrap(),
        ] {
            for a in fld.elements().skip(1) {
                assert_eq!(fld.pow_u(a, fld.order() as u64 - 1), Elem::ONE);
                assert_eq!(fld.mul(a, fld.inv(a).unwrap()), Elem::ONE);
            }
        }
    }

    #[test]
    fn pe_roots() {
        assert_eq!(f(3).pe_root(Elem(2), 1), Ok(Elem(2)));
        assert_eq!(f(5).pe_root(Elem(2), 1), Ok(Elem(2)));
        assert_eq!(f(5).pe_root(Elem(3), 0), Ok(Elem(3)));
        assert_eq!(f(5).pe_root(Elem(0), 1), Err(Error::ZeroInverse));
    }

    #[test]
    fn pe_root_exhaustive() {
        let fields = [
            f(2),
            f(3),
            f(5),
            f(7),
            Field::new(2, 2, None).unwrap(),
            Field::new(2, 3, None).unwrap(),
            Field::new(3, 2, None).unwrap(),
            Field::new(5, 2, None).unwrap(),
        ];
        for fld in &fields {
            for e in 0..4u32 {
                for a in fld.elements().skip(1) {
                    let theta = fld.pe_root(a, e).unwrap();
                    let pe = (fld.characteristic() as u64).pow(e);
                    assert_eq!(fld.pow_u(theta, pe), a);
                }
            }
        }
    }

    #[test]
    fn extension_matches_schoolbook() {
        // GF(4) with t^2 = t + 1: t * t = t + 1, t * (t + 1) = 1.
        let f4 = Field::new(2, 2, None).unwrap();
        let t = Elem(2);
        assert_eq!(f4.mul(t, t), Elem(3));
        assert_eq!(f4.mul(t, Elem(3)), Elem(1));
        assert_eq!(f4.add(t, Elem(3)), Elem(1));
    }

    #[test]
    fn element_range_checked() {
        assert!(f(3).elem(3).is_err());
        assert_eq!(f(3).elem(2), Ok(Elem(2)));
    }
}
