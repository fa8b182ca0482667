//! Univariate polynomials over F_{p^m}.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Polynomial with ascending coefficients and no trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

const FACTOR_SEED: u64 = 0x6772_6179_6d61_7021;

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Elem::ONE)
    }

    pub fn x() -> Poly {
        Poly::monomial(Elem::ONE, 1)
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::new(vec![c])
    }

    pub fn monomial(c: Elem, deg: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(coeffs)
    }

    /// `x^n - c`.
    pub fn binomial(n: usize, c: Elem, f: &Field) -> Poly {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[0] = f.neg(c);
        coeffs[n] = f.add(coeffs[n], Elem::ONE);
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    pub fn to_vec(&self, len: usize) -> Vec<Elem> {
        let mut v = self.coeffs.clone();
        assert!(v.len() <= len, "polynomial longer than {len}");
        v.resize(len, Elem::ZERO);
        v
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..len)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..len)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by x^s.
    pub fn shift(&self, s: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Elem::ZERO; s];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(a, b, out[i + j]);
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, mut e: u64, f: &Field) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        result
    }

    pub fn divmod(&self, divisor: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[db])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - db] = c;
            let nc = f.neg(c);
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i - db + j] = f.mul_add(nc, b, rem[i - db + j]);
            }
        }
        rem.truncate(db);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly, f: &Field) -> Result<Poly> {
        Ok(self.divmod(divisor, f)?.1)
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly, f: &Field) -> Result<Option<Poly>> {
        let (q, r) = self.divmod(divisor, f)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Poly, f: &Field) -> Result<bool> {
        Ok(other.rem(self, f)?.is_zero())
    }

    pub fn monic(&self, f: &Field) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(f.inv(l).expect("nonzero leading coefficient"), f),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly, f: &Field) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f)?;
            a = b;
            b = r;
        }
        Ok(a.monic(f))
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: Elem, f: &Field) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.mul_add(acc, x, c))
    }

    /// Reduction modulo x^len - unit.
    pub fn reduce_constacyclic(&self, len: usize, unit: Elem, f: &Field) -> Poly {
        if self.coeffs.len() <= len {
            return self.clone();
        }
        let mut out = self.coeffs.clone();
        for i in (len..out.len()).rev() {
            let c = out[i];
            if !c.is_zero() {
                out[i - len] = f.mul_add(c, unit, out[i - len]);
            }
        }
        out.truncate(len);
        Poly::new(out)
    }

    /// Product in F[x]/<x^len - unit>.
    pub fn mul_constacyclic(&self, other: &Poly, len: usize, unit: Elem, f: &Field) -> Poly {
        self.mul(other, f).reduce_constacyclic(len, unit, f)
    }

    fn mul_mod(&self, other: &Poly, modulus: &Poly, f: &Field) -> Poly {
        self.mul(other, f).rem(modulus, f).expect("nonzero modulus")
    }

    fn pow_mod(&self, mut e: u64, modulus: &Poly, f: &Field) -> Poly {
        let mut result = Poly::one().rem(modulus, f).expect("nonzero modulus");
        let mut base = self.rem(modulus, f).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_mod(&base, modulus, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus, f);
            }
        }
        result
    }

    /// Canonical factor order: by degree, then by coefficients compared from
    /// the top down (the integer whose base-q digits are the coefficients).
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Ascending coefficient list, e.g. `2,2,1`; the zero polynomial is `0`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.value().to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses either a coefficient list (`2,2,1`) or the human form
    /// (`x^2+2x+2`). Coefficients are integer encodings of field elements.
    pub fn parse(s: &str, f: &Field) -> Result<Poly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s.contains('x') {
            parse_human(&s, f)
        } else {
            let coeffs = s
                .split(',')
                .map(|t| {
                    let v: u64 = t
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient '{t}'")))?;
                    f.elem(v)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Poly::new(coeffs))
        }
    }
}

fn parse_human(s: &str, f: &Field) -> Result<Poly> {
    let mut coeffs: Vec<Elem> = Vec::new();
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    for term in terms {
        let (negative, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, term.strip_prefix('+').unwrap_or(term)),
        };
        let bad = || Error::Parse(format!("bad term '{term}'"));
        let (coef, deg) = match body.find('x') {
            None => (body.parse::<u64>().map_err(|_| bad())?, 0usize),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                let c = if c.is_empty() {
                    1
                } else {
                    c.parse::<u64>().map_err(|_| bad())?
                };
                let rest = &body[pos + 1..];
                let d = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(bad)?
                        .parse::<usize>()
                        .map_err(|_| bad())?
                };
                (c, d)
            }
        };
        let mut c = f.elem(coef)?;
        if negative {
            c = f.neg(c);
        }
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, Elem::ZERO);
        }
        coeffs[deg] = f.add(coeffs[deg], c);
    }
    Ok(Poly::new(coeffs))
}

/// Human-readable form, highest degree first, e.g. `x^2+2x+2`.
pub struct Pretty<'a>(pub &'a Poly);

impl fmt::Display for Pretty<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, c) in self.0.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, "+")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(out, "{v}")?,
                (1, 1) => write!(out, "x")?,
                (1, v) => write!(out, "{v}x")?,
                (d, 1) => write!(out, "x^{d}")?,
                (d, v) => write!(out, "{v}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
pub fn distinct_degree_factorization(poly: &Poly, f: &Field) -> Vec<(Poly, usize)> {
    let q = f.order() as u64;
    let mut out = Vec::new();
    let mut rest = poly.monic(f);
    let x = Poly::x();
    let mut h = x.clone();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            if deg > 0 {
                out.push((rest.clone(), deg));
            }
            break;
        }
        d += 1;
        h = h.pow_mod(q, &rest, f);
        let g = h.sub(&x, f).gcd(&rest, f).expect("rest is nonzero");
        if !g.is_one() {
            rest = rest.div_exact(&g, f).unwrap().expect("gcd divides");
            h = h.rem(&rest, f).unwrap();
            out.push((g, d));
        }
    }
    out
}

/// Splits a monic squarefree product of irreducibles of common degree `d`
/// (Cantor-Zassenhaus).
pub fn equal_degree_factorization(
    poly: &Poly,
    d: usize,
    f: &Field,
    rng: &mut ChaCha8Rng,
) -> Vec<Poly> {
    let n = poly.degree().expect("nonzero input");
    if n == d {
        return vec![poly.monic(f)];
    }
    let q = f.order() as u64;
    loop {
        let a = Poly::new((0..n).map(|_| Elem(rng.gen_range(0..f.order()))).collect());
        if a.degree().is_none_or(|da| da == 0) {
            continue;
        }
        let g = a.gcd(poly, f).unwrap();
        let candidate = if !g.is_one() && g.degree() != Some(n) {
            g
        } else if f.characteristic() == 2 {
            // Trace map a + a^2 + ... + a^{2^{md - 1}}.
            let mut t = a.rem(poly, f).unwrap();
            let mut acc = t.clone();
            for _ in 1..(f.degree() * d) {
                t = t.mul_mod(&t, poly, f);
                acc = acc.add(&t, f);
            }
            acc.gcd(poly, f).unwrap()
        } else {
            // a^{(q^d - 1)/2} = (a * a^q * ... * a^{q^{d-1}})^{(q-1)/2}.
            let mut frob = a.rem(poly, f).unwrap();
            let mut norm = frob.clone();
            for _ in 1..d {
                frob = frob.pow_mod(q, poly, f);
                norm = norm.mul_mod(&frob, poly, f);
            }
            let b = norm.pow_mod((q - 1) / 2, poly, f).sub(&Poly::one(), f);
            if b.is_zero() {
                continue;
            }
            b.gcd(poly, f).unwrap()
        };
        let dc = candidate.degree().unwrap_or(0);
        if dc > 0 && dc < n {
            let other = poly
                .div_exact(&candidate, f)
                .unwrap()
                .expect("factor divides");
            let mut out = equal_degree_factorization(&candidate, d, f, rng);
            out.extend(equal_degree_factorization(&other, d, f, rng));
            return out;
        }
    }
}

/// Factors a monic squarefree polynomial into monic irreducibles, in
/// canonical order.
pub fn factor_squarefree(poly: &Poly, f: &Field) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    let mut factors: Vec<Poly> = distinct_degree_factorization(poly, f)
        .into_iter()
        .flat_map(|(g, d)| equal_degree_factorization(&g, d, f, &mut rng))
        .collect();
    factors.sort_by(Poly::canonical_cmp);
    factors
}

/// All monic polynomials of degree `d`, in canonical order.
pub fn monic_polys(d: usize, f: &Field) -> impl Iterator<Item = Poly> + '_ {
    let q = f.order() as u64;
    (0..q.pow(d as u32)).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(Elem((idx % q) as u32));
            idx /= q;
        }
        coeffs.push(Elem::ONE);
        Poly::new(coeffs)
    })
}

/// Factorization by trial division against monic polynomials of increasing
/// degree. Only suitable for small degree and small q; kept as an
/// independent cross-check of [`factor_squarefree`].
pub fn factor_by_trial_division(poly: &Poly, f: &Field) -> Vec<(Poly, usize)> {
    let mut rest = poly.monic(f);
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().is_some_and(|deg| deg >= 2 * d) {
        for cand in monic_polys(d, f) {
            let mut mult = 0;
            while let Some(q) = rest.div_exact(&cand, f).unwrap() {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        d += 1;
    }
    if rest.degree().is_some_and(|deg| deg > 0) {
        out.push((rest, 1));
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    out
}

/// Irreducibility by trial division.
pub fn is_irreducible(poly: &Poly, f: &Field) -> bool {
    match poly.degree() {
        None | Some(0) => false,
        Some(_) => {
            let fac = factor_by_trial_division(poly, f);
            fac.len() == 1 && fac[0].1 == 1
        }
    }
}

/// Irreducible factors of x^n - θ. Requires gcd(n, p) = 1 so that the
/// polynomial is squarefree; every multiplicity is one.
pub fn factor_xn_minus_theta(n: usize, theta: Elem, f: &Field) -> Result<Vec<Poly>> {
    if theta.is_zero() {
        return Err(Error::ZeroInverse);
    }
    if n == 0 || n.is_multiple_of(f.characteristic() as usize) {
        return Err(Error::NotSquarefree {
            p: f.characteristic(),
            n,
        });
    }
    let target = Poly::binomial(n, theta, f);
    let factors = factor_squarefree(&target, f);
    debug_assert_eq!(
        factors.iter().fold(Poly::one(), |acc, g| acc.mul(g, f)),
        target
    );
    Ok(factors)
}

/// Writes `poly = Σ h_i (x^N - a0)^i` with deg h_i < N, returning
/// (h_0, ..., h_{count-1}).
pub fn omega_adic_expand(
    poly: &Poly,
    block: usize,
    a0: Elem,
    count: usize,
    f: &Field,
) -> Result<Vec<Poly>> {
    if let Some(deg) = poly.degree() {
        if deg >= block * count {
            return Err(Error::DegreeTooLarge {
                degree: deg,
                block,
                count,
            });
        }
    }
    let omega = Poly::binomial(block, a0, f);
    let mut out = Vec::with_capacity(count);
    let mut rest = poly.clone();
    for _ in 0..count {
        let (q, r) = rest.divmod(&omega, f)?;
        out.push(r);
        rest = q;
    }
    debug_assert!(rest.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn p(s: &str, f: &Field) -> Poly {
        Poly::parse(s, f).unwrap()
    }

    #[test]
    fn multiplication() {
        let f = f3();
        assert_eq!(p("x+1", &f).mul(&p("x+2", &f), &f), p("x^2+2", &f));
        assert_eq!(p("x^2+x+2", &f).mul(&p("x^2+2x+2", &f), &f), p("x^4+1", &f));
        let a = p("2x^3+x", &f);
        assert_eq!(a.add(&Poly::zero(), &f), a);
    }

    #[test]
    fn division() {
        let f = f3();
        let (q, r) = p("x^4+1", &f).divmod(&p("x^2+x+2", &f), &f).unwrap();
        assert_eq!(q, p("x^2+2x+2", &f));
        assert!(r.is_zero());
        let a = p("x^3+2x+1", &f);
        assert_eq!(a.divmod(&a, &f).unwrap(), (Poly::one(), Poly::zero()));
        let g = f5();
        let (q, r) = p("x^3+3", &g).divmod(&p("x+2", &g), &g).unwrap();
        assert_eq!(q, p("x^2+3x+4", &g));
        assert!(r.is_zero());
        assert_eq!(a.divmod(&Poly::zero(), &f), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcds() {
        let f = f3();
        let a = p("2x^2+x+1", &f);
        assert_eq!(a.gcd(&Poly::zero(), &f).unwrap(), a.monic(&f));
        assert_eq!(a.gcd(&a, &f).unwrap(), a.monic(&f));
        assert!(p("x^2+x+2", &f)
            .gcd(&p("x^2+2x+2", &f), &f)
            .unwrap()
            .is_one());
        assert_eq!(Poly::zero().gcd(&Poly::zero(), &f), Err(Error::ZeroGcd));
    }

    #[test]
    fn factor_reference_cases() {
        let f = f3();
        assert_eq!(
            factor_xn_minus_theta(4, Elem(2), &f).unwrap(),
            vec![p("x^2+x+2", &f), p("x^2+2x+2", &f)]
        );
        assert_eq!(
            factor_xn_minus_theta(5, Elem(2), &f).unwrap(),
            vec![p("x+1", &f), p("x^4+2x^3+x^2+2x+1", &f)]
        );
        assert_eq!(
            factor_xn_minus_theta(2, Elem(2), &f).unwrap(),
            vec![p("x^2+1", &f)]
        );
        let g = f5();
        assert_eq!(
            factor_xn_minus_theta(3, Elem(2), &g).unwrap(),
            vec![p("x+2", &g), p("x^2+3x+4", &g)]
        );
        assert_eq!(
            factor_xn_minus_theta(1, Elem(2), &g).unwrap(),
            vec![p("x+3", &g)]
        );
    }

    #[test]
    fn factor_rejects_bad_input() {
        let f = f3();
        assert!(matches!(
            factor_xn_minus_theta(6, Elem(2), &f),
            Err(Error::NotSquarefree { .. })
        ));
        assert!(factor_xn_minus_theta(4, Elem(0), &f).is_err());
    }

    #[test]
    fn cantor_zassenhaus_agrees_with_trial_division() {
        let fields = [
            Field::prime(2).unwrap(),
            f3(),
            f5(),
            Field::prime(7).unwrap(),
            Field::new(2, 2, None).unwrap(),
            Field::new(3, 2, None).unwrap(),
            Field::new(2, 3, None).unwrap(),
        ];
        for f in &fields {
            for n in 1..=12usize {
                // trial division tries q^(n/2) candidates at the top degree
                if n.is_multiple_of(f.characteristic() as usize)
                    || (f.order() as u64).pow(n as u32 / 2) > 20_000
                {
                    continue;
                }
                for theta in f.elements().skip(1) {
                    let cz = factor_xn_minus_theta(n, theta, f).unwrap();
                    let td: Vec<Poly> = factor_by_trial_division(&Poly::binomial(n, theta, f), f)
                        .into_iter()
                        .map(|(g, mult)| {
                            assert_eq!(mult, 1);
                            g
                        })
                        .collect();
                    assert_eq!(cz, td, "q={} n={n} theta={theta}", f.order());
                }
            }
        }
    }

    #[test]
    fn omega_expansion() {
        let f = f3();
        let g = p("x^4+2x^3+x^2+x+2", &f);
        let h = omega_adic_expand(&g, 4, Elem(2), 3, &f).unwrap();
        assert_eq!(h, vec![p("2x^3+x^2+x+1", &f), Poly::one(), Poly::zero()]);

        let omega = Poly::binomial(4, Elem(2), &f);
        let sq = omega.mul(&omega, &f);
        let h = omega_adic_expand(&sq, 4, Elem(2), 4, &f).unwrap();
        assert_eq!(
            h,
            vec![Poly::zero(), Poly::zero(), Poly::one(), Poly::zero()]
        );

        let short = p("x^2+1", &f);
        let h = omega_adic_expand(&short, 4, Elem(2), 2, &f).unwrap();
        assert_eq!(h, vec![short, Poly::zero()]);

        assert!(omega_adic_expand(&sq, 4, Elem(2), 2, &f).is_err());
    }

    #[test]
    fn text_forms() {
        let f = f3();
        assert_eq!(p("2,2,1", &f), p("x^2+2x+2", &f));
        assert_eq!(p("x^2 - 2", &f), p("1,0,1", &f));
        assert_eq!(p("0", &f), Poly::zero());
        assert_eq!(p("x^4+2x^3+x^2+x+2", &f).to_coeff_string(), "2,1,1,2,1");
        assert_eq!(Pretty(&p("2,1,1,2,1", &f)).to_string(), "x^4+2x^3+x^2+x+2");
        assert!(Poly::parse("x^2+3", &f).is_err());
        assert!(Poly::parse("", &f).is_err());
        assert!(Poly::parse("y+1", &f).is_err());
    }

    #[test]
    fn constacyclic_reduction() {
        let f = f3();
        // x^5 mod x^4 - 2 = 2x
        let r = Poly::monomial(Elem::ONE, 5).reduce_constacyclic(4, Elem(2), &f);
        assert_eq!(r, Poly::monomial(Elem(2), 1));
    }
}
