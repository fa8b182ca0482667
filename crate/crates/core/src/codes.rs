//! λ-constacyclic codes over R_k of length N and their ϑ-constacyclic Gray
//! images over F_q of length p^r N.
//!
//! With N = p^e n, gcd(p, n) = 1, θ^{p^e} = a_0 and x^n - θ = f_1 ... f_t,
//! every code is C_(l) = <f_1^{l_1} ... f_t^{l_t}> for 0 <= l_j <= p^e k, and
//! its image is <ω^{p^r - k} f_1^{l_1} ... f_t^{l_t}> with ω = x^N - a_0.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chainring::{Ambient, RingPoly};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::graymap::GrayContext;
use crate::matrix::Matrix;
use crate::poly::{factor_xn_minus_theta, Poly};

/// Default number of codeword evaluations allowed per distance search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// N = p^e n with gcd(p, n) = 1.
pub fn decompose_length(len: usize, p: u32) -> Result<(u32, usize)> {
    if len == 0 {
        return Err(Error::BadLength);
    }
    let (mut e, mut n) = (0u32, len);
    while n % p as usize == 0 {
        n /= p as usize;
        e += 1;
    }
    Ok((e, n))
}

/// Exponent tuple (l_1, ..., l_t) naming the code <f_1^{l_1} ... f_t^{l_t}>.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CodeSpec(pub Vec<u32>);

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All codes of one length over one (R_k, λ).
#[derive(Clone, Debug)]
pub struct CodeFamily {
    gray: GrayContext,
    ambient: Ambient,
    len: usize,
    e: u32,
    n: usize,
    theta: Elem,
    factors: Vec<Poly>,
    omega: Poly,
}

impl CodeFamily {
    pub fn new(gray: GrayContext, len: usize) -> Result<CodeFamily> {
        let f = gray.field().clone();
        let (e, n) = decompose_length(len, f.characteristic())?;
        let a0 = gray.ring().a0();
        let theta = f.pe_root(a0, e)?;
        let factors = factor_xn_minus_theta(n, theta, &f)?;
        let omega = Poly::binomial(len, a0, &f);
        let ambient = Ambient::new(gray.ring().clone(), len)?;
        let fam = CodeFamily {
            gray,
            ambient,
            len,
            e,
            n,
            theta,
            factors,
            omega,
        };
        fam.check_invariants();
        Ok(fam)
    }

    fn check_invariants(&self) {
        let f = self.field();
        let product = self
            .factors
            .iter()
            .fold(Poly::one(), |acc, g| acc.mul(g, f));
        assert_eq!(
            product,
            Poly::binomial(self.n, self.theta, f),
            "Π f_j = x^n - θ"
        );
        let pe = (f.characteristic() as u64).pow(self.e);
        assert_eq!(
            f.pow_u(self.theta, pe),
            self.gray.ring().a0(),
            "θ^{{p^e}} = a_0"
        );
        // x^{p^r N} - ϑ = ω^{p^r - k} Π f_j^{p^e k}
        let full = self.gray_divisor(&CodeSpec(vec![self.max_exponent(); self.t()]));
        assert_eq!(
            full,
            Poly::binomial(self.gray_len(), self.gray.vartheta(), f),
            "x^(p^r N) - ϑ factorization"
        );
    }

    pub fn gray(&self) -> &GrayContext {
        &self.gray
    }

    pub fn field(&self) -> &Field {
        self.gray.field()
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    /// N.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> Elem {
        self.theta
    }

    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    pub fn t(&self) -> usize {
        self.factors.len()
    }

    /// ω = x^N - a_0.
    pub fn omega(&self) -> &Poly {
        &self.omega
    }

    /// p^e k, the largest exponent of any factor.
    pub fn max_exponent(&self) -> u32 {
        self.field().characteristic().pow(self.e) * self.gray.k() as u32
    }

    /// p^r N.
    pub fn gray_len(&self) -> usize {
        self.gray.block_len() * self.len
    }

    /// (p^e k + 1)^t.
    pub fn spec_count(&self) -> u128 {
        (self.max_exponent() as u128 + 1).pow(self.t() as u32)
    }

    /// Every exponent tuple in lexicographic order.
    pub fn specs(&self) -> impl Iterator<Item = CodeSpec> {
        let t = self.t();
        let base = self.max_exponent() as u128 + 1;
        (0..self.spec_count()).map(move |mut idx| {
            let mut v = vec![0u32; t];
            for slot in v.iter_mut().rev() {
                *slot = (idx % base) as u32;
                idx /= base;
            }
            CodeSpec(v)
        })
    }

    pub fn check_spec(&self, spec: &CodeSpec) -> Result<()> {
        if spec.0.len() != self.t() {
            return Err(Error::BadSpec(format!(
                "expected {} exponents, got {}",
                self.t(),
                spec.0.len()
            )));
        }
        if let Some(&l) = spec.0.iter().find(|&&l| l > self.max_exponent()) {
            return Err(Error::BadSpec(format!(
                "exponent {l} exceeds p^e k = {}",
                self.max_exponent()
            )));
        }
        Ok(())
    }

    /// Π f_j^{l_j} as a polynomial over F_q.
    pub fn ring_generator(&self, spec: &CodeSpec) -> Poly {
        let f = self.field();
        self.factors
            .iter()
            .zip(&spec.0)
            .fold(Poly::one(), |acc, (g, &l)| acc.mul(&g.pow(l as u64, f), f))
    }

    /// ω^{p^r - k} Π f_j^{l_j}, a divisor of x^{p^r N} - ϑ.
    pub fn gray_divisor(&self, spec: &CodeSpec) -> Poly {
        let f = self.field();
        let lead = self
            .omega
            .pow((self.gray.block_len() - self.gray.k()) as u64, f);
        lead.mul(&self.ring_generator(spec), f)
    }

    /// The divisor reduced modulo x^{p^r N} - ϑ (zero for the zero code).
    pub fn gray_generator(&self, spec: &CodeSpec) -> Poly {
        self.gray_divisor(spec).reduce_constacyclic(
            self.gray_len(),
            self.gray.vartheta(),
            self.field(),
        )
    }

    /// N k - Σ l_j deg f_j.
    pub fn dimension(&self, spec: &CodeSpec) -> usize {
        let removed: usize = self
            .factors
            .iter()
            .zip(&spec.0)
            .map(|(g, &l)| l as usize * g.degree().unwrap_or(0))
            .sum();
        self.len * self.gray.k() - removed
    }

    /// Generator matrix of the Gray image.
    pub fn gray_generator_matrix(&self, spec: &CodeSpec) -> Result<Matrix> {
        generator_matrix(
            &self.gray_divisor(spec),
            self.gray_len(),
            self.gray.vartheta(),
            self.field(),
        )
    }

    /// The generator Π f_j^{l_j} inside R_k[x]/<x^N - λ>.
    pub fn ring_generator_in_ambient(&self, spec: &CodeSpec) -> RingPoly {
        self.ambient.from_field_poly(&self.ring_generator(spec))
    }

    /// x^i · g for i = 0, ..., kN - 1, flattened to F_q vectors of length kN.
    /// Their F_q-span is the code C_(l), since multiplication by x on a space
    /// of dimension kN has a minimal polynomial of degree at most kN.
    pub fn ring_code_generators(&self, spec: &CodeSpec) -> Vec<Vec<Elem>> {
        let amb = &self.ambient;
        let mut cur = self.ring_generator_in_ambient(spec);
        let mut out = Vec::with_capacity(self.len * self.gray.k());
        for _ in 0..self.len * self.gray.k() {
            out.push(amb.to_field_vec(&cur));
            cur = amb.mul_x(&cur);
        }
        out
    }

    /// Builds the report for one code, computing its minimum distance when
    /// the search fits in `budget` codeword evaluations.
    pub fn report(&self, spec: &CodeSpec, budget: u64) -> Result<CodeReport> {
        self.check_spec(spec)?;
        let f = self.field();
        let ring = self.gray.ring();
        let gm = self.gray_generator_matrix(spec)?;
        let dimension = gm.rows();
        let dist = if dimension == 0 {
            Distance {
                d: None,
                exact: true,
                evaluated: 0,
            }
        } else {
            min_distance(&gm, f, budget)
        };
        let report = CodeReport {
            p: f.characteristic(),
            m: f.degree(),
            k: ring.k(),
            lambda: ring.lambda().to_text(),
            len: self.len,
            r: self.gray.r(),
            theta: self.theta.value(),
            factors: self.factors.iter().map(Poly::to_coeff_string).collect(),
            exponents: spec.0.clone(),
            length: self.gray_len(),
            dimension,
            cardinality_exponent: f.degree() * self.dimension(spec),
            min_distance: if dist.exact { dist.d } else { None },
            distance_exact: dist.exact,
            ring_generator: self.ring_generator(spec).to_coeff_string(),
            gray_generator: self.gray_generator(spec).to_coeff_string(),
        };
        report.validate(self.dimension(spec))?;
        Ok(report)
    }

    /// Checks Φ(h(u) Π f_j^{l_j}) = ω^{p^r - k} Π f_j^{l_j} with
    /// h(u) = g(u)^{-1}, g(u) = 1 + Σ y_i a(u)^i.
    pub fn verify_generator_identity(&self, spec: &CodeSpec) -> Result<bool> {
        self.check_spec(spec)?;
        let ring = self.gray.ring();
        let h = ring.inv(&self.gray.g_unit())?;
        let c = self
            .ambient
            .scale_ring(&h, &self.ring_generator_in_ambient(spec));
        Ok(self.gray.phi_big(&c)? == self.gray_generator(spec))
    }
}

/// One row of a search: the code, its Gray image and its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub p: u32,
    pub m: usize,
    pub k: usize,
    pub lambda: String,
    #[serde(rename = "N")]
    pub len: usize,
    pub r: u32,
    pub theta: u32,
    pub factors: Vec<String>,
    pub exponents: Vec<u32>,
    pub length: usize,
    pub dimension: usize,
    pub cardinality_exponent: usize,
    pub min_distance: Option<usize>,
    pub distance_exact: bool,
    pub ring_generator: String,
    pub gray_generator: String,
}

impl CodeReport {
    /// [length, dimension, d] when the distance is known.
    pub fn params(&self) -> (usize, usize, Option<usize>) {
        (self.length, self.dimension, self.min_distance)
    }

    fn validate(&self, expected_dim: usize) -> Result<()> {
        if self.dimension != expected_dim || self.cardinality_exponent != self.m * expected_dim {
            return Err(Error::BadSpec(format!(
                "report for {:?} has dimension {} but the divisor degree gives {}",
                self.exponents, self.dimension, expected_dim
            )));
        }
        Ok(())
    }
}

/// Rows x^i g(x), i = 0, ..., length - deg g - 1, of the code <g> in
/// F_q[x]/<x^length - unit>. The zero polynomial and x^length - unit itself
/// both give the zero code, an empty matrix.
pub fn generator_matrix(gen: &Poly, length: usize, unit: Elem, f: &Field) -> Result<Matrix> {
    let modulus = Poly::binomial(length, unit, f);
    if gen.is_zero() || *gen == modulus {
        return Ok(Matrix::zero(0, length));
    }
    if !gen.divides(&modulus, f)? {
        return Err(Error::NotADivisor { length });
    }
    let deg = gen.degree().unwrap();
    let dim = length - deg;
    let rows = (0..dim).map(|i| gen.shift(i).to_vec(length)).collect();
    Ok(Matrix::from_rows(rows))
}

/// Outcome of a distance search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Distance {
    /// Smallest nonzero weight seen; `None` only for the zero code.
    pub d: Option<usize>,
    /// True when `d` is proven minimal.
    pub exact: bool,
    /// Codewords evaluated.
    pub evaluated: u64,
}

fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

/// Minimum Hamming weight of the row space of `gm`.
///
/// The matrix is brought to reduced echelon form, so each codeword agrees
/// with its message on the pivot columns and a message of weight w yields a
/// codeword of weight at least w. Messages are enumerated by increasing
/// weight (first nonzero coefficient fixed to 1); once every message of
/// weight <= w has been seen and the best weight is at most w + 1, the
/// result is exact. At most `budget` codewords are evaluated, which always
/// suffices when q^dim <= budget.
pub fn min_distance(gm: &Matrix, f: &Field, budget: u64) -> Distance {
    let mut g = gm.clone();
    let dim = g.rref(f).len();
    if dim == 0 {
        return Distance {
            d: None,
            exact: true,
            evaluated: 0,
        };
    }
    let q = f.order();
    // scaled[i][c - 1] = c · row_i
    let scaled: Vec<Vec<Vec<Elem>>> = (0..dim)
        .map(|i| {
            (1..q)
                .map(|c| g.row(i).iter().map(|&a| f.mul(Elem(c), a)).collect())
                .collect()
        })
        .collect();
    let best = AtomicUsize::new(usize::MAX);
    let evaluated = AtomicU64::new(0);
    let over_budget = AtomicBool::new(false);

    for w in 1..=dim {
        if best.load(Ordering::Relaxed) <= w {
            break;
        }
        (0..=dim - w).into_par_iter().for_each(|first| {
            let acc = &scaled[first][0];
            let mut search = Search {
                scaled: &scaled,
                f,
                best: &best,
                evaluated: &evaluated,
                over_budget: &over_budget,
                budget,
                level: w,
                local_count: 0,
            };
            search.descend(first + 1, w - 1, acc);
            search.flush();
        });
        if over_budget.load(Ordering::Relaxed) {
            let b = best.load(Ordering::Relaxed);
            return Distance {
                d: (b != usize::MAX).then_some(b),
                exact: false,
                evaluated: evaluated.load(Ordering::Relaxed),
            };
        }
    }
    Distance {
        d: Some(best.load(Ordering::Relaxed)),
        exact: true,
        evaluated: evaluated.load(Ordering::Relaxed),
    }
}

struct Search<'a> {
    scaled: &'a [Vec<Vec<Elem>>],
    f: &'a Field,
    best: &'a AtomicUsize,
    evaluated: &'a AtomicU64,
    over_budget: &'a AtomicBool,
    budget: u64,
    level: usize,
    local_count: u64,
}

impl Search<'_> {
    const FLUSH_EVERY: u64 = 4096;

    /// Returns false when the search should stop.
    fn descend(&mut self, start: usize, remaining: usize, acc: &[Elem]) -> bool {
        if remaining == 0 {
            let wt = weight(acc);
            self.best.fetch_min(wt, Ordering::Relaxed);
            self.local_count += 1;
            if self.local_count == Self::FLUSH_EVERY {
                self.flush();
            }
            return !self.over_budget.load(Ordering::Relaxed)
                && self.best.load(Ordering::Relaxed) > self.level;
        }
        let dim = self.scaled.len();
        for idx in start..=dim - remaining {
            for scaled_row in &self.scaled[idx] {
                let mut next = acc.to_vec();
                for (a, &b) in next.iter_mut().zip(scaled_row) {
                    *a = self.f.add(*a, b);
                }
                if !self.descend(idx + 1, remaining - 1, &next) {
                    return false;
                }
            }
        }
        true
    }

    fn flush(&mut self) {
        let total = self
            .evaluated
            .fetch_add(self.local_count, Ordering::Relaxed)
            + self.local_count;
        self.local_count = 0;
        if total >= self.budget {
            self.over_budget.store(true, Ordering::Relaxed);
        }
    }
}

/// Full weight distribution of the row space of `gm`, as weight -> count
/// (including the zero codeword). Requires q^dim <= budget.
pub fn weight_distribution(gm: &Matrix, f: &Field, budget: u64) -> Result<BTreeMap<usize, u128>> {
    let mut g = gm.clone();
    let dim = g.rref(f).len();
    let len = g.cols();
    let q = f.order() as u128;
    let total = q.checked_pow(dim as u32).unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget,
        });
    }
    let rows: Vec<Vec<Elem>> = (0..dim).map(|i| g.row(i).to_vec()).collect();

    fn walk(rows: &[Vec<Elem>], f: &Field, idx: usize, acc: &[Elem], counts: &mut [u128]) {
        if idx == rows.len() {
            counts[weight(acc)] += 1;
            return;
        }
        let mut cur = acc.to_vec();
        for _ in 0..f.order() {
            walk(rows, f, idx + 1, &cur, counts);
            for (a, &b) in cur.iter_mut().zip(&rows[idx]) {
                *a = f.add(*a, b);
            }
        }
    }

    let counts = if dim == 0 {
        let mut c = vec![0u128; len + 1];
        c[0] = 1;
        c
    } else {
        // Split on the coefficient of the first row.
        (0..f.order())
            .into_par_iter()
            .map(|c| {
                let start: Vec<Elem> = rows[0].iter().map(|&a| f.mul(Elem(c), a)).collect();
                let mut counts = vec![0u128; len + 1];
                walk(&rows, f, 1, &start, &mut counts);
                counts
            })
            .reduce(
                || vec![0u128; len + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    };
    Ok(counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect())
}

/// Every F_q-linear combination of `generators`, by repeated closure
/// S <- {s + c v : s in S, c in F_q}. Fails once the set would exceed `limit`.
pub fn span_closure(
    generators: &[Vec<Elem>],
    f: &Field,
    limit: usize,
) -> Result<HashSet<Vec<Elem>>> {
    let Some(first) = generators.first() else {
        return Ok(HashSet::new());
    };
    let mut set: HashSet<Vec<Elem>> = HashSet::new();
    set.insert(vec![Elem::ZERO; first.len()]);
    for v in generators {
        if set.contains(v) {
            continue;
        }
        let current: Vec<Vec<Elem>> = set.iter().cloned().collect();
        for s in &current {
            for c in 1..f.order() {
                let w: Vec<Elem> = s
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| f.mul_add(Elem(c), b, a))
                    .collect();
                set.insert(w);
            }
            if set.len() > limit {
                return Err(Error::BudgetExceeded {
                    needed: set.len() as u128,
                    budget: limit as u64,
                });
            }
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::ChainRing;

    fn family(p: u32, k: usize, lambda: &str, len: usize) -> CodeFamily {
        let ring = ChainRing::parse(Field::prime(p).unwrap(), k, lambda).unwrap();
        CodeFamily::new(GrayContext::new(ring).unwrap(), len).unwrap()
    }

    #[test]
    fn length_decomposition() {
        assert_eq!(decompose_length(4, 3), Ok((0, 4)));
        assert_eq!(decompose_length(6, 3), Ok((1, 2)));
        assert_eq!(decompose_length(5, 5), Ok((1, 1)));
        assert_eq!(decompose_length(0, 5), Err(Error::BadLength));
    }

    #[test]
    fn families() {
        let fam = family(3, 3, "2,1,2", 4);
        assert_eq!(fam.t(), 2);
        let f = fam.field().clone();
        assert_eq!(fam.factors()[0], Poly::parse("x^2+x+2", &f).unwrap());
        assert_eq!(fam.factors()[1], Poly::parse("x^2+2x+2", &f).unwrap());
        let fam = family(5, 4, "2,1,2,4", 5);
        assert_eq!(fam.factors(), &[Poly::parse("x+3", fam.field()).unwrap()]);
        let fam = family(5, 4, "2,1,2,4", 3);
        let f = fam.field().clone();
        assert_eq!(
            fam.factors(),
            &[
                Poly::parse("x+2", &f).unwrap(),
                Poly::parse("x^2+3x+4", &f).unwrap()
            ]
        );
    }

    #[test]
    fn spec_streams() {
        let fam = family(3, 3, "2,1,2", 4);
        let specs: Vec<_> = fam.specs().collect();
        assert_eq!(specs.len(), 16);
        assert_eq!(specs[0], CodeSpec(vec![0, 0]));
        assert_eq!(specs[1], CodeSpec(vec![0, 1]));
        assert_eq!(specs[15], CodeSpec(vec![3, 3]));
        assert_eq!(family(5, 4, "2,1,2,4", 5).specs().count(), 21);
        // k = 2, e = 0, t = 1: x - 1 over F_2 with N = 1.
        assert_eq!(family(2, 2, "1,1", 1).specs().count(), 3);
    }

    #[test]
    fn generator_matrices() {
        let f = Field::prime(3).unwrap();
        let one = generator_matrix(&Poly::one(), 5, Elem(2), &f).unwrap();
        assert_eq!(one, Matrix::identity(5));
        let zero = generator_matrix(&Poly::binomial(5, Elem(2), &f), 5, Elem(2), &f).unwrap();
        assert!(zero.is_empty());
        let g = Poly::parse("x^4+1", &f).unwrap();
        let gm = generator_matrix(&g, 12, Elem(2), &f).unwrap();
        assert_eq!((gm.rows(), gm.cols()), (8, 12));
        assert_eq!(gm.row(0), g.to_vec(12).as_slice());
        assert_eq!(gm.rank(&f), 8);
        assert!(matches!(
            generator_matrix(&Poly::parse("x+2", &f).unwrap(), 4, Elem(2), &f),
            Err(Error::NotADivisor { .. })
        ));
    }

    #[test]
    fn distance_of_one_row() {
        let f = Field::prime(3).unwrap();
        let gm = Matrix::from_ints(&[&[1, 0, 2, 2, 0, 1]], &f);
        let d = min_distance(&gm, &f, 100);
        assert_eq!((d.d, d.exact), (Some(4), true));
    }

    #[test]
    fn distance_budget_cutoff() {
        let fam = family(3, 3, "2,1,2", 4);
        let gm = fam.gray_generator_matrix(&CodeSpec(vec![1, 3])).unwrap();
        let d = min_distance(&gm, fam.field(), 3);
        assert!(!d.exact);
        let report_small = fam.report(&CodeSpec(vec![1, 3]), 3).unwrap();
        assert_eq!(report_small.min_distance, None);
        assert!(!report_small.distance_exact);
    }

    #[test]
    fn reference_reports() {
        let fam = family(3, 3, "2,1,2", 4);
        assert_eq!(
            fam.report(&CodeSpec(vec![0, 1]), DEFAULT_BUDGET)
                .unwrap()
                .params(),
            (12, 10, Some(2))
        );
        assert_eq!(
            fam.report(&CodeSpec(vec![2, 3]), DEFAULT_BUDGET)
                .unwrap()
                .params(),
            (12, 2, Some(9))
        );
        assert_eq!(
            fam.report(&CodeSpec(vec![1, 3]), DEFAULT_BUDGET)
                .unwrap()
                .params(),
            (12, 4, Some(6))
        );
        let fam = family(5, 4, "2,1,2,4", 3);
        assert_eq!(
            fam.report(&CodeSpec(vec![2, 0]), DEFAULT_BUDGET)
                .unwrap()
                .params(),
            (15, 10, Some(4))
        );
        let fam = family(5, 4, "2,1,2,4", 5);
        assert_eq!(
            fam.report(&CodeSpec(vec![18]), DEFAULT_BUDGET)
                .unwrap()
                .params(),
            (25, 2, Some(20))
        );
        assert_eq!(
            fam.report(&CodeSpec(vec![19]), DEFAULT_BUDGET)
                .unwrap()
                .params(),
            (25, 1, Some(25))
        );
    }

    #[test]
    fn zero_code_report() {
        let fam = family(3, 3, "2,1,2", 4);
        let r = fam.report(&CodeSpec(vec![3, 3]), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.dimension, 0);
        assert_eq!(r.gray_generator, "0");
        assert_eq!(r.min_distance, None);
        assert!(fam.report(&CodeSpec(vec![4, 0]), 10).is_err());
        assert!(fam.report(&CodeSpec(vec![1]), 10).is_err());
    }

    #[test]
    fn small_distributions() {
        let f = Field::prime(3).unwrap();
        let empty = Matrix::zero(0, 4);
        let wd = weight_distribution(&empty, &f, 10).unwrap();
        assert_eq!(wd, BTreeMap::from([(0, 1)]));
        let fam = family(3, 3, "2,1,2", 4);
        let gm = fam.gray_generator_matrix(&CodeSpec(vec![2, 3])).unwrap();
        let wd = weight_distribution(&gm, &f, 100).unwrap();
        assert_eq!(wd.values().sum::<u128>(), 9);
        assert_eq!(wd[&0], 1);
        assert!(wd.keys().filter(|&&w| w > 0).all(|&w| w >= 9));
        assert!(weight_distribution(&gm, &f, 8).is_err());
    }

    #[test]
    fn generator_identity() {
        let fam = family(3, 3, "2,1,2", 4);
        assert!(fam
            .verify_generator_identity(&CodeSpec(vec![0, 0]))
            .unwrap());
        assert!(fam
            .verify_generator_identity(&CodeSpec(vec![1, 0]))
            .unwrap());
        let fam = family(5, 4, "2,1,2,4", 3);
        assert!(fam
            .verify_generator_identity(&CodeSpec(vec![2, 4]))
            .unwrap());
    }

    #[test]
    fn span_closure_counts() {
        let f = Field::prime(3).unwrap();
        let gens = vec![
            vec![Elem(1), Elem(0), Elem(1)],
            vec![Elem(2), Elem(0), Elem(2)],
            vec![Elem(0), Elem(1), Elem(1)],
        ];
        assert_eq!(span_closure(&gens, &f, 100).unwrap().len(), 9);
        assert!(span_closure(&gens, &f, 5).is_err());
    }
}
