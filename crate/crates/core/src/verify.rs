//! Named self-checks over one ring and a set of code lengths. Failures are
//! reported as data, with a counterexample where one exists.

use std::collections::HashSet;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chainring::{Ambient, RingPoly};
use crate::codes::{span_closure, CodeFamily};
use crate::error::Result;
use crate::field::Elem;
use crate::graymap::GrayContext;
use crate::matrix::Matrix;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Counterexample or summary.
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>, ok: impl Into<String>) -> Check {
        match failure {
            Some(detail) => Check {
                name: name.into(),
                passed: false,
                detail,
            },
            None => Check {
                name: name.into(),
                passed: true,
                detail: ok.into(),
            },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// Sizes and thresholds for a verification run.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Random samples for the homomorphism and image checks.
    pub samples: usize,
    /// Random multiples of ω^{p^r-k} to pull back.
    pub preimages: usize,
    /// Codes with at most this many codewords get the generator identity
    /// and image-equality checks.
    pub small_code: u128,
    /// Codes with at most this many codewords get the cardinality check.
    pub cardinality_code: u128,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            samples: 1000,
            preimages: 100,
            small_code: 729,
            cardinality_code: 6561,
            seed: 0x5eed,
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Checks that depend only on the ring.
pub fn ring_checks(gray: &GrayContext, limits: &Limits) -> Vec<Check> {
    let mut out = vec![intertwining(gray), unitriangular(gray)];
    out.push(phi_injective(gray));
    out.push(phi_linear(gray, limits));
    out
}

/// Every check for the ring and for each length.
pub fn run(gray: &GrayContext, lens: &[usize], limits: &Limits) -> Result<Vec<Check>> {
    let mut out = ring_checks(gray, limits);
    for &len in lens {
        out.extend(length_checks(gray, len, limits)?);
    }
    Ok(out)
}

/// P a(J) = J P, reporting the first differing entry.
pub fn intertwining(gray: &GrayContext) -> Check {
    let f = gray.field();
    let k = gray.k();
    let lhs = gray.p_matrix().mul(&gray.ring().a_of_j(), f);
    let rhs = Matrix::lower_shift(k).mul(gray.p_matrix(), f);
    let bad = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .find(|&ij| lhs[ij] != rhs[ij])
        .map(|(i, j)| {
            format!(
                "entry ({i},{j}): P a(J) has {}, J P has {}; P =\n{}",
                lhs[(i, j)],
                rhs[(i, j)],
                gray.p_matrix()
            )
        });
    Check::new("P a(J) = J P", bad, format!("{k}x{k} entries agree"))
}

fn unitriangular(gray: &GrayContext) -> Check {
    let f = gray.field();
    let k = gray.k();
    let p = gray.p_matrix();
    let shape = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .find(|&(i, j)| (i == j && p[(i, j)] != Elem::ONE) || (j > i && !p[(i, j)].is_zero()))
        .map(|(i, j)| format!("entry ({i},{j}) is {}", p[(i, j)]));
    let bad = shape.or_else(|| {
        (p.mul(gray.p_inverse(), f) != Matrix::identity(k)).then(|| "P P^-1 is not I".to_string())
    });
    Check::new("P unit lower triangular, P P^-1 = I", bad, "ok")
}

fn phi_injective(gray: &GrayContext) -> Check {
    let ring = gray.ring();
    if ring.order() > 625 {
        return Check::new(
            "phi injective",
            None,
            format!("skipped, |R| = {}", ring.order()),
        );
    }
    let mut seen = std::collections::HashMap::new();
    let mut bad = None;
    for idx in 0..ring.order() {
        let a = ring.elem_from_index(idx);
        let v = gray.phi(&a);
        if let Some(prev) = seen.insert(v.clone(), a.clone()) {
            bad = Some(format!("phi({prev}) = phi({a}) = ({})", v.to_text()));
            break;
        }
    }
    Check::new(
        "phi injective",
        bad,
        format!("{} distinct images", ring.order()),
    )
}

fn phi_linear(gray: &GrayContext, limits: &Limits) -> Check {
    let ring = gray.ring();
    let f = gray.field();
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    let mut bad = None;
    for _ in 0..limits.samples {
        let a = ring.random_elem(&mut rng);
        let b = ring.random_elem(&mut rng);
        let c = ring.random_elem(&mut rng).constant();
        let lhs = gray.phi(&ring.add(&ring.scale(c, &a), &b));
        let (pa, pb) = (gray.phi(&a), gray.phi(&b));
        let rhs: Vec<Elem> =
            pa.0.iter()
                .zip(&pb.0)
                .map(|(&x, &y)| f.mul_add(c, x, y))
                .collect();
        if lhs.0 != rhs {
            bad = Some(format!("c = {c}, a = {a}, b = {b}"));
            break;
        }
    }
    Check::new("phi F_q-linear", bad, format!("{} samples", limits.samples))
}

/// Checks for one code length N.
pub fn length_checks(gray: &GrayContext, len: usize, limits: &Limits) -> Result<Vec<Check>> {
    let amb = Ambient::new(gray.ring().clone(), len)?;
    let tag = |s: &str| format!("{s} [N={len}]");
    let mut out = vec![
        Check::new(
            tag("omega powers = (1,u,...)P^-1 Y"),
            omega_identity(gray, &amb),
            "ok",
        ),
        Check::new(
            tag("omega^(p^r) = x^(p^r N) - vartheta"),
            omega_nilpotent(gray, len),
            "ok",
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed ^ len as u64);
    let n = limits.samples;
    out.push(Check::new(
        tag("Phi(x c) = x Phi(c)"),
        shift_check(gray, &amb, n, &mut rng)?,
        format!("{n} samples"),
    ));
    out.push(Check::new(
        tag("Phi(b c1 + c2) = b Phi(c1) + Phi(c2)"),
        linear_check(gray, &amb, n, &mut rng)?,
        format!("{n} samples"),
    ));
    out.push(Check::new(
        tag("wt_L(c) = wt_H(Phi(c))"),
        distance_check(gray, &amb, n, &mut rng)?,
        format!("{n} samples"),
    ));
    out.push(Check::new(
        tag("omega^(p^r-k) divides Phi(c)"),
        image_check(gray, &amb, n, &mut rng)?,
        format!("{n} samples"),
    ));
    let m = limits.preimages;
    out.push(Check::new(
        tag("Phi(preimage(g)) = g"),
        preimage_check(gray, len, m, &mut rng)?,
        format!("{m} samples"),
    ));

    let fam = CodeFamily::new(gray.clone(), len)?;
    out.extend(code_checks(&fam, limits)?);
    Ok(out)
}

/// (1, ω, ..., ω^{k-1}) = (1, u, ..., u^{k-1}) P^{-1} Y in R_k[x]/<x^N - λ>.
fn omega_identity(gray: &GrayContext, amb: &Ambient) -> Option<String> {
    let ring = gray.ring();
    let f = gray.field();
    let k = gray.k();
    let omega = amb
        .sub(
            &amb.x_pow(amb.len()),
            &amb.constant(ring.from_field(ring.a0())),
        )
        .ok()?;
    let py = gray.p_inverse().mul(gray.y_matrix(), f);
    let mut lhs = amb.one();
    for j in 0..k {
        let mut rhs = ring.zero();
        for i in 0..k {
            rhs = ring.add(&rhs, &ring.scale(py[(i, j)], &ring.u_pow(i)));
        }
        let rhs = amb.constant(rhs);
        if lhs != rhs {
            return Some(format!(
                "entry {j}: omega^{j} = {}, (1,u,...)P^-1 Y gives {}",
                show(&lhs),
                show(&rhs)
            ));
        }
        lhs = amb.mul(&lhs, &omega).ok()?;
    }
    None
}

fn omega_nilpotent(gray: &GrayContext, len: usize) -> Option<String> {
    let f = gray.field();
    let pr = gray.block_len();
    let lhs = Poly::binomial(len, gray.ring().a0(), f).pow(pr as u64, f);
    let rhs = Poly::binomial(pr * len, gray.vartheta(), f);
    (lhs != rhs).then(|| format!("(x^N - a0)^(p^r) = {}", lhs.to_coeff_string()))
}

fn show(c: &RingPoly) -> String {
    let parts: Vec<String> = c.coeffs().iter().map(|a| format!("({a})")).collect();
    parts.join(" ")
}

fn shift_check(
    gray: &GrayContext,
    amb: &Ambient,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<String>> {
    let f = gray.field();
    let total = gray.block_len() * amb.len();
    for _ in 0..n {
        let c = amb.random(rng);
        let lhs = gray.phi_big(&amb.mul_x(&c))?;
        let rhs = Poly::x().mul_constacyclic(&gray.phi_big(&c)?, total, gray.vartheta(), f);
        if lhs != rhs {
            return Ok(Some(format!("c = {}", show(&c))));
        }
    }
    Ok(None)
}

fn linear_check(
    gray: &GrayContext,
    amb: &Ambient,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<String>> {
    let f = gray.field();
    for _ in 0..n {
        let c1 = amb.random(rng);
        let c2 = amb.random(rng);
        let b = gray.ring().random_elem(rng).constant();
        let lhs = gray.phi_big(&amb.add(&amb.scale(b, &c1), &c2)?)?;
        let rhs = gray.phi_big(&c1)?.scale(b, f).add(&gray.phi_big(&c2)?, f);
        if lhs != rhs {
            return Ok(Some(format!(
                "b = {b}, c1 = {}, c2 = {}",
                show(&c1),
                show(&c2)
            )));
        }
    }
    Ok(None)
}

fn distance_check(
    gray: &GrayContext,
    amb: &Ambient,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<String>> {
    for _ in 0..n {
        let c = amb.random(rng);
        let lee = gray.lee_weight_poly(&c);
        let ham = gray.phi_big(&c)?.weight();
        if lee != ham {
            return Ok(Some(format!("c = {}: Lee {lee}, Hamming {ham}", show(&c))));
        }
    }
    Ok(None)
}

fn image_check(
    gray: &GrayContext,
    amb: &Ambient,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<String>> {
    let f = gray.field();
    let lead =
        Poly::binomial(amb.len(), gray.ring().a0(), f).pow((gray.block_len() - gray.k()) as u64, f);
    for _ in 0..n {
        let c = amb.random(rng);
        let img = gray.phi_big(&c)?;
        if !lead.divides(&img, f)? {
            return Ok(Some(format!(
                "Phi(c) = {} for c = {}",
                img.to_coeff_string(),
                show(&c)
            )));
        }
    }
    Ok(None)
}

fn preimage_check(
    gray: &GrayContext,
    len: usize,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<String>> {
    use rand::Rng;
    let f = gray.field();
    let pr = gray.block_len();
    let total = pr * len;
    let lead = Poly::binomial(len, gray.ring().a0(), f).pow((pr - gray.k()) as u64, f);
    let free = total - lead.degree().unwrap_or(0);
    for _ in 0..n {
        let m = Poly::new(
            (0..free)
                .map(|_| Elem(rng.gen_range(0..f.order())))
                .collect(),
        );
        let g = lead
            .mul(&m, f)
            .reduce_constacyclic(total, gray.vartheta(), f);
        let back = match gray.preimage(&g, len) {
            Ok(c) => gray.phi_big(&c)?,
            Err(e) => return Ok(Some(format!("g = {}: {e}", g.to_coeff_string()))),
        };
        if back != g {
            return Ok(Some(format!(
                "g = {}, Phi(preimage) = {}",
                g.to_coeff_string(),
                back.to_coeff_string()
            )));
        }
    }
    Ok(None)
}

/// Count, generator identity, cardinality and image equality for one length.
pub fn code_checks(fam: &CodeFamily, limits: &Limits) -> Result<Vec<Check>> {
    let len = fam.len();
    let tag = |s: &str| format!("{s} [N={len}]");
    let f = fam.field();
    let q = f.order() as u128;
    let size = |dim: usize| q.checked_pow(dim as u32).unwrap_or(u128::MAX);
    let mut out = Vec::new();

    let count = fam.specs().count() as u128;
    let expected = fam.spec_count();
    out.push(Check::new(
        tag("code count = (p^e k + 1)^t"),
        (count != expected).then(|| format!("{count} specs, expected {expected}")),
        format!("{count} codes"),
    ));

    let mut identity_bad = None;
    let mut card_bad = None;
    let mut image_bad = None;
    let (mut n_identity, mut n_card, mut n_image) = (0, 0, 0);
    for spec in fam.specs() {
        let dim = fam.dimension(&spec);
        let codewords = size(dim);
        if codewords <= limits.small_code && identity_bad.is_none() {
            n_identity += 1;
            if !fam.verify_generator_identity(&spec)? {
                identity_bad = Some(format!("spec {spec}"));
            }
        }
        if codewords > limits.cardinality_code {
            continue;
        }
        let code = span_closure(
            &fam.ring_code_generators(&spec),
            f,
            limits.cardinality_code as usize,
        )?;
        n_card += 1;
        if card_bad.is_none() && code.len() as u128 != codewords {
            card_bad = Some(format!(
                "spec {spec}: {} codewords, formula gives {codewords}",
                code.len()
            ));
        }
        if codewords <= limits.small_code && image_bad.is_none() {
            n_image += 1;
            image_bad = image_equality(fam, &spec, &code)?;
        }
    }
    out.push(Check::new(
        tag("Phi(h(u) prod f^l) = omega^(p^r-k) prod f^l"),
        identity_bad,
        format!("{n_identity} codes"),
    ));
    out.push(Check::new(
        tag("|C| = p^(m(Nk - sum l deg f))"),
        card_bad,
        format!("{n_card} codes"),
    ));
    out.push(Check::new(
        tag("Phi(C) = <gray generator>"),
        image_bad,
        format!("{n_image} codes"),
    ));
    Ok(out)
}

fn image_equality(
    fam: &CodeFamily,
    spec: &crate::codes::CodeSpec,
    code: &HashSet<Vec<Elem>>,
) -> Result<Option<String>> {
    let f = fam.field();
    let amb = fam.ambient();
    let gray = fam.gray();
    let total = fam.gray_len();
    let mut image = HashSet::with_capacity(code.len());
    for v in code {
        image.insert(gray.phi_big(&amb.from_field_vec(v)?)?.to_vec(total));
    }
    let gm = fam.gray_generator_matrix(spec)?;
    let target = span_closure(&gm.to_rows(), f, code.len().max(1) * f.order() as usize)?;
    let target = if gm.is_empty() {
        HashSet::from([vec![Elem::ZERO; total]])
    } else {
        target
    };
    if image == target {
        return Ok(None);
    }
    let extra = image.difference(&target).next();
    let missing = target.difference(&image).next();
    Ok(Some(format!(
        "spec {spec}: |Phi(C)| = {}, |<g>| = {}; in Phi(C) only: {:?}; in <g> only: {:?}",
        image.len(),
        target.len(),
        extra.map(|v| v.iter().map(|e| e.value()).collect::<Vec<_>>()),
        missing.map(|v| v.iter().map(|e| e.value()).collect::<Vec<_>>()),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::ChainRing;
    use crate::field::Field;

    fn small() -> Limits {
        Limits {
            samples: 50,
            preimages: 20,
            small_code: 81,
            cardinality_code: 729,
            seed: 7,
        }
    }

    #[test]
    fn example_ring_passes() {
        let ring = ChainRing::parse(Field::prime(3).unwrap(), 3, "2,1,2").unwrap();
        let gray = GrayContext::new(ring).unwrap();
        let checks = run(&gray, &[2], &small()).unwrap();
        for c in &checks {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn corrupted_p_is_caught() {
        let f = Field::prime(3).unwrap();
        let ring = ChainRing::parse(f.clone(), 3, "2,1,2").unwrap();
        let mut p = crate::graymap::build_p(&ring);
        p = p.add(
            &Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]], &f),
            &f,
        );
        let gray = GrayContext::with_p_matrix(ring, p).unwrap();
        let check = intertwining(&gray);
        assert!(!check.passed);
        assert!(check.detail.starts_with("entry ("), "{}", check.detail);
    }
}
