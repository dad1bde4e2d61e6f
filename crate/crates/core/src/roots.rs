//! Real-rootedness certificates for refined descent polynomials.
//!
//! Root counts come from Sturm chains built with sign-preserving
//! pseudo-remainders over the integers, so the verdicts are exact. The
//! multivariate stability probe is different in kind: it searches for a
//! zero in the open upper half-plane and can only refute stability.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
pub use crate::poly::UniPoly;
use crate::stats::profile;
use crate::words::{enumerate, Composition};

/// `S_{m,i}(x) = Σ x^des(π)` over `π ∈ Q_m` with `plat(π) = i`.
pub fn s_mi(m: &Composition, i: usize) -> UniPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for w in enumerate(m) {
        let s = profile(&w);
        if s.plat != i {
            continue;
        }
        if coeffs.len() <= s.des {
            coeffs.resize(s.des + 1, BigInt::zero());
        }
        coeffs[s.des] += 1;
    }
    UniPoly::new(coeffs)
}

/// A positive multiple of `a mod b`.
fn signed_prem(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let db = b.degree().expect("nonzero divisor");
    let lc = b.leading().unwrap().clone();
    let (lc_abs, lc_sign) = (lc.abs(), lc.signum());
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let shift = dr - db;
        let lead = r.leading().unwrap() * &lc_sign;
        let mut sub = vec![BigInt::zero(); shift];
        sub.extend(b.coeffs().iter().map(|c| c * &lead));
        r = &r.scale(&lc_abs) - &UniPoly::new(sub);
    }
    r
}

/// Sturm chain `p, p', -rem, ...`, each entry divided by its positive content.
pub fn sturm_chain(p: &UniPoly) -> Result<Vec<UniPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![p.primitive()];
    let d = p.derivative();
    if d.is_zero() {
        return Ok(chain);
    }
    chain.push(d.primitive());
    loop {
        let n = chain.len();
        let r = signed_prem(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            return Ok(chain);
        }
        chain.push(r.scale(&BigInt::from(-1)).primitive());
    }
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(c: &BigInt) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots.
pub fn sturm_real_roots(p: &UniPoly) -> Result<usize> {
    let chain = sturm_chain(p)?;
    let at_pos_inf = sign_variations(chain.iter().map(|q| sign(q.leading().unwrap())));
    let at_neg_inf = sign_variations(chain.iter().map(|q| {
        let s = sign(q.leading().unwrap());
        if q.degree().unwrap() % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    Ok(at_neg_inf - at_pos_inf)
}

/// Primitive gcd with positive leading coefficient.
pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (mut a, mut b) = (a.primitive(), b.primitive());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = signed_prem(&a, &b).primitive();
        a = b;
        b = r;
    }
    if a.leading().is_some_and(|c| c.is_negative()) {
        a = a.scale(&BigInt::from(-1));
    }
    a
}

/// `a / b` when the division is exact over the integers.
pub fn exact_div(a: &UniPoly, b: &UniPoly) -> Option<UniPoly> {
    let db = b.degree()?;
    let lc = b.leading().unwrap();
    let mut r = a.clone();
    let Some(da) = a.degree() else {
        return Some(UniPoly::zero());
    };
    if da < db {
        return None;
    }
    let mut q = vec![BigInt::zero(); da - db + 1];
    while let Some(dr) = r.degree() {
        if dr < db {
            return None;
        }
        let (quot, rem) = r.leading().unwrap().div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        let mut sub = vec![BigInt::zero(); shift];
        sub.extend(b.coeffs().iter().map(|c| c * &quot));
        q[shift] = quot;
        r = &r - &UniPoly::new(sub);
    }
    Some(UniPoly::new(q))
}

/// `p / gcd(p, p')`, primitive.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = p.primitive();
    let g = gcd(&p, &p.derivative());
    Ok(exact_div(&p, &g).expect("gcd divides p").primitive())
}

/// All roots real: the squarefree part has as many distinct real roots as its degree.
pub fn is_real_rooted(p: &UniPoly) -> Result<bool> {
    let q = squarefree_part(p)?;
    Ok(sturm_real_roots(&q)? == q.degree().unwrap())
}

/// Coefficients between the lowest and highest nonzero terms read the same both ways.
pub fn is_palindromic(p: &UniPoly) -> Result<bool> {
    let lo = p.low_degree().ok_or(Error::ZeroPolynomial)?;
    let window = &p.coeffs()[lo..];
    Ok(window.iter().eq(window.iter().rev()))
}

#[derive(Debug, Clone, Serialize)]
pub struct RealRootReport {
    pub composition: Composition,
    pub plateaux: usize,
    pub polynomial: String,
    pub degree: Option<usize>,
    pub squarefree_degree: Option<usize>,
    pub distinct_real_roots: Option<usize>,
    pub sturm_chain_len: usize,
    pub squarefree_chain_len: usize,
    pub real_rooted: bool,
    pub palindromic: bool,
}

pub fn real_root_report(m: &Composition, i: usize) -> RealRootReport {
    let p = s_mi(m, i);
    let mut report = RealRootReport {
        composition: m.clone(),
        plateaux: i,
        polynomial: p.to_string(),
        degree: p.degree(),
        squarefree_degree: None,
        distinct_real_roots: None,
        sturm_chain_len: 0,
        squarefree_chain_len: 0,
        real_rooted: false,
        palindromic: false,
    };
    if p.is_zero() {
        return report;
    }
    let q = squarefree_part(&p).expect("nonzero");
    report.squarefree_degree = q.degree();
    report.distinct_real_roots = sturm_real_roots(&q).ok();
    report.sturm_chain_len = sturm_chain(&p).map(|c| c.len()).unwrap_or(0);
    report.squarefree_chain_len = sturm_chain(&q).map(|c| c.len()).unwrap_or(0);
    report.real_rooted = is_real_rooted(&p).unwrap_or(false);
    report.palindromic = is_palindromic(&p).unwrap_or(false);
    report
}

/// Complex disc `center ± radius`, used to carry rounding error.
#[derive(Debug, Clone, Copy)]
struct Ball {
    c: Complex64,
    r: f64,
}

const ROUND: f64 = 4.0 * f64::EPSILON;

impl Ball {
    fn exact(c: Complex64) -> Ball {
        Ball { c, r: 0.0 }
    }

    fn from_int(k: &BigInt) -> Ball {
        let v = k.to_f64().unwrap_or(f64::INFINITY);
        Ball {
            c: Complex64::new(v, 0.0),
            r: v.abs() * f64::EPSILON,
        }
    }

    fn guard(c: Complex64, r: f64) -> Ball {
        Ball {
            c,
            r: (r + ROUND * c.norm()) * (1.0 + ROUND),
        }
    }

    fn add(self, o: Ball) -> Ball {
        Ball::guard(self.c + o.c, self.r + o.r)
    }

    fn mul(self, o: Ball) -> Ball {
        let r = self.c.norm() * o.r + o.c.norm() * self.r + self.r * o.r;
        Ball::guard(self.c * o.c, r)
    }

    fn upper(self) -> f64 {
        (self.c.norm() + self.r) * (1.0 + ROUND)
    }

    fn lower(self) -> f64 {
        (self.c.norm() - self.r) * (1.0 - ROUND)
    }

    fn contains_zero(self) -> bool {
        self.lower() <= 0.0
    }
}

fn eval_balls(coeffs: &[Ball], x: Ball) -> (Ball, Ball) {
    let zero = Ball::exact(Complex64::new(0.0, 0.0));
    let mut value = zero;
    let mut deriv = zero;
    for &c in coeffs.iter().rev() {
        deriv = deriv.mul(x).add(value);
        value = value.mul(x).add(c);
    }
    (value, deriv)
}

/// Roots of a complex polynomial by Durand–Kerner iteration followed by Newton polishing.
fn approximate_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let bound = 1.0 + monic[..d].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32) * bound).collect();
    let eval = |x: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |a, c| a * x + c)
    };
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let denom = (0..d)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |a, j| a * (roots[i] - roots[j]));
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * bound {
            break;
        }
    }
    let deriv = |x: Complex64| {
        monic
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |a, (k, c)| a * x + c * k as f64)
    };
    for r in &mut roots {
        for _ in 0..4 {
            let dv = deriv(*r);
            if dv.norm() == 0.0 {
                break;
            }
            *r -= eval(*r) / dv;
        }
    }
    roots
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SampleBox {
    pub re: (f64, f64),
    /// Imaginary parts are drawn from `(0, im_max]`.
    pub im_max: f64,
}

impl Default for SampleBox {
    fn default() -> Self {
        SampleBox {
            re: (-5.0, 5.0),
            im_max: 5.0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    /// `(name, re, im)` for every variable.
    pub point: Vec<(String, f64, f64)>,
    /// The variable solved for; an exact zero lies within `radius` of its coordinate.
    pub solved_for: String,
    pub radius: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub trials: usize,
    pub seed: u64,
    pub sample_box: SampleBox,
    pub inconclusive_trials: usize,
    pub counterexample: Option<Counterexample>,
    pub disclaimer: Option<String>,
}

const NO_CERTIFICATE: &str =
    "no zero found in the upper half-plane; this is not a certificate of stability";

enum Trial {
    Clean,
    Inconclusive,
    Zero(Counterexample),
}

fn run_trial(p: &MultiPoly, used: &[usize], trial: usize, seed: u64, sbox: SampleBox) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let nv = p.vars().len();
    let point: Vec<Complex64> = (0..nv)
        .map(|_| {
            let re = rng.gen_range(sbox.re.0..=sbox.re.1);
            let im = sbox.im_max * (1.0 - rng.gen::<f64>());
            Complex64::new(re, im)
        })
        .collect();
    let j = used[rng.gen_range(0..used.len())];

    // Coefficients of p restricted to the complex line through `point` along variable j.
    let top = p.terms().map(|(e, _)| e[j] as usize).max().unwrap_or(0);
    let zero = Ball::exact(Complex64::new(0.0, 0.0));
    let mut coeffs = vec![zero; top + 1];
    for (e, c) in p.terms() {
        let mut term = Ball::from_int(c);
        for (v, &k) in e.iter().enumerate() {
            if v == j {
                continue;
            }
            for _ in 0..k {
                term = term.mul(Ball::exact(point[v]));
            }
        }
        let slot = e[j] as usize;
        coeffs[slot] = coeffs[slot].add(term);
    }
    if coeffs[top].contains_zero() {
        return Trial::Inconclusive;
    }
    if top == 0 {
        return Trial::Clean;
    }
    let centers: Vec<Complex64> = coeffs.iter().map(|b| b.c).collect();
    for root in approximate_roots(&centers) {
        if !root.re.is_finite() || !root.im.is_finite() || root.im <= 0.0 {
            continue;
        }
        let (value, deriv) = eval_balls(&coeffs, Ball::exact(root));
        let dl = deriv.lower();
        if dl <= 0.0 {
            continue;
        }
        // Some exact root lies within deg · |q(r)| / |q'(r)| of r.
        let radius = top as f64 * value.upper() / dl * (1.0 + 1e-12);
        if root.im - radius > 0.0 {
            let mut coords = point.clone();
            coords[j] = root;
            return Trial::Zero(Counterexample {
                trial,
                point: p
                    .vars()
                    .iter()
                    .zip(&coords)
                    .map(|(n, c)| (n.clone(), c.re, c.im))
                    .collect(),
                solved_for: p.vars()[j].clone(),
                radius,
            });
        }
    }
    Trial::Clean
}

/// Searches for a zero of `p` with every coordinate in the open upper half-plane.
///
/// Each trial samples a point in `sample_box`, restricts `p` to one randomly
/// chosen coordinate line, approximates the roots of the resulting univariate
/// polynomial and keeps a root only if a rigorous enclosure puts an exact root
/// strictly above the real axis. Trials are seeded independently, so the
/// result does not depend on the thread count.
pub fn stability_probe_in(
    p: &MultiPoly,
    trials: usize,
    seed: u64,
    sample_box: SampleBox,
) -> ProbeReport {
    let used: Vec<usize> = p
        .vars()
        .iter()
        .enumerate()
        .filter(|(i, _)| p.terms().any(|(e, _)| e[*i] > 0))
        .map(|(i, _)| i)
        .collect();
    let outcomes: Vec<Trial> = if used.is_empty() {
        Vec::new()
    } else {
        (0..trials)
            .into_par_iter()
            .map(|t| run_trial(p, &used, t, seed, sample_box))
            .collect()
    };
    let inconclusive_trials = outcomes
        .iter()
        .filter(|o| matches!(o, Trial::Inconclusive))
        .count();
    let counterexample = outcomes.into_iter().find_map(|o| match o {
        Trial::Zero(c) => Some(c),
        _ => None,
    });
    ProbeReport {
        trials,
        seed,
        sample_box,
        inconclusive_trials,
        disclaimer: counterexample.is_none().then(|| NO_CERTIFICATE.to_string()),
        counterexample,
    }
}

pub fn stability_probe(p: &MultiPoly, trials: usize, seed: u64) -> ProbeReport {
    stability_probe_in(p, trials, seed, SampleBox::default())
}
