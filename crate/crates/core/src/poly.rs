//! Exact polynomial arithmetic over arbitrary-precision integers.
//!
//! [`MultiPoly`] is a sparse map from exponent vectors to nonzero coefficients
//! over a named, ordered variable list. Binary operations align operands by
//! variable name, so `x + y` over `[x]` and `[y]` lands on `[x, y]`.
//! [`UniPoly`] is a dense univariate polynomial and [`TruncatedSeries`] a
//! power series modulo `t^{K+1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly::constant(vars, 1)
    }

    /// The single variable `name`, which must occur in `vars`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Self {
        let mut p = MultiPoly::zero(vars);
        let idx = p
            .index_of(name)
            .unwrap_or_else(|| panic!("variable `{name}` not in variable list"));
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn monomial<S: AsRef<str>>(vars: &[S], exps: Exponents, c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero(vars);
        assert_eq!(exps.len(), p.vars.len(), "exponent vector length");
        p.add_term(exps, c.into());
        p
    }

    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Exponents, BigInt)>,
    ) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c · x^e` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Variables that occur with a positive exponent in some term.
    pub fn used_vars(&self) -> Vec<&str> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.as_str())
            .collect()
    }

    /// Coefficient of `x^e`, with `e` in this polynomial's variable order.
    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Coefficient looked up by variable name; unnamed variables get exponent 0.
    pub fn coeff_named(&self, exps: &[(&str, u32)]) -> BigInt {
        let mut e = vec![0; self.vars.len()];
        for &(name, k) in exps {
            match self.index_of(name) {
                Some(i) => e[i] = k,
                None if k == 0 => {}
                None => return BigInt::zero(),
            }
        }
        self.coeff(&e)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// used variable.
    pub fn align<S: AsRef<str>>(&self, target: &[S]) -> MultiPoly {
        let target: Vec<String> = target.iter().map(|v| v.as_ref().to_string()).collect();
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut out = MultiPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                match map[i] {
                    Some(j) => ne[j] = k,
                    None => assert!(k == 0, "variable `{}` missing from target", self.vars[i]),
                }
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    fn union_vars(&self, other: &MultiPoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned_pair(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.union_vars(other);
        (self.align(&vars), other.align(&vars))
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        }
        out
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The common degree of all terms, if there is one. `None` for zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degrees.next()?;
        degrees.all(|k| k == d).then_some(d)
    }

    /// Every term has total degree `degree`. The zero polynomial qualifies.
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == degree)
    }

    /// Exchanges the roles of two variables.
    pub fn swap_vars(&self, a: &str, b: &str) -> MultiPoly {
        let mut vars = self.vars.clone();
        for v in [a, b] {
            if !vars.iter().any(|x| x == v) {
                vars.push(v.to_string());
            }
        }
        let p = self.align(&vars);
        let ia = p.index_of(a).unwrap();
        let ib = p.index_of(b).unwrap();
        let mut out = MultiPoly::zero(&vars);
        for (e, c) in &p.terms {
            let mut ne = e.clone();
            ne.swap(ia, ib);
            out.add_term(ne, c.clone());
        }
        out
    }

    pub fn is_symmetric_xy(&self) -> bool {
        self.swap_vars("x", "y") == *self
    }

    /// Substitutes integer values for some variables; the variable list is kept.
    pub fn specialize(&self, values: &[(&str, i64)]) -> MultiPoly {
        let idx: Vec<(usize, BigInt)> = values
            .iter()
            .filter_map(|(n, v)| self.index_of(n).map(|i| (i, BigInt::from(*v))))
            .collect();
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let mut nc = c.clone();
            for (i, v) in &idx {
                nc *= num_traits::pow(v.clone(), e[*i] as usize);
                ne[*i] = 0;
            }
            out.add_term(ne, nc);
        }
        out
    }

    /// Reads the polynomial as univariate in `var`; any other used variable is an error.
    pub fn to_uni(&self, var: &str) -> Result<UniPoly> {
        if let Some(other) = self.used_vars().into_iter().find(|v| *v != var) {
            return Err(Error::UnexpectedVariable {
                var: other.to_string(),
                context: "expected a univariate polynomial",
            });
        }
        let idx = self.index_of(var);
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in &self.terms {
            let k = idx.map(|i| e[i] as usize).unwrap_or(0);
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Coefficients `s_i(x, y)` of `z^i`, zero slices omitted, ascending in `i`.
    pub fn z_slices(&self) -> Result<Vec<(usize, MultiPoly)>> {
        if let Some(v) = self
            .used_vars()
            .into_iter()
            .find(|v| !matches!(*v, "x" | "y" | "z"))
        {
            return Err(Error::UnexpectedVariable {
                var: v.to_string(),
                context: "z-slices need variables in {x, y, z}",
            });
        }
        let p = self.align(&["x", "y", "z"]);
        let mut slices: BTreeMap<usize, MultiPoly> = BTreeMap::new();
        for (e, c) in &p.terms {
            slices
                .entry(e[2] as usize)
                .or_insert_with(|| MultiPoly::zero(&["x", "y"]))
                .add_term(vec![e[0], e[1]], c.clone());
        }
        Ok(slices.into_iter().collect())
    }

    /// Inverse of [`MultiPoly::z_slices`]: `Σ s_i z^i` over `[x, y, z]`.
    pub fn from_z_slices(slices: &[(usize, MultiPoly)]) -> MultiPoly {
        let mut out = MultiPoly::zero(&["x", "y", "z"]);
        for (i, s) in slices {
            for (e, c) in &s.align(&["x", "y"]).terms {
                out.add_term(vec![e[0], e[1], *i as u32], c.clone());
            }
        }
        out
    }

    /// Terms in descending graded-lexicographic order.
    pub fn terms_grlex(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial JSON")
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned_pair(other);
        a.terms == b.terms
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned_pair(rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (a, b) = self.aligned_pair(rhs);
        let mut out = MultiPoly::zero(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    /// `x^3*y + 4*x^2*y^2 + x*y^3`, terms in descending graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms_grlex().into_iter().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| {
                    if *k == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (factors.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&factors.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Exponents,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            vars: self.vars.clone(),
            terms: self
                .terms_grlex()
                .into_iter()
                .map(|(e, c)| TermJson {
                    e: e.clone(),
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut p = MultiPoly::zero(&raw.vars);
        for t in raw.terms {
            if t.e.len() != raw.vars.len() {
                return Err(D::Error::custom("exponent vector length differs from vars"));
            }
            let c: BigInt = t.c.parse().map_err(D::Error::custom)?;
            p.add_term(t.e, c);
        }
        Ok(p)
    }
}

/// Dense univariate polynomial `c_0 + c_1 x + ... + c_d x^d` with `c_d != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive(&self) -> UniPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        UniPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (vec![k as u32], c.clone()));
        MultiPoly::from_terms(&["x"], terms).fmt(f)
    }
}

/// Coefficients `c_0, ..., c_K` of a power series in `t`, exact modulo `t^{K+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        TruncatedSeries::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let k = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); k + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(k + 1) {
            for (j, b) in other.coeffs.iter().enumerate().take(k + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

/// `numerator · (1 - t)^{-r}` up to `t^K`, using `[t^k](1-t)^{-r} = C(k+r-1, r-1)`.
pub fn series_divide(numerator: &UniPoly, r: usize, order: usize) -> TruncatedSeries {
    let kernel: Vec<BigInt> = if r == 0 {
        let mut v = vec![BigInt::zero(); order + 1];
        v[0] = BigInt::one();
        v
    } else {
        // C(k + r - 1, r - 1) built incrementally: multiply by (k + r - 1) / k.
        let mut v = Vec::with_capacity(order + 1);
        let mut c = BigInt::one();
        v.push(c.clone());
        for k in 1..=order {
            c = c * BigInt::from(k + r - 1) / BigInt::from(k);
            v.push(c.clone());
        }
        v
    };
    TruncatedSeries::from_poly(numerator, order).mul(&TruncatedSeries { coeffs: kernel })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> [&'static str; 2] {
        ["x", "y"]
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn ring_examples() {
        let x = MultiPoly::var(&xy(), "x");
        let y = MultiPoly::var(&xy(), "y");
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(&s + &MultiPoly::zero(&xy()), s);
        let xy_ = &x * &y;
        assert_eq!((&xy_ * &s).to_string(), "x^2*y + x*y^2");
        assert_eq!(sq.coeff(&[1, 1]), BigInt::from(2));
        assert_eq!(sq.coeff_named(&[("y", 2)]), BigInt::from(1));
    }

    #[test]
    fn alignment_by_name() {
        let x = MultiPoly::var(&["x"], "x");
        let y = MultiPoly::var(&["y"], "y");
        let s = &x + &y;
        assert_eq!(s.vars(), ["x", "y"]);
        let t = &MultiPoly::var(&["y", "x"], "x") + &MultiPoly::var(&["y", "x"], "y");
        assert_eq!(s, t);
        assert!((&s - &t).is_zero());
    }

    #[test]
    fn slices() {
        let v = ["x", "y", "z"];
        let x = MultiPoly::var(&v, "x");
        let y = MultiPoly::var(&v, "y");
        let z = MultiPoly::var(&v, "z");
        let xy_ = &x * &y;
        let p = &(&(&xy_ * &xy_) * &z) + &(&(&xy_ * &(&x + &y)) * &z.pow(2));
        let s = p.z_slices().unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].0, 1);
        assert_eq!(s[0].1.to_string(), "x^2*y^2");
        assert_eq!(s[1].0, 2);
        assert_eq!(s[1].1.to_string(), "x^2*y + x*y^2");
        assert_eq!(MultiPoly::from_z_slices(&s), p);

        let only = xy_.z_slices().unwrap();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].0, 0);
        assert!(MultiPoly::zero(&v).z_slices().unwrap().is_empty());
        let w = MultiPoly::var(&["w"], "w");
        assert!(w.z_slices().is_err());
    }

    #[test]
    fn homogeneity_and_symmetry() {
        let x = MultiPoly::var(&xy(), "x");
        let y = MultiPoly::var(&xy(), "y");
        let p = &(&x * &x) * &y + &(&x * &y) * &y;
        assert!(p.is_homogeneous(3));
        assert!(p.is_symmetric_xy());
        let q = &(&x * &x) * &y;
        assert!(q.is_homogeneous(3));
        assert!(!q.is_symmetric_xy());
        let r = &x + &(&x * &x);
        assert_eq!(r.homogeneous_degree(), None);
        assert!(!r.is_homogeneous(1));
        assert!(!r.is_homogeneous(2));
    }

    #[test]
    fn display_signs() {
        let x = MultiPoly::var(&xy(), "x");
        let y = MultiPoly::var(&xy(), "y");
        let p = &(&x * &x) - &(&x * &y).scale(&BigInt::from(3));
        assert_eq!(p.to_string(), "x^2 - 3*x*y");
        assert_eq!((-&p).to_string(), "-x^2 + 3*x*y");
        assert_eq!(MultiPoly::constant(&xy(), 7).to_string(), "7");
        assert_eq!(MultiPoly::zero(&xy()).to_string(), "0");
    }

    #[test]
    fn json_format() {
        let v = ["x", "y", "z"];
        let p = MultiPoly::from_terms(
            &v,
            [
                (vec![1, 2, 0], BigInt::from(1)),
                (vec![2, 1, 0], BigInt::from(1)),
                (vec![0, 0, 1], BigInt::from(-5)),
            ],
        );
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"vars":["x","y","z"],"terms":[{"e":[2,1,0],"c":"1"},{"e":[1,2,0],"c":"1"},{"e":[0,0,1],"c":"-5"}]}"#
        );
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<MultiPoly>(
            r#"{"vars":["x"],"terms":[{"e":[1,1],"c":"1"}]}"#
        )
        .is_err());
    }

    #[test]
    fn series_division() {
        let t = UniPoly::from_i64(&[0, 1]);
        assert_eq!(series_divide(&t, 2, 4).coeffs(), ints(&[0, 1, 2, 3, 4]));
        assert_eq!(series_divide(&t, 3, 4).coeffs(), ints(&[0, 1, 3, 6, 10]));
        assert_eq!(
            series_divide(&UniPoly::from_i64(&[1]), 1, 3).coeffs(),
            ints(&[1, 1, 1, 1])
        );
    }

    #[test]
    fn unipoly_basics() {
        let p = UniPoly::from_i64(&[2, 4, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.primitive(), UniPoly::from_i64(&[1, 2]));
        assert_eq!(
            UniPoly::from_i64(&[1, 2, 1]).derivative(),
            UniPoly::from_i64(&[2, 2])
        );
        assert_eq!(
            UniPoly::from_i64(&[1, 2, 1]).eval(&BigInt::from(-1)),
            BigInt::zero()
        );
        assert_eq!(UniPoly::from_i64(&[1, 0, -1]).to_string(), "-x^2 + 1");
        assert_eq!(UniPoly::from_i64(&[0, 1, 1]).low_degree(), Some(1));
    }
}
