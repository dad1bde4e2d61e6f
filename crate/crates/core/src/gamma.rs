//! The trivariate polynomial `S_m(x,y,z)` and its partial γ-expansion.
//!
//! Each z-slice `s_i(x,y)` of a partially γ-positive polynomial is
//! homogeneous and symmetric and expands as
//! `s_i = Σ_j γ_{i,j} (xy)^j (x+y)^{d_i - 2j}`. The coefficients are recovered
//! by peeling off basis elements from the lowest power of `x` upward; the
//! combinatorial side counts words with `sddes = fdesp = 0` by `(mdup, ascpp)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{series_divide, MultiPoly, UniPoly};
use crate::stats::profile;
use crate::words::{enumerate, Composition};

pub const XYZ: [&str; 3] = ["x", "y", "z"];

/// `Σ_{π ∈ Q_m} x^asc y^des z^plat`.
pub fn s_poly(m: &Composition) -> MultiPoly {
    let mut out = MultiPoly::zero(&XYZ);
    for w in enumerate(m) {
        let s = profile(&w);
        out.add_term(
            vec![s.asc as u32, s.des as u32, s.plat as u32],
            BigInt::from(1),
        );
    }
    out
}

/// The basis element `(xy)^j (x+y)^{d-2j}` over `[x, y]`.
pub fn gamma_basis(d: u32, j: u32) -> MultiPoly {
    let xy = MultiPoly::monomial(&["x", "y"], vec![1, 1], 1);
    let sum = &MultiPoly::var(&["x", "y"], "x") + &MultiPoly::var(&["x", "y"], "y");
    &xy.pow(j) * &sum.pow(d - 2 * j)
}

/// Expands a homogeneous symmetric `h(x, y)` in the γ-basis. Returns
/// `γ_0, ..., γ_{⌊d/2⌋}`; the zero polynomial gives an empty list.
pub fn gamma_expand(h: &MultiPoly) -> Result<Vec<BigInt>> {
    if let Some(v) = h.used_vars().into_iter().find(|v| !matches!(*v, "x" | "y")) {
        return Err(Error::UnexpectedVariable {
            var: v.to_string(),
            context: "gamma expansion needs a polynomial in x and y",
        });
    }
    if h.is_zero() {
        return Ok(Vec::new());
    }
    let h = h.align(&["x", "y"]);
    let d = h.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if !h.is_symmetric_xy() {
        return Err(Error::NotSymmetric);
    }
    let mut residue = h;
    let mut gammas = Vec::with_capacity(d as usize / 2 + 1);
    for j in 0..=d / 2 {
        // (xy)^j (x+y)^{d-2j} is the only remaining basis element touching x^j y^{d-j}.
        let g = residue.coeff(&[j, d - j]);
        if !g.is_zero() {
            residue = &residue - &gamma_basis(d, j).scale(&g);
        }
        gammas.push(g);
    }
    if !residue.is_zero() {
        return Err(Error::InternalResidue);
    }
    Ok(gammas)
}

/// Nonzero γ-coefficients indexed by `(i, j)`: z-power `i`, γ-index `j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GammaTable {
    pub degree: usize,
    pub entries: BTreeMap<(usize, usize), BigInt>,
}

impl GammaTable {
    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_positive(&self) -> bool {
        self.entries.values().all(|g| !g.is_negative())
    }

    /// Entries with γ-index 0, which must be absent for `S_m`.
    pub fn zero_index_entries(&self) -> Vec<(usize, BigInt)> {
        self.entries
            .iter()
            .filter(|((_, j), _)| *j == 0)
            .map(|((i, _), g)| (*i, g.clone()))
            .collect()
    }

    /// First `(i, j)` where the two tables differ.
    pub fn first_difference(&self, other: &GammaTable) -> Option<(usize, usize)> {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .find(|&(i, j)| self.get(i, j) != other.get(i, j))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,gamma\n");
        for ((i, j), g) in &self.entries {
            let _ = writeln!(out, "{i},{j},{g}");
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("gamma table JSON")
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: usize,
    j: usize,
    g: String,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    degree: usize,
    entries: Vec<EntryJson>,
    positive: bool,
}

impl Serialize for GammaTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            degree: self.degree,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), g)| EntryJson {
                    i,
                    j,
                    g: g.to_string(),
                })
                .collect(),
            positive: self.is_positive(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GammaTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = TableJson::deserialize(d)?;
        let mut entries = BTreeMap::new();
        for e in raw.entries {
            let g: BigInt = e.g.parse().map_err(D::Error::custom)?;
            if !g.is_zero() {
                entries.insert((e.i, e.j), g);
            }
        }
        Ok(GammaTable {
            degree: raw.degree,
            entries,
        })
    }
}

/// Row `i` of the table is the γ-expansion of the z-slice `s_i`.
pub fn partial_gamma(p: &MultiPoly) -> Result<GammaTable> {
    let mut table = GammaTable {
        degree: p.total_degree().unwrap_or(0) as usize,
        entries: BTreeMap::new(),
    };
    for (i, slice) in p.z_slices()? {
        let row = gamma_expand(&slice).map_err(|e| Error::Slice {
            index: i,
            source: Box::new(e),
        })?;
        for (j, g) in row.into_iter().enumerate() {
            if !g.is_zero() {
                table.entries.insert((i, j), g);
            }
        }
    }
    Ok(table)
}

/// Counts words of `Q_m` with `sddes = fdesp = 0`, tabulated by `(mdup, ascpp)`.
pub fn gamma_combinatorial(m: &Composition) -> GammaTable {
    let mut table = GammaTable {
        degree: m.total() + 1,
        entries: BTreeMap::new(),
    };
    if m.n() == 0 {
        return table;
    }
    for w in enumerate(m) {
        let s = profile(&w);
        if s.sddes == 0 && s.fdesp == 0 {
            *table.entries.entry((s.mdup, s.ascpp)).or_default() += 1;
        }
    }
    table
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableMismatch {
    pub i: usize,
    pub j: usize,
    pub from_polynomial: String,
    pub from_words: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub composition: Composition,
    pub from_polynomial: Option<GammaTable>,
    pub from_words: GammaTable,
    pub error: Option<String>,
    pub first_mismatch: Option<TableMismatch>,
    pub zero_index_entries: Vec<(usize, String)>,
    pub nonnegative: bool,
    pub passed: bool,
}

/// Compares the γ-expansion of `S_m` with the combinatorial count, entry by entry.
pub fn verify_theorem(m: &Composition) -> TheoremReport {
    let from_words = gamma_combinatorial(m);
    let expansion = partial_gamma(&s_poly(m));
    let (from_polynomial, error) = match expansion {
        Ok(t) => (Some(t), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let mut first_mismatch = None;
    let mut zero_index_entries = Vec::new();
    let mut nonnegative = false;
    if let Some(t) = &from_polynomial {
        first_mismatch = t.first_difference(&from_words).map(|(i, j)| TableMismatch {
            i,
            j,
            from_polynomial: t.get(i, j).to_string(),
            from_words: from_words.get(i, j).to_string(),
        });
        zero_index_entries = t
            .zero_index_entries()
            .into_iter()
            .map(|(i, g)| (i, g.to_string()))
            .collect();
        nonnegative = t.is_positive() && from_words.is_positive();
    }
    let passed = error.is_none()
        && first_mismatch.is_none()
        && zero_index_entries.is_empty()
        && nonnegative
        && m.n() > 0;
    TheoremReport {
        composition: m.clone(),
        from_polynomial,
        from_words,
        error,
        first_mismatch,
        zero_index_entries,
        nonnegative,
        passed,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    /// `Σ k^n t^k = A_n(t) / (1-t)^{n+1}` with `A_n` over `Q_{(1,...,1)}`.
    Eulerian,
    /// `Σ S(n+k, k) t^k = C_n(t) / (1-t)^{2n+1}` with `C_n` over `Q_{(2,...,2)}`.
    SecondOrder,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub n: usize,
    pub order: usize,
    pub numerator: String,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
    pub passed: bool,
}

/// Descent polynomial `Σ_{π ∈ Q_m} t^des(π)`.
pub fn descent_poly(m: &Composition) -> UniPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for w in enumerate(m) {
        let d = profile(&w).des;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, BigInt::zero());
        }
        coeffs[d] += 1;
    }
    UniPoly::new(coeffs)
}

/// Stirling numbers of the second kind `S(a, b)` for `a, b <= max`.
fn stirling2_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); max + 1]; max + 1];
    s[0][0] = BigInt::from(1);
    for a in 1..=max {
        for b in 1..=a {
            s[a][b] = &s[a - 1][b - 1] + BigInt::from(b) * &s[a - 1][b];
        }
    }
    s
}

pub fn classical_series_check(kind: SeriesKind, n: usize, order: usize) -> SeriesReport {
    let (m, r) = match kind {
        SeriesKind::Eulerian => (Composition::constant(n, 1), n + 1),
        SeriesKind::SecondOrder => (Composition::constant(n, 2), 2 * n + 1),
    };
    let numerator = descent_poly(&m.expect("positive parts"));
    let actual = series_divide(&numerator, r, order);
    let expected: Vec<BigInt> = match kind {
        SeriesKind::Eulerian => (0..=order)
            .map(|k| num_traits::pow(BigInt::from(k), n))
            .collect(),
        SeriesKind::SecondOrder => {
            let s = stirling2_table(n + order);
            (0..=order).map(|k| s[n + k][k].clone()).collect()
        }
    };
    let passed = actual.coeffs() == expected.as_slice();
    SeriesReport {
        kind,
        n,
        order,
        numerator: numerator.to_string(),
        expected: expected.iter().map(|c| c.to_string()).collect(),
        actual: actual.coeffs().iter().map(|c| c.to_string()).collect(),
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn xy(terms: &[([u32; 2], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            &["x", "y"],
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn table(degree: usize, entries: &[((usize, usize), i64)]) -> GammaTable {
        GammaTable {
            degree,
            entries: entries
                .iter()
                .map(|(k, g)| (*k, BigInt::from(*g)))
                .collect(),
        }
    }

    #[test]
    fn s_poly_small() {
        assert_eq!(s_poly(&c("1,1")).to_string(), "x^2*y + x*y^2");
        assert_eq!(
            s_poly(&c("2,2")).to_string(),
            "x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"
        );
    }

    #[test]
    fn gamma_expansions() {
        assert_eq!(
            gamma_expand(&xy(&[([2, 1], 1), ([1, 2], 1)])).unwrap(),
            ints(&[0, 1])
        );
        assert_eq!(
            gamma_expand(&xy(&[([3, 1], 1), ([2, 2], 4), ([1, 3], 1)])).unwrap(),
            ints(&[0, 1, 2])
        );
        assert_eq!(
            gamma_expand(&xy(&[([2, 0], 1), ([1, 1], 2), ([0, 2], 1)])).unwrap(),
            ints(&[1, 0])
        );
        assert_eq!(
            gamma_expand(&xy(&[([2, 0], 1), ([0, 2], 1)])).unwrap(),
            ints(&[1, -2])
        );
    }

    #[test]
    fn gamma_expand_errors() {
        assert_eq!(gamma_expand(&xy(&[([2, 1], 1)])), Err(Error::NotSymmetric));
        assert_eq!(
            gamma_expand(&xy(&[([1, 0], 1), ([0, 1], 1), ([1, 1], 1)])),
            Err(Error::NotHomogeneous)
        );
        assert!(matches!(
            gamma_expand(&MultiPoly::var(&["z"], "z")),
            Err(Error::UnexpectedVariable { .. })
        ));
    }

    #[test]
    fn partial_gamma_tables() {
        let t = partial_gamma(&s_poly(&c("2,2"))).unwrap();
        assert_eq!(t, table(5, &[((1, 2), 1), ((2, 1), 1)]));
        assert!(t.is_positive());

        let single = partial_gamma(&s_poly(&c("1,1"))).unwrap();
        assert_eq!(single.entries, table(3, &[((0, 1), 1)]).entries);

        let z = MultiPoly::var(&XYZ, "z");
        let negative = &xy(&[([2, 0], 1), ([0, 2], 1)]) * &z;
        let t = partial_gamma(&negative).unwrap();
        assert_eq!(t.entries, table(3, &[((1, 0), 1), ((1, 1), -2)]).entries);
        assert!(!t.is_positive());

        let bad = &xy(&[([2, 1], 1)]) * &z.pow(2);
        assert!(matches!(
            partial_gamma(&bad),
            Err(Error::Slice { index: 2, .. })
        ));
    }

    #[test]
    fn combinatorial_tables() {
        assert_eq!(
            gamma_combinatorial(&c("2,2")).entries,
            table(5, &[((1, 2), 1), ((2, 1), 1)]).entries
        );
        assert_eq!(
            gamma_combinatorial(&c("1")).entries,
            table(2, &[((0, 1), 1)]).entries
        );
        assert!(gamma_combinatorial(&Composition::empty())
            .entries
            .is_empty());
    }

    #[test]
    fn theorem_small_cases() {
        for m in ["2,2", "1,1,1", "2,2,2", "3,1,2"] {
            let r = verify_theorem(&c(m));
            assert!(r.passed, "{m}: {r:?}");
        }
        let r = verify_theorem(&c("1,1,1"));
        assert_eq!(
            r.from_words.entries,
            table(4, &[((0, 1), 1), ((0, 2), 2)]).entries
        );
        assert!(!verify_theorem(&Composition::empty()).passed);
    }

    #[test]
    fn table_formats() {
        let t = table(5, &[((1, 2), 1), ((2, 1), 1)]);
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"degree":5,"entries":[{"i":1,"j":2,"g":"1"},{"i":2,"j":1,"g":"1"}],"positive":true}"#
        );
        assert_eq!(t.to_csv(), "i,j,gamma\n1,2,1\n2,1,1\n");
        let back: GammaTable = serde_json::from_value(t.to_json()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn classical_series() {
        let r = classical_series_check(SeriesKind::Eulerian, 1, 5);
        assert!(r.passed);
        assert_eq!(r.actual, ["0", "1", "2", "3", "4", "5"]);
        let r = classical_series_check(SeriesKind::Eulerian, 2, 4);
        assert_eq!(r.numerator, "x^2 + x");
        assert_eq!(r.actual, ["0", "1", "4", "9", "16"]);
        assert!(r.passed);
        let r = classical_series_check(SeriesKind::SecondOrder, 1, 4);
        assert_eq!(r.actual, ["0", "1", "3", "6", "10"]);
        assert!(r.passed);
    }
}
