//! Jacobi–Stirling permutations and their identification with `Q_{m(S)}`.
//!
//! The alphabet `1̄ < 1 < 2̄ < 2 < ... < n̄ < n` is rank-encoded as
//! `ī ↦ 2i - 1`, `i ↦ 2i`. `M_{n,S}` has two copies of every unbarred `i` and
//! one copy of each barred `ī` with `i ∉ S`. Compressing ranks to the letters
//! actually present turns a Jacobi–Stirling permutation into a generalized
//! Stirling permutation of `m(S)`, preserving every comparison.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::{partial_gamma, s_poly, GammaTable, XYZ};
use crate::poly::MultiPoly;
use crate::stats::profile;
use crate::words::{enumerate, has_stirling_property, Composition, Letter, Word};

pub fn barred(i: u16) -> Letter {
    2 * i - 1
}

pub fn unbarred(i: u16) -> Letter {
    2 * i
}

fn check_subset(n: u16, set: &BTreeSet<u16>) -> Result<()> {
    match set.iter().find(|&&a| a == 0 || a > n) {
        Some(&element) => Err(Error::SubsetOutOfRange { element, n }),
        None => Ok(()),
    }
}

/// Rank-encoded letters of `M_{n,S}` that occur, ascending.
pub fn alphabet(n: u16, set: &BTreeSet<u16>) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 1..=n {
        if !set.contains(&i) {
            out.push(barred(i));
        }
        out.push(unbarred(i));
    }
    out
}

/// Rank-encoded content of `M_{n,S}`, sorted.
pub fn multiset(n: u16, set: &BTreeSet<u16>) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 1..=n {
        if !set.contains(&i) {
            out.push(barred(i));
        }
        out.extend([unbarred(i), unbarred(i)]);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JWord {
    letters: Vec<Letter>,
    n: u16,
    removed: BTreeSet<u16>,
}

impl JWord {
    /// Validates content and the Stirling condition.
    pub fn new(letters: Vec<Letter>, n: u16, removed: BTreeSet<u16>) -> Result<Self> {
        check_subset(n, &removed)?;
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        let err = |reason: &str| Error::Parse {
            what: "Jacobi-Stirling word",
            input: render(&letters),
            reason: reason.to_string(),
        };
        if sorted != multiset(n, &removed) {
            return Err(err("content differs from M_{n,S}"));
        }
        if !has_stirling_property(&letters) {
            return Err(err("letters between two copies of i must exceed i"));
        }
        Ok(JWord {
            letters,
            n,
            removed,
        })
    }

    /// Parses `1b,1,1`; the removed set is inferred from the missing barred letters.
    pub fn parse(text: &str, n: u16) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            what: "Jacobi-Stirling word",
            input: text.to_string(),
            reason,
        };
        let mut letters = Vec::new();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (digits, bar) = match tok.strip_suffix('b') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let i: u16 = digits.parse().map_err(|e| err(format!("{tok:?}: {e}")))?;
            if i == 0 || i > n {
                return Err(err(format!("letter {tok:?} outside 1..={n}")));
            }
            letters.push(if bar { barred(i) } else { unbarred(i) });
        }
        let removed = (1..=n).filter(|&i| !letters.contains(&barred(i))).collect();
        JWord::new(letters, n, removed)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn removed(&self) -> &BTreeSet<u16> {
        &self.removed
    }

    /// The rank-encoded sequence as a plain word; statistics only compare letters.
    pub fn as_word(&self) -> Word {
        Word::new(self.letters.clone())
    }
}

fn render(letters: &[Letter]) -> String {
    letters
        .iter()
        .map(|&r| {
            if r % 2 == 1 {
                format!("{}b", r.div_ceil(2))
            } else {
                (r / 2).to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for JWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.letters))
    }
}

/// `m(S)`: part `ℓ` is 2 when `ℓ` is the rank of an unbarred letter, 1 otherwise.
pub fn m_of_s(n: u16, set: &BTreeSet<u16>) -> Result<Composition> {
    check_subset(n, set)?;
    let len = 2 * n as usize - set.len();
    let mut parts = vec![1; len];
    for p in 1..=n {
        let kept_bars = (1..=p).filter(|a| !set.contains(a)).count();
        parts[p as usize + kept_bars - 1] = 2;
    }
    Composition::new(parts)
}

/// Replaces each letter by its rank among the letters present.
pub fn compress(w: &JWord) -> Word {
    let alpha = alphabet(w.n, &w.removed);
    Word::new(
        w.letters
            .iter()
            .map(|l| alpha.binary_search(l).expect("letter of the alphabet") as Letter + 1)
            .collect(),
    )
}

/// All Jacobi–Stirling permutations of `M_{n,S}`, pulled back from `Q_{m(S)}`.
pub fn enumerate_jsp(n: u16, set: &BTreeSet<u16>) -> Result<Vec<JWord>> {
    let m = m_of_s(n, set)?;
    let alpha = alphabet(n, set);
    Ok(enumerate(&m)
        .into_iter()
        .map(|w| JWord {
            letters: w.letters().iter().map(|&r| alpha[r as usize - 1]).collect(),
            n,
            removed: set.clone(),
        })
        .collect())
}

/// `Σ_{π ∈ JSP_{n,S}} x^asc y^des z^plat`, statistics taken on the barred alphabet.
pub fn jsp_poly(n: u16, set: &BTreeSet<u16>) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(&XYZ);
    for w in enumerate_jsp(n, set)? {
        let s = profile(&w.as_word());
        out.add_term(
            vec![s.asc as u32, s.des as u32, s.plat as u32],
            BigInt::from(1),
        );
    }
    Ok(out)
}

/// Subsets of `[n]` of a given size in colex order.
pub fn subsets_colex(n: u16, size: usize) -> Vec<BTreeSet<u16>> {
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == size)
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// `Jsp_{n,i} = Σ_{|S| = i} Jsp_{n,S}`.
pub fn jsp_level_poly(n: u16, level: usize) -> MultiPoly {
    subsets_colex(n, level)
        .iter()
        .map(|s| jsp_poly(n, s).expect("subset of [n]"))
        .fold(MultiPoly::zero(&XYZ), |acc, p| &acc + &p)
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelReport {
    pub level: usize,
    pub table: Option<GammaTable>,
    pub error: Option<String>,
    pub positive: bool,
    pub matches_stirling_sum: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub n: u16,
    pub levels: Vec<LevelReport>,
    pub passed: bool,
}

/// Partial γ-positivity of every `Jsp_{n,i}`, plus the identity
/// `Jsp_{n,i} = Σ_{|S|=i} S_{m(S)}`.
pub fn verify_conjecture(n: u16) -> ConjectureReport {
    let levels: Vec<LevelReport> = (0..=n as usize)
        .map(|level| {
            let poly = jsp_level_poly(n, level);
            let via_stirling = subsets_colex(n, level)
                .iter()
                .map(|s| s_poly(&m_of_s(n, s).expect("subset of [n]")))
                .fold(MultiPoly::zero(&XYZ), |acc, p| &acc + &p);
            let (table, error) = match partial_gamma(&poly) {
                Ok(t) => (Some(t), None),
                Err(e) => (None, Some(e.to_string())),
            };
            LevelReport {
                level,
                positive: table.as_ref().is_some_and(GammaTable::is_positive),
                table,
                error,
                matches_stirling_sum: poly == via_stirling,
            }
        })
        .collect();
    let passed = n >= 1 && levels.iter().all(|l| l.positive && l.matches_stirling_sum);
    ConjectureReport { n, levels, passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u16]) -> BTreeSet<u16> {
        v.iter().copied().collect()
    }

    #[test]
    fn composition_of_subset() {
        assert_eq!(
            m_of_s(7, &set(&[1, 2, 5, 7])).unwrap().parts(),
            &[2, 2, 1, 2, 1, 2, 2, 1, 2, 2]
        );
        assert_eq!(m_of_s(1, &set(&[1])).unwrap().parts(), &[2]);
        assert_eq!(m_of_s(1, &set(&[])).unwrap().parts(), &[1, 2]);
        assert_eq!(
            m_of_s(2, &set(&[3])),
            Err(Error::SubsetOutOfRange { element: 3, n: 2 })
        );
    }

    #[test]
    fn compression() {
        let w = JWord::parse("1b,1,1", 1).unwrap();
        assert_eq!(w.removed(), &set(&[]));
        assert_eq!(compress(&w), "122".parse().unwrap());
        let w = JWord::parse("1,1", 1).unwrap();
        assert_eq!(w.removed(), &set(&[1]));
        assert_eq!(compress(&w), "11".parse().unwrap());
        assert!(JWord::parse("1,1b,1", 1).is_err());
        assert!(JWord::parse("1,2,1,2", 2).is_err());
        assert!(JWord::parse("1,3", 2).is_err());
    }

    #[test]
    fn enumeration() {
        let one = enumerate_jsp(1, &set(&[1])).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "1,1");
        let texts: Vec<String> = enumerate_jsp(1, &set(&[]))
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(texts, ["1b,1,1", "1,1,1b"]);
    }

    #[test]
    fn subsets_in_colex() {
        let s: Vec<Vec<u16>> = subsets_colex(3, 2)
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        assert_eq!(s, [vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets_colex(3, 0).len(), 1);
    }

    #[test]
    fn level_polynomials() {
        let q2: Composition = "2,2".parse().unwrap();
        assert_eq!(jsp_level_poly(2, 2), s_poly(&q2));
        assert_eq!(jsp_level_poly(1, 0), s_poly(&"1,2".parse().unwrap()));
    }

    #[test]
    fn conjecture_small() {
        for n in 1..=2 {
            let r = verify_conjecture(n);
            assert!(r.passed, "{r:?}");
            assert_eq!(r.levels.len(), n as usize + 1);
        }
    }
}
