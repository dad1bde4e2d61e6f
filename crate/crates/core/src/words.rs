//! Compositions, generalized Stirling words, and their enumeration.
//!
//! A composition `m = (m_1, ..., m_n)` fixes the multiset `{1^m_1, ..., n^m_n}`.
//! A word over that multiset is a generalized Stirling permutation when every
//! letter strictly between two copies of `k` is larger than `k`. The set of
//! such words is built by inserting the block `n^m_n` into each gap of every
//! word for `(m_1, ..., m_{n-1})`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Letters are ranks `1..=n`; `0` is reserved for the boundary sentinel.
pub type Letter = u16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(parts));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    /// The composition `(k, k, ..., k)` with `n` parts.
    pub fn constant(n: usize, k: usize) -> Result<Self> {
        Composition::new(vec![k; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of distinct letters.
    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// Word length `m_1 + ... + m_n`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn multiplicity(&self, letter: Letter) -> usize {
        match letter as usize {
            0 => 0,
            k => self.parts.get(k - 1).copied().unwrap_or(0),
        }
    }

    /// The composition with the last part dropped.
    pub fn prefix(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.pop();
        Composition { parts }
    }

    /// All compositions of `total`, in colex order (compare parts from the right).
    pub fn all_with_total(total: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        compositions_rec(total, &mut current, &mut out);
        sort_colex(&mut out);
        out
    }

    /// All compositions with total in `1..=max_total`, ordered by total then colex.
    pub fn all_up_to(max_total: usize) -> Vec<Composition> {
        (1..=max_total)
            .flat_map(Composition::all_with_total)
            .collect()
    }

    /// All compositions with `1..=max_parts` parts, each part in `1..=max_part`.
    pub fn all_bounded(max_parts: usize, max_part: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut layer = vec![Vec::new()];
        for _ in 0..max_parts {
            let mut next = Vec::new();
            for parts in &layer {
                for p in 1..=max_part {
                    let mut extended: Vec<usize> = parts.clone();
                    extended.push(p);
                    next.push(extended);
                }
            }
            out.extend(next.iter().cloned().map(|parts| Composition { parts }));
            layer = next;
        }
        sort_colex(&mut out);
        out
    }

    /// Comma form used by the `--m` flag, e.g. `2,2,1`.
    pub fn to_flag(&self) -> String {
        join_commas(self.parts.iter())
    }
}

fn compositions_rec(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        out.push(Composition {
            parts: current.clone(),
        });
        return;
    }
    for p in 1..=remaining {
        current.push(p);
        compositions_rec(remaining - p, current, out);
        current.pop();
    }
}

fn sort_colex(list: &mut [Composition]) {
    list.sort_by(|a, b| {
        a.total()
            .cmp(&b.total())
            .then_with(|| a.parts.iter().rev().cmp(b.parts.iter().rev()))
    });
}

fn join_commas<T: fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_flag())
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `2,2,1`; surrounding parentheses and the empty string `()` are accepted.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if trimmed.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|e| Error::Parse {
                    what: "composition",
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// A sequence of letters, not necessarily a Stirling permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of each letter, indexed by `letter - 1`, up to the largest letter.
    pub fn content(&self) -> Vec<usize> {
        let max = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0; max];
        for &l in &self.0 {
            if l > 0 {
                counts[l as usize - 1] += 1;
            }
        }
        counts
    }

    /// The composition this word is a permutation of, if every letter up to the
    /// largest one occurs.
    pub fn composition(&self) -> Option<Composition> {
        Composition::new(self.content()).ok()
    }

    pub fn reverse(&self) -> Word {
        let mut letters = self.0.clone();
        letters.reverse();
        Word(letters)
    }

    /// Letters padded with the sentinel `0` on both ends: index `i` of the
    /// result is `π_i` for `0 <= i <= m + 1`.
    pub fn padded(&self) -> Vec<Letter> {
        let mut p = Vec::with_capacity(self.0.len() + 2);
        p.push(0);
        p.extend_from_slice(&self.0);
        p.push(0);
        p
    }

    /// Digits-only form, available when every letter is below 10.
    pub fn to_compact(&self) -> Option<String> {
        self.0
            .iter()
            .map(|&l| char::from_digit(l as u32, 10).filter(|_| l < 10))
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_commas(self.0.iter()))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `1,5,5,6` or the digit shorthand `1556`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = |reason: String| Error::Parse {
            what: "word",
            input: s.to_string(),
            reason,
        };
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<Letter>().map_err(|e| err(e.to_string())))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as Letter)
                        .ok_or_else(|| err(format!("unexpected character {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if letters.contains(&0) {
            return Err(err("letters start at 1".into()));
        }
        Ok(Word(letters))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

/// Every letter strictly between two copies of `k` exceeds `k`.
///
/// Works for arbitrary letter values, so rank-encoded alphabets can reuse it.
pub fn has_stirling_property(letters: &[Letter]) -> bool {
    for (i, &a) in letters.iter().enumerate() {
        let Some(last) = letters.iter().rposition(|&b| b == a) else {
            continue;
        };
        if letters[i..last].iter().any(|&b| b < a) {
            return false;
        }
    }
    true
}

/// True iff `w` is a permutation of `M_m` with the Stirling property.
pub fn is_stirling(w: &Word, m: &Composition) -> bool {
    let mut counts = vec![0usize; m.n()];
    for &l in w.letters() {
        if l == 0 || l as usize > m.n() {
            return false;
        }
        counts[l as usize - 1] += 1;
    }
    counts == m.parts() && has_stirling_property(w.letters())
}

/// All generalized Stirling permutations of `m`, in lexicographic order.
pub fn enumerate(m: &Composition) -> Vec<Word> {
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for (idx, &mult) in m.parts().iter().enumerate() {
        let letter = (idx + 1) as Letter;
        let mut next = Vec::with_capacity(words.len() * (words[0].len() + 1));
        for w in &words {
            for gap in 0..=w.len() {
                let mut v = Vec::with_capacity(w.len() + mult);
                v.extend_from_slice(&w[..gap]);
                v.extend(std::iter::repeat_n(letter, mult));
                v.extend_from_slice(&w[gap..]);
                next.push(v);
            }
        }
        words = next;
    }
    words.sort_unstable();
    words.into_iter().map(Word).collect()
}

/// `|Q_m| = prod_i (1 + m_1 + ... + m_{i-1})`.
pub fn count(m: &Composition) -> BigUint {
    let mut prefix = 0usize;
    let mut acc = BigUint::from(1u32);
    for &p in m.parts() {
        acc *= BigUint::from(prefix + 1);
        prefix += p;
    }
    acc
}

pub fn reverse(w: &Word) -> Word {
    w.reverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn stirling_predicate() {
        assert!(is_stirling(&w("1221"), &c("2,2")));
        assert!(!is_stirling(&w("1212"), &c("2,2")));
        assert!(is_stirling(&w("15565333124411"), &c("4,1,3,2,3,1")));
        // content mismatch
        assert!(!is_stirling(&w("1122"), &c("2,1")));
        assert!(!is_stirling(&w("1123"), &c("2,2")));
        assert!(is_stirling(&Word::empty(), &Composition::empty()));
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(&Composition::empty()), vec![Word::empty()]);
        let q = enumerate(&c("2,2"));
        assert_eq!(q, vec![w("1122"), w("1221"), w("2211")]);
        assert_eq!(enumerate(&c("2,2,2")).len(), 15);
    }

    #[test]
    fn count_closed_form() {
        assert_eq!(count(&Composition::empty()), BigUint::from(1u32));
        assert_eq!(count(&c("2,2,2")), BigUint::from(15u32));
        assert_eq!(count(&c("1,1,1,1")), BigUint::from(24u32));
    }

    #[test]
    fn reversal() {
        assert_eq!(reverse(&w("1122")), w("2211"));
        assert_eq!(reverse(&w("1221")), w("1221"));
        assert_eq!(
            reverse(&w("15565333124411")).letters(),
            &[1, 1, 4, 4, 2, 1, 3, 3, 3, 5, 6, 5, 5, 1]
        );
    }

    #[test]
    fn word_text_formats() {
        assert_eq!(w("1,5,5,6"), w("1556"));
        assert_eq!(w("10,1").letters(), &[10, 1]);
        assert_eq!(w("10,1").to_compact(), None);
        assert_eq!(w("1556").to_compact().as_deref(), Some("1556"));
        assert_eq!(w("1556").to_string(), "1,5,5,6");
        assert!("1a".parse::<Word>().is_err());
        assert!("0,1".parse::<Word>().is_err());
    }

    #[test]
    fn composition_parsing() {
        assert_eq!(c("2,2").parts(), &[2, 2]);
        assert_eq!(c("(1, 3)").parts(), &[1, 3]);
        assert_eq!(c(""), Composition::empty());
        assert!("2,0".parse::<Composition>().is_err());
        assert!("2,a".parse::<Composition>().is_err());
    }

    #[test]
    fn composition_lists() {
        assert_eq!(Composition::all_with_total(0), vec![Composition::empty()]);
        assert_eq!(Composition::all_with_total(4).len(), 8);
        let three: Vec<String> = Composition::all_with_total(3)
            .iter()
            .map(|c| c.to_flag())
            .collect();
        assert_eq!(three, ["1,1,1", "2,1", "1,2", "3"]);
        assert_eq!(Composition::all_up_to(5).len(), 1 + 2 + 4 + 8 + 16);
        assert_eq!(Composition::all_bounded(4, 3).len(), 3 + 9 + 27 + 81);
    }
}
