//! Slow, obviously-correct reference implementations.
//!
//! These enumerate every arrangement of a multiset and filter it through the
//! defining condition. They share no code with the insertion construction and
//! exist to cross-check it.

use std::collections::BTreeSet;

use crate::jacobi::multiset;
use crate::words::{has_stirling_property, Composition, Letter, Word};

/// Advances `v` to the next arrangement in lexicographic order.
/// Returns `false` after the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|x| *x > v[i]).expect("v[i+1] > v[i]");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every distinct arrangement of `letters`, in lexicographic order.
pub fn multiset_permutations(letters: &[Letter]) -> Vec<Vec<Letter>> {
    let mut v = letters.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

fn content(m: &Composition) -> Vec<Letter> {
    m.parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n((i + 1) as Letter, k))
        .collect()
}

/// `Q_m` by filtering all arrangements of `M_m`.
pub fn stirling_words(m: &Composition) -> Vec<Word> {
    let mut v = content(m);
    let mut out = Vec::new();
    loop {
        if has_stirling_property(&v) {
            out.push(Word::new(v.clone()));
        }
        if !next_permutation(&mut v) {
            return out;
        }
    }
}

/// `|Q_m|` by filtering, without materializing the words.
pub fn stirling_count(m: &Composition) -> usize {
    let mut v = content(m);
    let mut n = 0;
    loop {
        if has_stirling_property(&v) {
            n += 1;
        }
        if !next_permutation(&mut v) {
            return n;
        }
    }
}

/// Jacobi–Stirling permutations of `M_{n,S}` in rank encoding, by filtering.
pub fn jacobi_stirling_words(n: u16, set: &BTreeSet<u16>) -> Vec<Vec<Letter>> {
    multiset_permutations(&multiset(n, set))
        .into_iter()
        .filter(|w| has_stirling_property(w))
        .collect()
}
