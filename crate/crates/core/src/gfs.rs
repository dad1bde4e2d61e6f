//! The generalized Foata–Strehl action on Stirling permutations.
//!
//! For a value `x` with leftmost occurrence `π_ℓ`, `φ_x` hops `π_ℓ` leftward
//! when `ℓ` is a free descent-plateau or a single double descent, hops it
//! rightward when `ℓ` is a double ascent, and fixes the word otherwise.
//! The maps `φ_x` are commuting involutions, so `Z_2^n` acts on `Q_m`.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::stats::profile;
use crate::words::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ValueClass {
    FreeDescentPlateauValue,
    SingleDoubleDescentValue,
    DoubleAscentValue,
    Fixed,
}

impl ValueClass {
    /// The value hops to the left under `φ_x`.
    pub fn hops_left(self) -> bool {
        matches!(
            self,
            ValueClass::FreeDescentPlateauValue | ValueClass::SingleDoubleDescentValue
        )
    }
}

fn leftmost(w: &Word, x: Letter) -> Result<usize> {
    w.letters()
        .iter()
        .position(|&l| l == x)
        .map(|i| i + 1)
        .ok_or(Error::AbsentLetter(x))
}

pub fn classify_value(w: &Word, x: Letter) -> Result<ValueClass> {
    let l = leftmost(w, x)?;
    let p = w.padded();
    let (prev, cur, next) = (p[l - 1], p[l], p[l + 1]);
    let single = w.letters().iter().filter(|&&v| v == x).count() == 1;
    Ok(if prev > cur && cur == next {
        ValueClass::FreeDescentPlateauValue
    } else if prev > cur && cur > next && single {
        ValueClass::SingleDoubleDescentValue
    } else if prev < cur && cur < next {
        ValueClass::DoubleAscentValue
    } else {
        ValueClass::Fixed
    })
}

/// `φ_x(w)`.
pub fn phi(w: &Word, x: Letter) -> Result<Word> {
    let class = classify_value(w, x)?;
    let l = leftmost(w, x)?;
    let p = w.padded();
    let m = w.len();
    let mut letters = w.letters().to_vec();
    if class.hops_left() {
        // k = max{a : 0 <= a <= ℓ-2, π_a < x}; π_0 = 0 guarantees existence.
        let k = (0..=l - 2).rev().find(|&a| p[a] < x).expect("sentinel");
        letters.remove(l - 1);
        // Positions before ℓ are unaffected by the removal; insert after π_k.
        letters.insert(k, x);
    } else if class == ValueClass::DoubleAscentValue {
        // k = min{a : ℓ+2 <= a <= m+1, π_a <= x}; π_{m+1} = 0 guarantees existence.
        let k = (l + 2..=m + 1).find(|&a| p[a] <= x).expect("sentinel");
        letters.remove(l - 1);
        // π_k sits at vector index k-2 once π_ℓ is gone; insert before it.
        letters.insert(k - 2, x);
    }
    Ok(Word::new(letters))
}

/// `φ_S = ∏_{x ∈ S} φ_x`, applied in the order given.
pub fn phi_set(w: &Word, set: &[Letter]) -> Result<Word> {
    set.iter().try_fold(w.clone(), |acc, &x| phi(&acc, x))
}

/// Distinct letters of `w` in increasing order.
pub fn values(w: &Word) -> Vec<Letter> {
    w.letters()
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Closure of `{w}` under every `φ_x`.
pub fn orbit(w: &Word) -> BTreeSet<Word> {
    let letters = values(w);
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        for &x in &letters {
            let next = phi(&cur, x).expect("letter of the orbit word");
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// A word with no free descent-plateau and no single double descent.
pub fn is_representative(w: &Word) -> bool {
    let s = profile(w);
    s.sddes == 0 && s.fdesp == 0
}

/// Hops every left-hopping value rightward, at most `n` times. `None` when
/// the cap is hit before reaching a representative.
pub fn canonical_rep_greedy(w: &Word) -> Option<Word> {
    let letters = values(w);
    let mut cur = w.clone();
    for _ in 0..=letters.len() {
        let next = letters.iter().copied().find(|&x| {
            classify_value(&cur, x)
                .map(ValueClass::hops_left)
                .unwrap_or(false)
        });
        match next {
            Some(x) => cur = phi(&cur, x).expect("letter present"),
            None => return Some(cur),
        }
    }
    None
}

/// The unique orbit element with `sddes = fdesp = 0`. Falls back to
/// scanning the whole orbit if the greedy walk does not settle.
pub fn canonical_rep(w: &Word) -> Word {
    canonical_rep_greedy(w)
        .or_else(|| orbit(w).into_iter().find(is_representative))
        .expect("every orbit has a representative")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    const PI: &str = "15565333124411";

    #[test]
    fn classification() {
        let pi = w(PI);
        assert_eq!(
            classify_value(&pi, 1).unwrap(),
            ValueClass::DoubleAscentValue
        );
        assert_eq!(
            classify_value(&pi, 3).unwrap(),
            ValueClass::FreeDescentPlateauValue
        );
        assert_eq!(classify_value(&pi, 5).unwrap(), ValueClass::Fixed);
        assert_eq!(classify_value(&pi, 7), Err(Error::AbsentLetter(7)));
        assert_eq!(
            classify_value(&w("21"), 1).unwrap(),
            ValueClass::SingleDoubleDescentValue
        );
    }

    #[test]
    fn printed_moves() {
        let pi = w(PI);
        assert_eq!(phi(&pi, 1).unwrap(), w("55653331124411"));
        assert_eq!(phi(&pi, 3).unwrap(), w("13556533124411"));
        assert_eq!(phi(&pi, 2).unwrap(), w("15565333144211"));
        assert_eq!(phi_set(&pi, &[1, 3]).unwrap(), w("35565331124411"));
        assert_eq!(phi_set(&pi, &[3, 1]).unwrap(), w("35565331124411"));
        assert_eq!(phi_set(&pi, &[]).unwrap(), pi);
        assert_eq!(phi(&pi, 9), Err(Error::AbsentLetter(9)));
    }

    #[test]
    fn involution_on_running_example() {
        let pi = w(PI);
        for x in 1..=6 {
            assert_eq!(phi(&phi(&pi, x).unwrap(), x).unwrap(), pi);
        }
    }

    #[test]
    fn small_orbits() {
        assert_eq!(orbit(&w("1221")), BTreeSet::from([w("1221"), w("2211")]));
        assert_eq!(orbit(&w("1122")), BTreeSet::from([w("1122")]));
        assert!(orbit(&w(PI)).len().is_power_of_two());
    }

    #[test]
    fn representatives() {
        assert_eq!(canonical_rep(&w("2211")), w("1221"));
        assert_eq!(canonical_rep(&w("1122")), w("1122"));
        let pi = w(PI);
        let rep = canonical_rep(&pi);
        assert!(is_representative(&rep));
        for s in [&[1][..], &[2, 3], &[1, 4, 6]] {
            assert_eq!(canonical_rep(&phi_set(&pi, s).unwrap()), rep);
        }
    }
}
