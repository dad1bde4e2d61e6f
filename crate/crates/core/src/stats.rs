//! Statistics of a word read against the sentinel `π_0 = π_{m+1} = 0`.
//!
//! `asc`, `plat` and `des` range over indices `0..=m` and compare
//! `(π_i, π_{i+1})`. Every other statistic ranges over `1..=m` and may look at
//! the triple `(π_{i-1}, π_i, π_{i+1})`. A letter is *multiple* when it occurs
//! more than once in the word itself.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatProfile {
    pub asc: usize,
    pub plat: usize,
    pub des: usize,
    /// Descents at a single letter.
    pub sdes: usize,
    /// Descents at a multiple letter.
    pub mdes: usize,
    /// Plateaux whose letter has no earlier occurrence.
    pub fplat: usize,
    /// Plateaux that are neither free descent-plateaux nor ascent-plateaux.
    pub uplat: usize,
    pub dasc: usize,
    pub sddes: usize,
    pub fdesp: usize,
    /// Ascent-plateaux plus peaks.
    pub ascpp: usize,
    /// Multiple descents plus unmovable plateaux.
    pub mdup: usize,
}

impl StatProfile {
    /// Checks the linear identities that tie the statistics together on a
    /// word of length `len`. Returns the first violated identity.
    pub fn check_identities(&self, len: usize) -> std::result::Result<(), &'static str> {
        let m1 = len + 1;
        if self.asc + self.plat + self.des != m1 {
            return Err("asc + plat + des = m + 1");
        }
        if self.des != self.sdes + self.mdes {
            return Err("des = sdes + mdes");
        }
        if self.plat != self.fplat + self.uplat {
            return Err("plat = fplat + uplat");
        }
        if len > 0 && self.asc != self.dasc + self.ascpp {
            return Err("asc = dasc + ascpp");
        }
        if self.mdup != self.mdes + self.uplat {
            return Err("mdup = mdes + uplat");
        }
        if len > 0 && self.mdup + self.asc + self.fplat + self.sdes != m1 {
            return Err("mdup + asc + fplat + sdes = m + 1");
        }
        Ok(())
    }
}

pub fn profile(w: &Word) -> StatProfile {
    if w.is_empty() {
        // The sentinel-to-sentinel index is the z-labelled base case.
        return StatProfile {
            asc: 1,
            ..StatProfile::default()
        };
    }
    let p = w.padded();
    let m = w.len();
    let content = w.content();
    let multiple = |l: Letter| content[l as usize - 1] > 1;

    let mut s = StatProfile::default();
    let mut seen = vec![false; content.len() + 1];
    for i in 0..=m {
        let (cur, next) = (p[i], p[i + 1]);
        if cur < next {
            s.asc += 1;
        } else if cur == next {
            s.plat += 1;
        } else {
            s.des += 1;
        }
        if i == 0 {
            continue;
        }

        let prev = p[i - 1];
        let first = !seen[cur as usize];
        seen[cur as usize] = true;

        if cur > next {
            if multiple(cur) {
                s.mdes += 1;
            } else {
                s.sdes += 1;
            }
        }
        let ascent_plateau = prev < cur && cur == next;
        let free_descent_plateau = prev > cur && cur == next && first;
        if cur == next {
            if first {
                s.fplat += 1;
            }
            if !free_descent_plateau && !ascent_plateau {
                s.uplat += 1;
            }
        }
        if prev < cur && cur < next {
            s.dasc += 1;
        }
        if prev > cur && cur > next && !multiple(cur) {
            s.sddes += 1;
        }
        if free_descent_plateau {
            s.fdesp += 1;
        }
        if ascent_plateau || (prev < cur && cur > next) {
            s.ascpp += 1;
        }
    }
    s.mdup = s.mdes + s.uplat;
    s
}

/// Grammar variables used as superscript labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    /// single descent
    X,
    /// multiple descent (x̃)
    Xt,
    /// unmovable plateau
    Y,
    /// first plateau (ỹ)
    Yt,
    /// ascent
    Z,
}

impl Label {
    pub const ALL: [Label; 5] = [Label::X, Label::Xt, Label::Y, Label::Yt, Label::Z];

    /// Serialized character: `x`, `X` (x̃), `y`, `Y` (ỹ), `z`.
    pub fn to_char(self) -> char {
        match self {
            Label::X => 'x',
            Label::Xt => 'X',
            Label::Y => 'y',
            Label::Yt => 'Y',
            Label::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Option<Label> {
        Label::ALL.into_iter().find(|l| l.to_char() == c)
    }

    /// Polynomial variable name: `x`, `xt`, `y`, `yt`, `z`.
    pub fn var_name(self) -> &'static str {
        match self {
            Label::X => "x",
            Label::Xt => "xt",
            Label::Y => "y",
            Label::Yt => "yt",
            Label::Z => "z",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling(pub Vec<Label>);

impl Labeling {
    /// Label counts in the order `(x, x̃, ỹ, y, z)`, i.e.
    /// `(sdes, mdes, fplat, uplat, asc)`.
    pub fn weight(&self) -> [usize; 5] {
        let mut out = [0; 5];
        for l in &self.0 {
            let slot = match l {
                Label::X => 0,
                Label::Xt => 1,
                Label::Yt => 2,
                Label::Y => 3,
                Label::Z => 4,
            };
            out[slot] += 1;
        }
        out
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.to_char()))
    }
}

impl FromStr for Labeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                Label::from_char(c).ok_or_else(|| Error::Parse {
                    what: "labeling",
                    input: s.to_string(),
                    reason: format!("unknown label {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Labeling)
    }
}

impl Serialize for Labeling {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One label per index `0..=m`, placed right after `π_i`.
pub fn labeling(w: &Word) -> Labeling {
    let p = w.padded();
    let m = w.len();
    let content = w.content();
    let mut seen = vec![false; content.len() + 1];
    let mut labels = Vec::with_capacity(m + 1);
    labels.push(Label::Z);
    for i in 1..=m {
        let (cur, next) = (p[i], p[i + 1]);
        let first = !seen[cur as usize];
        seen[cur as usize] = true;
        let label = if cur < next {
            Label::Z
        } else if cur == next {
            if first {
                Label::Yt
            } else {
                Label::Y
            }
        } else if content[cur as usize - 1] > 1 {
            Label::Xt
        } else {
            Label::X
        };
        labels.push(label);
    }
    Labeling(labels)
}
