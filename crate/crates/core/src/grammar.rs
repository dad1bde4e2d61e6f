//! Context-free grammars and their formal derivative.
//!
//! A grammar assigns each variable a polynomial; the derivative `D` is the
//! unique linear map with `D(v) = rule(v)` that satisfies the Leibniz rule.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::stats::profile;
use crate::words::{enumerate, Composition};

/// Variable order used for the labeling grammars: `x, x̃, y, ỹ, z`.
pub const LABEL_VARS: [&str; 5] = ["x", "xt", "y", "yt", "z"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grammar {
    pub rules: BTreeMap<String, MultiPoly>,
}

impl Grammar {
    pub fn new(rules: impl IntoIterator<Item = (String, MultiPoly)>) -> Self {
        Grammar {
            rules: rules.into_iter().collect(),
        }
    }

    /// Every variable used on a right-hand side has a rule.
    pub fn check_closed(&self) -> Result<()> {
        for rhs in self.rules.values() {
            if let Some(v) = rhs
                .used_vars()
                .into_iter()
                .find(|v| !self.rules.contains_key(*v))
            {
                return Err(Error::MissingRule(v.to_string()));
            }
        }
        Ok(())
    }

    pub fn rule(&self, var: &str) -> Option<&MultiPoly> {
        self.rules.get(var)
    }
}

/// Applies the formal derivative once:
/// `D(∏ v^e_v) = Σ_v e_v v^{e_v - 1} rule(v) ∏_{u≠v} u^e_u`.
pub fn derive(g: &Grammar, p: &MultiPoly) -> Result<MultiPoly> {
    let rules: Vec<Option<&MultiPoly>> = p.vars().iter().map(|v| g.rule(v)).collect();
    let mut out = MultiPoly::zero(p.vars());
    for (e, c) in p.terms() {
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let rhs = rules[i].ok_or_else(|| Error::MissingRule(p.vars()[i].clone()))?;
            let mut rest = e.clone();
            rest[i] -= 1;
            let mono = MultiPoly::monomial(p.vars(), rest, c * BigInt::from(k));
            out = &out + &(&mono * rhs);
        }
    }
    Ok(out)
}

/// `D^n(p)`.
pub fn derive_n(g: &Grammar, p: &MultiPoly, n: usize) -> Result<MultiPoly> {
    let mut acc = p.clone();
    for _ in 0..n {
        acc = derive(g, &acc)?;
    }
    Ok(acc)
}

fn uniform(rhs: MultiPoly) -> Grammar {
    Grammar::new(LABEL_VARS.iter().map(|v| (v.to_string(), rhs.clone())))
}

/// The grammar for inserting a block of `k` copies of a new largest letter:
/// every variable goes to `x̃ ỹ y^{k-2} z` when `k >= 2`, and to `x z` when `k = 1`.
pub fn gk(k: usize) -> Result<Grammar> {
    let rhs = match k {
        0 => return Err(Error::ZeroGrammarIndex),
        1 => MultiPoly::monomial(&LABEL_VARS, vec![1, 0, 0, 0, 1], 1),
        k => MultiPoly::monomial(&LABEL_VARS, vec![0, 1, k as u32 - 2, 1, 1], 1),
    };
    Ok(uniform(rhs))
}

/// Dumont's grammar `{x -> xy, y -> xy}`.
pub fn dumont() -> Grammar {
    let xy = MultiPoly::monomial(&["x", "y"], vec![1, 1], 1);
    Grammar::new([("x".to_string(), xy.clone()), ("y".to_string(), xy)])
}

/// `D_{m_n} ⋯ D_{m_1}(z)`, applying the grammar for `m_1` first.
pub fn quintuple_poly(m: &Composition) -> MultiPoly {
    let mut acc = MultiPoly::var(&LABEL_VARS, "z");
    for &k in m.parts() {
        let g = gk(k).expect("composition parts are positive");
        acc = derive(&g, &acc).expect("label grammars are closed");
    }
    acc
}

/// `Σ_{π ∈ Q_m} x^sdes x̃^mdes ỹ^fplat y^uplat z^asc`, read off the words.
pub fn quintuple_poly_by_enumeration(m: &Composition) -> MultiPoly {
    let mut out = MultiPoly::zero(&LABEL_VARS);
    for w in enumerate(m) {
        let s = profile(&w);
        let e = vec![
            s.sdes as u32,
            s.mdes as u32,
            s.uplat as u32,
            s.fplat as u32,
            s.asc as u32,
        ];
        out.add_term(e, BigInt::from(1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(&["x", "y"], "x")
    }

    #[test]
    fn dumont_derivatives() {
        let g = dumont();
        assert_eq!(derive_n(&g, &x(), 1).unwrap().to_string(), "x*y");
        assert_eq!(derive_n(&g, &x(), 2).unwrap().to_string(), "x^2*y + x*y^2");
        assert_eq!(
            derive_n(&g, &x(), 3).unwrap().to_string(),
            "x^3*y + 4*x^2*y^2 + x*y^3"
        );
    }

    #[test]
    fn constants_vanish() {
        let one = MultiPoly::one(&LABEL_VARS);
        assert!(derive(&gk(2).unwrap(), &one).unwrap().is_zero());
        assert!(derive(&dumont(), &MultiPoly::one(&["x", "y"]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn missing_rule_is_named() {
        let p = MultiPoly::var(&["w"], "w");
        assert_eq!(derive(&dumont(), &p), Err(Error::MissingRule("w".into())));
        let open = Grammar::new([("x".to_string(), MultiPoly::var(&["q"], "q"))]);
        assert_eq!(open.check_closed(), Err(Error::MissingRule("q".into())));
    }

    #[test]
    fn label_grammars() {
        assert_eq!(gk(0), Err(Error::ZeroGrammarIndex));
        for (k, text) in [(1, "x*z"), (2, "xt*yt*z"), (3, "xt*y*yt*z")] {
            let g = gk(k).unwrap();
            g.check_closed().unwrap();
            assert_eq!(g.rules.len(), 5);
            for rhs in g.rules.values() {
                assert_eq!(rhs.to_string(), text);
            }
        }
    }

    #[test]
    fn quintuple_small() {
        assert_eq!(quintuple_poly(&Composition::empty()).to_string(), "z");
        assert_eq!(quintuple_poly(&"1".parse().unwrap()).to_string(), "x*z");
        let q = quintuple_poly(&"2,2".parse().unwrap());
        let expected = MultiPoly::from_terms(
            &LABEL_VARS,
            [
                (vec![0, 1, 0, 2, 2], BigInt::from(1)),
                (vec![0, 2, 0, 1, 2], BigInt::from(1)),
                (vec![0, 2, 0, 2, 1], BigInt::from(1)),
            ],
        );
        assert_eq!(q, expected);
        assert_eq!(q, quintuple_poly_by_enumeration(&"2,2".parse().unwrap()));
    }

    #[test]
    fn grammar_json() {
        let s = serde_json::to_string(&dumont()).unwrap();
        assert!(s.starts_with(r#"{"rules":{"x":{"vars":["x","y"]"#));
        let back: Grammar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, dumont());
    }
}
