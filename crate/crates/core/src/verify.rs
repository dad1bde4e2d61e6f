//! Batch verification over every composition up to a bound.
//!
//! Each suite returns one report. Work is spread over compositions with rayon,
//! but the first counterexample is always the first in colex order, so the
//! report does not depend on the thread count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::gamma::{
    classical_series_check, gamma_basis, partial_gamma, s_poly, verify_theorem, SeriesKind,
};
use crate::gfs::{
    canonical_rep, canonical_rep_greedy, classify_value, is_representative, orbit, phi, ValueClass,
};
use crate::grammar::{derive_n, dumont, quintuple_poly, quintuple_poly_by_enumeration};
use crate::jacobi::{compress, enumerate_jsp, jsp_poly, m_of_s, subsets_colex, verify_conjecture};
use crate::oracle;
use crate::poly::MultiPoly;
use crate::roots::{is_palindromic, is_real_rooted, s_mi};
use crate::stats::{labeling, profile};
use crate::words::{count, enumerate, is_stirling, Composition, Letter, Word};

/// The word used as the worked example throughout.
pub const RUNNING_EXAMPLE: &str = "15565333124411";

pub const JACOBI_MAX_N: u16 = 3;
pub const SERIES_MAX_N: usize = 4;
pub const SERIES_ORDER: usize = 8;
pub const DUMONT_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Counting,
    Statistics,
    LemmaEquidistribution,
    GrammarClaim,
    GfsProperties,
    Theorem,
    Jacobi,
    Realroot,
    Series,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Counting,
        Suite::Statistics,
        Suite::LemmaEquidistribution,
        Suite::GrammarClaim,
        Suite::GfsProperties,
        Suite::Theorem,
        Suite::Jacobi,
        Suite::Realroot,
        Suite::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counting => "counting",
            Suite::Statistics => "statistics",
            Suite::LemmaEquidistribution => "lemma-equidistribution",
            Suite::GrammarClaim => "grammar-claim",
            Suite::GfsProperties => "gfs-properties",
            Suite::Theorem => "theorem",
            Suite::Jacobi => "jacobi",
            Suite::Realroot => "realroot",
            Suite::Series => "series",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "suite",
                input: s.to_string(),
                reason: format!("expected one of {}", Suite::ALL.map(Suite::name).join(", ")),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub parameters: Value,
    pub cases: usize,
    pub verdict: Verdict,
    pub counterexample: Option<Value>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// What a suite found: how many items it checked, the first failure, and remarks.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub cases: usize,
    pub counterexample: Option<Value>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn merge(mut self, other: Outcome) -> Outcome {
        self.cases += other.cases;
        self.counterexample = self.counterexample.or(other.counterexample);
        self.notes.extend(other.notes);
        self
    }
}

fn first_failure<T, F>(items: &[T], check: F) -> Outcome
where
    T: Sync,
    F: Fn(&T) -> Option<Value> + Sync + Send,
{
    Outcome {
        cases: items.len(),
        counterexample: items.par_iter().find_map_first(check),
        notes: Vec::new(),
    }
}

fn fail(m: &Composition, check: &str, detail: Value) -> Option<Value> {
    Some(json!({ "composition": m.to_flag(), "check": check, "detail": detail }))
}

fn word_fail(m: &Composition, w: &Word, check: &str) -> Option<Value> {
    fail(m, check, json!({ "word": w.to_string() }))
}

/// `|enumerate(m)| = count(m)`, canonical order, validity, reversal, and agreement with brute force.
pub fn check_counting(comps: &[Composition]) -> Outcome {
    first_failure(comps, |m| {
        let words = enumerate(m);
        let expected = count(m);
        if BigInt::from(words.len()) != BigInt::from(expected.clone()) {
            return fail(
                m,
                "enumeration size equals product formula",
                json!({ "enumerated": words.len().to_string(), "formula": expected.to_string() }),
            );
        }
        if let Some(pair) = words.windows(2).find(|p| p[0] >= p[1]) {
            return fail(
                m,
                "strictly increasing order",
                json!({ "words": [pair[0].to_string(), pair[1].to_string()] }),
            );
        }
        for w in &words {
            if !is_stirling(w, m) {
                return word_fail(m, w, "every enumerated word is a Stirling permutation");
            }
            let r = w.reverse();
            if !is_stirling(&r, m) || r.reverse() != *w {
                return word_fail(m, w, "reversal is an involution on Q_m");
            }
        }
        let brute = oracle::stirling_words(m);
        if brute != words {
            let at = brute.iter().zip(&words).position(|(a, b)| a != b);
            return fail(
                m,
                "enumeration equals brute-force filter",
                json!({ "brute_force": brute.len().to_string(), "enumerated": words.len().to_string(), "first_difference": at }),
            );
        }
        None
    })
}

const PRINTED_EXAMPLE_NOTE: &str = "the printed example values ascpp=4, mdup=4 for 15565333124411 contradict the definitions; the computed ascpp=3, mdup=6 satisfy asc = dasc + ascpp and mdup + asc + fplat + sdes = m + 1";

/// Statistic values on the running example.
pub fn check_running_example() -> Option<Value> {
    let w: Word = RUNNING_EXAMPLE.parse().expect("literal word");
    let s = profile(&w);
    let l = labeling(&w);
    let got = json!({
        "asc": s.asc, "des": s.des, "plat": s.plat, "dasc": s.dasc, "sddes": s.sddes,
        "fdesp": s.fdesp, "ascpp": s.ascpp, "mdup": s.mdup,
        "labels": l.weight(), "labeling": l.to_string(),
    });
    let expected = json!({
        "asc": 5, "des": 5, "plat": 5, "dasc": 2, "sddes": 0, "fdesp": 1, "ascpp": 3, "mdup": 6,
        "labels": [1, 4, 3, 2, 5], "labeling": "zzYzxXYyXzzYXyX",
    });
    (got != expected)
        .then(|| json!({ "word": RUNNING_EXAMPLE, "expected": expected, "actual": got }))
}

/// Linear identities between the statistics and the labeling weights, on every word.
pub fn check_statistics(comps: &[Composition]) -> Outcome {
    let mut out = first_failure(comps, |m| {
        for w in enumerate(m) {
            let s = profile(&w);
            if let Err(identity) = s.check_identities(w.len()) {
                return fail(m, identity, json!({ "word": w.to_string(), "profile": s }));
            }
            let l = labeling(&w);
            if l.0.len() != w.len() + 1 || l.weight() != [s.sdes, s.mdes, s.fplat, s.uplat, s.asc] {
                return fail(
                    m,
                    "label counts equal (sdes, mdes, fplat, uplat, asc)",
                    json!({ "word": w.to_string(), "labeling": l.to_string(), "profile": s }),
                );
            }
        }
        None
    });
    out.cases += 1;
    out.counterexample = check_running_example().or(out.counterexample);
    out.notes.push(PRINTED_EXAMPLE_NOTE.to_string());
    out
}

fn histogram<K: Ord>(keys: impl Iterator<Item = K>) -> BTreeMap<K, usize> {
    let mut h = BTreeMap::new();
    for k in keys {
        *h.entry(k).or_insert(0) += 1;
    }
    h
}

/// Joint equidistributions: `(des, plat, asc) ~ (fplat+sdes, mdup, asc)` and
/// `(sdes, mdes, fplat, uplat, asc) ~ (sdes, fplat, mdes, uplat, asc)`.
pub fn check_lemma(comps: &[Composition]) -> Outcome {
    first_failure(comps, |m| {
        let profiles: Vec<_> = enumerate(m).iter().map(profile).collect();
        let a = histogram(profiles.iter().map(|s| (s.des, s.plat, s.asc)));
        let b = histogram(profiles.iter().map(|s| (s.fplat + s.sdes, s.mdup, s.asc)));
        if a != b {
            return fail(
                m,
                "(des, plat, asc) ~ (fplat+sdes, mdup, asc)",
                json!({
                    "left": format!("{a:?}"), "right": format!("{b:?}"),
                }),
            );
        }
        let c = histogram(
            profiles
                .iter()
                .map(|s| (s.sdes, s.mdes, s.fplat, s.uplat, s.asc)),
        );
        let d = histogram(
            profiles
                .iter()
                .map(|s| (s.sdes, s.fplat, s.mdes, s.uplat, s.asc)),
        );
        if c != d {
            return fail(
                m,
                "(sdes, mdes, fplat, uplat, asc) ~ (sdes, fplat, mdes, uplat, asc)",
                json!({
                    "left": format!("{c:?}"), "right": format!("{d:?}"),
                }),
            );
        }
        None
    })
}

/// `D^n(x)` under Dumont's grammar against `Σ x^asc y^des` over permutations of `[n]`.
pub fn check_dumont(max_n: usize) -> Outcome {
    let ns: Vec<usize> = (1..=max_n).collect();
    let mut out = first_failure(&ns, |&n| {
        let x = MultiPoly::var(&["x", "y"], "x");
        let derived = derive_n(&dumont(), &x, n).expect("closed grammar");
        let m = Composition::constant(n, 1).expect("positive parts");
        let mut eulerian = MultiPoly::zero(&["x", "y"]);
        for w in enumerate(&m) {
            let s = profile(&w);
            eulerian.add_term(vec![s.asc as u32, s.des as u32], BigInt::from(1));
        }
        (derived != eulerian).then(|| {
            json!({
                "check": "Dumont derivative equals bivariate Eulerian polynomial",
                "n": n, "derived": derived.to_string(), "enumerated": eulerian.to_string(),
            })
        })
    });
    let third = derive_n(&dumont(), &MultiPoly::var(&["x", "y"], "x"), 3)
        .expect("closed grammar")
        .to_string();
    if third != "x^3*y + 4*x^2*y^2 + x*y^3" && out.counterexample.is_none() {
        out.counterexample = Some(json!({ "check": "third Dumont derivative", "actual": third }));
    }
    out
}

/// The grammar derivative reproduces the label generating polynomial of `Q_m`.
pub fn check_grammar(comps: &[Composition]) -> Outcome {
    first_failure(comps, |m| {
        let derived = quintuple_poly(m);
        let counted = quintuple_poly_by_enumeration(m);
        (derived != counted).then(|| {
            json!({
                "composition": m.to_flag(),
                "check": "grammar derivative equals label generating polynomial",
                "derived": derived.to_json(),
                "enumerated": counted.to_json(),
            })
        })
    })
    .merge(check_dumont(DUMONT_MAX_N))
}

/// The three single moves and one double move printed for the running example.
pub fn check_printed_moves() -> Option<Value> {
    let w: Word = RUNNING_EXAMPLE.parse().expect("literal word");
    let cases: [(&[Letter], &str); 4] = [
        (&[1], "55653331124411"),
        (&[3], "13556533124411"),
        (&[2], "15565333144211"),
        (&[1, 3], "35565331124411"),
    ];
    cases.iter().find_map(|(set, expected)| {
        let got = crate::gfs::phi_set(&w, set).expect("letters of the word");
        let got = got.to_compact().expect("single-digit letters");
        (got != *expected).then(|| {
            json!({
                "check": "printed moves", "word": RUNNING_EXAMPLE, "set": set,
                "expected": expected, "actual": got,
            })
        })
    })
}

fn orbit_polynomial(words: &[Word]) -> MultiPoly {
    let mut p = MultiPoly::zero(&["x", "y"]);
    for w in words {
        let s = profile(w);
        p.add_term(
            vec![s.asc as u32, (s.fplat + s.sdes) as u32],
            BigInt::from(1),
        );
    }
    p
}

fn check_gfs_words(m: &Composition, words: &[Word]) -> Option<Value> {
    let n = m.n() as Letter;
    for w in words {
        let before = profile(w).mdup;
        for x in 1..=n {
            let y = phi(w, x).expect("letter present");
            let detail = || json!({ "word": w.to_string(), "x": x, "image": y.to_string() });
            if !is_stirling(&y, m) {
                return fail(m, "closure", detail());
            }
            if phi(&y, x).expect("letter present") != *w {
                return fail(m, "involution", detail());
            }
            let hops = classify_value(w, x).expect("letter present").hops_left();
            let lands =
                classify_value(&y, x).expect("letter present") == ValueClass::DoubleAscentValue;
            if hops != lands {
                return fail(m, "toggle", detail());
            }
            if profile(&y).mdup != before {
                return fail(m, "mdup invariance", detail());
            }
            for x2 in x + 1..=n {
                let a = phi(&y, x2).expect("letter present");
                let b = phi(&phi(w, x2).expect("letter present"), x).expect("letter present");
                if a != b {
                    return fail(
                        m,
                        "commutation",
                        json!({
                            "word": w.to_string(), "x": x, "y": x2,
                            "xy": a.to_string(), "yx": b.to_string(),
                        }),
                    );
                }
            }
        }
    }
    None
}

fn check_gfs_orbits(m: &Composition, words: &[Word]) -> Option<Value> {
    let mut groups: BTreeMap<Word, Vec<Word>> = BTreeMap::new();
    for w in words {
        groups.entry(canonical_rep(w)).or_default().push(w.clone());
    }
    let len = m.total();
    for (rep, members) in &groups {
        let detail = || json!({ "representative": rep.to_string(), "orbit_size": members.len() });
        let bfs = orbit(rep);
        if bfs.len() != members.len() || !members.iter().all(|w| bfs.contains(w)) {
            return fail(m, "orbit equals class of its representative", detail());
        }
        if !members.len().is_power_of_two() {
            return fail(m, "orbit size is a power of two", detail());
        }
        if members.iter().filter(|w| is_representative(w)).count() != 1 || !is_representative(rep) {
            return fail(m, "exactly one representative per orbit", detail());
        }
        let s = profile(rep);
        if s.asc.checked_sub(s.dasc) != Some(s.fplat + s.sdes) || s.fplat + s.sdes != s.ascpp {
            return fail(
                m,
                "asc - dasc = fplat + sdes = ascpp at the representative",
                json!({
                    "representative": rep.to_string(), "profile": s,
                }),
            );
        }
        let rest = (len + 1).checked_sub(s.mdup + 2 * s.ascpp);
        if rest != Some(s.dasc) {
            return fail(
                m,
                "dasc = m + 1 - mdup - 2 ascpp at the representative",
                json!({
                    "representative": rep.to_string(), "profile": s,
                }),
            );
        }
        let lhs = orbit_polynomial(members);
        let rhs = gamma_basis((len + 1 - s.mdup) as u32, s.ascpp as u32);
        if lhs != rhs {
            return fail(
                m,
                "orbit sum equals (xy)^ascpp (x+y)^dasc",
                json!({
                    "representative": rep.to_string(), "orbit_sum": lhs.to_string(), "expected": rhs.to_string(),
                }),
            );
        }
    }
    None
}

/// Group-action properties on every word and every orbit.
pub fn check_gfs(comps: &[Composition]) -> Outcome {
    let mut out = first_failure(comps, |m| {
        let words = enumerate(m);
        check_gfs_words(m, &words).or_else(|| check_gfs_orbits(m, &words))
    });
    out.cases += 1;
    out.counterexample = check_printed_moves().or(out.counterexample);
    let overflows: usize = comps
        .par_iter()
        .map(|m| {
            enumerate(m)
                .iter()
                .filter(|w| canonical_rep_greedy(w).is_none())
                .count()
        })
        .sum();
    out.notes.push(if overflows == 0 {
        "greedy representative search settled within n moves on every word".to_string()
    } else {
        format!("greedy representative search exceeded n moves on {overflows} words; orbit fallback used")
    });
    out
}

/// γ-expansion of `S_m` against the representative count, entry by entry.
pub fn check_theorem(comps: &[Composition]) -> Outcome {
    first_failure(comps, |m| {
        let r = verify_theorem(m);
        (!r.passed).then(|| serde_json::to_value(&r).expect("report JSON"))
    })
}

fn set_json(s: &BTreeSet<u16>) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

/// The barred-alphabet bridge for every `S ⊆ [n]`, plus level-wise γ-positivity.
pub fn check_jacobi(max_n: u16) -> Outcome {
    let cases: Vec<(u16, BTreeSet<u16>)> = (1..=max_n)
        .flat_map(|n| {
            (0..=n as usize).flat_map(move |k| subsets_colex(n, k).into_iter().map(move |s| (n, s)))
        })
        .collect();
    let mut out = first_failure(&cases, |(n, s)| {
        let m = m_of_s(*n, s).expect("subset of [n]");
        let detail = |check: &str| {
            Some(json!({ "n": n, "set": set_json(s), "composition": m.to_flag(), "check": check }))
        };
        let words = enumerate_jsp(*n, s).expect("subset of [n]");
        let letters: Vec<Vec<Letter>> = words.iter().map(|w| w.letters().to_vec()).collect();
        if letters != oracle::jacobi_stirling_words(*n, s) {
            return detail("pulled-back enumeration equals brute-force filter");
        }
        if words.iter().any(|w| !is_stirling(&compress(w), &m)) {
            return detail("compression lands in Q_m(S)");
        }
        if jsp_poly(*n, s).expect("subset of [n]") != s_poly(&m) {
            return detail("Jacobi-Stirling polynomial equals S_m(S)");
        }
        None
    });
    let levels: Vec<u16> = (1..=max_n).collect();
    out = out.merge(first_failure(&levels, |&n| {
        let r = verify_conjecture(n);
        (!r.passed).then(|| serde_json::to_value(&r).expect("report JSON"))
    }));
    let printed = m_of_s(7, &BTreeSet::from([1, 2, 5, 7])).expect("subset of [7]");
    out.cases += 1;
    if printed.parts() != [2, 2, 1, 2, 1, 2, 2, 1, 2, 2] {
        out.counterexample = out.counterexample.or(Some(json!({
            "check": "m(S) for n = 7, S = {1, 2, 5, 7}", "actual": printed.to_flag(),
        })));
    }
    out
}

/// Sturm certification of every nonzero `S_{m,i}` plus palindromicity, and the
/// same for every `z`-slice read at `x = 1`.
pub fn check_realroot(comps: &[Composition]) -> Outcome {
    first_failure(comps, |m| {
        let slices = s_poly(m).z_slices().expect("variables x, y, z");
        for i in 0..m.total() {
            let p = s_mi(m, i);
            let slice = slices.iter().find(|(k, _)| *k == i).map(|(_, s)| s.clone());
            let from_slice = slice
                .map(|s| {
                    s.specialize(&[("x", 1)])
                        .to_uni("y")
                        .expect("univariate in y")
                })
                .unwrap_or_else(crate::poly::UniPoly::zero);
            let detail =
                |check: &str| fail(m, check, json!({ "i": i, "polynomial": p.to_string() }));
            if from_slice != p {
                return detail("S_{m,i} equals the z^i slice at x = 1, y = x");
            }
            if p.is_zero() {
                continue;
            }
            if !is_real_rooted(&p).expect("nonzero") {
                return detail("real-rooted");
            }
            if !is_palindromic(&p).expect("nonzero") {
                return detail("palindromic");
            }
        }
        match partial_gamma(&s_poly(m)) {
            Ok(t) if t.is_positive() => None,
            _ => fail(
                m,
                "real-rooted palindromic slices are gamma-positive",
                Value::Null,
            ),
        }
    })
}

/// Classical series identities for `(1, ..., 1)` and `(2, ..., 2)`.
pub fn check_series(max_n: usize, order: usize) -> Outcome {
    let cases: Vec<(SeriesKind, usize)> = [SeriesKind::Eulerian, SeriesKind::SecondOrder]
        .into_iter()
        .flat_map(|k| (1..=max_n).map(move |n| (k, n)))
        .collect();
    first_failure(&cases, |&(kind, n)| {
        let r = classical_series_check(kind, n, order);
        (!r.passed).then(|| serde_json::to_value(&r).expect("report JSON"))
    })
}

/// Runs one suite over all compositions with total `1..=max_total`.
pub fn run_suite(suite: Suite, max_total: usize) -> VerifyReport {
    let start = Instant::now();
    let comps = Composition::all_up_to(max_total);
    let (parameters, outcome) = match suite {
        Suite::Counting => (json!({ "max_total": max_total }), check_counting(&comps)),
        Suite::Statistics => (json!({ "max_total": max_total }), check_statistics(&comps)),
        Suite::LemmaEquidistribution => (json!({ "max_total": max_total }), check_lemma(&comps)),
        Suite::GrammarClaim => (
            json!({ "max_total": max_total, "dumont_max_n": DUMONT_MAX_N }),
            check_grammar(&comps),
        ),
        Suite::GfsProperties => (json!({ "max_total": max_total }), check_gfs(&comps)),
        Suite::Theorem => (json!({ "max_total": max_total }), check_theorem(&comps)),
        Suite::Jacobi => (json!({ "max_n": JACOBI_MAX_N }), check_jacobi(JACOBI_MAX_N)),
        Suite::Realroot => (json!({ "max_total": max_total }), check_realroot(&comps)),
        Suite::Series => (
            json!({ "max_n": SERIES_MAX_N, "order": SERIES_ORDER }),
            check_series(SERIES_MAX_N, SERIES_ORDER),
        ),
    };
    VerifyReport {
        suite,
        parameters,
        cases: outcome.cases,
        verdict: if outcome.passed() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        counterexample: outcome.counterexample,
        notes: outcome.notes,
        wall_time: start.elapsed(),
    }
}

/// Runs `suites` in order on a pool of `jobs` threads (`0` picks the machine default).
pub fn verify_suites(
    suites: &[Suite],
    max_total: usize,
    jobs: usize,
) -> Result<Vec<VerifyReport>, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(|| suites.iter().map(|&s| run_suite(s, max_total)).collect()))
}

pub fn verify_all(
    max_total: usize,
    jobs: usize,
) -> Result<Vec<VerifyReport>, rayon::ThreadPoolBuildError> {
    verify_suites(&Suite::ALL, max_total, jobs)
}

fn render_parameters(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

pub fn render_text(reports: &[VerifyReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{verdict} {} {} cases={}\n",
            r.suite,
            render_parameters(&r.parameters),
            r.cases
        ));
        for note in &r.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        if let Some(c) = &r.counterexample {
            out.push_str(&format!("  counterexample: {c}\n"));
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} suites, {failed} failed\n", reports.len()));
    out
}

pub fn render_json(reports: &[VerifyReport]) -> String {
    serde_json::to_string_pretty(reports).expect("report JSON") + "\n"
}
