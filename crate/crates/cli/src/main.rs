use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use stirling_gamma::gamma::{gamma_combinatorial, partial_gamma, s_poly, verify_theorem};
use stirling_gamma::gfs::{canonical_rep, classify_value, orbit, phi, phi_set};
use stirling_gamma::grammar::{derive_n, dumont, gk, quintuple_poly};
use stirling_gamma::jacobi::{enumerate_jsp, jsp_level_poly, jsp_poly, m_of_s, verify_conjecture};
use stirling_gamma::roots::{real_root_report, stability_probe};
use stirling_gamma::verify::{render_json, render_text, verify_suites, Suite};
use stirling_gamma::{labeling, profile, Composition, Letter, MultiPoly, Word};

#[derive(Parser)]
#[command(
    name = "stirling",
    version,
    about = "Exact computations on generalized Stirling permutations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List every Stirling permutation of a multiset.
    Enumerate {
        #[arg(long)]
        m: Composition,
        /// Include the statistic profile of each word.
        #[arg(long)]
        stats: bool,
    },
    /// Print the generating polynomial of Q_m.
    Poly {
        #[arg(long)]
        m: Composition,
        /// `s` for x^asc y^des z^plat, `labels` for the five-variable label polynomial.
        #[arg(long, value_enum, default_value_t = PolyKind::S)]
        kind: PolyKind,
    },
    /// Partial gamma-expansion of S_m.
    Gamma {
        #[arg(long)]
        m: Composition,
        /// Count representatives instead of expanding the polynomial.
        #[arg(long, conflicts_with = "check")]
        combinatorial: bool,
        /// Compare both sides entry by entry.
        #[arg(long)]
        check: bool,
    },
    /// Grammar derivatives.
    Grammar(GrammarArgs),
    /// The Foata–Strehl group action.
    Gfs(GfsArgs),
    /// Jacobi–Stirling permutations.
    Jacobi(JacobiArgs),
    /// Sturm certificate for S_{m,i}(x).
    Realroot {
        #[arg(long)]
        m: Composition,
        #[arg(long)]
        i: usize,
    },
    /// Randomized search for an upper half-plane zero of S_m(x, y, z).
    Probe {
        #[arg(long)]
        m: Composition,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Statistic profile and labeling of one word.
    Stats {
        #[arg(long)]
        word: Word,
    },
    /// Run verification suites.
    Verify {
        /// Suite to run; repeat for several. Defaults to all suites.
        #[arg(long, value_parser = parse_suite)]
        suite: Vec<Suite>,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max_total: u64,
        /// Worker threads; 0 uses the machine's parallelism.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Print per-suite wall time to stderr.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    S,
    Labels,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GrammarArgs {
    /// Print D^N(x) under Dumont's grammar.
    #[arg(long, value_name = "N")]
    dumont: Option<usize>,
    /// Derive the label polynomial of Q_m from z.
    #[arg(long)]
    m: Option<Composition>,
    /// Print the rules of the grammar G_k.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct GfsArgs {
    #[arg(long)]
    word: Word,
    #[command(flatten)]
    action: GfsAction,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GfsAction {
    #[arg(long, value_name = "X")]
    phi: Option<Letter>,
    #[arg(long, value_name = "SET", value_parser = parse_letters)]
    phi_set: Option<Letters>,
    #[arg(long)]
    orbit: bool,
    #[arg(long)]
    rep: bool,
    #[arg(long, value_name = "X")]
    classify: Option<Letter>,
}

#[derive(Args)]
struct JacobiArgs {
    #[arg(long)]
    n: u16,
    #[command(flatten)]
    action: JacobiAction,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct JacobiAction {
    /// Removed barred letters, e.g. `1,3`; empty for none.
    #[arg(long, value_parser = parse_set)]
    set: Option<BTreeSet<u16>>,
    /// Sum over all subsets of this size.
    #[arg(long)]
    level: Option<usize>,
    /// Check gamma-positivity at every level.
    #[arg(long)]
    conjecture: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: stirling_gamma::Error| e.to_string())
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

#[derive(Clone)]
struct Letters(Vec<Letter>);

fn parse_letters(s: &str) -> Result<Letters, String> {
    parse_list(s).map(Letters)
}

fn parse_set(s: &str) -> Result<BTreeSet<u16>, String> {
    Ok(parse_list(s)?.into_iter().collect())
}

/// Failure modes that are not clap parse errors.
enum Failure {
    Usage(String),
    Verification,
}

impl From<stirling_gamma::Error> for Failure {
    fn from(e: stirling_gamma::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn no_csv(what: &str) -> Failure {
    Failure::Usage(format!("--format csv is not available for {what}"))
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON output"));
}

fn print_poly(p: &MultiPoly, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => print_json(p),
        Format::Csv => {
            println!("{},coefficient", p.vars().join(","));
            for (e, c) in p.terms_grlex() {
                let exps: Vec<String> = e.iter().map(u32::to_string).collect();
                println!("{},{c}", exps.join(","));
            }
        }
    }
}

fn print_words<'a>(words: impl IntoIterator<Item = &'a Word>, format: Format) {
    let words: Vec<&Word> = words.into_iter().collect();
    match format {
        Format::Json => print_json(&words.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
        Format::Text | Format::Csv => {
            if format == Format::Csv {
                println!("word");
            }
            for w in words {
                println!(
                    "{}",
                    if format == Format::Csv {
                        format!("\"{w}\"")
                    } else {
                        w.to_string()
                    }
                );
            }
        }
    }
}

fn verdict(passed: bool) -> Outcome {
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Enumerate { m, stats } => {
            let words = stirling_gamma::words::enumerate(&m);
            if !stats {
                print_words(&words, format);
                return Ok(());
            }
            let rows: Vec<_> = words.iter().map(|w| (w, profile(w))).collect();
            match format {
                Format::Text => {
                    for (w, s) in rows {
                        println!(
                            "{w}  asc={} plat={} des={} mdup={} ascpp={}",
                            s.asc, s.plat, s.des, s.mdup, s.ascpp
                        );
                    }
                }
                Format::Json => print_json(
                    &rows
                        .iter()
                        .map(|(w, s)| json!({ "word": w.to_string(), "profile": s }))
                        .collect::<Vec<_>>(),
                ),
                Format::Csv => {
                    println!("word,asc,plat,des,sdes,mdes,fplat,uplat,dasc,sddes,fdesp,ascpp,mdup");
                    for (w, s) in rows {
                        println!(
                            "\"{w}\",{},{},{},{},{},{},{},{},{},{},{},{}",
                            s.asc,
                            s.plat,
                            s.des,
                            s.sdes,
                            s.mdes,
                            s.fplat,
                            s.uplat,
                            s.dasc,
                            s.sddes,
                            s.fdesp,
                            s.ascpp,
                            s.mdup
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Poly { m, kind } => {
            let p = match kind {
                PolyKind::S => s_poly(&m),
                PolyKind::Labels => quintuple_poly(&m),
            };
            print_poly(&p, format);
            Ok(())
        }
        Command::Gamma {
            m,
            combinatorial,
            check,
        } => {
            if check {
                let report = verify_theorem(&m);
                match format {
                    Format::Json => print_json(&report),
                    Format::Text => println!(
                        "{} {}",
                        if report.passed { "PASS" } else { "FAIL" },
                        serde_json::to_string(&report).expect("JSON output")
                    ),
                    Format::Csv => return Err(no_csv("gamma --check")),
                }
                return verdict(report.passed);
            }
            let table = if combinatorial {
                gamma_combinatorial(&m)
            } else {
                partial_gamma(&s_poly(&m))?
            };
            match format {
                Format::Json => print_json(&table),
                Format::Csv => print!("{}", table.to_csv()),
                Format::Text => {
                    for ((i, j), g) in &table.entries {
                        println!("gamma[{i},{j}] = {g}");
                    }
                }
            }
            Ok(())
        }
        Command::Grammar(args) => {
            if let Some(n) = args.dumont {
                let x = MultiPoly::var(&["x", "y"], "x");
                print_poly(&derive_n(&dumont(), &x, n)?, format);
            } else if let Some(m) = args.m {
                print_poly(&quintuple_poly(&m), format);
            } else if let Some(k) = args.k {
                let g = gk(k)?;
                match format {
                    Format::Json => print_json(&g),
                    Format::Text => {
                        for (v, rhs) in &g.rules {
                            println!("{v} -> {rhs}");
                        }
                    }
                    Format::Csv => return Err(no_csv("grammar --k")),
                }
            }
            Ok(())
        }
        Command::Gfs(GfsArgs { word, action }) => {
            if let Some(x) = action.phi {
                print_words([&phi(&word, x)?], format);
            } else if let Some(set) = action.phi_set {
                print_words([&phi_set(&word, &set.0)?], format);
            } else if action.orbit {
                print_words(&orbit(&word), format);
            } else if action.rep {
                print_words([&canonical_rep(&word)], format);
            } else if let Some(x) = action.classify {
                let class = classify_value(&word, x)?;
                match format {
                    Format::Json => print_json(&class),
                    _ => println!("{class:?}"),
                }
            }
            Ok(())
        }
        Command::Jacobi(JacobiArgs { n, action }) => {
            if let Some(set) = action.set {
                let m = m_of_s(n, &set)?;
                let words = enumerate_jsp(n, &set)?;
                let poly = jsp_poly(n, &set)?;
                match format {
                    Format::Json => print_json(&json!({
                        "composition": m.to_flag(),
                        "words": words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                        "polynomial": poly,
                    })),
                    Format::Text => {
                        println!("m(S) = {m}");
                        println!("polynomial = {poly}");
                        for w in &words {
                            println!("{w}");
                        }
                    }
                    Format::Csv => return Err(no_csv("jacobi --set")),
                }
            } else if let Some(level) = action.level {
                if level > n as usize {
                    return Err(Failure::Usage(format!("--level {level} exceeds --n {n}")));
                }
                print_poly(&jsp_level_poly(n, level), format);
            } else {
                let report = verify_conjecture(n);
                match format {
                    Format::Json => print_json(&report),
                    Format::Text => {
                        for l in &report.levels {
                            println!(
                                "level {}: {}",
                                l.level,
                                if l.positive && l.matches_stirling_sum {
                                    "gamma-positive"
                                } else {
                                    "FAILED"
                                }
                            );
                        }
                    }
                    Format::Csv => return Err(no_csv("jacobi --conjecture")),
                }
                return verdict(report.passed);
            }
            Ok(())
        }
        Command::Realroot { m, i } => {
            let r = real_root_report(&m, i);
            match format {
                Format::Json => print_json(&r),
                Format::Text => {
                    println!("S_{{{m},{i}}}(x) = {}", r.polynomial);
                    println!("real-rooted: {}", r.real_rooted);
                    println!("palindromic: {}", r.palindromic);
                    println!(
                        "sturm chain lengths: {} (polynomial), {} (squarefree part)",
                        r.sturm_chain_len, r.squarefree_chain_len
                    );
                }
                Format::Csv => return Err(no_csv("realroot")),
            }
            verdict(r.degree.is_none() || (r.real_rooted && r.palindromic))
        }
        Command::Probe { m, trials, seed } => {
            if trials == 0 {
                return Err(Failure::Usage("--trials must be at least 1".into()));
            }
            let r = stability_probe(&s_poly(&m), trials, seed);
            match format {
                Format::Json => print_json(&r),
                Format::Text => match &r.counterexample {
                    Some(c) => println!(
                        "zero found: {}",
                        serde_json::to_string(c).expect("JSON output")
                    ),
                    None => println!("{}", r.disclaimer.as_deref().unwrap_or_default()),
                },
                Format::Csv => return Err(no_csv("probe")),
            }
            verdict(r.counterexample.is_none())
        }
        Command::Stats { word } => {
            let s = profile(&word);
            let l = labeling(&word);
            match format {
                Format::Json => {
                    print_json(&json!({ "word": word.to_string(), "profile": s, "labeling": l }))
                }
                Format::Text => {
                    println!("{}", serde_json::to_string(&s).expect("JSON output"));
                    println!("labeling: {l}");
                }
                Format::Csv => return Err(no_csv("stats")),
            }
            Ok(())
        }
        Command::Verify {
            suite,
            max_total,
            jobs,
            timings,
        } => {
            let suites = if suite.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suite
            };
            let reports = verify_suites(&suites, max_total as usize, jobs)
                .map_err(|e| Failure::Usage(format!("--jobs: {e}")))?;
            match format {
                Format::Json => print!("{}", render_json(&reports)),
                Format::Text => print!("{}", render_text(&reports)),
                Format::Csv => return Err(no_csv("verify")),
            }
            if timings {
                for r in &reports {
                    eprintln!("{}: {:.3}s", r.suite, r.wall_time.as_secs_f64());
                }
            }
            verdict(reports.iter().all(|r| r.passed()))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
