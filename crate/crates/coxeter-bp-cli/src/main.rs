use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use coxeter_bp::bench::{bench_bp_poset, DEFAULT_SEED, NAIVE_LIMIT};
use coxeter_bp::bruhat::DEFAULT_LENGTH_CAP;
use coxeter_bp::export::{bp_poset_dot, interval_dot};
use coxeter_bp::lehmer::{SearchOptions, SearchOutcome};
use coxeter_bp::perm::ElementFormat;
use coxeter_bp::schubert::{schubert_polynomial, SchubertCalculus};
use coxeter_bp::suite::{self, Status, SuiteOptions};
use coxeter_bp::{CoxeterSystem, CoxeterType, Element, Error, GenSet, RootSystem};

#[derive(Parser)]
#[command(name = "coxbp", version, about = "Billey-Postnikov decompositions, Bruhat intervals, Lehmer codes and Schubert constants")]
struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Also write a Graphviz file (interval, bp --poset)
    #[arg(long, global = true, value_name = "FILE")]
    dot: Option<String>,
    /// Longest element length for interval enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_LENGTH_CAP)]
    cap_length: usize,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Long-running checks to add to verify-paper (no value: all of them)
    #[arg(long, global = true, num_args = 0.., value_name = "CHECK")]
    include_long: Option<Vec<String>>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SystemArgs {
    /// A, B, C, D, E, F, G, H, I2, E6, F4, G2, H3, H4, affineA2, affineC2, affineG2
    #[arg(long = "type")]
    kind: String,
    /// Rank (or m for I2)
    #[arg(long)]
    rank: Option<usize>,
}

impl SystemArgs {
    fn build(&self) -> Result<CoxeterSystem, Error> {
        CoxeterSystem::build(&self.kind, self.rank)
    }
}

#[derive(Args, Clone)]
struct ElementArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Element: one-line notation, reduced word, or generator letters
    #[arg(long)]
    w: String,
    /// Parabolic subset, e.g. 1,3 or {1,3} or rs
    #[arg(long = "J")]
    j: Option<String>,
    #[arg(long, default_value = "auto")]
    format: String,
}

struct Parsed {
    sys: CoxeterSystem,
    w: Element,
    j: Option<GenSet>,
}

impl ElementArgs {
    fn parse(&self) -> Result<Parsed, Error> {
        let sys = self.system.build()?;
        let w = sys.parse_element(&self.w, self.format.parse::<ElementFormat>()?)?;
        let j = self.j.as_deref().map(|t| sys.parse_genset(t)).transpose()?;
        Ok(Parsed { sys, w, j })
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Def,
    Poincare,
    Jstar,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Lemma {
    Simple,
    Union,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Coxeter matrix, order and degrees
    Info(SystemArgs),
    /// BP test for one J, the whole family, or the BP poset
    Bp {
        #[command(flatten)]
        e: ElementArgs,
        /// Use one test only (default: all that apply)
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[arg(long)]
        poset: bool,
        /// Use the type A pattern algorithm for the poset
        #[arg(long)]
        fast: bool,
    },
    /// J-stars and non-BP witnesses of J
    Jstars {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long = "J")]
        j: String,
    },
    /// Rational smoothness (palindromic Poincare polynomial)
    Rs(ElementArgs),
    /// The lower interval [e, w]^J
    Interval(ElementArgs),
    /// Poincare polynomial of [e, w]^J
    Poincare(ElementArgs),
    /// A generalized Lehmer code for [e, w]^J
    Lehmer {
        #[command(flatten)]
        e: ElementArgs,
        /// Search even when an explicit construction applies
        #[arg(long)]
        search: bool,
        /// Search budget in seconds
        #[arg(long, default_value_t = 600)]
        budget: u64,
    },
    /// Schubert polynomials, structure constants and structure matrices (type A)
    Schubert {
        /// Permutation in one-line notation
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
        /// Rank k of the structure matrix
        #[arg(long)]
        k: Option<usize>,
        /// Also report the canonical bijection
        #[arg(long)]
        bijection: bool,
    },
    /// Verify the simple-root and union lemmas
    LemmaCheck {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value = "both")]
        lemma: Lemma,
    },
    /// Run the reproduction suite
    VerifyPaper {
        /// Run only these checks
        #[arg(long)]
        only: Vec<String>,
        /// List the checks and exit
        #[arg(long)]
        list: bool,
    },
    /// Time the exhaustive BP poset against the type A pattern algorithm
    Bench {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = NAIVE_LIMIT)]
        naive_limit: usize,
    },
}

struct Out {
    json: String,
    text: String,
    dot: Option<String>,
    ok: bool,
}

fn out(value: impl Serialize, text: impl Into<String>) -> Out {
    Out {
        json: serde_json::to_string_pretty(&value).expect("serializable"),
        text: text.into(),
        dot: None,
        ok: true,
    }
}

fn labels(sys: &CoxeterSystem, j: GenSet) -> String {
    let names: Vec<&str> = j.iter().map(|s| sys.label(s)).collect();
    format!("{{{}}}", names.join(","))
}

fn run(cli: &Cli) -> Result<Out, Error> {
    match &cli.command {
        Command::Info(s) => {
            let sys = s.build()?;
            let order = match sys.kind() {
                CoxeterType::AffineA2 | CoxeterType::AffineC2 | CoxeterType::AffineG2 => None,
                _ => Some(sys.elements(None)?.len()),
            };
            let degrees = sys.degrees();
            let roots = RootSystem::new(&sys).ok().map(|r| r.len());
            let text = format!(
                "{}: rank {}, order {}, degrees {}, positive roots {}",
                sys.name(),
                sys.rank(),
                order.map_or("infinite".into(), |o| o.to_string()),
                degrees.as_ref().map_or("-".into(), |d| format!("{d:?}")),
                roots.map_or("-".into(), |r| r.to_string()),
            );
            Ok(out(
                json!({ "system": sys.to_json(), "order": order, "degrees": degrees, "positive_roots": roots }),
                text,
            ))
        }
        Command::Bp { e, method, poset, fast } => {
            let Parsed { sys, w, j } = e.parse()?;
            if *poset {
                let p = if *fast { sys.typea_bp_poset(&w)? } else { sys.bp_poset(&w)? };
                let mut text = String::new();
                for (i, b) in p.blocks.iter().enumerate() {
                    text += &format!("block {i}: {}\n", labels(&sys, *b));
                }
                for [a, b] in p.covers() {
                    text += &format!("{} < {}\n", labels(&sys, p.blocks[a]), labels(&sys, p.blocks[b]));
                }
                let mut o = out(p.to_json(), text.trim_end());
                o.dot = Some(bp_poset_dot(&sys, &p));
                return Ok(o);
            }
            let Some(j) = j else {
                let family = sys.bp_family(&w)?;
                let sets: Vec<String> = family.members.iter().map(|&m| labels(&sys, m)).collect();
                return Ok(out(&family, format!("BP({}) = {{{}}}", sys.format_element(&w), sets.join(", "))));
            };
            let methods = match method {
                Some(m) => vec![*m],
                None if RootSystem::new(&sys).is_ok() => vec![Method::Def, Method::Poincare, Method::Jstar],
                None => vec![Method::Def, Method::Poincare],
            };
            let mut verdicts = serde_json::Map::new();
            for m in &methods {
                let (name, v) = match m {
                    Method::Def => ("def", sys.is_bp(&w, j)?),
                    Method::Poincare => ("poincare", sys.is_bp_poincare(&w, j)?),
                    Method::Jstar => ("jstar", RootSystem::new(&sys)?.jstar_bp_test(&w, j)?),
                };
                verdicts.insert(name.into(), v.into());
            }
            let text = if methods.len() == 1 {
                verdicts.values().next().expect("one verdict").to_string()
            } else {
                verdicts.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("\n")
            };
            Ok(out(json!({ "w": w, "J": j, "bp": verdicts }), text))
        }
        Command::Jstars { system, j } => {
            let sys = system.build()?;
            let roots = RootSystem::new(&sys)?;
            let j = sys.parse_genset(j)?;
            let stars: Vec<_> = roots.enumerate_jstars(j).iter().map(|s| roots.jstar_json(s)).collect();
            let table = roots.star_table(j);
            let witnesses: Vec<_> = table
                .witnesses
                .iter()
                .map(|&(b, t)| json!({ "beta": roots.root(b), "tau": roots.root(t) }))
                .collect();
            let mut text = format!("{} J-stars, {} witnesses\n", stars.len(), witnesses.len());
            for s in roots.enumerate_jstars(j) {
                let arms: Vec<String> = s.arms.iter().map(|&(c, g)| format!("{c}*({:?})", roots.root(g))).collect();
                text += &format!("beta = {:?}; arms {}; tau = {:?}\n", roots.root(s.beta), arms.join(", "), roots.root(s.tau));
            }
            Ok(out(json!({ "J": j, "jstars": stars, "witnesses": witnesses }), text.trim_end()))
        }
        Command::Rs(e) => {
            let Parsed { sys, w, j } = e.parse()?;
            let j = j.unwrap_or(GenSet::EMPTY);
            let p = sys.interval_capped(&w, j, cli.cap_length)?.poincare();
            let smooth = p.is_palindromic();
            Ok(out(
                json!({ "w": w, "J": j, "poincare": p, "rationally_smooth": smooth }),
                format!("P = {p}\n{}", if smooth { "rationally smooth" } else { "not rationally smooth" }),
            ))
        }
        Command::Interval(e) => {
            let Parsed { sys, w, j } = e.parse()?;
            let iv = sys.interval_capped(&w, j.unwrap_or(GenSet::EMPTY), cli.cap_length)?;
            let mut text = String::new();
            for (k, rank) in iv.ranks.iter().enumerate() {
                let names: Vec<String> = rank.iter().map(|v| sys.format_element(v)).collect();
                text += &format!("{k}: {}\n", names.join(" "));
            }
            let mut o = out(iv.to_json(&sys), text.trim_end());
            o.dot = Some(interval_dot(&sys, &iv));
            Ok(o)
        }
        Command::Poincare(e) => {
            let Parsed { sys, w, j } = e.parse()?;
            let p = sys.interval_capped(&w, j.unwrap_or(GenSet::EMPTY), cli.cap_length)?.poincare();
            Ok(out(&p, p.to_string()))
        }
        Command::Lehmer { e, search, budget } => {
            let Parsed { sys, w, j } = e.parse()?;
            let j = j.unwrap_or(GenSet::EMPTY);
            let constructive = matches!(sys.kind(), CoxeterType::A(_)) && !search;
            let outcome = match constructive.then(|| sys.quotient_lehmer_code(&w, j)) {
                Some(Ok(code)) => SearchOutcome::Found { code },
                _ => {
                    let iv = sys.interval_capped(&w, j, cli.cap_length)?;
                    let options = SearchOptions {
                        budget: Duration::from_secs(*budget),
                        parallel: true,
                    };
                    sys.search_code(&iv, &options)
                }
            };
            let text = match &outcome {
                SearchOutcome::Found { code } => {
                    let mut t = format!("chains {:?}\n", code.chains);
                    for entry in &code.entries {
                        let tuple: Vec<String> = entry.tuple.iter().map(|x| x.to_string()).collect();
                        t += &format!("({}) -> {}\n", tuple.join(","), sys.format_element(&entry.element));
                    }
                    t
                }
                SearchOutcome::NoneExists { candidates } => format!("no code exists; refuted chain multisets {candidates:?}"),
                SearchOutcome::Unknown { candidates, refuted } => {
                    format!("undecided within budget; candidates {candidates:?}, refuted {refuted:?}")
                }
            };
            let mut o = out(&outcome, text.trim_end());
            o.ok = !matches!(outcome, SearchOutcome::Unknown { .. });
            Ok(o)
        }
        Command::Schubert { w, u, v, k, bijection } => schubert(w, u.as_deref(), v.as_deref(), *k, *bijection),
        Command::LemmaCheck { system, lemma } => {
            let roots = RootSystem::new(&system.build()?)?;
            let mut result = serde_json::Map::new();
            let mut text = Vec::new();
            let mut ok = true;
            if *lemma != Lemma::Union {
                let r = roots.verify_simple_root_lemma_all();
                ok &= r.passed();
                text.push(format!("simple-root lemma: {} cases, {} violations", r.checked, r.violations.len()));
                result.insert("simple_root".into(), serde_json::to_value(&r).expect("serializable"));
            }
            if *lemma != Lemma::Simple {
                let r = roots.verify_union_lemma_all();
                ok &= r.passed();
                text.push(format!("union lemma: {} cases, {} violations", r.checked, r.violations.len()));
                result.insert("union".into(), serde_json::to_value(&r).expect("serializable"));
            }
            let mut o = out(result, text.join("\n"));
            o.ok = ok;
            Ok(o)
        }
        Command::VerifyPaper { only, list } => {
            if *list {
                let text: Vec<String> = suite::CHECKS
                    .iter()
                    .map(|c| format!("{:<18} {}{}", c.name, c.summary, if c.long { " (long)" } else { "" }))
                    .collect();
                let names: Vec<&str> = suite::CHECKS.iter().map(|c| c.name).collect();
                return Ok(out(names, text.join("\n")));
            }
            for name in only.iter().chain(cli.include_long.iter().flatten()) {
                if name != "all" && suite::find(name).is_none() {
                    return Err(Error::Usage(format!("unknown check {name:?}")));
                }
            }
            let include_long = match &cli.include_long {
                Some(v) if v.is_empty() => vec!["all".to_string()],
                Some(v) => v.clone(),
                None => Vec::new(),
            };
            let options = SuiteOptions {
                seed: cli.seed,
                ..SuiteOptions::default()
            };
            let results = suite::run(only, &include_long, &options);
            let mut text = String::new();
            for r in &results {
                let status = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                text += &format!("{status} {:<18} {:>8.2}s  {}\n", r.name, r.seconds, r.summary);
                for d in &r.details {
                    text += &format!("     {d}\n");
                }
            }
            let mut o = out(&results, text.trim_end());
            o.ok = results.iter().all(|r| r.status != Status::Fail);
            Ok(o)
        }
        Command::Bench { n, samples, naive_limit } => {
            let report = bench_bp_poset(*n, *samples, cli.seed, *naive_limit)?;
            let mut o = out(&report, report.to_string().trim_end());
            o.ok = report.all_agree();
            Ok(o)
        }
    }
}

fn schubert(w: &str, u: Option<&str>, v: Option<&str>, k: Option<usize>, bijection: bool) -> Result<Out, Error> {
    let perm = |t: &str| -> Result<Vec<usize>, Error> {
        Ok(coxeter_bp::perm::parse_one_line(t, None)?.into_iter().map(|x| x as usize).collect())
    };
    let wp = perm(w)?;
    let calc = SchubertCalculus::new();
    match (u, v, k) {
        (Some(u), Some(v), None) => {
            let (up, vp) = (perm(u)?, perm(v)?);
            let c = calc.structure_constant(&up, &vp, &wp);
            Ok(out(json!({ "u": up, "v": vp, "w": wp, "c": c }), c.to_string()))
        }
        (None, None, Some(k)) => {
            let sys = CoxeterSystem::build("A", Some(wp.len().max(2) - 1))?;
            let we = sys.from_permutation(&wp)?;
            let m = sys.structure_matrix_with(&calc, &we, k)?;
            let cols: Vec<String> = m.cols.iter().map(|c| sys.format_element(c)).collect();
            let mut text = format!("columns: {}\n", cols.join(" "));
            for (r, row) in m.rows.iter().zip(&m.entries) {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                text += &format!("{}: {}\n", sys.format_element(r), cells.join(" "));
            }
            text += &format!("upper unitriangular: {}", m.is_upper_unitriangular());
            let mut value = json!({ "matrix": m, "upper_unitriangular": m.is_upper_unitriangular() });
            if bijection {
                let phi = sys.canonical_bijection(&we, k)?;
                for (a, b) in &phi {
                    text += &format!("\n{} -> {}", sys.format_element(a), sys.format_element(b));
                }
                value["bijection"] = serde_json::to_value(&phi).expect("serializable");
            }
            Ok(out(value, text))
        }
        (None, None, None) => {
            let s = schubert_polynomial(&wp)?;
            Ok(out(
                json!({ "w": wp, "polynomial": s.poly.to_string() }),
                s.poly.to_string(),
            ))
        }
        _ => Err(Error::Usage("give --u and --v, or --k, or neither".into())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(o) => {
            let body = if cli.json {
                o.json
            } else {
                o.text
            };
            let _ = writeln!(io::stdout(), "{body}");
            if let Some(path) = &cli.dot {
                match &o.dot {
                    Some(d) => {
                        if let Err(e) = fs::write(path, d) {
                            eprintln!("error: cannot write {path}: {e}");
                            return ExitCode::from(2);
                        }
                    }
                    None => eprintln!("note: this command has no graph to export"),
                }
            }
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
