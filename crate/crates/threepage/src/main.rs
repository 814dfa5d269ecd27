//! Command-line front end: parsing, balance tests, bracket projections,
//! abelian invariants, mirror/shift, equivalence proofs, the verification
//! suites, tangle images, fundamental-group reports, the graph
//! constructions, complexity bounds, and the census.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use threepage::{class_records, env_usize, fingerprint_record, run_census};
use threepage_core::abelian::{abelianize, center_image_member, functional_f};
use threepage_core::census::CensusOptions;
use threepage_core::complexity::{
    disjoint_union_general, edge_sum, loop_sum, theta_model, three_letters_presentation,
    tp_upper_bound, two_bridge_word, vertex_sum,
};
use threepage_core::error::Error;
use threepage_core::fundgroup::{
    count_homs, fingerprint, homology, neuwirth_presentation, tietze_simplify,
};
use threepage_core::pages::{
    arc_matching_general, bracket_projection, is_balanced, parse_general_word, Balance,
    GeneralWord,
};
use threepage_core::rewrite::{
    instantiate_relations, Budget, Mode, Prover, RuleSet, SuiteKind, SuiteRunner, SuiteWindow,
    Verdict,
};
use threepage_core::tangles::{close_tangle, omega, parse_tangle, phi};
use threepage_core::words::{parse_word, Alphabet, Word};

#[derive(Parser)]
#[command(
    name = "threepage",
    about = "Knots, links and spatial graphs as words over the three-page book",
    version
)]
struct Cli {
    /// Vertex degrees of the alphabet, e.g. "3,4"; empty for links only.
    #[arg(long, global = true, value_delimiter = ',')]
    degrees: Vec<u16>,
    /// Rule set: rigid or non-rigid vertex neighbourhoods.
    #[arg(long, global = true, value_enum, default_value_t = CliMode::Rsg)]
    mode: CliMode,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (census); THREEPAGE_JOBS overrides the default.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Prover state budget; THREEPAGE_MAX_STATES overrides the default.
    #[arg(long, global = true)]
    max_states: Option<usize>,
    /// Prover word-growth allowance; THREEPAGE_MAX_LEN_DELTA overrides.
    #[arg(long, global = true)]
    max_len_delta: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Rsg,
    Nsg,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a word and print its canonical spelling.
    Parse { word: Option<String> },
    /// Test whether a word is balanced (encodes a closed spatial graph).
    Balance { word: Option<String> },
    /// Print a bracket projection of a word.
    Beta {
        #[arg(short = 'i', long)]
        page: u8,
        word: Option<String>,
    },
    /// Print the abelianization of a word.
    Abelian { word: Option<String> },
    /// Print the mirror word.
    Mirror { word: Option<String> },
    /// Shift every page index by s.
    Shift {
        #[arg(short, long)]
        s: u8,
        word: Option<String>,
    },
    /// Prove or refute equality of two words in the semigroup.
    Prove {
        left: String,
        right: String,
        /// Derive the standard equivalence layer first (slower start,
        /// far stronger proofs).
        #[arg(long)]
        derived: bool,
    },
    /// Run a derived-equivalence verification suite.
    Verify {
        #[arg(value_enum)]
        suite: CliSuite,
        /// Largest sliding index instantiated.
        #[arg(long, default_value_t = 4)]
        l_max: u32,
    },
    /// Map a tangle word through the canonical embedding.
    Phi { tangle: Option<String> },
    /// Close a tangle word to a balanced word, if a closure is found.
    Close {
        tangle: Option<String>,
        #[arg(long, default_value_t = 6)]
        window: u32,
    },
    /// Print the fundamental-group presentation of the complement.
    Pi1 {
        #[arg(long)]
        simplify: bool,
        word: Option<String>,
    },
    /// Print the invariant fingerprint of a balanced word.
    Fingerprint { word: Option<String> },
    /// The two-bridge word S(p,q).
    Spq { p: u32, q: u32 },
    /// The trivial-graph embedding on k edges.
    Theta { k: usize },
    /// Combine two balanced words by a graph construction.
    Construct {
        #[arg(long, value_enum)]
        op: ConstructOp,
        left: String,
        right: String,
    },
    /// Three-letters presentation and generator bound.
    TlBound { word: Option<String> },
    /// Enumerate balanced words and group them into invariant classes.
    Census {
        #[arg(long, default_value_t = 8)]
        max_ar: usize,
        /// Enumerate arbitrary two-page vertex patterns.
        #[arg(long)]
        general: bool,
        /// Admit single-page points as well.
        #[arg(long)]
        single_page: bool,
        /// Merge mirror images when fingerprints agree (default on).
        #[arg(long, default_value_t = true)]
        merge_mirror: bool,
        /// Try to merge class members with the prover.
        #[arg(long)]
        prover_merge: bool,
    },
    /// Print the defining relation instances of the rule set.
    Relations,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliSuite {
    Claim1,
    Claim6,
    Lemma3,
    NsgPhi23,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructOp {
    Union,
    Vertex,
    Edge,
    Loop,
}

fn word_arg(arg: Option<String>) -> Result<String, Error> {
    match arg {
        Some(w) => Ok(w),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Precondition(format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let alphabet = Alphabet::with_degrees(cli.degrees.iter().copied())?;
    let mode = match cli.mode {
        CliMode::Rsg => Mode::Rsg,
        CliMode::Nsg => Mode::Nsg,
    };
    let budget = Budget {
        max_len_delta: cli
            .max_len_delta
            .unwrap_or_else(|| env_usize("THREEPAGE_MAX_LEN_DELTA", 8)),
        max_states: cli
            .max_states
            .unwrap_or_else(|| env_usize("THREEPAGE_MAX_STATES", 1_000_000)),
    };
    let jobs = cli.jobs.unwrap_or_else(|| {
        env_usize(
            "THREEPAGE_JOBS",
            std::thread::available_parallelism().map_or(1, |n| n.get()),
        )
    });
    match cli.command {
        Command::Parse { word } => {
            let batch = word_arg(word)?;
            for line in batch.lines().filter(|l| !l.trim().is_empty()) {
                let w = parse_word(line, &alphabet)?;
                println!("{}", w.render());
            }
            Ok(())
        }
        Command::Balance { word } => {
            let batch = word_arg(word)?;
            let mut all = true;
            for line in batch.lines().filter(|l| !l.trim().is_empty()) {
                let w = parse_word(line, &alphabet)?;
                match is_balanced(&w) {
                    Balance::Balanced => println!("balanced"),
                    Balance::Unbalanced { page, position } => {
                        all = false;
                        println!("unbalanced page {page} position {position}");
                    }
                }
            }
            if all {
                Ok(())
            } else {
                Err(Error::Precondition("input is unbalanced".into()))
            }
        }
        Command::Beta { page, word } => {
            if page > 2 {
                return Err(Error::BadPageIndex(format!("{page}")));
            }
            let gw = parse_general_word(&word_arg(word)?, &alphabet)?;
            // Bracket projection of general words: render stub runs.
            let mut s = String::new();
            for point in gw.points() {
                for d in point.stubs(page) {
                    s.push(match d {
                        threepage_core::pages::Dir::L => ')',
                        threepage_core::pages::Dir::R => '(',
                    });
                }
            }
            println!("{s}");
            Ok(())
        }
        Command::Abelian { word } => {
            let w = parse_word(&word_arg(word)?, &alphabet)?;
            let v = abelianize(&w);
            if cli.json {
                let f: Vec<i64> = (0..3).map(|i| functional_f(i, &v)).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "a": v.a,
                        "x": v.x.iter().map(|(m, k)| (m.to_string(), k)).collect::<std::collections::BTreeMap<_, _>>(),
                        "functionals": f,
                        "center_image": center_image_member(&v),
                    })
                );
            } else {
                println!("{v}");
            }
            Ok(())
        }
        Command::Mirror { word } => {
            let w = parse_word(&word_arg(word)?, &alphabet)?;
            println!("{}", w.mirror().render());
            Ok(())
        }
        Command::Shift { s, word } => {
            let w = parse_word(&word_arg(word)?, &alphabet)?;
            println!("{}", w.shift_index(s % 3).render());
            Ok(())
        }
        Command::Prove { left, right, derived } => {
            let u = parse_word(&left, &alphabet)?;
            let v = parse_word(&right, &alphabet)?;
            let verdict = if derived {
                let mut runner = SuiteRunner::new(
                    alphabet.clone(),
                    mode,
                    Budget {
                        max_len_delta: 8,
                        max_states: 300_000,
                    },
                    SuiteWindow::default(),
                );
                let prover = runner.enriched_prover()?;
                let mut p = prover_with_budget(prover, budget);
                p.prove(&u, &v)
            } else {
                let rules = RuleSet::new(instantiate_relations(&alphabet, mode));
                Prover::new(rules, budget).prove(&u, &v)
            };
            match verdict {
                Verdict::Proved(path) => {
                    println!("proved ({} moves)", path.len());
                    for mv in &path {
                        println!(
                            "{} {} {}",
                            mv.pos,
                            mv.rule_id,
                            match mv.dir {
                                threepage_core::rewrite::Direction::Fwd => "fwd",
                                threepage_core::rewrite::Direction::Rev => "rev",
                            }
                        );
                    }
                    Ok(())
                }
                Verdict::Refuted(w) => {
                    println!("refuted ({w:?})");
                    Err(Error::Precondition("the words are provably distinct".into()))
                }
                Verdict::Unknown { states } => {
                    println!("unknown (budget exhausted after {states} states)");
                    Err(Error::Precondition("no verdict within budget".into()))
                }
            }
        }
        Command::Verify { suite, l_max } => {
            let kind = match suite {
                CliSuite::Claim1 => SuiteKind::Claim1,
                CliSuite::Claim6 => SuiteKind::Claim6,
                CliSuite::Lemma3 => SuiteKind::Lemma3,
                CliSuite::NsgPhi23 => SuiteKind::NsgPhi23,
            };
            let mut runner = SuiteRunner::new(
                alphabet.clone(),
                mode,
                Budget {
                    max_len_delta: 8,
                    max_states: env_usize("THREEPAGE_SUITE_STATES", 300_000),
                },
                SuiteWindow { l_max },
            );
            let report = runner.run(kind)?;
            if cli.json {
                let items: Vec<_> = report
                    .items
                    .iter()
                    .map(|item| {
                        serde_json::json!({
                            "id": item.id,
                            "lhs": item.lhs.render(),
                            "rhs": item.rhs.render(),
                            "verdict": match item.verdict {
                                threepage_core::rewrite::ItemVerdict::Proved { moves } =>
                                    format!("proved:{moves}"),
                                threepage_core::rewrite::ItemVerdict::Refuted => "refuted".into(),
                                threepage_core::rewrite::ItemVerdict::Unknown => "unknown".into(),
                            },
                        })
                    })
                    .collect();
                println!("{}", serde_json::json!({ "items": items }));
            } else {
                for item in &report.items {
                    let verdict = match item.verdict {
                        threepage_core::rewrite::ItemVerdict::Proved { moves } => {
                            format!("proved ({moves})")
                        }
                        threepage_core::rewrite::ItemVerdict::Refuted => "REFUTED".into(),
                        threepage_core::rewrite::ItemVerdict::Unknown => "unknown".into(),
                    };
                    println!("{:40} {}", item.id, verdict);
                }
                println!("proved {}/{}", report.proved(), report.total());
            }
            if report.refuted() > 0 {
                return Err(Error::Precondition("a target was refuted".into()));
            }
            Ok(())
        }
        Command::Phi { tangle } => {
            let t = parse_tangle(&word_arg(tangle)?, &alphabet)?;
            println!("{}", phi(&t, &alphabet)?.render());
            Ok(())
        }
        Command::Close { tangle, window } => {
            let t = parse_tangle(&word_arg(tangle)?, &alphabet)?;
            println!("{}", close_tangle(&t, &alphabet, window)?.render());
            Ok(())
        }
        Command::Pi1 { simplify, word } => {
            let gw = parse_general_word(&word_arg(word)?, &alphabet)?;
            let model = arc_matching_general(&gw)?;
            let mut g = neuwirth_presentation(&model)?;
            if simplify {
                g = tietze_simplify(&g, 64);
            }
            let (rank, torsion) = homology(&g);
            let homs: Vec<Option<u64>> = vec![
                count_homs(&g, 3, threepage_core::fundgroup::HOM_BUDGET).ok(),
                count_homs(&g, 4, threepage_core::fundgroup::HOM_BUDGET).ok(),
            ];
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "generators": g.labels,
                        "relators": g.relators.iter().map(|r| g.render_relator(r)).collect::<Vec<_>>(),
                        "h1_rank": rank,
                        "h1_torsion": torsion,
                        "hom_s3": homs[0],
                        "hom_s4": homs[1],
                    })
                );
            } else {
                println!("generators ({}): {}", g.generators(), g.labels.join(" "));
                for r in &g.relators {
                    println!("relator: {}", g.render_relator(r));
                }
                println!("h1: rank {rank} torsion {torsion:?}");
                println!("hom s3: {:?}  hom s4: {:?}", homs[0], homs[1]);
            }
            Ok(())
        }
        Command::Fingerprint { word } => {
            let gw = parse_general_word(&word_arg(word)?, &alphabet)?;
            let model = arc_matching_general(&gw)?;
            let fp = fingerprint(&model)?;
            if cli.json {
                println!("{}", serde_json::to_string(&fingerprint_record(&fp)).unwrap());
            } else {
                println!("{}", fp.render());
            }
            Ok(())
        }
        Command::Spq { p, q } => {
            let w = two_bridge_word(p, q)?;
            let model = arc_matching_general(&GeneralWord::from_word(&w))?;
            println!("{}", w.render());
            eprintln!("ar={} tp<={}", model.arch_number(), tp_upper_bound(&model));
            Ok(())
        }
        Command::Theta { k } => {
            let model = theta_model(k)?;
            println!("{}", model.points().render());
            eprintln!("ar={} tp<={}", model.arch_number(), tp_upper_bound(&model));
            Ok(())
        }
        Command::Construct { op, left, right } => {
            let lg = parse_general_word(&left, &alphabet)?;
            let rg = parse_general_word(&right, &alphabet)?;
            let out = match op {
                ConstructOp::Union => disjoint_union_general(&lg, &rg)?,
                ConstructOp::Vertex => vertex_sum(&lg, &rg)?,
                ConstructOp::Edge => {
                    let (sum, page) = edge_sum(&lg, &rg)?;
                    eprintln!("edge page: {page}");
                    sum
                }
                ConstructOp::Loop => {
                    let lw = lg.specialize(&alphabet)?;
                    let rw = rg.specialize(&alphabet)?;
                    GeneralWord::from_word(&loop_sum(&lw, &rw)?)
                }
            };
            let model = arc_matching_general(&out)?;
            match out.specialize(&alphabet) {
                Ok(w) => println!("{}", w.render()),
                Err(_) => println!("{}", out.render()),
            }
            eprintln!("ar={} tp<={}", model.arch_number(), tp_upper_bound(&model));
            Ok(())
        }
        Command::TlBound { word } => {
            let gw = parse_general_word(&word_arg(word)?, &alphabet)?;
            let model = arc_matching_general(&gw)?;
            let (g, bound) = three_letters_presentation(&model)?;
            println!("tl <= {bound}");
            println!("generators ({}): {}", g.generators(), g.labels.join(" "));
            for r in &g.relators {
                println!("relator: {}", g.render_relator(r));
            }
            Ok(())
        }
        Command::Census {
            max_ar,
            general,
            single_page,
            merge_mirror,
            prover_merge,
        } => {
            let opts = CensusOptions {
                degrees: cli.degrees.clone(),
                general_vertices: general,
                single_page,
                max_ar,
                merge_mirror,
                prover_budget: prover_merge.then_some(Budget {
                    max_len_delta: 6,
                    max_states: 50_000,
                }),
                prover_sample: 6,
            };
            let report = run_census(&opts, jobs)?;
            if cli.json {
                for record in class_records(&report) {
                    println!("{}", serde_json::to_string(&record).unwrap());
                }
            } else {
                for class in &report.classes {
                    println!("{}", threepage_core::census::render_class(class));
                }
                println!();
                println!("counts per complexity (disjoint unions excluded):");
                for (cat, row) in report.rows() {
                    let total: usize = row.iter().sum();
                    if total > 0 {
                        println!(
                            "  {:15} {}",
                            cat.name(),
                            row.iter()
                                .map(|c| c.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Relations => {
            let rules = instantiate_relations(&alphabet, mode);
            for rule in &rules {
                println!(
                    "{}: {} = {}",
                    rule.id,
                    Word::from_letters(rule.lhs.clone()).render(),
                    Word::from_letters(rule.rhs.clone()).render()
                );
            }
            eprintln!("{} instances", rules.len());
            Ok(())
        }
    }
}

/// A fresh prover sharing the enriched rule set but with the CLI budget.
fn prover_with_budget(enriched: &Prover, budget: Budget) -> Prover {
    let mut p = Prover::new(enriched.rules().clone(), budget);
    p.clone_units_from(enriched);
    p
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
