use threepage_core::pages::{abstract_graph, arc_matching, is_balanced};
use threepage_core::words::{parse_word, Alphabet, Kind, Letter, Word};
use threepage_core::rewrite::{Mode, SuiteRunner, Verdict};

fn main() {
    let a = Alphabet::n_graphs(3);
    // The printed two-vertex example word, unbalanced as printed.
    let printed = parse_word("a1 x3_1 d2 a1 b2 b0 c1 d0 x3_1 d2 b2 c1", &a).unwrap();
    println!("printed balanced: {:?}", is_balanced(&printed));
    // Candidate repair: flip the second-to-last letter b2 -> c2.
    let repaired = parse_word("a1 x3_1 d2 a1 b2 b0 c1 d0 x3_1 d2 c2 c1", &a).unwrap();
    println!("repaired balanced: {:?}", is_balanced(&repaired));
    if is_balanced(&repaired).is_balanced() {
        let g = abstract_graph(&arc_matching(&repaired).unwrap());
        println!("repaired graph: {g:?}");
    }
    // Exhaustive minimal-edit search: single-position substitutions.
    let mut found = vec![];
    for pos in 0..printed.len() {
        for cand in a.letters() {
            let mut letters = printed.letters().to_vec();
            if letters[pos] == cand { continue; }
            letters[pos] = cand;
            let w = Word::from_letters(letters);
            let xs = w.letters().iter().filter(|l| matches!(l.kind, Kind::X(_))).count();
            if xs == 2 && is_balanced(&w).is_balanced() {
                let g = abstract_graph(&arc_matching(&w).unwrap());
                if g.components == 1 && g.vertex_degrees == vec![3, 3] {
                    found.push((pos, cand, w.render()));
                }
            }
        }
    }
    println!("single-edit repairs with one connected 3,3 graph:");
    for (pos, cand, w) in &found {
        println!("  pos {pos} -> {cand}: {w}");
    }
    // Mirror involutivity via the enriched prover at n=4.
    let a4 = Alphabet::n_graphs(4);
    for mode in [Mode::Rsg, Mode::Nsg] {
        let mut runner = SuiteRunner::with_defaults(a4.clone(), mode);
        let prover = runner.enriched_prover().unwrap();
        for l in a4.letters() {
            let w = Word::from_letters(vec![l]);
            let mm = w.mirror().mirror();
            let verdict = prover.prove(&mm, &w);
            let tag = match &verdict {
                Verdict::Proved(p) => format!("proved {}", p.len()),
                Verdict::Refuted(_) => "REFUTED".into(),
                Verdict::Unknown { states } => format!("unknown {states}"),
            };
            if !matches!(verdict, Verdict::Proved(_)) {
                println!("mode {mode:?} letter {l}: {tag}");
            }
        }
        println!("mode {mode:?}: involutivity checked for all letters");
    }
}
