use threepage_core::rewrite::{Mode, SuiteKind, SuiteRunner};
use threepage_core::words::{parse_word, Alphabet};
use threepage_core::tangles::{parse_tangle, phi};

fn main() {
    let a = Alphabet::n_graphs(6);
    let mut runner = SuiteRunner::with_defaults(a.clone(), Mode::Rsg);
    let _ = runner.run(SuiteKind::Claim6).unwrap();
    let prover = runner.prover();
    // T21 waypoints as coded in the suite
    let stations = [
        "d2 b1 d2 d1 b2 b2 b1 d2 d1 b2 d2 b1 d2 d1 b2 b2", // lhs phi(sig2 sig1 sig2)
        "d2 b1 d2 d1 b2 b2 b1 d2 d2 d1 b2 b2",             // M1
        "d2 d0 b1 d2 d1 b2 d2 d2 d1 b2 b2",                // M3
        "b1 b1 d2 d1 d2 d1 b2 b2",                          // M4
        "b1 b1 d2 b0 d1 d0 d1 b2",                          // M6
        "b1 b1 b0 d2 d1 b2 d0 d2 d1 b2",                    // M8
        "b1 d2 d2 d1 b2 b2 b1 d2 d1 b2",                    // M10
        "b1 d2 d1 b2 d2 b1 d2 d1 b2 b2 b1 d2 d1 b2",        // rhs phi(sig1 sig2 sig1)
    ];
    let t21 = parse_tangle("sig2 sig1 sig2", &a).unwrap();
    println!("lhs actual: {}", phi(&t21, &a).unwrap().render());
    let t21r = parse_tangle("sig1 sig2 sig1", &a).unwrap();
    println!("rhs actual: {}", phi(&t21r, &a).unwrap().render());
    for pair in stations.windows(2) {
        let u = parse_word(pair[0], &a).unwrap();
        let v = parse_word(pair[1], &a).unwrap();
        let verdict = prover.prove(&u, &v);
        println!("{} -> {} : {}", pair[0], pair[1], match verdict {
            threepage_core::rewrite::Verdict::Proved(p) => format!("proved {}", p.len()),
            threepage_core::rewrite::Verdict::Refuted(_) => "REFUTED".into(),
            threepage_core::rewrite::Verdict::Unknown{states} => format!("unknown {states}"),
        });
    }
}
