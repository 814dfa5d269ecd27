use threepage_core::rewrite::{Mode, SuiteKind, SuiteRunner};
use threepage_core::words::Alphabet;
use std::time::Instant;

fn main() {
    for n in [2u16, 3, 6] {
        let t0 = Instant::now();
        let mut runner = SuiteRunner::with_defaults(Alphabet::n_graphs(n), Mode::Rsg);
        let report = runner.run(SuiteKind::Claim1).unwrap();
        println!(
            "n={n} claim1: {}/{} proved in {:?}",
            report.proved(), report.total(), t0.elapsed()
        );
        for id in report.unproved_ids().iter().take(12) {
            println!("  unproved: {id}");
        }
        if n == 6 {
            let t1 = Instant::now();
            let c6 = runner.run(SuiteKind::Claim6).unwrap();
            println!("n=6 claim6: {}/{} proved in {:?}", c6.proved(), c6.total(), t1.elapsed());
            for id in c6.unproved_ids().iter().take(12) { println!("  unproved: {id}"); }
            let t2 = Instant::now();
            let l3 = runner.run(SuiteKind::Lemma3).unwrap();
            println!("n=6 lemma3: {}/{} proved in {:?}", l3.proved(), l3.total(), t2.elapsed());
            for id in l3.unproved_ids().iter().take(20) { println!("  unproved: {id}"); }
            let t3 = Instant::now();
            let mut nrunner = SuiteRunner::with_defaults(Alphabet::n_graphs(6), Mode::Nsg);
            let np = nrunner.run(SuiteKind::NsgPhi23).unwrap();
            println!("n=6 nsg-phi23: {}/{} proved in {:?}", np.proved(), np.total(), t3.elapsed());
            for id in np.unproved_ids().iter().take(12) { println!("  unproved: {id}"); }
        }
    }
}
