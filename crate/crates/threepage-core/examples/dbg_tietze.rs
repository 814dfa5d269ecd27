use threepage_core::fundgroup::*;
use threepage_core::pages::arc_matching;
use threepage_core::words::{parse_word, Alphabet};

fn main() {
    let w = parse_word("a0 a1 b2 b0 c1 c2", &Alphabet::links()).unwrap();
    let m = arc_matching(&w).unwrap();
    let g = neuwirth_presentation(&m).unwrap();
    println!("raw: gens={} relators={:?}", g.generators(), g.relators);
    let mut cur = g.clone();
    for pass in 0..8 {
        let next = tietze_simplify(&cur, 1);
        println!("pass {pass}: gens={} relators={:?}", next.generators(), next.relators);
        if next == cur { break; }
        cur = next;
    }
}
