//! Property tests for the word, page, abelian and construction invariants.

use proptest::prelude::*;

use threepage_core::abelian::{
    abelianize, center_image_member, functional_f, signed_bracket_count,
};
use threepage_core::census::{enumerate_balanced, CensusOptions};
use threepage_core::pages::{
    arc_matching, arc_matching_general, is_balanced, GeneralWord,
};
use threepage_core::words::{Alphabet, Kind, Letter, Word};

fn letter_strategy(n: u16) -> impl Strategy<Value = Letter> {
    let kinds: Vec<Kind> = {
        let mut v = vec![Kind::A, Kind::B, Kind::C, Kind::D];
        v.extend((3..=n).map(Kind::X));
        v
    };
    (0..kinds.len(), 0u8..3).prop_map(move |(k, page)| Letter::new(kinds[k], page))
}

fn word_strategy(n: u16, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(letter_strategy(n), 0..max_len).prop_map(Word::from_letters)
}

proptest! {
    #[test]
    fn parse_render_round_trip(w in word_strategy(6, 24)) {
        let alphabet = Alphabet::n_graphs(6);
        let parsed = threepage_core::words::parse_word(&w.render(), &alphabet).unwrap();
        prop_assert_eq!(parsed, w);
    }

    #[test]
    fn mirror_is_anti_homomorphism(u in word_strategy(6, 12), v in word_strategy(6, 12)) {
        prop_assert_eq!(u.concat(&v).mirror(), v.mirror().concat(&u.mirror()));
    }

    #[test]
    fn shift_commutes_with_concat(u in word_strategy(6, 12), v in word_strategy(6, 12), s in 0u8..3) {
        prop_assert_eq!(
            u.concat(&v).shift_index(s),
            u.shift_index(s).concat(&v.shift_index(s))
        );
        // Bijection: shifting by the complement undoes it.
        prop_assert_eq!(u.shift_index(s).shift_index((3 - s) % 3), u);
    }

    #[test]
    fn abelianize_is_a_homomorphism(u in word_strategy(6, 16), v in word_strategy(6, 16)) {
        let mut sum = abelianize(&u);
        sum.add_assign(&abelianize(&v));
        let direct = abelianize(&u.concat(&v));
        // Normalize zero entries on the sum side by re-encoding.
        prop_assert_eq!(direct.a, sum.a);
        for (m, k) in &sum.x {
            prop_assert_eq!(direct.x.get(m).copied().unwrap_or(0), *k);
        }
    }

    #[test]
    fn functionals_equal_signed_bracket_counts(w in word_strategy(6, 24)) {
        let v = abelianize(&w);
        for page in 0..3 {
            prop_assert_eq!(functional_f(page, &v), signed_bracket_count(&w, page));
        }
    }

    #[test]
    fn shift_preserves_balance_and_arch(w in word_strategy(4, 16), s in 0u8..3) {
        let shifted = w.shift_index(s);
        prop_assert_eq!(is_balanced(&w).is_balanced(), is_balanced(&shifted).is_balanced());
        if is_balanced(&w).is_balanced() {
            prop_assert_eq!(
                arc_matching(&w).unwrap().arch_number(),
                arc_matching(&shifted).unwrap().arch_number()
            );
        }
    }

    #[test]
    fn mirror_preserves_balance(w in word_strategy(4, 16)) {
        prop_assert_eq!(
            is_balanced(&w).is_balanced(),
            is_balanced(&w.mirror()).is_balanced()
        );
    }

    #[test]
    fn arch_number_is_half_the_stub_count(w in word_strategy(6, 16)) {
        if is_balanced(&w).is_balanced() {
            let degrees: usize = w.letters().iter().map(|l| l.degree() as usize).sum();
            let model = arc_matching(&w).unwrap();
            prop_assert_eq!(model.arch_number(), degrees / 2);
        }
    }
}

#[test]
fn balanced_words_map_into_the_center_image() {
    // Every enumerated balanced word (including vertex letters) lands in
    // the admissible set.
    let opts = CensusOptions {
        degrees: vec![3],
        general_vertices: false,
        single_page: false,
        max_ar: 5,
        merge_mirror: true,
        prover_budget: None,
        prover_sample: 1,
    };
    let alphabet = Alphabet::n_graphs(3);
    let mut count = 0usize;
    enumerate_balanced(&opts, |gw| {
        let w = gw.specialize(&alphabet).expect("alphabet letters");
        assert!(center_image_member(&abelianize(&w)), "{}", w.render());
        count += 1;
    });
    assert!(count > 50, "enumerator produced only {count} words");
}

#[test]
fn enumerated_words_are_balanced_and_fingerprints_shift_invariant() {
    let opts = CensusOptions::links(6);
    let mut checked = 0usize;
    enumerate_balanced(&opts, |gw| {
        assert!(threepage_core::pages::general_balance(&gw).is_balanced());
        if checked < 40 {
            let fp = threepage_core::census::fingerprint_word(&gw).unwrap().1;
            for s in 1..3 {
                let rot = gw.shift_index(s);
                let fp2 = threepage_core::census::fingerprint_word(&rot).unwrap().1;
                assert_eq!(fp, fp2);
            }
            checked += 1;
        }
    });
    assert!(checked >= 40);
}

#[test]
fn general_word_mirror_preserves_arch_number() {
    let w = threepage_core::complexity::two_bridge_word(3, 2).unwrap();
    let gw = GeneralWord::from_word(&w);
    let mirrored = gw.mirror();
    assert_eq!(
        arc_matching_general(&gw).unwrap().arch_number(),
        arc_matching_general(&mirrored).unwrap().arch_number()
    );
}
