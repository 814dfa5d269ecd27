//! Integration tests for the rule sets, the prover, the normal forms and the
//! verification suites.

use threepage_core::abelian::{abelianize, signed_bracket_count};
use threepage_core::pages::is_balanced;
use threepage_core::rewrite::{
    apply_move, b_members, eliminate_to_core, instantiate_relations, mu_encoding, replay,
    segment_members, star_complete, star_normal_form, Budget, Direction, Mode, Prover, RuleSet,
    SuiteKind, SuiteRunner, Verdict,
};
use threepage_core::words::{parse_word, Alphabet, Kind, Letter, Word};

fn w(text: &str, n: u16) -> Word {
    parse_word(text, &Alphabet::n_graphs(n)).unwrap()
}

/// Wraps `side` into a balanced word: a vertex-parity appendix if needed,
/// an opening prefix of a-letters and a closing suffix of c-letters.
fn balancing_wrapper(side: &[Letter]) -> Option<Word> {
    let appendices: Vec<Vec<Letter>> = vec![
        vec![],
        vec![Letter::new(Kind::X(3), 0)],
        vec![Letter::new(Kind::X(3), 1)],
        vec![Letter::new(Kind::X(3), 2)],
    ];
    for appendix in &appendices {
        let mut body = side.to_vec();
        body.extend_from_slice(appendix);
        let len = body.len() + 2;
        for t in 0..=3 * len {
            // Prefix (a0 a1 a2)^t opens t+t per page; close the surpluses.
            let mut letters = Vec::new();
            for _ in 0..t {
                for i in 0..3 {
                    letters.push(Letter::new(Kind::A, i));
                }
            }
            letters.extend_from_slice(&body);
            // Per-page surplus after the prefix and body.
            let probe = Word::from_letters(letters.clone());
            let mut surplus = [0i64; 3];
            let mut ok = true;
            for page in 0..3u8 {
                let mut s = 0i64;
                for &l in probe.letters() {
                    let (c, o) = threepage_core::pages::stub_counts(l, page);
                    s -= c as i64;
                    if s < 0 {
                        ok = false;
                    }
                    s += o as i64;
                }
                surplus[page as usize] = s;
            }
            if !ok {
                continue;
            }
            let total: i64 = surplus.iter().sum();
            if total % 2 != 0 {
                break; // parity cannot change with a/c letters
            }
            let q: Vec<i64> = (0..3)
                .map(|j| total / 2 - surplus[j as usize])
                .collect();
            if q.iter().any(|&x| x < 0) {
                continue;
            }
            for (j, &count) in q.iter().enumerate() {
                for _ in 0..count {
                    letters.push(Letter::new(Kind::C, j as u8));
                }
            }
            let candidate = Word::from_letters(letters);
            if is_balanced(&candidate).is_balanced() {
                return Some(candidate);
            }
        }
    }
    None
}

#[test]
fn relations_are_well_defined() {
    for n in [2u16, 3, 6] {
        for mode in [Mode::Rsg, Mode::Nsg] {
            let alphabet = Alphabet::n_graphs(n);
            for rule in instantiate_relations(&alphabet, mode) {
                let lhs = Word::from_letters(rule.lhs.clone());
                let rhs = Word::from_letters(rule.rhs.clone());
                assert_eq!(abelianize(&lhs), abelianize(&rhs), "{}", rule.id);
                for page in 0..3 {
                    assert_eq!(
                        signed_bracket_count(&lhs, page),
                        signed_bracket_count(&rhs, page),
                        "{} page {page}",
                        rule.id
                    );
                }
                // Both sides are balanced inside a single wrapper: build the
                // wrapper for the left side, substitute the right side.
                let wrapped = balancing_wrapper(&rule.lhs)
                    .unwrap_or_else(|| panic!("no wrapper for {}", rule.id));
                let pos = wrapped
                    .letters()
                    .windows(rule.lhs.len().max(1))
                    .position(|win| win == rule.lhs.as_slice());
                if let (Some(pos), false) = (pos, rule.lhs.is_empty()) {
                    let mut other = wrapped.letters().to_vec();
                    other.splice(pos..pos + rule.lhs.len(), rule.rhs.iter().copied());
                    assert!(
                        is_balanced(&Word::from_letters(other)).is_balanced(),
                        "{}: right side unbalances the wrapper",
                        rule.id
                    );
                }
            }
        }
    }
}

#[test]
fn moves_invert() {
    let alphabet = Alphabet::n_graphs(3);
    let rules = RuleSet::new(instantiate_relations(&alphabet, Mode::Rsg));
    let word = w("a0 d1 x3_0 b0 d0", 3);
    for rule in rules.rules() {
        for pos in 0..=word.len() {
            if let Ok(next) = apply_move(&word, rule, pos, Direction::Fwd) {
                let back = apply_move(&next, rule, pos, Direction::Rev).unwrap();
                assert_eq!(back, word, "{} at {pos}", rule.id);
            }
        }
    }
}

#[test]
fn prover_certificates_replay() {
    let alphabet = Alphabet::links();
    let rules = RuleSet::new(instantiate_relations(&alphabet, Mode::Rsg));
    let prover = Prover::new(rules, Budget::default());
    let pairs = [
        ("a0 d1", "a2"),
        ("b0 d0", ""),
        ("d0 d1 d2", ""),
        ("a0 c0", "a1 c1"),
        ("a0 c0", "a2 c2"),
    ];
    for (l, r) in pairs {
        let u = w(l, 2);
        let v = w(r, 2);
        match prover.prove(&u, &v) {
            Verdict::Proved(path) => {
                assert_eq!(replay(prover.rules(), &u, &path).unwrap(), v, "{l} = {r}");
            }
            other => panic!("{l} = {r}: {other:?}"),
        }
    }
}

#[test]
fn unknown_is_reported_not_coerced() {
    let alphabet = Alphabet::links();
    let rules = RuleSet::new(instantiate_relations(&alphabet, Mode::Rsg));
    let prover = Prover::new(
        rules,
        Budget {
            max_len_delta: 2,
            max_states: 4,
        },
    );
    // Equal words, but the budget is far too small to find the chain.
    let verdict = prover.prove(&w("a0 c0", 2), &w("a2 c2", 2));
    assert!(matches!(verdict, Verdict::Unknown { .. }));
}

#[test]
fn core_elimination_examples() {
    let alphabet = Alphabet::n_graphs(3);
    let mut runner = SuiteRunner::with_defaults(alphabet.clone(), Mode::Rsg);
    let prover = runner.enriched_prover().unwrap();
    // b1 at index 0 becomes d2 d0.
    let (out, path) = eliminate_to_core(&w("b1", 3), 0, prover.rules()).unwrap();
    assert_eq!(out.render(), "d2 d0");
    assert_eq!(replay(prover.rules(), &w("b1", 3), &path).unwrap(), out);
    // a2 at index 0 unfolds through a0 d1 and lands on core letters.
    let (out, path) = eliminate_to_core(&w("a2", 3), 0, prover.rules()).unwrap();
    assert_eq!(out.render(), "a0 b0 b2");
    assert_eq!(path[0].rule_id, "R3.1[i=2]"); // the a2 = a0 d1 unfolding
    assert!(prover.prove(&w("a2", 3), &out).is_proved());
    // Core words are fixpoints.
    let fixed = w("a0 b0 x3_0 b2 d2", 3);
    let (out, path) = eliminate_to_core(&fixed, 0, prover.rules()).unwrap();
    assert_eq!(out, fixed);
    assert!(path.is_empty());
}

#[test]
fn star_forms() {
    let alphabet = Alphabet::n_graphs(3);
    let mut runner = SuiteRunner::with_defaults(alphabet.clone(), Mode::Rsg);
    let prover = runner.enriched_prover().unwrap();
    // Star completion duplicates the bracket around each bullet.
    let (completed, _) = star_complete(&w("b2 a0 a0 d2", 2), 0, prover.rules()).unwrap();
    assert_eq!(completed.render(), "b2 a0 d2 b2 a0 d2");
    assert_eq!(mu_encoding(&completed, 0), "(•)(•)");
    // Depth-two stars reduce and the result decomposes into members.
    for text in ["b2 b2 a0 d2 d2", "b2 b2 x3_0 d2 d2", "b2 a0 a0 d2 a0"] {
        let word = w(text, 3);
        let (nf, path) = star_normal_form(
            &eliminate_to_core(&word, 0, prover.rules()).unwrap().0,
            0,
            prover.rules(),
        )
        .unwrap();
        assert!(
            segment_members(nf.letters(), 0).is_some(),
            "{text} -> {} does not decompose",
            nf.render()
        );
        // The whole chain replays from the original word.
        let (core, mut full) = eliminate_to_core(&word, 0, prover.rules()).unwrap();
        let _ = core;
        full.extend(path);
        assert_eq!(replay(prover.rules(), &word, &full).unwrap(), nf);
        // And the result is provably equivalent.
        assert!(prover.prove(&word, &nf).is_proved(), "{text}");
    }
    // Members of the commuting set parse as themselves.
    for member in b_members(&alphabet, 1) {
        assert!(segment_members(&member, 1).is_some());
    }
}

#[test]
fn mirror_involutivity_up_to_relations() {
    for mode in [Mode::Rsg, Mode::Nsg] {
        let alphabet = Alphabet::n_graphs(4);
        let mut runner = SuiteRunner::with_defaults(alphabet.clone(), mode);
        let prover = runner.enriched_prover().unwrap();
        for letter in alphabet.letters() {
            let word = Word::from_letters(vec![letter]);
            let twice = word.mirror().mirror();
            assert!(
                prover.prove(&twice, &word).is_proved(),
                "mirror² on {letter} in {mode:?}"
            );
        }
    }
}

#[test]
fn suite_counts_at_n2() {
    let mut runner = SuiteRunner::with_defaults(Alphabet::links(), Mode::Rsg);
    let claim1 = runner.run(SuiteKind::Claim1).unwrap();
    assert_eq!(claim1.proved(), claim1.total());
    assert_eq!(claim1.refuted(), 0);
    let lemma3 = runner.run(SuiteKind::Lemma3).unwrap();
    assert_eq!(lemma3.proved(), lemma3.total());
}
