//! The defining relations of the encoding semigroups, two-sided rewriting
//! moves over them, an equivalence prover with replayable certificates, and
//! the derived-equivalence verification suites.
//!
//! Words are equal in the semigroup exactly when a chain of relation moves
//! connects them. The word problem here has no known decision procedure, so
//! the prover returns one of three verdicts: a move path (`Proved`), an
//! invariant witness (`Refuted`), or `Unknown` when the search budget runs
//! out. `Unknown` is a legal outcome and is always reported as such.

mod normal;
mod prover;
mod rules;
mod suite;

pub use normal::{
    b_members, depth, eliminate_to_core, mu_encoding, segment_members, star_complete,
    star_normal_form,
};
pub use prover::{Direction, MoveRec, Prover, RefutedWitness, Verdict};
pub use rules::{d_word, instantiate_relations, Mode, Rule, RuleSet};
pub use suite::{ItemVerdict, SuiteItem, SuiteKind, SuiteReport, SuiteRunner, SuiteWindow};

use crate::error::{Error, Result};
use crate::words::Word;

/// Search limits for the prover.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Words may grow to `max(|u|, |v|) + max_len_delta` letters.
    pub max_len_delta: usize,
    /// Total states across both search directions.
    pub max_states: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_len_delta: 8,
            max_states: 1_000_000,
        }
    }
}

/// Replaces one side of `rule` by the other at `pos`.
pub fn apply_move(word: &Word, rule: &Rule, pos: usize, dir: Direction) -> Result<Word> {
    let (from, to) = match dir {
        Direction::Fwd => (&rule.lhs, &rule.rhs),
        Direction::Rev => (&rule.rhs, &rule.lhs),
    };
    let letters = word.letters();
    if pos > letters.len() || letters.len() - pos < from.len() || &letters[pos..pos + from.len()] != from.as_slice() {
        return Err(Error::NoOccurrence {
            rule: rule.id.clone(),
            position: pos,
        });
    }
    let mut out = alloc::vec::Vec::with_capacity(letters.len() - from.len() + to.len());
    out.extend_from_slice(&letters[..pos]);
    out.extend_from_slice(to);
    out.extend_from_slice(&letters[pos + from.len()..]);
    Ok(Word::from_letters(out))
}

/// Replays a certificate: applies each recorded move in order.
pub fn replay(rules: &RuleSet, start: &Word, path: &[MoveRec]) -> Result<Word> {
    let mut w = start.clone();
    for mv in path {
        let rule = rules
            .by_id(&mv.rule_id)
            .ok_or_else(|| Error::UnknownRule(mv.rule_id.clone()))?;
        w = apply_move(&w, rule, mv.pos, mv.dir)?;
    }
    Ok(w)
}
