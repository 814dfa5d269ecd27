//! Equivalence proving by bidirectional breadth-first search over relation
//! moves, with invariant-based refutation and replayable certificates.
//!
//! A `Proved` verdict carries the full move path from the left word to the
//! right one. A `Refuted` verdict cites an invariant that separates the two
//! words; the abelianization is the one sound witness available. Balance
//! status is *not* invariant under the relations (`b_0 d_0 = 1` already
//! relates an unbalanced word to the empty one), so it is never used to
//! refute. `Unknown` reports search exhaustion and never claims inequality.
//!
//! Besides single relation moves the search can use *swap moves*: a
//! commuting piece (such as `d_i c_i`) jumps over an adjacent page-balanced
//! block in one step. A swap is sound because the block decomposes, by the
//! normal-form machinery, into factors that each commute with the piece by a
//! registered derived rule; the certificate expands every swap into that
//! primitive move sequence, so replay never depends on the swaps themselves.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::normal;
use super::rules::RuleSet;
use super::Budget;
use crate::abelian::abelianize;
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Which side of a rule is matched and replaced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// Replace an occurrence of the left side by the right side.
    Fwd,
    /// Replace an occurrence of the right side by the left side.
    Rev,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Fwd => Direction::Rev,
            Direction::Rev => Direction::Fwd,
        }
    }
}

/// One certificate line: rule, position, direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveRec {
    pub rule_id: String,
    pub pos: usize,
    pub dir: Direction,
}

/// Why two words are provably distinct.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RefutedWitness {
    /// The abelianizations differ (every relation preserves them).
    AbelianMismatch,
}

/// Prover outcome.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Proved(Vec<MoveRec>),
    Refuted(RefutedWitness),
    /// Budget exhausted after exploring the reported number of states.
    Unknown { states: usize },
}

impl Verdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved(_))
    }
}

/// A commuting piece: `letters` commutes with every word that is balanced on
/// `block_page`, one registered rule per decomposition factor.
#[derive(Clone, Debug)]
pub(crate) struct CommuteUnit {
    pub letters: Vec<Letter>,
    pub block_page: u8,
}

/// An internal move: a primitive rule application or a unit/block swap.
#[derive(Clone, Copy, Debug)]
enum Step {
    Prim { rule: u32, pos: u32, dir: Direction },
    /// Exchange the adjacent segments starting at `pair_pos`: if
    /// `unit_first`, the unit precedes the block; afterwards the block
    /// precedes the unit.
    Swap { unit: u32, pair_pos: u32, block_len: u32, unit_first: bool },
}

struct StateRec {
    word: Box<[Letter]>,
    parent: u32,
    step: Option<Step>,
}

struct Side {
    states: Vec<StateRec>,
    seen: HashMap<Box<[Letter]>, u32>,
    frontier: Vec<u32>,
}

impl Side {
    fn new(start: &Word) -> Side {
        let word: Box<[Letter]> = start.letters().into();
        let mut seen = HashMap::new();
        seen.insert(word.clone(), 0u32);
        Side {
            states: alloc::vec![StateRec {
                word,
                parent: u32::MAX,
                step: None,
            }],
            seen,
            frontier: alloc::vec![0],
        }
    }

    /// Extends the side by a chain of primitive moves from the root; every
    /// intermediate state joins the frontier.
    fn seed_chain(&mut self, prover: &Prover, moves: &[MoveRec]) {
        let mut cur = 0u32;
        for mv in moves {
            let Some(rule) = prover.rules.idx_of(&mv.rule_id) else {
                return;
            };
            let step = Step::Prim {
                rule,
                pos: mv.pos as u32,
                dir: mv.dir,
            };
            let word = prover.apply_step(&self.states[cur as usize].word.clone(), step);
            let boxed: Box<[Letter]> = word.into();
            if let Some(&existing) = self.seen.get(&boxed) {
                cur = existing;
                continue;
            }
            let nid = self.states.len() as u32;
            self.seen.insert(boxed.clone(), nid);
            self.states.push(StateRec {
                word: boxed,
                parent: cur,
                step: Some(step),
            });
            self.frontier.push(nid);
            cur = nid;
        }
    }
}

/// The equivalence prover over a rule set.
pub struct Prover {
    rules: RuleSet,
    budget: Budget,
    units: Vec<CommuteUnit>,
    use_swaps: bool,
    /// Memo of swap feasibility per (block, page).
    swap_cache: core::cell::RefCell<HashMap<(Vec<Letter>, u8), bool>>,
}

impl Prover {
    pub fn new(rules: RuleSet, budget: Budget) -> Prover {
        Prover {
            rules,
            budget,
            units: Vec::new(),
            use_swaps: false,
            swap_cache: core::cell::RefCell::new(HashMap::new()),
        }
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn rules_mut(&mut self) -> &mut RuleSet {
        self.swap_cache.borrow_mut().clear();
        &mut self.rules
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn set_budget(&mut self, budget: Budget) {
        self.budget = budget;
    }

    /// Copies the swap units from another prover (sharing its rule set).
    pub fn clone_units_from(&mut self, other: &Prover) {
        self.units = other.units.clone();
        self.use_swaps = other.use_swaps;
        self.swap_cache.borrow_mut().clear();
    }

    pub(crate) fn enable_swaps(&mut self, units: Vec<CommuteUnit>) {
        self.units = units;
        self.use_swaps = !self.units.is_empty();
        self.swap_cache.borrow_mut().clear();
    }

    /// Checks whether the block at `word[start..end]` can be swapped with
    /// unit `u`: it must be balanced on the unit's page and decompose into
    /// factors that all have a registered commutation rule with the unit.
    fn swap_feasible(&self, block: &[Letter], unit: &CommuteUnit) -> bool {
        let key = (block.to_vec(), unit.block_page);
        if let Some(&hit) = self.swap_cache.borrow().get(&key) {
            return hit;
        }
        let feasible = self.swap_feasible_uncached(block, unit);
        self.swap_cache.borrow_mut().insert(key, feasible);
        feasible
    }

    fn swap_feasible_uncached(&self, block: &[Letter], unit: &CommuteUnit) -> bool {
        let word = Word::from_letters(block.to_vec());
        if !crate::pages::is_page_balanced(&word, unit.block_page) {
            return false;
        }
        let Ok((core, _)) = normal::eliminate_to_core(&word, unit.block_page, &self.rules) else {
            return false;
        };
        let Ok((nf, _)) = normal::star_normal_form(&core, unit.block_page, &self.rules) else {
            return false;
        };
        let Some(ranges) = normal::segment_members(nf.letters(), unit.block_page) else {
            return false;
        };
        ranges.iter().all(|&(s, e)| {
            let member = &nf.letters()[s..e];
            let mut pair = unit.letters.clone();
            pair.extend_from_slice(member);
            let mut swapped = member.to_vec();
            swapped.extend_from_slice(&unit.letters);
            self.rules.find_pair(&pair, &swapped).is_some()
        })
    }

    /// Expands a swap step into primitive moves, given the word it applies to.
    fn expand_swap(&self, word: &[Letter], step: Step) -> Result<Vec<MoveRec>> {
        let Step::Swap { unit, pair_pos, block_len, unit_first } = step else {
            unreachable!()
        };
        let u = &self.units[unit as usize];
        let ul = u.letters.len();
        let pair_pos = pair_pos as usize;
        let block_len = block_len as usize;
        let (block_start, unit_start) = if unit_first {
            (pair_pos + ul, pair_pos)
        } else {
            (pair_pos, pair_pos + block_len)
        };
        let block = Word::from_letters(word[block_start..block_start + block_len].to_vec());
        let page = u.block_page;
        let (core, to_core) = normal::eliminate_to_core(&block, page, &self.rules)?;
        let (nf, to_nf) = normal::star_normal_form(&core, page, &self.rules)?;
        let ranges = normal::segment_members(nf.letters(), page)
            .ok_or_else(|| Error::Precondition("block does not decompose".into()))?;
        let mut moves: Vec<MoveRec> = Vec::new();
        // Normalize the block in place.
        let offset = |mv: &MoveRec, delta: usize| MoveRec {
            rule_id: mv.rule_id.clone(),
            pos: mv.pos + delta,
            dir: mv.dir,
        };
        for mv in to_core.iter().chain(to_nf.iter()) {
            moves.push(offset(mv, block_start));
        }
        // Commute the unit over each factor.
        let factors: Vec<&[Letter]> = ranges.iter().map(|&(s, e)| &nf.letters()[s..e]).collect();
        if unit_first {
            // Unit on the left: jump factors left-to-right.
            let mut upos = unit_start;
            for member in &factors {
                let mut pair = u.letters.clone();
                pair.extend_from_slice(member);
                let mut swapped = member.to_vec();
                swapped.extend_from_slice(&u.letters);
                let (idx, dir) = self
                    .rules
                    .find_pair(&pair, &swapped)
                    .ok_or_else(|| Error::Precondition("missing commutation rule".into()))?;
                moves.push(MoveRec {
                    rule_id: self.rules.get(idx).id.clone(),
                    pos: upos,
                    dir,
                });
                upos += member.len();
            }
        } else {
            // Unit on the right: jump factors right-to-left.
            for (k, member) in factors.iter().enumerate().rev() {
                let mut pair = member.to_vec();
                pair.extend_from_slice(&u.letters);
                let mut swapped = u.letters.clone();
                swapped.extend_from_slice(member);
                let (idx, dir) = self
                    .rules
                    .find_pair(&pair, &swapped)
                    .ok_or_else(|| Error::Precondition("missing commutation rule".into()))?;
                moves.push(MoveRec {
                    rule_id: self.rules.get(idx).id.clone(),
                    pos: pair_pos + ranges[k].0,
                    dir,
                });
            }
        }
        // Denormalize the block at its new offset.
        let new_block_start = if unit_first { pair_pos } else { pair_pos + ul };
        for mv in to_nf.iter().rev().chain(to_core.iter().rev()) {
            moves.push(MoveRec {
                rule_id: mv.rule_id.clone(),
                pos: mv.pos + new_block_start,
                dir: mv.dir.flip(),
            });
        }
        Ok(moves)
    }

    fn apply_step(&self, word: &[Letter], step: Step) -> Vec<Letter> {
        match step {
            Step::Prim { rule, pos, dir } => {
                let rule = self.rules.get(rule);
                let (from, to) = match dir {
                    Direction::Fwd => (&rule.lhs, &rule.rhs),
                    Direction::Rev => (&rule.rhs, &rule.lhs),
                };
                let pos = pos as usize;
                let mut out = Vec::with_capacity(word.len() - from.len() + to.len());
                out.extend_from_slice(&word[..pos]);
                out.extend_from_slice(to);
                out.extend_from_slice(&word[pos + from.len()..]);
                out
            }
            Step::Swap { unit, pair_pos, block_len, unit_first } => {
                let u = &self.units[unit as usize];
                let ul = u.letters.len();
                let pair_pos = pair_pos as usize;
                let block_len = block_len as usize;
                let mut out = Vec::with_capacity(word.len());
                out.extend_from_slice(&word[..pair_pos]);
                if unit_first {
                    out.extend_from_slice(&word[pair_pos + ul..pair_pos + ul + block_len]);
                    out.extend_from_slice(&word[pair_pos..pair_pos + ul]);
                    out.extend_from_slice(&word[pair_pos + ul + block_len..]);
                } else {
                    out.extend_from_slice(&word[pair_pos + block_len..pair_pos + block_len + ul]);
                    out.extend_from_slice(&word[pair_pos..pair_pos + block_len]);
                    out.extend_from_slice(&word[pair_pos + block_len + ul..]);
                }
                out
            }
        }
    }

    fn neighbors(&self, word: &[Letter], max_len: usize, mut emit: impl FnMut(Step, Vec<Letter>)) {
        // Insertions from rules with one empty side.
        for &idx in self.rules.fwd_empty() {
            let rule = self.rules.get(idx);
            if word.len() + rule.rhs.len() <= max_len {
                for pos in 0..=word.len() {
                    let step = Step::Prim { rule: idx, pos: pos as u32, dir: Direction::Fwd };
                    emit(step, self.apply_step(word, step));
                }
            }
        }
        for &idx in self.rules.rev_empty() {
            let rule = self.rules.get(idx);
            if word.len() + rule.lhs.len() <= max_len {
                for pos in 0..=word.len() {
                    let step = Step::Prim { rule: idx, pos: pos as u32, dir: Direction::Rev };
                    emit(step, self.apply_step(word, step));
                }
            }
        }
        // Pattern matches.
        for pos in 0..word.len() {
            let first = word[pos];
            for &idx in self.rules.fwd_candidates(first) {
                let rule = self.rules.get(idx);
                if pos + rule.lhs.len() <= word.len()
                    && word[pos..pos + rule.lhs.len()] == rule.lhs[..]
                    && word.len() - rule.lhs.len() + rule.rhs.len() <= max_len
                {
                    let step = Step::Prim { rule: idx, pos: pos as u32, dir: Direction::Fwd };
                    emit(step, self.apply_step(word, step));
                }
            }
            for &idx in self.rules.rev_candidates(first) {
                let rule = self.rules.get(idx);
                if pos + rule.rhs.len() <= word.len()
                    && word[pos..pos + rule.rhs.len()] == rule.rhs[..]
                    && word.len() - rule.rhs.len() + rule.lhs.len() <= max_len
                {
                    let step = Step::Prim { rule: idx, pos: pos as u32, dir: Direction::Rev };
                    emit(step, self.apply_step(word, step));
                }
            }
        }
        if !self.use_swaps {
            return;
        }
        // Swap moves: unit occurrences against adjacent balanced blocks.
        for (uidx, unit) in self.units.iter().enumerate() {
            let ul = unit.letters.len();
            if ul > word.len() {
                continue;
            }
            for upos in 0..=word.len() - ul {
                if word[upos..upos + ul] != unit.letters[..] {
                    continue;
                }
                // Blocks to the right of the unit.
                for end in (upos + ul + 1)..=word.len() {
                    let block = &word[upos + ul..end];
                    if self.swap_feasible(block, unit) {
                        let step = Step::Swap {
                            unit: uidx as u32,
                            pair_pos: upos as u32,
                            block_len: block.len() as u32,
                            unit_first: true,
                        };
                        emit(step, self.apply_step(word, step));
                    }
                }
                // Blocks to the left of the unit.
                for start in (0..upos).rev() {
                    let block = &word[start..upos];
                    if self.swap_feasible(block, unit) {
                        let step = Step::Swap {
                            unit: uidx as u32,
                            pair_pos: start as u32,
                            block_len: block.len() as u32,
                            unit_first: false,
                        };
                        emit(step, self.apply_step(word, step));
                    }
                }
            }
        }
    }

    /// Applies strictly length-reducing moves (leftmost first) to a fixpoint.
    pub fn greedy_reduce(&self, w: &Word) -> (Word, Vec<MoveRec>) {
        let mut current = w.letters().to_vec();
        let mut path = Vec::new();
        'outer: loop {
            for pos in 0..current.len() {
                let first = current[pos];
                for &idx in self.rules.fwd_candidates(first) {
                    let rule = self.rules.get(idx);
                    if rule.rhs.len() < rule.lhs.len()
                        && current.len() - pos >= rule.lhs.len()
                        && current[pos..pos + rule.lhs.len()] == rule.lhs[..]
                    {
                        path.push(MoveRec {
                            rule_id: rule.id.clone(),
                            pos,
                            dir: Direction::Fwd,
                        });
                        let rhs = rule.rhs.clone();
                        current.splice(pos..pos + rule.lhs.len(), rhs);
                        continue 'outer;
                    }
                }
                for &idx in self.rules.rev_candidates(first) {
                    let rule = self.rules.get(idx);
                    if rule.lhs.len() < rule.rhs.len()
                        && current.len() - pos >= rule.rhs.len()
                        && current[pos..pos + rule.rhs.len()] == rule.rhs[..]
                    {
                        path.push(MoveRec {
                            rule_id: rule.id.clone(),
                            pos,
                            dir: Direction::Rev,
                        });
                        let lhs = rule.lhs.clone();
                        current.splice(pos..pos + rule.rhs.len(), lhs);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        (Word::from_letters(current), path)
    }

    /// Decides whether `u ∼ v`, within the budget.
    pub fn prove(&self, u: &Word, v: &Word) -> Verdict {
        if u == v {
            return Verdict::Proved(Vec::new());
        }
        if abelianize(u) != abelianize(v) {
            return Verdict::Refuted(RefutedWitness::AbelianMismatch);
        }
        let max_len = u.len().max(v.len()) + self.budget.max_len_delta;
        let mut left = Side::new(u);
        let mut right = Side::new(v);
        // Seed both sides with their greedy reduction chains, so the search
        // starts from the original words and their normal-ish forms at once.
        let (_, pu) = self.greedy_reduce(u);
        let (_, pv) = self.greedy_reduce(v);
        left.seed_chain(self, &pu);
        right.seed_chain(self, &pv);
        // The chains may already intersect.
        for (word, &rid) in right.seen.iter() {
            if let Some(&lid) = left.seen.get(word) {
                return match self.reconstruct(&left, lid, &right, rid) {
                    Ok(path) => Verdict::Proved(path),
                    Err(_) => Verdict::Unknown { states: 0 },
                };
            }
        }
        let mut states = left.states.len() + right.states.len();

        loop {
            let expand_left = !left.frontier.is_empty()
                && (right.frontier.is_empty() || left.frontier.len() <= right.frontier.len());
            if left.frontier.is_empty() && right.frontier.is_empty() {
                return Verdict::Unknown { states };
            }
            let (this, other) = if expand_left {
                (&mut left, &mut right)
            } else {
                (&mut right, &mut left)
            };
            let mut next: Vec<u32> = Vec::new();
            let mut meet: Option<(u32, u32)> = None; // (this-state, other-state)
            let frontier = core::mem::take(&mut this.frontier);
            'expand: for &sid in &frontier {
                let word: Box<[Letter]> = this.states[sid as usize].word.clone();
                let mut found = None;
                let states_ref = &mut this.states;
                let seen_ref = &mut this.seen;
                let other_seen = &other.seen;
                self.neighbors(&word, max_len, |step, new_word| {
                    if found.is_some() {
                        return;
                    }
                    let boxed: Box<[Letter]> = new_word.into();
                    if seen_ref.contains_key(&boxed) {
                        return;
                    }
                    let nid = states_ref.len() as u32;
                    seen_ref.insert(boxed.clone(), nid);
                    states_ref.push(StateRec {
                        word: boxed.clone(),
                        parent: sid,
                        step: Some(step),
                    });
                    next.push(nid);
                    if let Some(&oid) = other_seen.get(&boxed) {
                        found = Some((nid, oid));
                    }
                });
                states = this.states.len() + other.states.len();
                if let Some(pair) = found {
                    meet = Some(pair);
                    break 'expand;
                }
                if states > self.budget.max_states {
                    return Verdict::Unknown { states };
                }
            }
            if let Some((tid, oid)) = meet {
                let (lid, rid) = if expand_left { (tid, oid) } else { (oid, tid) };
                return match self.reconstruct(&left, lid, &right, rid) {
                    Ok(path) => Verdict::Proved(path),
                    Err(_) => Verdict::Unknown { states },
                };
            }
            this.frontier = next;
            if this.frontier.is_empty() && other.frontier.is_empty() {
                return Verdict::Unknown { states };
            }
        }
    }

    fn reconstruct(&self, left: &Side, lid: u32, right: &Side, rid: u32) -> Result<Vec<MoveRec>> {
        let mut path: Vec<MoveRec> = Vec::new();
        // Left half: root -> lid, forward.
        let mut chain: Vec<u32> = Vec::new();
        let mut cur = lid;
        while cur != u32::MAX {
            chain.push(cur);
            cur = left.states[cur as usize].parent;
        }
        chain.reverse();
        for &sid in &chain {
            let rec = &left.states[sid as usize];
            if let Some(step) = rec.step {
                let before = &left.states[rec.parent as usize].word;
                self.push_step(&mut path, before, step, false)?;
            }
        }
        // Right half: rid -> root, each step inverted.
        let mut cur = rid;
        while cur != u32::MAX {
            let rec = &right.states[cur as usize];
            if let Some(step) = rec.step {
                // The recorded step transformed parent -> cur; we replay the
                // inverse on cur's word.
                let after = &rec.word;
                self.push_step(&mut path, after, step, true)?;
            }
            cur = rec.parent;
        }
        Ok(path)
    }

    fn push_step(
        &self,
        path: &mut Vec<MoveRec>,
        word: &[Letter],
        step: Step,
        invert: bool,
    ) -> Result<()> {
        match (step, invert) {
            (Step::Prim { rule, pos, dir }, false) => path.push(MoveRec {
                rule_id: self.rules.get(rule).id.clone(),
                pos: pos as usize,
                dir,
            }),
            (Step::Prim { rule, pos, dir }, true) => path.push(MoveRec {
                rule_id: self.rules.get(rule).id.clone(),
                pos: pos as usize,
                dir: dir.flip(),
            }),
            (Step::Swap { unit, pair_pos, block_len, unit_first }, invert) => {
                // The inverse of a swap is the swap with the roles flipped,
                // applied at the same pair position.
                let step = Step::Swap {
                    unit,
                    pair_pos,
                    block_len,
                    unit_first: unit_first ^ invert,
                };
                path.extend(self.expand_swap(word, step)?);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::rules::{instantiate_relations, Mode};
    use crate::words::{parse_word, Alphabet};

    fn prover(n: u16) -> Prover {
        let alphabet = Alphabet::n_graphs(n);
        Prover::new(
            RuleSet::new(instantiate_relations(&alphabet, Mode::Rsg)),
            Budget::default(),
        )
    }

    fn w(text: &str, n: u16) -> Word {
        parse_word(text, &Alphabet::n_graphs(n)).unwrap()
    }

    #[test]
    fn one_move_proof() {
        let p = prover(2);
        let verdict = p.prove(&w("a0 d1", 2), &w("a2", 2));
        let Verdict::Proved(path) = &verdict else {
            panic!("expected proof, got {verdict:?}");
        };
        assert_eq!(path.len(), 1);
        let end = crate::rewrite::replay(p.rules(), &w("a0 d1", 2), path).unwrap();
        assert_eq!(end, w("a2", 2));
    }

    #[test]
    fn cancel_pair() {
        let p = prover(2);
        let verdict = p.prove(&w("b0 d0", 2), &Word::empty());
        assert!(verdict.is_proved());
        let verdict = p.prove(&w("d0 d1 d2", 2), &Word::empty());
        assert!(verdict.is_proved());
    }

    #[test]
    fn dropped_r2_instance_is_derivable() {
        let p = prover(2);
        let verdict = p.prove(&w("d0 b0", 2), &Word::empty());
        let Verdict::Proved(path) = &verdict else {
            panic!("expected proof, got {verdict:?}");
        };
        assert!(path.len() <= 4);
    }

    #[test]
    fn unknot_words_equal() {
        let p = prover(2);
        let verdict = p.prove(&w("a0 c0", 2), &w("a1 c1", 2));
        let Verdict::Proved(path) = &verdict else {
            panic!("expected proof, got {verdict:?}");
        };
        let end = crate::rewrite::replay(p.rules(), &w("a0 c0", 2), path).unwrap();
        assert_eq!(end, w("a1 c1", 2));
    }

    #[test]
    fn refuted_by_abelianization() {
        let p = prover(3);
        let verdict = p.prove(&w("a0 c0", 3), &w("a2 x3_0 x3_0 c0 c1", 3));
        assert_eq!(verdict, Verdict::Refuted(RefutedWitness::AbelianMismatch));
    }

    #[test]
    fn balance_is_not_a_refutation_witness() {
        // b0 d0 = 1 relates an unbalanced word to the empty word, so balance
        // status must never be used to separate elements.
        let p = prover(2);
        assert!(p.prove(&w("b0 d0", 2), &Word::empty()).is_proved());
    }
}
