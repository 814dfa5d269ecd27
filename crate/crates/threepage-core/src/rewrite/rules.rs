//! Instantiation of the defining relations over a given alphabet.
//!
//! The rigid rule set consists of the relation families R1–R10; the
//! non-rigid one replaces R9/R10 by R9'. Family R2 contains `b_i d_i = 1`
//! and `d_i b_i = 1` for every page; one of the six instances is derivable
//! from R1 and the others, and is dropped (`d_0 b_0 = 1`), which calibrates
//! the instance totals to 48 for the link alphabet, 84 with degree 3, and
//! `3(16 + 11|J| + |J|²)` for a degree set `J`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::words::{nxt, prv, Alphabet, Kind, Letter};

/// Which semigroup the rules present.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// Rigid isotopy: relations R1–R10.
    Rsg,
    /// Non-rigid isotopy: relations R1–R8 and R9'.
    Nsg,
}

/// One two-sided rewriting rule `lhs = rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rule {
    pub id: String,
    pub lhs: Vec<Letter>,
    pub rhs: Vec<Letter>,
}

#[inline]
fn a(i: u8) -> Letter {
    Letter::new(Kind::A, i)
}
#[inline]
fn b(i: u8) -> Letter {
    Letter::new(Kind::B, i)
}
#[inline]
fn c(i: u8) -> Letter {
    Letter::new(Kind::C, i)
}
#[inline]
fn d(i: u8) -> Letter {
    Letter::new(Kind::D, i)
}
#[inline]
fn x(m: u16, i: u8) -> Letter {
    Letter::new(Kind::X(m), i)
}

/// Fluent builder for rule sides.
#[derive(Default)]
pub(crate) struct Side(pub Vec<Letter>);

impl Side {
    pub fn new() -> Side {
        Side(Vec::new())
    }
    pub fn l(mut self, letter: Letter) -> Side {
        self.0.push(letter);
        self
    }
    pub fn pow(mut self, letter: Letter, k: usize) -> Side {
        for _ in 0..k {
            self.0.push(letter);
        }
        self
    }
    pub fn cat(mut self, letters: &[Letter]) -> Side {
        self.0.extend_from_slice(letters);
        self
    }
}

/// `D_{k,i} = d_i^k d_{i+1}^k d_{i-1}^k`.
pub fn d_word(k: usize, i: u8) -> Vec<Letter> {
    Side::new().pow(d(i), k).pow(d(nxt(i)), k).pow(d(prv(i)), k).0
}

/// The commuting pieces of family R7: `c_{i+1}`, `b_i d_{i+1} d_i`, and
/// `x_{m,i+1}` per degree.
fn r7_pieces(alphabet: &Alphabet, i: u8) -> Vec<(String, Vec<Letter>)> {
    let mut out = Vec::new();
    out.push((format!("c"), Side::new().l(c(nxt(i))).0));
    out.push((format!("bdd"), Side::new().l(b(i)).l(d(nxt(i))).l(d(i)).0));
    for &m in alphabet.degrees() {
        out.push((format!("x{m}"), Side::new().l(x(m, nxt(i))).0));
    }
    out
}

/// Emits the defining relation instances for the alphabet and mode.
pub fn instantiate_relations(alphabet: &Alphabet, mode: Mode) -> Vec<Rule> {
    let mut rules = Vec::new();
    let mut push = |id: String, lhs: Vec<Letter>, rhs: Vec<Letter>| {
        rules.push(Rule { id, lhs, rhs });
    };

    // R1: d0 d1 d2 = 1.
    push("R1".into(), Side::new().l(d(0)).l(d(1)).l(d(2)).0, Vec::new());

    // R2: b_i d_i = d_i b_i = 1, with d_0 b_0 = 1 dropped as derivable.
    for i in 0..3u8 {
        push(format!("R2[bd,i={i}]"), Side::new().l(b(i)).l(d(i)).0, Vec::new());
        if i != 0 {
            push(format!("R2[db,i={i}]"), Side::new().l(d(i)).l(b(i)).0, Vec::new());
        }
    }

    // R3: a_i = a_{i+1} d_{i-1}, b_i = a_{i-1} c_{i+1},
    //     c_i = b_{i-1} c_{i+1}, d_i = a_{i+1} c_{i-1}.
    for i in 0..3u8 {
        push(
            format!("R3.1[i={i}]"),
            Side::new().l(a(i)).0,
            Side::new().l(a(nxt(i))).l(d(prv(i))).0,
        );
        push(
            format!("R3.2[i={i}]"),
            Side::new().l(b(i)).0,
            Side::new().l(a(prv(i))).l(c(nxt(i))).0,
        );
        push(
            format!("R3.3[i={i}]"),
            Side::new().l(c(i)).0,
            Side::new().l(b(prv(i))).l(c(nxt(i))).0,
        );
        push(
            format!("R3.4[i={i}]"),
            Side::new().l(d(i)).0,
            Side::new().l(a(nxt(i))).l(c(prv(i))).0,
        );
    }

    // R4: one instance per degree and page.
    for &m in alphabet.degrees() {
        for i in 0..3u8 {
            if m % 2 == 1 {
                let p = ((m + 1) / 2) as usize;
                push(
                    format!("R4[m={m},i={i}]"),
                    Side::new().l(x(m, prv(i))).0,
                    Side::new()
                        .pow(d(prv(i)), p - 1)
                        .l(x(m, i))
                        .l(d(nxt(i)))
                        .pow(b(prv(i)), p - 2)
                        .0,
                );
            } else {
                let q = (m / 2) as usize;
                push(
                    format!("R4[m={m},i={i}]"),
                    Side::new().l(x(m, prv(i))).0,
                    Side::new()
                        .pow(d(prv(i)), q - 2)
                        .l(b(nxt(i)))
                        .l(x(m, i))
                        .l(d(nxt(i)))
                        .pow(b(prv(i)), q - 2)
                        .0,
                );
            }
        }
    }

    // R5 (odd degrees) and R6 (even degrees): conjugation by a_i … c_i.
    for &m in alphabet.degrees() {
        for i in 0..3u8 {
            if m % 2 == 1 {
                let p = ((m + 1) / 2) as usize;
                let core1 = Side::new().l(x(m, i)).pow(d(i), p - 1).0;
                push(
                    format!("R5.1[m={m},i={i}]"),
                    core1.clone(),
                    Side::new().l(a(i)).cat(&core1).l(c(i)).0,
                );
                let core2 = Side::new().pow(b(i), p - 1).l(x(m, i)).l(b(i)).0;
                push(
                    format!("R5.2[m={m},i={i}]"),
                    core2.clone(),
                    Side::new().l(a(i)).cat(&core2).l(c(i)).0,
                );
            } else {
                let q = (m / 2) as usize;
                let core1 = Side::new().l(d(i)).l(x(m, i)).pow(d(i), q - 1).0;
                push(
                    format!("R6.1[m={m},i={i}]"),
                    core1.clone(),
                    Side::new().l(a(i)).cat(&core1).l(c(i)).0,
                );
                let core2 = Side::new().pow(b(i), q - 1).l(x(m, i)).l(b(i)).0;
                push(
                    format!("R6.2[m={m},i={i}]"),
                    core2.clone(),
                    Side::new().l(a(i)).cat(&core2).l(c(i)).0,
                );
            }
        }
    }

    // R7: (d_i c_i) w = w (d_i c_i).
    for i in 0..3u8 {
        let unit = Side::new().l(d(i)).l(c(i)).0;
        for (tag, w) in r7_pieces(alphabet, i) {
            push(
                format!("R7[i={i},w={tag}]"),
                Side::new().cat(&unit).cat(&w).0,
                Side::new().cat(&w).cat(&unit).0,
            );
        }
    }

    // R8: u v = v u over the listed families.
    for i in 0..3u8 {
        let mut us: Vec<(String, Vec<Letter>)> = Vec::new();
        us.push(("ab".into(), Side::new().l(a(i)).l(b(i)).0));
        us.push((
            "bddb".into(),
            Side::new().l(b(prv(i))).l(d(i)).l(d(prv(i))).l(b(i)).0,
        ));
        for &m in alphabet.degrees() {
            if m % 2 == 1 {
                us.push((format!("x{m}b"), Side::new().l(x(m, i)).l(b(i)).0));
            } else {
                us.push((format!("dx{m}b"), Side::new().l(d(i)).l(x(m, i)).l(b(i)).0));
            }
        }
        let mut vs: Vec<(String, Vec<Letter>)> = Vec::new();
        vs.push(("a".into(), Side::new().l(a(nxt(i))).0));
        vs.push(("b".into(), Side::new().l(b(nxt(i))).0));
        vs.push(("c".into(), Side::new().l(c(nxt(i))).0));
        vs.push(("bdd".into(), Side::new().l(b(i)).l(d(nxt(i))).l(d(i)).0));
        for &m in alphabet.degrees() {
            vs.push((format!("x{m}"), Side::new().l(x(m, nxt(i))).0));
        }
        for (ut, u) in &us {
            for (vt, v) in &vs {
                push(
                    format!("R8[i={i},u={ut},v={vt}]"),
                    Side::new().cat(u).cat(v).0,
                    Side::new().cat(v).cat(u).0,
                );
            }
        }
    }

    match mode {
        Mode::Rsg => {
            // R9: (x_{2p-1,i} b_i) D_{p,i} = D_{p-1,i} (x_{2p-1,i} b_i).
            for m in alphabet.odd_degrees() {
                let p = ((m + 1) / 2) as usize;
                for i in 0..3u8 {
                    let unit = Side::new().l(x(m, i)).l(b(i)).0;
                    push(
                        format!("R9[m={m},i={i}]"),
                        Side::new().cat(&unit).cat(&d_word(p, i)).0,
                        Side::new().cat(&d_word(p - 1, i)).cat(&unit).0,
                    );
                }
            }
            // R10: (d_i x_{2q,i} b_i) D_{q,i} = D_{q,i} (d_i x_{2q,i} b_i).
            for m in alphabet.even_degrees() {
                let q = (m / 2) as usize;
                for i in 0..3u8 {
                    let unit = Side::new().l(d(i)).l(x(m, i)).l(b(i)).0;
                    push(
                        format!("R10[m={m},i={i}]"),
                        Side::new().cat(&unit).cat(&d_word(q, i)).0,
                        Side::new().cat(&d_word(q, i)).cat(&unit).0,
                    );
                }
            }
        }
        Mode::Nsg => {
            // R9': x_{m,i} b_i D_{2,i} = x_{m,i} b_i.
            for &m in alphabet.degrees() {
                for i in 0..3u8 {
                    let unit = Side::new().l(x(m, i)).l(b(i)).0;
                    push(
                        format!("R9'[m={m},i={i}]"),
                        Side::new().cat(&unit).cat(&d_word(2, i)).0,
                        unit,
                    );
                }
            }
        }
    }

    rules
}

/// An indexed set of rules supporting occurrence scans and content lookup.
#[derive(Clone, Debug, Default)]
pub struct RuleSet {
    rules: Vec<Rule>,
    by_id: HashMap<String, u32>,
    by_content: HashMap<(Vec<Letter>, Vec<Letter>), u32>,
    // Rules by first letter of the pattern side, per direction.
    fwd_by_first: HashMap<Letter, Vec<u32>>,
    rev_by_first: HashMap<Letter, Vec<u32>>,
    fwd_empty: Vec<u32>,
    rev_empty: Vec<u32>,
}

impl RuleSet {
    pub fn new(rules: Vec<Rule>) -> RuleSet {
        let mut set = RuleSet::default();
        for rule in rules {
            set.push(rule);
        }
        set
    }

    pub fn push(&mut self, rule: Rule) -> u32 {
        if let Some(&idx) = self.by_id.get(&rule.id) {
            return idx;
        }
        let idx = self.rules.len() as u32;
        self.by_id.insert(rule.id.clone(), idx);
        self.by_content
            .insert((rule.lhs.clone(), rule.rhs.clone()), idx);
        match rule.lhs.first() {
            Some(&first) => self.fwd_by_first.entry(first).or_default().push(idx),
            None => self.fwd_empty.push(idx),
        }
        match rule.rhs.first() {
            Some(&first) => self.rev_by_first.entry(first).or_default().push(idx),
            None => self.rev_empty.push(idx),
        }
        self.rules.push(rule);
        idx
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn get(&self, idx: u32) -> &Rule {
        &self.rules[idx as usize]
    }

    pub fn by_id(&self, id: &str) -> Option<&Rule> {
        self.by_id.get(id).map(|&i| self.get(i))
    }

    pub fn idx_of(&self, id: &str) -> Option<u32> {
        self.by_id.get(id).copied()
    }

    /// Finds a rule whose sides are exactly `(from, to)` in either
    /// orientation; returns the index and the direction that rewrites
    /// `from` into `to`.
    pub fn find_pair(&self, from: &[Letter], to: &[Letter]) -> Option<(u32, super::Direction)> {
        if let Some(&idx) = self.by_content.get(&(from.to_vec(), to.to_vec())) {
            return Some((idx, super::Direction::Fwd));
        }
        if let Some(&idx) = self.by_content.get(&(to.to_vec(), from.to_vec())) {
            return Some((idx, super::Direction::Rev));
        }
        None
    }

    pub(crate) fn fwd_candidates(&self, first: Letter) -> &[u32] {
        self.fwd_by_first.get(&first).map_or(&[], Vec::as_slice)
    }

    pub(crate) fn rev_candidates(&self, first: Letter) -> &[u32] {
        self.rev_by_first.get(&first).map_or(&[], Vec::as_slice)
    }

    pub(crate) fn fwd_empty(&self) -> &[u32] {
        &self.fwd_empty
    }

    pub(crate) fn rev_empty(&self) -> &[u32] {
        &self.rev_empty
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::abelianize;
    use crate::words::Word;

    #[test]
    fn instance_totals() {
        assert_eq!(instantiate_relations(&Alphabet::n_graphs(2), Mode::Rsg).len(), 48);
        assert_eq!(instantiate_relations(&Alphabet::n_graphs(3), Mode::Rsg).len(), 84);
        assert_eq!(instantiate_relations(&Alphabet::n_graphs(3), Mode::Nsg).len(), 84);
        for j in 0..=4usize {
            let degrees: Vec<u16> = (3..3 + j as u16).collect();
            let alphabet = Alphabet::with_degrees(degrees).unwrap();
            let expected = 3 * (16 + 11 * j + j * j);
            assert_eq!(
                instantiate_relations(&alphabet, Mode::Rsg).len(),
                expected,
                "|J| = {j}"
            );
            assert_eq!(instantiate_relations(&alphabet, Mode::Nsg).len(), expected);
        }
    }

    #[test]
    fn relations_preserve_abelianization() {
        for mode in [Mode::Rsg, Mode::Nsg] {
            for rule in instantiate_relations(&Alphabet::n_graphs(6), mode) {
                let lhs = Word::from_letters(rule.lhs.clone());
                let rhs = Word::from_letters(rule.rhs.clone());
                assert_eq!(
                    abelianize(&lhs),
                    abelianize(&rhs),
                    "rule {} changes the abelianization",
                    rule.id
                );
            }
        }
    }
}
