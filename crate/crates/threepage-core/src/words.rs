//! The encoding alphabet, words over it, parsing and rendering, the mirror
//! anti-automorphism and the index-shift symmetry.
//!
//! An alphabet holds the twelve regular letters `a_i, b_i, c_i, d_i`
//! (`i ∈ Z₃`) plus three vertex letters `x_{m,i}` per admitted degree `m ≥ 3`.
//! With degree set `{3, …, n}` that is `3(n+2)` letters.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// The kind of a letter: four regular kinds plus a vertex kind per degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Kind {
    A,
    B,
    C,
    D,
    /// Vertex letter of degree `m ≥ 3`.
    X(u16),
}

/// One letter `kind_page`, e.g. `a0`, `d2`, `x4_1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub kind: Kind,
    /// Page index in `Z₃ = {0, 1, 2}`.
    pub page: u8,
}

/// `i + 1` in `Z₃`.
#[inline]
pub fn nxt(i: u8) -> u8 {
    (i + 1) % 3
}

/// `i - 1` in `Z₃`.
#[inline]
pub fn prv(i: u8) -> u8 {
    (i + 2) % 3
}

impl Letter {
    pub fn new(kind: Kind, page: u8) -> Letter {
        debug_assert!(page < 3);
        Letter { kind, page }
    }

    /// Total number of stubs (arc ends at the axis) of this letter.
    pub fn degree(&self) -> u16 {
        match self.kind {
            Kind::X(m) => m,
            _ => 2,
        }
    }

    /// The mirror letter map: `a ↦ c`, `b ↦ d`, `c ↦ a`, `d ↦ b`; vertex
    /// letters of even degree are fixed and odd-degree ones expand to the
    /// three-letter block `x_{2p-1,i} b_i c_i`.
    fn mirror_image(&self, out: &mut Vec<Letter>) {
        let i = self.page;
        match self.kind {
            Kind::A => out.push(Letter::new(Kind::C, i)),
            Kind::B => out.push(Letter::new(Kind::D, i)),
            Kind::C => out.push(Letter::new(Kind::A, i)),
            Kind::D => out.push(Letter::new(Kind::B, i)),
            Kind::X(m) if m % 2 == 1 => {
                out.push(*self);
                out.push(Letter::new(Kind::B, i));
                out.push(Letter::new(Kind::C, i));
            }
            Kind::X(_) => out.push(*self),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::A => write!(f, "a{}", self.page),
            Kind::B => write!(f, "b{}", self.page),
            Kind::C => write!(f, "c{}", self.page),
            Kind::D => write!(f, "d{}", self.page),
            Kind::X(m) => write!(f, "x{}_{}", m, self.page),
        }
    }
}

/// A set of admitted vertex degrees, each `≥ 3`, kept sorted and unique.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    degrees: Vec<u16>,
}

impl Alphabet {
    /// The alphabet with no vertex letters (12 regular letters).
    pub fn links() -> Alphabet {
        Alphabet { degrees: Vec::new() }
    }

    /// Degrees `{3, …, n}`; `n = 2` gives the link alphabet.
    pub fn n_graphs(n: u16) -> Alphabet {
        Alphabet {
            degrees: (3..=n).collect(),
        }
    }

    /// An arbitrary degree set (a `J`-alphabet). Every degree must be `≥ 3`.
    pub fn with_degrees<I: IntoIterator<Item = u16>>(degrees: I) -> Result<Alphabet> {
        let mut ds: Vec<u16> = degrees.into_iter().collect();
        ds.sort_unstable();
        ds.dedup();
        if let Some(&m) = ds.iter().find(|&&m| m < 3) {
            return Err(Error::DegreeTooSmall(m));
        }
        Ok(Alphabet { degrees: ds })
    }

    pub fn degrees(&self) -> &[u16] {
        &self.degrees
    }

    pub fn contains_degree(&self, m: u16) -> bool {
        self.degrees.binary_search(&m).is_ok()
    }

    pub fn odd_degrees(&self) -> impl Iterator<Item = u16> + '_ {
        self.degrees.iter().copied().filter(|m| m % 2 == 1)
    }

    pub fn even_degrees(&self) -> impl Iterator<Item = u16> + '_ {
        self.degrees.iter().copied().filter(|m| m % 2 == 0)
    }

    /// `12 + 3·|degrees|` letters.
    pub fn letter_count(&self) -> usize {
        12 + 3 * self.degrees.len()
    }

    /// All letters, regular kinds first, in display order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.letter_count());
        for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
            for i in 0..3 {
                out.push(Letter::new(kind, i));
            }
        }
        for &m in &self.degrees {
            for i in 0..3 {
                out.push(Letter::new(Kind::X(m), i));
            }
        }
        out
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        match letter.kind {
            Kind::X(m) => self.contains_degree(m),
            _ => letter.page < 3,
        }
    }

    fn parse_token(&self, tok: &str) -> Result<Letter> {
        let bytes = tok.as_bytes();
        if bytes.len() == 2 && matches!(bytes[0], b'a' | b'b' | b'c' | b'd') {
            let kind = match bytes[0] {
                b'a' => Kind::A,
                b'b' => Kind::B,
                b'c' => Kind::C,
                _ => Kind::D,
            };
            let page = match bytes[1] {
                b'0' => 0,
                b'1' => 1,
                b'2' => 2,
                _ => return Err(Error::BadPageIndex(tok.to_string())),
            };
            return Ok(Letter::new(kind, page));
        }
        if let Some(rest) = tok.strip_prefix('x') {
            if let Some((m_str, i_str)) = rest.split_once('_') {
                let m: u16 = m_str
                    .parse()
                    .map_err(|_| Error::UnknownToken(tok.to_string()))?;
                if m < 3 {
                    return Err(Error::DegreeTooSmall(m));
                }
                if !self.contains_degree(m) {
                    return Err(Error::DegreeNotInAlphabet(m));
                }
                let page: u8 = match i_str {
                    "0" => 0,
                    "1" => 1,
                    "2" => 2,
                    _ => return Err(Error::BadPageIndex(tok.to_string())),
                };
                return Ok(Letter::new(Kind::X(m), page));
            }
        }
        Err(Error::UnknownToken(tok.to_string()))
    }
}

/// A finite sequence of letters; the semigroup element. The empty word is the
/// identity. Words are immutable values: every operation returns a new word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Every letter must belong to the alphabet.
    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        for (pos, l) in self.letters.iter().enumerate() {
            if !alphabet.contains(l) {
                return Err(Error::Precondition(alloc::format!(
                    "letter {l} at position {pos} is not in the alphabet"
                )));
            }
        }
        Ok(())
    }

    /// Canonical whitespace-separated rendering.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            s.push_str(&l.to_string());
        }
        s
    }

    /// The mirror word: sequence reversed, every letter replaced by its
    /// mirror image. The same letter map serves both the rigid and the
    /// non-rigid reading; only the semigroup the result is interpreted in
    /// differs.
    pub fn mirror(&self) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 2);
        for l in self.letters.iter().rev() {
            l.mirror_image(&mut letters);
        }
        Word { letters }
    }

    /// Add `s` to every letter's page index mod 3.
    pub fn shift_index(&self, s: u8) -> Word {
        let letters = self
            .letters
            .iter()
            .map(|l| Letter::new(l.kind, (l.page + s) % 3))
            .collect();
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses a whitespace-separated token string. A string without whitespace
/// that is not a single token is accepted in the compact two-characters-per-
/// letter form for pure regular-letter words, e.g. `a0c0`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    if trimmed.split_whitespace().nth(1).is_none() {
        let tok = trimmed;
        if let Ok(l) = alphabet.parse_token(tok) {
            return Ok(Word::from_letters(alloc::vec![l]));
        }
        // Compact form: pairs of [abcd][012] with no separators.
        if tok.len() % 2 == 0 && tok.as_bytes().iter().step_by(2).all(|b| b.is_ascii_alphabetic()) {
            for chunk in tok.as_bytes().chunks(2) {
                let sub = core::str::from_utf8(chunk).unwrap();
                letters.push(alphabet.parse_token(sub)?);
            }
            return Ok(Word::from_letters(letters));
        }
        return alphabet.parse_token(tok).map(|l| Word::from_letters(alloc::vec![l]));
    }
    for tok in trimmed.split_whitespace() {
        letters.push(alphabet.parse_token(tok)?);
    }
    Ok(Word::from_letters(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(n: u16) -> Alphabet {
        Alphabet::n_graphs(n)
    }

    #[test]
    fn letter_counts() {
        assert_eq!(ab(2).letter_count(), 12);
        assert_eq!(ab(3).letter_count(), 15);
        assert_eq!(ab(6).letter_count(), 24);
        let j = Alphabet::with_degrees([5, 3]).unwrap();
        assert_eq!(j.degrees(), &[3, 5]);
        assert_eq!(j.letter_count(), 18);
    }

    #[test]
    fn degree_bound_enforced() {
        assert_eq!(Alphabet::with_degrees([2]), Err(Error::DegreeTooSmall(2)));
    }

    #[test]
    fn parse_round_trip() {
        let a = ab(4);
        let w = parse_word("a0 a1 b2 d1 x4_1 d2 c1 c2", &a).unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(w.render(), "a0 a1 b2 d1 x4_1 d2 c1 c2");
        let again = parse_word(&w.render(), &a).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn parse_empty_is_identity() {
        let w = parse_word("", &ab(2)).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.concat(&parse_word("a0 c0", &ab(2)).unwrap()).render(), "a0 c0");
    }

    #[test]
    fn parse_rejects_low_degree() {
        assert_eq!(parse_word("x2_0", &ab(4)), Err(Error::DegreeTooSmall(2)));
        assert_eq!(parse_word("x5_0", &ab(4)), Err(Error::DegreeNotInAlphabet(5)));
        assert_eq!(
            parse_word("a3", &ab(2)),
            Err(Error::BadPageIndex("a3".into()))
        );
        assert!(matches!(parse_word("q0", &ab(2)), Err(Error::UnknownToken(_))));
    }

    #[test]
    fn compact_form() {
        let w = parse_word("a0c0", &ab(2)).unwrap();
        assert_eq!(w.render(), "a0 c0");
        let w = parse_word("a2d0d2a1a1b2b0c1c1c2", &ab(2)).unwrap();
        assert_eq!(w.len(), 10);
    }

    #[test]
    fn mirror_examples() {
        let a = ab(3);
        let w = parse_word("a0 c0", &a).unwrap();
        assert_eq!(w.mirror().render(), "a0 c0");
        let x = parse_word("x3_1", &a).unwrap();
        assert_eq!(x.mirror().render(), "x3_1 b1 c1");
    }

    #[test]
    fn mirror_trefoil() {
        // Reverse the letters and apply a ↦ c, b ↦ d, c ↦ a, d ↦ b.
        let a = ab(2);
        let w = parse_word("a2 d0 d2 a1 a1 b2 b0 c1 c1 c2", &a).unwrap();
        assert_eq!(w.mirror().render(), "a2 a1 a1 d0 d2 c1 c1 b2 b0 c2");
        // The map is involutive on regular letters.
        assert_eq!(w.mirror().mirror(), w);
    }

    #[test]
    fn mirror_is_anti_homomorphism() {
        let a = ab(4);
        let u = parse_word("a0 x3_1 d2", &a).unwrap();
        let v = parse_word("b1 x4_0 c2", &a).unwrap();
        assert_eq!(u.concat(&v).mirror(), v.mirror().concat(&u.mirror()));
    }

    #[test]
    fn shift_examples() {
        let a = ab(2);
        let w = parse_word("a0 c0", &a).unwrap();
        assert_eq!(w.shift_index(1).render(), "a1 c1");
        assert_eq!(w.shift_index(0), w);
        assert_eq!(w.shift_index(1).shift_index(2), w);
    }
}
