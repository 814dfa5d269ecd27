//! Graph-tangle generators, the canonical map φ into three-page words, the
//! strand shifts, the Σ/Σ̄/Σ′/D builders, and the tangle relation families
//! used as verification targets.
//!
//! Generator images under φ:
//!
//! ```text
//! φ(ξ_k)        = d₂^k c₂ b₂^(k-1)           φ(σ_k)      = d₂^(k-1) b₁ d₂ d₁ b₂^k
//! φ(η_k)        = d₂^(k-1) a₂ b₂^k           φ(σ_k⁻¹)    = d₂^k b₁ b₂ d₁ b₂^(k-1)
//! φ(λ_{2p-1,k}) = d₂^(k-1) x_{2p-1,2} b₂^k   φ(λ_{2q,k}) = d₂^k x_{2q,2} b₂^k
//! ```
//!
//! Every image is balanced on pages 1 and 2.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Kind, Letter, Word};

/// Tangle generator kinds: cup, cap, positive and negative crossing, and an
/// `m`-valent vertex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TangleKind {
    Xi,
    Eta,
    Sigma,
    SigmaInv,
    Lambda(u16),
}

/// One tangle generator acting at strand `k ≥ 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TangleLetter {
    pub kind: TangleKind,
    pub strand: u32,
}

impl TangleLetter {
    pub fn new(kind: TangleKind, strand: u32) -> TangleLetter {
        debug_assert!(strand >= 1);
        TangleLetter { kind, strand }
    }
}

impl fmt::Display for TangleLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TangleKind::Xi => write!(f, "xi{}", self.strand),
            TangleKind::Eta => write!(f, "eta{}", self.strand),
            TangleKind::Sigma => write!(f, "sig{}", self.strand),
            TangleKind::SigmaInv => write!(f, "inv{}", self.strand),
            TangleKind::Lambda(m) => write!(f, "lam{}_{}", m, self.strand),
        }
    }
}

/// A sequence of tangle generators. Composability of the underlying diagrams
/// is not modelled; the relations and φ are defined letterwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct TangleWord {
    letters: Vec<TangleLetter>,
}

impl TangleWord {
    pub fn new(letters: Vec<TangleLetter>) -> TangleWord {
        TangleWord { letters }
    }

    pub fn letters(&self) -> &[TangleLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &TangleWord) -> TangleWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TangleWord { letters }
    }

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

    /// The strand shift: adds `k` to every strand index.
    pub fn shift(&self, k: u32) -> TangleWord {
        TangleWord {
            letters: self
                .letters
                .iter()
                .map(|l| TangleLetter::new(l.kind, l.strand + k))
                .collect(),
        }
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses the tangle grammar: `xi<k>`, `eta<k>`, `sig<k>`, `inv<k>`,
/// `lam<m>_<k>`, whitespace-separated.
pub fn parse_tangle(text: &str, alphabet: &Alphabet) -> Result<TangleWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        if let Some(rest) = tok.strip_prefix("lam") {
            let (m_str, k_str) = rest
                .split_once('_')
                .ok_or_else(|| Error::UnknownToken(tok.into()))?;
            let m: u16 = m_str.parse().map_err(|_| Error::UnknownToken(tok.into()))?;
            if m < 3 {
                return Err(Error::DegreeTooSmall(m));
            }
            if !alphabet.contains_degree(m) {
                return Err(Error::DegreeNotInAlphabet(m));
            }
            let strand: u32 = k_str.parse().map_err(|_| Error::UnknownToken(tok.into()))?;
            if strand == 0 {
                return Err(Error::UnknownToken(tok.into()));
            }
            letters.push(TangleLetter::new(TangleKind::Lambda(m), strand));
            continue;
        }
        let (kind, strand_str) = if let Some(rest) = tok.strip_prefix("xi") {
            (TangleKind::Xi, rest)
        } else if let Some(rest) = tok.strip_prefix("eta") {
            (TangleKind::Eta, rest)
        } else if let Some(rest) = tok.strip_prefix("sig") {
            (TangleKind::Sigma, rest)
        } else if let Some(rest) = tok.strip_prefix("inv") {
            (TangleKind::SigmaInv, rest)
        } else {
            return Err(Error::UnknownToken(tok.into()));
        };
        let strand: u32 = strand_str
            .parse()
            .map_err(|_| Error::UnknownToken(tok.into()))?;
        if strand == 0 {
            return Err(Error::UnknownToken(tok.into()));
        }
        letters.push(TangleLetter::new(kind, strand));
    }
    Ok(TangleWord { letters })
}

fn rep(letter: Letter, k: usize, out: &mut Vec<Letter>) {
    for _ in 0..k {
        out.push(letter);
    }
}

/// The canonical image of one generator.
pub fn phi_letter(l: TangleLetter, alphabet: &Alphabet, out: &mut Vec<Letter>) -> Result<()> {
    let k = l.strand as usize;
    let d2 = Letter::new(Kind::D, 2);
    let b2 = Letter::new(Kind::B, 2);
    match l.kind {
        TangleKind::Xi => {
            rep(d2, k, out);
            out.push(Letter::new(Kind::C, 2));
            rep(b2, k - 1, out);
        }
        TangleKind::Eta => {
            rep(d2, k - 1, out);
            out.push(Letter::new(Kind::A, 2));
            rep(b2, k, out);
        }
        TangleKind::Sigma => {
            rep(d2, k - 1, out);
            out.push(Letter::new(Kind::B, 1));
            out.push(d2);
            out.push(Letter::new(Kind::D, 1));
            rep(b2, k, out);
        }
        TangleKind::SigmaInv => {
            rep(d2, k, out);
            out.push(Letter::new(Kind::B, 1));
            out.push(b2);
            out.push(Letter::new(Kind::D, 1));
            rep(b2, k - 1, out);
        }
        TangleKind::Lambda(m) => {
            if !alphabet.contains_degree(m) {
                return Err(Error::DegreeNotInAlphabet(m));
            }
            if m % 2 == 1 {
                rep(d2, k - 1, out);
                out.push(Letter::new(Kind::X(m), 2));
                rep(b2, k, out);
            } else {
                rep(d2, k, out);
                out.push(Letter::new(Kind::X(m), 2));
                rep(b2, k, out);
            }
        }
    }
    Ok(())
}

/// The canonical map φ: letterwise images, concatenated in order.
pub fn phi(t: &TangleWord, alphabet: &Alphabet) -> Result<Word> {
    let mut out = Vec::new();
    for &l in t.letters() {
        phi_letter(l, alphabet, &mut out)?;
    }
    Ok(Word::from_letters(out))
}

/// The word shift `ω_k(w) = d₂^k w b₂^k`, the φ-image of the strand shift.
pub fn omega(word: &Word, k: usize) -> Word {
    let mut out = Vec::with_capacity(word.len() + 2 * k);
    rep(Letter::new(Kind::D, 2), k, &mut out);
    out.extend_from_slice(word.letters());
    rep(Letter::new(Kind::B, 2), k, &mut out);
    Word::from_letters(out)
}

/// Which member of the braid-word family to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SigmaKind {
    /// `Σ_{k,l} = σ_k σ_{k+1} ⋯ σ_{k+l-1}`.
    Sigma,
    /// `Σ̄_{k,l} = σ_{k+l-1} ⋯ σ_{k+1} σ_k`.
    SigmaBar,
    /// `Σ′_{k,0} = 1`, `Σ′_{k,l} = σ_{k+l-1}⁻¹ (σ_{k+l-2}⁻¹ σ_{k+l-1}⁻¹) ⋯
    /// (σ_k⁻¹ ⋯ σ_{k+l-1}⁻¹)`.
    SigmaPrime,
}

/// Builds one of the braid-word families.
pub fn sigma_family(kind: SigmaKind, k: u32, l: u32) -> TangleWord {
    let mut letters = Vec::new();
    match kind {
        SigmaKind::Sigma => {
            for j in 0..l {
                letters.push(TangleLetter::new(TangleKind::Sigma, k + j));
            }
        }
        SigmaKind::SigmaBar => {
            for j in (0..l).rev() {
                letters.push(TangleLetter::new(TangleKind::Sigma, k + j));
            }
        }
        SigmaKind::SigmaPrime => {
            for start in (0..l).rev() {
                for j in start..l {
                    letters.push(TangleLetter::new(TangleKind::SigmaInv, k + j));
                }
            }
        }
    }
    TangleWord { letters }
}

/// One instance of a tangle relation, as an equation between tangle words.
#[derive(Clone, Debug)]
pub struct TangleRelation {
    pub id: String,
    pub lhs: TangleWord,
    pub rhs: TangleWord,
}

fn tl(kind: TangleKind, k: u32) -> TangleLetter {
    TangleLetter::new(kind, k)
}

fn tw(letters: &[TangleLetter]) -> TangleWord {
    TangleWord::new(letters.to_vec())
}

fn generator_kinds(alphabet: &Alphabet) -> Vec<TangleKind> {
    let mut kinds = alloc::vec![
        TangleKind::Xi,
        TangleKind::Eta,
        TangleKind::Sigma,
        TangleKind::SigmaInv,
    ];
    for &m in alphabet.degrees() {
        kinds.push(TangleKind::Lambda(m));
    }
    kinds
}

fn kind_tag(kind: TangleKind) -> String {
    match kind {
        TangleKind::Xi => "xi".into(),
        TangleKind::Eta => "eta".into(),
        TangleKind::Sigma => "sig".into(),
        TangleKind::SigmaInv => "inv".into(),
        TangleKind::Lambda(m) => format!("lam{m}"),
    }
}

/// Instantiates the tangle relation families at `k = 1` with the sliding
/// index `l` bounded by `l_max`. Rigid mode emits families 11–23; non-rigid
/// replaces 23 by 23'.
pub fn tangle_relations(alphabet: &Alphabet, rigid: bool, l_max: u32) -> Vec<TangleRelation> {
    let mut out = Vec::new();
    let kinds = generator_kinds(alphabet);
    let k = 1u32;
    // Families 11-14: sliding a generator past another.
    for &kind in &kinds {
        for l in 1..=l_max {
            if l >= k {
                out.push(TangleRelation {
                    id: format!("T11[u={},l={l}]", kind_tag(kind)),
                    lhs: tw(&[tl(TangleKind::Xi, k), tl(kind, l)]),
                    rhs: tw(&[tl(kind, l + 2), tl(TangleKind::Xi, k)]),
                });
            }
            if l >= k + 2 {
                out.push(TangleRelation {
                    id: format!("T12[u={},l={l}]", kind_tag(kind)),
                    lhs: tw(&[tl(TangleKind::Eta, k), tl(kind, l)]),
                    rhs: tw(&[tl(kind, l - 2), tl(TangleKind::Eta, k)]),
                });
                out.push(TangleRelation {
                    id: format!("T13[u={},l={l}]", kind_tag(kind)),
                    lhs: tw(&[tl(TangleKind::Sigma, k), tl(kind, l)]),
                    rhs: tw(&[tl(kind, l), tl(TangleKind::Sigma, k)]),
                });
            }
            for &m in alphabet.degrees() {
                if m % 2 == 1 {
                    let p = (m + 1) as u32 / 2;
                    if l >= k + p {
                        out.push(TangleRelation {
                            id: format!("T14[m={m},u={},l={l}]", kind_tag(kind)),
                            lhs: tw(&[tl(TangleKind::Lambda(m), k), tl(kind, l)]),
                            rhs: tw(&[tl(kind, l - 1), tl(TangleKind::Lambda(m), k)]),
                        });
                    }
                } else {
                    let q = m as u32 / 2;
                    if l >= k + q {
                        out.push(TangleRelation {
                            id: format!("T14[m={m},u={},l={l}]", kind_tag(kind)),
                            lhs: tw(&[tl(TangleKind::Lambda(m), k), tl(kind, l)]),
                            rhs: tw(&[tl(kind, l), tl(TangleKind::Lambda(m), k)]),
                        });
                    }
                }
            }
        }
    }
    // 15: a cap annihilates an adjacent cup.
    out.push(TangleRelation {
        id: "T15.1".into(),
        lhs: tw(&[tl(TangleKind::Eta, k + 1), tl(TangleKind::Xi, k)]),
        rhs: TangleWord::default(),
    });
    out.push(TangleRelation {
        id: "T15.2".into(),
        lhs: tw(&[tl(TangleKind::Eta, k), tl(TangleKind::Xi, k + 1)]),
        rhs: TangleWord::default(),
    });
    // 16: a crossing pulled around an extremum inverts.
    out.push(TangleRelation {
        id: "T16.1".into(),
        lhs: tw(&[
            tl(TangleKind::Eta, k + 2),
            tl(TangleKind::Sigma, k + 1),
            tl(TangleKind::Xi, k),
        ]),
        rhs: tw(&[tl(TangleKind::SigmaInv, k)]),
    });
    out.push(TangleRelation {
        id: "T16.2".into(),
        lhs: tw(&[
            tl(TangleKind::Eta, k),
            tl(TangleKind::Sigma, k + 1),
            tl(TangleKind::Xi, k + 2),
        ]),
        rhs: tw(&[tl(TangleKind::SigmaInv, k)]),
    });
    // 17/18: a vertex pulled around an extremum.
    for &m in alphabet.degrees() {
        if m % 2 == 1 {
            let p = (m + 1) as u32 / 2;
            out.push(TangleRelation {
                id: format!("T17.1[m={m}]"),
                lhs: tw(&[
                    tl(TangleKind::Eta, k + p - 1),
                    tl(TangleKind::Lambda(m), k + 1),
                    tl(TangleKind::Xi, k),
                ]),
                rhs: tw(&[tl(TangleKind::Lambda(m), k)]),
            });
            out.push(TangleRelation {
                id: format!("T17.2[m={m}]"),
                lhs: tw(&[
                    tl(TangleKind::Eta, k),
                    tl(TangleKind::Lambda(m), k + 1),
                    tl(TangleKind::Xi, k + p),
                ]),
                rhs: tw(&[tl(TangleKind::Lambda(m), k)]),
            });
        } else {
            let q = m as u32 / 2;
            out.push(TangleRelation {
                id: format!("T18.1[m={m}]"),
                lhs: tw(&[
                    tl(TangleKind::Eta, k + q),
                    tl(TangleKind::Lambda(m), k + 1),
                    tl(TangleKind::Xi, k),
                ]),
                rhs: tw(&[tl(TangleKind::Lambda(m), k)]),
            });
            out.push(TangleRelation {
                id: format!("T18.2[m={m}]"),
                lhs: tw(&[
                    tl(TangleKind::Eta, k),
                    tl(TangleKind::Lambda(m), k + 1),
                    tl(TangleKind::Xi, k + q),
                ]),
                rhs: tw(&[tl(TangleKind::Lambda(m), k)]),
            });
        }
    }
    // 19: a kink near an extremum straightens.
    out.push(TangleRelation {
        id: "T19.1".into(),
        lhs: tw(&[tl(TangleKind::Sigma, k), tl(TangleKind::Xi, k)]),
        rhs: tw(&[tl(TangleKind::Xi, k)]),
    });
    out.push(TangleRelation {
        id: "T19.2".into(),
        lhs: tw(&[tl(TangleKind::Eta, k), tl(TangleKind::Sigma, k)]),
        rhs: tw(&[tl(TangleKind::Eta, k)]),
    });
    // 20: opposite crossings cancel.
    out.push(TangleRelation {
        id: "T20.1".into(),
        lhs: tw(&[tl(TangleKind::Sigma, k), tl(TangleKind::SigmaInv, k)]),
        rhs: TangleWord::default(),
    });
    out.push(TangleRelation {
        id: "T20.2".into(),
        lhs: tw(&[tl(TangleKind::SigmaInv, k), tl(TangleKind::Sigma, k)]),
        rhs: TangleWord::default(),
    });
    // 21: the braid relation.
    out.push(TangleRelation {
        id: "T21".into(),
        lhs: tw(&[
            tl(TangleKind::Sigma, k),
            tl(TangleKind::Sigma, k + 1),
            tl(TangleKind::Sigma, k),
        ]),
        rhs: tw(&[
            tl(TangleKind::Sigma, k + 1),
            tl(TangleKind::Sigma, k),
            tl(TangleKind::Sigma, k + 1),
        ]),
    });
    // 22: a vertex against the braid stairs.
    for &m in alphabet.degrees() {
        if m % 2 == 1 {
            let p = (m + 1) as u32 / 2;
            out.push(TangleRelation {
                id: format!("T22.1[m={m}]"),
                lhs: tw(&[tl(TangleKind::Lambda(m), k + 1)])
                    .concat(&sigma_family(SigmaKind::Sigma, k, p)),
                rhs: sigma_family(SigmaKind::Sigma, k, p - 1)
                    .concat(&tw(&[tl(TangleKind::Lambda(m), k)])),
            });
            out.push(TangleRelation {
                id: format!("T22.2[m={m}]"),
                lhs: tw(&[tl(TangleKind::Lambda(m), k)])
                    .concat(&sigma_family(SigmaKind::SigmaBar, k, p)),
                rhs: sigma_family(SigmaKind::SigmaBar, k, p - 1)
                    .concat(&tw(&[tl(TangleKind::Lambda(m), k + 1)])),
            });
        } else {
            let q = m as u32 / 2;
            out.push(TangleRelation {
                id: format!("T22.3[m={m}]"),
                lhs: tw(&[tl(TangleKind::Lambda(m), k + 1)])
                    .concat(&sigma_family(SigmaKind::Sigma, k, q)),
                rhs: sigma_family(SigmaKind::Sigma, k, q)
                    .concat(&tw(&[tl(TangleKind::Lambda(m), k)])),
            });
            out.push(TangleRelation {
                id: format!("T22.4[m={m}]"),
                lhs: tw(&[tl(TangleKind::Lambda(m), k)])
                    .concat(&sigma_family(SigmaKind::SigmaBar, k, q)),
                rhs: sigma_family(SigmaKind::SigmaBar, k, q)
                    .concat(&tw(&[tl(TangleKind::Lambda(m), k + 1)])),
            });
        }
    }
    if rigid {
        // 23: a vertex against the inverse stairs.
        for &m in alphabet.degrees() {
            if m % 2 == 1 {
                let p = (m + 1) as u32 / 2;
                out.push(TangleRelation {
                    id: format!("T23.1[m={m}]"),
                    lhs: tw(&[tl(TangleKind::Lambda(m), k)])
                        .concat(&sigma_family(SigmaKind::SigmaPrime, k, p - 1)),
                    rhs: sigma_family(SigmaKind::SigmaPrime, k, p - 2)
                        .concat(&tw(&[tl(TangleKind::Lambda(m), k)])),
                });
            } else {
                let q = m as u32 / 2;
                out.push(TangleRelation {
                    id: format!("T23.2[m={m}]"),
                    lhs: tw(&[tl(TangleKind::Lambda(m), k)])
                        .concat(&sigma_family(SigmaKind::SigmaPrime, k, q - 1)),
                    rhs: sigma_family(SigmaKind::SigmaPrime, k, q - 1)
                        .concat(&tw(&[tl(TangleKind::Lambda(m), k)])),
                });
            }
        }
    } else {
        // 23': a crossing directly below a vertex is absorbed.
        for &m in alphabet.degrees() {
            out.push(TangleRelation {
                id: format!("T23'[m={m}]"),
                lhs: tw(&[tl(TangleKind::Lambda(m), k), tl(TangleKind::Sigma, k)]),
                rhs: tw(&[tl(TangleKind::Lambda(m), k)]),
            });
        }
    }
    out
}

/// Unmatched stub count of the page-0 projection.
fn page0_deficiency(w: &Word) -> i64 {
    let mut surplus = 0i64;
    let mut min_surplus = 0i64;
    for &l in w.letters() {
        let (c, o) = crate::pages::stub_counts(l, 0);
        surplus -= c as i64;
        min_surplus = min_surplus.min(surplus);
        surplus += o as i64;
    }
    -min_surplus + (surplus - min_surplus)
}

/// Closes a tangle word to a balanced word by composing with cups on top and
/// caps on the bottom, searching greedily within a window of strand indices;
/// reports failure when no closure is found.
pub fn close_tangle(t: &TangleWord, alphabet: &Alphabet, window: u32) -> Result<Word> {
    for shift in 0..window {
        let mut current = t.shift(shift);
        for _round in 0..(4 * window) {
            let word = phi(&current, alphabet)?;
            if crate::pages::is_balanced(&word).is_balanced() {
                return Ok(word);
            }
            let now = page0_deficiency(&word);
            let mut improved = false;
            'search: for strand in 1..=window {
                for kind in [TangleKind::Xi, TangleKind::Eta] {
                    for front in [true, false] {
                        let letter = tl(kind, strand);
                        let cand = if front {
                            tw(&[letter]).concat(&current)
                        } else {
                            current.concat(&tw(&[letter]))
                        };
                        let cand_word = phi(&cand, alphabet)?;
                        if page0_deficiency(&cand_word) < now {
                            current = cand;
                            improved = true;
                            break 'search;
                        }
                    }
                }
            }
            if !improved {
                break;
            }
        }
    }
    Err(Error::Precondition("no closure found within the window".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pages::{is_balanced, is_page_balanced};

    fn ab(n: u16) -> Alphabet {
        Alphabet::n_graphs(n)
    }

    #[test]
    fn phi_generator_images() {
        let a = ab(6);
        let img = |s: &str| phi(&parse_tangle(s, &a).unwrap(), &a).unwrap().render();
        assert_eq!(img("xi1"), "d2 c2");
        assert_eq!(img("eta1"), "a2 b2");
        assert_eq!(img("sig1"), "b1 d2 d1 b2");
        assert_eq!(img("inv1"), "d2 b1 b2 d1");
        assert_eq!(img("lam3_1"), "x3_2 b2");
        assert_eq!(img("lam4_1"), "d2 x4_2 b2");
        assert_eq!(img("lam5_1"), "x5_2 b2");
        assert_eq!(img("lam6_1"), "d2 x6_2 b2");
        assert_eq!(img("lam4_2"), "d2 d2 x4_2 b2 b2");
    }

    #[test]
    fn phi_images_are_almost_balanced() {
        let a = ab(6);
        for s in ["xi2", "eta3", "sig2", "inv2", "lam3_2", "lam4_1", "lam5_3", "lam6_2"] {
            let w = phi(&parse_tangle(s, &a).unwrap(), &a).unwrap();
            assert!(is_page_balanced(&w, 1), "{s} not 1-balanced");
            assert!(is_page_balanced(&w, 2), "{s} not 2-balanced");
        }
    }

    #[test]
    fn shift_and_omega() {
        let a = ab(2);
        let t = parse_tangle("xi1 xi2", &a).unwrap();
        assert_eq!(t.shift(1).render(), "xi2 xi3");
        assert_eq!(t.shift(0), t);
        let w = crate::words::parse_word("a2 b2", &a).unwrap();
        assert_eq!(omega(&w, 1).render(), "d2 a2 b2 b2");
    }

    #[test]
    fn sigma_builders() {
        assert_eq!(sigma_family(SigmaKind::Sigma, 1, 2).render(), "sig1 sig2");
        assert_eq!(
            sigma_family(SigmaKind::SigmaPrime, 1, 2).render(),
            "inv2 inv1 inv2"
        );
        assert!(sigma_family(SigmaKind::SigmaPrime, 1, 0).is_empty());
        let d = crate::rewrite::d_word(1, 2);
        assert_eq!(Word::from_letters(d).render(), "d2 d0 d1");
    }

    #[test]
    fn relation_families_present() {
        let rels = tangle_relations(&ab(4), true, 3);
        assert!(rels.iter().any(|r| r.id == "T15.1"));
        assert!(rels.iter().any(|r| r.id == "T21"));
        assert!(rels.iter().any(|r| r.id.starts_with("T22")));
        let rels = tangle_relations(&ab(4), false, 3);
        assert!(rels.iter().any(|r| r.id.starts_with("T23'")));
    }

    #[test]
    fn sliding_relation_examples() {
        let rels = tangle_relations(&ab(2), true, 3);
        let r = rels.iter().find(|r| r.id == "T15.1").unwrap();
        assert_eq!(r.lhs.render(), "eta2 xi1");
        assert!(r.rhs.is_empty());
        let r = rels.iter().find(|r| r.id == "T19.2").unwrap();
        assert_eq!(r.lhs.render(), "eta1 sig1");
        assert_eq!(r.rhs.render(), "eta1");
        let r = rels.iter().find(|r| r.id == "T21").unwrap();
        assert_eq!(r.lhs.render(), "sig1 sig2 sig1");
        assert_eq!(r.rhs.render(), "sig2 sig1 sig2");
    }

    #[test]
    fn closure_of_a_crossing() {
        let a = ab(2);
        let t = parse_tangle("sig1", &a).unwrap();
        let closed = close_tangle(&t, &a, 4).unwrap();
        assert!(is_balanced(&closed).is_balanced());
    }
}
