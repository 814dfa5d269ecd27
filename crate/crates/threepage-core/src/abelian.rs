//! The abelianization invariant: the natural map into the free abelian group
//! of rank `3 + |degrees|`, the per-page linear functionals, and the
//! membership test for the image of the center.
//!
//! Letter images: `a_i ↦ ã_i`, `b_i ↦ ã_{i-1} - ã_{i+1}`, `c_i ↦ -ã_i`,
//! `d_i ↦ ã_{i+1} - ã_{i-1}`, `x_{2q,i} ↦ x̃_{2q}`, and for odd degrees
//! `x_{2p-1,0} ↦ x̃`, `x_{2p-1,1} ↦ x̃ + ã₂ - ã₀`, `x_{2p-1,2} ↦ x̃ + ã₂ - ã₁`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use crate::words::{nxt, prv, Kind, Word};

/// An element of the free abelian group: coefficients of `ã₀, ã₁, ã₂` plus
/// one coefficient per vertex degree. Plain 64-bit integers are exact here:
/// every coefficient is bounded by the word length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct AbelianVector {
    pub a: [i64; 3],
    pub x: BTreeMap<u16, i64>,
}

impl AbelianVector {
    pub fn zero() -> AbelianVector {
        AbelianVector::default()
    }

    pub fn is_zero(&self) -> bool {
        self.a == [0; 3] && self.x.values().all(|&k| k == 0)
    }

    pub fn add_assign(&mut self, other: &AbelianVector) {
        for i in 0..3 {
            self.a[i] += other.a[i];
        }
        for (&m, &k) in &other.x {
            *self.x.entry(m).or_insert(0) += k;
        }
    }

    fn add_a(&mut self, i: u8, c: i64) {
        self.a[i as usize] += c;
    }

    /// Drops zero vertex coefficients so equal vectors compare equal.
    fn normalize(mut self) -> AbelianVector {
        self.x.retain(|_, k| *k != 0);
        self
    }
}

impl fmt::Display for AbelianVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a[0], self.a[1], self.a[2])?;
        if !self.x.is_empty() {
            write!(f, ";")?;
            for (m, k) in &self.x {
                write!(f, " x{m}:{k}")?;
            }
        }
        Ok(())
    }
}

/// Sum of the letter images; a homomorphism from words to the free abelian
/// group, constant on the defining relations.
pub fn abelianize(word: &Word) -> AbelianVector {
    let mut v = AbelianVector::zero();
    for l in word.letters() {
        let i = l.page;
        match l.kind {
            Kind::A => v.add_a(i, 1),
            Kind::B => {
                v.add_a(prv(i), 1);
                v.add_a(nxt(i), -1);
            }
            Kind::C => v.add_a(i, -1),
            Kind::D => {
                v.add_a(nxt(i), 1);
                v.add_a(prv(i), -1);
            }
            Kind::X(m) => {
                *v.x.entry(m).or_insert(0) += 1;
                if m % 2 == 1 {
                    match i {
                        1 => {
                            v.add_a(2, 1);
                            v.add_a(0, -1);
                        }
                        2 => {
                            v.add_a(2, 1);
                            v.add_a(1, -1);
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    v.normalize()
}

/// The linear functional with `F_i(ã_i) = 0`, `F_i(ã_{i±1}) = 1`, and
/// `F₂(x̃_m) = 1` for odd `m` (zero on the other vertex coefficients). For
/// every word, `F_i` of its abelianization equals the signed bracket count
/// `#( - #)` of the projection `β_i`.
pub fn functional_f(i: u8, v: &AbelianVector) -> i64 {
    let mut f = v.a[nxt(i) as usize] + v.a[prv(i) as usize];
    if i == 2 {
        f += v.x.iter().filter(|(m, _)| *m % 2 == 1).map(|(_, k)| k).sum::<i64>();
    }
    f
}

/// Signed bracket count of `β_i(w)`.
pub fn signed_bracket_count(word: &Word, page: u8) -> i64 {
    let mut c = 0i64;
    for &l in word.letters() {
        let (closes, opens) = crate::pages::stub_counts(l, page);
        c += opens as i64 - closes as i64;
    }
    c
}

/// Membership in the image of the center: the vector must be
/// `(-z, -z, z)` on the regular coordinates with all vertex coefficients
/// nonnegative and the odd ones summing to `2z`.
pub fn center_image_member(v: &AbelianVector) -> bool {
    let z = v.a[2];
    if v.a[0] != -z || v.a[1] != -z {
        return false;
    }
    if v.x.values().any(|&k| k < 0) {
        return false;
    }
    let odd_sum: i64 = v.x.iter().filter(|(m, _)| *m % 2 == 1).map(|(_, k)| k).sum();
    odd_sum == 2 * z
}

/// Rendering used by the command line: `a0,a1,a2; x3:k3 x4:k4 …`.
pub fn render(v: &AbelianVector) -> String {
    use alloc::string::ToString;
    v.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_word, Alphabet};

    fn w(text: &str, n: u16) -> Word {
        parse_word(text, &Alphabet::n_graphs(n)).unwrap()
    }

    #[test]
    fn letter_images() {
        let v = abelianize(&w("b1", 2));
        assert_eq!(v.a, [1, 0, -1]); // ã₀ - ã₂
        assert!(abelianize(&w("d0 d1 d2", 2)).is_zero());
    }

    #[test]
    fn four_vertex_word_image() {
        let v = abelianize(&w("a0 a1 b2 d1 x4_1 d2 c1 c2", 4));
        assert_eq!(v.a, [0, 0, 0]);
        assert_eq!(v.x.get(&4), Some(&1));
    }

    #[test]
    fn functional_examples() {
        assert_eq!(functional_f(1, &abelianize(&w("a0", 2))), 1);
        assert_eq!(signed_bracket_count(&w("a0", 2), 1), 1);
        assert_eq!(functional_f(0, &AbelianVector::zero()), 0);
        assert_eq!(functional_f(2, &abelianize(&w("x3_0", 3))), 1);
        assert_eq!(signed_bracket_count(&w("x3_0", 3), 2), 1);
    }

    #[test]
    fn functionals_match_bracket_counts_on_all_letters() {
        let alphabet = Alphabet::n_graphs(6);
        for l in alphabet.letters() {
            let word = Word::from_letters(alloc::vec![l]);
            let v = abelianize(&word);
            for i in 0..3 {
                assert_eq!(
                    functional_f(i, &v),
                    signed_bracket_count(&word, i),
                    "letter {l} page {i}"
                );
            }
        }
    }

    #[test]
    fn center_image_examples() {
        assert!(center_image_member(&AbelianVector::zero()));
        let v = abelianize(&w("a2 x3_0 x3_0 c0 c1", 3));
        assert_eq!(v.a, [-1, -1, 1]);
        assert_eq!(v.x.get(&3), Some(&2));
        assert!(center_image_member(&v));
        let mut only_a0 = AbelianVector::zero();
        only_a0.a[0] = 1;
        assert!(!center_image_member(&only_a0));
    }

    #[test]
    fn homomorphism_property() {
        let u = w("a0 x3_1 d2", 4);
        let v = w("b1 x4_0 c2 x3_2", 4);
        let mut sum = abelianize(&u);
        sum.add_assign(&abelianize(&v));
        assert_eq!(abelianize(&u.concat(&v)), sum.normalize());
    }
}
