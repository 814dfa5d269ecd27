//! Arch-number accounting and the graph constructions: disjoint union,
//! vertex sum, edge sum, loop sum, two-bridge words, the trivial graphs, and
//! the three-letters presentation bound.
//!
//! For a general embedding with `ar` arches the complexity bound is
//! `ar - 2`; the constructions account exactly: union and vertex sum add the
//! arch numbers, the edge sum adds one extra arch, the loop sum removes two.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fundgroup::{neuwirth_presentation, GroupPresentation};
use crate::pages::{
    arc_matching_general, general_balance, Balance, Dir, EmbeddingModel, GeneralLetter,
    GeneralWord,
};
use crate::words::{Kind, Letter, Word};

/// Upper bound on the three-page complexity carried by this embedding.
pub fn tp_upper_bound(model: &EmbeddingModel) -> usize {
    model.arch_number().saturating_sub(2)
}

/// The two-bridge word with parameters `p ≥ q ≥ 1`:
/// `a0 a1^(p-1) b2 b1^(q-1) b0 c1^(p-q) d1^(q-1) c2 c1^(q-1)`,
/// a balanced word of `2p + 2q` letters.
pub fn two_bridge_word(p: u32, q: u32) -> Result<Word> {
    if q < 1 || p < q {
        return Err(Error::Precondition(
            "two-bridge parameters need p >= q >= 1".into(),
        ));
    }
    let mut letters = Vec::with_capacity(2 * (p + q) as usize);
    let l = |kind, page| Letter::new(kind, page);
    letters.push(l(Kind::A, 0));
    for _ in 0..p - 1 {
        letters.push(l(Kind::A, 1));
    }
    letters.push(l(Kind::B, 2));
    for _ in 0..q - 1 {
        letters.push(l(Kind::B, 1));
    }
    letters.push(l(Kind::B, 0));
    for _ in 0..p - q {
        letters.push(l(Kind::C, 1));
    }
    for _ in 0..q - 1 {
        letters.push(l(Kind::D, 1));
    }
    letters.push(l(Kind::C, 2));
    for _ in 0..q - 1 {
        letters.push(l(Kind::C, 1));
    }
    Ok(Word::from_letters(letters))
}

/// The trivial graph on two vertices joined by `k ≥ 2` edges: two axis
/// points, one arch in page 0 and `k-1` nested arches in page 1.
pub fn theta_model(k: usize) -> Result<EmbeddingModel> {
    if k < 2 {
        return Err(Error::Precondition("a trivial graph needs k >= 2 edges".into()));
    }
    let mut open: [Vec<Dir>; 3] = Default::default();
    open[0].push(Dir::R);
    for _ in 0..k - 1 {
        open[1].push(Dir::R);
    }
    let mut close: [Vec<Dir>; 3] = Default::default();
    close[0].push(Dir::L);
    for _ in 0..k - 1 {
        close[1].push(Dir::L);
    }
    let gw = GeneralWord::new(alloc::vec![
        GeneralLetter::new(open)?,
        GeneralLetter::new(close)?,
    ]);
    arc_matching_general(&gw)
}

/// Concatenation of two balanced words; arch numbers add.
pub fn disjoint_union(u: &Word, v: &Word) -> Result<Word> {
    for w in [u, v] {
        if let Balance::Unbalanced { page, position } = crate::pages::is_balanced(w) {
            return Err(Error::Unbalanced { page, position });
        }
    }
    Ok(u.concat(v))
}

/// Concatenation of two balanced general words.
pub fn disjoint_union_general(u: &GeneralWord, v: &GeneralWord) -> Result<GeneralWord> {
    for w in [u, v] {
        if let Balance::Unbalanced { page, position } = general_balance(w) {
            return Err(Error::Unbalanced { page, position });
        }
    }
    Ok(u.concat(v))
}

fn merged_point(left: &GeneralLetter, right: &GeneralLetter) -> Result<GeneralLetter> {
    let mut stubs: [Vec<Dir>; 3] = Default::default();
    for page in 0..3usize {
        stubs[page].extend_from_slice(left.stubs(page as u8));
        stubs[page].extend_from_slice(right.stubs(page as u8));
    }
    GeneralLetter::new(stubs)
}

/// Vertex sum: the rightmost point of `g` merges with the leftmost point of
/// `h` into a single vertex. The merged point must fit in two pages; the
/// second summand is rotated if that helps. Arch numbers add.
pub fn vertex_sum(g: &GeneralWord, h: &GeneralWord) -> Result<GeneralWord> {
    for w in [g, h] {
        if let Balance::Unbalanced { page, position } = general_balance(w) {
            return Err(Error::Unbalanced { page, position });
        }
        if w.is_empty() {
            return Err(Error::Precondition("vertex sum needs non-empty summands".into()));
        }
    }
    let left = g.points().last().expect("non-empty");
    for shift in 0..3u8 {
        let hs = h.shift_index(shift);
        let right = &hs.points()[0];
        if let Ok(merged) = merged_point(left, right) {
            let mut points = g.points()[..g.len() - 1].to_vec();
            points.push(merged);
            points.extend_from_slice(&hs.points()[1..]);
            return Ok(GeneralWord::new(points));
        }
    }
    Err(Error::Precondition(
        "the merged vertex would occupy more than two pages in every rotation".into(),
    ))
}

/// Edge sum: a fresh arch joins the rightmost point of `g` to the leftmost
/// point of `h`. The new arch lands in page 0 when both glue points allow
/// it, otherwise in the first page they share. Arch numbers add plus one.
pub fn edge_sum(g: &GeneralWord, h: &GeneralWord) -> Result<(GeneralWord, u8)> {
    for w in [g, h] {
        if let Balance::Unbalanced { page, position } = general_balance(w) {
            return Err(Error::Unbalanced { page, position });
        }
        if w.is_empty() {
            return Err(Error::Precondition("edge sum needs non-empty summands".into()));
        }
    }
    let left = g.points().last().expect("non-empty");
    let right = &h.points()[0];
    let fits = |point: &GeneralLetter, page: u8| {
        !point.stubs(page).is_empty() || point.pages_occupied() < 2
    };
    let page = (0..3u8)
        .find(|&p| fits(left, p) && fits(right, p))
        .ok_or_else(|| {
            Error::Precondition("no page can carry the new edge at both glue points".into())
        })?;
    let mut lstubs: [Vec<Dir>; 3] = Default::default();
    let mut rstubs: [Vec<Dir>; 3] = Default::default();
    for pg in 0..3usize {
        lstubs[pg] = left.stubs(pg as u8).to_vec();
        rstubs[pg] = right.stubs(pg as u8).to_vec();
    }
    lstubs[page as usize].push(Dir::R); // last in projection order
    rstubs[page as usize].insert(0, Dir::L); // first in projection order
    let mut points = g.points()[..g.len() - 1].to_vec();
    points.push(GeneralLetter::new(lstubs)?);
    points.push(GeneralLetter::new(rstubs)?);
    points.extend_from_slice(&h.points()[1..]);
    Ok((GeneralWord::new(points), page))
}

/// Loop sum: drops `u`'s final two-closer letter and `v`'s initial
/// two-opener (rotating `v` to match pages) and concatenates; the dangling
/// stubs re-match across the junction. Arch numbers add minus two.
pub fn loop_sum(u: &Word, v: &Word) -> Result<Word> {
    for w in [u, v] {
        if let Balance::Unbalanced { page, position } = crate::pages::is_balanced(w) {
            return Err(Error::Unbalanced { page, position });
        }
    }
    let last = *u
        .letters()
        .last()
        .ok_or_else(|| Error::Precondition("loop sum needs non-empty words".into()))?;
    if last.kind != Kind::C {
        return Err(Error::Precondition(
            "the left word must end with a two-closer (c) letter".into(),
        ));
    }
    let first = *v
        .letters()
        .first()
        .ok_or_else(|| Error::Precondition("loop sum needs non-empty words".into()))?;
    if first.kind != Kind::A {
        return Err(Error::Precondition(
            "the right word must start with a two-opener (a) letter".into(),
        ));
    }
    // Rotate v so the opener's page pair matches the closer's.
    let shift = (3 + last.page as i8 - first.page as i8) as u8 % 3;
    let vs = v.shift_index(shift);
    let mut letters = u.letters()[..u.len() - 1].to_vec();
    letters.extend_from_slice(&vs.letters()[1..]);
    let glued = Word::from_letters(letters);
    if let Balance::Unbalanced { page, position } = crate::pages::is_balanced(&glued) {
        return Err(Error::Unbalanced { page, position });
    }
    Ok(glued)
}

/// Known exact values of the three-letters complexity, quoted facts only.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CatalogGroup {
    /// The infinite cyclic group: the unique group of index 1.
    Infinite,
    /// Free product of two infinite cyclics: index 2.
    FreeRankTwo,
    /// `Z₃ * Z`: the other group of index 2.
    CyclicThreeFreeZ,
    /// `Z ⊕ Z`: index 3.
    FreeAbelianRankTwo,
    /// Finite cyclic `Z_k`, `k > 1`: no three-letters presentation.
    FiniteCyclic,
}

/// The catalogued value, `None` standing for infinity.
pub fn tl_catalog(group: CatalogGroup) -> Option<usize> {
    match group {
        CatalogGroup::Infinite => Some(1),
        CatalogGroup::FreeRankTwo => Some(2),
        CatalogGroup::CyclicThreeFreeZ => Some(2),
        CatalogGroup::FreeAbelianRankTwo => Some(3),
        CatalogGroup::FiniteCyclic => None,
    }
}

/// Additivity under free products: the sum of the parts, infinite if any
/// part is.
pub fn tl_free_product(parts: &[CatalogGroup]) -> Option<usize> {
    parts.iter().map(|&g| tl_catalog(g)).sum()
}

/// Eliminates two generators of the Neuwirth presentation using short
/// relators, leaving `ar - 2` generators and at most `ar - 3` relators of at
/// most three symbols each; returns the presentation and the bound `ar - 2`.
/// Fails on the trivial-graph shape, which has a single extreme gap.
pub fn three_letters_presentation(
    model: &EmbeddingModel,
) -> Result<(GroupPresentation, usize)> {
    let ar = model.arch_number();
    if model.points().len() < 3 {
        return Err(Error::Precondition(
            "the embedding has a single extreme gap (trivial-graph shape)".into(),
        ));
    }
    let g = neuwirth_presentation(model)?;
    let mut labels = g.labels.clone();
    let mut relators = g.relators.clone();
    let target = ar.saturating_sub(2);
    let mut guard = 0usize;
    while labels.len() > target {
        guard += 1;
        if guard > 4 * ar + 8 {
            return Err(Error::Precondition(
                "could not eliminate two generators from short relators".into(),
            ));
        }
        // Free-reduce and drop trivial relators first.
        for r in relators.iter_mut() {
            let mut out: Vec<i32> = Vec::new();
            for &s in r.iter() {
                if out.last().is_some_and(|&l| l == -s) {
                    out.pop();
                } else {
                    out.push(s);
                }
            }
            *r = out;
        }
        relators.retain(|r| !r.is_empty());
        relators.sort();
        relators.dedup();
        // Use a shortest relator (length <= 2, distinct generators) to
        // eliminate a generator.
        let Some(ri) = relators
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                r.len() == 1 || (r.len() == 2 && r[0].unsigned_abs() != r[1].unsigned_abs())
            })
            .min_by_key(|(_, r)| r.len())
            .map(|(i, _)| i)
        else {
            return Err(Error::Precondition(
                "no short relator available for elimination".into(),
            ));
        };
        let r = relators.remove(ri);
        let (gen, expr): (usize, Vec<i32>) = match r.len() {
            1 => ((r[0].unsigned_abs() - 1) as usize, Vec::new()),
            2 => {
                let gen = (r[1].unsigned_abs() - 1) as usize;
                let other = r[0];
                // r = x g = 1 => g = x^{-1} (orientation fixed below).
                let expr = if r[1] > 0 {
                    alloc::vec![-other]
                } else {
                    alloc::vec![other]
                };
                (gen, expr)
            }
            _ => unreachable!(),
        };
        for other in relators.iter_mut() {
            let mut out: Vec<i32> = Vec::new();
            for &t in other.iter() {
                if (t.unsigned_abs() - 1) as usize == gen {
                    if t > 0 {
                        out.extend_from_slice(&expr);
                    } else {
                        out.extend(expr.iter().rev().map(|&x| -x));
                    }
                } else {
                    out.push(t);
                }
            }
            *other = out;
        }
        labels.remove(gen);
        for rr in relators.iter_mut() {
            for t in rr.iter_mut() {
                let idx = (t.unsigned_abs() - 1) as usize;
                if idx > gen {
                    *t = if *t > 0 { *t - 1 } else { *t + 1 };
                }
            }
        }
    }
    if relators.iter().any(|r| r.len() > 3) || relators.len() > ar.saturating_sub(3) {
        return Err(Error::Precondition(
            "elimination left a relator longer than three symbols".into(),
        ));
    }
    Ok((GroupPresentation { labels, relators }, target))
}

/// Renders a tp bound report line.
pub fn render_bound(word: &str, ar: usize) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    let _ = write!(s, "{word}: ar={ar} tp<={}", ar.saturating_sub(2));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fundgroup::{count_homs, fingerprint, homology, tietze_simplify};
    use crate::pages::{abstract_graph, arc_matching, is_balanced};
    use crate::words::{parse_word, Alphabet};

    fn w(text: &str) -> Word {
        parse_word(text, &Alphabet::links()).unwrap()
    }

    #[test]
    fn two_bridge_examples() {
        assert_eq!(two_bridge_word(2, 1).unwrap().render(), "a0 a1 b2 b0 c1 c2");
        assert_eq!(
            two_bridge_word(3, 1).unwrap().render(),
            "a0 a1 a1 b2 b0 c1 c1 c2"
        );
        assert_eq!(two_bridge_word(1, 1).unwrap().render(), "a0 b2 b0 c2");
        assert!(two_bridge_word(1, 2).is_err());
        for p in 1..=6u32 {
            for q in 1..=p {
                let word = two_bridge_word(p, q).unwrap();
                assert_eq!(word.len(), 2 * (p + q) as usize);
                assert!(is_balanced(&word).is_balanced(), "S({p},{q})");
            }
        }
    }

    #[test]
    fn tp_bounds() {
        let unknot = arc_matching(&w("a0 c0")).unwrap();
        assert_eq!(tp_upper_bound(&unknot), 0);
        let hopf = arc_matching(&two_bridge_word(2, 1).unwrap()).unwrap();
        assert_eq!(tp_upper_bound(&hopf), 4);
        let trefoil = arc_matching(&two_bridge_word(3, 1).unwrap()).unwrap();
        assert_eq!(tp_upper_bound(&trefoil), 6);
    }

    #[test]
    fn theta_models() {
        let t2 = theta_model(2).unwrap();
        assert_eq!(t2.arch_number(), 2);
        assert_eq!(tp_upper_bound(&t2), 0);
        let t3 = theta_model(3).unwrap();
        assert_eq!(t3.arch_number(), 3);
        let g = abstract_graph(&t3);
        assert_eq!(g.vertex_count, 2);
        assert_eq!(g.edge_count, 3);
        assert_eq!(g.betti, 2);
        let t5 = theta_model(5).unwrap();
        let (rank, torsion) = homology(&crate::fundgroup::neuwirth_presentation(&t5).unwrap());
        assert_eq!(rank, 4);
        assert!(torsion.is_empty());
        let s = tietze_simplify(&crate::fundgroup::neuwirth_presentation(&t5).unwrap(), 32);
        assert_eq!(s.generators(), 4);
        assert!(s.relators.is_empty());
        assert!(theta_model(1).is_err());
    }

    #[test]
    fn union_accounting() {
        let u = w("a0 c0");
        let both = disjoint_union(&u, &u).unwrap();
        assert_eq!(both.render(), "a0 c0 a0 c0");
        assert_eq!(arc_matching(&both).unwrap().arch_number(), 4);
        assert_eq!(disjoint_union(&u, &Word::empty()).unwrap(), u);
        let s21 = two_bridge_word(2, 1).unwrap();
        assert_eq!(
            arc_matching(&disjoint_union(&s21, &u).unwrap())
                .unwrap()
                .arch_number(),
            8
        );
        assert!(disjoint_union(&w("a0"), &u).is_err());
    }

    #[test]
    fn vertex_sum_wedge() {
        let u = crate::pages::GeneralWord::from_word(&w("a0 c0"));
        let wedge = vertex_sum(&u, &u).unwrap();
        let model = arc_matching_general(&wedge).unwrap();
        assert_eq!(model.arch_number(), 4);
        let g = abstract_graph(&model);
        assert_eq!(g.vertex_degrees, alloc::vec![4]);
        assert_eq!(g.betti, 2);
        // Wedge of two circles: free of rank two.
        let fp = fingerprint(&model).unwrap();
        assert_eq!(fp.homs[0], Some(36));
        assert!(vertex_sum(&u, &crate::pages::GeneralWord::default()).is_err());
    }

    #[test]
    fn edge_sum_dumbbell() {
        let u = crate::pages::GeneralWord::from_word(&w("a0 c0"));
        // The unknot's endpoints occupy pages 1 and 2, so the fresh edge
        // falls back from page 0 to page 1.
        let (dumbbell, page) = edge_sum(&u, &u).unwrap();
        assert_eq!(page, 1);
        let model = arc_matching_general(&dumbbell).unwrap();
        assert_eq!(model.arch_number(), 5);
        assert_eq!(tp_upper_bound(&model), 3);
        let g = abstract_graph(&model);
        assert_eq!(g.betti, 2);
        assert_eq!(g.vertex_degrees, alloc::vec![3, 3]);
        let fp = fingerprint(&model).unwrap();
        assert_eq!(fp.homs[0], Some(36));
    }

    #[test]
    fn loop_sum_examples() {
        let u = w("a0 c0");
        assert_eq!(loop_sum(&u, &u).unwrap().render(), "a0 c0");
        let s31 = two_bridge_word(3, 1).unwrap();
        let granny = loop_sum(&s31, &s31).unwrap();
        assert_eq!(granny.len(), 14);
        let model = arc_matching(&granny).unwrap();
        assert_eq!(model.arch_number(), 14);
        assert_eq!(tp_upper_bound(&model), 12);
        let granny_fp = fingerprint(&model).unwrap();
        let trefoil_fp = fingerprint(&arc_matching(&s31).unwrap()).unwrap();
        assert!(granny_fp.homs[0].unwrap() > trefoil_fp.homs[0].unwrap());
        assert!(loop_sum(&w("a0"), &u).is_err());
        assert!(loop_sum(&u, &Word::empty()).is_err());
    }

    #[test]
    fn three_letters_bounds() {
        let trefoil = arc_matching(&w("a2 d0 d2 a1 a1 b2 b0 c1 c1 c2")).unwrap();
        let (g, bound) = three_letters_presentation(&trefoil).unwrap();
        assert_eq!(bound, 8);
        assert_eq!(g.generators(), 8);
        assert_eq!(g.relators.len(), 7);
        assert!(g.relators.iter().all(|r| r.len() <= 3));
        let hopf = arc_matching(&two_bridge_word(2, 1).unwrap()).unwrap();
        let (_, bound) = three_letters_presentation(&hopf).unwrap();
        assert_eq!(bound, 4);
        assert!(tl_catalog(CatalogGroup::FreeAbelianRankTwo).unwrap() <= bound);
        assert!(three_letters_presentation(&theta_model(3).unwrap()).is_err());
    }

    #[test]
    fn catalog_additivity() {
        use CatalogGroup::*;
        assert_eq!(tl_free_product(&[Infinite, Infinite]), Some(2));
        assert_eq!(tl_free_product(&[Infinite, FreeAbelianRankTwo]), Some(4));
        assert_eq!(tl_free_product(&[Infinite, FiniteCyclic]), None);
    }

    #[test]
    fn hom_counts_multiply_across_sums() {
        let u = crate::pages::GeneralWord::from_word(&w("a0 c0"));
        let s21 = crate::pages::GeneralWord::from_word(&two_bridge_word(2, 1).unwrap());
        let parts = [
            fingerprint(&arc_matching_general(&u).unwrap()).unwrap(),
            fingerprint(&arc_matching_general(&s21).unwrap()).unwrap(),
        ];
        let expected = parts[0].homs[0].unwrap() * parts[1].homs[0].unwrap();
        let union = disjoint_union_general(&u, &s21).unwrap();
        let vsum = vertex_sum(&u, &s21).unwrap();
        let (esum, _) = edge_sum(&u, &s21).unwrap();
        for sum in [union, vsum, esum] {
            let fp = fingerprint(&arc_matching_general(&sum).unwrap()).unwrap();
            assert_eq!(fp.homs[0], Some(expected));
        }
    }
}
