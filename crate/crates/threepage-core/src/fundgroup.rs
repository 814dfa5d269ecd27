//! Presentations of the fundamental group of the complement, built from an
//! embedding model: one generator per arc, one short relator per axis gap.
//! Tietze simplification, integral homology via Smith normal form, and
//! homomorphism counts into small symmetric groups give the computable
//! fingerprint the census keys on.
//!
//! For each arc of a page, the generator is the loop around that arc and
//! everything farther from the axis in the same page; for each gap between
//! consecutive axis points, the relator multiplies, in page order 0·1·2, the
//! generator of the innermost arc spanning the gap in each page. All
//! exponents are positive: generators are consistently oriented cumulative
//! loops, and flipping one generator is a free-group automorphism.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pages::{abstract_graph, EmbeddingModel};
use crate::snf;

/// A finitely presented group: labelled generators and relators as sequences
/// of signed generator references (`+k` is generator `k-1`, `-k` its
/// inverse).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    pub labels: Vec<String>,
    pub relators: Vec<Vec<i32>>,
}

impl GroupPresentation {
    pub fn generators(&self) -> usize {
        self.labels.len()
    }

    pub fn render_relator(&self, relator: &[i32]) -> String {
        let mut s = String::new();
        for (k, &r) in relator.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let label = &self.labels[(r.unsigned_abs() - 1) as usize];
            s.push_str(label);
            if r < 0 {
                s.push_str("^-1");
            }
        }
        s
    }
}

/// The presentation read off a balanced model.
pub fn neuwirth_presentation(model: &EmbeddingModel) -> Result<GroupPresentation> {
    let n = model.points().len();
    if n == 0 {
        return Err(Error::Precondition("the model has no axis points".into()));
    }
    // Generators: arcs per page, labelled by page and order of opening.
    let mut labels = Vec::new();
    let mut arc_ids: [Vec<usize>; 3] = Default::default();
    for page in 0..3u8 {
        for (k, _) in model.arcs(page).iter().enumerate() {
            arc_ids[page as usize].push(labels.len());
            labels.push(format!("p{page}.{}", k + 1));
        }
    }
    let mut relators = Vec::new();
    for gap in 0..n.saturating_sub(1) {
        let mut relator = Vec::new();
        for page in 0..3u8 {
            // Innermost spanning arc: the largest opening stub position
            // among the arcs whose point span covers the gap.
            let mut best: Option<(usize, (usize, usize))> = None;
            for (k, arc) in model.arcs(page).iter().enumerate() {
                if arc.open.0 <= gap && arc.close.0 > gap {
                    let key = arc.open;
                    if best.map_or(true, |(_, bk)| key > bk) {
                        best = Some((k, key));
                    }
                }
            }
            if let Some((k, _)) = best {
                relator.push(arc_ids[page as usize][k] as i32 + 1);
            }
        }
        if !relator.is_empty() {
            relators.push(relator);
        }
    }
    Ok(GroupPresentation { labels, relators })
}

fn free_reduce(relator: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(relator.len());
    for &r in relator.iter() {
        if out.last().is_some_and(|&l| l == -r) {
            out.pop();
        } else {
            out.push(r);
        }
    }
    // Cyclic reduction: conjugation does not change the normal closure.
    while out.len() >= 2 && out[0] == -*out.last().unwrap() {
        out.remove(0);
        out.pop();
    }
    *relator = out;
}

/// Bounded Tietze simplification: free/cyclic reduction, dropping empty and
/// duplicate relators, and eliminating any generator that occurs exactly
/// once in some relator by substituting it away.
pub fn tietze_simplify(g: &GroupPresentation, max_passes: usize) -> GroupPresentation {
    let mut labels = g.labels.clone();
    let mut relators = g.relators.clone();
    for _ in 0..max_passes {
        let mut changed = false;
        for r in relators.iter_mut() {
            let before = r.len();
            free_reduce(r);
            changed |= r.len() != before;
        }
        let before = relators.len();
        relators.retain(|r| !r.is_empty());
        relators.sort();
        relators.dedup();
        changed |= relators.len() != before;
        // Eliminate a generator occurring exactly once in some relator.
        'search: for ri in 0..relators.len() {
            let r = relators[ri].clone();
            for (pos, &s) in r.iter().enumerate() {
                let gen = (s.unsigned_abs() - 1) as usize;
                let occurs_here = r
                    .iter()
                    .filter(|&&t| (t.unsigned_abs() - 1) as usize == gen)
                    .count();
                if occurs_here != 1 {
                    continue;
                }
                // r = u g v = 1  =>  g = u^{-1} v^{-1}  (when s > 0).
                let mut expr: Vec<i32> = Vec::new();
                for &t in r[..pos].iter().rev() {
                    expr.push(-t);
                }
                for &t in r[pos + 1..].iter().rev() {
                    expr.push(-t);
                }
                let expr: Vec<i32> = if s > 0 {
                    expr
                } else {
                    expr.iter().rev().map(|&t| -t).collect()
                };
                let mut next: Vec<Vec<i32>> = Vec::with_capacity(relators.len() - 1);
                for (rj, other) in relators.iter().enumerate() {
                    if rj == ri {
                        continue;
                    }
                    let mut out: Vec<i32> = Vec::new();
                    for &t in other {
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
                    free_reduce(&mut out);
                    next.push(out);
                }
                labels.remove(gen);
                for rr in next.iter_mut() {
                    for t in rr.iter_mut() {
                        let idx = (t.unsigned_abs() - 1) as usize;
                        if idx > gen {
                            *t = if *t > 0 { *t - 1 } else { *t + 1 };
                        }
                    }
                }
                relators = next;
                changed = true;
                break 'search;
            }
        }
        if !changed {
            break;
        }
    }
    GroupPresentation { labels, relators }
}

/// `(rank, torsion)` of the abelianization, via Smith normal form of the
/// relator matrix.
pub fn homology(g: &GroupPresentation) -> (usize, Vec<u64>) {
    let gens = g.generators();
    let mat: Vec<Vec<i128>> = g
        .relators
        .iter()
        .map(|r| {
            let mut row = alloc::vec![0i128; gens];
            for &s in r {
                let idx = (s.unsigned_abs() - 1) as usize;
                row[idx] += if s > 0 { 1 } else { -1 };
            }
            row
        })
        .collect();
    snf::cokernel(mat, gens)
}

/// Composition tables for the symmetric group `S_n`, `n ≤ 5`; the identity
/// permutation has index 0.
struct SymGroup {
    size: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

fn permutations(n: u8) -> Vec<Vec<u8>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for pos in 0..=smaller.len() {
            let mut p = smaller.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

fn sym_group(n: u8) -> SymGroup {
    let mut perms = permutations(n);
    perms.sort();
    let size = perms.len();
    let index = |p: &[u8]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap() as u16;
    let mut mul = alloc::vec![0u16; size * size];
    let mut inv = alloc::vec![0u16; size];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            let comp: Vec<u8> = (0..n).map(|x| pa[pb[x as usize] as usize]).collect();
            mul[a * size + b] = index(&comp);
        }
        let mut ia = alloc::vec![0u8; n as usize];
        for (x, &y) in pa.iter().enumerate() {
            ia[y as usize] = x as u8;
        }
        inv[a] = index(&ia);
    }
    SymGroup { size, mul, inv }
}

/// Exhaustive count of homomorphisms into `S_n` by backtracking over the
/// generator images with early relator rejection.
pub fn count_homs(g: &GroupPresentation, n: u8, budget: u64) -> Result<u64> {
    if !(3..=5).contains(&n) {
        return Err(Error::Precondition("symmetric group rank must be 3..=5".into()));
    }
    let gens = g.generators();
    let sym = sym_group(n);
    match (sym.size as u64).checked_pow(gens as u32) {
        Some(s) if s <= budget => {}
        _ => {
            return Err(Error::HomBudget {
                generators: gens,
                sym: n,
            })
        }
    }
    // Check each relator as soon as all its generators have images.
    let mut relator_level: Vec<(usize, &Vec<i32>)> = g
        .relators
        .iter()
        .map(|r| {
            let lvl = r.iter().map(|&s| s.unsigned_abs() as usize).max().unwrap_or(0);
            (lvl, r)
        })
        .collect();
    relator_level.sort_by_key(|&(lvl, _)| lvl);
    fn rec(
        level: usize,
        gens: usize,
        sym: &SymGroup,
        relators: &[(usize, &Vec<i32>)],
        images: &mut [u16],
        count: &mut u64,
    ) {
        if level == gens {
            *count += 1;
            return;
        }
        for img in 0..sym.size as u16 {
            images[level] = img;
            let ok = relators
                .iter()
                .filter(|&&(lvl, _)| lvl == level + 1)
                .all(|&(_, r)| {
                    let mut acc = 0u16;
                    for &s in r {
                        let idx = (s.unsigned_abs() - 1) as usize;
                        let mut x = images[idx];
                        if s < 0 {
                            x = sym.inv[x as usize];
                        }
                        acc = sym.mul[acc as usize * sym.size + x as usize];
                    }
                    acc == 0
                });
            if ok {
                rec(level + 1, gens, sym, relators, images, count);
            }
        }
    }
    let mut images = alloc::vec![0u16; gens];
    let mut count = 0u64;
    if g.relators.iter().any(|r| r.is_empty()) {
        // An empty relator is trivially satisfied.
    }
    rec(0, gens, &sym, &relator_level, &mut images, &mut count);
    Ok(count)
}

/// The computable census key: abstract-graph data, complement homology, and
/// finite-quotient counts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fingerprint {
    pub vertex_degrees: Vec<u16>,
    /// Canonical multigraph on the vertices (loops as equal pairs).
    pub graph_code: Vec<(u8, u8)>,
    pub components: usize,
    pub h1_rank: usize,
    pub h1_torsion: Vec<u64>,
    /// `|Hom(π, S₃)|` and `|Hom(π, S₄)|`; `None` when the count budget ran
    /// out.
    pub homs: [Option<u64>; 2],
}

impl Fingerprint {
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(
            s,
            "deg={:?} comps={} h1={}",
            self.vertex_degrees, self.components, self.h1_rank
        );
        if !self.graph_code.is_empty() {
            let _ = write!(s, " graph={:?}", self.graph_code);
        }
        if !self.h1_torsion.is_empty() {
            let _ = write!(s, " torsion={:?}", self.h1_torsion);
        }
        for (k, h) in self.homs.iter().enumerate() {
            match h {
                Some(v) => {
                    let _ = write!(s, " s{}={v}", k + 3);
                }
                None => {
                    let _ = write!(s, " s{}=?", k + 3);
                }
            }
        }
        s
    }
}

/// Budget for the backtracking hom counts used by fingerprints.
pub const HOM_BUDGET: u64 = 40_000_000;

/// Assembles the fingerprint of a balanced model.
pub fn fingerprint(model: &EmbeddingModel) -> Result<Fingerprint> {
    let summary = abstract_graph(model);
    let raw = neuwirth_presentation(model)?;
    let simplified = tietze_simplify(&raw, 64);
    let (h1_rank, h1_torsion) = homology(&simplified);
    let homs = [
        count_homs(&simplified, 3, HOM_BUDGET).ok(),
        count_homs(&simplified, 4, HOM_BUDGET).ok(),
    ];
    Ok(Fingerprint {
        vertex_degrees: summary.vertex_degrees,
        graph_code: summary.graph_code,
        components: summary.components,
        h1_rank,
        h1_torsion,
        homs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pages::arc_matching;
    use crate::words::{parse_word, Alphabet};

    fn model(text: &str, n: u16) -> EmbeddingModel {
        let w = parse_word(text, &Alphabet::n_graphs(n)).unwrap();
        arc_matching(&w).unwrap()
    }

    #[test]
    fn unknot_presentation() {
        let g = neuwirth_presentation(&model("a0 c0", 2)).unwrap();
        assert_eq!(g.generators(), 2);
        assert_eq!(g.relators, alloc::vec![alloc::vec![1, 2]]);
        assert_eq!(homology(&g), (1, alloc::vec![]));
        let s = tietze_simplify(&g, 16);
        assert_eq!(s.generators(), 1);
        assert!(s.relators.is_empty());
        assert_eq!(count_homs(&s, 3, 1_000_000).unwrap(), 6);
    }

    #[test]
    fn trefoil_presentation_matches_reference() {
        let g = neuwirth_presentation(&model("a2 d0 d2 a1 a1 b2 b0 c1 c1 c2", 2)).unwrap();
        assert_eq!(g.generators(), 10);
        assert_eq!(g.relators.len(), 9);
        // Arc names: u0..u3 in page 0, r,s,t in page 1, v1..v3 in page 2.
        let names = ["u0", "u1", "u2", "u3", "r", "s", "t", "v1", "v2", "v3"];
        // After flipping the generator t, the relator list must read exactly
        // u0 r | u0 v1 | s v1 | u1 s v2 | u2 s v3 | u3 v3 | u3 t' v2 |
        // u2 t' v1 | u1 t'.
        let t_idx = 7; // 1-based index of "t" = third page-1 arc
        let rendered: Vec<String> = g
            .relators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&s| {
                        let mut out = String::from(names[(s.unsigned_abs() - 1) as usize]);
                        let flipped = s.unsigned_abs() as i32 == t_idx;
                        if (s < 0) ^ flipped {
                            out.push('\'');
                        }
                        out
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        assert_eq!(
            rendered,
            alloc::vec![
                "u0 r", "u0 v1", "s v1", "u1 s v2", "u2 s v3", "u3 v3", "u3 t' v2",
                "u2 t' v1", "u1 t'",
            ]
        );
        let s = tietze_simplify(&g, 64);
        assert_eq!(s.generators(), 2);
        assert_eq!(s.relators.len(), 1);
        assert_eq!(s.relators[0].len(), 6);
        assert_eq!(homology(&s), (1, alloc::vec![]));
        // The count must agree with the standard two-generator braid-relator
        // presentation.
        let reference = GroupPresentation {
            labels: alloc::vec!["s".into(), "t".into()],
            relators: alloc::vec![alloc::vec![1, 2, 1, -2, -1, -2]],
        };
        assert_eq!(
            count_homs(&s, 3, 1_000_000).unwrap(),
            count_homs(&reference, 3, 1_000_000).unwrap()
        );
    }

    #[test]
    fn hopf_homology() {
        let g = neuwirth_presentation(&model("a0 a1 b2 b0 c1 c2", 2)).unwrap();
        assert_eq!(g.generators(), 6);
        assert_eq!(g.relators.len(), 5);
        assert_eq!(homology(&g), (2, alloc::vec![]));
        let s = tietze_simplify(&g, 64);
        // Z²: 18 commuting pairs in S₃.
        assert_eq!(count_homs(&s, 3, 1_000_000).unwrap(), 18);
    }

    #[test]
    fn free_products_multiply() {
        let unknot = fingerprint(&model("a0 c0", 2)).unwrap();
        let two = fingerprint(&model("a0 c0 a0 c0", 2)).unwrap();
        assert_eq!(unknot.homs[0], Some(6));
        assert_eq!(two.homs[0], Some(36));
        assert_eq!(two.h1_rank, 2);
        assert_eq!(two.components, 2);
    }

    #[test]
    fn hom_count_of_free_group() {
        let f2 = GroupPresentation {
            labels: alloc::vec!["x".into(), "y".into()],
            relators: alloc::vec![],
        };
        assert_eq!(count_homs(&f2, 3, 1_000_000).unwrap(), 36);
        assert_eq!(count_homs(&f2, 4, 1_000_000).unwrap(), 576);
    }

    #[test]
    fn trefoil_vs_unknot_fingerprints_differ() {
        let unknot = fingerprint(&model("a0 c0", 2)).unwrap();
        let trefoil = fingerprint(&model("a0 a1 a1 b2 b0 c1 c1 c2", 2)).unwrap();
        assert_eq!(unknot.h1_rank, 1);
        assert_eq!(trefoil.h1_rank, 1);
        assert_ne!(unknot.homs[0], trefoil.homs[0]);
    }

    #[test]
    fn nested_unlink_gap_without_spanning_arcs() {
        // A split word has a gap no arc spans; the relator is skipped.
        let g = neuwirth_presentation(&model("a0 c0 a0 c0", 2)).unwrap();
        assert_eq!(g.generators(), 4);
        assert_eq!(g.relators.len(), 2);
        assert_eq!(homology(&g), (2, alloc::vec![]));
    }
}
