//! Bracket projections, the linear balance test, arc matching and the
//! combinatorial embedding model.
//!
//! Every letter occupies the two pages neighbouring its own index; on each
//! occupied page it contributes a short run of brackets. Reading a word left
//! to right and substituting per page gives the three bracket projections
//! `β₀, β₁, β₂`; the word encodes a closed spatial graph exactly when all
//! three are balanced. Matching the brackets page by page recovers the arcs
//! of the embedding.
//!
//! Substitution table for the projection `β_i` (letter of index `j`):
//!
//! | letter           | page `j` | page `j+1`        | page `j-1` |
//! |------------------|----------|-------------------|------------|
//! | `a_j`            | —        | `(`               | `(`        |
//! | `b_j`            | —        | `(`               | `)`        |
//! | `c_j`            | —        | `)`               | `)`        |
//! | `d_j`            | —        | `)`               | `(`        |
//! | `x_{2p-1,j}`     | —        | `)^(p-1)(^(p-1)`  | `(`        |
//! | `x_{2q,j}`       | —        | `)^(q-1)(^(q-1)`  | `)(`       |
//!
//! Closing brackets always precede opening ones within a single letter's
//! contribution to one page.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::words::{nxt, Alphabet, Kind, Letter, Word};

/// Stub direction along the axis: `L` closes an arc arriving from the left,
/// `R` opens an arc extending to the right.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dir {
    L,
    R,
}

/// Number of closing and opening stubs the letter contributes to the page,
/// closers first.
pub fn stub_counts(letter: Letter, page: u8) -> (u16, u16) {
    let j = letter.page;
    if page == j {
        return (0, 0);
    }
    let up = page == nxt(j); // page j+1
    match letter.kind {
        Kind::A => (0, 1),
        Kind::C => (1, 0),
        Kind::B => {
            if up {
                (0, 1)
            } else {
                (1, 0)
            }
        }
        Kind::D => {
            if up {
                (1, 0)
            } else {
                (0, 1)
            }
        }
        Kind::X(m) if m % 2 == 1 => {
            let p = (m + 1) / 2;
            if up {
                (p - 1, p - 1)
            } else {
                (0, 1)
            }
        }
        Kind::X(m) => {
            let q = m / 2;
            if up {
                (q - 1, q - 1)
            } else {
                (1, 1)
            }
        }
    }
}

/// The bracket projection `β_i(w)` as a string of `(` and `)`.
pub fn bracket_projection(word: &Word, page: u8) -> String {
    let mut s = String::new();
    for &l in word.letters() {
        let (closes, opens) = stub_counts(l, page);
        for _ in 0..closes {
            s.push(')');
        }
        for _ in 0..opens {
            s.push('(');
        }
    }
    s
}

/// Outcome of the balance test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Balance {
    Balanced,
    /// First failure: on `page`, at letter index `position` (`position ==
    /// word length` means arcs stayed open to the end).
    Unbalanced { page: u8, position: usize },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced)
    }
}

/// Single left-to-right pass per page; linear in the word length.
pub fn is_balanced(word: &Word) -> Balance {
    for page in 0..3u8 {
        let mut surplus: i64 = 0;
        for (pos, &l) in word.letters().iter().enumerate() {
            let (closes, opens) = stub_counts(l, page);
            surplus -= closes as i64;
            if surplus < 0 {
                return Balance::Unbalanced { page, position: pos };
            }
            surplus += opens as i64;
        }
        if surplus != 0 {
            return Balance::Unbalanced {
                page,
                position: word.len(),
            };
        }
    }
    Balance::Balanced
}

/// Is the single projection `β_i(w)` balanced?
pub fn is_page_balanced(word: &Word, page: u8) -> bool {
    let mut surplus: i64 = 0;
    for &l in word.letters() {
        let (closes, opens) = stub_counts(l, page);
        surplus -= closes as i64;
        if surplus < 0 {
            return false;
        }
        surplus += opens as i64;
    }
    surplus == 0
}

/// An axis point of a general three-page embedding: at most two pages carry
/// stubs, listed in projection order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GeneralLetter {
    stubs: [Vec<Dir>; 3],
}

impl GeneralLetter {
    pub fn new(stubs: [Vec<Dir>; 3]) -> Result<GeneralLetter> {
        let gl = GeneralLetter { stubs };
        let pages = gl.pages_occupied();
        if pages > 2 {
            return Err(Error::Precondition(
                "a point may occupy at most two pages".into(),
            ));
        }
        if gl.degree() < 2 {
            return Err(Error::Precondition("a point needs at least two stubs".into()));
        }
        Ok(gl)
    }

    pub fn stubs(&self, page: u8) -> &[Dir] {
        &self.stubs[page as usize]
    }

    pub fn degree(&self) -> usize {
        self.stubs.iter().map(Vec::len).sum()
    }

    pub fn pages_occupied(&self) -> usize {
        self.stubs.iter().filter(|s| !s.is_empty()).count()
    }

    /// The stub pattern of an alphabet letter.
    pub fn from_letter(letter: Letter) -> GeneralLetter {
        let mut stubs: [Vec<Dir>; 3] = Default::default();
        for page in 0..3 {
            let (closes, opens) = stub_counts(letter, page);
            let v = &mut stubs[page as usize];
            for _ in 0..closes {
                v.push(Dir::L);
            }
            for _ in 0..opens {
                v.push(Dir::R);
            }
        }
        GeneralLetter { stubs }
    }

    /// Add `s` to every occupied page index mod 3.
    pub fn shift_index(&self, s: u8) -> GeneralLetter {
        let mut stubs: [Vec<Dir>; 3] = Default::default();
        for page in 0..3u8 {
            stubs[((page + s) % 3) as usize] = self.stubs[page as usize].clone();
        }
        GeneralLetter { stubs }
    }

    /// The reflection through a plane orthogonal to the axis: stub order
    /// reverses and every direction flips.
    pub fn mirror(&self) -> GeneralLetter {
        let mut stubs: [Vec<Dir>; 3] = Default::default();
        for page in 0..3usize {
            stubs[page] = self.stubs[page]
                .iter()
                .rev()
                .map(|d| match d {
                    Dir::L => Dir::R,
                    Dir::R => Dir::L,
                })
                .collect();
        }
        GeneralLetter { stubs }
    }
}

impl fmt::Display for GeneralLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v[")?;
        let mut first = true;
        for page in 0..3usize {
            if self.stubs[page].is_empty() {
                continue;
            }
            if !first {
                write!(f, ";")?;
            }
            first = false;
            write!(f, "{page}:")?;
            for d in &self.stubs[page] {
                write!(f, "{}", if *d == Dir::L { 'l' } else { 'r' })?;
            }
        }
        write!(f, "]")
    }
}

/// A sequence of axis points, the general analogue of a word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GeneralWord {
    points: Vec<GeneralLetter>,
}

impl GeneralWord {
    pub fn new(points: Vec<GeneralLetter>) -> GeneralWord {
        GeneralWord { points }
    }

    pub fn from_word(word: &Word) -> GeneralWord {
        GeneralWord {
            points: word.letters().iter().map(|&l| GeneralLetter::from_letter(l)).collect(),
        }
    }

    pub fn points(&self) -> &[GeneralLetter] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn concat(&self, other: &GeneralWord) -> GeneralWord {
        let mut points = self.points.clone();
        points.extend_from_slice(&other.points);
        GeneralWord { points }
    }

    pub fn shift_index(&self, s: u8) -> GeneralWord {
        GeneralWord {
            points: self.points.iter().map(|p| p.shift_index(s)).collect(),
        }
    }

    /// Reflection through a plane orthogonal to the axis: point order
    /// reverses and each point mirrors. Encodes the mirror image of the
    /// graph with the same arch number.
    pub fn mirror(&self) -> GeneralWord {
        GeneralWord {
            points: self.points.iter().rev().map(GeneralLetter::mirror).collect(),
        }
    }

    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (k, p) in self.points.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{p}");
        }
        s
    }

    /// Total stub count; twice the arch number.
    pub fn total_stubs(&self) -> usize {
        self.points.iter().map(GeneralLetter::degree).sum()
    }

    /// The word whose letters these points spell, if every point's stub
    /// pattern matches an alphabet letter exactly.
    pub fn specialize(&self, alphabet: &Alphabet) -> Result<Word> {
        let mut letters = Vec::with_capacity(self.len());
        'points: for (position, point) in self.points.iter().enumerate() {
            for cand in alphabet.letters() {
                if &GeneralLetter::from_letter(cand) == point {
                    letters.push(cand);
                    continue 'points;
                }
            }
            return Err(Error::NotExpressible { position });
        }
        Ok(Word::from_letters(letters))
    }
}

impl fmt::Display for GeneralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses a mixed token string: alphabet letters and `v[<i>:<dirs>;<j>:<dirs>]`
/// tokens.
pub fn parse_general_word(text: &str, alphabet: &Alphabet) -> Result<GeneralWord> {
    let mut points = Vec::new();
    for tok in text.split_whitespace() {
        if let Some(body) = tok.strip_prefix("v[").and_then(|t| t.strip_suffix(']')) {
            let mut stubs: [Vec<Dir>; 3] = Default::default();
            for part in body.split(';') {
                let (page_str, dirs) = part
                    .split_once(':')
                    .ok_or_else(|| Error::UnknownToken(tok.into()))?;
                let page: usize = match page_str {
                    "0" => 0,
                    "1" => 1,
                    "2" => 2,
                    _ => return Err(Error::BadPageIndex(tok.into())),
                };
                for ch in dirs.chars() {
                    match ch {
                        'l' => stubs[page].push(Dir::L),
                        'r' => stubs[page].push(Dir::R),
                        _ => return Err(Error::UnknownToken(tok.into())),
                    }
                }
            }
            points.push(GeneralLetter::new(stubs)?);
        } else {
            let w = crate::words::parse_word(tok, alphabet)?;
            points.extend(w.letters().iter().map(|&l| GeneralLetter::from_letter(l)));
        }
    }
    Ok(GeneralWord { points })
}

/// One matched arc in a page: stub positions `(point index, slot within the
/// point's stub run on that page)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Arc {
    pub open: (usize, usize),
    pub close: (usize, usize),
}

/// A balanced general word together with its per-page arc matching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddingModel {
    points: GeneralWord,
    arcs: [Vec<Arc>; 3],
}

impl EmbeddingModel {
    pub fn points(&self) -> &GeneralWord {
        &self.points
    }

    pub fn arcs(&self, page: u8) -> &[Arc] {
        &self.arcs[page as usize]
    }

    pub fn arch_number(&self) -> usize {
        self.arcs.iter().map(Vec::len).sum()
    }
}

/// Per-page balance test for general words.
pub fn general_balance(gw: &GeneralWord) -> Balance {
    for page in 0..3u8 {
        let mut surplus: i64 = 0;
        for (pos, point) in gw.points().iter().enumerate() {
            for d in point.stubs(page) {
                match d {
                    Dir::L => {
                        surplus -= 1;
                        if surplus < 0 {
                            return Balance::Unbalanced { page, position: pos };
                        }
                    }
                    Dir::R => surplus += 1,
                }
            }
        }
        if surplus != 0 {
            return Balance::Unbalanced {
                page,
                position: gw.len(),
            };
        }
    }
    Balance::Balanced
}

/// Builds the embedding model of a balanced general word: per page, innermost
/// bracket pairing of the stub sequence. An arc closing at its own opening
/// point would not be monotone along the axis and is rejected.
pub fn arc_matching_general(gw: &GeneralWord) -> Result<EmbeddingModel> {
    if let Balance::Unbalanced { page, position } = general_balance(gw) {
        return Err(Error::Unbalanced { page, position });
    }
    let mut arcs: [Vec<Arc>; 3] = Default::default();
    for page in 0..3u8 {
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for (pos, point) in gw.points().iter().enumerate() {
            for (slot, d) in point.stubs(page).iter().enumerate() {
                match d {
                    Dir::R => stack.push((pos, slot)),
                    Dir::L => {
                        let open = stack.pop().expect("balanced");
                        if open.0 == pos {
                            return Err(Error::Precondition(alloc::format!(
                                "the arc at point {pos} page {page} returns to its own point"
                            )));
                        }
                        arcs[page as usize].push(Arc {
                            open,
                            close: (pos, slot),
                        });
                    }
                }
            }
        }
        arcs[page as usize].sort_unstable();
    }
    Ok(EmbeddingModel {
        points: gw.clone(),
        arcs,
    })
}

/// Does some stub of this point close an opening of the same point? Such a
/// pattern always produces a non-monotone self-arc.
pub fn has_self_match(point: &GeneralLetter) -> bool {
    for page in 0..3u8 {
        let mut depth = 0i32;
        for d in point.stubs(page) {
            match d {
                Dir::R => depth += 1,
                Dir::L => {
                    if depth > 0 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Arc matching for an alphabet word.
pub fn arc_matching(word: &Word) -> Result<EmbeddingModel> {
    arc_matching_general(&GeneralWord::from_word(word))
}

/// Abstract-graph data recovered from an embedding model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphSummary {
    /// Degrees of the points of degree ≥ 3, sorted.
    pub vertex_degrees: Vec<u16>,
    /// Connected components, circles included.
    pub components: usize,
    /// First Betti number, each vertex-free circle contributing 1.
    pub betti: usize,
    pub edge_count: usize,
    pub vertex_count: usize,
    /// Canonical form of the multigraph on the vertices: the edge list
    /// (loops as equal pairs), minimized over vertex relabelings. Vertex-free
    /// circles are not included; their count is part of `components`.
    pub graph_code: Vec<(u8, u8)>,
}

/// Lexicographically minimal edge list over all relabelings of `v` vertices.
fn canonical_edges(v: usize, edges: &[(usize, usize)]) -> Vec<(u8, u8)> {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
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
    if v == 0 || edges.is_empty() {
        return Vec::new();
    }
    let mut best: Option<Vec<(u8, u8)>> = None;
    for perm in permutations(v) {
        let mut relabeled: Vec<(u8, u8)> = edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a] as u8, perm[b] as u8);
                (x.min(y), x.max(y))
            })
            .collect();
        relabeled.sort_unstable();
        if best.as_ref().map_or(true, |b| &relabeled < b) {
            best = Some(relabeled);
        }
    }
    best.unwrap_or_default()
}

/// Recovers the abstract graph by walking arcs through degree-2 points.
pub fn abstract_graph(model: &EmbeddingModel) -> GraphSummary {
    let points = model.points().points();
    let n = points.len();
    // Global stub ids per point: (page, slot) -> id, plus the arc pairing.
    let mut stub_ids: Vec<Vec<(u8, usize, usize)>> = Vec::with_capacity(n); // per point: (page, slot, stub_id)
    let mut total = 0usize;
    for point in points {
        let mut ids = Vec::with_capacity(point.degree());
        for page in 0..3u8 {
            for slot in 0..point.stubs(page).len() {
                ids.push((page, slot, total));
                total += 1;
            }
        }
        stub_ids.push(ids);
    }
    let stub_id = |pos: usize, page: u8, slot: usize| -> usize {
        stub_ids[pos]
            .iter()
            .find(|&&(p, s, _)| p == page && s == slot)
            .expect("stub exists")
            .2
    };
    // mate[s] = stub at the other end of s's arc.
    let mut mate: Vec<usize> = alloc::vec![usize::MAX; total];
    let mut stub_point: Vec<usize> = alloc::vec![0; total];
    for (pos, ids) in stub_ids.iter().enumerate() {
        for &(_, _, id) in ids {
            stub_point[id] = pos;
        }
    }
    for page in 0..3u8 {
        for arc in model.arcs(page) {
            let a = stub_id(arc.open.0, page, arc.open.1);
            let b = stub_id(arc.close.0, page, arc.close.1);
            mate[a] = b;
            mate[b] = a;
        }
    }
    // Pair the two stubs of every degree-2 point so edge walks pass through.
    let mut through: Vec<Option<usize>> = alloc::vec![None; total];
    for (pos, point) in points.iter().enumerate() {
        if point.degree() == 2 {
            let a = stub_ids[pos][0].2;
            let b = stub_ids[pos][1].2;
            through[a] = Some(b);
            through[b] = Some(a);
        }
    }
    let is_vertex = |pos: usize| points[pos].degree() >= 3;
    // Union-find over points; arcs connect their endpoints.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for page in 0..3u8 {
        for arc in model.arcs(page) {
            let (ra, rb) = (find(&mut parent, arc.open.0), find(&mut parent, arc.close.0));
            if ra != rb {
                parent[ra] = rb;
            }
        }
    }
    // Vertex ordinals among points of degree >= 3.
    let mut vertex_ordinal: Vec<Option<usize>> = alloc::vec![None; n];
    {
        let mut next = 0usize;
        for (pos, point) in points.iter().enumerate() {
            if point.degree() >= 3 {
                vertex_ordinal[pos] = Some(next);
                next += 1;
            }
        }
    }
    // Walk edges: vertex stub -> arc -> (degree-2 point -> arc ->)* vertex.
    let mut visited = alloc::vec![false; total];
    let mut comp_edges: hashbrown::HashMap<usize, i64> = hashbrown::HashMap::new();
    let mut edge_count = 0usize;
    let mut edge_list: Vec<(usize, usize)> = Vec::new();
    for start in 0..total {
        if visited[start] || !is_vertex(stub_point[start]) {
            continue;
        }
        let mut s = start;
        visited[s] = true;
        loop {
            let m = mate[s];
            visited[m] = true;
            match through[m] {
                Some(t) if !visited[t] => {
                    visited[t] = true;
                    s = t;
                }
                _ => break, // reached a vertex stub or closed back
            }
        }
        edge_count += 1;
        let from = vertex_ordinal[stub_point[start]].expect("walk starts at a vertex");
        let to = vertex_ordinal[stub_point[mate[s]]].unwrap_or(from);
        edge_list.push((from, to));
        let root = find(&mut parent, stub_point[start]);
        *comp_edges.entry(root).or_insert(0) += 1;
    }
    // Remaining stubs belong to vertex-free circles; each union-find
    // component without a vertex is exactly one circle.
    let mut circle_count = 0usize;
    for start in 0..total {
        if visited[start] {
            continue;
        }
        circle_count += 1;
        let mut s = start;
        loop {
            visited[s] = true;
            let m = mate[s];
            visited[m] = true;
            match through[m] {
                Some(t) if !visited[t] => s = t,
                _ => break,
            }
        }
    }
    let mut vertex_degrees: Vec<u16> = points
        .iter()
        .filter(|p| p.degree() >= 3)
        .map(|p| p.degree() as u16)
        .collect();
    vertex_degrees.sort_unstable();
    let vertex_count = vertex_degrees.len();
    let mut comp_vertices: hashbrown::HashMap<usize, i64> = hashbrown::HashMap::new();
    for pos in 0..n {
        if is_vertex(pos) {
            let root = find(&mut parent, pos);
            *comp_vertices.entry(root).or_insert(0) += 1;
        }
    }
    // betti = sum over vertexful components of (E - V + 1), plus 1 per circle.
    let mut betti: i64 = circle_count as i64;
    for (&root, &v) in &comp_vertices {
        betti += comp_edges.get(&root).copied().unwrap_or(0) - v + 1;
    }
    GraphSummary {
        graph_code: canonical_edges(vertex_count, &edge_list),
        vertex_degrees,
        components: comp_vertices.len() + circle_count,
        betti: betti.max(0) as usize,
        edge_count: edge_count + circle_count,
        vertex_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn w(text: &str, n: u16) -> Word {
        parse_word(text, &Alphabet::n_graphs(n)).unwrap()
    }

    #[test]
    fn projections_of_the_four_vertex_word() {
        let word = w("a0 a1 b2 d1 x4_1 d2 c1 c2", 4);
        assert_eq!(bracket_projection(&word, 0), "((()()))");
        assert_eq!(bracket_projection(&word, 1), "()()");
        assert_eq!(bracket_projection(&word, 2), "(())()");
        assert!(is_balanced(&word).is_balanced());
    }

    #[test]
    fn balance_examples() {
        assert!(is_balanced(&w("a0 c0", 2)).is_balanced());
        assert!(is_balanced(&w("a2 d0 d2 a1 a1 b2 b0 c1 c1 c2", 2)).is_balanced());
        assert_eq!(
            is_balanced(&w("a0", 2)),
            Balance::Unbalanced { page: 1, position: 1 }
        );
    }

    #[test]
    fn unknot_arcs() {
        let m = arc_matching(&w("a0 c0", 2)).unwrap();
        assert_eq!(m.arch_number(), 2);
        assert!(m.arcs(0).is_empty());
        assert_eq!(m.arcs(1), &[Arc { open: (0, 0), close: (1, 0) }]);
        assert_eq!(m.arcs(2), &[Arc { open: (0, 0), close: (1, 0) }]);
    }

    #[test]
    fn trefoil_arcs() {
        let m = arc_matching(&w("a2 d0 d2 a1 a1 b2 b0 c1 c1 c2", 2)).unwrap();
        assert_eq!(m.arch_number(), 10);
        let pts = |arcs: &[Arc]| -> Vec<(usize, usize)> {
            arcs.iter().map(|a| (a.open.0 + 1, a.close.0 + 1)).collect()
        };
        let mut p0 = pts(m.arcs(0));
        p0.sort_unstable();
        assert_eq!(p0, alloc::vec![(1, 3), (4, 10), (5, 9), (6, 8)]);
        let mut p1 = pts(m.arcs(1));
        p1.sort_unstable();
        assert_eq!(p1, alloc::vec![(1, 2), (3, 6), (7, 10)]);
        let mut p2 = pts(m.arcs(2));
        p2.sort_unstable();
        assert_eq!(p2, alloc::vec![(2, 9), (4, 8), (5, 7)]);
    }

    #[test]
    fn two_bridge_s21_arcs() {
        let m = arc_matching(&w("a0 a1 b2 b0 c1 c2", 2)).unwrap();
        assert_eq!(m.arch_number(), 6);
        assert_eq!(m.arcs(0).len(), 2);
        assert_eq!(m.arcs(1).len(), 2);
        assert_eq!(m.arcs(2).len(), 2);
    }

    #[test]
    fn unknot_graph_summary() {
        let m = arc_matching(&w("a0 c0", 2)).unwrap();
        let g = abstract_graph(&m);
        assert_eq!(g.components, 1);
        assert_eq!(g.betti, 1);
        assert!(g.vertex_degrees.is_empty());
    }

    #[test]
    fn four_vertex_graph_summary() {
        let m = arc_matching(&w("a0 a1 b2 d1 x4_1 d2 c1 c2", 4)).unwrap();
        let g = abstract_graph(&m);
        assert_eq!(g.vertex_degrees, alloc::vec![4]);
        assert_eq!(g.components, 1);
        assert_eq!(g.betti, 2);
    }

    #[test]
    fn specialize_round_trip() {
        let a = Alphabet::n_graphs(4);
        let word = w("a0 a1 b2 d1 x4_1 d2 c1 c2", 4);
        let gw = GeneralWord::from_word(&word);
        assert_eq!(gw.specialize(&a).unwrap(), word);
    }

    #[test]
    fn specialize_single_point() {
        let a = Alphabet::links();
        let gw = parse_general_word("v[1:r;2:r]", &a).unwrap();
        assert_eq!(gw.specialize(&a).unwrap().render(), "a0");
    }

    #[test]
    fn specialize_rejects_non_letter() {
        let a = Alphabet::n_graphs(3);
        let gw = parse_general_word("v[0:r;1:rr]", &a).unwrap();
        assert_eq!(
            gw.specialize(&a),
            Err(Error::NotExpressible { position: 0 })
        );
    }

    #[test]
    fn shift_preserves_balance_and_arch() {
        let word = w("a2 d0 d2 a1 a1 b2 b0 c1 c1 c2", 2);
        for s in 0..3 {
            let shifted = word.shift_index(s);
            assert!(is_balanced(&shifted).is_balanced());
            assert_eq!(
                arc_matching(&shifted).unwrap().arch_number(),
                arc_matching(&word).unwrap().arch_number()
            );
        }
    }

    #[test]
    fn mirror_preserves_balance() {
        for text in ["a0 c0", "a2 d0 d2 a1 a1 b2 b0 c1 c1 c2", "a0 a1 b2 b0 c1 c2"] {
            let word = w(text, 2);
            assert!(is_balanced(&word.mirror()).is_balanced(), "{text}");
        }
        let word = w("a0 a1 b2 d1 x4_1 d2 c1 c2", 4);
        assert!(is_balanced(&word.mirror()).is_balanced());
    }
}
