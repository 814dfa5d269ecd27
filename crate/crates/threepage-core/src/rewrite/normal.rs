//! Normal forms for page-balanced words: elimination down to the seven core
//! letter families of an index, star completion, depth reduction, and the
//! final decomposition into the commuting generator set `𝔹_{n,i}`.
//!
//! Every transformation records the move path it took, so the results double
//! as proof certificates.

use alloc::string::String;
use alloc::vec::Vec;

use super::prover::{Direction, MoveRec};
use super::rules::RuleSet;
use crate::error::{Error, Result};
use crate::words::{nxt, prv, Kind, Letter, Word};

fn letter(kind: Kind, i: u8) -> Letter {
    Letter::new(kind, i)
}

/// The commuting generator set `𝔹_{n,i}`: the five letter families of index
/// `i` plus the two three-letter bridge words.
pub fn b_members(alphabet: &crate::words::Alphabet, i: u8) -> Vec<Vec<Letter>> {
    let mut out: Vec<Vec<Letter>> = Vec::new();
    for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
        out.push(alloc::vec![letter(kind, i)]);
    }
    for &m in alphabet.degrees() {
        out.push(alloc::vec![letter(Kind::X(m), i)]);
    }
    out.push(alloc::vec![
        letter(Kind::B, prv(i)),
        letter(Kind::B, i),
        letter(Kind::D, prv(i)),
    ]);
    out.push(alloc::vec![
        letter(Kind::B, prv(i)),
        letter(Kind::D, i),
        letter(Kind::D, prv(i)),
    ]);
    out
}

/// Is the letter one of the core families for index `i`:
/// `a_i, b_i, c_i, d_i, x_{m,i}, b_{i-1}, d_{i-1}`?
fn is_core(l: Letter, i: u8) -> bool {
    l.page == i || (l.page == prv(i) && matches!(l.kind, Kind::B | Kind::D))
}

/// Elimination priority of a non-core letter; higher gets rewritten first so
/// every substitution only introduces strictly lower ranks.
fn rank(l: Letter, i: u8) -> Option<u8> {
    if is_core(l, i) {
        return None;
    }
    let up = l.page == nxt(i);
    Some(match l.kind {
        Kind::X(m) if m % 2 == 1 => {
            if up {
                10
            } else {
                9
            }
        }
        Kind::X(_) => {
            if up {
                8
            } else {
                7
            }
        }
        Kind::A => {
            if up {
                6
            } else {
                5
            }
        }
        Kind::C => {
            if up {
                4
            } else {
                3
            }
        }
        Kind::B => 2,
        Kind::D => 1,
    })
}

fn find_rule(rules: &RuleSet, from: &[Letter], to: &[Letter]) -> Result<(u32, Direction)> {
    rules.find_pair(from, to).ok_or_else(|| {
        Error::Precondition(alloc::format!(
            "required rule {:?} -> {:?} is not registered",
            from,
            to
        ))
    })
}

/// The substitution eliminating one non-core letter, as `(replacement, rule)`.
fn elimination(l: Letter, i: u8, rules: &RuleSet) -> Result<(Vec<Letter>, u32, Direction)> {
    use Kind::*;
    let j = l.page;
    let repl: Vec<Letter> = match (l.kind, j == nxt(i)) {
        (A, true) => alloc::vec![letter(A, prv(i)), letter(D, i)],
        (A, false) => alloc::vec![letter(A, i), letter(D, nxt(i))],
        (C, true) => alloc::vec![letter(B, i), letter(C, prv(i))],
        (C, false) => alloc::vec![letter(B, nxt(i)), letter(C, i)],
        (B, true) => alloc::vec![letter(D, prv(i)), letter(D, i)],
        (D, true) => alloc::vec![letter(B, i), letter(B, prv(i))],
        (X(m), true) if m % 2 == 1 => {
            // x at i+1 unfolds through x at i-1.
            let p = ((m + 1) / 2) as usize;
            let mut v = Vec::new();
            v.extend(core::iter::repeat(letter(D, nxt(i))).take(p - 1));
            v.push(letter(X(m), prv(i)));
            v.push(letter(D, i));
            v.extend(core::iter::repeat(letter(B, nxt(i))).take(p - 2));
            v
        }
        (X(m), false) if m % 2 == 1 => {
            let p = ((m + 1) / 2) as usize;
            let mut v = Vec::new();
            v.extend(core::iter::repeat(letter(D, prv(i))).take(p - 1));
            v.push(letter(X(m), i));
            v.push(letter(D, nxt(i)));
            v.extend(core::iter::repeat(letter(B, prv(i))).take(p - 2));
            v
        }
        (X(m), true) => {
            let q = (m / 2) as usize;
            let mut v = Vec::new();
            v.push(letter(D, prv(i)));
            v.extend(core::iter::repeat(letter(B, i)).take(q - 2));
            v.push(letter(X(m), i));
            v.extend(core::iter::repeat(letter(D, i)).take(q - 2));
            v.push(letter(B, prv(i)));
            v
        }
        (X(m), false) => {
            let q = (m / 2) as usize;
            let mut v = Vec::new();
            v.extend(core::iter::repeat(letter(D, prv(i))).take(q - 2));
            v.push(letter(B, nxt(i)));
            v.push(letter(X(m), i));
            v.push(letter(D, nxt(i)));
            v.extend(core::iter::repeat(letter(B, prv(i))).take(q - 2));
            v
        }
        _ => {
            return Err(Error::Precondition(alloc::format!(
                "letter {l} is already core for index {i}"
            )))
        }
    };
    let (idx, dir) = find_rule(rules, &[l], &repl)?;
    Ok((repl, idx, dir))
}

/// Rewrites `word` into an equivalent word using only the core letter
/// families of index `i`, returning the move path. Requires registered
/// rules: the base relation families plus the derived two-letter
/// expansions for `b` and `d` of the wrong index.
pub fn eliminate_to_core(word: &Word, i: u8, rules: &RuleSet) -> Result<(Word, Vec<MoveRec>)> {
    let mut letters = word.letters().to_vec();
    let mut moves = Vec::new();
    let mut guard = 0usize;
    loop {
        guard += 1;
        if guard > 100_000 {
            return Err(Error::Precondition("core elimination did not terminate".into()));
        }
        // Pick the highest-ranked non-core letter (leftmost among equals).
        let mut best: Option<(usize, u8)> = None;
        for (pos, &l) in letters.iter().enumerate() {
            if let Some(r) = rank(l, i) {
                if best.map_or(true, |(_, br)| r > br) {
                    best = Some((pos, r));
                }
            }
        }
        let Some((pos, _)) = best else { break };
        let l = letters[pos];
        let (repl, rule_idx, dir) = elimination(l, i, rules)?;
        moves.push(MoveRec {
            rule_id: rules.get(rule_idx).id.clone(),
            pos,
            dir,
        });
        letters.splice(pos..pos + 1, repl);
    }
    Ok((Word::from_letters(letters), moves))
}

/// Star-bracket view of a core-letter word: `b_{i-1}` opens, `d_{i-1}`
/// closes, index-`i` letters are bullets.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Mu {
    Open,
    Close,
    Bullet,
}

fn mu(l: Letter, i: u8) -> Mu {
    if l.page == i {
        Mu::Bullet
    } else if l.kind == Kind::B {
        Mu::Open
    } else {
        Mu::Close
    }
}

/// Maximum bracket nesting of the star view.
pub fn depth(word: &Word, i: u8) -> usize {
    let mut d = 0i64;
    let mut max = 0i64;
    for &l in word.letters() {
        match mu(l, i) {
            Mu::Open => {
                d += 1;
                max = max.max(d);
            }
            Mu::Close => d -= 1,
            Mu::Bullet => {}
        }
    }
    max.max(0) as usize
}

fn r2_rule(rules: &RuleSet, first: Letter, second: Letter) -> Result<(u32, Direction)> {
    find_rule(rules, &[first, second], &[])
}

/// Claim-style star completion: cancels adjacent `b_{i-1} d_{i-1}` pairs and
/// inserts `d^{k-j} b^{k-j}` pairs after under-closed bullets until the
/// bracket view is a concatenation of stars `(^k • )^k`.
pub fn star_complete(word: &Word, i: u8, rules: &RuleSet) -> Result<(Word, Vec<MoveRec>)> {
    let bo = letter(Kind::B, prv(i));
    let dc = letter(Kind::D, prv(i));
    let mut letters = word.letters().to_vec();
    let mut moves: Vec<MoveRec> = Vec::new();
    if letters.iter().any(|&l| !is_core(l, i)) {
        return Err(Error::Precondition("star completion requires core letters".into()));
    }
    // Phase 1: cancel every adjacent open-close pair.
    let (del_rule, del_dir) = r2_rule(rules, bo, dc)?;
    let del_id = rules.get(del_rule).id.clone();
    let mut pos = 0usize;
    while pos + 1 < letters.len() {
        if letters[pos] == bo && letters[pos + 1] == dc {
            moves.push(MoveRec {
                rule_id: del_id.clone(),
                pos,
                dir: del_dir,
            });
            letters.drain(pos..pos + 2);
            pos = pos.saturating_sub(1);
        } else {
            pos += 1;
        }
    }
    // Phase 2: after each bullet at depth k followed by j < k closers,
    // insert (d b)^(k-j) to close and reopen.
    let (ins_rule, ins_dir) = {
        // Rule (d_{i-1} b_{i-1}) = 1; we need its inverse to insert.
        let (idx, dir) = find_rule(rules, &[dc, bo], &[])?;
        (idx, dir.flip())
    };
    let ins_id = rules.get(ins_rule).id.clone();
    let mut pos = 0usize;
    let mut depth_now = 0i64;
    while pos < letters.len() {
        match mu(letters[pos], i) {
            Mu::Open => {
                depth_now += 1;
                pos += 1;
            }
            Mu::Close => {
                depth_now -= 1;
                pos += 1;
            }
            Mu::Bullet => {
                let mut j = 0usize;
                while pos + 1 + j < letters.len() && mu(letters[pos + 1 + j], i) == Mu::Close {
                    j += 1;
                }
                let k = depth_now.max(0) as usize;
                if j < k {
                    let at = pos + 1 + j;
                    for step in 0..(k - j) {
                        moves.push(MoveRec {
                            rule_id: ins_id.clone(),
                            pos: at + step,
                            dir: ins_dir,
                        });
                        letters.insert(at + step, bo);
                        letters.insert(at + step, dc);
                    }
                }
                pos += 1;
            }
        }
    }
    Ok((Word::from_letters(letters), moves))
}

/// Ranges of the star decomposition: each range is `(^k • )^k` for some
/// `k ≥ 0`. `None` if the word is not star decomposable.
fn stars(letters: &[Letter], i: u8) -> Option<Vec<(usize, usize, usize)>> {
    // (start, end, depth)
    let mut out = Vec::new();
    let mut pos = 0usize;
    while pos < letters.len() {
        let start = pos;
        let mut k = 0usize;
        while pos < letters.len() && mu(letters[pos], i) == Mu::Open {
            k += 1;
            pos += 1;
        }
        if pos >= letters.len() || mu(letters[pos], i) != Mu::Bullet {
            return None;
        }
        pos += 1;
        for _ in 0..k {
            if pos >= letters.len() || mu(letters[pos], i) != Mu::Close {
                return None;
            }
            pos += 1;
        }
        out.push((start, pos, k));
    }
    Some(out)
}

/// Rewrites an `i`-balanced core-letter word into a concatenation of
/// `𝔹_{n,i}` members, recording the move path. Needs the star-reduction and
/// elimination rules registered (families E46 and L5).
pub fn star_normal_form(word: &Word, i: u8, rules: &RuleSet) -> Result<(Word, Vec<MoveRec>)> {
    let bo = letter(Kind::B, prv(i));
    let dc = letter(Kind::D, prv(i));
    let (mut current, mut moves) = star_complete(word, i, rules)?;
    let mut guard = 0usize;
    loop {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::Precondition("star reduction did not terminate".into()));
        }
        let letters = current.letters().to_vec();
        let Some(star_list) = stars(&letters, i) else {
            return Err(Error::Precondition("word is not star decomposable".into()));
        };
        // Reduce the first star of depth >= 2.
        if let Some(&(start, _, k)) = star_list.iter().find(|&&(_, _, k)| k >= 2) {
            let bullet = letters[start + k];
            let inner = start + k - 2;
            let lhs = alloc::vec![bo, bo, bullet, dc, dc];
            let rhs = e46_rhs(bullet, i)?;
            let (idx, dir) = find_rule(rules, &lhs, &rhs)?;
            moves.push(MoveRec {
                rule_id: rules.get(idx).id.clone(),
                pos: inner,
                dir,
            });
            let mut next = letters[..inner].to_vec();
            next.extend_from_slice(&rhs);
            next.extend_from_slice(&letters[inner + 5..]);
            let (completed, more) = star_complete_offsetless(next, i, rules, &mut moves)?;
            let _ = more;
            current = completed;
            continue;
        }
        // Depth <= 1 everywhere: replace non-member stars by their images.
        let mut changed = false;
        for &(start, _, k) in &star_list {
            if k != 1 {
                continue;
            }
            let bullet = letters[start + 1];
            if matches!(bullet.kind, Kind::B | Kind::D) && bullet.page == i {
                continue; // b'_i and d'_i are members themselves
            }
            let lhs = alloc::vec![bo, bullet, dc];
            let rhs = l5_rhs(bullet, i)?;
            let (idx, dir) = find_rule(rules, &lhs, &rhs)?;
            moves.push(MoveRec {
                rule_id: rules.get(idx).id.clone(),
                pos: start,
                dir,
            });
            let mut next = letters[..start].to_vec();
            next.extend_from_slice(&rhs);
            next.extend_from_slice(&letters[start + 3..]);
            current = Word::from_letters(next);
            changed = true;
            break;
        }
        if !changed {
            break;
        }
    }
    Ok((current, moves))
}

fn star_complete_offsetless(
    letters: Vec<Letter>,
    i: u8,
    rules: &RuleSet,
    moves: &mut Vec<MoveRec>,
) -> Result<(Word, ())> {
    let (w, more) = star_complete(&Word::from_letters(letters), i, rules)?;
    moves.extend(more);
    Ok((w, ()))
}

/// Right side of the depth-two reduction for bullet `s`: the stars and
/// bullets replacing `b² s d²`.
pub(super) fn e46_rhs(s: Letter, i: u8) -> Result<Vec<Letter>> {
    use Kind::*;
    let bo = letter(B, prv(i));
    let dc = letter(D, prv(i));
    let ai = letter(A, i);
    let bi = letter(B, i);
    let ci = letter(C, i);
    let di = letter(D, i);
    Ok(match s.kind {
        A if s.page == i => alloc::vec![bo, ai, dc, di, di, bo, bi, dc, bi],
        B if s.page == i => alloc::vec![bo, bi, dc, di, di, bo, bi, dc, bi],
        C if s.page == i => alloc::vec![di, bo, di, dc, bi, bi, bo, ci, dc],
        D if s.page == i => alloc::vec![di, bo, di, dc, bi, bi, bo, di, dc],
        X(m) if s.page == i && m % 2 == 1 => alloc::vec![
            bo, di, dc, di, s, bi, bi, bo, bi, dc, di, bo, di, dc, bi, bi, bo, di, dc
        ],
        X(_) if s.page == i => alloc::vec![
            bo, bi, dc, di, di, bo, bi, dc, bi, bo, di, dc, di, di, s, bi, bi, bo, bi, dc, di,
            bo, di, dc, bi, bi, bo, di, dc
        ],
        _ => {
            return Err(Error::Precondition(alloc::format!(
                "no depth reduction for bullet {s}"
            )))
        }
    })
}

/// Right side of the final elimination for non-member depth-1 stars.
pub(super) fn l5_rhs(s: Letter, i: u8) -> Result<Vec<Letter>> {
    use Kind::*;
    let bo = letter(B, prv(i));
    let dc = letter(D, prv(i));
    let ai = letter(A, i);
    let bi = letter(B, i);
    let ci = letter(C, i);
    let di = letter(D, i);
    Ok(match s.kind {
        A if s.page == i => alloc::vec![di, ai, bi, bi, bo, di, dc],
        C if s.page == i => alloc::vec![bo, bi, dc, di, di, ci, bi],
        X(m) if s.page == i && m % 2 == 1 => alloc::vec![di, s, bi, bi, bo, di, dc],
        X(_) if s.page == i => alloc::vec![bo, bi, dc, di, di, s, bi, bi, bo, di, dc],
        _ => {
            return Err(Error::Precondition(alloc::format!(
                "no member elimination for bullet {s}"
            )))
        }
    })
}

/// Splits a star-decomposed word into `𝔹_{n,i}` member ranges; `None` if it
/// is not such a concatenation.
pub fn segment_members(letters: &[Letter], i: u8) -> Option<Vec<(usize, usize)>> {
    let bo = letter(Kind::B, prv(i));
    let dc = letter(Kind::D, prv(i));
    let mut out = Vec::new();
    let mut pos = 0usize;
    while pos < letters.len() {
        if letters[pos] == bo {
            if pos + 2 < letters.len()
                && matches!(letters[pos + 1].kind, Kind::B | Kind::D)
                && letters[pos + 1].page == i
                && letters[pos + 2] == dc
            {
                out.push((pos, pos + 3));
                pos += 3;
            } else {
                return None;
            }
        } else if letters[pos].page == i {
            out.push((pos, pos + 1));
            pos += 1;
        } else {
            return None;
        }
    }
    Some(out)
}

/// Human-readable star view of a core-letter word: `(`, `)`, `•`.
pub fn mu_encoding(word: &Word, i: u8) -> String {
    let mut s = String::new();
    for &l in word.letters() {
        s.push(match mu(l, i) {
            Mu::Open => '(',
            Mu::Close => ')',
            Mu::Bullet => '\u{2022}',
        });
    }
    s
}
