//! Set-valued words: m-tuples of subsets of {1..n}, their i-words made of
//! "(", ")", and ")-(" tokens, the raising/lowering operators driven by the
//! parenthesis-class forms, and the correspondence with row-strict tableaux.

use crate::crystal::{self, Crystal, Family};
use crate::{invalid, Result};

/// An m-tuple of (possibly empty) subsets of {1..n}, each a bitmask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetValuedWord {
    pub n: usize,
    pub sets: Vec<u32>,
}

impl std::fmt::Debug for SetValuedWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl std::fmt::Display for SetValuedWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl SetValuedWord {
    pub fn new(n: usize, sets: Vec<u32>) -> Result<Self> {
        let full = if n >= 32 { u32::MAX } else { (1u32 << n) - 1 };
        if sets.iter().any(|&s| s & !full != 0) {
            return invalid(format!("set-valued word entries exceed {{1..{n}}}"));
        }
        Ok(SetValuedWord { n, sets })
    }

    /// Convenience constructor from explicit sets of values.
    pub fn from_sets(n: usize, sets: &[&[usize]]) -> Result<Self> {
        let masks = sets
            .iter()
            .map(|s| s.iter().fold(0u32, |m, &v| m | 1 << (v - 1)))
            .collect();
        SetValuedWord::new(n, masks)
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    /// Letter-count weight: wt_v = number of positions whose set contains v.
    pub fn weight(&self) -> Vec<i64> {
        (0..self.n)
            .map(|v| self.sets.iter().filter(|&&s| s >> v & 1 == 1).count() as i64)
            .collect()
    }

    pub fn contains(&self, pos: usize, v: usize) -> bool {
        self.sets[pos] >> (v - 1) & 1 == 1
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.sets.iter().map(|&s| crystal::subset_label(s)).collect();
        format!("({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    /// ")" from a set containing i but not i+1.
    Right,
    /// "(" from a set containing i+1 but not i.
    Left,
    /// ")-(" from a set containing both.
    Combined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Null,
    Right,
    Left,
    Combined,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub kind: TokenKind,
    /// 0-based position in the word contributing this token.
    pub pos: usize,
}

#[derive(Clone, Debug)]
pub struct ClassSpan {
    /// Token index range, inclusive.
    pub start: usize,
    pub end: usize,
    pub form: Form,
}

/// The tokenized i-word of a set-valued word together with its equivalence
/// classes.
pub struct IWord {
    pub tokens: Vec<Token>,
    pub classes: Vec<ClassSpan>,
}

impl IWord {
    pub fn new(word: &SetValuedWord, i: usize) -> IWord {
        assert!(i >= 1 && i < word.n);
        let mut tokens = Vec::new();
        for pos in 0..word.m() {
            let has_i = word.contains(pos, i);
            let has_i1 = word.contains(pos, i + 1);
            let kind = match (has_i, has_i1) {
                (true, false) => TokenKind::Right,
                (false, true) => TokenKind::Left,
                (true, true) => TokenKind::Combined,
                (false, false) => continue,
            };
            tokens.push(Token { kind, pos });
        }
        // characters: (token index, is_open), with ")-(" contributing two
        let mut chars: Vec<(usize, bool)> = Vec::new();
        for (t, tok) in tokens.iter().enumerate() {
            match tok.kind {
                TokenKind::Right => chars.push((t, false)),
                TokenKind::Left => chars.push((t, true)),
                TokenKind::Combined => {
                    chars.push((t, false));
                    chars.push((t, true));
                }
            }
        }
        // pair parentheses; `link[t]` joins tokens t and t+1 into one class
        let mut matched = vec![false; chars.len()];
        let mut link = vec![false; tokens.len().saturating_sub(1)];
        let mut stack: Vec<usize> = Vec::new();
        for (c, &(t, is_open)) in chars.iter().enumerate() {
            if is_open {
                stack.push(c);
            } else if let Some(o) = stack.pop() {
                matched[o] = true;
                matched[c] = true;
                let (t0, t1) = (chars[o].0, t);
                for l in link.iter_mut().take(t1).skip(t0) {
                    *l = true;
                }
            }
        }
        // split into classes and determine their forms
        let mut classes = Vec::new();
        let mut start = 0;
        for t in 0..tokens.len() {
            let is_last = t + 1 == tokens.len() || !link[t];
            if !is_last {
                continue;
            }
            let span_chars: Vec<usize> = chars
                .iter()
                .enumerate()
                .filter(|(_, &(tt, _))| tt >= start && tt <= t)
                .map(|(c, _)| c)
                .collect();
            let unpaired_close = span_chars.iter().filter(|&&c| !matched[c] && !chars[c].1).count();
            let unpaired_open = span_chars.iter().filter(|&&c| !matched[c] && chars[c].1).count();
            debug_assert!(unpaired_close <= 1 && unpaired_open <= 1);
            let form = match (unpaired_close > 0, unpaired_open > 0) {
                (false, false) => Form::Null,
                (true, false) => Form::Right,
                (false, true) => Form::Left,
                (true, true) => Form::Combined,
            };
            classes.push(ClassSpan { start, end: t, form });
            start = t + 1;
        }
        IWord { tokens, classes }
    }

    /// Plain string rendering, e.g. ")-(())(".
    pub fn render(&self) -> String {
        self.tokens
            .iter()
            .map(|t| match t.kind {
                TokenKind::Right => ")",
                TokenKind::Left => "(",
                TokenKind::Combined => ")-(",
            })
            .collect()
    }

    fn combined(&self) -> Option<&ClassSpan> {
        let mut it = self.classes.iter().filter(|c| c.form == Form::Combined);
        let first = it.next();
        assert!(it.next().is_none(), "more than one combined form");
        first
    }

    /// Word position of the parenthesis starting / ending a class.
    pub fn class_start_pos(&self, class: &ClassSpan) -> usize {
        self.tokens[class.start].pos
    }

    pub fn class_end_pos(&self, class: &ClassSpan) -> usize {
        self.tokens[class.end].pos
    }
}

/// Counts of (right, combined, left) forms give phi and epsilon directly:
/// eps_i = 2 * #left + #combined, phi_i = 2 * #right + #combined.
pub fn epsilon_phi(word: &SetValuedWord, i: usize) -> (usize, usize) {
    let iw = IWord::new(word, i);
    let count = |f: Form| iw.classes.iter().filter(|c| c.form == f).count();
    let c = count(Form::Combined);
    (2 * count(Form::Left) + c, 2 * count(Form::Right) + c)
}

fn with_bit(word: &SetValuedWord, pos: usize, v: usize, on: bool) -> SetValuedWord {
    let mut sets = word.sets.clone();
    if on {
        sets[pos] |= 1 << (v - 1);
    } else {
        sets[pos] &= !(1 << (v - 1));
    }
    SetValuedWord { n: word.n, sets }
}

/// The raising operator e_i.
pub fn raise(word: &SetValuedWord, i: usize) -> Option<SetValuedWord> {
    let iw = IWord::new(word, i);
    if let Some(comb) = iw.combined() {
        // remove i+1 from the ")-(" entry at the end of the combined form
        let tok = &iw.tokens[comb.end];
        assert_eq!(tok.kind, TokenKind::Combined, "combined form must end with )-(");
        return Some(with_bit(word, tok.pos, i + 1, false));
    }
    let first_left = iw.classes.iter().find(|c| c.form == Form::Left)?;
    // add i to the "(" entry at the start of the first left form
    let tok = &iw.tokens[first_left.start];
    assert_eq!(tok.kind, TokenKind::Left, "left form must start with (");
    Some(with_bit(word, tok.pos, i, true))
}

/// The lowering operator f_i.
pub fn lower(word: &SetValuedWord, i: usize) -> Option<SetValuedWord> {
    let iw = IWord::new(word, i);
    if let Some(comb) = iw.combined() {
        // remove i from the ")-(" entry at the beginning of the combined form
        let tok = &iw.tokens[comb.start];
        assert_eq!(tok.kind, TokenKind::Combined, "combined form must start with )-(");
        return Some(with_bit(word, tok.pos, i, false));
    }
    let last_right = iw.classes.iter().rev().find(|c| c.form == Form::Right)?;
    // add i+1 to the ")" entry at the end of the last right form
    let tok = &iw.tokens[last_right.end];
    assert_eq!(tok.kind, TokenKind::Right, "right form must end with )");
    Some(with_bit(word, tok.pos, i + 1, true))
}

/// Flattened word: the letters of each set in increasing order, left to right.
pub fn flatten(word: &SetValuedWord) -> Vec<usize> {
    let mut out = Vec::new();
    for &s in &word.sets {
        for v in 1..=word.n {
            if s >> (v - 1) & 1 == 1 {
                out.push(v);
            }
        }
    }
    out
}

/// Row-strict tableau of a set-valued word: row i lists m+1-j in increasing
/// order over positions j whose set contains i. Trailing empty rows dropped.
pub fn tab(word: &SetValuedWord) -> Vec<Vec<usize>> {
    let m = word.m();
    let mut rows: Vec<Vec<usize>> = (1..=word.n)
        .map(|i| {
            (0..m)
                .rev()
                .filter(|&j| word.contains(j, i))
                .map(|j| m - j)
                .collect()
        })
        .collect();
    while rows.last().map(|r| r.is_empty()) == Some(true) {
        rows.pop();
    }
    rows
}

/// Inverse of `tab`: i is placed in S_j iff m+1-j appears in row i.
pub fn svword_of_tab(rows: &[Vec<usize>], n: usize, m: usize) -> Result<SetValuedWord> {
    if rows.len() > n {
        return invalid(format!("tableau has more than {n} rows"));
    }
    let mut sets = vec![0u32; m];
    for (i, row) in rows.iter().enumerate() {
        for &entry in row {
            if entry == 0 || entry > m {
                return invalid(format!("entry {entry} out of range 1..={m}"));
            }
            sets[m - entry] |= 1 << i;
        }
    }
    SetValuedWord::new(n, sets)
}

/// Is a row/column strictly increasing partition-shaped tableau?
pub fn is_increasing_tableau(rows: &[Vec<usize>]) -> bool {
    for (i, row) in rows.iter().enumerate() {
        if i + 1 < rows.len() && rows[i + 1].len() > row.len() {
            return false;
        }
        if row.is_empty() && rows[i..].iter().any(|r| !r.is_empty()) {
            return false;
        }
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if i > 0 {
            let above = &rows[i - 1];
            if row.iter().enumerate().any(|(c, &v)| above[c] >= v) {
                return false;
            }
        }
    }
    true
}

pub fn is_highest_weight(word: &SetValuedWord) -> bool {
    is_increasing_tableau(&tab(word))
}

/// The full crystal on all 2^(n*m) set-valued words, indexed with S_1 as the
/// most significant base-2^n digit (matching iterated tensor indexing).
pub struct SvUniverse {
    pub crystal: Crystal,
    pub words: Vec<SetValuedWord>,
}

impl SvUniverse {
    pub fn index_of(&self, word: &SetValuedWord) -> usize {
        let n = word.n;
        word.sets.iter().fold(0usize, |acc, &s| (acc << n) | s as usize)
    }
}

pub fn universe(n: usize, m: usize) -> Result<SvUniverse> {
    if n < 2 || m == 0 {
        return invalid("universe requires n >= 2 and m >= 1".to_string());
    }
    if n * m > 22 {
        return invalid(format!("universe of 2^{} words is too large", n * m));
    }
    let size = 1usize << (n * m);
    let mut words = Vec::with_capacity(size);
    for idx in 0..size {
        let sets: Vec<u32> = (0..m)
            .map(|j| (idx >> (n * (m - 1 - j))) as u32 & ((1 << n) - 1))
            .collect();
        words.push(SetValuedWord { n, sets });
    }
    let labels = words.iter().map(|w| w.label()).collect();
    let weights = words.iter().map(|w| w.weight()).collect();
    let mut e_map = vec![vec![None; size]; n - 1];
    let mut f_map = vec![vec![None; size]; n - 1];
    let index_of = |w: &SetValuedWord| -> usize {
        w.sets.iter().fold(0usize, |acc, &s| (acc << n) | s as usize)
    };
    for (idx, w) in words.iter().enumerate() {
        for i in 1..n {
            e_map[i - 1][idx] = raise(w, i).map(|x| index_of(&x));
            f_map[i - 1][idx] = lower(w, i).map(|x| index_of(&x));
        }
    }
    let crystal = Crystal::new(Family::Sqrt, n, labels, weights, e_map, f_map)?;
    Ok(SvUniverse { crystal, words })
}
