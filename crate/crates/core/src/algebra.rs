//! Permutations in one-line notation, 0-Hecke products, Bruhat order, and
//! lattice-word tests on positive-integer words.

use crate::{invalid, Result};

/// A permutation of {1, 2, 3, ...} fixing all but finitely many points.
/// Stored as trimmed one-line notation: `one_line[i]` is the image of `i+1`,
/// and every point past `one_line.len()` is fixed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation({})", self)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.one_line.is_empty() {
            return write!(f, "id");
        }
        let sep = if self.one_line.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { one_line: vec![] }
    }

    /// Builds from one-line notation; the values must be a permutation of 1..=N.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return invalid(format!("{values:?} is not one-line notation"));
            }
            seen[v - 1] = true;
        }
        let mut one_line = values.to_vec();
        while let Some(&last) = one_line.last() {
            if last == one_line.len() {
                one_line.pop();
            } else {
                break;
            }
        }
        Ok(Permutation { one_line })
    }

    /// The adjacent transposition s_i swapping i and i+1 (i >= 1).
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1);
        let mut v: Vec<usize> = (1..=i + 1).collect();
        v.swap(i - 1, i);
        Permutation { one_line: v }
    }

    /// Image of the point i (1-based).
    pub fn apply(&self, i: usize) -> usize {
        assert!(i >= 1);
        if i <= self.one_line.len() {
            self.one_line[i - 1]
        } else {
            i
        }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.is_empty()
    }

    /// Smallest N with the permutation contained in S_N (N >= 1).
    pub fn window_size(&self) -> usize {
        self.one_line.len().max(1)
    }

    /// One-line notation padded to length n (n must cover the support).
    pub fn window(&self, n: usize) -> Vec<usize> {
        assert!(n >= self.one_line.len(), "window too small");
        (1..=n).map(|i| self.apply(i)).collect()
    }

    /// Composition: (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.one_line.len().max(other.one_line.len());
        let v: Vec<usize> = (1..=n).map(|i| self.apply(other.apply(i))).collect();
        Permutation::from_one_line(&v).unwrap()
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.one_line.len();
        let mut v = vec![0; n];
        for (i, &w) in self.one_line.iter().enumerate() {
            v[w - 1] = i + 1;
        }
        Permutation::from_one_line(&v).unwrap()
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        let mut l = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Right multiplication by s_i: swaps positions i and i+1.
    pub fn times_simple(&self, i: usize) -> Permutation {
        assert!(i >= 1);
        let n = self.one_line.len().max(i + 1);
        let mut v = self.window(n);
        v.swap(i - 1, i);
        Permutation::from_one_line(&v).unwrap()
    }

    /// Demazure product step: w ∘ s_i = w s_i if w(i) < w(i+1), else w.
    pub fn demazure_step(&self, i: usize) -> Permutation {
        if self.apply(i) < self.apply(i + 1) {
            self.times_simple(i)
        } else {
            self.clone()
        }
    }

    /// Positions i with w(i) > w(i+1).
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.window_size())
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .collect()
    }

    /// Positions i with w(i) < w(i+1), bounded by n-1.
    pub fn right_ascents_below(&self, n: usize) -> Vec<usize> {
        (1..n).filter(|&i| self.apply(i) < self.apply(i + 1)).collect()
    }

    /// All reduced words, each a sequence of simple-reflection indices.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in self.right_descents() {
            for mut r in self.times_simple(i).reduced_words() {
                r.push(i);
                out.push(r);
            }
        }
        out
    }

    /// Any one reduced word (lexicographically first descent at each step).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = w.right_descents().first() {
            word.push(i);
            w = w.times_simple(i);
        }
        word.reverse();
        word
    }

    /// Strong Bruhat order by the tableau criterion: u <= w iff for all k and
    /// all j, the j-th smallest of {u(1..k)} is <= the j-th smallest of {w(1..k)}.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        if self.length() > other.length() {
            return false;
        }
        let n = self.window_size().max(other.window_size());
        let mut us: Vec<usize> = Vec::with_capacity(n);
        let mut ws: Vec<usize> = Vec::with_capacity(n);
        for k in 1..=n {
            let pu = us.binary_search(&self.apply(k)).unwrap_err();
            us.insert(pu, self.apply(k));
            let pw = ws.binary_search(&other.apply(k)).unwrap_err();
            ws.insert(pw, other.apply(k));
            if us.iter().zip(ws.iter()).any(|(a, b)| a > b) {
                return false;
            }
        }
        true
    }

    /// The permutation 1^m x v: fixes 1..=m and maps m+i to m+v(i).
    pub fn shift(&self, m: usize) -> Permutation {
        let mut v: Vec<usize> = (1..=m).collect();
        for i in 1..=self.window_size() {
            v.push(m + self.apply(i));
        }
        Permutation::from_one_line(&v).unwrap()
    }

    /// All elements of S_n.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity()];
        for k in 2..=n {
            let mut next = Vec::with_capacity(out.len() * k);
            for w in &out {
                let base = w.window(k - 1);
                for pos in 0..k {
                    let mut v = base.clone();
                    v.insert(pos, k);
                    next.push(Permutation::from_one_line(&v).unwrap());
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// Longest element n, n-1, ..., 1 of S_n.
    pub fn longest(n: usize) -> Permutation {
        Permutation::from_one_line(&(1..=n).rev().collect::<Vec<_>>()).unwrap()
    }
}

/// Demazure (0-Hecke) product of the simple reflections indexed by `word`.
pub fn hecke_product(word: &[usize]) -> Permutation {
    let mut w = Permutation::identity();
    for &i in word {
        w = w.demazure_step(i);
    }
    w
}

/// Is `word` a Hecke word for `w`, i.e. does its Demazure product equal w?
pub fn is_hecke_word(word: &[usize], w: &Permutation) -> bool {
    hecke_product(word) == *w
}

/// Letter-count weight of a word with letters in 1..=n.
pub fn word_weight(word: &[usize], n: usize) -> Vec<i64> {
    let mut wt = vec![0i64; n];
    for &v in word {
        assert!(v >= 1 && v <= n, "letter {v} out of range 1..={n}");
        wt[v - 1] += 1;
    }
    wt
}

/// A word is a reverse lattice word if within every suffix each letter v >= 2
/// occurs at most as often as v - 1.
pub fn is_reverse_lattice(word: &[usize]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut count = vec![0usize; max + 1];
    for &v in word.iter().rev() {
        count[v] += 1;
        if v >= 2 && count[v] > count[v - 1] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn one_line_round_trip_and_trim() {
        let w = p(&[1, 4, 3, 2, 5, 6]);
        assert_eq!(w.window(4), vec![1, 4, 3, 2]);
        assert_eq!(w.apply(7), 7);
        assert_eq!(w, p(&[1, 4, 3, 2]));
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
    }

    #[test]
    fn compose_inverse_length() {
        let w = p(&[3, 1, 4, 2]);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity());
        assert_eq!(w.inverse().compose(&w), Permutation::identity());
        assert_eq!(w.length(), 3);
        assert_eq!(Permutation::longest(4).length(), 6);
        // right multiplication by s_i swaps positions
        assert_eq!(p(&[2, 1]).times_simple(2), p(&[2, 3, 1]));
    }

    #[test]
    fn demazure_step_fixed_values() {
        // s_3 s_2 has Demazure product 1423, not 1432
        assert_eq!(hecke_product(&[3, 2]), p(&[1, 4, 2, 3]));
        assert!(!is_hecke_word(&[3, 2], &p(&[1, 4, 3, 2])));
        // 1432 already has a descent at 2, so the step is idempotent there
        assert_eq!(p(&[1, 4, 3, 2]).demazure_step(2), p(&[1, 4, 3, 2]));
        // s_i ∘ s_i = s_i
        assert_eq!(hecke_product(&[1, 1]), Permutation::simple(1));
    }

    #[test]
    fn hecke_words_of_321() {
        let w = p(&[3, 2, 1]);
        assert!(is_hecke_word(&[1, 2, 1], &w));
        assert!(is_hecke_word(&[2, 1, 2], &w));
        assert!(is_hecke_word(&[1, 2, 1, 2], &w));
        assert!(is_hecke_word(&[1, 1, 2, 1], &w));
        assert!(!is_hecke_word(&[1, 2], &w));
    }

    #[test]
    fn reduced_words_of_321() {
        let mut words = p(&[3, 2, 1]).reduced_words();
        words.sort();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        assert_eq!(Permutation::identity().reduced_words(), vec![Vec::<usize>::new()]);
        for w in Permutation::all(4) {
            assert_eq!(hecke_product(&w.reduced_word()), w);
            assert_eq!(w.reduced_word().len(), w.length());
        }
    }

    #[test]
    fn all_s4_has_24_elements() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let ids: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(ids.len(), 24);
    }

    /// Subword characterization of Bruhat order, as an independent oracle.
    fn bruhat_leq_subword(u: &Permutation, w: &Permutation) -> bool {
        fn has_subword(word: &[usize], target: &[usize]) -> bool {
            let mut it = word.iter();
            target.iter().all(|t| it.any(|x| x == t))
        }
        let uws = u.reduced_words();
        w.reduced_words()
            .iter()
            .any(|ww| uws.iter().any(|uw| has_subword(ww, uw)))
    }

    #[test]
    fn bruhat_matches_subword_oracle_on_s4() {
        let all = Permutation::all(4);
        for u in &all {
            for w in &all {
                assert_eq!(
                    u.bruhat_leq(w),
                    bruhat_leq_subword(u, w),
                    "bruhat mismatch for {u} vs {w}"
                );
            }
        }
    }

    #[test]
    fn shift_block() {
        let v = p(&[2, 3, 1]);
        assert_eq!(v.shift(2), p(&[1, 2, 4, 5, 3]));
        assert_eq!(Permutation::identity().shift(3), Permutation::identity());
    }

    #[test]
    fn reverse_lattice_words() {
        assert!(is_reverse_lattice(&[4, 5, 1, 3, 2, 4, 3, 1, 1, 2, 1]));
        assert!(!is_reverse_lattice(&[8, 9, 4, 5, 5, 1, 3, 4, 4, 5, 5]));
        assert!(is_reverse_lattice(&[]));
        assert!(is_reverse_lattice(&[1]));
        assert!(!is_reverse_lattice(&[2]));
        assert!(is_reverse_lattice(&[2, 1]));
        assert!(!is_reverse_lattice(&[1, 2]));
    }
}
