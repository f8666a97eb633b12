//! Hecke insertion of compatible sequences, its restriction to set-valued
//! words, and crystals of decreasing factorizations of Hecke words.

use std::collections::HashMap;

use num::bigint::BigInt;

use crate::algebra::{hecke_product, Permutation};
use crate::crystal::{Crystal, Family};
use crate::poly::Polynomial;
use crate::svwords::{self, SetValuedWord};
use crate::tableaux::{
    enumerate_increasing, revrow_increasing, shape_of_rows, Shape, SetValuedTableau,
};
use crate::{invalid, Result};

/// Where a column insertion step ends.
enum Step {
    /// y was bumped into the next column.
    Bumped(usize),
    /// Insertion terminated at the given 1-based box.
    Ended(usize, usize),
}

/// Insert x into column c (0-based) of an increasing tableau:
/// - if the column has no entry exceeding x, append x when that keeps the
///   tableau increasing and end there; otherwise leave the tableau unchanged
///   and end at the last box of the row holding the column's last entry;
/// - otherwise the smallest entry y > x is replaced by x when that keeps the
///   tableau increasing, and y bumps into the next column either way.
fn insert_into_column(rows: &mut Vec<Vec<usize>>, c: usize, x: usize) -> Step {
    let height = rows.iter().take_while(|r| r.len() > c).count();
    let hit = (0..height).find(|&r| rows[r][c] > x);
    match hit {
        None => {
            // case (a): try to append x at box (height, c)
            let addable = if height < rows.len() {
                rows[height].len() == c
            } else {
                c == 0
            };
            let column_clash = height > 0 && rows[height - 1][c] >= x;
            let row_clash =
                c > 0 && height < rows.len() && rows[height].len() == c && rows[height][c - 1] >= x;
            if addable && !column_clash && !row_clash {
                if height == rows.len() {
                    rows.push(vec![x]);
                } else {
                    rows[height].push(x);
                }
                Step::Ended(height + 1, c + 1)
            } else {
                assert!(
                    column_clash || row_clash,
                    "append of {x} into column {c} failed without a value clash"
                );
                // a failed append never happens below an empty column
                assert!(height > 0, "insertion failed at an empty column");
                Step::Ended(height, rows[height - 1].len())
            }
        }
        Some(r) => {
            let y = rows[r][c];
            let increasing =
                (c == 0 || rows[r][c - 1] < x) && (r == 0 || rows[r - 1][c] < x);
            if increasing {
                rows[r][c] = x;
            }
            Step::Bumped(y)
        }
    }
}

/// Insert x into an increasing tableau, cascading from the first column.
/// Returns the 1-based box where the insertion ends.
pub fn single_insert(rows: &mut Vec<Vec<usize>>, x: usize) -> (usize, usize) {
    let mut cur = x;
    for c in 0.. {
        match insert_into_column(rows, c, cur) {
            Step::Bumped(y) => cur = y,
            Step::Ended(r, col) => return (r, col),
        }
    }
    unreachable!()
}

/// Insert a set of distinct numbers in decreasing order.
pub fn insert_set(rows: &mut Vec<Vec<usize>>, b: &[usize]) {
    let mut sorted = b.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &x in sorted.iter().rev() {
        single_insert(rows, x);
    }
}

/// (A, I) is compatible when I is weakly increasing of the same length and
/// A is strictly decreasing on every run of equal I-values.
pub fn is_compatible(a: &[usize], i: &[usize]) -> bool {
    a.len() == i.len()
        && i.windows(2).all(|w| w[0] <= w[1])
        && a.iter()
            .zip(a.iter().skip(1))
            .zip(i.windows(2))
            .all(|((&a0, &a1), w)| w[0] != w[1] || a0 > a1)
}

/// Hecke insertion of a compatible sequence. Returns the increasing
/// insertion tableau P and the recording tableau Q as a set-valued tableau
/// of the same straight shape.
pub fn hecke_insert(a: &[usize], i: &[usize]) -> Result<(Vec<Vec<usize>>, Shape, SetValuedTableau)> {
    if !is_compatible(a, i) {
        return invalid(format!("({a:?}, {i:?}) is not a compatible sequence"));
    }
    if i.iter().any(|&v| v == 0 || v > 32) {
        return invalid("recording letters must lie in 1..=32".to_string());
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (&x, &rec) in a.iter().zip(i) {
        let (r, c) = single_insert(&mut rows, x);
        if q.len() < rows.len() {
            q.push(Vec::new());
        }
        for (qrow, prow) in q.iter_mut().zip(&rows) {
            qrow.resize(prow.len(), 0);
        }
        q[r - 1][c - 1] |= 1 << (rec - 1);
    }
    debug_assert!(svwords::is_increasing_tableau(&rows));
    let shape = Shape::straight(&shape_of_rows(&rows))?;
    let entries = q.into_iter().flatten().collect();
    Ok((rows, shape, SetValuedTableau { entries }))
}

/// Compatible sequence of a set-valued word: for each letter value i in
/// increasing order, A records m+1-j over the positions j containing i
/// (decreasing within the run) and I records i with the same multiplicity.
pub fn encode_ai(word: &SetValuedWord) -> (Vec<usize>, Vec<usize>) {
    let m = word.m();
    let mut a = Vec::new();
    let mut i_word = Vec::new();
    for v in 1..=word.n {
        for j in 1..=m {
            if word.contains(j - 1, v) {
                a.push(m + 1 - j);
                i_word.push(v);
            }
        }
    }
    debug_assert!(is_compatible(&a, &i_word));
    (a, i_word)
}

pub fn p_hecke(word: &SetValuedWord) -> Vec<Vec<usize>> {
    let (a, i) = encode_ai(word);
    hecke_insert(&a, &i).unwrap().0
}

pub fn q_hecke(word: &SetValuedWord) -> (Shape, SetValuedTableau) {
    let (a, i) = encode_ai(word);
    let (_, shape, q) = hecke_insert(&a, &i).unwrap();
    (shape, q)
}

// ---------------------------------------------------------------------------
// Decreasing factorizations of Hecke words
// ---------------------------------------------------------------------------

/// An n-tuple of strictly decreasing words whose concatenation is a Hecke
/// word for w.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecrFactorization {
    pub factors: Vec<Vec<usize>>,
}

impl DecrFactorization {
    pub fn concat(&self) -> Vec<usize> {
        self.factors.iter().flatten().copied().collect()
    }

    pub fn weight(&self) -> Vec<i64> {
        self.factors.iter().map(|f| f.len() as i64).collect()
    }

    /// Row i holds the reversal of factor i (an increasing word).
    pub fn tab(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self
            .factors
            .iter()
            .map(|f| f.iter().rev().copied().collect())
            .collect();
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows
    }

    /// S_j = { i : m+1-j appears in factor i }.
    pub fn svword(&self, m: usize) -> SetValuedWord {
        let n = self.factors.len();
        let sets = (1..=m)
            .map(|j| {
                let mut mask = 0u32;
                for (idx, f) in self.factors.iter().enumerate() {
                    if f.contains(&(m + 1 - j)) {
                        mask |= 1 << idx;
                    }
                }
                mask
            })
            .collect();
        SetValuedWord::new(n, sets).unwrap()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|f| f.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        format!("({})", parts.join(","))
    }
}

fn decreasing_subwords(m: usize) -> Vec<Vec<usize>> {
    // all strictly decreasing words over [m], i.e. subsets read downward
    (0u32..1 << m)
        .map(|mask| (1..=m).rev().filter(|&v| mask >> (v - 1) & 1 == 1).collect())
        .collect()
}

/// All elements of Decr_n(w) with letters in [m], m = window of w minus one.
pub fn enumerate_decr(w: &Permutation, n: usize) -> Vec<DecrFactorization> {
    let m = w.window_size().max(2) - 1;
    let choices = decreasing_subwords(m);
    let mut out = Vec::new();
    let mut factors: Vec<Vec<usize>> = Vec::with_capacity(n);
    fn rec(
        w: &Permutation,
        n: usize,
        choices: &[Vec<usize>],
        factors: &mut Vec<Vec<usize>>,
        out: &mut Vec<DecrFactorization>,
    ) {
        if factors.len() == n {
            let d = DecrFactorization { factors: factors.clone() };
            if &hecke_product(&d.concat()) == w {
                out.push(d);
            }
            return;
        }
        for c in choices {
            factors.push(c.clone());
            rec(w, n, choices, factors, out);
            factors.pop();
        }
    }
    rec(w, n, &choices, &mut factors, &mut out);
    out.sort_by(|a, b| a.factors.cmp(&b.factors));
    out
}

/// The crystal on Decr_n(w), transported through the set-valued word
/// embedding. Raising and lowering must stay inside Decr_n(w).
pub struct DecrCrystal {
    pub crystal: Crystal,
    pub elements: Vec<DecrFactorization>,
}

pub fn decr_crystal(w: &Permutation, n: usize) -> Result<DecrCrystal> {
    if n < 2 {
        return invalid("decreasing-factorization crystal needs n >= 2".to_string());
    }
    let m = w.window_size().max(2) - 1;
    let elements = enumerate_decr(w, n);
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    for (idx, d) in elements.iter().enumerate() {
        index.insert(d.svword(m).sets.clone(), idx);
    }
    let rebuild = |word: &SetValuedWord| -> usize {
        *index.get(&word.sets).unwrap_or_else(|| {
            panic!("crystal operator left the factorization family: {word}")
        })
    };
    let mut e_map = vec![vec![None; elements.len()]; n - 1];
    let mut f_map = vec![vec![None; elements.len()]; n - 1];
    for (idx, d) in elements.iter().enumerate() {
        let word = d.svword(m);
        for i in 1..n {
            e_map[i - 1][idx] = svwords::raise(&word, i).map(|x| rebuild(&x));
            f_map[i - 1][idx] = svwords::lower(&word, i).map(|x| rebuild(&x));
        }
    }
    let labels = elements.iter().map(|d| d.label()).collect();
    let weights = elements.iter().map(|d| d.weight()).collect();
    let crystal = Crystal::new(Family::Sqrt, n, labels, weights, e_map, f_map)?;
    Ok(DecrCrystal { crystal, elements })
}

/// Coefficients c_{w,lambda}: the number of increasing tableaux of shape
/// lambda, with at most n rows and letters in [m], whose reverse row word is
/// a Hecke word for w.
pub fn c_w_coeffs(w: &Permutation, n: usize) -> Vec<(Vec<u32>, BigInt)> {
    let m = w.window_size().max(2) - 1;
    let mut counts: HashMap<Vec<u32>, BigInt> = HashMap::new();
    if w.is_identity() {
        // the empty tableau is the unique witness for the identity
        counts.insert(Vec::new(), BigInt::from(1));
    }
    for t in enumerate_increasing(n, m) {
        if &hecke_product(&revrow_increasing(&t)) == w {
            let shape: Vec<u32> = shape_of_rows(&t).iter().map(|&x| x as u32).collect();
            *counts.entry(shape).or_default() += 1;
        }
    }
    let mut out: Vec<_> = counts.into_iter().collect();
    out.sort();
    out
}

/// Character of Decr_n(w) by direct enumeration.
pub fn decr_character(w: &Permutation, n: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for d in enumerate_decr(w, n) {
        p = p.plus(&Polynomial::from_weight(&d.weight()));
    }
    p
}
