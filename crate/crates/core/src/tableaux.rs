//! Set-valued tableaux on straight, skew, star-product, and shifted shapes:
//! semistandard enumeration, reading words, weight generating functions,
//! the crystal structure transported through column reading words, and
//! set-valued decomposition tableaux on shifted shapes.

use std::collections::HashMap;

use num::bigint::BigInt;

use crate::algebra::is_reverse_lattice;
use crate::crystal::{Crystal, Family};
use crate::poly::Polynomial;
use crate::svwords::{self, SetValuedWord};
use crate::{invalid, Result};

fn is_partition(a: &[usize]) -> bool {
    a.windows(2).all(|w| w[0] >= w[1]) && a.last().map_or(true, |&x| x > 0)
}

fn is_strict_partition(a: &[usize]) -> bool {
    a.windows(2).all(|w| w[0] > w[1]) && a.last().map_or(true, |&x| x > 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    Straight(Vec<usize>),
    Skew(Vec<usize>, Vec<usize>),
    Shifted(Vec<usize>),
    StarProduct(Vec<usize>, Vec<usize>),
}

/// A finite set of boxes (row, col), 1-based, sorted in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub kind: ShapeKind,
    pub boxes: Vec<(usize, usize)>,
}

impl Shape {
    pub fn straight(lambda: &[usize]) -> Result<Shape> {
        Shape::skew_kind(lambda, &[], ShapeKind::Straight(lambda.to_vec()))
    }

    pub fn skew(nu: &[usize], lambda: &[usize]) -> Result<Shape> {
        Shape::skew_kind(nu, lambda, ShapeKind::Skew(nu.to_vec(), lambda.to_vec()))
    }

    fn skew_kind(nu: &[usize], lambda: &[usize], kind: ShapeKind) -> Result<Shape> {
        if !is_partition(nu) || !is_partition(lambda) {
            return invalid(format!("{nu:?} / {lambda:?} must be partitions"));
        }
        let inner = |i: usize| lambda.get(i).copied().unwrap_or(0);
        if lambda.len() > nu.len() || (0..nu.len()).any(|i| inner(i) > nu[i]) {
            return invalid(format!("{lambda:?} is not contained in {nu:?}"));
        }
        let mut boxes = Vec::new();
        for (i, &outer) in nu.iter().enumerate() {
            for j in inner(i) + 1..=outer {
                boxes.push((i + 1, j));
            }
        }
        Ok(Shape { kind, boxes })
    }

    pub fn shifted(lambda: &[usize]) -> Result<Shape> {
        if !is_strict_partition(lambda) {
            return invalid(format!("{lambda:?} is not a strict partition"));
        }
        let mut boxes = Vec::new();
        for (i, &len) in lambda.iter().enumerate() {
            for j in 0..len {
                boxes.push((i + 1, i + 1 + j));
            }
        }
        Ok(Shape { kind: ShapeKind::Shifted(lambda.to_vec()), boxes })
    }

    /// lambda * mu: mu shifted right past lambda's first column span, lambda
    /// shifted below mu; as a skew shape,
    /// (p+mu_1, ..., p+mu_q, lambda_1, ...)/(p^q) with p = lambda_1, q = len(mu).
    pub fn star_product(lambda: &[usize], mu: &[usize]) -> Result<Shape> {
        if !is_partition(lambda) || !is_partition(mu) {
            return invalid(format!("{lambda:?} and {mu:?} must be partitions"));
        }
        let p = lambda.first().copied().unwrap_or(0);
        let q = mu.len();
        let mut outer: Vec<usize> = mu.iter().map(|&x| p + x).collect();
        outer.extend_from_slice(lambda);
        let inner = vec![p; q];
        Shape::skew_kind(
            &outer,
            &inner,
            ShapeKind::StarProduct(lambda.to_vec(), mu.to_vec()),
        )
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn index_of(&self, r: usize, c: usize) -> Option<usize> {
        self.boxes.binary_search(&(r, c)).ok()
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.kind {
            ShapeKind::Straight(l) => serde_json::json!({ "kind": "straight", "outer": l }),
            ShapeKind::Skew(n, l) => {
                serde_json::json!({ "kind": "skew", "outer": n, "inner": l })
            }
            ShapeKind::Shifted(l) => serde_json::json!({ "kind": "shifted", "outer": l }),
            ShapeKind::StarProduct(l, m) => {
                serde_json::json!({ "kind": "star", "left": l, "right": m })
            }
        }
    }
}

fn mask_min(mask: u32) -> usize {
    debug_assert!(mask != 0);
    mask.trailing_zeros() as usize + 1
}

fn mask_max(mask: u32) -> usize {
    debug_assert!(mask != 0);
    32 - mask.leading_zeros() as usize
}

fn mask_values(mask: u32) -> Vec<usize> {
    (1..=32).filter(|v| mask >> (v - 1) & 1 == 1).collect()
}

/// A filling of a shape by nonempty subsets of {1..n}, stored as bitmasks
/// parallel to `shape.boxes`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetValuedTableau {
    pub entries: Vec<u32>,
}

impl SetValuedTableau {
    pub fn get(&self, shape: &Shape, r: usize, c: usize) -> Option<u32> {
        shape.index_of(r, c).map(|k| self.entries[k])
    }

    pub fn weight(&self, n: usize) -> Vec<i64> {
        (0..n)
            .map(|v| self.entries.iter().filter(|&&s| s >> v & 1 == 1).count() as i64)
            .collect()
    }

    pub fn label(&self, shape: &Shape) -> String {
        let mut rows: Vec<String> = Vec::new();
        let mut cur_row = 0;
        for (k, &(r, c)) in shape.boxes.iter().enumerate() {
            if r != cur_row {
                rows.push(format!("r{r}c{c}:"));
                cur_row = r;
            }
            let vals: Vec<String> = mask_values(self.entries[k])
                .into_iter()
                .map(|v| v.to_string())
                .collect();
            let row = rows.last_mut().unwrap();
            row.push_str(&format!("[{}]", vals.join("")));
        }
        rows.join("|")
    }

    pub fn to_json(&self, shape: &Shape) -> serde_json::Value {
        let cells: Vec<serde_json::Value> = shape
            .boxes
            .iter()
            .zip(&self.entries)
            .map(|(&(r, c), &s)| {
                serde_json::json!({ "row": r, "col": c, "set": mask_values(s) })
            })
            .collect();
        serde_json::json!({ "shape": shape.to_json(), "cells": cells })
    }
}

/// Local semistandard criterion: along rows max <= min, down columns
/// max < min, over adjacent filled boxes. Rows and columns of the shapes in
/// use are contiguous, so this matches the all-distributions definition.
pub fn is_semistandard(shape: &Shape, t: &SetValuedTableau) -> bool {
    for (k, &(r, c)) in shape.boxes.iter().enumerate() {
        let cur = t.entries[k];
        if cur == 0 {
            return false;
        }
        if let Some(left) = t.get(shape, r, c.wrapping_sub(1)) {
            if mask_max(left) > mask_min(cur) {
                return false;
            }
        }
        if let Some(up) = t.get(shape, r.wrapping_sub(1), c) {
            if mask_max(up) >= mask_min(cur) {
                return false;
            }
        }
    }
    true
}

/// All distributions: every way of picking one element from each set.
pub fn distributions(t: &SetValuedTableau) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &mask in &t.entries {
        let vals = mask_values(mask);
        let mut next = Vec::with_capacity(out.len() * vals.len());
        for d in &out {
            for &v in &vals {
                let mut dd = d.clone();
                dd.push(v);
                next.push(dd);
            }
        }
        out = next;
    }
    out
}

/// All semistandard set-valued tableaux of the shape with entries in {1..n}.
pub fn enumerate_settab(shape: &Shape, n: usize) -> Vec<SetValuedTableau> {
    let full: u32 = (1 << n) - 1;
    let mut out = Vec::new();
    let mut entries: Vec<u32> = Vec::with_capacity(shape.len());
    fn rec(
        shape: &Shape,
        full: u32,
        entries: &mut Vec<u32>,
        out: &mut Vec<SetValuedTableau>,
    ) {
        let k = entries.len();
        if k == shape.len() {
            out.push(SetValuedTableau { entries: entries.clone() });
            return;
        }
        let (r, c) = shape.boxes[k];
        // weakly larger than the row neighbor, strictly larger than the
        // column neighbor
        let mut lo = 1usize;
        let t = SetValuedTableau { entries: entries.clone() };
        if c > 1 {
            if let Some(left) = t.get(shape, r, c - 1) {
                lo = lo.max(mask_max(left));
            }
        }
        if r > 1 {
            if let Some(up) = t.get(shape, r - 1, c) {
                lo = lo.max(mask_max(up) + 1);
            }
        }
        if lo > 32 {
            return;
        }
        let allowed = full & !((1u32 << (lo - 1)) - 1);
        let mut sub = allowed;
        while sub != 0 {
            entries.push(sub);
            rec(shape, full, entries, out);
            entries.pop();
            sub = (sub - 1) & allowed;
        }
    }
    rec(shape, full, &mut entries, &mut out);
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    out
}

/// Weight generating polynomial over all semistandard set-valued tableaux.
pub fn g_polynomial(shape: &Shape, n: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for t in enumerate_settab(shape, n) {
        p = p.plus(&Polynomial::from_weight(&t.weight(n)));
    }
    p
}

/// G_lambda(x_1..x_n) for a straight shape.
pub fn grothendieck_g_straight(lambda: &[u32], n: usize) -> Result<Polynomial> {
    let mut l: Vec<usize> = lambda.iter().map(|&x| x as usize).collect();
    while l.last() == Some(&0) {
        l.pop();
    }
    Ok(g_polynomial(&Shape::straight(&l)?, n))
}

/// Box order of the column reading word: columns left to right, bottom to top.
pub fn column_order(shape: &Shape) -> Vec<usize> {
    let mut order: Vec<usize> = (0..shape.len()).collect();
    order.sort_by_key(|&k| {
        let (r, c) = shape.boxes[k];
        (c, std::cmp::Reverse(r))
    });
    order
}

/// Column reading word as a set-valued word.
pub fn col_word(shape: &Shape, t: &SetValuedTableau, n: usize) -> SetValuedWord {
    let sets = column_order(shape).iter().map(|&k| t.entries[k]).collect();
    SetValuedWord::new(n, sets).unwrap()
}

/// Flattened column reading word (each set in increasing order).
pub fn w_col(shape: &Shape, t: &SetValuedTableau, n: usize) -> Vec<usize> {
    svwords::flatten(&col_word(shape, t, n))
}

/// Reverse row reading word of a shifted tableau: rows right to left,
/// top row first.
pub fn revrow_shifted(shape: &Shape, t: &SetValuedTableau) -> Vec<u32> {
    let mut order: Vec<usize> = (0..shape.len()).collect();
    order.sort_by_key(|&k| {
        let (r, c) = shape.boxes[k];
        (r, std::cmp::Reverse(c))
    });
    order.into_iter().map(|k| t.entries[k]).collect()
}

pub fn flatten_sets(sets: &[u32]) -> Vec<usize> {
    sets.iter().flat_map(|&s| mask_values(s)).collect()
}

/// The crystal on SetTab_n(shape), transported through column reading words.
pub struct SetTabCrystal {
    pub crystal: Crystal,
    pub shape: Shape,
    pub tableaux: Vec<SetValuedTableau>,
}

pub fn settab_crystal(shape: &Shape, n: usize) -> Result<SetTabCrystal> {
    if n < 2 {
        return invalid("settab crystal needs n >= 2".to_string());
    }
    let tableaux = enumerate_settab(shape, n);
    let order = column_order(shape);
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    for (idx, t) in tableaux.iter().enumerate() {
        let key: Vec<u32> = order.iter().map(|&k| t.entries[k]).collect();
        index.insert(key, idx);
    }
    let rebuild = |word: &SetValuedWord| -> usize {
        *index.get(&word.sets).unwrap_or_else(|| {
            panic!("crystal operator left the set of semistandard tableaux: {word}")
        })
    };
    let mut e_map = vec![vec![None; tableaux.len()]; n - 1];
    let mut f_map = vec![vec![None; tableaux.len()]; n - 1];
    for (idx, t) in tableaux.iter().enumerate() {
        let word = col_word(shape, t, n);
        for i in 1..n {
            e_map[i - 1][idx] = svwords::raise(&word, i).map(|x| rebuild(&x));
            f_map[i - 1][idx] = svwords::lower(&word, i).map(|x| rebuild(&x));
        }
    }
    let labels = tableaux.iter().map(|t| t.label(shape)).collect();
    let weights = tableaux.iter().map(|t| t.weight(n)).collect();
    let crystal = Crystal::new(Family::Sqrt, n, labels, weights, e_map, f_map)?;
    Ok(SetTabCrystal { crystal, shape: shape.clone(), tableaux })
}

/// Counting route for G-expansions: the number of semistandard set-valued
/// tableaux whose flattened column word is reverse lattice, grouped by weight.
pub fn lattice_counts(shape: &Shape, n: usize) -> Vec<(Vec<u32>, BigInt)> {
    let mut counts: HashMap<Vec<u32>, BigInt> = HashMap::new();
    for t in enumerate_settab(shape, n) {
        if is_reverse_lattice(&w_col(shape, &t, n)) {
            let mut wt: Vec<u32> = t.weight(n).iter().map(|&x| x as u32).collect();
            while wt.last() == Some(&0) {
                wt.pop();
            }
            *counts.entry(wt).or_default() += 1;
        }
    }
    let mut out: Vec<_> = counts.into_iter().collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Decomposition tableaux on shifted shapes
// ---------------------------------------------------------------------------

/// Hook word: weakly decreasing prefix followed by a strictly increasing
/// suffix, with nonempty prefix.
pub fn is_hook_word(w: &[usize]) -> bool {
    if w.is_empty() {
        return true;
    }
    let mut m = 1;
    while m < w.len() && w[m - 1] >= w[m] {
        m += 1;
    }
    w[m - 1..].windows(2).all(|p| p[0] < p[1])
}

/// Integer filling of a shifted shape, rows left-to-right; rows[i] occupies
/// columns i+1 .. i+rows[i].len() (1-based).
/// Checks the hook-word condition on every row plus the forbidden patterns
/// over consecutive rows:
///   (1) T[r][j] <= T[r+1][k] for j < k when either j is the diagonal column
///       (no box below) or T[r+1][k] <= T[r+1][j];
///   (2) T[r+1][k] < T[r][j] < T[r][k] for j < k.
pub fn is_decomposition_filling(rows: &[Vec<usize>]) -> bool {
    if rows.iter().any(|r| !is_hook_word(r)) {
        return false;
    }
    for r in 0..rows.len().saturating_sub(1) {
        let upper = &rows[r];
        let lower = &rows[r + 1];
        // 1-based columns: upper spans r+1 .. r+upper.len(),
        //                  lower spans r+2 .. r+1+lower.len()
        let ucol = |j: usize| upper[j - (r + 1)];
        let lcol = |j: usize| lower[j - (r + 2)];
        let u_end = r + upper.len();
        let l_end = r + 1 + lower.len();
        for j in r + 1..=u_end {
            for k in j + 1..=l_end.min(u_end) {
                let below_j_exists = j >= r + 2 && j <= l_end;
                if k >= r + 2 {
                    let b = lcol(k);
                    // pattern family (1), a <= b <= c
                    if ucol(j) <= b && (!below_j_exists || b <= lcol(j)) {
                        return false;
                    }
                    // pattern family (2), x < y < z
                    if k <= u_end && b < ucol(j) && ucol(j) < ucol(k) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn shifted_rows(shape: &Shape, values: &[usize]) -> Vec<Vec<usize>> {
    let nrows = shape.boxes.iter().map(|&(r, _)| r).max().unwrap_or(0);
    let mut rows = vec![Vec::new(); nrows];
    for (k, &(r, _)) in shape.boxes.iter().enumerate() {
        rows[r - 1].push(values[k]);
    }
    rows
}

/// Every distribution must be a decomposition filling.
pub fn is_set_valued_decomposition(shape: &Shape, t: &SetValuedTableau) -> bool {
    if t.entries.iter().any(|&s| s == 0) {
        return false;
    }
    distributions(t)
        .iter()
        .all(|d| is_decomposition_filling(&shifted_rows(shape, d)))
}

/// All set-valued decomposition tableaux of a strict shape with entries in
/// {1..n}.
pub fn enumerate_setdectab(lambda: &[usize], n: usize) -> Result<Vec<SetValuedTableau>> {
    let shape = Shape::shifted(lambda)?;
    let full: u32 = (1 << n) - 1;
    let mut out = Vec::new();
    let mut entries = vec![0u32; shape.len()];
    fn rec(
        shape: &Shape,
        full: u32,
        k: usize,
        entries: &mut Vec<u32>,
        out: &mut Vec<SetValuedTableau>,
    ) {
        if k == shape.len() {
            let t = SetValuedTableau { entries: entries.clone() };
            if is_set_valued_decomposition(shape, &t) {
                out.push(t);
            }
            return;
        }
        for mask in 1..=full {
            entries[k] = mask;
            rec(shape, full, k + 1, entries, out);
        }
        entries[k] = 0;
    }
    rec(&shape, full, 0, &mut entries, &mut out);
    Ok(out)
}

/// Weight generating polynomial over set-valued decomposition tableaux.
pub fn gp_dec(lambda: &[usize], n: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero(n);
    for t in enumerate_setdectab(lambda, n)? {
        p = p.plus(&Polynomial::from_weight(&t.weight(n)));
    }
    Ok(p)
}

/// Counting route: tableaux whose flattened reverse row word (rows right to
/// left, top first) is reverse lattice, grouped by weight.
pub fn gp_dec_lattice_counts(lambda: &[usize], n: usize) -> Result<Vec<(Vec<u32>, BigInt)>> {
    let shape = Shape::shifted(lambda)?;
    let mut counts: HashMap<Vec<u32>, BigInt> = HashMap::new();
    for t in enumerate_setdectab(lambda, n)? {
        let word = flatten_sets(&revrow_shifted(&shape, &t));
        if is_reverse_lattice(&word) {
            let mut wt: Vec<u32> = t.weight(n).iter().map(|&x| x as u32).collect();
            while wt.last() == Some(&0) {
                wt.pop();
            }
            *counts.entry(wt).or_default() += 1;
        }
    }
    let mut out: Vec<_> = counts.into_iter().collect();
    out.sort();
    Ok(out)
}

/// One-row K-theoretic Schur P-polynomial: fillings of a single row of m
/// boxes by nonempty subsets of the marked alphabet 1' < 1 < 2' < 2 < ... <
/// n' < n with max(T_j) <= min(T_{j+1}), strictly if max(T_j) is primed.
/// The leftmost box sits on the shifted main diagonal and carries no primed
/// letters. Both k' and k contribute to weight coordinate k.
/// Letters are encoded 1..2n with odd = primed.
pub fn gp_one_row(m: usize, n: usize) -> Polynomial {
    let letters = 2 * n;
    let mut out = Polynomial::zero(n);
    // masks over the 2n marked letters
    let mut boxes: Vec<u32> = Vec::with_capacity(m);
    fn weight(boxes: &[u32], n: usize) -> Vec<i64> {
        let mut wt = vec![0i64; n];
        for &mask in boxes {
            for l in 1..=2 * n {
                if mask >> (l - 1) & 1 == 1 {
                    wt[(l + 1) / 2 - 1] += 1;
                }
            }
        }
        wt
    }
    fn rec(m: usize, n: usize, letters: usize, boxes: &mut Vec<u32>, out: &mut Polynomial) {
        if boxes.len() == m {
            *out = out.plus(&Polynomial::from_weight(&weight(boxes, n)));
            return;
        }
        let first = boxes.is_empty();
        let lo = match boxes.last() {
            None => 1,
            Some(&prev) => {
                let mx = mask_max(prev);
                if mx % 2 == 1 {
                    mx + 1 // primed max forces strict inequality
                } else {
                    mx
                }
            }
        };
        if lo > letters {
            return;
        }
        let mut allowed: u32 = ((1u32 << letters) - 1) & !((1u32 << (lo - 1)) - 1);
        if first {
            // no primed letters on the diagonal box
            allowed &= 0b10101010101010101010101010101010u32;
        }
        let mut sub = allowed;
        while sub != 0 {
            boxes.push(sub);
            rec(m, n, letters, boxes, out);
            boxes.pop();
            sub = (sub - 1) & allowed;
        }
    }
    rec(m, n, letters, &mut boxes, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Increasing (integer) tableaux
// ---------------------------------------------------------------------------

/// All increasing tableaux with at most `max_rows` rows and entries in
/// {1..max_entry}, over all partition shapes that fit.
pub fn enumerate_increasing(max_rows: usize, max_entry: usize) -> Vec<Vec<Vec<usize>>> {
    // shapes fit inside max_rows x max_entry since rows/cols are strict
    let mut shapes: Vec<Vec<usize>> = vec![vec![]];
    let mut all_shapes = Vec::new();
    while let Some(shape) = shapes.pop() {
        if !shape.is_empty() {
            all_shapes.push(shape.clone());
        }
        if shape.len() < max_rows {
            let cap = shape.last().copied().unwrap_or(max_entry);
            for next in 1..=cap {
                let mut s = shape.clone();
                s.push(next);
                shapes.push(s);
            }
        }
    }
    let mut out = Vec::new();
    for shape in all_shapes {
        let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
        fill_increasing(&mut rows, 0, 0, max_entry, &mut out);
    }
    out.sort();
    out
}

fn fill_increasing(
    rows: &mut Vec<Vec<usize>>,
    r: usize,
    c: usize,
    max_entry: usize,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if r == rows.len() {
        out.push(rows.clone());
        return;
    }
    let (nr, nc) = if c + 1 < rows[r].len() { (r, c + 1) } else { (r + 1, 0) };
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1] + 1);
    }
    if r > 0 && rows[r - 1].len() > c {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    for v in lo..=max_entry {
        rows[r][c] = v;
        fill_increasing(rows, nr, nc, max_entry, out);
    }
    rows[r][c] = 0;
}

/// Row reading word of an integer tableau: bottom row first, left to right.
pub fn row_word_increasing(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().rev().flatten().copied().collect()
}

/// Reverse row reading word: the reversal of the row word.
pub fn revrow_increasing(rows: &[Vec<usize>]) -> Vec<usize> {
    let mut w = row_word_increasing(rows);
    w.reverse();
    w
}

pub fn shape_of_rows(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().map(|r| r.len()).collect()
}
