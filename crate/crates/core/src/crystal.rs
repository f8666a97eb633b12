//! Materialized finite crystal graphs. Elements are indices into parallel
//! arrays; raising/lowering operators are partial maps stored per index.
//! Covers both ordinary (gl) crystals and square-root crystals, which share
//! the same data but satisfy different weight axioms.

use std::collections::BTreeSet;

use crate::poly::Polynomial;
use crate::algebra::Permutation;
use crate::{inconsistent, invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Gl,
    Sqrt,
}

#[derive(Clone, Debug)]
pub struct Crystal {
    pub family: Family,
    /// Rank parameter: weights live in Z^n and operators are indexed 1..n-1.
    pub n: usize,
    pub labels: Vec<String>,
    pub weights: Vec<Vec<i64>>,
    e_map: Vec<Vec<Option<usize>>>,
    f_map: Vec<Vec<Option<usize>>>,
}

impl Crystal {
    pub fn new(
        family: Family,
        n: usize,
        labels: Vec<String>,
        weights: Vec<Vec<i64>>,
        e_map: Vec<Vec<Option<usize>>>,
        f_map: Vec<Vec<Option<usize>>>,
    ) -> Result<Crystal> {
        let sz = labels.len();
        if weights.len() != sz || weights.iter().any(|w| w.len() != n) {
            return invalid("weight table shape mismatch".to_string());
        }
        if e_map.len() + 1 != n || f_map.len() + 1 != n {
            return invalid("operator table must have n-1 rows".to_string());
        }
        for i in 0..n - 1 {
            if e_map[i].len() != sz || f_map[i].len() != sz {
                return invalid("operator table length mismatch".to_string());
            }
            for b in 0..sz {
                // e_i(b) = c must pair with f_i(c) = b
                if let Some(c) = e_map[i][b] {
                    if c >= sz || f_map[i][c] != Some(b) {
                        return invalid(format!("e/f not mutually inverse at i={} b={b}", i + 1));
                    }
                }
                if let Some(c) = f_map[i][b] {
                    if c >= sz || e_map[i][c] != Some(b) {
                        return invalid(format!("f/e not mutually inverse at i={} b={b}", i + 1));
                    }
                }
            }
        }
        Ok(Crystal { family, n, labels, weights, e_map, f_map })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn e(&self, i: usize, b: usize) -> Option<usize> {
        self.e_map[i - 1][b]
    }

    pub fn f(&self, i: usize, b: usize) -> Option<usize> {
        self.f_map[i - 1][b]
    }

    /// Number of times e_i applies before vanishing.
    pub fn epsilon(&self, i: usize, b: usize) -> usize {
        let mut k = 0;
        let mut cur = b;
        while let Some(next) = self.e(i, cur) {
            k += 1;
            cur = next;
            assert!(k <= self.len(), "e_{i}-string contains a cycle");
        }
        k
    }

    pub fn phi(&self, i: usize, b: usize) -> usize {
        let mut k = 0;
        let mut cur = b;
        while let Some(next) = self.f(i, cur) {
            k += 1;
            cur = next;
            assert!(k <= self.len(), "f_{i}-string contains a cycle");
        }
        k
    }

    /// E_i(b) = e_i applied epsilon_i(b) times: top of the i-string.
    pub fn big_e(&self, i: usize, b: usize) -> usize {
        let mut cur = b;
        while let Some(next) = self.e(i, cur) {
            cur = next;
        }
        cur
    }

    /// rect = (E_1 E_2 .. E_{n-1}) ... (E_1 E_2)(E_1), rightmost factor first.
    pub fn rect(&self, b: usize) -> usize {
        let mut cur = b;
        for k in 1..self.n {
            for i in (1..=k).rev() {
                cur = self.big_e(i, cur);
            }
        }
        cur
    }

    /// The full i-string through b, listed from source (top) to sink.
    pub fn string_through(&self, i: usize, b: usize) -> Vec<usize> {
        let mut cur = self.big_e(i, b);
        let mut out = vec![cur];
        while let Some(next) = self.f(i, cur) {
            out.push(next);
            cur = next;
        }
        out
    }

    pub fn is_highest_weight(&self, b: usize) -> bool {
        (1..self.n).all(|i| self.e(i, b).is_none())
    }

    pub fn highest_weights(&self) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.is_highest_weight(b)).collect()
    }

    /// Connected components (full subcrystals), each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(b) = stack.pop() {
                for i in 1..self.n {
                    for next in [self.e(i, b), self.f(i, b)].into_iter().flatten() {
                        if !seen[next] {
                            seen[next] = true;
                            comp.push(next);
                            stack.push(next);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The restriction to a subset of elements. Operator edges leaving the
    /// subset are an error: the subset must be a union of strings.
    pub fn subcrystal(&self, members: &[usize]) -> Result<Crystal> {
        let mut pos = vec![None; self.len()];
        for (k, &b) in members.iter().enumerate() {
            pos[b] = Some(k);
        }
        let remap = |x: Option<usize>| -> Result<Option<usize>> {
            match x {
                None => Ok(None),
                Some(b) => match pos[b] {
                    Some(k) => Ok(Some(k)),
                    None => inconsistent("subcrystal is not closed under operators".to_string()),
                },
            }
        };
        let mut e_map = vec![Vec::with_capacity(members.len()); self.n - 1];
        let mut f_map = vec![Vec::with_capacity(members.len()); self.n - 1];
        for i in 0..self.n - 1 {
            for &b in members {
                e_map[i].push(remap(self.e_map[i][b])?);
                f_map[i].push(remap(self.f_map[i][b])?);
            }
        }
        Crystal::new(
            self.family,
            self.n,
            members.iter().map(|&b| self.labels[b].clone()).collect(),
            members.iter().map(|&b| self.weights[b].clone()).collect(),
            e_map,
            f_map,
        )
    }

    /// Disjoint union; the right factor's indices are shifted by self.len().
    pub fn union(&self, other: &Crystal) -> Crystal {
        assert_eq!(self.family, other.family);
        assert_eq!(self.n, other.n);
        let off = self.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        let shift = |x: Option<usize>| x.map(|b| b + off);
        let mut e_map = self.e_map.clone();
        let mut f_map = self.f_map.clone();
        for i in 0..self.n - 1 {
            e_map[i].extend(other.e_map[i].iter().map(|&x| shift(x)));
            f_map[i].extend(other.f_map[i].iter().map(|&x| shift(x)));
        }
        Crystal { family: self.family, n: self.n, labels, weights, e_map, f_map }
    }

    /// Tensor product; element (a, b) gets index a * other.len() + b.
    ///   e_i(a (x) b) = a (x) e_i(b)  if eps_i(a) <= phi_i(b), else e_i(a) (x) b
    ///   f_i(a (x) b) = a (x) f_i(b)  if eps_i(a) <  phi_i(b), else f_i(a) (x) b
    pub fn tensor(&self, other: &Crystal) -> Crystal {
        assert_eq!(self.family, other.family);
        assert_eq!(self.n, other.n);
        let (la, lb) = (self.len(), other.len());
        let idx = |a: usize, b: usize| a * lb + b;
        let mut labels = Vec::with_capacity(la * lb);
        let mut weights = Vec::with_capacity(la * lb);
        for a in 0..la {
            for b in 0..lb {
                labels.push(format!("{}(x){}", self.labels[a], other.labels[b]));
                weights.push(
                    self.weights[a]
                        .iter()
                        .zip(&other.weights[b])
                        .map(|(x, y)| x + y)
                        .collect(),
                );
            }
        }
        let mut e_map = vec![vec![None; la * lb]; self.n - 1];
        let mut f_map = vec![vec![None; la * lb]; self.n - 1];
        for i in 1..self.n {
            for a in 0..la {
                let eps_a = self.epsilon(i, a);
                for b in 0..lb {
                    let phi_b = other.phi(i, b);
                    let e_img = if eps_a <= phi_b {
                        other.e(i, b).map(|bb| idx(a, bb))
                    } else {
                        self.e(i, a).map(|aa| idx(aa, b))
                    };
                    let f_img = if eps_a < phi_b {
                        other.f(i, b).map(|bb| idx(a, bb))
                    } else {
                        self.f(i, a).map(|aa| idx(aa, b))
                    };
                    e_map[i - 1][idx(a, b)] = e_img;
                    f_map[i - 1][idx(a, b)] = f_img;
                }
            }
        }
        Crystal::new(self.family, self.n, labels, weights, e_map, f_map)
            .expect("tensor of valid crystals is valid")
    }

    pub fn character(&self) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for w in &self.weights {
            p = p.plus(&Polynomial::from_weight(w));
        }
        p
    }

    pub fn character_of(&self, members: &BTreeSet<usize>) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for &b in members {
            p = p.plus(&Polynomial::from_weight(&self.weights[b]));
        }
        p
    }

    /// Checks the weight/string axioms for the declared family.
    pub fn check_axioms(&self) -> Result<()> {
        for b in 0..self.len() {
            for i in 1..self.n {
                let eps = self.epsilon(i, b) as i64;
                let phi = self.phi(i, b) as i64;
                let diff = self.weights[b][i - 1] - self.weights[b][i];
                match self.family {
                    Family::Gl => {
                        if phi - eps != diff {
                            return inconsistent(format!(
                                "gl axiom phi-eps failed at b={b} i={i}: {phi}-{eps} != {diff}"
                            ));
                        }
                        if let Some(c) = self.e(i, b) {
                            let mut expect = self.weights[b].clone();
                            expect[i - 1] += 1;
                            expect[i] -= 1;
                            if self.weights[c] != expect {
                                return inconsistent(format!(
                                    "gl weight step failed at b={b} i={i}"
                                ));
                            }
                        }
                    }
                    Family::Sqrt => {
                        if phi - eps != 2 * diff {
                            return inconsistent(format!(
                                "sqrt axiom (phi-eps)/2 failed at b={b} i={i}: {phi}-{eps} vs 2*{diff}"
                            ));
                        }
                        if let Some(c) = self.e(i, b) {
                            let mut expect = self.weights[b].clone();
                            if eps % 2 == 0 {
                                expect[i - 1] += 1;
                            } else {
                                expect[i] -= 1;
                            }
                            if self.weights[c] != expect {
                                return inconsistent(format!(
                                    "sqrt weight step failed at b={b} i={i} (eps={eps})"
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Replaces the operators by their squares. A square-root crystal
    /// becomes an ordinary gl crystal.
    pub fn squared(&self) -> Crystal {
        let step2 = |m: &Vec<Vec<Option<usize>>>| -> Vec<Vec<Option<usize>>> {
            m.iter()
                .map(|row| {
                    (0..self.len())
                        .map(|b| row[b].and_then(|c| row[c]))
                        .collect()
                })
                .collect()
        };
        Crystal {
            family: Family::Gl,
            n: self.n,
            labels: self.labels.clone(),
            weights: self.weights.clone(),
            e_map: step2(&self.e_map),
            f_map: step2(&self.f_map),
        }
    }

    /// Minimal total weight over all elements.
    pub fn minlevel(&self) -> i64 {
        self.weights
            .iter()
            .map(|w| w.iter().sum::<i64>())
            .min()
            .expect("minlevel of empty crystal")
    }

    /// The squared crystal restricted to elements of total weight
    /// minlevel + delta. The squared operators preserve total weight, so the
    /// slice is a union of strings.
    pub fn slice_2delta(&self, delta: i64) -> Result<Crystal> {
        let level = self.minlevel() + delta;
        let members: Vec<usize> = (0..self.len())
            .filter(|&b| self.weights[b].iter().sum::<i64>() == level)
            .collect();
        self.squared().subcrystal(&members)
    }

    /// Upward closure along the i-strings: all b with e_i^k(b) in the set.
    pub fn demazure_closure(&self, set: &BTreeSet<usize>, i: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &b in set.iter() {
            // everything weakly below b on its i-string, plus b itself
            let mut cur = b;
            out.insert(cur);
            while let Some(next) = self.f(i, cur) {
                out.insert(next);
                cur = next;
            }
        }
        // also keep the original set members (covers k = 0 even off-string)
        out.extend(set.iter().copied());
        out
    }

    /// Demazure subset: closure of highest-weight elements along a reduced
    /// word of w, innermost (last) letter first.
    pub fn demazure_subset(&self, w: &Permutation) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = self.highest_weights().into_iter().collect();
        for &i in w.reduced_word().iter().rev() {
            set = self.demazure_closure(&set, i);
        }
        set
    }

    /// Character of the Demazure subset computed by the operator formula:
    /// sum over highest weights of pi_{i_1}..pi_{i_k} x^wt, for comparison
    /// against the set-theoretic character.
    pub fn demazure_character_formula(&self, w: &Permutation) -> Polynomial {
        let word = w.reduced_word();
        let mut total = Polynomial::zero(self.n);
        for b in self.highest_weights() {
            let mut p = Polynomial::from_weight(&self.weights[b]);
            for &i in word.iter().rev() {
                p = p.pi(i);
            }
            total = total.plus(&p);
        }
        total
    }

    /// Graph isomorphism respecting weights and labeled operator edges.
    pub fn is_isomorphic(&self, other: &Crystal) -> bool {
        if self.family != other.family || self.n != other.n || self.len() != other.len() {
            return false;
        }
        let sz = self.len();
        // candidate sets by weight
        let mut cand: Vec<Vec<usize>> = (0..sz)
            .map(|a| {
                (0..sz)
                    .filter(|&b| self.weights[a] == other.weights[b])
                    .collect()
            })
            .collect();
        for a in 0..sz {
            cand[a].retain(|&b| {
                (1..self.n).all(|i| {
                    self.e(i, a).is_some() == other.e(i, b).is_some()
                        && self.f(i, a).is_some() == other.f(i, b).is_some()
                })
            });
            if cand[a].is_empty() {
                return false;
            }
        }
        let mut assign: Vec<Option<usize>> = vec![None; sz];
        let mut used = vec![false; sz];
        self.iso_backtrack(other, &cand, &mut assign, &mut used, 0)
    }

    fn iso_backtrack(
        &self,
        other: &Crystal,
        cand: &[Vec<usize>],
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        a: usize,
    ) -> bool {
        if a == self.len() {
            return true;
        }
        'next: for &b in &cand[a] {
            if used[b] {
                continue;
            }
            for i in 1..self.n {
                for (x, y) in [
                    (self.e(i, a), other.e(i, b)),
                    (self.f(i, a), other.f(i, b)),
                ] {
                    if let (Some(xa), yb) = (x, y) {
                        if let Some(assigned) = assign[xa] {
                            if Some(assigned) != yb {
                                continue 'next;
                            }
                        }
                    }
                }
            }
            assign[a] = Some(b);
            used[b] = true;
            if self.iso_backtrack(other, cand, assign, used, a + 1) {
                return true;
            }
            assign[a] = None;
            used[b] = false;
        }
        false
    }

    /// Graphviz rendering with highest-weight elements marked.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n  rankdir=TB;\n");
        for b in 0..self.len() {
            let wt: Vec<String> = self.weights[b].iter().map(|x| x.to_string()).collect();
            let shape = if self.is_highest_weight(b) { "doubleoctagon" } else { "box" };
            s += &format!(
                "  v{b} [label=\"{}\\nwt=({})\",shape={shape}];\n",
                self.labels[b].replace('"', "'"),
                wt.join(",")
            );
        }
        for i in 1..self.n {
            for b in 0..self.len() {
                if let Some(c) = self.f(i, b) {
                    s += &format!("  v{b} -> v{c} [label=\"{i}\"];\n");
                }
            }
        }
        s += "}\n";
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = (0..self.len())
            .map(|b| {
                serde_json::json!({
                    "id": b,
                    "label": self.labels[b],
                    "weight": self.weights[b],
                    "highest_weight": self.is_highest_weight(b),
                })
            })
            .collect();
        let mut edges = Vec::new();
        for i in 1..self.n {
            for b in 0..self.len() {
                if let Some(c) = self.f(i, b) {
                    edges.push(serde_json::json!({ "from": b, "to": c, "i": i }));
                }
            }
        }
        serde_json::json!({
            "family": match self.family { Family::Gl => "gl", Family::Sqrt => "sqrt" },
            "n": self.n,
            "nodes": nodes,
            "edges": edges,
        })
    }
}

/// The crystal with a single weight-zero element and no edges.
pub fn trivial(n: usize, family: Family) -> Crystal {
    Crystal::new(
        family,
        n,
        vec!["{}".to_string()],
        vec![vec![0; n]],
        vec![vec![None]; n - 1],
        vec![vec![None]; n - 1],
    )
    .unwrap()
}

/// Standard gl_n crystal: boxes 1..n in a path, f_i(i) = i+1.
pub fn standard_gl(n: usize) -> Crystal {
    let labels = (1..=n).map(|v| format!("[{v}]")).collect();
    let weights = (0..n)
        .map(|v| {
            let mut w = vec![0; n];
            w[v] = 1;
            w
        })
        .collect();
    let mut e_map = vec![vec![None; n]; n - 1];
    let mut f_map = vec![vec![None; n]; n - 1];
    for i in 1..n {
        f_map[i - 1][i - 1] = Some(i);
        e_map[i - 1][i] = Some(i - 1);
    }
    Crystal::new(Family::Gl, n, labels, weights, e_map, f_map).unwrap()
}

pub fn subset_label(mask: u32) -> String {
    let elems: Vec<String> = (0..32)
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| (v + 1).to_string())
        .collect();
    format!("{{{}}}", elems.join(""))
}

/// Standard square-root crystal: nonempty subsets S of {1..n} with
///   e_i: S -> S u {i} if S n {i,i+1} = {i+1};  S \ {i+1} if both present
///   f_i: S -> S u {i+1} if S n {i,i+1} = {i};  S \ {i} if both present
/// Element index of a subset is its bitmask minus one.
pub fn standard_sqrt(n: usize) -> Crystal {
    let sz = (1usize << n) - 1;
    let labels = (1..=sz as u32).map(subset_label).collect();
    let weights = (1..=sz as u32)
        .map(|mask| (0..n).map(|v| (mask >> v & 1) as i64).collect())
        .collect();
    let mut e_map = vec![vec![None; sz]; n - 1];
    let mut f_map = vec![vec![None; sz]; n - 1];
    for mask in 1..=sz as u32 {
        for i in 1..n {
            let has_i = mask >> (i - 1) & 1 == 1;
            let has_i1 = mask >> i & 1 == 1;
            let e_img = match (has_i, has_i1) {
                (false, true) => Some(mask | 1 << (i - 1)),
                (true, true) => Some(mask & !(1 << i)),
                _ => None,
            };
            let f_img = match (has_i, has_i1) {
                (true, false) => Some(mask | 1 << i),
                (true, true) => Some(mask & !(1 << (i - 1))),
                _ => None,
            };
            if let Some(img) = e_img {
                e_map[i - 1][mask as usize - 1] = Some(img as usize - 1);
            }
            if let Some(img) = f_img {
                f_map[i - 1][mask as usize - 1] = Some(img as usize - 1);
            }
        }
    }
    Crystal::new(Family::Sqrt, n, labels, weights, e_map, f_map).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_gl_is_a_path() {
        let b = standard_gl(3);
        b.check_axioms().unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.f(1, 0), Some(1));
        assert_eq!(b.f(2, 1), Some(2));
        assert_eq!(b.f(1, 1), None);
        assert_eq!(b.highest_weights(), vec![0]);
        assert_eq!(b.components().len(), 1);
    }

    #[test]
    fn standard_sqrt_small_strings() {
        let s2 = standard_sqrt(2);
        s2.check_axioms().unwrap();
        // indices: {1} = 0, {2} = 1, {1,2} = 2
        assert_eq!(s2.f(1, 0), Some(2));
        assert_eq!(s2.f(1, 2), Some(1));
        assert_eq!(s2.e(1, 1), Some(2));
        assert_eq!(s2.epsilon(1, 1), 2);
        assert_eq!(s2.phi(1, 0), 2);
        assert_eq!(s2.epsilon(1, 2), 1);
        assert_eq!(s2.phi(1, 2), 1);
        assert_eq!(s2.highest_weights(), vec![0]);
        standard_sqrt(4).check_axioms().unwrap();
    }

    #[test]
    fn sqrt_squared_is_gl() {
        for n in 2..=4 {
            let sq = standard_sqrt(n).squared();
            sq.check_axioms().unwrap();
        }
    }

    #[test]
    fn tensor_of_gl_standard() {
        // B_2 (x) B_2 decomposes into components of sizes 3 and 1
        let b = standard_gl(2);
        let t = b.tensor(&b);
        t.check_axioms().unwrap();
        let mut sizes: Vec<usize> = t.components().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3]);
        assert_eq!(t.highest_weights().len(), 2);
        // character is (x1+x2)^2
        let x = Polynomial::var(2, 1).plus(&Polynomial::var(2, 2));
        assert_eq!(t.character(), x.times(&x));
    }

    #[test]
    fn tensor_of_sqrt_standard_satisfies_axioms() {
        for n in 2..=3 {
            let s = standard_sqrt(n);
            let t = s.tensor(&s);
            t.check_axioms().unwrap();
            let one_plus = trivial(n, Family::Sqrt).union(&s);
            one_plus.check_axioms().unwrap();
            one_plus.tensor(&one_plus).check_axioms().unwrap();
        }
    }

    #[test]
    fn union_components_add_up() {
        let s = standard_sqrt(3);
        let u = s.union(&s);
        assert_eq!(u.components().len(), 2 * s.components().len());
        assert_eq!(u.character(), s.character().plus(&s.character()));
    }

    #[test]
    fn big_e_and_rect_reach_string_tops() {
        let s = standard_sqrt(3);
        for b in 0..s.len() {
            for i in 1..3 {
                let top = s.big_e(i, b);
                assert_eq!(s.e(i, top), None);
                assert_eq!(s.epsilon(i, top), 0);
            }
            let r = s.rect(b);
            // rect lands on a highest weight element in this normal crystal
            assert!(s.is_highest_weight(r), "rect({b}) = {r} not highest");
        }
    }

    #[test]
    fn slice_and_minlevel() {
        let s = standard_sqrt(3);
        assert_eq!(s.minlevel(), 1);
        let sl0 = s.slice_2delta(0).unwrap();
        assert_eq!(sl0.len(), 3); // singletons
        sl0.check_axioms().unwrap();
        let sl1 = s.slice_2delta(1).unwrap();
        assert_eq!(sl1.len(), 3); // doubletons
        sl1.check_axioms().unwrap();
        assert_eq!(s.slice_2delta(2).unwrap().len(), 1);
    }

    #[test]
    fn demazure_subsets_of_gl_tensor() {
        use crate::algebra::Permutation;
        let b = standard_gl(2).tensor(&standard_gl(2));
        let id = Permutation::identity();
        let hw: BTreeSet<usize> = b.highest_weights().into_iter().collect();
        assert_eq!(b.demazure_subset(&id), hw);
        let w0 = Permutation::longest(2);
        assert_eq!(b.demazure_subset(&w0).len(), b.len());
        // character of the full Demazure subset matches the operator formula
        assert_eq!(
            b.character_of(&b.demazure_subset(&w0)),
            b.demazure_character_formula(&w0)
        );
    }

    #[test]
    fn demazure_character_formula_all_w_s3() {
        use crate::algebra::Permutation;
        let b = standard_gl(3).tensor(&standard_gl(3));
        for w in Permutation::all(3) {
            assert_eq!(
                b.character_of(&b.demazure_subset(&w)),
                b.demazure_character_formula(&w),
                "demazure character mismatch at w={w}"
            );
        }
    }

    #[test]
    fn isomorphism_detects_relabeling_and_difference() {
        let s = standard_sqrt(3);
        // relabeled copy
        let mut t = s.clone();
        t.labels = s.labels.iter().map(|l| format!("re-{l}")).collect();
        assert!(s.is_isomorphic(&t));
        assert!(!s.is_isomorphic(&standard_gl(3)));
        let gl = standard_gl(3);
        assert!(gl.is_isomorphic(&standard_gl(3)));
        assert!(!gl.tensor(&gl).is_isomorphic(&gl.union(&gl)));
    }

    #[test]
    fn dot_and_json_render() {
        let s = standard_sqrt(2);
        let dot = s.to_dot();
        assert!(dot.contains("digraph"));
        assert!(dot.contains("doubleoctagon"));
        let j = s.to_json();
        assert_eq!(j["n"], 2);
        assert_eq!(j["nodes"].as_array().unwrap().len(), 3);
        assert_eq!(j["edges"].as_array().unwrap().len(), 2);
    }
}
