//! Rectangular pipe dreams: n-by-m grids of bump and crossing tiles, their
//! associated permutations, the crystal structure carried over from
//! set-valued words, and the Bruhat-interval subsets whose characters
//! satisfy the K-theoretic Demazure recursion.

use std::collections::BTreeSet;

use crate::algebra::{hecke_product, Permutation};
use crate::poly::Polynomial;
use crate::svwords::{self, SetValuedWord, SvUniverse};
use crate::{invalid, Result};

/// A rectangular pipe dream with n rows and m columns, encoded by the
/// set-valued word with i in S_j exactly when tile (i, j) is a bump.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rpd {
    pub word: SetValuedWord,
}

impl Rpd {
    pub fn n(&self) -> usize {
        self.word.n
    }

    pub fn m(&self) -> usize {
        self.word.m()
    }

    pub fn is_bump(&self, i: usize, j: usize) -> bool {
        self.word.contains(j - 1, i)
    }

    /// Number of bump tiles per row.
    pub fn weight(&self) -> Vec<i64> {
        self.word.weight()
    }

    /// Number of crossing tiles per row.
    pub fn weight_cross(&self) -> Vec<i64> {
        let m = self.m() as i64;
        self.weight().iter().map(|&x| m - x).collect()
    }

    /// The permutation read off the top and right edges after tracing all
    /// pipes. Pipes enter the left edge (label i in row i) and the bottom
    /// edge (label n+j in column j); at a crossing the larger label exits
    /// through the top, at a bump the left pipe turns up and the bottom pipe
    /// turns right.
    pub fn sigma_traced(&self) -> Permutation {
        let (n, m) = (self.n(), self.m());
        let mut col_top: Vec<usize> = (1..=m).map(|j| n + j).collect();
        let mut right_edge = vec![0usize; n];
        for i in (1..=n).rev() {
            let mut left = i;
            for j in 1..=m {
                let (a, b) = (left, col_top[j - 1]);
                if self.is_bump(i, j) {
                    col_top[j - 1] = a;
                    left = b;
                } else {
                    col_top[j - 1] = a.max(b);
                    left = a.min(b);
                }
            }
            right_edge[i - 1] = left;
        }
        let mut one_line = col_top;
        one_line.extend(right_edge);
        Permutation::from_one_line(&one_line).unwrap()
    }

    /// The same permutation as the 0-Hecke product of s_{r+c-1} over the
    /// crossing positions, ordered bottom row first and left to right within
    /// each row.
    pub fn sigma_demazure(&self) -> Permutation {
        let mut word = Vec::new();
        for r in (1..=self.n()).rev() {
            for c in 1..=self.m() {
                if !self.is_bump(r, c) {
                    word.push(r + c - 1);
                }
            }
        }
        hecke_product(&word)
    }

    pub fn sigma(&self) -> Permutation {
        self.sigma_traced()
    }
}

/// The shifted embedding of v (1^m x v): fixes [m] and maps m+i to m+v(i).
fn shifted(v: &Permutation, m: usize) -> Permutation {
    v.shift(m)
}

/// The canonical orbit representative of sigma under relabeling values in
/// [n] on the left and permuting the last n positions on the right: the
/// unique u * sigma * (1^m x v) whose values 1..n appear in decreasing
/// positions and whose last n entries decrease.
pub fn sigma_bar(sigma: &Permutation, m: usize, n: usize) -> Permutation {
    // sort the last n positions by decreasing value
    let line = sigma.window(m + n);
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(line[m + i - 1]));
    let v = Permutation::from_one_line(&order).unwrap();
    let tau = sigma.compose(&shifted(&v, m));
    // relabel values 1..n so that value 1 sits at the largest position
    let tau_line = tau.window(m + n);
    let mut positions: Vec<(usize, usize)> = (1..=m + n)
        .filter(|&p| tau_line[p - 1] <= n)
        .map(|p| (p, tau_line[p - 1]))
        .collect();
    positions.sort_by_key(|&(p, _)| std::cmp::Reverse(p));
    let mut u_inv = vec![0usize; n];
    for (rank, &(_, val)) in positions.iter().enumerate() {
        // value val must become rank+1
        u_inv[val - 1] = rank + 1;
    }
    let u = Permutation::from_one_line(&u_inv).unwrap();
    let result = u.compose(&tau);
    debug_assert!(is_orbit_canonical(&result, m, n));
    result
}

fn is_orbit_canonical(p: &Permutation, m: usize, n: usize) -> bool {
    let inv = p.inverse();
    (1..n).all(|v| inv.apply(v) > inv.apply(v + 1))
        && (1..n).all(|i| p.apply(m + i) > p.apply(m + i + 1))
}

/// Membership in C_w: sigma = u * sigma_bar * (1^m x v) for some u, v in
/// S_n with v <= w in Bruhat order.
pub fn in_c_w(
    sigma: &Permutation,
    bar: &Permutation,
    m: usize,
    n: usize,
    w: &Permutation,
) -> bool {
    for v in Permutation::all(n) {
        if !v.bruhat_leq(w) {
            continue;
        }
        let u = sigma
            .compose(&shifted(&v.inverse(), m))
            .compose(&bar.inverse());
        if u.window_size() <= n {
            return true;
        }
    }
    false
}

/// The full crystal RPD_{m,n} together with its pipe dreams and their
/// permutations.
pub struct RpdUniverse {
    pub universe: SvUniverse,
    pub m: usize,
    pub n: usize,
    pub dreams: Vec<Rpd>,
    pub sigmas: Vec<Permutation>,
    pub bars: Vec<Permutation>,
}

pub fn rpd_universe(m: usize, n: usize) -> Result<RpdUniverse> {
    let universe = svwords::universe(n, m)?;
    let dreams: Vec<Rpd> = universe
        .words
        .iter()
        .map(|w| Rpd { word: w.clone() })
        .collect();
    let sigmas: Vec<Permutation> = dreams.iter().map(|d| d.sigma()).collect();
    let bars = sigmas.iter().map(|s| sigma_bar(s, m, n)).collect();
    Ok(RpdUniverse { universe, m, n, dreams, sigmas, bars })
}

impl RpdUniverse {
    /// Indices of the pipe dreams lying in C_w for C the whole universe.
    pub fn c_w_members(&self, w: &Permutation) -> Result<BTreeSet<usize>> {
        if w.window_size() > self.n {
            return invalid(format!("{w} does not lie in S_{}", self.n));
        }
        Ok((0..self.dreams.len())
            .filter(|&idx| in_c_w(&self.sigmas[idx], &self.bars[idx], self.m, self.n, w))
            .collect())
    }

    pub fn character_of(&self, members: &BTreeSet<usize>) -> Polynomial {
        self.universe.crystal.character_of(members)
    }

    /// f-descent closure of a member set under index i.
    pub fn demazure_op(&self, members: &BTreeSet<usize>, i: usize) -> BTreeSet<usize> {
        self.universe.crystal.demazure_closure(members, i)
    }

    /// Weight generating function of RPD_{m,n}(w) by bump counts.
    pub fn chi_bump(&self, w: &Permutation) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for (idx, d) in self.dreams.iter().enumerate() {
            if &self.sigmas[idx] == w {
                p = p.plus(&Polynomial::from_weight(&d.weight()));
            }
        }
        p
    }

    /// Weight generating function of RPD_{m,n}(w) by crossing counts.
    pub fn chi_cross(&self, w: &Permutation) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for (idx, d) in self.dreams.iter().enumerate() {
            if &self.sigmas[idx] == w {
                p = p.plus(&Polynomial::from_weight(&d.weight_cross()));
            }
        }
        p
    }

    /// All distinct permutations associated to the pipe dreams.
    pub fn permutations(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = self.sigmas.to_vec();
        out.sort();
        out.dedup();
        out
    }
}
