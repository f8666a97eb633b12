//! Exact sparse polynomials in x_1..x_n with integer coefficients, the
//! divided-difference operators dd, ddK, pi, piK, key and Lascoux
//! polynomials, and expansions into the stable Grothendieck / Lascoux /
//! Schur bases.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::algebra::Permutation;
use crate::{inconsistent, invalid, Result};

/// Sparse polynomial: exponent vector of fixed length n -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Polynomial::monomial(n, &vec![0; n], BigInt::one())
    }

    pub fn monomial(n: usize, exp: &[u32], coeff: BigInt) -> Self {
        assert_eq!(exp.len(), n);
        let mut p = Polynomial::zero(n);
        p.add_term(exp.to_vec(), coeff);
        p
    }

    /// The variable x_i (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut exp = vec![0; n];
        exp[i - 1] = 1;
        Polynomial::monomial(n, &exp, BigInt::one())
    }

    /// x^wt for a nonnegative weight vector.
    pub fn from_weight(wt: &[i64]) -> Self {
        let exp: Vec<u32> = wt
            .iter()
            .map(|&w| u32::try_from(w).expect("negative weight has no monomial"))
            .collect();
        Polynomial::monomial(wt.len(), &exp, BigInt::one())
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, exp: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            let key: Vec<u32> = self
                .terms
                .iter()
                .find(|(_, c)| c.is_zero())
                .map(|(e, _)| e.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn plus(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Polynomial) -> Polynomial {
        self.plus(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        let mut out = Polynomial::zero(self.n);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    pub fn times(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n, other.n);
        let mut out = Polynomial::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    /// Applies the variable swap x_i <-> x_{i+1}.
    pub fn swap_vars(&self, i: usize) -> Polynomial {
        assert!(i >= 1 && i < self.n);
        let mut out = Polynomial::zero(self.n);
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            exp.swap(i - 1, i);
            out.add_term(exp, c.clone());
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap_vars(i) == *self)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Homogeneous component of the given total degree.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Exact division by (x_i - x_{i+1}); panics if the division is inexact,
    /// which signals an internal inconsistency upstream.
    fn divide_by_var_diff(&self, i: usize) -> Polynomial {
        assert!(i >= 1 && i < self.n);
        let a = i - 1;
        let b = i;
        // Order with the x_i exponent most significant: the leading term is
        // always divisible by x_i when the division is exact, and each step
        // strictly decreases the leading term.
        let lead = |p: &Polynomial| -> Option<(Vec<u32>, BigInt)> {
            p.terms
                .iter()
                .max_by(|(e1, _), (e2, _)| e1[a].cmp(&e2[a]).then_with(|| e1.cmp(e2)))
                .map(|(e, c)| (e.clone(), c.clone()))
        };
        let mut g = self.clone();
        let mut q = Polynomial::zero(self.n);
        while let Some((exp, c)) = lead(&g) {
            assert!(
                exp[a] > 0,
                "inexact division by x_{i} - x_{}: remainder has leading term {exp:?}",
                i + 1
            );
            let mut qe = exp.clone();
            qe[a] -= 1;
            q.add_term(qe.clone(), c.clone());
            // g -= c * x^qe * (x_i - x_{i+1})
            g.add_term(exp, -c.clone());
            let mut other = qe;
            other[b] += 1;
            g.add_term(other, c);
        }
        q
    }

    /// Divided difference: dd_i(f) = (f - s_i f) / (x_i - x_{i+1}).
    pub fn dd(&self, i: usize) -> Polynomial {
        self.minus(&self.swap_vars(i)).divide_by_var_diff(i)
    }

    /// K-theoretic divided difference: ddK_i(f) = dd_i((1 + x_{i+1}) f).
    pub fn dd_k(&self, i: usize) -> Polynomial {
        let factor = Polynomial::one(self.n).plus(&Polynomial::var(self.n, i + 1));
        factor.times(self).dd(i)
    }

    /// Demazure operator: pi_i(f) = dd_i(x_i f).
    pub fn pi(&self, i: usize) -> Polynomial {
        Polynomial::var(self.n, i).times(self).dd(i)
    }

    /// K-theoretic Demazure operator: piK_i(f) = ddK_i(x_i f).
    pub fn pi_k(&self, i: usize) -> Polynomial {
        Polynomial::var(self.n, i).times(self).dd_k(i)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({ "exp": e, "coeff": c.to_string() }))
            .collect();
        serde_json::json!({ "n": self.n, "terms": terms })
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let mut vars = String::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 1 {
                    vars += &format!("x{}", i + 1);
                } else if k > 1 {
                    vars += &format!("x{}^{}", i + 1, k);
                }
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            if vars.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", vars)?;
            } else {
                write!(f, "{}*{}", mag, vars)?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

fn is_weakly_decreasing(a: &[u32]) -> bool {
    a.windows(2).all(|w| w[0] >= w[1])
}

/// Position of the first/last ascent of a composition, if any.
fn ascent(alpha: &[u32], last: bool) -> Option<usize> {
    let mut found = None;
    for i in 0..alpha.len() - 1 {
        if alpha[i] < alpha[i + 1] {
            found = Some(i + 1);
            if !last {
                break;
            }
        }
    }
    found
}

fn key_like(alpha: &[u32], op: fn(&Polynomial, usize) -> Polynomial, last: bool) -> Polynomial {
    if let Some(i) = ascent(alpha, last) {
        let mut beta = alpha.to_vec();
        beta.swap(i - 1, i);
        op(&key_like(&beta, op, last), i)
    } else {
        let n = alpha.len();
        Polynomial::monomial(n, alpha, BigInt::one())
    }
}

/// Key polynomial of a weak composition, built by applying pi operators to the
/// dominant monomial.
pub fn key_poly(alpha: &[u32]) -> Polynomial {
    key_like(alpha, Polynomial::pi, false)
}

/// Same value computed along a different operator order; used as a
/// cross-check that the recursion is well defined.
pub fn key_poly_alt(alpha: &[u32]) -> Polynomial {
    key_like(alpha, Polynomial::pi, true)
}

/// Lascoux polynomial of a weak composition, via piK operators.
pub fn lascoux_poly(alpha: &[u32]) -> Polynomial {
    key_like(alpha, Polynomial::pi_k, false)
}

pub fn lascoux_poly_alt(alpha: &[u32]) -> Polynomial {
    key_like(alpha, Polynomial::pi_k, true)
}

/// Pads a partition to length n and reverses it, giving the weakly increasing
/// composition whose key/Lascoux polynomial is the symmetric function.
pub fn reversed_partition(lambda: &[u32], n: usize) -> Result<Vec<u32>> {
    if lambda.len() > n {
        return invalid(format!("partition {lambda:?} has more than {n} parts"));
    }
    if !is_weakly_decreasing(lambda) {
        return invalid(format!("{lambda:?} is not a partition"));
    }
    let mut alpha = lambda.to_vec();
    alpha.resize(n, 0);
    alpha.reverse();
    Ok(alpha)
}

/// Symmetric Grothendieck polynomial G_lambda(x_1..x_n), by set-valued
/// tableau enumeration. Must agree with lascoux_poly of the reversed shape.
pub fn grothendieck_g(lambda: &[u32], n: usize) -> Result<Polynomial> {
    crate::tableaux::grothendieck_g_straight(lambda, n)
}

/// Schur polynomial s_lambda(x_1..x_n): the lowest-degree homogeneous
/// component of G_lambda.
pub fn schur(lambda: &[u32], n: usize) -> Result<Polynomial> {
    let g = grothendieck_g(lambda, n)?;
    let d: u32 = lambda.iter().sum();
    Ok(g.homogeneous_part(d))
}

/// Grothendieck polynomial of a permutation, restricted to x_1..x_n: built by
/// descending from the dominant staircase monomial with ddK operators.
pub fn grothendieck_frak_g(w: &Permutation, n: usize) -> Polynomial {
    grothendieck_frak_g_route(w, n, false)
}

pub fn grothendieck_frak_g_route(w: &Permutation, n: usize, last_ascent: bool) -> Polynomial {
    let big_n = w.window_size().max(n);
    fn rec(w: &Permutation, big_n: usize, last: bool) -> Polynomial {
        let ascents = w.right_ascents_below(big_n);
        let pick = if last { ascents.last() } else { ascents.first() };
        match pick {
            None => {
                // w is the longest element of S_N: dominant monomial
                let exp: Vec<u32> = (0..big_n).map(|i| (big_n - 1 - i) as u32).collect();
                Polynomial::monomial(big_n, &exp, BigInt::one())
            }
            Some(&i) => rec(&w.times_simple(i), big_n, last).dd_k(i),
        }
    }
    let full = rec(w, big_n, last_ascent);
    restrict_vars(&full, n)
}

/// Sets x_{n+1} = ... = 0 and truncates the exponent vectors to length n.
pub fn restrict_vars(p: &Polynomial, n: usize) -> Polynomial {
    assert!(n <= p.num_vars());
    let mut out = Polynomial::zero(n);
    for (e, c) in p.terms() {
        if e[n..].iter().all(|&k| k == 0) {
            out.add_term(e[..n].to_vec(), c.clone());
        }
    }
    out
}

/// A finite expansion of a polynomial over an indexed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub basis: String,
    pub coeffs: Vec<(Vec<u32>, BigInt)>,
}

impl Expansion {
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|(_, c)| c.is_positive())
    }

    pub fn coeff(&self, index: &[u32]) -> BigInt {
        self.coeffs
            .iter()
            .find(|(a, _)| a == index)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(a, c)| serde_json::json!({ "index": a, "coeff": c.to_string() }))
            .collect();
        serde_json::json!({
            "basis": self.basis,
            "coeffs": coeffs,
            "positive": self.is_positive(),
        })
    }
}

impl std::fmt::Display for Expansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(a, c)| {
                let idx: Vec<String> = a.iter().map(|x| x.to_string()).collect();
                format!("{}*{}[{}]", c, self.basis, idx.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn strip_trailing_zeros(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Generic subtraction expansion. `pivot_largest` selects the lex-largest
/// (true) or lex-smallest (false) exponent among the minimal-degree terms.
fn expand_by_subtraction(
    f: &Polynomial,
    basis: &str,
    basis_fn: &mut dyn FnMut(&[u32]) -> Result<Polynomial>,
    pivot_largest: bool,
    require_partition: bool,
    max_iter: usize,
) -> Result<Expansion> {
    let n = f.num_vars();
    let mut residual = f.clone();
    let mut coeffs: Vec<(Vec<u32>, BigInt)> = Vec::new();
    let mut iter = 0;
    while !residual.is_zero() {
        iter += 1;
        if iter > max_iter {
            return inconsistent(format!("{basis}-expansion did not terminate"));
        }
        let d = residual.min_degree().unwrap();
        let pick = residual
            .terms()
            .filter(|(e, _)| e.iter().sum::<u32>() == d)
            .map(|(e, c)| (e.clone(), c.clone()));
        let (alpha, c) = if pivot_largest {
            pick.max_by(|a, b| a.0.cmp(&b.0)).unwrap()
        } else {
            pick.min_by(|a, b| a.0.cmp(&b.0)).unwrap()
        };
        if require_partition && !is_weakly_decreasing(&alpha) {
            return inconsistent(format!(
                "{basis}-expansion pivot {alpha:?} is not a partition; input not symmetric?"
            ));
        }
        let b = basis_fn(&alpha)?;
        assert_eq!(b.num_vars(), n);
        residual = residual.minus(&b.scaled(&c));
        coeffs.push((strip_trailing_zeros(alpha), c));
    }
    coeffs.sort();
    // reconstruction check
    let mut back = Polynomial::zero(n);
    for (a, c) in &coeffs {
        let mut idx = a.clone();
        idx.resize(n, 0);
        back = back.plus(&basis_fn(&idx)?.scaled(c));
    }
    if back != *f {
        return inconsistent(format!("{basis}-expansion failed reconstruction"));
    }
    Ok(Expansion { basis: basis.to_string(), coeffs })
}

/// Expands a symmetric polynomial in the stable Grothendieck basis
/// {G_lambda(x_1..x_n)}. Coefficients are integers; errors if the input is
/// not in the span.
pub fn expand_in_g(f: &Polynomial) -> Result<Expansion> {
    if !f.is_symmetric() {
        return invalid("expand_in_g requires a symmetric polynomial".to_string());
    }
    let n = f.num_vars();
    let mut cache: std::collections::HashMap<Vec<u32>, Polynomial> = Default::default();
    let mut basis_fn = |alpha: &[u32]| -> Result<Polynomial> {
        if let Some(p) = cache.get(alpha) {
            return Ok(p.clone());
        }
        let p = lascoux_poly(&reversed_partition(&strip_trailing_zeros(alpha.to_vec()), n)?);
        cache.insert(alpha.to_vec(), p.clone());
        Ok(p)
    };
    expand_by_subtraction(f, "G", &mut basis_fn, true, true, 100_000)
}

/// Expands a symmetric homogeneous-or-not polynomial in Schur polynomials.
pub fn expand_in_schur(f: &Polynomial) -> Result<Expansion> {
    if !f.is_symmetric() {
        return invalid("expand_in_schur requires a symmetric polynomial".to_string());
    }
    let n = f.num_vars();
    let mut basis_fn = |alpha: &[u32]| -> Result<Polynomial> {
        let d: u32 = alpha.iter().sum();
        let rev = reversed_partition(&strip_trailing_zeros(alpha.to_vec()), n)?;
        Ok(key_poly(&rev).homogeneous_part(d))
    };
    expand_by_subtraction(f, "s", &mut basis_fn, true, true, 100_000)
}

/// Expands an arbitrary polynomial in the Lascoux basis. Tries the greedy
/// pivot method first; on failure falls back to an exact linear solve over a
/// bounded dictionary of Lascoux polynomials.
pub fn expand_in_lascoux(f: &Polynomial) -> Result<Expansion> {
    let mut cache: std::collections::HashMap<Vec<u32>, Polynomial> = Default::default();
    let mut basis_fn = move |alpha: &[u32]| -> Result<Polynomial> {
        if let Some(p) = cache.get(alpha) {
            return Ok(p.clone());
        }
        let p = lascoux_poly(alpha);
        cache.insert(alpha.to_vec(), p.clone());
        Ok(p)
    };
    if f.is_zero() {
        return Ok(Expansion { basis: "L".to_string(), coeffs: vec![] });
    }
    let maxexp = f.terms().flat_map(|(e, _)| e.iter().copied()).max().unwrap_or(0);
    let greedy = {
        let mut guarded = |alpha: &[u32]| -> Result<Polynomial> {
            // a pivot growing far beyond the input signals divergence
            if alpha.iter().any(|&a| a > maxexp + 2) {
                return inconsistent("lascoux pivot out of bounds".to_string());
            }
            basis_fn(alpha)
        };
        expand_by_subtraction(f, "L", &mut guarded, false, false, 20_000)
    };
    match greedy {
        Ok(exp) => Ok(exp),
        Err(_) => lascoux_solve(f, maxexp, &mut basis_fn).or_else(|_| {
            // retry once with wider dictionary bounds
            lascoux_solve(f, maxexp + 2, &mut basis_fn)
        }),
    }
    .map(|mut e| {
        e.coeffs.retain(|(_, c)| !c.is_zero());
        e
    })
}

/// Exact linear solve of f = sum c_alpha L_alpha over all alpha with entries
/// bounded by `maxexp` and |alpha| <= deg f.
fn lascoux_solve(
    f: &Polynomial,
    maxexp: u32,
    basis_fn: &mut dyn FnMut(&[u32]) -> Result<Polynomial>,
) -> Result<Expansion> {
    let n = f.num_vars();
    let maxdeg = f.total_degree().unwrap_or(0);
    // dictionary indices
    let mut dict: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for a in &dict {
            let used: u32 = a.iter().sum();
            for v in 0..=maxexp.min(maxdeg - used.min(maxdeg)) {
                let mut b = a.clone();
                b.push(v);
                next.push(b);
            }
        }
        dict = next;
    }
    dict.retain(|a| a.iter().sum::<u32>() <= maxdeg);
    dict.sort_by_key(|a| (a.iter().sum::<u32>(), a.clone()));
    let polys: Vec<Polynomial> =
        dict.iter().map(|a| basis_fn(a)).collect::<Result<_>>()?;
    // assemble monomial rows
    let mut mono_index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for p in polys.iter().chain(std::iter::once(f)) {
        for (e, _) in p.terms() {
            let next = mono_index.len();
            mono_index.entry(e.clone()).or_insert(next);
        }
    }
    let rows = mono_index.len();
    let cols = dict.len();
    let mut mat = vec![vec![BigRational::zero(); cols + 1]; rows];
    for (j, p) in polys.iter().enumerate() {
        for (e, c) in p.terms() {
            mat[mono_index[e]][j] = BigRational::from(c.clone());
        }
    }
    for (e, c) in f.terms() {
        mat[mono_index[e]][cols] = BigRational::from(c.clone());
    }
    // Gaussian elimination
    let mut pivot_row_of_col = vec![None; cols];
    let mut r = 0;
    for j in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&k| !mat[k][j].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = mat[r][j].recip();
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        for k in 0..rows {
            if k != r && !mat[k][j].is_zero() {
                let factor = mat[k][j].clone();
                for jj in 0..=cols {
                    let delta = &factor * &mat[r][jj];
                    mat[k][jj] -= delta;
                }
            }
        }
        pivot_row_of_col[j] = Some(r);
        r += 1;
    }
    // consistency: rows without pivots must have zero rhs
    for k in r..rows {
        if !mat[k][cols].is_zero() {
            return inconsistent("polynomial is not in the Lascoux dictionary span".to_string());
        }
    }
    let mut coeffs = Vec::new();
    for (j, a) in dict.iter().enumerate() {
        let v = match pivot_row_of_col[j] {
            Some(row) => mat[row][cols].clone(),
            None => BigRational::zero(),
        };
        if !v.is_zero() {
            if !v.is_integer() {
                return inconsistent("non-integral Lascoux coefficient".to_string());
            }
            coeffs.push((strip_trailing_zeros(a.clone()), v.to_integer()));
        }
    }
    coeffs.sort();
    // reconstruction check
    let mut back = Polynomial::zero(n);
    for (a, c) in &coeffs {
        let mut idx = a.clone();
        idx.resize(n, 0);
        back = back.plus(&basis_fn(&idx)?.scaled(c));
    }
    if back != *f {
        return inconsistent("Lascoux solve failed reconstruction".to_string());
    }
    Ok(Expansion { basis: "L".to_string(), coeffs })
}
