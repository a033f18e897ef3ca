//! Sparse multivariate polynomials over the integers, complete homogeneous
//! polynomials on variable ranges, and exact determinants.
//!
//! Exponent vectors are dense and fixed-length; coefficients are
//! arbitrary-precision and never stored when zero. Terms iterate in
//! descending lexicographic order of their exponent vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n_vars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize) -> Self {
        MultiPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, BigInt::one())
    }

    pub fn constant(n_vars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; n_vars], c)
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n_vars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n_vars, "variable x{i} out of range");
        let mut e = vec![0; n_vars];
        e[i - 1] = 1;
        Self::monomial(e, 1)
    }

    pub fn monomial(exps: Exponents, c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero(exps.len());
        p.add_term(exps, c.into());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I>(n_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = MultiPoly::zero(n_vars);
        for (e, c) in terms {
            if e.len() != n_vars {
                return Err(Error::domain(format!(
                    "exponent vector of length {} in a polynomial over {n_vars} variables",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: BigInt) {
        debug_assert_eq!(exps.len(), self.n_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.iter().all(|&d| d == 0) && c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// `Some(d)` when every term has total degree `d`; `None` for the zero
    /// polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::domain(format!(
                "polynomials over {} and {} variables",
                self.n_vars, other.n_vars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.n_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(self.n_vars);
        }
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn eval(&self, point: &[i64]) -> Result<BigInt> {
        if point.len() != self.n_vars {
            return Err(Error::domain(format!(
                "evaluation point has {} coordinates, expected {}",
                point.len(),
                self.n_vars
            )));
        }
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (&x, &d) in point.iter().zip(e) {
                t *= BigInt::from(x).pow(d);
            }
            total += t;
        }
        Ok(total)
    }

    /// Exchanges the variables `x_i` and `x_j` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n_vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, j - 1);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Exact quotient by `x_i - x_j`; fails if the division leaves a
    /// remainder.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<MultiPoly> {
        assert!(i != j, "dividing by x{i} - x{i}");
        let (a, b) = (i - 1, j - 1);
        let mut rest = self.clone();
        let mut quotient = MultiPoly::zero(self.n_vars);
        // Peel off the term of largest x_i-degree; each step strictly lowers
        // that degree on the term it replaces.
        while let Some((e, c)) = rest
            .terms
            .iter()
            .max_by_key(|(e, _)| e[a])
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if e[a] == 0 {
                return Err(Error::Inconsistent(format!(
                    "division by x{i} - x{j} leaves a remainder"
                )));
            }
            let mut q = e.clone();
            q[a] -= 1;
            let mut shifted = q.clone();
            shifted[b] += 1;
            rest.add_term(e, -c.clone());
            rest.add_term(shifted, c.clone());
            quotient.add_term(q, c);
        }
        Ok(quotient)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for MultiPoly {
    /// Human form, e.g. `x1^2*x2 + x1*x2^2 - x3^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(v, &d)| match d {
                    1 => format!("x{}", v + 1),
                    _ => format!("x{}^{d}", v + 1),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Exponents,
    coeff: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n_vars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(e, c)| TermJson {
                exps: e.clone(),
                // machine-sized coefficients as numbers, larger ones as strings
                coeff: match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                },
            })
            .collect();
        PolyJson {
            n_vars: self.n_vars,
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt = match &t.coeff {
                serde_json::Value::Number(v) => v
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("coefficient is not an integer"))?,
                serde_json::Value::String(s) => s
                    .parse()
                    .map_err(|_| D::Error::custom("malformed coefficient"))?,
                _ => return Err(D::Error::custom("coefficient must be a number or string")),
            };
            terms.push((t.exps, c));
        }
        MultiPoly::from_terms(raw.n_vars, terms).map_err(D::Error::custom)
    }
}

/// `h_u(i, k; x)`: the sum of `x_{t_1} ⋯ x_{t_u}` over
/// `i ≤ t_1 ≤ … ≤ t_u ≤ k`. Zero for negative `u`, one for `u = 0`.
pub fn complete_homogeneous(u: i64, i: usize, k: usize, n_vars: usize) -> Result<MultiPoly> {
    if i == 0 || i > k || k > n_vars {
        return Err(Error::domain(format!(
            "h_u(i, k) needs 1 <= i <= k <= {n_vars}, got i = {i}, k = {k}"
        )));
    }
    Ok(h_unchecked(u, i, k, n_vars))
}

/// Weight sum of all lattice paths making `u` easterly steps from depth `i`
/// down to depth `k`; equal to `h_u(i, k)` when `i ≤ k` and zero otherwise.
pub fn path_weight_sum(u: i64, i: usize, k: usize, n_vars: usize) -> MultiPoly {
    if i > k {
        return MultiPoly::zero(n_vars);
    }
    h_unchecked(u, i, k, n_vars)
}

fn h_unchecked(u: i64, i: usize, k: usize, n_vars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n_vars);
    if u < 0 {
        return out;
    }
    let mut exps = vec![0u32; n_vars];
    fill_multisets(u as u32, i - 1, k - 1, &mut exps, &mut out);
    out
}

fn fill_multisets(left: u32, var: usize, last: usize, exps: &mut Exponents, out: &mut MultiPoly) {
    if var == last {
        exps[var] = left;
        out.add_term(exps.clone(), BigInt::one());
        exps[var] = 0;
        return;
    }
    for d in 0..=left {
        exps[var] = d;
        fill_multisets(left - d, var + 1, last, exps, out);
    }
    exps[var] = 0;
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc
}

/// A square matrix of polynomials over a common set of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n_vars: usize,
    rows: Vec<Vec<MultiPoly>>,
}

impl PolyMatrix {
    pub fn new(n_vars: usize, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let d = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(Error::domain(format!(
                    "row {} has {} entries in a {d}x{d} matrix",
                    r + 1,
                    row.len()
                )));
            }
            if let Some(p) = row.iter().find(|p| p.n_vars() != n_vars) {
                return Err(Error::domain(format!(
                    "entry over {} variables in a matrix over {n_vars}",
                    p.n_vars()
                )));
            }
        }
        Ok(PolyMatrix { n_vars, rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.rows
    }

    /// Total number of stored terms over all entries.
    pub fn term_count(&self) -> usize {
        self.rows.iter().flatten().map(MultiPoly::term_count).sum()
    }

    /// The upper-left `p × p` submatrix.
    pub fn leading_minor(&self, p: usize) -> PolyMatrix {
        assert!(p <= self.dim());
        PolyMatrix {
            n_vars: self.n_vars,
            rows: self.rows[..p].iter().map(|r| r[..p].to_vec()).collect(),
        }
    }

    /// Exact determinant by Laplace expansion along rows, memoised on the
    /// set of remaining columns: `O(2^d · d)` polynomial products.
    pub fn determinant(&self) -> MultiPoly {
        let d = self.dim();
        assert!(d < usize::BITS as usize, "matrix too large");
        let size = 1usize << d;
        // minors[mask]: determinant of the bottom |mask| rows on columns `mask`
        let mut minors: Vec<MultiPoly> = Vec::with_capacity(size);
        minors.push(MultiPoly::one(self.n_vars));
        for mask in 1..size {
            let row = &self.rows[d - mask.count_ones() as usize];
            let mut acc = MultiPoly::zero(self.n_vars);
            let mut seen = 0;
            for c in 0..d {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let rest = &minors[mask & !(1 << c)];
                if !row[c].is_zero() && !rest.is_zero() {
                    let term = &row[c] * rest;
                    acc = if seen % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                seen += 1;
            }
            minors.push(acc);
        }
        minors.pop().unwrap()
    }
}
