//! Demazure characters (key polynomials) via isobaric divided differences,
//! and their match against determinants of gapless tuples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::equivalence::{enumerate_gapless, parabolic_catalan};
use crate::error::{Error, Result};
use crate::gv::gv_matrix;
use crate::paths::{is_permutation, permutations};
use crate::poly::MultiPoly;
use crate::rtuple::RTuple;
use crate::shape::Shape;

/// A permutation of `[n]` in one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        if one_line.is_empty() || !is_permutation(&one_line) {
            return Err(Error::domain(format!(
                "{one_line:?} is not a permutation of [n]"
            )));
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `(n, n-1, …, 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v = text
            .split(',')
            .map(|t| {
                t.trim().parse().map_err(|_| {
                    Error::domain(format!("malformed permutation entry {:?}", t.trim()))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        Permutation::new(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count()
    }

    /// Increasing on each carrel of `R_λ`: a minimal coset representative
    /// for the stabiliser of `λ`.
    pub fn is_lambda_permutation(&self, shape: &Shape) -> bool {
        self.n() == shape.n()
            && shape
                .ctx()
                .carrels()
                .all(|c| c.clone().skip(1).all(|i| self.0[i - 2] < self.0[i - 1]))
    }

    /// A reduced word `[i_1, …, i_k]` with `π = s_{i_1} ⋯ s_{i_k}`, found by
    /// repeatedly swapping away the leftmost descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..p.len()).find(|&i| p[i - 1] > p[i]) {
            p.swap(i - 1, i);
            word.push(i);
        }
        word.reverse();
        word
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

/// The isobaric divided difference
/// `π_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})`.
pub fn divided_difference(i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.n_vars();
    if i == 0 || i >= n {
        return Err(Error::domain(format!(
            "divided difference index {i} outside [1, {}]",
            n - 1
        )));
    }
    let xi = MultiPoly::var(n, i);
    let xj = MultiPoly::var(n, i + 1);
    let num = &(&xi * f) - &(&xj * &f.swap_vars(i, i + 1));
    num.div_by_difference(i, i + 1)
}

/// Applies `π_{i_1} ∘ ⋯ ∘ π_{i_k}` to `f`, rightmost operator first.
pub fn apply_word(word: &[usize], f: &MultiPoly) -> Result<MultiPoly> {
    word.iter()
        .rev()
        .try_fold(f.clone(), |acc, &i| divided_difference(i, &acc))
}

/// `d_λ(π; x)` for a λ-permutation `π`.
pub fn demazure_char(shape: &Shape, perm: &Permutation) -> Result<MultiPoly> {
    if !perm.is_lambda_permutation(shape) {
        return Err(Error::domain(format!(
            "{perm} is not a λ-permutation for shape {shape}"
        )));
    }
    let top = MultiPoly::monomial(shape.parts().iter().map(|&p| p as u32).collect(), 1);
    apply_word(&perm.reduced_word(), &top)
}

/// All λ-permutations, lexicographically.
pub fn lambda_permutations(shape: &Shape) -> Vec<Permutation> {
    permutations(shape.n())
        .into_iter()
        .map(Permutation)
        .filter(|p| p.is_lambda_permutation(shape))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Match {
    pub gamma: RTuple,
    pub pi_one_line: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    /// One entry per (gapless tuple, λ-permutation) pair with equal
    /// polynomials.
    pub matched: Vec<Match>,
    pub unmatched_gammas: Vec<RTuple>,
    /// Number of gapless tuples whose determinant is a Demazure character.
    pub count: usize,
    pub parabolic_catalan: u64,
    pub lambda_permutations: usize,
}

impl MatchReport {
    /// Every gapless determinant is a Demazure character, each matches
    /// exactly one λ-permutation, and the count is `C_n^λ`.
    pub fn is_complete(&self) -> bool {
        self.unmatched_gammas.is_empty()
            && self.matched.len() == self.count
            && self.count as u64 == self.parabolic_catalan
    }
}

/// Compares the determinants of all gapless λ-tuples with the Demazure
/// characters of all λ-permutations.
pub fn match_gapless_to_demazure(shape: &Shape) -> Result<MatchReport> {
    let perms = lambda_permutations(shape);
    let chars = perms
        .iter()
        .map(|p| Ok((p.clone(), demazure_char(shape, p)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    let mut count = 0;
    for gamma in enumerate_gapless(shape) {
        let det = gv_matrix(shape, &gamma)?.determinant();
        let hits: Vec<_> = chars.iter().filter(|(_, d)| *d == det).collect();
        if hits.is_empty() {
            unmatched.push(gamma);
            continue;
        }
        count += 1;
        for (p, _) in hits {
            matched.push(Match {
                gamma: gamma.clone(),
                pi_one_line: p.clone(),
            });
        }
    }
    Ok(MatchReport {
        matched,
        unmatched_gammas: unmatched,
        count,
        parabolic_catalan: parabolic_catalan(shape),
        lambda_permutations: perms.len(),
    })
}
