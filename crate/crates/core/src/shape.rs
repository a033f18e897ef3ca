//! Shapes, semistandard tableaux, and the row bound sum.
//!
//! Boxes are transpose-indexed: `T_j(i)` is the value in column `j`, row `i`.
//! Enumeration of the row bound set `S_λ(β)` walks the boxes column by
//! column, leftmost column first and top to bottom within a column, so
//! tableaux come out in lexicographic order of their column reading words.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rtuple::{RContext, RTuple};

/// A partition `λ_1 ≥ … ≥ λ_n ≥ 0` with its column lengths and `R_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    parts: Vec<usize>,
    cols: Vec<usize>,
    ctx: RContext,
}

impl Shape {
    pub fn new(n: usize, parts: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be positive"));
        }
        if parts.len() != n {
            return Err(Error::domain(format!(
                "shape has {} parts, expected {n}",
                parts.len()
            )));
        }
        if let Some(p) = parts.iter().find(|&&p| p < 0) {
            return Err(Error::domain(format!("negative part {p}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain("parts must be weakly decreasing"));
        }
        let parts: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
        let cols: Vec<usize> = (1..=parts[0])
            .map(|j| parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        let mut dividers: Vec<usize> = cols.iter().copied().filter(|&c| c < n).collect();
        dividers.sort_unstable();
        dividers.dedup();
        let ctx = RContext::new(n, &dividers)?;
        Ok(Shape { parts, cols, ctx })
    }

    /// Parses `"2,1,0"`; `n` is the number of parts.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::domain(format!("malformed part {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Shape::new(parts.len(), &parts)
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i`, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// Column lengths `ζ_1 ≥ … ≥ ζ_{λ_1}`.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// `R_λ` as a divider context.
    pub fn ctx(&self) -> &RContext {
        &self.ctx
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonempty rows, `ζ_1` (zero for the empty shape).
    pub fn nonempty_rows(&self) -> usize {
        self.cols.first().copied().unwrap_or(0)
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Reads `entries` as a λ-tuple, that is, against `R_λ`.
    pub fn tuple(&self, entries: Vec<usize>) -> Result<RTuple> {
        RTuple::new(self.ctx.clone(), entries)
    }

    /// Re-reads `beta` against `R_λ`.
    pub fn adopt(&self, beta: &RTuple) -> Result<RTuple> {
        beta.with_context(self.ctx.clone())
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct ShapeJson {
    n: usize,
    parts: Vec<i64>,
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ShapeJson {
            n: self.n(),
            parts: self.parts.iter().map(|&p| p as i64).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ShapeJson::deserialize(d)?;
        Shape::new(raw.n, &raw.parts).map_err(serde::de::Error::custom)
    }
}

/// A semistandard filling, stored column by column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Shape,
    columns: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates shape, range `[n]`, strict columns and weak rows.
    pub fn from_columns(shape: &Shape, columns: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = columns.iter().map(Vec::len).collect();
        if lens != shape.cols() {
            return Err(Error::domain("column lengths do not match the shape"));
        }
        let n = shape.n();
        let t = Tableau {
            shape: shape.clone(),
            columns,
        };
        for (j, col) in t.columns.iter().enumerate() {
            if col.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::domain(format!(
                    "column {} has a value outside [1, {n}]",
                    j + 1
                )));
            }
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::domain(format!(
                    "column {} is not strictly increasing",
                    j + 1
                )));
            }
            if j > 0 && col.iter().zip(&t.columns[j - 1]).any(|(r, l)| r < l) {
                return Err(Error::domain(format!(
                    "a row decreases into column {}",
                    j + 1
                )));
            }
        }
        Ok(t)
    }

    pub fn from_rows(shape: &Shape, rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() != shape.n() || rows.iter().zip(shape.parts()).any(|(r, &p)| r.len() != p) {
            return Err(Error::domain("row lengths do not match the shape"));
        }
        let columns = shape
            .cols()
            .iter()
            .enumerate()
            .map(|(j, &len)| (0..len).map(|i| rows[i][j]).collect())
            .collect();
        Tableau::from_columns(shape, columns)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// `T_j(i)`, 1-based.
    pub fn value(&self, j: usize, i: usize) -> usize {
        self.columns[j - 1][i - 1]
    }

    /// Row `i` (1-based), read west to east.
    pub fn row(&self, i: usize) -> Vec<usize> {
        (1..=self.shape.part(i)).map(|j| self.value(j, i)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.shape.n()).map(|i| self.row(i)).collect()
    }

    /// `Θ(T)`: the number of occurrences of each value.
    pub fn content(&self) -> Vec<u32> {
        let mut theta = vec![0; self.shape.n()];
        for &v in self.columns.iter().flatten() {
            theta[v - 1] += 1;
        }
        theta
    }

    pub fn monomial(&self) -> MultiPoly {
        MultiPoly::monomial(self.content(), 1)
    }

    /// Whether every row `i` is bounded by `β_i`.
    pub fn is_bounded_by(&self, beta: &RTuple) -> bool {
        self.columns
            .iter()
            .all(|col| col.iter().enumerate().all(|(i, &v)| v <= beta.get(i + 1)))
    }
}

impl fmt::Display for Tableau {
    /// One row per line; empty rows are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .into_iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join("\n"))
    }
}

/// Iterator over `S_λ(β)`, produced by [`enumerate_tableaux`].
pub struct Tableaux<'a> {
    shape: &'a Shape,
    /// (column, row) of each box in column reading order, 0-based
    cells: Vec<(usize, usize)>,
    /// per-box cap from the row bounds and strictness below it
    caps: Vec<usize>,
    vals: Vec<usize>,
    /// box index of each (column, row), for neighbour lookups
    index: Vec<Vec<usize>>,
    state: IterState,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum IterState {
    Start,
    Running,
    Done,
}

impl<'a> Tableaux<'a> {
    fn lower(&self, p: usize) -> usize {
        let (j, i) = self.cells[p];
        let above = if i > 0 { self.vals[p - 1] + 1 } else { 1 };
        let left = if j > 0 {
            self.vals[self.index[j - 1][i]]
        } else {
            1
        };
        above.max(left)
    }

    /// Fills boxes `from..` with their least values. Returns the first box
    /// that could not be filled.
    fn fill(&mut self, from: usize) -> Option<usize> {
        for q in from..self.cells.len() {
            let lo = self.lower(q);
            if lo > self.caps[q] {
                return Some(q);
            }
            self.vals[q] = lo;
        }
        None
    }

    /// Advances box `p` and refills everything after it. Returns false once
    /// the search space is exhausted.
    fn advance(&mut self, mut p: Option<usize>) -> bool {
        while let Some(q) = p {
            self.vals[q] += 1;
            if self.vals[q] > self.caps[q] {
                p = q.checked_sub(1);
                continue;
            }
            match self.fill(q + 1) {
                None => return true,
                Some(bad) => p = Some(bad - 1),
            }
        }
        false
    }

    fn snapshot(&self) -> Tableau {
        let mut columns: Vec<Vec<usize>> = self
            .shape
            .cols()
            .iter()
            .map(|&l| Vec::with_capacity(l))
            .collect();
        for (&(j, _), &v) in self.cells.iter().zip(&self.vals) {
            columns[j].push(v);
        }
        Tableau {
            shape: self.shape.clone(),
            columns,
        }
    }
}

impl Iterator for Tableaux<'_> {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        let found = match self.state {
            IterState::Done => false,
            IterState::Start => match self.fill(0) {
                None => true,
                Some(bad) => self.advance(bad.checked_sub(1)),
            },
            IterState::Running => self.advance(self.cells.len().checked_sub(1)),
        };
        if found {
            self.state = IterState::Running;
            Some(self.snapshot())
        } else {
            self.state = IterState::Done;
            None
        }
    }
}

/// Streams the row bound set `S_λ(β)`: the tableaux of shape `λ` with every
/// value in row `i` at most `β_i`. Empty exactly when `β` is not upper.
pub fn enumerate_tableaux<'a>(shape: &'a Shape, beta: &RTuple) -> Tableaux<'a> {
    assert_eq!(shape.n(), beta.n(), "shape and tuple lengths differ");
    let mut cells = Vec::with_capacity(shape.size());
    let mut caps = Vec::with_capacity(shape.size());
    let mut index = Vec::with_capacity(shape.cols().len());
    for (j, &len) in shape.cols().iter().enumerate() {
        let col_caps = column_caps(beta, len);
        let mut col_index = Vec::with_capacity(len);
        for (i, cap) in col_caps.into_iter().enumerate() {
            col_index.push(cells.len());
            cells.push((j, i));
            caps.push(cap);
        }
        index.push(col_index);
    }
    Tableaux {
        shape,
        vals: vec![0; cells.len()],
        cells,
        caps,
        index,
        // rows of length zero still carry the bound β_i ≥ i
        state: if beta.is_upper() {
            IterState::Start
        } else {
            IterState::Done
        },
    }
}

/// Largest value each box of a column of height `len` can hold:
/// `min_{i ≤ i' ≤ len} (β_{i'} - (i' - i))`, saturating at zero.
fn column_caps(beta: &RTuple, len: usize) -> Vec<usize> {
    let mut caps = vec![0; len];
    let mut run = usize::MAX;
    for i in (0..len).rev() {
        run = run.saturating_sub(1).min(beta.get(i + 1));
        caps[i] = run;
    }
    caps
}

/// `s_λ(β; x)`: the sum of `x^{Θ(T)}` over `S_λ(β)`. Zero when the set is
/// empty and one for the empty shape.
pub fn row_bound_sum(shape: &Shape, beta: &RTuple) -> MultiPoly {
    let mut sum = MultiPoly::zero(shape.n());
    for t in enumerate_tableaux(shape, beta) {
        sum.add_term(t.content(), BigInt::one());
    }
    sum
}

/// The unique entrywise-maximal element of `S_λ(β)`.
pub fn max_tableau(shape: &Shape, beta: &RTuple) -> Result<Tableau> {
    beta.require_upper()?;
    let columns = shape
        .cols()
        .iter()
        .map(|&len| column_caps(beta, len))
        .collect();
    Ok(Tableau {
        shape: shape.clone(),
        columns,
    })
}
