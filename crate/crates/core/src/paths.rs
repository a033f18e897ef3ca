//! The lattice path model behind the determinant.
//!
//! Points are `(longitude, depth)`: longitude grows to the east, depth to the
//! south. Component `m` of an n-path starts at `(n - m, m)`; terminal `t` of
//! the pair `(λ, β)` sits at `(λ_t + n - t, β_t)`. A path is stored as the
//! depths of its easterly steps plus its final depth; the weight of a path
//! is `∏ x_{depth}` over its easterly steps.

use std::collections::HashMap;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rtuple::RTuple;
use crate::shape::{Shape, Tableau};

/// Default largest `n` for the brute-force nonpermutability search.
pub const DEFAULT_BRUTE_CAP: usize = 6;

pub type Point = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Terminal {
    pub longitude: usize,
    pub depth: usize,
    pub origin_index: usize,
}

impl Terminal {
    pub fn point(&self) -> Point {
        (self.longitude, self.depth)
    }
}

/// The terminals of `(λ, β)` in native order.
pub fn terminals(shape: &Shape, beta: &RTuple) -> Vec<Terminal> {
    let n = shape.n();
    (1..=n)
        .map(|i| Terminal {
            longitude: shape.part(i) + n - i,
            depth: beta.get(i),
            origin_index: i,
        })
        .collect()
}

/// Source of component `m` (1-based) in an n-path.
pub fn source(n: usize, m: usize) -> Point {
    (n - m, m)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    pub start: Point,
    pub east_depths: Vec<usize>,
    pub end_depth: usize,
}

impl LatticePath {
    pub fn new(start: Point, east_depths: Vec<usize>, end_depth: usize) -> Result<Self> {
        let path = LatticePath {
            start,
            east_depths,
            end_depth,
        };
        if !path.is_monotone() {
            return Err(Error::domain(format!(
                "path from {start:?} is not an east/south path ending at depth {end_depth}"
            )));
        }
        Ok(path)
    }

    fn is_monotone(&self) -> bool {
        let mut prev = self.start.1;
        self.east_depths
            .iter()
            .chain(std::iter::once(&self.end_depth))
            .all(|&d| {
                let ok = d >= prev;
                prev = d;
                ok
            })
    }

    pub fn end(&self) -> Point {
        (self.start.0 + self.east_depths.len(), self.end_depth)
    }

    /// Depth at which the path arrives on its final longitude.
    pub fn arrival_depth(&self) -> usize {
        self.east_depths.last().copied().unwrap_or(self.start.1)
    }

    /// Every lattice point the path visits, west to east.
    pub fn points(&self) -> Vec<Point> {
        let mut pts = Vec::new();
        let mut depth = self.start.1;
        let depths = self
            .east_depths
            .iter()
            .chain(std::iter::once(&self.end_depth));
        for (lon, &d) in (self.start.0..).zip(depths) {
            pts.extend((depth..=d).map(|y| (lon, y)));
            depth = d;
        }
        pts
    }

    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut e = vec![0; n];
        for &d in &self.east_depths {
            e[d - 1] += 1;
        }
        e
    }
}

/// An n-path: components `1..=n` with component `m` sinking at terminal
/// `sinks[m - 1]` (the one-line form of the sink permutation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NPath {
    pub components: Vec<LatticePath>,
    pub sinks: Vec<usize>,
}

impl NPath {
    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn has_native_sinks(&self) -> bool {
        self.sinks.iter().enumerate().all(|(k, &t)| t == k + 1)
    }

    /// No two components share a lattice point.
    pub fn is_disjoint(&self) -> bool {
        let mut owner: HashMap<Point, usize> = HashMap::new();
        for (m, c) in self.components.iter().enumerate() {
            for p in c.points() {
                if let Some(&o) = owner.get(&p) {
                    if o != m {
                        return false;
                    }
                }
                owner.insert(p, m);
            }
        }
        true
    }

    pub fn content(&self) -> Vec<u32> {
        let n = self.n();
        let mut e = vec![0; n];
        for c in &self.components {
            for (a, b) in e.iter_mut().zip(c.content(n)) {
                *a += b;
            }
        }
        e
    }

    pub fn weight(&self) -> MultiPoly {
        MultiPoly::monomial(self.content(), 1)
    }

    /// Checks sources, sinks against the terminals of `(λ, β)`, monotonicity,
    /// the sink permutation, and disjointness.
    pub fn validate(&self, shape: &Shape, beta: &RTuple) -> Result<()> {
        let n = shape.n();
        if self.components.len() != n || self.sinks.len() != n {
            return Err(Error::domain(format!(
                "an n-path for n = {n} needs {n} components"
            )));
        }
        if !is_permutation(&self.sinks) {
            return Err(Error::domain("sinks do not form a permutation"));
        }
        let terms = terminals(shape, beta);
        for (k, c) in self.components.iter().enumerate() {
            let m = k + 1;
            if c.start != source(n, m) {
                return Err(Error::domain(format!(
                    "component {m} does not start at its source"
                )));
            }
            if !c.is_monotone() {
                return Err(Error::domain(format!(
                    "component {m} is not an east/south path"
                )));
            }
            if c.end() != terms[self.sinks[k] - 1].point() {
                return Err(Error::domain(format!(
                    "component {m} does not end at terminal {}",
                    self.sinks[k]
                )));
            }
        }
        if !self.is_disjoint() {
            return Err(Error::domain("components intersect"));
        }
        Ok(())
    }
}

pub(crate) fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&v| v >= 1 && v <= p.len() && !std::mem::replace(&mut seen[v - 1], true))
}

struct Search<'a, F> {
    n: usize,
    height: usize,
    grid: Vec<bool>,
    /// component that owns each source or sink point, if any
    reserved: HashMap<Point, usize>,
    sinks: Vec<Point>,
    perm: &'a [usize],
    built: Vec<LatticePath>,
    visit: F,
}

impl<F: FnMut(&NPath) -> ControlFlow<()>> Search<'_, F> {
    fn cell(&self, p: Point) -> usize {
        p.0 * self.height + p.1
    }

    fn free_for(&self, p: Point, m: usize) -> bool {
        !self.grid[self.cell(p)] && self.reserved.get(&p).is_none_or(|&o| o == m)
    }

    fn place(&mut self, m: usize) -> ControlFlow<()> {
        if m == self.n {
            let np = NPath {
                components: self.built.clone(),
                sinks: self.perm.to_vec(),
            };
            return (self.visit)(&np);
        }
        let start = source(self.n, m + 1);
        if !self.free_for(start, m) {
            return ControlFlow::Continue(());
        }
        let c = self.cell(start);
        self.grid[c] = true;
        let mut east = Vec::new();
        let flow = self.walk(m, start, &mut east);
        self.grid[c] = false;
        flow
    }

    fn walk(&mut self, m: usize, at: Point, east: &mut Vec<usize>) -> ControlFlow<()> {
        let sink = self.sinks[m];
        if at == sink {
            self.built.push(LatticePath {
                start: source(self.n, m + 1),
                east_depths: east.clone(),
                end_depth: sink.1,
            });
            let flow = self.place(m + 1);
            self.built.pop();
            return flow;
        }
        if at.0 < sink.0 {
            let next = (at.0 + 1, at.1);
            if self.free_for(next, m) {
                let c = self.cell(next);
                self.grid[c] = true;
                east.push(at.1);
                let flow = self.walk(m, next, east);
                east.pop();
                self.grid[c] = false;
                flow?;
            }
        }
        if at.1 < sink.1 {
            let next = (at.0, at.1 + 1);
            if self.free_for(next, m) {
                let c = self.cell(next);
                self.grid[c] = true;
                let flow = self.walk(m, next, east);
                self.grid[c] = false;
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Visits every disjoint n-path whose component `m` sinks at terminal
/// `perm[m - 1]`. The visitor may stop the search early.
pub fn for_each_disjoint<F>(shape: &Shape, beta: &RTuple, perm: &[usize], visit: F)
where
    F: FnMut(&NPath) -> ControlFlow<()>,
{
    let n = shape.n();
    assert_eq!(beta.n(), n, "shape and tuple lengths differ");
    assert!(
        is_permutation(perm) && perm.len() == n,
        "not a permutation of [n]"
    );
    let terms = terminals(shape, beta);
    let sinks: Vec<Point> = perm.iter().map(|&t| terms[t - 1].point()).collect();
    let mut reserved = HashMap::new();
    for (m, &sink) in sinks.iter().enumerate() {
        let src = source(n, m + 1);
        if sink.0 < src.0 || sink.1 < src.1 {
            return;
        }
        for p in [src, sink] {
            if let Some(&o) = reserved.get(&p) {
                if o != m {
                    return;
                }
            }
            reserved.insert(p, m);
        }
    }
    let width = shape.part(1) + n;
    let height = n + 1;
    let mut search = Search {
        n,
        height,
        grid: vec![false; width * height],
        reserved,
        sinks,
        perm,
        built: Vec::with_capacity(n),
        visit,
    };
    let _ = search.place(0);
}

/// `LD_λ(β; π)`: all disjoint n-paths with sinks `π.(λ, β)`.
pub fn enumerate_disjoint(shape: &Shape, beta: &RTuple, perm: &[usize]) -> Vec<NPath> {
    let mut out = Vec::new();
    for_each_disjoint(shape, beta, perm, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    });
    out
}

/// First disjoint n-path for the sink permutation, if any.
pub fn find_disjoint(shape: &Shape, beta: &RTuple, perm: &[usize]) -> Option<NPath> {
    let mut found = None;
    for_each_disjoint(shape, beta, perm, |p| {
        found = Some(p.clone());
        ControlFlow::Break(())
    });
    found
}

pub fn identity(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// A disjoint n-path with nontrivially permuted sinks, found by search.
pub fn find_permuted(shape: &Shape, beta: &RTuple, cap: usize) -> Result<Option<NPath>> {
    beta.require_upper()?;
    let n = shape.n();
    if n > cap {
        return Err(Error::OverCap { n, cap });
    }
    let id = identity(n);
    Ok(permutations(n)
        .into_par_iter()
        .filter(|p| *p != id)
        .find_map_any(|p| find_disjoint(shape, beta, &p)))
}

/// Brute-force nonpermutability: no nontrivial sink permutation admits a
/// disjoint n-path. Refuses `n` above `cap`.
pub fn is_nonpermutable_brute(shape: &Shape, beta: &RTuple, cap: usize) -> Result<bool> {
    Ok(find_permuted(shape, beta, cap)?.is_none())
}

/// The recorded tableau of a disjoint n-path with native sinks: the
/// easterly-step depths of component `m` become row `m`.
pub fn path_to_tableau(shape: &Shape, path: &NPath) -> Result<Tableau> {
    if path.n() != shape.n() || !path.has_native_sinks() {
        return Err(Error::domain("recording needs an n-path with native sinks"));
    }
    if !path.is_disjoint() {
        return Err(Error::domain("components intersect"));
    }
    let rows: Vec<Vec<usize>> = path
        .components
        .iter()
        .map(|c| c.east_depths.clone())
        .collect();
    Tableau::from_rows(shape, &rows)
}

/// Inverse of [`path_to_tableau`] for `T ∈ S_λ(β)`.
pub fn tableau_to_path(tableau: &Tableau, beta: &RTuple) -> Result<NPath> {
    let shape = tableau.shape();
    let n = shape.n();
    beta.require_upper()?;
    if !tableau.is_bounded_by(beta) {
        return Err(Error::domain("tableau exceeds its row bounds"));
    }
    let components = (1..=n)
        .map(|m| LatticePath::new(source(n, m), tableau.row(m), beta.get(m)))
        .collect::<Result<Vec<_>>>()?;
    let path = NPath {
        components,
        sinks: identity(n),
    };
    if !path.is_disjoint() {
        return Err(Error::domain("components intersect"));
    }
    Ok(path)
}

/// Generating function of `LD_λ(β)` by path weights.
pub fn native_weight_sum(shape: &Shape, beta: &RTuple) -> MultiPoly {
    let mut sum = MultiPoly::zero(shape.n());
    for_each_disjoint(shape, beta, &identity(shape.n()), |p| {
        sum.add_term(p.content(), BigInt::one());
        ControlFlow::Continue(())
    });
    sum
}

/// Which rewiring produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rewiring {
    /// `β` is not bounded by its platform.
    Unbounded,
    /// `β` is bounded by its platform but its core is not gapless.
    NotGaplessCore,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub rewiring: Rewiring,
    /// The index whose base n-path is rewired.
    pub d: usize,
    /// The lowest rewired component.
    pub c: usize,
    pub path: NPath,
}

/// The disjoint n-path with native sinks from which both rewirings start.
/// Rows above `d` run east at their own depth; rows from `d` to `q_r` drop
/// to their core depth before the last `λ_i - λ_{q_{h+1}}` steps; rows of the
/// last carrel run east at their core depth.
fn base_npath(shape: &Shape, beta: &RTuple, core: &RTuple, d: usize) -> Vec<LatticePath> {
    let n = shape.n();
    let ctx = shape.ctx();
    let q_r = ctx.bounds()[ctx.r()];
    (1..=n)
        .map(|i| {
            let len = shape.part(i);
            let east = if i < d {
                vec![i; len]
            } else if i <= q_r {
                let h = ctx.carrel_of(i);
                let flat = shape.part(ctx.bounds()[h + 1]);
                let mut e = vec![i; flat];
                e.extend(std::iter::repeat_n(core.get(i), len - flat));
                e
            } else {
                vec![core.get(i); len]
            };
            LatticePath {
                start: source(n, i),
                east_depths: east,
                end_depth: beta.get(i),
            }
        })
        .collect()
}

/// Builds an explicit disjoint n-path with nontrivially permuted sinks for
/// an upper `β` outside `UGC_λ ∩ UBP_λ`.
///
/// If `β` is not bounded by its platform, take the first carrel `h` where it
/// exceeds the platform, `c` the rightmost such index there and `d` the
/// leftmost critical index to the right of `c`. Otherwise take the first
/// carrel `h` whose leftmost critical entry lies below the last core entry of
/// carrel `h - 1`, `d` that critical index and `c = q_{h-1}`. In both cases
/// component `d` leaves its base path one step early, drops one unit below
/// `δ_d` and runs east to terminal `c`, while each component `m ∈ [c, d)`
/// turns south one step early onto the stilt of terminal `m + 1`.
pub fn construct_violation_witness(shape: &Shape, beta: &RTuple) -> Result<Witness> {
    if shape.n() != beta.n() {
        return Err(Error::domain("shape and tuple lengths differ"));
    }
    beta.require_upper()?;
    let beta = shape.adopt(beta)?;
    let flags = beta.classify()?;
    let core = beta.core()?;
    let platform = beta.platform()?;
    let critical = beta.critical_list()?;
    let ctx = shape.ctx();
    let n = shape.n();

    let (rewiring, c, d) = if !flags.is_bounded_by_platform {
        let mut choice = None;
        for carrel in ctx.carrels().take(ctx.r()) {
            let over = carrel
                .clone()
                .filter(|&t| beta.get(t) > platform.get(t))
                .max();
            if let Some(c) = over {
                let d = carrel
                    .clone()
                    .find(|&x| x > c && critical.is_critical_index(x))
                    .expect("the carrel end is critical");
                choice = Some((c, d));
                break;
            }
        }
        let (c, d) = choice.ok_or_else(|| {
            Error::Inconsistent(format!(
                "{beta} exceeds its platform only in the last carrel"
            ))
        })?;
        (Rewiring::Unbounded, c, d)
    } else if !flags.is_gapless_core {
        let mut choice = None;
        for h in 1..ctx.carrel_count() {
            let c = ctx.bounds()[h];
            let (d, _) = critical.carrels()[h][0];
            if core.get(c) > core.get(d) {
                choice = Some((c, d));
                break;
            }
        }
        let (c, d) = choice
            .ok_or_else(|| Error::Inconsistent(format!("no gapless failure found for {beta}")))?;
        (Rewiring::NotGaplessCore, c, d)
    } else {
        return Err(Error::Refused(format!(
            "{beta} is a gapless core tuple bounded by its platform; \
             the pair is nonpermutable and no witness exists"
        )));
    };

    let mut comps = base_npath(shape, &beta, &core, d);
    let mut sinks = identity(n);

    // component d: one step short, down to δ_d + 1, east to terminal c
    let lam_d = shape.part(d);
    let target_lon = shape.part(c) + n - c;
    let mut east = comps[d - 1].east_depths[..lam_d - 1].to_vec();
    let kept_lon = n - d + east.len();
    east.extend(std::iter::repeat_n(core.get(d) + 1, target_lon - kept_lon));
    comps[d - 1] = LatticePath {
        start: source(n, d),
        east_depths: east,
        end_depth: beta.get(c),
    };
    sinks[d - 1] = c;

    // components c..d-1: turn south one step early onto the next stilt
    for m in c..d {
        comps[m - 1] = LatticePath {
            start: source(n, m),
            east_depths: vec![m; shape.part(m + 1) - 1],
            end_depth: beta.get(m + 1),
        };
        sinks[m - 1] = m + 1;
    }

    let path = NPath {
        components: comps,
        sinks,
    };
    path.validate(shape, &beta).map_err(|e| {
        Error::Inconsistent(format!("rewired n-path for {beta} failed validation: {e}"))
    })?;
    Ok(Witness {
        rewiring,
        d,
        c,
        path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{enumerate_tableaux, row_bound_sum};

    fn setup(parts: &str, tuple: &[usize]) -> (Shape, RTuple) {
        let s = Shape::parse(parts).unwrap();
        let b = s.tuple(tuple.to_vec()).unwrap();
        (s, b)
    }

    #[test]
    fn terminal_examples() {
        let (s, b) = setup("1,1,0", &[3, 2, 3]);
        let pts: Vec<_> = terminals(&s, &b).iter().map(Terminal::point).collect();
        assert_eq!(pts, vec![(3, 3), (2, 2), (0, 3)]);
        let (s, b) = setup("0,0,0", &[1, 2, 3]);
        let pts: Vec<_> = terminals(&s, &b).iter().map(Terminal::point).collect();
        assert_eq!(pts, vec![(2, 1), (1, 2), (0, 3)]);
        assert_eq!(pts, (1..=3).map(|m| source(3, m)).collect::<Vec<_>>());
        let (s, b) = setup("2,1,0", &[3, 2, 3]);
        let pts: Vec<_> = terminals(&s, &b).iter().map(Terminal::point).collect();
        assert_eq!(pts, vec![(4, 3), (2, 2), (0, 3)]);
    }

    #[test]
    fn points_of_a_path() {
        let p = LatticePath::new((1, 2), vec![3, 3], 4).unwrap();
        assert_eq!(p.points(), vec![(1, 2), (1, 3), (2, 3), (3, 3), (3, 4)]);
        assert_eq!(p.end(), (3, 4));
        assert!(LatticePath::new((1, 2), vec![1], 4).is_err());
        let null = LatticePath::new((0, 3), vec![], 3).unwrap();
        assert_eq!(null.points(), vec![(0, 3)]);
    }

    #[test]
    fn disjoint_enumeration_examples() {
        let (s, b) = setup("1,1,0", &[3, 2, 3]);
        assert_eq!(enumerate_disjoint(&s, &b, &[1, 2, 3]).len(), 1);
        assert!(!enumerate_disjoint(&s, &b, &[2, 1, 3]).is_empty());
        let (s, b) = setup("1,1,0", &[1, 1, 3]);
        assert!(enumerate_disjoint(&s, &b, &[1, 2, 3]).is_empty());
    }

    #[test]
    fn recording_round_trip() {
        let (s, b) = setup("2,0,0", &[1, 2, 3]);
        let t = Tableau::from_rows(&s, &[vec![1, 1], vec![], vec![]]).unwrap();
        let p = tableau_to_path(&t, &b).unwrap();
        assert_eq!(p.components[0].east_depths, vec![1, 1]);
        assert_eq!(path_to_tableau(&s, &p).unwrap(), t);

        let (s, b) = setup("2,1,0", &[3, 3, 3]);
        let tabs: Vec<_> = enumerate_tableaux(&s, &b).collect();
        assert_eq!(tabs.len(), 8);
        for t in &tabs {
            let p = tableau_to_path(t, &b).unwrap();
            p.validate(&s, &b).unwrap();
            assert_eq!(&path_to_tableau(&s, &p).unwrap(), t);
            assert_eq!(p.weight(), t.monomial());
        }
        assert_eq!(native_weight_sum(&s, &b), row_bound_sum(&s, &b));
    }

    #[test]
    fn recording_rejects_intersections() {
        let (s, _) = setup("1,1,0", &[3, 2, 3]);
        let bad = NPath {
            components: vec![
                LatticePath::new((2, 1), vec![2], 3).unwrap(),
                LatticePath::new((1, 2), vec![2], 2).unwrap(),
                LatticePath::new((0, 3), vec![], 3).unwrap(),
            ],
            sinks: vec![1, 2, 3],
        };
        assert!(!bad.is_disjoint());
        assert!(path_to_tableau(&s, &bad).is_err());
    }

    #[test]
    fn brute_force_examples() {
        let (s, b) = setup("1,1,0", &[3, 2, 3]);
        assert!(!is_nonpermutable_brute(&s, &b, DEFAULT_BRUTE_CAP).unwrap());
        let (s, b) = setup("2,1,0", &[3, 2, 3]);
        assert!(!is_nonpermutable_brute(&s, &b, DEFAULT_BRUTE_CAP).unwrap());
        let (s, b) = setup("2,1,0", &[2, 2, 3]);
        assert!(is_nonpermutable_brute(&s, &b, DEFAULT_BRUTE_CAP).unwrap());
        assert_eq!(
            is_nonpermutable_brute(&s, &b, 2).unwrap_err(),
            Error::OverCap { n: 3, cap: 2 }
        );
    }

    #[test]
    fn witness_examples() {
        let (s, b) = setup("1,1,0", &[3, 2, 3]);
        let w = construct_violation_witness(&s, &b).unwrap();
        assert_eq!(w.rewiring, Rewiring::Unbounded);
        assert_eq!(w.path.sinks, vec![2, 1, 3]);
        assert_eq!(w.path.weight().to_string(), "x3^2");

        let (s, b) = setup("2,1,0", &[3, 2, 3]);
        let w = construct_violation_witness(&s, &b).unwrap();
        assert_eq!(w.rewiring, Rewiring::NotGaplessCore);
        assert_eq!(w.path.sinks, vec![2, 1, 3]);
        assert_eq!(w.path.weight().to_string(), "x3^3");

        let (s, b) = setup("2,1,0", &[2, 2, 3]);
        assert!(matches!(
            construct_violation_witness(&s, &b),
            Err(Error::Refused(_))
        ));
    }

    #[test]
    fn sixteen_row_witness() {
        let s = Shape::parse("7,7,7,5,5,5,5,5,5,5,5,3,3,1,1,0").unwrap();
        let b = s
            .tuple(vec![
                5, 5, 8, 5, 12, 13, 9, 11, 11, 15, 15, 16, 16, 14, 16, 16,
            ])
            .unwrap();
        let w = construct_violation_witness(&s, &b).unwrap();
        assert_eq!((w.c, w.d), (6, 9));
        assert_eq!(w.path.sinks[8], 6);
        assert_eq!(&w.path.sinks[5..8], &[7, 8, 9]);
    }

    #[test]
    fn permutations_are_lexicographic() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0], vec![1, 2, 3]);
        assert_eq!(ps[5], vec![3, 2, 1]);
        assert_eq!(permutations(1), vec![vec![1]]);
    }
}
