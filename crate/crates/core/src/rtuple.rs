//! R-tuples: `n`-tuples with entries in `[n]`, divided into carrels by a set
//! of dividers `R ⊆ [n-1]`.
//!
//! Every upper R-tuple carries a critical list, found by scanning each
//! carrel from the right. The same scan produces the core (staircases
//! descending leftward from each critical pair) and the platform (plateaus
//! held at each critical entry). All indices and entries are 1-based, as in
//! the text encoding `2,7,5;8,6,6,9,9;9`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The divider set `R` for tuples of length `n`, with the derived carrel
/// boundaries `q_0 = 0 < q_1 < … < q_r < q_{r+1} = n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RContext {
    n: usize,
    bounds: Vec<usize>,
}

impl RContext {
    pub fn new(n: usize, dividers: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be positive"));
        }
        let mut bounds = Vec::with_capacity(dividers.len() + 2);
        bounds.push(0);
        for &q in dividers {
            if q == 0 || q >= n {
                return Err(Error::domain(format!(
                    "divider {q} is outside [1, {}]",
                    n - 1
                )));
            }
            if q <= *bounds.last().unwrap() {
                return Err(Error::domain("dividers must be strictly increasing"));
            }
            bounds.push(q);
        }
        bounds.push(n);
        Ok(RContext { n, bounds })
    }

    /// A context with no dividers: one carrel spanning `[n]`.
    pub fn trivial(n: usize) -> Result<Self> {
        RContext::new(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The elements `q_1 < … < q_r` of `R`.
    pub fn dividers(&self) -> &[usize] {
        &self.bounds[1..self.bounds.len() - 1]
    }

    /// `q_0, …, q_{r+1}`.
    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn r(&self) -> usize {
        self.bounds.len() - 2
    }

    pub fn carrel_count(&self) -> usize {
        self.bounds.len() - 1
    }

    /// Carrel sizes `p_h = q_h - q_{h-1}`.
    pub fn carrel_sizes(&self) -> Vec<usize> {
        self.bounds.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Absolute 1-based index ranges `(q_{h-1}, q_h]` of the carrels.
    pub fn carrels(&self) -> impl Iterator<Item = RangeInclusive<usize>> + '_ {
        self.bounds.windows(2).map(|w| (w[0] + 1)..=w[1])
    }

    /// The 1-based carrel number `h` containing index `i`.
    pub fn carrel_of(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        self.bounds.partition_point(|&q| q < i)
    }
}

/// An R-tuple. Entries are stored in index order; `get(i)` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RTuple {
    ctx: RContext,
    entries: Vec<usize>,
}

impl RTuple {
    pub fn new(ctx: RContext, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != ctx.n {
            return Err(Error::domain(format!(
                "tuple has {} entries, expected {}",
                entries.len(),
                ctx.n
            )));
        }
        if let Some((i, &v)) = entries
            .iter()
            .enumerate()
            .find(|(_, &v)| v == 0 || v > ctx.n)
        {
            return Err(Error::domain(format!(
                "entry {v} at index {} is outside [1, {}]",
                i + 1,
                ctx.n
            )));
        }
        Ok(RTuple { ctx, entries })
    }

    pub fn ctx(&self) -> &RContext {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// The same entries re-read against another divider set.
    pub fn with_context(&self, ctx: RContext) -> Result<Self> {
        RTuple::new(ctx, self.entries.clone())
    }

    /// First index `i` with `β_i < i`, if any.
    pub fn first_non_upper(&self) -> Option<usize> {
        (1..=self.n()).find(|&i| self.get(i) < i)
    }

    pub fn is_upper(&self) -> bool {
        self.first_non_upper().is_none()
    }

    pub fn require_upper(&self) -> Result<()> {
        match self.first_non_upper() {
            None => Ok(()),
            Some(index) => Err(Error::NotUpper {
                index,
                value: self.get(index),
            }),
        }
    }

    /// Entrywise comparison. Panics if the lengths differ.
    pub fn le(&self, other: &RTuple) -> bool {
        assert_eq!(self.n(), other.n(), "comparing tuples of different length");
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    /// Strictly increasing within every carrel.
    pub fn is_carrel_increasing(&self) -> bool {
        self.ctx
            .carrels()
            .all(|c| c.clone().skip(1).all(|i| self.get(i - 1) < self.get(i)))
    }

    fn scan(&self) -> Result<Scan> {
        self.require_upper()?;
        let n = self.n();
        let mut core = vec![0; n];
        let mut platform = vec![0; n];
        let mut carrels = Vec::with_capacity(self.ctx.carrel_count());
        for carrel in self.ctx.carrels() {
            let lo = *carrel.start();
            let mut x = *carrel.end();
            let mut pairs = vec![(x, self.get(x))];
            loop {
                let top = self.get(x) as i64;
                let next = (lo..x)
                    .rev()
                    .find(|&c| top - self.get(c) as i64 > (x - c) as i64);
                let stop = next.map_or(lo, |c| c + 1);
                for i in stop..=x {
                    core[i - 1] = self.get(x) - (x - i);
                    platform[i - 1] = self.get(x);
                }
                match next {
                    Some(c) => {
                        x = c;
                        pairs.push((x, self.get(x)));
                    }
                    None => break,
                }
            }
            pairs.reverse();
            carrels.push(pairs);
        }
        Ok(Scan {
            critical: CriticalList { carrels },
            core,
            platform,
        })
    }

    /// The R-critical list. Fails on tuples that are not upper.
    pub fn critical_list(&self) -> Result<CriticalList> {
        Ok(self.scan()?.critical)
    }

    /// The R-core `Δ_R(β)`.
    pub fn core(&self) -> Result<RTuple> {
        let scan = self.scan()?;
        Ok(RTuple {
            ctx: self.ctx.clone(),
            entries: scan.core,
        })
    }

    /// The R-platform `Ξ_R(β)`.
    pub fn platform(&self) -> Result<RTuple> {
        let scan = self.scan()?;
        Ok(RTuple {
            ctx: self.ctx.clone(),
            entries: scan.platform,
        })
    }

    pub fn classify(&self) -> Result<ClassFlags> {
        classify(self)
    }

    /// Parses the text encoding. Semicolons place the dividers, so
    /// `"2,7,5;8,6,6,9,9;9"` yields `n = 9, R = {3, 8}`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut dividers = Vec::new();
        let groups: Vec<&str> = text.trim().split(';').collect();
        for (g, group) in groups.iter().enumerate() {
            for tok in group.split(',') {
                let tok = tok.trim();
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::domain(format!("malformed tuple entry {tok:?}")))?;
                entries.push(v);
            }
            if g + 1 < groups.len() {
                dividers.push(entries.len());
            }
        }
        let ctx = RContext::new(entries.len(), &dividers)?;
        RTuple::new(ctx, entries)
    }
}

impl fmt::Display for RTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (h, carrel) in self.ctx.carrels().enumerate() {
            if h > 0 {
                f.write_str(";")?;
            }
            for (k, i) in carrel.enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i))?;
            }
        }
        Ok(())
    }
}

impl FromStr for RTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RTuple::parse(s)
    }
}

impl PartialOrd for RTuple {
    /// The entrywise partial order; `None` for incomparable tuples or tuples
    /// over different divider sets.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.ctx != other.ctx {
            return None;
        }
        match (self.le(other), other.le(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RTupleJson {
    n: usize,
    #[serde(rename = "R")]
    dividers: Vec<usize>,
    entries: Vec<usize>,
}

impl Serialize for RTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RTupleJson {
            n: self.n(),
            dividers: self.ctx.dividers().to_vec(),
            entries: self.entries.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RTuple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RTupleJson::deserialize(d)?;
        let ctx = RContext::new(raw.n, &raw.dividers).map_err(serde::de::Error::custom)?;
        RTuple::new(ctx, raw.entries).map_err(serde::de::Error::custom)
    }
}

struct Scan {
    critical: CriticalList,
    core: Vec<usize>,
    platform: Vec<usize>,
}

/// Per-carrel sets of critical pairs `(x, β_x)`, each listed left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CriticalList {
    carrels: Vec<Vec<(usize, usize)>>,
}

impl CriticalList {
    pub fn carrels(&self) -> &[Vec<(usize, usize)>] {
        &self.carrels
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.carrels.iter().flatten().copied()
    }

    pub fn is_critical_index(&self, x: usize) -> bool {
        self.pairs().any(|(i, _)| i == x)
    }

    /// Whether `y_{q_h} ≤ y_k` for every `h ∈ [r]`, where `k` is the leftmost
    /// critical index of carrel `h + 1`. Vacuous when `R` is empty.
    pub fn is_flag_list(&self) -> bool {
        self.carrels.windows(2).all(|w| {
            let (_, right_end) = *w[0].last().unwrap();
            let (_, next_left) = w[1][0];
            right_end <= next_left
        })
    }
}

impl fmt::Display for CriticalList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (h, pairs) in self.carrels.iter().enumerate() {
            if h > 0 {
                f.write_str(";")?;
            }
            f.write_str("{")?;
            for (k, (x, y)) in pairs.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "({x},{y})")?;
            }
            f.write_str("}")?;
        }
        f.write_str(")")
    }
}

/// Membership of a tuple in the classes of upper tuples. Every flag is
/// `false` for a tuple that is not upper.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub is_upper: bool,
    pub is_flag: bool,
    pub is_r_increasing: bool,
    pub is_gapless: bool,
    pub is_gapless_core: bool,
    pub is_bounded_by_platform: bool,
    pub is_ceiling_flag: bool,
    pub has_flag_critical_list: bool,
}

impl ClassFlags {
    /// `UGC ∩ UBP`: exactly the nonpermutable inputs.
    pub fn is_valid_gv_input(&self) -> bool {
        self.is_gapless_core && self.is_bounded_by_platform
    }
}

/// Computes the class flags. The gapless property is computed both from the
/// critical list and from the staircase description of the first entries of
/// each carrel; a disagreement is reported as [`Error::Inconsistent`].
pub fn classify(beta: &RTuple) -> Result<ClassFlags> {
    if !beta.is_upper() {
        return Ok(ClassFlags::default());
    }
    let scan = beta.scan()?;
    let flag_list = scan.critical.is_flag_list();
    let is_flag = beta.is_weakly_increasing();
    let is_r_increasing = beta.is_carrel_increasing();
    let is_gapless = is_r_increasing && flag_list;
    if is_gapless != is_gapless_staircase(beta) {
        return Err(Error::Inconsistent(format!(
            "gapless definitions disagree on {beta}"
        )));
    }
    let bounded = beta.entries.iter().zip(&scan.platform).all(|(b, x)| b <= x);
    Ok(ClassFlags {
        is_upper: true,
        is_flag,
        is_r_increasing,
        is_gapless,
        is_gapless_core: flag_list,
        is_bounded_by_platform: bounded,
        is_ceiling_flag: is_flag && beta.entries == scan.platform,
        has_flag_critical_list: flag_list,
    })
}

/// Gapless via the staircase description: an upper carrel-increasing tuple
/// such that whenever `γ_{q_h} > γ_{q_h+1}`, with `s = γ_{q_h} - γ_{q_h+1} + 1`,
/// the carrel `h + 1` has at least `s` entries and begins
/// `γ_{q_h} - s + 1, …, γ_{q_h}`.
pub fn is_gapless_staircase(gamma: &RTuple) -> bool {
    if !gamma.is_upper() || !gamma.is_carrel_increasing() {
        return false;
    }
    let sizes = gamma.ctx.carrel_sizes();
    gamma.ctx.dividers().iter().enumerate().all(|(h, &q)| {
        let (top, next) = (gamma.get(q), gamma.get(q + 1));
        if top <= next {
            return true;
        }
        let s = top - next + 1;
        s <= sizes[h + 1] && (1..=s).all(|t| gamma.get(q + t) == top - s + t)
    })
}

/// Gapless core via the original description: the core is gapless.
pub fn is_gapless_core_via_core(eta: &RTuple) -> bool {
    eta.core().is_ok_and(|d| is_gapless_staircase(&d))
}
