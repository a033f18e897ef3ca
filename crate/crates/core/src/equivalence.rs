//! Equivalence of row bound tuples and the most efficient determinant
//! inputs.
//!
//! Two upper λ-tuples are equivalent when they bound the same tableau set,
//! which happens exactly when they share a core. Inside `UGC_λ ∩ UBP_λ` each
//! class is an interval `[γ, ξ]` from a gapless tuple to its ceiling flag,
//! and `γ` minimises the number of monomials in the determinant.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gv::efficiency_count;
use crate::rtuple::{CriticalList, RTuple};
use crate::shape::Shape;

/// `β ≈_λ β'`. Both tuples are read against `R_λ`.
pub fn equivalent(shape: &Shape, a: &RTuple, b: &RTuple) -> Result<bool> {
    let a = shape.adopt(a)?;
    let b = shape.adopt(b)?;
    Ok(a.core()? == b.core()?)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivClass {
    gamma: RTuple,
    xi: RTuple,
    critical: CriticalList,
}

impl EquivClass {
    /// The gapless minimum.
    pub fn gamma(&self) -> &RTuple {
        &self.gamma
    }

    /// The ceiling flag maximum.
    pub fn xi(&self) -> &RTuple {
        &self.xi
    }

    pub fn critical(&self) -> &CriticalList {
        &self.critical
    }

    pub fn contains(&self, eta: &RTuple) -> bool {
        eta.n() == self.gamma.n() && self.gamma.le(eta) && eta.le(&self.xi)
    }

    /// Number of tuples in the interval `[γ, ξ]`.
    pub fn size(&self) -> u128 {
        self.gamma
            .entries()
            .iter()
            .zip(self.xi.entries())
            .map(|(&g, &x)| (x - g + 1) as u128)
            .product()
    }

    /// Every tuple of the interval, lexicographically.
    pub fn members(&self) -> Vec<RTuple> {
        let lo = self.gamma.entries();
        let hi = self.xi.entries();
        let mut out = Vec::new();
        let mut cur = lo.to_vec();
        loop {
            out.push(RTuple::new(self.gamma.ctx().clone(), cur.clone()).expect("interval member"));
            let Some(k) = (0..cur.len()).rev().find(|&k| cur[k] < hi[k]) else {
                break;
            };
            cur[k] += 1;
            cur[k + 1..].copy_from_slice(&lo[k + 1..]);
        }
        out
    }
}

/// The class of `η ∈ UGC_λ ∩ UBP_λ`: `γ = Δ_λ(η)`, `ξ = Ξ_λ(γ)`.
pub fn class_of(shape: &Shape, eta: &RTuple) -> Result<EquivClass> {
    eta.require_upper()?;
    let eta = shape.adopt(eta)?;
    let flags = eta.classify()?;
    if !flags.is_valid_gv_input() {
        return Err(Error::Refused(format!(
            "{eta} is not a gapless core tuple bounded by its platform"
        )));
    }
    let gamma = eta.core()?;
    let xi = gamma.platform()?;
    let critical = gamma.critical_list()?;
    Ok(EquivClass {
        gamma,
        xi,
        critical,
    })
}

/// The gapless λ-tuples in lexicographic order.
pub fn enumerate_gapless(shape: &Shape) -> Vec<RTuple> {
    let n = shape.n();
    let ctx = shape.ctx();
    let starts: Vec<bool> = (1..=n)
        .map(|i| ctx.carrels().any(|c| *c.start() == i))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    // carrel-wise strictly increasing upper tuples, then the flag test
    fn rec(
        i: usize,
        n: usize,
        starts: &[bool],
        cur: &mut Vec<usize>,
        shape: &Shape,
        out: &mut Vec<RTuple>,
    ) {
        if i > n {
            let t = shape.tuple(cur.clone()).expect("entries lie in [n]");
            if t.critical_list().is_ok_and(|c| c.is_flag_list()) {
                out.push(t);
            }
            return;
        }
        let lo = if starts[i - 1] {
            i
        } else {
            (cur[i - 2] + 1).max(i)
        };
        // leave room for the rest of the carrel to keep increasing
        let carrel_end = (i..=n)
            .take_while(|&k| k == i || !starts[k - 1])
            .last()
            .unwrap();
        let hi = n - (carrel_end - i);
        for v in lo..=hi {
            cur.push(v);
            rec(i + 1, n, starts, cur, shape, out);
            cur.pop();
        }
    }
    rec(1, n, &starts, &mut cur, shape, &mut out);
    out
}

/// `C_n^λ`, taken as the number of gapless λ-tuples.
pub fn parabolic_catalan(shape: &Shape) -> u64 {
    enumerate_gapless(shape).len() as u64
}

/// The most efficient input equivalent to `η ∈ UGC_λ`: its core.
pub fn max_efficiency_input(shape: &Shape, eta: &RTuple) -> Result<RTuple> {
    eta.require_upper()?;
    let eta = shape.adopt(eta)?;
    if !eta.classify()?.is_gapless_core {
        return Err(Error::Refused(format!("{eta} is not a gapless core tuple")));
    }
    eta.core()
}

/// One line of the `classes` listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub gamma: RTuple,
    pub xi: RTuple,
    pub size_of_interval: u128,
    pub efficiency_count_at_gamma: u128,
}

/// All classes of `UGC_λ ∩ UBP_λ`, one per gapless tuple.
pub fn classes(shape: &Shape) -> Result<Vec<ClassSummary>> {
    enumerate_gapless(shape)
        .into_iter()
        .map(|gamma| {
            let class = class_of(shape, &gamma)?;
            Ok(ClassSummary {
                efficiency_count_at_gamma: efficiency_count(shape, &gamma)?,
                size_of_interval: class.size(),
                gamma: class.gamma,
                xi: class.xi,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gv::efficiency_count;

    fn shape(s: &str) -> Shape {
        Shape::parse(s).unwrap()
    }

    #[test]
    fn equivalence_examples() {
        let b: RTuple = "2,7,5;8,6,6,9,9;9".parse().unwrap();
        let xi = b.platform().unwrap();
        assert_eq!(b.core().unwrap(), xi.core().unwrap());

        let s = shape("1,1,0");
        let a = s.tuple(vec![3, 2, 3]).unwrap();
        let b = s.tuple(vec![2, 2, 3]).unwrap();
        // cores are (1,2;3) and (1,2;3)
        assert!(equivalent(&s, &a, &b).unwrap());
        assert!(equivalent(&s, &a, &a.core().unwrap()).unwrap());
        let c = s.tuple(vec![2, 3, 3]).unwrap();
        assert!(!equivalent(&s, &a, &c).unwrap());
        assert!(equivalent(&s, &a, &s.tuple(vec![1, 1, 3]).unwrap()).is_err());
    }

    #[test]
    fn gapless_counts() {
        assert_eq!(enumerate_gapless(&shape("2,1,0")).len(), 5);
        let one = enumerate_gapless(&shape("1,1,1"));
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].entries(), &[1, 2, 3]);
        assert_eq!(enumerate_gapless(&shape("1,1,0,0")).len(), 6);
        assert_eq!(parabolic_catalan(&shape("0,0,0")), 1);
        assert_eq!(parabolic_catalan(&shape("3,2,1,0")), 14);
    }

    #[test]
    fn gapless_enumeration_is_sorted() {
        let all = enumerate_gapless(&shape("2,1,0,0"));
        assert!(all.windows(2).all(|w| w[0].entries() < w[1].entries()));
    }

    #[test]
    fn class_endpoints() {
        let s = shape("1,1,0");
        for g in enumerate_gapless(&s) {
            let c = class_of(&s, &g).unwrap();
            assert_eq!(c.gamma(), &g);
            assert_eq!(c.xi(), &g.platform().unwrap());
            let from_top = class_of(&s, c.xi()).unwrap();
            assert_eq!(from_top, c);
            assert_eq!(c.members().len() as u128, c.size());
        }
        let bad = s.tuple(vec![3, 2, 3]).unwrap();
        assert!(matches!(class_of(&s, &bad), Err(Error::Refused(_))));
    }

    #[test]
    fn max_efficiency_examples() {
        let s = shape("1,1,0");
        let eta = s.tuple(vec![3, 2, 3]).unwrap();
        let g = max_efficiency_input(&s, &eta).unwrap();
        assert_eq!(g, eta.core().unwrap());
        let top = g.platform().unwrap();
        assert_ne!(g, top);
        assert!(efficiency_count(&s, &g).unwrap() < efficiency_count(&s, &top).unwrap());
        assert_eq!(max_efficiency_input(&s, &g).unwrap(), g);

        let s = shape("2,1,0");
        let bad = s.tuple(vec![3, 2, 3]).unwrap();
        assert!(matches!(
            max_efficiency_input(&s, &bad),
            Err(Error::Refused(_))
        ));
    }

    #[test]
    fn class_listing() {
        let s = shape("1,1,0");
        let list = classes(&s).unwrap();
        assert_eq!(list.len() as u64, parabolic_catalan(&s));
        let js = serde_json::to_value(&list[0]).unwrap();
        assert!(js.get("size_of_interval").is_some());
    }
}
