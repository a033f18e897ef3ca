use std::collections::{BTreeSet, VecDeque};

use flagged_schur::demazure::{apply_word, divided_difference, lambda_permutations, Permutation};
use flagged_schur::equivalence::{class_of, enumerate_gapless};
use flagged_schur::gv::schur_via_det;
use flagged_schur::paths::{
    construct_violation_witness, is_nonpermutable_brute, path_to_tableau, permutations,
    tableau_to_path,
};
use flagged_schur::poly::{binomial, complete_homogeneous};
use flagged_schur::shape::{enumerate_tableaux, max_tableau, row_bound_sum};
use flagged_schur::sweep::{partitions, upper_tuples};
use flagged_schur::{MultiPoly, PolyMatrix, RContext, RTuple, Shape};
use num_bigint::BigInt;
use proptest::prelude::*;

fn shape_strategy(max_n: usize, max_part: usize) -> impl Strategy<Value = Shape> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..=max_part as i64, n).prop_map(move |mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Shape::new(n, &parts).unwrap()
        })
    })
}

fn upper_for(shape: Shape) -> impl Strategy<Value = (Shape, RTuple)> {
    let n = shape.n();
    let entries: Vec<_> = (1..=n).map(|i| i..=n).collect();
    (Just(shape), entries).prop_map(|(s, e)| {
        let b = s.tuple(e).unwrap();
        (s, b)
    })
}

fn shape_and_upper(max_n: usize, max_part: usize) -> impl Strategy<Value = (Shape, RTuple)> {
    shape_strategy(max_n, max_part).prop_flat_map(upper_for)
}

/// An upper tuple over arbitrary dividers.
fn upper_rtuple(max_n: usize) -> impl Strategy<Value = RTuple> {
    (2..=max_n).prop_flat_map(|n| {
        let entries: Vec<_> = (1..=n).map(|i| i..=n).collect();
        (prop::collection::vec(any::<bool>(), n - 1), entries).prop_map(move |(cuts, e)| {
            let dividers: Vec<usize> = (1..n).filter(|&q| cuts[q - 1]).collect();
            RTuple::new(RContext::new(n, &dividers).unwrap(), e).unwrap()
        })
    })
}

fn small_poly(n: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), -3i64..=3), 0..5).prop_map(
        move |terms| {
            MultiPoly::from_terms(n, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
        },
    )
}

/// Core and critical indices from `δ_i = min(β_i, δ_{i+1} - 1)` per carrel.
fn min_recurrence(beta: &RTuple) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut delta = vec![0; beta.n()];
    let mut crit = Vec::new();
    for carrel in beta.ctx().carrels() {
        let end = *carrel.end();
        delta[end - 1] = beta.get(end);
        crit.push((end, beta.get(end)));
        for i in carrel.rev().skip(1) {
            let next = delta[i] as i64 - 1;
            if (beta.get(i) as i64) < next {
                crit.push((i, beta.get(i)));
            }
            delta[i - 1] = (beta.get(i) as i64).min(next) as usize;
        }
    }
    crit.sort_unstable();
    (delta, crit)
}

proptest! {
    #[test]
    fn core_matches_min_recurrence(beta in upper_rtuple(9)) {
        let (delta, crit) = min_recurrence(&beta);
        prop_assert_eq!(beta.core().unwrap().entries().to_vec(), delta);
        let mut pairs: Vec<_> = beta.critical_list().unwrap().pairs().collect();
        pairs.sort_unstable();
        prop_assert_eq!(pairs, crit);
    }

    #[test]
    fn core_and_platform_are_idempotent(beta in upper_rtuple(9)) {
        let core = beta.core().unwrap();
        let plat = beta.platform().unwrap();
        prop_assert_eq!(core.core().unwrap(), core.clone());
        prop_assert_eq!(plat.platform().unwrap(), plat.clone());
        prop_assert_eq!(plat.core().unwrap(), core.clone());
        prop_assert!(core.le(&plat));
        prop_assert_eq!(core.critical_list().unwrap(), beta.critical_list().unwrap());
    }

    #[test]
    fn class_inclusions(beta in upper_rtuple(8)) {
        let f = beta.classify().unwrap();
        if f.is_r_increasing {
            prop_assert_eq!(beta.core().unwrap(), beta.clone());
            prop_assert!(f.is_bounded_by_platform);
        }
        if f.is_flag {
            prop_assert!(f.is_bounded_by_platform && f.is_gapless_core);
        }
        if f.is_gapless {
            prop_assert!(f.is_r_increasing && f.is_gapless_core);
        }
        if f.is_ceiling_flag {
            prop_assert!(f.is_flag);
        }
    }

    #[test]
    fn gapless_and_ceiling_flags_pair_up(beta in upper_rtuple(8)) {
        let f = beta.classify().unwrap();
        if f.is_gapless {
            let xi = beta.platform().unwrap();
            prop_assert!(xi.classify().unwrap().is_ceiling_flag);
            prop_assert_eq!(xi.core().unwrap(), beta.clone());
        }
        if f.is_ceiling_flag {
            let g = beta.core().unwrap();
            prop_assert!(g.classify().unwrap().is_gapless);
            prop_assert_eq!(g.platform().unwrap(), beta.clone());
        }
    }

    #[test]
    fn text_and_json_round_trip(beta in upper_rtuple(9)) {
        let back: RTuple = beta.to_string().parse().unwrap();
        prop_assert_eq!(&back, &beta);
        let js = serde_json::to_string(&beta).unwrap();
        let back: RTuple = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back, beta);
    }

    #[test]
    fn tableau_set_depends_only_on_core((shape, beta) in shape_and_upper(5, 3)) {
        let core = beta.core().unwrap();
        prop_assert_eq!(row_bound_sum(&shape, &beta), row_bound_sum(&shape, &core));
    }

    #[test]
    fn tableau_contents_have_size_of_shape((shape, beta) in shape_and_upper(5, 3)) {
        for t in enumerate_tableaux(&shape, &beta) {
            prop_assert_eq!(t.content().iter().sum::<u32>() as usize, shape.size());
            prop_assert!(t.is_bounded_by(&beta));
        }
    }

    #[test]
    fn max_tableau_is_entrywise_max((shape, beta) in shape_and_upper(5, 3)) {
        let top = max_tableau(&shape, &beta).unwrap();
        let mut seen = false;
        for t in enumerate_tableaux(&shape, &beta) {
            seen |= t == top;
            for (c, tc) in t.columns().iter().zip(top.columns()) {
                prop_assert!(c.iter().zip(tc).all(|(a, b)| a <= b));
            }
        }
        prop_assert!(seen);
        if shape.has_distinct_parts() {
            for i in 1..=shape.nonempty_rows() {
                prop_assert_eq!(*top.row(i).last().unwrap(), beta.get(i));
            }
        }
    }

    #[test]
    fn recording_round_trips((shape, beta) in shape_and_upper(4, 3)) {
        for t in enumerate_tableaux(&shape, &beta) {
            let p = tableau_to_path(&t, &beta).unwrap();
            prop_assert!(p.validate(&shape, &beta).is_ok());
            prop_assert_eq!(path_to_tableau(&shape, &p).unwrap(), t);
        }
    }

    #[test]
    fn full_flag_sum_is_symmetric(shape in shape_strategy(4, 3)) {
        let n = shape.n();
        let s = row_bound_sum(&shape, &shape.tuple(vec![n; n]).unwrap());
        for i in 1..n {
            prop_assert_eq!(s.swap_vars(i, i + 1), s.clone());
        }
    }

    #[test]
    fn nonpermutability_at_five((shape, beta) in shape_and_upper(5, 3)) {
        let valid = beta.classify().unwrap().is_valid_gv_input();
        prop_assert_eq!(is_nonpermutable_brute(&shape, &beta, 6).unwrap(), valid);
        prop_assert_eq!(construct_violation_witness(&shape, &beta).is_ok(), !valid);
        if beta.classify().unwrap().is_gapless_core {
            let det = schur_via_det(&shape, &beta, false).unwrap().polynomial;
            prop_assert_eq!(det, row_bound_sum(&shape, &beta));
        }
    }

    #[test]
    fn class_interval_contains_tuple((shape, beta) in shape_and_upper(6, 3)) {
        if beta.classify().unwrap().is_valid_gv_input() {
            let c = class_of(&shape, &beta).unwrap();
            prop_assert!(c.contains(&beta));
        }
    }

    #[test]
    fn eval_is_a_ring_map(f in small_poly(3), g in small_poly(3), p in prop::collection::vec(-4i64..=4, 3)) {
        let (fv, gv) = (f.eval(&p).unwrap(), g.eval(&p).unwrap());
        prop_assert_eq!((&f + &g).eval(&p).unwrap(), &fv + &gv);
        prop_assert_eq!((&f * &g).eval(&p).unwrap(), &fv * &gv);
        prop_assert_eq!((&f - &f).is_zero(), true);
    }

    #[test]
    fn determinant_matches_leibniz(dim in 1usize..=4, seed in prop::collection::vec(small_poly(2), 16)) {
        let rows: Vec<Vec<MultiPoly>> = (0..dim)
            .map(|i| seed[i * dim..(i + 1) * dim].to_vec())
            .collect();
        let m = PolyMatrix::new(2, rows.clone()).unwrap();
        let mut want = MultiPoly::zero(2);
        for perm in permutations(dim) {
            let inv = (0..dim)
                .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let prod = (0..dim).fold(MultiPoly::one(2), |acc, i| &acc * &rows[i][perm[i] - 1]);
            want = if inv % 2 == 0 { &want + &prod } else { &want - &prod };
        }
        prop_assert_eq!(m.determinant(), want);
    }

    #[test]
    fn triangular_determinant_is_diagonal_product(diag in prop::collection::vec(small_poly(2), 1..=5), fill in small_poly(2)) {
        let d = diag.len();
        let rows: Vec<Vec<MultiPoly>> = (0..d)
            .map(|i| (0..d).map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Equal => diag[i].clone(),
                std::cmp::Ordering::Greater => fill.clone(),
                std::cmp::Ordering::Less => MultiPoly::zero(2),
            }).collect())
            .collect();
        let want = diag.iter().fold(MultiPoly::one(2), |acc, p| &acc * p);
        prop_assert_eq!(PolyMatrix::new(2, rows).unwrap().determinant(), want);
    }

    #[test]
    fn divided_difference_is_idempotent(f in small_poly(3), i in 1usize..=2) {
        let once = divided_difference(i, &f).unwrap();
        prop_assert_eq!(divided_difference(i, &once).unwrap(), once);
    }
}

#[test]
fn complete_homogeneous_term_counts() {
    for k in 1..=6 {
        for i in 1..=k {
            for u in 0..=6 {
                let h = complete_homogeneous(u, i, k, 6).unwrap();
                let want = binomial((k - i) as u64 + u as u64, u as u64);
                assert_eq!(h.term_count() as u128, want, "h_{u}({i},{k})");
                if u > 0 {
                    assert_eq!(h.homogeneous_degree(), Some(u as u32));
                }
            }
        }
    }
}

#[test]
fn gapless_definitions_agree_exhaustively() {
    for n in 1..=5 {
        for mask in 0..1u32 << (n - 1) {
            let dividers: Vec<usize> = (1..n).filter(|q| mask >> (q - 1) & 1 == 1).collect();
            let ctx = RContext::new(n, &dividers).unwrap();
            for beta in upper_tuples(&ctx) {
                beta.classify().unwrap_or_else(|e| panic!("({beta}): {e}"));
            }
        }
    }
}

#[test]
fn gapless_enumeration_has_no_duplicates() {
    for n in 1..=5 {
        for shape in partitions(n, 3) {
            let all = enumerate_gapless(&shape);
            let set: BTreeSet<_> = all.iter().map(|t| t.entries().to_vec()).collect();
            assert_eq!(set.len(), all.len());
        }
    }
}

/// Every reduced word of `perm`, by breadth-first search over descents.
fn all_reduced_words(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut queue = VecDeque::from([(perm.to_vec(), Vec::new())]);
    while let Some((p, suffix)) = queue.pop_front() {
        let descents: Vec<usize> = (1..p.len()).filter(|&i| p[i - 1] > p[i]).collect();
        if descents.is_empty() {
            out.push(suffix);
            continue;
        }
        for i in descents {
            let mut q = p.clone();
            q.swap(i - 1, i);
            let mut w = vec![i];
            w.extend(&suffix);
            queue.push_back((q, w));
        }
    }
    out
}

#[test]
fn demazure_character_is_independent_of_reduced_word() {
    for n in 1..=4 {
        let parts: Vec<i64> = (0..n as i64).rev().collect();
        let shape = Shape::new(n, &parts).unwrap();
        let top = MultiPoly::monomial(shape.parts().iter().map(|&p| p as u32).collect(), 1);
        for perm in lambda_permutations(&shape) {
            let words = all_reduced_words(perm.one_line());
            assert!(words.iter().all(|w| w.len() == perm.inversions()));
            let first = apply_word(&words[0], &top).unwrap();
            assert_eq!(first, apply_word(&perm.reduced_word(), &top).unwrap());
            for w in &words[1..] {
                assert_eq!(apply_word(w, &top).unwrap(), first, "{perm} via {w:?}");
            }
        }
    }
    assert_eq!(Permutation::longest(4).inversions(), 6);
}
