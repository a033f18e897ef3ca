//! Gessel-Viennot determinants for row bound sums.
//!
//! For a terminal pair `(λ, β)` the matrix has `(i, j)` entry
//! `h_{λ_j - j + i}(i, β_j; x)`, the weight sum of single paths from the
//! source of row `i` to the terminal of row `j`. Its determinant equals
//! `s_λ(β; x)` exactly when `β` is a gapless core tuple bounded by its
//! platform; for gapless core tuples outside that set the core gives the
//! same polynomial.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{binomial, path_weight_sum, MultiPoly, PolyMatrix};
use crate::rtuple::RTuple;
use crate::shape::Shape;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GVMatrix {
    shape: Shape,
    beta: RTuple,
    matrix: PolyMatrix,
}

impl GVMatrix {
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn beta(&self) -> &RTuple {
        &self.beta
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn determinant(&self) -> MultiPoly {
        self.matrix.determinant()
    }

    pub fn term_count(&self) -> usize {
        self.matrix.term_count()
    }
}

/// Signed lattice offset `λ_j - j + i` (1-based `i`, `j`).
fn degree(shape: &Shape, i: usize, j: usize) -> i64 {
    shape.part(j) as i64 - j as i64 + i as i64
}

pub fn gv_matrix(shape: &Shape, beta: &RTuple) -> Result<GVMatrix> {
    check_lengths(shape, beta)?;
    beta.require_upper()?;
    let n = shape.n();
    let rows = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| path_weight_sum(degree(shape, i, j), i, beta.get(j), n))
                .collect()
        })
        .collect();
    Ok(GVMatrix {
        shape: shape.clone(),
        beta: shape.adopt(beta)?,
        matrix: PolyMatrix::new(n, rows)?,
    })
}

fn check_lengths(shape: &Shape, beta: &RTuple) -> Result<()> {
    if shape.n() != beta.n() {
        return Err(Error::domain(format!(
            "shape has {} rows but tuple has {} entries",
            shape.n(),
            beta.n()
        )));
    }
    Ok(())
}

/// How a row bound sum was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Determinant with `β` itself.
    Det,
    /// Determinant with the core of `β`.
    DetCore,
    /// Tableau enumeration.
    Tableau,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurResult {
    pub polynomial: MultiPoly,
    pub method: Method,
    pub matrix_term_count: usize,
}

/// `s_λ(β; x)` as a determinant. Requires `β` to be a gapless core λ-tuple.
/// A tuple that is not bounded by its platform is replaced by its core,
/// unless `strict` is set, in which case it is refused.
pub fn schur_via_det(shape: &Shape, beta: &RTuple, strict: bool) -> Result<SchurResult> {
    check_lengths(shape, beta)?;
    beta.require_upper()?;
    let beta = shape.adopt(beta)?;
    let flags = beta.classify()?;
    if !flags.is_gapless_core {
        return Err(Error::Refused(format!(
            "{beta} is not a gapless core tuple for shape {shape}; \
             its terminal pair is permutable and the determinant is not guaranteed"
        )));
    }
    let (input, method) = if flags.is_bounded_by_platform {
        (beta, Method::Det)
    } else if strict {
        return Err(Error::Refused(format!(
            "{beta} is not bounded by its platform; strict mode forbids substituting the core"
        )));
    } else {
        (beta.core()?, Method::DetCore)
    };
    let m = gv_matrix(shape, &input)?;
    Ok(SchurResult {
        polynomial: m.determinant(),
        method,
        matrix_term_count: m.term_count(),
    })
}

/// Total number of monomials among the entries of the determinant:
/// the sum over `(i, j)` of `C(λ_j - j + β_j, λ_j - j + i)`, with zero for a
/// negative lower index.
pub fn efficiency_count(shape: &Shape, beta: &RTuple) -> Result<u128> {
    check_lengths(shape, beta)?;
    beta.require_upper()?;
    let n = shape.n();
    let mut total = 0;
    for j in 1..=n {
        let top = degree(shape, beta.get(j), j);
        for i in 1..=n {
            total += entry_count(top, degree(shape, i, j));
        }
    }
    Ok(total)
}

fn entry_count(top: i64, bottom: i64) -> u128 {
    if bottom < 0 || top < 0 {
        0
    } else {
        binomial(top as u64, bottom as u64)
    }
}

/// A reduced fraction `(numerator, denominator)`.
pub type Ratio = (u128, u128);

/// Per-entry term-count ratio when `β` is replaced by `γ`, as a reduced
/// fraction; `None` where the `β` entry is zero.
///
/// This is the falling-factorial ratio
/// `(λ_j - j + γ_j)_{(λ_j - j + i)} / (λ_j - j + β_j)_{(λ_j - j + i)}`.
pub fn entry_reduction_ratios(
    shape: &Shape,
    beta: &RTuple,
    gamma: &RTuple,
) -> Result<Vec<Vec<Option<Ratio>>>> {
    check_lengths(shape, beta)?;
    check_lengths(shape, gamma)?;
    beta.require_upper()?;
    gamma.require_upper()?;
    let n = shape.n();
    Ok((1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let lower = degree(shape, i, j);
                    let num = entry_count(degree(shape, gamma.get(j), j), lower);
                    let den = entry_count(degree(shape, beta.get(j), j), lower);
                    (den != 0).then(|| {
                        let g = num_integer::gcd(num, den);
                        (num / g, den / g)
                    })
                })
                .collect()
        })
        .collect())
}

/// Drops to the upper-left `p × p` minor, `p = ζ_1`, when `p < n`: the last
/// `n - p` terminals coincide with their sources.
pub fn reduce_to_minor(m: &GVMatrix) -> GVMatrix {
    let p = m.shape.nonempty_rows();
    if p >= m.dim() {
        return m.clone();
    }
    GVMatrix {
        shape: m.shape.clone(),
        beta: m.beta.clone(),
        matrix: m.matrix.leading_minor(p),
    }
}

/// Splits off `(x_1 ⋯ x_n)^{λ_n}`, returning it with the shape
/// `λ - λ_n (1, …, 1)`.
pub fn factor_out_base(shape: &Shape) -> (MultiPoly, Shape) {
    let n = shape.n();
    let base = shape.part(n);
    let monomial = MultiPoly::monomial(vec![base as u32; n], 1);
    if base == 0 {
        return (monomial, shape.clone());
    }
    let parts: Vec<i64> = shape.parts().iter().map(|&p| (p - base) as i64).collect();
    let reduced = Shape::new(n, &parts).expect("subtracting the last part keeps a partition");
    (monomial, reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::complete_homogeneous;
    use crate::shape::row_bound_sum;

    fn setup(parts: &str, tuple: &[usize]) -> (Shape, RTuple) {
        let s = Shape::parse(parts).unwrap();
        let b = s.tuple(tuple.to_vec()).unwrap();
        (s, b)
    }

    #[test]
    fn matrix_entries() {
        let (s, b) = setup("1,1,0", &[3, 2, 3]);
        let m = gv_matrix(&s, &b).unwrap();
        assert_eq!(
            m.matrix().get(1, 1),
            &complete_homogeneous(1, 1, 3, 3).unwrap()
        );
        assert_eq!(m.matrix().get(1, 1).to_string(), "x1 + x2 + x3");
        assert_eq!(m.determinant().to_string(), "x1*x2 - x3^2");

        let (s, b) = setup("0,0,0", &[3, 3, 3]);
        let m = gv_matrix(&s, &b).unwrap();
        for i in 1..=3 {
            assert!(m.matrix().get(i, i).is_one());
            for j in i + 1..=3 {
                assert!(m.matrix().get(i, j).is_zero());
            }
        }

        let (s, b) = setup("2,1,0", &[3, 2, 3]);
        let m = gv_matrix(&s, &b).unwrap();
        assert_eq!(
            m.determinant().to_string(),
            "x1^2*x2 + x1*x2^2 + x1*x2*x3 - x3^3"
        );
        let (s, b) = setup("1,1,0", &[1, 1, 3]);
        assert!(gv_matrix(&s, &b).is_err());
    }

    #[test]
    fn schur_via_det_examples() {
        let (s, b) = setup("1,1,0", &[3, 2, 3]);
        let r = schur_via_det(&s, &b, false).unwrap();
        assert_eq!(r.method, Method::DetCore);
        assert_eq!(r.polynomial, row_bound_sum(&s, &b));
        assert!(matches!(
            schur_via_det(&s, &b, true),
            Err(Error::Refused(_))
        ));

        let (s, b) = setup("2,1,0", &[2, 2, 3]);
        let r = schur_via_det(&s, &b, true).unwrap();
        assert_eq!(r.method, Method::Det);
        assert_eq!(r.polynomial, row_bound_sum(&s, &b));

        let (s, b) = setup("2,1,0", &[3, 2, 3]);
        assert!(matches!(
            schur_via_det(&s, &b, false),
            Err(Error::Refused(_))
        ));
        let (s, b) = setup("2,1,0", &[1, 2, 3]);
        assert!(schur_via_det(&s, &b, false).is_ok());
        let (s, b) = setup("2,1,0", &[1, 1, 3]);
        assert!(matches!(
            schur_via_det(&s, &b, false),
            Err(Error::NotUpper { .. })
        ));
    }

    #[test]
    fn efficiency_matches_stored_terms() {
        let (s, b) = setup("1,1,0", &[3, 2, 3]);
        let m = gv_matrix(&s, &b).unwrap();
        assert_eq!(efficiency_count(&s, &b).unwrap(), m.term_count() as u128);
        assert_eq!(m.matrix().get(1, 1).term_count(), 3);
        // the empty shape: unit diagonal plus h_u(i, 3) below it
        let (s, b) = setup("0,0,0", &[3, 3, 3]);
        let m = gv_matrix(&s, &b).unwrap();
        let direct: usize = m
            .matrix()
            .rows()
            .iter()
            .flatten()
            .map(MultiPoly::term_count)
            .sum();
        assert_eq!(efficiency_count(&s, &b).unwrap(), direct as u128);
    }

    #[test]
    fn minor_reduction() {
        let (s, b) = setup("1,1,0", &[3, 2, 3]);
        let m = gv_matrix(&s, &b).unwrap();
        let r = reduce_to_minor(&m);
        assert_eq!(r.dim(), 2);
        assert_eq!(r.determinant(), m.determinant());
        let (s, b) = setup("0,0,0", &[3, 3, 3]);
        let r = reduce_to_minor(&gv_matrix(&s, &b).unwrap());
        assert_eq!(r.dim(), 0);
        assert!(r.determinant().is_one());
        let (s, b) = setup("2,1,1", &[3, 3, 3]);
        let m = gv_matrix(&s, &b).unwrap();
        assert_eq!(reduce_to_minor(&m), m);
    }

    #[test]
    fn base_factoring() {
        let s = Shape::parse("2,1,1").unwrap();
        let (mono, reduced) = factor_out_base(&s);
        assert_eq!(mono.to_string(), "x1*x2*x3");
        assert_eq!(reduced.parts(), &[1, 0, 0]);
        let s = Shape::parse("2,1,0").unwrap();
        let (mono, reduced) = factor_out_base(&s);
        assert!(mono.is_one());
        assert_eq!(reduced, s);

        let (s, b) = setup("1,1,1", &[3, 3, 3]);
        let (mono, reduced) = factor_out_base(&s);
        let b2 = reduced.adopt(&b).unwrap();
        assert_eq!(&mono * &row_bound_sum(&reduced, &b2), row_bound_sum(&s, &b));
        let lhs = &mono * &schur_via_det(&reduced, &b2, false).unwrap().polynomial;
        assert_eq!(lhs, schur_via_det(&s, &b, false).unwrap().polynomial);
    }

    #[test]
    fn reduction_ratios() {
        let (s, b) = setup("1,1,0", &[3, 2, 3]);
        let g = b.core().unwrap();
        let ratios = entry_reduction_ratios(&s, &b, &g).unwrap();
        // core is (1,2;3): entry (1,1) goes from h_1(1,3) to h_1(1,1)
        assert_eq!(ratios[0][0], Some((1, 3)));
        assert_eq!(ratios[1][1], Some((1, 1)));
        // entry (1,3) is identically zero
        assert_eq!(ratios[0][2], None);
    }
}
