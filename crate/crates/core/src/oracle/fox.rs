//! Abelianization and the single-variable Alexander polynomial.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::diagram::gauss::GaussCode;
use crate::error::{Error, Result};
use crate::presentation::{GroupPresentation, Shape};
use crate::word::{Generator, Word};

use super::laurent::LaurentPolynomial;
use super::matrix::{smith_normal_form, IntegerMatrix};

/// `H_1` of the presented group: `ℤ^free_rank ⊕ ⨁ ℤ/d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

pub fn exponent_matrix(g: &GroupPresentation) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> = g.exponent_matrix().iter().map(|r| r.to_vec()).collect();
    if rows.is_empty() {
        return IntegerMatrix::zeros(0, g.generators.len());
    }
    IntegerMatrix::from_rows(&rows)
}

pub fn abelianization(g: &GroupPresentation) -> Abelianization {
    let snf = smith_normal_form(&exponent_matrix(g));
    let rank = snf.rank();
    Abelianization {
        free_rank: g.generators.len() - rank,
        torsion: snf
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .map(|d| d.to_string())
            .collect(),
    }
}

/// Images of the generators in `H_1 = ℤ` of a knot group, with the first
/// generator sent to `+1`.
pub fn meridian_images(g: &GroupPresentation) -> Result<[i64; 3]> {
    let snf = smith_normal_form(&exponent_matrix(g));
    let kernel = snf.kernel();
    if kernel.len() != 1 || snf.diagonal().iter().any(|d| d.abs() > BigInt::one()) {
        return Err(Error::DegeneratePresentation(format!(
            "{}: abelianization is not infinite cyclic",
            g.form
        )));
    }
    let mut h: Vec<i64> = kernel[0].iter().map(|x| x.to_i64().unwrap()).collect();
    if h.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        h.iter_mut().for_each(|x| *x = -*x);
    }
    Ok([h[0], h[1], h[2]])
}

/// `∂w/∂x` pushed to `ℤ[t^±1]` along `g ↦ t^{images[g]}`.
pub fn fox_derivative(w: &Word, x: Generator, images: &[i64; 3]) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    let mut prefix = 0i64;
    for l in w.letters() {
        let h = images[l.gen.index()];
        if l.gen == x {
            if l.exp > 0 {
                out.add_term(prefix, BigInt::one());
            } else {
                out.add_term(prefix - h, -BigInt::one());
            }
        }
        prefix += l.exp as i64 * h;
    }
    out
}

fn det2(m: &[[LaurentPolynomial; 2]; 2]) -> LaurentPolynomial {
    &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
}

/// Alexander polynomial of a 3-generator knot presentation.
///
/// The longest relator is dropped if three are present; each of the three
/// 2×2 minors must be nonzero and the minors must agree up to `±t^j`.
pub fn alexander_polynomial(g: &GroupPresentation) -> Result<LaurentPolynomial> {
    if g.shape != Shape::Knot {
        return Err(Error::NotAKnot {
            form: g.form,
            components: g.shape.components(),
        });
    }
    let images = meridian_images(g)?;
    let g2 = if g.relators.len() == 3 { g.drop_longest() } else { g.clone() };
    if g2.relators.len() != 2 {
        return Err(Error::DegeneratePresentation(format!(
            "{}: expected 2 relators after dropping one, found {}",
            g.form,
            g2.relators.len()
        )));
    }
    let fox: Vec<[LaurentPolynomial; 3]> = g2
        .relators
        .iter()
        .map(|r| Generator::ALL.map(|x| fox_derivative(r, x, &images)))
        .collect();
    let mut minors = Vec::with_capacity(3);
    for drop in 0..3 {
        let cols: Vec<usize> = (0..3).filter(|&c| c != drop).collect();
        let m = [0, 1].map(|r| [fox[r][cols[0]].clone(), fox[r][cols[1]].clone()]);
        minors.push(det2(&m));
    }
    if minors.iter().all(LaurentPolynomial::is_zero) {
        return Err(Error::DegeneratePresentation(format!(
            "{}: every Fox minor vanishes",
            g.form
        )));
    }
    let first = minors[0].normalize();
    if minors.iter().any(|m| m.normalize() != first) {
        let shown: Vec<String> = minors.iter().map(|m| m.normalize().to_string()).collect();
        return Err(Error::Internal(format!(
            "{}: Fox minors disagree: {}",
            g.form,
            shown.join(" | ")
        )));
    }
    Ok(first)
}

/// Determinant by fraction-free elimination; divisions are exact.
pub fn bareiss_determinant(mut m: Vec<Vec<LaurentPolynomial>>) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut sign = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).unwrap_or_else(|| {
                    if num.is_zero() {
                        LaurentPolynomial::zero()
                    } else {
                        panic!("inexact Bareiss step")
                    }
                });
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Alexander polynomial from the Wirtinger matrix of a signed Gauss code of
/// a knot diagram.
pub fn alexander_from_gauss(code: &GaussCode) -> Result<LaurentPolynomial> {
    if code.components.len() != 1 {
        return Err(Error::DegeneratePresentation(format!(
            "Gauss code has {} components",
            code.components.len()
        )));
    }
    let entries = &code.components[0];
    let n = code.crossing_count();
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let unders: Vec<usize> = (0..entries.len()).filter(|&j| !entries[j].over).collect();
    let k = unders.len();
    if k != n {
        return Err(Error::Internal(format!(
            "Gauss code has {k} under-passes for {n} crossings"
        )));
    }
    // arc r starts just after the r-th under-pass
    let arc_at = |j: usize| -> usize {
        let before = unders.iter().filter(|&&u| u < j).count();
        (before + k - 1) % k
    };
    let mut over_arc = vec![usize::MAX; n + 1];
    let mut in_arc = vec![usize::MAX; n + 1];
    let mut sign = vec![0i8; n + 1];
    for (j, e) in entries.iter().enumerate() {
        if e.over {
            over_arc[e.crossing] = arc_at(j);
        } else {
            in_arc[e.crossing] = arc_at(j);
        }
        sign[e.crossing] = e.sign;
    }
    let t = LaurentPolynomial::monomial(1, 1);
    let one = LaurentPolynomial::one();
    let one_minus_t = &one - &t;
    let mut rows = vec![vec![LaurentPolynomial::zero(); k]; n];
    for c in 1..=n {
        let row = &mut rows[c - 1];
        let (o, i) = (over_arc[c], in_arc[c]);
        let out = (i + 1) % k;
        row[o] = &row[o] + &one_minus_t;
        if sign[c] > 0 {
            row[i] = &row[i] + &t;
            row[out] = &row[out] - &one;
        } else {
            row[i] = &row[i] - &one;
            row[out] = &row[out] + &t;
        }
    }
    let minor: Vec<Vec<LaurentPolynomial>> = rows[..n - 1]
        .iter()
        .map(|r| r[..k - 1].to_vec())
        .collect();
    let det = bareiss_determinant(minor);
    if det.is_zero() {
        return Err(Error::DegeneratePresentation(
            "Wirtinger minor vanishes".into(),
        ));
    }
    Ok(det.normalize())
}

/// `Δ(1)` as a machine integer, for sanity checks.
pub fn value_at_one(p: &LaurentPolynomial) -> i64 {
    p.eval_at_one().to_i64().unwrap_or(i64::MAX)
}

/// True when the polynomial is `±1` at `t = 1`.
pub fn is_unit_at_one(p: &LaurentPolynomial) -> bool {
    p.eval_at_one().abs().is_one()
}
