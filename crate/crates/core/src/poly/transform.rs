//! Coordinate changes: translation of a point to the origin and linear
//! substitutions `x ↦ Mx`.

use crate::error::{Error, Result};
use crate::linalg::RankPolicy;
use crate::poly::{Exponent, Polynomial};
use crate::scalar::Scalar;

fn binomial_row(n: u32) -> Vec<i64> {
    let mut row = vec![1i64];
    for k in 1..=n as i64 {
        let prev = *row.last().unwrap();
        row.push(prev * (n as i64 - k + 1) / k);
    }
    row
}

impl<F: Scalar> Polynomial<F> {
    /// `f(x + y)`. In exact mode the result is exact. In complex mode a
    /// constant term of magnitude at most `point_tol · ‖f‖∞` is zeroed.
    pub fn translate_to_point(&self, point: &[F], point_tol: f64) -> Result<Self> {
        let n = self.num_vars();
        if point.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: point.len() });
        }
        let mut out = Polynomial::zero(n);
        for (e, c) in self.terms() {
            // expand Π (x_i + y_i)^{e_i}
            let mut acc = Polynomial::constant(n, c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let binom = binomial_row(k);
                let mut factor = Polynomial::zero(n);
                let mut ypow = vec![F::one()];
                for _ in 0..k {
                    let last = ypow.last().unwrap().clone();
                    ypow.push(last * point[i].clone());
                }
                for j in 0..=k {
                    let mut ex = vec![0; n];
                    ex[i] = j;
                    let coeff = F::from_i64(binom[j as usize]) * ypow[(k - j) as usize].clone();
                    factor.add_term(Exponent::new(ex), coeff);
                }
                acc = &acc * &factor;
            }
            out = &out + &acc;
        }
        if !F::EXACT {
            let zero = Exponent::zero(n);
            let scale = self.max_coeff_magnitude();
            if out.coeff(&zero).magnitude() <= point_tol * scale {
                out.terms.remove(&zero);
            }
        }
        Ok(out)
    }
}

/// `f(Mx)`: substitutes `x_i ↦ Σ_j M[i][j] x_j`.
pub fn linear_substitution<F: Scalar>(f: &Polynomial<F>, m: &[Vec<F>]) -> Result<Polynomial<F>> {
    let n = f.num_vars();
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: m.len() });
    }
    let forms: Vec<Polynomial<F>> = m
        .iter()
        .map(|row| {
            Polynomial::from_terms(n, row.iter().enumerate().map(|(j, c)| (Exponent::unit(n, j), c.clone())))
        })
        .collect::<Result<_>>()?;
    // cache powers of each linear form
    let max_exp: Vec<u32> = (0..n)
        .map(|i| f.terms().map(|(e, _)| e.as_slice()[i]).max().unwrap_or(0))
        .collect();
    let powers: Vec<Vec<Polynomial<F>>> = forms
        .iter()
        .zip(&max_exp)
        .map(|(l, &k)| {
            let mut pw = vec![Polynomial::constant(n, F::one())];
            for _ in 0..k {
                let next = pw.last().unwrap() * l;
                pw.push(next);
            }
            pw
        })
        .collect();
    let mut out = Polynomial::zero(n);
    for (e, c) in f.terms() {
        let mut acc = Polynomial::constant(n, c.clone());
        for (i, &k) in e.as_slice().iter().enumerate() {
            if k > 0 {
                acc = &acc * &powers[i][k as usize];
            }
        }
        out = &out + &acc;
    }
    Ok(out)
}

/// Whether a square matrix is invertible (exactly, or numerically under
/// `policy`).
pub fn invertible<F: Scalar>(m: &[Vec<F>], policy: &RankPolicy) -> Result<bool> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("matrix is not square".into()));
    }
    Ok(F::kernel(m, n, policy)?.is_empty())
}
