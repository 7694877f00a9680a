//! Dense kernels, echelon forms and span membership.
//!
//! Two independent back ends: exact Gauss-Jordan elimination over the
//! rationals, and SVD-based numerical rank decisions over the complex
//! doubles. Matrices are plain row-major `Vec<Vec<_>>`.

use crate::error::{Error, Result};

/// How numerical rank is decided.
///
/// Exact scalars ignore the policy. For complex scalars a singular value
/// `σ` counts as zero when `σ < tol · σ_max`; a value in
/// `[tol · σ_max / 10, tol · σ_max]` has no clear gap and is reported as
/// [`Error::RankAmbiguity`]. A matrix whose largest singular value is at or
/// below `floor` is treated as zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankPolicy {
    pub tol: f64,
    pub floor: Option<f64>,
}

impl Default for RankPolicy {
    fn default() -> Self {
        RankPolicy { tol: 1e-8, floor: None }
    }
}

impl RankPolicy {
    pub fn new(tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::InvalidArgument(format!("rank tolerance {tol} must lie in (0, 1)")));
        }
        Ok(RankPolicy { tol, floor: None })
    }

    pub fn with_floor(mut self, floor: f64) -> Self {
        self.floor = Some(floor);
        self
    }
}

pub mod exact {
    use num_traits::{One, Zero};

    use crate::scalar::Rational;

    /// Gauss-Jordan elimination. Returns the nonzero rows of the reduced
    /// row echelon form together with their pivot columns.
    pub fn rref(mut a: Vec<Vec<Rational>>, ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let m = a.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..ncols {
            if r == m {
                break;
            }
            let Some(found) = (r..m).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, found);
            let inv = Rational::one() / a[r][col].clone();
            for v in a[r].iter_mut().skip(col) {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (j, p) in pivot_row.iter().enumerate().skip(col) {
                    if !p.is_zero() {
                        row[j] = &row[j] - &(&factor * p);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        a.truncate(r);
        (a, pivots)
    }

    pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
        let (red, pivots) = rref(rows.to_vec(), ncols);
        let mut is_pivot = vec![false; ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); ncols];
                v[free] = Rational::one();
                for (row, &p) in red.iter().zip(&pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }

    pub fn echelon(rows: &[Vec<Rational>], ncols: usize) -> Vec<(usize, Vec<Rational>)> {
        let (red, pivots) = rref(rows.to_vec(), ncols);
        pivots.into_iter().zip(red).collect()
    }

    pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
        let ncols = v.len();
        let (red, pivots) = rref(basis.to_vec(), ncols);
        let mut v = v.to_vec();
        for (row, &p) in red.iter().zip(&pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    v[j] = &v[j] - &(&f * x);
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

pub mod numeric {
    use nalgebra::DMatrix;

    use super::RankPolicy;
    use crate::error::{Error, Result};
    use crate::scalar::Complex;

    fn zero() -> Complex {
        Complex::new(0.0, 0.0)
    }

    fn norm(v: &[Complex]) -> f64 {
        v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Singular values (descending) and the full right factor `Vᴴ`.
    fn svd_right(rows: &[Vec<Complex>], ncols: usize, pad: bool) -> (Vec<f64>, Vec<Vec<Complex>>) {
        let m = if pad { rows.len().max(ncols) } else { rows.len() };
        let mut mat = DMatrix::<Complex>::zeros(m, ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                mat[(i, j)] = x;
            }
        }
        let svd = mat.svd(false, true);
        let vt = svd.v_t.expect("right singular vectors requested");
        let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
        order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
        let sv = order.iter().map(|&i| svd.singular_values[i]).collect();
        let vrows = order
            .iter()
            .map(|&i| (0..ncols).map(|j| vt[(i, j)]).collect())
            .collect();
        (sv, vrows)
    }

    /// `σ_max / σ_min` of a square matrix; infinite when singular.
    pub fn condition_number(m: &[Vec<Complex>]) -> f64 {
        let (sv, _) = svd_right(m, m.len(), false);
        match (sv.first(), sv.last()) {
            (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
            _ => f64::INFINITY,
        }
    }

    /// Number of singular values above the threshold, with the gap check.
    fn numerical_rank(sv: &[f64], policy: &RankPolicy) -> Result<usize> {
        let smax = sv.first().copied().unwrap_or(0.0);
        if smax == 0.0 || policy.floor.is_some_and(|f| smax <= f) {
            return Ok(0);
        }
        let threshold = policy.tol * smax;
        if let Some(&value) = sv.iter().find(|&&s| s >= threshold / 10.0 && s <= threshold) {
            return Err(Error::RankAmbiguity { value, threshold });
        }
        Ok(sv.iter().filter(|&&s| s > threshold).count())
    }

    pub fn kernel(rows: &[Vec<Complex>], ncols: usize, policy: &RankPolicy) -> Result<Vec<Vec<Complex>>> {
        if ncols == 0 {
            return Ok(Vec::new());
        }
        if rows.is_empty() {
            return Ok(identity(ncols));
        }
        let (sv, vrows) = svd_right(rows, ncols, true);
        let rank = numerical_rank(&sv, policy)?;
        if rank == 0 {
            return Ok(identity(ncols));
        }
        Ok(vrows[rank..]
            .iter()
            .map(|r| r.iter().map(|z| z.conj()).collect())
            .collect())
    }

    fn identity(n: usize) -> Vec<Vec<Complex>> {
        (0..n)
            .map(|i| {
                let mut v = vec![zero(); n];
                v[i] = Complex::new(1.0, 0.0);
                v
            })
            .collect()
    }

    /// Orthonormal basis of the row span.
    pub fn row_space(rows: &[Vec<Complex>], ncols: usize, policy: &RankPolicy) -> Result<Vec<Vec<Complex>>> {
        if rows.is_empty() || ncols == 0 {
            return Ok(Vec::new());
        }
        let (sv, vrows) = svd_right(rows, ncols, false);
        let rank = numerical_rank(&sv, policy)?;
        Ok(vrows.into_iter().take(rank).collect())
    }

    /// Echelon form by successive orthogonal restriction: at each column the
    /// remaining subspace is split into the direction of largest weight on
    /// that coordinate and its orthonormal complement vanishing there.
    pub fn echelon(rows: &[Vec<Complex>], ncols: usize, policy: &RankPolicy) -> Result<Vec<(usize, Vec<Complex>)>> {
        let mut w = row_space(rows, ncols, policy)?;
        let mut out: Vec<(usize, Vec<Complex>)> = Vec::with_capacity(w.len());
        for col in 0..ncols {
            if w.is_empty() {
                break;
            }
            let a: Vec<Complex> = w.iter().map(|r| r[col]).collect();
            let na = norm(&a);
            if na <= policy.tol {
                continue;
            }
            let u: Vec<Complex> = a.iter().map(|z| z.conj() / na).collect();
            let pivot = combine(&w, &u, ncols);
            let complement = orthonormal_complement(&u);
            w = complement.iter().map(|t| combine(&w, t, ncols)).collect();
            out.push((col, pivot));
        }

        let pivots: Vec<usize> = out.iter().map(|(c, _)| *c).collect();
        for j in (0..out.len()).rev() {
            let (cj, pj) = out[j].clone();
            for (_, pi) in out.iter_mut().take(j) {
                let f = pi[cj] / pj[cj];
                if f.norm() != 0.0 {
                    for (x, y) in pi.iter_mut().zip(&pj) {
                        *x -= f * y;
                    }
                }
            }
        }
        let chop = policy.tol * 1e-3;
        for (c, p) in out.iter_mut() {
            for x in p.iter_mut().take(*c) {
                *x = zero();
            }
            for &other in &pivots {
                if other != *c {
                    p[other] = zero();
                }
            }
            let phase = p[*c].conj() / p[*c].norm();
            let n = norm(p);
            for x in p.iter_mut() {
                *x = *x * phase / n;
                if x.norm() < chop {
                    *x = zero();
                }
            }
            p[*c] = Complex::new(p[*c].re, 0.0);
        }
        Ok(out)
    }

    fn combine(w: &[Vec<Complex>], coeffs: &[Complex], ncols: usize) -> Vec<Complex> {
        let mut v = vec![zero(); ncols];
        for (row, &c) in w.iter().zip(coeffs) {
            if c.norm() == 0.0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x += c * y;
            }
        }
        v
    }

    /// Orthonormal basis of `{ t : uᴴ t = 0 }` for a unit vector `u`.
    fn orthonormal_complement(u: &[Complex]) -> Vec<Vec<Complex>> {
        let m = u.len();
        let mut basis: Vec<Vec<Complex>> = vec![u.to_vec()];
        for i in 0..m {
            let mut t = vec![zero(); m];
            t[i] = Complex::new(1.0, 0.0);
            // two passes of Gram-Schmidt
            for _ in 0..2 {
                for b in &basis {
                    let dot: Complex = b.iter().zip(&t).map(|(x, y)| x.conj() * y).sum();
                    for (x, y) in t.iter_mut().zip(b) {
                        *x -= dot * y;
                    }
                }
            }
            let n = norm(&t);
            if n > 1e-6 {
                basis.push(t.into_iter().map(|x| x / n).collect());
            }
            if basis.len() == m {
                break;
            }
        }
        basis.into_iter().skip(1).collect()
    }

    pub fn span_residual(basis: &[Vec<Complex>], v: &[Complex], policy: &RankPolicy) -> Result<f64> {
        let nv = norm(v);
        if nv == 0.0 {
            return Ok(0.0);
        }
        let q = row_space(basis, v.len(), policy)?;
        let mut r = v.to_vec();
        for b in &q {
            let dot: Complex = b.iter().zip(v).map(|(x, y)| x.conj() * y).sum();
            for (x, y) in r.iter_mut().zip(b) {
                *x -= dot * y;
            }
        }
        Ok(norm(&r) / nv)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::scalar::{Complex, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn exact_kernel_of_rank_one() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let k = exact::kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot = v.iter().zip(&rows[0]).fold(q(0), |acc, (a, b)| acc + a * b);
            assert_eq!(dot, q(0));
        }
    }

    #[test]
    fn numeric_kernel_matches_exact_dimension() {
        let rows = vec![vec![c(1.0), c(2.0), c(3.0)], vec![c(2.0), c(4.0), c(6.0)]];
        let k = numeric::kernel(&rows, 3, &RankPolicy::default()).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Complex = v.iter().zip(&rows[0]).map(|(a, b)| a * b).sum();
            assert!(dot.norm() < 1e-12);
        }
    }

    #[test]
    fn ambiguous_gap_is_reported() {
        let rows = vec![vec![c(1.0), c(0.0)], vec![c(0.0), c(5e-9)]];
        let err = numeric::kernel(&rows, 2, &RankPolicy::default()).unwrap_err();
        assert!(matches!(err, Error::RankAmbiguity { .. }));
    }

    #[test]
    fn numeric_echelon_is_reduced() {
        let rows = vec![vec![c(1.0), c(1.0), c(0.0)], vec![c(1.0), c(0.0), c(1.0)]];
        let e = numeric::echelon(&rows, 3, &RankPolicy::default()).unwrap();
        assert_eq!(e.iter().map(|(p, _)| *p).collect::<Vec<_>>(), vec![0, 1]);
        assert!(e[0].1[1].norm() < 1e-14);
        assert!(e[1].1[0].norm() < 1e-14);
    }

    #[test]
    fn exact_echelon_prunes_dependent_rows() {
        let rows = vec![vec![q(1), q(0)], vec![q(2), q(0)]];
        let e = exact::echelon(&rows, 2);
        assert_eq!(e, vec![(0, vec![q(1), q(0)])]);
    }

    #[test]
    fn policy_rejects_out_of_range_tolerance() {
        assert!(RankPolicy::new(0.0).is_err());
        assert!(RankPolicy::new(1.5).is_err());
        assert!(RankPolicy::new(1e-6).is_ok());
    }
}
