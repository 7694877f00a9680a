use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::RankPolicy;
use crate::poly::transform::{invertible, linear_substitution};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// An ideal given by a nonempty list of nonzero generators in a common ring.
#[derive(Debug, Clone, PartialEq)]
pub struct Ideal<F: Scalar> {
    num_vars: usize,
    generators: Vec<Polynomial<F>>,
}

impl<F: Scalar> Ideal<F> {
    pub fn new(num_vars: usize, generators: Vec<Polynomial<F>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for (index, g) in generators.iter().enumerate() {
            if g.num_vars() != num_vars {
                return Err(Error::DimensionMismatch { expected: num_vars, found: g.num_vars() });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator { index });
            }
        }
        Ok(Ideal { num_vars, generators })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn degree_sum(&self) -> u32 {
        self.generators.iter().filter_map(Polynomial::degree).sum()
    }

    /// The ideal with `extra` appended to the generators.
    pub fn augmented(&self, extra: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ideal::new(self.num_vars, gens)
    }

    /// Fails with [`Error::PointNotOnVariety`] on the first generator with a
    /// nonzero constant term.
    pub fn check_vanishes_at_origin(&self) -> Result<()> {
        for (index, g) in self.generators.iter().enumerate() {
            let c = g.constant_term();
            if !c.is_zero() {
                return Err(Error::PointNotOnVariety { index, magnitude: c.magnitude() });
            }
        }
        Ok(())
    }

    /// Moves `point` to the origin. Every translated generator must vanish
    /// at the origin (up to `point_tol` relative to its largest coefficient
    /// in complex mode).
    pub fn translate_to_point(&self, point: &[F], point_tol: f64) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.translate_to_point(point, point_tol))
            .collect::<Result<Vec<_>>>()?;
        let out = Ideal::new(self.num_vars, gens)?;
        out.check_vanishes_at_origin()?;
        Ok(out)
    }

    /// Composes every generator with `x ↦ Mx`.
    pub fn apply_linear_change(&self, m: &[Vec<F>], policy: &RankPolicy) -> Result<Self> {
        if m.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: m.len() });
        }
        if !invertible(m, policy)? {
            return Err(Error::SingularChange);
        }
        let gens = self
            .generators
            .iter()
            .map(|g| linear_substitution(g, m))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.num_vars, gens)
    }

    /// Generators scaled so each has largest coefficient magnitude 1.
    pub fn normalized(&self) -> Self {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let s = g.max_coeff_magnitude();
                if F::EXACT || s == 0.0 {
                    g.clone()
                } else {
                    g.scale(&F::from_complex(crate::scalar::Complex::new(1.0 / s, 0.0)).unwrap())
                }
            })
            .collect();
        Ideal { num_vars: self.num_vars, generators: gens }
    }

    /// Short hex digest of the generators, for provenance in reports.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(F::MODE.as_bytes());
        for g in &self.generators {
            for (e, c) in g.terms() {
                h.update(format!("{e:?}:{c};").as_bytes());
            }
            h.update(b"|");
        }
        h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Exponent;
    use crate::scalar::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn rejects_empty_and_zero_generators() {
        assert_eq!(Ideal::<Rational>::new(2, vec![]).unwrap_err(), Error::EmptyIdeal);
        let err = Ideal::new(2, vec![Polynomial::<Rational>::variable(2, 0), Polynomial::zero(2)]).unwrap_err();
        assert_eq!(err, Error::ZeroGenerator { index: 1 });
    }

    #[test]
    fn point_off_variety_is_rejected() {
        let f = Polynomial::from_terms(1, vec![(Exponent::from([1]), q(1)), (Exponent::from([0]), q(-1))]).unwrap();
        let i = Ideal::new(1, vec![f]).unwrap();
        assert!(i.translate_to_point(&[q(1)], 0.0).is_ok());
        assert!(matches!(i.translate_to_point(&[q(2)], 0.0), Err(Error::PointNotOnVariety { .. })));
    }

    #[test]
    fn identity_change_is_a_no_op() {
        let f = Polynomial::from_terms(2, vec![(Exponent::from([2, 1]), q(3)), (Exponent::from([0, 1]), q(1))]).unwrap();
        let i = Ideal::new(2, vec![f]).unwrap();
        let id = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert_eq!(i.apply_linear_change(&id, &RankPolicy::default()).unwrap(), i);
        let sing = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert_eq!(i.apply_linear_change(&sing, &RankPolicy::default()).unwrap_err(), Error::SingularChange);
    }

    #[test]
    fn fingerprint_is_stable() {
        let i = Ideal::new(1, vec![Polynomial::<Rational>::variable(1, 0)]).unwrap();
        assert_eq!(i.fingerprint(), i.clone().fingerprint());
        assert_eq!(i.fingerprint().len(), 16);
    }
}
