//! Dense univariate polynomials over an exact or floating scalar.

use crate::exact::Scalar;

/// Coefficients in ascending degree order. The zero polynomial is `[0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero_val()) == Some(true) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(S::zero());
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::new(vec![S::zero()])
    }

    pub fn one() -> Self {
        Poly::new(vec![S::one()])
    }

    pub fn constant(c: S) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly::new(vec![S::zero(), S::one()])
    }

    /// `t - alpha`.
    pub fn linear_root(alpha: S) -> Self {
        Poly::new(vec![-alpha, S::one()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_val())
    }

    pub fn eval(&self, t: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, s: &S) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Poly::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_val() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = vec![S::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QExt;

    #[test]
    fn product_of_roots() {
        // (t-2)(t+3) = t^2 + t - 6
        let p = Poly::linear_root(QExt::from_int(2)).mul(&Poly::linear_root(QExt::from_int(-3)));
        assert_eq!(p.coeff(0), QExt::from_int(-6));
        assert_eq!(p.coeff(1), QExt::from_int(1));
        assert_eq!(p.coeff(2), QExt::from_int(1));
        assert_eq!(p.eval(&QExt::from_int(2)), QExt::from_int(0));
    }

    #[test]
    fn normalization_trims_leading_zeros() {
        let p = Poly::new(vec![QExt::from_int(1), QExt::from_int(0), QExt::from_int(0)]);
        assert_eq!(p.degree(), 0);
    }
}
