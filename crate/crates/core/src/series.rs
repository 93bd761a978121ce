//! Univariate truncated power series over the rationals.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{rat_int, Rat};

/// Coefficients indexed by degree `0..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Multiplicative inverse truncated at the same order. The constant term
    /// must be 1.
    pub fn inverse(&self) -> Result<Series, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let n = self.order();
        let mut inv = vec![Rat::zero(); n + 1];
        inv[0] = Rat::one();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &inv[k - i];
            }
            inv[k] = -acc;
        }
        Ok(Series { coeffs: inv })
    }

    pub fn mul(&self, other: &Series, order: usize) -> Series {
        let mut out = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }
}

/// Coefficients of `Q(x) = x / (1 - exp(-x))` through degree `order`.
///
/// `(1 - exp(-x))/x` has coefficients `(-1)^k / (k+1)!`; `q_series` is its
/// truncated inverse.
pub fn q_series(order: usize) -> Series {
    q_denominator(order).inverse().expect("constant term is 1")
}

/// Truncation of `(1 - exp(-x))/x` to degree `order`.
pub fn q_denominator(order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut factorial = rat_int(1);
    for k in 0..=order {
        // factorial = (k+1)! after this update
        factorial *= rat_int(k as i64 + 1);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs.push(rat_int(sign) / &factorial);
    }
    Series { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn q_series_order_zero() {
        assert_eq!(q_series(0).coeffs(), &[rat_int(1)]);
    }

    #[test]
    fn q_series_order_one() {
        assert_eq!(q_series(1).coeffs(), &[rat_int(1), rat(1, 2)]);
    }

    #[test]
    fn q_series_order_four() {
        // long division of x by the degree-5 truncation of 1 - exp(-x)
        assert_eq!(
            q_series(4).coeffs(),
            &[rat_int(1), rat(1, 2), rat(1, 12), rat_int(0), rat(-1, 720)]
        );
    }

    #[test]
    fn q_series_defining_identity() {
        // q_series(N) * truncation of (1 - exp(-x))/x is 1 through degree N
        for n in 0..=8 {
            let prod = q_series(n).mul(&q_denominator(n), n);
            assert!(prod.coeff(0).is_one());
            for k in 1..=n {
                assert!(prod.coeff(k).is_zero(), "degree {k} of order-{n} identity");
            }
        }
    }
}
