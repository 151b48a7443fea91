//! Exact rational polynomials and exponential polynomials.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{binomial, pow};

/// Rational polynomial stored in the binomial basis: p(n) = Σ c_k C(n, k).
/// Integer-valued polynomials have integer coordinates in this basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    binomial_coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn from_binomial_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial {
            binomial_coeffs: coeffs,
        }
    }

    pub fn from_monomial_coeffs(coeffs: &[BigRational]) -> Self {
        // solve the triangular change of basis degree by degree
        let mut remaining = coeffs.to_vec();
        let mut out = vec![BigRational::zero(); coeffs.len()];
        for k in (0..coeffs.len()).rev() {
            let basis = binomial_monomials(k);
            // leading monomial coefficient of C(n,k) is 1/k!
            let c = &remaining[k] / &basis[k];
            for (j, b) in basis.iter().enumerate() {
                remaining[j] -= &c * b;
            }
            out[k] = c;
        }
        Self::from_binomial_coeffs(out)
    }

    pub fn zero() -> Self {
        Polynomial {
            binomial_coeffs: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.binomial_coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.binomial_coeffs.len().checked_sub(1)
    }

    pub fn binomial_coeffs(&self) -> &[BigRational] {
        &self.binomial_coeffs
    }

    pub fn eval(&self, n: usize) -> BigRational {
        self.binomial_coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(binomial(n, k))))
            .sum()
    }

    /// Coefficients c₀, c₁, … of 1, n, n², ….
    pub fn monomial_coeffs(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.binomial_coeffs.len()];
        for (k, c) in self.binomial_coeffs.iter().enumerate() {
            for (j, b) in binomial_monomials(k).into_iter().enumerate() {
                out[j] += c * b;
            }
        }
        out
    }
}

/// Monomial coefficients of C(n, k) = n(n−1)⋯(n−k+1)/k!.
fn binomial_monomials(k: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for i in 0..k {
        // multiply by (n − i)/(i + 1)
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        let shift = BigRational::from_integer(BigInt::from(i));
        let scale = BigRational::from_integer(BigInt::from(i + 1));
        for (j, c) in poly.iter().enumerate() {
            next[j + 1] += c / &scale;
            next[j] -= c * &shift / &scale;
        }
        poly = next;
    }
    poly
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.monomial_coeffs();
        let mut wrote = false;
        for (k, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})n")?,
                _ => write!(f, "({c})n^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// n ↦ Σᵢ pᵢ(n)·iⁿ for i = 1..=d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentialPolynomial {
    polys: Vec<Polynomial>,
}

impl ExponentialPolynomial {
    pub fn new(polys: Vec<Polynomial>) -> Self {
        ExponentialPolynomial { polys }
    }

    pub fn bases(&self) -> usize {
        self.polys.len()
    }

    /// pᵢ for base i (1-based).
    pub fn coefficient(&self, base: usize) -> &Polynomial {
        &self.polys[base - 1]
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn eval(&self, n: usize) -> BigRational {
        self.polys
            .iter()
            .enumerate()
            .map(|(i, p)| p.eval(n) * BigRational::from_integer(BigInt::from(pow(i + 1, n))))
            .sum()
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_biguint(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// `"p/q"` form used in reports; integers are written as `"p/1"`.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Solves the square system A x = b exactly; `None` if A is singular.
pub fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in &mut a[col][col..] {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * p;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}
