//! Closed-form bound calculators.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::Error;

/// Parameters of the partite-cover lower bound: covering the complete
/// r-uniform hypergraph on `n` vertices by p-partite r-uniform hypergraphs
/// whose parts induce k-subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverBoundQuery {
    pub n: usize,
    pub k: usize,
    pub r: usize,
}

impl CoverBoundQuery {
    fn validate(&self) -> Result<(), Error> {
        if self.r < 2 {
            return Err(Error::InvalidParameter(format!(
                "uniformity r = {} must be >= 2",
                self.r
            )));
        }
        if self.k < self.r {
            return Err(Error::InvalidParameter(format!(
                "subset size k = {} must be >= r = {}",
                self.k, self.r
            )));
        }
        if self.n < self.k {
            return Err(Error::InvalidParameter(format!(
                "ground-set size n = {} must be >= k = {}",
                self.n, self.k
            )));
        }
        Ok(())
    }
}

/// Evaluates
/// `C(n, r-2) * (n-r+2) * ln(n-r+2) / [(k-r+2) * (n/k)^(r-1) * C(k, r-2) * ln(k-r+2)]`.
///
/// Natural logarithms throughout; at `r = 2` the expression collapses to the
/// base-independent ratio `ln(n) / ln(k)`.
pub fn partite_cover_lower_bound(q: CoverBoundQuery) -> Result<f64, Error> {
    q.validate()?;
    let (n, k, r) = (q.n, q.k, q.r);
    // k - r + 2 >= 2 given the invariants, so the denominator log is positive.
    let numerator = big_to_f64(&binomial(n, r - 2)) * (n - r + 2) as f64 * ((n - r + 2) as f64).ln();
    let denominator = (k - r + 2) as f64
        * (n as f64 / k as f64).powi((r - 1) as i32)
        * big_to_f64(&binomial(k, r - 2))
        * ((k - r + 2) as f64).ln();
    Ok(numerator / denominator)
}

/// The expected number of bad (p-1)-sized bucket sets across `x` independent
/// uniform functions: `C(b, p-1) * ((p-1)/b)^(t*x)`, as an exact rational.
///
/// A family size `x` making this value drop below 1 certifies that a covering
/// family of that size exists for every t-intersecting hypergraph.
pub fn union_bound_value(t: usize, p: usize, b: usize, x: usize) -> Result<BigRational, Error> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("p = {p} must be >= 2")));
    }
    if t < 1 || x < 1 {
        return Err(Error::InvalidParameter(format!(
            "t = {t} and x = {x} must be >= 1"
        )));
    }
    if b < p - 1 {
        return Err(Error::InvalidParameter(format!(
            "b = {b} must be >= p - 1 = {}",
            p - 1
        )));
    }
    let exponent = t * x;
    let numer = binomial(b, p - 1) * BigUint::from(p - 1).pow(exponent as u32);
    let denom = BigUint::from(b).pow(exponent as u32);
    Ok(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result *= BigUint::from(n - i);
        result /= BigUint::from(i + 1);
    }
    result
}

fn big_to_f64(x: &BigUint) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::INFINITY)
}
