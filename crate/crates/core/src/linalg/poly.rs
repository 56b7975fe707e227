use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::big_gcd;
use super::{RatMatrix, Rational, SparseEchelon};

/// Dense univariate polynomial over the rationals, coefficients low to high.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Divides by `(x - r)`, assuming `r` is a root.
    fn deflate(&self, r: &Rational) -> Poly {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n.saturating_sub(1)];
        let mut carry = Rational::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + &(&carry * r);
            out[i - 1] = carry.clone();
        }
        Poly::new(out)
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d * d != n {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    Some(divs)
}

/// Rational roots with multiplicities, in increasing order.
///
/// Candidates come from the rational root theorem. If the cleared integer
/// coefficients are too large to enumerate divisors, only the root 0 is
/// detected.
pub fn rational_roots(p: &Poly) -> Vec<(Rational, usize)> {
    let mut roots = Vec::new();
    let mut p = p.clone();
    if p.degree().is_none_or(|d| d == 0) {
        return roots;
    }
    let zero_mult = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
        p = Poly::new(p.coeffs[zero_mult..].to_vec());
    }
    if p.degree() == Some(0) {
        return roots;
    }
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in &p.coeffs {
        let d = c.denom();
        let g = big_gcd(&lcm, &d);
        lcm = &lcm * &d / g;
    }
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let (Some(ps), Some(qs)) = (small_divisors(&ints[0]), small_divisors(ints.last().unwrap())) else {
        return roots;
    };
    let mut candidates: Vec<Rational> = Vec::new();
    for &num in &ps {
        for &den in &qs {
            let r = Rational::from_bigints(BigInt::from(num), BigInt::from(den));
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        let mut mult = 0;
        while p.degree().is_some_and(|d| d > 0) && p.eval(&r).is_zero() {
            p = p.deflate(&r);
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    roots
}

/// Minimal polynomial of a block-diagonal endomorphism given by its square
/// diagonal blocks. Monic.
pub fn minimal_polynomial(blocks: &[RatMatrix]) -> Poly {
    let flat = |bs: &[RatMatrix]| -> Vec<Rational> {
        bs.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    };
    let len: usize = blocks.iter().map(|b| b.rows() * b.cols()).sum();
    if len == 0 {
        return Poly::new(vec![Rational::one()]);
    }
    let mut powers: Vec<Vec<RatMatrix>> = vec![blocks.iter().map(|b| RatMatrix::identity(b.rows())).collect()];
    let mut echelon = SparseEchelon::new(len);
    echelon.insert_dense(&flat(&powers[0]));
    loop {
        let next: Vec<RatMatrix> =
            powers.last().unwrap().iter().zip(blocks).map(|(p, b)| p.mul(b)).collect();
        let v = flat(&next);
        if echelon.contains(&v) {
            let basis: Vec<Vec<Rational>> = powers.iter().map(|p| flat(p)).collect();
            let a = RatMatrix::from_columns(len, &basis);
            let c = a.solve(&v).expect("dependent power lies in span");
            let mut coeffs: Vec<Rational> = c.iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return Poly::new(coeffs);
        }
        echelon.insert_dense(&v);
        powers.push(next);
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl std::ops::Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    #[test]
    fn roots_with_multiplicity() {
        // (x - 1)^2 (2x + 3) x = 2x^4 - x^3 - 4x^2 + 3x
        let p = poly(&[0, 3, -4, -1, 2]);
        let roots = rational_roots(&p);
        assert_eq!(
            roots,
            vec![(Rational::new(-3, 2), 1), (Rational::zero(), 1), (Rational::one(), 2)]
        );
        assert!(rational_roots(&poly(&[-2, 0, 1])).is_empty());
    }

    #[test]
    fn minimal_polynomial_of_projection_and_nilpotent() {
        let p = RatMatrix::from_i64_rows(&[vec![1, 0], vec![0, 0]]);
        assert_eq!(minimal_polynomial(&[p]), poly(&[0, -1, 1]));
        let n = RatMatrix::from_i64_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(minimal_polynomial(&[n]), poly(&[0, 0, 0, 1]));
        let id = RatMatrix::identity(2);
        let two = RatMatrix::identity(1).scale(&Rational::from_integer(2));
        assert_eq!(minimal_polynomial(&[id, two]), poly(&[2, -3, 1]));
    }
}
