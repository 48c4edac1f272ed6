//! Exact integer polynomials, characteristic polynomials and real-root isolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    /// Exact evaluation by Horner's rule.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn evaluate_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn evaluate_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// All real roots with multiplicity, sorted descending, each located to within `tol`.
    pub fn real_roots(&self, tol: f64) -> Vec<f64> {
        let p = RatPoly::from_int(self);
        if p.is_zero() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        for (mult, factor) in p.squarefree_decomposition() {
            for r in factor.isolate_roots(tol) {
                roots.extend(std::iter::repeat_n(r, mult));
            }
        }
        roots.sort_by(|a, b| b.total_cmp(a));
        roots
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // integer coefficient array, ascending degree
        match self.to_i64s() {
            Some(v) => v.serialize(s),
            None => self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().serialize(s),
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Characteristic polynomial `det(xI - M)` of a square integer matrix.
///
/// Faddeev–LeVerrier recurrence carried out in exact integer arithmetic;
/// every division by `k` is exact.
pub fn char_poly(m: &[i64], dim: usize) -> Result<IntPolynomial> {
    if dim > 64 || m.len() != dim * dim {
        return Err(Error::Dimension(dim));
    }
    let a: Vec<BigInt> = m.iter().map(|&x| BigInt::from(x)).collect();
    let mut coeffs = vec![BigInt::zero(); dim + 1];
    coeffs[dim] = BigInt::one();
    // running matrix M_k, starting from M_0 = 0
    let mut mk = vec![BigInt::zero(); dim * dim];
    for k in 1..=dim {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut s = BigInt::zero();
                for l in 0..dim {
                    if !a[i * dim + l].is_zero() && !mk[l * dim + j].is_zero() {
                        s += &a[i * dim + l] * &mk[l * dim + j];
                    }
                }
                next[i * dim + j] = s;
            }
            next[i * dim + i] += &coeffs[dim - k + 1];
        }
        mk = next;
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = BigInt::zero();
        for i in 0..dim {
            for l in 0..dim {
                tr += &a[i * dim + l] * &mk[l * dim + i];
            }
        }
        coeffs[dim - k] = -tr / BigInt::from(k);
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Rational polynomial used internally for gcds and Sturm sequences.
#[derive(Clone, Debug, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn from_int(p: &IntPolynomial) -> Self {
        RatPoly(p.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect()).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            Some(lead) => RatPoly(self.0.iter().map(|c| c / lead).collect()),
            None => self.clone(),
        }
    }

    fn derivative(&self) -> Self {
        RatPoly(
            self.0.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect(),
        )
        .trimmed()
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let z = BigRational::zero();
        RatPoly((0..len).map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z)).collect()).trimmed()
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.0.clone();
        let dd = d.degree();
        let lead = d.0.last().unwrap().clone();
        if self.is_zero() || self.degree() < dd {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (RatPoly(quot).trimmed(), RatPoly(rem).trimmed())
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Yun's algorithm: `(multiplicity, squarefree factor)` pairs.
    fn squarefree_decomposition(&self) -> Vec<(usize, RatPoly)> {
        let mut out = Vec::new();
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((i, a.clone()));
            }
            b = b.div_rem(&a).0;
            let c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    fn sturm_sequence(&self) -> Vec<RatPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(RatPoly(r.0.iter().map(|c| -c).collect()));
        }
        seq
    }

    /// Roots of a squarefree polynomial, by Sturm counting and exact bisection.
    fn isolate_roots(&self, tol: f64) -> Vec<f64> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let sturm = self.sturm_sequence();
        let variations = |x: &BigRational| -> usize {
            let signs: Vec<i32> = sturm
                .iter()
                .map(|p| {
                    let v = p.eval(x);
                    if v.is_positive() {
                        1
                    } else if v.is_negative() {
                        -1
                    } else {
                        0
                    }
                })
                .filter(|&s| s != 0)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        // Cauchy bound
        let lead = self.0.last().unwrap().abs();
        let bound = self.0[..self.0.len() - 1].iter().map(|c| c.abs() / &lead).fold(BigRational::zero(), |m, c| {
            if c > m {
                c
            } else {
                m
            }
        }) + BigRational::one();
        let tol = BigRational::from_float(tol).expect("finite tolerance");
        let two = BigRational::from_integer(BigInt::from(2));

        let mut roots = Vec::new();
        // intervals (lo, hi] with their root counts
        let lo0 = -bound.clone();
        let mut stack = vec![(lo0.clone(), bound.clone(), variations(&lo0) - variations(&bound))];
        while let Some((lo, hi, count)) = stack.pop() {
            if count == 0 {
                continue;
            }
            if count == 1 {
                roots.push(self.refine(lo, hi, &tol));
                continue;
            }
            let mid = (&lo + &hi) / &two;
            let vm = variations(&mid);
            let left = variations(&lo) - vm;
            stack.push((lo, mid.clone(), left));
            stack.push((mid, hi, count - left));
        }
        roots
    }

    /// Bisect the single root in `(lo, hi]`.
    fn refine(&self, mut lo: BigRational, mut hi: BigRational, tol: &BigRational) -> f64 {
        let two = BigRational::from_integer(BigInt::from(2));
        if self.eval(&hi).is_zero() {
            return hi.to_f64().unwrap_or(f64::NAN);
        }
        let hi_sign = self.eval(&hi).is_positive();
        while &hi - &lo > *tol {
            let mid = (&lo + &hi) / &two;
            let v = self.eval(&mid);
            if v.is_zero() {
                return mid.to_f64().unwrap_or(f64::NAN);
            }
            if v.is_positive() == hi_sign {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        ((lo + hi) / two).to_f64().unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn identity_char_poly() {
        let p = char_poly(&[1, 0, 0, 1], 2).unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&[1, -2, 1]));
        assert!(p.is_monic());
    }

    #[test]
    fn empty_and_oversized() {
        assert_eq!(char_poly(&[], 0).unwrap(), IntPolynomial::from_i64s(&[1]));
        assert_eq!(char_poly(&[0; 3], 2), Err(Error::Dimension(2)));
        assert_eq!(char_poly(&vec![0; 65 * 65], 65), Err(Error::Dimension(65)));
    }

    #[test]
    fn triangle_char_poly() {
        // K3: (x - 2)(x + 1)^2 = x^3 - 3x - 2
        let k3 = [0, 1, 1, 1, 0, 1, 1, 1, 0];
        assert_eq!(char_poly(&k3, 3).unwrap(), IntPolynomial::from_i64s(&[-2, -3, 0, 1]));
    }

    #[test]
    fn evaluation_is_exact() {
        let p = IntPolynomial::from_i64s(&[7, 0, 3]);
        assert_eq!(p.evaluate(&BigRational::zero()), rat(7, 1));
        assert_eq!(p.evaluate(&rat(-6, 5)), rat(7 * 25 + 3 * 36, 25));
        assert_eq!(p.evaluate_int(2), BigInt::from(19));
    }

    #[test]
    fn roots_with_multiplicity() {
        // (x - 2)(x + 1)^2
        let r = IntPolynomial::from_i64s(&[-2, -3, 0, 1]).real_roots(1e-12);
        assert_eq!(r.len(), 3);
        assert!((r[0] - 2.0).abs() < 1e-12);
        assert!((r[1] + 1.0).abs() < 1e-12 && (r[2] + 1.0).abs() < 1e-12);
        // x^2 - 2 has roots +-sqrt 2; x^2 + 1 has none
        let s = IntPolynomial::from_i64s(&[-2, 0, 1]).real_roots(1e-13);
        assert!((s[0] - 2f64.sqrt()).abs() < 1e-12);
        assert!(IntPolynomial::from_i64s(&[1, 0, 1]).real_roots(1e-9).is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPolynomial::from_i64s(&[22, 24, -13, -17, -1, 1]).to_string(),
            "x^5 - x^4 - 17x^3 - 13x^2 + 24x + 22"
        );
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
