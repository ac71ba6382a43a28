//! Integer polynomials, characteristic polynomials of matroids, and integer
//! root splitting.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::lattice::FlatLattice;
use crate::matroid::Matroid;

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `Π (t - r)`.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(IntPolynomial::from_i64(&[1]), |acc, &r| {
            let mut next = vec![BigInt::zero(); acc.coeffs.len() + 1];
            for (i, c) in acc.coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            IntPolynomial::new(next)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Quotient by `(t - root)` when the division is exact.
    fn divide_by_root(&self, root: &BigInt) -> Option<IntPolynomial> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        // synthetic division from the top coefficient down
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (1..=d).rev() {
            carry = &self.coeffs[i] + carry * root;
            quotient[i - 1] = carry.clone();
        }
        let remainder = &self.coeffs[0] + carry * root;
        remainder.is_zero().then(|| IntPolynomial::new(quotient))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// `χ(t) = Σ_{X ∈ L} μ(0̂, X) t^{r - rk X}`. Zero when the matroid has loops.
pub fn characteristic_polynomial(m: &Matroid) -> IntPolynomial {
    if !m.loops().is_empty() {
        return IntPolynomial::default();
    }
    let lattice = FlatLattice::of(m);
    let mu = lattice.mobius_from_bottom();
    let r = m.rank();
    let mut coeffs = vec![BigInt::zero(); r + 1];
    for (k, flat) in lattice.iter() {
        coeffs[r - k] += mu[&flat];
    }
    IntPolynomial::new(coeffs)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let limit = n.sqrt();
    let mut d = BigInt::one();
    while d <= limit {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Roots (with multiplicity, ascending) if a monic polynomial is a product
/// of linear factors `t - r` with integer `r`; `None` otherwise.
pub fn splits_over_integers(p: &IntPolynomial) -> Option<Vec<BigInt>> {
    if !p.is_monic() {
        return None;
    }
    let mut roots = Vec::new();
    let mut rest = p.clone();
    while rest.degree()? > 0 {
        let constant = rest.coeff(0);
        let root = if constant.is_zero() {
            BigInt::zero()
        } else {
            divisors(&constant)
                .into_iter()
                .flat_map(|d| [d.clone(), -d])
                .find(|r| rest.eval(r).is_zero())?
        };
        rest = rest.divide_by_root(&root)?;
        roots.push(root);
    }
    roots.sort();
    Some(roots)
}
