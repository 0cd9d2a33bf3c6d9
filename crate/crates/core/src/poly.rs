//! Dense univariate polynomials over a [`Field`], just enough for
//! characteristic polynomials and root finding inside the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    /// Lowest degree first, no trailing zeros.
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Self {
        Poly::new(field, Vec::new())
    }

    /// `x - root`
    pub fn linear(root: &Scalar) -> Self {
        let f = root.field();
        Poly::new(&f, vec![-root, f.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(&self.field, out)
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().unwrap();
                Poly::new(&self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(&self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(&self.field, quot), Poly::new(&self.field, rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Roots lying in the base field, with multiplicities.
    ///
    /// Prime fields are searched exhaustively (up to `2^20` elements). Over the
    /// rationals the rational root theorem is applied. Over `Q(zeta_n)` the
    /// search covers every root of the form `r * w` with `r` rational and `w` a
    /// root of unity of the field; other roots are not detected, which shows up
    /// as [`FieldRoots::complete`] being false.
    pub fn roots(&self) -> FieldRoots {
        let degree = self.degree().unwrap_or(0);
        let mut candidates: Vec<Scalar> = Vec::new();
        match &self.field {
            Field::Prime(p) => {
                if *p <= 1 << 20 {
                    for v in 0..*p {
                        let x = Scalar::Prime { value: v, p: *p };
                        if self.eval(&x).is_zero() {
                            candidates.push(x);
                        }
                    }
                }
            }
            Field::Rationals => {
                let rational: Vec<BigRational> =
                    self.coeffs.iter().map(|c| c.as_rational().unwrap()).collect();
                candidates.extend(rational_roots(&rational).into_iter().map(Scalar::Rational));
            }
            Field::Cyclotomic(_) => {
                if self.eval(&self.field.zero()).is_zero() {
                    candidates.push(self.field.zero());
                }
                let order = self.field.roots_of_unity_order();
                let w = self.field.primitive_root_of_unity(order).unwrap();
                for k in 0..order {
                    let omega = w.pow(k as i64);
                    // g(y) = f(omega * y), split into rational coordinate polynomials
                    let mut power = self.field.one();
                    let mut twisted = Vec::with_capacity(self.coeffs.len());
                    for c in &self.coeffs {
                        twisted.push(c * &power);
                        power = &power * &omega;
                    }
                    let coords: Vec<Vec<BigRational>> = twisted
                        .iter()
                        .map(|c| c.rational_coordinates().unwrap())
                        .collect();
                    let width = coords.first().map_or(0, Vec::len);
                    let q = Field::rationals();
                    let mut common = Poly::zero(&q);
                    for j in 0..width {
                        let component = Poly::new(
                            &q,
                            coords.iter().map(|c| Scalar::Rational(c[j].clone())).collect(),
                        );
                        common = common.gcd(&component);
                    }
                    if common.degree().unwrap_or(0) == 0 {
                        continue;
                    }
                    let rational: Vec<BigRational> =
                        common.coeffs.iter().map(|c| c.as_rational().unwrap()).collect();
                    for r in rational_roots(&rational) {
                        if r.is_zero() {
                            continue;
                        }
                        let root = &self.field.from_rational(&r).unwrap() * &omega;
                        if !candidates.contains(&root) {
                            candidates.push(root);
                        }
                    }
                }
            }
        }
        let mut remaining = self.clone();
        let mut roots = Vec::new();
        for r in candidates {
            let lin = Poly::linear(&r);
            let mut mult = 0;
            loop {
                let (q, rem) = remaining.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                remaining = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        let found: usize = roots.iter().map(|(_, m)| m).sum();
        FieldRoots {
            roots,
            complete: found == degree,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FieldRoots {
    pub roots: Vec<(Scalar, usize)>,
    /// The polynomial splits into linear factors over the field.
    pub complete: bool,
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Distinct rational roots of a rational polynomial (lowest degree first).
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut coeffs: Vec<BigRational> = coeffs.to_vec();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    let mut out = Vec::new();
    if coeffs.len() <= 1 {
        return out;
    }
    let leading_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if leading_zeros > 0 {
        out.push(BigRational::zero());
        coeffs.drain(..leading_zeros);
    }
    if coeffs.len() <= 1 {
        return out;
    }
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return out;
    };
    let eval = |x: &BigRational| {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let cand = BigRational::new(p * sign, q.clone());
                if !out.contains(&cand) && eval(&cand).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: &Field, lits: &[&str]) -> Poly {
        Poly::new(field, lits.iter().map(|l| field.parse_scalar(l).unwrap()).collect())
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let q = Field::rationals();
        // (x - 1/2)^2 (x + 3) x = x^4 + 2x^3 - 11/4 x^2 + 3/4 x
        let f = poly(&q, &["0", "3/4", "-11/4", "2", "1"]);
        let r = f.roots();
        assert!(r.complete);
        let mut got: Vec<(String, usize)> =
            r.roots.iter().map(|(s, m)| (s.to_string(), *m)).collect();
        got.sort();
        assert_eq!(
            got,
            vec![("-3".into(), 1), ("0".into(), 1), ("1/2".into(), 2)]
        );
        // x^2 + 1 has no rational roots
        assert!(!poly(&q, &["1", "0", "1"]).roots().complete);
    }

    #[test]
    fn cyclotomic_roots_of_unity() {
        let k = Field::cyclotomic(3).unwrap();
        // x^3 - 8 = (x - 2)(x - 2z)(x - 2z^2)
        let f = poly(&k, &["-8", "0", "0", "1"]);
        let r = f.roots();
        assert!(r.complete);
        assert_eq!(r.roots.len(), 3);
        for (root, m) in &r.roots {
            assert_eq!(*m, 1);
            assert!(f.eval(root).is_zero());
        }
    }

    #[test]
    fn prime_field_roots() {
        let f7 = Field::prime(7).unwrap();
        // x^2 - 2 = (x - 3)(x - 4) mod 7
        let r = poly(&f7, &["-2", "0", "1"]).roots();
        assert!(r.complete);
        assert_eq!(r.roots.len(), 2);
    }

    #[test]
    fn gcd_is_monic() {
        let q = Field::rationals();
        let a = poly(&q, &["-1", "0", "1"]); // x^2 - 1
        let b = poly(&q, &["2", "2"]); // 2x + 2
        assert_eq!(a.gcd(&b), poly(&q, &["1", "1"]));
    }
}
