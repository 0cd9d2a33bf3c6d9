//! Exact base fields: the rationals, prime fields `F_p`, and cyclotomic
//! fields `Q(zeta_n) = Q[z] / Phi_n(z)`.
//!
//! A [`Scalar`] carries enough of its field to do arithmetic on its own.
//! Operator impls panic on mixed-field operands; the `checked_*` methods
//! report them as [`ScalarError`] instead.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed-field operands: {0} and {1}")]
    FieldMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("{field} contains no primitive root of unity of order {order}")]
    NoRootOfUnity { field: String, order: u64 },
    #[error("cannot parse scalar {literal:?} in {field}: {reason}")]
    Parse {
        literal: String,
        field: String,
        reason: String,
    },
}

/// `Q[z] / Phi_n(z)`, with `Phi_n` monic of degree `phi(n)` and integer coefficients.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u64,
    /// Coefficients of `Phi_n`, lowest degree first; the leading 1 is included.
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Reduces a coefficient vector of arbitrary length modulo `Phi_n`.
    fn reduce(&self, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        while coeffs.len() > d {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = coeffs.len() - d;
            for (k, m) in self.modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    coeffs[shift + k] -= &top * BigRational::from_integer(m.clone());
                }
            }
        }
        coeffs.resize(d, BigRational::zero());
        coeffs
    }
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, Arc<CyclotomicField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer polynomial division, exact; `divisor` must be monic.
fn divide_monic(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let mut rem = dividend.to_vec();
    let dd = divisor.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, m) in divisor.iter().enumerate() {
            rem[k + j] -= &c * m;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// `Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d`, cached per `n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    cyclotomic_field_arc(n).modulus.clone()
}

fn cyclotomic_field_arc(n: u64) -> Arc<CyclotomicField> {
    if let Some(f) = cyclotomic_cache().lock().unwrap().get(&n) {
        return f.clone();
    }
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_field_arc(d);
            poly = divide_monic(&poly, &phi_d.modulus);
        }
    }
    let field = Arc::new(CyclotomicField {
        order: n,
        modulus: poly,
    });
    cyclotomic_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(field)
        .clone()
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if p % small == 0 {
            return p == small;
        }
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    let mut d = p - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, p);
            if x == p - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An exact base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u64),
    Cyclotomic(Arc<CyclotomicField>),
}

impl Field {
    pub fn rationals() -> Self {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn cyclotomic(n: u64) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::InvalidField(
                "cyclotomic order must be at least 1".into(),
            ));
        }
        if n > 10_000 {
            return Err(ScalarError::InvalidField(format!(
                "cyclotomic order {n} is too large"
            )));
        }
        Ok(Field::Cyclotomic(cyclotomic_field_arc(n)))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Prime { value: 0, p: *p },
            Field::Cyclotomic(f) => Scalar::Cyclotomic {
                coeffs: vec![BigRational::zero(); f.degree()],
                field: f.clone(),
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_rational(&BigRational::from_integer(BigInt::from(v)))
            .expect("integers embed in every field")
    }

    /// Image of a rational number; fails in `F_p` when the denominator vanishes mod `p`.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar, ScalarError> {
        match self {
            Field::Rationals => Ok(Scalar::Rational(r.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let num = r.numer().mod_floor(&pb).to_u64().unwrap();
                let den = r.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                let inv = pow_mod(den, p - 2, *p);
                Ok(Scalar::Prime {
                    value: mul_mod(num, inv, *p),
                    p: *p,
                })
            }
            Field::Cyclotomic(f) => {
                let mut coeffs = vec![BigRational::zero(); f.degree()];
                coeffs[0] = r.clone();
                Ok(Scalar::Cyclotomic {
                    coeffs,
                    field: f.clone(),
                })
            }
        }
    }

    /// The class of `z` in `Q[z]/Phi_n`; `None` outside cyclotomic fields.
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            Field::Cyclotomic(f) => {
                let mut coeffs = vec![BigRational::zero(); f.degree() + 1];
                coeffs[1] = BigRational::one();
                Some(Scalar::Cyclotomic {
                    coeffs: f.reduce(coeffs),
                    field: f.clone(),
                })
            }
            _ => None,
        }
    }

    /// Largest `N` such that the field contains a primitive `N`-th root of unity.
    pub fn roots_of_unity_order(&self) -> u64 {
        match self {
            Field::Rationals => 2,
            Field::Prime(p) => p - 1,
            Field::Cyclotomic(f) => {
                if f.order % 2 == 0 {
                    f.order
                } else {
                    2 * f.order
                }
            }
        }
    }

    /// A primitive `n`-th root of unity. In `Q(zeta_m)` with `n | m` this is `z^(m/n)`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Scalar, ScalarError> {
        let missing = || ScalarError::NoRootOfUnity {
            field: self.to_string(),
            order: n,
        };
        if n == 0 {
            return Err(missing());
        }
        match self {
            Field::Rationals => match n {
                1 => Ok(self.one()),
                2 => Ok(self.from_i64(-1)),
                _ => Err(missing()),
            },
            Field::Prime(p) => {
                if (p - 1) % n != 0 {
                    return Err(missing());
                }
                let factors = prime_factors(n);
                for cand in 1..*p {
                    if pow_mod(cand, n, *p) == 1
                        && factors.iter().all(|q| pow_mod(cand, n / q, *p) != 1)
                    {
                        return Ok(Scalar::Prime { value: cand, p: *p });
                    }
                }
                Err(missing())
            }
            Field::Cyclotomic(f) => {
                let z = self.generator().unwrap();
                if f.order % n == 0 {
                    return Ok(z.pow((f.order / n) as i64));
                }
                let total = self.roots_of_unity_order();
                if total % n == 0 {
                    // only reached for odd m: -z has order 2m
                    return Ok((-z).pow((total / n) as i64));
                }
                Err(missing())
            }
        }
    }

    /// Parses the literal syntax: `a/b` over the rationals and prime fields,
    /// polynomials in `z` such as `1/2 + 3*z^2` over cyclotomic fields.
    pub fn parse_scalar(&self, literal: &str) -> Result<Scalar, ScalarError> {
        let err = |reason: &str| ScalarError::Parse {
            literal: literal.to_string(),
            field: self.to_string(),
            reason: reason.to_string(),
        };
        let text: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err("empty literal"));
        }
        // Split into signed terms.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in text.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && current.is_empty() {
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(err("dangling sign"));
        }
        terms.push((negative, current));

        let mut acc = self.zero();
        for (neg, term) in terms {
            let (coeff_text, power) = match term.find('z') {
                None => (term.as_str(), 0u32),
                Some(pos) => {
                    if !matches!(self, Field::Cyclotomic(_)) {
                        return Err(err("the symbol z only exists in cyclotomic fields"));
                    }
                    let (head, tail) = term.split_at(pos);
                    let head = head.strip_suffix('*').unwrap_or(head);
                    let power = match tail.strip_prefix('z').unwrap() {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<u32>().ok())
                            .ok_or_else(|| err("bad exponent"))?,
                    };
                    (head, power)
                }
            };
            let coeff = if coeff_text.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coeff_text).ok_or_else(|| err("bad rational coefficient"))?
            };
            let mut value = self.from_rational(&coeff)?;
            if power > 0 {
                value = &value * &self.generator().unwrap().pow(power as i64);
            }
            acc = if neg { &acc - &value } else { &acc + &value };
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Cyclotomic(c) => write!(f, "Q(zeta_{})", c.order),
        }
    }
}

/// An element of a [`Field`], always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Prime {
        value: u64,
        p: u64,
    },
    Cyclotomic {
        coeffs: Vec<BigRational>,
        field: Arc<CyclotomicField>,
    },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Prime { p, .. } => Field::Prime(*p),
            Scalar::Cyclotomic { field, .. } => Field::Cyclotomic(field.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Cyclotomic { coeffs, .. } => {
                coeffs[0].is_one() && coeffs[1..].iter().all(Zero::is_zero)
            }
        }
    }

    fn same_field(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Prime { p, .. }, Scalar::Prime { p: q, .. }) => p == q,
            (Scalar::Cyclotomic { field: a, .. }, Scalar::Cyclotomic { field: b, .. }) => {
                Arc::ptr_eq(a, b) || a.order == b.order
            }
            _ => false,
        }
    }

    fn check_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            (
                Scalar::Cyclotomic { coeffs: a, field },
                Scalar::Cyclotomic { coeffs: b, .. },
            ) => Scalar::Cyclotomic {
                coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect(),
                field: field.clone(),
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: mul_mod(*a, *b, *p),
                p: *p,
            },
            (
                Scalar::Cyclotomic { coeffs: a, field },
                Scalar::Cyclotomic { coeffs: b, .. },
            ) => {
                let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Scalar::Cyclotomic {
                    coeffs: field.reduce(prod),
                    field: field.clone(),
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
            Scalar::Cyclotomic { field, .. } => {
                // Solve a * y = 1 through the multiplication-by-a matrix over Q.
                let d = field.degree();
                let mut columns = Vec::with_capacity(d);
                for k in 0..d {
                    let mut basis = vec![BigRational::zero(); d];
                    basis[k] = BigRational::one();
                    let e = Scalar::Cyclotomic {
                        coeffs: basis,
                        field: field.clone(),
                    };
                    match self * &e {
                        Scalar::Cyclotomic { coeffs, .. } => columns.push(coeffs),
                        _ => unreachable!(),
                    }
                }
                let mut rhs = vec![BigRational::zero(); d];
                rhs[0] = BigRational::one();
                let y = solve_rational(columns, rhs).ok_or(ScalarError::DivisionByZero)?;
                Scalar::Cyclotomic {
                    coeffs: y,
                    field: field.clone(),
                }
            }
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert first (panics on zero base).
    pub fn pow(&self, exp: i64) -> Scalar {
        let mut base = if exp < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Rational value, if the scalar lies in the prime subfield `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Prime { .. } => None,
            Scalar::Cyclotomic { coeffs, .. } => {
                if coeffs[1..].iter().all(Zero::is_zero) {
                    Some(coeffs[0].clone())
                } else {
                    None
                }
            }
        }
    }

    /// Coordinates over `Q` in the power basis `1, z, ..., z^(d-1)`.
    pub fn rational_coordinates(&self) -> Option<Vec<BigRational>> {
        match self {
            Scalar::Rational(r) => Some(vec![r.clone()]),
            Scalar::Prime { .. } => None,
            Scalar::Cyclotomic { coeffs, .. } => Some(coeffs.clone()),
        }
    }
}

/// Gaussian elimination over Q on a square system given by columns.
fn solve_rational(columns: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = rhs.len();
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for v in rows[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &rows[col][c];
                    rows[r][c] -= delta;
                }
            }
        }
    }
    Some(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Cyclotomic { coeffs, .. } => {
                let mut out = String::new();
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let negative = c.is_negative();
                    let abs = c.abs();
                    if out.is_empty() {
                        if negative {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if negative { " - " } else { " + " });
                    }
                    match k {
                        0 => out.push_str(&fmt_rational(&abs)),
                        _ => {
                            if !abs.is_one() {
                                out.push_str(&fmt_rational(&abs));
                                out.push('*');
                            }
                            out.push('z');
                            if k > 1 {
                                out.push_str(&format!("^{k}"));
                            }
                        }
                    }
                }
                if out.is_empty() {
                    out.push('0');
                }
                write!(f, "{out}")
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: (p - value) % p,
                p: *p,
            },
            Scalar::Cyclotomic { coeffs, field } => Scalar::Cyclotomic {
                coeffs: coeffs.iter().map(|c| -c).collect(),
                field: field.clone(),
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("scalar {}: {e}", stringify!($method)))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);
