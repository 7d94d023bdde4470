//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.
//!
//! Every polynomial is kept in canonical form: the coefficient vector has no
//! trailing zeros, and the zero polynomial is the empty vector. Division is
//! only defined for monic divisors, which keeps quotient and remainder in
//! `Z[q]`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::numth;

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * q^exp`.
    pub fn monomial<T: Into<BigInt>>(c: T, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds `sum counts[i] * q^i` from machine-word counters.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// Returns the constant value if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// `p(1)`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `p(q^k)`: the coefficient of `q^i` moves to `q^{ik}`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Euclidean division by a monic polynomial: `self = quot * m + rem` with
    /// `deg rem < deg m`.
    pub fn divmod(&self, m: &Polynomial) -> Result<(Polynomial, Polynomial), Error> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        if !m.is_monic() {
            return Err(Error::NonMonicModulus(m.to_string()));
        }
        let dm = m.coeffs.len() - 1;
        if self.coeffs.len() <= dm {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dm];
        for i in (dm..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, mc) in m.coeffs[..dm].iter().enumerate() {
                if !mc.is_zero() {
                    rem[i - dm + j] -= &c * mc;
                }
            }
            quot[i - dm] = c;
        }
        rem.truncate(dm);
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem(&self, m: &Polynomial) -> Result<Polynomial, Error> {
        self.divmod(m).map(|(_, r)| r)
    }

    /// Exact quotient; errors if the remainder is not zero.
    pub fn exact_div(&self, m: &Polynomial) -> Result<Polynomial, Error> {
        let (quot, rem) = self.divmod(m)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision {
                dividend: self.to_string(),
                divisor: m.to_string(),
            })
        }
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Polynomial::constant(c)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        // Product of two nonzero integer polynomials keeps its leading term.
        Polynomial { coeffs }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

/// Canonical text: ascending powers, constant first, explicit signs, zero
/// terms omitted, `0` for the zero polynomial.
/// For example `3 + 3*q - 4*q^3 - 6*q^4 - 4*q^5`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let var = match i {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{i}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the canonical grammar. Whitespace is insignificant, terms may
    /// come in any order and repeated powers are summed.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: &str| Error::PolynomialParse {
            input: s.to_string(),
            reason: why.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        let bytes = compact.as_bytes();
        if bytes[0] == b'-' || bytes[0] == b'+' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        for (i, &b) in bytes.iter().enumerate().skip(start) {
            if b == b'+' || b == b'-' {
                terms.push((negative, &compact[start..i]));
                negative = b == b'-';
                start = i + 1;
            }
        }
        terms.push((negative, &compact[start..]));

        let mut out = Polynomial::zero();
        for (neg, term) in terms {
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (coef_part, var_part) = match term.find('q') {
                None => (term, None),
                Some(pos) => {
                    let coef = &term[..pos];
                    let coef = if coef.is_empty() {
                        ""
                    } else {
                        coef.strip_suffix('*').ok_or_else(|| bad("expected '*' before q"))?
                    };
                    (coef, Some(&term[pos + 1..]))
                }
            };
            let mut coef = if coef_part.is_empty() {
                if var_part.is_none() {
                    return Err(bad("empty term"));
                }
                BigInt::one()
            } else {
                if !coef_part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad("coefficient is not an unsigned integer"));
                }
                coef_part
                    .parse::<BigInt>()
                    .map_err(|_| bad("coefficient is not an integer"))?
            };
            if neg {
                coef = -coef;
            }
            let exp = match var_part {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let digits = rest.strip_prefix('^').ok_or_else(|| bad("expected '^' after q"))?;
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(bad("exponent is not a nonnegative integer"));
                    }
                    digits
                        .parse::<usize>()
                        .map_err(|_| bad("exponent out of range"))?
                }
            };
            out += &Polynomial::monomial(coef, exp);
        }
        Ok(out)
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn cyclotomic_memo() -> &'static Mutex<HashMap<u64, Polynomial>> {
    static MEMO: OnceLock<Mutex<HashMap<u64, Polynomial>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial `Φ_n(q)`.
///
/// Computed as `(q^n - 1) / prod_{d | n, d < n} Φ_d(q)` by exact division.
/// Results are memoized process-wide; concurrent fills of the same entry
/// compute the same value, so the memo is idempotent.
pub fn cyclotomic(n: u64) -> Polynomial {
    assert!(n >= 1, "cyclotomic needs n >= 1");
    if let Some(p) = cyclotomic_memo().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut numer = Polynomial::monomial(1, n as usize);
    numer -= &Polynomial::one();
    let mut divisor = Polynomial::one();
    for d in numth::divisors(n) {
        if d < n {
            divisor = &divisor * &cyclotomic(d);
        }
    }
    let phi = numer
        .exact_div(&divisor)
        .expect("product of proper-divisor cyclotomics divides q^n - 1");
    cyclotomic_memo()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(phi)
        .clone()
}
