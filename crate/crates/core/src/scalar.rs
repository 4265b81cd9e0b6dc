//! Exact scalars: rationals, dense polynomials in `d` over Q, and the fraction field Q(d).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at d = {0}")]
    Pole(String),
    #[error("cannot parse `{0}` as a rational number")]
    Parse(String),
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q` or `-p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let t = s.trim();
    let err = || ScalarError::Parse(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(t).map(Rational::from_integer).map_err(|_| err()),
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense univariate polynomial, coefficients indexed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `d`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Coefficients from small integers, lowest degree first.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), ScalarError> {
        let dd = d.degree().ok_or(ScalarError::DivisionByZero)?;
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        match self.div_rem(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// True iff `target = self * q` for some polynomial `q`.
    pub fn divides_exactly(&self, target: &Poly) -> bool {
        if self.is_zero() {
            return target.is_zero();
        }
        target.exact_div(self).is_some()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Splits `self = c * p` with `p` integral, primitive, positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::one(), Poly::zero());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let p = Poly::from_coeffs(ints.iter().map(|c| Rational::from_integer(c / &g)).collect());
        (Rational::new(g, lcm), p)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::zero();
        Poly::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::from_coeffs(v)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let body = match k {
                0 => fmt_rational(&a),
                _ => {
                    let mono = if k == 1 { "d".to_string() } else { format!("d^{k}") };
                    if a.is_one() {
                        mono
                    } else {
                        format!("{}*{}", fmt_rational(&a), mono)
                    }
                }
            };
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

/// Element of Q(d) in canonical form.
///
/// The denominator is integral, primitive, with positive leading coefficient and coprime
/// to the numerator; equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.degree() == Some(0) {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides"),
                    den.exact_div(&g).expect("gcd divides"),
                )
            }
        };
        let (c, den) = den.primitive_part();
        RatFunc {
            num: num.scale(&c.recip()),
            den,
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.degree() == Some(0) && self.num == Poly::one()
    }

    /// The polynomial, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den == Poly::one()).then_some(&self.num)
    }

    /// The constant, when this is an element of Q.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.as_poly()?.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.num.leading()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<Self, ScalarError> {
        Ok(self * &o.recip()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        RatFunc {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    pub fn eval_at(&self, x: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ScalarError::Pole(fmt_rational(x)));
        }
        Ok(self.num.eval(x) / d)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::canonical(&self.num + &o.num, self.den.clone());
        }
        RatFunc::canonical(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.degree() == Some(0) && o.den.degree() == Some(0) {
            return RatFunc {
                num: &self.num * &o.num,
                den: Poly::one(),
            };
        }
        RatFunc::canonical(&self.num * &o.num, &self.den * &o.den)
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
owned_ops!(Poly);
owned_ops!(RatFunc);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            return write!(f, "{}", self.num);
        }
        let terms = |p: &Poly| p.coeffs.iter().filter(|c| !c.is_zero()).count();
        let wrap = |p: &Poly| if terms(p) > 1 { format!("({p})") } else { p.to_string() };
        let (c, p) = self.num.primitive_part();
        let (cn, cd) = (c.numer().clone(), c.denom().clone());
        let top = if p == Poly::one() {
            cn.to_string()
        } else if cn.is_one() {
            wrap(&p)
        } else if (-&cn).is_one() {
            format!("-{}", wrap(&p))
        } else {
            format!("{}*{}", cn, wrap(&p))
        };
        let bottom = if cd.is_one() {
            wrap(&self.den)
        } else {
            format!("({}*{})", cd, wrap(&self.den))
        };
        write!(f, "{top}/{bottom}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> RatFunc {
        RatFunc::var()
    }

    fn c(n: i64, m: i64) -> RatFunc {
        RatFunc::from_rational(rat(n, m))
    }

    #[test]
    fn product_of_variables() {
        assert_eq!(&d() * &d(), RatFunc::from_poly(Poly::from_ints(&[0, 0, 1])));
    }

    #[test]
    fn cancellation_in_division() {
        let dp2 = &d() + &c(2, 1);
        let a = c(5, 6).checked_div(&dp2).unwrap();
        let q = a.checked_div(&c(1, 6)).unwrap();
        assert_eq!(q, c(5, 1).checked_div(&dp2).unwrap());
    }

    #[test]
    fn gcd_reduction() {
        let dm3 = &d() - &c(3, 1);
        let dp2 = &d() + &c(2, 1);
        let q = (&dm3 * &dp2).checked_div(&dp2).unwrap();
        assert_eq!(q, dm3);
        assert_eq!(q.denom(), &Poly::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(d().checked_div(&RatFunc::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        assert_eq!((&d() * &d()).eval_at(&int(3)).unwrap(), int(9));
        let det = RatFunc::from_poly(
            Poly::monomial(rat(3, 4), 5)
                .mul(Poly::from_ints(&[-3, 1]).pow(2))
                .mul(Poly::from_ints(&[2, 1])),
        );
        assert_eq!(det.eval_at(&int(3)).unwrap(), int(0));
        let f = c(5, 6).checked_div(&(&d() + &c(2, 1))).unwrap();
        assert_eq!(f.eval_at(&int(14)).unwrap(), rat(5, 96));
        assert!(matches!(f.eval_at(&int(-2)), Err(ScalarError::Pole(_))));
    }

    #[test]
    fn divisibility() {
        let target = Poly::from_ints(&[-9, 0, 1]);
        assert!(Poly::from_ints(&[-3, 1]).divides_exactly(&target));
        assert!(!Poly::from_ints(&[2, 1]).divides_exactly(&target));
        assert_eq!(&Poly::from_ints(&[-3, 1]) * &Poly::from_ints(&[3, 1]), target);
    }

    #[test]
    fn canonical_denominator_is_primitive_and_positive() {
        let f = RatFunc::new(Poly::from_ints(&[1]), Poly::from_coeffs(vec![rat(-2, 3), rat(-4, 3)])).unwrap();
        assert_eq!(f.denom(), &Poly::from_ints(&[1, 2]));
        assert_eq!(f.numer(), &Poly::constant(rat(-3, 2)));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("14").unwrap(), int(14));
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational("1/0"), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn display() {
        let f = c(5, 6).checked_div(&(&d() + &c(2, 1))).unwrap();
        assert_eq!(f.to_string(), "5/(6*(d + 2))");
        assert_eq!((&d() * &c(1, 2)).to_string(), "1/2*d");
        assert_eq!((&(&d() * &d()) - &c(1, 2)).to_string(), "d^2 - 1/2");
    }
}
