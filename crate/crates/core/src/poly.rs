//! Exact integer polynomials and rational functions, with certified real-root
//! isolation (Sturm sequences) and a complex root finder for Mahler measures.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Rational, Result};

/// Polynomial with integer coefficients, stored in ascending degree with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
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

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Self::new(coeffs)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// `p(x²)`.
    pub fn compose_square(&self) -> Self {
        let mut coeffs = vec![BigInt::zero(); 2 * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `x^deg · p(1/x)`.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Multiply by `-1` if needed so the leading coefficient is positive.
    pub fn with_positive_leading(&self) -> Self {
        if self.leading().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| {
            acc * z + c.to_f64().unwrap_or(f64::NAN)
        })
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of absolute values of the coefficients.
    pub fn norm1(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    /// `λ^deg p(1/λ) = ±p(λ)`; returns the sign when it holds.
    pub fn reciprocity_sign(&self) -> Option<i32> {
        let r = self.reciprocal();
        if r == *self {
            Some(1)
        } else if r == -self {
            Some(-1)
        } else {
            None
        }
    }

    /// Exact quotient, or `None` if `d` does not divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..q.len()).rev() {
            let (c, rem) = r[k + dd].div_rem(&lead);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::new(q))
    }

    /// Greatest common divisor, normalised to a positive leading coefficient
    /// with content equal to the gcd of the contents.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let g = QPoly::from_int(self).gcd(&QPoly::from_int(other));
        let c = self.content().gcd(&other.content());
        g.primitive_int().scale(&c)
    }

    /// `p / gcd(p, p')`, primitive.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = QPoly::from_int(self).gcd(&QPoly::from_int(&self.derivative()));
        QPoly::from_int(self).div_rem(&g).0.primitive_int()
    }

    /// Yun's square-free decomposition: primitive factors `f_i` with
    /// multiplicities `i` such that `p = c · Π f_i^i`. Constant factors are
    /// dropped.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = QPoly::from_int(self);
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() > Some(0) {
            let a = b.gcd(&d);
            if a.degree() > Some(0) {
                out.push((a.primitive_int(), i));
            }
            let nb = b.div_rem(&a).0;
            let nc = d.div_rem(&a).0;
            d = nc.sub(&nb.derivative());
            b = nb;
            i += 1;
        }
        out
    }

    /// Multiplicity of `x - root` for an integer root.
    pub fn root_multiplicity(&self, root: i64) -> usize {
        let lin = IntPolynomial::from_i64(&[-root, 1]);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            match p.div_exact(&lin) {
                Some(q) => {
                    p = q;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }

    pub fn to_string_in(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                let _ = write!(s, "{a}");
            }
            match k {
                0 => {}
                1 => s.push_str(var),
                _ => {
                    let _ = write!(s, "{var}^{k}");
                }
            }
        }
        s
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("λ"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Zero for IntPolynomial {
    fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for IntPolynomial {
    fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }
}

/// Dense polynomial over the rationals; internal helper for exact gcd and
/// division.
#[derive(Clone, Debug, PartialEq)]
struct QPoly(Vec<Rational>);

impl QPoly {
    fn from_int(p: &IntPolynomial) -> Self {
        QPoly(p.coeffs.iter().map(|c| Rational::from(c.clone())).collect())
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn derivative(&self) -> Self {
        QPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from(BigInt::from(k)))
                .collect(),
        )
        .trim()
    }

    fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        QPoly(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&z) - o.0.get(k).unwrap_or(&z))
                .collect(),
        )
        .trim()
    }

    fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (QPoly(q).trim(), QPoly(r).trim())
    }

    fn monic(self) -> Self {
        match self.0.last().cloned() {
            Some(l) => QPoly(self.0.into_iter().map(|c| c / &l).collect()),
            None => self,
        }
    }

    fn gcd(&self, o: &QPoly) -> QPoly {
        let mut a = self.clone().trim();
        let mut b = o.clone().trim();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    fn primitive_int(&self) -> IntPolynomial {
        let l = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPolynomial::new(
            self.0
                .iter()
                .map(|c| (c * Rational::from(l.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }
}

/// Quotient of two integer polynomials, kept in lowest terms with a positive
/// leading coefficient in the denominator.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Singular("zero denominator".into()));
        }
        let g = numerator.gcd(&denominator);
        let (mut n, mut d) = if g.degree().unwrap_or(0) == 0 && g.leading().abs().is_one() {
            (numerator, denominator)
        } else {
            (
                numerator.div_exact(&g).expect("gcd divides numerator"),
                denominator.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if d.leading().is_negative() {
            n = -n;
            d = -d;
        }
        Ok(RationalFunction {
            numerator: n,
            denominator: d,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Taylor coefficients at 0 up to and including `order`. Requires the
    /// expansion to stay integral.
    pub fn series(&self, order: usize) -> Result<Vec<BigInt>> {
        let d0 = self.denominator.coeff(0);
        if d0.is_zero() {
            return Err(Error::Singular("denominator vanishes at 0".into()));
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.numerator.coeff(n);
            for k in 1..=n.min(self.denominator.coeffs.len().saturating_sub(1)) {
                acc -= &self.denominator.coeffs[k] * &out[n - k];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::NonIntegral(alloc::format!("series coefficient {n}")));
            }
            out.push(q);
        }
        Ok(out)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / ({})",
            self.numerator.to_string_in("t"),
            self.denominator.to_string_in("t")
        )
    }
}

/// Sturm chain of a square-free polynomial, with exact sign counting.
pub struct SturmSequence {
    chain: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Self {
        let p = p.squarefree_part();
        let mut chain = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return SturmSequence { chain };
        }
        chain.push(p.derivative());
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            let r = QPoly::from_int(a).div_rem(&QPoly::from_int(b)).1;
            if r.is_zero() {
                break;
            }
            // Sturm needs -rem up to a positive factor.
            let ri = r.primitive_int();
            let lead_r = r.0.last().unwrap();
            let next = if lead_r.is_positive() { -ri } else { ri };
            chain.push(next);
        }
        SturmSequence { chain }
    }

    fn sign_changes(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.chain {
            let v = p.eval_rational(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// The square-free polynomial heading the chain.
    pub fn base(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.sign_changes(a).saturating_sub(self.sign_changes(b))
    }
}

/// An upper bound on the moduli of the roots (Cauchy).
fn cauchy_bound(p: &IntPolynomial) -> Rational {
    let lead = Rational::from(p.leading().abs());
    let m = p.coeffs[..p.coeffs.len() - 1]
        .iter()
        .map(|c| Rational::from(c.abs()) / &lead)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::one()
}

fn rational_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::Numeric(alloc::format!("non-finite bound {x}")))
}

/// Largest real root strictly above `low`, to within `1e-12`, isolated by a
/// Sturm sequence and refined by bisection.
pub fn max_real_root(p: &IntPolynomial, low: f64) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Err(Error::NoRootAbove(alloc::format!("{low}")));
    }
    let sturm = SturmSequence::new(p);
    let mut lo = rational_from_f64(low)?;
    let mut hi = cauchy_bound(p);
    if hi <= lo || sturm.count(&lo, &hi) == 0 {
        return Err(Error::NoRootAbove(alloc::format!("{low}")));
    }
    let two = Rational::from(BigInt::from(2));
    // Narrow with the chain until (lo, hi] holds only the largest root,
    // then bisect on the sign of the square-free part alone.
    while sturm.count(&lo, &hi) > 1 {
        let mid = (&lo + &hi) / &two;
        if sturm.count(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(refine_simple_root(sturm.base(), lo, hi))
}

/// The unique simple root of `p` in `(lo, hi]`, to within `2^-44`.
fn refine_simple_root(p: &IntPolynomial, mut lo: Rational, mut hi: Rational) -> f64 {
    let eps = Rational::new(BigInt::one(), BigInt::from(1u64) << 44);
    let two = Rational::from(BigInt::from(2));
    let sign = |x: &Rational| p.eval_rational(x).signum();
    let s_hi = sign(&hi);
    if s_hi.is_zero() {
        return hi.to_f64().unwrap_or(f64::NAN);
    }
    // No root in [mid, hi] when the signs agree, since the root is simple.
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / &two;
        let s = sign(&mid);
        if s.is_zero() {
            return mid.to_f64().unwrap_or(f64::NAN);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    ((&lo + &hi) / two).to_f64().unwrap_or(f64::NAN)
}

/// All distinct real roots, sorted ascending, each to within `1e-12`.
pub fn real_roots(p: &IntPolynomial) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sturm = SturmSequence::new(p);
    let b = cauchy_bound(p);
    let mut out = Vec::new();
    isolate(&sturm, -b.clone(), b, &mut out);
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(out)
}

fn isolate(sturm: &SturmSequence, lo: Rational, hi: Rational, out: &mut Vec<f64>) {
    let n = sturm.count(&lo, &hi);
    if n == 0 {
        return;
    }
    let two = Rational::from(BigInt::from(2));
    let eps = Rational::new(BigInt::one(), BigInt::from(1u64) << 44);
    if n == 1 {
        out.push(refine_simple_root(sturm.base(), lo, hi));
        return;
    }
    if &hi - &lo <= eps {
        // Unreachable for a square-free chain.
        out.push(((&lo + &hi) / &two).to_f64().unwrap_or(f64::NAN));
        return;
    }
    let mid = (&lo + &hi) / &two;
    isolate(sturm, lo, mid.clone(), out);
    isolate(sturm, mid, hi, out);
}

/// Aberth–Ehrlich simultaneous iteration on a square-free polynomial.
fn aberth(p: &IntPolynomial) -> Vec<Complex64> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let c: Vec<f64> = p.coeffs.iter().map(|c| c.to_f64().unwrap()).collect();
    if n == 1 {
        return vec![Complex64::new(-c[0] / c[1], 0.0)];
    }
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|a| a / lead).collect();
    let dmonic: Vec<f64> = (1..=n).map(|k| monic[k] * k as f64).collect();
    let eval = |coef: &[f64], z: Complex64| {
        coef.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    };
    let radius = (0..n)
        .map(|k| libm::pow(libm::fabs(monic[k]), 1.0 / (n - k) as f64))
        .fold(0.0f64, f64::max)
        .max(0.5);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * core::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::new(radius * libm::cos(theta), radius * libm::sin(theta))
        })
        .collect();
    for _ in 0..2000 {
        let mut worst = 0.0f64;
        for k in 0..n {
            let pv = eval(&monic, z[k]);
            let dv = eval(&dmonic, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    s += Complex64::new(1.0, 0.0) / (z[k] - z[j]);
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[k] -= w;
            worst = worst.max(w.norm() / z[k].norm().max(1.0));
        }
        if worst < 1e-16 {
            break;
        }
    }
    // Newton polish.
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let dv = eval(&dmonic, *zk);
            if dv.norm() == 0.0 {
                break;
            }
            *zk -= eval(&monic, *zk) / dv;
        }
    }
    z
}

/// All complex roots with multiplicities, validated by the relative
/// backward error `|p(r)| < 1e-8·Σ|a_i||r|^i`.
pub fn complex_roots(p: &IntPolynomial) -> Result<Vec<(Complex64, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        let abs: Vec<f64> = factor.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY).abs()).collect();
        for r in aberth(&factor) {
            let m = r.norm();
            let tol = 1e-8 * abs.iter().rev().fold(0.0, |acc, a| acc * m + a);
            let res = factor.eval_complex(r).norm();
            if !(res < tol) {
                return Err(Error::Numeric(alloc::format!(
                    "root {r} of {factor} has residual {res:e}"
                )));
            }
            out.push((r, mult));
        }
    }
    Ok(out)
}

/// Product of the moduli of the roots outside the unit circle.
pub fn mahler_measure(p: &IntPolynomial) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.leading().abs().is_one() {
        return Err(Error::NotMonic);
    }
    let mut m = 1.0;
    for (r, mult) in complex_roots(p)? {
        let a = r.norm();
        if a > 1.0 + 1e-10 {
            for _ in 0..mult {
                m *= a;
            }
        }
    }
    Ok(m)
}

fn mobius(n: usize) -> i32 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// The `n`-th cyclotomic polynomial, `Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}`.
pub fn cyclotomic(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    let mut num = IntPolynomial::one();
    let mut den = IntPolynomial::one();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let f = IntPolynomial::monomial(1, d) - IntPolynomial::one();
        match mobius(n / d) {
            1 => num = num * f,
            -1 => den = den * f,
            _ => {}
        }
    }
    num.div_exact(&den).expect("cyclotomic quotient is exact")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn arithmetic_and_degree() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 0, 1]);
        assert_eq!(&a * &b, p(&[-1, -1, 1, 1]));
        assert_eq!((&a * &b).degree(), Some(3));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(b.div_exact(&a), Some(p(&[-1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&a), None);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 1]); // x - 1
        let b = p(&[1, 1]); // x + 1
        let f = &(&a * &a) * &b;
        assert_eq!(f.gcd(&f.derivative()), a);
        assert_eq!(f.squarefree_part(), p(&[-1, 0, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(b.clone(), 1), (a.clone(), 2)]);
        assert_eq!(f.root_multiplicity(1), 2);
        assert_eq!(f.root_multiplicity(-1), 1);
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn rational_function_normalises() {
        let num = p(&[-1, 0, 1]);
        let den = p(&[1, -2, 1]).scale(&BigInt::from(-2));
        let r = RationalFunction::new(num, den).unwrap();
        assert_eq!(r.numerator(), &p(&[-1, -1]));
        assert_eq!(r.denominator(), &p(&[-2, 2]));
        assert!(RationalFunction::new(p(&[1]), IntPolynomial::zero()).is_err());
    }

    #[test]
    fn series_of_geometric() {
        let r = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(r.series(4).unwrap(), vec![BigInt::one(); 5]);
    }

    #[test]
    fn pisot_golden_and_lakatos_roots() {
        let cases = [
            (p(&[-1, -1, 0, 1]), 1.324_717_957_244_746),
            (p(&[-1, -1, 1]), 1.618_033_988_749_895),
            (p(&[-1, 0, -1, 1]), 1.465_571_231_876_768),
        ];
        for (poly, want) in cases {
            let got = max_real_root(&poly, 0.0).unwrap();
            assert!((got - want).abs() < 1e-10, "{poly}: {got}");
        }
        assert!(max_real_root(&p(&[1, 0, 1]), 0.0).is_err());
    }

    #[test]
    fn real_root_listing() {
        let r = real_roots(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(r.len(), 3);
        assert!((r[0] + 1.0).abs() < 1e-10 && r[1].abs() < 1e-10 && (r[2] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn mahler_of_lehmer() {
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let m = mahler_measure(&lehmer).unwrap();
        assert!((m - 1.176_280_818_259_917).abs() < 1e-9, "{m}");
        assert!((mahler_measure(&p(&[1, 1, 1])).unwrap() - 1.0).abs() < 1e-12);
        assert!(mahler_measure(&p(&[1, 0, 2])).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -1, 2]).to_string(), "2λ^3 - λ^2 + 1");
        assert_eq!(p(&[-1, -1]).to_string(), "-λ - 1");
    }
}
