//! Polynomials with arbitrary-precision integer coefficients.
//!
//! Characteristic polynomials live here. Besides ring arithmetic this module
//! provides the two root tools the spectral code needs: exact extraction of
//! integer roots, and certified numeric isolation of the roots of real-rooted
//! polynomials (sign decisions fall back to exact arithmetic whenever the
//! floating-point evaluation is inconclusive).

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Coefficients constant-first; no trailing zeros, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Output of [`IntPoly::extract_integer_roots`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerRoots {
    /// Distinct integer roots with multiplicity, ascending.
    pub roots: Vec<(BigInt, u64)>,
    /// What is left after dividing out every `(x - r)^mult`; has no integer roots.
    pub residual: IntPoly,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn x() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    /// `x - r`.
    pub fn linear_root(r: &BigInt) -> Self {
        IntPoly::new(vec![-r, BigInt::one()])
    }

    /// `prod (x - r)^mult`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a BigInt, u64)>) -> Self {
        roots.into_iter().fold(IntPoly::one(), |acc, (r, mult)| {
            &acc * &IntPoly::linear_root(r).pow(mult)
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn pow(&self, mut e: u64) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `q(x) = p(x - c)`: every root moves up by `c`.
    pub fn translate(&self, c: &BigInt) -> IntPoly {
        // Horner in the ring: q = (((a_d)(x - c) + a_{d-1})(x - c) + ...)
        let shift = IntPoly::new(vec![-c, BigInt::one()]);
        let mut q = IntPoly::zero();
        for a in self.coeffs.iter().rev() {
            q = &q * &shift + IntPoly::constant(a.clone());
        }
        q
    }

    /// Synthetic division by `x - r`: `(quotient, remainder)`.
    pub fn div_linear(&self, r: &BigInt) -> (IntPoly, BigInt) {
        if self.is_zero() {
            return (IntPoly::zero(), BigInt::zero());
        }
        let d = self.degree();
        let mut q = vec![BigInt::zero(); d];
        let mut acc = BigInt::zero();
        for i in (0..=d).rev() {
            acc = acc * r + &self.coeffs[i];
            if i > 0 {
                q[i - 1] = acc.clone();
            }
        }
        (IntPoly::new(q), acc)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i)
                .collect(),
        )
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Division over `Z`, `None` unless `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let db = divisor.degree();
        if self.degree() < db {
            return None;
        }
        let lb = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - db + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + db];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(&lb);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * b;
            }
            quot[k] = qk;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }

    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let db = divisor.degree();
        let lb = divisor.leading();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= db {
            let shift = r.degree() - db;
            let lr = r.leading();
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lb).collect();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                coeffs[shift + j] -= &lr * b;
            }
            r = IntPoly::new(coeffs);
        }
        r
    }

    /// Gcd over `Q`, returned primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Square-free decomposition `self = c * prod f_i^i`, each `f_i` primitive,
    /// square-free and pairwise coprime. Constant factors are omitted.
    ///
    /// Repeated gcds: with `g = gcd(p, p')` and `w = p / g`, the factor of
    /// multiplicity exactly `i` is `w_i / gcd(w_i, g_i)`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, u64)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let p = self.primitive_part();
        let mut g = p.gcd(&p.derivative());
        let mut w = p.exact_div(&g).expect("gcd divides p").primitive_part();
        let mut i = 1;
        while w.degree() > 0 {
            let y = w.gcd(&g);
            let z = w.exact_div(&y).expect("gcd divides w").primitive_part();
            if z.degree() > 0 {
                out.push((z, i));
            }
            g = g.exact_div(&y).expect("gcd divides g").primitive_part();
            w = y;
            i += 1;
        }
        out
    }

    /// Number of sign changes in the coefficient sequence (zeros skipped).
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<Sign> = self
            .coeffs
            .iter()
            .map(BigInt::sign)
            .filter(|&s| s != Sign::NoSign)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Fujiwara's bound: every complex root has modulus strictly below the result.
    pub fn root_bound(&self) -> f64 {
        let d = self.degree();
        if d == 0 {
            return 0.0;
        }
        let log_lead = log2_abs(&self.leading());
        let mut best = f64::NEG_INFINITY;
        for k in 1..=d {
            let c = &self.coeffs[d - k];
            if c.is_zero() {
                continue;
            }
            let mut l = log2_abs(c) - log_lead;
            if k == d {
                l -= 1.0;
            }
            best = best.max(l / k as f64);
        }
        if best == f64::NEG_INFINITY {
            return 1.0;
        }
        // 2 * max(...), padded against rounding in the logarithms
        libm::exp2(best + 1.0) * 1.000_001 + 1e-9
    }

    /// Splits off every integer root.
    ///
    /// Candidates are the divisors of the trailing nonzero coefficient that
    /// lie inside the root bound, tested on whichever sides of zero
    /// Descartes' rule of signs leaves possible. Each confirmed root is
    /// divided out to full multiplicity by synthetic division. For monic
    /// input every rational root is an integer, so the residual has no
    /// rational roots at all.
    pub fn extract_integer_roots(&self) -> IntegerRoots {
        let mut roots: Vec<(BigInt, u64)> = Vec::new();
        if self.is_zero() {
            return IntegerRoots {
                roots,
                residual: IntPoly::zero(),
            };
        }
        let zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let mut q = IntPoly::new(self.coeffs[zeros..].to_vec());
        if zeros > 0 {
            roots.push((BigInt::zero(), zeros as u64));
        }
        let mut r: u64 = 1;
        loop {
            if q.degree() == 0 {
                break;
            }
            let trailing = q.coeffs[0].magnitude().clone();
            let bound = q
                .root_bound()
                .min(trailing.to_f64().unwrap_or(f64::INFINITY));
            if r as f64 > bound {
                break;
            }
            let mut progressed = false;
            if (&trailing % r).is_zero() {
                let try_positive = q.sign_variations() > 0;
                let try_negative = q.reflect().sign_variations() > 0;
                for (candidate, allowed) in [
                    (BigInt::from(r), try_positive),
                    (-BigInt::from(r), try_negative),
                ] {
                    if !allowed {
                        continue;
                    }
                    let mut mult = 0;
                    loop {
                        let (quot, rem) = q.div_linear(&candidate);
                        if !rem.is_zero() {
                            break;
                        }
                        q = quot;
                        mult += 1;
                    }
                    if mult > 0 {
                        roots.push((candidate, mult));
                        progressed = true;
                    }
                }
            }
            if !progressed {
                r += 1;
            }
        }
        roots.sort();
        IntegerRoots { roots, residual: q }
    }

    /// Real roots with multiplicity, ascending, for a polynomial whose roots
    /// are all real (characteristic polynomials of matrices similar to
    /// symmetric ones). Fails if isolation does not account for every root.
    pub fn real_roots(&self) -> Result<Vec<(f64, u64)>> {
        let mut out = Vec::new();
        for (factor, mult) in self.squarefree_decomposition() {
            for root in simple_real_roots(&factor)? {
                out.push((root, mult));
            }
        }
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(out)
    }

    /// Exact sign of `p(x)` at a finite double `x`.
    pub fn sign_at(&self, x: f64) -> Ordering {
        SignEvaluator::new(self).sign(x)
    }
}

/// `log2 |c|` for nonzero `c`.
fn log2_abs(c: &BigInt) -> f64 {
    let bits = c.bits();
    if bits <= 64 {
        return libm::log2(c.magnitude().to_u64().unwrap_or(u64::MAX) as f64);
    }
    let top = (c.magnitude() >> (bits - 64) as usize)
        .to_u64()
        .unwrap_or(u64::MAX);
    libm::log2(top as f64) + (bits - 64) as f64
}

/// `c * 2^shift` rounded to the nearest double (saturating to infinity).
fn scaled_to_f64(c: &BigInt, shift: i64) -> f64 {
    if c.is_zero() {
        return 0.0;
    }
    let bits = c.bits() as i64;
    let drop = (bits - 64).max(0);
    let top = (c.magnitude() >> drop as usize)
        .to_u64()
        .unwrap_or(u64::MAX) as f64;
    let exp = (drop + shift).clamp(-2000, 2000) as i32;
    let v = libm::ldexp(top, exp);
    if c.is_negative() {
        -v
    } else {
        v
    }
}

/// Splits a finite double into `mantissa * 2^exp` exactly.
fn dyadic(x: f64) -> (i64, i32) {
    if x == 0.0 {
        return (0, 0);
    }
    let (frac, exp) = libm::frexp(x);
    // frac in [0.5, 1): 53 significant bits
    let m = libm::ldexp(frac, 53) as i64;
    (m, exp - 53)
}

/// Evaluates the sign of an integer polynomial at doubles, in floating point
/// with a rigorous error bound and exactly when that bound is inconclusive.
struct SignEvaluator<'a> {
    exact: &'a IntPoly,
    scaled: Vec<f64>,
    scale: i32,
}

impl<'a> SignEvaluator<'a> {
    fn new(p: &'a IntPoly) -> Self {
        // substitute x = 2^scale * y so the roots of the scaled polynomial are O(1)
        let bound = p.root_bound().max(1.0);
        let scale = libm::ceil(libm::log2(bound)) as i32;
        let d = p.degree() as i64;
        let lead_shift = -(log2_abs(&p.leading()) as i64);
        let scaled = p
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| scaled_to_f64(c, scale as i64 * (i as i64 - d) + lead_shift))
            .collect();
        SignEvaluator {
            exact: p,
            scaled,
            scale,
        }
    }

    fn sign(&self, x: f64) -> Ordering {
        let y = libm::ldexp(x, -self.scale);
        let mut val = 0.0f64;
        let mut mag = 0.0f64;
        for &c in self.scaled.iter().rev() {
            val = val * y + c;
            mag = mag * y.abs() + c.abs();
        }
        let n = self.scaled.len() as f64;
        let err = (2.0 * n + 4.0) * f64::EPSILON * mag;
        // y must represent x exactly (no underflow) for the bound to apply
        if val.is_finite() && mag.is_finite() && val.abs() > err && libm::ldexp(y, self.scale) == x
        {
            return val.partial_cmp(&0.0).unwrap_or(Ordering::Equal);
        }
        self.exact_sign(x)
    }

    fn exact_sign(&self, x: f64) -> Ordering {
        let (m, t) = dyadic(x);
        let m = BigInt::from(m);
        let coeffs = &self.exact.coeffs;
        let Some(top) = coeffs.last() else {
            return Ordering::Equal;
        };
        let value = if t >= 0 {
            let xb = m << t as usize;
            self.exact.eval(&xb)
        } else {
            // 2^(-t d) p(m 2^t) = sum c_i m^i 2^(-t (d - i))
            let s = (-t) as usize;
            let d = coeffs.len() - 1;
            let mut acc = top.clone();
            for i in (0..d).rev() {
                acc = acc * &m + (&coeffs[i] << (s * (d - i)));
            }
            acc
        };
        value.sign_cmp()
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        match self.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

/// Roots of a square-free real-rooted polynomial.
///
/// The roots of `p'` strictly interlace those of `p`, so each gap between
/// consecutive critical points (padded by the root bound) holds exactly one
/// root, found by bisection on exact signs.
fn simple_real_roots(p: &IntPoly) -> Result<Vec<f64>> {
    let d = p.degree();
    if d == 0 {
        return Ok(Vec::new());
    }
    if d == 1 {
        return Ok(vec![rational_to_f64(&-&p.coeffs[0], &p.coeffs[1])]);
    }
    let critical = simple_real_roots(&p.derivative())?;
    let bound = p.root_bound();
    let mut brackets = Vec::with_capacity(d + 1);
    brackets.push(-bound);
    brackets.extend(critical);
    brackets.push(bound);
    let eval = SignEvaluator::new(p);
    let signs: Vec<Ordering> = brackets.iter().map(|&x| eval.sign(x)).collect();
    let mut roots = Vec::with_capacity(d);
    for (i, w) in brackets.windows(2).enumerate() {
        let (sa, sb) = (signs[i], signs[i + 1]);
        if sa == Ordering::Equal {
            if roots.last() != Some(&w[0]) {
                roots.push(w[0]);
            }
            continue;
        }
        if sb == Ordering::Equal {
            roots.push(w[1]);
            continue;
        }
        if sa != sb {
            roots.push(bisect(&eval, w[0], w[1], sa));
        }
    }
    if roots.len() != d {
        return Err(Error::Inconsistent(
            "real-root isolation found fewer roots than the degree",
        ));
    }
    Ok(roots)
}

fn bisect(eval: &SignEvaluator<'_>, mut a: f64, mut b: f64, sign_a: Ordering) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b || (b - a) <= 1e-15 * a.abs().max(b.abs()).max(1e-3) {
            break;
        }
        match eval.sign(mid) {
            Ordering::Equal => return mid,
            s if s == sign_a => a = mid,
            _ => b = mid,
        }
    }
    0.5 * (a + b)
}

fn rational_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    let shift = log2_abs(den).max(log2_abs(num)) as i64;
    let shift = (shift - 60).max(0);
    // both scaled down into double range before dividing
    scaled_to_f64(num, -shift) / scaled_to_f64(den, -shift)
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_default()
                        + rhs.coeffs.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
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
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPoly::from_i64(&[0, 0, 12, -8, 1]).to_string(),
            "x^4 - 8x^3 + 12x^2"
        );
        assert_eq!(IntPoly::from_i64(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(IntPoly::from_i64(&[5, -1]).to_string(), "-x + 5");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn translate_moves_roots() {
        // (x - 1)(x - 2) shifted by 3 -> (x - 4)(x - 5)
        let p = IntPoly::from_i64(&[2, -3, 1]);
        assert_eq!(p.translate(&big(3)), IntPoly::from_i64(&[20, -9, 1]));
        assert_eq!(IntPoly::one().translate(&big(7)), IntPoly::one());
    }

    #[test]
    fn integer_roots_examples() {
        let r = IntPoly::from_i64(&[0, 0, 12, -8, 1]).extract_integer_roots();
        assert_eq!(r.roots, vec![(big(0), 2), (big(2), 1), (big(6), 1)]);
        assert!(r.residual.is_one());

        let r = IntPoly::from_i64(&[-2, 0, 1]).extract_integer_roots();
        assert!(r.roots.is_empty());
        assert_eq!(r.residual, IntPoly::from_i64(&[-2, 0, 1]));

        let r = IntPoly::from_i64(&[-5, 1]).extract_integer_roots();
        assert_eq!(r.roots, vec![(big(5), 1)]);
        assert!(r.residual.is_one());
    }

    #[test]
    fn integer_roots_negative_and_repeated() {
        // (x + 3)^2 (x - 4)^3 (x^2 + 1)
        let p =
            &IntPoly::from_roots([(&big(-3), 2), (&big(4), 3)]) * &IntPoly::from_i64(&[1, 0, 1]);
        let r = p.extract_integer_roots();
        assert_eq!(r.roots, vec![(big(-3), 2), (big(4), 3)]);
        assert_eq!(r.residual, IntPoly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn squarefree_decomposition_example() {
        // (x - 1)^3 (x^2 - 2)^2 (x + 5)
        let a = IntPoly::from_i64(&[-1, 1]);
        let b = IntPoly::from_i64(&[-2, 0, 1]);
        let c = IntPoly::from_i64(&[5, 1]);
        let p = &(&a.pow(3) * &b.pow(2)) * &c;
        let dec = p.squarefree_decomposition();
        assert_eq!(dec, vec![(c, 1), (b, 2), (a, 3)]);
    }

    #[test]
    fn real_roots_of_quadratic_with_multiplicity() {
        let b = IntPoly::from_i64(&[-2, 0, 1]);
        let p = &b.pow(2) * &IntPoly::from_i64(&[-3, 1]);
        let roots = p.real_roots().unwrap();
        assert_eq!(roots.len(), 3);
        let s2 = libm::sqrt(2.0);
        assert!((roots[0].0 + s2).abs() < 1e-14 && roots[0].1 == 2);
        assert!((roots[1].0 - s2).abs() < 1e-14 && roots[1].1 == 2);
        assert_eq!(roots[2], (3.0, 1));
    }

    #[test]
    fn real_roots_rejects_complex() {
        assert!(IntPoly::from_i64(&[1, 0, 1]).real_roots().is_err());
    }

    #[test]
    fn sign_at_is_exact_near_roots() {
        // x^2 - 2 at the doubles bracketing sqrt(2)
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let s = libm::sqrt(2.0);
        let below = f64::from_bits(s.to_bits() - 1);
        let above = f64::from_bits(s.to_bits() + 1);
        let signs = [p.sign_at(below), p.sign_at(s), p.sign_at(above)];
        // sqrt(2) rounded down or up: the three signs are monotone and nonzero
        assert!(signs.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(signs[0], Ordering::Less);
        assert_eq!(signs[2], Ordering::Greater);
    }

    #[test]
    fn wilkinson_like_real_roots() {
        let roots: Vec<BigInt> = (1..=20).map(big).collect();
        let p = IntPoly::from_roots(roots.iter().map(|r| (r, 1)));
        let found = p.real_roots().unwrap();
        for (k, (x, m)) in found.iter().enumerate() {
            assert_eq!(*m, 1);
            assert!((x - (k + 1) as f64).abs() < 1e-9, "{x}");
        }
    }

    proptest! {
        #[test]
        fn extraction_reconstructs(
            roots in proptest::collection::vec((-30i64..30, 1u64..4), 0..5),
            extra in proptest::collection::vec(-5i64..5, 0..3),
        ) {
            let mut p = IntPoly::one();
            for &(r, m) in &roots {
                p = &p * &IntPoly::linear_root(&big(r)).pow(m);
            }
            // x^2 + k with k > 0 has no real roots
            for &k in &extra {
                p = &p * &IntPoly::from_i64(&[k * k + 1, 0, 1]);
            }
            let out = p.extract_integer_roots();
            let rebuilt = &IntPoly::from_roots(out.roots.iter().map(|(r, m)| (r, *m))) * &out.residual;
            prop_assert_eq!(&rebuilt, &p);
            prop_assert!(out.residual.extract_integer_roots().roots.is_empty());
            let distinct: alloc::collections::BTreeSet<i64> = roots.iter().map(|r| r.0).collect();
            prop_assert_eq!(out.roots.len(), distinct.len());
        }

        #[test]
        fn translate_then_back(coeffs in proptest::collection::vec(-50i64..50, 1..7), c in -20i64..20) {
            let p = IntPoly::from_i64(&coeffs);
            prop_assert_eq!(p.translate(&big(c)).translate(&big(-c)), p.clone());
            // q(x) = p(x - c) so q(x + c) = p(x)
            let x = big(3);
            prop_assert_eq!(p.translate(&big(c)).eval(&(&x + c)), p.eval(&x));
        }
    }
}
