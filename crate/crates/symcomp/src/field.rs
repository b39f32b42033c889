//! Exact scalar arithmetic over ℚ, prime fields F_p, and quadratic
//! extensions F(ω) generated by a primitive cube root of unity.
//!
//! A [`FieldSpec`] is the arithmetic context: elements do not carry their
//! modulus, so every operation goes through the field spec. Elements are
//! kept in canonical form at all times (reduced fraction with positive
//! denominator, residue in `[0, p)`, canonical base coefficients for
//! `a + b·ω`).

use crate::error::{Error, Result};

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::Rng;
use std::fmt;
use std::str::FromStr;

/// Description of a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    /// The rational numbers with arbitrary-precision arithmetic.
    Rational,
    /// The prime field F_p.
    Prime(u64),
    /// The quadratic extension of the base field by a root ω of t² + t + 1.
    /// Only constructible when that polynomial is irreducible over the base.
    OmegaExt(Box<FieldSpec>),
}

/// An element of some [`FieldSpec`]. Which field it belongs to is contextual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElement {
    Rational(BigRational),
    Prime(u64),
    /// `re + im·ω` with components in the base field.
    Ext(Box<(FieldElement, FieldElement)>),
}

/// Deterministic Miller–Rabin primality test, exact for all `u64`.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    /// The prime field F_p; rejects composite moduli.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if is_prime_u64(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Adjoin a primitive cube root of unity ω (a root of t² + t + 1).
    ///
    /// Fails when the base already contains one, or has characteristic 3
    /// (where t² + t + 1 = (t − 1)² is not irreducible).
    pub fn omega_ext(base: FieldSpec) -> Result<FieldSpec> {
        if base.characteristic() == 3 {
            return Err(Error::OmegaNotAdjoinable(format!(
                "{base} has characteristic 3"
            )));
        }
        if base.omega().is_some() {
            return Err(Error::OmegaNotAdjoinable(format!(
                "{base} already contains a primitive cube root of unity"
            )));
        }
        Ok(FieldSpec::OmegaExt(Box::new(base)))
    }

    /// 0 for ℚ, p for prime fields and their extensions.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
            FieldSpec::OmegaExt(base) => base.characteristic(),
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn size(&self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(*p),
            FieldSpec::OmegaExt(base) => base.size().and_then(|q| q.checked_mul(q)),
        }
    }

    /// The element with a given enumeration index; inverse of nothing in
    /// particular, just a fixed odometer order used by exhaustive searches.
    pub fn element_at(&self, idx: u64) -> FieldElement {
        match self {
            FieldSpec::Rational => panic!("cannot enumerate an infinite field"),
            FieldSpec::Prime(_) => FieldElement::Prime(idx),
            FieldSpec::OmegaExt(base) => {
                let q = base.size().expect("finite base");
                FieldElement::Ext(Box::new((
                    base.element_at(idx % q),
                    base.element_at(idx / q),
                )))
            }
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => FieldElement::Prime(0),
            FieldSpec::OmegaExt(base) => {
                FieldElement::Ext(Box::new((base.zero(), base.zero())))
            }
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::one()),
            FieldSpec::Prime(_) => FieldElement::Prime(1),
            FieldSpec::OmegaExt(base) => {
                FieldElement::Ext(Box::new((base.one(), base.zero())))
            }
        }
    }

    /// Canonical image of a signed integer.
    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                FieldElement::Prime(r)
            }
            FieldSpec::OmegaExt(base) => {
                FieldElement::Ext(Box::new((base.from_i64(n), base.zero())))
            }
        }
    }

    /// Whether `e` is a canonical element of this field.
    pub fn contains(&self, e: &FieldElement) -> bool {
        match (self, e) {
            (FieldSpec::Rational, FieldElement::Rational(_)) => true,
            (FieldSpec::Prime(p), FieldElement::Prime(v)) => v < p,
            (FieldSpec::OmegaExt(base), FieldElement::Ext(parts)) => {
                base.contains(&parts.0) && base.contains(&parts.1)
            }
            _ => false,
        }
    }

    fn expect_member<'a>(&self, e: &'a FieldElement) -> &'a FieldElement {
        debug_assert!(
            self.contains(e),
            "element {e:?} does not belong to {self}"
        );
        e
    }

    pub fn is_zero(&self, e: &FieldElement) -> bool {
        match e {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Prime(v) => *v == 0,
            FieldElement::Ext(parts) => {
                let base = self.ext_base();
                base.is_zero(&parts.0) && base.is_zero(&parts.1)
            }
        }
    }

    pub fn is_one(&self, e: &FieldElement) -> bool {
        *e == self.one()
    }

    fn ext_base(&self) -> &FieldSpec {
        match self {
            FieldSpec::OmegaExt(base) => base,
            _ => panic!("not an extension field"),
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.expect_member(a);
        self.expect_member(b);
        match (a, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x + y)
            }
            (FieldElement::Prime(x), FieldElement::Prime(y)) => {
                let p = self.prime_modulus();
                FieldElement::Prime((x + y) % p)
            }
            (FieldElement::Ext(x), FieldElement::Ext(y)) => {
                let base = self.ext_base();
                FieldElement::Ext(Box::new((base.add(&x.0, &y.0), base.add(&x.1, &y.1))))
            }
            _ => panic!("mixed field elements"),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match a {
            FieldElement::Rational(x) => FieldElement::Rational(-x),
            FieldElement::Prime(x) => {
                let p = self.prime_modulus();
                FieldElement::Prime(if *x == 0 { 0 } else { p - x })
            }
            FieldElement::Ext(x) => {
                let base = self.ext_base();
                FieldElement::Ext(Box::new((base.neg(&x.0), base.neg(&x.1))))
            }
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.expect_member(a);
        self.expect_member(b);
        match (a, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x * y)
            }
            (FieldElement::Prime(x), FieldElement::Prime(y)) => {
                let p = self.prime_modulus();
                FieldElement::Prime(mul_mod(*x, *y, p))
            }
            (FieldElement::Ext(x), FieldElement::Ext(y)) => {
                // (x0 + x1 ω)(y0 + y1 ω) with ω² = −1 − ω.
                let base = self.ext_base();
                let x0y0 = base.mul(&x.0, &y.0);
                let x1y1 = base.mul(&x.1, &y.1);
                let cross = base.add(&base.mul(&x.0, &y.1), &base.mul(&x.1, &y.0));
                FieldElement::Ext(Box::new((
                    base.sub(&x0y0, &x1y1),
                    base.sub(&cross, &x1y1),
                )))
            }
            _ => panic!("mixed field elements"),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match a {
            FieldElement::Rational(x) => FieldElement::Rational(x.recip()),
            FieldElement::Prime(x) => {
                let p = self.prime_modulus();
                FieldElement::Prime(pow_mod(*x, p - 2, p))
            }
            FieldElement::Ext(x) => {
                // (a + bω)⁻¹ = (a + bω̄) / N where ω̄ = −1 − ω and
                // N = (a + bω)(a + bω̄) = a² − ab + b² lies in the base.
                let base = self.ext_base();
                let conj = self.omega_conj(a);
                let norm = base.sub(
                    &base.add(&base.mul(&x.0, &x.0), &base.mul(&x.1, &x.1)),
                    &base.mul(&x.0, &x.1),
                );
                let ninv = base.inv(&norm)?;
                let lifted = FieldElement::Ext(Box::new((ninv, base.zero())));
                self.mul(&conj, &lifted)
            }
        })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u128) -> FieldElement {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    fn prime_modulus(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            _ => panic!("not a prime field"),
        }
    }

    /// A primitive cube root of unity, when the field has one. For prime
    /// fields the smaller of the two roots is returned.
    pub fn omega(&self) -> Option<FieldElement> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => {
                if p % 3 != 1 {
                    return None;
                }
                for a in 2..*p {
                    let c = pow_mod(a, (p - 1) / 3, *p);
                    if c != 1 {
                        return Some(FieldElement::Prime(c.min(pow_mod(c, 2, *p))));
                    }
                }
                None
            }
            FieldSpec::OmegaExt(base) => {
                Some(FieldElement::Ext(Box::new((base.zero(), base.one()))))
            }
        }
    }

    /// The nontrivial base-automorphism of an ω-extension: ω ↦ ω² = −1 − ω.
    /// Identity on the base fields themselves.
    pub fn omega_conj(&self, a: &FieldElement) -> FieldElement {
        match (self, a) {
            (FieldSpec::OmegaExt(base), FieldElement::Ext(x)) => {
                // a + bω ↦ a + b(−1 − ω) = (a − b) − bω.
                FieldElement::Ext(Box::new((base.sub(&x.0, &x.1), base.neg(&x.1))))
            }
            _ => a.clone(),
        }
    }

    /// Lift a base-field element into this ω-extension.
    pub fn lift(&self, a: &FieldElement) -> FieldElement {
        match self {
            FieldSpec::OmegaExt(base) => {
                debug_assert!(base.contains(a));
                FieldElement::Ext(Box::new((a.clone(), base.zero())))
            }
            _ => panic!("lift targets an extension field"),
        }
    }

    /// A canonical square root, when one exists.
    pub fn sqrt(&self, a: &FieldElement) -> Option<FieldElement> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        match (self, a) {
            (FieldSpec::Rational, FieldElement::Rational(r)) => {
                if r.is_negative() {
                    return None;
                }
                let n = r.numer();
                let d = r.denom();
                let sn = n.sqrt();
                let sd = d.sqrt();
                if &(&sn * &sn) == n && &(&sd * &sd) == d {
                    Some(FieldElement::Rational(BigRational::new(sn, sd)))
                } else {
                    None
                }
            }
            (FieldSpec::Prime(p), FieldElement::Prime(v)) => {
                prime_sqrt(*v, *p).map(FieldElement::Prime)
            }
            (FieldSpec::OmegaExt(base), FieldElement::Ext(parts)) => {
                let root = if self.characteristic() == 2 {
                    // Squaring is the Frobenius, a bijection: invert it by
                    // raising to q/2 where q is the field size.
                    let q = self.size()?;
                    Some(self.pow(a, (q / 2) as u128))
                } else {
                    self.ext_sqrt_odd(base, &parts.0, &parts.1)
                }?;
                debug_assert_eq!(self.mul(&root, &root), *a);
                let neg = self.neg(&root);
                Some(if self.format(&root) <= self.format(&neg) {
                    root
                } else {
                    neg
                })
            }
            _ => panic!("mixed field elements"),
        }
    }

    /// Square roots of `a0 + a1 ω` in odd characteristic, solving
    /// (x + yω)² = (x² − y²) + (2x − y)y·ω componentwise.
    fn ext_sqrt_odd(
        &self,
        base: &FieldSpec,
        a0: &FieldElement,
        a1: &FieldElement,
    ) -> Option<FieldElement> {
        let mk = |re: FieldElement, im: FieldElement| FieldElement::Ext(Box::new((re, im)));
        if base.is_zero(a1) {
            // Either y = 0 and x² = a0, or y = 2x and −3x² = a0.
            if let Some(x) = base.sqrt(a0) {
                return Some(mk(x, base.zero()));
            }
            let m3 = base.from_i64(-3);
            let x2 = base.div(a0, &m3).ok()?;
            let x = base.sqrt(&x2)?;
            let y = base.mul(&base.from_i64(2), &x);
            return Some(mk(x, y));
        }
        // y ≠ 0: x = (a1/y + y)/2, and u = y² solves 3u² + (4a0 − 2a1)u − a1² = 0.
        let lin = base.sub(
            &base.mul(&base.from_i64(4), a0),
            &base.mul(&base.from_i64(2), a1),
        );
        let disc = base.add(
            &base.mul(&lin, &lin),
            &base.mul(&base.from_i64(12), &base.mul(a1, a1)),
        );
        let sd = base.sqrt(&disc)?;
        let six_inv = base.inv(&base.from_i64(6)).ok()?;
        for sign in [1i64, -1] {
            let num = base.add(&base.neg(&lin), &base.mul(&base.from_i64(sign), &sd));
            let u = base.mul(&num, &six_inv);
            if let Some(y) = base.sqrt(&u) {
                if base.is_zero(&y) {
                    continue;
                }
                let half = base.inv(&base.from_i64(2)).ok()?;
                let x = base.mul(&base.add(&base.div(a1, &y).ok()?, &y), &half);
                let cand = mk(x, y);
                if self.mul(&cand, &cand) == mk(a0.clone(), a1.clone()) {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// Uniform random element over finite fields; small random fraction over ℚ.
    pub fn random<R: Rng>(&self, rng: &mut R) -> FieldElement {
        match self {
            FieldSpec::Rational => {
                let n = rng.gen_range(-9i64..=9);
                let d = rng.gen_range(1i64..=4);
                FieldElement::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
            FieldSpec::Prime(p) => FieldElement::Prime(rng.gen_range(0..*p)),
            FieldSpec::OmegaExt(base) => FieldElement::Ext(Box::new((
                base.random(rng),
                base.random(rng),
            ))),
        }
    }

    /// Canonical textual form: `"3"`, `"-2/5"`, `"1+t"`, `"2/5t"`, …
    /// The letter `t` denotes ω in extension fields.
    pub fn format(&self, e: &FieldElement) -> String {
        match e {
            FieldElement::Rational(r) => r.to_string(),
            FieldElement::Prime(v) => v.to_string(),
            FieldElement::Ext(parts) => {
                let base = self.ext_base();
                let (re, im) = (&parts.0, &parts.1);
                if base.is_zero(im) {
                    return base.format(re);
                }
                let t_part = if base.is_one(im) {
                    "t".to_string()
                } else if *im == base.from_i64(-1) {
                    "-t".to_string()
                } else {
                    format!("{}t", base.format(im))
                };
                if base.is_zero(re) {
                    t_part
                } else if t_part.starts_with('-') {
                    format!("{}{}", base.format(re), t_part)
                } else {
                    format!("{}+{}", base.format(re), t_part)
                }
            }
        }
    }

    /// Parse the textual form accepted by [`FieldSpec::format`]. Prime-field
    /// scalars also accept signed integers and fractions, reduced mod p.
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        match self {
            FieldSpec::Rational => {
                let r = BigRational::from_str(s)
                    .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))?;
                Ok(FieldElement::Rational(r))
            }
            FieldSpec::Prime(_) => self.parse_prime_coeff(s),
            FieldSpec::OmegaExt(base) => {
                // Split an optional second term at a '+' or '-' past index 0.
                let bytes = s.as_bytes();
                let mut split = None;
                for i in 1..bytes.len() {
                    if bytes[i] == b'+' || bytes[i] == b'-' {
                        split = Some(i);
                        break;
                    }
                }
                let (first, second) = match split {
                    Some(i) => {
                        let sep = bytes[i] as char;
                        let rest = &s[i + if sep == '+' { 1 } else { 0 }..];
                        (&s[..i], Some(rest))
                    }
                    None => (s, None),
                };
                let term = |txt: &str| -> Result<(FieldElement, bool)> {
                    // Returns (coefficient, is_t_term).
                    if let Some(coef) = txt.strip_suffix('t') {
                        let c = match coef {
                            "" => base.one(),
                            "-" => base.from_i64(-1),
                            _ => base.parse(coef)?,
                        };
                        Ok((c, true))
                    } else {
                        Ok((base.parse(txt)?, false))
                    }
                };
                let mut re = base.zero();
                let mut im = base.zero();
                let mut seen_t = false;
                let mut seen_re = false;
                for part in std::iter::once(first).chain(second) {
                    let (c, is_t) = term(part)?;
                    if is_t {
                        if seen_t {
                            return Err(Error::Parse(format!("two t-terms in {s:?}")));
                        }
                        seen_t = true;
                        im = c;
                    } else {
                        if seen_re {
                            return Err(Error::Parse(format!("two constant terms in {s:?}")));
                        }
                        seen_re = true;
                        re = c;
                    }
                }
                Ok(FieldElement::Ext(Box::new((re, im))))
            }
        }
    }

    fn parse_prime_coeff(&self, s: &str) -> Result<FieldElement> {
        let p = self.prime_modulus();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let parse_int = |txt: &str| -> Result<FieldElement> {
            let (neg, digits) = match txt.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, txt),
            };
            let v = digits
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad residue {txt:?}: {e}")))?;
            let r = FieldElement::Prime(v % p);
            Ok(if neg { self.neg(&r) } else { r })
        };
        let n = parse_int(num)?;
        match den {
            None => Ok(n),
            Some(d) => self.div(&n, &parse_int(d)?),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::OmegaExt(base) => write!(f, "{base}(omega)"),
        }
    }
}

/// Tonelli–Shanks square root in F_p, returning the smaller of the two roots.
fn prime_sqrt(a: u64, p: u64) -> Option<u64> {
    if p == 2 {
        return Some(a);
    }
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let root = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        // Full Tonelli–Shanks for p ≡ 1 (mod 4).
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while pow_mod(z, (p - 1) / 2, p) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a, q, p);
        let mut r = pow_mod(a, (q + 1) / 2, p);
        while t != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt != 1 {
                tt = mul_mod(tt, tt, p);
                i += 1;
            }
            let b = pow_mod(c, 1 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        r
    };
    Some(root.min(p - root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> FieldSpec {
        FieldSpec::prime(7).unwrap()
    }

    fn f2w() -> FieldSpec {
        FieldSpec::omega_ext(FieldSpec::prime(2).unwrap()).unwrap()
    }

    #[test]
    fn inverse_of_three_mod_seven_is_five() {
        let f = f7();
        assert_eq!(f.inv(&f.from_i64(3)).unwrap(), f.from_i64(5));
    }

    #[test]
    fn inverse_of_one_is_one_everywhere() {
        for f in [FieldSpec::Rational, f7(), f2w()] {
            assert_eq!(f.inv(&f.one()).unwrap(), f.one());
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f = f7();
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn omega_inverse_in_f4_is_omega_plus_one() {
        // In F_2(ω): ω · (ω + 1) = ω² + ω = (−1 − ω) + ω = 1.
        let f = f2w();
        let t = f.omega().unwrap();
        let expected = f.parse("1+t").unwrap();
        assert_eq!(f.inv(&t).unwrap(), expected);
        assert_eq!(f.mul(&t, &expected), f.one());
    }

    #[test]
    fn omega_has_order_three() {
        for f in [
            f7(),
            FieldSpec::prime(13).unwrap(),
            f2w(),
            FieldSpec::omega_ext(FieldSpec::Rational).unwrap(),
        ] {
            let w = f.omega().unwrap();
            assert!(!f.is_one(&w));
            assert_eq!(f.pow(&w, 3), f.one());
            // ω² + ω + 1 = 0.
            let sum = f.add(&f.add(&f.mul(&w, &w), &w), &f.one());
            assert!(f.is_zero(&sum));
        }
    }

    #[test]
    fn fields_without_omega_report_none() {
        assert!(FieldSpec::Rational.omega().is_none());
        assert!(FieldSpec::prime(5).unwrap().omega().is_none());
        assert!(FieldSpec::prime(3).unwrap().omega().is_none());
        assert_eq!(f7().omega(), Some(FieldElement::Prime(2)));
        assert_eq!(FieldSpec::prime(13).unwrap().omega(), Some(FieldElement::Prime(3)));
    }

    #[test]
    fn omega_ext_rejects_char_three_and_existing_omega() {
        assert!(FieldSpec::omega_ext(FieldSpec::prime(3).unwrap()).is_err());
        assert!(FieldSpec::omega_ext(f7()).is_err());
        assert!(FieldSpec::omega_ext(f2w()).is_err());
        assert!(FieldSpec::omega_ext(FieldSpec::prime(5).unwrap()).is_ok());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(FieldSpec::prime(6), Err(Error::NotPrime(6)));
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(65537).is_ok());
    }

    #[test]
    fn rational_canonical_form_is_reduced() {
        let f = FieldSpec::Rational;
        let x = f.div(&f.from_i64(4), &f.from_i64(-6)).unwrap();
        assert_eq!(f.format(&x), "-2/3");
    }

    #[test]
    fn format_parse_round_trip_examples() {
        let cases: Vec<(FieldSpec, &str)> = vec![
            (FieldSpec::Rational, "3"),
            (FieldSpec::Rational, "-2/5"),
            (f7(), "5"),
            (f2w(), "0"),
            (f2w(), "1+t"),
            (f2w(), "t"),
            (
                FieldSpec::omega_ext(FieldSpec::Rational).unwrap(),
                "1/2-2/3t",
            ),
            (FieldSpec::omega_ext(FieldSpec::Rational).unwrap(), "-t"),
        ];
        for (f, s) in cases {
            let e = f.parse(s).unwrap();
            assert_eq!(f.format(&e), s, "round-trip through {f}");
        }
    }

    #[test]
    fn prime_parser_accepts_signed_and_fractional_input() {
        let f = f7();
        assert_eq!(f.parse("-1").unwrap(), f.from_i64(6));
        assert_eq!(f.parse("2/5").unwrap(), f.mul(&f.from_i64(2), &f.inv(&f.from_i64(5)).unwrap()));
    }

    #[test]
    fn sqrt_examples() {
        let f = f7();
        let r = f.sqrt(&f.from_i64(2)).unwrap();
        assert_eq!(f.mul(&r, &r), f.from_i64(2));
        assert!(f.sqrt(&f.from_i64(3)).is_none()); // 3 is not a square mod 7
        let q = FieldSpec::Rational;
        assert_eq!(q.sqrt(&q.parse("9/4").unwrap()), Some(q.parse("3/2").unwrap()));
        assert!(q.sqrt(&q.parse("2").unwrap()).is_none());
        // p ≡ 1 (mod 4) exercises the general Tonelli–Shanks branch.
        let f13 = FieldSpec::prime(13).unwrap();
        let r = f13.sqrt(&f13.from_i64(10)).unwrap();
        assert_eq!(f13.mul(&r, &r), f13.from_i64(10));
    }

    #[test]
    fn ext_sqrt_finds_roots() {
        // ω itself is a square in F_7(…)? Use F_5(ω) = F_25: every element of
        // F_25 that passes x^12 = 1 has a root; spot-check a few.
        let f = FieldSpec::omega_ext(FieldSpec::prime(5).unwrap()).unwrap();
        let mut found = 0;
        let q = f.size().unwrap();
        for i in 0..q {
            let a = f.element_at(i);
            if let Some(r) = f.sqrt(&a) {
                assert_eq!(f.mul(&r, &r), a);
                found += 1;
            }
        }
        // Exactly (q − 1)/2 nonzero squares plus zero.
        assert_eq!(found, (q - 1) / 2 + 1);
        // Char 2: squaring is bijective, everything has a root.
        let f4 = f2w();
        for i in 0..4 {
            let a = f4.element_at(i);
            let r = f4.sqrt(&a).unwrap();
            assert_eq!(f4.mul(&r, &r), a);
        }
    }

    #[test]
    fn enumeration_covers_the_field_once() {
        let f = f2w();
        let mut seen = std::collections::HashSet::new();
        for i in 0..f.size().unwrap() {
            seen.insert(f.format(&f.element_at(i)));
        }
        assert_eq!(seen.len(), 4);
    }

    proptest! {
        #[test]
        fn field_axioms_mod_seven(a in 0u64..7, b in 0u64..7, c in 0u64..7) {
            let f = f7();
            let (a, b, c) = (FieldElement::Prime(a), FieldElement::Prime(b), FieldElement::Prime(c));
            prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            prop_assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            if !f.is_zero(&a) {
                let inv = f.inv(&a).unwrap();
                prop_assert_eq!(f.mul(&a, &inv), f.one());
                prop_assert_eq!(f.inv(&inv).unwrap(), a);
            }
        }

        #[test]
        fn ext_format_parse_round_trip(re in 0u64..5, im in 0u64..5) {
            let f = FieldSpec::omega_ext(FieldSpec::prime(5).unwrap()).unwrap();
            let e = FieldElement::Ext(Box::new((FieldElement::Prime(re), FieldElement::Prime(im))));
            let s = f.format(&e);
            prop_assert_eq!(f.parse(&s).unwrap(), e);
        }

        #[test]
        fn rational_format_parse_round_trip(n in -40i64..40, d in 1i64..12) {
            let f = FieldSpec::Rational;
            let e = FieldElement::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)));
            let s = f.format(&e);
            prop_assert_eq!(f.parse(&s).unwrap(), e);
        }
    }
}
