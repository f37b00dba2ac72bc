//! Arithmetic in GF(q) for odd prime powers q = p^m.
//!
//! Elements are plain [`Fe`] handles; every operation goes through the
//! [`Field`] that owns them. An element with coefficient tuple
//! `(c_0, .., c_{m-1})` (residue of `c_0 + c_1 t + .. ` modulo the defining
//! polynomial) has canonical index `c_0 + c_1 p + .. + c_{m-1} p^{m-1}`.
//! Ordering, enumeration and serialization all use that index.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::upoly::Poly;

/// Default upper bound on the field order.
pub const DEFAULT_MAX_ORDER: u32 = 1 << 16;

const MAX_DEGREE: usize = 16;

/// Element of some [`Field`], stored by canonical index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Canonical index in `[0, q)`.
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The finite field GF(p^m), p odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    /// Monic defining polynomial over GF(p), low degree first, length m+1.
    /// Empty for prime fields.
    modulus: Vec<u32>,
    nonresidue: Fe,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// GF(p^m). For `m > 1` the modulus is either supplied (monic, degree m,
    /// low degree first) or the first irreducible monic polynomial in
    /// canonical-index order is used.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        Self::with_max_order(p, m, modulus, DEFAULT_MAX_ORDER)
    }

    pub fn prime(p: u32) -> Result<Field> {
        Self::new(p, 1, None)
    }

    pub fn with_max_order(
        p: u32,
        m: u32,
        modulus: Option<&[u32]>,
        max_order: u32,
    ) -> Result<Field> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || m as usize > MAX_DEGREE {
            return Err(Error::InvalidFieldDegree(m));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= max_order as u64);
        let Some(q) = q else {
            return Err(Error::FieldTooLarge {
                p,
                m,
                max: max_order,
            });
        };
        let q = q as u32;
        let modulus = if m == 1 {
            if modulus.is_some_and(|c| c.len() > 2) {
                return Err(Error::ReducibleModulus);
            }
            Vec::new()
        } else {
            let base = Field::prime(p)?;
            match modulus {
                Some(c) => {
                    let coeffs: Vec<u32> = c.iter().map(|&x| x % p).collect();
                    if coeffs.len() != m as usize + 1 || coeffs[m as usize] != 1 {
                        return Err(Error::InvalidModulus(format!(
                            "expected a monic polynomial of degree {m}"
                        )));
                    }
                    let poly = Poly::new(coeffs.iter().map(|&x| base.from_u64(x as u64)).collect());
                    if !poly.is_irreducible(&base) {
                        return Err(Error::ReducibleModulus);
                    }
                    coeffs
                }
                None => search_modulus(&base, m),
            }
        };
        let mut field = Field {
            p,
            m,
            q,
            modulus,
            nonresidue: Fe::ZERO,
        };
        field.nonresidue = field
            .elements()
            .find(|&a| !a.is_zero() && !field.is_square(a))
            .expect("odd q always has a non-residue");
        Ok(field)
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Defining polynomial over GF(p), low degree first; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Element enumeration in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q).map(Fe)
    }

    pub fn from_index(&self, idx: u32) -> Result<Fe> {
        if idx < self.q {
            Ok(Fe(idx))
        } else {
            Err(Error::InvalidElement(idx as i64))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_i64(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_u64(&self, v: u64) -> Fe {
        Fe((v % self.p as u64) as u32)
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut v = a.0;
        for _ in 0..self.m {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        if coeffs.len() > self.m as usize {
            return Err(Error::InvalidElement(coeffs.len() as i64));
        }
        let mut idx = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::InvalidElement(c as i64));
            }
            idx = idx * self.p + c;
        }
        Ok(Fe(idx))
    }

    fn digits(&self, a: Fe) -> [u32; MAX_DEGREE] {
        let mut d = [0u32; MAX_DEGREE];
        let mut v = a.0;
        for slot in d.iter_mut().take(self.m as usize) {
            *slot = v % self.p;
            v /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> Fe {
        let mut idx = 0u32;
        for &c in d[..self.m as usize].iter().rev() {
            idx = idx * self.p + c;
        }
        Fe(idx)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.m == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= self.p { s - self.p } else { s });
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut z = [0u32; MAX_DEGREE];
        for i in 0..self.m as usize {
            z[i] = (x[i] + y[i]) % self.p;
        }
        self.undigits(&z)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.m == 1 {
            return Fe(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let mut x = self.digits(a);
        for c in x.iter_mut().take(self.m as usize) {
            *c = (self.p - *c) % self.p;
        }
        self.undigits(&x)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if self.m == 1 {
            return Fe(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let m = self.m as usize;
        let p = self.p as u64;
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..m {
            if x[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % p;
            }
        }
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..m {
                let sub = c * self.modulus[j] as u64 % p;
                prod[i - m + j] = (prod[i - m + j] + p - sub) % p;
            }
        }
        let mut z = [0u32; MAX_DEGREE];
        for i in 0..m {
            z[i] = prod[i] as u32;
        }
        self.undigits(&z)
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(&self, a: Fe) -> bool {
        a.is_zero() || self.pow(a, (self.q as u64 - 1) / 2) == Fe::ONE
    }

    /// Square root via Tonelli-Shanks. Returns the root with the smaller
    /// canonical index, or `None` for non-residues.
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return Some(Fe::ZERO);
        }
        if !self.is_square(a) {
            return None;
        }
        let mut odd = self.q as u64 - 1;
        let mut two_adic = 0u32;
        while odd.is_multiple_of(2) {
            odd /= 2;
            two_adic += 1;
        }
        let mut c = self.pow(self.nonresidue, odd);
        let mut t = self.pow(a, odd);
        let mut r = self.pow(a, odd.div_ceil(2));
        let mut order = two_adic;
        while t != Fe::ONE {
            let mut i = 0;
            let mut t2 = t;
            while t2 != Fe::ONE {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (order - i - 1));
            r = self.mul(r, b);
            c = self.mul(b, b);
            t = self.mul(t, c);
            order = i;
        }
        let other = self.neg(r);
        debug_assert_eq!(self.mul(r, r), a);
        Some(r.min(other))
    }

    pub fn sum<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe::ZERO, |acc, x| self.add(acc, x))
    }

    /// Spec string: `"p"` or `"p^m"`, e.g. `"7"`, `"3^2"`.
    pub fn spec(&self) -> String {
        if self.m == 1 {
            self.p.to_string()
        } else {
            format!("{}^{}", self.p, self.m)
        }
    }

    /// Spec string including the modulus for extension fields,
    /// e.g. `"3^2;mod=1,0,1"`.
    pub fn full_spec(&self) -> String {
        if self.m == 1 {
            self.spec()
        } else {
            let coeffs: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
            format!("{};mod={}", self.spec(), coeffs.join(","))
        }
    }
}

fn search_modulus(base: &Field, m: u32) -> Vec<u32> {
    let p = base.characteristic();
    let count = p.pow(m);
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        let mut v = idx;
        for _ in 0..m {
            coeffs.push(v % p);
            v /= p;
        }
        coeffs.push(1);
        let poly = Poly::new(coeffs.iter().map(|&c| base.from_u64(c as u64)).collect());
        if poly.is_irreducible(base) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `"p"`, `"p^m"` and an optional `";mod=c0,c1,..,cm"` suffix
    /// (or `" mod=..."`).
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        let (head, modulus) = match s.split_once("mod=") {
            Some((h, m)) => {
                let coeffs = m
                    .trim()
                    .trim_matches(|c| c == '[' || c == ']')
                    .split(',')
                    .map(|c| c.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::Parse(format!("bad modulus `{m}`: {e}")))?;
                (h.trim_end_matches([';', ' ', ',']), Some(coeffs))
            }
            None => (s, None),
        };
        let bad = || Error::Parse(format!("bad field spec `{s}`"));
        let (p, m) = match head.split_once('^') {
            Some((p, m)) => (
                p.trim().parse::<u32>().map_err(|_| bad())?,
                m.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => (head.trim().parse::<u32>().map_err(|_| bad())?, 1),
        };
        Field::new(p, m, modulus.as_deref())
    }
}
