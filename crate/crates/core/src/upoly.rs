//! Univariate polynomials and reduced rational functions over GF(q).

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Polynomial with coefficients low degree first and no leading zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly {
            coeffs: vec![Fe::ONE],
        }
    }

    pub fn constant(c: Fe) -> Poly {
        Poly::new(vec![c])
    }

    pub fn x() -> Poly {
        Poly {
            coeffs: vec![Fe::ZERO, Fe::ONE],
        }
    }

    /// `c * x^d`
    pub fn monomial(c: Fe, d: usize) -> Poly {
        let mut coeffs = vec![Fe::ZERO; d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    /// `x - a`
    pub fn linear(field: &Field, a: Fe) -> Poly {
        Poly::new(vec![field.neg(a), Fe::ONE])
    }

    pub fn from_ints(field: &Field, ints: &[i64]) -> Poly {
        Poly::new(ints.iter().map(|&v| field.from_i64(v)).collect())
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Fe::ONE
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn add(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| field.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| field.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, field: &Field) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| field.neg(c)).collect(),
        }
    }

    pub fn scale(&self, field: &Field, c: Fe) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, field: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, field: &Field, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    pub fn div_rem(&self, field: &Field, divisor: &Poly) -> Result<(Poly, Poly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let lead_inv = field.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = field.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = field.sub(rem[i - dd + j], field.mul(c, d));
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, field: &Field, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(field, divisor)?.1)
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, field: &Field, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(field, divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, field: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = field.inv(self.lead()).expect("nonzero leading coefficient");
        self.scale(field, inv)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Fe::ONE
    }

    /// Monic gcd.
    pub fn gcd(&self, field: &Field, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b)?;
            a = b;
            b = r;
        }
        Ok(a.monic(field))
    }

    pub fn derivative(&self, field: &Field) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| field.mul(field.from_u64(i as u64), c))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, field: &Field, a: Fe) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| field.add(field.mul(acc, a), c))
    }

    /// Coefficients of `self(x + a)`.
    pub fn shift(&self, field: &Field, a: Fe) -> Poly {
        let shifted_x = Poly::new(vec![a, Fe::ONE]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, &c| {
            acc.mul(field, &shifted_x).add(field, &Poly::constant(c))
        })
    }

    /// Multiplicity of `a` as a root; `None` for the zero polynomial.
    pub fn order_at(&self, field: &Field, a: Fe) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let lin = Poly::linear(field, a);
        let mut f = self.clone();
        let mut n = 0;
        while let Some(g) = f.div_exact(field, &lin) {
            f = g;
            n += 1;
        }
        Some(n)
    }

    pub fn is_squarefree(&self, field: &Field) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self
                .gcd(field, &self.derivative(field))
                .is_ok_and(|g| g.is_one()),
        }
    }

    /// All roots in GF(q), by exhaustive scan.
    pub fn roots(&self, field: &Field) -> Result<Vec<Fe>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(field
            .elements()
            .filter(|&a| self.eval(field, a).is_zero())
            .collect())
    }

    /// Irreducibility over GF(q). Degrees 2 and 3 use the root test;
    /// higher degrees trial-divide by every monic polynomial of degree at
    /// most half the degree.
    pub fn is_irreducible(&self, field: &Field) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        if d <= 3 {
            return field.elements().all(|a| !self.eval(field, a).is_zero());
        }
        for e in 1..=d / 2 {
            for g in monic_polys(field, e) {
                if self.div_exact(field, &g).is_some() {
                    return false;
                }
            }
        }
        true
    }

    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        parse_poly(field, s)
    }

    pub fn display<'a>(&'a self, field: &'a Field) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, field }
    }
}

/// All monic polynomials of exact degree `d`, in canonical order of the
/// lower coefficients.
pub fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order() as u64;
    let count = q.pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(field.from_index((idx % q) as u32).unwrap());
            idx /= q;
        }
        coeffs.push(Fe::ONE);
        Poly::new(coeffs)
    })
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    field: &'a Field,
}

impl fmt::Display for PolyDisplay<'_> {
    /// Ascending form `c0 + c1*x + c2*x^2`; coefficients are canonical
    /// element indices and unit coefficients are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let _ = self.field;
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c == Fe::ONE) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

fn parse_poly(field: &Field, s: &str) -> Result<Poly> {
    let s = s.trim();
    let err = |msg: &str| Error::Parse(format!("polynomial `{s}`: {msg}"));
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        if inner.trim().is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs = inner
            .split(',')
            .map(|c| parse_coeff(field, c.trim()).ok_or_else(|| err("bad coefficient")))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Poly::new(coeffs));
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty"));
    }
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && !(i > 0 && compact[..i].ends_with('^')) {
            if !cur.is_empty() {
                terms.push((negative, std::mem::take(&mut cur)));
            } else if i > 0 {
                return Err(err("dangling sign"));
            }
            negative = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(err("dangling sign"));
    }
    terms.push((negative, cur));

    let mut acc = Poly::zero();
    for (neg, term) in terms {
        let (coeff, exp) = match term.find('x') {
            None => (
                parse_coeff(field, &term).ok_or_else(|| err("bad coefficient"))?,
                0usize,
            ),
            Some(pos) => {
                let head = term[..pos].trim_end_matches('*');
                let tail = &term[pos + 1..];
                let coeff = if head.is_empty() {
                    Fe::ONE
                } else {
                    parse_coeff(field, head).ok_or_else(|| err("bad coefficient"))?
                };
                let exp = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| err("bad exponent"))?
                };
                (coeff, exp)
            }
        };
        let coeff = if neg { field.neg(coeff) } else { coeff };
        acc = acc.add(field, &Poly::monomial(coeff, exp));
    }
    Ok(acc)
}

/// Integer literals are reduced into the prime subfield when they exceed q;
/// below q they are canonical element indices.
fn parse_coeff(field: &Field, s: &str) -> Option<Fe> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let v: u64 = digits.parse().ok()?;
    let c = if v < field.order() as u64 {
        field.from_index(v as u32).ok()?
    } else {
        field.from_u64(v)
    };
    Some(if neg { field.neg(c) } else { c })
}

/// Element of GF(q)(x) in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(field: &Field, num: Poly, den: Poly) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = num.gcd(field, &den)?;
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(field, &g).unwrap(),
                den.div_exact(field, &g).unwrap(),
            )
        };
        if !den.is_monic() {
            let inv = field.inv(den.lead())?;
            num = num.scale(field, inv);
            den = den.scale(field, inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn zero() -> RationalFunction {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RationalFunction {
        RationalFunction {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: Fe) -> RationalFunction {
        RationalFunction {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, field: &Field, other: &RationalFunction) -> RationalFunction {
        if self.den == other.den {
            return Self::new(field, self.num.add(field, &other.num), self.den.clone()).unwrap();
        }
        let num = self
            .num
            .mul(field, &other.den)
            .add(field, &other.num.mul(field, &self.den));
        Self::new(field, num, self.den.mul(field, &other.den)).unwrap()
    }

    pub fn neg(&self, field: &Field) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(field),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, field: &Field, other: &RationalFunction) -> RationalFunction {
        self.add(field, &other.neg(field))
    }

    pub fn mul(&self, field: &Field, other: &RationalFunction) -> RationalFunction {
        if self.is_zero() || other.is_zero() {
            return RationalFunction::zero();
        }
        Self::new(
            field,
            self.num.mul(field, &other.num),
            self.den.mul(field, &other.den),
        )
        .unwrap()
    }

    pub fn mul_poly(&self, field: &Field, p: &Poly) -> RationalFunction {
        Self::new(field, self.num.mul(field, p), self.den.clone()).unwrap()
    }

    pub fn scale(&self, field: &Field, c: Fe) -> RationalFunction {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(field, c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self, field: &Field) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(field, self.den.clone(), self.num.clone())
    }

    pub fn div(&self, field: &Field, other: &RationalFunction) -> Result<RationalFunction> {
        Ok(self.mul(field, &other.inv(field)?))
    }

    /// Value at `x = a`; fails at a pole.
    pub fn eval(&self, field: &Field, a: Fe) -> Result<Fe> {
        let d = self.den.eval(field, a);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluationPlace(a.index()));
        }
        field.div(self.num.eval(field, a), d)
    }

    /// Valuation at the finite place `x = a`; `None` for zero.
    pub fn order_at(&self, field: &Field, a: Fe) -> Option<i64> {
        let n = self.num.order_at(field, a)? as i64;
        Some(n - self.den.order_at(field, a).unwrap() as i64)
    }

    /// Valuation at the infinite place of GF(q)(x); `None` for zero.
    pub fn order_at_infinity(&self) -> Option<i64> {
        Some(self.den.degree()? as i64 - self.num.degree()? as i64)
    }

    pub fn display<'a>(&'a self, field: &'a Field) -> RationalDisplay<'a> {
        RationalDisplay { r: self, field }
    }
}

pub struct RationalDisplay<'a> {
    r: &'a RationalFunction,
    field: &'a Field,
}

impl fmt::Display for RationalDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.den.is_one() {
            write!(f, "{}", self.r.num.display(self.field))
        } else {
            write!(
                f,
                "({})/({})",
                self.r.num.display(self.field),
                self.r.den.display(self.field)
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf7() -> Field {
        Field::prime(7).unwrap()
    }

    fn p(f: &Field, c: &[i64]) -> Poly {
        Poly::from_ints(f, c)
    }

    #[test]
    fn eval_examples() {
        let f = gf7();
        let fe = p(&f, &[3, 0, 0, 1]);
        assert_eq!(fe.eval(&f, f.from_i64(6)), f.from_i64(219));
        assert_eq!(fe.eval(&f, f.from_i64(6)), f.from_i64(2));
        assert_eq!(fe.eval(&f, Fe::ONE), f.from_i64(4));
        assert_eq!(Poly::zero().eval(&f, f.from_i64(3)), Fe::ZERO);
    }

    #[test]
    fn gcd_examples() {
        let f = gf7();
        assert_eq!(
            p(&f, &[-1, 0, 1]).gcd(&f, &p(&f, &[-1, 1])),
            Ok(p(&f, &[-1, 1]))
        );
        assert_eq!(p(&f, &[2, 4]).gcd(&f, &Poly::zero()), Ok(p(&f, &[4, 1])));
        assert_eq!(
            p(&f, &[5, 0, 0, 1]).gcd(&f, &p(&f, &[3, 0, 0, 1])),
            Ok(Poly::one())
        );
        assert_eq!(Poly::zero().gcd(&f, &Poly::zero()), Err(Error::BothZero));
    }

    #[test]
    fn squarefree_examples() {
        let f = gf7();
        assert!(p(&f, &[3, 0, 0, 1]).is_squarefree(&f));
        let sq = p(&f, &[-1, 1]).pow(&f, 2);
        assert!(!sq.is_squarefree(&f));
        assert!(p(&f, &[-1, 0, 0, 1]).is_squarefree(&f));
        assert_eq!(
            p(&f, &[-1, 0, 0, 1]).roots(&f).unwrap(),
            vec![f.from_i64(1), f.from_i64(2), f.from_i64(4)]
        );
        // x^7 - x + ... has zero derivative part only in degree 7 term; x^7 is not squarefree
        assert!(!Poly::monomial(Fe::ONE, 7).is_squarefree(&f));
    }

    #[test]
    fn roots_examples() {
        let f = gf7();
        let all: Vec<Fe> = (1..=6).map(|v| f.from_i64(v)).collect();
        assert_eq!(p(&f, &[1, 0, 0, 0, 0, 0, -1]).roots(&f).unwrap(), all);
        assert!(p(&f, &[5, 0, 0, 1]).roots(&f).unwrap().is_empty());
        assert_eq!(Poly::x().roots(&f).unwrap(), vec![Fe::ZERO]);
        assert_eq!(Poly::zero().roots(&f), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn irreducible_examples() {
        let f = gf7();
        assert!(p(&f, &[5, 0, 0, 1]).is_irreducible(&f));
        assert!(!p(&f, &[-2, 0, 1]).is_irreducible(&f));
        assert!(p(&f, &[-1, 1]).is_irreducible(&f));
        // (x^2 + 1)^2 has no roots over GF(7) but is reducible
        let sq = p(&f, &[1, 0, 1]).pow(&f, 2);
        assert!(sq.roots(&f).unwrap().is_empty());
        assert!(!sq.is_irreducible(&f));
    }

    /// Products of pairs of monic polynomials enumerate every reducible
    /// monic polynomial of a given degree.
    fn reducible_set(f: &Field, d: usize) -> std::collections::HashSet<Poly> {
        let mut set = std::collections::HashSet::new();
        for e in 1..=d / 2 {
            let small: Vec<Poly> = monic_polys(f, e).collect();
            let big: Vec<Poly> = monic_polys(f, d - e).collect();
            for a in &small {
                for b in &big {
                    set.insert(a.mul(f, b));
                }
            }
        }
        set
    }

    #[test]
    fn irreducibility_matches_product_enumeration() {
        for q in [5, 7] {
            let f = Field::prime(q).unwrap();
            for d in 1..=4 {
                let reducible = reducible_set(&f, d);
                for g in monic_polys(&f, d) {
                    assert_eq!(
                        g.is_irreducible(&f),
                        !reducible.contains(&g),
                        "{} over GF({q})",
                        g.display(&f)
                    );
                }
            }
        }
    }

    #[test]
    fn rational_normalize() {
        let f = gf7();
        let r = RationalFunction::new(&f, p(&f, &[-1, 0, 1]), p(&f, &[-1, 1])).unwrap();
        assert_eq!(r, RationalFunction::from_poly(p(&f, &[1, 1])));
        let z = RationalFunction::new(&f, Poly::zero(), Poly::monomial(Fe::ONE, 3)).unwrap();
        assert_eq!(
            (z.num().clone(), z.den().clone()),
            (Poly::zero(), Poly::one())
        );
        let s = RationalFunction::new(&f, p(&f, &[2, 2]), p(&f, &[2])).unwrap();
        assert_eq!(s, RationalFunction::from_poly(p(&f, &[1, 1])));
        assert_eq!(
            RationalFunction::new(&f, Poly::one(), Poly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn rational_orders() {
        let f = gf7();
        // (x-1)^2 / (x (x-2))
        let r = RationalFunction::new(&f, p(&f, &[-1, 1]).pow(&f, 2), p(&f, &[0, -2, 1])).unwrap();
        assert_eq!(r.order_at(&f, Fe::ONE), Some(2));
        assert_eq!(r.order_at(&f, Fe::ZERO), Some(-1));
        assert_eq!(r.order_at(&f, f.from_i64(3)), Some(0));
        assert_eq!(r.order_at_infinity(), Some(0));
        assert_eq!(r.eval(&f, Fe::ZERO), Err(Error::PoleAtEvaluationPlace(0)));
    }

    #[test]
    fn parse_forms() {
        let f = gf7();
        let fe = p(&f, &[3, 0, 0, 1]);
        assert_eq!(Poly::parse(&f, "x^3+3").unwrap(), fe);
        assert_eq!(Poly::parse(&f, "3 + 0*x + 0*x^2 + 1*x^3").unwrap(), fe);
        assert_eq!(Poly::parse(&f, "[3,0,0,1]").unwrap(), fe);
        assert_eq!(Poly::parse(&f, "x^3 - 4").unwrap(), fe);
        assert_eq!(Poly::parse(&f, "-x + 2x^2").unwrap(), p(&f, &[0, -1, 2]));
        assert_eq!(Poly::parse(&f, "0").unwrap(), Poly::zero());
        assert!(Poly::parse(&f, "x^").is_err());
        assert!(Poly::parse(&f, "3 +").is_err());
        assert_eq!(fe.display(&f).to_string(), "3 + x^3");
        assert_eq!(Poly::parse(&f, &fe.display(&f).to_string()).unwrap(), fe);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly7(max_len: usize) -> impl Strategy<Value = Poly> {
            let f = Field::prime(7).unwrap();
            prop::collection::vec(0i64..7, 0..max_len).prop_map(move |v| Poly::from_ints(&f, &v))
        }

        proptest! {
            #[test]
            fn gcd_divides_and_degrees_add(a in poly7(7), b in poly7(7)) {
                let f = Field::prime(7).unwrap();
                prop_assume!(!(a.is_zero() && b.is_zero()));
                let g = a.gcd(&f, &b).unwrap();
                prop_assert!(a.rem(&f, &g).unwrap().is_zero());
                prop_assert!(b.rem(&f, &g).unwrap().is_zero());
                if !a.is_zero() && !b.is_zero() {
                    prop_assert_eq!(a.mul(&f, &b).degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
                }
            }

            #[test]
            fn roots_are_linear_factors(a in poly7(6)) {
                let f = Field::prime(7).unwrap();
                prop_assume!(!a.is_zero());
                for r in a.roots(&f).unwrap() {
                    prop_assert!(a.div_exact(&f, &Poly::linear(&f, r)).is_some());
                }
            }

            #[test]
            fn div_rem_reconstructs(a in poly7(8), b in poly7(5)) {
                let f = Field::prime(7).unwrap();
                prop_assume!(!b.is_zero());
                let (q, r) = a.div_rem(&f, &b).unwrap();
                prop_assert_eq!(q.mul(&f, &b).add(&f, &r), a);
                prop_assert!(r.degree() < b.degree());
            }
        }
    }
}
