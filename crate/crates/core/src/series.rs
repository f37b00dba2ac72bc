//! Truncated Laurent series in a local uniformizer `t`.
//!
//! A [`Laurent`] stores `sum_i c_i t^(start + i)` together with an absolute
//! precision `start + len`: every coefficient below that exponent is known,
//! nothing above it is. Series are kept with a nonzero leading coefficient;
//! a series whose known coefficients all vanish is `O(t^start)` with no
//! stored coefficients.

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::upoly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    start: i64,
    coeffs: Vec<Fe>,
}

impl Laurent {
    pub fn new(start: i64, mut coeffs: Vec<Fe>) -> Laurent {
        let lead = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(coeffs.len());
        coeffs.drain(..lead);
        Laurent {
            start: start + lead as i64,
            coeffs,
        }
    }

    /// `O(t^precision)`.
    pub fn big_o(precision: i64) -> Laurent {
        Laurent {
            start: precision,
            coeffs: Vec::new(),
        }
    }

    /// Constant `c` known to absolute precision `precision`.
    pub fn constant(c: Fe, precision: i64) -> Laurent {
        if precision <= 0 {
            return Laurent::big_o(precision);
        }
        let mut coeffs = vec![Fe::ZERO; precision as usize];
        coeffs[0] = c;
        Laurent::new(0, coeffs)
    }

    /// `t^n` known to relative precision `rel`.
    pub fn monomial(n: i64, rel: usize) -> Laurent {
        let mut coeffs = vec![Fe::ZERO; rel.max(1)];
        coeffs[0] = Fe::ONE;
        Laurent { start: n, coeffs }
    }

    /// Absolute precision.
    pub fn precision(&self) -> i64 {
        self.start + self.coeffs.len() as i64
    }

    /// Number of known coefficients past the leading term.
    pub fn relative_precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Valuation, or `None` when the leading term is not determined.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.start)
    }

    pub fn leading_coeff(&self) -> Option<Fe> {
        self.coeffs.first().copied()
    }

    /// Coefficient of `t^n`; `None` when `n` is at or beyond the precision.
    pub fn coeff(&self, n: i64) -> Option<Fe> {
        if n >= self.precision() {
            None
        } else if n < self.start {
            Some(Fe::ZERO)
        } else {
            Some(self.coeffs[(n - self.start) as usize])
        }
    }

    pub fn is_undetermined(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, field: &Field, other: &Laurent) -> Laurent {
        let prec = self.precision().min(other.precision());
        let start = self.start.min(other.start);
        if prec <= start {
            return Laurent::big_o(prec);
        }
        let coeffs = (start..prec)
            .map(|n| field.add(self.coeff(n).unwrap(), other.coeff(n).unwrap()))
            .collect();
        Laurent::new(start, coeffs)
    }

    pub fn neg(&self, field: &Field) -> Laurent {
        Laurent {
            start: self.start,
            coeffs: self.coeffs.iter().map(|&c| field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, field: &Field, other: &Laurent) -> Laurent {
        self.add(field, &other.neg(field))
    }

    pub fn scale(&self, field: &Field, c: Fe) -> Laurent {
        if c.is_zero() {
            return Laurent::big_o(self.precision());
        }
        Laurent {
            start: self.start,
            coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect(),
        }
    }

    /// Multiply by `t^n`.
    pub fn shift(&self, n: i64) -> Laurent {
        Laurent {
            start: self.start + n,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn mul(&self, field: &Field, other: &Laurent) -> Laurent {
        let len = self.coeffs.len().min(other.coeffs.len());
        let start = self.start + other.start;
        if len == 0 {
            // O(t^a) * (t^b u) = O(t^(a+b)) when the other side is determined
            return Laurent::big_o(start);
        }
        let mut out = vec![Fe::ZERO; len];
        for (i, &a) in self.coeffs[..len].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs[..len - i].iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Laurent::new(start, out)
    }

    pub fn inv(&self, field: &Field) -> Result<Laurent> {
        let Some(&lead) = self.coeffs.first() else {
            return Err(Error::PrecisionExhausted(self.coeffs.len()));
        };
        let n = self.coeffs.len();
        let lead_inv = field.inv(lead)?;
        let mut out = vec![Fe::ZERO; n];
        out[0] = lead_inv;
        for k in 1..n {
            let mut acc = Fe::ZERO;
            for j in 1..=k {
                acc = field.add(acc, field.mul(self.coeffs[j], out[k - j]));
            }
            out[k] = field.neg(field.mul(acc, lead_inv));
        }
        Ok(Laurent {
            start: -self.start,
            coeffs: out,
        })
    }

    pub fn div(&self, field: &Field, other: &Laurent) -> Result<Laurent> {
        Ok(self.mul(field, &other.inv(field)?))
    }

    /// Drop coefficients past the given relative precision.
    pub fn truncate(&self, rel: usize) -> Laurent {
        Laurent {
            start: self.start,
            coeffs: self.coeffs[..rel.min(self.coeffs.len())].to_vec(),
        }
    }

    /// `poly(s)` by Horner's rule; `s` must have nonnegative valuation.
    /// Coefficients of `poly` are exact and never limit the precision.
    pub fn compose(field: &Field, poly: &Poly, s: &Laurent) -> Laurent {
        debug_assert!(s.start >= 0 || s.is_undetermined());
        let mut acc: Option<Laurent> = None;
        for &c in poly.coeffs().iter().rev() {
            acc = Some(match acc {
                None => Laurent::constant(c, s.precision().max(1)),
                Some(a) => {
                    let prod = a.mul(field, s);
                    if c.is_zero() {
                        prod
                    } else {
                        let p = prod.precision().max(1);
                        prod.add(field, &Laurent::constant(c, p))
                    }
                }
            });
        }
        acc.unwrap_or_else(|| Laurent::big_o(s.precision()))
    }
}

/// Square root `sqrt(F(t))` of a power series with `F(0) = r0^2 != 0`,
/// choosing constant term `r0`. Coefficients are lifted one at a time from
/// `r^2 = F`.
pub fn sqrt_series(field: &Field, f: &[Fe], r0: Fe, n: usize) -> Result<Vec<Fe>> {
    let two_r0_inv = field.inv(field.add(r0, r0))?;
    let mut r = vec![Fe::ZERO; n];
    if n == 0 {
        return Ok(r);
    }
    r[0] = r0;
    for k in 1..n {
        let mut acc = f.get(k).copied().unwrap_or(Fe::ZERO);
        for i in 1..k {
            acc = field.sub(acc, field.mul(r[i], r[k - i]));
        }
        r[k] = field.mul(acc, two_r0_inv);
    }
    Ok(r)
}
