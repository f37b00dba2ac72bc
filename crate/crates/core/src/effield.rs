//! The elliptic function field `E = GF(q)(x, y)`, `y^2 = f(x)` with `f` a
//! square-free cubic, viewed as a quadratic Kummer extension of `GF(q)(x)`.
//!
//! Elements are [`CurveFunction`]s `a(x) + b(x) y`. Valuations at rational
//! places are read off truncated Laurent expansions in a fixed uniformizer:
//!
//! | place                   | uniformizer | local coordinates                      |
//! |-------------------------|-------------|----------------------------------------|
//! | affine, `y0 != 0`       | `x - x0`    | `y = y0 + c1 t + ..` lifted from `y^2 = f` |
//! | affine, `y0 = 0`        | `y`         | `x = x0 + u(t)`, `u` even of order 2   |
//! | at infinity             | `x / y`     | `1/x = w(t)` of order 2, `y = x / t`   |
//!
//! Riemann-Roch bases are available for `k Q_inf` (monomials `x^i y^j`) and
//! for `k P` with `P` over a split base place (linear algebra in the space
//! `(a + b y) / (x - x0)^k`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg;
use crate::series::{sqrt_series, Laurent};
use crate::upoly::{Poly, RationalFunction};

/// Rational place of `GF(q)(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasePlace {
    Finite(Fe),
    Infinity,
}

impl BasePlace {
    pub fn x(self) -> Option<Fe> {
        match self {
            BasePlace::Finite(x) => Some(x),
            BasePlace::Infinity => None,
        }
    }
}

impl fmt::Display for BasePlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasePlace::Finite(x) => write!(f, "P{x}"),
            BasePlace::Infinity => write!(f, "Pinf"),
        }
    }
}

/// Rational place of the elliptic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePlace {
    Affine { x: Fe, y: Fe },
    AtInfinity,
}

impl CurvePlace {
    pub fn base(self) -> BasePlace {
        match self {
            CurvePlace::Affine { x, .. } => BasePlace::Finite(x),
            CurvePlace::AtInfinity => BasePlace::Infinity,
        }
    }
}

impl fmt::Display for CurvePlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePlace::Affine { x, y } => write!(f, "pt=({x},{y})"),
            CurvePlace::AtInfinity => write!(f, "inf"),
        }
    }
}

/// Decomposition of a finite base place `x = x0` in `E / GF(q)(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitType {
    /// Two rational places `(x0, y0)` and `(x0, -y0)`; `y0` is the canonical root.
    Split(Fe, Fe),
    /// `f(x0) = 0`: one place with ramification index 2.
    Ramified,
    /// `f(x0)` is a non-square: one place of degree 2.
    Inert,
}

/// Unparsed place reference: `inf`, `x=<v>` or `pt=(<x>,<y>)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaceSpec {
    Infinity,
    X(u32),
    Point(u32, u32),
}

impl FromStr for PlaceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<PlaceSpec> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad place spec `{s}`"));
        if s == "inf" {
            return Ok(PlaceSpec::Infinity);
        }
        if let Some(v) = s.strip_prefix("x=") {
            return v.parse().map(PlaceSpec::X).map_err(|_| bad());
        }
        if let Some(inner) = s.strip_prefix("pt=(").and_then(|r| r.strip_suffix(')')) {
            let (x, y) = inner.split_once(',').ok_or_else(bad)?;
            return Ok(PlaceSpec::Point(
                x.parse().map_err(|_| bad())?,
                y.parse().map_err(|_| bad())?,
            ));
        }
        Err(bad())
    }
}

/// Valuation value; `Infinity` only for the zero function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// `a(x) + b(x) y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveFunction {
    pub a: RationalFunction,
    pub b: RationalFunction,
}

impl CurveFunction {
    pub fn new(a: RationalFunction, b: RationalFunction) -> CurveFunction {
        CurveFunction { a, b }
    }

    pub fn zero() -> CurveFunction {
        CurveFunction::new(RationalFunction::zero(), RationalFunction::zero())
    }

    pub fn one() -> CurveFunction {
        CurveFunction::constant(Fe::ONE)
    }

    pub fn constant(c: Fe) -> CurveFunction {
        CurveFunction::new(RationalFunction::constant(c), RationalFunction::zero())
    }

    pub fn x() -> CurveFunction {
        CurveFunction::from_poly(Poly::x())
    }

    pub fn y() -> CurveFunction {
        CurveFunction::new(RationalFunction::zero(), RationalFunction::one())
    }

    pub fn from_poly(p: Poly) -> CurveFunction {
        CurveFunction::new(RationalFunction::from_poly(p), RationalFunction::zero())
    }

    /// `x^i y^j`, `j` in {0, 1}.
    pub fn monomial(i: usize, j: usize) -> CurveFunction {
        let m = RationalFunction::from_poly(Poly::monomial(Fe::ONE, i));
        if j == 0 {
            CurveFunction::new(m, RationalFunction::zero())
        } else {
            CurveFunction::new(RationalFunction::zero(), m)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// Laurent expansion of a function at a rational place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalExpansion {
    pub place: CurvePlace,
    pub precision: usize,
    pub series: Laurent,
}

impl LocalExpansion {
    pub fn valuation(&self) -> i64 {
        self.series
            .valuation()
            .expect("expansions are only built with a determined leading term")
    }

    pub fn leading_coeff(&self) -> Fe {
        self.series.leading_coeff().unwrap()
    }
}

/// Elliptic curve `y^2 = f(x)` over GF(q), q odd, `f` a square-free cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    field: Field,
    f: Poly,
}

/// Local coordinates `x`, `y` at a place, to a working precision.
struct LocalChart {
    x: Laurent,
    y: Laurent,
    kind: ChartKind,
}

enum ChartKind {
    /// `t = x - x0`; rational functions are expanded by shifting.
    Shifted(Fe),
    /// `x = x0 + u(t)` with `u` of positive valuation.
    Composed(Fe, Laurent),
    /// `x = 1 / w(t)`.
    Infinity(Laurent),
}

impl Curve {
    pub fn new(field: Field, f: Poly) -> Result<Curve> {
        if field.characteristic() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if f.degree() != Some(3) {
            return Err(Error::NotCubic);
        }
        if !f.is_squarefree(&field) {
            return Err(Error::NotSquareFree);
        }
        Ok(Curve { field, f })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The cubic `f`.
    pub fn poly(&self) -> &Poly {
        &self.f
    }

    pub fn genus(&self) -> u32 {
        1
    }

    /// `"q=<field>;f=<poly>"`.
    pub fn spec(&self) -> String {
        format!(
            "q={};f={}",
            self.field.full_spec(),
            self.f.display(&self.field)
        )
    }

    /// Rational places of `GF(q)(x)`: finite ones in canonical order, then infinity.
    pub fn base_places(&self) -> Vec<BasePlace> {
        self.field
            .elements()
            .map(BasePlace::Finite)
            .chain([BasePlace::Infinity])
            .collect()
    }

    pub fn classify_base_place(&self, x0: Fe) -> SplitType {
        let v = self.f.eval(&self.field, x0);
        if v.is_zero() {
            SplitType::Ramified
        } else {
            match self.field.sqrt(v) {
                Some(r) => SplitType::Split(r, self.field.neg(r)),
                None => SplitType::Inert,
            }
        }
    }

    /// Rational places over `x0` (canonical root first for split places).
    pub fn places_over(&self, x0: Fe) -> Vec<CurvePlace> {
        match self.classify_base_place(x0) {
            SplitType::Split(y1, y2) => vec![
                CurvePlace::Affine { x: x0, y: y1 },
                CurvePlace::Affine { x: x0, y: y2 },
            ],
            SplitType::Ramified => vec![CurvePlace::Affine { x: x0, y: Fe::ZERO }],
            SplitType::Inert => vec![],
        }
    }

    /// Every rational place of the elliptic field.
    pub fn rational_places(&self) -> Vec<CurvePlace> {
        let mut out: Vec<CurvePlace> = self
            .field
            .elements()
            .flat_map(|x0| self.places_over(x0))
            .collect();
        out.push(CurvePlace::AtInfinity);
        out
    }

    pub fn check_place(&self, place: CurvePlace) -> Result<()> {
        if let CurvePlace::Affine { x, y } = place {
            if self.field.mul(y, y) != self.f.eval(&self.field, x) {
                return Err(Error::NotOnCurve {
                    x: x.index(),
                    y: y.index(),
                });
            }
        }
        Ok(())
    }

    /// Resolve a place spec; `x=<v>` names the canonical place over `v`.
    pub fn resolve_place(&self, spec: PlaceSpec) -> Result<CurvePlace> {
        match spec {
            PlaceSpec::Infinity => Ok(CurvePlace::AtInfinity),
            PlaceSpec::X(v) => {
                let x0 = self.field.from_index(v)?;
                self.places_over(x0)
                    .first()
                    .copied()
                    .ok_or(Error::NotSplit(v))
            }
            PlaceSpec::Point(x, y) => {
                let place = CurvePlace::Affine {
                    x: self.field.from_index(x)?,
                    y: self.field.from_index(y)?,
                };
                self.check_place(place)?;
                Ok(place)
            }
        }
    }

    /// The other place over the same base place (itself when ramified or at infinity).
    pub fn conjugate_place(&self, place: CurvePlace) -> CurvePlace {
        match place {
            CurvePlace::Affine { x, y } => CurvePlace::Affine {
                x,
                y: self.field.neg(y),
            },
            CurvePlace::AtInfinity => CurvePlace::AtInfinity,
        }
    }

    // ---- arithmetic ----

    pub fn add(&self, g: &CurveFunction, h: &CurveFunction) -> CurveFunction {
        let fq = &self.field;
        CurveFunction::new(g.a.add(fq, &h.a), g.b.add(fq, &h.b))
    }

    pub fn sub(&self, g: &CurveFunction, h: &CurveFunction) -> CurveFunction {
        let fq = &self.field;
        CurveFunction::new(g.a.sub(fq, &h.a), g.b.sub(fq, &h.b))
    }

    pub fn neg(&self, g: &CurveFunction) -> CurveFunction {
        CurveFunction::new(g.a.neg(&self.field), g.b.neg(&self.field))
    }

    pub fn scale(&self, g: &CurveFunction, c: Fe) -> CurveFunction {
        CurveFunction::new(g.a.scale(&self.field, c), g.b.scale(&self.field, c))
    }

    pub fn mul(&self, g: &CurveFunction, h: &CurveFunction) -> CurveFunction {
        let fq = &self.field;
        let a =
            g.a.mul(fq, &h.a)
                .add(fq, &g.b.mul(fq, &h.b).mul_poly(fq, &self.f));
        let b = g.a.mul(fq, &h.b).add(fq, &g.b.mul(fq, &h.a));
        CurveFunction::new(a, b)
    }

    /// The non-trivial automorphism `y -> -y`.
    pub fn sigma(&self, g: &CurveFunction) -> CurveFunction {
        CurveFunction::new(g.a.clone(), g.b.neg(&self.field))
    }

    /// `a^2 - b^2 f`, the norm down to `GF(q)(x)`.
    pub fn norm(&self, g: &CurveFunction) -> RationalFunction {
        let fq = &self.field;
        g.a.mul(fq, &g.a)
            .sub(fq, &g.b.mul(fq, &g.b).mul_poly(fq, &self.f))
    }

    pub fn inv(&self, g: &CurveFunction) -> Result<CurveFunction> {
        let n = self.norm(g).inv(&self.field)?;
        let c = self.sigma(g);
        let fq = &self.field;
        Ok(CurveFunction::new(c.a.mul(fq, &n), c.b.mul(fq, &n)))
    }

    /// Value at an affine point where `a` and `b` are regular.
    pub fn eval_at_point(&self, g: &CurveFunction, x0: Fe, y0: Fe) -> Result<Fe> {
        let fq = &self.field;
        Ok(fq.add(g.a.eval(fq, x0)?, fq.mul(g.b.eval(fq, x0)?, y0)))
    }

    // ---- local expansions ----

    fn chart(&self, place: CurvePlace, prec: usize) -> Result<LocalChart> {
        let fq = &self.field;
        let n = prec.max(1);
        match place {
            CurvePlace::Affine { x: x0, y: y0 } if !y0.is_zero() => {
                let shifted = self.f.shift(fq, x0);
                let y = Laurent::new(0, sqrt_series(fq, shifted.coeffs(), y0, n)?);
                let mut xc = vec![Fe::ZERO; n.max(2)];
                xc[0] = x0;
                xc[1] = Fe::ONE;
                Ok(LocalChart {
                    x: Laurent::new(0, xc),
                    y,
                    kind: ChartKind::Shifted(x0),
                })
            }
            CurvePlace::Affine { x: x0, .. } => {
                // t = y, t^2 = F1 u + F2 u^2 + F3 u^3 with F(u) = f(x0 + u)
                let shifted = self.f.shift(fq, x0);
                let (f1, f2, f3) = (shifted.coeff(1), shifted.coeff(2), shifted.coeff(3));
                let f1_inv = fq.inv(f1)?;
                let abs = n as i64 + 2;
                let t2 = Laurent::new(2, {
                    let mut v = vec![Fe::ZERO; n];
                    v[0] = Fe::ONE;
                    v
                });
                let mut u = t2.scale(fq, f1_inv);
                for _ in 0..n {
                    let u2 = u.mul(fq, &u);
                    let u3 = u2.mul(fq, &u);
                    let next = t2
                        .sub(fq, &u2.scale(fq, f2))
                        .sub(fq, &u3.scale(fq, f3))
                        .scale(fq, f1_inv);
                    let next = truncate_abs(&next, abs);
                    if next == u {
                        break;
                    }
                    u = next;
                }
                let x = Laurent::constant(x0, abs).add(fq, &u);
                let y = Laurent::monomial(1, n);
                Ok(LocalChart {
                    x,
                    y,
                    kind: ChartKind::Composed(x0, u),
                })
            }
            CurvePlace::AtInfinity => {
                // t = x/y, w = 1/x: w = t^2 (c3 + c2 w + c1 w^2 + c0 w^3)
                let c: Vec<Fe> = (0..4).map(|i| self.f.coeff(i)).collect();
                let abs = n as i64 + 2;
                let t2 = Laurent::monomial(2, n);
                let mut w = t2.scale(fq, c[3]);
                for _ in 0..n {
                    let w2 = w.mul(fq, &w);
                    let w3 = w2.mul(fq, &w);
                    let inner = Laurent::constant(c[3], n as i64)
                        .add(fq, &w.scale(fq, c[2]))
                        .add(fq, &w2.scale(fq, c[1]))
                        .add(fq, &w3.scale(fq, c[0]));
                    let next = truncate_abs(&t2.mul(fq, &inner), abs);
                    if next == w {
                        break;
                    }
                    w = next;
                }
                let x = w.inv(fq)?;
                let y = x.shift(-1);
                Ok(LocalChart {
                    x,
                    y,
                    kind: ChartKind::Infinity(w),
                })
            }
        }
    }

    fn expand_rational(
        &self,
        chart: &LocalChart,
        r: &RationalFunction,
        n: usize,
    ) -> Result<Laurent> {
        let fq = &self.field;
        if r.is_zero() {
            return Ok(Laurent::big_o(i64::MAX / 4));
        }
        match &chart.kind {
            ChartKind::Shifted(x0) => {
                let num = exact_series(r.num().shift(fq, *x0), n);
                let den = exact_series(r.den().shift(fq, *x0), n);
                num.div(fq, &den)
            }
            ChartKind::Composed(x0, u) => {
                let num = Laurent::compose(fq, &r.num().shift(fq, *x0), u);
                let den = Laurent::compose(fq, &r.den().shift(fq, *x0), u);
                num.div(fq, &den)
            }
            ChartKind::Infinity(w) => {
                // num(x)/den(x) = w^(dd - dn) numrev(w) / denrev(w)
                let dn = r.num().degree().unwrap();
                let dd = r.den().degree().unwrap();
                let rev = |p: &Poly| Poly::new(p.coeffs().iter().rev().copied().collect());
                let num = Laurent::compose(fq, &rev(r.num()), w);
                let den = Laurent::compose(fq, &rev(r.den()), w);
                let mut out = num.div(fq, &den)?;
                let e = dd as i64 - dn as i64;
                let step = if e >= 0 { w.clone() } else { chart.x.clone() };
                for _ in 0..e.unsigned_abs() {
                    out = out.mul(fq, &step);
                }
                Ok(out)
            }
        }
    }

    /// Expansion of `h` with `prec` terms of working precision in the local
    /// coordinates. Fails with `PrecisionExhausted` when the leading term
    /// cancels beyond that precision.
    pub fn local_expansion(
        &self,
        place: CurvePlace,
        h: &CurveFunction,
        prec: usize,
    ) -> Result<LocalExpansion> {
        self.check_place(place)?;
        if prec == 0 {
            return Err(Error::PrecisionExhausted(0));
        }
        let chart = self.chart(place, prec)?;
        let fq = &self.field;
        let a = self.expand_rational(&chart, &h.a, prec)?;
        let b = self.expand_rational(&chart, &h.b, prec)?;
        let series = if h.b.is_zero() {
            a
        } else if h.a.is_zero() {
            b.mul(fq, &chart.y)
        } else {
            a.add(fq, &b.mul(fq, &chart.y))
        };
        if series.is_undetermined() {
            return Err(Error::PrecisionExhausted(prec));
        }
        Ok(LocalExpansion {
            place,
            precision: prec,
            series,
        })
    }

    fn degree_bound(h: &CurveFunction) -> usize {
        [h.a.num(), h.a.den(), h.b.num(), h.b.den()]
            .iter()
            .map(|p| p.degree().unwrap_or(0))
            .sum::<usize>()
            + 4
    }

    /// `v_place(h)`, with adaptive precision.
    ///
    /// # Panics
    ///
    /// If the leading term is still undetermined at the precision cap, which
    /// cannot happen for a correct expansion of a nonzero function.
    pub fn valuation(&self, place: CurvePlace, h: &CurveFunction) -> Valuation {
        if h.is_zero() {
            return Valuation::Infinity;
        }
        let bound = Self::degree_bound(h);
        let cap = 4 * bound + 64;
        let mut prec = 8 + 2 * bound;
        loop {
            match self.local_expansion(place, h, prec) {
                Ok(e) => return Valuation::Finite(e.valuation()),
                Err(Error::PrecisionExhausted(_)) if prec < cap => prec = (2 * prec).min(cap),
                Err(e) => panic!("valuation of {h:?} at {place}: {e}"),
            }
        }
    }

    /// Coefficients of `t^lo .. t^hi` (inclusive) of `h` at `place`.
    pub fn expansion_window(
        &self,
        place: CurvePlace,
        h: &CurveFunction,
        lo: i64,
        hi: i64,
    ) -> Result<Vec<Fe>> {
        if h.is_zero() {
            return Ok(vec![Fe::ZERO; (hi - lo + 1).max(0) as usize]);
        }
        let mut prec = 8 + 2 * Self::degree_bound(h) + (hi - lo).max(0) as usize;
        loop {
            match self.local_expansion(place, h, prec) {
                Ok(e) if e.series.precision() > hi => {
                    return Ok((lo..=hi).map(|n| e.series.coeff(n).unwrap()).collect());
                }
                Ok(_) | Err(Error::PrecisionExhausted(_)) if prec < 4096 => prec *= 2,
                Ok(_) => return Err(Error::PrecisionExhausted(prec)),
                Err(e) => return Err(e),
            }
        }
    }

    // ---- Riemann-Roch spaces ----

    /// Basis of `L(k Q_inf)`: `x^i y^j`, `2i + 3j <= k`, by increasing pole order.
    pub fn rr_basis_infinity(&self, k: i64) -> Result<Vec<CurveFunction>> {
        if k <= 0 {
            return Err(Error::InvalidK(k));
        }
        Ok(pole_orders_at_infinity(k)
            .into_iter()
            .map(|(i, j)| CurveFunction::monomial(i, j))
            .collect())
    }

    /// Basis of `L(k P)` for `P` over a split base place, in strictly
    /// decreasing pole order at `P`, each element normalized so that its
    /// leading coefficient in `t = x - x0` is 1 (reduced echelon form).
    pub fn rr_basis_affine(&self, place: CurvePlace, k: i64) -> Result<Vec<CurveFunction>> {
        if k <= 0 {
            return Err(Error::InvalidK(k));
        }
        self.check_place(place)?;
        let (x0, y0) = match place {
            CurvePlace::Affine { x, y } if !y.is_zero() => (x, y),
            CurvePlace::Affine { x, .. } => return Err(Error::NotSplit(x.index())),
            CurvePlace::AtInfinity => return Err(Error::NotSplit(u32::MAX)),
        };
        let fq = &self.field;
        let k = k as usize;
        let na = k + 1;
        let nb = k.saturating_sub(1);
        // Expansion of y at P (t = x - x0); at the conjugate place it is negated.
        let shifted = self.f.shift(fq, x0);
        let y_at_p = sqrt_series(fq, shifted.coeffs(), y0, k + 1)?;
        let y_conj: Vec<Fe> = y_at_p.iter().map(|&c| fq.neg(c)).collect();

        // Unknowns: alpha_0..alpha_k for a = sum alpha_i t^i, beta_0..beta_{k-2}
        // for b = sum beta_j t^j. Impose the vanishing of t^0..t^{k-1} of a + b y
        // at the conjugate place.
        let constraint_rows: Vec<Vec<Fe>> = (0..k)
            .map(|n| {
                let mut row = vec![Fe::ZERO; na + nb];
                row[n] = Fe::ONE;
                for j in 0..nb.min(n + 1) {
                    row[na + j] = y_conj[n - j];
                }
                row
            })
            .collect();
        let solutions = linalg::null_space(fq, &constraint_rows, na + nb);
        assert_eq!(
            solutions.len(),
            k,
            "Riemann-Roch: l(kP) = k on a genus-1 field"
        );

        // Expansion at P of (a + b y): coefficients t^0..t^k, i.e. h at t^-k..t^0.
        let mut rows: Vec<Vec<Fe>> = solutions
            .iter()
            .map(|sol| {
                let mut exp: Vec<Fe> = (0..=k)
                    .map(|n| {
                        let mut c = sol[n];
                        for j in 0..nb.min(n + 1) {
                            c = fq.add(c, fq.mul(sol[na + j], y_at_p[n - j]));
                        }
                        c
                    })
                    .collect();
                exp.extend_from_slice(sol);
                exp
            })
            .collect();
        let pivots = linalg::rref(fq, &mut rows);
        assert_eq!(rows.len(), k);
        assert!(
            pivots.iter().all(|&p| p <= k),
            "expansion map is injective on L(kP)"
        );

        let t = Poly::linear(fq, x0);
        let den = t.pow(fq, k as u32);
        let to_x = |coeffs: &[Fe]| -> Poly {
            // sum c_i (x - x0)^i
            coeffs.iter().rev().fold(Poly::zero(), |acc, &c| {
                acc.mul(fq, &t).add(fq, &Poly::constant(c))
            })
        };
        Ok(rows
            .iter()
            .map(|row| {
                let sol = &row[k + 1..];
                let a = RationalFunction::new(fq, to_x(&sol[..na]), den.clone()).unwrap();
                let b = RationalFunction::new(fq, to_x(&sol[na..]), den.clone()).unwrap();
                CurveFunction::new(a, b)
            })
            .collect())
    }

    /// Basis of `L(k P)` with the ordering used by the place type.
    pub fn rr_basis(&self, place: CurvePlace, k: i64) -> Result<Vec<CurveFunction>> {
        match place {
            CurvePlace::AtInfinity => self.rr_basis_infinity(k),
            _ => self.rr_basis_affine(place, k),
        }
    }

    /// Sub-basis of `L(k P)` with pole orders in `(k1, k]`, spanning
    /// `{ h : -k <= v_P(h) < -k1 } + {0}`.
    pub fn rr_star_basis(&self, place: CurvePlace, k: i64, k1: i64) -> Result<Vec<CurveFunction>> {
        if k1 < 1 || k1 >= k {
            return Err(Error::InvalidRange(format!(
                "need 1 <= k1 < k, got k = {k}, k1 = {k1}"
            )));
        }
        let basis = self.rr_basis(place, k)?;
        Ok(basis
            .into_iter()
            .filter(|h| {
                let v = self.valuation(place, h).finite().unwrap();
                -v > k1
            })
            .collect())
    }

    /// `-v_place(h)` for nonzero `h`.
    pub fn pole_order(&self, place: CurvePlace, h: &CurveFunction) -> Option<i64> {
        self.valuation(place, h).finite().map(|v| -v)
    }
}

fn truncate_abs(s: &Laurent, abs: i64) -> Laurent {
    match s.valuation() {
        Some(v) if abs > v => s.truncate((abs - v) as usize),
        Some(_) => Laurent::big_o(abs),
        None => s.clone(),
    }
}

/// Exactly known polynomial in `t`, kept to at least `rel` terms past its
/// leading term.
fn exact_series(p: Poly, rel: usize) -> Laurent {
    let mut coeffs = p.coeffs().to_vec();
    let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let len = (lead + rel).max(coeffs.len());
    coeffs.resize(len, Fe::ZERO);
    Laurent::new(0, coeffs)
}

/// Exponent pairs `(i, j)` with `2i + 3j <= k`, `j` in {0, 1}, by increasing
/// pole order `2i + 3j`.
pub fn pole_orders_at_infinity(k: i64) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for order in 0..=k.max(0) as usize {
        if order % 2 == 0 {
            out.push((order / 2, 0));
        } else if order >= 3 {
            out.push(((order - 3) / 2, 1));
        }
    }
    out
}

impl FromStr for Curve {
    type Err = Error;

    /// `"q=<fieldspec>;f=<poly>"`, e.g. `"q=7;f=x^3+3"` or
    /// `"q=3^2;mod=1,0,1;f=x^3+x+1"`.
    fn from_str(s: &str) -> Result<Curve> {
        let (qpart, fpart) = s.split_once(";f=").ok_or_else(|| {
            Error::Parse(format!(
                "curve spec `{s}` must look like q=<field>;f=<poly>"
            ))
        })?;
        let qpart = qpart
            .trim()
            .strip_prefix("q=")
            .ok_or_else(|| Error::Parse(format!("curve spec `{s}` must start with q=")))?;
        let field: Field = qpart.parse()?;
        let f = Poly::parse(&field, fpart)?;
        Curve::new(field, f)
    }
}
