//! Randomized and exhaustive invariant suites. Each suite returns a
//! [`SuiteReport`] listing the cases it ran and a description of every
//! failing case.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::effield::{BasePlace, Curve, CurveFunction, CurvePlace, SplitType, Valuation};
use crate::gf::{Fe, Field};
use crate::srcodes::{
    code_construct1, code_construct2, epsilon_symbolic, mul_matrix, CodeSpec, Construction,
    Operator, PoleData,
};
use crate::srmetric::{self, enumerate_generator, flat_weight, rank2x2, sample_distribution};
use crate::upoly::{Poly, RationalFunction};

/// How many failures a report keeps verbatim.
const MAX_DUMPED: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_DUMPED {
                self.failures.push(describe());
            }
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_DUMPED {
                self.failures.push(format!("{}: {f}", other.name));
            }
        }
    }
}

/// Closed-form determinant used by [`structural_identity`]; replaceable so
/// the suite can be exercised against a wrong formula.
pub type DetFn = fn(&Curve, &Operator) -> RationalFunction;

pub fn random_poly(rng: &mut impl Rng, field: &Field, max_deg: usize) -> Poly {
    let d = rng.gen_range(0..=max_deg);
    Poly::new((0..=d).map(|_| random_element(rng, field)).collect())
}

pub fn random_element(rng: &mut impl Rng, field: &Field) -> Fe {
    field.from_index(rng.gen_range(0..field.order())).unwrap()
}

/// Random rational function, a polynomial about half of the time.
pub fn random_rational(
    rng: &mut impl Rng,
    field: &Field,
    num_deg: usize,
    den_deg: usize,
) -> RationalFunction {
    let num = random_poly(rng, field, num_deg);
    let den = if den_deg == 0 || rng.gen_bool(0.5) {
        Poly::one()
    } else {
        let mut den = random_poly(rng, field, den_deg);
        while den.is_zero() {
            den = random_poly(rng, field, den_deg);
        }
        den
    };
    RationalFunction::new(field, num, den).unwrap()
}

pub fn random_function(rng: &mut impl Rng, c: &Curve) -> CurveFunction {
    let fq = c.field();
    CurveFunction::new(
        random_rational(rng, fq, 3, 2),
        random_rational(rng, fq, 2, 2),
    )
}

fn nonzero_function(rng: &mut impl Rng, c: &Curve) -> CurveFunction {
    loop {
        let h = random_function(rng, c);
        if !h.is_zero() {
            return h;
        }
    }
}

fn show(c: &Curve, h: &CurveFunction) -> String {
    let fq = c.field();
    format!("({}) + ({})*y", h.a.display(fq), h.b.display(fq))
}

/// `coords(L(g)) = coords(g) * eps(L)`, `det eps(L) = det(L)` and
/// `B_f B_g = B_fg` on random inputs.
pub fn structural_identity(c: &Curve, cases: usize, seed: u64, det: DetFn) -> SuiteReport {
    let fq = c.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = SuiteReport::new("structural-identity");
    for _ in 0..cases {
        let l = Operator::new(random_function(&mut rng, c), random_function(&mut rng, c));
        let g = random_function(&mut rng, c);
        let eps = epsilon_symbolic(c, &l);
        let lhs = l.apply(c, &g);
        let rhs = eps.apply_row(fq, [&g.a, &g.b]);
        let describe = || {
            format!(
                "f1 = {}, f2 = {}, g = {}",
                show(c, &l.f1),
                show(c, &l.f2),
                show(c, &g)
            )
        };
        rep.check(lhs.a == rhs[0] && lhs.b == rhs[1], || {
            format!("L(g) mismatch: {}", describe())
        });
        rep.check(det(c, &l) == eps.det(fq), || {
            format!("determinant mismatch: {}", describe())
        });
        let prod = mul_matrix(c, &l.f1).mul(fq, &mul_matrix(c, &g));
        rep.check(prod == mul_matrix(c, &c.mul(&l.f1, &g)), || {
            format!("B_f B_g != B_fg: {}", describe())
        });
    }
    rep
}

/// A function of valuation 1 at `place`.
fn uniformizer(c: &Curve, place: CurvePlace) -> CurveFunction {
    let fq = c.field();
    match place {
        CurvePlace::Affine { x, y } if !y.is_zero() => {
            CurveFunction::from_poly(Poly::linear(fq, x))
        }
        CurvePlace::Affine { .. } => CurveFunction::y(),
        CurvePlace::AtInfinity => c.mul(&CurveFunction::x(), &c.inv(&CurveFunction::y()).unwrap()),
    }
}

fn splits(field: &Field, p: &Poly) -> bool {
    let roots = p.roots(field).unwrap_or_default();
    let total: u32 = roots
        .iter()
        .map(|&r| p.order_at(field, r).unwrap_or(0))
        .sum();
    Some(total as usize) == p.degree()
}

/// Sum of `v_P(h) deg P` over the places above the roots of the norm and
/// denominators of `h`, and `Q_inf`. `None` when some factor is not linear.
pub fn principal_divisor_degree(c: &Curve, h: &CurveFunction) -> Option<i64> {
    let fq = c.field();
    let n = c.norm(h);
    let polys = [n.num(), n.den(), h.a.den(), h.b.den()];
    if !polys.iter().all(|p| splits(fq, p)) {
        return None;
    }
    let mut xs: Vec<Fe> = polys
        .iter()
        .flat_map(|p| p.roots(fq).unwrap_or_default())
        .collect();
    xs.sort();
    xs.dedup();
    let mut total = c.valuation(CurvePlace::AtInfinity, h).finite()?;
    for x0 in xs {
        match c.classify_base_place(x0) {
            SplitType::Inert => total += n.order_at(fq, x0)?,
            _ => {
                for p in c.places_over(x0) {
                    total += c.valuation(p, h).finite()?;
                }
            }
        }
    }
    Some(total)
}

/// Multiplicativity, strict triangle inequality (with a forced-equality
/// case) and degree-zero principal divisors, `cases` of each.
pub fn valuation_suite(c: &Curve, cases: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let places = c.rational_places();
    let mut rep = SuiteReport::new("valuation");
    for i in 0..cases {
        let p = places[i % places.len()];
        let h1 = nonzero_function(&mut rng, c);
        let h2 = nonzero_function(&mut rng, c);
        let (v1, v2) = (c.valuation(p, &h1), c.valuation(p, &h2));
        let vp = c.valuation(p, &c.mul(&h1, &h2));
        let add = |a: Valuation, b: Valuation| {
            Valuation::Finite(a.finite().unwrap() + b.finite().unwrap())
        };
        rep.check(vp == add(v1, v2), || {
            format!(
                "v(h1 h2) = {vp} != {v1} + {v2} at {p}: h1 = {}, h2 = {}",
                show(c, &h1),
                show(c, &h2)
            )
        });
        let vs = c.valuation(p, &c.add(&h1, &h2));
        let ok = vs >= v1.min(v2) && (v1 == v2 || vs == v1.min(v2));
        rep.check(ok, || {
            format!("v(h1 + h2) = {vs} with v1 = {v1}, v2 = {v2} at {p}")
        });
        // h3 has valuation v1 + j, j != 0, so the minimum is attained
        let j = rng.gen_range(1..=3);
        let mut h3 = h1.clone();
        for _ in 0..j {
            h3 = c.mul(&h3, &uniformizer(c, p));
        }
        let (sum, v3) = (c.valuation(p, &c.add(&h1, &h3)), c.valuation(p, &h3));
        rep.check(sum == v1 && v3 == add(v1, Valuation::Finite(j)), || {
            format!("forced equality failed at {p}: v(h1) = {v1}, v(h3) = {v3}, v(h1 + h3) = {sum}")
        });
    }
    let fq = c.field();
    let mut done = 0;
    while done < cases {
        let a = random_rational(&mut rng, fq, 2, 2);
        let b = RationalFunction::from_poly(random_poly(&mut rng, fq, 1));
        let h = CurveFunction::new(a, b);
        if h.is_zero() {
            continue;
        }
        if let Some(deg) = principal_divisor_degree(c, &h) {
            rep.check(deg == 0, || {
                format!("principal divisor of {} has degree {deg}", show(c, &h))
            });
            done += 1;
        }
    }
    rep
}

fn check_rr_basis(
    c: &Curve,
    pole: CurvePlace,
    k: i64,
    basis: &[CurveFunction],
    rep: &mut SuiteReport,
) {
    let name = format!("L({k} {pole}) on {}", c.spec());
    rep.check(basis.len() == k as usize, || {
        format!("{name}: size {} != {k}", basis.len())
    });
    let mut orders: Vec<i64> = basis
        .iter()
        .map(|h| c.pole_order(pole, h).unwrap_or(i64::MIN))
        .collect();
    orders.sort_unstable();
    orders.dedup();
    rep.check(orders.len() == basis.len(), || {
        format!("{name}: pole orders not distinct")
    });
    for h in basis {
        let fq = c.field();
        for p in c.rational_places() {
            let v = c.valuation(p, h).finite().unwrap();
            let ok = if p == pole { v >= -k } else { v >= 0 };
            rep.check(ok, || {
                format!("{name}: {} has valuation {v} at {p}", show(c, h))
            });
        }
        // no poles at non-rational places: denominators of the norm only
        // vanish at the pole's base point
        let den = c.norm(h).den().clone();
        let ok = match pole.base() {
            BasePlace::Infinity => den.is_one(),
            BasePlace::Finite(x0) => {
                den.roots(fq).unwrap().iter().all(|&r| r == x0) && splits(fq, &den)
            }
        };
        rep.check(ok, || {
            format!(
                "{name}: norm of {} has poles off the base point",
                show(c, h)
            )
        });
    }
}

/// `l(k Q_inf) = l(k P) = k` for `k = 1..=kmax` and basis membership, at
/// infinity and at up to `affine` split places.
pub fn riemann_roch_suite(c: &Curve, kmax: i64, affine: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("riemann-roch");
    let split: Vec<CurvePlace> = c
        .field()
        .elements()
        .filter(|&x| matches!(c.classify_base_place(x), SplitType::Split(..)))
        .flat_map(|x| c.places_over(x))
        .take(affine)
        .collect();
    for k in 1..=kmax {
        match c.rr_basis_infinity(k) {
            Ok(b) => check_rr_basis(c, CurvePlace::AtInfinity, k, &b, &mut rep),
            Err(e) => rep.check(false, || format!("L({k} inf): {e}")),
        }
        for &p in &split {
            match c.rr_basis_affine(p, k) {
                Ok(b) => check_rr_basis(c, p, k, &b, &mut rep),
                Err(e) => rep.check(false, || format!("L({k} {p}): {e}")),
            }
        }
    }
    rep
}

/// Square-free cubics `x^3 + a x + b` (then general ones) in index order.
pub fn square_free_cubics(field: &Field) -> impl Iterator<Item = Curve> + '_ {
    let elems: Vec<Fe> = field.elements().collect();
    let pairs: Vec<(Fe, Fe)> = elems
        .iter()
        .flat_map(|&b| elems.iter().map(move |&a| (a, b)))
        .collect();
    pairs
        .into_iter()
        .filter(|&(_, b)| !b.is_zero())
        .filter_map(move |(a, b)| {
            Curve::new(field.clone(), Poly::new(vec![b, a, Fe::ZERO, Fe::ONE])).ok()
        })
}

/// One admissible code configuration.
#[derive(Clone, Debug)]
pub struct BoundConfig {
    pub curve: Curve,
    pub construction: Construction,
    pub s: usize,
    pub k: i64,
    pub k1: i64,
    pub split_x0: Option<Fe>,
}

impl BoundConfig {
    pub fn build(&self) -> crate::Result<CodeSpec> {
        let fq = self.curve.field();
        let places: Vec<BasePlace> = fq
            .elements()
            .filter(|&x| Some(x) != self.split_x0)
            .take(self.s)
            .map(BasePlace::Finite)
            .collect();
        match self.construction {
            Construction::Ramified => code_construct1(&self.curve, self.k, self.k1, &places),
            Construction::Split => code_construct2(
                &self.curve,
                self.k,
                self.k1,
                self.split_x0.unwrap(),
                &places,
                false,
            ),
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "{} cons {} s={} k={} k1={}{}",
            self.curve.spec(),
            self.construction.tag(),
            self.s,
            self.k,
            self.k1,
            self.split_x0
                .map(|x| format!(" split x0={x}"))
                .unwrap_or_default()
        )
    }
}

/// Admissible `(s, k, k1)` choices for both constructions on `c`.
pub fn bound_configs(c: &Curve) -> Vec<BoundConfig> {
    let q = c.field().order() as usize;
    let split_x0 = c
        .field()
        .elements()
        .find(|&x| matches!(c.classify_base_place(x), SplitType::Split(..)));
    let shapes = [
        (2, 2, 1),
        (2, 3, 1),
        (3, 4, 2),
        (3, 5, 3),
        (4, 6, 3),
        (4, 7, 5),
        (5, 6, 2),
    ];
    let mut out = Vec::new();
    for (s, k, k1) in shapes {
        if s <= q {
            out.push(BoundConfig {
                curve: c.clone(),
                construction: Construction::Ramified,
                s,
                k,
                k1,
                split_x0: None,
            });
        }
        if let Some(x0) = split_x0 {
            if s < q {
                out.push(BoundConfig {
                    curve: c.clone(),
                    construction: Construction::Split,
                    s,
                    k,
                    k1,
                    split_x0: Some(x0),
                });
            }
        }
    }
    out
}

/// Every nonzero codeword has weight at least `2s - k`: exhaustively when
/// `q^k <= exhaustive_limit`, otherwise over `samples` random messages.
pub fn theorem_bound_suite(
    configs: &[BoundConfig],
    exhaustive_limit: u64,
    samples: u64,
    seed: u64,
) -> SuiteReport {
    let mut rep = SuiteReport::new("theorem-bound");
    for cfg in configs {
        let code = match cfg.build() {
            Ok(code) => code,
            Err(e) => {
                rep.check(false, || format!("{}: {e}", cfg.describe()));
                continue;
            }
        };
        let gen = code.generator();
        let dist = enumerate_generator(&gen, exhaustive_limit, None)
            .unwrap_or_else(|_| sample_distribution(&gen, samples, seed));
        let bound = code.theorem_bound();
        let min = dist.min_positive();
        let injective = !dist.is_exhaustive() || dist.counts[0] == 1;
        rep.check(min.is_none_or(|d| d as i64 >= bound) && injective, || {
            format!(
                "{}: minimum weight {min:?} below 2s - k = {bound}",
                cfg.describe()
            )
        });
    }
    rep
}

/// Exhaustive structural checks on one code: injectivity, nonvanishing
/// determinant, rank drop exactly at roots of the determinant, the
/// weight/root-count relation and membership of the determinant in the
/// expected Riemann-Roch space of the base field.
pub fn code_structure_suite(code: &CodeSpec, limit: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("code-structure");
    let fq = code.field();
    let q = fq.order();
    if srmetric::message_count(q, code.dimension()).is_none_or(|n| n > limit as u128) {
        rep.check(false, || {
            format!("q^k exceeds the enumeration limit {limit}")
        });
        return rep;
    }
    let gen = code.generator();
    let form = code.det_form();
    let k = code.k() as i64;
    let s = code.s() as i64;
    let (pole_x0, den_ok) = match code.pole() {
        PoleData::Infinity => (None, form.den.is_one()),
        PoleData::Split { x0, .. } => (
            Some(x0),
            form.den == Poly::linear(fq, x0).pow(fq, form.den.degree().unwrap() as u32),
        ),
    };
    rep.check(den_ok, || {
        format!(
            "determinant denominator {} off the pole place",
            form.den.display(fq)
        )
    });
    for m in srmetric::messages(fq, code.dimension()) {
        let zero_msg = m.iter().all(|v| v.is_zero());
        let cw = gen.codeword(&m);
        let w = flat_weight(fq, &cw);
        if zero_msg {
            rep.check(w == 0, || "zero message has nonzero weight".into());
            continue;
        }
        let idx: Vec<u32> = m.iter().map(|v| v.index()).collect();
        rep.check(w > 0, || format!("message {idx:?} encodes to zero"));
        rep.check(w as i64 >= 2 * s - k, || {
            format!("message {idx:?} has weight {w} < 2s - k")
        });
        let num = form.numerator(fq, &m);
        if num.is_zero() {
            rep.check(false, || format!("message {idx:?} has zero determinant"));
            continue;
        }
        // det = num / den lies in L(k Q0) of the base field
        let member = match pole_x0 {
            None => num.degree().unwrap() as i64 <= k,
            Some(x0) => {
                let pole = form.den.degree().unwrap() as i64 - num.order_at(fq, x0).unwrap() as i64;
                pole <= k && num.degree() <= form.den.degree()
            }
        };
        rep.check(member, || {
            format!("message {idx:?}: determinant outside L(k Q0)")
        });
        let mut deficiency = 0i64;
        for (j, &x0) in code.eval_places().iter().enumerate() {
            let b = &cw[4 * j..4 * j + 4];
            let r = rank2x2(fq, &[[b[0], b[1]], [b[2], b[3]]]);
            let mult = num.order_at(fq, x0).unwrap() as i64;
            rep.check((r < 2) == (mult > 0), || {
                format!("message {idx:?}: rank {r} at x = {x0}, root order {mult}")
            });
            rep.check(r > 0 || mult >= 2, || {
                format!("message {idx:?}: zero block at simple root x = {x0}")
            });
            deficiency += 2 - r as i64;
        }
        let root_count: i64 = code
            .eval_places()
            .iter()
            .map(|&x0| num.order_at(fq, x0).unwrap() as i64)
            .sum();
        rep.check(deficiency <= root_count && root_count <= k, || {
            format!("message {idx:?}: rank deficiency {deficiency}, roots {root_count}")
        });
    }
    rep
}

/// Linearity of [`CodeSpec::encode`] on random message pairs.
pub fn linearity_suite(code: &CodeSpec, cases: usize, seed: u64) -> SuiteReport {
    let fq = code.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = SuiteReport::new("linearity");
    let flat = |m: &[Fe]| -> Vec<Fe> {
        code.encode(m)
            .unwrap()
            .blocks
            .iter()
            .flat_map(|b| b.m.iter().flatten().copied())
            .collect()
    };
    for _ in 0..cases {
        let m1: Vec<Fe> = (0..code.dimension())
            .map(|_| random_element(&mut rng, fq))
            .collect();
        let m2: Vec<Fe> = (0..code.dimension())
            .map(|_| random_element(&mut rng, fq))
            .collect();
        let a = random_element(&mut rng, fq);
        let sum: Vec<Fe> = m1.iter().zip(&m2).map(|(&x, &y)| fq.add(x, y)).collect();
        let scaled: Vec<Fe> = m1.iter().map(|&x| fq.mul(a, x)).collect();
        let (c1, c2) = (flat(&m1), flat(&m2));
        let additive = flat(&sum)
            == c1
                .iter()
                .zip(&c2)
                .map(|(&x, &y)| fq.add(x, y))
                .collect::<Vec<_>>();
        let homogeneous = flat(&scaled) == c1.iter().map(|&x| fq.mul(a, x)).collect::<Vec<_>>();
        let sub = flat_weight(fq, &flat(&sum)) <= flat_weight(fq, &c1) + flat_weight(fq, &c2);
        rep.check(additive && homogeneous && sub, || {
            let idx = |m: &[Fe]| m.iter().map(|v| v.index()).collect::<Vec<_>>();
            format!("messages {:?}, {:?}, scalar {a}", idx(&m1), idx(&m2))
        });
    }
    rep
}

/// The default `verify` run on one curve.
pub fn run_all(
    c: &Curve,
    cases: usize,
    samples: u64,
    seed: u64,
    det: DetFn,
    limit: u64,
) -> Vec<SuiteReport> {
    let mut reports = vec![
        structural_identity(c, cases, seed, det),
        valuation_suite(c, cases, seed.wrapping_add(1)),
        riemann_roch_suite(c, 10, 2),
    ];
    let configs = bound_configs(c);
    reports.push(theorem_bound_suite(
        &configs,
        limit.min(1 << 20),
        samples,
        seed.wrapping_add(2),
    ));
    let mut structure = SuiteReport::new("code-structure");
    let mut linear = SuiteReport::new("linearity");
    for cfg in configs.iter().filter(|cfg| {
        srmetric::message_count(c.field().order(), cfg.k as usize)
            .is_some_and(|n| n <= limit.min(1 << 14) as u128)
    }) {
        if let Ok(code) = cfg.build() {
            structure.absorb(code_structure_suite(&code, limit));
            linear.absorb(linearity_suite(&code, 20, seed.wrapping_add(3)));
        }
    }
    reports.push(structure);
    reports.push(linear);
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srcodes::det_epsilon;

    fn curve() -> Curve {
        "q=7;f=x^3+3".parse().unwrap()
    }

    fn wrong_det(c: &Curve, l: &Operator) -> RationalFunction {
        det_epsilon(c, l).add(c.field(), &RationalFunction::one())
    }

    #[test]
    fn structural_suite_passes_and_catches_faults() {
        let c = curve();
        assert!(structural_identity(&c, 50, 1, det_epsilon).passed());
        let bad = structural_identity(&c, 5, 1, wrong_det);
        assert!(!bad.passed());
        assert!(bad.failures[0].contains("f1 = "));
    }

    #[test]
    fn valuation_suite_small() {
        let rep = valuation_suite(&curve(), 60, 3);
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn inert_contribution_is_even() {
        let c = curve();
        let fq = c.field();
        // x has a simple zero at the inert place over 0: v_0(N(x)) = 2
        assert_eq!(principal_divisor_degree(&c, &CurveFunction::x()), Some(0));
        assert_eq!(c.norm(&CurveFunction::x()).order_at(fq, Fe::ZERO), Some(2));
    }

    #[test]
    fn cubic_listing() {
        let f5 = Field::prime(5).unwrap();
        let cubics: Vec<Curve> = square_free_cubics(&f5).take(4).collect();
        assert_eq!(cubics.len(), 4);
        assert_eq!(cubics[0].spec(), "q=5;f=1 + x^3");
    }

    #[test]
    fn example_code_structure() {
        let c = curve();
        let places: Vec<BasePlace> = [0, 1, 2, 3, 4]
            .iter()
            .map(|&v| BasePlace::Finite(c.field().from_i64(v)))
            .collect();
        let code = code_construct1(&c, 4, 2, &places).unwrap();
        let rep = code_structure_suite(&code, 1 << 20);
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(linearity_suite(&code, 10, 0).passed());
    }
}
