//! Operators `L = f1 + f2 sigma` on the elliptic function field, their 2x2
//! matrix representations, and the two code constructions.
//!
//! With respect to the basis `{1, y}` and row vectors,
//! `coords(L(g)) = coords(g) * eps(L)` where
//!
//! ```text
//! eps(L) = A_id * B_f1 + A_sigma * B_f2
//!        = [[f11 + f21,          f12 + f22],
//!           [(f12 - f22) f,      f11 - f21]]
//! ```
//!
//! for `fi = fi1 + fi2 y`. A code is the image of a message space of
//! operators under `L -> (eps(L)(P_1), .., eps(L)(P_s))`.

use serde::{Deserialize, Serialize};

use crate::effield::{BasePlace, Curve, CurveFunction, CurvePlace, SplitType};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::upoly::{Poly, RationalFunction};

/// `L(g) = f1 g + f2 sigma(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    pub f1: CurveFunction,
    pub f2: CurveFunction,
}

impl Operator {
    pub fn new(f1: CurveFunction, f2: CurveFunction) -> Operator {
        Operator { f1, f2 }
    }

    pub fn zero() -> Operator {
        Operator::new(CurveFunction::zero(), CurveFunction::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero()
    }

    /// Apply to `g`.
    pub fn apply(&self, c: &Curve, g: &CurveFunction) -> CurveFunction {
        c.add(&c.mul(&self.f1, g), &c.mul(&self.f2, &c.sigma(g)))
    }
}

/// 2x2 matrix of rational functions in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionMatrix(pub [[RationalFunction; 2]; 2]);

impl FunctionMatrix {
    pub fn zero() -> FunctionMatrix {
        FunctionMatrix::diag(RationalFunction::zero(), RationalFunction::zero())
    }

    pub fn identity() -> FunctionMatrix {
        FunctionMatrix::diag(RationalFunction::one(), RationalFunction::one())
    }

    pub fn diag(a: RationalFunction, d: RationalFunction) -> FunctionMatrix {
        FunctionMatrix([[a, RationalFunction::zero()], [RationalFunction::zero(), d]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &RationalFunction {
        &self.0[i][j]
    }

    pub fn add(&self, field: &Field, other: &FunctionMatrix) -> FunctionMatrix {
        let e = |i: usize, j: usize| self.0[i][j].add(field, &other.0[i][j]);
        FunctionMatrix([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn mul(&self, field: &Field, other: &FunctionMatrix) -> FunctionMatrix {
        let e = |i: usize, j: usize| {
            self.0[i][0]
                .mul(field, &other.0[0][j])
                .add(field, &self.0[i][1].mul(field, &other.0[1][j]))
        };
        FunctionMatrix([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self, field: &Field) -> RationalFunction {
        let m = &self.0;
        m[0][0]
            .mul(field, &m[1][1])
            .sub(field, &m[0][1].mul(field, &m[1][0]))
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, field: &Field, v: [&RationalFunction; 2]) -> [RationalFunction; 2] {
        let m = &self.0;
        [
            v[0].mul(field, &m[0][0])
                .add(field, &v[1].mul(field, &m[1][0])),
            v[0].mul(field, &m[0][1])
                .add(field, &v[1].mul(field, &m[1][1])),
        ]
    }

    /// Entry-wise value at `x = x0`.
    pub fn eval(&self, field: &Field, x0: Fe) -> Result<[[Fe; 2]; 2]> {
        let e = |i: usize, j: usize| self.0[i][j].eval(field, x0);
        Ok([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]])
    }

    pub fn display(&self, field: &Field) -> String {
        let e = |i: usize, j: usize| self.0[i][j].display(field).to_string();
        format!("[[{}, {}], [{}, {}]]", e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

/// A 2x2 matrix over GF(q) attached to a finite base place.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvaluatedMatrix {
    pub place: BasePlace,
    pub m: [[Fe; 2]; 2],
}

impl EvaluatedMatrix {
    pub fn det(&self, field: &Field) -> Fe {
        field.sub(
            field.mul(self.m[0][0], self.m[1][1]),
            field.mul(self.m[0][1], self.m[1][0]),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(|v| v.is_zero())
    }
}

/// Matrix of `sigma` on `{1, y}`: `diag(1, -1)`.
pub fn aut_matrix(c: &Curve) -> FunctionMatrix {
    FunctionMatrix::diag(
        RationalFunction::one(),
        RationalFunction::constant(c.field().neg(Fe::ONE)),
    )
}

/// Matrix of multiplication by `f = f1 + f2 y`: `[[f1, f2], [f2 f, f1]]`.
pub fn mul_matrix(c: &Curve, f: &CurveFunction) -> FunctionMatrix {
    let fq = c.field();
    FunctionMatrix([
        [f.a.clone(), f.b.clone()],
        [f.b.mul_poly(fq, c.poly()), f.a.clone()],
    ])
}

/// `A_id * B_f1 + A_sigma * B_f2`.
pub fn epsilon_symbolic(c: &Curve, l: &Operator) -> FunctionMatrix {
    let fq = c.field();
    let first = FunctionMatrix::identity().mul(fq, &mul_matrix(c, &l.f1));
    let second = aut_matrix(c).mul(fq, &mul_matrix(c, &l.f2));
    first.add(fq, &second)
}

/// `eps(L)` evaluated at a finite base place.
pub fn epsilon_at(c: &Curve, l: &Operator, place: BasePlace) -> Result<EvaluatedMatrix> {
    let BasePlace::Finite(x0) = place else {
        return Err(Error::ParameterViolation(
            "evaluation at the infinite place is not defined".into(),
        ));
    };
    let m = epsilon_symbolic(c, l)
        .eval(c.field(), x0)
        .map_err(|_| Error::PoleAtEvaluationPlace(x0.index()))?;
    Ok(EvaluatedMatrix { place, m })
}

/// `f11^2 - f21^2 - (f12^2 - f22^2) f`.
pub fn det_epsilon(c: &Curve, l: &Operator) -> RationalFunction {
    let fq = c.field();
    let sq = |r: &RationalFunction| r.mul(fq, r);
    let (f11, f12, f21, f22) = (&l.f1.a, &l.f1.b, &l.f2.a, &l.f2.b);
    sq(f11)
        .sub(fq, &sq(f21))
        .sub(fq, &sq(f12).sub(fq, &sq(f22)).mul_poly(fq, c.poly()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Pole place at infinity (totally ramified).
    Ramified,
    /// Pole places `Q01`, `Q02` over a split base place.
    Split,
}

impl Construction {
    pub fn tag(self) -> u8 {
        match self {
            Construction::Ramified => 1,
            Construction::Split => 2,
        }
    }

    pub fn from_tag(tag: u8) -> Result<Construction> {
        match tag {
            1 => Ok(Construction::Ramified),
            2 => Ok(Construction::Split),
            t => Err(Error::ParameterViolation(format!(
                "construction must be 1 or 2, got {t}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoleData {
    Infinity,
    /// `q01` carries `f1`'s poles, `q02` carries `f2`'s.
    Split {
        x0: Fe,
        q01: CurvePlace,
        q02: CurvePlace,
    },
}

/// A message basis element and the operator slot it feeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub slot: u8,
    pub f: CurveFunction,
}

/// The ordered blocks `eps(L)(P_1), .., eps(L)(P_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    pub blocks: Vec<EvaluatedMatrix>,
}

/// A constructed code: `C = { (eps(L)(P_i))_i : L in M }` where the message
/// space `M` is spanned by the operators of [`CodeSpec::basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    curve: Curve,
    construction: Construction,
    k: usize,
    k1: usize,
    pole: PoleData,
    places: Vec<Fe>,
    basis: Vec<BasisElement>,
}

fn violation(msg: String) -> Error {
    Error::ParameterViolation(msg)
}

fn check_parameters(s: usize, k: i64, k1: i64) -> Result<()> {
    let s = s as i64;
    if s < 2 {
        return Err(violation(format!("s >= 2 violated (s = {s})")));
    }
    if k1 < 1 {
        return Err(violation(format!("k1 >= 1 violated (k1 = {k1})")));
    }
    if k1 >= k {
        return Err(violation(format!("k1 < k violated (k1 = {k1}, k = {k})")));
    }
    if k >= 2 * s {
        return Err(violation(format!("k < 2s violated (k = {k}, s = {s})")));
    }
    Ok(())
}

fn finite_places(places: &[BasePlace]) -> Result<Vec<Fe>> {
    let mut out = Vec::with_capacity(places.len());
    for p in places {
        let BasePlace::Finite(x) = p else {
            return Err(violation("evaluation places must be finite".into()));
        };
        if out.contains(x) {
            return Err(violation(format!(
                "evaluation places must be distinct (x = {x} repeated)"
            )));
        }
        out.push(*x);
    }
    Ok(out)
}

/// Code with `f1 in L*_{k1}(k Q_inf)` and `f2 in L(k1 Q_inf)`.
pub fn code_construct1(c: &Curve, k: i64, k1: i64, places: &[BasePlace]) -> Result<CodeSpec> {
    let xs = finite_places(places)?;
    check_parameters(xs.len(), k, k1)?;
    let inf = CurvePlace::AtInfinity;
    let mut basis: Vec<BasisElement> = Vec::new();
    for f in c.rr_star_basis(inf, k, k1)?.into_iter().rev() {
        basis.push(BasisElement { slot: 1, f });
    }
    for f in c.rr_basis_infinity(k1)?.into_iter().rev() {
        basis.push(BasisElement { slot: 2, f });
    }
    Ok(CodeSpec {
        curve: c.clone(),
        construction: Construction::Ramified,
        k: k as usize,
        k1: k1 as usize,
        pole: PoleData::Infinity,
        places: xs,
        basis,
    })
}

/// Code with `f1 in L*_{k1}(k Q01)` and `f2 in L(k1 Q02)` where `Q01`,
/// `Q02` lie over the split base place `x0`. `Q01` is the point with the
/// canonical square root unless `swap_labels` is set.
pub fn code_construct2(
    c: &Curve,
    k: i64,
    k1: i64,
    split_x0: Fe,
    places: &[BasePlace],
    swap_labels: bool,
) -> Result<CodeSpec> {
    let SplitType::Split(y1, y2) = c.classify_base_place(split_x0) else {
        return Err(Error::NotSplitPlace(split_x0.index()));
    };
    if places.contains(&BasePlace::Finite(split_x0)) {
        return Err(Error::PlaceCollision(format!("x = {split_x0}")));
    }
    let xs = finite_places(places)?;
    check_parameters(xs.len(), k, k1)?;
    let (y1, y2) = if swap_labels { (y2, y1) } else { (y1, y2) };
    let q01 = CurvePlace::Affine { x: split_x0, y: y1 };
    let q02 = CurvePlace::Affine { x: split_x0, y: y2 };
    let mut basis: Vec<BasisElement> = Vec::new();
    for f in c.rr_star_basis(q01, k, k1)? {
        basis.push(BasisElement { slot: 1, f });
    }
    for f in c.rr_basis_affine(q02, k1)? {
        basis.push(BasisElement { slot: 2, f });
    }
    Ok(CodeSpec {
        curve: c.clone(),
        construction: Construction::Split,
        k: k as usize,
        k1: k1 as usize,
        pole: PoleData::Split {
            x0: split_x0,
            q01,
            q02,
        },
        places: xs,
        basis,
    })
}

/// Evaluate the operator of `message` at every evaluation place.
pub fn encode(code: &CodeSpec, message: &[Fe]) -> Result<Codeword> {
    code.encode(message)
}

impl CodeSpec {
    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn field(&self) -> &Field {
        self.curve.field()
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn pole(&self) -> PoleData {
        self.pole
    }

    pub fn eval_places(&self) -> &[Fe] {
        &self.places
    }

    pub fn base_places(&self) -> Vec<BasePlace> {
        self.places.iter().map(|&x| BasePlace::Finite(x)).collect()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn s(&self) -> usize {
        self.places.len()
    }

    /// Number of GF(q) symbols, `4 s`.
    pub fn length(&self) -> usize {
        4 * self.s()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Guaranteed minimum sum-rank distance `2s - k`.
    pub fn theorem_bound(&self) -> i64 {
        2 * self.s() as i64 - self.k as i64
    }

    /// The operator `sum_i m_i (basis_i in its slot)`.
    pub fn operator(&self, message: &[Fe]) -> Result<Operator> {
        if message.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: message.len(),
            });
        }
        let c = &self.curve;
        let mut l = Operator::zero();
        for (m, e) in message.iter().zip(&self.basis) {
            if m.is_zero() {
                continue;
            }
            let term = c.scale(&e.f, *m);
            if e.slot == 1 {
                l.f1 = c.add(&l.f1, &term);
            } else {
                l.f2 = c.add(&l.f2, &term);
            }
        }
        Ok(l)
    }

    pub fn basis_operator(&self, i: usize) -> Operator {
        let e = &self.basis[i];
        if e.slot == 1 {
            Operator::new(e.f.clone(), CurveFunction::zero())
        } else {
            Operator::new(CurveFunction::zero(), e.f.clone())
        }
    }

    pub fn encode(&self, message: &[Fe]) -> Result<Codeword> {
        let l = self.operator(message)?;
        let eps = epsilon_symbolic(&self.curve, &l);
        let blocks = self
            .places
            .iter()
            .map(|&x0| {
                let m = eps
                    .eval(self.field(), x0)
                    .map_err(|_| Error::PoleAtEvaluationPlace(x0.index()))?;
                Ok(EvaluatedMatrix {
                    place: BasePlace::Finite(x0),
                    m,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Codeword { blocks })
    }

    /// Generator rows: the codeword of each basis operator, flattened.
    pub fn generator(&self) -> Generator {
        let rows = (0..self.dimension())
            .map(|i| {
                let mut msg = vec![Fe::ZERO; self.dimension()];
                msg[i] = Fe::ONE;
                let cw = self
                    .encode(&msg)
                    .expect("basis operators are regular at evaluation places");
                cw.blocks
                    .iter()
                    .flat_map(|b| b.m.iter().flatten().copied())
                    .collect()
            })
            .collect();
        Generator {
            field: self.field().clone(),
            s: self.s(),
            rows,
        }
    }

    /// `det eps(L(m)) = (sum_{i <= j} m_i m_j T_ij) / den`.
    pub fn det_form(&self) -> DetForm {
        let fq = self.field();
        let eps: Vec<FunctionMatrix> = (0..self.dimension())
            .map(|i| epsilon_symbolic(&self.curve, &self.basis_operator(i)))
            .collect();
        let bil = |a: &FunctionMatrix, b: &FunctionMatrix| {
            a.0[0][0]
                .mul(fq, &b.0[1][1])
                .sub(fq, &a.0[0][1].mul(fq, &b.0[1][0]))
        };
        let n = eps.len();
        let mut terms: Vec<Vec<RationalFunction>> = vec![vec![RationalFunction::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                terms[i][j] = if i == j {
                    bil(&eps[i], &eps[i])
                } else {
                    bil(&eps[i], &eps[j]).add(fq, &bil(&eps[j], &eps[i]))
                };
            }
        }
        let mut den = Poly::one();
        for t in terms.iter().flatten() {
            let g = den.gcd(fq, t.den()).unwrap();
            den = den.mul(fq, &t.den().div_exact(fq, &g).unwrap());
        }
        let polys = terms
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| t.num().mul(fq, &den.div_exact(fq, t.den()).unwrap()))
                    .collect()
            })
            .collect();
        DetForm { den, terms: polys }
    }

    /// Canonical JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dto()).expect("DTO serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<CodeSpec> {
        let dto: CodeSpecDto =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        CodeSpec::from_dto(dto)
    }

    fn to_dto(&self) -> CodeSpecDto {
        let pole = match self.pole {
            PoleData::Infinity => PoleDto::Infinity,
            PoleData::Split { x0, q01, q02 } => PoleDto::Split {
                x0: x0.index(),
                q01: point_dto(q01),
                q02: point_dto(q02),
            },
        };
        CodeSpecDto {
            curve: self.curve.spec(),
            construction: self.construction.tag(),
            k: self.k,
            k1: self.k1,
            pole,
            eval_places: self.places.iter().map(|x| x.index()).collect(),
            message_basis: self
                .basis
                .iter()
                .map(|e| BasisDto {
                    slot: e.slot,
                    a: rational_dto(&e.f.a),
                    b: rational_dto(&e.f.b),
                })
                .collect(),
            derived: DerivedDto {
                length: self.length(),
                dimension: self.dimension(),
                s: self.s(),
                theorem_bound: self.theorem_bound(),
            },
        }
    }

    fn from_dto(dto: CodeSpecDto) -> Result<CodeSpec> {
        let curve: Curve = dto.curve.parse()?;
        let fq = curve.field().clone();
        let construction = Construction::from_tag(dto.construction)?;
        let places = dto
            .eval_places
            .iter()
            .map(|&v| fq.from_index(v).map(BasePlace::Finite))
            .collect::<Result<Vec<_>>>()?;
        let xs = finite_places(&places)?;
        check_parameters(xs.len(), dto.k as i64, dto.k1 as i64)?;
        let pole = match (construction, dto.pole) {
            (Construction::Ramified, PoleDto::Infinity) => PoleData::Infinity,
            (Construction::Split, PoleDto::Split { x0, q01, q02 }) => {
                let x0 = fq.from_index(x0)?;
                let q01 = point_from_dto(&curve, q01)?;
                let q02 = point_from_dto(&curve, q02)?;
                if q01.base() != BasePlace::Finite(x0)
                    || q02 != curve.conjugate_place(q01)
                    || q01 == q02
                {
                    return Err(Error::Parse(
                        "pole places must be the two points over x0".into(),
                    ));
                }
                if xs.contains(&x0) {
                    return Err(Error::PlaceCollision(format!("x = {x0}")));
                }
                PoleData::Split { x0, q01, q02 }
            }
            _ => {
                return Err(Error::Parse(
                    "pole data does not match the construction".into(),
                ))
            }
        };
        let mut basis = Vec::with_capacity(dto.message_basis.len());
        for e in dto.message_basis {
            if e.slot != 1 && e.slot != 2 {
                return Err(Error::Parse(format!("slot must be 1 or 2, got {}", e.slot)));
            }
            let f =
                CurveFunction::new(rational_from_dto(&fq, &e.a)?, rational_from_dto(&fq, &e.b)?);
            basis.push(BasisElement { slot: e.slot, f });
        }
        let slot2 = basis.iter().filter(|e| e.slot == 2).count();
        if basis.len() != dto.k || slot2 != dto.k1 {
            return Err(violation(format!(
                "message basis must hold k - k1 = {} slot-1 and k1 = {} slot-2 functions",
                dto.k.saturating_sub(dto.k1),
                dto.k1
            )));
        }
        Ok(CodeSpec {
            curve,
            construction,
            k: dto.k,
            k1: dto.k1,
            pole,
            places: xs,
            basis,
        })
    }
}

/// Flattened generator rows; row `i` holds the `4 s` entries of the
/// codeword of basis operator `i`, block by block in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub field: Field,
    pub s: usize,
    pub rows: Vec<Vec<Fe>>,
}

impl Generator {
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Keep only the first `n` rows.
    pub fn truncated(&self, n: usize) -> Generator {
        Generator {
            field: self.field.clone(),
            s: self.s,
            rows: self.rows[..n.min(self.rows.len())].to_vec(),
        }
    }

    pub fn codeword(&self, message: &[Fe]) -> Vec<Fe> {
        let f = &self.field;
        let mut out = vec![Fe::ZERO; 4 * self.s];
        for (m, row) in message.iter().zip(&self.rows) {
            if m.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(*m, g));
            }
        }
        out
    }
}

/// The determinant of `eps(L(m))` as a quadratic form in the message.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetForm {
    pub den: Poly,
    /// Upper triangular: `terms[i][j]` for `i <= j`.
    pub terms: Vec<Vec<Poly>>,
}

impl DetForm {
    /// Numerator polynomial `den * det eps(L(m))`.
    pub fn numerator(&self, field: &Field, message: &[Fe]) -> Poly {
        let mut acc = Poly::zero();
        for (i, &mi) in message.iter().enumerate() {
            if mi.is_zero() {
                continue;
            }
            for (j, &mj) in message.iter().enumerate().skip(i) {
                if mj.is_zero() {
                    continue;
                }
                acc = acc.add(field, &self.terms[i][j].scale(field, field.mul(mi, mj)));
            }
        }
        acc
    }
}

#[derive(Serialize, Deserialize)]
struct CodeSpecDto {
    curve: String,
    construction: u8,
    k: usize,
    k1: usize,
    pole: PoleDto,
    eval_places: Vec<u32>,
    message_basis: Vec<BasisDto>,
    derived: DerivedDto,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum PoleDto {
    Infinity,
    Split {
        x0: u32,
        q01: [u32; 2],
        q02: [u32; 2],
    },
}

#[derive(Serialize, Deserialize)]
struct BasisDto {
    slot: u8,
    a: RationalDto,
    b: RationalDto,
}

#[derive(Serialize, Deserialize)]
struct RationalDto {
    num: Vec<u32>,
    den: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct DerivedDto {
    length: usize,
    dimension: usize,
    s: usize,
    theorem_bound: i64,
}

fn point_dto(p: CurvePlace) -> [u32; 2] {
    match p {
        CurvePlace::Affine { x, y } => [x.index(), y.index()],
        CurvePlace::AtInfinity => unreachable!("split pole places are affine"),
    }
}

fn point_from_dto(c: &Curve, p: [u32; 2]) -> Result<CurvePlace> {
    let place = CurvePlace::Affine {
        x: c.field().from_index(p[0])?,
        y: c.field().from_index(p[1])?,
    };
    c.check_place(place)?;
    Ok(place)
}

fn rational_dto(r: &RationalFunction) -> RationalDto {
    let idx = |p: &Poly| p.coeffs().iter().map(|c| c.index()).collect();
    RationalDto {
        num: idx(r.num()),
        den: idx(r.den()),
    }
}

fn rational_from_dto(fq: &Field, r: &RationalDto) -> Result<RationalFunction> {
    let poly = |v: &[u32]| -> Result<Poly> {
        Ok(Poly::new(
            v.iter()
                .map(|&i| fq.from_index(i))
                .collect::<Result<Vec<_>>>()?,
        ))
    };
    RationalFunction::new(fq, poly(&r.num)?, poly(&r.den)?)
}
