//! Riemann-Roch spaces at affine points against the group law: if `T` is
//! translation by `-P`, then `L(k P)` is spanned by `x(T)^i y(T)^j` with
//! `2i + 3j <= k`.

use srcodes::effield::{Curve, CurveFunction, CurvePlace, SplitType};
use srcodes::linalg::rref;
use srcodes::verify::square_free_cubics;
use srcodes::{Fe, Field};

/// Coordinates of `R + (x1, y1)` as functions of `R = (x, y)` on a monic curve.
fn translate(c: &Curve, x1: Fe, y1: Fe) -> (CurveFunction, CurveFunction) {
    let k = |v: Fe| CurveFunction::constant(v);
    let lam = c.mul(
        &c.sub(&CurveFunction::y(), &k(y1)),
        &c.inv(&c.sub(&CurveFunction::x(), &k(x1))).unwrap(),
    );
    let a2 = c.poly().coeff(2);
    let x3 = c.sub(
        &c.sub(&c.sub(&c.mul(&lam, &lam), &k(a2)), &CurveFunction::x()),
        &k(x1),
    );
    let y3 = c.sub(
        &c.mul(&lam, &c.sub(&CurveFunction::x(), &x3)),
        &CurveFunction::y(),
    );
    (x3, y3)
}

fn power(c: &Curve, h: &CurveFunction, e: usize) -> CurveFunction {
    (0..e).fold(CurveFunction::one(), |acc, _| c.mul(&acc, h))
}

fn rank(field: &Field, rows: Vec<Vec<Fe>>) -> usize {
    let mut rows = rows;
    rref(field, &mut rows).len()
}

fn split_points(c: &Curve) -> Vec<CurvePlace> {
    c.field()
        .elements()
        .filter(|&x| matches!(c.classify_base_place(x), SplitType::Split(..)))
        .flat_map(|x| c.places_over(x))
        .take(4)
        .collect()
}

#[test]
fn affine_spaces_match_translated_monomials() {
    let mut checked = 0;
    for q in [5, 7, 11] {
        let fq = Field::prime(q).unwrap();
        for c in square_free_cubics(&fq).take(3) {
            for p in split_points(&c) {
                let CurvePlace::Affine { x, y } = p else {
                    unreachable!()
                };
                let (tx, ty) = translate(&c, x, fq.neg(y));
                assert_eq!(c.pole_order(p, &tx), Some(2));
                assert_eq!(c.pole_order(p, &ty), Some(3));
                for k in 1..=7i64 {
                    let ours = c.rr_basis_affine(p, k).unwrap();
                    let group: Vec<CurveFunction> = (0..=k as usize)
                        .flat_map(|o| match o {
                            0 => Some(CurveFunction::one()),
                            1 => None,
                            _ if o % 2 == 0 => Some(power(&c, &tx, o / 2)),
                            _ => Some(c.mul(&power(&c, &tx, (o - 3) / 2), &ty)),
                        })
                        .collect();
                    let window = |h: &CurveFunction| c.expansion_window(p, h, -k, 0).unwrap();
                    let a: Vec<Vec<Fe>> = ours.iter().map(window).collect();
                    let b: Vec<Vec<Fe>> = group.iter().map(window).collect();
                    let both: Vec<Vec<Fe>> = a.iter().chain(&b).cloned().collect();
                    assert_eq!(rank(&fq, a), k as usize, "{} at {p}, k = {k}", c.spec());
                    assert_eq!(rank(&fq, b), k as usize);
                    assert_eq!(
                        rank(&fq, both),
                        k as usize,
                        "spans differ: {} at {p}, k = {k}",
                        c.spec()
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn star_basis_is_reduced_against_the_lower_space() {
    let c: Curve = "q=7;f=x^3+3".parse().unwrap();
    let p = CurvePlace::Affine {
        x: Fe::ONE,
        y: c.field().from_i64(2),
    };
    for (k, k1) in [(6, 3), (7, 2), (5, 4)] {
        for h in c.rr_star_basis(p, k, k1).unwrap() {
            let w = c.expansion_window(p, &h, -k, 0).unwrap();
            // pole orders 0 and 2..=k1 are pivots of the lower space
            for o in (0..=k1).filter(|&o| o != 1) {
                assert!(
                    w[(k - o) as usize].is_zero(),
                    "k = {k}, k1 = {k1}, order {o}"
                );
            }
        }
    }
}
