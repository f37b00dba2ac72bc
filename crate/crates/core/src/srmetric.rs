//! Sum-rank weights, weight distributions and the bounds they are checked
//! against.
//!
//! Exhaustive enumeration walks message indices `0..q^k` with an odometer:
//! the message with index `n = sum_i m_i q^(k-1-i)` is the `n`-th message in
//! lexicographic order of the canonical field enumeration, and stepping to
//! the next index adds `(m_j' - m_j) G_j` for each digit that changes.
//! Disjoint index ranges are processed in parallel and their histograms
//! summed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::srcodes::{CodeSpec, Codeword, Generator};

/// Default cap on the number of enumerated messages.
pub const DEFAULT_LIMIT: u64 = 1 << 24;

/// Rank of a 2x2 matrix: 0 for zero, 1 for singular, else 2.
pub fn rank2x2(field: &Field, m: &[[Fe; 2]; 2]) -> usize {
    if m.iter().flatten().all(|v| v.is_zero()) {
        0
    } else if field.mul(m[0][0], m[1][1]) == field.mul(m[0][1], m[1][0]) {
        1
    } else {
        2
    }
}

pub fn srweight(field: &Field, cw: &Codeword) -> usize {
    cw.blocks.iter().map(|b| rank2x2(field, &b.m)).sum()
}

/// Sum-rank weight of a flattened codeword (blocks of 4, row-major).
pub fn flat_weight(field: &Field, flat: &[Fe]) -> usize {
    flat.chunks_exact(4)
        .map(|b| rank2x2(field, &[[b[0], b[1]], [b[2], b[3]]]))
        .sum()
}

/// `A_i` for `i = 0..=2s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub q: u32,
    pub dim: usize,
    pub s: usize,
    #[serde(rename = "A")]
    pub counts: Vec<u64>,
    /// Number of random messages drawn; absent for exhaustive runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampled: Option<u64>,
}

impl WeightDistribution {
    fn empty(q: u32, dim: usize, s: usize) -> WeightDistribution {
        WeightDistribution {
            q,
            dim,
            s,
            counts: vec![0; 2 * s + 1],
            sampled: None,
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        self.sampled.is_none()
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest positive weight that occurs. For sampled distributions this
    /// is only an upper bound on the minimum distance.
    pub fn min_positive(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(i, _)| i)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("distribution serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<WeightDistribution> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// `i,A_i` lines under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,A_i\n");
        for (i, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{i},{c}\n"));
        }
        out
    }

    fn merge(mut self, other: &WeightDistribution) -> WeightDistribution {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self
    }
}

/// `q^k`, or `None` past `u128`.
pub fn message_count(q: u32, k: usize) -> Option<u128> {
    (q as u128).checked_pow(k as u32)
}

fn check_limit(q: u32, k: usize, limit: u64) -> Result<u64> {
    match message_count(q, k) {
        Some(n) if n <= limit as u128 => Ok(n as u64),
        Some(n) => Err(Error::TooLarge { count: n, limit }),
        None => Err(Error::TooLarge {
            count: u128::MAX,
            limit,
        }),
    }
}

/// Exhaustive weight distribution of a code.
pub fn weight_enumerator(code: &CodeSpec, limit: u64) -> Result<WeightDistribution> {
    enumerate_generator(&code.generator(), limit, None)
}

/// Exhaustive weight distribution of the span of `gen`, split into
/// `ranges` disjoint index ranges (default: a few per worker thread).
pub fn enumerate_generator(
    gen: &Generator,
    limit: u64,
    ranges: Option<usize>,
) -> Result<WeightDistribution> {
    let q = gen.field.order();
    let k = gen.dimension();
    let total = check_limit(q, k, limit)?;
    let parts = ranges
        .unwrap_or_else(|| rayon::current_num_threads() * 4)
        .clamp(1, total as usize);
    let step = total.div_ceil(parts as u64);
    let empty = WeightDistribution::empty(q, k, gen.s);
    let dist = (0..parts as u64)
        .into_par_iter()
        .map(|r| {
            let lo = r * step;
            let hi = ((r + 1) * step).min(total);
            enumerate_range(gen, lo, hi)
        })
        .reduce(|| empty.clone(), |a, b| a.merge(&b));
    Ok(dist)
}

/// Histogram over message indices `lo..hi`.
pub fn enumerate_range(gen: &Generator, lo: u64, hi: u64) -> WeightDistribution {
    let f = &gen.field;
    let q = f.order();
    let k = gen.dimension();
    let mut dist = WeightDistribution::empty(q, k, gen.s);
    if lo >= hi {
        return dist;
    }
    let elems: Vec<Fe> = f.elements().collect();
    let step: Vec<Fe> = (0..q as usize)
        .map(|e| f.sub(elems[(e + 1) % q as usize], elems[e]))
        .collect();
    let mut digits = message_digits(q, k, lo);
    let message: Vec<Fe> = digits.iter().map(|&d| elems[d as usize]).collect();
    let mut cw = gen.codeword(&message);
    for n in lo..hi {
        dist.counts[flat_weight(f, &cw)] += 1;
        if n + 1 == hi {
            break;
        }
        for j in (0..k).rev() {
            let d = digits[j] as usize;
            let delta = step[d];
            for (c, &g) in cw.iter_mut().zip(&gen.rows[j]) {
                *c = f.add(*c, f.mul(delta, g));
            }
            digits[j] = ((d + 1) % q as usize) as u32;
            if digits[j] != 0 {
                break;
            }
        }
    }
    dist
}

/// Digits (canonical element indices) of message number `n`, most
/// significant first.
pub fn message_digits(q: u32, k: usize, mut n: u64) -> Vec<u32> {
    let mut digits = vec![0u32; k];
    for d in digits.iter_mut().rev() {
        *d = (n % q as u64) as u32;
        n /= q as u64;
    }
    digits
}

/// Every message of length `k`, in enumeration order.
pub fn messages(field: &Field, k: usize) -> impl Iterator<Item = Vec<Fe>> + '_ {
    let q = field.order();
    let total = message_count(q, k).expect("message space too large to iterate") as u64;
    let elems: Vec<Fe> = field.elements().collect();
    (0..total).map(move |n| {
        message_digits(q, k, n)
            .iter()
            .map(|&d| elems[d as usize])
            .collect()
    })
}

/// Weights of `samples` uniformly random messages.
pub fn sample_distribution(gen: &Generator, samples: u64, seed: u64) -> WeightDistribution {
    let f = &gen.field;
    let q = f.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dist = WeightDistribution::empty(q, gen.dimension(), gen.s);
    let elems: Vec<Fe> = f.elements().collect();
    for _ in 0..samples {
        let msg: Vec<Fe> = (0..gen.dimension())
            .map(|_| elems[rng.gen_range(0..q as usize)])
            .collect();
        dist.counts[flat_weight(f, &gen.codeword(&msg))] += 1;
    }
    dist.sampled = Some(samples);
    dist
}

/// Minimum sum-rank distance by exhaustive enumeration; `None` for the
/// zero code.
pub fn min_distance(code: &CodeSpec, limit: u64) -> Result<Option<usize>> {
    Ok(weight_enumerator(code, limit)?.min_positive())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub s: usize,
    pub k: usize,
    pub dimension: usize,
    pub d_observed: usize,
    /// `2s - k`.
    pub theorem_lower: i64,
    pub theorem_ok: bool,
    /// `[ceil((4s - 2k) / 2), floor((4s - k + 2) / 2)]`.
    pub singleton_window: (i64, i64),
    /// `4s - 2k <= 2d <= 4s - k + 2`.
    pub singleton_ok: bool,
    /// `log_q |C|`.
    pub code_exponent: usize,
    /// `m (s n - d + 1)` with `m = n = 2`.
    pub msrd_exponent: i64,
    pub msrd: bool,
}

pub fn check_bounds(code: &CodeSpec, d: usize) -> BoundsReport {
    bounds(code.s(), code.k(), code.dimension(), d)
}

pub fn bounds(s: usize, k: usize, dimension: usize, d: usize) -> BoundsReport {
    let (si, ki, di) = (s as i64, k as i64, d as i64);
    let theorem_lower = 2 * si - ki;
    let lo2 = 4 * si - 2 * ki;
    let hi2 = 4 * si - ki + 2;
    let msrd_exponent = 2 * (2 * si - di + 1);
    BoundsReport {
        s,
        k,
        dimension,
        d_observed: d,
        theorem_lower,
        theorem_ok: di >= theorem_lower,
        singleton_window: ((lo2 + 1).div_euclid(2), hi2.div_euclid(2)),
        singleton_ok: lo2 <= 2 * di && 2 * di <= hi2,
        code_exponent: dimension,
        msrd_exponent,
        msrd: dimension as i64 == msrd_exponent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effield::{BasePlace, Curve};
    use crate::srcodes::{code_construct1, code_construct2, encode};

    fn curve() -> Curve {
        "q=7;f=x^3+3".parse().unwrap()
    }

    fn finite(c: &Curve, xs: &[i64]) -> Vec<BasePlace> {
        xs.iter()
            .map(|&v| BasePlace::Finite(c.field().from_i64(v)))
            .collect()
    }

    #[test]
    fn ranks() {
        let f = Field::prime(7).unwrap();
        let m = |v: [i64; 4]| {
            [
                [f.from_i64(v[0]), f.from_i64(v[1])],
                [f.from_i64(v[2]), f.from_i64(v[3])],
            ]
        };
        assert_eq!(rank2x2(&f, &m([0, 0, 0, 0])), 0);
        assert_eq!(rank2x2(&f, &m([1, 2, 3, 6])), 1);
        assert_eq!(rank2x2(&f, &m([0, 0, 0, 5])), 1);
        assert_eq!(rank2x2(&f, &m([3, 1, 4, 3])), 2);
    }

    #[test]
    fn ranks_agree_with_counting() {
        // over GF(q): q^4 matrices, (q^2-1)(q^2-q) invertible, 1 zero
        let f = Field::prime(5).unwrap();
        let elems: Vec<Fe> = f.elements().collect();
        let mut by_rank = [0u64; 3];
        for &a in &elems {
            for &b in &elems {
                for &c in &elems {
                    for &d in &elems {
                        by_rank[rank2x2(&f, &[[a, b], [c, d]])] += 1;
                    }
                }
            }
        }
        assert_eq!(by_rank, [1, 625 - 1 - 24 * 20, 24 * 20]);
    }

    #[test]
    fn digits_are_lexicographic() {
        assert_eq!(message_digits(7, 3, 0), vec![0, 0, 0]);
        assert_eq!(message_digits(7, 3, 1), vec![0, 0, 1]);
        assert_eq!(message_digits(7, 3, 7), vec![0, 1, 0]);
        assert_eq!(message_digits(7, 3, 342), vec![6, 6, 6]);
    }

    #[test]
    fn odometer_matches_direct_encoding() {
        let c: Curve = "q=5;f=x^3+x+1".parse().unwrap();
        let code = code_construct1(&c, 3, 1, &finite(&c, &[0, 1, 2])).unwrap();
        let gen = code.generator();
        let mut direct = WeightDistribution::empty(5, 3, 3);
        for m in messages(c.field(), 3) {
            direct.counts[srweight(c.field(), &encode(&code, &m).unwrap())] += 1;
        }
        for ranges in [1, 2, 7, 125] {
            assert_eq!(
                enumerate_generator(&gen, DEFAULT_LIMIT, Some(ranges)).unwrap(),
                direct
            );
        }
        // a range in the middle
        let mid = enumerate_range(&gen, 17, 61);
        let mut expect = WeightDistribution::empty(5, 3, 3);
        for n in 17..61 {
            let m: Vec<Fe> = message_digits(5, 3, n)
                .iter()
                .map(|&d| c.field().from_index(d).unwrap())
                .collect();
            expect.counts[flat_weight(c.field(), &gen.codeword(&m))] += 1;
        }
        assert_eq!(mid, expect);
    }

    #[test]
    fn too_large_is_reported() {
        let c = curve();
        let code =
            code_construct2(&c, 6, 3, Fe::ONE, &finite(&c, &[0, 2, 3, 4, 5, 6]), false).unwrap();
        assert_eq!(
            weight_enumerator(&code, 1000),
            Err(Error::TooLarge {
                count: 117649,
                limit: 1000
            })
        );
    }

    #[test]
    fn small_subcodes() {
        let c = curve();
        let code =
            code_construct2(&c, 6, 3, Fe::ONE, &finite(&c, &[0, 2, 3, 4, 5, 6]), false).unwrap();
        let one = enumerate_generator(&code.generator().truncated(1), DEFAULT_LIMIT, None).unwrap();
        assert_eq!(one.total(), 7);
        assert_eq!(one.counts[0], 1);
        let zero =
            enumerate_generator(&code.generator().truncated(0), DEFAULT_LIMIT, None).unwrap();
        assert_eq!(zero.counts[0], 1);
        assert_eq!(zero.total(), 1);
        assert_eq!(zero.min_positive(), None);
    }

    #[test]
    fn sampling_is_seeded_and_labeled() {
        let c = curve();
        let code = code_construct1(&c, 6, 3, &finite(&c, &[0, 1, 2, 3, 4, 5, 6])).unwrap();
        let gen = code.generator();
        let a = sample_distribution(&gen, 2000, 9);
        assert_eq!(a, sample_distribution(&gen, 2000, 9));
        assert_eq!(a.total(), 2000);
        assert!(!a.is_exhaustive());
        assert!(a.to_json().contains("\"sampled\":2000"));
    }

    #[test]
    fn serialization() {
        let d = WeightDistribution {
            q: 7,
            dim: 1,
            s: 2,
            counts: vec![1, 0, 2, 0, 4],
            sampled: None,
        };
        assert_eq!(d.to_json(), r#"{"q":7,"dim":1,"s":2,"A":[1,0,2,0,4]}"#);
        assert_eq!(WeightDistribution::from_json(&d.to_json()).unwrap(), d);
        assert_eq!(d.to_csv(), "i,A_i\n0,1\n1,0\n2,2\n3,0\n4,4\n");
    }

    #[test]
    fn bounds_arithmetic() {
        let r = bounds(6, 6, 6, 6);
        assert_eq!(r.singleton_window, (6, 10));
        assert!(r.singleton_ok && r.theorem_ok);
        assert_eq!(r.msrd_exponent, 14);
        assert!(!r.msrd);
        let bad = bounds(6, 6, 6, 5);
        assert!(!bad.theorem_ok);
        assert!(!bad.singleton_ok);
        // k = 2(2s - d + 1): s = 2, d = 3, k = 4
        assert!(bounds(2, 4, 4, 3).msrd);
        assert_eq!(bounds(7, 5, 5, 9).singleton_window, (9, 12));
    }
}
