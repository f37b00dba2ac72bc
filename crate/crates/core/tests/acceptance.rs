//! Acceptance gate: runs every criterion at its stated tolerance and prints
//! one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use srcodes::effield::{BasePlace, Curve, CurveFunction, SplitType};
use srcodes::srcodes::{
    code_construct1, code_construct2, det_epsilon, epsilon_at, CodeSpec, Codeword, Operator,
};
use srcodes::srmetric::{bounds, enumerate_generator, srweight, weight_enumerator, DEFAULT_LIMIT};
use srcodes::verify::{
    bound_configs, riemann_roch_suite, square_free_cubics, structural_identity,
    theorem_bound_suite, valuation_suite, SuiteReport,
};
use srcodes::{Fe, Field, Poly, RationalFunction};

/// Published distribution of the split-place example, `A_0..A_12`.
const PUBLISHED_A: [u64; 13] = [1, 0, 0, 0, 0, 0, 36, 144, 1542, 7944, 26904, 46959, 34122];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn curve() -> Curve {
    "q=7;f=x^3+3".parse().unwrap()
}

fn places(c: &Curve, xs: &[i64]) -> Vec<BasePlace> {
    xs.iter()
        .map(|&v| BasePlace::Finite(c.field().from_i64(v)))
        .collect()
}

fn poly(c: &Curve, ints: &[i64]) -> RationalFunction {
    RationalFunction::from_poly(Poly::from_ints(c.field(), ints))
}

fn mat(c: &Curve, m: [[i64; 2]; 2]) -> [[Fe; 2]; 2] {
    m.map(|r| r.map(|v| c.field().from_i64(v)))
}

fn show(m: &[[Fe; 2]; 2]) -> String {
    format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

fn codeword(c: &Curve, l: &Operator, xs: &[i64]) -> Codeword {
    Codeword {
        blocks: places(c, xs)
            .into_iter()
            .map(|p| epsilon_at(c, l, p).unwrap())
            .collect(),
    }
}

fn suite_outcome(reports: &[SuiteReport]) -> (bool, String) {
    let ok = reports.iter().all(SuiteReport::passed);
    let detail = reports
        .iter()
        .map(|r| {
            let first = r
                .failures
                .first()
                .map(|f| format!(" first: {f}"))
                .unwrap_or_default();
            format!("{} {} cases, {} failed{first}", r.name, r.cases, r.failed)
        })
        .collect::<Vec<_>>()
        .join("; ");
    (ok, detail)
}

fn ex1_matrices() -> Outcome {
    let c = curve();
    let fq = c.field();
    let l = Operator::new(CurveFunction::constant(fq.from_i64(3)), CurveFunction::y());
    let at0 = epsilon_at(&c, &l, BasePlace::Finite(Fe::ZERO)).unwrap().m;
    let at6 = epsilon_at(&c, &l, BasePlace::Finite(fq.from_i64(6)))
        .unwrap()
        .m;
    let det = det_epsilon(&c, &l);
    let ok = at0 == mat(&c, [[3, 1], [4, 3]])
        && at6 == mat(&c, [[3, 1], [5, 3]])
        && det == poly(&c, &[5, 0, 0, 1])
        && det.num().is_irreducible(fq);
    Outcome {
        ok,
        detail: format!(
            "eps(P0) = {}, eps(P6) = {}, det = {}",
            show(&at0),
            show(&at6),
            det.display(fq)
        ),
    }
}

fn ex1_weights() -> Outcome {
    let c = curve();
    let fq = c.field();
    let all = [0, 1, 2, 3, 4, 5, 6];
    let l1 = Operator::new(CurveFunction::constant(fq.from_i64(3)), CurveFunction::y());
    let l2 = Operator::new(CurveFunction::one(), CurveFunction::monomial(3, 0));
    let w1 = srweight(fq, &codeword(&c, &l1, &all));
    let w2 = srweight(fq, &codeword(&c, &l2, &all));
    let det2 = det_epsilon(&c, &l2);
    let roots = det2.num().roots(fq).unwrap();
    let expect_roots: Vec<Fe> = (1..=6).map(|v| fq.from_i64(v)).collect();
    let ok =
        w1 == 14 && w2 == 8 && det2 == poly(&c, &[1, 0, 0, 0, 0, 0, -1]) && roots == expect_roots;
    Outcome {
        ok,
        detail: format!(
            "weights {w1}, {w2}; det = {}; roots {}",
            det2.display(fq),
            roots
                .iter()
                .map(Fe::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
    }
}

fn ex2_reproduction() -> Outcome {
    let c = curve();
    let code = code_construct2(&c, 6, 3, Fe::ONE, &places(&c, &[0, 2, 3, 4, 5, 6]), false).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let start = Instant::now();
    let dist = pool
        .install(|| weight_enumerator(&code, DEFAULT_LIMIT))
        .unwrap();
    let elapsed = start.elapsed();
    let d = dist.min_positive();
    println!("    i   enumerated   published   diff");
    for (i, (&a, &p)) in dist.counts.iter().zip(&PUBLISHED_A).enumerate() {
        println!("    {i:<3} {a:>10}   {p:>9}   {:>+6}", a as i64 - p as i64);
    }
    println!(
        "    sum {:>10}   {:>9}   {:>+6}",
        dist.total(),
        PUBLISHED_A.iter().sum::<u64>(),
        dist.total() as i64 - PUBLISHED_A.iter().sum::<u64>() as i64
    );
    let ok = code.dimension() == 6
        && code.length() == 24
        && dist.total() == 117_649
        && dist.counts[0] == 1
        && d == Some(6)
        && elapsed < Duration::from_secs(10);
    Outcome {
        ok,
        detail: format!(
            "[{}, {}, {}] expected [24, 6, 6]; sum A_i = {}, A_0 = {}; {:.2?} single-threaded",
            code.length(),
            code.dimension(),
            d.map_or("-".into(), |d| d.to_string()),
            dist.total(),
            dist.counts[0],
            elapsed
        ),
    }
}

fn theorem_bound() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut counts = Vec::new();
    for q in [5, 7, 11] {
        let fq = Field::prime(q).unwrap();
        let configs: Vec<_> = square_free_cubics(&fq)
            .take(2)
            .flat_map(|c| bound_configs(&c))
            .collect();
        counts.push(format!("q={q}: {} configs", configs.len()));
        reports.push(theorem_bound_suite(&configs, 1 << 20, 100_000, q as u64));
        if configs.len() < 10 {
            return Outcome {
                ok: false,
                detail: format!("only {} configurations for q = {q}", configs.len()),
            };
        }
    }
    let elapsed = start.elapsed();
    let (ok, detail) = suite_outcome(&reports);
    Outcome {
        ok: ok && elapsed < Duration::from_secs(120),
        detail: format!("{}; {detail}; {elapsed:.2?}", counts.join(", ")),
    }
}

fn riemann_roch() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut curves = 0;
    for q in [7, 11] {
        let fq = Field::prime(q).unwrap();
        let with_split = square_free_cubics(&fq).filter(|c| {
            c.field()
                .elements()
                .any(|x| matches!(c.classify_base_place(x), SplitType::Split(..)))
        });
        for c in with_split.take(3) {
            reports.push(riemann_roch_suite(&c, 10, 2));
            curves += 1;
        }
    }
    let elapsed = start.elapsed();
    let (ok, detail) = suite_outcome(&reports);
    Outcome {
        ok: ok && elapsed < Duration::from_secs(10),
        detail: format!("{curves} cubics, k = 1..10; {detail}; {elapsed:.2?}"),
    }
}

fn structural() -> Outcome {
    let (ok, detail) = suite_outcome(&[structural_identity(&curve(), 1000, 11, det_epsilon)]);
    Outcome { ok, detail }
}

fn valuations() -> Outcome {
    let (ok, detail) = suite_outcome(&[valuation_suite(&curve(), 1000, 13)]);
    Outcome { ok, detail }
}

fn bounds_check() -> Outcome {
    let c = curve();
    let mut codes: Vec<(String, CodeSpec)> = vec![
        (
            "split example".into(),
            code_construct2(&c, 6, 3, Fe::ONE, &places(&c, &[0, 2, 3, 4, 5, 6]), false).unwrap(),
        ),
        (
            "ramified s=7".into(),
            code_construct1(&c, 6, 3, &places(&c, &[0, 1, 2, 3, 4, 5, 6])).unwrap(),
        ),
        (
            "ramified s=6".into(),
            code_construct1(&c, 6, 3, &places(&c, &[0, 1, 2, 3, 4, 5])).unwrap(),
        ),
    ];
    for q in [5, 7, 11] {
        let fq = Field::prime(q).unwrap();
        for cfg in square_free_cubics(&fq)
            .take(2)
            .flat_map(|c| bound_configs(&c))
        {
            if (q as u64).pow(cfg.k as u32) <= 1 << 16 {
                codes.push((cfg.describe(), cfg.build().unwrap()));
            }
        }
    }
    let mut bad = Vec::new();
    let mut msrd_ok = false;
    for (i, (name, code)) in codes.iter().enumerate() {
        let dist = enumerate_generator(&code.generator(), DEFAULT_LIMIT, None).unwrap();
        let d = dist.min_positive().unwrap();
        let r = bounds(code.s(), code.k(), code.dimension(), d);
        if !r.singleton_ok {
            bad.push(format!("{name}: d = {d}"));
        }
        if i == 0 {
            msrd_ok = !r.msrd && r.msrd_exponent == 2 * (2 * 6 - d as i64 + 1);
        }
    }
    Outcome {
        ok: bad.is_empty() && msrd_ok,
        detail: format!(
            "{} codes, {} outside the window; split example MSRD flag correct: {msrd_ok}",
            codes.len(),
            bad.len()
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("ex1-matrices", ex1_matrices),
        ("ex1-weights", ex1_weights),
        ("ex2-reproduction", ex2_reproduction),
        ("theorem-bound", theorem_bound),
        ("riemann-roch-dimension", riemann_roch),
        ("structural-identity", structural),
        ("valuation-suite", valuations),
        ("bounds", bounds_check),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("{tag} {name}: {} ({:.2?})", out.detail, start.elapsed());
        failed += usize::from(!out.ok);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
