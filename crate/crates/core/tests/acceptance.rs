//! End-to-end acceptance run: one line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lg_core::alexander::{alexander, check_specializations};
use lg_core::braid::{lg, BraidWord};
use lg_core::fixtures::{check_fixture, expand_table_notation, shipped_fixtures, FixtureCheck, KnotFixture};
use lg_core::matrix::SparseMatrix;
use lg_core::obstruct::{coprimality_certificate, factor_into_d, obstruction_report, Verdict};
use lg_core::plumb::{euler_char, predicted_top, AnnularExpr};
use lg_core::repdata::{yang_baxter_holds, DIM};
use lg_core::ring::{
    bar_involution, lift_q, p_degree_stats, p_inversion, parse_bilaurent, parse_unilaurent, q_pow, BiLaurent,
    UniLaurent,
};
use lg_core::skein::{a_poly, b_coeff, d_poly, skein_coeffs};
use lg_core::tangle::{double_clasp_identity_holds, evaluate, hopf_linked_annuli, scalar_of, skein_identity_holds};
use lg_core::{load_rep, RepData, Result};

type Outcome = Result<std::result::Result<(), String>>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn representation(rep: &RepData) -> Outcome {
    let n = DIM * DIM;
    Ok((|| {
        ensure(yang_baxter_holds(&rep.braiding), || "Yang-Baxter".into())?;
        ensure(rep.braiding.compose(&rep.braiding_inverse) == SparseMatrix::identity(n), || "inverse".into())?;
        ensure(rep.braiding_inverse.compose(&rep.braiding) == SparseMatrix::identity(n), || "inverse".into())?;
        ensure(rep.quantum_dimension().is_zero(), || "quantum dimension".into())?;
        ensure(rep.ribbon_sides.right && rep.ribbon_sides.left, || "ribbon element".into())
    })())
}

fn skein(rep: &RepData) -> Outcome {
    for n in 1..=3 {
        if !skein_identity_holds(n, rep)? {
            return Ok(Err(format!("twist identity n={n}")));
        }
    }
    let (s1, s2) = (skein_coeffs(1)?, skein_coeffs(2)?);
    let b2 = lift_q(&b_coeff(2));
    let first = &s2.d + &(&b2 * &s1.c);
    let second = &s2.c + &(&b2 * &s1.d);
    Ok((|| {
        ensure(first == parse_bilaurent("-q^2").unwrap(), || format!("D2+B2C1 = {first}"))?;
        let expected = parse_bilaurent("-2*(1+q^2)+2*q*(p+p^-1)").unwrap();
        ensure(second == expected, || format!("C2+B2D1 = {second}"))?;
        ensure(double_clasp_identity_holds(rep).unwrap_or(false), || "double clasp identity".into())
    })())
}

fn hopf_family(rep: &RepData) -> Outcome {
    for n in 1..=4 {
        let s = skein_coeffs(n)?;
        let value = lg(&BraidWord::hopf(n)?, rep)?;
        let expected = &lift_q(&s.b) + &s.c;
        if value != expected {
            return Ok(Err(format!("LG(H_{n}) = {value}, B+C = {expected}")));
        }
        let (_, _, top) = p_degree_stats(&value)?;
        if top != a_poly(n)? {
            return Ok(Err(format!("top(H_{n}) = {top}")));
        }
    }
    Ok(Ok(()))
}

fn annuli_example(rep: &RepData) -> Outcome {
    let value = scalar_of(&evaluate(&hopf_linked_annuli(), rep)?)?;
    let expected = parse_bilaurent("-q^-4+2-q^4+(q^3+q^-3-q-q^-1)*(p+p^-1)")?;
    // Two disjoint annuli: chi = 0.
    let bound = 1 - 0;
    let (deg, _, _) = p_degree_stats(&value)?;
    Ok((|| {
        ensure(value == expected, || format!("value {value}"))?;
        ensure(deg == 1 && deg <= bound, || format!("deg_p+ = {deg}"))
    })())
}

const TABLE_ONE: [&str; 11] = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "7_4", "8_3", "8_15"];

fn tables(checks: &[(KnotFixture, FixtureCheck)]) -> Outcome {
    for name in TABLE_ONE.iter().chain(&["9_35", "9_49"]) {
        if !checks.iter().any(|(f, _)| f.name == *name) {
            return Ok(Err(format!("no fixture for {name}")));
        }
    }
    let expected_9: [(&str, &str); 2] = [("9_35", "19*q^2+20*q^4+9*q^6+q^8"), ("9_49", "6*q^4+3*q^6")];
    for (f, c) in checks {
        if !c.passed() {
            return Ok(Err(format!("{}: {}", f.name, c.mismatches.join("; "))));
        }
        if c.top != f.expected_top()? || Some(c.deg) != f.genus.map(|g| 2 * g) {
            return Ok(Err(format!("{}: ({}, {})", f.name, c.deg, c.top)));
        }
        if let Some((_, t)) = expected_9.iter().find(|(n, _)| *n == f.name) {
            if c.top != parse_unilaurent(t)? {
                return Ok(Err(format!("{}: {}", f.name, c.top)));
            }
        }
    }
    Ok(Ok(()))
}

fn specializations(checks: &[(KnotFixture, FixtureCheck)]) -> Outcome {
    for (f, c) in checks {
        let a = alexander(&f.braid_word()?)?;
        if !check_specializations(&c.lg, &a) {
            return Ok(Err(format!("{} against Alexander {a}", f.name)));
        }
    }
    Ok(Ok(()))
}

fn random_braid(rng: &mut StdRng) -> BraidWord {
    let n = rng.gen_range(2..=5);
    let len = rng.gen_range(0..=12);
    let letters = (0..len)
        .map(|_| {
            let a = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                a
            } else {
                -a
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn symmetries(rep: &RepData, checks: &[(KnotFixture, FixtureCheck)]) -> Outcome {
    let mut cases: Vec<(String, BraidWord, BiLaurent)> = Vec::new();
    for (f, c) in checks {
        cases.push((f.name.clone(), f.braid_word()?, c.lg.clone()));
    }
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let b = random_braid(&mut rng);
        let v = lg(&b, rep)?;
        cases.push((b.to_string(), b, v));
    }
    for (name, b, v) in &cases {
        if p_inversion(v) != *v {
            return Ok(Err(format!("p-symmetry fails for {name}")));
        }
        if lg(&b.mirror(), rep)? != bar_involution(v) {
            return Ok(Err(format!("mirror rule fails for {name}")));
        }
    }
    Ok(Ok(()))
}

fn plumbing(rep: &RepData, checks: &[(KnotFixture, FixtureCheck)]) -> Outcome {
    let mut instances: Vec<(String, AnnularExpr, i32, UniLaurent)> = Vec::new();
    for (name, model) in [("3_1", "plumb: 1,1"), ("7_4", "plumb: 2,2"), ("8_3", "plumb: 2,-2")] {
        let (_, c) = checks.iter().find(|(f, _)| f.name == name).expect("fixture present");
        instances.push((name.into(), AnnularExpr::parse(model)?, c.deg, c.top.clone()));
    }
    for n in [-3, -2, -1, 1, 2, 3, 4] {
        let (deg, _, top) = p_degree_stats(&lg(&BraidWord::hopf(n)?, rep)?)?;
        instances.push((format!("H_{n}"), AnnularExpr::plumbing(&[n])?, deg, top));
    }
    for (name, model, deg, top) in instances {
        let predicted = predicted_top(&model)?;
        if predicted.quotient.as_ref() != Some(&top) {
            return Ok(Err(format!("{name}: top {top} vs model {model}")));
        }
        if deg != 1 - euler_char(&model)? {
            return Ok(Err(format!("{name}: deg_p+ {deg} vs 1-chi")));
        }
    }
    Ok(Ok(()))
}

fn verdicts() -> Outcome {
    let non_products = [
        ("9_25", "6*q^2+3*q^4"),
        ("9_35", "19*q^2+20*q^4+9*q^6+q^8"),
        ("9_38", "14*q^4+10*q^6+q^8"),
        ("9_39", "6*q^2+3*q^4"),
        ("9_41", "6+3*q^2"),
        ("9_46", "2+q^2+q^4"),
        ("9_49", "6*q^4+3*q^6"),
        ("8_15", "6*q^4+3*q^6"),
    ];
    for (name, top) in non_products {
        if obstruction_report(&parse_unilaurent(top)?).verdict.is_annular() {
            return Ok(Err(format!("{name} reported annular")));
        }
    }
    // Product-form entries of the two small tables with their factors.
    let products: [(&str, &[i32]); 17] = [
        ("1", &[]),
        ("q^2", &[]),
        ("q^4", &[]),
        ("q^6", &[]),
        ("q^8", &[]),
        ("q*a_2", &[2]),
        ("q^-1*a_2", &[2]),
        ("q*a_3", &[3]),
        ("q^3*a_2", &[2]),
        ("a_2^2", &[2, 2]),
        ("q^-1*a_3", &[3]),
        ("a_2*a_-2", &[-2, 2]),
        ("q^3*a_-2", &[-2]),
        ("q^5*a_2", &[2]),
        ("q^3*a_3", &[3]),
        ("q*a_4", &[4]),
        ("a_2*a_3", &[2, 3]),
    ];
    let extra = [("q^2*a_2^2", vec![2, 2])];
    for (entry, factors) in products.iter().map(|(e, f)| (*e, f.to_vec())).chain(extra.map(|(e, f)| (e, f))) {
        let f = expand_table_notation(entry)?;
        let report = obstruction_report(&f);
        let got = report.factorization.as_ref().map(|x| x.sorted_factors());
        if report.verdict != Verdict::PossiblyAnnular || got.as_ref() != Some(&factors) {
            return Ok(Err(format!("{entry}: {} {got:?}", report.verdict)));
        }
    }
    Ok(Ok(()))
}

fn coprimality() -> Outcome {
    let cert = coprimality_certificate(20)?;
    if let Some(((n, m), _)) = cert.gcd.iter().find(|(_, ok)| !ok) {
        return Ok(Err(format!("gcd(d_{n}, d_{m}) != 1")));
    }
    let rat = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    for s in &cert.separation {
        let head_ok = if s.n == s.m + 1 {
            s.head_rmax.is_none()
        } else {
            s.head_rmax == Some(rat(2 * s.m as i64 + 3, 2 * s.m as i64 + 1))
        };
        if !(s.holds && head_ok && s.tail_rmin == rat(2 * s.m as i64 - 1, 2 * s.m as i64 - 3)) {
            return Ok(Err(format!("separation m={} n={}", s.m, s.n)));
        }
    }
    let expected_len = (2..20).map(|m| 20 - m).sum::<i32>() as usize;
    if cert.separation.len() != expected_len {
        return Ok(Err("separation list incomplete".into()));
    }
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let k = rng.gen_range(0..=4);
        let mut s: Vec<i32> =
            (0..k).map(|_| rng.gen_range(2..=6) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let u = rng.gen_range(-10..=10);
        let f = s.iter().fold(q_pow(u), |acc, &n| &acc * &d_poly(n).unwrap());
        s.sort_unstable();
        match factor_into_d(&f) {
            Some(fac) if fac.u == u && fac.sorted_factors() == s && fac.reconstruct() == f => {}
            other => return Ok(Err(format!("round trip {s:?} u={u}: {other:?}"))),
        }
    }
    Ok(Ok(()))
}

struct Line {
    id: usize,
    title: &'static str,
    limit: Duration,
}

fn run(line: Line, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let verdict = match outcome {
        Ok(Ok(())) if elapsed <= line.limit => Ok(()),
        Ok(Ok(())) => Err(format!("took {elapsed:.2?}, limit {:?}", line.limit)),
        Ok(Err(msg)) => Err(msg),
        Err(e) => Err(format!("error: {e}")),
    };
    match &verdict {
        Ok(()) => println!("criterion {:>2} PASS  {} ({elapsed:.2?})", line.id, line.title),
        Err(msg) => println!("criterion {:>2} FAIL  {} ({elapsed:.2?}): {msg}", line.id, line.title),
    }
    verdict.is_ok()
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let start = Instant::now();
    let rep = load_rep();
    let rep_time = start.elapsed();
    let mut ok = run(Line { id: 1, title: "representation certification", limit: secs(1) }, || {
        let rep = rep.as_ref().map_err(|e| e.clone())?;
        let r = representation(rep)?;
        Ok(r.and_then(|()| ensure(rep_time <= secs(1), || format!("loading took {rep_time:.2?}"))))
    });
    let Ok(rep) = rep else {
        return ExitCode::FAILURE;
    };
    ok &= run(Line { id: 2, title: "skein identities", limit: secs(10) }, || skein(&rep));
    ok &= run(Line { id: 3, title: "Hopf-link family", limit: secs(30) }, || hopf_family(&rep));
    ok &= run(Line { id: 4, title: "Hopf-linked annuli example", limit: secs(60) }, || annuli_example(&rep));

    let table_start = Instant::now();
    let checks: Result<Vec<(KnotFixture, FixtureCheck)>> =
        shipped_fixtures().into_iter().map(|f| check_fixture(&f, &rep).map(|c| (f, c))).collect();
    let table_time = table_start.elapsed();
    let checks = match checks {
        Ok(c) => c,
        Err(e) => {
            println!("criterion  5 FAIL  table reproduction: error: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!("fixture evaluation: {} knots in {table_time:.2?}", checks.len());
    ok &= run(Line { id: 5, title: "table reproduction", limit: secs(600).saturating_sub(table_time) }, || tables(&checks));
    ok &= run(Line { id: 6, title: "specialization triple", limit: secs(600) }, || specializations(&checks));
    ok &= run(Line { id: 7, title: "p-symmetry and mirror rule", limit: secs(600) }, || symmetries(&rep, &checks));
    ok &= run(Line { id: 8, title: "plumbing multiplicativity", limit: secs(600) }, || plumbing(&rep, &checks));
    ok &= run(Line { id: 9, title: "obstruction verdicts", limit: secs(60) }, verdicts);
    ok &= run(Line { id: 10, title: "coprimality and Kakeya separation", limit: secs(60) }, coprimality);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
