//! Acceptance gate: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use hironaka_core::cycles::builtin_scenario;
use hironaka_core::monomial_ideal::MonomialIdeal;
use hironaka_core::parser::{self, IdealExpr, IdealValue};
use hironaka_core::poly::rat;
use hironaka_core::{Monomial, MonomialOrder, PolyIdeal, Polynomial, VarSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hironaka"))
        .arg("verify")
        .args(args)
        .arg("--json")
        .output()
        .map_err(|e| e.to_string())?;
    let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), format!("exit {:?}", out.status.code()))?;
    ensure(report["status"] == "pass", "status is not pass")?;
    Ok(report)
}

fn elapsed(report: &Value) -> u64 {
    report["elapsed_ms"].as_u64().unwrap_or(u64::MAX)
}

fn step<'a>(report: &'a Value, description: &str) -> Result<&'a Value, String> {
    report["steps"]
        .as_array()
        .and_then(|s| s.iter().find(|s| s["description"] == description))
        .ok_or_else(|| format!("missing step `{description}`"))
}

fn ring(names: &str) -> VarSet {
    VarSet::parse_list(names).unwrap()
}

fn mono_ideal(src: &str, r: &VarSet) -> MonomialIdeal {
    match parser::evaluate(&parser::parse(src, r).unwrap(), r).unwrap() {
        IdealValue::Monomial(m) => m,
        IdealValue::Poly(_) => panic!("{src} is not monomial"),
    }
}

fn criterion_1() -> Outcome {
    let report = cli_json(&["lemma-h1"])?;
    ensure(elapsed(&report) < 1000, format!("{} ms", elapsed(&report)))?;
    for d in ["left side is contained in the right side", "right side is contained in the left side"] {
        ensure(step(&report, d)?["passed"] == true, d)?;
    }
    let rows: Vec<&Value> = report["steps"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["description"].as_str().unwrap().starts_with("expansion row"))
        .collect();
    ensure(rows.len() == 54, format!("{} rows", rows.len()))?;
    ensure(
        rows.iter().all(|s| s["outcome"].as_str().unwrap().starts_with("multiple of m")),
        "row without a witness",
    )?;

    let r = ring("x1,x2,x3");
    let right = mono_ideal("(x2, x3)^5 & (x1, x3)^4 & (x1, x2)^4 & (x1, x2, x3)^7", &r);
    let named: Vec<[u32; 3]> = vec![
        [0, 4, 4],
        [1, 3, 3],
        [2, 3, 2],
        [2, 2, 3],
        [3, 4, 1],
        [3, 1, 4],
        [4, 5, 0],
        [4, 0, 5],
    ];
    let mut got: Vec<Vec<u32>> = right.gens().iter().map(|m| m.exponents().to_vec()).collect();
    let mut want: Vec<Vec<u32>> = named.iter().map(|e| e.to_vec()).collect();
    got.sort();
    want.sort();
    ensure(got == want, format!("minimal generators {right}"))?;

    // expand the product by hand over exponent vectors
    let f1 = [[1, 1, 0], [0, 1, 1], [1, 0, 1]];
    let f2 = [[1, 0, 0], [0, 1, 1]];
    let sq = |a: [u32; 3], b: [u32; 3]| [[2 * a[0], 2 * a[1], 2 * a[2]], [a[0] + b[0], a[1] + b[1], a[2] + b[2]], [2 * b[0], 2 * b[1], 2 * b[2]]];
    let f3 = sq([0, 1, 0], [1, 0, 1]);
    let f4 = sq([0, 0, 1], [1, 1, 0]);
    let mut products = 0;
    for a in f1 {
        for b in f2 {
            for c in f3 {
                for d in f4 {
                    let e: Vec<u32> = (0..3).map(|i| a[i] + b[i] + c[i] + d[i]).collect();
                    ensure(
                        named.iter().any(|m| (0..3).all(|i| m[i] <= e[i])),
                        format!("{e:?} has no witness"),
                    )?;
                    products += 1;
                }
            }
        }
    }
    ensure(products == 54, format!("{products} products"))?;
    Ok(format!("8 minimal generators, 54 witnessed rows, {} ms", elapsed(&report)))
}

fn criterion_2() -> Outcome {
    let report = cli_json(&["lemma-h1bis"])?;
    ensure(elapsed(&report) < 1000, format!("{} ms", elapsed(&report)))?;
    let r = ring("x1,x2,x3");
    let left = mono_ideal("(x2, x3)^5 & (x1, x3)^4", &r);
    // exponent oracle: b + c >= 5 and a + c >= 4
    for a in 0..=8u32 {
        for b in 0..=8u32 {
            for c in 0..=8u32 {
                let want = b + c >= 5 && a + c >= 4;
                let m = Monomial::new(vec![a, b, c]);
                ensure(left.contains_monomial(&m).unwrap() == want, format!("{a},{b},{c}"))?;
            }
        }
    }
    Ok(format!("{} ms", elapsed(&report)))
}

fn criterion_3() -> Outcome {
    let report = cli_json(&["localization"])?;
    let r = ring("x1,x2,x3");
    let h = mono_ideal("(x1.x2, x2.x3, x1.x3).(x1, x2.x3).(x2, x1.x3)^2.(x3, x1.x2)^2", &r);
    for (v, want) in [("x1", "(x2, x3)^5"), ("x2", "(x1, x3)^4"), ("x3", "(x1, x2)^4")] {
        let sat = h.saturate_variable(v).unwrap();
        ensure(sat.equals(&mono_ideal(want, &r)).unwrap(), format!("saturation at {v}"))?;
        // the variable should not appear in any minimal generator
        let i = r.index_of(v).unwrap();
        ensure(sat.gens().iter().all(|m| m.exponents()[i] == 0), format!("{v} survives"))?;
    }
    ensure(report["steps"].as_array().unwrap().len() == 3, "three steps")?;
    Ok("three saturations exact".into())
}

fn criterion_4() -> Outcome {
    let report = cli_json(&["blowup-charts"])?;
    ensure(elapsed(&report) < 5000, format!("{} ms", elapsed(&report)))?;
    for d in [
        "first chart of the blow-up of (x1.x2, x2.x3, x3.x1)",
        "eliminating x3 leaves one hypersurface equation",
        "the hypersurface is singular exactly at the origin",
        "second chart of the blow-up of (u, x2)",
        "the second chart is smooth",
        "the maximal ideal pulls back to (u.z, v.z)",
    ] {
        ensure(step(&report, d)?["passed"] == true, d)?;
    }
    // the hypersurface vanishes on the parametrized first chart
    let r = ring("x1,x2,u,v");
    let f = parser::parse_polynomial("u*x1 - v*x2", &r).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let (x1, x2): (i64, i64) = (rng.gen_range(1..20), rng.gen_range(1..20));
        let x3: i64 = rng.gen_range(-20..20);
        let u = num_rational::BigRational::new(x3.into(), x1.into());
        let v = num_rational::BigRational::new(x3.into(), x2.into());
        let val = f.evaluate(&[rat(x1), rat(x2), u, v]).unwrap();
        ensure(val == rat(0), "hypersurface does not vanish on the chart")?;
    }
    Ok(format!("{} ms", elapsed(&report)))
}

fn criterion_5() -> Outcome {
    let r = ring("x1,x2,x3,u");
    let fns: Vec<Polynomial> = ["(1 + u*x1)*(x1 + x2 + x3 + x1*x2) + x1*x3", "x2", "x3", "u"]
        .iter()
        .map(|s| parser::parse_polynomial(s, &r).unwrap())
        .collect();
    let det = hironaka_core::blowup::jacobian_det_at(&fns, &hironaka_core::PointQ::origin(&r)).unwrap();
    ensure(det == rat(1), format!("det {det}"))?;
    // rows 2 to 4 are unit vectors, so the determinant is the x1 coefficient of the first entry
    let first = &fns[0];
    let linear_x1 = first
        .terms()
        .iter()
        .find(|(m, _)| m.exponents() == [1, 0, 0, 0])
        .map(|(_, c)| c.clone())
        .unwrap_or_else(|| rat(0));
    ensure(linear_x1 == rat(1), "linear coefficient of x1")?;
    Ok("determinant 1".into())
}

fn criterion_6() -> Outcome {
    cli_json(&["surface-example"])?;
    let r = ring("x,y,u,v");
    let p = |s: &str| parser::parse_polynomial(s, &r).unwrap();
    // points on each plane satisfy the surface equations
    let is = ["x*u - y*v", "x*v - y*u", "y*u - y*v"].map(p);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for plane in 0..3 {
        for _ in 0..20 {
            let (a, b): (i64, i64) = (rng.gen_range(-9..9), rng.gen_range(-9..9));
            let pt = match plane {
                0 => [a, b, 0, 0],
                1 => [0, 0, a, b],
                _ => [a, a, b, b],
            };
            let pt: Vec<_> = pt.iter().map(|&c| rat(c)).collect();
            ensure(is.iter().all(|g| g.evaluate(&pt).unwrap() == rat(0)), "plane not on surface")?;
        }
    }
    Ok("three planes, principal product".into())
}

fn criterion_7() -> Outcome {
    let report = cli_json(&["two-curves"])?;
    ensure(step(&report, "x is not in the fiber ideal")?["outcome"] == "false", "x member")?;
    ensure(step(&report, "x is nilpotent on the fiber")?["outcome"] == "true", "x not nilpotent")?;
    ensure(step(&report, "Zariski tangent space at the origin")?["outcome"] == "4", "tangent dim")?;
    // oracle: x^2 lies in the monomial fiber, x does not
    let r = ring("x,y,z");
    let fiber = mono_ideal("(x^2, x.y, x.z, y.z)", &r);
    ensure(!fiber.contains_monomial(&Monomial::new(vec![1, 0, 0])).unwrap(), "x in fiber")?;
    ensure(fiber.contains_monomial(&Monomial::new(vec![2, 0, 0])).unwrap(), "x^2 not in fiber")?;
    Ok("non-reduced fiber, tangent dimension 4".into())
}

fn criterion_8() -> Outcome {
    cli_json(&["three-curves"])?;
    let r = ring("x,y,z");
    let a = mono_ideal("(x.y, x.z, y.z)", &r);
    let b = mono_ideal("(x, y) & (y, z) & (x, z)", &r);
    ensure(a.equals(&b).unwrap(), "monomial oracle disagrees")?;
    Ok("flat with reduced fiber".into())
}

/// Integer combination of relations found by brute force.
fn lattice_oracle(relations: &[Vec<i64>], target: &[i64], range: i64) -> bool {
    let k = relations.len();
    let mut coeffs = vec![-range; k];
    loop {
        let hit = (0..target.len()).all(|j| {
            (0..k).map(|i| coeffs[i] * relations[i][j]).sum::<i64>() == target[j]
        });
        if hit {
            return true;
        }
        let mut i = 0;
        loop {
            if i == k {
                return false;
            }
            coeffs[i] += 1;
            if coeffs[i] <= range {
                break;
            }
            coeffs[i] = -range;
            i += 1;
        }
    }
}

fn criterion_9() -> Outcome {
    let cases = [
        ("v0", "L1' + 2 L23 + L02"),
        ("simple", "A'"),
        ("two-point", "A + C"),
        ("v0-deformed", "L1' + L23 - L13"),
    ];
    let mut worst = 0u128;
    for (name, cycle) in cases {
        let scenario = builtin_scenario(name).unwrap().map_err(|e| e.to_string())?;
        let g = &scenario.group;
        let c = g.parse_cycle(cycle).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let zero = g.is_zero(&c).map_err(|e| e.to_string())?;
        worst = worst.max(start.elapsed().as_micros());
        ensure(zero, format!("{cycle} is not zero in {name}"))?;
        ensure(lattice_oracle(g.relations(), &c.0, 2), format!("oracle rejects {cycle} in {name}"))?;
        let report = cli_json(&["cycles", name])?;
        ensure(elapsed(&report) < 100, format!("{name}: {} ms", elapsed(&report)))?;
    }
    ensure(worst < 100_000, format!("{worst} us"))?;
    Ok(format!("four certificates, slowest {worst} us"))
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max: u32) -> Monomial {
    Monomial::new((0..n).map(|_| rng.gen_range(0..=max)).collect())
}

fn random_poly(rng: &mut ChaCha8Rng, r: &VarSet, deg: u32) -> Polynomial {
    let terms = rng.gen_range(1..=3);
    Polynomial::from_terms(
        r,
        (0..terms).map(|_| {
            let m = loop {
                let m = random_monomial(rng, r.len(), deg);
                if m.degree() <= deg as u64 {
                    break m;
                }
            };
            (m, rat(rng.gen_range(-4..=4)))
        }),
    )
}

fn random_expr(rng: &mut ChaCha8Rng, r: &VarSet, depth: u32) -> IdealExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        let n = rng.gen_range(1..=3);
        return IdealExpr::Literal((0..n).map(|_| random_poly(rng, r, 2)).collect());
    }
    let sub = |rng: &mut ChaCha8Rng| Box::new(random_expr(rng, r, depth - 1));
    match rng.gen_range(0..6) {
        0 => IdealExpr::Product((0..rng.gen_range(2..4)).map(|_| *sub(rng)).collect()),
        1 => IdealExpr::Intersection((0..2).map(|_| *sub(rng)).collect()),
        2 => IdealExpr::Sum((0..2).map(|_| *sub(rng)).collect()),
        3 => IdealExpr::Power(sub(rng), rng.gen_range(1..4)),
        4 => {
            let f = loop {
                let f = random_poly(rng, r, 2);
                if !f.is_zero() {
                    break f;
                }
            };
            IdealExpr::Quotient(sub(rng), f)
        }
        _ => {
            let v = r.name(rng.gen_range(0..r.len())).to_string();
            IdealExpr::SaturateVar(sub(rng), v)
        }
    }
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let r = ring("x1,x2,x3");

    for _ in 0..1000 {
        let gens: Vec<Monomial> = (0..rng.gen_range(1..=4)).map(|_| random_monomial(&mut rng, 3, 3)).collect();
        let mi = MonomialIdeal::minimal_generators(&r, gens).unwrap();
        let pi = PolyIdeal::from_monomial_ideal(&mi);
        let m = random_monomial(&mut rng, 3, 4);
        let fast = mi.contains_monomial(&m).unwrap();
        let slow = pi.contains(&Polynomial::monomial(&r, m.clone())).unwrap();
        ensure(fast == slow, format!("membership of {} in {mi}", m.render(&r)))?;
    }

    for k in 0..200 {
        let n = 1 + k % 3;
        let sub = VarSet::new(r.names()[..n].to_vec()).unwrap();
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3)).map(|_| random_poly(&mut rng, &sub, 3)).collect();
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        shuffled.reverse();
        for ord in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let a = PolyIdeal::new(&sub, gens.clone()).unwrap().groebner_basis(ord);
            let b = PolyIdeal::new(&sub, shuffled.clone()).unwrap().groebner_basis(ord);
            ensure(a == b, format!("basis depends on input order for {gens:?}"))?;
        }
    }

    for _ in 0..1000 {
        let e = random_expr(&mut rng, &r, 3);
        let printed = e.to_string();
        let back = parser::parse(&printed, &r).map_err(|err| format!("{printed}: {err}"))?;
        ensure(back == e, format!("round trip of {printed}"))?;
    }

    let alphabet = b"x1x2x3 ()[],+-*./^&:0123456789sat";
    for i in 0..100_000 {
        let len = rng.gen_range(0..48);
        let bytes: Vec<u8> = if i % 2 == 0 {
            (0..len).map(|_| rng.gen()).collect()
        } else {
            (0..len).map(|_| *alphabet.choose(&mut rng).unwrap()).collect()
        };
        let s = String::from_utf8_lossy(&bytes).into_owned();
        let res = catch_unwind(AssertUnwindSafe(|| parser::parse(&s, &r)))
            .map_err(|_| format!("parser panicked on {bytes:?}"))?;
        if let Err(e) = res {
            ensure(e.offset <= s.len(), format!("offset past end for {s:?}"))?;
        }
    }
    Ok("1000 memberships, 200 bases, 1000 round trips, 100000 fuzz inputs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("lemma-h1 equality, generators and expansion table", criterion_1),
        ("lemma-h1bis equality", criterion_2),
        ("localization saturations", criterion_3),
        ("blow-up charts", criterion_4),
        ("coordinate change Jacobian", criterion_5),
        ("surface example", criterion_6),
        ("two-curves family", criterion_7),
        ("three-curves family", criterion_8),
        ("cycle certificates", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
