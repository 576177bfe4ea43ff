use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::Steps;
use super::Options;
use crate::blowup::{self, BlowupChart, SmoothnessVerdict};
use crate::cycles::{CycleScenario, EffectiveZeroClaim};
use crate::error::{Error, Result};
use crate::groebner::{PointQ, PolyIdeal};
use crate::monomial_ideal::{expansion_report, MonomialIdeal};
use crate::parser::{self, IdealValue};
use crate::poly::{Monomial, Polynomial, VarSet};

const LEMMA_LEFT: &str = "(x1.x2, x2.x3, x1.x3).(x1, x2.x3).(x2, x1.x3)^2.(x3, x1.x2)^2";
const LEMMA_RIGHT: &str = "(x2, x3)^5 & (x1, x3)^4 & (x1, x2)^4 & (x1, x2, x3)^7";

/// The eight named minimal generators of the right-hand side.
const NAMED_GENERATORS: [(&str, [u32; 3]); 8] = [
    ("m0", [0, 4, 4]),
    ("m1", [1, 3, 3]),
    ("m2", [2, 3, 2]),
    ("m2'", [2, 2, 3]),
    ("m3", [3, 4, 1]),
    ("m3'", [3, 1, 4]),
    ("m4", [4, 5, 0]),
    ("m4'", [4, 0, 5]),
];

fn r3() -> VarSet {
    VarSet::parse_list("x1,x2,x3").expect("valid ring")
}

fn ring(names: &str) -> VarSet {
    VarSet::parse_list(names).expect("valid ring")
}

fn eval(src: &str, ring: &VarSet) -> Result<IdealValue> {
    parser::evaluate(&parser::parse(src, ring)?, ring)
}

fn eval_mono(src: &str, ring: &VarSet) -> Result<MonomialIdeal> {
    match eval(src, ring)? {
        IdealValue::Monomial(m) => Ok(m),
        IdealValue::Poly(_) => Err(Error::InvalidArgument(format!("`{src}` is not monomial"))),
    }
}

fn poly(src: &str, ring: &VarSet) -> Result<Polynomial> {
    Ok(parser::parse_polynomial(src, ring)?)
}

fn ideal(ring: &VarSet, gens: &[&str]) -> Result<PolyIdeal> {
    let gens = gens.iter().map(|g| poly(g, ring)).collect::<Result<Vec<_>>>()?;
    PolyIdeal::new(ring, gens)
}

fn same(a: &PolyIdeal, b: &PolyIdeal, opts: &Options) -> Result<bool> {
    a.equals_with(b, opts.order)
}

fn dotted(m: &Monomial, ring: &VarSet) -> String {
    m.render_dotted(ring)
}

/// Reduced Groebner basis, as a generator list.
fn show(i: &PolyIdeal, opts: &Options) -> String {
    let gb = i.groebner_basis(opts.order);
    let gens: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
    format!("({})", gens.join(", "))
}

fn show_verdict(v: &SmoothnessVerdict) -> String {
    match v {
        SmoothnessVerdict::Smooth => "smooth".into(),
        SmoothnessVerdict::Inconclusive => "inconclusive".into(),
        SmoothnessVerdict::SingularLocusCertified(pts) => {
            let gens: Vec<String> = pts.iter().map(|g| g.to_string()).collect();
            format!("singular locus has the radical of ({})", gens.join(", "))
        }
    }
}

fn verdict(ok: bool, yes: &str, no: &str) -> (bool, String) {
    (ok, if ok { yes } else { no }.to_string())
}

pub(super) fn lemma_h1(opts: &Options, steps: &mut Steps) {
    let r = r3();
    let (left, right) = match (eval_mono(LEMMA_LEFT, &r), eval_mono(LEMMA_RIGHT, &r)) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            let e = a.err().or(b.err()).expect("one side failed");
            steps.record("evaluate both sides", LEMMA_LEFT, "monomial ideals", Err(e));
            return;
        }
    };
    steps.claim(
        "left side is contained in the right side",
        format!("{LEMMA_LEFT} ⊆ {LEMMA_RIGHT}"),
        true,
        left.is_subset_of(&right),
    );
    steps.claim(
        "right side is contained in the left side",
        format!("{LEMMA_RIGHT} ⊆ {LEMMA_LEFT}"),
        true,
        right.is_subset_of(&left),
    );
    steps.claim("equality of ideals", format!("{LEMMA_LEFT} = {LEMMA_RIGHT}"), true, left.equals(&right));

    let named: Vec<(&str, Monomial)> = NAMED_GENERATORS
        .iter()
        .map(|(n, e)| (*n, Monomial::new(e.to_vec())))
        .collect();
    steps.record(
        "number of minimal generators of the right side",
        LEMMA_RIGHT,
        "8",
        Ok((right.gens().len() == 8, right.gens().len().to_string())),
    );
    for (name, m) in &named {
        let present = right.gens().contains(m);
        steps.record(
            format!("minimal generator {name}"),
            dotted(m, &r),
            "minimal generator",
            Ok(verdict(present, "minimal generator", "missing")),
        );
    }

    let factors = match lemma_factors(&r) {
        Ok(f) => f,
        Err(e) => {
            steps.record("expansion factors", LEMMA_LEFT, "four factors", Err(e));
            return;
        }
    };
    let rows = expansion_report(&factors);
    let rows = match rows {
        Ok(rows) => rows,
        Err(e) => {
            steps.record("expansion of the left side", LEMMA_LEFT, "54 products", Err(e));
            return;
        }
    };
    steps.record(
        "products in the expansion of the left side",
        LEMMA_LEFT,
        "54",
        Ok((rows.len() == 54, rows.len().to_string())),
    );
    for (k, row) in rows.iter().enumerate() {
        let witnesses: Vec<&str> = named
            .iter()
            .filter(|(_, m)| m.divides(&row.monomial))
            .map(|(n, _)| *n)
            .collect();
        let outcome = if witnesses.is_empty() {
            (false, "no named generator divides it".to_string())
        } else {
            (true, format!("multiple of {}", witnesses.join(", ")))
        };
        steps.record(
            format!("expansion row {}", k + 1),
            format!("{} = {}", row.witness, dotted(&row.monomial, &r)),
            "multiple of a named generator",
            Ok(outcome),
        );
    }

    // exponent condition: a+b+c >= 7, a+b >= 4, a+c >= 4, b+c >= 5
    let mut mismatches = 0;
    for a in 0..=9u32 {
        for b in 0..=9u32 {
            for c in 0..=9u32 {
                let cond = a + b + c >= 7 && a + b >= 4 && a + c >= 4 && b + c >= 5;
                let m = Monomial::new(vec![a, b, c]);
                if right.contains_monomial(&m).ok() != Some(cond) {
                    mismatches += 1;
                }
            }
        }
    }
    steps.record(
        "membership agrees with the exponent inequalities for all exponents up to 9",
        "a+b+c >= 7, a+b >= 4, a+c >= 4, b+c >= 5",
        "0 mismatches",
        Ok((mismatches == 0, format!("{mismatches} mismatches"))),
    );

    let gb_side = PolyIdeal::from_monomial_ideal(&right);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut disagreements = 0;
    let samples = 64;
    for _ in 0..samples {
        let m = Monomial::new((0..3).map(|_| rng.gen_range(0..=8)).collect());
        let fast = right.contains_monomial(&m);
        let slow = gb_side.contains_with(&Polynomial::monomial(&r, m), opts.order);
        if fast.ok() != slow.ok() {
            disagreements += 1;
        }
    }
    steps.record(
        format!("monomial and Groebner membership agree on {samples} random monomials (seed {})", opts.seed),
        LEMMA_RIGHT,
        "0 disagreements",
        Ok((disagreements == 0, format!("{disagreements} disagreements"))),
    );
}

fn lemma_factors(r: &VarSet) -> Result<Vec<(MonomialIdeal, u32)>> {
    Ok(vec![
        (eval_mono("(x1.x2, x2.x3, x1.x3)", r)?, 1),
        (eval_mono("(x1, x2.x3)", r)?, 1),
        (eval_mono("(x2, x1.x3)", r)?, 2),
        (eval_mono("(x3, x1.x2)", r)?, 2),
    ])
}

pub(super) fn lemma_h1bis(_opts: &Options, steps: &mut Steps) {
    let r = r3();
    let left_src = "(x2, x3)^5 & (x1, x3)^4";
    let right_src = "(x1.x2, x3)^4.(x2, x3)";
    let (left, right) = match (eval_mono(left_src, &r), eval_mono(right_src, &r)) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            let e = a.err().or(b.err()).expect("one side failed");
            steps.record("evaluate both sides", left_src, "monomial ideals", Err(e));
            return;
        }
    };
    steps.claim(
        "equality of ideals",
        format!("{left_src} = {right_src}"),
        true,
        left.equals(&right),
    );
    // x1^a x2^(a+1) x3^b and x1^a x2^a x3^(b+1), a + b = 4
    let ten: Vec<Monomial> = (0..=4u32)
        .flat_map(|a| {
            let b = 4 - a;
            [Monomial::new(vec![a, a + 1, b]), Monomial::new(vec![a, a, b + 1])]
        })
        .collect();
    let listed = ten.iter().map(|m| dotted(m, &r)).collect::<Vec<_>>().join(", ");
    let all_in = ten.iter().try_fold(true, |acc, m| Ok::<_, Error>(acc && left.contains_monomial(m)?));
    steps.claim("the ten product monomials lie in the intersection", listed.clone(), true, all_in);
    let generated = MonomialIdeal::minimal_generators(&r, ten.iter().cloned())
        .and_then(|t| t.equals(&left));
    steps.claim("the ten product monomials generate the intersection", listed, true, generated);
    let minimal = left.to_string();
    steps.record(
        "minimal generators of the intersection",
        left_src,
        "6 (the other four products are multiples)",
        Ok((left.gens().len() == 6, format!("{} : {minimal}", left.gens().len()))),
    );
}

pub(super) fn localization(_opts: &Options, steps: &mut Steps) {
    let r = r3();
    let h = match eval_mono(LEMMA_LEFT, &r) {
        Ok(h) => h,
        Err(e) => {
            steps.record("evaluate the ideal", LEMMA_LEFT, "monomial ideal", Err(e));
            return;
        }
    };
    for (var, expected) in [("x1", "(x2, x3)^5"), ("x2", "(x1, x3)^4"), ("x3", "(x1, x2)^4")] {
        let result = h.saturate_variable(var).and_then(|s| {
            let e = eval_mono(expected, &r)?;
            Ok((s.equals(&e)?, s.to_string()))
        });
        steps.record(
            format!("saturation where {var} is invertible"),
            format!("sat({LEMMA_LEFT}, {var})"),
            expected,
            result,
        );
    }
}

fn first_chart() -> Result<BlowupChart> {
    let r = r3();
    let gens = [poly("x1*x2", &r)?, poly("x2*x3", &r)?, poly("x3*x1", &r)?];
    blowup::chart_ideal(&PolyIdeal::zero(&r), &gens, 0, &["u", "v"])
}

fn second_chart(first: &BlowupChart) -> Result<BlowupChart> {
    let a = first.ambient();
    blowup::chart_ideal(first.ideal(), &[poly("u", a)?, poly("x2", a)?], 0, &["z"])
}

pub(super) fn blowup_charts(opts: &Options, steps: &mut Steps) {
    let c1 = match first_chart() {
        Ok(c) => c,
        Err(e) => {
            steps.record("first chart", "", "chart ideal", Err(e));
            return;
        }
    };
    let a1 = c1.ambient().clone();
    let graph = "sat((x2*x3 - u*x1*x2, x3*x1 - v*x1*x2), x1*x2)";
    steps.record(
        "first chart of the blow-up of (x1.x2, x2.x3, x3.x1)",
        graph,
        "(x3 - u*x1, x3 - v*x2)",
        ideal(&a1, &["x3 - u*x1", "x3 - v*x2"])
            .and_then(|e| Ok((same(c1.ideal(), &e, opts)?, show(c1.ideal(), opts)))),
    );
    steps.record(
        "eliminating x3 leaves one hypersurface equation",
        "eliminate(first chart, x3)",
        "(u*x1 - v*x2)",
        c1.ideal().eliminate(&["x3"]).and_then(|h| {
            let e = ideal(&a1, &["u*x1 - v*x2"])?;
            Ok((same(&h, &e, opts)?, show(&h, opts)))
        }),
    );

    let h_ring = ring("x1,x2,u,v");
    let hyper = ideal(&h_ring, &["x2*v - x1*u"]);
    steps.record(
        "the hypersurface is singular exactly at the origin",
        "singular locus of (x2*v - x1*u), codimension 1",
        "same radical as (x1, x2, u, v)",
        hyper.and_then(|h| {
            let origin = ["x1", "x2", "u", "v"]
                .iter()
                .map(|v| poly(v, &h_ring))
                .collect::<Result<Vec<_>>>()?;
            let v = blowup::classify_smoothness(&h, 1, Some(&origin))?;
            let ok = matches!(v, SmoothnessVerdict::SingularLocusCertified(_));
            Ok((ok, show_verdict(&v)))
        }),
    );
    steps.record(
        "all partial derivatives vanish at the origin",
        "tangent dimension of (x2*v - x1*u) at 0",
        "4",
        ideal(&h_ring, &["x2*v - x1*u"]).and_then(|h| {
            let d = h.zariski_tangent_dim(&PointQ::origin(&h_ring))?;
            Ok((d == 4, d.to_string()))
        }),
    );

    let r = r3();
    for (gens, cand, expected) in [
        (["x1", "x2*x3"], "x1", true),
        (["x2", "x1*x3"], "x2", true),
        (["x3", "x1*x2"], "x3", false),
    ] {
        steps.claim(
            format!("({}, {}) is generated by {cand} on the first chart", gens[0], gens[1]),
            format!("({}, {}) + chart = ({cand}) + chart", gens[0], gens[1]),
            expected,
            ideal(&r, &gens).and_then(|j| c1.is_principal(&j, &poly(cand, &r)?)),
        );
    }
    steps.claim(
        "(x3, x1.x2) equals x1.(u, x2) on the first chart",
        "(x3, x1*x2) + chart = (x1*u, x1*x2) + chart",
        true,
        ideal(&r, &["x3", "x1*x2"]).and_then(|j| c1.ideals_equal(&j, &ideal(&a1, &["x1*u", "x1*x2"])?)),
    );

    let c2 = match second_chart(&c1) {
        Ok(c) => c,
        Err(e) => {
            steps.record("second chart", "", "chart ideal", Err(e));
            return;
        }
    };
    let a2 = c2.ambient().clone();
    steps.record(
        "second chart of the blow-up of (u, x2)",
        "sat(first chart + (x2 - z*u), u)",
        "(x1 - v*z, x2 - u*z, x3 - u*v*z)",
        ideal(&a2, &["x1 - v*z", "x2 - u*z", "x3 - u*v*z"])
            .and_then(|e| Ok((same(c2.ideal(), &e, opts)?, show(c2.ideal(), opts)))),
    );
    steps.record(
        "the second chart is smooth",
        "codimension 3 Jacobian minors of the second chart",
        "unit ideal",
        blowup::classify_smoothness(c2.ideal(), 3, None).map(|v| (v == SmoothnessVerdict::Smooth, show_verdict(&v))),
    );
    let maximal = ideal(&r, &["x1", "x2", "x3"]);
    steps.claim(
        "the maximal ideal pulls back to (u.z, v.z)",
        "(x1, x2, x3) + chart = (u*z, v*z) + chart",
        true,
        maximal
            .clone()
            .and_then(|m| c2.ideals_equal(&m, &ideal(&a2, &["u*z", "v*z"])?)),
    );
    steps.claim(
        "the pulled-back maximal ideal factors as (z).(u, v)",
        "(x1, x2, x3) + chart = (z)*(u, v) + chart",
        true,
        maximal.and_then(|m| {
            let prod = ideal(&a2, &["z"])?.product(&ideal(&a2, &["u", "v"])?)?;
            c2.ideals_equal(&m, &prod)
        }),
    );

    let cc = ring("x1,x2,x3,u");
    let system = [
        "(1 + u*x1)*(x1 + x2 + x3 + x1*x2) + x1*x3",
        "x2",
        "x3",
        "u",
    ];
    steps.record(
        "the coordinate change is invertible near the origin",
        format!("det d({}) at 0", system.join(", ")),
        "1",
        system
            .iter()
            .map(|s| poly(s, &cc))
            .collect::<Result<Vec<_>>>()
            .and_then(|fns| blowup::jacobian_det_at(&fns, &PointQ::origin(&cc)))
            .map(|d| (d.is_one(), d.to_string())),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let samples = 16;
    steps.record(
        format!("{samples} random points lift onto both charts (seed {})", opts.seed),
        "w_j = g_j(p) / g_i(p)",
        "all chart equations vanish",
        lift_samples(&c1, &c2, &mut rng, samples).map(|bad| {
            (bad == 0, format!("{bad} failures"))
        }),
    );
}

fn lift_samples(c1: &BlowupChart, c2: &BlowupChart, rng: &mut ChaCha8Rng, samples: usize) -> Result<usize> {
    let on = |c: &BlowupChart, p: &PointQ| -> Result<bool> {
        for g in c.ideal().gens() {
            if !g.evaluate(&p.0)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut bad = 0;
    let mut done = 0;
    while done < samples {
        let p: Vec<BigRational> = (0..3)
            .map(|_| BigRational::new(rng.gen_range(-12..=12).into(), rng.gen_range(1..=5).into()))
            .collect();
        let Some(q1) = c1.lift_point(&p)? else { continue };
        let Some(q2) = c2.lift_point(&q1.0)? else { continue };
        if !on(c1, &q1)? || !on(c2, &q2)? {
            bad += 1;
        }
        done += 1;
    }
    Ok(bad)
}

pub(super) fn surface_example(opts: &Options, steps: &mut Steps) {
    let r = ring("x,y,u,v");
    let is_src = "(x*u - y*v, x*v - y*u, y*u - y*v)";
    let is = match ideal(&r, &["x*u - y*v", "x*v - y*u", "y*u - y*v"]) {
        Ok(i) => i,
        Err(e) => {
            steps.record("surface ideal", "", "ideal", Err(e));
            return;
        }
    };
    let union = "(u, v) & (x, y) & (x - y, u - v)";
    steps.claim(
        "the surface is the union of three planes",
        format!("{is_src} = {union}"),
        true,
        eval(union, &r).and_then(|v| same(&is, &v.to_poly_ideal(), opts)),
    );
    let xu = poly("x*u", &r);
    for prod in ["x*u", "x*v", "y*u", "y*v"] {
        steps.claim(
            format!("{prod} is congruent to x*u on the surface"),
            format!("{prod} - x*u ∈ {is_src}"),
            true,
            xu.clone()
                .and_then(|xu| is.contains_with(&(&poly(prod, &r)? - &xu), opts.order)),
        );
    }
    steps.claim(
        "(x, y).(u, v) is principal on the surface, generated by x*u",
        "(x, y)*(u, v) + surface = (x*u) + surface",
        true,
        (|| {
            let prod = eval("(x, y)*(u, v)", &r)?.to_poly_ideal().sum(&is)?;
            let principal = ideal(&r, &["x*u"])?.sum(&is)?;
            same(&prod, &principal, opts)
        })(),
    );
}

pub(super) fn two_curves(opts: &Options, steps: &mut Steps) {
    let r = ring("s,x,y,z");
    let ix = match eval("(x, y) & (x - s, z)", &r) {
        Ok(v) => v.to_poly_ideal(),
        Err(e) => {
            steps.record("ideal of the two lines", "(x, y) & (x - s, z)", "ideal", Err(e));
            return;
        }
    };
    steps.claim(
        "ideal of the union of the two lines",
        "(x, y) & (x - s, z) = (x*(x - s), x*z, y*(x - s), y*z)",
        true,
        ideal(&r, &["x*(x - s)", "x*z", "y*(x - s)", "y*z"]).and_then(|e| same(&ix, &e, opts)),
    );
    let r0 = ring("x,y,z");
    let fiber = ix.specialize(&[("s", BigRational::zero())]);
    steps.record(
        "fiber at s = 0",
        "specialize((x, y) & (x - s, z), s = 0)",
        "(x^2, x*y, x*z, y*z)",
        fiber.clone().and_then(|f| {
            let e = ideal(&r0, &["x^2", "x*y", "x*z", "y*z"])?;
            Ok((same(&f, &e, opts)?, show(&f, opts)))
        }),
    );
    let x = poly("x", &r0);
    steps.claim(
        "x is not in the fiber ideal",
        "x ∈ (x^2, x*y, x*z, y*z)",
        false,
        fiber.clone().and_then(|f| f.contains_with(&x.clone()?, opts.order)),
    );
    steps.claim(
        "x is nilpotent on the fiber",
        "x ∈ rad(x^2, x*y, x*z, y*z)",
        true,
        fiber.and_then(|f| f.radical_member(&x?)),
    );
    steps.record(
        "Zariski tangent space at the origin",
        "dim T_0 of (x, y) & (x - s, z)",
        "4",
        ix.zariski_tangent_dim(&PointQ::origin(&r)).map(|d| (d == 4, d.to_string())),
    );
}

pub(super) fn three_curves(opts: &Options, steps: &mut Steps) {
    let r = ring("s,x,y,z");
    let iy = match ideal(&r, &["y*(x - s)", "x*z", "y*z"]) {
        Ok(i) => i,
        Err(e) => {
            steps.record("ideal of the three lines", "", "ideal", Err(e));
            return;
        }
    };
    steps.claim(
        "no s-torsion",
        "(y*(x - s), x*z, y*z) : s = (y*(x - s), x*z, y*z)",
        true,
        poly("s", &r).and_then(|s| same(&iy.quotient_by_poly(&s)?, &iy, opts)),
    );
    let r0 = ring("x,y,z");
    let fiber = iy.specialize(&[("s", BigRational::zero())]);
    steps.claim(
        "fiber at s = 0",
        "specialize(I, s = 0) = (x*y, x*z, y*z)",
        true,
        fiber
            .clone()
            .and_then(|f| same(&f, &ideal(&r0, &["x*y", "x*z", "y*z"])?, opts)),
    );
    steps.claim(
        "the fiber is the reduced union of the three coordinate axes",
        "(x*y, x*z, y*z) = (x, y) & (y, z) & (x, z)",
        true,
        fiber.and_then(|f| same(&f, &eval("(x, y) & (y, z) & (x, z)", &r0)?.to_poly_ideal(), opts)),
    );
}

pub(super) fn cycles(scenario: &CycleScenario, opts: &Options, steps: &mut Steps) {
    let g = &scenario.group;
    let mut failing_relations = 0;
    for rel in g.relations() {
        if !g.is_zero(&crate::cycles::Cycle(rel.clone())).unwrap_or(false) {
            failing_relations += 1;
        }
    }
    steps.record(
        "every relation vanishes",
        format!("{} relations over {} classes", g.relations().len(), g.names().len()),
        "0 failures",
        Ok((failing_relations == 0, format!("{failing_relations} failures"))),
    );
    for (text, c) in &scenario.zero {
        let effective = if c.is_effective() { ", effective" } else { "" };
        steps.record(
            "cycle is homologous to zero",
            text.clone(),
            "0",
            g.reduce(c).map(|red| {
                let ok = red.is_zero();
                (ok, format!("reduces to {}{effective}", g.display(&red)))
            }),
        );
    }
    for (text, c) in &scenario.nonzero {
        steps.record(
            "cycle is not homologous to zero",
            text.clone(),
            "nonzero",
            g.reduce(c).map(|red| (!red.is_zero(), format!("reduces to {}", g.display(&red)))),
        );
    }
    if let Some(claim) = scenario.effective_zero {
        let expected = match claim {
            EffectiveZeroClaim::Expected => "an effective cycle homologous to zero",
            EffectiveZeroClaim::None => "none",
        };
        steps.record(
            format!("search for effective cycles homologous to zero, coefficients up to {}", opts.bound),
            format!("[0, {}]^{}", opts.bound, g.names().len()),
            expected,
            g.search_effective_zero(opts.bound).and_then(|found| {
                Ok(match (claim, found) {
                    (EffectiveZeroClaim::Expected, Some(c)) => {
                        let ok = c.is_effective() && g.is_zero(&c)?;
                        (ok, format!("found {}", g.display(&c)))
                    }
                    (EffectiveZeroClaim::Expected, None) => (false, "none found".into()),
                    (EffectiveZeroClaim::None, None) => (true, "none found".into()),
                    (EffectiveZeroClaim::None, Some(c)) => (false, format!("found {}", g.display(&c))),
                })
            }),
        );
    }
}
