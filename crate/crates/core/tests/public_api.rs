use hironaka_core::blowup::{chart_ideal, classify_smoothness, SmoothnessVerdict};
use hironaka_core::cycles::{parse_scenario, EffectiveZeroClaim};
use hironaka_core::parser::{self, Engine, IdealValue};
use hironaka_core::poly::rat;
use hironaka_core::verify::{self, CheckId, Options};
use hironaka_core::{MonomialOrder, PolyIdeal, Polynomial, VarSet};

fn ring(s: &str) -> VarSet {
    VarSet::parse_list(s).unwrap()
}

fn p(s: &str, r: &VarSet) -> Polynomial {
    parser::parse_polynomial(s, r).unwrap()
}

#[test]
fn expression_engines_agree_through_the_public_api() {
    let r = ring("x1,x2,x3");
    let ast = parser::parse("(x1.x2, x3)^4.(x2, x3)", &r).unwrap();
    let fast = parser::evaluate_with(&ast, &r, Engine::Monomial).unwrap();
    let slow = parser::evaluate_with(&ast, &r, Engine::Groebner).unwrap();
    assert!(matches!(fast, IdealValue::Monomial(_)));
    assert!(matches!(slow, IdealValue::Poly(_)));
    assert!(fast.equals(&slow).unwrap());
}

#[test]
fn twisted_cubic_elimination() {
    let r = ring("t,x,y,z");
    let i = PolyIdeal::new(&r, vec![p("x - t", &r), p("y - t^2", &r), p("z - t^3", &r)]).unwrap();
    let e = i.eliminate(&["t"]).unwrap();
    let want = PolyIdeal::new(&r, vec![p("y - x^2", &r), p("z - x*y", &r)]).unwrap();
    assert!(e.equals(&want).unwrap());
    assert!(e.contains_with(&p("x*z - y^2", &r), MonomialOrder::Lex).unwrap());
    assert!(e.gens().iter().all(|g| !g.involves(0)));
}

#[test]
fn cone_blowup_chart_is_smooth() {
    // blowing up the origin of the cone x*y = z^2, chart where x generates
    let r = ring("x,y,z");
    let cone = PolyIdeal::new(&r, vec![p("x*y - z^2", &r)]).unwrap();
    let gens = [p("x", &r), p("y", &r), p("z", &r)];
    let chart = chart_ideal(&cone, &gens, 0, &["b", "c"]).unwrap();
    let a = chart.ambient();
    assert!(chart.ideal().contains(&p("b - c^2", a)).unwrap());
    assert_eq!(classify_smoothness(chart.ideal(), 3, None).unwrap(), SmoothnessVerdict::Smooth);
    let lifted = chart.lift_point(&[rat(2), rat(8), rat(4)]).unwrap().unwrap();
    assert_eq!(lifted.0[3..], [rat(4), rat(2)]);
}

#[test]
fn scenario_text_round_trip() {
    let src = "# a triangle of classes\nclasses: P Q R\nP = Q\nQ = R\nzero: P - R\nnonzero: P\neffective-zero: none\n";
    let s = parse_scenario("triangle", src).unwrap();
    assert_eq!(s.effective_zero, Some(EffectiveZeroClaim::None));
    let c = s.group.parse_cycle("P + Q - 2 R").unwrap();
    assert!(s.group.is_zero(&c).unwrap());
    assert_eq!(s.group.search_effective_zero(3).unwrap(), None);
}

#[test]
fn reports_serialize_with_stable_fields() {
    let r = verify::run(&CheckId::Localization, &Options::default());
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["check_id", "elapsed_ms", "engine_stats", "status", "steps"]);
    assert_eq!(v["status"], "pass");
}
