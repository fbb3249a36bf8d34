//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! All comparisons are exact (rational arithmetic, zero tolerance). Runtime
//! budgets are wall-clock limits on the criterion as a whole.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gfrob::algebra::{
    check_axioms, check_cocommutativity, check_frobenius_diagram, coproduct_via_left_dual, coproduct_via_right_dual,
    derive, dual_numbers, group_algebra, GFrobeniusAlgebra,
};
use gfrob::cobordism::{CerfCase, Cobordism, Piece};
use gfrob::exactlin::Scalar;
use gfrob::group::FiniteGroup;
use gfrob::orbifold::orbifold_algebra;
use gfrob::report::CheckReport;
use gfrob::tqft::fuzz::{fuzz, FuzzConfig};
use gfrob::tqft::{
    cerf_check_all, closed_invariant, closed_invariant_formula, closed_invariant_word, dehn_invariance_check,
    hom_count_oracle, labelings, pants_ordering_check, partition_sum, Tqft, DEFAULT_BUDGET,
};

type Outcome = Result<String, String>;

const GROUPS: [&str; 8] = [
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "symmetric:3",
    "dihedral:4",
    "quaternion8",
];

fn group(spec: &str) -> FiniteGroup {
    FiniteGroup::from_spec(spec).unwrap()
}

/// Group algebras of every listed group, then `k[x]/(x²)` with `ε(x) = 1`.
fn algebras() -> Vec<(String, GFrobeniusAlgebra)> {
    let mut out: Vec<_> = GROUPS
        .iter()
        .map(|s| (format!("group_algebra({s})"), group_algebra(&group(s))))
        .collect();
    out.push(("k[x]/(x^2)".into(), dual_numbers(Scalar::zero(), Scalar::one())));
    out
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        return Err(format!("took {took:.2?}, limit {limit:?}"));
    }
    Ok(())
}

fn first_failure(r: &CheckReport) -> String {
    r.failures()
        .next()
        .map(|e| format!("{} failed: {:?}", e.name, e.witness))
        .unwrap_or_default()
}

/// Axioms, Frobenius diagram and twisted cocommutativity.
fn full_check(a: &GFrobeniusAlgebra) -> CheckReport {
    let mut r = check_axioms(a);
    if let Ok(d) = derive(a) {
        r.extend(check_frobenius_diagram(a, &d));
        r.extend(check_cocommutativity(a, &d));
    }
    r
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut instances = 0;
    for (name, a) in algebras() {
        let d = derive(&a).map_err(|e| format!("{name}: {e}"))?;
        let mut r = check_axioms(&a);
        r.extend(check_frobenius_diagram(&a, &d));
        r.extend(check_cocommutativity(&a, &d));
        if !r.passed() {
            return Err(format!("{name}: {}", first_failure(&r)));
        }
        if r.entries.len() != 12 {
            return Err(format!("{name}: expected 12 checks, ran {}", r.entries.len()));
        }
        instances += r.entries.iter().map(|e| e.instances).sum::<usize>();
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("9 algebras, {instances} exact instances, {:.2?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let mut pairs = 0;
    for (name, a) in algebras() {
        let d = derive(&a).map_err(|e| format!("{name}: {e}"))?;
        let grp = a.group();
        for g in grp.elements() {
            for h in grp.elements() {
                let right = coproduct_via_right_dual(&a, &d.dual_bases, g, h);
                let left = coproduct_via_left_dual(&a, &d.dual_bases, g, h);
                if right != left {
                    return Err(format!("{name}: formulas differ at ({}, {})", grp.name(g), grp.name(h)));
                }
                if name.starts_with("group_algebra") {
                    // Δ_{g,h}(δ_gh) = δ_g ⊗ δ_h on one-dimensional components
                    let c = d.coproduct(g, h);
                    if c.dims() != [1, 1, 1] || !c[(0, 0, 0)].is_one() {
                        return Err(format!("{name}: Δ({},{})(δ) ≠ δ⊗δ", grp.name(g), grp.name(h)));
                    }
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (g,h) pairs, both formulas identical"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let g = group("symmetric:3");
    let base = group_algebra(&g);
    let n = g.order();
    let deltas = [Scalar::from_int(1), Scalar::from_int(-1), Scalar::from_int(2), Scalar::new(1, 2), Scalar::from_int(-3)];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let trials = 40;
    let mut kinds = [0usize; 3];
    for t in 0..trials {
        let mut a = base.clone();
        let delta = deltas[rng.gen_range(0..deltas.len())].clone();
        let kind = t % 3;
        kinds[kind] += 1;
        let what = match kind {
            0 => {
                let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let v = &a.product(x, y)[(0, 0, 0)] + &delta;
                a.set_product_entry(x, y, (0, 0, 0), v);
                format!("product({},{})", g.name(x), g.name(y))
            }
            1 => {
                let (k, x) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let v = &a.action(k, x)[(0, 0)] + &delta;
                a.set_action_entry(k, x, (0, 0), v);
                format!("action({},{})", g.name(k), g.name(x))
            }
            _ => {
                let v = &a.unit()[0] + &delta;
                a.set_unit_entry(0, v);
                "unit".to_string()
            }
        };
        let r = full_check(&a);
        let detected = r.failures().any(|e| e.witness.is_some());
        if !detected {
            return Err(format!("mutation {t} ({what} += {delta}) went undetected"));
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!(
        "{trials}/{trials} mutations detected with witness (product {}, action {}, unit {}), {:.2?}",
        kinds[0],
        kinds[1],
        kinds[2],
        start.elapsed()
    ))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for (name, a) in algebras() {
        let t = Tqft::new(&a).map_err(|e| format!("{name}: {e}"))?;
        let r = dehn_invariance_check(&t);
        if !r.passed() {
            return Err(format!("{name}: {}", first_failure(&r)));
        }
        let p = pants_ordering_check(&a);
        if !p.passed() {
            return Err(format!("{name}: {}", first_failure(&p)));
        }
        let grp = a.group();
        for g in grp.elements() {
            let m = t.evaluate(&Cobordism::piece(grp, Piece::Cyl { g, k: g })).unwrap().matrix;
            if !m.is_identity() {
                return Err(format!("{name}: cyl({0};{0}) is not the identity", grp.name(g)));
            }
        }
        count += r.entries.iter().chain(&p.entries).map(|e| e.instances).sum::<usize>();
    }
    Ok(format!("{count} instances over 9 algebras"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let cases = [CerfCase::OneOneOne, CerfCase::TwoZeroTwo, CerfCase::ThreeZeroOne, CerfCase::OneZeroThree];
    let mut summary = Vec::new();
    for spec in ["symmetric:3", "cyclic:4"] {
        let g = group(spec);
        let a = group_algebra(&g);
        let t = Tqft::new(&a).unwrap();
        for case in cases {
            let r = cerf_check_all(&t, case).map_err(|e| e.to_string())?;
            if !r.passed() {
                return Err(format!("{spec} case {case}: {}", first_failure(&r)));
            }
            let labelings = labelings(g.order(), case.label_count()).count();
            if labelings != g.order().pow(4) {
                return Err(format!("{spec} case {case}: {labelings} labelings"));
            }
            summary.push(format!("{spec}/{case}: {labelings}"));
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("all labelings equal [{}], {:.2?}", summary.join(", "), start.elapsed()))
}

/// Conjugacy classes by orbit enumeration straight from the table.
fn brute_force_class_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        classes += 1;
        for k in 0..n {
            seen[g.mul(g.mul(k, x), g.inv(k))] = true;
        }
    }
    classes
}

fn criterion_6() -> Outcome {
    let mut dims = Vec::new();
    for spec in GROUPS {
        let g = group(spec);
        let a = group_algebra(&g);
        let orb = orbifold_algebra(&a).map_err(|e| format!("{spec}: {e}"))?;
        let r = orb.certify();
        for required in [
            "commutativity",
            "associativity",
            "unit",
            "nondegeneracy",
            "psi-upsilon-inverse",
        ] {
            match r.entry(required) {
                Some(e) if e.passed() => {}
                Some(e) => return Err(format!("{spec}: {required} failed: {:?}", e.witness)),
                None => return Err(format!("{spec}: {required} not checked")),
            }
        }
        let expected = brute_force_class_count(&g);
        if orb.dim() != expected {
            return Err(format!("{spec}: dim {} but {expected} classes", orb.dim()));
        }
        dims.push(format!("{spec}={}", orb.dim()));
    }
    if !dims.contains(&"symmetric:3=3".to_string()) || !dims.contains(&"quaternion8=5".to_string()) {
        return Err(format!("unexpected dimensions {dims:?}"));
    }
    Ok(format!("dim A^G = #classes: {}", dims.join(", ")))
}

/// `|Hom(π₁Σ_h, G)| = |G|^{2h-1} Σ_χ χ(1)^{2-2h}` from the irreducible degrees.
fn character_count(order: u128, degrees: &[u128], genus: u32) -> u128 {
    // every degree divides |G|, so each term is an integer
    degrees
        .iter()
        .map(|&d| order.pow(2 * genus - 1) / d.pow(2 * genus - 2))
        .sum()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let cases: [(&str, &[u128]); 3] = [("cyclic:2", &[1, 1]), ("cyclic:3", &[1, 1, 1]), ("symmetric:3", &[1, 1, 2])];
    let mut summary = Vec::new();
    let mut cross = 0;
    for (spec, degrees) in cases {
        let g = group(spec);
        let a = group_algebra(&g);
        let t = Tqft::new(&a).unwrap();
        for genus in [1usize, 2] {
            let oracle = hom_count_oracle(&g, genus, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            let by_characters = character_count(g.order() as u128, degrees, genus as u32);
            if oracle != by_characters {
                return Err(format!("{spec} genus {genus}: oracle {oracle} vs character formula {by_characters}"));
            }
            let sum = partition_sum(&t, genus, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            if sum != Scalar::from_int(oracle as i64) {
                return Err(format!("{spec} genus {genus}: Σ invariant {sum} vs count {oracle}"));
            }
            // handle formula against explicit word evaluation on every flat labeling
            for xs in labelings(g.order(), 2 * genus) {
                let Ok(f) = closed_invariant_formula(&t, &xs) else { continue };
                let w = closed_invariant_word(&t, &xs).map_err(|e| e.to_string())?;
                if f != w {
                    return Err(format!("{spec} {xs:?}: formula {f} vs word {w}"));
                }
                cross += 1;
            }
            summary.push(format!("{spec}/h={genus}: {oracle}"));
        }
    }
    let s3 = group("symmetric:3");
    if hom_count_oracle(&s3, 1, DEFAULT_BUDGET).unwrap() != 18 {
        return Err("S3 genus 1 is not 18".into());
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("{}; {cross} formula/word agreements, {:.2?}", summary.join(", "), start.elapsed()))
}

fn criterion_8() -> Outcome {
    let a = dual_numbers(Scalar::zero(), Scalar::one());
    let t = Tqft::new(&a).unwrap();
    let e = a.group().identity();
    let g1 = closed_invariant(&t, &[e, e]).map_err(|e| e.to_string())?;
    let g2 = closed_invariant(&t, &[e, e, e, e]).map_err(|e| e.to_string())?;
    if g1 != Scalar::from_int(2) || !g2.is_zero() {
        return Err(format!("genus 1 = {g1}, genus 2 = {g2}"));
    }
    Ok(format!("genus 1 = {g1}, genus 2 = {g2}"))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let g = group("symmetric:3");
    let a = group_algebra(&g);
    let t = Tqft::new(&a).unwrap();
    let cfg = FuzzConfig {
        seed: 9,
        trials: 10_000,
        budget: 8,
        ..FuzzConfig::default()
    };
    let out = fuzz(&t, &cfg);
    for name in ["type-safety", "functoriality-compose", "functoriality-tensor", "rewrite-equality"] {
        match out.report.entry(name) {
            Some(e) if e.passed() && e.instances == cfg.trials => {}
            Some(e) => return Err(format!("{name}: {} instances, witness {:?}", e.instances, e.witness)),
            None => return Err(format!("{name} missing")),
        }
    }
    let again = fuzz(&t, &FuzzConfig { trials: 500, ..cfg });
    let first = fuzz(&t, &FuzzConfig { trials: 500, ..cfg });
    if again != first {
        return Err("same seed gave different outcomes".into());
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} words, all properties hold, deterministic, {:.2?}", cfg.trials, start.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("axiom suite", criterion_1),
        ("coproduct consistency", criterion_2),
        ("mutation sensitivity", criterion_3),
        ("well-definedness", criterion_4),
        ("cerf cases", criterion_5),
        ("orbifold", criterion_6),
        ("partition function", criterion_7),
        ("trivial-group regression", criterion_8),
        ("fuzzing", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} [{name}]: PASS — {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL — {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
