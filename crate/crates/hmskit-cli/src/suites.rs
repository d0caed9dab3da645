//! Check builders shared by the verification subcommands and `verify-all`.
//!
//! Every function here turns one family of claims into [`CheckRecord`]s:
//! the expected side is stated or recomputed independently, the computed
//! side calls into the core crate, and nothing is softened to make a run
//! look green. Sections that also feed the text output return their human
//! lines alongside the records so the underlying computation runs once.

use std::path::Path;
use std::time::Instant;

use anyhow::Context;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hmskit_core::algebra::{
    enumerate_group, hom_piece, hom_window, triv_ext_compose, with_trivext_sign_flipped,
    ExtElement, GroupKind, TrivExtMorphism,
};
use hmskit_core::coamoeba::{
    coamoeba_raster, lift_zonotopes, lifted_pairwise_interior_disjoint, pants_zonotope,
    self_intersection_check, thimble_argument, thimble_point_disjoint, torus_self_intersection,
    CoamoebaError, RasterReport,
};
use hmskit_core::exact::{rat, rat_int, CycScalar, Rational};
use hmskit_core::flow::{
    integrate_flow, monodromy_phase_probe, phase_along, trajectory_csv, verify_phase_term,
    FlowError, FlowState, LocalModel,
};
use hmskit_core::hochschild::{
    bar_oracle, cyclic_invariant_hh2, hh_dim, schouten_diff, truncated_hh,
    with_schouten_sign_flipped, BidegreeCell, Grading, PolyVector, TorusInvariance,
};
use hmskit_core::lg::{
    critical_points_potential, critical_values_w, level_set_probe, newton_critical_f,
    LevelSetClass,
};

use crate::report::{exact_check, judged_check, probe_check, CheckRecord, Source};

const TAU: f64 = std::f64::consts::TAU;

fn binomial(m: u64, k: u64) -> u64 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

/// Representative of r modulo 2 in [0, 2), exactly.
fn norm_mod_two(r: &Rational) -> Rational {
    let two = rat_int(2);
    let q = (r / &two).floor();
    r - two * q
}

fn fmt_c(z: Complex64) -> String {
    format!("{:+.6}{:+.6}i", z.re, z.im)
}

// ---------------------------------------------------------------- hochschild

/// Text table of the closed-formula dimensions on the low-degree window.
pub fn closed_formula_table_lines(n: u8) -> Vec<String> {
    let mut lines = vec![format!(
        "closed-formula dimensions, n = {n}, cyclic group, plain grading"
    )];
    lines.push(format!("  {:>4} {:>5} {:>5} {:>5} {:>5}", "t\\s", 0, 1, 2, 3));
    for t in (-3..=0i64).rev() {
        let dims: Vec<usize> = (0..=3i64)
            .map(|s| {
                hh_dim(&BidegreeCell::new(
                    n,
                    s,
                    rat_int(t),
                    Grading::Plain,
                    GroupKind::Cyclic,
                    TorusInvariance::None,
                ))
            })
            .collect();
        lines.push(format!(
            "  {:>4} {:>5} {:>5} {:>5} {:>5}",
            t, dims[0], dims[1], dims[2], dims[3]
        ));
    }
    lines
}

/// Torus-invariant tail of the degree-two diagonal: cells (d, 2−d) for
/// d = 3..n+2 carry dimension 1 exactly at d = n+2 and 0 below.
pub fn tail_table_checks(n: u8) -> Vec<CheckRecord> {
    let top = i64::from(n) + 2;
    let expected: Vec<Value> = (3..=top)
        .map(|d| json!([d, if d == top { 1 } else { 0 }]))
        .collect();
    vec![exact_check(
        &format!("t_invariant_hh2_tail_n{n}"),
        "torus-invariant degree-two cells (d, 2-d): one class at d = n+2, none below",
        Source::Direct,
        Value::Array(expected),
        || {
            let rows: Vec<Value> = (3..=top)
                .map(|d| {
                    let cell = BidegreeCell::new(
                        n,
                        d,
                        rat_int(2 - d),
                        Grading::Fractional,
                        GroupKind::GammaTilde,
                        TorusInvariance::T,
                    );
                    json!([d, hh_dim(&cell)])
                })
                .collect();
            Value::Array(rows)
        },
    )]
}

/// Runs the truncated-window computation once; returns its text summary and
/// the dimension check.
pub fn truncated_section(n: u8) -> (Vec<String>, Vec<CheckRecord>) {
    let start = Instant::now();
    let report = truncated_hh(n);
    let elapsed = start.elapsed().as_secs_f64();
    let top_label = format!("cell ({},{})", i64::from(n) + 2, -i64::from(n));
    let lines = vec![
        format!("truncated window, n = {n}"),
        format!("  {:<12}dim {}", "cell (0,0)", report.dim_cell_00),
        format!("  {:<12}dim {}", "cell (1,0)", report.dim_cell_10),
        format!("  {:<12}dim {}", "cell (2,0)", report.dim_cell_20),
        format!("  {:<12}dim {}", top_label, report.dim_cell_top),
        format!(
            "  rank d(1,0) = {}, rank d(2,0) = {}",
            report.rank_delta_10, report.rank_delta_20
        ),
        format!("  hh1 = {}", report.hh1_dim),
        format!(
            "  hh2 = {} ({} kernel + {} cokernel classes)",
            report.hh2_dim,
            report.hh2_kernel_basis.len(),
            report.hh2_coker_reps.len()
        ),
    ];
    let mut check = exact_check(
        &format!("truncated_hh_n{n}"),
        "truncated-window cohomology dimensions (hh1, hh2) = (n+1, 2n+3)",
        Source::Direct,
        json!({"hh1": u64::from(n) + 1, "hh2": 2 * u64::from(n) + 3}),
        || json!({"hh1": report.hh1_dim, "hh2": report.hh2_dim}),
    );
    check.runtime = elapsed;
    (lines, vec![check])
}

fn power_sum_generator(n: u8) -> PolyVector {
    let m = n as usize + 2;
    let mut gen = PolyVector::zero(n);
    for k in 0..m {
        let mut exps = vec![0u16; m];
        exps[k] = n as u16 + 2;
        gen = gen.add(&PolyVector::monomial(n, &exps, &[]));
    }
    gen
}

/// Cyclic-invariant degree-two classes: claimed one-dimensional, spanned by
/// the power sum of the variables.
pub fn cyclic_section(n: u8) -> (Vec<String>, Vec<CheckRecord>) {
    let start = Instant::now();
    let report = cyclic_invariant_hh2(n);
    let elapsed = start.elapsed().as_secs_f64();
    let generator = power_sum_generator(n).to_string();
    let mut lines = vec![format!(
        "cyclic-invariant degree-two classes, n = {n}: dim {}",
        report.dim
    )];
    for (i, basis) in report.basis.iter().enumerate() {
        lines.push(format!("  class {}: {basis}", i + 1));
    }
    lines.push(format!(
        "  generator {generator}: {}",
        if report.generator_present { "present" } else { "absent" }
    ));
    lines.push(format!(
        "  rotation permutes the difference kernel transitively: {}",
        report.kernel_permuted_transitively
    ));
    let mut dim_check = exact_check(
        &format!("cyclic_invariant_hh2_n{n}"),
        "the rotation-invariant part of the degree-two classes is one-dimensional",
        Source::Direct,
        json!({"dim": 1}),
        || json!({"dim": report.dim}),
    );
    dim_check.runtime = elapsed;
    let gen_check = exact_check(
        &format!("cyclic_generator_n{n}"),
        "the power-sum generator spans into the invariant subspace",
        Source::Direct,
        json!({"generator": generator.clone(), "present": true}),
        || json!({"generator": generator, "present": report.generator_present}),
    );
    (lines, vec![dim_check, gen_check])
}

fn product_monomial(n: u8) -> PolyVector {
    let m = n as usize + 2;
    PolyVector::monomial(n, &vec![1u16; m], &[])
}

/// Mismatch count of the diagonal contraction identity at a given n; zero
/// under the correct sign convention, n+2 under the flipped one.
fn contraction_mismatches(n: u8) -> usize {
    let m = n + 2;
    let product = product_monomial(n);
    (1..=m)
        .filter(|&k| {
            let mut exps = vec![0u16; m as usize];
            exps[k as usize - 1] = 1;
            let w = PolyVector::monomial(n, &exps, &[k]);
            schouten_diff(&w).expect("untwisted input") != product
        })
        .count()
}

/// Differential test vectors: the diagonal contraction and the displayed
/// two-vector image, both exact.
pub fn schouten_checks(n: u8) -> Vec<CheckRecord> {
    let m = n as usize + 2;
    let mut checks = vec![exact_check(
        &format!("schouten_contraction_n{n}"),
        "each diagonal derivation contracts to the product of all variables",
        Source::Direct,
        json!({"matching": m, "of": m}),
        || json!({"matching": m - contraction_mismatches(n), "of": m}),
    )];
    if n <= 2 {
        let pairs = m * (m - 1) / 2;
        checks.push(exact_check(
            &format!("schouten_two_vector_n{n}"),
            "two-vector differential matches the displayed image on y_j y_k (x) v_j ^ v_k",
            Source::Direct,
            json!({"matching": pairs, "of": pairs}),
            || {
                let mut matching = 0usize;
                for j in 1..=m as u8 {
                    for k in j + 1..=m as u8 {
                        let mut exps = vec![0u16; m];
                        exps[j as usize - 1] = 1;
                        exps[k as usize - 1] = 1;
                        let w = PolyVector::monomial(n, &exps, &[j, k]);
                        let mut pos = vec![1u16; m];
                        pos[k as usize - 1] += 1;
                        let mut neg = vec![1u16; m];
                        neg[j as usize - 1] += 1;
                        let image = PolyVector::monomial(n, &pos, &[k])
                            .sub(&PolyVector::monomial(n, &neg, &[j]));
                        if schouten_diff(&w).expect("untwisted input") == image {
                            matching += 1;
                        }
                    }
                }
                json!({"matching": matching, "of": pairs})
            },
        ));
    }
    checks
}

/// Bar-resolution cross-check of the closed formula over the n = 1 window:
/// bar degrees 0..=2, internal degree −3..=0.
pub fn bar_oracle_checks() -> Vec<CheckRecord> {
    let expected: Vec<Value> = (0..=2i64)
        .flat_map(|s| {
            (-3..=0i64).map(move |t| {
                let dim = hh_dim(&BidegreeCell::new(
                    1,
                    s,
                    rat_int(t),
                    Grading::Plain,
                    GroupKind::Cyclic,
                    TorusInvariance::None,
                ));
                json!([s, t, dim])
            })
        })
        .collect();
    vec![exact_check(
        "bar_oracle_window_n1",
        "independent bar-resolution dimensions equal the closed formula cell by cell",
        Source::IndependentOracle,
        Value::Array(expected),
        || {
            let rows: Vec<Value> = (0..=2usize)
                .flat_map(|s| {
                    (-3..=0i64).map(move |t| {
                        let dim = bar_oracle(1, s, t).expect("window is in range");
                        json!([s, t, dim])
                    })
                })
                .collect();
            Value::Array(rows)
        },
    )]
}

// ------------------------------------------------------------------- algebra

/// Group orders: |Γ| = (n+2)ⁿ and |Γ̃| = (n+2)^{n+1}, by enumeration.
pub fn group_order_checks(n: u8) -> Vec<CheckRecord> {
    let m = u64::from(n) + 2;
    vec![exact_check(
        &format!("group_orders_n{n}"),
        "orders of the diagonal symmetry group and its extension, by enumeration",
        Source::ClosedForm,
        json!({"gamma": m.pow(u32::from(n)), "gamma_tilde": m.pow(u32::from(n) + 1)}),
        || {
            json!({
                "gamma": enumerate_group(GroupKind::Gamma, u32::from(n)).len(),
                "gamma_tilde": enumerate_group(GroupKind::GammaTilde, u32::from(n)).len(),
            })
        },
    )]
}

/// The (n+2)² graded Hom dimensions against the three-case table: windows
/// from `hom_window`, one binomial dimension per allowed wedge degree.
pub fn hom_table_checks(n: u8) -> Vec<CheckRecord> {
    let m = n as usize + 2;
    let mut expected = Vec::new();
    for j in 1..=m as u8 {
        for k in 1..=m as u8 {
            for w in hom_window(n, j, k) {
                let deg =
                    (i64::from(n) * w as i64 + 2 * (i64::from(k) - i64::from(j))) / m as i64;
                expected.push(json!([j, k, deg, binomial(m as u64, w as u64)]));
            }
        }
    }
    vec![exact_check(
        &format!("hom_table_n{n}"),
        "graded Hom dimensions match the three-case table over all object pairs",
        Source::ClosedForm,
        Value::Array(expected),
        || {
            let mut rows = Vec::new();
            for j in 1..=m as u8 {
                for k in 1..=m as u8 {
                    let space = hom_piece(n, j, k);
                    let mut by_degree: Vec<(i64, usize)> = Vec::new();
                    for label in space.labels() {
                        // all degrees in these pieces are integers after the
                        // regrading; a non-integer would poison the row
                        let deg = if label.degree.0.is_integer() {
                            label.degree.0.to_integer().to_i64().unwrap_or(i64::MIN)
                        } else {
                            i64::MIN
                        };
                        match by_degree.iter_mut().find(|(d, _)| *d == deg) {
                            Some((_, count)) => *count += 1,
                            None => by_degree.push((deg, 1)),
                        }
                    }
                    by_degree.sort_unstable();
                    for (deg, count) in by_degree {
                        rows.push(json!([j, k, deg, count]));
                    }
                }
            }
            Value::Array(rows)
        },
    )]
}

fn random_morphism(rng: &mut ChaCha8Rng, n: u8, source: u8, target: u8) -> TrivExtMorphism {
    let m = n as usize + 2;
    let window = hom_window(n, source, target);
    let mut elt = ExtElement::zero(n);
    for _ in 0..rng.gen_range(1..=2) {
        let d = window[rng.gen_range(0..window.len())];
        let mut pool: Vec<u8> = (1..=m as u8).collect();
        for i in (1..pool.len()).rev() {
            let j = rng.gen_range(0..=i);
            pool.swap(i, j);
        }
        let mut subset: Vec<u8> = pool[..d].to_vec();
        subset.sort_unstable();
        let c = match rng.gen_range(0..3) {
            0 => CycScalar::zeta(n as u32 + 2),
            1 => CycScalar::from_int(n as u32 + 2, -2),
            _ => CycScalar::one(n as u32 + 2),
        };
        elt = elt.add(&ExtElement::monomial(n, &subset, c));
    }
    TrivExtMorphism::new(n, source, target, elt)
}

/// Number of random composable triples where the two associations differ.
fn associativity_failures(trials: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(701);
    let mut failures = 0usize;
    for trial in 0..trials {
        let n = 1 + (trial % 3) as u8;
        let m = n + 2;
        let a = rng.gen_range(1..=m);
        let b = rng.gen_range(1..=m);
        let c = rng.gen_range(1..=m);
        let d = rng.gen_range(1..=m);
        let f = random_morphism(&mut rng, n, a, b);
        let g = random_morphism(&mut rng, n, b, c);
        let h = random_morphism(&mut rng, n, c, d);
        let hg = triv_ext_compose(&h, &g).expect("objects match");
        let gf = triv_ext_compose(&g, &f).expect("objects match");
        let left = triv_ext_compose(&hg, &f).expect("objects match");
        let right = triv_ext_compose(&h, &gf).expect("objects match");
        if left != right {
            failures += 1;
        }
    }
    failures
}

/// Associativity of the signed composition on random triples, exact.
pub fn associativity_check(trials: usize) -> CheckRecord {
    exact_check(
        "trivext_associativity",
        "composition in the trivial-extension category is associative on random triples",
        Source::Direct,
        json!({"failures": 0, "triples": trials}),
        || json!({"failures": associativity_failures(trials), "triples": trials}),
    )
}

/// Mutation sensitivity: each deliberate sign flip must break at least one
/// exact check, proving the tests constrain the conventions.
pub fn mutation_checks() -> Vec<CheckRecord> {
    vec![
        judged_check(
            "mutation_trivext_sign",
            "negating the dual cross-term sign in the composition breaks associativity",
            Source::Direct,
            json!({"broken_triples": "at least 1 of 60"}),
            || {
                let failures = with_trivext_sign_flipped(|| associativity_failures(60));
                (json!({"broken_triples": failures}), failures >= 1)
            },
        ),
        judged_check(
            "mutation_schouten_sign",
            "negating the contraction sign breaks the diagonal contraction identity",
            Source::Direct,
            json!({"broken_contractions": "at least 1 of 3"}),
            || {
                let mismatches = with_schouten_sign_flipped(|| contraction_mismatches(1));
                (json!({"broken_contractions": mismatches}), mismatches >= 1)
            },
        ),
    ]
}

// ------------------------------------------------------------------------ lg

/// Greedy bijection between two equally sized complex sets; the points are
/// far apart relative to the budget, so greedy matching is safe.
fn match_set_residual(computed: &[Complex64], expected: &[Complex64]) -> (f64, bool) {
    if computed.len() != expected.len() {
        return (f64::INFINITY, false);
    }
    let mut used = vec![false; expected.len()];
    let mut worst = 0.0f64;
    for z in computed {
        let mut best: Option<(f64, usize)> = None;
        for (i, w) in expected.iter().enumerate() {
            if used[i] {
                continue;
            }
            let dist = (z - w).norm();
            if best.map_or(true, |(b, _)| dist < b) {
                best = Some((dist, i));
            }
        }
        let (dist, i) = best.expect("sets have equal size");
        used[i] = true;
        worst = worst.max(dist);
    }
    (worst, true)
}

/// Critical points and values of both superpotentials plus the verified
/// Newton search, with the level-set trichotomy at n = 1, 2.
pub fn critical_section(n: u8) -> (Vec<String>, Vec<CheckRecord>) {
    let m = n as usize + 2;
    let mut lines = Vec::new();
    let mut checks = Vec::new();

    let points = critical_points_potential(n);
    let computed_vals: Vec<Complex64> = points.iter().map(|(_, v)| *v).collect();
    lines.push(format!("potential critical values, n = {n}:"));
    for v in &computed_vals {
        lines.push(format!("  {}", fmt_c(*v)));
    }
    let reference: Vec<Complex64> = (1..=m)
        .map(|i| Complex64::from_polar(m as f64, -TAU * i as f64 / m as f64))
        .collect();
    let (worst, bijective) = match_set_residual(&computed_vals, &reference);
    checks.push(judged_check(
        &format!("potential_critical_values_n{n}"),
        "the n+2 critical values are (n+2) times the inverse roots of unity",
        Source::ClosedForm,
        json!({"count": m, "residual_budget": 1e-10}),
        move || {
            (
                json!({"count": computed_vals.len(), "max_residual": worst}),
                bijective && worst < 1e-10,
            )
        },
    ));

    let roots = critical_values_w(n);
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let target = sign * (f64::from(n) + 1.0).powi(i32::from(n) + 1);
    lines.push(format!("fibration critical values, n = {n}:"));
    for u in &roots {
        lines.push(format!("  {}", fmt_c(*u)));
    }
    if n == 1 {
        lines.push("  (the three cube roots of 4)".to_string());
    }
    let rel_worst = roots
        .iter()
        .map(|u| (u.powi(m as i32) - target).norm() / target.abs())
        .fold(0.0f64, f64::max);
    let count = roots.len();
    checks.push(judged_check(
        &format!("fibration_critical_values_n{n}"),
        "fibration critical values solve u^(n+2) = (-1)^(n+1) (n+1)^(n+1)",
        Source::ClosedForm,
        json!({"count": m, "relative_residual_budget": 1e-10}),
        move || {
            (
                json!({"count": count, "max_relative_residual": rel_worst}),
                count == m && rel_worst < 1e-10,
            )
        },
    ));

    let newton = newton_critical_f(n).expect("newton search is defined for n in 1..=6");
    let value_expected = rat_int(i64::from(n) + 1).pow(i32::from(n) + 1);
    lines.push(format!(
        "newton: {}/20 starts converge to the all-ones point, f = {}",
        newton.runs, newton.value
    ));
    checks.push(exact_check(
        &format!("newton_critical_point_n{n}"),
        "all Newton starts land on the all-ones point; value and Hessian minors exact",
        Source::Direct,
        json!({
            "value": value_expected.to_string(),
            "runs": 20,
            "minors_positive": true,
        }),
        || {
            json!({
                "value": newton.value.to_string(),
                "runs": newton.runs,
                "minors_positive": newton.hessian_minors.iter().all(|mr| mr.is_positive()),
            })
        },
    ));

    checks.extend(level_set_checks(n));
    (lines, checks)
}

fn class_label(class: LevelSetClass) -> &'static str {
    match class {
        LevelSetClass::Empty => "empty",
        LevelSetClass::Point => "point",
        LevelSetClass::SphereLike => "sphere-like",
    }
}

/// Level-set trichotomy: exact root counting at n = 1, a radial continuation
/// probe at n = 2, nothing elsewhere.
pub fn level_set_checks(n: u8) -> Vec<CheckRecord> {
    match n {
        1 => [(3.0, "empty"), (4.0, "point"), (9.0, "sphere-like")]
            .into_iter()
            .map(|(t, expected)| {
                exact_check(
                    &format!("level_set_n1_t{t}"),
                    "level sets below / at / above the critical value 4 (S^0 means two points)",
                    Source::Direct,
                    json!({"class": expected}),
                    || json!({"class": class_label(level_set_probe(1, t).expect("regular level"))}),
                )
            })
            .collect(),
        2 => [(20.0, "empty"), (33.0, "sphere-like")]
            .into_iter()
            .map(|(t, expected)| {
                probe_check(
                    &format!("level_set_probe_n2_t{t}"),
                    "radial continuation classifies the level set (probe, not proof)",
                    Source::Direct,
                    json!({"class": expected}),
                    || {
                        let class =
                            class_label(level_set_probe(2, t).expect("regular level"));
                        (json!({"class": class}), class == expected)
                    },
                )
            })
            .collect(),
        _ => Vec::new(),
    }
}

// ------------------------------------------------------------------ coamoeba

/// Embedding dichotomy: the lifted zonotope embeds in the covering torus,
/// and at n = 1 the unlifted one touches itself at exactly six vertices.
pub fn embedding_checks(n: u8) -> Vec<CheckRecord> {
    let mut checks = vec![exact_check(
        &format!("lift_embeds_n{n}"),
        "the lifted zonotope meets none of its lattice translates (exact LP)",
        Source::Direct,
        json!({"embeds": true, "contacts": 0}),
        || {
            let report = self_intersection_check(n);
            json!({"embeds": report.embeds, "contacts": report.contacts.len()})
        },
    )];
    if n == 1 {
        checks.push(exact_check(
            "unlifted_vertex_contacts_n1",
            "the unlifted hexagon touches its translates at six vertices, never interiorly",
            Source::Direct,
            json!({"embeds": false, "vertex_contacts": 6, "interior_contacts": 0}),
            || {
                let report = torus_self_intersection(&pants_zonotope(1));
                let interior = report.contacts.iter().filter(|c| c.interior).count();
                json!({
                    "embeds": report.embeds,
                    "vertex_contacts": report.contacts.len() - interior,
                    "interior_contacts": interior,
                })
            },
        ));
    }
    checks
}

/// Packing of the n+2 lifts: right count, pairwise interior-disjoint.
pub fn lift_packing_checks(n: u8) -> Vec<CheckRecord> {
    vec![
        exact_check(
            &format!("lift_count_n{n}"),
            "one lifted zonotope per critical value",
            Source::ClosedForm,
            json!({"count": u64::from(n) + 2}),
            || json!({"count": lift_zonotopes(n).len()}),
        ),
        judged_check(
            &format!("lift_packing_n{n}"),
            "lift interiors never overlap; corner contacts are boundary-only (exact LP)",
            Source::Direct,
            json!({"interior_disjoint": true}),
            || {
                let report = lifted_pairwise_interior_disjoint(n);
                (
                    json!({
                        "interior_disjoint": report.interior_disjoint,
                        "interior_overlaps": report.interior_overlaps.len(),
                        "boundary_contacts": report.boundary_contacts,
                    }),
                    report.interior_disjoint,
                )
            },
        ),
    ]
}

/// Thimble base points against the closed angle rule, plus a text summary
/// like "3 of 5 roots disjoint".
pub fn thimble_section(n: u8) -> (String, Vec<CheckRecord>) {
    let m = i64::from(n) + 2;
    let excluded_plus = norm_mod_two(&rat(m - 1, m));
    let excluded_minus = norm_mod_two(&rat(-(m - 1), m));
    let mut expected_rows = Vec::new();
    let mut computed_rows = Vec::new();
    let mut disjoint = 0usize;
    for index in 1..=m as usize {
        let arg = norm_mod_two(&thimble_argument(n, index));
        let predicted = arg != excluded_plus && arg != excluded_minus;
        let got = thimble_point_disjoint(n, index);
        expected_rows.push(json!([index, predicted]));
        computed_rows.push(json!([index, got]));
        if got {
            disjoint += 1;
        }
    }
    let summary = format!("{disjoint} of {m} roots disjoint");
    let checks = vec![exact_check(
        &format!("thimble_angle_rule_n{n}"),
        "LP disjointness of each thimble base point matches the excluded-angle rule",
        Source::ClosedForm,
        Value::Array(expected_rows),
        move || Value::Array(computed_rows),
    )];
    (summary, checks)
}

/// Rasterizes the fiber coamoeba and checks the figure-level counts. The
/// records carry only resolution-independent quantities; paths stay out of
/// the report so runs are comparable across output locations.
pub fn raster_section(
    n: u8,
    resolution: u32,
    out: &Path,
) -> Result<(RasterReport, Vec<CheckRecord>), CoamoebaError> {
    let start = Instant::now();
    let report = coamoeba_raster(n, resolution, out)?;
    let elapsed = start.elapsed().as_secs_f64();
    let mut checks = Vec::new();
    if n == 1 {
        let dark = report.dark_components;
        let light = report.light_components;
        let fraction = report.area_fraction;
        checks.push(exact_check(
            "coamoeba_components_n1",
            "six triangular dark components and three hexagonal light ones (flood fill)",
            Source::Direct,
            json!({"dark": 6, "light": 3}),
            || json!({"dark": dark, "light": light}),
        ));
        checks.push(judged_check(
            "coamoeba_area_n1",
            "coamoeba area fraction equals 1/2 within 2 percent",
            Source::Direct,
            json!({"fraction": 0.5, "tolerance": 0.02}),
            || (json!({"fraction": fraction}), (fraction - 0.5).abs() <= 0.02),
        ));
    } else {
        let dark = report.dark_pixels;
        let light = report.light_pixels;
        checks.push(probe_check(
            &format!("coamoeba_raster_n{n}"),
            "the slice raster is nonempty on both sides (smoke probe)",
            Source::Direct,
            json!({"dark_pixels": "positive", "light_pixels": "positive"}),
            || (json!({"dark_pixels": dark, "light_pixels": light}), dark > 0 && light > 0),
        ));
    }
    checks[0].runtime = elapsed;
    Ok((report, checks))
}

// ---------------------------------------------------------------------- flow

/// One integration of the circle flow with its conservation and phase
/// checks, plus the trajectory CSV for the file output.
pub struct FlowRun {
    pub checks: Vec<CheckRecord>,
    pub csv: String,
}

pub fn flow_run(k: u8, n: u8, t_final: f64, dt: f64) -> Result<FlowRun, FlowError> {
    let model = LocalModel::new(n, k)?;
    let y0: Vec<Complex64> = (0..model.dim()).map(|_| Complex64::new(1.0, 0.0)).collect();
    let state = FlowState::torus_adapted(&model, &y0)?;
    let trajectory = integrate_flow(&model, &state, t_final, dt)?;
    let phase = phase_along(&model, &trajectory)?;
    let csv = trajectory_csv(&trajectory, &phase);

    let initial: Vec<f64> = y0.iter().map(|y| y.norm()).collect();
    let h0 = model.hamiltonian(&y0);
    let mut moduli_drift = 0.0f64;
    let mut energy_drift = 0.0f64;
    for sample in &trajectory.samples {
        for (y, m0) in sample.y.iter().zip(&initial) {
            moduli_drift = moduli_drift.max((y.norm() - m0).abs());
        }
        energy_drift = energy_drift.max((model.hamiltonian(&sample.y) - h0).abs());
    }

    let mut checks = vec![
        judged_check(
            "flow_moduli_conservation",
            "the flow rotates each coordinate without changing its modulus",
            Source::Direct,
            json!({"tolerance": 1e-6}),
            || (json!({"max_drift": moduli_drift}), moduli_drift < 1e-6),
        ),
        judged_check(
            "flow_energy_conservation",
            "the Hamiltonian is constant along its own flow",
            Source::Direct,
            json!({"tolerance": 1e-8}),
            || (json!({"max_drift": energy_drift}), energy_drift < 1e-8),
        ),
        judged_check(
            "flow_frame_lagrangian",
            "the transported frame stays Lagrangian at every sample",
            Source::Direct,
            json!({"tolerance": 1e-6}),
            || {
                let defect = trajectory.max_symplectic_defect;
                (json!({"max_symplectic_defect": defect}), defect < 1e-6)
            },
        ),
        probe_check(
            "flow_richardson",
            "step-halving error estimate for the endpoint (diagnostic)",
            Source::IndependentOracle,
            json!({"budget": 1e-8}),
            || {
                let err = trajectory.richardson_error;
                (json!({"estimate": err}), err < 1e-8)
            },
        ),
    ];

    let phase_report = verify_phase_term(&model, &y0, t_final)?;
    checks.push(judged_check(
        "flow_phase_term",
        "measured phase lift matches the predicted linear term in the loop count",
        Source::ClosedForm,
        json!({"tolerance": 1e-4}),
        || {
            (
                json!({
                    "measured": phase_report.measured,
                    "predicted": phase_report.predicted,
                    "deviation": phase_report.deviation,
                    "coefficient": phase_report.coefficient,
                }),
                phase_report.within_tolerance,
            )
        },
    ));

    Ok(FlowRun { checks, csv })
}

fn sweep_point(dim: usize, k: usize, ratio: f64) -> Vec<Complex64> {
    (0..dim)
        .map(|j| {
            let modulus = if j == 0 {
                1.0
            } else if j < k {
                ratio
            } else {
                0.9
            };
            Complex64::from_polar(modulus, 0.4 * j as f64)
        })
        .collect()
}

/// Phase-term sweep over model sizes and modulus ratios; every deviation
/// must stay inside the stated tolerance.
pub fn phase_sweep_checks() -> Result<Vec<CheckRecord>, FlowError> {
    let cases: [(u8, u8, f64); 6] = [
        (2, 1, 0.5),
        (2, 2, 1.0),
        (2, 2, 2.0),
        (2, 3, 0.7),
        (3, 2, 1.0),
        (3, 3, 1.5),
    ];
    let mut checks = Vec::new();
    for (i, (k, n, ratio)) in cases.into_iter().enumerate() {
        let model = LocalModel::new(n, k)?;
        let y0 = sweep_point(model.dim(), k as usize, ratio);
        let report = verify_phase_term(&model, &y0, 4.0)?;
        checks.push(judged_check(
            &format!("phase_term_case{}", i + 1),
            "phase lift along the flow matches the closed-form coefficient",
            Source::ClosedForm,
            json!({"tolerance": 1e-4}),
            || {
                (
                    json!({
                        "k": k,
                        "n": n,
                        "ratio": ratio,
                        "measured": report.measured,
                        "predicted": report.predicted,
                        "deviation": report.deviation,
                    }),
                    report.within_tolerance,
                )
            },
        ));
    }
    Ok(checks)
}

/// Desk-scale monodromy probes: measured fiberwise phase against the
/// displayed bound, reported as probes (evidence, not proof).
pub fn monodromy_checks() -> Result<Vec<CheckRecord>, FlowError> {
    let cases: [(u8, u8, Complex64, u32); 3] = [
        (2, 1, Complex64::new(0.1, 0.0), 1),
        (2, 2, Complex64::new(0.2, 0.1), 2),
        (3, 3, Complex64::new(0.05, 0.05), 1),
    ];
    let mut checks = Vec::new();
    for (i, (k, n, zeta, d)) in cases.into_iter().enumerate() {
        let model = LocalModel::new(n, k)?;
        let report = monodromy_phase_probe(&model, zeta, d)?;
        checks.push(probe_check(
            &format!("monodromy_probe_case{}", i + 1),
            "measured fiberwise phase sits below the displayed bound with positive margin",
            Source::Direct,
            json!({"below_bound": true}),
            || {
                (
                    json!({
                        "k": k,
                        "n": n,
                        "zeta": [zeta.re, zeta.im],
                        "d": d,
                        "measured": report.measured,
                        "leading_term": report.leading_term,
                        "bound": report.bound,
                        "margin": report.margin,
                    }),
                    report.within_bound && report.margin > 0.0,
                )
            },
        ));
    }
    Ok(checks)
}

// ------------------------------------------------------------------ verify-all

/// The full acceptance suite in dependency order: algebra, Hochschild,
/// critical geometry, zonotopes and rasters, flows, mutation sensitivity.
/// Figure files land in `scratch`.
pub fn verify_all_checks(scratch: &Path) -> anyhow::Result<Vec<CheckRecord>> {
    std::fs::create_dir_all(scratch)
        .with_context(|| format!("creating scratch directory {}", scratch.display()))?;
    let mut checks = Vec::new();

    for n in 1..=4u8 {
        checks.extend(group_order_checks(n));
    }
    for n in 1..=4u8 {
        checks.extend(hom_table_checks(n));
    }
    checks.push(associativity_check(200));

    for n in 1..=4u8 {
        checks.extend(truncated_section(n).1);
    }
    for n in 1..=4u8 {
        checks.extend(cyclic_section(n).1);
    }
    for n in 1..=4u8 {
        checks.extend(tail_table_checks(n));
    }
    for n in 1..=3u8 {
        checks.extend(schouten_checks(n));
    }
    checks.extend(bar_oracle_checks());

    for n in 1..=6u8 {
        checks.extend(critical_section(n).1);
    }

    for n in 1..=4u8 {
        checks.extend(embedding_checks(n));
        checks.extend(lift_packing_checks(n));
    }
    for n in 1..=4u8 {
        checks.extend(thimble_section(n).1);
    }
    let (_, raster) = raster_section(1, 512, &scratch.join("coamoeba-n1"))?;
    checks.extend(raster);

    checks.extend(phase_sweep_checks()?);
    checks.extend(monodromy_checks()?);

    checks.extend(mutation_checks());
    Ok(checks)
}
