//! Critical-point geometry of the mirror torus: the sum potential on
//! {u₁⋯u_{n+2} = 1}, the fibration u ↦ u₁ on its zero level, the function
//! f on the positive real locus, vanishing paths, and thimble rays.
//!
//! Everything the source derives by a substitution argument is settled here
//! by exact elimination over ℚ, then confirmed numerically with a uniform
//! 1e−10 residual budget. Numeric-only claims (the n = 2 level-curve shape)
//! are labeled probes, not proofs.

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;
use thiserror::Error;

use crate::exact::{rat, rat_int, CycScalar, Rational};
use crate::linalg::{kernel_basis_raw, rref_in_place};

const RESIDUAL_BUDGET: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LgError {
    #[error("point lies off the torus fiber: |u1···u{m} − 1| = {residual:.3e}")]
    OffFiber { m: usize, residual: f64 },
    #[error("level {t} sits in the 1e−9 degenerate band around the critical value {critical}")]
    DegenerateLevel { t: f64, critical: f64 },
    #[error("newton iteration failed to converge from start {start:?}")]
    NewtonDivergence { start: Vec<f64> },
}

/// A point of the torus {u₁⋯u_{n+2} = 1}. The product constraint is
/// enforced at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    u: Vec<Complex64>,
}

impl TorusPoint {
    /// Builds a point from all n+2 coordinates, checking the constraint.
    pub fn new(u: Vec<Complex64>) -> Result<TorusPoint, LgError> {
        let prod: Complex64 = u.iter().product();
        let residual = (prod - Complex64::new(1.0, 0.0)).norm();
        if residual > 1e-12 {
            return Err(LgError::OffFiber { m: u.len(), residual });
        }
        Ok(TorusPoint { u })
    }

    /// Builds a point from the first n+1 coordinates; the last one is
    /// derived from the product constraint.
    pub fn from_chart(chart: &[Complex64]) -> TorusPoint {
        let prod: Complex64 = chart.iter().product();
        let mut u = chart.to_vec();
        u.push(prod.inv());
        TorusPoint { u }
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.u
    }
}

/// The anticanonical pencil data: Fermat member, coordinate-product member,
/// and the critical values of the quotient potential.
#[derive(Debug, Clone)]
pub struct PencilConfig {
    pub n: u8,
    pub sigma_zero: String,
    pub sigma_infinity: String,
    pub critical_values: Vec<Complex64>,
}

impl PencilConfig {
    pub fn new(n: u8) -> PencilConfig {
        let m = n as usize + 2;
        let sigma_zero = (1..=m).map(|i| format!("x{i}^{m}")).collect::<Vec<_>>().join(" + ");
        let sigma_infinity = (1..=m).map(|i| format!("x{i}")).collect::<Vec<_>>().join("*");
        let critical_values =
            critical_points_potential(n).into_iter().map(|(_, v)| v).collect();
        PencilConfig { n, sigma_zero, sigma_infinity, critical_values }
    }
}

/// The straight vanishing path t ↦ (n+2)ζ_{n+2}^{−i}·t on [0, 1].
#[derive(Debug, Clone)]
pub struct VanishingPath {
    pub index: usize,
    n: u8,
}

impl VanishingPath {
    pub fn new(n: u8, index: usize) -> VanishingPath {
        assert!(index >= 1 && index <= n as usize + 2, "index must lie in 1..=n+2");
        VanishingPath { index, n }
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let m = self.n as f64 + 2.0;
        let angle = -2.0 * PI * self.index as f64 / m;
        Complex64::from_polar(m * t, angle)
    }

    pub fn start(&self) -> Complex64 {
        self.eval(0.0)
    }

    pub fn endpoint(&self) -> Complex64 {
        self.eval(1.0)
    }
}

/// A thimble ray ℓ(t) = tζ + ζ over a root of the critical-value equation.
#[derive(Debug, Clone)]
pub struct ThimbleRay {
    root: Complex64,
    n: u8,
}

impl ThimbleRay {
    pub fn root(&self) -> Complex64 {
        self.root
    }

    pub fn ell(&self, t: f64) -> Complex64 {
        self.root * t + self.root
    }

    /// The critical point of the restricted fibration, in torus
    /// coordinates: (ζ, −ζ/(n+1), …, −ζ/(n+1)).
    pub fn critical_point(&self) -> TorusPoint {
        let scale = -self.root / (self.n as f64 + 1.0);
        let mut chart = vec![scale; self.n as usize + 1];
        chart[0] = self.root;
        TorusPoint::from_chart(&chart)
    }
}

/// Exact elimination step behind the sum potential: the Lagrange condition
/// forces all coordinates equal. The difference matrix u_i − u_{i+1} has a
/// one-dimensional kernel spanned by the all-ones vector.
fn all_equal_kernel(m: usize) -> Vec<Rational> {
    let mut mat = Vec::new();
    for i in 0..m - 1 {
        let mut row = vec![CycScalar::zero(1); m];
        row[i] = CycScalar::one(1);
        row[i + 1] = CycScalar::from_int(1, -1);
        mat.push(row);
    }
    let kernel = kernel_basis_raw(&mat, m, 1);
    assert_eq!(kernel.len(), 1, "the all-equal condition cuts out a line");
    kernel[0]
        .iter()
        .map(|c| c.as_rational().expect("order-1 scalars are rational"))
        .collect()
}

/// Critical points of the sum potential on the torus: the n+2 diagonal
/// points (c, …, c) with c^{n+2} = 1 and values (n+2)c. The all-equal shape
/// comes from exact elimination; criticality is then confirmed numerically.
pub fn critical_points_potential(n: u8) -> Vec<(TorusPoint, Complex64)> {
    assert!(n >= 1);
    let m = n as usize + 2;
    let kernel = all_equal_kernel(m);
    assert!(kernel.iter().all(|c| *c == kernel[0]), "kernel vector is constant");

    (1..=m)
        .map(|i| {
            let angle = -2.0 * PI * i as f64 / m as f64;
            let c = Complex64::from_polar(1.0, angle);
            let point = TorusPoint::new(vec![c; m]).expect("roots of unity lie on the fiber");
            let residual = constrained_gradient_residual(point.coords());
            assert!(
                residual < RESIDUAL_BUDGET,
                "criticality residual {residual:.3e} at i = {i}"
            );
            (point, c * m as f64)
        })
        .collect()
}

/// Norm of the component of ∇(Σu) orthogonal to ∇(Πu) at a fiber point:
/// zero exactly at a constrained critical point.
fn constrained_gradient_residual(u: &[Complex64]) -> f64 {
    let grad_w: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); u.len()];
    let grad_g: Vec<Complex64> = u.iter().map(|ui| ui.inv()).collect();
    let dot: Complex64 = grad_w.iter().zip(&grad_g).map(|(a, b)| a * b.conj()).sum();
    let norm2: f64 = grad_g.iter().map(|b| b.norm_sqr()).sum();
    let lambda = dot / norm2;
    grad_w
        .iter()
        .zip(&grad_g)
        .map(|(a, b)| (a - lambda * b).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// The fiber equation of the zero level in chart coordinates u₁..u_{n+1}:
/// Σᵢ uᵢ·(u₁⋯u_{n+1}) + 1.
fn fiber_equation(chart: &[Complex64]) -> Complex64 {
    let prod: Complex64 = chart.iter().product();
    let sum: Complex64 = chart.iter().sum();
    sum * prod + Complex64::new(1.0, 0.0)
}

/// The n+2 critical values of the fibration u ↦ u₁ on the zero level:
/// solutions of u₁^{n+2} = (−1)^{n+1}(n+1)^{n+1}, rebuilt symbolically by
/// substituting u₂ = … = u_{n+1} = −u₁/(n+1) into the fiber equation.
pub fn critical_values_w(n: u8) -> Vec<Complex64> {
    assert!(n >= 1);
    let m = n as usize + 2;
    let np1 = n as f64 + 1.0;
    let magnitude = np1.powf(np1 / m as f64);
    // (−1)^{n+1} rotates the root fan by π/(n+2) when n is even.
    let base = if n % 2 == 1 { 0.0 } else { PI / m as f64 };

    // Uniqueness of the substitution shape: the linear system
    // (I + J)y = −u₁·1 from the partial derivatives has full rank, so
    // y = −u₁/(n+1)·(1,…,1) is its only solution. Checked at u₁ = 1.
    let nvars = n as usize;
    let mut aug = Vec::new();
    for i in 0..nvars {
        let mut row = vec![CycScalar::one(1); nvars + 1];
        row[i] = CycScalar::from_int(1, 2);
        row[nvars] = CycScalar::from_int(1, -1);
        aug.push(row);
    }
    let pivots = rref_in_place(&mut aug);
    assert_eq!(pivots, (0..nvars).collect::<Vec<_>>(), "the Lagrange system is nonsingular");
    let expected = rat(-1, n as i64 + 1);
    assert!(
        aug.iter().all(|row| row[nvars].as_rational().as_ref() == Some(&expected)),
        "the unique solution is −u₁/(n+1) in every slot"
    );

    (0..m)
        .map(|k| {
            let angle = base + 2.0 * PI * k as f64 / m as f64;
            let zeta = Complex64::from_polar(magnitude, angle);
            let mut chart = vec![-zeta / np1; n as usize + 1];
            chart[0] = zeta;
            let residual = fiber_equation(&chart).norm();
            assert!(
                residual < RESIDUAL_BUDGET,
                "substitution point misses the fiber: {residual:.3e}"
            );
            zeta
        })
        .collect()
}

/// f(z) = (1 + z₁ + … + z_n)^{n+1} / (z₁⋯z_n) on the positive orthant.
pub fn f_positive(z: &[f64]) -> f64 {
    let n = z.len();
    let s = 1.0 + z.iter().sum::<f64>();
    s.powi(n as i32 + 1) / z.iter().product::<f64>()
}

/// Gradient of log f.
fn grad_log_f(z: &[f64]) -> Vec<f64> {
    let np1 = z.len() as f64 + 1.0;
    let s = 1.0 + z.iter().sum::<f64>();
    z.iter().map(|&zj| np1 / s - 1.0 / zj).collect()
}

/// Dense partial-pivot solve; small systems only.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| {
            a[i][col].abs().partial_cmp(&a[j][col].abs()).expect("finite entries")
        })?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let factor = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] -= factor * a[col][c];
            }
            b[r] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for c in row + 1..n {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

fn newton_from(start: &[f64]) -> Option<Vec<f64>> {
    let n = start.len();
    let np1 = n as f64 + 1.0;
    let log_f = |z: &[f64]| {
        let s = 1.0 + z.iter().sum::<f64>();
        np1 * s.ln() - z.iter().map(|v| v.ln()).sum::<f64>()
    };
    let newton_dir = |z: &[f64]| -> Option<Vec<f64>> {
        let s = 1.0 + z.iter().sum::<f64>();
        let jac: Vec<Vec<f64>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| {
                        let diag = if j == k { 1.0 / (z[j] * z[j]) } else { 0.0 };
                        diag - np1 / (s * s)
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<f64> = grad_log_f(z).iter().map(|v| -v).collect();
        solve_dense(jac, rhs)
    };

    // Globalization phase: monotone descent of log f down to a gradient
    // norm where the decrease is still measurable in doubles. f is proper
    // on the orthant with a single stationary point, so this cannot stall.
    let mut z = start.to_vec();
    for _ in 0..200 {
        let g = grad_log_f(&z);
        if g.iter().all(|v| v.abs() < 1e-6) {
            break;
        }
        let mut dir = newton_dir(&z)?;
        // The Hessian of log f loses definiteness away from the minimum;
        // when the Newton direction stops pointing downhill, fall back to
        // steepest descent for this step.
        let slope: f64 = dir.iter().zip(&g).map(|(d, gj)| d * gj).sum();
        if !slope.is_finite() || slope >= 0.0 {
            dir = g.iter().map(|v| -v).collect();
        }
        let base = log_f(&z);
        let mut alpha = 1.0;
        let mut accepted = false;
        for _ in 0..60 {
            let trial: Vec<f64> =
                z.iter().zip(&dir).map(|(zj, dj)| zj + alpha * dj).collect();
            if trial.iter().all(|&v| v > 0.0) && log_f(&trial) < base {
                z = trial;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if !accepted {
            return None;
        }
    }

    // Local phase: undamped Newton converges quadratically inside the
    // basin reached above.
    for _ in 0..25 {
        let g = grad_log_f(&z);
        if g.iter().all(|v| v.abs() < 1e-12) {
            return Some(z);
        }
        let dir = newton_dir(&z)?;
        for (zj, dj) in z.iter_mut().zip(&dir) {
            *zj += dj;
        }
    }
    None
}

/// Report from the random-start Newton search for the critical point of f.
#[derive(Debug, Clone)]
pub struct NewtonReport {
    /// The common limit of all runs, numerically (1, …, 1).
    pub point: Vec<f64>,
    /// f at the exact all-ones point: (n+1)^{n+1} as a rational.
    pub value: Rational,
    /// Leading principal minors of the exact Hessian of log f there.
    pub hessian_minors: Vec<Rational>,
    /// Number of converged starts (always 20 in range).
    pub runs: usize,
}

/// Leading principal minors by cofactor expansion; k ≤ 6 here.
fn leading_minors(mat: &[Vec<Rational>]) -> Vec<Rational> {
    fn det(m: &[Vec<Rational>]) -> Rational {
        let k = m.len();
        if k == 1 {
            return m[0][0].clone();
        }
        let mut acc = Rational::zero();
        for (j, top) in m[0].iter().enumerate() {
            if top.is_zero() {
                continue;
            }
            let sub: Vec<Vec<Rational>> = (1..k)
                .map(|r| (0..k).filter(|&c| c != j).map(|c| m[r][c].clone()).collect())
                .collect();
            let term = top * det(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    (1..=mat.len())
        .map(|k| {
            let block: Vec<Vec<Rational>> =
                (0..k).map(|r| mat[r][..k].to_vec()).collect();
            det(&block)
        })
        .collect()
}

/// Newton's method on ∇log f from 20 random positive starts. All runs must
/// land on (1, …, 1); the value and the Hessian positivity certificate are
/// then exact.
pub fn newton_critical_f(n: u8) -> Result<NewtonReport, LgError> {
    assert!((1..=6).contains(&n), "n must lie in 1..=6");
    let nvars = n as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(0x4c47);
    let starts: Vec<Vec<f64>> = (0..20)
        .map(|_| (0..nvars).map(|_| rng.gen_range(-1.5f64..1.5).exp()).collect())
        .collect();

    let limits: Vec<(Vec<f64>, Option<Vec<f64>>)> = starts
        .into_par_iter()
        .map(|start| {
            let hit = newton_from(&start);
            (start, hit)
        })
        .collect();
    let mut point = vec![1.0; nvars];
    for (start, hit) in &limits {
        match hit {
            Some(z) if z.iter().all(|&zj| (zj - 1.0).abs() < 1e-8) => {
                point = z.clone();
            }
            _ => return Err(LgError::NewtonDivergence { start: start.clone() }),
        }
    }

    let np1 = rat_int(n as i64 + 1);
    let mut value = Rational::one();
    for _ in 0..=n {
        value *= np1.clone();
    }

    // Hessian of log f at all-ones: identity minus the all-ones matrix
    // over n+1, assembled entrywise and certified by its minors.
    let hess: Vec<Vec<Rational>> = (0..nvars)
        .map(|j| {
            (0..nvars)
                .map(|k| {
                    let diag = if j == k { Rational::one() } else { Rational::zero() };
                    diag - rat(1, n as i64 + 1)
                })
                .collect()
        })
        .collect();
    let hessian_minors = leading_minors(&hess);
    assert!(
        hessian_minors.iter().all(|m| m.is_positive()),
        "the critical point must be a nondegenerate minimum"
    );

    Ok(NewtonReport { point, value, hessian_minors, runs: limits.len() })
}

/// Shape of a level set of f on the positive orthant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelSetClass {
    Empty,
    Point,
    SphereLike,
}

/// Classifies {f = t}. At n = 1 the count of positive roots of
/// (1+z)² = tz is exact; at n = 2 a radial continuation traces the curve
/// and reports the outcome of closure checks (a probe, not a proof).
pub fn level_set_probe(n: u8, t: f64) -> Result<LevelSetClass, LgError> {
    assert!(n == 1 || n == 2, "only n = 1, 2 are probed");
    let critical = (n as f64 + 1.0).powi(n as i32 + 1);
    if t != critical && (t - critical).abs() < 1e-9 {
        return Err(LgError::DegenerateLevel { t, critical });
    }
    if n == 1 {
        let tq = Rational::from_float(t).expect("level must be finite");
        // (1+z)² = tz  ⟺  z² + (2−t)z + 1 = 0; discriminant t(t−4).
        let disc = tq.clone() * (tq.clone() - rat_int(4));
        return Ok(if disc.is_negative() {
            LevelSetClass::Empty
        } else if disc.is_zero() {
            if tq == rat_int(4) {
                LevelSetClass::Point // double root z = 1
            } else {
                LevelSetClass::Empty // t = 0: double root z = −1
            }
        } else if tq > rat_int(4) {
            // root sum t−2 > 0 and product 1 > 0: both roots positive
            LevelSetClass::SphereLike
        } else {
            LevelSetClass::Empty
        });
    }

    if t < critical {
        return Ok(LevelSetClass::Empty);
    }
    if t == critical {
        return Ok(LevelSetClass::Point);
    }
    // Radial march from the minimum (1, 1): every direction must cross the
    // level once, and the crossing radius must vary continuously.
    let rays = 256;
    let radii: Vec<f64> = (0..rays)
        .into_par_iter()
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / rays as f64;
            let dir = [theta.cos(), theta.sin()];
            let r_bound = dir
                .iter()
                .filter(|&&d| d < 0.0)
                .map(|&d| 1.0 / -d)
                .fold(f64::INFINITY, f64::min);
            let eval = |r: f64| f_positive(&[1.0 + r * dir[0], 1.0 + r * dir[1]]);
            let cap = r_bound * (1.0 - 1e-9);
            let mut lo = 0.0;
            let mut hi = f64::NAN;
            let mut r = 1e-3;
            for _ in 0..10_000 {
                if r >= cap {
                    // f blows up on the orthant boundary, so the cap
                    // itself finishes the bracket.
                    if eval(cap) >= t {
                        hi = cap;
                    }
                    break;
                }
                if eval(r) >= t {
                    hi = r;
                    break;
                }
                lo = r;
                r *= 1.05;
            }
            assert!(hi.is_finite(), "level {t} not reached along direction {theta}");
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if eval(mid) >= t {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect();
    for k in 0..rays {
        let a = radii[k];
        let b = radii[(k + 1) % rays];
        assert!(
            (a - b).abs() < 0.3 * a.max(b) + 1e-6,
            "level-curve trace lost continuity between rays {k} and {}",
            k + 1
        );
    }
    Ok(LevelSetClass::SphereLike)
}

/// The thimble ray over the index-th critical value, with the restricted
/// fibration's critical point checked to sit over ℓ(0).
pub fn thimble_ray(n: u8, index: usize) -> ThimbleRay {
    let roots = critical_values_w(n);
    assert!(index < roots.len(), "root index out of range");
    let ray = ThimbleRay { root: roots[index], n };
    let cp = ray.critical_point();
    // u₁ is critical for the restricted fibration iff e₁ lies in the span
    // of the two constraint gradients (1/uᵢ) and (1, …, 1).
    let u = cp.coords();
    let g1: Vec<Complex64> = u.iter().map(|ui| ui.inv()).collect();
    let g2: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); u.len()];
    let target = {
        let mut e1 = vec![Complex64::new(0.0, 0.0); u.len()];
        e1[0] = Complex64::new(1.0, 0.0);
        e1
    };
    let residual = span_residual(&target, &[g1, g2]);
    assert!(residual < RESIDUAL_BUDGET, "fibration criticality residual {residual:.3e}");
    assert!(
        (u[0] - ray.root()).norm() < RESIDUAL_BUDGET,
        "the critical point must sit over the root"
    );
    ray
}

/// Distance from `target` to the span of `basis` (complex least squares via
/// Gram–Schmidt).
fn span_residual(target: &[Complex64], basis: &[Vec<Complex64>]) -> f64 {
    let mut ortho: Vec<Vec<Complex64>> = Vec::new();
    for v in basis {
        let mut w = v.clone();
        for q in &ortho {
            let coef: Complex64 = w.iter().zip(q).map(|(a, b)| a * b.conj()).sum();
            for (wi, qi) in w.iter_mut().zip(q) {
                *wi -= coef * qi;
            }
        }
        let norm = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-14 {
            for wi in &mut w {
                *wi /= norm;
            }
            ortho.push(w);
        }
    }
    let mut rem = target.to_vec();
    for q in &ortho {
        let coef: Complex64 = rem.iter().zip(q).map(|(a, b)| a * b.conj()).sum();
        for (ri, qi) in rem.iter_mut().zip(q) {
            *ri -= coef * qi;
        }
    }
    rem.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}
