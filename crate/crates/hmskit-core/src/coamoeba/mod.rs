//! Exact zonotope geometry of the coamoeba picture.
//!
//! The argument torus ℝ^{n+1}/2πℤ^{n+1} carries a zonotope Z̄ (Minkowski sum
//! of π e₁, …, π e_{n+1} and −π(e₁+…+e_{n+1})) whose complement closure is
//! the coamoeba of the pair of pants, together with its n+2 lifts under the
//! degree-(n+2) torus cover e_i ↦ e_i + Σ_j e_j. Everything incidence-shaped
//! (membership, self-intersection, thimble-point disjointness) is decided
//! with π factored out, over exact rationals, by a small simplex solver; the
//! only floating point in this module lives in the figure rasterizer.
//!
//! Conventions: angles are stored as rational multiples of π, so the torus
//! is [0,2)^{n+1} and the covering translations are the even vectors 2m,
//! m ∈ ℤ^{n+1}. A zonotope is base + Σ λ_i g_i with λ ∈ [0,1]; for the
//! zonotopes here the generators sum to zero, so the base is also the
//! center of symmetry.

mod lp;
mod raster;

pub use raster::{coamoeba_raster, RasterReport};

use crate::exact::{rat, rat_int, Rational};
use lp::LpOutcome;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

/// Failures surfaced by the rasterizer; the exact incidence queries are
/// total on valid shapes and panic on dimension misuse instead.
#[derive(Debug, thiserror::Error)]
pub enum CoamoebaError {
    #[error("raster supports n in {{1, 2}}, got n = {n}")]
    UnsupportedDimension { n: u8 },
    #[error("resolution {resolution} exceeds the 4096 pixel cap")]
    ResolutionTooLarge { resolution: u32 },
    #[error("cannot write figure output: {0}")]
    Io(#[from] std::io::Error),
}

/// Where a point sits relative to a zonotope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Interior,
    Boundary,
    Outside,
}

impl Containment {
    fn rank(self) -> u8 {
        match self {
            Containment::Outside => 0,
            Containment::Boundary => 1,
            Containment::Interior => 2,
        }
    }
}

/// A point on the argument torus, coordinates in units of π, each
/// representative normalized to [0, 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPt {
    coords: Vec<Rational>,
}

impl TorusPt {
    pub fn new(coords: Vec<Rational>) -> TorusPt {
        TorusPt { coords: coords.iter().map(reduce_mod_two).collect() }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// x mod 2, into [0, 2).
fn reduce_mod_two(x: &Rational) -> Rational {
    let two = rat_int(2);
    x - (x / &two).floor() * two
}

/// The degree-(n+2) covering map on argument tori, e_i ↦ e_i + Σ_j e_j,
/// together with its inverse e_i ↦ f_i = e_i − (1/(n+2)) Σ_j e_j.
#[derive(Debug, Clone)]
pub struct CoverMap {
    n: u8,
    forward: Vec<Vec<i64>>,
    inverse: Vec<Vec<Rational>>,
}

impl CoverMap {
    pub fn new(n: u8) -> CoverMap {
        assert!(n >= 1);
        let d = n as usize + 1;
        let m = n as i64 + 2;
        let forward: Vec<Vec<i64>> =
            (0..d).map(|i| (0..d).map(|j| 1 + i64::from(i == j)).collect()).collect();
        let inverse: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| rat_int(i64::from(i == j)) - rat(1, m))
                    .collect()
            })
            .collect();
        CoverMap { n, forward, inverse }
    }

    pub fn forward(&self) -> &[Vec<i64>] {
        &self.forward
    }

    pub fn inverse(&self) -> &[Vec<Rational>] {
        &self.inverse
    }

    /// Covering degree n+2.
    pub fn degree(&self) -> i64 {
        i64::from(self.n) + 2
    }

    /// Determinant of the forward matrix, computed by exact elimination
    /// rather than quoted, so the degree invariant is genuinely checked.
    pub fn determinant(&self) -> Rational {
        let d = self.forward.len();
        let mut a: Vec<Vec<Rational>> = self
            .forward
            .iter()
            .map(|row| row.iter().map(|&v| rat_int(v)).collect())
            .collect();
        let mut det = rat_int(1);
        for col in 0..d {
            let Some(p) = (col..d).find(|&r| !a[r][col].is_zero()) else {
                return rat_int(0);
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            det *= &a[col][col];
            let inv = a[col][col].clone();
            for v in a[col].iter_mut() {
                *v /= &inv;
            }
            for r in col + 1..d {
                if !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in col..d {
                        let sub = &f * &a[col][j];
                        a[r][j] -= sub;
                    }
                }
            }
        }
        det
    }
}

/// base + Σ λ_i g_i, λ ∈ [0,1]^k, all coordinates rational multiples of π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zonotope {
    base: Vec<Rational>,
    generators: Vec<Vec<Rational>>,
}

impl Zonotope {
    pub fn new(base: Vec<Rational>, generators: Vec<Vec<Rational>>) -> Zonotope {
        assert!(!base.is_empty(), "ambient dimension must be positive");
        for g in &generators {
            assert_eq!(g.len(), base.len(), "generator dimension mismatch");
        }
        Zonotope { base, generators }
    }

    pub fn dim(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    /// base + (1/2) Σ g_i; equal to the base whenever the generators sum
    /// to zero, which holds for every zonotope built in this module.
    pub fn center(&self) -> Vec<Rational> {
        let mut c = self.base.clone();
        for g in &self.generators {
            for (cr, gr) in c.iter_mut().zip(g) {
                *cr += gr / rat_int(2);
            }
        }
        c
    }

    /// Exact [min, max] of coordinate r over the zonotope.
    pub fn axis_range(&self, r: usize) -> (Rational, Rational) {
        let mut lo = self.base[r].clone();
        let mut hi = self.base[r].clone();
        for g in &self.generators {
            if g[r].is_positive() {
                hi += &g[r];
            } else {
                lo += &g[r];
            }
        }
        (lo, hi)
    }

    pub fn translated(&self, shift: &[Rational]) -> Zonotope {
        assert_eq!(shift.len(), self.dim());
        let base = self.base.iter().zip(shift).map(|(b, s)| b + s).collect();
        Zonotope { base, generators: self.generators.clone() }
    }

    /// Exact membership in ℝ^{n+1} (no torus identification): feasibility
    /// of p = base + Σ λ_i g_i with λ ∈ [0,1], decided by maximizing the
    /// margin t with λ ∈ [t, 1−t]. Interior means max t > 0; strict
    /// feasibility separates boundary from interior exactly.
    pub fn contains(&self, p: &[Rational]) -> Containment {
        assert_eq!(p.len(), self.dim(), "point dimension mismatch");
        match self.margin_lp(p) {
            LpOutcome::Infeasible => Containment::Outside,
            LpOutcome::Optimal { value, .. } => {
                if value.is_positive() {
                    Containment::Interior
                } else {
                    Containment::Boundary
                }
            }
        }
    }

    /// Membership on the torus: the point (normalized to [0,2)) is tested
    /// against every translate of the zonotope by an even integer vector
    /// whose axis ranges can reach it.
    pub fn contains_torus(&self, p: &TorusPt) -> Containment {
        assert_eq!(p.dim(), self.dim());
        let mut best = Containment::Outside;
        for shift in self.reaching_shifts(p.coords()) {
            let q: Vec<Rational> =
                p.coords().iter().zip(&shift).map(|(c, s)| c + s).collect();
            let v = self.contains(&q);
            if v.rank() > best.rank() {
                best = v;
            }
            if best == Containment::Interior {
                break;
            }
        }
        best
    }

    /// Even shifts 2κ per axis that bring p inside the axis range; the
    /// cartesian product is the exact candidate set for torus membership.
    fn reaching_shifts(&self, p: &[Rational]) -> Vec<Vec<Rational>> {
        let two = rat_int(2);
        let mut per_axis: Vec<Vec<Rational>> = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            let (lo, hi) = self.axis_range(r);
            let k_lo = ((&lo - &p[r]) / &two).ceil();
            let k_hi = ((&hi - &p[r]) / &two).floor();
            let mut axis = Vec::new();
            let mut k = k_lo;
            while k <= k_hi {
                axis.push(&k * &two);
                k += rat_int(1);
            }
            if axis.is_empty() {
                return Vec::new();
            }
            per_axis.push(axis);
        }
        cartesian(&per_axis)
    }

    /// max t s.t. p = base + Σ λ g, λ ∈ [t, 1−t]. Encoded in standard form
    /// with μ = λ − t and slack s = 1 − t − λ, all nonnegative.
    fn margin_lp(&self, p: &[Rational]) -> LpOutcome {
        let k = self.generators.len();
        let d = self.dim();
        let nvars = 2 * k + 1;
        let mut rows = Vec::with_capacity(d + k);
        let mut rhs = Vec::with_capacity(d + k);
        for r in 0..d {
            let mut row = vec![Rational::zero(); nvars];
            let mut gsum = Rational::zero();
            for (i, g) in self.generators.iter().enumerate() {
                row[i] = g[r].clone();
                gsum += &g[r];
            }
            row[2 * k] = gsum;
            rows.push(row);
            rhs.push(&p[r] - &self.base[r]);
        }
        for i in 0..k {
            let mut row = vec![Rational::zero(); nvars];
            row[i] = rat_int(1);
            row[k + i] = rat_int(1);
            row[2 * k] = rat_int(2);
            rows.push(row);
            rhs.push(rat_int(1));
        }
        let mut c = vec![Rational::zero(); nvars];
        c[2 * k] = rat_int(1);
        lp::maximize(&rows, &rhs, &c)
    }
}

/// Free-function form of exact membership, the module's decision procedure.
pub fn zonotope_contains(z: &Zonotope, p: &[Rational]) -> Containment {
    z.contains(p)
}

fn cartesian(per_axis: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = vec![Vec::new()];
    for axis in per_axis {
        let mut next = Vec::with_capacity(out.len() * axis.len());
        for partial in &out {
            for v in axis {
                let mut row = partial.clone();
                row.push(v.clone());
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// The zonotope Z̄ downstairs: generators π e₁, …, π e_{n+1} and
/// −π(e₁+…+e_{n+1}), based (hence centered) at the origin.
pub fn pants_zonotope(n: u8) -> Zonotope {
    assert!(n >= 1);
    let d = n as usize + 1;
    let mut generators: Vec<Vec<Rational>> = (0..d)
        .map(|i| (0..d).map(|j| rat_int(i64::from(i == j))).collect())
        .collect();
    generators.push(vec![rat_int(-1); d]);
    Zonotope::new(vec![rat_int(0); d], generators)
}

/// The n+2 lifts of Z̄ under the covering map: copies of the zonotope
/// generated by π f₁, …, π f_{n+1}, −π(f₁+…+f_{n+1}) centered at
/// (2π/(n+2))(i, …, i) for i = 1..n+2.
pub fn lift_zonotopes(n: u8) -> Vec<Zonotope> {
    let cover = CoverMap::new(n);
    let d = n as usize + 1;
    let m = i64::from(n) + 2;
    // f_i is the image of e_i under the inverse cover matrix; the last
    // generator −Σ f_i closes the cycle, so the lift is centered on its base.
    let mut generators: Vec<Vec<Rational>> =
        (0..d).map(|i| cover.inverse()[i].clone()).collect();
    let mut last = vec![Rational::zero(); d];
    for g in &generators {
        for (l, v) in last.iter_mut().zip(g) {
            *l -= v;
        }
    }
    generators.push(last);
    (1..=m)
        .map(|i| {
            let c = reduce_mod_two(&rat(2 * i, m));
            Zonotope::new(vec![c; d], generators.clone())
        })
        .collect()
}

/// A translate of zb by the even vector 2m that meets za, with the common
/// point and whether the overlap has interior.
#[derive(Debug, Clone)]
pub struct TorusContact {
    pub translation: Vec<i64>,
    pub interior: bool,
    /// A common point, in π units, on za's copy of the torus cover.
    pub point: Vec<Rational>,
}

/// Result of scanning a zonotope (or a pair) against all torus translates.
#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    /// True when no translate meets the zonotope at all, boundary contact
    /// included: vertex touching counts as a self-intersection, which is
    /// exactly what distinguishes Z̄ from its lifts.
    pub embeds: bool,
    pub contacts: Vec<TorusContact>,
}

/// max t with a-point = b-point, both margins t: joint strict feasibility
/// of the intersection of za and zb + shift.
fn overlap_lp(za: &Zonotope, zb: &Zonotope, shift: &[Rational]) -> Option<(Rational, Vec<Rational>)> {
    let d = za.dim();
    assert_eq!(zb.dim(), d);
    let ka = za.generators.len();
    let kb = zb.generators.len();
    // Variables: μ (ka), ν (kb), s (ka), w (kb), t.
    let nvars = 2 * (ka + kb) + 1;
    let ti = nvars - 1;
    let mut rows = Vec::with_capacity(d + ka + kb);
    let mut rhs = Vec::with_capacity(d + ka + kb);
    for r in 0..d {
        let mut row = vec![Rational::zero(); nvars];
        let mut gsum = Rational::zero();
        for (i, g) in za.generators.iter().enumerate() {
            row[i] = g[r].clone();
            gsum += &g[r];
        }
        for (j, h) in zb.generators.iter().enumerate() {
            row[ka + j] = -h[r].clone();
            gsum -= &h[r];
        }
        row[ti] = gsum;
        rows.push(row);
        rhs.push(&zb.base[r] + &shift[r] - &za.base[r]);
    }
    for i in 0..ka {
        let mut row = vec![Rational::zero(); nvars];
        row[i] = rat_int(1);
        row[ka + kb + i] = rat_int(1);
        row[ti] = rat_int(2);
        rows.push(row);
        rhs.push(rat_int(1));
    }
    for j in 0..kb {
        let mut row = vec![Rational::zero(); nvars];
        row[ka + j] = rat_int(1);
        row[ka + kb + ka + j] = rat_int(1);
        row[ti] = rat_int(2);
        rows.push(row);
        rhs.push(rat_int(1));
    }
    let mut c = vec![Rational::zero(); nvars];
    c[ti] = rat_int(1);
    match lp::maximize(&rows, &rhs, &c) {
        LpOutcome::Infeasible => None,
        LpOutcome::Optimal { value, point } => {
            let t = &point[ti];
            let witness: Vec<Rational> = (0..d)
                .map(|r| {
                    let mut x = za.base[r].clone();
                    for (i, g) in za.generators.iter().enumerate() {
                        x += (&point[i] + t) * &g[r];
                    }
                    x
                })
                .collect();
            Some((value, witness))
        }
    }
}

/// Candidate translations m (per-axis integers) for which zb + 2m can
/// meet za, from exact axis-range overlap. This is the finite box the
/// torus reduction calls for (it sits inside the conservative radius
/// ceil(Σ|g|)+1 box), sharpened to the translates that can actually touch.
fn candidate_translations(za: &Zonotope, zb: &Zonotope) -> Vec<Vec<i64>> {
    let two = rat_int(2);
    let mut per_axis: Vec<Vec<i64>> = Vec::new();
    for r in 0..za.dim() {
        let (alo, ahi) = za.axis_range(r);
        let (blo, bhi) = zb.axis_range(r);
        // Overlap of [blo + 2m, bhi + 2m] with [alo, ahi].
        let m_lo = ((&alo - &bhi) / &two).ceil().to_integer().to_i64().unwrap();
        let m_hi = ((&ahi - &blo) / &two).floor().to_integer().to_i64().unwrap();
        if m_lo > m_hi {
            return Vec::new();
        }
        per_axis.push((m_lo..=m_hi).collect());
    }
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for axis in &per_axis {
        let mut next = Vec::with_capacity(out.len() * axis.len());
        for partial in &out {
            for &v in axis {
                let mut row = partial.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

fn contact_scan(za: &Zonotope, zb: &Zonotope, skip_zero: bool) -> Vec<TorusContact> {
    let candidates: Vec<Vec<i64>> = candidate_translations(za, zb)
        .into_iter()
        .filter(|m| !(skip_zero && m.iter().all(|&v| v == 0)))
        .collect();
    let mut contacts: Vec<TorusContact> = candidates
        .par_iter()
        .filter_map(|m| {
            let shift: Vec<Rational> = m.iter().map(|&v| rat_int(2 * v)).collect();
            overlap_lp(za, zb, &shift).map(|(t, point)| TorusContact {
                translation: m.clone(),
                interior: t.is_positive(),
                point,
            })
        })
        .collect();
    contacts.sort_by(|a, b| a.translation.cmp(&b.translation));
    contacts
}

/// Does z, viewed on the torus, meet any of its own nonzero 2πℤ-translates?
pub fn torus_self_intersection(z: &Zonotope) -> EmbeddingReport {
    let contacts = contact_scan(z, z, true);
    EmbeddingReport { embeds: contacts.is_empty(), contacts }
}

/// Self-intersection check for the lifted zonotope Z′ at a given n: true
/// (embeds) exactly when no translate touches it.
pub fn self_intersection_check(n: u8) -> EmbeddingReport {
    assert!((1..=4).contains(&n));
    let lifts = lift_zonotopes(n);
    torus_self_intersection(&lifts[lifts.len() - 1])
}

/// Pairwise relation of the n+2 lifts on the covering torus: interiors
/// must never overlap; boundary (vertex) contacts are reported separately.
#[derive(Debug, Clone)]
pub struct PairwiseReport {
    pub interior_disjoint: bool,
    pub boundary_contacts: usize,
    pub interior_overlaps: Vec<(usize, usize, TorusContact)>,
}

pub fn lifted_pairwise_interior_disjoint(n: u8) -> PairwiseReport {
    let lifts = lift_zonotopes(n);
    let mut boundary = 0;
    let mut overlaps = Vec::new();
    for i in 0..lifts.len() {
        for j in i + 1..lifts.len() {
            for contact in contact_scan(&lifts[i], &lifts[j], false) {
                if contact.interior {
                    overlaps.push((i, j, contact));
                } else {
                    boundary += 1;
                }
            }
        }
    }
    PairwiseReport {
        interior_disjoint: overlaps.is_empty(),
        boundary_contacts: boundary,
        interior_overlaps: overlaps,
    }
}

/// Argument of the index-th fibration critical value, in units of π:
/// the roots of u₁^{n+2} = (−1)^{n+1}(n+1)^{n+1} sit at angle
/// 2(i−1)/(n+2) for odd n and (2(i−1)+1)/(n+2) for even n, i = 1..n+2.
pub fn thimble_argument(n: u8, index: usize) -> Rational {
    let m = i64::from(n) + 2;
    assert!((1..=m as usize).contains(&index), "root index out of range");
    let k = (index - 1) as i64;
    let arg = if n % 2 == 1 { rat(2 * k, m) } else { rat(2 * k + 1, m) };
    reduce_mod_two(&arg)
}

/// Argument projection of the thimble over the index-th critical value:
/// the single point (arg ζ, arg ζ + π, …, arg ζ + π).
pub fn thimble_point(n: u8, index: usize) -> TorusPt {
    let a = thimble_argument(n, index);
    let mut coords = vec![&a + rat_int(1); n as usize + 1];
    coords[0] = a;
    TorusPt::new(coords)
}

/// The lemma as a decision: the thimble point misses the zonotope Z_{n+2}
/// exactly when arg ζ ≠ ±(n+1)π/(n+2). Boundary contact counts as
/// non-disjoint; the geometric statement only needs the open condition.
pub fn thimble_point_disjoint(n: u8, index: usize) -> bool {
    let lifts = lift_zonotopes(n);
    let z_last = &lifts[lifts.len() - 1];
    z_last.contains_torus(&thimble_point(n, index)) == Containment::Outside
}

/// Verdict of the brute-force λ-grid oracle: an exact hit certifies
/// membership; Far (beyond the grid's covering radius δ) certifies
/// non-membership; Near is the inconclusive band of width δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridVerdict {
    Hit,
    Near,
    Far,
}

/// Brute-force membership probe: walk the full grid λ ∈ {0, 1/(steps−1),
/// …, 1}^k and measure the sup-distance from p to the sampled images.
/// Any feasible point is within δ = Σ‖g‖∞ / (2(steps−1)) of some sample,
/// which makes Far a sound rejection.
pub fn grid_oracle(z: &Zonotope, p: &[Rational], steps: usize) -> GridVerdict {
    assert!(steps >= 2);
    assert_eq!(p.len(), z.dim());
    let k = z.generators.len();
    let d = z.dim();
    let step = rat(1, steps as i64 - 1);
    let mut delta = Rational::zero();
    for g in &z.generators {
        let norm = g.iter().map(|v| v.abs()).max().unwrap_or_else(Rational::zero);
        delta += norm * &step / rat_int(2);
    }

    // Odometer walk with incremental updates: bumping λ_i by one step moves
    // the image by step·g_i, so each grid point costs O(d) instead of O(kd).
    let mut lambda = vec![0usize; k];
    let mut q: Vec<Rational> = z.base.to_vec();
    let mut near = false;
    loop {
        let mut hit = true;
        let mut is_near = true;
        for r in 0..d {
            let diff = (&q[r] - &p[r]).abs();
            if !diff.is_zero() {
                hit = false;
            }
            if diff > delta {
                is_near = false;
                break;
            }
        }
        if hit {
            return GridVerdict::Hit;
        }
        near |= is_near;

        // Advance the odometer.
        let mut i = k;
        loop {
            if i == 0 {
                return if near { GridVerdict::Near } else { GridVerdict::Far };
            }
            i -= 1;
            if lambda[i] + 1 < steps {
                lambda[i] += 1;
                for r in 0..d {
                    let bump = &step * &z.generators[i][r];
                    q[r] += bump;
                }
                break;
            }
            // Roll this digit back to zero.
            let back = &step * rat_int(lambda[i] as i64);
            for r in 0..d {
                let drop = &back * &z.generators[i][r];
                q[r] -= drop;
            }
            lambda[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lg::critical_values_w;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pi_units_to_radians(r: &Rational) -> f64 {
        r.to_f64().unwrap() * std::f64::consts::PI
    }

    #[test]
    fn cover_map_inverts_exactly_and_its_determinant_is_the_degree() {
        for n in 1..=4u8 {
            let cover = CoverMap::new(n);
            let d = n as usize + 1;
            for i in 0..d {
                for j in 0..d {
                    let mut dot = Rational::zero();
                    for l in 0..d {
                        dot += rat_int(cover.forward()[i][l]) * &cover.inverse()[l][j];
                    }
                    let expected = if i == j { rat_int(1) } else { rat_int(0) };
                    assert_eq!(dot, expected, "inverse fails at ({i},{j}), n={n}");
                }
            }
            assert_eq!(cover.determinant(), rat_int(i64::from(n) + 2));
            assert_eq!(cover.degree(), i64::from(n) + 2);
        }
    }

    #[test]
    fn lifted_generators_match_the_displayed_formula() {
        let lifts = lift_zonotopes(1);
        assert_eq!(lifts.len(), 3);
        // f₁ = e₁ − (1/3)(e₁+e₂) = (2/3, −1/3) in π units.
        assert_eq!(lifts[0].generators()[0], vec![rat(2, 3), rat(-1, 3)]);
        // Centers (2π/3)(i, i); the i = 3 copy wraps to the origin.
        assert_eq!(lifts[0].base(), &[rat(2, 3), rat(2, 3)]);
        assert_eq!(lifts[2].base(), &[rat_int(0), rat_int(0)]);
        // Generators sum to zero, so base and center coincide.
        for z in &lifts {
            assert_eq!(z.center(), z.base().to_vec());
        }
    }

    #[test]
    fn torus_points_normalize_into_the_fundamental_square() {
        let p = TorusPt::new(vec![rat(5, 2), rat(-1, 2)]);
        assert_eq!(p.coords(), &[rat(1, 2), rat(3, 2)]);
    }

    #[test]
    fn center_of_the_pants_zonotope_is_interior() {
        // λ = (1/2, 1/2, 1/2) lands on the center; because the generators
        // sum to zero that is also the base point, which is therefore
        // interior here (not a vertex as it would be for generic bases).
        let z = pants_zonotope(1);
        assert_eq!(z.contains(&z.center()), Containment::Interior);
        assert_eq!(z.center(), z.base().to_vec());
    }

    #[test]
    fn base_point_is_a_boundary_vertex_when_generators_share_a_halfspace() {
        // The base-point-on-boundary picture needs generators that do not
        // positively span, e.g. the unit square: λ = 0 is then a vertex.
        let square = Zonotope::new(
            vec![rat_int(0), rat_int(0)],
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]],
        );
        assert_eq!(square.contains(&[rat_int(0), rat_int(0)]), Containment::Boundary);
        assert_eq!(square.contains(&[rat(1, 2), rat(1, 2)]), Containment::Interior);
        assert_eq!(square.contains(&[rat_int(2), rat_int(0)]), Containment::Outside);
    }

    #[test]
    fn hexagon_corner_is_boundary_and_the_million_sample_grid_hits_it() {
        // p = π(1,1) is the λ = (1,1,0) vertex of Z̄ at n = 1. The grid with
        // 100 values per λ axis (10⁶ samples) contains that corner exactly.
        let z = pants_zonotope(1);
        let p = [rat_int(1), rat_int(1)];
        assert_eq!(z.contains(&p), Containment::Boundary);
        assert_eq!(grid_oracle(&z, &p, 100), GridVerdict::Hit);
    }

    #[test]
    fn lp_and_grid_oracle_agree_on_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x636f616d);
        for n in 1..=3u8 {
            let zonotopes = vec![pants_zonotope(n), lift_zonotopes(n)[0].clone()];
            let steps = match n {
                1 => 21,
                2 => 9,
                _ => 6,
            };
            for z in &zonotopes {
                let d = z.dim();
                let ranges: Vec<(Rational, Rational)> =
                    (0..d).map(|r| z.axis_range(r)).collect();
                // 40 exact grid images (certain members) plus 60 box points.
                for trial in 0..100 {
                    let p: Vec<Rational> = if trial < 40 {
                        let mut q = z.base().to_vec();
                        for g in z.generators() {
                            let lam = rat(rng.gen_range(0..=(steps as i64 - 1)), steps as i64 - 1);
                            for (qr, gr) in q.iter_mut().zip(g) {
                                *qr += &lam * gr;
                            }
                        }
                        q
                    } else {
                        (0..d)
                            .map(|r| {
                                let (lo, hi) = &ranges[r];
                                let frac = rat(rng.gen_range(-20..=120), 100);
                                lo + (hi - lo) * frac
                            })
                            .collect()
                    };
                    let exact = z.contains(&p);
                    let verdict = grid_oracle(&z, &p, steps);
                    match exact {
                        Containment::Outside => assert_ne!(
                            verdict,
                            GridVerdict::Hit,
                            "grid hit a point the LP rejects, n={n}"
                        ),
                        _ => assert_ne!(
                            verdict,
                            GridVerdict::Far,
                            "grid strands a point the LP accepts, n={n}"
                        ),
                    }
                    if trial < 40 {
                        assert_ne!(exact, Containment::Outside, "grid image left the zonotope");
                    }
                }
            }
        }
    }

    #[test]
    fn lifted_zonotopes_embed_in_the_torus() {
        for n in 1..=4u8 {
            let report = self_intersection_check(n);
            assert!(report.embeds, "lift self-intersects at n={n}");
            assert!(report.contacts.is_empty());
        }
    }

    #[test]
    fn the_unlifted_hexagon_touches_itself_at_its_vertices() {
        let report = torus_self_intersection(&pants_zonotope(1));
        assert!(!report.embeds);
        // Six vertex contacts, one per hexagon corner, none with interior.
        assert_eq!(report.contacts.len(), 6);
        let mut translations: Vec<Vec<i64>> =
            report.contacts.iter().map(|c| c.translation.clone()).collect();
        translations.sort();
        let mut expected =
            vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1], vec![1, 1], vec![-1, -1]];
        expected.sort();
        assert_eq!(translations, expected);
        let vertices = [
            [rat_int(1), rat_int(0)],
            [rat_int(1), rat_int(1)],
            [rat_int(0), rat_int(1)],
            [rat_int(-1), rat_int(0)],
            [rat_int(-1), rat_int(-1)],
            [rat_int(0), rat_int(-1)],
        ];
        for contact in &report.contacts {
            assert!(!contact.interior, "vertex contact misreported as interior");
            assert!(
                vertices.iter().any(|v| v.as_slice() == contact.point.as_slice()),
                "contact {:?} is not a hexagon vertex",
                contact.point
            );
        }
    }

    #[test]
    fn lifts_are_pairwise_interior_disjoint() {
        for n in 1..=4u8 {
            let report = lifted_pairwise_interior_disjoint(n);
            assert!(report.interior_disjoint, "lift interiors overlap at n={n}");
        }
        // At n = 1 adjacent lifts share corners, e.g. (0, π) lies on both
        // Z₁ and Z₂; the scan must see those as boundary-only contacts.
        let report = lifted_pairwise_interior_disjoint(1);
        assert!(report.boundary_contacts > 0);
    }

    #[test]
    fn shared_corner_of_adjacent_lifts_is_on_both_boundaries() {
        let lifts = lift_zonotopes(1);
        let corner = TorusPt::new(vec![rat_int(0), rat_int(1)]);
        assert_eq!(lifts[0].contains_torus(&corner), Containment::Boundary);
        assert_eq!(lifts[1].contains_torus(&corner), Containment::Boundary);
        assert_eq!(lifts[2].contains_torus(&corner), Containment::Outside);
    }

    #[test]
    fn thimble_disjointness_matches_the_angle_criterion() {
        for n in 1..=4u8 {
            let m = i64::from(n) + 2;
            let excluded_plus = reduce_mod_two(&rat(m - 1, m));
            let excluded_minus = reduce_mod_two(&rat(-(m - 1), m));
            let mut failures = 0;
            for index in 1..=(m as usize) {
                let arg = thimble_argument(n, index);
                let expected = arg != excluded_plus && arg != excluded_minus;
                let got = thimble_point_disjoint(n, index);
                assert_eq!(got, expected, "angle rule mismatch at n={n}, index={index}");
                if !got {
                    failures += 1;
                }
            }
            // The excluded pair ±(n+1)π/(n+2) is always realized by exactly
            // two of the n+2 roots.
            assert_eq!(failures, 2, "wrong failure count at n={n}");
        }
    }

    #[test]
    fn thimble_arguments_match_the_fibration_critical_values() {
        for n in 1..=4u8 {
            let roots = critical_values_w(n);
            for (k, zeta) in roots.iter().enumerate() {
                let stored = pi_units_to_radians(&thimble_argument(n, k + 1));
                let wrapped = zeta.arg().rem_euclid(2.0 * std::f64::consts::PI);
                let diff = (stored - wrapped).abs();
                let diff = diff.min(2.0 * std::f64::consts::PI - diff);
                assert!(diff < 1e-9, "argument mismatch n={n} root {k}: {diff}");
            }
        }
    }

    #[test]
    fn thimble_point_examples_at_n1() {
        // arg ζ = 0 gives the point (0, π), clear of the hexagon around 0.
        assert_eq!(thimble_argument(1, 1), rat_int(0));
        assert_eq!(
            thimble_point(1, 1).coords(),
            &[rat_int(0), rat_int(1)]
        );
        assert!(thimble_point_disjoint(1, 1));
        // arg ζ = 2π/3 = (n+1)π/(n+2) is the excluded angle: the point is a
        // vertex of Z₃ and the check reports contact.
        assert_eq!(thimble_argument(1, 2), rat(2, 3));
        assert!(!thimble_point_disjoint(1, 2));
        let lifts = lift_zonotopes(1);
        assert_eq!(
            lifts[2].contains_torus(&thimble_point(1, 2)),
            Containment::Boundary
        );
    }

    #[test]
    fn axis_ranges_and_translation_candidates_are_exact() {
        let z = pants_zonotope(1);
        assert_eq!(z.axis_range(0), (rat_int(-1), rat_int(1)));
        let lifted = &lift_zonotopes(1)[2];
        assert_eq!(lifted.axis_range(0), (rat(-2, 3), rat(2, 3)));
        // The lift is narrower than the 2π period in every axis, so no
        // nonzero translate can even box-overlap it.
        assert!(candidate_translations(lifted, lifted)
            .iter()
            .all(|m| m.iter().all(|&v| v == 0)));
    }

    #[test]
    fn containment_is_centrally_symmetric() {
        let z = lift_zonotopes(2)[1].clone();
        let c = z.center();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let v: Vec<Rational> =
                (0..z.dim()).map(|_| rat(rng.gen_range(-12..=12), 10)).collect();
            let plus: Vec<Rational> = c.iter().zip(&v).map(|(a, b)| a + b).collect();
            let minus: Vec<Rational> = c.iter().zip(&v).map(|(a, b)| a - b).collect();
            assert_eq!(z.contains(&plus), z.contains(&minus));
        }
    }
}
