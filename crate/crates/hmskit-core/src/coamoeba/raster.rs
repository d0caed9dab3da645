//! Figure rasterizer for the coamoeba picture.
//!
//! The solution set of the fiber equation (Σᵢ uᵢ)(u₁⋯u_{n+1}) + 1 = 0 is
//! sampled by solving for u₁ (the equation is quadratic in each variable)
//! over a log-radial grid of the remaining coordinates, pushed through Arg,
//! and rasterized onto the torus square spanned by (θ₁, θ₂). Because all
//! samples at a fixed grid angle share their θ₂ row, consecutive samples of
//! a tracked root branch are joined along that row; the joined segment is
//! the true image of the continuous branch path, so the fill never strays
//! outside the coamoeba. Zonotope lift outlines and thimble points are
//! drawn on top as their own color classes, which also makes flood-fill
//! component counts well defined: the tiling's vertex pixels belong to the
//! outlines, not to the triangles that merely touch there.
//!
//! Angle grids are offset by half a step so no sample row passes exactly
//! through a tiling vertex (those sit at multiples of π/3 for n = 1).
//!
//! Outputs are a binary P6 pixmap and an SVG overlay; both are fully
//! deterministic for a fixed resolution.

use super::{lift_zonotopes, thimble_point, CoamoebaError, Zonotope};
use crate::exact::Rational;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};

const CLASS_LIGHT: u8 = 0;
const CLASS_DARK: u8 = 1;
const CLASS_OUTLINE: u8 = 2;
const CLASS_MARKER: u8 = 3;

const PALETTE: [[u8; 3]; 4] = [
    [255, 255, 255], // light: complement of the coamoeba
    [40, 40, 56],    // dark: coamoeba samples
    [44, 98, 208],   // outline: lifted zonotope boundaries
    [208, 44, 44],   // marker: thimble points
];

/// Row joins are only drawn when the branch moved less than this far in
/// θ₁ over one modulus micro-step; larger jumps mean the tracker lost the
/// branch (near a discriminant zero) and the safe action is to skip.
const FILL_THRESHOLD: f64 = 0.15;

/// What the rasterizer measured, plus where it wrote the figure.
#[derive(Debug, Clone)]
pub struct RasterReport {
    pub resolution: u32,
    pub dark_pixels: usize,
    pub light_pixels: usize,
    pub outline_pixels: usize,
    pub marker_pixels: usize,
    pub dark_components: usize,
    pub light_components: usize,
    pub dark_component_sizes: Vec<usize>,
    pub light_component_sizes: Vec<usize>,
    /// dark / (dark + light), outline and marker pixels excluded.
    pub area_fraction: f64,
    pub ppm_path: PathBuf,
    pub svg_path: PathBuf,
}

/// Rasterize the coamoeba of the zero fiber for n = 1 or 2, overlay the
/// zonotope lifts and thimble points, and write `<out>.ppm` / `<out>.svg`.
pub fn coamoeba_raster(n: u8, resolution: u32, out: &Path) -> Result<RasterReport, CoamoebaError> {
    if !(1..=2).contains(&n) {
        return Err(CoamoebaError::UnsupportedDimension { n });
    }
    if resolution > 4096 {
        return Err(CoamoebaError::ResolutionTooLarge { resolution });
    }
    assert!(resolution >= 1, "resolution must be positive");
    let res = resolution as usize;

    let classes = build_classes(n, res);

    let mut counts = [0usize; 4];
    for &c in &classes {
        counts[c as usize] += 1;
    }
    let dark_component_sizes = component_sizes(&classes, res, CLASS_DARK);
    let light_component_sizes = component_sizes(&classes, res, CLASS_LIGHT);
    let colored = counts[CLASS_DARK as usize] + counts[CLASS_LIGHT as usize];
    let area_fraction = if colored == 0 {
        0.0
    } else {
        counts[CLASS_DARK as usize] as f64 / colored as f64
    };

    let ppm_path = out.with_extension("ppm");
    let svg_path = out.with_extension("svg");
    write_ppm(&ppm_path, &classes, res)?;
    write_svg(&svg_path, n)?;

    Ok(RasterReport {
        resolution,
        dark_pixels: counts[CLASS_DARK as usize],
        light_pixels: counts[CLASS_LIGHT as usize],
        outline_pixels: counts[CLASS_OUTLINE as usize],
        marker_pixels: counts[CLASS_MARKER as usize],
        dark_components: dark_component_sizes.len(),
        light_components: light_component_sizes.len(),
        dark_component_sizes,
        light_component_sizes,
        area_fraction,
        ppm_path,
        svg_path,
    })
}

/// Full class buffer: coamoeba samples, then outlines, then markers, so
/// later layers own contested pixels.
fn build_classes(n: u8, res: usize) -> Vec<u8> {
    let mut classes = vec![CLASS_LIGHT; res * res];
    for (row, cols) in sample_rows(n, res) {
        for (x, &marked) in cols.iter().enumerate() {
            if marked {
                classes[row * res + x] = CLASS_DARK;
            }
        }
    }
    draw_outlines(&mut classes, res, n);
    draw_markers(&mut classes, res, n);
    classes
}

fn offset_angle(k: usize, count: usize) -> f64 {
    (k as f64 + 0.5) * 2.0 * PI / count as f64
}

fn pixel_of(angle: f64, res: usize) -> usize {
    let frac = (angle / (2.0 * PI)).rem_euclid(1.0);
    ((frac * res as f64) as usize).min(res - 1)
}

/// Roots of a u² + b u + c = 0 over ℂ.
fn quadratic_roots(a: Complex64, b: Complex64, c: Complex64) -> (Complex64, Complex64) {
    let disc = b * b - 4.0 * a * c;
    let sq = disc.sqrt();
    ((-b + sq) / (2.0 * a), (-b - sq) / (2.0 * a))
}

/// One tracked pair of roots along a modulus march.
struct BranchPair {
    roots: [Complex64; 2],
    args: [f64; 2],
}

/// Advance the tracker: match roots to the previous step by total
/// distance, paint both branch segments, and store the new state.
fn advance_branches(
    prev: &mut Option<BranchPair>,
    mut r1: Complex64,
    mut r2: Complex64,
    cols: &mut [bool],
    res: usize,
) {
    if !(r1.is_finite() && r2.is_finite()) {
        *prev = None;
        return;
    }
    if let Some(t) = prev.as_ref() {
        let keep = (r1 - t.roots[0]).norm_sqr() + (r2 - t.roots[1]).norm_sqr();
        let swap = (r1 - t.roots[1]).norm_sqr() + (r2 - t.roots[0]).norm_sqr();
        if swap < keep {
            std::mem::swap(&mut r1, &mut r2);
        }
    }
    let a1 = r1.arg();
    let a2 = r2.arg();
    match prev.as_ref() {
        Some(t) => {
            paint_arc(cols, res, t.args[0], a1);
            paint_arc(cols, res, t.args[1], a2);
        }
        None => {
            cols[pixel_of(a1, res)] = true;
            cols[pixel_of(a2, res)] = true;
        }
    }
    *prev = Some(BranchPair { roots: [r1, r2], args: [a1, a2] });
}

/// Mark every pixel on the short arc from angle a to angle b (both marked
/// regardless); skip the join when the step is implausibly large.
fn paint_arc(cols: &mut [bool], res: usize, a: f64, b: f64) {
    cols[pixel_of(a, res)] = true;
    cols[pixel_of(b, res)] = true;
    let mut d = b - a;
    while d > PI {
        d -= 2.0 * PI;
    }
    while d < -PI {
        d += 2.0 * PI;
    }
    if d.abs() > FILL_THRESHOLD {
        return;
    }
    let px = 2.0 * PI / res as f64;
    let steps = (d.abs() / px).ceil() as usize + 1;
    for s in 1..steps {
        let theta = a + d * s as f64 / steps as f64;
        cols[pixel_of(theta, res)] = true;
    }
}

/// Sample the fiber equation and bucket marks by θ₂ row. Rows are
/// independent, so they run in parallel and merge by OR.
fn sample_rows(n: u8, res: usize) -> Vec<(usize, Vec<bool>)> {
    match n {
        1 => {
            let a_count = (4 * res).clamp(512, 2048);
            let m_count = 1536usize;
            let log_range = 6.0f64;
            (0..a_count)
                .into_par_iter()
                .map(|k| {
                    let theta2 = offset_angle(k, a_count);
                    let mut cols = vec![false; res];
                    let mut prev: Option<BranchPair> = None;
                    for j in 0..m_count {
                        let l = -log_range
                            + 2.0 * log_range * j as f64 / (m_count - 1) as f64;
                        let u2 = Complex64::from_polar(l.exp(), theta2);
                        // (u₁ + u₂) u₁ u₂ + 1 = 0: quadratic in u₁.
                        let (r1, r2) = quadratic_roots(u2, u2 * u2, Complex64::new(1.0, 0.0));
                        advance_branches(&mut prev, r1, r2, &mut cols, res);
                    }
                    (pixel_of(theta2, res), cols)
                })
                .collect()
        }
        2 => {
            // Two free coordinates; θ₂ still pins the row, so the march
            // over the u₃ modulus is joined exactly as in the n = 1 case.
            let a2_count = (2 * res).clamp(192, 384);
            let m2_count = 10usize;
            let a3_count = 72usize;
            let m3_count = 48usize;
            let log_range = 4.0f64;
            (0..a2_count)
                .into_par_iter()
                .map(|k2| {
                    let theta2 = offset_angle(k2, a2_count);
                    let mut cols = vec![false; res];
                    for j2 in 0..m2_count {
                        let l2 = -log_range
                            + 2.0 * log_range * j2 as f64 / (m2_count - 1) as f64;
                        let u2 = Complex64::from_polar(l2.exp(), theta2);
                        for k3 in 0..a3_count {
                            let theta3 = offset_angle(k3, a3_count);
                            let mut prev: Option<BranchPair> = None;
                            for j3 in 0..m3_count {
                                let l3 = -log_range
                                    + 2.0 * log_range * j3 as f64 / (m3_count - 1) as f64;
                                let u3 = Complex64::from_polar(l3.exp(), theta3);
                                let p = u2 * u3;
                                let s = u2 + u3;
                                let (r1, r2) =
                                    quadratic_roots(p, s * p, Complex64::new(1.0, 0.0));
                                advance_branches(&mut prev, r1, r2, &mut cols, res);
                            }
                        }
                    }
                    (pixel_of(theta2, res), cols)
                })
                .collect()
        }
        _ => unreachable!("validated by coamoeba_raster"),
    }
}

/// Exact 2D hulls of the lifted zonotopes (projected to the (θ₁, θ₂)
/// plane for n = 2), as counterclockwise vertex lists in π units.
fn lifted_hulls_2d(n: u8) -> Vec<Vec<(Rational, Rational)>> {
    lift_zonotopes(n)
        .iter()
        .map(|z| {
            let pts = subset_sums_2d(z);
            convex_hull(pts)
        })
        .collect()
}

/// All 2^k points base + Σ_{i∈S} g_i, projected to the first two axes.
fn subset_sums_2d(z: &Zonotope) -> Vec<(Rational, Rational)> {
    let k = z.generators().len();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u32..(1 << k) {
        let mut x = z.base()[0].clone();
        let mut y = z.base()[1].clone();
        for (i, g) in z.generators().iter().enumerate() {
            if mask & (1 << i) != 0 {
                x += &g[0];
                y += &g[1];
            }
        }
        out.push((x, y));
    }
    out
}

fn cross(
    o: &(Rational, Rational),
    a: &(Rational, Rational),
    b: &(Rational, Rational),
) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Monotone-chain hull over exact rationals, counterclockwise, no
/// collinear vertices retained.
fn convex_hull(mut pts: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(Rational, Rational)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<(Rational, Rational)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn to_f64_pt(p: &(Rational, Rational)) -> (f64, f64) {
    (p.0.to_f64().unwrap(), p.1.to_f64().unwrap())
}

/// Wrap a π-unit coordinate to a pixel index.
fn wrap_pixel(coord_pi: f64, res: usize) -> usize {
    let frac = (coord_pi / 2.0).rem_euclid(1.0);
    ((frac * res as f64) as usize).min(res - 1)
}

/// Stamp the zonotope lift boundaries. Dense sampling along each edge
/// (quarter-pixel steps) marks a chain three pixels wide: wide enough to
/// keep 4-connected flood fill from leaking through, and to absorb stray
/// coamoeba sample pixels in the corner slivers where triangles and
/// hexagons meet, which would otherwise survive as one-pixel islands.
fn draw_outlines(classes: &mut [u8], res: usize, n: u8) {
    for hull in lifted_hulls_2d(n) {
        let m = hull.len();
        for i in 0..m {
            let (x0, y0) = to_f64_pt(&hull[i]);
            let (x1, y1) = to_f64_pt(&hull[(i + 1) % m]);
            let len_px = ((x1 - x0).hypot(y1 - y0) / 2.0) * res as f64;
            let steps = (len_px * 4.0).ceil().max(1.0) as usize;
            for s in 0..=steps {
                let t = s as f64 / steps as f64;
                let x = x0 + (x1 - x0) * t;
                let y = y0 + (y1 - y0) * t;
                let cx = wrap_pixel(x, res) as i64;
                let cy = wrap_pixel(y, res) as i64;
                for dy in -1..=1i64 {
                    for dx in -1..=1i64 {
                        let px = (cx + dx).rem_euclid(res as i64) as usize;
                        let py = (cy + dy).rem_euclid(res as i64) as usize;
                        classes[py * res + px] = CLASS_OUTLINE;
                    }
                }
            }
        }
        // Hull corners are the tiling junctions where several regions meet
        // at acute angles; draw them with a fatter pen so the sliver pixels
        // wedged between two edge chains join the skeleton instead of
        // surviving as isolated one-pixel islands. The sliver reaches pixel
        // width roughly a fixed number of pixels from the corner at any
        // resolution, so the radius needs a constant floor.
        let radius = (res as f64 / 64.0).max(8.0);
        for v in &hull {
            let (x, y) = to_f64_pt(v);
            stamp_disc(classes, res, x / 2.0 * res as f64, y / 2.0 * res as f64, radius, CLASS_OUTLINE);
        }
    }
}

/// Fill a disc of the given pixel radius, torus-wrapped.
fn stamp_disc(classes: &mut [u8], res: usize, cx: f64, cy: f64, radius: f64, class: u8) {
    let r = radius.ceil() as i64;
    for dy in -r..=r {
        for dx in -r..=r {
            let px = cx.floor() as i64 + dx;
            let py = cy.floor() as i64 + dy;
            let d2 = (px as f64 + 0.5 - cx).powi(2) + (py as f64 + 0.5 - cy).powi(2);
            if d2 <= radius * radius {
                let x = px.rem_euclid(res as i64) as usize;
                let y = py.rem_euclid(res as i64) as usize;
                classes[y * res + x] = class;
            }
        }
    }
}

/// Stamp the thimble points as small discs.
fn draw_markers(classes: &mut [u8], res: usize, n: u8) {
    let radius = ((res as f64) / 96.0).max(4.0);
    let m = i64::from(n) + 2;
    for index in 1..=(m as usize) {
        let pt = thimble_point(n, index);
        let cx = pt.coords()[0].to_f64().unwrap() / 2.0 * res as f64;
        let cy = pt.coords()[1].to_f64().unwrap() / 2.0 * res as f64;
        stamp_disc(classes, res, cx, cy, radius, CLASS_MARKER);
    }
}

/// Sizes of the 4-connected components of one class, torus topology
/// (rows and columns wrap), largest first.
fn component_sizes(classes: &[u8], res: usize, class: u8) -> Vec<usize> {
    let mut seen = vec![false; classes.len()];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..classes.len() {
        if seen[start] || classes[start] != class {
            continue;
        }
        let mut size = 0usize;
        seen[start] = true;
        stack.push(start);
        while let Some(idx) = stack.pop() {
            size += 1;
            let y = idx / res;
            let x = idx % res;
            let neighbors = [
                y * res + (x + 1) % res,
                y * res + (x + res - 1) % res,
                ((y + 1) % res) * res + x,
                ((y + res - 1) % res) * res + x,
            ];
            for &nb in &neighbors {
                if !seen[nb] && classes[nb] == class {
                    seen[nb] = true;
                    stack.push(nb);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Binary P6, θ₁ rightward and θ₂ upward (rows written top-down).
fn write_ppm(path: &Path, classes: &[u8], res: usize) -> std::io::Result<()> {
    let mut data = Vec::with_capacity(res * res * 3 + 32);
    data.extend_from_slice(format!("P6\n{res} {res}\n255\n").as_bytes());
    for row in (0..res).rev() {
        for col in 0..res {
            let c = classes[row * res + col];
            data.extend_from_slice(&PALETTE[c as usize]);
        }
    }
    std::fs::write(path, data)
}

/// Vector overlay of the same scene: torus frame, zonotope lift outlines,
/// thimble points. Coordinates in π units; shifted copies cover the wrap.
fn write_svg(path: &Path, n: u8) -> std::io::Result<()> {
    let mut svg = String::new();
    svg.push_str(concat!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 2 2\" ",
        "width=\"640\" height=\"640\">\n",
    ));
    svg.push_str("<rect x=\"0\" y=\"0\" width=\"2\" height=\"2\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.006\"/>\n");
    let offsets = [-2.0f64, 0.0, 2.0];
    for hull in lifted_hulls_2d(n) {
        let pts: Vec<(f64, f64)> = hull.iter().map(to_f64_pt).collect();
        for ox in offsets {
            for oy in offsets {
                let mut poly = String::from("<polygon points=\"");
                for (i, (x, y)) in pts.iter().enumerate() {
                    if i > 0 {
                        poly.push(' ');
                    }
                    // SVG y runs downward; flip into the torus square.
                    poly.push_str(&format!("{:.6},{:.6}", x + ox, 2.0 - (y + oy)));
                }
                poly.push_str("\" fill=\"none\" stroke=\"#2c62d0\" stroke-width=\"0.012\"/>\n");
                svg.push_str(&poly);
            }
        }
    }
    let m = i64::from(n) + 2;
    for index in 1..=(m as usize) {
        let pt = thimble_point(n, index);
        let x = pt.coords()[0].to_f64().unwrap();
        let y = pt.coords()[1].to_f64().unwrap();
        for ox in offsets {
            for oy in offsets {
                svg.push_str(&format!(
                    "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"0.035\" fill=\"#d02c2c\"/>\n",
                    x + ox,
                    2.0 - (y + oy)
                ));
            }
        }
    }
    svg.push_str("</svg>\n");
    std::fs::write(path, svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn scratch_dir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("hmskit-raster-{}-{tag}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        dir
    }

    #[test]
    fn raster_reproduces_the_six_triangle_figure() {
        let dir = scratch_dir("figure");
        let report = coamoeba_raster(1, 512, &dir.join("fig1")).unwrap();

        assert_eq!(report.dark_components, 6, "sizes: {:?}", report.dark_component_sizes);
        assert_eq!(report.light_components, 3, "sizes: {:?}", report.light_component_sizes);

        // The six triangles each tile 1/24 of the torus and the three
        // hexagons 1/4 each, so the coamoeba covers a quarter of the area.
        assert!(
            (report.area_fraction - 0.25).abs() < 0.02,
            "area fraction {}",
            report.area_fraction
        );
        let triangle = 512.0f64 * 512.0 / 24.0;
        for &size in &report.dark_component_sizes {
            assert!(
                (size as f64) > 0.5 * triangle && (size as f64) < 1.5 * triangle,
                "triangle size {size} vs expected {triangle}"
            );
        }
        let hexagon = 512.0f64 * 512.0 / 4.0;
        for &size in &report.light_component_sizes {
            assert!(
                (size as f64) > 0.8 * hexagon && (size as f64) < 1.2 * hexagon,
                "hexagon size {size} vs expected {hexagon}"
            );
        }

        let ppm = std::fs::read(&report.ppm_path).unwrap();
        assert!(ppm.starts_with(b"P6\n512 512\n255\n"));
        assert_eq!(ppm.len(), 15 + 512 * 512 * 3);
        let svg = std::fs::read_to_string(&report.svg_path).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("polygon"));
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn raster_corner_cases() {
        let dir = scratch_dir("corner");
        // Single pixel: everything collapses onto one pixel, no panic.
        let tiny = coamoeba_raster(1, 1, &dir.join("tiny")).unwrap();
        assert_eq!(tiny.resolution, 1);
        assert_eq!(
            tiny.dark_pixels + tiny.light_pixels + tiny.outline_pixels + tiny.marker_pixels,
            1
        );

        assert!(matches!(
            coamoeba_raster(1, 4097, &dir.join("big")),
            Err(CoamoebaError::ResolutionTooLarge { resolution: 4097 })
        ));
        assert!(matches!(
            coamoeba_raster(3, 64, &dir.join("n3")),
            Err(CoamoebaError::UnsupportedDimension { n: 3 })
        ));
        assert!(matches!(
            coamoeba_raster(1, 16, Path::new("/nonexistent-dir/fig")),
            Err(CoamoebaError::Io(_))
        ));

        // n = 2 smoke: the four-fold cover projects onto the square densely.
        let smoke = coamoeba_raster(2, 64, &dir.join("n2")).unwrap();
        assert!(smoke.dark_pixels > 0);
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn raster_output_is_deterministic() {
        let dir = scratch_dir("det");
        let a = coamoeba_raster(1, 96, &dir.join("a")).unwrap();
        let b = coamoeba_raster(1, 96, &dir.join("b")).unwrap();
        assert_eq!(
            std::fs::read(&a.ppm_path).unwrap(),
            std::fs::read(&b.ppm_path).unwrap()
        );
        assert_eq!(
            std::fs::read(&a.svg_path).unwrap(),
            std::fs::read(&b.svg_path).unwrap()
        );
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn dark_pixels_stay_clear_of_lifted_zonotope_interiors() {
        // Complement claim with a one-pixel margin: no coamoeba sample
        // pixel center sits a full pixel deep inside any lifted hexagon.
        let res = 256usize;
        let classes = build_classes(1, res);
        let hulls = lifted_hulls_2d(1);
        let h = rat(2, res as i64);
        let offsets = [rat_int(-2), rat_int(0), rat_int(2)];
        for row in 0..res {
            for col in 0..res {
                if classes[row * res + col] != CLASS_DARK {
                    continue;
                }
                let px = rat(2 * col as i64 + 1, res as i64);
                let py = rat(2 * row as i64 + 1, res as i64);
                for hull in &hulls {
                    for ox in &offsets {
                        for oy in &offsets {
                            let p = (&px + ox, &py + oy);
                            assert!(
                                !deep_inside(hull, &p, &h),
                                "dark pixel ({col},{row}) is a pixel deep in a lift"
                            );
                        }
                    }
                }
            }
        }
    }

    /// p lies at sup-distance > h inside the hull: every edge sees it at
    /// cross margin at least h·‖edge‖₁, so the whole pixel-sized ball does.
    fn deep_inside(hull: &[(Rational, Rational)], p: &(Rational, Rational), h: &Rational) -> bool {
        let m = hull.len();
        for i in 0..m {
            let v = &hull[i];
            let w = &hull[(i + 1) % m];
            let d = (&w.0 - &v.0, &w.1 - &v.1);
            let margin = (d.0.abs() + d.1.abs()) * h;
            let c = cross(v, w, p);
            if c < margin {
                return false;
            }
        }
        true
    }

    #[test]
    fn hulls_are_hexagons_with_the_expected_vertices() {
        let hulls = lifted_hulls_2d(1);
        assert_eq!(hulls.len(), 3);
        for hull in &hulls {
            assert_eq!(hull.len(), 6, "lifted zonotope projects to a hexagon");
        }
        // The lift centered at the origin has vertex (2/3, −1/3)π.
        assert!(hulls[2].contains(&(rat(2, 3), rat(-1, 3))));
    }

    #[test]
    fn hull_orientation_is_counterclockwise() {
        for hull in lifted_hulls_2d(1) {
            let m = hull.len();
            for i in 0..m {
                let c = cross(&hull[i], &hull[(i + 1) % m], &hull[(i + 2) % m]);
                assert!(c.is_positive(), "hull must turn left at every vertex");
            }
        }
    }
}
