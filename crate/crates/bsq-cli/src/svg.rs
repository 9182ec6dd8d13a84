//! Deterministic SVG plots of one- and two-dimensional polytopes with
//! their interior lattice points. Pixel coordinates are computed in
//! exact rational arithmetic (40 px per lattice unit) and rounded to
//! hundredths, so identical input always produces identical bytes.

use bsq_core::polytope::{DelzantPolytope, LatticePoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt::Write as _;

#[derive(Debug, thiserror::Error)]
#[error("svg rendering supports dimensions 1 and 2, got {dim}")]
pub struct SvgUnsupported {
    pub dim: usize,
}

const SCALE: i64 = 40;
const MARGIN: i64 = 40;
const POINT_RADIUS: i64 = 4;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Round a rational pixel coordinate to hundredths, exactly.
fn fmt_px(r: &BigRational) -> String {
    let cents: BigInt = (r * rat(100)).round().to_integer();
    let sign = if cents.is_negative() { "-" } else { "" };
    let a = cents.abs();
    let whole: BigInt = &a / 100;
    let frac: BigInt = &a % 100;
    if frac.is_zero() {
        format!("{}{}", sign, whole)
    } else {
        format!("{}{}.{:02}", sign, whole, frac)
    }
}

/// Counterclockwise boundary order of a two-dimensional vertex set.
fn boundary_cycle(vertices: &[Vec<BigRational>]) -> Vec<&Vec<BigRational>> {
    fn cross(o: &[BigRational], a: &[BigRational], b: &[BigRational]) -> BigRational {
        (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
    }
    let mut lower: Vec<&Vec<BigRational>> = Vec::new();
    for p in vertices {
        while lower.len() >= 2
            && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= BigRational::zero()
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<&Vec<BigRational>> = Vec::new();
    for p in vertices.iter().rev() {
        while upper.len() >= 2
            && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= BigRational::zero()
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.into_iter().chain(upper).collect()
}

/// Render the polytope outline, origin axes, and one filled circle per
/// supplied lattice point.
pub fn render_svg(
    p: &DelzantPolytope,
    points: &[LatticePoint],
) -> Result<String, SvgUnsupported> {
    if p.dim() > 2 {
        return Err(SvgUnsupported { dim: p.dim() });
    }
    // Domain box including the origin, so both axes are visible.
    let coord = |v: &[BigRational], i: usize| {
        if i < v.len() { v[i].clone() } else { BigRational::zero() }
    };
    let mut min_x = BigRational::zero();
    let mut max_x = BigRational::zero();
    let mut min_y = BigRational::zero();
    let mut max_y = BigRational::zero();
    for v in p.vertices() {
        let x = coord(v, 0);
        let y = coord(v, 1);
        if x < min_x {
            min_x = x.clone();
        }
        if x > max_x {
            max_x = x;
        }
        if y < min_y {
            min_y = y.clone();
        }
        if y > max_y {
            max_y = y;
        }
    }
    let width = (&max_x - &min_x) * rat(SCALE) + rat(2 * MARGIN);
    let height = (&max_y - &min_y) * rat(SCALE) + rat(2 * MARGIN);
    let px = |x: &BigRational| fmt_px(&((x - &min_x) * rat(SCALE) + rat(MARGIN)));
    let py = |y: &BigRational| fmt_px(&((&max_y - y) * rat(SCALE) + rat(MARGIN)));

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = fmt_px(&width),
        h = fmt_px(&height),
    );
    // Origin axes underneath everything else.
    let zero = BigRational::zero();
    let _ = writeln!(
        out,
        "  <line x1=\"0\" y1=\"{y}\" x2=\"{w}\" y2=\"{y}\" stroke=\"#999999\" stroke-width=\"1\"/>",
        y = py(&zero),
        w = fmt_px(&width),
    );
    let _ = writeln!(
        out,
        "  <line x1=\"{x}\" y1=\"0\" x2=\"{x}\" y2=\"{h}\" stroke=\"#999999\" stroke-width=\"1\"/>",
        x = px(&zero),
        h = fmt_px(&height),
    );
    match p.dim() {
        1 => {
            let lo = p.vertices().iter().map(|v| v[0].clone()).min().unwrap();
            let hi = p.vertices().iter().map(|v| v[0].clone()).max().unwrap();
            let _ = writeln!(
                out,
                "  <line x1=\"{x1}\" y1=\"{y}\" x2=\"{x2}\" y2=\"{y}\" stroke=\"#2563eb\" stroke-width=\"2\"/>",
                x1 = px(&lo),
                x2 = px(&hi),
                y = py(&zero),
            );
        }
        _ => {
            let cycle = boundary_cycle(p.vertices());
            let pts: Vec<String> =
                cycle.iter().map(|v| format!("{},{}", px(&v[0]), py(&v[1]))).collect();
            let _ = writeln!(
                out,
                "  <polygon points=\"{}\" fill=\"none\" stroke=\"#2563eb\" stroke-width=\"2\"/>",
                pts.join(" "),
            );
        }
    }
    for q in points {
        let x = BigRational::from_integer(q.coords[0].clone());
        let y = if q.coords.len() > 1 {
            BigRational::from_integer(q.coords[1].clone())
        } else {
            BigRational::zero()
        };
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#dc2626\"/>",
            px(&x),
            py(&y),
            POINT_RADIUS,
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coords: &[i64]) -> Vec<BigRational> {
        coords.iter().map(|&n| rat(n)).collect()
    }

    fn poly(points: &[&[i64]]) -> DelzantPolytope {
        DelzantPolytope::from_vertices(points.iter().map(|p| ip(p)).collect()).unwrap()
    }

    #[test]
    fn triangle_has_21_circles() {
        let p = poly(&[&[0, 0], &[8, 0], &[0, 8]]);
        let pts = p.interior_lattice_points();
        let svg = render_svg(&p, &pts).unwrap();
        assert_eq!(svg.matches("<circle").count(), 21);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches("<line").count(), 2);
        // 8 units by 8 units plus two 40 px margins.
        assert!(svg.contains("width=\"400\" height=\"400\""));
    }

    #[test]
    fn unit_square_has_no_circles() {
        let p = poly(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        let svg = render_svg(&p, &p.interior_lattice_points()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 0);
    }

    #[test]
    fn segment_renders_on_a_line() {
        let p = poly(&[&[0], &[3]]);
        let svg = render_svg(&p, &p.interior_lattice_points()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("<line").count(), 3);
        assert_eq!(svg.matches("<polygon").count(), 0);
    }

    #[test]
    fn byte_stability() {
        let p = poly(&[&[0, 0], &[8, 0], &[0, 8]]);
        let pts = p.interior_lattice_points();
        assert_eq!(render_svg(&p, &pts).unwrap(), render_svg(&p, &pts).unwrap());
    }

    #[test]
    fn three_dimensional_refused() {
        let p = poly(&[
            &[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1],
            &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1],
        ]);
        assert!(render_svg(&p, &[]).is_err());
    }

    #[test]
    fn fractional_vertices_round_to_cents() {
        let p = DelzantPolytope::from_vertices(vec![
            vec![BigRational::new(1.into(), 3.into()), rat(0)],
            vec![rat(2), rat(0)],
            vec![rat(2), rat(2)],
        ])
        .unwrap();
        let svg = render_svg(&p, &[]).unwrap();
        // The box is anchored at the origin, so x = 1/3 maps to
        // 40 + 40/3 px, rounded to hundredths.
        assert!(svg.contains("53.33,"), "fractional x rounded to cents: {}", svg);
    }
}
