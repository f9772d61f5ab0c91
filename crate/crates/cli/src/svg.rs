use std::fmt::Write;

use eulerint_core::ClothoidPoint;

/// A polyline of the spiral plus a circle at the pole. The viewport is the
/// bounding box of both with a 5% margin; y points up.
pub fn render(points: &[ClothoidPoint], pole: (f64, f64)) -> String {
    let xs = points.iter().map(|p| p.x).chain(std::iter::once(pole.0));
    let ys = points.iter().map(|p| p.y).chain(std::iter::once(pole.1));
    let (min_x, max_x) = bounds(xs);
    let (min_y, max_y) = bounds(ys);
    let width = (max_x - min_x).max(f64::MIN_POSITIVE);
    let height = (max_y - min_y).max(f64::MIN_POSITIVE);
    let margin = 0.05 * width.max(height);
    let view_x = min_x - margin;
    // SVG y grows downward, so the curve is drawn with y negated.
    let view_y = -max_y - margin;
    let view_w = width + 2.0 * margin;
    let view_h = height + 2.0 * margin;
    let stroke = 0.002 * view_w.max(view_h);

    let mut path = String::new();
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            path.push(' ');
        }
        let _ = write!(path, "{},{}", p.x, 0.0 - p.y);
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view_x} {view_y} {view_w} {view_h}">"#
    );
    let _ = writeln!(
        out,
        r#"  <polyline fill="none" stroke="black" stroke-width="{stroke}" points="{path}"/>"#
    );
    let _ = writeln!(
        out,
        r#"  <circle cx="{}" cy="{}" r="{}" fill="red"/>"#,
        pole.0,
        0.0 - pole.1,
        0.01 * view_w
    );
    out.push_str("</svg>\n");
    out
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}
