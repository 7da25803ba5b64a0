//! SVG figures: the Farey tessellation in the Poincaré disk, and a lattice
//! line with its cutting sequences.

use std::f64::consts::FRAC_PI_2;
use std::fmt::Write;

use modlinks::cutting::{trace_line, LineFamily};
use modlinks::farey::farey_path;
use modlinks::{Error, Letter, Slope};

const DISK_RADIUS: f64 = 300.0;
const DISK_MARGIN: f64 = 40.0;
/// Subdivision depth of the background tessellation.
const TESSELLATION_DEPTH: u32 = 6;
/// Largest `max(p, q)` drawn by [`lattice_line_svg`].
pub const MAX_LINE_SCALE: i64 = 60;
const CELL: f64 = 40.0;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Boundary angle of a slope. Puts the base triangle's centre at the
/// origin with `1/0` at the top.
fn boundary_angle(s: Slope) -> f64 {
    if s.is_infinite() {
        return FRAC_PI_2;
    }
    -2.0 * (3f64.sqrt() / 2.0).atan2(s.to_f64() - 0.5) + FRAC_PI_2
}

fn disk_point(theta: f64) -> (f64, f64) {
    (theta.cos(), theta.sin())
}

/// Unit-disk coordinates to SVG user space (y downwards).
fn screen((x, y): (f64, f64)) -> (f64, f64) {
    let c = DISK_RADIUS + DISK_MARGIN;
    (c + DISK_RADIUS * x, c - DISK_RADIUS * y)
}

/// SVG path segment along the hyperbolic geodesic from `a` to `b`, starting
/// at the current point `a`.
fn geodesic_segment(a: Slope, b: Slope) -> String {
    let (ta, tb) = (boundary_angle(a), boundary_angle(b));
    let (pa, pb) = (disk_point(ta), disk_point(tb));
    let (sx, sy) = screen(pb);
    let half = ((ta - tb) / 2.0).sin().abs();
    let cross = pa.0 * pb.1 - pa.1 * pb.0;
    if cross.abs() < 1e-12 {
        return format!("L {sx:.3} {sy:.3}");
    }
    // the orthogonal circle has radius tan(Δθ/2)
    let r = DISK_RADIUS * half / (1.0 - half * half).sqrt();
    // centre beyond the chord, away from the origin; y is flipped on screen
    let sweep = if cross > 0.0 { 0 } else { 1 };
    format!("A {r:.3} {r:.3} 0 0 {sweep} {sx:.3} {sy:.3}")
}

fn move_to(s: Slope) -> String {
    let (x, y) = screen(disk_point(boundary_angle(s)));
    format!("M {x:.3} {y:.3}")
}

type Vector = (i64, i64);

fn slope_of((p, q): Vector) -> Slope {
    let (p, q) = if q < 0 || (q == 0 && p < 0) {
        (-p, -q)
    } else {
        (p, q)
    };
    Slope::new(p, q).expect("primitive lattice vector")
}

/// Farey edges reached from the base triangle within `depth` steps.
fn tessellation_edges(depth: u32) -> Vec<(Slope, Slope)> {
    fn grow(u: Vector, v: Vector, opposite: Vector, depth: u32, out: &mut Vec<(Slope, Slope)>) {
        if depth == 0 {
            return;
        }
        let sum = (u.0 + v.0, u.1 + v.1);
        let diff = (u.0 - v.0, u.1 - v.1);
        let w = if slope_of(sum) == slope_of(opposite) {
            diff
        } else {
            sum
        };
        out.push((slope_of(u), slope_of(w)));
        out.push((slope_of(w), slope_of(v)));
        grow(u, w, v, depth - 1, out);
        grow(w, v, u, depth - 1, out);
    }
    let (zero, one, inf) = ((0, 1), (1, 1), (1, 0));
    let mut edges = vec![
        (slope_of(zero), slope_of(one)),
        (slope_of(one), slope_of(inf)),
        (slope_of(inf), slope_of(zero)),
    ];
    grow(zero, one, inf, depth, &mut edges);
    grow(one, inf, zero, depth, &mut edges);
    grow(inf, zero, one, depth, &mut edges);
    edges
}

/// The tessellation with the Farey path to `target` filled in, one labelled
/// `path-triangle` element per triangle.
pub fn farey_path_svg(target: Slope) -> Result<String, Error> {
    let path = farey_path(target)?;
    let size = 2.0 * (DISK_RADIUS + DISK_MARGIN);
    let c = DISK_RADIUS + DISK_MARGIN;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(out, "<title>Farey path to {target}</title>");
    let _ = writeln!(
        out,
        r#"<circle class="boundary" cx="{c}" cy="{c}" r="{DISK_RADIUS}" fill="none" stroke="black" stroke-width="1.5"/>"#
    );
    for (i, tri) in path.triangles().iter().enumerate() {
        let [a, b, cc] = tri.vertices();
        let d = format!(
            "{} {} {} {} Z",
            move_to(a),
            geodesic_segment(a, b),
            geodesic_segment(b, cc),
            geodesic_segment(cc, a)
        );
        let shade = 0.25 + 0.5 * (i as f64 + 1.0) / path.len() as f64;
        let _ = writeln!(
            out,
            r##"<path class="path-triangle" data-index="{}" data-vertices="{a} {b} {cc}" d="{d}" fill="#d95f02" fill-opacity="{shade:.3}" stroke="none"><title>{}</title></path>"##,
            i + 1,
            escape(&tri.to_string())
        );
    }
    let _ = writeln!(
        out,
        r##"<g class="tessellation" fill="none" stroke="#555" stroke-width="0.6">"##
    );
    for (a, b) in tessellation_edges(TESSELLATION_DEPTH) {
        let _ = writeln!(
            out,
            r#"<path d="{} {}"/>"#,
            move_to(a),
            geodesic_segment(a, b)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<g class="vertex-labels" font-family="sans-serif" font-size="13" text-anchor="middle">"#
    );
    for v in path.vertices() {
        let theta = boundary_angle(v);
        let (x, y) = screen((1.07 * theta.cos(), 1.07 * theta.sin()));
        let _ = writeln!(
            out,
            r#"<text class="vertex-label" x="{x:.3}" y="{:.3}">{v}</text>"#,
            y + 4.0
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

/// One period of the line of slope `p/q` through the triangulated lattice,
/// with a `crossing` label per A/B crossing and a `turn` label per triangle.
pub fn lattice_line_svg(s: Slope) -> Result<String, Error> {
    if s.p().max(s.q()) > MAX_LINE_SCALE {
        return Err(Error::OutOfRange(format!(
            "{s}: svg-line draws slopes with max(p, q) ≤ {MAX_LINE_SCALE}"
        )));
    }
    let trace = trace_line(s)?;
    let (p, q) = (s.p(), s.q());
    let (width, height) = ((q + 2) as f64 * CELL, (p + 2) as f64 * CELL);
    let at = |x: f64, y: f64| (CELL * (x + 1.0), height - CELL * (y + 1.0));
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "<title>Cutting sequence of slope {s}</title>");

    let _ = writeln!(
        out,
        r##"<g class="lattice" stroke="#999" stroke-width="1" fill="none">"##
    );
    let line = |out: &mut String, class: &str, (x1, y1): (f64, f64), (x2, y2): (f64, f64)| {
        let _ = writeln!(
            out,
            r#"<line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#
        );
    };
    for k in 0..=q {
        line(
            &mut out,
            "vertical",
            at(k as f64, 0.0),
            at(k as f64, p as f64),
        );
    }
    for m in 0..=p {
        line(
            &mut out,
            "horizontal",
            at(0.0, m as f64),
            at(q as f64, m as f64),
        );
    }
    for c in -q..=p {
        let x0 = 0.max(-c) as f64;
        let x1 = q.min(p - c) as f64;
        if x0 < x1 {
            line(
                &mut out,
                "diagonal",
                at(x0, x0 + c as f64),
                at(x1, x1 + c as f64),
            );
        }
    }
    let _ = writeln!(out, "</g>");

    // drawn slightly above the lattice points it passes through
    let lift = 0.06;
    let (x1, y1) = at(0.0, lift);
    let (x2, y2) = at(q as f64, p as f64 + lift);
    let _ = writeln!(
        out,
        r##"<line class="cutting-line" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#1b9e77" stroke-width="2"/>"##
    );

    let slope = p as f64 / q as f64;
    let _ = writeln!(
        out,
        r#"<g font-family="sans-serif" font-size="14" text-anchor="middle">"#
    );
    for (i, c) in trace.crossings.iter().enumerate() {
        let letter = match c.family {
            LineFamily::Vertical => "A",
            LineFamily::Horizontal => "B",
            LineFamily::Diagonal => continue,
        };
        let (x, y) = at(c.x, slope * c.x + lift);
        let _ = writeln!(
            out,
            r##"<text class="crossing" data-index="{}" x="{:.3}" y="{:.3}" fill="#7570b3">{letter}</text>"##,
            i + 1,
            x + 9.0,
            y - 6.0
        );
    }
    for (i, t) in trace.turns.iter().enumerate() {
        let cx = t.triangle.iter().map(|v| v.0 as f64).sum::<f64>() / 3.0;
        let cy = t.triangle.iter().map(|v| v.1 as f64).sum::<f64>() / 3.0;
        let (x, y) = at(cx, cy);
        let letter = match t.letter {
            Letter::L => "L",
            Letter::R => "R",
        };
        let _ = writeln!(
            out,
            r##"<text class="turn" data-index="{}" x="{x:.3}" y="{:.3}" fill="#d95f02">{letter}</text>"##,
            i + 1,
            y + 5.0
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
