//! SVG rendering of rational-plane constructions.
//!
//! Coordinates are rounded to 6 decimals for drawing only. The y axis is
//! flipped so the figure reads like the usual Cartesian picture.

use std::fmt::Write;

use skewratio::{Construction, FieldElement, PlaneLine, PlanePoint};

fn real(x: &FieldElement) -> Option<f64> {
    match x {
        // `+ 0.0` turns -0.0 into 0.0 so it never prints as "-0.000000"
        FieldElement::Rational(r) => Some(r.to_f64_lossy() + 0.0),
        _ => None,
    }
}

fn point(p: &PlanePoint) -> Option<(f64, f64)> {
    Some((real(&p.x)?, real(&p.y)?))
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn fit(points: &[(f64, f64)]) -> Frame {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in points {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let pad = 0.15 * (x1 - x0).max(y1 - y0).max(1.0);
        Frame {
            x0: x0 - pad,
            x1: x1 + pad,
            y0: y0 - pad,
            y1: y1 + pad,
        }
    }

    fn span(&self) -> f64 {
        (self.x1 - self.x0).max(self.y1 - self.y0)
    }

    /// The visible segment of a line.
    fn clip(&self, line: &PlaneLine) -> Option<[(f64, f64); 2]> {
        match line {
            PlaneLine::Vertical(c) => {
                let c = real(c)?;
                Some([(c, self.y0), (c, self.y1)])
            }
            PlaneLine::Sloped { slope, intercept } => {
                let (m, b) = (real(slope)?, real(intercept)?);
                if m.abs() <= 1.0 {
                    Some([(self.x0, self.x0 * m + b), (self.x1, self.x1 * m + b)])
                } else {
                    Some([((self.y0 - b) / m, self.y0), ((self.y1 - b) / m, self.y1)])
                }
            }
        }
    }
}

/// Draw `c`, or `None` when its coordinates are not rational.
pub fn render(c: &Construction) -> Option<String> {
    let labeled = [
        ("O", &c.o),
        ("I", &c.i),
        ("A", &c.a),
        ("B", &c.b),
        ("B1", &c.aux),
        ("P1", &c.p1),
        ("C", &c.result),
    ];
    let coords = labeled
        .iter()
        .map(|(_, p)| point(p))
        .collect::<Option<Vec<_>>>()?;
    let frame = Frame::fit(&coords);
    let span = frame.span();
    let (stroke, radius, font) = (span / 300.0, span / 120.0, span / 30.0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        frame.x0,
        0.0 - frame.y1,
        frame.x1 - frame.x0,
        frame.y1 - frame.y0
    );
    let dashed = format!(r#" stroke-dasharray="{:.6} {:.6}""#, 4.0 * stroke, 4.0 * stroke);
    let lines = [
        ("OI", &c.base, "black", ""),
        ("reference", &c.reference, "gray", dashed.as_str()),
        ("first", &c.first, "steelblue", ""),
        ("second", &c.second, "seagreen", ""),
        ("last", &c.last, "firebrick", ""),
    ];
    for (id, line, color, extra) in lines {
        let [(ax, ay), (bx, by)] = frame.clip(line)?;
        let _ = writeln!(
            out,
            r#"  <path id="{id}" d="M {ax:.6} {:.6} L {bx:.6} {:.6}" stroke="{color}" stroke-width="{stroke:.6}" fill="none"{extra}/>"#,
            0.0 - ay,
            0.0 - by
        );
    }
    for ((label, _), (x, y)) in labeled.iter().zip(&coords) {
        let _ = writeln!(
            out,
            r#"  <circle cx="{x:.6}" cy="{:.6}" r="{radius:.6}"/><text x="{:.6}" y="{:.6}" font-size="{font:.6}">{label}</text>"#,
            0.0 - y,
            x + radius,
            0.0 - y - radius
        );
    }
    out.push_str("</svg>\n");
    Some(out)
}
