//! SVG wire diagrams.
//!
//! Nails sit on a horizontal line. The wire leaves a hook above the board and
//! wraps each nail in turn over the top: clockwise (entering from the left)
//! for `+j`, counter-clockwise (entering from the right) for `-j`. Repeat
//! visits to a nail use a wider loop, and each later strand is drawn over the
//! earlier ones. Coordinates are integers, so output is byte-deterministic.

use std::fmt::{self, Write};

use phang_core::Word;

pub const MAX_RENDER_NAILS: u8 = 16;

const SPACING: i64 = 80;
const MARGIN: i64 = 60;
const BASE_RADIUS: i64 = 12;
const RADIUS_STEP: i64 = 6;
const NAIL_RADIUS: i64 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RenderError {
    ZeroWord,
    TooManyNails { n: u8, max: u8 },
}

impl fmt::Display for RenderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RenderError::ZeroWord => f.write_str("nothing to draw for the empty word"),
            RenderError::TooManyNails { n, max } => {
                write!(f, "can draw at most {max} nails, word uses nail {n}")
            }
        }
    }
}

impl std::error::Error for RenderError {}

/// Renders `word` on nails `1..=max nail used`.
pub fn render_svg(word: &Word) -> Result<String, RenderError> {
    if word.is_empty() {
        return Err(RenderError::ZeroWord);
    }
    let n = word
        .letters()
        .iter()
        .map(|l| l.nail().index())
        .max()
        .unwrap_or(0);
    if n > MAX_RENDER_NAILS {
        return Err(RenderError::TooManyNails {
            n,
            max: MAX_RENDER_NAILS,
        });
    }

    let mut visits = vec![0i64; n as usize + 1];
    let mut radii = Vec::with_capacity(word.len());
    for l in word.letters() {
        let j = l.nail().index() as usize;
        radii.push(BASE_RADIUS + RADIUS_STEP * visits[j]);
        visits[j] += 1;
    }
    let max_r = radii.iter().copied().max().unwrap_or(BASE_RADIUS);

    let x = |j: u8| MARGIN + SPACING * (j as i64 - 1);
    let width = 2 * MARGIN + SPACING * (n as i64 - 1);
    let hook = (width / 2, 20);
    let row = hook.1 + max_r + 60;
    let height = row + 50;

    let mut d = format!("M {} {}", hook.0, hook.1);
    for (l, r) in word.letters().iter().zip(&radii) {
        let cx = x(l.nail().index());
        let (from, to, sweep) = if l.is_positive() {
            (cx - r, cx + r, 1)
        } else {
            (cx + r, cx - r, 0)
        };
        let _ = write!(d, " L {from} {row} A {r} {r} 0 0 {sweep} {to} {row}");
    }
    let _ = write!(d, " L {} {}", hook.0, hook.1);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, "<title>{word}</title>");
    let _ = writeln!(
        svg,
        r#"<line x1="{}" y1="{row}" x2="{}" y2="{row}" stroke="gray" stroke-width="1"/>"#,
        MARGIN / 2,
        width - MARGIN / 2
    );
    let _ = writeln!(
        svg,
        r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#,
        hook.0, hook.1
    );
    let _ = writeln!(
        svg,
        r#"<path d="{d}" fill="none" stroke="firebrick" stroke-width="2" stroke-linejoin="round"/>"#
    );
    for j in 1..=n {
        let _ = writeln!(
            svg,
            r#"<circle cx="{}" cy="{row}" r="{NAIL_RADIUS}" fill="black"/>"#,
            x(j)
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="14">{j}</text>"#,
            x(j),
            row + 30
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
