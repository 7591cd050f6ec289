//! Arc-diagram drawings of a meander.
//!
//! The line `l` is horizontal and positions `1..=N` sit on it at equal
//! spacing. Every arc of `m` is a semicircle on its side; the left anchor `0`
//! is the start of `m` (above the left end of `l`) and the right anchor
//! `N+1` is its end. Crossings are filled dots, touches hollow ones.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::meander::{Arc, MeanderCode, PointType, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RenderFormat {
    Ascii,
    Svg,
    Tikz,
}

impl RenderFormat {
    pub fn name(self) -> &'static str {
        match self {
            RenderFormat::Ascii => "ascii",
            RenderFormat::Svg => "svg",
            RenderFormat::Tikz => "tikz",
        }
    }
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            "tikz" => Ok(RenderFormat::Tikz),
            _ => Err(Error::Syntax {
                at: 0,
                msg: format!("unknown render format {s:?}"),
            }),
        }
    }
}

impl fmt::Display for RenderFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Draws a valid meander. Output depends only on the code.
pub fn render(code: &MeanderCode, format: RenderFormat) -> Result<String> {
    code.ensure_valid()?;
    Ok(match format {
        RenderFormat::Ascii => ascii(code),
        RenderFormat::Svg => svg(code),
        RenderFormat::Tikz => tikz(code),
    })
}

/// Nesting height of every arc on its side; an arc is one higher than the
/// tallest arc strictly inside it.
fn heights(arcs: &[Arc]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&i| arcs[i].right - arcs[i].left);
    let mut h = vec![0; arcs.len()];
    for &i in &order {
        let a = arcs[i];
        h[i] = 1 + order
            .iter()
            .filter(|&&j| {
                let b = arcs[j];
                j != i && b.side == a.side && a.left <= b.left && b.right <= a.right && b.right - b.left < a.right - a.left
            })
            .map(|&j| h[j])
            .max()
            .unwrap_or(0);
    }
    h
}

fn point_char(ty: PointType) -> char {
    match ty {
        PointType::Cross => 'x',
        PointType::Touch => 'o',
    }
}

const COL: usize = 4;

fn ascii(code: &MeanderCode) -> String {
    let n = code.len();
    let arcs = code.arcs();
    let h = heights(&arcs);
    let up = arcs.iter().zip(&h).filter(|(a, _)| a.side == Side::Up).map(|(_, &h)| h).max().unwrap_or(0);
    let down = arcs.iter().zip(&h).filter(|(a, _)| a.side == Side::Down).map(|(_, &h)| h).max().unwrap_or(0);
    let width = COL * (n + 1) + 1;
    let mut grid = vec![vec![' '; width]; up + down + 1];
    let base = up;

    for (arc, &height) in arcs.iter().zip(&h) {
        let row = match arc.side {
            Side::Up => base - height,
            Side::Down => base + height,
        };
        let (l, r) = (COL * arc.left, COL * arc.right);
        for c in l + 1..r {
            if grid[row][c] == ' ' {
                grid[row][c] = '-';
            }
        }
        grid[row][l] = '+';
        grid[row][r] = '+';
        let between: Vec<usize> = match arc.side {
            Side::Up => (row + 1..base).collect(),
            Side::Down => (base + 1..row).collect(),
        };
        for y in between {
            for c in [l, r] {
                grid[y][c] = if grid[y][c] == '-' { '+' } else { '|' };
            }
        }
    }

    let line = &mut grid[base];
    for cell in line.iter_mut().take(COL * n + 3).skip(2) {
        *cell = '-';
    }
    for (i, &ty) in code.types().iter().enumerate() {
        line[COL * (i + 1)] = point_char(ty);
    }
    line[0] = 's';
    line[COL * (n + 1)] = 'e';

    let mut out = String::new();
    for row in grid {
        let text: String = row.into_iter().collect();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

const UNIT: usize = 40;
const MARGIN: usize = 20;

fn svg(code: &MeanderCode) -> String {
    let n = code.len();
    let arcs = code.arcs();
    let radius = |a: &Arc| (a.right - a.left) * UNIT / 2;
    let up = arcs.iter().filter(|a| a.side == Side::Up).map(radius).max().unwrap_or(0);
    let down = arcs.iter().filter(|a| a.side == Side::Down).map(radius).max().unwrap_or(0);
    let width = UNIT * (n + 1) + 2 * MARGIN;
    let height = up + down + 2 * MARGIN;
    let y = MARGIN + up;
    let x = |p: usize| MARGIN + UNIT * p;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "  <title>{code}</title>");
    let _ = writeln!(
        out,
        r#"  <line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black" stroke-width="2"/>"#,
        x(0) + UNIT / 2,
        x(n + 1) - UNIT / 2
    );
    for a in &arcs {
        let r = radius(a);
        let sweep = match a.side {
            Side::Up => 1,
            Side::Down => 0,
        };
        let _ = writeln!(
            out,
            r#"  <path d="M {} {y} A {r} {r} 0 0 {sweep} {} {y}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
            x(a.left),
            x(a.right)
        );
    }
    for (i, &ty) in code.types().iter().enumerate() {
        let fill = match ty {
            PointType::Cross => "black",
            PointType::Touch => "white",
        };
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{y}" r="4" fill="{fill}" stroke="black"/>"#,
            x(i + 1)
        );
    }
    for (p, label) in [(0, "p1"), (n + 1, "p3")] {
        let _ = writeln!(
            out,
            r#"  <rect x="{}" y="{}" width="6" height="6" fill="steelblue"/>"#,
            x(p) - 3,
            y - 3
        );
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="10" text-anchor="middle">{label}</text>"#,
            x(p),
            y + 16
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Half of an integer as an exact decimal.
fn half(v: usize) -> String {
    if v.is_multiple_of(2) {
        (v / 2).to_string()
    } else {
        format!("{}.5", v / 2)
    }
}

fn tikz(code: &MeanderCode) -> String {
    let n = code.len();
    let mut out = String::new();
    out.push_str("\\documentclass[tikz]{standalone}\n\\begin{document}\n");
    let _ = writeln!(out, "% {}", if code.is_empty() { "empty meander".to_string() } else { code.to_string() });
    out.push_str("\\begin{tikzpicture}[x=1cm,y=1cm]\n");
    let _ = writeln!(out, "  \\draw[thick] (0.5,0) -- ({}.5,0);", n);
    for a in code.arcs() {
        let end = match a.side {
            Side::Up => 0,
            Side::Down => 360,
        };
        let _ = writeln!(
            out,
            "  \\draw[blue] ({},0) arc[start angle=180, end angle={end}, radius={}];",
            a.left,
            half(a.right - a.left)
        );
    }
    for (i, &ty) in code.types().iter().enumerate() {
        let style = match ty {
            PointType::Cross => "fill=black",
            PointType::Touch => "fill=white",
        };
        let _ = writeln!(out, "  \\draw[{style}] ({},0) circle (2pt);", i + 1);
    }
    let _ = writeln!(out, "  \\node[below] at (0,0) {{$p_1$}};");
    let _ = writeln!(out, "  \\node[below] at ({},0) {{$p_3$}};", n + 1);
    out.push_str("\\end{tikzpicture}\n\\end{document}\n");
    out
}
