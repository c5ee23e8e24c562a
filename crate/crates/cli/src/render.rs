//! ASCII and SVG pictures of mosaics.

use std::fmt::Write;

use toric_core::tile::{Side, Tile};
use toric_core::Mosaic;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    /// Tile edge in pixels; SVG only, always positive.
    pub cell_size: u32,
    pub show_grid: bool,
    /// Draw the closure arcs and their hidden crossings around the grid.
    pub highlight_hidden: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { format: Format::Ascii, cell_size: 40, show_grid: false, highlight_hidden: false }
    }
}

pub fn render(m: &Mosaic, opts: &RenderOptions) -> String {
    match opts.format {
        Format::Ascii => ascii(m, opts.show_grid),
        Format::Svg => svg(m, opts),
    }
}

/// Three rows of three characters; the edge midpoints sit at the middle of
/// each side of the block.
fn glyph(t: Tile) -> [&'static str; 3] {
    match t.kind() {
        0 => ["   ", "   ", "   "],
        1 => ["   ", "-. ", " | "],
        2 => ["   ", " .-", " | "],
        3 => [" | ", " '-", "   "],
        4 => [" | ", "-' ", "   "],
        5 => ["   ", "---", "   "],
        6 => [" | ", " | ", " | "],
        7 => [" \\ ", "\\ \\", " \\ "],
        8 => [" / ", "/ /", " / "],
        9 => [" | ", "-|-", " | "],
        _ => [" | ", "---", " | "],
    }
}

fn ascii(m: &Mosaic, grid: bool) -> String {
    let n = m.size();
    let mut out = String::new();
    let rule = |out: &mut String| {
        if grid {
            out.push('+');
            for _ in 0..n {
                out.push_str("---+");
            }
            out.push('\n');
        }
    };
    rule(&mut out);
    for r in 0..n {
        for line in 0..3 {
            if grid {
                out.push('|');
            }
            for c in 0..n {
                out.push_str(glyph(m.get(r, c))[line]);
                if grid {
                    out.push('|');
                }
            }
            out.push('\n');
        }
        rule(&mut out);
    }
    out
}

struct Canvas {
    body: String,
    s: f64,
    /// Offset of the grid's top-left corner.
    x0: f64,
    y0: f64,
}

impl Canvas {
    fn mid(&self, r: usize, c: usize, side: Side) -> (f64, f64) {
        let (x, y, h) = (self.x0 + c as f64 * self.s, self.y0 + r as f64 * self.s, self.s / 2.0);
        match side {
            Side::Left => (x, y + h),
            Side::Top => (x + h, y),
            Side::Right => (x + 2.0 * h, y + h),
            Side::Bottom => (x + h, y + 2.0 * h),
        }
    }

    fn path(&mut self, class: &str, d: &str) {
        writeln!(self.body, r#"<path class="{class}" d="{d}"/>"#).unwrap();
    }

    /// Quarter circle between two adjacent edge midpoints, centred on the
    /// corner they share.
    fn arc(&mut self, r: usize, c: usize, a: Side, b: Side) {
        let (ax, ay) = self.mid(r, c, a);
        let (bx, by) = self.mid(r, c, b);
        let rad = self.s / 2.0;
        self.path("strand", &format!("M{ax},{ay} A{rad},{rad} 0 0 0 {bx},{by}"));
    }

    fn line(&mut self, r: usize, c: usize, a: Side, b: Side) {
        let (ax, ay) = self.mid(r, c, a);
        let (bx, by) = self.mid(r, c, b);
        self.path("strand", &format!("M{ax},{ay} L{bx},{by}"));
    }

    /// Under-strand from `a` to `b` with a gap around the tile centre.
    fn gapped(&mut self, r: usize, c: usize, a: Side, b: Side) {
        let (ax, ay) = self.mid(r, c, a);
        let (bx, by) = self.mid(r, c, b);
        let (cx, cy) = ((ax + bx) / 2.0, (ay + by) / 2.0);
        let g = self.s * 0.15;
        let (ux, uy) = ((bx - ax) / self.s, (by - ay) / self.s);
        self.path(
            "crossing-gap",
            &format!(
                "M{ax},{ay} L{},{} M{},{} L{bx},{by}",
                cx - ux * g,
                cy - uy * g,
                cx + ux * g,
                cy + uy * g
            ),
        );
    }

    fn tile(&mut self, r: usize, c: usize, t: Tile) {
        use Side::*;
        match t.kind() {
            9 => {
                self.gapped(r, c, Left, Right);
                self.line(r, c, Top, Bottom);
            }
            10 => {
                self.gapped(r, c, Top, Bottom);
                self.line(r, c, Left, Right);
            }
            _ => {
                for side in [Left, Top, Right, Bottom] {
                    let Some(other) = t.exit(side) else { continue };
                    // each strand once, from its first side in this order
                    if (other as u8) < (side as u8) {
                        continue;
                    }
                    if other == side.opposite() {
                        self.line(r, c, side, other);
                    } else {
                        self.arc(r, c, side, other);
                    }
                }
            }
        }
    }
}

fn svg(m: &Mosaic, opts: &RenderOptions) -> String {
    let n = m.size();
    let s = f64::from(opts.cell_size.max(1));
    let rows = m.connected_rows();
    let cols = m.connected_columns();
    let gap = s / 4.0;
    // Closure arcs need room left of and below the grid; column arcs also
    // pass above it and row arcs to its right.
    let margin = if opts.highlight_hidden { gap * (rows.len() + cols.len() + 1) as f64 } else { s / 4.0 };
    let side = n as f64 * s;
    let full = side + 2.0 * margin;
    let mut cv = Canvas { body: String::new(), s, x0: margin, y0: margin };

    if opts.show_grid {
        for k in 0..=n {
            let p = k as f64 * s;
            writeln!(
                cv.body,
                r#"<path class="grid" d="M{},{} L{},{} M{},{} L{},{}"/>"#,
                margin + p,
                margin,
                margin + p,
                margin + side,
                margin,
                margin + p,
                margin + side,
                margin + p
            )
            .unwrap();
        }
    }
    for r in 0..n {
        for c in 0..n {
            cv.tile(r, c, m.get(r, c));
        }
    }
    if opts.highlight_hidden && !(rows.is_empty() && cols.is_empty()) {
        closure_arcs(&mut cv, n, &rows, &cols, gap);
    }

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{full}" height="{full}" viewBox="0 0 {full} {full}">"#
    )
    .unwrap();
    out.push_str("<style>path{fill:none;stroke:#000;stroke-width:2} .grid{stroke:#bbb;stroke-width:1} .closure{stroke:#666} .hidden-gap{fill:#fff;stroke:none}</style>\n");
    out.push_str(&cv.body);
    out.push_str("</svg>\n");
    out
}

/// Column arcs run from each wrapping column's bottom point down, left around
/// the grid and back in at the top, column 1 innermost. Row arcs run from each
/// wrapping row's right point around the bottom and back in at the left, the
/// last row innermost, outside every column arc. Each row arc passes over every
/// column arc just left of the grid.
fn closure_arcs(cv: &mut Canvas, n: usize, rows: &[usize], cols: &[usize], gap: f64) {
    let (x0, y0, s) = (cv.x0, cv.y0, cv.s);
    let (left, top, right, bottom) = (x0, y0, x0 + n as f64 * s, y0 + n as f64 * s);
    let col_off = |k: usize| gap * (k + 1) as f64;
    let row_off = |k: usize| gap * (cols.len() + rows.len() - k) as f64;

    let mut col_x = Vec::new();
    for (k, &c) in cols.iter().enumerate() {
        let x = x0 + (c as f64 + 0.5) * s;
        let o = col_off(k);
        col_x.push(left - o);
        cv.path(
            "closure",
            &format!("M{x},{bottom} L{x},{} L{},{} L{},{} L{x},{} L{x},{top}", bottom + o, left - o, bottom + o, left - o, top - o, top - o),
        );
    }
    for (k, &r) in rows.iter().enumerate() {
        let y = y0 + (r as f64 + 0.5) * s;
        let o = row_off(k);
        for &x in &col_x {
            let w = gap * 0.5;
            writeln!(cv.body, r#"<rect class="hidden-gap" x="{}" y="{}" width="{w}" height="{w}"/>"#, x - w / 2.0, y - w / 2.0)
                .unwrap();
        }
        cv.path(
            "closure",
            &format!("M{right},{y} L{},{y} L{},{} L{},{} L{},{y} L{left},{y}", right + o, right + o, bottom + o, left - o, bottom + o, left - o),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_single_tile_is_three_by_three() {
        let out = render(&Mosaic::decode("7").unwrap(), &RenderOptions::default());
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| l.chars().count() == 3));
    }

    #[test]
    fn svg_gap_markers() {
        let opts = RenderOptions { format: Format::Svg, highlight_hidden: true, ..Default::default() };
        let out = render(&Mosaic::decode("7779").unwrap(), &opts);
        assert_eq!(out.matches("class=\"crossing-gap\"").count(), 1);
        // one visible crossing, two wrapping rows and two wrapping columns
        assert_eq!(out.matches("class=\"hidden-gap\"").count(), 4);
    }
}
