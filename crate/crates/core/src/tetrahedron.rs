//! The tetrahedral arrangement of `J`-subquotients of `Δ_e`.
//!
//! Points are the graded simples `L_{w_{i,j}}<-k>` occurring in `Δ_e`, drawn at
//! `(i, j, k)`. Two points are joined when `|i-i'| + |j-j'| = 1` and
//! `|k-k'| = 1`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bigrass::triples;
use crate::error::{Error, Result};
use crate::homology::{bijection_image, j_subquotients, socle_graded};
use crate::perm::Permutation;

pub type Point = (usize, usize, usize);

/// Point and edge sets read back from a listing.
pub type Listing = (BTreeSet<Point>, BTreeSet<(Point, Point)>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    /// composition factor of `Δ_e / Δ_w`, not in the socle
    Black,
    /// socle of `Δ_e / Δ_w`
    Red,
    /// outside `Δ_e / Δ_w`
    White,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tetrahedron {
    pub n: usize,
    pub points: Vec<Point>,
    pub edges: Vec<(Point, Point)>,
    /// Parallel to `points` when a permutation is highlighted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub styles: Option<Vec<Style>>,
}

fn joined(a: Point, b: Point) -> bool {
    a.0.abs_diff(b.0) + a.1.abs_diff(b.1) == 1 && a.2.abs_diff(b.2) == 1
}

impl Tetrahedron {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::RankTooSmall { n, min: 3 });
        }
        let mut points = triples(n)
            .iter()
            .map(|t| bijection_image(t).map(|g| g.point()))
            .collect::<Result<Vec<_>>>()?;
        points.sort();
        let mut edges = Vec::new();
        for (a_idx, &a) in points.iter().enumerate() {
            for &b in &points[a_idx + 1..] {
                if joined(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Ok(Tetrahedron {
            n,
            points,
            edges,
            styles: None,
        })
    }

    /// Colors the points for `Δ_e / Δ_w`.
    pub fn highlighted(n: usize, w: &Permutation) -> Result<Self> {
        if w.rank() != n {
            return Err(Error::RankMismatch(w.rank(), n));
        }
        let mut tet = Self::new(n)?;
        let factors: BTreeSet<Point> = j_subquotients(w)?.iter().map(|g| g.point()).collect();
        let socle: BTreeSet<Point> = socle_graded(w)?.iter().map(|g| g.point()).collect();
        tet.styles = Some(
            tet.points
                .iter()
                .map(|p| {
                    if socle.contains(p) {
                        Style::Red
                    } else if factors.contains(p) {
                        Style::Black
                    } else {
                        Style::White
                    }
                })
                .collect(),
        );
        Ok(tet)
    }

    fn style_of(&self, idx: usize) -> Style {
        self.styles.as_ref().map_or(Style::Black, |s| s[idx])
    }

    fn point_style(&self, p: Point) -> Style {
        let idx = self.points.binary_search(&p).expect("edge endpoints are points");
        self.style_of(idx)
    }

    /// An edge is solid when both ends lie in the quotient.
    fn edge_solid(&self, a: Point, b: Point) -> bool {
        self.point_style(a) != Style::White && self.point_style(b) != Style::White
    }

    /// Line-oriented listing in the golden-file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (idx, &(i, j, k)) in self.points.iter().enumerate() {
            let _ = write!(out, "point {i} {j} {k}");
            if self.styles.is_some() {
                let _ = write!(out, " {}", style_name(self.style_of(idx)));
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "edge {} {} {} {} {} {}", a.0, a.1, a.2, b.0, b.1, b.2);
        }
        out
    }

    pub fn to_tikz(&self) -> String {
        let mut out = String::from("\\tdplotsetmaincoords{110}{130}\n\\begin{tikzpicture}[tdplot_main_coords, scale=1.4]\n\n");
        for &(a, b) in &self.edges {
            let style = if self.edge_solid(a, b) { "" } else { "[gray, dashed]" };
            let _ = writeln!(
                out,
                "\\draw{style} ({}, {}, -{}) -- ({}, {}, -{});",
                a.0, a.1, a.2, b.0, b.1, b.2
            );
        }
        out.push('\n');
        for (idx, &(i, j, k)) in self.points.iter().enumerate() {
            let label = format!("\\tiny $({i}, {j}, {k})$");
            let line = match (self.styles.is_some(), self.style_of(idx)) {
                (false, _) => format!("\\filldraw[black] ({i}, {j}, -{k}) circle (1.5pt) node[anchor=west] {{{label}}};"),
                (true, Style::Black) => format!("\\filldraw[black] ({i}, {j}, -{k}) circle (1.5pt) node[anchor=west] {{}};"),
                (true, Style::Red) => format!("\\draw[fill=red] ({i}, {j}, -{k}) circle (2.0pt) node[anchor=west] {{{label}}};"),
                (true, Style::White) => format!("\\draw[fill=white] ({i}, {j}, -{k}) circle (1.5pt) node[anchor=west] {{}};"),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str("\n\\end{tikzpicture}\n");
        out
    }

    /// Oblique projection, `k` pointing down so that degree grows downward.
    fn project(&self, p: Point) -> (f64, f64) {
        const UNIT: f64 = 60.0;
        let (i, j, k) = (p.0 as f64, p.1 as f64, p.2 as f64);
        let x = (j - i) * UNIT * 0.87;
        let y = (i + j) * UNIT * 0.35 + k * UNIT * 0.9;
        (x, y)
    }

    pub fn to_svg(&self) -> String {
        let coords: Vec<(f64, f64)> = self.points.iter().map(|&p| self.project(p)).collect();
        let min_x = coords.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
        let max_x = coords.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
        let min_y = coords.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
        let max_y = coords.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
        let margin = 40.0;
        let (w, h) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
        let place = |p: Point| {
            let (x, y) = self.project(p);
            (x - min_x + margin, y - min_y + margin)
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
        );
        for &(a, b) in &self.edges {
            let ((x1, y1), (x2, y2)) = (place(a), place(b));
            let dash = if self.edge_solid(a, b) { "" } else { r#" stroke-dasharray="4 3""# };
            let color = if dash.is_empty() { "black" } else { "gray" };
            let _ = writeln!(
                out,
                r#"  <line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{color}"{dash}/>"#
            );
        }
        for (idx, &p) in self.points.iter().enumerate() {
            let (x, y) = place(p);
            let (fill, r) = match self.style_of(idx) {
                Style::Black => ("black", 4.0),
                Style::Red => ("red", 5.5),
                Style::White => ("white", 4.0),
            };
            let _ = writeln!(
                out,
                r#"  <circle cx="{x:.1}" cy="{y:.1}" r="{r}" fill="{fill}" stroke="black"/>"#
            );
            let _ = writeln!(
                out,
                r#"  <text x="{:.1}" y="{:.1}" font-size="9">({}, {}, {})</text>"#,
                x + 7.0,
                y + 3.0,
                p.0,
                p.1,
                p.2
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

fn style_name(s: Style) -> &'static str {
    match s {
        Style::Black => "black",
        Style::Red => "red",
        Style::White => "white",
    }
}

/// Parses the golden-file format: `point i j k` and `edge i j k i' j' k'`
/// lines, `#` comments. Edges are normalized to `(min, max)` order.
pub fn parse_listing(text: &str) -> Result<Listing> {
    let mut points = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let kind = fields.next().unwrap_or_default();
        let nums = fields
            .take(6)
            .map(|f| f.parse::<usize>().map_err(|_| Error::Parse(format!("bad number in {line:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match (kind, nums.len()) {
            ("point", 3) => {
                points.insert((nums[0], nums[1], nums[2]));
            }
            ("edge", 6) => {
                let a = (nums[0], nums[1], nums[2]);
                let b = (nums[3], nums[4], nums[5]);
                edges.insert((a.min(b), a.max(b)));
            }
            _ => return Err(Error::Parse(format!("unrecognized line {line:?}"))),
        }
    }
    Ok((points, edges))
}
