//! SVG figures of a configuration.
//!
//! Geometry is computed exactly and converted to `f64` only when written
//! out. Numbers are emitted with six significant digits so output is
//! byte-stable for fixed inputs.

use std::fmt::Write;

use hagge::config::{centers, circumcircle};
use hagge::geom::{Circle, GeomError, Point};
use hagge::hagge::{axes, hagge_systems};
use hagge::{QuadConfig, Rational, Vertex};

pub const MIN_SIZE: u32 = 100;
pub const DEFAULT_SIZE: u32 = 800;
const HYPERBOLA_SAMPLES: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// The quadrilateral, its circumcircle, the hyperbola and the centres.
    Config,
    /// The four Hagge circles with their axes and collinearities.
    Hagge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub figure: Figure,
    pub size_px: u32,
}

impl RenderSpec {
    pub fn new(figure: Figure, size_px: u32) -> Option<Self> {
        (size_px >= MIN_SIZE).then_some(RenderSpec { figure, size_px })
    }
}

/// Six significant digits, no trailing zeros.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let rounded: f64 = format!("{v:.5e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        "0".into()
    } else {
        format!("{rounded}")
    }
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Bounds {
    fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    fn extent(&self) -> f64 {
        self.width().max(self.height())
    }
}

/// Exact bounding box of the labelled points, widened by 10% on each side.
/// Returned in SVG coordinates (y pointing down).
fn bounds(points: &[(String, Point)]) -> Bounds {
    let xs = points.iter().map(|(_, p)| &p.x);
    let ys = points.iter().map(|(_, p)| &p.y);
    let min = |it: &mut dyn Iterator<Item = &Rational>| it.min().cloned().unwrap_or_default();
    let max = |it: &mut dyn Iterator<Item = &Rational>| it.max().cloned().unwrap_or_default();
    let (x0, x1) = (min(&mut xs.clone()), max(&mut xs.clone()));
    let (y0, y1) = (min(&mut ys.clone()), max(&mut ys.clone()));
    let mut w = (&x1 - &x0).to_f64();
    let mut h = (&y1 - &y0).to_f64();
    if w <= 0.0 {
        w = h.max(1.0);
    }
    if h <= 0.0 {
        h = w;
    }
    let (mx, my) = (0.1 * w, 0.1 * h);
    Bounds {
        min_x: x0.to_f64() - mx,
        max_x: x1.to_f64() + mx,
        min_y: -y1.to_f64() - my,
        max_y: -y0.to_f64() + my,
    }
}

struct Svg {
    out: String,
    bounds: Bounds,
}

impl Svg {
    fn new(size_px: u32, bounds: Bounds, title: &str) -> Svg {
        let (w, h) = (bounds.width(), bounds.height());
        let (pw, ph) = if w >= h {
            (size_px, ((size_px as f64) * h / w).round().max(1.0) as u32)
        } else {
            (((size_px as f64) * w / h).round().max(1.0) as u32, size_px)
        };
        let unit = bounds.extent();
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{pw}" height="{ph}" viewBox="{} {} {} {}">"#,
            fmt_num(bounds.min_x),
            fmt_num(bounds.min_y),
            fmt_num(w),
            fmt_num(h)
        )
        .unwrap();
        writeln!(out, "<title>{title}</title>").unwrap();
        writeln!(
            out,
            "<style>\n\
             circle, line, path {{ fill: none; vector-effect: non-scaling-stroke; }}\n\
             .main-circle {{ stroke: #1f3b73; stroke-width: 1.5; }}\n\
             .hyperbola {{ stroke: #8a5a00; stroke-width: 1.2; }}\n\
             .pencil-i {{ stroke: #b03030; stroke-width: 0.8; }}\n\
             .pencil-ii {{ stroke: #2f7d32; stroke-width: 0.8; }}\n\
             .pencil-iii {{ stroke: #6a3d9a; stroke-width: 0.8; }}\n\
             .axis {{ stroke: #555555; stroke-width: 1; stroke-dasharray: 6 4; }}\n\
             .center-line {{ stroke: #b03030; stroke-width: 1; }}\n\
             .letter-line {{ stroke: #2f7d32; stroke-width: 0.8; }}\n\
             .point {{ fill: #000000; stroke: none; }}\n\
             .label {{ font-family: sans-serif; font-size: {}px; fill: #000000; }}\n\
             </style>",
            fmt_num(unit * 0.022)
        )
        .unwrap();
        Svg { out, bounds }
    }

    fn circle(&mut self, class: &str, c: &Circle) {
        let r = c.r_sq().to_f64().sqrt();
        writeln!(
            self.out,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            fmt_num(c.center().x.to_f64()),
            fmt_num(-c.center().y.to_f64()),
            fmt_num(r)
        )
        .unwrap();
    }

    fn segment(&mut self, class: &str, p: &Point, q: &Point) {
        writeln!(
            self.out,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt_num(p.x.to_f64()),
            fmt_num(-p.y.to_f64()),
            fmt_num(q.x.to_f64()),
            fmt_num(-q.y.to_f64())
        )
        .unwrap();
    }

    /// The infinite line through `p` with direction `dir`, clipped to the
    /// view box. `p` is always one of the drawn points, so the clip is
    /// never empty.
    fn full_line(&mut self, class: &str, p: &Point, dir: (f64, f64)) {
        let (px, py) = (p.x.to_f64(), -p.y.to_f64());
        let (dx, dy) = (dir.0, -dir.1);
        let b = self.bounds;
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (pos, d, min, max) in [(px, dx, b.min_x, b.max_x), (py, dy, b.min_y, b.max_y)] {
            if d != 0.0 {
                let (t0, t1) = ((min - pos) / d, (max - pos) / d);
                lo = lo.max(t0.min(t1));
                hi = hi.min(t0.max(t1));
            }
        }
        if !lo.is_finite() || !hi.is_finite() {
            lo = 0.0;
            hi = 0.0;
        }
        writeln!(
            self.out,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt_num(px + lo * dx),
            fmt_num(py + lo * dy),
            fmt_num(px + hi * dx),
            fmt_num(py + hi * dy)
        )
        .unwrap();
    }

    fn polyline(&mut self, class: &str, pts: &[(f64, f64)]) {
        let mut d = String::new();
        for (i, (x, y)) in pts.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            if i > 0 {
                d.push(' ');
            }
            write!(d, "{cmd}{} {}", fmt_num(*x), fmt_num(-y)).unwrap();
        }
        writeln!(self.out, r#"<path class="{class}" d="{d}"/>"#).unwrap();
    }

    fn points(&mut self, points: &[(String, Point)]) {
        let unit = self.bounds.extent();
        let r = fmt_num(unit * 0.005);
        let offset = unit * 0.008;
        for (label, p) in points {
            let (x, y) = (p.x.to_f64(), -p.y.to_f64());
            writeln!(
                self.out,
                r#"<circle class="point" cx="{}" cy="{}" r="{r}"/>"#,
                fmt_num(x),
                fmt_num(y)
            )
            .unwrap();
            writeln!(
                self.out,
                r#"<text class="label" x="{}" y="{}">{label}</text>"#,
                fmt_num(x + offset),
                fmt_num(y - offset)
            )
            .unwrap();
        }
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn labelled(label: impl Into<String>, p: &Point) -> (String, Point) {
    (label.into(), p.clone())
}

fn config_figure(cfg: &QuadConfig, size_px: u32) -> String {
    let gamma = circumcircle(cfg);
    let cat = centers(cfg);
    let verts = cfg.vertices();
    let p = cfg.point_p();

    let mut pts: Vec<(String, Point)> = Vec::new();
    for v in Vertex::ALL {
        pts.push(labelled(v.letter().to_string(), &verts[v.index()]));
    }
    pts.push(labelled("P", &p));
    pts.push(labelled("O", &cat.o));
    pts.push(labelled("H", &cat.h));
    pts.push(labelled("N", &cat.n));
    pts.push(labelled("G", &cat.g));
    pts.push(labelled("M", &cat.m_c));
    for k in 0..4 {
        pts.push(labelled(format!("H{}", k + 1), &cat.h_k[k]));
        pts.push(labelled(format!("N{}", k + 1), &cat.n_k[k]));
        pts.push(labelled(format!("G{}", k + 1), &cat.g_k[k]));
    }

    let mut svg = Svg::new(size_px, bounds(&pts), "Cyclic quadrilateral on xy = 1");
    svg.circle("main-circle", &gamma);

    // Hyperbola parameters in play: the vertices, P and the orthocentres.
    let mut mags: Vec<f64> = Vertex::ALL
        .iter()
        .map(|v| cfg.param(*v).abs().to_f64())
        .collect();
    mags.push(cfg.p().abs().to_f64());
    let lo = mags.iter().cloned().fold(f64::INFINITY, f64::min) / 1.2;
    let hi = mags.iter().cloned().fold(0.0, f64::max) * 1.2;
    for sign in [1.0, -1.0] {
        let branch: Vec<(f64, f64)> = (0..HYPERBOLA_SAMPLES)
            .map(|i| {
                let s = i as f64 / (HYPERBOLA_SAMPLES - 1) as f64;
                let t = sign * lo * (hi / lo).powf(s);
                (t, 1.0 / t)
            })
            .collect();
        svg.polyline("hyperbola", &branch);
    }

    for (class, ends) in [
        ("pencil-i", &cat.h_k),
        ("pencil-ii", &cat.n_k),
        ("pencil-iii", &cat.g_k),
    ] {
        for (v, e) in verts.iter().zip(ends) {
            svg.segment(class, v, e);
        }
    }
    svg.points(&pts);
    svg.finish()
}

fn direction(from: &Point, to: &Point) -> (f64, f64) {
    ((&to.x - &from.x).to_f64(), (&to.y - &from.y).to_f64())
}

fn hagge_figure(cfg: &QuadConfig, size_px: u32) -> Result<String, GeomError> {
    let gamma = circumcircle(cfg);
    let systems = hagge_systems(cfg)?;
    let p = cfg.point_p();
    let verts = cfg.vertices();

    let mut pts: Vec<(String, Point)> = Vec::new();
    for v in Vertex::ALL {
        pts.push(labelled(v.letter().to_string(), &verts[v.index()]));
    }
    pts.push(labelled("P", &p));
    pts.push(labelled("O", gamma.center()));
    for sys in &systems {
        let k = sys.triangle.index();
        pts.push(labelled(format!("Q{k}"), &sys.center_q));
        for v in Vertex::ALL {
            pts.push(labelled(format!("{}{k}", v.letter()), sys.unprimed(v)));
            pts.push(labelled(format!("{}{k}'", v.letter()), sys.primed(v)));
        }
    }

    let mut svg = Svg::new(size_px, bounds(&pts), "The four Hagge circles");
    svg.circle("main-circle", &gamma);
    for sys in &systems {
        svg.circle("main-circle", &sys.circle);
    }

    let (l, l_prime) = axes(cfg);
    for axis in [&l, &l_prime] {
        let d = axis.direction();
        svg.full_line("axis", &p, (d.x.to_f64(), d.y.to_f64()));
    }

    // The four centres lie on one line through P.
    let q_far = systems
        .iter()
        .map(|s| &s.center_q)
        .find(|q| **q != p)
        .unwrap_or(&systems[0].center_q);
    svg.full_line("center-line", &p, direction(&p, q_far));

    for v in Vertex::ALL {
        let other = systems
            .iter()
            .flat_map(|s| [s.unprimed(v), s.primed(v)])
            .find(|q| **q != p)
            .expect("points differ from P");
        svg.full_line("letter-line", &p, direction(&p, other));
    }

    svg.points(&pts);
    Ok(svg.finish())
}

pub fn render_svg(cfg: &QuadConfig, spec: &RenderSpec) -> Result<String, GeomError> {
    match spec.figure {
        Figure::Config => Ok(config_figure(cfg, spec.size_px)),
        Figure::Hagge => hagge_figure(cfg, spec.size_px),
    }
}
