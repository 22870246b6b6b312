//! The four Hagge circles of `P` with respect to the triangles of the
//! quadrilateral, built constructively.
//!
//! Each triangle Δk has an indirect similarity σk: reflection in the axis
//! `L: y = 1/p` followed by a dilation about `P`. σk carries the
//! circumcircle onto the Hagge circle Γk and the foreign vertex onto the
//! orthocentre of Δk. The unprimed points (`A4`, `B4`, `C4` for Δ4) are the
//! σk-images of the vertices; the primed points are reflections of the
//! second intersections `A'`, `B'`, ... in the opposite sides.

use crate::config::{circumcircle, orthocentre, QuadConfig, Triangle, Vertex};
use crate::formulas;
use crate::geom::{
    circle_through, dist_sq, line_through, reflect_point, second_intersection, Circle, GeomError,
    Line, Point,
};
use crate::number::Rational;

/// Reflection in `mirror` followed by a dilation about `center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndirectSimilarity {
    mirror: Line,
    center: Point,
    factor: Rational,
}

impl IndirectSimilarity {
    /// `None` unless `center` lies on `mirror` and `factor` is nonzero.
    pub fn new(mirror: Line, center: Point, factor: Rational) -> Option<Self> {
        (mirror.contains(&center) && !factor.is_zero()).then_some(IndirectSimilarity {
            mirror,
            center,
            factor,
        })
    }

    pub fn mirror(&self) -> &Line {
        &self.mirror
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn factor(&self) -> &Rational {
        &self.factor
    }

    pub fn apply(&self, p: &Point) -> Point {
        let r = reflect_point(p, &self.mirror);
        self.center.towards(&r, &self.factor)
    }

    pub fn apply_circle(&self, c: &Circle) -> Circle {
        Circle::new(self.apply(c.center()), c.r_sq() * &self.factor.square())
            .expect("nonzero factor keeps the radius positive")
    }
}

/// Everything attached to one Hagge circle Γk.
///
/// Point arrays follow the letter order of `triangle.vertices()`, so for Δ4
/// `image_pts = [A4, B4, C4]` and `prime_pts = [A4', B4', C4']`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HaggeSystem {
    pub triangle: Triangle,
    pub circle: Circle,
    pub center_q: Point,
    pub sim: IndirectSimilarity,
    pub prime_pts: [Point; 3],
    pub image_pts: [Point; 3],
    pub foreign_ortho: Point,
    pub foreign_prime: Point,
    /// The line from the orthocentre through `P` touches Γk.
    pub foreign_tangent: bool,
    pub isogonal: Point,
}

impl HaggeSystem {
    /// Point with the letter of `v` on this circle: the σ-image for a vertex
    /// of the triangle, the orthocentre for the foreign vertex.
    pub fn unprimed(&self, v: Vertex) -> &Point {
        match self.slot(v) {
            Some(i) => &self.image_pts[i],
            None => &self.foreign_ortho,
        }
    }

    pub fn primed(&self, v: Vertex) -> &Point {
        match self.slot(v) {
            Some(i) => &self.prime_pts[i],
            None => &self.foreign_prime,
        }
    }

    fn slot(&self, v: Vertex) -> Option<usize> {
        self.triangle.vertices().iter().position(|w| *w == v)
    }

    /// `(D, E, F)` of Γk multiplied by the leading coefficient
    /// `abc(abcp − 1)` of the printed equation, giving the groups
    /// `[x²+y², x, y, 1]`.
    pub fn scaled_coefficients(&self, cfg: &QuadConfig) -> [Rational; 4] {
        let [a, b, c] = cfg.triple(self.triangle);
        let abc = a * b * c;
        let lead = &abc * (&abc * cfg.p() - Rational::one());
        let (d, e, f) = self.circle.general();
        [lead.clone(), &lead * d, &lead * e, lead * f]
    }
}

/// Pairwise squared distances of the quadrangles `A'B'C'D'` and
/// `Pg1 Pg2 Pg3 Pg4`, in pair order AB, AC, AD, BC, BD, CD (Pg_k is paired
/// with the vertex Δk omits).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrangleMetrics {
    pub sq_dists_prime: [Rational; 6],
    pub sq_dists_isog: [Rational; 6],
    pub ratio_sq: Rational,
}

pub const PAIRS: [(Vertex, Vertex); 6] = [
    (Vertex::A, Vertex::B),
    (Vertex::A, Vertex::C),
    (Vertex::A, Vertex::D),
    (Vertex::B, Vertex::C),
    (Vertex::B, Vertex::D),
    (Vertex::C, Vertex::D),
];

impl QuadrangleMetrics {
    /// Every isogonal squared distance equals `ratio_sq` times the matching
    /// primed one.
    pub fn is_similar(&self) -> bool {
        self.sq_dists_prime
            .iter()
            .zip(&self.sq_dists_isog)
            .all(|(pr, iso)| iso == &(pr * &self.ratio_sq))
    }
}

/// `L: y = 1/p` and `L': x = p`.
pub fn axes(cfg: &QuadConfig) -> (Line, Line) {
    let p = cfg.point_p();
    (Line::horizontal(p.y), Line::vertical(p.x))
}

/// σk with factor `(Πp + 1)/(Πp − 1)`, Π the product of the parameters of
/// Δk. Equivalently `(p + t)/(p − t)` for the foreign parameter `t`.
pub fn similarity(cfg: &QuadConfig, tri: Triangle) -> IndirectSimilarity {
    let [a, b, c] = cfg.triple(tri);
    let prod_p = a * b * c * cfg.p();
    let one = Rational::one();
    let factor = (&prod_p + &one) / (&prod_p - &one);
    let (mirror, _) = axes(cfg);
    IndirectSimilarity::new(mirror, cfg.point_p(), factor).expect("P on L, p not a vertex")
}

/// `A', B', C', D'`: second meets of `AP`, `BP`, `CP`, `DP` with the
/// circumcircle.
pub fn circum_second_points(cfg: &QuadConfig) -> Result<[Point; 4], GeomError> {
    let gamma = circumcircle(cfg);
    let p = cfg.point_p();
    let mut out = Vec::with_capacity(4);
    for v in Vertex::ALL {
        out.push(second_intersection(&gamma, &cfg.vertex(v), &p)?.point);
    }
    Ok(out.try_into().expect("four points"))
}

fn side_line(cfg: &QuadConfig, tri: Triangle, v: Vertex) -> Result<Line, GeomError> {
    let [s, t] = tri.opposite_side(v);
    line_through(&cfg.vertex(s), &cfg.vertex(t))
}

/// Reflections of `V'` in the side of Δk opposite `V`, for each vertex `V`
/// of Δk.
pub fn prime_reflections(cfg: &QuadConfig, tri: Triangle) -> Result<[Point; 3], GeomError> {
    let seconds = circum_second_points(cfg)?;
    prime_reflections_from(cfg, tri, &seconds)
}

fn prime_reflections_from(
    cfg: &QuadConfig,
    tri: Triangle,
    seconds: &[Point; 4],
) -> Result<[Point; 3], GeomError> {
    let mut out = Vec::with_capacity(3);
    for v in tri.vertices() {
        out.push(reflect_point(&seconds[v.index()], &side_line(cfg, tri, v)?));
    }
    Ok(out.try_into().expect("three points"))
}

/// Unprimed points of Γk: the σk-images of the vertices of Δk, then the
/// orthocentre of Δk and the second meet of the orthocentre–P line with Γk.
pub fn image_and_foreign_points(
    cfg: &QuadConfig,
    tri: Triangle,
) -> Result<([Point; 3], Point, Point), GeomError> {
    let sim = similarity(cfg, tri);
    let images = tri.vertices().map(|v| sim.apply(&cfg.vertex(v)));
    let circle = circle_through(&images[0], &images[1], &images[2])?;
    let ortho = orthocentre(cfg, tri);
    let hit = second_intersection(&circle, &ortho, &cfg.point_p())?;
    Ok((images, ortho, hit.point))
}

/// Isogonal conjugate of `P` with respect to Δk.
pub fn isogonal_conjugate(cfg: &QuadConfig, tri: Triangle) -> Point {
    let [a, b, c] = cfg.triple(tri);
    formulas::isogonal_conjugate(a, b, c, cfg.p())
}

pub fn hagge_circle(cfg: &QuadConfig, tri: Triangle) -> Result<HaggeSystem, GeomError> {
    let seconds = circum_second_points(cfg)?;
    hagge_circle_with(cfg, tri, &seconds)
}

fn hagge_circle_with(
    cfg: &QuadConfig,
    tri: Triangle,
    seconds: &[Point; 4],
) -> Result<HaggeSystem, GeomError> {
    let sim = similarity(cfg, tri);
    let image_pts = tri.vertices().map(|v| sim.apply(&cfg.vertex(v)));
    let circle = circle_through(&image_pts[0], &image_pts[1], &image_pts[2])?;
    let foreign_ortho = orthocentre(cfg, tri);
    let hit = second_intersection(&circle, &foreign_ortho, &cfg.point_p())?;
    Ok(HaggeSystem {
        triangle: tri,
        center_q: circle.center().clone(),
        prime_pts: prime_reflections_from(cfg, tri, seconds)?,
        image_pts,
        foreign_prime: hit.point,
        foreign_tangent: hit.tangent,
        isogonal: isogonal_conjugate(cfg, tri),
        circle,
        sim,
        foreign_ortho,
    })
}

/// All four systems, Δ1 first.
pub fn hagge_systems(cfg: &QuadConfig) -> Result<[HaggeSystem; 4], GeomError> {
    let seconds = circum_second_points(cfg)?;
    let mut out = Vec::with_capacity(4);
    for tri in Triangle::ALL {
        out.push(hagge_circle_with(cfg, tri, &seconds)?);
    }
    Ok(out.try_into().expect("four systems"))
}

pub fn quadrangle_metrics(cfg: &QuadConfig) -> Result<QuadrangleMetrics, GeomError> {
    let seconds = circum_second_points(cfg)?;
    // Pg_k belongs to the triangle omitting vertex k, so index by vertex.
    let isog = Triangle::ALL.map(|t| isogonal_conjugate(cfg, t));
    let dists = |pts: &[Point; 4]| PAIRS.map(|(u, v)| dist_sq(&pts[u.index()], &pts[v.index()]));
    let params = Vertex::ALL.map(|v| cfg.param(v));
    Ok(QuadrangleMetrics {
        sq_dists_prime: dists(&seconds),
        sq_dists_isog: dists(&isog),
        ratio_sq: formulas::similarity_ratio_sq(params, cfg.p()),
    })
}
