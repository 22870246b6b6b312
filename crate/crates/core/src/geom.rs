//! Exact plane primitives and the constructions built on them.
//!
//! Nothing here uses a tolerance: membership, collinearity and parallelism
//! are decided by exact zero tests on rational determinants.

use std::fmt;
use std::ops::{Add, Sub};

use serde::Serialize;
use thiserror::Error;

use crate::number::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("CoincidentPoints")]
    CoincidentPoints,
    #[error("CoincidentParameters")]
    CoincidentParameters,
    #[error("ZeroParameter: hyperbola parameter must be nonzero")]
    ZeroParameter,
    #[error("ParallelLines")]
    ParallelLines,
    #[error("CollinearPoints")]
    CollinearPoints,
    #[error("NotOnCircle")]
    NotOnCircle,
    #[error("DegenerateLine: (l, m) = (0, 0)")]
    DegenerateLine,
    #[error("DegenerateCircle: squared radius {0} is not positive")]
    DegenerateCircle(Rational),
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = Rational::frac(1, 2);
        (self + other).scale(&half)
    }

    /// `self + t (other - self)`.
    pub fn towards(&self, other: &Point, t: &Rational) -> Point {
        self + &(other - self).scale(t)
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

/// The locus `l x + m y = n`, scaled so the first nonzero of `(l, m)` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    l: Rational,
    m: Rational,
    n: Rational,
}

impl Line {
    pub fn new(l: Rational, m: Rational, n: Rational) -> Result<Self, GeomError> {
        let lead = if !l.is_zero() {
            l.clone()
        } else if !m.is_zero() {
            m.clone()
        } else {
            return Err(GeomError::DegenerateLine);
        };
        Ok(Line {
            l: &l / &lead,
            m: &m / &lead,
            n: &n / &lead,
        })
    }

    pub fn l(&self) -> &Rational {
        &self.l
    }

    pub fn m(&self) -> &Rational {
        &self.m
    }

    pub fn n(&self) -> &Rational {
        &self.n
    }

    /// `y = c`.
    pub fn horizontal(c: Rational) -> Self {
        Line {
            l: Rational::zero(),
            m: Rational::one(),
            n: c,
        }
    }

    /// `x = c`.
    pub fn vertical(c: Rational) -> Self {
        Line {
            l: Rational::one(),
            m: Rational::zero(),
            n: c,
        }
    }

    /// Left-hand side minus right-hand side at `p`.
    pub fn eval(&self, p: &Point) -> Rational {
        &self.l * &p.x + &self.m * &p.y - &self.n
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn normal(&self) -> Point {
        Point::new(self.l.clone(), self.m.clone())
    }

    pub fn direction(&self) -> Point {
        Point::new(-&self.m, self.l.clone())
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        self.normal().cross(&other.normal()).is_zero()
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.l, self.m, self.n)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A circle held as centre and squared radius.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circle {
    center: Point,
    r_sq: Rational,
}

impl Circle {
    pub fn new(center: Point, r_sq: Rational) -> Result<Self, GeomError> {
        if !r_sq.is_positive() {
            return Err(GeomError::DegenerateCircle(r_sq));
        }
        Ok(Circle { center, r_sq })
    }

    /// From `x² + y² + D x + E y + F = 0`.
    pub fn from_general(d: &Rational, e: &Rational, f: &Rational) -> Result<Self, GeomError> {
        let half = Rational::frac(-1, 2);
        let center = Point::new(d * &half, e * &half);
        let r_sq = center.norm_sq() - f;
        Circle::new(center, r_sq)
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn r_sq(&self) -> &Rational {
        &self.r_sq
    }

    /// Coefficients `(D, E, F)` of `x² + y² + D x + E y + F = 0`.
    pub fn general(&self) -> (Rational, Rational, Rational) {
        let two = Rational::from(-2);
        (
            &self.center.x * &two,
            &self.center.y * &two,
            self.center.norm_sq() - &self.r_sq,
        )
    }

    /// Power of `p`: zero on the circle, negative inside.
    pub fn power(&self, p: &Point) -> Rational {
        dist_sq(&self.center, p) - &self.r_sq
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.power(p).is_zero()
    }
}

/// Result of [`second_intersection`]. `tangent` is set when the line only
/// touches the circle, in which case `point` is the touch point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondIntersection {
    pub point: Point,
    pub tangent: bool,
}

pub fn line_through(p1: &Point, p2: &Point) -> Result<Line, GeomError> {
    if p1 == p2 {
        return Err(GeomError::CoincidentPoints);
    }
    let d = p2 - p1;
    let n = &d.y * &p1.x - &d.x * &p1.y;
    Line::new(d.y, -d.x, n)
}

/// Chord of `xy = 1` joining parameters `s` and `t`: `x + st·y = s + t`.
pub fn chord_of_hyperbola(s: &Rational, t: &Rational) -> Result<Line, GeomError> {
    if s.is_zero() || t.is_zero() {
        return Err(GeomError::ZeroParameter);
    }
    if s == t {
        return Err(GeomError::CoincidentParameters);
    }
    Line::new(Rational::one(), s * t, s + t)
}

pub fn perpendicular_bisector(p1: &Point, p2: &Point) -> Result<Line, GeomError> {
    if p1 == p2 {
        return Err(GeomError::CoincidentPoints);
    }
    let d = p2 - p1;
    let n = d.dot(&p1.midpoint(p2));
    Line::new(d.x, d.y, n)
}

pub fn intersect_lines(l1: &Line, l2: &Line) -> Result<Point, GeomError> {
    let det = &l1.l * &l2.m - &l2.l * &l1.m;
    if det.is_zero() {
        return Err(GeomError::ParallelLines);
    }
    let x = (&l1.n * &l2.m - &l2.n * &l1.m) / &det;
    let y = (&l1.l * &l2.n - &l2.l * &l1.n) / &det;
    Ok(Point::new(x, y))
}

/// Mirror image of `p` in `ln`.
pub fn reflect_point(p: &Point, ln: &Line) -> Point {
    let (l, m, n) = (&ln.l, &ln.m, &ln.n);
    let (f, g) = (&p.x, &p.y);
    let l2 = l.square();
    let m2 = m.square();
    let two = Rational::from(2);
    let denom = &l2 + &m2;
    let h = (f * (&m2 - &l2) + &two * l * (n - g * m)) / &denom;
    let k = (&two * m * n + g * (&l2 - &m2) - &two * f * l * m) / &denom;
    Point::new(h, k)
}

/// Twice the signed area of the triangle `p1 p2 p3`; positive when
/// counter-clockwise.
pub fn orientation(p1: &Point, p2: &Point, p3: &Point) -> Rational {
    (p2 - p1).cross(&(p3 - p1))
}

pub fn collinear(p1: &Point, p2: &Point, p3: &Point) -> bool {
    orientation(p1, p2, p3).is_zero()
}

/// True when every point lies on one line. Fewer than three distinct points
/// are trivially collinear.
pub fn all_collinear(points: &[Point]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let Some(second) = points.iter().find(|q| *q != first) else {
        return true;
    };
    points.iter().all(|q| collinear(first, second, q))
}

pub fn dist_sq(p1: &Point, p2: &Point) -> Rational {
    (p2 - p1).norm_sq()
}

pub fn circle_through(p1: &Point, p2: &Point, p3: &Point) -> Result<Circle, GeomError> {
    if p1 == p2 || p2 == p3 || p1 == p3 {
        return Err(GeomError::CoincidentPoints);
    }
    if collinear(p1, p2, p3) {
        return Err(GeomError::CollinearPoints);
    }
    let center = intersect_lines(
        &perpendicular_bisector(p1, p2)?,
        &perpendicular_bisector(p2, p3)?,
    )?;
    let r_sq = dist_sq(&center, p1);
    Circle::new(center, r_sq)
}

pub fn centroid(p1: &Point, p2: &Point, p3: &Point) -> Point {
    (&(p1 + p2) + p3).scale(&Rational::frac(1, 3))
}

/// Meet of two altitudes.
pub fn orthocentre_of(p1: &Point, p2: &Point, p3: &Point) -> Result<Point, GeomError> {
    let altitude = |from: &Point, s: &Point, t: &Point| {
        let d = t - s;
        let n = d.dot(from);
        Line::new(d.x, d.y, n)
    };
    intersect_lines(&altitude(p1, p2, p3)?, &altitude(p2, p3, p1)?)
}

/// The circle through the three side midpoints.
pub fn nine_point_circle(p1: &Point, p2: &Point, p3: &Point) -> Result<Circle, GeomError> {
    circle_through(&p2.midpoint(p3), &p3.midpoint(p1), &p1.midpoint(p2))
}

/// The other point where the line from `p0` through `direction_point`
/// meets `c`. `p0` must already lie on `c`.
pub fn second_intersection(
    c: &Circle,
    p0: &Point,
    direction_point: &Point,
) -> Result<SecondIntersection, GeomError> {
    if !c.contains(p0) {
        return Err(GeomError::NotOnCircle);
    }
    if p0 == direction_point {
        return Err(GeomError::CoincidentPoints);
    }
    // |p0 + t u - centre|² = r² has roots t = 0 and the one below.
    let u = direction_point - p0;
    let t = -(Rational::from(2) * u.dot(&(p0 - c.center()))) / u.norm_sq();
    Ok(SecondIntersection {
        tangent: t.is_zero(),
        point: p0.towards(direction_point, &t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pt(x: &str, y: &str) -> Point {
        Point::new(q(x), q(y))
    }

    fn line(l: &str, m: &str, n: &str) -> Line {
        Line::new(q(l), q(m), q(n)).unwrap()
    }

    #[test]
    fn line_through_examples() {
        assert_eq!(
            line_through(&pt("2", "1/2"), &pt("3", "1/3")).unwrap(),
            line("1", "6", "5")
        );
        assert_eq!(
            line_through(&pt("1", "1"), &pt("3", "2")).unwrap(),
            line("1", "-2", "-1")
        );
        assert_eq!(
            line_through(&pt("1", "1"), &pt("1", "1")),
            Err(GeomError::CoincidentPoints)
        );
    }

    #[test]
    fn line_canonical_scaling() {
        assert_eq!(line("2", "4", "6"), line("1", "2", "3"));
        assert_eq!(line("0", "-3", "6"), Line::horizontal(q("-2")));
        assert_eq!(
            Line::new(q("0"), q("0"), q("1")),
            Err(GeomError::DegenerateLine)
        );
    }

    #[test]
    fn chord_examples() {
        assert_eq!(
            chord_of_hyperbola(&q("2"), &q("3")).unwrap(),
            line("1", "6", "5")
        );
        let t = q("7/2");
        let chord = chord_of_hyperbola(&t, &-&t).unwrap();
        assert_eq!(
            chord,
            Line::new(Rational::one(), -t.square(), Rational::zero()).unwrap()
        );
        assert!(chord.contains(&Point::origin()));
        assert_eq!(
            chord_of_hyperbola(&q("3"), &q("1/2")).unwrap(),
            line("1", "3/2", "7/2")
        );
        assert_eq!(
            chord_of_hyperbola(&q("3"), &q("3")),
            Err(GeomError::CoincidentParameters)
        );
        assert_eq!(
            chord_of_hyperbola(&q("0"), &q("3")),
            Err(GeomError::ZeroParameter)
        );
    }

    #[test]
    fn perpendicular_bisector_examples() {
        let bis = perpendicular_bisector(&pt("2", "1/2"), &pt("3", "1/3")).unwrap();
        // 12(y - 6x) = -175
        assert_eq!(bis, line("-72", "12", "-175"));
        assert!(bis.contains(&pt("5/2", "5/12")));
        assert_eq!(
            perpendicular_bisector(&pt("0", "0"), &pt("2", "0")).unwrap(),
            Line::vertical(q("1"))
        );
        assert_eq!(
            perpendicular_bisector(&pt("1", "2"), &pt("1", "2")),
            Err(GeomError::CoincidentPoints)
        );
    }

    #[test]
    fn intersect_examples() {
        let a = pt("2", "1/2");
        let b = pt("3", "1/3");
        let c = pt("1/2", "2");
        let o = intersect_lines(
            &perpendicular_bisector(&a, &b).unwrap(),
            &perpendicular_bisector(&b, &c).unwrap(),
        )
        .unwrap();
        assert_eq!(o, pt("35/12", "35/12"));
        assert_eq!(
            intersect_lines(&Line::vertical(q("1")), &Line::horizontal(q("2"))).unwrap(),
            pt("1", "2")
        );
        assert_eq!(
            intersect_lines(&line("1", "1", "1"), &line("1", "1", "2")),
            Err(GeomError::ParallelLines)
        );
        assert_eq!(
            intersect_lines(&line("1", "1", "1"), &line("2", "2", "2")),
            Err(GeomError::ParallelLines)
        );
    }

    /// Reflection oracle: midpoint on the mirror, displacement along the normal.
    fn is_mirror_image(p: &Point, img: &Point, ln: &Line) -> bool {
        ln.contains(&p.midpoint(img)) && (img - p).cross(&ln.normal()).is_zero()
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(
            reflect_point(&pt("5", "7"), &Line::vertical(q("5"))),
            pt("5", "7")
        );
        let ln = line("1", "1", "1");
        let img = reflect_point(&pt("2", "3"), &ln);
        assert_eq!(img, pt("-2", "-1"));
        assert!(is_mirror_image(&pt("2", "3"), &img, &ln));
        let bc = line("1", "3/2", "7/2");
        let a_prime = pt("23/15", "11/15");
        let img = reflect_point(&a_prime, &bc);
        assert_eq!(img, pt("31/15", "23/15"));
        assert!(is_mirror_image(&a_prime, &img, &bc));
    }

    /// Independent circle oracle: solve the 3×3 linear system for (D, E, F).
    fn general_by_cramer(p: [&Point; 3]) -> (Rational, Rational, Rational) {
        let rows: Vec<[Rational; 4]> = p
            .iter()
            .map(|v| [v.x.clone(), v.y.clone(), Rational::one(), -v.norm_sq()])
            .collect();
        let det3 = |c0: usize, c1: usize, c2: usize| {
            let m = |r: usize, c: usize| &rows[r][c];
            m(0, c0) * (m(1, c1) * m(2, c2) - m(1, c2) * m(2, c1))
                - m(0, c1) * (m(1, c0) * m(2, c2) - m(1, c2) * m(2, c0))
                + m(0, c2) * (m(1, c0) * m(2, c1) - m(1, c1) * m(2, c0))
        };
        let det = det3(0, 1, 2);
        (
            det3(3, 1, 2) / &det,
            det3(0, 3, 2) / &det,
            det3(0, 1, 3) / &det,
        )
    }

    #[test]
    fn circle_through_examples() {
        let (a, b, c) = (pt("2", "1/2"), pt("3", "1/3"), pt("1/2", "2"));
        let circ = circle_through(&a, &b, &c).unwrap();
        assert_eq!(circ.center(), &pt("35/12", "35/12"));
        assert_eq!(circ.r_sq(), &q("481/72"));
        assert_eq!(circ.general(), general_by_cramer([&a, &b, &c]));

        let unit = circle_through(&pt("1", "0"), &pt("0", "1"), &pt("-1", "0")).unwrap();
        assert_eq!(unit.center(), &Point::origin());
        assert_eq!(unit.r_sq(), &Rational::one());

        assert_eq!(
            circle_through(&pt("0", "0"), &pt("1", "1"), &pt("2", "2")),
            Err(GeomError::CollinearPoints)
        );
        assert_eq!(
            circle_through(&pt("0", "0"), &pt("0", "0"), &pt("2", "2")),
            Err(GeomError::CoincidentPoints)
        );
    }

    #[test]
    fn general_form_round_trip() {
        let circ = Circle::new(pt("35/12", "35/12"), q("481/72")).unwrap();
        let (d, e, f) = circ.general();
        assert_eq!(Circle::from_general(&d, &e, &f).unwrap(), circ);
        assert!(matches!(
            Circle::new(Point::origin(), Rational::zero()),
            Err(GeomError::DegenerateCircle(_))
        ));
    }

    #[test]
    fn second_intersection_examples() {
        let gamma = Circle::new(pt("35/12", "35/12"), q("481/72")).unwrap();
        let hit = second_intersection(&gamma, &pt("2", "1/2"), &pt("1", "1")).unwrap();
        assert_eq!(hit.point, pt("23/15", "11/15"));
        assert!(!hit.tangent);

        let unit = Circle::new(Point::origin(), Rational::one()).unwrap();
        let hit = second_intersection(&unit, &pt("1", "0"), &pt("-1", "0")).unwrap();
        assert_eq!(
            hit,
            SecondIntersection {
                point: pt("-1", "0"),
                tangent: false
            }
        );
        let hit = second_intersection(&unit, &pt("1", "0"), &pt("1", "5")).unwrap();
        assert_eq!(
            hit,
            SecondIntersection {
                point: pt("1", "0"),
                tangent: true
            }
        );

        assert_eq!(
            second_intersection(&unit, &pt("1", "1"), &pt("0", "0")),
            Err(GeomError::NotOnCircle)
        );
        assert_eq!(
            second_intersection(&unit, &pt("1", "0"), &pt("1", "0")),
            Err(GeomError::CoincidentPoints)
        );
    }

    #[test]
    fn collinear_and_distance_examples() {
        assert!(collinear(&pt("1", "1"), &pt("3", "2"), &pt("-2", "-1/2")));
        assert!(!collinear(&pt("0", "0"), &pt("1", "0"), &pt("0", "1")));
        assert!(collinear(&pt("4", "9"), &pt("4", "9"), &pt("0", "1")));
        assert!(all_collinear(&[pt("1", "1"), pt("1", "1")]));
        assert!(all_collinear(&[
            pt("0", "0"),
            pt("1", "1"),
            pt("0", "0"),
            pt("3", "3")
        ]));
        assert!(!all_collinear(&[pt("0", "0"), pt("1", "1"), pt("3", "2")]));

        assert_eq!(dist_sq(&pt("0", "0"), &pt("3", "4")), q("25"));
        assert_eq!(dist_sq(&pt("35/12", "35/12"), &pt("2", "1/2")), q("481/72"));
        assert_eq!(dist_sq(&pt("7/3", "1"), &pt("7/3", "1")), Rational::zero());
    }

    #[test]
    fn triangle_centres() {
        let (a, b, c) = (pt("0", "0"), pt("4", "0"), pt("0", "2"));
        assert_eq!(centroid(&a, &b, &c), pt("4/3", "2/3"));
        // right angle at a
        assert_eq!(orthocentre_of(&a, &b, &c).unwrap(), a);
        let npc = nine_point_circle(&a, &b, &c).unwrap();
        let circ = circle_through(&a, &b, &c).unwrap();
        assert_eq!(npc.r_sq() * &q("4"), circ.r_sq().clone());
        assert_eq!(npc.center(), &circ.center().midpoint(&a));
    }

    fn arb_q() -> impl Strategy<Value = Rational> {
        (-60i64..60, 1i64..20).prop_map(|(n, d)| Rational::frac(n, d))
    }

    fn arb_nonzero_q() -> impl Strategy<Value = Rational> {
        arb_q().prop_filter("nonzero", |x| !x.is_zero())
    }

    fn arb_point() -> impl Strategy<Value = Point> {
        (arb_q(), arb_q()).prop_map(|(x, y)| Point::new(x, y))
    }

    fn arb_line() -> impl Strategy<Value = Line> {
        (arb_q(), arb_q(), arb_q())
            .prop_filter_map("degenerate", |(l, m, n)| Line::new(l, m, n).ok())
    }

    fn hyp(t: &Rational) -> Point {
        Point::new(t.clone(), t.inverse().unwrap())
    }

    proptest! {
        #[test]
        fn reflection_is_involution(p in arb_point(), ln in arb_line()) {
            let img = reflect_point(&p, &ln);
            prop_assert!(is_mirror_image(&p, &img, &ln));
            prop_assert_eq!(reflect_point(&img, &ln), p);
        }

        #[test]
        fn hyperbola_points_never_collinear(s in arb_nonzero_q(), t in arb_nonzero_q(), u in arb_nonzero_q()) {
            prop_assume!(s != t && t != u && s != u);
            prop_assert!(!collinear(&hyp(&s), &hyp(&t), &hyp(&u)));
            prop_assert_eq!(chord_of_hyperbola(&s, &t).unwrap(), line_through(&hyp(&s), &hyp(&t)).unwrap());
        }

        #[test]
        fn circle_through_contains_inputs(p1 in arb_point(), p2 in arb_point(), p3 in arb_point()) {
            prop_assume!(!collinear(&p1, &p2, &p3));
            let c = circle_through(&p1, &p2, &p3).unwrap();
            for p in [&p1, &p2, &p3] {
                prop_assert_eq!(&dist_sq(c.center(), p), c.r_sq());
            }
            prop_assert_eq!(c.general(), general_by_cramer([&p1, &p2, &p3]));
        }

        #[test]
        fn second_intersection_on_circle_and_line(p1 in arb_point(), p2 in arb_point(), p3 in arb_point(), dir in arb_point()) {
            prop_assume!(!collinear(&p1, &p2, &p3) && dir != p1);
            let c = circle_through(&p1, &p2, &p3).unwrap();
            let hit = second_intersection(&c, &p1, &dir).unwrap();
            prop_assert!(c.contains(&hit.point));
            prop_assert!(collinear(&p1, &dir, &hit.point));
            prop_assert_eq!(hit.tangent, hit.point == p1);
        }

        #[test]
        fn bisector_matches_chord_form(s in arb_nonzero_q(), t in arb_nonzero_q()) {
            prop_assume!(s != t);
            let st = &s * &t;
            // 2st(y - st·x) = (s + t)(1 - s²t²)
            let two = Rational::from(2);
            let expected = Line::new(
                -(&two * &st * &st),
                &two * &st,
                (&s + &t) * (Rational::one() - st.square()),
            ).unwrap();
            prop_assert_eq!(perpendicular_bisector(&hyp(&s), &hyp(&t)).unwrap(), expected);
        }
    }
}
