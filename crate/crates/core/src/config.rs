//! The cyclic quadrilateral on the rectangular hyperbola `xy = 1`.
//!
//! Vertices are `(t, 1/t)` for parameters `a, b, c, d` with `abcd = 1`,
//! which is exactly the condition for the four points to be concyclic.
//! The hyperbola centre is the origin. The four triangles are numbered by
//! the vertex they omit: Δ1 = BCD, Δ2 = ACD, Δ3 = ABD, Δ4 = ABC.

use std::fmt;

use thiserror::Error;

use crate::geom::{Circle, Point};
use crate::number::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("InvalidParameter: {0} = 0")]
    InvalidParameter(char),
    #[error("DuplicateVertex: {0} and {1} have the same parameter {2}")]
    DuplicateVertex(char, char, Rational),
    #[error("DegeneratePosition: p collides with {0}")]
    DegeneratePosition(String),
}

/// A nonzero parameter on `xy = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperbolaParam(Rational);

impl HyperbolaParam {
    pub fn new(t: Rational) -> Option<Self> {
        (!t.is_zero()).then_some(HyperbolaParam(t))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn point(&self) -> Point {
        hyp_point(self)
    }
}

/// `(t, 1/t)`.
pub fn hyp_point(t: &HyperbolaParam) -> Point {
    Point::new(t.0.clone(), t.0.inverse().expect("nonzero parameter"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A,
    B,
    C,
    D,
}

impl Vertex {
    pub const ALL: [Vertex; 4] = [Vertex::A, Vertex::B, Vertex::C, Vertex::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        ['A', 'B', 'C', 'D'][self.index()]
    }

    fn param_name(self) -> char {
        self.letter().to_ascii_lowercase()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One of the four triangles, named by the vertex it leaves out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Triangle {
    Bcd = 1,
    Acd = 2,
    Abd = 3,
    Abc = 4,
}

impl Triangle {
    pub const ALL: [Triangle; 4] = [Triangle::Bcd, Triangle::Acd, Triangle::Abd, Triangle::Abc];

    pub fn from_index(k: usize) -> Option<Self> {
        Self::ALL.get(k.checked_sub(1)?).copied()
    }

    /// 1..=4
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn foreign(self) -> Vertex {
        Vertex::ALL[self.index() - 1]
    }

    pub fn vertices(self) -> [Vertex; 3] {
        let skip = self.foreign();
        let mut out = [Vertex::A; 3];
        for (slot, v) in out
            .iter_mut()
            .zip(Vertex::ALL.into_iter().filter(|v| *v != skip))
        {
            *slot = v;
        }
        out
    }

    /// The two vertices of this triangle other than `v`, i.e. the side
    /// opposite `v`.
    pub fn opposite_side(self, v: Vertex) -> [Vertex; 2] {
        let others: Vec<Vertex> = self.vertices().into_iter().filter(|w| *w != v).collect();
        assert_eq!(others.len(), 2, "{v} is not a vertex of triangle {self}");
        [others[0], others[1]]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.vertices() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Vertices `A, B, C, D` and the point `P`, all on `xy = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadConfig {
    params: [HyperbolaParam; 4],
    p: HyperbolaParam,
}

/// Builds the configuration with `d = 1/(abc)`.
///
/// Validation order is fixed: zero parameters, then repeated vertices,
/// then `p` colliding with a vertex, then `p` colliding with an orthocentre
/// parameter. The first failure is reported.
pub fn make_config(
    a: Rational,
    b: Rational,
    c: Rational,
    p: Rational,
) -> Result<QuadConfig, ConfigError> {
    for (name, value) in [('a', &a), ('b', &b), ('c', &c), ('p', &p)] {
        if value.is_zero() {
            return Err(ConfigError::InvalidParameter(name));
        }
    }
    let d = (&a * &b * &c).inverse().expect("product of nonzero values");
    let values = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if values[i] == values[j] {
                return Err(ConfigError::DuplicateVertex(
                    Vertex::ALL[i].param_name(),
                    Vertex::ALL[j].param_name(),
                    values[i].clone(),
                ));
            }
        }
    }
    for (v, value) in Vertex::ALL.into_iter().zip(&values) {
        if &p == value {
            return Err(ConfigError::DegeneratePosition(v.param_name().to_string()));
        }
    }
    for (v, value) in Vertex::ALL.into_iter().zip(&values) {
        if p == -value {
            let tri = Triangle::ALL[v.index()];
            return Err(ConfigError::DegeneratePosition(format!(
                "-{} (orthocentre of {tri})",
                v.param_name()
            )));
        }
    }
    let [a, b, c, d] = values.map(|t| HyperbolaParam::new(t).expect("checked nonzero"));
    Ok(QuadConfig {
        params: [a, b, c, d],
        p: HyperbolaParam::new(p).expect("checked nonzero"),
    })
}

impl QuadConfig {
    pub fn param(&self, v: Vertex) -> &Rational {
        self.params[v.index()].value()
    }

    pub fn a(&self) -> &Rational {
        self.param(Vertex::A)
    }

    pub fn b(&self) -> &Rational {
        self.param(Vertex::B)
    }

    pub fn c(&self) -> &Rational {
        self.param(Vertex::C)
    }

    pub fn d(&self) -> &Rational {
        self.param(Vertex::D)
    }

    pub fn p(&self) -> &Rational {
        self.p.value()
    }

    pub fn vertex(&self, v: Vertex) -> Point {
        hyp_point(&self.params[v.index()])
    }

    pub fn vertices(&self) -> [Point; 4] {
        Vertex::ALL.map(|v| self.vertex(v))
    }

    pub fn point_p(&self) -> Point {
        hyp_point(&self.p)
    }

    /// Parameters of the three vertices of `tri`, in letter order.
    pub fn triple(&self, tri: Triangle) -> [&Rational; 3] {
        tri.vertices().map(|v| self.param(v))
    }

    pub fn triangle_points(&self, tri: Triangle) -> [Point; 3] {
        tri.vertices().map(|v| self.vertex(v))
    }
}

/// Centre `(½Σt, ½Σ1/t)` and squared radius `¼Σ(t² + 1/t²)`.
pub fn circumcircle(cfg: &QuadConfig) -> Circle {
    let half = Rational::frac(1, 2);
    let params: Vec<&Rational> = Vertex::ALL.iter().map(|v| cfg.param(*v)).collect();
    let inv: Vec<Rational> = params
        .iter()
        .map(|t| t.inverse().expect("nonzero"))
        .collect();
    let sx: Rational = params.iter().copied().sum();
    let sy: Rational = inv.iter().sum();
    let r_sq: Rational = params
        .iter()
        .zip(&inv)
        .map(|(t, u)| t.square() + u.square())
        .sum::<Rational>()
        * Rational::frac(1, 4);
    Circle::new(Point::new(sx * &half, sy * &half), r_sq).expect("positive radius")
}

/// Orthocentre of `tri`, the hyperbola point with the foreign vertex's
/// parameter negated.
pub fn orthocentre(cfg: &QuadConfig, tri: Triangle) -> Point {
    let t = -cfg.param(tri.foreign());
    hyp_point(&HyperbolaParam::new(t).expect("nonzero"))
}

/// Centres of the configuration, indexed so that `h_k[0]` belongs to Δ1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentersCatalogue {
    pub o: Point,
    pub h: Point,
    pub n: Point,
    pub g: Point,
    pub m_c: Point,
    pub h_k: [Point; 4],
    pub n_k: [Point; 4],
    pub g_k: [Point; 4],
    pub r_sq_circum: Rational,
}

/// Evaluates the vector identities from the circumcentre: with
/// `s = Σ(V - O)`, `H = O + s`, `N = O + s/2`, `G = O + s/3`, `M_c = O + s/4`.
pub fn centers(cfg: &QuadConfig) -> CentersCatalogue {
    let gamma = circumcircle(cfg);
    let o = gamma.center().clone();
    let s = cfg
        .vertices()
        .iter()
        .fold(Point::origin(), |acc, v| &acc + &(v - &o));
    let along = |k: i64| &o + &s.scale(&Rational::frac(1, k));
    let h_k = Triangle::ALL.map(|t| orthocentre(cfg, t));
    let third = Rational::frac(1, 3);
    CentersCatalogue {
        h: along(1),
        n: along(2),
        g: along(3),
        m_c: along(4),
        n_k: h_k.clone().map(|h| o.midpoint(&h)),
        g_k: h_k.clone().map(|h| o.towards(&h, &third)),
        h_k,
        r_sq_circum: gamma.r_sq().clone(),
        o,
    }
}
