//! The check catalogue, run against one configuration.
//!
//! Each check recomputes its claim by an exact route and records the
//! decisive values as a witness. Report order is fixed by the catalogue.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::config::{
    centers, circumcircle, make_config, CentersCatalogue, QuadConfig, Triangle, Vertex,
};
use crate::formulas;
use crate::geom::{
    all_collinear, centroid, circle_through, dist_sq, nine_point_circle, orientation,
    orthocentre_of, reflect_point, second_intersection, Circle, Point,
};
use crate::hagge::{
    axes, hagge_systems, quadrangle_metrics, HaggeSystem, QuadrangleMetrics, PAIRS,
};
use crate::number::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The printed formula disagrees with the construction; reported, not
    /// counted as a failure.
    DocumentedDiscrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DocumentedDiscrepancy => "documented-discrepancy",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessValue {
    Number(Rational),
    Point(Point),
    Flag(bool),
}

impl fmt::Display for WitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessValue::Number(r) => write!(f, "{r}"),
            WitnessValue::Point(p) => write!(f, "{p}"),
            WitnessValue::Flag(b) => write!(f, "{b}"),
        }
    }
}

impl From<Rational> for WitnessValue {
    fn from(r: Rational) -> Self {
        WitnessValue::Number(r)
    }
}

impl From<&Rational> for WitnessValue {
    fn from(r: &Rational) -> Self {
        WitnessValue::Number(r.clone())
    }
}

impl From<Point> for WitnessValue {
    fn from(p: Point) -> Self {
        WitnessValue::Point(p)
    }
}

impl From<&Point> for WitnessValue {
    fn from(p: &Point) -> Self {
        WitnessValue::Point(p.clone())
    }
}

impl From<bool> for WitnessValue {
    fn from(b: bool) -> Self {
        WitnessValue::Flag(b)
    }
}

/// Named exact values in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness(Vec<(String, WitnessValue)>);

impl Witness {
    pub fn push(&mut self, name: impl Into<String>, value: impl Into<WitnessValue>) {
        self.0.push((name.into(), value.into()));
    }

    pub fn get(&self, name: &str) -> Option<&WitnessValue> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(String, WitnessValue)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub witness: Witness,
}

impl CheckResult {
    /// False only for [`Status::Fail`].
    pub fn pass(&self) -> bool {
        self.status != Status::Fail
    }
}

impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CheckResult", 5)?;
        s.serialize_field("id", &self.id)?;
        s.serialize_field("pass", &self.pass())?;
        s.serialize_field("status", self.status.as_str())?;
        s.serialize_field("description", &self.description)?;
        s.serialize_field("witness", &self.witness)?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Params {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub p: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub params: Params,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.results.iter().all(CheckResult::pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VerificationReport", 3)?;
        s.serialize_field("params", &self.params)?;
        s.serialize_field("checks", &self.results)?;
        s.serialize_field("pass", &self.pass())?;
        s.end()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        writeln!(
            f,
            "a = {}, b = {}, c = {}, d = {}, p = {}",
            p.a, p.b, p.c, p.d, p.p
        )?;
        for r in &self.results {
            writeln!(f, "{}", CheckLine(r))?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} failed: {}",
            self.results.len(),
            failed,
            if self.pass() { "PASS" } else { "FAIL" }
        )
    }
}

/// One human-readable report line for a check, followed by its witness
/// unless it passed.
pub struct CheckLine<'a>(pub &'a CheckResult);

impl fmt::Display for CheckLine<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0;
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::DocumentedDiscrepancy => "NOTE",
        };
        write!(f, "{tag:<5}{:<14}{}", r.id, r.description)?;
        if r.status != Status::Pass {
            for (k, v) in r.witness.iter() {
                write!(f, "\n       {k} = {v}")?;
            }
        }
        Ok(())
    }
}

/// Catalogue IDs in report order.
pub fn catalogue() -> Vec<String> {
    let mut ids: Vec<String> = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"]
        .iter()
        .map(|s| format!("S1.{s}"))
        .collect();
    ids.push("T1".into());
    ids.push("T1.reflO".into());
    ids.extend(Vertex::ALL.iter().map(|v| format!("T2.{v}")));
    for prefix in ["H.fund", "H.prime", "H.collin", "SIM.orient"] {
        ids.extend((1..=4).map(|k| format!("{prefix}.{k}")));
    }
    ids.push("H.eq39".into());
    ids.push("H.eq39.const".into());
    ids.extend((1..=4).map(|k| format!("ISO.par.{k}")));
    for id in ["E.second", "E.313", "E.316", "E.317", "E.circum", "CONC"] {
        ids.push(id.into());
    }
    ids
}

/// Everything the checks need, computed once.
struct Scene {
    cfg: QuadConfig,
    p: Point,
    verts: [Point; 4],
    gamma: Circle,
    cat: CentersCatalogue,
    seconds: [Point; 4],
    systems: [HaggeSystem; 4],
    metrics: QuadrangleMetrics,
}

impl Scene {
    fn build(cfg: &QuadConfig) -> Scene {
        const VALID: &str = "valid configurations have no degenerate constructions";
        let systems = hagge_systems(cfg).expect(VALID);
        let seconds = crate::hagge::circum_second_points(cfg).expect(VALID);
        Scene {
            p: cfg.point_p(),
            verts: cfg.vertices(),
            gamma: circumcircle(cfg),
            cat: centers(cfg),
            metrics: quadrangle_metrics(cfg).expect(VALID),
            seconds,
            systems,
            cfg: cfg.clone(),
        }
    }

    fn tri_points(&self, tri: Triangle) -> [Point; 3] {
        self.cfg.triangle_points(tri)
    }
}

struct Builder {
    results: Vec<CheckResult>,
}

impl Builder {
    fn check(&mut self, id: impl Into<String>, description: &str, ok: bool, witness: Witness) {
        self.results.push(CheckResult {
            id: id.into(),
            description: description.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        });
    }
}

fn sym(v: Vertex, k: usize) -> String {
    format!("{}{k}", v.letter())
}

fn facts(s: &Scene, out: &mut Builder) {
    let cat = &s.cat;
    let r_sq = &cat.r_sq_circum;
    let quarter = Rational::frac(1, 4);
    let ninth = Rational::frac(1, 9);

    let mut w = Witness::default();
    let mut ok = true;
    w.push("N", &cat.n);
    for (k, v) in Vertex::ALL.iter().enumerate() {
        let det = orientation(&s.verts[k], &cat.h_k[k], &cat.n);
        ok &= det.is_zero();
        w.push(format!("det({v},H{},N)", k + 1), det);
    }
    out.check("S1.i", "lines AH1, BH2, CH3, DH4 concur at N", ok, w);

    let mut w = Witness::default();
    let mut ok = true;
    w.push("G", &cat.g);
    for (k, v) in Vertex::ALL.iter().enumerate() {
        let det = orientation(&s.verts[k], &cat.n_k[k], &cat.g);
        ok &= det.is_zero();
        w.push(format!("det({v},N{},G)", k + 1), det);
    }
    out.check("S1.ii", "lines AN1, BN2, CN3, DN4 concur at G", ok, w);

    let mut w = Witness::default();
    let mut ok = true;
    w.push("M_c", &cat.m_c);
    for (k, v) in Vertex::ALL.iter().enumerate() {
        let det = orientation(&s.verts[k], &cat.g_k[k], &cat.m_c);
        ok &= det.is_zero();
        w.push(format!("det({v},G{},M_c)", k + 1), det);
    }
    out.check("S1.iii", "lines AG1, BG2, CG3, DG4 concur at M_c", ok, w);

    let mut w = Witness::default();
    let mut ok = true;
    w.push("H", &cat.h);
    w.push("R^2", r_sq);
    for k in 0..4 {
        let d = dist_sq(&cat.h, &cat.h_k[k]);
        let rotated = &cat.n.scale(&Rational::from(2)) - &s.verts[k];
        ok &= &d == r_sq && rotated == cat.h_k[k];
        w.push(format!("|HH{}|^2", k + 1), d);
    }
    out.check(
        "S1.iv",
        "H1..H4 on circle (H, R), half-turn image of ABCD about N",
        ok,
        w,
    );

    let mut w = Witness::default();
    let mut ok = true;
    let half = Rational::frac(1, 2);
    for (k, tri) in Triangle::ALL.iter().enumerate() {
        let [p1, p2, p3] = s.tri_points(*tri);
        let npc = nine_point_circle(&p1, &p2, &p3).expect("nondegenerate triangle");
        let d = dist_sq(&cat.n, &cat.n_k[k]);
        let homothety = &cat.n_k[k] - &cat.o == (&cat.h_k[k] - &cat.o).scale(&half);
        ok &= npc.center() == &cat.n_k[k] && d == r_sq * &quarter && homothety;
        w.push(format!("N{}", k + 1), &cat.n_k[k]);
        w.push(format!("|NN{}|^2", k + 1), d);
    }
    w.push("R^2/4", r_sq * &quarter);
    out.check(
        "S1.v",
        "N1..N4 on circle (N, R/2), homothetic to H1..H4 from O",
        ok,
        w,
    );

    let mut w = Witness::default();
    let mut ok = true;
    for (k, tri) in Triangle::ALL.iter().enumerate() {
        let [p1, p2, p3] = s.tri_points(*tri);
        let npc = nine_point_circle(&p1, &p2, &p3).expect("nondegenerate triangle");
        ok &= npc.contains(&cat.n) && npc.r_sq() == &(r_sq * &quarter);
        w.push(format!("power(N, npc{})", k + 1), npc.power(&cat.n));
    }
    out.check(
        "S1.vi",
        "the four nine-point circles, radius R/2, pass through N",
        ok,
        w,
    );

    let mut w = Witness::default();
    let mut ok = true;
    for (k, tri) in Triangle::ALL.iter().enumerate() {
        let [p1, p2, p3] = s.tri_points(*tri);
        let classical = orthocentre_of(&p1, &p2, &p3).expect("nondegenerate triangle");
        let on_hyperbola = &classical.x * &classical.y;
        ok &= classical == cat.h_k[k] && on_hyperbola.is_one();
        w.push(format!("H{}", k + 1), classical);
    }
    out.check("S1.vii", "orthocentres H1..H4 lie on xy = 1", ok, w);

    let mut w = Witness::default();
    w.push("N", &cat.n);
    out.check(
        "S1.viii",
        "centre of xy = 1 is N",
        cat.n == Point::origin(),
        w,
    );

    let mut w = Witness::default();
    let mut ok = true;
    for (k, tri) in Triangle::ALL.iter().enumerate() {
        let [p1, p2, p3] = s.tri_points(*tri);
        let d = dist_sq(&cat.g, &cat.g_k[k]);
        ok &= centroid(&p1, &p2, &p3) == cat.g_k[k] && d == r_sq * &ninth;
        w.push(format!("|GG{}|^2", k + 1), d);
    }
    w.push("R^2/9", r_sq * &ninth);
    out.check("S1.ix", "centroids G1..G4 on circle (G, R/3)", ok, w);

    let mut w = Witness::default();
    let oh = &cat.h - &cat.o;
    let at = |t: Rational| cat.o.towards(&cat.h, &t);
    let ok = all_collinear(&[
        cat.o.clone(),
        cat.m_c.clone(),
        cat.g.clone(),
        cat.n.clone(),
        cat.h.clone(),
    ]) && cat.m_c == at(Rational::frac(1, 4))
        && cat.g == at(Rational::frac(1, 3))
        && cat.n == at(Rational::frac(1, 2));
    w.push("O", &cat.o);
    w.push("M_c", &cat.m_c);
    w.push("G", &cat.g);
    w.push("H", &cat.h);
    w.push("OH", oh);
    out.check(
        "S1.x",
        "O, M_c, G, N, H collinear at 0, 1/4, 1/3, 1/2, 1",
        ok,
        w,
    );
}

fn theorems(s: &Scene, out: &mut Builder) {
    let mut w = Witness::default();
    let mut pts: Vec<Point> = s.systems.iter().map(|h| h.center_q.clone()).collect();
    for (k, q) in pts.iter().enumerate() {
        w.push(format!("Q{}", k + 1), q);
    }
    pts.push(s.p.clone());
    out.check(
        "T1",
        "centres Q1..Q4 collinear on a line through P",
        all_collinear(&pts),
        w,
    );

    let (l, l2) = axes(&s.cfg);
    let r1 = reflect_point(&s.cat.o, &l);
    let r2 = reflect_point(&s.cat.o, &l2);
    let det = orientation(&r1, &r2, &s.p);
    let mut w = Witness::default();
    w.push("O|L", &r1);
    w.push("O|L'", &r2);
    w.push("det", &det);
    out.check(
        "T1.reflO",
        "reflections of O in L and L' collinear with P",
        det.is_zero(),
        w,
    );

    for v in Vertex::ALL {
        let mut w = Witness::default();
        let mut pts = vec![s.p.clone()];
        for (k, sys) in s.systems.iter().enumerate() {
            let k = k + 1;
            w.push(sym(v, k), sys.unprimed(v));
            w.push(format!("{}'", sym(v, k)), sys.primed(v));
            pts.push(sys.unprimed(v).clone());
            pts.push(sys.primed(v).clone());
        }
        let desc = format!("{0}1..{0}4, {0}1'..{0}4' on one line through P", v.letter());
        out.check(format!("T2.{v}"), &desc, all_collinear(&pts), w);
    }
}

fn hagge_checks(s: &Scene, out: &mut Builder) {
    for sys in &s.systems {
        let k = sys.triangle.index();
        let foreign = sys.triangle.foreign();
        let mut w = Witness::default();
        let sigma_o = sys.sim.apply(&s.cat.o);
        let scaled = s.gamma.r_sq() * &sys.sim.factor().square();
        let ok = sys.circle.contains(&sys.foreign_ortho)
            && sys.circle.contains(&sys.foreign_prime)
            && sigma_o == sys.center_q
            && sys.circle.r_sq() == &scaled;
        w.push(format!("Q{k}"), &sys.center_q);
        w.push(format!("r{k}^2"), sys.circle.r_sq());
        w.push("factor", sys.sim.factor());
        w.push(
            format!("power({})", sym(foreign, k)),
            sys.circle.power(&sys.foreign_ortho),
        );
        w.push(
            format!("power({}')", sym(foreign, k)),
            sys.circle.power(&sys.foreign_prime),
        );
        out.check(
            format!("H.fund.{k}"),
            &format!("orthocentre of {} on Γ{k} = σ{k}(Γ)", sys.triangle),
            ok,
            w,
        );
    }

    for sys in &s.systems {
        let k = sys.triangle.index();
        let mut w = Witness::default();
        let mut ok = true;
        for (v, pt) in sys.triangle.vertices().iter().zip(&sys.prime_pts) {
            let pow = sys.circle.power(pt);
            ok &= pow.is_zero();
            w.push(format!("{}'", sym(*v, k)), pt);
            w.push(format!("power({}')", sym(*v, k)), pow);
        }
        out.check(
            format!("H.prime.{k}"),
            &format!(
                "reflections of the second points in the sides of {} lie on Γ{k}",
                sys.triangle
            ),
            ok,
            w,
        );
    }

    for sys in &s.systems {
        let k = sys.triangle.index();
        let mut w = Witness::default();
        let mut ok = true;
        for (v, (img, pr)) in sys
            .triangle
            .vertices()
            .iter()
            .zip(sys.image_pts.iter().zip(&sys.prime_pts))
        {
            let det = orientation(&s.p, img, pr);
            ok &= det.is_zero();
            w.push(format!("det(P,{0},{0}')", sym(*v, k)), det);
        }
        let fv = sys.triangle.foreign();
        let det = orientation(&s.p, &sys.foreign_ortho, &sys.foreign_prime);
        ok &= det.is_zero();
        w.push(format!("det(P,{0},{0}')", sym(fv, k)), det);
        out.check(
            format!("H.collin.{k}"),
            &format!("P, X{k}, X{k}' collinear for every letter X"),
            ok,
            w,
        );
    }

    for sys in &s.systems {
        let k = sys.triangle.index();
        let [p1, p2, p3] = s.tri_points(sys.triangle);
        let before = orientation(&p1, &p2, &p3);
        let after = orientation(
            &sys.sim.apply(&p1),
            &sys.sim.apply(&p2),
            &sys.sim.apply(&p3),
        );
        let fixed = sys.sim.apply(&s.p) == s.p;
        let ok = fixed
            && before.signum() * after.signum() < 0
            && after == -(&before * &sys.sim.factor().square());
        let mut w = Witness::default();
        w.push("area2", before);
        w.push("image_area2", after);
        w.push("factor", sys.sim.factor());
        w.push("fixes_P", fixed);
        out.check(
            format!("SIM.orient.{k}"),
            &format!("σ{k} fixes P, reverses orientation, scales areas by factor²"),
            ok,
            w,
        );
    }

    let mut w = Witness::default();
    let mut ok = true;
    let mut wc = Witness::default();
    let mut const_ok = true;
    for sys in &s.systems {
        let k = sys.triangle.index();
        let [a, b, c] = s.cfg.triple(sys.triangle);
        let printed = formulas::hagge_circle_printed(a, b, c, s.cfg.p());
        let built = sys.scaled_coefficients(&s.cfg);
        ok &= printed[..3] == built[..3];
        for (name, (pr, bu)) in ["lead", "x", "y"].iter().zip(printed.iter().zip(&built)) {
            w.push(format!("{name}{k}"), bu);
            if pr != bu {
                w.push(format!("{name}{k}.printed"), pr);
            }
        }
        const_ok &= printed[3] == built[3];
        wc.push(format!("printed{k}"), &printed[3]);
        wc.push(format!("constructed{k}"), &built[3]);
    }
    out.check(
        "H.eq39",
        "Γk x²+y², x and y coefficients match the printed equation",
        ok,
        w,
    );
    out.results.push(CheckResult {
        id: "H.eq39.const".into(),
        description: "Γk constant term against the printed equation".into(),
        status: if const_ok {
            Status::Pass
        } else {
            Status::DocumentedDiscrepancy
        },
        witness: wc,
    });

    for sys in &s.systems {
        let k = sys.triangle.index();
        let mut w = Witness::default();
        let mut ok = true;
        w.push(format!("Pg{k}"), &sys.isogonal);
        for v in sys.triangle.vertices() {
            let vp = &s.verts[v.index()];
            let first = &s.seconds[v.index()];
            let second = second_intersection(&s.gamma, vp, &sys.isogonal)
                .expect("Pg is never a vertex")
                .point;
            let [e1, e2] = sys.triangle.opposite_side(v);
            let side = &s.verts[e2.index()] - &s.verts[e1.index()];
            let cross = (&second - first).cross(&side);
            ok &= cross.is_zero();
            w.push(format!("{v}''"), second);
            w.push(format!("cross({v}'{v}'',{e1}{e2})"), cross);
        }
        out.check(
            format!("ISO.par.{k}"),
            &format!(
                "chords V'V'' parallel to the opposite sides of {}",
                sys.triangle
            ),
            ok,
            w,
        );
    }
}

fn others(u: Vertex, v: Vertex) -> [Vertex; 2] {
    let rest: Vec<Vertex> = Vertex::ALL
        .into_iter()
        .filter(|w| *w != u && *w != v)
        .collect();
    [rest[0], rest[1]]
}

fn metric_checks(s: &Scene, out: &mut Builder) {
    let cfg = &s.cfg;
    let p = cfg.p();

    let mut w = Witness::default();
    let mut ok = true;
    for v in Vertex::ALL {
        let s1 = Vertex::ALL[(v.index() + 1) % 4];
        let s2 = Vertex::ALL[(v.index() + 2) % 4];
        let closed = formulas::circum_second_point(cfg.param(v), cfg.param(s1), cfg.param(s2), p);
        ok &= closed == s.seconds[v.index()];
        w.push(format!("{v}'"), &s.seconds[v.index()]);
    }
    out.check(
        "E.second",
        "A'..D' match the closed form for the second meet of VP",
        ok,
        w,
    );

    let mut w = Witness::default();
    let mut ok = true;
    for (i, (u, v)) in PAIRS.iter().enumerate() {
        let [e1, e2] = others(*u, *v);
        let closed = formulas::prime_dist_sq(
            cfg.param(*u),
            cfg.param(*v),
            cfg.param(e1),
            cfg.param(e2),
            p,
        );
        ok &= closed == s.metrics.sq_dists_prime[i];
        w.push(format!("({u}'{v}')^2"), &s.metrics.sq_dists_prime[i]);
    }
    out.check(
        "E.313",
        "squared sides and diagonals of A'B'C'D' match the closed form",
        ok,
        w,
    );

    let mut w = Witness::default();
    let mut ok = true;
    for (i, (u, v)) in PAIRS.iter().enumerate() {
        let [e1, e2] = others(*u, *v);
        let closed = formulas::isogonal_dist_sq(
            cfg.param(*u),
            cfg.param(*v),
            cfg.param(e1),
            cfg.param(e2),
            p,
        );
        ok &= closed == s.metrics.sq_dists_isog[i];
        w.push(
            format!("(Pg{}Pg{})^2", u.index() + 1, v.index() + 1),
            &s.metrics.sq_dists_isog[i],
        );
    }
    out.check(
        "E.316",
        "squared sides and diagonals of Pg1Pg2Pg3Pg4 match the closed form",
        ok,
        w,
    );

    let mut w = Witness::default();
    w.push("ratio^2", &s.metrics.ratio_sq);
    for (i, (u, v)) in PAIRS.iter().enumerate() {
        let ratio = &s.metrics.sq_dists_isog[i] / &s.metrics.sq_dists_prime[i];
        w.push(format!("{u}{v}"), ratio);
    }
    out.check(
        "E.317",
        "Pg1Pg2Pg3Pg4 similar to A'B'C'D' with the symmetric squared ratio",
        s.metrics.is_similar(),
        w,
    );

    let params = Vertex::ALL.map(|v| cfg.param(v));
    let general = s.gamma.general();
    let four = formulas::circumcircle_four(params);
    let three = formulas::circumcircle_three(cfg.a(), cfg.b(), cfg.c());
    let r_sq = formulas::circumradius_sq(params);
    let through =
        circle_through(&s.verts[0], &s.verts[1], &s.verts[2]).expect("A, B, C not collinear");
    let ok = general == four && general == three && &r_sq == s.gamma.r_sq() && through == s.gamma;
    let mut w = Witness::default();
    w.push("O", s.gamma.center());
    w.push("R^2", s.gamma.r_sq());
    w.push("D", general.0);
    w.push("E", general.1);
    w.push("F", general.2);
    out.check(
        "E.circum",
        "circumcircle matches the four- and three-parameter equations",
        ok,
        w,
    );

    let mut w = Witness::default();
    let mut ok = true;
    for v in Vertex::ALL {
        let rest: Vec<&Point> = Vertex::ALL
            .iter()
            .filter(|u| **u != v)
            .map(|u| &s.verts[u.index()])
            .collect();
        let circ =
            circle_through(rest[0], rest[1], rest[2]).expect("hyperbola points not collinear");
        let pow = circ.power(&s.verts[v.index()]);
        ok &= pow.is_zero();
        w.push(format!("power({v})"), pow);
    }
    out.check(
        "CONC",
        "circle through any three vertices contains the fourth",
        ok,
        w,
    );
}

/// Runs the full catalogue on `cfg`.
pub fn run_all(cfg: &QuadConfig) -> VerificationReport {
    let scene = Scene::build(cfg);
    let mut out = Builder {
        results: Vec::new(),
    };
    facts(&scene, &mut out);
    theorems(&scene, &mut out);
    hagge_checks(&scene, &mut out);
    metric_checks(&scene, &mut out);
    let order = catalogue();
    out.results.sort_by_key(|r| {
        order
            .iter()
            .position(|id| *id == r.id)
            .unwrap_or(usize::MAX)
    });
    VerificationReport {
        params: Params {
            a: cfg.a().clone(),
            b: cfg.b().clone(),
            c: cfg.c().clone(),
            d: cfg.d().clone(),
            p: cfg.p().clone(),
        },
        results: out.results,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SampleError {
    #[error("count must be at least 1")]
    ZeroCount,
    #[error("max_mag must be at least 2, got {0}")]
    MagnitudeTooSmall(u64),
}

/// Deterministic random configurations. Numerators and denominators are
/// drawn from `1..=max_mag` with a random sign; invalid draws are rejected.
pub fn sample_configs(
    seed: u64,
    count: usize,
    max_mag: u64,
) -> Result<Vec<QuadConfig>, SampleError> {
    if count == 0 {
        return Err(SampleError::ZeroCount);
    }
    if max_mag < 2 {
        return Err(SampleError::MagnitudeTooSmall(max_mag));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        let num = rng.gen_range(1..=max_mag) as i64;
        let den = rng.gen_range(1..=max_mag) as i64;
        let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
        Rational::frac(sign * num, den)
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (a, b, c, p) = (
            draw(&mut rng),
            draw(&mut rng),
            draw(&mut rng),
            draw(&mut rng),
        );
        if let Ok(cfg) = make_config(a, b, c, p) {
            out.push(cfg);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn e1() -> QuadConfig {
        make_config(q("2"), q("3"), q("1/2"), q("1")).unwrap()
    }

    #[test]
    fn e1_report() {
        let report = run_all(&e1());
        let ids: Vec<&str> = report.results.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, catalogue());
        for r in &report.results {
            if r.id == "H.eq39.const" {
                assert_eq!(r.status, Status::DocumentedDiscrepancy);
                assert_eq!(
                    r.witness.get("printed4"),
                    Some(&WitnessValue::Number(q("-3")))
                );
                assert_eq!(
                    r.witness.get("constructed4"),
                    Some(&WitnessValue::Number(q("28")))
                );
            } else {
                assert_eq!(r.status, Status::Pass, "{}", CheckLine(r));
            }
        }
        assert!(report.pass());
    }

    #[test]
    fn second_example_passes() {
        let report = run_all(&make_config(q("1"), q("-1"), q("2"), q("5")).unwrap());
        assert!(report.pass(), "{report}");
    }

    #[test]
    fn json_is_stable() {
        let a = run_all(&e1()).to_json();
        let b = run_all(&e1()).to_json();
        assert_eq!(a, b);
        assert!(a.starts_with(
            r#"{"params":{"a":"2","b":"3","c":"1/2","d":"1/3","p":"1"},"checks":[{"id":"S1.i","pass":true"#
        ));
        assert!(a.ends_with(r#"],"pass":true}"#));
    }

    #[test]
    fn fail_status_counts() {
        let mut report = run_all(&e1());
        report.results[0].status = Status::Fail;
        assert!(!report.pass());
        assert_eq!(report.failures().count(), 1);
        assert!(report.to_json().ends_with(r#""pass":false}"#));
    }

    #[test]
    fn sampler_contract() {
        let first = sample_configs(42, 3, 9).unwrap();
        assert_eq!(first.len(), 3);
        assert_eq!(first, sample_configs(42, 3, 9).unwrap());
        assert_ne!(
            sample_configs(42, 1, 9).unwrap(),
            sample_configs(43, 1, 9).unwrap()
        );
        for cfg in &first {
            let rebuilt = make_config(
                cfg.a().clone(),
                cfg.b().clone(),
                cfg.c().clone(),
                cfg.p().clone(),
            );
            assert_eq!(rebuilt.as_ref(), Ok(cfg));
        }
        assert_eq!(sample_configs(1, 0, 9), Err(SampleError::ZeroCount));
        assert_eq!(
            sample_configs(1, 1, 1),
            Err(SampleError::MagnitudeTooSmall(1))
        );
    }
}
