//! Closed forms in the hyperbola parameters.
//!
//! The engine builds every object by construction (intersections,
//! reflections, circles through three points). The functions here are the
//! printed closed-form expressions for the same objects, written for the
//! triangle ABC with parameters `a, b, c` (so `d = 1/(abc)`). Any other
//! triangle is handled by passing its own parameter triple. The verifier
//! compares the two routes.

use crate::geom::Point;
use crate::number::Rational;

fn int(n: i64) -> Rational {
    Rational::from(n)
}

/// Elementary symmetric functions `(a+b+c, ab+bc+ca, abc)`.
pub fn symmetric(a: &Rational, b: &Rational, c: &Rational) -> (Rational, Rational, Rational) {
    (a + b + c, a * b + b * c + c * a, a * b * c)
}

/// Normalized `(D, E, F)` of the four-parameter circumcircle equation
/// `2x² − 2xΣt + 2y² − 2yΣ1/t + (Σ pairs + Σ inverse pairs) = 0`.
pub fn circumcircle_four(params: [&Rational; 4]) -> (Rational, Rational, Rational) {
    let inv: Vec<Rational> = params
        .iter()
        .map(|t| t.inverse().expect("nonzero"))
        .collect();
    let mut pairs = Rational::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            pairs += &(params[i] * params[j]);
            pairs += &(&inv[i] * &inv[j]);
        }
    }
    let sum: Rational = params.iter().copied().sum();
    let inv_sum: Rational = inv.iter().sum();
    (-sum, -inv_sum, pairs * Rational::frac(1, 2))
}

/// Normalized `(D, E, F)` of the three-parameter circumcircle equation
/// `abc x² − (abc(a+b+c)+1)x + abc y² − (a²b²c² + ab+bc+ca)y + abc(ab+bc+ca) + a+b+c = 0`.
pub fn circumcircle_three(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> (Rational, Rational, Rational) {
    let (s1, s2, s3) = symmetric(a, b, c);
    let x = -(&s3 * &s1 + int(1));
    let y = -(s3.square() + &s2);
    let k = &s3 * &s2 + &s1;
    (x / &s3, y / &s3, k / &s3)
}

/// `R² = ¼ Σ (t² + 1/t²)`.
pub fn circumradius_sq(params: [&Rational; 4]) -> Rational {
    params
        .iter()
        .map(|t| t.square() + t.inverse().expect("nonzero").square())
        .sum::<Rational>()
        * Rational::frac(1, 4)
}

/// Reflection in `y = 1/p` followed by dilation about `P` with factor
/// `(abcp+1)/(abcp−1)`, expanded:
/// `x = (abc·hp − 2p + h)/(abcp − 1)`, `y = (abc(kp − 2) + k)/(1 − abcp)`.
pub fn similarity_map(abc: &Rational, p: &Rational, pt: &Point) -> Point {
    let (h, k) = (&pt.x, &pt.y);
    let den = abc * p - int(1);
    let x = (abc * h * p - int(2) * p + h) / &den;
    let y = (abc * (k * p - int(2)) + k) / -&den;
    Point::new(x, y)
}

/// Image of the vertex with parameter `a` under the similarity of the
/// triangle with parameters `(a, b, c)`:
/// `((a²bcp + a − 2p)/(abcp−1), (2a²bc − abcp − 1)/(a(abcp−1)))`.
pub fn similarity_image(a: &Rational, b: &Rational, c: &Rational, p: &Rational) -> Point {
    let abc = a * b * c;
    let den = &abc * p - int(1);
    let x = (&abc * a * p + a - int(2) * p) / &den;
    let y = (int(2) * &abc * a - &abc * p - int(1)) / (a * &den);
    Point::new(x, y)
}

/// Coefficient groups `[x²+y², x, y, 1]` of the printed Hagge circle
/// equation for the triangle `(a, b, c)`.
pub fn hagge_circle_printed(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    p: &Rational,
) -> [Rational; 4] {
    let (s1, s2, s3) = symmetric(a, b, c);
    let s3p = &s3 * p;
    let lead = &s3 * (&s3p - int(1));
    let x = -(s3.square() * p * &s1 + &s3 * &s1 - int(3) * &s3p + int(1));
    let y = s3.square() * &s3 * p - int(3) * s3.square() + (&s3p + int(1)) * &s2;
    let k = int(-2) * s3.square() * &s3 + s3.square() * p * &s1 + &s3 * &s2
        - (&s3p + int(1)) * &s1
        - int(2) * p;
    [lead, x, y, k]
}

/// Second meet of line `AP` with the circumcircle, for vertex `a` and the
/// two further parameters `b, c`.
pub fn circum_second_point(a: &Rational, b: &Rational, c: &Rational, p: &Rational) -> Point {
    let abc = a * b * c;
    let bc = b * c;
    let p2 = p.square();
    let den = &bc * (a.square() * &p2 + int(1));
    let x = a * &p2 * (&abc * (b + c) + int(1)) - p * (abc.square() + a * (b + c) - &bc) + &abc;
    let y = &abc * &p2 + p * (a.square() * &bc - &abc * (b + c) - int(1)) + a * bc.square() + b + c;
    Point::new(x / &den, y / &den)
}

/// Squared distance between the second points of the vertices `u` and `v`,
/// with `s, t` the remaining two parameters.
pub fn prime_dist_sq(
    u: &Rational,
    v: &Rational,
    s: &Rational,
    t: &Rational,
    p: &Rational,
) -> Rational {
    let st2 = (s * t).square();
    let p2 = p.square();
    let num = (u - v).square() * (s - p).square() * (t - p).square() * (&st2 + int(1));
    let den = &st2 * (u.square() * &p2 + int(1)) * (v.square() * &p2 + int(1));
    num / den
}

/// Isogonal conjugate of `P` in the triangle `(a, b, c)`:
/// `((a+b+c−p)/(1−abcp), (p(ab+bc+ca) − abc)/(abcp−1))`.
pub fn isogonal_conjugate(a: &Rational, b: &Rational, c: &Rational, p: &Rational) -> Point {
    let (s1, s2, s3) = symmetric(a, b, c);
    let den = &s3 * p - int(1);
    Point::new((s1 - p) / -&den, (p * s2 - s3) / den)
}

/// Squared distance between the isogonal conjugates in the two triangles
/// that omit `u` and `v` respectively, with `s, t` the shared vertices.
pub fn isogonal_dist_sq(
    u: &Rational,
    v: &Rational,
    s: &Rational,
    t: &Rational,
    p: &Rational,
) -> Rational {
    let p2 = p.square();
    let stp = s * t * p;
    let num = (u - v).square()
        * ((s * t).square() + int(1))
        * (s.square() * &p2 + int(1))
        * (t.square() * &p2 + int(1));
    let den = (u * &stp - int(1)).square() * (v * &stp - int(1)).square();
    num / den
}

/// The squared similarity ratio `Π(t²p² + 1) / Π(t − p)²` over all four
/// vertex parameters.
pub fn similarity_ratio_sq(params: [&Rational; 4], p: &Rational) -> Rational {
    let p2 = p.square();
    let num: Rational = params.iter().map(|t| t.square() * &p2 + int(1)).product();
    let den: Rational = params.iter().map(|t| (*t - p).square()).product();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    // E1: a = 2, b = 3, c = 1/2, d = 1/3, p = 1

    #[test]
    fn circumcircle_forms_agree_on_e1() {
        let (a, b, c, d) = (q("2"), q("3"), q("1/2"), q("1/3"));
        let four = circumcircle_four([&a, &b, &c, &d]);
        let three = circumcircle_three(&a, &b, &c);
        assert_eq!(four, three);
        assert_eq!(four.2, q("31/3"));
        assert_eq!(circumradius_sq([&a, &b, &c, &d]), q("481/72"));
    }

    #[test]
    fn similarity_on_e1() {
        let abc = q("3");
        let p = q("1");
        let img = similarity_map(&abc, &p, &Point::new(q("1/3"), q("3")));
        assert_eq!(img, Point::new(q("-1/3"), q("-3")));
        assert_eq!(
            similarity_image(&q("2"), &q("3"), &q("1/2"), &p),
            Point::new(q("3"), q("2"))
        );
    }

    #[test]
    fn printed_hagge_groups_on_e1() {
        let [lead, x, y, k] = hagge_circle_printed(&q("2"), &q("3"), &q("1/2"), &q("1"));
        assert_eq!(lead, q("6"));
        assert_eq!(x, q("-58"));
        assert_eq!(y, q("34"));
        assert_eq!(k, q("-3"));
    }

    #[test]
    fn metric_forms_on_e1() {
        let (a, b, c, d, p) = (q("2"), q("3"), q("1/2"), q("1/3"), q("1"));
        assert_eq!(
            circum_second_point(&a, &b, &c, &p),
            Point::new(q("23/15"), q("11/15"))
        );
        assert_eq!(prime_dist_sq(&a, &d, &b, &c, &p), q("13/18"));
        assert_eq!(
            isogonal_conjugate(&a, &b, &c, &p),
            Point::new(q("-9/4"), q("11/4"))
        );
        assert_eq!(
            isogonal_conjugate(&d, &b, &c, &p),
            Point::new(q("17/3"), q("-13/3"))
        );
        assert_eq!(isogonal_dist_sq(&a, &d, &b, &c, &p), q("8125/72"));
        assert_eq!(similarity_ratio_sq([&a, &b, &c, &d], &p), q("625/4"));
        assert_eq!(q("8125/72") / q("13/18"), q("625/4"));
    }
}
