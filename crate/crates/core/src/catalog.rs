//! Named morphisms: generators, the (2,2) and (2,3) bases, polygons, relation sides.
//!
//! Pictures are transcribed with [`Leg`]: `In(i)` and `Out(j)` are the `i`-th bottom and
//! `j`-th top endpoints counted from the left, `V(k)` is the `k`-th vertex. Each vertex
//! lists its neighbours counterclockwise as drawn.

use crate::diagram::{Diagram, End, Morphism, Wiring};
use crate::scalar::{rat, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    In(usize),
    Out(usize),
    V(usize),
}

use Leg::{In, Out, V};

/// Builds the single-diagram morphism `m -> n` drawn by `verts` and `strands`.
pub fn sketch(m: usize, n: usize, verts: &[[Leg; 3]], strands: &[(Leg, Leg)]) -> Morphism {
    let pos = |l: Leg| match l {
        In(i) => {
            assert!((1..=m).contains(&i), "input {i} out of range");
            m - i
        }
        Out(j) => {
            assert!((1..=n).contains(&j), "output {j} out of range");
            m + j - 1
        }
        V(_) => unreachable!("strands join boundary points"),
    };
    let mut w = Wiring::new(m + n);
    w.vertices(verts.len());
    let mut used = vec![[false; 3]; verts.len()];
    for (v, legs) in verts.iter().enumerate() {
        for (s, &l) in legs.iter().enumerate() {
            if used[v][s] {
                continue;
            }
            used[v][s] = true;
            let other = match l {
                V(u) => {
                    let t = (0..3)
                        .find(|&t| !used[u][t] && verts[u][t] == V(v))
                        .unwrap_or_else(|| panic!("vertex {u} does not list vertex {v}"));
                    used[u][t] = true;
                    End::Slot(u, t)
                }
                _ => End::Leg(pos(l)),
            };
            w.link(End::Slot(v, s), other);
        }
    }
    for &(a, b) in strands {
        w.link(End::Leg(pos(a)), End::Leg(pos(b)));
    }
    let d = w.finish().expect("sketch is a well-formed diagram");
    Morphism::from_diagram(m, n, d)
}

pub fn identity() -> Morphism {
    sketch(1, 1, &[], &[(In(1), Out(1))])
}

pub fn identity_n(k: usize) -> Morphism {
    let strands: Vec<(Leg, Leg)> = (1..=k).map(|i| (In(i), Out(i))).collect();
    sketch(k, k, &[], &strands)
}

pub fn cup() -> Morphism {
    sketch(0, 2, &[], &[(Out(1), Out(2))])
}

pub fn cap() -> Morphism {
    sketch(2, 0, &[], &[(In(1), In(2))])
}

pub fn merge() -> Morphism {
    sketch(2, 1, &[[Out(1), In(1), In(2)]], &[])
}

pub fn split() -> Morphism {
    sketch(1, 2, &[[Out(2), Out(1), In(1)]], &[])
}

pub fn cross() -> Morphism {
    sketch(2, 2, &[], &[(In(1), Out(2)), (In(2), Out(1))])
}

pub fn jail() -> Morphism {
    identity_n(2)
}

pub fn hourglass() -> Morphism {
    sketch(2, 2, &[], &[(In(1), In(2)), (Out(1), Out(2))])
}

/// Two vertical strands joined by a horizontal edge.
pub fn h_diagram() -> Morphism {
    sketch(2, 2, &[[Out(1), In(1), V(1)], [Out(2), V(0), In(2)]], &[])
}

/// Merge followed by split.
pub fn i_diagram() -> Morphism {
    sketch(2, 2, &[[V(1), In(1), In(2)], [Out(2), Out(1), V(0)]], &[])
}

/// Left strand carrying two vertices whose edges cross to the right corners.
pub fn dotcross() -> Morphism {
    sketch(2, 2, &[[Out(2), V(1), In(1)], [Out(1), V(0), In(2)]], &[])
}

/// jail, hourglass, cross, H, I.
pub fn bigfive() -> Vec<Morphism> {
    vec![jail(), hourglass(), cross(), h_diagram(), i_diagram()]
}

/// The sixteen diagrams spanning Hom(X^2, X^3), in the order they are listed.
pub fn particles() -> Vec<Morphism> {
    vec![
        // planar trees
        sketch(
            2,
            3,
            &[[Out(2), V(1), V(2)], [V(0), Out(1), In(1)], [Out(3), V(0), In(2)]],
            &[],
        ),
        sketch(
            2,
            3,
            &[[Out(2), Out(1), V(1)], [Out(3), V(0), V(2)], [V(1), In(1), In(2)]],
            &[],
        ),
        sketch(
            2,
            3,
            &[[Out(3), Out(2), V(1)], [V(0), Out(1), V(2)], [V(1), In(1), In(2)]],
            &[],
        ),
        sketch(
            2,
            3,
            &[[V(1), Out(1), In(1)], [V(2), V(0), In(2)], [Out(3), Out(2), V(1)]],
            &[],
        ),
        sketch(
            2,
            3,
            &[[Out(3), V(1), In(2)], [V(2), In(1), V(0)], [Out(2), Out(1), V(1)]],
            &[],
        ),
        // a strand and a tripod
        sketch(2, 3, &[[Out(3), Out(2), Out(1)]], &[(In(1), In(2))]),
        sketch(2, 3, &[[Out(3), Out(2), In(2)]], &[(In(1), Out(1))]),
        sketch(2, 3, &[[Out(2), Out(1), In(1)]], &[(In(2), Out(3))]),
        sketch(2, 3, &[[Out(3), In(1), In(2)]], &[(Out(1), Out(2))]),
        sketch(2, 3, &[[Out(1), In(1), In(2)]], &[(Out(2), Out(3))]),
        sketch(2, 3, &[[Out(2), In(1), In(2)]], &[(Out(1), Out(3))]),
        sketch(2, 3, &[[Out(3), Out(1), In(1)]], &[(Out(2), In(2))]),
        sketch(2, 3, &[[Out(3), Out(1), In(2)]], &[(Out(2), In(1))]),
        sketch(2, 3, &[[Out(2), Out(1), In(2)]], &[(Out(3), In(1))]),
        sketch(2, 3, &[[Out(3), Out(2), In(1)]], &[(Out(1), In(2))]),
        // the first tree with its inputs crossed
        sketch(
            2,
            3,
            &[[Out(2), V(1), V(2)], [V(0), Out(1), In(2)], [Out(3), V(0), In(1)]],
            &[],
        ),
    ]
}

/// Cycle of `k` vertices, vertex `i` carrying boundary leg `i`; each vertex is ordered
/// (leg, previous, next), which is how a convex polygon with outward legs reads when its
/// legs are numbered clockwise.
pub fn polygon_diagram(k: usize) -> Diagram {
    assert!(k >= 2);
    let mut w = Wiring::new(k);
    w.vertices(k);
    for i in 0..k {
        w.link(End::Slot(i, 0), End::Leg(i));
        w.link(End::Slot(i, 2), End::Slot((i + 1) % k, 1));
    }
    w.finish().expect("polygon is well-formed")
}

pub fn bigon() -> Morphism {
    Morphism::from_diagram(1, 1, polygon_diagram(2))
}

pub fn triangle() -> Morphism {
    Morphism::from_diagram(2, 1, polygon_diagram(3))
}

pub fn square() -> Morphism {
    Morphism::from_diagram(2, 2, polygon_diagram(4))
}

pub fn pentagon() -> Morphism {
    Morphism::from_diagram(2, 3, polygon_diagram(5))
}

fn combo(parts: &[(RatFunc, &Morphism)]) -> Morphism {
    let (m, n) = parts[0].1.profile();
    let mut acc = Morphism::zero(m, n);
    for (c, f) in parts {
        acc = acc.add(&f.scale(c)).expect("equal profiles");
    }
    acc
}

fn over_d_plus_2(num: i64, den: i64) -> RatFunc {
    let dp2 = &RatFunc::var() + &RatFunc::from_int(2);
    RatFunc::from_rational(rat(num, den))
        .checked_div(&dp2)
        .expect("nonzero")
}

/// I - H, the right side of the Jacobi relation for `dotcross`.
pub fn magic_rhs() -> Morphism {
    i_diagram().sub(&h_diagram()).expect("equal profiles")
}

/// One half of merge, the right side of the triangle relation.
pub fn triangle_rhs() -> Morphism {
    merge().scale(&RatFunc::from_rational(rat(1, 2)))
}

pub fn square_rhs() -> Morphism {
    let a = RatFunc::from_rational(rat(1, 6));
    let b = over_d_plus_2(5, 6);
    combo(&[
        (a.clone(), &h_diagram()),
        (a, &i_diagram()),
        (b.clone(), &jail()),
        (b.clone(), &hourglass()),
        (b, &cross()),
    ])
}

pub fn pentagon_rhs() -> Morphism {
    let p = particles();
    let a = RatFunc::from_rational(rat(1, 12));
    let b = over_d_plus_2(5, 12);
    let mut parts: Vec<(RatFunc, &Morphism)> = Vec::new();
    for i in [0, 1, 2, 15] {
        parts.push((a.clone(), &p[i]));
    }
    for q in &p[5..15] {
        parts.push((b.clone(), q));
    }
    combo(&parts)
}

/// Closed circle.
pub fn circle() -> Morphism {
    identity().pair_close(&identity()).expect("equal profiles")
}

/// Two vertices joined by three edges.
pub fn theta() -> Morphism {
    merge().pair_close(&merge()).expect("equal profiles")
}

/// Complete graph on four vertices.
pub fn tetrahedron() -> Morphism {
    h_diagram().pair_close(&i_diagram()).expect("equal profiles")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygons_have_expected_sizes() {
        for k in 2..=5 {
            let d = polygon_diagram(k);
            assert_eq!(d.vertex_count(), k);
            assert_eq!(d.arity(), k);
        }
    }

    #[test]
    fn particles_are_distinct_single_diagrams() {
        let p = particles();
        assert_eq!(p.len(), 16);
        for (i, a) in p.iter().enumerate() {
            assert_eq!(a.len(), 1, "particle {i}");
            for b in &p[i + 1..] {
                assert_ne!(a.terms().keys().next(), b.terms().keys().next());
            }
        }
    }

    #[test]
    fn closed_diagrams_have_expected_shapes() {
        let circle = circle();
        let (d, _) = circle.terms().iter().next().unwrap();
        assert_eq!((d.loops(), d.vertex_count()), (1, 0));
        let (d, _) = theta()
            .terms()
            .iter()
            .next()
            .map(|(d, c)| (d.clone(), c.clone()))
            .unwrap();
        assert_eq!(d.vertex_count(), 2);
        let (d, _) = tetrahedron()
            .terms()
            .iter()
            .next()
            .map(|(d, c)| (d.clone(), c.clone()))
            .unwrap();
        assert_eq!(d.vertex_count(), 4);
    }
}
