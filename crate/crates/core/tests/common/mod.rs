//! Random diagrams and the structural properties checked over them.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestError, TestRunner};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use trivalent::catalog;
use trivalent::diagram::{Diagram, Morphism};
use trivalent::rewrite::{Evaluator, RuleSet, SiteOrder};
use trivalent::scalar::RatFunc;

pub const CASES: u32 = 500;

/// Uniform perfect matching on `arity + 3 * vertices` half-edges.
pub fn random_diagram(arity: usize, vertices: usize, loops: usize, seed: u64) -> Diagram {
    let n = arity + 3 * vertices;
    assert!(n.is_multiple_of(2));
    let mut rng = StdRng::seed_from_u64(seed);
    let mut halves: Vec<usize> = (0..n).collect();
    halves.shuffle(&mut rng);
    let mut mate = vec![0; n];
    for p in halves.chunks(2) {
        mate[p[0]] = p[1];
        mate[p[1]] = p[0];
    }
    Diagram::from_mate(arity, mate, loops).expect("a perfect matching")
}

/// Sum of up to three random diagrams with small integer coefficients.
pub fn random_morphism(inputs: usize, outputs: usize, seed: u64) -> Morphism {
    let mut rng = StdRng::seed_from_u64(seed);
    let k = inputs + outputs;
    let mut m = Morphism::zero(inputs, outputs);
    for _ in 0..rng.gen_range(1..=3) {
        let v = 2 * rng.gen_range(0..=2) + k % 2;
        let d = random_diagram(k, v, rng.gen_range(0..=1), rng.gen());
        let c = RatFunc::from_int(rng.gen_range(-3..=3));
        m.add_term(d, c);
    }
    m
}

/// The same diagram with vertices renumbered and each vertex triple rotated.
pub fn relabel(d: &Diagram, seed: u64) -> Diagram {
    let mut rng = StdRng::seed_from_u64(seed);
    let (k, v) = (d.arity(), d.vertex_count());
    let mut order: Vec<usize> = (0..v).collect();
    order.shuffle(&mut rng);
    let mut to: Vec<usize> = (0..k + 3 * v).collect();
    for (old, &new) in order.iter().enumerate() {
        let r = rng.gen_range(0..3);
        for s in 0..3 {
            to[k + 3 * old + s] = k + 3 * new + (s + r) % 3;
        }
    }
    let mut mate = vec![0; to.len()];
    for h in 0..to.len() {
        mate[to[h]] = to[d.mate(h)];
    }
    Diagram::from_mate(k, mate, d.loops()).expect("a relabeling")
}

fn profile() -> impl Strategy<Value = (usize, usize)> {
    (0usize..=3, 0usize..=3)
}

fn ensure(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

pub fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

pub type Outcome = Result<(), TestError<String>>;

pub type Property = fn() -> Outcome;

fn debug_failure<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> Outcome {
    r.map_err(|e| match e {
        TestError::Abort(why) => TestError::Abort(why),
        TestError::Fail(why, v) => TestError::Fail(why, format!("{v:?}")),
    })
}

pub fn rotation_has_full_order() -> Outcome {
    debug_failure(runner().run(&(profile(), any::<u64>()), |((m, n), seed)| {
        let f = random_morphism(m, n, seed);
        let mut g = f.clone();
        for _ in 0..m + n {
            g = g.rot();
        }
        ensure(g == f, "rot^(m+n) = id")
    }))
}

pub fn switch_is_involution() -> Outcome {
    debug_failure(runner().run(&(2usize..=3, 0usize..=3, any::<u64>()), |(m, n, seed)| {
        let f = random_morphism(m, n, seed);
        let g = f.switch().unwrap().switch().unwrap();
        ensure(g == f, "switch^2 = id")
    }))
}

pub fn reversal_negates() -> Outcome {
    debug_failure(runner().run(
        &(0usize..=4, 1usize..=4, any::<u64>(), any::<u64>()),
        |(k, v, seed, pick)| {
            let v = if (k + 3 * v) % 2 == 1 { v + 1 } else { v };
            let d = random_diagram(k, v, 0, seed);
            let w = (pick % v as u64) as usize;
            let f = Morphism::from_diagram(0, k, d.clone());
            let g = Morphism::from_diagram(0, k, d.flip_vertex(w));
            ensure(g == f.scale(&RatFunc::from_int(-1)), "reversing a vertex negates")
        },
    ))
}

pub fn canonical_form_is_stable() -> Outcome {
    debug_failure(runner().run(
        &(0usize..=4, 0usize..=5, any::<u64>(), any::<u64>()),
        |(k, v, seed, shuffle)| {
            let v = if (k + 3 * v) % 2 == 1 { v + 1 } else { v };
            let d = random_diagram(k, v, 0, seed);
            let c = d.canonicalize();
            let again = c.diagram.canonicalize();
            ensure(again.diagram == c.diagram, "canonical form is a fixed point")?;
            ensure(c.self_negating || again.sign == 1, "fixed point carries sign +1")?;
            let r = relabel(&d, shuffle).canonicalize();
            ensure(r.diagram == c.diagram, "relabeling keeps the canonical form")?;
            ensure(
                r.sign == c.sign && r.self_negating == c.self_negating,
                "rotations carry no sign",
            )
        },
    ))
}

pub fn composition_is_associative() -> Outcome {
    let sizes = (0usize..=2, 0usize..=2, 0usize..=2, 0usize..=2);
    debug_failure(runner().run(&(sizes, any::<[u64; 3]>()), |((a, b, c, e), s)| {
        let f = random_morphism(a, b, s[0]);
        let g = random_morphism(b, c, s[1]);
        let h = random_morphism(c, e, s[2]);
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        ensure(left == right, "(f;g);h = f;(g;h)")
    }))
}

pub fn interchange_law() -> Outcome {
    let sizes = (0usize..=2, 0usize..=2, 0usize..=2, 0usize..=2, 0usize..=2, 0usize..=2);
    debug_failure(runner().run(&(sizes, any::<[u64; 4]>()), |((a, b, c, p, q, r), s)| {
        let f = random_morphism(a, b, s[0]);
        let h = random_morphism(b, c, s[1]);
        let g = random_morphism(p, q, s[2]);
        let k = random_morphism(q, r, s[3]);
        let left = f.tensor(&g).compose(&h.tensor(&k)).unwrap();
        let right = f.compose(&h).unwrap().tensor(&g.compose(&k).unwrap());
        ensure(left == right, "(f x g);(h x k) = (f;h) x (g;k)")
    }))
}

/// The crossing `X^a x X^b -> X^b x X^a` built from single crossings.
pub fn block_cross(a: usize, b: usize) -> Morphism {
    if a == 0 || b == 0 {
        return catalog::identity_n(a + b);
    }
    if a == 1 {
        let first = catalog::cross().tensor(&catalog::identity_n(b - 1));
        let rest = catalog::identity().tensor(&block_cross(1, b - 1));
        return first.compose(&rest).unwrap();
    }
    let first = catalog::identity_n(a - 1).tensor(&block_cross(1, b));
    let rest = block_cross(a - 1, b).tensor(&catalog::identity());
    first.compose(&rest).unwrap()
}

pub fn crossing_is_natural() -> Outcome {
    let sizes = (0usize..=2, 0usize..=2, 0usize..=2, 0usize..=2);
    debug_failure(runner().run(&(sizes, any::<[u64; 2]>()), |((a, b, c, e), s)| {
        let f = random_morphism(a, b, s[0]);
        let g = random_morphism(c, e, s[1]);
        let left = f.tensor(&g).compose(&block_cross(b, e)).unwrap();
        let right = block_cross(a, c).compose(&g.tensor(&f)).unwrap();
        ensure(left == right, "(f x g);cross = cross;(g x f)")
    }))
}

/// Every closed diagram in the suites: catalog pairings and the basic closed graphs.
pub fn suite_closed() -> Vec<Morphism> {
    let mut out = vec![catalog::circle(), catalog::theta(), catalog::tetrahedron()];
    for basis in [catalog::bigfive(), catalog::particles()] {
        for i in 0..basis.len() {
            for j in i..basis.len() {
                out.push(basis[i].pair_close(&basis[j]).unwrap());
            }
        }
    }
    for (lhs, rhs) in [
        (catalog::triangle(), catalog::triangle_rhs()),
        (catalog::square(), catalog::square_rhs()),
        (catalog::pentagon(), catalog::pentagon_rhs()),
    ] {
        out.push(lhs.pair_close(&rhs).unwrap());
        out.push(lhs.pair_close(&lhs).unwrap());
    }
    out
}

pub fn reduction_is_confluent() -> Outcome {
    let closed = suite_closed();
    let mut reference = Evaluator::new(RuleSet::quotient());
    let values: Vec<RatFunc> = closed.iter().map(|m| reference.closed_value(m).unwrap()).collect();
    debug_failure(runner().run(&(0..closed.len(), any::<u64>()), |(i, seed)| {
        let mut ev = Evaluator::with_order(RuleSet::quotient(), SiteOrder::Random(seed));
        let v = ev
            .closed_value(&closed[i])
            .map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure(v == values[i], "random site order reaches the same value")
    }))
}
