use proptest::prelude::*;
use trivalent::catalog;
use trivalent::diagram::{Diagram, DiagramRecord};
use trivalent::gram::GramMatrix;
use trivalent::rewrite::{EvalResult, Evaluator, RuleSet};
use trivalent::scalar::{Poly, RatFunc};

mod common;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..=3).prop_map(|c| Poly::from_ints(&c))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_map(|(n, d)| {
        let d = if d.is_zero() { Poly::one() } else { d };
        RatFunc::new(n, d).unwrap()
    })
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<RatFunc>>> {
    prop::collection::vec(prop::collection::vec(ratfunc(), n), n)
}

/// Laplace expansion along the first row.
fn cofactor_det(a: &[Vec<RatFunc>]) -> RatFunc {
    let n = a.len();
    if n == 0 {
        return RatFunc::one();
    }
    let mut total = RatFunc::zero();
    for j in 0..n {
        let minor: Vec<Vec<RatFunc>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][j] * &cofactor_det(&minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

proptest! {
    #[test]
    fn determinant_matches_cofactor_expansion(a in (0usize..=4).prop_flat_map(square)) {
        let g = GramMatrix { entries: a.clone() };
        prop_assert_eq!(g.det(), cofactor_det(&a));
    }

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn canonical_records_survive_printing(k in 0usize..=4, v in 0usize..=4, seed in any::<u64>()) {
        let v = if (k + 3 * v) % 2 == 1 { v + 1 } else { v };
        let d = common::random_diagram(k, v, (seed % 3) as usize, seed).canonicalize().diagram;
        let rec = d.to_record(k / 2);
        let back = DiagramRecord::parse(&rec.print()).unwrap();
        prop_assert_eq!(&back, &rec);
        prop_assert_eq!(back.to_diagram().unwrap(), d);
    }
}

#[test]
fn identity_determinant() {
    assert_eq!(GramMatrix::identity(6).det(), RatFunc::one());
}

fn heawood() -> Diagram {
    let mut edges = Vec::new();
    let mut slots = vec![Vec::new(); 14];
    let mut id = 1;
    let ends = (0..14)
        .map(|i| (i, (i + 1) % 14))
        .chain((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    for (a, b) in ends {
        slots[a].push(id);
        slots[b].push(id + 1);
        edges.push((id, id + 1));
        id += 2;
    }
    let verts: Vec<[usize; 3]> = slots.iter().map(|s| [s[0], s[1], s[2]]).collect();
    Diagram::from_parts(&[], &verts, &edges, 0).unwrap()
}

#[test]
fn girth_six_is_stuck_without_jacobi() {
    let m = trivalent::diagram::Morphism::from_diagram(0, 0, heawood());
    let mut ev = Evaluator::new(RuleSet::quotient().with_ihx_depth(0));
    match ev.evaluate_closed(&m).unwrap() {
        EvalResult::Unevaluated { residual, .. } => assert!(!residual.is_zero()),
        EvalResult::Value(v) => panic!("expected a residual, got {v}"),
    }
}

#[test]
fn girth_six_reduces_with_jacobi() {
    let m = trivalent::diagram::Morphism::from_diagram(0, 0, heawood());
    let mut ev = Evaluator::new(RuleSet::quotient());
    assert!(ev.evaluate_closed(&m).unwrap().value().is_some());
}

#[test]
fn closed_graphs_match_numeric_values() {
    use trivalent::liealg::g2::g2_structure;
    use trivalent::liealg::network::{closed_value_numeric, TensorModel};
    let model = TensorModel::adjoint(&g2_structure());
    let mut ev = Evaluator::new(RuleSet::quotient());
    for m in [catalog::circle(), catalog::theta(), catalog::tetrahedron()] {
        let symbolic = ev.closed_value(&m).unwrap().eval_at(&model.delta()).unwrap();
        assert_eq!(closed_value_numeric(&m, &model).unwrap(), symbolic);
    }
}
