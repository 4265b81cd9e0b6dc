//! Relation-driven reduction and evaluation of closed diagrams.

use std::collections::{HashMap, HashSet};

use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::catalog;
use crate::diagram::{splice, Diagram, DiagramError, Morphism};
use crate::scalar::{RatFunc, Rational};

#[derive(Debug, Error)]
pub enum RewriteError {
    #[error("the exceptional quotient is only defined for alpha = 1, got {0}")]
    AlphaInQuotient(Rational),
    #[error("expected a closed morphism, got profile {0:?}")]
    NotClosed((usize, usize)),
    #[error("evaluation got stuck on {} diagram(s) with no short cycle", .0.len())]
    Unevaluated(Morphism),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Loops, lollipops and bigons only.
    T,
    /// Adds the triangle, square, pentagon and Jacobi rules.
    F,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    mode: Mode,
    alpha: Rational,
    ihx_depth: usize,
}

impl RuleSet {
    pub const DEFAULT_IHX_DEPTH: usize = 6;

    pub fn new(mode: Mode, alpha: Rational, ihx_depth: usize) -> Result<Self, RewriteError> {
        if mode == Mode::F && !alpha.is_one() {
            return Err(RewriteError::AlphaInQuotient(alpha));
        }
        Ok(RuleSet { mode, alpha, ihx_depth })
    }

    pub fn quotient() -> Self {
        RuleSet {
            mode: Mode::F,
            alpha: Rational::one(),
            ihx_depth: Self::DEFAULT_IHX_DEPTH,
        }
    }

    pub fn trivalent(alpha: Rational) -> Self {
        RuleSet {
            mode: Mode::T,
            alpha,
            ihx_depth: 0,
        }
    }

    pub fn with_ihx_depth(mut self, depth: usize) -> Self {
        self.ihx_depth = depth;
        self
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn ihx_depth(&self) -> usize {
        self.ihx_depth
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalResult {
    Value(RatFunc),
    /// The part that could be reduced, plus the stuck combination.
    Unevaluated {
        partial: RatFunc,
        residual: Morphism,
    },
}

impl EvalResult {
    pub fn value(&self) -> Option<&RatFunc> {
        match self {
            EvalResult::Value(v) => Some(v),
            EvalResult::Unevaluated { .. } => None,
        }
    }
}

/// Which rule fires at a site.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    Lollipop,
    Cycle(usize),
}

/// A matched cycle: vertices in order with their (leg, previous, next) slots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Cycle {
    verts: Vec<usize>,
    slots: Vec<[usize; 3]>,
}

impl Cycle {
    fn sign(&self) -> bool {
        // true when an odd number of vertices disagree with (leg, prev, next)
        self.slots.iter().filter(|[l, p, _]| *p != (l + 1) % 3).count() % 2 == 1
    }
}

/// Every cycle of length `len` through distinct vertices, each found once per direction.
fn cycles(d: &Diagram, len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    let k = d.arity();
    let nbr = |v: usize, s: usize| -> Option<(usize, usize)> {
        let m = d.mate(d.slot(v, s));
        (m >= k).then(|| d.vertex_of(m))
    };
    for start in 0..d.vertex_count() {
        for first in 0..3 {
            let mut verts = vec![start];
            let mut slots: Vec<[usize; 3]> = vec![[usize::MAX, usize::MAX, first]];
            extend(&nbr, start, len, &mut verts, &mut slots, &mut out);
        }
    }
    out
}

fn extend<F>(
    nbr: &F,
    start: usize,
    len: usize,
    verts: &mut Vec<usize>,
    slots: &mut Vec<[usize; 3]>,
    out: &mut Vec<Cycle>,
) where
    F: Fn(usize, usize) -> Option<(usize, usize)>,
{
    let last = *verts.last().unwrap();
    let next_slot = slots.last().unwrap()[2];
    let Some((w, p)) = nbr(last, next_slot) else {
        return;
    };
    if verts.len() == len {
        let first = slots[0][2];
        if w == start && p != first {
            let mut c = slots.clone();
            c[0][1] = p;
            c[0][0] = 3 - p - first;
            out.push(Cycle {
                verts: verts.clone(),
                slots: c,
            });
        }
        return;
    }
    if w <= start || verts.contains(&w) {
        return;
    }
    for n in 0..3 {
        if n == p {
            continue;
        }
        verts.push(w);
        slots.push([3 - p - n, p, n]);
        extend(nbr, start, len, verts, slots, out);
        verts.pop();
        slots.pop();
    }
}

fn has_self_loop(d: &Diagram) -> bool {
    (0..d.vertex_count()).any(|v| {
        (0..3).any(|s| {
            let m = d.mate(d.slot(v, s));
            !d.is_boundary(m) && d.vertex_of(m).0 == v
        })
    })
}

/// How to choose among applicable sites.
#[derive(Clone, Debug)]
pub enum SiteOrder {
    /// Highest-priority rule, least site under canonical labels.
    Canonical,
    /// Uniformly random applicable site of any rule, seeded.
    Random(u64),
}

/// Evaluator with a memo table of closed-diagram values.
pub struct Evaluator {
    rules: RuleSet,
    rng: Option<StdRng>,
    replacements: HashMap<usize, Morphism>,
    memo: HashMap<Diagram, (RatFunc, Morphism)>,
    failed_ihx: HashSet<(Diagram, usize)>,
}

impl Evaluator {
    pub fn new(rules: RuleSet) -> Self {
        Self::with_order(rules, SiteOrder::Canonical)
    }

    pub fn with_order(rules: RuleSet, order: SiteOrder) -> Self {
        let alpha = RatFunc::from_rational(rules.alpha.clone());
        let mut replacements = HashMap::new();
        replacements.insert(
            2,
            catalog::identity()
                .scale(&alpha)
                .with_profile(0, 2)
                .expect("same arity"),
        );
        replacements.insert(3, catalog::triangle_rhs());
        replacements.insert(4, catalog::square_rhs());
        replacements.insert(5, catalog::pentagon_rhs());
        Evaluator {
            rules,
            rng: match order {
                SiteOrder::Canonical => None,
                SiteOrder::Random(seed) => Some(StdRng::seed_from_u64(seed)),
            },
            replacements,
            memo: HashMap::new(),
            failed_ihx: HashSet::new(),
        }
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    fn max_cycle(&self) -> usize {
        match self.rules.mode {
            Mode::T => 2,
            Mode::F => 5,
        }
    }

    fn pick_site(&mut self, d: &Diagram) -> Option<(Kind, Option<Cycle>)> {
        if has_self_loop(d) && self.rng.is_none() {
            return Some((Kind::Lollipop, None));
        }
        let mut found: Vec<(Kind, Option<Cycle>)> = Vec::new();
        if has_self_loop(d) {
            found.push((Kind::Lollipop, None));
        }
        for len in 2..=self.max_cycle() {
            let cs = cycles(d, len);
            if self.rng.is_none() {
                if let Some(c) = cs.into_iter().min() {
                    return Some((Kind::Cycle(len), Some(c)));
                }
            } else {
                found.extend(cs.into_iter().map(|c| (Kind::Cycle(len), Some(c))));
            }
        }
        let rng = self.rng.as_mut()?;
        if found.is_empty() {
            return None;
        }
        let i = rng.gen_range(0..found.len());
        Some(found.swap_remove(i))
    }

    /// One rule application on a single diagram, or `None` if nothing matches.
    fn step(&mut self, d: &Diagram) -> Option<Morphism> {
        let k = d.arity();
        if d.loops() > 0 {
            let mut r = Morphism::zero(0, k);
            let delta = RatFunc::var().pow(d.loops() as u32);
            r.add_term(d.with_loops(0), delta);
            return Some(r);
        }
        let (kind, cycle) = self.pick_site(d)?;
        let mut r = Morphism::zero(0, k);
        if kind == Kind::Lollipop {
            return Some(r);
        }
        let c = cycle.expect("cycle site");
        let legs: Vec<usize> = c.verts.iter().zip(&c.slots).map(|(&v, s)| d.slot(v, s[0])).collect();
        let rhs = &self.replacements[&c.verts.len()];
        let sign = if c.sign() {
            RatFunc::from_int(-1)
        } else {
            RatFunc::one()
        };
        for (piece, coef) in rhs.terms() {
            r.add_term(splice(d, &c.verts, &legs, piece), coef * &sign);
        }
        Some(r)
    }

    /// Applies one rule to every term of `m` that admits one.
    pub fn reduce_step(&mut self, m: &Morphism) -> Morphism {
        let mut out = Morphism::zero(m.inputs(), m.outputs());
        let k = m.inputs() + m.outputs();
        for (d, c) in m.terms() {
            match self.step(d) {
                Some(r) => {
                    for (e, x) in r.terms() {
                        out.add_term(e.clone(), x * c);
                    }
                }
                None => out.add_term(d.clone(), c.clone()),
            }
        }
        debug_assert!(out.terms().keys().all(|d| d.arity() == k));
        out
    }

    /// Value of a canonical closed diagram as scalar part plus stuck residual.
    fn value(&mut self, d: &Diagram, depth: usize) -> (RatFunc, Morphism) {
        if let Some(v) = self.memo.get(d) {
            return v.clone();
        }
        let result = if d.vertex_count() == 0 {
            (RatFunc::var().pow(d.loops() as u32), Morphism::zero(0, 0))
        } else {
            match self.step(d) {
                Some(r) => self.combine(&r, depth),
                None => self.ihx(d, depth),
            }
        };
        if result.1.is_zero() || self.rng.is_none() {
            self.memo.insert(d.clone(), result.clone());
        }
        result
    }

    fn combine(&mut self, r: &Morphism, depth: usize) -> (RatFunc, Morphism) {
        let mut total = RatFunc::zero();
        let mut residual = Morphism::zero(0, 0);
        for (e, x) in r.terms() {
            let (v, res) = self.value(e, depth);
            total = &total + &(&v * x);
            residual = residual.add(&res.scale(x)).expect("closed");
        }
        (total, residual)
    }

    /// Jacobi moves on each internal edge in turn, accepting the first that resolves.
    fn ihx(&mut self, d: &Diagram, depth: usize) -> (RatFunc, Morphism) {
        let stuck = || {
            let mut r = Morphism::zero(0, 0);
            r.add_term(d.clone(), RatFunc::one());
            (RatFunc::zero(), r)
        };
        if self.rules.mode != Mode::F || depth == 0 || self.failed_ihx.contains(&(d.clone(), depth)) {
            return stuck();
        }
        let i_to_h = catalog::h_diagram().add(&catalog::dotcross()).expect("same profile");
        for h in d.arity()..d.half_edges() {
            let m = d.mate(h);
            if m < h || d.is_boundary(m) {
                continue;
            }
            let (u, s) = d.vertex_of(h);
            let (v, t) = d.vertex_of(m);
            if u == v {
                continue;
            }
            let legs = [
                d.slot(u, (s + 2) % 3),
                d.slot(u, (s + 1) % 3),
                d.slot(v, (t + 2) % 3),
                d.slot(v, (t + 1) % 3),
            ];
            let mut r = Morphism::zero(0, 0);
            for (piece, coef) in i_to_h.terms() {
                r.add_term(splice(d, &[u, v], &legs, piece), coef.clone());
            }
            let (val, res) = self.combine(&r, depth - 1);
            if res.is_zero() {
                return (val, res);
            }
        }
        self.failed_ihx.insert((d.clone(), depth));
        stuck()
    }

    pub fn evaluate_closed(&mut self, m: &Morphism) -> Result<EvalResult, RewriteError> {
        if m.profile() != (0, 0) {
            return Err(RewriteError::NotClosed(m.profile()));
        }
        let (v, res) = self.combine(m, self.rules.ihx_depth);
        Ok(if res.is_zero() {
            EvalResult::Value(v)
        } else {
            EvalResult::Unevaluated {
                partial: v,
                residual: res,
            }
        })
    }

    /// Closed value or an error carrying the stuck residual.
    pub fn closed_value(&mut self, m: &Morphism) -> Result<RatFunc, RewriteError> {
        match self.evaluate_closed(m)? {
            EvalResult::Value(v) => Ok(v),
            EvalResult::Unevaluated { residual, .. } => Err(RewriteError::Unevaluated(residual)),
        }
    }

    pub fn pairing_value(&mut self, f: &Morphism, g: &Morphism) -> Result<RatFunc, RewriteError> {
        self.closed_value(&f.pair_close(g)?)
    }

    /// Pairings of `lhs - rhs` against each probe.
    pub fn relation_residual(
        &mut self,
        lhs: &Morphism,
        rhs: &Morphism,
        probes: &[Morphism],
    ) -> Result<Vec<RatFunc>, RewriteError> {
        let diff = lhs.sub(rhs)?;
        probes.iter().map(|p| self.pairing_value(&diff, p)).collect()
    }
}

pub fn reduce_step(m: &Morphism, rules: &RuleSet) -> Morphism {
    Evaluator::new(rules.clone()).reduce_step(m)
}

pub fn evaluate_closed(m: &Morphism, rules: &RuleSet) -> Result<EvalResult, RewriteError> {
    Evaluator::new(rules.clone()).evaluate_closed(m)
}

pub fn pairing_value(f: &Morphism, g: &Morphism, rules: &RuleSet) -> Result<RatFunc, RewriteError> {
    Evaluator::new(rules.clone()).pairing_value(f, g)
}

pub fn relation_residual(
    lhs: &Morphism,
    rhs: &Morphism,
    probes: &[Morphism],
    rules: &RuleSet,
) -> Result<Vec<RatFunc>, RewriteError> {
    Evaluator::new(rules.clone()).relation_residual(lhs, rhs, probes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::scalar::rat;

    fn f_value(m: &Morphism) -> RatFunc {
        Evaluator::new(RuleSet::quotient()).closed_value(m).unwrap()
    }

    fn d() -> RatFunc {
        RatFunc::var()
    }

    #[test]
    fn quotient_requires_unit_alpha() {
        assert!(RuleSet::new(Mode::F, rat(2, 1), 0).is_err());
        assert!(RuleSet::new(Mode::T, rat(2, 1), 0).is_ok());
    }

    #[test]
    fn small_closed_values() {
        assert_eq!(f_value(&circle()), d());
        assert_eq!(f_value(&theta()), d());
        assert_eq!(f_value(&tetrahedron()), d().scale(&rat(1, 2)));
    }

    #[test]
    fn bigon_scales_by_alpha() {
        let rules = RuleSet::trivalent(rat(-6, 1));
        let mut ev = Evaluator::new(rules);
        let v = ev.closed_value(&theta()).unwrap();
        assert_eq!(v, d().scale(&rat(-6, 1)));
    }

    #[test]
    fn open_reduction_of_bigon() {
        let r = reduce_step(&bigon(), &RuleSet::quotient());
        assert_eq!(r, identity().with_profile(1, 1).unwrap());
    }

    #[test]
    fn non_closed_input_is_rejected() {
        assert!(matches!(
            evaluate_closed(&merge(), &RuleSet::quotient()),
            Err(RewriteError::NotClosed((2, 1)))
        ));
    }
}
