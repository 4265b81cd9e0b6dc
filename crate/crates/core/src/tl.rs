//! Temperley-Lieb category at loop value -2 over Q(i), its idempotent `e`, and the
//! functor sending the generating object to `(X (x) X, e)`.
//!
//! Morphisms `m -> n` are stored bent into `0 -> m + n` with the same boundary
//! numbering as [`Morphism`]: input `i` at position `m - i`, output `j` at `m + j - 1`.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, Morphism};
use crate::liealg::Check;
use crate::scalar::{int, rat, RatFunc, Rational, ScalarError};

pub type Gauss = Complex<Rational>;

pub const LOOP_VALUE: i64 = -2;

#[derive(Debug, Error)]
pub enum TlError {
    #[error("arity mismatch: {0} outputs against {1} inputs")]
    Arity(usize, usize),
    #[error("odd number of boundary points: {0}")]
    OddBoundary(usize),
    #[error("matching is not a non-crossing perfect matching")]
    NotPlanar,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn gauss(r: Rational) -> Gauss {
    Complex::new(r, Rational::zero())
}

/// Non-crossing perfect matching as a mate array.
pub type Matching = Vec<usize>;

pub fn is_planar(mate: &[usize]) -> bool {
    let n = mate.len();
    (0..n).all(|i| {
        let j = mate[i];
        j < n && j != i && mate[j] == i && {
            let (a, b) = (i.min(j), i.max(j));
            (a + 1..b).all(|k| (a..=b).contains(&mate[k]))
        }
    })
}

/// All non-crossing perfect matchings of `n` points.
pub fn planar_matchings(n: usize) -> Vec<Matching> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            for inner in rec(lo + 1, j) {
                for outer in rec(j + 1, hi) {
                    let mut v = vec![(lo, j)];
                    v.extend(inner.iter().copied());
                    v.extend(outer.iter().copied());
                    out.push(v);
                }
            }
        }
        out
    }
    if n % 2 == 1 {
        return vec![];
    }
    rec(0, n)
        .into_iter()
        .map(|pairs| {
            let mut m = vec![0; n];
            for (a, b) in pairs {
                m[a] = b;
                m[b] = a;
            }
            m
        })
        .collect()
}

/// Follows strands through `mate` (within pieces) and `link` (between pieces);
/// returns the mates among `keep` and the number of closed loops.
fn trace(mate: &[usize], link: &[Option<usize>], keep: &[usize]) -> (Matching, usize) {
    let n = mate.len();
    let mut slot = vec![usize::MAX; n];
    for (i, &k) in keep.iter().enumerate() {
        slot[k] = i;
    }
    let mut seen = vec![false; n];
    let mut out = vec![0; keep.len()];
    for &start in keep {
        if seen[start] {
            continue;
        }
        let mut p = start;
        loop {
            seen[p] = true;
            let q = mate[p];
            seen[q] = true;
            if slot[q] != usize::MAX {
                out[slot[start]] = slot[q];
                out[slot[q]] = slot[start];
                break;
            }
            p = link[q].expect("interior point is linked");
        }
    }
    let mut loops = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut p = s;
        while !seen[p] {
            seen[p] = true;
            let q = mate[p];
            seen[q] = true;
            p = link[q].expect("interior point is linked");
        }
    }
    (out, loops)
}

/// Linear combination of planar matchings with coefficients in Q(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLMorphism {
    inputs: usize,
    outputs: usize,
    terms: BTreeMap<Matching, Gauss>,
}

impl TLMorphism {
    pub fn zero(inputs: usize, outputs: usize) -> Self {
        TLMorphism {
            inputs,
            outputs,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_matching(inputs: usize, outputs: usize, mate: Matching) -> Result<Self, TlError> {
        if (inputs + outputs) % 2 == 1 {
            return Err(TlError::OddBoundary(inputs + outputs));
        }
        if mate.len() != inputs + outputs || !is_planar(&mate) {
            return Err(TlError::NotPlanar);
        }
        let mut f = Self::zero(inputs, outputs);
        f.terms.insert(mate, Gauss::one());
        Ok(f)
    }

    fn from_pairs(inputs: usize, outputs: usize, pairs: &[(usize, usize)]) -> Self {
        let mut m = vec![0; inputs + outputs];
        for &(a, b) in pairs {
            m[a] = b;
            m[b] = a;
        }
        Self::from_matching(inputs, outputs, m).expect("generator is planar")
    }

    pub fn identity(k: usize) -> Self {
        let pairs: Vec<_> = (0..k).map(|p| (p, 2 * k - 1 - p)).collect();
        Self::from_pairs(k, k, &pairs)
    }

    pub fn cup() -> Self {
        Self::from_pairs(0, 2, &[(0, 1)])
    }

    pub fn cap() -> Self {
        Self::from_pairs(2, 0, &[(0, 1)])
    }

    pub fn jail() -> Self {
        Self::identity(2)
    }

    pub fn hourglass() -> Self {
        Self::from_pairs(2, 2, &[(0, 1), (2, 3)])
    }

    /// The symmetric braiding: jail plus hourglass.
    pub fn crossing() -> Self {
        Self::jail().add(&Self::hourglass())
    }

    /// The idempotent `jail + hourglass / 2`.
    pub fn idempotent() -> Self {
        Self::jail().add(&Self::hourglass().scale(&gauss(rat(1, 2))))
    }

    /// `e (x) e (x) ...` on `k` doubled strands.
    pub fn projector(k: usize) -> Self {
        (0..k).fold(Self::identity(0), |acc, _| acc.tensor(&Self::idempotent()))
    }

    /// The curl: a strand with a kink closed by a crossing.
    pub fn twist() -> Self {
        // (id (x) cap) o (crossing (x) id) o (id (x) cup)
        let up = Self::identity(1).tensor(&Self::cup());
        let down = Self::identity(1).tensor(&Self::cap());
        up.compose(&Self::crossing().tensor(&Self::identity(1)))
            .and_then(|f| f.compose(&down))
            .expect("arities agree")
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn terms(&self) -> &BTreeMap<Matching, Gauss> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scalar_value(&self) -> Option<Gauss> {
        (self.inputs + self.outputs == 0).then(|| self.terms.values().next().cloned().unwrap_or_else(Gauss::zero))
    }

    fn add_term(&mut self, m: Matching, c: Gauss) {
        let e = self.terms.entry(m.clone()).or_insert_with(Gauss::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &TLMorphism) -> TLMorphism {
        assert_eq!((self.inputs, self.outputs), (o.inputs, o.outputs), "profiles agree");
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &TLMorphism) -> TLMorphism {
        self.add(&o.scale(&gauss(int(-1))))
    }

    pub fn scale(&self, c: &Gauss) -> TLMorphism {
        let mut r = Self::zero(self.inputs, self.outputs);
        if !c.is_zero() {
            r.terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        }
        r
    }

    /// `self` first, then `g`: output `i` of `self` meets input `i` of `g`.
    pub fn compose(&self, g: &TLMorphism) -> Result<TLMorphism, TlError> {
        if self.outputs != g.inputs {
            return Err(TlError::Arity(self.outputs, g.inputs));
        }
        let (m, n, p) = (self.inputs, self.outputs, g.outputs);
        let off = m + n;
        let mut link = vec![None; off + n + p];
        for i in 0..n {
            let a = m + i;
            let b = off + n - 1 - i;
            link[a] = Some(b);
            link[b] = Some(a);
        }
        let keep: Vec<usize> = (0..m).chain(off + n..off + n + p).collect();
        let mut r = Self::zero(m, p);
        for (f1, c1) in &self.terms {
            for (f2, c2) in &g.terms {
                let mate: Vec<usize> = f1.iter().copied().chain(f2.iter().map(|&x| x + off)).collect();
                let (out, loops) = trace(&mate, &link, &keep);
                let w = c1 * c2 * gauss(int(LOOP_VALUE).pow(loops as i32));
                r.add_term(out, w);
            }
        }
        Ok(r)
    }

    /// Side by side, `self` on the left.
    pub fn tensor(&self, g: &TLMorphism) -> TLMorphism {
        let (m1, n1) = (self.inputs, self.outputs);
        let (m2, n2) = (g.inputs, g.outputs);
        let k1 = m1 + n1;
        let pos_f = |x: usize| m2 + x;
        let pos_g = |x: usize| if x < m2 { x } else { k1 + x };
        let mut r = Self::zero(m1 + m2, n1 + n2);
        for (f1, c1) in &self.terms {
            for (f2, c2) in &g.terms {
                let mut mate = vec![0; k1 + m2 + n2];
                for (x, &y) in f1.iter().enumerate() {
                    mate[pos_f(x)] = pos_f(y);
                }
                for (x, &y) in f2.iter().enumerate() {
                    mate[pos_g(x)] = pos_g(y);
                }
                r.add_term(mate, c1 * c2);
            }
        }
        r
    }

    /// Closes the only strand pair of an endomorphism of one strand, or the bent form.
    pub fn trace1(&self) -> Result<Gauss, TlError> {
        let closed = TLMorphism::cup()
            .compose(&self.tensor(&TLMorphism::identity(1)))?
            .compose(&TLMorphism::cap())?;
        Ok(closed.scalar_value().expect("closed"))
    }

    /// Treats the morphism as `0 -> m + n` without moving any point.
    pub fn bent(&self) -> TLMorphism {
        TLMorphism {
            inputs: 0,
            outputs: self.inputs + self.outputs,
            terms: self.terms.clone(),
        }
    }

    /// Applies `op` to points `at .. at + op.inputs` of a bent morphism.
    fn act(&self, at: usize, op: &TLMorphism) -> TLMorphism {
        let rest = self.outputs - at - op.inputs;
        let frame = TLMorphism::identity(at).tensor(op).tensor(&TLMorphism::identity(rest));
        self.compose(&frame).expect("frame fits")
    }

    /// Coordinates in the matching basis of the hom-space.
    pub fn coordinates(&self) -> Vec<Gauss> {
        planar_matchings(self.inputs + self.outputs)
            .iter()
            .map(|m| self.terms.get(m).cloned().unwrap_or_else(Gauss::zero))
            .collect()
    }
}

/// Rank over Q(i) by Gaussian elimination.
pub fn gauss_rank(mut rows: Vec<Vec<Gauss>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let piv = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &piv;
                for k in c..cols {
                    let t = &f * &rows[rank][k];
                    rows[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the Karoubi hom-space between `a` and `b` copies of `(X (x) X, e)`:
/// the rank of `f -> e_b o f o e_a` on the Temperley-Lieb hom-space.
pub fn kar_hom_dim(a: usize, b: usize) -> usize {
    let (pa, pb) = (TLMorphism::projector(a), TLMorphism::projector(b));
    let rows: Vec<Vec<Gauss>> = planar_matchings(2 * (a + b))
        .into_iter()
        .map(|m| {
            let f = TLMorphism::from_matching(2 * a, 2 * b, m).expect("planar");
            pa.compose(&f)
                .and_then(|g| g.compose(&pb))
                .expect("arities agree")
                .coordinates()
        })
        .collect();
    gauss_rank(rows)
}

/// Images of the generators.
pub mod image {
    use super::*;

    fn i_unit() -> Gauss {
        Complex::new(Rational::zero(), Rational::one())
    }

    fn nested_cap() -> TLMorphism {
        TLMorphism::from_pairs(4, 0, &[(1, 2), (0, 3)])
    }

    /// `nested cap o (e (x) e)`.
    pub fn cap() -> TLMorphism {
        TLMorphism::projector(2).compose(&nested_cap()).expect("arities agree")
    }

    pub fn cup() -> TLMorphism {
        TLMorphism::from_pairs(0, 4, &[(1, 2), (0, 3)])
            .compose(&TLMorphism::projector(2))
            .expect("arities agree")
    }

    pub fn identity() -> TLMorphism {
        TLMorphism::idempotent()
    }

    /// `sqrt(-1) e o (id (x) cap (x) id) o (e (x) e)`.
    pub fn merge() -> TLMorphism {
        let mid = TLMorphism::identity(1)
            .tensor(&TLMorphism::cap())
            .tensor(&TLMorphism::identity(1));
        TLMorphism::projector(2)
            .compose(&mid)
            .and_then(|f| f.compose(&TLMorphism::idempotent()))
            .expect("arities agree")
            .scale(&i_unit())
    }

    /// Raw exchange of two doubled strands.
    pub(super) fn pair_swap() -> TLMorphism {
        let s = |k: usize| {
            TLMorphism::identity(k)
                .tensor(&TLMorphism::crossing())
                .tensor(&TLMorphism::identity(2 - k))
        };
        s(1).compose(&s(0))
            .and_then(|f| f.compose(&s(2)))
            .and_then(|f| f.compose(&s(1)))
            .expect("arities agree")
    }

    pub fn cross() -> TLMorphism {
        TLMorphism::projector(2).compose(&pair_swap()).expect("arities agree")
    }

    /// Vertex as `0 -> 6`; doubled leg `p` carries points `2p, 2p + 1`.
    pub(super) fn vertex() -> TLMorphism {
        merge().bent()
    }

    pub(super) fn nested_cap_raw() -> TLMorphism {
        nested_cap()
    }

    pub(super) fn cup_raw() -> TLMorphism {
        TLMorphism::from_pairs(0, 4, &[(1, 2), (0, 3)])
            .compose(&TLMorphism::projector(2))
            .expect("arities agree")
    }
}

/// Image of a trivalent diagram, with δ = 3 and α = 1 substituted in coefficients.
pub fn phi_diagram(d: &Diagram, inputs: usize) -> TLMorphism {
    let k = d.arity();
    let mut x = TLMorphism::identity(0);
    let mut order: Vec<usize> = Vec::new();
    let place = |x: &mut TLMorphism, order: &mut Vec<usize>, piece: &TLMorphism, legs: &[usize]| {
        *x = x.tensor(piece);
        order.extend_from_slice(legs);
        contract_pending(x, order, d);
    };
    for v in 0..d.vertex_count() {
        let legs = [2, 1, 0].map(|s| {
            let h = d.slot(v, s);
            if d.is_boundary(d.mate(h)) {
                d.mate(h)
            } else {
                h
            }
        });
        place(&mut x, &mut order, &image::vertex(), &legs);
    }
    for h in 0..k {
        let m = d.mate(h);
        if d.is_boundary(m) && h < m {
            place(&mut x, &mut order, &image::cup_raw(), &[h, m]);
        }
    }
    for target in 0..k {
        let at = order.iter().position(|&h| h == target).expect("boundary leg present");
        for p in (target..at).rev() {
            x = x.act(2 * p, &image::pair_swap());
            order.swap(p, p + 1);
        }
    }
    let scale = gauss(int(3).pow(d.loops() as i32));
    let mut r = x.scale(&scale);
    r.inputs = 2 * inputs;
    r.outputs = 2 * (k - inputs);
    r
}

/// Contracts every pair of present doubled legs that are joined by an edge.
fn contract_pending(x: &mut TLMorphism, order: &mut Vec<usize>, d: &Diagram) {
    loop {
        let pair = (0..order.len()).find_map(|a| {
            let m = d.mate(order[a]);
            if d.is_boundary(order[a]) {
                return None;
            }
            order
                .iter()
                .position(|&h| h == m)
                .filter(|&b| b != a)
                .map(|b| (a.min(b), a.max(b)))
        });
        let Some((a, mut b)) = pair else {
            return;
        };
        while b > a + 1 {
            *x = x.act(2 * (b - 1), &image::pair_swap());
            order.swap(b - 1, b);
            b -= 1;
        }
        *x = x.act(2 * a, &image::nested_cap_raw());
        order.drain(a..a + 2);
    }
}

/// Image of a morphism at δ = 3.
pub fn phi(f: &Morphism) -> Result<TLMorphism, TlError> {
    let mut out = TLMorphism::zero(2 * f.inputs(), 2 * f.outputs());
    for (d, c) in f.terms() {
        let c = gauss(c.eval_at(&int(3))?);
        out = out.add(&phi_diagram(d, f.inputs()).scale(&c));
    }
    Ok(out)
}

/// Relation-preservation identities for the functor into the Karoubi envelope.
pub fn verify_kauff_functor() -> Result<Vec<Check>, TlError> {
    use crate::catalog as cat;
    let mut out = Vec::new();
    let mut record = |name: &'static str, lhs: &TLMorphism, rhs: &TLMorphism| {
        let passed = lhs == rhs;
        let detail = if passed {
            "equal".to_string()
        } else {
            format!("difference has {} terms", lhs.sub(rhs).terms.len())
        };
        out.push(Check { name, passed, detail });
    };
    let half = gauss(rat(1, 2));
    let e = TLMorphism::idempotent();
    let p2 = TLMorphism::projector(2);
    let id = |k| TLMorphism::identity(k);

    record(
        "cap_after_cup",
        &TLMorphism::cup().compose(&TLMorphism::cap())?,
        &id(0).scale(&gauss(int(LOOP_VALUE))),
    );
    let zig = id(1)
        .tensor(&TLMorphism::cup())
        .compose(&TLMorphism::cap().tensor(&id(1)))?;
    record("zigzag", &zig, &id(1));
    record("idempotent", &e.compose(&e)?, &e);
    record("idempotent_absorbs_crossing", &TLMorphism::crossing().compose(&e)?, &e);
    let twist = TLMorphism::twist();
    record("twist", &twist, &id(1).scale(&gauss(int(-1))));
    record("twist_squared", &twist.compose(&twist)?, &id(1));
    record(
        "twist_trace",
        &id(0).scale(&twist.trace1()?),
        &id(0).scale(&gauss(int(2))),
    );
    let crossing_sq = TLMorphism::crossing().compose(&TLMorphism::crossing())?;
    record("crossing_involution", &crossing_sq, &id(2));

    let phi_cap = image::cap();
    let mushroom = image::nested_cap_raw().add(&TLMorphism::cap().tensor(&TLMorphism::cap()).scale(&half));
    record("cap_expansion", &phi_cap, &mushroom);
    record("cap_rotation_invariance", &image::cross().compose(&phi_cap)?, &phi_cap);
    record(
        "merge_skew_symmetry",
        &image::cross().compose(&image::merge())?,
        &image::merge().scale(&gauss(int(-1))),
    );
    record(
        "cap_kills_idempotent",
        &e.compose(&TLMorphism::cap())?,
        &TLMorphism::zero(2, 0),
    );
    record(
        "idempotent_kills_cup",
        &TLMorphism::cup().compose(&e)?,
        &TLMorphism::zero(0, 2),
    );
    record("bubble", &image::cup().compose(&phi_cap)?, &id(0).scale(&gauss(int(3))));

    let hook = id(1).tensor(&TLMorphism::hourglass()).tensor(&id(1));
    let outer = TLMorphism::from_pairs(4, 4, &[(1, 2), (0, 3), (5, 6), (4, 7)]);
    let pharaon = p2
        .add(&p2.compose(&hook)?.compose(&p2)?.scale(&gauss(int(2))))
        .add(&p2.compose(&outer)?.compose(&p2)?);
    record("double_crossing_expansion", &image::cross(), &pharaon);
    record("cross_involution", &image::cross().compose(&image::cross())?, &p2);

    let generators: [(&'static str, Morphism, TLMorphism); 4] = [
        ("functor_cap", cat::cap(), image::cap()),
        ("functor_cup", cat::cup(), image::cup()),
        ("functor_merge", cat::merge(), image::merge()),
        ("functor_cross", cat::cross(), image::cross()),
    ];
    for (name, f, img) in &generators {
        record(name, &phi(f)?, img);
    }
    let composite = cat::cross().compose(&cat::merge()).expect("arities agree");
    record(
        "functor_composition",
        &phi(&composite)?,
        &image::cross().compose(&image::merge())?,
    );

    record("loop", &phi(&cat::circle())?, &id(0).scale(&gauss(int(3))));
    record("bigon", &phi(&cat::bigon())?, &phi(&cat::identity())?);
    let lollipop = cat::split().compose(&cat::cap()).expect("arities agree");
    record("lollipop", &phi(&lollipop)?, &TLMorphism::zero(2, 0));
    let sl2_first = cat::dotcross().sub(&cat::i_diagram().sub(&cat::h_diagram())?)?;
    record("sl2_dotcross", &phi(&sl2_first)?, &TLMorphism::zero(4, 4));
    let sl2_second = cat::i_diagram().sub(
        &cat::jail()
            .sub(&cat::cross())?
            .scale(&RatFunc::from_rational(rat(1, 2))),
    )?;
    record("sl2_i_diagram", &phi(&sl2_second)?, &TLMorphism::zero(4, 4));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts_are_catalan() {
        let counts: Vec<usize> = (0..6).map(|k| planar_matchings(2 * k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        assert!(planar_matchings(8).iter().all(|m| is_planar(m)));
    }

    #[test]
    fn crossing_matching_is_rejected() {
        assert!(!is_planar(&[2, 3, 0, 1]));
        assert!(TLMorphism::from_matching(2, 2, vec![2, 3, 0, 1]).is_err());
    }

    #[test]
    fn kauff_identities() {
        for c in verify_kauff_functor().unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn karoubi_dimensions() {
        assert_eq!(kar_hom_dim(0, 0), 1);
        assert_eq!(kar_hom_dim(2, 3), 6);
    }
}
