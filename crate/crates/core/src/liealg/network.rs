//! Numeric images of diagrams: vertices become an invariant 3-tensor, edges contract
//! through the inverse of a diagonal metric.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::g2::StructureTensor;
use super::octonion::{basis, cross, inner};
use super::LieError;
use crate::diagram::{Diagram, Morphism};
use crate::scalar::Rational;

/// A symmetric algebra object in vector spaces: a cyclically invariant 3-form and an
/// orthogonal metric.
#[derive(Clone, Debug)]
pub struct TensorModel {
    dim: usize,
    vertex: Vec<([u8; 3], Rational)>,
    metric: Vec<Rational>,
}

impl TensorModel {
    /// Adjoint representation: `(a, b, c) -> kappa([a, b], c)`, edges through the Killing form.
    pub fn adjoint(s: &StructureTensor) -> Self {
        let n = s.dim();
        let metric = s.killing_diagonal();
        let mut vertex = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = &s.bracket[a][b][c] * &metric[c];
                    if !v.is_zero() {
                        vertex.push(([a as u8, b as u8, c as u8], v));
                    }
                }
            }
        }
        TensorModel { dim: n, vertex, metric }
    }

    /// Imaginary octonions: `(a, b, c) -> <a x b, c>`, edges through the standard inner product.
    pub fn octonion() -> Self {
        let mut vertex = Vec::new();
        for a in 0..7 {
            for b in 0..7 {
                let p = cross(&basis(a), &basis(b));
                for c in 0..7 {
                    let v = inner(&p, &basis(c));
                    if !v.is_zero() {
                        vertex.push(([a as u8, b as u8, c as u8], v));
                    }
                }
            }
        }
        TensorModel {
            dim: 7,
            vertex,
            metric: vec![Rational::one(); 7],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Loop value.
    pub fn delta(&self) -> Rational {
        Rational::from_integer((self.dim as i64).into())
    }

    pub fn metric(&self) -> &[Rational] {
        &self.metric
    }
}

/// Sparse tensor with covariant indices in boundary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumTensor {
    pub arity: usize,
    pub entries: BTreeMap<Vec<u8>, Rational>,
}

impl NumTensor {
    pub fn zero(arity: usize) -> Self {
        NumTensor {
            arity,
            entries: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, idx: &[u8]) -> Rational {
        self.entries.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_scaled(&mut self, o: &NumTensor, c: &Rational) {
        for (k, v) in &o.entries {
            let e = self.entries.entry(k.clone()).or_insert_with(Rational::zero);
            *e += v * c;
            if e.is_zero() {
                self.entries.remove(k);
            }
        }
    }

    pub fn sub(&self, o: &NumTensor) -> NumTensor {
        let mut r = self.clone();
        r.add_scaled(o, &-Rational::one());
        r
    }

    /// Result index `i` is input index `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> NumTensor {
        let entries = self
            .entries
            .iter()
            .map(|(k, v)| (perm.iter().map(|&p| k[p]).collect(), v.clone()))
            .collect();
        NumTensor {
            arity: self.arity,
            entries,
        }
    }

    /// Contracts index `a` of `self` with index `b` of `o` for each listed pair through the
    /// inverse metric. Remaining indices of `self` come first, then those of `o`.
    pub fn contract(&self, o: &NumTensor, pairs: &[(usize, usize)], model: &TensorModel) -> NumTensor {
        let mut left = Factor::from_tensor(self, 0);
        let mut right = Factor::from_tensor(o, self.arity);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            let label = self.arity + o.arity + i;
            left.labels[a] = label;
            right.labels[b] = label;
        }
        let f = left.contract(&right, &|l| l >= self.arity + o.arity, model);
        let order: Vec<usize> = (0..self.arity + o.arity).filter(|l| f.labels.contains(l)).collect();
        f.into_tensor(&order)
    }
}

#[derive(Clone, Debug)]
struct Factor {
    labels: Vec<usize>,
    data: HashMap<Vec<u8>, Rational>,
}

impl Factor {
    fn from_tensor(t: &NumTensor, offset: usize) -> Self {
        Factor {
            labels: (offset..offset + t.arity).collect(),
            data: t.entries.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    fn scalar(c: Rational) -> Self {
        Factor {
            labels: vec![],
            data: HashMap::from([(vec![], c)]),
        }
    }

    /// Sums over repeated labels within one factor.
    fn self_trace(mut self, model: &TensorModel) -> Self {
        loop {
            let dup = (0..self.labels.len()).find_map(|i| {
                (i + 1..self.labels.len())
                    .find(|&j| self.labels[j] == self.labels[i])
                    .map(|j| (i, j))
            });
            let Some((i, j)) = dup else {
                return self;
            };
            let mut data: HashMap<Vec<u8>, Rational> = HashMap::new();
            for (k, v) in &self.data {
                if k[i] != k[j] {
                    continue;
                }
                let key: Vec<u8> = k
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != i && p != j)
                    .map(|(_, &x)| x)
                    .collect();
                *data.entry(key).or_insert_with(Rational::zero) += v / &model.metric[k[i] as usize];
            }
            data.retain(|_, v| !v.is_zero());
            self.labels = self
                .labels
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != i && p != j)
                .map(|(_, &l)| l)
                .collect();
            self.data = data;
        }
    }

    fn contract<F: Fn(usize) -> bool>(&self, o: &Factor, _internal: &F, model: &TensorModel) -> Factor {
        let shared: Vec<usize> = self.labels.iter().copied().filter(|l| o.labels.contains(l)).collect();
        let pos_a: Vec<usize> = shared
            .iter()
            .map(|l| self.labels.iter().position(|x| x == l).unwrap())
            .collect();
        let pos_b: Vec<usize> = shared
            .iter()
            .map(|l| o.labels.iter().position(|x| x == l).unwrap())
            .collect();
        let rest_a: Vec<usize> = (0..self.labels.len()).filter(|p| !pos_a.contains(p)).collect();
        let rest_b: Vec<usize> = (0..o.labels.len()).filter(|p| !pos_b.contains(p)).collect();
        let mut index: HashMap<Vec<u8>, Vec<(Vec<u8>, &Rational)>> = HashMap::new();
        for (k, v) in &o.data {
            let key: Vec<u8> = pos_b.iter().map(|&p| k[p]).collect();
            let rest: Vec<u8> = rest_b.iter().map(|&p| k[p]).collect();
            index.entry(key).or_default().push((rest, v));
        }
        let mut data: HashMap<Vec<u8>, Rational> = HashMap::new();
        for (k, v) in &self.data {
            let key: Vec<u8> = pos_a.iter().map(|&p| k[p]).collect();
            let Some(matches) = index.get(&key) else {
                continue;
            };
            let mut w = v.clone();
            for &x in &key {
                w /= &model.metric[x as usize];
            }
            let head: Vec<u8> = rest_a.iter().map(|&p| k[p]).collect();
            for (rest, u) in matches {
                let mut out = head.clone();
                out.extend_from_slice(rest);
                *data.entry(out).or_insert_with(Rational::zero) += &w * *u;
            }
        }
        data.retain(|_, v| !v.is_zero());
        let mut labels: Vec<usize> = rest_a.iter().map(|&p| self.labels[p]).collect();
        labels.extend(rest_b.iter().map(|&p| o.labels[p]));
        Factor { labels, data }
    }

    fn into_tensor(self, order: &[usize]) -> NumTensor {
        let perm: Vec<usize> = order
            .iter()
            .map(|l| self.labels.iter().position(|x| x == l).unwrap())
            .collect();
        let entries = self
            .data
            .into_iter()
            .map(|(k, v)| (perm.iter().map(|&p| k[p]).collect(), v))
            .collect();
        NumTensor {
            arity: order.len(),
            entries,
        }
    }
}

/// Greedy pairwise contraction: always merge the pair sharing a label whose result has
/// the fewest open labels, ties broken by the smaller operand product.
fn contract_all(mut factors: Vec<Factor>, model: &TensorModel) -> Factor {
    if factors.is_empty() {
        return Factor::scalar(Rational::one());
    }
    while factors.len() > 1 {
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                let (a, b) = (&factors[i], &factors[j]);
                let shared = a.labels.iter().filter(|l| b.labels.contains(l)).count();
                if shared == 0 {
                    continue;
                }
                let open = a.labels.len() + b.labels.len() - 2 * shared;
                let cost = a.data.len() * b.data.len();
                if best.is_none_or(|(_, _, o, c)| (open, cost) < (o, c)) {
                    best = Some((i, j, open, cost));
                }
            }
        }
        let (i, j) = match best {
            Some((i, j, _, _)) => (i, j),
            None => {
                let mut idx: Vec<usize> = (0..factors.len()).collect();
                idx.sort_by_key(|&k| factors[k].data.len());
                (idx[0].min(idx[1]), idx[0].max(idx[1]))
            }
        };
        let b = factors.swap_remove(j);
        let a = factors.swap_remove(i);
        let merged = a.contract(&b, &|_| true, model).self_trace(model);
        factors.push(merged);
    }
    factors.pop().unwrap()
}

/// Covariant tensor of a single diagram.
pub fn diagram_tensor(d: &Diagram, model: &TensorModel) -> NumTensor {
    let k = d.arity();
    let mut label = vec![usize::MAX; d.half_edges()];
    let mut factors = Vec::new();
    let mut next = k;
    for h in 0..d.half_edges() {
        let m = d.mate(h);
        if h > m {
            continue;
        }
        match (d.is_boundary(h), d.is_boundary(m)) {
            (true, true) => {
                let data = (0..model.dim)
                    .map(|x| (vec![x as u8, x as u8], model.metric[x].clone()))
                    .collect();
                factors.push(Factor {
                    labels: vec![h, m],
                    data,
                });
            }
            (true, false) => label[m] = h,
            (false, _) => {
                label[h] = next;
                label[m] = next;
                next += 1;
            }
        }
    }
    let base: HashMap<Vec<u8>, Rational> = model.vertex.iter().map(|(k, v)| (k.to_vec(), v.clone())).collect();
    for v in 0..d.vertex_count() {
        let labels: Vec<usize> = (0..3).map(|s| label[d.slot(v, s)]).collect();
        factors.push(
            Factor {
                labels,
                data: base.clone(),
            }
            .self_trace(model),
        );
    }
    let f = contract_all(factors, model);
    let order: Vec<usize> = (0..k).collect();
    let mut t = f.into_tensor(&order);
    let scale = model.delta().pow(d.loops() as i32);
    if !scale.is_one() {
        for v in t.entries.values_mut() {
            *v *= &scale;
        }
    }
    t
}

pub const PHI_MAX_ARITY: usize = 5;

/// Image of a morphism under the numeric functor, in all-legs-up covariant form.
pub fn phi_tensor(f: &Morphism, model: &TensorModel) -> Result<NumTensor, LieError> {
    let k = f.inputs() + f.outputs();
    if k > PHI_MAX_ARITY {
        return Err(LieError::TooLarge {
            arity: k,
            max: PHI_MAX_ARITY,
        });
    }
    let delta = model.delta();
    let mut out = NumTensor::zero(k);
    for (d, c) in f.terms() {
        let c = c.eval_at(&delta)?;
        out.add_scaled(&diagram_tensor(d, model), &c);
    }
    Ok(out)
}

/// Full contraction of a closed morphism.
pub fn closed_value_numeric(f: &Morphism, model: &TensorModel) -> Result<Rational, LieError> {
    if f.profile() != (0, 0) {
        return Err(LieError::NotClosed(f.profile()));
    }
    Ok(phi_tensor(f, model)?.get(&[]))
}

/// Numeric counterpart of composing `f: m -> n` with `g: n -> p`.
pub fn compose_tensors(tf: &NumTensor, tg: &NumTensor, m: usize, n: usize, model: &TensorModel) -> NumTensor {
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (m + i, n - 1 - i)).collect();
    tf.contract(tg, &pairs, model)
}

/// Numeric counterpart of the monoidal product of `f: m -> n` and `g: m2 -> n2`.
pub fn tensor_tensors(
    tf: &NumTensor,
    tg: &NumTensor,
    (m, n): (usize, usize),
    (m2, n2): (usize, usize),
    model: &TensorModel,
) -> NumTensor {
    let outer = tf.contract(tg, &[], model);
    // outer is [f (m+n), g (m2+n2)]; target is [g inputs, f, g outputs]
    let mut perm: Vec<usize> = (0..m2).map(|p| m + n + p).collect();
    perm.extend(0..m + n);
    perm.extend((0..n2).map(|q| m + n + m2 + q));
    let mut t = outer.permute(&perm);
    t.arity = m + n + m2 + n2;
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::liealg::g2::g2_structure;
    use crate::scalar::int;

    #[test]
    fn loops_count_dimension() {
        let adj = TensorModel::adjoint(&g2_structure());
        assert_eq!(closed_value_numeric(&catalog::circle(), &adj).unwrap(), int(14));
        assert_eq!(
            closed_value_numeric(&catalog::circle(), &TensorModel::octonion()).unwrap(),
            int(7)
        );
    }

    #[test]
    fn bigon_is_identity_in_adjoint() {
        let adj = TensorModel::adjoint(&g2_structure());
        let bigon = phi_tensor(&catalog::bigon(), &adj).unwrap();
        assert_eq!(bigon, phi_tensor(&catalog::identity(), &adj).unwrap());
    }

    #[test]
    fn composition_and_product_are_preserved() {
        let m = TensorModel::octonion();
        let (f, g) = (catalog::merge(), catalog::split());
        let (tf, tg) = (phi_tensor(&f, &m).unwrap(), phi_tensor(&g, &m).unwrap());
        let fg = phi_tensor(&f.compose(&g).unwrap(), &m).unwrap();
        assert_eq!(compose_tensors(&tf, &tg, 2, 1, &m), fg);
        let prod = phi_tensor(&g.tensor(&catalog::identity()), &m).unwrap();
        let ti = phi_tensor(&catalog::identity(), &m).unwrap();
        assert_eq!(tensor_tensors(&tg, &ti, (1, 2), (1, 1), &m), prod);
    }

    #[test]
    fn large_arity_is_refused() {
        let m = TensorModel::octonion();
        let big = catalog::identity_n(3);
        assert!(matches!(phi_tensor(&big, &m), Err(LieError::TooLarge { arity: 6, .. })));
    }

    #[test]
    fn open_morphisms_have_no_closed_value() {
        let m = TensorModel::octonion();
        assert!(matches!(
            closed_value_numeric(&catalog::merge(), &m),
            Err(LieError::NotClosed((2, 1)))
        ));
    }
}
