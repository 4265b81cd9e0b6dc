//! Root systems in Dynkin-label coordinates, weight multiplicities and tensor products.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::scalar::Rational;

/// A weight written in the basis of fundamental weights.
pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A1,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl RootType {
    pub const EXCEPTIONAL: [RootType; 5] = [RootType::G2, RootType::F4, RootType::E6, RootType::E7, RootType::E8];
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for RootType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A1" => RootType::A1,
            "G2" => RootType::G2,
            "F4" => RootType::F4,
            "E6" => RootType::E6,
            "E7" => RootType::E7,
            "E8" => RootType::E8,
            _ => return Err(format!("unknown root system {s}")),
        })
    }
}

/// Simply-laced Dynkin diagram in Bourbaki numbering (1-based edges).
fn e_type_edges(rank: usize) -> Vec<(usize, usize)> {
    let all = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
    all.into_iter().filter(|&(a, b)| a <= rank && b <= rank).collect()
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootType,
    /// `cartan[i][j] = <alpha_i^vee, alpha_j>`.
    cartan: Vec<Vec<i64>>,
    /// Half the squared length of each simple root.
    half_norm: Vec<i64>,
    /// Positive roots as coefficient vectors over the simple roots, sorted by height.
    positive: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(kind: RootType) -> Self {
        let (cartan, half_norm) = match kind {
            RootType::A1 => (vec![vec![2]], vec![1]),
            RootType::G2 => (vec![vec![2, -3], vec![-1, 2]], vec![1, 3]),
            RootType::F4 => (
                vec![
                    vec![2, -1, 0, 0],
                    vec![-1, 2, -1, 0],
                    vec![0, -2, 2, -1],
                    vec![0, 0, -1, 2],
                ],
                vec![2, 2, 1, 1],
            ),
            RootType::E6 | RootType::E7 | RootType::E8 => {
                let r = match kind {
                    RootType::E6 => 6,
                    RootType::E7 => 7,
                    _ => 8,
                };
                let mut a = vec![vec![0; r]; r];
                for (i, row) in a.iter_mut().enumerate() {
                    row[i] = 2;
                }
                for (x, y) in e_type_edges(r) {
                    a[x - 1][y - 1] = -1;
                    a[y - 1][x - 1] = -1;
                }
                (a, vec![1; r])
            }
        };
        let positive = positive_roots(&cartan);
        RootSystem {
            kind,
            cartan,
            half_norm,
            positive,
        }
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn rho(&self) -> Weight {
        vec![1; self.rank()]
    }

    /// Dynkin labels of the element with the given simple-root coefficients.
    pub fn to_weight(&self, coeffs: &[i64]) -> Weight {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| coeffs[j] * self.cartan[i][j]).sum())
            .collect()
    }

    /// Highest root, the highest weight of the adjoint representation.
    pub fn adjoint(&self) -> Weight {
        self.to_weight(self.positive.last().expect("nonempty root system"))
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        let mut w = vec![0; self.rank()];
        w[i] = 1;
        w
    }

    /// `(root, weight)` for a root given by simple-root coefficients.
    fn pair(&self, root: &[i64], w: &[i64]) -> i64 {
        root.iter()
            .zip(w)
            .zip(&self.half_norm)
            .map(|((c, x), d)| c * x * d)
            .sum()
    }

    fn reflect(&self, w: &mut [i64], i: usize) {
        let k = w[i];
        for (j, x) in w.iter_mut().enumerate() {
            *x -= k * self.cartan[j][i];
        }
    }

    /// Dominant representative and the parity of the reflections used.
    pub fn to_dominant(&self, w: &[i64]) -> (Weight, bool) {
        let mut w = w.to_vec();
        let mut odd = false;
        while let Some(i) = w.iter().position(|&x| x < 0) {
            self.reflect(&mut w, i);
            odd = !odd;
        }
        (w, odd)
    }

    pub fn weyl_dimension(&self, lambda: &[i64]) -> BigInt {
        let shifted: Weight = lambda.iter().map(|x| x + 1).collect();
        let rho = self.rho();
        let mut num = Rational::one();
        for a in &self.positive {
            num *= Rational::new(BigInt::from(self.pair(a, &shifted)), BigInt::from(self.pair(a, &rho)));
        }
        assert!(num.is_integer());
        num.to_integer()
    }

    pub fn orbit(&self, w: &[i64]) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::from([w.to_vec()]);
        seen.insert(w.to_vec());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                if x[i] != 0 {
                    let mut y = x.clone();
                    self.reflect(&mut y, i);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Multiplicities of the dominant weights of the irreducible module `lambda`
    /// (Freudenthal's recursion).
    pub fn dominant_multiplicities(&self, lambda: &[i64]) -> BTreeMap<Weight, u64> {
        assert!(lambda.iter().all(|&x| x >= 0), "highest weight must be dominant");
        let r = self.rank();
        // dominant weights below lambda with their depth in simple-root coefficients
        let mut depth: HashMap<Weight, Vec<i64>> = HashMap::new();
        depth.insert(lambda.to_vec(), vec![0; r]);
        let mut queue = VecDeque::from([lambda.to_vec()]);
        while let Some(mu) = queue.pop_front() {
            let c = depth[&mu].clone();
            for a in &self.positive {
                let aw = self.to_weight(a);
                let nu: Weight = mu.iter().zip(&aw).map(|(x, y)| x - y).collect();
                if nu.iter().all(|&x| x >= 0) && !depth.contains_key(&nu) {
                    depth.insert(nu.clone(), c.iter().zip(a).map(|(x, y)| x + y).collect());
                    queue.push_back(nu);
                }
            }
        }
        let mut order: Vec<(i64, Weight)> = depth.iter().map(|(w, c)| (c.iter().sum(), w.clone())).collect();
        order.sort();
        let mut mult: HashMap<Weight, u64> = HashMap::new();
        let roots: Vec<(Vec<i64>, Weight)> = self.positive.iter().map(|a| (a.clone(), self.to_weight(a))).collect();
        for (_, mu) in order {
            if mu == lambda {
                mult.insert(mu, 1);
                continue;
            }
            let sum_w: Weight = (0..r).map(|i| lambda[i] + mu[i] + 2).collect();
            let denom = self.pair(&depth[&mu], &sum_w);
            let mut num: i64 = 0;
            for (a, aw) in &roots {
                let mut nu = mu.clone();
                loop {
                    for i in 0..r {
                        nu[i] += aw[i];
                    }
                    let (dom, _) = self.to_dominant(&nu);
                    match mult.get(&dom) {
                        Some(&m) => num += 2 * self.pair(a, &nu) * m as i64,
                        None => break,
                    }
                }
            }
            assert!(denom > 0 && num % denom == 0, "Freudenthal recursion is integral");
            let m = (num / denom) as u64;
            if m > 0 {
                mult.insert(mu, m);
            }
        }
        mult.into_iter().collect()
    }

    /// All weights of the irreducible module `lambda` with multiplicities.
    pub fn weight_multiplicities(&self, lambda: &[i64]) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for (mu, m) in self.dominant_multiplicities(lambda) {
            for w in self.orbit(&mu) {
                out.insert(w, m);
            }
        }
        out
    }

    /// Decomposition of `V(lambda) (x) V(mu)` by Klimyk's formula.
    pub fn tensor_decompose(&self, lambda: &[i64], mu: &[i64]) -> BTreeMap<Weight, i64> {
        self.tensor_with_weights(&[(lambda.to_vec(), 1)], &self.weight_multiplicities(mu))
    }

    /// `sum_i c_i V(lambda_i) (x) V` where `V` has the given weights.
    fn tensor_with_weights(&self, module: &[(Weight, i64)], weights: &BTreeMap<Weight, u64>) -> BTreeMap<Weight, i64> {
        let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
        for (lambda, c) in module {
            for (nu, m) in weights {
                let shifted: Weight = (0..self.rank()).map(|i| lambda[i] + nu[i] + 1).collect();
                let (dom, odd) = self.to_dominant(&shifted);
                if dom.contains(&0) {
                    continue;
                }
                let hw: Weight = dom.iter().map(|x| x - 1).collect();
                let s = if odd { -1 } else { 1 };
                *out.entry(hw).or_insert(0) += s * c * *m as i64;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Decompositions of the tensor powers `V^0, ..., V^k` of `V(lambda)`.
    pub fn tensor_powers(&self, lambda: &[i64], k: usize) -> Vec<BTreeMap<Weight, i64>> {
        let weights = self.weight_multiplicities(lambda);
        let mut out = vec![BTreeMap::from([(vec![0; self.rank()], 1)])];
        for _ in 0..k {
            let prev: Vec<(Weight, i64)> = out.last().unwrap().iter().map(|(w, c)| (w.clone(), *c)).collect();
            out.push(self.tensor_with_weights(&prev, &weights));
        }
        out
    }

    /// `dim Hom(V^m, V^n)` for `V = V(lambda)`.
    pub fn dim_hom(&self, lambda: &[i64], m: usize, n: usize) -> i64 {
        let p = self.tensor_powers(lambda, m.max(n));
        p[m].iter().map(|(w, c)| c * p[n].get(w).copied().unwrap_or(0)).sum()
    }

    pub fn dim_hom_adjoint(&self, m: usize, n: usize) -> i64 {
        self.dim_hom(&self.adjoint(), m, n)
    }
}

fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let simple: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    let mut roots: Vec<Vec<i64>> = simple.clone();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = simple;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for b in &frontier {
            for i in 0..r {
                // length of the i-string below b
                let mut p = 0;
                let mut down = b.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| b[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = b.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up.clone());
                        roots.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    roots.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoint_dimensions() {
        let expected = [
            (RootType::A1, 3),
            (RootType::G2, 14),
            (RootType::F4, 52),
            (RootType::E6, 78),
            (RootType::E7, 133),
            (RootType::E8, 248),
        ];
        for (kind, dim) in expected {
            let r = RootSystem::new(kind);
            assert_eq!(r.weyl_dimension(&r.adjoint()), BigInt::from(dim), "{kind}");
        }
    }

    #[test]
    fn multiplicities_sum_to_weyl_dimension() {
        for kind in [RootType::A1, RootType::G2, RootType::F4, RootType::E6] {
            let r = RootSystem::new(kind);
            for lambda in [r.adjoint(), r.fundamental(0)] {
                let total: u64 = r.weight_multiplicities(&lambda).values().sum();
                assert_eq!(BigInt::from(total), r.weyl_dimension(&lambda), "{kind} {lambda:?}");
            }
        }
    }

    #[test]
    fn doublet_squared() {
        let r = RootSystem::new(RootType::A1);
        let d = r.tensor_decompose(&[1], &[1]);
        assert_eq!(d, BTreeMap::from([(vec![0], 1), (vec![2], 1)]));
        assert_eq!(r.dim_hom_adjoint(2, 2), 3);
    }

    #[test]
    fn seven_dimensional_square() {
        let r = RootSystem::new(RootType::G2);
        let seven = r.fundamental(0);
        assert_eq!(r.weyl_dimension(&seven), BigInt::from(7));
        assert_eq!(r.dim_hom(&seven, 2, 2), 4);
        assert_eq!(r.dim_hom_adjoint(2, 2), 5);
    }

    #[test]
    fn names_parse() {
        assert_eq!("e8".parse::<RootType>().unwrap(), RootType::E8);
        assert!("B3".parse::<RootType>().is_err());
    }
}
