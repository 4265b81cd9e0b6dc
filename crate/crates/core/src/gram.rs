//! Gram matrices of the closed pairing, exact determinants and specialized ranks.

use num_traits::Zero;
use thiserror::Error;

use crate::catalog;
use crate::diagram::Morphism;
use crate::rewrite::{Evaluator, RewriteError, RuleSet};
use crate::scalar::{Poly, RatFunc, Rational, ScalarError};

#[derive(Debug, Error)]
pub enum GramError {
    #[error("entry ({row}, {col}): {source}")]
    Entry {
        row: usize,
        col: usize,
        #[source]
        source: RewriteError,
    },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Catalog {
    /// jail, hourglass, cross, H, I in Hom(X^2, X^2).
    BigFive,
    /// Sixteen diagrams in Hom(X^2, X^3).
    Particles,
}

impl Catalog {
    pub fn elements(self) -> Vec<Morphism> {
        match self {
            Catalog::BigFive => catalog::bigfive(),
            Catalog::Particles => catalog::particles(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Catalog::BigFive => "bigfive",
            Catalog::Particles => "particles",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub entries: Vec<Vec<RatFunc>>,
}

/// Pairwise closed values of `basis`, filling the lower triangle by symmetry.
pub fn gram_of(basis: &[Morphism], ev: &mut Evaluator) -> Result<GramMatrix, GramError> {
    let n = basis.len();
    let mut entries = vec![vec![RatFunc::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = ev
                .pairing_value(&basis[i], &basis[j])
                .map_err(|source| GramError::Entry { row: i, col: j, source })?;
            entries[j][i] = v.clone();
            entries[i][j] = v;
        }
    }
    Ok(GramMatrix { entries })
}

pub fn gram(cat: Catalog, rules: &RuleSet) -> Result<GramMatrix, GramError> {
    gram_of(&cat.elements(), &mut Evaluator::new(rules.clone()))
}

impl GramMatrix {
    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() })
                    .collect()
            })
            .collect();
        GramMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Fraction-free elimination over Q[d] after clearing a common denominator.
    pub fn det(&self) -> RatFunc {
        let n = self.size();
        if n == 0 {
            return RatFunc::one();
        }
        let mut common = Poly::one();
        for row in &self.entries {
            for x in row {
                let g = Poly::gcd(&common, x.denom());
                common = (&common * x.denom()).exact_div(&g).expect("gcd divides");
            }
        }
        let mut a: Vec<Vec<Poly>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x.numer() * &common).exact_div(x.denom()).expect("common multiple"))
                    .collect()
            })
            .collect();
        let det = bareiss(&mut a);
        RatFunc::new(det, common.pow(n as u32)).expect("nonzero denominator")
    }

    pub fn specialize(&self, x: &Rational) -> Result<Vec<Vec<Rational>>, ScalarError> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval_at(x)).collect())
            .collect()
    }

    pub fn rank_at(&self, x: &Rational) -> Result<usize, ScalarError> {
        Ok(rational_rank(self.specialize(x)?))
    }
}

fn bareiss(a: &mut [Vec<Poly>]) -> Poly {
    let n = a.len();
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

pub fn rational_rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let piv = a[rank][c].clone();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &piv;
                for k in c..cols {
                    let t = &f * &a[rank][k];
                    a[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn identity_determinant() {
        assert_eq!(GramMatrix::identity(3).det(), RatFunc::one());
    }

    #[test]
    fn rank_of_rank_one_matrix() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(rational_rank(a), 1);
    }

    #[test]
    fn determinant_needs_row_swap() {
        let d = RatFunc::var();
        let m = GramMatrix {
            entries: vec![vec![RatFunc::zero(), d.clone()], vec![RatFunc::one(), RatFunc::zero()]],
        };
        assert_eq!(m.det(), -&d);
    }
}
