//! Structure constants of the 14-dimensional exceptional Lie algebra, realized as
//! derivations of the octonions.

use num_traits::{One, Zero};

use super::octonion::{basis, cross, Imag};
use super::Check;
use crate::scalar::{int, Rational};

type Matrix = Vec<Vec<Rational>>;

fn zeros(n: usize) -> Matrix {
    vec![vec![Rational::zero(); n]; n]
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut c = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

fn mat_comb(terms: &[(i64, &Matrix)]) -> Matrix {
    let n = terms[0].1.len();
    let mut c = zeros(n);
    for (s, m) in terms {
        for i in 0..n {
            for j in 0..n {
                c[i][j] += int(*s) * &m[i][j];
            }
        }
    }
    c
}

fn frobenius(a: &Matrix, b: &Matrix) -> Rational {
    a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| x * y).sum()
}

fn apply(m: &Matrix, x: &Imag) -> Imag {
    std::array::from_fn(|i| (0..7).map(|j| &m[i][j] * &x[j]).sum())
}

/// Lie algebra with a basis that is orthogonal for its Killing form.
#[derive(Clone, Debug)]
pub struct StructureTensor {
    /// `bracket[a][b][x]`: coefficient of `e_x` in `[e_a, e_b]`.
    pub bracket: Vec<Vec<Vec<Rational>>>,
    /// Killing form `tr(ad a ad b)`.
    pub killing: Matrix,
    /// `dual[a][x]`: coefficient of `e_x` in the Killing dual of `e_a`.
    pub dual: Matrix,
    /// The basis as 7x7 matrices acting on the imaginary octonions.
    pub matrices: Vec<Matrix>,
}

impl StructureTensor {
    pub fn dim(&self) -> usize {
        self.bracket.len()
    }

    pub fn bracket_of(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for a in 0..n {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if y[b].is_zero() {
                    continue;
                }
                let c = &x[a] * &y[b];
                for (o, s) in out.iter_mut().zip(&self.bracket[a][b]) {
                    if !s.is_zero() {
                        *o += &c * s;
                    }
                }
            }
        }
        out
    }

    pub fn killing_of(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let n = self.dim();
        let mut s = Rational::zero();
        for a in 0..n {
            for b in 0..n {
                if !x[a].is_zero() && !y[b].is_zero() {
                    s += &x[a] * &y[b] * &self.killing[a][b];
                }
            }
        }
        s
    }

    pub fn unit(&self, a: usize) -> Vec<Rational> {
        (0..self.dim())
            .map(|x| if x == a { Rational::one() } else { Rational::zero() })
            .collect()
    }

    /// Diagonal entries of the Killing form.
    pub fn killing_diagonal(&self) -> Vec<Rational> {
        (0..self.dim()).map(|a| self.killing[a][a].clone()).collect()
    }
}

/// Signed pairs `(j, k, s)` with `e_j x e_k = s e_i`, `j < k`.
fn lines_through(i: usize) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for j in 0..7 {
        for k in j + 1..7 {
            let p = cross(&basis(j), &basis(k));
            if !p[i].is_zero() {
                out.push((j, k, if p[i] > Rational::zero() { 1 } else { -1 }));
            }
        }
    }
    out
}

/// The derivation algebra of the octonions, with its Killing form and dual basis.
pub fn g2_structure() -> StructureTensor {
    let mut matrices: Vec<Matrix> = Vec::new();
    for i in 0..7 {
        let lines = lines_through(i);
        assert_eq!(lines.len(), 3, "each unit lies on three lines");
        let u: Vec<Matrix> = lines
            .iter()
            .map(|&(j, k, s)| {
                let mut m = zeros(7);
                m[j][k] = int(s);
                m[k][j] = int(-s);
                m
            })
            .collect();
        matrices.push(mat_comb(&[(1, &u[0]), (-1, &u[1])]));
        matrices.push(mat_comb(&[(1, &u[0]), (1, &u[1]), (-2, &u[2])]));
    }
    let n = matrices.len();
    let norms: Vec<Rational> = matrices.iter().map(|m| frobenius(m, m)).collect();
    let mut bracket = vec![vec![vec![Rational::zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            let c = mat_comb(&[
                (1, &mat_mul(&matrices[a], &matrices[b])),
                (-1, &mat_mul(&matrices[b], &matrices[a])),
            ]);
            let coords: Vec<Rational> = (0..n).map(|x| frobenius(&c, &matrices[x]) / &norms[x]).collect();
            let mut back = zeros(7);
            for (x, k) in coords.iter().enumerate() {
                for i in 0..7 {
                    for j in 0..7 {
                        back[i][j] += k * &matrices[x][i][j];
                    }
                }
            }
            assert_eq!(back, c, "derivations are closed under the bracket");
            bracket[a][b] = coords;
        }
    }
    let mut killing = zeros(n);
    for a in 0..n {
        for b in 0..n {
            let mut s = Rational::zero();
            for x in 0..n {
                for y in 0..n {
                    if !bracket[a][x][y].is_zero() && !bracket[b][y][x].is_zero() {
                        s += &bracket[a][x][y] * &bracket[b][y][x];
                    }
                }
            }
            killing[a][b] = s;
        }
    }
    let mut dual = zeros(n);
    for a in 0..n {
        assert!((0..n).all(|b| b == a || killing[a][b].is_zero()), "orthogonal basis");
        dual[a][a] = Rational::one() / &killing[a][a];
    }
    StructureTensor {
        bracket,
        killing,
        dual,
        matrices,
    }
}

/// `D(x * y) = D(x) * y + x * D(y)` for every basis element and basis pair.
pub fn is_derivation_algebra(s: &StructureTensor) -> bool {
    s.matrices.iter().all(|d| {
        (0..7).all(|i| {
            (0..7).all(|j| {
                let (x, y) = (basis(i), basis(j));
                let lhs = apply(d, &cross(&x, &y));
                let a = cross(&apply(d, &x), &y);
                let b = cross(&x, &apply(d, &y));
                let rhs: Imag = std::array::from_fn(|k| &a[k] + &b[k]);
                lhs == rhs
            })
        })
    })
}

/// Antisymmetry, Jacobi, invariance and symmetry of the Killing form, the
/// bracket-transport identity, Casimir acting as one, and the derivation property.
pub fn g2_checks(s: &StructureTensor) -> Vec<Check> {
    let n = s.dim();
    let e: Vec<Vec<Rational>> = (0..n).map(|a| s.unit(a)).collect();
    let mut out = Vec::new();
    let mut record = |name: &'static str, passed: bool, detail: String| out.push(Check { name, passed, detail });

    record("dimension", n == 14, format!("{n} basis elements"));

    let antisym = (0..n).all(|a| (0..n).all(|b| s.bracket[a][b].iter().zip(&s.bracket[b][a]).all(|(x, y)| x == &-y)));
    record("antisymmetry", antisym, "[a,b] = -[b,a]".into());

    let mut jacobi = true;
    let mut invariant = true;
    for a in 0..n {
        for b in 0..n {
            let ab = &s.bracket[a][b];
            for c in 0..n {
                let t1 = s.bracket_of(ab, &e[c]);
                let t2 = s.bracket_of(&s.bracket[b][c], &e[a]);
                let t3 = s.bracket_of(&s.bracket[c][a], &e[b]);
                jacobi &= (0..n).all(|x| (&t1[x] + &t2[x] + &t3[x]).is_zero());
                invariant &= s.killing_of(&e[a], &s.bracket[b][c]) == s.killing_of(ab, &e[c]);
            }
        }
    }
    record("jacobi", jacobi, "cyclic sum of [[a,b],c] vanishes".into());
    record("killing_invariant", invariant, "k(a,[b,c]) = k([a,b],c)".into());
    let symmetric = (0..n).all(|a| (0..n).all(|b| s.killing[a][b] == s.killing[b][a]));
    record("killing_symmetric", symmetric, "k(a,b) = k(b,a)".into());

    // sum_b [a,b] (x) b^ = sum_b b (x) [b^, a], compared as n x n arrays
    let mut transport = true;
    for a in 0..n {
        let mut lhs = vec![vec![Rational::zero(); n]; n];
        let mut rhs = vec![vec![Rational::zero(); n]; n];
        for b in 0..n {
            let left = &s.bracket[a][b];
            let dual = &s.dual[b];
            let right = s.bracket_of(dual, &e[a]);
            for x in 0..n {
                for y in 0..n {
                    lhs[x][y] += &left[x] * &dual[y];
                    rhs[x][y] += &e[b][x] * &right[y];
                }
            }
        }
        transport &= lhs == rhs;
    }
    record(
        "bracket_transport",
        transport,
        "sum_b [a,b] (x) b^ = sum_b b (x) [b^,a]".into(),
    );

    let casimir = (0..n).all(|a| {
        let mut acc = vec![Rational::zero(); n];
        for b in 0..n {
            let t = s.bracket_of(&s.dual[b], &s.bracket[b][a]);
            for x in 0..n {
                acc[x] += &t[x];
            }
        }
        acc == e[a]
    });
    record("casimir_is_identity", casimir, "sum_b ad(b^) ad(b) = 1".into());

    record(
        "derivations",
        is_derivation_algebra(s),
        "every basis element derives the vector product".into(),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_invariants_hold() {
        let s = g2_structure();
        for c in g2_checks(&s) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn killing_form_is_negative_definite() {
        let s = g2_structure();
        assert!(s.killing_diagonal().iter().all(|k| k < &Rational::zero()));
    }
}
