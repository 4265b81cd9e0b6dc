//! Octonions by Cayley-Dickson doubling, and the cross product on their imaginary part.

use num_traits::{One, Zero};

use super::Check;
use crate::scalar::{int, Rational};

/// Element of a Cayley-Dickson algebra of dimension `2^k`, coordinates over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octonion(pub Vec<Rational>);

fn cd_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    if n == 1 {
        return vec![&a[0] * &b[0]];
    }
    let h = n / 2;
    let (p, q) = a.split_at(h);
    let (r, s) = b.split_at(h);
    // (p, q)(r, s) = (pr - s*q, sp + qr*)
    let left = sub(&cd_mul(p, r), &cd_mul(&cd_conj(s), q));
    let right = add(&cd_mul(s, p), &cd_mul(q, &cd_conj(r)));
    left.into_iter().chain(right).collect()
}

fn cd_conj(a: &[Rational]) -> Vec<Rational> {
    a.iter()
        .enumerate()
        .map(|(i, x)| if i == 0 { x.clone() } else { -x })
        .collect()
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl Octonion {
    pub fn unit(i: usize) -> Self {
        let mut v = vec![Rational::zero(); 8];
        v[i] = Rational::one();
        Octonion(v)
    }

    pub fn mul(&self, o: &Octonion) -> Octonion {
        Octonion(cd_mul(&self.0, &o.0))
    }

    pub fn conj(&self) -> Octonion {
        Octonion(cd_conj(&self.0))
    }

    pub fn norm2(&self) -> Rational {
        self.0.iter().map(|x| x * x).sum()
    }
}

/// Imaginary octonions: coordinates on `e_1 .. e_7`.
pub type Imag = [Rational; 7];

fn embed(x: &Imag) -> Octonion {
    let mut v = vec![Rational::zero()];
    v.extend(x.iter().cloned());
    Octonion(v)
}

pub fn basis(i: usize) -> Imag {
    std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() })
}

pub fn inner(x: &Imag, y: &Imag) -> Rational {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Imaginary part of the product.
pub fn cross(x: &Imag, y: &Imag) -> Imag {
    let p = embed(x).mul(&embed(y));
    std::array::from_fn(|i| p.0[i + 1].clone())
}

fn lin(terms: &[(Rational, &Imag)]) -> Imag {
    std::array::from_fn(|i| terms.iter().map(|(c, v)| c * &v[i]).sum())
}

/// Vector product identities over all basis triples, plus the loop and bigon constants.
pub fn octonion_checks() -> Vec<Check> {
    let e: Vec<Imag> = (0..7).map(basis).collect();
    let mut out = Vec::new();
    let mut record = |name: &'static str, passed: bool, detail: String| out.push(Check { name, passed, detail });

    let alt = e.iter().all(|x| cross(x, x).iter().all(Zero::is_zero))
        && e.iter()
            .all(|x| e.iter().all(|y| cross(x, y) == lin(&[(int(-1), &cross(y, x))])));
    record("alternating", alt, "x*x = 0 and x*y = -(y*x) on the basis".into());

    let norms = (0..8).all(|i| {
        (0..8).all(|j| {
            let p = Octonion::unit(i).mul(&Octonion::unit(j));
            p.norm2() == Rational::one()
        })
    });
    record("composition", norms, "|e_i e_j| = 1".into());

    let mut invariance = true;
    let mut jacobi_like = true;
    let mut flexible = true;
    for x in &e {
        for y in &e {
            let xy = cross(x, y);
            let lhs3 = cross(&xy, x);
            let rhs3 = lin(&[(inner(x, x), y), (-inner(x, y), x)]);
            flexible &= lhs3 == rhs3;
            for z in &e {
                invariance &= inner(x, &cross(y, z)) == inner(&xy, z);
                let (a, b) = (cross(&xy, z), cross(x, &cross(y, z)));
                let lhs: Imag = std::array::from_fn(|k| &a[k] + &b[k]);
                let rhs = lin(&[(int(2) * inner(x, z), y), (-inner(x, y), z), (-inner(z, y), x)]);
                jacobi_like &= lhs == rhs;
            }
        }
    }
    record(
        "invariant_inner_product",
        invariance,
        "<x, y*z> = <x*y, z> for all basis triples".into(),
    );
    record(
        "two_sided_product",
        jacobi_like,
        "(x*y)*z + x*(y*z) = 2<x,z>y - <x,y>z - <z,y>x for all basis triples".into(),
    );
    record(
        "double_product",
        flexible,
        "(x*y)*x = <x,x>y - <x,y>x for all basis pairs".into(),
    );

    let bigon = e.iter().all(|x| {
        let mut acc: Imag = std::array::from_fn(|_| Rational::zero());
        for ei in &e {
            let t = cross(&cross(x, ei), ei);
            acc = std::array::from_fn(|k| &acc[k] + &t[k]);
        }
        acc == lin(&[(int(-6), x)])
    });
    record("bigon_constant", bigon, "sum_i (x*e_i)*e_i = -6x".into());

    let trace: Rational = e.iter().map(|x| inner(x, x)).sum();
    record("loop_constant", trace == int(7), format!("sum_i <e_i, e_i> = {trace}"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_products_are_signed_units() {
        let p = cross(&basis(0), &basis(1));
        let nonzero: Vec<_> = p.iter().filter(|x| !x.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0] * nonzero[0], Rational::one());
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        for i in 1..8 {
            let u = Octonion::unit(i);
            let mut m1 = vec![Rational::zero(); 8];
            m1[0] = -Rational::one();
            assert_eq!(u.mul(&u).0, m1);
            assert_eq!(u.mul(&u.conj()).0[0], Rational::one());
        }
    }

    #[test]
    fn all_checks_pass() {
        for c in octonion_checks() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
