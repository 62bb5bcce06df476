//! Brute-force oracles shared by the integration tests. They expand the
//! defining identities from raw structure constants with naive loops and
//! share no code with the checkers under test.
#![allow(dead_code, clippy::needless_range_loop)]

use dialgebra::linalg::{Matrix, Rational};
use dialgebra::structure::BilinearProduct;
use rand::Rng;

pub type V = Vec<Rational>;

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A product as a raw `[i][j][l]` table.
#[derive(Clone, Debug)]
pub struct Naive {
    pub n: usize,
    pub c: Vec<Rational>,
}

impl Naive {
    pub fn of(p: &BilinearProduct) -> Self {
        Naive {
            n: p.dim(),
            c: p.constants().to_vec(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Naive {
            n,
            c: vec![Rational::zero(); n * n * n],
        }
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> V {
        let n = self.n;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for l in 0..n {
                    let c = &self.c[(i * n + j) * n + l];
                    if !c.is_zero() {
                        out[l] += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    pub fn plus(&self, o: &Naive) -> Naive {
        Naive {
            n: self.n,
            c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn product(&self) -> BilinearProduct {
        BilinearProduct::from_constants(self.n, self.c.clone()).unwrap()
    }
}

pub fn e(n: usize, i: usize) -> V {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub fn sub(a: &[Rational], b: &[Rational]) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

/// `(x p y) q z - x p (y q z)` on basis vectors.
pub fn mixed(p: &Naive, q: &Naive, i: usize, j: usize, k: usize) -> V {
    let n = p.n;
    let (x, y, z) = (e(n, i), e(n, j), e(n, k));
    sub(&q.mul(&p.mul(&x, &y), &z), &p.mul(&x, &q.mul(&y, &z)))
}

pub fn associative(p: &Naive) -> bool {
    triples(p.n).all(|(i, j, k)| zero(&mixed(p, p, i, j, k)))
}

pub fn mda(p1: &Naive, p2: &Naive) -> bool {
    [(p1, p1), (p2, p2), (p1, p2), (p2, p1)]
        .iter()
        .all(|(p, q)| triples(p1.n).all(|(i, j, k)| zero(&mixed(p, q, i, j, k))))
}

pub fn apply(m: &Matrix, v: &[Rational]) -> V {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c) * &v[c]).sum())
        .collect()
}

/// (`f(xy) = x f(y)`, `f(xy) = f(x) y`) on all basis pairs.
pub fn semi_hom(p: &Naive, f: &Matrix) -> (bool, bool) {
    let n = p.n;
    let mut left = true;
    let mut right = true;
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let fxy = apply(f, &p.mul(&x, &y));
            left &= fxy == p.mul(&x, &apply(f, &y));
            right &= fxy == p.mul(&apply(f, &x), &y);
        }
    }
    (left, right)
}

fn combo(family: &[Matrix], coeffs: &[Rational], m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (k, c) in coeffs.iter().enumerate() {
        for r in 0..m {
            for s in 0..m {
                let v = out.get(r, s) + &(c * family[k].get(r, s));
                out.set(r, s, v);
            }
        }
    }
    out
}

pub fn bimodule(p: &Naive, l: &[Matrix], r: &[Matrix]) -> bool {
    let n = p.n;
    let m = l[0].rows();
    for i in 0..n {
        for j in 0..n {
            let xy = p.mul(&e(n, i), &e(n, j));
            if combo(l, &xy, m) != l[i].mul(&l[j]).unwrap() {
                return false;
            }
            if combo(r, &xy, m) != r[j].mul(&r[i]).unwrap() {
                return false;
            }
            if l[i].mul(&r[j]).unwrap() != r[j].mul(&l[i]).unwrap() {
                return false;
            }
        }
    }
    true
}

/// The product on `A ⊕ B` written out coordinate by coordinate.
pub fn naive_double(a: &Naive, b: &Naive, la: &[Matrix], ra: &[Matrix], lb: &[Matrix], rb: &[Matrix]) -> Naive {
    let (na, nb) = (a.n, b.n);
    let n = na + nb;
    let mut c = vec![Rational::zero(); n * n * n];
    for u in 0..n {
        for v in 0..n {
            let mut out = vec![Rational::zero(); n];
            match (u < na, v < na) {
                (true, true) => {
                    let xy = a.mul(&e(na, u), &e(na, v));
                    out[..na].clone_from_slice(&xy);
                }
                (false, false) => {
                    let ab = b.mul(&e(nb, u - na), &e(nb, v - na));
                    out[na..].clone_from_slice(&ab);
                }
                (true, false) => {
                    // (x, 0) * (0, b) = (r_B(b) x, l_A(x) b)
                    out[..na].clone_from_slice(&apply(&rb[v - na], &e(na, u)));
                    out[na..].clone_from_slice(&apply(&la[u], &e(nb, v - na)));
                }
                (false, true) => {
                    // (0, a) * (y, 0) = (l_B(a) y, r_A(y) a)
                    out[..na].clone_from_slice(&apply(&lb[u - na], &e(na, v)));
                    out[na..].clone_from_slice(&apply(&ra[v], &e(nb, u - na)));
                }
            }
            c[(u * n + v) * n..(u * n + v + 1) * n].clone_from_slice(&out);
        }
    }
    Naive { n, c }
}

/// Matched pair iff both factors are associative, both actions are
/// bimodules and the double is associative.
pub fn matched_pair(a: &Naive, b: &Naive, la: &[Matrix], ra: &[Matrix], lb: &[Matrix], rb: &[Matrix]) -> bool {
    associative(a)
        && associative(b)
        && bimodule(a, la, ra)
        && bimodule(b, lb, rb)
        && associative(&naive_double(a, b, la, ra, lb, rb))
}

pub fn lie(b: &Naive) -> bool {
    let n = b.n;
    for i in 0..n {
        if !zero(&b.mul(&e(n, i), &e(n, i))) {
            return false;
        }
        for j in 0..n {
            if !zero(&add(&b.mul(&e(n, i), &e(n, j)), &b.mul(&e(n, j), &e(n, i)))) {
                return false;
            }
        }
    }
    triples(n).all(|(i, j, k)| {
        let (x, y, z) = (e(n, i), e(n, j), e(n, k));
        let s = add(
            &add(&b.mul(&x, &b.mul(&y, &z)), &b.mul(&y, &b.mul(&z, &x))),
            &b.mul(&z, &b.mul(&x, &y)),
        );
        zero(&s)
    })
}

pub fn associator(p: &Naive, x: &[Rational], y: &[Rational], z: &[Rational]) -> V {
    sub(&p.mul(&p.mul(x, y), z), &p.mul(x, &p.mul(y, z)))
}

pub fn pre_lie(p: &Naive) -> bool {
    let n = p.n;
    triples(n).all(|(i, j, k)| {
        let (x, y, z) = (e(n, i), e(n, j), e(n, k));
        associator(p, &x, &y, &z) == associator(p, &y, &x, &z)
    })
}

pub fn assosymmetric(p: &Naive) -> bool {
    let n = p.n;
    pre_lie(p)
        && triples(n).all(|(i, j, k)| {
            let (x, y, z) = (e(n, i), e(n, j), e(n, k));
            associator(p, &x, &y, &z) == associator(p, &x, &z, &y)
        })
}

pub fn post_lie(circ: &Naive, b: &Naive) -> bool {
    let n = circ.n;
    lie(b)
        && triples(n).all(|(i, j, k)| {
            let (x, y, z) = (e(n, i), e(n, j), e(n, k));
            let a = sub(
                &sub(&associator(circ, &x, &y, &z), &associator(circ, &y, &x, &z)),
                &circ.mul(&b.mul(&x, &y), &z),
            );
            let d = sub(
                &sub(&circ.mul(&z, &b.mul(&x, &y)), &b.mul(&circ.mul(&z, &x), &y)),
                &b.mul(&x, &circ.mul(&z, &y)),
            );
            zero(&a) && zero(&d)
        })
}

pub fn commutator(p: &Naive) -> Naive {
    let n = p.n;
    let mut c = vec![Rational::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let v = sub(&p.mul(&e(n, i), &e(n, j)), &p.mul(&e(n, j), &e(n, i)));
            c[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&v);
        }
    }
    Naive { n, c }
}

/// `x p1 y - y p2 x`.
pub fn mixed_bracket(p1: &Naive, p2: &Naive) -> Naive {
    let n = p1.n;
    let mut c = vec![Rational::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let v = sub(&p1.mul(&e(n, i), &e(n, j)), &p2.mul(&e(n, j), &e(n, i)));
            c[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&v);
        }
    }
    Naive { n, c }
}

/// Adds a nonzero integer in `[-2, 2]` to one random entry.
pub fn perturb(rng: &mut impl Rng, entries: &mut [Rational]) -> usize {
    let at = rng.gen_range(0..entries.len());
    let mut delta = 0;
    while delta == 0 {
        delta = rng.gen_range(-2..=2i64);
    }
    entries[at] += &Rational::from_integer(delta);
    at
}

pub fn perturb_matrix(rng: &mut impl Rng, m: &Matrix) -> Matrix {
    let mut entries: Vec<Rational> = (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect();
    perturb(rng, &mut entries);
    Matrix::from_entries(m.rows(), m.cols(), entries).unwrap()
}
