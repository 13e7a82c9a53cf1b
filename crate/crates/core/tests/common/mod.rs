//! Oracles shared by the integration tests. They rebuild everything from the
//! Cartan matrix with plain rational elimination, independent of the
//! library's bicolored construction and Bareiss determinant.

#![allow(dead_code)]

use coxeter_core::diagram::{free_trees, random_tree, Diagram};
use coxeter_core::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn cartan(d: &Diagram) -> Vec<Vec<i64>> {
    let n = d.len();
    let mut k = vec![vec![0i64; n]; n];
    for (i, row) in k.iter_mut().enumerate() {
        row[i] = 2;
    }
    for e in d.edges() {
        k[e.i][e.j] = -i64::from(e.dij);
        k[e.j][e.i] = -i64::from(e.dji);
    }
    k
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Product of the simple reflections in the given order, vertex basis.
pub fn reflection_product(d: &Diagram, order: &[usize]) -> Vec<Vec<i64>> {
    let k = cartan(d);
    let n = d.len();
    let mut c: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for &i in order {
        let mut s: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|j| i64::from(r == j)).collect()).collect();
        for j in 0..n {
            s[i][j] -= k[i][j];
        }
        c = matmul(&c, &s);
    }
    c
}

/// Two-colouring by parity of BFS depth from vertex 0.
pub fn two_colour(d: &Diagram) -> (Vec<usize>, Vec<usize>) {
    let n = d.len();
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for w in d.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let even = (0..n).filter(|&v| depth[v] % 2 == 0).collect();
    let odd = (0..n).filter(|&v| depth[v] % 2 == 1).collect();
    (even, odd)
}

/// Bicolored Coxeter transformation as a reflection product: all even
/// vertices, then all odd ones.
pub fn bicolored_c(d: &Diagram) -> Vec<Vec<i64>> {
    let (a, b) = two_colour(d);
    let order: Vec<usize> = a.into_iter().chain(b).collect();
    reflection_product(d, &order)
}

pub fn det_rational(m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut m = m;
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let f = &m[r][col] / &pivot;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

/// `det(C - xI)` by rational elimination.
pub fn char_value(c: &[Vec<i64>], x: i64) -> BigInt {
    let n = c.len();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(BigInt::from(c[i][j] - if i == j { x } else { 0 })))
                .collect()
        })
        .collect();
    det_rational(m).to_integer()
}

/// Whether `p` agrees with `det(C - λI)` at `n + 2` integer points, which
/// pins down a polynomial of degree `n`.
pub fn agrees_with_oracle(p: &IntPolynomial, c: &[Vec<i64>]) -> bool {
    let n = c.len() as i64;
    p.degree() == Some(c.len()) && (-1..=n).all(|x| p.eval_int(&BigInt::from(x)) == char_value(c, x))
}

pub fn is_palindromic_up_to_sign(p: &IntPolynomial) -> bool {
    let c = p.coeffs();
    let rev: Vec<BigInt> = c.iter().rev().cloned().collect();
    let neg: Vec<BigInt> = rev.iter().map(|x| -x).collect();
    c == rev.as_slice() || c == neg.as_slice()
}

/// Every unlabeled simply-laced tree with up to 9 vertices (95 of them) and
/// 40 seeded multiply-laced trees with 10 or 11 vertices.
pub fn tree_corpus() -> Vec<Diagram> {
    let mut out: Vec<Diagram> = (1..=9).flat_map(free_trees).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..40 {
        out.push(random_tree(&mut rng, 10 + i % 2, true).unwrap());
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn positive(x: &BigInt) -> bool {
    x.is_positive()
}
