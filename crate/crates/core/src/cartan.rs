//! Generalized Cartan matrices, symmetrizers `K = U·B`, and the three-way
//! finite / affine / indefinite classification of the Tits form.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diagram::{Diagram, VertexId};
use crate::matrix::Matrix;
use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanKind {
    /// `B` positive definite.
    Finite,
    /// `B` positive semidefinite with one-dimensional kernel.
    Affine,
    IndefiniteDegenerate,
    IndefiniteNondegenerate,
}

impl CartanKind {
    pub fn name(self) -> &'static str {
        match self {
            CartanKind::Finite => "finite",
            CartanKind::Affine => "affine",
            CartanKind::IndefiniteDegenerate => "indefinite-degenerate",
            CartanKind::IndefiniteNondegenerate => "indefinite-nondegenerate",
        }
    }

    pub fn is_indefinite(self) -> bool {
        matches!(
            self,
            CartanKind::IndefiniteDegenerate | CartanKind::IndefiniteNondegenerate
        )
    }
}

#[derive(Clone, Debug)]
pub struct CartanData {
    pub k: Matrix<BigInt>,
    /// Diagonal of `U`.
    pub u: Vec<Rational>,
    pub b: Matrix<Rational>,
    pub kind: CartanKind,
    pub ker_b_dim: usize,
    /// `(positive, negative, zero)` eigenvalue counts of `B`.
    pub inertia: (usize, usize, usize),
}

impl CartanData {
    pub fn u_matrix(&self) -> Matrix<Rational> {
        let n = self.u.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                self.u[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Exact kernel basis of `B`.
    pub fn kernel_of_b(&self) -> Vec<Vec<Rational>> {
        self.b.nullspace()
    }
}

/// Checks `k_ii = 2`, `k_ij <= 0` off the diagonal, and `k_ij = 0 ⇔ k_ji = 0`.
pub fn check_gcm(k: &Matrix<BigInt>) -> Result<()> {
    if !k.is_square() {
        return Err(Error::InvalidDiagram("Cartan matrix is not square".into()));
    }
    let two = BigInt::from(2);
    for i in 0..k.rows() {
        if k[(i, i)] != two {
            return Err(Error::InvalidDiagram(format!("k_{i}{i} = {} != 2", k[(i, i)])));
        }
        for j in 0..k.cols() {
            if i == j {
                continue;
            }
            if k[(i, j)].is_positive() {
                return Err(Error::InvalidDiagram(format!("k_{i}{j} = {} > 0", k[(i, j)])));
            }
            if k[(i, j)].is_zero() != k[(j, i)].is_zero() {
                return Err(Error::InvalidDiagram(format!(
                    "k_{i}{j} = {} but k_{j}{i} = {}",
                    k[(i, j)],
                    k[(j, i)]
                )));
            }
        }
    }
    Ok(())
}

/// Symmetrizer diagonal: `u_j = u_i · k_ji / k_ij` along a spanning tree,
/// checked on every edge. Symmetric `K` gets `U = 2I` (so `K = 2B`);
/// otherwise the first vertex has `u = 1`.
pub fn symmetrizer(d: &Diagram) -> Result<Vec<Rational>> {
    let k = d.cartan_matrix();
    let n = d.len();
    if k.is_symmetric() {
        return Ok(vec![Rational::from(BigInt::from(2)); n]);
    }
    let mut u: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if u[start].is_some() {
            continue;
        }
        u[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in d.neighbors(i) {
                let want = u[i].clone().unwrap() * Rational::new(k[(j, i)].clone(), k[(i, j)].clone());
                match &u[j] {
                    None => {
                        u[j] = Some(want);
                        stack.push(j);
                    }
                    Some(have) if *have != want => return Err(Error::NotSymmetrizable(j)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(u.into_iter().map(Option::unwrap).collect())
}

pub fn cartan_matrix(d: &Diagram) -> Result<CartanData> {
    let k = d.cartan_matrix();
    check_gcm(&k)?;
    let u = symmetrizer(d)?;
    let n = d.len();
    let b = Matrix::from_fn(n, n, |i, j| Rational::from(k[(i, j)].clone()) / &u[i]);
    debug_assert!(b.is_symmetric());
    let inertia = b.inertia();
    let (_, neg, zero) = inertia;
    let kind = match (neg, zero) {
        (0, 0) => CartanKind::Finite,
        (0, 1) => CartanKind::Affine,
        (_, 0) => CartanKind::IndefiniteNondegenerate,
        _ => CartanKind::IndefiniteDegenerate,
    };
    Ok(CartanData {
        k,
        u,
        b,
        kind,
        ker_b_dim: zero,
        inertia,
    })
}

/// `K = [[2I, 2D], [2F, 2I]]` in bicolored order.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub d: Matrix<Rational>,
    pub f: Matrix<Rational>,
    /// Vertex ids in bicolored order (`S1` then `S2`).
    pub order: Vec<VertexId>,
    pub m: usize,
    pub k: usize,
}

pub fn block_decomposition(diagram: &Diagram) -> Result<BlockDecomposition> {
    let part = diagram.bicolor()?;
    let k = diagram.cartan_matrix();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let d = Matrix::from_fn(part.m(), part.k(), |a, b| {
        Rational::from(k[(part.s1[a], part.s2[b])].clone()) * &half
    });
    let f = Matrix::from_fn(part.k(), part.m(), |a, b| {
        Rational::from(k[(part.s2[a], part.s1[b])].clone()) * &half
    });
    Ok(BlockDecomposition {
        d,
        f,
        order: part.order(),
        m: part.m(),
        k: part.k(),
    })
}
