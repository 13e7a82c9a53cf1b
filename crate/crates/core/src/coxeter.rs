//! The bicolored Coxeter transformation `C = w1·w2` and its spectral data.
//!
//! In bicolored order (`S1` then `S2`) with `K = [[2I, K12], [K21, 2I]]`,
//! the reflection `s_i(x) = x - (Kx)_i e_i` gives
//!
//! ```text
//! w1 = [[-I, -K12], [0, I]],   w2 = [[I, 0], [-K21, -I]],
//! C  = [[-I + K12·K21, K12], [-K21, -I]],
//! ```
//!
//! so `C` is an integer matrix. With `D = K12/2`, `F = K21/2` the eigenvalues
//! `φ` of `DF` and `λ` of `C` are tied by `4φλ = (λ + 1)²`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::cartan::{cartan_matrix, CartanKind};
use crate::diagram::{BicoloredPartition, Diagram, VertexId};
use crate::linalg::symmetric_eigen;
use crate::matrix::Matrix;
use crate::poly::{complex_roots, cyclotomic, real_roots, IntPolynomial};
use crate::{Error, Rational, Result};

/// Maximal exponent tried when searching for the order of `C`.
pub const ORDER_CAP: u64 = 10_000;

#[derive(Clone, Debug)]
pub struct CoxeterAnalysis {
    pub partition: BicoloredPartition,
    /// Bicolored vertex order; all matrices below use it.
    pub order: Vec<VertexId>,
    pub w1: Matrix<BigInt>,
    pub w2: Matrix<BigInt>,
    pub c: Matrix<BigInt>,
    pub k12: Matrix<BigInt>,
    pub k21: Matrix<BigInt>,
    pub kind: CartanKind,
    pub ker_b_dim: usize,
    /// `U` restricted to the bicolored order.
    pub u: Vec<Rational>,
    /// `det(C - λI)`.
    pub charpoly: IntPolynomial,
}

/// An eigenvalue of `C`: exact when it is a root of unity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Eigenvalue {
    /// `exp(2πi · numerator/denominator)`, in lowest terms.
    RootOfUnity { numerator: u64, denominator: u64 },
    Numeric(Complex64),
}

impl Eigenvalue {
    pub fn to_complex(self) -> Complex64 {
        match self {
            Eigenvalue::RootOfUnity {
                numerator,
                denominator,
            } => {
                let t = 2.0 * core::f64::consts::PI * numerator as f64 / denominator as f64;
                Complex64::new(libm::cos(t), libm::sin(t))
            }
            Eigenvalue::Numeric(z) => z,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub value: Eigenvalue,
    pub multiplicity: usize,
}

/// An eigenvalue `φ = μ/4` of `DF` (or `FD`).
#[derive(Clone, Debug, PartialEq)]
pub struct PhiEntry {
    pub phi: f64,
    pub multiplicity: usize,
    /// Set when `μ = 4φ` is an integer.
    pub exact: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanStructure {
    /// `(size, count)` for every block size above 1.
    pub nontrivial: Vec<(usize, usize)>,
    /// Blocks of size at least 2 with eigenvalue 1.
    pub at_one: usize,
}

impl JordanStructure {
    pub fn diagonalizable(&self) -> bool {
        self.nontrivial.is_empty()
    }

    pub fn blocks_2x2(&self) -> usize {
        self.nontrivial
            .iter()
            .find(|(s, _)| *s == 2)
            .map_or(0, |&(_, c)| c)
    }
}

pub fn coxeter_transformation(d: &Diagram) -> Result<CoxeterAnalysis> {
    let partition = d.bicolor()?;
    let cartan = cartan_matrix(d)?;
    let order = partition.order();
    let (m, k) = (partition.m(), partition.k());
    let kk = &cartan.k;
    let k12 = Matrix::from_fn(m, k, |a, b| kk[(partition.s1[a], partition.s2[b])].clone());
    let k21 = Matrix::from_fn(k, m, |a, b| kk[(partition.s2[a], partition.s1[b])].clone());
    let neg = |x: &Matrix<BigInt>| x.map(|v| -v);
    let w1 = Matrix::block(
        &neg(&Matrix::identity(m)),
        &neg(&k12),
        &Matrix::zeros(k, m),
        &Matrix::identity(k),
    );
    let w2 = Matrix::block(
        &Matrix::identity(m),
        &Matrix::zeros(m, k),
        &neg(&k21),
        &neg(&Matrix::identity(k)),
    );
    let c = &w1 * &w2;
    let charpoly = c.charpoly();
    let u = order.iter().map(|&v| cartan.u[v].clone()).collect();
    Ok(CoxeterAnalysis {
        partition,
        order,
        w1,
        w2,
        c,
        k12,
        k21,
        kind: cartan.kind,
        ker_b_dim: cartan.ker_b_dim,
        u,
        charpoly,
    })
}

/// The two roots of `λ² - (4φ - 2)λ + 1`.
pub fn phi_to_lambda(phi: f64) -> Result<(Complex64, Complex64)> {
    if !(phi >= 0.0) {
        return Err(Error::Negative(format!("{phi}")));
    }
    let a = 2.0 * phi - 1.0;
    let disc = phi * (phi - 1.0);
    if disc >= 0.0 {
        let s = 2.0 * libm::sqrt(disc);
        Ok((Complex64::new(a + s, 0.0), Complex64::new(a - s, 0.0)))
    } else {
        let s = 2.0 * libm::sqrt(-disc);
        Ok((Complex64::new(a, s), Complex64::new(a, -s)))
    }
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|&j| j.gcd(&n) == 1).count() as u64
}

/// Split `p` into cyclotomic factors `(k, multiplicity)` and a remainder
/// with no roots of unity.
pub fn cyclotomic_part(p: &IntPolynomial) -> (Vec<(u64, usize)>, IntPolynomial) {
    let mut rest = p.clone();
    let deg = p.degree().unwrap_or(0) as u64;
    let mut out = Vec::new();
    if deg == 0 {
        return (out, rest);
    }
    // totient(k) >= sqrt(k/2), so k <= 2·deg² covers every candidate.
    for k in 1..=2 * deg * deg {
        if totient(k) > deg {
            continue;
        }
        let phi = cyclotomic(k as usize);
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&phi) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((k, mult));
        }
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
    }
    (out, rest)
}

/// Eigenvalues of an integer matrix's characteristic polynomial: roots of
/// unity exactly, the rest numerically.
pub fn spectrum_of(p: &IntPolynomial) -> Result<Vec<SpectrumEntry>> {
    let (cyc, rest) = cyclotomic_part(p);
    let mut out = Vec::new();
    for (k, mult) in cyc {
        for j in 0..k {
            if j.gcd(&k) == 1 || (k == 1 && j == 0) {
                out.push(SpectrumEntry {
                    value: Eigenvalue::RootOfUnity {
                        numerator: j,
                        denominator: k,
                    },
                    multiplicity: mult,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        let key = |e: &SpectrumEntry| match e.value {
            Eigenvalue::RootOfUnity {
                numerator,
                denominator,
            } => numerator as f64 / denominator as f64,
            Eigenvalue::Numeric(_) => 0.0,
        };
        key(a).partial_cmp(&key(b)).unwrap()
    });
    if rest.degree().unwrap_or(0) > 0 {
        let mut numeric: Vec<SpectrumEntry> = complex_roots(&rest)?
            .into_iter()
            .map(|(z, m)| SpectrumEntry {
                value: Eigenvalue::Numeric(z),
                multiplicity: m,
            })
            .collect();
        numeric.sort_by(|a, b| {
            let (za, zb) = (a.value.to_complex(), b.value.to_complex());
            zb.norm()
                .partial_cmp(&za.norm())
                .unwrap()
                .then(za.arg().partial_cmp(&zb.arg()).unwrap())
        });
        out.extend(numeric);
    }
    Ok(out)
}

/// Eigenvalues `φ = μ/4` from `det(M - μI)` for the integer matrix `M = 4DF`.
fn phi_spectrum_of(m4: &Matrix<BigInt>) -> Result<Vec<PhiEntry>> {
    let p = m4.charpoly();
    let mut out: Vec<PhiEntry> = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    for (factor, mult) in p.squarefree_decomposition() {
        for mu in real_roots(&factor)? {
            let r = libm::round(mu);
            let exact = if (mu - r).abs() < 1e-6
                && factor.eval_int(&BigInt::from(r as i64)).is_zero()
            {
                Some(Rational::new(BigInt::from(r as i64), BigInt::from(4)))
            } else {
                None
            };
            let phi = exact
                .as_ref()
                .map_or(mu / 4.0, |q| q.to_f64().unwrap_or(f64::NAN));
            out.push(PhiEntry {
                phi,
                multiplicity: mult,
                exact,
            });
        }
    }
    out.sort_by(|a, b| a.phi.partial_cmp(&b.phi).unwrap());
    Ok(out)
}

impl CoxeterAnalysis {
    pub fn m(&self) -> usize {
        self.partition.m()
    }

    pub fn k(&self) -> usize {
        self.partition.k()
    }

    pub fn df(&self) -> Matrix<Rational> {
        (&self.k12 * &self.k21)
            .to_rational()
            .scale(&Rational::new(BigInt::one(), BigInt::from(4)))
    }

    pub fn fd(&self) -> Matrix<Rational> {
        (&self.k21 * &self.k12)
            .to_rational()
            .scale(&Rational::new(BigInt::one(), BigInt::from(4)))
    }

    pub fn lambda_spectrum(&self) -> Result<Vec<SpectrumEntry>> {
        spectrum_of(&self.charpoly)
    }

    /// Spectrum of `DF` (`m × m`).
    pub fn phi_spectrum(&self) -> Result<Vec<PhiEntry>> {
        phi_spectrum_of(&(&self.k12 * &self.k21))
    }

    /// Spectrum of `FD` (`k × k`).
    pub fn fd_phi_spectrum(&self) -> Result<Vec<PhiEntry>> {
        phi_spectrum_of(&(&self.k21 * &self.k12))
    }

    pub fn jordan(&self) -> JordanStructure {
        jordan_structure(&self.c)
    }

    /// Order of `C`, or `None` if `C^N ≠ I` for all `N ≤ ORDER_CAP`.
    pub fn coxeter_number(&self) -> Option<u64> {
        matrix_order(&self.c)
    }

    /// Least `N ≤ ORDER_CAP` with `(C^N - I)² = 0`.
    pub fn unipotent_order(&self) -> Option<u64> {
        unipotent_order_of(&self.c)
    }

    /// Largest modulus among the eigenvalues of `C`.
    pub fn spectral_radius(&self) -> Result<f64> {
        let spec = self.lambda_spectrum()?;
        Ok(spec
            .iter()
            .map(|e| e.value.to_complex().norm())
            .fold(0.0, f64::max))
    }

    /// Largest distance between the `C`-spectrum and the multiset built from
    /// the `DF`-spectrum by `phi_to_lambda`, padded with `m + k - 2r` copies
    /// of `-1`.
    pub fn phi_lambda_residual(&self) -> Result<f64> {
        let mut predicted = Vec::new();
        let mut r = 0;
        for e in self.phi_spectrum()? {
            let zero = e.exact.as_ref().is_some_and(Zero::is_zero);
            if zero {
                continue;
            }
            r += e.multiplicity;
            let phi = e.exact.as_ref().map_or(e.phi, |q| q.to_f64().unwrap());
            let (a, b) = phi_to_lambda(phi)?;
            for _ in 0..e.multiplicity {
                predicted.push(a);
                predicted.push(b);
            }
        }
        for _ in 0..self.m() + self.k() - 2 * r {
            predicted.push(Complex64::new(-1.0, 0.0));
        }
        let mut actual: Vec<Complex64> = Vec::new();
        for e in self.lambda_spectrum()? {
            for _ in 0..e.multiplicity {
                actual.push(e.value.to_complex());
            }
        }
        if actual.len() != predicted.len() {
            return Err(Error::Numeric(format!(
                "{} predicted eigenvalues for {} actual",
                predicted.len(),
                actual.len()
            )));
        }
        let mut used = vec![false; actual.len()];
        let mut worst = 0.0f64;
        for p in predicted {
            let (best, dist) = actual
                .iter()
                .enumerate()
                .filter(|(i, _)| !used[*i])
                .map(|(i, a)| (i, (a - p).norm()))
                .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
                .unwrap();
            used[best] = true;
            worst = worst.max(dist);
        }
        Ok(worst)
    }
}

/// The Coxeter element `s_{o_0} s_{o_1} ⋯ s_{o_{n-1}}` for an arbitrary
/// ordering of the vertices, in the original vertex basis. Works for
/// diagrams that are not bipartite, where no bicolored `C` exists.
pub fn coxeter_element(d: &Diagram, order: &[VertexId]) -> Result<Matrix<BigInt>> {
    let n = d.len();
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n {
            return Err(Error::NoSuchVertex(v));
        }
        if core::mem::replace(&mut seen[v], true) {
            return Err(Error::MalformedParameters(format!("vertex {v} repeated in ordering")));
        }
    }
    if order.len() != n {
        return Err(Error::MalformedParameters(format!(
            "ordering has {} vertices, diagram has {n}",
            order.len()
        )));
    }
    let k = cartan_matrix(d)?.k;
    let mut c = Matrix::<BigInt>::identity(n);
    for &i in order {
        // s_i = I - e_i·(row i of K)
        let s = Matrix::from_fn(n, n, |r, col| {
            let id = BigInt::from(i64::from(r == col));
            if r == i {
                id - &k[(i, col)]
            } else {
                id
            }
        });
        c = &c * &s;
    }
    Ok(c)
}

/// Jordan blocks of an integer matrix, counted exactly: with `q` the
/// square-free part of the characteristic polynomial, the number of blocks
/// of size `≥ s` is `rank q(C)^{s-1} - rank q(C)^s`.
pub fn jordan_structure(c: &Matrix<BigInt>) -> JordanStructure {
    let n = c.rows();
    let q = c.charpoly().squarefree_part();
    let qc = c.eval_poly(&q).to_rational();
    let mut ranks = vec![n];
    let mut power = qc.clone();
    loop {
        let r = power.rank();
        let last = *ranks.last().unwrap();
        ranks.push(r);
        if r == last || r == 0 {
            break;
        }
        power = &power * &qc;
    }
    let at_least = |s: usize| -> usize {
        if s < ranks.len() {
            ranks[s - 1] - ranks[s]
        } else {
            0
        }
    };
    let mut nontrivial = Vec::new();
    for s in 2..ranks.len() {
        let c = at_least(s) - at_least(s + 1);
        if c > 0 {
            nontrivial.push((s, c));
        }
    }
    let e = c.to_rational().sub(&Matrix::identity(n));
    let at_one = e.rank() - (&e * &e).rank();
    JordanStructure { nontrivial, at_one }
}

/// Least `N ≤ ORDER_CAP` with `C^N = I`.
pub fn matrix_order(c: &Matrix<BigInt>) -> Option<u64> {
    let c = to_i128(c)?;
    let mut p = c.clone();
    for e in 1..=ORDER_CAP {
        if is_identity_i128(&p) {
            return Some(e);
        }
        p = mul_i128(&p, &c)?;
    }
    None
}

/// Least `N ≤ ORDER_CAP` with `(C^N - I)² = 0`: every eigenvalue is an
/// `N`-th root of unity and every Jordan block has size at most 2.
pub fn unipotent_order_of(c: &Matrix<BigInt>) -> Option<u64> {
    let c = to_i128(c)?;
    let mut p = c.clone();
    for e in 1..=ORDER_CAP {
        let mut q = p.clone();
        for (i, row) in q.iter_mut().enumerate() {
            row[i] -= 1;
        }
        if is_zero_i128(&mul_i128(&q, &q)?) {
            return Some(e);
        }
        p = mul_i128(&p, &c)?;
    }
    None
}

fn to_i128(m: &Matrix<BigInt>) -> Option<Vec<Vec<i128>>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_i128()).collect())
        .collect()
}

fn mul_i128(a: &[Vec<i128>], b: &[Vec<i128>]) -> Option<Vec<Vec<i128>>> {
    let n = a.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].checked_add(x.checked_mul(b[k][j])?)?;
            }
        }
    }
    Some(out)
}

fn is_identity_i128(a: &[Vec<i128>]) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i128::from(i == j)))
}

fn is_zero_i128(a: &[Vec<i128>]) -> bool {
    a.iter().all(|row| row.iter().all(|&x| x == 0))
}

/// Eigenvalues of `DF` and of `FD`.
pub fn df_fd_spectra(d: &Diagram) -> Result<(Vec<PhiEntry>, Vec<PhiEntry>)> {
    let a = coxeter_transformation(d)?;
    Ok((a.phi_spectrum()?, a.fd_phi_spectrum()?))
}

/// Perron root of `DF` from power iteration.
#[derive(Clone, Debug)]
pub struct PerronRoot {
    pub phi: f64,
    /// Positive eigenvector, unit Euclidean norm, indexed by `S1`.
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// Collatz–Wielandt bounds `min_i (Az)_i/z_i ≤ φ ≤ max_i (Az)_i/z_i`.
    pub lower: f64,
    pub upper: f64,
}

pub fn dominant_phi(d: &Diagram) -> Result<PerronRoot> {
    let a = coxeter_transformation(d)?;
    let df = a.df().to_f64();
    let m = df.rows();
    if m == 0 {
        return Ok(PerronRoot {
            phi: 0.0,
            vector: Vec::new(),
            iterations: 0,
            converged: true,
            lower: 0.0,
            upper: 0.0,
        });
    }
    let norm = |v: &[f64]| libm::sqrt(v.iter().map(|x| x * x).sum());
    let mut x = vec![1.0 / libm::sqrt(m as f64); m];
    let mut prev = f64::NAN;
    let mut phi = 0.0;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < 100_000 {
        iterations += 1;
        let y = df.mul_vec(&x);
        phi = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>();
        let ny = norm(&y);
        if ny == 0.0 {
            converged = true;
            phi = 0.0;
            break;
        }
        x = y.iter().map(|v| v / ny).collect();
        if (phi - prev).abs() < 1e-13 {
            converged = true;
            break;
        }
        prev = phi;
    }
    let ax = df.mul_vec(&x);
    let ratios: Vec<f64> = ax
        .iter()
        .zip(&x)
        .map(|(a, b)| if *b > 0.0 { a / b } else { f64::NAN })
        .collect();
    let lower = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let upper = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(PerronRoot {
        phi,
        vector: x,
        iterations,
        converged,
        lower,
        upper,
    })
}

/// Vectors of the Jordan basis of `C`, in bicolored coordinates.
#[derive(Clone, Debug)]
pub enum JordanVector {
    /// `Cz = λz` with `4φλ = (λ+1)²`, `φ ∉ {0, 1}`.
    Eigen {
        phi: f64,
        lambda: Complex64,
        z: Vec<Complex64>,
    },
    /// `Cz = z`, `Cz̃ = z + z̃` (from `φ = 1`).
    Chain { z: Vec<f64>, z_tilde: Vec<f64> },
    /// `Cz = -z` (from `ker F` or `ker D`).
    MinusOne { z: Vec<f64> },
}

#[derive(Clone, Debug)]
pub struct JordanBasis {
    pub vectors: Vec<JordanVector>,
    /// Largest `‖Cz - expected‖ / ‖z‖` over all vectors.
    pub max_residual: f64,
}

impl JordanBasis {
    pub fn chains(&self) -> usize {
        self.vectors
            .iter()
            .filter(|v| matches!(v, JordanVector::Chain { .. }))
            .count()
    }

    /// Total number of basis vectors (a chain counts twice).
    pub fn dimension(&self) -> usize {
        self.vectors
            .iter()
            .map(|v| if matches!(v, JordanVector::Chain { .. }) { 2 } else { 1 })
            .sum()
    }
}

pub fn jordan_basis(d: &Diagram) -> Result<JordanBasis> {
    let a = coxeter_transformation(d)?;
    let (m, k) = (a.m(), a.k());
    let c = a.c.map(|x| x.to_f64().unwrap());
    let dmat = a.k12.to_rational().scale(&Rational::new(BigInt::one(), BigInt::from(2)));
    let fmat = a.k21.to_rational().scale(&Rational::new(BigInt::one(), BigInt::from(2)));
    let f64m = fmat.to_f64();
    let u1: Vec<f64> = a.u[..m].iter().map(|x| x.to_f64().unwrap()).collect();
    let sq: Vec<f64> = u1.iter().map(|x| libm::sqrt(*x)).collect();
    // W = U1^{-1/2} DF U1^{1/2} is symmetric.
    let df = a.df().to_f64();
    let w = Matrix::from_fn(m, m, |i, j| df[(i, j)] * sq[j] / sq[i]);
    let w = Matrix::from_fn(m, m, |i, j| 0.5 * (w[(i, j)] + w[(j, i)]));
    let (vals, vecs) = symmetric_eigen(&w);
    let phis = a.phi_spectrum()?;
    let snap = |v: f64| -> f64 {
        phis.iter()
            .map(|e| e.phi)
            .min_by(|x, y| (x - v).abs().partial_cmp(&(y - v).abs()).unwrap())
            .unwrap_or(v)
    };
    let mut vectors = Vec::new();
    let mut worst = 0.0f64;
    let cz = |z: &[Complex64]| -> Vec<Complex64> {
        (0..m + k)
            .map(|i| (0..m + k).map(|j| z[j] * c[(i, j)]).sum())
            .collect()
    };
    let rel = |lhs: &[Complex64], rhs: &[Complex64], z: &[Complex64]| -> f64 {
        let num: f64 = lhs.iter().zip(rhs).map(|(a, b)| (a - b).norm_sqr()).sum();
        let den: f64 = z.iter().map(|a| a.norm_sqr()).sum();
        libm::sqrt(num / den.max(1e-300))
    };
    let real = |v: &[f64]| -> Vec<Complex64> { v.iter().map(|&x| Complex64::new(x, 0.0)).collect() };
    for col in 0..m {
        let phi = snap(vals[col]);
        if phi.abs() < 1e-9 {
            continue;
        }
        let x: Vec<f64> = (0..m).map(|i| vecs[(i, col)] * sq[i]).collect();
        let fx = f64m.mul_vec(&x);
        if (phi - 1.0).abs() < 1e-9 {
            let z: Vec<f64> = x.iter().copied().chain(fx.iter().map(|v| -v)).collect();
            let zt: Vec<f64> = x
                .iter()
                .copied()
                .chain(fx.iter().copied())
                .map(|v| v / 4.0)
                .collect();
            let (zc, ztc) = (real(&z), real(&zt));
            worst = worst.max(rel(&cz(&zc), &zc, &zc));
            let sum: Vec<Complex64> = zc.iter().zip(&ztc).map(|(a, b)| a + b).collect();
            worst = worst.max(rel(&cz(&ztc), &sum, &ztc));
            vectors.push(JordanVector::Chain { z, z_tilde: zt });
            continue;
        }
        let (l1, l2) = phi_to_lambda(phi)?;
        for lambda in [l1, l2] {
            let scale = Complex64::new(-2.0, 0.0) / (lambda + 1.0);
            let z: Vec<Complex64> = x
                .iter()
                .map(|&v| Complex64::new(v, 0.0))
                .chain(fx.iter().map(|&v| scale * v))
                .collect();
            let expect: Vec<Complex64> = z.iter().map(|v| v * lambda).collect();
            worst = worst.max(rel(&cz(&z), &expect, &z));
            vectors.push(JordanVector::Eigen { phi, lambda, z });
        }
    }
    for x in fmat.nullspace() {
        let z: Vec<f64> = x
            .iter()
            .map(|v| v.to_f64().unwrap())
            .chain(core::iter::repeat_n(0.0, k))
            .collect();
        let zc = real(&z);
        let minus: Vec<Complex64> = zc.iter().map(|v| -v).collect();
        worst = worst.max(rel(&cz(&zc), &minus, &zc));
        vectors.push(JordanVector::MinusOne { z });
    }
    for y in dmat.nullspace() {
        let z: Vec<f64> = core::iter::repeat_n(0.0, m)
            .chain(y.iter().map(|v| v.to_f64().unwrap()))
            .collect();
        let zc = real(&z);
        let minus: Vec<Complex64> = zc.iter().map(|v| -v).collect();
        worst = worst.max(rel(&cz(&zc), &minus, &zc));
        vectors.push(JordanVector::MinusOne { z });
    }
    Ok(JordanBasis {
        vectors,
        max_residual: worst,
    })
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    /// Coordinates in the simple-root basis.
    pub roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.highest_root.len()
    }
}

pub fn enumerate_roots(d: &Diagram) -> Result<RootSystem> {
    let cartan = cartan_matrix(d)?;
    if cartan.kind != CartanKind::Finite {
        return Err(Error::NotFiniteType);
    }
    let n = d.len();
    let k: Vec<Vec<i64>> = (0..n)
        .map(|i| cartan.k.row(i).iter().map(|x| x.to_i64().unwrap()).collect())
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    for r in &frontier {
        seen.insert(r.clone());
    }
    while let Some(x) = frontier.pop() {
        for i in 0..n {
            let kx: i64 = (0..n).map(|j| k[i][j] * x[j]).sum();
            if kx == 0 {
                continue;
            }
            let mut y = x.clone();
            y[i] -= kx;
            if !seen.contains(&y) {
                if seen.len() > 1_000_000 {
                    return Err(Error::NotFiniteType);
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    let roots: Vec<Vec<i64>> = seen.into_iter().collect();
    let positive_roots: Vec<Vec<i64>> = roots
        .iter()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .cloned()
        .collect();
    let highest_root = positive_roots
        .iter()
        .max_by_key(|r| r.iter().sum::<i64>())
        .cloned()
        .unwrap_or_default();
    Ok(RootSystem {
        roots,
        positive_roots,
        highest_root,
    })
}

/// Coxeter number `h`, exponents (ascending) and `|W| = Π (m_i + 1)`.
pub fn exponents_and_weyl_order(d: &Diagram) -> Result<(u64, Vec<u64>, u128)> {
    let a = coxeter_transformation(d)?;
    if a.kind != CartanKind::Finite {
        return Err(Error::NotFiniteType);
    }
    let h = a.coxeter_number().ok_or(Error::NotFiniteType)?;
    let mut exps = Vec::new();
    for e in a.lambda_spectrum()? {
        let (j, k) = match e.value {
            Eigenvalue::RootOfUnity {
                numerator,
                denominator,
            } => (numerator, denominator),
            Eigenvalue::Numeric(z) => {
                return Err(Error::Numeric(format!("eigenvalue {z} is not a root of unity")))
            }
        };
        if (h * j) % k != 0 {
            return Err(Error::Numeric(format!("h·{j}/{k} is not an integer")));
        }
        // Cross-check the exact argument against the float eigenvalue.
        let z = e.value.to_complex();
        let mut t = z.arg() / (2.0 * core::f64::consts::PI);
        if t < -1e-12 {
            t += 1.0;
        }
        let m_float = h as f64 * t;
        let m = h * j / k;
        let m = if m == 0 { h } else { m };
        let m_float = if m_float < 0.5 { m_float + h as f64 } else { m_float };
        if (m_float - m as f64).abs() > 1e-6 {
            return Err(Error::Numeric(format!("exponent {m} vs {m_float}")));
        }
        for _ in 0..e.multiplicity {
            exps.push(m);
        }
    }
    exps.sort_unstable();
    let w = exps.iter().map(|&m| u128::from(m + 1)).product();
    Ok((h, exps, w))
}
