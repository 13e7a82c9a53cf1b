//! Character tables by the Burnside class-algebra method.
//!
//! With class constants `c_rst = #{x ∈ C_r : x⁻¹z_t ∈ C_s}` the matrices
//! `(M_r)_{st} = c_rst` commute and `ω(C_t) = |C_t|χ(g_t)/χ(1)` is a common
//! right eigenvector. Conjugating by `diag(|C_t|^{1/2})` gives matrices `W_r`
//! with `W_{r⁻¹} = W_rᵀ`, so a random combination
//! `Σ x_r(W_r + W_rᵀ) + i·Σ y_r(W_r - W_rᵀ)` is Hermitian and its
//! eigenvectors are the characters.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::FiniteGroup;
use crate::linalg::symmetric_eigen;
use crate::matrix::Matrix;
use crate::{Error, Result};

pub const MAX_RETRIES: u64 = 10;

/// Irreducible characters on class representatives: trivial first, then by
/// degree and class values.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub rows: Vec<Vec<Complex64>>,
    pub degrees: Vec<usize>,
    /// Seed of the successful attempt.
    pub seed: u64,
}

pub fn character_table(g: &FiniteGroup, seed: u64) -> Result<CharacterTable> {
    let mut last = Error::EigenSeparation(0);
    for attempt in 0..MAX_RETRIES {
        match attempt_table(g, seed.wrapping_add(attempt)) {
            Ok(t) => return Ok(t),
            Err(e @ Error::EigenSeparation(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

fn attempt_table(g: &FiniteGroup, seed: u64) -> Result<CharacterTable> {
    let k = g.classes.len();
    let sizes: Vec<f64> = g.classes.iter().map(|c| c.len() as f64).collect();
    let reps: Vec<usize> = g.classes.iter().map(|c| c[0]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let ys: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mut s = Matrix::from_fn(k, k, |_, _| 0.0);
    let mut a = Matrix::from_fn(k, k, |_, _| 0.0);
    for r in 0..k {
        // c_rst for all s, t
        let mut w = vec![vec![0.0f64; k]; k];
        for t in 0..k {
            let z = reps[t];
            for &x in &g.classes[r] {
                let y = g.product[g.inverse[x]][z];
                w[g.class_of[y]][t] += 1.0;
            }
        }
        for i in 0..k {
            for j in 0..k {
                w[i][j] *= libm::sqrt(sizes[j] / sizes[i]);
            }
        }
        s = Matrix::from_fn(k, k, |i, j| s[(i, j)] + xs[r] * (w[i][j] + w[j][i]));
        a = Matrix::from_fn(k, k, |i, j| a[(i, j)] + ys[r] * (w[i][j] - w[j][i]));
    }
    // Real symmetric embedding of the Hermitian S + iA.
    let big = Matrix::from_fn(2 * k, 2 * k, |i, j| {
        let (bi, bj) = (i / k, j / k);
        let (ii, jj) = (i % k, j % k);
        match (bi, bj) {
            (0, 0) | (1, 1) => s[(ii, jj)],
            (0, 1) => -a[(ii, jj)],
            _ => a[(ii, jj)],
        }
    });
    let (vals, vecs) = symmetric_eigen(&big);
    let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut rows = Vec::with_capacity(k);
    for p in 0..k {
        let (i, j) = (2 * p, 2 * p + 1);
        if (vals[i] - vals[j]).abs() > 1e-9 * scale {
            return Err(Error::EigenSeparation(p));
        }
        if j + 1 < 2 * k && (vals[j + 1] - vals[j]).abs() < 1e-6 * scale {
            return Err(Error::EigenSeparation(p));
        }
        let e: Vec<Complex64> = (0..k)
            .map(|t| Complex64::new(vecs[(t, i)], vecs[(t + k, i)]))
            .collect();
        // e_t ∝ ω(C_t)/|C_t|^{1/2}; ω(identity class) = 1.
        if e[0].norm() < 1e-12 {
            return Err(Error::EigenSeparation(p));
        }
        let w: Vec<Complex64> = (0..k).map(|t| e[t] / e[0] * libm::sqrt(sizes[t])).collect();
        let norm: f64 = (0..k).map(|t| w[t].norm_sqr() / sizes[t]).sum();
        let deg = libm::sqrt(g.order() as f64 / norm);
        let d = libm::round(deg);
        if (deg - d).abs() > 1e-6 || d < 1.0 {
            return Err(Error::NonIntegral(format!("degree {deg}")));
        }
        rows.push((0..k).map(|t| w[t] * d / sizes[t]).collect::<Vec<Complex64>>());
    }
    let sort_key = |row: &Vec<Complex64>| -> (bool, i64, Vec<(i64, i64)>) {
        let trivial = row.iter().all(|z| (z - 1.0).norm() < 1e-6);
        let r = |v: f64| libm::round(v * 1e6) as i64;
        (
            !trivial,
            r(row[0].re),
            row.iter().map(|z| (r(z.re), r(z.im))).collect(),
        )
    };
    rows.sort_by_key(|r| sort_key(r));
    let degrees = rows.iter().map(|r| libm::round(r[0].re) as usize).collect();
    Ok(CharacterTable { rows, degrees, seed })
}

/// Largest deviation from row and column orthogonality, relative to `|G|`.
pub fn orthogonality_residual(g: &FiniteGroup, t: &CharacterTable) -> f64 {
    let n = g.order() as f64;
    let k = t.rows.len();
    let mut worst = 0.0f64;
    for i in 0..k {
        for j in 0..k {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g.inner(&t.rows[i], &t.rows[j]) - want).norm());
        }
    }
    for a in 0..k {
        for b in 0..k {
            let s: Complex64 = (0..k).map(|i| t.rows[i][a] * t.rows[i][b].conj()).sum();
            let want = if a == b { n / g.classes[a].len() as f64 } else { 0.0 };
            worst = worst.max((s - want).norm() / n);
        }
    }
    worst
}
