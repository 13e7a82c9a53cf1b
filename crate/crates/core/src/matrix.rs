//! Dense matrices over exact rings: products, powers, fraction-free
//! determinants, and rational rank, nullspace and inertia.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPolynomial;
use crate::Rational;

/// Commutative ring with unit, as far as dense linear algebra needs it.
pub trait Ring: Clone + PartialEq + Zero + One + Sub<Output = Self> + Neg<Output = Self> {}
impl<T> Ring for T where T: Clone + PartialEq + Zero + One + Sub<Output = T> + Neg<Output = T> {}

/// Ring in which exact division by a known divisor is available.
pub trait ExactDiv: Ring {
    fn exact_div(&self, d: &Self) -> Self;
}

impl ExactDiv for BigInt {
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

impl ExactDiv for IntPolynomial {
    fn exact_div(&self, d: &Self) -> Self {
        self.div_exact(d).expect("Bareiss division is exact")
    }
}

impl ExactDiv for Rational {
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// `out[i][j] = self[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.submatrix(perm, perm)
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + o[(i, j)].clone()
        })
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - o[(i, j)].clone()
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Stack `[[a, b], [c, d]]`.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let (r, s) = (a.rows, a.cols);
        Matrix::from_fn(r + c.rows, s + b.cols, |i, j| match (i < r, j < s) {
            (true, true) => a[(i, j)].clone(),
            (true, false) => b[(i, j - s)].clone(),
            (false, true) => c[(i - r, j)].clone(),
            (false, false) => d[(i - r, j - s)].clone(),
        })
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Fraction-free Bareiss determinant with row pivoting.
    pub fn det(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.to_rows();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = v.exact_div(&prev);
                }
                a[i][k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }
}

impl Matrix<BigInt> {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> Matrix<Rational> {
        self.map(|x| Rational::from(x.clone()))
    }

    /// `det(self - λI)` as a polynomial in `λ`.
    pub fn charpoly(&self) -> IntPolynomial {
        assert!(self.is_square());
        let m = Matrix::from_fn(self.rows, self.cols, |i, j| {
            let c = IntPolynomial::constant(self[(i, j)].clone());
            if i == j {
                c - IntPolynomial::x()
            } else {
                c
            }
        });
        m.det()
    }

    /// Evaluate a polynomial at this matrix (Horner).
    pub fn eval_poly(&self, p: &IntPolynomial) -> Matrix<BigInt> {
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn rank(&self) -> usize {
        self.to_rational().rank()
    }
}

/// Reduced row echelon form and its pivot columns.
pub fn rref(m: &Matrix<Rational>) -> (Matrix<Rational>, Vec<usize>) {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Matrix::from_fn(rows, cols, |i, j| a[i][j].clone()), pivots)
}

impl Matrix<Rational> {
    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Basis of `{x : self·x = 0}`, one vector per free column, with a 1 in
    /// that column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = rref(self);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix<Rational>> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Matrix::block(
            self,
            &Matrix::identity(n),
            &Matrix::zeros(0, n),
            &Matrix::zeros(0, n),
        );
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// `(positive, negative, zero)` eigenvalue counts of a symmetric matrix,
    /// by exact congruence (Sylvester's law of inertia).
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_symmetric(), "inertia needs a symmetric matrix");
        let mut a = self.to_rows();
        let n = self.rows;
        let (mut pos, mut neg) = (0, 0);
        for k in 0..n {
            if a[k][k].is_zero() {
                if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                    a.swap(i, k);
                    for row in a.iter_mut() {
                        row.swap(i, k);
                    }
                } else if let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                {
                    // Add row/col j to row/col i: new a_ii = 2 a_ij != 0.
                    for c in 0..n {
                        let t = a[j][c].clone();
                        a[i][c] += t;
                    }
                    for row in a.iter_mut() {
                        let t = row[j].clone();
                        row[i] += t;
                    }
                    if i != k {
                        a.swap(i, k);
                        for row in a.iter_mut() {
                            row.swap(i, k);
                        }
                    }
                } else {
                    break;
                }
            }
            let p = a[k][k].clone();
            if p.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &p;
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
            for j in k + 1..n {
                a[k][j] = Rational::zero();
            }
            for i in k + 1..n {
                a[i][k] = Rational::zero();
            }
        }
        (pos, neg, n - pos - neg)
    }

    /// Entries as integers, if all are.
    pub fn to_integer(&self) -> Option<Matrix<BigInt>> {
        if self.data.iter().all(|x| x.is_integer()) {
            Some(self.map(|x| x.to_integer()))
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        use num_traits::ToPrimitive;
        self.map(|x| x.to_f64().unwrap_or(f64::NAN))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a.clone() * rhs[(k, j)].clone();
                    let cur = core::mem::replace(&mut out[(i, j)], T::zero());
                    out[(i, j)] = cur + t;
                }
            }
        }
        out
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bareiss_matches_expansion() {
        let m = Matrix::from_i64(&[&[0, 2, 1], &[3, -1, 4], &[5, 9, 2]]);
        // cofactor expansion along the first row, whose leading entry is 0
        let want = -2 * (6 - 20) + (27 + 5);
        assert_eq!(m.det(), BigInt::from(want));
        assert_eq!(Matrix::<BigInt>::zeros(0, 0).det(), BigInt::one());
    }

    #[test]
    fn charpoly_of_a2_coxeter() {
        let c = Matrix::from_i64(&[&[-1, 1], &[-1, 0]]);
        assert_eq!(c.charpoly(), IntPolynomial::from_i64(&[1, 1, 1]));
    }

    #[test]
    fn nullspace_and_rank() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]).to_rational();
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(&[&[2, -1], &[-1, 2]]).to_rational();
        let inv = m.inverse().unwrap();
        assert_eq!(inv[(0, 0)], q(2, 3));
        assert!((&m * &inv).is_identity());
        assert!(Matrix::from_i64(&[&[1, 1], &[1, 1]]).to_rational().inverse().is_none());
    }

    #[test]
    fn inertia_cases() {
        let pd = Matrix::from_i64(&[&[2, -1], &[-1, 2]]).to_rational();
        assert_eq!(pd.inertia(), (2, 0, 0));
        let affine = Matrix::from_i64(&[&[2, -2], &[-2, 2]]).to_rational();
        assert_eq!(affine.inertia(), (1, 0, 1));
        let hyperbolic = Matrix::from_i64(&[&[0, 1], &[1, 0]]).to_rational();
        assert_eq!(hyperbolic.inertia(), (1, 1, 0));
        let zero_diag = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]).to_rational();
        assert_eq!(zero_diag.inertia(), (1, 1, 1));
    }

    #[test]
    fn power_by_squaring() {
        let c = Matrix::from_i64(&[&[-1, 1], &[-1, 0]]);
        assert!(c.pow(3).is_identity());
        assert!(!c.pow(2).is_identity());
    }
}
