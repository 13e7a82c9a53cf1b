//! Kostant's generating function for the multiplicities of irreducibles in
//! the symmetric powers `πₙ` of the defining representation.
//!
//! With `vₙ` the multiplicity vector of `πₙ` and `B` the McKay (or Slodowy)
//! matrix, `πₙ ⊗ ρ = π_{n+1} ⊕ π_{n-1}` gives `Bvₙ = v_{n-1} + v_{n+1}`, so
//! `x = Σ vₙtⁿ` solves `[(1 + t²)I - tB]x = v₀`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::cartan::CartanKind;
use crate::charpoly::charpoly_direct;
use crate::coxeter::{coxeter_transformation, exponents_and_weyl_order};
use crate::diagram::{catalog_lookup, Diagram};
use crate::matrix::Matrix;
use crate::mckay::{GroupPair, SU2Group, SlodowyData};
use crate::poly::{IntPolynomial, RationalFunction};
use crate::{Error, Result};

/// Which matrix drives the recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// `B = A(G)`, vertices the irreducibles of `G`.
    McKay,
    /// `B = Ã`, vertices the restricted characters `ρ_i↓`.
    Restricted,
    /// `B = Ã^∨`, vertices the induced characters `τ_i↑`.
    Induced,
}

impl Kind {
    pub fn parse(s: &str) -> Result<Kind> {
        match s {
            "mckay" => Ok(Kind::McKay),
            "restricted" => Ok(Kind::Restricted),
            "induced" => Ok(Kind::Induced),
            _ => Err(Error::Other(format!("unknown kind {s}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::McKay => "mckay",
            Kind::Restricted => "restricted",
            Kind::Induced => "induced",
        }
    }
}

/// `B` together with the multiplicity vectors `v_0, …, v_N` computed from
/// characters.
#[derive(Clone, Debug)]
pub struct KostantSystem {
    pub kind: Kind,
    pub b: Matrix<BigInt>,
    /// `multiplicities[n][i] = m_i(n)`.
    pub multiplicities: Vec<Vec<i64>>,
}

impl KostantSystem {
    pub fn v0(&self) -> &[i64] {
        &self.multiplicities[0]
    }

    /// `Bvₙ = v_{n-1} + v_{n+1}` for `n < N`, with `v_{-1} = 0`.
    pub fn recurrence_holds(&self) -> bool {
        let n = self.b.rows();
        let b: Vec<Vec<i64>> = (0..n)
            .map(|i| self.b.row(i).iter().map(|x| x.to_i64().unwrap()).collect())
            .collect();
        let m = &self.multiplicities;
        (0..m.len() - 1).all(|k| {
            (0..n).all(|i| {
                let lhs: i64 = (0..n).map(|j| b[i][j] * m[k][j]).sum();
                let prev = if k == 0 { 0 } else { m[k - 1][i] };
                lhs == prev + m[k + 1][i]
            })
        })
    }
}

/// `m_i(n) = ⟨πₙ|G, χ_i⟩` for `n ≤ order`.
pub fn sym_power_multiplicities(g: &SU2Group, order: usize) -> Result<Vec<Vec<i64>>> {
    g.group
        .sym_power_characters(order)
        .iter()
        .map(|chi| g.decompose(chi))
        .collect()
}

/// Restricted (`⟨πₙ|H, ρ_i↓⟩_H`) or induced (`⟨πₙ, τ_i↑⟩_G`) multiplicities.
pub fn pair_multiplicities(
    pair: &GroupPair,
    s: &SlodowyData,
    kind: Kind,
    order: usize,
) -> Result<Vec<Vec<i64>>> {
    let (group, basis) = match kind {
        Kind::Restricted => (&pair.h, &s.restricted),
        Kind::Induced => (&pair.g, &s.induced),
        Kind::McKay => return sym_power_multiplicities(&pair.g, order),
    };
    sym_power_multiplicities(group, order)?
        .into_iter()
        .map(|m| {
            Ok(basis
                .iter()
                .map(|v| v.iter().zip(&m).map(|(a, b)| a * b).sum())
                .collect())
        })
        .collect()
}

pub fn mckay_system(g: &SU2Group, a: &Matrix<BigInt>, order: usize) -> Result<KostantSystem> {
    Ok(KostantSystem {
        kind: Kind::McKay,
        b: a.clone(),
        multiplicities: sym_power_multiplicities(g, order)?,
    })
}

pub fn pair_system(pair: &GroupPair, s: &SlodowyData, kind: Kind, order: usize) -> Result<KostantSystem> {
    let b = match kind {
        Kind::Restricted => s.a_tilde.clone(),
        Kind::Induced => s.a_vee.clone(),
        Kind::McKay => {
            return Err(Error::Other("a pair carries restricted or induced data".into()))
        }
    };
    Ok(KostantSystem {
        kind,
        b,
        multiplicities: pair_multiplicities(pair, s, kind, order)?,
    })
}

#[derive(Clone, Debug)]
pub struct GeneratingFunction {
    pub kind: Kind,
    pub components: Vec<RationalFunction>,
    /// `det M(t)`, `M(t) = (1 + t²)I - tB`.
    pub det: IntPolynomial,
}

/// Solves `[(1 + t²)I - tB]x = v₀` by Cramer's rule over `ℤ[t]`.
pub fn generating_function(b: &Matrix<BigInt>, v0: &[i64], kind: Kind) -> Result<GeneratingFunction> {
    let n = b.rows();
    let m = Matrix::from_fn(n, n, |i, j| {
        let tb = IntPolynomial::monomial(1, 1).scale(&(-b[(i, j)].clone()));
        if i == j {
            tb + IntPolynomial::from_i64(&[1, 0, 1])
        } else {
            tb
        }
    });
    let det = m.det();
    if det.is_zero() {
        return Err(Error::Singular("(1 + t²)I - tB".into()));
    }
    let components = (0..n)
        .map(|c| {
            let mc = Matrix::from_fn(n, n, |i, j| {
                if j == c {
                    IntPolynomial::constant(BigInt::from(v0[i]))
                } else {
                    m[(i, j)].clone()
                }
            });
            RationalFunction::new(mc.det(), det.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratingFunction { kind, components, det })
}

impl GeneratingFunction {
    /// Whether every component's Taylor series up to `tᴺ` equals the
    /// multiplicities computed from characters.
    pub fn series_agrees(&self, multiplicities: &[Vec<i64>]) -> Result<bool> {
        let order = multiplicities.len();
        for (i, f) in self.components.iter().enumerate() {
            let s = f.series(order)?;
            for (n, m) in multiplicities.iter().enumerate() {
                if s[n] != BigInt::from(m[i]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn square_arg(p: &IntPolynomial) -> IntPolynomial {
    p.compose_square().with_positive_leading()
}

/// `𝒳(t²)/𝒳̃(t²)` for an extended diagram and its Dynkin diagram (the
/// extended diagram minus its marked vertex), each with positive leading
/// coefficient.
pub fn ebeling_ratio(extended: &Diagram) -> Result<RationalFunction> {
    let v = extended
        .marked()
        .ok_or_else(|| Error::NoExtension("diagram has no extension vertex".into()))?;
    let parts = extended.remove_vertex(v)?;
    if parts.len() != 1 {
        return Err(Error::NoExtension("removing the extension disconnects".into()));
    }
    let dynkin = charpoly_direct(&parts[0])?;
    let affine = charpoly_direct(extended)?;
    RationalFunction::new(square_arg(&dynkin), square_arg(&affine))
}

/// `f(t) = f(-t)`. `𝒳(t²)/𝒳̃(t²)` is always even, so an odd `[P]₀`
/// cannot satisfy the identity for any Coxeter element.
pub fn is_even(f: &RationalFunction) -> bool {
    let neg = |p: &IntPolynomial| {
        IntPolynomial::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    };
    let (n, d) = (f.numerator(), f.denominator());
    n * &neg(d) == &neg(n) * d
}

/// `(1 + tʰ)/((1 - tᵃ)(1 - tᵇ))` with `a + b = h + 2`, `ab = 2|G|`.
#[derive(Clone, Debug)]
pub struct KostantClosedForm {
    pub h: u64,
    pub a: u64,
    pub b: u64,
    pub function: RationalFunction,
}

pub fn kostant_closed_form(h: u64, group_order: u64) -> Result<KostantClosedForm> {
    let s = h + 2;
    let p = 2 * group_order;
    let disc = (s * s)
        .checked_sub(4 * p)
        .ok_or_else(|| Error::NonIntegral(format!("a + b = {s}, ab = {p}")))?;
    let r = disc.isqrt();
    if r * r != disc || !(s + r).is_multiple_of(2) {
        return Err(Error::NonIntegral(format!("a + b = {s}, ab = {p}")));
    }
    let (a, b) = ((s - r) / 2, (s + r) / 2);
    let one_minus = |k: u64| IntPolynomial::one() - IntPolynomial::monomial(1, k as usize);
    let num = IntPolynomial::one() + IntPolynomial::monomial(1, h as usize);
    let function = RationalFunction::new(num, one_minus(a) * one_minus(b))?;
    Ok(KostantClosedForm { h, a, b, function })
}

/// Closed form for a group, with `h` the Coxeter number of its Dynkin diagram.
pub fn kostant_closed_form_for(g: &SU2Group) -> Result<KostantClosedForm> {
    let ext = g
        .name
        .mckay_diagram()
        .ok_or_else(|| Error::NoMatch(g.name.display()))?;
    let dynkin = catalog_lookup(&ext[1..])?;
    let h = coxeter_transformation(&dynkin)?
        .coxeter_number()
        .ok_or(Error::NotFiniteType)?;
    kostant_closed_form(h, g.order() as u64)
}

/// One instance of `𝒳(Γ)/𝒳(Γ̃) = 𝒳(Γ^f)/𝒳(Γ̃^f) = closed form`.
#[derive(Clone, Debug)]
pub struct FoldingCase {
    pub label: String,
    pub simply_laced: (String, String),
    pub folded: (String, String),
    pub left: RationalFunction,
    pub right: RationalFunction,
    pub closed_form: RationalFunction,
}

impl FoldingCase {
    pub fn holds(&self) -> bool {
        self.left == self.right && self.left == self.closed_form
    }
}

fn ratio(dynkin: &str, extended: &str) -> Result<RationalFunction> {
    let a = charpoly_direct(&catalog_lookup(dynkin)?)?.with_positive_leading();
    let b = charpoly_direct(&catalog_lookup(extended)?)?.with_positive_leading();
    RationalFunction::new(a, b)
}

fn x_pow_plus(k: usize, c: i64) -> IntPolynomial {
    IntPolynomial::monomial(1, k) + IntPolynomial::from_i64(&[c])
}

/// The four folding identities; the parametric ones for every `n` in `ns`.
pub fn folding_proportionality(ns: core::ops::RangeInclusive<usize>) -> Result<Vec<FoldingCase>> {
    let mut out = Vec::new();
    let mut push = |label: String, s: (&str, &str), f: (&str, &str), num: IntPolynomial, den: IntPolynomial| -> Result<()> {
        out.push(FoldingCase {
            label,
            simply_laced: (s.0.into(), s.1.into()),
            folded: (f.0.into(), f.1.into()),
            left: ratio(s.0, s.1)?,
            right: ratio(f.0, f.1)?,
            closed_form: RationalFunction::new(num, den)?,
        });
        Ok(())
    };
    push(
        "D4/G2".into(),
        ("D4", "~D4"),
        ("G2", "~G21"),
        x_pow_plus(3, 1),
        x_pow_plus(2, -1).pow(2),
    )?;
    push(
        "E6/F4".into(),
        ("E6", "~E6"),
        ("F4", "~F41"),
        x_pow_plus(6, 1),
        x_pow_plus(4, -1) * x_pow_plus(3, -1),
    )?;
    for n in ns {
        let (d, dt, b, bt) = (
            format!("D{}", n + 1),
            format!("~D{}", n + 1),
            format!("B{n}"),
            format!("~B{n}"),
        );
        push(
            format!("D{}/B{n}", n + 1),
            (&d, &dt),
            (&b, &bt),
            x_pow_plus(n, 1),
            x_pow_plus(n - 1, -1) * x_pow_plus(2, -1),
        )?;
        let (a, at, c, ct) = (
            format!("A{}", 2 * n - 1),
            format!("~A{}", 2 * n - 1),
            format!("C{n}"),
            format!("~C{n}"),
        );
        push(
            format!("A{}/C{n}", 2 * n - 1),
            (&a, &at),
            (&c, &ct),
            x_pow_plus(n, 1),
            x_pow_plus(n, -1) * x_pow_plus(1, -1),
        )?;
    }
    Ok(out)
}

/// `Π (1 + t^{2mᵢ+1})` over the exponents of a Dynkin diagram.
pub fn hopf_poincare_product(d: &Diagram) -> Result<IntPolynomial> {
    let (_, exps, _) = exponents_and_weyl_order(d)?;
    Ok(exps
        .iter()
        .fold(IntPolynomial::one(), |acc, &m| acc * x_pow_plus(2 * m as usize + 1, 1)))
}

/// Whether `d` is of finite type (a precondition of the Hopf product).
pub fn is_finite(d: &Diagram) -> Result<bool> {
    Ok(coxeter_transformation(d)?.kind == CartanKind::Finite)
}

/// Character of `πₙ` at an element with eigenvalues `e^{±iθ}`:
/// `Σ_{j=0..n} e^{i(n-2j)θ}`.
pub fn sym_power_character(n: usize, theta: f64) -> Complex64 {
    (0..=n)
        .map(|j| Complex64::from_polar(1.0, (n as f64 - 2.0 * j as f64) * theta))
        .sum()
}
