//! Finite groups of 2×2 complex matrices generated by closure: the binary
//! polyhedral subgroups of SU(2) and a small U(2) example.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Result};

pub type M2 = [[Complex64; 2]; 2];

/// Element count beyond which closure is abandoned.
pub const CLOSURE_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    /// `ℤ/n`, generated by `diag(ε, ε⁻¹)`, `ε = e^{2πi/n}`.
    Cyclic(usize),
    /// Binary dihedral group of order `4n`.
    BinaryDihedral(usize),
    /// Binary tetrahedral `⟨2,3,3⟩`, order 24.
    Tetrahedral,
    /// Binary octahedral `⟨2,3,4⟩`, order 48.
    Octahedral,
    /// Binary icosahedral `⟨2,3,5⟩`, order 120.
    Icosahedral,
    /// The symmetric group of the triangle as `⟨diag(ω, ω²), antidiag(1, 1)⟩`
    /// inside U(2).
    Triangle,
}

impl GroupName {
    pub fn parse(s: &str) -> Result<GroupName> {
        let t = s.trim().to_ascii_lowercase();
        let arg = |prefix: &str| -> Option<Result<usize>> {
            let rest = t.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedParameters(s.into())),
            )
        };
        if let Some(n) = arg("cyclic").or_else(|| arg("z")) {
            let n = n?;
            return if n >= 1 {
                Ok(GroupName::Cyclic(n))
            } else {
                Err(Error::MalformedParameters(s.into()))
            };
        }
        if let Some(n) = arg("binary_dihedral").or_else(|| arg("d")) {
            let n = n?;
            return if n >= 2 {
                Ok(GroupName::BinaryDihedral(n))
            } else {
                Err(Error::MalformedParameters(s.into()))
            };
        }
        match t.as_str() {
            "binary_tetrahedral" | "t" => Ok(GroupName::Tetrahedral),
            "binary_octahedral" | "o" => Ok(GroupName::Octahedral),
            "binary_icosahedral" | "i" | "j" => Ok(GroupName::Icosahedral),
            "triangle" | "s3" => Ok(GroupName::Triangle),
            _ => Err(Error::UnknownGroup(s.into())),
        }
    }

    pub fn display(self) -> String {
        match self {
            GroupName::Cyclic(n) => format!("cyclic({n})"),
            GroupName::BinaryDihedral(n) => format!("binary_dihedral({n})"),
            GroupName::Tetrahedral => "binary_tetrahedral".into(),
            GroupName::Octahedral => "binary_octahedral".into(),
            GroupName::Icosahedral => "binary_icosahedral".into(),
            GroupName::Triangle => "triangle".into(),
        }
    }

    /// Order predicted by `4 / (1/p + 1/q + 1/r - 1)` for `⟨p,q,r⟩`.
    pub fn expected_order(self) -> usize {
        let pqr = |p: usize, q: usize, r: usize| -> usize {
            // 4pqr / (qr + pr + pq - pqr), exact in integers.
            4 * p * q * r / (q * r + p * r + p * q - p * q * r)
        };
        match self {
            GroupName::Cyclic(n) => n,
            GroupName::BinaryDihedral(n) => pqr(2, 2, n),
            GroupName::Tetrahedral => pqr(2, 3, 3),
            GroupName::Octahedral => pqr(2, 3, 4),
            GroupName::Icosahedral => pqr(2, 3, 5),
            GroupName::Triangle => 6,
        }
    }

    /// Catalog name of the extended Dynkin diagram attached by McKay.
    pub fn mckay_diagram(self) -> Option<String> {
        match self {
            GroupName::Cyclic(n) if n >= 2 => Some(format!("~A{}", n - 1)),
            GroupName::BinaryDihedral(n) => Some(format!("~D{}", n + 2)),
            GroupName::Tetrahedral => Some("~E6".into()),
            GroupName::Octahedral => Some("~E7".into()),
            GroupName::Icosahedral => Some("~E8".into()),
            _ => None,
        }
    }

    pub fn generators(self) -> Vec<M2> {
        let half = 0.5;
        let phi = (1.0 + libm::sqrt(5.0)) / 2.0;
        let s2 = core::f64::consts::FRAC_1_SQRT_2;
        let rot = |t: f64| quaternion(libm::cos(t), libm::sin(t), 0.0, 0.0);
        let pi = core::f64::consts::PI;
        let w = quaternion(half, half, half, half);
        match self {
            GroupName::Cyclic(n) => vec![rot(2.0 * pi / n as f64)],
            GroupName::BinaryDihedral(n) => vec![rot(pi / n as f64), quaternion(0.0, 0.0, 1.0, 0.0)],
            GroupName::Tetrahedral => vec![quaternion(0.0, 1.0, 0.0, 0.0), w],
            GroupName::Octahedral => vec![quaternion(s2, s2, 0.0, 0.0), w],
            GroupName::Icosahedral => vec![w, quaternion(phi / 2.0, 1.0 / (2.0 * phi), half, 0.0)],
            GroupName::Triangle => {
                let om = Complex64::from_polar(1.0, 2.0 * pi / 3.0);
                let z = Complex64::new(0.0, 0.0);
                let one = Complex64::new(1.0, 0.0);
                vec![[[om, z], [z, om.conj()]], [[z, one], [one, z]]]
            }
        }
    }
}

/// `a + bi + cj + dk` as `[[a + bi, c + di], [-c + di, a - bi]]`.
pub fn quaternion(a: f64, b: f64, c: f64, d: f64) -> M2 {
    [
        [Complex64::new(a, b), Complex64::new(c, d)],
        [Complex64::new(-c, d), Complex64::new(a, -b)],
    ]
}

pub fn mul(x: &M2, y: &M2) -> M2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

pub fn trace(x: &M2) -> Complex64 {
    x[0][0] + x[1][1]
}

pub fn det(x: &M2) -> Complex64 {
    x[0][0] * x[1][1] - x[0][1] * x[1][0]
}

type Key = [i64; 8];

/// Entries rounded to 1e-8 so that equal elements share a key.
fn key(x: &M2) -> Key {
    let r = |v: f64| libm::round(v * 1e8) as i64;
    [
        r(x[0][0].re),
        r(x[0][0].im),
        r(x[0][1].re),
        r(x[0][1].im),
        r(x[1][0].re),
        r(x[1][0].im),
        r(x[1][1].re),
        r(x[1][1].im),
    ]
}

/// A finite matrix group with multiplication table and conjugacy classes.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub elements: Vec<M2>,
    /// `product[a][b]` is the index of `elements[a]·elements[b]`.
    pub product: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    /// Class 0 is `{identity}`; classes ordered by least member.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    index: BTreeMap<Key, usize>,
}

impl FiniteGroup {
    pub fn generate(generators: &[M2]) -> Result<FiniteGroup> {
        let id = quaternion(1.0, 0.0, 0.0, 0.0);
        let mut elements = vec![id];
        let mut index = BTreeMap::new();
        index.insert(key(&id), 0);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head];
            head += 1;
            for g in generators {
                let y = mul(&x, g);
                let k = key(&y);
                if !index.contains_key(&k) {
                    if elements.len() >= CLOSURE_CAP {
                        return Err(Error::ClosureCap(CLOSURE_CAP));
                    }
                    index.insert(k, elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut product = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                product[a][b] = *index
                    .get(&key(&mul(&elements[a], &elements[b])))
                    .ok_or_else(|| Error::Numeric("group is not closed".into()))?;
            }
        }
        let inverse: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| product[a][b] == 0).expect("finite group"))
            .collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n).map(|g| product[product[g][a]][inverse[g]]).collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                class_of[c] = classes.len();
            }
            classes.push(cls);
        }
        Ok(FiniteGroup {
            elements,
            product,
            inverse,
            classes,
            class_of,
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn find(&self, x: &M2) -> Option<usize> {
        self.index.get(&key(x)).copied()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Defining (2-dimensional) character on class representatives.
    pub fn defining_character(&self) -> Vec<Complex64> {
        self.classes
            .iter()
            .map(|c| trace(&self.elements[c[0]]))
            .collect()
    }

    /// Characters of `Sym^n` of the defining representation, `n = 0..=order`,
    /// on class representatives, from `χ_{n+1} = tr·χ_n - det·χ_{n-1}`.
    pub fn sym_power_characters(&self, order: usize) -> Vec<Vec<Complex64>> {
        let reps: Vec<&M2> = self.classes.iter().map(|c| &self.elements[c[0]]).collect();
        let mut out: Vec<Vec<Complex64>> = Vec::with_capacity(order + 1);
        out.push(vec![Complex64::new(1.0, 0.0); reps.len()]);
        if order >= 1 {
            out.push(reps.iter().map(|g| trace(g)).collect());
        }
        for n in 1..order {
            let next = reps
                .iter()
                .enumerate()
                .map(|(c, g)| trace(g) * out[n][c] - det(g) * out[n - 1][c])
                .collect();
            out.push(next);
        }
        out
    }

    /// `⟨α, β⟩ = (1/|G|) Σ_classes |C| α(C) conj(β(C))`.
    pub fn inner(&self, a: &[Complex64], b: &[Complex64]) -> Complex64 {
        let s: Complex64 = self
            .classes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(c, (x, y))| x * y.conj() * c.len() as f64)
            .sum();
        s / self.order() as f64
    }
}

/// Rounds a complex multiplicity to an integer, rejecting residuals ≥ 1e-6.
pub fn round_multiplicity(z: Complex64) -> Result<i64> {
    let r = libm::round(z.re);
    if (z.re - r).abs() >= 1e-6 || z.im.abs() >= 1e-6 {
        return Err(Error::NonIntegral(format!("{z}")));
    }
    Ok(r as i64)
}
