//! McKay matrices `A(G)`, restriction and induction across `H ◁ G`, and the
//! Slodowy matrices `Ã`, `Ã^∨`.
//!
//! The Slodowy vertices are the distinct restricted characters `ρ_i↓`. By
//! Clifford theory each is a sum over one `G`-orbit of `H`-irreducibles, so
//! the same orbits index the distinct induced characters `τ↑`. Row `i` of
//! `Ã` decomposes `ρ ⊗ ρ_i↓`, row `i` of `Ã^∨` decomposes `ρ ⊗ τ_i↑`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;

use super::chartable::{character_table, CharacterTable};
use super::group::{round_multiplicity, FiniteGroup, GroupName};
use crate::diagram::{catalog_lookup, matrix_isomorphism, Diagram};
use crate::matrix::Matrix;
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// A finite subgroup of SU(2) (or the U(2) triangle example) with its
/// conjugacy classes and irreducible characters.
#[derive(Clone, Debug)]
pub struct SU2Group {
    pub name: GroupName,
    pub group: FiniteGroup,
    pub table: CharacterTable,
    /// Row of the defining representation if it is irreducible.
    pub faithful_2d: Option<usize>,
}

impl SU2Group {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.table.degrees
    }

    /// Multiplicities of the irreducibles in a class function.
    pub fn decompose(&self, chi: &[Complex64]) -> Result<Vec<i64>> {
        self.table
            .rows
            .iter()
            .map(|row| round_multiplicity(self.group.inner(chi, row)))
            .collect()
    }
}

pub fn build_group(name: GroupName) -> Result<SU2Group> {
    build_group_seeded(name, DEFAULT_SEED)
}

pub fn build_group_seeded(name: GroupName, seed: u64) -> Result<SU2Group> {
    let group = FiniteGroup::generate(&name.generators())?;
    if group.order() != name.expected_order() {
        return Err(Error::Numeric(format!(
            "{} has {} elements, expected {}",
            name.display(),
            group.order(),
            name.expected_order()
        )));
    }
    let table = character_table(&group, seed)?;
    let rho = group.defining_character();
    let faithful_2d = table
        .rows
        .iter()
        .position(|r| r.iter().zip(&rho).all(|(a, b)| (a - b).norm() < 1e-6));
    Ok(SU2Group {
        name,
        group,
        table,
        faithful_2d,
    })
}

#[derive(Clone, Debug)]
pub struct McKayData {
    /// `a_jk = ⟨ρ·χ_j, χ_k⟩`, vertices in character order (trivial first).
    pub a: Matrix<BigInt>,
    pub matched_diagram: Option<String>,
    /// `p` with `(2I - A)[i][j] = K[p[i]][p[j]]` for the matched diagram `K`,
    /// taking the trivial character to the extension vertex.
    pub permutation: Option<Vec<usize>>,
}

pub fn mckay_matrix(g: &SU2Group) -> Result<McKayData> {
    let rho = g.group.defining_character();
    let k = g.table.rows.len();
    let mut a = Matrix::from_fn(k, k, |_, _| BigInt::from(0));
    for j in 0..k {
        let prod: Vec<Complex64> = rho.iter().zip(&g.table.rows[j]).map(|(x, y)| x * y).collect();
        let m = g.decompose(&prod)?;
        a = Matrix::from_fn(k, k, |r, c| if r == j { BigInt::from(m[c]) } else { a[(r, c)].clone() });
    }
    let (matched_diagram, permutation) = match g.name.mckay_diagram() {
        Some(name) => {
            let d = catalog_lookup(&name)?;
            let p = match_with_marked(&two_minus(&a), 0, &d);
            (Some(name), p)
        }
        None => (None, None),
    };
    Ok(McKayData {
        a,
        matched_diagram,
        permutation,
    })
}

/// `2I - A`.
pub fn two_minus(a: &Matrix<BigInt>) -> Matrix<BigInt> {
    let n = a.rows();
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::from(2) - &a[(i, j)]
        } else {
            -a[(i, j)].clone()
        }
    })
}

/// Permutation `p` with `k[i][j] = d.K[p[i]][p[j]]` sending `vertex` to the
/// marked vertex of `d` (any vertex if `d` is unmarked).
pub fn match_with_marked(k: &Matrix<BigInt>, vertex: usize, d: &Diagram) -> Option<Vec<usize>> {
    let target = d.cartan_matrix();
    let Some(m) = d.marked() else {
        return matrix_isomorphism(&target, k);
    };
    let tag = |x: &Matrix<BigInt>, v: usize| {
        Matrix::from_fn(x.rows(), x.cols(), |i, j| {
            if i == v && j == v {
                BigInt::from(3)
            } else {
                x[(i, j)].clone()
            }
        })
    };
    matrix_isomorphism(&tag(&target, m), &tag(k, vertex))
}

/// The pairs `H ◁ G` of the Slodowy correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairName {
    /// `𝒟2 ◁ 𝒯`, index 3.
    D2InT,
    /// `𝒯 ◁ 𝒪`, index 2.
    TInO,
    /// `𝒟_{n-1} ◁ 𝒟_{2(n-1)}`, `n ≥ 3`.
    DihedralInDihedral(usize),
    /// `ℤ/2n ◁ 𝒟_n`, `n ≥ 2`.
    CyclicInDihedral(usize),
}

impl PairName {
    /// `d2-t`, `t-o`, `dd(n)`, `zd(n)`.
    pub fn parse(s: &str) -> Result<PairName> {
        let t = s.trim().to_ascii_lowercase();
        let arg = |prefix: &str| -> Option<Result<usize>> {
            let rest = t.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(rest.trim().parse().map_err(|_| Error::MalformedParameters(s.into())))
        };
        if let Some(n) = arg("dd") {
            let n = n?;
            return if n >= 3 {
                Ok(PairName::DihedralInDihedral(n))
            } else {
                Err(Error::MalformedParameters(s.into()))
            };
        }
        if let Some(n) = arg("zd") {
            let n = n?;
            return if n >= 2 {
                Ok(PairName::CyclicInDihedral(n))
            } else {
                Err(Error::MalformedParameters(s.into()))
            };
        }
        match t.as_str() {
            "d2-t" => Ok(PairName::D2InT),
            "t-o" => Ok(PairName::TInO),
            _ => Err(Error::UnknownGroup(s.into())),
        }
    }

    pub fn display(self) -> String {
        match self {
            PairName::D2InT => "d2-t".into(),
            PairName::TInO => "t-o".into(),
            PairName::DihedralInDihedral(n) => format!("dd({n})"),
            PairName::CyclicInDihedral(n) => format!("zd({n})"),
        }
    }

    pub fn groups(self) -> (GroupName, GroupName) {
        match self {
            PairName::D2InT => (GroupName::BinaryDihedral(2), GroupName::Tetrahedral),
            PairName::TInO => (GroupName::Tetrahedral, GroupName::Octahedral),
            PairName::DihedralInDihedral(n) => {
                (GroupName::BinaryDihedral(n - 1), GroupName::BinaryDihedral(2 * (n - 1)))
            }
            PairName::CyclicInDihedral(n) => (GroupName::Cyclic(2 * n), GroupName::BinaryDihedral(n)),
        }
    }

    /// Catalog name of the folded extended diagram (column-sum fold of the
    /// extended diagram of `H`).
    pub fn folded_name(self) -> String {
        match self {
            PairName::D2InT => "~G21".into(),
            PairName::TInO => "~F41".into(),
            PairName::DihedralInDihedral(n) => format!("~B{n}"),
            PairName::CyclicInDihedral(n) => format!("~C{n}"),
        }
    }

    /// Dynkin diagrams of `H` and of `G`.
    pub fn dynkin(self) -> (String, String) {
        match self {
            PairName::D2InT => ("D4".into(), "E6".into()),
            PairName::TInO => ("E6".into(), "E7".into()),
            PairName::DihedralInDihedral(n) => (format!("D{}", n + 1), format!("D{}", 2 * n)),
            PairName::CyclicInDihedral(n) => (format!("A{}", 2 * n - 1), format!("D{}", n + 2)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupPair {
    /// `None` for pairs built directly with `GroupPair::new`.
    pub name: Option<PairName>,
    pub h: SU2Group,
    pub g: SU2Group,
    /// `H`-element index → `G`-element index.
    pub embedding: Vec<usize>,
}

impl GroupPair {
    pub fn index(&self) -> usize {
        self.g.order() / self.h.order()
    }

    /// `χ↓`: a `G`-class function evaluated on the classes of `H`.
    pub fn restrict(&self, chi: &[Complex64]) -> Vec<Complex64> {
        self.h
            .group
            .classes
            .iter()
            .map(|c| chi[self.g.group.class_of[self.embedding[c[0]]]])
            .collect()
    }

    /// `τ↑(g) = (1/|H|) Σ_{x ∈ G, xgx⁻¹ ∈ H} τ(xgx⁻¹)` on the classes of `G`.
    pub fn induce(&self, tau: &[Complex64]) -> Vec<Complex64> {
        let gg = &self.g.group;
        let mut in_h = vec![None; gg.order()];
        for (hi, &gi) in self.embedding.iter().enumerate() {
            in_h[gi] = Some(self.h.group.class_of[hi]);
        }
        gg.classes
            .iter()
            .map(|c| {
                let g = c[0];
                let s: Complex64 = (0..gg.order())
                    .filter_map(|x| in_h[gg.product[gg.product[x][g]][gg.inverse[x]]])
                    .map(|hc| tau[hc])
                    .sum();
                s / self.h.order() as f64
            })
            .collect()
    }

    /// Largest `|⟨ψ, τ↑⟩_G - ⟨ψ↓, τ⟩_H|` over all irreducible `ψ`, `τ`.
    pub fn frobenius_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for tau in &self.h.table.rows {
            let up = self.induce(tau);
            for psi in &self.g.table.rows {
                let lhs = self.g.group.inner(psi, &up);
                let rhs = self.h.group.inner(&self.restrict(psi), tau);
                worst = worst.max((lhs - rhs).norm());
            }
        }
        worst
    }

    /// Clifford branching: each `χ↓` is irreducible or a sum of `[G:H]`
    /// distinct irreducibles of equal degree.
    pub fn clifford_holds(&self) -> Result<bool> {
        let idx = self.index();
        for chi in &self.g.table.rows {
            let m = self.h.decompose(&self.restrict(chi))?;
            let parts: Vec<usize> = (0..m.len()).filter(|&i| m[i] != 0).collect();
            let ok = match parts.len() {
                1 => m[parts[0]] == 1,
                p if p == idx => {
                    let d = self.h.degrees()[parts[0]];
                    parts.iter().all(|&i| m[i] == 1 && self.h.degrees()[i] == d)
                }
                _ => false,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn build_pair(name: PairName) -> Result<GroupPair> {
    build_pair_seeded(name, DEFAULT_SEED)
}

pub fn build_pair_seeded(name: PairName, seed: u64) -> Result<GroupPair> {
    let (hn, gn) = name.groups();
    let mut pair = GroupPair::new(build_group_seeded(hn, seed)?, build_group_seeded(gn, seed)?)?;
    pair.name = Some(name);
    Ok(pair)
}

impl GroupPair {
    /// Embeds `h` in `g` by matching elements and checks normality.
    pub fn new(h: SU2Group, g: SU2Group) -> Result<GroupPair> {
        let embedding = h
            .group
            .elements
            .iter()
            .map(|x| g.group.find(x).ok_or(Error::NotEmbedded))
            .collect::<Result<Vec<usize>>>()?;
        let mut member = vec![false; g.order()];
        for &e in &embedding {
            member[e] = true;
        }
        let gg = &g.group;
        for x in 0..gg.order() {
            for &e in &embedding {
                if !member[gg.product[gg.product[x][e]][gg.inverse[x]]] {
                    return Err(Error::NotEmbedded);
                }
            }
        }
        Ok(GroupPair {
            name: None,
            h,
            g,
            embedding,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SlodowyData {
    /// Row `i`: multiplicities of `ρ_j↓` in `ρ ⊗ ρ_i↓`.
    pub a_tilde: Matrix<BigInt>,
    /// Row `i`: multiplicities of `τ_j↑` in `ρ ⊗ τ_i↑`.
    pub a_vee: Matrix<BigInt>,
    /// `H`-irreducible multiplicities of each distinct `ρ_i↓`.
    pub restricted: Vec<Vec<i64>>,
    /// `G`-irreducible multiplicities of each distinct `τ_i↑`.
    pub induced: Vec<Vec<i64>>,
    /// For each vertex, the `G`-irreducibles restricting to it.
    pub sources: Vec<Vec<usize>>,
    /// Degrees of the restricted characters.
    pub degrees: Vec<usize>,
}

impl SlodowyData {
    pub fn len(&self) -> usize {
        self.restricted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.restricted.is_empty()
    }
}

/// Writes `target` as `Σ c_j basis_j` for basis vectors with disjoint
/// supports, checking the combination exactly.
fn express(target: &[i64], basis: &[Vec<i64>]) -> Result<Vec<i64>> {
    let mut coeffs = Vec::with_capacity(basis.len());
    let mut rebuilt = vec![0i64; target.len()];
    for b in basis {
        let lead = b.iter().position(|&x| x != 0).ok_or_else(|| {
            Error::Decomposition("zero basis character".into())
        })?;
        if target[lead] % b[lead] != 0 {
            return Err(Error::Decomposition(format!("{target:?} over {b:?}")));
        }
        let c = target[lead] / b[lead];
        for (r, x) in rebuilt.iter_mut().zip(b) {
            *r += c * x;
        }
        coeffs.push(c);
    }
    if rebuilt != target {
        return Err(Error::Decomposition(format!("{target:?} is not spanned")));
    }
    Ok(coeffs)
}

pub fn slodowy_matrices(pair: &GroupPair) -> Result<SlodowyData> {
    let (h, g) = (&pair.h, &pair.g);
    let mut restricted: Vec<Vec<i64>> = Vec::new();
    let mut sources: Vec<Vec<usize>> = Vec::new();
    for (i, chi) in g.table.rows.iter().enumerate() {
        let m = h.decompose(&pair.restrict(chi))?;
        match restricted.iter().position(|r| *r == m) {
            Some(p) => sources[p].push(i),
            None => {
                restricted.push(m);
                sources.push(vec![i]);
            }
        }
    }
    // Supports must partition the H-irreducibles.
    let nh = h.table.rows.len();
    let mut owner = vec![usize::MAX; nh];
    for (v, r) in restricted.iter().enumerate() {
        for t in (0..nh).filter(|&t| r[t] != 0) {
            if owner[t] != usize::MAX {
                return Err(Error::Decomposition("restricted characters overlap".into()));
            }
            owner[t] = v;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::Decomposition("an H-irreducible is missed".into()));
    }
    let mut induced = Vec::with_capacity(restricted.len());
    for r in &restricted {
        let t0 = r.iter().position(|&x| x != 0).unwrap();
        let up = g.decompose(&pair.induce(&h.table.rows[t0]))?;
        for t in (0..nh).filter(|&t| r[t] != 0) {
            if g.decompose(&pair.induce(&h.table.rows[t]))? != up {
                return Err(Error::Decomposition("orbit induces unequal characters".into()));
            }
        }
        induced.push(up);
    }
    let n = restricted.len();
    let rho_h = h.group.defining_character();
    let rho_g = g.group.defining_character();
    let to_char = |mult: &[i64], table: &CharacterTable| -> Vec<Complex64> {
        let k = table.rows[0].len();
        (0..k)
            .map(|c| {
                mult.iter()
                    .zip(&table.rows)
                    .map(|(&m, row)| row[c] * m as f64)
                    .sum()
            })
            .collect()
    };
    let mut a_tilde = vec![vec![0i64; n]; n];
    let mut a_vee = vec![vec![0i64; n]; n];
    for i in 0..n {
        let ri = to_char(&restricted[i], &h.table);
        let prod: Vec<Complex64> = rho_h.iter().zip(&ri).map(|(a, b)| a * b).collect();
        a_tilde[i] = express(&h.decompose(&prod)?, &restricted)?;
        let ti = to_char(&induced[i], &g.table);
        let prod: Vec<Complex64> = rho_g.iter().zip(&ti).map(|(a, b)| a * b).collect();
        a_vee[i] = express(&g.decompose(&prod)?, &induced)?;
    }
    let big = |m: &[Vec<i64>]| Matrix::from_fn(n, n, |i, j| BigInt::from(m[i][j]));
    let degrees = restricted
        .iter()
        .map(|r| {
            r.iter()
                .zip(h.degrees())
                .map(|(&m, &d)| m as usize * d)
                .sum()
        })
        .collect();
    Ok(SlodowyData {
        a_tilde: big(&a_tilde),
        a_vee: big(&a_vee),
        restricted,
        induced,
        sources,
        degrees,
    })
}

/// How `2I - Ã` and `2I - Ã^∨` compare with the folded extended diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedMatch {
    pub folded: String,
    pub tilde_is_fold: bool,
    pub tilde_is_dual_fold: bool,
    pub vee_is_fold: bool,
    pub vee_is_dual_fold: bool,
    pub vee_is_transpose: bool,
}

impl FoldedMatch {
    /// `{2I - Ã, 2I - Ã^∨}` is `{fold, transposed fold}`.
    pub fn holds(&self) -> bool {
        self.vee_is_transpose
            && ((self.tilde_is_fold && self.vee_is_dual_fold)
                || (self.tilde_is_dual_fold && self.vee_is_fold))
    }
}

pub fn folded_match(pair: &GroupPair, s: &SlodowyData) -> Result<FoldedMatch> {
    let name = pair
        .name
        .ok_or_else(|| Error::Other("pair has no folded diagram".into()))?
        .folded_name();
    let fold = catalog_lookup(&name)?;
    let dual = fold.transpose();
    let kt = two_minus(&s.a_tilde);
    let kv = two_minus(&s.a_vee);
    Ok(FoldedMatch {
        folded: name,
        tilde_is_fold: match_with_marked(&kt, 0, &fold).is_some(),
        tilde_is_dual_fold: match_with_marked(&kt, 0, &dual).is_some(),
        vee_is_fold: match_with_marked(&kv, 0, &fold).is_some(),
        vee_is_dual_fold: match_with_marked(&kv, 0, &dual).is_some(),
        vee_is_transpose: s.a_vee == s.a_tilde.transpose(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mckay_small() {
        let g = build_group(GroupName::Cyclic(2)).unwrap();
        let m = mckay_matrix(&g).unwrap();
        assert_eq!(m.a, Matrix::from_i64(&[&[0, 2], &[2, 0]]));
        assert!(m.permutation.is_some());
        let g = build_group(GroupName::Tetrahedral).unwrap();
        let m = mckay_matrix(&g).unwrap();
        assert!(m.a.is_symmetric());
        assert!(m.permutation.is_some());
        assert!(g.faithful_2d.is_some());
    }

    #[test]
    fn t_in_o_fixture() {
        let pair = build_pair(PairName::TInO).unwrap();
        assert_eq!(pair.index(), 2);
        assert!(pair.clifford_holds().unwrap());
        assert!(pair.frobenius_residual() < 1e-8);
        let s = slodowy_matrices(&pair).unwrap();
        let printed = Matrix::from_i64(&[
            &[0, 1, 0, 0, 0],
            &[1, 0, 2, 0, 0],
            &[0, 1, 0, 1, 0],
            &[0, 0, 1, 0, 1],
            &[0, 0, 0, 1, 0],
        ]);
        let p = matrix_isomorphism(&s.a_tilde, &printed).unwrap();
        let degrees: Vec<usize> = p.iter().map(|&i| s.degrees[i]).collect();
        assert_eq!(degrees, vec![2, 4, 3, 2, 1]);
        let fm = folded_match(&pair, &s).unwrap();
        assert!(fm.holds(), "{fm:?}");
    }

    #[test]
    fn triangle_induction() {
        let h = build_group(GroupName::Cyclic(3)).unwrap();
        let g = build_group(GroupName::Triangle).unwrap();
        let pair = GroupPair::new(h, g).unwrap();
        // G-irreducibles: trivial, sign, the 2-dimensional one.
        let up = |t: usize| pair.g.decompose(&pair.induce(&pair.h.table.rows[t])).unwrap();
        assert_eq!(up(0), vec![1, 1, 0]);
        assert_eq!(up(1), vec![0, 0, 1]);
        assert_eq!(up(2), vec![0, 0, 1]);
        assert!(pair.frobenius_residual() < 1e-9);
        let bad = GroupPair::new(build_group(GroupName::Cyclic(4)).unwrap(), build_group(GroupName::Triangle).unwrap());
        assert!(matches!(bad, Err(Error::NotEmbedded)));
    }

    #[test]
    fn pair_names() {
        assert_eq!(PairName::parse("dd(4)").unwrap(), PairName::DihedralInDihedral(4));
        assert!(PairName::parse("dd(2)").is_err());
        assert_eq!(PairName::parse("T-O").unwrap(), PairName::TInO);
    }
}
