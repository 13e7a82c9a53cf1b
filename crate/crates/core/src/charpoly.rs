//! Characteristic polynomials `𝒳(Γ, λ) = det(C - λI)` of bicolored Coxeter
//! transformations: the direct determinant and the recursions that avoid it.
//!
//! Splitting along an edge `(α, β)` with `ρ = k_αβ · k_βα`:
//!
//! ```text
//! 𝒳(Γ) = 𝒳(Γ1)𝒳(Γ2) - ρλ 𝒳(Γ1 \ α) 𝒳(Γ2 \ β)
//! ```
//!
//! where the characteristic polynomial of a disconnected diagram is the
//! product over its components and that of the empty diagram is 1.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::coxeter::coxeter_transformation;
use crate::diagram::{catalog_lookup, Diagram, VertexId};
use crate::poly::{max_real_root, IntPolynomial};
use crate::{Error, Result};

pub use crate::poly::mahler_measure;

/// `det(C - λI)` by fraction-free elimination.
pub fn charpoly_direct(d: &Diagram) -> Result<IntPolynomial> {
    Ok(coxeter_transformation(d)?.charpoly)
}

/// Product of `charpoly_direct` over the given components (1 if none).
pub fn charpoly_components(parts: &[Diagram]) -> Result<IntPolynomial> {
    parts
        .iter()
        .try_fold(IntPolynomial::one(), |acc, p| Ok(acc * charpoly_direct(p)?))
}

/// `-(λ + 1)`.
pub fn point() -> IntPolynomial {
    IntPolynomial::from_i64(&[-1, -1])
}

/// The characteristic polynomial of `left --(α,β)-- right`, joined by an edge
/// whose Cartan entries multiply to `rho`.
pub fn charpoly_split(
    left: &Diagram,
    alpha: VertexId,
    right: &Diagram,
    beta: VertexId,
    rho: u32,
) -> Result<IntPolynomial> {
    if alpha >= left.len() {
        return Err(Error::NoSuchVertex(alpha));
    }
    if beta >= right.len() {
        return Err(Error::NoSuchVertex(beta));
    }
    let x1 = charpoly_direct(left)?;
    let x2 = charpoly_direct(right)?;
    let r1 = charpoly_components(&left.remove_vertex(alpha)?)?;
    let r2 = charpoly_components(&right.remove_vertex(beta)?)?;
    let rl = IntPolynomial::monomial(i64::from(rho), 1);
    Ok(&x1 * &x2 - &(&rl * &r1) * &r2)
}

/// Splits the tree at the edge `(i, j)` and applies `charpoly_split`.
pub fn charpoly_split_at(d: &Diagram, i: VertexId, j: VertexId) -> Result<IntPolynomial> {
    let (dij, dji) = d
        .weight(i, j)
        .ok_or_else(|| Error::InvalidDiagram(format!("no edge ({i}, {j})")))?;
    let (left, a, right, b) = d.split_at_edge(i, j)?;
    charpoly_split(&left, a, &right, b, dij * dji)
}

/// Evaluates `𝒳` of a tree by repeatedly splitting off a leaf,
/// `𝒳(Γ) = -(λ+1)𝒳(Γ \ v) - ρλ𝒳(Γ \ {v, w})`, memoized on vertex subsets.
pub fn charpoly_recursive(d: &Diagram) -> Result<IntPolynomial> {
    if !d.is_tree() {
        return Err(Error::InvalidDiagram("leaf recursion needs a tree".into()));
    }
    let n = d.len();
    let adj: Vec<Vec<(VertexId, u32)>> = (0..n)
        .map(|v| {
            d.neighbors(v)
                .map(|w| {
                    let (a, b) = d.weight(v, w).unwrap();
                    (w, a * b)
                })
                .collect()
        })
        .collect();
    let mut memo = BTreeMap::new();
    let all: Vec<VertexId> = (0..n).collect();
    Ok(forest(&adj, &all, &mut memo))
}

type Memo = BTreeMap<Vec<VertexId>, IntPolynomial>;

fn forest(adj: &[Vec<(VertexId, u32)>], set: &[VertexId], memo: &mut Memo) -> IntPolynomial {
    let mut inside = vec![false; adj.len()];
    for &v in set {
        inside[v] = true;
    }
    let mut seen = vec![false; adj.len()];
    let mut out = IntPolynomial::one();
    for &s in set {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &(w, _) in &adj[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out = out * tree(adj, comp, memo);
    }
    out
}

fn tree(adj: &[Vec<(VertexId, u32)>], set: Vec<VertexId>, memo: &mut Memo) -> IntPolynomial {
    if set.len() == 1 {
        return point();
    }
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    let inside = |w: VertexId| set.binary_search(&w).is_ok();
    // The largest leaf of the subtree, and its unique neighbor there.
    let (leaf, nbr, rho) = set
        .iter()
        .rev()
        .find_map(|&v| {
            let mut it = adj[v].iter().filter(|(w, _)| inside(*w));
            match (it.next(), it.next()) {
                (Some(&(w, r)), None) => Some((v, w, r)),
                _ => None,
            }
        })
        .expect("a finite tree has a leaf");
    let without_leaf: Vec<VertexId> = set.iter().copied().filter(|&v| v != leaf).collect();
    let without_both: Vec<VertexId> = without_leaf.iter().copied().filter(|&v| v != nbr).collect();
    let a = tree(adj, without_leaf, memo);
    let b = forest(adj, &without_both, memo);
    let p = &point() * &a - &IntPolynomial::monomial(i64::from(rho), 1) * &b;
    memo.insert(set, p.clone());
    p
}

/// `𝒳(Γ(n)) = 𝒳(Γ)^{n-1} φ_{n-1}`, `φ_j = 𝒳(Γ + β) - jλ𝒳(Γ \ α)`, where
/// `Γ(n)` is a hub joined to `n` copies of `Γ` at `α`.
pub fn charpoly_glue(base: &Diagram, attach: VertexId, n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(Error::MalformedParameters("gluing needs n >= 1".into()));
    }
    if attach >= base.len() {
        return Err(Error::NoSuchVertex(attach));
    }
    let x = charpoly_direct(base)?;
    let plus = charpoly_direct(&base.add_leaf(attach)?)?;
    let minus = charpoly_components(&base.remove_vertex(attach)?)?;
    let phi = plus - &IntPolynomial::monomial((n - 1) as i64, 1) * &minus;
    Ok(x.pow((n - 1) as u32) * phi)
}

/// `𝒳(A_n)` from Frame's recursion `𝒳(A_n) = -(λ+1)𝒳(A_{n-1}) - λ𝒳(A_{n-2})`,
/// with `𝒳(A_0) = 1`.
pub fn frame(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::one();
    let mut cur = point();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &point() * &cur - &IntPolynomial::x() * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The three infinite families of star-shaped diagrams with closed-form
/// characteristic polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `T(2,3,n-3)`, indexed by its degree `n ≥ 5` (`E10` is `n = 10`).
    T23,
    /// `T(3,3,n)`, `n ≥ 3`, degree `n + 4`.
    T33,
    /// `T(2,4,n)`, `n ≥ 3`, degree `n + 4`.
    T24,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "T23" => Ok(Family::T23),
            "T33" => Ok(Family::T33),
            "T24" => Ok(Family::T24),
            _ => Err(Error::UnknownDiagram(s.into())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::T23 => "T23",
            Family::T33 => "T33",
            Family::T24 => "T24",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            Family::T23 => 5,
            Family::T33 | Family::T24 => 3,
        }
    }

    /// Largest root of the limiting polynomial.
    pub fn limit_polynomial(self) -> IntPolynomial {
        match self {
            Family::T23 => IntPolynomial::from_i64(&[-1, -1, 0, 1]),
            Family::T33 => IntPolynomial::from_i64(&[-1, -1, 1]),
            Family::T24 => IntPolynomial::from_i64(&[-1, 0, -1, 1]),
        }
    }

    /// Catalog name of the `n`-th member.
    pub fn diagram_name(self, n: usize) -> Result<alloc::string::String> {
        self.check(n)?;
        Ok(match self {
            Family::T23 => format!("T(2,3,{})", n - 3),
            Family::T33 => format!("T(3,3,{n})"),
            Family::T24 => format!("T(2,4,{n})"),
        })
    }

    pub fn diagram(self, n: usize) -> Result<Diagram> {
        catalog_lookup(&self.diagram_name(n)?)
    }

    fn check(self, n: usize) -> Result<()> {
        if n < self.min_n() {
            return Err(Error::OutOfRange(
                self.name(),
                format!("n = {n} < {}", self.min_n()),
            ));
        }
        Ok(())
    }
}

/// Closed-form characteristic polynomial of a family member, with positive
/// leading coefficient (it equals `±charpoly_direct`).
pub fn family_polynomial(family: Family, n: usize) -> Result<IntPolynomial> {
    family.check(n)?;
    let (deg, top, sum_coeff, sum_hi, low3) = match family {
        Family::T23 => (n, None, -1, n - 3, 0),
        Family::T33 => (n + 4, Some(-2), -3, n, -2),
        Family::T24 => (n + 4, Some(-1), -2, n, -1),
    };
    let sum_lo = match family {
        Family::T23 => 3,
        _ => 4,
    };
    let mut c = vec![BigInt::from(0); deg + 1];
    c[deg] += 1;
    c[deg - 1] += 1;
    if let Some(t) = top {
        c[deg - 3] += t;
    }
    for i in sum_lo..=sum_hi {
        c[i] += sum_coeff;
    }
    c[3] += low3;
    c[1] += 1;
    c[0] += 1;
    Ok(IntPolynomial::new(c))
}

/// Spectral radius of a family member: the largest real root above 1, or 1
/// when there is none.
pub fn family_spectral_radius(family: Family, n: usize) -> Result<f64> {
    spectral_radius_of(&family_polynomial(family, n)?)
}

/// `max(1, largest real root)`. For characteristic polynomials of trees the
/// dominant eigenvalue is real, so this is the spectral radius.
pub fn spectral_radius_of(p: &IntPolynomial) -> Result<f64> {
    match max_real_root(p, 1.0) {
        Ok(r) => Ok(r.max(1.0)),
        Err(Error::NoRootAbove(_)) => Ok(1.0),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(name: &str) -> Diagram {
        catalog_lookup(name).unwrap()
    }

    #[test]
    fn small_direct() {
        assert_eq!(charpoly_direct(&cat("A1")).unwrap(), point());
        assert_eq!(
            charpoly_direct(&cat("A3")).unwrap(),
            IntPolynomial::from_i64(&[-1, -1, -1, -1])
        );
        assert_eq!(
            charpoly_direct(&cat("E10")).unwrap(),
            IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
        );
    }

    #[test]
    fn split_reproduces_a2() {
        let a1 = cat("A1");
        let p = charpoly_split(&a1, 0, &a1, 0, 1).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[1, 1, 1]));
        assert!(charpoly_split(&a1, 1, &a1, 0, 1).is_err());
    }

    #[test]
    fn split_multiply_laced() {
        for (name, i, j) in [("G2", 0, 1), ("B4", 2, 3), ("~G21", 0, 1), ("F4", 0, 2)] {
            let d = cat(name);
            assert_eq!(
                charpoly_split_at(&d, i, j).unwrap(),
                charpoly_direct(&d).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn recursive_matches_direct() {
        for name in ["A6", "D7", "E8", "~E7", "T(3,3,4)", "F4", "~C3", "star(6)"] {
            let d = cat(name);
            assert_eq!(
                charpoly_recursive(&d).unwrap(),
                charpoly_direct(&d).unwrap(),
                "{name}"
            );
        }
        assert!(charpoly_recursive(&cat("~A3")).is_err());
    }

    #[test]
    fn frame_recursion() {
        for n in 1..8 {
            assert_eq!(frame(n), charpoly_direct(&cat(&format!("A{n}"))).unwrap());
        }
    }

    #[test]
    fn glue_star_of_points() {
        let p = charpoly_glue(&cat("A1"), 0, 4).unwrap();
        assert_eq!(p, charpoly_direct(&cat("star(5)")).unwrap());
        let a5 = charpoly_glue(&cat("A2"), 0, 2).unwrap();
        assert_eq!(a5, charpoly_direct(&cat("A5")).unwrap());
    }

    #[test]
    fn families() {
        assert_eq!(
            family_polynomial(Family::T23, 10).unwrap(),
            charpoly_direct(&cat("E10")).unwrap()
        );
        assert!(family_polynomial(Family::T23, 4).is_err());
        for fam in [Family::T23, Family::T33, Family::T24] {
            for n in fam.min_n()..fam.min_n() + 6 {
                let direct = charpoly_direct(&fam.diagram(n).unwrap()).unwrap();
                assert_eq!(
                    direct.with_positive_leading(),
                    family_polynomial(fam, n).unwrap(),
                    "{} {n}",
                    fam.name()
                );
            }
        }
    }
}
