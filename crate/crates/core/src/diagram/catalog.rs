//! Named diagrams.
//!
//! Grammar: `~`? (`A`|`B`|`C`|`D`|`E`|`F`|`G`) rank variant?, or `T(p,q,r)`,
//! `star(n)`, `kolmykov(n)`.
//!
//! Vertex conventions:
//! - `A_n`: path `0..n`. `D_n`: path `0..n-1` plus vertex `n-1` on `n-3`.
//! - `T(p,q,r)`: centre `0`, then arms of `p-1`, `q-1`, `r-1` vertices, each
//!   numbered outward. `E_6,E_7,E_8,E_10 = T(2,3,3..7)`.
//! - Extended diagrams append the extension vertex last and mark it, so
//!   deleting the mark returns the Dynkin diagram exactly.
//! - `B_n`, `C_n`, `G_2` and their extensions are folds of `D_{n+1}`,
//!   `A_{2n-1}`, `D_4` (and extensions). `~F41`/`~F42` follow the order
//!   `x0, y1, y2, y3, y4` with `y3` the extension vertex; `F4` is `~F41`
//!   without `y3`. `~G22` and `~F42` are transposes of `~G21` and `~F41`.
//! - `star(n)`: hub `0` with `n - 1` rays.
//! - `kolmykov(n)`: a hub joined to a leaf of each of `n` copies of `~D4`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{Diagram, Edge};
use crate::{Error, Result};

pub fn catalog_lookup(name: &str) -> Result<Diagram> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(args) = call_args(&s, "T") {
        let v = parse_list(&args, name)?;
        if v.len() != 3 || v.iter().any(|&x| x < 1) {
            return Err(Error::MalformedParameters(format!("{name}: need T(p,q,r), p,q,r >= 1")));
        }
        return tpqr(v[0], v[1], v[2]);
    }
    if let Some(args) = call_args(&s, "star") {
        let n = single(&args, name)?;
        if n < 1 {
            return Err(Error::MalformedParameters(format!("{name}: star needs n >= 1")));
        }
        return tpqr_star(n);
    }
    if let Some(args) = call_args(&s, "kolmykov") {
        let n = single(&args, name)?;
        if n < 1 {
            return Err(Error::MalformedParameters(format!("{name}: kolmykov needs n >= 1")));
        }
        return Diagram::glue_star(&extended_d(4)?.with_marked(None)?, 0, n);
    }
    let (extended, rest) = match s.strip_prefix('~') {
        Some(r) => (true, r),
        None => (false, s.as_str()),
    };
    let mut chars = rest.chars();
    let family = chars
        .next()
        .ok_or_else(|| Error::UnknownDiagram(name.to_string()))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::UnknownDiagram(name.to_string()));
    }
    let bad_rank = || Error::MalformedParameters(format!("{name}: rank out of range"));
    let rank = |min: usize| -> Result<usize> {
        let n: usize = digits.parse().map_err(|_| bad_rank())?;
        if n < min || n > 64 {
            Err(bad_rank())
        } else {
            Ok(n)
        }
    };
    match (family, extended) {
        ('A', false) => path(rank(1)?),
        ('A', true) => extended_a(rank(1)?),
        ('D', false) => d_n(rank(4)?),
        ('D', true) => extended_d(rank(4)?),
        ('B', false) => {
            let n = rank(2)?;
            d_n(n + 1)?.fold(&fold_pair(n + 1, n - 1, n))
        }
        ('B', true) => {
            let n = rank(3)?;
            extended_d(n + 1)?.fold(&fold_pair(n + 2, n - 1, n))
        }
        ('C', false) => {
            let n = rank(2)?;
            path(2 * n - 1)?.fold(&reflection_orbits(2 * n - 1))
        }
        ('C', true) => {
            let n = rank(2)?;
            let mut orbits = reflection_orbits(2 * n - 1);
            orbits.push(vec![2 * n - 1]);
            extended_a(2 * n - 1)?.fold(&orbits)
        }
        ('E', false) => match digits {
            "6" => tpqr(2, 3, 3),
            "7" => tpqr(2, 3, 4),
            "8" => tpqr(2, 3, 5),
            "10" => tpqr(2, 3, 7),
            _ => Err(bad_rank()),
        },
        ('E', true) => match digits {
            "6" => extend_at(tpqr(2, 3, 3)?, 1),
            "7" => extend_at(tpqr(2, 3, 4)?, 3),
            "8" => extend_at(tpqr(2, 3, 5)?, 7),
            _ => Err(bad_rank()),
        },
        ('F', false) if digits == "4" => f4(),
        ('F', true) if digits == "41" => extended_f41(),
        ('F', true) if digits == "42" => Ok(extended_f41()?.transpose()),
        ('G', false) if digits == "2" => d_n(4)?.fold(&[vec![0, 2, 3], vec![1]]),
        ('G', true) if digits == "21" => extended_g21(),
        ('G', true) if digits == "22" => Ok(extended_g21()?.transpose()),
        ('F', _) | ('G', _) => Err(bad_rank()),
        _ => Err(Error::UnknownDiagram(name.to_string())),
    }
}

/// Catalog name of the extension of a Dynkin diagram name.
pub fn extension_name(name: &str) -> Result<String> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let ok = match s.as_str() {
        "F4" => return Ok("~F41".into()),
        "G2" => return Ok("~G21".into()),
        "E6" | "E7" | "E8" => true,
        _ => {
            let mut c = s.chars();
            matches!(c.next(), Some('A' | 'B' | 'C' | 'D'))
                && !c.as_str().is_empty()
                && c.as_str().chars().all(|d| d.is_ascii_digit())
        }
    };
    if !ok {
        return Err(Error::NoExtension(name.to_string()));
    }
    let ext = format!("~{s}");
    catalog_lookup(&ext).map_err(|_| Error::NoExtension(name.to_string()))?;
    Ok(ext)
}

/// Representative names covering every family, used for catalog-wide checks.
pub fn catalog_names() -> Vec<String> {
    let mut v: Vec<String> = Vec::new();
    v.extend((1..=8).map(|n| format!("A{n}")));
    v.extend((4..=8).map(|n| format!("D{n}")));
    v.extend(["E6", "E7", "E8"].map(String::from));
    v.extend((2..=6).map(|n| format!("B{n}")));
    v.extend((2..=6).map(|n| format!("C{n}")));
    v.extend(["F4", "G2"].map(String::from));
    v.extend((1..=8).map(|n| format!("~A{n}")));
    v.extend((4..=8).map(|n| format!("~D{n}")));
    v.extend(["~E6", "~E7", "~E8"].map(String::from));
    v.extend((3..=6).map(|n| format!("~B{n}")));
    v.extend((2..=6).map(|n| format!("~C{n}")));
    v.extend(["~F41", "~F42", "~G21", "~G22"].map(String::from));
    v.extend(["E10", "T(3,3,4)", "T(2,4,5)", "star(6)", "kolmykov(3)"].map(String::from));
    v
}

fn call_args(s: &str, head: &str) -> Option<String> {
    let rest = s.strip_prefix(head)?.strip_prefix('(')?;
    rest.strip_suffix(')').map(String::from)
}

fn parse_list(args: &str, name: &str) -> Result<Vec<usize>> {
    args.split(',')
        .map(|a| {
            a.parse::<usize>()
                .map_err(|_| Error::MalformedParameters(format!("{name}: bad integer `{a}`")))
        })
        .collect()
}

fn single(args: &str, name: &str) -> Result<usize> {
    let v = parse_list(args, name)?;
    if v.len() != 1 {
        return Err(Error::MalformedParameters(format!("{name}: expected one argument")));
    }
    Ok(v[0])
}

fn simple(edges: &[(usize, usize)]) -> Vec<Edge> {
    edges
        .iter()
        .map(|&(i, j)| Edge { i, j, dij: 1, dji: 1 })
        .collect()
}

fn path(n: usize) -> Result<Diagram> {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Diagram::simply_laced(n, &e)
}

/// `D_n` for `n >= 3` (`D_3 = A_3` with centre 0).
fn d_n(n: usize) -> Result<Diagram> {
    let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
    e.push((n - 3, n - 1));
    Diagram::simply_laced(n, &e)
}

fn tpqr(p: usize, q: usize, r: usize) -> Result<Diagram> {
    let n = p + q + r - 2;
    let mut e = Vec::new();
    let mut next = 1;
    for arm in [p - 1, q - 1, r - 1] {
        let mut prev = 0;
        for _ in 0..arm {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Diagram::simply_laced(n, &e)
}

fn tpqr_star(n: usize) -> Result<Diagram> {
    let e: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Diagram::simply_laced(n, &e)
}

fn extend_at(d: Diagram, v: usize) -> Result<Diagram> {
    let n = d.len();
    d.add_leaf(v)?.with_marked(Some(n))
}

fn extended_a(n: usize) -> Result<Diagram> {
    let d = path(n)?;
    if n == 1 {
        return d.add_edge(0, 1, 2, 2)?.with_marked(Some(1));
    }
    d.add_edge(n - 1, n, 1, 1)?
        .add_edge(0, n, 1, 1)?
        .with_marked(Some(n))
}

fn extended_d(n: usize) -> Result<Diagram> {
    extend_at(d_n(n)?, 1)
}

/// Orbits of `D_{size}`-like diagrams swapping `a` and `b`.
fn fold_pair(size: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
    (0..size)
        .filter(|&v| v != b)
        .map(|v| if v == a { vec![a, b] } else { vec![v] })
        .collect()
}

/// Orbits of `i ↔ len-1-i` on `0..len` (`len` odd).
fn reflection_orbits(len: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = (0..len / 2).map(|i| vec![i, len - 1 - i]).collect();
    v.push(vec![len / 2]);
    v
}

fn extended_f41() -> Result<Diagram> {
    let labels = ["x0", "y1", "y2", "y3", "y4"].map(String::from).to_vec();
    let edges = vec![
        Edge { i: 0, j: 1, dij: 1, dji: 1 },
        Edge { i: 0, j: 2, dij: 2, dji: 1 },
        Edge { i: 1, j: 3, dij: 1, dji: 1 },
        Edge { i: 2, j: 4, dij: 1, dji: 1 },
    ];
    Diagram::new(labels, edges, Some(3))
}

fn f4() -> Result<Diagram> {
    let labels = ["x0", "y1", "y2", "y4"].map(String::from).to_vec();
    let mut edges = simple(&[(0, 1), (2, 3)]);
    edges.push(Edge { i: 0, j: 2, dij: 2, dji: 1 });
    Diagram::new(labels, edges, None)
}

fn extended_g21() -> Result<Diagram> {
    extended_d(4)?.fold(&[vec![0, 2, 3], vec![1], vec![4]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    #[test]
    fn ranks_and_sizes() {
        for (name, n) in [
            ("A2", 2),
            ("~A1", 2),
            ("~A5", 6),
            ("D4", 4),
            ("~D6", 7),
            ("E10", 10),
            ("~E8", 9),
            ("B3", 3),
            ("~B4", 5),
            ("C3", 3),
            ("~C3", 4),
            ("F4", 4),
            ("~F42", 5),
            ("G2", 2),
            ("~G21", 3),
            ("T(2,3,7)", 10),
            ("star(5)", 5),
            ("kolmykov(3)", 16),
        ] {
            let d = catalog_lookup(name).unwrap();
            assert_eq!(d.len(), n, "{name}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(catalog_lookup("star(0)"), Err(Error::MalformedParameters(_))));
        assert!(matches!(catalog_lookup("nosuch"), Err(Error::UnknownDiagram(_))));
        assert!(catalog_lookup("D3").is_err());
        assert!(catalog_lookup("E9").is_err());
        assert!(catalog_lookup("~F43").is_err());
    }

    #[test]
    fn f41_fixture() {
        let k = catalog_lookup("~F41").unwrap().cartan_matrix();
        let want = Matrix::from_i64(&[
            &[2, -1, -2, 0, 0],
            &[-1, 2, 0, -1, 0],
            &[-1, 0, 2, 0, -1],
            &[0, -1, 0, 2, 0],
            &[0, 0, -1, 0, 2],
        ]);
        assert_eq!(k, want);
        let k2 = catalog_lookup("~F42").unwrap().cartan_matrix();
        assert_eq!(k2.row(0), want.transpose().row(0));
    }

    #[test]
    fn extension_removal_gives_dynkin() {
        for name in catalog_names().iter().filter(|n| n.starts_with('~')) {
            let ext = catalog_lookup(name).unwrap();
            let m = ext.marked().unwrap();
            let rest = ext.remove_vertex(m).unwrap();
            assert_eq!(rest.len(), 1, "{name}");
            let base = &name[1..];
            let base = match base {
                "F41" | "F42" => "F4",
                "G21" | "G22" => "G2",
                b => b,
            };
            let dynkin = catalog_lookup(base).unwrap();
            let same = rest[0].is_isomorphic(&dynkin) || rest[0].transpose().is_isomorphic(&dynkin);
            assert!(same, "{name}");
        }
    }

    #[test]
    fn folds_match_named() {
        let e6 = catalog_lookup("E6").unwrap();
        let f = e6.fold(&[vec![0], vec![1], vec![2, 4], vec![3, 5]]).unwrap();
        assert!(f.is_isomorphic(&catalog_lookup("F4").unwrap()));
        let g2 = catalog_lookup("G2").unwrap().cartan_matrix();
        assert_eq!(g2, Matrix::from_i64(&[&[2, -1], &[-3, 2]]));
        let e6t = catalog_lookup("~E6").unwrap();
        // arms: [1, 6], [2, 3], [4, 5]
        let f = e6t
            .fold(&[vec![0], vec![1], vec![6], vec![2, 4], vec![3, 5]])
            .unwrap();
        assert!(f.is_isomorphic(&catalog_lookup("~F41").unwrap()));
    }

    #[test]
    fn extension_names() {
        assert_eq!(extension_name("F4").unwrap(), "~F41");
        assert_eq!(extension_name("D5").unwrap(), "~D5");
        assert!(extension_name("E10").is_err());
        assert!(extension_name("B2").is_err());
    }
}
