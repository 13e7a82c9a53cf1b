//! One function per subcommand. Each returns a `Report`; errors are either
//! usage errors (bad names, bad options) or computation errors.

use std::fmt;

use anyhow::{anyhow, Result};
use coxeter_core::cartan::{cartan_matrix, CartanKind};
use coxeter_core::charpoly::{
    charpoly_direct, charpoly_recursive, charpoly_split_at, family_polynomial, mahler_measure,
    spectral_radius_of, Family,
};
use coxeter_core::coxeter::{
    coxeter_element, coxeter_transformation, enumerate_roots, exponents_and_weyl_order,
    jordan_structure, matrix_order, spectrum_of, unipotent_order_of, JordanStructure,
};
use coxeter_core::diagram::{catalog_lookup, catalog_names, matrix_isomorphism};
use coxeter_core::matrix::Matrix;
use coxeter_core::mckay::{
    build_group_seeded, build_pair_seeded, folded_match, mckay_matrix, orthogonality_residual,
    slodowy_matrices, GroupName, PairName,
};
use coxeter_core::poincare::{
    ebeling_ratio, generating_function, is_even, kostant_closed_form, mckay_system, pair_system,
    Kind,
};
use coxeter_core::{Diagram, Error as CoreError};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::json;
use crate::report::{Check, Report};

/// Tolerance for float identities such as the `φ ↔ λ` correspondence.
pub const SPECTRAL_TOLERANCE: f64 = 1e-9;
/// Tolerance for character orthogonality and Frobenius reciprocity.
pub const CHARACTER_TOLERANCE: f64 = 1e-8;

/// A request the program cannot interpret; exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Whether an error comes from unparseable input rather than computation.
pub fn is_usage_error(e: &anyhow::Error) -> bool {
    if e.downcast_ref::<UsageError>().is_some() {
        return true;
    }
    matches!(
        e.downcast_ref::<CoreError>(),
        Some(CoreError::UnknownDiagram(_) | CoreError::MalformedParameters(_) | CoreError::UnknownGroup(_))
    )
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn lookup(name: &str) -> Result<Diagram> {
    Ok(catalog_lookup(name)?)
}

fn jordan_json(j: &JordanStructure) -> Value {
    json!({
        "blocks": j.nontrivial.iter().map(|(s, c)| json!({"size": s, "count": c})).collect::<Vec<_>>(),
        "blocks_2x2": j.blocks_2x2(),
        "at_one": j.at_one,
    })
}

fn order_json(o: Option<u64>) -> Value {
    o.map_or(Value::String("infinity".into()), Value::from)
}

pub fn analyze(name: &str) -> Result<Report> {
    let d = lookup(name)?;
    let cartan = cartan_matrix(&d)?;
    let mut r = Report::new("analyze").input("diagram", name);
    r.set("diagram", json::diagram(&d));
    r.set("kind", Value::from(cartan.kind.name()));
    r.set("cartan_matrix", json::int_matrix(&cartan.k));
    r.set("symmetrizer", Value::Array(cartan.u.iter().map(json::rational).collect()));
    r.set("tits_form", json::rational_matrix(&cartan.b));
    r.set("ker_b_dim", Value::from(cartan.ker_b_dim));

    let a = match coxeter_transformation(&d) {
        Ok(a) => a,
        Err(CoreError::NotBipartite(_)) => return analyze_general(d, cartan.kind, r),
        Err(e) => return Err(e.into()),
    };
    let labels = |vs: &[usize]| Value::Array(vs.iter().map(|&v| Value::from(d.label(v))).collect());
    r.set(
        "partition",
        json!({ "s1": labels(&a.partition.s1), "s2": labels(&a.partition.s2) }),
    );
    r.set("coxeter_transformation", json::int_matrix(&a.c));
    r.set("charpoly", json::polynomial(&a.charpoly));
    r.set("phi_spectrum", json::phi_spectrum(&a.phi_spectrum()?));
    r.set("spectrum", json::spectrum(&a.lambda_spectrum()?));
    let j = a.jordan();
    r.set("jordan_blocks", jordan_json(&j));
    r.set("spectral_radius", json::float(a.spectral_radius()?));
    let h = a.coxeter_number();
    r.set("coxeter_number", order_json(h));
    r.set("unipotent_order", order_json(a.unipotent_order()));

    r.check(Check::exact("w1 is an involution", (&a.w1 * &a.w1).is_identity()));
    r.check(Check::exact("w2 is an involution", (&a.w2 * &a.w2).is_identity()));
    r.check(Check::within(
        "phi-lambda correspondence",
        a.phi_lambda_residual()?,
        SPECTRAL_TOLERANCE,
    ));
    if d.is_tree() {
        r.check(Check::exact(
            "leaf recursion matches determinant",
            charpoly_recursive(&d)? == a.charpoly,
        ));
    }
    match cartan.kind {
        CartanKind::Finite => {
            let (h2, exps, weyl) = exponents_and_weyl_order(&d)?;
            r.set("exponents", json!(exps));
            r.set("weyl_order", Value::String(weyl.to_string()));
            r.check(Check::exact("C has finite order h", h == Some(h2)));
            r.check(Check::exact("C is diagonalizable", j.diagonalizable()));
        }
        CartanKind::Affine => {
            r.check(Check::exact(
                "one 2x2 Jordan block at 1",
                j.nontrivial == [(2, 1)] && j.at_one == 1,
            ));
        }
        CartanKind::IndefiniteDegenerate | CartanKind::IndefiniteNondegenerate => {
            let rho = a.spectral_radius()?;
            r.check(Check::exact("spectral radius exceeds 1", rho > 1.0 + SPECTRAL_TOLERANCE));
        }
    }
    Ok(r)
}

/// Diagrams with odd cycles have no bicolored `C`; use `s_0 s_1 ⋯ s_{n-1}`.
fn analyze_general(d: Diagram, kind: CartanKind, mut r: Report) -> Result<Report> {
    let order: Vec<usize> = (0..d.len()).collect();
    let c = coxeter_element(&d, &order)?;
    let p = c.charpoly();
    r.set("partition", Value::Null);
    r.set("coxeter_element_order", json!(order));
    r.set("coxeter_transformation", json::int_matrix(&c));
    r.set("charpoly", json::polynomial(&p));
    r.set("spectrum", json::spectrum(&spectrum_of(&p)?));
    let j = jordan_structure(&c);
    r.set("jordan_blocks", jordan_json(&j));
    r.set("coxeter_number", order_json(matrix_order(&c)));
    r.set("unipotent_order", order_json(unipotent_order_of(&c)));
    if kind == CartanKind::Affine {
        r.check(Check::exact(
            "one 2x2 Jordan block at 1",
            j.nontrivial == [(2, 1)] && j.at_one == 1,
        ));
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Direct,
    Split,
    Recursive,
    Family,
}

impl Method {
    pub fn parse(s: &str) -> Result<Method> {
        match s {
            "direct" => Ok(Method::Direct),
            "split" => Ok(Method::Split),
            "recursive" => Ok(Method::Recursive),
            "family" => Ok(Method::Family),
            _ => Err(usage(format!("unknown method {s:?}; expected direct|split|recursive|family"))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Split => "split",
            Method::Recursive => "recursive",
            Method::Family => "family",
        }
    }
}

/// The family member isomorphic to `d`, if any.
fn family_member(d: &Diagram) -> Option<(Family, usize)> {
    [Family::T23, Family::T33, Family::T24].into_iter().find_map(|f| {
        let n = match f {
            Family::T23 => d.len(),
            _ => d.len().checked_sub(4)?,
        };
        let member = f.diagram(n).ok()?;
        member.is_isomorphic(d).then_some((f, n))
    })
}

pub fn charpoly(name: &str, method: Method) -> Result<Report> {
    let d = lookup(name)?;
    let direct = charpoly_direct(&d)?;
    let mut r = Report::new("charpoly")
        .input("diagram", name)
        .input("method", method.name());
    let p = match method {
        Method::Direct => direct.clone(),
        Method::Recursive => charpoly_recursive(&d)?,
        Method::Split => {
            let e = d
                .edges()
                .iter()
                .find(|e| d.split_at_edge(e.i, e.j).is_ok())
                .ok_or_else(|| anyhow!("{name} has no edge to split along"))?;
            r.set("split_edge", json!([d.label(e.i), d.label(e.j)]));
            charpoly_split_at(&d, e.i, e.j)?
        }
        Method::Family => {
            let (f, n) = family_member(&d)
                .ok_or_else(|| usage(format!("{name} is not a member of T23, T33 or T24")))?;
            r.set("family", json!({ "name": f.name(), "n": n }));
            // Closed forms carry a positive leading coefficient.
            let closed = family_polynomial(f, n)?;
            if closed.leading() == direct.leading() {
                closed
            } else {
                -closed
            }
        }
    };
    r.set("coefficients", json::polynomial(&p));
    r.set("polynomial", Value::String(p.to_string()));
    r.set("spectral_radius", json::float(spectral_radius_of(&p)?));
    if p.leading().magnitude().is_one() {
        r.set("mahler_measure", json::float(mahler_measure(&p)?));
    }
    r.check(Check::exact(format!("{} agrees with the determinant", method.name()), p == direct));
    Ok(r)
}

pub fn roots(name: &str) -> Result<Report> {
    let d = lookup(name)?;
    let rs = enumerate_roots(&d)?;
    let (h, exps, weyl) = exponents_and_weyl_order(&d)?;
    let l = d.len() as u64;
    let mut r = Report::new("roots").input("diagram", name);
    r.set("rank", Value::from(l));
    r.set("root_count", Value::from(rs.roots.len()));
    r.set("positive_roots", json!(rs.positive_roots));
    r.set("highest_root", json!(rs.highest_root));
    r.set("coxeter_number", Value::from(h));
    r.set("exponents", json!(exps));
    r.set("weyl_order", Value::String(weyl.to_string()));
    r.check(Check::exact("h·l = |roots|", h * l == rs.roots.len() as u64));
    r.check(Check::exact(
        "h = 1 + height of highest root",
        h == 1 + rs.highest_root.iter().sum::<i64>() as u64,
    ));
    r.check(Check::exact(
        "exponents are symmetric",
        exps.iter().all(|m| exps.contains(&(h - m))),
    ));
    r.check(Check::exact(
        "|positive roots| = Σ exponents",
        rs.positive_roots.len() as u64 == exps.iter().sum::<u64>(),
    ));
    Ok(r)
}

pub fn parse_group(s: &str) -> Result<GroupName> {
    GroupName::parse(s).map_err(|_| usage(format!("unknown group {s:?}")))
}

pub fn mckay(group: &str, seed: u64) -> Result<Report> {
    let name = parse_group(group)?;
    let g = build_group_seeded(name, seed)?;
    let m = mckay_matrix(&g)?;
    let mut r = Report::new("mckay").input("group", name.display()).input("seed", seed);
    r.set("order", Value::from(g.order()));
    r.set("class_sizes", json!(g.group.class_sizes()));
    r.set("degrees", json!(g.degrees()));
    r.set(
        "characters",
        Value::Array(
            g.table
                .rows
                .iter()
                .map(|row| Value::Array(row.iter().map(|z| json::character(*z)).collect()))
                .collect(),
        ),
    );
    r.set("A", json::int_matrix(&m.a));
    r.set("matched_diagram", json!(m.matched_diagram));
    r.set("permutation", json!(m.permutation));
    r.check(Check::within(
        "character orthogonality",
        orthogonality_residual(&g.group, &g.table),
        CHARACTER_TOLERANCE,
    ));
    r.check(Check::exact("A is symmetric", m.a.is_symmetric()));
    if m.matched_diagram.is_some() {
        r.check(Check::exact("2I - A matches the extended Cartan matrix", m.permutation.is_some()));
    }
    Ok(r)
}

pub fn parse_pair(s: &str) -> Result<PairName> {
    PairName::parse(s).map_err(|_| usage(format!("unknown pair {s:?}; expected d2-t, t-o, dd(n) or zd(n)")))
}

/// The printed `Ã` for `𝒯 ◁ 𝒪`.
pub fn printed_t_in_o() -> Matrix<BigInt> {
    Matrix::from_i64(&[
        &[0, 1, 0, 0, 0],
        &[1, 0, 2, 0, 0],
        &[0, 1, 0, 1, 0],
        &[0, 0, 1, 0, 1],
        &[0, 0, 0, 1, 0],
    ])
}

pub fn slodowy(pair: &str, seed: u64) -> Result<Report> {
    let name = parse_pair(pair)?;
    let p = build_pair_seeded(name, seed)?;
    let s = slodowy_matrices(&p)?;
    let fm = folded_match(&p, &s)?;
    let mut r = Report::new("slodowy").input("pair", name.display()).input("seed", seed);
    r.set("index", Value::from(p.index()));
    r.set("degrees", json!(s.degrees));
    r.set("restricted", json!(s.restricted));
    r.set("induced", json!(s.induced));
    r.set("A_tilde", json::int_matrix(&s.a_tilde));
    r.set("A_vee", json::int_matrix(&s.a_vee));
    r.set(
        "folded_match",
        json!({
            "folded": fm.folded,
            "tilde_is_fold": fm.tilde_is_fold,
            "tilde_is_dual_fold": fm.tilde_is_dual_fold,
            "vee_is_fold": fm.vee_is_fold,
            "vee_is_dual_fold": fm.vee_is_dual_fold,
            "holds": fm.holds(),
        }),
    );
    r.check(Check::exact("A_vee = transpose of A_tilde", fm.vee_is_transpose));
    r.check(Check::exact("2I - A_tilde, 2I - A_vee are the two foldings", fm.holds()));
    r.check(Check::exact("Clifford decomposition", p.clifford_holds()?));
    r.check(Check::within("Frobenius reciprocity", p.frobenius_residual(), CHARACTER_TOLERANCE));
    if name == PairName::TInO {
        r.check(Check::exact(
            "matches the printed matrix",
            matrix_isomorphism(&s.a_tilde, &printed_t_in_o()).is_some(),
        ));
    }
    Ok(r)
}

pub enum PoincareTarget {
    Group(GroupName),
    Pair(PairName),
}

pub fn parse_target(s: &str) -> Result<PoincareTarget> {
    if let Ok(p) = PairName::parse(s) {
        return Ok(PoincareTarget::Pair(p));
    }
    GroupName::parse(s)
        .map(PoincareTarget::Group)
        .map_err(|_| usage(format!("{s:?} is neither a group nor a pair")))
}

pub fn parse_kind(s: &str) -> Result<Kind> {
    Kind::parse(s).map_err(|_| usage(format!("unknown kind {s:?}; expected mckay|restricted|induced")))
}

pub fn poincare(target: &str, kind: Option<Kind>, series: usize, seed: u64) -> Result<Report> {
    let t = parse_target(target)?;
    let mut r = Report::new("poincare").input("target", target).input("series", series).input("seed", seed);
    let (sys, group_for_closed_form, extended) = match t {
        PoincareTarget::Group(name) => {
            if kind.is_some_and(|k| k != Kind::McKay) {
                return Err(usage("a single group only has the mckay kind"));
            }
            let g = build_group_seeded(name, seed)?;
            let m = mckay_matrix(&g)?;
            let sys = mckay_system(&g, &m.a, series)?;
            let ext = name.mckay_diagram().map(|n| lookup(&n)).transpose()?;
            (sys, g, ext)
        }
        PoincareTarget::Pair(name) => {
            let kind = kind.unwrap_or(Kind::Restricted);
            if kind == Kind::McKay {
                return Err(usage("a pair has the restricted or induced kind"));
            }
            let p = build_pair_seeded(name, seed)?;
            let s = slodowy_matrices(&p)?;
            let sys = pair_system(&p, &s, kind, series)?;
            let folded = lookup(&name.folded_name())?;
            (sys, p.h, Some(folded))
        }
    };
    r.inputs.insert("kind".into(), Value::from(sys.kind.name()));
    let gf = generating_function(&sys.b, sys.v0(), sys.kind)?;
    let p0 = &gf.components[0];
    r.set("B", json::int_matrix(&sys.b));
    r.set("rational_function", json::rational_function(p0));
    r.set("determinant", json::polynomial(&gf.det));
    let prefix = p0.series(series)?;
    r.set("series_prefix", Value::Array(prefix.iter().map(json::bigint).collect()));
    r.check(Check::exact("Kostant recurrence B v_n = v_(n-1) + v_(n+1)", sys.recurrence_holds()));
    r.check(Check::exact(
        format!("series agrees with characters to order {series}"),
        gf.series_agrees(&sys.multiplicities)?,
    ));
    if let Some(ext) = extended {
        // h of the Dynkin diagram under the simply-laced McKay graph of H.
        let h_name = group_for_closed_form.name.mckay_diagram();
        if let Some(h_ext) = h_name {
            let dynkin = lookup(&h_ext[1..])?;
            if let Some(h) = coxeter_transformation(&dynkin)?.coxeter_number() {
                let cf = kostant_closed_form(h, group_for_closed_form.order() as u64)?;
                r.set("closed_form", json!({ "h": cf.h, "a": cf.a, "b": cf.b }));
                r.check(Check::exact("[P]_0 equals the closed form", *p0 == cf.function));
            }
        }
        if is_even(p0) {
            r.check(Check::exact("[P]_0 equals X(t^2)/X~(t^2)", *p0 == ebeling_ratio(&ext)?));
        } else {
            r.set(
                "ebeling",
                Value::String("inapplicable: [P]_0 is odd and the McKay graph is an odd cycle".into()),
            );
        }
    }
    Ok(r)
}

pub fn catalog() -> Result<Report> {
    let mut r = Report::new("catalog");
    let mut entries = Vec::new();
    for name in catalog_names() {
        let d = lookup(&name)?;
        let c = cartan_matrix(&d)?;
        entries.push(json!({
            "name": name,
            "vertices": d.len(),
            "kind": c.kind.name(),
            "bipartite": d.bicolor().is_ok(),
            "marked": d.marked(),
        }));
    }
    r.set("diagrams", Value::Array(entries));
    Ok(r)
}
