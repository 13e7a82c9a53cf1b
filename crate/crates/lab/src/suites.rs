//! Verification suites behind `verify`. Every case is independent, so the
//! cases of a suite run on the rayon pool and are reported in input order.

use anyhow::Result;
use coxeter_core::cartan::{cartan_matrix, CartanKind};
use coxeter_core::coxeter::{
    coxeter_element, coxeter_transformation, cyclotomic_part, jordan_structure, matrix_order,
    unipotent_order_of,
};
use coxeter_core::diagram::{catalog_lookup, catalog_names, Diagram};
use coxeter_core::matrix::Matrix;
use coxeter_core::mckay::{
    build_group_seeded, build_pair_seeded, folded_match, mckay_matrix, slodowy_matrices, GroupName,
    PairName,
};
use coxeter_core::poincare::{
    ebeling_ratio, folding_proportionality, generating_function, is_even, kostant_closed_form_for,
    mckay_system, pair_system, Kind,
};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::commands::UsageError;
use crate::report::{Check, Report};

/// Order of the dual-route series comparison.
pub const SERIES_ORDER: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ebeling,
    Folding,
    Kostant,
    McKay,
    Slodowy,
    Jordan,
    Affine,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Ebeling,
        Suite::Folding,
        Suite::Kostant,
        Suite::McKay,
        Suite::Slodowy,
        Suite::Jordan,
        Suite::Affine,
    ];

    pub fn parse(s: &str) -> Result<Vec<Suite>> {
        let one = match s {
            "ebeling" => Suite::Ebeling,
            "folding" => Suite::Folding,
            "kostant" => Suite::Kostant,
            "mckay" => Suite::McKay,
            "slodowy" => Suite::Slodowy,
            "jordan" => Suite::Jordan,
            "affine" => Suite::Affine,
            "all" => return Ok(Suite::ALL.to_vec()),
            _ => {
                return Err(UsageError(format!(
                    "unknown suite {s:?}; expected ebeling|folding|kostant|mckay|slodowy|jordan|affine|all"
                ))
                .into())
            }
        };
        Ok(vec![one])
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ebeling => "ebeling",
            Suite::Folding => "folding",
            Suite::Kostant => "kostant",
            Suite::McKay => "mckay",
            Suite::Slodowy => "slodowy",
            Suite::Jordan => "jordan",
            Suite::Affine => "affine",
        }
    }
}

/// The groups of the McKay correspondence checked by default.
pub fn mckay_groups() -> Vec<GroupName> {
    let mut v: Vec<GroupName> = (2..=8).map(GroupName::Cyclic).collect();
    v.extend((2..=6).map(GroupName::BinaryDihedral));
    v.extend([GroupName::Tetrahedral, GroupName::Octahedral, GroupName::Icosahedral]);
    v
}

/// The four pairs `H ◁ G`, the parametric ones at two sizes each.
pub fn slodowy_pairs() -> Vec<PairName> {
    vec![
        PairName::D2InT,
        PairName::TInO,
        PairName::DihedralInDihedral(3),
        PairName::DihedralInDihedral(4),
        PairName::CyclicInDihedral(2),
        PairName::CyclicInDihedral(3),
    ]
}

/// `ℤ/n` for odd `n` has an odd-cycle McKay graph and an odd `[P]₀`.
pub fn ebeling_applies(g: GroupName) -> bool {
    !matches!(g, GroupName::Cyclic(n) if n % 2 == 1)
}

struct CaseResult {
    detail: Value,
    checks: Vec<Check>,
}

fn failed(label: &str, e: anyhow::Error) -> CaseResult {
    CaseResult {
        detail: json!({ "case": label, "error": e.to_string() }),
        checks: vec![Check::exact(format!("{label}: computation"), false)],
    }
}

fn run_cases<T: Sync>(
    items: &[T],
    label: impl Fn(&T) -> String + Sync,
    case: impl Fn(&T) -> Result<CaseResult> + Sync,
) -> Vec<CaseResult> {
    items
        .par_iter()
        .map(|x| case(x).unwrap_or_else(|e| failed(&label(x), e)))
        .collect()
}

fn ebeling(seed: u64) -> Vec<CaseResult> {
    let mut out = run_cases(
        &mckay_groups(),
        |g| g.display(),
        |&g| {
            let label = g.display();
            let grp = build_group_seeded(g, seed)?;
            let m = mckay_matrix(&grp)?;
            let sys = mckay_system(&grp, &m.a, SERIES_ORDER)?;
            let gf = generating_function(&sys.b, sys.v0(), Kind::McKay)?;
            let p0 = &gf.components[0];
            let mut checks = vec![Check::exact(
                format!("{label}: series to order {SERIES_ORDER}"),
                gf.series_agrees(&sys.multiplicities)?,
            )];
            let status = if ebeling_applies(g) {
                let ext = catalog_lookup(&g.mckay_diagram().unwrap_or_default())?;
                checks.push(Check::exact(format!("{label}: [P]_0 = X(t^2)/X~(t^2)"), *p0 == ebeling_ratio(&ext)?));
                "checked"
            } else {
                checks.push(Check::exact(format!("{label}: [P]_0 is odd"), !is_even(p0)));
                "inapplicable (odd cycle)"
            };
            Ok(CaseResult {
                detail: json!({ "case": label, "identity": status }),
                checks,
            })
        },
    );
    let kinds: Vec<(PairName, Kind)> = slodowy_pairs()
        .into_iter()
        .flat_map(|p| [(p, Kind::Restricted), (p, Kind::Induced)])
        .collect();
    out.extend(run_cases(
        &kinds,
        |(p, k)| format!("{} {}", p.display(), k.name()),
        |&(p, kind)| {
            let label = format!("{} {}", p.display(), kind.name());
            let pair = build_pair_seeded(p, seed)?;
            let s = slodowy_matrices(&pair)?;
            let sys = pair_system(&pair, &s, kind, SERIES_ORDER)?;
            let gf = generating_function(&sys.b, sys.v0(), kind)?;
            let folded = catalog_lookup(&p.folded_name())?;
            Ok(CaseResult {
                detail: json!({ "case": label, "folded": p.folded_name() }),
                checks: vec![
                    Check::exact(
                        format!("{label}: series to order {SERIES_ORDER}"),
                        gf.series_agrees(&sys.multiplicities)?,
                    ),
                    Check::exact(
                        format!("{label}: [P]_0 = X(t^2)/X~(t^2)"),
                        gf.components[0] == ebeling_ratio(&folded)?,
                    ),
                ],
            })
        },
    ));
    out
}

fn folding() -> Vec<CaseResult> {
    match folding_proportionality(4..=8) {
        Ok(cases) => cases
            .iter()
            .map(|c| CaseResult {
                detail: json!({
                    "case": c.label,
                    "simply_laced": [c.simply_laced.0, c.simply_laced.1],
                    "folded": [c.folded.0, c.folded.1],
                    "closed_form": crate::json::rational_function(&c.closed_form),
                }),
                checks: vec![Check::exact(format!("{}: ratios agree with closed form", c.label), c.holds())],
            })
            .collect(),
        Err(e) => vec![failed("folding", e.into())],
    }
}

fn kostant(seed: u64) -> Vec<CaseResult> {
    run_cases(
        &mckay_groups(),
        |g| g.display(),
        |&g| {
            let label = g.display();
            let grp = build_group_seeded(g, seed)?;
            let cf = kostant_closed_form_for(&grp)?;
            let m = mckay_matrix(&grp)?;
            let sys = mckay_system(&grp, &m.a, SERIES_ORDER)?;
            let gf = generating_function(&sys.b, sys.v0(), Kind::McKay)?;
            Ok(CaseResult {
                detail: json!({ "case": label, "h": cf.h, "a": cf.a, "b": cf.b }),
                checks: vec![
                    Check::exact(format!("{label}: recurrence"), sys.recurrence_holds()),
                    Check::exact(format!("{label}: [P]_0 = closed form"), gf.components[0] == cf.function),
                ],
            })
        },
    )
}

fn mckay(seed: u64) -> Vec<CaseResult> {
    run_cases(
        &mckay_groups(),
        |g| g.display(),
        |&g| {
            let label = g.display();
            let grp = build_group_seeded(g, seed)?;
            let m = mckay_matrix(&grp)?;
            Ok(CaseResult {
                detail: json!({ "case": label, "diagram": m.matched_diagram }),
                checks: vec![Check::exact(
                    format!("{label}: 2I - A matches {}", m.matched_diagram.clone().unwrap_or_default()),
                    m.permutation.is_some(),
                )],
            })
        },
    )
}

fn slodowy(seed: u64) -> Vec<CaseResult> {
    run_cases(
        &slodowy_pairs(),
        |p| p.display(),
        |&p| {
            let label = p.display();
            let pair = build_pair_seeded(p, seed)?;
            let s = slodowy_matrices(&pair)?;
            let fm = folded_match(&pair, &s)?;
            Ok(CaseResult {
                detail: json!({ "case": label, "folded": fm.folded }),
                checks: vec![
                    Check::exact(format!("{label}: A_vee = A_tilde^t"), fm.vee_is_transpose),
                    Check::exact(format!("{label}: folded Cartan matrices"), fm.holds()),
                ],
            })
        },
    )
}

/// Bicolored `C` when it exists, otherwise `s_0 ⋯ s_{n-1}`.
pub fn some_coxeter_element(d: &Diagram) -> Result<Matrix<BigInt>> {
    Ok(match coxeter_transformation(d) {
        Ok(a) => a.c,
        Err(_) => coxeter_element(d, &(0..d.len()).collect::<Vec<_>>())?,
    })
}

fn jordan() -> Vec<CaseResult> {
    let mut names = catalog_names();
    names.extend((3..=7).map(|n| format!("kolmykov({n})")));
    names.dedup();
    run_cases(
        &names,
        Clone::clone,
        |name| {
            let d = catalog_lookup(name)?;
            let kind = cartan_matrix(&d)?.kind;
            let j = jordan_structure(&some_coxeter_element(&d)?);
            let expected = match kind {
                CartanKind::Finite => Some(vec![]),
                CartanKind::Affine => Some(vec![(2, 1)]),
                _ if name.starts_with("kolmykov") => {
                    Some(vec![(2, cartan_matrix(&d)?.ker_b_dim)])
                }
                _ => None,
            };
            let checks = expected
                .map(|e| vec![Check::exact(format!("{name}: Jordan blocks"), j.nontrivial == e)])
                .unwrap_or_default();
            Ok(CaseResult {
                detail: json!({ "case": name, "kind": kind.name(), "blocks_2x2": j.blocks_2x2() }),
                checks,
            })
        },
    )
}

fn affine() -> Vec<CaseResult> {
    let names: Vec<String> = catalog_names()
        .into_iter()
        .filter(|n| n.starts_with('~'))
        .collect();
    run_cases(
        &names,
        Clone::clone,
        |name| {
            let d = catalog_lookup(name)?;
            let c = some_coxeter_element(&d)?;
            let (_, rest) = cyclotomic_part(&c.charpoly());
            let n = unipotent_order_of(&c);
            Ok(CaseResult {
                detail: json!({ "case": name, "unipotent_order": n }),
                checks: vec![
                    Check::exact(format!("{name}: eigenvalues are roots of unity"), rest.degree() == Some(0)),
                    Check::exact(format!("{name}: (C^N - I)^2 = 0"), n.is_some()),
                    Check::exact(format!("{name}: C has infinite order"), matrix_order(&c).is_none()),
                ],
            })
        },
    )
}

pub fn verify(suites: &[Suite], seed: u64) -> Report {
    let mut r = Report::new("verify")
        .input("suites", suites.iter().map(|s| s.name()).collect::<Vec<_>>())
        .input("seed", seed);
    for &s in suites {
        let cases = match s {
            Suite::Ebeling => ebeling(seed),
            Suite::Folding => folding(),
            Suite::Kostant => kostant(seed),
            Suite::McKay => mckay(seed),
            Suite::Slodowy => slodowy(seed),
            Suite::Jordan => jordan(),
            Suite::Affine => affine(),
        };
        r.set(s.name(), Value::Array(cases.iter().map(|c| c.detail.clone()).collect()));
        for c in cases {
            for check in c.checks {
                r.check(check);
            }
        }
    }
    r
}
