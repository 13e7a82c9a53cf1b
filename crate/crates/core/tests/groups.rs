use coxeter_core::charpoly::charpoly_direct;
use coxeter_core::diagram::{catalog_lookup, matrix_isomorphism};
use coxeter_core::matrix::Matrix;
use coxeter_core::mckay::{
    build_group, build_group_seeded, build_pair, folded_match, mckay_matrix, orthogonality_residual,
    slodowy_matrices, two_minus, GroupName, PairName,
};
use coxeter_core::poincare::{
    ebeling_ratio, folding_proportionality, generating_function, is_even, kostant_closed_form_for,
    mckay_system, pair_system, Kind,
};
use coxeter_core::RationalFunction;
use num_bigint::BigInt;

const ORDER: usize = 30;

fn groups() -> Vec<GroupName> {
    let mut v: Vec<GroupName> = (2..=8).map(GroupName::Cyclic).collect();
    v.extend((2..=6).map(GroupName::BinaryDihedral));
    v.extend([GroupName::Tetrahedral, GroupName::Octahedral, GroupName::Icosahedral]);
    v
}

fn pairs() -> Vec<PairName> {
    vec![
        PairName::D2InT,
        PairName::TInO,
        PairName::DihedralInDihedral(3),
        PairName::DihedralInDihedral(4),
        PairName::CyclicInDihedral(2),
        PairName::CyclicInDihedral(3),
    ]
}

#[test]
fn character_tables_are_orthogonal() {
    for name in groups() {
        let g = build_group(name).unwrap();
        assert!(orthogonality_residual(&g.group, &g.table) < 1e-8, "{name:?}");
        assert_eq!(g.degrees().iter().map(|d| d * d).sum::<usize>(), g.order());
        assert_eq!(g.table.rows.len(), g.group.classes.len());
    }
}

#[test]
fn tables_do_not_depend_on_the_seed() {
    for name in [GroupName::Octahedral, GroupName::BinaryDihedral(5)] {
        let a = build_group_seeded(name, 1).unwrap();
        let b = build_group_seeded(name, 99).unwrap();
        for (ra, rb) in a.table.rows.iter().zip(&b.table.rows) {
            assert!(ra.iter().zip(rb).all(|(x, y)| (x - y).norm() < 1e-8));
        }
    }
}

#[test]
fn mckay_correspondence() {
    for name in groups() {
        let g = build_group(name).unwrap();
        let m = mckay_matrix(&g).unwrap();
        let ext = catalog_lookup(&name.mckay_diagram().unwrap()).unwrap();
        let p = m.permutation.expect("permutation match");
        let k = ext.cartan_matrix();
        let two = two_minus(&m.a);
        for i in 0..p.len() {
            for j in 0..p.len() {
                assert_eq!(two[(i, j)], k[(p[i], p[j])], "{name:?}");
            }
        }
        assert_eq!(Some(p[0]), ext.marked());
    }
}

#[test]
fn slodowy_fixture_and_folding() {
    let printed = Matrix::from_i64(&[
        &[0, 1, 0, 0, 0],
        &[1, 0, 2, 0, 0],
        &[0, 1, 0, 1, 0],
        &[0, 0, 1, 0, 1],
        &[0, 0, 0, 1, 0],
    ]);
    let pair = build_pair(PairName::TInO).unwrap();
    let s = slodowy_matrices(&pair).unwrap();
    assert!(matrix_isomorphism(&s.a_tilde, &printed).is_some());
    assert_eq!(s.a_vee, s.a_tilde.transpose());
    for name in pairs() {
        let pair = build_pair(name).unwrap();
        assert!(pair.clifford_holds().unwrap());
        assert!(pair.frobenius_residual() < 1e-8);
        let s = slodowy_matrices(&pair).unwrap();
        let fm = folded_match(&pair, &s).unwrap();
        assert!(fm.holds(), "{name:?}: {fm:?}");
    }
}

fn zero_component(b: &Matrix<BigInt>, v0: &[i64], kind: Kind) -> RationalFunction {
    generating_function(b, v0, kind).unwrap().components[0].clone()
}

#[test]
fn ebeling_identity_for_groups() {
    for name in groups() {
        let g = build_group(name).unwrap();
        let m = mckay_matrix(&g).unwrap();
        let sys = mckay_system(&g, &m.a, ORDER).unwrap();
        assert!(sys.recurrence_holds(), "{name:?}");
        let gf = generating_function(&sys.b, sys.v0(), Kind::McKay).unwrap();
        assert!(gf.series_agrees(&sys.multiplicities).unwrap(), "{name:?}");
        let p0 = &gf.components[0];
        if let GroupName::Cyclic(n) = name {
            if n % 2 == 1 {
                // The McKay graph is an odd cycle and [P]₀ is odd-degree.
                assert!(!is_even(p0));
                continue;
            }
        }
        let ext = catalog_lookup(&name.mckay_diagram().unwrap()).unwrap();
        assert_eq!(*p0, ebeling_ratio(&ext).unwrap(), "{name:?}");
    }
}

#[test]
fn ebeling_identity_for_pairs() {
    for name in pairs() {
        let pair = build_pair(name).unwrap();
        let s = slodowy_matrices(&pair).unwrap();
        let folded = catalog_lookup(&name.folded_name()).unwrap();
        for kind in [Kind::Restricted, Kind::Induced] {
            let sys = pair_system(&pair, &s, kind, ORDER).unwrap();
            assert!(sys.recurrence_holds(), "{name:?} {kind:?}");
            let gf = generating_function(&sys.b, sys.v0(), kind).unwrap();
            assert!(gf.series_agrees(&sys.multiplicities).unwrap());
            // Both foldings share their characteristic polynomials.
            let ratio = ebeling_ratio(&folded).unwrap();
            assert_eq!(gf.components[0], ratio, "{name:?} {kind:?}");
            assert_eq!(ebeling_ratio(&folded.transpose()).unwrap(), ratio);
        }
    }
}

#[test]
fn kostant_closed_forms() {
    for name in groups() {
        let g = build_group(name).unwrap();
        let cf = kostant_closed_form_for(&g).unwrap();
        assert_eq!(cf.a + cf.b, cf.h + 2);
        assert_eq!(cf.a * cf.b, 2 * g.order() as u64);
        let m = mckay_matrix(&g).unwrap();
        let sys = mckay_system(&g, &m.a, 2).unwrap();
        assert_eq!(zero_component(&sys.b, sys.v0(), Kind::McKay), cf.function, "{name:?}");
    }
    // Binary icosahedral: invariants of degrees 12, 20, 30.
    let cf = kostant_closed_form_for(&build_group(GroupName::Icosahedral).unwrap()).unwrap();
    assert_eq!((cf.h, cf.a, cf.b), (30, 12, 20));
}

#[test]
fn folding_identities() {
    let cases = folding_proportionality(4..=8).unwrap();
    assert!(cases.iter().all(|c| c.holds()));
    let labels: std::collections::BTreeSet<String> =
        cases.iter().map(|c| c.label.replace(|ch: char| ch.is_ascii_digit(), "")).collect();
    assert_eq!(labels.len(), 4, "{labels:?}");
    assert_eq!(cases.len(), 2 + 2 * 5);
    // Independently: the folded ratio for E6 → F4 from scratch.
    let ratio = |a: &str, b: &str| {
        RationalFunction::new(
            charpoly_direct(&catalog_lookup(a).unwrap()).unwrap().with_positive_leading(),
            charpoly_direct(&catalog_lookup(b).unwrap()).unwrap().with_positive_leading(),
        )
        .unwrap()
    };
    assert_eq!(ratio("E6", "~E6"), ratio("F4", "~F41"));
}
