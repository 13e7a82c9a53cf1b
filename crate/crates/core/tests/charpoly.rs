mod common;

use common::{agrees_with_oracle, bicolored_c, is_palindromic_up_to_sign, tree_corpus};
use coxeter_core::charpoly::{
    charpoly_direct, charpoly_glue, charpoly_recursive, charpoly_split_at, frame, mahler_measure,
};
use coxeter_core::diagram::{catalog_lookup, free_trees, random_tree, Diagram};
use coxeter_core::IntPolynomial;
use proptest::prelude::*;

fn lehmer() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

#[test]
fn golden_set() {
    let want: [&[i64]; 4] = [&[-1, -1], &[1, 1, 1], &[-1, -1, -1, -1], &[1, 1, 1, 1, 1]];
    for (n, w) in (1..=4).zip(want) {
        let d = catalog_lookup(&format!("A{n}")).unwrap();
        assert_eq!(charpoly_direct(&d).unwrap(), IntPolynomial::from_i64(w), "A{n}");
    }
    let e10 = charpoly_direct(&catalog_lookup("E10").unwrap()).unwrap();
    assert_eq!(e10, lehmer());
    assert!((mahler_measure(&lehmer()).unwrap() - 1.176_280_818).abs() < 1e-6);
}

#[test]
fn corpus_is_large_enough() {
    let corpus = tree_corpus();
    assert!(corpus.len() >= 100);
    assert!(corpus.iter().all(|d| d.len() <= 11 && d.is_tree()));
}

#[test]
fn direct_matches_reflection_oracle() {
    for d in tree_corpus() {
        let p = charpoly_direct(&d).unwrap();
        assert!(agrees_with_oracle(&p, &bicolored_c(&d)), "{d:?}");
    }
}

#[test]
fn split_at_every_edge_matches_direct() {
    for d in tree_corpus() {
        let direct = charpoly_direct(&d).unwrap();
        for e in d.edges() {
            assert_eq!(charpoly_split_at(&d, e.i, e.j).unwrap(), direct, "{d:?} at {e:?}");
        }
    }
}

#[test]
fn leaf_recursion_matches_direct() {
    for d in tree_corpus() {
        assert_eq!(charpoly_recursive(&d).unwrap(), charpoly_direct(&d).unwrap());
    }
}

#[test]
fn gluing_matches_direct() {
    let mut bases: Vec<Diagram> = (1..=4).flat_map(free_trees).collect();
    let mut rng = common::rng(77);
    for _ in 0..6 {
        bases.push(random_tree(&mut rng, 3, true).unwrap());
    }
    let mut cases = 0;
    for base in &bases {
        for v in 0..base.len() {
            for n in 1..=3 {
                let glued = Diagram::glue_star(base, v, n).unwrap();
                if glued.len() > 11 {
                    continue;
                }
                let want = charpoly_direct(&glued).unwrap();
                assert_eq!(charpoly_glue(base, v, n).unwrap(), want, "{base:?} at {v}, n = {n}");
                cases += 1;
            }
        }
    }
    assert!(cases >= 40);
}

#[test]
fn frame_recursion_matches_direct() {
    for n in 1..=11 {
        let d = catalog_lookup(&format!("A{n}")).unwrap();
        assert_eq!(frame(n), charpoly_direct(&d).unwrap());
        assert!(agrees_with_oracle(&frame(n), &bicolored_c(&d)));
    }
}

#[test]
fn trees_are_palindromic() {
    for d in tree_corpus() {
        assert!(is_palindromic_up_to_sign(&charpoly_direct(&d).unwrap()), "{d:?}");
    }
}

#[test]
fn star_glue_examples() {
    let a1 = catalog_lookup("A1").unwrap();
    assert_eq!(
        charpoly_glue(&a1, 0, 4).unwrap(),
        charpoly_direct(&catalog_lookup("star(5)").unwrap()).unwrap()
    );
    let a2 = catalog_lookup("A2").unwrap();
    assert_eq!(
        charpoly_glue(&a2, 0, 3).unwrap(),
        charpoly_direct(&catalog_lookup("~E6").unwrap()).unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_laced_trees_split_and_recurse(seed in any::<u64>(), n in 2usize..=11) {
        let d = random_tree(&mut common::rng(seed), n, true).unwrap();
        let direct = charpoly_direct(&d).unwrap();
        prop_assert!(agrees_with_oracle(&direct, &bicolored_c(&d)));
        prop_assert_eq!(&charpoly_recursive(&d).unwrap(), &direct);
        let e = d.edges()[seed as usize % d.edges().len()];
        prop_assert_eq!(&charpoly_split_at(&d, e.i, e.j).unwrap(), &direct);
    }
}
