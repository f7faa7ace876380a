use espkit::axioms::{check_system, is_esp, Op, System};
use espkit::enumerate::{canonical_form, default_labels, is_isomorphic};
use espkit::extend::{natural_extension, normal_extension};
use espkit::pseudo::{sp_complement, sp_complement_set_form, star_table, verify_sp_properties};
use espkit::{ElemSet, Poset};
use proptest::prelude::*;

/// Closed up-sets of a random order: a DAG on `0..n` (edges go upward in
/// index) relabeled by `perm`.
fn build(n: usize, edges: &[bool], perm: &[usize]) -> Poset {
    let mut le = vec![vec![false; n]; n];
    let mut k = 0;
    for i in 0..n {
        le[i][i] = true;
        for j in i + 1..n {
            le[i][j] = edges[k];
            k += 1;
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][m] && le[m][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let up = (0..n)
        .map(|x| {
            let src = perm.iter().position(|&v| v == x).unwrap();
            (0..n)
                .filter(|&j| le[src][j])
                .map(|j| perm[j])
                .collect::<ElemSet>()
        })
        .collect();
    Poset::from_up_sets("r".to_string(), default_labels(n), up)
}

fn poset_parts() -> impl Strategy<Value = (usize, Vec<bool>, Vec<usize>, Vec<usize>)> {
    (1usize..=8).prop_flat_map(|n| {
        let idx: Vec<usize> = (0..n).collect();
        (
            Just(n),
            proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2),
            Just(idx.clone()).prop_shuffle(),
            Just(idx).prop_shuffle(),
        )
    })
}

proptest! {
    #[test]
    fn canonical_form_ignores_labels((n, edges, a, b) in poset_parts()) {
        let p = build(n, &edges, &a);
        let q = build(n, &edges, &b);
        prop_assert_eq!(canonical_form(&p), canonical_form(&q));
        prop_assert!(is_isomorphic(&p, &q));
    }

    #[test]
    fn star_satisfies_the_sp_axioms((n, edges, a, _b) in poset_parts()) {
        let p = build(n, &edges, &a);
        for x in p.elems() {
            for y in p.down(x) {
                prop_assert_eq!(sp_complement(&p, x, y).unwrap(), sp_complement_set_form(&p, x, y));
            }
        }
        if let Ok(s) = star_table(&p) {
            prop_assert!(check_system(&p, Op::Partial(&s), System::Sp, None).unwrap().holds);
            prop_assert!(verify_sp_properties(&p, &s).holds());
        }
    }

    #[test]
    fn natural_extension_is_esp_and_natural((n, edges, a, _b) in poset_parts()) {
        let p = build(n, &edges, &a);
        let Ok(s) = star_table(&p) else { return Ok(()) };
        if let Ok(t) = natural_extension(&p, &s) {
            prop_assert!(is_esp(&p, &t).holds());
            prop_assert!(check_system(&p, Op::Total(&t), System::Esp, None).unwrap().holds);
            prop_assert!(check_system(&p, Op::Total(&t), System::Nat, None).unwrap().holds);
        }
    }

    #[test]
    fn total_normal_extension_is_esp((n, edges, a, _b) in poset_parts()) {
        let p = build(n, &edges, &a);
        let Ok(s) = star_table(&p) else { return Ok(()) };
        if let Some(t) = normal_extension(&p, &s).table {
            prop_assert!(p.is_upper_semilattice());
            prop_assert!(is_esp(&p, &t).holds());
        }
    }
}
