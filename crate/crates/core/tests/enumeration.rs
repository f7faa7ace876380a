use std::collections::HashSet;

use espkit::enumerate::{canonical_form, enumerate_posets, is_isomorphic, Dedup};
use espkit::Poset;
use itertools::Itertools;

fn relation(p: &Poset) -> Vec<bool> {
    p.elems()
        .flat_map(|x| p.elems().map(move |y| p.leq(x, y)))
        .collect()
}

/// Partial orders on `n` points, by trying every off-diagonal relation.
fn naive_orders(n: usize) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    let mut out = Vec::new();
    for bits in 0u32..1 << pairs.len() {
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for (k, &(x, y)) in pairs.iter().enumerate() {
            le[x * n + y] = bits >> k & 1 == 1;
        }
        let antisym = (0..n).all(|x| (0..n).all(|y| x == y || !(le[x * n + y] && le[y * n + x])));
        let trans = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| !(le[x * n + y] && le[y * n + z]) || le[x * n + z]))
        });
        if antisym && trans {
            out.push(le);
        }
    }
    out
}

/// Lexicographically least relabeling, over all permutations.
fn naive_canon(n: usize, le: &[bool]) -> Vec<bool> {
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut r = vec![false; n * n];
            for x in 0..n {
                for y in 0..n {
                    r[perm[x] * n + perm[y]] = le[x * n + y];
                }
            }
            r
        })
        .min()
        .unwrap()
}

#[test]
fn labeled_stream_is_exactly_the_set_of_orders() {
    for n in 1..=4 {
        let expected: HashSet<Vec<bool>> = naive_orders(n).into_iter().collect();
        let got: Vec<Vec<bool>> = enumerate_posets(n, Dedup::Labeled)
            .unwrap()
            .map(|p| relation(&p))
            .collect();
        assert_eq!(got.len(), expected.len(), "n = {n}");
        assert_eq!(got.into_iter().collect::<HashSet<_>>(), expected, "n = {n}");
    }
}

#[test]
fn iso_stream_has_one_poset_per_class() {
    let known = [1, 2, 5, 16, 63];
    for n in 1..=5 {
        let orders = if n <= 4 {
            naive_orders(n)
        } else {
            enumerate_posets(n, Dedup::Labeled)
                .unwrap()
                .map(|p| relation(&p))
                .collect()
        };
        let classes: HashSet<Vec<bool>> = orders.iter().map(|le| naive_canon(n, le)).collect();
        assert_eq!(classes.len(), known[n - 1], "n = {n}");

        let reps: Vec<Vec<bool>> = enumerate_posets(n, Dedup::UpToIso)
            .unwrap()
            .map(|p| naive_canon(n, &relation(&p)))
            .collect();
        assert_eq!(reps.len(), known[n - 1], "n = {n}");
        assert_eq!(reps.into_iter().collect::<HashSet<_>>(), classes, "n = {n}");
    }
}

#[test]
fn canonical_form_decides_isomorphism() {
    let posets: Vec<Poset> = enumerate_posets(4, Dedup::Labeled).unwrap().collect();
    for p in &posets {
        for q in posets.iter().step_by(7) {
            let naive = naive_canon(4, &relation(p)) == naive_canon(4, &relation(q));
            assert_eq!(is_isomorphic(p, q), naive);
            assert_eq!(canonical_form(p) == canonical_form(q), naive);
        }
    }
}

#[test]
fn size_caps() {
    assert!(enumerate_posets(0, Dedup::Labeled).is_err());
    assert!(enumerate_posets(8, Dedup::Labeled).is_err());
    assert!(enumerate_posets(9, Dedup::UpToIso).is_err());
}
