//! Small named posets that recur throughout the docs and tests.

use crate::poset::{Decl, Poset};

fn covers(pairs: &[(&str, &str)]) -> Vec<Decl> {
    pairs
        .iter()
        .map(|&(x, y)| Decl::Cover(x.to_string(), y.to_string()))
        .collect()
}

/// `0 < a, b < c, d < 1` with `a, b` both below both of `c, d`.
pub fn hexagon() -> Poset {
    Poset::build(
        "hex",
        &["0", "a", "b", "c", "d", "1"],
        &covers(&[
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "1"),
            ("d", "1"),
        ]),
    )
    .expect("hexagon is a poset")
}

/// Two disjoint chains `a < b` and `c < d`.
pub fn two_chains() -> Poset {
    Poset::build(
        "two",
        &["a", "b", "c", "d"],
        &covers(&[("a", "b"), ("c", "d")]),
    )
    .expect("two chains form a poset")
}

/// `0 < a < b < 1` and `0 < a < c < 1`.
pub fn split_diamond() -> Poset {
    Poset::build(
        "five",
        &["0", "a", "b", "c", "1"],
        &covers(&[("0", "a"), ("a", "b"), ("a", "c"), ("b", "1"), ("c", "1")]),
    )
    .expect("split diamond is a poset")
}

/// `0 < a` and `0 < b` with no top.
pub fn vee() -> Poset {
    Poset::build("vee", &["0", "a", "b"], &covers(&[("0", "a"), ("0", "b")]))
        .expect("vee is a poset")
}

/// Chain on the given labels, in order.
pub fn chain(labels: &[&str]) -> Poset {
    let decls: Vec<Decl> = labels
        .windows(2)
        .map(|w| Decl::Cover(w[0].to_string(), w[1].to_string()))
        .collect();
    Poset::build(&format!("chain{}", labels.len()), labels, &decls).expect("chain is a poset")
}
