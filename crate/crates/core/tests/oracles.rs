//! Library values against a naive boolean-matrix model, over every labeled
//! poset with at most five elements.

use espkit::enumerate::{enumerate_posets, Dedup};
use espkit::extend::{natural_extension, normal_extension, pure_extension};
use espkit::pseudo::{rp_complement, sp_complement, star_table, wrp_complement};
use espkit::Poset;

struct Model {
    n: usize,
    le: Vec<Vec<bool>>,
}

impl Model {
    fn of(p: &Poset) -> Model {
        let n = p.n();
        let le = (0..n)
            .map(|x| (0..n).map(|y| p.leq(x, y)).collect())
            .collect();
        Model { n, le }
    }

    fn greatest(&self, set: &[usize]) -> Option<usize> {
        set.iter()
            .copied()
            .find(|&g| set.iter().all(|&u| self.le[u][g]))
    }

    fn sp(&self, x: usize, y: usize) -> Option<usize> {
        let c: Vec<usize> = (0..self.n)
            .filter(|&u| {
                self.le[y][u]
                    && (0..self.n)
                        .all(|w| !(self.le[y][w] && self.le[w][u] && self.le[w][x]) || w == y)
            })
            .collect();
        self.greatest(&c)
    }

    fn rp(&self, x: usize, y: usize) -> Option<usize> {
        let c: Vec<usize> = (0..self.n)
            .filter(|&u| (0..self.n).all(|w| !(self.le[w][u] && self.le[w][x]) || self.le[w][y]))
            .collect();
        self.greatest(&c)
    }

    fn wrp(&self, x: usize, y: usize) -> Option<usize> {
        let c: Vec<usize> = (0..self.n)
            .filter(|&u| (0..self.n).all(|w| (self.le[w][u] && self.le[w][x]) == self.le[w][y]))
            .collect();
        self.greatest(&c)
    }

    fn top_of(&self, x: usize) -> Option<usize> {
        let up: Vec<usize> = (0..self.n).filter(|&u| self.le[x][u]).collect();
        self.greatest(&up)
    }

    fn natural(&self, x: usize, y: usize) -> Option<usize> {
        if self.le[y][x] {
            self.sp(x, y)
        } else {
            self.top_of(y)
        }
    }

    fn pure(&self, x: usize, y: usize) -> Option<usize> {
        if self.le[y][x] {
            self.sp(x, y)
        } else if self.le[x][y] {
            self.top_of(x)
        } else {
            Some(y)
        }
    }

    fn normal(&self, x: usize, y: usize) -> Option<usize> {
        let values: Vec<usize> = (0..self.n)
            .filter(|&z| self.le[x][z] && self.le[y][z])
            .map(|z| self.sp(z, y))
            .collect::<Option<_>>()?;
        self.greatest(&values)
    }

    fn star_total(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| !self.le[y][x] || self.sp(x, y).is_some()))
    }
}

fn every_poset(max_n: usize) -> impl Iterator<Item = Poset> {
    (1..=max_n).flat_map(|n| enumerate_posets(n, Dedup::Labeled).unwrap())
}

#[test]
fn local_complements_match_the_model() {
    for p in every_poset(5) {
        let m = Model::of(&p);
        for x in p.elems() {
            for y in p.elems() {
                assert_eq!(rp_complement(&p, x, y), m.rp(x, y), "{p:?} rp({x},{y})");
                assert_eq!(wrp_complement(&p, x, y), m.wrp(x, y), "{p:?} wrp({x},{y})");
                if p.leq(y, x) {
                    assert_eq!(sp_complement(&p, x, y).unwrap(), m.sp(x, y), "{p:?}");
                } else {
                    assert!(sp_complement(&p, x, y).is_err());
                }
            }
        }
    }
}

#[test]
fn extensions_match_the_model() {
    let mut checked = 0;
    for p in every_poset(5) {
        let m = Model::of(&p);
        assert_eq!(star_table(&p).is_ok(), m.star_total(), "{p:?}");
        let Ok(s) = star_table(&p) else { continue };
        checked += 1;
        let cells = |f: &dyn Fn(usize, usize) -> Option<usize>| -> Option<Vec<usize>> {
            p.elems()
                .flat_map(|x| p.elems().map(move |y| (x, y)))
                .map(|(x, y)| f(x, y))
                .collect()
        };

        let natural = cells(&|x, y| m.natural(x, y));
        let got = natural_extension(&p, &s).ok();
        assert_eq!(
            got.map(|t| t.values().collect::<Vec<_>>()),
            natural,
            "{p:?}"
        );

        let pure = cells(&|x, y| m.pure(x, y));
        let got = pure_extension(&p, &s).ok();
        assert_eq!(got.map(|t| t.values().collect::<Vec<_>>()), pure, "{p:?}");

        let normal = normal_extension(&p, &s);
        for x in p.elems() {
            for y in p.elems() {
                assert_eq!(normal.get(x, y), m.normal(x, y), "{p:?} normal({x},{y})");
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn structure_flags_match_the_model() {
    for p in every_poset(5) {
        let m = Model::of(&p);
        let n = m.n;
        let greatest_lb = |x: usize, y: usize| {
            let lb: Vec<usize> = (0..n).filter(|&w| m.le[w][x] && m.le[w][y]).collect();
            m.greatest(&lb)
        };
        let least_ub = |x: usize, y: usize| {
            let ub: Vec<usize> = (0..n).filter(|&w| m.le[x][w] && m.le[y][w]).collect();
            ub.iter().copied().find(|&l| ub.iter().all(|&u| m.le[l][u]))
        };
        let meets = (0..n).all(|x| (0..n).all(|y| greatest_lb(x, y).is_some()));
        let joins = (0..n).all(|x| (0..n).all(|y| least_ub(x, y).is_some()));
        let chain = (0..n).all(|x| (0..n).all(|y| m.le[x][y] || m.le[y][x]));
        assert_eq!(p.is_lower_semilattice(), meets, "{p:?}");
        assert_eq!(p.is_upper_semilattice(), joins, "{p:?}");
        assert_eq!(p.is_lattice(), meets && joins, "{p:?}");
        assert_eq!(p.is_chain(), chain, "{p:?}");
        for x in 0..n {
            for y in 0..n {
                assert_eq!(p.meet(x, y), greatest_lb(x, y));
                assert_eq!(p.join(x, y), least_ub(x, y));
            }
        }
    }
}
