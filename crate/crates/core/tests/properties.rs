//! Property suites: codec, suitable connectedness against a brute-force
//! oracle, the hidden-crossing law, the skein relation, simplification,
//! mirror symmetry and the braid-plan solver.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use toric_core::diagram::{simplify, trace, LinkDiagram, Sign};
use toric_core::enumerate::{enumerate, EnumOptions};
use toric_core::generators::solve_hv;
use toric_core::invariants::{alexander, homfly, LaurentPoly2, DEFAULT_BUDGET};
use toric_core::{Boundary, Mosaic, Tile};

/// Connection points `[left, top, right, bottom]` per tile, written out
/// independently of the library's profiles.
const POINTS: [[bool; 4]; 11] = [
    [false, false, false, false],
    [true, false, false, true],
    [false, false, true, true],
    [false, true, true, false],
    [true, true, false, false],
    [true, false, true, false],
    [false, true, false, true],
    [true, true, true, true],
    [true, true, true, true],
    [true, true, true, true],
    [true, true, true, true],
];

fn oracle_toric(n: usize, kinds: &[u8]) -> bool {
    let at = |r: usize, c: usize| POINTS[kinds[(r % n) * n + c % n] as usize];
    (0..n).all(|r| (0..n).all(|c| at(r, c)[2] == at(r, c + 1)[0] && at(r, c)[3] == at(r + 1, c)[1]))
}

fn mosaic(n: usize, kinds: &[u8]) -> Mosaic {
    Mosaic::new(n, kinds.iter().map(|&k| Tile::new(k).unwrap()).collect()).unwrap()
}

/// Every `n`-grid of tile kinds, as base-11 counters.
fn all_grids(n: usize) -> impl Iterator<Item = Vec<u8>> {
    let cells = n * n;
    (0..11usize.pow(cells as u32)).map(move |mut k| {
        let mut v = vec![0u8; cells];
        for slot in v.iter_mut().rev() {
            *slot = (k % 11) as u8;
            k /= 11;
        }
        v
    })
}

fn suitable(n: usize) -> Vec<Mosaic> {
    enumerate(&EnumOptions::new(n)).unwrap().collect()
}

fn n3_pool() -> &'static [Mosaic] {
    static POOL: OnceLock<Vec<Mosaic>> = OnceLock::new();
    POOL.get_or_init(|| enumerate(&EnumOptions::symmetric(3)).unwrap().collect())
}

/// Diagrams with one to six crossings: traced 2- and 3-mosaics and small
/// table knots.
fn small_diagrams() -> &'static [LinkDiagram] {
    static POOL: OnceLock<Vec<LinkDiagram>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out: Vec<LinkDiagram> = suitable(2)
            .iter()
            .chain(n3_pool().iter().step_by(97))
            .map(|m| trace(m).unwrap())
            .filter(|d| (1..=6).contains(&d.crossing_count()))
            .collect();
        let pd = include_str!("../data/prime_knots_pd.tsv");
        for line in pd.lines().filter(|l| !l.is_empty()) {
            let d = LinkDiagram::from_pd(line.split_once('\t').unwrap().1).unwrap();
            if (1..=6).contains(&d.crossing_count()) {
                out.push(d);
            }
        }
        out
    })
}

fn tile_kinds(n: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..11, n * n)
}

#[test]
fn connectedness_matches_oracle_for_small_grids() {
    for n in 1..=2 {
        let expected: BTreeSet<String> = all_grids(n)
            .filter(|k| oracle_toric(n, k))
            .map(|k| mosaic(n, &k).encode())
            .collect();
        for k in all_grids(n) {
            assert_eq!(mosaic(n, &k).is_suitably_connected(Boundary::Toric), oracle_toric(n, &k), "{k:?}");
        }
        let enumerated: BTreeSet<String> = suitable(n).iter().map(Mosaic::encode).collect();
        assert_eq!(enumerated, expected, "n = {n}");
    }
}

#[test]
fn hidden_crossing_law_on_small_mosaics() {
    for n in 1..=2 {
        for m in suitable(n) {
            let a = (0..n).filter(|&r| POINTS[m.get(r, 0).kind() as usize][0]).count();
            let b = (0..n).filter(|&c| POINTS[m.get(0, c).kind() as usize][1]).count();
            let d = trace(&m).unwrap();
            assert_eq!(m.hidden_crossing_count().unwrap(), a * b, "{m}");
            assert_eq!(d.crossing_count(), m.crossing_tiles() + a * b, "{m}");
        }
    }
}

#[test]
fn solver_matches_exhaustive_oracle() {
    // The constraint system restated directly, with n = q - (h + v) >= 1.
    let ok = |p: i64, q: i64, h: i64, v: i64| {
        q - 2 * (h + v + p) + 4 >= 0 && h + 3 * v <= q - 3 * p + 4 && -3 * h - v - p + q + 4 >= 0 && h >= v && q - h - v >= 1
    };
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    for q in 3..=40 {
        for p in 2..q {
            if gcd(p, q) != 1 {
                continue;
            }
            let best = (0..=q)
                .flat_map(|h| (0..=q).map(move |v| (h, v)))
                .filter(|&(h, v)| ok(p, q, h, v))
                .min_by_key(|&(h, v)| (q - h - v, h, v));
            let got = solve_hv(p, q).unwrap().map(|plan| (plan.h, plan.v));
            assert_eq!(got, best, "({p},{q})");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn codec_round_trip(n in 1usize..=6, seed in prop::collection::vec(0u8..11, 36)) {
        let m = mosaic(n, &seed[..n * n]);
        let code = m.encode();
        prop_assert_eq!(code.len(), n * n);
        let back = Mosaic::decode(&code).unwrap();
        prop_assert_eq!(back.encode(), code);
        prop_assert_eq!(back, m);
    }

    #[test]
    fn connectedness_matches_oracle_n4(kinds in tile_kinds(4)) {
        prop_assert_eq!(mosaic(4, &kinds).is_suitably_connected(Boundary::Toric), oracle_toric(4, &kinds));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// `v^-1 P(L+) - v P(L-) = z P(L0)` at a random crossing.
    #[test]
    fn skein_residual_vanishes(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let pool = small_diagrams();
        let d = &pool[i.index(pool.len())];
        let x = j.index(d.crossing_count());
        let (plus, minus) = match d.sign(x) {
            Sign::Positive => (d.clone(), d.switched(x)),
            Sign::Negative => (d.switched(x), d.clone()),
        };
        let p = |d: &LinkDiagram| homfly(d, DEFAULT_BUDGET).unwrap();
        let lhs = &p(&plus).shift([-1, 0]) - &p(&minus).shift([1, 0]);
        let residual = &lhs - &p(&d.smoothed(x)).shift([0, 1]);
        prop_assert!(residual.is_zero(), "residual {}", residual);
    }

    #[test]
    fn simplify_preserves_homfly(i in any::<prop::sample::Index>()) {
        let pool = n3_pool();
        let d = trace(&pool[i.index(pool.len())]).unwrap();
        let before: LaurentPoly2 = homfly(&d, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(homfly(&simplify(&d), DEFAULT_BUDGET).unwrap(), before);
    }

    #[test]
    fn mirror_is_an_involution(i in any::<prop::sample::Index>()) {
        let pool = n3_pool();
        let d = trace(&pool[i.index(pool.len())]).unwrap();
        let m = d.mirror();
        prop_assert_eq!(&m.mirror(), &d);
        if d.component_count() == 1 {
            prop_assert_eq!(alexander(&m).unwrap(), alexander(&d).unwrap());
            let h = homfly(&d, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(homfly(&m, DEFAULT_BUDGET).unwrap(), h.substitute([-1, 1], [1, -1]));
        }
    }
}
