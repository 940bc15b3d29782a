use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use crown_spectra::automorphism::{is_automorphism, permutation_matrix, Permutation};
use crown_spectra::graph::{make_line_crown, Graph};
use crown_spectra::matrix::{distance_i_matrix, distance_matrix, IntMatrix};
use crown_spectra::spectra::{char_poly, determinant, rank};
use crown_spectra::Spectrum;

fn permutation(size: usize) -> impl Strategy<Value = Permutation> {
    Just((0..size).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn symmetric(dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(lo..=hi, dim * (dim + 1) / 2).prop_map(move |upper| {
        let mut m = IntMatrix::zeros(dim);
        let mut it = upper.into_iter();
        for i in 0..dim {
            for j in i..dim {
                let v = it.next().unwrap();
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        m
    })
}

/// Connected graph: a random spanning tree plus random extra edges.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..10).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        (Just(n), parents, prop::collection::vec((0..n, 0..n), 0..12))
    })
    .prop_map(|(n, parents, extra)| {
        let mut edges: Vec<(usize, usize)> = parents
            .into_iter()
            .enumerate()
            .map(|(k, p)| (p, k + 1))
            .collect();
        for (u, v) in extra {
            let (u, v) = (u.min(v), u.max(v));
            if u != v && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Leibniz expansion over all permutations.
fn leibniz_det(m: &[Vec<BigInt>]) -> BigInt {
    fn go(m: &[Vec<BigInt>], row: usize, used: &mut Vec<bool>, sign: i32, acc: BigInt, out: &mut BigInt) {
        let n = m.len();
        if row == n {
            if sign > 0 {
                *out += acc;
            } else {
                *out -= acc;
            }
            return;
        }
        for col in 0..n {
            if used[col] {
                continue;
            }
            // Each already used larger column is one more inversion.
            let larger_used = (col + 1..n).filter(|&c| used[c]).count();
            let s = if larger_used % 2 == 0 { sign } else { -sign };
            used[col] = true;
            go(m, row + 1, used, s, &acc * &m[row][col], out);
            used[col] = false;
        }
    }
    let mut out = BigInt::zero();
    go(m, 0, &mut vec![false; m.len()], 1, BigInt::one(), &mut out);
    out
}

/// Rank by Gaussian elimination over the rationals.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, rank);
        let pivot = a[rank][c].clone();
        for i in rank + 1..a.len() {
            let f = &a[i][c] / &pivot;
            for j in c..cols {
                let delta = &f * &a[rank][j];
                a[i][j] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn leibniz_oracle_sanity() {
    let m = vec![
        vec![BigInt::from(2), BigInt::from(1), BigInt::from(0)],
        vec![BigInt::from(1), BigInt::from(3), BigInt::from(1)],
        vec![BigInt::from(0), BigInt::from(1), BigInt::from(4)],
    ];
    assert_eq!(leibniz_det(&m), BigInt::from(18));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn char_poly_matches_determinant(m in symmetric(6, -3, 3)) {
        let p = char_poly(&m).unwrap();
        prop_assert_eq!(p.degree(), 6);
        prop_assert_eq!(p.coeff(5).clone(), BigInt::from(-m.trace()));
        for x in -2i64..=2 {
            let shifted = m.scale(-1).shift(-x); // xI - M
            let by_elimination = determinant(&shifted).unwrap();
            prop_assert_eq!(p.evaluate(&BigInt::from(x)), by_elimination.clone());
            let rows: Vec<Vec<BigInt>> = shifted
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            prop_assert_eq!(leibniz_det(&rows), by_elimination);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn automorphism_tests_agree(p in permutation(12)) {
        // Verify mode raises a certificate failure if the two tests disagree.
        let g = make_line_crown(4).unwrap();
        prop_assert!(is_automorphism(&g, &p).is_ok());
    }

    #[test]
    fn permutation_matrix_is_a_homomorphism(
        (p, q) in (1usize..=20).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        let composed = permutation_matrix(&p.compose(&q).unwrap());
        prop_assert_eq!(composed, &permutation_matrix(&p) * &permutation_matrix(&q));
    }

    #[test]
    fn bareiss_rank_matches_rational_rank(
        rows in (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-4i64..=4, c), r)
        })
    ) {
        prop_assert_eq!(rank(&rows).unwrap(), rational_rank(&rows));
    }

    #[test]
    fn distance_matrix_properties(g in connected_graph()) {
        let d = distance_matrix(&g).unwrap();
        let n = g.order();
        prop_assert!(d.is_symmetric());
        prop_assert_eq!(d.trace(), 0);
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
        let diam = d.max_entry().unwrap() as usize;
        let mut sum = IntMatrix::zeros(n);
        let mut weighted = IntMatrix::zeros(n);
        for i in 0..=diam {
            let ai = distance_i_matrix(&g, i).unwrap();
            sum = &sum + &ai;
            weighted = &weighted + &ai.scale(i as i64);
        }
        prop_assert_eq!(sum, IntMatrix::ones(n));
        prop_assert_eq!(weighted, d);
    }

    #[test]
    fn edge_list_round_trip(g in connected_graph()) {
        let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn spectrum_normalization_preserves_mass(
        pairs in prop::collection::vec((-20i64..20, 0usize..5), 0..12)
    ) {
        let s = Spectrum::from_pairs(pairs.clone());
        prop_assert_eq!(s.dimension(), pairs.iter().map(|p| p.1).sum::<usize>());
        prop_assert!(s.entries().windows(2).all(|w| w[0].0 > w[1].0));
        prop_assert!(s.entries().iter().all(|&(_, m)| m > 0));
        let cover = s.union(&s.negated());
        prop_assert_eq!(cover.dimension(), 2 * s.dimension());
        prop_assert_eq!(cover.first_moment(), 0);
    }
}
