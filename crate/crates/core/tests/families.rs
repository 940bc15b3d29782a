//! Cross-construction checks on the graph families, with circulant oracles
//! for the cycle cases.

use std::f64::consts::PI;

use crown_spectra::graph::{
    double_cover, is_isomorphic_small, line_graph, make_complete, make_crown, make_cycle,
    make_line_crown,
};
use crown_spectra::matrix::{adjacency_matrix, distance_matrix};
use crown_spectra::spectra::{exact_integer_spectrum, integral_spectrum};
use crown_spectra::Spectrum;

/// Eigenvalues of the symmetric circulant with first row `row`:
/// `Σ_j c_j cos(2πjk/n)` for `k = 0..n`.
fn circulant_eigenvalues(row: &[i64]) -> Vec<f64> {
    let n = row.len();
    (0..n)
        .map(|k| {
            row.iter()
                .enumerate()
                .map(|(j, &c)| c as f64 * (2.0 * PI * (j * k) as f64 / n as f64).cos())
                .sum()
        })
        .collect()
}

fn rounded_spectrum(values: &[f64]) -> Spectrum {
    Spectrum::from_pairs(values.iter().map(|&v| {
        assert!((v - v.round()).abs() < 1e-9, "{v} is not an integer");
        (v.round() as i64, 1)
    }))
}

#[test]
fn hexagon_spectra_match_circulant_oracle() {
    let c6 = make_cycle(6).unwrap();
    let adj = rounded_spectrum(&circulant_eigenvalues(&[0, 1, 0, 0, 0, 1]));
    assert_eq!(adj, Spectrum::from_pairs([(2, 1), (1, 2), (-1, 2), (-2, 1)]));
    assert_eq!(integral_spectrum(&adjacency_matrix(&c6)).unwrap(), adj);

    let dist = rounded_spectrum(&circulant_eigenvalues(&[0, 1, 2, 3, 2, 1]));
    assert_eq!(dist, Spectrum::from_pairs([(9, 1), (0, 2), (-1, 1), (-4, 2)]));
    assert_eq!(integral_spectrum(&distance_matrix(&c6).unwrap()).unwrap(), dist);
}

#[test]
fn pentagon_distance_spectrum_is_not_integral() {
    let values = circulant_eigenvalues(&[0, 1, 2, 2, 1]);
    assert_eq!(values.iter().filter(|v| (*v - v.round()).abs() > 1e-6).count(), 4);
    let out = exact_integer_spectrum(&distance_matrix(&make_cycle(5).unwrap()).unwrap()).unwrap();
    assert!(!out.is_integral());
    assert_eq!(out.residual_degree(), 4);
}

#[test]
fn crown_is_double_cover_of_complete() {
    for n in 3..=6 {
        let cover = double_cover(&make_complete(n).unwrap()).unwrap();
        assert!(is_isomorphic_small(&cover, &make_crown(n).unwrap()).unwrap());
    }
    for n in 7..=10 {
        let cover = double_cover(&make_complete(n).unwrap()).unwrap();
        assert_eq!(
            integral_spectrum(&adjacency_matrix(&cover)).unwrap(),
            integral_spectrum(&adjacency_matrix(&make_crown(n).unwrap())).unwrap()
        );
    }
}

#[test]
fn line_crown_constructions_agree() {
    for n in 3..=4 {
        let direct = make_line_crown(n).unwrap();
        let generic = line_graph(&make_crown(n).unwrap()).unwrap();
        assert!(is_isomorphic_small(&direct, &generic).unwrap());
    }
    for n in 5..=10 {
        let direct = make_line_crown(n).unwrap();
        let generic = line_graph(&make_crown(n).unwrap()).unwrap();
        assert_eq!(
            integral_spectrum(&adjacency_matrix(&direct)).unwrap(),
            integral_spectrum(&adjacency_matrix(&generic)).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn line_crown_distance_census() {
    for n in 4..=10 {
        let d = distance_matrix(&make_line_crown(n).unwrap()).unwrap();
        let expected_sum = ((2 * n - 4) + 2 * (n * n - 3 * n + 2) + 3) as i64;
        assert_eq!(expected_sum, (2 * n * n - 4 * n + 3) as i64);
        for row in d.rows() {
            let count = |k: i64| row.iter().filter(|&&x| x == k).count();
            assert_eq!(count(1), 2 * n - 4);
            assert_eq!(count(2), n * n - 3 * n + 2);
            assert_eq!(count(3), 1);
            assert_eq!(row.iter().sum::<i64>(), expected_sum);
        }
    }
}
