use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use spectough_core::graph::{Family, Graph};
use spectough_core::spectra::{eigen_summary, laplacian_matrix, spectrum};

fn gnp(max_n: usize) -> impl Strategy<Value = Graph> {
    (2usize..=max_n, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, p, seed)| Family::Gnp { n, p, seed }.build().unwrap())
}

fn reference_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let l = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        }
    });
    let mut v: Vec<f64> = SymmetricEigen::new(l).eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn matches_reference_solver(g in gnp(40)) {
        let s = spectrum(&g).unwrap();
        let r = reference_eigenvalues(&g);
        for (a, b) in s.values().iter().zip(&r) {
            prop_assert!((a - b).abs() <= 1e-8, "{a} vs {b}");
        }
    }

    #[test]
    fn laplacian_structure(g in gnp(30)) {
        let l = laplacian_matrix(&g);
        for i in 0..g.n() {
            let row_sum: f64 = l.row(i).iter().sum();
            prop_assert_eq!(row_sum, 0.0);
            for j in 0..g.n() {
                prop_assert_eq!(l.get(i, j), l.get(j, i));
            }
        }
    }

    #[test]
    fn trace_and_range(g in gnp(40)) {
        let s = spectrum(&g).unwrap();
        let n = g.n() as f64;
        prop_assert!((s.sum() - 2.0 * g.edge_count() as f64).abs() <= s.tol());
        prop_assert!(s.values()[0].abs() <= s.tol());
        prop_assert!(s.values().iter().all(|&x| x >= -s.tol() && x <= n + s.tol()));
        prop_assert!(s.values().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn complement_spectrum(g in gnp(30)) {
        // μ_i(complement) = n - μ_{n+2-i}(G) for i ≥ 2
        let n = g.n();
        let s = spectrum(&g).unwrap();
        let c = spectrum(&g.complement()).unwrap();
        for i in 2..=n {
            let lhs = c.values()[i - 1];
            let rhs = n as f64 - s.values()[n + 1 - i];
            prop_assert!((lhs - rhs).abs() <= 1e-8, "i = {i}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn connectivity_from_spectrum(g in gnp(30)) {
        let s = spectrum(&g).unwrap();
        prop_assert_eq!(s.mu2() > s.tol(), g.is_connected());
        prop_assert_eq!((s.mun() - g.n() as f64).abs() <= s.tol(), !g.complement().is_connected());
        if g.edge_count() > 0 {
            prop_assert!(s.mun() >= g.max_degree() as f64 + 1.0 - s.tol());
            let e = eigen_summary(&g, &s).unwrap();
            prop_assert!((e.ratio - e.mu2 / e.mun).abs() <= 1e-15);
            let n = g.n() as f64;
            prop_assert!(e.mu2 <= n / (n - 1.0) * e.delta as f64 + s.tol());
            if !g.is_complete() {
                prop_assert!(e.mu2 <= e.delta as f64 + s.tol());
            }
        }
    }
}

#[test]
fn complete_multipartite_spectrum() {
    // K_{a,b,c}: 0, then n - part size with multiplicity part size - 1, then n
    let g = Family::CompleteMultipartite(vec![2, 3, 4]).build().unwrap();
    let s = spectrum(&g).unwrap();
    let mut expected = vec![0.0, 7.0, 6.0, 6.0, 5.0, 5.0, 5.0, 9.0, 9.0];
    expected.sort_by(f64::total_cmp);
    for (a, b) in s.values().iter().zip(&expected) {
        assert!((a - b).abs() <= 1e-9, "{a} vs {b}");
    }
}

#[test]
fn path_closed_form() {
    // P_n: 2 - 2 cos(πk/n), k = 0..n-1
    for n in 2..=20 {
        let s = spectrum(&Family::Path(n).build().unwrap()).unwrap();
        let mut expected: Vec<f64> = (0..n)
            .map(|k| 2.0 - 2.0 * (std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        expected.sort_by(f64::total_cmp);
        for (a, b) in s.values().iter().zip(&expected) {
            assert!((a - b).abs() <= 1e-9, "n = {n}: {a} vs {b}");
        }
    }
}

#[test]
fn large_graph_converges() {
    let g = Family::Gnp {
        n: 64,
        p: 0.5,
        seed: 3,
    }
    .build()
    .unwrap();
    let s = spectrum(&g).unwrap();
    let r = reference_eigenvalues(&g);
    for (a, b) in s.values().iter().zip(&r) {
        assert!((a - b).abs() <= 1e-8);
    }
}
