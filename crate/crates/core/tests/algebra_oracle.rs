use domlab::algebra::{complement_zero_pairs, poly_mat_mul, BoolMatrix, PolyMatrix, TruncatedPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Schoolbook product: every pair of terms, exponent clamped at the cap.
fn naive(a: &PolyMatrix, b: &PolyMatrix) -> Vec<Vec<Vec<u64>>> {
    let cap = a.cap();
    (0..a.rows())
        .map(|i| {
            (0..b.cols())
                .map(|j| {
                    let mut acc = vec![0u64; cap + 1];
                    for t in 0..a.cols() {
                        for (x, &ca) in a.coeffs(i, t).iter().enumerate() {
                            for (y, &cb) in b.coeffs(t, j).iter().enumerate() {
                                acc[(x + y).min(cap)] += ca * cb;
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn random_poly_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, cap: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(rows, cols, cap);
    for i in 0..rows {
        for j in 0..cols {
            let coeffs: Vec<u64> = (0..=cap).map(|_| if rng.gen_bool(0.4) { rng.gen_range(0..5) } else { 0 }).collect();
            m.set(i, j, &TruncatedPoly::from_coeffs(&coeffs, cap).unwrap()).unwrap();
        }
    }
    m
}

#[test]
fn poly_product_matches_schoolbook() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..300 {
        let (r, inner, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8), rng.gen_range(1..=8));
        let cap = rng.gen_range(0..=10);
        let a = random_poly_matrix(&mut rng, r, inner, cap);
        let b = random_poly_matrix(&mut rng, inner, c, cap);
        let got = poly_mat_mul(&a, &b).unwrap();
        assert_eq!(got, a.mul_sequential(&b).unwrap());
        let want = naive(&a, &b);
        for i in 0..r {
            for j in 0..c {
                assert_eq!(got.coeffs(i, j), want[i][j].as_slice());
            }
        }
    }
}

#[test]
fn capped_exponents_preserve_the_threshold() {
    for r in 1..=6usize {
        for a in 0..=3 * r {
            for b in 0..=3 * r {
                assert_eq!(a.min(r) + b.min(r) >= r, a + b >= r);
                let p = TruncatedPoly::mono(a.min(r), 2 * r).checked_mul(&TruncatedPoly::mono(b.min(r), 2 * r)).unwrap();
                assert_eq!(p.min_degree().unwrap() >= r, a + b >= r);
            }
        }
    }
}

#[test]
fn zero_pairs_match_integer_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..200 {
        let (r, inner, c) = (rng.gen_range(1..=12), rng.gen_range(1..=130), rng.gen_range(1..=12));
        let density = rng.gen_range(0.0..0.3);
        let a = BoolMatrix::from_fn(r, inner, |_, _| rng.gen_bool(density));
        let b = BoolMatrix::from_fn(inner, c, |_, _| rng.gen_bool(density));
        let mut want = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let dot: u32 = (0..inner).map(|t| u32::from(a.get(i, t)) * u32::from(b.get(t, j))).sum();
                if dot == 0 {
                    want.push((i, j));
                }
            }
        }
        assert_eq!(complement_zero_pairs(&a, &b).unwrap(), want);
        let product = a.mul(&b).unwrap();
        let nonzero: usize = (0..r).map(|i| product.row_count_ones(i)).sum();
        assert_eq!(nonzero + want.len(), r * c);
    }
}

proptest! {
    #[test]
    fn saturated_mass_is_conserved(exps in proptest::collection::vec(0usize..12, 1..20), cap in 1usize..8) {
        let a = PolyMatrix::from_monomials(1, exps.len(), cap, |_, t| exps[t]);
        let b = PolyMatrix::from_monomials(exps.len(), 1, cap, |t, _| exps[exps.len() - 1 - t]);
        let c = poly_mat_mul(&a, &b).unwrap();
        prop_assert_eq!(c.get(0, 0).mass(), exps.len() as u128);
    }
}
