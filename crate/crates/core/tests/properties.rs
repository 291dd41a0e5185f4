use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tutte_core::algebra::{poly_ring, smith_normal_form, IntMatrix, Specialization, ZPoly};
use tutte_core::dispatch::random_structure;
use tutte_core::io::Structure;
use tutte_core::matroid::{random_matroid, tutte, tutte_sig, universal_spec, MatroidSystem};
use tutte_core::minors::{delcon_evaluate, minor_axioms_check, tutte_character};

const FAMILIES: [&str; 9] =
    ["matroid", "graph", "delta", "perspective", "dmp", "relative", "submodular", "colored", "arithmetic"];

fn small_poly(coeffs: &[(i64, u32, u32)]) -> ZPoly {
    let sig = poly_ring(&["x", "y"]);
    let (x, y) = (ZPoly::generator(&sig, "x"), ZPoly::generator(&sig, "y"));
    coeffs.iter().fold(ZPoly::zero(&sig), |acc, &(c, i, j)| {
        &acc + &(&x.pow(i) * &y.pow(j)).scale(&BigInt::from(c))
    })
}

fn det3(m: &[Vec<i64>]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip(seed in any::<u64>(), family in 0..FAMILIES.len(), n in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_structure(FAMILIES[family], &mut rng, n).unwrap();
        let again = Structure::from_json(&s.to_json()).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(again.to_json(), s.to_json());
    }

    #[test]
    fn deletion_contraction_matches_subset_expansion(seed in any::<u64>(), n in 0usize..7) {
        let m = random_matroid(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let spec = universal_spec::<BigInt>();
        prop_assert_eq!(delcon_evaluate(&MatroidSystem, &m, &spec, false), tutte_character(&MatroidSystem, &m, &spec));
    }

    #[test]
    fn dual_swaps_variables(seed in any::<u64>(), n in 0usize..7) {
        let m = random_matroid(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let sig = tutte_sig();
        let swap = Specialization::new(&sig, &sig)
            .set("x", ZPoly::generator(&sig, "y"))
            .and_then(|s| s.set("y", ZPoly::generator(&sig, "x")))
            .unwrap();
        prop_assert_eq!(swap.apply(&tutte(&m)).unwrap(), tutte(&m.dual()));
    }

    #[test]
    fn tutte_at_one_one_counts_bases(seed in any::<u64>(), n in 0usize..7) {
        let m = random_matroid(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let to_int = Specialization::new(&tutte_sig(), &poly_ring(&[])).set_i64("x", 1).and_then(|s| s.set_i64("y", 1)).unwrap();
        let value = to_int.apply(&tutte(&m)).unwrap();
        prop_assert_eq!(value, ZPoly::from_i64(&poly_ring(&[]), m.bases().len() as i64));
    }

    #[test]
    fn minor_operations_compose(seed in any::<u64>(), n in 0usize..6, a in any::<u32>(), b in any::<u32>()) {
        let m = random_matroid(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let full = (1u32 << n) - 1;
        prop_assert!(minor_axioms_check(&MatroidSystem, &m, a & full, b & full & !a).is_ok());
    }

    #[test]
    fn polynomial_ring_laws(
        p in prop::collection::vec((-3i64..4, 0u32..3, 0u32..3), 0..5),
        q in prop::collection::vec((-3i64..4, 0u32..3, 0u32..3), 0..5),
        r in prop::collection::vec((-3i64..4, 0u32..3, 0u32..3), 0..5),
    ) {
        let (p, q, r) = (small_poly(&p), small_poly(&q), small_poly(&r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
        // Evaluation is a ring homomorphism.
        let at = Specialization::<BigInt>::new(p.sig(), &poly_ring(&[])).set_i64("x", 2).and_then(|s| s.set_i64("y", -1)).unwrap();
        prop_assert_eq!(at.apply(&(&p * &q)).unwrap(), &at.apply(&p).unwrap() * &at.apply(&q).unwrap());
    }

    #[test]
    fn smith_form_of_square_matrices(entries in prop::collection::vec(-6i64..7, 9)) {
        let rows: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let a = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&a);
        let d = s.left.mul(&a).mul(&s.right);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(d.get(i, j), &want);
            }
        }
        for w in s.diagonal.windows(2) {
            prop_assert!(w[1].is_zero() || (&w[1] % &w[0]).is_zero());
        }
        let product = s.diagonal.iter().fold(BigInt::from(1), |acc, x| acc * x);
        prop_assert_eq!(product.abs(), BigInt::from(det3(&rows).abs()));
    }
}
