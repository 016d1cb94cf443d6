mod common;

use common::naive_terms;
use jacobsthal::matrix::{
    commutes, f_matrix, f_power_terms, mat_mul, mat_pow, r_matrix, rf_power_lucas,
};
use jacobsthal::{eval_iter, BigInt, Mat2, SequenceKind, SequenceParams};
use num_traits::Pow;
use proptest::prelude::*;

fn term(kind: SequenceKind, k: u64, n: u64) -> BigInt {
    eval_iter(&SequenceParams::new(kind, k).unwrap(), n)
}

#[test]
fn determinant_law() {
    for k in 2..=12u64 {
        let f = f_matrix(k).unwrap();
        for n in 1..=60u64 {
            let want: BigInt = Pow::pow(BigInt::from(-(k as i64)), n);
            assert_eq!(mat_pow(&f, n).determinant(), want, "k={k} n={n}");
        }
    }
}

#[test]
fn power_terms_match_iteration() {
    for k in 2..=12u64 {
        for n in 1..=100u64 {
            let (next, cur, prev) = f_power_terms(k, n).unwrap();
            assert_eq!(next, term(SequenceKind::Jacobsthal, k, n + 1));
            assert_eq!(cur, term(SequenceKind::Jacobsthal, k, n));
            assert_eq!(prev, term(SequenceKind::Jacobsthal, k, n - 1));
        }
    }
}

#[test]
fn lucas_power_terms_match_naive() {
    for k in 2..=12u64 {
        let oracle = naive_terms(true, k as i128, 32);
        for n in 1..=30usize {
            let (next, cur, prev) = rf_power_lucas(k, n as u64).unwrap();
            assert_eq!(next, oracle[n + 1].into());
            assert_eq!(cur, oracle[n].into());
            assert_eq!(prev, oracle[n - 1].into());
        }
    }
}

#[test]
fn column_vector_step() {
    for k in 2..=12u64 {
        let f = f_matrix(k).unwrap();
        for n in 1..=60u64 {
            let l = |i| term(SequenceKind::JacobsthalLucas, k, i);
            assert_eq!(f.apply(&l(n), &l(n - 1)), (l(n + 1), l(n)));
        }
    }
}

#[test]
fn interterm_relations() {
    use SequenceKind::{Jacobsthal as J, JacobsthalLucas as L};
    for k in 2..=12u64 {
        for n in 1..=60u64 {
            let jn = term(J, k, n);
            let jp = term(J, k, n - 1);
            assert_eq!(term(L, k, n), (&jn + &jp * k) * 2);
            assert_eq!(term(L, k, n - 1), (&jn + &jp * (2 - k as i64)) * 2);
        }
    }
}

#[test]
fn r_and_f_commute() {
    for k in 2..=50 {
        assert!(commutes(k).unwrap());
        let (f, r) = (f_matrix(k).unwrap(), r_matrix(k).unwrap());
        assert_eq!(mat_mul(&r, &f), mat_mul(&f, &r));
    }
}

fn small_matrix() -> impl Strategy<Value = Mat2> {
    prop::array::uniform4(-50i64..50).prop_map(|[a, b, c, d]| Mat2::new(a, b, c, d))
}

proptest! {
    #[test]
    fn multiplication_is_associative(x in small_matrix(), y in small_matrix(), z in small_matrix()) {
        prop_assert_eq!(mat_mul(&mat_mul(&x, &y), &z), mat_mul(&x, &mat_mul(&y, &z)));
    }

    #[test]
    fn powers_add(m in small_matrix(), a in 0u64..12, b in 0u64..12) {
        prop_assert_eq!(mat_pow(&m, a + b), mat_mul(&mat_pow(&m, a), &mat_pow(&m, b)));
    }

    #[test]
    fn power_matches_repeated_product(m in small_matrix(), e in 0u64..20) {
        let naive = (0..e).fold(Mat2::identity(), |acc, _| mat_mul(&acc, &m));
        prop_assert_eq!(mat_pow(&m, e), naive);
    }

    #[test]
    fn square_matches_product(m in small_matrix()) {
        prop_assert_eq!(m.square(), mat_mul(&m, &m));
    }
}
