//! 2x2 integer matrices and the `F_k` / `R_k` representations.
//!
//! `F_k = [[k-1, k], [1, 0]]` satisfies
//! `F_k^n = [[J(n+1), k J(n)], [J(n), k J(n-1)]]`, and
//! `R_k = [[1, k], [1, 2-k]]` turns powers of `F_k` into half the matching
//! Jacobsthal-Lucas terms: `R_k F_k^n = 1/2 [[j(n+1), k j(n)], [j(n), k j(n-1)]]`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequence::exact_div;

/// Row-major `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Five multiplications instead of eight: `b c` and `a + d` are shared.
    pub fn square(&self) -> Mat2 {
        let bc = &self.b * &self.c;
        let trace = &self.a + &self.d;
        Mat2 {
            a: &self.a * &self.a + &bc,
            b: &self.b * &trace,
            c: &self.c * &trace,
            d: bc + &self.d * &self.d,
        }
    }

    /// `self * (x, y)^T`.
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

fn check_k(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidK(k))
    } else {
        Ok(())
    }
}

fn f_matrix_unchecked(k: u64) -> Mat2 {
    Mat2::new(k - 1, k, 1, 0)
}

fn r_matrix_unchecked(k: u64) -> Mat2 {
    Mat2::new(1, k, 1, 2 - i128::from(k))
}

/// `F_k = [[k-1, k], [1, 0]]`.
pub fn f_matrix(k: u64) -> Result<Mat2> {
    check_k(k)?;
    Ok(f_matrix_unchecked(k))
}

/// `R_k = [[1, k], [1, 2-k]]`.
pub fn r_matrix(k: u64) -> Result<Mat2> {
    check_k(k)?;
    Ok(r_matrix_unchecked(k))
}

pub fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    x * y
}

/// `m^e` by left-to-right binary powering; `m^0` is the identity.
///
/// Each bit costs one squaring, and set bits add one product with `m`
/// itself, which stays cheap when `m` has small entries.
pub fn mat_pow(m: &Mat2, e: u64) -> Mat2 {
    if e == 0 {
        return Mat2::identity();
    }
    let top = 63 - e.leading_zeros();
    let mut acc = m.clone();
    for bit in (0..top).rev() {
        acc = acc.square();
        if (e >> bit) & 1 == 1 {
            acc = &acc * m;
        }
    }
    acc
}

/// `F_k^n` for an already validated `k`.
pub(crate) fn jacobsthal_power(k: u64, n: u64) -> Mat2 {
    mat_pow(&f_matrix_unchecked(k), n)
}

fn check_index(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::TooSmall {
            what: "index n",
            min: 1,
            got: 0,
        })
    } else {
        Ok(())
    }
}

/// `(J(n+1), J(n), J(n-1))` read off `F_k^n`.
pub fn f_power_terms(k: u64, n: u64) -> Result<(BigInt, BigInt, BigInt)> {
    check_k(k)?;
    check_index(n)?;
    let Mat2 { a, b, c, d } = jacobsthal_power(k, n);
    let k = BigInt::from(k);
    assert_eq!(b, &c * &k, "F_k^n top-right must be k times bottom-left");
    let previous = exact_div(&d, &k).expect("F_k^n bottom-right must be a multiple of k");
    Ok((a, c, previous))
}

/// `(j(n+1), j(n), j(n-1))` from `M = R_k F_k^n`, as `(2 M11, 2 M21, 2 M22 / k)`.
pub fn rf_power_lucas(k: u64, n: u64) -> Result<(BigInt, BigInt, BigInt)> {
    check_k(k)?;
    check_index(n)?;
    let m = &r_matrix_unchecked(k) * &jacobsthal_power(k, n);
    let kk = BigInt::from(k);
    let next = m.a * 2;
    let current = m.c * 2;
    assert_eq!(
        m.b * 2,
        &current * &kk,
        "R_k F_k^n top-right must be k j(n) / 2"
    );
    let previous = exact_div(&(m.d * 2), &kk).expect("2 (R_k F_k^n)_22 must be a multiple of k");
    Ok((next, current, previous))
}

/// Whether `R_k F_k = F_k R_k`.
pub fn commutes(k: u64) -> Result<bool> {
    check_k(k)?;
    let (f, r) = (f_matrix_unchecked(k), r_matrix_unchecked(k));
    Ok(&r * &f == &f * &r)
}
