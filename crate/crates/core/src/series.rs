//! Rational generating functions and their power-series expansion.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::identities::IdentityForm;
use crate::sequence::{term_stream, SequenceKind, SequenceParams};

/// Polynomial with ascending-degree coefficients, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.sign() == num_bigint::Sign::Minus;
            let magnitude = c.magnitude();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let unit = magnitude.is_one();
            match i {
                0 => write!(f, "{magnitude}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{magnitude}x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{magnitude}x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `numerator / denominator` with `denominator(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalGf {
    numerator: Poly,
    denominator: Poly,
}

impl RationalGf {
    /// Rejects denominators whose constant term is not 1, which the
    /// coefficient recurrence needs.
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        let constant = denominator.coeff(0);
        if !constant.is_one() {
            return Err(Error::DenominatorConstant(constant));
        }
        Ok(RationalGf {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    /// First `count` Maclaurin coefficients.
    ///
    /// `c(n) = num(n) - sum_{i>=1} den(i) c(n - i)`, exact.
    pub fn expand(&self, count: usize) -> Vec<BigInt> {
        let den = self.denominator.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(count);
        for n in 0..count {
            let mut c = self.numerator.coeff(n);
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    c -= d * &out[n - i];
                }
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Free-function form of [`RationalGf::expand`].
pub fn expand(gf: &RationalGf, count: usize) -> Vec<BigInt> {
    gf.expand(count)
}

/// Common denominator `1 - (k-1) x - k x^2`.
fn family_denominator(k: u64) -> Poly {
    let k = BigInt::from(k);
    Poly::new(vec![BigInt::one(), -(&k - BigInt::one()), -k])
}

/// Generating function of a sequence in the published or corrected form.
///
/// Only `j` differs between forms: the published numerator is
/// `2 (x + 2 - k) = (4 - 2k) + 2x`, the corrected one `2 + (4 - 2k) x`.
pub fn gf_for(params: &SequenceParams, form: IdentityForm) -> RationalGf {
    let k = BigInt::from(params.k());
    let numerator = match (params.kind(), form) {
        (SequenceKind::Jacobsthal, _) => Poly::from_i64s(&[0, 1]),
        (SequenceKind::JacobsthalLucas, IdentityForm::PaperLiteral) => {
            Poly::new(vec![BigInt::from(4) - &k * 2, BigInt::from(2)])
        }
        (SequenceKind::JacobsthalLucas, IdentityForm::Corrected) => {
            Poly::new(vec![BigInt::from(2), BigInt::from(4) - &k * 2])
        }
    };
    RationalGf::new(numerator, family_denominator(params.k()))
        .expect("family denominator has constant term 1")
}

/// First disagreement between an expansion and the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub got: BigInt,
    pub want: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatch {
    pub form: IdentityForm,
    pub gf: RationalGf,
    pub coefficients: Vec<BigInt>,
    pub first_mismatch: Option<Mismatch>,
}

impl FormMatch {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Both generating-function forms compared with the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfMatchReport {
    pub params: SequenceParams,
    pub count: usize,
    pub expected: Vec<BigInt>,
    pub paper_literal: FormMatch,
    pub corrected: FormMatch,
}

impl GfMatchReport {
    pub fn form(&self, form: IdentityForm) -> &FormMatch {
        match form {
            IdentityForm::PaperLiteral => &self.paper_literal,
            IdentityForm::Corrected => &self.corrected,
        }
    }
}

pub fn match_report(params: &SequenceParams, count: usize) -> Result<GfMatchReport> {
    if count == 0 {
        return Err(Error::TooSmall {
            what: "coefficient count",
            min: 1,
            got: 0,
        });
    }
    let expected: Vec<BigInt> = term_stream(params, 0, count as u64 - 1)?
        .map(|(_, t)| t)
        .collect();
    let compare = |form| {
        let gf = gf_for(params, form);
        let coefficients = gf.expand(count);
        let first_mismatch = coefficients
            .iter()
            .zip(&expected)
            .position(|(got, want)| got != want)
            .map(|index| Mismatch {
                index,
                got: coefficients[index].clone(),
                want: expected[index].clone(),
            });
        FormMatch {
            form,
            gf,
            coefficients,
            first_mismatch,
        }
    };
    Ok(GfMatchReport {
        params: *params,
        count,
        paper_literal: compare(IdentityForm::PaperLiteral),
        corrected: compare(IdentityForm::Corrected),
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use SequenceKind::{Jacobsthal as J, JacobsthalLucas as L};

    fn params(kind: SequenceKind, k: u64) -> SequenceParams {
        SequenceParams::new(kind, k).unwrap()
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn poly_is_canonical() {
        assert_eq!(Poly::from_i64s(&[1, 2, 0, 0]), Poly::from_i64s(&[1, 2]));
        assert_eq!(Poly::from_i64s(&[0, 0]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_i64s(&[3, 0, 5]).degree(), Some(2));
        let sum = &Poly::from_i64s(&[1, 2, 3]) + &Poly::from_i64s(&[0, 0, -3]);
        assert_eq!(sum, Poly::from_i64s(&[1, 2]));
    }

    #[test]
    fn poly_display() {
        assert_eq!(Poly::from_i64s(&[1, -2, -3]).to_string(), "1 - 2x - 3x^2");
        assert_eq!(Poly::from_i64s(&[0, 1]).to_string(), "x");
        assert_eq!(Poly::from_i64s(&[-2, 2]).to_string(), "-2 + 2x");
    }

    #[test]
    fn generating_functions() {
        let den3 = Poly::from_i64s(&[1, -2, -3]);
        for form in [IdentityForm::PaperLiteral, IdentityForm::Corrected] {
            let gf = gf_for(&params(J, 3), form);
            assert_eq!(gf.numerator(), &Poly::from_i64s(&[0, 1]));
            assert_eq!(gf.denominator(), &den3);
        }
        let den2 = Poly::from_i64s(&[1, -1, -2]);
        let corrected = gf_for(&params(L, 2), IdentityForm::Corrected);
        assert_eq!(corrected.numerator(), &Poly::from_i64s(&[2]));
        assert_eq!(corrected.denominator(), &den2);
        let literal = gf_for(&params(L, 2), IdentityForm::PaperLiteral);
        assert_eq!(literal.numerator(), &Poly::from_i64s(&[0, 2]));
    }

    #[test]
    fn expansions() {
        let j2 = gf_for(&params(J, 2), IdentityForm::Corrected);
        assert_eq!(ints(&j2.expand(8)), [0, 1, 1, 3, 5, 11, 21, 43]);
        let l3 = gf_for(&params(L, 3), IdentityForm::Corrected);
        assert_eq!(ints(&l3.expand(6)), [2, 2, 10, 26, 82, 242]);
        let geometric = RationalGf::new(Poly::from_i64s(&[1]), Poly::from_i64s(&[1, -1])).unwrap();
        assert_eq!(ints(&expand(&geometric, 4)), [1, 1, 1, 1]);
        assert!(geometric.expand(0).is_empty());
    }

    #[test]
    fn rejects_bad_denominator() {
        assert_eq!(
            RationalGf::new(Poly::from_i64s(&[1]), Poly::from_i64s(&[2, 1])).unwrap_err(),
            Error::DenominatorConstant(2.into())
        );
        assert_eq!(
            RationalGf::new(Poly::from_i64s(&[1]), Poly::zero()).unwrap_err(),
            Error::DenominatorConstant(0.into())
        );
    }

    #[test]
    fn match_reports() {
        let r = match_report(&params(L, 2), 10).unwrap();
        let m = r.paper_literal.first_mismatch.as_ref().unwrap();
        assert_eq!(
            (m.index, m.got.clone(), m.want.clone()),
            (0, 0.into(), 2.into())
        );
        assert!(r.corrected.matches());

        let r = match_report(&params(J, 4), 10).unwrap();
        assert!(r.paper_literal.matches() && r.corrected.matches());

        let r = match_report(&params(L, 3), 1).unwrap();
        let m = r.paper_literal.first_mismatch.as_ref().unwrap();
        assert_eq!((m.index, m.got.clone()), (0, (-2).into()));
        assert!(r.corrected.matches());

        assert!(match_report(&params(J, 2), 0).is_err());
    }
}
