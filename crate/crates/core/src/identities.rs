//! Brute-force verification of the family's identities.
//!
//! Every check evaluates its left-hand side from iterated terms and its
//! right-hand side from closed-form terms, so a passing check is also a
//! cross-strategy consistency check. Three identities are published with
//! errors (Catalan for `J`, Catalan for `j`, convolution for `J`); both the
//! published ([`IdentityForm::PaperLiteral`]) and the repaired
//! ([`IdentityForm::Corrected`]) right-hand sides can be evaluated.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Pow;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{f_matrix, r_matrix, Mat2};
use crate::sequence::{eval_binet, exact_div, term_stream, SequenceKind, SequenceParams};

/// Published right-hand side or the repaired one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityForm {
    PaperLiteral,
    Corrected,
}

impl IdentityForm {
    pub const ALL: [IdentityForm; 2] = [IdentityForm::PaperLiteral, IdentityForm::Corrected];

    pub fn name(self) -> &'static str {
        match self {
            IdentityForm::PaperLiteral => "paper",
            IdentityForm::Corrected => "corrected",
        }
    }
}

impl fmt::Display for IdentityForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityForm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "paper" | "paper-literal" | "paper_literal" => Ok(IdentityForm::PaperLiteral),
            "corrected" => Ok(IdentityForm::Corrected),
            _ => Err(format!("unknown form `{s}` (expected paper or corrected)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    CatalanJ,
    CatalanLucas,
    CassiniJ,
    CassiniLucas,
    DOcagneJ,
    DOcagneLucas,
    ConvolutionJ,
    ConvolutionLucas,
    IntertermsA,
    IntertermsB,
    SumJ,
    SumLucas,
    ColumnVector,
    Commutation,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::CatalanJ,
        IdentityId::CatalanLucas,
        IdentityId::CassiniJ,
        IdentityId::CassiniLucas,
        IdentityId::DOcagneJ,
        IdentityId::DOcagneLucas,
        IdentityId::ConvolutionJ,
        IdentityId::ConvolutionLucas,
        IdentityId::IntertermsA,
        IdentityId::IntertermsB,
        IdentityId::SumJ,
        IdentityId::SumLucas,
        IdentityId::ColumnVector,
        IdentityId::Commutation,
    ];

    /// Identities that hold exactly as published.
    pub const CORRECT_AS_PUBLISHED: [IdentityId; 11] = [
        IdentityId::CassiniJ,
        IdentityId::CassiniLucas,
        IdentityId::DOcagneJ,
        IdentityId::DOcagneLucas,
        IdentityId::ConvolutionLucas,
        IdentityId::IntertermsA,
        IdentityId::IntertermsB,
        IdentityId::SumJ,
        IdentityId::SumLucas,
        IdentityId::ColumnVector,
        IdentityId::Commutation,
    ];

    /// Identities whose published right-hand side is wrong.
    pub const ERRATA: [IdentityId; 3] = [
        IdentityId::CatalanJ,
        IdentityId::CatalanLucas,
        IdentityId::ConvolutionJ,
    ];

    /// Kebab-case name used on the command line and in reports.
    pub fn slug(self) -> &'static str {
        match self {
            IdentityId::CatalanJ => "catalan-j",
            IdentityId::CatalanLucas => "catalan-lucas",
            IdentityId::CassiniJ => "cassini-j",
            IdentityId::CassiniLucas => "cassini-lucas",
            IdentityId::DOcagneJ => "docagne-j",
            IdentityId::DOcagneLucas => "docagne-lucas",
            IdentityId::ConvolutionJ => "convolution-j",
            IdentityId::ConvolutionLucas => "convolution-lucas",
            IdentityId::IntertermsA => "interterms-a",
            IdentityId::IntertermsB => "interterms-b",
            IdentityId::SumJ => "sum-j",
            IdentityId::SumLucas => "sum-lucas",
            IdentityId::ColumnVector => "column-vector",
            IdentityId::Commutation => "commutation",
        }
    }

    pub fn has_distinct_forms(self) -> bool {
        Self::ERRATA.contains(&self)
    }

    /// Index names in iteration order; sweeps enumerate them lexicographically.
    pub fn index_names(self) -> &'static [&'static str] {
        use IdentityId::*;
        match self {
            CatalanJ | CatalanLucas => &["n", "r"],
            DOcagneJ | DOcagneLucas => &["n", "m"],
            ConvolutionJ | ConvolutionLucas => &["m", "n"],
            CassiniJ | CassiniLucas | IntertermsA | IntertermsB | SumJ | SumLucas
            | ColumnVector => &["n"],
            Commutation => &[],
        }
    }

    /// Index domain as originally published. Checks run on a wider domain
    /// where the identity still holds; see [`IdentityId::domain`].
    pub fn stated_domain(self) -> &'static str {
        use IdentityId::*;
        match self {
            CatalanJ | CatalanLucas => "1 <= r <= n",
            CassiniJ | CassiniLucas => "n >= 2",
            DOcagneJ | DOcagneLucas => "0 <= m <= n",
            ConvolutionJ | ConvolutionLucas => "m, n >= 2",
            IntertermsA | IntertermsB | ColumnVector => "n >= 1",
            SumJ | SumLucas => "n >= 0",
            Commutation => "k >= 2",
        }
    }

    /// Index domain accepted by the verifier.
    pub fn domain(self) -> &'static str {
        use IdentityId::*;
        match self {
            CatalanJ | CatalanLucas => "0 <= r <= n",
            CassiniJ | CassiniLucas | IntertermsA | IntertermsB | ColumnVector => "n >= 1",
            DOcagneJ | DOcagneLucas => "0 <= m <= n",
            ConvolutionJ => "m, n >= 1",
            ConvolutionLucas => "m >= 1, n >= 0",
            SumJ | SumLucas => "n >= 0",
            Commutation => "k >= 2",
        }
    }

    fn admits(self, idx: &Indices) -> bool {
        use IdentityId::*;
        let g = |name| idx.get(name).unwrap_or(0);
        match self {
            CatalanJ | CatalanLucas => g("r") <= g("n"),
            CassiniJ | CassiniLucas | IntertermsA | IntertermsB | ColumnVector => g("n") >= 1,
            DOcagneJ | DOcagneLucas => g("m") <= g("n"),
            ConvolutionJ => g("m") >= 1 && g("n") >= 1,
            ConvolutionLucas => g("m") >= 1,
            SumJ | SumLucas | Commutation => true,
        }
    }

    fn within_stated(self, idx: &Indices) -> bool {
        use IdentityId::*;
        let g = |name| idx.get(name).unwrap_or(0);
        match self {
            CatalanJ | CatalanLucas => g("r") >= 1 && g("r") <= g("n"),
            CassiniJ | CassiniLucas => g("n") >= 2,
            ConvolutionJ | ConvolutionLucas => g("m") >= 2 && g("n") >= 2,
            _ => self.admits(idx),
        }
    }

    /// Largest term index any admissible instance with indices `<= bound` reads.
    fn max_term_index(self, bound: u64) -> u64 {
        use IdentityId::*;
        match self {
            CatalanJ | CatalanLucas | ConvolutionJ | ConvolutionLucas => 2 * bound + 1,
            Commutation => 1,
            _ => bound + 1,
        }
    }

    /// Admissible index tuples with every index `<= bound`, in lexicographic order.
    pub fn instances(self, bound: u64) -> Vec<Indices> {
        use IdentityId::*;
        let names = self.index_names();
        let tuples: Vec<Vec<u64>> = match self {
            CatalanJ | CatalanLucas | DOcagneJ | DOcagneLucas => (0..=bound)
                .flat_map(|n| (0..=n).map(move |second| vec![n, second]))
                .collect(),
            ConvolutionJ => (1..=bound)
                .flat_map(|m| (1..=bound).map(move |n| vec![m, n]))
                .collect(),
            ConvolutionLucas => (1..=bound)
                .flat_map(|m| (0..=bound).map(move |n| vec![m, n]))
                .collect(),
            CassiniJ | CassiniLucas | IntertermsA | IntertermsB | ColumnVector => {
                (1..=bound).map(|n| vec![n]).collect()
            }
            SumJ | SumLucas => (0..=bound).map(|n| vec![n]).collect(),
            Commutation => vec![vec![]],
        };
        tuples
            .into_iter()
            .map(|t| Indices(names.iter().copied().zip(t).collect()))
            .collect()
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.slug() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// Named indices of one instance, in the identity's declared order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Indices(Vec<(&'static str, u64)>);

impl Indices {
    pub fn new(pairs: &[(&'static str, u64)]) -> Self {
        Indices(pairs.to_vec())
    }

    pub fn get(&self, name: &str) -> Option<u64> {
        self.0.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, u64)> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Indices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}={v}")?;
        }
        Ok(())
    }
}

/// One identity at one `k` and one index tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdentityInstance {
    id: IdentityId,
    k: u64,
    indices: Indices,
}

impl IdentityInstance {
    /// Checks `k >= 2`, that exactly the identity's indices are named, and
    /// that they lie in [`IdentityId::domain`].
    pub fn new(id: IdentityId, k: u64, indices: Indices) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        let names: Vec<&str> = indices.iter().map(|(n, _)| n).collect();
        if names != id.index_names() {
            return Err(Error::Precondition {
                identity: id,
                detail: format!("expected indices {:?}, got {:?}", id.index_names(), names),
            });
        }
        if !id.admits(&indices) {
            return Err(Error::Precondition {
                identity: id,
                detail: format!("{indices} outside {}", id.domain()),
            });
        }
        Ok(IdentityInstance { id, k, indices })
    }

    pub fn id(&self) -> IdentityId {
        self.id
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn indices(&self) -> &Indices {
        &self.indices
    }

    fn index(&self, name: &str) -> u64 {
        self.indices.get(name).expect("validated at construction")
    }

    fn max_term_index(&self) -> u64 {
        self.indices.iter().map(|(_, v)| v).sum::<u64>() + 1
    }
}

impl fmt::Display for IdentityInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (k={}", self.id, self.k)?;
        if !self.indices.is_empty() {
            write!(f, ", {}", self.indices)?;
        }
        f.write_str(")")
    }
}

/// Value of one side of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Quantity {
    Scalar(BigInt),
    /// Column vector `(top, bottom)`.
    Vector(BigInt, BigInt),
    Matrix(Mat2),
    /// A closed form whose division was not exact.
    Fraction {
        numerator: BigInt,
        denominator: BigInt,
    },
}

impl Quantity {
    pub fn as_scalar(&self) -> Option<&BigInt> {
        match self {
            Quantity::Scalar(v) => Some(v),
            _ => None,
        }
    }
}

impl From<BigInt> for Quantity {
    fn from(v: BigInt) -> Self {
        Quantity::Scalar(v)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Scalar(v) => write!(f, "{v}"),
            Quantity::Vector(a, b) => write!(f, "({a}, {b})"),
            Quantity::Matrix(m) => write!(f, "{m}"),
            Quantity::Fraction {
                numerator,
                denominator,
            } => write!(f, "{numerator}/{denominator}"),
        }
    }
}

/// Outcome of checking one instance in one form; `passed()` iff `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    instance: IdentityInstance,
    form: IdentityForm,
    lhs: Quantity,
    rhs: Quantity,
    pass: bool,
}

impl IdentityReport {
    fn new(instance: IdentityInstance, form: IdentityForm, lhs: Quantity, rhs: Quantity) -> Self {
        let pass = lhs == rhs;
        IdentityReport {
            instance,
            form,
            lhs,
            rhs,
            pass,
        }
    }

    pub fn instance(&self) -> &IdentityInstance {
        &self.instance
    }

    pub fn form(&self) -> IdentityForm {
        self.form
    }

    pub fn lhs(&self) -> &Quantity {
        &self.lhs
    }

    pub fn rhs(&self) -> &Quantity {
        &self.rhs
    }

    pub fn passed(&self) -> bool {
        self.pass
    }

    /// Whether the instance lies inside the originally published domain.
    pub fn within_stated_domain(&self) -> bool {
        self.instance.id.within_stated(&self.instance.indices)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: lhs {} {} rhs {}",
            self.instance,
            self.form,
            self.lhs,
            if self.pass { "==" } else { "!=" },
            self.rhs
        )
    }
}

/// Terms `0..=max` of both kinds, once from iteration and once from the
/// closed form.
struct TermTables {
    k: u64,
    iter_j: Vec<BigInt>,
    iter_l: Vec<BigInt>,
    binet_j: Vec<BigInt>,
    binet_l: Vec<BigInt>,
}

impl TermTables {
    fn new(k: u64, max: u64) -> Self {
        let p = SequenceParams::new(SequenceKind::Jacobsthal, k).expect("k validated by caller");
        let l = p.with_kind(SequenceKind::JacobsthalLucas);
        let iterate = |params: &SequenceParams| -> Vec<BigInt> {
            term_stream(params, 0, max)
                .expect("0 <= max")
                .map(|(_, t)| t)
                .collect()
        };
        let closed = |params: &SequenceParams| -> Vec<BigInt> {
            (0..=max).map(|n| eval_binet(params, n)).collect()
        };
        TermTables {
            k,
            iter_j: iterate(&p),
            iter_l: iterate(&l),
            binet_j: closed(&p),
            binet_l: closed(&l),
        }
    }

    fn len(&self) -> u64 {
        self.iter_j.len() as u64
    }
}

fn sign(exponent: u64) -> BigInt {
    if exponent.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn sq(v: BigInt) -> BigInt {
    &v * &v
}

fn k_pow(k: u64, e: u64) -> BigInt {
    Pow::pow(&BigInt::from(k), e)
}

/// `numerator / denominator` as a scalar, or a fraction when inexact.
fn quotient(numerator: BigInt, denominator: BigInt) -> Quantity {
    match exact_div(&numerator, &denominator) {
        Some(q) => Quantity::Scalar(q),
        None => Quantity::Fraction {
            numerator,
            denominator,
        },
    }
}

fn evaluate(t: &TermTables, instance: IdentityInstance, form: IdentityForm) -> IdentityReport {
    use IdentityId::*;
    debug_assert!(instance.max_term_index() < t.len() || instance.id == Commutation);
    let k = t.k;
    let kb = BigInt::from(k);
    let at = |v: &[BigInt], i: u64| v[i as usize].clone();
    let (jl, ll, jr, lr) = (&t.iter_j, &t.iter_l, &t.binet_j, &t.binet_l);
    let idx = |name| instance.index(name);

    let (lhs, rhs): (Quantity, Quantity) = match instance.id {
        CatalanJ => {
            let (n, r) = (idx("n"), idx("r"));
            let lhs = at(jl, n + r) * at(jl, n - r) - sq(at(jl, n));
            let printed = sign(n - r) * k_pow(k, n - r) * sq(at(jr, r));
            let rhs: BigInt = match form {
                IdentityForm::PaperLiteral => printed,
                IdentityForm::Corrected => -printed,
            };
            (lhs.into(), rhs.into())
        }
        CatalanLucas => {
            let (n, r) = (idx("n"), idx("r"));
            let lhs = at(ll, n + r) * at(ll, n - r) - sq(at(ll, n));
            let exponent = match form {
                IdentityForm::PaperLiteral => n,
                IdentityForm::Corrected => n - r,
            };
            let rhs: BigInt = sign(n - r) * 8 * k_pow(k, exponent) * (k - 1) * sq(at(jr, r));
            (lhs.into(), rhs.into())
        }
        CassiniJ => {
            let n = idx("n");
            let lhs = at(jl, n + 1) * at(jl, n - 1) - sq(at(jl, n));
            (lhs.into(), (sign(n) * k_pow(k, n - 1)).into())
        }
        CassiniLucas => {
            let n = idx("n");
            let lhs = at(ll, n + 1) * at(ll, n - 1) - sq(at(ll, n));
            let rhs: BigInt = sign(n) * 8 * k_pow(k, n - 1) * (1 - &kb);
            (lhs.into(), rhs.into())
        }
        DOcagneJ => {
            let (n, m) = (idx("n"), idx("m"));
            let lhs = at(jl, n) * at(jl, m + 1) - at(jl, n + 1) * at(jl, m);
            let rhs: BigInt = sign(m) * k_pow(k, m) * at(jr, n - m);
            (lhs.into(), rhs.into())
        }
        DOcagneLucas => {
            let (n, m) = (idx("n"), idx("m"));
            let lhs = at(ll, n) * at(ll, m + 1) - at(ll, n + 1) * at(ll, m);
            let rhs: BigInt = sign(m) * 8 * (1 - &kb) * k_pow(k, m) * at(jr, n - m);
            (lhs.into(), rhs.into())
        }
        ConvolutionJ => {
            let (m, n) = (idx("m"), idx("n"));
            let last = match form {
                IdentityForm::PaperLiteral => n - 1,
                IdentityForm::Corrected => n,
            };
            let rhs: BigInt = at(jr, m) * at(jr, n + 1) + &kb * at(jr, m - 1) * at(jr, last);
            (at(jl, m + n).into(), rhs.into())
        }
        ConvolutionLucas => {
            let (m, n) = (idx("m"), idx("n"));
            let rhs: BigInt = at(lr, m) * at(jr, n + 1) + &kb * at(lr, m - 1) * at(jr, n);
            (at(ll, m + n).into(), rhs.into())
        }
        IntertermsA => {
            let n = idx("n");
            let rhs: BigInt = (at(jr, n) + &kb * at(jr, n - 1)) * 2;
            (at(ll, n).into(), rhs.into())
        }
        IntertermsB => {
            let n = idx("n");
            let rhs: BigInt = (at(jr, n) + (2 - &kb) * at(jr, n - 1)) * 2;
            (at(ll, n - 1).into(), rhs.into())
        }
        SumJ => {
            let n = idx("n");
            let lhs: BigInt = jl[..=n as usize].iter().sum();
            let numerator = &kb * at(jr, n) + at(jr, n + 1) - 1;
            (lhs.into(), quotient(numerator, BigInt::from(2 * (k - 1))))
        }
        SumLucas => {
            let n = idx("n");
            let lhs: BigInt = ll[..=n as usize].iter().sum();
            let numerator = &kb * at(lr, n) + at(lr, n + 1) + (&kb - 3) * 2;
            (lhs.into(), quotient(numerator, BigInt::from(2 * (k - 1))))
        }
        ColumnVector => {
            let n = idx("n");
            let f = f_matrix(k).expect("k validated");
            let (top, bottom) = f.apply(&at(lr, n), &at(lr, n - 1));
            (
                Quantity::Vector(at(ll, n + 1), at(ll, n)),
                Quantity::Vector(top, bottom),
            )
        }
        Commutation => {
            let f = f_matrix(k).expect("k validated");
            let r = r_matrix(k).expect("k validated");
            (Quantity::Matrix(&r * &f), Quantity::Matrix(&f * &r))
        }
    };
    IdentityReport::new(instance, form, lhs, rhs)
}

/// Checks one instance in one form.
pub fn check(instance: &IdentityInstance, form: IdentityForm) -> IdentityReport {
    let tables = TermTables::new(instance.k, instance.max_term_index());
    evaluate(&tables, instance.clone(), form)
}

fn run(
    id: IdentityId,
    k: u64,
    pairs: &[(&'static str, u64)],
    form: IdentityForm,
) -> Result<IdentityReport> {
    let instance = IdentityInstance::new(id, k, Indices::new(pairs))?;
    Ok(check(&instance, form))
}

/// `J(n+r) J(n-r) - J(n)^2` against `±(-1)^(n-r) k^(n-r) J(r)^2`.
pub fn check_catalan_j(k: u64, n: u64, r: u64, form: IdentityForm) -> Result<IdentityReport> {
    run(IdentityId::CatalanJ, k, &[("n", n), ("r", r)], form)
}

/// `j(n+r) j(n-r) - j(n)^2` against `8 (-1)^(n-r) k^e (k-1) J(r)^2`, where the
/// published exponent is `e = n` and the corrected one `e = n - r`.
pub fn check_catalan_lucas(k: u64, n: u64, r: u64, form: IdentityForm) -> Result<IdentityReport> {
    run(IdentityId::CatalanLucas, k, &[("n", n), ("r", r)], form)
}

pub fn check_cassini_j(k: u64, n: u64) -> Result<IdentityReport> {
    run(
        IdentityId::CassiniJ,
        k,
        &[("n", n)],
        IdentityForm::PaperLiteral,
    )
}

pub fn check_cassini_lucas(k: u64, n: u64) -> Result<IdentityReport> {
    run(
        IdentityId::CassiniLucas,
        k,
        &[("n", n)],
        IdentityForm::PaperLiteral,
    )
}

pub fn check_docagne_j(k: u64, n: u64, m: u64) -> Result<IdentityReport> {
    run(
        IdentityId::DOcagneJ,
        k,
        &[("n", n), ("m", m)],
        IdentityForm::PaperLiteral,
    )
}

pub fn check_docagne_lucas(k: u64, n: u64, m: u64) -> Result<IdentityReport> {
    run(
        IdentityId::DOcagneLucas,
        k,
        &[("n", n), ("m", m)],
        IdentityForm::PaperLiteral,
    )
}

/// `J(m+n)` against `J(m) J(n+1) + k J(m-1) J(x)`; published `x = n - 1`,
/// corrected `x = n`.
pub fn check_convolution_j(k: u64, m: u64, n: u64, form: IdentityForm) -> Result<IdentityReport> {
    run(IdentityId::ConvolutionJ, k, &[("m", m), ("n", n)], form)
}

pub fn check_convolution_lucas(k: u64, m: u64, n: u64) -> Result<IdentityReport> {
    run(
        IdentityId::ConvolutionLucas,
        k,
        &[("m", m), ("n", n)],
        IdentityForm::PaperLiteral,
    )
}

/// The two clauses relating `j` to neighbouring `J` terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntertermsClause {
    /// `j(n) = 2 (J(n) + k J(n-1))`
    A,
    /// `j(n-1) = 2 (J(n) + (2-k) J(n-1))`
    B,
}

pub fn check_interterms(k: u64, n: u64, clause: IntertermsClause) -> Result<IdentityReport> {
    let id = match clause {
        IntertermsClause::A => IdentityId::IntertermsA,
        IntertermsClause::B => IdentityId::IntertermsB,
    };
    run(id, k, &[("n", n)], IdentityForm::PaperLiteral)
}

/// Prefix sum against its closed form over `2 (k - 1)`. An inexact division
/// is reported as a failing check, never as an error.
pub fn check_sum(k: u64, n: u64, kind: SequenceKind) -> Result<IdentityReport> {
    let id = match kind {
        SequenceKind::Jacobsthal => IdentityId::SumJ,
        SequenceKind::JacobsthalLucas => IdentityId::SumLucas,
    };
    run(id, k, &[("n", n)], IdentityForm::PaperLiteral)
}

pub fn check_column_vector(k: u64, n: u64) -> Result<IdentityReport> {
    run(
        IdentityId::ColumnVector,
        k,
        &[("n", n)],
        IdentityForm::PaperLiteral,
    )
}

pub fn check_commutation(k: u64) -> Result<IdentityReport> {
    run(IdentityId::Commutation, k, &[], IdentityForm::PaperLiteral)
}

/// Grid to sweep: every admissible index tuple up to `index_bound` for every
/// `k` in `k_range`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub ids: Vec<IdentityId>,
    pub k_range: RangeInclusive<u64>,
    pub index_bound: u64,
    pub forms: Vec<IdentityForm>,
    /// How many failing reports to keep per `(id, form)`; counts are exact regardless.
    pub keep_failures: usize,
}

impl SweepConfig {
    pub fn new(
        ids: impl IntoIterator<Item = IdentityId>,
        k_range: RangeInclusive<u64>,
        index_bound: u64,
        forms: impl IntoIterator<Item = IdentityForm>,
    ) -> Self {
        SweepConfig {
            ids: ids.into_iter().collect(),
            k_range,
            index_bound,
            forms: forms.into_iter().collect(),
            keep_failures: 10,
        }
    }
}

/// Aggregate for one `(identity, form)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepEntry {
    pub id: IdentityId,
    pub form: IdentityForm,
    pub k_range: RangeInclusive<u64>,
    pub index_bound: u64,
    pub checks: u64,
    pub failure_count: u64,
    /// Earliest failures in sweep order (ascending k, then indices).
    pub failures: Vec<IdentityReport>,
}

impl SweepEntry {
    pub fn first_counterexample(&self) -> Option<&IdentityReport> {
        self.failures.first()
    }

    pub fn all_pass(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(SweepEntry::all_pass)
    }

    pub fn total_checks(&self) -> u64 {
        self.entries.iter().map(|e| e.checks).sum()
    }

    pub fn total_failures(&self) -> u64 {
        self.entries.iter().map(|e| e.failure_count).sum()
    }

    pub fn entry(&self, id: IdentityId, form: IdentityForm) -> Option<&SweepEntry> {
        self.entries.iter().find(|e| e.id == id && e.form == form)
    }
}

fn dedup<T: PartialEq + Copy>(items: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(items.len());
    for &item in items {
        if !out.contains(&item) {
            out.push(item);
        }
    }
    out
}

/// Runs every instance of the grid. Work is split by `k` across threads and
/// merged in ascending `k`, so results do not depend on scheduling.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    if config.ids.is_empty() {
        return Err(Error::EmptySweep("no identities selected"));
    }
    if config.forms.is_empty() {
        return Err(Error::EmptySweep("no forms selected"));
    }
    if config.k_range.is_empty() {
        return Err(Error::EmptySweep("k range is empty"));
    }
    let k_start = *config.k_range.start();
    if k_start < 2 {
        return Err(Error::InvalidK(k_start));
    }
    let ids = dedup(&config.ids);
    let forms = dedup(&config.forms);
    let pairs: Vec<(IdentityId, IdentityForm)> = ids
        .iter()
        .flat_map(|&id| forms.iter().map(move |&form| (id, form)))
        .collect();
    let max_index = ids
        .iter()
        .map(|id| id.max_term_index(config.index_bound))
        .max()
        .unwrap_or(1);
    let grids: Vec<Vec<Indices>> = ids
        .iter()
        .map(|id| id.instances(config.index_bound))
        .collect();

    // Per k: (checks, failure count, kept failures) for each (id, form) pair.
    let per_k: Vec<Vec<(u64, u64, Vec<IdentityReport>)>> = config
        .k_range
        .clone()
        .into_par_iter()
        .map(|k| {
            let tables = TermTables::new(k, max_index);
            pairs
                .iter()
                .map(|&(id, form)| {
                    let grid = &grids[ids.iter().position(|&i| i == id).expect("id listed")];
                    let mut failures = Vec::new();
                    let mut failure_count = 0;
                    for indices in grid {
                        let instance = IdentityInstance {
                            id,
                            k,
                            indices: indices.clone(),
                        };
                        let report = evaluate(&tables, instance, form);
                        if !report.passed() {
                            failure_count += 1;
                            if failures.len() < config.keep_failures {
                                failures.push(report);
                            }
                        }
                    }
                    (grid.len() as u64, failure_count, failures)
                })
                .collect()
        })
        .collect();

    let entries = pairs
        .iter()
        .enumerate()
        .map(|(slot, &(id, form))| {
            let mut entry = SweepEntry {
                id,
                form,
                k_range: config.k_range.clone(),
                index_bound: config.index_bound,
                checks: 0,
                failure_count: 0,
                failures: Vec::new(),
            };
            for row in &per_k {
                let (checks, count, failures) = &row[slot];
                entry.checks += checks;
                entry.failure_count += count;
                let room = config.keep_failures - entry.failures.len();
                entry.failures.extend(failures.iter().take(room).cloned());
            }
            entry
        })
        .collect();
    Ok(SweepReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use IdentityForm::{Corrected, PaperLiteral};

    fn scalar(r: &IdentityReport) -> (i64, i64) {
        let s = |q: &Quantity| i64::try_from(q.as_scalar().unwrap()).unwrap();
        (s(r.lhs()), s(r.rhs()))
    }

    #[test]
    fn catalan_j() {
        let r = check_catalan_j(2, 3, 1, Corrected).unwrap();
        assert_eq!(scalar(&r), (-4, -4));
        assert!(r.passed());
        let r = check_catalan_j(2, 3, 1, PaperLiteral).unwrap();
        assert_eq!(scalar(&r), (-4, 4));
        assert!(!r.passed());
        for form in IdentityForm::ALL {
            let r = check_catalan_j(5, 7, 0, form).unwrap();
            assert_eq!(scalar(&r), (0, 0));
            assert!(!r.within_stated_domain());
        }
        assert!(matches!(
            check_catalan_j(2, 3, 4, Corrected),
            Err(Error::Precondition {
                identity: IdentityId::CatalanJ,
                ..
            })
        ));
    }

    #[test]
    fn catalan_lucas() {
        let r = check_catalan_lucas(2, 3, 2, Corrected).unwrap();
        assert_eq!(scalar(&r), (-16, -16));
        let r = check_catalan_lucas(2, 3, 2, PaperLiteral).unwrap();
        assert_eq!(scalar(&r), (-16, -64));
        assert!(!r.passed());
        let r = check_catalan_lucas(3, 2, 1, Corrected).unwrap();
        assert_eq!(scalar(&r), (-48, -48));
        assert!(check_catalan_lucas(3, 1, 2, Corrected).is_err());
    }

    #[test]
    fn cassini() {
        assert_eq!(scalar(&check_cassini_j(3, 4).unwrap()), (27, 27));
        assert_eq!(scalar(&check_cassini_lucas(2, 2).unwrap()), (-16, -16));
        let r = check_cassini_j(2, 1).unwrap();
        assert_eq!(scalar(&r), (-1, -1));
        assert!(!r.within_stated_domain());
        assert!(check_cassini_j(2, 0).is_err());
        assert!(check_cassini_lucas(2, 0).is_err());
    }

    #[test]
    fn docagne() {
        assert_eq!(scalar(&check_docagne_j(2, 3, 1).unwrap()), (-2, -2));
        assert_eq!(scalar(&check_docagne_lucas(2, 2, 1).unwrap()), (16, 16));
        assert_eq!(scalar(&check_docagne_j(6, 9, 9).unwrap()), (0, 0));
        assert!(check_docagne_j(2, 1, 2).is_err());
    }

    #[test]
    fn convolution() {
        assert_eq!(
            scalar(&check_convolution_j(3, 2, 3, Corrected).unwrap()),
            (61, 61)
        );
        let r = check_convolution_j(3, 2, 3, PaperLiteral).unwrap();
        assert_eq!(scalar(&r), (61, 46));
        for form in IdentityForm::ALL {
            assert_eq!(scalar(&check_convolution_j(2, 2, 2, form).unwrap()), (5, 5));
        }
        assert_eq!(scalar(&check_convolution_lucas(2, 2, 2).unwrap()), (22, 22));
        assert_eq!(
            scalar(&check_convolution_lucas(3, 3, 2).unwrap()),
            (242, 242)
        );
        for k in 2..8 {
            assert_eq!(scalar(&check_convolution_lucas(k, 1, 0).unwrap()), (2, 2));
        }
        assert!(check_convolution_j(3, 0, 2, Corrected).is_err());
        assert!(check_convolution_lucas(3, 0, 2).is_err());
    }

    #[test]
    fn interterms() {
        assert_eq!(
            scalar(&check_interterms(3, 4, IntertermsClause::A).unwrap()),
            (82, 82)
        );
        assert_eq!(
            scalar(&check_interterms(3, 4, IntertermsClause::B).unwrap()),
            (26, 26)
        );
        assert_eq!(
            scalar(&check_interterms(7, 1, IntertermsClause::A).unwrap()),
            (2, 2)
        );
        assert!(check_interterms(3, 0, IntertermsClause::B).is_err());
    }

    #[test]
    fn sums() {
        assert_eq!(
            scalar(&check_sum(3, 4, SequenceKind::Jacobsthal).unwrap()),
            (30, 30)
        );
        assert_eq!(
            scalar(&check_sum(2, 2, SequenceKind::JacobsthalLucas).unwrap()),
            (10, 10)
        );
        for k in 2..9 {
            assert_eq!(
                scalar(&check_sum(k, 0, SequenceKind::Jacobsthal).unwrap()),
                (0, 0)
            );
        }
    }

    #[test]
    fn inexact_quotient_is_a_fraction() {
        assert_eq!(
            quotient(7.into(), 2.into()),
            Quantity::Fraction {
                numerator: 7.into(),
                denominator: 2.into()
            }
        );
        assert_eq!(
            quotient((-8).into(), 2.into()),
            Quantity::Scalar((-4).into())
        );
        let failing = IdentityReport::new(
            IdentityInstance::new(IdentityId::SumJ, 2, Indices::new(&[("n", 0)])).unwrap(),
            PaperLiteral,
            Quantity::Scalar(3.into()),
            quotient(7.into(), 2.into()),
        );
        assert!(!failing.passed());
    }

    #[test]
    fn matrix_identities() {
        let r = check_column_vector(3, 4).unwrap();
        assert_eq!(r.lhs(), &Quantity::Vector(242.into(), 82.into()));
        assert!(r.passed());
        assert!(check_column_vector(3, 0).is_err());
        assert!(check_commutation(10).unwrap().passed());
        assert!(check_commutation(1).is_err());
    }

    #[test]
    fn instance_validation() {
        assert!(matches!(
            IdentityInstance::new(IdentityId::CassiniJ, 3, Indices::new(&[("m", 2)])),
            Err(Error::Precondition { .. })
        ));
        assert_eq!(
            IdentityInstance::new(IdentityId::CassiniJ, 1, Indices::new(&[("n", 2)])),
            Err(Error::InvalidK(1))
        );
    }

    #[test]
    fn every_instance_in_a_grid_is_admissible() {
        for id in IdentityId::ALL {
            for indices in id.instances(6) {
                assert!(
                    IdentityInstance::new(id, 2, indices.clone()).is_ok(),
                    "{id} {indices}"
                );
            }
        }
    }

    #[test]
    fn slugs_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.slug().parse::<IdentityId>().unwrap(), id);
        }
        assert!("fermat".parse::<IdentityId>().is_err());
    }

    #[test]
    fn cassini_sweep_counts() {
        let cfg = SweepConfig::new([IdentityId::CassiniJ], 2..=5, 30, [PaperLiteral]);
        let report = sweep(&cfg).unwrap();
        assert_eq!(report.total_checks(), 120);
        assert_eq!(report.total_failures(), 0);
    }

    #[test]
    fn catalan_sweep_first_counterexample() {
        let cfg = SweepConfig::new([IdentityId::CatalanJ], 2..=5, 20, [PaperLiteral]);
        let report = sweep(&cfg).unwrap();
        let entry = report.entry(IdentityId::CatalanJ, PaperLiteral).unwrap();
        // Published form fails exactly where J(r) != 0, i.e. r >= 1.
        let per_k: u64 = (1..=20).sum();
        assert_eq!(entry.failure_count, 4 * per_k);
        let first = entry.first_counterexample().unwrap();
        assert_eq!(first.instance().k(), 2);
        assert_eq!(
            first.instance().indices(),
            &Indices::new(&[("n", 1), ("r", 1)])
        );
        assert!(entry
            .failures
            .iter()
            .any(|f| f.instance().indices() == &Indices::new(&[("n", 3), ("r", 1)])));
        assert_eq!(report, sweep(&cfg).unwrap());
    }

    #[test]
    fn convolution_sweep_at_k2() {
        let cfg = SweepConfig::new([IdentityId::ConvolutionJ], 2..=2, 12, IdentityForm::ALL);
        let report = sweep(&cfg).unwrap();
        assert!(report
            .entry(IdentityId::ConvolutionJ, Corrected)
            .unwrap()
            .all_pass());
        let literal = report
            .entry(IdentityId::ConvolutionJ, PaperLiteral)
            .unwrap();
        // Published form differs by 2 J(m-1) (J(n) - J(n-1)), which vanishes only
        // for m = 1 or n = 2 when k = 2.
        assert_eq!(literal.checks, 144);
        assert_eq!(literal.failure_count, 144 - 12 - 11);
    }

    #[test]
    fn sweep_rejects_empty_inputs() {
        let ok = SweepConfig::new([IdentityId::SumJ], 2..=3, 4, [Corrected]);
        let mut c = ok.clone();
        c.ids.clear();
        assert!(sweep(&c).is_err());
        let mut c = ok.clone();
        c.forms.clear();
        assert!(sweep(&c).is_err());
        let mut c = ok.clone();
        #[allow(clippy::reversed_empty_ranges)]
        {
            c.k_range = 5..=3;
        }
        assert!(sweep(&c).is_err());
        let mut c = ok;
        c.k_range = 1..=3;
        assert_eq!(sweep(&c).unwrap_err(), Error::InvalidK(1));
    }
}
