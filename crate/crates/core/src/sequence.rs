//! The sequence family and its evaluation strategies.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::matrix;

/// Which member of the family: `J(k, n)` or `j(k, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceKind {
    Jacobsthal,
    JacobsthalLucas,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 2] = [SequenceKind::Jacobsthal, SequenceKind::JacobsthalLucas];

    /// Conventional one-letter symbol, `J` or `j`.
    pub fn symbol(self) -> &'static str {
        match self {
            SequenceKind::Jacobsthal => "J",
            SequenceKind::JacobsthalLucas => "j",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for SequenceKind {
    type Err = String;

    /// Accepts the symbols `J` / `j` (case-sensitive) and the long names.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "J" => Ok(SequenceKind::Jacobsthal),
            "j" => Ok(SequenceKind::JacobsthalLucas),
            _ => match s.to_ascii_lowercase().as_str() {
                "jacobsthal" => Ok(SequenceKind::Jacobsthal),
                "jacobsthal-lucas" | "lucas" => Ok(SequenceKind::JacobsthalLucas),
                _ => Err(format!(
                    "unknown sequence kind `{s}` (expected J, j, jacobsthal or jacobsthal-lucas)"
                )),
            },
        }
    }
}

/// A validated `(kind, k)` pair identifying one sequence of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceParams {
    kind: SequenceKind,
    k: u64,
}

impl SequenceParams {
    /// Rejects `k < 2`; `k = 1` degenerates to `x(n) = x(n - 2)`.
    pub fn new(kind: SequenceKind, k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        Ok(SequenceParams { kind, k })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The same `k` with the other kind.
    pub fn with_kind(&self, kind: SequenceKind) -> Self {
        SequenceParams { kind, k: self.k }
    }
}

impl fmt::Display for SequenceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(k={})", self.kind, self.k)
    }
}

/// Terms 0 and 1.
pub fn initial_terms(params: &SequenceParams) -> (BigInt, BigInt) {
    match params.kind {
        SequenceKind::Jacobsthal => (BigInt::from(0), BigInt::from(1)),
        SequenceKind::JacobsthalLucas => (BigInt::from(2), BigInt::from(2)),
    }
}

/// One recurrence step: `(k - 1) * last + k * before_last`.
pub(crate) fn step(k: u64, last: &BigInt, before_last: &BigInt) -> BigInt {
    last * (k - 1) + before_last * k
}

/// n-th term by running the recurrence forward, O(n) multiply-adds.
pub fn eval_iter(params: &SequenceParams, n: u64) -> BigInt {
    let (mut prev, mut cur) = initial_terms(params);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = step(params.k, &cur, &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Numerator and divisor of the closed form; the divisor is always `k + 1`.
///
/// `J`: `k^n - (-1)^n`; `j`: `4 k^n + 2 (k - 1) (-1)^n`.
pub fn binet_parts(params: &SequenceParams, n: u64) -> (BigInt, BigInt) {
    let k = BigInt::from(params.k);
    let k_pow_n: BigInt = Pow::pow(&k, n);
    let odd = n % 2 == 1;
    let numerator = match params.kind {
        SequenceKind::Jacobsthal => {
            if odd {
                k_pow_n + 1
            } else {
                k_pow_n - 1
            }
        }
        SequenceKind::JacobsthalLucas => {
            let tail = BigInt::from(2 * (params.k - 1));
            if odd {
                k_pow_n * 4 - tail
            } else {
                k_pow_n * 4 + tail
            }
        }
    };
    (numerator, k + 1)
}

/// Quotient when `divisor` divides `numerator` exactly.
pub(crate) fn exact_div(numerator: &BigInt, divisor: &BigInt) -> Option<BigInt> {
    let (q, r) = numerator.div_rem(divisor);
    r.is_zero().then_some(q)
}

/// n-th term from the closed form with exact division by `k + 1`.
///
/// # Panics
///
/// If the division leaves a remainder, which would mean the closed form is
/// implemented wrongly.
pub fn eval_binet(params: &SequenceParams, n: u64) -> BigInt {
    let (numerator, divisor) = binet_parts(params, n);
    match exact_div(&numerator, &divisor) {
        Some(q) => q,
        None => panic!("closed form for {params} at n={n} is not divisible by {divisor}"),
    }
}

/// n-th term via `F_k^n`, O(log n) matrix products.
pub fn eval_matrix(params: &SequenceParams, n: u64) -> BigInt {
    // F_k^n = [[J(n+1), k J(n)], [J(n), k J(n-1)]], with F_k^0 = I.
    let m = matrix::jacobsthal_power(params.k, n);
    match params.kind {
        SequenceKind::Jacobsthal => m.c,
        // j(n) = 2 (J(n) + k J(n-1)); also holds at n = 0 since I = [[1, 0], [0, 1]].
        SequenceKind::JacobsthalLucas => (m.c + m.d) * 2,
    }
}

/// Evaluation strategy selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalMethod {
    Iter,
    Binet,
    Matrix,
}

impl EvalMethod {
    pub const ALL: [EvalMethod; 3] = [EvalMethod::Iter, EvalMethod::Binet, EvalMethod::Matrix];

    pub fn name(self) -> &'static str {
        match self {
            EvalMethod::Iter => "iter",
            EvalMethod::Binet => "binet",
            EvalMethod::Matrix => "matrix",
        }
    }

    pub fn evaluate(self, params: &SequenceParams, n: u64) -> BigInt {
        match self {
            EvalMethod::Iter => eval_iter(params, n),
            EvalMethod::Binet => eval_binet(params, n),
            EvalMethod::Matrix => eval_matrix(params, n),
        }
    }
}

impl fmt::Display for EvalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EvalMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        EvalMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}` (expected iter, binet or matrix)"))
    }
}

/// Sliding state of the streaming generator: term `n` and, for `n >= 1`,
/// term `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermWindow {
    pub params: SequenceParams,
    pub n: u64,
    pub value_n: BigInt,
    pub value_n_minus_1: Option<BigInt>,
}

impl TermWindow {
    /// Window at index `n`, positioned with a matrix power instead of iterating.
    pub fn seek(params: SequenceParams, n: u64) -> Self {
        if n == 0 {
            let (t0, _) = initial_terms(&params);
            return TermWindow {
                params,
                n,
                value_n: t0,
                value_n_minus_1: None,
            };
        }
        // F_k^(n-1) holds J(n), J(n-1) in its first column and k J(n-1), k J(n-2)
        // in its second.
        let m = matrix::jacobsthal_power(params.k, n - 1);
        let (value_n, previous) = match params.kind {
            SequenceKind::Jacobsthal => (m.a, m.c),
            SequenceKind::JacobsthalLucas => ((m.a + m.b) * 2, (m.c + m.d) * 2),
        };
        TermWindow {
            params,
            n,
            value_n,
            value_n_minus_1: Some(previous),
        }
    }

    /// Moves the window to `n + 1`.
    pub fn advance(&mut self) {
        let next = match &self.value_n_minus_1 {
            Some(prev) => step(self.params.k, &self.value_n, prev),
            None => initial_terms(&self.params).1,
        };
        let current = std::mem::replace(&mut self.value_n, next);
        self.value_n_minus_1 = Some(current);
        self.n += 1;
    }

    /// Re-derives the window from scratch and compares.
    pub fn is_consistent(&self) -> bool {
        self.value_n == eval_iter(&self.params, self.n)
            && match (&self.value_n_minus_1, self.n) {
                (None, 0) => true,
                (Some(prev), n) if n >= 1 => *prev == eval_iter(&self.params, n - 1),
                _ => false,
            }
    }
}

/// Iterator over `(n, term(n))` for `n` in `from..=to`.
#[derive(Debug, Clone)]
pub struct TermStream {
    window: TermWindow,
    to: u64,
    done: bool,
}

impl Iterator for TermStream {
    type Item = (u64, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = (self.window.n, self.window.value_n.clone());
        if self.window.n == self.to {
            self.done = true;
        } else {
            self.window.advance();
        }
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        if self.done {
            return (0, Some(0));
        }
        let left = usize::try_from(self.to - self.window.n + 1).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// Consecutive terms `from..=to`, seeking in O(log from) and then iterating.
pub fn term_stream(params: &SequenceParams, from: u64, to: u64) -> Result<TermStream> {
    if from > to {
        return Err(Error::InvalidRange { from, to });
    }
    Ok(TermStream {
        window: TermWindow::seek(*params, from),
        to,
        done: false,
    })
}

/// `term(0) + term(1) + ... + term(n)` by direct accumulation.
pub fn prefix_sum(params: &SequenceParams, n: u64) -> BigInt {
    term_stream(params, 0, n)
        .expect("0 <= n")
        .map(|(_, t)| t)
        .sum()
}
