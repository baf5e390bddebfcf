//! Hirzebruch L-polynomials with exact rational coefficients.
//!
//! The weight-`k` L-polynomial is the degree-`k` part of the multiplicative
//! sequence attached to the characteristic power series
//! `Q(x) = sqrt(x)/tanh(sqrt(x))`, rewritten in the graded Pontryagin
//! variables `p_1, ..., p_k` (where `p_i` carries weight `i`).  The first
//! few are
//!
//! ```text
//! L_1 = 1/3 p1
//! L_2 = 7/45 p2 - 1/45 p1^2
//! L_3 = 62/945 p3 - 13/945 p1 p2 + 2/945 p1^3
//! ```
//!
//! `Q` is produced by exact truncated division of the even and odd parts of
//! the exponential series, so no table of Bernoulli numbers is needed, and
//! the rewriting into the `p_i` is done by solving the exact linear system
//! between the monomial-symmetric and elementary-symmetric bases on `k`
//! formal variables.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

mod graded;
mod symmetric;

pub use graded::{evaluate_l_class, GradedClass};

/// Exact rational scalar: arbitrary-precision numerator and denominator,
/// stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Soft upper bound on the degree accepted by [`l_polynomial`].  The
/// symmetric-function linear algebra grows factorially with the degree and
/// desk-scale use never needs more; [`l_polynomial_with_cap`] overrides it.
pub const DEFAULT_DEGREE_CAP: usize = 8;

/// Errors raised by the L-polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpolyError {
    /// `l_polynomial(0)` is rejected; weight zero has no Pontryagin part.
    DegreeZero,
    /// Requested degree exceeds the configured cap.
    DegreeCapExceeded { degree: usize, cap: usize },
    /// A total Pontryagin class must have constant term one.
    ConstantTermNotOne,
    /// A parameter violated its documented range (e.g. `t = 0`).
    InvalidParameter(&'static str),
}

impl fmt::Display for LpolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpolyError::DegreeZero => write!(f, "L-polynomial degree must be at least 1"),
            LpolyError::DegreeCapExceeded { degree, cap } => {
                write!(f, "degree {degree} exceeds the cap {cap}")
            }
            LpolyError::ConstantTermNotOne => {
                write!(f, "total Pontryagin class must have constant term 1")
            }
            LpolyError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl std::error::Error for LpolyError {}

/// A partition of a positive integer, stored with weakly decreasing parts.
///
/// As a key of an [`LPolynomial`], the partition `[2, 1, 1]` stands for the
/// monomial `p1^2 p2` of weight 4.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from arbitrary parts: zeros are dropped and the
    /// rest sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All partitions of `k`, largest part first, in descending
    /// lexicographic order: `[k], [k-1, 1], ..., [1, 1, ..., 1]`.
    pub fn all_of(k: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(current.clone()));
                return;
            }
            let mut part = remaining.min(max_part);
            while part >= 1 {
                current.push(part);
                descend(remaining - part, part, current, out);
                current.pop();
                part -= 1;
            }
        }
        descend(k, k, &mut current, &mut out);
        out
    }

    /// The monomial `p1^2 p2` rendering used in text output.
    fn monomial_string(&self) -> String {
        let mut pieces = Vec::new();
        let mut ascending: Vec<u32> = self.0.clone();
        ascending.reverse();
        let mut i = 0;
        while i < ascending.len() {
            let part = ascending[i];
            let mut mult = 1;
            while i + mult < ascending.len() && ascending[i + mult] == part {
                mult += 1;
            }
            if mult == 1 {
                pieces.push(format!("p{part}"));
            } else {
                pieces.push(format!("p{part}^{mult}"));
            }
            i += mult;
        }
        pieces.join(" ")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A weight-`k` polynomial in the graded Pontryagin variables, stored as a
/// map from partitions of `k` to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LPolynomial {
    degree: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl LPolynomial {
    fn new(degree: u32, terms: BTreeMap<Partition, Rational>) -> Self {
        debug_assert!(terms.keys().all(|p| p.weight() == degree));
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        LPolynomial { degree, terms }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of the monomial indexed by `partition`; zero when absent.
    pub fn coefficient(&self, partition: &Partition) -> Rational {
        self.terms.get(partition).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in descending lexicographic partition order, so for
    /// `L_3` the iteration yields `p3`, `p1 p2`, then `p1^3`.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter().rev()
    }

    /// Least common multiple of the absolute values of the coefficient
    /// denominators: the constant `c_k`.
    pub fn denominator_lcm(&self) -> BigUint {
        let mut acc = BigUint::one();
        for coeff in self.terms.values() {
            acc = acc.lcm(coeff.denom().magnitude());
        }
        acc
    }
}

impl fmt::Display for LPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (partition, coeff)) in self.terms().enumerate() {
            let abs = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{} {}", abs, partition.monomial_string())?;
        }
        Ok(())
    }
}

/// The denominator data of a fixed weight: `c_k` is the lcm of the
/// denominators of `L_k`, `t` the integrality parameter for the Pontryagin
/// classes (1 in the smooth case) and `r_k = c_k * t` the scale of the
/// lattice `(1/r_k) * FH^{4k}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenominatorConstants {
    pub c_k: BigUint,
    pub t: BigUint,
    pub r_k: BigUint,
}

/// Coefficients `q_0 ... q_max_degree` of the characteristic series
/// `Q(x) = sqrt(x)/tanh(sqrt(x))`, one weight per power of `x`.
///
/// Writing `cosh(sqrt x) = sum x^m/(2m)!` and
/// `sinh(sqrt x)/sqrt x = sum x^m/(2m+1)!`, the series is the exact
/// quotient of the two, computed term by term.
pub fn q_series(max_degree: usize) -> Vec<Rational> {
    // factorial table up to (2*max_degree + 1)!
    let mut factorials = Vec::with_capacity(2 * max_degree + 2);
    factorials.push(BigInt::one());
    for i in 1..=(2 * max_degree + 1) {
        let last = factorials.last().unwrap().clone();
        factorials.push(last * BigInt::from(i));
    }
    let numer = |m: usize| Rational::new(BigInt::one(), factorials[2 * m].clone());
    let denom = |m: usize| Rational::new(BigInt::one(), factorials[2 * m + 1].clone());

    let mut q: Vec<Rational> = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        // denom has constant term 1, so q_n = numer_n - sum_{j<n} q_j denom_{n-j}
        let mut value = numer(n);
        for (j, qj) in q.iter().enumerate() {
            value -= qj * denom(n - j);
        }
        q.push(value);
    }
    q
}

/// The weight-`k` Hirzebruch L-polynomial, with the default degree cap.
pub fn l_polynomial(k: usize) -> Result<LPolynomial, LpolyError> {
    l_polynomial_with_cap(k, DEFAULT_DEGREE_CAP)
}

/// As [`l_polynomial`] but with a caller-chosen degree cap.
pub fn l_polynomial_with_cap(k: usize, cap: usize) -> Result<LPolynomial, LpolyError> {
    if k == 0 {
        return Err(LpolyError::DegreeZero);
    }
    if k > cap {
        return Err(LpolyError::DegreeCapExceeded { degree: k, cap });
    }

    let q = q_series(k);
    let partitions = Partition::all_of(k as u32);

    // Weight-k part of prod_{i=1..k} Q(x_i) in the monomial-symmetric basis:
    // the coefficient of m_mu is prod_i q_{mu_i}.
    let target: Vec<Rational> = partitions
        .iter()
        .map(|mu| {
            let mut c = Rational::one();
            for &part in mu.parts() {
                c *= q[part as usize].clone();
            }
            c
        })
        .collect();

    // Change-of-basis matrix: entry [lambda][mu] is the coefficient of the
    // canonical monomial x^mu in the expansion of e_lambda over k variables.
    let mut matrix: Vec<Vec<Rational>> = Vec::with_capacity(partitions.len());
    for lambda in &partitions {
        let expanded = symmetric::elementary_product(k, lambda.parts());
        let row = partitions
            .iter()
            .map(|mu| {
                let mut exponents = vec![0u32; k];
                for (i, &part) in mu.parts().iter().enumerate() {
                    exponents[i] = part;
                }
                expanded
                    .get(&exponents)
                    .map(|c| Rational::from(c.clone()))
                    .unwrap_or_else(Rational::zero)
            })
            .collect();
        matrix.push(row);
    }

    // Solve sum_lambda d_lambda * e_lambda = target, i.e. d * M = target.
    let solution = solve_transposed(matrix, target)
        .expect("elementary symmetric functions form a basis");

    let mut terms = BTreeMap::new();
    for (lambda, coeff) in partitions.into_iter().zip(solution) {
        if !coeff.is_zero() {
            terms.insert(lambda, coeff);
        }
    }
    Ok(LPolynomial::new(k as u32, terms))
}

/// `c_k`, the caller's integrality parameter `t`, and `r_k = c_k * t`.
///
/// `t` is a single positive integer applied uniformly to every weight
/// (with `t = 1` for integral Pontryagin classes, the smooth case); a
/// weight-dependent integrality parameter is not implemented.
pub fn denominator_constants(k: usize, t: u64) -> Result<DenominatorConstants, LpolyError> {
    if t == 0 {
        return Err(LpolyError::InvalidParameter("t must be at least 1"));
    }
    let c_k = l_polynomial(k)?.denominator_lcm();
    let t = BigUint::from(t);
    let r_k = &c_k * &t;
    Ok(DenominatorConstants { c_k, t, r_k })
}

/// Solves `x * M = rhs` for a square rational matrix `M` (rows indexed like
/// `x`), by exact Gaussian elimination on the transpose.
#[allow(clippy::needless_range_loop)] // the elimination mutates two rows by index
fn solve_transposed(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = matrix.len();
    // Build augmented transpose: columns of `matrix` become rows.
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|col| {
            let mut row: Vec<Rational> = (0..n).map(|r| matrix[r][col].clone()).collect();
            row.push(rhs[col].clone());
            row
        })
        .collect();

    for pivot in 0..n {
        let row_with_pivot = (pivot..n).find(|&r| !aug[r][pivot].is_zero())?;
        aug.swap(pivot, row_with_pivot);
        let inv = aug[pivot][pivot].clone();
        for c in pivot..=n {
            aug[pivot][c] = &aug[pivot][c] / &inv;
        }
        for r in 0..n {
            if r != pivot && !aug[r][pivot].is_zero() {
                let factor = aug[r][pivot].clone();
                for c in pivot..=n {
                    let delta = &factor * &aug[pivot][c];
                    aug[r][c] -= delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_series_small_degrees() {
        assert_eq!(q_series(0), vec![rat(1, 1)]);
        assert_eq!(q_series(1), vec![rat(1, 1), rat(1, 3)]);
        assert_eq!(q_series(2), vec![rat(1, 1), rat(1, 3), rat(-1, 45)]);
        assert_eq!(
            q_series(4),
            vec![rat(1, 1), rat(1, 3), rat(-1, 45), rat(2, 945), rat(-1, 4725)]
        );
    }

    #[test]
    fn q_series_invariants() {
        for coeff in q_series(10) {
            assert!(coeff.denom().is_positive());
            assert!(coeff.numer().gcd(coeff.denom()).is_one());
        }
    }

    #[test]
    fn l1_is_third_of_p1() {
        let l1 = l_polynomial(1).unwrap();
        assert_eq!(l1.terms.len(), 1);
        assert_eq!(l1.coefficient(&Partition::new(vec![1])), rat(1, 3));
    }

    #[test]
    fn l2_golden() {
        let l2 = l_polynomial(2).unwrap();
        assert_eq!(l2.coefficient(&Partition::new(vec![2])), rat(7, 45));
        assert_eq!(l2.coefficient(&Partition::new(vec![1, 1])), rat(-1, 45));
        assert_eq!(l2.terms.len(), 2);
        assert_eq!(l2.to_string(), "7/45 p2 - 1/45 p1^2");
    }

    #[test]
    fn l3_golden() {
        let l3 = l_polynomial(3).unwrap();
        assert_eq!(l3.coefficient(&Partition::new(vec![3])), rat(62, 945));
        assert_eq!(l3.coefficient(&Partition::new(vec![2, 1])), rat(-13, 945));
        assert_eq!(l3.coefficient(&Partition::new(vec![1, 1, 1])), rat(2, 945));
        assert_eq!(l3.to_string(), "62/945 p3 - 13/945 p1 p2 + 2/945 p1^3");
    }

    #[test]
    fn l4_golden() {
        let l4 = l_polynomial(4).unwrap();
        assert_eq!(l4.coefficient(&Partition::new(vec![4])), rat(381, 14175));
        assert_eq!(l4.coefficient(&Partition::new(vec![3, 1])), rat(-71, 14175));
        assert_eq!(l4.coefficient(&Partition::new(vec![2, 2])), rat(-19, 14175));
        assert_eq!(l4.coefficient(&Partition::new(vec![2, 1, 1])), rat(22, 14175));
        assert_eq!(l4.coefficient(&Partition::new(vec![1, 1, 1, 1])), rat(-3, 14175));
        assert_eq!(l4.denominator_lcm(), BigUint::from(14175u32));
        assert_eq!(
            l_polynomial(5).unwrap().denominator_lcm(),
            BigUint::from(467775u32)
        );
    }

    #[test]
    fn degree_zero_rejected() {
        assert_eq!(l_polynomial(0), Err(LpolyError::DegreeZero));
    }

    #[test]
    fn degree_cap_enforced_and_overridable() {
        assert!(matches!(
            l_polynomial(9),
            Err(LpolyError::DegreeCapExceeded { degree: 9, cap: 8 })
        ));
        assert!(l_polynomial_with_cap(9, 9).is_ok());
    }

    #[test]
    fn denominator_constants_golden() {
        let d = denominator_constants(2, 1).unwrap();
        assert_eq!(d.c_k, BigUint::from(45u32));
        assert_eq!(d.r_k, BigUint::from(45u32));

        let d = denominator_constants(1, 1).unwrap();
        assert_eq!(d.c_k, BigUint::from(3u32));
        assert_eq!(d.r_k, BigUint::from(3u32));

        let d = denominator_constants(2, 7).unwrap();
        assert_eq!(d.r_k, BigUint::from(315u32));
    }

    #[test]
    fn denominator_constants_rejects_zero_t() {
        assert!(denominator_constants(2, 0).is_err());
    }

    #[test]
    fn integrality_of_ck_times_lk() {
        // c_k * L_k is integral and no proper divisor of c_k achieves that.
        for k in 1..=5 {
            let lk = l_polynomial_with_cap(k, 8).unwrap();
            let c_k = BigInt::from(lk.denominator_lcm());
            for (_, coeff) in lk.terms() {
                assert!((coeff * Rational::from(c_k.clone())).is_integer());
            }
            // Dividing c_k by any of its prime factors must break
            // integrality for some coefficient.
            let mut remaining = c_k.clone();
            let mut primes = Vec::new();
            let mut p = BigInt::from(2);
            while remaining > BigInt::one() {
                if (&remaining % &p).is_zero() {
                    primes.push(p.clone());
                    while (&remaining % &p).is_zero() {
                        remaining /= &p;
                    }
                }
                p += 1;
            }
            for p in primes {
                let smaller = Rational::from(&c_k / &p);
                assert!(
                    lk.terms().any(|(_, coeff)| !(coeff * &smaller).is_integer()),
                    "c_{k}/{p} still clears all denominators"
                );
            }
        }
    }

    #[test]
    fn partition_enumeration_order() {
        let parts = Partition::all_of(4);
        let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
    }

    #[test]
    fn q_series_matches_l1_specialisation() {
        // Setting p1 = x and p_{>=2} = 0 in L_1 recovers q_1.
        let l1 = l_polynomial(1).unwrap();
        assert_eq!(l1.coefficient(&Partition::new(vec![1])), q_series(1)[1]);
    }
}
