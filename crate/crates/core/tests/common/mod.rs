//! Shared oracles and generators for the integration suites.
//!
//! Everything here is deliberately written against the public API with its
//! own arithmetic, so the oracles stay independent of the implementation
//! paths they check.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;
use std::collections::HashMap;

use manset_core::lattice::{IntegerMatrix, LatticeBasis};
use manset_core::lpoly::{q_series, LPolynomial, Rational};

/// Pascal-triangle binomial, independent of the library's version.
pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1];
        for w in row.windows(2) {
            next.push(w[0] + w[1]);
        }
        next.push(1);
        row = next;
    }
    row[k]
}

// ---- exact determinant oracle (fraction-free elimination) ----

/// Determinant by the one-step fraction-free elimination scheme; exact and
/// independent of the Smith normal form.
pub fn determinant_oracle(m: &IntegerMatrix) -> BigInt {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.row_vectors();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = numerator / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

// ---- random integer matrices and lattices ----

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> IntegerMatrix {
    IntegerMatrix::from_i64_rows(
        &(0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect::<Vec<_>>(),
    )
}

/// A random unimodular matrix built from elementary operations on the
/// identity, with small multipliers to keep entries tame.
pub fn random_unimodular(rng: &mut StdRng, n: usize, ops: usize) -> IntegerMatrix {
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for _ in 0..ops {
        match rng.gen_range(0..3) {
            0 => {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                rows.swap(a, b);
            }
            1 => {
                let a = rng.gen_range(0..n);
                for entry in &mut rows[a] {
                    *entry = -entry.clone();
                }
            }
            _ => {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if a != b {
                    let factor = BigInt::from(rng.gen_range(-2..=2i64));
                    let source = rows[b].clone();
                    for (target, s) in rows[a].iter_mut().zip(source) {
                        *target += &factor * s;
                    }
                }
            }
        }
    }
    IntegerMatrix::from_rows(rows)
}

/// Applies an ambient transform to every basis vector.
pub fn transform_basis(u: &IntegerMatrix, basis: &LatticeBasis) -> LatticeBasis {
    let vectors = basis.vectors().iter().map(|v| u.apply(v)).collect();
    LatticeBasis::new(basis.ambient_rank(), vectors).expect("transform preserves independence")
}

/// A random basis of a full-rank sublattice of `Z^n`: a unimodular matrix
/// times a positive diagonal.
pub fn random_full_basis(rng: &mut StdRng, n: usize, diag_bound: i64) -> LatticeBasis {
    let u = random_unimodular(rng, n, 2 * n + 2);
    let vectors: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let scale = BigInt::from(rng.gen_range(1..=diag_bound));
            u.row(i).iter().map(|x| x * &scale).collect()
        })
        .collect();
    LatticeBasis::new(n, vectors).expect("scaled unimodular rows are independent")
}

// ---- independent expansion oracle for L-polynomials ----

/// Polynomials in `nvars` formal variables with rational coefficients,
/// keyed by exponent vectors; a deliberately separate implementation from
/// the library's internals.
pub type VarPoly = HashMap<Vec<u32>, Rational>;

fn varpoly_one(nvars: usize) -> VarPoly {
    let mut p = VarPoly::new();
    p.insert(vec![0; nvars], Rational::one());
    p
}

fn varpoly_mul_truncated(a: &VarPoly, b: &VarPoly, max_degree: u32) -> VarPoly {
    let mut out = VarPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exponents: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if exponents.iter().sum::<u32>() > max_degree {
                continue;
            }
            let entry = out.entry(exponents).or_insert_with(Rational::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The degree-`k` part of the product over `k` variables of the
/// characteristic series, expanded directly from the series coefficients.
pub fn q_product_weight_part(k: usize) -> VarPoly {
    let q = q_series(k);
    let mut acc = varpoly_one(k);
    for variable in 0..k {
        let mut factor = VarPoly::new();
        for (power, coeff) in q.iter().enumerate() {
            let mut exponents = vec![0u32; k];
            exponents[variable] = power as u32;
            factor.insert(exponents, coeff.clone());
        }
        acc = varpoly_mul_truncated(&acc, &factor, k as u32);
    }
    acc.retain(|e, _| e.iter().sum::<u32>() == k as u32);
    acc
}

/// The elementary symmetric polynomial `e_j` over `k` variables by direct
/// subset enumeration (bitmask form).
fn elementary_direct(k: usize, j: usize) -> VarPoly {
    let mut out = VarPoly::new();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize != j {
            continue;
        }
        let exponents: Vec<u32> = (0..k).map(|i| (mask >> i) & 1).collect();
        out.insert(exponents, Rational::one());
    }
    out
}

/// Substitutes `p_j := e_j(x_1..x_k)` into a weight-`k` L-polynomial and
/// expands fully.
pub fn substitute_elementaries(lp: &LPolynomial, k: usize) -> VarPoly {
    let mut out = VarPoly::new();
    for (partition, coeff) in lp.terms() {
        let mut term = varpoly_one(k);
        for &part in partition.parts() {
            term = varpoly_mul_truncated(&term, &elementary_direct(k, part as usize), k as u32);
        }
        for (exponents, c) in term {
            let entry = out.entry(exponents).or_insert_with(Rational::zero);
            *entry += c * coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The defining identity of the weight-`k` L-polynomial: substituting the
/// elementary symmetric functions for the Pontryagin variables must
/// reproduce the expanded product of the characteristic series.
pub fn l_polynomial_satisfies_defining_identity(lp: &LPolynomial, k: usize) -> bool {
    substitute_elementaries(lp, k) == q_product_weight_part(k)
}

/// Signed magnitude helper for assertions on vectors.
pub fn big_vec(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

/// The gcd of a vector, as the divisibility oracle for spectra.
pub fn gcd_oracle(values: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    values
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(&v.abs()))
}
