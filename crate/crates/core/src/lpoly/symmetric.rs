//! Dense expansion of elementary symmetric polynomials over a fixed number
//! of formal variables, used for the change of basis in `l_polynomial`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A polynomial in `nvars` variables with integer coefficients, keyed by
/// exponent vectors of length `nvars`.
pub(crate) type MultiPoly = BTreeMap<Vec<u32>, BigInt>;

/// The elementary symmetric polynomial `e_j` in `nvars` variables.
fn elementary(nvars: usize, j: usize) -> MultiPoly {
    let mut poly = MultiPoly::new();
    if j > nvars {
        return poly;
    }
    let mut subset: Vec<usize> = (0..j).collect();
    loop {
        let mut exponents = vec![0u32; nvars];
        for &v in &subset {
            exponents[v] = 1;
        }
        poly.insert(exponents, BigInt::one());
        // next j-subset of {0..nvars}
        let mut i = j;
        loop {
            if i == 0 {
                return poly;
            }
            i -= 1;
            if subset[i] != i + nvars - j {
                break;
            }
            if i == 0 {
                return poly;
            }
        }
        subset[i] += 1;
        for t in i + 1..j {
            subset[t] = subset[t - 1] + 1;
        }
    }
}

fn mul(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exponents: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let coeff = out.entry(exponents).or_insert_with(BigInt::zero);
            *coeff += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expands `e_{parts[0]} * e_{parts[1]} * ...` over `nvars` variables.
pub(crate) fn elementary_product(nvars: usize, parts: &[u32]) -> MultiPoly {
    let mut acc = MultiPoly::new();
    acc.insert(vec![0; nvars], BigInt::one());
    for &part in parts {
        acc = mul(&acc, &elementary(nvars, part as usize));
    }
    acc
}
