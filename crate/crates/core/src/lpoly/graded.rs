//! Graded cohomology classes with rational coefficients and the
//! evaluation of L-polynomials against total Pontryagin classes.

use super::{l_polynomial_with_cap, LpolyError, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in finitely many cohomology generators, each of a fixed
/// positive even degree; the grading of a monomial is the degree-weighted
/// sum of its exponents.
///
/// A total Pontryagin class is such a class with constant term 1; its
/// weight-`4j` component plays the role of `p_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedClass {
    generator_degrees: Vec<u32>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl GradedClass {
    /// The zero class over generators of the given degrees.
    pub fn zero(generator_degrees: Vec<u32>) -> Self {
        GradedClass {
            generator_degrees,
            terms: BTreeMap::new(),
        }
    }

    /// The constant class `1`.
    pub fn one(generator_degrees: Vec<u32>) -> Self {
        let n = generator_degrees.len();
        let mut class = Self::zero(generator_degrees);
        class.terms.insert(vec![0; n], Rational::one());
        class
    }

    /// The `index`-th generator as a class.
    pub fn generator(generator_degrees: Vec<u32>, index: usize) -> Self {
        let n = generator_degrees.len();
        assert!(index < n, "generator index out of range");
        let mut class = Self::zero(generator_degrees);
        let mut exponents = vec![0; n];
        exponents[index] = 1;
        class.terms.insert(exponents, Rational::one());
        class
    }

    pub fn generator_degrees(&self) -> &[u32] {
        &self.generator_degrees
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coefficient * prod generator_i^exponents_i` to the class.
    pub fn add_term(&mut self, exponents: Vec<u32>, coefficient: Rational) {
        assert_eq!(exponents.len(), self.generator_degrees.len());
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *entry += coefficient;
        // drop the key again if the addition cancelled
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.generator_degrees.len()])
    }

    fn weight_of(&self, exponents: &[u32]) -> u32 {
        exponents
            .iter()
            .zip(&self.generator_degrees)
            .map(|(e, d)| e * d)
            .sum()
    }

    /// The homogeneous part of the given cohomological degree.
    pub fn component(&self, weight: u32) -> GradedClass {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| self.weight_of(e) == weight)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        GradedClass {
            generator_degrees: self.generator_degrees.clone(),
            terms,
        }
    }

    /// Iterates over `(exponents, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &GradedClass) -> GradedClass {
        assert_eq!(self.generator_degrees, other.generator_degrees);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &GradedClass) -> GradedClass {
        assert_eq!(self.generator_degrees, other.generator_degrees);
        let mut out = GradedClass::zero(self.generator_degrees.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exponents: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exponents, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exponent: u32) -> GradedClass {
        let mut out = GradedClass::one(self.generator_degrees.clone());
        for _ in 0..exponent {
            out = out.mul(self);
        }
        out
    }

    /// Truncates away all terms of cohomological degree above `max_weight`.
    pub fn truncate(&self, max_weight: u32) -> GradedClass {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| self.weight_of(e) <= max_weight)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        GradedClass {
            generator_degrees: self.generator_degrees.clone(),
            terms,
        }
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exponents, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{coeff}")?;
            for (i, e) in exponents.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, " x{i}")?,
                    _ => write!(f, " x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Substitutes the graded components of a total Pontryagin class into the
/// weight-`k` L-polynomial and returns the resulting class of
/// cohomological degree `4k`.
///
/// The input must have constant term 1.
pub fn evaluate_l_class(total_pontryagin: &GradedClass, k: usize) -> Result<GradedClass, LpolyError> {
    if !total_pontryagin.constant_term().is_one() {
        return Err(LpolyError::ConstantTermNotOne);
    }
    let lk = l_polynomial_with_cap(k, usize::MAX)?;
    let degrees = total_pontryagin.generator_degrees().to_vec();
    let mut result = GradedClass::zero(degrees.clone());
    for (partition, coeff) in lk.terms() {
        let mut product = GradedClass::one(degrees.clone());
        for &part in partition.parts() {
            product = product.mul(&total_pontryagin.component(4 * part));
        }
        for (exponents, c) in product.terms() {
            result.add_term(exponents.clone(), c * coeff);
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpoly::rat;

    fn cp_total_class(exponent: u32) -> GradedClass {
        // (1 + x^2)^exponent for a degree-2 generator x
        let x = GradedClass::generator(vec![2], 0);
        GradedClass::one(vec![2]).add(&x.mul(&x)).pow(exponent)
    }

    #[test]
    fn trivial_bundle_has_zero_l_class() {
        let one = GradedClass::one(vec![2]);
        let l1 = evaluate_l_class(&one, 1).unwrap();
        assert!(l1.is_zero());
    }

    #[test]
    fn cp3_first_l_class() {
        // p(CP^3) = (1 + x^2)^4, so p_1 = 4 x^2 and L_1 = 4/3 x^2.
        let total = cp_total_class(4);
        let l1 = evaluate_l_class(&total, 1).unwrap();
        assert_eq!(l1.coefficient(&[2]), rat(4, 3));
        assert_eq!(l1.terms().count(), 1);
    }

    #[test]
    fn cp4_signature_is_one() {
        // <L_2(CP^4), [CP^4]> = coefficient of x^4 in L_2((1 + x^2)^5).
        let total = cp_total_class(5);
        let l2 = evaluate_l_class(&total, 2).unwrap();
        assert_eq!(l2.coefficient(&[4]), rat(1, 1));
    }

    #[test]
    fn rejects_constant_term_other_than_one() {
        let x = GradedClass::generator(vec![2], 0);
        assert_eq!(evaluate_l_class(&x, 1), Err(LpolyError::ConstantTermNotOne));
        let two = GradedClass::one(vec![2]).add(&GradedClass::one(vec![2]));
        assert_eq!(evaluate_l_class(&two, 1), Err(LpolyError::ConstantTermNotOne));
    }

    #[test]
    fn component_extraction_respects_grading() {
        let total = cp_total_class(4);
        let p1 = total.component(4);
        assert_eq!(p1.coefficient(&[2]), rat(4, 1));
        assert!(total.component(3).is_zero());
    }
}
