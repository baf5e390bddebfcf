//! Finitely generated abelian groups, graded homology data and manifold
//! descriptors.
//!
//! A [`ManifoldDescriptor`] is the input format of all surgery-theoretic
//! calculations in this crate: a name, dimension, fundamental-group tag,
//! integral homology, an optional wedge-of-spheres stable model, optional
//! per-degree matrices of the classifying map, optional L-class coordinate
//! vectors, and flags.  There is no universally agreed machine format for
//! "a manifold"; this schema is this library's own and captures exactly the
//! data the calculations consume.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::lattice::IntegerMatrix;
use crate::lpoly::LpolyError;

mod builtins;
mod io;

pub use builtins::{builtin, cpn, k_complex_homology, mrg, parse_builtin, sphere, torus, torus_homology, wg};

/// Errors raised while constructing or ingesting descriptors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescriptorError {
    UnknownBuiltin(String),
    ParameterOutOfRange { name: &'static str, message: String },
    /// Torsion coefficients must be >= 2 and form a divisibility chain.
    InvalidTorsion { degree: usize, message: String },
    DuplicateEntry { field: &'static str, key: usize },
    MalformedMatrix { degree: usize },
    ValueOutOfRange(String),
    Json(String),
    Lpoly(LpolyError),
}

impl fmt::Display for DescriptorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescriptorError::UnknownBuiltin(name) => write!(f, "unknown builtin manifold: {name}"),
            DescriptorError::ParameterOutOfRange { name, message } => {
                write!(f, "parameter out of range for {name}: {message}")
            }
            DescriptorError::InvalidTorsion { degree, message } => {
                write!(f, "invalid torsion in degree {degree}: {message}")
            }
            DescriptorError::DuplicateEntry { field, key } => {
                write!(f, "duplicate {field} entry for key {key}")
            }
            DescriptorError::MalformedMatrix { degree } => {
                write!(f, "malformed matrix in degree {degree}")
            }
            DescriptorError::ValueOutOfRange(what) => write!(f, "value out of range: {what}"),
            DescriptorError::Json(e) => write!(f, "invalid descriptor JSON: {e}"),
            DescriptorError::Lpoly(e) => write!(f, "L-class computation failed: {e}"),
        }
    }
}

impl std::error::Error for DescriptorError {}

impl From<LpolyError> for DescriptorError {
    fn from(e: LpolyError) -> Self {
        DescriptorError::Lpoly(e)
    }
}

/// A finitely generated abelian group in invariant-factor form: a free rank
/// together with torsion coefficients `d_1 | d_2 | ...`, each at least 2.
/// The representation is canonical, so equality of groups is equality of
/// values.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<BigUint>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        FgAbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// The cyclic group of the given order (order 1 gives the trivial group).
    pub fn cyclic(order: u64) -> Self {
        Self::new(0, vec![BigUint::from(order)])
    }

    /// Builds a group from a free rank and an arbitrary list of cyclic
    /// orders, normalising the orders into invariant factors.
    pub fn new(free_rank: usize, factors: Vec<BigUint>) -> Self {
        FgAbelianGroup {
            free_rank,
            torsion: normalize_factors(factors),
        }
    }

    /// Accepts a torsion list only if it already is a valid chain of
    /// invariant factors.
    pub fn from_invariant_factors(
        free_rank: usize,
        torsion: Vec<BigUint>,
    ) -> Result<Self, String> {
        let two = BigUint::from(2u32);
        for t in &torsion {
            if *t < two {
                return Err(format!("torsion coefficient {t} is below 2"));
            }
        }
        for w in torsion.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        Ok(FgAbelianGroup { free_rank, torsion })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Number of invariant factors divisible by two: the rank of the
    /// 2-torsion quotient.
    pub fn two_torsion_rank(&self) -> usize {
        self.torsion.iter().filter(|t| t.is_even()).count()
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut factors = self.torsion.clone();
        factors.extend_from_slice(&other.torsion);
        FgAbelianGroup::new(self.free_rank + other.free_rank, factors)
    }

    pub fn direct_sum_all<'a>(groups: impl IntoIterator<Item = &'a FgAbelianGroup>) -> FgAbelianGroup {
        groups
            .into_iter()
            .fold(FgAbelianGroup::trivial(), |acc, g| acc.direct_sum(g))
    }
}

/// Normalises a multiset of cyclic orders into an invariant-factor chain by
/// repeatedly replacing non-dividing pairs `(a, b)` with `(gcd, lcm)`.
fn normalize_factors(mut factors: Vec<BigUint>) -> Vec<BigUint> {
    let one = BigUint::one();
    factors.retain(|f| *f > one);
    loop {
        let mut changed = false;
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                let a = factors[i].clone();
                let b = factors[j].clone();
                if !(&b % &a).is_zero() && !(&a % &b).is_zero() {
                    let g = a.gcd(&b);
                    let l = &a / &g * &b;
                    factors[i] = g;
                    factors[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    factors.retain(|f| *f > one);
    factors.sort();
    factors
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut pieces: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => pieces.push("Z".to_string()),
            r => pieces.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let mut mult = 1;
            while i + mult < self.torsion.len() && &self.torsion[i + mult] == t {
                mult += 1;
            }
            if mult == 1 {
                pieces.push(format!("Z/{t}"));
            } else {
                pieces.push(format!("(Z/{t})^{mult}"));
            }
            i += mult;
        }
        write!(f, "{}", pieces.join(" ⊕ "))
    }
}

/// A finite collection of abelian groups graded by degree; absent degrees
/// are trivial.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedGroup {
    groups: BTreeMap<usize, FgAbelianGroup>,
}

impl GradedGroup {
    pub fn new() -> Self {
        Self::default()
    }

    /// The free group of rank `ranks[j]` in degree `j`.
    pub fn from_free_ranks(ranks: &[usize]) -> Self {
        let mut g = Self::new();
        for (degree, &rank) in ranks.iter().enumerate() {
            g.set(degree, FgAbelianGroup::free(rank));
        }
        g
    }

    pub fn set(&mut self, degree: usize, group: FgAbelianGroup) {
        if group.is_trivial() {
            self.groups.remove(&degree);
        } else {
            self.groups.insert(degree, group);
        }
    }

    pub fn group(&self, degree: usize) -> FgAbelianGroup {
        self.groups.get(&degree).cloned().unwrap_or_else(FgAbelianGroup::trivial)
    }

    pub fn free_rank(&self, degree: usize) -> usize {
        self.groups.get(&degree).map_or(0, FgAbelianGroup::free_rank)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &FgAbelianGroup)> {
        self.groups.iter().map(|(d, g)| (*d, g))
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.groups.keys().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.groups.keys().next_back().copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.is_empty()
    }
}

impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (degree, group) in &self.groups {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "H_{degree} = {group}")?;
        }
        Ok(())
    }
}

/// Fundamental-group tag of a descriptor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Pi1 {
    Trivial,
    FreeAbelian(usize),
    Other(String),
}

impl fmt::Display for Pi1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi1::Trivial => write!(f, "trivial"),
            Pi1::FreeAbelian(r) => write!(f, "Z^{r}"),
            Pi1::Other(label) => write!(f, "{label}"),
        }
    }
}

/// Boolean attributes of a descriptor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DescriptorFlags {
    pub stably_parallelizable: bool,
    pub ahss_collapses: bool,
    pub orientable: bool,
}

/// One `(degree, count)` summand of a wedge-of-spheres stable model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WedgeSummand {
    pub degree: usize,
    pub count: usize,
}

/// The manifold input format of the surgery calculations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManifoldDescriptor {
    pub name: String,
    pub dimension: usize,
    pub pi1: Pi1,
    /// Integral homology.
    pub homology: GradedGroup,
    /// Optional wedge-of-spheres stable model (degree/count pairs).
    pub wedge_model: Option<Vec<WedgeSummand>>,
    /// Per-degree matrices of `c_*: H_j(M) -> H_j(Bpi1)` acting on free
    /// parts; degrees absent from the map are the zero map.  Rows are
    /// indexed by the target basis.
    pub classifying_map: Option<BTreeMap<usize, IntegerMatrix>>,
    /// Coordinates of the weight-k L-class in the denominator-cleared
    /// lattice of `FH^{4k}`, keyed by k.
    pub l_class: Option<BTreeMap<usize, Vec<BigInt>>>,
    pub flags: DescriptorFlags,
}

/// A named invariant violation discovered by [`validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// `H_0` must be exactly `Z`.
    H0NotZ,
    /// Orientable descriptors need `b_j = b_{n-j}`.
    PoincareDuality { degree: usize },
    /// A simply connected descriptor must have `H_1 = 0`.
    SimplyConnectedH1,
    /// With `pi1 = Z^r`, `H_1` must be exactly `Z^r`.
    Pi1H1Mismatch { expected_rank: usize },
    /// Homology above the dimension must vanish.
    HomologyAboveDimension { degree: usize },
    /// A wedge model must reproduce the free ranks in positive degrees.
    WedgeModelMismatch { degree: usize },
    /// Torsion in homology is incompatible with the collapse flag, which is
    /// justified only for wedge-of-spheres stable types.
    TorsionWithCollapse { degree: usize },
    /// A classifying-map matrix has the wrong shape for its degree.
    ClassifyingMapShape { degree: usize },
    /// An L-class vector length must be the free rank of `H_{4k}`.
    LClassLength { k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::H0NotZ => write!(f, "H_0 is not Z"),
            Violation::PoincareDuality { degree } => {
                write!(f, "Poincaré duality fails between degrees {degree} and its dual")
            }
            Violation::SimplyConnectedH1 => write!(f, "trivial pi1 requires H_1 = 0"),
            Violation::Pi1H1Mismatch { expected_rank } => {
                write!(f, "pi1 = Z^{expected_rank} requires H_1 = Z^{expected_rank}")
            }
            Violation::HomologyAboveDimension { degree } => {
                write!(f, "nonzero homology in degree {degree} above the dimension")
            }
            Violation::WedgeModelMismatch { degree } => {
                write!(f, "wedge model does not reproduce homology in degree {degree}")
            }
            Violation::TorsionWithCollapse { degree } => {
                write!(f, "torsion in degree {degree} incompatible with collapse flag")
            }
            Violation::ClassifyingMapShape { degree } => {
                write!(f, "classifying-map matrix in degree {degree} has the wrong shape")
            }
            Violation::LClassLength { k } => {
                write!(f, "L-class vector for k = {k} has the wrong length")
            }
        }
    }
}

/// Binomial coefficient as an arbitrary-precision natural.
pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Checks every descriptor invariant and returns the list of violations;
/// an empty list means the descriptor is valid.
pub fn validate(d: &ManifoldDescriptor) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = d.dimension;
    let h = &d.homology;

    if h.group(0) != FgAbelianGroup::free(1) {
        out.push(Violation::H0NotZ);
    }
    for (degree, group) in h.iter() {
        if degree > n && !group.is_trivial() {
            out.push(Violation::HomologyAboveDimension { degree });
        }
    }
    if d.flags.orientable {
        for j in 0..=n / 2 {
            if h.free_rank(j) != h.free_rank(n - j) {
                out.push(Violation::PoincareDuality { degree: j });
            }
        }
    }
    match d.pi1 {
        Pi1::Trivial => {
            if !h.group(1).is_trivial() {
                out.push(Violation::SimplyConnectedH1);
            }
        }
        Pi1::FreeAbelian(r) => {
            if h.group(1) != FgAbelianGroup::free(r) {
                out.push(Violation::Pi1H1Mismatch { expected_rank: r });
            }
        }
        Pi1::Other(_) => {}
    }
    if let Some(model) = &d.wedge_model {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for summand in model {
            *counts.entry(summand.degree).or_default() += summand.count;
        }
        let mut degrees: Vec<usize> = counts.keys().copied().collect();
        degrees.extend(h.degrees().filter(|&j| j > 0));
        degrees.sort_unstable();
        degrees.dedup();
        for j in degrees {
            let expected = counts.get(&j).copied().unwrap_or(0);
            if j == 0 || h.free_rank(j) != expected || !h.group(j).torsion().is_empty() {
                out.push(Violation::WedgeModelMismatch { degree: j });
            }
        }
    }
    if d.flags.ahss_collapses {
        for (degree, group) in h.iter() {
            if !group.torsion().is_empty() {
                out.push(Violation::TorsionWithCollapse { degree });
            }
        }
    }
    if let Some(maps) = &d.classifying_map {
        for (&degree, matrix) in maps {
            if matrix.cols() != h.free_rank(degree) {
                out.push(Violation::ClassifyingMapShape { degree });
                continue;
            }
            if let Pi1::FreeAbelian(r) = d.pi1 {
                if BigUint::from(matrix.rows()) != binomial(r, degree) {
                    out.push(Violation::ClassifyingMapShape { degree });
                }
            }
        }
    }
    if let Some(l_class) = &d.l_class {
        for (&k, vector) in l_class {
            if k == 0 || vector.len() != h.free_rank(4 * k) {
                out.push(Violation::LClassLength { k });
            }
        }
    }
    out
}

impl ManifoldDescriptor {
    /// Serialises the descriptor to its JSON file format.
    pub fn to_json_string(&self) -> Result<String, DescriptorError> {
        io::to_json_string(self)
    }

    /// Parses a descriptor from its JSON file format.  Unknown fields are
    /// rejected; homology torsion must already be in invariant-factor form.
    pub fn from_json_str(text: &str) -> Result<Self, DescriptorError> {
        io::from_json_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FgAbelianGroup {
        FgAbelianGroup::free(n)
    }

    #[test]
    fn invariant_factor_normalisation() {
        let g = FgAbelianGroup::new(1, vec![2u32.into(), 3u32.into()]);
        assert_eq!(g.torsion(), &[BigUint::from(6u32)]);

        let g = FgAbelianGroup::new(0, vec![4u32.into(), 6u32.into()]);
        assert_eq!(g.torsion(), &[BigUint::from(2u32), BigUint::from(12u32)]);

        let g = FgAbelianGroup::new(0, vec![2u32.into(), 4u32.into(), 3u32.into()]);
        assert_eq!(g.torsion(), &[BigUint::from(2u32), BigUint::from(12u32)]);

        let g = FgAbelianGroup::new(0, vec![1u32.into()]);
        assert!(g.is_trivial());
    }

    #[test]
    fn direct_sum_keeps_two_torsion_separate() {
        let a = FgAbelianGroup::cyclic(2);
        let sum = a.direct_sum(&a).direct_sum(&a);
        assert_eq!(sum.torsion().len(), 3);
        assert_eq!(sum.two_torsion_rank(), 3);
        assert_eq!(sum.to_string(), "(Z/2)^3");
    }

    #[test]
    fn display_forms() {
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(z(1).to_string(), "Z");
        assert_eq!(z(4).to_string(), "Z^4");
        assert_eq!(
            FgAbelianGroup::new(2, vec![2u32.into(), 8u32.into()]).to_string(),
            "Z^2 ⊕ Z/2 ⊕ Z/8"
        );
    }

    #[test]
    fn invariant_factor_chain_rejected_when_broken() {
        assert!(FgAbelianGroup::from_invariant_factors(0, vec![4u32.into(), 6u32.into()]).is_err());
        assert!(FgAbelianGroup::from_invariant_factors(0, vec![1u32.into()]).is_err());
        assert!(FgAbelianGroup::from_invariant_factors(0, vec![2u32.into(), 4u32.into()]).is_ok());
    }

    #[test]
    fn validate_flags_broken_duality() {
        let mut d = builtins::sphere(9).unwrap();
        d.homology.set(1, z(2));
        d.homology.set(8, z(1));
        let violations = validate(&d);
        assert!(violations.contains(&Violation::PoincareDuality { degree: 1 }));
        assert!(violations.contains(&Violation::SimplyConnectedH1));
    }

    #[test]
    fn validate_flags_torsion_with_collapse() {
        let mut d = builtins::sphere(7).unwrap();
        d.homology.set(3, FgAbelianGroup::new(0, vec![2u32.into()]));
        d.homology.set(4, FgAbelianGroup::new(0, vec![2u32.into()]));
        let violations = validate(&d);
        assert!(violations.contains(&Violation::TorsionWithCollapse { degree: 3 }));
    }

    #[test]
    fn builtins_validate_clean() {
        for d in [
            builtins::sphere(7).unwrap(),
            builtins::cpn(3).unwrap(),
            builtins::wg(2, 1).unwrap(),
            builtins::mrg(3, 6, 1).unwrap(),
            builtins::mrg(1, 0, 2).unwrap(),
            builtins::torus(5).unwrap(),
        ] {
            assert_eq!(validate(&d), Vec::new(), "builtin {} must validate", d.name);
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(4, 0), BigUint::one());
        assert_eq!(binomial(3, 5), BigUint::zero());
    }
}
