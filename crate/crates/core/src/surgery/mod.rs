//! Surgery-theoretic calculators: L-groups, normal invariants, kernels and
//! cokernels of the surgery obstruction maps, structure-set presentations
//! and the divisibility invariant.
//!
//! Supported fundamental groups are the trivial group and free-abelian
//! groups `Z^r`.  For `Z^r` the obstruction map factors through the
//! assembly map of the `r`-torus, which is injective, so kernels and
//! cokernels reduce to degreewise linear algebra on the classifying-map
//! matrices carried by the descriptor.  Homology with coefficients in the
//! connective L-theory spectrum of the integers is computed from the
//! Atiyah-Hirzebruch decomposition, whose collapse the descriptor must
//! justify with its `ahss_collapses` flag (wedge-of-spheres stable types).

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

use crate::homology::{
    torus_homology, validate, DescriptorError, FgAbelianGroup, GradedGroup, ManifoldDescriptor,
    Pi1, Violation,
};
use crate::lattice::{divisibility, smith_normal_form, IntegerMatrix, LatticeBasis, LatticeError};

mod theorems;
mod verdict;

pub use theorems::{
    decide_simply_connected, pd_group_check, theorem_b_check, theorem_c_summary, theorem_e_bound,
    TheoremBCondition, TheoremCSummary,
};
pub use verdict::{HypothesisCheck, HypothesisStatus, Verdict, VerdictStatus, Witness};

/// Errors raised by the surgery calculators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    /// The descriptor failed validation; the violations are listed.
    InvalidDescriptor(Vec<Violation>),
    /// Only trivial and free-abelian fundamental groups are supported.
    UnsupportedFundamentalGroup(String),
    /// The operation needs `pi1` trivial.
    WrongFundamentalGroup(String),
    /// Free-abelian calculations need the classifying-map matrices.
    MissingClassifyingMap,
    /// The Atiyah-Hirzebruch decomposition requires the collapse flag.
    CollapseNotJustified,
    /// Decision procedures require dimension at least 5.
    DimensionTooSmall { dimension: usize },
    /// A vector length did not match the expected homology rank.
    LengthMismatch { expected: usize, found: usize },
    /// A supplied matrix has the wrong shape for its degree.
    MatrixShape { degree: usize },
    InvalidParameter(String),
    Descriptor(DescriptorError),
    Lattice(LatticeError),
}

impl fmt::Display for SurgeryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryError::InvalidDescriptor(violations) => {
                write!(f, "invalid descriptor: ")?;
                for (i, v) in violations.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            SurgeryError::UnsupportedFundamentalGroup(p) => {
                write!(f, "unsupported fundamental group: {p}")
            }
            SurgeryError::WrongFundamentalGroup(p) => {
                write!(f, "operation requires trivial fundamental group, got {p}")
            }
            SurgeryError::MissingClassifyingMap => {
                write!(f, "descriptor has no classifying-map matrices")
            }
            SurgeryError::CollapseNotJustified => {
                write!(f, "descriptor does not justify the spectral-sequence collapse")
            }
            SurgeryError::DimensionTooSmall { dimension } => {
                write!(f, "dimension {dimension} is below 5")
            }
            SurgeryError::LengthMismatch { expected, found } => {
                write!(f, "vector length {found} does not match homology rank {expected}")
            }
            SurgeryError::MatrixShape { degree } => {
                write!(f, "matrix in degree {degree} has the wrong shape")
            }
            SurgeryError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            SurgeryError::Descriptor(e) => write!(f, "{e}"),
            SurgeryError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SurgeryError {}

impl From<DescriptorError> for SurgeryError {
    fn from(e: DescriptorError) -> Self {
        SurgeryError::Descriptor(e)
    }
}

impl From<LatticeError> for SurgeryError {
    fn from(e: LatticeError) -> Self {
        SurgeryError::Lattice(e)
    }
}

pub(crate) fn ensure_valid(d: &ManifoldDescriptor) -> Result<(), SurgeryError> {
    let violations = validate(d);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(SurgeryError::InvalidDescriptor(violations))
    }
}

/// The 4-periodic coefficient groups of simply connected L-theory:
/// `Z, 0, Z/2, 0` for residues `0, 1, 2, 3` mod 4.
pub struct LGroupTable;

impl LGroupTable {
    /// The non-connective table, 4-periodic over all integers.
    pub fn periodic(n: i64) -> FgAbelianGroup {
        match n.rem_euclid(4) {
            0 => FgAbelianGroup::free(1),
            2 => FgAbelianGroup::cyclic(2),
            _ => FgAbelianGroup::trivial(),
        }
    }

    /// The 1-connective table: trivial for `n <= 0`.
    pub fn connective(n: i64) -> FgAbelianGroup {
        if n <= 0 {
            FgAbelianGroup::trivial()
        } else {
            Self::periodic(n)
        }
    }
}

/// `L_n(Z)` as seen by the connective surgery spectrum: `Z, 0, Z/2, 0`
/// by `n` mod 4 for `n >= 1`, trivial for `n <= 0`.
pub fn l_group_z(n: i64) -> FgAbelianGroup {
    LGroupTable::connective(n)
}

/// `copies`-fold direct sum of a coefficient group.
fn multiples(coefficient: &FgAbelianGroup, copies: usize) -> FgAbelianGroup {
    let mut torsion = Vec::with_capacity(coefficient.torsion().len() * copies);
    for t in coefficient.torsion() {
        for _ in 0..copies {
            torsion.push(t.clone());
        }
    }
    FgAbelianGroup::new(coefficient.free_rank() * copies, torsion)
}

/// `L_n(Z[Z^r])` by the full torus splitting: the direct sum over
/// `0 <= j <= r` of `H_j(T^r)` with coefficients in the non-connective
/// `L_{n-j}(Z)`.
///
/// The resulting free rank is the sum of `C(r, j)` over `j = n` mod 4 and
/// the 2-torsion rank the sum over `j = n - 2` mod 4.  For `r <= 3` this
/// agrees with the familiar closed forms `Z^s + Z/2` (even case, `s =
/// C(r,2)`) and `Z^u + (Z/2)^r` (odd case, `u = C(r,3)`); for larger `r`
/// the splitting contains further torus summands in degrees `j >= 4`.
pub fn l_group_free_abelian(n: i64, r: usize) -> FgAbelianGroup {
    let torus = torus_homology(r);
    let mut acc = FgAbelianGroup::trivial();
    for j in 0..=r {
        let coefficient = LGroupTable::periodic(n - j as i64);
        if coefficient.is_trivial() {
            continue;
        }
        acc = acc.direct_sum(&multiples(&coefficient, torus.free_rank(j)));
    }
    acc
}

/// Homology of the descriptor with `Z/2` coefficients in one degree, by
/// universal coefficients.
fn homology_mod2(h: &GradedGroup, degree: usize) -> usize {
    let current = h.group(degree);
    let mut rank = current.free_rank() + current.two_torsion_rank();
    if degree > 0 {
        rank += h.group(degree - 1).two_torsion_rank();
    }
    rank
}

/// The rational normal invariants: Betti numbers `b_{n-4k}` for all `k`
/// with `0 < 4k <= n`, listed as `(degree, rank)` pairs with `k` ascending.
pub fn normal_invariants_rational(
    d: &ManifoldDescriptor,
) -> Result<Vec<(usize, usize)>, SurgeryError> {
    ensure_valid(d)?;
    let n = d.dimension;
    Ok((1..=n / 4)
        .map(|k| (n - 4 * k, d.homology.free_rank(n - 4 * k)))
        .collect())
}

/// The Atiyah-Hirzebruch decomposition of `H_m(M; L-theory spectrum)`:
/// the nontrivial summands `(i, H_i(M; L_{m-i}(Z)))` for `0 <= i < m`,
/// valid when the descriptor justifies the collapse.
pub fn normal_invariants_integral(
    d: &ManifoldDescriptor,
    m: usize,
) -> Result<Vec<(usize, FgAbelianGroup)>, SurgeryError> {
    ensure_valid(d)?;
    if !d.flags.ahss_collapses {
        return Err(SurgeryError::CollapseNotJustified);
    }
    let mut summands = Vec::new();
    for i in 0..m {
        let coefficient = l_group_z(m as i64 - i as i64);
        if coefficient.is_trivial() {
            continue;
        }
        let summand = if coefficient.free_rank() == 1 {
            d.homology.group(i)
        } else {
            multiples(&coefficient, homology_mod2(&d.homology, i))
        };
        if !summand.is_trivial() {
            summands.push((i, summand));
        }
    }
    Ok(summands)
}

/// Coefficient system of the summand in degree `i` of the decomposition of
/// `H_m`: `Z`-based or `Z/2`-based.
fn summand_is_free_coefficient(m: usize, i: usize) -> bool {
    (m as i64 - i as i64).rem_euclid(4) == 0
}

/// Kernel contribution of one summand under its classifying-map matrix.
///
/// With `Z` coefficients the kernel of an integer matrix is free of rank
/// equal to the column count minus the rational rank; with `Z/2`
/// coefficients the rank is counted over the field with two elements, both
/// read off the Smith diagonal.
fn summand_kernel(
    group: &FgAbelianGroup,
    matrix: Option<&IntegerMatrix>,
    free_coefficient: bool,
) -> Result<FgAbelianGroup, SurgeryError> {
    let Some(matrix) = matrix else {
        // absent matrix is the zero map: everything is in the kernel
        return Ok(group.clone());
    };
    let snf = smith_normal_form(matrix);
    if free_coefficient {
        let rank = group.free_rank();
        Ok(FgAbelianGroup::free(rank - snf.rank().min(rank)))
    } else {
        let dim = group.torsion().len();
        let killed = snf.rank_mod2().min(dim);
        Ok(multiples(&FgAbelianGroup::cyclic(2), dim - killed))
    }
}

/// The kernel of the surgery obstruction map on the normal invariants of
/// `d`, computed summand by summand.
///
/// The degree-0 summand is always excluded: the obstruction map restricted
/// to it is injective for both supported fundamental groups (the signature
/// term rationally, the Arf term onto the 2-torsion of the target).  For a
/// trivial fundamental group every summand in degrees `0 < i < n` survives;
/// for `Z^r` a summand survives exactly where the classifying-map matrix
/// (with the summand's coefficients) dies, partial kernels coming from the
/// Smith form.
pub fn kernel_of_theta(d: &ManifoldDescriptor) -> Result<FgAbelianGroup, SurgeryError> {
    ensure_valid(d)?;
    let n = d.dimension;
    let summands = normal_invariants_integral(d, n)?;
    match &d.pi1 {
        Pi1::Trivial => Ok(FgAbelianGroup::direct_sum_all(
            summands.iter().filter(|(i, _)| *i > 0).map(|(_, g)| g),
        )),
        Pi1::FreeAbelian(_) => {
            let maps = d
                .classifying_map
                .as_ref()
                .ok_or(SurgeryError::MissingClassifyingMap)?;
            let mut acc = FgAbelianGroup::trivial();
            for (i, group) in &summands {
                if *i == 0 {
                    continue;
                }
                let contribution = summand_kernel(
                    group,
                    maps.get(i),
                    summand_is_free_coefficient(n, *i),
                )?;
                acc = acc.direct_sum(&contribution);
            }
            Ok(acc)
        }
        Pi1::Other(label) => Err(SurgeryError::UnsupportedFundamentalGroup(label.clone())),
    }
}

/// Cokernel contribution of one torus summand under the classifying map.
fn summand_cokernel(
    target_rank: usize,
    matrix: Option<&IntegerMatrix>,
    coefficient: &FgAbelianGroup,
) -> FgAbelianGroup {
    let Some(matrix) = matrix else {
        return multiples(coefficient, target_rank);
    };
    let snf = smith_normal_form(matrix);
    if coefficient.free_rank() == 1 {
        let rank = snf.rank().min(target_rank);
        let torsion: Vec<BigUint> = snf
            .diagonal()
            .iter()
            .filter(|x| !x.is_zero())
            .map(|x| x.magnitude().clone())
            .collect();
        FgAbelianGroup::new(target_rank - rank, torsion)
    } else {
        let killed = snf.rank_mod2().min(target_rank);
        multiples(coefficient, target_rank - killed)
    }
}

/// The cokernel of the surgery obstruction map one degree above the
/// dimension, which presents the image of the odd-degree L-group action on
/// the structure set.
///
/// For a trivial fundamental group the obstruction map is onto and the
/// cokernel vanishes.  For `Z^r` the target is the full torus splitting of
/// `L_{n+1}(Z[Z^r])` and a summand survives to the cokernel exactly where
/// the classifying map fails to hit it.
pub fn cokernel_of_theta_odd(d: &ManifoldDescriptor) -> Result<FgAbelianGroup, SurgeryError> {
    ensure_valid(d)?;
    let n = d.dimension;
    match &d.pi1 {
        Pi1::Trivial => Ok(FgAbelianGroup::trivial()),
        Pi1::FreeAbelian(r) => {
            if !d.flags.ahss_collapses {
                return Err(SurgeryError::CollapseNotJustified);
            }
            let maps = d
                .classifying_map
                .as_ref()
                .ok_or(SurgeryError::MissingClassifyingMap)?;
            let torus = torus_homology(*r);
            let mut acc = FgAbelianGroup::trivial();
            for j in 0..=*r {
                let coefficient = LGroupTable::periodic(n as i64 + 1 - j as i64);
                if coefficient.is_trivial() {
                    continue;
                }
                let target_rank = torus.free_rank(j);
                if target_rank == 0 {
                    continue;
                }
                // only connective summands of the source can hit the target
                let matrix = if j <= n { maps.get(&j) } else { None };
                acc = acc.direct_sum(&summand_cokernel(target_rank, matrix, &coefficient));
            }
            Ok(acc)
        }
        Pi1::Other(label) => Err(SurgeryError::UnsupportedFundamentalGroup(label.clone())),
    }
}

/// A short exact sequence `0 -> sub -> S -> quotient -> 0` presenting the
/// structure set, with no splitting asserted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionPresentation {
    pub sub: FgAbelianGroup,
    pub quotient: FgAbelianGroup,
}

impl ExtensionPresentation {
    /// When one end vanishes the middle term is determined.
    pub fn total_if_determined(&self) -> Option<&FgAbelianGroup> {
        if self.sub.is_trivial() {
            Some(&self.quotient)
        } else if self.quotient.is_trivial() {
            Some(&self.sub)
        } else {
            None
        }
    }

    /// An extension of a finite group by a finite group is finite, so the
    /// middle term is infinite exactly when one end has positive free rank.
    pub fn is_infinite(&self) -> bool {
        !self.sub.is_finite() || !self.quotient.is_finite()
    }
}

impl fmt::Display for ExtensionPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0 → {} → S → {} → 0", self.sub, self.quotient)
    }
}

/// The structure-set presentation of `d`: the odd-degree action image as
/// subgroup, the obstruction kernel as quotient.  For a trivial
/// fundamental group the sub term is 0 and `S` is isomorphic to the
/// quotient.
///
/// ```
/// use manset_core::homology::mrg;
/// use manset_core::surgery::structure_set;
///
/// let s = structure_set(&mrg(3, 6, 1).unwrap()).unwrap();
/// assert_eq!(s.to_string(), "0 → Z → S → (Z/2)^3 → 0");
/// ```
pub fn structure_set(d: &ManifoldDescriptor) -> Result<ExtensionPresentation, SurgeryError> {
    Ok(ExtensionPresentation {
        sub: cokernel_of_theta_odd(d)?,
        quotient: kernel_of_theta(d)?,
    })
}

/// The divisibility invariant of an L-class coordinate vector: the gcd of
/// the coordinates in the denominator-cleared copy of `FH^{4k}`, zero for
/// the zero vector.
///
/// `v` must already be expressed in the cleared lattice for the integrality
/// parameter `t` (the clearing scale `r_k = c_k * t` does not change the
/// gcd, but the coordinates themselves depend on it).  The length of `v`
/// must be the rank of `FH^{4k}` of the descriptor.
pub fn div_k_invariant(
    v: &[BigInt],
    d: &ManifoldDescriptor,
    k: usize,
    t: u64,
) -> Result<BigUint, SurgeryError> {
    ensure_valid(d)?;
    if k == 0 {
        return Err(SurgeryError::InvalidParameter("k must be at least 1".into()));
    }
    if t == 0 {
        return Err(SurgeryError::InvalidParameter("t must be at least 1".into()));
    }
    let expected = d.homology.free_rank(4 * k);
    if v.len() != expected {
        return Err(SurgeryError::LengthMismatch {
            expected,
            found: v.len(),
        });
    }
    if expected == 0 {
        return Ok(BigUint::zero());
    }
    Ok(divisibility(v, &LatticeBasis::standard(expected))?)
}

/// Classifying-map data bundled for the PD-group criterion.
pub type ClassifyingMaps = BTreeMap<usize, IntegerMatrix>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{cpn, mrg, sphere, torus, wg};

    fn group(free: usize, torsion: &[u64]) -> FgAbelianGroup {
        FgAbelianGroup::new(free, torsion.iter().map(|&t| BigUint::from(t)).collect())
    }

    #[test]
    fn l_group_table() {
        assert_eq!(l_group_z(4), FgAbelianGroup::free(1));
        assert_eq!(l_group_z(6), FgAbelianGroup::cyclic(2));
        assert_eq!(l_group_z(0), FgAbelianGroup::trivial());
        assert_eq!(l_group_z(-3), FgAbelianGroup::trivial());
        assert_eq!(l_group_z(5), FgAbelianGroup::trivial());
        for n in 1..=16i64 {
            assert_eq!(l_group_z(n), l_group_z(n + 4), "periodicity at {n}");
        }
    }

    #[test]
    fn shaneson_small_ranks() {
        // residue 2 mod 4, r = 3: Z^3 + Z/2
        assert_eq!(l_group_free_abelian(6, 3), group(3, &[2]));
        // residue 3 mod 4, r = 3: Z^1 + (Z/2)^3
        assert_eq!(l_group_free_abelian(7, 3), group(1, &[2, 2, 2]));
        // r = 0 reduces to the coefficient table
        assert_eq!(l_group_free_abelian(6, 0), group(0, &[2]));
        assert_eq!(l_group_free_abelian(8, 0), group(1, &[]));
    }

    #[test]
    fn rational_normal_invariants_examples() {
        assert_eq!(
            normal_invariants_rational(&cpn(3).unwrap()).unwrap(),
            vec![(2, 1)]
        );
        assert_eq!(
            normal_invariants_rational(&sphere(9).unwrap()).unwrap(),
            vec![(5, 0), (1, 0)]
        );
        assert_eq!(
            normal_invariants_rational(&wg(2, 1).unwrap()).unwrap(),
            vec![(4, 4), (0, 1)]
        );
    }

    #[test]
    fn integral_normal_invariants_examples() {
        let summands = normal_invariants_integral(&mrg(3, 6, 1).unwrap(), 6).unwrap();
        assert_eq!(
            summands,
            vec![
                (0, group(0, &[2])),
                (2, group(3, &[])),
                (4, group(0, &[2, 2, 2])),
            ]
        );

        assert_eq!(normal_invariants_integral(&sphere(7).unwrap(), 7).unwrap(), vec![]);

        let summands = normal_invariants_integral(&cpn(3).unwrap(), 6).unwrap();
        assert_eq!(
            summands,
            vec![(0, group(0, &[2])), (2, group(1, &[])), (4, group(0, &[2]))]
        );
    }

    #[test]
    fn collapse_flag_enforced() {
        let mut d = cpn(3).unwrap();
        d.flags.ahss_collapses = false;
        assert_eq!(
            normal_invariants_integral(&d, 6),
            Err(SurgeryError::CollapseNotJustified)
        );
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_of_theta(&cpn(3).unwrap()).unwrap(), group(1, &[2]));
        for g in 1..=3 {
            assert_eq!(
                kernel_of_theta(&wg(g, 1).unwrap()).unwrap(),
                group(2 * g, &[]),
                "wg({g},1)"
            );
        }
        assert_eq!(
            kernel_of_theta(&mrg(3, 6, 1).unwrap()).unwrap(),
            group(0, &[2, 2, 2])
        );
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(
            cokernel_of_theta_odd(&mrg(3, 6, 1).unwrap()).unwrap(),
            group(1, &[])
        );
        assert_eq!(
            cokernel_of_theta_odd(&mrg(4, 7, 1).unwrap()).unwrap(),
            group(4, &[])
        );
        assert_eq!(
            cokernel_of_theta_odd(&sphere(7).unwrap()).unwrap(),
            FgAbelianGroup::trivial()
        );
    }

    #[test]
    fn structure_set_examples() {
        let s = structure_set(&mrg(3, 6, 1).unwrap()).unwrap();
        assert_eq!(s.sub, group(1, &[]));
        assert_eq!(s.quotient, group(0, &[2, 2, 2]));
        assert_eq!(s.to_string(), "0 → Z → S → (Z/2)^3 → 0");

        let s = structure_set(&cpn(4).unwrap()).unwrap();
        assert!(s.sub.is_trivial());
        assert_eq!(s.total_if_determined(), Some(&group(1, &[2, 2])));

        let s = structure_set(&wg(3, 1).unwrap()).unwrap();
        assert_eq!(s.total_if_determined(), Some(&group(6, &[])));
    }

    #[test]
    fn torus_is_borel_shaped() {
        // identity classifying map kills both ends of the presentation
        let s = structure_set(&torus(5).unwrap()).unwrap();
        assert!(s.sub.is_trivial());
        assert!(s.quotient.is_trivial());
    }

    #[test]
    fn div_k_examples() {
        let d = cpn(3).unwrap();
        let v = d.l_class.as_ref().unwrap().get(&1).unwrap().clone();
        assert_eq!(div_k_invariant(&v, &d, 1, 1).unwrap(), BigUint::from(4u32));

        // zero vector (stably parallelizable source)
        let z = vec![BigInt::zero()];
        assert_eq!(div_k_invariant(&z, &d, 1, 1).unwrap(), BigUint::zero());

        // plain gcd in rank 2
        let d = wg(1, 1).unwrap();
        let v = vec![BigInt::from(6), BigInt::from(9)];
        assert_eq!(div_k_invariant(&v, &d, 1, 1).unwrap(), BigUint::from(3u32));

        assert_eq!(
            div_k_invariant(&v, &d, 2, 1),
            Err(SurgeryError::LengthMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn partial_kernels_from_the_smith_form() {
        // In dimension 6 with r = 4, degree 2 carries Z coefficients (L_4,
        // b_2 = 6) and degree 4 carries Z/2 coefficients (L_2, target rank
        // C(4,4) = 1).
        let mut d = mrg(4, 7, 1).unwrap();
        let maps = d.classifying_map.as_mut().unwrap();
        // rational rank 5 on the degree-2 summand: the kernel gains a Z
        let mut degree2 = IntegerMatrix::identity(6);
        degree2.set(5, 5, BigInt::zero());
        maps.insert(2, degree2);
        // doubled entries on the degree-4 summand vanish mod 2, so the
        // whole (Z/2)^6 stays in the kernel despite rational rank 1
        let mut row = vec![0i64; 6];
        row[0] = 2;
        maps.insert(4, IntegerMatrix::from_i64_rows(&[row.clone()]));
        assert_eq!(kernel_of_theta(&d).unwrap(), group(1, &[2, 2, 2, 2, 2, 2]));

        // an odd entry has mod-2 rank 1 and kills one Z/2
        row[0] = 1;
        let maps = d.classifying_map.as_mut().unwrap();
        maps.insert(4, IntegerMatrix::from_i64_rows(&[row]));
        assert_eq!(kernel_of_theta(&d).unwrap(), group(1, &[2, 2, 2, 2, 2]));
    }

    #[test]
    fn partial_cokernels_from_the_smith_form() {
        // Degree 3 carries Z coefficients (L_4) one degree above dim 6.
        let mut d = mrg(3, 6, 1).unwrap();
        let maps = d.classifying_map.as_mut().unwrap();
        let mut row = vec![0i64; 12];
        row[0] = 2;
        maps.insert(3, IntegerMatrix::from_i64_rows(&[row.clone()]));
        assert_eq!(cokernel_of_theta_odd(&d).unwrap(), group(0, &[2]));

        row[0] = 1;
        let maps = d.classifying_map.as_mut().unwrap();
        maps.insert(3, IntegerMatrix::from_i64_rows(&[row]));
        assert_eq!(cokernel_of_theta_odd(&d).unwrap(), FgAbelianGroup::trivial());
    }

    #[test]
    fn unsupported_fundamental_group() {
        let mut d = mrg(3, 6, 1).unwrap();
        d.pi1 = Pi1::Other("surface group".into());
        d.homology.set(1, FgAbelianGroup::free(3));
        assert!(matches!(
            kernel_of_theta(&d),
            Err(SurgeryError::UnsupportedFundamentalGroup(_))
        ));
    }

    #[test]
    fn missing_classifying_map_detected() {
        let mut d = mrg(3, 6, 1).unwrap();
        d.classifying_map = None;
        assert_eq!(kernel_of_theta(&d), Err(SurgeryError::MissingClassifyingMap));
    }
}
