//! Integer-lattice algebra: bases, normal forms, sublattice indices, the
//! divisibility function and constructive divisibility spectra.
//!
//! A lattice here is a finitely generated free abelian group presented by a
//! basis of integer vectors inside an ambient `Z^n`.  The divisibility of a
//! nonzero element is the largest `d` with `x = d * x_0` for a lattice
//! element `x_0` (zero has divisibility 0); it is computed as the gcd of
//! the coordinates in any basis, which is basis-independent because every
//! lattice isomorphism preserves divisibility.
//!
//! Full affine sublattices realise infinitely many divisibilities.  The
//! witness construction works mod a prime `p` coprime to the index: the
//! quotient is then `p`-divisible, so the offset can be matched mod `p`
//! inside the sublattice, producing a coset element all of whose
//! coordinates are divisible by `p`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

mod matrix;
mod primes;

pub use matrix::{smith_normal_form, IntegerMatrix, SmithDecomposition};
pub use primes::{is_prime, primes_from};

/// Errors raised by lattice operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// A vector had the wrong length for the ambient rank.
    DimensionMismatch { expected: usize, found: usize },
    /// Proposed basis vectors are linearly dependent over the rationals.
    DependentBasis,
    /// The vector is not an integer combination of the basis.
    NotInLattice,
    /// The proposed sublattice is not contained in the ambient lattice.
    NotASublattice,
    /// The sublattice does not have finite index in its ambient lattice.
    NotFull,
    /// The given prime divides the index of the sublattice.
    PrimeDividesIndex { p: u64 },
    /// The witness parameter must be prime.
    NotPrime(u64),
    /// A cooperative cancellation token was triggered.
    Cancelled,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::DimensionMismatch { expected, found } => {
                write!(f, "vector length {found} does not match ambient rank {expected}")
            }
            LatticeError::DependentBasis => write!(f, "basis vectors are linearly dependent"),
            LatticeError::NotInLattice => write!(f, "vector is not in the lattice"),
            LatticeError::NotASublattice => write!(f, "vectors do not span a sublattice"),
            LatticeError::NotFull => write!(f, "sublattice does not have finite index"),
            LatticeError::PrimeDividesIndex { p } => {
                write!(f, "prime {p} divides the sublattice index")
            }
            LatticeError::NotPrime(p) => write!(f, "{p} is not prime"),
            LatticeError::Cancelled => write!(f, "operation cancelled"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// A basis of a sublattice of `Z^n`: linearly independent integer vectors,
/// checked at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeBasis {
    ambient_rank: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn new(ambient_rank: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        for v in &vectors {
            if v.len() != ambient_rank {
                return Err(LatticeError::DimensionMismatch {
                    expected: ambient_rank,
                    found: v.len(),
                });
            }
        }
        if !vectors.is_empty() {
            let m = IntegerMatrix::from_rows(vectors.clone());
            if smith_normal_form(&m).rank() != vectors.len() {
                return Err(LatticeError::DependentBasis);
            }
        }
        Ok(LatticeBasis {
            ambient_rank,
            vectors,
        })
    }

    pub fn from_i64(ambient_rank: usize, vectors: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Self::new(
            ambient_rank,
            vectors
                .iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// The standard basis of `Z^n`.
    pub fn standard(n: usize) -> Self {
        let vectors = (0..n)
            .map(|i| {
                let mut v = vec![BigInt::zero(); n];
                v[i] = BigInt::one();
                v
            })
            .collect();
        LatticeBasis {
            ambient_rank: n,
            vectors,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    /// True when the lattice has finite index in the ambient `Z^n`.
    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_rank
    }

    /// Basis vectors as matrix rows.
    pub fn row_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_rows(self.vectors.clone())
    }

    /// Coordinates of `x` with respect to this basis, or `NotInLattice` if
    /// `x` is not an integer combination of the basis vectors.
    ///
    /// Repeated queries against the same basis should go through
    /// [`LatticeBasis::solver`], which factors the basis matrix once.
    pub fn coordinates_of(&self, x: &[BigInt]) -> Result<Vec<BigInt>, LatticeError> {
        self.solver().coordinates_of(x)
    }

    /// Precomputes the Smith form of the basis matrix for repeated
    /// coordinate solves.
    pub fn solver(&self) -> CoordinateSolver {
        let snf = if self.vectors.is_empty() {
            None
        } else {
            // coordinates solve B^T c = x through the Smith form of B^T
            Some(smith_normal_form(&self.row_matrix().transpose()))
        };
        CoordinateSolver {
            ambient_rank: self.ambient_rank,
            rank: self.rank(),
            snf,
        }
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.coordinates_of(x).is_ok()
    }

    /// The ambient vector with the given coordinates.
    pub fn element_from_coordinates(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.rank());
        let mut out = vec![BigInt::zero(); self.ambient_rank];
        for (c, v) in coords.iter().zip(&self.vectors) {
            for (o, entry) in out.iter_mut().zip(v) {
                *o += c * entry;
            }
        }
        out
    }
}

/// Precomputed factorisation of a basis matrix, answering coordinate
/// queries without refactoring.
pub struct CoordinateSolver {
    ambient_rank: usize,
    rank: usize,
    snf: Option<SmithDecomposition>,
}

impl CoordinateSolver {
    /// Coordinates of `x` in the underlying basis; `NotInLattice` when `x`
    /// is not an integer combination of the basis vectors.
    pub fn coordinates_of(&self, x: &[BigInt]) -> Result<Vec<BigInt>, LatticeError> {
        if x.len() != self.ambient_rank {
            return Err(LatticeError::DimensionMismatch {
                expected: self.ambient_rank,
                found: x.len(),
            });
        }
        let Some(snf) = &self.snf else {
            return if x.iter().all(Zero::is_zero) {
                Ok(Vec::new())
            } else {
                Err(LatticeError::NotInLattice)
            };
        };
        let y = snf.u.apply(x);
        let mut z = Vec::with_capacity(self.rank);
        for (i, yi) in y.iter().enumerate() {
            if i < self.rank {
                let di = snf.d.get(i, i);
                // independent basis means d_i > 0 for i < rank
                let (q, r) = yi.div_rem(di);
                if !r.is_zero() {
                    return Err(LatticeError::NotInLattice);
                }
                z.push(q);
            } else if !yi.is_zero() {
                return Err(LatticeError::NotInLattice);
            }
        }
        let mut padded = z;
        padded.resize(snf.v.rows(), BigInt::zero());
        let c = snf.v.apply(&padded);
        Ok(c[..self.rank].to_vec())
    }
}

/// A coset `offset + L_0` of a sublattice inside `Z^n`, both expressed in
/// the coordinates of a fixed ambient basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSublattice {
    offset: Vec<BigInt>,
    lattice: LatticeBasis,
}

impl AffineSublattice {
    pub fn new(offset: Vec<BigInt>, lattice: LatticeBasis) -> Result<Self, LatticeError> {
        if offset.len() != lattice.ambient_rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: lattice.ambient_rank(),
                found: offset.len(),
            });
        }
        Ok(AffineSublattice { offset, lattice })
    }

    pub fn from_i64(offset: &[i64], ambient_rank: usize, basis: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Self::new(
            offset.iter().map(|&x| BigInt::from(x)).collect(),
            LatticeBasis::from_i64(ambient_rank, basis)?,
        )
    }

    pub fn offset(&self) -> &[BigInt] {
        &self.offset
    }

    pub fn lattice(&self) -> &LatticeBasis {
        &self.lattice
    }

    /// Membership in the coset: `x - offset` must lie in the sublattice.
    pub fn contains(&self, x: &[BigInt]) -> bool {
        if x.len() != self.offset.len() {
            return false;
        }
        let diff: Vec<BigInt> = x.iter().zip(&self.offset).map(|(a, b)| a - b).collect();
        self.lattice.contains(&diff)
    }
}

/// Index of a sublattice: the order of the quotient group, or infinite on
/// rank defect.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SublatticeIndex {
    Finite(BigUint),
    Infinite,
}

impl SublatticeIndex {
    pub fn as_finite(&self) -> Option<&BigUint> {
        match self {
            SublatticeIndex::Finite(n) => Some(n),
            SublatticeIndex::Infinite => None,
        }
    }
}

impl fmt::Display for SublatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SublatticeIndex::Finite(n) => write!(f, "{n}"),
            SublatticeIndex::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// The divisibility of `x` in the lattice spanned by `basis`: the gcd of
/// its coordinates, with `div(0) = 0`.
pub fn divisibility(x: &[BigInt], basis: &LatticeBasis) -> Result<BigUint, LatticeError> {
    let coords = basis.coordinates_of(x)?;
    let mut g = BigUint::zero();
    for c in coords {
        g = g.gcd(c.magnitude());
    }
    Ok(g)
}

/// `|L / L_0|` for `L_0` spanned by `sub` inside the lattice spanned by
/// `ambient`; `Infinite` when the ranks differ, `NotASublattice` when a
/// vector of `sub` is not an integer combination of `ambient`.
pub fn sublattice_index(
    sub: &LatticeBasis,
    ambient: &LatticeBasis,
) -> Result<SublatticeIndex, LatticeError> {
    let solver = ambient.solver();
    let mut coordinate_rows = Vec::with_capacity(sub.rank());
    for v in sub.vectors() {
        match solver.coordinates_of(v) {
            Ok(c) => coordinate_rows.push(c),
            Err(LatticeError::NotInLattice) => return Err(LatticeError::NotASublattice),
            Err(e) => return Err(e),
        }
    }
    if sub.rank() < ambient.rank() {
        return Ok(SublatticeIndex::Infinite);
    }
    // ranks equal: the coordinate matrix is square and nonsingular
    let m = IntegerMatrix::from_rows(coordinate_rows);
    let snf = smith_normal_form(&m);
    let mut index = BigUint::one();
    for d in snf.diagonal() {
        index *= d.magnitude();
    }
    Ok(SublatticeIndex::Finite(index))
}

/// Index of a full sublattice in the ambient `Z^n`: |det| of its basis
/// matrix via the Smith diagonal.
fn index_in_ambient(basis: &LatticeBasis) -> BigUint {
    if basis.rank() == 0 {
        return if basis.ambient_rank() == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let snf = smith_normal_form(&basis.row_matrix());
    let mut index = BigUint::one();
    for d in snf.diagonal() {
        index *= d.magnitude();
    }
    index
}

/// Solves `sum_i c_i b_i = target (mod p)` for a full basis whose
/// determinant is coprime to the prime `p`; entries of `c` lie in `[0, p)`.
#[allow(clippy::needless_range_loop)] // the elimination mutates two rows by index
fn solve_mod_p(basis: &LatticeBasis, target: &[BigInt], p: u64) -> Vec<BigInt> {
    let n = basis.rank();
    let pb = BigInt::from(p);
    let reduce = |x: &BigInt| -> BigInt { x.mod_floor(&pb) };
    // columns are the basis vectors
    let mut a = vec![vec![BigInt::zero(); n + 1]; n];
    for (j, v) in basis.vectors().iter().enumerate() {
        for i in 0..n {
            a[i][j] = reduce(&v[i]);
        }
    }
    for i in 0..n {
        a[i][n] = reduce(&target[i]);
    }

    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("matrix invertible mod p");
        a.swap(col, pivot_row);
        let inv = mod_inverse(&a[col][col], &pb);
        for c in col..=n {
            a[col][c] = reduce(&(&a[col][c] * &inv));
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &a[col][c];
                    a[r][c] = reduce(&(&a[r][c] - delta));
                }
            }
        }
    }
    (0..n).map(|i| a[i][n].clone()).collect()
}

fn mod_inverse(x: &BigInt, p: &BigInt) -> BigInt {
    let e = x.extended_gcd(p);
    debug_assert!(e.gcd.is_one(), "element not invertible");
    e.x.mod_floor(p)
}

/// An element of the coset whose divisibility is divisible by `p`, found by
/// matching the offset mod `p` inside the sublattice.
///
/// Requires the sublattice to be full in the ambient `Z^n` and `p` to be a
/// prime not dividing the index.
pub fn prime_witness(s: &AffineSublattice, p: u64) -> Result<Vec<BigInt>, LatticeError> {
    if !is_prime(p) {
        return Err(LatticeError::NotPrime(p));
    }
    if !s.lattice().is_full() {
        return Err(LatticeError::NotFull);
    }
    let index = index_in_ambient(s.lattice());
    if (&index % BigUint::from(p)).is_zero() {
        return Err(LatticeError::PrimeDividesIndex { p });
    }
    if s.lattice().rank() == 0 {
        // ambient Z^0; the only coset element is the empty vector
        return Ok(Vec::new());
    }
    let coeffs = solve_mod_p(s.lattice(), s.offset(), p);
    let matched = s.lattice().element_from_coordinates(&coeffs);
    Ok(s.offset()
        .iter()
        .zip(&matched)
        .map(|(a, b)| a - b)
        .collect())
}

/// Cooperative cancellation for long-running searches.  Cloning shares the
/// underlying flag.
#[derive(Clone, Debug, Default)]
pub struct CancelToken {
    flag: Arc<AtomicBool>,
}

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.flag.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.flag.load(Ordering::Relaxed)
    }
}

/// A divisibility value realised by a concrete coset element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumEntry {
    pub value: BigUint,
    pub element: Vec<BigInt>,
}

/// At least `count` distinct divisibility values of elements of the full
/// affine sublattice `s`, each with a witnessing element, produced by
/// iterating [`prime_witness`] over successive primes coprime to the index.
///
/// Divisibility is measured in the ambient `Z^n`.  The result is sorted by
/// value.
pub fn divisibility_spectrum(
    s: &AffineSublattice,
    count: usize,
) -> Result<Vec<SpectrumEntry>, LatticeError> {
    divisibility_spectrum_cancellable(s, count, &CancelToken::new())
}

/// As [`divisibility_spectrum`], aborting with `Cancelled` when the token
/// fires.
pub fn divisibility_spectrum_cancellable(
    s: &AffineSublattice,
    count: usize,
    cancel: &CancelToken,
) -> Result<Vec<SpectrumEntry>, LatticeError> {
    if !s.lattice().is_full() {
        return Err(LatticeError::NotFull);
    }
    if s.lattice().rank() == 0 {
        // Z^0 has one element of divisibility 0; no more values exist, and
        // the full-sublattice hypothesis of the infinitude argument is
        // vacuous here, so ask for at most one.
        return Ok(vec![SpectrumEntry {
            value: BigUint::zero(),
            element: Vec::new(),
        }]);
    }
    let ambient = LatticeBasis::standard(s.lattice().ambient_rank());
    let index = index_in_ambient(s.lattice());
    let mut entries: Vec<SpectrumEntry> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();

    let record = |element: Vec<BigInt>,
                      entries: &mut Vec<SpectrumEntry>,
                      seen: &mut std::collections::BTreeSet<BigUint>|
     -> Result<bool, LatticeError> {
        let value = divisibility(&element, &ambient)?;
        if seen.insert(value.clone()) {
            entries.push(SpectrumEntry { value, element });
            Ok(true)
        } else {
            Ok(false)
        }
    };

    for p in primes_from(2) {
        if cancel.is_cancelled() {
            return Err(LatticeError::Cancelled);
        }
        if entries.len() >= count {
            break;
        }
        if (&index % BigUint::from(p)).is_zero() {
            continue;
        }
        let witness = prime_witness(s, p)?;
        if !record(witness.clone(), &mut entries, &mut seen)? {
            // Same value as an earlier prime (for instance the zero vector
            // when the offset already lies in the sublattice); shift by
            // p times a basis vector to stay divisible by p but nonzero.
            let shift = s
                .lattice()
                .element_from_coordinates(
                    &std::iter::once(BigInt::from(p))
                        .chain(std::iter::repeat(BigInt::zero()))
                        .take(s.lattice().rank())
                        .collect::<Vec<_>>(),
                );
            let alternative: Vec<BigInt> =
                witness.iter().zip(&shift).map(|(a, b)| a + b).collect();
            record(alternative, &mut entries, &mut seen)?;
        }
    }
    entries.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn divisibility_is_coordinate_gcd() {
        let l = LatticeBasis::standard(2);
        assert_eq!(divisibility(&big(&[4, 6]), &l).unwrap(), BigUint::from(2u32));
        assert_eq!(divisibility(&big(&[0, 0]), &l).unwrap(), BigUint::zero());
    }

    #[test]
    fn divisibility_in_a_rank_one_basis() {
        let l = LatticeBasis::from_i64(2, &[vec![1, 1]]).unwrap();
        assert_eq!(divisibility(&big(&[3, 3]), &l).unwrap(), BigUint::from(3u32));
        assert_eq!(
            divisibility(&big(&[1, 2]), &l),
            Err(LatticeError::NotInLattice)
        );
    }

    #[test]
    fn dependent_basis_rejected() {
        assert_eq!(
            LatticeBasis::from_i64(2, &[vec![1, 2], vec![2, 4]]),
            Err(LatticeError::DependentBasis)
        );
    }

    #[test]
    fn index_of_doubled_lattice() {
        let sub = LatticeBasis::from_i64(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        let ambient = LatticeBasis::standard(2);
        assert_eq!(
            sublattice_index(&sub, &ambient).unwrap(),
            SublatticeIndex::Finite(BigUint::from(4u32))
        );
    }

    #[test]
    fn rank_defect_gives_infinite_index() {
        let sub = LatticeBasis::from_i64(2, &[vec![1, 0]]).unwrap();
        let ambient = LatticeBasis::standard(2);
        assert_eq!(sublattice_index(&sub, &ambient).unwrap(), SublatticeIndex::Infinite);
    }

    #[test]
    fn triangular_sublattice_index() {
        let sub = LatticeBasis::from_i64(2, &[vec![1, 1], vec![0, 3]]).unwrap();
        let ambient = LatticeBasis::standard(2);
        assert_eq!(
            sublattice_index(&sub, &ambient).unwrap(),
            SublatticeIndex::Finite(BigUint::from(3u32))
        );
    }

    #[test]
    fn non_sublattice_detected() {
        let sub = LatticeBasis::from_i64(2, &[vec![1, 0]]).unwrap();
        let ambient = LatticeBasis::from_i64(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(
            sublattice_index(&sub, &ambient),
            Err(LatticeError::NotASublattice)
        );
    }

    #[test]
    fn prime_witness_in_odd_coset() {
        // 1 + 2Z in Z, p = 3: the witness is -3 (or any coset element
        // divisible by 3).
        let s = AffineSublattice::from_i64(&[1], 1, &[vec![2]]).unwrap();
        let w = prime_witness(&s, 3).unwrap();
        assert!(s.contains(&w));
        let d = divisibility(&w, &LatticeBasis::standard(1)).unwrap();
        assert!((&d % BigUint::from(3u32)).is_zero());
        assert!(!d.is_zero());
    }

    #[test]
    fn prime_witness_zero_offset() {
        let s = AffineSublattice::from_i64(&[0, 0], 2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let w = prime_witness(&s, 5).unwrap();
        for c in &w {
            assert!(c.mod_floor(&BigInt::from(5)).is_zero());
        }
    }

    #[test]
    fn prime_witness_two_dimensional() {
        let s = AffineSublattice::from_i64(&[1, 0], 2, &[vec![2, 0], vec![0, 2]]).unwrap();
        let w = prime_witness(&s, 3).unwrap();
        assert!(s.contains(&w));
        let d = divisibility(&w, &LatticeBasis::standard(2)).unwrap();
        assert!((&d % BigUint::from(3u32)).is_zero());
    }

    #[test]
    fn prime_witness_rejects_dividing_prime() {
        let s = AffineSublattice::from_i64(&[1], 1, &[vec![2]]).unwrap();
        assert_eq!(
            prime_witness(&s, 2),
            Err(LatticeError::PrimeDividesIndex { p: 2 })
        );
    }

    #[test]
    fn prime_witness_requires_prime() {
        let s = AffineSublattice::from_i64(&[1], 1, &[vec![2]]).unwrap();
        assert_eq!(prime_witness(&s, 9), Err(LatticeError::NotPrime(9)));
    }

    #[test]
    fn spectrum_of_odd_coset() {
        let s = AffineSublattice::from_i64(&[1], 1, &[vec![2]]).unwrap();
        let entries = divisibility_spectrum(&s, 3).unwrap();
        assert!(entries.len() >= 3);
        let values: Vec<_> = entries.iter().map(|e| e.value.clone()).collect();
        let mut dedup = values.clone();
        dedup.dedup();
        assert_eq!(values, dedup, "values must be distinct and sorted");
        for e in &entries {
            assert!(s.contains(&e.element));
        }
    }

    #[test]
    fn spectrum_of_standard_lattice_reaches_zero() {
        let s = AffineSublattice::from_i64(&[0], 1, &[vec![1]]).unwrap();
        let entries = divisibility_spectrum(&s, 4).unwrap();
        assert!(entries.len() >= 4);
        assert_eq!(entries[0].value, BigUint::zero());
    }

    #[test]
    fn spectrum_requires_fullness() {
        let lattice = LatticeBasis::from_i64(2, &[vec![1, 0]]).unwrap();
        let s = AffineSublattice::new(big(&[0, 0]), lattice).unwrap();
        assert_eq!(divisibility_spectrum(&s, 1), Err(LatticeError::NotFull));
    }

    #[test]
    fn spectrum_cancellation() {
        let s = AffineSublattice::from_i64(&[1], 1, &[vec![2]]).unwrap();
        let token = CancelToken::new();
        token.cancel();
        assert_eq!(
            divisibility_spectrum_cancellable(&s, 5, &token),
            Err(LatticeError::Cancelled)
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let l = LatticeBasis::from_i64(3, &[vec![1, 2, 0], vec![0, 1, 5]]).unwrap();
        let coords = big(&[3, -2]);
        let x = l.element_from_coordinates(&coords);
        assert_eq!(l.coordinates_of(&x).unwrap(), coords);
    }
}
