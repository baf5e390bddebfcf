//! The built-in manifold library: spheres, complex projective spaces, the
//! connected sums `W_g` of products of spheres, tori, and the boundaries
//! `M_{r,g}` of regular neighbourhoods of torus 2-skeleta.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;

use super::{
    binomial, DescriptorError, DescriptorFlags, FgAbelianGroup, GradedGroup, ManifoldDescriptor,
    Pi1, WedgeSummand,
};
use crate::lattice::IntegerMatrix;
use crate::lpoly::{denominator_constants, evaluate_l_class, GradedClass, Rational};

/// Ranks above this would overflow the machine-word group ranks used by
/// `GradedGroup`, so torus-based builtins reject larger `r`.
const MAX_TORUS_RANK: usize = 64;

/// Largest complex dimension for which the L-class table of `CP^n` is
/// populated; `n/2` must stay within the L-polynomial degree cap.
const MAX_CPN: usize = 16;

fn range_err(name: &'static str, message: impl Into<String>) -> DescriptorError {
    DescriptorError::ParameterOutOfRange {
        name,
        message: message.into(),
    }
}

fn small_binomial(n: usize, k: usize) -> usize {
    binomial(n, k)
        .to_usize()
        .expect("binomial within machine range for capped torus rank")
}

/// `H_j(T^r; Z) = Z^{C(r, j)}`.
pub fn torus_homology(r: usize) -> GradedGroup {
    assert!(r <= MAX_TORUS_RANK, "torus rank above {MAX_TORUS_RANK} unsupported");
    let ranks: Vec<usize> = (0..=r).map(|j| small_binomial(r, j)).collect();
    GradedGroup::from_free_ranks(&ranks)
}

/// Homology of the 2-skeleton of the `r`-torus: `Z`, `Z^r`, `Z^{C(r,2)}`.
pub fn k_complex_homology(r: usize) -> Result<GradedGroup, DescriptorError> {
    if r < 1 {
        return Err(range_err("k_complex_homology", "r must be at least 1"));
    }
    if r > MAX_TORUS_RANK {
        return Err(range_err("k_complex_homology", format!("r must be at most {MAX_TORUS_RANK}")));
    }
    Ok(GradedGroup::from_free_ranks(&[
        1,
        r,
        small_binomial(r, 2),
    ]))
}

/// The sphere `S^n` for `n >= 2`.
pub fn sphere(n: usize) -> Result<ManifoldDescriptor, DescriptorError> {
    if n < 2 {
        return Err(range_err("sphere", "n must be at least 2 (S^1 is not simply connected)"));
    }
    let mut homology = GradedGroup::new();
    homology.set(0, FgAbelianGroup::free(1));
    homology.set(n, FgAbelianGroup::free(1));
    let mut l_class = BTreeMap::new();
    if n.is_multiple_of(4) {
        l_class.insert(n / 4, vec![BigInt::zero()]);
    }
    Ok(ManifoldDescriptor {
        name: format!("sphere({n})"),
        dimension: n,
        pi1: Pi1::Trivial,
        homology,
        wedge_model: Some(vec![WedgeSummand { degree: n, count: 1 }]),
        classifying_map: None,
        l_class: Some(l_class),
        flags: DescriptorFlags {
            stably_parallelizable: true,
            ahss_collapses: true,
            orientable: true,
        },
    })
}

/// Complex projective space `CP^n` (real dimension `2n`), with L-class
/// coordinates computed from the total Pontryagin class `(1 + x^2)^{n+1}`.
pub fn cpn(n: usize) -> Result<ManifoldDescriptor, DescriptorError> {
    if n < 1 {
        return Err(range_err("cpn", "n must be at least 1"));
    }
    if n > MAX_CPN {
        return Err(range_err("cpn", format!("n must be at most {MAX_CPN}")));
    }
    let mut homology = GradedGroup::new();
    for j in 0..=n {
        homology.set(2 * j, FgAbelianGroup::free(1));
    }

    // total Pontryagin class (1 + x^2)^{n+1} over the degree-2 generator
    let x = GradedClass::generator(vec![2], 0);
    let total = GradedClass::one(vec![2])
        .add(&x.mul(&x))
        .pow(n as u32 + 1)
        .truncate(2 * n as u32);
    let mut l_class = BTreeMap::new();
    for k in 1..=n / 2 {
        let lk = evaluate_l_class(&total, k)?;
        let coefficient = lk.coefficient(&[2 * k as u32]);
        let constants = denominator_constants(k, 1)?;
        let cleared = coefficient * Rational::from(BigInt::from(constants.c_k));
        debug_assert!(cleared.is_integer());
        l_class.insert(k, vec![cleared.to_integer()]);
    }

    Ok(ManifoldDescriptor {
        name: format!("cpn({n})"),
        dimension: 2 * n,
        pi1: Pi1::Trivial,
        homology,
        wedge_model: None,
        classifying_map: None,
        l_class: Some(l_class),
        flags: DescriptorFlags {
            stably_parallelizable: false,
            ahss_collapses: true,
            orientable: true,
        },
    })
}

/// `W_g`, the g-fold connected sum of `S^{4k} x S^{4k}` (dimension `8k`).
pub fn wg(g: usize, k: usize) -> Result<ManifoldDescriptor, DescriptorError> {
    if k < 1 {
        return Err(range_err("wg", "k must be at least 1"));
    }
    let n = 8 * k;
    let mut homology = GradedGroup::new();
    homology.set(0, FgAbelianGroup::free(1));
    homology.set(4 * k, FgAbelianGroup::free(2 * g));
    homology.set(n, FgAbelianGroup::free(1));

    let mut wedge = Vec::new();
    if g > 0 {
        wedge.push(WedgeSummand { degree: 4 * k, count: 2 * g });
    }
    wedge.push(WedgeSummand { degree: n, count: 1 });

    let mut l_class = BTreeMap::new();
    if g > 0 {
        l_class.insert(k, vec![BigInt::zero(); 2 * g]);
    }
    l_class.insert(2 * k, vec![BigInt::zero()]);

    Ok(ManifoldDescriptor {
        name: format!("wg({g},{k})"),
        dimension: n,
        pi1: Pi1::Trivial,
        homology,
        wedge_model: Some(wedge),
        classifying_map: None,
        l_class: Some(l_class),
        flags: DescriptorFlags {
            stably_parallelizable: true,
            ahss_collapses: true,
            orientable: true,
        },
    })
}

/// The torus `T^r` with its identity classifying map.
pub fn torus(r: usize) -> Result<ManifoldDescriptor, DescriptorError> {
    if r < 1 {
        return Err(range_err("torus", "r must be at least 1"));
    }
    if r > MAX_TORUS_RANK {
        return Err(range_err("torus", format!("r must be at most {MAX_TORUS_RANK}")));
    }
    let homology = torus_homology(r);
    let mut maps = BTreeMap::new();
    for j in 0..=r {
        maps.insert(j, IntegerMatrix::identity(small_binomial(r, j)));
    }
    let mut l_class = BTreeMap::new();
    for k in 1.. {
        if 4 * k > r {
            break;
        }
        l_class.insert(k, vec![BigInt::zero(); small_binomial(r, 4 * k)]);
    }
    Ok(ManifoldDescriptor {
        name: format!("torus({r})"),
        dimension: r,
        pi1: Pi1::FreeAbelian(r),
        homology,
        wedge_model: None,
        classifying_map: Some(maps),
        l_class: Some(l_class),
        flags: DescriptorFlags {
            stably_parallelizable: true,
            ahss_collapses: true,
            orientable: true,
        },
    })
}

/// `M_{r,g}`: the boundary of a regular neighbourhood of the torus
/// 2-skeleton in codimension-zero Euclidean space, connect-summed with `g`
/// copies of `S^{2k+1} x S^{2k+1}`; dimension `4k + 2`.
///
/// The wedge model lists sphere summands in degrees `1, 2, 2k+1, 4k, 4k+1`
/// and the top cell; coinciding degrees are merged by summing counts.  The
/// classifying map to `T^r` is an isomorphism in degrees up to 2 and zero
/// above.
pub fn mrg(r: usize, g: usize, k: usize) -> Result<ManifoldDescriptor, DescriptorError> {
    if r < 1 {
        return Err(range_err("mrg", "r must be at least 1"));
    }
    if r > MAX_TORUS_RANK {
        return Err(range_err("mrg", format!("r must be at most {MAX_TORUS_RANK}")));
    }
    if k < 1 {
        return Err(range_err("mrg", "k must be at least 1"));
    }
    let n = 4 * k + 2;
    let s = small_binomial(r, 2);

    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for (degree, count) in [
        (1, r),
        (2, s),
        (2 * k + 1, 2 * g),
        (4 * k, s),
        (4 * k + 1, r),
        (n, 1),
    ] {
        if count > 0 {
            *counts.entry(degree).or_default() += count;
        }
    }
    let wedge: Vec<WedgeSummand> = counts
        .iter()
        .map(|(&degree, &count)| WedgeSummand { degree, count })
        .collect();

    let mut homology = GradedGroup::new();
    homology.set(0, FgAbelianGroup::free(1));
    for (&degree, &count) in &counts {
        homology.set(degree, FgAbelianGroup::free(count));
    }

    let mut maps = BTreeMap::new();
    maps.insert(0, IntegerMatrix::identity(1));
    maps.insert(1, IntegerMatrix::identity(r));
    if s > 0 {
        maps.insert(2, IntegerMatrix::identity(s));
    }
    // zero matrices above degree 2 wherever source and target are nonzero
    for j in 3..=n.min(r) {
        let target = small_binomial(r, j);
        let source = homology.free_rank(j);
        if target > 0 && source > 0 {
            maps.insert(j, IntegerMatrix::zero(target, source));
        }
    }

    let mut l_class = BTreeMap::new();
    for j in 1..=n / 4 {
        let b = homology.free_rank(4 * j);
        if b > 0 {
            l_class.insert(j, vec![BigInt::zero(); b]);
        }
    }

    Ok(ManifoldDescriptor {
        name: format!("mrg({r},{g},{k})"),
        dimension: n,
        pi1: Pi1::FreeAbelian(r),
        homology,
        wedge_model: Some(wedge),
        classifying_map: Some(maps),
        l_class: Some(l_class),
        flags: DescriptorFlags {
            stably_parallelizable: true,
            ahss_collapses: true,
            orientable: true,
        },
    })
}

/// Dispatch by name: `sphere(n)`, `cpn(n)`, `wg(g,k)`, `mrg(r,g,k)`,
/// `torus(r)`.
pub fn builtin(name: &str, params: &[i64]) -> Result<ManifoldDescriptor, DescriptorError> {
    let as_usize = |x: i64| -> Result<usize, DescriptorError> {
        usize::try_from(x).map_err(|_| range_err("builtin", format!("negative parameter {x}")))
    };
    match (name, params) {
        ("sphere", [n]) => sphere(as_usize(*n)?),
        ("cpn", [n]) => cpn(as_usize(*n)?),
        ("wg", [g, k]) => wg(as_usize(*g)?, as_usize(*k)?),
        ("mrg", [r, g, k]) => mrg(as_usize(*r)?, as_usize(*g)?, as_usize(*k)?),
        ("torus", [r]) => torus(as_usize(*r)?),
        _ => Err(DescriptorError::UnknownBuiltin(format!(
            "{name}/{} parameters",
            params.len()
        ))),
    }
}

/// Parses `"mrg(3,6,1)"`-style builtin specifications.
pub fn parse_builtin(spec: &str) -> Result<ManifoldDescriptor, DescriptorError> {
    let spec = spec.trim();
    let open = spec
        .find('(')
        .ok_or_else(|| DescriptorError::UnknownBuiltin(spec.to_string()))?;
    if !spec.ends_with(')') {
        return Err(DescriptorError::UnknownBuiltin(spec.to_string()));
    }
    let name = &spec[..open];
    let inner = &spec[open + 1..spec.len() - 1];
    let params: Result<Vec<i64>, _> = inner
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect();
    let params = params.map_err(|_| DescriptorError::UnknownBuiltin(spec.to_string()))?;
    builtin(name, &params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::validate;

    #[test]
    fn torus_homology_ranks() {
        let t3 = torus_homology(3);
        let ranks: Vec<usize> = (0..=3).map(|j| t3.free_rank(j)).collect();
        assert_eq!(ranks, vec![1, 3, 3, 1]);

        let t0 = torus_homology(0);
        assert_eq!(t0.free_rank(0), 1);
        assert!(t0.max_degree() == Some(0));

        assert_eq!(torus_homology(5).free_rank(2), 10);
    }

    #[test]
    fn k_complex_ranks() {
        let k3 = k_complex_homology(3).unwrap();
        assert_eq!(
            (k3.free_rank(0), k3.free_rank(1), k3.free_rank(2), k3.free_rank(3)),
            (1, 3, 3, 0)
        );
        let k1 = k_complex_homology(1).unwrap();
        assert_eq!((k1.free_rank(0), k1.free_rank(1), k1.free_rank(2)), (1, 1, 0));
        let k4 = k_complex_homology(4).unwrap();
        assert_eq!((k4.free_rank(0), k4.free_rank(1), k4.free_rank(2)), (1, 4, 6));
        assert!(k_complex_homology(0).is_err());
    }

    #[test]
    fn k_complex_agrees_with_torus_up_to_degree_two() {
        for r in 1..=8 {
            let k = k_complex_homology(r).unwrap();
            let t = torus_homology(r);
            for j in 0..=2 {
                assert_eq!(k.free_rank(j), t.free_rank(j), "degree {j} for r = {r}");
            }
        }
    }

    #[test]
    fn mrg_wedge_model_example() {
        let d = mrg(3, 6, 1).unwrap();
        assert_eq!(d.dimension, 6);
        let model = d.wedge_model.as_ref().unwrap();
        let pairs: Vec<(usize, usize)> = model.iter().map(|w| (w.degree, w.count)).collect();
        assert_eq!(pairs, vec![(1, 3), (2, 3), (3, 12), (4, 3), (5, 3), (6, 1)]);
        assert_eq!(validate(&d), Vec::new());
    }

    #[test]
    fn mrg_homology_matches_k_complex_low_degrees() {
        for (r, g, k) in [(3, 6, 1), (4, 7, 1), (2, 0, 2), (5, 1, 2)] {
            let d = mrg(r, g, k).unwrap();
            let kc = k_complex_homology(r).unwrap();
            for j in 0..=2 {
                assert_eq!(d.homology.free_rank(j), kc.free_rank(j));
            }
            // duality across the middle dimension
            let n = d.dimension;
            for j in 0..=n {
                assert_eq!(d.homology.free_rank(j), d.homology.free_rank(n - j));
            }
        }
    }

    #[test]
    fn wg_example() {
        let d = wg(2, 1).unwrap();
        assert_eq!(d.dimension, 8);
        let ranks: Vec<usize> = (0..=8).map(|j| d.homology.free_rank(j)).collect();
        assert_eq!(ranks, vec![1, 0, 0, 0, 4, 0, 0, 0, 1]);
        assert_eq!(validate(&d), Vec::new());
    }

    #[test]
    fn sphere_example() {
        let d = sphere(7).unwrap();
        assert_eq!(d.homology.free_rank(0), 1);
        assert_eq!(d.homology.free_rank(7), 1);
        assert_eq!(d.homology.degrees().count(), 2);
        assert!(sphere(1).is_err());
    }

    #[test]
    fn cpn_l_class_coordinates() {
        // L_1(CP^3) = 4/3 x^2, so the cleared coordinate with c_1 = 3 is 4.
        let d = cpn(3).unwrap();
        let l = d.l_class.as_ref().unwrap();
        assert_eq!(l.get(&1).unwrap(), &vec![BigInt::from(4)]);

        // CP^4: p = (1+x^2)^5, L_2 = x^4 exactly, cleared by c_2 = 45.
        let d = cpn(4).unwrap();
        let l = d.l_class.as_ref().unwrap();
        assert_eq!(l.get(&2).unwrap(), &vec![BigInt::from(45)]);
    }

    #[test]
    fn builtin_dispatch_and_parse() {
        assert!(builtin("sphere", &[7]).is_ok());
        assert!(builtin("sphere", &[7, 2]).is_err());
        assert!(builtin("nonsense", &[1]).is_err());
        assert!(parse_builtin("mrg(3, 6, 1)").is_ok());
        assert!(parse_builtin("mrg[3]").is_err());
        assert_eq!(parse_builtin("wg(2,1)").unwrap().name, "wg(2,1)");
    }
}
