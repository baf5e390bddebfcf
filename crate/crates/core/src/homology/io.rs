//! The JSON file format for manifold descriptors.
//!
//! The document mirrors [`ManifoldDescriptor`] field by field; unknown
//! fields are rejected, matrices are row-major arrays of integers, and
//! homology torsion must already be a chain of invariant factors.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::{
    DescriptorError, DescriptorFlags, FgAbelianGroup, GradedGroup, ManifoldDescriptor, Pi1,
    WedgeSummand,
};
use crate::lattice::IntegerMatrix;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DescriptorFile {
    name: String,
    dimension: usize,
    pi1: Pi1File,
    homology: Vec<HomologyEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    wedge_model: Option<Vec<WedgeEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    classifying_map: Option<Vec<MapEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    l_class: Option<Vec<LClassEntry>>,
    flags: FlagsFile,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum Pi1File {
    Trivial,
    FreeAbelian { rank: usize },
    Other { label: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomologyEntry {
    degree: usize,
    free_rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    torsion: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WedgeEntry {
    degree: usize,
    count: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapEntry {
    degree: usize,
    matrix: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LClassEntry {
    k: usize,
    vector: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagsFile {
    stably_parallelizable: bool,
    ahss_collapses: bool,
    orientable: bool,
}

pub(super) fn to_json_string(d: &ManifoldDescriptor) -> Result<String, DescriptorError> {
    let homology = d
        .homology
        .iter()
        .map(|(degree, group)| {
            let torsion = group
                .torsion()
                .iter()
                .map(|t| {
                    t.to_u64()
                        .ok_or_else(|| DescriptorError::ValueOutOfRange(format!("torsion {t}")))
                })
                .collect::<Result<Vec<u64>, _>>()?;
            Ok(HomologyEntry {
                degree,
                free_rank: group.free_rank(),
                torsion,
            })
        })
        .collect::<Result<Vec<_>, DescriptorError>>()?;

    let wedge_model = d.wedge_model.as_ref().map(|model| {
        model
            .iter()
            .map(|w| WedgeEntry {
                degree: w.degree,
                count: w.count,
            })
            .collect()
    });

    let classifying_map = d
        .classifying_map
        .as_ref()
        .map(|maps| {
            maps.iter()
                .map(|(&degree, matrix)| {
                    let rows = matrix
                        .row_vectors()
                        .into_iter()
                        .map(|row| {
                            row.into_iter()
                                .map(|x| {
                                    x.to_i64().ok_or_else(|| {
                                        DescriptorError::ValueOutOfRange(format!(
                                            "matrix entry in degree {degree}"
                                        ))
                                    })
                                })
                                .collect::<Result<Vec<i64>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(MapEntry {
                        degree,
                        matrix: rows,
                    })
                })
                .collect::<Result<Vec<_>, DescriptorError>>()
        })
        .transpose()?;

    let l_class = d
        .l_class
        .as_ref()
        .map(|entries| {
            entries
                .iter()
                .map(|(&k, vector)| {
                    let vector = vector
                        .iter()
                        .map(|x| {
                            x.to_i64().ok_or_else(|| {
                                DescriptorError::ValueOutOfRange(format!("l_class entry for k {k}"))
                            })
                        })
                        .collect::<Result<Vec<i64>, _>>()?;
                    Ok(LClassEntry { k, vector })
                })
                .collect::<Result<Vec<_>, DescriptorError>>()
        })
        .transpose()?;

    let file = DescriptorFile {
        name: d.name.clone(),
        dimension: d.dimension,
        pi1: match &d.pi1 {
            Pi1::Trivial => Pi1File::Trivial,
            Pi1::FreeAbelian(r) => Pi1File::FreeAbelian { rank: *r },
            Pi1::Other(label) => Pi1File::Other {
                label: label.clone(),
            },
        },
        homology,
        wedge_model,
        classifying_map,
        l_class,
        flags: FlagsFile {
            stably_parallelizable: d.flags.stably_parallelizable,
            ahss_collapses: d.flags.ahss_collapses,
            orientable: d.flags.orientable,
        },
    };
    serde_json::to_string_pretty(&file).map_err(|e| DescriptorError::Json(e.to_string()))
}

pub(super) fn from_json_str(text: &str) -> Result<ManifoldDescriptor, DescriptorError> {
    let file: DescriptorFile =
        serde_json::from_str(text).map_err(|e| DescriptorError::Json(e.to_string()))?;

    let mut homology = GradedGroup::new();
    for entry in &file.homology {
        if !homology.group(entry.degree).is_trivial() {
            return Err(DescriptorError::DuplicateEntry {
                field: "homology",
                key: entry.degree,
            });
        }
        let torsion: Vec<BigUint> = entry.torsion.iter().map(|&t| BigUint::from(t)).collect();
        let group = FgAbelianGroup::from_invariant_factors(entry.free_rank, torsion)
            .map_err(|message| DescriptorError::InvalidTorsion {
                degree: entry.degree,
                message,
            })?;
        homology.set(entry.degree, group);
    }

    let wedge_model = file.wedge_model.map(|model| {
        model
            .into_iter()
            .map(|w| WedgeSummand {
                degree: w.degree,
                count: w.count,
            })
            .collect()
    });

    let classifying_map = file
        .classifying_map
        .map(|entries| {
            let mut maps = BTreeMap::new();
            for entry in entries {
                if maps.contains_key(&entry.degree) {
                    return Err(DescriptorError::DuplicateEntry {
                        field: "classifying_map",
                        key: entry.degree,
                    });
                }
                let ncols = entry.matrix.first().map_or(0, Vec::len);
                if entry.matrix.is_empty()
                    || ncols == 0
                    || entry.matrix.iter().any(|row| row.len() != ncols)
                {
                    return Err(DescriptorError::MalformedMatrix {
                        degree: entry.degree,
                    });
                }
                maps.insert(entry.degree, IntegerMatrix::from_i64_rows(&entry.matrix));
            }
            Ok(maps)
        })
        .transpose()?;

    let l_class = file
        .l_class
        .map(|entries| {
            let mut out = BTreeMap::new();
            for entry in entries {
                if out.contains_key(&entry.k) {
                    return Err(DescriptorError::DuplicateEntry {
                        field: "l_class",
                        key: entry.k,
                    });
                }
                out.insert(
                    entry.k,
                    entry.vector.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(),
                );
            }
            Ok(out)
        })
        .transpose()?;

    Ok(ManifoldDescriptor {
        name: file.name,
        dimension: file.dimension,
        pi1: match file.pi1 {
            Pi1File::Trivial => Pi1::Trivial,
            Pi1File::FreeAbelian { rank } => Pi1::FreeAbelian(rank),
            Pi1File::Other { label } => Pi1::Other(label),
        },
        homology,
        wedge_model,
        classifying_map,
        l_class,
        flags: DescriptorFlags {
            stably_parallelizable: file.flags.stably_parallelizable,
            ahss_collapses: file.flags.ahss_collapses,
            orientable: file.flags.orientable,
        },
    })
}
