//! JSON file format for algebras.
//!
//! ```json
//! {"group": "symmetric:3" | {"names": [...], "table": [[...]]},
//!  "dims": {"e": 1, ...},
//!  "product": [{"g": "a", "h": "b", "i": 0, "j": 0, "k": 0, "value": "1"}],
//!  "action": [{"k": "a", "g": "b", "i": 0, "j": 0, "value": "1"}],
//!  "unit": ["1"], "trace": ["1"]}
//! ```
//!
//! Omitted entries and dimensions are zero. A product entry may carry an
//! optional `"target"` naming the component it lands in; it must equal `gh`
//! (for actions, `kgk⁻¹`).

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Tensor3};
use crate::group::{FiniteGroup, GroupFile};

use super::GFrobeniusAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSource {
    Builtin(String),
    Inline(GroupFile),
}

impl GroupSource {
    pub fn resolve(&self) -> Result<FiniteGroup> {
        match self {
            GroupSource::Builtin(spec) => FiniteGroup::from_spec(spec),
            GroupSource::Inline(file) => FiniteGroup::from_file(file.clone()),
        }
    }

    pub fn of(group: &FiniteGroup) -> Self {
        match group.spec() {
            Some(spec) => GroupSource::Builtin(spec.to_string()),
            None => GroupSource::Inline(group.to_file()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub g: String,
    pub h: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub k: String,
    pub g: String,
    pub i: usize,
    pub j: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub group: GroupSource,
    #[serde(default)]
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub product: Vec<ProductEntry>,
    #[serde(default)]
    pub action: Vec<ActionEntry>,
    #[serde(default)]
    pub unit: Vec<Scalar>,
    #[serde(default)]
    pub trace: Vec<Scalar>,
}

/// Parses and shape-validates an algebra document. Axioms are not checked.
pub fn load_algebra(text: &str) -> Result<GFrobeniusAlgebra> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    file.into_algebra()
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<GFrobeniusAlgebra> {
        let group = self.group.resolve()?;
        let n = group.order();
        let mut dims = vec![0; n];
        for (name, &d) in &self.dims {
            dims[group.index_of(name)?] = d;
        }
        let mut product: Vec<Tensor3> = (0..n * n)
            .map(|x| {
                let (g, h) = (x / n, x % n);
                Tensor3::zeros(dims[g], dims[h], dims[group.mul(g, h)])
            })
            .collect();
        let mut seen = HashSet::new();
        for entry in &self.product {
            let g = group.index_of(&entry.g)?;
            let h = group.index_of(&entry.h)?;
            let gh = group.mul(g, h);
            if let Some(target) = &entry.target {
                let t = group.index_of(target)?;
                if t != gh {
                    return Err(Error::Shape(format!(
                        "product entry maps A_{} ⊗ A_{} into A_{}, but the product lands in A_{}",
                        entry.g,
                        entry.h,
                        target,
                        group.name(gh)
                    )));
                }
            }
            if entry.i >= dims[g] || entry.j >= dims[h] || entry.k >= dims[gh] {
                return Err(Error::Shape(format!(
                    "product entry ({}, {}, {}) for ({}, {}) lies outside dims ({}, {}, {})",
                    entry.i, entry.j, entry.k, entry.g, entry.h, dims[g], dims[h], dims[gh]
                )));
            }
            if !seen.insert(("m", g, h, entry.i, entry.j, entry.k)) {
                return Err(Error::Schema(format!(
                    "duplicate product entry ({}, {}, {}, {}, {})",
                    entry.g, entry.h, entry.i, entry.j, entry.k
                )));
            }
            product[g * n + h][(entry.i, entry.j, entry.k)] = entry.value.clone();
        }
        let mut action: Vec<Matrix> = (0..n * n)
            .map(|x| {
                let (k, g) = (x / n, x % n);
                Matrix::zeros(dims[group.conj(k, g)], dims[g])
            })
            .collect();
        for entry in &self.action {
            let k = group.index_of(&entry.k)?;
            let g = group.index_of(&entry.g)?;
            let kg = group.conj(k, g);
            if let Some(target) = &entry.target {
                if group.index_of(target)? != kg {
                    return Err(Error::Shape(format!(
                        "action entry maps A_{} into A_{}, but α_{} lands in A_{}",
                        entry.g,
                        target,
                        entry.k,
                        group.name(kg)
                    )));
                }
            }
            if entry.i >= dims[kg] || entry.j >= dims[g] {
                return Err(Error::Shape(format!(
                    "action entry ({}, {}) for ({}, {}) lies outside ({}, {})",
                    entry.i, entry.j, entry.k, entry.g, dims[kg], dims[g]
                )));
            }
            if !seen.insert(("a", k, g, entry.i, entry.j, 0)) {
                return Err(Error::Schema(format!(
                    "duplicate action entry ({}, {}, {}, {})",
                    entry.k, entry.g, entry.i, entry.j
                )));
            }
            action[k * n + g][(entry.i, entry.j)] = entry.value.clone();
        }
        let de = dims[group.identity()];
        let pad = |mut v: Vec<Scalar>, what: &str| -> Result<Vec<Scalar>> {
            if v.len() > de {
                return Err(Error::Shape(format!(
                    "{what} has {} entries but dim A_e = {de}",
                    v.len()
                )));
            }
            v.resize(de, Scalar::zero());
            Ok(v)
        };
        let unit = pad(self.unit, "unit")?;
        let trace = pad(self.trace, "trace")?;
        GFrobeniusAlgebra::new(group, dims, product, action, unit, trace)
    }

    /// Serializes nonzero data in a deterministic order.
    pub fn from_algebra(a: &GFrobeniusAlgebra) -> Self {
        let grp = a.group();
        let dims = grp
            .elements()
            .filter(|&g| a.dim(g) > 0)
            .map(|g| (grp.name(g).to_string(), a.dim(g)))
            .collect();
        let mut product = Vec::new();
        let mut action = Vec::new();
        for g in grp.elements() {
            for h in grp.elements() {
                for ((i, j, k), value) in a.product(g, h).nonzero() {
                    product.push(ProductEntry {
                        g: grp.name(g).to_string(),
                        h: grp.name(h).to_string(),
                        i,
                        j,
                        k,
                        target: None,
                        value: value.clone(),
                    });
                }
            }
        }
        for k in grp.elements() {
            for g in grp.elements() {
                let m = a.action(k, g);
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        if !m[(i, j)].is_zero() {
                            action.push(ActionEntry {
                                k: grp.name(k).to_string(),
                                g: grp.name(g).to_string(),
                                i,
                                j,
                                target: None,
                                value: m[(i, j)].clone(),
                            });
                        }
                    }
                }
            }
        }
        AlgebraFile {
            group: GroupSource::of(grp),
            dims,
            product,
            action,
            unit: a.unit().to_vec(),
            trace: a.trace().to_vec(),
        }
    }
}

impl GFrobeniusAlgebra {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AlgebraFile::from_algebra(self)).expect("serializable")
    }
}
