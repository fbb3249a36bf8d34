//! Combinatorial G-cobordisms: words of layers of elementary pieces.
//!
//! A layer is a parallel (tensor) list of pieces; layers are composed top to
//! bottom. Boundary circles are listed left to right and carry their holonomy.
//! A word with zero layers is the identity on its domain.

mod builders;
mod parse;
mod random;
pub mod rewrite;

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

pub use builders::{closed_surface, genus_case_builders, handle, CerfCase};
pub use parse::parse;
pub use random::{random_cobordism, random_cobordism_from};

/// Holonomies of the boundary circles, left to right.
pub type Signature = Vec<Elem>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Piece {
    Id(Elem),
    /// `[g] → [kgk⁻¹]`.
    Cyl { g: Elem, k: Elem },
    /// `[g, h] → [gh]`.
    Merge(Elem, Elem),
    /// `[gh] → [g, h]`.
    Split(Elem, Elem),
    /// `[] → [e]`.
    Cap,
    /// `[e] → []`.
    Cup,
    /// `[g, h] → [h, g]`.
    Swap(Elem, Elem),
}

impl Piece {
    pub fn domain(&self, group: &FiniteGroup) -> Signature {
        match *self {
            Piece::Id(g) | Piece::Cyl { g, .. } => vec![g],
            Piece::Merge(g, h) | Piece::Swap(g, h) => vec![g, h],
            Piece::Split(g, h) => vec![group.mul(g, h)],
            Piece::Cap => vec![],
            Piece::Cup => vec![group.identity()],
        }
    }

    pub fn codomain(&self, group: &FiniteGroup) -> Signature {
        match *self {
            Piece::Id(g) => vec![g],
            Piece::Cyl { g, k } => vec![group.conj(k, g)],
            Piece::Merge(g, h) => vec![group.mul(g, h)],
            Piece::Split(g, h) => vec![g, h],
            Piece::Cap => vec![group.identity()],
            Piece::Cup => vec![],
            Piece::Swap(g, h) => vec![h, g],
        }
    }

    /// The same surface read upside down.
    pub fn dual(&self, group: &FiniteGroup) -> Piece {
        match *self {
            Piece::Id(g) => Piece::Id(g),
            Piece::Cyl { g, k } => Piece::Cyl {
                g: group.conj(k, g),
                k: group.inv(k),
            },
            Piece::Merge(g, h) => Piece::Split(g, h),
            Piece::Split(g, h) => Piece::Merge(g, h),
            Piece::Cap => Piece::Cup,
            Piece::Cup => Piece::Cap,
            Piece::Swap(g, h) => Piece::Swap(h, g),
        }
    }

    pub fn to_text(&self, group: &FiniteGroup) -> String {
        let n = |x: Elem| group.name(x);
        match *self {
            Piece::Id(g) => format!("id({})", n(g)),
            Piece::Cyl { g, k } => format!("cyl({};{})", n(g), n(k)),
            Piece::Merge(g, h) => format!("merge({},{})", n(g), n(h)),
            Piece::Split(g, h) => format!("split({},{})", n(g), n(h)),
            Piece::Cap => "cap".into(),
            Piece::Cup => "cup".into(),
            Piece::Swap(g, h) => format!("swap({},{})", n(g), n(h)),
        }
    }
}

pub fn signature_text(group: &FiniteGroup, sig: &[Elem]) -> String {
    let names: Vec<&str> = sig.iter().map(|&g| group.name(g)).collect();
    format!("[{}]", names.join(", "))
}

fn layer_domain(group: &FiniteGroup, layer: &[Piece]) -> Signature {
    layer.iter().flat_map(|p| p.domain(group)).collect()
}

fn layer_codomain(group: &FiniteGroup, layer: &[Piece]) -> Signature {
    layer.iter().flat_map(|p| p.codomain(group)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cobordism {
    domain: Signature,
    codomain: Signature,
    layers: Vec<Vec<Piece>>,
}

impl Cobordism {
    /// Type-checks a nonempty word of nonempty layers.
    pub fn new(group: &FiniteGroup, layers: Vec<Vec<Piece>>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::Type("a word needs at least one layer".into()));
        }
        if let Some(i) = layers.iter().position(Vec::is_empty) {
            return Err(Error::Type(format!("layer {} has no pieces", i + 1)));
        }
        let domain = layer_domain(group, &layers[0]);
        let mut current = layer_codomain(group, &layers[0]);
        for (i, layer) in layers.iter().enumerate().skip(1) {
            let next = layer_domain(group, layer);
            if next != current {
                return Err(Error::Type(format!(
                    "layer {} produces {} but layer {} expects {}",
                    i,
                    signature_text(group, &current),
                    i + 1,
                    signature_text(group, &next)
                )));
            }
            current = layer_codomain(group, layer);
        }
        Ok(Cobordism {
            domain,
            codomain: current,
            layers,
        })
    }

    pub fn piece(group: &FiniteGroup, p: Piece) -> Self {
        Cobordism::new(group, vec![vec![p]]).expect("a single piece type-checks")
    }

    /// Zero layers: the identity on `sig`.
    pub fn identity(sig: Signature) -> Self {
        Cobordism {
            domain: sig.clone(),
            codomain: sig,
            layers: Vec::new(),
        }
    }

    pub fn empty() -> Self {
        Cobordism::identity(Vec::new())
    }

    pub fn domain(&self) -> &[Elem] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Elem] {
        &self.codomain
    }

    pub fn layers(&self) -> &[Vec<Piece>] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn piece_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Re-runs the layer-matching check; true for anything built through the API.
    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        if self.layers.is_empty() {
            return if self.domain == self.codomain {
                Ok(())
            } else {
                Err(Error::Type("identity word with different boundaries".into()))
            };
        }
        let rebuilt = Cobordism::new(group, self.layers.clone())?;
        if rebuilt.domain != self.domain || rebuilt.codomain != self.codomain {
            return Err(Error::Type("stored boundaries disagree with layers".into()));
        }
        Ok(())
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &Cobordism, group: &FiniteGroup) -> Result<Self> {
        if self.codomain != next.domain {
            return Err(Error::Type(format!(
                "cannot glue codomain {} to domain {}",
                signature_text(group, &self.codomain),
                signature_text(group, &next.domain)
            )));
        }
        let mut layers = self.layers.clone();
        layers.extend(next.layers.iter().cloned());
        Ok(Cobordism {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            layers,
        })
    }

    /// Side by side, `self` on the left. The shorter word is padded with
    /// identity layers at the bottom.
    pub fn tensor(&self, other: &Cobordism) -> Self {
        let depth = self.len().max(other.len());
        let pad = |c: &Cobordism, i: usize| -> Vec<Piece> {
            match c.layers.get(i) {
                Some(layer) => layer.clone(),
                None => c.codomain.iter().map(|&g| Piece::Id(g)).collect(),
            }
        };
        let layers = (0..depth)
            .map(|i| {
                let mut layer = pad(self, i);
                layer.extend(pad(other, i));
                layer
            })
            .filter(|layer| !layer.is_empty())
            .collect();
        let concat = |a: &[Elem], b: &[Elem]| [a, b].concat();
        Cobordism {
            domain: concat(&self.domain, &other.domain),
            codomain: concat(&self.codomain, &other.codomain),
            layers,
        }
    }

    /// The word read upside down: layers reversed, each piece dualized.
    pub fn dual(&self, group: &FiniteGroup) -> Self {
        let layers = self
            .layers
            .iter()
            .rev()
            .map(|layer| layer.iter().map(|p| p.dual(group)).collect())
            .collect();
        Cobordism {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            layers,
        }
    }

    /// Layers `range`, as a word of its own.
    pub fn slice(&self, group: &FiniteGroup, start: usize, end: usize) -> Self {
        if start == end {
            let sig = if start == 0 {
                self.domain.clone()
            } else {
                layer_codomain(group, &self.layers[start - 1])
            };
            return Cobordism::identity(sig);
        }
        Cobordism::new(group, self.layers[start..end].to_vec()).expect("a slice of a typed word is typed")
    }

    /// DSL text; `parse(to_text(c)) == c` for every word with at least one layer.
    pub fn to_text(&self, group: &FiniteGroup) -> String {
        let mut out = String::new();
        for (i, layer) in self.layers.iter().enumerate() {
            if i > 0 {
                out.push_str(" ; ");
            }
            for (j, p) in layer.iter().enumerate() {
                if j > 0 {
                    out.push_str(" * ");
                }
                let _ = write!(out, "{}", p.to_text(group));
            }
        }
        out
    }
}

/// Least-index element of the double coset `⟨kgk⁻¹⟩·k·⟨g⟩`: the Dehn-twist
/// normal form of the cylinder label `k`.
pub fn normalize_cylinder(group: &FiniteGroup, g: Elem, k: Elem) -> Elem {
    let h = group.conj(k, g);
    let mut best = k;
    for &x in &group.cyclic_subgroup(h) {
        for &y in &group.cyclic_subgroup(g) {
            best = best.min(group.product(&[x, k, y]));
        }
    }
    best
}
