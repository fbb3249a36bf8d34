//! Evaluation of cobordism words in a G-Frobenius algebra.
//!
//! Tensor legs are flattened with the leftmost circle most significant, the
//! same convention as [`Matrix::kron`]. A layer evaluates to the Kronecker
//! product of its pieces and a word to the product of its layers.

mod checks;
mod closed;
pub mod fuzz;

use crate::algebra::{derive, swap_matrix, DerivedStructure, GFrobeniusAlgebra};
use crate::cobordism::{signature_text, Cobordism, Piece, Signature};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::group::FiniteGroup;

pub use checks::{cerf_check, cerf_check_all, dehn_invariance_check, labelings, pants_ordering_check};
pub use closed::{
    closed_invariant, closed_invariant_formula, closed_invariant_word, handle_element, hom_count_oracle,
    partition_sum, DEFAULT_BUDGET,
};

/// A linear map `⊗_i A_{g_i} → ⊗_j A_{h_j}` in the stored bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLinearMap {
    pub domain: Signature,
    pub codomain: Signature,
    pub matrix: Matrix,
}

impl BlockLinearMap {
    pub fn to_text(&self, group: &FiniteGroup) -> String {
        format!(
            "{} -> {}\n{}",
            signature_text(group, &self.domain),
            signature_text(group, &self.codomain),
            self.matrix
        )
    }
}

/// An algebra together with its derived coproducts, ready to evaluate words.
#[derive(Clone, Debug)]
pub struct Tqft<'a> {
    algebra: &'a GFrobeniusAlgebra,
    derived: DerivedStructure,
}

impl<'a> Tqft<'a> {
    /// Fails with `DegeneratePairing` when the coproduct cannot be formed.
    pub fn new(algebra: &'a GFrobeniusAlgebra) -> Result<Self> {
        Ok(Tqft {
            algebra,
            derived: derive(algebra)?,
        })
    }

    pub fn algebra(&self) -> &'a GFrobeniusAlgebra {
        self.algebra
    }

    pub fn group(&self) -> &'a FiniteGroup {
        self.algebra.group()
    }

    pub fn derived(&self) -> &DerivedStructure {
        &self.derived
    }

    pub fn signature_dim(&self, sig: &[usize]) -> usize {
        sig.iter().map(|&g| self.algebra.dim(g)).product()
    }

    pub fn piece_matrix(&self, p: &Piece) -> Matrix {
        let a = self.algebra;
        let m = match *p {
            Piece::Id(g) => Matrix::identity(a.dim(g)),
            Piece::Cyl { g, k } => a.action(k, g).clone(),
            Piece::Merge(g, h) => a.product_matrix(g, h),
            Piece::Split(g, h) => self.derived.coproduct_matrix(g, h),
            Piece::Cap => Matrix::column_vector(a.unit()),
            Piece::Cup => Matrix::row_vector(a.trace()),
            Piece::Swap(g, h) => swap_matrix(a.dim(g), a.dim(h)),
        };
        let grp = a.group();
        debug_assert_eq!(
            m.shape(),
            (self.signature_dim(&p.codomain(grp)), self.signature_dim(&p.domain(grp)))
        );
        m
    }

    pub fn layer_matrix(&self, layer: &[Piece]) -> Matrix {
        layer
            .iter()
            .map(|p| self.piece_matrix(p))
            .reduce(|acc, m| acc.kron(&m))
            .unwrap_or_else(|| Matrix::identity(1))
    }

    pub fn evaluate(&self, c: &Cobordism) -> Result<BlockLinearMap> {
        let grp = self.group();
        let labels = c.domain().iter().copied().chain(c.layers().iter().flatten().flat_map(piece_labels));
        if let Some(bad) = labels.into_iter().find(|&x| x >= grp.order()) {
            return Err(Error::Type(format!("label index {bad} is outside a group of order {}", grp.order())));
        }
        c.validate(grp)?;
        let mut m = Matrix::identity(self.signature_dim(c.domain()));
        for layer in c.layers() {
            m = self.layer_matrix(layer).mul(&m)?;
        }
        Ok(BlockLinearMap {
            domain: c.domain().to_vec(),
            codomain: c.codomain().to_vec(),
            matrix: m,
        })
    }
}

fn piece_labels(p: &Piece) -> Vec<usize> {
    match *p {
        Piece::Id(g) => vec![g],
        Piece::Cyl { g, k } => vec![g, k],
        Piece::Merge(g, h) | Piece::Split(g, h) | Piece::Swap(g, h) => vec![g, h],
        Piece::Cap | Piece::Cup => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers, group_algebra};
    use crate::cobordism::parse;
    use crate::exactlin::Scalar;

    #[test]
    fn identity_word_is_identity() {
        let a = dual_numbers(Scalar::zero(), Scalar::one());
        let t = Tqft::new(&a).unwrap();
        let m = t.evaluate(&parse("id(e)", a.group()).unwrap()).unwrap();
        assert!(m.matrix.is_identity());
        assert_eq!(m.matrix.shape(), (2, 2));
    }

    #[test]
    fn group_algebra_merge_is_one() {
        let g = FiniteGroup::from_spec("symmetric:3").unwrap();
        let a = group_algebra(&g);
        let t = Tqft::new(&a).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                let c = Cobordism::piece(&g, Piece::Merge(x, y));
                assert_eq!(t.evaluate(&c).unwrap().matrix, Matrix::from_ints(&[&[1]]));
            }
        }
    }

    #[test]
    fn z2_bubble_scalar() {
        let g = FiniteGroup::from_spec("cyclic:2").unwrap();
        let a = group_algebra(&g);
        let t = Tqft::new(&a).unwrap();
        let c = parse("cap ; split(a,a) ; merge(a,a) ; cup", &g).unwrap();
        let m = t.evaluate(&c).unwrap();
        assert_eq!(m.matrix, Matrix::from_ints(&[&[1]]));
        assert!(m.domain.is_empty() && m.codomain.is_empty());
    }

    #[test]
    fn dual_numbers_handle_operator() {
        // genus-one operator on A = k[x]/x², ε(x) = 1: 1 ↦ 2x, x ↦ 0
        let a = dual_numbers(Scalar::zero(), Scalar::one());
        let t = Tqft::new(&a).unwrap();
        let c = parse("split(e,e) ; merge(e,e)", a.group()).unwrap();
        assert_eq!(t.evaluate(&c).unwrap().matrix, Matrix::from_ints(&[&[0, 0], &[2, 0]]));
        let sphere = parse("cap ; cup", a.group()).unwrap();
        assert_eq!(t.evaluate(&sphere).unwrap().matrix, Matrix::from_ints(&[&[0]]));
    }

    #[test]
    fn foreign_labels_rejected() {
        let a = group_algebra(&FiniteGroup::from_spec("cyclic:2").unwrap());
        let t = Tqft::new(&a).unwrap();
        let s3 = FiniteGroup::from_spec("symmetric:3").unwrap();
        let c = Cobordism::piece(&s3, Piece::Id(5));
        assert!(matches!(t.evaluate(&c), Err(Error::Type(_))));
    }

    #[test]
    fn empty_word_is_scalar_one() {
        let a = group_algebra(&FiniteGroup::from_spec("cyclic:2").unwrap());
        let t = Tqft::new(&a).unwrap();
        let m = t.evaluate(&Cobordism::empty()).unwrap();
        assert_eq!(m.matrix, Matrix::identity(1));
    }
}
