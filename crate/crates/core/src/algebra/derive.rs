//! Structure derived from a nondegenerate trace: pairings, dual bases,
//! coproducts and Euler elements, plus the checks that relate them.

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Tensor3};
use crate::group::Elem;
use crate::report::{CheckReport, Tally, Witness};

use super::GFrobeniusAlgebra;

/// Pairing data and the coproducts derived from it.
///
/// Coproducts are stored with shape `(dim A_gh, dim A_g, dim A_h)`:
/// `Δ_{g,h}(e_p^{gh}) = Σ C[p, i, j] e_i^g ⊗ e_j^h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedStructure {
    /// Gram matrix `θ_g[i][l] = ε(e_i^g · e_l^{g⁻¹})`.
    pub pairings: Vec<Matrix>,
    /// `Φ_g : A_g → A_{g⁻¹}^*` in matrix form; the transpose of `θ_g`.
    pub phi: Vec<Matrix>,
    /// Column `i` holds the coordinates of the dual vector `ξ_i^{g⁻¹}` in
    /// the stored basis of `A_{g⁻¹}`; this is `θ_g⁻¹`.
    pub dual_bases: Vec<Matrix>,
    /// Indexed by `g·|G| + h`.
    pub coproducts: Vec<Tensor3>,
    /// `Δ_g = Σ_i e_i^g ⊗ ξ_i^{g⁻¹}` as a `dim A_g × dim A_{g⁻¹}` coefficient matrix.
    pub euler: Vec<Matrix>,
}

impl DerivedStructure {
    pub fn coproduct(&self, g: Elem, h: Elem) -> &Tensor3 {
        let n = self.pairings.len();
        &self.coproducts[g * n + h]
    }

    /// `Δ_{g,h}` as a `(dim A_g · dim A_h) × dim A_gh` matrix.
    pub fn coproduct_matrix(&self, g: Elem, h: Elem) -> Matrix {
        self.coproduct(g, h).to_matrix_first_in()
    }

    /// The vector `ξ_i^{g⁻¹}` dual to `e_i^g`.
    pub fn dual_vector(&self, g: Elem, i: usize) -> Vec<Scalar> {
        self.dual_bases[g].column(i)
    }

    pub fn euler_element(&self, g: Elem) -> &Matrix {
        &self.euler[g]
    }
}

/// `θ_g[i][l] = ε(e_i^g · e_l^{g⁻¹})`.
pub fn pairing_matrix(a: &GFrobeniusAlgebra, g: Elem) -> Matrix {
    let grp = a.group();
    let gi = grp.inv(g);
    let (dg, dgi) = (a.dim(g), a.dim(gi));
    let t = a.product(g, gi);
    Matrix::from_fn(dg, dgi, |i, l| {
        (0..a.dim(grp.identity()))
            .map(|k| &t[(i, l, k)] * &a.trace()[k])
            .sum()
    })
}

/// `Δ_{g,h}(φ) = Σ_i φ·ξ_i^{h⁻¹} ⊗ e_i^h`, the dual basis taken on the right leg.
pub fn coproduct_via_right_dual(
    a: &GFrobeniusAlgebra,
    dual_bases: &[Matrix],
    g: Elem,
    h: Elem,
) -> Tensor3 {
    let grp = a.group();
    let gh = grp.mul(g, h);
    let hi = grp.inv(h);
    let (dg, dh, dgh) = (a.dim(g), a.dim(h), a.dim(gh));
    let mut c = Tensor3::zeros(dgh, dg, dh);
    for p in 0..dgh {
        let phi = GFrobeniusAlgebra::basis_vector(dgh, p);
        for j in 0..dh {
            let left = a.multiply(gh, &phi, hi, &dual_bases[h].column(j));
            for (i, v) in left.into_iter().enumerate() {
                c[(p, i, j)] = v;
            }
        }
    }
    c
}

/// `Δ_{g,h}(φ) = Σ_i e_i^g ⊗ ξ_i^{g⁻¹}·φ`, the dual basis taken on the left leg.
pub fn coproduct_via_left_dual(
    a: &GFrobeniusAlgebra,
    dual_bases: &[Matrix],
    g: Elem,
    h: Elem,
) -> Tensor3 {
    let grp = a.group();
    let gh = grp.mul(g, h);
    let gi = grp.inv(g);
    let (dg, dh, dgh) = (a.dim(g), a.dim(h), a.dim(gh));
    let mut c = Tensor3::zeros(dgh, dg, dh);
    for p in 0..dgh {
        let phi = GFrobeniusAlgebra::basis_vector(dgh, p);
        for i in 0..dg {
            let right = a.multiply(gi, &dual_bases[g].column(i), gh, &phi);
            for (j, v) in right.into_iter().enumerate() {
                c[(p, i, j)] = v;
            }
        }
    }
    c
}

/// Computes pairings, dual bases and Euler elements, and every `Δ_{g,h}` by
/// both dual-basis formulas, failing if the two disagree anywhere.
pub fn derive(a: &GFrobeniusAlgebra) -> Result<DerivedStructure> {
    let grp = a.group();
    let n = grp.order();
    let mut pairings = Vec::with_capacity(n);
    let mut dual_bases = Vec::with_capacity(n);
    for g in grp.elements() {
        let degenerate = || Error::DegeneratePairing(grp.name(g).to_string());
        if a.dim(g) != a.dim(grp.inv(g)) {
            return Err(degenerate());
        }
        let theta = pairing_matrix(a, g);
        let dual = theta.inverse().map_err(|_| degenerate())?;
        pairings.push(theta);
        dual_bases.push(dual);
    }
    let mut coproducts = Vec::with_capacity(n * n);
    for g in grp.elements() {
        for h in grp.elements() {
            let right = coproduct_via_right_dual(a, &dual_bases, g, h);
            let left = coproduct_via_left_dual(a, &dual_bases, g, h);
            if right != left {
                return Err(Error::CoproductMismatch {
                    g: grp.name(g).to_string(),
                    h: grp.name(h).to_string(),
                });
            }
            coproducts.push(right);
        }
    }
    let phi = pairings.iter().map(Matrix::transpose).collect();
    let euler = dual_bases.iter().map(Matrix::transpose).collect();
    Ok(DerivedStructure {
        pairings,
        phi,
        dual_bases,
        coproducts,
        euler,
    })
}

fn names(a: &GFrobeniusAlgebra, elems: &[Elem]) -> Vec<String> {
    elems.iter().map(|&g| a.group().name(g).to_string()).collect()
}

/// `(m_{g,h} ⊗ 1) ∘ (1 ⊗ Δ_{h,k}) = Δ_{gh,k} ∘ m_{g,hk}` for all triples.
pub fn check_frobenius_diagram(a: &GFrobeniusAlgebra, d: &DerivedStructure) -> CheckReport {
    let grp = a.group();
    let mut tally = Tally::new("frobenius-diagram");
    for g in grp.elements() {
        for h in grp.elements() {
            let gh = grp.mul(g, h);
            for k in grp.elements() {
                let hk = grp.mul(h, k);
                let id_g = Matrix::identity(a.dim(g));
                let id_k = Matrix::identity(a.dim(k));
                let left = a
                    .product_matrix(g, h)
                    .kron(&id_k)
                    .mul(&id_g.kron(&d.coproduct_matrix(h, k)))
                    .expect("diagram shapes");
                let right = d
                    .coproduct_matrix(gh, k)
                    .mul(&a.product_matrix(g, hk))
                    .expect("diagram shapes");
                tally.check(left == right, || {
                    Witness::new(names(a, &[g, h, k]), &left, &right)
                });
            }
        }
    }
    let mut report = CheckReport::new("frobenius-diagram");
    report.push(tally.finish());
    report
}

/// `Δ_{ghg⁻¹,g} = (α_g ⊗ 1) ∘ τ ∘ Δ_{g,h}` for all pairs.
pub fn check_cocommutativity(a: &GFrobeniusAlgebra, d: &DerivedStructure) -> CheckReport {
    let grp = a.group();
    let mut tally = Tally::new("twisted-cocommutativity");
    for g in grp.elements() {
        for h in grp.elements() {
            let ghg = grp.conj(g, h);
            let left = d.coproduct_matrix(ghg, g);
            let right = a
                .action(g, h)
                .kron(&Matrix::identity(a.dim(g)))
                .mul(&swap_matrix(a.dim(g), a.dim(h)))
                .and_then(|m| m.mul(&d.coproduct_matrix(g, h)))
                .expect("cocommutativity shapes");
            tally.check(left == right, || Witness::new(names(a, &[g, h]), &left, &right));
        }
    }
    let mut report = CheckReport::new("cocommutativity");
    report.push(tally.finish());
    report
}

/// `(α_h ⊗ α_h)(Δ_g) = Δ_{hgh⁻¹}` for all pairs.
pub fn action_on_dual_basis_check(a: &GFrobeniusAlgebra, d: &DerivedStructure) -> CheckReport {
    let grp = a.group();
    let mut tally = Tally::new("euler-invariance");
    for g in grp.elements() {
        let gi = grp.inv(g);
        for h in grp.elements() {
            let moved = a
                .action(h, g)
                .mul(d.euler_element(g))
                .and_then(|m| m.mul(&a.action(h, gi).transpose()))
                .expect("euler shapes");
            let target = d.euler_element(grp.conj(h, g));
            tally.check(&moved == target, || Witness::new(names(a, &[g, h]), &moved, target));
        }
    }
    let mut report = CheckReport::new("euler-invariance");
    report.push(tally.finish());
    report
}

/// The flip `τ : A ⊗ B → B ⊗ A` for components of dimensions `da`, `db`.
pub fn swap_matrix(da: usize, db: usize) -> Matrix {
    let mut m = Matrix::zeros(da * db, da * db);
    for i in 0..da {
        for j in 0..db {
            m[(j * da + i, i * db + j)] = Scalar::one();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers, group_algebra};
    use crate::group::FiniteGroup;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn group_algebra_coproduct_is_diagonal() {
        let g = FiniteGroup::from_spec("symmetric:3").unwrap();
        let a = group_algebra(&g);
        let d = derive(&a).unwrap();
        for x in g.elements() {
            assert_eq!(d.pairings[x], Matrix::identity(1));
            assert_eq!(d.euler_element(x), &Matrix::identity(1));
            for y in g.elements() {
                assert_eq!(d.coproduct(x, y)[(0, 0, 0)], Scalar::one());
            }
        }
    }

    #[test]
    fn dual_numbers_coproduct() {
        let a = dual_numbers(s(0), s(1));
        let d = derive(&a).unwrap();
        // dual basis of (1, x) is (x, 1)
        assert_eq!(d.dual_bases[0], Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        let c = d.coproduct(0, 0);
        // Δ(1) = 1⊗x + x⊗1
        assert_eq!((c[(0, 0, 1)].clone(), c[(0, 1, 0)].clone()), (s(1), s(1)));
        assert!(c[(0, 0, 0)].is_zero() && c[(0, 1, 1)].is_zero());
        // Δ(x) = x⊗x
        assert_eq!(c[(1, 1, 1)], s(1));
        assert!(c[(1, 0, 0)].is_zero() && c[(1, 0, 1)].is_zero() && c[(1, 1, 0)].is_zero());
    }

    #[test]
    fn degenerate_pairing_is_error() {
        let a = dual_numbers(s(1), s(0));
        assert_eq!(derive(&a), Err(Error::DegeneratePairing("e".into())));
    }

    #[test]
    fn swap_matrix_flips_legs() {
        // e_1 ⊗ f_0 in A(2) ⊗ B(3) is index 3; flipped f_0 ⊗ e_1 is index 1
        let m = swap_matrix(2, 3);
        let mut v = vec![Scalar::zero(); 6];
        v[3] = Scalar::one();
        let out = m.apply(&v).unwrap();
        assert_eq!(out.iter().position(|x| x.is_one()), Some(1));
        assert!(swap_matrix(2, 3).mul(&swap_matrix(3, 2)).unwrap().is_identity());
    }

    #[test]
    fn diagram_and_cocommutativity_for_s3() {
        let a = group_algebra(&FiniteGroup::from_spec("symmetric:3").unwrap());
        let d = derive(&a).unwrap();
        let r = check_frobenius_diagram(&a, &d);
        assert!(r.passed());
        assert_eq!(r.entries[0].instances, 216);
        let r = check_cocommutativity(&a, &d);
        assert!(r.passed());
        assert_eq!(r.entries[0].instances, 36);
        assert!(action_on_dual_basis_check(&a, &d).passed());
    }

    #[test]
    fn dual_numbers_diagram_and_symmetry() {
        let a = dual_numbers(s(0), s(1));
        let d = derive(&a).unwrap();
        assert!(check_frobenius_diagram(&a, &d).passed());
        assert!(check_cocommutativity(&a, &d).passed());
    }

    #[test]
    fn mutated_coproduct_fails_diagram() {
        let g = FiniteGroup::from_spec("cyclic:2").unwrap();
        let a = group_algebra(&g).tensor_untwisted(&dual_numbers(s(0), s(1))).unwrap();
        let mut d = derive(&a).unwrap();
        // swap the input slices p = 0, 1 of Δ_{a,a}
        let t = &mut d.coproducts[3];
        for i in 0..2 {
            for j in 0..2 {
                let x = t[(0, i, j)].clone();
                t[(0, i, j)] = t[(1, i, j)].clone();
                t[(1, i, j)] = x;
            }
        }
        let r = check_frobenius_diagram(&a, &d);
        assert!(!r.passed());
        let w = r.entries[0].witness.as_ref().unwrap();
        assert_eq!(w.elements.len(), 3);
    }
}
