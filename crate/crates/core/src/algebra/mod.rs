//! G-Frobenius algebras `A = ⊕_g A_g`.
//!
//! Every homogeneous component `A_g` carries a stored basis `e_0^g, e_1^g, …`.
//! Structure data is held blockwise so that the grading is structural:
//!
//! * `product(g, h)` has shape `(dim A_g, dim A_h, dim A_gh)` and gives
//!   `e_i^g · e_j^h = Σ_k T[i, j, k] e_k^{gh}`;
//! * `action(k, g)` has shape `(dim A_{kgk⁻¹}, dim A_g)` and gives
//!   `α_k(e_j^g) = Σ_i M[i, j] e_i^{kgk⁻¹}`;
//! * the unit is a vector in `A_e` and the trace a covector on `A_e`.

mod builtins;
mod check;
mod derive;
mod io;

pub use builtins::{dual_numbers, frobenius_untwisted, group_algebra, permutation_algebra};
pub use check::check_axioms;
pub use derive::{
    action_on_dual_basis_check, check_cocommutativity, check_frobenius_diagram,
    coproduct_via_left_dual, coproduct_via_right_dual, derive, pairing_matrix, swap_matrix,
    DerivedStructure,
};
pub use io::{load_algebra, AlgebraFile, GroupSource};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Tensor3};
use crate::group::{Elem, FiniteGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFrobeniusAlgebra {
    group: FiniteGroup,
    dims: Vec<usize>,
    product: Vec<Tensor3>,
    action: Vec<Matrix>,
    unit: Vec<Scalar>,
    trace: Vec<Scalar>,
}

impl GFrobeniusAlgebra {
    /// Assembles an algebra from blockwise data, validating every block shape
    /// against the grading. Axioms are not checked here.
    ///
    /// `product` is indexed by `g·|G| + h`, `action` by `k·|G| + g`.
    pub fn new(
        group: FiniteGroup,
        dims: Vec<usize>,
        product: Vec<Tensor3>,
        action: Vec<Matrix>,
        unit: Vec<Scalar>,
        trace: Vec<Scalar>,
    ) -> Result<Self> {
        let n = group.order();
        if dims.len() != n {
            return Err(Error::Shape(format!(
                "{} dimensions given for a group of order {n}",
                dims.len()
            )));
        }
        if product.len() != n * n || action.len() != n * n {
            return Err(Error::Shape("expected one block per pair of elements".into()));
        }
        for g in 0..n {
            for h in 0..n {
                let expected = [dims[g], dims[h], dims[group.mul(g, h)]];
                if product[g * n + h].dims() != expected {
                    return Err(Error::Shape(format!(
                        "product block ({}, {}) has shape {:?}, expected {:?}",
                        group.name(g),
                        group.name(h),
                        product[g * n + h].dims(),
                        expected
                    )));
                }
                let expected = (dims[group.conj(g, h)], dims[h]);
                if action[g * n + h].shape() != expected {
                    return Err(Error::Shape(format!(
                        "action block ({}, {}) has shape {:?}, expected {:?}",
                        group.name(g),
                        group.name(h),
                        action[g * n + h].shape(),
                        expected
                    )));
                }
            }
        }
        let de = dims[group.identity()];
        if unit.len() != de || trace.len() != de {
            return Err(Error::Shape(format!(
                "unit and trace must have length dim A_e = {de}"
            )));
        }
        Ok(GFrobeniusAlgebra {
            group,
            dims,
            product,
            action,
            unit,
            trace,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, g: Elem) -> usize {
        self.dims[g]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Start of each component in the concatenated basis of `⊕_g A_g`.
    pub fn offsets(&self) -> Vec<usize> {
        self.dims
            .iter()
            .scan(0, |acc, &d| {
                let start = *acc;
                *acc += d;
                Some(start)
            })
            .collect()
    }

    pub fn product(&self, g: Elem, h: Elem) -> &Tensor3 {
        &self.product[g * self.group.order() + h]
    }

    pub fn action(&self, k: Elem, g: Elem) -> &Matrix {
        &self.action[k * self.group.order() + g]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn trace(&self) -> &[Scalar] {
        &self.trace
    }

    /// Product of `x ∈ A_g` and `y ∈ A_h`, as coordinates in `A_gh`.
    pub fn multiply(&self, g: Elem, x: &[Scalar], h: Elem, y: &[Scalar]) -> Vec<Scalar> {
        let t = self.product(g, h);
        let [dg, dh, dgh] = t.dims();
        debug_assert!(x.len() == dg && y.len() == dh);
        let mut out = vec![Scalar::zero(); dgh];
        for i in 0..dg {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..dh {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = &t[(i, j, k)];
                    if !c.is_zero() {
                        *slot += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// `α_k(x)` for `x ∈ A_g`, as coordinates in `A_{kgk⁻¹}`.
    pub fn act(&self, k: Elem, g: Elem, x: &[Scalar]) -> Vec<Scalar> {
        self.action(k, g).apply(x).expect("action block shape")
    }

    /// `ε(x)` for `x ∈ A_e`.
    pub fn trace_of(&self, x: &[Scalar]) -> Scalar {
        x.iter().zip(&self.trace).map(|(a, b)| a * b).sum()
    }

    /// `m_{g,h}` as a `dim A_gh × (dim A_g · dim A_h)` matrix.
    pub fn product_matrix(&self, g: Elem, h: Elem) -> Matrix {
        self.product(g, h).to_matrix_last_out()
    }

    /// Basis vector `e_i` of a `d`-dimensional component.
    pub fn basis_vector(d: usize, i: usize) -> Vec<Scalar> {
        (0..d)
            .map(|x| if x == i { Scalar::one() } else { Scalar::zero() })
            .collect()
    }

    pub fn set_product_entry(
        &mut self,
        g: Elem,
        h: Elem,
        (i, j, k): (usize, usize, usize),
        value: Scalar,
    ) {
        let n = self.group.order();
        self.product[g * n + h][(i, j, k)] = value;
    }

    pub fn set_action_entry(&mut self, k: Elem, g: Elem, (i, j): (usize, usize), value: Scalar) {
        let n = self.group.order();
        self.action[k * n + g][(i, j)] = value;
    }

    pub fn set_unit_entry(&mut self, i: usize, value: Scalar) {
        self.unit[i] = value;
    }

    pub fn set_trace_entry(&mut self, i: usize, value: Scalar) {
        self.trace[i] = value;
    }

    /// `A ⊗ B` for an ordinary commutative Frobenius algebra `B` (trivial
    /// group): components `A_g ⊗ B`, action on the first factor, trace
    /// `ε_A ⊗ ε_B`. The basis of `A_g ⊗ B` is `e_i ⊗ b_p` at index
    /// `i · dim B + p`.
    pub fn tensor_untwisted(&self, b: &GFrobeniusAlgebra) -> Result<GFrobeniusAlgebra> {
        if b.group.order() != 1 {
            return Err(Error::Shape("second factor must be over the trivial group".into()));
        }
        let n = self.group.order();
        let db = b.dim(0);
        let bt = b.product(0, 0);
        let dims: Vec<usize> = self.dims.iter().map(|d| d * db).collect();
        let mut product = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                let t = self.product(g, h);
                let [dg, dh, dgh] = t.dims();
                product.push(Tensor3::from_fn(dg * db, dh * db, dgh * db, |x, y, z| {
                    &t[(x / db, y / db, z / db)] * &bt[(x % db, y % db, z % db)]
                }));
            }
        }
        let id_b = Matrix::identity(db);
        let action = self.action.iter().map(|m| m.kron(&id_b)).collect();
        let unit = self
            .unit
            .iter()
            .flat_map(|x| b.unit.iter().map(move |y| x * y))
            .collect();
        let trace = self
            .trace
            .iter()
            .flat_map(|x| b.trace.iter().map(move |y| x * y))
            .collect();
        GFrobeniusAlgebra::new(self.group.clone(), dims, product, action, unit, trace)
    }
}

pub(crate) fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(" "))
}
