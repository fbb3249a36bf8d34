//! The G-invariant subalgebra `A^G ⊂ ⊕_g A_g` as an ordinary commutative
//! Frobenius algebra, and its identification with `⊕_{g∈T} A_g^{C(g)}` for
//! a set `T` of class representatives.
//!
//! Vectors of `⊕_g A_g` are laid out by concatenating the stored bases of the
//! components in element-index order (see [`GFrobeniusAlgebra::offsets`]).

use crate::algebra::{frobenius_untwisted, GFrobeniusAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Tensor3};
use crate::group::Elem;
use crate::report::{CheckReport, Tally, Witness};

/// `A^G` on an echelonized invariant basis.
#[derive(Clone, Debug)]
pub struct OrbifoldAlgebra<'a> {
    parent: &'a GFrobeniusAlgebra,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    product: Tensor3,
    unit: Vec<Scalar>,
    trace: Vec<Scalar>,
    classes: ClassDecomposition,
}

/// `⊕_{g∈T} A_g^{C(g)}` with the change-of-basis maps to and from `A^G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDecomposition {
    pub representatives: Vec<Elem>,
    /// Basis of the source space: each vector lives in `A_g` for its representative `g`.
    pub basis: Vec<(Elem, Vec<Scalar>)>,
    /// `Ψ : ⊕_{g∈T} A_g^{C(g)} → A^G`, columns in the invariant basis.
    pub psi: Matrix,
    /// `Υ : A^G → ⊕_{g∈T} A_g^{C(g)}`, restriction to representative components.
    pub upsilon: Matrix,
}

/// `α_k` on all of `⊕_g A_g`.
fn full_action(a: &GFrobeniusAlgebra, k: Elem) -> Matrix {
    let grp = a.group();
    let offsets = a.offsets();
    let n = a.total_dim();
    let mut m = Matrix::zeros(n, n);
    for g in grp.elements() {
        let target = grp.conj(k, g);
        let block = a.action(k, g);
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                m[(offsets[target] + i, offsets[g] + j)] = block[(i, j)].clone();
            }
        }
    }
    m
}

/// Product of two arbitrary (inhomogeneous) vectors of `⊕_g A_g`.
fn full_multiply(a: &GFrobeniusAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let grp = a.group();
    let offsets = a.offsets();
    let mut out = vec![Scalar::zero(); a.total_dim()];
    for g in grp.elements() {
        let xg = &x[offsets[g]..offsets[g] + a.dim(g)];
        if xg.iter().all(Scalar::is_zero) {
            continue;
        }
        for h in grp.elements() {
            let yh = &y[offsets[h]..offsets[h] + a.dim(h)];
            if yh.iter().all(Scalar::is_zero) {
                continue;
            }
            let gh = grp.mul(g, h);
            for (i, v) in a.multiply(g, xg, h, yh).into_iter().enumerate() {
                out[offsets[gh] + i] += v;
            }
        }
    }
    out
}

/// `ε` extended by zero from `A_e` to all of `⊕_g A_g`.
fn full_trace(a: &GFrobeniusAlgebra, x: &[Scalar]) -> Scalar {
    let e = a.group().identity();
    let start = a.offsets()[e];
    a.trace_of(&x[start..start + a.dim(e)])
}

/// Basis of the image of an idempotent-like averaging operator: nonzero rows
/// of the reduced echelon form of its transpose, with their pivots.
fn image_basis(avg: &Matrix) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let (r, pivots) = avg.transpose().rref();
    let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    (basis, pivots)
}

/// Coordinates of `v` in an echelon basis, or `None` if `v` is outside its span.
fn coordinates(basis: &[Vec<Scalar>], pivots: &[usize], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let coords: Vec<Scalar> = pivots.iter().map(|&p| v[p].clone()).collect();
    let mut rebuilt = vec![Scalar::zero(); v.len()];
    for (c, b) in coords.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (slot, x) in rebuilt.iter_mut().zip(b) {
            *slot += c * x;
        }
    }
    (rebuilt == v).then_some(coords)
}

/// Basis of `A^G`: the echelonized image of `(1/|G|) Σ_k α_k`.
pub fn project_invariants(a: &GFrobeniusAlgebra) -> Vec<Vec<Scalar>> {
    let grp = a.group();
    let n = a.total_dim();
    let mut sum = Matrix::zeros(n, n);
    for k in grp.elements() {
        sum = sum.add(&full_action(a, k)).expect("square blocks");
    }
    let avg = sum.scale(&Scalar::new(1, grp.order() as i64));
    image_basis(&avg).0
}

fn class_decomposition(
    a: &GFrobeniusAlgebra,
    inv_basis: &[Vec<Scalar>],
    inv_pivots: &[usize],
) -> Result<ClassDecomposition> {
    let grp = a.group();
    let conj = grp.conjugacy();
    let offsets = a.offsets();
    let total = a.total_dim();

    // Per representative: basis of the C(g)-invariants of A_g and its pivots.
    let mut blocks: Vec<(Elem, Vec<Vec<Scalar>>, Vec<usize>)> = Vec::new();
    for &g in &conj.representatives {
        let d = a.dim(g);
        let cent = &conj.centralizers[g];
        let mut sum = Matrix::zeros(d, d);
        for &k in cent {
            sum = sum.add(a.action(k, g)).expect("centralizer preserves A_g");
        }
        let avg = sum.scale(&Scalar::new(1, cent.len() as i64));
        let (basis, pivots) = image_basis(&avg);
        blocks.push((g, basis, pivots));
    }
    let source: Vec<(Elem, Vec<Scalar>)> = blocks
        .iter()
        .flat_map(|(g, basis, _)| basis.iter().map(move |v| (*g, v.clone())))
        .collect();

    let r = inv_basis.len();
    let mut psi = Matrix::zeros(r, source.len());
    for (col, (g, v)) in source.iter().enumerate() {
        let mut image = vec![Scalar::zero(); total];
        for &h in &conj.classes[conj.class_of[*g]] {
            let k = grp
                .elements()
                .find(|&k| grp.conj(k, *g) == h)
                .expect("h is conjugate to g");
            for (i, x) in a.act(k, *g, v).into_iter().enumerate() {
                image[offsets[h] + i] += x;
            }
        }
        let coords = coordinates(inv_basis, inv_pivots, &image)
            .ok_or_else(|| Error::NotClosed(format!("Ψ image of a vector in A_{} is not invariant", grp.name(*g))))?;
        for (row, c) in coords.into_iter().enumerate() {
            psi[(row, col)] = c;
        }
    }

    let mut upsilon = Matrix::zeros(source.len(), r);
    for (col, v) in inv_basis.iter().enumerate() {
        let mut row = 0;
        for (g, basis, pivots) in &blocks {
            let component = &v[offsets[*g]..offsets[*g] + a.dim(*g)];
            let coords = coordinates(basis, pivots, component).ok_or_else(|| {
                Error::NotClosed(format!(
                    "component in A_{} is not centralizer-invariant",
                    grp.name(*g)
                ))
            })?;
            for c in coords {
                upsilon[(row, col)] = c;
                row += 1;
            }
        }
    }
    Ok(ClassDecomposition {
        representatives: conj.representatives.clone(),
        basis: source,
        psi,
        upsilon,
    })
}

/// Free-function form returning `(Ψ, Υ)`.
pub fn psi_upsilon(a: &GFrobeniusAlgebra) -> Result<(Matrix, Matrix)> {
    let basis = project_invariants(a);
    let pivots = pivots_of(&basis);
    let d = class_decomposition(a, &basis, &pivots)?;
    Ok((d.psi, d.upsilon))
}

fn pivots_of(basis: &[Vec<Scalar>]) -> Vec<usize> {
    basis
        .iter()
        .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero basis vector"))
        .collect()
}

/// Builds `A^G` with the restricted product, unit and trace.
pub fn orbifold_algebra(a: &GFrobeniusAlgebra) -> Result<OrbifoldAlgebra<'_>> {
    let basis = project_invariants(a);
    let pivots = pivots_of(&basis);
    let r = basis.len();
    let mut product = Tensor3::zeros(r, r, r);
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let xy = full_multiply(a, x, y);
            let coords = coordinates(&basis, &pivots, &xy).ok_or_else(|| {
                Error::NotClosed(format!("product of invariant basis vectors {i} and {j}"))
            })?;
            for (k, c) in coords.into_iter().enumerate() {
                product[(i, j, k)] = c;
            }
        }
    }
    let e = a.group().identity();
    let mut full_unit = vec![Scalar::zero(); a.total_dim()];
    let start = a.offsets()[e];
    for (i, u) in a.unit().iter().enumerate() {
        full_unit[start + i] = u.clone();
    }
    let unit = coordinates(&basis, &pivots, &full_unit)
        .ok_or_else(|| Error::NotClosed("unit is not invariant".into()))?;
    let trace = basis.iter().map(|v| full_trace(a, v)).collect();
    let classes = class_decomposition(a, &basis, &pivots)?;
    Ok(OrbifoldAlgebra {
        parent: a,
        basis,
        pivots,
        product,
        unit,
        trace,
        classes,
    })
}

impl<'a> OrbifoldAlgebra<'a> {
    pub fn parent(&self) -> &'a GFrobeniusAlgebra {
        self.parent
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Invariant basis vectors in `⊕_g A_g` coordinates.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn product(&self) -> &Tensor3 {
        &self.product
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn trace(&self) -> &[Scalar] {
        &self.trace
    }

    pub fn classes(&self) -> &ClassDecomposition {
        &self.classes
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let t = &self.product;
        let r = self.dim();
        let mut out = vec![Scalar::zero(); r];
        for i in 0..r {
            for j in 0..r {
                let xy = &x[i] * &y[j];
                if xy.is_zero() {
                    continue;
                }
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot += &xy * &t[(i, j, k)];
                }
            }
        }
        out
    }

    /// Gram matrix of the restricted trace pairing on the invariant basis.
    pub fn gram(&self) -> Matrix {
        let r = self.dim();
        Matrix::from_fn(r, r, |i, j| {
            (0..r)
                .map(|k| &self.product[(i, j, k)] * &self.trace[k])
                .sum()
        })
    }

    /// Certifies that `A^G` is a commutative Frobenius algebra.
    pub fn certify(&self) -> CheckReport {
        let a = self.parent;
        let r = self.dim();
        let e_vec = |i| GFrobeniusAlgebra::basis_vector(r, i);
        let fmt = |v: &[Scalar]| crate::algebra::fmt_vec(v);
        let mut report = CheckReport::new("orbifold");

        let mut invariant = Tally::new("invariance");
        for (i, v) in self.basis.iter().enumerate() {
            for k in a.group().elements() {
                let moved = full_action(a, k).apply(v).expect("square");
                invariant.check(&moved == v, || {
                    Witness::new(vec![a.group().name(k).to_string()], fmt(&moved), fmt(v))
                        .with_indices(vec![i])
                });
            }
        }
        report.push(invariant.finish());

        // closure was established at construction
        let mut closure = Tally::new("closure");
        closure.check(true, Witness::default);
        report.push(closure.finish());

        let mut comm = Tally::new("commutativity");
        let mut assoc = Tally::new("associativity");
        let mut unit = Tally::new("unit");
        for i in 0..r {
            let x = e_vec(i);
            let ux = self.multiply(&self.unit, &x);
            let xu = self.multiply(&x, &self.unit);
            unit.check(ux == x && xu == x, || {
                Witness::new(vec![], fmt(&ux), fmt(&xu)).with_indices(vec![i])
            });
            for j in 0..r {
                let y = e_vec(j);
                let xy = self.multiply(&x, &y);
                let yx = self.multiply(&y, &x);
                comm.check(xy == yx, || {
                    Witness::new(vec![], fmt(&xy), fmt(&yx)).with_indices(vec![i, j])
                });
                for k in 0..r {
                    let z = e_vec(k);
                    let left = self.multiply(&xy, &z);
                    let right = self.multiply(&x, &self.multiply(&y, &z));
                    assoc.check(left == right, || {
                        Witness::new(vec![], fmt(&left), fmt(&right)).with_indices(vec![i, j, k])
                    });
                }
            }
        }
        report.push(comm.finish());
        report.push(assoc.finish());
        report.push(unit.finish());

        let mut nondeg = Tally::new("nondegeneracy");
        let gram = self.gram();
        let det = gram.determinant().expect("square");
        nondeg.check(!det.is_zero(), || Witness::new(vec![], &gram, "invertible"));
        report.push(nondeg.finish());

        let mut iso = Tally::new("psi-upsilon-inverse");
        let c = &self.classes;
        let up = c.upsilon.mul(&c.psi).expect("shapes");
        iso.check(up.is_identity(), || Witness::new(vec![], &up, "identity").with_note("Υ∘Ψ"));
        let pu = c.psi.mul(&c.upsilon).expect("shapes");
        iso.check(pu.is_identity(), || Witness::new(vec![], &pu, "identity").with_note("Ψ∘Υ"));
        report.push(iso.finish());
        report
    }

    /// The orbifold algebra as an algebra over the trivial group.
    pub fn to_untwisted(&self) -> GFrobeniusAlgebra {
        frobenius_untwisted(
            self.dim(),
            self.product.clone(),
            self.unit.clone(),
            self.trace.clone(),
        )
        .expect("shapes agree by construction")
    }
}
