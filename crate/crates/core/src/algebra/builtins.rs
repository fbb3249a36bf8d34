use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Tensor3};
use crate::group::{Elem, FiniteGroup};

use super::GFrobeniusAlgebra;

/// The group algebra: `A_g = 𝕜·δ_g`, `δ_g δ_h = δ_gh`, `α_k(δ_g) = δ_{kgk⁻¹}`,
/// `ε(δ_e) = 1`.
pub fn group_algebra(group: &FiniteGroup) -> GFrobeniusAlgebra {
    let point = vec![vec![0]; group.order()];
    permutation_algebra(group, &point).expect("one-point action is valid")
}

/// The algebra of a finite `G`-set `X`: `A_g` is the space of functions on the
/// fixed-point set `X^g`, with basis the indicator functions `δ_x` of fixed
/// points in increasing order.
///
/// * `δ_x · δ_y = δ_x ∈ A_gh` when `x = y` (a point fixed by `g` and `h` is
///   fixed by `gh`), zero otherwise;
/// * `α_k(δ_x) = δ_{k·x}`;
/// * unit `Σ_x δ_x ∈ A_e`, trace `ε(δ_x) = 1`.
///
/// `action[g][x]` is the image of point `x` under `g`. A one-point set gives
/// the group algebra; `G` acting on itself by left multiplication gives an
/// algebra concentrated in `A_e` with a nontrivial action there.
pub fn permutation_algebra(group: &FiniteGroup, action: &[Vec<usize>]) -> Result<GFrobeniusAlgebra> {
    let n = group.order();
    if action.len() != n {
        return Err(Error::NotAnAction(format!(
            "{} permutations given for a group of order {n}",
            action.len()
        )));
    }
    let points = action[0].len();
    for (g, perm) in action.iter().enumerate() {
        let mut seen = vec![false; points];
        if perm.len() != points || perm.iter().any(|&x| x >= points || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::NotAnAction(format!(
                "image list of `{}` is not a permutation of {points} points",
                group.name(g)
            )));
        }
    }
    let e = group.identity();
    if action[e].iter().enumerate().any(|(x, &y)| x != y) {
        return Err(Error::NotAnAction("identity does not act trivially".into()));
    }
    for g in 0..n {
        for h in 0..n {
            let gh = group.mul(g, h);
            if (0..points).any(|x| action[g][action[h][x]] != action[gh][x]) {
                return Err(Error::NotAnAction(format!(
                    "`{}` then `{}` differs from their product",
                    group.name(h),
                    group.name(g)
                )));
            }
        }
    }

    let fixed: Vec<Vec<usize>> = (0..n)
        .map(|g| (0..points).filter(|&x| action[g][x] == x).collect())
        .collect();
    let position = |g: Elem, x: usize| fixed[g].iter().position(|&y| y == x);
    let dims: Vec<usize> = fixed.iter().map(Vec::len).collect();

    let mut product = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let gh = group.mul(g, h);
            let mut t = Tensor3::zeros(dims[g], dims[h], dims[gh]);
            for (i, &x) in fixed[g].iter().enumerate() {
                if let Some(j) = position(h, x) {
                    let k = position(gh, x).expect("common fixed point is fixed by the product");
                    t[(i, j, k)] = Scalar::one();
                }
            }
            product.push(t);
        }
    }
    let mut blocks = Vec::with_capacity(n * n);
    for k in 0..n {
        for g in 0..n {
            let target = group.conj(k, g);
            let mut m = Matrix::zeros(dims[target], dims[g]);
            for (j, &x) in fixed[g].iter().enumerate() {
                let i = position(target, action[k][x]).expect("k maps X^g onto X^{kgk⁻¹}");
                m[(i, j)] = Scalar::one();
            }
            blocks.push(m);
        }
    }
    let unit = vec![Scalar::one(); dims[e]];
    let trace = vec![Scalar::one(); dims[e]];
    GFrobeniusAlgebra::new(group.clone(), dims, product, blocks, unit, trace)
}

/// Embeds an ordinary Frobenius algebra as a G-Frobenius algebra over the
/// trivial group. `product` has shape `(dim, dim, dim)`.
pub fn frobenius_untwisted(
    dim: usize,
    product: Tensor3,
    unit: Vec<Scalar>,
    trace: Vec<Scalar>,
) -> Result<GFrobeniusAlgebra> {
    let group = FiniteGroup::builtin("cyclic", Some(1))?;
    GFrobeniusAlgebra::new(
        group,
        vec![dim],
        vec![product],
        vec![Matrix::identity(dim)],
        unit,
        trace,
    )
}

/// `𝕜[x]/(x²)` with basis `(1, x)` and trace values `ε(1)`, `ε(x)`.
pub fn dual_numbers(trace_one: Scalar, trace_x: Scalar) -> GFrobeniusAlgebra {
    let mut t = Tensor3::zeros(2, 2, 2);
    t[(0, 0, 0)] = Scalar::one();
    t[(0, 1, 1)] = Scalar::one();
    t[(1, 0, 1)] = Scalar::one();
    frobenius_untwisted(
        2,
        t,
        vec![Scalar::one(), Scalar::zero()],
        vec![trace_one, trace_x],
    )
    .expect("shapes are consistent")
}
