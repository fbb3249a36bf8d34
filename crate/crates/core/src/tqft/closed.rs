//! Closed surfaces: the handle-operator formula, its cross-check against word
//! evaluation, and a brute-force count of flat labelings.
//!
//! Flatness convention: `∏_i b_i a_i b_i⁻¹ a_i⁻¹ = e` for holonomies
//! `(a_1, b_1, …, a_h, b_h)`, matching the grading of the handle element.

use rayon::prelude::*;

use crate::cobordism::closed_surface;
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::group::{Elem, FiniteGroup};

use super::checks::labelings;
use super::Tqft;

/// Default cap on the number of tuples an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// `H(a,b) = Σ_i α_b(e_i^a) · ξ_i^{a⁻¹} ∈ A_{bab⁻¹a⁻¹}`.
pub fn handle_element(t: &Tqft, a: Elem, b: Elem) -> Vec<Scalar> {
    let alg = t.algebra();
    let grp = alg.group();
    let (ba, ai) = (grp.conj(b, a), grp.inv(a));
    let mut out = vec![Scalar::zero(); alg.dim(grp.mul(ba, ai))];
    for i in 0..alg.dim(a) {
        let moved = alg.act(b, a, &crate::algebra::GFrobeniusAlgebra::basis_vector(alg.dim(a), i));
        let dual = t.derived().dual_vector(a, i);
        for (slot, x) in out.iter_mut().zip(alg.multiply(ba, &moved, ai, &dual)) {
            *slot += x;
        }
    }
    out
}

fn check_flat(group: &FiniteGroup, holonomies: &[Elem]) -> Result<()> {
    if holonomies.len() % 2 != 0 {
        return Err(Error::Type("holonomies come in (a, b) pairs".into()));
    }
    let total = holonomies
        .chunks(2)
        .fold(group.identity(), |acc, p| group.mul(acc, group.commutator(p[1], p[0])));
    if total != group.identity() {
        return Err(Error::FlatnessViolation(group.name(total).to_string()));
    }
    Ok(())
}

/// `ε(H(a_1,b_1) ··· H(a_h,b_h))`; genus zero gives `ε(1)`.
pub fn closed_invariant_formula(t: &Tqft, holonomies: &[Elem]) -> Result<Scalar> {
    let alg = t.algebra();
    let grp = alg.group();
    check_flat(grp, holonomies)?;
    let mut acc = alg.unit().to_vec();
    let mut grade = grp.identity();
    for p in holonomies.chunks(2) {
        let c = grp.commutator(p[1], p[0]);
        acc = alg.multiply(grade, &acc, c, &handle_element(t, p[0], p[1]));
        grade = grp.mul(grade, c);
    }
    Ok(alg.trace_of(&acc))
}

/// Evaluation of the explicit cap/split/cyl/merge/cup word.
pub fn closed_invariant_word(t: &Tqft, holonomies: &[Elem]) -> Result<Scalar> {
    check_flat(t.group(), holonomies)?;
    let word = closed_surface(t.group(), holonomies)?;
    let m = t.evaluate(&word)?.matrix;
    Ok(m[(0, 0)].clone())
}

/// The handle formula, cross-checked against word evaluation up to genus two.
pub fn closed_invariant(t: &Tqft, holonomies: &[Elem]) -> Result<Scalar> {
    let formula = closed_invariant_formula(t, holonomies)?;
    if holonomies.len() <= 4 {
        let word = closed_invariant_word(t, holonomies)?;
        if word != formula {
            return Err(Error::InvariantMismatch {
                formula: formula.to_string(),
                word: word.to_string(),
            });
        }
    }
    Ok(formula)
}

fn tuple_count(order: usize, genus: usize, budget: u128) -> Result<u128> {
    let required = (order as u128).checked_pow(2 * genus as u32).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(required)
}

/// Number of tuples in `G^{2h}` with trivial commutator product, by exhaustive
/// enumeration straight from the multiplication table.
pub fn hom_count_oracle(group: &FiniteGroup, genus: usize, budget: u128) -> Result<u128> {
    tuple_count(group.order(), genus, budget)?;
    let e = group.identity();
    let count = labelings(group.order(), 2 * genus)
        .filter(|xs| {
            let mut acc = e;
            for p in xs.chunks(2) {
                let (a, b) = (p[0], p[1]);
                for x in [b, a, group.inv(b), group.inv(a)] {
                    acc = group.mul(acc, x);
                }
            }
            acc == e
        })
        .count();
    Ok(count as u128)
}

/// `Σ` of [`closed_invariant`] over all flat labelings of genus `genus`.
pub fn partition_sum(t: &Tqft, genus: usize, budget: u128) -> Result<Scalar> {
    let grp = t.group();
    tuple_count(grp.order(), genus, budget)?;
    let all: Vec<Vec<Elem>> = labelings(grp.order(), 2 * genus).collect();
    let values: Vec<Result<Option<Scalar>>> = all
        .par_iter()
        .map(|xs| match closed_invariant(t, xs) {
            Ok(v) => Ok(Some(v)),
            Err(Error::FlatnessViolation(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect();
    let mut sum = Scalar::zero();
    for v in values {
        if let Some(v) = v? {
            sum += v;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers, group_algebra};

    #[test]
    fn oracle_small_values() {
        let s3 = FiniteGroup::from_spec("symmetric:3").unwrap();
        assert_eq!(hom_count_oracle(&s3, 0, DEFAULT_BUDGET).unwrap(), 1);
        // Σ_g |C(g)| = 6 + 3·2 + 2·3
        assert_eq!(hom_count_oracle(&s3, 1, DEFAULT_BUDGET).unwrap(), 18);
        let z2 = FiniteGroup::from_spec("cyclic:2").unwrap();
        assert_eq!(hom_count_oracle(&z2, 2, DEFAULT_BUDGET).unwrap(), 16);
        assert!(matches!(
            hom_count_oracle(&s3, 2, 100),
            Err(Error::BudgetExceeded { required: 1296, budget: 100 })
        ));
    }

    #[test]
    fn genus_zero_is_trace_of_unit() {
        let a = group_algebra(&FiniteGroup::from_spec("cyclic:3").unwrap());
        let t = Tqft::new(&a).unwrap();
        assert_eq!(closed_invariant(&t, &[]).unwrap(), Scalar::one());
    }

    #[test]
    fn commuting_pair_gives_one() {
        let g = FiniteGroup::from_spec("symmetric:3").unwrap();
        let a = group_algebra(&g);
        let t = Tqft::new(&a).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                match closed_invariant(&t, &[x, y]) {
                    Ok(v) => assert!(v.is_one()),
                    Err(Error::FlatnessViolation(_)) => assert_ne!(g.mul(x, y), g.mul(y, x)),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn dual_numbers_regression() {
        let a = dual_numbers(Scalar::zero(), Scalar::one());
        let t = Tqft::new(&a).unwrap();
        assert_eq!(handle_element(&t, 0, 0), vec![Scalar::zero(), Scalar::from_int(2)]);
        assert_eq!(closed_invariant(&t, &[0, 0]).unwrap(), Scalar::from_int(2));
        assert_eq!(closed_invariant(&t, &[0, 0, 0, 0]).unwrap(), Scalar::zero());
        assert_eq!(closed_invariant(&t, &[]).unwrap(), Scalar::zero());
    }

    #[test]
    fn odd_holonomy_list_rejected() {
        let a = group_algebra(&FiniteGroup::from_spec("cyclic:2").unwrap());
        let t = Tqft::new(&a).unwrap();
        assert!(matches!(closed_invariant(&t, &[1]), Err(Error::Type(_))));
    }
}
