use crate::exactlin::{Matrix, Scalar};
use crate::group::Elem;
use crate::report::{CheckReport, Tally, Witness};

use super::{fmt_vec, pairing_matrix, GFrobeniusAlgebra};

fn names(a: &GFrobeniusAlgebra, elems: &[Elem]) -> Vec<String> {
    elems.iter().map(|&g| a.group().name(g).to_string()).collect()
}

/// Exhaustively checks the G-Frobenius axioms over all group elements and
/// all stored basis vectors. Failures become report entries, never errors.
///
/// Entries, in order: `associativity`, `unit`, `action-identity`,
/// `action-homomorphism`, `action-automorphism`, `action-fixes-own-component`,
/// `trace-invariance`, `nondegeneracy`, `twisted-commutativity`,
/// `euler-torus`.
pub fn check_axioms(a: &GFrobeniusAlgebra) -> CheckReport {
    let mut report = CheckReport::new("axioms");
    report.push(associativity(a));
    report.push(unit_laws(a));
    report.push(action_identity(a));
    report.push(action_homomorphism(a));
    report.push(action_automorphism(a));
    report.push(action_fixes_own_component(a));
    report.push(trace_invariance(a));
    let (nondegenerate, duals) = nondegeneracy(a);
    report.push(nondegenerate);
    report.push(twisted_commutativity(a));
    report.push(euler_torus(a, duals.as_deref()));
    report
}

fn basis(d: usize) -> impl Iterator<Item = (usize, Vec<Scalar>)> {
    (0..d).map(move |i| (i, GFrobeniusAlgebra::basis_vector(d, i)))
}

fn associativity(a: &GFrobeniusAlgebra) -> crate::report::CheckEntry {
    let grp = a.group();
    let mut tally = Tally::new("associativity");
    for g in grp.elements() {
        for h in grp.elements() {
            let gh = grp.mul(g, h);
            for k in grp.elements() {
                let hk = grp.mul(h, k);
                for (i, x) in basis(a.dim(g)) {
                    for (j, y) in basis(a.dim(h)) {
                        let xy = a.multiply(g, &x, h, &y);
                        for (l, z) in basis(a.dim(k)) {
                            let left = a.multiply(gh, &xy, k, &z);
                            let right = a.multiply(g, &x, hk, &a.multiply(h, &y, k, &z));
                            tally.check(left == right, || {
                                Witness::new(names(a, &[g, h, k]), fmt_vec(&left), fmt_vec(&right))
                                    .with_indices(vec![i, j, l])
                            });
                        }
                    }
                }
            }
        }
    }
    tally.finish()
}

fn unit_laws(a: &GFrobeniusAlgebra) -> crate::report::CheckEntry {
    let grp = a.group();
    let e = grp.identity();
    let mut tally = Tally::new("unit");
    for g in grp.elements() {
        for (i, x) in basis(a.dim(g)) {
            let left = a.multiply(e, a.unit(), g, &x);
            let right = a.multiply(g, &x, e, a.unit());
            tally.check(left == x && right == x, || {
                Witness::new(names(a, &[g]), fmt_vec(&left), fmt_vec(&right))
                    .with_indices(vec![i])
                    .with_note("u·x and x·u must both equal x")
            });
        }
    }
    tally.finish()
}

fn action_identity(a: &GFrobeniusAlgebra) -> crate::report::CheckEntry {
    let grp = a.group();
    let e = grp.identity();
    let mut tally = Tally::new("action-identity");
    for g in grp.elements() {
        let m = a.action(e, g);
        tally.check(m.is_identity(), || {
            Witness::new(names(a, &[e, g]), m, Matrix::identity(a.dim(g)))
        });
    }
    tally.finish()
}

fn action_homomorphism(a: &GFrobeniusAlgebra) -> crate::report::CheckEntry {
    let grp = a.group();
    let mut tally = Tally::new("action-homomorphism");
    for k in grp.elements() {
        for l in grp.elements() {
            let kl = grp.mul(k, l);
            for g in grp.elements() {
                let lg = grp.conj(l, g);
                let composed = a.action(k, lg).mul(a.action(l, g)).expect("block shapes");
                let direct = a.action(kl, g);
                tally.check(&composed == direct, || {
                    Witness::new(names(a, &[k, l, g]), &composed, direct)
                        .with_note("α_k ∘ α_l vs α_kl on A_g")
                });
            }
        }
    }
    tally.finish()
}

fn action_automorphism(a: &GFrobeniusAlgebra) -> crate::report::CheckEntry {
    let grp = a.group();
    let e = grp.identity();
    let mut tally = Tally::new("action-automorphism");
    for k in grp.elements() {
        let mapped_unit = a.act(k, e, a.unit());
        tally.check(mapped_unit == a.unit(), || {
            Witness::new(names(a, &[k]), fmt_vec(&mapped_unit), fmt_vec(a.unit()))
                .with_note("α_k must fix the unit")
        });
        for g in grp.elements() {
            let kg = grp.conj(k, g);
            for h in grp.elements() {
                let kh = grp.conj(k, h);
                for (i, x) in basis(a.dim(g)) {
                    let ax = a.act(k, g, &x);
                    for (j, y) in basis(a.dim(h)) {
                        let left = a.act(k, grp.mul(g, h), &a.multiply(g, &x, h, &y));
                        let right = a.multiply(kg, &ax, kh, &a.act(k, h, &y));
                        tally.check(left == right, || {
                            Witness::new(names(a, &[k, g, h]), fmt_vec(&left), fmt_vec(&right))
                                .with_indices(vec![i, j])
                                .with_note("α_k(xy) vs α_k(x)α_k(y)")
                        });
                    }
                }
            }
        }
    }
    tally.finish()
}

fn action_fixes_own_component(a: &GFrobeniusAlgebra) -> crate::report::CheckEntry {
    let grp = a.group();
    let mut tally = Tally::new("action-fixes-own-component");
    for g in grp.elements() {
        let m = a.action(g, g);
        tally.check(m.is_identity(), || {
            Witness::new(names(a, &[g]), m, Matrix::identity(a.dim(g)))
                .with_note("α_g restricted to A_g must be the identity")
        });
    }
    tally.finish()
}

fn trace_invariance(a: &GFrobeniusAlgebra) -> crate::report::CheckEntry {
    let grp = a.group();
    let e = grp.identity();
    let mut tally = Tally::new("trace-invariance");
    for h in grp.elements() {
        for (i, x) in basis(a.dim(e)) {
            let left = a.trace_of(&a.act(h, e, &x));
            let right = a.trace_of(&x);
            tally.check(left == right, || {
                Witness::new(names(a, &[h]), &left, &right).with_indices(vec![i])
            });
        }
    }
    tally.finish()
}

/// Checks every `θ_g`; on success also returns the dual-basis matrices.
fn nondegeneracy(a: &GFrobeniusAlgebra) -> (crate::report::CheckEntry, Option<Vec<Matrix>>) {
    let grp = a.group();
    let mut tally = Tally::new("nondegeneracy");
    let mut duals = Vec::with_capacity(grp.order());
    for g in grp.elements() {
        let gi = grp.inv(g);
        if a.dim(g) != a.dim(gi) {
            tally.fail(
                Witness::new(names(a, &[g, gi]), a.dim(g), a.dim(gi))
                    .with_note("dim A_g ≠ dim A_{g⁻¹}"),
            );
            continue;
        }
        let theta = pairing_matrix(a, g);
        match theta.inverse() {
            Ok(inv) => {
                tally.check(true, Witness::default);
                duals.push(inv);
            }
            Err(_) => tally.fail(
                Witness::new(names(a, &[g]), &theta, "invertible").with_note("θ_g is singular"),
            ),
        }
    }
    let ok = !tally.failed();
    (tally.finish(), ok.then_some(duals))
}

fn twisted_commutativity(a: &GFrobeniusAlgebra) -> crate::report::CheckEntry {
    let grp = a.group();
    let mut tally = Tally::new("twisted-commutativity");
    for g in grp.elements() {
        for h in grp.elements() {
            let ghg = grp.conj(g, h);
            for (i, x) in basis(a.dim(g)) {
                for (j, y) in basis(a.dim(h)) {
                    let left = a.multiply(g, &x, h, &y);
                    let right = a.multiply(ghg, &a.act(g, h, &y), g, &x);
                    tally.check(left == right, || {
                        Witness::new(names(a, &[g, h]), fmt_vec(&left), fmt_vec(&right))
                            .with_indices(vec![i, j])
                            .with_note("φφ' vs α_g(φ')φ")
                    });
                }
            }
        }
    }
    tally.finish()
}

/// `Σ_i α_h(ξ_i^g) ξ_i^{g⁻¹} = Σ_i ξ_i^h α_g(ξ_i^{h⁻¹})` for all `g, h`.
fn euler_torus(a: &GFrobeniusAlgebra, duals: Option<&[Matrix]>) -> crate::report::CheckEntry {
    let grp = a.group();
    let mut tally = Tally::new("euler-torus");
    let Some(duals) = duals else {
        tally.fail(Witness::default().with_note("precondition failed: some θ_g is degenerate"));
        return tally.finish();
    };
    let handle = |g: Elem, h: Elem| -> Vec<Scalar> {
        // Σ_i α_h(e_i^g) · ξ_i^{g⁻¹}, ξ_i^{g⁻¹} = column i of duals[g]
        let gi = grp.inv(g);
        let target = grp.mul(grp.conj(h, g), gi);
        let mut acc = vec![Scalar::zero(); a.dim(target)];
        for (i, x) in basis(a.dim(g)) {
            let term = a.multiply(grp.conj(h, g), &a.act(h, g, &x), gi, &duals[g].column(i));
            for (s, t) in acc.iter_mut().zip(term) {
                *s += t;
            }
        }
        acc
    };
    for g in grp.elements() {
        for h in grp.elements() {
            let left = handle(g, h);
            // Σ_i e_i^h · α_g(ξ_i^{h⁻¹})
            let hi = grp.inv(h);
            let mut right = vec![Scalar::zero(); left.len()];
            for (i, x) in basis(a.dim(h)) {
                let term = a.multiply(h, &x, grp.conj(g, hi), &a.act(g, hi, &duals[h].column(i)));
                for (s, t) in right.iter_mut().zip(term) {
                    *s += t;
                }
            }
            tally.check(left == right, || {
                Witness::new(names(a, &[g, h]), fmt_vec(&left), fmt_vec(&right))
            });
        }
    }
    tally.finish()
}
