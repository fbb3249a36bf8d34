use rayon::prelude::*;

use crate::algebra::{swap_matrix, GFrobeniusAlgebra};
use crate::cobordism::{genus_case_builders, normalize_cylinder, CerfCase, Cobordism, Piece};
use crate::error::Result;
use crate::exactlin::Matrix;
use crate::group::{Elem, FiniteGroup};
use crate::report::{CheckReport, Tally, Witness};

use super::Tqft;

fn names(group: &FiniteGroup, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| group.name(x).to_string()).collect()
}

fn cylinder(t: &Tqft, g: Elem, k: Elem) -> Matrix {
    t.piece_matrix(&Piece::Cyl { g, k })
}

/// `cyl(g; hⁿkgᵐ)` against `cyl(g; k)` for `n, m ∈ {0,1,2}`, `cyl(g;g)` against
/// the identity, and every cylinder against its Dehn normal form.
pub fn dehn_invariance_check(t: &Tqft) -> CheckReport {
    let grp = t.group();
    let mut twist = Tally::new("dehn-twist");
    let mut own = Tally::new("cylinder-self-identity");
    let mut normal = Tally::new("dehn-normal-form");
    for g in grp.elements() {
        let own_cyl = cylinder(t, g, g);
        own.check(own_cyl.is_identity(), || {
            Witness::new(names(grp, &[g]), &own_cyl, "identity")
        });
        for k in grp.elements() {
            let base = cylinder(t, g, k);
            let h = grp.conj(k, g);
            for n in 0..3 {
                for m in 0..3 {
                    let k2 = grp.product(&[grp.power(h, n), k, grp.power(g, m)]);
                    let moved = cylinder(t, g, k2);
                    twist.check(moved == base, || {
                        Witness::new(names(grp, &[g, k, k2]), &moved, &base)
                            .with_indices(vec![n as usize, m as usize])
                            .with_note("cyl(g;hⁿkgᵐ) vs cyl(g;k)")
                    });
                }
            }
            let nf = normalize_cylinder(grp, g, k);
            let canon = cylinder(t, g, nf);
            normal.check(canon == base, || Witness::new(names(grp, &[g, k, nf]), &canon, &base));
        }
    }
    let mut report = CheckReport::new("dehn-invariance");
    report.push(twist.finish());
    report.push(own.finish());
    report.push(normal.finish());
    report
}

/// `m_{h,g}(ψ₂ ⊗ ψ₁) = α_h(m_{g,h}(ψ₁ ⊗ ψ₂))` on every pair of basis vectors.
pub fn pants_ordering_check(a: &GFrobeniusAlgebra) -> CheckReport {
    let grp = a.group();
    let mut tally = Tally::new("pants-ordering");
    for g in grp.elements() {
        for h in grp.elements() {
            let (dg, dh) = (a.dim(g), a.dim(h));
            let left = a.product_matrix(h, g).mul(&swap_matrix(dg, dh)).expect("shapes");
            let right = a.action(h, grp.mul(g, h)).mul(&a.product_matrix(g, h)).expect("shapes");
            for i in 0..dg {
                for j in 0..dh {
                    let col = i * dh + j;
                    let (l, r) = (left.column(col), right.column(col));
                    tally.check(l == r, || {
                        Witness::new(
                            names(grp, &[g, h]),
                            crate::algebra::fmt_vec(&l),
                            crate::algebra::fmt_vec(&r),
                        )
                        .with_indices(vec![i, j])
                    });
                }
            }
        }
    }
    let mut report = CheckReport::new("pants-ordering");
    report.push(tally.finish());
    report
}

/// Pairs `(j, witness)` for every alternative `j` that disagrees with the first.
fn compare(t: &Tqft, alts: &[Cobordism], labels: &[Elem]) -> Result<Vec<(usize, Option<Witness>)>> {
    let grp = t.group();
    let first = t.evaluate(&alts[0])?.matrix;
    alts.iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| {
            let m = t.evaluate(c)?.matrix;
            Ok((
                j,
                (m != first).then(|| {
                    Witness::new(names(grp, labels), &first, &m)
                        .with_indices(vec![0, j])
                        .with_note(format!("{} vs {}", alts[0].to_text(grp), c.to_text(grp)))
                }),
            ))
        })
        .collect()
}

fn case_entry_name(case: CerfCase) -> String {
    format!("cerf-{}", case.name())
}

/// All alternatives of `case` at one labeling must evaluate equally.
pub fn cerf_check(t: &Tqft, case: CerfCase, labels: &[Elem]) -> Result<CheckReport> {
    let alts = genus_case_builders(t.group(), case, labels)?;
    let mut tally = Tally::new(case_entry_name(case));
    for (_, w) in compare(t, &alts, labels)? {
        match w {
            None => tally.check(true, Witness::default),
            Some(w) => tally.fail(w),
        }
    }
    let mut report = CheckReport::new("cerf");
    report.push(tally.finish());
    Ok(report)
}

/// All `|G|^k` labelings, in lexicographic order of element indices.
pub fn labelings(order: usize, k: usize) -> impl Iterator<Item = Vec<Elem>> + Clone {
    let total = order.pow(k as u32);
    (0..total).map(move |mut x| {
        let mut out = vec![0; k];
        for slot in out.iter_mut().rev() {
            *slot = x % order;
            x /= order;
        }
        out
    })
}

/// [`cerf_check`] over every labeling. Labelings are evaluated in parallel and
/// merged in lexicographic order, so the first reported witness is deterministic.
pub fn cerf_check_all(t: &Tqft, case: CerfCase) -> Result<CheckReport> {
    let all: Vec<Vec<Elem>> = labelings(t.group().order(), case.label_count()).collect();
    let results: Vec<Result<Vec<(usize, Option<Witness>)>>> = all
        .par_iter()
        .map(|labels| {
            let alts = genus_case_builders(t.group(), case, labels)?;
            compare(t, &alts, labels)
        })
        .collect();
    let mut tally = Tally::new(case_entry_name(case));
    for r in results {
        for (_, w) in r? {
            match w {
                None => tally.check(true, Witness::default),
                Some(w) => tally.fail(w),
            }
        }
    }
    let mut report = CheckReport::new("cerf");
    report.push(tally.finish());
    Ok(report)
}
