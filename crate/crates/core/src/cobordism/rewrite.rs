//! Local moves that replace a word by a different decomposition of the same
//! surface. Any TQFT must evaluate both sides equally.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::group::{Elem, FiniteGroup};

use super::{normalize_cylinder, Cobordism, Piece};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// Insert a layer of identities.
    IdentityLayer,
    /// Replace `cyl(g;k)` by `cyl(g;hⁿkgᵐ)`.
    DehnTwist,
    /// `cyl(g;k)` = `cyl(g;k') ; cyl(k'gk'⁻¹; kk'⁻¹)`.
    CylinderFactor,
    /// `merge(g,h)` = `swap(g,h) ; merge(h,g) ; cyl(hg;h⁻¹)`.
    PantsReorder,
    /// `split(g,h)` = `split(ghg⁻¹,g) ; cyl(ghg⁻¹;g⁻¹) * id(g) ; swap(h,g)`.
    CopantsReorder,
    /// `id(g)` = `cap * id(g) ; merge(e,g)` and mirror images.
    UnitInsertion,
    /// `id(g)` = `split(g,e) ; id(g) * cup` and mirror images.
    CounitInsertion,
    /// A layer `P * Q` becomes `P * id ; id * Q`.
    Interchange,
}

impl Move {
    pub const ALL: [Move; 8] = [
        Move::IdentityLayer,
        Move::DehnTwist,
        Move::CylinderFactor,
        Move::PantsReorder,
        Move::CopantsReorder,
        Move::UnitInsertion,
        Move::CounitInsertion,
        Move::Interchange,
    ];
}

fn ids(group: &FiniteGroup, pieces: &[Piece]) -> Vec<Piece> {
    pieces.iter().flat_map(|p| p.codomain(group)).map(Piece::Id).collect()
}

/// Replaces piece `index` of layer `layer` by the word `replacement`, which
/// must have the same boundaries as the piece.
pub fn splice(group: &FiniteGroup, c: &Cobordism, layer: usize, index: usize, replacement: &Cobordism) -> Cobordism {
    let row = &c.layers()[layer];
    let (before, rest) = row.split_at(index);
    let after = &rest[1..];
    let mut layers: Vec<Vec<Piece>> = c.layers()[..layer].to_vec();
    if replacement.is_empty() {
        let mut l = before.to_vec();
        l.extend(replacement.domain().iter().map(|&g| Piece::Id(g)));
        l.extend_from_slice(after);
        layers.push(l);
    }
    for (r, sub) in replacement.layers().iter().enumerate() {
        let mut l = if r == 0 { before.to_vec() } else { ids(group, before) };
        l.extend_from_slice(sub);
        l.extend(if r == 0 { after.to_vec() } else { ids(group, after) });
        layers.push(l);
    }
    layers.extend_from_slice(&c.layers()[layer + 1..]);
    let out = Cobordism::new(group, layers).expect("splice preserves boundaries");
    debug_assert_eq!(out.domain(), c.domain());
    out
}

/// A random local replacement for `piece`, if `mv` applies to it.
fn local<R: Rng>(rng: &mut R, group: &FiniteGroup, mv: Move, piece: Piece) -> Option<Vec<Vec<Piece>>> {
    let e = group.identity();
    let n = group.order();
    Some(match (mv, piece) {
        (Move::DehnTwist, Piece::Cyl { g, k }) => {
            let h = group.conj(k, g);
            let (a, b) = (rng.gen_range(0..3), rng.gen_range(0..3));
            let k2 = group.product(&[group.power(h, a), k, group.power(g, b)]);
            let k2 = if rng.gen_bool(0.5) { k2 } else { normalize_cylinder(group, g, k) };
            vec![vec![Piece::Cyl { g, k: k2 }]]
        }
        (Move::CylinderFactor, Piece::Cyl { g, k }) => {
            let k1 = rng.gen_range(0..n);
            vec![
                vec![Piece::Cyl { g, k: k1 }],
                vec![Piece::Cyl {
                    g: group.conj(k1, g),
                    k: group.mul(k, group.inv(k1)),
                }],
            ]
        }
        (Move::PantsReorder, Piece::Merge(g, h)) => vec![
            vec![Piece::Swap(g, h)],
            vec![Piece::Merge(h, g)],
            vec![Piece::Cyl {
                g: group.mul(h, g),
                k: group.inv(h),
            }],
        ],
        (Move::CopantsReorder, Piece::Split(g, h)) => {
            let c = group.conj(g, h);
            vec![
                vec![Piece::Split(c, g)],
                vec![Piece::Cyl { g: c, k: group.inv(g) }, Piece::Id(g)],
                vec![Piece::Swap(h, g)],
            ]
        }
        (Move::UnitInsertion, Piece::Id(g)) => {
            if rng.gen_bool(0.5) {
                vec![vec![Piece::Cap, Piece::Id(g)], vec![Piece::Merge(e, g)]]
            } else {
                vec![vec![Piece::Id(g), Piece::Cap], vec![Piece::Merge(g, e)]]
            }
        }
        (Move::CounitInsertion, Piece::Id(g)) => {
            if rng.gen_bool(0.5) {
                vec![vec![Piece::Split(e, g)], vec![Piece::Cup, Piece::Id(g)]]
            } else {
                vec![vec![Piece::Split(g, e)], vec![Piece::Id(g), Piece::Cup]]
            }
        }
        _ => return None,
    })
}

/// Applies `mv` at a random applicable site; `None` if there is none.
pub fn apply_move<R: Rng>(rng: &mut R, group: &FiniteGroup, c: &Cobordism, mv: Move) -> Option<Cobordism> {
    match mv {
        Move::IdentityLayer => {
            let at = rng.gen_range(0..=c.len());
            let sig = if at == 0 { c.domain().to_vec() } else { c.slice(group, 0, at).codomain().to_vec() };
            if sig.is_empty() {
                return None;
            }
            let mut layers = c.layers().to_vec();
            layers.insert(at, sig.into_iter().map(Piece::Id).collect());
            Some(Cobordism::new(group, layers).expect("identity layer matches"))
        }
        Move::Interchange => {
            let sites: Vec<usize> = (0..c.len()).filter(|&l| c.layers()[l].len() > 1).collect();
            let &l = sites.choose(rng)?;
            let row = &c.layers()[l];
            let cut = rng.gen_range(1..row.len());
            let (left, right) = row.split_at(cut);
            let mut top = left.to_vec();
            top.extend(right.iter().flat_map(|p| p.domain(group)).map(Piece::Id));
            let mut bottom = ids(group, left);
            bottom.extend_from_slice(right);
            let mut layers = c.layers().to_vec();
            layers.splice(l..=l, [top, bottom].into_iter().filter(|x| !x.is_empty()));
            Some(Cobordism::new(group, layers).expect("interchange preserves types"))
        }
        _ => {
            let sites: Vec<(usize, usize)> = c
                .layers()
                .iter()
                .enumerate()
                .flat_map(|(l, row)| (0..row.len()).map(move |i| (l, i)))
                .filter(|&(l, i)| {
                    matches!(
                        (mv, c.layers()[l][i]),
                        (Move::DehnTwist | Move::CylinderFactor, Piece::Cyl { .. })
                            | (Move::PantsReorder, Piece::Merge(..))
                            | (Move::CopantsReorder, Piece::Split(..))
                            | (Move::UnitInsertion | Move::CounitInsertion, Piece::Id(_))
                    )
                })
                .collect();
            let &(l, i) = sites.choose(rng)?;
            let replacement = local(rng, group, mv, c.layers()[l][i])?;
            let replacement = Cobordism::new(group, replacement).expect("local moves are typed");
            Some(splice(group, c, l, i, &replacement))
        }
    }
}

/// Applies up to `steps` random moves.
pub fn random_rewrite<R: Rng>(rng: &mut R, group: &FiniteGroup, c: &Cobordism, steps: usize) -> Cobordism {
    let mut out = c.clone();
    for _ in 0..steps {
        let mv = *Move::ALL.choose(rng).expect("nonempty");
        if let Some(next) = apply_move(rng, group, &out, mv) {
            out = next;
        }
    }
    out
}

/// Every cylinder label replaced by its Dehn-twist normal form.
pub fn dehn_normalize(group: &FiniteGroup, c: &Cobordism) -> Cobordism {
    let layers = c
        .layers()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&p| match p {
                    Piece::Cyl { g, k } => Piece::Cyl {
                        g,
                        k: normalize_cylinder(group, g, k),
                    },
                    other => other,
                })
                .collect()
        })
        .collect();
    if c.is_empty() {
        return c.clone();
    }
    Cobordism::new(group, layers).expect("normal forms keep boundaries")
}

/// Simpler labels to try during shrinking: the identity first, then others by index.
pub fn simpler_labels(group: &FiniteGroup, x: Elem) -> impl Iterator<Item = Elem> + '_ {
    std::iter::once(group.identity()).chain(0..x).filter(move |&y| y != x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobordism::random_cobordism;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn moves_preserve_boundaries() {
        let g = FiniteGroup::from_spec("symmetric:3").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..300 {
            let c = random_cobordism(seed, 6, &g);
            for mv in Move::ALL {
                if let Some(d) = apply_move(&mut rng, &g, &c, mv) {
                    d.validate(&g).unwrap();
                    assert_eq!((d.domain(), d.codomain()), (c.domain(), c.codomain()), "{mv:?}");
                }
            }
            let d = dehn_normalize(&g, &c);
            assert_eq!(d.codomain(), c.codomain());
        }
    }

    #[test]
    fn splice_into_a_wide_layer() {
        let g = FiniteGroup::from_spec("cyclic:3").unwrap();
        let c = Cobordism::new(&g, vec![vec![Piece::Id(1), Piece::Merge(1, 2), Piece::Id(2)]]).unwrap();
        let r = Cobordism::new(&g, vec![vec![Piece::Swap(1, 2)], vec![Piece::Merge(2, 1)]]).unwrap();
        let d = splice(&g, &c, 0, 1, &r);
        assert_eq!(d.to_text(&g), "id(a) * swap(a,a2) * id(a2) ; id(a) * merge(a2,a) * id(a2)");
    }
}
