//! Seeded random words for fuzzing.
//!
//! The budget bounds the number of layers. The first layer has at most
//! `min(budget, 3)` pieces, so a budget of one yields a single piece, and no
//! layer is ever wider than [`MAX_WIDTH`] circles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::{Elem, FiniteGroup};

use super::{Cobordism, Piece, Signature};

pub const MAX_WIDTH: usize = 4;

fn any_piece<R: Rng>(rng: &mut R, group: &FiniteGroup) -> Piece {
    let n = group.order();
    let mut x = || rng.gen_range(0..n);
    let (g, h) = (x(), x());
    match rng.gen_range(0..7) {
        0 => Piece::Id(g),
        1 => Piece::Cyl { g, k: h },
        2 => Piece::Merge(g, h),
        3 => Piece::Split(g, h),
        4 => Piece::Cap,
        5 => Piece::Cup,
        _ => Piece::Swap(g, h),
    }
}

/// A random layer whose domain is `sig`.
fn layer_on<R: Rng>(rng: &mut R, group: &FiniteGroup, sig: &[Elem]) -> Vec<Piece> {
    let n = group.order();
    let e = group.identity();
    let mut width = sig.len();
    let mut layer = Vec::new();
    let mut i = 0;
    let can_grow = |w: usize| w < MAX_WIDTH;
    if sig.is_empty() || (can_grow(width) && rng.gen_bool(0.1)) {
        layer.push(Piece::Cap);
        width += 1;
    }
    while i < sig.len() {
        let g = sig[i];
        let mut options: Vec<u8> = vec![0, 1];
        if can_grow(width) {
            options.push(2);
        }
        if g == e && width > 1 {
            options.push(3);
        }
        if i + 1 < sig.len() {
            options.extend([4, 5]);
        }
        let piece = match *options.choose(rng).expect("nonempty") {
            0 => Piece::Id(g),
            1 => Piece::Cyl { g, k: rng.gen_range(0..n) },
            2 => {
                let x = rng.gen_range(0..n);
                width += 1;
                Piece::Split(x, group.mul(group.inv(x), g))
            }
            3 => {
                width -= 1;
                Piece::Cup
            }
            4 => {
                i += 1;
                width -= 1;
                Piece::Merge(g, sig[i])
            }
            _ => {
                i += 1;
                Piece::Swap(g, sig[i])
            }
        };
        layer.push(piece);
        i += 1;
    }
    layer
}

fn extend<R: Rng>(rng: &mut R, group: &FiniteGroup, mut sig: Signature, layers: usize) -> Vec<Vec<Piece>> {
    (0..layers)
        .map(|_| {
            let layer = layer_on(rng, group, &sig);
            sig = layer.iter().flat_map(|p| p.codomain(group)).collect();
            layer
        })
        .collect()
}

/// A type-correct word of at most `budget` layers, determined by `seed`.
pub fn random_cobordism(seed: u64, budget: usize, group: &FiniteGroup) -> Cobordism {
    let budget = budget.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let depth = rng.gen_range(1..=budget);
    let width = rng.gen_range(1..=budget.min(3));
    let mut out = 0;
    let first: Vec<Piece> = (0..width)
        .map(|_| {
            let p = any_piece(&mut rng, group);
            let w = p.codomain(group).len();
            let p = if out + w > MAX_WIDTH { Piece::Cup } else { p };
            out += p.codomain(group).len();
            p
        })
        .collect();
    let sig = first.iter().flat_map(|p| p.codomain(group)).collect();
    let mut layers = vec![first];
    layers.extend(extend(&mut rng, group, sig, depth - 1));
    Cobordism::new(group, layers).expect("generator emits typed words")
}

/// A type-correct word starting at `domain`.
pub fn random_cobordism_from(seed: u64, budget: usize, group: &FiniteGroup, domain: &[Elem]) -> Cobordism {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let depth = rng.gen_range(1..=budget.max(1));
    let layers = extend(&mut rng, group, domain.to_vec(), depth);
    Cobordism::new(group, layers).expect("generator emits typed words")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_one_is_one_piece() {
        let g = FiniteGroup::from_spec("symmetric:3").unwrap();
        for seed in 0..50 {
            assert_eq!(random_cobordism(seed, 1, &g).piece_count(), 1);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let g = FiniteGroup::from_spec("symmetric:3").unwrap();
        assert_eq!(random_cobordism(7, 8, &g), random_cobordism(7, 8, &g));
        let distinct: std::collections::HashSet<_> = (0..20).map(|s| random_cobordism(s, 8, &g)).collect();
        assert!(distinct.len() > 10);
    }

    #[test]
    fn thousand_samples_type_check() {
        let g = FiniteGroup::from_spec("symmetric:3").unwrap();
        for seed in 0..1000 {
            let c = random_cobordism(seed, 8, &g);
            c.validate(&g).unwrap();
            assert!(c.len() <= 8);
            assert!(c.layers().iter().all(|l| l.iter().flat_map(|p| p.codomain(&g)).count() <= MAX_WIDTH));
            let d = random_cobordism_from(seed, 8, &g, c.codomain());
            assert_eq!(d.domain(), c.codomain());
            c.compose(&d, &g).unwrap().validate(&g).unwrap();
        }
    }
}
