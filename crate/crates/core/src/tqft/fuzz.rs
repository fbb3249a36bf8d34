//! Random-word testing of the evaluation functor.
//!
//! Each trial draws a word `c` and a continuation `d` starting at `c`'s
//! codomain, plus an unrelated word `w`, and asserts
//!
//! * type safety: the words validate and survive a print/parse round trip;
//! * `eval(c ; d) = eval(d) · eval(c)`;
//! * `eval(c ⊗ w) = eval(c) ⊗ eval(w)`;
//! * `eval(c) = eval(c')` for `c'` obtained by random local moves.
//!
//! The first failing trial (by index) is shrunk by deleting layers, then by
//! replacing labels with simpler ones, as long as the same property still fails.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cobordism::rewrite::{random_rewrite, simpler_labels};
use crate::cobordism::{parse, random_cobordism, random_cobordism_from, Cobordism, Piece};
use crate::report::{CheckReport, Tally, Witness};

use super::Tqft;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: usize,
    pub budget: usize,
    pub rewrite_steps: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            trials: 1000,
            budget: 8,
            rewrite_steps: 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    TypeSafety,
    Compose,
    Tensor,
    Rewrite,
}

impl Property {
    pub const ALL: [Property; 4] = [Property::TypeSafety, Property::Compose, Property::Tensor, Property::Rewrite];

    pub fn name(self) -> &'static str {
        match self {
            Property::TypeSafety => "type-safety",
            Property::Compose => "functoriality-compose",
            Property::Tensor => "functoriality-tensor",
            Property::Rewrite => "rewrite-equality",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub property: Property,
    pub word: String,
    pub minimized: String,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzOutcome {
    pub report: CheckReport,
    pub counterexample: Option<Counterexample>,
}

/// splitmix64 finalizer: decorrelates per-trial seeds.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

struct Trial {
    word: Cobordism,
    next: Cobordism,
    other: Cobordism,
    rewrite_seed: u64,
}

fn draw(t: &Tqft, cfg: &FuzzConfig, index: usize) -> Trial {
    let grp = t.group();
    let base = mix(cfg.seed ^ mix(index as u64));
    let word = random_cobordism(base, cfg.budget, grp);
    let next = random_cobordism_from(mix(base ^ 1), cfg.budget, grp, word.codomain());
    let other = random_cobordism(mix(base ^ 2), cfg.budget.min(3), grp);
    Trial {
        word,
        next,
        other,
        rewrite_seed: mix(base ^ 3),
    }
}

/// `None` when `property` holds for `word` (with the trial's auxiliary data).
fn violation(t: &Tqft, cfg: &FuzzConfig, property: Property, word: &Cobordism, trial: &Trial) -> Option<Witness> {
    let grp = t.group();
    let text = word.to_text(grp);
    let eval = |c: &Cobordism| t.evaluate(c).map(|m| m.matrix);
    match property {
        Property::TypeSafety => {
            if let Err(e) = word.validate(grp) {
                return Some(Witness::new(vec![], &text, e));
            }
            match parse(&text, grp) {
                Ok(back) if &back == word => None,
                Ok(back) => Some(Witness::new(vec![], &text, back.to_text(grp)).with_note("print/parse round trip")),
                Err(e) => Some(Witness::new(vec![], &text, e).with_note("print/parse round trip")),
            }
        }
        Property::Compose => {
            // `word` may have been shrunk; only glue what still fits
            let next = if trial.next.domain() == word.codomain() {
                trial.next.clone()
            } else {
                Cobordism::identity(word.codomain().to_vec())
            };
            let glued = word.compose(&next, grp).ok()?;
            let (whole, a, b) = (eval(&glued).ok()?, eval(word).ok()?, eval(&next).ok()?);
            let product = b.mul(&a).ok()?;
            (whole != product).then(|| {
                Witness::new(vec![], &whole, &product).with_note(format!("{} ; {}", text, next.to_text(grp)))
            })
        }
        Property::Tensor => {
            let joint = word.tensor(&trial.other);
            let (whole, a, b) = (eval(&joint).ok()?, eval(word).ok()?, eval(&trial.other).ok()?);
            let kron = a.kron(&b);
            (whole != kron).then(|| {
                Witness::new(vec![], &whole, &kron).with_note(format!("({}) * ({})", text, trial.other.to_text(grp)))
            })
        }
        Property::Rewrite => {
            let mut rng = ChaCha8Rng::seed_from_u64(trial.rewrite_seed);
            let moved = random_rewrite(&mut rng, grp, word, cfg.rewrite_steps);
            let (a, b) = (eval(word).ok()?, eval(&moved).ok()?);
            (a != b).then(|| Witness::new(vec![], &a, &b).with_note(format!("{} => {}", text, moved.to_text(grp))))
        }
    }
}

/// Greedy shrinking: drop layers, then simplify labels, while `fails` holds.
pub fn minimize(group: &crate::group::FiniteGroup, word: &Cobordism, fails: impl Fn(&Cobordism) -> bool) -> Cobordism {
    let mut best = word.clone();
    'outer: loop {
        for i in 0..best.len() {
            let mut layers = best.layers().to_vec();
            layers.remove(i);
            if let Ok(c) = Cobordism::new(group, layers) {
                if fails(&c) {
                    best = c;
                    continue 'outer;
                }
            }
        }
        for l in 0..best.len() {
            for i in 0..best.layers()[l].len() {
                for p in simpler_pieces(group, best.layers()[l][i]) {
                    let mut layers = best.layers().to_vec();
                    layers[l][i] = p;
                    if let Ok(c) = Cobordism::new(group, layers) {
                        if fails(&c) {
                            best = c;
                            continue 'outer;
                        }
                    }
                }
            }
        }
        return best;
    }
}

fn simpler_pieces(group: &crate::group::FiniteGroup, p: Piece) -> Vec<Piece> {
    let mut out = Vec::new();
    let dom = p.domain(group);
    if dom.len() == 1 && dom == p.codomain(group) && !matches!(p, Piece::Id(_)) {
        out.push(Piece::Id(dom[0]));
    }
    match p {
        Piece::Id(g) => out.extend(simpler_labels(group, g).map(Piece::Id)),
        Piece::Cyl { g, k } => {
            out.extend(simpler_labels(group, k).map(|k| Piece::Cyl { g, k }));
            out.extend(simpler_labels(group, g).map(|g| Piece::Cyl { g, k }));
        }
        Piece::Merge(g, h) | Piece::Split(g, h) | Piece::Swap(g, h) => {
            let rebuild = |g, h| match p {
                Piece::Merge(..) => Piece::Merge(g, h),
                Piece::Split(..) => Piece::Split(g, h),
                _ => Piece::Swap(g, h),
            };
            out.extend(simpler_labels(group, g).map(|x| rebuild(x, h)));
            out.extend(simpler_labels(group, h).map(|x| rebuild(g, x)));
        }
        Piece::Cap | Piece::Cup => {}
    }
    out
}

/// Runs `cfg.trials` trials; results are independent of thread scheduling.
pub fn fuzz(t: &Tqft, cfg: &FuzzConfig) -> FuzzOutcome {
    let results: Vec<Vec<Option<Witness>>> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let trial = draw(t, cfg, i);
            Property::ALL
                .iter()
                .map(|&p| violation(t, cfg, p, &trial.word, &trial))
                .collect()
        })
        .collect();

    let mut tallies: Vec<Tally> = Property::ALL.iter().map(|p| Tally::new(p.name())).collect();
    let mut first: Option<(usize, Property, Witness)> = None;
    for (i, row) in results.into_iter().enumerate() {
        for ((tally, w), &p) in tallies.iter_mut().zip(row).zip(Property::ALL.iter()) {
            match w {
                None => tally.check(true, Witness::default),
                Some(w) => {
                    if first.is_none() {
                        first = Some((i, p, w.clone()));
                    }
                    tally.fail(w.with_indices(vec![i]));
                }
            }
        }
    }
    let mut report = CheckReport::new("fuzz");
    for tally in tallies {
        report.push(tally.finish());
    }
    let counterexample = first.map(|(i, property, witness)| {
        let trial = draw(t, cfg, i);
        let grp = t.group();
        let small = minimize(grp, &trial.word, |c| violation(t, cfg, property, c, &trial).is_some());
        Counterexample {
            trial: i,
            property,
            word: trial.word.to_text(grp),
            minimized: small.to_text(grp),
            witness,
        }
    });
    FuzzOutcome { report, counterexample }
}
