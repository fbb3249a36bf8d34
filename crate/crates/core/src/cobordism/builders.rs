//! Alternative decompositions of the same labeled surface.
//!
//! Labels `1..4` below stand for the four group elements passed in; juxtaposition
//! is the group product and `1'` is the inverse of `1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

use super::{Cobordism, Piece};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CerfCase {
    /// One circle in, one out, genus one: `[1234] → [1432]`.
    OneOneOne,
    /// Two in, two out: `[12, 34] → [32, 14]`.
    TwoZeroTwo,
    /// Three in, one out: `[12, 31', 43'] → [24]`.
    ThreeZeroOne,
    /// One in, three out: the dual of [`CerfCase::ThreeZeroOne`].
    OneZeroThree,
    /// Unit and counit insertions next to a single circle labeled `g`.
    Birth,
    /// Decompositions of the unlabeled sphere.
    Sphere,
    /// `cyl(g;k) ; cyl(kgk⁻¹;l)` against `cyl(g;lk)`.
    Cylinder,
}

impl CerfCase {
    pub const ALL: [CerfCase; 7] = [
        CerfCase::OneOneOne,
        CerfCase::TwoZeroTwo,
        CerfCase::ThreeZeroOne,
        CerfCase::OneZeroThree,
        CerfCase::Birth,
        CerfCase::Sphere,
        CerfCase::Cylinder,
    ];

    pub fn label_count(self) -> usize {
        match self {
            CerfCase::OneOneOne | CerfCase::TwoZeroTwo | CerfCase::ThreeZeroOne | CerfCase::OneZeroThree => 4,
            CerfCase::Birth => 1,
            CerfCase::Sphere => 0,
            CerfCase::Cylinder => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CerfCase::OneOneOne => "111",
            CerfCase::TwoZeroTwo => "202",
            CerfCase::ThreeZeroOne => "301",
            CerfCase::OneZeroThree => "103",
            CerfCase::Birth => "birth",
            CerfCase::Sphere => "sphere",
            CerfCase::Cylinder => "cyl",
        }
    }
}

impl fmt::Display for CerfCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CerfCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CerfCase::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Schema(format!("unknown case `{s}`; expected one of 111, 202, 301, 103, birth, sphere, cyl")))
    }
}

fn words(group: &FiniteGroup, alternatives: Vec<Vec<Vec<Piece>>>) -> Result<Vec<Cobordism>> {
    alternatives.into_iter().map(|layers| Cobordism::new(group, layers)).collect()
}

/// Every alternative word for `case`; all share domain and codomain.
pub fn genus_case_builders(group: &FiniteGroup, case: CerfCase, labels: &[Elem]) -> Result<Vec<Cobordism>> {
    if labels.len() != case.label_count() {
        return Err(Error::Type(format!(
            "case {case} takes {} labels, got {}",
            case.label_count(),
            labels.len()
        )));
    }
    if let Some(&bad) = labels.iter().find(|&&x| x >= group.order()) {
        return Err(Error::UnknownElement(bad.to_string()));
    }
    let m = |xs: &[Elem]| group.product(xs);
    let inv = |x: Elem| group.inv(x);
    let e = group.identity();
    use Piece::*;
    let cyl = |g, k| Cyl { g, k };

    let alternatives = match case {
        CerfCase::OneOneOne => {
            let [g1, g2, g3, g4] = [labels[0], labels[1], labels[2], labels[3]];
            let (a, b) = (m(&[g1, g2]), m(&[g3, g4]));
            let (a2, b2) = (m(&[g2, g1]), m(&[g4, g3]));
            let (c, d) = (m(&[g4, g1]), m(&[g2, g3]));
            vec![
                vec![
                    vec![Split(a, b)],
                    vec![cyl(a, g2), cyl(b, g4)],
                    vec![Merge(a2, b2)],
                    vec![cyl(m(&[a2, b2]), inv(g2))],
                ],
                vec![
                    vec![cyl(m(&[a, b]), g4)],
                    vec![Split(c, d)],
                    vec![cyl(c, inv(g4)), cyl(d, g3)],
                    vec![Merge(m(&[g1, g4]), m(&[g3, g2]))],
                ],
            ]
        }
        CerfCase::TwoZeroTwo => {
            let [g1, g2, g3, g4] = [labels[0], labels[1], labels[2], labels[3]];
            let (i1, i3) = (inv(g1), inv(g3));
            let (x12, x34) = (m(&[g1, g2]), m(&[g3, g4]));
            let (x21, x43) = (m(&[g2, g1]), m(&[g4, g3]));
            let (x23, x41, x14, x32) = (m(&[g2, g3]), m(&[g4, g1]), m(&[g1, g4]), m(&[g3, g2]));
            let x31i = m(&[g3, i1]);
            let x1i3 = m(&[i1, g3]);
            let x3i1 = m(&[i3, g1]);
            vec![
                // vertical cut through one merged circle
                vec![
                    vec![Merge(x12, x34)],
                    vec![cyl(m(&[x12, x34]), i1)],
                    vec![Split(x23, x41)],
                    vec![cyl(x23, g3), cyl(x41, g1)],
                ],
                vec![
                    vec![cyl(x12, i1), cyl(x34, i3)],
                    vec![Merge(x21, x43)],
                    vec![cyl(m(&[x21, x43]), g3)],
                    vec![Split(x32, x14)],
                ],
                // horizontal: split the second circle first
                vec![
                    vec![Id(x12), Split(x31i, x14)],
                    vec![cyl(x12, i1), cyl(x31i, i1), Id(x14)],
                    vec![Merge(x21, x1i3), Id(x14)],
                    vec![cyl(x23, g3), Id(x14)],
                ],
                // horizontal: split the first circle first
                vec![
                    vec![cyl(x12, g2), Id(x34)],
                    vec![Split(x23, x3i1), Id(x34)],
                    vec![cyl(x23, g3), cyl(x3i1, g3), Id(x34)],
                    vec![Id(x32), Merge(m(&[g1, i3]), x34)],
                ],
            ]
        }
        CerfCase::ThreeZeroOne | CerfCase::OneZeroThree => {
            let [g1, g2, g3, g4] = [labels[0], labels[1], labels[2], labels[3]];
            let (i1, i3) = (inv(g1), inv(g3));
            let x12 = m(&[g1, g2]);
            let x31i = m(&[g3, i1]);
            let x43i = m(&[g4, i3]);
            let (x21, x23) = (m(&[g2, g1]), m(&[g2, g3]));
            let (x1i3, x3i4, x1i4) = (m(&[i1, g3]), m(&[i3, g4]), m(&[i1, g4]));
            let first = vec![cyl(x12, i1), cyl(x31i, i1), cyl(x43i, i3)];
            let three = vec![
                vec![
                    vec![Merge(x12, x31i), Id(x43i)],
                    vec![cyl(m(&[x12, x31i]), i1), cyl(x43i, i3)],
                    vec![Merge(x23, x3i4)],
                ],
                vec![
                    vec![Id(x12), Merge(x31i, x43i)],
                    vec![cyl(x12, i1), cyl(m(&[x31i, x43i]), i3)],
                    vec![Merge(x21, x1i4)],
                ],
                vec![first.clone(), vec![Id(x21), Merge(x1i3, x3i4)], vec![Merge(x21, x1i4)]],
                vec![first, vec![Merge(x21, x1i3), Id(x3i4)], vec![Merge(x23, x3i4)]],
            ];
            let built = words(group, three)?;
            return Ok(if case == CerfCase::ThreeZeroOne {
                built
            } else {
                built.iter().map(|c| c.dual(group)).collect()
            });
        }
        CerfCase::Birth => {
            let g = labels[0];
            vec![
                vec![vec![Id(g)]],
                vec![vec![Cap, Id(g)], vec![Merge(e, g)]],
                vec![vec![Id(g), Cap], vec![Merge(g, e)]],
                vec![vec![Split(e, g)], vec![Cup, Id(g)]],
                vec![vec![Split(g, e)], vec![Id(g), Cup]],
            ]
        }
        CerfCase::Sphere => vec![
            vec![vec![Cap], vec![Cup]],
            vec![vec![Cap], vec![Id(e)], vec![Cup]],
            vec![vec![Cap, Cap], vec![Merge(e, e)], vec![Cup]],
            vec![vec![Cap], vec![Split(e, e)], vec![Id(e), Cup], vec![Cup]],
        ],
        CerfCase::Cylinder => {
            let [g, k, l] = [labels[0], labels[1], labels[2]];
            vec![
                vec![vec![cyl(g, k)], vec![cyl(group.conj(k, g), l)]],
                vec![vec![cyl(g, m(&[l, k]))]],
            ]
        }
    };
    words(group, alternatives)
}

/// One handle with holonomies `(a, b)`: `[] → [bab⁻¹a⁻¹]`.
pub fn handle(group: &FiniteGroup, a: Elem, b: Elem) -> Cobordism {
    let ai = group.inv(a);
    let layers = vec![
        vec![Piece::Cap],
        vec![Piece::Split(a, ai)],
        vec![Piece::Cyl { g: a, k: b }, Piece::Id(ai)],
        vec![Piece::Merge(group.conj(b, a), ai)],
    ];
    Cobordism::new(group, layers).expect("handle types by construction")
}

/// Closed genus-`h` surface `[] → []` from `holonomies = [a_1, b_1, …]`:
/// handles side by side, merged left to right, then capped.
pub fn closed_surface(group: &FiniteGroup, holonomies: &[Elem]) -> Result<Cobordism> {
    if holonomies.len() % 2 != 0 {
        return Err(Error::Type("holonomies come in (a, b) pairs".into()));
    }
    let handles: Vec<Cobordism> = holonomies
        .chunks(2)
        .map(|p| handle(group, p[0], p[1]))
        .collect();
    let Some((first, rest)) = handles.split_first() else {
        return Cobordism::new(group, vec![vec![Piece::Cap], vec![Piece::Cup]]);
    };
    let mut word = rest.iter().fold(first.clone(), |acc, h| acc.tensor(h));
    while word.codomain().len() > 1 {
        let sig = word.codomain().to_vec();
        let mut layer = vec![Piece::Merge(sig[0], sig[1])];
        layer.extend(sig[2..].iter().map(|&g| Piece::Id(g)));
        word = word.compose(&Cobordism::new(group, vec![layer])?, group)?;
    }
    let total = word.codomain()[0];
    if total != group.identity() {
        return Err(Error::FlatnessViolation(group.name(total).to_string()));
    }
    word.compose(&Cobordism::piece(group, Piece::Cup), group)
}
