//! Finite groups given by multiplication tables.
//!
//! Elements are referred to by index internally and by name in every file
//! format. Builtin groups list the identity first and use these orderings:
//!
//! * `cyclic:n`: `a^i` at index `i`, named `e, a, a2, …`.
//! * `dihedral:n` (order `2n`): `r^i s^j` at index `i + n·j`, named
//!   `e, r, r2, …, s, rs, r2s, …`, with `s r s = r⁻¹`.
//! * `symmetric:n` (`n ≤ 5`): permutations of `1..=n` in lexicographic order
//!   of their one-line form; the identity is named `e`, every other element
//!   `p` followed by its one-line images (`p213`). Products compose right to
//!   left: `(στ)(x) = σ(τ(x))`.
//! * `quaternion8`: `1, -1, i, -i, j, -j, k, -k`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a group element.
pub type Elem = usize;

#[derive(Clone)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Elem>,
    identity: Elem,
    inverse: Vec<Elem>,
    lookup: HashMap<String, Elem>,
    spec: Option<String>,
}

/// On-disk form of a group: element names and the multiplication table by index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// Conjugacy classes, canonical (least-index) representatives and centralizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<Elem>>,
    pub representatives: Vec<Elem>,
    /// `class_of[g]` is the position of `g`'s class in `classes`.
    pub class_of: Vec<usize>,
    pub centralizers: Vec<Vec<Elem>>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || "(),;*#".contains(c))
}

impl FiniteGroup {
    /// Validates a multiplication table `table[a][b] = a·b`.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty element list".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::NotAGroup(format!("table is not {n}×{n}")));
        }
        let mut lookup = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(Error::Schema(format!("invalid element name `{name}`")));
            }
            if lookup.insert(name.clone(), i).is_some() {
                return Err(Error::Schema(format!("duplicate element name `{name}`")));
            }
        }
        if let Some((r, c)) = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .find(|&(r, c)| table[r][c] >= n)
        {
            return Err(Error::NotAGroup(format!(
                "entry ({r}, {c}) = {} is out of range",
                table[r][c]
            )));
        }
        for r in 0..n {
            if !is_permutation(table[r].iter().copied(), n) {
                return Err(Error::NotAGroup(format!("row {r} is not a permutation")));
            }
        }
        for c in 0..n {
            if !is_permutation((0..n).map(|r| table[r][c]), n) {
                return Err(Error::NotAGroup(format!("column {c} is not a permutation")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "not associative on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", names[a])))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup {
            names,
            table: table.into_iter().flatten().collect(),
            identity,
            inverse,
            lookup,
            spec: None,
        })
    }

    pub fn from_file(file: GroupFile) -> Result<Self> {
        FiniteGroup::from_table(file.names, file.table)
    }

    pub fn to_file(&self) -> GroupFile {
        let n = self.order();
        GroupFile {
            names: self.names.clone(),
            table: (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect(),
        }
    }

    /// A named builtin group; see the module docs for element orderings.
    pub fn builtin(name: &str, parameter: Option<usize>) -> Result<Self> {
        let unknown = || {
            Error::UnknownGroup(match parameter {
                Some(p) => format!("{name}:{p}"),
                None => name.to_string(),
            })
        };
        let (group, spec) = match (name, parameter) {
            ("cyclic", Some(n)) if n >= 1 => (cyclic(n), format!("cyclic:{n}")),
            ("dihedral", Some(n)) if n >= 1 => (dihedral(n), format!("dihedral:{n}")),
            ("symmetric", Some(n)) if (1..=5).contains(&n) => {
                (symmetric(n), format!("symmetric:{n}"))
            }
            ("quaternion8", None) => (quaternion8(), "quaternion8".to_string()),
            _ => return Err(unknown()),
        };
        let mut g = group.expect("builtin tables are groups");
        g.spec = Some(spec);
        Ok(g)
    }

    /// Parses `cyclic:4`, `dihedral:4`, `symmetric:3`, `quaternion8`, with an
    /// optional `builtin:` prefix.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let body = spec.strip_prefix("builtin:").unwrap_or(spec);
        match body.split_once(':') {
            Some((name, p)) => {
                let p: usize = p
                    .parse()
                    .map_err(|_| Error::UnknownGroup(spec.to_string()))?;
                FiniteGroup::builtin(name, Some(p))
            }
            None => FiniteGroup::builtin(body, None),
        }
    }

    /// The builtin spec string this group was created from, if any.
    pub fn spec(&self) -> Option<&str> {
        self.spec.as_deref()
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    /// `k g k⁻¹`
    #[inline]
    pub fn conj(&self, k: Elem, g: Elem) -> Elem {
        self.mul(self.mul(k, g), self.inv(k))
    }

    /// `b a b⁻¹ a⁻¹`
    pub fn commutator(&self, b: Elem, a: Elem) -> Elem {
        self.mul(self.conj(b, a), self.inv(a))
    }

    pub fn product(&self, elems: &[Elem]) -> Elem {
        elems.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn power(&self, g: Elem, n: i64) -> Elem {
        let base = if n < 0 { self.inv(g) } else { g };
        (0..n.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    /// The cyclic subgroup generated by `g`, in order `e, g, g², …`.
    pub fn cyclic_subgroup(&self, g: Elem) -> Vec<Elem> {
        let mut out = vec![self.identity];
        let mut x = g;
        while x != self.identity {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn name(&self, g: Elem) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<Elem> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn conjugacy(&self) -> ConjugacyData {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut class: Vec<Elem> = (0..n).map(|k| self.conj(k, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &h in &class {
                class_of[h] = classes.len();
            }
            classes.push(class);
        }
        let representatives = classes.iter().map(|c| c[0]).collect();
        let centralizers = (0..n)
            .map(|g| (0..n).filter(|&k| self.mul(k, g) == self.mul(g, k)).collect())
            .collect();
        ConjugacyData {
            classes,
            representatives,
            class_of,
            centralizers,
        }
    }
}

/// Free-function form of [`FiniteGroup::conjugacy`].
pub fn conjugacy(g: &FiniteGroup) -> ConjugacyData {
    g.conjugacy()
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.spec {
            Some(s) => write!(f, "FiniteGroup({s})"),
            None => write!(f, "FiniteGroup(order {})", self.order()),
        }
    }
}

fn is_permutation(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

fn from_mul(names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let n = names.len();
    let table = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
    FiniteGroup::from_table(names, table)
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a{i}"),
        })
        .collect();
    from_mul(names, |a, b| (a + b) % n)
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    let rot = |i: usize| match i {
        0 => String::new(),
        1 => "r".to_string(),
        _ => format!("r{i}"),
    };
    let names = (0..2 * n)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (_, 0) => rot(i),
                _ => format!("{}s", rot(i)),
            }
        })
        .collect();
    // r^i s^a · r^j s^b = r^(i + (-1)^a j) s^(a+b)
    from_mul(names, |x, y| {
        let (i, a) = (x % n, x / n);
        let (j, b) = (y % n, y / n);
        let rot = if a == 0 { (i + j) % n } else { (i + n - j) % n };
        rot + n * ((a + b) % 2)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    let perms = permutations(n);
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let names = perms
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if i == 0 {
                "e".to_string()
            } else {
                let digits: String = p.iter().map(|x| char::from(b'1' + *x as u8)).collect();
                format!("p{digits}")
            }
        })
        .collect();
    from_mul(names, |a, b| {
        let composed: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
        index[&composed]
    })
}

fn quaternion8() -> Result<FiniteGroup> {
    // index = 2·unit + sign bit, units 1, i, j, k
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    from_mul(names, |x, y| {
        let (u, su) = (x / 2, x % 2 == 1);
        let (v, sv) = (y / 2, y % 2 == 1);
        let (w, sw) = UNIT[u][v];
        2 * w + usize::from(su ^ sv ^ sw)
    })
}
