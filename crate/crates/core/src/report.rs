use serde::{Deserialize, Serialize};

/// The first counterexample found by a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Witness {
    /// Group elements involved, by name.
    pub elements: Vec<String>,
    /// Basis indices involved.
    pub indices: Vec<usize>,
    pub left: String,
    pub right: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn new(elements: Vec<String>, left: impl ToString, right: impl ToString) -> Self {
        Witness {
            elements,
            indices: Vec::new(),
            left: left.to_string(),
            right: right.to_string(),
            note: None,
        }
    }

    pub fn with_indices(mut self, indices: Vec<usize>) -> Self {
        self.indices = indices;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// One named check: how many instances were examined and, on failure, the
/// first witness. An entry passes iff it carries no witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub instances: usize,
    pub witness: Option<Witness>,
}

impl CheckEntry {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CheckReport {
    pub title: String,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn entry(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }
}

/// Accumulates instances for a single named check, keeping the first failure.
#[derive(Debug)]
pub struct Tally {
    name: String,
    instances: usize,
    witness: Option<Witness>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            instances: 0,
            witness: None,
        }
    }

    /// Records one instance. The witness closure runs only for the first failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn fail(&mut self, witness: Witness) {
        self.check(false, || witness);
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn finish(self) -> CheckEntry {
        CheckEntry {
            name: self.name,
            instances: self.instances,
            witness: self.witness,
        }
    }
}
