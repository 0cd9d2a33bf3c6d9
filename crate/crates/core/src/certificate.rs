use serde::Serialize;

/// One named, independently decided property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Basis indices of a counterexample.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            witness: Some(witness),
            detail: Some(detail.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            witness: None,
            detail: None,
        }
    }

    /// Pass when `first_failure` is `None`, otherwise fail with its witness.
    pub fn from_search(name: impl Into<String>, first_failure: Option<(Vec<usize>, String)>) -> Self {
        match first_failure {
            None => Check::pass(name),
            Some((w, d)) => Check::fail(name, w, d),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn new() -> Self {
        Certificate::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Certificate) {
        self.checks.extend(other.checks);
    }

    /// Appends another certificate with its check names prefixed.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Certificate) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }
}
