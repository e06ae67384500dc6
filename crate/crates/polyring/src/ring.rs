use std::fmt;
use std::sync::Arc;

/// An ordered list of variable names. The listed order is the default
/// priority used by term orders built from the roster.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Roster {
    names: Vec<String>,
}

impl Roster {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Arc<Roster> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            assert!(seen.insert(n.clone()), "duplicate variable `{n}` in roster");
        }
        Arc::new(Roster { names })
    }

    pub fn parse(spec: &str) -> Arc<Roster> {
        Roster::new(spec.split(',').map(|s| s.trim().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Roster extended by fresh auxiliary variables (appended last).
    pub fn extend<S: Into<String>>(&self, extra: Vec<S>) -> Arc<Roster> {
        let mut names = self.names.clone();
        names.extend(extra.into_iter().map(Into::into));
        Roster::new(names)
    }

    /// Roster with the given indices removed.
    pub fn without(&self, drop: &[usize]) -> Arc<Roster> {
        let names: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, n)| n.clone())
            .collect();
        Roster::new(names)
    }

    /// Picks an auxiliary variable name not already present.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        for k in 0.. {
            let cand = format!("{stem}{k}");
            if self.index_of(&cand).is_none() {
                return cand;
            }
        }
        unreachable!()
    }
}

impl fmt::Display for Roster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}

pub(crate) fn same_roster(a: &Arc<Roster>, b: &Arc<Roster>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_lookup() {
        let r = Roster::parse("a0, a1, b0");
        assert_eq!(r.len(), 3);
        assert_eq!(r.index_of("a1"), Some(1));
        assert_eq!(r.index_of("zz"), None);
        assert_eq!(r.to_string(), "a0,a1,b0");
    }

    #[test]
    #[should_panic]
    fn duplicate_rejected() {
        let _ = Roster::new(vec!["x", "x"]);
    }
}
