use crate::chars::Case;
use crate::monodromy::{check_kappa_generic, is_prime};
use crate::weyl::RhoBarShape;
use serde::Deserialize;

/// Which check groups to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckGroup {
    Weyl,
    Chars,
    Monodromy,
    Props,
}

pub const ALL_GROUPS: [CheckGroup; 4] = [
    CheckGroup::Weyl,
    CheckGroup::Chars,
    CheckGroup::Monodromy,
    CheckGroup::Props,
];

impl CheckGroup {
    pub fn parse(s: &str) -> Option<Vec<CheckGroup>> {
        match s {
            "all" => Some(ALL_GROUPS.to_vec()),
            "weyl" => Some(vec![CheckGroup::Weyl]),
            "chars" => Some(vec![CheckGroup::Chars]),
            "monodromy" => Some(vec![CheckGroup::Monodromy]),
            "props" => Some(vec![CheckGroup::Props]),
            _ => None,
        }
    }
}

/// A validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub p: i64,
    pub f: usize,
    pub case: Case,
    pub shape: RhoBarShape,
    /// base structure constant per embedding; the two root translates get
    /// the offsets -2 and +2 unless overridden
    pub kappa_base: Vec<i64>,
    pub kappa_plus: Vec<i64>,
    pub kappa_minus: Vec<i64>,
    pub seed: u64,
    pub groups: Vec<CheckGroup>,
    /// depth required of every kappa (derivation runs need 5)
    pub depth: i64,
}

#[derive(Debug, thiserror::Error)]
pub enum RunConfigError {
    #[error("p = {0} must be a prime > 5")]
    BadPrime(i64),
    #[error("f = {0} out of the supported range 1..=4")]
    BadF(usize),
    #[error("kappa list has length {0}, expected f = {1}")]
    KappaLength(usize, usize),
    #[error("kappa {0} at embedding {1}: {2}")]
    KappaGenericity(i64, usize, String),
    #[error("kappa pair at embedding {0} sums to 6 mod p, degenerate for the ledger checks")]
    KappaPairDegenerate(usize),
    #[error("shape: {0}")]
    Shape(String),
    #[error("config parse error: {0}")]
    Parse(String),
}

impl RunConfig {
    /// Default generic configuration at a given prime.
    pub fn default_at(p: i64, f: usize) -> RunConfig {
        let kappa_base: Vec<i64> = (0..f).map(|j| 8 + 3 * j as i64).collect();
        let kappa_plus = kappa_base.iter().map(|k| k - 2).collect();
        let kappa_minus = kappa_base.iter().map(|k| k + 2).collect();
        RunConfig {
            p,
            f,
            case: Case::Split,
            shape: RhoBarShape {
                n_nontrivial: vec![false; f],
                w_flips: vec![false; f],
                mu: (0..f).map(|j| (7 + j as i64, 0)).collect(),
                depth: 5,
            },
            kappa_base,
            kappa_plus,
            kappa_minus,
            seed: 7,
            groups: ALL_GROUPS.to_vec(),
            depth: 5,
        }
    }

    pub fn validate(&self) -> Result<(), RunConfigError> {
        if !is_prime(self.p) || self.p <= 5 {
            return Err(RunConfigError::BadPrime(self.p));
        }
        if self.f == 0 || self.f > 4 {
            return Err(RunConfigError::BadF(self.f));
        }
        for ks in [&self.kappa_base, &self.kappa_plus, &self.kappa_minus] {
            if ks.len() != self.f {
                return Err(RunConfigError::KappaLength(ks.len(), self.f));
            }
            for (j, &k) in ks.iter().enumerate() {
                check_kappa_generic(self.p, k, self.depth)
                    .map_err(|e| RunConfigError::KappaGenericity(k, j, e.to_string()))?;
            }
        }
        for j in 0..self.f {
            if (self.kappa_plus[j] + self.kappa_minus[j] - 6).rem_euclid(self.p) == 0 {
                return Err(RunConfigError::KappaPairDegenerate(j));
            }
        }
        self.shape
            .check_depth(self.p)
            .map_err(|e| RunConfigError::Shape(e.to_string()))?;
        Ok(())
    }

    /// The three structure constants for the chart checks at embedding j.
    pub fn kappas_at(&self, j: usize) -> (i64, i64, i64) {
        (self.kappa_base[j], self.kappa_plus[j], self.kappa_minus[j])
    }
}

/// TOML file layout for run configurations.
#[derive(Debug, Deserialize)]
pub struct ConfigFile {
    pub run: RunSection,
    #[serde(default)]
    pub rho_bar: Option<RhoBarSection>,
    #[serde(default)]
    pub kappa: Option<KappaSection>,
    #[serde(default)]
    pub checks: Option<ChecksSection>,
}

#[derive(Debug, Deserialize)]
pub struct RunSection {
    pub p: i64,
    pub f: usize,
    #[serde(default)]
    pub case: Option<String>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub depth: Option<i64>,
}

#[derive(Debug, Deserialize)]
pub struct RhoBarSection {
    #[serde(default)]
    pub n_nontrivial: Option<Vec<bool>>,
    #[serde(default)]
    pub w_flips: Option<Vec<bool>>,
    #[serde(default)]
    pub mu: Option<Vec<[i64; 2]>>,
    #[serde(default)]
    pub depth: Option<i64>,
}

#[derive(Debug, Deserialize)]
pub struct KappaSection {
    #[serde(default)]
    pub base: Option<Vec<i64>>,
    #[serde(default)]
    pub plus: Option<Vec<i64>>,
    #[serde(default)]
    pub minus: Option<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
pub struct ChecksSection {
    #[serde(default)]
    pub select: Option<Vec<String>>,
}

/// Parses and validates a TOML configuration.
pub fn parse_config(text: &str) -> Result<RunConfig, RunConfigError> {
    let file: ConfigFile =
        toml::from_str(text).map_err(|e| RunConfigError::Parse(e.to_string()))?;
    let mut cfg = RunConfig::default_at(file.run.p, file.run.f);
    if let Some(case) = &file.run.case {
        cfg.case = match case.as_str() {
            "split" => Case::Split,
            "nonsplit" => Case::Nonsplit,
            other => return Err(RunConfigError::Parse(format!("unknown case `{other}`"))),
        };
    }
    if let Some(seed) = file.run.seed {
        cfg.seed = seed;
    }
    if let Some(depth) = file.run.depth {
        cfg.depth = depth;
    }
    if let Some(rb) = &file.rho_bar {
        if let Some(n) = &rb.n_nontrivial {
            cfg.shape.n_nontrivial = n.clone();
        }
        if let Some(w) = &rb.w_flips {
            cfg.shape.w_flips = w.clone();
        }
        if let Some(mu) = &rb.mu {
            cfg.shape.mu = mu.iter().map(|m| (m[0], m[1])).collect();
        }
        if let Some(d) = rb.depth {
            cfg.shape.depth = d;
        }
        if cfg.shape.n_nontrivial.len() != cfg.f
            || cfg.shape.w_flips.len() != cfg.f
            || cfg.shape.mu.len() != cfg.f
        {
            return Err(RunConfigError::Shape(
                "per-embedding lists must have length f".into(),
            ));
        }
        if cfg.shape.n_nontrivial.iter().any(|&b| b) && cfg.shape.w_flips.iter().any(|&b| b) {
            return Err(RunConfigError::Shape(
                "presentation flip must be trivial when a unipotent part is nontrivial".into(),
            ));
        }
    }
    if let Some(ks) = &file.kappa {
        if let Some(b) = &ks.base {
            cfg.kappa_base = b.clone();
            cfg.kappa_plus = b.iter().map(|k| k - 2).collect();
            cfg.kappa_minus = b.iter().map(|k| k + 2).collect();
        }
        if let Some(p) = &ks.plus {
            cfg.kappa_plus = p.clone();
        }
        if let Some(m) = &ks.minus {
            cfg.kappa_minus = m.clone();
        }
    }
    if let Some(checks) = &file.checks {
        if let Some(sel) = &checks.select {
            let mut groups = Vec::new();
            for s in sel {
                let g = CheckGroup::parse(s)
                    .ok_or_else(|| RunConfigError::Parse(format!("unknown check group `{s}`")))?;
                for x in g {
                    if !groups.contains(&x) {
                        groups.push(x);
                    }
                }
            }
            cfg.groups = groups;
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_validates() {
        let cfg = RunConfig::default_at(23, 2);
        cfg.validate().unwrap();
    }

    #[test]
    fn kappa_congruent_one_rejected() {
        let mut cfg = RunConfig::default_at(23, 1);
        cfg.kappa_base = vec![24]; // 1 mod 23
        assert!(matches!(
            cfg.validate(),
            Err(RunConfigError::KappaGenericity(..))
        ));
    }

    #[test]
    fn toml_roundtrip() {
        let text = r#"
[run]
p = 31
f = 2
case = "nonsplit"
seed = 12

[rho_bar]
n_nontrivial = [true, false]
mu = [[7, 0], [9, 2]]

[kappa]
base = [8, 11]

[checks]
select = ["weyl", "props"]
"#;
        let cfg = parse_config(text).unwrap();
        assert_eq!(cfg.p, 31);
        assert_eq!(cfg.case, Case::Nonsplit);
        assert_eq!(cfg.kappa_plus, vec![6, 9]);
        assert_eq!(cfg.groups, vec![CheckGroup::Weyl, CheckGroup::Props]);
    }

    #[test]
    fn empty_selection_gives_empty_groups() {
        let text = "[run]\np = 23\nf = 1\n[checks]\nselect = []\n";
        let cfg = parse_config(text).unwrap();
        assert!(cfg.groups.is_empty());
    }
}
