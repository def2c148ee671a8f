//! JSON descriptions of inverse systems.
//!
//! ```json
//! {"levels": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 4}], "bonds": [[0, 1, 0, 1]]}
//! {"family": "pq-power", "p": 3, "q": 2, "depth": 3}
//! ```
//!
//! Either form may add `"subgroup_generators"`: element indices of the top
//! level generating the subgroup whose complement chain is lifted.

use serde::{Deserialize, Serialize};

use crate::desc::{parse_error, GroupDesc, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::group::Caps;
use crate::subgroup::Homomorphism;

use super::{example_system, Family, InverseSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SystemSpec {
    Family {
        family: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        q: Option<usize>,
        depth: usize,
    },
    Explicit {
        levels: Vec<GroupDesc>,
        bonds: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyForm {
    #[serde(default)]
    schema_version: Option<u32>,
    #[serde(default)]
    name: Option<String>,
    family: String,
    #[serde(default)]
    p: Option<usize>,
    #[serde(default)]
    q: Option<usize>,
    depth: usize,
    #[serde(default)]
    subgroup_generators: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitForm {
    #[serde(default)]
    schema_version: Option<u32>,
    #[serde(default)]
    name: Option<String>,
    levels: Vec<GroupDesc>,
    bonds: Vec<Vec<usize>>,
    #[serde(default)]
    subgroup_generators: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemFile {
    pub name: Option<String>,
    pub spec: SystemSpec,
    pub subgroup_generators: Option<Vec<usize>>,
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(parse_error)?;
        let is_family = value.get("family").is_some();
        let (version, file) = if is_family {
            let f: FamilyForm = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            let spec = SystemSpec::Family { family: f.family, p: f.p, q: f.q, depth: f.depth };
            (f.schema_version, SystemFile { name: f.name, spec, subgroup_generators: f.subgroup_generators })
        } else {
            let f: ExplicitForm = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            let spec = SystemSpec::Explicit { levels: f.levels, bonds: f.bonds };
            (f.schema_version, SystemFile { name: f.name, spec, subgroup_generators: f.subgroup_generators })
        };
        match version {
            Some(v) if v != SCHEMA_VERSION => {
                Err(Error::Parse(format!("unsupported schema_version {v}, expected {SCHEMA_VERSION}")))
            }
            _ => Ok(file),
        }
    }
}

impl SystemSpec {
    /// Builds the system. Explicit bonds are only shape-checked; run
    /// [`super::validate_system`] before trusting them.
    pub fn build(&self, caps: &Caps) -> Result<InverseSystem> {
        match self {
            SystemSpec::Family { family, p, q, depth } => example_system(Family::from_name(family, *p, *q)?, *depth, caps),
            SystemSpec::Explicit { levels, bonds } => {
                let mut groups = Vec::with_capacity(levels.len());
                for (k, d) in levels.iter().enumerate() {
                    let g = d.build(caps).map_err(Error::at_level(k))?;
                    if g.order() > caps.max_level_order {
                        return Err(Error::AtLevel {
                            level: k,
                            source: Box::new(Error::OrderCapExceeded { cap: caps.max_level_order }),
                        });
                    }
                    groups.push(g);
                }
                if groups.is_empty() || bonds.len() + 1 != groups.len() {
                    return Err(Error::InvalidSystem(format!("{} levels need {} bonds", groups.len(), groups.len().saturating_sub(1))));
                }
                let homs = bonds
                    .iter()
                    .enumerate()
                    .map(|(k, m)| Homomorphism::from_map_unchecked(groups[k + 1].order(), groups[k].order(), m.clone()))
                    .collect();
                InverseSystem::from_parts_unchecked(groups, homs)
            }
        }
    }
}
