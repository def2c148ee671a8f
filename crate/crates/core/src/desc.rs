//! JSON group descriptions.
//!
//! ```json
//! {"kind": "table", "table": [[0, 1], [1, 0]]}
//! {"kind": "perm", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}
//! {"kind": "cyclic", "n": 4}
//! {"kind": "product", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 3}]}
//! {"kind": "semidirect", "actor": {...}, "space": {...}, "action": [[...], ...]}
//! ```
//!
//! A top-level file may also carry `"schema_version": 1` and a `"name"`.

use serde::{Deserialize, Serialize};

use crate::action::{semidirect_product, GAction};
use crate::error::{Error, Result};
use crate::group::{Caps, FiniteGroup};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupDesc {
    Table { table: Vec<Vec<usize>> },
    Perm { degree: usize, generators: Vec<Vec<usize>> },
    Cyclic { n: usize },
    Product { factors: Vec<GroupDesc> },
    Semidirect { actor: Box<GroupDesc>, space: Box<GroupDesc>, action: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub group: GroupDesc,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: GroupFile = serde_json::from_str(text).map_err(parse_error)?;
        match file.schema_version {
            Some(v) if v != SCHEMA_VERSION => {
                Err(Error::Parse(format!("unsupported schema_version {v}, expected {SCHEMA_VERSION}")))
            }
            _ => Ok(file),
        }
    }
}

pub(crate) fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

impl GroupDesc {
    pub fn cyclic(n: usize) -> Self {
        GroupDesc::Cyclic { n }
    }

    pub fn product(factors: Vec<GroupDesc>) -> Self {
        GroupDesc::Product { factors }
    }

    pub fn perm(degree: usize, generators: Vec<Vec<usize>>) -> Self {
        GroupDesc::Perm { degree, generators }
    }

    pub fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        let g = match self {
            GroupDesc::Table { table } => FiniteGroup::from_table(table)?,
            GroupDesc::Perm { degree, generators } => {
                FiniteGroup::from_permutations(*degree, generators, caps.max_order)?
            }
            GroupDesc::Cyclic { n } => {
                if *n == 0 {
                    return Err(Error::Parse("cyclic group needs n >= 1".into()));
                }
                if *n > caps.max_order {
                    return Err(Error::OrderCapExceeded { cap: caps.max_order });
                }
                FiniteGroup::cyclic(*n)
            }
            GroupDesc::Product { factors } => {
                let mut acc: Option<FiniteGroup> = None;
                for f in factors {
                    let f = f.build(caps)?;
                    let size = acc.as_ref().map_or(1, |a| a.order()) * f.order();
                    if size > caps.max_order {
                        return Err(Error::OrderCapExceeded { cap: caps.max_order });
                    }
                    acc = Some(match acc {
                        None => f,
                        Some(a) => FiniteGroup::direct_product(&a, &f),
                    });
                }
                acc.unwrap_or_else(FiniteGroup::trivial)
            }
            GroupDesc::Semidirect { actor, space, action } => {
                let (b, a) = (actor.build(caps)?, space.build(caps)?);
                if b.order() * a.order() > caps.max_order {
                    return Err(Error::OrderCapExceeded { cap: caps.max_order });
                }
                semidirect_product(&GAction::new(b, a, action.clone())?)
            }
        };
        if g.order() > caps.max_order {
            return Err(Error::OrderCapExceeded { cap: caps.max_order });
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        let caps = Caps::default();
        let cases = [
            (r#"{"kind":"table","table":[[0,1],[1,0]]}"#, 2),
            (r#"{"kind":"perm","degree":3,"generators":[[1,2,0],[1,0,2]]}"#, 6),
            (r#"{"kind":"cyclic","n":4}"#, 4),
            (r#"{"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":3}]}"#, 6),
            (r#"{"kind":"product","factors":[]}"#, 1),
            (
                r#"{"kind":"semidirect","actor":{"kind":"cyclic","n":2},"space":{"kind":"cyclic","n":3},"action":[[0,1,2],[0,2,1]]}"#,
                6,
            ),
            (r#"{"schema_version":1,"name":"C5","kind":"cyclic","n":5}"#, 5),
        ];
        for (text, order) in cases {
            let file = GroupFile::parse(text).unwrap();
            assert_eq!(file.group.build(&caps).unwrap().order(), order, "{text}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(GroupFile::parse("{"), Err(Error::Parse(_))));
        assert!(matches!(GroupFile::parse(r#"{"kind":"klein"}"#), Err(Error::Parse(_))));
        assert!(matches!(GroupFile::parse(r#"{"schema_version":7,"kind":"cyclic","n":2}"#), Err(Error::Parse(_))));
        let caps = Caps { max_order: 10, ..Caps::default() };
        let big = GroupDesc::product(vec![GroupDesc::cyclic(4), GroupDesc::cyclic(4)]);
        assert_eq!(big.build(&caps), Err(Error::OrderCapExceeded { cap: 10 }));
    }
}
