use serde::{Deserialize, Serialize};

use super::perm::{permutation_closure, Permutation};
use super::{Catalog, FiniteGroup, Limits};
use crate::error::{Error, Result};

/// Group input document: a Cayley table, permutation generators, or a catalog
/// entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Cayley {
        cayley: Vec<Vec<usize>>,
    },
    Permutations {
        permutations: Vec<String>,
        points: usize,
    },
    Catalog {
        catalog: String,
        #[serde(default)]
        params: Vec<usize>,
    },
}

impl GroupSpec {
    pub fn catalog(name: &str) -> Self {
        GroupSpec::Catalog {
            catalog: name.to_string(),
            params: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cayley { cayley } => FiniteGroup::from_table(cayley.clone(), limits),
            GroupSpec::Permutations {
                permutations,
                points,
            } => {
                let gens = permutations
                    .iter()
                    .map(|s| Permutation::parse_cycles(s, *points))
                    .collect::<Result<Vec<_>>>()?;
                permutation_closure(&gens, *points, limits)
            }
            GroupSpec::Catalog { catalog, params } => {
                let g = if params.is_empty() {
                    Catalog::parse(catalog)?
                } else {
                    Catalog::from_name(catalog, params)?
                };
                g.build(limits)
            }
        }
    }
}
