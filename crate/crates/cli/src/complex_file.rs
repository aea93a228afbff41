//! JSON serialization of complexes:
//! `{"generators": [{"id", "A", "j", "M"}], "arrows": [[source, target, u_power]]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use upsilon_core::{BaseGenerator, KnotComplex};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorRecord {
    pub id: String,
    #[serde(rename = "A")]
    pub alexander: i64,
    pub j: i64,
    #[serde(rename = "M")]
    pub maslov: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexRecord {
    pub generators: Vec<GeneratorRecord>,
    #[serde(default)]
    pub arrows: Vec<(String, String, u32)>,
}

impl From<&KnotComplex> for ComplexRecord {
    fn from(k: &KnotComplex) -> Self {
        let generators = k
            .generators()
            .iter()
            .map(|g| GeneratorRecord {
                id: g.id.clone(),
                alexander: g.alexander,
                j: g.algebraic,
                maslov: g.maslov,
            })
            .collect();
        let arrows = k
            .arrows()
            .iter()
            .map(|a| (k.generator(a.source).id.clone(), k.generator(a.target).id.clone(), a.u_power))
            .collect();
        ComplexRecord { generators, arrows }
    }
}

impl ComplexRecord {
    pub fn into_complex(self) -> upsilon_core::Result<KnotComplex> {
        let gens = self
            .generators
            .into_iter()
            .map(|g| BaseGenerator::new(g.id, g.alexander, g.j, g.maslov))
            .collect();
        KnotComplex::with_named_arrows(gens, self.arrows)
    }
}

pub fn to_json(k: &KnotComplex) -> String {
    serde_json::to_string_pretty(&ComplexRecord::from(k)).expect("records always serialize")
}

pub fn from_json(text: &str) -> std::result::Result<KnotComplex, String> {
    let record: ComplexRecord = serde_json::from_str(text).map_err(|e| e.to_string())?;
    record.into_complex().map_err(|e| e.to_string())
}

/// Reads a complex without validating it; invariant commands validate
/// when they build their engine.
pub fn read_complex(path: &Path) -> Result<KnotComplex> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    from_json(&text).map_err(|message| CliError::ComplexFile {
        path: path.to_path_buf(),
        message,
    })
}
