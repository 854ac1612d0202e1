//! The curated curve catalogue and the published reference tables.

pub mod reference;

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curves::WeierstrassCurve;
use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Rational};
use crate::matching::PencilParams;

/// Environment variable naming a catalogue file that replaces the built-in one.
pub const CATALOGUE_ENV: &str = "EULER_PENCIL_CATALOGUE";

const SEED: &str = include_str!("../../data/catalogue.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogueEntry {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<[i64; 5]>,
    /// `"num/den"`, or `"inf"` for a pole.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cm_discriminant: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pencil_params: Option<[String; 3]>,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JValue {
    Finite(Rational),
    Infinite,
}

impl CatalogueEntry {
    pub fn j_value(&self) -> Result<Option<JValue>> {
        match self.j.as_deref() {
            None => Ok(None),
            Some("inf") | Some("infinity") => Ok(Some(JValue::Infinite)),
            Some(s) => Ok(Some(JValue::Finite(parse_rational(s)?))),
        }
    }

    pub fn curve(&self) -> Result<WeierstrassCurve> {
        let model = self.model.ok_or_else(|| Error::MissingModel(self.label.clone()))?;
        WeierstrassCurve::from_ints(model, Some(&self.label))
    }

    /// Pencil parameters parsed as exact rationals of the printed precision.
    pub fn pencil(&self) -> Result<Option<PencilParams>> {
        let Some([t, d, big]) = &self.pencil_params else { return Ok(None) };
        Ok(Some(PencilParams::new(parse_rational(t)?, parse_rational(d)?, parse_rational(big)?)))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Catalogue {
    pub entries: Vec<CatalogueEntry>,
}

impl Catalogue {
    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<CatalogueEntry> =
            serde_json::from_str(text).map_err(|e| Error::Catalogue(format!("invalid catalogue JSON: {e}")))?;
        let cat = Catalogue { entries };
        cat.validate()?;
        Ok(cat)
    }

    /// The catalogue compiled into the library.
    pub fn seed() -> Self {
        Self::from_json(SEED).expect("built-in catalogue is valid")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalogue(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// The file named by `EULER_PENCIL_CATALOGUE` if set, else the built-in seed.
    pub fn load() -> Result<Self> {
        match std::env::var_os(CATALOGUE_ENV) {
            Some(p) if !p.is_empty() => Self::from_path(Path::new(&p)),
            _ => Ok(Self::seed()),
        }
    }

    pub fn get(&self, label: &str) -> Option<&CatalogueEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn entry(&self, label: &str) -> Result<&CatalogueEntry> {
        self.get(label).ok_or_else(|| Error::Catalogue(format!("no catalogue entry labelled {label:?}")))
    }

    pub fn curve(&self, label: &str) -> Result<WeierstrassCurve> {
        self.entry(label)?.curve()
    }

    /// Entries that carry a Weierstrass model.
    pub fn with_models(&self) -> impl Iterator<Item = &CatalogueEntry> {
        self.entries.iter().filter(|e| e.model.is_some())
    }

    /// Unique labels, nonsingular models, and model `j` equal to the stored `j`.
    pub fn validate(&self) -> Result<()> {
        for (i, e) in self.entries.iter().enumerate() {
            if self.entries[..i].iter().any(|o| o.label == e.label) {
                return Err(Error::Catalogue(format!("duplicate label {:?}", e.label)));
            }
            let j = e.j_value()?;
            e.pencil()?;
            if e.model.is_some() {
                let curve = e.curve()?;
                if let Some(JValue::Finite(jv)) = j {
                    if curve.j() != &jv {
                        return Err(Error::Catalogue(format!(
                            "{}: model j = {} but stored j = {jv}",
                            e.label,
                            curve.j()
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
