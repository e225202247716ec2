use std::path::Path;

use anyhow::{bail, Result};
use cpfs::{Operator, RadiusGenerator};
use serde::{Deserialize, Serialize};

use crate::input::read_json;

pub const DEFAULT_PRECISION: u32 = 2;
pub const MAX_PRECISION: u32 = 15;

/// Run settings. Every field is optional; command-line flags take precedence.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub operator: Option<String>,
    /// Must agree with the operator's radius generator when both are given.
    pub radius_generator: Option<String>,
    pub precision: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub operator: Operator,
    pub precision: u32,
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        path.map_or_else(|| Ok(Self::default()), read_json)
    }

    pub fn resolve(&self, operator: Option<Operator>, precision: Option<u32>) -> Result<Settings> {
        let operator = match (operator, &self.operator) {
            (Some(op), _) => op,
            (None, Some(id)) => id.parse()?,
            (None, None) => Operator::CPWA_Q,
        };
        if let Some(id) = &self.radius_generator {
            let radius: RadiusGenerator = id.parse()?;
            if radius != operator.radius {
                bail!("radius_generator `{radius}` does not match operator `{operator}`");
            }
        }
        let precision = precision.or(self.precision).unwrap_or(DEFAULT_PRECISION);
        if precision > MAX_PRECISION {
            bail!("precision: {precision} exceeds the maximum of {MAX_PRECISION}");
        }
        Ok(Settings {
            operator,
            precision,
        })
    }
}
