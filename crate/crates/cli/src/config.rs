//! Parameter-file parsing and canonical echoing.
//!
//! The format is a flat list of `name = value` lines using the canonical
//! short parameter keys, plus one `container = <capacity>,<available>` line
//! per container type. `#` starts a comment anywhere on a line; blank lines
//! are ignored. Keys are case-sensitive and each scalar key may appear at
//! most once.

use std::collections::HashMap;
use std::fmt;

use seoq_core::{ContainerSpec, ModelParameters};

/// A parsed parameter file: the scalar model inputs plus the container
/// fleet, in file order.
#[derive(Debug, Clone, PartialEq)]
pub struct FileConfig {
    /// The scalar model inputs.
    pub parameters: ModelParameters,
    /// Container types available per delivery.
    pub containers: Vec<ContainerSpec>,
}

/// A parse or validation failure, carrying the offending line when the
/// failure is attributable to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    /// 1-based line number of the offending input line, when known.
    pub line: Option<usize>,
    /// What went wrong, naming the offending key where applicable.
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

/// Scalar keys in canonical order; [`dump_config`] emits them in this
/// order and missing-key errors report the first absent one.
const SCALAR_KEYS: [&str; 19] = [
    "A", "c", "h", "a", "b", "d", "alpha", "D", "beta", "v", "gamma", "gamma0", "theta",
    "epsilon", "g", "Ce", "Cp", "r", "l",
];

fn at(line: usize, message: String) -> ConfigError {
    ConfigError {
        line: Some(line),
        message,
    }
}

fn global(message: String) -> ConfigError {
    ConfigError {
        line: None,
        message,
    }
}

/// Parses a parameter file, checking key validity, duplicates, required
/// keys, and every documented parameter range.
pub fn parse_config(text: &str) -> Result<FileConfig, ConfigError> {
    let mut scalars: HashMap<&str, (f64, usize)> = HashMap::new();
    let mut containers: Vec<ContainerSpec> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((lhs, rhs)) = content.split_once('=') else {
            return Err(at(line, format!("expected `name = value`, got `{content}`")));
        };
        let key = lhs.trim();
        let value = rhs.trim();

        if key == "container" {
            containers.push(parse_container(line, value)?);
            continue;
        }

        let Some(&canonical) = SCALAR_KEYS.iter().find(|&&k| k == key) else {
            return Err(at(line, format!("unknown key `{key}`")));
        };
        if let Some(&(_, first)) = scalars.get(canonical) {
            return Err(at(
                line,
                format!("duplicate key `{key}` (first set on line {first})"),
            ));
        }
        let number: f64 = value
            .parse()
            .map_err(|_| at(line, format!("value of `{key}` must be a number, got `{value}`")))?;
        scalars.insert(canonical, (number, line));
    }

    for key in SCALAR_KEYS {
        if !scalars.contains_key(key) {
            return Err(global(format!("missing required key `{key}`")));
        }
    }
    let v = |key: &str| scalars[key].0;
    let parameters = ModelParameters {
        ordering_cost: v("A"),
        unit_cost: v("c"),
        holding_cost: v("h"),
        trip_cost: v("a"),
        freight_cost: v("b"),
        distance: v("d"),
        return_fraction: v("alpha"),
        demand: v("D"),
        transport_emission_rate: v("beta"),
        speed: v("v"),
        disposal_unit_cost: v("gamma"),
        disposal_fixed_cost: v("gamma0"),
        deterioration_fraction: v("theta"),
        emissions_per_order: v("epsilon"),
        holding_emission_rate: v("g"),
        emission_price: v("Ce"),
        capacity_price: v("Cp"),
        surplus_time_per_order: v("r"),
        surplus_emission_rate: v("l"),
    };
    if let Err(error) = parameters.validate() {
        let line = match &error {
            seoq_core::Error::InvalidParameter { name, .. } => {
                scalars.get(*name).map(|&(_, line)| line)
            }
            _ => None,
        };
        return Err(ConfigError {
            line,
            message: error.to_string(),
        });
    }
    if containers.is_empty() {
        return Err(global(
            "missing required key `container` (at least one container type is needed)".into(),
        ));
    }
    Ok(FileConfig {
        parameters,
        containers,
    })
}

fn parse_container(line: usize, value: &str) -> Result<ContainerSpec, ConfigError> {
    let Some((cap_text, avail_text)) = value.split_once(',') else {
        return Err(at(
            line,
            format!("container takes `<capacity>,<available>`, got `{value}`"),
        ));
    };
    let cap_text = cap_text.trim();
    let avail_text = avail_text.trim();
    let capacity: f64 = cap_text.parse().map_err(|_| {
        at(
            line,
            format!("container capacity must be a number, got `{cap_text}`"),
        )
    })?;
    if !(capacity.is_finite() && capacity > 0.0) {
        return Err(at(
            line,
            format!("container capacity must be positive and finite, got {capacity}"),
        ));
    }
    let available: u32 = avail_text.parse().map_err(|_| {
        at(
            line,
            format!("container availability must be a whole number, got `{avail_text}`"),
        )
    })?;
    Ok(ContainerSpec {
        capacity,
        available,
    })
}

/// Renders a config in canonical form: scalar keys in canonical order, one
/// `container` line per container type, full-precision values. Reparsing
/// the dump yields a [`FileConfig`] identical to the input.
pub fn dump_config(config: &FileConfig) -> String {
    let p = &config.parameters;
    let pairs: [(&str, f64); 19] = [
        ("A", p.ordering_cost),
        ("c", p.unit_cost),
        ("h", p.holding_cost),
        ("a", p.trip_cost),
        ("b", p.freight_cost),
        ("d", p.distance),
        ("alpha", p.return_fraction),
        ("D", p.demand),
        ("beta", p.transport_emission_rate),
        ("v", p.speed),
        ("gamma", p.disposal_unit_cost),
        ("gamma0", p.disposal_fixed_cost),
        ("theta", p.deterioration_fraction),
        ("epsilon", p.emissions_per_order),
        ("g", p.holding_emission_rate),
        ("Ce", p.emission_price),
        ("Cp", p.capacity_price),
        ("r", p.surplus_time_per_order),
        ("l", p.surplus_emission_rate),
    ];
    let mut out = String::new();
    for (key, value) in pairs {
        out.push_str(&format!("{key} = {value}\n"));
    }
    for spec in &config.containers {
        out.push_str(&format!("container = {},{}\n", spec.capacity, spec.available));
    }
    out
}
