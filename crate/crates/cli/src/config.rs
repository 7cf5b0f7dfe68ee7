//! Flat `key = value` parameter files.
//!
//! ```text
//! # experiment parameters
//! radius = 1
//! distances = 1.5, 2, 4
//! ```

use densitycheck::experiment::ExperimentConfig;
use densitycheck::numerics::Resolution;

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

/// Resolution from a single radial panel count.
pub fn resolution_from_panels(n: u32) -> Resolution {
    let n = n as usize;
    Resolution {
        panels: n,
        order: 8,
        n_theta: 2 * n,
        n_phi: (n / 2).max(4),
    }
}

fn number(key: &str, value: &str, line: usize) -> Result<f64, ConfigError> {
    value.trim().parse().map_err(|_| {
        ConfigError(format!(
            "line {line}: `{key}` expects a number, got `{value}`"
        ))
    })
}

/// Applies the entries of `text` on top of `base`. Unknown keys are errors.
pub fn apply_config(
    text: &str,
    mut base: ExperimentConfig,
) -> Result<ExperimentConfig, ConfigError> {
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| ConfigError(format!("line {line}: expected key = value")))?;
        let key = key.trim();
        match key {
            "radius" => base.radius = number(key, value, line)?,
            "mass" => base.mass = number(key, value, line)?,
            "charge" | "e" => base.charge = number(key, value, line)?,
            "external_charge" | "q" => base.external_charge = number(key, value, line)?,
            "time" => base.time = number(key, value, line)?,
            "sigma" => {
                base.sigma = match value.trim() {
                    "1" | "+1" => 1,
                    "-1" => -1,
                    other => {
                        return Err(ConfigError(format!(
                            "line {line}: sigma must be 1 or -1, got `{other}`"
                        )))
                    }
                }
            }
            "distances" | "d" => {
                base.distances = value
                    .split(',')
                    .map(|v| number(key, v, line))
                    .collect::<Result<_, _>>()?;
            }
            "resolution" => {
                let n: u32 = value
                    .trim()
                    .parse()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| {
                        ConfigError(format!(
                            "line {line}: resolution must be a positive integer"
                        ))
                    })?;
                base.resolution = resolution_from_panels(n);
            }
            other => return Err(ConfigError(format!("line {line}: unknown key `{other}`"))),
        }
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_file() {
        let text = "# comment\nradius = 2\nmass=0.5\ne = 0 # off\nq = 3\n\ndistances = 2.5, 3,10\nsigma = -1\nresolution = 6\ntime = 0.1\n";
        let c = apply_config(text, ExperimentConfig::default()).unwrap();
        assert_eq!(
            (c.radius, c.mass, c.charge, c.external_charge),
            (2.0, 0.5, 0.0, 3.0)
        );
        assert_eq!(c.distances, vec![2.5, 3.0, 10.0]);
        assert_eq!(c.sigma, -1);
        assert_eq!(c.time, 0.1);
        assert_eq!(c.resolution, resolution_from_panels(6));
    }

    #[test]
    fn empty_keeps_defaults() {
        assert_eq!(
            apply_config("", ExperimentConfig::default()).unwrap(),
            ExperimentConfig::default()
        );
        assert_eq!(resolution_from_panels(16), Resolution::default());
    }

    #[test]
    fn errors_name_the_line() {
        for (text, needle) in [
            ("radius 1", "line 1"),
            ("\nwidth = 3", "unknown key `width`"),
            ("mass = heavy", "expects a number"),
            ("sigma = 2", "sigma"),
            ("resolution = 0", "positive"),
        ] {
            let err = apply_config(text, ExperimentConfig::default()).unwrap_err();
            assert!(err.0.contains(needle), "{text}: {err}");
        }
    }
}
