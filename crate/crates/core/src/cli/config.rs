use std::path::{Path, PathBuf};

use crate::analysis::ThetaGrid;
use crate::error::{Error, Result};
use crate::evolution::random_state;
use crate::hamiltonian::{Builtin, HamiltonianSpec};
use crate::krylov::DEFAULT_DT;
use crate::numerics::StateVector;
use crate::{DEFAULT_EIG_TOL, DEFAULT_LAMBDA, DEFAULT_RANK_TOL};

/// Where a Hamiltonian comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum HamiltonianSource {
    Builtin(Builtin),
    File(PathBuf),
}

impl HamiltonianSource {
    /// A builtin name (`H_I2`, `hi2`, …) or the path of an existing spec file.
    pub fn resolve(value: &str) -> Result<Self> {
        match value.parse::<Builtin>() {
            Ok(b) => Ok(HamiltonianSource::Builtin(b)),
            Err(e) => {
                let path = Path::new(value);
                if path.is_file() {
                    Ok(HamiltonianSource::File(path.to_path_buf()))
                } else {
                    Err(e)
                }
            }
        }
    }

    /// Name used in output file names: builtin display name or file stem.
    pub fn name(&self) -> String {
        match self {
            HamiltonianSource::Builtin(b) => b.name().to_string(),
            HamiltonianSource::File(p) => p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "custom".into()),
        }
    }

    pub fn spec(&self) -> Result<HamiltonianSpec> {
        match self {
            HamiltonianSource::Builtin(b) => Ok(b.spec()),
            HamiltonianSource::File(p) => HamiltonianSpec::from_file(p),
        }
    }
}

/// Initial state of single-state commands.
#[derive(Clone, Debug, Default, PartialEq)]
pub enum InitialState {
    /// Haar-random state drawn from the run seed.
    #[default]
    Haar,
    /// Computational basis state given as a bit string, qubit 1 first.
    Basis(String),
}

impl InitialState {
    pub fn parse(value: &str) -> Result<Self> {
        if value.eq_ignore_ascii_case("haar") {
            return Ok(InitialState::Haar);
        }
        if !value.is_empty() && value.chars().all(|c| c == '0' || c == '1') {
            return Ok(InitialState::Basis(value.to_string()));
        }
        Err(Error::Config(format!(
            "initial_state must be `haar` or a bit string, got `{value}`"
        )))
    }

    pub fn resolve(&self, dim: usize, seed: u64) -> Result<StateVector> {
        match self {
            InitialState::Haar => random_state(dim, seed),
            InitialState::Basis(bits) => {
                if 1usize.checked_shl(bits.len() as u32) != Some(dim) {
                    return Err(Error::Config(format!(
                        "initial state `{bits}` has {} qubits, Hamiltonian has dimension {dim}",
                        bits.len()
                    )));
                }
                let index = usize::from_str_radix(bits, 2).map_err(|e| Error::Config(e.to_string()))?;
                Ok(StateVector::basis(dim, index))
            }
        }
    }
}

/// Settings shared by all commands. Every key is optional.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Builtin name or spec-file path. For `table1`, `NAME=PATH` substitutes a
    /// spec file for one builtin row (comma-separated for several).
    pub hamiltonian: Option<String>,
    pub seed: u64,
    pub n_states: usize,
    pub n_times: usize,
    pub t_max: f64,
    pub dt: f64,
    pub rank_tol: f64,
    pub eig_tol: f64,
    pub lambda: f64,
    pub output_dir: PathBuf,
    pub theta_grid: ThetaGrid,
    pub initial_state: InitialState,
    pub effdim_points: usize,
    pub effdim_t_max: f64,
    pub spread_points: usize,
    pub spread_t_max: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            hamiltonian: None,
            seed: 42,
            n_states: 10,
            n_times: 25,
            t_max: 10.0,
            dt: DEFAULT_DT,
            rank_tol: DEFAULT_RANK_TOL,
            eig_tol: DEFAULT_EIG_TOL,
            lambda: DEFAULT_LAMBDA,
            output_dir: PathBuf::from("results"),
            theta_grid: ThetaGrid::Endpoint,
            initial_state: InitialState::Haar,
            effdim_points: 200,
            effdim_t_max: super::DEFAULT_EFFDIM_T_MAX,
            spread_points: 500,
            spread_t_max: super::DEFAULT_SPREAD_T_MAX,
        }
    }
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("invalid value `{value}` for `{key}`")))
}

impl RunConfig {
    /// Parses flat `key = value` text; `#` starts a comment line.
    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse {
                path: source.to_string(),
                line: idx + 1,
                msg,
            };
            let Some((key, value)) = line.split_once('=') else {
                return Err(err(format!("expected `key = value`, got `{line}`")));
            };
            cfg.set(key.trim(), value.trim()).map_err(|e| match e {
                Error::Config(msg) => err(msg),
                other => other,
            })?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Sets one key from its text value.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "hamiltonian" => self.hamiltonian = Some(value.to_string()),
            "seed" => self.seed = parse_value(key, value)?,
            "n_states" => self.n_states = parse_value(key, value)?,
            "n_times" => self.n_times = parse_value(key, value)?,
            "t_max" => self.t_max = parse_value(key, value)?,
            "dt" => self.dt = parse_value(key, value)?,
            "rank_tol" => self.rank_tol = parse_value(key, value)?,
            "eig_tol" => self.eig_tol = parse_value(key, value)?,
            "lambda" => self.lambda = parse_value(key, value)?,
            "output_dir" => self.output_dir = PathBuf::from(value),
            "theta_grid" => self.theta_grid = value.parse().map_err(|e: Error| Error::Config(e.to_string()))?,
            "initial_state" => self.initial_state = InitialState::parse(value)?,
            "effdim_points" => self.effdim_points = parse_value(key, value)?,
            "effdim_t_max" => self.effdim_t_max = parse_value(key, value)?,
            "spread_points" => self.spread_points = parse_value(key, value)?,
            "spread_t_max" => self.spread_t_max = parse_value(key, value)?,
            other => return Err(Error::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Tolerances positive, `λ ∈ (0, 1)`, counts at least 1.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("rank_tol", self.rank_tol),
            ("eig_tol", self.eig_tol),
            ("t_max", self.t_max),
            ("dt", self.dt),
            ("effdim_t_max", self.effdim_t_max),
            ("spread_t_max", self.spread_t_max),
        ];
        for (key, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("`{key}` must be positive and finite, got {v}")));
            }
        }
        if !(self.lambda > 0.0 && self.lambda < 1.0) {
            return Err(Error::Config(format!(
                "`lambda` must lie in (0, 1), got {}",
                self.lambda
            )));
        }
        let counts = [
            ("n_states", self.n_states),
            ("n_times", self.n_times),
            ("effdim_points", self.effdim_points),
            ("spread_points", self.spread_points),
        ];
        for (key, v) in counts {
            if v == 0 {
                return Err(Error::Config(format!("`{key}` must be at least 1")));
            }
        }
        Ok(())
    }

    pub fn hamiltonian_source(&self) -> Result<HamiltonianSource> {
        let value = self
            .hamiltonian
            .as_deref()
            .ok_or_else(|| Error::Config("no Hamiltonian given (set `hamiltonian` or pass --hamiltonian)".into()))?;
        HamiltonianSource::resolve(value)
    }

    /// `NAME=PATH` substitutions for `table1`; other values are ignored there.
    pub fn table1_overrides(&self) -> Result<Vec<(Builtin, PathBuf)>> {
        let Some(value) = self.hamiltonian.as_deref() else {
            return Ok(Vec::new());
        };
        value
            .split(',')
            .filter_map(|item| item.split_once('='))
            .map(|(name, path)| Ok((name.trim().parse::<Builtin>()?, PathBuf::from(path.trim()))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let cfg = RunConfig::parse("", "empty").unwrap();
        assert_eq!(cfg.seed, 42);
        assert_eq!(cfg.n_states, 10);
        assert_eq!(cfg.n_times, 25);
        assert_eq!(cfg.t_max, 10.0);
        assert_eq!(cfg.rank_tol, 1e-10);
        assert_eq!(cfg.eig_tol, 1e-8);
        assert_eq!(cfg.lambda, std::f64::consts::FRAC_1_SQRT_2);
    }

    #[test]
    fn keys_and_comments() {
        let cfg = RunConfig::parse("# run\nseed = 7\nhamiltonian = H_I2\n\ntheta_grid = shifted\n", "c").unwrap();
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.hamiltonian.as_deref(), Some("H_I2"));
        assert_eq!(cfg.theta_grid, ThetaGrid::Shifted);
    }

    #[test]
    fn bad_input_is_a_usage_error() {
        for text in [
            "seed = x",
            "bogus = 1",
            "lambda = 1.5",
            "n_states = 0",
            "no equals sign",
        ] {
            let err = RunConfig::parse(text, "c").unwrap_err();
            assert_eq!(err.exit_code(), 2, "{text}: {err}");
        }
    }

    #[test]
    fn basis_initial_state_uses_qubit_one_as_high_bit() {
        let s = InitialState::parse("1000").unwrap().resolve(16, 0).unwrap();
        assert_eq!(s, StateVector::basis(16, 8));
        assert!(InitialState::parse("10").unwrap().resolve(16, 0).is_err());
        assert!(InitialState::parse("12").is_err());
    }

    #[test]
    fn unknown_hamiltonian_name() {
        let cfg = RunConfig {
            hamiltonian: Some("H_9".into()),
            ..RunConfig::default()
        };
        assert_eq!(cfg.hamiltonian_source().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn table1_overrides_parse() {
        let cfg = RunConfig {
            hamiltonian: Some("H_I3=/tmp/x.txt".into()),
            ..RunConfig::default()
        };
        assert_eq!(
            cfg.table1_overrides().unwrap(),
            vec![(Builtin::HI3, PathBuf::from("/tmp/x.txt"))]
        );
        let plain = RunConfig {
            hamiltonian: Some("H_1".into()),
            ..RunConfig::default()
        };
        assert!(plain.table1_overrides().unwrap().is_empty());
    }
}
