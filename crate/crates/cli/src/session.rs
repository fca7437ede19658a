use std::sync::Arc;

use anyhow::{bail, Context, Result};
use schur_scope::{parse_cartan, preset, CartanMatrix, Exec, Limits, Orientation, WeylGroup};

use crate::args::GlobalArgs;

pub const CAPS_ENV: &str = "SCHUR_SCOPE_CAPS";
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;
pub const DEFAULT_HEIGHT: i64 = 20;

/// Search bounds. `length` defaults to the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub orbit: usize,
    pub height: i64,
    pub length: Option<usize>,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { orbit: DEFAULT_ORBIT_CAP, height: DEFAULT_HEIGHT, length: None }
    }
}

impl Caps {
    /// Parses `orbit=N,height=H,len=K`; any subset of keys may appear.
    pub fn apply_env(mut self, text: &str) -> Result<Self> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .with_context(|| format!("{CAPS_ENV}: expected key=value, got '{item}'"))?;
            let value = value.trim();
            match key.trim() {
                "orbit" => self.orbit = value.parse().with_context(|| format!("{CAPS_ENV}: bad orbit cap '{value}'"))?,
                "height" => self.height = value.parse().with_context(|| format!("{CAPS_ENV}: bad height '{value}'"))?,
                "len" => self.length = Some(value.parse().with_context(|| format!("{CAPS_ENV}: bad length cap '{value}'"))?),
                other => bail!("{CAPS_ENV}: unknown key '{other}'"),
            }
        }
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.orbit == 0 {
            bail!("orbit cap must be positive");
        }
        if self.height <= 0 {
            bail!("height bound must be positive");
        }
        if self.length == Some(0) {
            bail!("length cap must be positive");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

pub struct Session {
    pub orientation: Orientation,
    pub caps: Caps,
    pub output: OutputMode,
    pub exec: Exec,
}

impl Session {
    /// `env_caps` is the value of the caps environment variable, if set.
    pub fn from_args(args: &GlobalArgs, env_caps: Option<&str>) -> Result<Self> {
        let cartan = load_cartan(args)?;
        let n = cartan.rank();
        let order = match &args.order {
            Some(text) => parse_order(text)?,
            None => (0..n).collect(),
        };
        let orientation = Orientation::new(Arc::new(WeylGroup::new(cartan)), order)?;
        let mut caps = Caps::default();
        if let Some(text) = env_caps {
            caps = caps.apply_env(text)?;
        }
        if let Some(v) = args.orbit_cap {
            caps.orbit = v;
        }
        if let Some(v) = args.height {
            caps.height = v;
        }
        if let Some(v) = args.length_cap {
            caps.length = Some(v);
        }
        caps.validate()?;
        Ok(Session {
            orientation,
            caps,
            output: if args.json { OutputMode::Json } else { OutputMode::Text },
            exec: if args.sequential { Exec::Sequential } else { Exec::default() },
        })
    }

    pub fn limits(&self) -> Limits {
        Limits { orbit_cap: self.caps.orbit, length_cap: self.caps.length, exec: self.exec, ..Limits::default() }
    }

    pub fn rank(&self) -> usize {
        self.orientation.rank()
    }

    pub fn group(&self) -> &WeylGroup {
        self.orientation.group()
    }
}

fn load_cartan(args: &GlobalArgs) -> Result<CartanMatrix> {
    match (&args.type_name, &args.cartan) {
        (Some(name), None) => Ok(preset(name)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Ok(parse_cartan(&text)?)
        }
        (None, None) => bail!("one of --type or --cartan is required"),
        (Some(_), Some(_)) => bail!("--type and --cartan are mutually exclusive"),
    }
}

/// 1-based comma list to 0-based indices.
pub fn parse_order(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            let i: usize = t.trim().parse().with_context(|| format!("bad order entry '{t}'"))?;
            if i == 0 {
                bail!("order entries are 1-based");
            }
            Ok(i - 1)
        })
        .collect()
}
