//! Run configuration: a TOML file merged with command-line flags, resolved
//! into fully parsed inputs. Every failure carries the location of the
//! offending input.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use brb_core::algebra::{parse_element, AlgebraElement, BasisKind, RotaBaxterSplit};
use brb_core::convolution::{Character, UnitalLinMap};
use brb_core::diffeo::{BrbRoute, FormalDiffeo};
use brb_core::hopf::{instance, HopfAlgebraSpec};
use brb_core::random::Sampler;
use brb_core::verify::Suite;
use serde::Deserialize;

use crate::cli::{Cli, Command, DecomposeArgs, DiffeoArgs, Format, HopfArgs, MapArgs, VerifyArgs};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub location: String,
    pub message: String,
}

impl ConfigError {
    fn new(location: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    command: Option<String>,
    format: Option<Format>,
    split: Option<String>,
    check_oracle: Option<bool>,
    seed: Option<u64>,
    suite: Option<String>,
    random: Option<bool>,
    hopf: Option<HopfSection>,
    character: Option<BTreeMap<String, String>>,
    map: Option<BTreeMap<String, String>>,
    diffeo: Option<DiffeoSection>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfSection {
    instance: Option<String>,
    degree: Option<u32>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiffeoSection {
    order: Option<usize>,
    route: Option<String>,
    coefficients: Option<Vec<(usize, String)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Character,
    Map,
    Random,
}

impl InputKind {
    pub fn name(self) -> &'static str {
        match self {
            InputKind::Character => "character",
            InputKind::Map => "map",
            InputKind::Random => "random",
        }
    }
}

#[derive(Debug, Clone)]
pub struct MapInput {
    pub spec: Arc<HopfAlgebraSpec>,
    pub kind: InputKind,
    pub map: UnitalLinMap,
}

#[derive(Debug, Clone)]
pub enum Task {
    Decompose {
        input: MapInput,
        split: RotaBaxterSplit,
        check_oracle: bool,
    },
    Inverse {
        input: MapInput,
        check_oracle: bool,
    },
    Diffeo {
        diffeo: FormalDiffeo,
        random: bool,
        split: RotaBaxterSplit,
        route: BrbRoute,
        check_oracle: bool,
    },
    Verify {
        suites: Vec<Suite>,
        seed: u64,
    },
    Table {
        spec: Arc<HopfAlgebraSpec>,
    },
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub task: Task,
    pub format: Format,
}

pub const DEFAULT_SEED: u64 = 7;

struct Source {
    file: FileConfig,
    name: String,
}

impl Source {
    fn at(&self, key: &str) -> String {
        format!("{} [{key}]", self.name)
    }
}

fn load(path: Option<&Path>) -> Result<Source, ConfigError> {
    let Some(path) = path else {
        return Ok(Source {
            file: FileConfig::default(),
            name: "config".into(),
        });
    };
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::new(&name, e.to_string()))?;
    let file: FileConfig = toml::from_str(&text).map_err(|e| {
        let location = match e.span() {
            Some(span) => {
                let line = text[..span.start].matches('\n').count() + 1;
                let column = span.start - text[..span.start].rfind('\n').map_or(0, |i| i + 1) + 1;
                format!("{name}:{line}:{column}")
            }
            None => name.clone(),
        };
        ConfigError::new(location, e.message().to_string())
    })?;
    Ok(Source { file, name })
}

pub fn resolve(cli: Cli) -> Result<RunConfig, ConfigError> {
    let src = load(cli.config.as_deref())?;
    let format = cli.format.or(src.file.format).unwrap_or(Format::Json);
    let command = match cli.command {
        Some(c) => c,
        None => {
            let name = src
                .file
                .command
                .clone()
                .ok_or_else(|| ConfigError::new("arguments", "no command given (decompose, inverse, diffeo, verify, table)"))?;
            match name.as_str() {
                "decompose" => Command::Decompose(DecomposeArgs::default()),
                "inverse" => Command::Inverse(MapArgs::default()),
                "diffeo" => Command::Diffeo(DiffeoArgs::default()),
                "verify" => Command::Verify(VerifyArgs::default()),
                "table" => Command::Table(HopfArgs::default()),
                other => {
                    return Err(ConfigError::new(
                        src.at("command"),
                        format!("unknown command `{other}`"),
                    ))
                }
            }
        }
    };
    let task = match command {
        Command::Decompose(args) => Task::Decompose {
            input: map_input(&src, &args.map)?,
            split: split(&src, args.split.as_deref(), "--split")?,
            check_oracle: args.map.check_oracle || src.file.check_oracle.unwrap_or(false),
        },
        Command::Inverse(args) => Task::Inverse {
            input: map_input(&src, &args)?,
            check_oracle: args.check_oracle || src.file.check_oracle.unwrap_or(false),
        },
        Command::Diffeo(args) => diffeo_task(&src, &args)?,
        Command::Verify(args) => {
            let name = args.suite.or(src.file.suite.clone()).unwrap_or_else(|| "all".into());
            let suites = Suite::parse_selection(&name).map_err(|m| ConfigError::new("--suite", m))?;
            Task::Verify {
                suites,
                seed: args.seed.or(src.file.seed).unwrap_or(DEFAULT_SEED),
            }
        }
        Command::Table(args) => Task::Table {
            spec: hopf_spec(&src, &args)?,
        },
    };
    Ok(RunConfig { task, format })
}

fn split(src: &Source, flag: Option<&str>, flag_name: &str) -> Result<RotaBaxterSplit, ConfigError> {
    let (value, location) = match (flag, &src.file.split) {
        (Some(v), _) => (v.to_string(), flag_name.to_string()),
        (None, Some(v)) => (v.clone(), src.at("split")),
        (None, None) => return Ok(RotaBaxterSplit::PolePart),
    };
    value.parse().map_err(|m: String| ConfigError::new(location, m))
}

fn hopf_spec(src: &Source, args: &HopfArgs) -> Result<Arc<HopfAlgebraSpec>, ConfigError> {
    let section = src.file.hopf.as_ref();
    let (name, name_loc) = match (&args.hopf, section.and_then(|h| h.instance.clone())) {
        (Some(n), _) => (n.clone(), "--hopf".to_string()),
        (None, Some(n)) => (n, src.at("hopf.instance")),
        (None, None) => ("ladder".to_string(), "--hopf".to_string()),
    };
    let (degree, degree_loc) = match (args.degree, section.and_then(|h| h.degree)) {
        (Some(d), _) => (d, "--degree".to_string()),
        (None, Some(d)) => (d, src.at("hopf.degree")),
        (None, None) => return Err(ConfigError::new("--degree", "truncation degree is required")),
    };
    if degree == 0 {
        return Err(ConfigError::new(degree_loc, "truncation degree must be at least 1"));
    }
    instance(&name, degree)
        .map(Arc::new)
        .map_err(|e| ConfigError::new(name_loc, e.to_string()))
}

fn parse_value(expr: &str, location: &str) -> Result<AlgebraElement, ConfigError> {
    parse_element(expr, BasisKind::Laurent).map_err(|e| match e {
        brb_core::Error::Parse { position, message } => ConfigError::new(
            format!("{location}, byte {position} of `{expr}`"),
            message,
        ),
        other => ConfigError::new(location, other.to_string()),
    })
}

fn split_assignment(raw: &str, flag: &str) -> Result<(String, String), ConfigError> {
    raw.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| ConfigError::new(format!("{flag} {raw}"), "expected NAME=EXPR"))
}

fn map_input(src: &Source, args: &MapArgs) -> Result<MapInput, ConfigError> {
    let spec = hopf_spec(src, &args.hopf)?;
    let kind = BasisKind::Laurent;

    if args.random || src.file.random.unwrap_or(false) {
        let seed = args.seed.or(src.file.seed).unwrap_or(DEFAULT_SEED);
        let map = Sampler::new(seed).lin_map(&spec, kind);
        return Ok(MapInput {
            spec,
            kind: InputKind::Random,
            map,
        });
    }

    // (name, expression, location) from the file, then from flags
    let mut on_monomials = args.map;
    let mut entries: Vec<(String, String, String)> = Vec::new();
    if let Some(t) = &src.file.character {
        entries.extend(t.iter().map(|(k, v)| (k.clone(), v.clone(), src.at(&format!("character.{k}")))));
    }
    if let Some(t) = &src.file.map {
        if src.file.character.is_some() {
            return Err(ConfigError::new(src.at("map"), "give either [character] or [map], not both"));
        }
        on_monomials = true;
        entries.extend(t.iter().map(|(k, v)| (k.clone(), v.clone(), src.at(&format!("map.{k}")))));
    }
    for raw in &args.values {
        let (k, v) = split_assignment(raw, "--value")?;
        entries.push((k, v, format!("--value {raw}")));
    }
    if entries.is_empty() {
        return Err(ConfigError::new(
            "--value",
            "no values given (use --value NAME=EXPR, a [character] or [map] table, or --random)",
        ));
    }

    let mut values = BTreeMap::new();
    for (name, expr, location) in &entries {
        let m = spec
            .parse_monomial(name)
            .map_err(|e| ConfigError::new(location, e.to_string()))?;
        if m.is_one() {
            return Err(ConfigError::new(location, "the value on 1 is fixed to 1"));
        }
        if m.degree() > spec.truncation() {
            return Err(ConfigError::new(
                location,
                format!("degree {} exceeds truncation degree {}", m.degree(), spec.truncation()),
            ));
        }
        if !on_monomials && m.generators().len() != 1 {
            return Err(ConfigError::new(
                location,
                format!("`{name}` is not a generator; character values are given on generators (use --map for arbitrary monomials)"),
            ));
        }
        values.insert(m, parse_value(expr, location)?);
    }

    let map = if on_monomials {
        UnitalLinMap::new(spec.clone(), kind, values).map_err(|e| ConfigError::new("values", e.to_string()))?
    } else {
        let gens = (0..spec.generators().len())
            .map(|i| values.remove(&spec.generator(i)).unwrap_or_else(|| AlgebraElement::zero(kind)))
            .collect();
        Character::new(spec.clone(), kind, gens)
            .map_err(|e| ConfigError::new("values", e.to_string()))?
            .to_lin_map()
    };
    Ok(MapInput {
        spec,
        kind: if on_monomials { InputKind::Map } else { InputKind::Character },
        map,
    })
}

fn diffeo_task(src: &Source, args: &DiffeoArgs) -> Result<Task, ConfigError> {
    let section = src.file.diffeo.as_ref();
    let split = split(src, args.split.as_deref(), "--split")?;
    let route = match (&args.route, section.and_then(|d| d.route.clone())) {
        (Some(r), _) => parse_route(r, "--route")?,
        (None, Some(r)) => parse_route(&r, &src.at("diffeo.route"))?,
        (None, None) => BrbRoute::Closed,
    };
    let check_oracle = args.check_oracle || src.file.check_oracle.unwrap_or(false);
    let (order, order_loc) = match (args.order, section.and_then(|d| d.order)) {
        (Some(o), _) => (o, "--order".to_string()),
        (None, Some(o)) => (o, src.at("diffeo.order")),
        (None, None) => return Err(ConfigError::new("--order", "series order is required")),
    };
    if order < 2 {
        return Err(ConfigError::new(order_loc, "series order must be at least 2"));
    }
    let random = args.random || src.file.random.unwrap_or(false);
    let diffeo = if random {
        Sampler::new(args.seed.or(src.file.seed).unwrap_or(DEFAULT_SEED)).diffeo(order)
    } else {
        let mut entries: Vec<(usize, String, String)> = Vec::new();
        if let Some(list) = section.and_then(|d| d.coefficients.as_ref()) {
            for (i, (n, v)) in list.iter().enumerate() {
                entries.push((*n, v.clone(), src.at(&format!("diffeo.coefficients[{i}]"))));
            }
        }
        for raw in &args.coefficients {
            let (k, v) = split_assignment(raw, "--coeff")?;
            let location = format!("--coeff {raw}");
            let n: usize = k
                .parse()
                .map_err(|_| ConfigError::new(&location, format!("`{k}` is not a power of x")))?;
            entries.push((n, v, location));
        }
        let mut coefficients = Vec::new();
        for (n, expr, location) in &entries {
            if *n < 2 || *n > order {
                return Err(ConfigError::new(
                    location,
                    format!("power x^{n} outside 2..={order}"),
                ));
            }
            coefficients.push((*n, parse_value(expr, location)?));
        }
        FormalDiffeo::new(order, BasisKind::Laurent, coefficients).map_err(|e| ConfigError::new("--coeff", e.to_string()))?
    };
    Ok(Task::Diffeo {
        diffeo,
        random,
        split,
        route,
        check_oracle,
    })
}

fn parse_route(s: &str, location: &str) -> Result<BrbRoute, ConfigError> {
    match s {
        "closed" => Ok(BrbRoute::Closed),
        "recursive" => Ok(BrbRoute::Recursive),
        other => Err(ConfigError::new(
            location,
            format!("unknown route `{other}` (expected closed or recursive)"),
        )),
    }
}
