//! Textual graph recipes: a compact, canonical notation for how a graph was
//! constructed, recorded in certificate provenance so that replays can
//! rebuild the exact graph from its description alone.
//!
//! Grammar: `base` optionally followed by `|transform` stages, applied left
//! to right. Bases: `cycle:n`, `complete:n`, `empty:n`, `paley:q`,
//! `turan:n,r`, `random_regular:n,d,s,seed[,attempts]`, `file:path`.
//! Transforms: `blowup:t`, `random_blowup:n,seed`, `complement`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::persist;

// ==================================================================
// recipe grammar
// ==================================================================

/// The initial construction stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseRecipe {
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Paley(usize),
    Turan(usize, usize),
    RandomRegular {
        n: usize,
        d: usize,
        s: usize,
        seed: u64,
        attempts: u64,
    },
    /// Loads a graph file. Replays of recipes built on a file depend on
    /// that file still being present and unchanged.
    File(PathBuf),
}

/// A rescaling or rewiring stage applied after the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    Blowup(usize),
    RandomBlowup { target_n: usize, seed: u64 },
    Complement,
}

/// A full construction pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRecipe {
    pub base: BaseRecipe,
    pub transforms: Vec<Transform>,
}

const DEFAULT_SAMPLER_ATTEMPTS: u64 = 1000;

fn num<T: FromStr>(spec: &str, field: &str, raw: &str) -> Result<T> {
    raw.trim().parse().map_err(|_| {
        Error::Recipe(format!("recipe {spec:?}: {field} {raw:?} is not a number"))
    })
}

fn split_args(spec: &str, args: &str, min: usize, max: usize) -> Result<Vec<String>> {
    let parts: Vec<String> = args.split(',').map(|p| p.trim().to_string()).collect();
    if parts.len() < min || parts.len() > max || parts.iter().any(String::is_empty) {
        return Err(Error::Recipe(format!(
            "recipe {spec:?}: expected {min}..={max} comma-separated arguments"
        )));
    }
    Ok(parts)
}

impl BaseRecipe {
    fn parse(stage: &str) -> Result<BaseRecipe> {
        let (name, args) = match stage.split_once(':') {
            Some((n, a)) => (n.trim(), a.trim()),
            None => (stage.trim(), ""),
        };
        match name {
            "cycle" | "complete" | "empty" | "paley" => {
                let a = split_args(stage, args, 1, 1)?;
                let n = num(stage, "size", &a[0])?;
                Ok(match name {
                    "cycle" => BaseRecipe::Cycle(n),
                    "complete" => BaseRecipe::Complete(n),
                    "empty" => BaseRecipe::Empty(n),
                    _ => BaseRecipe::Paley(n),
                })
            }
            "turan" => {
                let a = split_args(stage, args, 2, 2)?;
                Ok(BaseRecipe::Turan(
                    num(stage, "size", &a[0])?,
                    num(stage, "part count", &a[1])?,
                ))
            }
            "random_regular" => {
                let a = split_args(stage, args, 4, 5)?;
                Ok(BaseRecipe::RandomRegular {
                    n: num(stage, "size", &a[0])?,
                    d: num(stage, "degree", &a[1])?,
                    s: num(stage, "forbidden clique", &a[2])?,
                    seed: num(stage, "seed", &a[3])?,
                    attempts: match a.get(4) {
                        Some(raw) => num(stage, "attempts", raw)?,
                        None => DEFAULT_SAMPLER_ATTEMPTS,
                    },
                })
            }
            "file" => {
                if args.is_empty() {
                    return Err(Error::Recipe(format!("recipe {stage:?}: missing path")));
                }
                Ok(BaseRecipe::File(PathBuf::from(args)))
            }
            other => Err(Error::Recipe(format!("unknown graph family {other:?}"))),
        }
    }

    fn build(&self) -> Result<Graph> {
        match self {
            BaseRecipe::Cycle(n) => families::cycle(*n),
            BaseRecipe::Complete(n) => families::complete(*n),
            BaseRecipe::Empty(n) => families::edgeless(*n),
            BaseRecipe::Paley(q) => families::paley(*q),
            BaseRecipe::Turan(n, r) => families::turan(*n, *r),
            BaseRecipe::RandomRegular {
                n,
                d,
                s,
                seed,
                attempts,
            } => families::random_regular_ks_free(*n, *d, *s, *seed, *attempts),
            BaseRecipe::File(path) => persist::read_graph(path),
        }
    }
}

impl fmt::Display for BaseRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRecipe::Cycle(n) => write!(f, "cycle:{n}"),
            BaseRecipe::Complete(n) => write!(f, "complete:{n}"),
            BaseRecipe::Empty(n) => write!(f, "empty:{n}"),
            BaseRecipe::Paley(q) => write!(f, "paley:{q}"),
            BaseRecipe::Turan(n, r) => write!(f, "turan:{n},{r}"),
            BaseRecipe::RandomRegular {
                n,
                d,
                s,
                seed,
                attempts,
            } => write!(f, "random_regular:{n},{d},{s},{seed},{attempts}"),
            BaseRecipe::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl Transform {
    fn parse(stage: &str) -> Result<Transform> {
        let (name, args) = match stage.split_once(':') {
            Some((n, a)) => (n.trim(), a.trim()),
            None => (stage.trim(), ""),
        };
        match name {
            "complement" => {
                if !args.is_empty() {
                    return Err(Error::Recipe(format!(
                        "recipe {stage:?}: complement takes no arguments"
                    )));
                }
                Ok(Transform::Complement)
            }
            "blowup" => {
                let a = split_args(stage, args, 1, 1)?;
                Ok(Transform::Blowup(num(stage, "factor", &a[0])?))
            }
            "random_blowup" => {
                let a = split_args(stage, args, 2, 2)?;
                Ok(Transform::RandomBlowup {
                    target_n: num(stage, "target size", &a[0])?,
                    seed: num(stage, "seed", &a[1])?,
                })
            }
            other => Err(Error::Recipe(format!("unknown transform {other:?}"))),
        }
    }

    fn apply(&self, g: &Graph) -> Result<Graph> {
        match self {
            Transform::Blowup(t) => Ok(families::balanced_blowup(g, *t)?.0),
            Transform::RandomBlowup { target_n, seed } => {
                Ok(families::random_blowup(g, *target_n, *seed)?.0)
            }
            Transform::Complement => Ok(g.complement()),
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::Blowup(t) => write!(f, "blowup:{t}"),
            Transform::RandomBlowup { target_n, seed } => {
                write!(f, "random_blowup:{target_n},{seed}")
            }
            Transform::Complement => write!(f, "complement"),
        }
    }
}

impl FromStr for GraphRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphRecipe> {
        let mut stages = s.split('|');
        let base = BaseRecipe::parse(
            stages
                .next()
                .filter(|p| !p.trim().is_empty())
                .ok_or_else(|| Error::Recipe("empty recipe".into()))?,
        )?;
        let transforms = stages.map(Transform::parse).collect::<Result<_>>()?;
        Ok(GraphRecipe { base, transforms })
    }
}

impl fmt::Display for GraphRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for t in &self.transforms {
            write!(f, "|{t}")?;
        }
        Ok(())
    }
}

impl GraphRecipe {
    /// Runs the pipeline and returns the finished graph.
    pub fn build(&self) -> Result<Graph> {
        let mut g = self.base.build()?;
        for t in &self.transforms {
            g = t.apply(&g)?;
        }
        Ok(g)
    }

    /// Parses and builds in one step.
    pub fn build_str(s: &str) -> Result<Graph> {
        s.parse::<GraphRecipe>()?.build()
    }
}
