use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Color, ColoredGraph};
use crate::hypergraph::Vertex;

/// White vertex attached by a rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub id: Vertex,
    pub neighbors: Vec<Vertex>,
}

/// One logged rule application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleApplication {
    pub rule: u8,
    pub centers: Vec<Vertex>,
    pub removed: Vec<Vertex>,
    pub recolored: Vec<Vertex>,
    pub added: Vec<Gadget>,
}

impl RuleApplication {
    /// Number of vertices this application adds.
    pub fn growth(&self) -> usize {
        self.added.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {step}: vertex {vertex} is not in the graph")]
    MissingVertex { step: usize, vertex: Vertex },
    #[error("step {step}: vertex {vertex} is already white")]
    AlreadyWhite { step: usize, vertex: Vertex },
    #[error("step {step}: gadget id {id} is out of sequence, expected {expected}")]
    GadgetId { step: usize, id: Vertex, expected: Vertex },
}

impl ColoredGraph {
    /// Applies a logged step, checking that it makes sense on this graph.
    pub fn replay_step(&mut self, app: &RuleApplication) -> Result<(), ReplayError> {
        let step = self.applied;
        for &v in app.removed.iter().chain(&app.recolored) {
            if !self.graph.contains(v) {
                return Err(ReplayError::MissingVertex { step, vertex: v });
            }
        }
        for &v in app.added.iter().flat_map(|g| &g.neighbors) {
            if !self.graph.contains(v) || app.removed.contains(&v) {
                return Err(ReplayError::MissingVertex { step, vertex: v });
            }
        }
        for &v in &app.recolored {
            if !self.is_black(v) {
                return Err(ReplayError::AlreadyWhite { step, vertex: v });
            }
        }
        for (expected, g) in (self.next_id..).zip(&app.added) {
            if g.id != expected {
                return Err(ReplayError::GadgetId { step, id: g.id, expected });
            }
        }
        self.commit(app);
        Ok(())
    }

    /// Applies `app` without checks.
    pub(crate) fn commit(&mut self, app: &RuleApplication) {
        for &v in &app.recolored {
            self.color.insert(v, Color::White);
        }
        for &v in &app.removed {
            self.remove(v);
        }
        for g in &app.added {
            self.add_gadget(g.id, &g.neighbors);
        }
        self.applied += 1;
    }
}

/// Ordered log of rule applications, replayable from the initial graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<RuleApplication>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn replay(&self, start: &ColoredGraph) -> Result<ColoredGraph, ReplayError> {
        let mut cg = start.clone();
        for app in &self.steps {
            cg.replay_step(app)?;
        }
        Ok(cg)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, key: &str, items: &[Vertex]) -> fmt::Result {
    write!(f, " {key}=")?;
    if items.is_empty() {
        return f.write_str("-");
    }
    let parts: Vec<String> = items.iter().map(Vertex::to_string).collect();
    f.write_str(&parts.join(","))
}

impl fmt::Display for RuleApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule={}", self.rule)?;
        write_list(f, "centers", &self.centers)?;
        write_list(f, "removed", &self.removed)?;
        write_list(f, "recolored", &self.recolored)?;
        f.write_str(" added=")?;
        if self.added.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self
            .added
            .iter()
            .map(|g| {
                let nbrs: Vec<String> = g.neighbors.iter().map(Vertex::to_string).collect();
                format!("{}:{}", g.id, nbrs.join("+"))
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// One line per application:
/// `rule=2 centers=5 removed=0,7 recolored=- added=12:5`.
impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for app in &self.steps {
            writeln!(f, "{app}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace line {line}: {message}")]
pub struct TraceParseError {
    pub line: usize,
    pub message: String,
}

fn parse_list(text: &str) -> Result<Vec<Vertex>, String> {
    if text == "-" {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| t.parse().map_err(|_| format!("bad vertex {t:?}"))).collect()
}

fn parse_gadgets(text: &str) -> Result<Vec<Gadget>, String> {
    if text == "-" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|g| {
            let (id, nbrs) = g.split_once(':').ok_or_else(|| format!("bad gadget {g:?}"))?;
            let id = id.parse().map_err(|_| format!("bad gadget id {id:?}"))?;
            let neighbors =
                nbrs.split('+').map(|t| t.parse().map_err(|_| format!("bad vertex {t:?}"))).collect::<Result<_, _>>()?;
            Ok(Gadget { id, neighbors })
        })
        .collect()
}

impl FromStr for RuleApplication {
    type Err = String;

    fn from_str(line: &str) -> Result<Self, String> {
        let mut fields = [None; 5];
        const KEYS: [&str; 5] = ["rule", "centers", "removed", "recolored", "added"];
        for token in line.split_whitespace() {
            let (key, value) = token.split_once('=').ok_or_else(|| format!("expected key=value, got {token:?}"))?;
            let slot = KEYS.iter().position(|k| *k == key).ok_or_else(|| format!("unknown key {key:?}"))?;
            if fields[slot].replace(value).is_some() {
                return Err(format!("repeated key {key:?}"));
            }
        }
        let get = |i: usize| fields[i].ok_or_else(|| format!("missing {}", KEYS[i]));
        Ok(RuleApplication {
            rule: get(0)?.parse().map_err(|_| "bad rule id".to_string())?,
            centers: parse_list(get(1)?)?,
            removed: parse_list(get(2)?)?,
            recolored: parse_list(get(3)?)?,
            added: parse_gadgets(get(4)?)?,
        })
    }
}

impl FromStr for ReductionTrace {
    type Err = TraceParseError;

    fn from_str(text: &str) -> Result<Self, TraceParseError> {
        let mut steps = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            steps.push(line.parse().map_err(|message| TraceParseError { line: i + 1, message })?);
        }
        Ok(ReductionTrace { steps })
    }
}
