//! Job parsing, execution and report assembly behind the `quiverdt` binary.

mod report;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

use quiverdt_core::{DimVector, Error, QuiverMatrix};

pub use report::{render, run, Checks, Report, Row};

/// Exit status of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    InvalidInput = 1,
    Consistency = 2,
    Positivity = 3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Dt,
    Normalized,
    AtOne,
    Breakdiv,
    ReconstructCheck,
    EfimovCheck,
    HilbertCheck,
    ClosedForms,
}

impl Task {
    pub const ALL: [Task; 8] = [
        Task::Dt,
        Task::Normalized,
        Task::AtOne,
        Task::Breakdiv,
        Task::ReconstructCheck,
        Task::EfimovCheck,
        Task::HilbertCheck,
        Task::ClosedForms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::Dt => "dt",
            Task::Normalized => "normalized",
            Task::AtOne => "at_one",
            Task::Breakdiv => "breakdiv",
            Task::ReconstructCheck => "reconstruct_check",
            Task::EfimovCheck => "efimov_check",
            Task::HilbertCheck => "hilbert_check",
            Task::ClosedForms => "closed_forms",
        }
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown task {s:?}"))
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses `a,b,c`.
pub fn parse_tasks(s: &str) -> Result<BTreeSet<Task>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(Task::from_str)
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

/// Either a componentwise box or a bound on the total degree.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Bound {
    Box(Vec<u32>),
    Total { total: u32 },
}

impl FromStr for Bound {
    type Err = String;

    /// `2,3` is a box; `total:4` bounds the total degree.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(t) = s.strip_prefix("total:") {
            let total = t
                .trim()
                .parse()
                .map_err(|_| format!("bad total degree {t:?}"))?;
            return Ok(Bound::Total { total });
        }
        s.split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("bad bound component {c:?}"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Bound::Box)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputFile {
    matrix: Vec<Vec<i64>>,
    bound: Bound,
    #[serde(default)]
    tasks: Option<Vec<Task>>,
}

/// A validated job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub matrix: QuiverMatrix,
    pub bound: Bound,
    pub tasks: BTreeSet<Task>,
    pub format: Format,
    pub strict: bool,
}

/// Tasks run when neither the file nor the command line names any.
pub const DEFAULT_TASKS: [Task; 2] = [Task::Dt, Task::Normalized];

impl JobSpec {
    /// Parses the JSON input file; command-line overrides are applied by
    /// the caller.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let input: InputFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("input file: {e}")))?;
        let matrix = QuiverMatrix::new(&input.matrix)?;
        let tasks = match input.tasks {
            Some(t) => t.into_iter().collect(),
            None => DEFAULT_TASKS.into_iter().collect(),
        };
        let job = Self {
            matrix,
            bound: input.bound,
            tasks,
            format: Format::Json,
            strict: false,
        };
        job.validate()?;
        Ok(job)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if let Bound::Box(b) = &self.bound {
            if b.len() != self.matrix.n() {
                return Err(Error::InvalidInput(format!(
                    "bound has {} components but the matrix is {}x{}",
                    b.len(),
                    self.matrix.n(),
                    self.matrix.n()
                )));
            }
        }
        Ok(())
    }

    /// The box the computation runs on.
    pub fn box_bound(&self) -> DimVector {
        match &self.bound {
            Bound::Box(b) => DimVector::new(b.clone()),
            Bound::Total { total } => DimVector::new(vec![*total; self.matrix.n()]),
        }
    }

    /// Whether `d` is reported.
    pub fn reports(&self, d: &DimVector) -> bool {
        match &self.bound {
            Bound::Box(_) => true,
            Bound::Total { total } => d.total() <= *total,
        }
    }
}
