use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use quiverdt_core::break_divisors::count_break_divisor_orbits;
use quiverdt_core::coha::hilbert_series_check;
use quiverdt_core::dt::{
    check_efimov, finite_case_dt, kronecker_dt, loop_dt_at_one, nonvanishing, reconstruct_series,
    FiniteCase,
};
use quiverdt_core::{extract_dt, BigRational, DimVector, DtEntry, DtTable, Error, QuiverMatrix};

use crate::{Format, JobSpec, Status, Task};

/// Orbit counting enumerates vertex subsets of the covering graph, so it is
/// only attempted up to this many vertices (`|d|`).
pub const BREAKDIV_MAX_VERTICES: u32 = 8;

/// Cohomological-degree cutoff of the Hilbert-series comparison.
pub const HILBERT_CUTOFF: i64 = 20;

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub d: Vec<u32>,
    pub dt_y: String,
    pub dt_q: String,
    pub normalized_q: String,
    /// `[k, c]` with `c` an exact rational in decimal form; `null` when the
    /// invariant is not a Laurent polynomial.
    pub coeffs: Option<Vec<(i64, String)>>,
    pub polynomial: bool,
    pub nonnegative: bool,
    pub at_one: Option<String>,
    pub breakdiv_orbits: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub status: &'static str,
    pub checked: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl CheckResult {
    fn from_failures(checked: usize, failures: Vec<String>) -> Self {
        Self {
            status: if failures.is_empty() { "pass" } else { "fail" },
            checked,
            failures,
            reason: None,
        }
    }

    fn skipped(reason: &str) -> Self {
        Self {
            status: "skipped",
            checked: 0,
            failures: Vec::new(),
            reason: Some(reason.to_string()),
        }
    }

    fn failed(&self) -> bool {
        self.status == "fail"
    }
}

/// Check results keyed by task name.
pub type Checks = BTreeMap<&'static str, CheckResult>;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub matrix: Vec<Vec<u32>>,
    pub symmetric: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub nonsymmetric: bool,
    pub rows: Vec<Row>,
    pub checks: Checks,
    #[serde(skip)]
    pub status: Status,
    /// Messages for standard error.
    #[serde(skip)]
    pub diagnostics: Vec<String>,
}

fn d_string(d: &DimVector) -> String {
    d.to_string()
}

fn build_row(job: &JobSpec, e: &DtEntry) -> Row {
    let a = &job.matrix;
    let at_one = job
        .tasks
        .contains(&Task::AtOne)
        .then(|| e.at_one().ok().map(|v| v.to_string()))
        .flatten();
    let breakdiv_orbits = (job.tasks.contains(&Task::Breakdiv)
        && a.is_symmetric()
        && a.has_enough_loops()
        && e.d.total() <= BREAKDIV_MAX_VERTICES)
        .then(|| count_break_divisor_orbits(a, &e.d).ok())
        .flatten();
    Row {
        d: e.d.components().to_vec(),
        dt_y: e.raw.to_y_string(),
        dt_q: e.raw.to_q_string(),
        normalized_q: e.normalized.to_q_string(),
        coeffs: e
            .coeffs
            .as_ref()
            .map(|cs| cs.iter().map(|(k, c)| (*k, c.to_string())).collect()),
        polynomial: e.is_polynomial,
        nonnegative: e.is_nonnegative,
        at_one,
        breakdiv_orbits,
    }
}

fn reconstruct_check(job: &JobSpec, table: &DtTable) -> Result<CheckResult, Error> {
    let b = job.box_bound();
    match reconstruct_series(&job.matrix, table, &b) {
        Ok(_) => Ok(CheckResult::from_failures(b.sub_box().len(), Vec::new())),
        Err(Error::ReconstructionMismatch(d)) => Ok(CheckResult::from_failures(
            b.sub_box().len(),
            vec![format!("product form differs from P_A at {}", d_string(&d))],
        )),
        Err(e) => Err(e),
    }
}

fn efimov_violations(job: &JobSpec, table: &DtTable) -> Result<CheckResult, Error> {
    let verdicts = check_efimov(table)?;
    let failures = verdicts
        .iter()
        .filter(|(d, ok)| !**ok && job.reports(d))
        .map(|(d, _)| format!("normalized DT at {} is not in N[y]", d_string(d)))
        .collect();
    Ok(CheckResult::from_failures(verdicts.len(), failures))
}

fn hilbert_check(job: &JobSpec, rows: &[DimVector]) -> Result<CheckResult, Error> {
    let mut failures = Vec::new();
    let zero = DimVector::zero(job.matrix.n());
    let ds: Vec<&DimVector> = std::iter::once(&zero).chain(rows).collect();
    for d in &ds {
        if !hilbert_series_check(&job.matrix, d, HILBERT_CUTOFF)? {
            failures.push(format!("Hilbert series differs at {}", d_string(d)));
        }
    }
    Ok(CheckResult::from_failures(ds.len(), failures))
}

/// Kronecker parameter `m` of `[[0,m],[m,0]]`.
fn kronecker_parameter(a: &QuiverMatrix) -> Option<u32> {
    (a.n() == 2
        && a.entry(0, 0) == 0
        && a.entry(1, 1) == 0
        && a.entry(0, 1) == a.entry(1, 0)
        && a.entry(0, 1) > 0)
        .then(|| a.entry(0, 1))
}

fn closed_forms_check(job: &JobSpec, table: &DtTable) -> Result<CheckResult, Error> {
    let a = &job.matrix;
    let entries: Vec<&DtEntry> = table.entries().filter(|e| job.reports(&e.d)).collect();
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut compare = |what: &str, d: &DimVector, got: String, want: String| {
        checked += 1;
        if got != want {
            failures.push(format!(
                "{what} at {}: computed {got}, closed form {want}",
                d_string(d)
            ));
        }
    };
    if let Some(case) = FiniteCase::detect(a) {
        for e in &entries {
            compare(
                "finite table",
                &e.d,
                e.raw.to_y_string(),
                finite_case_dt(case, &e.d).to_y_string(),
            );
        }
    }
    if let Some(m) = kronecker_parameter(a) {
        for e in &entries {
            let c = e.d.components();
            let k = match (c[0], c[1]) {
                (1, k) | (k, 1) => k,
                _ => continue,
            };
            compare(
                "Kronecker formula",
                &e.d,
                e.raw.to_y_string(),
                kronecker_dt(m, k).to_y_string(),
            );
        }
    }
    if a.n() == 1 && a.entry(0, 0) >= 2 {
        let m = a.entry(0, 0);
        for e in &entries {
            let want = loop_dt_at_one(m, e.d.components()[0])?;
            let got = e.at_one()?;
            compare(
                "loop formula at q=1",
                &e.d,
                got.to_string(),
                want.to_string(),
            );
        }
    }
    let qualifies = a.is_symmetric() && a.is_indecomposable() && FiniteCase::detect(a).is_none();
    if qualifies {
        for e in entries.iter().filter(|e| !e.d.components().contains(&0)) {
            let predicted = nonvanishing(a, &e.d)?;
            compare(
                "non-vanishing criterion",
                &e.d,
                (!e.raw.is_zero()).to_string(),
                predicted.to_string(),
            );
        }
    }
    if checked == 0 {
        return Ok(CheckResult::skipped(
            "no closed form applies to this matrix",
        ));
    }
    Ok(CheckResult::from_failures(checked, failures))
}

fn breakdiv_check(rows: &[Row], table: &DtTable) -> CheckResult {
    let mut checked = 0;
    let mut failures = Vec::new();
    for r in rows {
        let Some(count) = r.breakdiv_orbits else {
            continue;
        };
        let d = DimVector::new(r.d.clone());
        let Ok(at_one) = table.get(&d).expect("row comes from the table").at_one() else {
            continue;
        };
        checked += 1;
        if at_one != BigRational::from_integer(count.into()) {
            failures.push(format!(
                "{} orbits at {} but normalized DT(1) = {at_one}",
                count,
                d_string(&d)
            ));
        }
    }
    CheckResult::from_failures(checked, failures)
}

/// Runs a validated job. `Err` means invalid input (exit 1); every other
/// outcome is a report carrying its exit status.
pub fn run(job: &JobSpec) -> Result<Report, Error> {
    job.validate()?;
    let a = &job.matrix;
    let symmetric = a.is_symmetric();
    let table = extract_dt(a, &job.box_bound())?;
    let rows: Vec<Row> = table
        .entries()
        .filter(|e| job.reports(&e.d))
        .map(|e| build_row(job, e))
        .collect();
    let row_ds: Vec<DimVector> = rows.iter().map(|r| DimVector::new(r.d.clone())).collect();

    let mut report = Report {
        matrix: a.rows(),
        symmetric,
        nonsymmetric: !symmetric,
        rows,
        checks: Checks::new(),
        status: Status::Ok,
        diagnostics: Vec::new(),
    };
    if !symmetric {
        report
            .diagnostics
            .push("warning: matrix is not symmetric; positivity checks are disabled".into());
    }

    let mut consistency = false;
    let mut record = |report: &mut Report,
                      name: &'static str,
                      r: Result<CheckResult, Error>|
     -> Result<(), Error> {
        match r {
            Ok(c) => {
                if c.failed() {
                    report
                        .diagnostics
                        .extend(c.failures.iter().map(|f| format!("{name}: {f}")));
                }
                report.checks.insert(name, c);
                Ok(())
            }
            Err(e) if e.is_consistency_failure() => {
                consistency = true;
                report.diagnostics.push(format!("{name}: {e}"));
                report
                    .checks
                    .insert(name, CheckResult::from_failures(0, vec![e.to_string()]));
                Ok(())
            }
            Err(e) => Err(e),
        }
    };

    for task in &job.tasks {
        let name = task.name();
        let result = match task {
            Task::Dt | Task::Normalized | Task::AtOne => continue,
            Task::Breakdiv => {
                if !symmetric {
                    Ok(CheckResult::skipped("matrix is not symmetric"))
                } else if !a.has_enough_loops() {
                    Ok(CheckResult::skipped("some vertex has no loop"))
                } else {
                    Ok(breakdiv_check(&report.rows, &table))
                }
            }
            Task::ReconstructCheck => reconstruct_check(job, &table),
            Task::EfimovCheck if !symmetric => Ok(CheckResult::skipped("matrix is not symmetric")),
            Task::EfimovCheck => efimov_violations(job, &table),
            Task::HilbertCheck if !symmetric => Ok(CheckResult::skipped("matrix is not symmetric")),
            Task::HilbertCheck => hilbert_check(job, &row_ds),
            Task::ClosedForms => closed_forms_check(job, &table),
        };
        record(&mut report, name, result)?;
    }

    let failed_consistency = consistency
        || [
            "reconstruct_check",
            "hilbert_check",
            "closed_forms",
            "breakdiv",
        ]
        .iter()
        .any(|k| report.checks.get(k).is_some_and(CheckResult::failed));
    report.status = final_status(failed_consistency, symmetric && job.strict, &report.rows);
    if report.status == Status::Positivity {
        report
            .diagnostics
            .push("strict: a normalized invariant is not in N[y]".into());
    }
    Ok(report)
}

/// Consistency failures take precedence over positivity violations, which
/// only count when `enforce_positivity` is set.
fn final_status(failed_consistency: bool, enforce_positivity: bool, rows: &[Row]) -> Status {
    if failed_consistency {
        Status::Consistency
    } else if enforce_positivity && rows.iter().any(|r| !r.nonnegative) {
        Status::Positivity
    } else {
        Status::Ok
    }
}

fn tsv_cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// Renders the report; both formats end with a newline.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut s = String::new();
            let matrix: Vec<String> = report.matrix.iter().map(|r| format!("{r:?}")).collect();
            let _ = writeln!(
                s,
                "# matrix [{}] symmetric={}",
                matrix.join(","),
                report.symmetric
            );
            s.push_str(
                "d\tdt_y\tdt_q\tnormalized_q\tpolynomial\tnonnegative\tat_one\tbreakdiv_orbits\n",
            );
            for r in &report.rows {
                let d: Vec<String> = r.d.iter().map(u32::to_string).collect();
                let _ = writeln!(
                    s,
                    "({})\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    d.join(","),
                    r.dt_y,
                    r.dt_q,
                    r.normalized_q,
                    r.polynomial,
                    r.nonnegative,
                    tsv_cell(&r.at_one),
                    tsv_cell(&r.breakdiv_orbits),
                );
            }
            for (name, c) in &report.checks {
                let _ = writeln!(s, "# check {name}: {} ({} checked)", c.status, c.checked);
                for f in &c.failures {
                    let _ = writeln!(s, "#   {f}");
                }
                if let Some(r) = &c.reason {
                    let _ = writeln!(s, "#   {r}");
                }
            }
            s
        }
    }
}
