//! Command-line front end for the `fibprod` library.

pub mod config;
pub mod report;

use fibprod::catalog::DEFAULT_PARAM_LIMIT;
use fibprod::engine::{grid_jobs, Engine, GridJob, GridOutcome, SPECIAL_EVALUATIONS};
use fibprod::{IdentityId, Params};
use serde::Serialize;

pub use config::{parse_args, Command, Format, ModeArg, ParseOutcome, RunConfig};
pub use report::{emit_catalog, emit_report, ExactParts, ReportRow};

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    /// Written to stdout.
    pub document: String,
    /// Warnings and failure reasons, written to stderr.
    pub diagnostics: Vec<String>,
    pub rows: Vec<ReportRow>,
    pub exit_code: u8,
}

pub fn run(config: &RunConfig) -> RunOutput {
    let engine = Engine::default();
    let mut diagnostics = range_warnings(config);
    match config.command {
        Command::List => RunOutput { document: emit_catalog(config.format), diagnostics, rows: Vec::new(), exit_code: 0 },
        Command::Eval => eval(&engine, config, diagnostics),
        Command::Verify | Command::Grid | Command::Special => {
            let outcomes = engine.run_grid(jobs(config));
            let rows: Vec<ReportRow> = outcomes.iter().map(|o| row(o, config)).collect();
            for r in rows.iter().filter(|r| !r.passed) {
                let reason = r.reason.as_deref().unwrap_or("check failed");
                diagnostics.push(format!("{} {} N={} {}: {reason}", r.id, r.params(), r.n_terms, r.mode));
            }
            let exit_code = if rows.iter().all(|r| r.passed) { 0 } else { 1 };
            RunOutput { document: emit_report(&rows, config.format), diagnostics, rows, exit_code }
        }
    }
}

fn range_warnings(config: &RunConfig) -> Vec<String> {
    let mut out = Vec::new();
    if config.params.is_some_and(|p| p.beyond_default_range()) {
        out.push(format!("warning: parameters above {DEFAULT_PARAM_LIMIT} produce very large exact values"));
    }
    if config.command == Command::Grid
        && config.n_max.unwrap_or(1).max(config.q_max.unwrap_or(1)) > DEFAULT_PARAM_LIMIT
    {
        out.push(format!("warning: grid bounds above {DEFAULT_PARAM_LIMIT} produce very large exact values"));
    }
    out
}

fn jobs(config: &RunConfig) -> Vec<GridJob> {
    let modes = config.mode.modes();
    let cell = |id: IdentityId, params: Params| {
        modes.iter().map(move |&mode| GridJob { id, params, n_terms: config.terms, mode })
    };
    match config.command {
        Command::Verify => {
            let (id, params) = (config.identity.expect("validated"), config.params.expect("validated"));
            cell(id, params).collect()
        }
        Command::Grid => {
            let (n_max, q_max) = (config.n_max.expect("validated"), config.q_max.expect("validated"));
            grid_jobs(n_max, q_max, config.terms, modes)
                .expect("validated bounds")
                .into_iter()
                .filter(|j| config.identity.is_none_or(|id| id == j.id))
                .collect()
        }
        Command::Special => {
            let params = Params::new(1, 1).expect("positive");
            SPECIAL_EVALUATIONS
                .iter()
                .flat_map(|(label, _)| cell(label.parse().expect("catalog label"), params))
                .collect()
        }
        Command::List | Command::Eval => Vec::new(),
    }
}

fn row(outcome: &GridOutcome, config: &RunConfig) -> ReportRow {
    match &outcome.result {
        Ok(report) => ReportRow::from_report(report, config.digits, config.timing),
        Err(e) => ReportRow::from_error(outcome.job, e, config.digits),
    }
}

#[derive(Serialize)]
struct EvalRecord {
    id: IdentityId,
    n: u32,
    q: u32,
    #[serde(rename = "N")]
    n_terms: u64,
    digits: u32,
    value: String,
    exact: ExactParts,
}

fn eval(engine: &Engine, config: &RunConfig, mut diagnostics: Vec<String>) -> RunOutput {
    let (id, params) = (config.identity.expect("validated"), config.params.expect("validated"));
    let value = match engine.partial_product(id, params, config.terms) {
        Ok(v) => v,
        Err(e) => {
            diagnostics.push(format!("error: {e}"));
            return RunOutput { document: String::new(), diagnostics, rows: Vec::new(), exit_code: 1 };
        }
    };
    let record = EvalRecord {
        id,
        n: params.n,
        q: params.q,
        n_terms: config.terms,
        digits: config.digits,
        value: value.to_decimal(config.digits),
        exact: ExactParts::from(&value),
    };
    let document = match config.format {
        Format::Text => format!("{}\n", record.value),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&record).expect("record serializes")),
        Format::Csv => format!(
            "id,n,q,N,digits,value\n{},{},{},{},{},{}\n",
            record.id, record.n, record.q, record.n_terms, record.digits, record.value
        ),
        Format::Markdown => format!(
            "| id | n | q | N | value |\n|---|---|---|---|---|\n| {} | {} | {} | {} | {} |\n",
            record.id, record.n, record.q, record.n_terms, record.value
        ),
    };
    RunOutput { document, diagnostics, rows: Vec::new(), exit_code: 0 }
}
