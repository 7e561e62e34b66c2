//! Acceptance criteria 1-12, one PASS/FAIL line each. Exits nonzero if any
//! criterion fails.

use std::process::{Command, ExitCode};

use stern_lab::suite::{CriterionResult, CRITERIA};

fn determinism() -> CriterionResult {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_stern-lab"))
            .args(["suite", "--format", "json"])
            .env_remove("STERN_LAB_MAX_N")
            .output()
            .expect("binary runs")
    };
    let (first, second) = (run(), run());
    let reported = serde_json::from_slice::<serde_json::Value>(&first.stdout)
        .ok()
        .and_then(|v| v.as_array().map(|a| a.len()));
    let same = first.stdout == second.stdout && first.status.code() == second.status.code();
    CriterionResult {
        criterion: 12,
        name: "determinism",
        pass: same && reported == Some(11),
        detail: format!(
            "two full CLI suite runs, {} bytes each, byte-identical: {same}, criteria reported: {}",
            first.stdout.len(),
            reported.unwrap_or(0)
        ),
    }
}

fn main() -> ExitCode {
    let mut failed = Vec::new();
    let results = CRITERIA.iter().enumerate().map(|(i, check)| {
        check().unwrap_or_else(|e| CriterionResult {
            criterion: i as u32 + 1,
            name: "error",
            pass: false,
            detail: e.to_string(),
        })
    });
    for r in results.chain(std::iter::once_with(determinism)) {
        println!("{}", r.line());
        if !r.pass {
            failed.push(r.criterion.to_string());
        }
    }
    if failed.is_empty() {
        println!("acceptance: 12/12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: {}/12 criteria pass; failing: {}",
            12 - failed.len(),
            failed.join(", ")
        );
        ExitCode::FAILURE
    }
}
