//! Acceptance criteria 1–9 on the full desk-scale grid.  Every criterion is
//! an exact identity check (no floating-point tolerance anywhere): a
//! criterion passes only when every individual check returns exact equality.

use std::io::Write;

use grpn_cli::acceptance::{run_criterion, Scale};

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for id in 1..=9 {
        let r = run_criterion(id, Scale::Desk);
        // written to the process stdout directly so the lines are visible
        // even when the harness captures test output
        let mut out = std::io::stdout().lock();
        writeln!(out, "{}", r.line()).expect("write to stdout");
        out.flush().expect("flush stdout");
        if !r.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
