use residues::verify::{run_suite, Suite, SweepConfig};
use residues::{
    count_coprime_terms, factorize, progression_residues, reduce_signed,
    solve_progression_congruence, totatives, totient, UnitGroup,
};

use crate::report::{Kind, ReportRow, Status};
use crate::CliError;

pub fn cmd_totient(n: u64, list: bool) -> Result<ReportRow, CliError> {
    let factorization = factorize(n)?;
    let mut row = ReportRow::new(Kind::TotientTable)
        .input("n", n)
        .output("phi", totient(n)?)
        .output("factorization", factorization.to_string());
    if list {
        row = row.output("totatives", totatives(n)?.parts());
    }
    Ok(row)
}

pub fn cmd_totatives(n: u64) -> Result<ReportRow, CliError> {
    let set = totatives(n)?;
    Ok(ReportRow::new(Kind::TotientTable)
        .input("n", n)
        .output("phi", set.len() as u64)
        .output("totatives", set.parts()))
}

pub fn cmd_table_phi(lo: u64, hi: u64) -> Result<Vec<ReportRow>, CliError> {
    if lo < 1 {
        return Err(CliError::Usage(
            "table-phi: lower bound must be at least 1".into(),
        ));
    }
    if lo > hi {
        return Err(CliError::Usage(format!(
            "table-phi: lower bound {lo} exceeds upper bound {hi}"
        )));
    }
    (lo..=hi)
        .map(|n| {
            Ok(ReportRow::new(Kind::TotientTable)
                .input("n", n)
                .output("phi", totient(n)?))
        })
        .collect()
}

/// `n` when `ν = φ`, otherwise `n/k` with `k = φ/ν`.
pub fn ratio_label(phi: u64, order: u64) -> String {
    match phi / order {
        1 => "n".to_string(),
        k => format!("n/{k}"),
    }
}

pub fn cmd_table_ord2(lo: u64, hi: u64) -> Result<Vec<ReportRow>, CliError> {
    if lo < 3 {
        return Err(CliError::Usage(
            "table-ord2: lower bound must be at least 3".into(),
        ));
    }
    if lo.is_multiple_of(2) || hi.is_multiple_of(2) {
        return Err(CliError::Usage(format!(
            "table-ord2: bounds must be odd, got {lo} and {hi}"
        )));
    }
    if lo > hi {
        return Err(CliError::Usage(format!(
            "table-ord2: lower bound {lo} exceeds upper bound {hi}"
        )));
    }
    (lo..=hi)
        .step_by(2)
        .map(|n| {
            let group = UnitGroup::new(n)?;
            let phi = group.totient();
            let order = group.order(2)?;
            Ok(ReportRow::new(Kind::OrderTable)
                .input("N", n)
                .output("phi", phi)
                .output("order", order)
                .output("ratio", ratio_label(phi, order)))
        })
        .collect()
}

pub fn cmd_trace(x: i128, n: u64) -> Result<ReportRow, CliError> {
    let base = reduce_signed(x, n)?;
    let trace = UnitGroup::new(n)?.trace(base)?;
    Ok(ReportRow::new(Kind::Trace)
        .input("x", x)
        .input("N", n)
        .output("order", trace.order())
        .output("cycle", trace.cycle()))
}

pub fn cmd_cosets(x: i128, n: u64) -> Result<ReportRow, CliError> {
    let base = reduce_signed(x, n)?;
    let decomposition = UnitGroup::new(n)?.cosets(base)?;
    Ok(ReportRow::new(Kind::Coset)
        .input("x", x)
        .input("N", n)
        .output("order", decomposition.order())
        .output("index", decomposition.index())
        .output("representatives", decomposition.representatives())
        .output("cosets", decomposition.cosets().to_vec()))
}

pub fn cmd_progression(a: i128, d: u64, n: u64) -> Result<ReportRow, CliError> {
    let first = reduce_signed(a, n)?;
    let trace = progression_residues(first, d, n)?;
    let coprime_terms = count_coprime_terms(first, d, n)?;
    Ok(ReportRow::new(Kind::Progression)
        .input("a", a)
        .input("d", d)
        .input("n", n)
        .output("residues", trace.residues())
        .output(
            "complete",
            if trace.is_complete_system() {
                "yes"
            } else {
                "no"
            },
        )
        .output("coprime_terms", coprime_terms))
}

pub fn cmd_solve(a: i128, d: u64, n: u64, r: i128) -> Result<ReportRow, CliError> {
    let first = reduce_signed(a, n)?;
    let target = reduce_signed(r, n)?;
    let solution = solve_progression_congruence(first, d, n, target)?;
    Ok(ReportRow::new(Kind::Congruence)
        .input("a", a)
        .input("d", d)
        .input("n", n)
        .input("r", r)
        .output("nu", solution.nu)
        .output("mu", solution.mu)
        .output("term", solution.term()))
}

/// Runs the selected suites; the flag is `true` when any violation occurred.
pub fn cmd_verify(
    max_n: u64,
    suites: &[Suite],
    seed: u64,
) -> Result<(Vec<ReportRow>, bool), CliError> {
    if max_n < 2 {
        return Err(CliError::Usage("verify: --max must be at least 2".into()));
    }
    let suites = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.to_vec()
    };
    let config = SweepConfig::new(max_n).with_seed(seed);
    let mut rows = Vec::new();
    let mut violated = false;
    for suite in suites {
        let report = run_suite(suite, &config)?;
        for v in &report.violations {
            let mut row = ReportRow::new(Kind::Verify)
                .input("theorem", suite.name())
                .input("check", v.check);
            for &(name, value) in &v.inputs {
                row = row.input(name, value);
            }
            row = row.output("witness", v.witness.clone());
            let status = match &v.error {
                Some(message) => {
                    row = row.output("error", message.clone());
                    Status::Error
                }
                None => Status::Violated,
            };
            rows.push(row.with_status(status));
        }
        violated |= !report.passed();
        rows.push(
            ReportRow::new(Kind::Verify)
                .input("theorem", suite.name())
                .input("max", max_n)
                .input("seed", seed)
                .output("cases", report.cases)
                .output("violations", report.violations.len() as u64)
                .with_status(if report.passed() {
                    Status::Ok
                } else {
                    Status::Violated
                }),
        );
    }
    Ok((rows, violated))
}
