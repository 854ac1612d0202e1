//! Catalogue listing and the acceptance run.

use euler_pencil::report::{Report, Status};
use euler_pencil::verify::{run_all, run_one, VerifyOptions};
use euler_pencil::Catalogue;
use serde_json::{json, to_value};

use crate::args::{at, usage, CliResult};
use crate::output::Out;

pub fn catalogue(label: Option<&str>) -> CliResult<Out> {
    let cat = at("--label", Catalogue::load())?;
    let entries: Vec<_> = match label {
        Some(l) => vec![at("--label", cat.entry(l))?.clone()],
        None => cat.entries.clone(),
    };
    let rows = entries
        .iter()
        .map(|e| {
            vec![
                e.label.clone(),
                e.model.map(|m| m.map(|a| a.to_string()).join(",")).unwrap_or_else(|| "-".into()),
                e.j.clone().unwrap_or_else(|| "-".into()),
                e.cm_discriminant.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
                e.pencil_params.as_ref().map(|p| p.join(",")).unwrap_or_else(|| "-".into()),
            ]
        })
        .collect();
    let mut report = Report::new("catalogue", Status::Info, to_value(&entries).expect("serialisable"));
    if let Some(l) = label {
        report = report.param("label", l);
    }
    Ok(Out::new(report, &["label", "model", "j", "cm_disc", "pencil"], rows))
}

pub fn verify_all(only: Option<u8>, x: u64, seed: u64) -> CliResult<Out> {
    if x < 100 {
        return Err(usage("--x", "the statistics cutoff must be at least 100"));
    }
    let opts = VerifyOptions { stats_x: x, seed };
    let outcomes = match only {
        Some(id) => vec![run_one(id, &opts).ok_or_else(|| usage("--only", format!("no criterion {id}; valid ids are 1-15")))?],
        None => run_all(&opts),
    };
    let pass = outcomes.iter().all(|o| o.pass);
    let failing: Vec<u8> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    let rows = outcomes
        .iter()
        .map(|o| vec![o.id.to_string(), if o.pass { "PASS" } else { "FAIL" }.into(), o.title.into(), o.detail.clone()])
        .collect();
    let mut report = Report::new("verify-all", Status::from_bool(pass), json!({ "criteria": outcomes, "failing": failing }))
        .param("x", x)
        .param("seed", seed);
    if let Some(id) = only {
        report = report.param("only", id);
    }
    Ok(Out::new(report, &["id", "status", "title", "detail"], rows))
}
