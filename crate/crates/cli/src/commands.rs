use blowup_core::io::{format_spectrum, rounded_values, write_graph6, write_report, GRAPH6_MAX_VERTICES};
use blowup_core::{closed_form_spectrum, oracle_spectrum, random_suite, verify_blowup, BlowUpParams};
use blowup_core::{MatrixFamily, Spectrum, VerificationReport};
use serde_json::json;

use crate::input::InputArgs;
use crate::{CliError, FamilyArgs, FamilySelector, Outcome, OutputFormat};

fn selected(family: FamilySelector) -> Vec<MatrixFamily> {
    match family {
        FamilySelector::Adjacency => vec![MatrixFamily::Adjacency],
        FamilySelector::Laplacian => vec![MatrixFamily::Laplacian],
        FamilySelector::Signless => vec![MatrixFamily::Signless],
        FamilySelector::All => MatrixFamily::ALL.to_vec(),
    }
}

/// One spectrum per line, prefixed with the family only when several are
/// printed.
fn print_spectra(spectra: &[(String, Spectrum)]) {
    for (label, s) in spectra {
        if spectra.len() == 1 {
            println!("{}", format_spectrum(s));
        } else {
            println!("{label}: {}", format_spectrum(s));
        }
    }
}

fn spectra_json(spectra: &[(String, Spectrum)]) -> serde_json::Value {
    spectra
        .iter()
        .map(|(label, s)| json!({ "family": label, "values": rounded_values(s) }))
        .collect()
}

pub fn cmd_spectrum(input: &InputArgs, family: &FamilyArgs, output: OutputFormat) -> Result<Outcome, CliError> {
    let loaded = input.load()?;
    let spectra = selected(family.family)
        .into_iter()
        .map(|f| Ok((f.label(family.complement), oracle_spectrum(&loaded.graph, f, family.complement)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    match output {
        OutputFormat::Text => print_spectra(&spectra),
        OutputFormat::Json => {
            let doc = json!({
                "graph_id": loaded.id,
                "n": loaded.graph.n(),
                "spectra": spectra_json(&spectra),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(Outcome::Success)
}

pub fn cmd_blowup(
    input: &InputArgs,
    family: &FamilyArgs,
    t: usize,
    tol: f64,
    emit_graph: bool,
    output: OutputFormat,
) -> Result<Outcome, CliError> {
    let loaded = input.load()?;
    let g = &loaded.graph;
    let spectra = selected(family.family)
        .into_iter()
        .map(|f| Ok((f.label(family.complement), closed_form_spectrum(g, t, f, family.complement, tol)?)))
        .collect::<Result<Vec<_>, CliError>>()?;

    let graph6 = if emit_graph {
        if g.n() * t > GRAPH6_MAX_VERTICES {
            eprintln!(
                "note: blow-up has {} vertices; graph6 output is limited to {GRAPH6_MAX_VERTICES}",
                g.n() * t
            );
            None
        } else {
            let params = BlowUpParams::new(t).map_err(|e| CliError::Internal(e.to_string()))?;
            let big = g.blow_up(params);
            Some(write_graph6(&big).map_err(|e| CliError::Internal(e.to_string()))?)
        }
    } else {
        None
    };

    match output {
        OutputFormat::Text => {
            print_spectra(&spectra);
            if let Some(s) = &graph6 {
                println!("{s}");
            }
        }
        OutputFormat::Json => {
            let mut doc = json!({
                "graph_id": loaded.id,
                "n": g.n(),
                "t": t,
                "complement": family.complement,
                "spectra": spectra_json(&spectra),
            });
            if let Some(s) = graph6 {
                doc["blowup_graph6"] = json!(s);
            }
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(Outcome::Success)
}

fn print_report_text(r: &VerificationReport) {
    println!("{} (n = {}, t = {}, tol = {:e})", r.graph_id, r.n, r.t, r.tol);
    for f in &r.families {
        println!(
            "  {:<22} {}  max deviation {:.3e}",
            f.family,
            if f.pass { "pass" } else { "FAIL" },
            f.max_deviation
        );
    }
    println!("  {:<22} {:.3e}", "eigenvector residual", r.eigenvector_residuals);
    println!("  overall: {}", if r.overall_pass { "PASS" } else { "FAIL" });
}

pub fn cmd_verify(
    input: &InputArgs,
    t: usize,
    tol: f64,
    random: Option<usize>,
    seed: u64,
    output: OutputFormat,
) -> Result<Outcome, CliError> {
    let reports = match random {
        Some(count) => random_suite(seed, count)
            .iter()
            .map(|s| verify_blowup(&s.graph, &s.id, t, tol))
            .collect::<Result<Vec<_>, _>>()?,
        None => {
            let loaded = input.load()?;
            vec![verify_blowup(&loaded.graph, &loaded.id, t, tol)?]
        }
    };

    match output {
        OutputFormat::Text => reports.iter().for_each(print_report_text),
        OutputFormat::Json if random.is_none() => println!("{}", write_report(&reports[0])),
        OutputFormat::Json => {
            let items: Vec<String> = reports.iter().map(write_report).collect();
            println!("[\n{}\n]", items.join(",\n"));
        }
    }

    if reports.iter().all(|r| r.overall_pass) {
        Ok(Outcome::Success)
    } else {
        Ok(Outcome::VerificationFailed)
    }
}
