//! Loading the input graph from a file, stdin, or an inline string.

use std::io::Read;
use std::path::Path;

use blowup_core::io::{parse_edge_list, parse_graph6};
use blowup_core::Graph;
use clap::{Args, ValueEnum};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Graph file; "-" reads stdin.
    #[arg(conflicts_with = "graph")]
    pub input: Option<String>,

    /// Graph given inline instead of as a file.
    #[arg(long, short = 'g', value_name = "TEXT")]
    pub graph: Option<String>,

    /// Input format; inferred from the file extension or content when omitted.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,

    /// Name used for the graph in reports.
    #[arg(long)]
    pub id: Option<String>,
}

pub struct LoadedGraph {
    pub id: String,
    pub graph: Graph,
}

impl InputArgs {
    pub fn load(&self) -> Result<LoadedGraph, CliError> {
        let (text, default_id, by_extension) = match (&self.graph, self.input.as_deref()) {
            (Some(inline), _) => (inline.clone(), "inline".to_string(), None),
            (None, Some("-")) => {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
                (s, "stdin".to_string(), None)
            }
            (None, Some(path)) => {
                let p = Path::new(path);
                let text = std::fs::read_to_string(p)
                    .map_err(|e| CliError::Input(format!("reading {path}: {e}")))?;
                let id = p.file_stem().map_or(path.into(), |s| s.to_string_lossy().into_owned());
                (text, id, format_from_extension(p))
            }
            (None, None) => return Err(CliError::Input("no input graph given".into())),
        };
        let format = self.format.or(by_extension).unwrap_or_else(|| sniff(&text));
        let graph = match format {
            InputFormat::Graph6 => parse_graph6(&text),
            InputFormat::Edgelist => parse_edge_list(&text),
        }
        .map_err(|e| CliError::Input(e.to_string()))?;
        Ok(LoadedGraph { id: self.id.clone().unwrap_or(default_id), graph })
    }
}

fn format_from_extension(path: &Path) -> Option<InputFormat> {
    match path.extension()?.to_str()? {
        "g6" | "graph6" => Some(InputFormat::Graph6),
        "el" | "edges" | "txt" => Some(InputFormat::Edgelist),
        _ => None,
    }
}

fn sniff(text: &str) -> InputFormat {
    let first = text.trim_start();
    if first.starts_with('#') || first.starts_with("n ") || first.starts_with("n\t") {
        InputFormat::Edgelist
    } else {
        InputFormat::Graph6
    }
}
