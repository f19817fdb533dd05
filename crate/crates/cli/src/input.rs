use std::io::Read;
use std::path::Path;

use bergeth_core::graph::parse_graph6;
use bergeth_core::{FamilySpec, Graph, Hypergraph};
use thiserror::Error;

use crate::cli::GraphFormat;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] bergeth_core::Error),
    #[error("{origin}: {source}")]
    Input {
        origin: String,
        source: bergeth_core::Error,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

/// A graph argument, remembering the family it was built from.
pub struct GraphArg {
    pub graph: Graph,
    pub family: Option<FamilySpec>,
    pub label: String,
}

fn read_text(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn from_file(path: &str) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| CliError::Usage(format!("{path}: no graph6 line found")))?;
    parse_graph6(line).map_err(|source| CliError::Input {
        origin: path.to_string(),
        source,
    })
}

fn from_family(arg: &str) -> Result<GraphArg, CliError> {
    let spec: FamilySpec = arg.parse().map_err(|source| CliError::Input {
        origin: format!("family spec {arg:?}"),
        source,
    })?;
    Ok(GraphArg {
        graph: spec.build()?,
        family: Some(spec),
        label: spec.to_string(),
    })
}

fn from_graph6(arg: &str) -> Result<GraphArg, CliError> {
    let graph = parse_graph6(arg).map_err(|source| CliError::Input {
        origin: format!("graph6 {arg:?}"),
        source,
    })?;
    Ok(GraphArg {
        graph,
        family: None,
        label: arg.to_string(),
    })
}

pub fn load_graph(arg: &str, format: GraphFormat) -> Result<GraphArg, CliError> {
    match format {
        GraphFormat::Family => from_family(arg),
        GraphFormat::Graph6 => from_graph6(arg),
        GraphFormat::File => Ok(GraphArg {
            graph: from_file(arg)?,
            family: None,
            label: arg.to_string(),
        }),
        GraphFormat::Auto => {
            if arg.contains(':') {
                if let Ok(g) = from_family(arg) {
                    return Ok(g);
                }
            }
            if Path::new(arg).is_file() {
                return load_graph(arg, GraphFormat::File);
            }
            from_graph6(arg)
        }
    }
}

pub fn load_hypergraph(arg: &str) -> Result<Hypergraph, CliError> {
    let text = read_text(arg)?;
    text.parse().map_err(|source| CliError::Input {
        origin: arg.to_string(),
        source,
    })
}
