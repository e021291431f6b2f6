use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use gkit_core::builtins::builtin;
use gkit_core::complex::{parse_facets, SimplicialComplex};
use gkit_core::graph::{parse_edge_list, parse_graph6};
use gkit_core::Graph;

/// Exactly one input source.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Graph in graph6 format
    #[arg(long)]
    pub graph6: Option<String>,
    /// Edge-list file: a header "n <count>", then "u v" per line
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    /// Facet file for a simplicial complex
    #[arg(long, value_name = "FILE")]
    pub facets: Option<PathBuf>,
    /// Builtin graph: fig1a, fig1b, fig1c, cbarN, cN, kN, pN, emptyN
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
}

pub enum Input {
    Graph { label: String, graph: Graph },
    Complex { label: String, complex: SimplicialComplex },
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

impl InputArgs {
    pub fn load(&self) -> Result<Input> {
        if let Some(code) = &self.graph6 {
            let graph = parse_graph6(code.trim().as_bytes()).context("parsing graph6")?;
            return Ok(Input::Graph { label: format!("graph6 {}", code.trim()), graph });
        }
        if let Some(path) = &self.edges {
            let graph = parse_edge_list(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
            return Ok(Input::Graph { label: path.display().to_string(), graph });
        }
        if let Some(path) = &self.facets {
            let complex = parse_facets(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
            return Ok(Input::Complex { label: path.display().to_string(), complex });
        }
        let name = self.builtin.as_deref().expect("clap enforces one input");
        let graph = builtin(name)?;
        Ok(Input::Graph { label: format!("builtin {name}"), graph })
    }
}
