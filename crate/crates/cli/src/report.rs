use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};
use signed_mycielski::SignedGraph;

use crate::error::{CliError, CliResult};

/// A parsed input file together with the digest of its raw bytes.
pub struct Input {
    pub path: PathBuf,
    pub digest: String,
    pub graph: SignedGraph,
}

impl Input {
    pub fn load(path: &Path) -> CliResult<Input> {
        let bytes = std::fs::read(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| CliError::Input(format!("{} is not UTF-8", path.display())))?;
        let graph = SignedGraph::parse_edge_list(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Ok(Input {
            path: path.to_path_buf(),
            digest: digest(&bytes),
            graph,
        })
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Subcommand name and the flags it was invoked with.
#[derive(Clone, Debug, Serialize)]
pub struct CommandEcho {
    pub name: &'static str,
    pub args: Map<String, Value>,
}

impl CommandEcho {
    pub fn new(name: &'static str) -> CommandEcho {
        CommandEcho {
            name,
            args: Map::new(),
        }
    }

    pub fn arg(mut self, key: &str, value: impl Serialize) -> CommandEcho {
        let value = serde_json::to_value(value).expect("arguments serialize");
        self.args.insert(key.to_string(), value);
        self
    }
}

#[derive(Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub command: CommandEcho,
    pub input_digest: String,
    pub result: T,
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

pub fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
