pub mod enumerate;
pub mod search;
pub mod spectrum;
pub mod verify;

use std::path::Path;

use crate::error::{CliError, CliResult};

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}
