//! Scheme and group-table files.

use std::path::Path;

use crate::catalog::GroupTable;
use crate::error::{Error, Result};
use crate::scheme::{SchemeDescriptor, SchemeFile};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Reads a scheme file and re-validates it.
pub fn load_scheme(path: impl AsRef<Path>) -> Result<SchemeDescriptor> {
    let text = read(path.as_ref())?;
    let file: SchemeFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.as_ref().display())))?;
    file.into_descriptor()
}

pub fn save_scheme(scheme: &SchemeDescriptor, path: impl AsRef<Path>) -> Result<()> {
    let text = serde_json::to_string(&SchemeFile::from_descriptor(scheme)).expect("scheme file serializes");
    std::fs::write(path.as_ref(), text).map_err(|source| Error::Io {
        path: path.as_ref().display().to_string(),
        source,
    })
}

pub fn load_group_table(path: impl AsRef<Path>) -> Result<GroupTable> {
    let text = read(path.as_ref())?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.as_ref().display())))
}
