//! Golden fixture files in the shared JSON schema.

use std::path::{Path, PathBuf};

use adoforge_core::json::{JsonCoeff, PolyJson};
use adoforge_core::laurent::{Exponent, Sparse};
use adoforge_core::{Error, Result};

/// Environment variable overriding the fixture directory.
pub const FIXTURES_ENV: &str = "ADOFORGE_FIXTURES";

/// `$ADOFORGE_FIXTURES`, else `./fixtures` if present, else the workspace copy.
#[must_use]
pub fn fixture_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(FIXTURES_ENV) {
        return PathBuf::from(dir);
    }
    let local = PathBuf::from("fixtures");
    if local.is_dir() {
        return local;
    }
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Reads and decodes one fixture.
///
/// # Errors
/// [`Error::Parse`] for a missing file, malformed JSON or a schema violation.
pub fn load<E: Exponent, C: JsonCoeff>(path: &Path) -> Result<Sparse<E, C>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let doc: PolyJson =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    doc.decode().map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// `dir/group/name.json`.
#[must_use]
pub fn path(dir: &Path, group: &str, name: &str) -> PathBuf {
    dir.join(group).join(format!("{name}.json"))
}

/// Every fixture the verification suites read, as `(group, name)`.
#[must_use]
pub fn expected() -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    for n in (15..=39).step_by(2) {
        out.push(("ado4", format!("T2_{n}")));
    }
    out.push(("rmatrix", "NHAT3_T2_3".to_string()));
    out.push(("rmatrix", "NHAT4_T2_3".to_string()));
    for n in (5..=17).step_by(2) {
        out.push(("rmatrix", format!("N3_T2_{n}")));
    }
    for n in (7..=13).step_by(2) {
        out.push(("rmatrix", format!("N4_T2_{n}")));
    }
    for n in [5, 7, 9] {
        out.push(("refined", format!("ALEX_T2_{n}")));
        out.push(("refined", format!("ADO3_T2_{n}")));
    }
    out
}

/// Paths of expected fixtures that are absent from `dir`.
#[must_use]
pub fn missing(dir: &Path) -> Vec<PathBuf> {
    expected().into_iter().map(|(g, n)| path(dir, g, &n)).filter(|p| !p.is_file()).collect()
}
