//! b-file retrieval through a pluggable transport, with an on-disk cache.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::bfile::{parse_bfile, BFileError};
use crate::ore_shift::Sequence;

/// One HTTP GET: Ok((status, body)) or a transport-level failure message.
pub trait Transport {
    fn get(&self, url: &str) -> Result<(u16, String), String>;
}

#[derive(Debug, thiserror::Error)]
pub enum FetchError {
    #[error("{0:?} is not an OEIS id (one letter and six digits)")]
    InvalidId(String),
    #[error("{0} is not cached and network access is disabled")]
    NetworkDisabled(String),
    #[error("server answered {0}")]
    FetchFailed(u16),
    #[error("transport: {0}")]
    Transport(String),
    #[error(transparent)]
    BFile(#[from] BFileError),
    #[error("cache: {0}")]
    Io(#[from] std::io::Error),
}

pub fn valid_id(id: &str) -> bool {
    let b = id.as_bytes();
    b.len() == 7 && b[0].is_ascii_uppercase() && b[1..].iter().all(u8::is_ascii_digit)
}

pub fn bfile_name(id: &str) -> String {
    format!("b{}.txt", &id[1..])
}

pub fn bfile_url(id: &str) -> String {
    format!("https://oeis.org/{id}/{}", bfile_name(id))
}

pub fn cache_path(id: &str, cache_dir: &Path) -> PathBuf {
    cache_dir.join(bfile_name(id))
}

/// The cached copy when present; otherwise one GET, stored before parsing.
pub fn fetch_bfile(id: &str, cache_dir: &Path, network: bool, transport: &dyn Transport) -> Result<Sequence, FetchError> {
    if !valid_id(id) {
        return Err(FetchError::InvalidId(id.to_string()));
    }
    let path = cache_path(id, cache_dir);
    if let Ok(text) = fs::read_to_string(&path) {
        return Ok(parse_bfile(&text)?.with_id(id));
    }
    if !network {
        return Err(FetchError::NetworkDisabled(id.to_string()));
    }
    let (status, body) = transport.get(&bfile_url(id)).map_err(FetchError::Transport)?;
    if status != 200 {
        return Err(FetchError::FetchFailed(status));
    }
    let seq = parse_bfile(&body)?.with_id(id);
    store(&path, &body)?;
    Ok(seq)
}

/// Write to a unique temporary name, then rename over the target.
fn store(path: &Path, body: &str) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".{}.{}.tmp", path.file_name().unwrap().to_string_lossy(), std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(body.as_bytes())?;
    f.sync_all()?;
    fs::rename(&tmp, path)
}
