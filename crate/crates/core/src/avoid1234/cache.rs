//! Memo-table persistence.
//!
//! ```text
//! patword-cache v1 r=<r> k=<k>
//! <a|M|S|L>\t<decimal count>
//! ```

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::num::Count;

use super::engine::Avoid1234Engine;
use super::state::State1234;

fn header(r: u8, k: usize) -> String {
    format!("patword-cache v1 r={r} k={k}")
}

/// Writes every memo entry, sorted by key text so output is reproducible.
pub fn write_cache<C: Count, W: Write>(engine: &Avoid1234Engine<C>, out: W) -> Result<()> {
    let cfg = engine.config();
    let mut lines: Vec<String> = engine.memo().iter().map(|(s, c)| format!("{s}\t{c}")).collect();
    lines.sort_unstable();
    let mut out = BufWriter::new(out);
    let io = |e: std::io::Error| Error::Cache(e.to_string());
    writeln!(out, "{}", header(cfg.r, cfg.k)).map_err(io)?;
    for line in lines {
        writeln!(out, "{line}").map_err(io)?;
    }
    out.flush().map_err(io)
}

/// Merges cached entries into `engine`'s memo. Returns the number read.
pub fn read_cache<C: Count, R: BufRead>(engine: &mut Avoid1234Engine<C>, input: R) -> Result<usize> {
    let cfg = engine.config();
    let mut lines = input.lines();
    let first = lines
        .next()
        .ok_or_else(|| Error::Cache("empty cache file".into()))?
        .map_err(|e| Error::Cache(e.to_string()))?;
    if first.trim_end() != header(cfg.r, cfg.k) {
        return Err(Error::Cache(format!(
            "cache header {first:?} does not match {:?}",
            header(cfg.r, cfg.k)
        )));
    }
    let mut n = 0;
    for (lineno, line) in lines.enumerate() {
        let line = line.map_err(|e| Error::Cache(e.to_string()))?;
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('\t')
            .ok_or_else(|| Error::Cache(format!("line {}: missing tab", lineno + 2)))?;
        let state: State1234 = key.parse()?;
        engine.validate(&state)?;
        let count: C = value
            .parse()
            .map_err(|_| Error::Cache(format!("line {}: bad count {value:?}", lineno + 2)))?;
        engine.memo_mut().insert(state, count);
        n += 1;
    }
    Ok(n)
}

pub fn save_cache<C: Count>(engine: &Avoid1234Engine<C>, path: &Path) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    write_cache(engine, file)
}

/// Loads `path` if it exists; a missing file is not an error.
pub fn load_cache<C: Count>(engine: &mut Avoid1234Engine<C>, path: &Path) -> Result<usize> {
    match fs::File::open(path) {
        Ok(f) => read_cache(engine, BufReader::new(f)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(0),
        Err(e) => Err(Error::Cache(format!("{}: {e}", path.display()))),
    }
}
