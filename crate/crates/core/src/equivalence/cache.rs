//! Line-based orbit cache.
//!
//! ```text
//! # knot-mosaic orbits v1
//! # n=3 table=<sha256 of the move table>
//! 0: 000-000-000
//! 1: 000-021-034 000-210-340 ...
//! ```

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use super::OrbitPartition;
use crate::mosaic::Mosaic;
use crate::{Error, Result};

const MAGIC: &str = "# knot-mosaic orbits v1";

fn path_for(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("orbits-{n}.txt"))
}

/// Writes the partition as `<dir>/orbits-<n>.txt`, creating `dir` if needed.
pub fn store_partition(dir: &Path, p: &OrbitPartition, table_hash: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    let final_path = path_for(dir, p.n());
    let tmp = final_path.with_extension("tmp");
    {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        writeln!(w, "{MAGIC}")?;
        writeln!(w, "# n={} table={table_hash}", p.n())?;
        for (id, orbit) in p.orbits().iter().enumerate() {
            write!(w, "{id}:")?;
            for &i in orbit {
                write!(w, " {}", p.mosaic(i as usize))?;
            }
            writeln!(w)?;
        }
        w.flush()?;
    }
    fs::rename(tmp, final_path)?;
    Ok(())
}

/// Reads a cached partition. Returns `None` when there is no cache file or
/// it was written for another `n` or another move table.
pub fn load_partition(dir: &Path, n: usize, table_hash: &str) -> Result<Option<OrbitPartition>> {
    let file = match fs::File::open(path_for(dir, n)) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut lines = BufReader::new(file).lines();
    let header = format!("# n={n} table={table_hash}");
    match (lines.next().transpose()?, lines.next().transpose()?) {
        (Some(magic), Some(h)) if magic == MAGIC && h == header => {}
        _ => return Ok(None),
    }
    let mut members: Vec<(u128, u32)> = Vec::new();
    let mut orbit_count = 0u32;
    for (offset, line) in lines.enumerate() {
        let line = line?;
        let bad = |msg: &str| Error::parse(offset + 2, format!("orbit cache: {msg}"));
        let (id, rest) = line.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        if id.trim().parse::<u32>().ok() != Some(orbit_count) {
            return Err(bad("orbit ids out of order"));
        }
        for code in rest.split_whitespace() {
            let m = Mosaic::parse_tcode(code)?;
            if m.n() != n {
                return Err(bad("mosaic of the wrong size"));
            }
            members.push((m.pack().ok_or_else(|| bad("mosaic too large"))?, orbit_count));
        }
        orbit_count += 1;
    }
    members.sort_unstable();
    let basis: Vec<u128> = members.iter().map(|&(m, _)| m).collect();
    if basis.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotAnOrbit);
    }
    let mut orbits = vec![Vec::new(); orbit_count as usize];
    for (index, &(_, id)) in members.iter().enumerate() {
        orbits[id as usize].push(index as u32);
    }
    OrbitPartition::from_parts(n, basis, orbits).map(Some)
}
