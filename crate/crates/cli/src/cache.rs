//! Green-polynomial cache: one JSON file per rank bound, keyed by the
//! partition pair.  Corrupted files or entries are ignored and recomputed,
//! never trusted; writes go through a temporary file and a rename, so a
//! reader never observes a partial entry.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use dlcf::combinat::{
    green_cache_prime, green_cache_snapshot, IntPolynomial, Partition,
};

#[derive(Serialize, Deserialize)]
struct CacheFile {
    n: u32,
    entries: Vec<serde_json::Value>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    lambda: Vec<u32>,
    rho: Vec<u32>,
    coeffs: Vec<i64>,
}

pub fn cache_path(dir: &Path, rank: u32) -> PathBuf {
    dir.join(format!("green-n{rank}.json"))
}

/// Prime the in-process memo from the cache file, ignoring anything that
/// fails to parse or validate.
pub fn load(dir: &Path, rank: u32, verbose: bool) -> usize {
    let path = cache_path(dir, rank);
    let Ok(text) = std::fs::read_to_string(&path) else {
        return 0;
    };
    let Ok(file) = serde_json::from_str::<CacheFile>(&text) else {
        if verbose {
            eprintln!("cache: ignoring unreadable {}", path.display());
        }
        return 0;
    };
    let mut loaded = Vec::new();
    for value in file.entries {
        let Ok(entry) = serde_json::from_value::<Entry>(value) else {
            continue;
        };
        let (Ok(lambda), Ok(rho)) =
            (Partition::new(entry.lambda), Partition::new(entry.rho))
        else {
            continue;
        };
        loaded.push((lambda, rho, IntPolynomial::from_coeffs(entry.coeffs)));
    }
    let count = loaded.len();
    green_cache_prime(loaded);
    if verbose {
        eprintln!("cache: loaded {count} entries from {}", path.display());
    }
    count
}

/// Persist the in-process memo atomically.
pub fn save(dir: &Path, rank: u32, verbose: bool) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let entries: Vec<serde_json::Value> = green_cache_snapshot()
        .into_iter()
        .map(|(lambda, rho, poly)| {
            serde_json::to_value(Entry {
                lambda: lambda.parts().to_vec(),
                rho: rho.parts().to_vec(),
                coeffs: poly.coeffs().to_vec(),
            })
            .expect("plain data serializes")
        })
        .collect();
    let count = entries.len();
    let file = CacheFile { n: rank, entries };
    let path = cache_path(dir, rank);
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    std::fs::write(&tmp, serde_json::to_string_pretty(&file).expect("serializable"))?;
    std::fs::rename(&tmp, &path)?;
    if verbose {
        eprintln!("cache: saved {count} entries to {}", path.display());
    }
    Ok(())
}
