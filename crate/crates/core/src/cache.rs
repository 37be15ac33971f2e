//! On-disk caches for the two slow cold-start inputs: the sieve bit-set
//! and parsed zero tables. Cache keys are content hashes; the directory
//! comes from `GOLDBACH_EXPLICIT_CACHE_DIR` unless overridden.

use crate::error::{Error, Result};
use crate::primes::{self, PrimeSieve};
use crate::zeros::{load_zeros, ZeroTable};
use sha2::{Digest, Sha256};
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

pub const CACHE_DIR_ENV: &str = "GOLDBACH_EXPLICIT_CACHE_DIR";

const SIEVE_MAGIC: &[u8; 8] = b"GESIEVE\x01";
const ZEROS_MAGIC: &[u8; 8] = b"GEZEROS\x01";
const VERSION: u32 = 1;

/// Explicit override, then the environment variable, then none.
pub fn cache_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
}

fn sieve_cache_path(dir: &Path, limit: u64) -> PathBuf {
    dir.join(format!("sieve_{limit}.bin"))
}

/// Sieve cache layout: magic, version, limit, pi(limit), word count, then
/// the odd-index primality bit-set. Integrity is checked by recounting
/// against the stored `pi(limit)` on load.
pub fn save_sieve(sieve: &PrimeSieve, dir: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = sieve_cache_path(dir, sieve.limit());
    let tmp = path.with_extension("tmp");
    {
        let mut f = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
        f.write_all(SIEVE_MAGIC)?;
        f.write_all(&VERSION.to_le_bytes())?;
        f.write_all(&sieve.limit().to_le_bytes())?;
        f.write_all(&sieve.prime_count().to_le_bytes())?;
        let bits = sieve.bits();
        f.write_all(&(bits.len() as u64).to_le_bytes())?;
        for w in bits {
            f.write_all(&w.to_le_bytes())?;
        }
    }
    std::fs::rename(&tmp, &path)?;
    Ok(path)
}

pub fn load_sieve(limit: u64, dir: &Path) -> Result<PrimeSieve> {
    let path = sieve_cache_path(dir, limit);
    let mut f = std::io::BufReader::new(std::fs::File::open(&path)?);
    let mut magic = [0u8; 8];
    f.read_exact(&mut magic)?;
    if &magic != SIEVE_MAGIC {
        return Err(Error::CacheCorrupt("bad sieve magic".into()));
    }
    let mut u32buf = [0u8; 4];
    f.read_exact(&mut u32buf)?;
    if u32::from_le_bytes(u32buf) != VERSION {
        return Err(Error::CacheCorrupt("unsupported sieve cache version".into()));
    }
    let mut u64buf = [0u8; 8];
    f.read_exact(&mut u64buf)?;
    let stored_limit = u64::from_le_bytes(u64buf);
    if stored_limit != limit {
        return Err(Error::CacheCorrupt(format!(
            "cache holds limit {stored_limit}, requested {limit}"
        )));
    }
    f.read_exact(&mut u64buf)?;
    let pi = u64::from_le_bytes(u64buf);
    f.read_exact(&mut u64buf)?;
    let words = u64::from_le_bytes(u64buf) as usize;
    let mut bits = vec![0u64; words];
    let mut chunk = [0u8; 8];
    for w in bits.iter_mut() {
        f.read_exact(&mut chunk)?;
        *w = u64::from_le_bytes(chunk);
    }
    PrimeSieve::from_bits(limit, bits, pi)
}

/// Builds the sieve, going through the cache directory when one is
/// configured.
pub fn sieve_cached(limit: u64, dir: Option<&Path>) -> Result<PrimeSieve> {
    match cache_dir(dir) {
        Some(d) => match load_sieve(limit, &d) {
            Ok(s) => Ok(s),
            Err(Error::Io(_)) | Err(Error::CacheCorrupt(_)) => {
                let s = primes::build_sieve(limit)?;
                save_sieve(&s, &d)?;
                Ok(s)
            }
            Err(e) => Err(e),
        },
        None => primes::build_sieve(limit),
    }
}

pub fn file_sha256(path: &Path) -> Result<String> {
    let mut f = std::fs::File::open(path)?;
    let mut hasher = Sha256::new();
    std::io::copy(&mut f, &mut hasher)?;
    Ok(hex_string(&hasher.finalize()))
}

pub fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn zeros_cache_path(dir: &Path, hash: &str) -> PathBuf {
    dir.join(format!("zeros_{hash}.bin"))
}

fn save_zeros(table: &ZeroTable, path: &Path) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
        f.write_all(ZEROS_MAGIC)?;
        f.write_all(&VERSION.to_le_bytes())?;
        f.write_all(&table.precision().to_le_bytes())?;
        f.write_all(&(table.len() as u64).to_le_bytes())?;
        for &g in table.ordinates() {
            f.write_all(&g.to_le_bytes())?;
        }
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn load_zeros_binary(path: &Path) -> Result<ZeroTable> {
    let mut f = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut magic = [0u8; 8];
    f.read_exact(&mut magic)?;
    if &magic != ZEROS_MAGIC {
        return Err(Error::CacheCorrupt("bad zeros magic".into()));
    }
    let mut u32buf = [0u8; 4];
    f.read_exact(&mut u32buf)?;
    if u32::from_le_bytes(u32buf) != VERSION {
        return Err(Error::CacheCorrupt("unsupported zeros cache version".into()));
    }
    f.read_exact(&mut u32buf)?;
    let precision = u32::from_le_bytes(u32buf);
    let mut u64buf = [0u8; 8];
    f.read_exact(&mut u64buf)?;
    let count = u64::from_le_bytes(u64buf) as usize;
    let mut ordinates = Vec::with_capacity(count);
    let mut chunk = [0u8; 8];
    for _ in 0..count {
        f.read_exact(&mut chunk)?;
        ordinates.push(f64::from_le_bytes(chunk));
    }
    ZeroTable::from_ordinates(ordinates, precision)
}

/// Loads a zero table, keyed in the cache by the hash of the text file.
pub fn zeros_cached(path: &Path, dir: Option<&Path>) -> Result<ZeroTable> {
    match cache_dir(dir) {
        Some(d) => {
            let hash = file_sha256(path)?;
            let bin = zeros_cache_path(&d, &hash);
            match load_zeros_binary(&bin) {
                Ok(t) => Ok(t),
                Err(Error::Io(_)) | Err(Error::CacheCorrupt(_)) => {
                    let t = load_zeros(path)?;
                    std::fs::create_dir_all(&d)?;
                    save_zeros(&t, &bin)?;
                    Ok(t)
                }
                Err(e) => Err(e),
            }
        }
        None => load_zeros(path),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_roundtrip_through_cache() {
        let dir = tempfile::tempdir().unwrap();
        let s1 = sieve_cached(100_000, Some(dir.path())).unwrap();
        let s2 = sieve_cached(100_000, Some(dir.path())).unwrap();
        assert_eq!(s1.prime_count(), s2.prime_count());
        assert_eq!(s1.psi(99_999.0).unwrap(), s2.psi(99_999.0).unwrap());
        assert!(dir.path().join("sieve_100000.bin").exists());
    }

    #[test]
    fn corrupt_sieve_cache_rebuilds() {
        let dir = tempfile::tempdir().unwrap();
        let _ = sieve_cached(10_000, Some(dir.path())).unwrap();
        let path = dir.path().join("sieve_10000.bin");
        let mut f = std::fs::OpenOptions::new().write(true).open(&path).unwrap();
        f.write_all(b"XXXXXXXX").unwrap();
        drop(f);
        let s = sieve_cached(10_000, Some(dir.path())).unwrap();
        assert_eq!(s.prime_count(), 1229);
    }

    #[test]
    fn zeros_roundtrip_through_cache() {
        let dir = tempfile::tempdir().unwrap();
        let txt = dir.path().join("z.txt");
        std::fs::write(&txt, "14.134725142\n21.022039639\n25.010857580\n").unwrap();
        let t1 = zeros_cached(&txt, Some(dir.path())).unwrap();
        let t2 = zeros_cached(&txt, Some(dir.path())).unwrap();
        assert_eq!(t1.ordinates(), t2.ordinates());
        assert_eq!(t1.precision(), t2.precision());
    }
}
