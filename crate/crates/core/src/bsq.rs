//! The BSQ1 sequence file format.
//!
//! ```text
//! offset  size  content
//! 0       8     magic "BIVSEQ1\n"
//! 8       8     element count, unsigned little-endian
//! 16      ...   elements, 8 per byte, least-significant bit first, 1 = +1
//! ```
//!
//! Pad bits in the final byte are zero. Readers reject anything else.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::sequence::BitSequence;

pub const MAGIC: &[u8; 8] = b"BIVSEQ1\n";
const HEADER_LEN: usize = 16;

pub fn encode(seq: &BitSequence) -> Vec<u8> {
    let payload = seq.len().div_ceil(8);
    let mut out = Vec::with_capacity(HEADER_LEN + payload);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(seq.len() as u64).to_le_bytes());
    out.extend(seq.words().iter().flat_map(|w| w.to_le_bytes()).take(payload));
    out
}

pub fn decode(bytes: &[u8]) -> Result<BitSequence> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::Format(format!("{} bytes is shorter than the header", bytes.len())));
    }
    if &bytes[..8] != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let count = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
    if count == 0 {
        return Err(Error::Format("element count is zero".into()));
    }
    let count = usize::try_from(count)
        .map_err(|_| Error::Format(format!("element count {count} does not fit in memory")))?;
    let payload = &bytes[HEADER_LEN..];
    let expected = count.div_ceil(8);
    if payload.len() != expected {
        return Err(Error::Format(format!(
            "expected {expected} payload bytes for {count} elements, found {}",
            payload.len()
        )));
    }
    let rem = count % 8;
    if rem != 0 && payload[expected - 1] >> rem != 0 {
        return Err(Error::Format("nonzero pad bits".into()));
    }
    let words = payload
        .chunks(8)
        .map(|chunk| {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            u64::from_le_bytes(buf)
        })
        .collect();
    Ok(BitSequence::from_words(words, count))
}

pub fn write_to<W: Write>(mut w: W, seq: &BitSequence) -> Result<()> {
    w.write_all(&encode(seq))?;
    Ok(())
}

pub fn read_from<R: Read>(mut r: R) -> Result<BitSequence> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    decode(&bytes)
}

pub fn read_file(path: impl AsRef<Path>) -> Result<BitSequence> {
    decode(&fs::read(path)?)
}

/// Writes through a sibling temporary file so a failed run leaves no partial output.
pub fn write_file(path: impl AsRef<Path>, seq: &BitSequence) -> Result<()> {
    let path = path.as_ref();
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    let tmp = std::path::PathBuf::from(tmp);
    fs::write(&tmp, encode(seq))?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })?;
    Ok(())
}
