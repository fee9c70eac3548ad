//! Interchange formats: graph6 and sparse6 (bit-exact per the published
//! format specification) and a sorted JSON edge-list form.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("graph too large for this encoding: {0} vertices")]
    TooLarge(usize),
    #[error("truncated or malformed input")]
    Malformed,
    #[error("byte {0:#x} out of printable range")]
    BadByte(u8),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const MAX_N: usize = 68_719_476_735; // 2^36 - 1

fn append_size(out: &mut Vec<u8>, n: usize) -> Result<(), CodecError> {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else if n <= MAX_N {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(CodecError::TooLarge(n));
    }
    Ok(())
}

fn read_size(bytes: &[u8]) -> Result<(usize, &[u8]), CodecError> {
    let val = |b: u8| -> Result<usize, CodecError> {
        if !(63..=126).contains(&b) {
            return Err(CodecError::BadByte(b));
        }
        Ok((b - 63) as usize)
    };
    match bytes {
        [126, 126, rest @ ..] if rest.len() >= 6 => {
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = n << 6 | val(b)?;
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] if rest.len() >= 3 => {
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = n << 6 | val(b)?;
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] if *b != 126 => Ok((val(*b)?, rest)),
        _ => Err(CodecError::Malformed),
    }
}

struct BitWriter {
    bits: Vec<bool>,
}

impl BitWriter {
    fn new() -> Self {
        BitWriter { bits: Vec::new() }
    }
    fn push(&mut self, b: bool) {
        self.bits.push(b);
    }
    fn push_uint(&mut self, x: usize, width: usize) {
        for i in (0..width).rev() {
            self.bits.push(x >> i & 1 == 1);
        }
    }
    /// Pack into 6-bit groups, each offset by 63; `pad` fills the tail.
    fn finish(mut self, pad: bool) -> Vec<u8> {
        while self.bits.len() % 6 != 0 {
            self.bits.push(pad);
        }
        self.bits
            .chunks(6)
            .map(|ch| ch.iter().fold(0u8, |acc, &b| acc << 1 | b as u8) + 63)
            .collect()
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    fn new(bytes: &'a [u8]) -> Result<Self, CodecError> {
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(CodecError::BadByte(b));
        }
        Ok(BitReader { bytes, pos: 0 })
    }
    fn remaining(&self) -> usize {
        self.bytes.len() * 6 - self.pos
    }
    fn read_bit(&mut self) -> bool {
        let byte = (self.bytes[self.pos / 6] - 63) as usize;
        let bit = byte >> (5 - self.pos % 6) & 1 == 1;
        self.pos += 1;
        bit
    }
    fn read_uint(&mut self, width: usize) -> usize {
        let mut x = 0;
        for _ in 0..width {
            x = x << 1 | self.read_bit() as usize;
        }
        x
    }
}

/// Encode in graph6: the size, then the upper triangle column by column,
/// six bits per printable byte.
pub fn to_graph6(g: &Graph) -> Result<String, CodecError> {
    let mut out = Vec::new();
    append_size(&mut out, g.n())?;
    let mut w = BitWriter::new();
    for j in 1..g.n() {
        for i in 0..j {
            w.push(g.has_edge(i, j));
        }
    }
    out.extend(w.finish(false));
    Ok(String::from_utf8(out).unwrap())
}

pub fn from_graph6(s: &str) -> Result<Graph, CodecError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let (n, rest) = read_size(s.as_bytes())?;
    let mut r = BitReader::new(rest)?;
    if r.remaining() < n * n.saturating_sub(1) / 2 {
        return Err(CodecError::Malformed);
    }
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if r.read_bit() {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Encode in sparse6. Edges stream as (b, x) pairs with x in k bits,
/// k the bit length of n-1; padding is 1s, with the published special
/// case when n is a power of two.
pub fn to_sparse6(g: &Graph) -> Result<String, CodecError> {
    let n = g.n();
    let mut out = vec![b':'];
    append_size(&mut out, n)?;
    let k = if n <= 1 { 1 } else { usize::BITS as usize - (n - 1).leading_zeros() as usize };
    let mut edges = g.edges();
    edges.sort_by_key(|&(u, v)| (v, u));
    let mut w = BitWriter::new();
    let mut cur = 0usize;
    for (u, v) in edges {
        if v == cur {
            w.push(false);
            w.push_uint(u, k);
        } else if v == cur + 1 {
            cur += 1;
            w.push(true);
            w.push_uint(u, k);
        } else {
            cur = v;
            w.push(true);
            w.push_uint(v, k);
            w.push(false);
            w.push_uint(u, k);
        }
    }
    // Power-of-two special case: a run of 1-padding could otherwise
    // decode as one extra loop edge at n-1.
    if k < 6 && n == 1 << k && (6 - w.bits.len() % 6) % 6 >= k + 1 && cur < n - 1 {
        w.push(false);
    }
    out.extend(w.finish(true));
    Ok(String::from_utf8(out).unwrap())
}

pub fn from_sparse6(s: &str) -> Result<Graph, CodecError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>sparse6<<").unwrap_or(s);
    let s = s.strip_prefix(':').ok_or(CodecError::Malformed)?;
    let (n, rest) = read_size(s.as_bytes())?;
    let mut r = BitReader::new(rest)?;
    let k = if n <= 1 { 1 } else { usize::BITS as usize - (n - 1).leading_zeros() as usize };
    let mut edges = Vec::new();
    let mut v = 0usize;
    while r.remaining() >= k + 1 {
        let b = r.read_bit();
        let x = r.read_uint(k);
        if b {
            v += 1;
        }
        if v >= n || x >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// JSON edge-list form `{"n": ..., "edges": [[u, v], ...]}` with
/// `u < v` and edges sorted.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for JsonGraph {
    fn from(g: &Graph) -> Self {
        JsonGraph { n: g.n(), edges: g.edges() }
    }
}

impl TryFrom<JsonGraph> for Graph {
    type Error = GraphError;
    fn try_from(j: JsonGraph) -> Result<Self, GraphError> {
        Graph::new(j.n, &j.edges)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&JsonGraph::from(g)).unwrap()
}

pub fn from_json(s: &str) -> Result<Graph, CodecError> {
    let j: JsonGraph = serde_json::from_str(s).map_err(|_| CodecError::Malformed)?;
    Ok(Graph::try_from(j)?)
}
