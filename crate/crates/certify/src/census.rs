//! Exhaustive census of graphs on up to nine vertices: orderly
//! generation (augment by one vertex, accept canonical extensions only),
//! spectral-fingerprint classes, and a binary cache.

use std::collections::HashMap;
use std::io::{Read, Write};
use std::sync::{Arc, Mutex, OnceLock};

use cospectra_graphs::{
    automorphism_generators, canonical_form, canonical_labeling, from_graph6, to_graph6,
    AutBudget, Graph,
};
use cospectra_spectral::SpectralFingerprint;

pub const CENSUS_MAX_N: usize = 9;

/// Unlabeled graph counts for n = 0..9, the self-check for generation.
pub const GRAPH_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub graph6: String,
    pub canon: Vec<u8>,
    /// Index of this graph's R-cospectrality class (shared fingerprint).
    pub fingerprint_class: u32,
    /// Index of this graph's plain-cospectrality class (shared char poly).
    pub charpoly_class: u32,
}

/// All graphs on `n` vertices up to isomorphism, grouped by spectral
/// fingerprint and by characteristic polynomial.
#[derive(Debug, Clone)]
pub struct Census {
    pub n: usize,
    pub entries: Vec<CensusEntry>,
    pub fingerprint_class_sizes: Vec<u32>,
    pub charpoly_class_sizes: Vec<u32>,
    canon_index: HashMap<Vec<u8>, usize>,
}

impl Census {
    /// Entry for (any isomorph of) `g`.
    pub fn lookup(&self, g: &Graph) -> Option<&CensusEntry> {
        self.canon_index.get(&canonical_form(g)).map(|&i| &self.entries[i])
    }

    /// Is `g` determined by char poly plus complement char poly among
    /// all graphs on n vertices?
    pub fn is_r_determined(&self, g: &Graph) -> Option<bool> {
        self.lookup(g)
            .map(|e| self.fingerprint_class_sizes[e.fingerprint_class as usize] == 1)
    }

    /// Some non-isomorphic graph sharing `g`'s fingerprint, if any.
    pub fn r_cospectral_mate(&self, g: &Graph) -> Option<Graph> {
        let entry = self.lookup(g)?;
        self.entries
            .iter()
            .find(|e| e.fingerprint_class == entry.fingerprint_class && e.canon != entry.canon)
            .map(|e| from_graph6(&e.graph6).expect("stored graph6 decodes"))
    }

    /// Graphs whose char-poly class is a singleton are determined by
    /// spectrum.
    pub fn is_determined_by_spectrum(&self, g: &Graph) -> Option<bool> {
        self.lookup(g).map(|e| self.charpoly_class_sizes[e.charpoly_class as usize] == 1)
    }
}

/// One representative per isomorphism class on `n` vertices, by
/// canonical deletion: a candidate built by attaching a new vertex
/// survives iff the new vertex lies in the automorphism orbit of the
/// vertex that the canonical labeling places last.
pub fn generate_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut next: Vec<Graph> = Vec::new();
        for parent in &level {
            for mask in 0u64..(1u64 << (size - 1)) {
                let mut edges = parent.edges();
                for bit in 0..size - 1 {
                    if mask >> bit & 1 == 1 {
                        edges.push((bit, size - 1));
                    }
                }
                let candidate = Graph::new(size, &edges).unwrap();
                if canonical_extension_accepts(&candidate) {
                    next.push(candidate);
                }
            }
        }
        level = next;
    }
    level
}

fn canonical_extension_accepts(g: &Graph) -> bool {
    let n = g.n();
    let (_, labeling) = canonical_labeling(g);
    let last = labeling.iter().position(|&p| p == n - 1).expect("labeling is a bijection");
    if last == n - 1 {
        return true;
    }
    // accept when the new vertex shares an orbit with the canonical last
    let gens = automorphism_generators(g, AutBudget { max_nodes: 10_000_000 })
        .expect("budget suffices for n <= 9");
    let mut orbit = vec![false; n];
    orbit[n - 1] = true;
    let mut frontier = vec![n - 1];
    while let Some(v) = frontier.pop() {
        for sigma in &gens {
            for image in [sigma[v], sigma.iter().position(|&x| x == v).unwrap()] {
                if !orbit[image] {
                    orbit[image] = true;
                    frontier.push(image);
                }
            }
        }
    }
    orbit[last]
}

/// Full census on `n <= 9` vertices: enumerate, fingerprint, classify.
pub fn brute_force_rds_oracle(n: usize) -> Census {
    assert!(n <= CENSUS_MAX_N, "census budget is n <= {CENSUS_MAX_N}");
    let graphs = generate_graphs(n);
    let mut fp_ids: HashMap<SpectralFingerprint, u32> = HashMap::new();
    let mut cp_ids: HashMap<Vec<u8>, u32> = HashMap::new();
    let mut entries = Vec::with_capacity(graphs.len());
    let mut fp_sizes: Vec<u32> = Vec::new();
    let mut cp_sizes: Vec<u32> = Vec::new();
    let mut canon_index = HashMap::with_capacity(graphs.len());
    for g in &graphs {
        let fp = SpectralFingerprint::of(g);
        let cp_key = serde_json::to_vec(&fp.char_poly).unwrap();
        let next_fp = fp_ids.len() as u32;
        let fp_id = *fp_ids.entry(fp).or_insert(next_fp);
        if fp_id as usize == fp_sizes.len() {
            fp_sizes.push(0);
        }
        fp_sizes[fp_id as usize] += 1;
        let next_cp = cp_ids.len() as u32;
        let cp_id = *cp_ids.entry(cp_key).or_insert(next_cp);
        if cp_id as usize == cp_sizes.len() {
            cp_sizes.push(0);
        }
        cp_sizes[cp_id as usize] += 1;
        let canon = canonical_form(g);
        canon_index.insert(canon.clone(), entries.len());
        entries.push(CensusEntry {
            graph6: to_graph6(g).unwrap(),
            canon,
            fingerprint_class: fp_id,
            charpoly_class: cp_id,
        });
    }
    Census {
        n,
        entries,
        fingerprint_class_sizes: fp_sizes,
        charpoly_class_sizes: cp_sizes,
        canon_index,
    }
}

// ----------------------------------------------------------------------
// Binary persistence: magic, version, n, then length-prefixed entries.

const MAGIC: &[u8; 8] = b"COSCENS1";

pub fn write_census<W: Write>(census: &Census, mut w: W) -> std::io::Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&(census.n as u32).to_le_bytes())?;
    w.write_all(&(census.entries.len() as u32).to_le_bytes())?;
    for e in &census.entries {
        w.write_all(&(e.graph6.len() as u32).to_le_bytes())?;
        w.write_all(e.graph6.as_bytes())?;
        w.write_all(&(e.canon.len() as u32).to_le_bytes())?;
        w.write_all(&e.canon)?;
        w.write_all(&e.fingerprint_class.to_le_bytes())?;
        w.write_all(&e.charpoly_class.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_census<R: Read>(mut r: R) -> std::io::Result<Census> {
    let bad = |m: &str| std::io::Error::new(std::io::ErrorKind::InvalidData, m.to_string());
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(bad("bad census magic"));
    }
    let mut word = [0u8; 4];
    r.read_exact(&mut word)?;
    let n = u32::from_le_bytes(word) as usize;
    r.read_exact(&mut word)?;
    let count = u32::from_le_bytes(word) as usize;
    let mut entries = Vec::with_capacity(count);
    let mut canon_index = HashMap::with_capacity(count);
    let mut fp_sizes: Vec<u32> = Vec::new();
    let mut cp_sizes: Vec<u32> = Vec::new();
    for i in 0..count {
        r.read_exact(&mut word)?;
        let len = u32::from_le_bytes(word) as usize;
        let mut g6 = vec![0u8; len];
        r.read_exact(&mut g6)?;
        r.read_exact(&mut word)?;
        let len = u32::from_le_bytes(word) as usize;
        let mut canon = vec![0u8; len];
        r.read_exact(&mut canon)?;
        r.read_exact(&mut word)?;
        let fp = u32::from_le_bytes(word);
        r.read_exact(&mut word)?;
        let cp = u32::from_le_bytes(word);
        if fp as usize >= fp_sizes.len() {
            fp_sizes.resize(fp as usize + 1, 0);
        }
        fp_sizes[fp as usize] += 1;
        if cp as usize >= cp_sizes.len() {
            cp_sizes.resize(cp as usize + 1, 0);
        }
        cp_sizes[cp as usize] += 1;
        canon_index.insert(canon.clone(), i);
        entries.push(CensusEntry {
            graph6: String::from_utf8(g6).map_err(|_| bad("graph6 not utf8"))?,
            canon,
            fingerprint_class: fp,
            charpoly_class: cp,
        });
    }
    Ok(Census {
        n,
        entries,
        fingerprint_class_sizes: fp_sizes,
        charpoly_class_sizes: cp_sizes,
        canon_index,
    })
}

/// Shared, memoized access; set `COSPECTRA_CACHE_DIR` to also persist
/// across processes.
pub fn census_for(n: usize) -> Arc<Census> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Census>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&n) {
        return Arc::clone(found);
    }
    let disk_path = std::env::var_os("COSPECTRA_CACHE_DIR").map(|dir| {
        let mut p = std::path::PathBuf::from(dir);
        p.push(format!("census_{n}.bin"));
        p
    });
    let census = disk_path
        .as_ref()
        .filter(|p| p.exists())
        .and_then(|p| std::fs::File::open(p).ok())
        .and_then(|f| read_census(std::io::BufReader::new(f)).ok())
        .filter(|c| c.n == n)
        .unwrap_or_else(|| {
            let c = brute_force_rds_oracle(n);
            if let Some(p) = &disk_path {
                if let Some(dir) = p.parent() {
                    let _ = std::fs::create_dir_all(dir);
                }
                let tmp = p.with_extension("tmp");
                if let Ok(f) = std::fs::File::create(&tmp) {
                    if write_census(&c, std::io::BufWriter::new(f)).is_ok() {
                        let _ = std::fs::rename(&tmp, p);
                    }
                }
            }
            c
        });
    let arc = Arc::new(census);
    cache.lock().unwrap().insert(n, Arc::clone(&arc));
    arc
}
