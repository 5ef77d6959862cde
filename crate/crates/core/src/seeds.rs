//! Seed fullerenes, one per partition of 12 into parts of at most 5.
//!
//! The table is a planar_code file plus a manifest with one line per
//! record: partition, vertex count, where the graph came from, and the
//! SHA-256 of the record bytes. Every seed is revalidated on load.

use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::clusters::{pip, Pip};
use crate::error::ConstructionError;
use crate::graph::{validate_fullerene, FullereneGraph, PlaneGraph};
use crate::planar_code::{PlanarCodeReader, PlanarCodeWriter, HEADER};

const BUNDLED_GRAPHS: &[u8] = include_bytes!("../data/seeds.pc");
const BUNDLED_MANIFEST: &str = include_str!("../data/seeds.tsv");

#[derive(Clone, Debug)]
pub struct Seed {
    pub pip: Pip,
    pub source: String,
    pub graph: FullereneGraph,
}

#[derive(Clone, Debug, Default)]
pub struct SeedTable {
    seeds: Vec<Seed>,
}

/// SHA-256 (hex) of the planar_code record of `g`, without the header.
pub fn record_digest(g: &PlaneGraph) -> String {
    let mut w = PlanarCodeWriter::new(Vec::new(), true).expect("writing to memory");
    w.write(g).expect("writing to memory");
    let bytes = w.into_inner();
    hex::encode(Sha256::digest(&bytes[HEADER.len()..]))
}

impl SeedTable {
    pub fn parse(graphs: &[u8], manifest: &str) -> Result<Self, ConstructionError> {
        let bad = |m: String| ConstructionError::SeedTable(m);
        let lines: Vec<&str> = manifest.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).collect();
        let reader = PlanarCodeReader::new(graphs).wide(true);
        let mut seeds = Vec::with_capacity(lines.len());
        let mut records = reader.into_iter();
        for (i, line) in lines.iter().enumerate() {
            let cols: Vec<&str> = line.split('\t').collect();
            let [partition, n, source, digest] = cols[..] else {
                return Err(bad(format!("manifest line {}: expected 4 columns", i + 1)));
            };
            let want: Pip = partition.parse().map_err(|e| bad(format!("line {}: {e}", i + 1)))?;
            let g = records
                .next()
                .ok_or_else(|| bad(format!("graph file ends before record {}", i + 1)))?
                .map_err(|e| bad(format!("record {}: {e}", i + 1)))?;
            if record_digest(&g) != digest {
                return Err(bad(format!("record {}: checksum mismatch", i + 1)));
            }
            if n.parse::<usize>().ok() != Some(g.vertex_count()) {
                return Err(bad(format!("record {}: vertex count", i + 1)));
            }
            let graph = validate_fullerene(g).map_err(|e| bad(format!("record {}: {e}", i + 1)))?;
            if pip(&graph) != want {
                return Err(bad(format!("record {}: partition is {}, manifest says {want}", i + 1, pip(&graph))));
            }
            seeds.push(Seed { pip: want, source: source.to_string(), graph });
        }
        if records.next().is_some() {
            return Err(bad("more graphs than manifest lines".into()));
        }
        Ok(SeedTable { seeds })
    }

    /// Reads `PATH.pc` and `PATH.tsv`.
    pub fn load(path: &Path) -> Result<Self, ConstructionError> {
        let read = |ext: &str| {
            let p = path.with_extension(ext);
            fs::read(&p).map_err(|e| ConstructionError::SeedTable(format!("{}: {e}", p.display())))
        };
        let graphs = read("pc")?;
        let manifest = String::from_utf8(read("tsv")?).map_err(|e| ConstructionError::SeedTable(e.to_string()))?;
        Self::parse(&graphs, &manifest)
    }

    /// Writes `PATH.pc` and `PATH.tsv`.
    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let mut w = PlanarCodeWriter::new(Vec::new(), true).map_err(std::io::Error::other)?;
        let mut manifest = String::from("# partition\tn\tsource\tsha256\n");
        for s in &self.seeds {
            w.write(s.graph.graph()).map_err(std::io::Error::other)?;
            manifest.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                s.pip,
                s.graph.vertex_count(),
                s.source,
                record_digest(s.graph.graph())
            ));
        }
        fs::write(path.with_extension("pc"), w.into_inner())?;
        fs::write(path.with_extension("tsv"), manifest)
    }

    pub fn bundled() -> &'static SeedTable {
        static TABLE: OnceLock<SeedTable> = OnceLock::new();
        TABLE.get_or_init(|| SeedTable::parse(BUNDLED_GRAPHS, BUNDLED_MANIFEST).expect("bundled seed table is valid"))
    }

    pub fn push(&mut self, seed: Seed) {
        self.seeds.push(seed);
    }

    pub fn seeds(&self) -> &[Seed] {
        &self.seeds
    }

    pub fn get(&self, p: &Pip) -> Result<&Seed, ConstructionError> {
        if p.largest() > 5 {
            return Err(ConstructionError::PartTooLarge);
        }
        self.seeds.iter().find(|s| &s.pip == p).ok_or_else(|| ConstructionError::SeedMissing(p.to_string()))
    }
}

/// A fullerene whose partition is `p`, from the bundled table.
pub fn seed_fullerene_for_partition(p: &Pip) -> Result<FullereneGraph, ConstructionError> {
    Ok(SeedTable::bundled().get(p)?.graph.clone())
}
