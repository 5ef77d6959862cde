//! The `planar_code` stream format and tabular analysis records.
//!
//! A stream is the header `>>planar_code<<` followed by records. A record
//! is the vertex count `n` as one byte, then for each vertex `1..=n` its
//! clockwise neighbors (1-based), each list closed by a zero byte.
//!
//! Graphs with more than 255 vertices use the two-byte extension: a zero
//! byte, then `n` and every neighbor and terminator as little-endian `u16`.
//! Readers and writers only accept it when `wide` is enabled; with it
//! enabled, graphs that fit in one byte are still written narrow.

use std::io::{self, BufRead, BufReader, ErrorKind, Read, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::error::FormatError;
use crate::graph::PlaneGraph;

pub const HEADER: &[u8] = b">>planar_code<<";

/// Largest vertex count the two-byte extension can carry.
pub const MAX_WIDE_VERTICES: usize = 65534;

/// Reads records one at a time.
pub struct PlanarCodeReader<R> {
    inner: BufReader<R>,
    wide: bool,
    record: usize,
    header_read: bool,
    done: bool,
}

impl<R: Read> PlanarCodeReader<R> {
    pub fn new(inner: R) -> Self {
        PlanarCodeReader { inner: BufReader::new(inner), wide: false, record: 0, header_read: false, done: false }
    }

    pub fn wide(mut self, wide: bool) -> Self {
        self.wide = wide;
        self
    }

    fn read_header(&mut self) -> Result<(), FormatError> {
        let mut buf = [0u8; HEADER.len()];
        match self.inner.read_exact(&mut buf) {
            Ok(()) if buf == HEADER => Ok(()),
            Ok(()) => Err(FormatError::BadHeader),
            Err(e) if e.kind() == ErrorKind::UnexpectedEof => Err(FormatError::BadHeader),
            Err(e) => Err(e.into()),
        }
    }

    fn at_eof(&mut self) -> Result<bool, FormatError> {
        Ok(self.inner.fill_buf()?.is_empty())
    }

    fn byte(&mut self) -> Result<usize, FormatError> {
        let mut b = [0u8; 1];
        self.inner.read_exact(&mut b).map_err(|e| self.truncated(e))?;
        Ok(b[0] as usize)
    }

    fn word(&mut self) -> Result<usize, FormatError> {
        let mut b = [0u8; 2];
        self.inner.read_exact(&mut b).map_err(|e| self.truncated(e))?;
        Ok(u16::from_le_bytes(b) as usize)
    }

    fn truncated(&self, e: io::Error) -> FormatError {
        if e.kind() == ErrorKind::UnexpectedEof {
            FormatError::Truncated { record: self.record }
        } else {
            e.into()
        }
    }

    fn read_record(&mut self) -> Result<PlaneGraph, FormatError> {
        let record = self.record;
        let mut n = self.byte()?;
        let wide = n == 0;
        if wide {
            if !self.wide {
                return Err(FormatError::WideRecord { record });
            }
            n = self.word()?;
            if n == 0 {
                return Err(FormatError::ZeroVertices { record });
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for _ in 0..n {
            let mut list = Vec::with_capacity(3);
            loop {
                let x = if wide { self.word()? } else { self.byte()? };
                if x == 0 {
                    break;
                }
                if x > n {
                    return Err(FormatError::NeighborOutOfRange { record, neighbor: x, n });
                }
                list.push(x - 1);
            }
            rotation.push(list);
        }
        PlaneGraph::new(rotation).map_err(|source| FormatError::Graph { record, source })
    }
}

impl<R: Read> Iterator for PlanarCodeReader<R> {
    type Item = Result<PlaneGraph, FormatError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.header_read {
            self.header_read = true;
            if let Err(e) = self.read_header() {
                self.done = true;
                return Some(Err(e));
            }
        }
        match self.at_eof() {
            Ok(true) => {
                self.done = true;
                return None;
            }
            Ok(false) => {}
            Err(e) => {
                self.done = true;
                return Some(Err(e));
            }
        }
        let out = self.read_record();
        self.record += 1;
        if out.is_err() {
            self.done = true;
        }
        Some(out)
    }
}

/// Writes the header on creation and one record per call.
pub struct PlanarCodeWriter<W: Write> {
    inner: W,
    wide: bool,
}

impl<W: Write> PlanarCodeWriter<W> {
    pub fn new(mut inner: W, wide: bool) -> Result<Self, FormatError> {
        inner.write_all(HEADER)?;
        Ok(PlanarCodeWriter { inner, wide })
    }

    pub fn write(&mut self, g: &PlaneGraph) -> Result<(), FormatError> {
        let n = g.vertex_count();
        let mut buf = Vec::with_capacity(1 + 4 * n);
        if n <= 255 {
            buf.push(n as u8);
            for v in 0..n {
                buf.extend(g.neighbors(v).iter().map(|&u| (u + 1) as u8));
                buf.push(0);
            }
        } else if !self.wide {
            return Err(FormatError::TooLarge(n));
        } else if n > MAX_WIDE_VERTICES {
            return Err(FormatError::TooLargeForWide(n));
        } else {
            buf.push(0);
            buf.extend((n as u16).to_le_bytes());
            for v in 0..n {
                for &u in g.neighbors(v) {
                    buf.extend(((u + 1) as u16).to_le_bytes());
                }
                buf.extend(0u16.to_le_bytes());
            }
        }
        self.inner.write_all(&buf)?;
        Ok(())
    }

    pub fn into_inner(self) -> W {
        self.inner
    }
}

/// Parses a whole narrow stream held in memory.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, FormatError> {
    PlanarCodeReader::new(bytes).collect()
}

/// Encodes graphs as a narrow stream.
pub fn write_planar_code<'a>(graphs: impl IntoIterator<Item = &'a PlaneGraph>) -> Result<Vec<u8>, FormatError> {
    let mut w = PlanarCodeWriter::new(Vec::new(), false)?;
    for g in graphs {
        w.write(g)?;
    }
    Ok(w.into_inner())
}

/// One analysed fullerene.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisRecord {
    pub n: usize,
    pub spiral_id: Option<String>,
    /// Cluster sizes, non-increasing.
    pub pip: Vec<usize>,
    /// Undefined for fewer than two clusters.
    pub separation: Option<usize>,
    pub group: String,
}

impl AnalysisRecord {
    pub fn pip_string(&self) -> String {
        join(&self.pip, ",")
    }

    pub fn hog_keyword(&self) -> String {
        format!("pentagon_cluster_{}", join(&self.pip, "_"))
    }

    fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.spiral_id.as_deref().unwrap_or("-"),
            self.pip_string(),
            self.separation.map_or_else(|| "-".to_string(), |s| s.to_string()),
            self.group,
            self.hog_keyword()
        )
    }

    fn json(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            n: usize,
            spiral_id: Option<&'a str>,
            pip: String,
            separation: Option<usize>,
            group: &'a str,
            hog_keyword: String,
        }
        let line = Line {
            n: self.n,
            spiral_id: self.spiral_id.as_deref(),
            pip: self.pip_string(),
            separation: self.separation,
            group: &self.group,
            hog_keyword: self.hog_keyword(),
        };
        serde_json::to_string(&line).expect("record serializes")
    }
}

fn join(parts: &[usize], sep: &str) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(sep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecordFormat {
    Tsv,
    JsonLines,
}

impl FromStr for RecordFormat {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(RecordFormat::Tsv),
            "json" | "jsonl" | "json-lines" => Ok(RecordFormat::JsonLines),
            other => Err(FormatError::Parse(format!("unknown record format {other:?}"))),
        }
    }
}

pub fn write_analysis_record<W: Write>(w: &mut W, rec: &AnalysisRecord, format: RecordFormat) -> io::Result<()> {
    let line = match format {
        RecordFormat::Tsv => rec.tsv(),
        RecordFormat::JsonLines => rec.json(),
    };
    writeln!(w, "{line}")
}

pub fn write_analysis_records<'a, W: Write>(
    w: &mut W,
    records: impl IntoIterator<Item = &'a AnalysisRecord>,
    format: RecordFormat,
) -> io::Result<()> {
    for rec in records {
        write_analysis_record(w, rec, format)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;
    use crate::spiral::{wind_from_spiral, SpiralCode};

    fn dodecahedron() -> PlaneGraph {
        let code = SpiralCode::new(20, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]).unwrap();
        wind_from_spiral(&code).unwrap().graph().clone()
    }

    #[test]
    fn layout_sizes() {
        let g = dodecahedron();
        let bytes = write_planar_code([&g]).unwrap();
        assert_eq!(&bytes[..15], HEADER);
        assert_eq!(bytes.len(), 15 + 1 + 20 * 4);
        assert_eq!(write_planar_code([]).unwrap(), HEADER);
        assert!(read_planar_code(HEADER).unwrap().is_empty());
    }

    #[test]
    fn round_trip_keeps_rotation() {
        let graphs = [dodecahedron(), fixtures::tetrahedron(), fixtures::hexagonal_prism()];
        let bytes = write_planar_code(&graphs).unwrap();
        let back = read_planar_code(&bytes).unwrap();
        assert_eq!(back, graphs);
        assert_eq!(write_planar_code(&back).unwrap(), bytes);
    }

    #[test]
    fn corrupt_streams() {
        assert!(matches!(read_planar_code(b">>planar_code>>"), Err(FormatError::BadHeader)));
        assert!(matches!(read_planar_code(b">>plan"), Err(FormatError::BadHeader)));
        let mut bytes = write_planar_code([&fixtures::tetrahedron()]).unwrap();
        bytes.pop();
        assert!(matches!(read_planar_code(&bytes), Err(FormatError::Truncated { record: 0 })));
        let mut bad = HEADER.to_vec();
        bad.extend([2, 3, 0, 1, 0]);
        assert!(matches!(read_planar_code(&bad), Err(FormatError::NeighborOutOfRange { neighbor: 3, .. })));
        let mut asym = HEADER.to_vec();
        asym.extend([2, 2, 0, 0]);
        assert!(matches!(read_planar_code(&asym), Err(FormatError::Graph { record: 0, .. })));
        let mut wide = HEADER.to_vec();
        wide.extend([0, 0, 0]);
        assert!(matches!(read_planar_code(&wide), Err(FormatError::WideRecord { record: 0 })));
        let r: Result<Vec<_>, _> = PlanarCodeReader::new(&wide[..]).wide(true).collect();
        assert!(matches!(r, Err(FormatError::ZeroVertices { record: 0 })));
    }

    #[test]
    fn wide_records() {
        // a 300-cycle
        let n = 300;
        let rot: Vec<Vec<usize>> = (0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect();
        let g = PlaneGraph::new(rot).unwrap();
        assert!(matches!(write_planar_code([&g]), Err(FormatError::TooLarge(300))));
        let mut w = PlanarCodeWriter::new(Vec::new(), true).unwrap();
        w.write(&g).unwrap();
        w.write(&fixtures::tetrahedron()).unwrap();
        let bytes = w.into_inner();
        assert_eq!(bytes.len(), 15 + 3 + n * 6 + 1 + 4 * 4);
        let back: Vec<_> = PlanarCodeReader::new(&bytes[..]).wide(true).collect::<Result<_, _>>().unwrap();
        assert_eq!(back[0], g);
        assert_eq!(back[1], fixtures::tetrahedron());
    }

    #[test]
    fn records() {
        let rec = AnalysisRecord {
            n: 44,
            spiral_id: Some("44:71".into()),
            pip: vec![9, 3],
            separation: Some(2),
            group: "Cs".into(),
        };
        assert_eq!(rec.hog_keyword(), "pentagon_cluster_9_3");
        let mut out = Vec::new();
        write_analysis_record(&mut out, &rec, RecordFormat::Tsv).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "44\t44:71\t9,3\t2\tCs\tpentagon_cluster_9_3\n");
        let single = AnalysisRecord { pip: vec![12], separation: None, spiral_id: None, ..rec };
        let mut out = Vec::new();
        write_analysis_record(&mut out, &single, RecordFormat::Tsv).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "44\t-\t12\t-\tCs\tpentagon_cluster_12\n");
        let mut out = Vec::new();
        write_analysis_record(&mut out, &single, RecordFormat::JsonLines).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["separation"], serde_json::Value::Null);
        assert_eq!(v["hog_keyword"], "pentagon_cluster_12");
        assert_eq!(v["pip"], "12");
    }
}
