//! One-line summaries of fullerenes: spiral id, partition, separation
//! number, point group.

use crate::clusters::{pentagon_clusters, separation_of};
use crate::generator::{spiral_id_with_limit, Isomer, DEFAULT_ENUMERATION_LIMIT};
use crate::graph::FullereneGraph;
use crate::planar_code::AnalysisRecord;
use crate::symmetry::point_group;

/// `n:rank` when `fg` has at most `limit` vertices and a spiral.
pub fn spiral_id_string(fg: &FullereneGraph, limit: usize) -> Option<String> {
    spiral_id_with_limit(fg, limit).ok().map(|(n, k)| format!("{n}:{k}"))
}

pub fn analyze(fg: &FullereneGraph, spiral_id: Option<String>) -> AnalysisRecord {
    let clusters = pentagon_clusters(fg);
    AnalysisRecord {
        n: fg.vertex_count(),
        spiral_id,
        pip: clusters.iter().map(|c| c.size()).collect(),
        separation: separation_of(fg, &clusters),
        group: point_group(fg).name().to_string(),
    }
}

/// Like [`analyze`], reusing the id the isomer came with or looking it up
/// for graphs within the default enumeration limit.
pub fn analyze_isomer(iso: &Isomer) -> AnalysisRecord {
    let id = iso.id().or_else(|| spiral_id_string(&iso.graph, DEFAULT_ENUMERATION_LIMIT));
    analyze(&iso.graph, id)
}
