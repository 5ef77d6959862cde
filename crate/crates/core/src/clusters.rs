//! Pentagon clusters (maximal edge-connected sets of pentagons), the
//! pentagonal incidence partition, cluster distances and the separation
//! number, complements, shape signatures, the catalog of six-pentagon
//! clusters with their tube parameters, and the classification of
//! partitions of 12.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{ClusterError, PatchError};
use crate::graph::{canonical_code, from_oriented_faces, FullereneGraph};
use crate::patch::{boundary_cycles, Patch};

/// Cluster sizes in non-increasing order, summing to 12.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pip(Vec<usize>);

impl Pip {
    /// Sorts `parts` and checks that they form a partition of 12.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ClusterError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.is_empty() || parts.contains(&0) || parts.iter().sum::<usize>() != 12 {
            return Err(ClusterError::NotAPartition(format!("{parts:?}")));
        }
        Ok(Pip(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn largest(&self) -> usize {
        self.0[0]
    }

    pub fn hog_keyword(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        format!("pentagon_cluster_{}", parts.join("_"))
    }

    /// All 77 partitions of 12, in decreasing lexicographic order.
    pub fn all() -> Vec<Pip> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Pip>) {
            if rest == 0 {
                out.push(Pip(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(12, 12, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Pip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Pip {
    type Err = ClusterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(|c: char| c == ',' || c == '_' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| ClusterError::NotAPartition(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Pip::new(parts)
    }
}

/// A maximal set of pentagons connected by shared edges. Face ids sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PentagonCluster {
    pub faces: Vec<usize>,
}

impl PentagonCluster {
    pub fn size(&self) -> usize {
        self.faces.len()
    }
}

/// Clusters of `fg`, largest first, ties by smallest face id.
pub fn pentagon_clusters(fg: &FullereneGraph) -> Vec<PentagonCluster> {
    let mut seen = vec![false; fg.face_count()];
    let mut out = Vec::new();
    for &p in fg.pentagons() {
        if seen[p] {
            continue;
        }
        seen[p] = true;
        let mut faces = vec![p];
        let mut i = 0;
        while i < faces.len() {
            for &q in fg.face_neighbors(faces[i]) {
                if fg.is_pentagon(q) && !seen[q] {
                    seen[q] = true;
                    faces.push(q);
                }
            }
            i += 1;
        }
        faces.sort_unstable();
        out.push(PentagonCluster { faces });
    }
    out.sort_by(|a, b| b.size().cmp(&a.size()).then(a.faces.cmp(&b.faces)));
    out
}

pub fn pip(fg: &FullereneGraph) -> Pip {
    Pip(pentagon_clusters(fg).iter().map(PentagonCluster::size).collect())
}

/// Least face distance between a pentagon of `c1` and one of `c2`.
pub fn cluster_distance(fg: &FullereneGraph, c1: &PentagonCluster, c2: &PentagonCluster) -> Result<usize, ClusterError> {
    if c1 == c2 {
        return Err(ClusterError::SameCluster);
    }
    let dist = fg.face_distances_from(&c1.faces);
    Ok(c2.faces.iter().map(|&f| dist[f]).min().unwrap_or(usize::MAX))
}

/// Least distance between two distinct clusters; `None` with one cluster.
pub fn separation_number(fg: &FullereneGraph) -> Option<usize> {
    separation_of(fg, &pentagon_clusters(fg))
}

/// [`separation_number`] for precomputed clusters.
pub fn separation_of(fg: &FullereneGraph, clusters: &[PentagonCluster]) -> Option<usize> {
    if clusters.len() < 2 {
        return None;
    }
    let mut label = vec![usize::MAX; fg.face_count()];
    for (i, c) in clusters.iter().enumerate() {
        for &f in &c.faces {
            label[f] = i;
        }
    }
    // one BFS per cluster, over all later clusters
    let mut best = usize::MAX;
    for (i, c) in clusters.iter().enumerate().take(clusters.len() - 1) {
        let dist = fg.face_distances_from(&c.faces);
        for (f, &d) in dist.iter().enumerate() {
            if label[f] != usize::MAX && label[f] > i {
                best = best.min(d);
            }
        }
    }
    Some(best)
}

/// Components of the faces outside `c`, each as a patch. Faces sharing a
/// vertex belong to the same component.
pub fn complement(fg: &FullereneGraph, c: &PentagonCluster) -> Result<Vec<Patch>, PatchError> {
    let mut inside = vec![false; fg.face_count()];
    for &f in &c.faces {
        inside[f] = true;
    }
    let mut faces_at = vec![Vec::new(); fg.vertex_count()];
    for face in fg.faces() {
        if !inside[face.id] {
            for &v in &face.boundary {
                faces_at[v].push(face.id);
            }
        }
    }
    let mut comp = vec![usize::MAX; fg.face_count()];
    let mut out = Vec::new();
    for start in 0..fg.face_count() {
        if inside[start] || comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            for &v in &fg.face(members[i]).boundary {
                for &g in &faces_at[v] {
                    if comp[g] == usize::MAX {
                        comp[g] = id;
                        members.push(g);
                    }
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(Patch::from_faces(fg, &members)?.0);
    }
    Ok(out)
}

/// Cluster faces plus every hexagon enclosed by them (a hexagon whose
/// whole boundary is a boundary cycle of the cluster, when the cluster
/// has more than one boundary cycle).
pub fn closure(fg: &FullereneGraph, c: &PentagonCluster) -> Vec<usize> {
    let mut faces = c.faces.clone();
    let cycles = boundary_cycles(fg, &c.faces);
    if cycles.len() >= 2 {
        for cycle in &cycles {
            if let Some(h) = enclosed_face(fg, cycle) {
                if fg.face_size(h) == 6 {
                    faces.push(h);
                }
            }
        }
    }
    faces.sort_unstable();
    faces
}

/// The face of `fg` whose boundary is exactly `cycle`, if any.
fn enclosed_face(fg: &FullereneGraph, cycle: &[usize]) -> Option<usize> {
    let g = fg.graph();
    let k = cycle.len();
    let a = g.find_arc(cycle[0], cycle[1 % k])?;
    let f = fg.arc_face(a);
    (fg.face_size(f) == k
        && (0..k).all(|i| g.find_arc(cycle[i], cycle[(i + 1) % k]).is_some_and(|a| fg.arc_face(a) == f)))
    .then_some(f)
}

/// Isomorphism invariant of a cluster's shape (reflections identified).
/// Closed clusters that are discs use the outer-pinned patch code; other
/// shapes use the code of the cluster with every outside region coned off
/// to an extra vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClusterSignature(Vec<u32>);

impl ClusterSignature {
    fn disc(p: &Patch) -> Self {
        let mut code = vec![0];
        code.extend(p.canonical_code());
        ClusterSignature(code)
    }
}

pub fn cluster_signature(fg: &FullereneGraph, c: &PentagonCluster) -> ClusterSignature {
    let faces = closure(fg, c);
    if let Ok((p, _)) = Patch::from_faces(fg, &faces) {
        return ClusterSignature::disc(&p);
    }
    let mut index = vec![usize::MAX; fg.vertex_count()];
    let mut next = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for &f in &faces {
        let cyc = fg.face(f).boundary.iter().map(|&v| {
            if index[v] == usize::MAX {
                index[v] = next;
                next += 1;
            }
            index[v]
        });
        cycles.push(cyc.collect());
    }
    for outside in boundary_cycles(fg, &faces) {
        let apex = next;
        next += 1;
        let k = outside.len();
        for i in 0..k {
            cycles.push(vec![index[outside[i]], index[outside[(i + 1) % k]], apex]);
        }
    }
    let g = from_oriented_faces(next, &cycles).expect("coned cluster is a sphere");
    let mut code = vec![1];
    code.extend(canonical_code(&g));
    ClusterSignature(code)
}

/// Nanotube parameters with `l >= m >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TubeParams {
    pub l: usize,
    pub m: usize,
}

impl fmt::Display for TubeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l, self.m)
    }
}

/// Tube parameters of caps bounded by a six-pentagon cluster.
pub const T6: [TubeParams; 12] = [
    TubeParams { l: 5, m: 0 },
    TubeParams { l: 3, m: 3 },
    TubeParams { l: 4, m: 2 },
    TubeParams { l: 5, m: 1 },
    TubeParams { l: 6, m: 0 },
    TubeParams { l: 4, m: 3 },
    TubeParams { l: 5, m: 2 },
    TubeParams { l: 6, m: 1 },
    TubeParams { l: 7, m: 0 },
    TubeParams { l: 4, m: 4 },
    TubeParams { l: 5, m: 3 },
    TubeParams { l: 6, m: 2 },
];

impl TubeParams {
    pub fn in_t6(&self) -> bool {
        T6.contains(self)
    }
}

/// Tube parameters of a boundary with equally many 2s and 3s, read as a
/// closed walk in the hexagonal lattice outside the patch.
///
/// Each boundary edge is a lattice edge `±e_k` (`e_0 = 1`, `e_1 = ω`,
/// `e_2 = ω²`, signs alternating); a degree-2 vertex turns one way and
/// advances `k`, a degree-3 vertex the other way. The walk's displacement
/// `D = x + yω` lies in `(1 - ω)Z[ω]`; `D / (1 - ω) = p + qω` is the
/// chiral vector `(p - q) a_1 + q a_2` in a 60-degree hexagon basis,
/// normalized over the twelve lattice symmetries to `l >= m >= 0`.
pub fn tube_parameters_of_boundary(degrees: &[u8]) -> Option<TubeParams> {
    let twos = degrees.iter().filter(|&&d| d == 2).count();
    if degrees.is_empty() || 2 * twos != degrees.len() {
        return None;
    }
    const E: [(i64, i64); 3] = [(1, 0), (0, 1), (-1, -1)];
    let (mut x, mut y) = (0i64, 0i64);
    let mut k = 0usize;
    let mut sign = 1i64;
    let b = degrees.len();
    for t in 0..b {
        x += sign * E[k].0;
        y += sign * E[k].1;
        k = if degrees[(t + 1) % b] == 2 { (k + 1) % 3 } else { (k + 2) % 3 };
        sign = -sign;
    }
    if (2 * x - y) % 3 != 0 || (x + y) % 3 != 0 {
        return None;
    }
    let (mut p, mut q) = ((2 * x - y) / 3, (x + y) / 3);
    for mirrored in [false, true] {
        for _ in 0..6 {
            let (l, m) = (p - q, q);
            if l >= m && m >= 0 && l > 0 {
                return Some(TubeParams { l: l as usize, m: m as usize });
            }
            // multiply by 1 + ω, a rotation by 60 degrees
            (p, q) = (p - q, p);
        }
        if !mirrored {
            // complex conjugation
            (p, q) = (p - q, -q);
        }
    }
    None
}

pub fn tube_parameters_of_patch(p: &Patch) -> Option<TubeParams> {
    tube_parameters_of_boundary(&p.degree_word())
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub patch: Patch,
    pub signature: ClusterSignature,
    pub tube: TubeParams,
}

/// The closed six-pentagon clusters: every disc of six pentagons that fits
/// in a fullerene, plus the ring of six pentagons around a hexagon with
/// that hexagon added. Built by growing pentagon discs one face at a time;
/// ordered by tube parameters, then signature.
pub fn six_cluster_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut level: BTreeMap<Vec<u32>, Patch> = BTreeMap::new();
        level.insert(Patch::pentagon().canonical_code(), Patch::pentagon());
        for _ in 1..6 {
            let mut next = BTreeMap::new();
            for q in level.values() {
                for c in face_attachments(q, 5) {
                    next.entry(c.canonical_code()).or_insert(c);
                }
            }
            level = next;
        }
        let mut patches: Vec<Patch> = level.into_values().filter(Patch::fits_in_fullerene).collect();
        patches.push(pentagon_ring());
        let mut out: Vec<CatalogEntry> = patches
            .into_iter()
            .map(|patch| {
                let tube = tube_parameters_of_patch(&patch).expect("six-pentagon boundary");
                CatalogEntry { signature: ClusterSignature::disc(&patch), tube, patch }
            })
            .collect();
        out.sort_by(|a, b| a.tube.cmp(&b.tube).then(a.signature.cmp(&b.signature)));
        out
    })
}

/// Valid patches obtained from `q` by attaching one face of `size`.
pub fn face_attachments(q: &Patch, size: usize) -> Vec<Patch> {
    let b = q.boundary_length();
    let mut out = Vec::new();
    for start in 0..b {
        for len in 1..b.min(size) {
            let mut c = q.clone();
            if c.add_face(start, len, size).is_ok() && c.validate().is_ok() {
                out.push(c);
            }
        }
    }
    out
}

/// A hexagon with a pentagon on each edge, neighbouring pentagons fused.
fn pentagon_ring() -> Patch {
    let mut q = Patch::hexagon();
    // attach the first pentagon on a plain edge, then keep closing in
    // around the hexagon: each later pentagon covers the 2-3-2 path left
    // by its predecessor, the last one a 2-3-3-2 path
    q.add_face(0, 1, 5).unwrap();
    for i in 0..5 {
        let b = q.boundary_length();
        let len = if i == 4 { 3 } else { 2 };
        let start = (0..b)
            .find(|&s| {
                let w: Vec<usize> = (0..=len).map(|k| q.degree(q.boundary()[(s + k) % b])).collect();
                w[0] == 2 && w[len] == 2 && w[1..len].iter().all(|&d| d == 3) && {
                    let mut c = q.clone();
                    c.add_face(s, len, 5).is_ok() && touches_hexagon(&c)
                }
            })
            .expect("ring closes");
        q.add_face(start, len, 5).unwrap();
    }
    q
}

/// True when the last face added shares an edge with the first face.
fn touches_hexagon(q: &Patch) -> bool {
    let hex = &q.faces()[0];
    let last = q.faces().last().unwrap();
    let k = last.len();
    (0..k).any(|i| {
        let (a, b) = (last[i], last[(i + 1) % k]);
        (0..6).any(|j| hex[j] == b && hex[(j + 1) % 6] == a)
    })
}

pub fn tube_parameters_of_6_cluster(sig: &ClusterSignature) -> Result<TubeParams, ClusterError> {
    six_cluster_catalog()
        .iter()
        .find(|e| &e.signature == sig)
        .map(|e| e.tube)
        .ok_or(ClusterError::NotInCatalog)
}

/// The four classes of partitions of 12 by how they occur as incidence
/// partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionClass {
    /// Not the partition of any fullerene.
    Impossible,
    /// The partition of exactly this many fullerenes.
    Finite(usize),
    /// Infinitely many fullerenes, separation number bounded.
    InfiniteBounded,
    /// Fullerenes with arbitrarily large separation number.
    InfiniteUnbounded,
}

impl PartitionClass {
    pub fn letter(&self) -> char {
        match self {
            PartitionClass::Impossible => 'a',
            PartitionClass::Finite(_) => 'b',
            PartitionClass::InfiniteBounded => 'c',
            PartitionClass::InfiniteUnbounded => 'd',
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionClass::Finite(n) => write!(f, "b ({n})"),
            other => write!(f, "{}", other.letter()),
        }
    }
}

/// Partitions with a part of size at least 6 and their classes. All
/// partitions with largest part below 6 are unbounded.
const CLASSES: [(&[usize], PartitionClass); 30] = {
    use PartitionClass::*;
    [
        (&[12], Finite(41)),
        (&[11, 1], Finite(2)),
        (&[10, 2], Finite(1)),
        (&[10, 1, 1], Finite(1)),
        (&[9, 3], Finite(2)),
        (&[9, 2, 1], Impossible),
        (&[9, 1, 1, 1], Impossible),
        (&[8, 4], Finite(16)),
        (&[8, 3, 1], Impossible),
        (&[8, 2, 2], Impossible),
        (&[8, 2, 1, 1], Impossible),
        (&[8, 1, 1, 1, 1], Impossible),
        (&[7, 5], Finite(69)),
        (&[7, 4, 1], Finite(12)),
        (&[7, 3, 2], Finite(1)),
        (&[7, 3, 1, 1], Impossible),
        (&[7, 2, 2, 1], Impossible),
        (&[7, 2, 1, 1, 1], Impossible),
        (&[7, 1, 1, 1, 1, 1], Impossible),
        (&[6, 6], InfiniteUnbounded),
        (&[6, 5, 1], InfiniteBounded),
        (&[6, 4, 2], InfiniteBounded),
        (&[6, 4, 1, 1], InfiniteBounded),
        (&[6, 3, 3], InfiniteBounded),
        (&[6, 3, 2, 1], InfiniteBounded),
        (&[6, 3, 1, 1, 1], Impossible),
        (&[6, 2, 2, 2], Impossible),
        (&[6, 2, 2, 1, 1], Impossible),
        (&[6, 2, 1, 1, 1, 1], Impossible),
        (&[6, 1, 1, 1, 1, 1, 1], Impossible),
    ]
};

pub fn classify_partition(p: &Pip) -> PartitionClass {
    if p.largest() < 6 {
        return PartitionClass::InfiniteUnbounded;
    }
    CLASSES
        .iter()
        .find(|(parts, _)| *parts == p.parts())
        .map(|&(_, c)| c)
        .expect("every partition with a part >= 6 is listed")
}
