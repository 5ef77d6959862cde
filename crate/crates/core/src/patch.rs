//! Patches: discs of pentagons and hexagons with a single boundary cycle.
//!
//! A patch is kept as its inner faces, each a vertex cycle in face-walk
//! order, plus the walk of the outer face. Shared edges are traversed in
//! opposite directions by the two faces containing them, so the cycles
//! alone determine the embedding.
//!
//! Degrees are taken inside the patch: an interior vertex has degree 3,
//! a boundary vertex 2 or 3.

use std::collections::HashSet;
use std::fmt;

use crate::error::PatchError;
use crate::graph::{canonical_code_from, from_oriented_faces, trace_faces, FullereneGraph, PlaneGraph};
use crate::planar_code::{read_planar_code, write_planar_code};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Patch {
    faces: Vec<Vec<usize>>,
    outer: Vec<usize>,
    degree: Vec<u8>,
}

/// Degree word of the boundary, rotated to its lexicographic minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryCode(pub Vec<u8>);

impl fmt::Display for BoundaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Index of the first lexicographically minimal rotation of `word`.
fn min_rotation(word: &[u8]) -> usize {
    let n = word.len();
    (0..n)
        .min_by(|&a, &b| (0..n).map(|k| word[(a + k) % n]).cmp((0..n).map(|k| word[(b + k) % n])))
        .unwrap_or(0)
}

impl Patch {
    /// Builds a patch from inner face cycles and the outer walk, checking
    /// every patch invariant.
    pub fn new(faces: Vec<Vec<usize>>, outer: Vec<usize>) -> Result<Self, PatchError> {
        let n = faces.iter().chain([&outer]).flatten().max().map_or(0, |&m| m + 1);
        let mut degree = vec![0u8; n];
        for f in &faces {
            for &v in f {
                degree[v] += 1;
            }
        }
        for &v in &outer {
            degree[v] += 1;
        }
        let p = Patch { faces, outer, degree };
        p.validate()?;
        Ok(p)
    }

    pub fn pentagon() -> Self {
        Patch { faces: vec![vec![0, 1, 2, 3, 4]], outer: vec![4, 3, 2, 1, 0], degree: vec![2; 5] }
    }

    pub fn hexagon() -> Self {
        Patch { faces: vec![vec![0, 1, 2, 3, 4, 5]], outer: vec![5, 4, 3, 2, 1, 0], degree: vec![2; 6] }
    }

    pub fn single_face(size: usize) -> Result<Self, PatchError> {
        match size {
            5 => Ok(Patch::pentagon()),
            6 => Ok(Patch::hexagon()),
            _ => Err(PatchError::Invalid(format!("face size {size}"))),
        }
    }

    /// The patch formed by faces `ids` of `fg`. Fails unless their union
    /// is a disc. Vertices are renumbered in order of first appearance;
    /// the second value maps new ids back to vertices of `fg`.
    pub fn from_faces(fg: &FullereneGraph, ids: &[usize]) -> Result<(Self, Vec<usize>), PatchError> {
        let cycles = boundary_cycles(fg, ids);
        match cycles.len() {
            0 => return Err(PatchError::Invalid("faces cover the whole sphere".into())),
            1 => {}
            k => return Err(PatchError::Invalid(format!("region has {k} boundary cycles"))),
        }
        let mut index = vec![usize::MAX; fg.vertex_count()];
        let mut back = Vec::new();
        let mut id = |v: usize| {
            if index[v] == usize::MAX {
                index[v] = back.len();
                back.push(v);
            }
            index[v]
        };
        let faces: Vec<Vec<usize>> = ids.iter().map(|&f| fg.face(f).boundary.iter().map(|&v| id(v)).collect()).collect();
        let outer: Vec<usize> = cycles[0].iter().map(|&v| id(v)).collect();
        Ok((Patch::new(faces, outer)?, back))
    }

    pub fn vertex_count(&self) -> usize {
        self.degree.len()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Outer face walk.
    pub fn boundary(&self) -> &[usize] {
        &self.outer
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v] as usize
    }

    pub fn pentagons(&self) -> usize {
        self.faces.iter().filter(|f| f.len() == 5).count()
    }

    pub fn hexagons(&self) -> usize {
        self.faces.iter().filter(|f| f.len() == 6).count()
    }

    pub fn boundary_length(&self) -> usize {
        self.outer.len()
    }

    /// Degrees along the outer walk, starting at `boundary()[0]`.
    pub fn degree_word(&self) -> Vec<u8> {
        self.outer.iter().map(|&v| self.degree[v]).collect()
    }

    /// Where the canonical rotation of the degree word starts.
    pub fn canonical_start(&self) -> usize {
        min_rotation(&self.degree_word())
    }

    pub fn boundary_code(&self) -> BoundaryCode {
        let w = self.degree_word();
        let s = min_rotation(&w);
        BoundaryCode((0..w.len()).map(|k| w[(s + k) % w.len()]).collect())
    }

    /// Plane graph with the outer face included.
    pub fn graph(&self) -> PlaneGraph {
        let mut all = self.faces.clone();
        all.push(self.outer.clone());
        from_oriented_faces(self.vertex_count(), &all).expect("validated patch")
    }

    /// Isomorphism invariant of the patch (reflections identified). The
    /// code is pinned to the outer face, so it also separates patches
    /// whose graphs agree but whose outer faces differ.
    pub fn canonical_code(&self) -> Vec<u32> {
        let g = self.graph();
        let b = self.outer.len();
        let starts = (0..b).flat_map(|j| {
            let (u, v) = (self.outer[j], self.outer[(j + 1) % b]);
            // outer walks u -> v: it lies after v -> u in rotation order,
            // and before u -> v in mirrored order
            [(g.find_arc(v, u).unwrap(), false), (g.find_arc(u, v).unwrap(), true)]
        });
        canonical_code_from(&g, starts.collect::<Vec<_>>())
    }

    pub fn validate(&self) -> Result<(), PatchError> {
        let bad = |m: String| Err(PatchError::Invalid(m));
        if self.faces.is_empty() {
            return bad("no faces".into());
        }
        if let Some(f) = self.faces.iter().find(|f| f.len() != 5 && f.len() != 6) {
            return bad(format!("face of size {}", f.len()));
        }
        let on_outer: HashSet<usize> = self.outer.iter().copied().collect();
        if on_outer.len() != self.outer.len() {
            return bad("boundary is not a simple cycle".into());
        }
        for v in 0..self.vertex_count() {
            let d = self.degree[v];
            let ok = if on_outer.contains(&v) { d == 2 || d == 3 } else { d == 3 };
            if !ok {
                return bad(format!("vertex {v} has degree {d}"));
            }
        }
        let mut all = self.faces.clone();
        all.push(self.outer.clone());
        let g = from_oriented_faces(self.vertex_count(), &all).map_err(|e| PatchError::Invalid(e.to_string()))?;
        let (traced, _) = trace_faces(&g).map_err(|e| PatchError::Invalid(e.to_string()))?;
        if traced.len() != all.len() {
            return bad("face cycles do not form a disc".into());
        }
        for v in 0..self.vertex_count() {
            if g.degree(v) != self.degree[v] as usize {
                return bad(format!("vertex {v} lies on a face twice"));
            }
        }
        Ok(())
    }

    /// Attaches a new face of `size` along the boundary path of `len` edges
    /// starting at `boundary()[start]`. The path must read `2, 3, .., 3, 2`
    /// in degrees; its inner vertices become interior.
    pub fn add_face(&mut self, start: usize, len: usize, size: usize) -> Result<(), PatchError> {
        let b = self.outer.len();
        if len == 0 || len >= b || len + 1 > size {
            return Err(PatchError::Invalid(format!("cannot attach a {size}-face along {len} of {b} edges")));
        }
        let path: Vec<usize> = (0..=len).map(|k| self.outer[(start + k) % b]).collect();
        let (first, last) = (path[0], path[len]);
        if self.degree[first] != 2 || self.degree[last] != 2 || path[1..len].iter().any(|&v| self.degree[v] != 3) {
            return Err(PatchError::Invalid("attachment path must read 2, 3.., 2".into()));
        }
        let fresh = size - len - 1;
        if fresh == 0 && (len + 1 == b || self.adjacent(first, last)) {
            return Err(PatchError::Invalid("attachment would double an edge".into()));
        }
        let n = self.vertex_count();
        let new_ids: Vec<usize> = (n..n + fresh).collect();
        let mut face = path.clone();
        face.extend(new_ids.iter().rev());
        let mut outer = Vec::with_capacity(b - len + 1 + fresh);
        outer.push(first);
        outer.extend(&new_ids);
        for k in len..b {
            outer.push(self.outer[(start + k) % b]);
        }
        self.degree[first] += 1;
        self.degree[last] += 1;
        self.degree.extend(std::iter::repeat_n(2, fresh));
        self.faces.push(face);
        self.outer = outer;
        Ok(())
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.faces.iter().chain([&self.outer]).any(|f| {
            let k = f.len();
            (0..k).any(|i| (f[i] == u && f[(i + 1) % k] == v) || (f[i] == v && f[(i + 1) % k] == u))
        })
    }

    /// Identifies boundary edge `i` of `self` (from `boundary()[i]`) with
    /// boundary edge `j` of `other`, reversing one so the union stays
    /// planar. All four endpoints must have degree 2.
    pub fn glue(&self, i: usize, other: &Patch, j: usize) -> Result<Patch, PatchError> {
        let (b1, b2) = (self.outer.len(), other.outer.len());
        let (u, v) = (self.outer[i], self.outer[(i + 1) % b1]);
        let (x, y) = (other.outer[j], other.outer[(j + 1) % b2]);
        if [self.degree[u], self.degree[v], other.degree[x], other.degree[y]] != [2; 4] {
            return Err(PatchError::NoGlueEdge);
        }
        let n = self.vertex_count();
        let mut map = vec![usize::MAX; other.vertex_count()];
        map[y] = u;
        map[x] = v;
        let mut next = n;
        for m in map.iter_mut().filter(|m| **m == usize::MAX) {
            *m = next;
            next += 1;
        }
        let mut faces = self.faces.clone();
        faces.extend(other.faces.iter().map(|f| f.iter().map(|&w| map[w]).collect::<Vec<_>>()));
        let mut outer: Vec<usize> = (1..=b1).map(|k| self.outer[(i + k) % b1]).collect();
        outer.extend((2..b2).map(|k| map[other.outer[(j + k) % b2]]));
        let mut degree = self.degree.clone();
        degree.resize(next, 0);
        for w in 0..other.vertex_count() {
            degree[map[w]] = other.degree[w];
        }
        degree[u] = 3;
        degree[v] = 3;
        Ok(Patch { faces, outer, degree })
    }

    /// First boundary edge with two degree-2 ends, scanning from the
    /// canonical start.
    pub fn first_glue_edge(&self) -> Option<usize> {
        let b = self.outer.len();
        let s = self.canonical_start();
        (0..b)
            .map(|k| (s + k) % b)
            .find(|&i| self.degree[self.outer[i]] == 2 && self.degree[self.outer[(i + 1) % b]] == 2)
    }

    /// Maximal runs of degree-3 boundary vertices as `(start, length)`,
    /// listed from the canonical start.
    pub fn three_runs(&self) -> Vec<(usize, usize)> {
        let w = self.degree_word();
        let b = w.len();
        let s = self.canonical_start();
        let mut runs = Vec::new();
        if w.iter().all(|&d| d == 3) {
            return runs;
        }
        for k in 0..b {
            let i = (s + k) % b;
            if w[i] == 3 && w[(i + b - 1) % b] == 2 {
                let len = (0..b).take_while(|&t| w[(i + t) % b] == 3).count();
                runs.push((i, len));
            }
        }
        runs
    }

    /// False when some outside face would need more than six edges, i.e. a
    /// 3-run longer than four.
    pub fn fits_in_fullerene(&self) -> bool {
        self.three_runs().iter().all(|&(_, len)| len <= 4)
    }

    /// Adds a hexagon over the maximal 3-run starting at `run_start` with
    /// `len` vertices. Returns the boundary change.
    pub fn add_hexagon_at_run(&mut self, run_start: usize, len: usize) -> Result<isize, PatchError> {
        let b = self.outer.len();
        let before = b as isize;
        self.add_face((run_start + b - 1) % b, len + 1, 6)?;
        Ok(self.outer.len() as isize - before)
    }

    /// Text container: a header line, the boundary code, the outer walk,
    /// and the planar_code record of the patch graph (outer face included)
    /// in hex.
    pub fn to_text(&self) -> String {
        let g = self.graph();
        let record = write_planar_code([&g]).expect("patches stay below 256 vertices");
        let outer: Vec<String> = self.outer.iter().map(|v| v.to_string()).collect();
        format!(
            "patch p={} h={} b={}\nboundary {}\nouter {}\nplanar_code {}\n",
            self.pentagons(),
            self.hexagons(),
            self.boundary_length(),
            self.boundary_code(),
            outer.join(" "),
            hex::encode(record)
        )
    }

    pub fn from_text(text: &str) -> Result<Patch, PatchError> {
        let field = |key: &str| {
            text.lines()
                .find_map(|l| l.strip_prefix(key).map(str::trim))
                .ok_or_else(|| PatchError::Invalid(format!("missing {key}")))
        };
        let outer: Vec<usize> = field("outer ")?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| PatchError::Invalid(format!("bad vertex {t}"))))
            .collect::<Result<_, _>>()?;
        let bytes = hex::decode(field("planar_code ")?).map_err(|e| PatchError::Invalid(e.to_string()))?;
        let graphs = read_planar_code(&bytes).map_err(|e| PatchError::Invalid(e.to_string()))?;
        let g = graphs.first().ok_or_else(|| PatchError::Invalid("empty planar_code".into()))?;
        let (faces, _) = trace_faces(g).map_err(|e| PatchError::Invalid(e.to_string()))?;
        let b = outer.len();
        let is_outer = |f: &[usize]| {
            f.len() == b && (0..b).any(|r| (0..b).all(|k| f[(r + k) % b] == outer[k]))
        };
        let inner: Vec<Vec<usize>> = faces.into_iter().map(|f| f.boundary).filter(|f| !is_outer(f)).collect();
        let p = Patch::new(inner, outer)?;
        if let Ok(code) = field("boundary ") {
            if code != p.boundary_code().to_string() {
                return Err(PatchError::Invalid("boundary code does not match".into()));
            }
        }
        Ok(p)
    }
}

/// Boundary walks of the region covered by faces `ids`, each oriented as
/// the adjacent outside faces walk it.
pub fn boundary_cycles(fg: &FullereneGraph, ids: &[usize]) -> Vec<Vec<usize>> {
    let g = fg.graph();
    let mut member = vec![false; fg.face_count()];
    for &f in ids {
        member[f] = true;
    }
    let mut out_arc = vec![usize::MAX; fg.vertex_count()];
    for &f in ids {
        for &a in &fg.face(f).arcs {
            let r = g.reverse(a);
            if !member[fg.arc_face(r)] {
                // cubic: every vertex has at most one outgoing boundary arc
                out_arc[g.tail(r)] = r;
            }
        }
    }
    let mut seen = vec![false; fg.vertex_count()];
    let mut cycles = Vec::new();
    for v0 in 0..fg.vertex_count() {
        if out_arc[v0] == usize::MAX || seen[v0] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = v0;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v);
            v = g.head(out_arc[v]);
        }
        cycles.push(cycle);
    }
    cycles
}

/// Combines patches with fewer than six pentagons in total into one patch
/// with the same pentagons, more hexagons, and the summed boundary length.
///
/// Patches are glued pairwise along 2-2 edges, which shortens the boundary
/// by two; hexagons are then added over a shortest maximal 3-run until the
/// boundary is back at the sum.
pub fn merge_patches(patches: &[Patch]) -> Result<Patch, PatchError> {
    if patches.len() < 2 {
        return Err(PatchError::TooFewPatches);
    }
    let p: usize = patches.iter().map(Patch::pentagons).sum();
    if p >= 6 {
        return Err(PatchError::TooManyPentagons(p));
    }
    let mut acc = patches[0].clone();
    let mut target = acc.boundary_length();
    for next in &patches[1..] {
        target += next.boundary_length();
        let i = acc.first_glue_edge().ok_or(PatchError::NoGlueEdge)?;
        let j = next.first_glue_edge().ok_or(PatchError::NoGlueEdge)?;
        acc = acc.glue(i, next, j)?;
        // the boundary sum minus the glued edge counted from both sides
        debug_assert_eq!(acc.boundary_length() + 2, target);
        grow_to(&mut acc, target)?;
    }
    Ok(acc)
}

const GROWTH_LIMIT: usize = 10_000;

fn grow_to(patch: &mut Patch, target: usize) -> Result<(), PatchError> {
    for _ in 0..GROWTH_LIMIT {
        if patch.boundary_length() == target {
            return Ok(());
        }
        let runs = patch.three_runs();
        let &(start, len) = runs.iter().min_by_key(|&&(_, len)| len).ok_or(PatchError::GrowthStalled)?;
        if len > 3 {
            return Err(PatchError::GrowthStalled);
        }
        let delta = patch.add_hexagon_at_run(start, len)?;
        assert_eq!(delta, 4 - 2 * len as isize, "hexagon over a {len}-run");
    }
    Err(PatchError::GrowthStalled)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fused_pentagons() -> Patch {
        Patch::pentagon().glue(0, &Patch::pentagon(), 0).unwrap()
    }

    #[test]
    fn lone_faces() {
        let p = Patch::pentagon();
        p.validate().unwrap();
        assert_eq!(p.boundary_code().to_string(), "22222");
        assert_eq!(Patch::hexagon().boundary_code().to_string(), "222222");
        assert_eq!((p.pentagons(), p.hexagons(), p.boundary_length()), (1, 0, 5));
    }

    #[test]
    fn fused_pair() {
        let p = fused_pentagons();
        p.validate().unwrap();
        assert_eq!(p.boundary_code().to_string(), "22232223");
        assert_eq!(p.vertex_count(), 8);
    }

    #[test]
    fn growth_changes_boundary_by_run_length() {
        let mut p = fused_pentagons();
        // the two 3s are isolated runs of length 1
        let runs = p.three_runs();
        assert_eq!(runs.iter().map(|r| r.1).collect::<Vec<_>>(), [1, 1]);
        let d = p.add_hexagon_at_run(runs[0].0, 1).unwrap();
        assert_eq!(d, 2);
        p.validate().unwrap();
        assert_eq!(p.boundary_length(), 10);
    }

    #[test]
    fn canonical_code_is_label_free() {
        let a = fused_pentagons();
        let mut b = Patch::pentagon();
        b.add_face(2, 1, 5).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        assert_ne!(a.canonical_code(), Patch::hexagon().canonical_code());
    }

    #[test]
    fn rejects_bad_attachments() {
        let mut p = Patch::pentagon();
        assert!(p.add_face(0, 5, 6).is_err());
        assert!(p.add_face(0, 0, 6).is_err());
        // every 2-edge path on a lone pentagon passes a degree-2 vertex
        assert!(p.add_face(0, 2, 6).is_err());
        assert_eq!(p, Patch::pentagon());
    }

    #[test]
    fn merge_two_pentagons() {
        let m = merge_patches(&[Patch::pentagon(), Patch::pentagon()]).unwrap();
        m.validate().unwrap();
        assert_eq!(m.pentagons(), 2);
        assert!(m.hexagons() >= 1);
        assert_eq!(m.boundary_length(), 10);
    }

    #[test]
    fn merge_pentagon_and_hexagon() {
        let m = merge_patches(&[Patch::pentagon(), Patch::hexagon()]).unwrap();
        m.validate().unwrap();
        assert_eq!((m.pentagons(), m.boundary_length()), (1, 11));
        assert!(m.hexagons() >= 2);
    }

    #[test]
    fn merge_preconditions() {
        assert_eq!(merge_patches(&[Patch::pentagon()]), Err(PatchError::TooFewPatches));
        let six = vec![Patch::pentagon(); 6];
        assert_eq!(merge_patches(&six), Err(PatchError::TooManyPentagons(6)));
    }

    #[test]
    fn text_round_trip() {
        let m = merge_patches(&[Patch::pentagon(), Patch::hexagon()]).unwrap();
        let back = Patch::from_text(&m.to_text()).unwrap();
        assert_eq!(back.canonical_code(), m.canonical_code());
        assert_eq!(back.boundary(), m.boundary());
    }
}
