//! Plane graphs stored as rotation systems, face tracing, fullerene
//! validation, the dual, and face distances.
//!
//! A vertex's neighbor list is its clockwise rotation. Directed edges
//! ("arcs") are numbered by position in the flattened rotation table, so
//! arc `offset(v) + i` runs from `v` to its `i`-th neighbor. Face tracing
//! follows `u -> v -> succ_v(u)`; every arc lies on exactly one face.

use std::collections::VecDeque;

use crate::error::{FullereneError, GraphError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    offsets: Vec<usize>,
    heads: Vec<usize>,
    tails: Vec<usize>,
    rev: Vec<usize>,
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise rotations. The graph must be
    /// simple, symmetric and connected.
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut heads = Vec::new();
        let mut tails = Vec::new();
        offsets.push(0);
        for (v, list) in rotation.iter().enumerate() {
            for (i, &u) in list.iter().enumerate() {
                if u >= n {
                    return Err(GraphError::NeighborOutOfRange { vertex: v, neighbor: u });
                }
                if u == v {
                    return Err(GraphError::Loop(v));
                }
                if list[..i].contains(&u) {
                    return Err(GraphError::ParallelEdge(v, u));
                }
                heads.push(u);
                tails.push(v);
            }
            offsets.push(heads.len());
        }
        let mut rev = vec![usize::MAX; heads.len()];
        for a in 0..heads.len() {
            let (v, u) = (tails[a], heads[a]);
            match rotation[u].iter().position(|&w| w == v) {
                Some(j) => rev[a] = offsets[u] + j,
                None => return Err(GraphError::Asymmetric(v, u)),
            }
        }
        let g = PlaneGraph { offsets, heads, tails, rev };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.heads.len() / 2
    }

    pub fn arc_count(&self) -> usize {
        self.heads.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Neighbors of `v` in clockwise order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.heads[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Arc from `v` to its `i`-th neighbor.
    pub fn arc(&self, v: usize, i: usize) -> usize {
        self.offsets[v] + i
    }

    /// Arc from `u` to `v`, if they are adjacent.
    pub fn find_arc(&self, u: usize, v: usize) -> Option<usize> {
        self.neighbors(u).iter().position(|&w| w == v).map(|i| self.offsets[u] + i)
    }

    pub fn tail(&self, a: usize) -> usize {
        self.tails[a]
    }

    pub fn head(&self, a: usize) -> usize {
        self.heads[a]
    }

    pub fn reverse(&self, a: usize) -> usize {
        self.rev[a]
    }

    /// Next arc around the tail of `a` (clockwise).
    pub fn next_around(&self, a: usize) -> usize {
        let v = self.tails[a];
        let d = self.degree(v);
        self.offsets[v] + (a - self.offsets[v] + 1) % d
    }

    /// Previous arc around the tail of `a`.
    pub fn prev_around(&self, a: usize) -> usize {
        let v = self.tails[a];
        let d = self.degree(v);
        self.offsets[v] + (a - self.offsets[v] + d - 1) % d
    }

    /// The arc following `a` on its face.
    pub fn face_successor(&self, a: usize) -> usize {
        self.next_around(self.rev[a])
    }

    pub fn rotation(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count()).map(|v| self.neighbors(v).to_vec()).collect()
    }

    /// Renames vertex `v` to `perm[v]`, keeping every rotation.
    pub fn relabel(&self, perm: &[usize]) -> PlaneGraph {
        let n = self.vertex_count();
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            rot[perm[v]] = self.neighbors(v).iter().map(|&u| perm[u]).collect();
        }
        PlaneGraph::new(rot).expect("relabeling preserves validity")
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let rot = (0..self.vertex_count())
            .map(|v| self.neighbors(v).iter().rev().copied().collect())
            .collect();
        PlaneGraph::new(rot).expect("mirroring preserves validity")
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Boundary arcs in walk order.
    pub arcs: Vec<usize>,
    /// Boundary vertices in walk order (tails of `arcs`).
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.boundary.len()
    }
}

/// All faces of `g` plus the face of every arc. Faces are numbered in the
/// order their lowest arc is met.
pub fn trace_faces(g: &PlaneGraph) -> Result<(Vec<Face>, Vec<usize>), GraphError> {
    let m = g.arc_count();
    let mut arc_face = vec![usize::MAX; m];
    let mut faces = Vec::new();
    for start in 0..m {
        if arc_face[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut arcs = Vec::new();
        let mut a = start;
        loop {
            if arcs.len() > m {
                return Err(GraphError::FaceWalkDiverged);
            }
            arc_face[a] = id;
            arcs.push(a);
            a = g.face_successor(a);
            if a == start {
                break;
            }
        }
        let boundary = arcs.iter().map(|&a| g.tail(a)).collect();
        faces.push(Face { id, arcs, boundary });
    }
    let (v, e, f) = (g.vertex_count(), g.edge_count(), faces.len());
    if v + f != e + 2 {
        return Err(GraphError::Euler { v, e, f });
    }
    Ok((faces, arc_face))
}

/// A cubic plane graph whose faces are 12 pentagons and some hexagons.
#[derive(Clone, Debug)]
pub struct FullereneGraph {
    graph: PlaneGraph,
    faces: Vec<Face>,
    arc_face: Vec<usize>,
    pentagons: Vec<usize>,
    /// For each face, the faces across its boundary arcs, in walk order.
    dual: Vec<Vec<usize>>,
}

/// Checks every fullerene invariant and returns the validated graph, or
/// the first violated invariant.
pub fn validate_fullerene(g: PlaneGraph) -> Result<FullereneGraph, FullereneError> {
    for v in 0..g.vertex_count() {
        if g.degree(v) != 3 {
            return Err(FullereneError::NotCubic { vertex: v, degree: g.degree(v) });
        }
    }
    let (faces, arc_face) = trace_faces(&g)?;
    let mut pentagons = Vec::new();
    for f in &faces {
        if f.size() != 5 && f.size() != 6 {
            return Err(FullereneError::BadFaceSize { face: f.id, size: f.size() });
        }
        let mut seen = f.boundary.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(GraphError::NonSimpleFace { face: f.id }.into());
        }
        if f.size() == 5 {
            pentagons.push(f.id);
        }
    }
    if pentagons.len() != 12 {
        return Err(FullereneError::PentagonCount(pentagons.len()));
    }
    let dual = faces
        .iter()
        .map(|f| f.arcs.iter().map(|&a| arc_face[g.reverse(a)]).collect())
        .collect();
    Ok(FullereneGraph { graph: g, faces, arc_face, pentagons, dual })
}

impl FullereneGraph {
    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn face_size(&self, id: usize) -> usize {
        self.faces[id].size()
    }

    pub fn is_pentagon(&self, id: usize) -> bool {
        self.faces[id].size() == 5
    }

    /// Face on which arc `a` lies.
    pub fn arc_face(&self, a: usize) -> usize {
        self.arc_face[a]
    }

    pub fn pentagons(&self) -> &[usize] {
        &self.pentagons
    }

    /// Edge-sharing neighbors of a face in boundary order.
    pub fn face_neighbors(&self, id: usize) -> &[usize] {
        &self.dual[id]
    }

    pub fn dual(&self) -> DualGraph {
        DualGraph {
            labels: self.faces.iter().map(Face::size).collect(),
            adjacency: self.dual.clone(),
        }
    }

    /// Multi-source face distances (BFS over edge-sharing faces).
    pub fn face_distances_from(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.faces.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(f) = queue.pop_front() {
            for &g in &self.dual[f] {
                if dist[g] == usize::MAX {
                    dist[g] = dist[f] + 1;
                    queue.push_back(g);
                }
            }
        }
        dist
    }

    /// Length of a shortest path of edge-sharing faces from `f1` to `f2`.
    pub fn face_distance(&self, f1: usize, f2: usize) -> Result<usize, GraphError> {
        let f = self.faces.len();
        if f1 >= f || f2 >= f {
            return Err(GraphError::NeighborOutOfRange { vertex: f1.min(f2), neighbor: f1.max(f2) });
        }
        Ok(self.face_distances_from(&[f1])[f2])
    }
}

/// Faces as nodes, edge-sharing as adjacency, face sizes as labels.
/// Each adjacency list is in rotational order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub labels: Vec<usize>,
    pub adjacency: Vec<Vec<usize>>,
}

impl DualGraph {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The cubic graph whose faces are the nodes of this triangulation.
    pub fn to_plane_graph(&self) -> Result<PlaneGraph, GraphError> {
        triangles_to_cubic(&self.oriented_triangles())
    }

    /// Triangles `(a, b, c)` with `c` following `b` around `a`, each listed once.
    pub fn oriented_triangles(&self) -> Vec<[usize; 3]> {
        let mut tris = Vec::new();
        for (a, adj) in self.adjacency.iter().enumerate() {
            let d = adj.len();
            for i in 0..d {
                let (b, c) = (adj[i], adj[(i + 1) % d]);
                if a < b && a < c {
                    tris.push([a, b, c]);
                }
            }
        }
        tris
    }
}

/// Cubic plane graph dual to a consistently oriented triangle list.
/// Vertex `t` of the result is triangle `tris[t]`; its rotation lists the
/// triangles across edges `xy`, `yz`, `zx` of `tris[t] = (x, y, z)`.
pub fn triangles_to_cubic(tris: &[[usize; 3]]) -> Result<PlaneGraph, GraphError> {
    use std::collections::HashMap;
    let mut by_arc: HashMap<(usize, usize), usize> = HashMap::with_capacity(tris.len() * 3);
    for (t, &[x, y, z]) in tris.iter().enumerate() {
        for (a, b) in [(x, y), (y, z), (z, x)] {
            if by_arc.insert((a, b), t).is_some() {
                return Err(GraphError::ParallelEdge(a, b));
            }
        }
    }
    let mut rot = Vec::with_capacity(tris.len());
    for &[x, y, z] in tris {
        let mut list = Vec::with_capacity(3);
        for (a, b) in [(x, y), (y, z), (z, x)] {
            match by_arc.get(&(b, a)) {
                Some(&t) => list.push(t),
                None => return Err(GraphError::Asymmetric(a, b)),
            }
        }
        rot.push(list);
    }
    PlaneGraph::new(rot)
}

/// Triangulation node carried by each face of a graph produced by
/// [`triangles_to_cubic`].
pub fn face_nodes(fg: &FullereneGraph, tris: &[[usize; 3]]) -> Vec<usize> {
    let g = fg.graph();
    fg.faces()
        .iter()
        .map(|face| {
            let a = face.arcs[0];
            let t = g.head(a);
            let i = g.reverse(a) - g.arc(t, 0);
            tris[t][(i + 1) % 3]
        })
        .collect()
}

/// Plane graph whose faces are exactly the given vertex cycles. Each cycle
/// must be oriented so that consecutive cycles traverse shared edges in
/// opposite directions.
pub fn from_oriented_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<PlaneGraph, GraphError> {
    // succ[v] holds (prev, next) pairs: next follows prev in v's rotation.
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
    for cycle in faces {
        let k = cycle.len();
        for i in 0..k {
            let (prev, v, next) = (cycle[(i + k - 1) % k], cycle[i], cycle[(i + 1) % k]);
            if v >= vertex_count {
                return Err(GraphError::NeighborOutOfRange { vertex: prev, neighbor: v });
            }
            succ[v].push((prev, next));
        }
    }
    let mut rot = Vec::with_capacity(vertex_count);
    for (v, pairs) in succ.iter().enumerate() {
        if pairs.is_empty() {
            return Err(GraphError::Disconnected);
        }
        let mut list = vec![pairs[0].0];
        loop {
            let cur = *list.last().unwrap();
            let next = pairs
                .iter()
                .find(|&&(p, _)| p == cur)
                .map(|&(_, n)| n)
                .ok_or(GraphError::Asymmetric(v, cur))?;
            if next == list[0] {
                break;
            }
            if list.len() > pairs.len() {
                return Err(GraphError::ParallelEdge(v, next));
            }
            list.push(next);
        }
        if list.len() != pairs.len() {
            return Err(GraphError::NonSimpleFace { face: v });
        }
        rot.push(list);
    }
    PlaneGraph::new(rot)
}

/// Canonical code of an embedded graph, minimal over every starting arc
/// and both orientations. Equal codes mean the embeddings are isomorphic
/// up to reflection.
pub fn canonical_code(g: &PlaneGraph) -> Vec<u32> {
    canonical_code_from(g, (0..g.arc_count()).flat_map(|a| [(a, false), (a, true)]))
}

/// Minimal BFS code over the given `(arc, mirrored)` starts. Restricting
/// starts to arcs with a marked face on the same side pins that face.
pub(crate) fn canonical_code_from(g: &PlaneGraph, starts: impl IntoIterator<Item = (usize, bool)>) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for (a, mirrored) in starts {
        if let Some(code) = bfs_code(g, a, mirrored, best.as_deref()) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

/// BFS code from `start`; returns `None` once it is provably larger than `bound`.
fn bfs_code(g: &PlaneGraph, start: usize, mirrored: bool, bound: Option<&[u32]>) -> Option<Vec<u32>> {
    let n = g.vertex_count();
    let mut number = vec![0u32; n];
    let mut first_arc = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let root = g.tail(start);
    number[root] = 1;
    first_arc[root] = start;
    order.push(root);
    let mut code = Vec::with_capacity(g.arc_count() + n);
    let mut smaller = false;
    let mut idx = 0;
    while idx < order.len() {
        let v = order[idx];
        idx += 1;
        let mut a = first_arc[v];
        for _ in 0..g.degree(v) {
            let u = g.head(a);
            if number[u] == 0 {
                order.push(u);
                number[u] = order.len() as u32;
                first_arc[u] = g.reverse(a);
            }
            code.push(number[u]);
            if !check(&code, bound, &mut smaller) {
                return None;
            }
            a = if mirrored { g.prev_around(a) } else { g.next_around(a) };
        }
        code.push(0);
        if !check(&code, bound, &mut smaller) {
            return None;
        }
    }
    if !smaller && bound.is_some_and(|b| b.len() <= code.len()) {
        return None;
    }
    Some(code)
}

fn check(code: &[u32], bound: Option<&[u32]>, smaller: &mut bool) -> bool {
    if *smaller {
        return true;
    }
    let Some(b) = bound else { return true };
    let i = code.len() - 1;
    match b.get(i) {
        None => false,
        Some(&x) if code[i] < x => {
            *smaller = true;
            true
        }
        Some(&x) => code[i] == x,
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn tetrahedron() -> PlaneGraph {
        PlaneGraph::new(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap()
    }

    /// Hexagonal prism: two hexagons joined by six squares.
    pub fn hexagonal_prism() -> PlaneGraph {
        let mut rot = vec![Vec::new(); 12];
        for i in 0..6 {
            let (a, b) = (i, 6 + i);
            rot[a] = vec![(i + 1) % 6, (i + 5) % 6, b];
            rot[b] = vec![6 + (i + 5) % 6, 6 + (i + 1) % 6, a];
        }
        PlaneGraph::new(rot).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn tetrahedron_has_four_triangles() {
        let (faces, _) = trace_faces(&tetrahedron()).unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.size() == 3));
    }

    #[test]
    fn prism_is_rejected_for_square_faces() {
        let g = hexagonal_prism();
        let (faces, _) = trace_faces(&g).unwrap();
        assert_eq!(faces.len(), 8);
        match validate_fullerene(g) {
            Err(FullereneError::BadFaceSize { size: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_rotations() {
        assert_eq!(PlaneGraph::new(vec![vec![0]]), Err(GraphError::Loop(0)));
        assert_eq!(PlaneGraph::new(vec![vec![1, 1], vec![0, 0]]), Err(GraphError::ParallelEdge(0, 1)));
        assert_eq!(PlaneGraph::new(vec![vec![1], vec![]]), Err(GraphError::Asymmetric(0, 1)));
        assert_eq!(
            PlaneGraph::new(vec![vec![1], vec![0], vec![3], vec![2]]),
            Err(GraphError::Disconnected)
        );
        assert!(matches!(
            PlaneGraph::new(vec![vec![5]]),
            Err(GraphError::NeighborOutOfRange { vertex: 0, neighbor: 5 })
        ));
    }

    #[test]
    fn non_cubic_graph_is_rejected() {
        // 4-cycle: degree 2 everywhere.
        let g = PlaneGraph::new(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
        assert!(matches!(validate_fullerene(g), Err(FullereneError::NotCubic { degree: 2, .. })));
    }

    #[test]
    fn dual_of_tetrahedron_roundtrips() {
        let g = tetrahedron();
        let (faces, arc_face) = trace_faces(&g).unwrap();
        let adjacency: Vec<Vec<usize>> = faces
            .iter()
            .map(|f| f.arcs.iter().map(|&a| arc_face[g.reverse(a)]).collect())
            .collect();
        let dual = DualGraph { labels: vec![3; 4], adjacency };
        let back = dual.to_plane_graph().unwrap();
        assert_eq!(back.vertex_count(), 4);
        assert_eq!(canonical_code(&back), canonical_code(&g));
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let g = hexagonal_prism();
        let perm: Vec<usize> = (0..12).map(|v| (v * 5 + 3) % 12).collect();
        assert_eq!(canonical_code(&g), canonical_code(&g.relabel(&perm)));
        assert_eq!(canonical_code(&g), canonical_code(&g.mirror()));
        assert_ne!(canonical_code(&g), canonical_code(&tetrahedron()));
    }

    #[test]
    fn oriented_faces_rebuild_the_graph() {
        let g = hexagonal_prism();
        let (faces, _) = trace_faces(&g).unwrap();
        let cycles: Vec<Vec<usize>> = faces.iter().map(|f| f.boundary.clone()).collect();
        let back = from_oriented_faces(12, &cycles).unwrap();
        let (faces2, _) = trace_faces(&back).unwrap();
        assert_eq!(faces2.len(), 8);
        assert_eq!(canonical_code(&back), canonical_code(&g));
    }
}
