//! The Goldberg (5,0) inflation, hexagon cycles, cluster reinstatement,
//! the cluster-preserving inflation and the (6,6) nanotube family.

use std::collections::{HashMap, VecDeque};
use std::sync::{Mutex, OnceLock};

use crate::bounds::{max_hexagons_in_patch, min_boundary_length};
use crate::clusters::{pentagon_clusters, PentagonCluster};
use crate::error::ConstructionError;
use crate::graph::{face_nodes, from_oriented_faces, triangles_to_cubic, validate_fullerene, FullereneGraph};
use crate::patch::boundary_cycles;
use crate::spiral::{wind_from_spiral, SpiralCode};

/// Parent face (in the graph before inflation) of every face after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflationMap {
    parent: Vec<usize>,
}

impl InflationMap {
    pub fn parent(&self, f: usize) -> usize {
        self.parent[f]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Faces whose parent is one of `parents`, in increasing order.
    pub fn children(&self, parents: &[usize]) -> Vec<usize> {
        (0..self.parent.len()).filter(|&f| parents.contains(&self.parent[f])).collect()
    }
}

const SCALE: usize = 5;

/// Subdivides every triangle of the dual into 25 and dualizes back. Old
/// faces keep their size; every new face is a hexagon. A new face belongs
/// to the nearest old face center in the subdivided lattice, ties going
/// to a hexagon, then to the lower face id.
pub fn goldberg_5_0(fg: &FullereneGraph) -> (FullereneGraph, InflationMap) {
    let tris = fg.dual().oriented_triangles();
    let faces = fg.face_count();
    let mut parent: Vec<usize> = (0..faces).collect();
    let mut edge_nodes: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut new_tris = Vec::with_capacity(tris.len() * SCALE * SCALE);
    let pick = |cands: [(usize, usize); 3]| -> usize {
        // (distance, face): nearest, then hexagon, then lower id
        cands.into_iter().min_by_key(|&(d, f)| (d, fg.is_pentagon(f), f)).unwrap().1
    };
    for &[a, b, c] in &tris {
        let mut grid = [[usize::MAX; SCALE + 1]; SCALE + 1];
        for j in 0..=SCALE {
            for k in 0..=SCALE - j {
                let node = if (j, k) == (0, 0) {
                    a
                } else if (j, k) == (SCALE, 0) {
                    b
                } else if (j, k) == (0, SCALE) {
                    c
                } else {
                    let on_edge = if k == 0 {
                        Some((a, b, j))
                    } else if j == 0 {
                        Some((a, c, k))
                    } else if j + k == SCALE {
                        Some((b, c, k))
                    } else {
                        None
                    };
                    let new_node = |parent: &mut Vec<usize>, owner: usize| {
                        parent.push(owner);
                        parent.len() - 1
                    };
                    let owner = pick([(j + k, a), (SCALE - j, b), (SCALE - k, c)]);
                    match on_edge {
                        Some((x, y, t)) => {
                            let key = if x < y { (x, y, t) } else { (y, x, SCALE - t) };
                            *edge_nodes.entry(key).or_insert_with(|| new_node(&mut parent, owner))
                        }
                        None => new_node(&mut parent, owner),
                    }
                };
                grid[j][k] = node;
            }
        }
        for j in 0..SCALE {
            for k in 0..SCALE - j {
                new_tris.push([grid[j][k], grid[j + 1][k], grid[j][k + 1]]);
                if j + k + 1 < SCALE {
                    new_tris.push([grid[j + 1][k], grid[j + 1][k + 1], grid[j][k + 1]]);
                }
            }
        }
    }
    let g = triangles_to_cubic(&new_tris).expect("subdivision of a triangulation");
    let inflated = validate_fullerene(g).expect("Goldberg image of a fullerene");
    let nodes = face_nodes(&inflated, &new_tris);
    let map = InflationMap { parent: nodes.iter().map(|&x| parent[x]).collect() };
    (inflated, map)
}

/// A closed chain of distinct hexagons, consecutive ones sharing an edge,
/// whose removal separates its inside from the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexagonCycle {
    faces: Vec<usize>,
    inside: Vec<bool>,
}

impl HexagonCycle {
    /// Validates `faces` as a cycle; the inside is the side holding
    /// `inside_face`.
    pub fn new(fg: &FullereneGraph, faces: Vec<usize>, inside_face: usize) -> Result<Self, ConstructionError> {
        let bad = |m: &str| Err(ConstructionError::Cycle(m.to_string()));
        let k = faces.len();
        if k < 3 {
            return bad("fewer than three faces");
        }
        let mut on = vec![false; fg.face_count()];
        for &f in &faces {
            if on[f] {
                return bad("repeated face");
            }
            if fg.face_size(f) != 6 {
                return bad("not all hexagons");
            }
            on[f] = true;
        }
        if (0..k).any(|i| !fg.face_neighbors(faces[i]).contains(&faces[(i + 1) % k])) {
            return bad("consecutive faces do not share an edge");
        }
        if on[inside_face] {
            return bad("inside face lies on the cycle");
        }
        let inside = reach(fg, &[inside_face], |f| !on[f]);
        if inside.iter().zip(&on).all(|(&i, &o)| i || o) {
            return bad("does not separate");
        }
        Ok(HexagonCycle { faces, inside })
    }

    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_inside(&self, f: usize) -> bool {
        self.inside[f]
    }

    /// Faces on neither the cycle nor the inside.
    pub fn is_outside(&self, f: usize) -> bool {
        !self.inside[f] && !self.faces.contains(&f)
    }

    pub fn inside_faces(&self) -> Vec<usize> {
        (0..self.inside.len()).filter(|&f| self.inside[f]).collect()
    }

    pub fn is_disjoint(&self, other: &HexagonCycle) -> bool {
        self.faces.iter().all(|f| !other.faces.contains(f))
    }
}

/// Faces reachable from `sources` through faces accepted by `allowed`.
fn reach(fg: &FullereneGraph, sources: &[usize], allowed: impl Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; fg.face_count()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in sources {
        if allowed(s) && !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(f) = queue.pop_front() {
        for &g in fg.face_neighbors(f) {
            if !seen[g] && allowed(g) {
                seen[g] = true;
                queue.push_back(g);
            }
        }
    }
    seen
}

/// The ring of faces just outside `region` on the side of `target`, as a
/// closed chain of edge-sharing faces with loops cut out.
fn ring_around(fg: &FullereneGraph, region: &[bool], target: usize) -> Option<Vec<usize>> {
    let g = fg.graph();
    let members: Vec<usize> = (0..fg.face_count()).filter(|&f| region[f]).collect();
    let side = reach(fg, &[target], |f| !region[f]);
    for cycle in boundary_cycles(fg, &members) {
        let k = cycle.len();
        // boundary arcs run along the faces outside the region
        let mut walk: Vec<usize> = (0..k).map(|i| fg.arc_face(g.find_arc(cycle[i], cycle[(i + 1) % k]).unwrap())).collect();
        if !side[walk[0]] {
            continue;
        }
        walk.dedup();
        while walk.len() > 1 && walk.first() == walk.last() {
            walk.pop();
        }
        // a face met twice splits the walk into two loops; keep one that
        // still separates the region from the target
        let inner = members[0];
        'split: loop {
            let mut first = HashMap::new();
            for (j, &f) in walk.iter().enumerate() {
                if let Some(&i) = first.get(&f) {
                    let a: Vec<usize> = walk[i..j].to_vec();
                    let b: Vec<usize> = walk[j..].iter().chain(&walk[..i]).copied().collect();
                    walk = if separates(fg, &a, inner, target) { a } else { b };
                    continue 'split;
                }
                first.insert(f, j);
            }
            break;
        }
        return Some(walk);
    }
    None
}

fn separates(fg: &FullereneGraph, faces: &[usize], a: usize, b: usize) -> bool {
    let mut on = vec![false; fg.face_count()];
    for &f in faces {
        on[f] = true;
    }
    !on[a] && !on[b] && !reach(fg, &[a], |f| !on[f])[b]
}

/// Three face-disjoint hexagon cycles in the inflated graph, each with
/// every descendant of the cycle's inside on its inside.
pub fn lift_hexagon_cycle(
    inflated: &FullereneGraph,
    cycle: &HexagonCycle,
    map: &InflationMap,
) -> Result<[HexagonCycle; 3], ConstructionError> {
    let n = inflated.face_count();
    let inner: Vec<usize> = (0..n).filter(|&f| cycle.is_inside(map.parent(f))).collect();
    let band: Vec<bool> = (0..n).map(|f| cycle.faces().contains(&map.parent(f))).collect();
    let target = (0..n)
        .find(|&f| cycle.is_outside(map.parent(f)))
        .ok_or_else(|| ConstructionError::Cycle("empty outside".into()))?;
    let dist = inflated.face_distances_from(&inner);
    // rings at increasing distance from the inside, while they stay in
    // the band; a ring that doubles back on itself is skipped
    let mut out = Vec::with_capacity(3);
    for d in 1.. {
        let region: Vec<bool> = dist.iter().map(|&x| x < d).collect();
        let Some(ring) = ring_around(inflated, &region, target) else { break };
        if ring.iter().any(|&f| !band[f]) {
            break;
        }
        if let Ok(c) = HexagonCycle::new(inflated, ring, inner[0]) {
            if c.is_outside(target) {
                out.push(c);
            }
        }
        if out.len() == 3 {
            return Ok(out.try_into().unwrap());
        }
    }
    Err(ConstructionError::Cycle(format!("only {} rings fit in the inflated band", out.len())))
}

/// Pairwise disjoint hexagon cycles with `c1` inside and `c2` outside:
/// the rings of faces at each distance from `c1` that consist of
/// hexagons only. At most `cluster_distance(c1, c2) - 1` of them.
pub fn separating_cycle_witnesses(fg: &FullereneGraph, c1: &PentagonCluster, c2: &PentagonCluster) -> Vec<HexagonCycle> {
    let dist = fg.face_distances_from(&c1.faces);
    let reach_c2 = c2.faces.iter().map(|&f| dist[f]).min().unwrap_or(0);
    let mut out = Vec::new();
    for d in 1..reach_c2 {
        let region: Vec<bool> = dist.iter().map(|&x| x < d).collect();
        let Some(ring) = ring_around(fg, &region, c2.faces[0]) else { continue };
        if let Ok(cycle) = HexagonCycle::new(fg, ring, c1.faces[0]) {
            if c1.faces.iter().all(|&f| cycle.is_inside(f)) && c2.faces.iter().all(|&f| cycle.is_outside(f)) {
                out.push(cycle);
            }
        }
    }
    out
}

/// The hole left by cutting a region out of a graph: its vertices in the
/// direction the region's faces run along it, which of them already have
/// all three edges, and the face outside each hole edge.
#[derive(Clone, Debug)]
struct Hole {
    verts: Vec<usize>,
    full: Vec<bool>,
    outside: Vec<usize>,
}

impl Hole {
    fn rotated(&self, s: usize) -> Hole {
        fn rot<T: Clone>(v: &[T], s: usize) -> Vec<T> {
            let mut v = v.to_vec();
            v.rotate_left(s);
            v
        }
        Hole { verts: rot(&self.verts, s), full: rot(&self.full, s), outside: rot(&self.outside, s) }
    }

    fn word(&self) -> Vec<bool> {
        self.full.clone()
    }
}

/// Fills a hole with pentagons and hexagons so that the pentagons form a
/// single cluster. Faces are added along the longest run of full vertices
/// first; the run fixes which hole edges the new face covers, so the only
/// choice is its size.
struct Filler<'a> {
    old_pentagon: &'a dyn Fn(usize) -> bool,
    base: usize,
    cluster: usize,
    max_hexagons: usize,
    next_vertex: usize,
    faces: Vec<Vec<usize>>,
    pentagon: Vec<bool>,
    /// new-face adjacencies among pentagons
    links: Vec<(usize, usize)>,
    steps: usize,
}

const SEARCH_LIMIT: usize = 5_000_000;

impl Filler<'_> {
    fn remaining_pentagons(hole: &Hole) -> isize {
        let full = hole.full.iter().filter(|&&f| f).count();
        hole.verts.len() as isize + 6 - 2 * full as isize
    }

    fn feasible(&self, hole: &Hole) -> bool {
        let p = Self::remaining_pentagons(hole);
        let b = hole.verts.len();
        if p < 0 || self.faces.len() - self.pentagon.iter().filter(|&&x| x).count() > self.max_hexagons {
            return false;
        }
        match p {
            0 => b >= 6,
            1..=5 => min_boundary_length(p as usize, 0).is_ok_and(|m| b >= m),
            _ => false,
        }
    }

    /// False when some finished group of new pentagons can no longer grow
    /// into the full cluster.
    fn clusters_can_grow(&self, hole: &Hole) -> bool {
        let pents: Vec<usize> = (0..self.faces.len()).filter(|&i| self.pentagon[i]).collect();
        if pents.is_empty() {
            return true;
        }
        let open: Vec<bool> = (0..self.faces.len()).map(|i| hole.outside.contains(&(self.base + i))).collect();
        let mut comp: HashMap<usize, usize> = pents.iter().map(|&p| (p, p)).collect();
        fn root(comp: &HashMap<usize, usize>, mut x: usize) -> usize {
            while comp[&x] != x {
                x = comp[&x];
            }
            x
        }
        for &(a, b) in &self.links {
            let (ra, rb) = (root(&comp, a), root(&comp, b));
            comp.insert(ra, rb);
        }
        let mut size: HashMap<usize, (usize, bool)> = HashMap::new();
        for &p in &pents {
            let e = size.entry(root(&comp, p)).or_insert((0, false));
            e.0 += 1;
            e.1 |= open[p];
        }
        let placed = pents.len();
        size.values().all(|&(s, o)| if placed == self.cluster { s == self.cluster } else { o || s == self.cluster })
    }

    /// Adds a face covering `path` (hole positions) and `fresh` new
    /// vertices. Returns the new hole, or `None` if a constraint breaks.
    fn place(&mut self, hole: &Hole, path: &[usize], size: usize) -> Option<Hole> {
        let b = hole.verts.len();
        let id = self.base + self.faces.len();
        let pent = size == 5;
        let neighbors: Vec<usize> = path.windows(2).map(|w| hole.outside[w[0]]).collect();
        for (i, &x) in neighbors.iter().enumerate() {
            if neighbors[..i].contains(&x) {
                return None;
            }
        }
        if pent && neighbors.iter().any(|&x| x < self.base && (self.old_pentagon)(x)) {
            return None;
        }
        let mut face: Vec<usize> = path.iter().map(|&i| hole.verts[i]).collect();
        let closing = path.len() == b + 1;
        if closing {
            face.pop();
        }
        let fresh: Vec<usize> = (0..size.saturating_sub(face.len())).map(|t| self.next_vertex + t).collect();
        if face.len() + fresh.len() != size {
            return None;
        }
        self.next_vertex += fresh.len();
        face.extend(&fresh);
        if pent {
            for &x in &neighbors {
                if x >= self.base && self.pentagon[x - self.base] {
                    self.links.push((x - self.base, id - self.base));
                }
            }
        }
        self.faces.push(face);
        self.pentagon.push(pent);
        if closing {
            return Some(Hole { verts: vec![], full: vec![], outside: vec![] });
        }
        let (i, j) = (path[0], *path.last().unwrap());
        let mut next = Hole { verts: vec![], full: vec![], outside: vec![] };
        let mut t = j;
        loop {
            next.verts.push(hole.verts[t]);
            next.full.push(t == i || t == j || hole.full[t]);
            if t == i {
                break;
            }
            next.outside.push(hole.outside[t]);
            t = (t + 1) % b;
        }
        for &v in fresh.iter().rev() {
            next.outside.push(id);
            next.verts.push(v);
            next.full.push(false);
        }
        next.outside.push(id);
        Some(next)
    }

    /// Depth-first search; on success `faces` holds the filling.
    fn fill(&mut self, hole: &Hole, trail: &mut Vec<usize>) -> bool {
        self.steps += 1;
        if self.steps > SEARCH_LIMIT || !self.feasible(hole) || !self.clusters_can_grow(hole) {
            return false;
        }
        let b = hole.verts.len();
        let open: Vec<usize> = (0..b).filter(|&i| !hole.full[i]).collect();
        let (path, sizes): (Vec<usize>, Vec<usize>) = if open.is_empty() {
            if b != 5 && b != 6 {
                return false;
            }
            ((0..=b).map(|t| t % b).collect(), vec![b])
        } else {
            if open.len() < 2 {
                return false;
            }
            let (mut best, mut best_len) = (0, 0);
            for (r, &i) in open.iter().enumerate() {
                let j = open[(r + 1) % open.len()];
                let len = (j + b - i) % b;
                if len > best_len {
                    (best, best_len) = (r, len);
                }
            }
            if best_len >= 6 {
                return false;
            }
            let i = open[best];
            let path = (0..=best_len).map(|t| (i + t) % b).collect();
            let sizes = [6, 5].into_iter().filter(|&s| s > best_len).collect();
            (path, sizes)
        };
        for size in sizes {
            let saved = (self.next_vertex, self.faces.len(), self.links.len());
            if let Some(next) = self.place(hole, &path, size) {
                trail.push(size);
                if next.verts.is_empty() {
                    if self.clusters_can_grow(&next) && self.pentagon.iter().filter(|&&p| p).count() == self.cluster {
                        return true;
                    }
                } else if self.fill(&next, trail) {
                    return true;
                }
                trail.pop();
            }
            self.next_vertex = saved.0;
            self.faces.truncate(saved.1);
            self.pentagon.truncate(saved.1);
            self.links.truncate(saved.2);
        }
        false
    }

    /// Replays a recorded list of face sizes.
    fn replay(&mut self, hole: &Hole, sizes: &[usize]) -> bool {
        let mut hole = hole.clone();
        for (step, &size) in sizes.iter().enumerate() {
            let b = hole.verts.len();
            let open: Vec<usize> = (0..b).filter(|&i| !hole.full[i]).collect();
            let path: Vec<usize> = if open.is_empty() {
                (0..=b).map(|t| t % b).collect()
            } else {
                let (mut best, mut best_len) = (0, 0);
                for (r, &i) in open.iter().enumerate() {
                    let len = (open[(r + 1) % open.len()] + b - i) % b;
                    if len > best_len {
                        (best, best_len) = (r, len);
                    }
                }
                (0..=best_len).map(|t| (open[best] + t) % b).collect()
            };
            match self.place(&hole, &path, size) {
                Some(next) => hole = next,
                None => return false,
            }
            if hole.verts.is_empty() {
                return step + 1 == sizes.len() && self.clusters_can_grow(&hole);
            }
        }
        false
    }
}

/// Face-size sequences that filled a hole, keyed by its rotation-minimal
/// word; replayed before searching again.
fn solution_cache() -> &'static Mutex<HashMap<Vec<bool>, Vec<usize>>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<bool>, Vec<usize>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn minimal_rotation(word: &[bool]) -> usize {
    (0..word.len())
        .min_by(|&a, &b| word[a..].iter().chain(&word[..a]).cmp(word[b..].iter().chain(&word[..b])))
        .unwrap_or(0)
}

/// Cuts out every descendant of each parent cluster and refills each hole
/// with a patch whose pentagons form one cluster of the parent's size.
/// Faces outside the holes are kept as they are.
pub fn reinstate_clusters(
    inflated: &FullereneGraph,
    map: &InflationMap,
    parents: &[PentagonCluster],
) -> Result<FullereneGraph, ConstructionError> {
    let g = inflated.graph();
    let mut cut = vec![false; inflated.face_count()];
    let mut extra_faces: Vec<Vec<usize>> = Vec::new();
    let mut next_vertex = inflated.vertex_count();
    for parent in parents {
        let size = parent.size();
        if !(2..=5).contains(&size) {
            return Err(ConstructionError::ClusterSize(size));
        }
        let region = map.children(&parent.faces);
        let cycles = boundary_cycles(inflated, &region);
        if cycles.len() != 1 {
            return Err(ConstructionError::Region);
        }
        for &f in &region {
            cut[f] = true;
        }
        // boundary cycles run along the outside faces; the hole runs the
        // other way
        let mut verts = cycles[0].clone();
        verts.reverse();
        let k = verts.len();
        let full = verts
            .iter()
            .map(|&v| (0..3).filter(|&i| cut[inflated.arc_face(g.arc(v, i))]).count() == 1)
            .collect();
        let outside = (0..k).map(|i| inflated.arc_face(g.find_arc(verts[(i + 1) % k], verts[i]).unwrap())).collect();
        let hole = Hole { verts, full, outside };
        let hole = hole.rotated(minimal_rotation(&hole.full));
        let is_pentagon = |f: usize| inflated.is_pentagon(f);
        let mut filler = Filler {
            old_pentagon: &is_pentagon,
            base: inflated.face_count(),
            cluster: size,
            max_hexagons: max_hexagons_in_patch(size, k).map_err(|_| ConstructionError::NoReplacement(size))?,
            next_vertex,
            faces: Vec::new(),
            pentagon: Vec::new(),
            links: Vec::new(),
            steps: 0,
        };
        let cached = solution_cache().lock().unwrap().get(&hole.word()).cloned();
        let replayed = cached.is_some_and(|sizes| filler.replay(&hole, &sizes));
        if !replayed {
            filler.faces.clear();
            filler.pentagon.clear();
            filler.links.clear();
            filler.next_vertex = next_vertex;
            let mut trail = Vec::new();
            if !filler.fill(&hole, &mut trail) {
                return Err(ConstructionError::NoReplacement(size));
            }
            log::debug!("filled a {k}-vertex hole with {} faces after {} steps", trail.len(), filler.steps);
            solution_cache().lock().unwrap().insert(hole.word(), trail);
        }
        next_vertex = filler.next_vertex;
        extra_faces.extend(filler.faces);
    }
    let mut faces: Vec<Vec<usize>> = inflated.faces().iter().filter(|f| !cut[f.id]).map(|f| f.boundary.clone()).collect();
    faces.extend(extra_faces);
    // drop the vertices that were cut out and renumber the rest
    let mut index = vec![usize::MAX; next_vertex];
    let mut count = 0;
    for face in &mut faces {
        for v in face.iter_mut() {
            if index[*v] == usize::MAX {
                index[*v] = count;
                count += 1;
            }
            *v = index[*v];
        }
    }
    let g = from_oriented_faces(count, &faces).map_err(|e| ConstructionError::Cycle(e.to_string()))?;
    Ok(validate_fullerene(g)?)
}

/// [`reinstate_clusters`] for a single parent cluster.
pub fn reinstate_cluster(
    inflated: &FullereneGraph,
    map: &InflationMap,
    parent: &PentagonCluster,
) -> Result<FullereneGraph, ConstructionError> {
    reinstate_clusters(inflated, map, std::slice::from_ref(parent))
}

/// `rounds` times: inflate, then put every cluster of size two or more
/// back. The partition is unchanged and distances between clusters grow.
pub fn inflate_preserving_clusters(fg: &FullereneGraph, rounds: usize) -> Result<FullereneGraph, ConstructionError> {
    let mut current = fg.clone();
    for _ in 0..rounds {
        let clusters = pentagon_clusters(&current);
        if clusters.iter().any(|c| c.size() > 5) {
            return Err(ConstructionError::PartTooLarge);
        }
        let parents: Vec<PentagonCluster> = clusters.into_iter().filter(|c| c.size() >= 2).collect();
        let (inflated, map) = goldberg_5_0(&current);
        current = if parents.is_empty() { inflated } else { reinstate_clusters(&inflated, &map, &parents)? };
    }
    Ok(current)
}

/// Two (5,0) caps of six pentagons joined by `rings` rings of five
/// hexagons: 20 + 10 `rings` vertices.
pub fn tube_fullerene_6_6(rings: usize) -> Result<FullereneGraph, ConstructionError> {
    if rings == 0 {
        return Err(ConstructionError::NoRings);
    }
    let f = 12 + 5 * rings;
    let positions = [1, 2, 3, 4, 5, 6, f - 5, f - 4, f - 3, f - 2, f - 1, f];
    let code = SpiralCode::new(20 + 10 * rings, positions).expect("valid positions");
    Ok(wind_from_spiral(&code).expect("tube spiral winds"))
}
