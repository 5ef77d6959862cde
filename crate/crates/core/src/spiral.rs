//! Face spirals: winding a pentagon-position list into a fullerene,
//! unwinding spirals from a fullerene, and the canonical (lexicographically
//! smallest) spiral used for isomorphism rejection and `x:y` numbering.
//!
//! Winding works on the dual triangulation. Faces are added one at a time;
//! each new face is attached to the previous face and to the oldest face on
//! the open boundary that still has free edges.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{FormatError, SpiralError};
use crate::graph::{face_nodes, triangles_to_cubic, validate_fullerene, FullereneGraph};

/// Positions (1-based, strictly increasing) of the 12 pentagons in the
/// spiral face order of a fullerene with `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpiralCode {
    pub n: usize,
    pub positions: [usize; 12],
}

impl SpiralCode {
    pub fn new(n: usize, positions: [usize; 12]) -> Result<Self, SpiralError> {
        let code = SpiralCode { n, positions };
        code.check()?;
        Ok(code)
    }

    pub fn face_count(&self) -> usize {
        self.n / 2 + 2
    }

    fn check(&self) -> Result<(), SpiralError> {
        let f = self.face_count();
        let ok = self.positions[0] >= 1
            && self.positions.windows(2).all(|w| w[0] < w[1])
            && self.positions[11] <= f;
        if ok {
            Ok(())
        } else {
            Err(SpiralError::BadPositions { faces: f })
        }
    }

    /// Face sizes (5 or 6) in spiral order.
    pub fn face_sizes(&self) -> Vec<u8> {
        let mut sizes = vec![6u8; self.face_count()];
        for &p in &self.positions {
            sizes[p - 1] = 5;
        }
        sizes
    }
}

impl fmt::Display for SpiralCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for p in &self.positions {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl FromStr for SpiralCode {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FormatError::Parse(format!("bad spiral code {s:?}"));
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let values: Vec<usize> = rest
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let positions: [usize; 12] = values.try_into().map_err(|_| bad())?;
        SpiralCode::new(n, positions).map_err(|e| FormatError::Parse(e.to_string()))
    }
}

/// Incremental spiral winder over the dual triangulation.
#[derive(Clone, Debug)]
pub(crate) struct Winder {
    faces: usize,
    need: Vec<i8>,
    adj: Vec<[u32; 6]>,
    adj_len: Vec<u8>,
    boundary: VecDeque<u32>,
    placed: usize,
    pentagons: usize,
    triangles: Option<Vec<[usize; 3]>>,
}

impl Winder {
    pub(crate) fn new(faces: usize, record_triangles: bool) -> Self {
        Winder {
            faces,
            need: vec![0; faces],
            adj: vec![[0; 6]; faces],
            adj_len: vec![0; faces],
            boundary: VecDeque::with_capacity(faces),
            placed: 0,
            pentagons: 0,
            triangles: record_triangles.then(|| Vec::with_capacity(2 * faces)),
        }
    }

    fn connect(&mut self, a: usize, b: usize) -> bool {
        let la = self.adj_len[a] as usize;
        if self.adj[a][..la].contains(&(b as u32)) {
            return false;
        }
        self.need[a] -= 1;
        self.need[b] -= 1;
        if self.need[a] < 0 || self.need[b] < 0 {
            return false;
        }
        let lb = self.adj_len[b] as usize;
        self.adj[a][la] = b as u32;
        self.adj[b][lb] = a as u32;
        self.adj_len[a] += 1;
        self.adj_len[b] += 1;
        true
    }

    fn triangle(&mut self, a: u32, b: u32, c: usize) {
        if let Some(t) = self.triangles.as_mut() {
            t.push([a as usize, b as usize, c]);
        }
    }

    /// Adds the next face with `size` sides. Returns `false` when the
    /// spiral cannot continue.
    pub(crate) fn push(&mut self, size: u8) -> bool {
        let x = self.placed;
        if x >= self.faces {
            return false;
        }
        self.need[x] = size as i8;
        self.placed += 1;
        if size == 5 {
            self.pentagons += 1;
        }
        if x == 0 {
            self.boundary.push_back(0);
            return true;
        }
        if x == 1 {
            self.boundary.push_back(1);
            return self.connect(0, 1);
        }
        let front = *self.boundary.front().unwrap();
        let back = *self.boundary.back().unwrap();
        if front == back || !self.connect(x, back as usize) || !self.connect(x, front as usize) {
            return false;
        }
        self.triangle(front, back, x);
        loop {
            let front = *self.boundary.front().unwrap();
            if self.boundary.len() > 1 && self.need[front as usize] == 0 {
                self.boundary.pop_front();
                let nf = *self.boundary.front().unwrap();
                if self.boundary.len() > 1 && !self.connect(x, nf as usize) {
                    return false;
                }
                self.triangle(nf, front, x);
                continue;
            }
            let back = *self.boundary.back().unwrap();
            if self.boundary.len() > 1 && self.need[back as usize] == 0 {
                self.boundary.pop_back();
                let nb = *self.boundary.back().unwrap();
                if self.boundary.len() > 1 && !self.connect(x, nb as usize) {
                    return false;
                }
                self.triangle(back, nb, x);
                continue;
            }
            break;
        }
        self.boundary.push_back(x as u32);
        true
    }

    /// True once every face is placed and every face is closed.
    pub(crate) fn is_closed(&self) -> bool {
        self.placed == self.faces && self.pentagons == 12 && self.need.iter().all(|&d| d == 0)
    }

    pub(crate) fn take_triangles(&mut self) -> Vec<[usize; 3]> {
        self.triangles.take().unwrap_or_default()
    }
}

/// Dual triangulation with rotations, the substrate for spiral unwinding.
#[derive(Clone, Debug)]
pub struct Triangulation {
    deg: Vec<u8>,
    rot: Vec<[u32; 6]>,
}

impl Triangulation {
    pub fn from_fullerene(fg: &FullereneGraph) -> Self {
        let f = fg.face_count();
        let mut deg = vec![0u8; f];
        let mut rot = vec![[0u32; 6]; f];
        for id in 0..f {
            let nb = fg.face_neighbors(id);
            deg[id] = nb.len() as u8;
            for (i, &g) in nb.iter().enumerate() {
                rot[id][i] = g as u32;
            }
        }
        Triangulation { deg, rot }
    }

    /// Rotations from consistently oriented triangles over nodes `0..nodes`.
    pub(crate) fn from_triangles(nodes: usize, tris: &[[usize; 3]]) -> Option<Self> {
        // next[a] stores pairs (b, c): c follows b around a.
        let mut pairs: Vec<Vec<(u32, u32)>> = vec![Vec::with_capacity(6); nodes];
        for &[a, b, c] in tris {
            pairs[a].push((b as u32, c as u32));
            pairs[b].push((c as u32, a as u32));
            pairs[c].push((a as u32, b as u32));
        }
        let mut deg = vec![0u8; nodes];
        let mut rot = vec![[0u32; 6]; nodes];
        for a in 0..nodes {
            let p = &pairs[a];
            if p.is_empty() || p.len() > 6 {
                return None;
            }
            let mut cur = p[0].0;
            for slot in 0..p.len() {
                rot[a][slot] = cur;
                cur = p.iter().find(|&&(b, _)| b == cur)?.1;
            }
            if cur != p[0].0 {
                return None;
            }
            deg[a] = p.len() as u8;
        }
        Some(Triangulation { deg, rot })
    }

    pub fn node_count(&self) -> usize {
        self.deg.len()
    }

    fn neighbors(&self, a: usize) -> &[u32] {
        &self.rot[a][..self.deg[a] as usize]
    }

    /// Neighbor of `a` that follows `b` in direction `forward`.
    fn step(&self, a: usize, b: usize, forward: bool) -> usize {
        let d = self.deg[a] as usize;
        let i = self.neighbors(a).iter().position(|&x| x as usize == b).expect("adjacent");
        let j = if forward { (i + 1) % d } else { (i + d - 1) % d };
        self.rot[a][j] as usize
    }
}

/// Outcome of unwinding one spiral start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Unwound {
    /// The spiral closes; `smaller` says it beats the bound it was compared to.
    Closed { positions: [usize; 12], order: Vec<usize>, smaller: bool },
    /// Abandoned: provably not smaller than the bound.
    Larger,
    /// The spiral from this start does not close.
    Failed,
}

/// Unwinds the spiral starting at face `f0`, then `f1`, turning `forward`.
pub(crate) fn unwind(t: &Triangulation, f0: usize, f1: usize, forward: bool, bound: Option<&[usize; 12]>) -> Unwound {
    let f = t.node_count();
    let mut placed = vec![false; f];
    let mut remaining: Vec<u8> = t.deg.clone();
    let mut order = Vec::with_capacity(f);
    let mut positions = [0usize; 12];
    let mut pent = 0usize;
    let mut smaller = bound.is_none();

    // Places `x`; returns the number of already placed neighbors.
    let mut place = |x: usize, placed: &mut Vec<bool>, order: &mut Vec<usize>| -> Option<usize> {
        placed[x] = true;
        order.push(x);
        let mut count = 0;
        for &y in t.neighbors(x) {
            let y = y as usize;
            if placed[y] && y != x {
                remaining[y] -= 1;
                count += 1;
            }
        }
        remaining[x] -= count as u8;
        let step = order.len();
        let is_pent = t.deg[x] == 5;
        if !smaller {
            let b = bound.unwrap();
            let expect = pent < 12 && b[pent] == step;
            match (is_pent, expect) {
                (true, false) => smaller = true,
                (false, true) => return None,
                _ => {}
            }
        }
        if is_pent {
            if pent == 12 {
                return None;
            }
            positions[pent] = step;
            pent += 1;
        }
        Some(count)
    };

    if f0 == f1 {
        return Unwound::Failed;
    }
    let f2 = t.step(f0, f1, forward);
    let mut boundary: VecDeque<usize> = VecDeque::with_capacity(f);
    for x in [f0, f1, f2] {
        if place(x, &mut placed, &mut order).is_none() {
            return Unwound::Larger;
        }
        boundary.push_back(x);
    }
    while order.len() < f {
        let b0 = *boundary.front().unwrap();
        let bm = *boundary.back().unwrap();
        if b0 == bm {
            return Unwound::Failed;
        }
        let x = t.step(b0, bm, forward);
        if placed[x] {
            return Unwound::Failed;
        }
        let Some(touching) = place(x, &mut placed, &mut order) else {
            return Unwound::Larger;
        };
        let mut connected = 2;
        loop {
            let front = *boundary.front().unwrap();
            if boundary.len() > 1 && remaining_zero(t, &placed, front) {
                boundary.pop_front();
                let nf = *boundary.front().unwrap();
                if boundary.len() > 1 {
                    if !t.neighbors(x).contains(&(nf as u32)) {
                        return Unwound::Failed;
                    }
                    connected += 1;
                }
                continue;
            }
            let back = *boundary.back().unwrap();
            if boundary.len() > 1 && remaining_zero(t, &placed, back) {
                boundary.pop_back();
                let nb = *boundary.back().unwrap();
                if boundary.len() > 1 {
                    if !t.neighbors(x).contains(&(nb as u32)) {
                        return Unwound::Failed;
                    }
                    connected += 1;
                }
                continue;
            }
            break;
        }
        if connected != touching {
            return Unwound::Failed;
        }
        boundary.push_back(x);
    }
    if pent != 12 {
        return Unwound::Failed;
    }
    Unwound::Closed { positions, order, smaller }
}

fn remaining_zero(t: &Triangulation, placed: &[bool], x: usize) -> bool {
    t.neighbors(x).iter().all(|&y| placed[y as usize])
}

/// Winds a spiral code into a fullerene.
pub fn wind_from_spiral(code: &SpiralCode) -> Result<FullereneGraph, SpiralError> {
    wind_with_order(code).map(|(fg, _)| fg)
}

/// Winds a spiral and also returns, for each face of the result, its
/// 0-based position in the spiral.
pub fn wind_with_order(code: &SpiralCode) -> Result<(FullereneGraph, Vec<usize>), SpiralError> {
    code.check()?;
    if code.n % 2 == 1 || code.n < 20 {
        return Err(SpiralError::BadVertexCount(code.n));
    }
    let tris = wind_triangles(&code.face_sizes())?;
    let g = triangles_to_cubic(&tris).map_err(|_| SpiralError::DoesNotClose { step: code.face_count() })?;
    let fg = validate_fullerene(g)?;
    let nodes = face_nodes(&fg, &tris);
    Ok((fg, nodes))
}

pub(crate) fn wind_triangles(sizes: &[u8]) -> Result<Vec<[usize; 3]>, SpiralError> {
    let mut w = Winder::new(sizes.len(), true);
    for (i, &s) in sizes.iter().enumerate() {
        if !w.push(s) {
            return Err(SpiralError::DoesNotClose { step: i + 1 });
        }
    }
    if !w.is_closed() {
        return Err(SpiralError::DoesNotClose { step: sizes.len() });
    }
    Ok(w.take_triangles())
}

/// All spiral starts: every face, every neighbor, both turning directions.
fn starts(t: &Triangulation) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
    (0..t.node_count()).flat_map(move |a| {
        t.neighbors(a)
            .iter()
            .flat_map(move |&b| [(a, b as usize, true), (a, b as usize, false)])
    })
}

/// Lexicographically smallest closing spiral of `fg`.
pub fn canonical_spiral(fg: &FullereneGraph) -> Result<SpiralCode, SpiralError> {
    canonical_spiral_with_order(fg).map(|(c, _)| c)
}

/// Canonical spiral plus the face order realizing it.
pub fn canonical_spiral_with_order(fg: &FullereneGraph) -> Result<(SpiralCode, Vec<usize>), SpiralError> {
    let t = Triangulation::from_fullerene(fg);
    let mut best: Option<([usize; 12], Vec<usize>)> = None;
    // Pentagon starts first: they usually give the minimum and tighten the bound early.
    let mut all: Vec<_> = starts(&t).collect();
    all.sort_by_key(|&(a, _, _)| t.deg[a] != 5);
    for (a, b, fwd) in all {
        let bound = best.as_ref().map(|(p, _)| p);
        if let Unwound::Closed { positions, order, smaller } = unwind(&t, a, b, fwd, bound) {
            if smaller {
                best = Some((positions, order));
            }
        }
    }
    let (positions, order) = best.ok_or(SpiralError::Unspirallable)?;
    Ok((SpiralCode { n: fg.vertex_count(), positions }, order))
}

/// True when no start of `t` yields a spiral smaller than `candidate`.
pub(crate) fn is_canonical(t: &Triangulation, candidate: &[usize; 12]) -> bool {
    let mut all: Vec<_> = starts(t).collect();
    all.sort_by_key(|&(a, _, _)| t.deg[a] != 5);
    for (a, b, fwd) in all {
        if let Unwound::Closed { smaller: true, .. } = unwind(t, a, b, fwd, Some(candidate)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_code;

    pub(crate) const C60_IH: [usize; 12] = [1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32];

    fn code(n: usize, p: [usize; 12]) -> SpiralCode {
        SpiralCode::new(n, p).unwrap()
    }

    #[test]
    fn dodecahedron_winds_and_is_canonical() {
        let c = code(20, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
        let fg = wind_from_spiral(&c).unwrap();
        assert_eq!(fg.vertex_count(), 20);
        assert_eq!(fg.pentagons().len(), 12);
        assert_eq!(canonical_spiral(&fg).unwrap(), c);
    }

    #[test]
    fn c60_face_counts_and_spiral() {
        let fg = wind_from_spiral(&code(60, C60_IH)).unwrap();
        assert_eq!(fg.vertex_count(), 60);
        assert_eq!(fg.faces().iter().filter(|f| f.size() == 6).count(), 20);
        assert_eq!(canonical_spiral(&fg).unwrap().positions, C60_IH);
    }

    #[test]
    fn no_spiral_closes_at_22_vertices() {
        // f = 13: drop one face from 1..=13.
        for skip in 1..=13 {
            let p: Vec<usize> = (1..=13).filter(|&x| x != skip).collect();
            let c = code(22, p.try_into().unwrap());
            assert!(wind_from_spiral(&c).is_err(), "skip {skip}");
        }
    }

    #[test]
    fn wound_order_matches_face_sizes() {
        let c = code(60, C60_IH);
        let (fg, order) = wind_with_order(&c).unwrap();
        let sizes = c.face_sizes();
        for (face, &pos) in order.iter().enumerate() {
            assert_eq!(fg.face_size(face), sizes[pos] as usize);
        }
    }

    #[test]
    fn canonical_spiral_ignores_labels() {
        let fg = wind_from_spiral(&code(60, C60_IH)).unwrap();
        let n = fg.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v * 7 + 11) % n).collect();
        let relabeled = validate_fullerene(fg.graph().relabel(&perm)).unwrap();
        let mirrored = validate_fullerene(fg.graph().mirror()).unwrap();
        assert_eq!(canonical_spiral(&relabeled).unwrap(), canonical_spiral(&fg).unwrap());
        assert_eq!(canonical_spiral(&mirrored).unwrap(), canonical_spiral(&fg).unwrap());
        assert_eq!(canonical_code(relabeled.graph()), canonical_code(fg.graph()));
    }

    #[test]
    fn text_form_roundtrips() {
        let c = code(60, C60_IH);
        let s = c.to_string();
        assert_eq!(s, "60: 1 7 9 11 13 15 18 20 22 24 26 32");
        assert_eq!(s.parse::<SpiralCode>().unwrap(), c);
        assert!("60: 1 2".parse::<SpiralCode>().is_err());
        assert!(SpiralCode::new(20, [2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]).is_err());
        assert!(SpiralCode::new(20, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13]).is_err());
    }
}
