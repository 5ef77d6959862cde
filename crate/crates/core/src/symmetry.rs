//! Automorphism groups of embedded fullerene graphs and the point group
//! they determine.
//!
//! An automorphism is a permutation of arcs that commutes with reversal
//! and either keeps the rotation system or reverses it. Fixing the image
//! of one arc determines the rest, so the group is found by trying every
//! arc (in both orientations) as the image of arc 0.

use std::fmt;
use std::str::FromStr;

use crate::graph::{FullereneGraph, PlaneGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    arcs: Vec<usize>,
    preserving: bool,
}

impl Automorphism {
    /// Image of each arc.
    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }

    /// True for rotations, false for reflections and rotoreflections.
    pub fn preserves_orientation(&self) -> bool {
        self.preserving
    }

    pub fn vertex_image(&self, g: &PlaneGraph, v: usize) -> usize {
        g.tail(self.arcs[g.arc(v, 0)])
    }

    pub fn is_identity(&self) -> bool {
        self.arcs.iter().enumerate().all(|(a, &b)| a == b)
    }

    fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            arcs: other.arcs.iter().map(|&a| self.arcs[a]).collect(),
            preserving: self.preserving == other.preserving,
        }
    }

    /// Smallest k > 0 with self^k = identity.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    /// Number of vertices, edges and faces mapped to themselves.
    pub fn fixed_sites(&self, fg: &FullereneGraph) -> usize {
        let g = fg.graph();
        let vertices = (0..g.vertex_count()).filter(|&v| self.vertex_image(g, v) == v).count();
        let edges = (0..g.arc_count())
            .filter(|&a| a < g.reverse(a) && (self.arcs[a] == a || self.arcs[a] == g.reverse(a)))
            .count();
        let faces = fg.faces().iter().filter(|f| fg.arc_face(self.arcs[f.arcs[0]]) == f.id).count();
        vertices + edges + faces
    }
}

/// Extends `arc 0 -> image` to a full automorphism, if one exists.
fn extend(g: &PlaneGraph, image: usize, preserving: bool) -> Option<Automorphism> {
    let m = g.arc_count();
    if g.degree(g.tail(image)) != g.degree(0) {
        return None;
    }
    let mut map = vec![usize::MAX; m];
    map[0] = image;
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        let b = map[a];
        let turn = if preserving { g.next_around(b) } else { g.prev_around(b) };
        for (x, y) in [(g.next_around(a), turn), (g.reverse(a), g.reverse(b))] {
            if map[x] == usize::MAX {
                if g.degree(g.tail(y)) != g.degree(g.tail(x)) {
                    return None;
                }
                map[x] = y;
                stack.push(x);
            } else if map[x] != y {
                return None;
            }
        }
    }
    Some(Automorphism { arcs: map, preserving })
}

#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    elements: Vec<Automorphism>,
    rotation_order: usize,
}

impl AutomorphismGroup {
    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Order of the orientation-preserving subgroup.
    pub fn rotation_order(&self) -> usize {
        self.rotation_order
    }
}

/// All automorphisms of the embedded graph, identity first.
pub fn automorphisms(fg: &FullereneGraph) -> AutomorphismGroup {
    let g = fg.graph();
    let root_face = fg.face_size(fg.arc_face(0));
    let root_left = fg.face_size(fg.arc_face(g.reverse(0)));
    let mut elements = Vec::new();
    for preserving in [true, false] {
        for b in 0..g.arc_count() {
            // the face on the right of an arc stays on its right under a
            // rotation and moves to the left under a reflection
            let (right, left) = (fg.face_size(fg.arc_face(b)), fg.face_size(fg.arc_face(g.reverse(b))));
            let sizes_match = if preserving { (right, left) == (root_face, root_left) } else { (left, right) == (root_face, root_left) };
            if !sizes_match {
                continue;
            }
            if let Some(aut) = extend(g, b, preserving) {
                elements.push(aut);
            }
        }
    }
    let rotation_order = elements.iter().filter(|a| a.preserving).count();
    AutomorphismGroup { elements, rotation_order }
}

/// The 28 point groups a fullerene can have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointGroup {
    C1,
    C2,
    C3,
    Ci,
    Cs,
    S4,
    S6,
    C2v,
    C2h,
    C3v,
    C3h,
    D2,
    D3,
    D5,
    D6,
    D2h,
    D2d,
    D3h,
    D3d,
    D5h,
    D5d,
    D6h,
    D6d,
    T,
    Td,
    Th,
    I,
    Ih,
}

impl PointGroup {
    pub const ALL: [PointGroup; 28] = {
        use PointGroup::*;
        [C1, C2, C3, Ci, Cs, S4, S6, C2v, C2h, C3v, C3h, D2, D3, D5, D6, D2h, D2d, D3h, D3d, D5h, D5d, D6h, D6d, T, Td, Th, I, Ih]
    };

    pub fn name(&self) -> &'static str {
        use PointGroup::*;
        match self {
            C1 => "C1",
            C2 => "C2",
            C3 => "C3",
            Ci => "Ci",
            Cs => "Cs",
            S4 => "S4",
            S6 => "S6",
            C2v => "C2v",
            C2h => "C2h",
            C3v => "C3v",
            C3h => "C3h",
            D2 => "D2",
            D3 => "D3",
            D5 => "D5",
            D6 => "D6",
            D2h => "D2h",
            D2d => "D2d",
            D3h => "D3h",
            D3d => "D3d",
            D5h => "D5h",
            D5d => "D5d",
            D6h => "D6h",
            D6d => "D6d",
            T => "T",
            Td => "Td",
            Th => "Th",
            I => "I",
            Ih => "Ih",
        }
    }

    /// Group order.
    pub fn order(&self) -> usize {
        use PointGroup::*;
        match self {
            C1 => 1,
            C2 | Ci | Cs => 2,
            C3 => 3,
            S4 | D2 | C2v | C2h => 4,
            S6 | D3 | C3v | C3h => 6,
            D2h | D2d => 8,
            D5 => 10,
            D6 | D3h | D3d | T => 12,
            D5h | D5d => 20,
            D6h | D6d | Td | Th => 24,
            I => 60,
            Ih => 120,
        }
    }

    pub fn is_chiral(&self) -> bool {
        use PointGroup::*;
        matches!(self, C1 | C2 | C3 | D2 | D3 | D5 | D6 | T | I)
    }
}

impl fmt::Display for PointGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown point group {0:?}")]
pub struct UnknownPointGroup(pub String);

impl FromStr for PointGroup {
    type Err = UnknownPointGroup;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().replace(['_', '{', '}'], "");
        PointGroup::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(&t))
            .ok_or_else(|| UnknownPointGroup(s.to_string()))
    }
}

/// Names a group from its elements: the rotation subgroup fixes the
/// proper part, and the reflections (mirrors with fixed sites, the
/// inversion without any, rotoreflections of order 4) fix the rest.
pub fn classify(fg: &FullereneGraph, group: &AutomorphismGroup) -> PointGroup {
    use PointGroup::*;
    let rotations: Vec<&Automorphism> = group.elements.iter().filter(|a| a.preserving).collect();
    let reversing: Vec<&Automorphism> = group.elements.iter().filter(|a| !a.preserving).collect();
    let has_order = |k: usize| rotations.iter().any(|a| a.order() == k);
    let mut mirrors = 0;
    let mut inversion = false;
    let mut fourfold = false;
    for a in &reversing {
        match a.order() {
            2 if a.fixed_sites(fg) == 0 => inversion = true,
            2 => mirrors += 1,
            4 => fourfold = true,
            _ => {}
        }
    }
    let achiral = !reversing.is_empty();
    match (group.rotation_order, achiral) {
        (1, false) => C1,
        (1, true) if inversion => Ci,
        (1, true) => Cs,
        (2, false) => C2,
        (2, true) if fourfold => S4,
        (2, true) if inversion => C2h,
        (2, true) => C2v,
        (3, false) => C3,
        (3, true) if inversion => S6,
        (3, true) if mirrors == 3 => C3v,
        (3, true) => C3h,
        (4, false) => D2,
        (4, true) if inversion => D2h,
        (4, true) => D2d,
        (6, false) => D3,
        (6, true) if inversion => D3d,
        (6, true) => D3h,
        (10, false) => D5,
        (10, true) if inversion => D5d,
        (10, true) => D5h,
        (12, false) if has_order(6) => D6,
        (12, true) if has_order(6) && inversion => D6h,
        (12, true) if has_order(6) => D6d,
        (12, false) => T,
        (12, true) if inversion => Th,
        (12, true) => Td,
        (60, false) => I,
        (60, true) => Ih,
        (r, _) => panic!("no fullerene point group has a rotation subgroup of order {r}"),
    }
}

pub fn point_group(fg: &FullereneGraph) -> PointGroup {
    classify(fg, &automorphisms(fg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spiral::{wind_from_spiral, SpiralCode};

    fn wind(n: usize, p: [usize; 12]) -> FullereneGraph {
        wind_from_spiral(&SpiralCode::new(n, p).unwrap()).unwrap()
    }

    #[test]
    fn dodecahedron() {
        let fg = wind(20, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
        let group = automorphisms(&fg);
        assert_eq!((group.order(), group.rotation_order()), (120, 60));
        assert!(group.elements()[0].is_identity());
        assert_eq!(classify(&fg, &group), PointGroup::Ih);
    }

    #[test]
    fn buckminsterfullerene() {
        let fg = wind(60, [1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]);
        assert_eq!(point_group(&fg), PointGroup::Ih);
    }

    #[test]
    fn names_round_trip() {
        for g in PointGroup::ALL {
            assert_eq!(g.name().parse::<PointGroup>().unwrap(), g);
        }
        assert_eq!("D_{5d}".parse::<PointGroup>().unwrap(), PointGroup::D5d);
        assert!("C7".parse::<PointGroup>().is_err());
    }
}
