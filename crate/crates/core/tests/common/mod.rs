//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use fullclust::patch::Patch;

/// Every patch with exactly `p` pentagons and `h` hexagons reachable by
/// attaching one face at a time along a single boundary path, up to
/// isomorphism. Grows level by level from single faces.
pub fn all_patches(p: usize, h: usize) -> Vec<Patch> {
    let mut level: BTreeMap<Vec<u32>, Patch> = BTreeMap::new();
    for size in [5, 6] {
        let q = Patch::single_face(size).unwrap();
        level.insert(q.canonical_code(), q);
    }
    for _ in 1..p + h {
        let mut next = BTreeMap::new();
        for q in level.values() {
            if q.pentagons() > p || q.hexagons() > h {
                continue;
            }
            for child in children(q) {
                if child.pentagons() <= p && child.hexagons() <= h {
                    next.entry(child.canonical_code()).or_insert(child);
                }
            }
        }
        level = next;
    }
    level.into_values().filter(|q| q.pentagons() == p && q.hexagons() == h).collect()
}

pub fn children(q: &Patch) -> Vec<Patch> {
    let b = q.boundary_length();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for start in 0..b {
        for len in 1..b.min(6) {
            for size in [5, 6] {
                let mut c = q.clone();
                if c.add_face(start, len, size).is_ok() && c.validate().is_ok() && seen.insert(c.canonical_code()) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Smallest boundary over `all_patches(p, h)`.
pub fn min_boundary_by_enumeration(p: usize, h: usize) -> usize {
    all_patches(p, h).iter().map(Patch::boundary_length).min().expect("some patch exists")
}

/// A patch grown from `choices`: each entry picks one of the possible
/// single-face attachments, skipping pentagons once `max_pentagons` is reached.
pub fn grown_patch(first_is_pentagon: bool, choices: &[usize], max_pentagons: usize) -> Patch {
    let mut q = Patch::single_face(if first_is_pentagon && max_pentagons > 0 { 5 } else { 6 }).unwrap();
    for &c in choices {
        let options: Vec<Patch> =
            children(&q).into_iter().filter(|x| x.pentagons() <= max_pentagons).collect();
        if options.is_empty() {
            break;
        }
        q = options[c % options.len()].clone();
    }
    q
}

/// Repeatedly attaches the face (pentagons first, then hexagons) that
/// leaves the shortest boundary; yields the patch after every hexagon.
pub fn greedy_growth(p: usize, hexagons: usize) -> Vec<Patch> {
    let mut q = Patch::single_face(if p > 0 { 5 } else { 6 }).unwrap();
    let mut out = Vec::new();
    while q.hexagons() < hexagons {
        let size = if q.pentagons() < p { 5 } else { 6 };
        let b = q.boundary_length();
        let mut best: Option<Patch> = None;
        for start in 0..b {
            for len in 1..b.min(6) {
                let mut c = q.clone();
                if c.add_face(start, len, size).is_ok()
                    && best.as_ref().is_none_or(|x| c.boundary_length() < x.boundary_length())
                {
                    best = Some(c);
                }
            }
        }
        q = best.expect("some attachment exists");
        if q.pentagons() == p && q.hexagons() > 0 {
            out.push(q.clone());
        }
    }
    out
}

pub mod table2;
