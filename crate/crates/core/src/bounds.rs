//! Boundary-length lower bounds for patches with at most five pentagons,
//! and the hexagon and vertex caps they imply for fullerenes containing a
//! large pentagon cluster.
//!
//! All ceilings of square roots are computed on integers: `⌈√x⌉` is the
//! least `m` with `m² ≥ x`, and `⌈√(X/4) + 1/2⌉` is the least `m` with
//! `(2m − 1)² ≥ X`.

use crate::error::PatchError;

fn ceil_sqrt(x: u64) -> u64 {
    let mut m = (x as f64).sqrt() as u64;
    while m * m < x {
        m += 1;
    }
    while m > 0 && (m - 1) * (m - 1) >= x {
        m -= 1;
    }
    m
}

/// Least `m >= 1` with `(2m - 1)^2 >= x`.
fn ceil_half_shifted_sqrt(x: u64) -> u64 {
    let r = ceil_sqrt(x);
    // 2m - 1 >= r and odd
    (r + 1).div_ceil(2).max(1)
}

/// Least boundary length of a patch with `p <= 5` pentagons and `h` hexagons.
pub fn min_boundary_length(p: usize, h: usize) -> Result<usize, PatchError> {
    let h = h as u64;
    let b = match p {
        0 if h == 0 => return Err(PatchError::Degenerate),
        0 => 2 * ceil_sqrt(12 * h - 3),
        1 => 2 * ceil_half_shifted_sqrt(40 * h + 25) - 1,
        // 8h + 14: spiral patches attain it for every h; 8h + 6 is not attained for h in {0, 1, 2, 3, 5, ..}
        2 => 2 * ceil_sqrt(8 * h + 14),
        3 => 2 * ceil_half_shifted_sqrt(24 * h + 81) - 1,
        4 => 2 * ceil_sqrt(4 * h + 25),
        5 => 2 * ceil_half_shifted_sqrt(8 * h + 113) - 1,
        _ => return Err(PatchError::TooManyPentagons(p)),
    };
    Ok(b as usize)
}

/// Largest `h` such that a patch with `p` pentagons, `h` hexagons and
/// boundary at most `b` is not excluded by [`min_boundary_length`].
/// Returns 0 when no such `h` exists.
pub fn max_hexagons_in_patch(p: usize, b: usize) -> Result<usize, PatchError> {
    if p > 5 {
        return Err(PatchError::TooManyPentagons(p));
    }
    // min_boundary_length is non-decreasing in h and grows like sqrt(h),
    // so h <= b^2 is a safe search ceiling.
    let fits = |h: usize| match min_boundary_length(p, h) {
        Ok(min) => min <= b,
        Err(_) => true,
    };
    let (mut lo, mut hi) = (0usize, b * b + 1);
    if !fits(1) {
        return Ok(0);
    }
    lo = lo.max(1);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Sum of the boundary lengths of the complement of a `k`-cluster is at
/// most `5k - 2(k - 1)`: the cluster has at least `k - 1` internal edges.
pub fn complement_boundary_budget(k: usize) -> usize {
    3 * k + 2
}

/// Hexagon cap for a fullerene with a pentagon cluster of size `k`,
/// computed from the complement budget and the single-patch optimum.
/// Several complement patches never beat one merged patch with the same
/// total boundary, so the single-patch value bounds all cases.
pub fn max_hexagons_with_cluster(k: usize) -> Result<usize, PatchError> {
    if !(7..=12).contains(&k) {
        return Err(PatchError::ClusterSizeOutOfRange(k));
    }
    let p = 12 - k;
    let budget = complement_boundary_budget(k);
    (1..=budget)
        .map(|b| max_hexagons_in_patch(p, b))
        .try_fold(0, |acc, h| h.map(|h| acc.max(h)))
}

/// Published hexagon caps for cluster sizes 7..=12.
pub const PUBLISHED_HEXAGON_CAPS: [(usize, usize); 6] = [(7, 52), (8, 36), (9, 31), (10, 30), (11, 30), (12, 30)];

/// Vertex cap for fullerenes with a cluster of size at least 7: the
/// largest hexagon cap over k = 7..=12, converted with f = 12 + h and
/// n = 2(f - 2).
pub fn max_vertices_with_big_cluster() -> usize {
    let h = (7..=12)
        .map(|k| max_hexagons_with_cluster(k).expect("k in range"))
        .max()
        .unwrap();
    2 * (12 + h - 2)
}
