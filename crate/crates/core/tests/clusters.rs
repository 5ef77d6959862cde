mod common;

use std::collections::BTreeSet;

use fullclust::clusters::{
    cluster_distance, cluster_signature, complement, pentagon_clusters, pip, separation_number, six_cluster_catalog,
    tube_parameters_of_6_cluster, Pip,
};
use fullclust::generator::{cached_spirals, canonical_spirals};
use fullclust::symmetry::{automorphisms, point_group};
use fullclust::{wind_from_spiral, FullereneGraph};

fn isomer(id: &str) -> FullereneGraph {
    let (n, k) = id.split_once(':').unwrap();
    let (n, k): (usize, usize) = (n.parse().unwrap(), k.parse().unwrap());
    wind_from_spiral(&cached_spirals(n)[k - 1]).unwrap()
}

#[test]
fn table_entries_up_to_48() {
    for (partition, group, id) in common::table2::entries() {
        if id.split_once(':').unwrap().0.parse::<usize>().unwrap() > 48 {
            continue;
        }
        let fg = isomer(id);
        assert_eq!(pip(&fg), partition.parse::<Pip>().unwrap(), "{id}");
        assert_eq!(point_group(&fg).name(), group, "{id}");
    }
}

#[test]
fn distances_are_symmetric_and_bound_separation() {
    for code in canonical_spirals(44).iter().step_by(7) {
        let fg = wind_from_spiral(code).unwrap();
        let cs = pentagon_clusters(&fg);
        let s = separation_number(&fg);
        if cs.len() < 2 {
            assert_eq!(s, None);
            continue;
        }
        let mut least = usize::MAX;
        for a in &cs {
            for b in &cs {
                if a != b {
                    let d = cluster_distance(&fg, a, b).unwrap();
                    assert_eq!(d, cluster_distance(&fg, b, a).unwrap());
                    assert!(d >= 2);
                    least = least.min(d);
                }
            }
        }
        assert_eq!(s, Some(least));
    }
}

#[test]
fn complements_account_for_every_face() {
    for code in canonical_spirals(40).iter() {
        let fg = wind_from_spiral(code).unwrap();
        let cs = pentagon_clusters(&fg);
        let c = &cs[0];
        let parts = complement(&fg, c).unwrap();
        let faces: usize = parts.iter().map(|p| p.pentagons() + p.hexagons()).sum();
        assert_eq!(faces + c.size(), fg.face_count());
        let pentagons: usize = parts.iter().map(|p| p.pentagons()).sum();
        assert_eq!(pentagons, 12 - c.size());
    }
}

#[test]
fn six_clusters_are_catalogued() {
    let mut seen = BTreeSet::new();
    for n in (20..=50).step_by(2) {
        for code in canonical_spirals(n).iter() {
            let fg = wind_from_spiral(code).unwrap();
            for c in pentagon_clusters(&fg).iter().filter(|c| c.size() == 6) {
                let sig = cluster_signature(&fg, c);
                let tube = tube_parameters_of_6_cluster(&sig).unwrap_or_else(|_| panic!("{n}: {code}"));
                assert!(tube.in_t6());
                seen.insert(sig);
            }
        }
    }
    assert!(seen.len() <= six_cluster_catalog().len());
}

#[test]
fn invariants_survive_relabeling() {
    let fg = isomer("40:39");
    let n = fg.vertex_count();
    let perm: Vec<usize> = (0..n).map(|v| (v * 7 + 3) % n).collect();
    let relabeled = fullclust::validate_fullerene(fg.graph().relabel(&perm)).unwrap();
    assert_eq!(pip(&relabeled), pip(&fg));
    assert_eq!(separation_number(&relabeled), separation_number(&fg));
    assert_eq!(automorphisms(&relabeled).order(), automorphisms(&fg).order());
    assert_eq!(point_group(&relabeled), point_group(&fg));
    let mirrored = fullclust::validate_fullerene(fg.graph().mirror()).unwrap();
    assert_eq!(point_group(&mirrored), point_group(&fg));
    let a = cluster_signature(&fg, &pentagon_clusters(&fg)[0]);
    let b = cluster_signature(&mirrored, &pentagon_clusters(&mirrored)[0]);
    assert_eq!(a, b);
}
