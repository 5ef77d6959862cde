use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use fullclust::clusters::{cluster_distance, pentagon_clusters, pip, separation_number, PentagonCluster};
use fullclust::generator::cached_spirals;
use fullclust::goldberg::{
    goldberg_5_0, inflate_preserving_clusters, lift_hexagon_cycle, reinstate_cluster, separating_cycle_witnesses,
    tube_fullerene_6_6, HexagonCycle,
};
use fullclust::symmetry::automorphisms;
use fullclust::{wind_from_spiral, FullereneGraph, SpiralCode};

fn wind(s: &str) -> FullereneGraph {
    wind_from_spiral(&s.parse::<SpiralCode>().unwrap()).unwrap()
}

fn check_goldberg(f: &FullereneGraph) {
    let (big, map) = goldberg_5_0(f);
    assert_eq!(big.vertex_count(), 25 * f.vertex_count());
    assert_eq!(big.pentagons().len(), 12);
    assert!(pip(&big).parts().iter().all(|&p| p == 1));
    let child = |p: usize| *map.children(&[p]).iter().find(|&&c| big.is_pentagon(c)).unwrap();
    for &p in f.pentagons() {
        for &q in f.face_neighbors(p) {
            if f.is_pentagon(q) {
                assert_eq!(big.face_distance(child(p), child(q)).unwrap(), 5);
            }
        }
    }
    // every parent's children form one edge-connected piece
    for parent in 0..f.face_count() {
        let kids = map.children(&[parent]);
        let mut seen = vec![kids[0]];
        let mut i = 0;
        while i < seen.len() {
            for &g in big.face_neighbors(seen[i]) {
                if kids.contains(&g) && !seen.contains(&g) {
                    seen.push(g);
                }
            }
            i += 1;
        }
        assert_eq!(seen.len(), kids.len());
    }
    assert!(automorphisms(&big).order() >= automorphisms(f).order());
}

#[test]
fn goldberg_on_small_fullerenes() {
    check_goldberg(&wind("20: 1 2 3 4 5 6 7 8 9 10 11 12"));
    check_goldberg(&wind("60: 1 7 9 11 13 15 18 20 22 24 26 32"));
    let mut rng = StdRng::seed_from_u64(40);
    let all = cached_spirals(40);
    for code in all.choose_multiple(&mut rng, 3) {
        check_goldberg(&wind_from_spiral(code).unwrap());
    }
}

#[test]
fn tubes_separate_further_with_each_ring() {
    let mut last = 0;
    for j in 1..=6 {
        let t = tube_fullerene_6_6(j).unwrap();
        assert_eq!(pip(&t).parts(), [6, 6]);
        let s = separation_number(&t).unwrap();
        assert_eq!(s, j + 1);
        assert!(s > last);
        last = s;
        let cs = pentagon_clusters(&t);
        let w = separating_cycle_witnesses(&t, &cs[0], &cs[1]);
        assert_eq!(w.len(), j);
        assert!(w.len() <= cluster_distance(&t, &cs[0], &cs[1]).unwrap());
    }
}

fn pentagons_inside(fg: &FullereneGraph, c: &HexagonCycle) -> usize {
    fg.pentagons().iter().filter(|&&p| c.is_inside(p)).count()
}

#[test]
fn lifted_cycles() {
    let t = tube_fullerene_6_6(3).unwrap();
    let cs = pentagon_clusters(&t);
    let ring = &separating_cycle_witnesses(&t, &cs[0], &cs[1])[1];
    let (big, map) = goldberg_5_0(&t);
    let three = lift_hexagon_cycle(&big, ring, &map).unwrap();
    for (i, c) in three.iter().enumerate() {
        assert_eq!(pentagons_inside(&big, c), pentagons_inside(&t, ring));
        for f in 0..big.face_count() {
            if ring.is_inside(map.parent(f)) {
                assert!(c.is_inside(f));
            }
        }
        for d in &three[..i] {
            assert!(c.is_disjoint(d));
        }
    }
    let (bigger, map2) = goldberg_5_0(&big);
    let nine: Vec<HexagonCycle> =
        three.iter().flat_map(|c| lift_hexagon_cycle(&bigger, c, &map2).unwrap()).collect();
    assert_eq!(nine.len(), 9);
    for (i, c) in nine.iter().enumerate() {
        for d in &nine[..i] {
            assert!(c.is_disjoint(d));
        }
    }
}

#[test]
fn witnesses_never_exceed_distance() {
    for code in cached_spirals(44).iter().step_by(5) {
        let fg = wind_from_spiral(code).unwrap();
        let cs = pentagon_clusters(&fg);
        for a in &cs {
            for b in &cs {
                if a != b {
                    let w = separating_cycle_witnesses(&fg, a, b);
                    assert!(w.len() <= cluster_distance(&fg, a, b).unwrap());
                    for (i, c) in w.iter().enumerate() {
                        assert!(w[..i].iter().all(|d| c.is_disjoint(d)));
                    }
                }
            }
        }
    }
}

#[test]
fn reinstating_one_cluster_restores_its_size() {
    let seed = wind("40: 1 2 6 9 10 12 13 15 16 18 20 22");
    let cs = pentagon_clusters(&seed);
    let (big, map) = goldberg_5_0(&seed);
    let one = reinstate_cluster(&big, &map, &cs[0]).unwrap();
    let expected: Vec<usize> = std::iter::once(cs[0].size()).chain(std::iter::repeat_n(1, 12 - cs[0].size())).collect();
    assert_eq!(pip(&one).parts(), expected);
    // a cluster of one pentagon has nothing to reinstate
    let lone = PentagonCluster { faces: vec![seed.pentagons()[0]] };
    assert!(reinstate_cluster(&big, &map, &lone).is_err());
}

#[test]
fn inflation_keeps_partitions() {
    let c60 = wind("60: 1 7 9 11 13 15 18 20 22 24 26 32");
    let once = inflate_preserving_clusters(&c60, 1).unwrap();
    assert_eq!(once.vertex_count(), 1500);
    assert_eq!(pip(&once), pip(&c60));
    for code in ["50: 1 2 9 10 12 13 15 17 20 23 25 27", "44: 1 2 3 4 11 12 15 17 20 21 22 24"] {
        let seed = wind(code);
        let f1 = inflate_preserving_clusters(&seed, 1).unwrap();
        assert_eq!(pip(&f1), pip(&seed));
        assert!(separation_number(&f1).unwrap() >= 3);
    }
    assert!(inflate_preserving_clusters(&tube_fullerene_6_6(1).unwrap(), 1).is_err());
}
