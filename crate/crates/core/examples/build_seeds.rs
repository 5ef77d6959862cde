//! Rebuilds the bundled seed table.
//!
//!     cargo run --release -p fullclust-core --example build_seeds -- [N_MAX] [PATH]
//!
//! Every partition of 12 into parts of at most 5 gets the first isomer
//! (in spiral order, smallest n first) with that partition, up to N_MAX
//! vertices (default 70). A partition still missing is made from the
//! smallest seed that has all its clusters of size two or more: inflate
//! it once and reinstate just those clusters, so every other pentagon
//! ends up isolated.

use std::collections::BTreeMap;
use std::path::PathBuf;

use fullclust::clusters::{pentagon_clusters, pip, Pip};
use fullclust::generator::canonical_spirals;
use fullclust::goldberg::{goldberg_5_0, reinstate_clusters};
use fullclust::seeds::{Seed, SeedTable};
use fullclust::wind_from_spiral;

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max: usize = args.next().map_or(70, |a| a.parse().expect("N_MAX"));
    let path = PathBuf::from(args.next().unwrap_or_else(|| "crates/core/data/seeds".into()));
    let wanted: Vec<Pip> = Pip::all().into_iter().filter(|p| p.largest() <= 5).collect();

    let mut found: BTreeMap<Pip, Seed> = BTreeMap::new();
    for n in (20..=n_max).step_by(2) {
        for (i, code) in canonical_spirals(n).iter().enumerate() {
            let graph = wind_from_spiral(code).unwrap();
            let p = pip(&graph);
            if p.largest() <= 5 && !found.contains_key(&p) {
                found.insert(p.clone(), Seed { pip: p, source: format!("isomer {n}:{}", i + 1), graph });
            }
        }
        eprintln!("n = {n}: {} of {} partitions", found.len(), wanted.len());
        if found.len() == wanted.len() {
            break;
        }
    }

    for p in &wanted {
        if found.contains_key(p) {
            continue;
        }
        let big: Vec<usize> = p.parts().iter().copied().filter(|&x| x >= 2).collect();
        let donor = found
            .values()
            .filter(|s| s.source.starts_with("isomer"))
            .filter(|s| contains_all(s.pip.parts(), &big))
            .min_by_key(|s| s.graph.vertex_count())
            .expect("some seed has the required clusters")
            .clone();
        let mut clusters = pentagon_clusters(&donor.graph);
        let parents: Vec<_> = big
            .iter()
            .map(|&size| clusters.remove(clusters.iter().position(|c| c.size() == size).unwrap()))
            .collect();
        let (inflated, map) = goldberg_5_0(&donor.graph);
        let graph = reinstate_clusters(&inflated, &map, &parents).expect("reinstatement");
        assert_eq!(&pip(&graph), p);
        eprintln!("{p}: from {} ({} vertices)", donor.source, graph.vertex_count());
        let source = format!("partial reinstatement of {}", donor.source.trim_start_matches("isomer "));
        found.insert(p.clone(), Seed { pip: p.clone(), source, graph });
    }

    let mut table = SeedTable::default();
    for p in &wanted {
        table.push(found.remove(p).unwrap());
    }
    table.save(&path).expect("writing the seed table");
}

/// True if the multiset `have` contains the multiset `need`.
fn contains_all(have: &[usize], need: &[usize]) -> bool {
    let mut rest = have.to_vec();
    need.iter().all(|x| match rest.iter().position(|y| y == x) {
        Some(i) => {
            rest.remove(i);
            true
        }
        None => false,
    })
}
