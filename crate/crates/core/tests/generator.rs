use std::collections::BTreeSet;
use std::io::Write;

use fullclust::generator::{
    canonical_spirals, count_isomers, generate_isomers, spiral_id, EnumerationTask, NativeSpiral, SourceOptions,
    SourceRegistry,
};
use fullclust::graph::canonical_code;
use fullclust::planar_code::PlanarCodeWriter;
use fullclust::{canonical_spiral, wind_from_spiral, SpiralCode};

/// Every 12-subset of spiral positions, wound without pruning, then
/// deduplicated by a BFS canonical code rather than by spirals.
fn brute_force_classes(n: usize) -> BTreeSet<Vec<u32>> {
    let f = n / 2 + 2;
    let mut classes = BTreeSet::new();
    let mut pos = [0usize; 12];
    fn rec(k: usize, start: usize, f: usize, n: usize, pos: &mut [usize; 12], out: &mut BTreeSet<Vec<u32>>) {
        if k == 12 {
            if let Ok(fg) = wind_from_spiral(&SpiralCode { n, positions: *pos }) {
                out.insert(canonical_code(fg.graph()));
            }
            return;
        }
        for p in start..=f - (11 - k) {
            pos[k] = p;
            rec(k + 1, p + 1, f, n, pos, out);
        }
    }
    rec(0, 1, f, n, &mut pos, &mut classes);
    classes
}

#[test]
fn matches_brute_force_up_to_30() {
    for n in (20..=30).step_by(2) {
        let oracle = brute_force_classes(n);
        let task = EnumerationTask::new(n..=n);
        let native: BTreeSet<Vec<u32>> = generate_isomers(&task, &NativeSpiral)
            .unwrap()
            .map(|iso| canonical_code(iso.unwrap().graph.graph()))
            .collect();
        assert_eq!(native, oracle, "n = {n}");
        assert_eq!(count_isomers(n), oracle.len());
    }
    assert_eq!(count_isomers(20), 1);
    assert_eq!(count_isomers(22), 0);
}

#[test]
fn known_counts() {
    let known = [(24, 1), (26, 1), (28, 2), (30, 3), (32, 6), (34, 6), (36, 15), (38, 17), (40, 40), (42, 45), (44, 89)];
    for (n, c) in known {
        assert_eq!(count_isomers(n), c, "n = {n}");
    }
    assert!(canonical_spirals(21).is_empty());
    assert!(canonical_spirals(18).is_empty());
}

#[test]
fn output_is_canonical_and_sorted() {
    for n in [36, 40] {
        let spirals = canonical_spirals(n);
        assert!(spirals.windows(2).all(|w| w[0] < w[1]));
        for (i, code) in spirals.iter().enumerate() {
            let fg = wind_from_spiral(code).unwrap();
            assert_eq!(canonical_spiral(&fg).unwrap(), *code);
            assert_eq!(spiral_id(&fg).unwrap(), (n, i + 1));
        }
    }
}

#[test]
fn filters_apply_before_emission() {
    let task = EnumerationTask::new(20..=30).with_filter(|iso| iso.n() == 28);
    let ids: Vec<String> = generate_isomers(&task, &NativeSpiral).unwrap().map(|r| r.unwrap().id().unwrap()).collect();
    assert_eq!(ids, ["28:1", "28:2"]);
}

#[test]
fn external_stream_reads_corpus() {
    let registry = SourceRegistry::default();
    assert_eq!(registry.names().collect::<Vec<_>>(), ["native-spiral", "external-stream"]);
    assert!(registry.build("fullgen", &SourceOptions::default()).is_err());

    let mut file = tempfile::NamedTempFile::new().unwrap();
    let mut w = PlanarCodeWriter::new(Vec::new(), false).unwrap();
    for code in canonical_spirals(32).iter().chain(canonical_spirals(34).iter()) {
        w.write(wind_from_spiral(code).unwrap().graph()).unwrap();
    }
    file.write_all(&w.into_inner()).unwrap();

    let opts = SourceOptions { input: Some(file.path().to_path_buf()), wide: false };
    let source = registry.build("external-stream", &opts).unwrap();
    assert_eq!(source.name(), "external-stream");
    let got: Vec<SpiralCode> = generate_isomers(&EnumerationTask::new(34..=34), source.as_ref())
        .unwrap()
        .map(|r| r.unwrap().spiral.unwrap())
        .collect();
    assert_eq!(got, canonical_spirals(34));
}
