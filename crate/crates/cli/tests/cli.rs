use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fullclust(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fullclust"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn text(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_and_bounds() {
    let o = fullclust(&["classify", "9,2,1"], None);
    assert!(o.status.success());
    assert_eq!(text(&o), "impossible (a)\n");
    assert_eq!(text(&fullclust(&["classify", "12"], None)), "finitely many (b): 41\n");
    assert_eq!(text(&fullclust(&["classify", "6,6"], None)), "infinitely many, unbounded separation (d)\n");
    assert_eq!(text(&fullclust(&["bounds", "--cluster", "7"], None)), "max hexagons 52, max vertices 124\n");
    assert_eq!(text(&fullclust(&["bounds", "--p", "0", "--h", "3"], None)), "min boundary 12\n");
}

#[test]
fn census_of_the_twelve_cluster() {
    let o = fullclust(&["census", "--n-max", "48", "--pip", "12"], None);
    assert!(o.status.success());
    let out = text(&o);
    assert_eq!(out.lines().count(), 41);
    assert!(out.lines().all(|l| l.split('\t').nth(2) == Some("12")));
    assert!(out.starts_with("20\t20:1\t12\t-\tIh\tpentagon_cluster_12\n"));
    // same bytes with one worker
    let again = fullclust(&["--jobs", "1", "census", "--n-max", "48", "--pip", "12"], None);
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn generate_then_analyze() {
    let pc = fullclust(&["generate", "--n", "40"], None);
    assert!(pc.status.success());
    let o = fullclust(&["analyze", "--format", "json"], Some(&pc.stdout));
    assert!(o.status.success());
    let out = text(&o);
    assert_eq!(out.lines().count(), 40);
    assert!(out.lines().nth(38).unwrap().contains(r#""spiral_id":"40:39","pip":"10,1,1","separation":2,"group":"D5d""#));
    let ids = text(&fullclust(&["spiral-id"], Some(&pc.stdout)));
    assert_eq!(ids.lines().last(), Some("40:40"));
    let groups = text(&fullclust(&["point-group"], Some(&pc.stdout)));
    assert_eq!(groups.lines().nth(38), Some("D5d"));
}

#[test]
fn external_stream_source() {
    let pc = fullclust(&["generate", "--n-max", "32"], None);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.pc");
    std::fs::write(&path, &pc.stdout).unwrap();
    let o = fullclust(&["census", "--n", "32", "--source", "external-stream", "--in", path.to_str().unwrap()], None);
    assert!(o.status.success());
    assert_eq!(text(&o).lines().count(), 6);
}

#[test]
fn constructions() {
    let o = fullclust(&["tube", "--rings", "2"], None);
    assert_eq!(text(&o), "40\t40:1\t6,6\t3\tD5d\tpentagon_cluster_6_6\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.pc");
    let o = fullclust(&["inflate", "--pip", "3,3,3,3", "--rounds", "1", "--out", path.to_str().unwrap()], None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rec = text(&o);
    let cols: Vec<&str> = rec.trim_end().split('\t').collect();
    assert_eq!(cols[1], "-");
    assert_eq!(cols[2], "3,3,3,3");
    assert!(cols[3].parse::<usize>().unwrap() >= 3);
    let again = fullclust(&["analyze", "--in", path.to_str().unwrap()], None);
    assert_eq!(text(&again), rec);
}

#[test]
fn exit_codes() {
    assert_eq!(fullclust(&["classify", "9,2"], None).status.code(), Some(1));
    assert_eq!(fullclust(&["census"], None).status.code(), Some(1));
    assert_eq!(fullclust(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(fullclust(&["tube", "--rings", "0"], None).status.code(), Some(1));
    assert_eq!(fullclust(&["analyze"], Some(b"not planar code")).status.code(), Some(2));
    assert_eq!(fullclust(&["inflate", "--pip", "7,5"], None).status.code(), Some(2));
    assert_eq!(fullclust(&["--help"], None).status.code(), Some(0));
}
