//! Isomer enumeration.
//!
//! The native source grows spirals face by face, abandoning a branch as
//! soon as the winding fails, and keeps a complete spiral only when it is
//! the canonical spiral of its fullerene. Work is split by the first two
//! pentagon positions and merged back in canonical order, so the output
//! does not depend on the thread count.

use std::collections::{BTreeMap, HashMap};
use std::fs::File;
use std::io::Read;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{GeneratorError, SpiralError};
use crate::graph::{validate_fullerene, FullereneGraph};
use crate::planar_code::PlanarCodeReader;
use crate::spiral::{canonical_spiral, is_canonical, wind_from_spiral, wind_triangles, SpiralCode, Triangulation};

/// Largest `n` for which `spiral_id` enumerates on demand.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 64;

/// True when fullerenes with `n` vertices exist.
pub fn fullerene_exists(n: usize) -> bool {
    n.is_multiple_of(2) && n >= 20 && n != 22
}

/// Canonical spirals of every isomer with `n` vertices, sorted.
pub fn canonical_spirals(n: usize) -> Vec<SpiralCode> {
    if !fullerene_exists(n) {
        log::warn!("no fullerenes with {n} vertices");
        return Vec::new();
    }
    let f = n / 2 + 2;
    let tasks: Vec<(usize, usize)> = (1..=f)
        .flat_map(|p1| (p1 + 1..=f).map(move |p2| (p1, p2)))
        .filter(|&(_, p2)| f - p2 >= 10)
        .collect();
    let mut out: Vec<SpiralCode> = tasks
        .par_iter()
        .flat_map_iter(|&(p1, p2)| search_prefix(n, p1, p2))
        .collect();
    out.sort_unstable();
    out
}

/// Canonical spirals for `n`, computed once per process.
pub fn cached_spirals(n: usize) -> Arc<Vec<SpiralCode>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<SpiralCode>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // computed unlocked so the parallel search never waits on the cache
    let spirals = Arc::new(canonical_spirals(n));
    cache.lock().unwrap().entry(n).or_insert(spirals).clone()
}

pub fn count_isomers(n: usize) -> usize {
    cached_spirals(n).len()
}

/// `(n, rank)` of `fg` among all isomers with its vertex count, enumerating
/// them on first use. Fails above [`DEFAULT_ENUMERATION_LIMIT`].
pub fn spiral_id(fg: &FullereneGraph) -> Result<(usize, usize), SpiralError> {
    spiral_id_with_limit(fg, DEFAULT_ENUMERATION_LIMIT)
}

pub fn spiral_id_with_limit(fg: &FullereneGraph, limit: usize) -> Result<(usize, usize), SpiralError> {
    let n = fg.vertex_count();
    if n > limit {
        return Err(SpiralError::AboveLimit { n, limit });
    }
    let code = canonical_spiral(fg)?;
    match cached_spirals(n).binary_search(&code) {
        Ok(i) => Ok((n, i + 1)),
        Err(_) => Err(SpiralError::NotFound),
    }
}

/// A fullerene with its canonical spiral and, when known, its rank among
/// the canonical spirals of all isomers with the same `n`.
#[derive(Clone, Debug)]
pub struct Isomer {
    pub graph: FullereneGraph,
    pub spiral: Option<SpiralCode>,
    pub rank: Option<usize>,
}

impl Isomer {
    pub fn n(&self) -> usize {
        self.graph.vertex_count()
    }

    /// The `n:rank` label, if the rank is known.
    pub fn id(&self) -> Option<String> {
        self.rank.map(|r| format!("{}:{}", self.n(), r))
    }
}

pub type IsomerStream<'a> = Box<dyn Iterator<Item = Result<Isomer, GeneratorError>> + Send + 'a>;

/// Something that yields fullerene isomers, one per isomorphism class.
pub trait IsomerSource: Send + Sync {
    fn name(&self) -> &str;

    /// Isomers with vertex counts in `ns`, in increasing `n`.
    fn isomers(&self, ns: RangeInclusive<usize>) -> Result<IsomerStream<'_>, GeneratorError>;
}

/// Enumerates isomers with the spiral search above; ranks are exact.
pub struct NativeSpiral;

impl IsomerSource for NativeSpiral {
    fn name(&self) -> &str {
        "native-spiral"
    }

    fn isomers(&self, ns: RangeInclusive<usize>) -> Result<IsomerStream<'_>, GeneratorError> {
        let ns: Vec<usize> = if ns.start() == ns.end() {
            vec![*ns.start()]
        } else {
            ns.filter(|&n| fullerene_exists(n)).collect()
        };
        let it = ns.into_iter().flat_map(|n| {
            let spirals = cached_spirals(n);
            (0..spirals.len()).map(move |i| {
                let code = spirals[i];
                let graph = wind_from_spiral(&code)?;
                Ok(Isomer { graph, spiral: Some(code), rank: Some(i + 1) })
            })
        });
        Ok(Box::new(it))
    }
}

/// Reads isomers from a planar_code corpus (a file, or stdin when no path
/// is given). Graphs are validated and given their canonical spiral; ranks
/// are left unknown. Records outside the requested range are skipped.
pub struct ExternalStream {
    pub input: Option<PathBuf>,
    pub wide: bool,
}

impl IsomerSource for ExternalStream {
    fn name(&self) -> &str {
        "external-stream"
    }

    fn isomers(&self, ns: RangeInclusive<usize>) -> Result<IsomerStream<'_>, GeneratorError> {
        let input: Box<dyn Read + Send> = match &self.input {
            Some(path) => Box::new(File::open(path).map_err(GeneratorError::Input)?),
            None => Box::new(std::io::stdin()),
        };
        let it = PlanarCodeReader::new(input).wide(self.wide).enumerate().filter_map(move |(record, g)| {
            let g = match g {
                Ok(g) if ns.contains(&g.vertex_count()) => g,
                Ok(_) => return None,
                Err(e) => return Some(Err(e.into())),
            };
            let graph = match validate_fullerene(g) {
                Ok(fg) => fg,
                Err(source) => return Some(Err(GeneratorError::NotFullerene { record, source })),
            };
            let spiral = match canonical_spiral(&graph) {
                Ok(code) => Some(code),
                Err(e) => {
                    log::warn!("record {record}: {e}");
                    None
                }
            };
            Some(Ok(Isomer { graph, spiral, rank: None }))
        });
        Ok(Box::new(it))
    }
}

#[derive(Clone, Debug, Default)]
pub struct SourceOptions {
    pub input: Option<PathBuf>,
    pub wide: bool,
}

type SourceConstructor = Box<dyn Fn(&SourceOptions) -> Box<dyn IsomerSource> + Send + Sync>;

/// Isomer sources by name. The default registry knows `native-spiral` and
/// `external-stream`.
pub struct SourceRegistry {
    entries: Vec<(String, SourceConstructor)>,
}

impl SourceRegistry {
    pub fn empty() -> Self {
        SourceRegistry { entries: Vec::new() }
    }

    /// Adds or replaces a source.
    pub fn register(&mut self, name: &str, build: impl Fn(&SourceOptions) -> Box<dyn IsomerSource> + Send + Sync + 'static) {
        self.entries.retain(|(n, _)| n != name);
        self.entries.push((name.to_string(), Box::new(build)));
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn build(&self, name: &str, opts: &SourceOptions) -> Result<Box<dyn IsomerSource>, GeneratorError> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, build)| build(opts))
            .ok_or_else(|| GeneratorError::UnknownSource(name.to_string()))
    }
}

impl Default for SourceRegistry {
    fn default() -> Self {
        let mut r = SourceRegistry::empty();
        r.register("native-spiral", |_| Box::new(NativeSpiral));
        r.register("external-stream", |o| Box::new(ExternalStream { input: o.input.clone(), wide: o.wide }));
        r
    }
}

pub type IsomerFilter = Arc<dyn Fn(&Isomer) -> bool + Send + Sync>;

/// What to enumerate: a vertex-count range and an optional predicate
/// applied to each validated isomer before it is emitted.
#[derive(Clone)]
pub struct EnumerationTask {
    pub ns: RangeInclusive<usize>,
    pub filter: Option<IsomerFilter>,
}

impl EnumerationTask {
    pub fn new(ns: RangeInclusive<usize>) -> Self {
        EnumerationTask { ns, filter: None }
    }

    pub fn with_filter(mut self, f: impl Fn(&Isomer) -> bool + Send + Sync + 'static) -> Self {
        self.filter = Some(Arc::new(f));
        self
    }
}

pub fn generate_isomers<'a>(task: &EnumerationTask, source: &'a dyn IsomerSource) -> Result<IsomerStream<'a>, GeneratorError> {
    let stream = source.isomers(task.ns.clone())?;
    match task.filter.clone() {
        None => Ok(stream),
        Some(keep) => Ok(Box::new(stream.filter(move |r| r.as_ref().map_or(true, |iso| keep(iso))))),
    }
}

const CENSUS_CHUNK: usize = 256;

/// Groups isomers by key. `classify` runs in parallel on chunks of the
/// stream; within each key, values keep stream order.
pub fn census<K, V, C>(
    source: &dyn IsomerSource,
    ns: RangeInclusive<usize>,
    classify: C,
) -> Result<BTreeMap<K, Vec<V>>, GeneratorError>
where
    K: Ord + Send,
    V: Send,
    C: Fn(&Isomer) -> Option<(K, V)> + Sync,
{
    let mut table: BTreeMap<K, Vec<V>> = BTreeMap::new();
    let mut stream = source.isomers(ns)?;
    loop {
        let chunk: Vec<Isomer> = stream.by_ref().take(CENSUS_CHUNK).collect::<Result<_, _>>()?;
        if chunk.is_empty() {
            break;
        }
        let rows: Vec<Option<(K, V)>> = chunk.par_iter().map(&classify).collect();
        for (k, v) in rows.into_iter().flatten() {
            table.entry(k).or_default().push(v);
        }
    }
    Ok(table)
}

fn search_prefix(n: usize, p1: usize, p2: usize) -> Vec<SpiralCode> {
    let f = n / 2 + 2;
    let mut w = CompactWinder::new(f);
    let mut sizes = vec![6u8; f];
    for k in 1..=p2 {
        let s = if k == p1 || k == p2 { 5 } else { 6 };
        sizes[k - 1] = s;
        if !w.push(s) {
            return Vec::new();
        }
    }
    let mut found = Vec::new();
    dfs(n, w, &mut sizes, &mut found);
    found
}

fn dfs(n: usize, w: CompactWinder, sizes: &mut [u8], found: &mut Vec<SpiralCode>) {
    let f = sizes.len();
    let k = w.placed();
    if k == f {
        if w.is_closed() {
            if let Some(code) = canonical_leaf(n, sizes) {
                found.push(code);
            }
        }
        return;
    }
    let pent = w.pentagons();
    let can_hex = f - k > 12 - pent;
    if pent < 12 {
        let mut next = w;
        sizes[k] = 5;
        if next.push(5) {
            dfs(n, next, sizes, found);
        }
    }
    if can_hex {
        let mut next = w;
        sizes[k] = 6;
        if next.push(6) {
            dfs(n, next, sizes, found);
        }
    }
}

fn canonical_leaf(n: usize, sizes: &[u8]) -> Option<SpiralCode> {
    let mut positions = [0usize; 12];
    let mut i = 0;
    for (k, &s) in sizes.iter().enumerate() {
        if s == 5 {
            positions[i] = k + 1;
            i += 1;
        }
    }
    let tris = wind_triangles(sizes).ok()?;
    let t = Triangulation::from_triangles(sizes.len(), &tris)?;
    is_canonical(&t, &positions).then_some(SpiralCode { n, positions })
}


/// Largest face count the search winder supports (n <= 124).
const MAX_FACES: usize = 64;

/// Spiral winder with inline storage, cheap to copy at every branch.
/// Mirrors `spiral::Winder` without recording triangles.
#[derive(Clone, Copy)]
struct CompactWinder {
    faces: u8,
    placed: u8,
    pentagons: u8,
    head: u8,
    len: u8,
    open: i16,
    need: [i8; MAX_FACES],
    adj_len: [u8; MAX_FACES],
    adj: [[u8; 6]; MAX_FACES],
    ring: [u8; MAX_FACES],
}

impl CompactWinder {
    fn new(faces: usize) -> Self {
        assert!(faces <= MAX_FACES, "search supports at most {MAX_FACES} faces");
        CompactWinder {
            faces: faces as u8,
            placed: 0,
            pentagons: 0,
            head: 0,
            len: 0,
            open: 0,
            need: [0; MAX_FACES],
            adj_len: [0; MAX_FACES],
            adj: [[0; 6]; MAX_FACES],
            ring: [0; MAX_FACES],
        }
    }

    fn placed(&self) -> usize {
        self.placed as usize
    }

    fn pentagons(&self) -> usize {
        self.pentagons as usize
    }

    fn front(&self) -> usize {
        self.ring[self.head as usize] as usize
    }

    fn back(&self) -> usize {
        self.ring[(self.head as usize + self.len as usize - 1) % MAX_FACES] as usize
    }

    fn push_back(&mut self, x: usize) {
        self.ring[(self.head as usize + self.len as usize) % MAX_FACES] = x as u8;
        self.len += 1;
    }

    fn connect(&mut self, a: usize, b: usize) -> bool {
        let la = self.adj_len[a] as usize;
        if self.adj[a][..la].contains(&(b as u8)) {
            return false;
        }
        self.need[a] -= 1;
        self.need[b] -= 1;
        self.open -= 2;
        if self.need[a] < 0 || self.need[b] < 0 {
            return false;
        }
        let lb = self.adj_len[b] as usize;
        self.adj[a][la] = b as u8;
        self.adj[b][lb] = a as u8;
        self.adj_len[a] += 1;
        self.adj_len[b] += 1;
        true
    }

    fn push(&mut self, size: u8) -> bool {
        let x = self.placed as usize;
        if x >= self.faces as usize {
            return false;
        }
        self.need[x] = size as i8;
        self.open += size as i16;
        self.placed += 1;
        if size == 5 {
            self.pentagons += 1;
        }
        if x == 0 {
            self.push_back(0);
            return true;
        }
        if x == 1 {
            self.push_back(1);
            return self.connect(0, 1);
        }
        let (front, back) = (self.front(), self.back());
        if front == back || !self.connect(x, back) || !self.connect(x, front) {
            return false;
        }
        loop {
            if self.len > 1 && self.need[self.front()] == 0 {
                self.head = ((self.head as usize + 1) % MAX_FACES) as u8;
                self.len -= 1;
                if self.len > 1 && !self.connect(x, self.front()) {
                    return false;
                }
                continue;
            }
            if self.len > 1 && self.need[self.back()] == 0 {
                self.len -= 1;
                if self.len > 1 && !self.connect(x, self.back()) {
                    return false;
                }
                continue;
            }
            break;
        }
        self.push_back(x);
        self.remainder_fits()
    }

    /// The unplaced faces form a patch whose boundary is the open boundary
    /// of the placed ones; reject lengths no such patch can have.
    fn remainder_fits(&self) -> bool {
        let rest = (self.faces - self.placed) as usize;
        if rest == 0 {
            return self.open == 0;
        }
        let b = self.open as usize;
        if b > 4 * rest + 2 {
            return false;
        }
        let p = 12 - self.pentagons as usize;
        if p <= 5 && rest >= p {
            if let Ok(min) = crate::bounds::min_boundary_length(p, rest - p) {
                return b >= min;
            }
        }
        true
    }

    fn is_closed(&self) -> bool {
        self.placed == self.faces
            && self.pentagons == 12
            && self.need[..self.faces as usize].iter().all(|&d| d == 0)
    }
}
