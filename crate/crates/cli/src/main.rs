use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fullclust::analysis::{analyze, analyze_isomer, spiral_id_string};
use fullclust::bounds::{max_hexagons_in_patch, max_hexagons_with_cluster, min_boundary_length};
use fullclust::clusters::{classify_partition, PartitionClass, Pip};
use fullclust::generator::{census, generate_isomers, EnumerationTask, SourceOptions, SourceRegistry, DEFAULT_ENUMERATION_LIMIT};
use fullclust::goldberg::{inflate_preserving_clusters, tube_fullerene_6_6};
use fullclust::planar_code::{write_analysis_record, PlanarCodeReader, PlanarCodeWriter, RecordFormat};
use fullclust::seeds::SeedTable;
use fullclust::symmetry::point_group;
use fullclust::{validate_fullerene, FullereneGraph};

#[derive(Parser)]
#[command(name = "fullclust", version, about = "Pentagon clusters in fullerene graphs")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write isomers as planar_code to stdout.
    Generate(Range),
    /// Read planar_code and print one record per graph.
    Analyze(Input),
    /// Enumerate isomers and print the records, optionally for one partition.
    Census(Range),
    /// Class of a partition of 12, e.g. `classify 9,2,1`.
    Classify { pip: String },
    /// Patch boundary and hexagon bounds.
    Bounds {
        /// Hexagon and vertex caps for a cluster of this size (7..=12).
        #[arg(long)]
        cluster: Option<usize>,
        /// Pentagons in a patch (0..=5).
        #[arg(long, short)]
        p: Option<usize>,
        /// Hexagons in a patch: prints the least boundary length.
        #[arg(long)]
        h: Option<usize>,
        /// Boundary length: prints the most hexagons.
        #[arg(long, short)]
        b: Option<usize>,
    },
    /// Inflate a seed keeping its partition.
    Inflate {
        /// Seed partition (parts at most 5).
        #[arg(long)]
        pip: Option<String>,
        /// Take the seed from planar_code instead (first graph).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        /// Seed table as PATH.pc + PATH.tsv instead of the bundled one.
        #[arg(long)]
        seed_table: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// The (6,6) nanotube fullerene with J hexagon rings.
    Tube {
        #[arg(long)]
        rings: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Spiral id (n:rank) of each graph read.
    SpiralId(Input),
    /// Point group of each graph read.
    PointGroup(Input),
}

#[derive(Args)]
struct Range {
    /// Exactly this many vertices.
    #[arg(long, conflicts_with = "n_max")]
    n: Option<usize>,
    /// All vertex counts from 20 up to this.
    #[arg(long)]
    n_max: Option<usize>,
    /// Keep only isomers with this partition, e.g. 12 or 7,5.
    #[arg(long)]
    pip: Option<String>,
    #[arg(long, default_value = "native-spiral")]
    source: String,
    /// Input for the external-stream source (default stdin).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, default_value = "tsv")]
    format: String,
}

#[derive(Args)]
struct Input {
    /// planar_code file, or `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    input: PathBuf,
    #[arg(long, default_value = "tsv")]
    format: String,
}

#[derive(Args)]
struct Output {
    #[arg(long, default_value = "tsv")]
    format: String,
    /// Also write the graph as planar_code here.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(1);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool set once");
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Data(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

/// Usage errors exit with 1, bad data and failed constructions with 2.
enum Error {
    Usage(String),
    Data(String),
}
use Error::{Data, Usage};

impl<E: std::fmt::Display> From<E> for Error {
    fn from(e: E) -> Self {
        Data(e.to_string())
    }
}

fn format_of(s: &str) -> Result<RecordFormat, Error> {
    s.parse().map_err(|_| Usage(format!("unknown format {s:?} (tsv or json)")))
}

fn pip_of(s: &str) -> Result<Pip, Error> {
    s.parse().map_err(|_| Usage(format!("{s:?} is not a partition of 12")))
}

fn open_input(path: &Path) -> Result<Box<dyn Read>, Error> {
    if path.as_os_str() == "-" {
        Ok(Box::new(io::stdin().lock()))
    } else {
        Ok(Box::new(BufReader::new(File::open(path).map_err(|e| Data(format!("{}: {e}", path.display())))?)))
    }
}

/// Streams fullerenes from planar_code, one at a time.
fn for_each_graph(path: &Path, mut f: impl FnMut(FullereneGraph) -> Result<(), Error>) -> Result<(), Error> {
    let reader = PlanarCodeReader::new(open_input(path)?).wide(true);
    for (i, g) in reader.enumerate() {
        let fg = validate_fullerene(g?).map_err(|e| Data(format!("record {}: {e}", i + 1)))?;
        f(fg)?;
    }
    Ok(())
}

fn vertex_range(r: &Range) -> Result<std::ops::RangeInclusive<usize>, Error> {
    match (r.n, r.n_max) {
        (Some(n), None) => Ok(n..=n),
        (None, Some(m)) => Ok(20..=m),
        _ => Err(Usage("give --n or --n-max".into())),
    }
}

fn run(command: Command) -> Result<(), Error> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match command {
        Command::Generate(r) => {
            let ns = vertex_range(&r)?;
            let want = r.pip.as_deref().map(pip_of).transpose()?;
            let registry = SourceRegistry::default();
            let source = registry
                .build(&r.source, &SourceOptions { input: r.input.clone(), wide: true })
                .map_err(|e| Usage(e.to_string()))?;
            let mut task = EnumerationTask::new(ns.clone());
            if let Some(p) = want {
                task = task.with_filter(move |iso| fullclust::clusters::pip(&iso.graph) == p);
            }
            let mut w = PlanarCodeWriter::new(&mut out, *ns.end() > 255)?;
            for iso in generate_isomers(&task, source.as_ref())? {
                w.write(iso?.graph.graph())?;
            }
            w.into_inner().flush()?;
        }
        Command::Analyze(inp) => {
            let format = format_of(&inp.format)?;
            for_each_graph(&inp.input, |fg| {
                let id = spiral_id_string(&fg, DEFAULT_ENUMERATION_LIMIT);
                write_analysis_record(&mut out, &analyze(&fg, id), format)?;
                Ok(())
            })?;
        }
        Command::Census(r) => {
            let ns = vertex_range(&r)?;
            let format = format_of(&r.format)?;
            let want = r.pip.as_deref().map(pip_of).transpose()?;
            let registry = SourceRegistry::default();
            let source = registry
                .build(&r.source, &SourceOptions { input: r.input.clone(), wide: true })
                .map_err(|e| Usage(e.to_string()))?;
            let mut seen = 0usize;
            let table = census(source.as_ref(), ns, |iso| {
                let rec = analyze_isomer(iso);
                let keep = want.as_ref().is_none_or(|p| p.parts() == rec.pip.as_slice());
                keep.then(|| ((iso.n(), iso.rank.unwrap_or(usize::MAX)), rec))
            })?;
            for recs in table.values() {
                for rec in recs {
                    write_analysis_record(&mut out, rec, format)?;
                    seen += 1;
                }
            }
            eprintln!("{seen} records");
        }
        Command::Classify { pip } => {
            let p = pip_of(&pip)?;
            let text = match classify_partition(&p) {
                PartitionClass::Impossible => "impossible (a)".to_string(),
                PartitionClass::Finite(k) => format!("finitely many (b): {k}"),
                PartitionClass::InfiniteBounded => "infinitely many, bounded separation (c)".to_string(),
                PartitionClass::InfiniteUnbounded => "infinitely many, unbounded separation (d)".to_string(),
            };
            writeln!(out, "{text}")?;
        }
        Command::Bounds { cluster, p, h, b } => match (cluster, p, h, b) {
            (Some(k), None, None, None) => {
                let hex = max_hexagons_with_cluster(k).map_err(|e| Usage(e.to_string()))?;
                writeln!(out, "max hexagons {hex}, max vertices {}", 2 * (12 + hex - 2))?;
            }
            (None, Some(p), Some(h), None) => {
                let m = min_boundary_length(p, h).map_err(|e| Usage(e.to_string()))?;
                writeln!(out, "min boundary {m}")?;
            }
            (None, Some(p), None, Some(b)) => {
                let m = max_hexagons_in_patch(p, b).map_err(|e| Usage(e.to_string()))?;
                writeln!(out, "max hexagons {m}")?;
            }
            _ => return Err(Usage("give --cluster K, or --p P with --h H or --b B".into())),
        },
        Command::Inflate { pip, input, rounds, seed_table, out: o } => {
            let format = format_of(&o.format)?;
            let seed = match (pip, input) {
                (Some(p), None) => {
                    let p = pip_of(&p)?;
                    let table = match seed_table {
                        Some(path) => SeedTable::load(&path)?,
                        None => SeedTable::bundled().clone(),
                    };
                    table.get(&p)?.graph.clone()
                }
                (None, Some(path)) => {
                    let mut first = None;
                    for_each_graph(&path, |fg| {
                        first.get_or_insert(fg);
                        Ok(())
                    })?;
                    first.ok_or_else(|| Data("no graph in input".into()))?
                }
                _ => return Err(Usage("give --pip or --in".into())),
            };
            let result = inflate_preserving_clusters(&seed, rounds)?;
            emit(&mut out, &result, format, o.out.as_deref())?;
        }
        Command::Tube { rings, out: o } => {
            let format = format_of(&o.format)?;
            let t = tube_fullerene_6_6(rings).map_err(|e| Usage(e.to_string()))?;
            emit(&mut out, &t, format, o.out.as_deref())?;
        }
        Command::SpiralId(inp) => {
            for_each_graph(&inp.input, |fg| {
                let id = spiral_id_string(&fg, DEFAULT_ENUMERATION_LIMIT).unwrap_or_else(|| "-".into());
                writeln!(out, "{id}")?;
                Ok(())
            })?;
        }
        Command::PointGroup(inp) => {
            for_each_graph(&inp.input, |fg| {
                writeln!(out, "{}", point_group(&fg))?;
                Ok(())
            })?;
        }
    }
    out.flush()?;
    Ok(())
}

fn emit(out: &mut impl Write, fg: &FullereneGraph, format: RecordFormat, path: Option<&Path>) -> Result<(), Error> {
    let id = spiral_id_string(fg, DEFAULT_ENUMERATION_LIMIT);
    write_analysis_record(out, &analyze(fg, id), format)?;
    if let Some(path) = path {
        let mut w = PlanarCodeWriter::new(BufWriter::new(File::create(path)?), fg.vertex_count() > 255)?;
        w.write(fg.graph())?;
        w.into_inner().flush()?;
    }
    Ok(())
}
