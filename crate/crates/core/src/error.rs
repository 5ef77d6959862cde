use thiserror::Error;

/// Errors raised while building or checking embedded graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    NeighborOutOfRange { vertex: usize, neighbor: usize },
    #[error("vertex {0} has a loop")]
    Loop(usize),
    #[error("vertices {0} and {1} are joined by parallel edges")]
    ParallelEdge(usize, usize),
    #[error("edge {0}-{1} is not listed symmetrically")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("face walk did not close within 2e steps")]
    FaceWalkDiverged,
    #[error("Euler relation fails: v={v}, e={e}, f={f}")]
    Euler { v: usize, e: usize, f: usize },
    #[error("face {face} is not a simple cycle")]
    NonSimpleFace { face: usize },
}

/// Reasons a plane graph is not a fullerene.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FullereneError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("face {face} has size {size}, expected 5 or 6")]
    BadFaceSize { face: usize, size: usize },
    #[error("graph has {0} pentagons, expected 12")]
    PentagonCount(usize),
}

/// Failures of the binary and text exchange formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("missing or corrupt header")]
    BadHeader,
    #[error("record {record} is truncated")]
    Truncated { record: usize },
    #[error("record {record}: neighbor {neighbor} out of range 1..={n}")]
    NeighborOutOfRange { record: usize, neighbor: usize, n: usize },
    #[error("record {record} declares zero vertices")]
    ZeroVertices { record: usize },
    #[error("graph with {0} vertices needs the two-byte extension")]
    TooLarge(usize),
    #[error("record {record} uses the two-byte extension, which is not enabled")]
    WideRecord { record: usize },
    #[error("graph with {0} vertices exceeds the two-byte limit")]
    TooLargeForWide(usize),
    #[error("record {record}: {source}")]
    Graph { record: usize, source: GraphError },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpiralError {
    #[error("spiral needs 12 strictly increasing positions within 1..={faces}")]
    BadPositions { faces: usize },
    #[error("no fullerene with {0} vertices")]
    BadVertexCount(usize),
    #[error("spiral does not close at face {step}")]
    DoesNotClose { step: usize },
    #[error("no spiral start closes; graph is unspirallable")]
    Unspirallable,
    #[error("enumeration limit is n <= {limit}, requested {n}")]
    AboveLimit { n: usize, limit: usize },
    #[error("graph not found among enumerated isomers")]
    NotFound,
    #[error(transparent)]
    Fullerene(#[from] FullereneError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatchError {
    #[error("patch bounds only apply to p <= 5, got p = {0}")]
    TooManyPentagons(usize),
    #[error("(p, h) = (0, 0) is not a patch")]
    Degenerate,
    #[error("cluster size {0} outside 7..=12")]
    ClusterSizeOutOfRange(usize),
    #[error("merge needs at least two patches")]
    TooFewPatches,
    #[error("patch has no boundary edge with two degree-2 ends")]
    NoGlueEdge,
    #[error("invalid patch: {0}")]
    Invalid(String),
    #[error("hexagon growth did not reach the target boundary")]
    GrowthStalled,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("not a partition of 12: {0}")]
    NotAPartition(String),
    #[error("clusters are identical")]
    SameCluster,
    #[error("signature is not a six-pentagon catalog cluster")]
    NotInCatalog,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("tube needs at least one hexagon ring")]
    NoRings,
    #[error("partition has a part larger than 5")]
    PartTooLarge,
    #[error("no seed for partition {0}")]
    SeedMissing(String),
    #[error("seed table corrupt: {0}")]
    SeedTable(String),
    #[error("no replacement patch found for a cluster of size {0}")]
    NoReplacement(usize),
    #[error("replacement produced an invalid graph: {0}")]
    Invalid(#[from] FullereneError),
    #[error("cluster of size {0} is outside 2..=5")]
    ClusterSize(usize),
    #[error("not a hexagon cycle: {0}")]
    Cycle(String),
    #[error("cluster region is not a disc")]
    Region,
}

#[derive(Debug, Error)]
pub enum GeneratorError {
    #[error("unknown isomer source {0:?}")]
    UnknownSource(String),
    #[error("cannot open input: {0}")]
    Input(std::io::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("record {record} is not a fullerene: {source}")]
    NotFullerene { record: usize, source: FullereneError },
    #[error(transparent)]
    Spiral(#[from] SpiralError),
}
