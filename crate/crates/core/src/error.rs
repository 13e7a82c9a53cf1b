use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown diagram name `{0}`")]
    UnknownDiagram(String),
    #[error("malformed diagram parameters: {0}")]
    MalformedParameters(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("vertex {0} is not in the diagram")]
    NoSuchVertex(usize),
    #[error("edge ({0}, {1}) already exists")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("diagram is not bipartite (odd cycle through vertex {0})")]
    NotBipartite(usize),
    #[error("orbit partition is not induced by a diagram automorphism: {0}")]
    BadOrbits(String),
    #[error("folded matrix violates the Cartan axioms: {0}")]
    FoldNotCartan(String),
    #[error("weights are not symmetrizable around a cycle through vertex {0}")]
    NotSymmetrizable(usize),
    #[error("operation requires finite type")]
    NotFiniteType,
    #[error("negative argument {0}")]
    Negative(String),
    #[error("no real root above {0}")]
    NoRootAbove(String),
    #[error("polynomial is not monic up to sign")]
    NotMonic,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("numeric validation failed: {0}")]
    Numeric(String),
    #[error("{0} out of range: {1}")]
    OutOfRange(&'static str, String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("group closure exceeded {0} elements")]
    ClosureCap(usize),
    #[error("subgroup is not embedded in the group")]
    NotEmbedded,
    #[error("eigenvalues of the class algebra could not be separated after {0} attempts")]
    EigenSeparation(usize),
    #[error("multiplicity {0} is not an integer")]
    NonIntegral(String),
    #[error("characters are linearly dependent or not decomposable: {0}")]
    Decomposition(String),
    #[error("no catalog extension for `{0}`")]
    NoExtension(String),
    #[error("no matching diagram: {0}")]
    NoMatch(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("{0}")]
    Other(String),
}
