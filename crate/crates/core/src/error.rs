use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    NonPositivePart(Vec<usize>),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("letter {0} does not occur in the word")]
    AbsentLetter(u16),

    #[error("no rule for variable `{0}`")]
    MissingRule(String),

    #[error("grammar index k must be at least 1")]
    ZeroGrammarIndex,

    #[error("unexpected variable `{var}` ({context})")]
    UnexpectedVariable { var: String, context: &'static str },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is not symmetric in x and y")]
    NotSymmetric,

    #[error("nonzero residue after gamma elimination")]
    InternalResidue,

    #[error("z-slice {index}: {source}")]
    Slice {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("subset element {element} is outside [1, {n}]")]
    SubsetOutOfRange { element: u16, n: u16 },

    #[error("the zero polynomial has no well-defined root count")]
    ZeroPolynomial,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
