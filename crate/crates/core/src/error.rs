use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("trivial game: {0}")]
    TrivialGame(&'static str),
    #[error("minimal winning family is not an antichain: {0} is contained in {1}")]
    NotAntichain(String, String),
    #[error("malformed game: {0}")]
    Malformed(String),
    #[error("player {player} out of range for a {n}-player game")]
    PlayerOutOfRange { player: usize, n: usize },
    #[error("bloc has no members")]
    EmptyBloc,
    #[error("bloc lead {0} is not a member of the bloc")]
    LeadNotInBloc(usize),
    #[error("player {0} is not a dummy")]
    NotADummy(usize),
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("{n} players exceeds the configured ceiling of {max}")]
    TooManyPlayers { n: usize, max: usize },
    #[error("operation requires a weighted game")]
    NotWeighted,
    #[error("weight sum {sum} exceeds the configured bound of {max}")]
    WeightSumTooLarge { sum: u128, max: u128 },
    #[error("game space too large: {0}")]
    SpaceTooLarge(String),
    #[error("unknown measure `{0}`")]
    UnknownMeasure(String),
    #[error("unknown corpus game `{0}`")]
    UnknownCorpusGame(String),
    #[error("unknown postulate `{0}`")]
    UnknownPostulate(String),
    #[error("postulate {postulate} does not accept qualifier {qualifier}")]
    WrongQualifier { postulate: String, qualifier: String },
    #[error("invalid game file: {0}")]
    GameFile(String),
}
