use thiserror::Error;

use crate::words::Symbol;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {symbol} is outside the alphabet [1, {rank}]")]
    SymbolOutOfRange { symbol: Symbol, rank: u32 },

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("matrix dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("block structures differ: {left} blocks vs {right} blocks")]
    BlockMismatch { left: usize, right: usize },

    #[error("index pair ({i}, {j}) requires i < j")]
    UnorderedPair { i: Symbol, j: Symbol },

    #[error("index pair ({i}, {j}) requires i != j")]
    DiagonalPair { i: Symbol, j: Symbol },

    #[error("word contains symbol {symbol}, expected only 1 and 2")]
    NotBinary { symbol: Symbol },

    #[error("cannot parse word {input:?}: {reason}")]
    ParseWord { input: String, reason: String },

    #[error("cannot parse identity {input:?}: {reason}")]
    ParseIdentity { input: String, reason: String },

    #[error("unknown semiring {0:?}, expected \"tropical\" or \"natural\"")]
    UnknownSemiring(String),

    #[error("unknown monoid family {0:?}")]
    UnknownFamily(String),

    #[error("identity has {count} variables, exact decision supports at most {max}")]
    TooManyVariables { count: usize, max: usize },

    #[error("rank {rank} is too large here, at most {max} is supported")]
    RankTooLarge { rank: u32, max: u32 },

    #[error("no exact identity decider for the {0} family")]
    NoExactDecider(String),

    #[error("multiplication table is not a monoid: {0}")]
    NotAMonoid(String),

    #[error("invalid canonical form: {0}")]
    InvalidForm(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
