use thiserror::Error;

use crate::arrangement::ArrangementError;
use crate::baselines::BaselineError;
use crate::extremal::ExtremalError;
use crate::scores::ScoreError;
use crate::stats::StatsError;
use crate::tree::TreeError;
use crate::treebank::TreebankError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Crate-level error; every module error converts into it.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Baseline(#[from] BaselineError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Score(#[from] ScoreError),
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error(transparent)]
    Treebank(#[from] TreebankError),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit code: 2 input error, 3 config error, 4 cap exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 3,
            Error::Tree(TreeError::CapExceeded { .. })
            | Error::Arrangement(ArrangementError::TooLarge { .. })
            | Error::Baseline(BaselineError::TooLarge { .. })
            | Error::Extremal(ExtremalError::CapExceeded { .. })
            | Error::Extremal(ExtremalError::Baseline(BaselineError::TooLarge { .. })) => 4,
            _ => 2,
        }
    }
}
