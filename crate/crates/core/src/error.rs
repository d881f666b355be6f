use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ground set: {0}")]
    InvalidGroundSet(String),

    #[error("malformed choice document: {0}")]
    Malformed(String),

    #[error("menu `{0}` is missing from the choice")]
    MissingMenu(String),

    #[error("menu `{menu}` picks `{item}`, which is not one of its members")]
    NonMemberChoice { menu: String, item: String },

    #[error("unknown item label `{0}`")]
    UnknownLabel(String),

    #[error("menu `{0}` is listed more than once")]
    DuplicateMenu(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid rationale schedule: {0}")]
    InvalidSchedule(String),

    #[error("ground sets of {0} items are not supported here")]
    UnsupportedSize(usize),

    #[error("decision modes disagree for {model}: {detail}")]
    ModeDisagreement { model: String, detail: String },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}
