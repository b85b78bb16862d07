//! Front-end plumbing for the space-form classifier: the bundled group
//! catalog, report serialization, and the lemma-verification suites.

pub mod catalog;
pub mod report;
pub mod verify;

use spaceform_core::cohomology::CohomologyError;
use spaceform_core::group::GroupError;
use spaceform_core::spaceform::SpaceFormError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    SpaceForm(#[from] SpaceFormError),
    #[error("unknown verification suite {name:?} (available: {available})")]
    UnknownSuite { name: String, available: String },
    #[error("class index {index} out of range: the group has {count} classes")]
    ClassIndex { index: usize, count: usize },
}

impl CliError {
    /// Process exit code: 2 usage/bad input, 3 file IO, 4 bound exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Group(e) => group_exit(e),
            CliError::Cohomology(e) => cohomology_exit(e),
            CliError::SpaceForm(e) => spaceform_exit(e),
            CliError::UnknownSuite { .. } | CliError::ClassIndex { .. } => 2,
        }
    }
}

fn group_exit(e: &GroupError) -> i32 {
    match e {
        GroupError::OrderBound { .. } => 4,
        GroupError::Io(_) | GroupError::FileFormat { .. } => 3,
        _ => 2,
    }
}

fn cohomology_exit(e: &CohomologyError) -> i32 {
    match e {
        CohomologyError::Group(g) => group_exit(g),
        _ => 2,
    }
}

fn spaceform_exit(e: &SpaceFormError) -> i32 {
    match e {
        SpaceFormError::Cohomology(c) => cohomology_exit(c),
        _ => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let bound = CliError::Group(GroupError::OrderBound {
            order: 100,
            bound: 64,
        });
        assert_eq!(bound.exit_code(), 4);

        let parse = CliError::Group(GroupError::SpecParse {
            spec: "X".into(),
            reason: "bad".into(),
        });
        assert_eq!(parse.exit_code(), 2);

        let io = CliError::Group(GroupError::Io(std::io::Error::other("x")));
        assert_eq!(io.exit_code(), 3);

        let nested = CliError::SpaceForm(SpaceFormError::Cohomology(CohomologyError::Group(
            GroupError::OrderBound {
                order: 40,
                bound: 32,
            },
        )));
        assert_eq!(nested.exit_code(), 4);

        let suite = CliError::UnknownSuite {
            name: "x".into(),
            available: "y".into(),
        };
        assert_eq!(suite.exit_code(), 2);
    }
}
