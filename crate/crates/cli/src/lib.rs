//! Rendering and error classification shared by the `toric` binary.

pub mod render;

use toric_core::Error;

/// Exit status for a library error: 2 for malformed input, 1 otherwise.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::EmptyCode
        | Error::NonSquareLength(_)
        | Error::InvalidDigit(_)
        | Error::InvalidTile(_)
        | Error::NonSquareGrid
        | Error::InvalidPrefix(_)
        | Error::UnknownGenerator(_)
        | Error::MissingParameter { .. }
        | Error::PdParse(_)
        | Error::PolyParse(_) => 2,
        _ => 1,
    }
}
