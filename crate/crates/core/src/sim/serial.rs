//! Serial command encoding: one ASCII byte per primitive, then `\n`.
//!
//! | primitive | byte |
//! |-----------|------|
//! | FLIP      | `f`  |
//! | ROT_CW    | `r`  |
//! | ROT_CCW   | `l`  |
//! | BOT_CW    | `c`  |
//! | BOT_CCW   | `a`  |
//! | BOT_2     | `s`  |

use thiserror::Error;

use crate::compiler::{CostModel, MachineProgram, Primitive};

const TERMINATOR: u8 = b'\n';

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SerialError {
    #[error("unknown command byte at offset {0}")]
    BadByte(usize),
    #[error("missing line terminator")]
    MissingTerminator,
}

fn byte_of(p: Primitive) -> u8 {
    match p {
        Primitive::Flip => b'f',
        Primitive::RotCw => b'r',
        Primitive::RotCcw => b'l',
        Primitive::BotCw => b'c',
        Primitive::BotCcw => b'a',
        Primitive::Bot2 => b's',
    }
}

fn primitive_of(b: u8) -> Option<Primitive> {
    Some(match b {
        b'f' => Primitive::Flip,
        b'r' => Primitive::RotCw,
        b'l' => Primitive::RotCcw,
        b'c' => Primitive::BotCw,
        b'a' => Primitive::BotCcw,
        b's' => Primitive::Bot2,
        _ => return None,
    })
}

pub fn encode_serial(prog: &MachineProgram) -> Vec<u8> {
    let mut out: Vec<u8> = prog.primitives().iter().map(|&p| byte_of(p)).collect();
    out.push(TERMINATOR);
    out
}

/// Decodes one command line. The terminator must be the last byte.
pub fn decode_serial(bytes: &[u8], cost: &CostModel) -> Result<MachineProgram, SerialError> {
    let mut prims = Vec::with_capacity(bytes.len());
    for (i, &b) in bytes.iter().enumerate() {
        if b == TERMINATOR {
            if i + 1 != bytes.len() {
                return Err(SerialError::BadByte(i + 1));
            }
            return Ok(MachineProgram::from_primitives(prims, cost));
        }
        prims.push(primitive_of(b).ok_or(SerialError::BadByte(i))?);
    }
    Err(SerialError::MissingTerminator)
}
