use crate::error::{Error, Result};

pub const DEFAULT_FIELD_CAP: u64 = 64;
pub const DEFAULT_VERTEX_CAP: u64 = 1 << 16;
pub const HARD_VERTEX_CEILING: u64 = 1 << 20;

/// Size limits applied when building fields, rings and graphs.
///
/// Graphs use a dense bit matrix, so a graph at the vertex cap occupies
/// `cap^2 / 8` bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub field_cap: u64,
    pub vertex_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            field_cap: DEFAULT_FIELD_CAP,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl Limits {
    pub fn with_vertex_cap(vertex_cap: u64) -> Result<Self> {
        if vertex_cap > HARD_VERTEX_CEILING {
            return Err(Error::CapAboveCeiling(vertex_cap));
        }
        Ok(Limits {
            vertex_cap,
            ..Limits::default()
        })
    }

    pub(crate) fn check_vertices(&self, vertices: Option<u64>) -> Result<usize> {
        match vertices {
            Some(v) if v <= self.vertex_cap => Ok(v as usize),
            Some(v) => Err(Error::GraphTooLarge {
                vertices: v.to_string(),
                cap: self.vertex_cap,
            }),
            None => Err(Error::GraphTooLarge {
                vertices: "> 2^64".to_string(),
                cap: self.vertex_cap,
            }),
        }
    }
}
