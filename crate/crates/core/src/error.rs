use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// Color plane of an RGB image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    Red,
    Green,
    Blue,
}

impl Channel {
    pub const ALL: [Channel; 3] = [Channel::Red, Channel::Green, Channel::Blue];

    pub fn short_name(self) -> &'static str {
        match self {
            Channel::Red => "r",
            Channel::Green => "g",
            Channel::Blue => "b",
        }
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Channel::Red => "red",
            Channel::Green => "green",
            Channel::Blue => "blue",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimensions must be even, got {rows}x{cols} (rows x cols)")]
    OddDimension { rows: usize, cols: usize },

    #[error("input has a zero dimension")]
    EmptyInput,

    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("{len} values supplied for a {rows}x{cols} matrix")]
    LengthMismatch { rows: usize, cols: usize, len: usize },

    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },

    #[error("{}", capacity_message(*.channel, *.requested, *.capacity))]
    CapacityExceeded {
        channel: Option<Channel>,
        requested: usize,
        capacity: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),

    #[error("unsupported image format: {0}")]
    UnsupportedFormat(String),

    #[error("corrupt image: {0}")]
    CorruptImage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn capacity_message(channel: Option<Channel>, requested: usize, capacity: usize) -> String {
    match channel {
        Some(c) => format!("{c} plane: secret needs {requested} bits but the plane holds at most {capacity}"),
        None => format!("secret needs {requested} bits but the plane holds at most {capacity}"),
    }
}

impl Error {
    pub(crate) fn shape_mismatch(left: (usize, usize), right: (usize, usize)) -> Self {
        Error::ShapeMismatch {
            left_rows: left.0,
            left_cols: left.1,
            right_rows: right.0,
            right_cols: right.1,
        }
    }

    /// Attach the plane that raised a capacity violation.
    pub(crate) fn on_channel(self, channel: Channel) -> Self {
        match self {
            Error::CapacityExceeded {
                requested, capacity, ..
            } => Error::CapacityExceeded {
                channel: Some(channel),
                requested,
                capacity,
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
