//! The eleven mosaic tiles and their connection profiles.
//!
//! Each tile has a connection point at the midpoint of every edge it touches.
//! Non-crossing tiles pair those points with arcs or lines; the two crossing
//! tiles pass both strands straight through, one over the other.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Top,
    Right,
    Bottom,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Top, Side::Right, Side::Bottom];

    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Side::Top | Side::Bottom)
    }
}

/// Which strand of a crossing tile lies on top.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum OverStrand {
    Vertical,
    Horizontal,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ConnectionProfile {
    pub left: bool,
    pub top: bool,
    pub right: bool,
    pub bottom: bool,
    /// Strand pairing of the present connection points.
    pub pairing: &'static [(Side, Side)],
    pub over: Option<OverStrand>,
}

impl ConnectionProfile {
    pub fn has(&self, side: Side) -> bool {
        match side {
            Side::Left => self.left,
            Side::Top => self.top,
            Side::Right => self.right,
            Side::Bottom => self.bottom,
        }
    }

    pub fn point_count(&self) -> usize {
        [self.left, self.top, self.right, self.bottom]
            .iter()
            .filter(|&&b| b)
            .count()
    }
}

const fn profile(
    bits: [bool; 4],
    pairing: &'static [(Side, Side)],
    over: Option<OverStrand>,
) -> ConnectionProfile {
    ConnectionProfile {
        left: bits[0],
        top: bits[1],
        right: bits[2],
        bottom: bits[3],
        pairing,
        over,
    }
}

use Side::*;

const O: bool = false;
const I: bool = true;

static PROFILES: [ConnectionProfile; 11] = [
    profile([O, O, O, O], &[], None),
    profile([I, O, O, I], &[(Left, Bottom)], None),
    profile([O, O, I, I], &[(Bottom, Right)], None),
    profile([O, I, I, O], &[(Top, Right)], None),
    profile([I, I, O, O], &[(Top, Left)], None),
    profile([I, O, I, O], &[(Left, Right)], None),
    profile([O, I, O, I], &[(Top, Bottom)], None),
    profile([I, I, I, I], &[(Top, Right), (Left, Bottom)], None),
    profile([I, I, I, I], &[(Top, Left), (Bottom, Right)], None),
    profile(
        [I, I, I, I],
        &[(Top, Bottom), (Left, Right)],
        Some(OverStrand::Vertical),
    ),
    profile(
        [I, I, I, I],
        &[(Top, Bottom), (Left, Right)],
        Some(OverStrand::Horizontal),
    ),
];

/// One of the tiles `T0..=T10`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tile(u8);

impl Tile {
    pub const BLANK: Tile = Tile(0);
    pub const HORIZONTAL: Tile = Tile(5);
    pub const VERTICAL: Tile = Tile(6);
    /// Double arc pairing top-right and left-bottom.
    pub const DOUBLE_TR: Tile = Tile(7);
    /// Double arc pairing top-left and bottom-right.
    pub const DOUBLE_TL: Tile = Tile(8);
    pub const CROSS_VERTICAL_OVER: Tile = Tile(9);
    pub const CROSS_HORIZONTAL_OVER: Tile = Tile(10);

    pub const ALL: [Tile; 11] = [
        Tile(0),
        Tile(1),
        Tile(2),
        Tile(3),
        Tile(4),
        Tile(5),
        Tile(6),
        Tile(7),
        Tile(8),
        Tile(9),
        Tile(10),
    ];

    pub fn new(kind: u8) -> Result<Tile> {
        if kind <= 10 {
            Ok(Tile(kind))
        } else {
            Err(Error::InvalidTile(kind))
        }
    }

    pub fn kind(self) -> u8 {
        self.0
    }

    pub fn profile(self) -> &'static ConnectionProfile {
        &PROFILES[self.0 as usize]
    }

    pub fn has(self, side: Side) -> bool {
        self.profile().has(side)
    }

    pub fn is_crossing(self) -> bool {
        self.0 >= 9
    }

    /// The point a strand entering at `side` leaves through.
    pub fn exit(self, side: Side) -> Option<Side> {
        self.profile().pairing.iter().find_map(|&(a, b)| {
            if a == side {
                Some(b)
            } else if b == side {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn digit(self) -> char {
        if self.0 == 10 {
            'a'
        } else {
            char::from(b'0' + self.0)
        }
    }

    pub fn from_digit(c: char) -> Result<Tile> {
        match c {
            '0'..='9' => Ok(Tile(c as u8 - b'0')),
            'a' => Ok(Tile(10)),
            other => Err(Error::InvalidDigit(other)),
        }
    }
}

impl fmt::Debug for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}
