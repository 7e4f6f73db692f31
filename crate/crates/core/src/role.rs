//! Construction provenance encoded in vertex labels and edge names.
//!
//! Vertex labels: `u_<i>`, `v_<i>`, `w_<i>_<j>` for a single component,
//! `u<l>_<i>` (and `v<l>_..`, `w<l>_..`) for the l-th copy, `u'_<i>` for the
//! primed copy, and the specials `x0`, `y`, `y'`. Edge names follow the same
//! scheme: `E_<i>`, `E_{<i>,<j>}`, `E<l>_<i>`, `E'_{<i>,<j>}`, `E_0`, `E_y`,
//! `E'_y`. All indices are decimal and 1-based.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Which copy of a component a vertex or edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CopyTag {
    Numbered(usize),
    Prime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoleKind {
    U,
    V,
    W,
    X0,
    Y,
    YPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexRole {
    pub kind: RoleKind,
    pub i: usize,
    pub j: usize,
    pub copy: Option<CopyTag>,
}

impl VertexRole {
    pub fn u(i: usize) -> Self {
        Self { kind: RoleKind::U, i, j: 0, copy: None }
    }

    pub fn v(i: usize) -> Self {
        Self { kind: RoleKind::V, i, j: 0, copy: None }
    }

    pub fn w(i: usize, j: usize) -> Self {
        Self { kind: RoleKind::W, i, j, copy: None }
    }

    pub fn x0() -> Self {
        Self { kind: RoleKind::X0, i: 0, j: 0, copy: None }
    }

    pub fn y() -> Self {
        Self { kind: RoleKind::Y, i: 0, j: 0, copy: None }
    }

    pub fn y_prime() -> Self {
        Self { kind: RoleKind::YPrime, i: 0, j: 0, copy: None }
    }

    pub fn with_copy(mut self, copy: Option<CopyTag>) -> Self {
        if matches!(self.kind, RoleKind::U | RoleKind::V | RoleKind::W) {
            self.copy = copy;
        }
        self
    }
}

fn copy_suffix(copy: Option<CopyTag>) -> String {
    match copy {
        None => String::new(),
        Some(CopyTag::Numbered(l)) => l.to_string(),
        Some(CopyTag::Prime) => "'".to_string(),
    }
}

/// Splits `<copy>_<rest>` after the leading letter has been removed.
fn split_copy(s: &str) -> Option<(Option<CopyTag>, &str)> {
    let (head, rest) = s.split_once('_')?;
    let copy = match head {
        "" => None,
        "'" => Some(CopyTag::Prime),
        digits => Some(CopyTag::Numbered(parse_index(digits)?)),
    };
    Some((copy, rest))
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = copy_suffix(self.copy);
        match self.kind {
            RoleKind::U => write!(f, "u{c}_{}", self.i),
            RoleKind::V => write!(f, "v{c}_{}", self.i),
            RoleKind::W => write!(f, "w{c}_{}_{}", self.i, self.j),
            RoleKind::X0 => f.write_str("x0"),
            RoleKind::Y => f.write_str("y"),
            RoleKind::YPrime => f.write_str("y'"),
        }
    }
}

impl FromStr for VertexRole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidLabel(s.to_string());
        match s {
            "x0" => return Ok(Self::x0()),
            "y" => return Ok(Self::y()),
            "y'" => return Ok(Self::y_prime()),
            _ => {}
        }
        let kind = match s.as_bytes().first() {
            Some(b'u') => RoleKind::U,
            Some(b'v') => RoleKind::V,
            Some(b'w') => RoleKind::W,
            _ => return Err(bad()),
        };
        let (copy, rest) = split_copy(&s[1..]).ok_or_else(bad)?;
        if copy == Some(CopyTag::Numbered(0)) {
            return Err(bad());
        }
        let role = match kind {
            RoleKind::W => {
                let (i, j) = rest.split_once('_').ok_or_else(bad)?;
                Self::w(parse_index(i).ok_or_else(bad)?, parse_index(j).ok_or_else(bad)?)
            }
            _ => Self { kind, i: parse_index(rest).ok_or_else(bad)?, j: 0, copy: None },
        };
        Ok(role.with_copy(copy))
    }
}

/// Provenance of an edge produced by one of the constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeRole {
    /// Spine edge `E_i`.
    L { i: usize, copy: Option<CopyTag> },
    /// Layer edge `E_{i,j}`.
    Cyclic { i: usize, j: usize, copy: Option<CopyTag> },
    /// The connecting edge through `x0`.
    Zero,
    Y,
    YPrime,
}

impl fmt::Display for EdgeRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EdgeRole::L { i, copy } => write!(f, "E{}_{i}", copy_suffix(copy)),
            EdgeRole::Cyclic { i, j, copy } => write!(f, "E{}_{{{i},{j}}}", copy_suffix(copy)),
            EdgeRole::Zero => f.write_str("E_0"),
            EdgeRole::Y => f.write_str("E_y"),
            EdgeRole::YPrime => f.write_str("E'_y"),
        }
    }
}

impl FromStr for EdgeRole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidLabel(s.to_string());
        match s {
            "E_0" => return Ok(EdgeRole::Zero),
            "E_y" => return Ok(EdgeRole::Y),
            "E'_y" => return Ok(EdgeRole::YPrime),
            _ => {}
        }
        let rest = s.strip_prefix('E').ok_or_else(bad)?;
        let (copy, rest) = split_copy(rest).ok_or_else(bad)?;
        if copy == Some(CopyTag::Numbered(0)) {
            return Err(bad());
        }
        if let Some(inner) = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let (i, j) = inner.split_once(',').ok_or_else(bad)?;
            Ok(EdgeRole::Cyclic {
                i: parse_index(i).ok_or_else(bad)?,
                j: parse_index(j).ok_or_else(bad)?,
                copy,
            })
        } else {
            Ok(EdgeRole::L { i: parse_index(rest).ok_or_else(bad)?, copy })
        }
    }
}
