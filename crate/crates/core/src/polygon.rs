//! Exact combinatorics of the regular `N`-gon with `N = n*m + 2`.
//!
//! Vertices are labeled `1..=N` clockwise. All vertex arithmetic wraps modulo
//! `N` back into that range, so "clockwise" always means increasing labels.

use std::fmt;

use crate::error::{Error, Result};

/// The pair `(n, m)` together with the polygon size `N = n*m + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolygonConfig {
    n: u32,
    m: u32,
}

impl PolygonConfig {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n < 2 || m < 1 {
            return Err(Error::InvalidConfig { n, m });
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of polygon vertices.
    pub fn size(&self) -> u32 {
        self.n * self.m + 2
    }

    /// Reduce an arbitrary integer to a vertex label in `1..=N`.
    pub fn wrap(&self, v: i64) -> u32 {
        let size = i64::from(self.size());
        ((v - 1).rem_euclid(size) + 1) as u32
    }
}

/// An unordered pair of non-adjacent polygon vertices, stored with the smaller
/// label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    a: u32,
    b: u32,
}

impl Diagonal {
    /// Build a diagonal of the polygon of `cfg`. Endpoints are taken literally
    /// (no wrapping) and must lie in `1..=N`.
    pub fn new(cfg: &PolygonConfig, x: i64, y: i64) -> Result<Self> {
        let size = cfg.size();
        let invalid = Error::InvalidDiagonal { a: x, b: y, size };
        if x < 1 || y < 1 || x > i64::from(size) || y > i64::from(size) {
            return Err(invalid);
        }
        let d = Self::from_endpoints(x as u32, y as u32);
        if !d.is_valid_in(size) {
            return Err(invalid);
        }
        Ok(d)
    }

    /// Build a diagonal after wrapping both endpoints modulo `N`.
    pub fn wrapped(cfg: &PolygonConfig, x: i64, y: i64) -> Result<Self> {
        let (x, y) = (cfg.wrap(x), cfg.wrap(y));
        Self::new(cfg, i64::from(x), i64::from(y))
    }

    fn from_endpoints(x: u32, y: u32) -> Self {
        Self {
            a: x.min(y),
            b: x.max(y),
        }
    }

    fn is_valid_in(&self, size: u32) -> bool {
        let gap = self.b - self.a;
        self.a >= 1 && self.b <= size && gap >= 2 && gap <= size - 2
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn endpoints(&self) -> [u32; 2] {
        [self.a, self.b]
    }

    pub fn has_endpoint(&self, v: u32) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint other than `v`, if `v` is an endpoint.
    pub fn other_endpoint(&self, v: u32) -> Option<u32> {
        if self.a == v {
            Some(self.b)
        } else if self.b == v {
            Some(self.a)
        } else {
            None
        }
    }

    /// Plain-text label `"i-j"` with `i < j`.
    pub fn label(&self) -> String {
        format!("{}-{}", self.a, self.b)
    }

    /// Parse an `"i-j"` label against a polygon.
    pub fn parse_label(cfg: &PolygonConfig, s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad diagonal label {s:?}, expected \"i-j\""));
        let (x, y) = s.trim().split_once('-').ok_or_else(err)?;
        let x: i64 = x.trim().parse().map_err(|_| err())?;
        let y: i64 = y.trim().parse().map_err(|_| err())?;
        Self::new(cfg, x, y)
    }
}

/// Renders `13` for single-digit pairs and `(3,10)` otherwise.
impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 10 {
            write!(f, "{}{}", self.a, self.b)
        } else {
            write!(f, "({},{})", self.a, self.b)
        }
    }
}

fn check_in(cfg: &PolygonConfig, d: &Diagonal) -> Result<()> {
    if d.is_valid_in(cfg.size()) {
        Ok(())
    } else {
        Err(Error::InvalidDiagonal {
            a: i64::from(d.a),
            b: i64::from(d.b),
            size: cfg.size(),
        })
    }
}

/// True iff `d` cuts the polygon into an `(mj+2)`-gon and an `(m(n-j)+2)`-gon.
///
/// Equivalently both boundary arcs have an edge count `≡ 1 (mod m)`.
pub fn is_m_diagonal(cfg: &PolygonConfig, d: &Diagonal) -> Result<bool> {
    check_in(cfg, d)?;
    Ok(is_m_diagonal_unchecked(cfg, d))
}

pub(crate) fn is_m_diagonal_unchecked(cfg: &PolygonConfig, d: &Diagonal) -> bool {
    let m = cfg.m();
    let arc = d.b - d.a;
    let other = cfg.size() - arc;
    arc % m == 1 % m && other % m == 1 % m && arc > m && other > m
}

/// Every m-diagonal, sorted lexicographically by `(a, b)`.
pub fn all_m_diagonals(cfg: &PolygonConfig) -> Vec<Diagonal> {
    let size = cfg.size();
    let mut out = Vec::new();
    for a in 1..=size {
        for b in a + 2..=size {
            let d = Diagonal { a, b };
            if d.is_valid_in(size) && is_m_diagonal_unchecked(cfg, &d) {
                out.push(d);
            }
        }
    }
    out
}

/// Proper interior crossing: the endpoints strictly interleave around the
/// circle. Diagonals sharing an endpoint do not cross.
pub fn crosses(d1: &Diagonal, d2: &Diagonal) -> bool {
    let inside = |v: u32| d1.a < v && v < d1.b;
    if d2.has_endpoint(d1.a) || d2.has_endpoint(d1.b) {
        return false;
    }
    inside(d2.a) != inside(d2.b)
}

/// Rotate anticlockwise by `t` vertex steps, sending vertex `i` to `i - t`.
/// Negative `t` rotates clockwise. `rotate_step(cfg, d, m)` is `τ_m`.
pub fn rotate_step(cfg: &PolygonConfig, d: &Diagonal, t: i64) -> Diagonal {
    let x = cfg.wrap(i64::from(d.a) - t);
    let y = cfg.wrap(i64::from(d.b) - t);
    Diagonal::from_endpoints(x, y)
}
