//! Colored almost positive roots of type `A_{n-1}` and their correspondence
//! with m-diagonals.
//!
//! Roots are handled in the simple-root basis. Simple roots are split into
//! `I_+` (even indices) and `I_-` (odd indices); the involutions `τ_±` fix the
//! negative simple roots of the opposite part and otherwise apply the product
//! of the (commuting) simple reflections of their own part.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polygon::{all_m_diagonals, crosses, rotate_step, Diagonal, PolygonConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Membership of simple root `i` in `I_+` (even) or `I_-` (odd).
    pub fn contains(self, i: u32) -> bool {
        match self {
            Sign::Plus => i.is_multiple_of(2),
            Sign::Minus => i % 2 == 1,
        }
    }
}

/// A negative simple root `-α_i` or a positive root `α_lo + ... + α_hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlmostPositiveRoot {
    NegSimple(u32),
    Positive { lo: u32, hi: u32 },
}

impl AlmostPositiveRoot {
    pub fn validate(&self, rank: u32) -> Result<()> {
        let ok = match *self {
            AlmostPositiveRoot::NegSimple(i) => (1..=rank).contains(&i),
            AlmostPositiveRoot::Positive { lo, hi } => 1 <= lo && lo <= hi && hi <= rank,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotAlmostPositive(format!("{self:?} in rank {rank}")))
        }
    }

    pub fn coefficients(&self, rank: u32) -> Vec<i64> {
        let mut v = vec![0; rank as usize];
        match *self {
            AlmostPositiveRoot::NegSimple(i) => v[i as usize - 1] = -1,
            AlmostPositiveRoot::Positive { lo, hi } => v[lo as usize - 1..hi as usize]
                .iter_mut()
                .for_each(|c| *c = 1),
        }
        v
    }

    /// Recognise a coefficient vector; anything other than a negative simple
    /// root or a positive root is rejected.
    pub fn from_coefficients(v: &[i64]) -> Result<Self> {
        let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
        let reject = || Error::NotAlmostPositive(format!("{v:?}"));
        match support.as_slice() {
            [i] if v[*i] == -1 => Ok(AlmostPositiveRoot::NegSimple(*i as u32 + 1)),
            [first, .., last] | [first @ last] => {
                let contiguous = last - first + 1 == support.len();
                if contiguous && support.iter().all(|&i| v[i] == 1) {
                    Ok(AlmostPositiveRoot::Positive {
                        lo: *first as u32 + 1,
                        hi: *last as u32 + 1,
                    })
                } else {
                    Err(reject())
                }
            }
            [] => Err(reject()),
        }
    }
}

/// Simple reflection `s_i` in type `A`: `c_i ↦ c_{i-1} + c_{i+1} - c_i`.
pub fn reflect(v: &mut [i64], i: u32) {
    let i = i as usize - 1;
    let left = if i > 0 { v[i - 1] } else { 0 };
    let right = v.get(i + 1).copied().unwrap_or(0);
    v[i] = left + right - v[i];
}

/// The involution `τ_ε` on almost positive roots of `A_rank`.
pub fn tau_sign(rank: u32, sign: Sign, root: AlmostPositiveRoot) -> Result<AlmostPositiveRoot> {
    root.validate(rank)?;
    if let AlmostPositiveRoot::NegSimple(i) = root {
        if sign.opposite().contains(i) {
            return Ok(root);
        }
    }
    let mut v = root.coefficients(rank);
    for i in (1..=rank).filter(|&i| sign.contains(i)) {
        reflect(&mut v, i);
    }
    AlmostPositiveRoot::from_coefficients(&v)
}

/// The order in which the two involutions are composed in the non-increment
/// branch of the root rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionOrder {
    /// `β ↦ τ_+(τ_-(β))`
    MinusFirst,
    /// `β ↦ τ_-(τ_+(β))`
    PlusFirst,
}

/// The order compatible with the one-step polygon rotation.
pub const ROTATION_ORDER: CompositionOrder = CompositionOrder::MinusFirst;

/// An m-colored almost positive root. Negative simple roots carry color 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColoredRoot {
    NegSimple(u32),
    Positive { lo: u32, hi: u32, color: u32 },
}

impl ColoredRoot {
    pub fn root(&self) -> AlmostPositiveRoot {
        match *self {
            ColoredRoot::NegSimple(i) => AlmostPositiveRoot::NegSimple(i),
            ColoredRoot::Positive { lo, hi, .. } => AlmostPositiveRoot::Positive { lo, hi },
        }
    }

    pub fn color(&self) -> u32 {
        match *self {
            ColoredRoot::NegSimple(_) => 1,
            ColoredRoot::Positive { color, .. } => color,
        }
    }

    fn with_color(root: AlmostPositiveRoot, color: u32) -> Self {
        match root {
            AlmostPositiveRoot::NegSimple(i) => ColoredRoot::NegSimple(i),
            AlmostPositiveRoot::Positive { lo, hi } => ColoredRoot::Positive { lo, hi, color },
        }
    }

    pub fn validate(&self, cfg: &PolygonConfig) -> Result<()> {
        self.root().validate(cfg.n() - 1)?;
        if (1..=cfg.m()).contains(&self.color()) {
            Ok(())
        } else {
            Err(Error::InvalidRoot(format!(
                "{self} has color outside 1..={}",
                cfg.m()
            )))
        }
    }
}

/// `-a3` or `a[1..2]^k`.
impl fmt::Display for ColoredRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ColoredRoot::NegSimple(i) => write!(f, "-a{i}"),
            ColoredRoot::Positive { lo, hi, color } => write!(f, "a[{lo}..{hi}]^{color}"),
        }
    }
}

impl FromStr for ColoredRoot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad colored root {s:?}"));
        if let Some(i) = s.strip_prefix("-a") {
            return i.parse().map(ColoredRoot::NegSimple).map_err(|_| bad());
        }
        let rest = s.strip_prefix("a[").ok_or_else(bad)?;
        let (range, color) = rest.split_once("]^").ok_or_else(bad)?;
        let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
        Ok(ColoredRoot::Positive {
            lo: lo.parse().map_err(|_| bad())?,
            hi: hi.parse().map_err(|_| bad())?,
            color: color.parse().map_err(|_| bad())?,
        })
    }
}

/// All of `Φ^m_{≥-1}` for `A_{n-1}`: negative simples, then positive roots by
/// `(lo, hi, color)`.
pub fn all_colored_roots(cfg: &PolygonConfig) -> Vec<ColoredRoot> {
    let rank = cfg.n() - 1;
    let mut out: Vec<ColoredRoot> = (1..=rank).map(ColoredRoot::NegSimple).collect();
    for lo in 1..=rank {
        for hi in lo..=rank {
            for color in 1..=cfg.m() {
                out.push(ColoredRoot::Positive { lo, hi, color });
            }
        }
    }
    out
}

/// The rotation `R_m` on colored roots with an explicit composition order.
pub fn r_map_with(
    cfg: &PolygonConfig,
    r: ColoredRoot,
    order: CompositionOrder,
) -> Result<ColoredRoot> {
    r.validate(cfg)?;
    if let ColoredRoot::Positive { lo, hi, color } = r {
        if color < cfg.m() {
            return Ok(ColoredRoot::Positive {
                lo,
                hi,
                color: color + 1,
            });
        }
    }
    let rank = cfg.n() - 1;
    let (first, second) = match order {
        CompositionOrder::MinusFirst => (Sign::Minus, Sign::Plus),
        CompositionOrder::PlusFirst => (Sign::Plus, Sign::Minus),
    };
    let root = tau_sign(rank, second, tau_sign(rank, first, r.root())?)?;
    Ok(ColoredRoot::with_color(root, 1))
}

pub fn r_map(cfg: &PolygonConfig, r: ColoredRoot) -> Result<ColoredRoot> {
    r_map_with(cfg, r, ROTATION_ORDER)
}

/// The diagonal of `-α_i`; together these form the m-snake.
pub fn snake_diagonal(cfg: &PolygonConfig, i: u32) -> Result<Diagonal> {
    if i < 1 || i >= cfg.n() {
        return Err(Error::InvalidRoot(format!(
            "-a{i} outside rank {}",
            cfg.n() - 1
        )));
    }
    let (n, m) = (i64::from(cfg.n()), i64::from(cfg.m()));
    let k = i64::from(i.div_ceil(2));
    if i % 2 == 1 {
        Diagonal::new(cfg, (k - 1) * m + 1, (n - k) * m + 2)
    } else {
        Diagonal::new(cfg, k * m + 1, (n - k) * m + 2)
    }
}

/// The bijection between colored almost positive roots and m-diagonals.
///
/// A positive root `α_lo + ... + α_hi` owns the `m` diagonals crossing exactly
/// the snake diagonals `lo..=hi`. They form a run `E, R(E), ..., R^{m-1}(E)`
/// under the one-step rotation `R`, and color `k` goes to `R^{k-1}(E)`.
#[derive(Debug, Clone)]
pub struct RootDiagonalMap {
    cfg: PolygonConfig,
    to_diagonal: HashMap<ColoredRoot, Diagonal>,
    to_root: HashMap<Diagonal, ColoredRoot>,
}

impl RootDiagonalMap {
    pub fn new(cfg: &PolygonConfig) -> Result<Self> {
        let rank = cfg.n() - 1;
        let snake: Vec<Diagonal> = (1..=rank)
            .map(|i| snake_diagonal(cfg, i))
            .collect::<Result<_>>()?;
        let mut to_diagonal = HashMap::new();
        for (i, d) in snake.iter().enumerate() {
            to_diagonal.insert(ColoredRoot::NegSimple(i as u32 + 1), *d);
        }

        let mut groups: BTreeMap<(u32, u32), Vec<Diagonal>> = BTreeMap::new();
        for d in all_m_diagonals(cfg) {
            if snake.contains(&d) {
                continue;
            }
            let hit: Vec<u32> = (1..=rank)
                .filter(|&i| crosses(&d, &snake[i as usize - 1]))
                .collect();
            let (Some(&lo), Some(&hi)) = (hit.first(), hit.last()) else {
                return Err(Error::RootBijection(format!(
                    "{d} crosses no snake diagonal"
                )));
            };
            if hit.len() as u32 != hi - lo + 1 {
                return Err(Error::RootBijection(format!(
                    "{d} crosses a non-interval of snake diagonals {hit:?}"
                )));
            }
            groups.entry((lo, hi)).or_default().push(d);
        }

        for ((lo, hi), members) in &groups {
            if members.len() as u32 != cfg.m() {
                return Err(Error::RootBijection(format!(
                    "{} diagonals cross exactly snake {lo}..{hi}, expected {}",
                    members.len(),
                    cfg.m()
                )));
            }
            let anchors: Vec<&Diagonal> = members
                .iter()
                .filter(|e| !members.contains(&rotate_step(cfg, e, -1)))
                .collect();
            let [anchor] = anchors.as_slice() else {
                return Err(Error::RootBijection(format!(
                    "diagonals for a[{lo}..{hi}] are not one rotation run"
                )));
            };
            for color in 1..=cfg.m() {
                let d = rotate_step(cfg, anchor, i64::from(color) - 1);
                if !members.contains(&d) {
                    return Err(Error::RootBijection(format!(
                        "diagonals for a[{lo}..{hi}] are not one rotation run"
                    )));
                }
                to_diagonal.insert(
                    ColoredRoot::Positive {
                        lo: *lo,
                        hi: *hi,
                        color,
                    },
                    d,
                );
            }
        }

        let to_root: HashMap<Diagonal, ColoredRoot> =
            to_diagonal.iter().map(|(r, d)| (*d, *r)).collect();
        let expected = all_colored_roots(cfg).len();
        if to_diagonal.len() != expected || to_root.len() != expected {
            return Err(Error::RootBijection(format!(
                "{} roots and {} diagonals matched, expected {expected}",
                to_diagonal.len(),
                to_root.len()
            )));
        }
        Ok(Self {
            cfg: *cfg,
            to_diagonal,
            to_root,
        })
    }

    pub fn config(&self) -> &PolygonConfig {
        &self.cfg
    }

    pub fn diagonal(&self, r: &ColoredRoot) -> Result<Diagonal> {
        r.validate(&self.cfg)?;
        Ok(self.to_diagonal[r])
    }

    pub fn root(&self, d: &Diagonal) -> Result<ColoredRoot> {
        self.to_root
            .get(d)
            .copied()
            .ok_or_else(|| Error::NotMDiagonal(d.label()))
    }
}

/// The bijection `D` from colored roots to m-diagonals.
pub fn root_to_diagonal(cfg: &PolygonConfig, r: &ColoredRoot) -> Result<Diagonal> {
    RootDiagonalMap::new(cfg)?.diagonal(r)
}

pub fn diagonal_to_root(cfg: &PolygonConfig, d: &Diagonal) -> Result<ColoredRoot> {
    RootDiagonalMap::new(cfg)?.root(d)
}
