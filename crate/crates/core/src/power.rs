//! Sectional paths and the m-th power of a translation quiver.
//!
//! The m-th power keeps the vertices, has one arrow per sectional path of
//! length `m` (weighted by the product of arrow multiplicities along it) and
//! translation `τ^m`, defined where all `m` applications of `τ` are.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::gamma::build_gamma;
use crate::quiver::{components_unchecked, Quiver, TranslationQuiver, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionalPath {
    pub vertices: Vec<VertexId>,
    /// Product of the arrow multiplicities along the path.
    pub weight: u64,
}

impl SectionalPath {
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn multiplicities(&self, tq: &TranslationQuiver) -> Vec<u32> {
        self.vertices
            .windows(2)
            .map(|w| tq.mult(w[0], w[1]))
            .collect()
    }
}

/// Sectional paths between two vertices plus their weighted total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionalPaths {
    pub paths: Vec<SectionalPath>,
    pub total: u64,
}

/// Consecutive vertices are joined by arrows and `τ x_{i+1} ≠ x_{i-1}`
/// wherever `τ x_{i+1}` is defined.
pub fn is_sectional(tq: &TranslationQuiver, vertices: &[VertexId]) -> bool {
    vertices.windows(2).all(|w| tq.mult(w[0], w[1]) > 0)
        && vertices.windows(3).all(|w| tq.tau(w[2]) != Some(w[0]))
}

fn walk(
    tq: &TranslationQuiver,
    len: u32,
    path: &mut Vec<VertexId>,
    weight: u64,
    visit: &mut dyn FnMut(&[VertexId], u64),
) {
    if path.len() == len as usize + 1 {
        visit(path, weight);
        return;
    }
    let last = *path.last().expect("path starts with a vertex");
    for &(next, k) in tq.quiver().successors(last) {
        if path.len() >= 2 && tq.tau(next) == Some(path[path.len() - 2]) {
            continue;
        }
        path.push(next);
        walk(tq, len, path, weight * u64::from(k), visit);
        path.pop();
    }
}

/// All sectional paths of length exactly `m` from `x` to `y`.
pub fn sectional_paths(tq: &TranslationQuiver, x: VertexId, y: VertexId, m: u32) -> SectionalPaths {
    let mut paths = Vec::new();
    let mut path = vec![x];
    walk(tq, m, &mut path, 1, &mut |p, w| {
        if *p.last().unwrap() == y {
            paths.push(SectionalPath {
                vertices: p.to_vec(),
                weight: w,
            });
        }
    });
    let total = paths.iter().map(|p| p.weight).sum();
    SectionalPaths { paths, total }
}

/// Every sectional path of length `m` starting at `x`.
pub fn sectional_paths_from(tq: &TranslationQuiver, x: VertexId, m: u32) -> Vec<SectionalPath> {
    let mut paths = Vec::new();
    walk(tq, m, &mut vec![x], 1, &mut |p, w| {
        paths.push(SectionalPath {
            vertices: p.to_vec(),
            weight: w,
        })
    });
    paths
}

/// The m-th power `(Γ^m, τ^m)`. Labels are kept. The construction does not
/// require any hypothesis; whether the result is a translation quiver is for
/// the caller to check.
///
/// Panics if `m == 0`.
pub fn power(tq: &TranslationQuiver, m: u32) -> TranslationQuiver {
    assert!(m >= 1, "power needs m >= 1");
    let mut quiver =
        Quiver::new(tq.quiver().labels().iter().cloned()).expect("labels of a quiver are distinct");
    for x in 0..tq.len() {
        let mut counts: BTreeMap<VertexId, u64> = BTreeMap::new();
        walk(tq, m, &mut vec![x], 1, &mut |p, w| {
            *counts.entry(*p.last().unwrap()).or_insert(0) += w;
        });
        for (y, k) in counts {
            let k = u32::try_from(k).expect("arrow multiplicity fits in u32");
            quiver.add_arrows(x, y, k).expect("indices in range");
        }
    }
    let tau = (0..tq.len()).map(|v| tq.tau_pow(v, m)).collect();
    TranslationQuiver::new(quiver, tau).expect("powers of an injective map are injective")
}

/// For a sectional path `x_0 -> ... -> x_m` with `τ^m x_m` defined, build
/// `τ^m x_m -> τ^{m-1} x_{m-1} -> ... -> τ x_1 -> x_0`. Returns `None` when
/// some `τ^i x_i` is undefined.
pub fn reversed_transport(tq: &TranslationQuiver, path: &[VertexId]) -> Option<Vec<VertexId>> {
    let m = path.len().checked_sub(1)?;
    (0..=m)
        .rev()
        .map(|i| tq.tau_pow(path[i], i as u32))
        .collect()
}

/// Check that the reversed transport of `path` is again sectional and carries
/// the arrow multiplicities in reverse order.
pub fn check_reversal(
    tq: &TranslationQuiver,
    path: &[VertexId],
) -> std::result::Result<(), String> {
    let m = path.len().saturating_sub(1) as u32;
    if tq.tau_pow(*path.last().ok_or("empty path")?, m).is_none() {
        return Ok(());
    }
    let back = reversed_transport(tq, path)
        .ok_or_else(|| format!("tau^i x_i undefined along {path:?}"))?;
    if !is_sectional(tq, &back) {
        return Err(format!("transport {back:?} of {path:?} is not sectional"));
    }
    let fwd: Vec<u32> = path.windows(2).map(|w| tq.mult(w[0], w[1])).collect();
    let mut rev: Vec<u32> = back.windows(2).map(|w| tq.mult(w[0], w[1])).collect();
    rev.reverse();
    if fwd != rev {
        return Err(format!("multiplicities {fwd:?} vs reversed {rev:?}"));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct EmbedReport {
    pub n: u32,
    pub m: u32,
    /// `(Γ^1_{A_{nm-1}})^m`.
    pub power: TranslationQuiver,
    pub components: Vec<Vec<VertexId>>,
    /// Index into `components` of the block holding the m-diagonals.
    pub diagonal_component: Option<usize>,
    pub arrows_match: bool,
    pub tau_match: bool,
}

impl EmbedReport {
    pub fn holds(&self) -> bool {
        self.diagonal_component.is_some() && self.arrows_match && self.tau_match
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }
}

/// Check that `Γ^m_{A_{n-1}}` sits inside `(Γ^1_{A_{nm-1}})^m` as a connected
/// component with the same arrows and translation.
pub fn embed_check(n: u32, m: u32) -> Result<EmbedReport> {
    let big = build_gamma(n * m, 1)?;
    let small = build_gamma(n, m)?;
    let pow = power(big.translation_quiver(), m);

    let to_big: Vec<VertexId> = small
        .diagonals()
        .iter()
        .map(|d| big.vertex(d).expect("m-diagonals are diagonals"))
        .collect();
    let sq = small.translation_quiver();
    let mut arrows_match = true;
    let mut tau_match = true;
    for (i, &bi) in to_big.iter().enumerate() {
        for (j, &bj) in to_big.iter().enumerate() {
            arrows_match &= sq.mult(i, j) == pow.mult(bi, bj);
        }
        tau_match &= sq.tau(i).map(|t| to_big[t]) == pow.tau(bi);
    }

    let components = components_unchecked(&pow);
    let mut wanted = to_big.clone();
    wanted.sort_unstable();
    let diagonal_component = components.iter().position(|c| *c == wanted);

    Ok(EmbedReport {
        n,
        m,
        power: pow,
        components,
        diagonal_component,
        arrows_match,
        tau_match,
    })
}
