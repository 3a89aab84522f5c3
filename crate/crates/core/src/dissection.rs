//! The simplicial complex of m-divisible dissections: faces are sets of
//! pairwise non-crossing m-diagonals.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::polygon::{
    all_m_diagonals, crosses, is_m_diagonal, rotate_step, Diagonal, PolygonConfig,
};

/// A set of pairwise non-crossing m-diagonals, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dissection {
    diagonals: Vec<Diagonal>,
}

impl Dissection {
    pub fn new(cfg: &PolygonConfig, diagonals: &[Diagonal]) -> Result<Self> {
        if !is_face(cfg, diagonals) {
            let labels: Vec<String> = diagonals.iter().map(Diagonal::label).collect();
            return Err(Error::NotMDiagonal(format!(
                "{{{}}} is not an m-divisible dissection",
                labels.join(",")
            )));
        }
        Ok(Self::from_sorted(diagonals.to_vec()))
    }

    fn from_sorted(mut diagonals: Vec<Diagonal>) -> Self {
        diagonals.sort_unstable();
        diagonals.dedup();
        Self { diagonals }
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn rotate(&self, cfg: &PolygonConfig, t: i64) -> Dissection {
        Self::from_sorted(
            self.diagonals
                .iter()
                .map(|d| rotate_step(cfg, d, t))
                .collect(),
        )
    }

    /// Diagonals as `"i-j"` tokens.
    pub fn tokens(&self) -> Vec<String> {
        self.diagonals.iter().map(Diagonal::label).collect()
    }
}

/// Every member is an m-diagonal and no two cross.
pub fn is_face(cfg: &PolygonConfig, diags: &[Diagonal]) -> bool {
    diags.iter().all(|d| is_m_diagonal(cfg, d).unwrap_or(false))
        && diags
            .iter()
            .enumerate()
            .all(|(i, a)| diags[i + 1..].iter().all(|b| !crosses(a, b)))
}

struct Compatibility {
    diagonals: Vec<Diagonal>,
    compatible: Vec<FixedBitSet>,
}

impl Compatibility {
    fn new(cfg: &PolygonConfig) -> Self {
        let diagonals = all_m_diagonals(cfg);
        let k = diagonals.len();
        let compatible = diagonals
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut set = FixedBitSet::with_capacity(k);
                for (j, b) in diagonals.iter().enumerate() {
                    if i != j && !crosses(a, b) {
                        set.insert(j);
                    }
                }
                set
            })
            .collect();
        Self {
            diagonals,
            compatible,
        }
    }

    fn dissection(&self, chosen: &[usize]) -> Dissection {
        Dissection::from_sorted(chosen.iter().map(|&i| self.diagonals[i]).collect())
    }
}

/// All facets, each with exactly `n - 1` diagonals, in lexicographic order.
///
/// Backtracks over the canonical diagonal order, dropping branches that can no
/// longer reach `n - 1` members.
pub fn facets(cfg: &PolygonConfig) -> Vec<Dissection> {
    let compat = Compatibility::new(cfg);
    let target = (cfg.n() - 1) as usize;
    let mut all = FixedBitSet::with_capacity(compat.diagonals.len());
    all.insert_range(..);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(target);
    extend_facet(&compat, target, &mut chosen, &all, &mut out);
    out.sort_unstable();
    out
}

fn extend_facet(
    compat: &Compatibility,
    target: usize,
    chosen: &mut Vec<usize>,
    candidates: &FixedBitSet,
    out: &mut Vec<Dissection>,
) {
    if chosen.len() == target {
        out.push(compat.dissection(chosen));
        return;
    }
    if chosen.len() + candidates.count_ones(..) < target {
        return;
    }
    for i in candidates.ones() {
        let mut next = candidates.clone();
        next.intersect_with(&compat.compatible[i]);
        next.remove_range(..i + 1);
        chosen.push(i);
        extend_facet(compat, target, chosen, &next, out);
        chosen.pop();
    }
}

/// All maximal faces, found as maximal cliques of the compatibility graph
/// (Bron–Kerbosch with pivoting). Independent of [`facets`]; no size is
/// assumed.
pub fn maximal_faces(cfg: &PolygonConfig) -> Vec<Dissection> {
    let compat = Compatibility::new(cfg);
    let k = compat.diagonals.len();
    let mut p = FixedBitSet::with_capacity(k);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(k);
    let mut out = Vec::new();
    bron_kerbosch(&compat, &mut Vec::new(), p, x, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(
    compat: &Compatibility,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Dissection>,
) {
    if p.is_clear() && x.is_clear() {
        out.push(compat.dissection(r));
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection(&compat.compatible[u]).count())
        .expect("p or x is non-empty");
    let mut branch = p.clone();
    branch.difference_with(&compat.compatible[pivot]);
    for v in branch.ones() {
        let nbrs = &compat.compatible[v];
        r.push(v);
        bron_kerbosch(compat, r, meet(&p, nbrs), meet(&x, nbrs), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

fn meet(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut c = a.clone();
    c.intersect_with(b);
    c
}

/// `binom((m+1)n, n) / (mn+1)`.
pub fn fuss_catalan(n: u32, m: u32) -> u128 {
    let top = u128::from((m + 1) * n);
    let mut binom: u128 = 1;
    for i in 0..u128::from(n) {
        binom = binom * (top - i) / (i + 1);
    }
    binom / u128::from(m * n + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetOrbit {
    /// Lexicographically least member.
    pub representative: Dissection,
    pub size: usize,
}

/// Orbits of `facets` under the cyclic group generated by the one-step
/// rotation, sorted by representative.
pub fn rotation_orbits(cfg: &PolygonConfig, facets: &[Dissection]) -> Vec<FacetOrbit> {
    let mut remaining: BTreeSet<Dissection> = facets.iter().cloned().collect();
    let mut orbits = Vec::new();
    while let Some(rep) = remaining.pop_first() {
        let mut members = BTreeSet::from([rep.clone()]);
        let mut cur = rep.rotate(cfg, 1);
        while cur != rep {
            remaining.remove(&cur);
            members.insert(cur.clone());
            cur = cur.rotate(cfg, 1);
        }
        orbits.push(FacetOrbit {
            representative: rep,
            size: members.len(),
        });
    }
    orbits
}
