//! Finite quivers with arrow multiplicities and translation quivers.
//!
//! Vertices are dense indices `0..len` carrying display labels. A
//! [`TranslationQuiver`] adds a partial injective map `tau`; vertices outside
//! its domain are the projective ones.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

mod iso;

pub use iso::{tq_isomorphism, verify_isomorphism};

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    arrows: BTreeMap<(VertexId, VertexId), u32>,
    succ: Vec<Vec<(VertexId, u32)>>,
    pred: Vec<Vec<(VertexId, u32)>>,
}

impl Quiver {
    /// A quiver with the given vertex labels and no arrows. Labels must be
    /// distinct.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate vertex label {l:?}")));
            }
        }
        let n = labels.len();
        Ok(Self {
            labels,
            index,
            arrows: BTreeMap::new(),
            succ: vec![Vec::new(); n],
            pred: vec![Vec::new(); n],
        })
    }

    /// Add `mult` arrows from `src` to `dst`, accumulating with existing ones.
    pub fn add_arrows(&mut self, src: VertexId, dst: VertexId, mult: u32) -> Result<()> {
        let n = self.len();
        if src >= n || dst >= n {
            return Err(Error::Malformed(format!(
                "arrow {src} -> {dst} references a vertex outside 0..{n}"
            )));
        }
        if mult == 0 {
            return Ok(());
        }
        *self.arrows.entry((src, dst)).or_insert(0) += mult;
        let total = self.arrows[&(src, dst)];
        upsert(&mut self.succ[src], dst, total);
        upsert(&mut self.pred[dst], src, total);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn mult(&self, src: VertexId, dst: VertexId) -> u32 {
        self.arrows.get(&(src, dst)).copied().unwrap_or(0)
    }

    /// Arrows as `((src, dst), mult)` in lexicographic order.
    pub fn arrows(&self) -> impl Iterator<Item = ((VertexId, VertexId), u32)> + '_ {
        self.arrows.iter().map(|(&k, &v)| (k, v))
    }

    /// Number of arrows counted with multiplicity.
    pub fn arrow_count(&self) -> u32 {
        self.arrows.values().sum()
    }

    pub fn successors(&self, v: VertexId) -> &[(VertexId, u32)] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: VertexId) -> &[(VertexId, u32)] {
        &self.pred[v]
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.arrows.values().copied().max().unwrap_or(0)
    }
}

fn upsert(list: &mut Vec<(VertexId, u32)>, key: VertexId, value: u32) {
    match list.binary_search_by_key(&key, |&(k, _)| k) {
        Ok(pos) => list[pos].1 = value,
        Err(pos) => list.insert(pos, (key, value)),
    }
}

/// A quiver with a partial injective translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationQuiver {
    quiver: Quiver,
    tau: Vec<Option<VertexId>>,
    tau_inv: Vec<Option<VertexId>>,
}

impl TranslationQuiver {
    /// `tau[v]` is the translate of `v`, or `None` when `v` is projective.
    pub fn new(quiver: Quiver, tau: Vec<Option<VertexId>>) -> Result<Self> {
        let n = quiver.len();
        if tau.len() != n {
            return Err(Error::Malformed(format!(
                "translation has {} entries for {n} vertices",
                tau.len()
            )));
        }
        let mut tau_inv = vec![None; n];
        for (v, t) in tau.iter().enumerate() {
            if let Some(t) = *t {
                if t >= n {
                    return Err(Error::Malformed(format!("tau({v}) = {t} is out of range")));
                }
                if let Some(prev) = tau_inv[t].replace(v) {
                    return Err(Error::Malformed(format!(
                        "translation is not injective: {} and {} both map to {}",
                        quiver.label(prev),
                        quiver.label(v),
                        quiver.label(t)
                    )));
                }
            }
        }
        Ok(Self {
            quiver,
            tau,
            tau_inv,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn len(&self) -> usize {
        self.quiver.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quiver.is_empty()
    }

    pub fn label(&self, v: VertexId) -> &str {
        self.quiver.label(v)
    }

    pub fn find(&self, label: &str) -> Option<VertexId> {
        self.quiver.find(label)
    }

    pub fn mult(&self, src: VertexId, dst: VertexId) -> u32 {
        self.quiver.mult(src, dst)
    }

    pub fn tau(&self, v: VertexId) -> Option<VertexId> {
        self.tau[v]
    }

    pub fn tau_inv(&self, v: VertexId) -> Option<VertexId> {
        self.tau_inv[v]
    }

    pub fn tau_map(&self) -> &[Option<VertexId>] {
        &self.tau
    }

    /// `tau` applied `k` times, `None` as soon as it leaves the domain.
    pub fn tau_pow(&self, v: VertexId, k: u32) -> Option<VertexId> {
        (0..k).try_fold(v, |x, _| self.tau[x])
    }

    pub fn is_projective(&self, v: VertexId) -> bool {
        self.tau[v].is_none()
    }

    pub fn projectives(&self) -> Vec<VertexId> {
        (0..self.len()).filter(|&v| self.is_projective(v)).collect()
    }

    /// Length of the tau-cycle through `v`, if `v` lies on one.
    pub fn tau_orbit_len(&self, v: VertexId) -> Option<usize> {
        let mut x = v;
        for k in 1..=self.len() {
            x = self.tau[x]?;
            if x == v {
                return Some(k);
            }
        }
        None
    }

    /// Restriction to `vertices` (kept in the given order); arrows and
    /// translations leaving the set are dropped.
    pub fn induced(&self, vertices: &[VertexId]) -> TranslationQuiver {
        let mut pos = vec![None; self.len()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = Some(i);
        }
        let mut q = Quiver::new(vertices.iter().map(|&v| self.label(v).to_owned()))
            .expect("labels of a quiver are distinct");
        for &v in vertices {
            for &(w, k) in self.quiver.successors(v) {
                if let (Some(i), Some(j)) = (pos[v], pos[w]) {
                    q.add_arrows(i, j, k).expect("indices in range");
                }
            }
        }
        let tau = vertices
            .iter()
            .map(|&v| self.tau[v].and_then(|t| pos[t]))
            .collect();
        TranslationQuiver::new(q, tau).expect("restriction of an injective map is injective")
    }

    /// Disjoint union; labels are prefixed with `left_prefix` / `right_prefix`.
    pub fn disjoint_union(
        &self,
        other: &TranslationQuiver,
        left_prefix: &str,
        right_prefix: &str,
    ) -> Result<TranslationQuiver> {
        let offset = self.len();
        let labels = self
            .quiver
            .labels()
            .iter()
            .map(|l| format!("{left_prefix}{l}"))
            .chain(
                other
                    .quiver
                    .labels()
                    .iter()
                    .map(|l| format!("{right_prefix}{l}")),
            );
        let mut q = Quiver::new(labels)?;
        for ((s, t), k) in self.quiver.arrows() {
            q.add_arrows(s, t, k)?;
        }
        for ((s, t), k) in other.quiver.arrows() {
            q.add_arrows(s + offset, t + offset, k)?;
        }
        let tau = self
            .tau
            .iter()
            .copied()
            .chain(other.tau.iter().map(|t| t.map(|t| t + offset)))
            .collect();
        TranslationQuiver::new(q, tau)
    }
}

/// One failure of the translation axiom: `mult(x -> y) != mult(tau(y) -> x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub x: VertexId,
    pub y: VertexId,
    pub arrows_x_to_y: u32,
    pub arrows_tau_y_to_x: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TranslationReport {
    pub violations: Vec<AxiomViolation>,
}

impl TranslationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, tq: &TranslationQuiver) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| {
                format!(
                    "{} -> {}: {} arrow(s), but {} arrow(s) {} -> {}",
                    tq.label(v.x),
                    tq.label(v.y),
                    v.arrows_x_to_y,
                    v.arrows_tau_y_to_x,
                    tq.tau(v.y).map_or("?", |t| tq.label(t)),
                    tq.label(v.x)
                )
            })
            .collect()
    }
}

/// Check `mult(X -> Y) = mult(tau(Y) -> X)` for every `X` and every `Y` in the
/// domain of `tau`. Violations come back sorted by `(x, y)`.
pub fn check_translation_quiver(tq: &TranslationQuiver) -> TranslationReport {
    let q = tq.quiver();
    let mut violations = Vec::new();
    for y in 0..tq.len() {
        let Some(ty) = tq.tau(y) else { continue };
        let mut xs: Vec<VertexId> = q
            .predecessors(y)
            .iter()
            .chain(q.successors(ty))
            .map(|&(x, _)| x)
            .collect();
        xs.sort_unstable();
        xs.dedup();
        for x in xs {
            let fwd = q.mult(x, y);
            let back = q.mult(ty, x);
            if fwd != back {
                violations.push(AxiomViolation {
                    x,
                    y,
                    arrows_x_to_y: fwd,
                    arrows_tau_y_to_x: back,
                });
            }
        }
    }
    violations.sort_by_key(|v| (v.x, v.y));
    TranslationReport { violations }
}

/// `tau` is total and bijective.
pub fn is_stable(tq: &TranslationQuiver) -> bool {
    // injectivity is a construction invariant, so totality suffices
    tq.tau_map().iter().all(Option::is_some)
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Finest partition into blocks closed under arrows (either direction) and
/// under `tau`, `tau^-1`. Blocks are sorted internally and by least vertex.
pub fn stable_components(tq: &TranslationQuiver) -> Result<Vec<Vec<VertexId>>> {
    if !is_stable(tq) {
        return Err(Error::NotStable);
    }
    Ok(components_unchecked(tq))
}

pub(crate) fn components_unchecked(tq: &TranslationQuiver) -> Vec<Vec<VertexId>> {
    let n = tq.len();
    let mut sets = DisjointSets::new(n);
    for ((s, t), _) in tq.quiver().arrows() {
        sets.union(s, t);
    }
    for v in 0..n {
        if let Some(t) = tq.tau(v) {
            sets.union(v, t);
        }
    }
    let mut blocks: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for v in 0..n {
        let root = sets.find(v);
        blocks.entry(root).or_default().push(v);
    }
    blocks.into_values().collect()
}

/// The three conditions defining a hereditary translation quiver, evaluated
/// separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HereditaryReport {
    /// Every non-projective vertex has an incoming arrow.
    pub nonprojectives_have_predecessors: bool,
    /// No oriented cycle of positive length passes through a projective.
    pub no_cycle_through_projective: bool,
    /// Arrows into projective vertices start at projective vertices.
    pub projectives_closed_under_predecessors: bool,
}

impl HereditaryReport {
    pub fn holds(&self) -> bool {
        self.nonprojectives_have_predecessors
            && self.no_cycle_through_projective
            && self.projectives_closed_under_predecessors
    }

    /// First failing condition, if any.
    pub fn reason(&self) -> Option<&'static str> {
        if !self.nonprojectives_have_predecessors {
            Some("a non-projective vertex has no incoming arrow")
        } else if !self.no_cycle_through_projective {
            Some("an oriented cycle passes through a projective vertex")
        } else if !self.projectives_closed_under_predecessors {
            Some("an arrow into a projective vertex starts at a non-projective vertex")
        } else {
            None
        }
    }
}

pub fn is_hereditary(tq: &TranslationQuiver) -> HereditaryReport {
    let q = tq.quiver();
    let nonprojectives_have_predecessors = (0..tq.len())
        .filter(|&v| !tq.is_projective(v))
        .all(|v| !q.predecessors(v).is_empty());
    let no_cycle_through_projective = tq.projectives().into_iter().all(|p| !on_cycle(q, p));
    HereditaryReport {
        nonprojectives_have_predecessors,
        no_cycle_through_projective,
        projectives_closed_under_predecessors: projectives_closed_under_predecessors(tq),
    }
}

/// If `y` is projective and `x -> y`, then `x` is projective.
pub fn projectives_closed_under_predecessors(tq: &TranslationQuiver) -> bool {
    tq.quiver()
        .arrows()
        .all(|((x, y), _)| !tq.is_projective(y) || tq.is_projective(x))
}

fn on_cycle(q: &Quiver, start: VertexId) -> bool {
    let mut seen = vec![false; q.len()];
    let mut stack: Vec<VertexId> = q.successors(start).iter().map(|&(w, _)| w).collect();
    while let Some(v) = stack.pop() {
        if v == start {
            return true;
        }
        if std::mem::replace(&mut seen[v], true) {
            continue;
        }
        stack.extend(q.successors(v).iter().map(|&(w, _)| w));
    }
    false
}
