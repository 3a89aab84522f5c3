//! Translation-equivariant isomorphism search.
//!
//! Plain backtracking. Vertices of the left quiver are visited in BFS order
//! over arrows and translations, so after the first vertex of a connected
//! component most choices are forced by an already-mapped neighbour.

use std::collections::VecDeque;

use super::{TranslationQuiver, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    in_degree: u32,
    out_degree: u32,
    has_tau: bool,
    has_tau_inv: bool,
    tau_orbit: usize,
}

fn signature(tq: &TranslationQuiver, v: VertexId) -> Signature {
    let q = tq.quiver();
    Signature {
        in_degree: q.predecessors(v).iter().map(|&(_, k)| k).sum(),
        out_degree: q.successors(v).iter().map(|&(_, k)| k).sum(),
        has_tau: tq.tau(v).is_some(),
        has_tau_inv: tq.tau_inv(v).is_some(),
        tau_orbit: tq.tau_orbit_len(v).unwrap_or(0),
    }
}

#[derive(Debug, Clone, Copy)]
enum Link {
    Tau,
    TauInv,
    Succ,
    Pred,
}

/// Where a vertex's candidates come from: the image of `parent` under `link`.
#[derive(Debug, Clone, Copy)]
struct Step {
    vertex: VertexId,
    via: Option<(VertexId, Link)>,
}

fn visit_order(tq: &TranslationQuiver) -> Vec<Step> {
    let n = tq.len();
    let q = tq.quiver();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push(Step {
            vertex: root,
            via: None,
        });
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let linked = tq
                .tau(u)
                .map(|w| (w, Link::Tau))
                .into_iter()
                .chain(tq.tau_inv(u).map(|w| (w, Link::TauInv)))
                .chain(q.successors(u).iter().map(|&(w, _)| (w, Link::Succ)))
                .chain(q.predecessors(u).iter().map(|&(w, _)| (w, Link::Pred)));
            for (w, link) in linked {
                if !seen[w] {
                    seen[w] = true;
                    order.push(Step {
                        vertex: w,
                        via: Some((u, link)),
                    });
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    a: &'a TranslationQuiver,
    b: &'a TranslationQuiver,
    sig_a: Vec<Signature>,
    sig_b: Vec<Signature>,
    order: Vec<Step>,
    fwd: Vec<Option<VertexId>>,
    back: Vec<Option<VertexId>>,
}

impl Search<'_> {
    fn candidates(&self, step: &Step) -> Vec<VertexId> {
        let Some((parent, link)) = step.via else {
            return (0..self.b.len()).collect();
        };
        let p = self.fwd[parent].expect("parent is mapped before its children");
        let q = self.b.quiver();
        match link {
            Link::Tau => self.b.tau(p).into_iter().collect(),
            Link::TauInv => self.b.tau_inv(p).into_iter().collect(),
            Link::Succ => q.successors(p).iter().map(|&(w, _)| w).collect(),
            Link::Pred => q.predecessors(p).iter().map(|&(w, _)| w).collect(),
        }
    }

    /// Does `v -> w` agree with every already-mapped pair?
    fn consistent(&self, v: VertexId, w: VertexId) -> bool {
        let (qa, qb) = (self.a.quiver(), self.b.quiver());
        if self.back[w].is_some()
            || self.sig_a[v] != self.sig_b[w]
            || qa.mult(v, v) != qb.mult(w, w)
        {
            return false;
        }
        for &(x, k) in qa.successors(v) {
            if let Some(fx) = self.fwd[x] {
                if qb.mult(w, fx) != k {
                    return false;
                }
            }
        }
        for &(x, k) in qa.predecessors(v) {
            if let Some(fx) = self.fwd[x] {
                if qb.mult(fx, w) != k {
                    return false;
                }
            }
        }
        for &(y, _) in qb.successors(w) {
            if let Some(x) = self.back[y] {
                if qa.mult(v, x) == 0 {
                    return false;
                }
            }
        }
        for &(y, _) in qb.predecessors(w) {
            if let Some(x) = self.back[y] {
                if qa.mult(x, v) == 0 {
                    return false;
                }
            }
        }
        let tau_ok = |ta: Option<VertexId>, tb: Option<VertexId>| match (ta, tb) {
            (Some(x), Some(y)) => match (self.fwd[x], self.back[y]) {
                (Some(fx), _) => fx == y,
                (None, Some(_)) => false,
                (None, None) => (x == v) == (y == w),
            },
            (None, None) => true,
            _ => false,
        };
        tau_ok(self.a.tau(v), self.b.tau(w)) && tau_ok(self.a.tau_inv(v), self.b.tau_inv(w))
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let step = self.order[depth];
        for w in self.candidates(&step) {
            if self.consistent(step.vertex, w) {
                self.fwd[step.vertex] = Some(w);
                self.back[w] = Some(step.vertex);
                if self.run(depth + 1) {
                    return true;
                }
                self.fwd[step.vertex] = None;
                self.back[w] = None;
            }
        }
        false
    }
}

/// Find a bijection `phi` (as `phi[v]`) with `mult(x -> y) = mult(phi x -> phi y)`
/// for all pairs and `phi(tau_a x) = tau_b(phi x)` wherever defined, or `None`
/// if exhaustive search finds none.
pub fn tq_isomorphism(a: &TranslationQuiver, b: &TranslationQuiver) -> Option<Vec<VertexId>> {
    if a.len() != b.len() || a.quiver().arrow_count() != b.quiver().arrow_count() {
        return None;
    }
    let sig_a: Vec<_> = (0..a.len()).map(|v| signature(a, v)).collect();
    let sig_b: Vec<_> = (0..b.len()).map(|v| signature(b, v)).collect();
    let (mut sa, mut sb) = (sig_a.clone(), sig_b.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut search = Search {
        a,
        b,
        order: visit_order(a),
        sig_a,
        sig_b,
        fwd: vec![None; a.len()],
        back: vec![None; b.len()],
    };
    if search.run(0) {
        Some(
            search
                .fwd
                .into_iter()
                .map(|w| w.expect("complete"))
                .collect(),
        )
    } else {
        None
    }
}

/// Re-check a claimed isomorphism pair by pair, independently of the search.
pub fn verify_isomorphism(
    a: &TranslationQuiver,
    b: &TranslationQuiver,
    phi: &[VertexId],
) -> Result<(), String> {
    let n = a.len();
    if b.len() != n || phi.len() != n {
        return Err(format!(
            "sizes differ: {} vs {} (map has {})",
            n,
            b.len(),
            phi.len()
        ));
    }
    let mut hit = vec![false; n];
    for &w in phi {
        if w >= n || std::mem::replace(&mut hit[w], true) {
            return Err(format!("map is not a bijection at image {w}"));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (ka, kb) = (a.mult(x, y), b.mult(phi[x], phi[y]));
            if ka != kb {
                return Err(format!(
                    "{} -> {} has {ka} arrow(s) but {} -> {} has {kb}",
                    a.label(x),
                    a.label(y),
                    b.label(phi[x]),
                    b.label(phi[y])
                ));
            }
        }
        let mapped = a.tau(x).map(|t| phi[t]);
        if mapped != b.tau(phi[x]) {
            return Err(format!(
                "translation not preserved at {} (maps to {})",
                a.label(x),
                b.label(phi[x])
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn cycle(len: usize, with_arrows: bool) -> TranslationQuiver {
        let mut q = Quiver::new((0..len).map(|i| format!("v{i}"))).unwrap();
        if with_arrows {
            for i in 0..len {
                q.add_arrows(i, (i + 1) % len, 1).unwrap();
            }
        }
        let tau = (0..len).map(|i| Some((i + len - 1) % len)).collect();
        TranslationQuiver::new(q, tau).unwrap()
    }

    #[test]
    fn size_mismatch_has_no_isomorphism() {
        assert!(tq_isomorphism(&cycle(3, false), &cycle(4, false)).is_none());
    }

    #[test]
    fn arrows_distinguish() {
        assert!(tq_isomorphism(&cycle(4, true), &cycle(4, false)).is_none());
        let phi = tq_isomorphism(&cycle(4, true), &cycle(4, true)).unwrap();
        verify_isomorphism(&cycle(4, true), &cycle(4, true), &phi).unwrap();
    }

    #[test]
    fn translation_must_commute() {
        // same arrows, translation in opposite directions
        let a = cycle(5, false);
        let mut q = Quiver::new((0..5).map(|i| format!("v{i}"))).unwrap();
        q.add_arrows(0, 0, 0).unwrap();
        let b = TranslationQuiver::new(q, (0..5).map(|i| Some((i + 1) % 5)).collect()).unwrap();
        // reversing a 5-cycle is realised by a relabeling, so an iso exists
        let phi = tq_isomorphism(&a, &b).unwrap();
        verify_isomorphism(&a, &b, &phi).unwrap();
        // but a 5-cycle is not a product of a 2-cycle and 3-cycle
        let mut q = Quiver::new((0..5).map(|i| format!("v{i}"))).unwrap();
        q.add_arrows(0, 0, 0).unwrap();
        let c =
            TranslationQuiver::new(q, vec![Some(1), Some(0), Some(3), Some(4), Some(2)]).unwrap();
        assert!(tq_isomorphism(&a, &c).is_none());
    }

    #[test]
    fn verifier_rejects_bad_maps() {
        let a = cycle(3, true);
        assert!(verify_isomorphism(&a, &a, &[0, 0, 1]).is_err());
        assert!(verify_isomorphism(&a, &a, &[1, 0, 2]).is_err());
        assert!(verify_isomorphism(&a, &a, &[1, 2, 0]).is_ok());
    }
}
