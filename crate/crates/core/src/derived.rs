//! The stable translation quiver `ZA_r` and its finite orbit quotients.
//!
//! Coordinates are `(p, q)` with slice `p ∈ Z` and Dynkin vertex `q ∈ 1..=r`.
//! Arrows go `(p,q) -> (p,q+1)` and `(p,q) -> (p+1,q-1)`; the translation is
//! `(p,q) ↦ (p-1,q)`. The shift acts as `(p,q) ↦ (p+q, r+1-q)`, which squares
//! to `τ^{-(r+1)}`.
//!
//! The Auslander-Reiten quiver of the m-cluster category of type `A_{n-1}` is
//! the quotient by `φ_m = τ^{-1} S^m`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gamma::{build_gamma, DiagonalQuiver};
use crate::polygon::rotate_step;
use crate::quiver::{verify_isomorphism, Quiver, TranslationQuiver, VertexId};
use crate::roots::snake_diagonal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZCoord {
    pub p: i64,
    pub q: u32,
}

impl ZCoord {
    pub fn new(p: i64, q: u32) -> Self {
        Self { p, q }
    }
}

impl fmt::Display for ZCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl FromStr for ZCoord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad coordinate {s:?}, expected \"(p,q)\""));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, q) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Self {
            p: p.trim().parse().map_err(|_| bad())?,
            q: q.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// `τ^t`: `(p, q) ↦ (p - t, q)`.
pub fn z_translate(c: ZCoord, t: i64) -> ZCoord {
    ZCoord::new(c.p - t, c.q)
}

/// The shift on `ZA_rank`.
pub fn z_shift(rank: u32, c: ZCoord) -> ZCoord {
    ZCoord::new(c.p + i64::from(c.q), rank + 1 - c.q)
}

/// `φ_m = τ^{-1} S^m` on `ZA_{n-1}`.
pub fn phi(n: u32, m: u32, c: ZCoord) -> ZCoord {
    ZAutomorphism::phi(n, m).apply(c)
}

/// The automorphism `τ^{-advance} S^shifts` of `ZA_rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZAutomorphism {
    pub rank: u32,
    pub shifts: u32,
    pub advance: i64,
}

impl ZAutomorphism {
    pub fn phi(n: u32, m: u32) -> Self {
        Self {
            rank: n - 1,
            shifts: m,
            advance: 1,
        }
    }

    /// The shift alone.
    pub fn shift(rank: u32) -> Self {
        Self {
            rank,
            shifts: 1,
            advance: 0,
        }
    }

    pub fn apply(&self, c: ZCoord) -> ZCoord {
        let shifted = (0..self.shifts).fold(c, |x, _| z_shift(self.rank, x));
        z_translate(shifted, -self.advance)
    }

    /// The square of the automorphism is `τ^{-period}`.
    pub fn period(&self) -> i64 {
        2 * self.advance + i64::from(self.shifts) * i64::from(self.rank + 1)
    }
}

/// A finite quotient `ZA_r / ⟨g⟩` with canonical orbit representatives.
#[derive(Debug, Clone)]
pub struct OrbitQuotient {
    automorphism: ZAutomorphism,
    reps: Vec<ZCoord>,
    index: HashMap<ZCoord, VertexId>,
    tq: TranslationQuiver,
}

impl OrbitQuotient {
    pub fn automorphism(&self) -> &ZAutomorphism {
        &self.automorphism
    }

    pub fn rank(&self) -> u32 {
        self.automorphism.rank
    }

    /// Orbit representative: least `(p, q)` among the orbit's points with
    /// `0 <= p < period`.
    pub fn canonical(&self, c: ZCoord) -> ZCoord {
        canonical(&self.automorphism, c)
    }

    pub fn vertex(&self, c: ZCoord) -> VertexId {
        self.index[&self.canonical(c)]
    }

    pub fn coord(&self, v: VertexId) -> ZCoord {
        self.reps[v]
    }

    pub fn representatives(&self) -> &[ZCoord] {
        &self.reps
    }

    pub fn translation_quiver(&self) -> &TranslationQuiver {
        &self.tq
    }

    pub fn into_translation_quiver(self) -> TranslationQuiver {
        self.tq
    }
}

fn canonical(g: &ZAutomorphism, c: ZCoord) -> ZCoord {
    let period = g.period();
    let reduce = |x: ZCoord| ZCoord::new(x.p.rem_euclid(period), x.q);
    reduce(c).min(reduce(g.apply(c)))
}

/// Quotient of `ZA_rank` by `g`. The square of `g` must be a non-trivial
/// translation.
pub fn build_orbit_quotient(g: ZAutomorphism) -> Result<OrbitQuotient> {
    let rank = g.rank;
    if rank == 0 || g.period() <= 0 {
        return Err(Error::Malformed(format!(
            "{g:?} does not give a finite quotient of ZA_{rank}"
        )));
    }
    let mut reps: Vec<ZCoord> = (0..g.period())
        .flat_map(|p| (1..=rank).map(move |q| ZCoord::new(p, q)))
        .map(|c| canonical(&g, c))
        .collect();
    reps.sort_unstable();
    reps.dedup();
    let index: HashMap<ZCoord, VertexId> = reps.iter().enumerate().map(|(i, c)| (*c, i)).collect();

    let mut quiver = Quiver::new(reps.iter().map(ZCoord::to_string))?;
    for (v, c) in reps.iter().enumerate() {
        if c.q < rank {
            quiver.add_arrows(v, index[&canonical(&g, ZCoord::new(c.p, c.q + 1))], 1)?;
        }
        if c.q > 1 {
            quiver.add_arrows(v, index[&canonical(&g, ZCoord::new(c.p + 1, c.q - 1))], 1)?;
        }
    }
    let tau = reps
        .iter()
        .map(|c| Some(index[&canonical(&g, z_translate(*c, 1))]))
        .collect();
    let tq = TranslationQuiver::new(quiver, tau)?;
    Ok(OrbitQuotient {
        automorphism: g,
        reps,
        index,
        tq,
    })
}

/// `ZA_{n-1} / φ_m`.
pub fn build_quotient(n: u32, m: u32) -> Result<OrbitQuotient> {
    if n < 2 || m < 1 {
        return Err(Error::InvalidConfig { n, m });
    }
    build_orbit_quotient(ZAutomorphism::phi(n, m))
}

/// Seed coordinate for the image of `-α_i`: a zig-zag slice starting at
/// `(0, 1)`.
pub fn psi_seed(i: u32) -> ZCoord {
    let k = i64::from(i.div_ceil(2));
    ZCoord::new(1 - k, i)
}

/// The map from m-diagonals to vertices of `ZA_{n-1} / φ_m`, verified to be a
/// translation-quiver isomorphism.
#[derive(Debug, Clone)]
pub struct PsiMap {
    pub gamma: DiagonalQuiver,
    pub quotient: OrbitQuotient,
    /// `map[v]` is the quotient vertex of gamma vertex `v`.
    pub map: Vec<VertexId>,
}

impl PsiMap {
    pub fn image(&self, v: VertexId) -> ZCoord {
        self.quotient.coord(self.map[v])
    }
}

/// Build `ψ` by sending the snake diagonal of `-α_i` to the orbit of
/// [`psi_seed`]`(i)` and transporting along the one-step rotation, which
/// corresponds to the shift. Fails with a diagnostic unless the result is a
/// translation-quiver isomorphism.
pub fn build_psi(n: u32, m: u32) -> Result<PsiMap> {
    let gamma = build_gamma(n, m)?;
    let quotient = build_quotient(n, m)?;
    let cfg = *gamma.config();
    let rank = n - 1;
    let mut map: Vec<Option<VertexId>> = vec![None; gamma.diagonals().len()];

    for i in 1..=rank {
        let snake = snake_diagonal(&cfg, i)?;
        let mut c = psi_seed(i);
        for t in 0..cfg.size() {
            let d = rotate_step(&cfg, &snake, i64::from(t));
            let v = gamma
                .vertex(&d)
                .expect("rotations of m-diagonals are m-diagonals");
            let image = quotient.vertex(c);
            match map[v] {
                Some(prev) if prev != image => {
                    return Err(Error::PsiVerification(format!(
                        "{} reached as {} and as {}",
                        d.label(),
                        quotient.coord(prev),
                        quotient.coord(image)
                    )));
                }
                _ => map[v] = Some(image),
            }
            c = z_shift(rank, c);
        }
        if quotient.canonical(c) != quotient.canonical(psi_seed(i)) {
            return Err(Error::PsiVerification(format!(
                "transport from -a{i} does not close up after {} steps",
                cfg.size()
            )));
        }
    }

    let map: Vec<VertexId> = map
        .into_iter()
        .enumerate()
        .map(|(v, img)| {
            img.ok_or_else(|| {
                Error::PsiVerification(format!("{} never reached", gamma.diagonal(v).label()))
            })
        })
        .collect::<Result<_>>()?;
    verify_isomorphism(
        gamma.translation_quiver(),
        quotient.translation_quiver(),
        &map,
    )
    .map_err(Error::PsiVerification)?;
    Ok(PsiMap {
        gamma,
        quotient,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{check_translation_quiver, is_stable, stable_components, tq_isomorphism};

    fn c(p: i64, q: u32) -> ZCoord {
        ZCoord::new(p, q)
    }

    /// Arrows of `ZA_r` leaving `x`, straight from the definition.
    fn z_arrows(rank: u32, x: ZCoord) -> Vec<ZCoord> {
        let mut out = Vec::new();
        if x.q < rank {
            out.push(c(x.p, x.q + 1));
        }
        if x.q > 1 {
            out.push(c(x.p + 1, x.q - 1));
        }
        out
    }

    #[test]
    fn coordinate_examples() {
        assert_eq!(z_translate(c(0, 1), 1), c(-1, 1));
        assert_eq!(z_translate(c(5, 2), 0), c(5, 2));
        assert_eq!(z_translate(c(0, 1), -3), c(3, 1));
        assert_eq!(z_shift(3, c(0, 1)), c(1, 3));
        assert_eq!(z_shift(3, z_shift(3, c(0, 2))), c(4, 2));
        assert_eq!(z_translate(c(0, 2), -4), c(4, 2));
        assert_eq!(z_shift(1, c(7, 1)), c(8, 1));
        assert_eq!(phi(4, 1, c(0, 2)), c(3, 2));
        assert_eq!("(-3,2)".parse::<ZCoord>().unwrap(), c(-3, 2));
        assert!("(1;2)".parse::<ZCoord>().is_err());
    }

    #[test]
    fn shift_is_an_automorphism_with_periodicity() {
        for rank in 1..=8u32 {
            for p in -12..12 {
                for q in 1..=rank {
                    let x = c(p, q);
                    let s = |y| z_shift(rank, y);
                    // S^2 = τ^{-(r+1)}
                    assert_eq!(z_translate(s(s(x)), i64::from(rank + 1)), x);
                    assert_eq!(s(z_translate(x, 1)), z_translate(s(x), 1));
                    let mut mapped: Vec<ZCoord> = z_arrows(rank, x).into_iter().map(s).collect();
                    let mut expected = z_arrows(rank, s(x));
                    mapped.sort();
                    expected.sort();
                    assert_eq!(mapped, expected);
                    for m in 1..=4 {
                        let n = rank + 1;
                        assert_eq!(phi(n, m, z_translate(x, 1)), z_translate(phi(n, m, x), 1));
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_sizes() {
        assert_eq!(build_quotient(4, 1).unwrap().representatives().len(), 9);
        assert_eq!(build_quotient(4, 2).unwrap().representatives().len(), 15);
        let a1 = build_quotient(2, 3).unwrap();
        assert_eq!(a1.representatives().len(), 4);
        assert_eq!(a1.translation_quiver().tau_orbit_len(0), Some(4));
        for n in 2..=8 {
            for m in 1..=4 {
                let qt = build_quotient(n, m).unwrap();
                let tq = qt.translation_quiver();
                assert_eq!(tq.len() as u32, (n - 1) * (n * m + 2) / 2);
                assert!(check_translation_quiver(tq).is_ok());
                assert!(is_stable(tq));
                for &r in qt.representatives() {
                    assert_eq!(qt.canonical(r), r);
                    assert_eq!(qt.canonical(phi(n, m, r)), r);
                }
            }
        }
    }

    #[test]
    fn hexagon_window_meets_each_orbit_once() {
        let qt = build_quotient(4, 1).unwrap();
        // φ_1 on ZA_3 moves p by q+1 then flips q; walk each orbit far enough
        let mut seen = std::collections::HashSet::new();
        for &r in qt.representatives() {
            let mut x = r;
            for _ in 0..6 {
                seen.insert(qt.canonical(x));
                x = phi(4, 1, x);
            }
        }
        assert_eq!(seen.len(), 9);
    }

    #[test]
    fn shift_quotient_of_a3() {
        let qt = build_orbit_quotient(ZAutomorphism::shift(3)).unwrap();
        assert_eq!(qt.representatives().len(), 6);
        assert!(check_translation_quiver(qt.translation_quiver()).is_ok());
        assert_eq!(stable_components(qt.translation_quiver()).unwrap().len(), 1);
        assert!(build_orbit_quotient(ZAutomorphism {
            rank: 2,
            shifts: 0,
            advance: 0
        })
        .is_err());
    }

    #[test]
    fn psi_is_an_isomorphism() {
        for n in 2..=7 {
            for m in 1..=4 {
                let psi = build_psi(n, m).unwrap_or_else(|e| panic!("n={n} m={m}: {e}"));
                let g = psi.gamma.translation_quiver();
                let qt = psi.quotient.translation_quiver();
                for v in 0..g.len() {
                    assert_eq!(psi.map[g.tau(v).unwrap()], qt.tau(psi.map[v]).unwrap());
                }
                assert!(tq_isomorphism(g, qt).is_some());
            }
        }
    }

    #[test]
    fn psi_seeds_follow_snake_arrows() {
        let psi = build_psi(6, 2).unwrap();
        assert_eq!(psi_seed(1), c(0, 1));
        assert_eq!(psi_seed(2), c(0, 2));
        assert_eq!(psi_seed(3), c(-1, 3));
        let cfg = *psi.gamma.config();
        let v = |i| psi.gamma.vertex(&snake_diagonal(&cfg, i).unwrap()).unwrap();
        assert_eq!(psi.image(v(1)), psi.quotient.canonical(c(0, 1)));
        let g = psi.gamma.translation_quiver();
        assert_eq!(g.mult(v(1), v(2)), 1);
        assert_eq!(g.mult(v(3), v(2)), 1);
    }
}
