//! Mesh categories of translation quivers and their Hom dimensions.
//!
//! The mesh ideal is generated, for every vertex `y` with `τy` defined, by the
//! sum of the length-two paths `τy -> z -> y`. All coefficients are `+1` and
//! arithmetic is exact over `Q`. Since the relations are homogeneous, the path
//! category is graded by length and each graded piece is computed from the
//! previous two:
//!
//! ```text
//! Λ_ℓ(x, y) = ( ⊕_{z -> y} Λ_{ℓ-1}(x, z) ) / Λ_{ℓ-2}(x, τy) · m_y
//! ```
//!
//! Dimensions obtained this way are exact up to the truncation length only;
//! [`HomResult::stabilized`] reports whether the next degree vanishes.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{stable_components, TranslationQuiver, VertexId};

type Q = BigRational;

/// One path `τy -> via -> y` in a mesh relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeshTerm {
    pub via: VertexId,
    pub coefficient: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeshRelation {
    pub source: VertexId,
    pub target: VertexId,
    pub terms: Vec<MeshTerm>,
}

impl MeshRelation {
    /// The terms as full vertex paths `[source, via, target]`.
    pub fn paths(&self) -> impl Iterator<Item = (i32, [VertexId; 3])> + '_ {
        self.terms
            .iter()
            .map(|t| (t.coefficient, [self.source, t.via, self.target]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeshPresentation {
    pub generators: Vec<(VertexId, VertexId)>,
    pub relations: Vec<MeshRelation>,
}

/// Labelled form of a presentation for export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeshDocument {
    pub vertices: Vec<String>,
    pub generators: Vec<[String; 2]>,
    pub relations: Vec<MeshDocumentRelation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeshDocumentRelation {
    pub target: String,
    pub terms: Vec<MeshDocumentTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeshDocumentTerm {
    pub path: [String; 3],
    pub coefficient: i32,
}

impl MeshPresentation {
    pub fn to_document(&self, tq: &TranslationQuiver) -> MeshDocument {
        let name = |v: VertexId| tq.label(v).to_string();
        MeshDocument {
            vertices: (0..tq.len()).map(name).collect(),
            generators: self
                .generators
                .iter()
                .map(|&(s, d)| [name(s), name(d)])
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| MeshDocumentRelation {
                    target: name(r.target),
                    terms: r
                        .paths()
                        .map(|(coefficient, p)| MeshDocumentTerm {
                            path: p.map(name),
                            coefficient,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

fn reject_multiple_arrows(tq: &TranslationQuiver) -> Result<()> {
    match tq.quiver().arrows().find(|&(_, k)| k > 1) {
        Some(((s, d), mult)) => Err(Error::MultipleArrows {
            src: tq.label(s).to_string(),
            dst: tq.label(d).to_string(),
            mult,
        }),
        None => Ok(()),
    }
}

fn mesh_middles(tq: &TranslationQuiver, y: VertexId) -> Vec<VertexId> {
    let Some(t) = tq.tau(y) else {
        return Vec::new();
    };
    let mut mids: Vec<VertexId> = tq
        .quiver()
        .successors(t)
        .iter()
        .map(|&(z, _)| z)
        .filter(|&z| tq.mult(z, y) > 0)
        .collect();
    mids.sort_unstable();
    mids
}

/// Generators and mesh relations, one relation per non-projective vertex.
pub fn mesh_presentation(tq: &TranslationQuiver) -> Result<MeshPresentation> {
    reject_multiple_arrows(tq)?;
    let generators = tq.quiver().arrows().map(|(a, _)| a).collect();
    let relations = (0..tq.len())
        .filter_map(|y| {
            let source = tq.tau(y)?;
            let terms = mesh_middles(tq, y)
                .into_iter()
                .map(|via| MeshTerm {
                    via,
                    coefficient: 1,
                })
                .collect();
            Some(MeshRelation {
                source,
                target: y,
                terms,
            })
        })
        .collect();
    Ok(MeshPresentation {
        generators,
        relations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomResult {
    pub dimension: usize,
    pub stabilized: bool,
    pub truncation_length: usize,
}

pub fn default_truncation(tq: &TranslationQuiver) -> usize {
    (2 * tq.len()).max(1)
}

/// `Λ_ℓ(x, y)`, presented as a quotient of the direct sum of
/// `Λ_{ℓ-1}(x, z)` over the arrows `z -> y`.
#[derive(Debug, Clone, Default)]
struct Cell {
    dim: usize,
    /// `(z, offset)` of each summand.
    blocks: Vec<(VertexId, usize)>,
    /// `dim x width` projection onto the quotient coordinates.
    proj: Vec<Vec<Q>>,
}

impl Cell {
    /// Right multiplication by the arrow `z -> y`.
    fn extend(&self, z: VertexId, u: &[Q]) -> Option<Vec<Q>> {
        let &(_, off) = self.blocks.iter().find(|(w, _)| *w == z)?;
        Some(
            self.proj
                .iter()
                .map(|row| {
                    row[off..off + u.len()]
                        .iter()
                        .zip(u)
                        .fold(Q::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }
}

/// Graded pieces `Λ_ℓ(x, -)` of the mesh category for a fixed source `x`.
#[derive(Debug, Clone)]
pub struct HomSpaces<'a> {
    tq: &'a TranslationQuiver,
    source: VertexId,
    levels: Vec<Vec<Cell>>,
}

impl<'a> HomSpaces<'a> {
    /// Compute degrees `0..=max_degree`.
    pub fn new(tq: &'a TranslationQuiver, source: VertexId, max_degree: usize) -> Result<Self> {
        reject_multiple_arrows(tq)?;
        if source >= tq.len() {
            return Err(Error::UnknownVertex(source.to_string()));
        }
        let n = tq.len();
        let mut levels: Vec<Vec<Cell>> = Vec::with_capacity(max_degree + 1);
        levels.push(
            (0..n)
                .map(|y| Cell {
                    dim: usize::from(y == source),
                    blocks: Vec::new(),
                    proj: Vec::new(),
                })
                .collect(),
        );
        for l in 1..=max_degree {
            let prev = &levels[l - 1];
            if prev.iter().all(|c| c.dim == 0) {
                levels.push(vec![Cell::default(); n]);
                continue;
            }
            let row = (0..n).map(|y| build_cell(tq, &levels, l, y)).collect();
            levels.push(row);
        }
        Ok(Self { tq, source, levels })
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn max_degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn graded_dim(&self, degree: usize, y: VertexId) -> usize {
        self.levels.get(degree).map_or(0, |row| row[y].dim)
    }

    /// Sum of the graded dimensions in degrees `0..=up_to`.
    pub fn dim_up_to(&self, up_to: usize, y: VertexId) -> usize {
        (0..=up_to).map(|l| self.graded_dim(l, y)).sum()
    }

    /// Coordinates of a path starting at the source in `Λ_len(source, end)`.
    pub fn path_vector(&self, path: &[VertexId]) -> Result<Vec<Q>> {
        match path.first() {
            Some(&s) if s == self.source => {}
            _ => {
                return Err(Error::Malformed(format!(
                    "path must start at {}",
                    self.tq.label(self.source)
                )))
            }
        }
        if path.len() > self.levels.len() {
            return Err(Error::Malformed(format!(
                "path of length {} exceeds computed degree {}",
                path.len() - 1,
                self.max_degree()
            )));
        }
        let mut u = vec![Q::one()];
        for (l, w) in path.windows(2).enumerate() {
            let (z, y) = (w[0], w[1]);
            if self.tq.mult(z, y) == 0 {
                return Err(Error::Malformed(format!(
                    "no arrow {} -> {}",
                    self.tq.label(z),
                    self.tq.label(y)
                )));
            }
            u = self.levels[l + 1][y]
                .extend(z, &u)
                .expect("arrow has a block in its target cell");
        }
        Ok(u)
    }

    /// Coordinates of `Σ c_i · path_i`; all paths must share length and
    /// endpoints.
    pub fn combination(&self, terms: &[(i64, &[VertexId])]) -> Result<Vec<Q>> {
        let mut acc: Option<(usize, VertexId, Vec<Q>)> = None;
        for &(c, path) in terms {
            let v = self.path_vector(path)?;
            let key = (path.len(), *path.last().expect("non-empty path"));
            let c = Q::from_integer(c.into());
            match &mut acc {
                None => acc = Some((key.0, key.1, v.into_iter().map(|x| x * &c).collect())),
                Some((len, end, sum)) => {
                    if (*len, *end) != key {
                        return Err(Error::Malformed(
                            "paths in a combination must share length and endpoints".into(),
                        ));
                    }
                    for (s, x) in sum.iter_mut().zip(v) {
                        *s += x * &c;
                    }
                }
            }
        }
        Ok(acc.map(|(_, _, v)| v).unwrap_or_default())
    }
}

fn build_cell(tq: &TranslationQuiver, levels: &[Vec<Cell>], l: usize, y: VertexId) -> Cell {
    let prev = &levels[l - 1];
    let mut preds: Vec<VertexId> = tq
        .quiver()
        .predecessors(y)
        .iter()
        .map(|&(z, _)| z)
        .collect();
    preds.sort_unstable();
    let mut blocks = Vec::with_capacity(preds.len());
    let mut width = 0;
    for z in preds {
        blocks.push((z, width));
        width += prev[z].dim;
    }

    let mut relations: Vec<Vec<Q>> = Vec::new();
    if l >= 2 {
        if let Some(t) = tq.tau(y) {
            let mids = mesh_middles(tq, y);
            for j in 0..levels[l - 2][t].dim {
                let mut unit = vec![Q::zero(); levels[l - 2][t].dim];
                unit[j] = Q::one();
                let mut vec = vec![Q::zero(); width];
                for &z in &mids {
                    let part = prev[z].extend(t, &unit).expect("mesh arrow has a block");
                    let off = blocks.iter().find(|(w, _)| *w == z).expect("mesh arrow").1;
                    for (k, x) in part.into_iter().enumerate() {
                        vec[off + k] += x;
                    }
                }
                relations.push(vec);
            }
        }
    }

    let (rows, pivots) = rref(relations, width);
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    let proj = free
        .iter()
        .map(|&c| {
            let mut out = vec![Q::zero(); width];
            out[c] = Q::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                out[p] = -row[c].clone();
            }
            out
        })
        .collect();
    Cell {
        dim: free.len(),
        blocks,
        proj,
    }
}

/// Reduced row echelon form; returns the non-zero rows and their pivot
/// columns.
fn rref(mut rows: Vec<Vec<Q>>, width: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Dimension of the morphisms `x -> y` in the mesh category spanned by
/// paths of length at most `max_len`.
pub fn hom_dim(
    tq: &TranslationQuiver,
    x: VertexId,
    y: VertexId,
    max_len: usize,
) -> Result<HomResult> {
    if max_len < 1 {
        return Err(Error::InvalidTruncation(max_len));
    }
    if y >= tq.len() {
        return Err(Error::UnknownVertex(y.to_string()));
    }
    let spaces = HomSpaces::new(tq, x, max_len + 1)?;
    Ok(HomResult {
        dimension: spaces.dim_up_to(max_len, y),
        stabilized: spaces.graded_dim(max_len + 1, y) == 0,
        truncation_length: max_len,
    })
}

/// Invariants of one stable component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ComponentFingerprint {
    pub vertices: usize,
    pub arrows: u32,
    /// Sorted τ-orbit sizes, one entry per vertex.
    pub tau_orbits: Vec<usize>,
    /// Sorted `hom_dim(x, x)` at default truncation.
    pub endomorphism_dims: Vec<usize>,
}

/// Fingerprints of the stable components, sorted.
pub fn component_mesh_fingerprint(tq: &TranslationQuiver) -> Result<Vec<ComponentFingerprint>> {
    let mut out = stable_components(tq)?
        .into_iter()
        .map(|comp| {
            let sub = tq.induced(&comp);
            fingerprint_of(&sub)
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn fingerprint_of(tq: &TranslationQuiver) -> Result<ComponentFingerprint> {
    let len = default_truncation(tq);
    let mut tau_orbits: Vec<usize> = (0..tq.len())
        .map(|v| tq.tau_orbit_len(v).unwrap_or(0))
        .collect();
    tau_orbits.sort_unstable();
    let mut endomorphism_dims = (0..tq.len())
        .map(|v| hom_dim(tq, v, v, len).map(|h| h.dimension))
        .collect::<Result<Vec<_>>>()?;
    endomorphism_dims.sort_unstable();
    Ok(ComponentFingerprint {
        vertices: tq.len(),
        arrows: tq.quiver().arrow_count(),
        tau_orbits,
        endomorphism_dims,
    })
}
