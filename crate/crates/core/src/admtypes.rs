//! Admissible types, their bijection with increasing labelled paths, type
//! dimensions, and the census of semi-infinite orbit intersections.
//!
//! An admissible type for `(x, u, ≺)` is a set of entries
//! `(n_1, ν_1), …, (n_N, ν_N)` with `n_1 < ⋯ < n_N`, encoding the affine
//! roots `b_h = (u β_{n_h}, ν_h)`. Admissibility demands
//! `r_{b_N} ⋯ r_{b_{h+1}}(b_h) ∈ Φ_af⁻` for every `h`, and the product
//! `r_{b_1} ⋯ r_{b_N}` recovers `x`. Writing
//! `b'_h = r_{b_N} ⋯ r_{b_h}(b_h) ∈ Φ_af⁺ = (β'_h, m'_h)`, the assignment
//! `τ ↦ (w⁻¹u → … → u` with edges `(β_{n_h}, m'_h))` is a weight-preserving
//! bijection onto the increasing paths from `w⁻¹u` to `u` of weight
//! `u⁻¹wμ`.

use serde::Serialize;

use crate::affine::{
    affine_act, affine_inverse, affine_multiply, affine_reflection, ell_u, AffineElement,
    AffineRoot,
};
use crate::dbg::{enumerate_increasing_paths, LabelledPath, PathJson};
use crate::error::{Error, Result};
use crate::reforder::{order_with_suffix, ReflectionOrder};
use crate::rootsys::{Coweight, RootSystem, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleType {
    /// Entries `(n_h, ν_h)` with 1-based strictly increasing indices.
    pub entries: Vec<(usize, i64)>,
    pub u: WeylElement,
    pub order: ReflectionOrder,
    /// The element `r_{b_1} ⋯ r_{b_N}` determined by the entries.
    pub x: AffineElement,
}

impl AdmissibleType {
    pub fn cardinality(&self) -> usize {
        self.entries.len()
    }

    /// The affine roots `b_h = (u β_{n_h}, ν_h)`.
    pub fn affine_roots(&self, rs: &RootSystem) -> Vec<AffineRoot> {
        self.entries
            .iter()
            .map(|&(n, nu)| {
                AffineRoot::new(
                    rs.act_root(&self.u, self.order.roots()[n - 1]),
                    nu,
                )
            })
            .collect()
    }
}

/// Validates the sign conditions on a candidate entry set and attaches the
/// resulting element `x = r_{b_1} ⋯ r_{b_N}`. Rejects naming the first
/// failing position `h` (1-based).
pub fn admissible_from_values(
    rs: &RootSystem,
    entries: &[(usize, i64)],
    u: &WeylElement,
    order: &ReflectionOrder,
) -> Result<AdmissibleType> {
    let count = order.len();
    for window in entries.windows(2) {
        if window[0].0 >= window[1].0 {
            return Err(Error::Parse {
                what: "type entries (indices must strictly increase)",
                token: format!("{entries:?}"),
            });
        }
    }
    if let Some(&(n, _)) = entries.iter().find(|&&(n, _)| n == 0 || n > count) {
        return Err(Error::IndexOutOfRange {
            index: n,
            max: count,
        });
    }
    let roots: Vec<AffineRoot> = entries
        .iter()
        .map(|&(n, nu)| AffineRoot::new(rs.act_root(u, order.roots()[n - 1]), nu))
        .collect();
    // suffix = r_{b_N} ⋯ r_{b_{h+1}}, extended downwards
    let mut suffix = AffineElement::identity(rs);
    for h in (0..roots.len()).rev() {
        let moved = affine_act(rs, &suffix, roots[h]);
        if moved.is_positive() {
            return Err(Error::NotAdmissible { h: h + 1 });
        }
        suffix = affine_multiply(rs, &suffix, &affine_reflection(rs, roots[h]));
    }
    let mut x = AffineElement::identity(rs);
    for &b in &roots {
        x = affine_multiply(rs, &x, &affine_reflection(rs, b));
    }
    Ok(AdmissibleType {
        entries: entries.to_vec(),
        u: u.clone(),
        order: order.clone(),
        x,
    })
}

/// The increasing path corresponding to an admissible type: it runs from
/// `w⁻¹u` to `u` with edges `(β_{n_h}, m'_h)` and has weight `u⁻¹wμ`.
pub fn type_to_path(rs: &RootSystem, tau: &AdmissibleType) -> LabelledPath {
    let roots = tau.affine_roots(rs);
    let count = roots.len();
    // b'_h = r_{b_N} ⋯ r_{b_h}(b_h), built from the top down
    let mut transformed = vec![None; count];
    let mut suffix = AffineElement::identity(rs);
    for h in (0..count).rev() {
        let moved = affine_act(rs, &suffix, roots[h]);
        debug_assert!(!moved.is_positive(), "type must be admissible");
        transformed[h] = Some(moved.negated());
        suffix = affine_multiply(rs, &suffix, &affine_reflection(rs, roots[h]));
    }
    let start = rs.multiply(&rs.inverse(&tau.x.weyl), &tau.u);
    let edges: Vec<_> = tau
        .entries
        .iter()
        .zip(&transformed)
        .map(|(&(n, _), b)| (tau.order.roots()[n - 1], b.unwrap().level))
        .collect();
    let path = LabelledPath { start, edges };
    debug_assert_eq!(path.end(rs), tau.u);
    debug_assert!(path.is_valid(rs, &tau.order));
    path
}

/// Inverse of [`type_to_path`]: reads the entries off an increasing path
/// ending at `u` and attaches the element it determines.
pub fn path_to_type(
    rs: &RootSystem,
    path: &LabelledPath,
    order: &ReflectionOrder,
    n: usize,
) -> Result<AdmissibleType> {
    let u = path.end(rs);
    let vertices = path.vertices(rs);
    let count = path.len();
    // b'_h = (u_h β_{n_h}, m_h) is a positive affine root by the label bound
    let mut primed = Vec::with_capacity(count);
    let mut indices = Vec::with_capacity(count);
    let mut last = 0usize;
    for (h, &(root, label)) in path.edges.iter().enumerate() {
        let pos = order.position(root) + 1;
        if h > 0 && pos <= last {
            return Err(Error::Parse {
                what: "path (must be increasing for the order)",
                token: format!("{:?}", path.edges),
            });
        }
        if pos > n {
            return Err(Error::IndexOutOfRange { index: pos, max: n });
        }
        last = pos;
        indices.push(pos);
        let b = AffineRoot::new(rs.act_root(&vertices[h], root), label);
        if !b.is_positive() {
            return Err(Error::Parse {
                what: "path (label below the bound)",
                token: format!("{:?}", path.edges),
            });
        }
        primed.push(b);
    }
    // recover b_h = −(r_{b_{h+1}} ⋯ r_{b_N})(b'_h) from the top down
    let mut entries = vec![(0usize, 0i64); count];
    let mut tail = AffineElement::identity(rs);
    for h in (0..count).rev() {
        let b = affine_act(rs, &tail, primed[h]).negated();
        entries[h] = (indices[h], b.level);
        debug_assert_eq!(b.root, rs.act_root(&u, order.roots()[indices[h] - 1]));
        tail = affine_multiply(rs, &affine_reflection(rs, b), &tail);
    }
    admissible_from_values(rs, &entries, &u, order)
}

/// All admissible types for `(x, u, ≺)` with `n_N ≤ n`, computed through
/// the bijection with weight-constrained increasing paths.
pub fn enumerate_admissible_types(
    rs: &RootSystem,
    x: &AffineElement,
    u: &WeylElement,
    order: &ReflectionOrder,
    n: usize,
) -> Result<Vec<AdmissibleType>> {
    let start = rs.multiply(&rs.inverse(&x.weyl), u);
    let target = rs
        .act_coweight(
            &rs.multiply(&rs.inverse(u), &x.weyl),
            &x.translation,
        )
        .expect("rank fixed");
    let paths = enumerate_increasing_paths(rs, order, n, &start, u, &target)?;
    let mut out = Vec::with_capacity(paths.len());
    for p in paths {
        let tau = path_to_type(rs, &p, order, n)?;
        if &tau.x != x {
            return Err(Error::Internal(format!(
                "path pulls back to {} instead of {}",
                tau.x, x
            )));
        }
        out.push(tau);
    }
    Ok(out)
}

/// Dimension `½(N − ℓ_u(x))` of the piece attached to an admissible type.
pub fn type_dimension(rs: &RootSystem, tau: &AdmissibleType) -> i64 {
    let n = tau.cardinality() as i64;
    let l = ell_u(rs, &tau.x, &tau.u);
    assert_eq!((n - l).rem_euclid(2), 0, "type dimension parity violation");
    (n - l) / 2
}

/// One piece of a semi-infinite intersection census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusPiece {
    pub path: PathJson,
    pub dim: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CensusDim {
    Empty(String),
    Dim(i64),
}

/// Census of the intersection of a thickened Iwahori stratum with a
/// semi-infinite orbit: one piece per increasing path from `w_y⁻¹ w_x u`
/// to `u`, bounded by the index with `π_{≻n} = u⁻¹v`, of weight
/// `u⁻¹(w_x⁻¹ w_y μ_y − μ_x)`; the piece for `p` has dimension
/// `½(ℓ_{w_x u}(x) − ℓ_{w_x u}(y) + ℓ(p))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionCensus {
    pub pieces: Vec<CensusPiece>,
    pub dim: CensusDim,
    pub top_count: usize,
}

pub fn semi_infinite_intersection(
    rs: &RootSystem,
    u: &WeylElement,
    v: &WeylElement,
    x: &AffineElement,
    y: &AffineElement,
) -> Result<IntersectionCensus> {
    let suffix = rs.multiply(&rs.inverse(u), v);
    let (order, n) = order_with_suffix(rs, &suffix);
    let start = rs.multiply(&rs.multiply(&rs.inverse(&y.weyl), &x.weyl), u);
    let u_inv = rs.inverse(u);
    let target = rs
        .act_coweight(
            &rs.multiply(&u_inv, &rs.multiply(&rs.inverse(&x.weyl), &y.weyl)),
            &y.translation,
        )?
        .sub(&rs.act_coweight(&u_inv, &x.translation)?);
    let paths = enumerate_increasing_paths(rs, &order, n, &start, u, &target)?;

    let u_ambient = rs.multiply(&x.weyl, u);
    let base = ell_u(rs, x, &u_ambient) - ell_u(rs, y, &u_ambient);
    let mut pieces: Vec<(LabelledPath, i64)> = paths
        .into_iter()
        .map(|p| {
            let total = base + p.len() as i64;
            assert_eq!(total.rem_euclid(2), 0, "piece dimension parity violation");
            (p, total / 2)
        })
        .collect();
    pieces.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let dim = pieces.first().map(|&(_, d)| d);
    let top_count = match dim {
        Some(d) => pieces.iter().filter(|&&(_, pd)| pd == d).count(),
        None => 0,
    };
    Ok(IntersectionCensus {
        pieces: pieces
            .into_iter()
            .map(|(p, d)| CensusPiece {
                path: p.to_json_value(rs),
                dim: d,
            })
            .collect(),
        dim: match dim {
            Some(d) => CensusDim::Dim(d),
            None => CensusDim::Empty("empty".to_string()),
        },
        top_count,
    })
}

/// Brute-force enumeration of admissible types over a bounded value
/// window, independent of the path bijection. Test oracle.
pub fn brute_force_types(
    rs: &RootSystem,
    x: &AffineElement,
    u: &WeylElement,
    order: &ReflectionOrder,
    n: usize,
    value_bound: i64,
) -> Vec<AdmissibleType> {
    let mut out = Vec::new();
    let indices: Vec<usize> = (1..=n).collect();
    for mask in 0..(1u32 << indices.len()) {
        let chosen: Vec<usize> = indices
            .iter()
            .enumerate()
            .filter(|&(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &i)| i)
            .collect();
        let mut values = vec![-value_bound; chosen.len()];
        loop {
            let entries: Vec<(usize, i64)> =
                chosen.iter().copied().zip(values.iter().copied()).collect();
            if let Ok(tau) = admissible_from_values(rs, &entries, u, order) {
                if &tau.x == x {
                    out.push(tau);
                }
            }
            // advance the value vector like an odometer
            let mut pos = 0;
            loop {
                if pos == values.len() {
                    break;
                }
                values[pos] += 1;
                if values[pos] <= value_bound {
                    break;
                }
                values[pos] = -value_bound;
                pos += 1;
            }
            if pos == values.len() {
                break;
            }
        }
        if chosen.is_empty() {
            // the odometer above does not cover the empty entry set twice
            continue;
        }
    }
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    out
}
