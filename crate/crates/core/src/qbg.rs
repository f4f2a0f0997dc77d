//! The quantum Bruhat graph and its comparison with the double Bruhat
//! graph.
//!
//! The quantum Bruhat graph keeps, out of the double Bruhat graph, the
//! length-increasing cover edges `w → w s_α` with `ℓ(w s_α) = ℓ(w) + 1`
//! (weight 0) and the down edges with `ℓ(w s_α) = ℓ(w) + 1 − ⟨α∨, 2ρ⟩`
//! (weight `α∨`).

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::dbg::wts_multiset;
use crate::error::{Error, Result};
use crate::rootsys::{Coweight, Root, RootSystem, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Up,
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QbgEdge {
    pub from: WeylElement,
    pub root: Root,
    pub to: WeylElement,
    pub kind: EdgeKind,
    pub weight: Coweight,
}

#[derive(Debug, Clone)]
pub struct QuantumBruhatGraph {
    vertices: Vec<WeylElement>,
    edges: Vec<QbgEdge>,
    /// adjacency: vertex index → (edge index) list
    adj: HashMap<WeylElement, Vec<usize>>,
}

/// Builds the quantum Bruhat graph and checks that it is strongly
/// connected.
pub fn build_qbg(rs: &RootSystem) -> Result<QuantumBruhatGraph> {
    let vertices = rs.weyl_group();
    let mut edges = Vec::new();
    let mut adj: HashMap<WeylElement, Vec<usize>> = HashMap::new();
    for w in &vertices {
        for alpha in rs.positive_roots() {
            let target = rs.multiply(w, &rs.reflection(alpha));
            let lw = w.length() as i64;
            let lt = target.length() as i64;
            let kind = if lt == lw + 1 {
                Some((EdgeKind::Up, Coweight::zero(rs.rank())))
            } else if lt == lw + 1 - rs.pair_two_rho(&rs.coroot_of(alpha)) {
                Some((EdgeKind::Down, rs.coroot_of(alpha)))
            } else {
                None
            };
            if let Some((kind, weight)) = kind {
                adj.entry(w.clone()).or_default().push(edges.len());
                edges.push(QbgEdge {
                    from: w.clone(),
                    root: alpha,
                    to: target,
                    kind,
                    weight,
                });
            }
        }
    }
    let graph = QuantumBruhatGraph {
        vertices,
        edges,
        adj,
    };
    // strong connectivity: every pair must be joined by a directed path
    for v in &graph.vertices {
        let mut reached = 0usize;
        let mut seen: HashMap<&WeylElement, ()> = HashMap::new();
        let mut queue = VecDeque::from([v]);
        seen.insert(v, ());
        while let Some(w) = queue.pop_front() {
            reached += 1;
            if let Some(out) = graph.adj.get(w) {
                for &e in out {
                    let next = &graph.edges[e].to;
                    if !seen.contains_key(next) {
                        seen.insert(next, ());
                        queue.push_back(next);
                    }
                }
            }
        }
        if reached != graph.vertices.len() {
            return Err(Error::Internal(format!(
                "quantum Bruhat graph not strongly connected from {v}"
            )));
        }
    }
    Ok(graph)
}

impl QuantumBruhatGraph {
    pub fn vertices(&self) -> &[WeylElement] {
        &self.vertices
    }

    pub fn edges(&self) -> &[QbgEdge] {
        &self.edges
    }

    pub fn has_edge(&self, from: &WeylElement, root: Root) -> Option<&QbgEdge> {
        self.adj
            .get(from)?
            .iter()
            .map(|&e| &self.edges[e])
            .find(|e| e.root == root)
    }

    /// Distance and weight of a shortest directed path from `u` to `v`.
    /// All shortest paths share one weight; this is asserted during the
    /// breadth-first propagation.
    pub fn distance_weight(&self, rs: &RootSystem, u: &WeylElement, v: &WeylElement) -> (u64, Coweight) {
        let mut dist: HashMap<&WeylElement, (u64, Coweight)> = HashMap::new();
        dist.insert(u, (0, Coweight::zero(rs.rank())));
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            let (d, weight) = dist[&w].clone();
            if let Some(out) = self.adj.get(w) {
                for &e in out {
                    let edge = &self.edges[e];
                    let cand = (d + 1, weight.add(&edge.weight));
                    match dist.get(&edge.to) {
                        None => {
                            dist.insert(&edge.to, cand);
                            queue.push_back(&edge.to);
                        }
                        Some((d2, w2)) => {
                            // minimal-path weight is well-defined
                            if *d2 == d + 1 {
                                assert_eq!(
                                    w2, &cand.1,
                                    "two shortest paths with different weights"
                                );
                            }
                        }
                    }
                }
            }
        }
        dist.get(v)
            .cloned()
            .expect("graph is strongly connected")
    }
}

/// Report of the comparison between `wts(u ⇒ v)` and the quantum Bruhat
/// graph data `(wt(u ⇒ v), d(u ⇒ v))`.
#[derive(Debug, Clone, Serialize)]
pub struct QbgDbgReport {
    pub u: String,
    pub v: String,
    pub qbg_distance: u64,
    pub qbg_weight: Coweight,
    pub entries_checked: usize,
}

/// Checks, over the given window, that every `(ω, e)` in `wts(u ⇒ v)`
/// dominates the quantum Bruhat graph datum: `ω ≥ wt(u⇒v)` coordinatewise,
/// `e ≤ ⟨ω, 2ρ⟩ + ℓ(v) − ℓ(u)` with equality only at
/// `(ω, e) = (wt(u⇒v), d(u⇒v))`, and that this extreme pair has
/// multiplicity exactly one. Any violation is reported as an error carrying
/// the counterexample.
pub fn qbg_dbg_compare(
    rs: &RootSystem,
    graph: &QuantumBruhatGraph,
    u: &WeylElement,
    v: &WeylElement,
    window: &[Coweight],
) -> Result<QbgDbgReport> {
    let (d, wt) = graph.distance_weight(rs, u, v);
    if !window.iter().any(|w| w == &wt) {
        return Err(Error::GateFailed(format!(
            "window must contain the quantum Bruhat graph weight {wt}"
        )));
    }
    let multiset = wts_multiset(rs, u, v, v, window)?;
    let bound_const = v.length() as i64 - u.length() as i64;
    let mut checked = 0usize;
    let mut extreme_mult = 0u64;
    for (key, &mult) in &multiset.entries {
        checked += 1;
        let omega = Coweight(key.weight.clone());
        if !wt.leq(&omega) {
            return Err(Error::Internal(format!(
                "wts({u} ⇒ {v}) entry weight {omega} does not dominate {wt}"
            )));
        }
        let e = key.length as i64;
        let bound = rs.pair_two_rho(&omega) + bound_const;
        if e > bound {
            return Err(Error::Internal(format!(
                "wts({u} ⇒ {v}) entry ({omega}, {e}) exceeds bound {bound}"
            )));
        }
        if e == bound {
            if omega != wt || e != d as i64 {
                return Err(Error::Internal(format!(
                    "wts({u} ⇒ {v}) entry ({omega}, {e}) attains the bound away from ({wt}, {d})"
                )));
            }
            extreme_mult += mult;
        }
    }
    if extreme_mult != 1 {
        return Err(Error::Internal(format!(
            "multiplicity of ({wt}, {d}) in wts({u} ⇒ {v}) is {extreme_mult}, not 1"
        )));
    }
    Ok(QbgDbgReport {
        u: u.word_string(),
        v: v.word_string(),
        qbg_distance: d,
        qbg_weight: wt,
        entries_checked: checked,
    })
}

/// Box window `{ω : 0 ≤ ω ≤ cap coordinatewise}`.
pub fn box_window(cap: &Coweight) -> Vec<Coweight> {
    let mut out = vec![Coweight::zero(cap.rank())];
    for j in 0..cap.rank() {
        let mut next = Vec::new();
        for w in &out {
            for c in 0..=cap.0[j].max(0) {
                let mut v = w.0.clone();
                v[j] = c;
                next.push(Coweight(v));
            }
        }
        out = next;
    }
    out
}
