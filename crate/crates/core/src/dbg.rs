//! The double Bruhat graph: labelled paths, increasing-path enumeration,
//! weight multisets, path symmetries and the Yang-Baxter operator oracle.
//!
//! The graph has vertex set `W` and one edge `w → w s_α` for every `w` and
//! every positive root `α`. A labelled path carries integers
//! `m_i ≥ Φ⁺(−u_i α_i)`, so labels on length-increasing edges are ≥ 0 and
//! labels on length-decreasing edges are ≥ 1. The weight of a path is
//! `Σ m_i α_i∨`, which makes every path weight a nonnegative vector in the
//! simple-coroot basis; enumeration against a weight cap is therefore
//! finite.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::reforder::{order_with_suffix, ReflectionOrder};
use crate::rootsys::{positivity, Coweight, Root, RootSystem, WeylElement};

/// An increasing labelled path, stored as its start vertex and edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledPath {
    pub start: WeylElement,
    /// Edges `(α_i, m_i)` in path order.
    pub edges: Vec<(Root, i64)>,
}

impl LabelledPath {
    pub fn empty(at: WeylElement) -> LabelledPath {
        LabelledPath {
            start: at,
            edges: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices `u_1, …, u_{ℓ+1}` visited by the path.
    pub fn vertices(&self, rs: &RootSystem) -> Vec<WeylElement> {
        let mut out = vec![self.start.clone()];
        for &(root, _) in &self.edges {
            let last = out.last().unwrap();
            out.push(rs.multiply(last, &rs.reflection(root)));
        }
        out
    }

    pub fn end(&self, rs: &RootSystem) -> WeylElement {
        self.vertices(rs).pop().unwrap()
    }

    /// `wt(p) = Σ m_i α_i∨`.
    pub fn weight(&self, rs: &RootSystem) -> Coweight {
        let mut w = Coweight::zero(rs.rank());
        for &(root, label) in &self.edges {
            w = w.add(&rs.coroot_of(root).scaled(label));
        }
        w
    }

    /// Counts of short and long labels.
    pub fn short_long(&self, rs: &RootSystem) -> (usize, usize) {
        let long = self.edges.iter().filter(|&&(r, _)| rs.is_long(r)).count();
        (self.edges.len() - long, long)
    }

    /// Checks the label bounds `m_i ≥ Φ⁺(−u_i α_i)` and strict increase with
    /// respect to `order`.
    pub fn is_valid(&self, rs: &RootSystem, order: &ReflectionOrder) -> bool {
        let mut vertex = self.start.clone();
        let mut last_pos: Option<usize> = None;
        for &(root, label) in &self.edges {
            if !root.is_positive() {
                return false;
            }
            let pos = order.position(root);
            if let Some(prev) = last_pos {
                if pos <= prev {
                    return false;
                }
            }
            last_pos = Some(pos);
            if label < positivity(rs.act_root(&vertex, root).negated()) {
                return false;
            }
            vertex = rs.multiply(&vertex, &rs.reflection(root));
        }
        true
    }

    pub fn to_json_value(&self, rs: &RootSystem) -> PathJson {
        PathJson {
            start: self.start.word_string(),
            edges: self
                .edges
                .iter()
                .map(|&(root, label)| EdgeJson {
                    root: rs.root_coords(root),
                    label,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct EdgeJson {
    pub root: Vec<i64>,
    pub label: i64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PathJson {
    pub start: String,
    pub edges: Vec<EdgeJson>,
}

/// All edges of the double Bruhat graph, as `(w, α, w s_α)` triples.
pub fn dbg_edges(rs: &RootSystem) -> Vec<(WeylElement, Root, WeylElement)> {
    let mut out = Vec::new();
    for w in rs.weyl_group() {
        for alpha in rs.positive_roots() {
            let target = rs.multiply(&w, &rs.reflection(alpha));
            out.push((w.clone(), alpha, target));
        }
    }
    out
}

/// Key of a weight-multiset entry: `(weight, length, short, long)`.
/// The derived order sorts by weight lexicographically, then length, then
/// the short/long refinement.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MultisetKey {
    pub weight: Vec<i64>,
    pub length: usize,
    pub short: usize,
    pub long: usize,
}

/// Weight multiset of increasing paths, complete over an explicit finite
/// weight window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    pub entries: BTreeMap<MultisetKey, u64>,
    pub window: BTreeSet<Vec<i64>>,
}

impl WeightMultiset {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplicities of each length at one weight, as a sorted multiset.
    pub fn lengths_at(&self, weight: &Coweight) -> Vec<i64> {
        let mut out = Vec::new();
        for (key, &mult) in &self.entries {
            if key.weight == weight.0 {
                for _ in 0..mult {
                    out.push(key.length as i64);
                }
            }
        }
        out
    }

    pub fn max_length(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.length).max()
    }

    /// Forgets the short/long refinement.
    pub fn coarse(&self) -> BTreeMap<(Vec<i64>, usize), u64> {
        let mut out: BTreeMap<(Vec<i64>, usize), u64> = BTreeMap::new();
        for (key, &mult) in &self.entries {
            *out.entry((key.weight.clone(), key.length)).or_insert(0) += mult;
        }
        out
    }

    pub fn to_json_entries(&self) -> Vec<MultisetEntryJson> {
        self.entries
            .iter()
            .map(|(k, &mult)| MultisetEntryJson {
                weight: k.weight.clone(),
                length: k.length,
                short: k.short,
                long: k.long,
                mult,
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MultisetEntryJson {
    pub weight: Vec<i64>,
    pub length: usize,
    pub short: usize,
    pub long: usize,
    pub mult: u64,
}

/// Depth-first enumeration of all increasing paths from `u` bounded by `n`
/// whose weight stays coordinatewise ≤ `cap`. Calls `visit` on every such
/// path (including the empty one).
pub fn for_each_bounded_path<F: FnMut(&LabelledPath)>(
    rs: &RootSystem,
    order: &ReflectionOrder,
    n: usize,
    u: &WeylElement,
    cap: &[i64],
    mut visit: F,
) {
    let mut path = LabelledPath::empty(u.clone());
    visit(&path);
    let mut weight = vec![0i64; rs.rank()];
    dfs_paths(rs, order, n, u.clone(), 0, &mut weight, cap, &mut path, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn dfs_paths<F: FnMut(&LabelledPath)>(
    rs: &RootSystem,
    order: &ReflectionOrder,
    n: usize,
    vertex: WeylElement,
    from_pos: usize,
    weight: &mut Vec<i64>,
    cap: &[i64],
    path: &mut LabelledPath,
    visit: &mut F,
) {
    for pos in from_pos..n {
        let beta = order.roots()[pos];
        let coroot = rs.coroot_of(beta);
        let min_label = positivity(rs.act_root(&vertex, beta).negated());
        // largest label keeping the weight under the cap
        let mut max_label = i64::MAX;
        for j in 0..rs.rank() {
            if coroot.0[j] > 0 {
                max_label = max_label.min((cap[j] - weight[j]) / coroot.0[j]);
            }
        }
        if max_label < min_label {
            continue;
        }
        let next_vertex = rs.multiply(&vertex, &rs.reflection(beta));
        for label in min_label..=max_label {
            for j in 0..rs.rank() {
                weight[j] += label * coroot.0[j];
            }
            path.edges.push((beta, label));
            visit(path);
            dfs_paths(
                rs,
                order,
                n,
                next_vertex.clone(),
                pos + 1,
                weight,
                cap,
                path,
                visit,
            );
            path.edges.pop();
            for j in 0..rs.rank() {
                weight[j] -= label * coroot.0[j];
            }
        }
    }
}

/// The paths from `u` to `v`, increasing for `order`, bounded by `n`, with
/// weight exactly `target_weight`. Sorted deterministically.
pub fn enumerate_increasing_paths(
    rs: &RootSystem,
    order: &ReflectionOrder,
    n: usize,
    u: &WeylElement,
    v: &WeylElement,
    target_weight: &Coweight,
) -> Result<Vec<LabelledPath>> {
    if n > order.len() {
        return Err(Error::IndexOutOfRange {
            index: n,
            max: order.len(),
        });
    }
    if target_weight.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: target_weight.rank(),
        });
    }
    let mut out = Vec::new();
    if !target_weight.is_nonnegative() {
        return Ok(out); // path weights are nonnegative coroot combinations
    }
    for_each_bounded_path(rs, order, n, u, &target_weight.0, |p| {
        if p.weight(rs) == *target_weight && &p.end(rs) == v {
            out.push(p.clone());
        }
    });
    out.sort();
    Ok(out)
}

/// Census of all increasing paths from `u` bounded by `n` with weight under
/// `cap`, refined by end vertex.
pub fn path_census(
    rs: &RootSystem,
    order: &ReflectionOrder,
    n: usize,
    u: &WeylElement,
    cap: &[i64],
) -> HashMap<WeylElement, BTreeMap<MultisetKey, u64>> {
    let mut out: HashMap<WeylElement, BTreeMap<MultisetKey, u64>> = HashMap::new();
    for_each_bounded_path(rs, order, n, u, cap, |p| {
        let (short, long) = p.short_long(rs);
        let key = MultisetKey {
            weight: p.weight(rs).0,
            length: p.len(),
            short,
            long,
        };
        *out.entry(p.end(rs)).or_default().entry(key).or_insert(0) += 1;
    });
    out
}

/// The weight multiset `wts(u ⇒ v ⇢ v2)` over an explicit window: the
/// census of increasing paths from `u` to `v` bounded by the index `n`
/// determined by `π_{≻n} = v⁻¹ v2`. The internally chosen reflection order
/// does not affect the result.
pub fn wts_multiset(
    rs: &RootSystem,
    u: &WeylElement,
    v: &WeylElement,
    v2: &WeylElement,
    window: &[Coweight],
) -> Result<WeightMultiset> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    for w in window {
        if w.rank() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: w.rank(),
            });
        }
    }
    let suffix = rs.multiply(&rs.inverse(v), v2);
    let (order, n) = order_with_suffix(rs, &suffix);
    let window_set: BTreeSet<Vec<i64>> = window.iter().map(|w| w.0.clone()).collect();
    let mut entries: BTreeMap<MultisetKey, u64> = BTreeMap::new();
    let feasible: Vec<&Coweight> = window.iter().filter(|w| w.is_nonnegative()).collect();
    if !feasible.is_empty() {
        let cap: Vec<i64> = (0..rs.rank())
            .map(|j| feasible.iter().map(|w| w.0[j]).max().unwrap())
            .collect();
        for_each_bounded_path(rs, &order, n, u, &cap, |p| {
            let weight = p.weight(rs);
            if !window_set.contains(&weight.0) || &p.end(rs) != v {
                return;
            }
            let (short, long) = p.short_long(rs);
            let key = MultisetKey {
                weight: weight.0,
                length: p.len(),
                short,
                long,
            };
            *entries.entry(key).or_insert(0) += 1;
        });
    }
    Ok(WeightMultiset {
        entries,
        window: window_set,
    })
}

/// Non-emptiness and maximal length of `wts(u ⇒ v ⇢ v2)`: the multiset is
/// non-empty iff `v⁻¹v2 ≤ u⁻¹v2` in Bruhat order, and then the maximal
/// occurring path length is `ℓ(u⁻¹v2) − ℓ(v⁻¹v2)`.
pub fn max_increasing_length(
    rs: &RootSystem,
    u: &WeylElement,
    v: &WeylElement,
    v2: &WeylElement,
) -> Option<i64> {
    let a = rs.multiply(&rs.inverse(v), v2);
    let b = rs.multiply(&rs.inverse(u), v2);
    if rs.bruhat_leq(&a, &b) {
        Some(b.length() as i64 - a.length() as i64)
    } else {
        None
    }
}

/// Duality bijection: reverses a path and transports it through `w₀`,
/// giving a path from `w₀·end` to `w₀·start` that is increasing for the
/// reversed order. Preserves weight and length.
pub fn path_dual(rs: &RootSystem, p: &LabelledPath) -> LabelledPath {
    let w0 = rs.longest();
    let start = rs.multiply(&w0, &p.end(rs));
    let edges: Vec<(Root, i64)> = p.edges.iter().rev().copied().collect();
    LabelledPath { start, edges }
}

/// The `−w₀` symmetry: conjugates vertices by `w₀` and replaces each label
/// root `α` by `−w₀α`. Sends a path of weight `ω` to one of weight `−w₀ω`.
pub fn path_minus_w0(rs: &RootSystem, p: &LabelledPath) -> LabelledPath {
    let w0 = rs.longest();
    let start = rs.multiply(&rs.multiply(&w0, &p.start), &w0);
    let edges: Vec<(Root, i64)> = p
        .edges
        .iter()
        .map(|&(root, label)| (rs.act_root(&w0, root).negated(), label))
        .collect();
    LabelledPath { start, edges }
}

/// Transports a reflection order through `−w₀` (the order making
/// `path_minus_w0` increasing).
pub fn order_minus_w0(rs: &RootSystem, order: &ReflectionOrder) -> ReflectionOrder {
    let w0 = rs.longest();
    let roots: Vec<Root> = order
        .roots()
        .iter()
        .map(|&r| rs.act_root(&w0, r).negated())
        .collect();
    crate::reforder::sequence_to_order(rs, &roots).expect("-w0 preserves convexity")
}

/// Key of a Yang-Baxter oracle coefficient:
/// `(vertex, weight, short, long, length)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct YbKey {
    pub vertex: String,
    pub weight: Vec<i64>,
    pub short: usize,
    pub long: usize,
    pub length: usize,
}

/// Truncated composition of the Yang-Baxter operators
/// `R_β(w) = w + Σ_{i ≥ Φ⁺(−w⁻¹β)} κ_β e^{iβ∨} s_β w` for the first `n`
/// roots of `order` (dual-root-system convention), applied to `u⁻¹` and
/// truncated to weights under the window. Coefficients count increasing
/// labelled paths from `u`, refined by end vertex, weight and the
/// short/long census.
pub fn yb_compose_oracle(
    rs: &RootSystem,
    order: &ReflectionOrder,
    n: usize,
    u: &WeylElement,
    window: &[Coweight],
) -> Result<BTreeMap<YbKey, i64>> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    if n > order.len() {
        return Err(Error::IndexOutOfRange {
            index: n,
            max: order.len(),
        });
    }
    let window_set: BTreeSet<Vec<i64>> = window.iter().map(|w| w.0.clone()).collect();
    let feasible: Vec<&Coweight> = window.iter().filter(|w| w.is_nonnegative()).collect();
    let mut result = BTreeMap::new();
    if feasible.is_empty() {
        return Ok(result);
    }
    let cap: Vec<i64> = (0..rs.rank())
        .map(|j| feasible.iter().map(|w| w.0[j]).max().unwrap())
        .collect();

    // group-algebra terms: (element w, weight exponent, short count, long
    // count) → coefficient, starting from u⁻¹
    type Term = (WeylElement, Vec<i64>, usize, usize);
    let mut terms: HashMap<Term, i64> = HashMap::new();
    terms.insert(
        (rs.inverse(u), vec![0; rs.rank()], 0, 0),
        1,
    );
    for &beta in &order.roots()[..n] {
        let coroot = rs.coroot_of(beta);
        let s_beta = rs.reflection(beta);
        let long = rs.is_long(beta);
        let mut next: HashMap<Term, i64> = HashMap::new();
        for ((w, weight, short_c, long_c), coeff) in &terms {
            // identity part
            *next
                .entry((w.clone(), weight.clone(), *short_c, *long_c))
                .or_insert(0) += coeff;
            // moving part: κ_β e^{iβ∨} s_β w for admissible exponents i
            let w_inv_beta = rs.act_root(&rs.inverse(w), beta);
            let min_i = positivity(w_inv_beta.negated());
            let mut max_i = i64::MAX;
            for j in 0..rs.rank() {
                if coroot.0[j] > 0 {
                    max_i = max_i.min((cap[j] - weight[j]) / coroot.0[j]);
                }
            }
            if max_i < min_i {
                continue;
            }
            let moved = rs.multiply(&s_beta, w);
            for i in min_i..=max_i {
                let mut new_weight = weight.clone();
                for j in 0..rs.rank() {
                    new_weight[j] += i * coroot.0[j];
                }
                let key = (
                    moved.clone(),
                    new_weight,
                    *short_c + usize::from(!long),
                    *long_c + usize::from(long),
                );
                *next.entry(key).or_insert(0) += coeff;
            }
        }
        terms = next;
    }
    for ((w, weight, short_c, long_c), coeff) in terms {
        if coeff == 0 || !window_set.contains(&weight) {
            continue;
        }
        let vertex = rs.inverse(&w);
        result.insert(
            YbKey {
                vertex: vertex.word_string(),
                weight,
                short: short_c,
                long: long_c,
                length: short_c + long_c,
            },
            coeff,
        );
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reforder::{canonical_order, enumerate_orders, order_from_reduced_word};
    use crate::rootsys::build_root_system;

    fn a2() -> RootSystem {
        build_root_system("A2").unwrap()
    }

    #[test]
    fn edge_counts() {
        let r1 = build_root_system("A1").unwrap();
        assert_eq!(dbg_edges(&r1).len(), 2);
        let rs = a2();
        let edges = dbg_edges(&rs);
        assert_eq!(edges.len(), 18);
        // every edge has a reverse edge with the same label
        for (w, alpha, target) in &edges {
            assert!(edges
                .iter()
                .any(|(a, b, c)| a == target && b == alpha && c == w));
        }
    }

    #[test]
    fn empty_path_only_at_weight_zero_loop() {
        let rs = a2();
        let order = canonical_order(&rs);
        for u in rs.weyl_group() {
            let paths =
                enumerate_increasing_paths(&rs, &order, 3, &u, &u, &Coweight::zero(2)).unwrap();
            assert_eq!(paths, vec![LabelledPath::empty(u.clone())]);
        }
    }

    #[test]
    fn a2_paths_to_w0() {
        let rs = a2();
        let order = order_from_reduced_word(&rs, &[0, 1, 0]).unwrap();
        let e = rs.identity();
        let w0 = rs.longest();

        let zero = enumerate_increasing_paths(&rs, &order, 3, &e, &w0, &Coweight::zero(2)).unwrap();
        assert_eq!(zero.len(), 2);
        let lens: Vec<usize> = zero.iter().map(|p| p.len()).collect();
        assert!(lens.contains(&1) && lens.contains(&3));

        let rho = Coweight(vec![1, 1]);
        let paths = enumerate_increasing_paths(&rs, &order, 3, &e, &w0, &rho).unwrap();
        assert_eq!(paths.len(), 3);
        let mut label_seqs: Vec<Vec<i64>> = paths
            .iter()
            .map(|p| p.edges.iter().map(|&(_, m)| m).collect())
            .collect();
        label_seqs.sort();
        assert_eq!(label_seqs, vec![vec![0, 1, 0], vec![1], vec![1, 0, 1]]);
        for p in &paths {
            assert!(p.is_valid(&rs, &order));
            assert_eq!(p.weight(&rs), rho);
        }
    }

    #[test]
    fn negative_weight_is_empty() {
        let rs = a2();
        let order = canonical_order(&rs);
        let paths = enumerate_increasing_paths(
            &rs,
            &order,
            3,
            &rs.identity(),
            &rs.longest(),
            &Coweight(vec![-1, 0]),
        )
        .unwrap();
        assert!(paths.is_empty());
    }

    #[test]
    fn wts_examples() {
        let rs = a2();
        let e = rs.identity();
        let w0 = rs.longest();

        // wts(u ⇒ u ⇢ u) over {0} contains only the empty path
        let m = wts_multiset(&rs, &e, &e, &e, &[Coweight::zero(2)]).unwrap();
        assert_eq!(m.entries.len(), 1);
        assert_eq!(
            m.entries.get(&MultisetKey {
                weight: vec![0, 0],
                length: 0,
                short: 0,
                long: 0
            }),
            Some(&1)
        );

        let m = wts_multiset(&rs, &e, &w0, &w0, &[Coweight::zero(2)]).unwrap();
        let coarse = m.coarse();
        assert_eq!(coarse.get(&(vec![0, 0], 1)), Some(&1));
        assert_eq!(coarse.get(&(vec![0, 0], 3)), Some(&1));
        assert_eq!(coarse.len(), 2);

        let rho = Coweight(vec![1, 1]);
        let m = wts_multiset(&rs, &e, &w0, &w0, &[rho.clone()]).unwrap();
        let coarse = m.coarse();
        assert_eq!(coarse.get(&(vec![1, 1], 1)), Some(&1));
        assert_eq!(coarse.get(&(vec![1, 1], 3)), Some(&2));
        assert_eq!(m.lengths_at(&rho), vec![1, 3, 3]);
    }

    #[test]
    fn wts_rejects_empty_window() {
        let rs = a2();
        let e = rs.identity();
        assert!(matches!(
            wts_multiset(&rs, &e, &e, &e, &[]),
            Err(Error::EmptyWindow)
        ));
    }

    #[test]
    fn max_length_examples() {
        let rs = a2();
        let e = rs.identity();
        let w0 = rs.longest();
        let s1 = rs.simple_reflection(0);
        assert_eq!(max_increasing_length(&rs, &e, &e, &e), Some(0));
        assert_eq!(max_increasing_length(&rs, &e, &w0, &w0), Some(3));
        assert_eq!(max_increasing_length(&rs, &s1, &e, &s1), None);
    }

    #[test]
    fn path_dual_examples() {
        let rs = a2();
        let w0 = rs.longest();
        let e = rs.identity();

        let p = LabelledPath::empty(e.clone());
        let d = path_dual(&rs, &p);
        assert_eq!(d, LabelledPath::empty(w0.clone()));

        // single edge 1 → w₀ maps to the single edge e → w₀ again
        let p = LabelledPath {
            start: e.clone(),
            edges: vec![(Root(3), 1)],
        };
        let d = path_dual(&rs, &p);
        assert_eq!(d.start, e);
        assert_eq!(d.end(&rs), w0);
        assert_eq!(d.edges, vec![(Root(3), 1)]);

        // involution under double reversal, weight and length preserved
        let order = order_from_reduced_word(&rs, &[0, 1, 0]).unwrap();
        let rho = Coweight(vec![1, 1]);
        for p in enumerate_increasing_paths(&rs, &order, 3, &e, &w0, &rho).unwrap() {
            let d = path_dual(&rs, &p);
            assert!(d.is_valid(&rs, &order.reversed(&rs)));
            assert_eq!(d.weight(&rs), p.weight(&rs));
            assert_eq!(d.len(), p.len());
            assert_eq!(path_dual(&rs, &d), p);
        }
    }

    #[test]
    fn path_minus_w0_examples() {
        let rs = a2();
        let e = rs.identity();
        // edge 1 →^{(α₁,0)} s₁ maps to 1 →^{(α₂,0)} s₂
        let p = LabelledPath {
            start: e.clone(),
            edges: vec![(Root(1), 0)],
        };
        let q = path_minus_w0(&rs, &p);
        assert_eq!(q.start, e);
        assert_eq!(q.edges, vec![(Root(2), 0)]);
        assert_eq!(q.end(&rs), rs.simple_reflection(1));

        // weight transport ω ↦ −w₀ω
        let order = order_from_reduced_word(&rs, &[0, 1, 0]).unwrap();
        let mu = Coweight(vec![1, 0]);
        let s1 = rs.simple_reflection(0);
        for p in enumerate_increasing_paths(&rs, &order, 3, &e, &s1, &mu).unwrap() {
            let q = path_minus_w0(&rs, &p);
            let expected = rs
                .act_coweight(&rs.longest(), &p.weight(&rs))
                .unwrap()
                .neg();
            assert_eq!(q.weight(&rs), expected);
            assert_eq!(q.len(), p.len());
            assert!(q.is_valid(&rs, &order_minus_w0(&rs, &order)));
        }
    }

    #[test]
    fn symmetries_are_census_bijections() {
        // transporting every enumerated path lands bijectively in the
        // target family
        let rs = a2();
        let w0 = rs.longest();
        for order in enumerate_orders(&rs).unwrap() {
            for u in rs.weyl_group() {
                for v in rs.weyl_group() {
                    let target = Coweight(vec![1, 1]);
                    let paths =
                        enumerate_increasing_paths(&rs, &order, 3, &u, &v, &target).unwrap();
                    let dual_order = order.reversed(&rs);
                    let dual_family = enumerate_increasing_paths(
                        &rs,
                        &dual_order,
                        3,
                        &rs.multiply(&w0, &v),
                        &rs.multiply(&w0, &u),
                        &target,
                    )
                    .unwrap();
                    let mut mapped: Vec<LabelledPath> =
                        paths.iter().map(|p| path_dual(&rs, p)).collect();
                    mapped.sort();
                    assert_eq!(mapped, dual_family);
                }
            }
        }
    }

    #[test]
    fn yb_oracle_examples() {
        let rs = a2();
        let order = canonical_order(&rs);
        let e = rs.identity();

        // empty composition: identity coefficient at (u, 0, 0, 0, 0)
        let m = yb_compose_oracle(&rs, &order, 0, &e, &[Coweight::zero(2)]).unwrap();
        assert_eq!(m.len(), 1);
        let key = YbKey {
            vertex: "e".into(),
            weight: vec![0, 0],
            short: 0,
            long: 0,
            length: 0,
        };
        assert_eq!(m.get(&key), Some(&1));

        // A1: single operator on the identity, window {α∨}
        let r1 = build_root_system("A1").unwrap();
        let order1 = canonical_order(&r1);
        let m = yb_compose_oracle(&r1, &order1, 1, &r1.identity(), &[Coweight(vec![1])]).unwrap();
        let key = YbKey {
            vertex: "s1".into(),
            weight: vec![1],
            short: 1,
            long: 0,
            length: 1,
        };
        assert_eq!(m.get(&key), Some(&1));
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn yb_oracle_order_invariance_a2() {
        let rs = a2();
        let orders = enumerate_orders(&rs).unwrap();
        let window: Vec<Coweight> = (0..=2)
            .flat_map(|a| (0..=2).map(move |b| Coweight(vec![a, b])))
            .collect();
        for u in rs.weyl_group() {
            let m1 = yb_compose_oracle(&rs, &orders[0], 3, &u, &window).unwrap();
            let m2 = yb_compose_oracle(&rs, &orders[1], 3, &u, &window).unwrap();
            assert_eq!(m1, m2);
        }
    }

    #[test]
    fn yb_oracle_matches_direct_enumeration() {
        let rs = a2();
        let order = canonical_order(&rs);
        let window: Vec<Coweight> = (0..=2)
            .flat_map(|a| (0..=2).map(move |b| Coweight(vec![a, b])))
            .collect();
        for u in rs.weyl_group() {
            for n in 0..=3 {
                let m = yb_compose_oracle(&rs, &order, n, &u, &window).unwrap();
                for v in rs.weyl_group() {
                    for omega in &window {
                        let paths =
                            enumerate_increasing_paths(&rs, &order, n, &u, &v, omega).unwrap();
                        let mut by_key: BTreeMap<YbKey, i64> = BTreeMap::new();
                        for p in &paths {
                            let (s, l) = p.short_long(&rs);
                            *by_key
                                .entry(YbKey {
                                    vertex: v.word_string(),
                                    weight: omega.0.clone(),
                                    short: s,
                                    long: l,
                                    length: p.len(),
                                })
                                .or_insert(0) += 1;
                        }
                        for (key, count) in by_key {
                            assert_eq!(m.get(&key), Some(&count));
                        }
                    }
                }
            }
        }
    }
}
