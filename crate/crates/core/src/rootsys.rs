//! Finite root systems and their Weyl groups.
//!
//! Everything is exact integer arithmetic. Roots are stored as integer
//! vectors in the simple-root basis, coroots in the simple-coroot basis,
//! and the pairing `⟨coroot, root⟩` is evaluated through the Cartan matrix.
//! Weyl group elements are canonicalized by their signed permutation of the
//! positive roots, with a cached shortlex-minimal reduced word.

use std::collections::HashMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A root, addressed as a signed 1-based index into the positive-root table.
///
/// `Root(k)` with `k > 0` is the positive root at index `k-1`; `Root(-k)` is
/// its negative. `Root(0)` is invalid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub i32);

impl Root {
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn negated(self) -> Root {
        Root(-self.0)
    }

    /// 0-based index of the underlying positive root.
    pub fn pos_index(self) -> usize {
        (self.0.unsigned_abs() as usize) - 1
    }

    pub fn from_pos_index(i: usize) -> Root {
        Root(i as i32 + 1)
    }
}

/// Indicator of positivity, the function written `Φ⁺(·)` in the literature:
/// 1 on positive roots and 0 on negative roots.
pub fn positivity(r: Root) -> i64 {
    if r.is_positive() {
        1
    } else {
        0
    }
}

/// Element of the coroot lattice, as integer coordinates in the
/// simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Coweight {
        Coweight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| k * a).collect())
    }

    /// Coordinatewise `self ≤ other`.
    pub fn leq(&self, other: &Coweight) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn parse(s: &str) -> Result<Coweight> {
        let coords: std::result::Result<Vec<i64>, _> =
            s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        coords.map(Coweight).map_err(|_| Error::Parse {
            what: "coweight",
            token: s.to_string(),
        })
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Weyl group element, canonically represented by its signed permutation of
/// the positive roots, together with the shortlex-minimal reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// perm[i] = image of the i-th positive root, as a signed 1-based index.
    perm: Vec<i32>,
    /// Shortlex-minimal reduced word, 0-based simple-reflection indices.
    word: Vec<u8>,
}

impl WeylElement {
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Serialized form: space-separated simple reflections, `e` for identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word
                .iter()
                .map(|i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    /// Shortlex order on canonical words; a deterministic total order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.word_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanLabel {
    pub family: char,
    pub rank: usize,
}

impl CartanLabel {
    pub fn parse(s: &str) -> Result<CartanLabel> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::UnknownCartanLabel(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownCartanLabel(s.to_string()))?;
        let ok = match family {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => return Err(Error::UnknownCartanLabel(s.to_string())),
        };
        if !ok {
            return Err(Error::UnknownCartanLabel(s.to_string()));
        }
        if rank > 8 {
            return Err(Error::RankOutOfRange { family, rank });
        }
        Ok(CartanLabel { family, rank })
    }
}

impl fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Cartan matrix `A[i][j] = ⟨α_i∨, α_j⟩` and the diagonal symmetrizers
/// (`d[i] * A[i][j]` is symmetric; `d` is proportional to the squared root
/// lengths, normalized so that short roots have `d = 1`).
fn cartan_data(label: CartanLabel) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = label.rank;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let mut chain = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let d;
    match label.family {
        'A' => {
            for i in 0..n.saturating_sub(1) {
                chain(i, i + 1);
            }
            d = vec![1; n];
        }
        'B' => {
            for i in 0..n - 1 {
                chain(i, i + 1);
            }
            // last simple root short: ⟨α_n∨, α_{n-1}⟩ = -2
            a[n - 1][n - 2] = -2;
            let mut dv = vec![2; n];
            dv[n - 1] = 1;
            d = dv;
        }
        'C' => {
            for i in 0..n - 1 {
                chain(i, i + 1);
            }
            // last simple root long: ⟨α_{n-1}∨, α_n⟩ = -2
            a[n - 2][n - 1] = -2;
            let mut dv = vec![1; n];
            dv[n - 1] = 2;
            d = dv;
        }
        'D' => {
            for i in 0..n - 2 {
                chain(i, i + 1);
            }
            chain(n - 3, n - 1);
            d = vec![1; n];
        }
        'E' => {
            // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to 4.
            chain(0, 2);
            chain(2, 3);
            chain(1, 3);
            for i in 3..n - 1 {
                chain(i, i + 1);
            }
            d = vec![1; n];
        }
        'F' => {
            chain(0, 1);
            chain(2, 3);
            // α₁, α₂ long; α₃, α₄ short
            a[1][2] = -1;
            a[2][1] = -2;
            d = vec![2, 2, 1, 1];
        }
        'G' => {
            // α₁ short, α₂ long
            a[0][1] = -3;
            a[1][0] = -1;
            d = vec![1, 3];
        }
        _ => unreachable!("label validated at parse time"),
    }
    (a, d)
}

#[derive(Debug, Clone)]
struct RootData {
    /// Coordinates in the simple-root basis (all nonnegative).
    root: Vec<i64>,
    /// Coordinates of the coroot in the simple-coroot basis.
    coroot: Vec<i64>,
    /// Symmetrizer value; minimal over the system for short roots.
    d: i64,
    height: i64,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    label: CartanLabel,
    rank: usize,
    /// cartan[i][j] = ⟨α_i∨, α_j⟩
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    positive: Vec<RootData>,
    index: HashMap<Vec<i64>, usize>,
    simply_laced: bool,
    /// Sum of positive roots, in the simple-root basis (= 2ρ).
    two_rho: Vec<i64>,
    /// Sum of positive coroots, in the simple-coroot basis (= 2ρ∨).
    two_rho_check: Coweight,
    simple_reflections: Vec<WeylElement>,
    identity: WeylElement,
}

/// Builds the root system for a Cartan label, generating the roots by
/// closing the simple roots under simple reflections.
pub fn build_root_system(label: &str) -> Result<RootSystem> {
    RootSystem::new(CartanLabel::parse(label)?)
}

impl RootSystem {
    pub fn new(label: CartanLabel) -> Result<RootSystem> {
        let n = label.rank;
        let (cartan, symmetrizers) = cartan_data(label);

        // Close the simple roots under the simple reflections, tracking
        // root coordinates, coroot coordinates and the length marker.
        let mut roots: Vec<RootData> = Vec::new();
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..n {
            let mut root = vec![0i64; n];
            root[i] = 1;
            let mut coroot = vec![0i64; n];
            coroot[i] = 1;
            seen.insert(root.clone(), roots.len());
            roots.push(RootData {
                root,
                coroot,
                d: symmetrizers[i],
                height: 1,
            });
        }
        let mut frontier: Vec<usize> = (0..n).collect();
        while let Some(idx) = frontier.pop() {
            let data = roots[idx].clone();
            for j in 0..n {
                // ⟨α_j∨, γ⟩ uses row j; ⟨γ∨, α_j⟩ uses column j.
                let pair_j_gamma: i64 = (0..n).map(|k| cartan[j][k] * data.root[k]).sum();
                let pair_gamma_j: i64 = (0..n).map(|k| data.coroot[k] * cartan[k][j]).sum();
                let mut root = data.root.clone();
                root[j] -= pair_j_gamma;
                if root.iter().any(|&c| c < 0) {
                    continue; // reflected into the negative roots
                }
                let mut coroot = data.coroot.clone();
                coroot[j] -= pair_gamma_j;
                let height = root.iter().sum();
                match seen.get(&root) {
                    Some(&k) => {
                        debug_assert_eq!(roots[k].coroot, coroot);
                        debug_assert_eq!(roots[k].d, data.d);
                    }
                    None => {
                        seen.insert(root.clone(), roots.len());
                        roots.push(RootData {
                            root,
                            coroot,
                            d: data.d,
                            height,
                        });
                        frontier.push(roots.len() - 1);
                    }
                }
            }
        }

        // Canonical root order: by height, then descending-lexicographic
        // coordinates, which places the simple roots at indices 0..rank in
        // their natural order.
        roots.sort_by(|a, b| a.height.cmp(&b.height).then(b.root.cmp(&a.root)));
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.root.clone(), i))
            .collect();

        let mut two_rho = vec![0i64; n];
        let mut two_rho_check = vec![0i64; n];
        for r in &roots {
            for k in 0..n {
                two_rho[k] += r.root[k];
                two_rho_check[k] += r.coroot[k];
            }
        }
        let d_min = roots.iter().map(|r| r.d).min().unwrap();
        let simply_laced = roots.iter().all(|r| r.d == d_min);
        for (i, r) in roots.iter().take(n).enumerate() {
            debug_assert_eq!(r.height, 1);
            debug_assert_eq!(r.root[i], 1);
        }

        let identity = WeylElement {
            perm: (1..=roots.len() as i32).collect(),
            word: Vec::new(),
        };
        let mut rs = RootSystem {
            label,
            rank: n,
            cartan,
            symmetrizers,
            positive: roots,
            index,
            simply_laced,
            two_rho,
            two_rho_check: Coweight(two_rho_check),
            simple_reflections: Vec::new(),
            identity,
        };
        for i in 0..n {
            let perm = rs.simple_reflection_perm(i);
            rs.simple_reflections.push(WeylElement {
                perm,
                word: vec![i as u8],
            });
        }
        // ⟨α∨, α⟩ = 2 for every root.
        for i in 0..rs.num_positive_roots() {
            let r = Root::from_pos_index(i);
            debug_assert_eq!(rs.pair(&rs.coroot_of(r), &rs.root_coords(r)).unwrap(), 2);
        }
        Ok(rs)
    }

    pub fn label(&self) -> CartanLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.simply_laced
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.positive.len()).map(Root::from_pos_index)
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = Root> + '_ {
        // simple roots have height 1 and sort first
        (0..self.rank).map(Root::from_pos_index)
    }

    /// Root coordinates in the simple-root basis (negated for negative roots).
    pub fn root_coords(&self, r: Root) -> Vec<i64> {
        let base = &self.positive[r.pos_index()].root;
        if r.is_positive() {
            base.clone()
        } else {
            base.iter().map(|c| -c).collect()
        }
    }

    /// Coroot of `r`, as a coweight (negated for negative roots).
    pub fn coroot_of(&self, r: Root) -> Coweight {
        let base = &self.positive[r.pos_index()].coroot;
        if r.is_positive() {
            Coweight(base.clone())
        } else {
            Coweight(base.iter().map(|c| -c).collect())
        }
    }

    pub fn root_from_coords(&self, coords: &[i64]) -> Option<Root> {
        if coords.iter().all(|&c| c >= 0) {
            self.index.get(coords).map(|&i| Root::from_pos_index(i))
        } else {
            let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
            self.index
                .get(&neg)
                .map(|&i| Root::from_pos_index(i).negated())
        }
    }

    pub fn is_long(&self, r: Root) -> bool {
        if self.simply_laced {
            false
        } else {
            let d_min = self.positive.iter().map(|x| x.d).min().unwrap();
            self.positive[r.pos_index()].d > d_min
        }
    }

    pub fn root_height(&self, r: Root) -> i64 {
        let h = self.positive[r.pos_index()].height;
        if r.is_positive() {
            h
        } else {
            -h
        }
    }

    /// The highest root (unique for the irreducible types built here).
    pub fn highest_root(&self) -> Root {
        Root::from_pos_index(self.positive.len() - 1)
    }

    /// `2ρ` as a vector in the simple-root basis.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// `2ρ∨` as a coweight.
    pub fn two_rho_check(&self) -> &Coweight {
        &self.two_rho_check
    }

    /// Pairing `⟨μ, v⟩` of a coweight with a vector in the root lattice.
    pub fn pair(&self, mu: &Coweight, root_vec: &[i64]) -> Result<i64> {
        if mu.rank() != self.rank || root_vec.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: mu.rank().max(root_vec.len()),
            });
        }
        let mut total = 0i64;
        for i in 0..self.rank {
            if mu.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                total += mu.0[i] * self.cartan[i][j] * root_vec[j];
            }
        }
        Ok(total)
    }

    /// Pairing `⟨μ, γ⟩` against a root given as a handle.
    pub fn pair_root(&self, mu: &Coweight, r: Root) -> i64 {
        let base = &self.positive[r.pos_index()].root;
        let mut total = 0i64;
        for i in 0..self.rank {
            if mu.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                total += mu.0[i] * self.cartan[i][j] * base[j];
            }
        }
        if r.is_positive() {
            total
        } else {
            -total
        }
    }

    /// `⟨μ, 2ρ⟩`.
    pub fn pair_two_rho(&self, mu: &Coweight) -> i64 {
        self.pair(mu, &self.two_rho).expect("rank checked")
    }

    fn simple_reflection_perm(&self, i: usize) -> Vec<i32> {
        let mut perm = Vec::with_capacity(self.positive.len());
        for data in &self.positive {
            let pair: i64 = (0..self.rank).map(|k| self.cartan[i][k] * data.root[k]).sum();
            let mut img = data.root.clone();
            img[i] -= pair;
            let r = self
                .root_from_coords(&img)
                .expect("reflection image is a root");
            perm.push(r.0);
        }
        perm
    }

    pub fn identity(&self) -> WeylElement {
        self.identity.clone()
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.simple_reflections[i].clone()
    }

    /// Image of a root under a Weyl element.
    pub fn act_root(&self, w: &WeylElement, r: Root) -> Root {
        let img = w.perm[r.pos_index()];
        if r.is_positive() {
            Root(img)
        } else {
            Root(-img)
        }
    }

    /// Linear action on an arbitrary vector in the root lattice.
    pub fn act_root_vec(&self, w: &WeylElement, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        let mut out = vec![0i64; self.rank];
        for (j, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = self.root_coords(self.act_root(w, Root::from_pos_index(j)));
            for k in 0..self.rank {
                out[k] += c * img[k];
            }
        }
        Ok(out)
    }

    /// Linear action on a coweight: `w(α_j∨) = (w α_j)∨`.
    pub fn act_coweight(&self, w: &WeylElement, mu: &Coweight) -> Result<Coweight> {
        if mu.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: mu.rank(),
            });
        }
        let mut out = vec![0i64; self.rank];
        for (j, &c) in mu.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = self.coroot_of(self.act_root(w, Root::from_pos_index(j)));
            for k in 0..self.rank {
                out[k] += c * img.0[k];
            }
        }
        Ok(Coweight(out))
    }

    fn compose_perms(&self, a: &[i32], b: &[i32]) -> Vec<i32> {
        // (a·b)(γ) = a(b(γ))
        b.iter()
            .map(|&img| {
                let r = a[(img.unsigned_abs() as usize) - 1];
                if img > 0 {
                    r
                } else {
                    -r
                }
            })
            .collect()
    }

    fn inversions(&self, perm: &[i32]) -> usize {
        perm.iter().filter(|&&img| img < 0).count()
    }

    /// Shortlex-minimal reduced word for the element given by `perm`.
    fn shortlex_word(&self, perm: &[i32]) -> Vec<u8> {
        let mut word = Vec::new();
        let mut cur = perm.to_vec();
        loop {
            let len = self.inversions(&cur);
            if len == 0 {
                break;
            }
            // ℓ(s_i w) < ℓ(w) ⟺ w⁻¹(α_i) < 0 ⟺ α_i is an inversion of w⁻¹,
            // i.e. some positive root maps to -α_i under w.
            let mut chosen = None;
            'outer: for i in 0..self.rank {
                let target = -(i as i32 + 1);
                for &img in cur.iter() {
                    if img == target {
                        chosen = Some(i);
                        break 'outer;
                    }
                }
            }
            let i = chosen.expect("non-identity element has a left descent");
            cur = self.compose_perms(&self.simple_reflections[i].perm, &cur);
            word.push(i as u8);
            debug_assert_eq!(self.inversions(&cur), len - 1);
        }
        word
    }

    fn element_from_perm(&self, perm: Vec<i32>) -> WeylElement {
        let word = self.shortlex_word(&perm);
        WeylElement { perm, word }
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.element_from_perm(self.compose_perms(&a.perm, &b.perm))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut perm = vec![0i32; w.perm.len()];
        for (i, &img) in w.perm.iter().enumerate() {
            let idx = (img.unsigned_abs() as usize) - 1;
            perm[idx] = if img > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        self.element_from_perm(perm)
    }

    /// Product of simple reflections given by 0-based indices.
    pub fn from_word(&self, word: &[u8]) -> WeylElement {
        let mut cur = self.identity();
        for &i in word {
            cur = self.multiply(&cur, &self.simple_reflections[i as usize]);
        }
        cur
    }

    /// Parses `"s1 s2 s1"` or `"e"`.
    pub fn parse_weyl(&self, s: &str) -> Result<WeylElement> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(self.identity());
        }
        let mut word = Vec::new();
        for token in s.split_whitespace() {
            let idx: usize = token
                .strip_prefix('s')
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse {
                    what: "Weyl word",
                    token: s.to_string(),
                })?;
            if idx == 0 || idx > self.rank {
                return Err(Error::Parse {
                    what: "Weyl word",
                    token: s.to_string(),
                });
            }
            word.push((idx - 1) as u8);
        }
        Ok(self.from_word(&word))
    }

    /// The reflection `s_γ` for an arbitrary root `γ`.
    pub fn reflection(&self, r: Root) -> WeylElement {
        let coroot = self.coroot_of(r);
        let root = self.root_coords(r);
        let mut perm = Vec::with_capacity(self.positive.len());
        for data in &self.positive {
            let pair = self
                .pair(&coroot, &data.root)
                .expect("same rank by construction");
            let img: Vec<i64> = (0..self.rank)
                .map(|k| data.root[k] - pair * root[k])
                .collect();
            perm.push(self.root_from_coords(&img).expect("reflection of a root").0);
        }
        self.element_from_perm(perm)
    }

    /// Longest element of the parabolic subgroup generated by `J`
    /// (0-based simple indices).
    pub fn longest_element(&self, j_set: &[usize]) -> WeylElement {
        let mut w = self.identity();
        loop {
            // multiply by any generator that lengthens; the maximum in W_J is
            // reached when none does
            let mut progressed = false;
            for &j in j_set {
                let alpha = Root::from_pos_index(j);
                // ℓ(w s_j) > ℓ(w) ⟺ w(α_j) > 0
                if self.act_root(&w, alpha).is_positive() {
                    w = self.multiply(&w, &self.simple_reflections[j]);
                    progressed = true;
                }
            }
            if !progressed {
                return w;
            }
        }
    }

    pub fn longest(&self) -> WeylElement {
        let all: Vec<usize> = (0..self.rank).collect();
        self.longest_element(&all)
    }

    /// Subword criterion for the Bruhat order, via the lifting property.
    pub fn bruhat_leq(&self, w: &WeylElement, v: &WeylElement) -> bool {
        if w.length() > v.length() {
            return false;
        }
        if w.is_identity() {
            return true;
        }
        // first left descent of v
        let i = v.word[0] as usize;
        let s = &self.simple_reflections[i];
        let sv = self.multiply(s, v);
        let sw = self.multiply(s, w);
        if sw.length() < w.length() {
            self.bruhat_leq(&sw, &sv)
        } else {
            self.bruhat_leq(w, &sv)
        }
    }

    pub fn is_dominant(&self, mu: &Coweight) -> bool {
        (0..self.rank).all(|i| self.pair_root(mu, Root::from_pos_index(i)) >= 0)
    }

    /// Dominant representative of the W-orbit of `mu`, with the unique
    /// minimal-length witness `v` such that `v⁻¹ μ` is dominant.
    pub fn dominant_rep(&self, mu: &Coweight) -> (Coweight, WeylElement) {
        let mut lambda = mu.clone();
        let mut v = self.identity();
        loop {
            let mut moved = false;
            for i in 0..self.rank {
                if self.pair_root(&lambda, Root::from_pos_index(i)) < 0 {
                    lambda = self
                        .act_coweight(&self.simple_reflections[i], &lambda)
                        .expect("rank fixed");
                    v = self.multiply(&v, &self.simple_reflections[i]);
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        // μ = v λ; strip the stabilizer part to make v minimal in v·W_{stab(λ)}
        let stab: Vec<usize> = (0..self.rank)
            .filter(|&i| self.pair_root(&lambda, Root::from_pos_index(i)) == 0)
            .collect();
        loop {
            let mut moved = false;
            for &j in &stab {
                // ℓ(v s_j) < ℓ(v) ⟺ v(α_j) < 0
                if !self.act_root(&v, Root::from_pos_index(j)).is_positive() {
                    v = self.multiply(&v, &self.simple_reflections[j]);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        debug_assert_eq!(
            &self
                .act_coweight(&self.inverse(&v), mu)
                .expect("rank fixed"),
            &lambda
        );
        (lambda, v)
    }

    /// Full Weyl group, sorted in shortlex order. Intended for small ranks;
    /// the caller is responsible for guarding the group size.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity.perm.clone(), ());
        let mut frontier = vec![self.identity()];
        while let Some(w) = frontier.pop() {
            for i in 0..self.rank {
                let next = self.multiply(&w, &self.simple_reflections[i]);
                if !seen.contains_key(&next.perm) {
                    seen.insert(next.perm.clone(), ());
                    out.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        out.sort();
        out
    }

    /// Elements of the parabolic subgroup W_J, sorted in shortlex order.
    pub fn parabolic_subgroup(&self, j_set: &[usize]) -> Vec<WeylElement> {
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity.perm.clone(), ());
        let mut frontier = vec![self.identity()];
        while let Some(w) = frontier.pop() {
            for &i in j_set {
                let next = self.multiply(&w, &self.simple_reflections[i]);
                if !seen.contains_key(&next.perm) {
                    seen.insert(next.perm.clone(), ());
                    out.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        out.sort();
        out
    }

    /// Positive roots lying in the span of the simple roots indexed by `J`.
    pub fn positive_span_roots(&self, j_set: &[usize]) -> Vec<Root> {
        let in_j = |k: usize| j_set.contains(&k);
        self.positive_roots()
            .filter(|&r| {
                self.root_coords(r)
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || in_j(k))
            })
            .collect()
    }
}

/// Serialize helper: a root rendered as its coordinate vector.
pub struct RootVec<'a>(pub &'a RootSystem, pub Root);

impl Serialize for RootVec<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coords = self.0.root_coords(self.1);
        let mut seq = serializer.serialize_seq(Some(coords.len()))?;
        for c in coords {
            seq.serialize_element(&c)?;
        }
        seq.end()
    }
}
