//! Reflection orders on the positive roots.
//!
//! A total order `β₁ ≺ ⋯ ≺ β_N` on `Φ⁺` is a reflection order when every
//! additive triple `α, α+β, β` appears monotonically. These orders are in
//! bijection with the reduced words of the longest element, via
//! `β_i = s_{α₁}⋯s_{α_{i−1}}(α_i)`.

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReflectionOrder {
    /// The positive roots in order.
    roots: Vec<Root>,
    /// The generating reduced word of the longest element (0-based letters).
    word: Vec<u8>,
}

impl ReflectionOrder {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Position (0-based) of a positive root in the order.
    pub fn position(&self, r: Root) -> usize {
        self.roots.iter().position(|&x| x == r).expect("positive root")
    }

    /// The order read backwards (also a reflection order).
    pub fn reversed(&self, rs: &RootSystem) -> ReflectionOrder {
        let roots: Vec<Root> = self.roots.iter().rev().copied().collect();
        sequence_to_order(rs, &roots).expect("reversal preserves convexity")
    }
}

/// Builds the order generated by a reduced word of the longest element.
pub fn order_from_reduced_word(rs: &RootSystem, word: &[u8]) -> Result<ReflectionOrder> {
    let n = rs.num_positive_roots();
    if word.len() != n {
        return Err(Error::NotLongestElement);
    }
    let mut roots = Vec::with_capacity(n);
    let mut prefix = rs.identity();
    for (i, &letter) in word.iter().enumerate() {
        if letter as usize >= rs.rank() {
            return Err(Error::Parse {
                what: "reduced word letter",
                token: format!("s{}", letter + 1),
            });
        }
        let beta = rs.act_root(&prefix, Root::from_pos_index(letter as usize));
        if !beta.is_positive() {
            // the word stopped being reduced at this letter
            return Err(Error::NotReduced { prefix_len: i + 1 });
        }
        roots.push(beta);
        prefix = rs.multiply(&prefix, &rs.simple_reflection(letter as usize));
    }
    if prefix != rs.longest() {
        return Err(Error::NotLongestElement);
    }
    let order = ReflectionOrder {
        roots,
        word: word.to_vec(),
    };
    debug_assert!(convexity_holds(rs, &order.roots));
    Ok(order)
}

fn convexity_holds(rs: &RootSystem, seq: &[Root]) -> bool {
    find_convexity_violation(rs, seq).is_none()
}

fn find_convexity_violation(rs: &RootSystem, seq: &[Root]) -> Option<(Root, Root, Root)> {
    let pos = |r: Root| seq.iter().position(|&x| x == r).expect("permutation");
    for &a in seq {
        for &b in seq {
            if a >= b {
                continue;
            }
            let sum: Vec<i64> = rs
                .root_coords(a)
                .iter()
                .zip(rs.root_coords(b))
                .map(|(x, y)| x + y)
                .collect();
            if let Some(c) = rs.root_from_coords(&sum) {
                let (pa, pb, pc) = (pos(a), pos(b), pos(c));
                let monotone = (pa < pc && pc < pb) || (pb < pc && pc < pa);
                if !monotone {
                    return Some((a, c, b));
                }
            }
        }
    }
    None
}

/// Checks the convexity criterion on a permutation of `Φ⁺`.
pub fn is_reflection_order(rs: &RootSystem, seq: &[Root]) -> Result<bool> {
    let n = rs.num_positive_roots();
    if seq.len() != n {
        return Err(Error::NotPermutationOfPositiveRoots);
    }
    let mut seen = vec![false; n];
    for &r in seq {
        if !r.is_positive() || seen[r.pos_index()] {
            return Err(Error::NotPermutationOfPositiveRoots);
        }
        seen[r.pos_index()] = true;
    }
    Ok(find_convexity_violation(rs, seq).is_none())
}

/// Reconstructs the order (with its generating word) from a root sequence.
pub fn sequence_to_order(rs: &RootSystem, seq: &[Root]) -> Result<ReflectionOrder> {
    if let Some((a, c, b)) = {
        is_reflection_order(rs, seq)?;
        find_convexity_violation(rs, seq)
    } {
        return Err(Error::ConvexityViolation {
            a: format!("{:?}", rs.root_coords(a)),
            sum: format!("{:?}", rs.root_coords(c)),
            b: format!("{:?}", rs.root_coords(b)),
        });
    }
    // invert β_i = s_{α₁}⋯s_{α_{i−1}}(α_i): peel letters off the front
    let mut word = Vec::with_capacity(seq.len());
    let mut prefix = rs.identity();
    for &beta in seq {
        let alpha = rs.act_root(&rs.inverse(&prefix), beta);
        debug_assert!(alpha.is_positive() && alpha.pos_index() < rs.rank());
        word.push(alpha.pos_index() as u8);
        prefix = rs.multiply(&prefix, &rs.simple_reflection(alpha.pos_index()));
    }
    order_from_reduced_word(rs, &word)
}

/// All reflection orders, one per reduced word of the longest element.
/// Guarded to rank ≤ 4.
pub fn enumerate_orders(rs: &RootSystem) -> Result<Vec<ReflectionOrder>> {
    const GUARD: usize = 4;
    if rs.rank() > GUARD {
        return Err(Error::EnumerationGuard {
            rank: rs.rank(),
            guard: GUARD,
        });
    }
    let mut words = Vec::new();
    let mut current = Vec::with_capacity(rs.num_positive_roots());
    collect_reduced_words(rs, &rs.longest(), &mut current, &mut words);
    let mut orders: Vec<ReflectionOrder> = words
        .into_iter()
        .map(|w| order_from_reduced_word(rs, &w).expect("enumerated word is reduced"))
        .collect();
    orders.sort();
    Ok(orders)
}

fn collect_reduced_words(
    rs: &RootSystem,
    w: &WeylElement,
    current: &mut Vec<u8>,
    out: &mut Vec<Vec<u8>>,
) {
    if w.is_identity() {
        out.push(current.clone());
        return;
    }
    for i in 0..rs.rank() {
        // s_i can start a reduced word of w iff ℓ(s_i w) < ℓ(w)
        let sw = rs.multiply(&rs.simple_reflection(i), w);
        if sw.length() < w.length() {
            current.push(i as u8);
            collect_reduced_words(rs, &sw, current, out);
            current.pop();
        }
    }
}

/// The canonical reflection order: the one generated by the
/// shortlex-minimal reduced word of the longest element.
pub fn canonical_order(rs: &RootSystem) -> ReflectionOrder {
    let w0 = rs.longest();
    order_from_reduced_word(rs, w0.word()).expect("canonical word is reduced")
}

/// Suffix product `π_{≻n} = s_{β_{n+1}} ⋯ s_{β_N}`.
pub fn pi_gt(rs: &RootSystem, order: &ReflectionOrder, n: usize) -> Result<WeylElement> {
    let total = order.len();
    if n > total {
        return Err(Error::IndexOutOfRange {
            index: n,
            max: total,
        });
    }
    let mut w = rs.identity();
    for &beta in &order.roots[n..] {
        w = rs.multiply(&w, &rs.reflection(beta));
    }
    debug_assert_eq!(w.length(), total - n);
    Ok(w)
}

/// A reflection order together with the index `n` such that
/// `π_{≻n} = g`; always `n = #Φ⁺ − ℓ(g)`. The order is obtained by
/// extending the shortlex word of `g·w₀` by the shortlex word of the
/// complementary factor.
pub fn order_with_suffix(rs: &RootSystem, g: &WeylElement) -> (ReflectionOrder, usize) {
    let w0 = rs.longest();
    let n = rs.num_positive_roots() - g.length();
    let gw0 = rs.multiply(g, &w0);
    let rest = rs.multiply(&rs.inverse(&gw0), &w0);
    let mut word = gw0.word().to_vec();
    word.extend_from_slice(rest.word());
    let order = order_from_reduced_word(rs, &word).expect("lengths are additive against w0");
    debug_assert_eq!(&pi_gt(rs, &order, n).expect("n in range"), g);
    (order, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn a2() -> RootSystem {
        build_root_system("A2").unwrap()
    }

    #[test]
    fn order_from_word_examples() {
        let rs = a2();
        let order = order_from_reduced_word(&rs, &[0, 1, 0]).unwrap();
        // s₁, s₂, s₁ generates α₁ ≺ α₁+α₂ ≺ α₂
        assert_eq!(order.roots(), &[Root(1), Root(3), Root(2)]);
        let order2 = order_from_reduced_word(&rs, &[1, 0, 1]).unwrap();
        assert_eq!(order2.roots(), &[Root(2), Root(3), Root(1)]);

        let r1 = build_root_system("A1").unwrap();
        let order1 = order_from_reduced_word(&r1, &[0]).unwrap();
        assert_eq!(order1.roots(), &[Root(1)]);
    }

    #[test]
    fn order_from_word_rejections() {
        let rs = a2();
        assert_eq!(
            order_from_reduced_word(&rs, &[0, 0, 1]),
            Err(Error::NotReduced { prefix_len: 2 })
        );
        assert_eq!(
            order_from_reduced_word(&rs, &[0, 1]),
            Err(Error::NotLongestElement)
        );
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_orders(&a2()).unwrap().len(), 2);
        assert_eq!(
            enumerate_orders(&build_root_system("A1").unwrap())
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_orders(&build_root_system("B2").unwrap())
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_orders(&build_root_system("G2").unwrap())
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_orders(&build_root_system("A3").unwrap())
                .unwrap()
                .len(),
            16
        );
        assert!(matches!(
            enumerate_orders(&build_root_system("A5").unwrap()),
            Err(Error::EnumerationGuard { .. })
        ));
    }

    #[test]
    fn is_order_examples() {
        let rs = a2();
        assert!(is_reflection_order(&rs, &[Root(1), Root(3), Root(2)]).unwrap());
        assert!(!is_reflection_order(&rs, &[Root(1), Root(2), Root(3)]).unwrap());
        let r1 = build_root_system("A1").unwrap();
        assert!(is_reflection_order(&r1, &[Root(1)]).unwrap());
        assert!(matches!(
            is_reflection_order(&rs, &[Root(1), Root(1), Root(2)]),
            Err(Error::NotPermutationOfPositiveRoots)
        ));
        assert!(matches!(
            is_reflection_order(&rs, &[Root(1), Root(2)]),
            Err(Error::NotPermutationOfPositiveRoots)
        ));
    }

    #[test]
    fn convexity_characterizes_enumerated_orders() {
        // every permutation of Φ⁺ passes is_reflection_order iff it is one
        // of the enumerated orders (A2 and B2, exhaustively)
        for label in ["A2", "B2"] {
            let rs = build_root_system(label).unwrap();
            let orders = enumerate_orders(&rs).unwrap();
            let roots: Vec<Root> = rs.positive_roots().collect();
            let mut count = 0;
            permute(&roots, &mut |perm| {
                if is_reflection_order(&rs, perm).unwrap() {
                    count += 1;
                    let order = sequence_to_order(&rs, perm).unwrap();
                    assert!(orders.contains(&order));
                }
            });
            assert_eq!(count, orders.len());
        }
    }

    fn permute<F: FnMut(&[Root])>(items: &[Root], f: &mut F) {
        let mut items = items.to_vec();
        let n = items.len();
        heap_permute(&mut items, n, f);
    }

    fn heap_permute<F: FnMut(&[Root])>(items: &mut Vec<Root>, k: usize, f: &mut F) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            heap_permute(items, k - 1, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }

    #[test]
    fn pi_gt_examples() {
        let rs = a2();
        let order = order_from_reduced_word(&rs, &[0, 1, 0]).unwrap();
        assert!(pi_gt(&rs, &order, 3).unwrap().is_identity());
        assert_eq!(pi_gt(&rs, &order, 0).unwrap(), rs.longest());
        assert_eq!(pi_gt(&rs, &order, 2).unwrap(), rs.simple_reflection(1));
        assert!(pi_gt(&rs, &order, 4).is_err());
        for n in 0..=3 {
            assert_eq!(pi_gt(&rs, &order, n).unwrap().length(), 3 - n);
        }
    }

    #[test]
    fn order_with_suffix_examples() {
        let rs = a2();
        let (_, n) = order_with_suffix(&rs, &rs.identity());
        assert_eq!(n, 3);
        let (_, n) = order_with_suffix(&rs, &rs.longest());
        assert_eq!(n, 0);
        let s2 = rs.simple_reflection(1);
        let (order, n) = order_with_suffix(&rs, &s2);
        assert_eq!(n, 2);
        assert_eq!(order.roots(), &[Root(1), Root(3), Root(2)]);
        assert_eq!(pi_gt(&rs, &order, n).unwrap(), s2);
    }

    #[test]
    fn order_with_suffix_all_elements() {
        for label in ["A2", "B2", "A3"] {
            let rs = build_root_system(label).unwrap();
            for g in rs.weyl_group() {
                let (order, n) = order_with_suffix(&rs, &g);
                assert_eq!(n, rs.num_positive_roots() - g.length());
                assert_eq!(pi_gt(&rs, &order, n).unwrap(), g);
            }
        }
    }

    #[test]
    fn round_trip_all_enumerated_orders() {
        for label in ["A2", "B2", "A3"] {
            let rs = build_root_system(label).unwrap();
            for order in enumerate_orders(&rs).unwrap() {
                let rebuilt = order_from_reduced_word(&rs, order.word()).unwrap();
                assert_eq!(rebuilt, order);
                let from_seq = sequence_to_order(&rs, order.roots()).unwrap();
                assert_eq!(from_seq, order);
                // reversal is again an order
                let rev = order.reversed(&rs);
                assert!(is_reflection_order(&rs, rev.roots()).unwrap());
            }
        }
    }
}
