//! Extended affine Weyl group: affine roots, affine reflections, the
//! Iwahori-Matsumoto length, length functionals `ℓ(x, γ)`, the sums
//! `ℓ_u(x)`, length-positive sets `LP(x)` and virtual dimension.
//!
//! Elements are written `x = w·t^μ` with `w` in the finite Weyl group and
//! `μ` in the coroot lattice, acting on affine roots by
//! `(w t^μ)(α, n) = (wα, n − ⟨μ, α⟩)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{positivity, Coweight, Root, RootSystem, WeylElement};

/// Affine root `(α, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub root: Root,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(root: Root, level: i64) -> AffineRoot {
        AffineRoot { root, level }
    }

    /// `(α, n)` is positive iff `n ≥ Φ⁺(−α)`.
    pub fn is_positive(self) -> bool {
        self.level >= positivity(self.root.negated())
    }

    pub fn negated(self) -> AffineRoot {
        AffineRoot {
            root: self.root.negated(),
            level: -self.level,
        }
    }
}

/// Element `x = w·t^μ` of the (extended) affine Weyl group over the coroot
/// lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    pub weyl: WeylElement,
    pub translation: Coweight,
}

impl AffineElement {
    pub fn new(weyl: WeylElement, translation: Coweight) -> AffineElement {
        AffineElement { weyl, translation }
    }

    pub fn identity(rs: &RootSystem) -> AffineElement {
        AffineElement {
            weyl: rs.identity(),
            translation: Coweight::zero(rs.rank()),
        }
    }

    pub fn translation(rs: &RootSystem, mu: Coweight) -> AffineElement {
        AffineElement {
            weyl: rs.identity(),
            translation: mu,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.weyl.is_identity() && self.translation.is_zero()
    }

    /// Serialized form `"<weyl word>;<coweight>"`, e.g. `"s1 s2 s1;1,1"`.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<AffineElement> {
        let (word, mu) = s.split_once(';').ok_or_else(|| Error::Parse {
            what: "affine element",
            token: s.to_string(),
        })?;
        Ok(AffineElement {
            weyl: rs.parse_weyl(word)?,
            translation: Coweight::parse(mu)?,
        })
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.weyl.word_string(), self.translation)
    }
}

/// `(w t^μ)(w' t^{μ'}) = (w w') t^{(w')⁻¹ μ + μ'}`.
pub fn affine_multiply(rs: &RootSystem, a: &AffineElement, b: &AffineElement) -> AffineElement {
    let weyl = rs.multiply(&a.weyl, &b.weyl);
    let moved = rs
        .act_coweight(&rs.inverse(&b.weyl), &a.translation)
        .expect("compatible ranks");
    AffineElement {
        weyl,
        translation: moved.add(&b.translation),
    }
}

/// `(w t^μ)⁻¹ = w⁻¹ t^{−wμ}`.
pub fn affine_inverse(rs: &RootSystem, x: &AffineElement) -> AffineElement {
    let winv = rs.inverse(&x.weyl);
    let mu = rs
        .act_coweight(&x.weyl, &x.translation)
        .expect("compatible ranks")
        .neg();
    AffineElement {
        weyl: winv,
        translation: mu,
    }
}

/// `(w t^μ)(α, n) = (wα, n − ⟨μ, α⟩)`.
pub fn affine_act(rs: &RootSystem, x: &AffineElement, a: AffineRoot) -> AffineRoot {
    AffineRoot {
        root: rs.act_root(&x.weyl, a.root),
        level: a.level - rs.pair_root(&x.translation, a.root),
    }
}

/// The affine reflection `r_{(α,n)} = s_α t^{n α∨}`.
pub fn affine_reflection(rs: &RootSystem, a: AffineRoot) -> AffineElement {
    AffineElement {
        weyl: rs.reflection(a.root),
        translation: rs.coroot_of(a.root).scaled(a.level),
    }
}

/// Length functional `ℓ(x, γ) = ⟨μ, γ⟩ + Φ⁺(γ) − Φ⁺(wγ)` for `x = w t^μ`.
pub fn length_functional(rs: &RootSystem, x: &AffineElement, gamma: Root) -> i64 {
    rs.pair_root(&x.translation, gamma) + positivity(gamma)
        - positivity(rs.act_root(&x.weyl, gamma))
}

/// `ℓ_u(x) = Σ_{α>0} ℓ(x⁻¹, uα)`, evaluated both as the sum of length
/// functionals and by the closed form `⟨−u⁻¹wμ, 2ρ⟩ − ℓ(u) + ℓ(w⁻¹u)`;
/// the two are asserted equal.
pub fn ell_u(rs: &RootSystem, x: &AffineElement, u: &WeylElement) -> i64 {
    let xinv = affine_inverse(rs, x);
    let sum: i64 = rs
        .positive_roots()
        .map(|alpha| length_functional(rs, &xinv, rs.act_root(u, alpha)))
        .sum();
    let u_inv = rs.inverse(u);
    let w_inv_u = rs.multiply(&rs.inverse(&x.weyl), u);
    let moved = rs
        .act_coweight(&u_inv, &rs.act_coweight(&x.weyl, &x.translation).expect("rank"))
        .expect("rank");
    let closed =
        -rs.pair_two_rho(&moved) - (u.length() as i64) + (w_inv_u.length() as i64);
    assert_eq!(sum, closed, "length functional sum disagrees with closed form");
    sum
}

/// Iwahori-Matsumoto length `ℓ(x) = Σ_{α>0} |ℓ(x, α)|`.
pub fn affine_length(rs: &RootSystem, x: &AffineElement) -> i64 {
    rs.positive_roots()
        .map(|alpha| length_functional(rs, x, alpha).abs())
        .sum()
}

/// The simple affine roots: `(α_i, 0)` for simple `α_i` and `(−θ, 1)` for
/// the highest root `θ`.
pub fn simple_affine_roots(rs: &RootSystem) -> Vec<AffineRoot> {
    let mut out: Vec<AffineRoot> = rs
        .simple_roots()
        .map(|alpha| AffineRoot::new(alpha, 0))
        .collect();
    out.push(AffineRoot::new(rs.highest_root().negated(), 1));
    out
}

/// Length-positive set `LP(x) = {v ∈ W : ℓ(x, vα) ≥ 0 for all α > 0}`.
pub fn length_positive_set(rs: &RootSystem, x: &AffineElement) -> Vec<WeylElement> {
    let lp: Vec<WeylElement> = rs
        .weyl_group()
        .into_iter()
        .filter(|v| {
            rs.positive_roots()
                .all(|alpha| length_functional(rs, x, rs.act_root(v, alpha)) >= 0)
        })
        .collect();
    assert!(!lp.is_empty(), "LP(x) is always non-empty");
    lp
}

pub fn is_length_positive(rs: &RootSystem, x: &AffineElement, v: &WeylElement) -> bool {
    rs.positive_roots()
        .all(|alpha| length_functional(rs, x, rs.act_root(v, alpha)) >= 0)
}

/// `η(x) = v⁻¹ w v` when `LP(x) = {v}` is a singleton; `None` otherwise
/// (the element is only defined here for shrunken `x`).
pub fn eta_shrunken(rs: &RootSystem, x: &AffineElement) -> Option<WeylElement> {
    let lp = length_positive_set(rs, x);
    if lp.len() != 1 {
        return None;
    }
    let v = &lp[0];
    Some(rs.multiply(&rs.multiply(&rs.inverse(v), &x.weyl), v))
}

/// Virtual dimension `d_x(b) = ½(ℓ(x) + ℓ(η(x)) − ⟨ν(b), 2ρ⟩)` for an
/// integral class with dominant Newton point `nu` (defect 0). Defined only
/// when `x` is shrunken.
pub fn virtual_dimension(rs: &RootSystem, x: &AffineElement, nu: &Coweight) -> Option<i64> {
    let eta = eta_shrunken(rs, x)?;
    let total = affine_length(rs, x) + eta.length() as i64 - rs.pair_two_rho(nu);
    assert_eq!(total % 2, 0, "virtual dimension parity violation");
    Some(total / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn a2() -> RootSystem {
        build_root_system("A2").unwrap()
    }

    fn w0_t_rho(rs: &RootSystem) -> AffineElement {
        AffineElement::new(rs.longest(), Coweight(vec![1, 1]))
    }

    #[test]
    fn act_examples() {
        let rs = a2();
        let id = AffineElement::identity(&rs);
        for root in rs.positive_roots() {
            for level in [-2, 0, 3] {
                let a = AffineRoot::new(root, level);
                assert_eq!(affine_act(&rs, &id, a), a);
            }
        }

        let r1 = build_root_system("A1").unwrap();
        let x = AffineElement::translation(&r1, Coweight(vec![1]));
        assert_eq!(
            affine_act(&r1, &x, AffineRoot::new(Root(1), 0)),
            AffineRoot::new(Root(1), -2)
        );

        let x = w0_t_rho(&rs);
        // w₀ t^{ρ∨} sends (α₁, 0) to (−α₂, −1)
        assert_eq!(
            affine_act(&rs, &x, AffineRoot::new(Root(1), 0)),
            AffineRoot::new(Root(-2), -1)
        );
    }

    #[test]
    fn act_is_group_action() {
        let rs = a2();
        let x = w0_t_rho(&rs);
        let y = AffineElement::new(rs.simple_reflection(0), Coweight(vec![-1, 2]));
        let xy = affine_multiply(&rs, &x, &y);
        for root in [Root(1), Root(-3), Root(2)] {
            for level in [-1, 0, 2] {
                let a = AffineRoot::new(root, level);
                assert_eq!(
                    affine_act(&rs, &xy, a),
                    affine_act(&rs, &x, affine_act(&rs, &y, a))
                );
            }
        }
        let xinv = affine_inverse(&rs, &x);
        assert!(affine_multiply(&rs, &x, &xinv).is_identity());
        assert!(affine_multiply(&rs, &xinv, &x).is_identity());
    }

    #[test]
    fn positivity_partition() {
        let rs = a2();
        // exactly one of a, -a is positive
        for root in rs.positive_roots() {
            for level in -3..=3 {
                let a = AffineRoot::new(root, level);
                assert_ne!(a.is_positive(), a.negated().is_positive());
            }
        }
        assert!(AffineRoot::new(Root(1), 0).is_positive());
        assert!(!AffineRoot::new(Root(-1), 0).is_positive());
        assert!(AffineRoot::new(Root(-1), 1).is_positive());
    }

    #[test]
    fn reflection_examples() {
        let rs = a2();
        for root in rs.positive_roots() {
            let r = affine_reflection(&rs, AffineRoot::new(root, 0));
            assert_eq!(r.weyl, rs.reflection(root));
            assert!(r.translation.is_zero());
        }

        let r1 = build_root_system("A1").unwrap();
        let refl = affine_reflection(&r1, AffineRoot::new(Root(1), 1));
        assert_eq!(refl.weyl, r1.simple_reflection(0));
        assert_eq!(refl.translation, Coweight(vec![1]));

        // r_{(−α₁−α₂, −1)} = s_{α₁+α₂} t^{α₁∨+α₂∨}
        let a = AffineRoot::new(Root(-3), -1);
        let refl = affine_reflection(&rs, a);
        assert_eq!(refl.weyl, rs.reflection(Root(3)));
        assert_eq!(refl.translation, Coweight(vec![1, 1]));

        // r² = 1 and r(a) = −a
        for root in [Root(2), Root(-3)] {
            for level in [-2, 0, 1] {
                let a = AffineRoot::new(root, level);
                let r = affine_reflection(&rs, a);
                assert!(affine_multiply(&rs, &r, &r).is_identity());
                assert_eq!(affine_act(&rs, &r, a), a.negated());
            }
        }
    }

    #[test]
    fn length_functional_examples() {
        let rs = a2();
        let id = AffineElement::identity(&rs);
        for root in rs.positive_roots() {
            assert_eq!(length_functional(&rs, &id, root), 0);
            assert_eq!(length_functional(&rs, &id, root.negated()), 0);
        }
        let x = w0_t_rho(&rs);
        assert_eq!(length_functional(&rs, &x, Root(1)), 2);
        assert_eq!(length_functional(&rs, &x, Root(-1)), -2);
        // antisymmetry across all roots and sampled elements
        for x in [
            x,
            AffineElement::new(rs.simple_reflection(1), Coweight(vec![4, -2])),
        ] {
            for root in rs.positive_roots() {
                assert_eq!(
                    length_functional(&rs, &x, root.negated()),
                    -length_functional(&rs, &x, root)
                );
            }
        }
    }

    #[test]
    fn ell_u_examples() {
        let rs = a2();
        let id = AffineElement::identity(&rs);
        for u in rs.weyl_group() {
            assert_eq!(ell_u(&rs, &id, &u), 0);
        }
        let x = w0_t_rho(&rs);
        assert_eq!(ell_u(&rs, &x, &rs.longest()), -7);
        let t_rho = AffineElement::translation(&rs, Coweight(vec![1, 1]));
        assert_eq!(ell_u(&rs, &t_rho, &rs.identity()), -4);
    }

    #[test]
    fn affine_length_examples() {
        let rs = a2();
        assert_eq!(affine_length(&rs, &AffineElement::identity(&rs)), 0);
        let r1 = build_root_system("A1").unwrap();
        assert_eq!(
            affine_length(&r1, &AffineElement::translation(&r1, Coweight(vec![1]))),
            2
        );
        assert_eq!(affine_length(&rs, &w0_t_rho(&rs)), 7);
        let big = AffineElement::new(rs.longest(), Coweight(vec![10, 10]));
        assert_eq!(affine_length(&rs, &big), 43);
    }

    #[test]
    fn length_sign_flip_invariance() {
        let rs = a2();
        let samples = [
            w0_t_rho(&rs),
            AffineElement::new(rs.simple_reflection(0), Coweight(vec![-2, 1])),
            AffineElement::translation(&rs, Coweight(vec![0, -3])),
        ];
        for x in &samples {
            let base = affine_length(&rs, x);
            for v in rs.weyl_group() {
                let total: i64 = rs
                    .positive_roots()
                    .map(|alpha| length_functional(&rs, x, rs.act_root(&v, alpha)).abs())
                    .sum();
                assert_eq!(total, base);
            }
        }
    }

    #[test]
    fn lp_examples() {
        let rs = a2();
        assert_eq!(
            length_positive_set(&rs, &AffineElement::identity(&rs)).len(),
            6
        );
        let lp = length_positive_set(&rs, &w0_t_rho(&rs));
        assert_eq!(lp, vec![rs.identity()]);

        let r1 = build_root_system("A1").unwrap();
        let s = AffineElement::new(r1.simple_reflection(0), Coweight(vec![0]));
        assert_eq!(length_positive_set(&r1, &s), vec![r1.identity()]);
    }

    #[test]
    fn eta_examples() {
        let rs = a2();
        assert_eq!(eta_shrunken(&rs, &AffineElement::identity(&rs)), None);
        assert_eq!(eta_shrunken(&rs, &w0_t_rho(&rs)), Some(rs.longest()));
        let t_rho = AffineElement::translation(&rs, Coweight(vec![1, 1]));
        assert_eq!(eta_shrunken(&rs, &t_rho), Some(rs.identity()));
    }

    #[test]
    fn virtual_dimension_examples() {
        let rs = a2();
        let x = AffineElement::new(rs.longest(), Coweight(vec![10, 10]));
        assert_eq!(virtual_dimension(&rs, &x, &Coweight(vec![9, 9])), Some(5));
        assert_eq!(
            virtual_dimension(&rs, &w0_t_rho(&rs), &Coweight::zero(2)),
            Some(5)
        );
        assert_eq!(
            virtual_dimension(&rs, &AffineElement::identity(&rs), &Coweight::zero(2)),
            None
        );
    }

    #[test]
    fn parse_display_roundtrip() {
        let rs = a2();
        let x = AffineElement::parse(&rs, "s1 s2 s1;1,1").unwrap();
        assert_eq!(x, w0_t_rho(&rs));
        assert_eq!(x.to_string(), "s1 s2 s1;1,1");
        assert_eq!(
            AffineElement::parse(&rs, "e;0,0").unwrap(),
            AffineElement::identity(&rs)
        );
        assert!(AffineElement::parse(&rs, "s1 s2").is_err());
    }
}
