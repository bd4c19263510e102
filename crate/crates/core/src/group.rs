//! The 64-element matrix model of G and its normalizing torus.
//!
//! G is the group of upper unitriangular 3×3 matrices
//!
//! ```text
//! | 1  a  b  |
//! | 0  1  a⁴ |
//! | 0  0  1  |
//! ```
//!
//! over GF(16) with b + b⁴ = a⁵. The torus element is T = diag(ζ⁻¹, ζ⁻³, ζ⁴).

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf16::Scalar16;
use crate::linalg;
use crate::report::Check;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement {
    pub a: Scalar16,
    pub b: Scalar16,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

pub type Matrix3 = [[Scalar16; 3]; 3];

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        a: Scalar16::ZERO,
        b: Scalar16::ZERO,
    };

    pub fn new(a: Scalar16, b: Scalar16) -> Result<Self> {
        let g = GroupElement { a, b };
        if g.is_valid() {
            Ok(g)
        } else {
            Err(Error::NotInGroup {
                a: a.to_string(),
                b: b.to_string(),
            })
        }
    }

    pub fn is_valid(&self) -> bool {
        self.b + self.b.pow(4) == self.a.pow(5)
    }

    pub fn matrix(&self) -> Matrix3 {
        let (o, l) = (Scalar16::ZERO, Scalar16::ONE);
        [[l, self.a, self.b], [o, l, self.a.pow(4)], [o, o, l]]
    }

    /// Reads (a, b) off a matrix of the right shape, if it is one.
    pub fn from_matrix(m: &Matrix3) -> Option<Self> {
        let (o, l) = (Scalar16::ZERO, Scalar16::ONE);
        let shape = m[0][0] == l
            && m[1][1] == l
            && m[2][2] == l
            && m[1][0] == o
            && m[2][0] == o
            && m[2][1] == o
            && m[1][2] == m[0][1].pow(4);
        let g = GroupElement {
            a: m[0][1],
            b: m[0][2],
        };
        (shape && g.is_valid()).then_some(g)
    }

    pub fn is_central(&self) -> bool {
        self.a.is_zero()
    }
}

pub fn mat_mul(x: &Matrix3, y: &Matrix3) -> Matrix3 {
    let mut out = [[Scalar16::ZERO; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = (0..3).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    out
}

/// All of G, ordered lexicographically by the bit patterns of (a, b).
pub fn enumerate_group() -> Vec<GroupElement> {
    let mut out = Vec::with_capacity(64);
    for a in Scalar16::all() {
        for b in Scalar16::all() {
            let g = GroupElement { a, b };
            if g.is_valid() {
                out.push(g);
            }
        }
    }
    out
}

/// The group law (a₁, b₁)(a₂, b₂) = (a₁ + a₂, b₁ + b₂ + a₁a₂⁴).
pub fn compose(g: GroupElement, h: GroupElement) -> Result<GroupElement> {
    for x in [g, h] {
        if !x.is_valid() {
            return Err(Error::NotInGroup {
                a: x.a.to_string(),
                b: x.b.to_string(),
            });
        }
    }
    Ok(GroupElement {
        a: g.a + h.a,
        b: g.b + h.b + g.a * h.a.pow(4),
    })
}

fn compose_unchecked(g: GroupElement, h: GroupElement) -> GroupElement {
    GroupElement {
        a: g.a + h.a,
        b: g.b + h.b + g.a * h.a.pow(4),
    }
}

pub fn inverse(g: GroupElement) -> GroupElement {
    // (a, b)⁻¹ = (a, b + a⁵)
    GroupElement {
        a: g.a,
        b: g.b + g.a.pow(5),
    }
}

/// Smallest n ≥ 1 with gⁿ = 1.
pub fn element_order(g: GroupElement) -> usize {
    let mut x = g;
    let mut n = 1;
    while x != GroupElement::IDENTITY {
        x = compose_unchecked(x, g);
        n += 1;
    }
    n
}

/// Elements commuting with every element of G, by brute force.
pub fn center() -> Vec<GroupElement> {
    let all = enumerate_group();
    all.iter()
        .copied()
        .filter(|&z| {
            all.iter()
                .all(|&g| compose_unchecked(z, g) == compose_unchecked(g, z))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientStructure {
    pub order: usize,
    pub squares_central: bool,
    pub quotient_abelian: bool,
    /// F₂-rank of G/Z(G), as log₂ of its order once it is elementary abelian.
    pub rank: Option<u32>,
}

/// Checks that G/Z(G) is elementary abelian and reports its rank.
pub fn quotient_structure() -> QuotientStructure {
    let all = enumerate_group();
    let z: BTreeSet<GroupElement> = center().into_iter().collect();
    let coset = |g: GroupElement| -> BTreeSet<GroupElement> {
        z.iter().map(|&c| compose_unchecked(g, c)).collect()
    };
    let cosets: BTreeSet<BTreeSet<GroupElement>> = all.iter().map(|&g| coset(g)).collect();
    let squares_central = all
        .iter()
        .all(|&g| z.contains(&compose_unchecked(g, g)));
    let quotient_abelian = all.iter().all(|&g| {
        all.iter().all(|&h| {
            let comm = compose_unchecked(
                compose_unchecked(g, h),
                compose_unchecked(inverse(g), inverse(h)),
            );
            z.contains(&comm)
        })
    });
    let order = cosets.len();
    let rank = (squares_central && quotient_abelian && order.is_power_of_two())
        .then(|| order.trailing_zeros());
    QuotientStructure {
        order,
        squares_central,
        quotient_abelian,
        rank,
    }
}

/// Tᵏ as a diagonal matrix, T = diag(ζ⁻¹, ζ⁻³, ζ⁴).
pub fn torus_matrix(k: i64) -> Matrix3 {
    let mut m = [[Scalar16::ZERO; 3]; 3];
    m[0][0] = Scalar16::zeta_pow(-k);
    m[1][1] = Scalar16::zeta_pow(-3 * k);
    m[2][2] = Scalar16::zeta_pow(4 * k);
    m
}

pub fn torus_determinant() -> Scalar16 {
    let t = torus_matrix(1);
    t[0][0] * t[1][1] * t[2][2]
}

/// Tᵏ g T⁻ᵏ via the closed form (a, b) ↦ (ζ²ᵏa, ζ¹⁰ᵏb).
pub fn torus_conjugate(g: GroupElement, k: i64) -> GroupElement {
    GroupElement {
        a: Scalar16::zeta_pow(2 * k) * g.a,
        b: Scalar16::zeta_pow(10 * k) * g.b,
    }
}

/// Tᵏ g T⁻ᵏ by literal matrix conjugation. `None` if the result leaves G.
pub fn torus_conjugate_matrix(g: GroupElement, k: i64) -> Option<GroupElement> {
    let m = mat_mul(&mat_mul(&torus_matrix(k), &g.matrix()), &torus_matrix(-k));
    GroupElement::from_matrix(&m)
}

/// The F₂-linear map x ↦ c·x on GF(16), as a 4×4 matrix over GF(16) with
/// 0/1 entries (columns are images of the basis 1, ζ, ζ², ζ³).
fn mult_matrix_gf16(c: Scalar16) -> Vec<Vec<Scalar16>> {
    let mut m = vec![vec![Scalar16::ZERO; 4]; 4];
    for j in 0..4 {
        let img = c * Scalar16::from_bits(1 << j);
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = Scalar16::from_bits((img.bits() >> i) & 1);
        }
    }
    m
}

/// Eigenvalues over GF(16) of a square matrix, by testing singularity of
/// M − λI for every λ.
pub fn eigenvalues(m: &[Vec<Scalar16>]) -> BTreeSet<Scalar16> {
    let n = m.len();
    Scalar16::all()
        .filter(|&lambda| {
            let shifted: Vec<Vec<Scalar16>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { m[i][j] + lambda } else { m[i][j] })
                        .collect()
                })
                .collect();
            linalg::rank_of_rows(&shifted) < n
        })
        .collect()
}

/// Eigenvalues of the action induced by T on G/Z(G) ≅ (GF(16), +) and on
/// Z(G) ≅ (F₄, +), both viewed as F₂-spaces. These are eigenvalues of the
/// action on the group quotients themselves, not on their duals.
pub fn torus_eigenvalues() -> (BTreeSet<Scalar16>, BTreeSet<Scalar16>) {
    // On G/Z the coset of (a, ·) maps to that of (ζ²a, ·).
    let quotient = eigenvalues(&mult_matrix_gf16(Scalar16::zeta_pow(2)));

    // Z(G) = {(0, b) : b ∈ F₄}; use the F₂-basis {1, ω} of F₄.
    let c = Scalar16::zeta_pow(10);
    let basis = [Scalar16::ONE, Scalar16::OMEGA];
    let coords = |x: Scalar16| -> [Scalar16; 2] {
        for (i0, i1) in [(0u8, 0u8), (1, 0), (0, 1), (1, 1)] {
            let y = Scalar16::from_bits(i0) * basis[0] + Scalar16::from_bits(i1) * basis[1];
            if y == x {
                return [Scalar16::from_bits(i0), Scalar16::from_bits(i1)];
            }
        }
        unreachable!("{x:?} is not in F4")
    };
    let mut m = vec![vec![Scalar16::ZERO; 2]; 2];
    for (j, &e) in basis.iter().enumerate() {
        let img = coords(c * e);
        for i in 0..2 {
            m[i][j] = img[i];
        }
    }
    (quotient, eigenvalues(&m))
}

/// Exhaustive checks of the group model and the torus action.
pub fn verify_group() -> Vec<Check> {
    let all = enumerate_group();
    let set: BTreeSet<GroupElement> = all.iter().copied().collect();
    let mut out = Vec::new();
    let fibers = Scalar16::all().all(|a| all.iter().filter(|g| g.a == a).count() == 4);
    out.push(Check::verdict(
        "group.order",
        all.len() == 64 && set.contains(&GroupElement::IDENTITY) && fibers,
        format!("|G| = {}, four b for each a", all.len()),
    ));
    let mut closed = true;
    let mut matrix_law = true;
    let mut inverses = true;
    for &g in &all {
        inverses &= compose_unchecked(g, inverse(g)) == GroupElement::IDENTITY;
        for &h in &all {
            let gh = compose_unchecked(g, h);
            closed &= set.contains(&gh);
            matrix_law &= GroupElement::from_matrix(&mat_mul(&g.matrix(), &h.matrix())) == Some(gh);
        }
    }
    out.push(Check::verdict(
        "group.law",
        closed && matrix_law && inverses,
        "closed under the law, which agrees with matrix multiplication; inverses exist",
    ));
    let assoc = all.iter().all(|&x| {
        all.iter().all(|&y| {
            let xy = compose_unchecked(x, y);
            all.iter().all(|&z| {
                compose_unchecked(xy, z) == compose_unchecked(x, compose_unchecked(y, z))
            })
        })
    });
    out.push(Check::verdict("group.associative", assoc, "associative on all 64³ triples"));
    let z = center();
    let z_expected = z.len() == 4
        && z.iter().all(|c| c.a.is_zero() && c.b.pow(4) == c.b)
        && z.iter().all(|&c| compose_unchecked(c, c) == GroupElement::IDENTITY);
    out.push(Check::verdict(
        "group.center",
        z_expected,
        format!("Z(G) = {{(0, b) : b ∈ F₄}} of order {} and exponent 2", z.len()),
    ));
    let q = quotient_structure();
    out.push(Check::verdict(
        "group.quotient",
        q.order == 16 && q.rank == Some(4),
        match q.rank {
            Some(r) => format!("G/Z(G) has order {} and is elementary abelian of rank {r}", q.order),
            None => format!("G/Z(G) has order {} and is not elementary abelian", q.order),
        },
    ));
    let orders_ok = all.iter().all(|&g| {
        let n = element_order(g);
        match (g == GroupElement::IDENTITY, g.is_central()) {
            (true, _) => n == 1,
            (false, true) => n == 2,
            (false, false) => n == 4,
        }
    });
    out.push(Check::verdict("group.orders", orders_ok, "every noncentral element has order 4"));
    let mut torus = torus_determinant() == Scalar16::ONE;
    for k in 0..15 {
        for &g in &all {
            let c = torus_conjugate(g, k);
            torus &= torus_conjugate_matrix(g, k) == Some(c) && set.contains(&c);
            for &h in &all {
                torus &= torus_conjugate(compose_unchecked(g, h), k)
                    == compose_unchecked(c, torus_conjugate(h, k));
            }
        }
    }
    let order15 = (1..15).all(|k| all.iter().any(|&g| torus_conjugate(g, k) != g))
        && all.iter().all(|&g| torus_conjugate(g, 15) == g);
    out.push(Check::verdict(
        "group.torus",
        torus && order15,
        "T has determinant 1, normalizes G by automorphisms, and acts with order 15",
    ));
    let (quot, cent) = torus_eigenvalues();
    let want_q: BTreeSet<Scalar16> = [1, 2, 4, 8].map(Scalar16::zeta_pow).into();
    let want_z: BTreeSet<Scalar16> = [5, 10].map(Scalar16::zeta_pow).into();
    let show = |s: &BTreeSet<Scalar16>| s.iter().map(|x| x.symbolic()).collect::<Vec<_>>().join(", ");
    out.push(Check::verdict(
        "group.eigenvalues",
        quot == want_q && cent == want_z,
        format!("T on G/Z(G): {{{}}}; on Z(G): {{{}}}", show(&quot), show(&cent)),
    ));
    out.push(Check::info(
        "group.eigenvalue-convention",
        "eigenvalues are for the action on G/Z(G) and Z(G); the dual action gives the same sets",
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_fibers() {
        let g = enumerate_group();
        assert_eq!(g.len(), 64);
        assert!(g.contains(&GroupElement::IDENTITY));
        for a in Scalar16::all() {
            assert_eq!(g.iter().filter(|x| x.a == a).count(), 4);
        }
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn law_matches_matrices() {
        let all = enumerate_group();
        for &g in &all {
            assert_eq!(compose(g, GroupElement::IDENTITY).unwrap(), g);
            assert_eq!(
                compose(g, g).unwrap(),
                GroupElement {
                    a: Scalar16::ZERO,
                    b: g.a.pow(5)
                }
            );
            for &h in &all {
                let p = compose(g, h).unwrap();
                assert!(p.is_valid());
                assert_eq!(p.matrix(), mat_mul(&g.matrix(), &h.matrix()));
            }
            assert_eq!(compose(g, inverse(g)).unwrap(), GroupElement::IDENTITY);
        }
    }

    #[test]
    fn rejects_non_members() {
        let bad = GroupElement {
            a: Scalar16::ONE,
            b: Scalar16::ZERO,
        };
        assert!(!bad.is_valid());
        assert!(compose(bad, GroupElement::IDENTITY).is_err());
        assert!(GroupElement::new(Scalar16::ONE, Scalar16::ZERO).is_err());
    }

    #[test]
    fn centre_and_orders() {
        let z = center();
        assert_eq!(z.len(), 4);
        for c in &z {
            assert!(c.a.is_zero());
            assert_eq!(c.b.pow(4), c.b);
            assert!(element_order(*c) <= 2);
        }
        for g in enumerate_group() {
            let n = element_order(g);
            match (g == GroupElement::IDENTITY, g.a.is_zero()) {
                (true, _) => assert_eq!(n, 1),
                (false, true) => assert_eq!(n, 2),
                (false, false) => assert_eq!(n, 4),
            }
        }
    }

    #[test]
    fn quotient() {
        let q = quotient_structure();
        assert_eq!(q.order, 16);
        assert!(q.squares_central && q.quotient_abelian);
        assert_eq!(q.rank, Some(4));
    }

    #[test]
    fn torus() {
        assert_eq!(torus_determinant(), Scalar16::ONE);
        let all = enumerate_group();
        for &g in &all {
            assert_eq!(torus_conjugate(g, 0), g);
            assert_eq!(torus_conjugate(g, 15), g);
            for k in 0..15 {
                let c = torus_conjugate(g, k);
                assert_eq!(Some(c), torus_conjugate_matrix(g, k));
            }
        }
        // automorphism
        for &g in &all {
            for &h in &all {
                let lhs = torus_conjugate(compose(g, h).unwrap(), 1);
                let rhs = compose(torus_conjugate(g, 1), torus_conjugate(h, 1)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn eigenvalue_sets() {
        let (q, z) = torus_eigenvalues();
        let expect_q: BTreeSet<_> = [1, 2, 4, 8].iter().map(|&k| Scalar16::zeta_pow(k)).collect();
        let expect_z: BTreeSet<_> = [5, 10].iter().map(|&k| Scalar16::zeta_pow(k)).collect();
        assert_eq!(q, expect_q);
        assert_eq!(z, expect_z);
        for set in [&q, &z] {
            assert!(set.iter().all(|x| set.contains(&x.frobenius())));
        }
    }
}
