use std::cmp::Ordering;

use super::{Bidegree, GeneratorTable};

pub(crate) const MAX_GENERATORS: usize = 12;

/// Exponent vector over a [`GeneratorTable`]. Ordered degree-lexicographically
/// with earlier generators heavier.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u8; MAX_GENERATORS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_GENERATORS],
    };

    pub fn generator(i: usize) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_GENERATORS);
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn set_exponent(&mut self, i: usize, e: u8) {
        self.exps[i] = e;
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// `(generator index, exponent)` for each generator that occurs.
    pub fn support(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        m
    }

    pub fn pow(&self, k: u8) -> Monomial {
        let mut m = *self;
        for a in m.exps.iter_mut() {
            *a = a.checked_mul(k).expect("exponent overflow");
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for (a, b) in m.exps.iter_mut().zip(self.exps.iter()) {
            *a -= b;
        }
        Some(m)
    }

    pub fn bidegree(&self, table: &GeneratorTable) -> Bidegree {
        self.support().fold(Bidegree::ZERO, |acc, (i, e)| {
            let d = table.get(i).bidegree;
            acc + Bidegree::new(d.p * e as i32, d.q * e as i32)
        })
    }

    pub fn weight(&self, table: &GeneratorTable) -> u8 {
        let w: u32 = self
            .support()
            .map(|(i, e)| table.get(i).weight as u32 * e as u32)
            .sum();
        (w % 15) as u8
    }

    /// Image under the Frobenius permutation of generators.
    pub fn frobenius(&self, table: &GeneratorTable) -> Monomial {
        let mut m = Monomial::ONE;
        for (i, e) in self.support() {
            m.exps[table.get(i).frobenius] = e;
        }
        m
    }

    pub fn render(&self, table: &GeneratorTable) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.support()
            .map(|(i, e)| {
                let name = &table.get(i).name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self
            .exps
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |i| i + 1);
        write!(f, "M{:?}", &self.exps[..n])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_multiplicative() {
        let a = Monomial::from_exponents(&[2, 0, 1]);
        let b = Monomial::from_exponents(&[1, 2, 0]);
        let c = Monomial::from_exponents(&[0, 1, 3]);
        assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
        assert!(Monomial::ONE < c);
    }

    #[test]
    fn division() {
        let a = Monomial::from_exponents(&[2, 1]);
        let b = Monomial::from_exponents(&[1, 1]);
        assert_eq!(b.quotient_of(&a), Some(Monomial::generator(0)));
        assert_eq!(a.quotient_of(&b), None);
    }
}
