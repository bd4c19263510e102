//! Sparse bigraded polynomial algebras over GF(16).
//!
//! Every generator carries a bidegree `(p, q)`, a torus weight `i` (T acts on
//! it by ζⁱ) and a Frobenius successor. Elements are sparse maps from
//! monomials to scalars.

mod element;
mod monomial;
mod parse;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use element::{Element, Substitution, Weight};
pub use monomial::Monomial;
pub use parse::SymbolTable;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Bidegree {
    pub p: i32,
    pub q: i32,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { p: 0, q: 0 };

    pub const fn new(p: i32, q: i32) -> Self {
        Bidegree { p, q }
    }

    pub fn is_first_quadrant(self) -> bool {
        self.p >= 0 && self.q >= 0
    }

    pub fn total(self) -> i32 {
        self.p + self.q
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.p + o.p, self.q + o.q)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.p - o.p, self.q - o.q)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree::new(-self.p, -self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub bidegree: Bidegree,
    /// Exponent of ζ in the torus eigenvalue, in `0..15`.
    pub weight: u8,
    /// Index of F(self) in the table.
    pub frobenius: usize,
}

/// Specification of one generator for [`GeneratorTable::new`].
#[derive(Clone, Debug)]
pub struct GeneratorSpec<'a> {
    pub name: &'a str,
    pub bidegree: Bidegree,
    pub weight: i64,
    pub frobenius: &'a str,
}

impl<'a> GeneratorSpec<'a> {
    pub fn new(name: &'a str, p: i32, q: i32, weight: i64, frobenius: &'a str) -> Self {
        GeneratorSpec {
            name,
            bidegree: Bidegree::new(p, q),
            weight,
            frobenius,
        }
    }
}

#[derive(Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorTable {
    generators: Vec<Generator>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

/// Weight implied by a name such as `a4`, `b13` or `u5_4` (the latter being
/// the promoted power u₅⁴): subscript times power, mod 15.
pub fn weight_from_name(name: &str) -> Option<u8> {
    let body = name.get(1..)?;
    let (sub, pow) = match body.split_once('_') {
        Some((s, p)) => (s, p.parse::<i64>().ok()?),
        None => (body, 1),
    };
    let sub: i64 = sub.parse().ok()?;
    Some((sub * pow).rem_euclid(15) as u8)
}

impl GeneratorTable {
    /// Builds and validates a table: the Frobenius successor map must be a
    /// bijection with orbits of length dividing 4, preserve bidegree, and
    /// double weights; subscripts in names must match weights.
    pub fn new(specs: &[GeneratorSpec<'_>]) -> Result<Arc<Self>> {
        if specs.len() > monomial::MAX_GENERATORS {
            return Err(Error::Domain(format!(
                "at most {} generators supported",
                monomial::MAX_GENERATORS
            )));
        }
        let mut index = HashMap::new();
        for (i, s) in specs.iter().enumerate() {
            if index.insert(s.name.to_string(), i).is_some() {
                return Err(Error::Domain(format!("duplicate generator {}", s.name)));
            }
            if !s.bidegree.is_first_quadrant() || s.bidegree == Bidegree::ZERO {
                return Err(Error::Domain(format!(
                    "generator {} has bidegree {}",
                    s.name, s.bidegree
                )));
            }
        }
        let mut generators = Vec::with_capacity(specs.len());
        for s in specs {
            let frobenius = *index.get(s.frobenius).ok_or_else(|| {
                Error::Domain(format!("unknown Frobenius image {} of {}", s.frobenius, s.name))
            })?;
            generators.push(Generator {
                name: s.name.to_string(),
                bidegree: s.bidegree,
                weight: s.weight.rem_euclid(15) as u8,
                frobenius,
            });
        }
        let table = GeneratorTable { generators, index };
        table.validate()?;
        Ok(Arc::new(table))
    }

    fn validate(&self) -> Result<()> {
        let n = self.generators.len();
        let mut hit = vec![false; n];
        for g in &self.generators {
            if hit[g.frobenius] {
                return Err(Error::Domain("Frobenius successor map is not a bijection".into()));
            }
            hit[g.frobenius] = true;
        }
        for (i, g) in self.generators.iter().enumerate() {
            let img = &self.generators[g.frobenius];
            if img.bidegree != g.bidegree {
                return Err(Error::Domain(format!("F({}) changes bidegree", g.name)));
            }
            if img.weight as u32 != (2 * g.weight as u32) % 15 {
                return Err(Error::Domain(format!(
                    "weight of F({}) = {} is not twice {}",
                    g.name, img.name, g.weight
                )));
            }
            let mut j = i;
            for _ in 0..4 {
                j = self.generators[j].frobenius;
            }
            if j != i {
                return Err(Error::Domain(format!("F-orbit of {} does not divide 4", g.name)));
            }
            if let Some(w) = weight_from_name(&g.name) {
                if w != g.weight {
                    return Err(Error::Domain(format!(
                        "subscript of {} implies weight {w}, table says {}",
                        g.name, g.weight
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_from_names() {
        assert_eq!(weight_from_name("a4"), Some(4));
        assert_eq!(weight_from_name("b13"), Some(13));
        assert_eq!(weight_from_name("u5_4"), Some(5));
        assert_eq!(weight_from_name("u5_2"), Some(10));
        assert_eq!(weight_from_name("u10_2"), Some(5));
        assert_eq!(weight_from_name("xi"), None);
    }

    #[test]
    fn table_validation() {
        let ok = GeneratorTable::new(&[
            GeneratorSpec::new("u5", 0, 1, 5, "u10"),
            GeneratorSpec::new("u10", 0, 1, 10, "u5"),
        ]);
        assert!(ok.is_ok());
        let bad_weight = GeneratorTable::new(&[
            GeneratorSpec::new("u5", 0, 1, 5, "u10"),
            GeneratorSpec::new("u10", 0, 1, 11, "u5"),
        ]);
        assert!(bad_weight.is_err());
        let not_bijective = GeneratorTable::new(&[
            GeneratorSpec::new("u5", 0, 1, 5, "u10"),
            GeneratorSpec::new("u10", 0, 1, 10, "u10"),
        ]);
        assert!(not_bijective.is_err());
    }
}
