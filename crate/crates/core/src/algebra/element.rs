use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use super::{Bidegree, GeneratorTable, Monomial};
use crate::error::{Error, Result};
use crate::gf16::Scalar16;

/// Torus weight of an element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Weight {
    /// The zero element has every weight.
    Any,
    Exactly(u8),
    Mixed,
}

impl Weight {
    pub fn value(self) -> Option<u8> {
        match self {
            Weight::Exactly(w) => Some(w),
            _ => None,
        }
    }
}

/// A sparse polynomial over GF(16). No zero coefficient is ever stored.
#[derive(Clone)]
pub struct Element {
    table: Arc<GeneratorTable>,
    terms: BTreeMap<Monomial, Scalar16>,
}

fn same_table(a: &Arc<GeneratorTable>, b: &Arc<GeneratorTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Element {
    pub fn zero(table: &Arc<GeneratorTable>) -> Self {
        Element {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<GeneratorTable>) -> Self {
        Self::scalar(table, Scalar16::ONE)
    }

    pub fn scalar(table: &Arc<GeneratorTable>, c: Scalar16) -> Self {
        Self::monomial(table, Monomial::ONE, c)
    }

    pub fn monomial(table: &Arc<GeneratorTable>, m: Monomial, c: Scalar16) -> Self {
        let mut x = Self::zero(table);
        if !c.is_zero() {
            x.terms.insert(m, c);
        }
        x
    }

    pub fn generator(table: &Arc<GeneratorTable>, i: usize) -> Self {
        Self::monomial(table, Monomial::generator(i), Scalar16::ONE)
    }

    /// Generator by name.
    pub fn named(table: &Arc<GeneratorTable>, name: &str) -> Result<Self> {
        table
            .index_of(name)
            .map(|i| Self::generator(table, i))
            .ok_or_else(|| Error::Parse(format!("unknown generator {name}")))
    }

    pub fn from_terms(
        table: &Arc<GeneratorTable>,
        terms: impl IntoIterator<Item = (Monomial, Scalar16)>,
    ) -> Self {
        let mut x = Self::zero(table);
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, Scalar16)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar16 {
        self.terms.get(m).copied().unwrap_or(Scalar16::ZERO)
    }

    pub fn leading_term(&self) -> Option<(Monomial, Scalar16)> {
        self.terms.iter().next_back().map(|(m, &c)| (*m, c))
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar16) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert(Scalar16::ZERO);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        if !same_table(&self.table, &other.table) {
            return Err(Error::TableMismatch);
        }
        let mut x = self.clone();
        for (m, c) in other.terms() {
            x.add_term(*m, c);
        }
        Ok(x)
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        if !same_table(&self.table, &other.table) {
            return Err(Error::TableMismatch);
        }
        let mut x = Element::zero(&self.table);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                x.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(x)
    }

    pub fn scale(&self, c: Scalar16) -> Element {
        if c.is_zero() {
            return Element::zero(&self.table);
        }
        Element {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, &a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: Scalar16) -> Element {
        if c.is_zero() {
            return Element::zero(&self.table);
        }
        Element {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(n, &a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Element {
        let mut acc = Element::one(&self.table);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Squares coefficients and permutes generators.
    pub fn frobenius_map(&self) -> Element {
        Element {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.frobenius(&self.table), c.frobenius()))
                .collect(),
        }
    }

    /// Orbit sum `x + F(x) + F²(x) + F³(x)`.
    pub fn norm(&self) -> Element {
        let mut acc = self.clone();
        let mut y = self.clone();
        for _ in 0..3 {
            y = y.frobenius_map();
            acc = &acc + &y;
        }
        acc
    }

    pub fn is_f_stable(&self) -> bool {
        self.frobenius_map() == *self
    }

    pub fn weight_of(&self) -> Weight {
        let mut w = Weight::Any;
        for m in self.terms.keys() {
            let mw = m.weight(&self.table);
            match w {
                Weight::Any => w = Weight::Exactly(mw),
                Weight::Exactly(v) if v != mw => return Weight::Mixed,
                _ => {}
            }
        }
        w
    }

    /// The common bidegree of all terms; `Ok(None)` for zero.
    pub fn bidegree(&self) -> Result<Option<Bidegree>> {
        let mut bd = None;
        for m in self.terms.keys() {
            let b = m.bidegree(&self.table);
            match bd {
                None => bd = Some(b),
                Some(prev) if prev != b => return Err(Error::Inhomogeneous(self.to_string())),
                _ => {}
            }
        }
        Ok(bd)
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.bidegree().is_ok()
    }

    pub fn map_coefficients(&self, f: impl Fn(Scalar16) -> Scalar16) -> Element {
        Element::from_terms(&self.table, self.terms.iter().map(|(m, &c)| (*m, f(c))))
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (m.is_one(), *c == Scalar16::ONE) {
                (true, _) => write!(f, "{}", c.symbolic())?,
                (false, true) => write!(f, "{}", m.render(&self.table))?,
                (false, false) => write!(f, "{}*{}", c.symbolic(), m.render(&self.table))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        self.try_add(o).expect("generator tables differ")
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, o: Element) -> Element {
        &self + &o
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, o: &Element) -> Element {
        self.try_mul(o).expect("generator tables differ")
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, o: Element) -> Element {
        &self * &o
    }
}

/// Algebra homomorphism defined by generator images.
#[derive(Clone, Debug)]
pub struct Substitution {
    source: Arc<GeneratorTable>,
    target: Arc<GeneratorTable>,
    images: Vec<Element>,
}

impl Substitution {
    pub fn new(
        source: &Arc<GeneratorTable>,
        target: &Arc<GeneratorTable>,
        images: Vec<(&str, Element)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Element>> = vec![None; source.len()];
        for (name, img) in images {
            let i = source
                .index_of(name)
                .ok_or_else(|| Error::Domain(format!("unknown generator {name}")))?;
            if !same_table(img.table(), target) {
                return Err(Error::TableMismatch);
            }
            slots[i] = Some(img);
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                s.ok_or_else(|| {
                    Error::Domain(format!("no image for generator {}", source.get(i).name))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Substitution {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn image_of(&self, i: usize) -> &Element {
        &self.images[i]
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if !same_table(x.table(), &self.source) {
            return Err(Error::TableMismatch);
        }
        let mut out = Element::zero(&self.target);
        for (m, c) in x.terms() {
            let mut term = Element::scalar(&self.target, c);
            for (i, e) in m.support() {
                term = &term * &self.images[i].pow(e as u32);
            }
            out = &out + &term;
        }
        Ok(out)
    }
}
