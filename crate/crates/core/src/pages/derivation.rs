use std::sync::Arc;

use crate::algebra::{Bidegree, Element, GeneratorTable, Monomial, Weight};
use crate::error::{Error, Result};

/// A derivation of bidegree `(r, 1 − r)`, determined by generator images.
/// Generators without an image are sent to zero.
#[derive(Clone, Debug)]
pub struct Derivation {
    table: Arc<GeneratorTable>,
    page: i32,
    images: Vec<Element>,
}

impl Derivation {
    /// Each image must be bihomogeneous of the shifted bidegree and share the
    /// weight of its generator.
    pub fn new(table: &Arc<GeneratorTable>, page: i32, images: Vec<(&str, Element)>) -> Result<Self> {
        let shift = Bidegree::new(page, 1 - page);
        let mut slots = vec![Element::zero(table); table.len()];
        for (name, img) in images {
            let i = table
                .index_of(name)
                .ok_or_else(|| Error::Domain(format!("unknown generator {name}")))?;
            let g = table.get(i);
            if **img.table() != **table {
                return Err(Error::TableMismatch);
            }
            if let Some(bd) = img.bidegree()? {
                if bd != g.bidegree + shift {
                    return Err(Error::Domain(format!(
                        "d{page}({name}) = {img} has bidegree {bd}, expected {}",
                        g.bidegree + shift
                    )));
                }
            }
            match img.weight_of() {
                Weight::Any => {}
                Weight::Exactly(w) if w == g.weight => {}
                _ => {
                    return Err(Error::Domain(format!(
                        "d{page}({name}) = {img} does not have weight {}",
                        g.weight
                    )))
                }
            }
            slots[i] = img;
        }
        Ok(Derivation {
            table: table.clone(),
            page,
            images: slots,
        })
    }

    pub fn page(&self) -> i32 {
        self.page
    }

    pub fn shift(&self) -> Bidegree {
        Bidegree::new(self.page, 1 - self.page)
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn image_of(&self, i: usize) -> &Element {
        &self.images[i]
    }

    /// Leibniz rule in characteristic 2: only odd exponents contribute.
    pub fn apply_monomial(&self, m: &Monomial) -> Element {
        let mut out = Element::zero(&self.table);
        for (i, e) in m.support() {
            if e % 2 == 0 || self.images[i].is_zero() {
                continue;
            }
            let rest = Monomial::generator(i)
                .quotient_of(m)
                .expect("generator divides monomial");
            for (n, c) in self.images[i].terms() {
                out.add_term(n.mul(&rest), c);
            }
        }
        out
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if **x.table() != *self.table {
            return Err(Error::TableMismatch);
        }
        let mut out = Element::zero(&self.table);
        for (m, c) in x.terms() {
            for (n, a) in self.apply_monomial(m).terms() {
                out.add_term(*n, a * c);
            }
        }
        Ok(out)
    }
}
