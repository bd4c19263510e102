//! E∞ = H(E₅, d₅) together with its quotient by the parameters u₅⁸, u₁₀⁸.

use std::sync::Arc;

use rayon::prelude::*;

use super::tables::Page;
use crate::algebra::{Bidegree, Element};
use crate::error::{Error, Result};
use crate::linalg::{solve_combination, Echelon, Vector};
use crate::pages::{Homology, Window};

#[derive(Debug)]
pub struct Einf {
    page: Page,
    hom: Arc<Homology>,
    params: [Element; 2],
    /// Per window bidegree: span of u₅⁸·E∞ + u₁₀⁸·E∞ in class coordinates.
    param_span: Vec<Echelon>,
}

impl Einf {
    pub fn build(page: Page, hom: Arc<Homology>) -> Result<Einf> {
        let params = [page.parse("u5_8")?, page.parse("u10_8")?];
        let window = hom.window();
        let bds: Vec<Bidegree> = window.bidegrees().collect();
        let param_span = bds
            .par_iter()
            .map(|&bd| {
                let mut e = Echelon::new(hom.dim(bd)?);
                let below = bd - Bidegree::new(0, 8);
                for h in hom.lifts(below)? {
                    for u in &params {
                        e.insert(hom.class_at(&(u * &h), bd)?);
                    }
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Einf {
            page,
            hom,
            params,
            param_span,
        })
    }

    pub fn page(&self) -> &Page {
        &self.page
    }

    pub fn homology(&self) -> &Arc<Homology> {
        &self.hom
    }

    pub fn window(&self) -> Window {
        self.hom.window()
    }

    pub fn parse(&self, s: &str) -> Result<Element> {
        self.page.parse(s)
    }

    pub fn parameters(&self) -> &[Element; 2] {
        &self.params
    }

    pub fn dim(&self, bd: Bidegree) -> Result<usize> {
        self.hom.dim(bd)
    }

    fn span(&self, bd: Bidegree) -> Result<Option<&Echelon>> {
        if !bd.is_first_quadrant() {
            return Ok(None);
        }
        let w = self.window();
        if !w.contains(bd) {
            return Err(Error::OutsideWindow(bd));
        }
        Ok(Some(&self.param_span[(bd.p * (w.qmax + 1) + bd.q) as usize]))
    }

    /// dim E∞/(u₅⁸, u₁₀⁸) at `bd`.
    pub fn quotient_dim(&self, bd: Bidegree) -> Result<usize> {
        Ok(self
            .span(bd)?
            .map_or(0, |e| e.ncols() - e.rank()))
    }

    pub fn parameter_rank(&self, bd: Bidegree) -> Result<usize> {
        Ok(self.span(bd)?.map_or(0, |e| e.rank()))
    }

    pub fn lifts(&self, bd: Bidegree) -> Result<Vec<Element>> {
        self.hom.lifts(bd)
    }

    pub fn class_at(&self, x: &Element, bd: Bidegree) -> Result<Vector> {
        self.hom.class_at(x, bd)
    }

    pub fn class_of(&self, x: &Element) -> Result<Option<(Bidegree, Vector)>> {
        self.hom.class_of(x)
    }

    pub fn is_zero_class(&self, x: &Element) -> Result<bool> {
        self.hom.is_zero_class(x)
    }

    /// Whether `x` and `y` (both at `bd`) have the same class.
    pub fn same_class(&self, x: &Element, y: &Element, bd: Bidegree) -> Result<bool> {
        Ok(self.class_at(x, bd)? == self.class_at(y, bd)?)
    }

    /// Quotient coordinates of a class vector: reduce by the parameter span
    /// and keep the free coordinates.
    pub fn quotient_coords(&self, bd: Bidegree, class: &Vector) -> Result<Vector> {
        let Some(e) = self.span(bd)? else {
            return Ok(Vector::zeros(0));
        };
        Ok(e.reduce(class).gather(&e.free_columns()))
    }

    pub fn quotient_class(&self, x: &Element, bd: Bidegree) -> Result<Vector> {
        let c = self.class_at(x, bd)?;
        self.quotient_coords(bd, &c)
    }

    /// Whether `x` lies in the parameter ideal (or is a boundary).
    pub fn is_zero_in_quotient(&self, x: &Element) -> Result<bool> {
        match x.bidegree()? {
            None => Ok(true),
            Some(bd) => Ok(self.quotient_class(x, bd)?.is_zero()),
        }
    }

    /// Lifts of the classes spanning the quotient at `bd`.
    pub fn quotient_basis(&self, bd: Bidegree) -> Result<Vec<Element>> {
        let Some(e) = self.span(bd)? else {
            return Ok(Vec::new());
        };
        let lifts = self.lifts(bd)?;
        Ok(e.free_columns().into_iter().map(|i| lifts[i].clone()).collect())
    }

    /// Rows: classes of `z · h` at `bd + deg z` for the lifts `h` at `bd`.
    pub fn multiplication_rows(&self, z: &Element, bd: Bidegree) -> Result<Vec<Vector>> {
        let shift = z.bidegree()?.unwrap_or(Bidegree::ZERO);
        self.lifts(bd)?
            .iter()
            .map(|h| self.class_at(&(z * h), bd + shift))
            .collect()
    }

    /// A witness `w` of bidegree `bd − deg z` with `z·w ≡ x` in E∞, if any.
    /// The witness is re-multiplied and checked before it is returned.
    pub fn divides(&self, z: &Element, x: &Element, bd: Bidegree) -> Result<Option<Element>> {
        let zbd = z
            .bidegree()?
            .ok_or_else(|| Error::Domain("division by zero".into()))?;
        let target = self.class_at(x, bd)?;
        if target.is_zero() {
            return Ok(Some(Element::zero(x.table())));
        }
        let src = bd - zbd;
        if !src.is_first_quadrant() {
            return Ok(None);
        }
        let rows = self.multiplication_rows(z, src)?;
        let Some(c) = solve_combination(&rows, &target) else {
            return Ok(None);
        };
        let w = self.hom.element_of_class(src, &c)?;
        if self.class_at(&(z * &w), bd)? != target {
            return Err(Error::Domain(format!(
                "division witness {w} for {x} by {z} does not re-multiply"
            )));
        }
        Ok(Some(w))
    }
}
