use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{BlockKey, Derivation, PageSpace, Window};
use crate::algebra::{Bidegree, Element};
use crate::error::{Error, Result};
use crate::linalg::{left_kernel, Echelon, Vector};

/// Homology of one weight block at one bidegree.
#[derive(Debug)]
struct HomBlock {
    key: BlockKey,
    /// Dimension of the page block.
    len: usize,
    page_offset: usize,
    h_offset: usize,
    cycles: usize,
    boundary_rank: usize,
    lifts: Vec<Vector>,
    /// Rows `[b | 0]` for boundaries and `[z_k | e_k]` for lifts, pivoting on
    /// the first `len` columns. Reducing `[x | 0]` leaves the class of `x` in
    /// the augmentation.
    classifier: Echelon,
    dd_ok: bool,
}

#[derive(Debug)]
struct HomSlice {
    blocks: Vec<HomBlock>,
    dim: usize,
}

/// Homology of a [`PageSpace`] under a [`Derivation`], with chosen cycle
/// representatives for a basis at every bidegree of a window.
#[derive(Debug)]
pub struct Homology {
    page: Arc<PageSpace>,
    d: Derivation,
    window: Window,
    slices: Vec<HomSlice>,
}

type Outgoing = BTreeMap<BlockKey, Vec<Vector>>;

/// One block-diagonal piece per source block: the rows are the coordinates
/// of `d(basis monomial)` in the matching target block.
fn outgoing(page: &PageSpace, d: &Derivation, bd: Bidegree) -> Result<Outgoing> {
    let Some(slice) = page.slice(bd)? else {
        return Ok(Outgoing::new());
    };
    let target = bd + d.shift();
    let tslice = page.slice(target)?;
    let mut out = Outgoing::new();
    for block in &slice.blocks {
        let tlen = tslice
            .and_then(|t| t.block_index(block.key).map(|i| t.blocks[i].dim()))
            .unwrap_or(0);
        let mut rows = Vec::with_capacity(block.dim());
        for &c in &block.free {
            let img = d.apply_monomial(&block.monomials[c]);
            let mut coords = page.block_coords(&img, target)?;
            let row = coords.remove(&block.key).unwrap_or_else(|| Vector::zeros(tlen));
            if !coords.is_empty() {
                return Err(Error::Domain(format!(
                    "d{} does not preserve the weight block at {bd}",
                    d.page()
                )));
            }
            rows.push(row);
        }
        out.insert(block.key, rows);
    }
    Ok(out)
}

impl Homology {
    /// Computes homology at every bidegree of `window`. The page must cover
    /// both differential neighbours of the window.
    pub fn build(page: &Arc<PageSpace>, d: Derivation, window: Window) -> Result<Arc<Homology>> {
        let r = d.page();
        if !page.window().includes(&window.extend(r, r - 1)) {
            return Err(Error::Domain(format!(
                "page window {:?} too small for d{r} homology on {:?}",
                page.window(),
                window
            )));
        }
        if **d.table() != **page.table() {
            return Err(Error::TableMismatch);
        }
        let s = d.shift();
        let mut needed: Vec<Bidegree> = window.bidegrees().collect();
        needed.extend(
            window
                .bidegrees()
                .map(|bd| bd - s)
                .filter(|bd| bd.is_first_quadrant() && !window.contains(*bd)),
        );
        let out: HashMap<Bidegree, Outgoing> = needed
            .par_iter()
            .map(|&bd| outgoing(page, &d, bd).map(|o| (bd, o)))
            .collect::<Result<_>>()?;
        let empty = Outgoing::new();
        let slices = window
            .bidegrees()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&bd| {
                let slice = page.slice(bd)?.expect("window is first quadrant");
                let outs = &out[&bd];
                let ins = out.get(&(bd - s)).unwrap_or(&empty);
                let mut blocks = Vec::with_capacity(slice.blocks.len());
                let mut h_offset = 0;
                for block in &slice.blocks {
                    let len = block.dim();
                    let rows = &outs[&block.key];
                    let tlen = rows.first().map_or(0, |r| r.len());
                    let cycles = left_kernel(rows, tlen);
                    let incoming: &[Vector] = ins.get(&block.key).map_or(&[], |v| v.as_slice());
                    let dd_ok = incoming
                        .iter()
                        .all(|b| Vector::combination(b, rows, tlen).is_zero());
                    let mut ext = Echelon::from_rows(len, incoming);
                    let boundary_rank = ext.rank();
                    let boundary = ext.rows().to_vec();
                    let lifts: Vec<Vector> =
                        cycles.iter().filter(|z| ext.insert((*z).clone())).cloned().collect();
                    let hdim = lifts.len();
                    let mut classifier = Echelon::augmented(len + hdim, len);
                    for b in &boundary {
                        classifier.insert(b.concat(&Vector::zeros(hdim)));
                    }
                    for (k, z) in lifts.iter().enumerate() {
                        classifier.insert(z.concat(&Vector::unit(hdim, k)));
                    }
                    blocks.push(HomBlock {
                        key: block.key,
                        len,
                        page_offset: block.offset,
                        h_offset,
                        cycles: cycles.len(),
                        boundary_rank,
                        lifts,
                        classifier,
                        dd_ok,
                    });
                    h_offset += hdim;
                }
                Ok(HomSlice {
                    blocks,
                    dim: h_offset,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(Homology {
            page: page.clone(),
            d,
            window,
            slices,
        }))
    }

    pub fn page(&self) -> &Arc<PageSpace> {
        &self.page
    }

    pub fn derivation(&self) -> &Derivation {
        &self.d
    }

    pub fn window(&self) -> Window {
        self.window
    }

    fn slice(&self, bd: Bidegree) -> Result<Option<&HomSlice>> {
        if !bd.is_first_quadrant() {
            return Ok(None);
        }
        if !self.window.contains(bd) {
            return Err(Error::OutsideWindow(bd));
        }
        Ok(Some(&self.slices[self.window.index(bd)]))
    }

    pub fn dim(&self, bd: Bidegree) -> Result<usize> {
        Ok(self.slice(bd)?.map_or(0, |s| s.dim))
    }

    pub fn cycles_dim(&self, bd: Bidegree) -> Result<usize> {
        Ok(self
            .slice(bd)?
            .map_or(0, |s| s.blocks.iter().map(|b| b.cycles).sum()))
    }

    pub fn boundaries_dim(&self, bd: Bidegree) -> Result<usize> {
        Ok(self
            .slice(bd)?
            .map_or(0, |s| s.blocks.iter().map(|b| b.boundary_rank).sum()))
    }

    /// Bidegrees where some boundary failed to be a cycle.
    pub fn dd_violations(&self) -> Vec<Bidegree> {
        self.window
            .bidegrees()
            .filter(|&bd| self.slices[self.window.index(bd)].blocks.iter().any(|b| !b.dd_ok))
            .collect()
    }

    /// Cycle representatives of a homology basis at `bd`.
    pub fn lifts(&self, bd: Bidegree) -> Result<Vec<Element>> {
        let Some(slice) = self.slice(bd)? else {
            return Ok(Vec::new());
        };
        let n = self.page.dim(bd)?;
        let mut out = Vec::with_capacity(slice.dim);
        for b in &slice.blocks {
            for z in &b.lifts {
                let mut v = Vector::zeros(n);
                for (i, c) in z.iter().enumerate() {
                    v.set(b.page_offset + i, c);
                }
                out.push(self.page.element_from_coords(bd, &v)?);
            }
        }
        Ok(out)
    }

    /// Class of a cycle `x` of bidegree `bd` in the lift basis.
    pub fn class_at(&self, x: &Element, bd: Bidegree) -> Result<Vector> {
        let Some(slice) = self.slice(bd)? else {
            return Ok(Vector::zeros(0));
        };
        let mut out = Vector::zeros(slice.dim);
        for (key, v) in self.page.block_coords(x, bd)? {
            let b = slice
                .blocks
                .iter()
                .find(|b| b.key == key)
                .expect("every page block has a homology block");
            let hdim = b.lifts.len();
            let r = b.classifier.reduce(&v.concat(&Vector::zeros(hdim)));
            if r.first_nonzero_below(b.len).is_some() {
                return Err(Error::NotACycle {
                    bidegree: bd,
                    element: x.to_string(),
                });
            }
            for k in 0..hdim {
                out.set(b.h_offset + k, r.get(b.len + k));
            }
        }
        Ok(out)
    }

    /// Class of a nonzero bihomogeneous cycle, with its bidegree.
    pub fn class_of(&self, x: &Element) -> Result<Option<(Bidegree, Vector)>> {
        match x.bidegree()? {
            None => Ok(None),
            Some(bd) => Ok(Some((bd, self.class_at(x, bd)?))),
        }
    }

    /// Whether a cycle is a boundary (modulo relations). Zero is.
    pub fn is_zero_class(&self, x: &Element) -> Result<bool> {
        Ok(self.class_of(x)?.is_none_or(|(_, v)| v.is_zero()))
    }

    pub fn is_cycle(&self, x: &Element) -> Result<bool> {
        let y = self.d.apply(x)?;
        self.page.is_zero(&y)
    }

    pub fn element_of_class(&self, bd: Bidegree, h: &Vector) -> Result<Element> {
        let lifts = self.lifts(bd)?;
        if lifts.len() != h.len() {
            return Err(Error::Domain(format!("class vector of wrong length at {bd}")));
        }
        let mut x = Element::zero(self.page.table());
        for (l, c) in lifts.iter().zip(h.iter()) {
            x = &x + &l.scale(c);
        }
        Ok(x)
    }

    pub fn certificate(&self, bd: Bidegree) -> Result<HomologyCertificate> {
        let target = bd + self.d.shift();
        let basis = self.page.basis_elements(bd)?;
        let differential = basis
            .iter()
            .map(|m| {
                let img = self.d.apply(m)?;
                Ok(hex(&self.page.coords(&img, target)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HomologyCertificate {
            page: self.page.presentation().name().to_string(),
            bidegree: bd,
            target,
            page_basis: basis.iter().map(|b| b.to_string()).collect(),
            differential,
            cycles: self.cycles_dim(bd)?,
            boundaries: self.boundaries_dim(bd)?,
            homology: self.dim(bd)?,
            lifts: self.lifts(bd)?.iter().map(|l| l.to_string()).collect(),
        })
    }
}

fn hex(v: &Vector) -> String {
    v.iter().map(|c| c.to_string()).collect()
}

/// Per-bidegree audit record: the page basis, the outgoing differential as
/// rows of hex digits, and the chosen homology representatives.
#[derive(Clone, Debug, Serialize)]
pub struct HomologyCertificate {
    pub page: String,
    pub bidegree: Bidegree,
    pub target: Bidegree,
    pub page_basis: Vec<String>,
    pub differential: Vec<String>,
    pub cycles: usize,
    pub boundaries: usize,
    pub homology: usize,
    pub lifts: Vec<String>,
}
