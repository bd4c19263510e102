//! Per-bidegree linear algebra for finitely presented bigraded algebras.
//!
//! A [`PageSpace`] fixes, for every bidegree of a window, a basis of the
//! quotient of the polynomial algebra by the relation ideal. Monomials
//! divisible by a monomial relation are discarded up front; the remaining
//! relations are multiplied out and row reduced, one torus-weight block at a
//! time, with columns in descending monomial order so that every pivot is a
//! leading monomial.

mod derivation;
mod homology;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Bidegree, Element, GeneratorTable, Monomial, Weight};
use crate::error::{Error, Result};
use crate::gf16::Scalar16;
use crate::linalg::{Echelon, Vector};

pub use derivation::Derivation;
pub use homology::{Homology, HomologyCertificate};

/// An auxiliary ℤ⁴-grading, one vector per generator.
pub type Multigrading = Vec<[u8; 4]>;

/// Linear-algebra blocks are indexed by torus weight and, when a presentation
/// carries one, a finer multigrading.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct BlockKey {
    pub weight: u8,
    pub grade: [u8; 4],
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Window {
    pub pmax: i32,
    pub qmax: i32,
}

impl Window {
    pub const fn new(pmax: i32, qmax: i32) -> Self {
        Window { pmax, qmax }
    }

    pub fn contains(&self, bd: Bidegree) -> bool {
        bd.is_first_quadrant() && bd.p <= self.pmax && bd.q <= self.qmax
    }

    pub fn extend(&self, dp: i32, dq: i32) -> Window {
        Window::new(self.pmax + dp, self.qmax + dq)
    }

    pub fn includes(&self, other: &Window) -> bool {
        other.pmax <= self.pmax && other.qmax <= self.qmax
    }

    /// Bidegrees in `p`-major order.
    pub fn bidegrees(&self) -> impl Iterator<Item = Bidegree> + '_ {
        let qmax = self.qmax;
        (0..=self.pmax).flat_map(move |p| (0..=qmax).map(move |q| Bidegree::new(p, q)))
    }

    fn index(&self, bd: Bidegree) -> usize {
        (bd.p * (self.qmax + 1) + bd.q) as usize
    }
}

/// A generator table with homogeneous relations.
#[derive(Debug)]
pub struct Presentation {
    name: String,
    table: Arc<GeneratorTable>,
    relations: Vec<Element>,
    monomial_relations: Vec<Monomial>,
    polynomial_relations: Vec<(Element, Bidegree)>,
    grading: Option<Multigrading>,
}

impl Presentation {
    /// Every relation must be nonzero, bihomogeneous and weight-homogeneous,
    /// and homogeneous for the multigrading if one is given.
    pub fn new(
        name: &str,
        table: &Arc<GeneratorTable>,
        relations: Vec<Element>,
        grading: Option<Multigrading>,
    ) -> Result<Arc<Self>> {
        if let Some(g) = &grading {
            if g.len() != table.len() {
                return Err(Error::Domain("multigrading has the wrong length".into()));
            }
        }
        let mut monomial_relations = Vec::new();
        let mut polynomial_relations = Vec::new();
        for r in &relations {
            if **r.table() != **table {
                return Err(Error::TableMismatch);
            }
            let bd = r
                .bidegree()?
                .ok_or_else(|| Error::Domain("zero relation".into()))?;
            if matches!(r.weight_of(), Weight::Mixed) {
                return Err(Error::Domain(format!("relation {r} is not weight-homogeneous")));
            }
            if let Some(g) = &grading {
                let mut keys = r.terms().map(|(m, _)| grade_of(g, m));
                let first = keys.next();
                if keys.any(|k| Some(k) != first) {
                    return Err(Error::Domain(format!("relation {r} is not multihomogeneous")));
                }
            }
            if r.len() == 1 {
                monomial_relations.push(*r.terms().next().expect("one term").0);
            } else {
                polynomial_relations.push((r.clone(), bd));
            }
        }
        Ok(Arc::new(Presentation {
            name: name.to_string(),
            table: table.clone(),
            relations,
            monomial_relations,
            polynomial_relations,
            grading,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn relations(&self) -> &[Element] {
        &self.relations
    }

    pub fn grading(&self) -> Option<&Multigrading> {
        self.grading.as_ref()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.monomial_relations.iter().any(|r| r.divides(m))
    }

    pub fn block_key(&self, m: &Monomial) -> BlockKey {
        BlockKey {
            weight: m.weight(&self.table),
            grade: self
                .grading
                .as_ref()
                .map_or([0; 4], |g| grade_of(g, m)),
        }
    }

    /// Monomials of bidegree `bd` not divisible by any monomial relation,
    /// in descending monomial order.
    pub fn standard_monomials(&self, bd: Bidegree) -> Vec<Monomial> {
        let mut out = Vec::new();
        if bd.is_first_quadrant() {
            let mut cur = Monomial::ONE;
            self.enumerate(0, bd, &mut cur, &mut out);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn enumerate(&self, i: usize, rest: Bidegree, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if rest == Bidegree::ZERO {
            out.push(*cur);
            return;
        }
        if i == self.table.len() {
            return;
        }
        let d = self.table.get(i).bidegree;
        let mut e: u8 = 0;
        let mut left = rest;
        loop {
            cur.set_exponent(i, e);
            if e > 0 && !self.is_standard(cur) {
                break;
            }
            self.enumerate(i + 1, left, cur, out);
            left = left - d;
            if !left.is_first_quadrant() {
                break;
            }
            e += 1;
        }
        cur.set_exponent(i, 0);
    }
}

fn grade_of(g: &Multigrading, m: &Monomial) -> [u8; 4] {
    let mut k = [0u8; 4];
    for (i, e) in m.support() {
        for (kj, gj) in k.iter_mut().zip(g[i].iter()) {
            *kj += gj * e;
        }
    }
    k
}

/// One weight block of one bidegree.
#[derive(Debug)]
pub(crate) struct Block {
    pub(crate) key: BlockKey,
    /// Standard monomials, descending.
    pub(crate) monomials: Vec<Monomial>,
    /// Reduced relation multiples.
    pub(crate) ideal: Echelon,
    /// Non-pivot columns: the quotient basis.
    pub(crate) free: Vec<usize>,
    /// Position of this block's coordinates within the bidegree.
    pub(crate) offset: usize,
}

impl Block {
    pub(crate) fn dim(&self) -> usize {
        self.free.len()
    }
}

#[derive(Debug)]
pub(crate) struct Slice {
    pub(crate) blocks: Vec<Block>,
    pub(crate) dim: usize,
    lookup: HashMap<Monomial, (u32, u32)>,
}

impl Slice {
    fn build(pres: &Presentation, bd: Bidegree, standard: &dyn Fn(Bidegree) -> Vec<Monomial>) -> Slice {
        let monomials = standard(bd);
        let mut grouped: BTreeMap<BlockKey, Vec<Monomial>> = BTreeMap::new();
        for m in monomials {
            grouped.entry(pres.block_key(&m)).or_default().push(m);
        }
        let mut lookup = HashMap::new();
        let mut blocks: Vec<Block> = Vec::with_capacity(grouped.len());
        for (b, (key, monos)) in grouped.into_iter().enumerate() {
            for (c, m) in monos.iter().enumerate() {
                lookup.insert(*m, (b as u32, c as u32));
            }
            blocks.push(Block {
                key,
                ideal: Echelon::new(monos.len()),
                monomials: monos,
                free: Vec::new(),
                offset: 0,
            });
        }
        for (r, rbd) in &pres.polynomial_relations {
            let co = bd - *rbd;
            if !co.is_first_quadrant() {
                continue;
            }
            for m in standard(co) {
                let mut by_block: BTreeMap<u32, Vec<(u32, Scalar16)>> = BTreeMap::new();
                for (rm, c) in r.terms() {
                    if let Some(&(b, col)) = lookup.get(&rm.mul(&m)) {
                        by_block.entry(b).or_default().push((col, c));
                    }
                }
                for (b, entries) in by_block {
                    let block = &mut blocks[b as usize];
                    let mut v = Vector::zeros(block.monomials.len());
                    for (col, c) in entries {
                        v.set(col as usize, v.get(col as usize) + c);
                    }
                    block.ideal.insert(v);
                }
            }
        }
        let mut offset = 0;
        for block in blocks.iter_mut() {
            block.free = block.ideal.free_columns();
            block.offset = offset;
            offset += block.free.len();
        }
        Slice {
            blocks,
            dim: offset,
            lookup,
        }
    }

    pub(crate) fn block_index(&self, key: BlockKey) -> Option<usize> {
        self.blocks.binary_search_by(|b| b.key.cmp(&key)).ok()
    }

    /// Block-local raw vectors (over standard monomials) of `x`.
    fn raw(&self, x: &Element) -> BTreeMap<usize, Vector> {
        let mut out: BTreeMap<usize, Vector> = BTreeMap::new();
        for (m, c) in x.terms() {
            if let Some(&(b, col)) = self.lookup.get(m) {
                let block = &self.blocks[b as usize];
                let v = out
                    .entry(b as usize)
                    .or_insert_with(|| Vector::zeros(block.monomials.len()));
                v.set(col as usize, v.get(col as usize) + c);
            }
        }
        out
    }

    /// Quotient coordinates of `x` within block `b`, given its raw vector.
    fn block_coords(&self, b: usize, raw: &Vector) -> Vector {
        let block = &self.blocks[b];
        block.ideal.reduce(raw).gather(&block.free)
    }
}

/// Quotient bases of a presented algebra over a window of bidegrees.
#[derive(Debug)]
pub struct PageSpace {
    presentation: Arc<Presentation>,
    window: Window,
    slices: Vec<Slice>,
}

impl PageSpace {
    pub fn build(presentation: &Arc<Presentation>, window: Window) -> Arc<PageSpace> {
        let bds: Vec<Bidegree> = window.bidegrees().collect();
        let standard: Vec<Vec<Monomial>> = bds
            .par_iter()
            .map(|&bd| presentation.standard_monomials(bd))
            .collect();
        let lookup = |bd: Bidegree| -> Vec<Monomial> {
            if window.contains(bd) {
                standard[window.index(bd)].clone()
            } else {
                presentation.standard_monomials(bd)
            }
        };
        let slices: Vec<Slice> = bds
            .par_iter()
            .map(|&bd| Slice::build(presentation, bd, &lookup))
            .collect();
        Arc::new(PageSpace {
            presentation: presentation.clone(),
            window,
            slices,
        })
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.presentation.table
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// `Ok(None)` for bidegrees outside the first quadrant (zero spaces).
    pub(crate) fn slice(&self, bd: Bidegree) -> Result<Option<&Slice>> {
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

    /// Number of monomials of bidegree `bd` surviving the monomial relations.
    pub fn standard_count(&self, bd: Bidegree) -> Result<usize> {
        Ok(self.slice(bd)?.map_or(0, |s| s.lookup.len()))
    }

    /// Ordered basis of coset representatives.
    pub fn basis(&self, bd: Bidegree) -> Result<Vec<Monomial>> {
        Ok(self.slice(bd)?.map_or_else(Vec::new, |s| {
            s.blocks
                .iter()
                .flat_map(|b| b.free.iter().map(move |&c| b.monomials[c]))
                .collect()
        }))
    }

    pub fn basis_elements(&self, bd: Bidegree) -> Result<Vec<Element>> {
        let t = self.table();
        Ok(self
            .basis(bd)?
            .into_iter()
            .map(|m| Element::monomial(t, m, Scalar16::ONE))
            .collect())
    }

    fn check_homogeneous(&self, x: &Element, bd: Bidegree) -> Result<()> {
        if **x.table() != **self.table() {
            return Err(Error::TableMismatch);
        }
        match x.bidegree()? {
            Some(b) if b != bd => Err(Error::Inhomogeneous(format!("{x} does not lie in {bd}"))),
            _ => Ok(()),
        }
    }

    /// Coordinates of the coset of `x` in the basis at `bd`.
    pub fn coords(&self, x: &Element, bd: Bidegree) -> Result<Vector> {
        self.check_homogeneous(x, bd)?;
        let Some(slice) = self.slice(bd)? else {
            return Ok(Vector::zeros(0));
        };
        let mut out = Vector::zeros(slice.dim);
        for (b, raw) in slice.raw(x) {
            let c = slice.block_coords(b, &raw);
            let off = slice.blocks[b].offset;
            for (i, s) in c.iter().enumerate() {
                if !s.is_zero() {
                    out.set(off + i, s);
                }
            }
        }
        Ok(out)
    }

    /// Coordinates split by block key; blocks where `x` vanishes are omitted.
    pub(crate) fn block_coords(&self, x: &Element, bd: Bidegree) -> Result<BTreeMap<BlockKey, Vector>> {
        self.check_homogeneous(x, bd)?;
        let Some(slice) = self.slice(bd)? else {
            return Ok(BTreeMap::new());
        };
        let mut out = BTreeMap::new();
        for (b, raw) in slice.raw(x) {
            let c = slice.block_coords(b, &raw);
            if !c.is_zero() {
                out.insert(slice.blocks[b].key, c);
            }
        }
        Ok(out)
    }

    pub fn element_from_coords(&self, bd: Bidegree, v: &Vector) -> Result<Element> {
        let basis = self.basis(bd)?;
        if basis.len() != v.len() {
            return Err(Error::Domain(format!(
                "coordinate vector of length {} at {bd} of dimension {}",
                v.len(),
                basis.len()
            )));
        }
        Ok(Element::from_terms(
            self.table(),
            basis.into_iter().zip(v.iter()),
        ))
    }

    /// Normal form of a bihomogeneous element.
    pub fn reduce(&self, x: &Element) -> Result<Element> {
        match x.bidegree()? {
            None => Ok(x.clone()),
            Some(bd) => self.element_from_coords(bd, &self.coords(x, bd)?),
        }
    }

    /// Whether a bihomogeneous `x` lies in the relation ideal.
    pub fn is_zero(&self, x: &Element) -> Result<bool> {
        match x.bidegree()? {
            None => Ok(true),
            Some(bd) => Ok(self.coords(x, bd)?.is_zero()),
        }
    }

    /// Relations whose Frobenius image is not in the ideal (should be none).
    pub fn frobenius_defects(&self) -> Result<Vec<Element>> {
        let mut bad = Vec::new();
        for r in self.presentation.relations() {
            if !self.is_zero(&r.frobenius_map())? {
                bad.push(r.clone());
            }
        }
        Ok(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GeneratorSpec, SymbolTable};

    fn a_table() -> Arc<GeneratorTable> {
        GeneratorTable::new(&[
            GeneratorSpec::new("a1", 1, 0, 1, "a2"),
            GeneratorSpec::new("a2", 1, 0, 2, "a4"),
            GeneratorSpec::new("a4", 1, 0, 4, "a8"),
            GeneratorSpec::new("a8", 1, 0, 8, "a1"),
        ])
        .unwrap()
    }

    #[test]
    fn free_algebra_dimensions() {
        let t = a_table();
        let pres = Presentation::new("free", &t, vec![], None).unwrap();
        let page = PageSpace::build(&pres, Window::new(4, 0));
        assert_eq!(page.dim(Bidegree::new(2, 0)).unwrap(), 10);
        assert_eq!(page.dim(Bidegree::new(4, 0)).unwrap(), 35);
        assert_eq!(page.dim(Bidegree::new(-1, 0)).unwrap(), 0);
        assert!(page.dim(Bidegree::new(5, 0)).is_err());
    }

    #[test]
    fn polynomial_relation_slices() {
        let t = a_table();
        let s = SymbolTable::new(&t);
        let rels = vec![
            s.parse("a1*a4").unwrap(),
            s.parse("a2*a8").unwrap(),
            s.parse("a8*a1^2 + a2*a4^2").unwrap(),
        ];
        let pres = Presentation::new("r", &t, rels, None).unwrap();
        let page = PageSpace::build(&pres, Window::new(3, 0));
        assert_eq!(page.dim(Bidegree::new(2, 0)).unwrap(), 8);
        let x = s.parse("a8*a1^2").unwrap();
        let y = s.parse("a2*a4^2").unwrap();
        assert_eq!(page.reduce(&x).unwrap(), page.reduce(&y).unwrap());
        assert!(page.is_zero(&(&x + &y)).unwrap());
        assert_eq!(page.frobenius_defects().unwrap().len(), 1);
    }
}
