//! The spectral sequence E₂ ⇒ E₃ ⇒ E₄ = E₅ ⇒ E₆ = E∞, built page by page
//! over nested windows.
//!
//! For an E∞ window `(P, Q)` the E₅ page is built on `(P+5, Q+4)` so that d₅
//! is available on both sides of every window bidegree. E₄ is compared with
//! the homology of E₃ on that same E₅ window, which needs E₃ on
//! `(P+8, Q+6)`. E₃ is compared with the homology of E₂ on `(P, Q)`.

mod checks;
mod einf;
mod families;
pub mod tables;

use std::sync::{Arc, OnceLock};

use crate::error::Result;
use crate::pages::{Homology, PageSpace, Window};

pub use checks::{
    figure_1, last_survivor, verify_corrected_relations, verify_e3, verify_e4,
    verify_e4_equals_e5, verify_einf, FIGURE_1, RELATIONS_3_4, RELATIONS_4_6,
};
pub use einf::Einf;
pub use families::{d3_table, d5_table, einf_basis, e4_basis, BasisFamily, DifferentialRule};
pub use tables::Page;

#[derive(Debug)]
pub struct Pipeline {
    window: Window,
    e2: Page,
    e3: Page,
    e5: Page,
    h2: OnceLock<Arc<Homology>>,
    h3: OnceLock<Arc<Homology>>,
    e5_space: OnceLock<Arc<PageSpace>>,
    einf: OnceLock<Arc<Einf>>,
}

fn cached<T: Clone>(cell: &OnceLock<T>, build: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = build()?;
    let _ = cell.set(v);
    Ok(cell.get().expect("just set"))
}

impl Pipeline {
    /// Sets up the page presentations; pages are computed on first use.
    pub fn new(window: Window) -> Result<Pipeline> {
        Ok(Pipeline {
            window,
            e2: tables::e2()?,
            e3: tables::e3()?,
            e5: tables::e5()?,
            h2: OnceLock::new(),
            h3: OnceLock::new(),
            e5_space: OnceLock::new(),
            einf: OnceLock::new(),
        })
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn e5_window(&self) -> Window {
        self.window.extend(5, 4)
    }

    pub fn e2(&self) -> &Page {
        &self.e2
    }

    pub fn e3(&self) -> &Page {
        &self.e3
    }

    pub fn e5(&self) -> &Page {
        &self.e5
    }

    /// H(E₂, d₂) on the E∞ window.
    pub fn h2(&self) -> Result<&Arc<Homology>> {
        cached(&self.h2, || {
            let space = PageSpace::build(&self.e2.presentation, self.window.extend(2, 1));
            Homology::build(&space, self.e2.differential.clone(), self.window)
        })
    }

    /// H(E₃, d₃) on the E₅ window.
    pub fn h3(&self) -> Result<&Arc<Homology>> {
        cached(&self.h3, || {
            let space = PageSpace::build(&self.e3.presentation, self.window.extend(8, 6));
            Homology::build(&space, self.e3.differential.clone(), self.e5_window())
        })
    }

    /// The E₃ page space underlying [`Pipeline::h3`].
    pub fn e3_space(&self) -> Result<&Arc<PageSpace>> {
        Ok(self.h3()?.page())
    }

    pub fn e5_space(&self) -> Result<&Arc<PageSpace>> {
        cached(&self.e5_space, || {
            Ok(PageSpace::build(&self.e5.presentation, self.e5_window()))
        })
    }

    pub fn einf(&self) -> Result<&Arc<Einf>> {
        cached(&self.einf, || {
            let space = self.e5_space()?;
            let hom = Homology::build(space, self.e5.differential.clone(), self.window)?;
            Ok(Arc::new(Einf::build(self.e5.clone(), hom)?))
        })
    }
}
