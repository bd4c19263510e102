//! Shared fixtures and randomized invariant checks. Each check draws its
//! input from an RNG and returns a description of the first violation.
#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use rand::seq::SliceRandom;
use rand::Rng;

use esscert_core::essential::{essential_scan, h1_enumerate, is_essential_einf, EssentialScan};
use esscert_core::group::{compose, enumerate_group, GroupElement};
use esscert_core::pages::{Derivation, Homology, PageSpace};
use esscert_core::sseq::Einf;
use esscert_core::{Bidegree, Element, Pipeline, Scalar16, Weight, Window};

pub type Outcome = Result<(), String>;

pub fn pipeline() -> &'static Pipeline {
    static PL: OnceLock<Pipeline> = OnceLock::new();
    PL.get_or_init(|| Pipeline::new(Window::new(16, 12)).expect("pipeline"))
}

pub fn einf() -> &'static Arc<Einf> {
    pipeline().einf().expect("E∞ builds")
}

pub fn scan() -> &'static EssentialScan {
    static SCAN: OnceLock<EssentialScan> = OnceLock::new();
    SCAN.get_or_init(|| essential_scan(einf()).expect("scan"))
}

/// The three differentials d₂, d₃, d₅ with their source pages.
pub fn differentials() -> Vec<(&'static str, &'static Arc<Homology>)> {
    let pl = pipeline();
    vec![
        ("d2", pl.h2().expect("E₃")),
        ("d3", pl.h3().expect("E₄")),
        ("d5", einf().homology()),
    ]
}

pub fn scalar(rng: &mut impl Rng) -> Scalar16 {
    Scalar16::all().nth(rng.gen_range(0..16)).unwrap()
}

pub fn nonzero_scalar(rng: &mut impl Rng) -> Scalar16 {
    Scalar16::zeta_pow(rng.gen_range(0..15))
}

/// Bidegrees of the page where `x`, `d x` and `d d x` all lie in its window.
fn sources(space: &PageSpace, d: &Derivation) -> Vec<Bidegree> {
    let w = space.window();
    let s = d.shift();
    w.bidegrees()
        .filter(|&bd| w.contains(bd + s) && w.contains(bd + s + s))
        .filter(|&bd| space.dim(bd).is_ok_and(|n| n > 0))
        .collect()
}

/// A random element of the page at a random bidegree with up to six basis
/// monomials; with `weighted`, all of a single torus weight.
pub fn random_page_element(space: &PageSpace, d: &Derivation, weighted: bool, rng: &mut impl Rng) -> (Bidegree, Element) {
    let bds = sources(space, d);
    let bd = *bds.choose(rng).unwrap();
    let mut basis = space.basis_elements(bd).unwrap();
    if weighted {
        let w = basis.choose(rng).unwrap().weight_of();
        basis.retain(|m| m.weight_of() == w);
    }
    let k = rng.gen_range(1..=basis.len().min(6));
    let mut x = Element::zero(space.table());
    for m in basis.choose_multiple(rng, k) {
        x = &x + &m.scale(nonzero_scalar(rng));
    }
    (bd, x)
}

pub fn check_dd_zero() -> Outcome {
    for (name, h) in differentials() {
        let bad = h.dd_violations();
        if !bad.is_empty() {
            return Err(format!("{name}∘{name} ≠ 0 at {bad:?}"));
        }
    }
    Ok(())
}

pub fn check_dd_random(rng: &mut impl Rng) -> Outcome {
    for (name, h) in differentials() {
        let (space, d) = (h.page(), h.derivation());
        let (_, x) = random_page_element(space, d, false, rng);
        let ddx = d.apply(&d.apply(&x).unwrap()).unwrap();
        if !space.is_zero(&ddx).unwrap() {
            return Err(format!("{name}({name}({x})) ≠ 0"));
        }
    }
    Ok(())
}

pub fn check_equivariant(rng: &mut impl Rng) -> Outcome {
    for (name, h) in differentials() {
        let (space, d) = (h.page(), h.derivation());
        let (_, x) = random_page_element(space, d, false, rng);
        let lhs = d.apply(&x.frobenius_map()).unwrap();
        let rhs = d.apply(&x).unwrap().frobenius_map();
        if !space.is_zero(&(&lhs + &rhs)).unwrap() {
            return Err(format!("{name}(F x) ≠ F({name} x) for x = {x}"));
        }
    }
    Ok(())
}

pub fn check_weight(rng: &mut impl Rng) -> Outcome {
    for (name, h) in differentials() {
        let (space, d) = (h.page(), h.derivation());
        let (_, x) = random_page_element(space, d, true, rng);
        let dx = space.reduce(&d.apply(&x).unwrap()).unwrap();
        let ok = match (x.weight_of(), dx.weight_of()) {
            (_, Weight::Any) => true,
            (Weight::Exactly(a), Weight::Exactly(b)) => a == b,
            _ => false,
        };
        if !ok {
            return Err(format!("{name} changes the weight of {x}"));
        }
    }
    Ok(())
}

/// A random polynomial in the generators of E₂ with small exponents.
pub fn random_polynomial(rng: &mut impl Rng) -> Element {
    let page = pipeline().e2();
    let table = page.table();
    let mut x = Element::zero(table);
    for _ in 0..rng.gen_range(0..4) {
        let mut m = Element::scalar(table, nonzero_scalar(rng));
        for i in 0..table.len() {
            let e = rng.gen_range(0..3u32);
            m = &m * &Element::generator(table, i).pow(e);
        }
        x = &x + &m;
    }
    x
}

pub fn check_norm_product_rule(rng: &mut impl Rng) -> Outcome {
    let a = random_polynomial(rng);
    let b = random_polynomial(rng);
    let nb = b.norm();
    let lhs = &a.norm() * &nb;
    let rhs = (&a * &nb).norm();
    if lhs != rhs {
        return Err(format!("N(A)N(B) ≠ N(A·N(B)) for A = {a}, B = {b}"));
    }
    let f4 = a.frobenius_map().frobenius_map().frobenius_map().frobenius_map();
    if f4 != a || (&a * &b).frobenius_map() != &a.frobenius_map() * &b.frobenius_map() {
        return Err(format!("F is not a ring automorphism of order 4 on {a}, {b}"));
    }
    Ok(())
}

/// A random class of E∞ at a random bidegree of the window, optionally
/// restricted to bidegrees of total degree at most `max_total`.
pub fn random_class(rng: &mut impl Rng, max_total: i32) -> (Bidegree, Element) {
    let e = einf();
    let bds: Vec<Bidegree> = e
        .window()
        .bidegrees()
        .filter(|b| b.total() <= max_total && e.dim(*b).is_ok_and(|n| n > 0))
        .collect();
    let bd = *bds.choose(rng).unwrap();
    let mut x = Element::zero(e.page().table());
    for l in e.lifts(bd).unwrap() {
        x = &x + &l.scale(scalar(rng));
    }
    (bd, x)
}

/// A random nonzero E∞-essential class from the scan.
pub fn random_essential(rng: &mut impl Rng) -> (Bidegree, Element) {
    let spaces: Vec<_> = scan().spaces.values().filter(|s| !s.classes.is_empty()).collect();
    let s = spaces.choose(rng).unwrap();
    loop {
        let mut v = esscert_core::linalg::Vector::zeros(s.classes[0].len());
        for c in &s.classes {
            v.add_scaled(scalar(rng), c);
        }
        if !v.is_zero() {
            let x = einf().homology().element_of_class(s.bidegree, &v).unwrap();
            return (s.bidegree, x);
        }
    }
}

pub fn check_witnesses(rng: &mut impl Rng) -> Outcome {
    let e = einf();
    let (bd, x) = if rng.gen_bool(0.5) { random_essential(rng) } else { random_class(rng, 16) };
    for z in h1_enumerate(e).unwrap() {
        if let Some(w) = e.divides(&z.element, &x, bd).unwrap() {
            if !e.same_class(&(&z.element * &w), &x, bd).unwrap() {
                return Err(format!("witness {w} for {x} does not re-multiply"));
            }
        }
    }
    Ok(())
}

pub fn check_essential_symmetries(rng: &mut impl Rng) -> Outcome {
    let e = einf();
    let (bd, x) = if rng.gen_bool(0.5) { random_essential(rng) } else { random_class(rng, 14) };
    let base = is_essential_einf(e, &x, bd).unwrap().is_essential();
    let fx = is_essential_einf(e, &x.frobenius_map(), bd).unwrap().is_essential();
    let cx = is_essential_einf(e, &x.scale(nonzero_scalar(rng)), bd).unwrap().is_essential();
    if base != fx || base != cx {
        return Err(format!("essentiality of {x} changes under F or scaling"));
    }
    Ok(())
}

pub fn check_ideal(rng: &mut impl Rng) -> Outcome {
    let e = einf();
    let (bx, x) = random_essential(rng);
    let (by, y) = random_class(rng, 6);
    let bd = bx + by;
    if !e.window().contains(bd) {
        return Ok(());
    }
    if !is_essential_einf(e, &(&x * &y), bd).unwrap().is_essential() {
        return Err(format!("({x})·({y}) is not essential"));
    }
    Ok(())
}

pub fn check_triple(rng: &mut impl Rng) -> Outcome {
    let e = einf();
    let (b1, x) = random_essential(rng);
    let (b2, y) = random_essential(rng);
    let (b3, z) = random_essential(rng);
    let bd = b1 + b2 + b3;
    if !e.window().contains(bd) {
        return Ok(());
    }
    let xyz = &(&x * &y) * &z;
    if !e.quotient_class(&xyz, bd).unwrap().is_zero() {
        return Err(format!("triple product at {bd} is nonzero modulo parameters"));
    }
    Ok(())
}

pub fn group() -> &'static [GroupElement] {
    static G: OnceLock<Vec<GroupElement>> = OnceLock::new();
    G.get_or_init(enumerate_group)
}

pub fn check_associative(rng: &mut impl Rng) -> Outcome {
    let g = group();
    let (x, y, z) = (*g.choose(rng).unwrap(), *g.choose(rng).unwrap(), *g.choose(rng).unwrap());
    let l = compose(compose(x, y).unwrap(), z).unwrap();
    let r = compose(x, compose(y, z).unwrap()).unwrap();
    if l != r {
        return Err(format!("({x:?}·{y:?})·{z:?} ≠ {x:?}·({y:?}·{z:?})"));
    }
    if !l.is_valid() {
        return Err(format!("product {l:?} leaves G"));
    }
    Ok(())
}

/// Runs `check` on `n` inputs and returns the number of violations with
/// the first message.
pub fn sample<R: Rng>(rng: &mut R, n: usize, check: impl Fn(&mut R) -> Outcome) -> Result<usize, String> {
    for i in 0..n {
        check(rng).map_err(|e| format!("case {i}: {e}"))?;
    }
    Ok(n)
}
