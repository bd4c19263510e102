//! Presentations and differentials of the pages E₂, E₃ and E₄ = E₅.

use std::sync::Arc;

use crate::algebra::{Element, GeneratorSpec, GeneratorTable, Substitution, SymbolTable};
use crate::error::Result;
use crate::pages::{Derivation, Presentation};

/// A presented page with its outgoing differential and parser symbols.
#[derive(Clone, Debug)]
pub struct Page {
    pub label: &'static str,
    pub symbols: SymbolTable,
    pub presentation: Arc<Presentation>,
    pub differential: Derivation,
}

impl Page {
    pub fn table(&self) -> &Arc<GeneratorTable> {
        self.symbols.table()
    }

    pub fn parse(&self, s: &str) -> Result<Element> {
        self.symbols.parse(s)
    }
}

fn a_specs() -> Vec<GeneratorSpec<'static>> {
    vec![
        GeneratorSpec::new("a1", 1, 0, 1, "a2"),
        GeneratorSpec::new("a2", 1, 0, 2, "a4"),
        GeneratorSpec::new("a4", 1, 0, 4, "a8"),
        GeneratorSpec::new("a8", 1, 0, 8, "a1"),
    ]
}

fn parse_all(symbols: &SymbolTable, exprs: &[&str]) -> Result<Vec<Element>> {
    exprs.iter().map(|e| symbols.parse(e)).collect()
}

/// F₁₆[a₁,a₂,a₄,a₈,u₅,u₁₀] with d₂(u₅) = a₁a₄, d₂(u₁₀) = a₂a₈.
pub fn e2() -> Result<Page> {
    let mut specs = a_specs();
    specs.push(GeneratorSpec::new("u5", 0, 1, 5, "u10"));
    specs.push(GeneratorSpec::new("u10", 0, 1, 10, "u5"));
    let table = GeneratorTable::new(&specs)?;
    let symbols = SymbolTable::new(&table);
    // d₂ is homogeneous for the grading a_i ↦ e_i, u₅ ↦ e₁+e₄, u₁₀ ↦ e₂+e₈,
    // which cuts the free page into tiny blocks.
    let grading = vec![
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
    ];
    let presentation = Presentation::new("E2", &table, vec![], Some(grading))?;
    let differential = Derivation::new(
        &table,
        2,
        vec![("u5", symbols.parse("a1*a4")?), ("u10", symbols.parse("a2*a8")?)],
    )?;
    Ok(Page {
        label: "E2",
        symbols,
        presentation,
        differential,
    })
}

pub const E3_RELATIONS: [&str; 2] = ["a1*a4", "a2*a8"];

/// F₁₆[a₁,a₂,a₄,a₈]/(a₁a₄, a₂a₈) ⊗ F₁₆[u₅², u₁₀²] with its d₃.
pub fn e3() -> Result<Page> {
    let mut specs = a_specs();
    specs.push(GeneratorSpec::new("u5_2", 0, 2, 10, "u10_2"));
    specs.push(GeneratorSpec::new("u10_2", 0, 2, 5, "u5_2"));
    let table = GeneratorTable::new(&specs)?;
    let mut symbols = SymbolTable::new(&table);
    let presentation = Presentation::new("E3", &table, parse_all(&symbols, &E3_RELATIONS)?, None)?;
    let differential = Derivation::new(
        &table,
        3,
        vec![
            ("u5_2", symbols.parse("a8*a1^2 + a2*a4^2")?),
            ("u10_2", symbols.parse("a1*a2^2 + a4*a8^2")?),
        ],
    )?;
    for (name, expr) in E4_GENERATORS_IN_E3 {
        symbols.define(name, expr)?;
    }
    Ok(Page {
        label: "E3",
        symbols,
        presentation,
        differential,
    })
}

/// Representatives of the new E₄ generators as E₃ elements.
pub const E4_GENERATORS_IN_E3: [(&str, &str); 6] = [
    ("b7", "a4*a8*u5_2"),
    ("b14", "a8*a1*u10_2"),
    ("b13", "a1*a2*u5_2"),
    ("b11", "a2*a4*u10_2"),
    ("u5_4", "u5_2^2"),
    ("u10_4", "u10_2^2"),
];

/// Defining relations of the E₄ page.
pub const E4_RELATIONS: [&str; 23] = [
    "a1*a4",
    "a2*a8",
    "a8*a1^2 + a2*a4^2",
    "a4*a8^2 + a1*a2^2",
    "a1*b7",
    "a2*b7",
    "a2*b14",
    "a4*b14",
    "a4*b13",
    "a8*b13",
    "a8*b11",
    "a1*b11",
    "a1*b14 + a2*b13 + a4*b11 + a8*b7",
    "b7^2",
    "b14^2",
    "b13^2",
    "b11^2",
    "b7*b14",
    "b7*b13",
    "b7*b11",
    "b14*b13",
    "b14*b11",
    "b13*b11",
];

/// Further relations that follow from the defining ones.
pub const E4_MORE_RELATIONS: [&str; 16] = [
    "a1^2*a2^2",
    "a2^2*a4^2",
    "a4^2*a8^2",
    "a8^2*a1^2",
    "a1*a2^3",
    "a2*a4^3",
    "a4*a8^3",
    "a8*a1^3",
    "a8^2*b7 + a8*a1*b14",
    "a1^2*b14 + a1*a2*b13",
    "a2^2*b13 + a2*a4*b11",
    "a4^2*b11 + a4*a8*b7",
    "a4*a8^2*b7",
    "a8*a1^2*b14",
    "a1*a2^2*b13",
    "a2*a4^2*b11",
];

/// Representatives of the E∞ generators as E₅ elements.
pub const EINF_GENERATORS: [(&str, &str); 19] = [
    ("d3", "a4^2*u10_4"),
    ("d6", "a8^2*u5_4"),
    ("d12", "a1^2*u10_4"),
    ("d9", "a2^2*u5_4"),
    ("d7", "a4*a8*u10_4"),
    ("d14", "a8*a1*u5_4"),
    ("d13", "a1*a2*u10_4"),
    ("d11", "a2*a4*u5_4"),
    ("t3", "a2*b11*u5_4"),
    ("t6", "a4*b7*u10_4"),
    ("t12", "a8*b14*u5_4"),
    ("t9", "a1*b13*u10_4"),
    ("t5", "(a8*b7 + a4*b11)*u5_4"),
    ("t10", "(a2*b13 + a4*b11)*u10_4"),
    ("x5", "a1*a2^2*u5_4*u10_4"),
    ("x10", "a2*a4^2*u5_4*u10_4"),
    ("xi", "a2^4*a4*t3"),
    ("u5_8", "u5_4^2"),
    ("u10_8", "u10_4^2"),
];

/// The E₄ = E₅ page on aᵢ, βᵢ, u₅⁴, u₁₀⁴ with its d₅.
pub fn e5() -> Result<Page> {
    let mut specs = a_specs();
    specs.extend([
        GeneratorSpec::new("b7", 2, 2, 7, "b14"),
        GeneratorSpec::new("b14", 2, 2, 14, "b13"),
        GeneratorSpec::new("b13", 2, 2, 13, "b11"),
        GeneratorSpec::new("b11", 2, 2, 11, "b7"),
        GeneratorSpec::new("u5_4", 0, 4, 5, "u10_4"),
        GeneratorSpec::new("u10_4", 0, 4, 10, "u5_4"),
    ]);
    let table = GeneratorTable::new(&specs)?;
    let mut symbols = SymbolTable::new(&table);
    let presentation = Presentation::new("E5", &table, parse_all(&symbols, &E4_RELATIONS)?, None)?;
    let differential = Derivation::new(
        &table,
        5,
        vec![
            ("u5_4", symbols.parse("a1^5 + a4^5")?),
            ("u10_4", symbols.parse("a2^5 + a8^5")?),
        ],
    )?;
    for (name, expr) in EINF_GENERATORS {
        symbols.define(name, expr)?;
    }
    Ok(Page {
        label: "E5",
        symbols,
        presentation,
        differential,
    })
}

/// E₃ → E₂: u₅² and u₁₀² as squares.
pub fn e3_to_e2(e3: &Page, e2: &Page) -> Result<Substitution> {
    let p = |s: &str| e2.parse(s);
    Substitution::new(
        e3.table(),
        e2.table(),
        vec![
            ("a1", p("a1")?),
            ("a2", p("a2")?),
            ("a4", p("a4")?),
            ("a8", p("a8")?),
            ("u5_2", p("u5^2")?),
            ("u10_2", p("u10^2")?),
        ],
    )
}

/// E₅ → E₃: the βᵢ and u⁴ via their representatives.
pub fn e5_to_e3(e5: &Page, e3: &Page) -> Result<Substitution> {
    let mut images = Vec::new();
    for a in ["a1", "a2", "a4", "a8"] {
        images.push((a, e3.parse(a)?));
    }
    for (name, expr) in E4_GENERATORS_IN_E3 {
        images.push((name, e3.parse(expr)?));
    }
    Substitution::new(e5.table(), e3.table(), images)
}
