//! Runs selected check groups in dependency order and assembles a report.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::Bidegree;
use crate::error::{Error, Result};
use crate::essential;
use crate::group;
use crate::pages::Window;
use crate::report::{Check, Status, VerificationReport};
use crate::series;
use crate::sseq::{self, Pipeline};

/// Smallest window on which every check group is meaningful: the d₅
/// formulas reach row 10 and the top class sits at (8,6).
pub const MIN_PMAX: i32 = 14;
pub const MIN_QMAX: i32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Group,
    E3,
    E4,
    Einf,
    Relations,
    Essential,
    Products,
    Series,
}

impl Group {
    pub const ALL: [Group; 8] = [
        Group::Group,
        Group::E3,
        Group::E4,
        Group::Einf,
        Group::Relations,
        Group::Essential,
        Group::Products,
        Group::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::Group => "group",
            Group::E3 => "e3",
            Group::E4 => "e4",
            Group::Einf => "einf",
            Group::Relations => "relations",
            Group::Essential => "essential",
            Group::Products => "products",
            Group::Series => "series",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown check group {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub window: Window,
    pub groups: Vec<Group>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            window: Window::new(16, 12),
            groups: Group::ALL.to_vec(),
        }
    }
}

impl Config {
    /// Validates the window; groups are sorted into dependency order.
    pub fn new(pmax: i32, qmax: i32, groups: &[Group]) -> Result<Config> {
        if pmax < MIN_PMAX || qmax < MIN_QMAX {
            return Err(Error::Config(format!(
                "window ({pmax},{qmax}) is too small: need pmax ≥ {MIN_PMAX} and qmax ≥ {MIN_QMAX}"
            )));
        }
        let mut groups = if groups.is_empty() {
            Group::ALL.to_vec()
        } else {
            groups.to_vec()
        };
        groups.sort();
        groups.dedup();
        Ok(Config {
            window: Window::new(pmax, qmax),
            groups,
        })
    }
}

fn group_checks(pl: &Pipeline, g: Group) -> Result<Vec<Check>> {
    Ok(match g {
        Group::Group => group::verify_group(),
        Group::E3 => sseq::verify_e3(pl)?,
        Group::E4 => {
            let mut v = sseq::verify_e4(pl)?;
            v.extend(sseq::verify_e4_equals_e5(pl)?);
            v
        }
        Group::Einf => {
            let mut v = sseq::verify_einf(pl)?;
            v.extend(sseq::last_survivor(pl)?);
            v
        }
        Group::Relations => sseq::verify_corrected_relations(pl)?,
        Group::Essential => essential::verify_essential(pl.einf()?)?,
        Group::Products => products(pl, true)?,
        Group::Series => series::verify_series(pl.einf()?)?,
    })
}

/// The product propositions with their aggregate verdicts, optionally
/// followed by the exhaustive scan of products of essential classes.
pub fn products(pl: &Pipeline, with_scan: bool) -> Result<Vec<Check>> {
    let einf = pl.einf()?;
    let mut v = essential::verify_products(einf)?;
    for (id, prefix, what) in [
        ("products.prop-ess10-4", "products.omega.", "degree 10 × degree 4 products equal ξ for all ω"),
        ("products.prop-ess8-6", "products.lambda.", "degree 6 × degree 8 products equal ξ for all λ"),
    ] {
        let ok = v
            .iter()
            .filter(|c| c.id.starts_with(prefix))
            .all(|c| c.status == Status::Pass);
        v.push(Check::verdict(id, ok, what));
    }
    if !with_scan {
        return Ok(v);
    }
    let scan = essential::essential_scan(einf)?;
    let ps = essential::product_scan(einf, &scan)?;
    v.extend(essential::product_scan_checks(&ps));
    Ok(v)
}

/// Runs the configured groups. A group that errors out contributes a single
/// failed check instead of aborting the run.
pub fn run(config: &Config) -> Result<VerificationReport> {
    let pl = Pipeline::new(config.window)?;
    let mut report = VerificationReport::new();
    for &g in &config.groups {
        match group_checks(&pl, g) {
            Ok(checks) => report.extend(checks),
            Err(e) => report.push(Check::fail(format!("{g}.error"), e.to_string())),
        }
    }
    Ok(report)
}

/// Pages whose dimension tables can be printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PageName {
    E2,
    E3,
    E4,
    Einf,
    /// E∞ without reducing by the parameters.
    EinfFull,
}

impl FromStr for PageName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e2" => Ok(PageName::E2),
            "e3" => Ok(PageName::E3),
            "e4" | "e5" => Ok(PageName::E4),
            "einf" => Ok(PageName::Einf),
            "einf-full" => Ok(PageName::EinfFull),
            _ => Err(Error::Config(format!("unknown page {s:?}"))),
        }
    }
}

/// Dimension of `page` at every bidegree of the window, row by row.
pub fn dims(pl: &Pipeline, page: PageName) -> Result<Vec<Vec<usize>>> {
    let w = pl.window();
    let f = |bd: Bidegree| -> Result<usize> {
        match page {
            PageName::E2 => pl.h2()?.page().dim(bd),
            PageName::E3 => pl.h2()?.dim(bd),
            PageName::E4 => pl.h3()?.dim(bd),
            PageName::Einf => pl.einf()?.quotient_dim(bd),
            PageName::EinfFull => pl.einf()?.dim(bd),
        }
    };
    (0..=w.qmax)
        .map(|q| (0..=w.pmax).map(|p| f(Bidegree::new(p, q))).collect())
        .collect()
}

/// Renders `rows[q][p]` with q increasing upwards, blank for zero, trimmed
/// to the nonzero range.
pub fn render_table(rows: &[Vec<usize>]) -> String {
    let pmax = rows
        .iter()
        .flat_map(|r| r.iter().rposition(|&d| d != 0))
        .max()
        .unwrap_or(0);
    let qmax = rows.iter().rposition(|r| r.iter().any(|&d| d != 0)).unwrap_or(0);
    let width = rows
        .iter()
        .flatten()
        .map(|d| d.to_string().len())
        .max()
        .unwrap_or(1)
        .max((pmax + 1).to_string().len());
    let mut out = String::new();
    let qw = qmax.to_string().len();
    for q in (0..=qmax).rev() {
        out.push_str(&format!("{q:>qw$} |"));
        for p in 0..=pmax + 1 {
            let d = rows[q].get(p).copied().unwrap_or(0);
            let cell = if d == 0 { String::new() } else { d.to_string() };
            out.push_str(&format!(" {cell:>width$}"));
        }
        let trimmed = out.trim_end_matches(' ').len();
        out.truncate(trimmed);
        out.push('\n');
    }
    out.push_str(&format!("{:>qw$} +{}\n", "", "-".repeat((pmax + 2) * (width + 1))));
    out.push_str(&format!("{:>qw$}  ", "q"));
    for p in 0..=pmax + 1 {
        out.push_str(&format!(" {p:>width$}"));
    }
    out.push_str("  p\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(matches!(Config::new(16, 4, &[]), Err(Error::Config(_))));
        assert!(matches!(Config::new(13, 12, &[]), Err(Error::Config(_))));
        let c = Config::new(14, 10, &[Group::Series, Group::Group, Group::Series]).unwrap();
        assert_eq!(c.groups, vec![Group::Group, Group::Series]);
        assert_eq!("einf".parse::<Group>().unwrap(), Group::Einf);
        assert!("e9".parse::<Group>().is_err());
    }

    #[test]
    fn table_layout() {
        let rows = vec![vec![1, 4, 0], vec![0, 0, 0], vec![0, 0, 2]];
        let t = render_table(&rows);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "2 |     2");
        assert_eq!(lines[1], "1 |");
        assert_eq!(lines[2], "0 | 1 4");
    }
}
