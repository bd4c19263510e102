//! Claimed bases and differential formulas, written as templates in the
//! exponents `r, s ≥ 0`. `{r+2}` expands to the value of `r + 2`.

use super::tables::Page;
use crate::algebra::{Bidegree, Element};
use crate::error::{Error, Result};
use crate::pages::Window;

pub(crate) fn expand(template: &str, r: i32, s: i32) -> Result<String> {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| Error::Parse(format!("unclosed brace in {template}")))?
            + open;
        let inner = rest[open + 1..close].trim();
        let (var, offset) = match inner.split_once('+') {
            Some((v, k)) => (
                v.trim(),
                k.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad offset in {template}")))?,
            ),
            None => (inner, 0),
        };
        let base = match var {
            "r" => r,
            "s" => s,
            _ => return Err(Error::Parse(format!("unknown variable {var} in {template}"))),
        };
        out.push_str(&(base + offset).to_string());
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

fn variables(template: &str) -> (bool, bool) {
    (template.contains("{r"), template.contains("{s"))
}

/// A family of claimed basis elements: a tuple of templates (usually an
/// F-orbit) indexed by `r` in `0..=r_max` (unbounded when `None`).
#[derive(Clone, Debug)]
pub struct BasisFamily {
    pub row: i32,
    pub templates: &'static [&'static str],
    pub r_max: Option<i32>,
}

const fn fam(row: i32, templates: &'static [&'static str], r_max: Option<i32>) -> BasisFamily {
    BasisFamily {
        row,
        templates,
        r_max,
    }
}

impl BasisFamily {
    /// All members `(expression, element, bidegree)` with `p ≤ window.pmax`.
    pub fn members(&self, page: &Page, window: Window) -> Result<Vec<(String, Element, Bidegree)>> {
        let mut out = Vec::new();
        let uses_r = self.templates.iter().any(|t| variables(t).0);
        let r_last = if uses_r { self.r_max.unwrap_or(i32::MAX) } else { 0 };
        let mut r = 0;
        while r <= r_last {
            let mut any_inside = false;
            for t in self.templates {
                let expr = expand(t, r, 0)?;
                let x = page.parse(&expr)?;
                let bd = x
                    .bidegree()?
                    .ok_or_else(|| Error::Domain(format!("basis template {expr} is zero")))?;
                if bd.p <= window.pmax {
                    any_inside = true;
                    out.push((expr, x, bd));
                }
            }
            if !any_inside {
                break;
            }
            r += 1;
        }
        Ok(out)
    }
}

/// Claimed bases of the bottom two rows of E₄ (r unbounded).
pub fn e4_basis() -> Vec<BasisFamily> {
    vec![
        fam(0, &["1"], None),
        fam(0, &["a1^{r+1}", "a2^{r+1}", "a4^{r+1}", "a8^{r+1}"], None),
        fam(0, &["a1^{r+1}*a2", "a2^{r+1}*a4", "a4^{r+1}*a8", "a8^{r+1}*a1"], None),
        fam(0, &["a1*a2^2", "a2*a4^2"], None),
        fam(2, &["a4^{r}*b7", "a8^{r}*b14", "a1^{r}*b13", "a2^{r}*b11"], None),
        fam(
            2,
            &["a4^{r+1}*a8*b7", "a8^{r+1}*a1*b14", "a1^{r+1}*a2*b13", "a2^{r+1}*a4*b11"],
            None,
        ),
        fam(2, &["a8*b7", "a2*b13", "a4*b11"], None),
    ]
}

/// Claimed bases of E∞ rows 0, 2, 4, 6 and the complement χ₅, χ₁₀ in row 8.
pub fn einf_basis() -> Vec<BasisFamily> {
    vec![
        fam(0, &["a1^{r+1}", "a2^{r+1}", "a4^{r+1}", "a8^{r+1}"], Some(3)),
        fam(0, &["a1^{r+1}*a2", "a2^{r+1}*a4", "a4^{r+1}*a8", "a8^{r+1}*a1"], Some(3)),
        fam(0, &["1"], None),
        fam(0, &["a1*a2^2", "a2*a4^2"], None),
        fam(0, &["a1^5", "a2^5"], None),
        fam(2, &["a4^{r}*b7", "a8^{r}*b14", "a1^{r}*b13", "a2^{r}*b11"], Some(4)),
        fam(
            2,
            &["a4^{r+1}*a8*b7", "a8^{r+1}*a1*b14", "a1^{r+1}*a2*b13", "a2^{r+1}*a4*b11"],
            Some(2),
        ),
        fam(2, &["a8*b7", "a2*b13", "a4*b11"], None),
        fam(4, &["a4^{r}*d7", "a8^{r}*d14", "a1^{r}*d13", "a2^{r}*d11"], Some(4)),
        fam(4, &["a4^{r}*d3", "a8^{r}*d6", "a1^{r}*d12", "a2^{r}*d9"], Some(2)),
        fam(4, &["a2*d3", "a4*d6"], None),
        fam(4, &["a8*d7", "a1*d14"], None),
        fam(4, &["a4^3*d3", "a8^3*d6", "a2^3*d9"], None),
        fam(6, &["a2^{r}*t3", "a4^{r}*t6", "a8^{r}*t12", "a1^{r}*t9"], Some(3)),
        fam(6, &["a2^{r}*a4*t3", "a4^{r}*a8*t6", "a8^{r}*a1*t12", "a1^{r}*a2*t9"], Some(3)),
        fam(6, &["t5", "t10"], None),
        fam(6, &["xi"], None),
        fam(8, &["x5", "x10"], None),
    ]
}

/// `d(lhs) = rhs` for all `r, s ≥ 0` occurring in the templates.
#[derive(Clone, Debug)]
pub struct DifferentialRule {
    pub id: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

const fn rule(id: &'static str, lhs: &'static str, rhs: &'static str) -> DifferentialRule {
    DifferentialRule { id, lhs, rhs }
}

impl DifferentialRule {
    /// Instances `(lhs, rhs)` whose source and target lie in `window`.
    pub fn instances(&self, page: &Page, window: Window) -> Result<Vec<(String, Element, String, Element)>> {
        let (ur, us) = variables(self.lhs);
        let rmax = if ur { window.pmax } else { 0 };
        let smax = if us { window.pmax } else { 0 };
        let shift = page.differential.shift();
        let mut out = Vec::new();
        for r in 0..=rmax {
            for s in 0..=smax {
                let l = expand(self.lhs, r, s)?;
                let x = page.parse(&l)?;
                let Some(bd) = x.bidegree()? else { continue };
                if !window.contains(bd) || !window.contains(bd + shift) {
                    continue;
                }
                let rt = expand(self.rhs, r, s)?;
                let y = page.parse(&rt)?;
                out.push((l, x, rt, y));
            }
        }
        Ok(out)
    }
}

/// The action of d₃ on rows 2 and 4 of E₃ (with βᵢ written via their E₃
/// representatives), and β₇² as a d₃-boundary.
pub fn d3_table() -> Vec<DifferentialRule> {
    vec![
        rule("u5-2", "u5_2", "a8*a1^2 + a2*a4^2"),
        rule("a1r-u5-2", "a1^{r+1}*u5_2", "a8*a1^{r+3}"),
        rule("a1r-a2s-u5-2", "a1^{r+1}*a2^{s+1}*u5_2", "0"),
        rule("u10-2", "u10_2", "a1*a2^2 + a4*a8^2"),
        rule("a1r-u10-2", "a1^{r+1}*u10_2", "a1^{r+2}*a2^2"),
        rule("a1r-a2s-u10-2", "a1^{r+1}*a2^{s+1}*u10_2", "a1^{r+2}*a2^{s+3}"),
        rule("u5-2-u10-2", "u5_2*u10_2", "a1*b14 + a2*b13 + a4*b11 + a8*b7"),
        rule("a1r-u5-2-u10-2", "a1^{r+1}*u5_2*u10_2", "a1^{r+2}*b14 + a1^{r+1}*a2*b13"),
        rule("a1r-a2s-u5-2-u10-2", "a1^{r+1}*a2^{s+1}*u5_2*u10_2", "a1^{r+1}*a2^{s+2}*b13"),
        rule("beta7-squared", "a4*u5_4*u10_2", "b7^2"),
    ]
}

/// The action of d₅ on rows 4, 6, 8 and 10 of E₅.
pub fn d5_table() -> Vec<DifferentialRule> {
    vec![
        rule("u5-4", "u5_4", "a4^5 + a1^5"),
        rule("a1r-a2-u5-4", "a1^{r+1}*a2*u5_4", "a1^{r+6}*a2"),
        rule("a1-a2sq-u5-4", "a1*a2^2*u5_4", "0"),
        rule("u10-4", "u10_4", "a8^5 + a2^5"),
        rule("a1r-a2-u10-4", "a1^{r+1}*a2*u10_4", "0"),
        rule("a1-a2sq-u10-4", "a1*a2^2*u10_4", "0"),
        rule("a1r-u5-4", "a1^{r+1}*u5_4", "a1^{r+6}"),
        rule("a1-u10-4", "a1*u10_4", "a8^5*a1"),
        rule("a1r2-u10-4", "a1^{r+2}*u10_4", "0"),
        rule("u5-4-u10-4", "u5_4*u10_4", "a4^3*d3 + a8^3*d6 + a1^3*d12 + a2^3*d9"),
        rule("a4-u5-4-u10-4", "a4*u5_4*u10_4", "a4^4*d3 + a2^4*d11"),
        rule("a4r2-u5-4-u10-4", "a4^{r+2}*u5_4*u10_4", "a4^{r+5}*d3"),
        rule("a1-a2sq-u5-4-u10-4", "a1*a2^2*u5_4*u10_4", "0"),
        rule("a4r-a8-u5-4-u10-4", "a4^{r+1}*a8*u5_4*u10_4", "a4^{r+5}*d7"),
        rule("a4r-b7-u5-4", "a4^{r}*b7*u5_4", "a4^{r+5}*b7"),
        rule("b7-u10-4", "b7*u10_4", "a8^4*a1*b14"),
        rule("a4r-b7-u10-4", "a4^{r+1}*b7*u10_4", "0"),
        rule("a4r-a8-b7-u5-4", "a4^{r+1}*a8*b7*u5_4", "a4^{r+6}*a8*b7"),
        rule("a4r-a8-b7-u10-4", "a4^{r+1}*a8*b7*u10_4", "0"),
        rule("a8-b7-u5-4", "a8*b7*u5_4", "a4^5*a8*b7"),
        rule("a8-b7-u10-4", "a8*b7*u10_4", "a8^5*a1*b14"),
        rule("b7-u5-4-u10-4", "b7*u5_4*u10_4", "a4^4*t6 + a8^3*a1*t12"),
        rule("a4r-b7-u5-4-u10-4", "a4^{r+1}*b7*u5_4*u10_4", "a4^{r+5}*t6"),
        rule("a4r-a8-b7-u5-4-u10-4", "a4^{r+1}*a8*b7*u5_4*u10_4", "a4^{r+5}*a8*t6"),
        rule("a8-b7-u5-4-u10-4", "a8*b7*u5_4*u10_4", "a4^4*a8*t6 + a8^4*a1*t12"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn template_expansion() {
        assert_eq!(expand("a1^{r+1}*a2^{s+3}", 2, 0).unwrap(), "a1^3*a2^3");
        assert_eq!(expand("a4^{r}*b7", 0, 0).unwrap(), "a4^0*b7");
        assert!(expand("a1^{t}", 0, 0).is_err());
    }
}
