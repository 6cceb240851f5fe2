//! Bundled plain-text expectations for the worked examples and figures, and
//! their parsers.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::qbruhat::{QElement, QMonomial};
use crate::schubert::Expansion;

pub const Q_MONK: &str = include_str!("../fixtures/q-monk.txt");
pub const MN_EXAMPLE: &str = include_str!("../fixtures/mn-example.txt");
pub const Q_MINIMAL: &str = include_str!("../fixtures/q-minimal.txt");
pub const FIGURES: &str = include_str!("../fixtures/figures.txt");

/// Look up a bundled fixture by name.
pub fn bundled(name: &str) -> Option<&'static str> {
    match name {
        "q-monk" => Some(Q_MONK),
        "mn-example" => Some(MN_EXAMPLE),
        "q-minimal" => Some(Q_MINIMAL),
        "figures" => Some(FIGURES),
        _ => None,
    }
}

fn lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn bad(s: &str) -> Error {
    Error::Precondition(format!("malformed fixture line: {s}"))
}

fn key<'a>(line: &'a str, k: &str) -> Option<&'a str> {
    line.strip_prefix(k).filter(|r| r.starts_with(' ')).map(str::trim)
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse().map_err(|_| bad(s))
}

/// An expected product `𝔖_u * (class)` with its expansion.
#[derive(Clone, Debug)]
pub struct ProductFixture {
    pub n: usize,
    pub u: Permutation,
    pub k: usize,
    pub header: BTreeMap<String, String>,
    pub expected: Expansion,
}

/// Parse header lines `key value` and term lines `±c [q-monomial] perm`; with
/// `relative yes` the permutation is `ζ` and the term is `ζu`.
pub fn parse_product(text: &str) -> Result<ProductFixture> {
    let mut header = BTreeMap::new();
    let mut terms = Vec::new();
    for l in lines(text) {
        if l.starts_with('+') || l.starts_with('-') {
            terms.push(l);
        } else {
            let (k, v) = l.split_once(' ').ok_or_else(|| bad(l))?;
            header.insert(k.to_string(), v.trim().to_string());
        }
    }
    let get = |k: &str| header.get(k).cloned().ok_or_else(|| bad(k));
    let n = parse_usize(&get("n")?)?;
    let u = Permutation::parse_in(&get("u")?, n)?;
    let k = parse_usize(&get("k")?)?;
    let relative = header.get("relative").map(String::as_str) == Some("yes");
    let mut expected = Expansion::new();
    for t in terms {
        let (c, rest) = t.split_once(' ').ok_or_else(|| bad(t))?;
        let c: i64 = c.trim_start_matches('+').parse().map_err(|_| bad(t))?;
        let x = QElement::parse_in(rest, n)?;
        let x = if relative { QElement::new(x.q, &x.w * &u) } else { x };
        expected.add_term(x, c);
    }
    Ok(ProductFixture { n, u, k, header, expected })
}

/// One step of an expected reduction path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFixture {
    pub i: usize,
    pub u: Permutation,
    pub w: Permutation,
    pub alpha: QMonomial,
}

#[derive(Clone, Debug)]
pub struct ReductionFixture {
    pub n: usize,
    pub u: Permutation,
    pub w: Permutation,
    pub alpha: QMonomial,
    pub k: usize,
    pub steps: Vec<StepFixture>,
    pub values: Vec<(Partition, i64)>,
}

fn parse_monomial(s: &str, n: usize) -> Result<QMonomial> {
    if s == "1" {
        return Ok(QMonomial::one(n));
    }
    Ok(QElement::parse_in(&format!("{s} e"), n)?.q)
}

pub fn parse_reduction(text: &str) -> Result<ReductionFixture> {
    let mut header = BTreeMap::new();
    let (mut steps, mut values) = (Vec::new(), Vec::new());
    let mut pending = Vec::new();
    for l in lines(text) {
        let (k, v) = l.split_once(' ').ok_or_else(|| bad(l))?;
        match k {
            "step" | "N" => pending.push((k, v.trim())),
            _ => {
                header.insert(k, v.trim());
            }
        }
    }
    let get = |k: &str| header.get(k).copied().ok_or_else(|| bad(k));
    let n = parse_usize(get("n")?)?;
    for (k, v) in pending {
        let f: Vec<&str> = v.split_whitespace().collect();
        match (k, f.as_slice()) {
            ("step", [i, u, w, a]) => steps.push(StepFixture {
                i: parse_usize(i)?,
                u: Permutation::parse_in(u, n)?,
                w: Permutation::parse_in(w, n)?,
                alpha: parse_monomial(a, n)?,
            }),
            ("N", [lam, c]) => values.push((lam.parse()?, c.parse().map_err(|_| bad(v))?)),
            _ => return Err(bad(v)),
        }
    }
    Ok(ReductionFixture {
        n,
        u: Permutation::parse_in(get("u")?, n)?,
        w: Permutation::parse_in(get("w")?, n)?,
        alpha: parse_monomial(get("alpha")?, n)?,
        k: parse_usize(get("k")?)?,
        steps,
        values,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureOrder {
    Classical,
    Quantum,
    Levels,
}

/// An expected interval, or the first levels above an element.
#[derive(Clone, Debug)]
pub struct FigureFixture {
    pub name: String,
    pub order: FigureOrder,
    pub n: usize,
    pub k: usize,
    pub bottom: QElement,
    pub top: Option<QElement>,
    pub elements: Vec<QElement>,
    pub labels: Option<Vec<usize>>,
    pub chains: Option<usize>,
    pub levels: Vec<Vec<QElement>>,
    pub classical_edges: Vec<(QElement, QElement)>,
    pub quantum_edges: Vec<(QElement, QElement)>,
}

fn elements(s: &str, n: usize) -> Result<Vec<QElement>> {
    s.split(';').map(|t| QElement::parse_in(t.trim(), n)).collect()
}

fn edges(s: &str, n: usize) -> Result<Vec<(QElement, QElement)>> {
    s.split(';')
        .map(|e| {
            let (a, b) = e.split_once("->").ok_or_else(|| bad(e))?;
            Ok((QElement::parse_in(a.trim(), n)?, QElement::parse_in(b.trim(), n)?))
        })
        .collect()
}

pub fn parse_figures(text: &str) -> Result<Vec<FigureFixture>> {
    let mut out = Vec::new();
    let mut block: Vec<&str> = Vec::new();
    for l in lines(text) {
        if l == "end" {
            out.push(parse_figure(&block)?);
            block.clear();
        } else {
            block.push(l);
        }
    }
    Ok(out)
}

fn parse_figure(block: &[&str]) -> Result<FigureFixture> {
    let find = |k: &str| block.iter().find_map(|l| key(l, k));
    let need = |k: &str| find(k).ok_or_else(|| bad(k));
    let n = parse_usize(need("n")?)?;
    let order = match need("order")? {
        "classical" => FigureOrder::Classical,
        "quantum" => FigureOrder::Quantum,
        "levels" => FigureOrder::Levels,
        o => return Err(bad(o)),
    };
    let mut levels = Vec::new();
    for l in block {
        if let Some(r) = key(l, "level") {
            let (idx, es) = r.split_once(':').ok_or_else(|| bad(l))?;
            let idx = parse_usize(idx.trim())?;
            if idx != levels.len() + 1 {
                return Err(bad(l));
            }
            levels.push(elements(es, n)?);
        }
    }
    Ok(FigureFixture {
        name: need("figure")?.to_string(),
        order,
        n,
        k: parse_usize(need("k")?)?,
        bottom: QElement::parse_in(need("bottom")?, n)?,
        top: find("top").map(|t| QElement::parse_in(t, n)).transpose()?,
        elements: find("elements").map(|e| elements(e, n)).transpose()?.unwrap_or_default(),
        labels: find("labels")
            .map(|s| s.split_whitespace().map(parse_usize).collect::<Result<Vec<_>>>())
            .transpose()?,
        chains: find("chains").map(parse_usize).transpose()?,
        levels,
        classical_edges: find("classical").map(|e| edges(e, n)).transpose()?.unwrap_or_default(),
        quantum_edges: find("quantum").map(|e| edges(e, n)).transpose()?.unwrap_or_default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_parse() {
        let f = parse_product(Q_MONK).unwrap();
        assert_eq!(f.expected.len(), 4);
        let f = parse_product(MN_EXAMPLE).unwrap();
        assert_eq!(f.expected.len(), 17);
        let r = parse_reduction(Q_MINIMAL).unwrap();
        assert_eq!(r.steps.len(), 3);
        let figs = parse_figures(FIGURES).unwrap();
        assert_eq!(figs.len(), 7);
        assert_eq!(figs[1].elements.len(), 12);
        assert_eq!(figs[2].levels[1].len(), 6);
    }
}
