//! The quantum k-Bruhat order on `S_n[q]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kbruhat::{self, Chain, Graded, LabeledPoset};
use crate::perm::Permutation;

/// `q^α = q_1^{α_1} ⋯ q_{n-1}^{α_{n-1}}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QMonomial {
    alpha: Vec<u32>,
}

impl QMonomial {
    pub fn one(n: usize) -> Self {
        QMonomial { alpha: vec![0; n.saturating_sub(1)] }
    }

    pub fn new(alpha: Vec<u32>) -> Self {
        QMonomial { alpha }
    }

    /// `q_{i,j} = q_i q_{i+1} ⋯ q_{j-1}` for `i < j`.
    pub fn q_ij(n: usize, i: usize, j: usize) -> Self {
        let mut m = QMonomial::one(n);
        for l in i..j {
            m.alpha[l - 1] += 1;
        }
        m
    }

    /// `q_i`.
    pub fn q(n: usize, i: usize) -> Self {
        QMonomial::q_ij(n, i, i + 1)
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    /// `α_i` with `α_0 = α_n = 0`.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.alpha.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn degree(&self) -> u32 {
        self.alpha.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.alpha.iter().all(|&a| a == 0)
    }

    pub fn mul(&self, other: &QMonomial) -> QMonomial {
        assert_eq!(self.alpha.len(), other.alpha.len());
        QMonomial { alpha: self.alpha.iter().zip(&other.alpha).map(|(a, b)| a + b).collect() }
    }

    /// `self / other` when it stays a monomial.
    pub fn div(&self, other: &QMonomial) -> Option<QMonomial> {
        if self.alpha.len() != other.alpha.len() {
            return None;
        }
        let alpha: Option<Vec<u32>> = self.alpha.iter().zip(&other.alpha).map(|(a, b)| a.checked_sub(*b)).collect();
        alpha.map(|alpha| QMonomial { alpha })
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &QMonomial) -> bool {
        other.div(self).is_some()
    }

    /// `w_0(α)`: `α_i -> α_{n-i}`.
    pub fn reversed(&self) -> QMonomial {
        QMonomial { alpha: self.alpha.iter().rev().copied().collect() }
    }

    pub fn n(&self) -> usize {
        self.alpha.len() + 1
    }
}

impl Ord for QMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.alpha.cmp(&other.alpha))
    }
}

impl PartialOrd for QMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alpha.iter().map(|v| v.to_string()).collect();
        write!(f, "q^({})", a.join(","))
    }
}

impl fmt::Debug for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element `q^α w` of `S_n[q]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QElement {
    pub q: QMonomial,
    pub w: Permutation,
}

impl QElement {
    pub fn new(q: QMonomial, w: Permutation) -> Self {
        assert_eq!(q.n(), w.n().max(1));
        QElement { q, w }
    }

    pub fn classical(w: Permutation) -> Self {
        QElement { q: QMonomial::one(w.n()), w }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// `ℓ(q^α w) = 2 deg q^α + ℓ(w)`.
    pub fn rank(&self) -> usize {
        2 * self.q.degree() as usize + self.w.length()
    }

    pub fn times(&self, m: &QMonomial) -> QElement {
        QElement { q: self.q.mul(m), w: self.w.clone() }
    }

    /// Parse `"q^(a1,..) w"`, `"q_{i,j} w"`, products of those, or a bare permutation.
    pub fn parse_in(s: &str, n: usize) -> Result<Self> {
        let bad = || Error::BadQElement(s.to_string());
        let mut q = QMonomial::one(n);
        let mut rest = s.trim();
        loop {
            if let Some(r) = rest.strip_prefix("q^(") {
                let end = r.find(')').ok_or_else(bad)?;
                let a: Vec<u32> = r[..end]
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                if a.len() != n - 1 {
                    return Err(bad());
                }
                q = q.mul(&QMonomial::new(a));
                rest = r[end + 1..].trim_start().trim_start_matches('*').trim_start();
            } else if let Some(r) = rest.strip_prefix("q_{") {
                let end = r.find('}').ok_or_else(bad)?;
                let ij: Vec<usize> = r[..end]
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                let m = match ij.as_slice() {
                    [i] if *i >= 1 && *i < n => QMonomial::q(n, *i),
                    [i, j] if *i >= 1 && i < j && *j <= n => QMonomial::q_ij(n, *i, *j),
                    _ => return Err(bad()),
                };
                q = q.mul(&m);
                rest = r[end + 1..].trim_start().trim_start_matches('*').trim_start();
            } else if let Some(r) = rest.strip_prefix('q') {
                let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
                let i: usize = digits.parse().map_err(|_| bad())?;
                if i == 0 || i >= n {
                    return Err(bad());
                }
                q = q.mul(&QMonomial::q(n, i));
                rest = r[digits.len()..].trim_start().trim_start_matches('*').trim_start();
            } else {
                break;
            }
        }
        let w = Permutation::parse_in(rest, n).map_err(|_| bad())?;
        Ok(QElement { q, w })
    }
}

impl FromStr for QElement {
    type Err = Error;

    /// The ambient `n` is read off the permutation part.
    fn from_str(s: &str) -> Result<Self> {
        let tail = s.rsplit(|c: char| c.is_whitespace() || c == '*' || c == '}' || c == ')').next().unwrap_or("");
        let n = tail.parse::<Permutation>().map_err(|_| Error::BadQElement(s.to_string()))?.n();
        QElement::parse_in(s, n)
    }
}

impl Ord for QElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q.cmp(&other.q).then_with(|| self.w.cmp(&other.w))
    }
}

impl PartialOrd for QElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_one() {
            write!(f, "{}", self.w)
        } else {
            write!(f, "{} {}", self.q, self.w)
        }
    }
}

impl fmt::Debug for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Graded for QElement {
    fn grade(&self) -> usize {
        self.rank()
    }

    fn alpha(&self) -> Option<Vec<u32>> {
        Some(self.q.alpha.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverKind {
    Classical,
    Quantum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverInfo {
    pub i: usize,
    pub j: usize,
    pub kind: CoverKind,
}

#[inline]
pub(crate) fn quantum_cover_ok(u: &Permutation, i: usize, j: usize, k: usize) -> bool {
    let (a, b) = (u.at(i), u.at(j));
    i <= k && k < j && a > b && (i + 1..j).all(|l| {
        let c = u.at(l);
        b < c && c < a
    })
}

/// Decide `x ⋖^q_k t`, returning the swapped positions and the cover type.
pub fn is_qcover(x: &QElement, t: &QElement, k: usize) -> Result<Option<CoverInfo>> {
    let n = x.n();
    if n != t.n() {
        return Err(Error::SizeMismatch(n, t.n()));
    }
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { index: k, max: n - 1 });
    }
    let Some(ratio) = t.q.div(&x.q) else { return Ok(None) };
    let diff: Vec<usize> = (1..=n).filter(|&p| x.w.at(p) != t.w.at(p)).collect();
    if diff.len() != 2 {
        return Ok(None);
    }
    let (i, j) = (diff[0], diff[1]);
    if t.w != x.w.swap_positions(i, j) {
        return Ok(None);
    }
    if ratio.is_one() {
        return Ok(kbruhat::classical_cover_ok(&x.w, i, j, k).then_some(CoverInfo { i, j, kind: CoverKind::Classical }));
    }
    if ratio == QMonomial::q_ij(n, i, j) && quantum_cover_ok(&x.w, i, j, k) {
        return Ok(Some(CoverInfo { i, j, kind: CoverKind::Quantum }));
    }
    Ok(None)
}

/// All covers of `x` in the quantum k-Bruhat order with labels `x.w(i)`, canonical order.
pub fn q_up_covers(x: &QElement, k: usize) -> Vec<(usize, QElement)> {
    let u = &x.w;
    let n = u.n();
    let mut out: Vec<(usize, QElement)> = kbruhat::up_covers_k(u, k)
        .into_iter()
        .map(|(l, w)| (l, QElement { q: x.q.clone(), w }))
        .collect();
    for i in 1..=k {
        let a = u.at(i);
        if (i + 1..=k).any(|l| u.at(l) > a) {
            continue;
        }
        for j in k + 1..=n {
            if quantum_cover_ok(u, i, j, k) {
                out.push((a, QElement { q: x.q.mul(&QMonomial::q_ij(n, i, j)), w: u.swap_positions(i, j) }));
            }
            if u.at(j) > a {
                break;
            }
        }
    }
    out.sort_by(|p, q| p.1.cmp(&q.1));
    out
}

/// `[u, t]^q_k`; empty when incomparable.
pub fn q_interval(u: &QElement, t: &QElement, k: usize) -> Result<LabeledPoset<QElement>> {
    if u.n() != t.n() {
        return Err(Error::SizeMismatch(u.n(), t.n()));
    }
    if k == 0 || k >= u.n() {
        return Err(Error::OutOfRange { index: k, max: u.n() - 1 });
    }
    Ok(LabeledPoset::build(u, t, |x| q_up_covers(x, k), |x| t.q.div(&x.q).is_some()))
}

/// Rank of `[u,t]^q_k` equals `#supp(wu^{-1}) - s(wu^{-1})`.
pub fn is_minimal_interval(u: &Permutation, t: &QElement, k: usize) -> Result<bool> {
    let bottom = QElement::classical(u.clone());
    let p = q_interval(&bottom, t, k)?;
    if p.is_empty() {
        return Err(Error::Incomparable);
    }
    let z = &t.w * &u.inverse();
    Ok(t.rank() - bottom.rank() == z.stats().min_rank())
}

/// Saturated chains of `[u,t]^q_k`.
pub fn q_chains(u: &QElement, t: &QElement, k: usize) -> Result<Vec<Chain<QElement>>> {
    Ok(q_interval(u, t, k)?.chains())
}

/// Elements reachable from `x` by exactly `r` quantum covers.
pub fn q_reach(x: &QElement, k: usize, r: usize) -> Vec<QElement> {
    let mut layer = vec![x.clone()];
    for _ in 0..r {
        let mut next: Vec<QElement> = layer.iter().flat_map(|y| q_up_covers(y, k).into_iter().map(|c| c.1)).collect();
        next.sort();
        next.dedup();
        layer = next;
    }
    layer
}
