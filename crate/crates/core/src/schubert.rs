//! Products in `H^*Fl_n`: Monk, hook Schur functions by peakless chains and by
//! minimal permutations, power sums, and the divided-difference polynomial
//! oracle.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde_json::json;

use crate::error::{Error, Result};
use crate::kbruhat::{self, is_peakless};
use crate::perm::{Partition, Permutation};
use crate::qbruhat::{QElement, QMonomial};

/// Exponent vector with trailing zeros trimmed, so lexicographic order on
/// the stored vectors is lexicographic order on monomials.
pub type Monomial = Vec<u16>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u16], b: &[u16]) -> Monomial {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut m = long.to_vec();
    for (x, y) in m.iter_mut().zip(short) {
        *x += y;
    }
    m
}

/// Sparse polynomial in `x_1, x_2, ..` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(vec![], 1)
    }

    /// `c x^m`.
    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    /// `x_i`, 1-indexed.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i];
        m[i - 1] = 1;
        Polynomial::monomial(m, 1)
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(trim(m)) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u16]) -> i64 {
        self.terms.get(&trim(m.to_vec())).copied().unwrap_or(0)
    }

    /// Lexicographically greatest monomial (`x_1 > x_2 > ..`).
    pub fn leading(&self) -> Option<(&Monomial, i64)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (m, c) in other.terms() {
            p.add_term(m.clone(), c);
        }
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, &v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, i64> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *acc.entry(mono_mul(a, b)).or_insert(0) += ca * cb;
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (trim(m), c)).collect() }
    }

    /// Total degrees present.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Number of variables actually used.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Polynomial {
        let mut acc: HashMap<Monomial, i64> = HashMap::new();
        for (m, &c) in &self.terms {
            let mut m = m.clone();
            if m.len() < i + 1 {
                m.resize(i + 1, 0);
            }
            let (a, b) = (m[i - 1], m[i]);
            if a == b {
                continue;
            }
            let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
            for t in 0..hi - lo {
                let mut r = m.clone();
                if sign == 1 {
                    r[i - 1] = hi - 1 - t;
                    r[i] = lo + t;
                } else {
                    r[i - 1] = lo + t;
                    r[i] = hi - 1 - t;
                }
                *acc.entry(trim(r)).or_insert(0) += sign * c;
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| *c != 0).collect() }
    }

    /// Value at an integer point (missing coordinates read as 0).
    pub fn eval(&self, x: &[i64]) -> i64 {
        self.terms
            .iter()
            .map(|(m, &c)| {
                c * m.iter().enumerate().map(|(i, &e)| x.get(i).copied().unwrap_or(0).pow(e as u32)).product::<i64>()
            })
            .sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, &c) in self.terms.iter().rev() {
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match (vars.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => vars.join("*"),
                (false, _) => format!("{mag}*{}", vars.join("*")),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn schubert_cache() -> &'static RwLock<HashMap<Vec<u8>, Arc<Polynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<Vec<u8>, Arc<Polynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Schubert polynomial `𝔖_w`; independent of the ambient `S_N` containing `w`.
pub fn schubert_poly(w: &Permutation) -> Arc<Polynomial> {
    let m = w.minimal_n();
    let w = w.restrict(m).unwrap();
    if let Some(p) = schubert_cache().read().unwrap().get(w.raw()) {
        return p.clone();
    }
    let p = if w.is_identity() {
        Polynomial::one()
    } else if let Some(i) = (1..m).find(|&i| w.at(i) < w.at(i + 1)) {
        schubert_poly(&w.swap_positions(i, i + 1)).divided_difference(i)
    } else {
        Polynomial::monomial((1..m).rev().map(|e| e as u16).collect(), 1)
    };
    let p = Arc::new(p);
    schubert_cache().write().unwrap().insert(w.raw().to_vec(), p.clone());
    p
}

/// `h_m(x_1..x_k)`.
pub fn complete_homogeneous(m: usize, k: usize) -> Polynomial {
    fn go(m: usize, i: usize, k: usize, cur: &mut Vec<u16>, out: &mut Polynomial) {
        if i == k - 1 {
            cur[i] = m as u16;
            out.add_term(cur.clone(), 1);
            cur[i] = 0;
            return;
        }
        for e in 0..=m {
            cur[i] = e as u16;
            go(m - e, i + 1, k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Polynomial::zero();
    if k == 0 {
        return if m == 0 { Polynomial::one() } else { out };
    }
    go(m, 0, k, &mut vec![0; k], &mut out);
    out
}

/// `s_λ(x_1..x_k)` by the Jacobi-Trudi determinant `det(h_{λ_i - i + j})`.
pub fn schur_poly(lambda: &Partition, k: usize) -> Polynomial {
    let l = lambda.len();
    if l == 0 {
        return Polynomial::one();
    }
    if l > k {
        return Polynomial::zero();
    }
    let parts = lambda.parts();
    let h = |i: usize, j: usize| {
        let d = parts[i] as i64 - i as i64 + j as i64;
        if d < 0 {
            Polynomial::zero()
        } else {
            complete_homogeneous(d as usize, k)
        }
    };
    let mut det = Polynomial::zero();
    for sigma in Permutation::all(l) {
        let sign = if sigma.length() % 2 == 0 { 1 } else { -1 };
        let mut term = Polynomial::monomial(vec![], sign);
        for i in 0..l {
            term = term.mul(&h(i, sigma.at(i + 1) - 1));
            if term.is_zero() {
                break;
            }
        }
        det = det.add(&term);
    }
    det
}

/// A finite `ℤ`-combination of `q^α 𝔖_w`, kept in canonical order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Expansion {
    terms: BTreeMap<QElement, i64>,
}

impl Expansion {
    pub fn new() -> Self {
        Expansion::default()
    }

    pub fn single(x: QElement) -> Self {
        let mut e = Expansion::new();
        e.add_term(x, 1);
        e
    }

    pub fn add_term(&mut self, x: QElement, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(x.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&x);
        }
    }

    pub fn add(&self, other: &Expansion) -> Expansion {
        let mut e = self.clone();
        for (x, c) in other.iter() {
            e.add_term(x.clone(), c);
        }
        e
    }

    pub fn sub(&self, other: &Expansion) -> Expansion {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Expansion {
        let mut e = Expansion::new();
        for (x, v) in self.iter() {
            e.add_term(x.clone(), v * c);
        }
        e
    }

    pub fn times_q(&self, m: &QMonomial) -> Expansion {
        Expansion { terms: self.terms.iter().map(|(x, &c)| (x.times(m), c)).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QElement, i64)> {
        self.terms.iter().map(|(x, &c)| (x, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: &QElement) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    /// Drop terms whose permutation is not in `S_n`; the rest are restricted to `S_n`.
    pub fn restrict(&self, n: usize) -> Expansion {
        let mut e = Expansion::new();
        for (x, c) in self.iter() {
            if x.q.is_one() {
                if let Some(w) = x.w.restrict(n) {
                    e.add_term(QElement::classical(w), c);
                }
            } else if x.n() == n {
                e.add_term(x.clone(), c);
            }
        }
        e
    }

    /// All terms share one rank.
    pub fn is_homogeneous(&self) -> bool {
        let mut ranks = self.terms.keys().map(|x| x.rank());
        match ranks.next() {
            Some(r) => ranks.all(|s| s == r),
            None => true,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (x, c) in self.iter() {
            s += &format!("{}{} {}\n", if c < 0 { "-" } else { "+" }, c.abs(), x);
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> =
            self.iter().map(|(x, c)| json!({"coeff": c, "q": x.q.alpha(), "w": x.w.to_string()})).collect();
        json!({ "terms": terms })
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(x, c)| format!("{c}*[{x}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Expand `p` in Schubert polynomials of `S_N` by stripping lex-leading
/// monomials `x^{code(w)}`.
pub fn expand_in_schubert(p: &Polynomial, big_n: usize) -> Result<Expansion> {
    let mut rest = p.clone();
    let mut out = Expansion::new();
    while let Some((m, c)) = rest.leading() {
        let code: Vec<usize> = m.iter().map(|&e| e as usize).collect();
        let w = Permutation::from_code(&code, big_n).map_err(|_| Error::NotInSpan(big_n))?;
        rest = rest.sub(&schubert_poly(&w).scale(c));
        out.add_term(QElement::classical(w), c);
    }
    Ok(out)
}

/// Where a classical product is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// `H^*Fl_n`: terms outside `S_n` vanish.
    Ring(usize),
    /// `ℤ[x]`, with all permutations kept inside `S_N`.
    Polynomial(usize),
}

impl Ambient {
    pub fn size(&self) -> usize {
        match *self {
            Ambient::Ring(n) | Ambient::Polynomial(n) => n,
        }
    }
}

fn place(u: &Permutation, ambient: Ambient) -> Result<Permutation> {
    let n = ambient.size();
    u.restrict(n).ok_or_else(|| Error::Precondition(format!("{u} is not in S_{n}")))
}

fn check_hook(a: usize, b: usize, k: usize, ambient: Ambient) -> Result<()> {
    let bad = || Error::OutsideRectangle(Partition::hook(a.max(1), b.max(1)).to_string(), k, ambient.size().saturating_sub(k));
    if a == 0 || b == 0 || a > k || k >= ambient.size() {
        return Err(bad());
    }
    if let Ambient::Ring(n) = ambient {
        if b > n - k {
            return Err(bad());
        }
    }
    Ok(())
}

/// Monk's formula applied termwise.
pub fn monk_multiply(exp: &Expansion, k: usize, ambient: Ambient) -> Result<Expansion> {
    let n = ambient.size();
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { index: k, max: n.saturating_sub(1) });
    }
    let mut out = Expansion::new();
    for (x, c) in exp.iter() {
        if !x.q.is_one() {
            return Err(Error::Precondition("classical Monk on a quantum term".into()));
        }
        let u = place(&x.w, ambient)?;
        for (_, w) in kbruhat::up_covers_k(&u, k) {
            out.add_term(QElement::classical(w), c);
        }
    }
    Ok(out)
}

/// `𝔖_u · s_{(b,1^{a-1})}(x_1..x_k)` as a sum over peakless chains of height `a`.
pub fn hook_multiply_chains(u: &Permutation, a: usize, b: usize, k: usize, ambient: Ambient) -> Result<Expansion> {
    check_hook(a, b, k, ambient)?;
    let u = place(u, ambient)?;
    let r = a + b - 1;
    let mut out = Expansion::new();
    fn go(x: &Permutation, t: usize, last: usize, a: usize, r: usize, k: usize, out: &mut Expansion) {
        if t == r {
            out.add_term(QElement::classical(x.clone()), 1);
            return;
        }
        for (l, y) in kbruhat::up_covers_k(x, k) {
            let ok = t == 0 || if t < a { l < last } else { l > last };
            if ok {
                go(&y, t + 1, l, a, r, k, out);
            }
        }
    }
    go(&u, 0, 0, a, r, k, &mut out);
    Ok(out)
}

/// `C(n, m)`, zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> i64 {
    if m < 0 || n < 0 || m > n {
        return 0;
    }
    let m = m.min(n - m);
    (0..m).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

fn k_reach(u: &Permutation, k: usize, r: usize) -> Vec<Permutation> {
    let mut layer = vec![u.clone()];
    for _ in 0..r {
        let mut next: Vec<Permutation> = layer.iter().flat_map(|x| kbruhat::up_covers_k(x, k).into_iter().map(|c| c.1)).collect();
        next.sort();
        next.dedup();
        layer = next;
    }
    layer
}

/// `𝔖_u · s_{(b,1^{a-1})}(x_1..x_k)` as a sum over minimal `ζ` weighted by `C(s-1, het-a)`.
pub fn hook_multiply_minimal(u: &Permutation, a: usize, b: usize, k: usize, ambient: Ambient) -> Result<Expansion> {
    check_hook(a, b, k, ambient)?;
    let u = place(u, ambient)?;
    let r = a + b - 1;
    let uinv = u.inverse();
    let mut out = Expansion::new();
    for w in k_reach(&u, k, r) {
        let st = (&w * &uinv).stats();
        if st.min_rank() == r {
            let c = binomial(st.num_cycles() as i64 - 1, st.height as i64 - a as i64);
            out.add_term(QElement::classical(w), c);
        }
    }
    Ok(out)
}

/// `𝔖_u · p_r(x_1..x_k)` as a signed sum over minimal cycles.
pub fn powersum_multiply(u: &Permutation, r: usize, k: usize, ambient: Ambient) -> Result<Expansion> {
    if r == 0 {
        return Err(Error::Precondition("power sum degree must be positive".into()));
    }
    let n = ambient.size();
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { index: k, max: n.saturating_sub(1) });
    }
    let u = place(u, ambient)?;
    let uinv = u.inverse();
    let mut out = Expansion::new();
    for w in k_reach(&u, k, r) {
        let st = (&w * &uinv).stats();
        if st.num_cycles() == 1 && st.min_rank() == r {
            out.add_term(QElement::classical(w), if st.height % 2 == 1 { 1 } else { -1 });
        }
    }
    Ok(out)
}

/// `p_r(x_1..x_k) = Σ_a (-1)^{a+1} s_{(r+1-a,1^{a-1})}` applied through the hook rule.
pub fn powersum_via_hooks(u: &Permutation, r: usize, k: usize, ambient: Ambient) -> Result<Expansion> {
    let mut out = Expansion::new();
    for a in 1..=r.min(k) {
        let b = r + 1 - a;
        if let Ambient::Ring(n) = ambient {
            if b > n - k {
                continue;
            }
        }
        let h = hook_multiply_minimal(u, a, b, k, ambient)?;
        out = if a % 2 == 1 { out.add(&h) } else { out.sub(&h) };
    }
    Ok(out)
}

fn product_cache() -> &'static Mutex<HashMap<(Vec<u8>, Partition, usize), Arc<(usize, Expansion)>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Vec<u8>, Partition, usize), Arc<(usize, Expansion)>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `𝔖_u · s_λ(x_1..x_k)` expanded in `ℤ[x]`; returns the ambient `N` used and the expansion in `S_N`.
pub fn polynomial_product(u: &Permutation, lambda: &Partition, k: usize) -> Arc<(usize, Expansion)> {
    let u = u.restrict(u.minimal_n().max(k + 1)).unwrap();
    let key = (u.raw().to_vec(), lambda.clone(), k);
    if let Some(hit) = product_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let p = schubert_poly(&u).mul(&schur_poly(lambda, k));
    let mut big_n = u.n() + lambda.size() + 1;
    let exp = loop {
        match expand_in_schubert(&p, big_n) {
            Ok(e) => break e,
            Err(_) => big_n *= 2,
        }
    };
    let exp = Expansion { terms: exp.terms.into_iter().map(|(x, c)| (QElement::classical(x.w.embed(big_n)), c)).collect() };
    let hit = Arc::new((big_n, exp));
    product_cache().lock().unwrap().insert(key, hit.clone());
    hit
}

/// The polynomial oracle: `𝔖_u · s_λ(x_1..x_k)` in the requested ambient.
pub fn oracle_product(u: &Permutation, lambda: &Partition, k: usize, ambient: Ambient) -> Result<Expansion> {
    let n = ambient.size();
    let u = place(u, ambient)?;
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { index: k, max: n.saturating_sub(1) });
    }
    if let Ambient::Ring(_) = ambient {
        if !lambda.fits(k, n) {
            return Err(Error::OutsideRectangle(lambda.to_string(), k, n - k));
        }
    }
    let hit = polynomial_product(&u, lambda, k);
    let out = hit.1.restrict(n);
    if matches!(ambient, Ambient::Polynomial(_)) && hit.1.len() != out.len() {
        return Err(Error::NotInSpan(n));
    }
    Ok(out)
}

/// `c^z_{y,v(λ,k)}` read off the polynomial oracle.
pub fn classical_coefficient(y: &Permutation, z: &Permutation, lambda: &Partition, k: usize) -> i64 {
    let hit = polynomial_product(y, lambda, k);
    let (big_n, exp) = (&hit.0, &hit.1);
    match z.restrict(z.minimal_n()) {
        Some(zz) if zz.n() <= *big_n => exp.coeff(&QElement::classical(zz.embed(*big_n))),
        _ => 0,
    }
}

/// Chains enumerated through [`kbruhat::interval_k`] rather than by direct search; used for cross-checks.
pub fn hook_multiply_by_intervals(u: &Permutation, a: usize, b: usize, k: usize, ambient: Ambient) -> Result<Expansion> {
    check_hook(a, b, k, ambient)?;
    let u = place(u, ambient)?;
    let mut out = Expansion::new();
    for w in k_reach(&u, k, a + b - 1) {
        let n = kbruhat::chains_k(&u, &w, k)?.iter().filter(|c| is_peakless(&c.labels, a)).count();
        out.add_term(QElement::classical(w), n as i64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cl(s: &str) -> QElement {
        QElement::classical(p(s))
    }

    #[test]
    fn schubert_polynomials() {
        assert_eq!(*schubert_poly(&Permutation::identity(4)), Polynomial::one());
        assert_eq!(*schubert_poly(&p("321")), Polynomial::monomial(vec![2, 1], 1));
        assert_eq!(*schubert_poly(&p("1324")), Polynomial::var(1).add(&Polynomial::var(2)));
        let lam = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(*schubert_poly(&p("1362457")), schur_poly(&lam, 3));
        let e = expand_in_schubert(&Polynomial::monomial(vec![2], 1), 3).unwrap();
        assert_eq!(e, Expansion::single(cl("312")));
        assert!(expand_in_schubert(&Polynomial::monomial(vec![3], 1), 3).is_err());
    }

    #[test]
    fn divided_differences() {
        let f = Polynomial::monomial(vec![3, 1, 2], 1).add(&Polynomial::monomial(vec![0, 2, 1], -2));
        for i in 1..4 {
            assert!(f.divided_difference(i).divided_difference(i).is_zero());
        }
        assert_eq!(f.divided_difference(1).divided_difference(3), f.divided_difference(3).divided_difference(1));
        let a = f.divided_difference(1).divided_difference(2).divided_difference(1);
        let b = f.divided_difference(2).divided_difference(1).divided_difference(2);
        assert_eq!(a, b);
        for w in Permutation::all(4) {
            for i in 1..4 {
                let ws = w.swap_positions(i, i + 1);
                if ws.length() < w.length() {
                    assert_eq!(*schubert_poly(&ws), schubert_poly(&w).divided_difference(i));
                }
            }
        }
    }

    #[test]
    fn monk() {
        let e = monk_multiply(&Expansion::single(cl("1432")), 2, Ambient::Ring(4)).unwrap();
        assert_eq!(e, Expansion::single(cl("3412")).add(&Expansion::single(cl("2431"))));
        let e = monk_multiply(&Expansion::single(cl("1234")), 2, Ambient::Ring(4)).unwrap();
        assert_eq!(e, Expansion::single(cl("1324")));
        let e = monk_multiply(&Expansion::single(cl("213")), 1, Ambient::Polynomial(3)).unwrap();
        assert_eq!(e, Expansion::single(cl("312")));
    }

    #[test]
    fn hook_examples() {
        let u = p("68231574");
        let z = cl("78256134");
        for amb in [Ambient::Ring(8), Ambient::Polynomial(8 + 4)] {
            let zz = QElement::classical(z.w.embed(amb.size()));
            assert_eq!(hook_multiply_chains(&u, 3, 2, 5, amb).unwrap().coeff(&zz), 1);
            assert_eq!(hook_multiply_minimal(&u, 3, 2, 5, amb).unwrap().coeff(&zz), 1);
        }
        assert_eq!(classical_coefficient(&u, &z.w, &Partition::new(vec![2, 2]).unwrap(), 5), 1);
        assert_eq!(classical_coefficient(&u, &z.w, &Partition::hook(3, 2), 5), 1);
    }

    #[test]
    fn powersums() {
        let u = p("68235741");
        let e = powersum_multiply(&u, 4, 5, Ambient::Ring(8)).unwrap();
        let z1 = Permutation::parse_in("(2,3,5,7,4)", 8).unwrap();
        let z2 = Permutation::parse_in("(2,3,5,6,7)", 8).unwrap();
        assert_eq!(e.coeff(&QElement::classical(&z1 * &u)), 1);
        assert_eq!(e.coeff(&QElement::classical(&z2 * &u)), -1);
        assert_eq!(e, powersum_via_hooks(&u, 4, 5, Ambient::Ring(8)).unwrap());
        let m = powersum_multiply(&u, 1, 5, Ambient::Ring(8)).unwrap();
        assert_eq!(m, monk_multiply(&Expansion::single(QElement::classical(u)), 5, Ambient::Ring(8)).unwrap());
    }

    #[test]
    fn binomial_telescoping() {
        for s in 1..6i64 {
            for het in s..8i64 {
                let t: i64 = (1..=het).map(|a| (-1i64).pow((a - het).unsigned_abs() as u32) * binomial(s - 1, het - a)).sum();
                assert_eq!(t == 0, s != 1);
            }
        }
    }

    #[test]
    fn schur_functions() {
        let h = Partition::hook(2, 2);
        let s = schur_poly(&h, 3);
        assert_eq!(s.eval(&[1, 1, 1]), 8);
        assert!(s.is_homogeneous());
        assert_eq!(schur_poly(&Partition::new(vec![1, 1, 1]).unwrap(), 2), Polynomial::zero());
    }
}
