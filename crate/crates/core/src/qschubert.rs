//! Products in `qH^*Fl_n`: quantum Monk, the quantum hook rule, the quantum
//! Murnaghan-Nakayama rule, the Leung-Li reduction, cyclic-shift monomials and
//! the quantization oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::perm::{grassmannian, Partition, Permutation};
use crate::qbruhat::{q_reach, q_up_covers, QElement, QMonomial};
use crate::schubert::{binomial, classical_coefficient, schubert_poly, Expansion, Monomial, Polynomial};

fn ambient_of(exp: &Expansion) -> Option<usize> {
    exp.iter().next().map(|(x, _)| x.n())
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { index: k, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// Quantum Monk: `exp * 𝔖_{s_k}`.
pub fn q_monk_multiply(exp: &Expansion, k: usize) -> Result<Expansion> {
    let mut out = Expansion::new();
    let Some(n) = ambient_of(exp) else { return Ok(out) };
    check_k(n, k)?;
    for (x, c) in exp.iter() {
        if x.n() != n {
            return Err(Error::SizeMismatch(n, x.n()));
        }
        for (_, y) in q_up_covers(x, k) {
            out.add_term(y, c);
        }
    }
    Ok(out)
}

fn check_hook(a: usize, b: usize, k: usize, n: usize) -> Result<()> {
    if a == 0 || b == 0 || k == 0 || k >= n || a > k || b > n - k {
        return Err(Error::OutsideRectangle(Partition::hook(a.max(1), b.max(1)).to_string(), k, n.saturating_sub(k)));
    }
    Ok(())
}

/// `𝔖_u * s^q_{(b,1^{a-1})}(x_1..x_k)` as a sum over minimal intervals.
pub fn q_hook_multiply(u: &Permutation, a: usize, b: usize, k: usize) -> Result<Expansion> {
    let n = u.n();
    check_hook(a, b, k, n)?;
    let uinv = u.inverse();
    let r = a + b - 1;
    let mut out = Expansion::new();
    for t in q_reach(&QElement::classical(u.clone()), k, r) {
        let st = (&t.w * &uinv).stats();
        if st.min_rank() == r {
            out.add_term(t, binomial(st.num_cycles() as i64 - 1, st.height as i64 - a as i64));
        }
    }
    Ok(out)
}

/// `𝔖_u * p^q_r(x_1..x_k)`: signed sum over minimal intervals whose `wu^{-1}` is a cycle.
pub fn q_powersum_multiply(u: &Permutation, r: usize, k: usize) -> Result<Expansion> {
    let n = u.n();
    check_k(n, k)?;
    if r == 0 {
        return Err(Error::Precondition("power sum degree must be positive".into()));
    }
    let uinv = u.inverse();
    let mut out = Expansion::new();
    for t in q_reach(&QElement::classical(u.clone()), k, r) {
        let st = (&t.w * &uinv).stats();
        if st.num_cycles() == 1 && st.min_rank() == r {
            out.add_term(t, if st.height % 2 == 1 { 1 } else { -1 });
        }
    }
    Ok(out)
}

/// `Σ_a (-1)^{a+1} 𝔖_u * s^q_{(r+1-a,1^{a-1})}` over hooks inside `R_{k,n-k}`.
pub fn q_powersum_via_hooks(u: &Permutation, r: usize, k: usize) -> Result<Expansion> {
    let n = u.n();
    check_k(n, k)?;
    let mut out = Expansion::new();
    for a in 1..=r.min(k) {
        let b = r + 1 - a;
        if b > n - k {
            continue;
        }
        let h = q_hook_multiply(u, a, b, k)?;
        out = if a % 2 == 1 { out.add(&h) } else { out.sub(&h) };
    }
    Ok(out)
}

/// `ϖ_i(α) = -α_{i-1} + 2α_i - α_{i+1}` with `α_0 = α_n = 0`.
pub fn varpi(alpha: &QMonomial, i: usize) -> Result<i64> {
    let n = alpha.n();
    if i == 0 || i >= n {
        return Err(Error::OutOfRange { index: i, max: n - 1 });
    }
    Ok(2 * alpha.get(i) as i64 - alpha.get(i - 1) as i64 - alpha.get(i + 1) as i64)
}

/// A request for the numerical part `N^{w,α}_{u,v(λ,k)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QLRQuery {
    pub u: Permutation,
    pub w: Permutation,
    pub alpha: QMonomial,
    pub lambda: Partition,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Step { i: usize, query: QLRQuery },
    Zero,
}

/// Which valid index a reduction step takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pick {
    Smallest,
    Largest,
}

/// Indices `i` admissible for one Leung-Li step.
pub fn ll_valid_indices(q: &QLRQuery) -> Vec<usize> {
    let n = q.u.n();
    (1..n)
        .filter(|&i| {
            let p = varpi(&q.alpha, i).unwrap();
            q.u.sg(i) == 1 && q.w.sg(i) == 0 && ((p == 1 && i != q.k) || (p == 2 && i == q.k))
        })
        .collect()
}

/// One step `(u,w,α) -> (us_i, ws_i, α - e_i)`, smallest valid `i`.
pub fn ll_reduce_step(q: &QLRQuery) -> Result<Reduction> {
    ll_reduce_step_with(q, Pick::Smallest)
}

pub fn ll_reduce_step_with(q: &QLRQuery, pick: Pick) -> Result<Reduction> {
    if q.alpha.is_one() {
        return Err(Error::Precondition("reduction needs a nonzero q-exponent".into()));
    }
    let valid = ll_valid_indices(q);
    let i = match pick {
        Pick::Smallest => valid.first(),
        Pick::Largest => valid.last(),
    };
    let Some(&i) = i else { return Ok(Reduction::Zero) };
    let n = q.u.n();
    let alpha = q.alpha.div(&QMonomial::q(n, i)).unwrap();
    Ok(Reduction::Step {
        i,
        query: QLRQuery {
            u: q.u.swap_positions(i, i + 1),
            w: q.w.swap_positions(i, i + 1),
            alpha,
            lambda: q.lambda.clone(),
            k: q.k,
        },
    })
}

/// The full reduction path; ends in a query with `α = 0` or in `None` for a zero verdict.
pub fn ll_path(q: &QLRQuery, pick: Pick) -> (Vec<(usize, QLRQuery)>, Option<QLRQuery>) {
    let mut cur = q.clone();
    let mut path = Vec::new();
    while !cur.alpha.is_one() {
        match ll_reduce_step_with(&cur, pick).unwrap() {
            Reduction::Zero => return (path, None),
            Reduction::Step { i, query } => {
                path.push((i, query.clone()));
                cur = query;
            }
        }
    }
    (path, Some(cur))
}

/// `N^{w,α}_{u,v(λ,k)}` by reducing to a classical coefficient.
pub fn quantum_lr(q: &QLRQuery) -> Result<i64> {
    quantum_lr_with(q, Pick::Smallest)
}

pub fn quantum_lr_with(q: &QLRQuery, pick: Pick) -> Result<i64> {
    let n = q.u.n();
    check_k(n, q.k)?;
    if q.w.n() != n || q.alpha.n() != n {
        return Err(Error::SizeMismatch(n, q.w.n()));
    }
    if !q.lambda.fits(q.k, n) {
        return Err(Error::OutsideRectangle(q.lambda.to_string(), q.k, n - q.k));
    }
    if 2 * q.alpha.degree() as usize + q.w.length() != q.u.length() + q.lambda.size() {
        return Ok(0);
    }
    if q.lambda.is_empty() {
        return Ok((q.alpha.is_one() && q.w == q.u) as i64);
    }
    match ll_path(q, pick).1 {
        None => Ok(0),
        Some(c) => Ok(classical_coefficient(&c.u, &c.w, &c.lambda, c.k)),
    }
}

/// `𝔖_u * s^q_λ(x_1..x_k)` with every coefficient computed by [`quantum_lr`]
/// over the elements `q_reach` finds at rank `|λ|`.
pub fn ll_product(u: &Permutation, lambda: &Partition, k: usize) -> Result<Expansion> {
    let n = u.n();
    check_k(n, k)?;
    let mut out = Expansion::new();
    for t in q_reach(&QElement::classical(u.clone()), k, lambda.size()) {
        let q = QLRQuery { u: u.clone(), w: t.w.clone(), alpha: t.q.clone(), lambda: lambda.clone(), k };
        out.add_term(t, quantum_lr(&q)?);
    }
    Ok(out)
}

/// A Laurent monomial in `q_1..q_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedQMonomial {
    beta: Vec<i32>,
}

impl SignedQMonomial {
    pub fn one(n: usize) -> Self {
        SignedQMonomial { beta: vec![0; n - 1] }
    }

    /// `q_{i,j}`, with `q_{i,j} = q_{j,i}^{-1}` for `i > j` and `q_{i,i} = 1`.
    pub fn q_ij(n: usize, i: usize, j: usize) -> Self {
        let mut m = SignedQMonomial::one(n);
        if i < j {
            for l in i..j {
                m.beta[l - 1] += 1;
            }
        } else {
            for l in j..i {
                m.beta[l - 1] -= 1;
            }
        }
        m
    }

    pub fn from_monomial(m: &QMonomial) -> Self {
        SignedQMonomial { beta: m.alpha().iter().map(|&a| a as i32).collect() }
    }

    pub fn exponents(&self) -> &[i32] {
        &self.beta
    }

    pub fn is_one(&self) -> bool {
        self.beta.iter().all(|&b| b == 0)
    }

    pub fn mul(&self, other: &SignedQMonomial) -> SignedQMonomial {
        SignedQMonomial { beta: self.beta.iter().zip(&other.beta).map(|(a, b)| a + b).collect() }
    }

    pub fn inverse(&self) -> SignedQMonomial {
        SignedQMonomial { beta: self.beta.iter().map(|b| -b).collect() }
    }

    /// The ordinary monomial, when no exponent is negative.
    pub fn to_monomial(&self) -> Option<QMonomial> {
        self.beta
            .iter()
            .map(|&b| u32::try_from(b).ok())
            .collect::<Option<Vec<u32>>>()
            .map(QMonomial::new)
    }
}

impl fmt::Display for SignedQMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.beta.iter().map(|v| v.to_string()).collect();
        write!(f, "q^({})", b.join(","))
    }
}

impl fmt::Debug for SignedQMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `q^{𝔬(u,w)} = q_{w^{-1}(n), u^{-1}(n)}`.
pub fn o_shift_monomial(u: &Permutation, w: &Permutation) -> Result<SignedQMonomial> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch(u.n(), w.n()));
    }
    let n = u.n();
    Ok(SignedQMonomial::q_ij(n, w.position(n), u.position(n)))
}

/// Polynomial in `x_1..` and `q_1..` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct QPolynomial {
    terms: BTreeMap<(Monomial, Monomial), i64>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn madd(a: &[u16], b: &[u16]) -> Monomial {
    let mut m = vec![0; a.len().max(b.len())];
    for (i, &e) in a.iter().enumerate() {
        m[i] += e;
    }
    for (i, &e) in b.iter().enumerate() {
        m[i] += e;
    }
    m
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        let mut p = QPolynomial::zero();
        p.add_term(vec![], vec![], 1);
        p
    }

    pub fn x(i: usize) -> Self {
        let mut m = vec![0; i];
        m[i - 1] = 1;
        let mut p = QPolynomial::zero();
        p.add_term(m, vec![], 1);
        p
    }

    pub fn q(i: usize) -> Self {
        let mut m = vec![0; i];
        m[i - 1] = 1;
        let mut p = QPolynomial::zero();
        p.add_term(vec![], m, 1);
        p
    }

    pub fn from_classical(p: &Polynomial) -> Self {
        let mut out = QPolynomial::zero();
        for (m, c) in p.terms() {
            out.add_term(m.clone(), vec![], c);
        }
        out
    }

    pub fn add_term(&mut self, x: Monomial, q: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let key = (trim(x), trim(q));
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, i64)> {
        self.terms.iter().map(|((x, q), &c)| (x, q, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &QPolynomial) -> QPolynomial {
        let mut p = self.clone();
        for (x, q, c) in other.terms() {
            p.add_term(x.clone(), q.clone(), c);
        }
        p
    }

    pub fn scale(&self, c: i64) -> QPolynomial {
        let mut p = QPolynomial::zero();
        for (x, q, v) in self.terms() {
            p.add_term(x.clone(), q.clone(), v * c);
        }
        p
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        let mut p = QPolynomial::zero();
        for (x1, q1, c1) in self.terms() {
            for (x2, q2, c2) in other.terms() {
                p.add_term(madd(x1, x2), madd(q1, q2), c1 * c2);
            }
        }
        p
    }

    /// Set every `q_i = 0`.
    pub fn classical_part(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for (x, q, c) in self.terms() {
            if q.is_empty() {
                p.add_term(x.clone(), c);
            }
        }
        p
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(x, q, c)| {
                let mut vars: Vec<String> = Vec::new();
                for (i, &e) in q.iter().enumerate().filter(|(_, &e)| e > 0) {
                    vars.push(if e == 1 { format!("q{}", i + 1) } else { format!("q{}^{}", i + 1, e) });
                }
                for (i, &e) in x.iter().enumerate().filter(|(_, &e)| e > 0) {
                    vars.push(if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) });
                }
                if vars.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `e_i(x_1..x_j)`.
pub fn elementary(i: usize, j: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    if i > j {
        return p;
    }
    fn go(start: usize, left: usize, j: usize, cur: &mut Vec<u16>, out: &mut Polynomial) {
        if left == 0 {
            out.add_term(cur.clone(), 1);
            return;
        }
        for v in start..j {
            if j - v < left {
                break;
            }
            cur[v] = 1;
            go(v + 1, left - 1, j, cur, out);
            cur[v] = 0;
        }
    }
    go(0, i, j, &mut vec![0; j], &mut p);
    p
}

/// Quantum elementary polynomial `E^j_i` from
/// `E^j_i = E^{j-1}_i + x_j E^{j-1}_{i-1} + q_{j-1} E^{j-2}_{i-2}`.
pub fn quantum_elementary(i: usize, j: usize) -> QPolynomial {
    fn go(i: i64, j: i64, memo: &mut HashMap<(i64, i64), QPolynomial>) -> QPolynomial {
        if i == 0 && j >= 0 {
            return QPolynomial::one();
        }
        if i < 0 || j <= 0 || i > j {
            return QPolynomial::zero();
        }
        if let Some(p) = memo.get(&(i, j)) {
            return p.clone();
        }
        let mut p = go(i, j - 1, memo).add(&QPolynomial::x(j as usize).mul(&go(i - 1, j - 1, memo)));
        if j >= 2 {
            p = p.add(&QPolynomial::q(j as usize - 1).mul(&go(i - 2, j - 2, memo)));
        }
        memo.insert((i, j), p.clone());
        p
    }
    go(i as i64, j as i64, &mut HashMap::new())
}

/// Exponent tuples `(i_1..i_{n-1})`, `0 <= i_j <= j`, of total degree `d`.
fn standard_tuples(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(j: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j == n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for i in 0..=j.min(left) {
            cur.push(i);
            go(j + 1, n, left - i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, d, &mut Vec::new(), &mut out);
    out
}

fn tuple_poly(t: &[usize]) -> Polynomial {
    t.iter().enumerate().fold(Polynomial::one(), |acc, (j, &i)| acc.mul(&elementary(i, j + 1)))
}

fn tuple_qpoly(t: &[usize]) -> QPolynomial {
    t.iter().enumerate().fold(QPolynomial::one(), |acc, (j, &i)| acc.mul(&quantum_elementary(i, j + 1)))
}

/// Coordinates of a homogeneous `p` in the standard elementary monomials of degree `d`.
fn solve_in_basis(p: &Polynomial, n: usize, d: usize) -> Result<Vec<(Vec<usize>, i64)>> {
    let tuples = standard_tuples(n, d);
    let cols: Vec<Polynomial> = tuples.iter().map(|t| tuple_poly(t)).collect();
    let mut monos: Vec<Monomial> = cols.iter().flat_map(|c| c.terms().map(|(m, _)| m.clone())).collect();
    monos.extend(p.terms().map(|(m, _)| m.clone()));
    monos.sort();
    monos.dedup();
    let (rows, nc) = (monos.len(), tuples.len());
    let mut a: Vec<Vec<BigRational>> = monos
        .iter()
        .map(|m| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| BigRational::from_integer(BigInt::from(c.coeff(m)))).collect();
            row.push(BigRational::from_integer(BigInt::from(p.coeff(m))));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, pr);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for col in 0..=nc {
                    let t = &a[r][col] * &f;
                    a[i][col] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !a[i][nc].is_zero()) {
        return Err(Error::Precondition(format!("polynomial outside the standard elementary span for n={n}")));
    }
    let mut out = Vec::new();
    for (row, &c) in pivots.iter().enumerate() {
        let v = &a[row][nc];
        if v.is_zero() {
            continue;
        }
        if !v.is_integer() {
            return Err(Error::Precondition("non-integral elementary expansion".into()));
        }
        let v = v.to_integer();
        let v = if v.is_negative() { -(-v).to_i64().unwrap() } else { v.to_i64().unwrap() };
        out.push((tuples[c].clone(), v));
    }
    Ok(out)
}

fn split_degrees(p: &Polynomial) -> BTreeMap<usize, Polynomial> {
    let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (m, c) in p.terms() {
        let d = m.iter().map(|&e| e as usize).sum();
        out.entry(d).or_default().add_term(m.clone(), c);
    }
    out
}

/// Expand `p` in `e_{i_1}(x_1) e_{i_2}(x_1,x_2) ⋯` and replace each factor by `E^j_{i_j}`.
pub fn quantize(p: &Polynomial, n: usize) -> Result<QPolynomial> {
    if p.nvars() >= n.max(1) && !p.is_zero() {
        return Err(Error::Precondition(format!("polynomial uses x_{} or later; outside the span for n={n}", n)));
    }
    let mut out = QPolynomial::zero();
    for (d, part) in split_degrees(p) {
        for (t, c) in solve_in_basis(&part, n, d)? {
            out = out.add(&tuple_qpoly(&t).scale(c));
        }
    }
    Ok(out)
}

fn qschubert_cache() -> &'static Mutex<HashMap<(Vec<u8>, usize), Arc<QPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Vec<u8>, usize), Arc<QPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The quantum Schubert polynomial `𝔖^q_w` for `w ∈ S_n`.
pub fn quantum_schubert_poly(w: &Permutation) -> Result<Arc<QPolynomial>> {
    let key = (w.raw().to_vec(), w.n());
    if let Some(p) = qschubert_cache().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let p = Arc::new(quantize(&schubert_poly(w), w.n())?);
    qschubert_cache().lock().unwrap().insert(key, p.clone());
    Ok(p)
}

/// Multiplication by `x_m` on classes: quantum Monk at `m` minus quantum Monk at `m-1`.
pub fn apply_x(exp: &Expansion, m: usize, n: usize) -> Result<Expansion> {
    if m == 0 || m > n {
        return Err(Error::OutOfRange { index: m, max: n });
    }
    let upper = if m < n { q_monk_multiply(exp, m)? } else { Expansion::new() };
    let lower = if m > 1 { q_monk_multiply(exp, m - 1)? } else { Expansion::new() };
    Ok(upper.sub(&lower))
}

/// Apply a polynomial in `x` and `q` to a class through the `x_m` operators.
pub fn apply_qpoly(p: &QPolynomial, exp: &Expansion, n: usize) -> Result<Expansion> {
    let mut memo: HashMap<Monomial, Expansion> = HashMap::new();
    memo.insert(vec![], exp.clone());
    fn power(m: &Monomial, n: usize, memo: &mut HashMap<Monomial, Expansion>) -> Result<Expansion> {
        if let Some(e) = memo.get(m) {
            return Ok(e.clone());
        }
        let last = m.len();
        let mut prev = m.clone();
        prev[last - 1] -= 1;
        let prev = trim(prev);
        let base = power(&prev, n, memo)?;
        let e = apply_x(&base, last, n)?;
        memo.insert(m.clone(), e.clone());
        Ok(e)
    }
    let mut out = Expansion::new();
    for (x, q, c) in p.terms() {
        if q.len() >= n {
            return Err(Error::Precondition(format!("q_{} outside n={n}", q.len())));
        }
        let mut alpha = q.iter().map(|&e| e as u32).collect::<Vec<_>>();
        alpha.resize(n - 1, 0);
        let e = power(x, n, &mut memo)?.times_q(&QMonomial::new(alpha)).scale(c);
        out = out.add(&e);
    }
    Ok(out)
}

/// `𝔖_u * s^q_λ(x_1..x_k)` through the quantization oracle.
pub fn fgp_product(u: &Permutation, lambda: &Partition, k: usize, n: usize) -> Result<Expansion> {
    if u.n() != n {
        return Err(Error::SizeMismatch(u.n(), n));
    }
    let v = grassmannian(lambda, k, n)?;
    apply_qpoly(&*quantum_schubert_poly(&v)?, &Expansion::single(QElement::classical(u.clone())), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn qe(s: &str) -> QElement {
        s.parse().unwrap()
    }

    fn q_monk_1432() -> Expansion {
        let mut e = Expansion::new();
        for t in ["3412", "2431", "q2 1342", "q2q3 1234"] {
            e.add_term(qe(t), 1);
        }
        e
    }

    #[test]
    fn quantum_monk() {
        let e = q_monk_multiply(&Expansion::single(qe("1432")), 2).unwrap();
        assert_eq!(e, q_monk_1432());
        let lifted = q_monk_multiply(&Expansion::single(qe("q1 1432")), 2).unwrap();
        assert_eq!(lifted, q_monk_1432().times_q(&QMonomial::q(4, 1)));
    }

    #[test]
    fn fgp_monk() {
        let e = fgp_product(&p("1432"), &Partition::new(vec![1]).unwrap(), 2, 4).unwrap();
        assert_eq!(e, q_monk_1432());
    }

    #[test]
    fn quantize_degree_one() {
        let f = Polynomial::var(1).add(&Polynomial::var(2).scale(3));
        assert_eq!(quantize(&f, 4).unwrap(), QPolynomial::from_classical(&f));
        assert_eq!(quantum_elementary(2, 2).to_string(), "1*q1 + 1*x1*x2");
    }

    #[test]
    fn varpi_values() {
        let a = QMonomial::new(vec![1, 2, 2, 3, 2]);
        assert_eq!(varpi(&a, 2).unwrap(), 1);
        assert_eq!(varpi(&a, 4).unwrap(), 2);
        assert_eq!(varpi(&QMonomial::one(6), 3).unwrap(), 0);
        assert!(varpi(&a, 6).is_err());
    }

    #[test]
    fn reduction_path_in_s8() {
        let q = QLRQuery {
            u: p("68235741"),
            w: p("78251346"),
            alpha: QMonomial::q_ij(8, 5, 8),
            lambda: Partition::new(vec![2, 2]).unwrap(),
            k: 5,
        };
        let (path, end) = ll_path(&q, Pick::Smallest);
        let got: Vec<(usize, String, String, String)> = path
            .iter()
            .map(|(i, r)| (*i, r.u.to_string(), r.w.to_string(), r.alpha.to_string()))
            .collect();
        assert_eq!(
            got,
            vec![
                (7, "68235714".into(), "78251364".into(), QMonomial::q_ij(8, 5, 7).to_string()),
                (6, "68235174".into(), "78251634".into(), QMonomial::q_ij(8, 5, 6).to_string()),
                (5, "68231574".into(), "78256134".into(), QMonomial::one(8).to_string()),
            ]
        );
        assert!(end.is_some());
        for lam in Partition::all_of(4) {
            let want = if lam == Partition::new(vec![2, 2]).unwrap() || lam == Partition::hook(3, 2) { 1 } else { 0 };
            if !lam.fits(5, 8) {
                continue;
            }
            let q = QLRQuery { lambda: lam.clone(), ..q.clone() };
            assert_eq!(quantum_lr(&q).unwrap(), want, "{lam}");
        }
    }

    #[test]
    fn shift_monomials() {
        let u = p("31524");
        assert!(o_shift_monomial(&u, &u).unwrap().is_one());
        let w = u.swap_positions(2, 4);
        assert!(o_shift_monomial(&u, &w).unwrap().is_one());
        let (i, j) = (1, 3);
        let w = u.swap_positions(i, j);
        assert_eq!(o_shift_monomial(&u, &w).unwrap(), SignedQMonomial::q_ij(5, i, j));
        let w = u.swap_positions(3, 5);
        assert_eq!(o_shift_monomial(&u, &w).unwrap(), SignedQMonomial::q_ij(5, 3, 5).inverse());
    }
}
