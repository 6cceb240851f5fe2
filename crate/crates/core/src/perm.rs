//! Permutations in one-line notation, cycle statistics, partitions and the
//! Grassmannian codec.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{1,..,n}` stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    img: Vec<u8>,
}

impl Permutation {
    pub fn new(img: Vec<usize>) -> Result<Self> {
        let n = img.len();
        if n == 0 || n > 250 {
            return Err(Error::BadPermutation(format!("{img:?}")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &img {
            if v == 0 || v > n || seen[v] {
                return Err(Error::BadPermutation(format!("{img:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { img: img.into_iter().map(|v| v as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { img: (1..=n as u8).collect() }
    }

    /// The longest element `i -> n+1-i`.
    pub fn w0(n: usize) -> Self {
        Permutation { img: (1..=n as u8).rev().collect() }
    }

    /// The n-cycle `(1,2,..,n)`.
    pub fn cyclic_shift(n: usize) -> Self {
        Permutation { img: (2..=n as u8).chain(std::iter::once(1)).collect() }
    }

    /// The transposition `(a,b)`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.img.swap(a - 1, b - 1);
        p
    }

    /// The simple transposition `s_i = (i,i+1)`.
    pub fn simple(n: usize, i: usize) -> Self {
        Permutation::transposition(n, i, i + 1)
    }

    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for c in cycles {
            for (t, &x) in c.iter().enumerate() {
                if x == 0 || x > n || used[x] {
                    return Err(Error::BadPermutation(format!("{cycles:?}")));
                }
                used[x] = true;
                img[x - 1] = c[(t + 1) % c.len()];
            }
        }
        Permutation::new(img)
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// `u(i)`, 1-indexed.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.img[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.img.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { img: inv }
    }

    /// Position of the value `v`, i.e. `u^{-1}(v)`.
    pub fn position(&self, v: usize) -> usize {
        self.img.iter().position(|&x| x as usize == v).unwrap() + 1
    }

    /// `self ∘ other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(self.then_unchecked(other))
    }

    fn then_unchecked(&self, other: &Permutation) -> Self {
        Permutation { img: other.img.iter().map(|&v| self.img[v as usize - 1]).collect() }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut l = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `sg_i(u)`: 1 when `u` has a descent at `i`.
    pub fn descent_sign(&self, i: usize) -> Result<u8> {
        if i == 0 || i >= self.n() {
            return Err(Error::OutOfRange { index: i, max: self.n().saturating_sub(1) });
        }
        Ok(self.sg(i))
    }

    #[inline]
    pub(crate) fn sg(&self, i: usize) -> u8 {
        (self.img[i - 1] > self.img[i]) as u8
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.sg(i) == 1).collect()
    }

    /// Lehmer code: `code_i = #{j > i : u(j) < u(i)}`.
    pub fn code(&self) -> Vec<usize> {
        let n = self.n();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.img[j] < self.img[i]).count()).collect()
    }

    /// Inverse of [`Permutation::code`] inside `S_n`.
    pub fn from_code(code: &[usize], n: usize) -> Result<Self> {
        if code.len() > n {
            if code[n..].iter().any(|&c| c != 0) {
                return Err(Error::BadPermutation(format!("code {code:?} outside S_{n}")));
            }
        }
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut img = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            if c >= avail.len() {
                return Err(Error::BadPermutation(format!("code {code:?} outside S_{n}")));
            }
            img.push(avail.remove(c));
        }
        Permutation::new(img)
    }

    /// `u(i,j)`: swap the entries in positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut p = self.clone();
        p.img.swap(i - 1, j - 1);
        p
    }

    /// `(a,b)u`: swap the values `a` and `b`.
    pub fn swap_values(&self, a: usize, b: usize) -> Self {
        let mut p = self.clone();
        for v in p.img.iter_mut() {
            if *v as usize == a {
                *v = b as u8;
            } else if *v as usize == b {
                *v = a as u8;
            }
        }
        p
    }

    /// Embed into `S_m` (m >= n) by fixing the new points.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.n());
        let mut img = self.img.clone();
        img.extend(self.n() as u8 + 1..=m as u8);
        Permutation { img }
    }

    /// Smallest `m` with `u` in `S_m` (at least 1).
    pub fn minimal_n(&self) -> usize {
        let mut m = self.n();
        while m > 1 && self.img[m - 1] as usize == m {
            m -= 1;
        }
        m
    }

    /// Restrict to `S_m` when all points above `m` are fixed.
    pub fn restrict(&self, m: usize) -> Option<Self> {
        if m > self.n() {
            return Some(self.embed(m));
        }
        if (m..self.n()).all(|i| self.img[i] as usize == i + 1) {
            Some(Permutation { img: self.img[..m].to_vec() })
        } else {
            None
        }
    }

    /// `u/r`: delete position `r` and value `u(r)`, then flatten.
    pub fn delete(&self, r: usize) -> Self {
        let gone = self.img[r - 1];
        let img = self
            .img
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r - 1)
            .map(|(_, &v)| if v > gone { v - 1 } else { v })
            .collect();
        Permutation { img }
    }

    /// Nontrivial cycles, each starting at its least element, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] || self.at(start) == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.at(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.at(x);
            }
            out.push(c);
        }
        out
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.at(i) != i).collect()
    }

    /// `het(ζ) = #{i : i < ζ(i)}`.
    pub fn het(&self) -> usize {
        (1..=self.n()).filter(|&i| i < self.at(i)).count()
    }

    pub fn stats(&self) -> CycleDecomposition {
        let cycles = self.cycles();
        CycleDecomposition { support: self.support(), height: self.het(), cycles }
    }

    /// Cycle notation, `e` for the identity.
    pub fn cycle_string(&self) -> String {
        let cs = self.cycles();
        if cs.is_empty() {
            return "e".into();
        }
        cs.iter()
            .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect()
    }

    /// Parse one-line or cycle notation into `S_n`; a shorter permutation is embedded.
    pub fn parse_in(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Permutation::identity(n));
        }
        let p = if s.starts_with('(') {
            let cycles = parse_cycles(s)?;
            let m = cycles.iter().flatten().copied().max().unwrap_or(1);
            Permutation::from_cycles(n.max(m), &cycles)?
        } else {
            s.parse::<Permutation>()?
        };
        if p.n() > n {
            return p.restrict(n).ok_or_else(|| Error::BadPermutation(format!("{s} is not in S_{n}")));
        }
        Ok(p.embed(n))
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=n as u8).collect()) }
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let bad = || Error::BadPermutation(s.to_string());
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let end = body.find(')').ok_or_else(bad)?;
        let inner = body[..end].trim();
        let entries: Vec<usize> = if inner.contains(',') {
            inner.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            inner.chars().filter(|c| !c.is_whitespace()).map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        if entries.is_empty() {
            return Err(bad());
        }
        out.push(entries);
        rest = body[end + 1..].trim_start();
    }
    Ok(out)
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            let cycles = parse_cycles(s)?;
            let n = cycles.iter().flatten().copied().max().unwrap_or(1);
            return Permutation::from_cycles(n, &cycles);
        }
        let img: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::BadPermutation(s.to_string())))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::BadPermutation(s.to_string())))
                .collect::<Result<_>>()?
        };
        Permutation::new(img)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.img {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.img.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("composing permutations of different sizes")
    }
}

pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut a = cur.clone();
        let n = a.len();
        if n >= 2 {
            let mut i = n - 1;
            while i > 0 && a[i - 1] >= a[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while a[j] <= a[i - 1] {
                    j -= 1;
                }
                a.swap(i - 1, j);
                a[i..].reverse();
                self.next = Some(a);
            }
        }
        Some(Permutation { img: cur })
    }
}

/// Nontrivial cycles of a permutation together with `supp` and `het`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub support: Vec<usize>,
    pub height: usize,
}

impl CycleDecomposition {
    /// `s(ζ)`.
    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    /// `#supp(ζ) - s(ζ)`.
    pub fn min_rank(&self) -> usize {
        self.support.len() - self.cycles.len()
    }
}

/// Order-isomorphic image of `seq` onto `{1,..,m}`.
pub fn flatten(seq: &[usize]) -> Vec<usize> {
    let mut vals: Vec<usize> = seq.to_vec();
    vals.sort_unstable();
    vals.dedup();
    seq.iter().map(|x| vals.binary_search(x).unwrap() + 1).collect()
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::BadPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// The hook `(b, 1^{a-1})`.
    pub fn hook(a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1);
        let mut parts = vec![b];
        parts.extend(std::iter::repeat(1).take(a - 1));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `Some((a,b))` when the partition is the hook `(b,1^{a-1})`.
    pub fn as_hook(&self) -> Option<(usize, usize)> {
        if self.parts.is_empty() || self.parts[1..].iter().any(|&p| p != 1) {
            None
        } else {
            Some((self.parts.len(), self.parts[0]))
        }
    }

    pub fn is_hook(&self) -> bool {
        self.as_hook().is_some()
    }

    /// `λ ⊆ R_{k,n-k}`.
    pub fn fits(&self, k: usize, n: usize) -> bool {
        self.parts.len() <= k && self.parts.first().map_or(true, |&p| p + k <= n)
    }

    /// All partitions of `m`, in reverse lexicographic order.
    pub fn all_of(m: usize) -> Vec<Partition> {
        fn go(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if m == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=m.min(max)).rev() {
                cur.push(p);
                go(m - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().map_err(|_| Error::BadPartition(s.to_string()))).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::BadPartition(s.to_string()))).collect::<Result<_>>()?
        };
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `v(λ,k) ∈ S_n`, the Grassmannian permutation with descent at `k`.
pub fn grassmannian(lambda: &Partition, k: usize, n: usize) -> Result<Permutation> {
    if k == 0 || k >= n || !lambda.fits(k, n) {
        return Err(Error::OutsideRectangle(lambda.to_string(), k, n.saturating_sub(k)));
    }
    let part = |i: usize| lambda.parts.get(i - 1).copied().unwrap_or(0);
    let mut img: Vec<usize> = (1..=k).map(|i| part(k + 1 - i) + i).collect();
    let mut rest: Vec<usize> = (1..=n).filter(|v| !img.contains(v)).collect();
    img.append(&mut rest);
    Permutation::new(img)
}

/// Inverse of [`grassmannian`]: `λ_i = w(k+1-i) - (k+1-i)`.
pub fn grassmannian_shape(w: &Permutation, k: usize) -> Result<Partition> {
    let n = w.n();
    if k == 0 || k >= n || w.descents().iter().any(|&d| d != k) {
        return Err(Error::Precondition(format!("{w} is not Grassmannian with descent at {k}")));
    }
    Partition::new((1..=k).map(|i| w.at(k + 1 - i) - (k + 1 - i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(p("68357421").length(), 22);
        assert_eq!(p("68235741").length(), 18);
        assert_eq!(p("6274135").length(), 12);
        assert_eq!(p("3217465").length(), 7);
        assert_eq!(Permutation::w0(6).length(), 15);
    }

    #[test]
    fn composition() {
        let z = Permutation::parse_in("(1,7,4)(3,6)", 7).unwrap();
        assert_eq!(z.compose(&p("3217465")).unwrap(), p("6274135"));
        let z = Permutation::parse_in("(2,3,5,7,4)", 8).unwrap();
        assert_eq!(z.compose(&p("68235741")).unwrap(), p("68357421"));
        let u = p("4132");
        assert_eq!(Permutation::identity(4).compose(&u).unwrap(), u);
        assert!(u.compose(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn cycle_statistics() {
        let e = Permutation::identity(4).stats();
        assert_eq!((e.support.len(), e.num_cycles(), e.height), (0, 0, 0));
        let z = Permutation::parse_in("(1,7,4)(3,6)", 7).unwrap().stats();
        assert_eq!((z.support.len(), z.num_cycles(), z.min_rank()), (5, 2, 3));
        let z = Permutation::parse_in("(1,6,7,3,5)", 8).unwrap().stats();
        assert_eq!((z.height, z.num_cycles(), z.support.len()), (3, 1, 5));
        assert_eq!(p("(14)(23)").cycle_string(), "(1,4)(2,3)");
    }

    #[test]
    fn codec() {
        let lam = Partition::new(vec![3, 1, 0]).unwrap();
        assert_eq!(grassmannian(&lam, 3, 7).unwrap(), p("1362457"));
        assert_eq!(grassmannian(&Partition::new(vec![1]).unwrap(), 4, 7).unwrap(), p("1235467"));
        assert!(grassmannian(&Partition::empty(), 2, 5).unwrap().is_identity());
        assert!(grassmannian(&Partition::new(vec![5]).unwrap(), 3, 7).is_err());
        for n in 2..=7 {
            for k in 1..n {
                for m in 0..=k * (n - k) {
                    for lam in Partition::all_of(m).into_iter().filter(|l| l.fits(k, n)) {
                        let v = grassmannian(&lam, k, n).unwrap();
                        assert_eq!(v.length(), lam.size());
                        assert_eq!(grassmannian_shape(&v, k).unwrap(), lam);
                    }
                }
            }
        }
    }

    #[test]
    fn flattening() {
        assert_eq!(flatten(&[1, 2, 3]), vec![1, 2, 3]);
        assert_eq!(flatten(&[3, 6, 1, 6, 8, 3, 1]), vec![2, 3, 1, 3, 4, 2, 1]);
        assert_eq!(flatten(&[9, 2]), vec![2, 1]);
    }

    #[test]
    fn descent_signs() {
        assert!((1..5).all(|i| Permutation::identity(5).descent_sign(i).unwrap() == 0));
        assert_eq!(p("68235741").descent_sign(7).unwrap(), 1);
        assert_eq!(p("78256134").descent_sign(5).unwrap(), 1);
        assert_eq!(p("78251634").descent_sign(5).unwrap(), 0);
        assert!(p("123").descent_sign(3).is_err());
    }

    #[test]
    fn shifts_and_codes() {
        let o = Permutation::cyclic_shift(5);
        let mut x = p("31524");
        for _ in 0..5 {
            x = &o * &x;
        }
        assert_eq!(x, p("31524"));
        assert_eq!(&Permutation::w0(5) * &Permutation::w0(5), Permutation::identity(5));
        for u in Permutation::all(5) {
            assert_eq!(Permutation::from_code(&u.code(), 5).unwrap(), u);
            assert_eq!(u.inverse().length(), u.length());
            for i in 1..5 {
                let d = u.swap_positions(i, i + 1).length() as i64 - u.length() as i64;
                assert_eq!(d.abs(), 1);
            }
        }
        assert_eq!(Permutation::all(4).count(), 24);
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("1,2,3,4,5,6,7,8,10,9").to_string(), "1,2,3,4,5,6,7,8,10,9");
        assert_eq!(p("(2,3,5,7,4)").n(), 7);
        assert!("1224".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
        assert_eq!(p("413652").delete(3), p("31542"));
    }
}
