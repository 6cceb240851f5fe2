//! The k-Bruhat order: covers, intervals, labeled chains, peakless chains,
//! minimal permutations and noncrossing factorizations.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::Hash;

use serde_json::json;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Something that can sit in a graded labeled poset.
pub trait Graded: Clone + Eq + Hash + Ord + fmt::Display {
    fn grade(&self) -> usize;
    /// Extra attribute for serializations (the q-exponent for quantum elements).
    fn alpha(&self) -> Option<Vec<u32>> {
        None
    }
}

impl Graded for Permutation {
    fn grade(&self) -> usize {
        self.length()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

/// Hasse diagram of an interval with edge labels and ranks.
#[derive(Clone, Debug)]
pub struct LabeledPoset<T> {
    elements: Vec<T>,
    edges: Vec<Edge>,
    index: HashMap<T, usize>,
    bottom: Option<usize>,
    top: Option<usize>,
}

/// A saturated chain: `elements[0] ⋖ elements[1] ⋖ ...`, `labels[i]` on the i-th cover.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain<T> {
    pub elements: Vec<T>,
    pub labels: Vec<usize>,
}

impl<T: Clone> Chain<T> {
    pub fn start(&self) -> &T {
        &self.elements[0]
    }

    pub fn end(&self) -> &T {
        self.elements.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_peakless(&self, a: usize) -> bool {
        is_peakless(&self.labels, a)
    }
}

/// `l_1 > .. > l_a < l_{a+1} < .. < l_r`; the empty sequence counts for every `a`.
pub fn is_peakless(labels: &[usize], a: usize) -> bool {
    let r = labels.len();
    if r == 0 {
        return true;
    }
    if a == 0 || a > r {
        return false;
    }
    labels[..a].windows(2).all(|w| w[0] > w[1]) && labels[a - 1..].windows(2).all(|w| w[0] < w[1])
}

impl<T: Graded> LabeledPoset<T> {
    pub fn empty() -> Self {
        LabeledPoset { elements: vec![], edges: vec![], index: HashMap::new(), bottom: None, top: None }
    }

    /// Rank-bounded BFS up from `bottom`, intersected with backward reachability from `top`.
    pub fn build<C, P>(bottom: &T, top: &T, covers: C, prune: P) -> Self
    where
        C: Fn(&T) -> Vec<(usize, T)>,
        P: Fn(&T) -> bool,
    {
        let (rb, rt) = (bottom.grade(), top.grade());
        if rt < rb {
            return Self::empty();
        }
        let mut layers: Vec<Vec<T>> = vec![vec![bottom.clone()]];
        let mut up: HashMap<T, Vec<(usize, T)>> = HashMap::new();
        for _ in rb..rt {
            let mut next = Vec::new();
            let mut seen = HashSet::new();
            for x in layers.last().unwrap() {
                let cs: Vec<(usize, T)> = covers(x).into_iter().filter(|(_, y)| prune(y)).collect();
                for (_, y) in &cs {
                    if seen.insert(y.clone()) {
                        next.push(y.clone());
                    }
                }
                up.insert(x.clone(), cs);
            }
            if next.is_empty() {
                return Self::empty();
            }
            layers.push(next);
        }
        if !layers.last().unwrap().contains(top) {
            return Self::empty();
        }
        let mut keep: HashSet<T> = HashSet::from([top.clone()]);
        let mut edges_raw: Vec<(T, T, usize)> = Vec::new();
        for layer in layers.iter().rev().skip(1) {
            for x in layer {
                for (l, y) in &up[x] {
                    if keep.contains(y) {
                        edges_raw.push((x.clone(), y.clone(), *l));
                    }
                }
            }
            for (x, _, _) in &edges_raw {
                keep.insert(x.clone());
            }
        }
        let mut elements: Vec<T> = keep.into_iter().collect();
        elements.sort();
        let index: HashMap<T, usize> = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let mut edges: Vec<Edge> = edges_raw
            .into_iter()
            .map(|(x, y, label)| Edge { from: index[&x], to: index[&y], label })
            .collect();
        edges.sort();
        edges.dedup();
        let (b, t) = (index[bottom], index[top]);
        LabeledPoset { elements, edges, index, bottom: Some(b), top: Some(t) }
    }

    /// Build from explicit elements and labeled covers (used for transported posets).
    pub fn from_parts(mut elements: Vec<T>, covers: &[(T, T, usize)]) -> Self {
        elements.sort();
        elements.dedup();
        let index: HashMap<T, usize> = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let mut edges: Vec<Edge> =
            covers.iter().map(|(x, y, l)| Edge { from: index[x], to: index[y], label: *l }).collect();
        edges.sort();
        edges.dedup();
        let mut p = LabeledPoset { elements, edges, index, bottom: None, top: None };
        let n = p.elements.len();
        let has_in: HashSet<usize> = p.edges.iter().map(|e| e.to).collect();
        let has_out: HashSet<usize> = p.edges.iter().map(|e| e.from).collect();
        let mins: Vec<usize> = (0..n).filter(|i| !has_in.contains(i)).collect();
        let maxs: Vec<usize> = (0..n).filter(|i| !has_out.contains(i)).collect();
        if mins.len() == 1 && maxs.len() == 1 {
            p.bottom = Some(mins[0]);
            p.top = Some(maxs[0]);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index.contains_key(x)
    }

    pub fn bottom(&self) -> Option<&T> {
        self.bottom.map(|i| &self.elements[i])
    }

    pub fn top(&self) -> Option<&T> {
        self.top.map(|i| &self.elements[i])
    }

    pub fn rank(&self) -> usize {
        match (self.bottom(), self.top()) {
            (Some(b), Some(t)) => t.grade() - b.grade(),
            _ => 0,
        }
    }

    /// Sorted edge labels.
    pub fn label_multiset(&self) -> Vec<usize> {
        let mut ls: Vec<usize> = self.edges.iter().map(|e| e.label).collect();
        ls.sort_unstable();
        ls
    }

    /// Every cover raises the grade by exactly one.
    pub fn is_graded(&self) -> bool {
        self.edges.iter().all(|e| self.elements[e.to].grade() == self.elements[e.from].grade() + 1)
    }

    /// Elements grouped by grade above the bottom.
    pub fn levels(&self) -> Vec<Vec<T>> {
        let Some(b) = self.bottom() else { return vec![] };
        let mut out = vec![Vec::new(); self.rank() + 1];
        for x in &self.elements {
            out[x.grade() - b.grade()].push(x.clone());
        }
        out
    }

    /// All saturated chains from bottom to top, in lexicographic order.
    pub fn chains(&self) -> Vec<Chain<T>> {
        let (Some(b), Some(t)) = (self.bottom, self.top) else { return vec![] };
        let mut out_edges: Vec<Vec<(usize, usize)>> = vec![vec![]; self.len()];
        for e in &self.edges {
            out_edges[e.from].push((e.label, e.to));
        }
        let mut out = Vec::new();
        let mut path = vec![b];
        let mut labels = vec![];
        fn go<T: Clone>(
            x: usize,
            t: usize,
            oe: &[Vec<(usize, usize)>],
            els: &[T],
            path: &mut Vec<usize>,
            labels: &mut Vec<usize>,
            out: &mut Vec<Chain<T>>,
        ) {
            if x == t {
                out.push(Chain { elements: path.iter().map(|&i| els[i].clone()).collect(), labels: labels.clone() });
                return;
            }
            for &(l, y) in &oe[x] {
                path.push(y);
                labels.push(l);
                go(y, t, oe, els, path, labels, out);
                path.pop();
                labels.pop();
            }
        }
        go(b, t, &out_edges, &self.elements, &mut path, &mut labels, &mut out);
        out.sort();
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph interval {\n  rankdir=BT;\n");
        for x in &self.elements {
            match x.alpha() {
                Some(a) => {
                    let a: Vec<String> = a.iter().map(|v| v.to_string()).collect();
                    s += &format!("  \"{x}\" [rank={}, alpha=\"{}\"];\n", x.grade(), a.join(","));
                }
                None => s += &format!("  \"{x}\" [rank={}];\n", x.grade()),
            }
        }
        for e in &self.edges {
            s += &format!("  \"{}\" -> \"{}\" [label={}];\n", self.elements[e.from], self.elements[e.to], e.label);
        }
        s += "}\n";
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .elements
            .iter()
            .map(|x| match x.alpha() {
                Some(a) => json!({"id": x.to_string(), "rank": x.grade(), "alpha": a}),
                None => json!({"id": x.to_string(), "rank": x.grade()}),
            })
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|e| json!({"from": self.elements[e.from].to_string(), "to": self.elements[e.to].to_string(), "label": e.label}))
            .collect();
        json!({"nodes": nodes, "edges": edges})
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for level in self.levels().iter().rev() {
            let names: Vec<String> = level.iter().map(|x| x.to_string()).collect();
            s += &names.join("  ");
            s.push('\n');
        }
        for e in &self.edges {
            s += &format!("{} -> {} [{}]\n", self.elements[e.from], self.elements[e.to], e.label);
        }
        s
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { index: k, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// `Some((i,j))` when `w = u(i,j)` is a k-Bruhat cover of `u`.
pub fn is_cover_k(u: &Permutation, w: &Permutation, k: usize) -> Result<Option<(usize, usize)>> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch(u.n(), w.n()));
    }
    check_k(u.n(), k)?;
    let diff: Vec<usize> = (1..=u.n()).filter(|&p| u.at(p) != w.at(p)).collect();
    if diff.len() != 2 {
        return Ok(None);
    }
    let (i, j) = (diff[0], diff[1]);
    if w != &u.swap_positions(i, j) {
        return Ok(None);
    }
    Ok(classical_cover_ok(u, i, j, k).then_some((i, j)))
}

#[inline]
pub(crate) fn classical_cover_ok(u: &Permutation, i: usize, j: usize, k: usize) -> bool {
    let (a, b) = (u.at(i), u.at(j));
    i <= k && k < j && a < b && (i + 1..j).all(|l| {
        let c = u.at(l);
        !(a < c && c < b)
    })
}

/// Monk terms of `u` at `k`, each with its label `u(i)`, in canonical order.
pub fn up_covers_k(u: &Permutation, k: usize) -> Vec<(usize, Permutation)> {
    let n = u.n();
    let mut out = Vec::new();
    for i in 1..=k.min(n) {
        let a = u.at(i);
        let mut ceiling = usize::MAX;
        for j in k + 1..=n {
            let b = u.at(j);
            if b > a && b < ceiling {
                if (i + 1..=k).all(|l| !(a < u.at(l) && u.at(l) < b)) {
                    out.push((a, u.swap_positions(i, j)));
                }
                ceiling = b;
            }
        }
    }
    out.sort_by(|x, y| x.1.cmp(&y.1));
    out
}

/// Along any k-chain the entries in positions `<= k` only grow and the others only shrink.
fn k_monotone(x: &Permutation, w: &Permutation, k: usize) -> bool {
    (1..=x.n()).all(|p| if p <= k { x.at(p) <= w.at(p) } else { x.at(p) >= w.at(p) })
}

/// `[u,w]_k`; empty when the endpoints are incomparable.
pub fn interval_k(u: &Permutation, w: &Permutation, k: usize) -> Result<LabeledPoset<Permutation>> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch(u.n(), w.n()));
    }
    check_k(u.n(), k)?;
    Ok(LabeledPoset::build(u, w, |x| up_covers_k(x, k), |x| k_monotone(x, w, k)))
}

/// `u <=_k w`, decided by rank-bounded search.
pub fn leq_k(u: &Permutation, w: &Permutation, k: usize) -> bool {
    if u.n() != w.n() || k == 0 || k >= u.n() || !k_monotone(u, w, k) {
        return false;
    }
    let (lu, lw) = (u.length(), w.length());
    if lw < lu {
        return false;
    }
    let mut layer: HashSet<Permutation> = HashSet::from([u.clone()]);
    for _ in lu..lw {
        let mut next = HashSet::new();
        for x in &layer {
            for (_, y) in up_covers_k(x, k) {
                if k_monotone(&y, w, k) {
                    next.insert(y);
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        layer = next;
    }
    layer.contains(w)
}

/// Saturated chains of `[u,w]_k`.
pub fn chains_k(u: &Permutation, w: &Permutation, k: usize) -> Result<Vec<Chain<Permutation>>> {
    Ok(interval_k(u, w, k)?.chains())
}

/// Peakless chains of height `a` in `[u,w]_k`.
pub fn peakless_chains(u: &Permutation, w: &Permutation, k: usize, a: usize) -> Result<Vec<Chain<Permutation>>> {
    Ok(chains_k(u, w, k)?.into_iter().filter(|c| c.is_peakless(a)).collect())
}

/// A witness `u <=_k ζu` for the Grassmannian-Bruhat rank of `ζ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub u: Permutation,
    pub k: usize,
    pub rank: usize,
}

fn witness_candidates(z: &Permutation, k: usize) -> impl Iterator<Item = Permutation> + '_ {
    Permutation::all(z.n()).filter(move |u| {
        (1..=u.n()).all(|p| {
            let v = u.at(p);
            if p <= k {
                z.at(v) >= v
            } else {
                z.at(v) <= v
            }
        })
    })
}

/// First witness interval `[u, ζu]_k`, trying `k = het(ζ)` first.
pub fn find_witness(z: &Permutation) -> Option<Witness> {
    let n = z.n();
    if z.is_identity() {
        return Some(Witness { u: Permutation::identity(n), k: 1.min(n - 1).max(1), rank: 0 });
    }
    let st = z.stats();
    let het = st.height;
    let hi = n - st.support.len() + het;
    let ks = std::iter::once(het).chain((het..=hi).filter(move |&k| k != het));
    for k in ks {
        if k == 0 || k >= n {
            continue;
        }
        for u in witness_candidates(z, k) {
            let w = z * &u;
            if leq_k(&u, &w, k) {
                return Some(Witness { rank: w.length() - u.length(), u, k });
            }
        }
    }
    None
}

/// All witness intervals `[u, ζu]_k` for one `k`.
pub fn witnesses_at(z: &Permutation, k: usize) -> Vec<Witness> {
    if k == 0 || k >= z.n() {
        return vec![];
    }
    witness_candidates(z, k)
        .filter_map(|u| {
            let w = z * &u;
            leq_k(&u, &w, k).then(|| Witness { rank: w.length() - u.length(), u, k })
        })
        .collect()
}

/// The Grassmannian-Bruhat rank `ℒ(ζ)` read off a witness.
pub fn grassmannian_rank(z: &Permutation) -> Option<usize> {
    find_witness(z).map(|w| w.rank)
}

/// `ℒ(ζ) = #supp(ζ) - s(ζ)`.
pub fn is_minimal(z: &Permutation) -> bool {
    match find_witness(z) {
        Some(w) => w.rank == z.stats().min_rank(),
        None => false,
    }
}

fn pairs_cross(l1: usize, l2: usize, m1: usize, m2: usize) -> bool {
    let (l1, l2) = (l1.min(l2), l1.max(l2));
    let (m1, m2) = (m1.min(m2), m1.max(m2));
    (l1 < m1 && m1 < l2 && l2 < m2) || (m1 < l1 && l1 < m2 && m2 < l2)
}

/// Some pair of `a` crosses some pair of `b`.
pub fn crossing(a: &[usize], b: &[usize]) -> bool {
    for (x, &l1) in a.iter().enumerate() {
        for &l2 in &a[x + 1..] {
            for (y, &m1) in b.iter().enumerate() {
                for &m2 in &b[y + 1..] {
                    if pairs_cross(l1, l2, m1, m2) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Connected components of a crossing graph on index sets, each listed by
/// member indices, ordered by least element.
pub(crate) fn crossing_components(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let m = sets.len();
    let mut comp: Vec<usize> = (0..m).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for i in 0..m {
        for j in i + 1..m {
            if crossing(&sets[i], &sets[j]) {
                let (ri, rj) = (find(&mut comp, i), find(&mut comp, j));
                comp[ri] = rj;
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..m {
        let r = find(&mut comp, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_by_key(|g| g.iter().map(|&i| sets[i].iter().min().copied().unwrap_or(0)).min());
    out
}

/// Factor `ζ` as a noncrossing product of irreducible permutations.
pub fn noncrossing_factor(z: &Permutation) -> Vec<Permutation> {
    let cycles = z.cycles();
    if cycles.is_empty() {
        return vec![];
    }
    crossing_components(&cycles)
        .into_iter()
        .map(|g| {
            let cs: Vec<Vec<usize>> = g.iter().map(|&i| cycles[i].clone()).collect();
            Permutation::from_cycles(z.n(), &cs).unwrap()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn covers() {
        assert_eq!(is_cover_k(&p("68235741"), &p("68237541"), 5).unwrap(), Some((5, 6)));
        assert_eq!(is_cover_k(&p("1432"), &p("1432"), 2).unwrap(), None);
        assert!(is_cover_k(&p("1432"), &p("3412"), 2).unwrap().is_some());
        let ws: Vec<Permutation> = up_covers_k(&p("1432"), 2).into_iter().map(|x| x.1).collect();
        assert_eq!(ws, vec![p("2431"), p("3412")]);
        let ups = up_covers_k(&p("68235741"), 5);
        assert_eq!(ups, vec![(5, p("68237541")), (3, p("68245731")), (6, p("78235641"))]);
        let iv = interval_k(&p("68235741"), &p("68357421"), 5).unwrap();
        let inside: Vec<_> = ups.into_iter().filter(|(_, w)| iv.contains(w)).collect();
        assert_eq!(inside, vec![(5, p("68237541")), (3, p("68245731"))]);
        assert!(up_covers_k(&Permutation::w0(5), 2).is_empty());
    }

    #[test]
    fn covers_match_definition() {
        for u in Permutation::all(5) {
            for k in 1..5 {
                let fast: HashSet<Permutation> = up_covers_k(&u, k).into_iter().map(|x| x.1).collect();
                let slow: HashSet<Permutation> = Permutation::all(5)
                    .filter(|w| is_cover_k(&u, w, k).unwrap().is_some())
                    .collect();
                assert_eq!(fast, slow);
                for (l, w) in up_covers_k(&u, k) {
                    let (i, _) = is_cover_k(&u, &w, k).unwrap().unwrap();
                    assert_eq!(l, u.at(i));
                    assert_eq!(w.length(), u.length() + 1);
                }
            }
        }
    }

    #[test]
    fn intervals() {
        let u = p("68235741");
        assert_eq!(interval_k(&u, &u, 5).unwrap().len(), 1);
        let i1 = interval_k(&u, &p("68357421"), 5).unwrap();
        assert_eq!(i1.len(), 8);
        assert!(i1.is_graded());
        let i2 = interval_k(&p("3217465"), &p("6274135"), 3).unwrap();
        assert_eq!(i2.len(), 12);
        assert!(interval_k(&p("2134"), &p("1243"), 1).unwrap().is_empty());
    }

    #[test]
    fn peakless() {
        let cs = peakless_chains(&p("68235741"), &p("68357421"), 5, 3).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].labels, vec![5, 3, 2, 4]);
        for a in 0..=6 {
            assert!(peakless_chains(&p("3217465"), &p("6274135"), 3, a).unwrap().is_empty());
        }
        let e = peakless_chains(&p("3217465"), &p("3217465"), 3, 1).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[0].is_empty());
        assert!(is_peakless(&[4], 1));
        assert!(is_peakless(&[1, 2, 3], 1));
        assert!(is_peakless(&[3, 2, 1], 3));
        assert!(!is_peakless(&[1, 3, 2], 1));
    }

    #[test]
    fn minimality() {
        assert!(is_minimal(&Permutation::transposition(5, 2, 4)));
        assert!(is_minimal(&Permutation::parse_in("(2,3,5,7,4)", 8).unwrap()));
        let z = Permutation::parse_in("(1,7,4)(3,6)", 7).unwrap();
        assert!(!is_minimal(&z));
        assert_eq!(grassmannian_rank(&z), Some(5));
        assert_eq!(grassmannian_rank(&Permutation::parse_in("(1,7,4)", 7).unwrap()), Some(2));
        assert_eq!(grassmannian_rank(&Permutation::parse_in("(3,6)", 7).unwrap()), Some(1));
    }

    #[test]
    fn crossings() {
        assert!(!crossing(&[1, 2], &[3, 4]));
        assert!(crossing(&[1, 3], &[2, 4]));
        assert!(!crossing(&[1, 4], &[2, 3]));
        let f = noncrossing_factor(&Permutation::parse_in("(1,7,6)(2,3,5,4)", 7).unwrap());
        assert_eq!(f.len(), 2);
        assert!(!crossing(&f[0].support(), &f[1].support()));
        let f = noncrossing_factor(&Permutation::parse_in("(1,7,4)(3,6)", 7).unwrap());
        assert_eq!(f.len(), 1);
        let c = Permutation::parse_in("(2,5,3)", 6).unwrap();
        assert_eq!(noncrossing_factor(&c), vec![c]);
    }
}
