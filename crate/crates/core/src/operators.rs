//! Left operators `v_{ab}` on `S_n[q] ∪ {0}`: words, the k-action, zero
//! words, symmetries, graph classification, degree-two relations,
//! row-column decompositions and diagrams.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kbruhat::{self, Chain};
use crate::perm::{flatten, Permutation};
use crate::qbruhat::{self, q_interval, QElement, QMonomial};

/// A composition `v_{a_r b_r} ⋯ v_{a_1 b_1}`; `letters[0]` is the leftmost
/// letter and is applied last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OperatorWord {
    letters: Vec<(usize, usize)>,
}

impl OperatorWord {
    /// Letters in composition order (leftmost first).
    pub fn new(letters: Vec<(usize, usize)>) -> Result<Self> {
        if letters.iter().any(|&(a, b)| a == b || a == 0 || b == 0) {
            return Err(Error::BadWord(format!("{letters:?}")));
        }
        Ok(OperatorWord { letters })
    }

    /// Letters in application order (rightmost, i.e. bottom of the diagram, first).
    pub fn from_applied(applied: Vec<(usize, usize)>) -> Result<Self> {
        let mut l = applied;
        l.reverse();
        OperatorWord::new(l)
    }

    pub fn empty() -> Self {
        OperatorWord::default()
    }

    pub fn letters(&self) -> &[(usize, usize)] {
        &self.letters
    }

    /// Letters in application order.
    pub fn applied(&self) -> Vec<(usize, usize)> {
        self.letters.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.letters.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    pub fn max_index(&self) -> usize {
        self.support().last().copied().unwrap_or(0)
    }

    pub fn is_classical(&self) -> bool {
        self.letters.iter().all(|&(a, b)| a < b)
    }

    pub fn quantum_count(&self) -> usize {
        self.letters.iter().filter(|&&(a, b)| a > b).count()
    }

    /// `ζ = (a_r,b_r) ⋯ (a_1,b_1)` in `S_n`.
    pub fn zeta(&self, n: usize) -> Result<Permutation> {
        self.check_ambient(n)?;
        let mut z = Permutation::identity(n);
        for &(a, b) in &self.letters {
            z = &z * &Permutation::transposition(n, a, b);
        }
        Ok(z)
    }

    /// Letter count equals `#supp(ζ) - s(ζ)`.
    pub fn is_minimal(&self) -> bool {
        let n = self.max_index().max(1);
        self.len() == self.zeta(n).unwrap().stats().min_rank()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        let m = self.max_index();
        if m > n {
            return Err(Error::OutOfRange { index: m, max: n });
        }
        Ok(())
    }

    /// Order-isomorphic relabelling of the support onto `[m]`.
    pub fn flatten(&self) -> OperatorWord {
        let seq: Vec<usize> = self.letters.iter().flat_map(|&(a, b)| [a, b]).collect();
        let f = flatten(&seq);
        OperatorWord { letters: f.chunks(2).map(|c| (c[0], c[1])).collect() }
    }

    fn map(&self, f: impl Fn(usize) -> usize) -> OperatorWord {
        OperatorWord { letters: self.letters.iter().map(|&(a, b)| (f(a), f(b))).collect() }
    }

    /// `𝔬^r` applied to every index in `S_n`.
    pub fn o_shift(&self, n: usize, r: usize) -> Result<OperatorWord> {
        self.check_ambient(n)?;
        Ok(self.map(|c| (c - 1 + r) % n + 1))
    }

    /// `w_0(v_{ab}) = v_{w_0(b), w_0(a)}` letterwise.
    pub fn w0(&self, n: usize) -> Result<OperatorWord> {
        self.check_ambient(n)?;
        Ok(OperatorWord { letters: self.letters.iter().map(|&(a, b)| (n + 1 - b, n + 1 - a)).collect() })
    }

    /// Reverse the order of the letters.
    pub fn rho(&self) -> OperatorWord {
        OperatorWord { letters: self.applied() }
    }

    /// Truncation `τ_s`; requires `s ∉ supp`.
    pub fn truncate(&self, s: usize) -> Result<OperatorWord> {
        if self.support().contains(&s) {
            return Err(Error::Precondition(format!("{s} lies in the support of {self}")));
        }
        Ok(self.map(|j| if j < s { j } else { j - 1 }))
    }

    /// Expansion `ι_s`.
    pub fn expand(&self, s: usize) -> OperatorWord {
        self.map(|j| if j < s { j } else { j + 1 })
    }

    /// Concatenation `self · other` (`other` applied first).
    pub fn compose(&self, other: &OperatorWord) -> OperatorWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        OperatorWord { letters }
    }

    /// The subword on the given application-order positions.
    pub fn applied_subword(&self, positions: &[usize]) -> OperatorWord {
        let applied = self.applied();
        OperatorWord::from_applied(positions.iter().map(|&p| applied[p]).collect()).unwrap()
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|(a, b)| format!("v({a},{b})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    /// `"v(4,1) v(1,2)"` or `"v41 v12"`, leftmost letter applied last; `"1"` is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadWord(s.to_string());
        let t = s.trim();
        if t == "1" || t.is_empty() {
            return Ok(OperatorWord::empty());
        }
        let mut letters = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let r = rest.strip_prefix('v').ok_or_else(bad)?;
            if let Some(r) = r.strip_prefix('(') {
                let end = r.find(')').ok_or_else(bad)?;
                let ab: Vec<usize> = r[..end].split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
                let [a, b] = ab[..] else { return Err(bad()) };
                letters.push((a, b));
                rest = r[end + 1..].trim_start();
            } else {
                let r = r.strip_prefix('_').unwrap_or(r);
                let d: Vec<usize> = r.chars().take(2).map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(bad)?;
                if d.len() != 2 {
                    return Err(bad());
                }
                letters.push((d[0], d[1]));
                rest = r[2..].trim_start();
            }
        }
        OperatorWord::new(letters).map_err(|_| bad())
    }
}

/// `v_{ab} ⊳_k x`, or `None` for the zero element.
pub fn act_letter(a: usize, b: usize, x: &QElement, k: usize) -> Option<QElement> {
    let u = &x.w;
    let n = u.n();
    let (i, j) = (u.position(a), u.position(b));
    if !(i <= k && k < j) {
        return None;
    }
    if a < b {
        kbruhat::classical_cover_ok(u, i, j, k).then(|| QElement { q: x.q.clone(), w: u.swap_positions(i, j) })
    } else {
        qbruhat::quantum_cover_ok(u, i, j, k)
            .then(|| QElement { q: x.q.mul(&QMonomial::q_ij(n, i, j)), w: u.swap_positions(i, j) })
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { index: k, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// `word ⊳_k x`; `None` is the zero element.
pub fn act_on(word: &OperatorWord, x: &QElement, k: usize) -> Result<Option<QElement>> {
    word.check_ambient(x.n())?;
    check_k(x.n(), k)?;
    Ok(act_unchecked(word, x, k))
}

/// `word ⊳_k u`.
pub fn act(word: &OperatorWord, u: &Permutation, k: usize) -> Result<Option<QElement>> {
    act_on(word, &QElement::classical(u.clone()), k)
}

fn act_unchecked(word: &OperatorWord, x: &QElement, k: usize) -> Option<QElement> {
    let mut cur = x.clone();
    for &(a, b) in word.letters.iter().rev() {
        cur = act_letter(a, b, &cur, k)?;
    }
    Some(cur)
}

/// Some `(u, k)` with `u ∈ S_n` on which the word acts nonzero.
pub fn nonzero_witness(word: &OperatorWord, n: usize) -> Option<(Permutation, usize)> {
    if word.max_index() > n {
        return None;
    }
    for u in Permutation::all(n) {
        let x = QElement::classical(u.clone());
        for k in 1..n {
            if act_unchecked(word, &x, k).is_some() {
                return Some((u, k));
            }
        }
    }
    None
}

/// `word ≡ 0`, decided on the flattened word over all of `S_m × [m-1]`.
pub fn is_zero_word(word: &OperatorWord) -> bool {
    if word.is_empty() {
        return false;
    }
    let f = word.flatten();
    nonzero_witness(&f, f.max_index()).is_none()
}

/// Same action on every `(u, k)` of `S_n`.
pub fn equivalent_everywhere(v: &OperatorWord, w: &OperatorWord, n: usize) -> bool {
    Permutation::all(n).all(|u| {
        let x = QElement::classical(u);
        (1..n).all(|k| act_unchecked(v, &x, k) == act_unchecked(w, &x, k))
    })
}

/// Some `(u, k)` where both act nonzero with the same result.
pub fn ever_equal_nonzero(v: &OperatorWord, w: &OperatorWord, n: usize) -> bool {
    Permutation::all(n).any(|u| {
        let x = QElement::classical(u);
        (1..n).any(|k| {
            let r = act_unchecked(v, &x, k);
            r.is_some() && r == act_unchecked(w, &x, k)
        })
    })
}

/// The multigraph of a word: vertices are the support, one edge per letter.
#[derive(Clone, Debug)]
pub struct WordGraph {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl WordGraph {
    pub fn new(word: &OperatorWord) -> Self {
        let edges = word.applied().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        WordGraph { vertices: word.support().into_iter().collect(), edges }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn root(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
        let p = parent[&x];
        if p == x {
            return x;
        }
        let r = Self::root(parent, p);
        parent.insert(x, r);
        r
    }

    /// Connected components as sets of application-order edge indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: BTreeMap<usize, usize> = self.vertices.iter().map(|&v| (v, v)).collect();
        for &(a, b) in &self.edges {
            let (ra, rb) = (Self::root(&mut parent, a), Self::root(&mut parent, b));
            parent.insert(ra, rb);
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &(a, _)) in self.edges.iter().enumerate() {
            let r = Self::root(&mut parent, a);
            by_root.entry(r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
        out.sort();
        out
    }

    pub fn component_supports(&self) -> Vec<Vec<usize>> {
        self.components()
            .iter()
            .map(|c| {
                let s: BTreeSet<usize> = c.iter().flat_map(|&i| [self.edges[i].0, self.edges[i].1]).collect();
                s.into_iter().collect()
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// No cycles and no repeated edges.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.vertices.len()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_forest()
    }

    /// A simple path graph.
    pub fn is_path_graph(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        for &(a, b) in &self.edges {
            *deg.entry(a).or_default() += 1;
            *deg.entry(b).or_default() += 1;
        }
        deg.values().all(|&d| d <= 2)
    }

    /// Some two components have crossing supports.
    pub fn has_crossing_components(&self) -> bool {
        let s = self.component_supports();
        (0..s.len()).any(|i| (i + 1..s.len()).any(|j| kbruhat::crossing(&s[i], &s[j])))
    }
}

/// Graph is a path with `a_1` or `b_1` an endpoint and consecutive letters sharing one index.
pub fn is_path_shaped(word: &OperatorWord) -> bool {
    let g = WordGraph::new(word);
    if word.is_empty() || !g.is_path_graph() {
        return false;
    }
    let ap = word.applied();
    let (a1, b1) = ap[0];
    let endpoint = |v: usize| g.edges.iter().filter(|&&(x, y)| x == v || y == v).count() == 1;
    (endpoint(a1) || endpoint(b1))
        && ap.windows(2).all(|w| {
            let s: BTreeSet<usize> = [w[0].0, w[0].1].into();
            let t: BTreeSet<usize> = [w[1].0, w[1].1].into();
            s.intersection(&t).count() == 1
        })
}

fn component_words(word: &OperatorWord) -> Vec<Vec<(usize, usize)>> {
    let g = WordGraph::new(word);
    let ap = word.applied();
    g.components().into_iter().map(|c| c.into_iter().map(|i| ap[i]).collect()).collect()
}

fn noncrossing_components(word: &OperatorWord) -> bool {
    !WordGraph::new(word).has_crossing_components()
}

/// Classical word whose components are connected classical rows, pairwise noncrossing.
pub fn is_classical_row(word: &OperatorWord) -> bool {
    word.is_classical()
        && noncrossing_components(word)
        && component_words(word).iter().all(|c| c.windows(2).all(|w| w[0].1 == w[1].0))
}

/// Classical word whose components are connected classical columns, pairwise noncrossing.
pub fn is_classical_column(word: &OperatorWord) -> bool {
    word.is_classical()
        && noncrossing_components(word)
        && component_words(word).iter().all(|c| c.windows(2).all(|w| w[1].1 == w[0].0))
}

/// Smallest `r` with `𝔬^r(word)` a classical row, on the flattened word.
pub fn row_shift(word: &OperatorWord) -> Option<usize> {
    let f = word.flatten();
    let m = f.max_index();
    (0..m.max(1)).find(|&r| is_classical_row(&f.o_shift(m, r).unwrap()))
}

/// Smallest `r` with `𝔬^r(word)` a classical column, on the flattened word.
pub fn column_shift(word: &OperatorWord) -> Option<usize> {
    let f = word.flatten();
    let m = f.max_index();
    (0..m.max(1)).find(|&r| is_classical_column(&f.o_shift(m, r).unwrap()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathShape {
    Single,
    Row,
    Column,
    /// A multi-letter path shiftable to both or to neither.
    Irregular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordClass {
    Zero,
    Path(PathShape),
    Tree,
    Forest,
    Crossing,
    Other,
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordClass::Zero => write!(f, "zero"),
            WordClass::Path(PathShape::Single) => write!(f, "path (single letter: row and column)"),
            WordClass::Path(PathShape::Row) => write!(f, "path (row)"),
            WordClass::Path(PathShape::Column) => write!(f, "path (column)"),
            WordClass::Path(PathShape::Irregular) => write!(f, "path (neither row xor column)"),
            WordClass::Tree => write!(f, "tree"),
            WordClass::Forest => write!(f, "forest"),
            WordClass::Crossing => write!(f, "crossing"),
            WordClass::Other => write!(f, "other"),
        }
    }
}

/// Classification of a word: zero, path, tree, forest, crossing or other.
pub fn classify(word: &OperatorWord) -> WordClass {
    if word.is_empty() {
        return WordClass::Other;
    }
    if is_zero_word(word) {
        return WordClass::Zero;
    }
    let g = WordGraph::new(word);
    if is_path_shaped(word) {
        if word.len() == 1 {
            return WordClass::Path(PathShape::Single);
        }
        return WordClass::Path(match (row_shift(word).is_some(), column_shift(word).is_some()) {
            (true, false) => PathShape::Row,
            (false, true) => PathShape::Column,
            _ => PathShape::Irregular,
        });
    }
    if g.is_tree() {
        return WordClass::Tree;
    }
    if g.has_crossing_components() {
        return WordClass::Crossing;
    }
    if g.is_forest() {
        return WordClass::Forest;
    }
    WordClass::Other
}

/// A forest graph with pairwise noncrossing trees.
pub fn is_forest_shaped(word: &OperatorWord) -> bool {
    let g = WordGraph::new(word);
    g.is_forest() && !g.has_crossing_components()
}

/// The word read off a saturated chain: the i-th cover swaps positions
/// `s < t` of `w_{i-1}` and contributes `v_{w_{i-1}(s), w_{i-1}(t)}`.
pub fn chain_word(chain: &Chain<QElement>) -> OperatorWord {
    let applied: Vec<(usize, usize)> = chain
        .elements
        .windows(2)
        .map(|p| {
            let (x, y) = (&p[0].w, &p[1].w);
            let diff: Vec<usize> = (1..=x.n()).filter(|&i| x.at(i) != y.at(i)).collect();
            (x.at(diff[0]), x.at(diff[1]))
        })
        .collect();
    OperatorWord::from_applied(applied).unwrap()
}

/// Chains of `[u,t]^q_k` paired with their words, and the words found
/// independently by searching letter by letter.
#[derive(Clone, Debug)]
pub struct ChainWords {
    pub pairs: Vec<(Chain<QElement>, OperatorWord)>,
    pub searched: Vec<OperatorWord>,
}

impl ChainWords {
    /// Every chain word acts `u ↦ t`, the chain words are distinct, and they
    /// coincide with the searched words.
    pub fn is_bijection(&self, u: &QElement, t: &QElement, k: usize) -> bool {
        let words: BTreeSet<&OperatorWord> = self.pairs.iter().map(|p| &p.1).collect();
        let searched: BTreeSet<&OperatorWord> = self.searched.iter().collect();
        words.len() == self.pairs.len()
            && words == searched
            && self.pairs.iter().all(|(_, w)| act_unchecked(w, u, k).as_ref() == Some(t))
    }

    pub fn words(&self) -> Vec<OperatorWord> {
        self.pairs.iter().map(|p| p.1.clone()).collect()
    }
}

/// The chain/word correspondence for `[u,t]^q_k`.
pub fn chains_word_bijection(u: &QElement, t: &QElement, k: usize) -> Result<ChainWords> {
    let n = u.n();
    check_k(n, k)?;
    let poset = q_interval(u, t, k)?;
    if poset.is_empty() {
        return Err(Error::Incomparable);
    }
    let pairs: Vec<(Chain<QElement>, OperatorWord)> =
        poset.chains().into_iter().map(|c| {
            let w = chain_word(&c);
            (c, w)
        }).collect();
    let inside: HashSet<&QElement> = poset.elements().iter().collect();
    let r = t.rank() - u.rank();
    let mut searched = Vec::new();
    let mut stack: Vec<(QElement, Vec<(usize, usize)>)> = vec![(u.clone(), vec![])];
    while let Some((x, applied)) = stack.pop() {
        if applied.len() == r {
            if &x == t {
                searched.push(OperatorWord::from_applied(applied).unwrap());
            }
            continue;
        }
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                if let Some(y) = act_letter(a, b, &x, k) {
                    if inside.contains(&y) {
                        let mut next = applied.clone();
                        next.push((a, b));
                        stack.push((y, next));
                    }
                }
            }
        }
    }
    searched.sort();
    Ok(ChainWords { pairs, searched })
}

/// A word `R·C` with `𝔬^shift(R·C)` a classical row times a classical column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcDecomposition {
    pub row: OperatorWord,
    pub column: OperatorWord,
    pub shift: usize,
}

impl RcDecomposition {
    pub fn word(&self) -> OperatorWord {
        self.row.compose(&self.column)
    }
}

/// Find a chain of `[u, word ⊳_k u]^q_k` whose word is a row times a column
/// that some cyclic shift makes classical.
pub fn rc_decompose(word: &OperatorWord, u: &Permutation, k: usize) -> Result<Option<RcDecomposition>> {
    let n = u.n();
    let Some(t) = act(word, u, k)? else {
        return Err(Error::Precondition(format!("{word} acts as zero on {u} at k={k}")));
    };
    if !is_forest_shaped(word) {
        return Err(Error::Precondition(format!("{word} is not a noncrossing forest")));
    }
    let bottom = QElement::classical(u.clone());
    let mut words: Vec<OperatorWord> = q_interval(&bottom, &t, k)?.chains().iter().map(chain_word).collect();
    words.sort();
    for r in 0..n {
        let o_r = Permutation::cyclic_shift(n);
        let mut shifted_u = u.clone();
        for _ in 0..r {
            shifted_u = &o_r * &shifted_u;
        }
        for w in &words {
            let s = w.o_shift(n, r)?;
            if !s.is_classical() || act(&s, &shifted_u, k)?.is_none() {
                continue;
            }
            let ap = w.applied();
            for p in 0..=ap.len() {
                let column = OperatorWord::from_applied(ap[..p].to_vec())?;
                let row = OperatorWord::from_applied(ap[p..].to_vec())?;
                if is_classical_column(&column.o_shift(n, r)?) && is_classical_row(&row.o_shift(n, r)?) {
                    return Ok(Some(RcDecomposition { row, column, shift: r }));
                }
            }
        }
    }
    Ok(None)
}

/// One entry of the degree-two relation table.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub word: OperatorWord,
    pub clause: &'static str,
    pub expected: &'static str,
    pub holds: bool,
}

/// Exhaustive check of all relations among minimal two-letter words, plus
/// `v_{ab}v_{ab} ≡ 0` and `v_{ab}v_{ba}` nonzero and noncommuting.
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn count(&self, clause: &str) -> usize {
        self.checks.iter().filter(|c| c.clause == clause).count()
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!("{:<6} {:<14} {:<28} {}\n", c.clause, c.word.to_string(), c.expected, if c.holds { "ok" } else { "FAILED" }));
        }
        s
    }
}

fn two(x: (usize, usize), y: (usize, usize)) -> OperatorWord {
    OperatorWord::new(vec![x, y]).unwrap()
}

fn nested_quantum_zero(x: (usize, usize), y: (usize, usize)) -> bool {
    let inside = |outer: (usize, usize), inner: (usize, usize)| {
        outer.0 < outer.1 && inner.0 > inner.1 && outer.0 < inner.1 && inner.0 < outer.1
    };
    let side = |p: (usize, usize), q: (usize, usize)| p.0 > p.1 && q.0 > q.1 && p.1 > q.0;
    inside(x, y) || inside(y, x) || side(x, y) || side(y, x)
}

/// The degree-two relation table on supports of size 3 and 4.
pub fn relation_table() -> RelationReport {
    let mut rep = RelationReport::default();
    let mut push = |word: OperatorWord, clause: &'static str, expected: &'static str, holds: bool| {
        rep.checks.push(RelationCheck { word, clause, expected, holds });
    };
    let pairs4: Vec<(usize, usize)> = (1..=4).flat_map(|a| (1..=4).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    for &x in &pairs4 {
        for &y in &pairs4 {
            let sx: BTreeSet<usize> = [x.0, x.1].into();
            let sy: BTreeSet<usize> = [y.0, y.1].into();
            if !sx.is_disjoint(&sy) || x > y && false {
                continue;
            }
            let w = two(x, y);
            let sw = two(y, x);
            let xs: Vec<usize> = sx.iter().copied().collect();
            let ys: Vec<usize> = sy.iter().copied().collect();
            if kbruhat::crossing(&xs, &ys) {
                push(w.clone(), "(1)(i)", "zero", is_zero_word(&w));
            } else if nested_quantum_zero(x, y) {
                push(w.clone(), "(1)(ii)", "zero", is_zero_word(&w));
            } else {
                let ok = !is_zero_word(&w) && equivalent_everywhere(&w, &sw, 4);
                push(w.clone(), "(1)(iii)", "nonzero, commutes", ok);
            }
        }
    }
    let pairs3: Vec<(usize, usize)> = (1..=3).flat_map(|a| (1..=3).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let (a, b, c) = (1, 2, 3);
    let two_i: Vec<OperatorWord> = vec![
        two((b, a), (a, c)),
        two((c, b), (b, a)),
        two((a, c), (c, b)),
        two((a, c), (b, a)),
        two((b, a), (c, b)),
        two((c, b), (a, c)),
    ];
    let mut remaining = Vec::new();
    for &x in &pairs3 {
        for &y in &pairs3 {
            let sx: BTreeSet<usize> = [x.0, x.1].into();
            let sy: BTreeSet<usize> = [y.0, y.1].into();
            if sx.intersection(&sy).count() != 1 {
                continue;
            }
            let w = two(x, y);
            if two_i.contains(&w) {
                push(w.clone(), "(2)(i)", "zero", is_zero_word(&w));
            } else if x.0 == y.0 || x.1 == y.1 {
                push(w.clone(), "(2)(ii)", "zero", is_zero_word(&w));
            } else {
                remaining.push(w);
            }
        }
    }
    for (i, w) in remaining.iter().enumerate() {
        let distinct = remaining.iter().enumerate().all(|(j, v)| i == j || !ever_equal_nonzero(w, v, 3));
        let commutes = equivalent_everywhere(w, &w.rho(), 3);
        push(w.clone(), "(2)(iii)", "nonzero, inequivalent", !is_zero_word(w) && distinct && !commutes);
    }
    for &x in &pairs3.iter().filter(|p| p.0 < p.1).copied().collect::<Vec<_>>() {
        for &(p, q) in &[x, (x.1, x.0)] {
            let w = two((p, q), (p, q));
            push(w.clone(), "square", "zero", is_zero_word(&w));
            let w = two((p, q), (q, p));
            let ok = !is_zero_word(&w) && !equivalent_everywhere(&w, &w.rho(), 3);
            push(w, "inverse", "nonzero, not commuting", ok);
        }
    }
    rep
}

/// Open unit intervals `(i, i+1)` covered by every quantum letter and by no classical one.
pub fn yellow_window(word: &OperatorWord) -> Vec<(usize, usize)> {
    if word.quantum_count() == 0 {
        return vec![];
    }
    let covers = |(a, b): (usize, usize), i: usize| a.min(b) <= i && i < a.max(b);
    let m = word.max_index();
    (1..m)
        .filter(|&i| {
            word.letters.iter().all(|&(a, b)| if a > b { covers((a, b), i) } else { !covers((a, b), i) })
        })
        .map(|i| (i, i + 1))
        .collect()
}

/// Plain-text diagram: one row per letter, bottom (applied first) row last.
pub fn diagram_text(word: &OperatorWord, n: usize) -> Result<String> {
    word.check_ambient(n)?;
    let window = yellow_window(word);
    let mut rows = Vec::new();
    for &(a, b) in &word.letters {
        let (lo, hi) = (a.min(b), a.max(b));
        let quantum = a > b;
        let mut line = String::new();
        for i in 1..=n {
            let c = if i == lo || i == hi {
                if quantum { '*' } else { 'o' }
            } else {
                '|'
            };
            line.push(c);
            if i < n {
                let s = if lo <= i && i < hi {
                    if quantum { ".." } else { "==" }
                } else if window.contains(&(i, i + 1)) {
                    "##"
                } else {
                    "  "
                };
                line.push_str(s);
            }
        }
        rows.push(format!("{line}   v({a},{b}) {}", if quantum { "quantum" } else { "classical" }));
    }
    let mut out = rows.join("\n");
    let labels: Vec<String> = (1..=n).map(|i| format!("{:<3}", i % 10)).collect();
    out.push('\n');
    out.push_str(labels.concat().trim_end());
    if !window.is_empty() {
        let w: Vec<String> = window.iter().map(|(i, j)| format!("({i},{j})")).collect();
        out.push_str(&format!("\nwindow {}", w.join(" ")));
    }
    Ok(out)
}

/// DOT rendering: one node per letter stacked bottom to top, green solid
/// for classical and red dashed for quantum letters.
pub fn diagram_dot(word: &OperatorWord, n: usize) -> Result<String> {
    word.check_ambient(n)?;
    let mut s = String::from("digraph word {\n  rankdir=BT;\n");
    let window = yellow_window(word);
    if !window.is_empty() {
        let w: Vec<String> = window.iter().map(|(i, j)| format!("({i},{j})")).collect();
        s.push_str(&format!("  label=\"window {}\";\n", w.join(" ")));
    }
    for (i, (a, b)) in word.applied().into_iter().enumerate() {
        let (color, style) = if a < b { ("green", "solid") } else { ("red", "dashed") };
        s.push_str(&format!(
            "  l{i} [label=\"v({a},{b}) [{}..{}]\", color={color}, style={style}, shape=box];\n",
            a.min(b),
            a.max(b)
        ));
        if i > 0 {
            s.push_str(&format!("  l{} -> l{i};\n", i - 1));
        }
    }
    s.push_str("}\n");
    Ok(s)
}
