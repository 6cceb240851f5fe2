//! Verification sweeps: worked-example regressions, oracle equivalences and
//! property suites, each reporting pass or fail with a summary line.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::fixtures::{self, FigureOrder};
use crate::kbruhat::{find_witness, interval_k, is_minimal, peakless_chains, LabeledPoset};
use crate::operators::{self, act, act_letter, classify, is_forest_shaped, is_path_shaped, rc_decompose, OperatorWord, PathShape, WordClass};
use crate::qbruhat::{is_qcover, q_interval, q_reach, CoverKind};
use crate::qschubert::{
    fgp_product, ll_path, ll_product, o_shift_monomial, q_hook_multiply, q_monk_multiply, q_powersum_multiply, quantum_lr, Pick,
    QLRQuery, SignedQMonomial,
};
use crate::schubert::{binomial, hook_multiply_chains, hook_multiply_minimal, oracle_product, Ambient, Expansion};
use crate::{Partition, Permutation, QElement, QMonomial};

/// `Ok(summary)` on pass, `Err(first failure)` otherwise.
pub type Outcome = std::result::Result<String, String>;

/// Names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: [&str; 13] = [
    "q-monk",
    "mn-example",
    "q-minimal",
    "classical",
    "quantum",
    "peakless",
    "relations",
    "paths",
    "forests",
    "equivalences",
    "independence",
    "figures",
    "pick-order",
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

/// Run one named suite at size `n`; `None` for an unknown name.
pub fn run_suite(name: &str, n: usize) -> Option<Outcome> {
    Some(match name {
        "q-monk" => q_monk(),
        "mn-example" => mn_example(),
        "q-minimal" => q_minimal(),
        "classical" => classical(n),
        "quantum" => quantum(n),
        "peakless" => peakless(n + 1),
        "relations" => relations(),
        "paths" => paths(n),
        "forests" => forests(n, 500),
        "equivalences" => equivalences(n, 100),
        "independence" => independence(n),
        "figures" => figures(),
        "pick-order" => pick_order(n),
        _ => return None,
    })
}

fn hooks(k: usize, n: usize) -> Vec<(usize, usize)> {
    (1..=k).flat_map(|a| (1..=n - k).map(move |b| (a, b))).collect()
}

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut img: Vec<usize> = (1..=n).collect();
    img.shuffle(rng);
    Permutation::new(img).unwrap()
}

pub fn q_monk() -> Outcome {
    let f = fixtures::parse_product(fixtures::Q_MONK).map_err(err)?;
    let monk = q_monk_multiply(&Expansion::single(QElement::classical(f.u.clone())), f.k).map_err(err)?;
    ensure(monk == f.expected, || format!("q_monk_multiply gave {monk:?}"))?;
    let fgp = fgp_product(&f.u, &Partition::hook(1, 1), f.k, f.n).map_err(err)?;
    ensure(fgp == f.expected, || format!("fgp_product gave {fgp:?}"))?;
    Ok(format!("{} terms", f.expected.len()))
}

pub fn mn_example() -> Outcome {
    let f = fixtures::parse_product(fixtures::MN_EXAMPLE).map_err(err)?;
    let r: usize = f.header.get("powersum").and_then(|r| r.parse().ok()).ok_or("fixture lacks powersum")?;
    let got = q_powersum_multiply(&f.u, r, f.k).map_err(err)?;
    ensure(got == f.expected, || format!("got {got:?}"))?;
    Ok(format!("{} signed terms", got.len()))
}

pub fn q_minimal() -> Outcome {
    let f = fixtures::parse_reduction(fixtures::Q_MINIMAL).map_err(err)?;
    let base = QLRQuery { u: f.u.clone(), w: f.w.clone(), alpha: f.alpha.clone(), lambda: Partition::hook(2, 2), k: f.k };
    let (path, end) = ll_path(&base, Pick::Smallest);
    ensure(end.is_some(), || "reduction reached zero".into())?;
    let got: Vec<_> = path.iter().map(|(i, q)| (*i, q.u.clone(), q.w.clone(), q.alpha.clone())).collect();
    let want: Vec<_> = f.steps.iter().map(|s| (s.i, s.u.clone(), s.w.clone(), s.alpha.clone())).collect();
    ensure(got == want, || format!("path {got:?}"))?;
    let listed: BTreeMap<Partition, i64> = f.values.iter().cloned().collect();
    for lam in Partition::all_of(4).into_iter().filter(|l| l.fits(f.k, f.n)) {
        let want = listed.get(&lam).copied().unwrap_or(0);
        let got = quantum_lr(&QLRQuery { lambda: lam.clone(), ..base.clone() }).map_err(err)?;
        ensure(got == want, || format!("N for {lam} is {got}, expected {want}"))?;
    }
    Ok(format!("path of {} steps and all |λ|=4 coefficients", path.len()))
}

pub fn classical(n: usize) -> Outcome {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let counts = perms
        .par_iter()
        .map(|u| -> std::result::Result<usize, String> {
            let mut c = 0;
            let amb = Ambient::Ring(n);
            for k in 1..n {
                for (a, b) in hooks(k, n) {
                    let ch = hook_multiply_chains(u, a, b, k, amb).map_err(err)?;
                    let mi = hook_multiply_minimal(u, a, b, k, amb).map_err(err)?;
                    let or = oracle_product(u, &Partition::hook(a, b), k, amb).map_err(err)?;
                    ensure(ch == mi && mi == or, || format!("u={u} k={k} hook ({a},{b}) disagree"))?;
                    c += 1;
                }
            }
            Ok(c)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{} hook products over S_{n}", counts.iter().sum::<usize>()))
}

fn monomials(n: usize, d: u32) -> Vec<QMonomial> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<QMonomial>) {
        if i == cur.len() {
            if left == 0 {
                out.push(QMonomial::new(cur.clone()));
            }
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, d, &mut vec![0; n - 1], &mut out);
    out
}

fn quantum_at(u: &Permutation, exhaustive: bool) -> std::result::Result<usize, String> {
    let n = u.n();
    let mut count = 0;
    for k in 1..n {
        for (a, b) in hooks(k, n) {
            let lam = Partition::hook(a, b);
            let h = q_hook_multiply(u, a, b, k).map_err(err)?;
            let f = fgp_product(u, &lam, k, n).map_err(err)?;
            ensure(h == f, || format!("u={u} k={k} ({a},{b}): hook and fgp products differ"))?;
            let rank = u.length() + lam.size();
            let candidates: BTreeSet<QElement> = if exhaustive {
                Permutation::all(n)
                    .filter(|w| w.length() <= rank && (rank - w.length()) % 2 == 0)
                    .flat_map(|w| monomials(n, ((rank - w.length()) / 2) as u32).into_iter().map(move |q| QElement::new(q, w.clone())))
                    .collect()
            } else {
                h.iter().map(|(x, _)| x.clone()).chain(q_reach(&QElement::classical(u.clone()), k, lam.size())).collect()
            };
            for t in candidates {
                let q = QLRQuery { u: u.clone(), w: t.w.clone(), alpha: t.q.clone(), lambda: lam.clone(), k };
                let c = quantum_lr(&q).map_err(err)?;
                ensure(c == h.coeff(&t), || format!("u={u} k={k} ({a},{b}) at {t}: {c} vs {}", h.coeff(&t)))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

pub fn quantum(n: usize) -> Outcome {
    let small: Vec<Permutation> = Permutation::all(n - 1).collect();
    let a: usize = small.par_iter().map(|u| quantum_at(u, true)).collect::<std::result::Result<Vec<_>, _>>()?.iter().sum();
    let big: Vec<Permutation> = Permutation::all(n).collect();
    let b: usize = big.par_iter().map(|u| quantum_at(u, false)).collect::<std::result::Result<Vec<_>, _>>()?.iter().sum();
    Ok(format!("{a} coefficients over S_{} exhaustively, {b} over S_{n}", n - 1))
}

pub fn peakless(n: usize) -> Outcome {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let res = perms
        .par_iter()
        .map(|z| -> std::result::Result<usize, String> {
            let Some(wit) = find_witness(z) else { return Ok(0) };
            let (s, het) = (z.stats().num_cycles() as i64, z.het() as i64);
            let w = z * &wit.u;
            let mut any = false;
            for a in 1..=wit.rank.max(1) {
                let c = peakless_chains(&wit.u, &w, wit.k, a).map_err(err)?.len() as i64;
                any |= c > 0;
                if is_minimal(z) && !z.is_identity() {
                    let want = binomial(s - 1, het - a as i64);
                    ensure(c == want, || format!("{z} height {a}: {c} vs {want}"))?;
                }
            }
            ensure(any == is_minimal(z), || format!("{z}: peakless chain existence disagrees with minimality"))?;
            Ok(is_minimal(z) as usize)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{} minimal of {} in S_{n}", res.iter().sum::<usize>(), res.len()))
}

pub fn relations() -> Outcome {
    let rep = operators::relation_table();
    let bad: Vec<String> = rep.failures().iter().map(|c| format!("{} {}", c.clause, c.word)).collect();
    ensure(bad.is_empty(), || format!("failed: {}", bad.join(", ")))?;
    Ok(format!("{} relation checks", rep.checks.len()))
}

pub fn paths(n: usize) -> Outcome {
    let letters: Vec<(usize, usize)> = (1..=n).flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut frontier: Vec<Vec<(usize, usize)>> = letters.iter().map(|&l| vec![l]).collect();
    let mut words = Vec::new();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for ap in frontier {
            let w = OperatorWord::from_applied(ap.clone()).unwrap();
            if !is_path_shaped(&w) {
                continue;
            }
            words.push(w);
            next.extend(letters.iter().map(|&l| {
                let mut e = ap.clone();
                e.push(l);
                e
            }));
        }
        frontier = next;
    }
    let res = words
        .par_iter()
        .map(|w| match classify(w) {
            WordClass::Zero => Ok(0),
            WordClass::Path(PathShape::Single | PathShape::Row | PathShape::Column) if w.quantum_count() <= 1 => Ok(1),
            c => Err(format!("{w}: {c} with {} quantum letters", w.quantum_count())),
        })
        .collect::<std::result::Result<Vec<usize>, _>>()?;
    Ok(format!("{} nonzero paths of {} path words", res.iter().sum::<usize>(), words.len()))
}

fn random_forest(n: usize, rng: &mut ChaCha8Rng) -> (OperatorWord, Permutation, usize) {
    loop {
        let m = rng.gen_range(n..=n + 1);
        let u = random_perm(m, rng);
        let k = rng.gen_range(1..m);
        let mut x = QElement::classical(u.clone());
        let mut applied = Vec::new();
        for _ in 0..rng.gen_range(1..m) {
            let opts: Vec<((usize, usize), QElement)> = (1..=m)
                .flat_map(|a| (1..=m).map(move |b| (a, b)))
                .filter(|(a, b)| a != b)
                .filter_map(|(a, b)| act_letter(a, b, &x, k).map(|y| ((a, b), y)))
                .collect();
            let Some((l, y)) = opts.choose(rng).cloned() else { break };
            applied.push(l);
            x = y;
        }
        if applied.is_empty() {
            continue;
        }
        let w = OperatorWord::from_applied(applied).unwrap();
        if is_forest_shaped(&w) {
            return (w, u, k);
        }
    }
}

pub fn forests(n: usize, count: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let samples: Vec<_> = (0..count).map(|_| random_forest(n, &mut rng)).collect();
    samples
        .par_iter()
        .map(|(w, u, k)| -> std::result::Result<(), String> {
            let d = rc_decompose(w, u, *k).map_err(err)?.ok_or_else(|| format!("{w} on {u} at k={k}: no decomposition"))?;
            let same = act(&d.word(), u, *k).map_err(err)? == act(w, u, *k).map_err(err)?;
            ensure(same && d.word().o_shift(u.n(), d.shift).unwrap().is_classical(), || format!("{w} on {u}: bad decomposition"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{count} forests decomposed"))
}

fn o_map(x: &QElement, u: &Permutation) -> Option<QElement> {
    let m = SignedQMonomial::from_monomial(&x.q).mul(&o_shift_monomial(u, &x.w).ok()?).to_monomial()?;
    Some(QElement::new(m, &Permutation::cyclic_shift(x.n()) * &x.w))
}

fn w0_conj(x: &QElement) -> QElement {
    let w0 = Permutation::w0(x.n());
    QElement::new(x.q.reversed(), &(&w0 * &x.w) * &w0)
}

fn w0_dual(x: &QElement, alpha: &QMonomial) -> Option<QElement> {
    Some(QElement::new(alpha.div(&x.q)?.reversed(), &x.w * &Permutation::w0(x.n())))
}

fn isomorphic_via(
    p: &LabeledPoset<QElement>,
    target: &LabeledPoset<QElement>,
    f: impl Fn(&QElement) -> Option<QElement>,
    reverse: bool,
) -> bool {
    let Some(img) = p.elements().iter().map(&f).collect::<Option<Vec<QElement>>>() else { return false };
    let a: BTreeSet<&QElement> = img.iter().collect();
    let b: BTreeSet<&QElement> = target.elements().iter().collect();
    let e1: BTreeSet<(&QElement, &QElement)> = p
        .edges()
        .iter()
        .map(|e| if reverse { (&img[e.to], &img[e.from]) } else { (&img[e.from], &img[e.to]) })
        .collect();
    let te = target.elements();
    let e2: BTreeSet<(&QElement, &QElement)> = target.edges().iter().map(|e| (&te[e.from], &te[e.to])).collect();
    a.len() == img.len() && a == b && e1 == e2
}

pub fn equivalences(n: usize, count: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut samples = Vec::new();
    while samples.len() < count {
        let u = random_perm(n, &mut rng);
        let k = rng.gen_range(1..n);
        let r = rng.gen_range(1..=n);
        if let Some(t) = q_reach(&QElement::classical(u.clone()), k, r).choose(&mut rng) {
            samples.push((u, k, t.clone()));
        }
    }
    samples
        .par_iter()
        .map(|(u, k, t)| -> std::result::Result<(), String> {
            let k = *k;
            let b = QElement::classical(u.clone());
            let p = q_interval(&b, t, k).map_err(err)?;
            let ctx = |s: &str| format!("[{u}, {t}]_{k}: {s}");
            let p1 = q_interval(&o_map(&b, u).ok_or(ctx("shift"))?, &o_map(t, u).ok_or(ctx("shift"))?, k).map_err(err)?;
            ensure(isomorphic_via(&p, &p1, |x| o_map(x, u), false), || ctx("cyclic shift is not an isomorphism"))?;
            let p2 = q_interval(&w0_conj(&b), &w0_conj(t), n - k).map_err(err)?;
            ensure(isomorphic_via(&p, &p2, |x| Some(w0_conj(x)), false), || ctx("w0 conjugation is not an isomorphism"))?;
            let a = t.q.clone();
            let p3 = q_interval(&w0_dual(t, &a).unwrap(), &w0_dual(&b, &a).unwrap(), n - k).map_err(err)?;
            ensure(isomorphic_via(&p, &p3, |x| w0_dual(x, &a), true), || ctx("w0 duality is not an anti-isomorphism"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{count} intervals in S_{n}[q]"))
}

pub fn independence(n: usize) -> Outcome {
    let mut jobs: Vec<(Permutation, Partition, usize, bool)> = Vec::new();
    for u in Permutation::all(n - 1) {
        for k in 1..n - 1 {
            for m in 1..=n - 1 {
                for lam in Partition::all_of(m).into_iter().filter(|l| l.fits(k, n - 1)) {
                    jobs.push((u.clone(), lam, k, false));
                }
            }
        }
    }
    for u in Permutation::all(n) {
        for k in 1..n {
            for (a, b) in hooks(k, n) {
                jobs.push((u.clone(), Partition::hook(a, b), k, true));
            }
        }
    }
    let entries = jobs
        .par_iter()
        .map(|(u, lam, k, hook)| -> std::result::Result<Vec<((Permutation, Partition), i64)>, String> {
            let e = if *hook {
                let (a, b) = lam.as_hook().unwrap();
                q_hook_multiply(u, a, b, *k)
            } else {
                ll_product(u, lam, *k)
            }
            .map_err(err)?;
            Ok(e.iter().filter(|(_, c)| *c != 0).map(|(x, c)| ((&x.w * &u.inverse(), lam.clone()), c)).collect())
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut seen: BTreeMap<(Permutation, Partition), i64> = BTreeMap::new();
    let mut total = 0;
    for (key, c) in entries.into_iter().flatten() {
        total += 1;
        let c0 = *seen.entry(key.clone()).or_insert(c);
        ensure(c0 == c, || format!("ζ={} λ={}: {c0} vs {c}", key.0, key.1))?;
    }
    Ok(format!("{total} coefficients in {} classes", seen.len()))
}

pub fn figures() -> Outcome {
    let figs = fixtures::parse_figures(fixtures::FIGURES).map_err(err)?;
    for f in &figs {
        figure_matches(f).map_err(|e| format!("figure {}: {e}", f.name))?;
    }
    Ok(format!("{} figures", figs.len()))
}

/// Compare one bundled figure against the computed poset.
pub fn figure_matches(f: &fixtures::FigureFixture) -> Outcome {
    match f.order {
        FigureOrder::Classical => {
            let top = f.top.as_ref().ok_or("missing top")?;
            let p = interval_k(&f.bottom.w, &top.w, f.k).map_err(err)?;
            let got: BTreeSet<&Permutation> = p.elements().iter().collect();
            let want: BTreeSet<&Permutation> = f.elements.iter().map(|x| &x.w).collect();
            ensure(got == want && p.len() == f.elements.len(), || format!("{} elements, expected {}", p.len(), f.elements.len()))?;
            if let Some(l) = &f.labels {
                let mut want = l.clone();
                want.sort();
                ensure(p.label_multiset() == want, || format!("labels {:?}", p.label_multiset()))?;
            }
            Ok(format!("{} elements", p.len()))
        }
        FigureOrder::Quantum => {
            let p = q_interval(&f.bottom, f.top.as_ref().ok_or("missing top")?, f.k).map_err(err)?;
            let got: BTreeSet<&QElement> = p.elements().iter().collect();
            let want: BTreeSet<&QElement> = f.elements.iter().collect();
            ensure(got == want && p.len() == f.elements.len(), || format!("{} elements, expected {}", p.len(), f.elements.len()))?;
            if let Some(c) = f.chains {
                ensure(p.chains().len() == c, || format!("{} chains, expected {c}", p.chains().len()))?;
            }
            Ok(format!("{} elements", p.len()))
        }
        FigureOrder::Levels => {
            let (mut classical, mut quantum) = (BTreeSet::new(), BTreeSet::new());
            let mut below = vec![f.bottom.clone()];
            for (r, level) in f.levels.iter().enumerate() {
                let got: BTreeSet<QElement> = q_reach(&f.bottom, f.k, r + 1).into_iter().collect();
                let want: BTreeSet<QElement> = level.iter().cloned().collect();
                ensure(got == want, || format!("level {} is {got:?}", r + 1))?;
                for x in &below {
                    for y in level {
                        if let Some(c) = is_qcover(x, y, f.k).map_err(err)? {
                            let set = if c.kind == CoverKind::Classical { &mut classical } else { &mut quantum };
                            set.insert((x.clone(), y.clone()));
                        }
                    }
                }
                below = level.clone();
            }
            ensure(classical == f.classical_edges.iter().cloned().collect(), || "classical edges differ".into())?;
            ensure(quantum == f.quantum_edges.iter().cloned().collect(), || "quantum edges differ".into())?;
            Ok(format!("{} levels", f.levels.len()))
        }
    }
}

/// Reducing at the largest valid index gives the same coefficient as the smallest.
pub fn pick_order(n: usize) -> Outcome {
    let perms: Vec<Permutation> = Permutation::all(n - 1).collect();
    let counts = perms
        .par_iter()
        .map(|u| -> std::result::Result<usize, String> {
            let m = u.n();
            let mut c = 0;
            for k in 1..m {
                for (a, b) in hooks(k, m) {
                    let lam = Partition::hook(a, b);
                    for t in q_reach(&QElement::classical(u.clone()), k, lam.size()) {
                        let q = QLRQuery { u: u.clone(), w: t.w.clone(), alpha: t.q.clone(), lambda: lam.clone(), k };
                        let s = crate::qschubert::quantum_lr_with(&q, Pick::Smallest).map_err(err)?;
                        let l = crate::qschubert::quantum_lr_with(&q, Pick::Largest).map_err(err)?;
                        ensure(s == l, || format!("u={u} k={k} {lam} at {t}: {s} vs {l}"))?;
                        c += 1;
                    }
                }
            }
            Ok(c)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{} reductions agree", counts.iter().sum::<usize>()))
}
