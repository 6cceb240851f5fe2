#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use flagmn::kbruhat::{find_witness, is_minimal, peakless_chains, LabeledPoset};
use flagmn::operators::{
    self, act, act_letter, classify, is_forest_shaped, is_path_shaped, rc_decompose, OperatorWord, PathShape, WordClass,
};
use flagmn::qbruhat::{q_interval, q_reach};
use flagmn::qschubert::{ll_product, o_shift_monomial, q_hook_multiply, SignedQMonomial};
use flagmn::schubert::binomial;
use flagmn::{Partition, Permutation, QElement, QMonomial};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Peakless chain counts of height `a` equal `C(s-1, het-a)`, and minimality
/// is equivalent to having a peakless chain, for every `ζ ∈ S_n` with a witness.
pub fn peakless_counts(n: usize) -> Outcome {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let counts = perms
        .par_iter()
        .map(|z| -> Result<(usize, usize), String> {
            let Some(wit) = find_witness(z) else {
                ensure(!is_minimal(z), || format!("{z}: minimal without witness"))?;
                return Ok((0, 0));
            };
            let st = z.stats();
            let (s, het) = (st.num_cycles() as i64, z.het() as i64);
            let w = z * &wit.u;
            let rank = wit.rank.max(1);
            let mut any = false;
            for a in 1..=rank {
                let c = peakless_chains(&wit.u, &w, wit.k, a).map_err(|e| e.to_string())?.len() as i64;
                any |= c > 0;
                if is_minimal(z) && !z.is_identity() {
                    let want = binomial(s - 1, het - a as i64);
                    ensure(c == want, || format!("{z} height {a}: {c} peakless chains, expected {want}"))?;
                }
            }
            ensure(any == is_minimal(z), || format!("{z}: peakless chain exists = {any}, minimal = {}", is_minimal(z)))?;
            Ok((1, is_minimal(z) as usize))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (with, minimal) = counts.iter().fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(format!("(a) {with} witnessed ζ in S_{n}, {minimal} minimal"))
}

/// The degree-two relation table holds with the expected clause sizes.
pub fn relation_table() -> Outcome {
    let rep = operators::relation_table();
    if !rep.all_hold() {
        let f: Vec<String> = rep.failures().iter().map(|c| format!("{} {} ({})", c.clause, c.word, c.expected)).collect();
        return Err(format!("relations failed: {}", f.join(", ")));
    }
    let sizes = [("(1)(i)", 8), ("(1)(ii)", 4), ("(1)(iii)", 12), ("(2)(i)", 6), ("(2)(ii)", 12), ("(2)(iii)", 6)];
    for (c, want) in sizes {
        ensure(rep.count(c) == want, || format!("clause {c} has {} words, expected {want}", rep.count(c)))?;
    }
    Ok(format!("(b) {} relation checks", rep.checks.len()))
}

/// Every nonzero path word on `[n]` is a row xor a column (or a single
/// letter), with at most one quantum letter.
pub fn quantum_paths(n: usize) -> Outcome {
    let letters: Vec<(usize, usize)> = (1..=n).flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut frontier: Vec<Vec<(usize, usize)>> = letters.iter().map(|&l| vec![l]).collect();
    let mut paths = Vec::new();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for ap in frontier {
            let w = OperatorWord::from_applied(ap.clone()).unwrap();
            if !is_path_shaped(&w) {
                continue;
            }
            paths.push(w);
            for &l in &letters {
                let mut e = ap.clone();
                e.push(l);
                next.push(e);
            }
        }
        frontier = next;
    }
    let results = paths
        .par_iter()
        .map(|w| -> Result<usize, String> {
            match classify(w) {
                WordClass::Zero => Ok(0),
                WordClass::Path(PathShape::Single) | WordClass::Path(PathShape::Row) | WordClass::Path(PathShape::Column) => {
                    ensure(w.quantum_count() <= 1, || format!("{w}: {} quantum letters", w.quantum_count()))?;
                    Ok(1)
                }
                c => Err(format!("{w}: classified as {c}")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let nonzero: usize = results.iter().sum();
    Ok(format!("(c) {nonzero} nonzero of {} path words on [{n}]", paths.len()))
}

fn random_forest(rng: &mut ChaCha8Rng) -> (OperatorWord, Permutation, usize) {
    loop {
        let n = rng.gen_range(5..=6);
        let mut img: Vec<usize> = (1..=n).collect();
        img.shuffle(rng);
        let u = Permutation::new(img).unwrap();
        let k = rng.gen_range(1..n);
        let len = rng.gen_range(1..=n - 1);
        let mut x = QElement::classical(u.clone());
        let mut applied = Vec::new();
        for _ in 0..len {
            let opts: Vec<((usize, usize), QElement)> = (1..=n)
                .flat_map(|a| (1..=n).map(move |b| (a, b)))
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

/// Random nonzero forests admit a row-column decomposition that some cyclic
/// shift makes classical.
pub fn forest_decompositions(count: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let samples: Vec<_> = (0..count).map(|_| random_forest(&mut rng)).collect();
    let quantum = samples.iter().filter(|s| s.0.quantum_count() > 0).count();
    samples
        .par_iter()
        .map(|(w, u, k)| -> Result<(), String> {
            let d = rc_decompose(w, u, *k).map_err(|e| e.to_string())?;
            let d = d.ok_or_else(|| format!("{w} on {u} at k={k}: no decomposition"))?;
            let rc = d.word();
            let same = act(&rc, u, *k).map_err(|e| e.to_string())? == act(w, u, *k).map_err(|e| e.to_string())?;
            ensure(same, || format!("{w} on {u}: decomposition {rc} acts differently"))?;
            let n = u.n();
            let shifted = rc.o_shift(n, d.shift).unwrap();
            ensure(shifted.is_classical(), || format!("{rc} shifted by {} is not classical", d.shift))?;
            Ok(())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(format!("(d) {count} forests ({quantum} with quantum letters)"))
}

fn o_map(x: &QElement, u: &Permutation) -> Option<QElement> {
    let n = x.n();
    let o = Permutation::cyclic_shift(n);
    let m = SignedQMonomial::from_monomial(&x.q).mul(&o_shift_monomial(u, &x.w).ok()?).to_monomial()?;
    Some(QElement::new(m, &o * &x.w))
}

fn w0_conj(x: &QElement) -> QElement {
    let w0 = Permutation::w0(x.n());
    QElement::new(x.q.reversed(), &(&w0 * &x.w) * &w0)
}

fn w0_dual(x: &QElement, alpha: &QMonomial) -> Option<QElement> {
    let w0 = Permutation::w0(x.n());
    Some(QElement::new(alpha.div(&x.q)?.reversed(), &x.w * &w0))
}

fn check_iso(
    p: &LabeledPoset<QElement>,
    target: &LabeledPoset<QElement>,
    f: impl Fn(&QElement) -> Option<QElement>,
    reverse: bool,
) -> Result<(), String> {
    let img: Vec<QElement> = p.elements().iter().map(|x| f(x).ok_or_else(|| format!("{x} has no image"))).collect::<Result<_, _>>()?;
    let a: BTreeSet<&QElement> = img.iter().collect();
    let b: BTreeSet<&QElement> = target.elements().iter().collect();
    ensure(a.len() == img.len() && a == b, || format!("element images {a:?} vs {b:?}"))?;
    let e1: BTreeSet<(QElement, QElement)> = p
        .edges()
        .iter()
        .map(|e| {
            let (x, y) = (img[e.from].clone(), img[e.to].clone());
            if reverse { (y, x) } else { (x, y) }
        })
        .collect();
    let te = target.elements();
    let e2: BTreeSet<(QElement, QElement)> = target.edges().iter().map(|e| (te[e.from].clone(), te[e.to].clone())).collect();
    ensure(e1 == e2, || "cover relations differ".to_string())
}

/// The three symmetry maps are poset isomorphisms (the last order-reversing)
/// on random intervals of `S_5[q]`.
pub fn equivalence_isomorphisms(count: usize) -> Outcome {
    let n = 5;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut samples = Vec::new();
    while samples.len() < count {
        let mut img: Vec<usize> = (1..=n).collect();
        img.shuffle(&mut rng);
        let u = Permutation::new(img).unwrap();
        let k = rng.gen_range(1..n);
        let r = rng.gen_range(1..=5);
        let reach = q_reach(&QElement::classical(u.clone()), k, r);
        if let Some(t) = reach.choose(&mut rng) {
            samples.push((u, k, t.clone()));
        }
    }
    let quantum = samples.iter().filter(|s| !s.2.q.is_one()).count();
    samples
        .par_iter()
        .map(|(u, k, t)| -> Result<(), String> {
            let k = *k;
            let bottom = QElement::classical(u.clone());
            let ctx = |e: String| format!("[{u}, {t}]_{k}: {e}");
            let p = q_interval(&bottom, t, k).map_err(|e| ctx(e.to_string()))?;
            ensure(p.contains(t), || ctx("top not in interval".into()))?;
            let b1 = o_map(&bottom, u).ok_or_else(|| ctx("bottom shift".into()))?;
            let t1 = o_map(t, u).ok_or_else(|| ctx("top shift".into()))?;
            let p1 = q_interval(&b1, &t1, k).map_err(|e| ctx(e.to_string()))?;
            check_iso(&p, &p1, |x| o_map(x, u), false).map_err(|e| ctx(format!("cyclic shift: {e}")))?;
            let p2 = q_interval(&w0_conj(&bottom), &w0_conj(t), n - k).map_err(|e| ctx(e.to_string()))?;
            check_iso(&p, &p2, |x| Some(w0_conj(x)), false).map_err(|e| ctx(format!("w0 conjugation: {e}")))?;
            let alpha = t.q.clone();
            let b3 = w0_dual(t, &alpha).unwrap();
            let t3 = w0_dual(&bottom, &alpha).unwrap();
            let p3 = q_interval(&b3, &t3, n - k).map_err(|e| ctx(e.to_string()))?;
            check_iso(&p, &p3, |x| w0_dual(x, &alpha), true).map_err(|e| ctx(format!("w0 duality: {e}")))?;
            Ok(())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(format!("(e) {count} intervals in S_5[q] ({quantum} with q-part)"))
}

fn hooks(k: usize, n: usize) -> Vec<(usize, usize)> {
    (1..=k).flat_map(|a| (1..=n - k).map(move |b| (a, b))).collect()
}

/// Nonzero numerical parts depend only on `wu^{-1}` and `λ`.
pub fn quantum_independence() -> Outcome {
    let mut jobs: Vec<(Permutation, Partition, usize, bool)> = Vec::new();
    for u in Permutation::all(4) {
        for k in 1..4 {
            for m in 1..=4 {
                for lam in Partition::all_of(m).into_iter().filter(|l| l.fits(k, 4)) {
                    jobs.push((u.clone(), lam, k, false));
                }
            }
        }
    }
    for u in Permutation::all(5) {
        for k in 1..5 {
            for (a, b) in hooks(k, 5) {
                jobs.push((u.clone(), Partition::hook(a, b), k, true));
            }
        }
    }
    let entries: Vec<Vec<((Permutation, Partition), i64, String)>> = jobs
        .par_iter()
        .map(|(u, lam, k, hook)| -> Result<_, String> {
            let e = if *hook {
                let (a, b) = lam.as_hook().unwrap();
                q_hook_multiply(u, a, b, *k)
            } else {
                ll_product(u, lam, *k)
            }
            .map_err(|e| e.to_string())?;
            Ok(e.iter()
                .filter(|(_, c)| *c != 0)
                .map(|(x, c)| ((&x.w * &u.inverse(), lam.clone()), c, format!("u={u} k={k} {x}")))
                .collect())
        })
        .collect::<Result<_, _>>()?;
    let mut seen: BTreeMap<(Permutation, Partition), (i64, String)> = BTreeMap::new();
    let mut total = 0;
    for (key, c, from) in entries.into_iter().flatten() {
        total += 1;
        if let Some((c0, from0)) = seen.get(&key) {
            ensure(*c0 == c, || format!("ζ={} λ={}: {c0} at {from0} vs {c} at {from}", key.0, key.1))?;
        } else {
            seen.insert(key, (c, from));
        }
    }
    Ok(format!("(f) {total} nonzero coefficients over {} classes (ζ, λ)", seen.len()))
}
