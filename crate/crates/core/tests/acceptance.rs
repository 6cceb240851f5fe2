use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use flagmn::fixtures::{self, FigureOrder};
use flagmn::kbruhat::interval_k;
use flagmn::qbruhat::{is_qcover, q_interval, q_reach, CoverKind};
use flagmn::qschubert::{
    fgp_product, ll_path, q_hook_multiply, q_monk_multiply, q_powersum_multiply, quantum_lr, Pick, QLRQuery,
};
use flagmn::schubert::{hook_multiply_chains, hook_multiply_minimal, oracle_product, Ambient, Expansion};
use flagmn::{Partition, Permutation, QElement, QMonomial};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

mod common;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1() -> Outcome {
    let f = fixtures::parse_product(fixtures::Q_MONK).map_err(|e| e.to_string())?;
    let u = QElement::classical(f.u.clone());
    let monk = q_monk_multiply(&Expansion::single(u), f.k).map_err(|e| e.to_string())?;
    ensure(monk == f.expected, || format!("q_monk_multiply gave {monk:?}"))?;
    let fgp = fgp_product(&f.u, &Partition::new(vec![1]).unwrap(), f.k, f.n).map_err(|e| e.to_string())?;
    ensure(fgp == f.expected, || format!("fgp_product gave {fgp:?}"))?;
    Ok(format!("{} terms via q_monk_multiply and fgp_product", f.expected.len()))
}

fn c2() -> Outcome {
    let f = fixtures::parse_product(fixtures::MN_EXAMPLE).map_err(|e| e.to_string())?;
    let r: usize = f.header["powersum"].parse().unwrap();
    let got = q_powersum_multiply(&f.u, r, f.k).map_err(|e| e.to_string())?;
    ensure(got == f.expected, || format!("expected {:?}\ngot {:?}", f.expected, got))?;
    Ok(format!("{} signed terms", got.len()))
}

fn c3() -> Outcome {
    let f = fixtures::parse_reduction(fixtures::Q_MINIMAL).map_err(|e| e.to_string())?;
    let base = QLRQuery { u: f.u.clone(), w: f.w.clone(), alpha: f.alpha.clone(), lambda: Partition::hook(2, 2), k: f.k };
    let (path, end) = ll_path(&base, Pick::Smallest);
    ensure(end.is_some(), || "reduction returned zero".into())?;
    let got: Vec<_> = path.iter().map(|(i, q)| (*i, q.u.clone(), q.w.clone(), q.alpha.clone())).collect();
    let want: Vec<_> = f.steps.iter().map(|s| (s.i, s.u.clone(), s.w.clone(), s.alpha.clone())).collect();
    ensure(got == want, || format!("path {got:?}"))?;
    let listed: BTreeMap<Partition, i64> = f.values.iter().cloned().collect();
    for lam in Partition::all_of(4).into_iter().filter(|l| l.fits(f.k, f.n)) {
        let want = listed.get(&lam).copied().unwrap_or(0);
        let got = quantum_lr(&QLRQuery { lambda: lam.clone(), ..base.clone() }).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("N for {lam} is {got}, expected {want}"))?;
    }
    Ok("path i=7,6,5; N=1 exactly for (2,1,1),(2,2)".into())
}

fn hooks(k: usize, n: usize) -> Vec<(usize, usize)> {
    (1..=k).flat_map(|a| (1..=n - k).map(move |b| (a, b))).collect()
}

fn c4() -> Outcome {
    let n = 5;
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let checked: usize = perms
        .par_iter()
        .map(|u| -> Result<usize, String> {
            let mut c = 0;
            for k in 1..n {
                for (a, b) in hooks(k, n) {
                    let amb = Ambient::Ring(n);
                    let ch = hook_multiply_chains(u, a, b, k, amb).map_err(|e| e.to_string())?;
                    let mi = hook_multiply_minimal(u, a, b, k, amb).map_err(|e| e.to_string())?;
                    let or = oracle_product(u, &Partition::hook(a, b), k, amb).map_err(|e| e.to_string())?;
                    ensure(ch == mi && mi == or, || format!("u={u} k={k} hook=({a},{b}): {ch:?} / {mi:?} / {or:?}"))?;
                    c += 1;
                }
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!("{checked} products over S_5 agree three ways"))
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

fn quantum_check(u: &Permutation, exhaustive: bool) -> Result<usize, String> {
    let n = u.n();
    let mut count = 0;
    for k in 1..n {
        for (a, b) in hooks(k, n) {
            let lam = Partition::hook(a, b);
            let h = q_hook_multiply(u, a, b, k).map_err(|e| e.to_string())?;
            let f = fgp_product(u, &lam, k, n).map_err(|e| e.to_string())?;
            ensure(h == f, || format!("u={u} k={k} ({a},{b}): hook {h:?} vs fgp {f:?}"))?;
            let rank = u.length() + lam.size();
            let candidates: BTreeSet<QElement> = if exhaustive {
                Permutation::all(n)
                    .filter(|w| w.length() <= rank && (rank - w.length()) % 2 == 0)
                    .flat_map(|w| {
                        monomials(n, ((rank - w.length()) / 2) as u32)
                            .into_iter()
                            .map(move |q| QElement::new(q, w.clone()))
                    })
                    .collect()
            } else {
                h.iter()
                    .map(|(x, _)| x.clone())
                    .chain(f.iter().map(|(x, _)| x.clone()))
                    .chain(q_reach(&QElement::classical(u.clone()), k, lam.size()))
                    .collect()
            };
            for t in candidates {
                let q = QLRQuery { u: u.clone(), w: t.w.clone(), alpha: t.q.clone(), lambda: lam.clone(), k };
                let n_lr = quantum_lr(&q).map_err(|e| e.to_string())?;
                ensure(n_lr == h.coeff(&t), || format!("u={u} k={k} ({a},{b}) at {t}: lr {n_lr} vs {}", h.coeff(&t)))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn c5() -> Outcome {
    let s4: Vec<Permutation> = Permutation::all(4).collect();
    let a: usize = s4.par_iter().map(|u| quantum_check(u, true)).collect::<Result<Vec<_>, _>>()?.into_iter().sum();
    let mut s5: Vec<Permutation> = Permutation::all(5).collect();
    s5.shuffle(&mut ChaCha8Rng::seed_from_u64(5));
    let b: usize = s5.par_iter().map(|u| quantum_check(u, false)).collect::<Result<Vec<_>, _>>()?.into_iter().sum();
    Ok(format!("S_4 exhaustive ({a} coefficients), all {} of S_5 ({b} coefficients)", s5.len()))
}

fn c6() -> Outcome {
    let mut parts = Vec::new();
    parts.push(common::peakless_counts(6)?);
    parts.push(common::relation_table()?);
    parts.push(common::quantum_paths(5)?);
    parts.push(common::forest_decompositions(500)?);
    parts.push(common::equivalence_isomorphisms(100)?);
    parts.push(common::quantum_independence()?);
    Ok(parts.join("; "))
}

fn c7() -> Outcome {
    let figs = fixtures::parse_figures(fixtures::FIGURES).map_err(|e| e.to_string())?;
    let mut names = Vec::new();
    for f in &figs {
        match f.order {
            FigureOrder::Classical => {
                let top = f.top.as_ref().unwrap();
                let p = interval_k(&f.bottom.w, &top.w, f.k).map_err(|e| e.to_string())?;
                let got: BTreeSet<Permutation> = p.elements().iter().cloned().collect();
                let want: BTreeSet<Permutation> = f.elements.iter().map(|x| x.w.clone()).collect();
                ensure(got == want && p.len() == f.elements.len(), || format!("{}: elements {got:?}", f.name))?;
                if let Some(l) = &f.labels {
                    let mut want = l.clone();
                    want.sort();
                    ensure(p.label_multiset() == want, || format!("{}: labels {:?}", f.name, p.label_multiset()))?;
                }
            }
            FigureOrder::Quantum => {
                let p = q_interval(&f.bottom, f.top.as_ref().unwrap(), f.k).map_err(|e| e.to_string())?;
                let got: BTreeSet<QElement> = p.elements().iter().cloned().collect();
                let want: BTreeSet<QElement> = f.elements.iter().cloned().collect();
                ensure(got == want && p.len() == f.elements.len(), || format!("{}: elements {got:?}", f.name))?;
                if let Some(c) = f.chains {
                    ensure(p.chains().len() == c, || format!("{}: {} chains", f.name, p.chains().len()))?;
                }
            }
            FigureOrder::Levels => {
                let mut edges = (BTreeSet::new(), BTreeSet::new());
                let mut below = vec![f.bottom.clone()];
                for (r, level) in f.levels.iter().enumerate() {
                    let got: BTreeSet<QElement> = q_reach(&f.bottom, f.k, r + 1).into_iter().collect();
                    let want: BTreeSet<QElement> = level.iter().cloned().collect();
                    ensure(got == want, || format!("{}: level {} is {got:?}", f.name, r + 1))?;
                    for x in &below {
                        for y in level {
                            if let Some(c) = is_qcover(x, y, f.k).map_err(|e| e.to_string())? {
                                let set = if c.kind == CoverKind::Classical { &mut edges.0 } else { &mut edges.1 };
                                set.insert((x.clone(), y.clone()));
                            }
                        }
                    }
                    below = level.clone();
                }
                let want0: BTreeSet<_> = f.classical_edges.iter().cloned().collect();
                let want1: BTreeSet<_> = f.quantum_edges.iter().cloned().collect();
                ensure(edges.0 == want0, || format!("{}: classical edges {:?}", f.name, edges.0))?;
                ensure(edges.1 == want1, || format!("{}: quantum edges {:?}", f.name, edges.1))?;
            }
        }
        names.push(f.name.clone());
    }
    Ok(format!("figures {}", names.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("quantum Monk regression", c1),
        ("quantum Murnaghan-Nakayama example", c2),
        ("Leung-Li reduction example", c3),
        ("classical oracle equivalence on S_5", c4),
        ("quantum triple-oracle equivalence", c5),
        ("property suites", c6),
        ("figure regressions", c7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {}: PASS  {name} [{secs:.1}s] {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{secs:.1}s] {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
