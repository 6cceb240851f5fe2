use flagmn::operators::{act, act_on, is_zero_word, nonzero_witness, OperatorWord};
use flagmn::qbruhat::q_reach;
use flagmn::qschubert::{apply_x, o_shift_monomial, quantum_lr_with, Pick, QLRQuery, SignedQMonomial};
use flagmn::schubert::Expansion;
use flagmn::{Partition, Permutation, QElement, QMonomial};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = OperatorWord> {
    prop::collection::vec((1..=n, 1..=n).prop_filter("distinct", |(a, b)| a != b), 1..=max_len)
        .prop_map(|l| OperatorWord::new(l).unwrap())
}

fn conj_w0(x: &QElement) -> QElement {
    let w0 = Permutation::w0(x.n());
    QElement::new(x.q.reversed(), &(&w0 * &x.w) * &w0)
}

fn drop_component(q: &QMonomial, r: usize) -> QMonomial {
    let mut a = q.alpha().to_vec();
    a.remove((r - 1).min(a.len() - 1));
    QMonomial::new(a)
}

#[test]
fn relative_label_cases() {
    let p = |s: &str| s.parse::<Permutation>().unwrap();
    let qe = |s: &str| s.parse::<QElement>().unwrap();
    let v: OperatorWord = "v53".parse().unwrap();
    let u = p("15432");
    let t = act(&v, &u, 3).unwrap().unwrap();
    assert_eq!(t, qe("q2q3 13452"));
    for (s, want_word, k, want) in [(1, "v42", 2, "q1q2 2341"), (2, "v42", 3, "q2q3 1234"), (4, "v43", 2, "q2 1342")] {
        let r = u.position(s);
        let tv = v.truncate(s).unwrap();
        assert_eq!(tv.to_string(), want_word.parse::<OperatorWord>().unwrap().to_string());
        let kk = if 3 < r { 3 } else { 2 };
        assert_eq!(kk, k);
        let got = act(&tv, &u.delete(r), kk).unwrap().unwrap();
        assert_eq!(got, qe(want));
        assert_eq!(got, QElement::new(drop_component(&t.q, r), t.w.delete(r)));
    }
    let e1: OperatorWord = "v63".parse().unwrap();
    assert_eq!(e1, v.expand(4));
    assert_eq!(act(&e1, &p("416532"), 4).unwrap(), Some(qe("q3q4 413562")));
    assert_eq!(act(&"v64".parse().unwrap(), &p("165432"), 3).unwrap(), Some(qe("q2q3 145632")));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zero_words_depend_only_on_shape(w in word(5, 3)) {
        let direct = nonzero_witness(&w, 5).is_none();
        prop_assert_eq!(direct, is_zero_word(&w));
    }

    #[test]
    fn cyclic_shift_transports_actions(w in word(5, 3), u in perm(5), k in 1usize..5) {
        let n = 5;
        let o = Permutation::cyclic_shift(n);
        let lhs = act(&w.o_shift(n, 1).unwrap(), &(&o * &u), k).unwrap();
        let rhs = act(&w, &u, k).unwrap().map(|x| {
            let m = SignedQMonomial::from_monomial(&x.q).mul(&o_shift_monomial(&u, &x.w).unwrap());
            QElement::new(m.to_monomial().expect("nonnegative"), &o * &x.w)
        });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn w0_conjugation_transports_actions(w in word(5, 3), u in perm(5), k in 1usize..5) {
        let n = 5;
        let x = QElement::classical(u.clone());
        let lhs = act_on(&w.w0(n).unwrap(), &conj_w0(&x), n - k).unwrap();
        prop_assert_eq!(lhs, act(&w, &u, k).unwrap().map(|y| conj_w0(&y)));
    }

    #[test]
    fn reversal_transports_actions(w in word(5, 3), u in perm(5), k in 1usize..5) {
        let n = 5;
        let w0 = Permutation::w0(n);
        if let Some(t) = act(&w, &u, k).unwrap() {
            let got = act(&w.rho(), &(&t.w * &w0), n - k).unwrap();
            prop_assert_eq!(got, Some(QElement::new(t.q.reversed(), &u * &w0)));
        }
    }

    #[test]
    fn truncation_matches_deletion(w in word(6, 3), u in perm(6), k in 1usize..6, s in 1usize..=6) {
        prop_assume!(!w.support().contains(&s));
        if let Some(t) = act(&w, &u, k).unwrap() {
            let r = u.position(s);
            prop_assert_eq!(t.w.position(s), r);
            let kk = if k < r { k } else { k - 1 };
            prop_assume!(kk >= 1 && kk < 5);
            let got = act(&w.truncate(s).unwrap(), &u.delete(r), kk).unwrap();
            prop_assert_eq!(got, Some(QElement::new(drop_component(&t.q, r), t.w.delete(r))));
        }
    }

    #[test]
    fn multiplication_by_x_commutes(u in perm(4), i in 1usize..=4, j in 1usize..=4) {
        let e = Expansion::single(QElement::classical(u));
        let a = apply_x(&apply_x(&e, i, 4).unwrap(), j, 4).unwrap();
        let b = apply_x(&apply_x(&e, j, 4).unwrap(), i, 4).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reduction_order_is_irrelevant(u in perm(5), k in 1usize..5, a in 1usize..=4, b in 1usize..=4, pick in any::<prop::sample::Index>()) {
        prop_assume!(a <= k && b <= 5 - k);
        let lam = Partition::hook(a, b);
        let reach = q_reach(&QElement::classical(u.clone()), k, lam.size());
        prop_assume!(!reach.is_empty());
        let t = pick.get(&reach);
        let q = QLRQuery { u, w: t.w.clone(), alpha: t.q.clone(), lambda: lam, k };
        prop_assert_eq!(quantum_lr_with(&q, Pick::Smallest).unwrap(), quantum_lr_with(&q, Pick::Largest).unwrap());
    }
}
