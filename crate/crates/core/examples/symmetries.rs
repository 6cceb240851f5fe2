use flagmn::qbruhat::q_interval;
use flagmn::qschubert::{o_shift_monomial, SignedQMonomial};
use flagmn::{Permutation, QElement};

fn main() -> flagmn::Result<()> {
    let n = 8;
    let u = Permutation::parse_in("68235741", n)?;
    let top = QElement::parse_in("q_{5,8} 78251346", n)?;
    let k = 5;
    let p = q_interval(&QElement::classical(u.clone()), &top, k)?;
    println!("[{u}, {top}]^q_{k}: {} elements", p.len());

    let o = Permutation::cyclic_shift(n);
    let shift = |x: &QElement| {
        let m = SignedQMonomial::from_monomial(&x.q).mul(&o_shift_monomial(&u, &x.w).unwrap());
        QElement::new(m.to_monomial().expect("nonnegative"), &o * &x.w)
    };
    let p1 = q_interval(&shift(&QElement::classical(u.clone())), &shift(&top), k)?;
    println!("cyclic shift: [{}, {}]^q_{k}: {} elements", &o * &u, shift(&top), p1.len());

    let w0 = Permutation::w0(n);
    let conj = |x: &QElement| QElement::new(x.q.reversed(), &(&w0 * &x.w) * &w0);
    let p2 = q_interval(&conj(&QElement::classical(u.clone())), &conj(&top), n - k)?;
    println!("w0 conjugation: {} elements at k={}", p2.len(), n - k);

    let b3 = QElement::classical(&top.w * &w0);
    let t3 = QElement::new(top.q.reversed(), &u * &w0);
    let p3 = q_interval(&b3, &t3, n - k)?;
    println!("order-reversed dual [{b3}, {t3}]: {} elements", p3.len());
    Ok(())
}
