use flagmn::qbruhat::QMonomial;
use flagmn::qschubert::{ll_path, ll_product, quantum_lr, varpi, Pick, QLRQuery};
use flagmn::{Partition, Permutation};

fn main() -> flagmn::Result<()> {
    let n = 8;
    let q = QLRQuery {
        u: "68235741".parse()?,
        w: "78251346".parse()?,
        alpha: QMonomial::q_ij(n, 5, 8),
        lambda: "2,2".parse()?,
        k: 5,
    };
    let varpis: Vec<i64> = (1..n).map(|i| varpi(&q.alpha, i)).collect::<flagmn::Result<_>>()?;
    println!("varpi_i(alpha) for i=1..7: {varpis:?}");
    let (path, end) = ll_path(&q, Pick::Smallest);
    for (i, step) in &path {
        println!("step i={i}: u={} w={} alpha={}", step.u, step.w, step.alpha);
    }
    println!("reduced to a classical coefficient: {}", end.is_some());
    for lam in Partition::all_of(4).into_iter().filter(|l| l.fits(5, 8)) {
        println!("N for {lam} = {}", quantum_lr(&QLRQuery { lambda: lam.clone(), ..q.clone() })?);
    }

    let u: Permutation = "2413".parse()?;
    println!("\nS_{u} * s^q_(2,1)(x1,x2) by reduction =\n{}", ll_product(&u, &"2,1".parse()?, 2)?);
    Ok(())
}
