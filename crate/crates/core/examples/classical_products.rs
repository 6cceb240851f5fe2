use flagmn::schubert::{
    hook_multiply_chains, hook_multiply_minimal, monk_multiply, oracle_product, powersum_multiply, powersum_via_hooks, Ambient,
    Expansion,
};
use flagmn::{Partition, Permutation, QElement};

fn main() -> flagmn::Result<()> {
    let u: Permutation = "24153".parse()?;
    let n = 5;
    let amb = Ambient::Ring(n);

    let monk = monk_multiply(&Expansion::single(QElement::classical(u.clone())), 2, amb)?;
    println!("S_{u} * S_s2 =\n{monk}");

    let (a, b, k) = (2, 2, 3);
    let chains = hook_multiply_chains(&u, a, b, k, amb)?;
    let minimal = hook_multiply_minimal(&u, a, b, k, amb)?;
    let oracle = oracle_product(&u, &Partition::hook(a, b), k, amb)?;
    println!("S_{u} * s_{}(x1..x{k}) =\n{chains}", Partition::hook(a, b));
    println!("peakless chains, minimal cycles and polynomial oracle agree: {}", chains == minimal && minimal == oracle);

    let p = powersum_multiply(&u, 3, k, amb)?;
    println!("\nS_{u} * p_3(x1..x{k}) =\n{p}");
    println!("matches the alternating hook sum: {}", p == powersum_via_hooks(&u, 3, k, amb)?);

    let big = powersum_multiply(&u, 3, k, Ambient::Polynomial(7))?;
    println!("in the polynomial ring (S_7 indices) the product has {} terms", big.len());
    Ok(())
}
