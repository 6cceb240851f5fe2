use flagmn::qschubert::{fgp_product, q_hook_multiply, q_monk_multiply, q_powersum_multiply, quantum_schubert_poly};
use flagmn::schubert::Expansion;
use flagmn::{Partition, Permutation, QElement};

fn main() -> flagmn::Result<()> {
    let u: Permutation = "1432".parse()?;
    let monk = q_monk_multiply(&Expansion::single(QElement::classical(u.clone())), 2)?;
    println!("quantum Monk, S_{u} * S_s2 =\n{monk}");
    println!("same via the quantization oracle: {}", monk == fgp_product(&u, &Partition::hook(1, 1), 2, 4)?);

    let hook = q_hook_multiply(&u, 2, 1, 2)?;
    println!("\nS_{u} * s^q_(1,1)(x1,x2) =\n{hook}");

    println!("quantum Schubert polynomial of 1432: {}", quantum_schubert_poly(&u)?);

    let big: Permutation = "68235741".parse()?;
    let mn = q_powersum_multiply(&big, 4, 5)?;
    println!("\nS_{big} * p^q_4(x1..x5) has {} terms:\n{mn}", mn.len());
    Ok(())
}
