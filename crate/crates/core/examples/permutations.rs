use flagmn::perm::{grassmannian, grassmannian_shape};
use flagmn::{Partition, Permutation};

fn main() -> flagmn::Result<()> {
    let u: Permutation = "68235741".parse()?;
    println!("u = {u}, length {}, descents {:?}, code {:?}", u.length(), u.descents(), u.code());
    println!("inverse {}", u.inverse());

    let z = Permutation::parse_in("(1,7,4)(3,6)", 8)?;
    let st = z.stats();
    println!("ζ = {} = {z}: support {:?}, {} cycles, height {}", z.cycle_string(), st.support, st.num_cycles(), st.height);
    println!("#supp - s = {}", st.min_rank());

    let lam: Partition = "3,1,1".parse()?;
    let v = grassmannian(&lam, 3, 7)?;
    println!("v({lam}, 3) in S_7 = {v}, shape back {}", grassmannian_shape(&v, 3)?);
    println!("hook (2,3) = {}", Partition::hook(3, 2));

    let deleted = Permutation::parse_in("413652", 6)?.delete(3);
    println!("413652 / 3 = {deleted}");
    Ok(())
}
