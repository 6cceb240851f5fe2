use flagmn::kbruhat::{find_witness, interval_k, is_minimal, noncrossing_factor, peakless_chains, up_covers_k};
use flagmn::Permutation;

fn main() -> flagmn::Result<()> {
    let u: Permutation = "68231574".parse()?;
    let w: Permutation = "78256134".parse()?;
    let k = 5;
    println!("covers of {u} at k={k}:");
    for (label, c) in up_covers_k(&u, k) {
        println!("  {c} [{label}]");
    }

    let p = interval_k(&u, &w, k)?;
    println!("\n[{u}, {w}]_{k}: {} elements, rank {}", p.len(), p.rank());
    print!("{}", p.to_text());
    println!("label multiset {:?}", p.label_multiset());

    let z = &w * &u.inverse();
    let st = z.stats();
    println!("\nwu^-1 = {}: minimal {}, {} cycles, height {}", z.cycle_string(), is_minimal(&z), st.num_cycles(), st.height);
    for a in 1..=p.rank() {
        let c = peakless_chains(&u, &w, k, a)?;
        println!("  peakless chains of height {a}: {}", c.len());
    }
    let factors: Vec<String> = noncrossing_factor(&z).iter().map(|f| f.cycle_string()).collect();
    println!("noncrossing factors {}", factors.join(" "));

    let crossing = Permutation::parse_in("(1,7,4)(3,6)", 7)?;
    let wit = find_witness(&crossing).expect("every permutation has a witness here");
    println!("\nwitness for {}: [{}, {}]_{} of rank {}", crossing.cycle_string(), wit.u, &crossing * &wit.u, wit.k, wit.rank);
    Ok(())
}
