use flagmn::qbruhat::{is_minimal_interval, is_qcover, q_interval, q_reach, q_up_covers};
use flagmn::{Permutation, QElement};

fn main() -> flagmn::Result<()> {
    let bottom: QElement = "1432".parse()?;
    let k = 2;
    println!("quantum covers of {bottom} at k={k}:");
    for (label, y) in q_up_covers(&bottom, k) {
        let kind = is_qcover(&bottom, &y, k)?.map(|c| format!("{:?}", c.kind)).unwrap_or_default();
        println!("  {y} [{label}] {kind}");
    }
    println!("two levels up: {:?}", q_reach(&bottom, k, 2));

    let u = Permutation::parse_in("41352", 5)?;
    let top = QElement::parse_in("q_{3,5} 52134", 5)?;
    let p = q_interval(&QElement::classical(u.clone()), &top, 3)?;
    println!("\n[{u}, {top}]^q_3 has {} elements and {} chains", p.len(), p.chains().len());
    println!("minimal: {}", is_minimal_interval(&u, &top, 3)?);
    print!("{}", p.to_dot());
    Ok(())
}
