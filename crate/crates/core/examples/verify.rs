use flagmn::verify::{run_suite, SUITES};

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for name in SUITES {
        match run_suite(name, n).expect("known suite") {
            Ok(m) => println!("{name}: PASS  {m}"),
            Err(m) => println!("{name}: FAIL  {m}"),
        }
    }
}
