use flagmn::operators::{
    act, chains_word_bijection, classify, diagram_text, is_zero_word, nonzero_witness, rc_decompose, relation_table, row_shift, OperatorWord,
};
use flagmn::{Permutation, QElement};

fn main() -> flagmn::Result<()> {
    let w: OperatorWord = "v(4,1) v(1,2) v(3,4) v(4,5)".parse()?;
    let u: Permutation = "41352".parse()?;
    let t = act(&w, &u, 3)?.expect("nonzero");
    println!("{w} acting on {u} at k=3 gives {t}");
    println!("class: {}, minimal: {}", classify(&w), w.is_minimal());
    println!("{}\n", diagram_text(&w, 5)?);

    let bottom = QElement::classical(u.clone());
    let cw = chains_word_bijection(&bottom, &t, 3)?;
    println!("chain words of [{u}, {t}]^q_3 (bijective: {}):", cw.is_bijection(&bottom, &t, 3));
    for word in cw.words() {
        println!("  {word}");
    }

    let square: OperatorWord = "v13 v13".parse()?;
    println!("\n{square} is zero: {}", is_zero_word(&square));

    let row = OperatorWord::from_applied(vec![(5, 9), (6, 7), (7, 8), (9, 1), (1, 2), (2, 3), (3, 4)])?;
    println!("{row}: {}; shifting by {:?} gives {}", classify(&row), row_shift(&row), row.o_shift(9, 5)?);

    let tree = OperatorWord::from_applied(vec![(3, 4), (1, 3), (5, 6), (3, 5), (5, 7), (2, 5)])?;
    let (v, k) = nonzero_witness(&tree, 7).expect("the tree acts nonzero somewhere");
    if let Some(d) = rc_decompose(&tree, &v, k)? {
        println!("\n{tree} on {v} at k={k} equals row {} times column {} (shift {})", d.row, d.column, d.shift);
    }

    let rep = relation_table();
    println!("\ndegree-two relations: {} checks, all hold: {}", rep.checks.len(), rep.all_hold());
    Ok(())
}
