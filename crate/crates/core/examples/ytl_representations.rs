// Irreducible representations of YTL_{d,n} and the dimension of the algebra.
//
//     cargo run -p ytl-core --example ytl_representations

use ytl_core::branching::{classify_r, ytl_dimension_formula, ytl_dimension_sum};
use ytl_core::tableaux::count_standard_d_tableaux;

pub fn run_example() -> ytl_core::Result<()> {
    let c = classify_r(2, 3)?;
    println!("R(2,3): {} labels", c.total());
    for mp in c.members() {
        println!("  [{mp}] dim {}", count_standard_d_tableaux(mp)?);
    }

    println!("\n d  n  formula        sum");
    for d in 1..=4 {
        for n in 3..=8 {
            let formula = ytl_dimension_formula(d, n)?;
            let sum = ytl_dimension_sum(d, n)?;
            assert_eq!(formula, sum);
            println!("{d:2} {n:2} {formula:8} {sum:10}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> ytl_core::Result<()> {
    run_example()
}
