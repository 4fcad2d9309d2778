// Littlewood-Richardson coefficients, Schur products and Pieri's rule.
//
//     cargo run -p ytl-core --example schur_products

use ytl_core::lr::{
    expansion_product, lr_coefficient, max_attained_first_row, pieri_row, schur_product,
    SchurExpansion,
};
use ytl_core::partitions::parse_partition;

fn show(e: &SchurExpansion) -> String {
    let terms: Vec<String> = e
        .iter()
        .map(|(p, c)| {
            if c == 1 {
                format!("s({p})")
            } else {
                format!("{c} s({p})")
            }
        })
        .collect();
    terms.join(" + ")
}

pub fn run_example() -> ytl_core::Result<()> {
    let (lam, mu, nu) = (
        parse_partition("2,1")?,
        parse_partition("3,2,1")?,
        parse_partition("4,3,2")?,
    );
    println!(
        "c^({nu})_({lam}),({mu}) = {}",
        lr_coefficient(&lam, &mu, &nu)
    );

    let square = schur_product(&lam, &lam)?;
    println!("s(2,1)^2 = {}", show(&square));

    let one = parse_partition("1")?;
    let cube = expansion_product(
        &expansion_product(&SchurExpansion::single(one.clone()), &one)?,
        &one,
    )?;
    println!("s(1)^3 = {}", show(&cube));

    println!("s(2,1) s(2) = {}", show(&pieri_row(&lam, 2)?));
    println!(
        "largest first row in s(2,1) s(3,2,1): {} (= {} + {})",
        max_attained_first_row(&lam, &mu)?,
        lam.first_part(),
        mu.first_part()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> ytl_core::Result<()> {
    run_example()
}
