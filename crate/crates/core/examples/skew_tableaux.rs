// Semistandard tableaux of shape (4,3,2)/(2,1) and weight (3,2,1), with the
// two Littlewood-Richardson checks side by side.
//
//     cargo run -p ytl-core --example skew_tableaux

use ytl_core::partitions::{parse_partition, skew_shape};
use ytl_core::tableaux::{
    companion_rows, enumerate_ssyt, is_lattice_tableau, is_lr_tableau, Weight,
};

pub fn run_example() -> ytl_core::Result<()> {
    let shape = skew_shape(parse_partition("4,3,2")?, parse_partition("2,1")?)?;
    let weight = Weight::new(vec![3, 2, 1]);
    let all = enumerate_ssyt(&shape, &weight)?;
    println!(
        "{} semistandard tableaux of shape {shape}, weight {:?}",
        all.len(),
        weight.counts()
    );
    for t in &all {
        let companion = is_lr_tableau(t)?;
        let lattice = is_lattice_tableau(t)?;
        assert_eq!(companion, lattice);
        println!(
            "  {:<14} companion {:?}  LR: {companion}",
            t.to_string(),
            companion_rows(t)
        );
    }
    let lr = all
        .iter()
        .filter(|t| is_lr_tableau(t).unwrap_or(false))
        .count();
    println!("LR tableaux: {lr}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> ytl_core::Result<()> {
    run_example()
}
