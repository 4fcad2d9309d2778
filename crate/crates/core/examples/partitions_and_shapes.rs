// Partitions, skew shapes, multipartitions and Catalan numbers.
//
//     cargo run -p ytl-core --example partitions_and_shapes

use ytl_core::partitions::{
    catalan, multipartitions_of, parse_partition, partitions_of, skew_shape,
};

pub fn run_example() -> ytl_core::Result<()> {
    let lam = parse_partition("4,3,2")?;
    let nodes: Vec<String> = lam
        .removable_nodes()
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("removable nodes of ({lam}): {}", nodes.join(" "));

    let shape = skew_shape(lam, parse_partition("2,1")?)?;
    println!("skew shape {shape} has {} cells", shape.size());

    for n in 0..=6 {
        let all: Vec<String> = partitions_of(n).iter().map(|p| format!("({p})")).collect();
        println!("p({n}) = {:2}: {}", all.len(), all.join(" "));
    }

    let bipartitions = multipartitions_of(2, 2)?;
    let text: Vec<String> = bipartitions.iter().map(|m| format!("[{m}]")).collect();
    println!("2-partitions of 2: {}", text.join(" "));

    let cats = (0..=10)
        .map(catalan)
        .collect::<ytl_core::Result<Vec<_>>>()?;
    println!("Catalan numbers C_0..C_10: {cats:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> ytl_core::Result<()> {
    run_example()
}
