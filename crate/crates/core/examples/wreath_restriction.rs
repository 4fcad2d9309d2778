// Restricting irreducible representations of G(d,1,n) to S_n.
//
//     cargo run -p ytl-core --example wreath_restriction

use ytl_core::branching::{
    alpha, pieri_membership_witness, restriction_contains_trivial_s3, restriction_multiplicities,
};
use ytl_core::partitions::parse_multipartition;
use ytl_core::tableaux::count_standard_d_tableaux;

pub fn run_example() -> ytl_core::Result<()> {
    for text in ["1|1|1", "2|1", "1,1|1", "2,1|1|", "1,1,1|"] {
        let mp = parse_multipartition(text)?;
        let table = restriction_multiplicities(&mp)?;
        let terms: Vec<String> = table
            .terms()
            .iter()
            .map(|(p, c)| format!("{c}x({p})"))
            .collect();
        println!(
            "[{mp}] dim {} alpha {} -> {}  (dim check {})",
            count_standard_d_tableaux(&mp)?,
            alpha(&mp),
            terms.join(" + "),
            table.dimension()?
        );
        if mp.size() >= 3 {
            let witness = pieri_membership_witness(&mp, 3)?;
            println!(
                "    trivial S_3 summand: {}, Pieri witness for l=3: {}",
                restriction_contains_trivial_s3(&mp)?,
                witness.map_or("none".to_string(), |w| format!("[{w}]"))
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> ytl_core::Result<()> {
    run_example()
}
