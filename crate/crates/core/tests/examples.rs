macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(partitions_and_shapes, "partitions_and_shapes.rs");
example!(skew_tableaux, "skew_tableaux.rs");
example!(schur_products, "schur_products.rs");
example!(wreath_restriction, "wreath_restriction.rs");
example!(ytl_representations, "ytl_representations.rs");

#[test]
fn partitions_example_runs() {
    partitions_and_shapes::run_example().expect("example runs");
}

#[test]
fn tableaux_example_runs() {
    skew_tableaux::run_example().expect("example runs");
}

#[test]
fn schur_products_example_runs() {
    schur_products::run_example().expect("example runs");
}

#[test]
fn restriction_example_runs() {
    wreath_restriction::run_example().expect("example runs");
}

#[test]
fn ytl_example_runs() {
    ytl_representations::run_example().expect("example runs");
}
