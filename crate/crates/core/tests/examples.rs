// Each example is compiled into this test binary and run to completion, so
// its assertions are checked by `cargo test`.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));

            #[test]
            fn runs() {
                let _ = main();
            }
        }
    };
}

example!(phi_bijection);
example!(signed_psi);
example!(type_d_rho);
example!(generating_functions);
example!(set_valued_equidistribution);
example!(cayley_reflection_length);
example!(parallel_enumeration);
example!(verify_all);
