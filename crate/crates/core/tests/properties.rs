mod common;

macro_rules! suite {
    ($name:ident) => {
        #[test]
        fn $name() {
            if let Err(e) = common::$name() {
                panic!("{e}");
            }
        }
    };
}

suite!(s_polynomials_reduce_to_zero);
suite!(normal_form_idempotent);
suite!(principal_component_multiplicative);
suite!(gr_multiplicative);
suite!(leibniz_rule);
suite!(exp_is_homomorphism);
suite!(kernel_closure);
suite!(degree_function_axioms);
