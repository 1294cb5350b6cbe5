macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(root_data, "root_data.rs", root_data_example_runs);
example!(structure_constants, "structure_constants.rs", structure_constants_example_runs);
example!(central_charge, "central_charge.rs", central_charge_example_runs);
example!(vacuum_module, "vacuum_module.rs", vacuum_module_example_runs);
example!(sugawara_operators, "sugawara_operators.rs", sugawara_operators_example_runs);
example!(coset_identities, "coset_identities.rs", coset_identities_example_runs);
example!(degree_operator, "degree_operator.rs", degree_operator_example_runs);
example!(commutator_grids, "commutator_grids.rs", commutator_grids_example_runs);
example!(classification, "classification.rs", classification_example_runs);
example!(characters, "characters.rs", characters_example_runs);
example!(json_report, "json_report.rs", json_report_example_runs);
