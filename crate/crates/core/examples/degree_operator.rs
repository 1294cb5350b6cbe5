use e8d8::embedding::{degree_operator_suite, SuiteConfig};
use e8d8::Chevalley;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = Chevalley::new();
    let config = SuiteConfig {
        max_degree: 3,
        exhaustive_through: 1,
        samples: 40,
        seed: 9,
    };
    let report = degree_operator_suite(&alg, config);
    for r in &report.rows {
        println!(
            "degree {}: {} of {} checked, L_E8(0) exact {}, L_D8(0) exact {}, up to radical {}",
            r.degree, r.vectors_checked, r.basis_size, r.e8_exact, r.d8_exact, r.d8_in_quotient
        );
    }
    assert!(report.pass);
    Ok(())
}

fn main() {
    run_example().expect("degree operator example");
}
