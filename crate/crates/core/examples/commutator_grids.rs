// Small current-primary and Virasoro grids on N_E8(1, 0).

use e8d8::grids::{current_primary_grid, virasoro_grid, GridConfig, VIRASORO_PAIRS};
use e8d8::{Chevalley, Label, VacuumModule, Q};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = Chevalley::new();
    let module = VacuumModule::new(&alg, Q::from_integer(1));
    let config = GridConfig {
        m_max: 1,
        n_max: 2,
        degree_one: Some(3),
        degree_two: 1,
        degree_three: 0,
        currents: Some(16),
        seed: 2,
    };

    let cp = current_primary_grid(module, Label::E8, config, 0);
    println!("[L_E8(m), a(n)]: {} of {} exact", cp.exact, cp.checks);
    assert!(cp.pass);

    let vir = virasoro_grid(module, &VIRASORO_PAIRS, config);
    for c in &vir.cases {
        println!("{:?}/{:?}: {} of {}", c.a, c.b, c.passed, c.checks);
    }
    assert!(vir.pass);
    Ok(())
}

fn main() {
    run_example().expect("commutator grid example");
}
