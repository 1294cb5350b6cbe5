// Characters from theta series, and the branching of the E8 vacuum module.

use e8d8::characters::{inv_euler_pow8, theta_series, verify_branching, Lattice};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("Θ_E8   {:?}", theta_series(Lattice::E8, 4));
    println!("Θ_D8   {:?}", theta_series(Lattice::D8, 4));
    println!("Θ_spin {:?}", theta_series(Lattice::D8Spinor, 4));
    println!("η⁻⁸    {:?}", inv_euler_pow8(4));

    let r = verify_branching(8);
    println!("χ_E8       {:?}", r.e8);
    println!("χ_D8 vac   {:?}", r.d8_vacuum);
    println!("χ_D8 spin  {:?}", r.d8_spinor);
    println!("31124 − dim V(2θ) = {:?}", r.degree_two_from_module);
    assert!(r.pass);
    Ok(())
}

fn main() {
    run_example().expect("characters example");
}
