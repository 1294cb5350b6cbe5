use e8d8::sugawara::{check_virasoro, omega_radical_check, Part};
use e8d8::roots::spinor_root;
use e8d8::{Chevalley, GradedVector, Label, VacuumModule, Q};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = Chevalley::new();
    let module = VacuumModule::new(&alg, Q::from_integer(1));
    let l_e8 = e8d8::sugawara::Sugawara::new(module, Label::E8)?;
    let l_d8 = e8d8::sugawara::Sugawara::new(module, Label::D8)?;

    let v = module.apply_element(&alg.e(&spinor_root()), -1, &GradedVector::vacuum())?;
    println!("L_D8(0) e_s(-1)𝟙 = {:?}", l_d8.l(0, &v)?);
    println!("  Cartan part {:?}", l_d8.l_part(0, &v, Part::Cartan)?);
    println!("  root part   {:?}", l_d8.l_part(0, &v, Part::Roots)?);

    let vac = GradedVector::vacuum();
    for (a, b) in [(&l_e8, &l_e8), (&l_d8, &l_d8), (&l_e8, &l_d8)] {
        let r = check_virasoro(2, -2, &vac, a, b)?;
        println!("[L_{:?}(2), L_{:?}(-2)] 𝟙 = {:?} 𝟙", r.a, r.b, r.central_scalar);
        assert!(r.pass);
    }

    let omega = omega_radical_check(&l_e8, &l_d8);
    println!(
        "ω_E8 − ω_D8 nonzero: {}, pairings with weight-zero degree two: {} all zero: {}",
        omega.difference_nonzero,
        omega.spanning_pairings,
        omega.spanning_nonzero == 0
    );
    Ok(())
}

fn main() {
    run_example().expect("sugawara example");
}
