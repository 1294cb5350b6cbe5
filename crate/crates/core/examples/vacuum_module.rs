// The graded vacuum module N_E8(1, 0): PBW vectors, modes, the Shapovalov form
// and singular vectors.

use e8d8::fock::{pbw_basis, pbw_dimension};
use e8d8::roots::spinor_root;
use e8d8::{Chevalley, GradedVector, Label, VacuumModule, Q};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = Chevalley::new();
    let module = VacuumModule::new(&alg, Q::from_integer(1));

    for d in 1..=3 {
        println!("degree {d}: {} PBW vectors", pbw_dimension(248, d));
    }
    assert_eq!(pbw_basis(&alg, 2, Label::E8).len(), 31_124);

    let theta = alg.e8().highest_root;
    let v = module.word(&[(alg.e(&theta), -1), (alg.e(&theta), -1)])?;
    println!("e_θ(-1)² 𝟙 = {v:?}");
    println!("  singular for ĝ_E8: {}", module.is_singular(&v, Label::E8));
    println!("  in the radical: {}", module.in_radical(&v));

    let s = module.apply_element(&alg.e(&spinor_root()), -1, &GradedVector::vacuum())?;
    let found = module.find_singular_vectors(1, Label::D8)?;
    println!("degree-one D8-singular vectors: {}", found.len());
    assert!(module.is_singular(&s, Label::D8));

    // the form is contravariant, so only vectors of equal weight pair
    let f = module.apply_element(&alg.f(&theta), -1, &GradedVector::vacuum())?;
    let e = module.apply_element(&alg.e(&theta), -1, &GradedVector::vacuum())?;
    println!("⟨e_θ(-1)𝟙, e_θ(-1)𝟙⟩ = {}", module.shapovalov_pair(&e, &e));
    println!("⟨f_θ(-1)𝟙, e_θ(-1)𝟙⟩ = {}", module.shapovalov_pair(&f, &e));
    Ok(())
}

fn main() {
    run_example().expect("vacuum module example");
}
