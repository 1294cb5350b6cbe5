// Root data for E8 and D8 in a common copy of R^8.

use e8d8::roots::{coset_positive_roots, spinor_root, underlined_d8_roots};
use e8d8::{Label, RootSystem};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e8 = RootSystem::build(Label::E8);
    let d8 = RootSystem::build(Label::D8);

    for rs in [&e8, &d8] {
        let theta = rs
            .simple_coefficients(&rs.highest_root)
            .ok_or("highest root is not in the root lattice")?;
        println!(
            "{:?}: {} positive roots, dim {}, h∨ {}, θ = {:?}",
            rs.label,
            rs.positive_roots.len(),
            rs.dimension,
            rs.dual_coxeter,
            theta
        );
    }

    let coset = coset_positive_roots(&e8, &d8);
    println!("positive E8 roots outside D8: {}", coset.len());
    assert_eq!(coset.len(), 64);

    let s = spinor_root();
    println!("spinor root {s:?}, height {:?}", e8.height(&s));

    // the eight D8 roots whose coroots span the Cartan subalgebra
    for a in underlined_d8_roots() {
        assert!(d8.is_root(&a));
    }

    let dim = e8.weyl_dimension(&e8.highest_root.scale(2));
    println!("dim V(2θ) for E8 = {dim}");
    Ok(())
}

fn main() {
    run_example().expect("root data example");
}
