// A Chevalley basis of g_E8 from a sign cocycle, and the checks run on it.

use e8d8::chevalley::CheckMode;
use e8d8::{Chevalley, Label};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = Chevalley::new();
    println!("dim g_E8 = {}", alg.dim());

    let theta = alg.e8().highest_root;
    let (e, f) = (alg.e(&theta), alg.f(&theta));
    let h = alg.bracket(&e, &f);
    println!("[e_θ, f_θ] = {h:?}");
    assert_eq!(h, alg.h(&theta));

    let d8 = alg.check_jacobi(Label::D8, CheckMode::Full);
    let e8 = alg.check_jacobi(Label::E8, CheckMode::Sampled { n: 50_000, seed: 3 });
    println!("Jacobi: D8 {} triples, E8 {} sampled", d8.triples_checked, e8.triples_checked);
    assert!(d8.pass && e8.pass);

    let sl2 = alg.check_sl2();
    assert!(sl2.pass);

    let adj = alg.check_branching_adjoint();
    println!(
        "248 = {} + {}, highest weight of the complement is ω̄8: {}",
        adj.dim_d8, adj.dim_coset, adj.highest_weight_is_omega8
    );
    assert!(adj.pass);
    Ok(())
}

fn main() {
    run_example().expect("structure constants example");
}
