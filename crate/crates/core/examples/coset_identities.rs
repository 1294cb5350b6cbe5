// The identities over positive E8 roots outside D8 that make L_D8(0) act by 1 on g_E8.

use e8d8::embedding::{case_formula, identity_report, EmbeddingChecks, Identity};
use e8d8::roots::spinor_root;
use e8d8::Chevalley;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = Chevalley::new();
    let checks = EmbeddingChecks::new(&alg);

    let s = spinor_root();
    let sums = checks.sums(&s)?;
    println!("spinor root: {sums:?}, closed form {:?}", case_formula(&s));

    for row in checks.cartan_image(&s)? {
        println!("{:<32} {} = {}", row.check, row.lhs, row.rhs);
    }
    println!("{:?}", checks.dense_oracle(&s)?);

    let report = identity_report(&Identity::ALL, 0);
    println!("{} rows over {} roots, all pass: {}", report.rows.len(), report.coset_roots, report.pass);
    assert!(report.pass);

    // a root of D8 is rejected
    assert!(checks.sums(&alg.d8().highest_root).is_err());
    Ok(())
}

fn main() {
    run_example().expect("coset identities example");
}
