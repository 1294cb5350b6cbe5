use e8d8::sugawara::{central_charge, conformal_weight, solve_central_charge_equality};
use e8d8::{Label, RootSystem, Q};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let one = Q::from_integer(1);
    let ce = central_charge(Label::E8, one)?;
    let cd = central_charge(Label::D8, one)?;
    println!("c(E8, 1) = {ce}, c(D8, 1) = {cd}");

    let levels = solve_central_charge_equality();
    println!("c(E8, k) = c(D8, k) only for k in {levels:?}");
    assert_eq!(levels, [one]);

    // the critical level is rejected
    assert!(central_charge(Label::D8, Q::from_integer(-14)).is_err());

    let d8 = RootSystem::build(Label::D8);
    for (i, name) in [(0, "ω̄1"), (6, "ω̄7"), (7, "ω̄8")] {
        let h = conformal_weight(&d8.fundamental_weights[i], one, Label::D8)?;
        println!("h({name}) = {h}");
    }
    Ok(())
}

fn main() {
    run_example().expect("central charge example");
}
