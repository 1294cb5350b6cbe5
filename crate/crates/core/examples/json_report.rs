use e8d8::report::{branching, central_charges, classification, root_data, Report};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // the fast checks only; `e8d8 report --json PATH` runs everything
    let report = Report::from_checks(vec![root_data(), central_charges(), classification(), branching(4)]);
    println!("{}", serde_json::to_string_pretty(&report.summary)?);
    assert!(report.pass());
    Ok(())
}

fn main() {
    run_example().expect("report example");
}
