use e8d8::classification::{enumerate_admissible, integrality_filter_report, lowest_weights};
use e8d8::Label;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for l in lowest_weights(Label::D8, 1) {
        println!("D8 level 1: {:<4} h = {}", l.name, l.conformal_weight);
    }
    println!("E8 level 1: {} module(s)", enumerate_admissible(Label::E8, 1).len());
    println!("D8 level 2: {} modules", enumerate_admissible(Label::D8, 2).len());

    let r = integrality_filter_report(Label::E8, 2);
    println!("E8 level 2: {} of {} box points admissible, forms agree: {}", r.admissible, r.candidates, r.pass);
    Ok(())
}

fn main() {
    run_example().expect("classification example");
}
