// Acceptance criteria for the level-one D8 ⊂ E8 embedding.
//
// Every comparison is exact over Q or Z: the pinned tolerance is zero
// everywhere. Sample sizes and seeds are the `SuiteOptions` defaults.

use std::io::Write;

use e8d8::report::{self, Check, SuiteOptions};
use e8d8::Chevalley;
use serde_json::Value;

const TOLERANCE: &str = "exact";

struct Line {
    n: usize,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn emit(line: &Line) {
    // straight to the stream so the line survives test output capture
    let text = format!(
        "criterion {:>2} {:<28} {} [{}] {}\n",
        line.n,
        line.title,
        if line.pass { "PASS" } else { "FAIL" },
        TOLERANCE,
        line.detail
    );
    let _ = std::io::stderr().write_all(text.as_bytes());
}

fn num(v: &Value) -> String {
    v.to_string()
}

fn criterion(n: usize, title: &'static str, check: &Check, detail: impl FnOnce(&Value) -> String) -> Line {
    Line {
        n,
        title,
        pass: check.pass,
        detail: detail(&check.details),
    }
}

#[test]
fn acceptance() {
    let opts = SuiteOptions::default();
    let alg = Chevalley::new();
    let mut lines = Vec::new();

    let c = report::root_data();
    lines.push(criterion(1, "root data", &c, |d| {
        format!(
            "positive roots {}, dims {}, h∨ {}, θ_E8 {}, θ_D8 {}",
            d["positive_roots"], d["dimension"], d["dual_coxeter"], d["theta_e8"], d["theta_d8"]
        )
    }));

    let c = report::structure_constants(&alg, opts.e8_jacobi_samples, opts.seed);
    lines.push(criterion(2, "structure constants", &c, |d| {
        format!(
            "Jacobi D8 {} triples, E8 {} triples ({}), sl2 triples {}",
            d["jacobi_d8"]["triples_checked"],
            d["jacobi_e8"]["triples_checked"],
            d["jacobi_e8"]["mode"],
            d["sl2"]["roots_checked"]
        )
        .replace('"', "")
    }));

    let c = report::central_charges();
    lines.push(criterion(3, "central charges", &c, |d| {
        format!("c(E8,1) = {}, c(D8,1) = {}, equal only at k ∈ {}", d["c_e8"], d["c_d8"], d["equal_at"]).replace('"', "")
    }));

    let c = report::coset_identities(opts.second_cocycle);
    lines.push(criterion(4, "coset-root identities", &c, |d| {
        format!(
            "{} roots, {} rows, second cocycle {} rows differing",
            d["coset_roots"], d["rows"], d["seed_invariance"]["differing"]
        )
    }));

    let c = report::degree_operator(&alg, opts.degree_operator);
    lines.push(criterion(5, "L_D8(0) is the degree", &c, |d| {
        let rows = d.as_array().cloned().unwrap_or_default();
        rows.iter()
            .map(|r| {
                format!(
                    "deg {}: {}/{}{} E8 exact {}, D8 exact in N {}, D8 = E8 mod radical {}",
                    r["degree"],
                    r["vectors_checked"],
                    r["basis_size"],
                    if r["exhaustive"] == Value::Bool(true) { "" } else { " sampled," },
                    num(&r["e8_exact"]),
                    num(&r["d8_exact"]),
                    num(&r["d8_in_quotient"])
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    }));

    let cp = report::current_primary(&alg, opts.current_primary);
    let vir = report::virasoro(&alg, opts.virasoro, opts.virasoro_cap);
    let cases = vir.details["cases"].as_array().cloned().unwrap_or_default();
    lines.push(Line {
        n: 6,
        title: "current and Virasoro grids",
        pass: cp.pass && vir.pass,
        detail: format!(
            "current-primary {}/{} exact over {} vectors x {} currents ({} beyond cap); Virasoro {} ({} beyond cap), c/2 on 𝟙 at (2,-2): {}",
            cp.details["exact"],
            cp.details["checks"],
            cp.details["vectors"],
            cp.details["currents"],
            cp.details["skipped"],
            cases
                .iter()
                .map(|c| format!("{}/{} {}/{}", c["a"], c["b"], c["passed"], c["checks"]).replace('"', ""))
                .collect::<Vec<_>>()
                .join(", "),
            vir.details["skipped"],
            cases
                .iter()
                .map(|c| c["central_on_vacuum"].to_string().replace('"', ""))
                .collect::<Vec<_>>()
                .join(" ")
        ),
    });

    let c = report::singular_vectors(&alg);
    lines.push(criterion(7, "singular vectors", &c, |d| {
        format!(
            "e_θ(-1)²𝟙 E8-singular {}, e_s(-1)𝟙 D8-singular {}, degree-one D8-singular dim {}",
            d["e_theta_squared_e8_singular"], d["e_spinor_d8_singular"], d["degree_one_d8_singular_dim"]
        )
    }));

    let c = report::omega_radical(&alg);
    lines.push(criterion(8, "omega in the quotient", &c, |d| {
        format!(
            "ω_E8 − ω_D8 nonzero {}, {} slice pairings ({} nonzero), {} PBW pairings ({} nonzero)",
            d["difference_nonzero"], d["spanning_pairings"], d["spanning_nonzero"], d["pbw_pairings"], d["pbw_nonzero"]
        )
    }));

    let c = report::classification();
    lines.push(criterion(9, "classification", &c, |d| {
        let d8 = d["d8"].as_array().cloned().unwrap_or_default();
        let list: Vec<String> = d8
            .iter()
            .map(|l| format!("{} h={}", l["name"], l["conformal_weight"]).replace('"', ""))
            .collect();
        format!("D8: {}; E8: {} weight(s)", list.join(", "), d["e8"].as_array().map_or(0, |a| a.len()))
    }));

    let c = report::branching(opts.character_order);
    lines.push(criterion(10, "branching", &c, |d| {
        format!(
            "order {}: χ_E8 {}, χ_D8 vac {}, χ_D8 spin {}, 31124 − 27000 = {}",
            d["order"], d["e8"], d["d8_vacuum"], d["d8_spinor"], d["degree_two_from_module"]
        )
        .replace('"', "")
    }));

    for l in &lines {
        emit(l);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.pass).map(|l| l.n).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
