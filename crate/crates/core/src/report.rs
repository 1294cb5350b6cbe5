//! The full verification suite as a list of named checks with a JSON form.

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::verify_branching;
use crate::chevalley::{CheckMode, Chevalley};
use crate::classification::{enumerate_admissible, integrality_filter_report, lowest_weights};
use crate::embedding::{degree_operator_suite, identity_report, seed_invariance, Identity, SuiteConfig};
use crate::fock::{GradedVector, VacuumModule};
use crate::grids::{current_primary_grid, virasoro_grid, GridConfig, VIRASORO_PAIRS};
use crate::roots::{spinor_root, Label, RootSystem};
use crate::sugawara::{central_charge, omega_radical_check, solve_central_charge_equality, Sugawara};
use crate::Q;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub params: Value,
    pub pass: bool,
    pub details: Value,
}

impl Check {
    fn new(name: &str, params: Value, pass: bool, details: impl Serialize) -> Check {
        Check {
            name: name.to_string(),
            params,
            pass,
            details: serde_json::to_value(details).expect("serializable"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn from_checks(checks: Vec<Check>) -> Report {
        Report {
            version: REPORT_VERSION,
            summary: Summary {
                total: checks.len(),
                passed: checks.iter().filter(|c| c.pass).count(),
            },
            checks,
        }
    }

    pub fn pass(&self) -> bool {
        self.summary.passed == self.summary.total
    }
}

/// Sizes for the sampled parts of the suite.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteOptions {
    /// `None` runs all `248³` triples.
    pub e8_jacobi_samples: Option<u64>,
    pub seed: u64,
    /// Cocycle seed used for the second run of the coset identities.
    pub second_cocycle: u64,
    pub degree_operator: SuiteConfig,
    pub current_primary: GridConfig,
    pub virasoro: GridConfig,
    /// Degree cap for the Virasoro grid; higher caps admit more `(m, n, v)`.
    pub virasoro_cap: u32,
    pub character_order: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            e8_jacobi_samples: None,
            seed: 1,
            second_cocycle: 7,
            degree_operator: SuiteConfig::default(),
            current_primary: GridConfig {
                m_max: 2,
                n_max: 2,
                degree_one: Some(24),
                degree_two: 6,
                degree_three: 0,
                currents: None,
                seed: 1,
            },
            virasoro: GridConfig {
                m_max: 2,
                n_max: 2,
                degree_one: Some(12),
                degree_two: 4,
                degree_three: 4,
                currents: None,
                seed: 1,
            },
            virasoro_cap: 5,
            character_order: 8,
        }
    }
}

pub fn root_data() -> Check {
    let e8 = RootSystem::build(Label::E8);
    let d8 = RootSystem::build(Label::D8);
    let theta_e8 = e8.simple_coefficients(&e8.highest_root);
    let theta_d8 = d8.simple_coefficients(&d8.highest_root);
    let pass = e8.positive_roots.len() == 120
        && d8.positive_roots.len() == 56
        && e8.dimension == 248
        && d8.dimension == 120
        && e8.dual_coxeter == 30
        && d8.dual_coxeter == 14
        && theta_e8 == Some([2, 3, 4, 5, 6, 4, 2, 3])
        && theta_d8 == Some([1, 2, 2, 2, 2, 2, 1, 1]);
    Check::new(
        "root-data",
        json!({}),
        pass,
        json!({
            "positive_roots": [e8.positive_roots.len(), d8.positive_roots.len()],
            "dimension": [e8.dimension, d8.dimension],
            "dual_coxeter": [e8.dual_coxeter, d8.dual_coxeter],
            "theta_e8": theta_e8,
            "theta_d8": theta_d8,
        }),
    )
}

pub fn structure_constants(alg: &Chevalley, e8_samples: Option<u64>, seed: u64) -> Check {
    let e8_mode = match e8_samples {
        None => CheckMode::Full,
        Some(n) => CheckMode::Sampled { n, seed },
    };
    let d8 = alg.check_jacobi(Label::D8, CheckMode::Full);
    let e8 = alg.check_jacobi(Label::E8, e8_mode);
    let sl2 = alg.check_sl2();
    let form = alg.check_invariance(Label::E8, CheckMode::Sampled { n: 100_000, seed });
    let adjoint = alg.check_branching_adjoint();
    let pass = d8.pass && e8.pass && sl2.pass && sl2.roots_checked == 120 && form.pass && adjoint.pass;
    Check::new(
        "structure-constants",
        json!({ "e8_mode": e8_mode }),
        pass,
        json!({ "jacobi_d8": d8, "jacobi_e8": e8, "sl2": sl2, "invariant_form": form, "adjoint_branching": adjoint }),
    )
}

pub fn central_charges() -> Check {
    let one = Q::one();
    let ce = central_charge(Label::E8, one).expect("level one");
    let cd = central_charge(Label::D8, one).expect("level one");
    let roots = solve_central_charge_equality();
    let eight = Q::from_integer(8);
    Check::new(
        "central-charges",
        json!({ "level": 1 }),
        ce == eight && cd == eight && roots == [one],
        json!({ "c_e8": ce.to_string(), "c_d8": cd.to_string(), "equal_at": roots.iter().map(Q::to_string).collect::<Vec<_>>() }),
    )
}

pub fn coset_identities(second_cocycle: u64) -> Check {
    let r = identity_report(&Identity::ALL, 0);
    let inv = seed_invariance(second_cocycle);
    let failing: Vec<_> = r.rows.iter().filter(|row| !row.pass).take(10).collect();
    Check::new(
        "coset-identities",
        json!({ "second_cocycle": second_cocycle }),
        r.pass && r.coset_roots == 64 && inv.pass,
        json!({ "coset_roots": r.coset_roots, "rows": r.rows.len(), "failing": failing, "seed_invariance": inv }),
    )
}

pub fn degree_operator(alg: &Chevalley, config: SuiteConfig) -> Check {
    let r = degree_operator_suite(alg, config);
    Check::new(
        "degree-operator",
        serde_json::to_value(config).expect("serializable"),
        r.pass,
        &r.rows,
    )
}

pub fn current_primary(alg: &Chevalley, config: GridConfig) -> Check {
    let m = VacuumModule::new(alg, Q::one());
    let g = current_primary_grid(m, Label::E8, config, 0);
    Check::new(
        "current-primary",
        serde_json::to_value(config).expect("serializable"),
        g.pass && g.exact == g.checks,
        &g,
    )
}

pub fn virasoro(alg: &Chevalley, config: GridConfig, cap: u32) -> Check {
    let m = VacuumModule::new(alg, Q::one()).with_cap(cap);
    let g = virasoro_grid(m, &VIRASORO_PAIRS, config);
    let central = g.cases.iter().all(|c| c.central_on_vacuum.as_deref() == Some("4/1"));
    Check::new(
        "virasoro",
        json!({ "grid": config, "cap": cap }),
        g.pass && central,
        &g,
    )
}

pub fn singular_vectors(alg: &Chevalley) -> Check {
    let m = VacuumModule::new(alg, Q::one());
    let vac = GradedVector::vacuum();
    let theta = alg.e8().highest_root;
    let e_theta = alg.e(&theta);
    let e_theta_sq = m.word(&[(e_theta.clone(), -1), (e_theta, -1)]).expect("degree two");
    let spinor = m.apply_element(&alg.e(&spinor_root()), -1, &vac).expect("degree one");
    let theta_singular = m.is_singular(&e_theta_sq, Label::E8);
    let spinor_singular = m.is_singular(&spinor, Label::D8);
    let found = m.find_singular_vectors(1, Label::D8).expect("degree one");
    let found_is_spinor = found.len() == 1 && {
        let (mono, q) = found[0].terms().next().expect("nonzero");
        let z = spinor.coeff(mono) / q;
        !z.is_zero() && found[0].scaled(z) == spinor
    };
    Check::new(
        "singular-vectors",
        json!({}),
        theta_singular && spinor_singular && found_is_spinor,
        json!({
            "e_theta_squared_e8_singular": theta_singular,
            "e_spinor_d8_singular": spinor_singular,
            "degree_one_d8_singular_dim": found.len(),
            "spans_e_spinor": found_is_spinor,
        }),
    )
}

pub fn omega_radical(alg: &Chevalley) -> Check {
    let m = VacuumModule::new(alg, Q::one());
    let e8 = Sugawara::new(m, Label::E8).expect("level one");
    let d8 = Sugawara::new(m, Label::D8).expect("level one");
    let r = omega_radical_check(&e8, &d8);
    Check::new("omega-radical", json!({}), r.pass && r.spanning_pairings == 284, &r)
}

pub fn classification() -> Check {
    let d8 = lowest_weights(Label::D8, 1);
    let e8 = enumerate_admissible(Label::E8, 1);
    let mut names: Vec<String> = d8.iter().map(|l| l.name.clone()).collect();
    names.sort();
    let weight = |n: &str| d8.iter().find(|l| l.name == n).map(|l| l.conformal_weight);
    let filters = [integrality_filter_report(Label::D8, 1), integrality_filter_report(Label::E8, 1)];
    let pass = names == ["0", "w1", "w7", "w8"]
        && weight("0") == Some(Q::zero())
        && weight("w1") == Some(Q::new(1, 2))
        && weight("w7") == Some(Q::one())
        && weight("w8") == Some(Q::one())
        && e8.len() == 1
        && e8[0].is_zero()
        && filters.iter().all(|f| f.pass);
    Check::new(
        "classification",
        json!({ "level": 1 }),
        pass,
        json!({ "d8": d8, "e8": e8, "integrality": filters }),
    )
}

pub fn branching(order: usize) -> Check {
    let r = verify_branching(order);
    let low = r.e8.to_u64().get(1..3) == Some(&[248, 4124][..])
        && r.d8_vacuum.to_u64().get(1..3) == Some(&[120, 2076][..])
        && r.d8_spinor.to_u64().get(1..3) == Some(&[128, 2048][..]);
    Check::new("branching", json!({ "order": order }), r.pass && low, &r)
}

/// Every check, in the order the CLI prints them.
pub fn run_all(opts: &SuiteOptions) -> Report {
    let alg = Chevalley::new();
    Report::from_checks(vec![
        root_data(),
        structure_constants(&alg, opts.e8_jacobi_samples, opts.seed),
        central_charges(),
        coset_identities(opts.second_cocycle),
        degree_operator(&alg, opts.degree_operator),
        current_primary(&alg, opts.current_primary),
        virasoro(&alg, opts.virasoro, opts.virasoro_cap),
        singular_vectors(&alg),
        omega_radical(&alg),
        classification(),
        branching(opts.character_order),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_checks_pass() {
        for c in [root_data(), central_charges(), classification(), branching(4)] {
            assert!(c.pass, "{}: {}", c.name, c.details);
        }
    }

    #[test]
    fn singular_and_omega() {
        let alg = Chevalley::new();
        assert!(singular_vectors(&alg).pass);
        assert!(omega_radical(&alg).pass);
    }

    #[test]
    fn summary_counts() {
        let r = Report::from_checks(vec![root_data(), central_charges()]);
        assert_eq!(r.summary.total, 2);
        assert!(r.pass());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["version"], 1);
    }
}
