//! Grids of commutator checks over modes, currents and vectors of `N_E8(1, 0)`.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::Chevalley;
use crate::fock::{pbw_basis, GradedVector, Monomial, VacuumModule};
use crate::roots::Label;
use crate::sugawara::{check_virasoro, Sugawara};

/// Which vectors and currents a grid visits.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GridConfig {
    /// `m` ranges over `[-m_max, m_max]`.
    pub m_max: i32,
    /// `n` ranges over `[-n_max, n_max]`.
    pub n_max: i32,
    /// `None` takes all 248 degree-one PBW vectors.
    pub degree_one: Option<usize>,
    /// Sampled degree-two PBW vectors.
    pub degree_two: usize,
    /// Sampled degree-three PBW vectors.
    pub degree_three: usize,
    /// `None` takes every current of the subalgebra being tested.
    pub currents: Option<usize>,
    pub seed: u64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            m_max: 2,
            n_max: 2,
            degree_one: None,
            degree_two: 8,
            degree_three: 0,
            currents: None,
            seed: 1,
        }
    }
}

/// The vacuum, degree-one and sampled degree-two and degree-three PBW vectors chosen by `config`.
pub fn grid_vectors(alg: &Chevalley, config: &GridConfig) -> Vec<GradedVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = vec![GradedVector::vacuum()];
    let one = pbw_basis(alg, 1, Label::E8);
    let k1 = config.degree_one.unwrap_or(one.len()).min(one.len());
    out.extend(pick(&mut rng, &one, k1));
    let two = pbw_basis(alg, 2, Label::E8);
    out.extend(pick(&mut rng, &two, config.degree_two.min(two.len())));
    if config.degree_three > 0 {
        let three = pbw_basis(alg, 3, Label::E8);
        out.extend(pick(&mut rng, &three, config.degree_three.min(three.len())));
    }
    out
}

fn pick(rng: &mut ChaCha8Rng, basis: &[Monomial], k: usize) -> Vec<GradedVector> {
    let mut idx = if k == basis.len() {
        (0..k).collect()
    } else {
        sample(rng, basis.len(), k).into_vec()
    };
    idx.sort_unstable();
    idx.into_iter()
        .map(|i| GradedVector::from_monomial(basis[i].clone()))
        .collect()
}

fn fits(cap: u32, d: u32, lowering: i32) -> bool {
    d as i32 + lowering <= cap as i32
}

#[derive(Clone, Debug, Serialize)]
pub struct GridFailure {
    pub m: i32,
    pub n: i32,
    pub current: usize,
    pub vector: String,
    pub defect_terms: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurrentPrimaryGrid {
    pub label: Label,
    pub config: GridConfig,
    pub vectors: usize,
    pub currents: usize,
    pub checks: usize,
    /// Triples skipped because an intermediate vector would exceed the degree cap.
    pub skipped: usize,
    pub exact: usize,
    /// Non-exact checks whose defect was shown to lie in the radical.
    pub in_radical: usize,
    pub failures: Vec<GridFailure>,
    pub pass: bool,
}

/// `[L(m), a(n)] v = −n a(m+n) v` for the currents `a` of `g_E8`.
///
/// With `label = E8` this must hold exactly. With `label = D8` the currents
/// of `D8` must satisfy it exactly and the coset currents only up to the
/// Shapovalov radical; defects of degree above `radical_degree` are counted
/// as failures since descent is not attempted there.
pub fn current_primary_grid(
    module: VacuumModule,
    label: Label,
    config: GridConfig,
    radical_degree: u32,
) -> CurrentPrimaryGrid {
    let alg = module.algebra();
    let sug = Sugawara::new(module, label).expect("level one");
    let vectors = grid_vectors(alg, &config);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(17));
    let all: Vec<usize> = (0..alg.dim()).collect();
    let currents: Vec<usize> = match config.currents {
        None => all,
        Some(k) => {
            let mut c: Vec<usize> = sample(&mut rng, all.len(), k.min(all.len())).into_vec();
            c.sort_unstable();
            c
        }
    };
    let cap = module.cap();
    let mut work = Vec::new();
    let mut skipped = 0;
    for v in &vectors {
        let d = v.max_degree();
        for m in -config.m_max..=config.m_max {
            for n in -config.n_max..=config.n_max {
                if fits(cap, d, -m.min(0) - n.min(0)) {
                    for &a in &currents {
                        work.push((m, n, a, v));
                    }
                } else {
                    skipped += currents.len();
                }
            }
        }
    }
    let outcomes: Vec<(bool, bool, Option<GridFailure>)> = work
        .par_iter()
        .map(|&(m, n, a, v)| {
            let defect = sug.current_primary_defect(m, n, a, v);
            if defect.is_zero() {
                return (true, false, None);
            }
            let quotient_ok = label == Label::D8
                && !alg.in_d8(a)
                && defect.max_degree() <= radical_degree
                && module.in_radical_by_descent(&defect);
            let failure = (!quotient_ok).then(|| GridFailure {
                m,
                n,
                current: a,
                vector: format!("{v:?}"),
                defect_terms: defect.len(),
            });
            (false, quotient_ok, failure)
        })
        .collect();
    let exact = outcomes.iter().filter(|o| o.0).count();
    let in_radical = outcomes.iter().filter(|o| o.1).count();
    let mut failures: Vec<GridFailure> = outcomes.into_iter().filter_map(|o| o.2).collect();
    let pass = failures.is_empty();
    failures.truncate(20);
    CurrentPrimaryGrid {
        label,
        config,
        vectors: vectors.len(),
        currents: currents.len(),
        checks: work.len(),
        skipped,
        exact,
        in_radical,
        failures,
        pass,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VirasoroCase {
    pub a: Label,
    pub b: Label,
    pub checks: usize,
    pub passed: usize,
    /// Whether `[L_A(2), L_B(−2)]` on the vacuum produced the expected central scalar.
    pub central_on_vacuum: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VirasoroGrid {
    pub config: GridConfig,
    pub vectors: usize,
    pub skipped: usize,
    pub cases: Vec<VirasoroCase>,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// `[L_A(m), L_B(n)] = (m−n) L_B(m+n) + δ (m³−m)/12 c_B` for the given `(A, B)` pairs.
pub fn virasoro_grid(module: VacuumModule, pairs: &[(Label, Label)], config: GridConfig) -> VirasoroGrid {
    let alg = module.algebra();
    let e8 = Sugawara::new(module, Label::E8).expect("level one");
    let d8 = Sugawara::new(module, Label::D8).expect("level one");
    let by = |l: Label| if l == Label::E8 { &e8 } else { &d8 };
    let vectors = grid_vectors(alg, &config);
    let cap = module.cap() as i32;
    let mut cases = Vec::new();
    let mut failures = Vec::new();
    let mut skipped = 0;
    for &(la, lb) in pairs {
        let (a, b) = (by(la), by(lb));
        let mut work = Vec::new();
        for v in &vectors {
            let d = v.max_degree() as i32;
            for m in -config.m_max..=config.m_max {
                for n in -config.n_max..=config.n_max {
                    if (d - n).max(d - m).max(d - m - n) <= cap {
                        work.push((m, n, v));
                    } else {
                        skipped += 1;
                    }
                }
            }
        }
        let results: Vec<_> = work
            .par_iter()
            .map(|&(m, n, v)| check_virasoro(m, n, v, a, b).expect("within cap"))
            .collect();
        let passed = results.iter().filter(|r| r.pass).count();
        for r in results.iter().filter(|r| !r.pass).take(10) {
            failures.push(format!(
                "{:?}/{:?} m={} n={} scalar={:?} expected={}",
                r.a, r.b, r.m, r.n, r.central_scalar, r.expected_scalar
            ));
        }
        let central = check_virasoro(2, -2, &GradedVector::vacuum(), a, b)
            .ok()
            .and_then(|r| r.central_scalar);
        cases.push(VirasoroCase {
            a: la,
            b: lb,
            checks: results.len(),
            passed,
            central_on_vacuum: central,
        });
    }
    VirasoroGrid {
        config,
        vectors: vectors.len(),
        skipped,
        pass: failures.is_empty(),
        cases,
        failures,
    }
}

/// The `(A, B)` pairs checked by default: both same-algebra cases and the mixed one.
pub const VIRASORO_PAIRS: [(Label, Label); 3] = [(Label::E8, Label::E8), (Label::D8, Label::D8), (Label::E8, Label::D8)];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;
    use std::sync::OnceLock;

    fn alg() -> &'static Chevalley {
        static A: OnceLock<Chevalley> = OnceLock::new();
        A.get_or_init(Chevalley::new)
    }

    fn small() -> GridConfig {
        GridConfig {
            m_max: 1,
            n_max: 1,
            degree_one: Some(6),
            degree_two: 1,
            degree_three: 0,
            currents: Some(12),
            seed: 5,
        }
    }

    #[test]
    fn e8_currents_are_primary() {
        let m = VacuumModule::new(alg(), Q::from_integer(1));
        let g = current_primary_grid(m, Label::E8, small(), 0);
        assert!(g.pass, "{:?}", g.failures);
        assert_eq!(g.exact, g.checks);
    }

    #[test]
    fn virasoro_small_grid() {
        let m = VacuumModule::new(alg(), Q::from_integer(1));
        let g = virasoro_grid(m, &VIRASORO_PAIRS, small());
        assert!(g.pass, "{:?}", g.failures);
        assert_eq!(g.cases[0].central_on_vacuum.as_deref(), Some("4/1"));
    }
}
