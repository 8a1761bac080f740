//! Dispatches suites to the core checks.

use std::time::Instant;

use hilbert_axioms::axioms::{check_axiom, check_separator};
use hilbert_axioms::derived::{check_correspondence, check_field_laws, check_ortholattice};
use hilbert_axioms::derived::{check_orthomodular, check_standard_basis};
use hilbert_axioms::equivalence::{check_duals, check_equivalence, check_tensor_coherence};
use hilbert_axioms::finrel::{equaliser_search, pinned_witness_pair, scalar_field_check_rel};
use hilbert_axioms::{
    BoolMatrix, CatError, Complex64, DaggerCategory, FdHilb, FinRel, Scalar, Tolerance, TrialConfig,
};
use rayon::prelude::*;

use crate::config::{ConfigError, Model, SuiteConfig, SuiteId};
use crate::report::{Counterexample, MorphismRecord, Report, SuiteReport};

/// Largest equaliser the pinned FinRel pair is searched for.
pub const PINNED_SEARCH_BOUND: usize = 3;

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{suite}: {source}")]
    Check { suite: SuiteId, source: CatError },
}

/// Runs the selected suites in parallel and merges them in suite order.
pub fn run_suites(config: &SuiteConfig) -> Result<Report, RunError> {
    config.validate()?;
    let start = Instant::now();
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    let reports = suites
        .par_iter()
        .map(|&suite| run_suite(config, suite).map_err(|source| RunError::Check { suite, source }))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = Report::new(config.clone(), reports);
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

fn run_suite(config: &SuiteConfig, suite: SuiteId) -> Result<SuiteReport, CatError> {
    let cfg = config.trial_config();
    match config.model {
        Model::FdHilbReal => {
            run_hilbert(&FdHilb::<f64>::new(Tolerance::new(cfg.tol)?), suite, &cfg)
        }
        Model::FdHilbComplex => run_hilbert(
            &FdHilb::<Complex64>::new(Tolerance::new(cfg.tol)?),
            suite,
            &cfg,
        ),
        Model::FinRel => run_relations(suite, &cfg),
    }
}

fn run_hilbert<S: Scalar>(
    model: &FdHilb<S>,
    suite: SuiteId,
    cfg: &TrialConfig,
) -> Result<SuiteReport, CatError> {
    let expected = suite.expected(Model::from_field(S::FIELD));
    let verdict = match suite {
        SuiteId::ScalarField => check_field_laws(model, cfg)?,
        SuiteId::Ortholattice => check_ortholattice(model, cfg)?,
        SuiteId::Correspondence => check_correspondence(model, cfg)?,
        SuiteId::Orthomodular => check_orthomodular(model, cfg)?,
        SuiteId::Equivalence => check_equivalence(model, cfg)?,
        SuiteId::TensorCoherence => check_tensor_coherence(model, cfg)?,
        _ => return run_generic(model, suite, cfg, expected),
    };
    Ok(SuiteReport::from_verdict(suite, expected, &verdict))
}

fn run_relations(suite: SuiteId, cfg: &TrialConfig) -> Result<SuiteReport, CatError> {
    let expected = suite.expected(Model::FinRel);
    let grid = |r: &BoolMatrix| FinRel.relation(r.clone());
    match suite {
        SuiteId::ScalarField => {
            let report = scalar_field_check_rel();
            let one = grid(&BoolMatrix::identity(1));
            let failures = usize::from(!report.is_field);
            let counterexample = (!report.is_field).then(|| Counterexample {
                note: Some(report.witness().to_owned()),
                morphisms: vec![MorphismRecord::of(&one)],
            });
            Ok(SuiteReport::new(
                suite,
                expected,
                1,
                failures,
                failures as f64,
                counterexample,
            ))
        }
        SuiteId::EqualiserWitness => {
            let (f, g) = pinned_witness_pair();
            let result = equaliser_search(&f, &g, PINNED_SEARCH_BOUND)?;
            let failures = usize::from(!result.found);
            let counterexample = (!result.found).then(|| Counterexample {
                note: Some(format!(
                    "found=false: no isometric equaliser with apex ≤ {} among {} candidates",
                    result.search_bound, result.candidates_examined
                )),
                morphisms: vec![MorphismRecord::of(&grid(&f)), MorphismRecord::of(&grid(&g))],
            });
            Ok(SuiteReport::new(
                suite,
                expected,
                1,
                failures,
                failures as f64,
                counterexample,
            ))
        }
        _ => run_generic(&FinRel, suite, cfg, expected),
    }
}

/// Suites stated for any dagger category.
fn run_generic<M>(
    model: &M,
    suite: SuiteId,
    cfg: &TrialConfig,
    expected: crate::config::Outcome,
) -> Result<SuiteReport, CatError>
where
    M: DaggerCategory,
    M::Payload: crate::text::PayloadText,
{
    let verdict = if let Some(axiom) = suite.axiom() {
        check_axiom(axiom, model, cfg)?.verdict
    } else {
        match suite {
            SuiteId::Separator => check_separator(model, cfg)?,
            SuiteId::StandardBasis => check_standard_basis(model, cfg.dim_max)?,
            SuiteId::Duals => check_duals(model, cfg.dim_max, cfg.tol)?,
            other => unreachable!("{other} is not a generic suite"),
        }
    };
    Ok(SuiteReport::from_verdict(suite, expected, &verdict))
}
