//! The full verification suite as one deterministic, serializable report.
//! The command-line front end serializes it; the acceptance tests assert
//! its criterion lines.

use crate::catalog::{
    all_labels, build_rep, lambda_invariant, laws, trace_normalization, verify_hg_relations,
    RepLabel, VECTOR_LABELS,
};
use crate::classify::{search_solutions, spinor_classification, ClassRecord};
use crate::contract::{run_all as contract_all, ContractionOutcome};
use crate::em::covariance::{check_all as covariance_all, CovarianceReport};
use crate::em::multiplets::{five_vector_check, tensor_multiplet_check, FiveVectorReport, TensorReport};
use crate::error::Result;
use crate::forms::{analyze as analyze_forms, FormsReport};
use crate::lorentz::{lemma_survey, LemmaOutcome};
use crate::oper::extended::verify_extended_algebra;
use crate::oper::reduce;
use crate::scalar::Scalar;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub label: String,
    pub dim: usize,
    pub relations_pass: bool,
    pub trace: Option<crate::catalog::TraceNormalization>,
    pub lambda: Option<crate::catalog::LambdaInvariant>,
    pub law_convention: Option<laws::LawMatchReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationSection {
    pub classes: Vec<ClassRecord>,
    pub spinor_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContractionSection {
    pub lemma: Vec<LemmaOutcome>,
    pub rows: Vec<ContractionOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultipletSection {
    pub five_vector: FiveVectorReport,
    pub tensor: TensorReport,
    pub covariance: Vec<CovarianceReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionSection {
    pub pair_first_phi: String,
    pub pair_first_chi: String,
    pub pair_second_phi: String,
    pub pair_second_chi: String,
    pub reduced: String,
    pub transformed_order2: String,
    pub reduced_matches_expected: bool,
    pub first_order_field_term_cancels: bool,
    pub second_order_matches_expected: bool,
    /// The mass-shift term carries +lambda^2/2m; the displayed reduced
    /// operator shows the opposite sign, which the algebra cannot
    /// produce. Recorded, not hidden.
    pub mass_shift_sign_deviates_from_display: bool,
    pub extended_algebra_pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionLine {
    pub index: usize,
    pub id: &'static str,
    pub pass: bool,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AllReport {
    pub schema_version: u32,
    pub catalog: Vec<CatalogEntry>,
    pub classification: ClassificationSection,
    pub forms: Vec<FormsReport>,
    pub contraction: ContractionSection,
    pub multiplets: MultipletSection,
    pub reduction: ReductionSection,
    pub criteria: Vec<CriterionLine>,
}

pub fn catalog_section() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for label in all_labels() {
        let rep = build_rep(label)?;
        let is_vector = matches!(label, RepLabel::Vector { .. });
        out.push(CatalogEntry {
            label: label.to_string(),
            dim: rep.dim,
            relations_pass: verify_hg_relations(&rep).pass(),
            trace: if is_vector {
                Some(trace_normalization(&rep)?)
            } else {
                None
            },
            lambda: if is_vector {
                Some(lambda_invariant(&rep)?)
            } else {
                None
            },
            law_convention: laws::match_convention(&rep),
        })
    }
    Ok(out)
}

pub fn classification_section() -> ClassificationSection {
    ClassificationSection {
        classes: search_solutions(3, &[-1, 0, 1]),
        spinor_count: spinor_classification(3).len(),
    }
}

pub fn reduction_section() -> ReductionSection {
    let pair = reduce::componentwise_pauli_small();
    let l = reduce::eliminate_lower(&pair).expect("scalar auxiliary coefficient");
    let g = reduce::expansion_generator();
    let l1 = reduce::bch_conjugate(&l, &g, 1);
    let l2 = reduce::bch_conjugate(&l, &g, 2);
    let grad_free = |p: &crate::oper::OpPoly| {
        !p.terms().any(|(k, _)| {
            k.fields
                .keys()
                .any(|(n, d)| *n == crate::oper::FieldName::Phi && d.iter().sum::<u8>() >= 1)
        })
    };
    let extended_algebra_pass = ["D(2,0,0)", "bispinor"].iter().all(|name| {
        let rep = build_rep(name.parse().unwrap()).unwrap();
        verify_extended_algebra(&rep).iter().all(|c| c.holds)
    });
    ReductionSection {
        pair_first_phi: pair.first.phi.to_string(),
        pair_first_chi: pair.first.chi.to_string(),
        pair_second_phi: pair.second.phi.to_string(),
        pair_second_chi: pair.second.chi.to_string(),
        reduced: l.to_string(),
        transformed_order2: l2.to_string(),
        reduced_matches_expected: l == reduce::expected_reduced_operator(),
        first_order_field_term_cancels: grad_free(&l1),
        second_order_matches_expected: l2 == reduce::expected_transformed_operator(),
        mass_shift_sign_deviates_from_display: true,
        extended_algebra_pass,
    }
}

fn criterion(index: usize, id: &'static str, pass: bool, note: String) -> CriterionLine {
    CriterionLine {
        index,
        id,
        pass,
        note,
    }
}

/// Runs the whole suite. Deterministic: identical inputs give a
/// byte-identical serialization.
pub fn run_all() -> Result<AllReport> {
    let catalog = catalog_section()?;
    let classification = classification_section();
    let forms: Vec<FormsReport> = all_labels()
        .into_iter()
        .map(analyze_forms)
        .collect::<Result<_>>()?;
    let contraction = ContractionSection {
        lemma: lemma_survey()?,
        rows: contract_all()?,
    };
    let multiplets = MultipletSection {
        five_vector: five_vector_check(),
        tensor: tensor_multiplet_check(),
        covariance: covariance_all(),
    };
    let reduction = reduction_section();

    let mut criteria = Vec::new();

    // 1. Catalog soundness.
    let pass1 = catalog.iter().all(|c| c.relations_pass) && catalog.len() == 12;
    criteria.push(criterion(
        1,
        "catalog-defining-relations",
        pass1,
        format!("{} representations, all commutation relations exact", catalog.len()),
    ));

    // 2. Classification completeness.
    let labels: Vec<&str> = classification
        .classes
        .iter()
        .map(|c| c.catalog_label.as_str())
        .collect();
    let expected: Vec<String> = VECTOR_LABELS.iter().map(|l| l.to_string()).collect();
    let pass2 = classification.classes.len() == 10
        && labels == expected.iter().map(|s| s.as_str()).collect::<Vec<_>>()
        && classification.spinor_count == 2;
    criteria.push(criterion(
        2,
        "classification-completeness",
        pass2,
        format!(
            "{} vector classes, {} spinor classes",
            classification.classes.len(),
            classification.spinor_count
        ),
    ));

    // 3. Normalization and labels.
    let nontrivial_trace_ok = catalog
        .iter()
        .filter(|c| c.label != "D(0,0,0)")
        .filter_map(|c| c.trace.as_ref())
        .all(|t| t.matches);
    let scalar_row = catalog
        .iter()
        .find(|c| c.label == "D(0,0,0)")
        .and_then(|c| c.trace.as_ref());
    let scalar_flagged = scalar_row.map_or(false, |t| {
        !t.matches
            && t.trace == crate::scalar::GaussianRational::from_int(0)
            && t.formula == crate::scalar::GaussianRational::from_int(-6)
    });
    let lambda_ok = catalog
        .iter()
        .filter_map(|c| c.lambda.as_ref())
        .all(|l| l.matches_label);
    let pass3 = nontrivial_trace_ok && scalar_flagged && lambda_ok;
    criteria.push(criterion(
        3,
        "trace-normalization-and-lambda",
        pass3,
        "normalization formula exact on the nine nontrivial rows; scalar row mismatch (0 vs -6) \
         flagged; lambda labels reproduced by the -trace/6 normalization (printed-coefficient \
         values reported alongside)"
            .into(),
    ));

    // 4. Finite transformation laws.
    let pass4 = catalog
        .iter()
        .filter(|c| c.law_convention.is_some())
        .all(|c| c.law_convention.as_ref().unwrap().matched());
    criteria.push(criterion(
        4,
        "boost-law-match",
        pass4,
        "every printed boost law reproduced as an exact polynomial identity (including the \
         second-order terms of the ten-vector law) under the recorded per-row convention"
            .into(),
    ));

    // 5. Invariant forms.
    let pass5 = forms.iter().all(|f| f.pass());
    criteria.push(criterion(
        5,
        "invariant-forms",
        pass5,
        "named invariants lie in the computed spans and finite-boost invariance holds \
         symbolically (the ten-vector form with its recorded sign correction)"
            .into(),
    ));

    // 6. Contraction.
    let lemma_expected = |label: &str| {
        matches!(
            label,
            "D(1,1,0)" | "D(1,1,1)" | "D(1,2,1)" | "D(2,0,0)" | "D(3,1,1)"
        )
    };
    let lemma_ok = contraction
        .lemma
        .iter()
        .all(|o| o.closes == lemma_expected(o.label.as_str()));
    let rows_ok = contraction.rows.len() == 9 && contraction.rows.iter().all(|r| r.pass());
    let pass6 = lemma_ok && rows_ok;
    criteria.push(criterion(
        6,
        "contraction",
        pass6,
        "all nine contraction rows land on their catalog targets (adjustments recorded); the \
         closure lemma holds for exactly its five rows"
            .into(),
    ));

    // 7. Matrix multiplets.
    let pass7 = multiplets.five_vector.pass()
        && multiplets.tensor.pass()
        && multiplets
            .covariance
            .iter()
            .all(|c| (c.term == "wrong-magnetic") != c.covariant());
    criteria.push(criterion(
        7,
        "matrix-multiplets",
        pass7,
        "five-vector and tensor multiplets verified; coupling covariance exact for every \
         asserted term and fails for the control term"
            .into(),
    ));

    // 8. Reduction.
    let pass8 = reduction.reduced_matches_expected
        && reduction.first_order_field_term_cancels
        && reduction.second_order_matches_expected
        && reduction.extended_algebra_pass;
    criteria.push(criterion(
        8,
        "schroedinger-reduction",
        pass8,
        "componentwise split + elimination reproduce the reduced operator (mass-shift sign \
         deviation from the display recorded); first-order field term cancels exactly; \
         second-order expansion yields the spin-orbit and Darwin terms with coefficient \
         -q*khat^2/(2 m^2)"
            .into(),
    ));

    // 9. Determinism is checked by serializing twice at the call site; the
    // line is emitted there.

    Ok(AllReport {
        schema_version: SCHEMA_VERSION,
        catalog,
        classification,
        forms,
        contraction,
        multiplets,
        reduction,
        criteria,
    })
}

/// Serializes the report; identical runs must produce identical bytes.
pub fn to_json(report: &AllReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization")
}
