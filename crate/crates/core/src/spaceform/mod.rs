//! Decision procedure for spherical space forms: given a dimension n and a
//! finite fundamental group, decide whether the space of
//! positive-scalar-curvature metrics (and its moduli space) on any space
//! form with that data has infinitely many path components, producing a
//! step-by-step trace with the criterion behind each decision.

mod criteria;
mod witness;

pub use criteria::{
    bg3_applicable, characteristic_data, free_action_necessary, homotopy_model, lens_spin,
    psc_exists, psc_formula, rpn_characteristic, spin_structure, Bg3Report, CharacteristicData,
    FreeActionReport, FreeActionViolation, HomotopyModel, PscAnswer, PscReport, SpinCriterion,
    SpinReport,
};
pub use witness::{bg2_witness, consistent_extension_classes, verify_bg2_witness};

use crate::cohomology::{cocycle_space, CohomologyError};
use crate::group::{FiniteGroup, GroupError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpaceFormError {
    #[error("dimension {n} is below the minimum {minimum} for this operation")]
    DimensionTooSmall { n: usize, minimum: usize },
    #[error("operation requires an even dimension, got n = {n}")]
    OddDimension { n: usize },
    #[error("operation requires an odd dimension, got n = {n}")]
    EvenDimension { n: usize },
    #[error("fundamental group is not cyclic")]
    NotCyclic,
    #[error("necessary free-action conditions fail: {reason}")]
    NoFreeAction { reason: String },
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

impl From<GroupError> for SpaceFormError {
    fn from(e: GroupError) -> Self {
        SpaceFormError::Cohomology(e.into())
    }
}

/// A dimension together with a candidate fundamental group and, when known,
/// whether the alpha invariant of the universal cover vanishes.
#[derive(Clone, Debug)]
pub struct SpaceFormInstance {
    n: usize,
    group: FiniteGroup,
    alpha_vanishes: Option<bool>,
}

impl SpaceFormInstance {
    pub fn new(
        n: usize,
        group: FiniteGroup,
        alpha_vanishes: Option<bool>,
    ) -> Result<Self, SpaceFormError> {
        if n < 2 {
            return Err(SpaceFormError::DimensionTooSmall { n, minimum: 2 });
        }
        Ok(SpaceFormInstance {
            n,
            group,
            alpha_vanishes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn alpha_vanishes(&self) -> Option<bool> {
        self.alpha_vanishes
    }

    /// m with n = 2m − 1 for odd n, n = 2m for even n.
    pub fn half_dimension(&self) -> usize {
        if self.n % 2 == 1 {
            (self.n + 1) / 2
        } else {
            self.n / 2
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    InfinitelyManyComponents,
    NoPscMetric,
    NeedsAlphaInput,
    NotASpaceFormGroup,
    SimplyConnectedOutOfScope,
    DimensionOutOfScope,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::InfinitelyManyComponents => "InfinitelyManyComponents",
            Outcome::NoPscMetric => "NoPscMetric",
            Outcome::NeedsAlphaInput => "NeedsAlphaInput",
            Outcome::NotASpaceFormGroup => "NotASpaceFormGroup",
            Outcome::SimplyConnectedOutOfScope => "SimplyConnectedOutOfScope",
            Outcome::DimensionOutOfScope => "DimensionOutOfScope",
        }
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which of the three concluding results produced an
/// `InfinitelyManyComponents` verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Thm31a,
    Thm31b,
    Thm32,
}

impl Theorem {
    pub fn as_str(&self) -> &'static str {
        match self {
            Theorem::Thm31a => "Thm3.1a",
            Theorem::Thm31b => "Thm3.1b",
            Theorem::Thm32 => "Thm3.2",
        }
    }
}

impl std::fmt::Display for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One decision in the case trace: what was checked, the criterion label it
/// rests on, and what came out.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub step: String,
    pub cite: String,
    pub result: String,
}

fn step(step: impl Into<String>, cite: &str, result: impl Into<String>) -> TraceStep {
    TraceStep {
        step: step.into(),
        cite: cite.into(),
        result: result.into(),
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    pub theorem: Option<Theorem>,
    /// Element labels of the verified witnesses, one per consistent
    /// extension class, for the odd-dimensional conclusions.
    pub witnesses: Option<Vec<String>>,
    pub classes_considered: usize,
    pub trace: Vec<TraceStep>,
}

impl Verdict {
    fn terminal(outcome: Outcome, trace: Vec<TraceStep>) -> Self {
        Verdict {
            outcome,
            theorem: None,
            witnesses: None,
            classes_considered: 0,
            trace,
        }
    }
}

/// Run the full decision procedure.
pub fn classify(inst: &SpaceFormInstance) -> Result<Verdict, SpaceFormError> {
    let n = inst.n();
    let group = inst.group();
    let m = inst.half_dimension();
    let mut trace = Vec::new();

    if n < 5 {
        trace.push(step(
            "dimension-gate",
            "Main Thm",
            format!("n = {n} < 5 is out of scope"),
        ));
        return Ok(Verdict::terminal(Outcome::DimensionOutOfScope, trace));
    }
    let parity = if n % 2 == 0 { "even" } else { "odd" };
    trace.push(step(
        "dimension-gate",
        "Main Thm",
        format!("n = {n} ≥ 5 ({parity}, m = {m})"),
    ));

    if group.order() == 1 {
        trace.push(step(
            "fundamental-group",
            "Main Thm",
            "trivial fundamental group: simply connected case is out of scope",
        ));
        return Ok(Verdict::terminal(Outcome::SimplyConnectedOutOfScope, trace));
    }
    trace.push(step(
        "fundamental-group",
        "Main Thm",
        format!("|G| = {}", group.order()),
    ));

    let free = free_action_necessary(inst);
    if !free.passes() {
        for v in free.violations() {
            trace.push(step("free-action-necessary", v.cite, v.reason.clone()));
        }
        return Ok(Verdict::terminal(Outcome::NotASpaceFormGroup, trace));
    }
    let free_result = if n % 2 == 0 {
        format!("pass: |G| = {} ≤ 2", group.order())
    } else {
        "pass: every Sylow subgroup is cyclic or generalized quaternion".to_string()
    };
    trace.push(step("free-action-necessary", "Prop 2.1", free_result));

    let psc = psc_exists(inst)?;
    trace.push(step(
        "psc-existence",
        "Thm B",
        format!("{}: {}", psc.answer.as_str(), psc.reason),
    ));
    match psc.answer {
        PscAnswer::Yes => {}
        PscAnswer::No => return Ok(Verdict::terminal(Outcome::NoPscMetric, trace)),
        PscAnswer::NeedsAlpha => return Ok(Verdict::terminal(Outcome::NeedsAlphaInput, trace)),
    }

    if n % 2 == 0 {
        return classify_even(inst, trace);
    }
    classify_odd(inst, trace)
}

fn classify_even(
    inst: &SpaceFormInstance,
    mut trace: Vec<TraceStep>,
) -> Result<Verdict, SpaceFormError> {
    let model = homotopy_model(inst)?;
    trace.push(step("homotopy-model", "Prop 2.3", model.to_string()));

    let characteristic = rpn_characteristic(inst.n())?;
    trace.push(step(
        "characteristic-classes",
        "Main Thm proof",
        format!(
            "w1 = {}, w2 = {}",
            characteristic.w1_label(),
            characteristic.w2_label()
        ),
    ));

    let bg3 = bg3_applicable(inst);
    assert!(
        bg3.applicable,
        "every RP^n with even n ≥ 6 is non-orientable with a Pin structure"
    );
    trace.push(step(
        "pin-structure",
        "Thm 3.2",
        format!(
            "non-orientable with a {} structure (ε = sign((−1)^{}))",
            bg3.epsilon_label(),
            inst.half_dimension()
        ),
    ));
    trace.push(step(
        "conclusion",
        "Thm 3.2",
        "the space and moduli space of psc metrics have infinitely many path components",
    ));
    Ok(Verdict {
        outcome: Outcome::InfinitelyManyComponents,
        theorem: Some(Theorem::Thm32),
        witnesses: None,
        classes_considered: 0,
        trace,
    })
}

fn classify_odd(
    inst: &SpaceFormInstance,
    mut trace: Vec<TraceStep>,
) -> Result<Verdict, SpaceFormError> {
    let group = inst.group();
    let m = inst.half_dimension();

    let spin = spin_structure(inst)?;
    trace.push(step(
        "spin-structure",
        spin.criterion.cite(),
        format!("orientable, spin = {}", spin.spin),
    ));

    let space = cocycle_space(group)?;
    let consistent = witness::consistent_from_space(group, m, &space);
    trace.push(step(
        "extension-classes",
        "Prop 2.7 proof",
        format!(
            "{} of {} extension classes are consistent with the cyclic-subgroup splitting parity",
            consistent.len(),
            space.classes().len()
        ),
    ));
    assert!(
        !consistent.is_empty(),
        "a group passing the free-action gates always has a consistent extension class"
    );

    let (theorem, cite) = if m % 2 == 0 {
        (Theorem::Thm31a, "Thm 3.1(a)")
    } else {
        (Theorem::Thm31b, "Thm 3.1(b)")
    };
    let mut witnesses = Vec::with_capacity(consistent.len());
    for (i, class) in consistent.iter().enumerate() {
        let (ext, found) = witness::verified_witness(group, class, m)?;
        let g = found.expect(
            "every consistent extension class of an admissible group admits a witness element",
        );
        let total = ext.total();
        trace.push(step(
            format!("witness-class-{i}"),
            cite,
            format!(
            "g = {} (order {}) avoids the forbidden conjugates; verified by direct enumeration",
                total.label(g),
                total.element_order(g)?
            ),
        ));
        witnesses.push(total.label(g).to_string());
    }
    trace.push(step(
        "conclusion",
        cite,
        "the space and moduli space of psc metrics have infinitely many path components",
    ));
    Ok(Verdict {
        outcome: Outcome::InfinitelyManyComponents,
        theorem: Some(theorem),
        witnesses: Some(witnesses),
        classes_considered: consistent.len(),
        trace,
    })
}
