//! Recurrence guessing by linear algebra and by lattice reduction.

mod gcrd;
mod interlace;
mod la;
mod lll;
mod lll_fp;
mod lll_guess;
mod plausibility;
mod system;

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::exact_arith::Hyper;
use crate::ore_shift::{Sequence, ShiftOperator};

pub use gcrd::gcrd;
pub use interlace::{combine_interlaced, interlace};
pub use la::guess_la;
pub use lll::{gram_schmidt, is_lll_reduced, lll_reduce, lll_reduce_tracked, LatticeBasis};
pub use lll_fp::{lll_reduce_fp, XDouble};
pub use lll_guess::guess_lll;
pub use plausibility::plausibility;
pub use system::AnsatzSystem;

#[derive(Clone, Debug)]
pub struct GuessConfig {
    pub max_order: usize,
    pub max_degree: usize,
    /// Trailing terms kept back for validation.
    pub holdout: usize,
    pub lll_delta: BigRational,
    /// Magnification exponent; None means bit-length of the largest term + 64.
    pub lll_scale_bits: Option<u64>,
    /// Terms are divided by this factor before guessing.
    pub shift_ansatz: Option<Hyper>,
    /// Restricts the search to these (order, degree) cells.
    pub cells: Option<Vec<(usize, usize)>>,
    /// LA only: reduce kernels to their greatest common right divisor.
    pub minimize: bool,
}

impl Default for GuessConfig {
    fn default() -> Self {
        GuessConfig {
            max_order: 12,
            max_degree: 24,
            holdout: 4,
            lll_delta: BigRational::new(3.into(), 4.into()),
            lll_scale_bits: None,
            shift_ansatz: None,
            cells: None,
            minimize: true,
        }
    }
}

impl GuessConfig {
    pub fn bounds(max_order: usize, max_degree: usize) -> Self {
        GuessConfig { max_order, max_degree, ..Default::default() }
    }
    pub fn with_holdout(mut self, h: usize) -> Self {
        self.holdout = h;
        self
    }
    pub fn with_cells(mut self, cells: Vec<(usize, usize)>) -> Self {
        self.cells = Some(cells);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    La,
    Lll,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::La => "la",
            Method::Lll => "lll",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Flag {
    /// Integer roots inside the data window shared by several coefficients.
    OutlierRoots(Vec<i64>),
    /// Data constant from this index on, and the operator kills constants.
    UltimatelyConstant { from: i64 },
    /// Fewer surplus equations than degree + 1.
    LowConfirmation { surplus: i64 },
    ConfirmedHoldout,
    FailedHoldout,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flag::OutlierRoots(r) => {
                let s: Vec<String> = r.iter().map(i64::to_string).collect();
                write!(f, "OUTLIER_ROOTS{{{}}}", s.join(","))
            }
            Flag::UltimatelyConstant { from } => write!(f, "ULTIMATELY_CONSTANT(from={from})"),
            Flag::LowConfirmation { surplus } => write!(f, "LOW_CONFIRMATION(surplus={surplus})"),
            Flag::ConfirmedHoldout => f.write_str("CONFIRMED_HOLDOUT"),
            Flag::FailedHoldout => f.write_str("FAILED_HOLDOUT"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    /// Operator values on the windows that reach into the holdout terms.
    pub residuals: Vec<BigRational>,
}

impl Validation {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug)]
pub struct GuessReport {
    pub method: Method,
    /// The (order, degree) cell whose system produced the result.
    pub ansatz: (usize, usize),
    pub terms_used: usize,
    pub candidates: Vec<ShiftOperator>,
    pub validation: Vec<Validation>,
    pub flags: Vec<Flag>,
    /// The sequence the candidates annihilate (after any rescaling).
    pub sequence: Sequence,
    pub rescale: Option<Hyper>,
}

impl GuessReport {
    pub fn best(&self) -> &ShiftOperator {
        &self.candidates[0]
    }
    pub fn has_flag(&self, pred: impl Fn(&Flag) -> bool) -> bool {
        self.flags.iter().any(pred)
    }
    /// Line-oriented text form.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("method {}\n", self.method));
        s.push_str(&format!("ansatz {} {}\n", self.ansatz.0, self.ansatz.1));
        s.push_str(&format!("terms_used {}\n", self.terms_used));
        if let Some(h) = &self.rescale {
            s.push_str(&format!("rescale {h}\n"));
        }
        let flags: Vec<String> = self.flags.iter().map(Flag::to_string).collect();
        s.push_str(&format!("flags {}\n", if flags.is_empty() { "-".into() } else { flags.join(" ") }));
        for (k, (c, v)) in self.candidates.iter().zip(&self.validation).enumerate() {
            s.push_str(&format!(
                "candidate {} order {} degree {} holdout {}\n",
                k + 1,
                c.order(),
                c.degree(),
                if v.residuals.is_empty() {
                    "none"
                } else if v.passed() {
                    "pass"
                } else {
                    "fail"
                }
            ));
            s.push_str(&format!("operator {c}\n"));
        }
        s
    }
}

/// Divides terms by h(n) exactly.
pub fn rescale(a: &Sequence, h: &Hyper) -> Result<Sequence, GuessError> {
    let mut out = a.clone();
    for (k, t) in out.terms.iter_mut().enumerate() {
        let n = a.offset + k as i64;
        let hv = h.eval(n).filter(|v| !v.is_zero()).ok_or(GuessError::RescaleUndefined(n))?;
        let q = BigRational::from_integer(t.clone()) / hv;
        if !q.is_integer() {
            return Err(GuessError::NonExactDivision(n));
        }
        *t = q.to_integer();
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GuessError {
    #[error("rescaling factor is not an exact divisor at n = {0}")]
    NonExactDivision(i64),
    #[error("rescaling factor undefined or zero at n = {0}")]
    RescaleUndefined(i64),
}

/// Splits off the holdout and applies the shift ansatz.
pub(crate) fn prepare(a: &Sequence, cfg: &GuessConfig) -> Result<(Sequence, usize), GuessError> {
    let seq = match &cfg.shift_ansatz {
        Some(h) => rescale(a, h)?,
        None => a.clone(),
    };
    let used = seq.len().saturating_sub(cfg.holdout);
    Ok((seq, used))
}

/// Holdout residuals: windows n whose support reaches beyond the used prefix.
pub(crate) fn validate(l: &ShiftOperator, seq: &Sequence, used: usize) -> Validation {
    let r = l.order() as i64;
    let first = seq.offset + used as i64 - r;
    let last = seq.last_index() - r;
    let lo = first.max(seq.offset);
    if last < lo || used == seq.len() {
        return Validation { residuals: Vec::new() };
    }
    Validation { residuals: l.apply(seq, lo..=last).unwrap_or_default() }
}
