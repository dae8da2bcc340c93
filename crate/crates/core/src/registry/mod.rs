//! Catalog of identities and the verifier that checks them.
//!
//! Each case pairs two recipes built from different machinery. The verifier
//! evaluates both to a common order and reports the first differing
//! coefficient, if any.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::series::Comparison;

mod catalog;
mod recipe;

pub use recipe::{Recipe, RecipeError, Sequence};

/// Default order for cases built only from series arithmetic.
pub const DEFAULT_SERIES_ORDER: usize = 60;
/// Default order (and hard cap) for cases that enumerate partitions.
pub const DEFAULT_ENUMERATION_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("unknown identity '{0}'")]
    UnknownId(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub id: String,
    pub description: String,
    /// where the identity is stated, with the statement as displayed
    pub reference: String,
    pub lhs: Recipe,
    pub rhs: Recipe,
    pub default_order: usize,
    /// convention choices and corrections to the displayed statement
    pub notes: String,
    /// expected to fail; proves the harness can detect a mismatch
    pub negative_control: bool,
}

impl IdentityCase {
    pub fn uses_enumeration(&self) -> bool {
        self.lhs.uses_enumeration() || self.rhs.uses_enumeration()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Mismatch {
        index: usize,
        lhs: BigInt,
        rhs: BigInt,
    },
    Skipped {
        reason: String,
    },
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Mismatch { .. } => "mismatch",
            Status::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: String,
    pub order: usize,
    pub status: Status,
    pub notes: String,
    pub elapsed: Duration,
    pub negative_control: bool,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// A mismatch or skip on anything but the negative control.
    pub fn is_failure(&self) -> bool {
        !self.passed() && !self.negative_control
    }
}

/// All cases, sorted by id.
pub fn list_identities() -> Vec<IdentityCase> {
    let mut cases = catalog::cases();
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    cases
}

pub fn find_identity(id: &str) -> Result<IdentityCase, RegistryError> {
    catalog::cases()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| RegistryError::UnknownId(id.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verifier {
    /// Enumeration-backed cases are clamped to this order.
    pub enum_order: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            enum_order: DEFAULT_ENUMERATION_ORDER,
        }
    }
}

impl Verifier {
    pub fn new(enum_order: usize) -> Self {
        Verifier { enum_order }
    }

    pub fn verify_case(&self, case: &IdentityCase, order: usize) -> IdentityReport {
        let start = Instant::now();
        let mut notes = case.notes.clone();
        let mut order = order;
        if case.uses_enumeration() && order > self.enum_order {
            let clamp = format!(
                "order clamped from {order} to the enumeration budget {}",
                self.enum_order
            );
            notes = if notes.is_empty() {
                clamp
            } else {
                format!("{notes} | {clamp}")
            };
            order = self.enum_order;
        }
        let outcome = case
            .lhs
            .evaluate(order, self.enum_order)
            .and_then(|l| Ok((l, case.rhs.evaluate(order, self.enum_order)?)))
            .and_then(|(l, r)| Ok(l.equal_up_to(&r, order)?));
        let status = match outcome {
            Ok(Comparison::Equal { .. }) => Status::Pass,
            Ok(Comparison::Mismatch { index, lhs, rhs }) => Status::Mismatch { index, lhs, rhs },
            Err(e) => Status::Skipped {
                reason: e.to_string(),
            },
        };
        IdentityReport {
            id: case.id.clone(),
            order,
            status,
            notes,
            elapsed: start.elapsed(),
            negative_control: case.negative_control,
        }
    }

    pub fn verify(&self, id: &str, order: usize) -> Result<IdentityReport, RegistryError> {
        Ok(self.verify_case(&find_identity(id)?, order))
    }

    /// Every case at `order`, evaluated in parallel, reported in id order.
    pub fn verify_all(&self, order: usize) -> Vec<IdentityReport> {
        list_identities()
            .par_iter()
            .map(|c| self.verify_case(c, order))
            .collect()
    }
}

pub fn verify(id: &str, order: usize) -> Result<IdentityReport, RegistryError> {
    Verifier::default().verify(id, order)
}

pub fn verify_all(order: usize) -> Vec<IdentityReport> {
    Verifier::default().verify_all(order)
}
