//! Chromatic thresholds from extremal edge counts: once the chromatic
//! number of a host that is neither complete nor an odd cycle reaches
//! `1 + (2/n) sum ex(n, H_i)`, the host has more edges than all color
//! classes can hold while avoiding their targets.

use num_rational::Ratio;
use thiserror::Error;

use crate::detect::Target;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TuranError {
    #[error("no extremal bound is known for target {0}; supply one")]
    Unsupported(String),
    #[error("paths need at least 2 vertices, got {0}")]
    PathTooShort(usize),
    #[error("need one bound per target ({targets} targets, {bounds} bounds)")]
    BoundCount { targets: usize, bounds: usize },
    #[error("the host must have at least one vertex")]
    EmptyHost,
}

/// The Erdős–Gallai bound `ex(n, P_order) <= floor((order - 2) n / 2)`.
pub fn erdos_gallai_path_bound(n: usize, order: usize) -> Result<usize, TuranError> {
    if order < 2 {
        return Err(TuranError::PathTooShort(order));
    }
    Ok((order - 2) * n / 2)
}

/// `1 + (2/n) sum bounds`, given upper bounds on each `ex(n, H_i)`.
pub fn threshold_from_bounds(n: usize, bounds: &[usize]) -> Result<Ratio<i64>, TuranError> {
    if n == 0 {
        return Err(TuranError::EmptyHost);
    }
    let sum: usize = bounds.iter().sum();
    Ok(Ratio::from_integer(1) + Ratio::new(2 * sum as i64, n as i64))
}

/// The threshold for `targets` on `n` vertices. Paths use the Erdős–Gallai
/// bound; any other target needs its bound in `supplied` (same length as
/// `targets`, `None` for paths).
pub fn turan_threshold(
    n: usize,
    targets: &[Target],
    supplied: Option<&[Option<usize>]>,
) -> Result<Ratio<i64>, TuranError> {
    if let Some(s) = supplied {
        if s.len() != targets.len() {
            return Err(TuranError::BoundCount { targets: targets.len(), bounds: s.len() });
        }
    }
    let bounds = targets
        .iter()
        .enumerate()
        .map(|(i, t)| match (supplied.and_then(|s| s[i]), t) {
            (Some(b), _) => Ok(b),
            (None, Target::Path(order)) => erdos_gallai_path_bound(n, *order),
            (None, other) => Err(TuranError::Unsupported(other.to_string())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    threshold_from_bounds(n, &bounds)
}
