//! Closed-form h-super edge-connectivity of `S(n,k)`.
//!
//! Two candidate cut sizes compete: isolating `h+1` vertices of one clique
//! costs `(n-h-1)(h+1)` edges, isolating a whole clique of order `n-k+1`
//! costs `(n-k+1)(k-1)`. All arithmetic is integral.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `h <= k-2` and `h <= n/2 - 1`: the sub-clique cut is optimal.
    SmallH,
    /// Every other in-range case: the full-clique cut is optimal.
    Otherwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub n: u64,
    pub k: u64,
    pub h: u64,
    pub clique_side_value: u64,
    pub split_value: u64,
    pub psi: u64,
    pub omega: u64,
    pub theorem_value: u64,
    pub branch: Branch,
    /// `2h = n-1` with `h <= k-2`: the half-integer band between the two
    /// branch conditions. Empty whenever `h <= n-k`, kept for reporting.
    pub gap_band: bool,
}

/// `(n-x)·x`.
pub fn f_profile(n: u64, x: u64) -> u64 {
    assert!(x <= n, "f_profile needs 0 <= x <= n, got x = {x}, n = {n}");
    (n - x) * x
}

pub fn check_range(n: u64, k: u64, h: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::TheoremRange(format!("2 <= k violated: k = {k}")));
    }
    if k + 1 > n {
        return Err(Error::TheoremRange(format!("k <= n-1 violated: n = {n}, k = {k}")));
    }
    if h > n - k {
        return Err(Error::TheoremRange(format!("h <= n-k violated: h = {h}, n-k = {}", n - k)));
    }
    Ok(())
}

pub fn evaluate(n: u64, k: u64, h: u64) -> Result<FormulaResult> {
    check_range(n, k, h)?;
    let clique_side_value = f_profile(n, h + 1);
    let split_value = f_profile(n, k - 1);
    let small_h = h + 2 <= k && 2 * h + 2 <= n;
    let (branch, theorem_value) = if small_h {
        (Branch::SmallH, clique_side_value)
    } else {
        (Branch::Otherwise, split_value)
    };
    Ok(FormulaResult {
        n,
        k,
        h,
        clique_side_value,
        split_value,
        psi: clique_side_value.min(split_value),
        omega: clique_side_value.max(split_value),
        theorem_value,
        branch,
        gap_band: 2 * h + 1 == n && h + 2 <= k,
    })
}

/// Which arm of the piecewise form of ψ applies when `2h <= n-2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PsiArm {
    /// `h <= k-2`: ψ = `(n-h-1)(h+1)`.
    CliqueSide,
    /// `h >= k-1`: ψ = `(n-k+1)(k-1)`.
    Split,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PsiBranch {
    pub arm: PsiArm,
    pub psi: u64,
}

pub fn psi_branch(n: u64, k: u64, h: u64) -> Result<PsiBranch> {
    check_range(n, k, h)?;
    if 2 * h + 2 > n {
        return Err(Error::TheoremRange(format!("h <= n/2 - 1 violated: 2h = {} > n-2 = {}", 2 * h, n - 2)));
    }
    let r = evaluate(n, k, h)?;
    let (arm, closed) = if h + 2 <= k {
        (PsiArm::CliqueSide, r.clique_side_value)
    } else {
        (PsiArm::Split, r.split_value)
    };
    assert_eq!(r.psi, closed, "piecewise form of psi disagrees at n={n} k={k} h={h}");
    Ok(PsiBranch { arm, psi: r.psi })
}
