//! Quotient-orbifold arithmetic for finite group actions on punctured
//! surfaces.
//!
//! A finite group `F` acting on a genus-`g` surface has a quotient orbifold
//! with signature `(g_F; p_1, .., p_k)`: quotient genus plus the orders of
//! the elliptic points. Placing `n` punctures invariantly means choosing, for
//! each puncture orbit, either an elliptic point (orbit size `|F|/p_i`, each
//! elliptic point usable at most once) or a free orbit (size `|F|`). The
//! number of marked points of the quotient is then `n_F = o_F + a` where `a`
//! is the number of free orbits: an occupied elliptic point is already
//! counted among the `o_F` elliptic points, so it is never counted twice.
//!
//! All arithmetic in this module is exact; feasibility is purely numeric
//! orbit-size accounting.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mcg::{vcd_mcg, MappingClassGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbifoldError {
    #[error("every period must be at least 2, got {period}")]
    PeriodTooSmall { period: u64 },
    #[error("period {period} does not divide the group order {order}: inconsistent signature")]
    InconsistentSignature { order: u64, period: u64 },
    #[error("centralizer bound needs n >= 3 and 2 <= r <= n, got n={n}, r={r}")]
    BadCentralizerInput { n: u64, r: u64 },
}

/// Quotient genus `g_F` plus the elliptic-point orders `(p_1, .., p_{o_F})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbifoldSignature {
    #[serde(rename = "genus")]
    pub quotient_genus: u64,
    pub periods: Vec<u64>,
}

impl OrbifoldSignature {
    pub fn new(quotient_genus: u64, periods: Vec<u64>) -> Result<Self, OrbifoldError> {
        if let Some(&period) = periods.iter().find(|&&p| p < 2) {
            return Err(OrbifoldError::PeriodTooSmall { period });
        }
        Ok(Self {
            quotient_genus,
            periods,
        })
    }

    /// Number of elliptic points `o_F`.
    pub fn elliptic_count(&self) -> u64 {
        self.periods.len() as u64
    }
}

impl std::fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}", self.quotient_genus)?;
        if !self.periods.is_empty() {
            write!(f, ";")?;
            for (i, p) in self.periods.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
        } else {
            write!(f, ";-")?;
        }
        write!(f, ")")
    }
}

/// One invariant placement of `n` punctures: the set of occupied elliptic
/// points plus the count of free orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PunctureDistribution {
    /// Indices into the signature's period list.
    pub occupied: Vec<usize>,
    /// Number of puncture orbits of full size `|F|`.
    pub free_orbits: u64,
}

impl PunctureDistribution {
    /// Marked points of the quotient: `n_F = o_F + a`, counting each
    /// occupied elliptic point once.
    pub fn marked_points(&self, sig: &OrbifoldSignature) -> u64 {
        sig.elliptic_count() + self.free_orbits
    }
}

/// Riemann–Hurwitz: `2 - 2g = |F| (2 - 2 g_F - Σ (1 - 1/p_i))`, evaluated in
/// exact rational arithmetic.
pub fn riemann_hurwitz_check(total_genus: u64, order: u64, sig: &OrbifoldSignature) -> bool {
    assert!(order >= 1);
    let lhs = Ratio::from_integer(2i64 - 2 * total_genus as i64);
    let mut orbifold_euler = Ratio::from_integer(2i64 - 2 * sig.quotient_genus as i64);
    for &p in &sig.periods {
        orbifold_euler -= Ratio::new((p - 1) as i64, p as i64);
    }
    lhs == Ratio::from_integer(order as i64) * orbifold_euler
}

/// Every numeric puncture placement: subsets of elliptic points (orbit sizes
/// `order/p_i`) plus free orbits, summing to exactly `n`.
///
/// An empty result means no action of a group with this quotient data admits
/// `n` invariant punctures. Errors if some period does not divide the order.
pub fn feasible_distributions(
    order: u64,
    sig: &OrbifoldSignature,
    n: u64,
) -> Result<Vec<PunctureDistribution>, OrbifoldError> {
    let orbit_sizes: Vec<u64> = sig
        .periods
        .iter()
        .map(|&p| {
            if order.is_multiple_of(p) {
                Ok(order / p)
            } else {
                Err(OrbifoldError::InconsistentSignature { order, period: p })
            }
        })
        .collect::<Result<_, _>>()?;
    let k = orbit_sizes.len();
    assert!(k < 32, "signatures this long do not occur");
    let mut out = Vec::new();
    // Exhaustive subset sweep: o_F <= 6 in every catalog, so this is at most
    // 64 subsets per call.
    for subset in 0u32..(1u32 << k) {
        let occupied_sum: u64 = (0..k)
            .filter(|&i| subset & (1 << i) != 0)
            .map(|i| orbit_sizes[i])
            .sum();
        if occupied_sum > n || !(n - occupied_sum).is_multiple_of(order) {
            continue;
        }
        out.push(PunctureDistribution {
            occupied: (0..k).filter(|&i| subset & (1 << i) != 0).collect(),
            free_orbits: (n - occupied_sum) / order,
        });
    }
    out.sort_by_key(|d| (d.marked_points(sig), d.occupied.clone()));
    Ok(out)
}

/// The set `{ n_F }` over all feasible distributions, ascending and deduped.
pub fn nf_values(order: u64, sig: &OrbifoldSignature, n: u64) -> Result<Vec<u64>, OrbifoldError> {
    let mut values: Vec<u64> = feasible_distributions(order, sig, n)?
        .iter()
        .map(|d| d.marked_points(sig))
        .collect();
    values.sort_unstable();
    values.dedup();
    Ok(values)
}

/// `n_F <= n/|F| + o_F`, compared exactly.
pub fn nf_bound_holds(n_f: u64, n: u64, order: u64, sig: &OrbifoldSignature) -> bool {
    Ratio::from_integer(n_f as i64)
        <= Ratio::new(n as i64, order as i64) + Ratio::from_integer(sig.elliptic_count() as i64)
}

/// `vcd(WF)` for a subgroup with quotient data `(g_F, n_F)`: the normalizer
/// has finite index in `Mod_{g_F}^{n_F}`, so this is Harer's formula applied
/// to the quotient.
pub fn vcd_weyl(quotient_genus: u64, n_f: u64) -> u64 {
    vcd_mcg(MappingClassGroup::new(quotient_genus, n_f))
}

/// Upper bound `n/r - 1` for the Weyl group of an order-`r` element of the
/// sphere mapping class group, as an exact rational. Requires `2 <= r <= n`
/// and `n >= 3`: a finite-order element of `Mod_0^n` has order at most `n`.
pub fn centralizer_vcd_bound(n: u64, r: u64) -> Result<Ratio<i64>, OrbifoldError> {
    if n < 3 || r < 2 || r > n {
        return Err(OrbifoldError::BadCentralizerInput { n, r });
    }
    Ok(Ratio::new(n as i64, r as i64) - Ratio::from_integer(1))
}
