//! Finite-subgroup catalogs for the mapping class groups of genus 0, 1 and 2.
//!
//! * Genus 0: Stukow's classification of (maximal) finite subgroups of
//!   `Mod_0^n` — cyclic, dihedral and polyhedral groups — together with the
//!   closed-form marked-point counts for each placement case.
//! * Genus 1: the wallpaper families `(Z/s × Z/t) ⋊ Z/m` with `st | n` and
//!   `m ∈ {1, 2, 3, 4, 6}`; the quotient signature depends only on `m`.
//! * Genus 2: Broughton's classification of finite group actions on the
//!   genus-2 surface, stored as data rows (label, order, signature).

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::mcg::{omega, MappingClassGroup};
use crate::orbifold::OrbifoldSignature;
use crate::perm::PermutationGroup;

/// Isomorphism type of a catalog group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupFamily {
    Cyclic {
        m: u64,
    },
    /// Dihedral of order `2m`.
    Dihedral {
        m: u64,
    },
    A4,
    S4,
    A5,
    /// `(Z/s × Z/t) ⋊ Z/m` acting on the torus.
    WallpaperTorus {
        s: u64,
        t: u64,
        m: u64,
    },
    /// A row of Broughton's genus-2 table, identified by its printed label.
    Broughton {
        label: String,
    },
}

impl GroupFamily {
    pub fn label(&self) -> String {
        match self {
            GroupFamily::Cyclic { m } => format!("Z/{m}"),
            GroupFamily::Dihedral { m } => format!("D_{{2({m})}}"),
            GroupFamily::A4 => "A_4".to_string(),
            GroupFamily::S4 => "S_4".to_string(),
            GroupFamily::A5 => "A_5".to_string(),
            GroupFamily::WallpaperTorus { s, t, m } => {
                let pair = match (s, t) {
                    (1, 1) => String::new(),
                    (1, t) => format!("Z/{t}"),
                    (s, 1) => format!("Z/{s}"),
                    (s, t) => format!("Z/{s}×Z/{t}"),
                };
                match (pair.is_empty(), m) {
                    (true, 1) => "1".to_string(),
                    (true, m) => format!("Z/{m}"),
                    (false, 1) => pair,
                    (false, m) if pair.contains('×') => format!("({pair})⋊Z/{m}"),
                    (false, m) => format!("{pair}⋊Z/{m}"),
                }
            }
            GroupFamily::Broughton { label } => label.clone(),
        }
    }
}

/// An abstract finite group: family, order, solvability and (when the order
/// fits the engine bound) a faithful permutation model.
#[derive(Debug, Clone, Serialize)]
pub struct FiniteGroupSpec {
    #[serde(flatten)]
    pub family: GroupFamily,
    pub order: u64,
    pub solvable: bool,
    #[serde(skip)]
    pub permutation_model: Option<PermutationGroup>,
}

impl FiniteGroupSpec {
    pub fn cyclic(m: u64) -> Self {
        Self {
            family: GroupFamily::Cyclic { m },
            order: m,
            solvable: true,
            permutation_model: (m <= 60).then(|| PermutationGroup::cyclic(m)),
        }
    }

    pub fn dihedral(m: u64) -> Self {
        Self {
            family: GroupFamily::Dihedral { m },
            order: 2 * m,
            solvable: true,
            permutation_model: (2 * m <= 60).then(|| PermutationGroup::dihedral(m)),
        }
    }

    pub fn a4() -> Self {
        Self {
            family: GroupFamily::A4,
            order: 12,
            solvable: true,
            permutation_model: Some(PermutationGroup::alternating4()),
        }
    }

    pub fn s4() -> Self {
        Self {
            family: GroupFamily::S4,
            order: 24,
            solvable: true,
            permutation_model: Some(PermutationGroup::symmetric4()),
        }
    }

    pub fn a5() -> Self {
        Self {
            family: GroupFamily::A5,
            order: 60,
            solvable: false,
            permutation_model: Some(PermutationGroup::alternating5()),
        }
    }

    pub fn wallpaper_torus(s: u64, t: u64, m: u64) -> Self {
        debug_assert!(matches!(m, 1 | 2 | 3 | 4 | 6));
        Self {
            family: GroupFamily::WallpaperTorus { s, t, m },
            order: s * t * m,
            solvable: true,
            permutation_model: None,
        }
    }

    pub fn label(&self) -> String {
        self.family.label()
    }
}

/// Exact subgroup-chain length `λ(F)`.
///
/// Solvable groups have `λ = Ω(|F|)` (Jordan–Hölder); the only nonsolvable
/// catalog group is `A5`, whose length comes from the lattice engine once and
/// is cached.
pub fn lambda_of(spec: &FiniteGroupSpec) -> u64 {
    static A5_CHAIN_LENGTH: Lazy<u64> = Lazy::new(|| {
        PermutationGroup::alternating5()
            .chain_length()
            .expect("A5 fits the engine bound")
    });
    if spec.solvable {
        omega(spec.order)
    } else {
        match spec.family {
            GroupFamily::A5 => *A5_CHAIN_LENGTH,
            _ => spec
                .permutation_model
                .as_ref()
                .expect("nonsolvable catalog groups carry a permutation model")
                .chain_length()
                .expect("catalog groups fit the engine bound"),
        }
    }
}

/// One catalog row: a group together with the ambient mapping class group it
/// sits in and its quotient signature.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    #[serde(flatten)]
    pub group: FiniteGroupSpec,
    pub ambient: MappingClassGroup,
    pub signature: OrbifoldSignature,
    pub class_count: u8,
    pub source: &'static str,
}

/// Quotient signature of the sphere action of a genus-0 catalog group.
pub fn sphere_signature(family: &GroupFamily) -> OrbifoldSignature {
    let periods = match family {
        GroupFamily::Cyclic { m } => vec![*m, *m],
        GroupFamily::Dihedral { m } => vec![2, 2, *m],
        GroupFamily::A4 => vec![2, 3, 3],
        GroupFamily::S4 => vec![2, 3, 4],
        GroupFamily::A5 => vec![2, 3, 5],
        _ => panic!("not a sphere-acting family"),
    };
    OrbifoldSignature::new(0, periods).expect("periods are >= 2")
}

pub(crate) fn divisors_at_least_2(k: u64) -> Vec<u64> {
    if k < 2 {
        return Vec::new();
    }
    let mut out: Vec<u64> = (2..=k).filter(|d| k.is_multiple_of(*d)).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Is `A4` a subgroup of `Mod_0^n`? Either as a maximal group or inside
/// `S4`/`A5`.
pub fn a4_present(n: u64) -> bool {
    matches!(n % 12, 4 | 10) || s4_present(n) || a5_present(n)
}

pub fn s4_present(n: u64) -> bool {
    matches!(n % 24, 0 | 2 | 6 | 8 | 12 | 14 | 18 | 20)
}

/// The printed congruence list for `A5` reads mod 12 but lists residues up
/// to 50; mod 60 is the unique modulus consistent with them, and is what the
/// catalog uses.
pub fn a5_present(n: u64) -> bool {
    matches!(n % 60, 0 | 2 | 12 | 20 | 30 | 32 | 42 | 50)
}

/// Maximal finite subgroups of `Mod_0^n` (Stukow), `n >= 3`.
pub fn maximal_genus0(n: u64) -> Vec<FiniteGroupSpec> {
    assert!(n >= 3, "the sphere catalog needs n >= 3");
    let mut out = Vec::new();
    if n != 4 {
        out.push(FiniteGroupSpec::cyclic(n - 1));
    }
    out.push(FiniteGroupSpec::dihedral(n));
    if n == 5 || n >= 7 {
        out.push(FiniteGroupSpec::dihedral(n - 2));
    }
    if matches!(n % 12, 4 | 10) {
        out.push(FiniteGroupSpec::a4());
    }
    if s4_present(n) {
        out.push(FiniteGroupSpec::s4());
    }
    if a5_present(n) {
        out.push(FiniteGroupSpec::a5());
    }
    out
}

/// Number of conjugacy classes of subgroups of `Mod_0^n` isomorphic to the
/// given family: two for `Z/2` with `n` even and for `D_{2m}` with `2m | n`
/// or `2m | n-2`, one otherwise.
pub fn conjugacy_class_count(family: &GroupFamily, n: u64) -> u8 {
    match family {
        GroupFamily::Cyclic { m: 2 } if n.is_multiple_of(2) => 2,
        GroupFamily::Dihedral { m } => {
            let two_m = 2 * m;
            if n.is_multiple_of(two_m) || (n >= 2 && (n - 2).is_multiple_of(two_m)) {
                2
            } else {
                1
            }
        }
        _ => 1,
    }
}

/// All nontrivial finite subgroups of `Mod_0^n` up to isomorphism, one entry
/// per isomorphism type, `n >= 3`.
///
/// Cyclic subgroups exist for every `m >= 2` dividing `n`, `n-1` or `n-2`
/// (rotations with 0, 1 or 2 punctures at the poles); dihedral subgroups
/// `D_{2m}` for `m >= 2` dividing `n` or `n-2`; polyhedral subgroups by the
/// congruence conditions.
pub fn subgroups_genus0(n: u64) -> Vec<CatalogEntry> {
    assert!(n >= 3, "the sphere catalog needs n >= 3");
    let ambient = MappingClassGroup::new(0, n);
    let entry = |group: FiniteGroupSpec| {
        let signature = sphere_signature(&group.family);
        let class_count = conjugacy_class_count(&group.family, n);
        CatalogEntry {
            group,
            ambient,
            signature,
            class_count,
            source: "stukow",
        }
    };

    let mut cyclic_orders: Vec<u64> = Vec::new();
    for k in [n, n - 1, n - 2] {
        cyclic_orders.extend(divisors_at_least_2(k));
    }
    cyclic_orders.sort_unstable_by(|a, b| b.cmp(a));
    cyclic_orders.dedup();

    let mut dihedral_orders: Vec<u64> = Vec::new();
    for k in [n, n - 2] {
        dihedral_orders.extend(divisors_at_least_2(k));
    }
    dihedral_orders.sort_unstable_by(|a, b| b.cmp(a));
    dihedral_orders.dedup();

    let mut out: Vec<CatalogEntry> = Vec::new();
    out.extend(
        cyclic_orders
            .into_iter()
            .map(|m| entry(FiniteGroupSpec::cyclic(m))),
    );
    out.extend(
        dihedral_orders
            .into_iter()
            .map(|m| entry(FiniteGroupSpec::dihedral(m))),
    );
    if a5_present(n) {
        out.push(entry(FiniteGroupSpec::a5()));
    }
    if s4_present(n) {
        out.push(entry(FiniteGroupSpec::s4()));
    }
    if a4_present(n) {
        out.push(entry(FiniteGroupSpec::a4()));
    }
    out
}

/// Quotient signature of a torus action, determined by the rotation order
/// `m` alone.
pub fn torus_signature(m: u64) -> OrbifoldSignature {
    let (genus, periods) = match m {
        1 => (1, vec![]),
        2 => (0, vec![2, 2, 2, 2]),
        3 => (0, vec![3, 3, 3]),
        4 => (0, vec![2, 4, 4]),
        6 => (0, vec![2, 3, 6]),
        _ => panic!("torus rotation orders are 1, 2, 3, 4, 6"),
    };
    OrbifoldSignature::new(genus, periods).expect("periods are >= 2")
}

/// Every wallpaper family `(Z/s × Z/t) ⋊ Z/m` with `st | n`,
/// `m ∈ {1,2,3,4,6}`, `n >= 1`. The list is a superset of the finite
/// subgroups of `Mod_1^n`: not every triple need be realizable, and checking
/// the superset is sound.
pub fn families_genus1(n: u64) -> Vec<CatalogEntry> {
    assert!(n >= 1);
    let ambient = MappingClassGroup::new(1, n);
    let mut out = Vec::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        for s in 1..=d {
            if d % s != 0 {
                continue;
            }
            let t = d / s;
            for m in [1u64, 2, 3, 4, 6] {
                out.push(CatalogEntry {
                    group: FiniteGroupSpec::wallpaper_torus(s, t, m),
                    ambient,
                    signature: torus_signature(m),
                    class_count: 1,
                    source: "wallpaper",
                });
            }
        }
    }
    out
}

/// Broughton's table of finite nontrivial group actions on the genus-2
/// surface: 20 rows of (label, order, signature), all solvable.
///
/// The rows are data, not constructed groups; the exotic presentations are
/// never needed beyond their order, solvability and signature. The order-48
/// row keeps its published label `GL_2(4)` even though 48 is the order of
/// `GL(2,3)`; the label is recorded as printed.
pub fn broughton_genus2() -> Vec<CatalogEntry> {
    const ROWS: &[(&str, u64, u64, &[u64])] = &[
        ("Z/2", 2, 0, &[2, 2, 2, 2, 2, 2]),
        ("Z/2", 2, 1, &[2, 2]),
        ("Z/3", 3, 0, &[3, 3, 3, 3]),
        ("Z/2×Z/2", 4, 0, &[2, 2, 2, 2, 2]),
        ("Z/4", 4, 0, &[2, 2, 4, 4]),
        ("Z/5", 5, 0, &[5, 5, 5]),
        ("Z/6", 6, 0, &[3, 6, 6]),
        ("Z/6", 6, 0, &[2, 2, 3, 3]),
        ("D_{2(3)}", 6, 0, &[2, 2, 3, 3]),
        ("Z/8", 8, 0, &[2, 8, 8]),
        ("D~_2", 8, 0, &[4, 4, 4]),
        ("D_{2(4)}", 8, 0, &[2, 2, 2, 4]),
        ("Z/10", 10, 0, &[2, 5, 10]),
        ("Z/2×Z/6", 12, 0, &[2, 6, 6]),
        ("D_{4,3,-1}", 12, 0, &[3, 4, 4]),
        ("D_{2(6)}", 12, 0, &[2, 2, 2, 3]),
        ("D_{2,8,3}", 16, 0, &[2, 4, 8]),
        ("Z/2⋊(Z/2×Z/2×Z/3)", 24, 0, &[2, 4, 6]),
        ("SL_2(3)", 24, 0, &[3, 3, 4]),
        ("GL_2(4)", 48, 0, &[2, 3, 8]),
    ];
    ROWS.iter()
        .map(|&(label, order, genus, periods)| CatalogEntry {
            group: FiniteGroupSpec {
                family: GroupFamily::Broughton {
                    label: label.to_string(),
                },
                order,
                solvable: true,
                permutation_model: None,
            },
            ambient: MappingClassGroup::new(2, 0),
            signature: OrbifoldSignature::new(genus, periods.to_vec()).expect("periods are >= 2"),
            class_count: 1,
            source: "broughton",
        })
        .collect()
}

/// The five puncture-placement cases for cyclic and dihedral subgroups of
/// `Mod_0^n`, keyed the way the reference tables label their rows.
///
/// * `(1)`   `Z/m` rotation, one puncture at a pole (`m | n-1`)
/// * `(2.1)` `Z/m` rotation, punctures off the poles (`m | n`)
/// * `(2.2)` `D_{2m}` over the same equatorial placement (`m | n`)
/// * `(3.1)` `Z/m` rotation, punctures at both poles (`m | n-2`)
/// * `(3.2)` `D_{2m}` over the two-pole placement (`m | n-2`)
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SphereCase {
    CappedCyclic,
    EquatorialCyclic,
    EquatorialDihedral,
    PolarCyclic,
    PolarDihedral,
}

impl SphereCase {
    pub const ALL: [SphereCase; 5] = [
        SphereCase::CappedCyclic,
        SphereCase::EquatorialCyclic,
        SphereCase::EquatorialDihedral,
        SphereCase::PolarCyclic,
        SphereCase::PolarDihedral,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SphereCase::CappedCyclic => "(1)",
            SphereCase::EquatorialCyclic => "(2.1)",
            SphereCase::EquatorialDihedral => "(2.2)",
            SphereCase::PolarCyclic => "(3.1)",
            SphereCase::PolarDihedral => "(3.2)",
        }
    }

    pub fn is_dihedral(self) -> bool {
        matches!(
            self,
            SphereCase::EquatorialDihedral | SphereCase::PolarDihedral
        )
    }
}

/// Marked-point counts for a dihedral group `D_{2m}` acting with `k`
/// punctures away from the poles (`m | k`, `m >= 2`): the pole pair is one
/// marked point, and the equatorial orbit count comes out of the Burnside
/// lemma.
fn dihedral_marked_counts(k: u64, m: u64) -> Vec<u64> {
    debug_assert!(m >= 2 && k.is_multiple_of(m));
    if k % 2 == 1 {
        vec![1 + (k + 3 * m) / (2 * m)]
    } else if k.is_multiple_of(2 * m) {
        // Two conjugacy classes, one value each.
        vec![1 + (k + 2 * m) / (2 * m), 1 + (k + 4 * m) / (2 * m)]
    } else {
        vec![1 + (k + 3 * m) / (2 * m)]
    }
}

/// Closed-form `n_F` values for one sphere case, or empty when the case does
/// not apply to `(m, n)`. These formulas are the independent closed-form
/// route against which the subset-sum solver is checked.
pub fn sphere_case_nf_values(case: SphereCase, m: u64, n: u64) -> Vec<u64> {
    if m < 2 {
        return Vec::new();
    }
    match case {
        SphereCase::CappedCyclic => {
            if n >= 1 && (n - 1).is_multiple_of(m) {
                vec![2 + (n - 1) / m]
            } else {
                Vec::new()
            }
        }
        SphereCase::EquatorialCyclic => {
            if n.is_multiple_of(m) {
                vec![2 + n / m]
            } else {
                Vec::new()
            }
        }
        SphereCase::EquatorialDihedral => {
            // The containment needs at least m equatorial punctures.
            if n >= m && n.is_multiple_of(m) {
                dihedral_marked_counts(n, m)
            } else {
                Vec::new()
            }
        }
        SphereCase::PolarCyclic => {
            if n >= 2 && (n - 2).is_multiple_of(m) {
                vec![2 + (n - 2) / m]
            } else {
                Vec::new()
            }
        }
        SphereCase::PolarDihedral => {
            if n >= m + 2 && (n - 2).is_multiple_of(m) {
                dihedral_marked_counts(n - 2, m)
            } else {
                Vec::new()
            }
        }
    }
}
