//! Cross-route consistency: the closed-form placement formulas against the
//! subset-sum solver, and the lattice engine against the arithmetic length.

use mcgdim_core::catalog::{
    lambda_of, sphere_case_nf_values, sphere_signature, subgroups_genus0, FiniteGroupSpec,
    GroupFamily, SphereCase,
};
use mcgdim_core::mcg::{length_bound_holds, omega};
use mcgdim_core::orbifold::feasible_distributions;
use mcgdim_core::perm::PermutationGroup;

/// Solver route restricted to the occupancy pattern a sphere case describes:
/// cyclic cases fix how many poles of `(0;m,m)` carry punctures, dihedral
/// cases fix whether the order-`m` point of `(0;2,2,m)` does.
fn solver_values_for_case(case: SphereCase, m: u64, n: u64) -> Vec<u64> {
    let (order, sig) = if case.is_dihedral() {
        (2 * m, sphere_signature(&GroupFamily::Dihedral { m }))
    } else {
        (m, sphere_signature(&GroupFamily::Cyclic { m }))
    };
    let keep = |occ: &Vec<usize>| match case {
        SphereCase::CappedCyclic => occ.len() == 1,
        SphereCase::EquatorialCyclic => occ.is_empty(),
        SphereCase::PolarCyclic => occ.len() == 2,
        SphereCase::EquatorialDihedral => !occ.contains(&2),
        SphereCase::PolarDihedral => occ.contains(&2),
    };
    let mut values: Vec<u64> = feasible_distributions(order, &sig, n)
        .unwrap()
        .into_iter()
        .filter(|d| keep(&d.occupied))
        .map(|d| d.marked_points(&sig))
        .collect();
    values.sort_unstable();
    values.dedup();
    values
}

#[test]
fn closed_forms_equal_restricted_solver() {
    for case in SphereCase::ALL {
        for m in 2..=40u64 {
            for n in 2..=120u64 {
                // Dihedral cases need at least m punctures off the poles;
                // below that the numeric solver may still find placements,
                // but no subgroup containment backs them.
                let in_domain = match case {
                    SphereCase::EquatorialDihedral => n >= m,
                    SphereCase::PolarDihedral => n >= m + 2,
                    _ => true,
                };
                let formula = sphere_case_nf_values(case, m, n);
                if !in_domain {
                    assert!(formula.is_empty(), "case {} m={m} n={n}", case.label());
                    continue;
                }
                let solver = solver_values_for_case(case, m, n);
                assert_eq!(formula, solver, "case {} m={m} n={n}", case.label());
            }
        }
    }
}

#[test]
fn chain_length_equals_omega_for_solvable_models() {
    for m in 2..=60u64 {
        let group = PermutationGroup::cyclic(m);
        assert_eq!(group.chain_length().unwrap(), omega(m), "Z/{m}");
    }
    for m in 2..=30u64 {
        let group = PermutationGroup::dihedral(m);
        assert_eq!(group.chain_length().unwrap(), omega(2 * m), "D_{{2({m})}}");
    }
    assert_eq!(
        PermutationGroup::alternating4().chain_length().unwrap(),
        omega(12)
    );
    assert_eq!(
        PermutationGroup::symmetric4().chain_length().unwrap(),
        omega(24)
    );
}

#[test]
fn length_bound_over_catalogs() {
    // 2^lambda <= |F| for every catalog group that shows up at small n.
    for n in 3..=60u64 {
        for entry in subgroups_genus0(n) {
            let lambda = lambda_of(&entry.group);
            assert!(
                length_bound_holds(entry.group.order, lambda),
                "n={n} {} lambda={lambda}",
                entry.group.label()
            );
        }
    }
    for spec in [
        FiniteGroupSpec::a4(),
        FiniteGroupSpec::s4(),
        FiniteGroupSpec::a5(),
    ] {
        assert!(length_bound_holds(spec.order, lambda_of(&spec)));
    }
}

#[test]
fn polyhedral_lambda_from_lattice_matches_table_values() {
    assert_eq!(lambda_of(&FiniteGroupSpec::a4()), 3);
    assert_eq!(lambda_of(&FiniteGroupSpec::s4()), 4);
    assert_eq!(lambda_of(&FiniteGroupSpec::a5()), 4);
}
