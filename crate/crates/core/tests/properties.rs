//! Randomized invariants of the exact arithmetic layer.

use dlcf::exactnum::{solve_linear, CycloElem, CycloMatrix, Rational, SolveOutcome};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn cyclo(level: u64) -> impl Strategy<Value = CycloElem> {
    let phi = dlcf::exactnum::euler_phi(level) as usize;
    proptest::collection::vec(rational(), phi).prop_map(move |coeffs| {
        coeffs
            .into_iter()
            .enumerate()
            .fold(CycloElem::zero(), |acc, (i, c)| {
                let term = CycloElem::root_of_unity(level, i as i64)
                    .unwrap()
                    .scale(&c);
                acc + &term
            })
    })
}

fn any_cyclo() -> impl Strategy<Value = CycloElem> {
    (1u64..=12).prop_flat_map(cyclo)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative(x in any_cyclo(), y in any_cyclo(), z in any_cyclo()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
    }

    #[test]
    fn multiplication_distributes(x in any_cyclo(), y in any_cyclo(), z in any_cyclo()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn nonzero_elements_invert(x in any_cyclo()) {
        prop_assume!(!x.is_zero());
        let inv = x.inv().unwrap();
        prop_assert_eq!(&x * &inv, CycloElem::one());
    }

    #[test]
    fn conjugation_is_involutive_and_multiplicative(x in any_cyclo(), y in any_cyclo()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
    }

    #[test]
    fn level_round_trip(x in any_cyclo(), multiplier in 1u64..=4) {
        let up = x.level() * multiplier;
        let lifted = x.change_level(up).unwrap();
        prop_assert_eq!(lifted.minimal_level(), x.minimal_level());
    }

    #[test]
    fn consistent_solves_are_exact(
        entries in proptest::collection::vec(cyclo(6), 9),
        xs in proptest::collection::vec(cyclo(6), 3),
    ) {
        let a = CycloMatrix::new(3, 3, entries).unwrap();
        // build a consistent rhs from a known solution
        let b = a.apply(&xs).unwrap();
        match solve_linear(&a, &b).unwrap() {
            SolveOutcome::Solved { solution, rank, nullity } => {
                prop_assert_eq!(a.apply(&solution).unwrap(), b);
                prop_assert_eq!(rank + nullity, 3);
            }
            SolveOutcome::Inconsistent { .. } => {
                prop_assert!(false, "consistent system reported inconsistent");
            }
        }
    }

    #[test]
    fn inconsistency_certificates_are_valid(
        entries in proptest::collection::vec(cyclo(4), 6),
        b in proptest::collection::vec(cyclo(4), 3),
    ) {
        let a = CycloMatrix::new(3, 2, entries).unwrap();
        if let SolveOutcome::Inconsistent { certificate, .. } =
            solve_linear(&a, &b).unwrap()
        {
            // y A = 0 and y b != 0
            for col in 0..a.cols() {
                let mut s = CycloElem::zero();
                for row in 0..a.rows() {
                    s += &(&certificate[row] * a.entry(row, col));
                }
                prop_assert!(s.is_zero());
            }
            let pairing = certificate
                .iter()
                .zip(&b)
                .fold(CycloElem::zero(), |acc, (y, v)| acc + &(y * v));
            prop_assert!(!pairing.is_zero());
        }
    }
}

#[test]
fn root_of_unity_sums_vanish() {
    for n in 2..=30u64 {
        let sum = (0..n).fold(CycloElem::zero(), |acc, k| {
            acc + &CycloElem::root_of_unity(n, k as i64).unwrap()
        });
        assert!(sum.is_zero(), "n = {n}");
    }
}
