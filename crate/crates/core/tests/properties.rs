use fibsum::{
    closed_form, eval_identity, fib, fib_pair, lucas, naive_power_sum, run_grid, BigInt, GridSpec,
    IdentityId, Index, IndexRange, OpCount, SumFamily, SumSpec,
};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = SumFamily> {
    prop::sample::select(SumFamily::ALL.to_vec())
}

fn identity() -> impl Strategy<Value = IdentityId> {
    prop::sample::select(IdentityId::ALL.to_vec())
}

/// The signed k-th term of a family; the k = 0 term only matters for the
/// alternating Lucas sum.
fn term(family: SumFamily, m: i32, k: i32) -> BigInt {
    let base = if family.is_lucas() { lucas(m * k) } else { fib(m * k) };
    let fourth = base.pow(4);
    if family.is_alternating() && k % 2 == 0 {
        -fourth
    } else {
        fourth
    }
}

proptest! {
    #[test]
    fn closed_form_matches_oracle(family in family(), m in -25i32..=25, n in 0i32..=60) {
        prop_assume!(!(m == 0 && family.requires_nonzero_m()));
        let spec = SumSpec::new(family, m, n).unwrap();
        prop_assert_eq!(closed_form(&spec).unwrap(), naive_power_sum(family, m, n).unwrap());
    }

    #[test]
    fn step_in_n_is_the_last_term(family in family(), m in -9i32..=9, n in 1i32..=40) {
        prop_assume!(!(m == 0 && family.requires_nonzero_m()));
        let now = closed_form(&SumSpec::new(family, m, n).unwrap()).unwrap();
        let before = closed_form(&SumSpec::new(family, m, n - 1).unwrap()).unwrap();
        let mut step = term(family, m, n);
        // The alternating Lucas lower limit toggles between 0 and 1 with the
        // parity of n, so the k = 0 term enters or leaves at every step.
        if family == SumFamily::AltLucasFourth {
            let zero_term = term(family, m, 0);
            step += if n % 2 == 1 { zero_term } else { -zero_term };
        }
        prop_assert_eq!(now - before, step);
    }

    #[test]
    fn non_alternating_sums_are_even_in_m(m in 1i32..=30, n in 0i32..=40) {
        for family in [SumFamily::FibFourth, SumFamily::LucasFourth] {
            let pos = closed_form(&SumSpec::new(family, m, n).unwrap()).unwrap();
            let neg = closed_form(&SumSpec::new(family, -m, n).unwrap()).unwrap();
            prop_assert_eq!(pos, neg);
        }
    }

    #[test]
    fn identities_hold_far_out(id in identity(), u in -2000i32..=2000, v in -2000i32..=2000) {
        let args: Vec<Index> = [u, v][..id.arity()].iter().map(|&a| Index::from(a)).collect();
        prop_assert!(eval_identity(id, &args).unwrap().holds());
    }

    #[test]
    fn doubling_pairs_satisfy_cassini(n in 0u64..100_000) {
        prop_assert!(fib_pair(n, &mut OpCount::new()).satisfies_cassini(n % 2 == 1));
    }
}

#[test]
fn reports_are_deterministic() {
    let spec = GridSpec {
        m_range: IndexRange::new(-3, 3),
        n_range: IndexRange::new(0, 6),
        identity_arg_range: IndexRange::new(-5, 5),
        ..GridSpec::standard()
    };
    let a = run_grid(&spec).unwrap();
    let b = run_grid(&spec).unwrap();
    assert!(a.same_outcome(&b));
    assert_eq!(a.cases_run, spec.case_count());
}
