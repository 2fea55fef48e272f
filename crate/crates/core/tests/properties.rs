//! Property tests for the structural invariants: normalization idempotence,
//! kernel symmetry and positivity, agreement of the two counting routes,
//! monotonicity and the dominance bounds.

use deltashell::{
    bargmann_bound, count_bound_states, green_kernel, kappa_matrix, oscillation_count,
    ChannelSpec, ShellConfig,
};
use proptest::prelude::*;

/// Random configuration with distinct increasing radii.
fn config_strategy(max_shells: usize) -> impl Strategy<Value = ShellConfig<f64>> {
    prop::collection::vec((0.05f64..2.0, -8.0f64..8.0), 1..=max_shells).prop_map(|steps| {
        let mut radius = 0.0;
        let pairs: Vec<(f64, f64)> = steps
            .into_iter()
            .map(|(dr, strength)| {
                radius += dr;
                (radius, strength)
            })
            .collect();
        ShellConfig::normalize(&pairs).expect("increasing positive radii")
    })
}

fn channel_values() -> impl Strategy<Value = f64> {
    prop::sample::select(vec![0.0, 0.5, 1.0, 2.0, 3.5])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normalization_is_idempotent(config in config_strategy(7)) {
        let pairs: Vec<(f64, f64)> =
            config.shells().iter().map(|s| (s.radius, s.strength)).collect();
        let again = ShellConfig::normalize(&pairs).unwrap();
        prop_assert_eq!(config, again);
    }

    #[test]
    fn kernel_symmetric_and_positive(
        l in -0.5f64..6.0,
        lambda in -50.0f64..0.0,
        r in 0.05f64..8.0,
        s in 0.05f64..8.0,
    ) {
        let a = green_kernel(l, lambda, r, s).unwrap();
        let b = green_kernel(l, lambda, s, r).unwrap();
        prop_assert_eq!(a.to_bits(), b.to_bits());
        prop_assert!(a > 0.0);
    }

    #[test]
    fn matrix_count_equals_oscillation_count(
        config in config_strategy(6),
        l in channel_values(),
    ) {
        let matrix = count_bound_states(&config, &ChannelSpec::Raw(l)).unwrap().count;
        let oracle = oscillation_count(&config, l).unwrap();
        prop_assert_eq!(matrix, oracle);
    }

    #[test]
    fn deepening_a_shell_never_unbinds(
        config in config_strategy(5),
        l in channel_values(),
        which in 0usize..5,
        extra in 0.1f64..5.0,
    ) {
        let base = oscillation_count(&config, l).unwrap();
        let k = which % config.len();
        let deeper: Vec<(f64, f64)> = config
            .shells()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                if i == k {
                    (s.radius, s.strength - extra)
                } else {
                    (s.radius, s.strength)
                }
            })
            .collect();
        let deeper = ShellConfig::normalize(&deeper).unwrap();
        prop_assert!(oscillation_count(&deeper, l).unwrap() >= base);
    }

    #[test]
    fn dominance_bounds(config in config_strategy(6), l in channel_values()) {
        let count = count_bound_states(&config, &ChannelSpec::Raw(l)).unwrap().count;
        // the count never exceeds the number of attractive shells
        prop_assert!(count <= config.negative_count());
        // strict trace-bound dominance through the attractive part
        let measure = config.attractive_measure();
        if !measure.is_empty() {
            prop_assert!((count as f64) < bargmann_bound(&measure, l).unwrap());
            // the attractive sub-family binds at least as much
            let sub = config.attractive_part();
            let sub_plus = kappa_matrix(&sub, l)
                .map(|m| {
                    deltashell::inertia(&m.entries, deltashell::default_inertia_tol(&m.entries))
                        .kappa_plus
                })
                .unwrap();
            prop_assert!(count <= sub_plus);
        } else {
            prop_assert_eq!(count, 0);
        }
    }

    #[test]
    fn count_invariant_under_rescaling(
        config in config_strategy(5),
        l in channel_values(),
        c in 0.2f64..5.0,
    ) {
        let base = oscillation_count(&config, l).unwrap();
        let scaled: Vec<(f64, f64)> = config
            .shells()
            .iter()
            .map(|s| (c * s.radius, s.strength / c))
            .collect();
        let scaled = ShellConfig::normalize(&scaled).unwrap();
        prop_assert_eq!(oscillation_count(&scaled, l).unwrap(), base);
    }
}
