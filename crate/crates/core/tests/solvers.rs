mod common;

use tb_core::solve::{brute_force, has_efficient_dominating, is_ld_set, verify_result};
use tb_core::{build_family, solve, FamilySpec, ParamKind, SolveError};

#[test]
fn branch_and_bound_matches_brute_force() {
    let corpus = common::corpus();
    assert!(corpus.len() >= 50);
    for (name, g) in &corpus {
        assert!(g.n() <= 16, "{name}");
        for kind in ParamKind::ALL {
            match (solve(g, kind), brute_force(g, kind)) {
                (Ok(fast), Ok(slow)) => {
                    assert_eq!(fast.value, slow.value, "{name} {}", kind.name());
                    assert_eq!(
                        fast.witness,
                        slow.witness,
                        "{name} {}: lex-least witness",
                        kind.name()
                    );
                    assert!(verify_result(g, &fast).unwrap(), "{name} {}", kind.name());
                }
                (Err(a), Err(b)) => assert_eq!(a, b, "{name} {}", kind.name()),
                (a, b) => panic!("{name} {}: solver {a:?} vs oracle {b:?}", kind.name()),
            }
        }
    }
}

#[test]
fn parameter_chain_and_counting_bound() {
    for (name, g) in common::corpus() {
        let gamma = solve(&g, ParamKind::Gamma).unwrap();
        let ld = solve(&g, ParamKind::Ld).unwrap();
        assert!(gamma.value <= ld.value, "{name}");
        let k = ld.value as u32;
        assert!(
            g.n() - ld.value < 1usize << k,
            "{name}: n - |S| <= 2^|S| - 1"
        );
        assert!(is_ld_set(&g, &ld.witness).unwrap());
        match solve(&g, ParamKind::Ic) {
            Ok(ic) => assert!(ld.value <= ic.value, "{name}"),
            Err(e) => assert!(matches!(e, SolveError::ClosedTwins(_)), "{name}"),
        }
        let f = solve(&g, ParamKind::FMax).unwrap();
        assert!(f.value <= g.n());
        assert_eq!(
            f.value == g.n(),
            has_efficient_dominating(&g).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn domination_of_tbp_is_monotone() {
    let mut gamma = [[0usize; 5]; 5];
    for r in 1..=4u64 {
        for s in 1..=4u64 {
            let g = build_family(&FamilySpec::tbp(r, s)).unwrap();
            gamma[r as usize][s as usize] = solve(&g, ParamKind::Gamma).unwrap().value;
        }
    }
    for r in 1..=4 {
        for s in 1..=4 {
            if r > 1 {
                assert!(gamma[r - 1][s] <= gamma[r][s], "r={r} s={s}");
            }
            if s > 1 {
                assert!(gamma[r][s - 1] <= gamma[r][s], "r={r} s={s}");
            }
        }
    }
    assert_eq!(gamma[1][1], 2);
}
