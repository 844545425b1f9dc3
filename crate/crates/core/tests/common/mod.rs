#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tb_core::{
    block_graph, build_family, build_quotient, FamilySpec, FiniteGraph, LatticeQuotient,
};

/// Small graphs for oracle comparisons: blocks, small family members,
/// non-degenerate quotients and seeded random graphs, all with at most 16
/// vertices.
pub fn corpus() -> Vec<(String, FiniteGraph)> {
    let mut out = vec![
        ("block".to_string(), block_graph(1, 1)),
        ("block(3,-2)".to_string(), block_graph(3, -2)),
    ];
    let specs = [
        FamilySpec::tbt(1),
        FamilySpec::tbt(2),
        FamilySpec::tbp(1, 1),
        FamilySpec::tbp(1, 2),
        FamilySpec::tbp(2, 1),
        FamilySpec::tbr(1, 1),
        FamilySpec::tbr(1, 2),
        FamilySpec::tbr(2, 1),
    ];
    for spec in specs {
        out.push((spec.to_string(), build_family(&spec).unwrap()));
    }
    for q in LatticeQuotient::enumerate(5) {
        if let Ok(g) = build_quotient(&q) {
            out.push((format!("quotient {q}"), g));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x7b_c0de);
    let mut k = 0;
    while out.len() < 60 {
        let n = rng.gen_range(5..=16);
        let p = rng.gen_range(0.15..0.5);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        out.push((
            format!("random #{k} (n={n})"),
            FiniteGraph::from_edges(n, &edges).unwrap(),
        ));
        k += 1;
    }
    out
}
