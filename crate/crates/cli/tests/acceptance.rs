//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tb_core::density::{
    lift_check, lift_check_perfect_open, perfect_open_pattern, search, search_with_fallback,
    survey, DensityRecord,
};
use tb_core::graph::named::cube;
use tb_core::hamilton::{
    bipartite_balance, cut_indices, find_hamiltonian_cycle, hexagon_cut_set, verify_cut,
};
use tb_core::share::{check_ld_pn_bound, check_open_share_bound, share_report};
use tb_core::solve::{
    brute_force, has_efficient_dominating, is_dominating, is_open_dominating, verify_result,
};
use tb_core::{
    block_graph, build_family, build_quotient, closed_form_counts, solve, validate_quotient, Class,
    FamilySpec, FiniteGraph, LatticeQuotient, ParamKind, Rational,
};

const MAX_SIDE: u64 = 12;
const STRUCTURE_MAX_DET: i64 = 16;
const ORACLE_MIN_GRAPHS: usize = 50;
const ORACLE_MAX_N: usize = 16;
const SHARE_TRIALS: usize = 100;
const SEARCH_DET: i64 = 12;
const GAMMA_DET: i64 = 14;
const GAMMA_FALLBACK_DET: i64 = 40;
const F_DET: i64 = 16;
const LIFT_WINDOW: u64 = 12;
const SEED: u64 = 0x005e_ed7b;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn all_specs(max: u64) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for r in 1..=max {
        specs.push(FamilySpec::tbt(r));
        for s in 1..=max {
            specs.push(FamilySpec::tbp(r, s));
            specs.push(FamilySpec::tbr(r, s));
        }
    }
    specs
}

fn valid_quotients(max_det: i64, radius: usize) -> Vec<LatticeQuotient> {
    LatticeQuotient::enumerate(max_det)
        .into_iter()
        .filter(|q| validate_quotient(q, radius))
        .collect()
}

fn c1_counts() {
    for spec in all_specs(MAX_SIDE) {
        let g = build_family(&spec).unwrap();
        let (n, m) = closed_form_counts(&spec).unwrap();
        assert_eq!((g.n() as u64, g.m() as u64), (n, m), "{spec}");
    }
}

fn isomorphic(a: &FiniteGraph, b: &FiniteGraph) -> Option<Vec<usize>> {
    fn go(a: &FiniteGraph, b: &FiniteGraph, map: &mut Vec<usize>) -> bool {
        let v = map.len();
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if !map.contains(&w)
                && a.degree(v) == b.degree(w)
                && (0..v).all(|x| a.has_edge(x, v) == b.has_edge(map[x], w))
            {
                map.push(w);
                if go(a, b, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::new();
    (a.n() == b.n() && a.m() == b.m() && go(a, b, &mut map)).then_some(map)
}

fn c2_structure() {
    let qs = valid_quotients(STRUCTURE_MAX_DET, 1);
    assert!(!qs.is_empty());
    for q in qs {
        let g = build_quotient(&q).unwrap();
        let det = q.det() as usize;
        assert_eq!(g.m(), 6 * det, "{q}");
        for v in 0..g.n() {
            let want = if g.label(v).unwrap().cls == Class::U {
                6
            } else {
                3
            };
            assert_eq!(g.degree(v), want, "{q}");
        }
        let (a, b) = g.bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (2 * det, det), "{q}");
        for (x, y) in g.edges() {
            let us = [x, y]
                .iter()
                .filter(|&&z| g.label(z).unwrap().cls == Class::U)
                .count();
            assert_eq!(us, 1, "{q}");
        }
    }
    let (target, _) = cube().without(&[7]).unwrap();
    let block = block_graph(1, 1);
    let map = isomorphic(&block, &target).expect("block is Q3 minus a vertex");
    for (x, y) in block.edges() {
        assert!(target.has_edge(map[x], map[y]));
    }
}

fn oracle_corpus() -> Vec<(String, FiniteGraph)> {
    let mut out = vec![("block".to_string(), block_graph(1, 1))];
    for spec in [
        FamilySpec::tbt(1),
        FamilySpec::tbt(2),
        FamilySpec::tbp(1, 2),
        FamilySpec::tbp(2, 1),
        FamilySpec::tbr(1, 2),
        FamilySpec::tbr(2, 1),
    ] {
        out.push((spec.to_string(), build_family(&spec).unwrap()));
    }
    for q in LatticeQuotient::enumerate(5) {
        if let Ok(g) = build_quotient(&q) {
            out.push((format!("quotient {q}"), g));
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut k = 0;
    while out.len() < ORACLE_MIN_GRAPHS + 10 {
        let n = rng.gen_range(4..=ORACLE_MAX_N);
        let p = rng.gen_range(0.15..0.55);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        out.push((
            format!("random #{k}"),
            FiniteGraph::from_edges(n, &edges).unwrap(),
        ));
        k += 1;
    }
    out
}

fn c3_oracle() {
    let corpus = oracle_corpus();
    assert!(corpus.len() >= ORACLE_MIN_GRAPHS);
    for (name, g) in &corpus {
        assert!(g.n() <= ORACLE_MAX_N);
        for kind in ParamKind::ALL {
            match (solve(g, kind), brute_force(g, kind)) {
                (Ok(a), Ok(b)) => {
                    assert_eq!(a.value, b.value, "{name} {}", kind.name());
                    assert!(verify_result(g, &a).unwrap(), "{name} {}", kind.name());
                    assert!(verify_result(g, &b).unwrap(), "{name} {}", kind.name());
                }
                (Err(a), Err(b)) => assert_eq!(a, b),
                (a, b) => panic!("{name} {}: {a:?} vs {b:?}", kind.name()),
            }
        }
    }
}

fn random_host(rng: &mut StdRng) -> (FiniteGraph, bool) {
    match rng.gen_range(0..3) {
        0 => (
            build_family(&FamilySpec::tbp(rng.gen_range(1..6), rng.gen_range(1..6))).unwrap(),
            false,
        ),
        1 => (
            build_family(&FamilySpec::tbr(rng.gen_range(1..6), rng.gen_range(1..6))).unwrap(),
            false,
        ),
        _ => loop {
            let a = rng.gen_range(2..7);
            let q = LatticeQuotient::new(a, rng.gen_range(0..a), rng.gen_range(2..7)).unwrap();
            if let Ok(g) = build_quotient(&q) {
                break (g, true);
            }
        },
    }
}

fn random_dominating(g: &FiniteGraph, rng: &mut StdRng, open: bool) -> Vec<usize> {
    let p = rng.gen_range(0.05..0.4);
    let mut mask: Vec<bool> = (0..g.n()).map(|_| rng.gen_bool(p)).collect();
    for v in 0..g.n() {
        if !((!open && mask[v]) || g.neighbors(v).iter().any(|&w| mask[w])) {
            let ns = g.neighbors(v);
            let pick = if open || (!ns.is_empty() && rng.gen_bool(0.5)) {
                ns[rng.gen_range(0..ns.len())]
            } else {
                v
            };
            mask[pick] = true;
        }
    }
    (0..g.n()).filter(|&v| mask[v]).collect()
}

fn c4_shares() {
    let mut rng = StdRng::seed_from_u64(SEED ^ 4);
    for _ in 0..SHARE_TRIALS {
        let (g, torus) = random_host(&mut rng);
        let n = Rational::from_integer(g.n() as i64);

        let d = random_dominating(&g, &mut rng, false);
        assert!(is_dominating(&g, &d).unwrap());
        let rep = share_report(&g, &d, false).unwrap();
        assert_eq!(rep.total, n);
        for (&v, &s) in &rep.shares {
            assert!(s <= Rational::from_integer(1 + g.degree(v) as i64));
            if torus {
                let cap = if g.degree(v) == 3 { 4 } else { 7 };
                assert!(s <= Rational::from_integer(cap));
            }
        }

        let od = random_dominating(&g, &mut rng, true);
        assert!(is_open_dominating(&g, &od).unwrap());
        let rep = share_report(&g, &od, true).unwrap();
        assert_eq!(rep.total, n);
        for (&v, &s) in &rep.shares {
            assert!(s <= Rational::from_integer(g.degree(v) as i64));
        }
    }
}

fn assert_lifts(records: &[DensityRecord]) {
    for rec in records {
        assert!(
            lift_check(rec, LIFT_WINDOW, LIFT_WINDOW).unwrap(),
            "{} on {}",
            rec.kind.name(),
            rec.quotient
        );
    }
}

fn c5_gamma() {
    let out =
        search_with_fallback(ParamKind::Gamma, GAMMA_DET, GAMMA_FALLBACK_DET, r(1, 5)).unwrap();
    eprintln!(
        "      best 1/5 candidate: {} on {} (det <= {} examined)",
        out.best.density, out.best.quotient, out.max_det_examined
    );
    assert!(out.reached_target);
    assert_eq!(out.best.density, r(1, 5));
    for rec in &out.records {
        assert!(
            rec.density >= r(1, 5),
            "{} gives {}",
            rec.quotient,
            rec.density
        );
        assert!(rec.density > r(1, 7));
    }
    assert_lifts(std::slice::from_ref(&out.best));
    let g = build_quotient(&out.best.quotient).unwrap();
    let total = share_report(&g, &out.best.witness_indices(), false)
        .unwrap()
        .total;
    assert_eq!(total, Rational::from_integer(g.n() as i64));
}

fn c6_efficient() {
    let records = survey(ParamKind::FMax, F_DET).unwrap();
    let hit = records
        .iter()
        .find(|rec| 96 % (3 * rec.quotient.det()) == 0 && rec.density >= r(11, 12))
        .expect("an 11/12 packing on a quotient whose order divides 96");
    eprintln!("      F fraction {} on {}", hit.density, hit.quotient);
    assert_lifts(std::slice::from_ref(hit));
    for rec in &records {
        assert!(rec.density < r(1, 1));
        let g = build_quotient(&rec.quotient).unwrap();
        assert!(!has_efficient_dominating(&g).unwrap(), "{}", rec.quotient);
    }
}

fn c7_open() {
    let rec = perfect_open_pattern(SEARCH_DET).unwrap();
    assert_eq!(rec.value, rec.quotient.vertex_count());
    assert_eq!(rec.set_density, r(2, 9));
    assert!(lift_check_perfect_open(&rec, LIFT_WINDOW, LIFT_WINDOW).unwrap());
    let best = search(ParamKind::GammaOp, SEARCH_DET).unwrap();
    assert_eq!(best.density, r(2, 9));
    assert_lifts(&[best]);
}

fn c8_ld() {
    let records = survey(ParamKind::Ld, SEARCH_DET).unwrap();
    let best = search(ParamKind::Ld, SEARCH_DET).unwrap();
    eprintln!("      LD best {} on {}", best.density, best.quotient);
    assert!(best.density > r(1, 4) && best.density <= r(8, 27));
    for rec in &records {
        let g = build_quotient(&rec.quotient).unwrap();
        let checks = check_ld_pn_bound(&g, &rec.witness_indices()).unwrap();
        assert!(checks.iter().all(|c| c.holds()), "{}", rec.quotient);
    }
    assert_lifts(&records);
}

fn c9_ic() {
    let best = search(ParamKind::Ic, SEARCH_DET).unwrap();
    eprintln!("      IC best {} on {}", best.density, best.quotient);
    assert!(best.density >= r(3, 11) && best.density <= r(1, 3));
    assert_lifts(&[best]);
}

fn c10_old() {
    let records = survey(ParamKind::Old, SEARCH_DET).unwrap();
    let best = search(ParamKind::Old, SEARCH_DET).unwrap();
    assert_eq!(best.density, r(7, 18));
    for rec in &records {
        assert!(
            rec.density >= r(7, 18),
            "{} gives {}",
            rec.quotient,
            rec.density
        );
        let g = build_quotient(&rec.quotient).unwrap();
        let bounds = check_open_share_bound(&g, &rec.witness_indices()).unwrap();
        assert!(bounds.iter().all(|b| b.holds()), "{}", rec.quotient);
    }
    assert_lifts(&records);
}

fn c11_hamilton() {
    let g = build_family(&FamilySpec::tbp(7, 7)).unwrap();
    let s = cut_indices(&g, &hexagon_cut_set(4, 4)).unwrap();
    let cert = verify_cut(&g, &s).unwrap();
    assert_eq!(cert.isolated_after, 24);
    assert!(cert.components_after > 19);
    assert!(cert.certifies);
    for spec in all_specs(MAX_SIDE) {
        let (_, _, balanced) = bipartite_balance(&build_family(&spec).unwrap()).unwrap();
        assert!(!balanced, "{spec}");
    }
    for g in [
        block_graph(1, 1),
        build_family(&FamilySpec::tbp(1, 2)).unwrap(),
        build_family(&FamilySpec::tbp(2, 2)).unwrap(),
    ] {
        assert_eq!(find_hamiltonian_cycle(&g).unwrap(), None);
    }
}

fn tb(args: &[&str]) -> String {
    let o = Command::new(env!("CARGO_BIN_EXE_tb"))
        .args(args)
        .output()
        .expect("tb runs");
    assert!(
        o.status.success(),
        "tb {args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn c12_tooling() {
    let dir = tempfile::tempdir().unwrap();
    let sources: [&[&str]; 6] = [
        &["--block"],
        &["--family", "tbt", "--rows", "3"],
        &["--family", "tbp", "--rows", "2", "--cols", "3"],
        &["--family", "tbr", "--rows", "3", "--cols", "2"],
        &["--quotient", "3,0,3"],
        &["--named", "c6"],
    ];
    for (k, src) in sources.iter().enumerate() {
        for format in ["edges", "dimacs", "json"] {
            let first = dir.path().join(format!("g{k}.{format}"));
            let second = dir.path().join(format!("g{k}.again.{format}"));
            tb(&[&["gen", "--format", format, "--output", p(&first)], *src].concat());
            tb(&[
                "gen",
                "--format",
                format,
                "--input",
                p(&first),
                "--output",
                p(&second),
            ]);
            let (a, b) = (
                std::fs::read(&first).unwrap(),
                std::fs::read(&second).unwrap(),
            );
            assert_eq!(a, b, "{src:?} {format}");
        }
        for kind in ParamKind::ALL {
            let cert = dir.path().join(format!("w{k}-{}.json", kind.name()));
            let o = Command::new(env!("CARGO_BIN_EXE_tb"))
                .args([&["solve", "--param", kind.name(), "--cert", p(&cert)], *src].concat())
                .output()
                .unwrap();
            if o.status.code() == Some(1) {
                continue;
            }
            assert!(o.status.success(), "{src:?} {}", kind.name());
            assert_eq!(
                tb(&["verify", "--cert", p(&cert)]).lines().next(),
                Some("OK")
            );
        }
    }
    let svg_path = dir.path().join("tbp22.svg");
    tb(&[
        "render",
        "--family",
        "tbp",
        "--rows",
        "2",
        "--cols",
        "2",
        "--set",
        "0,5",
        "--output",
        p(&svg_path),
    ]);
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    let doc = roxmltree::Document::parse(&svg).expect("well-formed SVG");
    let glyphs = doc
        .descendants()
        .filter(|n| n.has_tag_name("circle") && n.attribute("class") == Some("vertex"))
        .count();
    assert_eq!(glyphs, 20);
}

type Criterion = (&'static str, Duration, fn());

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("count formulas", Duration::from_secs(5), c1_counts),
        ("structure suite", Duration::from_secs(5), c2_structure),
        ("oracle equivalence", Duration::from_secs(600), c3_oracle),
        ("share identities", Duration::from_secs(60), c4_shares),
        (
            "domination density 1/5",
            Duration::from_secs(1800),
            c5_gamma,
        ),
        (
            "efficient domination fraction",
            Duration::from_secs(1800),
            c6_efficient,
        ),
        ("open domination 2/9", Duration::from_secs(600), c7_open),
        (
            "locating-dominating density",
            Duration::from_secs(1800),
            c8_ld,
        ),
        ("identifying code density", Duration::from_secs(1800), c9_ic),
        (
            "open-locating-dominating 7/18",
            Duration::from_secs(1800),
            c10_old,
        ),
        ("non-hamiltonicity", Duration::from_secs(60), c11_hamilton),
        ("tooling", Duration::from_secs(60), c12_tooling),
    ];
    std::panic::set_hook(Box::new(|info| eprintln!("      {info}")));
    let mut failed = 0;
    for (k, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let took = start.elapsed();
        let pass = outcome.is_ok() && took <= *budget;
        if !pass {
            failed += 1;
        }
        let note = if outcome.is_ok() && took > *budget {
            " over budget"
        } else {
            ""
        };
        println!(
            "criterion {:>2} {:<32} {} ({:.2?}, budget {:?}){note}",
            k + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            took,
            budget
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
