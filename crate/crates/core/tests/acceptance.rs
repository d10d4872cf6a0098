//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; the process fails if any criterion does.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use common::{acyclic, connected, connected_text, has_shortcut, transitive, Kind};
use wordrep::enumeration::{count_3st_not_st, enumerate_stream, minimal_graphs, EnumerateOptions, EnumerationSummary};
use wordrep::generators::{complete, crown, crown_apex, j4, petersen, prism, wheel};
use wordrep::semitrans::{
    find_shortcut, is_k_shortcut_free, is_semi_transitive_orientation, is_transitive_orientation, search_orientation,
    Constraint, ShortcutLength,
};
use wordrep::uniform::representation_number;
use wordrep::{
    are_isomorphic, find_k_shortcut_free_orientation, graph_of_word, is_k_uniform, is_word_representable,
    verify_representation, ClassifyOptions, Graph, RepNumber, Word,
};

/// Every count below must match exactly.
const COUNT_TOLERANCE: u64 = 0;
const CRITERION1_BUDGET: Duration = Duration::from_secs(5 * 60);
const CRITERION3_BUDGET: Duration = Duration::from_secs(10 * 60);
const RANDOM_CASES: u32 = 1000;

fn jobs() -> usize {
    wordrep::exec::resolve_jobs(None)
}

#[allow(clippy::absurd_extreme_comparisons)]
fn close(got: u64, want: u64) -> bool {
    got.abs_diff(want) <= COUNT_TOLERANCE
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Lazily computed inputs shared by several criteria.
#[derive(Default)]
struct Fixtures {
    graphs: BTreeMap<usize, Vec<Graph>>,
    nwr: BTreeMap<usize, Vec<usize>>,
}

impl Fixtures {
    fn graphs(&mut self, n: usize) -> &[Graph] {
        self.graphs.entry(n).or_insert_with(|| connected(n))
    }

    /// Indices of the non-representable graphs on `n` vertices.
    fn nwr(&mut self, n: usize) -> Vec<usize> {
        if let Some(v) = self.nwr.get(&n) {
            return v.clone();
        }
        let out = enumerate_stream(&connected_text(n), &EnumerateOptions::default()).unwrap();
        self.nwr.insert(n, out.nwr.clone());
        out.nwr
    }

    fn nwr_graphs(&mut self, n: usize) -> Vec<Graph> {
        let idx = self.nwr(n);
        let all = self.graphs(n);
        idx.iter().map(|&i| all[i].clone()).collect()
    }
}

fn table2_rows(ns: &[usize]) -> Result<(EnumerationSummary, Duration), String> {
    let start = Instant::now();
    let mut summary = EnumerationSummary::default();
    for &n in ns {
        let out = enumerate_stream(&connected_text(n), &EnumerateOptions::default()).map_err(|e| e.to_string())?;
        summary.merge(&out.summary);
    }
    Ok((summary, start.elapsed()))
}

fn criterion1(_: &mut Fixtures) -> Result<String, String> {
    let (summary, took) = table2_rows(&[6, 7, 8])?;
    let want = [(6, 112, 1, "0.89"), (7, 853, 25, "2.93"), (8, 11_117, 929, "8.36")];
    let mut parts = Vec::new();
    for (n, total, nwr, pct) in want {
        let s = &summary.sizes[&n];
        let got_pct = format!("{:.2}", s.nwr_percent());
        ensure(close(s.total, total) && close(s.nwr, nwr) && got_pct == pct, || {
            format!("n={n}: {}/{} ({got_pct}%), expected {nwr}/{total} ({pct}%)", s.nwr, s.total)
        })?;
        parts.push(format!("n={n} {}/{} {got_pct}%", s.nwr, s.total));
    }
    ensure(took <= CRITERION1_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{} in {:.1}s", parts.join(", "), took.as_secs_f64()))
}

fn criterion2(fx: &mut Fixtures) -> Result<String, String> {
    let start = Instant::now();
    let total = fx.graphs(9).len() as u64;
    let nwr = fx.nwr(9).len() as u64;
    ensure(close(total, 261_080) && close(nwr, 54_957), || format!("{nwr}/{total}, expected 54957/261080"))?;
    Ok(format!("n=9 {nwr}/{total} in {:.1}s", start.elapsed().as_secs_f64()))
}

fn criterion3(_: &mut Fixtures) -> Result<String, String> {
    let start = Instant::now();
    let want: [(usize, &[u64], u64); 6] = [
        (3, &[1, 1], 0),
        (4, &[1, 5], 0),
        (5, &[1, 20], 0),
        (6, &[1, 109, 1], 1),
        (7, &[1, 788, 39], 25),
        (8, &[1, 8335, 1852], 929),
    ];
    let opts =
        EnumerateOptions { classify: ClassifyOptions { rep_number: true, ..Default::default() }, ..Default::default() };
    let mut parts = Vec::new();
    for (n, hist, inf) in want {
        let out = enumerate_stream(&connected_text(n), &opts).map_err(|e| e.to_string())?;
        let s = &out.summary.sizes[&n];
        let mut got = s.histogram.clone().unwrap_or_default();
        while got.last() == Some(&0) {
            got.pop();
        }
        let matches = got.len() == hist.len() && got.iter().zip(hist).all(|(&a, &b)| close(a, b)) && close(s.nwr, inf);
        ensure(matches, || format!("n={n}: {got:?} inf:{}, expected {hist:?} inf:{inf}", s.nwr))?;
        let sum: u64 = s.rep_histogram().unwrap().values().sum();
        ensure(sum == s.total, || format!("n={n}: histogram sums to {sum}, total {}", s.total))?;
        parts.push(format!("n={n} {got:?}+inf:{}", s.nwr));
    }
    let took = start.elapsed();
    ensure(took <= CRITERION3_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{} in {:.1}s", parts.join(" "), took.as_secs_f64()))
}

fn criterion4(fx: &mut Fixtures) -> Result<String, String> {
    let want = [(6, 1, 0), (7, 10, 15), (8, 47, 882), (9, 179, 54_778)];
    let mut parts = Vec::new();
    for (n, minimal, non_minimal) in want {
        let bad = fx.nwr_graphs(n);
        let prev = fx.nwr_graphs(n - 1);
        let report = minimal_graphs(&bad, &prev, jobs());
        let (m, nm) = (report.minimal.len() as u64, report.non_minimal_count as u64);
        ensure(close(m, minimal) && close(nm, non_minimal), || {
            format!("n={n}: {m} minimal / {nm} non-minimal, expected {minimal} / {non_minimal}")
        })?;
        // every vertex deletion of a minimal graph is representable
        for &i in &report.minimal {
            let g = &bad[i];
            for v in 0..n {
                ensure(is_word_representable(&g.delete_vertex(v).unwrap()), || {
                    format!("n={n}: minimal graph {i} has a non-representable deletion")
                })?;
            }
        }
        parts.push(format!("n={n} {m}/{nm}"));
    }
    Ok(parts.join(", "))
}

fn checked_rep(g: &Graph) -> Result<RepNumber, String> {
    let r = representation_number(g, None).map_err(|e| e.to_string())?;
    if let (RepNumber::Finite(k), Some(w)) = (r.number, &r.witness) {
        ensure(is_k_uniform(w, k) && verify_representation(w, g).unwrap_or(false), || {
            format!("witness {w} does not {k}-represent the graph")
        })?;
    }
    Ok(r.number)
}

fn criterion5(fx: &mut Fixtures) -> Result<String, String> {
    let start = Instant::now();
    for n in 1..=8 {
        ensure(checked_rep(&complete(n))? == RepNumber::Finite(1), || format!("R(K_{n}) != 1"))?;
    }
    let named: [(&str, Graph, RepNumber); 6] = [
        ("prism(3)", prism(3), RepNumber::Finite(3)),
        ("petersen", petersen(), RepNumber::Finite(3)),
        ("crown(5)", crown(5), RepNumber::Finite(3)),
        ("G_4", crown_apex(4), RepNumber::Finite(4)),
        ("J_4", j4(), RepNumber::Finite(4)),
        ("wheel(5)", wheel(5), RepNumber::Infinite),
    ];
    for (name, g, want) in named {
        let got = checked_rep(&g)?;
        ensure(got == want, || format!("R({name}) = {got}, expected {want}"))?;
    }
    let three: Vec<&Graph> = fx
        .graphs(6)
        .iter()
        .filter(|g| matches!(representation_number(g, None), Ok(r) if r.number == RepNumber::Finite(3)))
        .collect();
    ensure(three.len() == 1 && are_isomorphic(three[0], &prism(3)), || {
        format!("{} graphs on 6 vertices need 3 copies", three.len())
    })?;
    Ok(format!(
        "K_1..K_8=1, prism(3)=3 (unique on 6 vertices), petersen=3, crown(5)=3, G_4=4, J_4=4, wheel(5)=infinity in {:.1}s",
        start.elapsed().as_secs_f64()
    ))
}

fn criterion6(fx: &mut Fixtures) -> Result<String, String> {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=8 {
        for (i, g) in fx.graphs(n).iter().enumerate() {
            let st = is_word_representable(g);
            let k3 = find_k_shortcut_free_orientation(g, 3).unwrap().is_some();
            ensure(st == k3, || format!("n={n} graph {i}: representable={st}, 3-shortcut-free={k3}"))?;
            checked += 1;
        }
    }
    let g9 = fx.graphs(9).to_vec();
    let separating = count_3st_not_st(&g9, jobs());
    ensure(close(separating.len() as u64, 4), || {
        format!("{} graphs are 3-ST but not ST on 9 vertices", separating.len())
    })?;
    for &i in &separating {
        let o = find_k_shortcut_free_orientation(&g9[i], 3).unwrap().unwrap();
        ensure(is_k_shortcut_free(&o, 3).unwrap() && !is_word_representable(&g9[i]), || {
            format!("separating graph {i} fails recheck")
        })?;
    }
    // every non-3-ST graph is non-representable, so the rest of the list is the non-3-ST list
    let non3_9: Vec<Graph> = fx.nwr(9).into_iter().filter(|i| !separating.contains(i)).map(|i| g9[i].clone()).collect();
    let non3_8 = fx.nwr_graphs(8);
    let report = minimal_graphs(&non3_9, &non3_8, jobs());
    let (m, nm) = (report.minimal.len() as u64, report.non_minimal_count as u64);
    ensure(close(non3_9.len() as u64, 54_953) && close(m, 175) && close(nm, 54_778), || {
        format!("n=9 non-3-ST {} with {m} minimal / {nm} non-minimal, expected 54953 with 175 / 54778", non3_9.len())
    })?;
    Ok(format!(
        "{checked} graphs on <=8 vertices agree; n=9: 4 separating, non-3-ST 54953, minimal 175, in {:.1}s",
        start.elapsed().as_secs_f64()
    ))
}

fn criterion7(fx: &mut Fixtures) -> Result<String, String> {
    let start = Instant::now();
    let mut graphs = 0;
    let mut orientations = 0u64;
    for n in 1..=6 {
        for (i, g) in fx.graphs(n).to_vec().iter().enumerate() {
            let mut exists = [false; 3];
            for o in common::all_orientations(g) {
                if !acyclic(&o) {
                    ensure(find_shortcut(&o, ShortcutLength::Any).is_err(), || "cyclic orientation accepted".into())?;
                    continue;
                }
                orientations += 1;
                let any = has_shortcut(&o, None);
                let three = has_shortcut(&o, Some(3));
                let four = has_shortcut(&o, Some(4));
                let lib_any = find_shortcut(&o, ShortcutLength::Any).unwrap();
                ensure(lib_any.is_some() == any, || format!("n={n} graph {i}: shortcut check disagrees on {o}"))?;
                if let Some(w) = lib_any {
                    ensure(w.is_valid_for(&o), || format!("invalid witness on {o}"))?;
                }
                ensure(find_shortcut(&o, ShortcutLength::Exactly(3)).unwrap().is_some() == three, || {
                    format!("n={n} graph {i}: 3-shortcut check disagrees on {o}")
                })?;
                ensure(find_shortcut(&o, ShortcutLength::Exactly(4)).unwrap().is_some() == four, || {
                    format!("n={n} graph {i}: 4-shortcut check disagrees on {o}")
                })?;
                ensure(is_transitive_orientation(&o) == transitive(&o), || format!("transitivity disagrees on {o}"))?;
                exists[0] |= !any;
                exists[1] |= !three;
                exists[2] |= transitive(&o);
            }
            for (kind, constraint, oracle) in [
                (Kind::SemiTransitive, Constraint::SemiTransitive, exists[0]),
                (Kind::ThreeShortcutFree, Constraint::ShortcutFree(3), exists[1]),
                (Kind::Transitive, Constraint::Transitive, exists[2]),
            ] {
                let found = search_orientation(g, constraint).0;
                ensure(found.is_some() == oracle, || {
                    format!("n={n} graph {i}: {kind:?} search says {}", found.is_some())
                })?;
                if let Some(o) = found {
                    let ok = acyclic(&o)
                        && match kind {
                            Kind::SemiTransitive => !has_shortcut(&o, None) && is_semi_transitive_orientation(&o),
                            Kind::ThreeShortcutFree => !has_shortcut(&o, Some(3)),
                            Kind::Transitive => transitive(&o),
                        };
                    ensure(ok, || format!("n={n} graph {i}: {kind:?} witness {o} rejected by oracle"))?;
                }
            }
            graphs += 1;
        }
    }
    Ok(format!(
        "{graphs} connected graphs, {orientations} acyclic orientations checked in {:.1}s",
        start.elapsed().as_secs_f64()
    ))
}

fn word_strategy() -> impl Strategy<Value = Word> {
    (2usize..=9).prop_flat_map(|n| {
        let base: Vec<usize> = (0..n).collect();
        (Just(n), Just(base).prop_shuffle(), prop::collection::vec(0..n, 0..30)).prop_flat_map(|(n, perm, extra)| {
            let mut letters = perm;
            letters.extend(extra);
            Just(letters).prop_shuffle().prop_map(move |l| Word::new(l, n).unwrap())
        })
    })
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: RANDOM_CASES, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn criterion8(_: &mut Fixtures) -> Result<String, String> {
    run_property("reversal", word_strategy(), |w| {
        prop_assert_eq!(graph_of_word(&w).unwrap(), graph_of_word(&w.reversed()).unwrap());
        Ok(())
    })?;
    run_property("erasure", (word_strategy(), any::<prop::sample::Index>()), |(w, idx)| {
        let v = idx.index(w.n());
        let g = graph_of_word(&w).unwrap();
        prop_assert_eq!(graph_of_word(&w.erase(v).unwrap()).unwrap(), g.delete_vertex(v).unwrap());
        Ok(())
    })?;
    let relabel = word_strategy().prop_flat_map(|w| {
        let perm: Vec<usize> = (0..w.n()).collect();
        (Just(w), Just(perm).prop_shuffle())
    });
    run_property("relabeling", relabel, |(w, p)| {
        prop_assert_eq!(graph_of_word(&w.relabeled(&p)).unwrap(), graph_of_word(&w).unwrap().relabel(&p));
        Ok(())
    })?;
    let perms = (1usize..=16).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle());
    run_property("canonical words", perms, |p| {
        let n = p.len();
        let w = Word::new(p.clone(), n).unwrap();
        let kn = graph_of_word(&w).unwrap();
        prop_assert_eq!(&kn, &complete(n));
        let en = graph_of_word(&w.concat(&w.reversed())).unwrap();
        prop_assert_eq!(en.edge_count(), 0);
        Ok(())
    })?;
    Ok(format!("reversal, erasure, relabeling, K_n/E_n words: {RANDOM_CASES} random cases each"))
}

fn criterion9(_: &mut Fixtures) -> Result<String, String> {
    let input: String = [6, 7, 8].iter().map(|&n| connected_text(n)).collect();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let opts = |tag: &str, jobs: usize, max: Option<usize>| EnumerateOptions {
        chunk_size: 500,
        jobs: Some(jobs),
        records: Some(dir.path().join(format!("{tag}.jsonl"))),
        checkpoint: Some(dir.path().join(format!("{tag}.ckpt"))),
        max_chunks: max,
        ..Default::default()
    };
    let read = |tag: &str| std::fs::read(dir.path().join(format!("{tag}.jsonl"))).unwrap();

    let whole = enumerate_stream(&input, &opts("whole", 1, None)).map_err(|e| e.to_string())?;
    let (reference, _) = table2_rows(&[6, 7, 8])?;
    ensure(whole.summary == reference, || "uninterrupted run differs from criterion 1".into())?;

    let mut resumes = 0;
    for (tag, stops) in [("a", vec![1, 1, 1]), ("b", vec![5, 9]), ("c", vec![24]), ("d", vec![2, 20])] {
        for &m in &stops {
            let part = enumerate_stream(&input, &opts(tag, 1, Some(m))).map_err(|e| e.to_string())?;
            ensure(part.chunks_done < part.chunks_total, || format!("resume {tag}: finished early"))?;
            // a torn write after the last commit, as a kill would leave
            use std::io::Write;
            let mut f = std::fs::OpenOptions::new().append(true).open(dir.path().join(format!("{tag}.jsonl"))).unwrap();
            f.write_all(b"{\"g6\":\"torn").unwrap();
        }
        let done = enumerate_stream(&input, &opts(tag, 1, None)).map_err(|e| e.to_string())?;
        ensure(done.is_complete() && done.summary == whole.summary, || format!("resume {tag}: summary differs"))?;
        ensure(read(tag) == read("whole"), || format!("resume {tag}: records differ"))?;
        resumes += stops.len();
    }

    let many = jobs().max(4);
    let par = enumerate_stream(&input, &opts("par", many, None)).map_err(|e| e.to_string())?;
    ensure(par.summary == whole.summary && read("par") == read("whole"), || {
        format!("{many} workers differ from 1 worker")
    })?;
    Ok(format!(
        "{} chunks, {resumes} interruptions across 4 resumed runs identical; 1 vs {many} workers identical",
        whole.chunks_total
    ))
}

type Criterion = fn(&mut Fixtures) -> Result<String, String>;

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("1 non-representable counts n=6..8", criterion1),
        ("2 non-representable count n=9", criterion2),
        ("3 representation-number histograms n=3..8", criterion3),
        ("4 minimal non-representable counts n=6..9", criterion4),
        ("5 named-graph representation numbers", criterion5),
        ("6 3-semi-transitive separation", criterion6),
        ("7 orientation search vs exhaustive oracle", criterion7),
        ("8 alternation invariants", criterion8),
        ("9 pipeline resume and worker independence", criterion9),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut fx = Fixtures::default();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.starts_with(f.as_str())) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut fx)))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
