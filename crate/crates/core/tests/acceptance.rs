//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use crystal_rmatrix::crystal::{Crystal, Element, Tensor};
use crystal_rmatrix::insertion::{CaseName, Inserter};
use crystal_rmatrix::letters::{Affine, Alphabet, Classical, Family, Letter};
use crystal_rmatrix::oracle::{self, Check};
use crystal_rmatrix::rmatrix::{r_apply, r_engine_c, RMatrix};
use crystal_rmatrix::tableaux::Tableau;

type Outcome = Result<String, String>;

fn fam(a: Affine, n: u8) -> Family {
    Family::new(a, n).unwrap()
}

fn element(f: Family, cap: u32, row: &str) -> Element {
    let t = Tableau::parse(row, f.alphabet()).unwrap_or_else(|e| panic!("{row}: {e}"));
    Element::from_tableau(f, cap, &t).unwrap_or_else(|e| panic!("{row}: {e}"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Apply R to T(b1) ⊗ T(b2) and compare with the expected image rows.
fn golden(f: Family, l: u32, k: u32, case: [&str; 4]) -> Result<crystal_rmatrix::RResult, String> {
    let [b1, b2, c2, c1] = case;
    let t = Tensor::new(element(f, l, b1), element(f, k, b2));
    let res = r_apply(&t).map_err(|e| format!("{t}: {e}"))?;
    let want = Tensor::new(element(f, k, c2), element(f, l, c1));
    ensure(res.image == want, || format!("({b1}) x ({b2}): got {} want {want}", res.image))?;
    Ok(res)
}

fn engine_golden(n: u8, case: [&str; 4]) -> Result<(), String> {
    let a = Alphabet::new(Classical::C, n).unwrap();
    let row = |s: &str| Tableau::parse(s, a).unwrap();
    let run = r_engine_c(&row(case[0]), &row(case[1])).map_err(|e| e.to_string())?;
    ensure(run.left.render() == case[2] && run.right.render() == case[3], || {
        format!("({}) x ({}): got ({}) x ({})", case[0], case[1], run.left, run.right)
    })
}

fn criterion_1() -> Outcome {
    let f = fam(Affine::A2, 2);
    golden(f, 3, 2, ["1", "2 2", "1 1", "2 2 -1"])?;
    golden(f, 3, 2, ["1 2", "2", "1", "2 2"])?;
    let r = golden(f, 3, 2, ["1 1 2", "2 -1", "1 2", "2"])?;
    let d = &r.diag;
    ensure((d.l_prime, d.k_prime, d.m, r.energy) == (6, 4, 4, 0), || {
        format!("(l', k', m, H) = ({}, {}, {}, {})", d.l_prime, d.k_prime, d.m, r.energy)
    })?;
    ensure(d.t0.render() == "0 0 1 1 2 2 / 2 2 -0 -0", || format!("T0 = {}", d.t0))?;
    let stages: Vec<String> = d.stages.iter().map(Tableau::render).collect();
    let want = [
        "0 1 1 2 2 / 2 2 -0 -0",
        "1 1 2 2 / 2 2 -0 -0",
        "1 1 2 2 / 2 -0 -0",
        "1 1 2 2 / -0 -0",
        "1 1 2 2 / -0",
        "1 1 2 2",
    ];
    ensure(stages == want, || format!("stages {stages:?}"))?;
    let w: Vec<String> = d.bumped.iter().map(Letter::to_string).collect();
    ensure(w == ["0", "0", "2", "2", "-0", "-0"], || format!("w = {w:?}"))?;
    for case in [
        ["0 0 1 1 -0 -0", "2 2 2 2", "1 1 1 1", "2 2 2 2 -1 -1"],
        ["0 1 1 2 2 -0", "0 2 2 -0", "0 1 1 -0", "0 2 2 2 2 -0"],
        ["1 1 1 1 2 2", "2 2 -1 -1", "1 1 2 2", "0 0 2 2 -0 -0"],
    ] {
        engine_golden(2, case)?;
    }
    Ok("3 mappings, (l',k',m)=(6,4,4), H=0, transcript".into())
}

fn criterion_2() -> Outcome {
    let f = fam(Affine::D2, 2);
    golden(f, 3, 2, ["1", "2 o", "1 1", "2 o -1"])?;
    golden(f, 3, 2, ["1 o", "2", "1", "2 o"])?;
    golden(f, 3, 2, ["1 1 o", "2 -1", "1 o", "2"])?;
    let embedded = [
        ["0 0 1 1 -0 -0", "2 2 2 -2", "1 1 1 1", "2 2 2 -2 -1 -1"],
        ["0 1 1 2 -2 -0", "0 2 2 -0", "0 1 1 -0", "0 2 2 2 -2 -0"],
        ["1 1 1 1 2 -2", "2 2 -1 -1", "1 1 2 -2", "0 0 2 2 -0 -0"],
    ];
    for case in embedded {
        engine_golden(2, case)?;
    }
    let first = Tensor::new(element(f, 3, "1"), element(f, 2, "2 o"));
    let padded: Vec<String> = [&first.left, &first.right].iter().map(|b| b.omega_tableau().unwrap().render()).collect();
    ensure(padded == ["0 0 1 1 -0 -0", "2 2 2 -2"], || format!("doubled rows {padded:?}"))?;
    let run = r_apply(&first).map_err(|e| e.to_string())?;
    ensure(run.diag.t0.render() == "0 0 1 1 -0 -0 / 2 2 2 -2", || format!("T0 = {}", run.diag.t0))?;
    Ok("3 mappings and 3 embedded transcripts".into())
}

fn criterion_3() -> Outcome {
    let f = fam(Affine::B1, 5);
    let cases = [
        (["5 5 o -5 -5", "5 o -5", "5 o -5", "5 5 o -5 -5"], 3),
        (["5 5 -5 -5 -5", "4 4 o", "o -5 -5", "4 4 5 5 -5"], 5),
        (["1 1 o -5 -5", "o -1 -1", "1 1 o", "o -5 -5 -1 -1"], 1),
    ];
    let mut first = None;
    for (case, h) in cases {
        let r = golden(f, 5, 3, case)?;
        ensure(r.energy == h, || format!("({}) x ({}): H={} want {h}", case[0], case[1], r.energy))?;
        first.get_or_insert(r);
    }
    let d = first.unwrap().diag;
    ensure(d.t0.render() == "4 5 o -5 -5 / 5 o -4", || format!("T0 = {}", d.t0))?;
    let stages: Vec<String> = d.stages.iter().map(Tableau::render).collect();
    let want = ["4 o -5 -5 / 5 o -4", "4 o -5 / o -5 -4", "4 o -5 / -5 -4", "5 o -5 / -5", "5 o -5"];
    ensure(stages == want, || format!("stages {stages:?}"))?;
    let w: Vec<String> = d.bumped.iter().map(Letter::to_string).collect();
    ensure(w == ["5", "5", "o", "-5", "-5"], || format!("w = {w:?}"))?;
    Ok("3 mappings with H = 3, 5, 1; T0..T5 and w match".into())
}

fn criterion_4() -> Outcome {
    let f = fam(Affine::D1, 5);
    golden(f, 2, 1, ["4 -4", "5", "-5", "5 5"])?;
    golden(f, 2, 1, ["-5 -5", "5", "-5", "4 -4"])?;
    Ok("2 mappings".into())
}

fn summarize(checks: &[Check]) -> Outcome {
    let failed: Vec<String> = checks.iter().filter(|c| !c.pass).map(Check::to_string).collect();
    let total: usize = checks.iter().map(|c| c.checked).sum();
    if failed.is_empty() {
        Ok(format!("{total} checks"))
    } else {
        Err(failed.join("; "))
    }
}

fn oracle_grid(families: &[Affine], ranks: &[u8], max: u32) -> Outcome {
    let mut checks = Vec::new();
    for &a in families {
        for &n in ranks {
            for l in 1..=max {
                for k in 1..=max {
                    let report = oracle::verify(fam(a, n), l, k);
                    for id in ["oracle.build", "rmatrix.matches_oracle", "oracle.energy_classical_invariance"] {
                        let c = report.check(id).cloned().unwrap_or_else(|| {
                            let mut c = Check::new(id);
                            c.fail("missing".into());
                            c
                        });
                        let mut c = c;
                        c.id = format!("{a}.n{n}.l{l}.k{k}.{}", c.id);
                        checks.push(c);
                    }
                }
            }
        }
    }
    summarize(&checks)
}

fn criterion_5() -> Outcome {
    oracle_grid(&[Affine::A2], &[2, 3], 3)
}

fn criterion_6() -> Outcome {
    oracle_grid(&[Affine::D2], &[2], 2)
}

fn criterion_7() -> Outcome {
    oracle_grid(&[Affine::B1, Affine::D1], &[2, 3], 3)
}

fn criterion_8() -> Outcome {
    let mut checks = Vec::new();
    for kind in [Classical::B, Classical::C, Classical::D] {
        for n in 2..=3 {
            checks.push(oracle::insertion_round_trip(kind, n).map_err(|e| e.to_string())?);
        }
    }
    summarize(&checks)
}

fn criterion_9() -> Outcome {
    let mut checks = Vec::new();
    for a in [Affine::B1, Affine::D1] {
        for n in 2..=3 {
            for l in 1..=3 {
                for k in 1..=3 {
                    checks.push(oracle::route_properties(fam(a, n), l, k));
                }
            }
        }
    }
    summarize(&checks)
}

fn criterion_10() -> Outcome {
    let mut checks = Vec::new();
    for a in [Affine::B1, Affine::D1] {
        for n in 2..=3 {
            for l in 1..=3 {
                for k in 1..=3 {
                    let report = oracle::properties(&RMatrix::new(), fam(a, n), l, k);
                    checks.extend(report.checks.into_iter().filter(|c| {
                        ["rmatrix.total", "rmatrix.two_rows", "rmatrix.product_semistandard"].contains(&c.id.as_str())
                    }));
                }
            }
        }
    }
    summarize(&checks)
}

fn criterion_11() -> Outcome {
    let mut checks = Vec::new();
    for a in [Affine::A2, Affine::D2] {
        checks.push(oracle::omega_commutation(fam(a, 2), 3).map_err(|e| e.to_string())?);
    }
    summarize(&checks)
}

struct MorphismExample {
    kind: Classical,
    n: u8,
    column: [&'static str; 2],
    letter: &'static str,
    /// (operator index, raise) applied repeatedly.
    op: (u8, bool),
    /// Tensor factors after each step, as (column, letter).
    steps: &'static [([&'static str; 2], &'static str)],
    /// Product tableaux, one per diagram column.
    products: &'static [&'static str],
    cases: &'static [u8],
}

fn morphism_example(ex: &MorphismExample) -> Result<(), String> {
    let a = Alphabet::new(ex.kind, ex.n).unwrap();
    let ins = Inserter::new(a);
    let letter = |s: &str| s.parse::<Letter>().unwrap();
    let pair = |col: [&str; 2], x: &str| {
        Tensor::new(
            Tableau::from_columns(a, &[vec![letter(col[0]), letter(col[1])]]).unwrap(),
            Tableau::one_row(a, vec![letter(x)]).unwrap(),
        )
    };
    let mut cur = pair(ex.column, ex.letter);
    for (j, &want) in ex.products.iter().enumerate() {
        let (prod, route) = ins.insert(&cur.left, cur.right.row1()[0]).map_err(|e| e.to_string())?;
        ensure(prod.render() == want, || format!("psi step {j}: {} want {want}", prod.render()))?;
        let case = route.steps[0].case.name;
        ensure(case == CaseName::B(ex.cases[j]), || format!("psi step {j}: case {case}, want B{}", ex.cases[j]))?;
        let Some(&(col, x)) = ex.steps.get(j) else { break };
        let (i, raise) = ex.op;
        let next = if raise { cur.e(i) } else { cur.f(i) }.map_err(|e| e.to_string())?;
        let want_next = pair(col, x);
        ensure(next.as_ref() == Some(&want_next), || format!("tensor step {j}: {next:?}"))?;
        let moved = if raise { prod.e(i) } else { prod.f(i) }.map_err(|e| e.to_string())?;
        let expected = ins.product(&want_next.left, &want_next.right).map_err(|e| e.to_string())?;
        ensure(moved.as_ref() == Some(&expected), || format!("square {j} does not commute"))?;
        cur = want_next;
    }
    Ok(())
}

fn criterion_12() -> Outcome {
    let examples = [
        MorphismExample {
            kind: Classical::C,
            n: 2,
            column: ["2", "-2"],
            letter: "2",
            op: (1, true),
            steps: &[(["1", "-2"], "2")],
            products: &["1 -1 / 2", "1 -2 / 2"],
            cases: &[3, 1],
        },
        MorphismExample {
            kind: Classical::C,
            n: 2,
            column: ["2", "-1"],
            letter: "1",
            op: (1, false),
            steps: &[(["2", "-1"], "2")],
            products: &["2 2 / -2", "2 2 / -1"],
            cases: &[4, 2],
        },
        MorphismExample {
            kind: Classical::B,
            n: 3,
            column: ["o", "-3"],
            letter: "o",
            op: (3, true),
            steps: &[(["o", "-3"], "3"), (["o", "o"], "3"), (["3", "o"], "3")],
            products: &["o -3 / o", "3 -3 / o", "3 o / o", "3 3 / o"],
            cases: &[3, 7, 4, 2],
        },
        MorphismExample {
            kind: Classical::D,
            n: 4,
            column: ["-4", "4"],
            letter: "3",
            op: (4, false),
            steps: &[(["-4", "-3"], "3"), (["-4", "-3"], "-4")],
            products: &["3 -4 / 4", "-4 -4 / 4", "-4 -4 / -3"],
            cases: &[5, 7, 2],
        },
        MorphismExample {
            kind: Classical::D,
            n: 4,
            column: ["-4", "-3"],
            letter: "4",
            op: (4, true),
            steps: &[(["-4", "4"], "4"), (["3", "4"], "4")],
            products: &["-4 -3 / 4", "3 -3 / 4", "3 4 / 4"],
            cases: &[6, 8, 1],
        },
    ];
    for (j, ex) in examples.iter().enumerate() {
        morphism_example(ex).map_err(|e| format!("example {}: {e}", j + 1))?;
    }
    let mut checks = Vec::new();
    for kind in [Classical::B, Classical::C, Classical::D] {
        for n in 2..=3 {
            checks.push(oracle::morphism_squares(kind, n, 2, 2).map_err(|e| e.to_string())?);
        }
    }
    summarize(&checks).map(|s| format!("5 examples, {s}"))
}

fn criterion_13() -> Outcome {
    let ids = [
        "rmatrix.total",
        "rmatrix.bijective",
        "rmatrix.inverse",
        "rmatrix.weight",
        "rmatrix.bump_letters_row",
        "rmatrix.energy_classical_invariance",
    ];
    let mut checks = Vec::new();
    for a in Affine::ALL {
        for n in 2..=3 {
            for l in 1..=3 {
                for k in 1..=3 {
                    let report = oracle::properties(&RMatrix::new(), fam(a, n), l, k);
                    for c in report.checks.into_iter().filter(|c| ids.contains(&c.id.as_str())) {
                        let mut c = c;
                        c.id = format!("{a}.n{n}.l{l}.k{k}.{}", c.id);
                        checks.push(c);
                    }
                }
            }
        }
    }
    summarize(&checks)
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("golden_twisted_a", criterion_1, Duration::from_secs(1)),
        ("golden_twisted_d", criterion_2, Duration::from_secs(1)),
        ("golden_b", criterion_3, Duration::from_secs(1)),
        ("golden_d", criterion_4, Duration::from_secs(1)),
        ("oracle_twisted_a", criterion_5, Duration::from_secs(60)),
        ("oracle_twisted_d", criterion_6, Duration::from_secs(60)),
        ("oracle_b_d", criterion_7, Duration::from_secs(120)),
        ("insertion_round_trip", criterion_8, Duration::from_secs(10)),
        ("bumping_routes", criterion_9, Duration::from_secs(30)),
        ("two_row_bound", criterion_10, Duration::from_secs(60)),
        ("omega_commutation", criterion_11, Duration::from_secs(60)),
        ("morphism", criterion_12, Duration::from_secs(60)),
        ("structural", criterion_13, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (j, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = outcome.and_then(|s| {
            if took <= *budget {
                Ok(s)
            } else {
                Err(format!("{s}, but took {took:.2?} (budget {budget:?})"))
            }
        });
        match outcome {
            Ok(s) => println!("PASS {} {name} ({took:.2?}) {s}", j + 1),
            Err(s) => {
                failed += 1;
                println!("FAIL {} {name} ({took:.2?}) {s}", j + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
