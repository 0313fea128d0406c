//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kschur::memo::SharedCache;
use kschur::verify::run_suite;
use kschur_core::down_operator::{down, grassmannian_cover_counts, up};
use kschur_core::kschur::{klr_coefficient, near_rectangle_expansion, rectangle_expansion};
use kschur_core::nilcoxeter::h_gen;
use kschur_core::{
    AffinePermutation, BoundedPartition, Cell, Core, DownMethod, ExpansionMethod,
    NilCoxeterElement, Rank, Word,
};
use num_bigint::BigInt;

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, Box<dyn Fn() -> Check>);

fn rank(k: usize) -> Rank {
    Rank::new(k).unwrap()
}

fn combo(k: usize, terms: &[(i64, &[usize])]) -> NilCoxeterElement {
    let mut out = NilCoxeterElement::zero(rank(k));
    for (c, w) in terms {
        out.add_term(
            AffinePermutation::from_letters(rank(k), w).unwrap(),
            BigInt::from(*c),
        );
    }
    out
}

fn ones(k: usize, words: &[&[usize]]) -> NilCoxeterElement {
    combo(k, &words.iter().map(|w| (1, *w)).collect::<Vec<_>>())
}

fn ensure(ok: bool, what: impl Into<String>) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn core(k: usize, rows: &[usize]) -> Core {
    Core::new(rank(k), rows.to_vec()).unwrap()
}

fn h2_k3() -> Check {
    let expected = ones(3, &[&[2, 1], &[1, 0], &[0, 3], &[3, 2], &[0, 2], &[1, 3]]);
    ensure(
        h_gen(rank(3), 2).map_err(|e| e.to_string())? == expected,
        "h_2 differs from the six displayed terms",
    )
}

fn core_action() -> Check {
    let c = core(3, &[5, 2, 1]);
    ensure(
        c.apply_generator(1).unwrap().rows() == [6, 3, 1, 1],
        "s_1·(5,2,1)",
    )?;
    ensure(
        c.apply_generator(0).unwrap().rows() == [4, 1, 1],
        "s_0·(5,2,1)",
    )
}

fn heisenberg_display() -> Check {
    let x = ones(2, &[&[1, 0]]);
    let du = down(&up(1, &x).unwrap(), 0, DownMethod::Root).unwrap();
    let ud = up(1, &down(&x, 0, DownMethod::Root).unwrap()).unwrap();
    ensure(
        du == combo(2, &[(1, &[0, 1]), (2, &[1, 0]), (1, &[2, 0]), (1, &[2, 1])]),
        "D U (u_1u_0)",
    )?;
    ensure(
        ud == ones(2, &[&[1, 0], &[2, 0], &[0, 1], &[2, 1]]),
        "U D (u_1u_0)",
    )?;
    ensure(&du - &ud == x, "difference is not u_1u_0")
}

fn grassmannian_down_display() -> Check {
    let expected = combo(
        3,
        &[
            (3, &[3, 0, 1, 2, 3, 0]),
            (2, &[2, 0, 1, 2, 3, 0]),
            (2, &[2, 3, 1, 2, 3, 0]),
            (1, &[2, 3, 0, 1, 3, 0]),
            (1, &[2, 3, 0, 1, 2, 0]),
            (1, &[2, 3, 0, 1, 2, 3]),
        ],
    );
    let w = AffinePermutation::from_letters(rank(3), &[2, 3, 0, 1, 2, 3, 0]).unwrap();
    for method in [DownMethod::Combinatorial, DownMethod::Root] {
        let got = down(&NilCoxeterElement::basis(w.clone()), 0, method).unwrap();
        ensure(got == expected, format!("{method:?} method"))?;
    }
    let counts = grassmannian_cover_counts(&w, 0).unwrap();
    ensure(
        counts.iter().map(|(_, c)| c).sum::<usize>() == 10,
        "cover counts",
    )?;
    let addable = core(3, &[2, 1, 1, 1]).addable_cells(0);
    ensure(
        addable == vec![Cell::new(2, 2), Cell::new(5, 1)],
        "addable 0-cells of (2,1,1,1)",
    )
}

const RECTANGLE: [&[usize]; 10] = [
    &[1, 0, 4, 2, 1, 0],
    &[3, 1, 0, 4, 2, 1],
    &[4, 3, 1, 0, 4, 2],
    &[2, 3, 1, 0, 2, 1],
    &[2, 4, 3, 1, 0, 2],
    &[0, 4, 3, 1, 0, 4],
    &[3, 2, 4, 3, 1, 2],
    &[2, 0, 4, 3, 1, 0],
    &[3, 2, 0, 4, 3, 1],
    &[4, 3, 2, 0, 4, 3],
];

const NEAR_RECTANGLE: [&[usize]; 30] = [
    &[1, 0, 4, 2, 1],
    &[4, 1, 0, 4, 2],
    &[3, 1, 0, 4, 2],
    &[2, 1, 0, 2, 1],
    &[3, 1, 0, 2, 1],
    &[2, 4, 1, 0, 2],
    &[2, 3, 1, 0, 2],
    &[4, 3, 1, 0, 2],
    &[4, 3, 1, 0, 4],
    &[0, 3, 1, 0, 4],
    &[0, 4, 1, 0, 4],
    &[2, 4, 3, 1, 2],
    &[3, 4, 3, 1, 2],
    &[3, 2, 3, 1, 2],
    &[3, 2, 4, 1, 2],
    &[0, 4, 3, 1, 0],
    &[2, 4, 3, 1, 0],
    &[2, 0, 3, 1, 0],
    &[2, 0, 4, 1, 0],
    &[2, 0, 4, 3, 1],
    &[3, 0, 4, 3, 1],
    &[3, 2, 4, 3, 1],
    &[3, 2, 0, 3, 1],
    &[3, 2, 0, 4, 1],
    &[3, 2, 0, 4, 3],
    &[4, 2, 0, 4, 3],
    &[4, 3, 0, 4, 3],
    &[4, 3, 2, 4, 3],
    &[4, 3, 2, 0, 3],
    &[4, 3, 2, 0, 4],
];

fn rectangle_display() -> Check {
    let got = rectangle_expansion(rank(4), 3, 2).map_err(|e| e.to_string())?;
    ensure(
        got == ones(4, &RECTANGLE),
        "rectangle expansion differs from the ten words",
    )
}

fn near_rectangle_display() -> Check {
    let near = near_rectangle_expansion(rank(4), 3, 2).map_err(|e| e.to_string())?;
    ensure(
        near == ones(4, &NEAR_RECTANGLE),
        "near-rectangle expansion differs from the thirty words",
    )?;
    let rect = rectangle_expansion(rank(4), 3, 2).unwrap();
    for j in [3, 0] {
        ensure(
            down(&rect, j, DownMethod::Combinatorial).unwrap() == near,
            format!("D_{{Λ_{j}}}(𝔰_(3,3))"),
        )?;
    }
    Ok(())
}

fn final_klr() -> Check {
    let r = rank(4);
    let start = core(4, &[2, 1]);
    let word = Word::new(r, vec![2, 3, 1, 0, 2]).unwrap();
    let grown = start.apply_word(&word).unwrap();
    ensure(
        grown.rows() == [4, 4, 1, 1],
        "apply_word((2,1), [2,3,1,0,2])",
    )?;
    ensure(
        grown.to_bounded().rows() == [3, 3, 1, 1],
        "bounded image of (4,4,1,1)",
    )?;
    let bp = |rows: &[usize]| BoundedPartition::new(r, rows.to_vec()).unwrap();
    let c = klr_coefficient(
        &bp(&[2, 1]),
        &bp(&[3, 2]),
        &bp(&[3, 3, 1, 1]),
        ExpansionMethod::Solve,
        &SharedCache::new(),
    )
    .map_err(|e| e.to_string())?;
    ensure(c == BigInt::from(1), format!("coefficient is {c}"))
}

fn suites(name: &str, ks: &[usize], bound: usize) -> Check {
    for &k in ks {
        let report = run_suite(name, rank(k), bound).expect("known suite");
        if !report.passed() {
            let first = &report.failures[0];
            return Err(format!(
                "k = {k}: {} failures, first {}: {}",
                report.failures.len(),
                first.identity,
                first.witness
            ));
        }
        if report.checks_run == 0 {
            return Err(format!("k = {k}: no checks ran"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let ms = Duration::from_millis;
    let s = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        (
            "h_2 at k=3 equals the six displayed terms",
            ms(1),
            Box::new(h2_k3),
        ),
        (
            "core action s_1, s_0 on (5,2,1) at k=3",
            ms(1),
            Box::new(core_action),
        ),
        (
            "Heisenberg display at u_1u_0, k=2",
            ms(1),
            Box::new(heisenberg_display),
        ),
        (
            "Grassmannian down display, both methods; addable 0-cells of (2,1,1,1)",
            ms(10),
            Box::new(grassmannian_down_display),
        ),
        (
            "rectangle (3,3) at k=4: ten words",
            ms(10),
            Box::new(rectangle_display),
        ),
        (
            "near rectangle (3,2) at k=4: thirty words, = D_{Λ_3}, D_{Λ_0} of 𝔰_(3,3)",
            ms(50),
            Box::new(near_rectangle_display),
        ),
        (
            "k-LR coefficient (2,1)·(3,2) → (3,3,1,1) = 1 at k=4",
            s(5),
            Box::new(final_klr),
        ),
        (
            "Heisenberg relation, l(w) ≤ 5, k ∈ {2,3}",
            s(30),
            Box::new(|| suites("heisenberg", &[2, 3], 5)),
        ),
        (
            "derivation and weight independence, |λ| ≤ 6, k ≤ 3",
            s(60),
            Box::new(|| suites("derivation", &[2, 3], 6)),
        ),
        (
            "root = combinatorial down operator, l(w) ≤ 6, k ≤ 3",
            s(60),
            Box::new(|| suites("methods", &[2, 3], 6)),
        ),
        (
            "coroot-sum lemma, k ∈ {2,3,4}",
            s(5),
            Box::new(|| suites("coroot-sum", &[2, 3, 4], 0)),
        ),
        (
            "closed forms = solver, multiplicity free, k ∈ {2,3}",
            s(120),
            Box::new(|| suites("expansions", &[2, 3], 7)),
        ),
        (
            "k-LR coefficient = product oracle, |λ|+|μ| ≤ 7, k ≤ 3",
            s(300),
            Box::new(|| suites("klr", &[2, 3], 7)),
        ),
        (
            "bounded/core bijection, |λ| ≤ 8, k ∈ {2,3,4}",
            s(30),
            Box::new(|| suites("cores", &[2, 3, 4], 8)),
        ),
    ];
    let mut failed = 0;
    for (index, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= *limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (took {elapsed:?}, limit {limit:?})"),
            (Err(why), _) => format!("FAIL ({why})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!(
            "{verdict:<4} {:>2}. {name} [{elapsed:.2?} / {limit:?}]",
            index + 1
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
