//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Every comparison is exact; there are no floating point
//! tolerances anywhere in the run.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode, Output};
use std::time::Instant;

use twistdesc_core::{
    enumerate_increasing_trees, enumerate_set_compositions, enumerate_trees, inc, IncreasingTree, PlanarTree, Report,
    SetComposition, Suite,
};

/// Numeric tolerance for every criterion: results are exact integers or
/// exact rationals and must compare equal.
const TOLERANCE: &str = "exact";

/// Upper bound on the wall time of the degree 6 bijection sweep.
const BIJECTION_SECONDS: u64 = 60;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn suite(s: Suite, n: usize) -> Result<Report, String> {
    let report = s.run(n).map_err(|e| e.to_string())?;
    match report.first_failure() {
        None => Ok(report),
        Some(c) => Err(format!(
            "{s} at n = {n}: `{}` failed on {}",
            c.name,
            c.counterexample.as_deref().unwrap_or("?")
        )),
    }
}

fn cases(r: &Report) -> usize {
    r.checks.iter().map(|c| c.cases).sum()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn comp(s: &str) -> SetComposition {
    s.parse().expect("literal")
}

fn bijection() -> Verdict {
    let start = Instant::now();
    let r = suite(Suite::Bijection, 6)?;
    let secs = start.elapsed().as_secs();
    if secs >= BIJECTION_SECONDS {
        return Err(format!("sweep took {secs}s"));
    }
    expect("size of Comp_6", enumerate_set_compositions(6).len(), 4683)?;
    expect(
        "tau(26,34,1,5)",
        IncreasingTree::tau(&comp("2,6|3,4|1|5")).to_string(),
        "((*((**)**))(**))@4,3,2,1,1".to_string(),
    )?;
    let sigmas: Vec<String> = ["((**)(***)*)@3,1,2", "((**)(***)*)@2,1,1", "((**)(***)*)@3,2,1"]
        .iter()
        .map(|t| Ok::<_, twistdesc_core::Error>(t.parse::<IncreasingTree>()?.sigma()?.to_string()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    expect(
        "sigma outputs",
        sigmas,
        vec!["1|3,4|2,5".into(), "1,3,4|2,5".into(), "3,4|1|2,5".into()],
    )?;
    Ok(format!("{} cases, n <= 6, {secs}s", cases(&r)))
}

/// Surjections `[n] → [k]` counted by brute force over all `k^n` maps.
fn surjections(n: usize) -> usize {
    if n == 0 {
        return 1;
    }
    (1..=n)
        .map(|k| {
            (0..k.pow(n as u32))
                .filter(|&code| {
                    let mut hit = vec![false; k];
                    let mut c = code;
                    for _ in 0..n {
                        hit[c % k] = true;
                        c /= k;
                    }
                    hit.iter().all(|&h| h)
                })
                .count()
        })
        .sum()
}

/// Planar trees as strings, grown from smaller trees: a root with `m`
/// children over every way to distribute the remaining branchings.
fn brute_trees(n: usize) -> Vec<BTreeSet<String>> {
    let mut by: Vec<BTreeSet<String>> = vec![BTreeSet::from(["*".to_string()])];
    for total in 1..=n {
        let mut out = BTreeSet::new();
        for arity in 2..=total + 1 {
            // forests of `arity` trees with `total - (arity - 1)` branchings
            let mut forests: Vec<(usize, String)> = vec![(0, String::new())];
            for _ in 0..arity {
                let mut next = Vec::new();
                for (used, s) in &forests {
                    for (b, trees) in by.iter().enumerate() {
                        if used + b <= total + 1 - arity {
                            for t in trees {
                                next.push((used + b, format!("{s}{t}")));
                            }
                        }
                    }
                }
                forests = next;
            }
            for (used, s) in forests {
                if used == total + 1 - arity {
                    out.insert(format!("({s})"));
                }
            }
        }
        by.push(out);
    }
    by
}

fn counts() -> Verdict {
    let r = suite(Suite::Counts, 6)?;
    let comps: Vec<usize> = (0..=6).map(|n| enumerate_set_compositions(n).len()).collect();
    let oracle: Vec<usize> = (0..=6).map(surjections).collect();
    expect("set compositions vs surjections", &comps, &oracle)?;
    expect("set compositions", comps, vec![1, 1, 3, 13, 75, 541, 4683])?;

    let brute = brute_trees(4);
    let listed: Vec<BTreeSet<String>> = (0..=4)
        .map(|n| enumerate_trees(n).iter().map(PlanarTree::to_string).collect())
        .collect();
    expect("planar trees vs grown trees", &listed, &brute)?;
    let trees: Vec<usize> = listed.iter().map(BTreeSet::len).collect();
    expect("planar trees", trees.clone(), vec![1, 1, 3, 11, 45])?;
    let binary: Vec<usize> = brute
        .iter()
        .map(|ts| {
            ts.iter()
                .filter(|t| t.parse::<PlanarTree>().is_ok_and(|t| t.is_binary()))
                .count()
        })
        .collect();
    expect("binary trees", binary, vec![1, 1, 2, 5, 14])?;
    let left: Vec<usize> = (0..=4)
        .map(|n| {
            enumerate_increasing_trees(n)
                .into_iter()
                .filter(IncreasingTree::is_left_increasing)
                .count()
        })
        .collect();
    expect("left increasing trees", left, trees)?;
    Ok(format!("{} cases, n <= 6", cases(&r)))
}

fn hopf() -> Verdict {
    let r = suite(Suite::Hopf, 4)?;
    let witness = r
        .checks
        .iter()
        .find(|c| c.name.contains("delta-bar witness"))
        .ok_or("no delta-bar witness check")?;
    Ok(format!(
        "{} cases, degree <= 4, cocommutativity to 5, {}",
        cases(&r),
        witness.name
    ))
}

fn twisted() -> Verdict {
    let r = suite(Suite::Twisted, 5)?;
    Ok(format!("{} cases, supports within [5]", cases(&r)))
}

fn freeness() -> Verdict {
    let r = suite(Suite::Freeness, 6)?;
    let series = r
        .checks
        .iter()
        .find_map(|c| c.detail.clone().filter(|d| d.starts_with("r = ")))
        .ok_or("no reduced counts reported")?;
    if !series.starts_with("r = 1,2,8,48,") {
        return Err(format!("reduced counts {series}"));
    }
    Ok(format!("{} cases, {series}", cases(&r)))
}

fn generators() -> Verdict {
    let r = suite(Suite::Generators, 4)?;
    let detail = r
        .checks
        .iter()
        .find_map(|c| c.detail.clone())
        .ok_or("no generator count reported")?;
    if !detail.ends_with(" 59 total") {
        return Err(format!("generator count {detail}"));
    }
    Ok(detail)
}

fn embeddings() -> Verdict {
    let e = suite(Suite::Embeddings, 5)?;
    let c = suite(Suite::Contraction, 5)?;
    for t in (0..=5).flat_map(enumerate_trees) {
        expect("Fgt after Inc", inc(&t).shape(), t.clone())?;
    }
    Ok(format!("{} cases, degree <= 5", cases(&e) + cases(&c)))
}

/// Invocations compared byte for byte across two runs.
const MATRIX: &[&[&str]] = &[
    &["bijection", "--to-tree", "2,6|3,4|1|5"],
    &["bijection", "--to-comp", "((**)(***)*)@3,1,2"],
    &["--json", "bijection", "--to-tree", "0"],
    &["product", "--op", "internal", "1,3|2", "1,2|3"],
    &["product", "--op", "symmetrized", "1", "1"],
    &["--json", "product", "--op", "symmetrized", "1,2", "1|2"],
    &["product", "--op", "mr", "p:2,1", "p:1"],
    &["--json", "coproduct", "--op", "delta", "1,4|7"],
    &["coproduct", "--op", "delta-hat", "1,3|2"],
    &["--json", "antipode", "1|2,3"],
    &["generators", "3"],
    &["--json", "generators", "2"],
    &["verify", "hopf", "--n", "3"],
    &["--json", "verify", "counts", "--n", "5"],
    &["enumerate", "left-increasing", "--n", "4"],
    &["render", "(*(**)*)"],
    &["factor", "2|1|4,3"],
    &["contract", "((*((**)**))(**))@4,3,2,1,1", "--labels", "1,2,4,6"],
    &["product", "--op", "internal", "1|2", "1"],
    &["bijection", "--to-tree", "1||2"],
];

fn run_cli(args: &[&str]) -> std::io::Result<Output> {
    Command::new(env!("CARGO_BIN_EXE_twistdesc")).args(args).output()
}

fn determinism() -> Verdict {
    for args in MATRIX {
        let first = run_cli(args).map_err(|e| e.to_string())?;
        let second = run_cli(args).map_err(|e| e.to_string())?;
        if first.status.code() != second.status.code() || first.stdout != second.stdout || first.stderr != second.stderr
        {
            return Err(format!("`{}` differs between runs", args.join(" ")));
        }
    }
    Ok(format!("{} invocations run twice", MATRIX.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("bijection", bijection),
        ("counts", counts),
        ("hopf axioms", hopf),
        ("twisted axioms", twisted),
        ("freeness", freeness),
        ("enveloping algebra", generators),
        ("embeddings", embeddings),
        ("determinism", determinism),
    ];
    println!("acceptance (tolerance: {TOLERANCE})");
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
