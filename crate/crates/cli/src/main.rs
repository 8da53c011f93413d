use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use twistdesc_core::bialgebra::{antipode, PER_ELEMENT_CAP};
use twistdesc_core::hopf::{
    coproduct_delta, cosym_coproduct, is_cosym_primitive, primitive_generators, restricted_coproduct,
    restricted_product, symmetrized_product,
};
use twistdesc_core::render::{render_increasing, render_planar};
use twistdesc_core::symgroups::{cosym_coproduct_perm, mr_coproduct, mr_product};
use twistdesc_core::{
    enumerate_increasing_trees, enumerate_permutations, enumerate_set_compositions, enumerate_trees, Basis, CompHopf,
    Error, IncreasingTree, LinComb, ParseError, Permutation, PlanarTree, Report, SetComposition, Suite,
};

/// Worker threads for verification suites.
const THREADS_VAR: &str = "TWISTDESC_THREADS";

#[derive(Parser)]
#[command(
    name = "twistdesc",
    version,
    about = "Set compositions, increasing trees and their Hopf algebras"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a set composition to its increasing tree, or back.
    Bijection {
        #[arg(long, conflicts_with = "to_comp", required_unless_present = "to_comp")]
        to_tree: bool,
        #[arg(long)]
        to_comp: bool,
        input: String,
    },
    /// Multiply two basis elements.
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,
        left: String,
        right: String,
    },
    /// Apply a coproduct to a basis element.
    Coproduct {
        #[arg(long, value_enum)]
        op: CoproductOp,
        input: String,
    },
    /// Antipode of a set composition of [n].
    Antipode {
        #[arg(long, default_value = "restricted-cosym")]
        structure: String,
        input: String,
    },
    /// Run a verification suite; exits with 1 if a property fails.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// The free Lie generators e1(R) for reduced R of degree N.
    Generators { n: usize },
    /// List a basis in its canonical order.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
    },
    /// Draw a tree given as a literal.
    Render { input: String },
    /// Split a set composition into reduced factors.
    Factor { input: String },
    /// Contract an increasing tree to a set of branching labels.
    Contract {
        tree: String,
        /// Comma-separated natural labels; empty for none.
        #[arg(long, default_value = "")]
        labels: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Internal,
    Conv,
    Restricted,
    Symmetrized,
    Mr,
    Concat,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoproductOp {
    Delta,
    DeltaBar,
    DeltaHat,
    Mr,
    PermHat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Setcomp,
    Reduced,
    Perm,
    Tree,
    Binary,
    Inctree,
    LeftIncreasing,
}

enum Failure {
    Parse(String),
    Domain(String),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Parse(p.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .map_err(|_| format!("{THREADS_VAR} must be a non-negative integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Bijection { to_tree, input, .. } => bijection(*to_tree, input, json),
        Command::Product { op, left, right } => product(*op, left, right, json),
        Command::Coproduct { op, input } => coproduct(*op, input, json),
        Command::Antipode { structure, input } => {
            let h: CompHopf = structure.parse()?;
            let p: SetComposition = input.parse()?;
            if !p.has_initial_support() {
                return Err(Error::NotInitialSegment(p.support()).into());
            }
            Ok(comb(&antipode(&h, &LinComb::basis(p)), json))
        }
        Command::Verify { suite, n } => verify(suite, *n, json),
        Command::Generators { n } => generators(*n, json),
        Command::Enumerate { kind, n } => enumerate(*kind, *n, json),
        Command::Render { input } => {
            let drawing = if input.contains('@') {
                render_increasing(&input.parse::<IncreasingTree>()?)
            } else {
                render_planar(&input.parse::<PlanarTree>()?)
            };
            Ok(if json {
                json!({ "tree": input.trim(), "drawing": drawing }).to_string()
            } else {
                drawing
            })
        }
        Command::Factor { input } => {
            let p: SetComposition = input.parse()?;
            let factors: Vec<String> = p.factor_reduced()?.iter().map(ToString::to_string).collect();
            Ok(if json {
                json!({ "composition": p.to_string(), "factors": factors }).to_string()
            } else {
                factors.join("\n")
            })
        }
        Command::Contract { tree, labels } => {
            let t: IncreasingTree = tree.parse()?;
            let labels = parse_labels(labels)?;
            let c = t.standardize().contract(&labels)?;
            Ok(if json {
                json!({ "tree": c.to_string(), "drawing": render_increasing(&c) }).to_string()
            } else {
                format!("{c}\n{}", render_increasing(&c))
            })
        }
    }
}

fn parse_labels(s: &str) -> Result<Vec<u32>, ParseError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| ParseError::new("label list", s, format!("`{t}` is not a positive integer")))
        })
        .collect()
}

fn comb<K: Basis, R: twistdesc_core::linear::Coeff>(x: &LinComb<K, R>, json: bool) -> String {
    if json {
        x.to_json()
    } else {
        x.to_string()
    }
}

fn bijection(to_tree: bool, input: &str, json: bool) -> Outcome {
    let (p, t) = if to_tree {
        let p: SetComposition = input.parse()?;
        let t = IncreasingTree::tau(&p.standardize());
        (p, t)
    } else {
        let t: IncreasingTree = input.parse()?;
        (t.sigma()?, t)
    };
    let drawing = render_increasing(&t);
    if json {
        return Ok(json!({
            "composition": p.to_string(),
            "tree": t.to_string(),
            "drawing": drawing,
        })
        .to_string());
    }
    Ok(if to_tree {
        format!("{t}\n{drawing}")
    } else {
        p.to_string()
    })
}

fn product(op: ProductOp, left: &str, right: &str, json: bool) -> Outcome {
    let comps = || -> Result<(SetComposition, SetComposition), ParseError> { Ok((left.parse()?, right.parse()?)) };
    let perms = || -> Result<(Permutation, Permutation), ParseError> { Ok((left.parse()?, right.parse()?)) };
    Ok(match op {
        ProductOp::Internal => {
            let (p, q) = comps()?;
            comb(&LinComb::<_>::basis(p.internal_product(&q)?), json)
        }
        ProductOp::Conv => {
            let (p, q) = comps()?;
            comb(&LinComb::<_>::basis(p.concat_disjoint(&q)?), json)
        }
        ProductOp::Restricted => {
            let (p, q) = comps()?;
            comb(&LinComb::<_>::basis(restricted_product(&p, &q)?), json)
        }
        ProductOp::Symmetrized => {
            let (p, q) = comps()?;
            comb(&symmetrized_product(&p, &q)?, json)
        }
        ProductOp::Mr => {
            let (a, b) = perms()?;
            comb(&mr_product(&a, &b), json)
        }
        ProductOp::Concat => {
            let (a, b) = perms()?;
            comb(&LinComb::<_>::basis(a.concat(&b)), json)
        }
    })
}

fn coproduct(op: CoproductOp, input: &str, json: bool) -> Outcome {
    Ok(match op {
        CoproductOp::Delta => comb(&coproduct_delta(&input.parse()?), json),
        CoproductOp::DeltaBar => comb(&restricted_coproduct(&input.parse()?)?, json),
        CoproductOp::DeltaHat => comb(&cosym_coproduct(&input.parse()?)?, json),
        CoproductOp::Mr => comb(&mr_coproduct(&input.parse()?), json),
        CoproductOp::PermHat => comb(&cosym_coproduct_perm(&input.parse()?), json),
    })
}

fn verify(suite: &str, n: usize, json: bool) -> Outcome {
    let suite: Suite = suite.parse()?;
    let report: Report = suite.run(n)?;
    let text = if json { report.to_json() } else { report.to_string() };
    if report.passed() {
        Ok(text)
    } else {
        println!("{text}");
        Err(Failure::Property)
    }
}

fn generators(n: usize, json: bool) -> Outcome {
    let gens = primitive_generators(n)?;
    let primitive = gens.iter().all(|(_, e)| is_cosym_primitive(e));
    let text = if json {
        let items: Vec<_> = gens
            .iter()
            .map(|(r, e)| json!({ "reduced": r.to_string(), "generator": e.to_json_value() }))
            .collect();
        serde_json::to_string(&items).expect("plain data serializes")
    } else {
        gens.iter()
            .map(|(r, e)| format!("# e1({r})\n{e}"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    if primitive {
        Ok(text)
    } else {
        println!("{text}");
        eprintln!("error: a generator is not primitive");
        Err(Failure::Property)
    }
}

fn enumerate(kind: Kind, n: usize, json: bool) -> Outcome {
    if n > PER_ELEMENT_CAP {
        return Err(Error::DegreeTooLarge {
            requested: n,
            cap: PER_ELEMENT_CAP,
        }
        .into());
    }
    let items: Vec<String> = match kind {
        Kind::Setcomp => strings(enumerate_set_compositions(n)),
        Kind::Reduced => strings(
            enumerate_set_compositions(n)
                .into_iter()
                .filter(|p| p.is_reduced() == Ok(true)),
        ),
        Kind::Perm => strings(enumerate_permutations(n)),
        Kind::Tree => strings(enumerate_trees(n)),
        Kind::Binary => strings(enumerate_trees(n).into_iter().filter(PlanarTree::is_binary)),
        Kind::Inctree => strings(enumerate_increasing_trees(n)),
        Kind::LeftIncreasing => strings(enumerate_trees(n).iter().map(IncreasingTree::inc)),
    };
    Ok(if json {
        json!({ "n": n, "count": items.len(), "items": items }).to_string()
    } else {
        items.join("\n")
    })
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}
