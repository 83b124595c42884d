//! `medvote`: command-line front end for the median-voting library.
//!
//! Exit codes: 0 on success or a positive verdict, 1 on a negative verdict,
//! 2 on invalid input.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use median_voting::cc::{cc_tree_dp, CcSolution, Misrepresentation, Objective};
use median_voting::domain::is_condorcet_domain;
use median_voting::format::{
    parse_approval_sets, parse_misrep_table, read_graph, read_profile, write_graph, write_profile,
    GraphJson, ProfileJson,
};
use median_voting::graph::Graph;
use median_voting::intermediate::non_convex_pair;
use median_voting::recognition::{recognize, RecognitionResult, Verdict};
use median_voting::synthesis::{random_median_graph, synthesize_profile};
use median_voting::Profile;

#[derive(Parser)]
#[command(name = "medvote", version, about = "Intermediate preference profiles on median graphs")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a profile is intermediate on some median graph.
    Recognize { profile: String },
    /// Check that every V_ab is convex, voter i sitting at vertex i.
    CheckIntermediate { profile: String, graph: String },
    /// Build an intermediate profile for a median graph.
    Synthesize { graph: String },
    /// Check that the orders of a profile form a Condorcet domain.
    CheckDomain { profile: String },
    /// Print the majority relation and a representative voter.
    Majority { profile: String },
    /// Chamberlin-Courant committee for a profile single-crossing on a tree.
    Cc {
        profile: String,
        /// Committee size.
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Sum)]
        objective: ObjectiveArg,
        /// borda, approval, approval:<file> or table:<file>.
        #[arg(long, default_value = "borda")]
        misrep: String,
        /// With `--misrep approval`, every voter approves this many top alternatives.
        #[arg(long, default_value_t = 1)]
        approve_top: usize,
        /// Tree on the voters; recognized from the profile when absent.
        #[arg(long)]
        tree: Option<String>,
    },
    /// Generate a random median graph.
    GenMedian {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Sum,
    Max,
}

/// A finished command: report text, exit code.
struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn new(code: u8, text: String, json: Value) -> Self {
        Outcome { text, json, code }
    }
}

fn read(path: &str) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn load_profile(path: &str) -> Result<Profile, String> {
    read_profile(&read(path)?).map_err(|e| format!("{path}: {e}"))
}

fn load_graph(path: &str) -> Result<Graph, String> {
    read_graph(&read(path)?).map_err(|e| format!("{path}: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> Result<Outcome, String> {
    match command {
        Command::Recognize { profile } => Ok(recognize_report(&load_profile(profile)?)),
        Command::CheckIntermediate { profile, graph } => {
            let p = load_profile(profile)?;
            let g = load_graph(graph)?;
            match non_convex_pair(&p, &g).map_err(|e| e.to_string())? {
                None => Ok(Outcome::new(0, "INTERMEDIATE\n".into(), json!({ "intermediate": true }))),
                Some((a, b)) => {
                    let (a, b) = (&p.names()[a], &p.names()[b]);
                    Ok(Outcome::new(
                        1,
                        format!("NOT INTERMEDIATE V_{a}{b} is not convex\n"),
                        json!({ "intermediate": false, "pair": [a, b] }),
                    ))
                }
            }
        }
        Command::Synthesize { graph } => {
            let g = load_graph(graph)?;
            let p = synthesize_profile(&g).map_err(|e| e.to_string())?;
            Ok(Outcome::new(0, write_profile(&p), json!(ProfileJson::from(&p))))
        }
        Command::CheckDomain { profile } => {
            let p = load_profile(profile)?;
            let ok = is_condorcet_domain(&p.domain());
            let text = if ok { "CONDORCET DOMAIN\n" } else { "NOT A CONDORCET DOMAIN\n" };
            Ok(Outcome::new(u8::from(!ok), text.into(), json!({ "condorcet_domain": ok })))
        }
        Command::Majority { profile } => Ok(majority_report(&load_profile(profile)?)),
        Command::Cc { profile, k, objective, misrep, approve_top, tree } => {
            let p = load_profile(profile)?;
            let obj = match objective {
                ObjectiveArg::Sum => Objective::Utilitarian,
                ObjectiveArg::Max => Objective::Egalitarian,
            };
            let r = misrepresentation(&p, misrep, *approve_top)?;
            let t = match tree {
                Some(path) => load_graph(path)?,
                None => voter_tree(&p)?,
            };
            let s = cc_tree_dp(&p, &t, *k, &r, obj).map_err(|e| e.to_string())?;
            Ok(cc_report(&p, &s))
        }
        Command::GenMedian { n, seed } => {
            if *n == 0 {
                return Err("--n must be at least 1".into());
            }
            let g = random_median_graph(*n, *seed);
            Ok(Outcome::new(0, write_graph(&g), json!(GraphJson::from(&g))))
        }
    }
}

fn recognize_report(p: &Profile) -> Outcome {
    let r = recognize(p);
    match &r.verdict {
        Verdict::Accepted => {
            let mut text = String::from("ACCEPTED\n");
            text.push_str(&write_graph(&r.graph));
            text.push_str("# placement\n");
            for (entry, &v) in r.placement.iter().enumerate() {
                text.push_str(&format!("{v} {}\n", r.reduced.render(r.reduced.order(entry))));
            }
            text.push_str("# voter-vertex\n");
            for (voter, v) in r.voter_vertex().iter().enumerate() {
                text.push_str(&format!("{voter} {v}\n"));
            }
            Outcome::new(0, text, recognition_json(&r))
        }
        Verdict::Rejected(rej) => {
            let mut text = format!("REJECTED {} {}\n", rej.condition, rej.witness);
            for step in &rej.trace {
                text.push_str(&format!("# {step}\n"));
            }
            Outcome::new(1, text, recognition_json(&r))
        }
    }
}

fn recognition_json(r: &RecognitionResult) -> Value {
    let placement: Vec<Value> = r
        .placement
        .iter()
        .enumerate()
        .map(|(entry, &v)| {
            let order: Vec<&str> =
                r.reduced.order(entry).as_slice().iter().map(|&a| r.reduced.names()[a].as_str()).collect();
            json!({ "vertex": v, "order": order, "multiplicity": r.reduced.multiplicities()[entry] })
        })
        .collect();
    let mut out = json!({
        "graph": GraphJson::from(&r.graph),
        "placement": placement,
        "voter_vertex": r.voter_vertex(),
    });
    match &r.verdict {
        Verdict::Accepted => out["verdict"] = json!("accepted"),
        Verdict::Rejected(rej) => {
            out["verdict"] = json!("rejected");
            out["condition"] = json!(rej.condition.to_string());
            out["witness"] = json!(rej.witness);
            out["trace"] = json!(rej.trace);
        }
    }
    out
}

fn majority_report(p: &Profile) -> Outcome {
    let mr = p.majority_relation();
    let m = p.m();
    let names = p.names();
    let matrix = |f: &dyn Fn(usize, usize) -> bool| -> Vec<Vec<bool>> {
        (0..m).map(|a| (0..m).map(|b| a != b && f(a, b)).collect()).collect()
    };
    let weak = matrix(&|a, b| mr.weak(a, b));
    let strict = matrix(&|a, b| mr.strict(a, b));
    let transitive = mr.is_strict_transitive();
    let representative = p.representative_voter();

    let width = names.iter().map(|s| s.len()).max().unwrap_or(1);
    let table = |title: &str, rows: &[Vec<bool>]| {
        let mut s = format!("# {title}\n{:width$}", "");
        for name in names {
            s.push_str(&format!(" {name:>width$}"));
        }
        s.push('\n');
        for (a, row) in rows.iter().enumerate() {
            s.push_str(&format!("{:width$}", names[a]));
            for &x in row {
                s.push_str(&format!(" {:>width$}", u8::from(x)));
            }
            s.push('\n');
        }
        s
    };
    let mut text = table("weak: row is at least as popular as column", &weak);
    text.push_str(&table("strict: row beats column", &strict));
    text.push_str(&format!("transitive {}\n", if transitive { "yes" } else { "no" }));
    match representative {
        Some(v) => text.push_str(&format!("representative {v} {}\n", p.render(p.order(v)))),
        None => text.push_str("representative none\n"),
    }
    let json = json!({
        "alternatives": names,
        "weak": weak,
        "strict": strict,
        "strict_transitive": transitive,
        "representative": representative,
    });
    Outcome::new(0, text, json)
}

fn misrepresentation(p: &Profile, spec: &str, approve_top: usize) -> Result<Misrepresentation, String> {
    if spec == "borda" {
        return Ok(Misrepresentation::borda(p.m()));
    }
    if spec == "approval" {
        return Ok(Misrepresentation::approve_top(p, approve_top));
    }
    if let Some(path) = spec.strip_prefix("approval:") {
        let sets = parse_approval_sets(&read(path)?, p).map_err(|e| format!("{path}: {e}"))?;
        return Misrepresentation::approval(p, &sets).map_err(|e| format!("{path}: {e}"));
    }
    if let Some(path) = spec.strip_prefix("table:") {
        return parse_misrep_table(&read(path)?, p).map_err(|e| format!("{path}: {e}"));
    }
    Err(format!("unknown misrepresentation {spec:?}; use borda, approval, approval:<file> or table:<file>"))
}

/// The recognized tree, lifted to the profile's voter lines: each repeated
/// order hangs as a leaf off its first occurrence.
fn voter_tree(p: &Profile) -> Result<Graph, String> {
    let r = recognize(p);
    if let Verdict::Rejected(rej) = &r.verdict {
        return Err(format!(
            "profile is not intermediate on any median graph ({} {})",
            rej.condition, rej.witness
        ));
    }
    if !r.graph.is_tree() {
        return Err("median graph is not a tree; CC on median graphs is open".into());
    }
    let mut first = vec![usize::MAX; r.reduced.n()];
    for (voter, &c) in r.voter_class.iter().enumerate() {
        if first[c] == usize::MAX {
            first[c] = voter;
        }
    }
    let mut edges: Vec<(usize, usize)> =
        r.graph.edges().iter().map(|&(x, y)| (first[x], first[y])).collect();
    for (voter, &c) in r.voter_class.iter().enumerate() {
        if first[c] != voter {
            edges.push((first[c], voter));
        }
    }
    Graph::new(p.n(), edges).map_err(|e| e.to_string())
}

fn cc_report(p: &Profile, s: &CcSolution) -> Outcome {
    let names = p.names();
    let committee: Vec<&str> = s.committee.iter().map(|&a| names[a].as_str()).collect();
    let assignment: Vec<&str> = s.assignment.iter().map(|&a| names[a].as_str()).collect();
    let phi = format!("{}/{}", s.phi.numer(), s.phi.denom());
    let objective = match s.objective {
        Objective::Utilitarian => "sum",
        Objective::Egalitarian => "max",
    };
    let mut text = format!("committee {}\nphi {phi}\nobjective {objective}\n# voter representative\n", committee.join(" "));
    for (v, a) in assignment.iter().enumerate() {
        text.push_str(&format!("{v} {a}\n"));
    }
    let json = json!({
        "committee": committee,
        "assignment": assignment,
        "phi": phi,
        "objective": objective,
    });
    Outcome::new(0, text, json)
}
