//! Command-line drivers: the random graph generator, one tester per problem
//! and a timer.
//!
//! Testers read a graph from standard input, run the named algorithm and
//! print a summary line. `show` adds the graph and the solution, `verify`
//! checks the solution and fails when the check does. Exit status is 0 on
//! success, 1 when verification fails and 2 for bad arguments or input.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use grafalgo_core::ecolor::{self, ecolor_verify};
use grafalgo_core::gen::{self, Generated, Kind, Params};
use grafalgo_core::graph::Graph;
use grafalgo_core::matching::{self, matching_verify, matching_verify_weight, SizeAlgo, WeightAlgo};
use grafalgo_core::maxflow::{self, flow_verify};
use grafalgo_core::mincost::{self, mcf_verify, McfResult};
use grafalgo_core::mst::{self, mst_verify};
use grafalgo_core::paths::{self, apsp_verify, spt_verify, ApspAlgo, SptAlgo};
use grafalgo_core::Violation;

use crate::text::{self, FlowDialect};

#[derive(Parser)]
#[command(name = "grafalgo", version, about = "Graph algorithm drivers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Flag {
    Show,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Problem {
    Mst,
    Spt,
    Apsp,
    Maxflo,
    Mcf,
    Match,
    Ecolor,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a random graph: KIND n m [lo hi] [cost_lo cost_hi] [extra] seed scramble
    #[command(name = "randgraph", alias = "randGraph")]
    RandGraph {
        kind: String,
        #[arg(allow_negative_numbers = true, num_args = 1..)]
        args: Vec<i64>,
    },
    /// Minimum spanning tree of a weighted graph
    #[command(name = "testmst", alias = "testMst")]
    TestMst { algo: String, flags: Vec<Flag> },
    /// Shortest path tree of a weighted digraph
    #[command(name = "testspt", alias = "testSpt")]
    TestSpt {
        algo: String,
        flags: Vec<Flag>,
        #[arg(long, default_value = "1")]
        source: String,
    },
    /// All pairs shortest paths of a weighted digraph
    #[command(name = "testapsp", alias = "testApsp")]
    TestApsp { algo: String, flags: Vec<Flag> },
    /// Maximum flow; with --given, checks the flow already in the input
    #[command(name = "testmaxflo", alias = "testMaxFlo")]
    TestMaxFlo {
        #[arg(required_unless_present = "given")]
        algo: Option<String>,
        flags: Vec<Flag>,
        /// Input edges carry floors: v(floor,cap,flow)
        #[arg(long)]
        floors: bool,
        #[arg(long)]
        given: bool,
    },
    /// Minimum cost maximum flow; with --given, checks the flow already in the input
    #[command(name = "testmcf", alias = "testMcf")]
    TestMcf {
        #[arg(required_unless_present = "given")]
        algo: Option<String>,
        flags: Vec<Flag>,
        #[arg(long)]
        given: bool,
    },
    /// Maximum size or maximum weight matching, depending on the algorithm
    #[command(name = "testmatch", alias = "testMatch")]
    TestMatch { algo: String, flags: Vec<Flag> },
    /// Minimum edge coloring of a bipartite graph
    #[command(name = "testecolor", alias = "testEcolor")]
    TestEcolor { algo: String, flags: Vec<Flag> },
    /// Time an algorithm on random graphs with seeds seed, seed+1, ...
    #[command(name = "time")]
    Time {
        problem: Problem,
        algo: String,
        n: usize,
        m: usize,
        reps: usize,
        seed: u64,
    },
}

/// Ways a command can fail, with their exit status.
enum Failure {
    Usage(String),
    Verify(Violation),
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verify(_) => 1,
        }
    }
}

impl From<text::ParseError> for Failure {
    fn from(e: text::ParseError) -> Self {
        Failure::Usage(format!("input {e}"))
    }
}

impl From<grafalgo_core::Error> for Failure {
    fn from(e: grafalgo_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<Violation> for Failure {
    fn from(v: Violation) -> Self {
        Failure::Verify(v)
    }
}

type Outcome = Result<(), Failure>;

fn algo<T: std::str::FromStr>(name: &str, all: &[&str]) -> Result<T, Failure> {
    name.parse()
        .map_err(|_| Failure::Usage(format!("unknown algorithm '{name}' (expected one of: {})", all.join(", "))))
}

/// Runs the command line `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = out.write_all(text.as_bytes());
                0
            } else {
                let _ = err.write_all(text.as_bytes());
                2
            };
        }
    };
    let mut report = String::new();
    let result = dispatch(cli.cmd, input, &mut report);
    let _ = out.write_all(report.as_bytes());
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = match &f {
                Failure::Usage(msg) => writeln!(err, "grafalgo: {msg}"),
                Failure::Verify(v) => writeln!(err, "verification failed: {v}"),
            };
            f.status()
        }
    }
}

fn read_all(input: &mut dyn Read) -> Result<String, Failure> {
    let mut s = String::new();
    input.read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading input: {e}")))?;
    Ok(s)
}

fn dispatch(cmd: Cmd, input: &mut dyn Read, out: &mut String) -> Outcome {
    match cmd {
        Cmd::RandGraph { kind, args } => rand_graph(&kind, &args, out),
        Cmd::TestMst { algo, flags } => test_mst(&algo, &flags, &read_all(input)?, out),
        Cmd::TestSpt { algo, flags, source } => test_spt(&algo, &flags, &source, &read_all(input)?, out),
        Cmd::TestApsp { algo, flags } => test_apsp(&algo, &flags, &read_all(input)?, out),
        Cmd::TestMaxFlo { algo, flags, floors, given } => {
            let (algo, flags) = given_flags(algo, flags, given)?;
            test_maxflo(algo.as_deref(), &flags, floors, &read_all(input)?, out)
        }
        Cmd::TestMcf { algo, flags, given } => {
            let (algo, flags) = given_flags(algo, flags, given)?;
            test_mcf(algo.as_deref(), &flags, &read_all(input)?, out)
        }
        Cmd::TestMatch { algo, flags } => test_match(&algo, &flags, &read_all(input)?, out),
        Cmd::TestEcolor { algo, flags } => test_ecolor(&algo, &flags, &read_all(input)?, out),
        Cmd::Time { problem, algo, n, m, reps, seed } => time(problem, &algo, n, m, reps, seed, out),
    }
}

/// With `--given` there is no algorithm, so a first word is a flag.
fn given_flags(algo: Option<String>, mut flags: Vec<Flag>, given: bool) -> Result<(Option<String>, Vec<Flag>), Failure> {
    match algo {
        Some(word) if given => {
            let flag = Flag::from_str(&word, false)
                .map_err(|_| Failure::Usage(format!("--given takes no algorithm, found '{word}'")))?;
            flags.push(flag);
            Ok((None, flags))
        }
        other => Ok((other, flags)),
    }
}

fn rand_graph(kind: &str, args: &[i64], out: &mut String) -> Outcome {
    let kind: Kind = kind.parse().map_err(|_| {
        let names: Vec<&str> = Kind::ALL.iter().map(|k| k.name()).collect();
        Failure::Usage(format!("unknown graph kind '{kind}' (expected one of: {})", names.join(", ")))
    })?;
    let want = 4 + 2 * kind.ranges() + usize::from(kind.takes_extra());
    let mut usage = String::from("n m");
    if kind.ranges() >= 1 {
        usage.push_str(" lo hi");
    }
    if kind.ranges() == 2 {
        usage.push_str(" cost_lo cost_hi");
    }
    if kind.takes_extra() {
        usage.push_str(" extra");
    }
    usage.push_str(" seed scramble");
    if args.len() != want {
        return Err(Failure::Usage(format!("{} takes: {usage}", kind.name())));
    }
    let count = |x: i64| usize::try_from(x).map_err(|_| Failure::Usage(format!("{} takes: {usage}", kind.name())));
    let mut p = Params::new(count(args[0])?, count(args[1])?, 0);
    let mut at = 2;
    if kind.ranges() >= 1 {
        p = p.range(args[at], args[at + 1]);
        at += 2;
    }
    if kind.ranges() == 2 {
        p = p.costs(args[at], args[at + 1]);
        at += 2;
    }
    if kind.takes_extra() {
        p = p.extra(count(args[at])?);
        at += 1;
    }
    p.seed = args[at] as u64;
    p.scramble = args[at + 1] != 0;
    out.push_str(&match gen::rand_graph(kind, &p)? {
        Generated::Plain(g) => text::graph_to_text(&g),
        Generated::Weighted(g) => text::wgraph_to_text(&g),
        Generated::Flow(f) => text::flow_to_text(&f),
    });
    Ok(())
}

fn names<T: Copy>(all: &[T], name: fn(T) -> &'static str) -> Vec<&'static str> {
    all.iter().map(|&a| name(a)).collect()
}

fn test_mst(name: &str, flags: &[Flag], input: &str, out: &mut String) -> Outcome {
    let a: mst::Algo = algo(name, &names(&mst::Algo::ALL, mst::Algo::name))?;
    let g = text::wgraph_from_text(input, false)?;
    let t = mst::mst(&g, a);
    writeln!(out, "mst weight: {}", t.weight).unwrap();
    if flags.contains(&Flag::Show) {
        out.push_str(&text::wgraph_to_text(&g));
        out.push('\n');
        out.push_str(&text::edge_list(&g, &t.edges, |e| Some(g.weight(e))));
        out.push('\n');
    }
    if flags.contains(&Flag::Verify) {
        mst_verify(&g, &t)?;
    }
    Ok(())
}

/// One distance per vertex, `-` when unreachable.
fn push_distances(out: &mut String, dist: &[Option<i64>]) {
    let words: Vec<String> = dist[1..].iter().map(|d| d.map_or_else(|| "-".to_string(), |d| d.to_string())).collect();
    out.push_str(&words.join(" "));
    out.push('\n');
}

fn test_spt(name: &str, flags: &[Flag], source: &str, input: &str, out: &mut String) -> Outcome {
    let a: SptAlgo = algo(name, &names(&SptAlgo::ALL, SptAlgo::name))?;
    let s = text::parse_vertex(source).ok_or_else(|| Failure::Usage(format!("bad source vertex '{source}'")))?;
    let g = text::wgraph_from_text(input, true)?;
    let t = paths::spt(&g, s, a)?;
    writeln!(out, "distance sum is {}", t.distance_sum()).unwrap();
    if flags.contains(&Flag::Show) {
        out.push_str(&text::wgraph_to_text(&g));
        out.push('\n');
        push_distances(out, &t.dist);
        let edges: Vec<_> = t.edges().collect();
        out.push_str(&text::edge_list(&g, &edges, |e| Some(g.weight(e))));
        out.push('\n');
    }
    if flags.contains(&Flag::Verify) {
        spt_verify(&g, s, &t)?;
    }
    Ok(())
}

fn test_apsp(name: &str, flags: &[Flag], input: &str, out: &mut String) -> Outcome {
    let a: ApspAlgo = algo(name, &names(&ApspAlgo::ALL, ApspAlgo::name))?;
    let g = text::wgraph_from_text(input, true)?;
    let r = paths::apsp(&g, a)?;
    let sum: i64 = r.dist.iter().flatten().flatten().sum();
    writeln!(out, "distance sum is {sum}").unwrap();
    if flags.contains(&Flag::Show) {
        out.push_str(&text::wgraph_to_text(&g));
        out.push('\n');
        for row in &r.dist[1..] {
            push_distances(out, row);
        }
    }
    if flags.contains(&Flag::Verify) {
        apsp_verify(&g, &r)?;
    }
    Ok(())
}

fn test_maxflo(name: Option<&str>, flags: &[Flag], floors: bool, input: &str, out: &mut String) -> Outcome {
    let a = match name {
        Some(n) => Some(algo::<maxflow::Algo>(n, &names(&maxflow::Algo::ALL, maxflow::Algo::name))?),
        None => None,
    };
    let mut f = text::flow_from_text(input, if floors { FlowDialect::Floors } else { FlowDialect::Plain })?;
    let value = match a {
        Some(a) => maxflow::max_flow(&mut f, a)?,
        None => f.total_flow(),
    };
    writeln!(out, "total flow of {value}").unwrap();
    if flags.contains(&Flag::Show) {
        out.push_str(&text::flow_to_text(&f));
    }
    if flags.contains(&Flag::Verify) {
        flow_verify(&f, value)?;
    }
    Ok(())
}

fn test_mcf(name: Option<&str>, flags: &[Flag], input: &str, out: &mut String) -> Outcome {
    let a = match name {
        Some(n) => Some(algo::<mincost::Algo>(n, &names(&mincost::Algo::ALL, mincost::Algo::name))?),
        None => None,
    };
    let mut f = text::flow_from_text(input, FlowDialect::Costs)?;
    let r = match a {
        Some(a) => mincost::min_cost_flow(&mut f, a)?,
        None => McfResult { flow: f.total_flow(), cost: f.total_cost() },
    };
    writeln!(out, "total flow {}, total cost {}", r.flow, r.cost).unwrap();
    if flags.contains(&Flag::Show) {
        out.push_str(&text::flow_to_text(&f));
    }
    if flags.contains(&Flag::Verify) {
        mcf_verify(&f, r)?;
    }
    Ok(())
}

fn test_match(name: &str, flags: &[Flag], input: &str, out: &mut String) -> Outcome {
    if let Ok(a) = name.parse::<SizeAlgo>() {
        let g = text::graph_from_text(input, false)?;
        let m = matching::max_size_matching(&g, a)?;
        writeln!(out, "matching size {}", m.size()).unwrap();
        if flags.contains(&Flag::Show) {
            out.push_str(&text::graph_to_text(&g));
            out.push('\n');
            out.push_str(&text::edge_list(&g, &m.edges, |_| None));
            out.push('\n');
        }
        if flags.contains(&Flag::Verify) {
            matching_verify(&g, &m)?;
        }
        return Ok(());
    }
    let mut all = names(&SizeAlgo::ALL, SizeAlgo::name);
    all.extend(names(&WeightAlgo::ALL, WeightAlgo::name));
    let a: WeightAlgo = algo(name, &all)?;
    let g = text::wgraph_from_text(input, false)?;
    let m = matching::max_weight_matching(&g, a)?;
    writeln!(out, "matching weight {}", m.weight(&g)).unwrap();
    if flags.contains(&Flag::Show) {
        out.push_str(&text::wgraph_to_text(&g));
        out.push('\n');
        out.push_str(&text::edge_list(&g, &m.edges, |e| Some(g.weight(e))));
        out.push('\n');
    }
    if flags.contains(&Flag::Verify) {
        matching_verify_weight(&g, &m)?;
    }
    Ok(())
}

fn test_ecolor(name: &str, flags: &[Flag], input: &str, out: &mut String) -> Outcome {
    let a: ecolor::Algo = algo(name, &names(&ecolor::Algo::ALL, ecolor::Algo::name))?;
    let g = text::graph_from_text(input, false)?;
    let c = ecolor::ecolor(&g, a)?;
    writeln!(out, "colors: {}", c.num_colors).unwrap();
    if flags.contains(&Flag::Show) {
        out.push_str(&text::graph_to_text(&g));
        out.push('\n');
        for (i, class) in c.classes().iter().enumerate() {
            writeln!(out, "color {}: {}", i + 1, text::edge_list(&g, class, |_| None)).unwrap();
        }
    }
    if flags.contains(&Flag::Verify) {
        ecolor_verify(&g, &c)?;
    }
    Ok(())
}

/// A generated instance with the algorithm to run on it.
type Job = Box<dyn FnMut()>;

fn job(problem: Problem, name: &str, n: usize, m: usize, seed: u64) -> Result<Job, Failure> {
    let p = Params::new(n, m, seed);
    Ok(match problem {
        Problem::Mst => {
            let a: mst::Algo = algo(name, &names(&mst::Algo::ALL, mst::Algo::name))?;
            let g = gen::wgraph(&p.range(1, 1000))?;
            Box::new(move || {
                mst::mst(&g, a);
            })
        }
        Problem::Spt => {
            let a: SptAlgo = algo(name, &names(&SptAlgo::ALL, SptAlgo::name))?;
            let g = gen::wdigraph(&p.range(1, 1000))?;
            Box::new(move || {
                paths::spt(&g, 1, a).expect("lengths are positive");
            })
        }
        Problem::Apsp => {
            let a: ApspAlgo = algo(name, &names(&ApspAlgo::ALL, ApspAlgo::name))?;
            let g = gen::wdigraph(&p.range(1, 1000))?;
            Box::new(move || {
                paths::apsp(&g, a).expect("lengths are positive");
            })
        }
        Problem::Maxflo => {
            let a: maxflow::Algo = algo(name, &names(&maxflow::Algo::ALL, maxflow::Algo::name))?;
            let f = gen::flograph(&p.range(1, 1000).extra(flow_extra(n, m)))?;
            Box::new(move || {
                maxflow::max_flow(&mut f.clone(), a).expect("valid network");
            })
        }
        Problem::Mcf => {
            let a: mincost::Algo = algo(name, &names(&mincost::Algo::ALL, mincost::Algo::name))?;
            let f = gen::wflograph(&p.range(1, 1000).costs(1, 1000).extra(flow_extra(n, m)))?;
            Box::new(move || {
                mincost::min_cost_flow(&mut f.clone(), a).expect("valid network");
            })
        }
        Problem::Match => {
            if let Ok(a) = name.parse::<SizeAlgo>() {
                let g = gen::bigraph(&p)?;
                Box::new(move || {
                    matching::max_size_matching(&g, a).expect("bipartite");
                })
            } else {
                let mut all = names(&SizeAlgo::ALL, SizeAlgo::name);
                all.extend(names(&WeightAlgo::ALL, WeightAlgo::name));
                let a: WeightAlgo = algo(name, &all)?;
                let g = gen::wbigraph(&p.range(1, 1000))?;
                Box::new(move || {
                    matching::max_weight_matching(&g, a).expect("bipartite");
                })
            }
        }
        Problem::Ecolor => {
            let a: ecolor::Algo = algo(name, &names(&ecolor::Algo::ALL, ecolor::Algo::name))?;
            let g: Graph = gen::bigraph(&p)?;
            Box::new(move || {
                ecolor::ecolor(&g, a).expect("bipartite");
            })
        }
    })
}

fn flow_extra(n: usize, m: usize) -> usize {
    n.saturating_sub(2).min(m / 4)
}

fn time(problem: Problem, name: &str, n: usize, m: usize, reps: usize, seed: u64, out: &mut String) -> Outcome {
    if reps == 0 {
        return Err(Failure::Usage("reps must be at least 1".into()));
    }
    out.push_str("rep,seed,millis\n");
    let mut total = 0.0;
    for i in 0..reps {
        let s = seed + i as u64;
        let mut run = job(problem, name, n, m, s)?;
        let start = Instant::now();
        run();
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        total += ms;
        writeln!(out, "{},{},{:.3}", i + 1, s, ms).unwrap();
    }
    writeln!(out, "mean,,{:.3}", total / reps as f64).unwrap();
    Ok(())
}
