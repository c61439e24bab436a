//! Command-line front end.
//!
//! Every command renders as JSON (sorted keys, with `spec_version`,
//! `command` and `params`), CSV, or plain text. Exit codes: 0 success,
//! 1 internal failure (overflow, cache I/O), 2 invalid parameters,
//! 3 verification failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cache::{cached_table, DiskCache};
use crate::cells::{
    cell_histogram, chow_ranks_decomposition, enumerate_orbit_signatures, orbit_dimension,
    verify_restriction_bounds_degenerate,
};
use crate::degeneracy::{
    betti_degeneracy, betti_orthogonal_special, betti_skew, fibration_betti, thresholds_report_with,
    default_connectedness, verify_growth_inequalities, AmbientData, Fiber, MorphismKind,
    MorphismSetup, Parity,
};
use crate::error::{Error, Result};
use crate::partitions::{
    box_partition_counts, enumerate_box_partitions, enumerate_strict_partitions, strict_partition_counts,
    verify_doubling_bijection, BoxConstraint,
};
use crate::rings::{qtilde_basis_report, restriction_report, PresentationKind};
use crate::table::{parse_ranks, BettiTable};
use crate::worked::{run_all_examples, run_example, ExampleReport};
use crate::FORMAT_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(name = "degloci", version, about = "Betti numbers of degeneracy loci and Grassmannian cohomology")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "pretty", global = true)]
    pub format: Format,
    /// Cache directory for ring tables (overridden by DEGLOCI_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expected dimension, ε tables, Lefschetz range and connectedness.
    Thresholds(ThresholdsArgs),
    /// Betti tables of degeneracy loci.
    #[command(subcommand)]
    Betti(BettiCommand),
    /// Graded ranks and torsion of a cohomology ring presentation.
    #[command(subcommand)]
    Ring(RingCommand),
    /// The map H*(G(d,2r)) -> H*(LG(d,2r)) by half-degree.
    Restriction(RestrictionArgs),
    /// Orbit cells of LG(d, V; 2r) with a kernel.
    #[command(subcommand)]
    Cells(CellsCommand),
    /// Partition counts and the doubling bijection.
    #[command(subcommand)]
    Partitions(PartitionsCommand),
    /// Worked examples against independent oracles.
    #[command(subcommand)]
    Examples(ExamplesCommand),
    /// Built-in verification suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    General,
    Skew,
    Orthogonal,
}

#[derive(Debug, Args)]
pub struct ThresholdsArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub e: Option<u32>,
    #[arg(long)]
    pub f: Option<u32>,
    #[arg(long)]
    pub r: u32,
    /// Orthogonal: X = O^k. General/skew: rank bound for connectedness.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub dimx: u32,
    /// X is d-connected (default dim X - 1).
    #[arg(long, allow_hyphen_values = true)]
    pub connected: Option<i64>,
}

#[derive(Debug, Args)]
pub struct AmbientArgs {
    /// P<n>, point, jacobian<g>, or <dim>:<h0,h1,...>
    #[arg(long)]
    pub ambient: String,
}

fn parse_ambient(s: &str) -> Result<AmbientData> {
    let bad = || Error::InvalidParameter(format!("ambient {s:?}: expected P<n>, point, jacobian<g> or <dim>:<h0,h1,...>"));
    if s == "point" {
        return Ok(AmbientData::point());
    }
    if let Some(n) = s.strip_prefix('P') {
        return Ok(AmbientData::projective_space(n.parse().map_err(|_| bad())?));
    }
    if let Some(g) = s.strip_prefix("jacobian") {
        return Ok(AmbientData::jacobian(g.parse().map_err(|_| bad())?));
    }
    let (dim, list) = s.split_once(':').ok_or_else(bad)?;
    let dim = dim.parse().map_err(|_| bad())?;
    AmbientData::new(dim, parse_ranks(list).map_err(Error::InvalidParameter)?)
}

#[derive(Debug, Subcommand)]
pub enum BettiCommand {
    /// h^p(D_r) for u: E -> F of ranks e <= f.
    General {
        #[command(flatten)]
        ambient: AmbientArgs,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        r: u32,
    },
    /// h^p(A_r) for a skew u: E -> E* ⊗ L.
    Skew {
        #[command(flatten)]
        ambient: AmbientArgs,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        r: u32,
    },
    /// Low-degree h^p(O^4) (even) or h^p(O^3) (odd).
    Orthogonal {
        #[command(flatten)]
        ambient: AmbientArgs,
        #[arg(long, value_enum)]
        parity: ParityArg,
    },
    /// Grassmann or Lagrangian bundle over the ambient.
    Fibration {
        #[command(flatten)]
        ambient: AmbientArgs,
        #[arg(long, value_enum)]
        fiber: FiberArg,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        e: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FiberArg {
    Grassmann,
    Lagrangian,
}

#[derive(Debug, Subcommand)]
pub enum RingCommand {
    /// H*(G(d,n)).
    Grassmannian {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Highest cohomological degree (default: 2 dim).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// H*(LG(d,2r)).
    Isotropic {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_degree: Option<u32>,
    },
}

#[derive(Debug, Args)]
pub struct RestrictionArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub r: usize,
    /// Must equal 2r when given.
    #[arg(long)]
    pub n: Option<usize>,
    /// Highest half-degree p (default: dim LG(d,2r)).
    #[arg(long)]
    pub max_half_degree: Option<u32>,
}

#[derive(Debug, Args)]
pub struct CellArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub r: u32,
}

#[derive(Debug, Subcommand)]
pub enum CellsCommand {
    /// Orbit signatures with their dimensions.
    Enumerate(CellArgs),
    /// Ranks of A_p by dimension p.
    Chow {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long)]
        p_max: Option<u32>,
    },
    /// Histogram against decomposition, and rank bounds against G(d,n).
    Verify {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long)]
        p_max: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PartitionsCommand {
    /// Number of partitions of q in a box, or strict partitions.
    Count {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        max_part: u32,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long)]
        strict: bool,
        /// Also list the partitions.
        #[arg(long)]
        list: bool,
    },
    /// Check the doubling bijection for weights up to q_max.
    Bijection {
        #[arg(long)]
        q_max: u32,
        #[arg(long)]
        r: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExamplesCommand {
    /// Run one example family, or all of them.
    Run { name: Option<String> },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Quick verification suite.
    All,
}

/// A rendered result: JSON fields, CSV text, plain text, and whether every
/// check it carries passed.
struct Output {
    command: String,
    params: Value,
    result: Value,
    csv: String,
    pretty: String,
    passed: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable result")
}

fn table_csv(t: &BettiTable) -> String {
    t.to_csv()
}

fn table_pretty(title: &str, t: &BettiTable) -> String {
    let mut out = format!("{title}\n");
    match t.valid_below {
        Some(b) => out.push_str(&format!("valid for degrees p < {b}\n")),
        None => out.push_str("exact in every degree\n"),
    }
    for (p, r) in t.ranks().iter().enumerate() {
        out.push_str(&format!("  h^{p:<3} = {r}\n"));
    }
    for n in &t.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out
}

fn betti_output(command: &str, params: Value, setup: Value, assumptions: Vec<String>, t: BettiTable) -> Output {
    let mut result = to_value(&t);
    let map = result.as_object_mut().expect("table is an object");
    map.insert("setup".into(), setup);
    map.insert("assumptions".into(), json!(assumptions));
    let mut pretty = table_pretty(command, &t);
    for a in &assumptions {
        pretty.push_str(&format!("assumes: {a}\n"));
    }
    Output { command: command.into(), params, result, csv: table_csv(&t), pretty, passed: true }
}

fn thresholds(a: &ThresholdsArgs) -> Result<Output> {
    let need = |x: Option<u32>, name: &str| {
        x.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required for this kind")))
    };
    let kind = match a.kind {
        Kind::General => MorphismKind::General { e: need(a.e, "e")?, f: need(a.f, "f")?, r: a.r },
        Kind::Skew => MorphismKind::Skew { e: need(a.e, "e")?, r: a.r },
        Kind::Orthogonal => MorphismKind::Orthogonal { r: a.r, k: need(a.k, "k")? },
    };
    let setup = MorphismSetup::from_kind(kind)?;
    let mut conn = default_connectedness(&setup, a.dimx);
    if let Some(d) = a.connected {
        conn.d = d;
    }
    if let (Some(k), false) = (a.k, a.kind == Kind::Orthogonal) {
        conn.k = k;
    }
    let rep = thresholds_report_with(&setup, a.dimx, conn)?;
    let params = json!({"kind": format!("{:?}", a.kind).to_lowercase(), "e": a.e, "f": a.f, "r": a.r, "k": a.k,
        "dimx": a.dimx, "connected": a.connected});
    let mut csv = String::from("m,epsilon\n");
    for (m, e) in &rep.epsilon_table {
        csv.push_str(&format!("{m},{e}\n"));
    }
    let eps_name = if a.kind == Kind::Skew { "ε′" } else { "ε" };
    let mut pretty = format!(
        "expected dimension {}\nexpected codimension {}\n",
        rep.expected_dimension, rep.expected_codimension
    );
    for (t, v) in &rep.threshold_by_rank {
        pretty.push_str(&format!("  t={t}: {v}\n"));
    }
    if !rep.epsilon_table.is_empty() {
        let vals: Vec<String> = rep.epsilon_table.iter().map(|(m, e)| format!("{m}:{e}")).collect();
        pretty.push_str(&format!("{eps_name}: {}\n", vals.join(" ")));
    }
    match rep.lefschetz_max_m {
        Some(m) => pretty.push_str(&format!("H^p(X) -> H^p(locus) bijective for p <= {m}\n")),
        None => pretty.push_str("no Lefschetz range\n"),
    }
    pretty.push_str(&format!("locus is {}-connected\n", rep.connectedness));
    Ok(Output { command: "thresholds".into(), params, result: to_value(&rep), csv, pretty, passed: true })
}

fn betti(cmd: &BettiCommand) -> Result<Output> {
    match cmd {
        BettiCommand::General { ambient, e, f, r } => {
            let x = parse_ambient(&ambient.ambient)?;
            let setup = MorphismSetup::general(*e, *f, *r)?;
            let t = betti_degeneracy(&x, *e, *f, *r)?;
            let params = json!({"ambient": ambient.ambient, "e": e, "f": f, "r": r});
            Ok(betti_output("betti general", params, to_value(&setup), setup.assumptions(), t))
        }
        BettiCommand::Skew { ambient, e, r } => {
            let x = parse_ambient(&ambient.ambient)?;
            let setup = MorphismSetup::skew(*e, *r)?;
            let t = betti_skew(&x, *e, *r)?;
            let params = json!({"ambient": ambient.ambient, "e": e, "r": r});
            Ok(betti_output("betti skew", params, to_value(&setup), setup.assumptions(), t))
        }
        BettiCommand::Orthogonal { ambient, parity } => {
            let x = parse_ambient(&ambient.ambient)?;
            let (p, k, r) = match parity {
                ParityArg::Even => (Parity::Even, 0, 4),
                ParityArg::Odd => (Parity::Odd, 1, 3),
            };
            let setup = MorphismSetup::orthogonal(r, k)?;
            let t = betti_orthogonal_special(&x, p)?;
            let params = json!({"ambient": ambient.ambient, "parity": to_value(&p)});
            Ok(betti_output("betti orthogonal", params, to_value(&setup), setup.assumptions(), t))
        }
        BettiCommand::Fibration { ambient, fiber, d, e, r } => {
            let x = parse_ambient(&ambient.ambient)?;
            let need = |v: &Option<u32>, name: &str| {
                v.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required for this fibre")))
            };
            let fib = match fiber {
                FiberArg::Grassmann => Fiber::Grassmann { d: need(d, "d")?, e: need(e, "e")? },
                FiberArg::Lagrangian => Fiber::Lagrangian { r: need(r, "r")? },
            };
            let t = fibration_betti(&x, fib)?;
            let params = json!({"ambient": ambient.ambient, "fiber": to_value(&fib)});
            Ok(betti_output("betti fibration", params, to_value(&fib), Vec::new(), t))
        }
    }
}

fn ring(cmd: &RingCommand, cache: Option<&DiskCache>) -> Result<Output> {
    let (kind, max_degree, name) = match *cmd {
        RingCommand::Grassmannian { d, n, max_degree } => {
            (PresentationKind::Grassmannian { d, n }, max_degree, "ring grassmannian")
        }
        RingCommand::Isotropic { d, r, max_degree } => (PresentationKind::Isotropic { d, r }, max_degree, "ring isotropic"),
    };
    // Validate before touching dimension().
    crate::cache::presentation(kind)?;
    let max_degree = max_degree.unwrap_or(2 * kind.dimension() as u32);
    let (pres, table) = cached_table(cache, kind, max_degree)?;
    let mut params = to_value(&kind);
    params["max_degree"] = json!(max_degree);
    let relations: Vec<String> = pres.relations.iter().map(|r| r.to_string()).collect();
    let result = json!({
        "presentation": {
            "generator_degrees": pres.generator_degrees,
            "relations": to_value(&pres.relations),
        },
        "rows": to_value(&table.rows),
        "ranks": table.ranks(),
    });
    let mut pretty = format!("{name}: generators c_1..c_{} \n", pres.num_generators);
    for r in &relations {
        pretty.push_str(&format!("  relation {r}\n"));
    }
    for row in &table.rows {
        let tors = if row.torsion.is_empty() { String::new() } else { format!("  torsion {:?}", row.torsion) };
        pretty.push_str(&format!("  H^{:<3} rank {}{tors}\n", row.degree, row.rank));
    }
    Ok(Output { command: name.into(), params, result, csv: table.to_csv(), pretty, passed: true })
}

fn restriction(a: &RestrictionArgs) -> Result<Output> {
    let n = a.n.unwrap_or(2 * a.r);
    if a.d == 0 || a.d > a.r {
        return Err(Error::InvalidParameter(format!("restriction needs 1 <= d <= r, got d={}, r={}", a.d, a.r)));
    }
    // Above dim LG(d,2r) the target is zero, so only lower degrees carry information.
    let p_max = a.max_half_degree.unwrap_or(PresentationKind::Isotropic { d: a.d, r: a.r }.dimension() as u32);
    let rep = restriction_report(a.d, n, a.r, p_max)?;
    let params = json!({"d": a.d, "n": n, "r": a.r, "max_half_degree": p_max});
    let mut csv = String::from("half_degree,rank_source,rank_target,kernel_rank,surjective,injective\n");
    let mut pretty = format!("G({},{n}) -> LG({},{n}), by half-degree p (cohomological degree 2p)\n", a.d, a.d);
    for row in &rep.rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.half_degree, row.rank_source, row.rank_target, row.kernel_rank, row.surjective, row.injective
        ));
        pretty.push_str(&format!(
            "  half-degree {:<3} {} -> {}  {}\n",
            row.half_degree,
            row.rank_source,
            row.rank_target,
            if row.bijective { "bijective" } else if row.surjective { "surjective" } else { "NOT surjective" }
        ));
    }
    pretty.push_str(&format!("{}\n", if rep.passed { "pass" } else { "FAIL" }));
    let passed = rep.passed;
    Ok(Output { command: "restriction".into(), params, result: to_value(&rep), csv, pretty, passed })
}

fn cells(cmd: &CellsCommand) -> Result<Output> {
    match cmd {
        CellsCommand::Enumerate(c) => {
            let sigs = enumerate_orbit_signatures(c.n, c.d, c.r)?;
            let mut rows = Vec::new();
            let mut csv = String::from("jumps,kernel_count,dimension\n");
            let mut pretty = format!("{} cells\n", sigs.len());
            for s in &sigs {
                let dim = orbit_dimension(s, c.n, c.d, c.r)?;
                let jumps: Vec<String> = s.jumps.iter().map(|j| j.to_string()).collect();
                csv.push_str(&format!("{},{},{dim}\n", jumps.join(" "), s.kernel_count));
                pretty.push_str(&format!("  jumps ({}) c_k={} dim {dim}\n", jumps.join(","), s.kernel_count));
                rows.push(json!({"jumps": s.jumps, "kernel_count": s.kernel_count, "dimension": dim}));
            }
            let params = json!({"n": c.n, "d": c.d, "r": c.r});
            let result = json!({"count": sigs.len(), "cells": rows});
            Ok(Output { command: "cells enumerate".into(), params, result, csv, pretty, passed: true })
        }
        CellsCommand::Chow { cell: c, p_max } => {
            let p_max = p_max.unwrap_or_else(|| cell_histogram(c.n, c.d, c.r).map_or(0, |h| h.len().max(1) as u32 - 1));
            let t = chow_ranks_decomposition(c.n, c.d, c.r, p_max)?;
            let params = json!({"n": c.n, "d": c.d, "r": c.r, "p_max": p_max});
            let mut pretty = format!("rank A_p(LG({}, V; {})), dim V = {}\n", c.d, 2 * c.r, c.n);
            for (p, r) in t.ranks().iter().enumerate() {
                pretty.push_str(&format!("  A_{p:<3} {r}\n"));
            }
            let mut csv = String::from("p,rank\n");
            for (p, r) in t.ranks().iter().enumerate() {
                csv.push_str(&format!("{p},{r}\n"));
            }
            Ok(Output { command: "cells chow".into(), params, result: to_value(&t), csv, pretty, passed: true })
        }
        CellsCommand::Verify { cell: c, p_max } => {
            let hist = cell_histogram(c.n, c.d, c.r)?;
            let p_max = p_max.unwrap_or(hist.len().max(1) as u32 - 1);
            let chow = chow_ranks_decomposition(c.n, c.d, c.r, p_max)?;
            let mismatch = (0..=p_max as usize).find(|&p| hist.get(p).copied().unwrap_or(0) != chow.ranks()[p]);
            let bounds = verify_restriction_bounds_degenerate(c.n, c.d, c.r, p_max)?;
            let passed = mismatch.is_none() && bounds.passed;
            let params = json!({"n": c.n, "d": c.d, "r": c.r, "p_max": p_max});
            let result = json!({
                "histogram": hist,
                "decomposition": chow.ranks(),
                "histogram_matches": mismatch.is_none(),
                "first_mismatch": mismatch,
                "restriction_bounds": to_value(&bounds),
                "passed": passed,
            });
            let mut csv = String::from("p,cells,decomposition,grassmannian\n");
            for row in &bounds.rows {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    row.p,
                    hist.get(row.p as usize).copied().unwrap_or(0),
                    row.rank_isotropic,
                    row.rank_grassmannian
                ));
            }
            let pretty = format!(
                "histogram {:?}\ndecomposition {:?}\nrank bounds vs G({},{}) (equality for p <= {}): {}\n{}\n",
                hist,
                chow.ranks(),
                c.d,
                c.n,
                bounds.equality_up_to,
                if bounds.passed { "ok" } else { bounds.witness.as_deref().unwrap_or("failed") },
                if passed { "pass" } else { "FAIL" }
            );
            Ok(Output { command: "cells verify".into(), params, result, csv, pretty, passed })
        }
    }
}

fn partitions(cmd: &PartitionsCommand) -> Result<Output> {
    match *cmd {
        PartitionsCommand::Count { q, max_part, max_length, strict, list } => {
            let (count, listed): (String, Option<Vec<Vec<u32>>>) = if strict {
                let c = strict_partition_counts(max_part, q).pop().unwrap_or_default();
                let l = list.then(|| enumerate_strict_partitions(q, max_part).into_iter().map(Vec::from).collect());
                (c.to_string(), l)
            } else {
                let bx = match max_length {
                    Some(l) => BoxConstraint::new(max_part, l),
                    None => BoxConstraint::unbounded_length(max_part),
                };
                let c = box_partition_counts(bx, q).pop().unwrap_or_default();
                let l = list.then(|| enumerate_box_partitions(q, bx).into_iter().map(Vec::from).collect());
                (c.to_string(), l)
            };
            let params = json!({"q": q, "max_part": max_part, "max_length": max_length, "strict": strict});
            let mut result = json!({"count": count});
            let mut pretty = format!("{count}\n");
            if let Some(l) = &listed {
                result["partitions"] = json!(l);
                for p in l {
                    pretty.push_str(&format!("  {p:?}\n"));
                }
            }
            let csv = format!("q,count\n{q},{count}\n");
            Ok(Output { command: "partitions count".into(), params, result, csv, pretty, passed: true })
        }
        PartitionsCommand::Bijection { q_max, r } => {
            let rep = verify_doubling_bijection(q_max, r);
            let mut csv = String::from("weight,partitions,convolution,pairs_checked\n");
            let mut pretty = String::new();
            for row in &rep.rows {
                csv.push_str(&format!("{},{},{},{}\n", row.weight, row.partitions, row.convolution, row.pairs_checked));
                pretty.push_str(&format!("  q={:<3} {} = {}\n", row.weight, row.partitions, row.convolution));
            }
            pretty.push_str(if rep.passed { "pass\n" } else { "FAIL\n" });
            let params = json!({"q_max": q_max, "r": r});
            let passed = rep.passed;
            Ok(Output { command: "partitions bijection".into(), params, result: to_value(&rep), csv, pretty, passed })
        }
    }
}

fn examples_output(command: &str, params: Value, reports: Vec<ExampleReport>) -> Output {
    let passed = reports.iter().all(|r| r.matches);
    let mut csv = String::from("name,parameters,match\n");
    let mut pretty = String::new();
    for r in &reports {
        csv.push_str(&format!("{},\"{}\",{}\n", r.name, r.parameters.to_string().replace('"', "\"\""), r.matches));
        pretty.push_str(&r.to_text());
    }
    pretty.push_str(&format!("{} reports, {}\n", reports.len(), if passed { "all match" } else { "MISMATCH" }));
    let result = json!({"reports": to_value(&reports), "passed": passed});
    Output { command: command.into(), params, result, csv, pretty, passed }
}

fn examples(cmd: &ExamplesCommand) -> Result<Output> {
    let ExamplesCommand::Run { name } = cmd;
    let reports = match name {
        Some(n) => run_example(n)?,
        None => run_all_examples()?,
    };
    Ok(examples_output("examples run", json!({"name": name}), reports))
}

fn verify_all(cache: Option<&DiskCache>) -> Result<Output> {
    let mut checks: Vec<(String, bool)> = Vec::new();
    for n in 1..=6 {
        for d in 1..=n {
            let kind = PresentationKind::Grassmannian { d, n };
            let (_, t) = cached_table(cache, kind, 2 * kind.dimension() as u32)?;
            let expected = box_partition_counts(BoxConstraint::new((n - d) as u32, d), kind.dimension() as u32);
            let ok = t.is_torsion_free() && t.rows.iter().zip(&expected).all(|(row, c)| c == &row.rank.into());
            checks.push((format!("ring G({d},{n}) = box counts"), ok));
        }
    }
    for r in 1..=3 {
        for d in 1..=r {
            let kind = PresentationKind::Isotropic { d, r };
            let (_, t) = cached_table(cache, kind, 2 * kind.dimension() as u32)?;
            let hist = cell_histogram(2 * r as u32, d, r as u32)?;
            checks.push((format!("ring LG({d},{}) = cell histogram", 2 * r), t.ranks() == hist));
            let rep = restriction_report(d, 2 * r, r, kind.dimension() as u32)?;
            checks.push((format!("restriction G({d},{0}) -> LG({d},{0})", 2 * r), rep.passed));
        }
        checks.push((format!("Q̃ basis r={r}"), qtilde_basis_report(r)?.passed));
    }
    for n in 1..=6u32 {
        for r in 0..=n / 2 {
            for d in 0..=(n - r) as usize {
                let hist = cell_histogram(n, d, r)?;
                let p_max = hist.len() as u32 - 1;
                let chow = chow_ranks_decomposition(n, d, r, p_max)?;
                let bounds = verify_restriction_bounds_degenerate(n, d, r, p_max)?;
                checks.push((format!("cells n={n} d={d} r={r}"), chow.ranks() == hist && bounds.passed));
            }
        }
    }
    checks.push(("doubling bijection q<=20, r<=4".into(), (0..=4).all(|r| verify_doubling_bijection(20, r).passed)));
    checks.push(("growth inequalities".into(), verify_growth_inequalities(12, 100).passed));
    for rep in run_all_examples()? {
        checks.push((format!("example {} {}", rep.name, rep.parameters), rep.matches));
    }
    let passed = checks.iter().all(|(_, ok)| *ok);
    let mut csv = String::from("check,passed\n");
    let mut pretty = String::new();
    for (name, ok) in &checks {
        csv.push_str(&format!("\"{}\",{ok}\n", name.replace('"', "\"\"")));
        pretty.push_str(&format!("{} {name}\n", if *ok { "ok  " } else { "FAIL" }));
    }
    pretty.push_str(&format!("{} checks, {}\n", checks.len(), if passed { "all passed" } else { "FAILURES" }));
    let result = json!({
        "checks": checks.iter().map(|(n, ok)| json!({"name": n, "passed": ok})).collect::<Vec<_>>(),
        "passed": passed,
    });
    Ok(Output { command: "verify all".into(), params: json!({}), result, csv, pretty, passed })
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let cache = DiskCache::resolve(cli.cache_dir.clone());
    match &cli.command {
        Command::Thresholds(a) => thresholds(a),
        Command::Betti(b) => betti(b),
        Command::Ring(r) => ring(r, cache.as_ref()),
        Command::Restriction(a) => restriction(a),
        Command::Cells(c) => cells(c),
        Command::Partitions(p) => partitions(p),
        Command::Examples(e) => examples(e),
        Command::Verify(VerifyCommand::All) => verify_all(cache.as_ref()),
    }
}

fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => {
            let mut doc = Map::new();
            doc.insert("spec_version".into(), json!(FORMAT_VERSION));
            doc.insert("command".into(), json!(out.command));
            doc.insert("params".into(), out.params.clone());
            match &out.result {
                Value::Object(m) => doc.extend(m.clone()),
                other => {
                    doc.insert("result".into(), other.clone());
                }
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
            s.push('\n');
            s
        }
        Format::Csv => out.csv.clone(),
        Format::Pretty => out.pretty.clone(),
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `stdout` and diagnostics to `stderr`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = stdout.write_all(text.as_bytes());
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { 2 } else { 0 }
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let _ = stdout.write_all(render(&out, cli.format).as_bytes());
            if out.passed {
                0
            } else {
                let _ = writeln!(stderr, "verification failed");
                3
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::InvalidParameter(_) => 2,
                Error::Verification(_) => 3,
                Error::Overflow(_) | Error::Cache(_) => 1,
            }
        }
    }
}
