//! Subcommand definitions and their implementations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use affdem::demazure::demazure_product;
use affdem::grid::{default_grid_etas, face_grid, FaceCell};
use affdem::orders::{arrows_among, length, leq, leq_twisted_semidecision};
use affdem::parabolic::{classify, dominantize, is_appropriately_dominant};
use affdem::polytope::{
    build_polytope, check_same_coset, check_task_farce, contains, face_vertices, face_vertices_brute, inequalities,
};
use affdem::{AffineWeylGroup, DemazurePolytope, EtaContext, FaceSpec, OrderKind, Weight, WeylElt};
use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::json::{CoweightJson, ElementJson, InequalityJson, VertexJson, WeightJson};
use crate::parse::{parse_coweight, parse_kind, parse_weight, parse_word};

#[derive(Debug, Parser)]
#[command(name = "affdem", version, about = "Affine Weyl groups, Demazure products and Demazure polytopes")]
pub struct Cli {
    /// Root system tag such as A2, G2 or A3affine.
    #[arg(long = "type", global = true, env = "AFFDEM_TYPE", default_value = "A2")]
    pub root_type: String,

    /// Output format; dot is available for Hasse diagrams and face lattices.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe the root system.
    Rootsys,
    /// Compare elements or draw Hasse diagrams.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Demazure product `w * v`; accepts an optional leading type tag.
    Demazure(DemazureArgs),
    /// Coweight classification and parabolic factorization.
    #[command(subcommand)]
    Eta(EtaCmd),
    /// Demazure polytopes.
    #[command(subcommand)]
    Polytope(PolytopeCmd),
    /// Check the face description over a grid of inputs.
    Grid(GridArgs),
}

#[derive(Debug, Args)]
pub struct KindArgs {
    /// std, opp, semi or twisted.
    #[arg(long, default_value = "std")]
    pub kind: String,
    /// Twisting coweight, required for the twisted kind.
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum OrderCmd {
    /// Decide `x <= y`.
    Cmp {
        #[command(flatten)]
        kind: KindArgs,
        /// Search radius for twisted chains, in standard length.
        #[arg(long)]
        region_len: Option<usize>,
        x: String,
        y: String,
    },
    /// Arrows among all elements of standard length at most `max-len`.
    Hasse {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
}

#[derive(Debug, Args)]
pub struct DemazureArgs {
    #[command(flatten)]
    pub kind: KindArgs,
    /// `[TYPE] W V`.
    #[arg(num_args = 2..=3, required = true, allow_hyphen_values = true)]
    pub args: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum EtaCmd {
    /// Class, dominance and the subgroup `W(eta)`.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
    },
    /// Factor `w` as a coset representative times an element of `W(eta)`.
    Factorize {
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        w: String,
    },
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long, default_value = "L0", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub w: String,
}

#[derive(Debug, Subcommand)]
pub enum PolytopeCmd {
    /// The distinct vertices `q lambda` for `q <= w`.
    Vertices {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Inequalities with coset representatives of length at most `L`.
    Inequalities {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long = "L", default_value_t = 6)]
        max_len: usize,
    },
    /// Exact membership, with a violated inequality when one exists.
    Contains {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long = "L", default_value_t = 6)]
        max_len: usize,
    },
    /// The face of `(v, eta)`, checked against a direct scan.
    Face {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        v: String,
    },
    /// Inclusions among the faces of all inequalities up to length `L`.
    Lattice {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long = "L", default_value_t = 2)]
        max_len: usize,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Largest standard length of `w`.
    #[arg(long, default_value_t = 3)]
    pub max_w_len: usize,
    /// Largest standard length of `v`.
    #[arg(long, default_value_t = 2)]
    pub v_len: usize,
    /// Keep this many `w`, chosen at random.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Text to print and whether every check it reports passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn json(v: &impl serde::Serialize) -> Result<Self> {
        Ok(Output { text: serde_json::to_string_pretty(v)? + "\n", ok: true })
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let tag = match &cli.command {
        Command::Demazure(a) if a.args.len() == 3 => a.args[0].as_str(),
        _ => cli.root_type.as_str(),
    };
    let group = AffineWeylGroup::from_tag(tag)?;
    if cli.format == Format::Dot
        && !matches!(
            &cli.command,
            Command::Order(OrderCmd::Hasse { .. }) | Command::Polytope(PolytopeCmd::Lattice { .. })
        )
    {
        bail!("dot output is only available for `order hasse` and `polytope lattice`");
    }
    match &cli.command {
        Command::Rootsys => rootsys(&group),
        Command::Order(OrderCmd::Cmp { kind, region_len, x, y }) => order_cmp(&group, kind, *region_len, x, y),
        Command::Order(OrderCmd::Hasse { kind, max_len }) => hasse(&group, kind, *max_len, cli.format),
        Command::Demazure(a) => {
            let n = a.args.len();
            demazure(&group, &a.kind, &a.args[n - 2], &a.args[n - 1])
        }
        Command::Eta(EtaCmd::Classify { eta }) => eta_classify(&group, eta),
        Command::Eta(EtaCmd::Factorize { eta, w }) => eta_factorize(&group, eta, w),
        Command::Polytope(cmd) => polytope(&group, cmd, cli.format),
        Command::Grid(a) => grid(&group, a),
    }
}

fn elem(group: &AffineWeylGroup, u: &WeylElt) -> ElementJson {
    ElementJson::new(group, u)
}

fn rootsys(group: &AffineWeylGroup) -> Result<Output> {
    let d = group.data();
    let roots: Vec<Value> = (0..d.num_positive())
        .map(|r| json!({ "name": group.root_name(&affdem::AffineRoot::new(r, 0)), "coords": d.root(r) }))
        .collect();
    Output::json(&json!({
        "type": d.ty.to_string(),
        "rank": d.rank(),
        "finite_weyl_order": d.ty.weyl_order(),
        "cartan": d.cartan,
        "marks": d.marks,
        "comarks": d.comarks,
        "highest_root": d.root(d.theta()),
        "positive_roots": roots,
    }))
}

fn order_cmp(group: &AffineWeylGroup, k: &KindArgs, region_len: Option<usize>, x: &str, y: &str) -> Result<Output> {
    let kind = parse_kind(group, &k.kind, k.eta.as_deref())?;
    let (x, y) = (parse_word(group, x)?, parse_word(group, y)?);
    let (verdict, chain) = match &kind {
        OrderKind::Twisted(t) => {
            let radius = region_len.unwrap_or((group.std_length(&x).max(group.std_length(&y)) + 2) as usize);
            let region = group.ball(radius);
            match leq_twisted_semidecision(group, t, &x, &y, &region) {
                Some(c) => (Some(true), Some(c.iter().map(|u| elem(group, u)).collect::<Vec<_>>())),
                None => (None, None),
            }
        }
        _ => (Some(leq(group, &kind, &x, &y)?), None),
    };
    Output::json(&json!({
        "kind": kind.label(),
        "x": elem(group, &x),
        "y": elem(group, &y),
        "length_x": length(group, &kind, &x),
        "length_y": length(group, &kind, &y),
        "leq": verdict,
        "chain": chain,
    }))
}

fn hasse(group: &AffineWeylGroup, k: &KindArgs, max_len: usize, format: Format) -> Result<Output> {
    let kind = parse_kind(group, &k.kind, k.eta.as_deref())?;
    let mut elts = group.ball(max_len);
    group.sort_elements(&mut elts);
    let mut arrows = arrows_among(group, &kind, &elts);
    arrows.sort_by_key(|&(i, j, _)| (i, j));
    let names: Vec<String> = elts.iter().map(|u| group.name(u)).collect();
    if format == Format::Dot {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (u, name) in elts.iter().zip(&names) {
            writeln!(s, "  \"{name}\" [label=\"{name}\\n{}\"];", length(group, &kind, u))?;
        }
        for (i, j, beta) in &arrows {
            writeln!(s, "  \"{}\" -> \"{}\" [label=\"{}\"];", names[*i], names[*j], group.root_name(beta))?;
        }
        s.push_str("}\n");
        return Ok(Output { text: s, ok: true });
    }
    let nodes: Vec<Value> = elts
        .iter()
        .zip(&names)
        .map(|(u, name)| json!({ "name": name, "length": length(group, &kind, u), "element": elem(group, u) }))
        .collect();
    let edges: Vec<Value> = arrows
        .iter()
        .map(|(i, j, beta)| json!({ "from": names[*i], "to": names[*j], "root": group.root_name(beta) }))
        .collect();
    Output::json(&json!({ "kind": kind.label(), "nodes": nodes, "edges": edges }))
}

fn demazure(group: &AffineWeylGroup, k: &KindArgs, w: &str, v: &str) -> Result<Output> {
    let kind = parse_kind(group, &k.kind, k.eta.as_deref())?;
    let (w, v) = (parse_word(group, w)?, parse_word(group, v)?);
    let (p, x0) = demazure_product(group, &kind, &w, &v);
    Output::json(&json!({
        "kind": kind.label(),
        "w": elem(group, &w),
        "v": elem(group, &v),
        "product": elem(group, &p),
        "product_name": group.name(&p),
        "x0": elem(group, &x0),
    }))
}

fn eta_classify(group: &AffineWeylGroup, eta: &str) -> Result<Output> {
    let d = group.data();
    let eta = parse_coweight(d, eta)?;
    let class = classify(&eta);
    let dominant = is_appropriately_dominant(d, &eta)?;
    let mut out = json!({
        "eta": CoweightJson::new(&eta),
        "class": class.label(),
        "regular_order": OrderKind::regular_for(class).label(),
        "appropriately_dominant": dominant,
    });
    if dominant {
        let ctx = EtaContext::new(group, &eta)?;
        out["vanishing_set"] = json!(ctx.vanishing_set());
        out["generators"] = json!(ctx.generators().iter().map(|b| group.root_name(b)).collect::<Vec<_>>());
    } else {
        let (v, dom) = dominantize(group, &eta)?;
        out["dominantize"] = json!({ "v": elem(group, &v), "eta": CoweightJson::new(&dom) });
    }
    Output::json(&out)
}

fn eta_factorize(group: &AffineWeylGroup, eta: &str, w: &str) -> Result<Output> {
    let eta = parse_coweight(group.data(), eta)?;
    let ctx = EtaContext::new(group, &eta)?;
    let w = parse_word(group, w)?;
    let (rep, sub) = ctx.factorize(group, &w);
    let regular = OrderKind::regular_for(ctx.classification());
    let twisted = OrderKind::Twisted(affdem::Twist::new(group, &eta)?);
    Output::json(&json!({
        "w": elem(group, &w),
        "rep": elem(group, &rep),
        "sub": elem(group, &sub),
        "twisted_length": length(group, &twisted, &w),
        "rep_length": length(group, &regular, &rep),
        "sub_length": ctx.length(group, &sub),
    }))
}

fn build(group: &AffineWeylGroup, p: &PolyArgs) -> Result<DemazurePolytope> {
    let lambda = parse_weight(group.data(), &p.lambda)?;
    let w = parse_word(group, &p.w)?;
    Ok(build_polytope(group, &lambda, &w)?)
}

fn vertices_json(group: &AffineWeylGroup, vs: &[(Weight, WeylElt)]) -> Vec<VertexJson> {
    vs.iter().map(|(mu, q)| VertexJson::new(group, mu, q)).collect()
}

fn polytope(group: &AffineWeylGroup, cmd: &PolytopeCmd, format: Format) -> Result<Output> {
    match cmd {
        PolytopeCmd::Vertices { poly } => {
            let p = build(group, poly)?;
            Output::json(&json!({
                "lambda": WeightJson::new(&p.lambda),
                "w": elem(group, &p.w),
                "vertices": vertices_json(group, &p.vertices),
            }))
        }
        PolytopeCmd::Inequalities { poly, max_len } => {
            let p = build(group, poly)?;
            let ineqs: Vec<InequalityJson> =
                inequalities(group, &p, *max_len)?.iter().map(|i| InequalityJson::new(group, i)).collect();
            Output::json(&json!({
                "lambda": WeightJson::new(&p.lambda),
                "w": elem(group, &p.w),
                "L": max_len,
                "inequalities": ineqs,
            }))
        }
        PolytopeCmd::Contains { poly, mu, max_len } => {
            let p = build(group, poly)?;
            let mu = parse_weight(group.data(), mu)?;
            let inside = contains(&p, &mu)?;
            let mut violated = None;
            if !inside {
                for ineq in inequalities(group, &p, *max_len)? {
                    if !ineq.holds(group, &mu)? {
                        violated = Some(InequalityJson::new(group, &ineq));
                        break;
                    }
                }
            }
            Output::json(&json!({ "mu": WeightJson::new(&mu), "contains": inside, "violated": violated }))
        }
        PolytopeCmd::Face { poly, eta, v } => {
            let p = build(group, poly)?;
            let eta = parse_coweight(group.data(), eta)?;
            let v = parse_word(group, v)?;
            let spec = FaceSpec::new(group, &eta, &v)?;
            let fast = face_vertices(group, &p, &spec)?;
            let brute = face_vertices_brute(group, &p, &spec)?;
            let set =
                |x: &[(WeylElt, Weight)]| x.iter().map(|(_, m)| m.clone()).collect::<std::collections::HashSet<_>>();
            let agrees = set(&fast) == set(&brute);
            let same_coset = check_same_coset(group, &p, &spec)?;
            let task = check_task_farce(group, &p, &spec)?;
            let verts: Vec<VertexJson> = fast.iter().map(|(q, mu)| VertexJson::new(group, mu, q)).collect();
            let mut out = Output::json(&json!({
                "eta": CoweightJson::new(&eta),
                "v": elem(group, &v),
                "vertices": verts,
                "agrees_with_scan": agrees,
                "same_coset": same_coset,
                "subgroup_interval": task,
            }))?;
            out.ok = agrees && same_coset && task;
            Ok(out)
        }
        PolytopeCmd::Lattice { poly, max_len } => face_lattice(group, &build(group, poly)?, *max_len, format),
    }
}

/// Distinct faces cut out by the inequalities of length at most `max_len`,
/// keyed by their sorted vertex indices, with covering inclusions.
fn face_lattice(group: &AffineWeylGroup, p: &DemazurePolytope, max_len: usize, format: Format) -> Result<Output> {
    let index: BTreeMap<String, usize> =
        p.vertices.iter().enumerate().map(|(i, (mu, _))| (WeightKey(mu).to_string(), i)).collect();
    let mut faces: BTreeMap<Vec<usize>, String> = BTreeMap::new();
    faces.insert((0..p.vertices.len()).collect(), "polytope".to_string());
    for ineq in inequalities(group, p, max_len)? {
        let d = group.data();
        let mut members = Vec::new();
        for (mu, _) in &p.vertices {
            if d.pair(mu, &ineq.normal)? == ineq.rhs {
                members.push(index[&WeightKey(mu).to_string()]);
            }
        }
        let label = format!("{} i={} v={}", ineq.family.label(), ineq.index, group.name(&ineq.v));
        faces.entry(members).or_insert(label);
    }
    let keys: Vec<&Vec<usize>> = faces.keys().collect();
    let subset = |a: &Vec<usize>, b: &Vec<usize>| a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok());
    let mut covers = BTreeSet::new();
    for (i, a) in keys.iter().enumerate() {
        for (j, b) in keys.iter().enumerate() {
            if subset(a, b) && !keys.iter().any(|c| subset(a, c) && subset(c, b)) {
                covers.insert((i, j));
            }
        }
    }
    let names: Vec<String> = keys.iter().map(|k| format!("{k:?}")).collect();
    if format == Format::Dot {
        let mut s = String::from("digraph faces {\n  rankdir=BT;\n");
        for (k, name) in keys.iter().zip(&names) {
            writeln!(s, "  \"{name}\" [label=\"{}\\n{} vertices\"];", faces[*k], k.len())?;
        }
        for (i, j) in &covers {
            writeln!(s, "  \"{}\" -> \"{}\";", names[*i], names[*j])?;
        }
        s.push_str("}\n");
        return Ok(Output { text: s, ok: true });
    }
    let nodes: Vec<Value> = keys.iter().map(|k| json!({ "vertices": k, "source": faces[*k] })).collect();
    let edges: Vec<Value> = covers.iter().map(|(i, j)| json!({ "from": keys[*i], "to": keys[*j] })).collect();
    Output::json(&json!({
        "vertices": vertices_json(group, &p.vertices),
        "faces": nodes,
        "covers": edges,
    }))
}

struct WeightKey<'a>(&'a Weight);

impl std::fmt::Display for WeightKey<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn cell_json(c: &FaceCell) -> Value {
    json!({
        "lambda": c.lambda,
        "w": c.w,
        "eta": c.eta,
        "v": c.v,
        "faces_agree": c.faces_agree,
        "same_coset": c.same_coset,
        "subgroup_interval": c.task_farce,
        "vertices_on_face": c.vertices_on_face,
        "error": c.error,
    })
}

fn grid(group: &AffineWeylGroup, a: &GridArgs) -> Result<Output> {
    let d = group.data();
    let l0 = d.affine_fundamental_weight(0)?;
    let l01 = &l0 + &d.affine_fundamental_weight(1)?;
    let lambdas = vec![("L0".to_string(), l0), ("L0+L1".to_string(), l01)];
    let mut ws = group.ball(a.max_w_len);
    if let Some(k) = a.sample {
        ws.shuffle(&mut ChaCha8Rng::seed_from_u64(a.seed));
        ws.truncate(k);
        group.sort_elements(&mut ws);
    }
    let etas = default_grid_etas(group)?;
    let mut cells = face_grid(group, &lambdas, &ws, &etas, a.v_len)?;
    cells.sort_by(|x, y| (&x.lambda, &x.w, &x.eta, &x.v).cmp(&(&y.lambda, &y.w, &y.eta, &y.v)));
    let failures: Vec<Value> = cells.iter().filter(|c| !c.passed()).map(cell_json).collect();
    let mut out = Output::json(&json!({
        "type": d.ty.to_string(),
        "cells": cells.len(),
        "passed": cells.len() - failures.len(),
        "failures": failures,
    }))?;
    out.ok = out.ok && cells.iter().all(FaceCell::passed);
    Ok(out)
}
