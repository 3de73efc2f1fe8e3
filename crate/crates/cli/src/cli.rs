//! Argument parsing and subcommand dispatch.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use modinv_core::chiral::{
    branching_data_of, chiral_indices, chiral_table, decompose_gram, gram_matrix, parse_theta,
    sector_counts, TableRow,
};
use modinv_core::graph_algebra::{eigen_gauge, graph_structure_constants, Positivity};
use modinv_core::iso::identify_ade;
use modinv_core::modinv::{
    enumerate_invariants, name_su2_invariant, permutation_criterion, su2_ade_catalog,
    su2_named_invariant, su3_named_invariants, MassMatrix, DEFAULT_BUDGET,
};
use modinv_core::mtc::{
    check_modular, cyclic_group_dual, cyclic_group_ring, ising_fusion_ring, ising_modular_data,
    su2_fusion_closed_form, su2_modular_data, sun_modular_data, verlinde_fusion, Family,
    FusionRing, ModularData,
};
use modinv_core::nimrep::{
    ade_graph, fused_adjacencies, spectrum_vs_diagonal, AdeKind, SpectrumEntry, SPECTRUM_TOL,
};
use modinv_core::Error as CoreError;
use serde::Serialize;

use crate::dot::{case_document, emit_dot};
use crate::format::{fmt12, fmt12_clean, int_matrix};
use crate::json::{export_modular_data, import_modular_data, DossierJson, InvariantJson, InvariantsJson};

/// Relative `--out` paths are resolved against this directory when set.
pub const OUT_DIR_VAR: &str = "MODINV_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "modinv", version, about = "Modular invariants, nimreps and A-D-E sector data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Modular data: labels, dimensions, twists, S.
    Show {
        #[command(flatten)]
        source: Source,
        /// Re-import and print an exported JSON file instead.
        #[arg(long, conflicts_with = "family")]
        from: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Fusion rules `a x b = Σ N c`.
    Fusion {
        #[command(flatten)]
        source: Source,
    },
    /// Exhaustive search for modular invariants.
    Invariants {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Named SU(2) invariants at one level.
    Catalog {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        json: bool,
    },
    /// Spectra of the fused adjacency matrices against an invariant's diagonal.
    Nimrep {
        #[arg(long)]
        graph: String,
        /// Invariants JSON; the entry named like the graph is used.
        #[arg(long)]
        invariant: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Structure constants of the graph algebra.
    GraphAlgebra {
        #[arg(long)]
        graph: String,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Sector counts for every SU(2) invariant up to a level.
    ChiralTable {
        #[arg(long)]
        max_level: usize,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decompose the Gram matrix of a multiplicity vector.
    Gram {
        #[arg(long)]
        level: usize,
        /// e.g. `id+l8+l16`
        #[arg(long)]
        theta: String,
    },
    /// DOT file for a case: `G_1`, or the full system for D_odd.
    EmitGraph {
        #[arg(long)]
        case: String,
        /// Written to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Su2,
    Su3,
    Su4,
    Ising,
    Group,
}

#[derive(Debug, Args)]
pub struct Source {
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Level `k`, or the group order for `group`.
    #[arg(long)]
    pub level: Option<usize>,
}

/// Exit status classes.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments; exit 2.
    Usage(String),
    /// A check did not pass, or the computation failed; exit 1.
    Verification(String),
    /// Stdout was closed by the reader; exit 0 quietly.
    BrokenPipe,
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 1,
            Failure::BrokenPipe => 0,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Verification(m) => write!(f, "{m}"),
            Failure::BrokenPipe => write!(f, "output closed"),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Verification(format!("{e:#}"))
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Verification(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::BrokenPipe;
        }
        Failure::Verification(e.to_string())
    }
}

fn usage(flag: &str, e: impl fmt::Display) -> Failure {
    Failure::Usage(format!("{flag}: {e}"))
}

type Outcome = Result<(), Failure>;

pub fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Show { source, from, json } => show(&source, from.as_deref(), json, out),
        Command::Fusion { source } => fusion(&source, out),
        Command::Invariants { source, budget, json } => invariants(&source, budget, json, out),
        Command::Catalog { level, json } => catalog(level, json, out),
        Command::Nimrep { graph, invariant, csv } => nimrep(&graph, invariant.as_deref(), csv, out),
        Command::GraphAlgebra { graph, csv, json } => graph_algebra(&graph, csv, json, out),
        Command::ChiralTable { max_level, csv, json } => table(max_level, csv, json, out),
        Command::Gram { level, theta } => gram(level, &theta, out),
        Command::EmitGraph { case, out: path } => emit_graph(&case, path.as_deref(), out),
    }
}

fn need_level(source: &Source) -> Result<usize, Failure> {
    source.level.ok_or_else(|| usage("--level", "required for this family"))
}

fn modular_data(source: &Source) -> Result<ModularData, Failure> {
    let family = source.family.ok_or_else(|| usage("--family", "required"))?;
    let level_err = |e: CoreError| usage("--level", e);
    match family {
        FamilyArg::Su2 => su2_modular_data(need_level(source)?).map_err(level_err),
        FamilyArg::Su3 => sun_modular_data(3, need_level(source)?).map_err(level_err),
        FamilyArg::Su4 => sun_modular_data(4, need_level(source)?).map_err(level_err),
        FamilyArg::Ising => Ok(ising_modular_data()),
        FamilyArg::Group => cyclic_group_dual(need_level(source)?).map_err(level_err),
    }
}

fn show(source: &Source, from: Option<&Path>, json: bool, out: &mut dyn Write) -> Outcome {
    let md = match from {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            import_modular_data(&text)?
        }
        None => modular_data(source)?,
    };
    if json {
        out.write_all(export_modular_data(&md).as_bytes())?;
        return Ok(());
    }
    let family = md.family();
    writeln!(out, "family: {}", family.name())?;
    if let Some(level) = family.level() {
        writeln!(out, "level: {level}")?;
    }
    writeln!(out, "rank: {}", md.rank())?;
    writeln!(out, "central charge: {}", fmt12(md.central_charge()))?;
    writeln!(out, "global index: {}", fmt12(md.global_index()))?;
    writeln!(out, "degenerate: {}", md.is_degenerate())?;
    writeln!(out, "label\tdim\ttwist/2pi\tdual")?;
    for (i, label) in md.labels().iter().enumerate() {
        let phase = md.twists()[i].arg() / std::f64::consts::TAU;
        let phase = phase.rem_euclid(1.0);
        let phase = if (1.0 - phase).abs() < 1e-12 { 0.0 } else { phase };
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            label.display,
            fmt12(md.dims()[i]),
            fmt12_clean(phase),
            md.labels()[md.dual()[i]].display
        )?;
    }
    writeln!(out, "S (real part):")?;
    for a in 0..md.rank() {
        let row: Vec<String> = (0..md.rank()).map(|b| fmt12_clean(md.s()[(a, b)].re)).collect();
        writeln!(out, "  {}", row.join(" "))?;
    }
    if md.s().iter().any(|z| z.im.abs() > 1e-12) {
        writeln!(out, "S (imaginary part):")?;
        for a in 0..md.rank() {
            let row: Vec<String> = (0..md.rank()).map(|b| fmt12_clean(md.s()[(a, b)].im)).collect();
            writeln!(out, "  {}", row.join(" "))?;
        }
    }
    let check = check_modular(&md);
    writeln!(
        out,
        "checks: (ST)^3 = S^2 {}, S^2 = C {}, unitary {}",
        pass(check.st_cubed.passed),
        pass(check.s_squared_conjugation.passed),
        pass(check.s_unitary.passed)
    )?;
    Ok(())
}

fn pass(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn fusion_ring(source: &Source) -> Result<FusionRing, Failure> {
    match source.family {
        Some(FamilyArg::Su2) => su2_fusion_closed_form(need_level(source)?).map_err(|e| usage("--level", e)),
        Some(FamilyArg::Ising) => Ok(ising_fusion_ring()),
        Some(FamilyArg::Group) => cyclic_group_ring(need_level(source)?).map_err(|e| usage("--level", e)),
        _ => Ok(verlinde_fusion(&modular_data(source)?)?),
    }
}

fn fusion(source: &Source, out: &mut dyn Write) -> Outcome {
    let ring = fusion_ring(source)?;
    let labels = ring.labels();
    let l = ring.rank();
    for a in 0..l {
        for b in a..l {
            let terms: Vec<String> = (0..l)
                .filter_map(|c| match ring.coeff(a, b, c) {
                    0 => None,
                    1 => Some(labels[c].display.clone()),
                    n => Some(format!("{n}*{}", labels[c].display)),
                })
                .collect();
            writeln!(out, "{} x {} = {}", labels[a].display, labels[b].display, terms.join(" + "))?;
        }
    }
    let axioms = ring.check_axioms();
    if !axioms.all() {
        return Err(Failure::Verification(format!("fusion axioms fail: {axioms:?}")));
    }
    Ok(())
}

/// Name for an enumerated invariant: A-D-E type for SU(2), the conformal
/// inclusion names for SU(3), otherwise by shape.
fn invariant_name(md: &ModularData, z: &MassMatrix, index: usize) -> String {
    match md.family() {
        Family::Su { rank: 2, level } => {
            if let Ok(kind) = name_su2_invariant(level, z) {
                if su2_named_invariant(kind) == *z {
                    return kind.to_string();
                }
            }
        }
        Family::Su { rank: 3, level } => {
            if let Some(n) = su3_named_invariants().into_iter().find(|n| n.level == level && n.z == *z) {
                return n.name;
            }
        }
        _ => {}
    }
    let l = z.dim();
    if *z == MassMatrix::identity(l) {
        "diagonal".into()
    } else if z.as_permutation().is_some_and(|p| p.iter().enumerate().all(|(i, &j)| md.dual()[i] == j)) {
        "conjugation".into()
    } else if z.as_permutation().is_some() {
        format!("permutation{index}")
    } else {
        format!("Z{index}")
    }
}

fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Outcome {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| anyhow!(e))?;
    text.push('\n');
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn invariant_text(inv: &InvariantJson, labels: &[String], out: &mut dyn Write) -> Outcome {
    let z = inv.mass_matrix()?;
    writeln!(out, "{}: sum Z^2 = {}, permutation = {}", inv.name, inv.sumsq, inv.permutation)?;
    let diag: Vec<String> = inv
        .diag
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(i, &m)| if m == 1 { labels[i].clone() } else { format!("{m}*{}", labels[i]) })
        .collect();
    writeln!(out, "  exponents: {}", diag.join(" "))?;
    for line in int_matrix(z.matrix()).lines() {
        writeln!(out, "  {line}")?;
    }
    Ok(())
}

fn invariants(source: &Source, budget: u64, json: bool, out: &mut dyn Write) -> Outcome {
    let md = modular_data(source)?;
    let ring = verlinde_fusion(&md).ok();
    let e = enumerate_invariants(&md, budget)?;
    let list: Vec<InvariantJson> = e
        .invariants
        .iter()
        .enumerate()
        .map(|(i, z)| {
            let perm = ring
                .as_ref()
                .and_then(|r| permutation_criterion(r, z).ok())
                .is_some_and(|c| c.permutation.is_some());
            InvariantJson::new(invariant_name(&md, z, i), z, perm)
        })
        .collect();
    let doc = InvariantsJson {
        family: md.family().name(),
        level: md.family().level(),
        invariants: list,
    };
    if json {
        write_json(&doc, out)?;
    } else {
        let labels: Vec<String> = md.labels().iter().map(|l| l.display.clone()).collect();
        writeln!(
            out,
            "{} invariants (commutant dimension {}, {} nodes)",
            doc.invariants.len(),
            e.commutant_dim,
            e.nodes
        )?;
        for inv in &doc.invariants {
            invariant_text(inv, &labels, out)?;
        }
    }
    if !e.complete {
        return Err(Failure::Verification(format!(
            "search stopped after {} nodes; the list may be incomplete",
            e.nodes
        )));
    }
    Ok(())
}

fn catalog(level: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let cat = su2_ade_catalog(level).map_err(|e| usage("--level", e))?;
    let ring = su2_fusion_closed_form(level)?;
    let list: Vec<InvariantJson> = cat
        .entries
        .iter()
        .map(|e| {
            let perm = permutation_criterion(&ring, &e.z).is_ok_and(|c| c.permutation.is_some());
            InvariantJson::new(e.name(), &e.z, perm)
        })
        .collect();
    let doc = InvariantsJson {
        family: "su2".into(),
        level: Some(level),
        invariants: list,
    };
    if json {
        write_json(&doc, out)?;
    } else {
        let labels: Vec<String> = (0..=level).map(|j| j.to_string()).collect();
        for inv in &doc.invariants {
            invariant_text(inv, &labels, out)?;
        }
    }
    if !cat.complete {
        return Err(Failure::Verification("catalog search incomplete".into()));
    }
    Ok(())
}

fn read_invariant(path: &Path, graph: &str, level: usize) -> Result<MassMatrix, Failure> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc: InvariantsJson = serde_json::from_str(&text)
        .map_err(|e| usage("--invariant", format!("{}: {e}", path.display())))?;
    if doc.level != Some(level) {
        return Err(usage("--invariant", format!("file is at level {:?}, graph at {level}", doc.level)));
    }
    let entry = match doc.invariants.iter().find(|i| i.name == graph) {
        Some(e) => e,
        None if doc.invariants.len() == 1 => &doc.invariants[0],
        None => return Err(usage("--invariant", format!("no invariant named {graph}"))),
    };
    Ok(entry.mass_matrix()?)
}

fn nimrep(graph: &str, invariant: Option<&Path>, csv: bool, out: &mut dyn Write) -> Outcome {
    let g = ade_graph(graph).map_err(|e| usage("--graph", e))?;
    let k = g.level();
    if k == 0 {
        return Err(usage("--graph", format!("{} has level 0", g.name())));
    }
    let z = match invariant {
        Some(path) => read_invariant(path, &g.name(), k)?,
        None => su2_named_invariant(g.kind),
    };
    let md = su2_modular_data(k).map_err(|e| usage("--graph", e))?;
    let family = fused_adjacencies(&g)?;
    let report = spectrum_vs_diagonal(&family, &md, &z)?;
    if csv {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(["graph", "nu", "eigenvalue", "multiplicity", "matched"]).map_err(|e| anyhow!(e))?;
        for nu in &report.per_nu {
            for (value, mult, labels) in grouped(&nu.entries) {
                w.write_record([
                    report.graph.clone(),
                    nu.nu.to_string(),
                    fmt12_clean(value),
                    mult.to_string(),
                    labels,
                ])
                .map_err(|e| anyhow!(e))?;
            }
        }
        w.flush()?;
    } else {
        writeln!(out, "graph {} at level {k}, {} vertices", report.graph, g.vertices())?;
        for nu in &report.per_nu {
            let parts: Vec<String> = grouped(&nu.entries)
                .into_iter()
                .map(|(value, mult, labels)| format!("{}^{mult} [{labels}]", fmt12_clean(value)))
                .collect();
            writeln!(out, "nu={} {}: {}", nu.nu, pass(nu.matched), parts.join(", "))?;
        }
        writeln!(out, "spectrum check: {}", pass(report.passed))?;
    }
    if !report.passed {
        return Err(Failure::Verification(format!("{}: spectra do not match the invariant", report.graph)));
    }
    Ok(())
}

/// Distinct eigenvalues with multiplicity and the matched labels
/// (space separated, `?` for an unmatched eigenvalue).
fn grouped(entries: &[SpectrumEntry]) -> Vec<(f64, usize, String)> {
    let mut groups: Vec<(f64, Vec<Option<usize>>)> = Vec::new();
    for e in entries {
        match groups.iter_mut().find(|(v, _)| (v - e.eigenvalue).abs() < SPECTRUM_TOL) {
            Some((_, labels)) => labels.push(e.matched),
            None => groups.push((e.eigenvalue, vec![e.matched])),
        }
    }
    groups.sort_by(|a, b| b.0.total_cmp(&a.0));
    groups
        .into_iter()
        .map(|(v, mut labels)| {
            labels.sort();
            let text: Vec<String> = labels.iter().map(|m| m.map_or("?".into(), |l| l.to_string())).collect();
            (v, labels.len(), text.join(" "))
        })
        .collect()
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerdictJson {
    graph: String,
    verdict: &'static str,
    unit: usize,
    worst_negative: f64,
    associative: Option<bool>,
}

fn graph_algebra(graph: &str, csv: bool, json: bool, out: &mut dyn Write) -> Outcome {
    let g = ade_graph(graph).map_err(|e| usage("--graph", e))?;
    let fusion = graph_structure_constants(&eigen_gauge(&g)?)?;
    let positive = fusion.verdict == Positivity::Positive;
    let associative = positive.then(|| fusion.is_associative());
    let verdict = if positive { "positive" } else { "negative" };
    let v = fusion.vertices;
    if csv {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(["graph", "a", "b", "c", "value", "rounded", "flag"]).map_err(|e| anyhow!(e))?;
        for a in 0..v {
            for b in 0..v {
                for c in 0..v {
                    let n = fusion.rounded(a, b, c);
                    let flag = if n < 0 { "negative" } else { "ok" };
                    w.write_record([
                        fusion.graph.clone(),
                        a.to_string(),
                        b.to_string(),
                        c.to_string(),
                        fmt12_clean(fusion.value(a, b, c)),
                        n.to_string(),
                        flag.to_string(),
                    ])
                    .map_err(|e| anyhow!(e))?;
                }
            }
        }
        w.flush()?;
    } else if json {
        write_json(
            &VerdictJson {
                graph: fusion.graph.clone(),
                verdict,
                unit: fusion.unit,
                worst_negative: fusion.worst_negative,
                associative,
            },
            out,
        )?;
    } else {
        writeln!(out, "graph {}: {verdict}, unit vertex {}", fusion.graph, fusion.unit)?;
        if !positive {
            writeln!(out, "most negative constant: {}", fmt12(fusion.worst_negative))?;
        }
        if let Some(a) = associative {
            writeln!(out, "associative: {a}")?;
        }
        for a in 0..v {
            writeln!(out, "N_{a}:")?;
            let m = modinv_core::IntMatrix::from_fn(v, v, |b, c| fusion.rounded(a, b, c));
            for line in int_matrix(&m).lines() {
                writeln!(out, "  {line}")?;
            }
        }
    }
    if associative == Some(false) {
        return Err(Failure::Verification(format!("{}: non-negative tensor is not associative", fusion.graph)));
    }
    Ok(())
}

fn table(max_level: usize, csv: bool, json: bool, out: &mut dyn Write) -> Outcome {
    let rows = chiral_table(max_level).map_err(|e| usage("--max-level", e))?;
    if json {
        let mut docs = Vec::with_capacity(rows.len());
        for r in &rows {
            docs.push(dossier(r)?);
        }
        return write_json(&docs, out);
    }
    let header = ["invariant", "level", "#MM", "#MN", "#chiral", "#ambi", "gamma"];
    let fields = |r: &TableRow| {
        [
            r.name(),
            r.level.to_string(),
            r.counts.mm.to_string(),
            r.counts.mn.to_string(),
            r.counts.chiral.to_string(),
            r.counts.ambi.to_string(),
            r.gamma.to_string(),
        ]
    };
    if csv {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(header).map_err(|e| anyhow!(e))?;
        for r in &rows {
            w.write_record(fields(r)).map_err(|e| anyhow!(e))?;
        }
        w.flush()?;
    } else {
        writeln!(out, "{:<10}{:>6}{:>6}{:>6}{:>9}{:>7}  {}", header[0], header[1], header[2], header[3], header[4], header[5], header[6])?;
        for r in &rows {
            let f = fields(r);
            writeln!(out, "{:<10}{:>6}{:>6}{:>6}{:>9}{:>7}  {}", f[0], f[1], f[2], f[3], f[4], f[5], f[6])?;
        }
    }
    Ok(())
}

fn dossier(r: &TableRow) -> Result<DossierJson, Failure> {
    let z = su2_named_invariant(r.kind);
    let md = su2_modular_data(r.level)?;
    let b = branching_data_of(r.kind);
    let idx = chiral_indices(&md, &z)?;
    let counts = sector_counts(&z, &b)?;
    Ok(DossierJson::new(&z, &b, idx, counts, r.gamma.to_string()))
}

fn gram(level: usize, theta: &str, out: &mut dyn Write) -> Outcome {
    let ring = su2_fusion_closed_form(level).map_err(|e| usage("--level", e))?;
    let t = parse_theta(theta, level + 1).map_err(|e| usage("--theta", e))?;
    let m = gram_matrix(&ring, &t).map_err(|e| usage("--theta", e))?;
    writeln!(out, "theta multiplicities: {t:?}")?;
    writeln!(out, "Gram matrix:")?;
    for line in int_matrix(&m).lines() {
        writeln!(out, "  {line}")?;
    }
    let dec = decompose_gram(&m, &ring)?;
    writeln!(out, "sectors: {} ({} search nodes)", dec.sectors(), dec.nodes)?;
    writeln!(out, "F:")?;
    for line in int_matrix(&dec.f).lines() {
        writeln!(out, "  {line}")?;
    }
    writeln!(out, "G1:")?;
    for line in int_matrix(&dec.g1).lines() {
        writeln!(out, "  {line}")?;
    }
    match identify_ade(&dec.g1) {
        Some(kind) => writeln!(out, "G1 is {kind}")?,
        None => writeln!(out, "G1 is not an A-D-E diagram")?,
    }
    Ok(())
}

fn resolve_out(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn emit_graph(case: &str, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let kind = AdeKind::parse(case).map_err(|e| usage("--case", e))?;
    let doc = case_document(&kind.to_string())?;
    let text = emit_dot(&doc);
    match path {
        Some(p) => {
            let target = resolve_out(p);
            std::fs::write(&target, text).with_context(|| format!("writing {}", target.display()))?;
            writeln!(out, "wrote {}", target.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}
