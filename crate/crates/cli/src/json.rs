//! JSON documents for modular data, invariant lists and chiral dossiers.

use anyhow::{bail, ensure, Context, Result};
use modinv_core::chiral::{BranchingData, ChiralIndices, SectorCounts};
use modinv_core::modinv::MassMatrix;
use modinv_core::mtc::{Family, Label, ModularData};
use modinv_core::{Complex64, ComplexMatrix, IntMatrix};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for JsonComplex {
    fn from(z: Complex64) -> Self {
        JsonComplex { re: z.re, im: z.im }
    }
}

impl From<JsonComplex> for Complex64 {
    fn from(z: JsonComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Floats are written at full precision so that import reproduces the data
/// exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModularDataJson {
    pub family: String,
    pub level: Option<usize>,
    pub labels: Vec<String>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<JsonComplex>>,
    #[serde(rename = "T_phases")]
    pub t_phases: Vec<JsonComplex>,
    pub dims: Vec<f64>,
    pub w: f64,
    pub c: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<Vec<usize>>,
}

impl ModularDataJson {
    pub fn from_data(md: &ModularData) -> Self {
        let l = md.rank();
        ModularDataJson {
            family: md.family().name(),
            level: md.family().level(),
            labels: md.labels().iter().map(|l| l.display.clone()).collect(),
            s: (0..l).map(|a| (0..l).map(|b| md.s()[(a, b)].into()).collect()).collect(),
            t_phases: md.t().iter().map(|&z| z.into()).collect(),
            dims: md.dims().to_vec(),
            w: md.global_index(),
            c: md.central_charge(),
            dual: Some(md.dual().to_vec()),
        }
    }

    /// Rebuild and re-validate. `dims`, `w` must agree with the values
    /// derived from `S`.
    pub fn to_data(&self) -> Result<ModularData> {
        let l = self.labels.len();
        ensure!(self.s.len() == l, "S has {} rows for {l} labels", self.s.len());
        for row in &self.s {
            ensure!(row.len() == l, "S row has {} entries for {l} labels", row.len());
        }
        let s = ComplexMatrix::from_fn(l, l, |a, b| self.s[a][b].into());
        let labels = self.labels.iter().enumerate().map(|(i, d)| Label::new(i, d.clone())).collect();
        let t = self.t_phases.iter().map(|&z| z.into()).collect();
        let family = parse_family(&self.family, self.level)?;
        let md = ModularData::from_s_and_t(family, labels, s, t, self.c, self.dual.clone())?;
        ensure!(self.dims.len() == l, "dims has {} entries for {l} labels", self.dims.len());
        for (i, (a, b)) in self.dims.iter().zip(md.dims()).enumerate() {
            ensure!((a - b).abs() <= 1e-9 * b.max(1.0), "dims[{i}] = {a} but S gives {b}");
        }
        let w = md.global_index();
        ensure!((self.w - w).abs() <= 1e-9 * w, "w = {} but S gives {w}", self.w);
        Ok(md)
    }
}

pub fn parse_family(name: &str, level: Option<usize>) -> Result<Family> {
    let need = || level.with_context(|| format!("family {name} needs a level"));
    Ok(match name {
        "ising" => Family::Ising,
        "group" => Family::CyclicGroup { order: need()? },
        "custom" => Family::Custom,
        _ => match name.strip_prefix("su").and_then(|r| r.parse::<usize>().ok()) {
            Some(rank) => Family::Su {
                rank,
                level: need()?,
            },
            None => bail!("unknown family {name}"),
        },
    })
}

pub fn export_modular_data(md: &ModularData) -> String {
    let mut s = serde_json::to_string_pretty(&ModularDataJson::from_data(md)).expect("serializable");
    s.push('\n');
    s
}

pub fn import_modular_data(text: &str) -> Result<ModularData> {
    let doc: ModularDataJson = serde_json::from_str(text).context("malformed modular data JSON")?;
    doc.to_data()
}

fn rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.nrows()).map(|r| m.row(r).iter().copied().collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantJson {
    pub name: String,
    #[serde(rename = "Z")]
    pub z: Vec<Vec<i64>>,
    pub diag: Vec<i64>,
    pub sumsq: i64,
    pub permutation: bool,
}

impl InvariantJson {
    pub fn new(name: String, z: &MassMatrix, permutation: bool) -> Self {
        InvariantJson {
            name,
            z: z.rows(),
            diag: z.diagonal(),
            sumsq: z.sum_of_squares(),
            permutation,
        }
    }

    pub fn mass_matrix(&self) -> Result<MassMatrix> {
        MassMatrix::from_rows(&self.z).with_context(|| format!("invariant {}", self.name))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub family: String,
    pub level: Option<usize>,
    pub invariants: Vec<InvariantJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountsJson {
    pub mm: i64,
    pub mn: i64,
    pub chiral: i64,
    pub ambi: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DossierJson {
    pub name: String,
    pub level: usize,
    #[serde(rename = "Z")]
    pub z: Vec<Vec<i64>>,
    pub ambichiral: Vec<String>,
    pub b_plus: Vec<Vec<i64>>,
    pub b_minus: Vec<Vec<i64>>,
    pub w: f64,
    pub w_plus: f64,
    pub w0: f64,
    pub counts: CountsJson,
    pub gamma: String,
}

impl DossierJson {
    pub fn new(
        z: &MassMatrix,
        b: &BranchingData,
        idx: ChiralIndices,
        c: SectorCounts,
        gamma: String,
    ) -> Self {
        DossierJson {
            name: b.kind.to_string(),
            level: b.level(),
            z: z.rows(),
            ambichiral: b.ambi_labels.clone(),
            b_plus: rows(&b.b_plus),
            b_minus: rows(&b.b_minus),
            w: idx.w,
            w_plus: idx.w_plus,
            w0: idx.w0,
            counts: CountsJson {
                mm: c.mm,
                mn: c.mn,
                chiral: c.chiral,
                ambi: c.ambi,
            },
            gamma,
        }
    }
}
