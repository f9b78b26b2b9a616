//! JSON report types. Field order is fixed by the struct declarations and
//! all collections are deterministically ordered upstream, so identical
//! runs emit byte-identical reports.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use collapse_core::collapse::CollapseCertificate;
use collapse_core::hypergraph::CoverWitness;
use collapse_core::mes::{KgWitness, SxWitness};
use collapse_core::setpair::{ExtremalReport, FloorCheck};
use collapse_core::{Simplex, SimplicialComplex, Vertex};
use serde::Serialize;

fn verts(s: &Simplex) -> Vec<Vertex> {
    s.vertices().to_vec()
}

fn face_lists(faces: &[Simplex]) -> Vec<Vec<Vertex>> {
    faces.iter().map(verts).collect()
}

/// `{"vertices":[…],"facets":[[…],…]}`. The void complex has no facet
/// lists; `{∅}` has exactly one, the empty list.
#[derive(Serialize)]
pub struct ComplexJson {
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Vec<Vertex>>,
}

impl ComplexJson {
    pub fn of(x: &SimplicialComplex) -> Self {
        ComplexJson {
            vertices: x.vertices().to_vec(),
            facets: face_lists(&x.maximal_faces()),
        }
    }
}

#[derive(Serialize)]
pub struct StepJson {
    pub eta: Vec<Vertex>,
    pub tau: Vec<Vertex>,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub d: u32,
    pub steps: Vec<StepJson>,
}

impl CertificateJson {
    pub fn of(cert: &CollapseCertificate) -> Self {
        CertificateJson {
            d: cert.d,
            steps: cert
                .steps
                .iter()
                .map(|s| StepJson {
                    eta: verts(&s.free_face),
                    tau: verts(&s.carrier),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct CovReport {
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Vec<Vertex>>,
    /// Cover sets, aligned with `facets`.
    pub witnesses: Vec<Vec<Vertex>>,
}

impl CovReport {
    pub fn of(x: &SimplicialComplex, witnesses: &[CoverWitness]) -> Self {
        let c = ComplexJson::of(x);
        CovReport {
            vertices: c.vertices,
            facets: c.facets,
            witnesses: witnesses.iter().map(|w| verts(&w.cover)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct IntReport {
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Vec<Vertex>>,
    /// Indices of input edges too small to meet the threshold.
    pub dropped_edges: Vec<usize>,
}

impl IntReport {
    pub fn of(x: &SimplicialComplex, dropped: &[usize]) -> Self {
        let c = ComplexJson::of(x);
        IntReport {
            vertices: c.vertices,
            facets: c.facets,
            dropped_edges: dropped.to_vec(),
        }
    }
}

#[derive(Serialize)]
pub struct MesReport {
    pub d_mes: u32,
    pub mode: String,
    pub ordering: Vec<Vec<Vertex>>,
}

#[derive(Serialize)]
pub struct SxWitnessJson {
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Vec<Vertex>>,
}

#[derive(Serialize)]
pub struct DPrimeReport {
    pub d_prime: u32,
    pub witness: SxWitnessJson,
}

impl DPrimeReport {
    pub fn of(d: u32, w: &SxWitness) -> Self {
        DPrimeReport {
            d_prime: d,
            witness: SxWitnessJson {
                vertices: w.vertices.clone(),
                facets: face_lists(&w.facets),
            },
        }
    }
}

#[derive(Serialize)]
pub struct KgWitnessJson {
    pub v: Vec<Vertex>,
    pub u: Vec<Vertex>,
}

#[derive(Serialize)]
pub struct KGraphReport {
    pub k_graph: u32,
    pub witness: KgWitnessJson,
}

impl KGraphReport {
    pub fn of(k: u32, w: &KgWitness) -> Self {
        KGraphReport {
            k_graph: k,
            witness: KgWitnessJson {
                v: w.v.clone(),
                u: w.u.clone(),
            },
        }
    }
}

#[derive(Serialize)]
pub struct CollapseReport {
    pub d: u32,
    pub decision: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<ComplexJson>,
}

#[derive(Serialize)]
pub struct CollapsibilityReport {
    pub collapsibility: u32,
    pub certificate: CertificateJson,
}

/// Exit-code-2 report: every smaller d was refuted, the search at this d
/// ran out of budget.
#[derive(Serialize)]
pub struct UndecidedReport {
    pub undecided_at_d: u32,
    pub budget: u64,
}

#[derive(Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub k_found: u32,
    pub bound: u64,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct LemmaUndecidedReport {
    pub lemma: String,
    pub undecided: bool,
    pub bound: u64,
    pub budget: u64,
}

#[derive(Serialize)]
pub struct ExtremalCheckJson {
    pub name: String,
    pub found_dimension: Option<u64>,
    pub expected_dimension: u64,
    pub floor: String,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct ExtremalReportJson {
    pub checks: Vec<ExtremalCheckJson>,
    pub ok: bool,
}

impl ExtremalReportJson {
    pub fn of(report: &ExtremalReport) -> Self {
        ExtremalReportJson {
            checks: report
                .checks
                .iter()
                .map(|c| ExtremalCheckJson {
                    name: c.name.clone(),
                    found_dimension: c.found_dimension,
                    expected_dimension: c.expected_dimension,
                    floor: match c.floor {
                        FloorCheck::Searched => "searched".into(),
                        FloorCheck::Structural => "structural".into(),
                    },
                    ok: c.ok,
                })
                .collect(),
            ok: report.all_ok(),
        }
    }
}

/// Writes one compact JSON report plus trailing newline to the path, or to
/// standard output if none is given.
pub fn emit<T: Serialize>(report: &T, json_path: Option<&Path>) -> io::Result<()> {
    let mut text = serde_json::to_string(report).expect("reports always serialize");
    text.push('\n');
    match json_path {
        Some(p) => fs::write(p, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}
