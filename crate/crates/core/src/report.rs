//! Serializable analysis reports shared by the command-line front end.
//!
//! Reports are deterministic: struct fields serialize in declaration order,
//! maps are ordered, and timing is omitted unless requested.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::{catalog, invariant_suite, product_factors, CatalogMatrix};
use crate::complement::{
    cernikova_decompose, is_c_group, is_sc_group, subgroup_counts, CernikovaStage, SplitFailureReason, SubgroupCounts,
};
use crate::desc::{GroupFile, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::group::{Caps, FiniteGroup};
use crate::lattice::Lattice;
use crate::profinite::{
    lift_complement_chain, torsion_index_report, validate_system, CompatibleSubgroup,
    InverseSystem, SystemFile, SystemSpec, SystemValidation, TorsionIndexReport,
};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub operation: String,
    /// Hex SHA-256 of the input that produced the report.
    pub input_digest: String,
    pub caps: Caps,
    pub timing_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analyze: Option<GroupAnalysis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profinite: Option<ProfiniteAnalysis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<CatalogMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementListing {
    pub index: usize,
    pub label: String,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupListing {
    pub order: usize,
    pub elements: Vec<usize>,
    pub labels: Vec<String>,
}

impl SubgroupListing {
    pub fn new(g: &FiniteGroup, h: &Subgroup) -> Self {
        SubgroupListing { order: h.order(), elements: h.to_vec(), labels: h.elements().map(|x| g.label(x)).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionListing {
    pub a: Vec<ElementListing>,
    pub b: Vec<ElementListing>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StageStatus {
    Ok,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitFailureListing {
    pub prime: usize,
    pub reason: SplitFailureReason,
    pub radical: SubgroupListing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub stage: CernikovaStage,
    pub status: StageStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split_failure: Option<SplitFailureListing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAnalysis {
    pub name: Option<String>,
    pub order: usize,
    pub exponent: usize,
    pub abelian: bool,
    pub subgroups: SubgroupCounts,
    pub c_group: bool,
    pub witness: Option<SubgroupListing>,
    pub decomposition: Option<DecompositionListing>,
    pub stages: Vec<StageRecord>,
    pub sc_group: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelVerdict {
    pub level: usize,
    pub order: usize,
    pub c_group: Option<bool>,
    pub witness: Option<SubgroupListing>,
    /// Why the C-check did not run (a cap), if it did not.
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainListing {
    pub generators: Vec<usize>,
    pub subgroup_orders: Vec<usize>,
    pub complement_orders: Vec<usize>,
    pub complements: Vec<Vec<usize>>,
    pub verified: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfiniteAnalysis {
    pub name: Option<String>,
    pub system: SystemSpec,
    pub depth: usize,
    pub validation: SystemValidation,
    pub levels: Vec<LevelVerdict>,
    /// `None` when some level was skipped and none failed.
    pub all_levels_c: Option<bool>,
    pub torsion_index: TorsionIndexReport,
    pub chain: Option<ChainListing>,
}

pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn header(operation: &str, input: &[u8], caps: &Caps) -> AnalysisReport {
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        operation: operation.into(),
        input_digest: digest(input),
        caps: *caps,
        timing_ms: None,
        analyze: None,
        profinite: None,
        catalog: None,
    }
}

/// Analyzes a group description file.
pub fn analyze_text(text: &str, caps: &Caps, sc: bool) -> Result<AnalysisReport> {
    let file = GroupFile::parse(text)?;
    let g = file.group.build(caps)?;
    let mut report = header("analyze", text.as_bytes(), caps);
    report.analyze = Some(analyze_group(&g, file.name, caps, sc)?);
    Ok(report)
}

pub fn analyze_group(g: &FiniteGroup, name: Option<String>, caps: &Caps, sc: bool) -> Result<GroupAnalysis> {
    let lat = Lattice::new(g, caps)?;
    let verdict = is_c_group(&lat);
    let listing = |xs: &[crate::complement::PrimeGenerator]| {
        xs.iter().map(|x| ElementListing { index: x.element, label: g.label(x.element), order: x.order }).collect()
    };
    let (decomposition, failed) = match cernikova_decompose(&lat)? {
        Ok(d) => (Some(DecompositionListing { a: listing(&d.a_generators), b: listing(&d.b_generators) }), None),
        Err(f) => (None, Some(f)),
    };
    let stages = CernikovaStage::ALL
        .iter()
        .map(|&stage| {
            let (status, split_failure) = match &failed {
                None => (StageStatus::Ok, None),
                Some(f) if stage < f.stage => (StageStatus::Ok, None),
                Some(f) if stage == f.stage => (
                    StageStatus::Failed,
                    f.split.as_ref().map(|s| SplitFailureListing {
                        prime: s.prime,
                        reason: s.reason,
                        radical: SubgroupListing::new(g, &s.radical),
                    }),
                ),
                Some(_) => (StageStatus::Skipped, None),
            };
            StageRecord { stage, status, split_failure }
        })
        .collect();
    let sc_group = if sc { Some(is_sc_group(&lat)?) } else { None };
    Ok(GroupAnalysis {
        name,
        order: g.order(),
        exponent: g.exponent(),
        abelian: g.is_abelian(),
        subgroups: subgroup_counts(&lat),
        c_group: verdict.c_group,
        witness: verdict.witness.as_ref().map(|w| SubgroupListing::new(g, w)),
        decomposition,
        stages,
        sc_group,
    })
}

/// Analyzes an inverse system. `input` is the raw text the digest covers.
pub fn profinite_report(file: &SystemFile, input: &[u8], caps: &Caps) -> Result<AnalysisReport> {
    let sys = file.spec.build(caps)?;
    let mut report = header("profinite", input, caps);
    report.profinite = Some(analyze_system(&sys, file, caps)?);
    Ok(report)
}

fn analyze_system(sys: &InverseSystem, file: &SystemFile, caps: &Caps) -> Result<ProfiniteAnalysis> {
    let validation = validate_system(sys);
    let mut levels = Vec::with_capacity(sys.levels().len());
    for (k, g) in sys.levels().iter().enumerate() {
        let mut rec = LevelVerdict { level: k, order: g.order(), c_group: None, witness: None, skipped: None };
        match Lattice::new(g, caps) {
            Ok(lat) => {
                let v = is_c_group(&lat);
                rec.c_group = Some(v.c_group);
                rec.witness = v.witness.as_ref().map(|w| SubgroupListing::new(g, w));
            }
            Err(e) if e.is_cap() => rec.skipped = Some(e.to_string()),
            Err(e) => return Err(Error::AtLevel { level: k, source: Box::new(e) }),
        }
        levels.push(rec);
    }
    let all_levels_c = if levels.iter().any(|l| l.c_group == Some(false)) {
        Some(false)
    } else if levels.iter().all(|l| l.c_group.is_some()) {
        Some(true)
    } else {
        None
    };
    let chain = match &file.subgroup_generators {
        Some(gens) if validation.valid => Some(chain_listing(sys, gens)?),
        _ => None,
    };
    Ok(ProfiniteAnalysis {
        name: file.name.clone(),
        system: file.spec.clone(),
        depth: sys.depth(),
        validation,
        levels,
        all_levels_c,
        torsion_index: torsion_index_report(sys),
        chain,
    })
}

fn chain_listing(sys: &InverseSystem, gens: &[usize]) -> Result<ChainListing> {
    let h = CompatibleSubgroup::generated_at_top(sys, gens)?;
    let mut out = ChainListing {
        generators: gens.to_vec(),
        subgroup_orders: h.levels().iter().map(|s| s.order()).collect(),
        complement_orders: Vec::new(),
        complements: Vec::new(),
        verified: false,
        error: None,
    };
    match lift_complement_chain(sys, &h) {
        Ok(chain) => {
            out.verified = chain.verify(sys, &h).is_ok();
            out.complement_orders = chain.levels().iter().map(|k| k.order()).collect();
            out.complements = chain.levels().iter().map(|k| k.to_vec()).collect();
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    Ok(out)
}

/// Runs the invariant suite over the bundled catalog.
pub fn catalog_report(caps: &Caps) -> Result<AnalysisReport> {
    let input = serde_json::to_vec(&(catalog(), product_factors())).expect("catalog serializes");
    let mut report = header("catalog", &input, caps);
    report.catalog = Some(invariant_suite(caps)?);
    Ok(report)
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(crate::desc::parse_error)
    }

    /// One `path: value` line per JSON leaf, in serialization order.
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = String::new();
        render(&value, String::new(), &mut out);
        out
    }
}

fn render(v: &serde_json::Value, path: String, out: &mut String) {
    use serde_json::Value;
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                render(x, p, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                render(x, format!("{path}[{i}]"), out);
            }
        }
        _ => {
            out.push_str(&path);
            out.push_str(": ");
            out.push_str(&v.to_string());
            out.push('\n');
        }
    }
}
