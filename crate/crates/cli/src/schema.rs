//! JSON documents emitted by the commands. Field order is fixed by the
//! struct definitions, so parse followed by re-serialization is byte-exact.

use rank2_cluster::canonical::BasisElement;
use rank2_cluster::explore::ExploreRecord;
use rank2_cluster::laurent::TermJson;
use rank2_cluster::{DimVector, LaurentPoly};
use serde::{Deserialize, Serialize};

pub fn terms(p: &LaurentPoly) -> Vec<TermJson> {
    rank2_cluster::laurent::LaurentJson::from(p.clone()).terms
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClusterVarDoc {
    pub b: u32,
    pub m: i64,
    pub denominator: DimVector,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FqCount {
    pub e: DimVector,
    pub count: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FqCounts {
    pub q: u32,
    pub counts: Vec<FqCount>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RepDoc {
    pub b: u32,
    pub d: DimVector,
    pub maps: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fq_counts: Option<FqCounts>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ChiRow {
    pub e1: i64,
    pub e2: i64,
    pub chi: String,
    pub route: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ChiDoc {
    pub kind: String,
    pub n: u32,
    pub d: DimVector,
    pub entries: Vec<ChiRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CanonicalDoc {
    pub kind: String,
    pub n: i64,
    pub denominator: DimVector,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BasisEntry {
    pub label: String,
    pub element: BasisElement,
    pub denominator: DimVector,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BasisListDoc {
    pub max_degree: u32,
    pub elements: Vec<BasisEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ExploreDoc {
    pub b: u32,
    pub m_min: i64,
    pub m_max: i64,
    pub records: Vec<ExploreRecord>,
}
