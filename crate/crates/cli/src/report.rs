//! JSON report types (`report_v1`).

use std::collections::BTreeMap;

use serde::Serialize;
use trie_extent::codec::BoundReport;
use trie_extent::{
    verify_binary_identity, verify_corollary_bound, verify_general_identity, TrieStats,
};

use crate::input::{Format, SymbolLabel};

pub const SCHEMA: &str = "report_v1";

#[derive(Debug, Serialize)]
pub struct Ell {
    pub numerator: u64,
    pub denominator: u64,
    pub decimal: f64,
}

#[derive(Debug, Serialize)]
pub struct Identities {
    /// `E = I + T`; null unless the alphabet is binary.
    pub binary: Option<bool>,
    /// `Y(0) = sum (d-1) Y(d) + T`.
    pub general: bool,
    /// `sum (d-1) n(d) = n(0) - 1`.
    pub degree: bool,
}

#[derive(Debug, Serialize)]
pub struct Encoded {
    pub structure_bits: u64,
    pub boundary_bits: u64,
    pub payload_bits: u64,
    pub total_bits: u64,
    pub bound_bits: f64,
    pub ratio: Option<f64>,
    pub overshoot_bits: f64,
}

impl From<&BoundReport> for Encoded {
    fn from(r: &BoundReport) -> Self {
        Encoded {
            structure_bits: r.measured.structure,
            boundary_bits: r.measured.boundaries,
            payload_bits: r.measured.payload,
            total_bits: r.measured_bits(),
            bound_bits: r.bound_bits,
            ratio: r.ratio(),
            overshoot_bits: r.overshoot_bits(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct StatsReport {
    pub schema: &'static str,
    pub source: String,
    pub format: Format,
    pub sentinel: bool,
    pub sigma: u32,
    pub symbols: Vec<SymbolLabel>,
    pub n: u64,
    #[serde(rename = "E")]
    pub external_extents: u64,
    #[serde(rename = "I")]
    pub internal_extents: u64,
    #[serde(rename = "T")]
    pub measure: u64,
    pub ell: Ell,
    /// Extent sums by child count, for degree 0 and 2..=sigma.
    #[serde(rename = "Y")]
    pub extent_by_degree: BTreeMap<String, u64>,
    /// Node counts by child count, for degree 0 and 2..=sigma.
    pub n_of: BTreeMap<String, u64>,
    pub identities: Identities,
    /// Average-extent bound; null unless binary with n >= 2.
    pub corollary: Option<bool>,
    /// `T + log2 C(T, 2n-2)`; null unless binary.
    pub space_bound_bits: Option<f64>,
    pub encoded: Option<Encoded>,
    /// Every applicable check passed.
    pub ok: bool,
}

fn degree_table(table: &[u64]) -> BTreeMap<String, u64> {
    table
        .iter()
        .enumerate()
        .filter(|&(d, _)| d != 1)
        .map(|(d, &v)| (d.to_string(), v))
        .collect()
}

impl StatsReport {
    pub fn new(
        source: String,
        format: Format,
        sentinel: bool,
        symbols: Vec<SymbolLabel>,
        st: &TrieStats,
    ) -> StatsReport {
        let binary = verify_binary_identity(st).ok();
        let general = verify_general_identity(st);
        let corollary = if st.sigma == 2 {
            verify_corollary_bound(st).ok()
        } else {
            None
        };
        let ok = binary.unwrap_or(true) && general.holds() && corollary.unwrap_or(true);
        let (numerator, denominator) = st.ell_exact();
        StatsReport {
            schema: SCHEMA,
            source,
            format,
            sentinel,
            sigma: st.sigma,
            symbols,
            n: st.n,
            external_extents: st.external_extents,
            internal_extents: st.internal_extents,
            measure: st.measure,
            ell: Ell {
                numerator,
                denominator,
                decimal: st.ell(),
            },
            extent_by_degree: degree_table(&st.extent_by_degree),
            n_of: degree_table(&st.nodes_by_degree),
            identities: Identities {
                binary,
                general: general.extent_identity,
                degree: general.degree_identity,
            },
            corollary,
            space_bound_bits: st.space_bound_bits().ok(),
            encoded: None,
            ok,
        }
    }
}
