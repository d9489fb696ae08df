//! Graph file formats and the verification report.

mod edgelist;
mod graph6;
mod report;

use thiserror::Error;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_MAX_VERTICES};
pub use report::{
    format_spectrum, format_value, parse_report, rounded_values, write_report, FamilyRecord, VerificationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    Graph6InvalidByte { offset: usize, byte: u8 },
    #[error("graph6: long-form vertex counts (n > {GRAPH6_MAX_VERTICES}) are not supported")]
    Graph6LongForm,
    #[error("graph6: vertex count {0} out of supported range 1..={GRAPH6_MAX_VERTICES}")]
    Graph6VertexCount(usize),
    #[error("graph6: expected {expected} edge bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("edge list: missing \"n <count>\" header")]
    EdgeListMissingHeader,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}
