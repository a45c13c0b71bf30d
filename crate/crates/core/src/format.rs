//! Canonical file formats for topologies, closure operators, and functions.
//!
//! All three are single-line JSON records. Emission is canonical — opens
//! ascending by mask, elements ascending within each list — so equal values
//! produce byte-identical files and every emitted file re-parses to an equal
//! value.
//!
//! - topology: `{"n":2,"opens":[[],[0],[0,1]]}`
//! - operator: `{"n":2,"table":[[],[0,1],[1],[0,1]]}` (index = input mask)
//! - function: `{"dom_n":2,"cod_n":3,"table":[0,2]}`

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closure::ClosureOperator;
use crate::initial::{FiniteFunction, FunctionError};
use crate::set::{Carrier, PointSet, MAX_POINTS};
use crate::topology::Topology;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("carrier size {size} exceeds the maximum of {MAX_POINTS}")]
    CarrierTooLarge { size: usize },
    #[error("point {point} is outside the carrier of size {size}")]
    PointOutOfRange { point: u8, size: u8 },
    #[error("operator table has {got} rows, expected {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("{0}")]
    Function(#[from] FunctionError),
}

#[derive(Serialize, Deserialize)]
struct TopologyRecord {
    n: u8,
    opens: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
struct OperatorRecord {
    n: u8,
    table: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
struct FunctionRecord {
    dom_n: u8,
    cod_n: u8,
    table: Vec<u8>,
}

fn carrier_of(n: u8) -> Result<Carrier, FormatError> {
    Carrier::new(n).map_err(|_| FormatError::CarrierTooLarge { size: n as usize })
}

fn set_from_elements(carrier: Carrier, elements: &[u8]) -> Result<PointSet, FormatError> {
    carrier.set_of(elements).map_err(|_| {
        let point = elements
            .iter()
            .copied()
            .find(|&p| p >= carrier.size())
            .unwrap_or_default();
        FormatError::PointOutOfRange { point, size: carrier.size() }
    })
}

fn elements(s: PointSet) -> Vec<u8> {
    s.points().collect()
}

/// Canonical single-line emission of a topology.
pub fn emit_topology(t: &Topology) -> String {
    let record = TopologyRecord {
        n: t.carrier().size(),
        opens: t.opens().map(elements).collect(),
    };
    serde_json::to_string(&record).expect("record serialization cannot fail")
}

/// Parses a topology file into its raw family, without checking the axioms.
/// Validation is the caller's step, so that axiom violations can be reported
/// separately from format errors.
pub fn parse_topology_family(input: &str) -> Result<(Carrier, Vec<PointSet>), FormatError> {
    let record: TopologyRecord = serde_json::from_str(input)?;
    let carrier = carrier_of(record.n)?;
    let family = record
        .opens
        .iter()
        .map(|open| set_from_elements(carrier, open))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((carrier, family))
}

/// Parses and validates a topology file.
pub fn parse_topology(input: &str) -> Result<Topology, TopologyParseError> {
    let (carrier, family) = parse_topology_family(input)?;
    crate::topology::validate(carrier, &family).map_err(TopologyParseError::Invalid)
}

#[derive(Debug, Error)]
pub enum TopologyParseError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("not a topology: {0}")]
    Invalid(crate::topology::TopologyError),
}

/// Canonical single-line emission of a closure operator.
pub fn emit_operator(op: &ClosureOperator) -> String {
    let carrier = op.carrier();
    let record = OperatorRecord {
        n: carrier.size(),
        table: (0..carrier.subset_count())
            .map(|m| elements(PointSet::from_mask_unchecked(carrier, op.entry(m as u16))))
            .collect(),
    };
    serde_json::to_string(&record).expect("record serialization cannot fail")
}

/// Parses an operator file into its raw table (index = input mask), without
/// checking the Kuratowski axioms.
pub fn parse_operator_table(input: &str) -> Result<(Carrier, Vec<u16>), FormatError> {
    let record: OperatorRecord = serde_json::from_str(input)?;
    let carrier = carrier_of(record.n)?;
    if record.table.len() != carrier.subset_count() {
        return Err(FormatError::TableLength {
            expected: carrier.subset_count(),
            got: record.table.len(),
        });
    }
    let table = record
        .table
        .iter()
        .map(|row| set_from_elements(carrier, row).map(|s| s.mask()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((carrier, table))
}

/// Canonical single-line emission of a function.
pub fn emit_function(f: &FiniteFunction) -> String {
    let record = FunctionRecord {
        dom_n: f.dom().size(),
        cod_n: f.cod().size(),
        table: f.table().to_vec(),
    };
    serde_json::to_string(&record).expect("record serialization cannot fail")
}

pub fn parse_function(input: &str) -> Result<FiniteFunction, FormatError> {
    let record: FunctionRecord = serde_json::from_str(input)?;
    let dom = carrier_of(record.dom_n)?;
    let cod = carrier_of(record.cod_n)?;
    Ok(FiniteFunction::new(dom, cod, record.table)?)
}
