//! JSON documents emitted under `--format json`. Field order is part of the
//! output contract: structs serialize in declaration order.

use std::fmt::Display;
use std::str::FromStr;

use padic_dyn::backward::{BackwardTree, Cycle};
use padic_dyn::congruence::RootModP;
use padic_dyn::poly::{FpPoly, IntPoly};
use serde::ser::Error as _;
use serde::{Serialize, Serializer};

/// An arbitrary-size integer written as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dec(pub String);

pub fn dec(n: impl Display) -> Dec {
    Dec(n.to_string())
}

impl Serialize for Dec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0)
            .map_err(S::Error::custom)?
            .serialize(s)
    }
}

pub fn coeffs(f: &IntPoly) -> Vec<Dec> {
    f.coeffs().iter().map(dec).collect()
}

pub fn fp_coeffs(f: &FpPoly) -> Vec<Dec> {
    f.coeffs().iter().map(dec).collect()
}

#[derive(Serialize)]
pub struct Root {
    pub residue: Dec,
    pub singular: bool,
    pub derivative_residue: Dec,
}

impl From<&RootModP> for Root {
    fn from(r: &RootModP) -> Self {
        Root {
            residue: dec(r.residue),
            singular: r.singular,
            derivative_residue: dec(r.derivative_residue),
        }
    }
}

#[derive(Serialize)]
pub struct RootsDoc {
    pub command: &'static str,
    pub polynomial: Vec<Dec>,
    pub prime: Dec,
    pub target: Dec,
    pub all_residues: bool,
    pub roots: Vec<Root>,
}

#[derive(Serialize)]
pub struct OracleDoc {
    pub command: &'static str,
    pub polynomial: Vec<Dec>,
    pub modulus: Dec,
    pub target: Dec,
    pub solutions: Vec<Dec>,
}

#[derive(Serialize)]
pub struct LiftDoc {
    pub command: &'static str,
    pub polynomial: Vec<Dec>,
    pub prime: Dec,
    pub precision: u32,
    pub seed: Dec,
    pub target: Dec,
    pub ladder: Vec<Dec>,
    pub root: Dec,
    /// Base-p digits of the root, least significant first.
    pub digits: Vec<Dec>,
}

#[derive(Serialize)]
pub struct PreimagesDoc {
    pub command: &'static str,
    pub polynomial: Vec<Dec>,
    pub prime: Dec,
    pub precision: u32,
    pub target: Dec,
    pub lifted: Vec<Dec>,
    pub singular: Vec<Root>,
}

#[derive(Serialize)]
pub struct TreeNode {
    pub id: usize,
    pub value: Dec,
    pub depth: usize,
    pub status: &'static str,
    pub parent: Option<usize>,
    pub precision: u32,
}

#[derive(Serialize)]
pub struct TreeDoc {
    pub command: &'static str,
    pub prime: Dec,
    pub precision: u32,
    pub polynomial: Vec<Dec>,
    pub seed: Dec,
    pub depth: usize,
    pub complete: bool,
    pub nodes: Vec<TreeNode>,
}

impl From<&BackwardTree> for TreeDoc {
    fn from(t: &BackwardTree) -> Self {
        TreeDoc {
            command: "tree",
            prime: dec(t.prime()),
            precision: t.precision(),
            polynomial: coeffs(t.polynomial()),
            seed: dec(t.seed()),
            depth: t.max_depth(),
            complete: t.is_complete(),
            nodes: t
                .nodes()
                .iter()
                .map(|n| TreeNode {
                    id: n.id,
                    value: dec(&n.value),
                    depth: n.depth,
                    status: n.status.as_str(),
                    parent: n.parent,
                    precision: n.precision,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct CycleDoc {
    pub tail: usize,
    pub length: usize,
}

impl From<Cycle> for CycleDoc {
    fn from(c: Cycle) -> Self {
        CycleDoc { tail: c.tail, length: c.length }
    }
}

#[derive(Serialize)]
pub struct OrbitDoc {
    pub command: &'static str,
    pub polynomial: Vec<Dec>,
    pub prime: Dec,
    pub precision: u32,
    pub terms: Vec<Dec>,
    pub cycle: Option<CycleDoc>,
}

#[derive(Serialize)]
pub struct Rational {
    pub numerator: Dec,
    pub denominator: Dec,
    /// `"a/b"`, or `"a"` when the denominator is 1.
    pub text: String,
}

#[derive(Serialize)]
pub struct DistDoc {
    pub command: &'static str,
    pub metric: &'static str,
    pub prime: Option<Dec>,
    pub distance: Rational,
}

#[derive(Serialize)]
pub struct ValuationDoc {
    pub command: &'static str,
    pub prime: Dec,
    pub numerator: Dec,
    pub denominator: Dec,
    /// `null` for zero, whose valuation is infinite.
    pub valuation: Option<i64>,
    pub norm: Rational,
}

#[derive(Serialize)]
pub struct ReduceDoc {
    pub command: &'static str,
    pub polynomial: Vec<Dec>,
    pub prime: Dec,
    pub reduced: Vec<Dec>,
    pub all_residues_are_roots: bool,
}

#[derive(Serialize)]
pub struct CertifyDoc {
    pub command: &'static str,
    pub polynomial: Vec<Dec>,
    pub prime: Dec,
    pub divides: bool,
    pub quotient: Vec<Dec>,
    pub remainder: Vec<Dec>,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Serialize)]
pub struct ErrorDoc {
    pub error: ErrorBody,
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}
