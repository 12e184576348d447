//! JSON documents: instances, eventually-periodic sets, results.
//!
//! Rationals are always `"p/q"` strings. Floats only appear in spectral
//! output, next to a `"type": "float64"` tag.

use serde::{Deserialize, Serialize};

use plunnecke_core::rational::{self, Rational};
use plunnecke_core::{campaign, ActionSystem, FiniteSet, GroupSpec, MagnificationResult, StateSubset, Tail, ZSetDesc};

use crate::LabError;

pub fn parse_rational(s: &str) -> Result<Rational, LabError> {
    Ok(rational::parse(s)?)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SystemDoc {
    /// The group acting on itself by translation.
    Regular {
        orders: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        measure: Option<Vec<String>>,
    },
    /// `Π Z/n_j` acting on `Π Z/m_j`, uniform measure.
    Quotient { orders: Vec<usize>, moduli: Vec<usize> },
    /// One permutation of `0..states` per cyclic factor.
    Explicit {
        orders: Vec<usize>,
        states: usize,
        generators: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        measure: Option<Vec<String>>,
    },
}

fn parse_measure(m: &Option<Vec<String>>) -> Result<Option<Vec<Rational>>, LabError> {
    m.as_ref().map(|v| v.iter().map(|s| parse_rational(s)).collect()).transpose()
}

impl SystemDoc {
    pub fn orders(&self) -> &[usize] {
        match self {
            SystemDoc::Regular { orders, .. } | SystemDoc::Quotient { orders, .. } | SystemDoc::Explicit { orders, .. } => {
                orders
            }
        }
    }

    pub fn build(&self) -> Result<ActionSystem, LabError> {
        let group = GroupSpec::new(self.orders())?;
        Ok(match self {
            SystemDoc::Regular { measure, .. } => ActionSystem::regular(&group, parse_measure(measure)?)?,
            SystemDoc::Quotient { moduli, .. } => campaign::quotient_system(&group, moduli)?,
            SystemDoc::Explicit { states, generators, measure, .. } => {
                ActionSystem::new(&group, *states, generators.clone(), parse_measure(measure)?)?
            }
        })
    }
}

/// Input for `sumset` and `magratio`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    /// Group orders for pure sumset work; ignored when `system` is present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemDoc>,
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InstanceDoc {
    pub fn group(&self) -> Result<GroupSpec, LabError> {
        match (&self.system, &self.group) {
            (Some(s), _) => Ok(GroupSpec::new(s.orders())?),
            (None, Some(g)) => Ok(GroupSpec::new(g)?),
            (None, None) => Err(LabError::Invalid("instance names neither a group nor a system".into())),
        }
    }

    /// The declared system, or the regular action of `group`.
    pub fn system(&self) -> Result<ActionSystem, LabError> {
        match &self.system {
            Some(s) => s.build(),
            None => Ok(ActionSystem::regular(&self.group()?, None)?),
        }
    }

    pub fn set_a(&self, group: &GroupSpec) -> Result<FiniteSet, LabError> {
        Ok(FiniteSet::new(group, self.a.iter().copied())?)
    }

    pub fn set_b(&self, group: &GroupSpec) -> Result<FiniteSet, LabError> {
        Ok(FiniteSet::new(group, self.b.iter().copied())?)
    }

    pub fn states_b(&self, sys: &ActionSystem) -> Result<StateSubset, LabError> {
        Ok(sys.subset(self.b.iter().copied())?)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TailDoc {
    pub period: u64,
    pub residues: Vec<u64>,
}

impl TailDoc {
    fn build(&self) -> Result<Tail, LabError> {
        Ok(Tail::new(self.period, self.residues.iter().copied())?)
    }

    fn from_tail(t: &Tail) -> Self {
        TailDoc { period: t.period(), residues: t.residues() }
    }
}

/// `head ∪ {n < lo : n mod p_l ∈ left} ∪ {n >= hi : n mod p_r ∈ right}`;
/// an absent tail is empty.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZSetDoc {
    pub lo: i64,
    pub hi: i64,
    #[serde(default)]
    pub head: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<TailDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<TailDoc>,
}

impl ZSetDoc {
    pub fn build(&self) -> Result<ZSetDesc, LabError> {
        let left = self.left.as_ref().map(TailDoc::build).transpose()?;
        let right = self.right.as_ref().map(TailDoc::build).transpose()?;
        Ok(ZSetDesc::new(self.lo, self.hi, self.head.iter().copied(), left, right)?)
    }

    pub fn from_desc(s: &ZSetDesc) -> Self {
        ZSetDoc {
            lo: s.lo(),
            hi: s.hi(),
            head: s.head().to_vec(),
            left: s.left().map(TailDoc::from_tail),
            right: s.right().map(TailDoc::from_tail),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MagnificationDoc {
    pub value: String,
    pub witness: Vec<usize>,
    pub method: String,
    pub nodes: usize,
    pub arcs: usize,
    pub iterations: usize,
}

impl From<&MagnificationResult> for MagnificationDoc {
    fn from(r: &MagnificationResult) -> Self {
        MagnificationDoc {
            value: rational::format(&r.value),
            witness: r.witness.to_vec(),
            method: r.method.as_str().into(),
            nodes: r.nodes,
            arcs: r.arcs,
            iterations: r.iterations,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SumsetDoc {
    pub group: Vec<usize>,
    pub sumset: Vec<usize>,
    pub cardinality: usize,
    pub density: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DensityDoc {
    pub set: ZSetDoc,
    pub upper: String,
    pub lower: String,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FloatDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub value: f64,
}

impl FloatDoc {
    pub fn new(value: f64) -> Self {
        FloatDoc { kind: "float64".into(), value }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct EquidistDoc {
    pub group: Vec<usize>,
    pub set: Vec<usize>,
    pub defect: FloatDoc,
    pub worst_character: Option<usize>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct WeylDoc {
    pub window: u64,
    pub set_size: usize,
    pub grid_denominator: u64,
    pub defect: FloatDoc,
    pub worst_frequency: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_round_trip() {
        let doc = InstanceDoc {
            system: Some(SystemDoc::Quotient { orders: vec![8], moduli: vec![4] }),
            a: vec![0, 1],
            b: vec![0, 1],
            delta: Some("1/2".into()),
            ..Default::default()
        };
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(serde_json::from_str::<InstanceDoc>(&text).unwrap(), doc);
        assert_eq!(doc.system().unwrap().states(), 4);
    }

    #[test]
    fn zset_round_trip() {
        let s = ZSetDesc::new(-2, 3, [-2, 1], Some(Tail::new(3, [0]).unwrap()), None).unwrap();
        let doc = ZSetDoc::from_desc(&s);
        let back: ZSetDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back.build().unwrap(), s);
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(serde_json::from_str::<InstanceDoc>(r#"{"group":[8],"A":[0],"B":[1],"extra":1}"#).is_err());
        assert!(serde_json::from_str::<InstanceDoc>(r#"{"group":[8],"A":[0]}"#).is_err());
    }

    #[test]
    fn measure_strings_are_rationals() {
        let doc = SystemDoc::Regular { orders: vec![2], measure: Some(vec!["1/2".into(), "1/2".into()]) };
        assert!(doc.build().is_ok());
        let bad = SystemDoc::Regular { orders: vec![2], measure: Some(vec!["0.5".into(), "1/2".into()]) };
        assert!(bad.build().is_err());
    }
}
