//! Serializable reports for invariant vectors.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::{InvariantVector, Signature};
use crate::partition::enumerate_partitions;
use crate::scalar::{Mode, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueJson {
    pub re: String,
    pub im: String,
}

impl ValueJson {
    pub fn of<S: Scalar>(v: &S) -> Self {
        ValueJson {
            re: v.re_string(),
            im: v.im_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantEntry {
    pub index: usize,
    pub sigma: String,
    pub row_bits: Vec<usize>,
    pub value: ValueJson,
    pub zero: bool,
}

/// Family id as a JSON number when it fits in `u64`, else a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyId {
    Small(u64),
    Big(String),
}

impl From<&Signature> for FamilyId {
    fn from(s: &Signature) -> Self {
        match u64::try_from(&s.family_id) {
            Ok(v) => FamilyId::Small(v),
            Err(_) => FamilyId::Big(s.family_id.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub mode: Mode,
    pub invariants: Vec<InvariantEntry>,
    pub signature: String,
    pub family_id: FamilyId,
}

impl InvariantReport {
    pub fn new<S: Scalar>(v: &InvariantVector<S>) -> Result<Self> {
        let parts = enumerate_partitions(v.n)?;
        let invariants = parts
            .iter()
            .zip(&v.values)
            .map(|(p, d)| InvariantEntry {
                index: p.index(),
                sigma: p.sigma().cycle_string(),
                row_bits: p.row_bits().to_vec(),
                value: ValueJson::of(&d.value),
                zero: d.zero_verdict,
            })
            .collect();
        let sig = v.signature();
        Ok(InvariantReport {
            n: v.n,
            mode: S::MODE,
            invariants,
            signature: sig.delta_string(),
            family_id: FamilyId::from(&sig),
        })
    }

    /// One line per invariant: `index  sigma  rows={..}  value  zero|nonzero`.
    pub fn render_text(&self) -> String {
        let mut out = format!("n={} mode={}\n", self.n, self.mode);
        for e in &self.invariants {
            let rows = e
                .row_bits
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let value = if e.value.im == "0" {
                e.value.re.clone()
            } else {
                format!("{} {}i", e.value.re, e.value.im)
            };
            out.push_str(&format!(
                "{}  {}  rows={{{}}}  {}  {}\n",
                e.index,
                e.sigma,
                rows,
                value,
                if e.zero { "zero" } else { "nonzero" }
            ));
        }
        let fid = match &self.family_id {
            FamilyId::Small(v) => v.to_string(),
            FamilyId::Big(s) => s.clone(),
        };
        out.push_str(&format!("signature {} family_id {}\n", self.signature, fid));
        out
    }
}
