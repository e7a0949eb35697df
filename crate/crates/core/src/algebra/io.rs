//! JSON algebra files.
//!
//! ```json
//! {"name": "UT2", "group": {"orders": [2]},
//!  "basis": ["e11", "e12", "e22"],
//!  "deg": [[0, 0], [1, 0], [0, 0]],
//!  "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 2, 1, "1"], [2, 2, 2, "1"]],
//!  "unit": ["1", "0", "1"]}
//! ```
//!
//! Each `deg` entry is the residue tuple, optionally followed by a parity bit.
//! Emission always writes the parity bit, sorts `mult` and stores Wedderburn
//! subspaces in reduced echelon form, so `parse(emit(a)) == a`.

use serde::{Deserialize, Serialize};

use super::{validate_algebra, AlgebraError, GradedAlgebra, WedderburnData};
use crate::group::{ExtendedDegree, GroupElement, GroupSpec};
use crate::linalg::Subspace;
use crate::rational::Rational;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed algebra file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed algebra file: {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    name: String,
    group: GroupSpec,
    basis: Vec<String>,
    deg: Vec<Vec<u32>>,
    mult: Vec<(usize, usize, usize, Rational)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    wedderburn: Option<WedderburnFile>,
}

#[derive(Serialize, Deserialize)]
struct WedderburnFile {
    components: Vec<Vec<Vec<Rational>>>,
    radical: Vec<Vec<Rational>>,
}

pub fn parse_algebra(text: &str) -> Result<GradedAlgebra, FormatError> {
    let f: AlgebraFile = serde_json::from_str(text)?;
    let group = GroupSpec::new(f.group.orders).map_err(AlgebraError::from)?;
    let k = group.rank();
    let d = f.basis.len();
    if f.deg.len() != d {
        return Err(FormatError::Shape(format!("{} basis labels but {} degrees", d, f.deg.len())));
    }
    let mut degree = Vec::with_capacity(d);
    for (i, entry) in f.deg.iter().enumerate() {
        let (residues, parity) = if entry.len() == k {
            (entry.clone(), 0)
        } else if entry.len() == k + 1 {
            (entry[..k].to_vec(), entry[k])
        } else {
            return Err(FormatError::Shape(format!("degree of basis element {i} has length {}", entry.len())));
        };
        if parity > 1 {
            return Err(FormatError::Shape(format!("parity of basis element {i} must be 0 or 1")));
        }
        let g = GroupElement { residues };
        group.check(&g).map_err(AlgebraError::from)?;
        degree.push(ExtendedDegree { g, parity: parity as u8 });
    }
    let mut a = GradedAlgebra::from_entries(f.name, group, f.basis, degree, f.mult)?;
    let check_len = |v: &Vec<Rational>, what: &str| {
        if v.len() == d {
            Ok(())
        } else {
            Err(FormatError::Shape(format!("{what} vector has length {}, expected {d}", v.len())))
        }
    };
    if let Some(u) = f.unit {
        check_len(&u, "unit")?;
        a.unit = Some(u);
    }
    if let Some(w) = f.wedderburn {
        let mut components = Vec::new();
        for c in w.components {
            for v in &c {
                check_len(v, "component")?;
            }
            components.push(Subspace::span(d, c));
        }
        for v in &w.radical {
            check_len(v, "radical")?;
        }
        a.wedderburn = Some(WedderburnData { components, radical: Subspace::span(d, w.radical) });
    }
    validate_algebra(&a).map_err(AlgebraError::from)?;
    Ok(a)
}

pub fn emit_algebra(a: &GradedAlgebra) -> String {
    let f = AlgebraFile {
        name: a.name.clone(),
        group: a.group.clone(),
        basis: a.basis_labels.clone(),
        deg: a
            .degree
            .iter()
            .map(|d| {
                let mut v = d.g.residues.clone();
                v.push(d.parity as u32);
                v
            })
            .collect(),
        mult: a.entries(),
        unit: a.unit.clone(),
        wedderburn: a.wedderburn.as_ref().map(|w| WedderburnFile {
            components: w.components.iter().map(|c| c.basis().to_vec()).collect(),
            radical: w.radical.basis().to_vec(),
        }),
    };
    let mut s = serde_json::to_string_pretty(&f).expect("serializable");
    s.push('\n');
    s
}
