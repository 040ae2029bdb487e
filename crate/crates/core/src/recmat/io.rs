//! JSON presentation files.
//!
//! ```json
//! {
//!   "p": 2,
//!   "q": 2,
//!   "dim": 2,
//!   "labels": ["H1", "H2"],
//!   "init": ["1", "i"],
//!   "shifts": {
//!     "0,0": [["1", "i"], ["0", "0"]],
//!     ...
//!   }
//! }
//! ```
//!
//! Shift matrices are written row by row in the column-action convention.
//! Keys appear in `(s, t)` order; unknown fields are rejected.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use super::{Presentation, RecError};
use crate::exactnum::GaussianRational;
use crate::linalg::DenseMatrix;

type Rows = Vec<Vec<String>>;

#[derive(Serialize)]
struct FileOut<'a> {
    p: usize,
    q: usize,
    dim: usize,
    labels: &'a [String],
    init: Vec<String>,
    shifts: OrderedShifts,
}

struct OrderedShifts(Vec<(String, Rows)>);

impl Serialize for OrderedShifts {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileIn {
    p: usize,
    q: usize,
    dim: usize,
    labels: Vec<String>,
    init: Vec<String>,
    shifts: BTreeMap<String, Rows>,
}

fn rows_of(m: &DenseMatrix) -> Rows {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect()
}

pub fn to_json(p: &Presentation) -> String {
    let mut shifts = Vec::with_capacity(p.p() * p.q());
    for s in 0..p.p() {
        for t in 0..p.q() {
            shifts.push((format!("{s},{t}"), rows_of(p.shift(s, t))));
        }
    }
    let out = FileOut {
        p: p.p(),
        q: p.q(),
        dim: p.dim(),
        labels: p.labels(),
        init: p.init().iter().map(ToString::to_string).collect(),
        shifts: OrderedShifts(shifts),
    };
    let mut text = serde_json::to_string_pretty(&out).expect("serializable");
    text.push('\n');
    text
}

fn parse_key(key: &str) -> Option<(usize, usize)> {
    let (s, t) = key.split_once(',')?;
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    if !digits(s) || !digits(t) {
        return None;
    }
    Some((s.parse().ok()?, t.parse().ok()?))
}

pub fn from_json(text: &str) -> Result<Presentation, RecError> {
    let file: FileIn = serde_json::from_str(text).map_err(|e| RecError::Format(e.to_string()))?;
    let bad = |msg: String| RecError::Format(msg);
    if file.init.len() != file.dim {
        return Err(bad(format!(
            "init has {} entries, dim is {}",
            file.init.len(),
            file.dim
        )));
    }
    if file.labels.len() != file.dim {
        return Err(bad(format!(
            "{} labels, dim is {}",
            file.labels.len(),
            file.dim
        )));
    }
    let init = file
        .init
        .iter()
        .map(|x| x.parse::<GaussianRational>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut slots: Vec<Option<DenseMatrix>> = vec![None; file.p * file.q];
    for (key, rows) in &file.shifts {
        let (s, t) = parse_key(key).ok_or_else(|| bad(format!("bad shift key {key:?}")))?;
        if s >= file.p || t >= file.q {
            return Err(bad(format!("shift key {key:?} outside alphabets")));
        }
        if rows.len() != file.dim || rows.iter().any(|r| r.len() != file.dim) {
            return Err(bad(format!("shift {key:?} is not {0}x{0}", file.dim)));
        }
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|x| x.parse()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let slot = &mut slots[s * file.q + t];
        if slot.is_some() {
            return Err(bad(format!("duplicate shift key {key:?}")));
        }
        *slot = Some(if file.dim == 0 {
            DenseMatrix::zeros(0, 0)
        } else {
            DenseMatrix::from_rows(parsed)
        });
    }
    let shifts = slots
        .into_iter()
        .enumerate()
        .map(|(k, m)| {
            m.ok_or_else(|| bad(format!("missing shift \"{},{}\"", k / file.q, k % file.q)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Presentation::new(file.p, file.q, file.labels, init, shifts).map_err(|e| bad(e.to_string()))
}
