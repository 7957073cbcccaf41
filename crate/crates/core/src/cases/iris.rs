//! Iris clustering: UCI-format ingestion, the intra-cluster-distance
//! objective over encoded centres, and permutation-scored accuracy.

use crate::error::{Error, Result};
use crate::problem::ObjectiveProblem;
use crate::scalar::Scalar;

pub const IRIS_ROWS: usize = 150;
pub const IRIS_ATTRS: usize = 4;
pub const IRIS_CLASSES: usize = 3;

/// The Fisher iris record set: 150 rows, 4 attributes, 3 balanced classes.
#[derive(Debug, Clone)]
pub struct IrisDataset<R> {
    pub features: Vec<[R; IRIS_ATTRS]>,
    /// Class index (0..3) per row, in file order.
    pub labels: Vec<usize>,
    /// Distinct label strings, in order of first appearance.
    pub label_names: Vec<String>,
}

impl<R: Scalar> IrisDataset<R> {
    /// Per-attribute (min, max) over the data.
    pub fn attribute_ranges(&self) -> [(R, R); IRIS_ATTRS] {
        let mut ranges = [(R::infinity(), R::neg_infinity()); IRIS_ATTRS];
        for row in &self.features {
            for a in 0..IRIS_ATTRS {
                if row[a] < ranges[a].0 {
                    ranges[a].0 = row[a];
                }
                if row[a] > ranges[a].1 {
                    ranges[a].1 = row[a];
                }
            }
        }
        ranges
    }
}

/// Parse a UCI-format iris file: `f1,f2,f3,f4,label` per line, trailing
/// blank lines tolerated.
pub fn load_iris<R: Scalar>(path: &std::path::Path) -> Result<IrisDataset<R>> {
    let text = std::fs::read_to_string(path)?;
    let mut features = Vec::with_capacity(IRIS_ROWS);
    let mut labels = Vec::with_capacity(IRIS_ROWS);
    let mut label_names: Vec<String> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != IRIS_ATTRS + 1 {
            return Err(Error::Ingestion {
                line: lineno + 1,
                message: format!("expected 5 comma-separated fields, got {}", parts.len()),
            });
        }
        let mut row = [R::zero(); IRIS_ATTRS];
        for (a, field) in parts[..IRIS_ATTRS].iter().enumerate() {
            row[a] = field
                .parse::<f64>()
                .map(R::of)
                .map_err(|_| Error::Ingestion {
                    line: lineno + 1,
                    message: format!("bad numeric field `{field}`"),
                })?;
        }
        let name = parts[IRIS_ATTRS].to_string();
        let class = match label_names.iter().position(|l| l == &name) {
            Some(c) => c,
            None => {
                label_names.push(name);
                label_names.len() - 1
            }
        };
        features.push(row);
        labels.push(class);
    }
    if features.len() != IRIS_ROWS {
        return Err(Error::Ingestion {
            line: text.lines().count(),
            message: format!("expected {IRIS_ROWS} rows, got {}", features.len()),
        });
    }
    if label_names.len() != IRIS_CLASSES {
        return Err(Error::Ingestion {
            line: 0,
            message: format!("expected {IRIS_CLASSES} classes, got {}", label_names.len()),
        });
    }
    for c in 0..IRIS_CLASSES {
        let count = labels.iter().filter(|&&l| l == c).count();
        if count != IRIS_ROWS / IRIS_CLASSES {
            return Err(Error::Ingestion {
                line: 0,
                message: format!("class `{}` has {count} rows, expected 50", label_names[c]),
            });
        }
    }
    Ok(IrisDataset { features, labels, label_names })
}

/// Three cluster centres encoded as one 12-component vector.
#[derive(Debug, Clone)]
pub struct ClusterSolution<R> {
    pub centres: [[R; IRIS_ATTRS]; IRIS_CLASSES],
}

impl<R: Scalar> ClusterSolution<R> {
    /// Decode a flat 12-vector; coordinates must sit within the data ranges.
    pub fn from_flat(x: &[R], data: &IrisDataset<R>) -> Result<Self> {
        if x.len() != IRIS_ATTRS * IRIS_CLASSES {
            return Err(Error::DimensionMismatch {
                expected: IRIS_ATTRS * IRIS_CLASSES,
                got: x.len(),
            });
        }
        let ranges = data.attribute_ranges();
        let mut centres = [[R::zero(); IRIS_ATTRS]; IRIS_CLASSES];
        for c in 0..IRIS_CLASSES {
            for a in 0..IRIS_ATTRS {
                let v = x[c * IRIS_ATTRS + a];
                if v < ranges[a].0 || v > ranges[a].1 {
                    return Err(Error::ParameterDomain(format!(
                        "centre {c} attribute {a} outside the data range"
                    )));
                }
                centres[c][a] = v;
            }
        }
        Ok(Self { centres })
    }
}

fn nearest_centre<R: Scalar>(row: &[R; IRIS_ATTRS], centres: &[[R; IRIS_ATTRS]]) -> (usize, R) {
    let mut best = (0usize, R::infinity());
    for (c, centre) in centres.iter().enumerate() {
        let mut d2 = R::zero();
        for a in 0..IRIS_ATTRS {
            let diff = row[a] - centre[a];
            d2 = d2 + diff * diff;
        }
        if d2 < best.1 {
            best = (c, d2);
        }
    }
    (best.0, best.1.sqrt())
}

fn decode<R: Scalar>(x: &[R]) -> [[R; IRIS_ATTRS]; IRIS_CLASSES] {
    let mut centres = [[R::zero(); IRIS_ATTRS]; IRIS_CLASSES];
    for c in 0..IRIS_CLASSES {
        for a in 0..IRIS_ATTRS {
            centres[c][a] = x[c * IRIS_ATTRS + a];
        }
    }
    centres
}

/// The clustering task: minimise the sum over all points of the Euclidean
/// distance to the nearest decoded centre. Bounds per attribute are the data
/// min/max, tiled over the three centres.
pub fn clustering_problem<R: Scalar>(data: &IrisDataset<R>) -> ObjectiveProblem<R> {
    let ranges = data.attribute_ranges();
    let mut lower = Vec::with_capacity(IRIS_ATTRS * IRIS_CLASSES);
    let mut upper = Vec::with_capacity(IRIS_ATTRS * IRIS_CLASSES);
    for _ in 0..IRIS_CLASSES {
        for a in 0..IRIS_ATTRS {
            lower.push(ranges[a].0);
            upper.push(ranges[a].1);
        }
    }
    let features = data.features.clone();
    ObjectiveProblem::unconstrained("iris_clustering", lower, upper, move |x: &[R]| {
        let centres = decode(x);
        let mut total = R::zero();
        for row in &features {
            total = total + nearest_centre(row, &centres).1;
        }
        total
    })
}

/// Assign each point to its nearest centre, then score the best of the six
/// cluster-to-label bijections. Returns the correct fraction in [0, 1].
pub fn clustering_accuracy<R: Scalar>(
    solution: &ClusterSolution<R>,
    data: &IrisDataset<R>,
) -> f64 {
    let assignments: Vec<usize> = data
        .features
        .iter()
        .map(|row| nearest_centre(row, &solution.centres).0)
        .collect();
    best_bijection_score(&assignments, &data.labels)
}

/// Best-of-6 mapping score between cluster ids and class labels.
fn best_bijection_score(assignments: &[usize], labels: &[usize]) -> f64 {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let n = labels.len();
    let mut best = 0usize;
    for perm in PERMS {
        let correct = assignments
            .iter()
            .zip(labels.iter())
            .filter(|&(&a, &l)| perm[a] == l)
            .count();
        best = best.max(correct);
    }
    best as f64 / n as f64
}
