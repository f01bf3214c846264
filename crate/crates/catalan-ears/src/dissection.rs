//! Triangle dissections of a based convex polygon.
//!
//! The polygon has `n + 2` vertices labeled `-1, 0, 1, ..., n`
//! counterclockwise from the left endpoint of the base, so the base is the
//! side `{-1, 0}`. A dissection inserts `n - 1` noncrossing diagonals
//! between nonadjacent vertices, cutting the polygon into `n` triangles.
//!
//! Internally vertices are handled as *ring indices* `0 ..= n + 1` along the
//! walk `0, 1, ..., n, -1` that starts and ends at the base. Ring index
//! `t <= n` is label `t`; ring index `n + 1` is label `-1`. All public
//! interfaces speak labels.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DissectionError {
    #[error("n must be at least 1 (the 2-gon has no triangles)")]
    NOutOfRange,
    #[error("vertex label {label} outside -1..={n}")]
    LabelOutOfRange { label: i32, n: usize },
    #[error("degenerate diagonal at vertex {label}")]
    DegenerateDiagonal { label: i32 },
    #[error("({a},{b}) joins adjacent vertices and is not a diagonal")]
    AdjacentEndpoints { a: i32, b: i32 },
    #[error("duplicate diagonal ({a},{b})")]
    DuplicateDiagonal { a: i32, b: i32 },
    #[error("expected {expected} diagonals for n={n}, got {actual}")]
    WrongDiagonalCount {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("diagonals ({:?},{:?}) cross", first, second)]
    CrossingDiagonals { first: (i32, i32), second: (i32, i32) },
    #[error("malformed dissection JSON: {0}")]
    Json(String),
}

/// A triangle of a dissection, as a label triple sorted ascending
/// (`-1` first when present).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangle {
    vertices: [i32; 3],
}

impl Triangle {
    pub fn vertices(&self) -> [i32; 3] {
        self.vertices
    }

    /// Edges as sorted label pairs.
    pub fn edges(&self) -> [(i32, i32); 3] {
        let [a, b, c] = self.vertices;
        [(a, b), (b, c), (a, c)]
    }
}

/// A triangulation of the based `(n + 2)`-gon, stored canonically: each
/// diagonal as `(a, b)` with `a < b`, the list sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dissection {
    n: usize,
    diagonals: Vec<(i32, i32)>,
}

#[derive(Serialize, Deserialize)]
struct RawDissection {
    n: usize,
    diagonals: Vec<(i32, i32)>,
}

impl Dissection {
    /// Validates and normalizes a diagonal set into a dissection.
    pub fn new(
        n: usize,
        diagonals: impl IntoIterator<Item = (i32, i32)>,
    ) -> Result<Self, DissectionError> {
        if n == 0 {
            return Err(DissectionError::NOutOfRange);
        }
        let mut normalized = Vec::new();
        for (a, b) in diagonals {
            for label in [a, b] {
                if label < -1 || label > n as i32 {
                    return Err(DissectionError::LabelOutOfRange { label, n });
                }
            }
            if a == b {
                return Err(DissectionError::DegenerateDiagonal { label: a });
            }
            let (lo, hi) = (a.min(b), a.max(b));
            if labels_adjacent(lo, hi, n) {
                return Err(DissectionError::AdjacentEndpoints { a: lo, b: hi });
            }
            normalized.push((lo, hi));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(DissectionError::DuplicateDiagonal { a: w[0].0, b: w[0].1 });
        }
        if normalized.len() != n - 1 {
            return Err(DissectionError::WrongDiagonalCount {
                n,
                expected: n - 1,
                actual: normalized.len(),
            });
        }
        // Pairwise noncrossing, tested on ring indices: two chords cross iff
        // exactly one endpoint of the second lies strictly between the
        // endpoints of the first.
        let rings: Vec<(usize, usize)> = normalized
            .iter()
            .map(|&(a, b)| ring_pair(a, b, n))
            .collect();
        for i in 0..rings.len() {
            for j in i + 1..rings.len() {
                let (a, b) = rings[i];
                let (c, d) = rings[j];
                if (a < c && c < b) != (a < d && d < b)
                    && a != c
                    && a != d
                    && b != c
                    && b != d
                {
                    return Err(DissectionError::CrossingDiagonals {
                        first: normalized[i],
                        second: normalized[j],
                    });
                }
            }
        }
        Ok(Dissection {
            n,
            diagonals: normalized,
        })
    }

    /// Constructor for diagonals already known valid and canonically sorted
    /// (the enumerator produces these by construction).
    pub(crate) fn from_sorted_unchecked(n: usize, diagonals: Vec<(i32, i32)>) -> Self {
        debug_assert!(Dissection::new(n, diagonals.iter().copied()).is_ok());
        debug_assert!(diagonals.windows(2).all(|w| w[0] < w[1]));
        Dissection { n, diagonals }
    }

    /// Number of triangles.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical diagonal list: `(a, b)` with `a < b`, sorted.
    pub fn diagonals(&self) -> &[(i32, i32)] {
        &self.diagonals
    }

    /// The `n` triangles, each a sorted label triple. Recursion on the base
    /// edge: the apex of the triangle on an edge is the unique vertex seeing
    /// both endpoints through edges of the dissection.
    pub fn triangles(&self) -> Vec<Triangle> {
        let n = self.n;
        let has_diag = |lo: usize, hi: usize| {
            let (a, b) = (ring_to_label(lo, n), ring_to_label(hi, n));
            self.diagonals.binary_search(&(a.min(b), a.max(b))).is_ok()
        };
        // Child edges are consecutive ring indices (polygon sides) or
        // diagonals; the base `{0, n + 1}` only ever roots the recursion.
        let has_edge = |lo: usize, hi: usize| hi - lo == 1 || has_diag(lo, hi);
        let mut out = Vec::with_capacity(n);
        let mut stack = vec![(0usize, n + 1)];
        while let Some((lo, hi)) = stack.pop() {
            let apex = (lo + 1..hi)
                .find(|&m| has_edge(lo, m) && has_edge(m, hi))
                .expect("valid dissection has a triangle on every edge");
            let mut vs = [
                ring_to_label(lo, n),
                ring_to_label(apex, n),
                ring_to_label(hi, n),
            ];
            vs.sort_unstable();
            out.push(Triangle { vertices: vs });
            if hi - apex >= 2 {
                stack.push((apex, hi));
            }
            if apex - lo >= 2 {
                stack.push((lo, apex));
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of triangles with at least two polygon sides (the base
    /// counts as a side). The single triangle of `n = 1` has all three.
    pub fn ear_count(&self) -> usize {
        self.ear_statistics().0
    }

    /// Number of triangles with at least two non-base polygon sides.
    pub fn black_ear_count(&self) -> usize {
        self.ear_statistics().1
    }

    /// Both ear statistics from a single triangle extraction.
    pub fn ear_statistics(&self) -> (usize, usize) {
        let mut ears = 0;
        let mut black_ears = 0;
        for t in self.triangles() {
            if self.side_count(&t, true) >= 2 {
                ears += 1;
            }
            if self.side_count(&t, false) >= 2 {
                black_ears += 1;
            }
        }
        (ears, black_ears)
    }

    fn side_count(&self, t: &Triangle, include_base: bool) -> usize {
        t.edges()
            .into_iter()
            .filter(|&(a, b)| {
                labels_adjacent(a, b, self.n) && (include_base || (a, b) != (-1, 0))
            })
            .count()
    }

    /// Canonical JSON form: `{"n":N,"diagonals":[[a,b],...]}` with `a < b`
    /// per pair and pairs sorted lexicographically.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&RawDissection {
            n: self.n,
            diagonals: self.diagonals.clone(),
        })
        .expect("dissection serialization cannot fail")
    }

    /// Parses and validates the JSON form. Diagonal order and pair
    /// orientation are normalized; semantic violations are reported by name.
    pub fn from_json(text: &str) -> Result<Self, DissectionError> {
        let raw: RawDissection =
            serde_json::from_str(text).map_err(|e| DissectionError::Json(e.to_string()))?;
        Dissection::new(raw.n, raw.diagonals)
    }
}

/// Ring index along the walk `0, 1, ..., n, -1`.
pub(crate) fn label_to_ring(label: i32, n: usize) -> usize {
    if label == -1 {
        n + 1
    } else {
        label as usize
    }
}

pub(crate) fn ring_to_label(ring: usize, n: usize) -> i32 {
    if ring == n + 1 {
        -1
    } else {
        ring as i32
    }
}

fn ring_pair(a: i32, b: i32, n: usize) -> (usize, usize) {
    let (ra, rb) = (label_to_ring(a, n), label_to_ring(b, n));
    (ra.min(rb), ra.max(rb))
}

/// Whether two labels are adjacent on the polygon (so their chord is a side,
/// not a diagonal). Expects `a < b`.
fn labels_adjacent(a: i32, b: i32, n: usize) -> bool {
    b - a == 1 || (a == -1 && b == n as i32)
}

/// A fixed n = 8 dissection of the decagon with three ears, used as shared
/// test data across modules.
#[cfg(test)]
pub(crate) fn decagon_example() -> Dissection {
    Dissection::new(8, [(-1, 4), (-1, 5), (-1, 7), (0, 3), (0, 4), (1, 3), (5, 7)])
        .expect("decagon example is valid")
}
