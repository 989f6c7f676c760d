//! Finite regular cubical complexes in one and two dimensions, and
//! interval-valued functions on their cells.
//!
//! An axis with `k` breakpoints decomposes the line into `2k + 1` cells:
//! `k` vertices interleaved with `k + 1` open edges, the outermost edges
//! unbounded so the complex covers an open set. A 2-D complex is the
//! product of two such axes. The star of a cell collects every cell whose
//! closure contains it; on piecewise-per-cell data it plays the role of an
//! arbitrarily small neighborhood.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::extreal::Interval;
use crate::{Error, Result};

/// Flat index of a cell within its complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId(pub usize);

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Per-axis cell: even indices are open edges, odd indices are vertices.
/// Edge `j` spans `(b[j-1], b[j])` with the outer edges unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum AxisCell {
    Edge(usize),
    Vertex(usize),
}

impl AxisCell {
    fn from_index(i: usize) -> Self {
        if i % 2 == 0 {
            AxisCell::Edge(i / 2)
        } else {
            AxisCell::Vertex(i / 2)
        }
    }

    fn code(self) -> String {
        match self {
            AxisCell::Edge(j) => format!("e{j}"),
            AxisCell::Vertex(j) => format!("v{j}"),
        }
    }

    // 'e' sorts before 'v', indices numerically.
    fn sort_key(self) -> (u8, usize) {
        match self {
            AxisCell::Edge(j) => (0, j),
            AxisCell::Vertex(j) => (1, j),
        }
    }
}

#[derive(Debug, PartialEq)]
pub struct CubicalComplex {
    axes: Vec<Vec<f64>>,
}

impl CubicalComplex {
    /// Builds the complex induced by per-axis breakpoint sequences.
    /// `dimension` must be 1 or 2 and match the number of axes; each axis
    /// needs at least one breakpoint, strictly increasing and finite.
    pub fn build(dimension: usize, grid_lines: Vec<Vec<f64>>) -> Result<Arc<Self>> {
        if dimension != 1 && dimension != 2 {
            return Err(Error::InvalidComplex(format!(
                "dimension must be 1 or 2, got {dimension}"
            )));
        }
        if grid_lines.len() != dimension {
            return Err(Error::InvalidComplex(format!(
                "expected {dimension} axes, got {}",
                grid_lines.len()
            )));
        }
        for (axis, bps) in grid_lines.iter().enumerate() {
            if bps.is_empty() {
                return Err(Error::InvalidComplex(format!("axis {axis} has no breakpoints")));
            }
            for w in bps.windows(2) {
                if !(w[0] < w[1]) {
                    return Err(Error::InvalidComplex(format!(
                        "axis {axis} breakpoints must be strictly increasing"
                    )));
                }
            }
            if bps.iter().any(|b| !b.is_finite()) {
                return Err(Error::InvalidComplex(format!(
                    "axis {axis} breakpoints must be finite"
                )));
            }
        }
        Ok(Arc::new(CubicalComplex { axes: grid_lines }))
    }

    pub fn dimension(&self) -> usize {
        self.axes.len()
    }

    pub fn breakpoints(&self, axis: usize) -> &[f64] {
        &self.axes[axis]
    }

    fn axis_len(&self, axis: usize) -> usize {
        2 * self.axes[axis].len() + 1
    }

    pub fn cell_count(&self) -> usize {
        (0..self.dimension()).map(|a| self.axis_len(a)).product()
    }

    pub fn cells(&self) -> impl Iterator<Item = CellId> {
        (0..self.cell_count()).map(CellId)
    }

    fn check_cell(&self, cell: CellId) -> Result<()> {
        if cell.0 < self.cell_count() {
            Ok(())
        } else {
            Err(Error::UnknownCell(format!("cell index {} out of range", cell.0)))
        }
    }

    fn axis_indices(&self, cell: CellId) -> Vec<usize> {
        match self.dimension() {
            1 => vec![cell.0],
            2 => {
                let n1 = self.axis_len(1);
                vec![cell.0 / n1, cell.0 % n1]
            }
            _ => unreachable!(),
        }
    }

    fn from_axis_indices(&self, idx: &[usize]) -> CellId {
        match self.dimension() {
            1 => CellId(idx[0]),
            2 => CellId(idx[0] * self.axis_len(1) + idx[1]),
            _ => unreachable!(),
        }
    }

    /// Dimension of the cell itself: number of edge factors.
    pub fn cell_dim(&self, cell: CellId) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self
            .axis_indices(cell)
            .iter()
            .filter(|&&i| i % 2 == 0)
            .count())
    }

    pub fn is_top_cell(&self, cell: CellId) -> Result<bool> {
        Ok(self.cell_dim(cell)? == self.dimension())
    }

    pub fn top_cells(&self) -> Vec<CellId> {
        self.cells()
            .filter(|&c| self.is_top_cell(c).unwrap())
            .collect()
    }

    /// The star of a cell: every cell whose closure contains it, the cell
    /// itself included. Product of per-axis stars; a per-axis vertex pulls
    /// in its two adjacent edges, an edge only itself.
    pub fn star(&self, cell: CellId) -> Result<Vec<CellId>> {
        self.check_cell(cell)?;
        let idx = self.axis_indices(cell);
        let per_axis: Vec<Vec<usize>> = idx
            .iter()
            .map(|&i| {
                if i % 2 == 0 {
                    vec![i]
                } else {
                    vec![i - 1, i, i + 1]
                }
            })
            .collect();
        let mut out = Vec::new();
        match per_axis.len() {
            1 => {
                for &i in &per_axis[0] {
                    out.push(self.from_axis_indices(&[i]));
                }
            }
            2 => {
                for &i in &per_axis[0] {
                    for &j in &per_axis[1] {
                        out.push(self.from_axis_indices(&[i, j]));
                    }
                }
            }
            _ => unreachable!(),
        }
        out.sort();
        Ok(out)
    }

    /// Canonical cell coordinate code: per axis `v<i>` or `e<i>`, axes
    /// joined with a comma in 2-D.
    pub fn cell_code(&self, cell: CellId) -> Result<String> {
        self.check_cell(cell)?;
        let codes: Vec<String> = self
            .axis_indices(cell)
            .iter()
            .map(|&i| AxisCell::from_index(i).code())
            .collect();
        Ok(codes.join(","))
    }

    pub fn parse_cell_code(&self, code: &str) -> Result<CellId> {
        let parts: Vec<&str> = code.split(',').collect();
        if parts.len() != self.dimension() {
            return Err(Error::UnknownCell(format!(
                "cell code {code:?} has {} axes, complex has {}",
                parts.len(),
                self.dimension()
            )));
        }
        let mut idx = Vec::with_capacity(parts.len());
        for (axis, part) in parts.iter().enumerate() {
            let bad = || Error::UnknownCell(format!("malformed cell code {code:?}"));
            let (kind, num) = part.split_at(1);
            let j: usize = num.parse().map_err(|_| bad())?;
            let k = self.axes[axis].len();
            let i = match kind {
                "e" if j <= k => 2 * j,
                "v" if j < k => 2 * j + 1,
                _ => return Err(bad()),
            };
            idx.push(i);
        }
        Ok(self.from_axis_indices(&idx))
    }

    /// Cells sorted by their codes, edges before vertices per axis,
    /// indices numerically. Used wherever deterministic output order
    /// matters (witness reporting, file emission).
    pub fn canonical_cells(&self) -> Vec<CellId> {
        let mut cells: Vec<CellId> = self.cells().collect();
        cells.sort_by_key(|&c| {
            self.axis_indices(c)
                .iter()
                .map(|&i| AxisCell::from_index(i).sort_key())
                .collect::<Vec<_>>()
        });
        cells
    }

    /// Locates the unique cell containing a point. A coordinate equal to a
    /// breakpoint lands on the vertex; comparisons are exact.
    pub fn locate(&self, point: &[f64]) -> Result<CellId> {
        if point.len() != self.dimension() {
            return Err(Error::OutsideDomain(point.to_vec()));
        }
        let mut idx = Vec::with_capacity(point.len());
        for (axis, &x) in point.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::OutsideDomain(point.to_vec()));
            }
            let bps = &self.axes[axis];
            let below = bps.partition_point(|&b| b < x);
            if below < bps.len() && bps[below] == x {
                idx.push(2 * below + 1);
            } else {
                idx.push(2 * below);
            }
        }
        Ok(self.from_axis_indices(&idx))
    }
}

/// Assignment of an interval to every cell of a complex.
#[derive(Clone, Debug)]
pub struct CellIntervalFunction {
    complex: Arc<CubicalComplex>,
    values: Vec<Interval>,
}

impl CellIntervalFunction {
    pub fn new(complex: Arc<CubicalComplex>, values: Vec<Interval>) -> Result<Self> {
        if values.len() != complex.cell_count() {
            return Err(Error::InvalidComplex(format!(
                "expected {} cell values, got {}",
                complex.cell_count(),
                values.len()
            )));
        }
        Ok(CellIntervalFunction { complex, values })
    }

    pub fn from_fn(complex: Arc<CubicalComplex>, f: impl FnMut(CellId) -> Interval) -> Self {
        let values = complex.cells().map(f).collect();
        CellIntervalFunction { complex, values }
    }

    pub fn constant(complex: Arc<CubicalComplex>, value: Interval) -> Self {
        Self::from_fn(complex, |_| value)
    }

    pub fn complex(&self) -> &Arc<CubicalComplex> {
        &self.complex
    }

    pub fn value(&self, cell: CellId) -> Interval {
        self.values[cell.0]
    }

    pub fn values(&self) -> &[Interval] {
        &self.values
    }

    pub fn same_complex(&self, other: &CellIntervalFunction) -> bool {
        Arc::ptr_eq(&self.complex, &other.complex) || *self.complex == *other.complex
    }

    /// Pointwise interval order over all cells.
    pub fn pointwise_leq(&self, other: &CellIntervalFunction) -> Result<bool> {
        if !self.same_complex(other) {
            return Err(Error::ComplexMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.leq(b)))
    }

    /// Splits into the degenerate-valued lower and upper endpoint functions.
    pub fn endpoint_decomposition(&self) -> (CellIntervalFunction, CellIntervalFunction) {
        (self.lower_endpoint(), self.upper_endpoint())
    }

    pub fn lower_endpoint(&self) -> CellIntervalFunction {
        CellIntervalFunction {
            complex: Arc::clone(&self.complex),
            values: self.values.iter().map(|v| Interval::point(v.lo())).collect(),
        }
    }

    pub fn upper_endpoint(&self) -> CellIntervalFunction {
        CellIntervalFunction {
            complex: Arc::clone(&self.complex),
            values: self.values.iter().map(|v| Interval::point(v.hi())).collect(),
        }
    }

    pub fn is_point_valued(&self) -> bool {
        self.values.iter().all(|v| v.is_degenerate())
    }

    /// Cellwise equality on a shared complex.
    pub fn equals(&self, other: &CellIntervalFunction) -> Result<bool> {
        if !self.same_complex(other) {
            return Err(Error::ComplexMismatch);
        }
        Ok(self.values == other.values)
    }
}

/// On-disk function description.
#[derive(Debug, Serialize, Deserialize)]
pub struct FunctionSpecFile {
    pub dimension: usize,
    pub breakpoints: Vec<Vec<f64>>,
    pub values: Vec<CellValueEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CellValueEntry {
    pub cell: String,
    pub value: Interval,
}

impl CellIntervalFunction {
    /// Emits the file form, cells in canonical order.
    pub fn to_spec_file(&self) -> FunctionSpecFile {
        let values = self
            .complex
            .canonical_cells()
            .into_iter()
            .map(|c| CellValueEntry {
                cell: self.complex.cell_code(c).unwrap(),
                value: self.value(c),
            })
            .collect();
        FunctionSpecFile {
            dimension: self.complex.dimension(),
            breakpoints: self.complex.axes.clone(),
            values,
        }
    }

    /// Rebuilds a function from its file form; every cell must appear
    /// exactly once.
    pub fn from_spec_file(file: &FunctionSpecFile) -> Result<Self> {
        let complex = CubicalComplex::build(file.dimension, file.breakpoints.clone())?;
        let mut seen: BTreeMap<CellId, Interval> = BTreeMap::new();
        for entry in &file.values {
            let cell = complex.parse_cell_code(&entry.cell)?;
            if seen.insert(cell, entry.value).is_some() {
                return Err(Error::Parse(format!("cell {:?} listed twice", entry.cell)));
            }
        }
        if seen.len() != complex.cell_count() {
            return Err(Error::Parse(format!(
                "expected {} cells, file lists {}",
                complex.cell_count(),
                seen.len()
            )));
        }
        let values = complex.cells().map(|c| seen[&c]).collect();
        CellIntervalFunction::new(complex, values)
    }
}
