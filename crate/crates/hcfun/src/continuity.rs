//! Segment- and Hausdorff-continuity.
//!
//! A function is s-continuous when the graph completion fixes it. It is
//! H-continuous when it is additionally minimal: no s-continuous function
//! strictly inside it exists. H-continuity is decided here through the
//! endpoint characterization `F([f_lo, f_lo]) = f = F([f_hi, f_hi])`,
//! which is cross-checked against a literal brute-force minimality oracle
//! on small complexes.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::baire::graph_completion;
use crate::complex::{CellId, CellIntervalFunction, CubicalComplex};
use crate::extreal::{ExtReal, Interval};
use crate::{Error, Result};

/// Largest complex the brute-force oracle accepts.
pub const ORACLE_CELL_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    #[serde(rename = "graph-completion-mismatch")]
    GraphCompletionMismatch,
    #[serde(rename = "minimality-violation")]
    MinimalityViolation,
    #[serde(rename = "none")]
    None,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContinuityVerdict {
    pub s_continuous: bool,
    pub h_continuous: bool,
    pub witness: Option<String>,
    pub witness_kind: WitnessKind,
}

impl ContinuityVerdict {
    fn pass(s: bool, h: bool) -> Self {
        ContinuityVerdict {
            s_continuous: s,
            h_continuous: h,
            witness: None,
            witness_kind: WitnessKind::None,
        }
    }
}

/// First cell in canonical order where `a` and `b` differ.
fn first_mismatch(a: &CellIntervalFunction, b: &CellIntervalFunction) -> Option<CellId> {
    a.complex()
        .canonical_cells()
        .into_iter()
        .find(|&c| a.value(c) != b.value(c))
}

/// Checks `F(f) = f`.
pub fn is_s_continuous(f: &CellIntervalFunction) -> ContinuityVerdict {
    let completed = graph_completion(f);
    match first_mismatch(&completed, f) {
        None => ContinuityVerdict::pass(true, false),
        Some(c) => ContinuityVerdict {
            s_continuous: false,
            h_continuous: false,
            witness: Some(f.complex().cell_code(c).unwrap()),
            witness_kind: WitnessKind::GraphCompletionMismatch,
        },
    }
}

/// Checks H-continuity via the endpoint characterization: `f` must be
/// s-continuous and both `F([f_lo, f_lo])` and `F([f_hi, f_hi])` must
/// reproduce `f`.
pub fn is_h_continuous(f: &CellIntervalFunction) -> ContinuityVerdict {
    let s = is_s_continuous(f);
    if !s.s_continuous {
        return s;
    }
    for endpoint in [f.lower_endpoint(), f.upper_endpoint()] {
        let completed = graph_completion(&endpoint);
        if let Some(c) = first_mismatch(&completed, f) {
            return ContinuityVerdict {
                s_continuous: true,
                h_continuous: false,
                witness: Some(f.complex().cell_code(c).unwrap()),
                witness_kind: WitnessKind::MinimalityViolation,
            };
        }
    }
    ContinuityVerdict::pass(true, true)
}

/// Literal minimality check by enumeration: searches for an s-continuous
/// `g != f` with `g(c) ⊆ f(c)` everywhere, endpoints drawn from the given
/// alphabet. Returns `true` when no such `g` exists.
///
/// Graph completions only combine existing endpoints through star
/// mins/maxes, so candidates over the endpoint alphabet of `f` suffice;
/// callers may widen the alphabet to spot-check that assumption.
fn minimality_by_enumeration(f: &CellIntervalFunction, alphabet: &BTreeSet<ExtReal>) -> bool {
    let complex = f.complex();
    let n = complex.cell_count();
    let letters: Vec<ExtReal> = alphabet.iter().copied().collect();

    // candidate sub-intervals per cell
    let candidates: Vec<Vec<Interval>> = complex
        .cells()
        .map(|c| {
            let bounds = f.value(c);
            let mut list = Vec::new();
            for (i, &p) in letters.iter().enumerate() {
                for &q in &letters[i..] {
                    let cand = Interval::new(p, q).unwrap();
                    if cand.subset(&bounds) {
                        list.push(cand);
                    }
                }
            }
            list
        })
        .collect();

    // Assign top-dimensional cells first: a lower cell's star is then
    // fully known as soon as the cell itself is reached, so the
    // s-continuity constraint prunes immediately instead of at the end.
    let mut order: Vec<CellId> = complex.cells().collect();
    order.sort_by_key(|&c| (std::cmp::Reverse(complex.cell_dim(c).unwrap()), c));
    let mut rank = vec![0usize; n];
    for (r, &c) in order.iter().enumerate() {
        rank[c.0] = r;
    }

    let stars: Vec<Vec<CellId>> = complex.cells().map(|c| complex.star(c).unwrap()).collect();
    let mut checkable_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, star) in stars.iter().enumerate() {
        let last = star.iter().map(|d| rank[d.0]).max().unwrap();
        checkable_at[last].push(c);
    }

    struct Search<'a> {
        f: &'a CellIntervalFunction,
        order: &'a [CellId],
        candidates: &'a [Vec<Interval>],
        stars: &'a [Vec<CellId>],
        checkable_at: &'a [Vec<usize>],
        assigned: Vec<Option<Interval>>,
    }

    impl Search<'_> {
        // true when some complete s-continuous assignment differing
        // from f exists
        fn run(&mut self, step: usize, any_diff: bool) -> bool {
            if step == self.order.len() {
                return any_diff;
            }
            let cell = self.order[step];
            for i in 0..self.candidates[cell.0].len() {
                let cand = self.candidates[cell.0][i];
                self.assigned[cell.0] = Some(cand);
                let ok = self.checkable_at[step].iter().all(|&c| {
                    let lo = self.stars[c]
                        .iter()
                        .map(|d| self.assigned[d.0].unwrap().lo())
                        .min()
                        .unwrap();
                    let hi = self.stars[c]
                        .iter()
                        .map(|d| self.assigned[d.0].unwrap().hi())
                        .max()
                        .unwrap();
                    self.assigned[c] == Some(Interval::new(lo, hi).unwrap())
                });
                if ok && self.run(step + 1, any_diff || cand != self.f.value(cell)) {
                    self.assigned[cell.0] = None;
                    return true;
                }
            }
            self.assigned[cell.0] = None;
            false
        }
    }

    let mut search = Search {
        f,
        order: &order,
        candidates: &candidates,
        stars: &stars,
        checkable_at: &checkable_at,
        assigned: vec![None; n],
    };
    !search.run(0, false)
}

/// Brute-force H-continuity oracle over the endpoint alphabet of `f`.
/// Requires `f` s-continuous and at most [`ORACLE_CELL_LIMIT`] cells.
pub fn brute_force_h_oracle(f: &CellIntervalFunction) -> Result<bool> {
    brute_force_h_oracle_with_extra(f, &[])
}

/// Same oracle with extra alphabet letters, for spot-checking that the
/// endpoint alphabet is rich enough.
pub fn brute_force_h_oracle_with_extra(
    f: &CellIntervalFunction,
    extra: &[ExtReal],
) -> Result<bool> {
    let n = f.complex().cell_count();
    if n > ORACLE_CELL_LIMIT {
        return Err(Error::OracleTooLarge(n, ORACLE_CELL_LIMIT));
    }
    if !is_s_continuous(f).s_continuous {
        return Err(Error::NotSContinuous);
    }
    let mut alphabet: BTreeSet<ExtReal> = f
        .values()
        .iter()
        .flat_map(|v| [v.lo(), v.hi()])
        .collect();
    alphabet.extend(extra.iter().copied());
    Ok(minimality_by_enumeration(f, &alphabet))
}

/// Extends top-cell data to the whole complex: every lower cell gets the
/// hull of the top-cell values its star meets. The result is always
/// s-continuous; with degenerate top values it is H-continuous.
pub fn extend_from_dense(
    complex: &Arc<CubicalComplex>,
    top_values: &BTreeMap<CellId, Interval>,
) -> Result<CellIntervalFunction> {
    for &c in top_values.keys() {
        if !complex.is_top_cell(c)? {
            return Err(Error::UnknownCell(format!(
                "cell {} is not top-dimensional",
                complex.cell_code(c)?
            )));
        }
    }
    for c in complex.top_cells() {
        if !top_values.contains_key(&c) {
            return Err(Error::UnknownCell(format!(
                "missing value for top cell {}",
                complex.cell_code(c)?
            )));
        }
    }
    let values = complex
        .cells()
        .map(|c| {
            let star = complex.star(c).unwrap();
            let tops: Vec<Interval> = star
                .iter()
                .filter(|&&d| complex.is_top_cell(d).unwrap())
                .map(|d| top_values[d])
                .collect();
            let lo = tops.iter().map(|v| v.lo()).min().unwrap();
            let hi = tops.iter().map(|v| v.hi()).max().unwrap();
            Interval::new(lo, hi).unwrap()
        })
        .collect();
    CellIntervalFunction::new(Arc::clone(complex), values)
}

/// Which dense-determination hypothesis to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DenseCompareMode {
    /// lower endpoints ordered on the dense set
    Lower,
    /// upper endpoints ordered on the dense set
    Upper,
    /// full interval order on the dense set
    Interval,
    /// equality on the dense set
    Equal,
}

/// Evaluates the selected hypothesis on the dense set of top-dimensional
/// cells only. Both inputs must be H-continuous; the dense-determination
/// property then promotes a true hypothesis to the whole complex, which
/// callers can assert against the full comparison.
pub fn dense_compare(
    f: &CellIntervalFunction,
    g: &CellIntervalFunction,
    mode: DenseCompareMode,
) -> Result<bool> {
    if !f.same_complex(g) {
        return Err(Error::ComplexMismatch);
    }
    if !is_h_continuous(f).h_continuous || !is_h_continuous(g).h_continuous {
        return Err(Error::NotHContinuous);
    }
    let tops = f.complex().top_cells();
    Ok(tops.into_iter().all(|c| {
        let (a, b) = (f.value(c), g.value(c));
        match mode {
            DenseCompareMode::Lower => a.lo() <= b.lo(),
            DenseCompareMode::Upper => a.hi() <= b.hi(),
            DenseCompareMode::Interval => a.leq(&b),
            DenseCompareMode::Equal => a == b,
        }
    }))
}
