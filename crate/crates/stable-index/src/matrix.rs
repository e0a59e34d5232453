//! Dense square matrices over the saturated counting domain `{0, 1, 2}`.
//!
//! Entry `(i, j)` of the m-th saturated power of an adjacency matrix equals
//! `min(2, w)` where `w` is the exact number of length-m walks from `i` to
//! `j`. Saturation loses nothing here: when the exact count is 0 or 1 every
//! term of the convolution is exact, and when it is 2 or more either a
//! single term is already >= 2 or two distinct terms are >= 1, so the
//! clamped sum still reaches the cap. Deciding whether a power is 0-1 —
//! which is all the stable index needs — is therefore exact, while entries
//! stay in a `u8` no matter how large the true counts grow.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Entry cap. Any walk count of 2 or more is represented as 2.
pub const SATURATION: u8 = 2;

/// A square matrix with entries clamped at [`SATURATION`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SaturatingMatrix {
    dim: usize,
    entries: Vec<u8>,
}

impl SaturatingMatrix {
    /// The all-zero matrix.
    pub fn zeros(dim: usize) -> Self {
        SaturatingMatrix {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    /// The adjacency matrix of `d`: entry `(i, j)` is 1 iff `i -> j` is an arc.
    pub fn adjacency(d: &Digraph) -> Self {
        let mut m = SaturatingMatrix::zeros(d.order());
        for (u, v) in d.arcs() {
            m.entries[u * m.dim + v] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.dim + j]
    }

    /// Whether every entry is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().all(|&e| e < SATURATION)
    }

    /// The first saturated entry in row-major order, if any.
    pub fn first_saturated(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|&e| e >= SATURATION)
            .map(|pos| (pos / self.dim, pos % self.dim))
    }

    /// Saturated matrix product `self * rhs`.
    pub fn sat_multiply(&self, rhs: &SaturatingMatrix) -> Result<SaturatingMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let mut out = SaturatingMatrix::zeros(self.dim);
        self.sat_multiply_into(rhs, &mut out);
        Ok(out)
    }

    /// Saturated product written into an existing matrix of the same
    /// dimension, allocation-free. The hot path of the exhaustive sweeps.
    pub(crate) fn sat_multiply_into(&self, rhs: &SaturatingMatrix, out: &mut SaturatingMatrix) {
        let n = self.dim;
        debug_assert_eq!(rhs.dim, n);
        debug_assert_eq!(out.dim, n);
        out.entries.fill(0);
        for i in 0..n {
            let out_row = &mut out.entries[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                let rhs_row = &rhs.entries[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o = (*o + a * b).min(SATURATION);
                }
            }
        }
    }

    /// The raw entries, row-major. Used as a hash key for repeat detection.
    pub(crate) fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Clears every entry and writes the adjacency pattern of `code`
    /// interpreted as an `n * n`-bit arc indicator (bit `i*n + j` set means
    /// arc `i -> j`). The matrix dimension must already be `n`.
    pub(crate) fn load_bits(&mut self, code: u128) {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                self.entries[i * n + j] = ((code >> (i * n + j)) & 1) as u8;
            }
        }
    }

    /// Writes one adjacency row per word: bit `j` of `rows[i]` is the arc
    /// `i -> j`. Used by the seeded sampler.
    pub(crate) fn load_rows(&mut self, rows: &[u64]) {
        let n = self.dim;
        debug_assert_eq!(rows.len(), n);
        for (i, &row) in rows.iter().enumerate() {
            for j in 0..n {
                self.entries[i * n + j] = ((row >> j) & 1) as u8;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digraph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::from_arcs(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn adjacency_layout() {
        let d = digraph(3, &[(0, 1), (1, 2), (2, 0), (0, 0)]);
        let a = SaturatingMatrix::adjacency(&d);
        assert_eq!(a.get(0, 1), 1);
        assert_eq!(a.get(0, 0), 1);
        assert_eq!(a.get(1, 0), 0);
        assert!(a.is_zero_one());
        assert_eq!(a.first_saturated(), None);
    }

    #[test]
    fn squaring_the_two_vertex_clique_saturates() {
        // 0 <-> 1 with loops: four length-2 walks from each vertex to itself.
        let d = digraph(2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let a = SaturatingMatrix::adjacency(&d);
        let sq = a.sat_multiply(&a).unwrap();
        assert!(!sq.is_zero_one());
        assert_eq!(sq.first_saturated(), Some((0, 0)));
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(sq.get(i, j), SATURATION);
            }
        }
    }

    #[test]
    fn cycle_powers_stay_zero_one() {
        let d = digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let a = SaturatingMatrix::adjacency(&d);
        let mut p = a.clone();
        for _ in 0..10 {
            p = p.sat_multiply(&a).unwrap();
            assert!(p.is_zero_one());
        }
    }

    #[test]
    fn saturation_matches_exact_counts_clamped() {
        // Two parallel length-2 routes 0 -> 3 and a third via a loop.
        let d = digraph(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 0)]);
        let a = SaturatingMatrix::adjacency(&d);
        let sq = a.sat_multiply(&a).unwrap();
        // Exactly two length-2 walks 0 -> 3 (via 1 and via 2).
        assert_eq!(sq.get(0, 3), 2);
        // Exactly one length-2 walk 0 -> 1 (loop then arc).
        assert_eq!(sq.get(0, 1), 1);
        assert_eq!(sq.get(1, 3), 0);
    }

    #[test]
    fn multiply_rejects_dimension_mismatch() {
        let a = SaturatingMatrix::zeros(2);
        let b = SaturatingMatrix::zeros(3);
        assert_eq!(
            a.sat_multiply(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn load_bits_matches_adjacency() {
        // Arcs (0,1) and (1,0) on 2 vertices: bits 1 and 2.
        let code: u128 = 0b0110;
        let mut m = SaturatingMatrix::zeros(2);
        m.load_bits(code);
        let d = digraph(2, &[(0, 1), (1, 0)]);
        assert_eq!(m, SaturatingMatrix::adjacency(&d));
    }
}
