//! Lattice geometry: extents, site indexing, neighbor pairs, and the Hilbert
//! dimension cap for quantum paths.
//!
//! Kronecker ordering convention: site 0 is the leftmost (most significant)
//! tensor factor. Embedding and partial trace both follow it.

use crate::error::{Error, Result};

/// Default cap on the total Hilbert dimension for quantum paths.
pub const DEFAULT_DIMENSION_CAP: usize = 4096;

/// A 1D or 2D lattice of identical local systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    dims: Vec<usize>,
    local_dim: usize,
    periodic: bool,
    cap: usize,
}

impl LatticeSpec {
    pub fn new(dims: Vec<usize>, local_dim: usize, periodic: bool) -> Result<Self> {
        if dims.is_empty() || dims.len() > 2 {
            return Err(Error::Config(format!(
                "lattice must be 1D or 2D, got {} extents",
                dims.len()
            )));
        }
        if dims.iter().any(|&d| d == 0) || local_dim < 2 {
            return Err(Error::Config("lattice extents and local dimension must be positive".into()));
        }
        Ok(Self { dims, local_dim, periodic, cap: DEFAULT_DIMENSION_CAP })
    }

    /// Periodic chain of qubit-like sites.
    pub fn ring(sites: usize, local_dim: usize) -> Result<Self> {
        Self::new(vec![sites], local_dim, true)
    }

    /// Open chain.
    pub fn chain(sites: usize, local_dim: usize) -> Result<Self> {
        Self::new(vec![sites], local_dim, false)
    }

    /// Square lattice.
    pub fn square(lx: usize, ly: usize, local_dim: usize, periodic: bool) -> Result<Self> {
        Self::new(vec![lx, ly], local_dim, periodic)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn periodic(&self) -> bool {
        self.periodic
    }

    pub fn sites(&self) -> usize {
        self.dims.iter().product()
    }

    /// local_dim^sites, checked against the cap.
    pub fn hilbert_dim(&self) -> Result<usize> {
        let mut dim = 1usize;
        for _ in 0..self.sites() {
            dim = dim
                .checked_mul(self.local_dim)
                .ok_or(Error::DimensionCap { dim: usize::MAX, cap: self.cap })?;
            if dim > self.cap {
                return Err(Error::DimensionCap { dim, cap: self.cap });
            }
        }
        Ok(dim)
    }

    /// Row-major site index for 2D lattices; identity for 1D.
    pub fn site_index(&self, coords: &[usize]) -> usize {
        match self.dims.len() {
            1 => coords[0],
            _ => coords[0] * self.dims[1] + coords[1],
        }
    }

    /// Nearest-neighbor pairs under the lattice metric, each unordered pair
    /// once; periodic wrap included when periodic.
    pub fn neighbor_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        match self.dims.len() {
            1 => {
                let n = self.dims[0];
                for i in 0..n.saturating_sub(1) {
                    pairs.push((i, i + 1));
                }
                if self.periodic && n > 2 {
                    pairs.push((0, n - 1));
                }
            }
            _ => {
                let (lx, ly) = (self.dims[0], self.dims[1]);
                for x in 0..lx {
                    for y in 0..ly {
                        let here = self.site_index(&[x, y]);
                        if x + 1 < lx {
                            pairs.push((here, self.site_index(&[x + 1, y])));
                        } else if self.periodic && lx > 2 {
                            pairs.push((self.site_index(&[0, y]), here));
                        }
                        if y + 1 < ly {
                            pairs.push((here, self.site_index(&[x, y + 1])));
                        } else if self.periodic && ly > 2 {
                            pairs.push((self.site_index(&[x, 0]), here));
                        }
                    }
                }
            }
        }
        pairs
    }

    /// Stride of `site` in the full Hilbert index (site 0 most significant).
    pub fn site_stride(&self, site: usize) -> usize {
        self.local_dim.pow((self.sites() - 1 - site) as u32)
    }

    /// Decompose a Hilbert basis index into per-site digits.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let n = self.sites();
        let mut out = vec![0; n];
        for site in (0..n).rev() {
            out[site] = index % self.local_dim;
            index /= self.local_dim;
        }
        out
    }

    /// Recompose per-site digits into a Hilbert basis index.
    pub fn index_from_digits(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.local_dim + d)
    }
}
