/// Capacity limits for the exact (exponential-time) searches.
///
/// All limits are configuration values, not hard-coded constants, so tests
/// and the CLI can raise them for specific instances.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Largest vertex count accepted by the exact chromatic / independence
    /// branch-and-bound solvers.
    pub exact_vertices: usize,
    /// Largest vertex count accepted by the homomorphism search behind the
    /// multichromatic number.
    pub multichromatic_vertices: usize,
    /// Largest vertex count accepted by the hypergraph 2-colorability
    /// backtracking for uniformity >= 3.
    pub two_color_vertices: usize,
    /// Ceiling on (candidate classes)^n for the finite-field od search.
    pub od_search_space: f64,
    /// Ceiling on vertex counts produced by reductions.
    pub reduction_vertices: usize,
    /// Worker count for searches that support partitioned branches.
    pub workers: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            exact_vertices: 64,
            multichromatic_vertices: 16,
            two_color_vertices: 128,
            od_search_space: 1e9,
            reduction_vertices: 1_000_000,
            workers: 1,
        }
    }
}

impl SearchLimits {
    pub fn with_exact_vertices(mut self, n: usize) -> Self {
        self.exact_vertices = n;
        self
    }

    pub fn with_two_color_vertices(mut self, n: usize) -> Self {
        self.two_color_vertices = n;
        self
    }

    pub fn with_od_search_space(mut self, s: f64) -> Self {
        self.od_search_space = s;
        self
    }

    pub fn with_workers(mut self, w: usize) -> Self {
        self.workers = w.max(1);
        self
    }
}
