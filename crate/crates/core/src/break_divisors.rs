//! Break divisors on the covering graph of a symmetric quiver and their
//! orbits under permutations within vertex groups.

use crate::series::{DimVector, QuiverMatrix};
use crate::Error;

/// The multigraph with `d_i` vertices over quiver vertex `i` and
/// `a_ij - delta_ij` edges between any two distinct vertices over `i`, `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringGraph {
    groups: Vec<Vec<usize>>,
    group_of: Vec<usize>,
    mult: Vec<Vec<u32>>,
}

impl CoveringGraph {
    pub fn num_vertices(&self) -> usize {
        self.group_of.len()
    }

    /// Graph vertices over each quiver vertex.
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn group_of(&self, v: usize) -> usize {
        self.group_of[v]
    }

    /// Number of edges between `v` and `w` (zero when `v == w`).
    pub fn multiplicity(&self, v: usize, w: usize) -> u32 {
        self.mult[v][w]
    }

    pub fn edge_count(&self) -> u64 {
        let n = self.num_vertices();
        (0..n)
            .flat_map(|v| (v + 1..n).map(move |w| (v, w)))
            .map(|(v, w)| u64::from(self.mult[v][w]))
            .sum()
    }

    /// `|E| - |V| + 1` of the whole graph.
    pub fn genus(&self) -> i64 {
        self.edge_count() as i64 - self.num_vertices() as i64 + 1
    }

    fn mask_edges(&self, mask: u64) -> u64 {
        let vs: Vec<usize> = members(mask).collect();
        let mut e = 0;
        for (k, &v) in vs.iter().enumerate() {
            for &w in &vs[k + 1..] {
                e += u64::from(self.mult[v][w]);
            }
        }
        e
    }

    fn mask_connected(&self, mask: u64) -> bool {
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in members(mask & !seen) {
                if self.mult[v][w] > 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen == mask
    }
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

/// An effective divisor: one nonnegative value per graph vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor(pub Vec<u32>);

impl Divisor {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&v| u64::from(v)).sum()
    }
}

/// Graphs beyond this size are refused: the break test enumerates vertex
/// subsets.
pub const MAX_VERTICES: usize = 24;

pub fn build_covering_graph(a: &QuiverMatrix, d: &DimVector) -> Result<CoveringGraph, Error> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if d.len() != a.n() {
        return Err(Error::InvalidInput(format!(
            "dimension vector {d} does not match a {0}x{0} matrix",
            a.n()
        )));
    }
    let mut groups = Vec::with_capacity(a.n());
    let mut group_of = Vec::new();
    for (i, &di) in d.components().iter().enumerate() {
        if a.entry(i, i) == 0 && di >= 2 {
            return Err(Error::Precondition(format!(
                "vertex {i} has no loop, so its {di} covering vertices would need -1 edges"
            )));
        }
        let start = group_of.len();
        group_of.extend(std::iter::repeat_n(i, di as usize));
        groups.push((start..group_of.len()).collect());
    }
    let nv = group_of.len();
    if nv > MAX_VERTICES {
        return Err(Error::InvalidInput(format!(
            "covering graph would have {nv} vertices; at most {MAX_VERTICES} are supported"
        )));
    }
    let mut mult = vec![vec![0; nv]; nv];
    for v in 0..nv {
        for w in 0..nv {
            if v != w {
                let (i, j) = (group_of[v], group_of[w]);
                mult[v][w] = a.entry(i, j) - u32::from(i == j);
            }
        }
    }
    Ok(CoveringGraph {
        groups,
        group_of,
        mult,
    })
}

/// Genus of the subgraph induced on `s`, edges counted with multiplicity.
pub fn genus_of_induced(g: &CoveringGraph, s: &[usize]) -> Result<i64, Error> {
    if s.is_empty() {
        return Err(Error::InvalidInput("vertex subset is empty".into()));
    }
    let mut mask = 0u64;
    for &v in s {
        if v >= g.num_vertices() {
            return Err(Error::InvalidInput(format!(
                "no vertex {v} in the covering graph"
            )));
        }
        mask |= 1 << v;
    }
    Ok(g.mask_edges(mask) as i64 - i64::from(mask.count_ones()) + 1)
}

/// Degree constraints of every connected induced subgraph.
struct BreakChecker {
    genus: i64,
    constraints: Vec<(u64, i64)>,
}

impl BreakChecker {
    fn new(g: &CoveringGraph) -> Self {
        let nv = g.num_vertices();
        let mut constraints = Vec::new();
        for mask in 1u64..(1 << nv) {
            if !g.mask_connected(mask) {
                continue;
            }
            let genus = g.mask_edges(mask) as i64 - i64::from(mask.count_ones()) + 1;
            // the bound D >= 0 already covers genus <= 0
            if genus > 0 {
                constraints.push((mask, genus));
            }
        }
        Self {
            genus: g.genus(),
            constraints,
        }
    }

    fn accepts(&self, values: &[u32]) -> bool {
        let degree: u64 = values.iter().map(|&v| u64::from(v)).sum();
        if degree as i64 != self.genus {
            return false;
        }
        self.constraints.iter().all(|&(mask, genus)| {
            let s: u64 = members(mask).map(|v| u64::from(values[v])).sum();
            s as i64 >= genus
        })
    }
}

/// `deg D = g(G)` and `D(S) >= g(G[S])` for every connected induced `G[S]`.
pub fn is_break_divisor(g: &CoveringGraph, divisor: &Divisor) -> bool {
    divisor.0.len() == g.num_vertices() && BreakChecker::new(g).accepts(&divisor.0)
}

/// Every divisor of degree `g(G)` that is nonincreasing within each group.
fn canonical_candidates(g: &CoveringGraph) -> Vec<Divisor> {
    fn go(g: &CoveringGraph, pos: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Divisor>) {
        if pos == g.num_vertices() {
            if rem == 0 {
                out.push(Divisor(cur.clone()));
            }
            return;
        }
        let cap = match pos.checked_sub(1) {
            Some(p) if g.group_of[p] == g.group_of[pos] => cur[p].min(rem),
            _ => rem,
        };
        for v in (0..=cap).rev() {
            cur.push(v);
            go(g, pos + 1, rem - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if g.num_vertices() > 0 && g.genus() >= 0 {
        go(g, 0, g.genus() as u32, &mut Vec::new(), &mut out);
    }
    out
}

/// Break divisors of `Gamma_d` up to permutations within each group.
pub fn break_divisor_orbit_representatives(
    a: &QuiverMatrix,
    d: &DimVector,
) -> Result<Vec<Divisor>, Error> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !a.has_enough_loops() {
        return Err(Error::Precondition(
            "every vertex needs at least one loop".into(),
        ));
    }
    if d.is_zero() {
        return Err(Error::Precondition(
            "dimension vector must be nonzero".into(),
        ));
    }
    let g = build_covering_graph(a, d)?;
    let checker = BreakChecker::new(&g);
    Ok(canonical_candidates(&g)
        .into_iter()
        .filter(|c| checker.accepts(&c.0))
        .collect())
}

pub fn count_break_divisor_orbits(a: &QuiverMatrix, d: &DimVector) -> Result<u64, Error> {
    Ok(break_divisor_orbit_representatives(a, d)?.len() as u64)
}
