use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::growth::{explore_ball, Ball, GrowthLimits};

use super::word::{Gen, GeneratorWord};
use super::{check_m, generators};

/// Largest block built on request; `E_i` has `m^i` vertices.
pub const MAX_BLOCK_VERTICES: usize = 1 << 22;

/// The block `E_i`: an `f1`-path on `m^i` vertices with `f0`-edges pointing
/// back along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyBlock {
    pub m: usize,
    pub i: usize,
    pub vertices: usize,
    pub f1_path: Vec<usize>,
    /// `(source, target)` pairs.
    pub f0_edges: Vec<(usize, usize)>,
}

impl CayleyBlock {
    /// `E_0` is a single vertex; `E_i` chains `m` copies of `E_{i-1}` and sends
    /// the last vertex of every copy but the final one back to vertex 0.
    pub fn build(m: usize, i: usize) -> Result<Self> {
        check_m(m)?;
        let vertices = (0..i)
            .try_fold(1usize, |acc, _| acc.checked_mul(m))
            .filter(|&v| v <= MAX_BLOCK_VERTICES)
            .ok_or(Error::GuardExceeded {
                what: "block vertices",
                requested: usize::MAX,
                limit: MAX_BLOCK_VERTICES,
            })?;
        let mut block = CayleyBlock {
            m,
            i: 0,
            vertices: 1,
            f1_path: vec![0],
            f0_edges: Vec::new(),
        };
        for level in 1..=i {
            let size = block.vertices;
            let mut f0_edges = Vec::with_capacity(m * block.f0_edges.len() + m - 1);
            for copy in 0..m {
                let offset = copy * size;
                f0_edges.extend(block.f0_edges.iter().map(|&(s, t)| (s + offset, t + offset)));
                if copy + 1 < m {
                    f0_edges.push((offset + size - 1, 0));
                }
            }
            f0_edges.sort_unstable();
            block = CayleyBlock {
                m,
                i: level,
                vertices: size * m,
                f1_path: (0..size * m).collect(),
                f0_edges,
            };
        }
        debug_assert_eq!(block.vertices, vertices);
        Ok(block)
    }

    pub fn f1_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.f1_path.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn num_f1_edges(&self) -> usize {
        self.f1_path.len().saturating_sub(1)
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph E_{} {{\n", self.i);
        for v in 0..self.vertices {
            writeln!(out, "  v{v};").unwrap();
        }
        for (s, t) in self.f1_edges() {
            writeln!(out, "  v{s} -> v{t} [label=\"f1\"];").unwrap();
        }
        for &(s, t) in &self.f0_edges {
            writeln!(out, "  v{s} -> v{t} [label=\"f0\"];").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// The ball of radius `radius` in the left Cayley graph of the semigroup
/// generated by `f0, f1`: an edge `s -> g s` for each generator `g`.
#[derive(Clone, Debug)]
pub struct CayleyBall {
    pub m: usize,
    pub radius: usize,
    pub ball: Ball,
}

const GENS: [Gen; 2] = [Gen::F0, Gen::F1];

pub fn cayley_ball(m: usize, radius: usize, limits: GrowthLimits) -> Result<CayleyBall> {
    let (f0, f1) = generators(m)?;
    let ball = explore_ball(&[f0, f1], radius, limits, true)?;
    Ok(CayleyBall { m, radius, ball })
}

impl CayleyBall {
    /// `(source, generator, target)` edges.
    pub fn edges(&self) -> impl Iterator<Item = (usize, Gen, usize)> + '_ {
        self.ball.edges.iter().map(|&(s, g, t)| (s, GENS[g], t))
    }

    /// Words spelled by the paths from the identity of length at most the
    /// radius that never revisit a vertex. Each path is read as the product
    /// of the generators taken, latest on the left.
    pub fn simple_paths(&self) -> Vec<GeneratorWord> {
        let n = self.ball.elements.len();
        let mut out_edges = vec![Vec::new(); n];
        for (s, g, t) in self.edges() {
            out_edges[s].push((g, t));
        }
        let mut on_path = vec![false; n];
        let mut path = Vec::new();
        let mut words = Vec::new();
        self.walk(0, &out_edges, &mut on_path, &mut path, &mut words);
        words
    }

    fn walk(
        &self,
        v: usize,
        out_edges: &[Vec<(Gen, usize)>],
        on_path: &mut [bool],
        path: &mut Vec<Gen>,
        words: &mut Vec<GeneratorWord>,
    ) {
        on_path[v] = true;
        let letters: Vec<Gen> = path.iter().rev().copied().collect();
        words.push(GeneratorWord::from_gens(self.m, &letters));
        if path.len() < self.radius {
            for &(g, t) in &out_edges[v] {
                if !on_path[t] {
                    path.push(g);
                    self.walk(t, out_edges, on_path, path, words);
                    path.pop();
                }
            }
        }
        on_path[v] = false;
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph cayley_m{}_r{} {{\n", self.m, self.radius);
        for (id, len) in self.ball.lengths.iter().enumerate() {
            writeln!(out, "  v{id} [len={len}];").unwrap();
        }
        for (s, g, t) in self.edges() {
            writeln!(out, "  v{s} -> v{t} [label=\"{}\"];", g.name()).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
