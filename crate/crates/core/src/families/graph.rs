use std::collections::BTreeSet;

use crate::algebra::MultiPoly;
use crate::error::{Error, Result};

/// Undirected multigraph on vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = Graph { vertices, edges };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.vertices == 0 {
            return Err(Error::InvalidFamily(
                "graph needs at least one vertex".into(),
            ));
        }
        if let Some(&(i, j)) = self.edges.iter().find(|&&(i, j)| i.max(j) >= self.vertices) {
            return Err(Error::InvalidFamily(format!("edge ({i},{j}) out of range")));
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph { vertices: n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph {
            vertices: n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.edges.push((n - 1, 0));
        }
        g
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let edges = (0..m)
            .flat_map(|i| (m..m + n).map(move |j| (i, j)))
            .collect();
        Graph {
            vertices: m + n,
            edges,
        }
    }

    /// Parses one `i j` edge per line, 1-indexed; `#` starts a comment.
    /// A line `vertices N` fixes the vertex count, otherwise it is the
    /// largest index seen.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut declared = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let err = || Error::Parse(format!("line {}: expected `i j`", lineno + 1));
            if toks.len() == 2 && toks[0] == "vertices" {
                declared = Some(toks[1].parse::<usize>().map_err(|_| err())?);
                continue;
            }
            if toks.len() != 2 {
                return Err(err());
            }
            let i: usize = toks[0].parse().map_err(|_| err())?;
            let j: usize = toks[1].parse().map_err(|_| err())?;
            if i == 0 || j == 0 {
                return Err(Error::Parse(format!(
                    "line {}: vertices are 1-indexed",
                    lineno + 1
                )));
            }
            edges.push((i - 1, j - 1));
        }
        let seen = edges.iter().map(|&(i, j)| i.max(j) + 1).max().unwrap_or(0);
        let vertices = declared.unwrap_or(seen);
        if vertices < seen {
            return Err(Error::Parse(format!(
                "edge uses vertex {seen} beyond declared {vertices}"
            )));
        }
        Graph::new(vertices, edges)
    }
}

/// Chromatic polynomial in `q` by deletion-contraction on the graph.
pub fn chromatic_polynomial(g: &Graph) -> MultiPoly {
    fn go(vertices: usize, edges: BTreeSet<(usize, usize)>) -> MultiPoly {
        let Some(&(u, v)) = edges.iter().next_back() else {
            return MultiPoly::var("q").pow(vertices as u32);
        };
        if u == v {
            return MultiPoly::zero();
        }
        let mut deleted = edges.clone();
        deleted.remove(&(u, v));
        // merge v into u and renumber the last vertex into v's slot
        let last = vertices - 1;
        let rename = |w: usize| {
            let w = if w == v { u } else { w };
            if w == last {
                v
            } else {
                w
            }
        };
        let contracted: BTreeSet<_> = deleted
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (rename(a), rename(b));
                (a.min(b), a.max(b))
            })
            .collect();
        &go(vertices, deleted) - &go(vertices - 1, contracted)
    }
    let edges = g.edges.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect();
    go(g.vertices, edges).in_vars(&["q"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn q(c: &[i64]) -> MultiPoly {
        MultiPoly::from_univariate("q", &c.iter().map(|&v| rat(v)).collect::<Vec<_>>())
    }

    #[test]
    fn known_chromatic_polynomials() {
        // q(q-1)^3 for a path on 4 vertices
        assert_eq!(chromatic_polynomial(&Graph::path(4)), q(&[0, -1, 3, -3, 1]));
        // (q-1)^4 + (q-1) for the 4-cycle
        assert_eq!(
            chromatic_polynomial(&Graph::cycle(4)),
            q(&[0, -3, 6, -4, 1])
        );
        // q(q-1)(q-2)(q-3)
        assert_eq!(
            chromatic_polynomial(&Graph::complete(4)),
            q(&[0, -6, 11, -6, 1])
        );
        assert!(chromatic_polynomial(&Graph::new(1, vec![(0, 0)]).unwrap()).is_zero());
    }

    #[test]
    fn parse_edges() {
        let g = Graph::parse("# triangle\n1 2\n2 3\n3 1\n").unwrap();
        assert_eq!(g.vertices, 3);
        assert_eq!(g.edges, vec![(0, 1), (1, 2), (2, 0)]);
        let g = Graph::parse("vertices 5\n1 2\n").unwrap();
        assert_eq!(g.vertices, 5);
        assert!(Graph::parse("0 1\n").is_err());
        assert!(Graph::parse("1 2 3\n").is_err());
        assert!(Graph::parse("vertices 1\n1 2\n").is_err());
    }
}
