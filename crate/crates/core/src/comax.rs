//! Implicit and explicit views of the comaximal graph `Γ(Z_n)`.
//!
//! Vertices are the residues `0..n`. Adjacency is decided from gcd's alone:
//! `x ~ y` iff `x != y` and `gcd(gcd(x, n), gcd(y, n)) = 1`, with
//! `gcd(0, n) = n`. The edge set is only ever materialized for the oracles and
//! for export.

use alloc::vec::Vec;

use crate::divisors::{gcd, Modulus};
use crate::graph::SimpleGraph;
use crate::linalg::IntMatrix;
use crate::{Error, Result};

/// Largest vertex count for which a dense Laplacian is built.
pub const DEFAULT_DENSE_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    Unit,
    Proper,
    Zero,
}

/// The residues `x` with `gcd(x, n) = divisor`; there are `phi(n / divisor)` of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub divisor: u64,
    pub size: u64,
    pub kind: ClassKind,
}

fn class_gcd(m: &Modulus, x: u64) -> u64 {
    // gcd(0, n) = n
    gcd(x, m.n())
}

fn check_vertex(m: &Modulus, x: u64) -> Result<()> {
    if x >= m.n() {
        return Err(Error::VertexOutOfRange { x, n: m.n() });
    }
    Ok(())
}

fn make_class(m: &Modulus, d: u64) -> DivisorClass {
    let kind = if d == 1 {
        ClassKind::Unit
    } else if d == m.n() {
        ClassKind::Zero
    } else {
        ClassKind::Proper
    };
    DivisorClass {
        divisor: d,
        size: m.cofactor_phi(d),
        kind,
    }
}

pub fn adjacent(m: &Modulus, x: u64, y: u64) -> Result<bool> {
    check_vertex(m, x)?;
    check_vertex(m, y)?;
    Ok(x != y && gcd(class_gcd(m, x), class_gcd(m, y)) == 1)
}

pub fn class_of(m: &Modulus, x: u64) -> Result<DivisorClass> {
    check_vertex(m, x)?;
    Ok(make_class(m, class_gcd(m, x)))
}

/// Vertex degree from class data: units see everything, zero sees the units,
/// and a proper class `A_d` sees the units plus every proper class coprime to `d`.
pub fn degree(m: &Modulus, x: u64) -> Result<u64> {
    let class = class_of(m, x)?;
    Ok(match class.kind {
        ClassKind::Unit => m.n() - 1,
        ClassKind::Zero => m.phi(),
        ClassKind::Proper => {
            m.phi()
                + m.proper_divisors()
                    .iter()
                    .filter(|&&dj| gcd(class.divisor, dj) == 1)
                    .map(|&dj| m.cofactor_phi(dj))
                    .sum::<u64>()
        }
    })
}

/// `L = D - A` for `Γ(Z_n)`, rows and columns indexed by residue.
pub fn dense_laplacian(m: &Modulus, limit: usize) -> Result<IntMatrix> {
    let n = m.n() as usize;
    if n > limit {
        return Err(Error::SizeLimit { size: n, limit });
    }
    let g: Vec<u64> = (0..m.n()).map(|x| class_gcd(m, x)).collect();
    let mut l = IntMatrix::zeros(n);
    for i in 0..n {
        let mut deg = 0;
        for j in 0..n {
            if i != j && gcd(g[i], g[j]) == 1 {
                l[(i, j)] = -1;
                deg += 1;
            }
        }
        l[(i, i)] = deg;
    }
    Ok(l)
}

/// `Γ(Z_n)` as an explicit graph on vertices `0..n`.
pub fn explicit_graph(m: &Modulus) -> SimpleGraph {
    let g: Vec<u64> = (0..m.n()).map(|x| class_gcd(m, x)).collect();
    SimpleGraph::from_predicate(m.n() as usize, |u, v| gcd(g[u], g[v]) == 1)
}

/// The induced subgraph `G2` on the nonzero non-units, together with the
/// residue label of each vertex (ascending).
pub fn g2_graph(m: &Modulus) -> (SimpleGraph, Vec<u64>) {
    let labels: Vec<u64> = (1..m.n()).filter(|&x| gcd(x, m.n()) != 1).collect();
    let g: Vec<u64> = labels.iter().map(|&x| gcd(x, m.n())).collect();
    let graph = SimpleGraph::from_predicate(labels.len(), |u, v| gcd(g[u], g[v]) == 1);
    (graph, labels)
}

/// `Γ(Z_n)` described by its divisor classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComaximalGraph {
    modulus: Modulus,
    classes: Vec<DivisorClass>,
}

impl ComaximalGraph {
    pub fn new(modulus: Modulus) -> Self {
        let classes = modulus
            .divisors()
            .into_iter()
            .map(|d| make_class(&modulus, d))
            .collect();
        ComaximalGraph { modulus, classes }
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    /// Unit class first, then proper classes by divisor, zero class last.
    pub fn classes(&self) -> &[DivisorClass] {
        &self.classes
    }

    pub fn vertex_count(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    /// Divisors of the classes joined to `class` (all-or-nothing between classes).
    pub fn class_neighbors(&self, class: &DivisorClass) -> Vec<u64> {
        self.classes
            .iter()
            .filter(|c| gcd(c.divisor, class.divisor) == 1)
            // only the unit class is coprime to itself; a singleton has no self-neighbor
            .filter(|c| c.divisor != class.divisor || c.size > 1)
            .map(|c| c.divisor)
            .collect()
    }

    /// Number of edges, computed from class data.
    pub fn edge_count(&self) -> u64 {
        let degree_sum: u64 = self
            .classes
            .iter()
            .map(|c| {
                c.size
                    * degree(&self.modulus, c.divisor % self.modulus.n())
                        .expect("class representative")
            })
            .sum();
        degree_sum / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    /// `<x> + <y> = Z_n`, by enumerating `a*x + b*y mod n`.
    fn ideal_sum_is_whole_ring(n: u64, x: u64, y: u64) -> bool {
        let mut seen = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                seen.insert((a * x + b * y) % n);
            }
        }
        seen.len() as u64 == n
    }

    #[test]
    fn adjacency_examples() {
        let m = Modulus::new(6).unwrap();
        assert!(adjacent(&m, 1, 4).unwrap());
        assert!(!adjacent(&m, 0, 2).unwrap());
        assert!(adjacent(&m, 2, 3).unwrap());
        assert!(!adjacent(&m, 2, 4).unwrap());
        assert!(ideal_sum_is_whole_ring(6, 2, 3));
        assert!(!ideal_sum_is_whole_ring(6, 2, 4));
        assert!(adjacent(&m, 6, 1).is_err());
    }

    #[test]
    fn class_examples() {
        let m = Modulus::new(12).unwrap();
        let c = class_of(&m, 10).unwrap();
        assert_eq!((c.divisor, c.kind, c.size), (2, ClassKind::Proper, 2));
        let z = class_of(&m, 0).unwrap();
        assert_eq!((z.divisor, z.kind, z.size), (12, ClassKind::Zero, 1));
        let u = class_of(&m, 7).unwrap();
        assert_eq!((u.divisor, u.kind, u.size), (1, ClassKind::Unit, 4));
        assert!(class_of(&m, 12).is_err());
    }

    #[test]
    fn degree_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert_eq!(degree(&m6, 1).unwrap(), 5);
        assert_eq!(degree(&m6, 0).unwrap(), 2);
        let m12 = Modulus::new(12).unwrap();
        let brute = (0..12).filter(|&y| adjacent(&m12, 3, y).unwrap()).count() as u64;
        assert_eq!(brute, 8);
        assert_eq!(degree(&m12, 3).unwrap(), 8);
    }

    #[test]
    fn dense_laplacian_examples() {
        let l3 = dense_laplacian(&Modulus::new(3).unwrap(), DEFAULT_DENSE_LIMIT).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l3[(i, j)], if i == j { 2 } else { -1 });
            }
        }
        let l4 = dense_laplacian(&Modulus::new(4).unwrap(), DEFAULT_DENSE_LIMIT).unwrap();
        for i in 0..4 {
            assert_eq!((0..4).map(|j| l4[(i, j)]).sum::<i64>(), 0);
        }
        let l6 = dense_laplacian(&Modulus::new(6).unwrap(), DEFAULT_DENSE_LIMIT).unwrap();
        let brute_degree_sum: usize = (0..6u64)
            .map(|x| {
                (0..6u64)
                    .filter(|&y| ideal_sum_is_whole_ring(6, x, y) && x != y)
                    .count()
            })
            .sum();
        assert_eq!(brute_degree_sum, 22);
        assert_eq!(l6.trace(), 22);
        assert!(matches!(
            dense_laplacian(&Modulus::new(100).unwrap(), 50),
            Err(Error::SizeLimit {
                size: 100,
                limit: 50
            })
        ));
    }

    #[test]
    fn adjacency_matches_ideal_sums() {
        for n in 3..=40u64 {
            let m = Modulus::new(n).unwrap();
            for x in 0..n {
                for y in 0..n {
                    let expected = x != y && ideal_sum_is_whole_ring(n, x, y);
                    assert_eq!(adjacent(&m, x, y).unwrap(), expected, "n={n} x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn classes_are_independent_and_equitable() {
        for n in 3..=200u64 {
            let m = Modulus::new(n).unwrap();
            let g = explicit_graph(&m);
            let cls: Vec<u64> = (0..n).map(|x| class_of(&m, x).unwrap().divisor).collect();
            let mut degree_sum = 0;
            for x in 0..n as usize {
                assert_eq!(g.degree(x) as u64, degree(&m, x as u64).unwrap());
                degree_sum += g.degree(x);
                for &y in g.neighbors(x) {
                    // the unit class is a clique; every other class is independent
                    assert!(
                        cls[x] == 1 || cls[x] != cls[y],
                        "edge inside a class, n={n}"
                    );
                }
            }
            assert_eq!(degree_sum, 2 * g.edge_count());
            let cg = ComaximalGraph::new(m.clone());
            assert_eq!(cg.vertex_count(), n);
            assert_eq!(cg.edge_count() as usize, g.edge_count());
            // between two classes adjacency is all or nothing
            for a in cg.classes() {
                for b in cg.classes() {
                    let pairs: Vec<bool> = (0..n as usize)
                        .filter(|&x| cls[x] == a.divisor)
                        .flat_map(|x| {
                            let g = &g;
                            let cls = &cls;
                            (0..n as usize)
                                .filter(move |&y| y != x && cls[y] == b.divisor)
                                .map(move |y| g.has_edge(x, y))
                        })
                        .collect();
                    assert!(pairs.iter().all(|&e| e) || pairs.iter().all(|&e| !e));
                }
            }
        }
    }

    #[test]
    fn class_neighbors_summary() {
        let cg = ComaximalGraph::new(Modulus::new(12).unwrap());
        let by_div = |d: u64| *cg.classes().iter().find(|c| c.divisor == d).unwrap();
        assert_eq!(cg.class_neighbors(&by_div(1)), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(cg.class_neighbors(&by_div(2)), vec![1, 3]);
        assert_eq!(cg.class_neighbors(&by_div(12)), vec![1]);
        let cg3 = ComaximalGraph::new(Modulus::new(3).unwrap());
        assert_eq!(cg3.class_neighbors(&cg3.classes()[0]), vec![1, 3]);
    }

    #[test]
    fn g2_graph_labels() {
        let (g, labels) = g2_graph(&Modulus::new(12).unwrap());
        assert_eq!(labels, vec![2, 3, 4, 6, 8, 9, 10]);
        assert_eq!(g.vertex_count(), 7);
        // 6 is isolated in G2 for n = 12
        assert_eq!(g.degree(3), 0);
    }
}
