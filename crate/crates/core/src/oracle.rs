//! Slow reference implementations that share no code with the main paths.
//!
//! Everything here works on a plain boolean adjacency matrix and follows the
//! definitions literally. The test suites and the self-test harness compare
//! the optimized code against these.

use crate::graph::{Graph, VertexSet};

/// Boolean adjacency matrix copied out of a [`Graph`].
#[derive(Clone, Debug)]
pub struct Matrix {
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let adj = (0..n)
            .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
            .collect();
        Matrix { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    fn code(&self, members: &[bool], v: usize) -> Vec<bool> {
        (0..self.order())
            .map(|w| members[w] && self.adj[v][w])
            .collect()
    }
}

fn membership(n: usize, set: VertexSet) -> Vec<bool> {
    (0..n).map(|v| set.contains(v)).collect()
}

/// The three defining clauses, each computed from scratch.
pub fn is_oldoind(m: &Matrix, set: VertexSet) -> bool {
    let n = m.order();
    let s = membership(n, set);
    let open_dominating = (0..n).all(|v| (0..n).any(|w| s[w] && m.adjacent(v, w)));
    let open_independent = (0..n)
        .filter(|&v| s[v])
        .all(|v| (0..n).filter(|&w| s[w] && m.adjacent(v, w)).count() <= 1);
    let locating = (0..n).all(|u| ((u + 1)..n).all(|v| m.code(&s, u) != m.code(&s, v)));
    open_dominating && open_independent && locating
}

/// Every induced matching with exactly `k` edges, as the union of its
/// endpoints. Built by plain recursion over vertex pairs.
pub fn induced_matchings(m: &Matrix, k: usize) -> Vec<VertexSet> {
    let n = m.order();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if m.adjacent(u, v) {
                pairs.push((u, v));
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    fn rec(
        m: &Matrix,
        pairs: &[(usize, usize)],
        from: usize,
        k: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<VertexSet>,
    ) {
        if chosen.len() == k {
            out.push(chosen.iter().flat_map(|&(a, b)| [a, b]).collect());
            return;
        }
        for i in from..pairs.len() {
            let (a, b) = pairs[i];
            let compatible = chosen.iter().all(|&(c, d)| {
                [c, d]
                    .iter()
                    .all(|&x| x != a && x != b && !m.adjacent(x, a) && !m.adjacent(x, b))
            });
            if compatible {
                chosen.push((a, b));
                rec(m, pairs, i + 1, k, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(m, &pairs, 0, k, &mut chosen, &mut out);
    out
}

/// Minimum OLD_oind size by trying every induced matching, smallest first.
pub fn min_oldoind_size(m: &Matrix) -> Option<usize> {
    (1..=m.order() / 2).find_map(|k| {
        induced_matchings(m, k)
            .into_iter()
            .find(|&s| is_oldoind(m, s))
            .map(|_| 2 * k)
    })
}

fn induces_p4(m: &Matrix, q: [usize; 4]) -> bool {
    let degs: Vec<usize> = q
        .iter()
        .map(|&a| q.iter().filter(|&&b| a != b && m.adjacent(a, b)).count())
        .collect();
    let edges: usize = degs.iter().sum::<usize>() / 2;
    let mut sorted = degs.clone();
    sorted.sort_unstable();
    // Three edges with degrees 1,1,2,2 on four vertices is exactly a path.
    edges == 3 && sorted == [1, 1, 2, 2]
}

/// Number of 4-subsets of `vertices` inducing a `P4`.
fn count_p4(m: &Matrix, vertices: &[usize]) -> usize {
    let k = vertices.len();
    let mut count = 0;
    for a in 0..k {
        for b in (a + 1)..k {
            for c in (b + 1)..k {
                for d in (c + 1)..k {
                    if induces_p4(m, [vertices[a], vertices[b], vertices[c], vertices[d]]) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

pub fn is_p4_free(m: &Matrix) -> bool {
    let all: Vec<usize> = (0..m.order()).collect();
    count_p4(m, &all) == 0
}

/// Every induced `P4` as a sorted vertex quadruple.
pub fn induced_p4s(m: &Matrix) -> Vec<[usize; 4]> {
    let n = m.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    if induces_p4(m, [a, b, c, d]) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// P4-tidiness by definition: for every induced `P4` on a set `A`, at most
/// one outside vertex `v` makes `G[A ∪ {v}]` contain two or more `P4`s.
pub fn is_p4_tidy(m: &Matrix) -> bool {
    let n = m.order();
    induced_p4s(m).into_iter().all(|a| {
        let partners = (0..n)
            .filter(|v| !a.contains(v))
            .filter(|&v| {
                let mut five = a.to_vec();
                five.push(v);
                count_p4(m, &five) >= 2
            })
            .count();
        partners <= 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn literal_checks() {
        let p5 = Matrix::new(&path(5));
        assert!(is_oldoind(&p5, [0, 1, 3, 4].iter().collect()));
        assert!(!is_oldoind(&p5, [1, 2].iter().collect()));
        assert_eq!(min_oldoind_size(&p5), Some(4));
        assert_eq!(min_oldoind_size(&Matrix::new(&path(4))), None);
    }

    #[test]
    fn matchings() {
        let p5 = Matrix::new(&path(5));
        assert_eq!(induced_matchings(&p5, 1).len(), 4);
        assert_eq!(induced_matchings(&p5, 2).len(), 1);
        assert!(induced_matchings(&p5, 3).is_empty());
    }

    #[test]
    fn p4_checks() {
        assert!(!is_p4_free(&Matrix::new(&path(4))));
        assert!(is_p4_free(&Matrix::new(&Graph::complete(4).unwrap())));
        let mut c6 = path(6);
        c6.add_edge(0, 5);
        assert!(!is_p4_tidy(&Matrix::new(&c6)));
        let mut c5 = path(5);
        c5.add_edge(0, 4);
        assert!(is_p4_tidy(&Matrix::new(&c5)));
    }
}
