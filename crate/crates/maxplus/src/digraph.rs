//! Precedence digraph of a max-plus matrix and the graph algorithms the
//! spectral theory needs: strong connectivity and the maximum cycle mean.
//!
//! Convention: entry `a(i, j) != eps` contributes a directed arc from node j
//! to node i with weight `a(i, j)`. Node ids are 0-based here; reports and
//! file formats render them 1-based.

use num::BigInt;

use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

/// Weighted digraph in adjacency-list form. `adj[u]` holds `(v, w)` for each
/// arc u -> v of weight w; weights are always finite.
#[derive(Debug, Clone)]
pub struct Digraph {
    n: usize,
    adj: Vec<Vec<(usize, Rational)>>,
}

impl Digraph {
    /// One arc j -> i per finite entry a(i, j), weights preserved exactly.
    pub fn from_matrix(a: &Matrix) -> Digraph {
        let n = a.dim();
        let mut adj = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if let Scalar::Finite(w) = &a[(i, j)] {
                    adj[j].push((i, w.clone()));
                }
            }
        }
        Digraph { n, adj }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    /// All arcs as `(from, to, weight)` triples.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |(v, w)| (u, *v, w)))
    }

    pub fn successors(&self, u: usize) -> &[(usize, Rational)] {
        &self.adj[u]
    }

    /// Strongly connected components by Kosaraju's two-pass algorithm with
    /// explicit stacks. Components are returned sorted internally and ordered
    /// by their smallest node, so output is deterministic.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut rev = vec![Vec::new(); n];
        for (u, v, _) in self.arcs() {
            rev[v].push(u);
        }

        // pass 1: finish order on the forward graph
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for start in 0..n {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            // stack holds (node, next successor index)
            let mut stack = vec![(start, 0usize)];
            while let Some(&mut (u, ref mut next)) = stack.last_mut() {
                if *next < self.adj[u].len() {
                    let v = self.adj[u][*next].0;
                    *next += 1;
                    if !visited[v] {
                        visited[v] = true;
                        stack.push((v, 0));
                    }
                } else {
                    order.push(u);
                    stack.pop();
                }
            }
        }

        // pass 2: sweep the reverse graph in reverse finish order
        let mut component = vec![usize::MAX; n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for &root in order.iter().rev() {
            if component[root] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![root];
            component[root] = id;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &v in &rev[u] {
                    if component[v] == usize::MAX {
                        component[v] = id;
                        members.push(v);
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components.sort_by_key(|c| c[0]);
        components
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected_components().len() == 1
    }

    /// Maximum cycle mean by Karp's dynamic program, with a witness circuit.
    ///
    /// Requires the graph to be strongly connected with at least one arc
    /// (guaranteed by the irreducibility check upstream); then every cycle is
    /// reachable from node 0 and the single-source recurrence is valid.
    /// `dist[k][v]` is the maximum weight of a walk of exactly k arcs from
    /// node 0 to v (eps if none), and
    ///
    ///   lambda = max_v min_k (dist[n][v] - dist[k][v]) / (n - k)
    ///
    /// over v with dist[n][v] finite and k < n with dist[k][v] finite.
    /// Returns `None` when no walk of length n exists (acyclic graph).
    ///
    /// The witness: a maximum-weight n-arc walk to the optimizing node
    /// attains the overall maximum of normalized walk weights, so removing
    /// any cycle from it cannot increase the weight; with all normalized
    /// cycle weights <= 0 this forces every cycle on the walk to be
    /// critical. The first repeated node on the walk therefore spans a
    /// simple circuit of mean exactly lambda.
    pub fn max_mean_cycle(&self) -> Option<(Rational, Vec<usize>)> {
        let n = self.n;
        let mut dist = vec![vec![Scalar::NegInf; n]; n + 1];
        let mut pred = vec![vec![usize::MAX; n]; n + 1];
        dist[0][0] = Scalar::zero();
        for k in 1..=n {
            for u in 0..n {
                if dist[k - 1][u].is_eps() {
                    continue;
                }
                for (v, w) in &self.adj[u] {
                    let cand = dist[k - 1][u].otimes(&Scalar::Finite(w.clone()));
                    if cand > dist[k][*v] {
                        dist[k][*v] = cand;
                        pred[k][*v] = u;
                    }
                }
            }
        }

        let mut best: Option<(Rational, usize)> = None;
        for v in 0..n {
            let Some(dn) = dist[n][v].as_rational() else {
                continue;
            };
            let mut inner: Option<Rational> = None;
            for (k, row) in dist.iter().enumerate().take(n) {
                let Some(dk) = row[v].as_rational() else {
                    continue;
                };
                let mean = (dn - dk) / Rational::from_integer(BigInt::from(n - k));
                if inner.as_ref().is_none_or(|m| mean < *m) {
                    inner = Some(mean);
                }
            }
            // dist[n][v] finite implies some shorter walk reaches v, so the
            // inner minimum is always populated here.
            let inner = inner.expect("length-n walk implies a shorter walk");
            if best.as_ref().is_none_or(|(b, _)| inner > *b) {
                best = Some((inner, v));
            }
        }
        let (lambda, v_star) = best?;

        // reconstruct the optimal n-arc walk and cut out its first cycle
        let mut walk = vec![0usize; n + 1];
        walk[n] = v_star;
        for k in (1..=n).rev() {
            walk[k - 1] = pred[k][walk[k]];
        }
        let mut first_seen = vec![usize::MAX; n];
        for (pos, &node) in walk.iter().enumerate() {
            if first_seen[node] != usize::MAX {
                let circuit = walk[first_seen[node]..pos].to_vec();
                return Some((lambda, circuit));
            }
            first_seen[node] = pos;
        }
        unreachable!("a walk of n arcs visits n + 1 nodes and must repeat one")
    }
}
