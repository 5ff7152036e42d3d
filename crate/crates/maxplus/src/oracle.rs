//! Brute-force reference algorithms.
//!
//! These enumerate instead of using the production dynamic programs, so the
//! test suites can cross-check the fast paths against an independent route.
//! Exponential in the matrix dimension; meant for n up to roughly 8.

use crate::digraph::Digraph;
use crate::matrix::Matrix;
use crate::scalar::Rational;
use crate::spectral::circuit_mean;

/// Every simple circuit of the precedence digraph, each reported once as a
/// 0-based node sequence starting at its smallest node.
pub fn simple_circuits(a: &Matrix) -> Vec<Vec<usize>> {
    let g = Digraph::from_matrix(a);
    let n = g.node_count();
    let mut found = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend(&g, start, start, &mut path, &mut on_path, &mut found);
        on_path[start] = false;
        path.pop();
    }
    found
}

fn extend(
    g: &Digraph,
    start: usize,
    current: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) {
    for (next, _) in g.successors(current) {
        if *next == start {
            found.push(path.clone());
        } else if *next > start && !on_path[*next] {
            path.push(*next);
            on_path[*next] = true;
            extend(g, start, *next, path, on_path, found);
            on_path[*next] = false;
            path.pop();
        }
    }
}

/// Maximum mean weight over all simple circuits, with one circuit attaining
/// it. `None` for acyclic graphs. Walk means never exceed simple-circuit
/// means, so this is the eigenvalue of an irreducible matrix.
pub fn max_mean_circuit(a: &Matrix) -> Option<(Rational, Vec<usize>)> {
    let mut best: Option<(Rational, Vec<usize>)> = None;
    for circuit in simple_circuits(a) {
        let mean = circuit_mean(a, &circuit).expect("enumerated circuits have finite arcs");
        if best.as_ref().is_none_or(|(b, _)| mean > *b) {
            best = Some((mean, circuit));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, rational};

    #[test]
    fn enumerates_self_loops_and_cycles() {
        let a = Matrix::from_str_rows(&["2 eps 3", "6 2 eps", "eps 4 3"]);
        let mut circuits = simple_circuits(&a);
        circuits.sort();
        assert_eq!(
            circuits,
            vec![vec![0], vec![0, 1, 2], vec![1], vec![2]]
        );
        let (mean, _) = max_mean_circuit(&a).unwrap();
        assert_eq!(mean, ratio(13, 3));
    }

    #[test]
    fn acyclic_graph_has_no_circuit() {
        let a = Matrix::from_str_rows(&["eps 1", "eps eps"]);
        assert!(max_mean_circuit(&a).is_none());
    }

    #[test]
    fn single_circuit_graph() {
        let b = Matrix::from_str_rows(&["eps 3 eps", "eps eps 2", "4 eps eps"]);
        assert_eq!(simple_circuits(&b), vec![vec![0, 2, 1]]);
        let (mean, circuit) = max_mean_circuit(&b).unwrap();
        assert_eq!(mean, rational(3));
        assert_eq!(circuit, vec![0, 2, 1]);
    }
}
