use nalgebra::{DMatrix, DVector};

use super::ResistorNetwork;
use crate::error::{Error, Result};

/// Node potentials with the sink grounded and one ampere injected at the
/// source. Nodes outside the sink's connected component carry no defined
/// potential and are reported as `None`.
pub fn node_potentials(net: &ResistorNetwork) -> Result<Vec<Option<f64>>> {
    let live = net.component_of(net.sink);
    if !live[net.source] {
        return Err(Error::OpenCircuit);
    }

    // Map every live node except the grounded sink to a row of the
    // reduced Laplacian.
    let mut row = vec![usize::MAX; net.node_count];
    let mut dim = 0;
    for v in 0..net.node_count {
        if live[v] && v != net.sink {
            row[v] = dim;
            dim += 1;
        }
    }

    let mut laplacian = DMatrix::<f64>::zeros(dim, dim);
    for e in &net.edges {
        if !live[e.a] {
            continue;
        }
        let (ra, rb) = (row[e.a], row[e.b]);
        if ra != usize::MAX {
            laplacian[(ra, ra)] += e.conductance;
        }
        if rb != usize::MAX {
            laplacian[(rb, rb)] += e.conductance;
        }
        if ra != usize::MAX && rb != usize::MAX {
            laplacian[(ra, rb)] -= e.conductance;
            laplacian[(rb, ra)] -= e.conductance;
        }
    }
    let mut current = DVector::<f64>::zeros(dim);
    current[row[net.source]] = 1.0;

    let solution = laplacian.lu().solve(&current).ok_or(Error::SingularNetwork)?;
    if solution.iter().any(|v| !v.is_finite()) {
        return Err(Error::SingularNetwork);
    }

    Ok((0..net.node_count)
        .map(|v| {
            if v == net.sink {
                Some(0.0)
            } else if live[v] {
                Some(solution[row[v]])
            } else {
                None
            }
        })
        .collect())
}

/// Two-terminal equivalent resistance in ohms.
pub fn solve_network(net: &ResistorNetwork) -> Result<f64> {
    let potentials = node_potentials(net)?;
    Ok(potentials[net.source].expect("source is live"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::Edge;
    use approx::assert_relative_eq;

    fn net(n: usize, s: usize, t: usize, resistors: &[(usize, usize, f64)]) -> ResistorNetwork {
        let mut net = ResistorNetwork::new(n, s, t).unwrap();
        for &(a, b, r) in resistors {
            net.add_resistor(a, b, r).unwrap();
        }
        net
    }

    #[test]
    fn series_chain() {
        let r = solve_network(&net(3, 0, 2, &[(0, 1, 1.0), (1, 2, 2.0)])).unwrap();
        assert_relative_eq!(r, 3.0, max_relative = 1e-12);
    }

    #[test]
    fn parallel_pair() {
        let r = solve_network(&net(2, 0, 1, &[(0, 1, 2.0), (0, 1, 2.0)])).unwrap();
        assert_relative_eq!(r, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn balanced_wheatstone() {
        // 0 = source, 3 = sink, 1-2 bridge.
        let arms = [(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0), (1, 2, 1.0)];
        let net = net(4, 0, 3, &arms);
        assert_relative_eq!(solve_network(&net).unwrap(), 1.0, max_relative = 1e-12);
        let v = node_potentials(&net).unwrap();
        assert_relative_eq!(v[1].unwrap(), v[2].unwrap(), max_relative = 1e-12);
    }

    #[test]
    fn disconnected_terminals() {
        let n = net(4, 0, 3, &[(0, 1, 1.0), (2, 3, 1.0)]);
        assert!(matches!(solve_network(&n), Err(Error::OpenCircuit)));
        let empty = ResistorNetwork::new(2, 0, 1).unwrap();
        assert!(matches!(solve_network(&empty), Err(Error::OpenCircuit)));
    }

    #[test]
    fn floating_islands_are_ignored() {
        let n = net(5, 0, 1, &[(0, 1, 4.0), (2, 3, 1.0), (3, 4, 1.0)]);
        assert_relative_eq!(solve_network(&n).unwrap(), 4.0, max_relative = 1e-12);
        let v = node_potentials(&n).unwrap();
        assert_eq!(v[2], None);
    }

    #[test]
    fn input_is_not_mutated() {
        let n = ResistorNetwork::from_edges(
            3,
            0,
            2,
            [
                Edge { a: 0, b: 1, conductance: 1.0 },
                Edge { a: 1, b: 2, conductance: 0.5 },
            ],
        )
        .unwrap();
        let before = n.clone();
        solve_network(&n).unwrap();
        assert_eq!(n, before);
    }
}
