//! Two-terminal resistor networks.
//!
//! A [`ResistorNetwork`] is an undirected multigraph of conductances with a
//! designated source and sink. [`solve_network`] computes its equivalent
//! resistance by nodal analysis; [`reduce_series_parallel`] is an
//! independent route for networks that collapse under series and parallel
//! merges. [`validate_stack`] rebuilds a whole stack as a network of
//! unit-cube resistors and checks it against the closed form.

mod discretize;
mod reduce;
mod solve;

pub use discretize::{discretize_layer, validate_stack, LayerValidation, ValidationOptions, ValidationReport};
pub use reduce::{reduce_series_parallel, Reduction};
pub use solve::{node_potentials, solve_network};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Siemens.
    pub conductance: f64,
}

impl Edge {
    pub fn resistance(&self) -> f64 {
        1.0 / self.conductance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResistorNetwork {
    node_count: usize,
    edges: Vec<Edge>,
    source: usize,
    sink: usize,
}

impl ResistorNetwork {
    /// An edgeless network on `node_count` nodes.
    pub fn new(node_count: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= node_count || sink >= node_count {
            return Err(Error::invalid(
                "terminals",
                format!("source {source} / sink {sink} out of range for {node_count} nodes"),
            ));
        }
        if source == sink {
            return Err(Error::invalid("terminals", "source and sink must differ"));
        }
        Ok(Self {
            node_count,
            edges: Vec::new(),
            source,
            sink,
        })
    }

    pub fn from_edges(
        node_count: usize,
        source: usize,
        sink: usize,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let mut net = Self::new(node_count, source, sink)?;
        for e in edges {
            net.add_conductance(e.a, e.b, e.conductance)?;
        }
        Ok(net)
    }

    pub fn add_conductance(&mut self, a: usize, b: usize, conductance: f64) -> Result<()> {
        if a >= self.node_count || b >= self.node_count {
            return Err(Error::invalid(
                "edges",
                format!("edge {a}-{b} references a node >= {}", self.node_count),
            ));
        }
        if a == b {
            return Err(Error::invalid("edges", format!("self-loop at node {a}")));
        }
        if !(conductance.is_finite() && conductance > 0.0) {
            return Err(Error::invalid(
                "edges",
                format!("conductance of edge {a}-{b} must be finite and > 0 (got {conductance})"),
            ));
        }
        self.edges.push(Edge { a, b, conductance });
        Ok(())
    }

    pub fn add_resistor(&mut self, a: usize, b: usize, ohms: f64) -> Result<()> {
        if !(ohms.is_finite() && ohms > 0.0) {
            return Err(Error::invalid(
                "edges",
                format!("resistance of edge {a}-{b} must be finite and > 0 (got {ohms})"),
            ));
        }
        self.add_conductance(a, b, 1.0 / ohms)
    }

    /// Appends a node and returns its id.
    pub fn add_node(&mut self) -> usize {
        self.node_count += 1;
        self.node_count - 1
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Nodes reachable from `start`, as a membership mask.
    pub(crate) fn component_of(&self, start: usize) -> Vec<bool> {
        let mut adjacency = vec![Vec::new(); self.node_count];
        for e in &self.edges {
            adjacency[e.a].push(e.b);
            adjacency[e.b].push(e.a);
        }
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        let mut net = ResistorNetwork::new(3, 0, 2).unwrap();
        assert!(net.add_resistor(0, 0, 1.0).is_err());
        assert!(net.add_resistor(0, 3, 1.0).is_err());
        assert!(net.add_resistor(0, 1, 0.0).is_err());
        assert!(net.add_conductance(0, 1, f64::INFINITY).is_err());
        assert!(net.add_conductance(0, 1, -1.0).is_err());
        assert!(net.edges().is_empty());
    }

    #[test]
    fn rejects_bad_terminals() {
        assert!(ResistorNetwork::new(2, 1, 1).is_err());
        assert!(ResistorNetwork::new(2, 0, 2).is_err());
    }
}
