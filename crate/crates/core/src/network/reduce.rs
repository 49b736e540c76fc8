use std::collections::BTreeMap;

use super::ResistorNetwork;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Reduction {
    /// The network collapsed to a single edge of this many ohms.
    Reduced(f64),
    /// Some non-series-parallel structure (a bridge, say) remains.
    NotReducible,
}

impl Reduction {
    pub fn ohms(self) -> Option<f64> {
        match self {
            Reduction::Reduced(r) => Some(r),
            Reduction::NotReducible => None,
        }
    }
}

type Key = (usize, usize);

fn key(a: usize, b: usize) -> Key {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Equivalent resistance by repeated series and parallel merging.
///
/// Parallel edges are merged on insertion. Interior nodes of degree two
/// are spliced out, dead ends of degree one and isolated interior nodes
/// are dropped, until nothing changes.
pub fn reduce_series_parallel(net: &ResistorNetwork) -> Result<Reduction> {
    let live = net.component_of(net.sink);
    if !live[net.source] {
        return Err(Error::OpenCircuit);
    }

    let mut edges: BTreeMap<Key, f64> = BTreeMap::new();
    for e in net.edges.iter().filter(|e| live[e.a]) {
        *edges.entry(key(e.a, e.b)).or_default() += e.conductance;
    }

    let terminal = |v: usize| v == net.source || v == net.sink;
    loop {
        let mut neighbours: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in edges.keys() {
            neighbours.entry(a).or_default().push(b);
            neighbours.entry(b).or_default().push(a);
        }
        let candidate = neighbours
            .iter()
            .find(|(&v, adj)| !terminal(v) && adj.len() <= 2);
        let Some((&v, adj)) = candidate else { break };
        match adj.as_slice() {
            [u] => {
                edges.remove(&key(v, *u));
            }
            [u, w] => {
                let g1 = edges.remove(&key(v, *u)).expect("edge exists");
                let g2 = edges.remove(&key(v, *w)).expect("edge exists");
                let series = 1.0 / (1.0 / g1 + 1.0 / g2);
                *edges.entry(key(*u, *w)).or_default() += series;
            }
            _ => unreachable!("degree filtered above"),
        }
    }

    let st = key(net.source, net.sink);
    Ok(match (edges.len(), edges.get(&st)) {
        (1, Some(&g)) => Reduction::Reduced(1.0 / g),
        _ => Reduction::NotReducible,
    })
}
