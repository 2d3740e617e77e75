//! The flow restricted to the boundary surface, as a separatrix graph.
//!
//! Sources sit in the green regions (one per disk of `F` cut along `u`, one per
//! `U`-cycle), sinks in the red ones, and every `u`/`v`-arc carries a saddle.
//! A `u`-saddle receives one separatrix from the region on each side of the
//! arc and sends one to the red region at each endpoint; a `v`-saddle is the
//! mirror image.

use serde::{Deserialize, Serialize};

use super::validate::{census_of, require_valid, ColorCut};
use super::{Family, PrDiagram, PrError};
use crate::combmap::{CombMap, Dart, Origin, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Source,
    Saddle,
    Sink,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowNode {
    pub id: usize,
    pub role: Role,
    /// fixed-point type 1..=6
    pub point_type: u8,
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowEdge {
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryFlowGraph {
    pub nodes: Vec<FlowNode>,
    pub edges: Vec<FlowEdge>,
    /// genus of the boundary surface
    pub genus: i64,
}

impl BoundaryFlowGraph {
    pub fn count(&self, role: Role) -> usize {
        self.nodes.iter().filter(|n| n.role == role).count()
    }

    /// sources + sinks - saddles
    pub fn euler(&self) -> i64 {
        (self.count(Role::Source) + self.count(Role::Sink)) as i64 - self.count(Role::Saddle) as i64
    }

    pub fn degree(&self, node: usize) -> (usize, usize) {
        let inc = self.edges.iter().filter(|e| e.to == node).count();
        let out = self.edges.iter().filter(|e| e.from == node).count();
        (inc, out)
    }
}

/// Node ids of the regions on one side.
struct Regions {
    cycles: Vec<usize>,
    components: Vec<usize>,
}

impl Regions {
    fn add(nodes: &mut Vec<FlowNode>, side: &ColorCut, sources: bool) -> Regions {
        let (role, cyc_type, disk_type, cyc_name, disk_name) =
            if sources { (Role::Source, 2, 1, "U", "A") } else { (Role::Sink, 5, 6, "V", "R") };
        let mut push = |point_type: u8, label: String| {
            nodes.push(FlowNode { id: nodes.len(), role, point_type, label });
            nodes.len() - 1
        };
        let components = (0..side.components).map(|k| push(disk_type, format!("{disk_name}{k}"))).collect();
        let cycles = (0..side.cycles.len()).map(|k| push(cyc_type, format!("{cyc_name}{k}"))).collect();
        Regions { cycles, components }
    }

    /// The region next to dart `x` of the cut map.
    fn at(&self, side: &ColorCut, x: Dart) -> usize {
        let face = side.cut.map.face_of(x);
        match side.cycles.iter().position(|&f| f == face) {
            Some(k) => self.cycles[k],
            None => self.components[side.comp[x]],
        }
    }

    /// The region on the boundary at the endpoint vertex of `end`.
    fn at_endpoint(&self, side: &ColorCut, m: &CombMap, end: Dart) -> usize {
        let corner = m
            .rotation(m.vertex_of(end))
            .into_iter()
            .find(|&x| m.is_hole_dart(x))
            .expect("arc endpoints lie on the boundary");
        let cur = side.current(corner).expect("boundary darts survive the other cut");
        self.at(side, cur)
    }
}

fn copy_of(side: &ColorCut, of: Dart, s: Side) -> Dart {
    side.cut.origin.iter().position(|o| *o == Origin::Copy { of, side: s }).expect("both copies of a cut arc exist")
}

pub fn boundary_restriction(d: &PrDiagram) -> Result<BoundaryFlowGraph, PrError> {
    let (green, red) = require_valid(d)?;
    let census = census_of(d, &green, &red);
    let m = d.surface();
    let mut nodes = Vec::new();
    let sources = Regions::add(&mut nodes, &green, true);
    let mut edges = Vec::new();
    let u_arcs = d.paths_of(Family::GreenArc);
    let v_arcs = d.paths_of(Family::RedArc);
    let saddle = |nodes: &mut Vec<FlowNode>, t: u8, label: String| {
        nodes.push(FlowNode { id: nodes.len(), role: Role::Saddle, point_type: t, label });
        nodes.len() - 1
    };
    let u_nodes: Vec<usize> = u_arcs.iter().map(|(c, _)| saddle(&mut nodes, 3, format!("u{}", c.index))).collect();
    let v_nodes: Vec<usize> = v_arcs.iter().map(|(c, _)| saddle(&mut nodes, 4, format!("v{}", c.index))).collect();
    let sinks = Regions::add(&mut nodes, &red, false);
    for ((_, path), &s) in u_arcs.iter().zip(&u_nodes) {
        for side in [Side::Left, Side::Right] {
            let from = sources.at(&green, copy_of(&green, path[0], side));
            edges.push(FlowEdge { from, to: s });
        }
        for end in [path[0], m.alpha(path[path.len() - 1])] {
            edges.push(FlowEdge { from: s, to: sinks.at_endpoint(&red, m, end) });
        }
    }
    for ((_, path), &s) in v_arcs.iter().zip(&v_nodes) {
        for end in [path[0], m.alpha(path[path.len() - 1])] {
            edges.push(FlowEdge { from: sources.at_endpoint(&green, m, end), to: s });
        }
        for side in [Side::Left, Side::Right] {
            let to = sinks.at(&red, copy_of(&red, path[0], side));
            edges.push(FlowEdge { from: s, to });
        }
    }
    nodes.sort_by_key(|n| n.id);
    Ok(BoundaryFlowGraph { nodes, edges, genus: census.g_boundary })
}
