//! WebAssembly bindings for the browser demo in `www/`.
//!
//! A [`Scene`] discretizes a planar domain and keeps its distance matrix and
//! boundary report so the page can query slices and witnesses per click.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use graph_boundary::boundary::boundary_from;
use graph_boundary::euclid::classify_prop4;
use graph_boundary::generators::{Family, GridGraph};
use graph_boundary::layers::decompose_with;
use graph_boundary::{BoundaryReport, DistanceMatrix};

#[wasm_bindgen]
pub struct Scene {
    grid: GridGraph,
    dm: DistanceMatrix,
    report: BoundaryReport,
}

fn text(value: &Value) -> String {
    value.to_string()
}

impl Scene {
    /// `shape` is a lattice family name (disk, annulus, rectangle, lshape,
    /// slitdisk, sector, grid) and `params` its comma-separated parameters.
    pub fn build(shape: &str, params: &str) -> Result<Scene, String> {
        let family = Family::parse(shape, params).map_err(|e| e.to_string())?;
        let built = family.build(0).map_err(|e| e.to_string())?;
        let grid = built
            .grid
            .ok_or_else(|| format!("{shape} has no lattice coordinates"))?;
        let dm = DistanceMatrix::compute(&grid.graph).map_err(|e| e.to_string())?;
        let report = boundary_from(&grid.graph, &dm).map_err(|e| e.to_string())?;
        Ok(Scene { grid, dm, report })
    }

    pub fn geometry(&self) -> String {
        let g = &self.grid.graph;
        let positions: Vec<Vec<f64>> = (0..g.n()).map(|u| self.grid.position(u)).collect();
        let edges: Vec<[usize; 2]> = g.edges().map(|(u, w)| [u, w]).collect();
        text(&json!({
            "n": g.n(),
            "m": g.m(),
            "positions": positions,
            "edges": edges,
            "spacing": self.grid.frame.as_ref().map_or(1.0, |f| f.lambda),
        }))
    }

    pub fn boundary(&self) -> String {
        let r = &self.report;
        text(&json!({
            "max_degree": r.max_degree,
            "diameter": r.diameter,
            "boundary": r.boundary,
            "cejz_boundary": r.cejz_boundary,
        }))
    }

    pub fn slice(&self, v: usize) -> Result<String, String> {
        let n = self.grid.graph.n();
        if v >= n {
            return Err(format!("vertex {v} out of range (n = {n})"));
        }
        let slice = &self.report.slices[v];
        let field = self.dm.field(v);
        let layers = decompose_with(&self.grid.graph, &field, slice);
        Ok(text(&json!({
            "source": v,
            "members": slice.members,
            "distance": self.dm.row(v),
            "layer_sizes": layers.layer_sizes(),
            "cross_edges": layers.cross_edges,
        })))
    }

    pub fn witnesses(&self) -> Result<String, String> {
        let entries =
            classify_prop4(&self.grid, &self.dm, &self.report, false).map_err(|e| e.to_string())?;
        let verified = entries
            .iter()
            .all(|e| e.witnesses.iter().all(|w| w.verify(&self.dm)));
        Ok(text(&json!({ "entries": entries, "verified": verified })))
    }
}

#[wasm_bindgen]
impl Scene {
    #[wasm_bindgen(constructor)]
    pub fn new(shape: &str, params: &str) -> Result<Scene, JsValue> {
        Scene::build(shape, params).map_err(|e| JsValue::from_str(&e))
    }

    /// Vertex positions and edges.
    #[wasm_bindgen(js_name = geometryJson)]
    pub fn geometry_json(&self) -> String {
        self.geometry()
    }

    /// `∂G` and `(∂G)*`.
    #[wasm_bindgen(js_name = boundaryJson)]
    pub fn boundary_json(&self) -> String {
        self.boundary()
    }

    /// The slice `B_v`, the distance field from `v` and its layer sizes.
    #[wasm_bindgen(js_name = sliceJson)]
    pub fn slice_json(&self, v: usize) -> Result<String, JsValue> {
        self.slice(v).map_err(|e| JsValue::from_str(&e))
    }

    /// Non-uniqueness witnesses at full-degree boundary vertices.
    #[wasm_bindgen(js_name = witnessJson)]
    pub fn witness_json(&self) -> Result<String, JsValue> {
        self.witnesses().map_err(|e| JsValue::from_str(&e))
    }
}
