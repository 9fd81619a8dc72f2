use std::collections::HashMap;

use crate::geometry::{Point, SimplePolygon};

pub type VertexId = usize;
pub type HalfEdgeId = usize;
pub type FaceId = usize;

/// The unbounded face.
pub const OUTER_FACE: FaceId = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfEdge {
    pub origin: VertexId,
    pub twin: HalfEdgeId,
    pub next: HalfEdgeId,
    pub prev: HalfEdgeId,
    pub face: FaceId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DcelVertex {
    pub point: Point,
    pub outgoing: HalfEdgeId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Face {
    /// Any half-edge on the face boundary; `None` once the face is merged away.
    pub edge: Option<HalfEdgeId>,
}

/// Doubly connected edge list of a polygon subdivided by diagonals.
///
/// Half-edges are never reused after removal; dead ones keep their slot and
/// are flagged in `alive`.
#[derive(Clone, Debug)]
pub struct Dcel {
    vertices: Vec<DcelVertex>,
    half_edges: Vec<HalfEdge>,
    alive: Vec<bool>,
    faces: Vec<Face>,
    /// One half-edge per diagonal, in creation order.
    diagonals: Vec<HalfEdgeId>,
}

impl Dcel {
    /// Builds the subdivision of `polygon` into the given CCW faces. Each
    /// face is a ring of polygon vertex indices; `diagonal_order` lists the
    /// interior edges in creation order as vertex pairs.
    pub(crate) fn from_faces(
        polygon: &SimplePolygon,
        rings: &[Vec<VertexId>],
        diagonal_order: &[(VertexId, VertexId)],
    ) -> Dcel {
        let m = polygon.len();
        let mut half_edges: Vec<HalfEdge> = Vec::new();
        let mut by_endpoints: HashMap<(VertexId, VertexId), HalfEdgeId> = HashMap::new();
        let mut faces = vec![Face { edge: None }];

        for ring in rings {
            let face = faces.len();
            let base = half_edges.len();
            let k = ring.len();
            for i in 0..k {
                let id = base + i;
                half_edges.push(HalfEdge {
                    origin: ring[i],
                    twin: usize::MAX,
                    next: base + (i + 1) % k,
                    prev: base + (i + k - 1) % k,
                    face,
                });
                by_endpoints.insert((ring[i], ring[(i + 1) % k]), id);
            }
            faces.push(Face { edge: Some(base) });
        }

        // Pair interior twins; boundary half-edges get an outer twin.
        let inner_count = half_edges.len();
        let mut outer_by_origin: HashMap<VertexId, HalfEdgeId> = HashMap::new();
        for id in 0..inner_count {
            let origin = half_edges[id].origin;
            let dest = half_edges[half_edges[id].next].origin;
            if let Some(&t) = by_endpoints.get(&(dest, origin)) {
                half_edges[id].twin = t;
            } else {
                let outer = half_edges.len();
                half_edges.push(HalfEdge {
                    origin: dest,
                    twin: id,
                    next: usize::MAX,
                    prev: usize::MAX,
                    face: OUTER_FACE,
                });
                half_edges[id].twin = outer;
                outer_by_origin.insert(dest, outer);
            }
        }
        // Outer ring runs clockwise: (v+1 -> v) is followed by (v -> v-1).
        for v in 0..m {
            let e = outer_by_origin[&((v + 1) % m)];
            let n = outer_by_origin[&v];
            half_edges[e].next = n;
            half_edges[n].prev = e;
        }
        faces[OUTER_FACE].edge = outer_by_origin.get(&0).copied();

        let mut vertices: Vec<DcelVertex> = polygon
            .vertices()
            .iter()
            .map(|&point| DcelVertex { point, outgoing: usize::MAX })
            .collect();
        for (id, h) in half_edges.iter().enumerate() {
            if h.face != OUTER_FACE && vertices[h.origin].outgoing == usize::MAX {
                vertices[h.origin].outgoing = id;
            }
        }

        let diagonals = diagonal_order
            .iter()
            .map(|&(a, b)| by_endpoints[&(a, b)])
            .collect();
        let alive = vec![true; half_edges.len()];
        Dcel { vertices, half_edges, alive, faces, diagonals }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: VertexId) -> &DcelVertex {
        &self.vertices[v]
    }

    pub fn point(&self, v: VertexId) -> Point {
        self.vertices[v].point
    }

    pub fn half_edge(&self, h: HalfEdgeId) -> &HalfEdge {
        &self.half_edges[h]
    }

    pub fn is_alive(&self, h: HalfEdgeId) -> bool {
        self.alive[h]
    }

    pub fn destination(&self, h: HalfEdgeId) -> VertexId {
        self.half_edges[self.half_edges[h].twin].origin
    }

    /// Live undirected edges (each counted once).
    pub fn edge_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count() / 2
    }

    /// Live faces including the outer face.
    pub fn face_count(&self) -> usize {
        self.faces.iter().filter(|f| f.edge.is_some()).count()
    }

    /// Live bounded face ids in ascending order.
    pub fn bounded_faces(&self) -> Vec<FaceId> {
        (1..self.faces.len())
            .filter(|&f| self.faces[f].edge.is_some())
            .collect()
    }

    /// Half-edges around face `f` starting at its stored edge.
    pub fn face_ring(&self, f: FaceId) -> Vec<HalfEdgeId> {
        let Some(start) = self.faces[f].edge else {
            return Vec::new();
        };
        let mut out = vec![start];
        let mut h = self.half_edges[start].next;
        while h != start {
            out.push(h);
            h = self.half_edges[h].next;
        }
        out
    }

    /// Vertex ids around face `f`, rotated to start at the smallest id.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self
            .face_ring(f)
            .into_iter()
            .map(|h| self.half_edges[h].origin)
            .collect();
        if let Some(pos) = vs.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i) {
            vs.rotate_left(pos);
        }
        vs
    }

    /// Live diagonals in creation order.
    pub fn diagonals(&self) -> Vec<HalfEdgeId> {
        self.diagonals.iter().copied().filter(|&h| self.alive[h]).collect()
    }

    /// Deletes the diagonal through half-edge `h`, merging its two faces
    /// into the one with the smaller id.
    pub(crate) fn remove_diagonal(&mut self, h: HalfEdgeId) {
        let t = self.half_edges[h].twin;
        let (fh, ft) = (self.half_edges[h].face, self.half_edges[t].face);
        debug_assert!(fh != OUTER_FACE && ft != OUTER_FACE && fh != ft);
        let (keep, gone) = if fh < ft { (fh, ft) } else { (ft, fh) };

        let (hp, hn) = (self.half_edges[h].prev, self.half_edges[h].next);
        let (tp, tn) = (self.half_edges[t].prev, self.half_edges[t].next);
        self.half_edges[hp].next = tn;
        self.half_edges[tn].prev = hp;
        self.half_edges[tp].next = hn;
        self.half_edges[hn].prev = tp;

        let (u, v) = (self.half_edges[h].origin, self.half_edges[t].origin);
        if self.vertices[u].outgoing == h {
            self.vertices[u].outgoing = tn;
        }
        if self.vertices[v].outgoing == t {
            self.vertices[v].outgoing = hn;
        }
        self.alive[h] = false;
        self.alive[t] = false;

        self.faces[keep].edge = Some(hn);
        self.faces[gone].edge = None;
        let ring = self.face_ring(keep);
        for e in ring {
            self.half_edges[e].face = keep;
        }
    }

    /// Structural consistency: twin and next/prev involutions on live
    /// half-edges, consistent faces, and Euler's formula.
    pub fn check(&self) -> Result<(), String> {
        for (id, h) in self.half_edges.iter().enumerate() {
            if !self.alive[id] {
                continue;
            }
            if self.half_edges[h.twin].twin != id {
                return Err(format!("twin(twin({id})) != {id}"));
            }
            if !self.alive[h.next] || !self.alive[h.prev] {
                return Err(format!("half-edge {id} links to a dead half-edge"));
            }
            if self.half_edges[h.next].prev != id || self.half_edges[h.prev].next != id {
                return Err(format!("next/prev mismatch at {id}"));
            }
            if self.half_edges[h.next].face != h.face {
                return Err(format!("face mismatch along ring at {id}"));
            }
            if self.half_edges[h.next].origin != self.destination(id) {
                return Err(format!("ring broken after {id}"));
            }
        }
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let f = self.face_count() as i64;
        if v - e + f != 2 {
            return Err(format!("Euler formula fails: V={v} E={e} F={f}"));
        }
        Ok(())
    }
}
