//! Explicit constructions of the (q+1,8)-cage Γ_q and the auxiliary
//! q-regular graphs H_q and B_q.
//!
//! Γ_q is generated from line-side neighbourhoods only. The point-side
//! formula ([`gamma_point_neighborhood`]) and the staged build
//! ([`build_gamma_staged`]) are independent routes used to check it.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::graph::{
    BipartiteGraph, Coord, GammaLayout, Origin, Side, Vertex, VertexId, VertexMap, VertexSet,
};

/// Moore lower bound on the order of a k-regular graph of girth g.
pub fn moore_bound(k: u64, g: u64) -> u64 {
    assert!(k >= 2 && g >= 3, "moore_bound needs k >= 2 and g >= 3");
    let d = k - 1;
    if g.is_multiple_of(2) {
        2 * (0..g / 2).map(|i| d.pow(i as u32)).sum::<u64>()
    } else {
        1 + k * (0..=(g - 3) / 2).map(|i| d.pow(i as u32)).sum::<u64>()
    }
}

fn elem(x: FieldElement) -> Coord {
    Coord::Elem(x)
}

fn expect_elem(c: Coord, v: &Vertex) -> Result<FieldElement> {
    c.as_elem()
        .ok_or_else(|| Error::InvalidVertex(v.to_string()))
}

fn check_in_field(f: &Field, v: &Vertex) -> Result<()> {
    let ok = [v.a, v.b, v.c]
        .iter()
        .all(|c| c.as_elem().is_none_or(|x| f.contains(x)));
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidVertex(v.to_string()))
    }
}

// ---------------------------------------------------------------------------
// H_q and B_q
// ---------------------------------------------------------------------------

fn affine_id(q: u32, v: &Vertex) -> Option<VertexId> {
    let (a, b, c) = (v.a.as_elem()?, v.b.as_elem()?, v.c.as_elem()?);
    Some(v.side.index() * q * q * q + a.index() * q * q + b.index() * q + c.index())
}

fn affine_vertex(q: u32, id: VertexId) -> Vertex {
    let side = if id < q * q * q {
        Side::Point
    } else {
        Side::Line
    };
    let local = id % (q * q * q);
    Vertex::new(
        side,
        Coord::elem(local / (q * q)),
        Coord::elem(local / q % q),
        Coord::elem(local % q),
    )
}

/// Points on line `(a,b,c)_1`: `(x, ax+b, a²x + t + c)_0`, where `t` is
/// `2ab` for B_q and zero for H_q.
fn affine_line_points(
    f: &Field,
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    twist: bool,
) -> impl Iterator<Item = Vertex> + '_ {
    let t = if twist {
        f.double(f.mul(a, b))
    } else {
        FieldElement::ZERO
    };
    let a2 = f.square(a);
    f.elements().map(move |x| {
        Vertex::point(
            elem(x),
            elem(f.add(f.mul(a, x), b)),
            elem(f.add(f.add(f.mul(a2, x), t), c)),
        )
    })
}

fn build_affine(f: &Field, twist: bool) -> BipartiteGraph {
    let q = f.q();
    let n = 2 * q * q * q;
    let labels: Vec<Vertex> = (0..n).map(|id| affine_vertex(q, id)).collect();
    let sides = labels.iter().map(|v| v.side).collect();
    let mut edges = Vec::with_capacity((q * q * q * q) as usize);
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                let line = affine_id(q, &Vertex::line(elem(a), elem(b), elem(c))).unwrap();
                for p in affine_line_points(f, a, b, c, twist) {
                    edges.push((affine_id(q, &p).unwrap(), line));
                }
            }
        }
    }
    let origin = if twist { Origin::B } else { Origin::H };
    BipartiteGraph::from_parts(sides, edges, Some(labels), Some(f.clone()), origin)
        .expect("affine construction yields a valid graph")
}

/// H_q: lines `(a,b,c)_1` meet the points `(x, ax+b, a²x+c)_0`.
pub fn build_h(q: u64) -> Result<BipartiteGraph> {
    Ok(build_h_over(&Field::new(q)?))
}

pub fn build_h_over(f: &Field) -> BipartiteGraph {
    build_affine(f, false)
}

/// B_q: lines `(a,b,c)_1` meet the points `(j, aj+b, a²j+2ab+c)_0`.
pub fn build_b(q: u64) -> Result<BipartiteGraph> {
    Ok(build_b_over(&Field::new(q)?))
}

pub fn build_b_over(f: &Field) -> BipartiteGraph {
    build_affine(f, true)
}

/// σ: fixes points and sends line `(a,b,c)_1` to `(a, b, 2ab+c)_1`.
pub fn sigma(f: &Field, v: &Vertex) -> Result<Vertex> {
    match v.side {
        Side::Point => Ok(*v),
        Side::Line => {
            let a = expect_elem(v.a, v)?;
            let b = expect_elem(v.b, v)?;
            let c = expect_elem(v.c, v)?;
            Ok(Vertex::line(
                v.a,
                v.b,
                elem(f.add(f.double(f.mul(a, b)), c)),
            ))
        }
    }
}

/// The bijection σ from `b` (a B_q) onto `h` (an H_q), as a vertex map.
pub fn sigma_map(b: &BipartiteGraph, h: &BipartiteGraph) -> Result<VertexMap> {
    let f = b.require_field()?.clone();
    Ok(VertexMap::from_labels(b, h, |v| sigma(&f, v).ok()))
}

// ---------------------------------------------------------------------------
// Γ_q
// ---------------------------------------------------------------------------

/// Neighbours of a line of Γ_q, in generation order.
pub fn gamma_line_neighborhood(f: &Field, line: &Vertex) -> Result<Vec<Vertex>> {
    if line.side != Side::Line {
        return Err(Error::InvalidVertex(line.to_string()));
    }
    check_in_field(f, line)?;
    GammaLayout::new(f.q()).local_id(line)?;
    let inf = Coord::Infinity;
    let out = match (line.a, line.b, line.c) {
        (Coord::Elem(a), Coord::Elem(b), Coord::Elem(c)) => affine_line_points(f, a, b, c, true)
            .chain(std::iter::once(Vertex::point(inf, elem(a), elem(c))))
            .collect(),
        (Coord::Infinity, Coord::Elem(b), Coord::Elem(c)) => f
            .elements()
            .map(|x| Vertex::point(elem(c), elem(b), elem(x)))
            .chain(std::iter::once(Vertex::point(inf, inf, elem(c))))
            .collect(),
        (Coord::Infinity, Coord::Infinity, a) => f
            .elements()
            .map(|x| Vertex::point(inf, a, elem(x)))
            .chain(std::iter::once(Vertex::point(inf, inf, inf)))
            .collect(),
        _ => return Err(Error::InvalidVertex(line.to_string())),
    };
    Ok(out)
}

/// Neighbours of a point of Γ_q from the point-side formula. Computed
/// without reference to the generated adjacency.
pub fn gamma_point_neighborhood(f: &Field, point: &Vertex) -> Result<Vec<Vertex>> {
    if point.side != Side::Point {
        return Err(Error::InvalidVertex(point.to_string()));
    }
    check_in_field(f, point)?;
    GammaLayout::new(f.q()).local_id(point)?;
    let inf = Coord::Infinity;
    let out = match (point.a, point.b, point.c) {
        (Coord::Elem(x), Coord::Elem(y), Coord::Elem(z)) => f
            .elements()
            .map(|a| {
                // (a, y - ax, a²x - 2ay + z)
                let second = f.sub(y, f.mul(a, x));
                let third = f.add(f.sub(f.mul(f.square(a), x), f.double(f.mul(a, y))), z);
                Vertex::line(elem(a), elem(second), elem(third))
            })
            .chain(std::iter::once(Vertex::line(inf, elem(y), elem(x))))
            .collect(),
        (Coord::Infinity, Coord::Elem(y), Coord::Elem(z)) => f
            .elements()
            .map(|a| Vertex::line(elem(y), elem(a), elem(z)))
            .chain(std::iter::once(Vertex::line(inf, inf, elem(y))))
            .collect(),
        (Coord::Infinity, Coord::Infinity, Coord::Elem(z)) => f
            .elements()
            .map(|a| Vertex::line(inf, elem(a), elem(z)))
            .chain(std::iter::once(Vertex::line(inf, inf, inf)))
            .collect(),
        (Coord::Infinity, Coord::Infinity, Coord::Infinity) => f
            .elements()
            .map(elem)
            .chain(std::iter::once(inf))
            .map(|x| Vertex::line(inf, inf, x))
            .collect(),
        _ => return Err(Error::InvalidVertex(point.to_string())),
    };
    Ok(out)
}

fn gamma_labels(layout: GammaLayout) -> Vec<Vertex> {
    (0..layout.order()).map(|id| layout.vertex(id)).collect()
}

/// The (q+1,8)-cage Γ_q over GF(q).
pub fn build_gamma(q: u64) -> Result<BipartiteGraph> {
    Ok(build_gamma_over(&Field::new(q)?))
}

pub fn build_gamma_over(f: &Field) -> BipartiteGraph {
    let layout = GammaLayout::new(f.q());
    let labels = gamma_labels(layout);
    let sides = labels.iter().map(|v| v.side).collect();
    let mut edges = Vec::with_capacity((layout.side_size() * (f.q() + 1)) as usize);
    for line in labels.iter().filter(|v| v.side == Side::Line) {
        let lid = layout.id(line).unwrap();
        for p in gamma_line_neighborhood(f, line).expect("layout vertices are valid") {
            edges.push((layout.id(&p).expect("generated points are valid"), lid));
        }
    }
    BipartiteGraph::from_parts(sides, edges, Some(labels), Some(f.clone()), Origin::Gamma)
        .expect("Γ_q construction yields a valid graph")
}

// ---------------------------------------------------------------------------
// Staged construction B_q -> B'_q -> B''_q -> B'''_q -> Γ_q
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    /// B_q embedded in the Γ_q id space.
    B,
    /// adds lines `(inf,b,c)_1`
    BPrime,
    /// adds points `(inf,a,c)_0`, `a ∈ F ∪ {inf}`
    BDoublePrime,
    /// adds lines `(inf,inf,a)_1`
    BTriplePrime,
    /// adds the point `(inf,inf,inf)_0`
    Gamma,
}

impl Stage {
    pub const ALL: [Stage; 5] = [
        Stage::B,
        Stage::BPrime,
        Stage::BDoublePrime,
        Stage::BTriplePrime,
        Stage::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::B => "B",
            Stage::BPrime => "B'",
            Stage::BDoublePrime => "B''",
            Stage::BTriplePrime => "B'''",
            Stage::Gamma => "Gamma",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageInfo {
    pub stage: Stage,
    pub order: usize,
    pub girth: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct StagedGamma {
    pub graph: BipartiteGraph,
    pub stages: Vec<StageInfo>,
}

/// New vertices and their edges (into earlier vertices) added by a stage.
fn stage_increment(f: &Field, stage: Stage) -> (Vec<Vertex>, Vec<(Vertex, Vertex)>) {
    let inf = Coord::Infinity;
    let els: Vec<FieldElement> = f.elements().collect();
    let ext: Vec<Coord> = els.iter().copied().map(elem).chain([inf]).collect();
    let mut added = Vec::new();
    let mut edges = Vec::new();
    match stage {
        Stage::B => {
            for &a in &els {
                for &b in &els {
                    for &c in &els {
                        added.push(Vertex::point(elem(a), elem(b), elem(c)));
                        let line = Vertex::line(elem(a), elem(b), elem(c));
                        added.push(line);
                        edges.extend(affine_line_points(f, a, b, c, true).map(|p| (p, line)));
                    }
                }
            }
        }
        Stage::BPrime => {
            for &b in &els {
                for &c in &els {
                    let line = Vertex::line(inf, elem(b), elem(c));
                    added.push(line);
                    edges.extend(
                        els.iter()
                            .map(|&j| (Vertex::point(elem(c), elem(b), elem(j)), line)),
                    );
                }
            }
        }
        Stage::BDoublePrime => {
            for &a in &ext {
                for &c in &els {
                    let point = Vertex::point(inf, a, elem(c));
                    added.push(point);
                    edges.extend(
                        els.iter()
                            .map(|&t| (point, Vertex::line(a, elem(t), elem(c)))),
                    );
                }
            }
        }
        Stage::BTriplePrime => {
            for &a in &ext {
                let line = Vertex::line(inf, inf, a);
                added.push(line);
                edges.extend(els.iter().map(|&c| (Vertex::point(inf, a, elem(c)), line)));
            }
        }
        Stage::Gamma => {
            let point = Vertex::point(inf, inf, inf);
            added.push(point);
            edges.extend(ext.iter().map(|&i| (point, Vertex::line(inf, inf, i))));
        }
    }
    (added, edges)
}

/// The graph after `upto` stages, labelled, with ids in Γ_q layout order
/// restricted to the vertices present.
pub fn build_stage(f: &Field, upto: Stage) -> BipartiteGraph {
    let layout = GammaLayout::new(f.q());
    let mut present = vec![false; layout.order() as usize];
    let mut edges = Vec::new();
    for stage in Stage::ALL.into_iter().filter(|s| *s <= upto) {
        let (added, new_edges) = stage_increment(f, stage);
        for v in added {
            present[layout.id(&v).unwrap() as usize] = true;
        }
        for (u, v) in new_edges {
            edges.push((layout.id(&u).unwrap(), layout.id(&v).unwrap()));
        }
    }
    let labels = gamma_labels(layout);
    let sides = labels.iter().map(|v| v.side).collect();
    let full =
        BipartiteGraph::from_parts(sides, edges, Some(labels), Some(f.clone()), Origin::Gamma)
            .expect("staged construction yields a valid graph");
    let absent: VertexSet = (0..layout.order())
        .filter(|&id| !present[id as usize])
        .collect();
    if absent.is_empty() {
        full
    } else {
        full.remove_set(&absent)
    }
}

/// Rebuilds Γ_q stage by stage, recording each stage's order and girth.
pub fn build_gamma_staged(q: u64) -> Result<StagedGamma> {
    let f = Field::new(q)?;
    let mut stages = Vec::new();
    let mut last = None;
    for stage in Stage::ALL {
        let g = build_stage(&f, stage);
        stages.push(StageInfo {
            stage,
            order: g.order(),
            girth: g.girth(),
        });
        last = Some(g);
    }
    Ok(StagedGamma {
        graph: last.unwrap(),
        stages,
    })
}

// ---------------------------------------------------------------------------
// Distance claims behind the staged construction
// ---------------------------------------------------------------------------

/// A family of vertex classes whose members must be pairwise at distance
/// at least `bound` in the given stage.
#[derive(Clone, Debug)]
pub struct ClassBound {
    pub stage: Stage,
    pub classes: Vec<Vec<Vertex>>,
    pub bound: u32,
}

impl ClassBound {
    /// Checks every class in `g`, which must be the graph of `self.stage`.
    pub fn holds_in(&self, g: &BipartiteGraph) -> Result<bool> {
        for class in &self.classes {
            let ids: VertexSet = class
                .iter()
                .map(|v| g.id_of(v))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .collect();
            if !g.pairwise_at_least(&ids, self.bound) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The five distance claims used while growing B_q into Γ_q:
///
/// 1. in B_q, lines `(a,*,*)_1` and points `(x,*,*)_0` of a class: >= 4
/// 2. in B_q, points `(x,y,*)_0`: >= 6
/// 3. in B'_q, lines `(a,*,*)_1`, `a ∈ F ∪ {inf}`: >= 4
/// 4. in B'_q, lines `(a,*,c)_1`, `a ∈ F ∪ {inf}`: >= 6
/// 5. in B''_q, points `(inf,a,*)_0`, `a ∈ F ∪ {inf}`: >= 6
pub fn distance_claim(f: &Field, claim: u8) -> Option<ClassBound> {
    let els: Vec<Coord> = f.elements().map(elem).collect();
    let ext: Vec<Coord> = els.iter().copied().chain([Coord::Infinity]).collect();
    let plane = |side: Side, a: Coord| -> Vec<Vertex> {
        els.iter()
            .flat_map(|&b| els.iter().map(move |&c| Vertex::new(side, a, b, c)))
            .collect()
    };
    let row = |side: Side, a: Coord, b: Coord| -> Vec<Vertex> {
        els.iter().map(|&c| Vertex::new(side, a, b, c)).collect()
    };
    let (stage, classes, bound) = match claim {
        1 => (
            Stage::B,
            els.iter()
                .flat_map(|&a| [plane(Side::Line, a), plane(Side::Point, a)])
                .collect(),
            4,
        ),
        2 => (
            Stage::B,
            els.iter()
                .flat_map(|&x| els.iter().map(move |&y| (x, y)))
                .map(|(x, y)| row(Side::Point, x, y))
                .collect(),
            6,
        ),
        3 => (
            Stage::BPrime,
            ext.iter().map(|&a| plane(Side::Line, a)).collect(),
            4,
        ),
        4 => (
            Stage::BPrime,
            ext.iter()
                .flat_map(|&a| els.iter().map(move |&c| (a, c)))
                .map(|(a, c)| els.iter().map(|&t| Vertex::line(a, t, c)).collect())
                .collect(),
            6,
        ),
        5 => (
            Stage::BDoublePrime,
            ext.iter()
                .map(|&a| row(Side::Point, Coord::Infinity, a))
                .collect(),
            6,
        ),
        _ => return None,
    };
    Some(ClassBound {
        stage,
        classes,
        bound,
    })
}

// ---------------------------------------------------------------------------
// Side swaps
// ---------------------------------------------------------------------------

/// `(a,b,c)_r -> (a,b,c)_{1-r}` on every vertex of Γ_q.
pub fn side_swap_map(gamma: &BipartiteGraph) -> VertexMap {
    VertexMap::from_labels(gamma, gamma, |v| {
        Some(Vertex::new(v.side.other(), v.a, v.b, v.c))
    })
}

/// Side-swapping automorphism of Γ_q for even q:
///
/// * `(x,y,z)_0 -> (x,z,y²)_1`, `(inf,inf,z)_0 -> (inf,inf,z)_1`
/// * `(a,b,c)_1 -> (a²,c,b²)_0`, `(inf,inf,a)_1 -> (inf,inf,a²)_0`
///
/// with `inf² = inf`. Squaring is a field automorphism in characteristic 2.
pub fn duality(f: &Field, v: &Vertex) -> Result<Vertex> {
    if f.p() != 2 {
        return Err(Error::BadQ(format!("duality needs even q, got {}", f.q())));
    }
    check_in_field(f, v)?;
    let sq = |c: Coord| match c {
        Coord::Elem(x) => Coord::Elem(f.square(x)),
        Coord::Infinity => Coord::Infinity,
    };
    let inf = Coord::Infinity;
    Ok(match (v.side, v.b) {
        (Side::Point, Coord::Infinity) => Vertex::line(inf, inf, v.c),
        (Side::Point, _) => Vertex::line(v.a, v.c, sq(v.b)),
        (Side::Line, Coord::Infinity) => Vertex::point(inf, inf, sq(v.c)),
        (Side::Line, _) => Vertex::point(sq(v.a), v.c, sq(v.b)),
    })
}

pub fn duality_map(gamma: &BipartiteGraph) -> Result<VertexMap> {
    let f = gamma.require_field()?.clone();
    if f.p() != 2 {
        return Err(Error::BadQ(format!("duality needs even q, got {}", f.q())));
    }
    Ok(VertexMap::from_labels(gamma, gamma, |v| {
        duality(&f, v).ok()
    }))
}
