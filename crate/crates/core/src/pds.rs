//! Perfect dominating sets of Γ_q and the graphs obtained by removing them.
//!
//! Sets are assembled from the displayed ball/union/intersection
//! expressions; the closed forms known for their pieces are checked as
//! secondary assertions and reported as [`Error::ExpectationMismatch`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cage::build_gamma_over;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::graph::{BipartiteGraph, Coord, GammaLayout, Vertex, VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    #[serde(rename = "Cprime")]
    CPrime,
    S,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::B, Family::C, Family::CPrime, Family::S];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::CPrime => "Cprime",
            Family::S => "S",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidVertex(format!("unknown family {s:?}")))
    }
}

/// Which set was removed, with which parameters, and what the result must
/// look like. `alpha`/`beta` are ids in Γ_q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedSpec {
    pub family: Family,
    pub q: u32,
    pub xi: Option<u32>,
    pub alpha: Option<VertexId>,
    pub beta: Option<VertexId>,
    pub expected_removed: usize,
    pub expected_order: usize,
    pub expected_degree: usize,
}

/// Optional overrides; `None` selects the default.
#[derive(Clone, Debug, Default)]
pub struct DeriveParams {
    pub xi: Option<FieldElement>,
    pub alpha: Option<Vertex>,
    pub beta: Option<Vertex>,
}

#[derive(Clone, Debug)]
pub struct Derived {
    /// The graph the set was removed from: Γ_q, or G_q for family S.
    pub base: BipartiteGraph,
    /// The removed set, as ids of `base`.
    pub removed: VertexSet,
    pub graph: BipartiteGraph,
    pub spec: DerivedSpec,
}

const INF: Coord = Coord::Infinity;

fn el(x: FieldElement) -> Coord {
    Coord::Elem(x)
}

fn extended(f: &Field) -> impl Iterator<Item = Coord> + '_ {
    f.elements().map(el).chain([INF])
}

fn closed_ball(g: &BipartiteGraph, v: &Vertex, t: u32) -> Result<VertexSet> {
    g.ball_at(v, t, true)
}

fn ids(g: &BipartiteGraph, vs: impl IntoIterator<Item = Vertex>) -> Result<VertexSet> {
    vs.into_iter()
        .map(|v| g.id_of(&v))
        .collect::<Result<Vec<_>>>()
        .map(VertexSet::from_iter)
}

fn intersect(sets: &[VertexSet]) -> VertexSet {
    VertexSet::intersect_all(sets).unwrap_or_default()
}

fn expect_set(
    g: &BipartiteGraph,
    what: &'static str,
    actual: &VertexSet,
    expected: &VertexSet,
) -> Result<()> {
    if actual == expected {
        return Ok(());
    }
    let show = |s: &VertexSet| {
        let parts: Vec<String> = s
            .iter()
            .map(|v| g.label(v).map_or_else(|| v.to_string(), |l| l.to_string()))
            .collect();
        format!("{{{}}}", parts.join(", "))
    };
    Err(Error::ExpectationMismatch {
        what,
        expected: show(expected),
        actual: show(actual),
    })
}

fn gamma_field(gamma: &BipartiteGraph) -> Result<Field> {
    let f = gamma.require_field()?.clone();
    if gamma.labels().is_none() || gamma.order() as u32 != GammaLayout::new(f.q()).order() {
        return Err(Error::MissingContext);
    }
    Ok(f)
}

fn check_xi(f: &Field, xi: FieldElement, forbid_one: bool) -> Result<()> {
    if !f.contains(xi) {
        return Err(Error::BadXi(format!(
            "{xi} is not an element of GF({})",
            f.q()
        )));
    }
    if xi.is_zero() {
        return Err(Error::BadXi("xi must be nonzero".into()));
    }
    if forbid_one && xi == FieldElement::ONE {
        return Err(Error::BadXi("xi must not be 0 or 1".into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// A
// ---------------------------------------------------------------------------

pub fn default_alpha() -> Vertex {
    Vertex::point(INF, INF, INF)
}

/// The smallest id at distance exactly 3 from `alpha`.
pub fn default_beta(gamma: &BipartiteGraph, alpha: &Vertex) -> Result<Vertex> {
    let a = gamma.id_of(alpha)?;
    let d = gamma.distances_from(a, Some(3));
    let b = d
        .iter()
        .position(|&x| x == Some(3))
        .ok_or(Error::BadDistance(None))?;
    Ok(*gamma.label(b as VertexId).unwrap())
}

/// `A = N²[α] ∪ N²[β]` for α, β at distance 3.
pub fn pds_a(gamma: &BipartiteGraph, alpha: &Vertex, beta: &Vertex) -> Result<VertexSet> {
    let (a, b) = (gamma.id_of(alpha)?, gamma.id_of(beta)?);
    match gamma.distance(a, b)? {
        Some(3) => {}
        d => return Err(Error::BadDistance(d)),
    }
    Ok(gamma.ball(a, 2, true)?.union(&gamma.ball(b, 2, true)?))
}

// ---------------------------------------------------------------------------
// B
// ---------------------------------------------------------------------------

/// `B = ∪_c N[(inf,0,c)_1] ∪ N[(inf,inf,0)_1]
///      ∪ (∩_c N²[(inf,0,c)_1] ∩ N²[(inf,inf,0)_1]) ∪ N²[(inf,inf,ξ)_1]`.
pub fn pds_b(gamma: &BipartiteGraph, xi: FieldElement) -> Result<VertexSet> {
    let f = gamma_field(gamma)?;
    check_xi(&f, xi, false)?;
    let zero = el(FieldElement::ZERO);

    let centres: Vec<Vertex> = f
        .elements()
        .map(|c| Vertex::line(INF, zero, el(c)))
        .chain([Vertex::line(INF, INF, zero)])
        .collect();
    let mut stars = Vec::new();
    let mut balls = Vec::new();
    for v in &centres {
        stars.push(closed_ball(gamma, v, 1)?);
        balls.push(closed_ball(gamma, v, 2)?);
    }
    let core = intersect(&balls);
    let core_cf = ids(
        gamma,
        f.elements()
            .map(|c| Vertex::line(zero, zero, el(c)))
            .chain([Vertex::line(INF, INF, INF)]),
    )?;
    expect_set(gamma, "B: intersection of 2-balls", &core, &core_cf)?;
    let first = VertexSet::union_all(&stars).union(&core);

    let top = closed_ball(gamma, &Vertex::line(INF, INF, el(xi)), 2)?;
    let top_cf = gamma.closed_neighborhood(&ids(
        gamma,
        f.elements()
            .map(|j| Vertex::point(INF, el(xi), el(j)))
            .chain([Vertex::point(INF, INF, INF)]),
    )?);
    expect_set(gamma, "B: 2-ball around (inf,inf,xi)_1", &top, &top_cf)?;

    // F: the stars plus the affine part of the core
    let affine_core = ids(gamma, f.elements().map(|c| Vertex::line(zero, zero, el(c))))?;
    let f_part = VertexSet::union_all(&stars).union(&affine_core);
    let overlap_cf = ids(
        gamma,
        [Vertex::point(INF, INF, INF), Vertex::line(INF, INF, zero)],
    )?;
    expect_set(gamma, "B: overlap", &f_part.intersection(&top), &overlap_cf)?;

    Ok(first.union(&top))
}

// ---------------------------------------------------------------------------
// C and C'
// ---------------------------------------------------------------------------

fn p_of(f: &Field, x: FieldElement) -> FieldElement {
    f.add(f.add(FieldElement::ONE, x), f.square(x))
}

/// `∪ N[c] ∪ ∩ N²[c]` over the given centres.
fn star_union_with_core(g: &BipartiteGraph, centres: &[Vertex]) -> Result<(VertexSet, VertexSet)> {
    let mut stars = Vec::new();
    let mut balls = Vec::new();
    for v in centres {
        stars.push(closed_ball(g, v, 1)?);
        balls.push(closed_ball(g, v, 2)?);
    }
    let core = intersect(&balls);
    Ok((VertexSet::union_all(&stars).union(&core), core))
}

/// The line-side half shared by C and C′:
/// `∪_x N[(x,x,p(x))_1] ∪ N[(inf,1,1)_1] ∪ (∩_x N²[(x,x,p(x))_1] ∩ N²[(inf,1,1)_1])`.
fn c_line_part(gamma: &BipartiteGraph, f: &Field) -> Result<VertexSet> {
    let one = el(FieldElement::ONE);
    let centres: Vec<Vertex> = f
        .elements()
        .map(|x| Vertex::line(el(x), el(x), el(p_of(f, x))))
        .chain([Vertex::line(INF, one, one)])
        .collect();
    let (set, core) = star_union_with_core(gamma, &centres)?;
    let core_cf = ids(
        gamma,
        f.elements()
            .map(|x| Vertex::line(el(x), el(f.add(FieldElement::ONE, x)), el(p_of(f, x))))
            .chain([Vertex::line(INF, el(FieldElement::ZERO), one)]),
    )?;
    expect_set(gamma, "C: line-side intersection", &core, &core_cf)?;
    Ok(set)
}

/// The two halves `(R0, R1)` of C.
pub fn pds_c_parts(gamma: &BipartiteGraph) -> Result<(VertexSet, VertexSet)> {
    let f = gamma_field(gamma)?;
    if f.p() != 2 || f.q() < 8 {
        return Err(Error::BadQ(format!("C needs even q >= 8, got {}", f.q())));
    }
    let zero = el(FieldElement::ZERO);
    let centres: Vec<Vertex> = extended(&f).map(|x| Vertex::point(INF, x, zero)).collect();
    let (r0, core) = star_union_with_core(gamma, &centres)?;
    let core_cf = ids(
        gamma,
        f.elements()
            .map(|y| Vertex::point(zero, el(y), zero))
            .chain([Vertex::point(INF, INF, INF)]),
    )?;
    expect_set(gamma, "C: point-side intersection", &core, &core_cf)?;
    Ok((r0, c_line_part(gamma, &f)?))
}

pub fn pds_c(gamma: &BipartiteGraph) -> Result<VertexSet> {
    let (r0, r1) = pds_c_parts(gamma)?;
    Ok(r0.union(&r1))
}

/// C′ in Γ_4: the point-side half is
/// `∪_{x∈F} N[(inf,x,ξ)_0] ∪ N[(inf,inf,0)_0] ∪ (∩_{x∈F} N²[(inf,x,ξ)_0] ∩ N²[(inf,inf,0)_0])`,
/// the line-side half is as for C.
pub fn pds_c_prime(gamma: &BipartiteGraph, xi: FieldElement) -> Result<VertexSet> {
    let f = gamma_field(gamma)?;
    if f.q() != 4 {
        return Err(Error::BadQ(format!(
            "C' is defined for q = 4 only, got {}",
            f.q()
        )));
    }
    check_xi(&f, xi, true)?;
    let centres: Vec<Vertex> = f
        .elements()
        .map(|x| Vertex::point(INF, el(x), el(xi)))
        .chain([Vertex::point(INF, INF, el(FieldElement::ZERO))])
        .collect();
    let (r0, _) = star_union_with_core(gamma, &centres)?;
    Ok(r0.union(&c_line_part(gamma, &f)?))
}

// ---------------------------------------------------------------------------
// G_q, S and the (q-1)-regular graph
// ---------------------------------------------------------------------------

/// Default ξ for G_q and S: −1 for odd q, the element of index 2 otherwise.
pub fn default_gq_xi(f: &Field) -> FieldElement {
    if f.p() == 2 {
        FieldElement::from_index_unchecked(2)
    } else {
        f.neg(FieldElement::ONE)
    }
}

fn check_gq_q(f: &Field) -> Result<()> {
    if f.q() < 4 {
        return Err(Error::BadQ(format!("G_q needs q >= 4, got {}", f.q())));
    }
    Ok(())
}

/// G_q = Γ_q − B(ξ), labelled, with ξ ∉ {0, 1}.
pub fn build_gq(gamma: &BipartiteGraph, xi: FieldElement) -> Result<BipartiteGraph> {
    let f = gamma_field(gamma)?;
    check_gq_q(&f)?;
    check_xi(&f, xi, true)?;
    Ok(gamma.remove_set(&pds_b(gamma, xi)?))
}

/// The sets behind the (q−1)-regular construction, as ids of G_q.
#[derive(Clone, Debug)]
pub struct SetS {
    /// `(inf,1,0)_0`, the BFS root.
    pub root: VertexId,
    pub p: VertexSet,
    pub r: VertexSet,
    pub n_r: VertexSet,
    pub s: VertexSet,
}

pub fn set_s_root() -> Vertex {
    Vertex::point(INF, el(FieldElement::ONE), el(FieldElement::ZERO))
}

/// The R-line predicted for `(inf,y,z)_0`: `(y, yz/(1−y²), z)_1`; `None`
/// when `1 − y² = 0`.
pub fn predicted_r_neighbor(f: &Field, y: FieldElement, z: FieldElement) -> Option<Vertex> {
    let d = f.sub(FieldElement::ONE, f.square(y));
    let t = f.mul(f.mul(f.inv(d).ok()?, y), z);
    Some(Vertex::line(el(y), el(t), el(z)))
}

/// P = {(inf,y,z)_0 : y ∉ {0,1,ξ}}, R = N(P) ∩ N⁵((inf,1,0)_0) and
/// S = ∪_z N[(inf,1,z)_0] ∪ N[R], all in `gq` built with the same ξ.
pub fn build_set_s(gq: &BipartiteGraph, xi: FieldElement) -> Result<SetS> {
    let f = gq.require_field()?.clone();
    check_gq_q(&f)?;
    check_xi(&f, xi, true)?;
    let root = gq.id_of(&set_s_root())?;
    let p = ids(
        gq,
        f.elements()
            .filter(|&y| !y.is_zero() && y != FieldElement::ONE && y != xi)
            .flat_map(|y| f.elements().map(move |z| Vertex::point(INF, el(y), el(z)))),
    )?;
    let sphere5 = gq.ball(root, 5, false)?;
    let r = gq.neighborhood(&p).intersection(&sphere5);
    let n_r = gq.neighborhood(&r);
    let mut s = gq.closed_neighborhood(&r);
    for z in f.elements() {
        let c = gq.id_of(&Vertex::point(INF, el(FieldElement::ONE), el(z)))?;
        s = s.union(&gq.ball(c, 1, true)?);
    }
    Ok(SetS { root, p, r, n_r, s })
}

/// G_q − S.
pub fn build_q_minus_1(q: u64, xi: Option<FieldElement>) -> Result<BipartiteGraph> {
    Ok(derive(
        q,
        Family::S,
        &DeriveParams {
            xi,
            ..Default::default()
        },
    )?
    .graph)
}

// ---------------------------------------------------------------------------
// derive
// ---------------------------------------------------------------------------

fn mismatch(what: &'static str, expected: impl ToString, actual: impl ToString) -> Error {
    Error::ExpectationMismatch {
        what,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// Builds the base graph and the removal set for `family`, checks perfect
/// domination and the expected sizes, and removes the set.
pub fn derive(q: u64, family: Family, params: &DeriveParams) -> Result<Derived> {
    let f = Field::new(q)?;
    let qq = q as usize;
    match family {
        Family::C if f.p() != 2 || q < 8 => {
            return Err(Error::BadQ(format!("C needs even q >= 8, got {q}")))
        }
        Family::CPrime if q != 4 => {
            return Err(Error::BadQ(format!(
                "C' is defined for q = 4 only, got {q}"
            )))
        }
        Family::S if q < 4 => return Err(Error::BadQ(format!("S needs q >= 4, got {q}"))),
        _ => {}
    }
    let gamma = build_gamma_over(&f);
    let gamma_order = gamma.order();
    let mut spec = DerivedSpec {
        family,
        q: f.q(),
        xi: None,
        alpha: None,
        beta: None,
        expected_removed: 0,
        expected_order: 0,
        expected_degree: qq,
    };
    let (base, removed) = match family {
        Family::A => {
            let alpha = params.alpha.unwrap_or_else(default_alpha);
            let beta = match params.beta {
                Some(b) => b,
                None => default_beta(&gamma, &alpha)?,
            };
            let set = pds_a(&gamma, &alpha, &beta)?;
            spec.alpha = Some(gamma.id_of(&alpha)?);
            spec.beta = Some(gamma.id_of(&beta)?);
            spec.expected_removed = 2 * (qq + 1).pow(2);
            (gamma, set)
        }
        Family::B => {
            let xi = params.xi.unwrap_or(FieldElement::ONE);
            let set = pds_b(&gamma, xi)?;
            spec.xi = Some(xi.index());
            spec.expected_removed = 2 * (qq * qq + 3 * qq + 1);
            (gamma, set)
        }
        Family::C => {
            let set = pds_c(&gamma)?;
            spec.expected_removed = 2 * (qq * qq + 4 * qq + 3);
            (gamma, set)
        }
        Family::CPrime => {
            let xi = params.xi.unwrap_or(FieldElement::from_index_unchecked(2));
            let set = pds_c_prime(&gamma, xi)?;
            spec.xi = Some(xi.index());
            spec.expected_removed = 2 * (qq * qq + 4 * qq + 3);
            (gamma, set)
        }
        Family::S => {
            let xi = params.xi.unwrap_or_else(|| default_gq_xi(&f));
            let gq = build_gq(&gamma, xi)?;
            let s = build_set_s(&gq, xi)?;
            spec.xi = Some(xi.index());
            spec.expected_removed = 4 * qq * qq - 6 * qq;
            spec.expected_degree = qq - 1;
            (gq, s.s)
        }
    };
    let base_order = if family == Family::S {
        2 * qq * (qq * qq - 2)
    } else {
        gamma_order
    };
    if base.order() != base_order {
        return Err(mismatch("base order", base_order, base.order()));
    }
    spec.expected_order = base_order - spec.expected_removed;

    let failures = base.domination_failures(&removed);
    if let Some(&(v, k)) = failures.first() {
        let label = base
            .label(v)
            .map_or_else(|| v.to_string(), |l| l.to_string());
        return Err(Error::PdsViolation(format!(
            "{} of {} outside vertices miss; e.g. {label} has {k} neighbours in the set",
            failures.len(),
            base.order() - removed.len()
        )));
    }
    if removed.len() != spec.expected_removed {
        return Err(mismatch(
            "removed set size",
            spec.expected_removed,
            removed.len(),
        ));
    }
    let graph = base.remove_set(&removed);
    if graph.order() != spec.expected_order {
        return Err(mismatch(
            "derived order",
            spec.expected_order,
            graph.order(),
        ));
    }
    match graph.regular_degree() {
        Some(d) if d == spec.expected_degree => {}
        other => {
            return Err(mismatch(
                "derived degree",
                spec.expected_degree,
                other.map_or_else(
                    || format!("{:?}", graph.degree_profile()),
                    |d| d.to_string(),
                ),
            ))
        }
    }
    Ok(Derived {
        base,
        removed,
        graph,
        spec,
    })
}
