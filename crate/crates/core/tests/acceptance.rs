//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. All checks are exact integer/set comparisons.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use cage8::cage::{
    build_b_over, build_gamma_over, build_gamma_staged, build_h_over, build_stage, distance_claim,
    gamma_point_neighborhood, moore_bound, side_swap_map, sigma_map,
};
use cage8::io::{read_edgelist, write_graph, write_metadata, Format, Metadata};
use cage8::pds::{
    build_gq, build_set_s, default_alpha, default_beta, default_gq_xi, derive, pds_a, pds_b, pds_c,
    pds_c_prime, predicted_r_neighbor, set_s_root, DeriveParams, Family,
};
use cage8::{BipartiteGraph, Field, FieldElement, Side};

const QS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];
const QS_S: [u64; 5] = [4, 5, 7, 8, 9];

/// `Ok` carries informational notes, `Err` the failure details.
type Outcome = Result<Vec<String>, Vec<String>>;
type Criterion = (&'static str, fn() -> Outcome);
type Export = Box<dyn Fn() -> (BipartiteGraph, Vec<u8>)>;

fn collect(failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(Vec::new())
    } else {
        Err(failures)
    }
}

macro_rules! check {
    ($fails:ident, $cond:expr, $($msg:tt)*) => {
        if !$cond {
            $fails.push(format!($($msg)*));
        }
    };
}

fn field(q: u64) -> Field {
    Field::new(q).unwrap()
}

fn is_single_cycle(g: &BipartiteGraph, len: usize) -> bool {
    g.order() == len && g.regular_degree() == Some(2) && g.is_connected()
}

fn c1_cage_reproduction() -> Outcome {
    let mut fails = Vec::new();
    for q in QS {
        let g = build_gamma_over(&field(q));
        let n = 2 * (q * q * q + q * q + q + 1);
        let mb = moore_bound(q + 1, 8);
        check!(
            fails,
            g.order() as u64 == n,
            "q={q}: order {} != {n}",
            g.order()
        );
        check!(
            fails,
            g.regular_degree() == Some(q as usize + 1),
            "q={q}: degrees {:?}",
            g.degree_profile()
        );
        check!(fails, g.is_bipartite(), "q={q}: not bipartite");
        check!(fails, g.is_connected(), "q={q}: not connected");
        check!(fails, g.girth() == Some(8), "q={q}: girth {:?}", g.girth());
        check!(
            fails,
            g.order() as u64 == mb,
            "q={q}: excess {}",
            g.order() as i64 - mb as i64
        );
    }
    collect(fails)
}

fn c2_auxiliary_graphs() -> Outcome {
    let mut fails = Vec::new();
    for q in QS {
        let f = field(q);
        let (h, b) = (build_h_over(&f), build_b_over(&f));
        for (name, g) in [("H", &h), ("B", &b)] {
            check!(
                fails,
                g.order() as u64 == 2 * q * q * q,
                "{name}_{q}: order {}",
                g.order()
            );
            check!(
                fails,
                g.regular_degree() == Some(q as usize),
                "{name}_{q}: degrees {:?}",
                g.degree_profile()
            );
            check!(
                fails,
                g.girth() == Some(8),
                "{name}_{q}: girth {:?}",
                g.girth()
            );
        }
        if q == 2 {
            let ok = h.component_count() == 2
                && (0..h.order() as u32).all(|v| {
                    let comp = h.ball(v, 8, true).unwrap();
                    is_single_cycle(&h.remove_set(&h.all_vertices().difference(&comp)), 8)
                });
            check!(fails, ok, "H_2 is not two disjoint 8-cycles");
        }
        let iso = sigma_map(&b, &h).and_then(|m| b.is_isomorphism_via(&h, &m));
        check!(
            fails,
            matches!(iso, Ok(true)),
            "q={q}: sigma is not an isomorphism B -> H ({iso:?})"
        );
    }
    collect(fails)
}

fn c3_oracle_equivalence() -> Outcome {
    let mut fails = Vec::new();
    for q in QS {
        let f = field(q);
        let g = build_gamma_over(&f);
        let staged = build_gamma_staged(q).unwrap().graph;
        check!(
            fails,
            staged.labelled_edges() == g.labelled_edges() && staged == g,
            "q={q}: staged build differs from direct build"
        );
        let mut bad = 0;
        for v in g.vertices().filter(|&v| g.side(v) == Side::Point) {
            let want: BTreeSet<_> = gamma_point_neighborhood(&f, g.label(v).unwrap())
                .unwrap()
                .iter()
                .map(|w| g.id_of(w).unwrap())
                .collect();
            let got: BTreeSet<_> = g.neighbors(v).iter().copied().collect();
            bad += (want != got) as usize;
        }
        check!(
            fails,
            bad == 0,
            "q={q}: {bad} points disagree with the point-side formula"
        );
    }
    collect(fails)
}

fn c4_self_duality() -> Outcome {
    let mut fails = Vec::new();
    for q in [2, 4, 8] {
        let g = build_gamma_over(&field(q));
        let ok = g.is_isomorphism_via(&g, &side_swap_map(&g)).unwrap();
        check!(
            fails,
            ok,
            "q={q}: coordinate-preserving side swap is not an automorphism"
        );
    }
    collect(fails)
}

fn c5_pds_cardinalities() -> Outcome {
    let mut fails = Vec::new();
    for q in QS {
        let g = build_gamma_over(&field(q));
        let qq = q as usize;
        let alpha = default_alpha();
        let a = pds_a(&g, &alpha, &default_beta(&g, &alpha).unwrap()).unwrap();
        check!(
            fails,
            a.len() == 2 * (qq + 1).pow(2),
            "q={q}: |A| = {}",
            a.len()
        );
        check!(
            fails,
            g.is_perfect_dominating(&a),
            "q={q}: A not perfect dominating"
        );
        let b = pds_b(&g, FieldElement::ONE).unwrap();
        check!(
            fails,
            b.len() == 2 * (qq * qq + 3 * qq + 1),
            "q={q}: |B| = {}",
            b.len()
        );
        check!(
            fails,
            g.is_perfect_dominating(&b),
            "q={q}: B not perfect dominating"
        );
    }
    let g8 = build_gamma_over(&field(8));
    let c = pds_c(&g8).unwrap();
    check!(fails, c.len() == 2 * (64 + 32 + 3), "|C| = {}", c.len());
    check!(
        fails,
        g8.is_perfect_dominating(&c),
        "C not perfect dominating"
    );
    let g4 = build_gamma_over(&field(4));
    let cp = pds_c_prime(&g4, FieldElement::from_index_unchecked(2)).unwrap();
    check!(fails, cp.len() == 70, "|C'| = {}", cp.len());
    check!(
        fails,
        g4.is_perfect_dominating(&cp),
        "C' not perfect dominating"
    );
    collect(fails)
}

fn c6_derived_graphs() -> Outcome {
    let mut fails = Vec::new();
    let mut notes = Vec::new();
    let mut cases: Vec<(u64, Family, usize)> = Vec::new();
    for q in QS {
        let qq = q as usize;
        cases.push((q, Family::A, 2 * qq * (qq * qq - 1)));
        cases.push((q, Family::B, 2 * qq * (qq * qq - 2)));
    }
    cases.push((8, Family::C, 972));
    cases.push((4, Family::CPrime, 100));
    for (q, family, order) in cases {
        let d = match derive(q, family, &DeriveParams::default()) {
            Ok(d) => d,
            Err(e) => {
                fails.push(format!("q={q} {family}: {e}"));
                continue;
            }
        };
        let g = &d.graph;
        check!(
            fails,
            g.order() == order,
            "q={q} {family}: order {} != {order}",
            g.order()
        );
        check!(
            fails,
            g.regular_degree() == Some(q as usize),
            "q={q} {family}: degrees {:?}",
            g.degree_profile()
        );
        let girth = g.girth();
        if q >= 3 {
            check!(fails, girth == Some(8), "q={q} {family}: girth {girth:?}");
        } else {
            check!(
                fails,
                girth.is_none_or(|x| x >= 8),
                "q=2 {family}: girth {girth:?}"
            );
            notes.push(format!("q=2 {family}: girth {girth:?}"));
        }
        if q == 2 && family == Family::B {
            check!(
                fails,
                is_single_cycle(g, 8),
                "Γ_2 - B is not a single 8-cycle"
            );
        }
    }
    collect(fails).map(|_| notes)
}

fn c7_r_quantities() -> Outcome {
    let mut fails = Vec::new();
    for q in QS_S {
        let f = field(q);
        let qq = q as usize;
        let xi = default_gq_xi(&f);
        let gq = build_gq(&build_gamma_over(&f), xi).unwrap();
        let s = build_set_s(&gq, xi).unwrap();
        check!(
            fails,
            s.p.len() == qq * (qq - 3),
            "q={q}: |P| = {}",
            s.p.len()
        );
        check!(
            fails,
            s.r.len() == qq * (qq - 3),
            "q={q}: |R| = {}",
            s.r.len()
        );
        check!(
            fails,
            s.n_r.len() == 2 * qq * (qq - 2),
            "q={q}: |N(R)| = {} != {}",
            s.n_r.len(),
            2 * qq * (qq - 2)
        );
        let mut bad_cf = 0;
        for v in s.p.iter() {
            let l = gq.label(v).unwrap();
            let want = predicted_r_neighbor(&f, l.b.as_elem().unwrap(), l.c.as_elem().unwrap())
                .and_then(|w| gq.id_of(&w).ok());
            let got: Vec<_> = gq
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| s.r.contains(w))
                .collect();
            bad_cf += !(got.len() == 1 && Some(got[0]) == want) as usize;
        }
        check!(
            fails,
            bad_cf == 0,
            "q={q}: {bad_cf} P-vertices miss the predicted unique R-neighbour"
        );
        let outer = gq
            .ball(gq.id_of(&set_s_root()).unwrap(), 5, false)
            .unwrap()
            .difference(&s.r);
        let bad = s
            .n_r
            .difference(&s.p)
            .iter()
            .filter(|&v| {
                gq.neighbors(v)
                    .iter()
                    .filter(|&&w| outer.contains(w))
                    .count()
                    != 1
            })
            .count();
        check!(
            fails,
            bad == 0,
            "q={q}: {bad} vertices of N(R)\\P lack exactly one neighbour in N^5\\R"
        );
    }
    collect(fails)
}

fn c8_q_minus_1_regular() -> Outcome {
    let mut fails = Vec::new();
    for q in QS_S {
        let f = field(q);
        let qq = q as usize;
        let xi = default_gq_xi(&f);
        let gq = build_gq(&build_gamma_over(&f), xi).unwrap();
        let s = build_set_s(&gq, xi).unwrap().s;
        check!(
            fails,
            s.len() == 4 * qq * qq - 6 * qq,
            "q={q}: |S| = {} != {}",
            s.len(),
            4 * qq * qq - 6 * qq
        );
        let misses = gq.domination_failures(&s).len();
        check!(
            fails,
            misses == 0,
            "q={q}: S not perfect dominating in G_q ({misses} vertices miss)"
        );
        let h = gq.remove_set(&s);
        let order = 2 * qq * (qq - 1) * (qq - 1);
        check!(
            fails,
            h.order() == order,
            "q={q}: order {} != {order}",
            h.order()
        );
        check!(
            fails,
            h.regular_degree() == Some(qq - 1),
            "q={q}: degrees {:?}",
            h.degree_profile()
        );
        check!(fails, h.girth() == Some(8), "q={q}: girth {:?}", h.girth());
    }
    collect(fails)
}

fn c9_distance_claims() -> Outcome {
    let mut fails = Vec::new();
    for q in [2, 3, 4, 5] {
        let f = field(q);
        for k in 1..=5 {
            let claim = distance_claim(&f, k).unwrap();
            let g = build_stage(&f, claim.stage);
            check!(
                fails,
                claim.holds_in(&g).unwrap(),
                "q={q}: claim {k} fails in {}",
                claim.stage.name()
            );
            if k <= 2 {
                check!(
                    fails,
                    claim.holds_in(&build_h_over(&f)).unwrap(),
                    "q={q}: claim {k} fails in H_q"
                );
            }
        }
    }
    collect(fails)
}

fn export(g: &BipartiteGraph, meta: &Metadata) -> Vec<u8> {
    let mut out = Vec::new();
    for f in [Format::Edgelist, Format::Dimacs, Format::Graph6] {
        write_graph(g, f, &mut out).unwrap();
    }
    write_metadata(meta, &mut out).unwrap();
    out
}

fn c10_round_trip_determinism() -> Outcome {
    let mut fails = Vec::new();
    let gamma_export = |q: u64| {
        let f = field(q);
        let g = build_gamma_over(&f);
        let meta = Metadata::describe(&g, &f, "gamma", None);
        (g.clone(), export(&g, &meta))
    };
    let derived_export = |q: u64, family: Family| {
        let d = derive(q, family, &DeriveParams::default()).unwrap();
        let meta = Metadata::describe(&d.graph, &field(q), family.as_str(), Some(&d.spec));
        (d.graph.clone(), export(&d.graph, &meta))
    };
    let mut runs: Vec<(String, Export)> = Vec::new();
    for q in QS {
        runs.push((format!("gamma q={q}"), Box::new(move || gamma_export(q))));
    }
    for (q, fam) in [
        (3, Family::A),
        (5, Family::B),
        (8, Family::C),
        (4, Family::CPrime),
        (4, Family::S),
    ] {
        runs.push((
            format!("{fam} q={q}"),
            Box::new(move || derived_export(q, fam)),
        ));
    }
    for (name, run) in runs {
        let (g, first) = run();
        let (_, second) = run();
        check!(
            fails,
            first == second,
            "{name}: exports differ between runs"
        );
        let mut text = Vec::new();
        write_graph(&g, Format::Edgelist, &mut text).unwrap();
        let back = read_edgelist(text.as_slice()).unwrap();
        check!(
            fails,
            back == g,
            "{name}: edge-list round trip changed the graph"
        );
        let mut again = Vec::new();
        write_graph(&back, Format::Edgelist, &mut again).unwrap();
        check!(fails, again == text, "{name}: re-export differs");
    }
    collect(fails)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 cage reproduction", c1_cage_reproduction),
        ("2 auxiliary graphs H_q, B_q and sigma", c2_auxiliary_graphs),
        (
            "3 staged build and point-side oracle",
            c3_oracle_equivalence,
        ),
        (
            "4 coordinate-preserving side swap is an automorphism",
            c4_self_duality,
        ),
        (
            "5 perfect dominating set sizes and validity",
            c5_pds_cardinalities,
        ),
        ("6 derived orders, degrees and girths", c6_derived_graphs),
        ("7 P, R, N(R) quantities in G_q", c7_r_quantities),
        (
            "8 (q-1)-regular girth-8 graphs G_q - S",
            c8_q_minus_1_regular,
        ),
        (
            "9 distance claims of the staged construction",
            c9_distance_claims,
        ),
        ("10 round trip and determinism", c10_round_trip_determinism),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(notes) => {
                println!("PASS criterion {name} ({secs:.1}s)");
                for n in notes {
                    println!("    note: {n}");
                }
            }
            Err(details) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.1}s)");
                for d in details {
                    println!("    {d}");
                }
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
