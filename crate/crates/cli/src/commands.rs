use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use heawood_core::coloring::{
    chromatic_number, is_k_choosable, solve_list_coloring, verify_coloring, ChoosabilityLimits, ListAssignment,
};
use heawood_core::constructions::{
    complete_minus, gallai_join, identify_edges, k_h_plus1_minus_e_feasibility, special_case_family, IdentificationSpec,
    Identified, PolygonShape, TriangulatedPolygon,
};
use heawood_core::criticality::{special_case_bound, is_k_critical, CriticalityWitness, DEFAULT_CRITICALITY_LIMIT};
use heawood_core::embedding::{validate_theorem_instance, RotationEmbedding};
use heawood_core::formats::{parse_embedding, parse_graph, parse_lists, write_coloring, write_embedding, write_graph, write_lists};
use heawood_core::genus::heawood_table;
use heawood_core::graph::clique_number;
use heawood_core::verify::{
    verify_critical_edge_bound, verify_degree_choosability, verify_face_tracing, verify_glued_polygons,
    verify_greedy_suite, verify_small_order_base_case, BaseCaseOptions, CheckSummary,
};
use heawood_core::Graph;

use crate::report::{face_digest, RunReport, Status};
use crate::{Cli, Command, Construction, Generate, GlueArgs, Shape};

pub fn run(cli: &Cli) -> Result<RunReport> {
    match &cli.command {
        Command::HeawoodTable { eps_max } => heawood_table_cmd(*eps_max),
        Command::VerifySmallOrders { epsilon } => {
            let opts = BaseCaseOptions {
                max_n: cli.max_n,
                max_classes: cli.max_classes,
                palette_bound: cli.palette_bound,
            };
            summary_report(
                json!({ "epsilon": epsilon, "max_n": cli.max_n, "max_classes": cli.max_classes, "palette_bound": cli.palette_bound }),
                verify_small_order_base_case(*epsilon, opts)?,
            )
        }
        Command::VerifyGreedy { count, max_k } => summary_report(
            json!({ "count": count, "max_k": max_k, "seed": cli.seed }),
            verify_greedy_suite(*count, cli.seed, *max_k)?,
        ),
        Command::VerifyDegreeChoosable => {
            let max_n = cli.max_n.unwrap_or(7);
            summary_report(
                json!({ "max_n": max_n, "max_classes": cli.max_classes }),
                verify_degree_choosability(max_n, cli.max_classes)?,
            )
        }
        Command::VerifyCriticalBound { k } => {
            let max_n = cli.max_n.unwrap_or(8);
            summary_report(json!({ "max_n": max_n, "k": k }), verify_critical_edge_bound(max_n, k)?)
        }
        Command::VerifyEmbeddings { count } => {
            let max_n = cli.max_n.unwrap_or(8);
            summary_report(
                json!({ "count": count, "max_n": max_n, "seed": cli.seed }),
                verify_face_tracing(*count, cli.seed, max_n)?,
            )
        }
        Command::VerifyConstruction { which } => match which {
            Construction::GluedPolygon { glue, all: true } => {
                let max_n = cli.max_n.unwrap_or(glue.n.min(9));
                if max_n > 10 {
                    bail!("exhaustive gluing check is capped at 10 vertices, got {max_n}");
                }
                summary_report(json!({ "max_n": max_n }), verify_glued_polygons(max_n)?)
            }
            Construction::GluedPolygon { glue, all: false } => glued_polygon_cmd(glue, cli.seed),
            Construction::SpecialFamily { i } => special_family_cmd(*i),
            Construction::Gallai { k } => gallai_cmd(*k),
        },
        Command::SpecialCaseBound { epsilon, nprime } => {
            let r = special_case_bound(*epsilon, *nprime)?;
            let mut report = RunReport::new(json!({ "epsilon": epsilon, "nprime": nprime }));
            let status = if r.contradiction { Status::Pass } else { Status::Info };
            report.push("lower bound exceeds Euler bound", status, &r);
            Ok(report)
        }
        Command::Feasibility { epsilon } => {
            let r = k_h_plus1_minus_e_feasibility(*epsilon)?;
            let mut report = RunReport::new(json!({ "epsilon": epsilon }));
            report.push("K_{H+1} minus an edge", Status::Info, &r);
            Ok(report)
        }
        Command::CheckInstance {
            graph,
            embedding,
            face,
            lists,
            face_digest,
        } => check_instance_cmd(graph, embedding, *face, lists, face_digest.as_deref()),
        Command::Solve { graph, lists } => solve_cmd(graph, lists),
        Command::TraceFaces { embedding } => trace_faces_cmd(embedding),
        Command::Generate { what } => generate_cmd(what, cli.seed),
    }
}

fn summary_report(params: Value, s: CheckSummary) -> Result<RunReport> {
    let mut report = RunReport::new(params);
    let ok = s.passed();
    let name = s.name.clone();
    report.check(&name, ok, &s);
    report.text = Some(format!(
        "{name}: {} instances, {} skipped, {} violations, {} ms\n{}",
        s.instances,
        s.skipped,
        s.violations.len(),
        s.elapsed_ms,
        s.notes.join("\n")
    ));
    Ok(report)
}

fn heawood_table_cmd(eps_max: i64) -> Result<RunReport> {
    let rows = heawood_table(&eps_max)?;
    let mut report = RunReport::new(json!({ "eps_max": eps_max }));
    let mut text = String::from("eps   H   i  case  window     special\n");
    for r in &rows {
        let w = &r.window;
        text.push_str(&format!(
            "{:<5} {:<3}{} {:<2} {:<5} {:>4}..{:<4} {}\n",
            r.epsilon,
            r.heawood,
            if w.special { "*" } else { " " },
            w.i,
            format!("{:?}", w.case),
            w.eps_lo,
            w.eps_hi,
            r.special_status.map_or("-".to_string(), |s| format!("{s:?}")),
        ));
        if let Some(k) = r.klein_bottle_clique {
            text.push_str(&format!("      Klein bottle: largest clique K{k}\n"));
        }
    }
    report.data = serde_json::to_value(&rows)?;
    report.text = Some(text);
    Ok(report)
}

fn shape_of(shape: Shape, seed: u64) -> PolygonShape {
    match shape {
        Shape::Fan => PolygonShape::Fan,
        Shape::Snake => PolygonShape::Snake,
        Shape::Random => PolygonShape::Random { seed },
    }
}

/// The requested gluing, or the simple one with the colour condition whose
/// edges lie farthest apart.
fn glue(args: &GlueArgs, seed: u64) -> Result<(TriangulatedPolygon, Identified)> {
    if args.n > 64 {
        bail!("polygon order {} exceeds 64", args.n);
    }
    let tp = TriangulatedPolygon::generate(args.n, shape_of(args.shape, seed))?;
    let id = match (args.first, args.second) {
        (Some(first), Some(second)) => identify_edges(
            &tp,
            IdentificationSpec {
                first,
                second,
                twist: args.twist,
            },
        )?,
        (None, None) => IdentificationSpec::all(args.n)
            .into_iter()
            .filter(|s| s.twist == args.twist)
            .filter_map(|s| identify_edges(&tp, s).ok())
            .filter(|id| id.report.color_condition)
            .max_by_key(|id| (id.report.edge_distance, std::cmp::Reverse((id.report.spec.first, id.report.spec.second))))
            .ok_or_else(|| anyhow!("no simple gluing of this polygon meets the colour condition"))?,
        _ => bail!("give both --first and --second, or neither"),
    };
    Ok((tp, id))
}

fn glued_polygon_cmd(args: &GlueArgs, seed: u64) -> Result<RunReport> {
    let (tp, id) = glue(args, seed)?;
    let mut report = RunReport::new(json!({ "n": args.n, "shape": format!("{:?}", args.shape), "seed": seed, "spec": id.report.spec }));
    report.push("gluing", Status::Info, &id.report);
    report.push("polygon colour classes", Status::Info, tp.color_classes());
    let g = &id.graph;
    let chi = chromatic_number(g);
    if id.report.color_condition {
        report.check("needs four colours", chi.chromatic_number >= 4, json!({ "chromatic_number": chi.chromatic_number, "coloring": chi.coloring }));
        let limits = ChoosabilityLimits {
            max_vertices: g.n(),
            max_k: 3,
        };
        let outcome = is_k_choosable(g, 3, &limits)?;
        report.check("not 3-choosable", !outcome.is_choosable(), &outcome);
    } else {
        report.push(
            "colour condition fails",
            Status::Info,
            json!({ "chromatic_number": chi.chromatic_number, "coloring": chi.coloring }),
        );
    }
    match id.report.all_vertices_face {
        Some(f) => {
            let face = id.embedding.distinguished_face(f)?;
            report.check(
                "face through all vertices",
                true,
                json!({ "face": f, "walk": face.vertex_sequence(), "digest": face_digest(&face.vertices) }),
            );
        }
        None => report.check("face through all vertices", false, "none found"),
    }
    report.push(
        "local structure",
        Status::Info,
        json!({ "induced_k4": id.report.induced_k4, "edge_distance": id.report.edge_distance }),
    );
    report.data = json!({ "graph": write_graph(g), "embedding": write_embedding(&id.embedding), "labels": id.labels });
    Ok(report)
}

fn criticality_verdict(report: &mut RunReport, g: &Graph, k: usize) -> Result<()> {
    let r = is_k_critical(g, k, DEFAULT_CRITICALITY_LIMIT.max(g.n()))?;
    let detail = match &r.witness {
        CriticalityWitness::Certificates { certificates } => json!({
            "deletions_colored": certificates.len(),
            "certificates": certificates,
        }),
        other => serde_json::to_value(other)?,
    };
    report.check(&format!("{k}-critical"), r.is_critical, detail);
    Ok(())
}

fn special_family_cmd(i: i64) -> Result<RunReport> {
    let p = special_case_family(i)?;
    if p.graph.n() > 16 {
        bail!("special family member has {} vertices, desk cap is 16", p.graph.n());
    }
    let k = (p.heawood - 2) as usize;
    let mut report = RunReport::new(json!({ "i": i, "epsilon": p.epsilon, "heawood": p.heawood }));
    let omega = clique_number(&p.graph);
    report.check(&format!("no K{k}"), omega < k, json!({ "clique_number": omega }));
    criticality_verdict(&mut report, &p.graph, k)?;
    let colored = solve_list_coloring(&p.graph, &p.lists)?;
    report.check(
        &format!("identical {}-lists fail", k - 1),
        colored.is_none(),
        json!({ "lists": write_lists(&p.lists), "coloring": colored }),
    );
    report.push("Euler feasibility", Status::Info, k_h_plus1_minus_e_feasibility(p.epsilon)?);
    report.data = json!({ "graph": write_graph(&p.graph) });
    Ok(report)
}

fn gallai_cmd(k: usize) -> Result<RunReport> {
    let g = gallai_join(k)?;
    if g.n() > 16 {
        bail!("Gallai join has {} vertices, desk cap is 16", g.n());
    }
    let mut report = RunReport::new(json!({ "k": k }));
    let omega = clique_number(&g);
    report.check(&format!("clique number {}", k - 1), omega == k - 1, json!({ "clique_number": omega }));
    criticality_verdict(&mut report, &g, k)?;
    report.data = json!({ "graph": write_graph(&g) });
    Ok(report)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn check_instance_cmd(
    graph_path: &Path,
    emb_path: &Path,
    face: usize,
    lists_path: &Path,
    expected_digest: Option<&str>,
) -> Result<RunReport> {
    let g = parse_graph(&read(graph_path)?).with_context(|| format!("parsing {}", graph_path.display()))?;
    let emb = parse_embedding(&read(emb_path)?).with_context(|| format!("parsing {}", emb_path.display()))?;
    let lists = parse_lists(&read(lists_path)?).with_context(|| format!("parsing {}", lists_path.display()))?;
    if emb.graph() != &g {
        bail!("the embedding's rotations describe a different graph from {}", graph_path.display());
    }
    let inst = validate_theorem_instance(&emb, face, &lists)?;
    if inst.epsilon == 0 {
        bail!("the theorem requires Euler genus at least 1; this embedding is planar");
    }
    let digest = face_digest(&inst.face_vertices);
    if let Some(want) = expected_digest {
        if want != digest {
            bail!("face {face} has digest {digest}, expected {want}");
        }
    }
    let mut report = RunReport::new(json!({
        "graph": graph_path, "embedding": emb_path, "face": face, "lists": lists_path,
    }));
    report.push(
        "instance",
        Status::Info,
        json!({ "epsilon": inst.epsilon, "heawood": inst.heawood, "face_vertices": inst.face_vertices, "face_digest": digest }),
    );
    if inst.excluded_genus {
        report.push("excluded by theorem", Status::Info, "Euler genus 3 is not covered");
    }
    if !inst.lists_meet_hypothesis() {
        report.push("list sizes below hypothesis", Status::Info, &inst.list_violations);
    }
    let coloring = solve_list_coloring(&g, &lists)?;
    match coloring {
        Some(c) => {
            verify_coloring(&g, &lists, &c, true).map_err(|v| anyhow!("solver returned an invalid colouring: {v}"))?;
            report.check("coloring", true, c.colors());
            report.data = json!({ "coloring": write_coloring(&c) });
        }
        None => {
            if let Some(k) = &inst.f_bad_clique {
                report.check(&format!("excused by F-bad K{}", k.len()), true, k);
            } else if inst.coloring_guaranteed() {
                report.check("coloring", false, "no colouring exists although the hypotheses hold");
            } else {
                report.push("coloring", Status::Info, "no colouring; hypotheses not met");
            }
        }
    }
    Ok(report)
}

fn solve_cmd(graph_path: &Path, lists_path: &Path) -> Result<RunReport> {
    let g = parse_graph(&read(graph_path)?).with_context(|| format!("parsing {}", graph_path.display()))?;
    let lists = parse_lists(&read(lists_path)?).with_context(|| format!("parsing {}", lists_path.display()))?;
    let mut report = RunReport::new(json!({ "graph": graph_path, "lists": lists_path }));
    match solve_list_coloring(&g, &lists)? {
        Some(c) => {
            verify_coloring(&g, &lists, &c, true).map_err(|v| anyhow!("solver returned an invalid colouring: {v}"))?;
            report.check("coloring", true, c.colors());
            report.data = json!({ "coloring": write_coloring(&c) });
        }
        None => report.push("coloring", Status::Info, "no colouring exists"),
    }
    Ok(report)
}

fn trace_faces_cmd(path: &Path) -> Result<RunReport> {
    let emb = parse_embedding(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    let mut report = RunReport::new(json!({ "embedding": path }));
    let faces = emb.faces();
    let mut text = format!(
        "euler genus {}, {}orientable, {} faces\n",
        emb.euler_genus(),
        if emb.is_orientable() { "" } else { "non" },
        faces.len()
    );
    let mut rows = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        let digest = face_digest(&f.vertices);
        let walk = f.vertex_sequence();
        text.push_str(&format!("face {i}: length {} digest {digest} walk {walk:?}\n", f.len()));
        rows.push(json!({ "index": i, "length": f.len(), "walk": walk, "vertices": f.vertices, "digest": digest }));
    }
    report.push(
        "trace",
        Status::Info,
        json!({ "euler_genus": emb.euler_genus(), "orientable": emb.is_orientable(), "faces": faces.len() }),
    );
    report.data = Value::Array(rows);
    report.text = Some(text);
    Ok(report)
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once('-')
        .ok_or_else(|| anyhow!("expected an edge written u-v, got {s:?}"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn generate_cmd(what: &Generate, seed: u64) -> Result<RunReport> {
    let (graph, embedding, lists): (Graph, Option<RotationEmbedding>, Option<ListAssignment>) = match what {
        Generate::Polygon { n, shape } => {
            let tp = TriangulatedPolygon::generate(*n, shape_of(*shape, seed))?;
            (tp.graph(), Some(tp.embedding()), None)
        }
        Generate::Glued(args) => {
            let (_, id) = glue(args, seed)?;
            (id.graph, Some(id.embedding), None)
        }
        Generate::Gallai { k } => (gallai_join(*k)?, None, None),
        Generate::SpecialFamily { i } => {
            let p = special_case_family(*i)?;
            (p.graph, None, Some(p.lists))
        }
        Generate::CompleteMinus { n, missing } => {
            let pairs = missing.iter().map(|s| parse_pair(s)).collect::<Result<Vec<_>>>()?;
            (complete_minus(*n, &pairs)?, None, None)
        }
    };
    let mut report = RunReport::new(json!({ "seed": seed }));
    let mut text = format!("# graph\n{}", write_graph(&graph));
    let mut data = json!({ "graph": write_graph(&graph) });
    if let Some(e) = &embedding {
        text.push_str(&format!("# embedding\n{}", write_embedding(e)));
        data["embedding"] = json!(write_embedding(e));
    }
    if let Some(l) = &lists {
        text.push_str(&format!("# lists\n{}", write_lists(l)));
        data["lists"] = json!(write_lists(l));
    }
    report.data = data;
    report.text = Some(text);
    report.raw_text = true;
    Ok(report)
}
