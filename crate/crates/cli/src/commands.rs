use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use intdim::construction::{
    acyclic_coloring_construction, alpha, box_chromatic_construction, cycle_representation,
    forest_two_cographs, path_two_thresholds, pathwidth_construction, star_coloring_construction,
    known_cycle_dimension, treewidth_construction, ConstructionError,
};
use intdim::cover::{auxiliary_graph, threshold_dim_le2};
use intdim::decomposition::{
    distance_two_coloring, greedy_proper_coloring, heuristic_path_decomposition,
    heuristic_tree_decomposition, minimum_coloring, validate_coloring, Coloring, ColoringMode,
    PathDecomposition, TreeDecomposition,
};
use intdim::generators::{generate_family, GraphFamily};
use intdim::io::{parse_graph, write_graph};
use intdim::json::{
    boxes_to_json, coloring_to_json, parse_boxes, parse_coloring, parse_representation,
    representation_to_json,
};
use intdim::recognition::{is_cograph, is_split, is_threshold};
use intdim::solver::{exact_dimension, write_dimacs, Dimension};
use intdim::{verify_representation, Family, Graph, Representation};

use crate::{CliError, Method, RecognizeFamily, Reply, Status, Witnesses};

/// Node budget per colour count when searching for star or acyclic
/// colourings to feed a construction.
const COLORING_BUDGET: u64 = 2_000_000;

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

pub fn recognize(path: &Path, family: RecognizeFamily) -> Result<Reply, CliError> {
    let g = read_graph(path)?;
    let (name, r) = match family {
        RecognizeFamily::Cograph => ("cograph", is_cograph(&g)),
        RecognizeFamily::Threshold => ("threshold", is_threshold(&g)),
        RecognizeFamily::Split => ("split", is_split(&g)),
    };
    let status = if r.member { Status::Ok } else { Status::Reject };
    Ok(Reply::new(
        status,
        json!({
            "command": "recognize",
            "family": name,
            "member": r.member,
            "certificate": r.certificate,
        }),
    ))
}

/// Cyclic vertex order of a graph that is a single cycle: from 0 towards
/// its smaller neighbour.
fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0).next()?;
    while cur != 0 {
        order.push(cur);
        let next = g.neighbors(cur).find(|&w| w != prev)?;
        prev = cur;
        cur = next;
    }
    Some(order)
}

fn relabel(rep: Representation, order: &[usize]) -> Representation {
    let n = order.len();
    let factors = rep
        .factors
        .iter()
        .map(|f| {
            let mut h = Graph::new(n);
            for (a, b) in f.edges() {
                h.add_edge(order[a], order[b]);
            }
            h
        })
        .collect();
    Representation::new(rep.family, factors)
}

/// Colouring for a star or acyclic construction: the supplied one, else the
/// fewest colours exact search finds within budget, else a greedy colouring
/// of the square.
fn obtain_coloring(
    g: &Graph,
    mode: ColoringMode,
    supplied: Option<&Path>,
) -> Result<(Coloring, &'static str), CliError> {
    if let Some(p) = supplied {
        return Ok((parse_coloring(&read_text(p)?)?, "supplied"));
    }
    if mode == ColoringMode::Proper {
        return Ok((greedy_proper_coloring(g), "greedy"));
    }
    let fallback = distance_two_coloring(g, mode);
    match minimum_coloring(g, mode, fallback.num_colors, Some(COLORING_BUDGET)) {
        Some(c) if c.num_colors <= fallback.num_colors => Ok((c, "exact-search")),
        _ => Ok((fallback, "square-greedy")),
    }
}

fn construction_reply(
    g: &Graph,
    method: Method,
    built: Result<Representation, ConstructionError>,
    provenance: Value,
) -> Result<Reply, CliError> {
    let rep = match built {
        Ok(rep) => rep,
        Err(e) => {
            eprintln!("construction rejected: {e}");
            return Ok(Reply::new(
                Status::Reject,
                json!({
                    "command": "construct",
                    "method": method.name(),
                    "reason": e.to_string(),
                    "provenance": provenance,
                }),
            ));
        }
    };
    if let Err(f) = verify_representation(g, &rep) {
        return Err(CliError(format!(
            "internal error: construction failed verification: {f}"
        )));
    }
    Ok(Reply::new(
        Status::Ok,
        json!({
            "command": "construct",
            "method": method.name(),
            "factor_count": rep.len(),
            "representation": representation_to_json(&rep, g.n()),
            "provenance": provenance,
            "verified": true,
        }),
    ))
}

pub fn construct(
    path: &Path,
    method: Method,
    family: Family,
    root_bag: usize,
    roots: &[usize],
    w: &Witnesses,
) -> Result<Reply, CliError> {
    let g = read_graph(path)?;
    let (built, provenance) = match method {
        Method::Forest => (
            forest_two_cographs(&g, roots),
            json!({ "construction": "forest-parity", "roots": roots }),
        ),
        Method::Path => (
            path_two_thresholds(&g),
            json!({ "construction": "forest-parity", "roots": "lower endpoint of each path" }),
        ),
        Method::Cycle => {
            let Some(order) = cycle_order(&g) else {
                return Ok(Reply::new(
                    Status::Reject,
                    json!({ "command": "construct", "method": "cycle", "reason": "graph is not a single cycle" }),
                ));
            };
            let built = cycle_representation(g.n(), family).map(|r| relabel(r, &order));
            (
                built,
                json!({ "construction": "cycle", "family": family, "cycle_order": order }),
            )
        }
        Method::Treewidth => {
            let (d, source) = match &w.tree_decomposition {
                Some(p) => (
                    serde_json::from_str::<TreeDecomposition>(&read_text(p)?)?,
                    "supplied",
                ),
                None => (heuristic_tree_decomposition(&g), "min-degree heuristic"),
            };
            eprintln!(
                "tree decomposition ({source}), witnessed width {}",
                d.width()
            );
            (
                treewidth_construction(&g, &d, root_bag),
                json!({
                    "construction": "ancestor-order",
                    "witness_source": source,
                    "witnessed_width": d.width(),
                    "root_bag": root_bag,
                    "tree_decomposition": d,
                }),
            )
        }
        Method::Pathwidth => {
            let (d, source) = match &w.path_decomposition {
                Some(p) => (
                    serde_json::from_str::<PathDecomposition>(&read_text(p)?)?,
                    "supplied",
                ),
                None => (heuristic_path_decomposition(&g), "bfs-order heuristic"),
            };
            eprintln!(
                "path decomposition ({source}), witnessed width {}",
                d.width()
            );
            (
                pathwidth_construction(&g, &d),
                json!({
                    "construction": "ancestor-order-path",
                    "witness_source": source,
                    "witnessed_width": d.width(),
                    "path_decomposition": d,
                }),
            )
        }
        Method::BoxChromatic => {
            let Some(bp) = &w.boxes else {
                return Err(CliError("--method box-chromatic needs --boxes".into()));
            };
            let b = parse_boxes(&read_text(bp)?, g.n())?;
            let (c, source) = obtain_coloring(&g, ColoringMode::Proper, w.coloring.as_deref())?;
            (
                box_chromatic_construction(&g, &b, &c),
                json!({
                    "construction": "box-chromatic",
                    "boxes": boxes_to_json(&b),
                    "coloring": coloring_to_json(&c),
                    "coloring_source": source,
                }),
            )
        }
        Method::Star | Method::Acyclic => {
            let mode = method.coloring_mode();
            let (c, source) = obtain_coloring(&g, mode, w.coloring.as_deref())?;
            eprintln!("{mode} colouring ({source}) with {} colours", c.num_colors);
            let built = if mode == ColoringMode::Star {
                star_coloring_construction(&g, &c)
            } else {
                acyclic_coloring_construction(&g, &c)
            };
            (
                built,
                json!({
                    "construction": "partition-composition",
                    "coloring": coloring_to_json(&c),
                    "coloring_source": source,
                }),
            )
        }
    };
    construction_reply(&g, method, built, provenance)
}

pub fn verify(graph: &Path, rep_path: &Path) -> Result<Reply, CliError> {
    let g = read_graph(graph)?;
    let (n, rep) = parse_representation(&read_text(rep_path)?)?;
    if n != g.n() {
        return Err(CliError(format!(
            "representation has n = {n} but the graph has {} vertices",
            g.n()
        )));
    }
    Ok(match verify_representation(&g, &rep) {
        Ok(()) => Reply::new(
            Status::Ok,
            json!({ "command": "verify", "accepted": true, "family": rep.family, "factor_count": rep.len() }),
        ),
        Err(f) => {
            eprintln!("rejected: {f}");
            Reply::new(
                Status::Reject,
                json!({ "command": "verify", "accepted": false, "failure": f, "reason": f.to_string() }),
            )
        }
    })
}

pub fn dim(
    path: &Path,
    family: Family,
    kmax: usize,
    budget: Option<u64>,
) -> Result<Reply, CliError> {
    if kmax == 0 {
        return Err(CliError("--kmax must be at least 1".into()));
    }
    let g = read_graph(path)?;
    let d = exact_dimension(&g, family, kmax, budget);
    let mut body = json!({ "command": "dim", "family": family, "kmax": kmax, "result": d });
    let status = match &d {
        Dimension::Exact {
            dimension, witness, ..
        } => {
            body["dimension"] = Value::from(*dimension);
            body["representation"] = representation_to_json(witness, g.n());
            Status::Ok
        }
        Dimension::GreaterThan { .. } => Status::Unsat,
        Dimension::Undecided { .. } => Status::Undecided,
    };
    Ok(Reply::new(status, body))
}

pub fn th2(path: &Path) -> Result<Reply, CliError> {
    let g = read_graph(path)?;
    let d = threshold_dim_le2(&g);
    let status = if d.member { Status::Ok } else { Status::Unsat };
    Ok(Reply::new(
        status,
        json!({
            "command": "th2",
            "member": d.member,
            "certificate": d.certificate,
            "aux_vertices": d.aux_vertices,
            "aux_graph_of": "complement",
        }),
    ))
}

fn bound_row(name: &str, family: Family, witness: Value, factors: usize) -> Value {
    json!({ "bound": name, "family": family, "witness": witness, "factors": factors })
}

pub fn bound(path: &Path, boxes: Option<&Path>) -> Result<Reply, CliError> {
    let g = read_graph(path)?;
    let mut rows = Vec::new();
    let is_forest = g.edge_count() + g.components().len() == g.n();
    if is_forest {
        rows.push(bound_row("forest", Family::Cograph, json!({}), 2));
        if (0..g.n()).all(|v| g.degree(v) <= 2) {
            rows.push(bound_row("path", Family::Threshold, json!({}), 2));
        }
    }
    if let Some(order) = cycle_order(&g) {
        for family in [Family::Cograph, Family::Threshold] {
            let k = known_cycle_dimension(order.len(), family).expect("n >= 3");
            rows.push(bound_row("cycle", family, json!({ "n": order.len() }), k));
        }
    }
    let td = heuristic_tree_decomposition(&g);
    rows.push(bound_row(
        "tw+2",
        Family::Cograph,
        json!({ "witnessed_width": td.width() }),
        td.width() + 2,
    ));
    let pd = heuristic_path_decomposition(&g);
    rows.push(bound_row(
        "pw+1",
        Family::Threshold,
        json!({ "witnessed_width": pd.width() }),
        pd.width() + 1,
    ));
    if g.n() > 0 {
        for mode in [ColoringMode::Star, ColoringMode::Acyclic] {
            let (c, source) = obtain_coloring(&g, mode, None)?;
            debug_assert!(validate_coloring(&g, &c).is_ok());
            let a = alpha(c.num_colors.max(1))?;
            let (name, k) = if mode == ColoringMode::Star {
                ("alpha(star colours)", a)
            } else {
                ("2*alpha(acyclic colours)", 2 * a)
            };
            rows.push(bound_row(
                name,
                Family::Cograph,
                json!({ "colors": c.num_colors, "source": source }),
                k,
            ));
        }
    }
    if let Some(bp) = boxes {
        let b = parse_boxes(&read_text(bp)?, g.n())?;
        let c = greedy_proper_coloring(&g);
        rows.push(bound_row(
            "colors*box",
            Family::Threshold,
            json!({ "colors": c.num_colors, "k": b.k }),
            c.num_colors * b.k,
        ));
    }
    let best = |f: Family| {
        rows.iter()
            .filter(|r| r["family"] == json!(f))
            .filter_map(|r| r["factors"].as_u64())
            .min()
    };
    // threshold graphs are cographs, so threshold bounds apply to both
    let best_cog = best(Family::Cograph)
        .into_iter()
        .chain(best(Family::Threshold))
        .min();
    Ok(Reply::new(
        Status::Ok,
        json!({
            "command": "bound",
            "n": g.n(),
            "bounds": rows,
            "best": { "cograph": best_cog, "threshold": best(Family::Threshold) },
            "note": "witnessed-width bounds; widths come from heuristics, not optimal decompositions",
        }),
    ))
}

pub fn gen(family: &str, params: &[i64], output: Option<&Path>) -> Result<Reply, CliError> {
    let fam: GraphFamily = family.parse()?;
    let g = generate_family(fam, params)?;
    if let Some(p) = output {
        fs::write(p, write_graph(&g)).map_err(|e| CliError(format!("{}: {e}", p.display())))?;
    }
    Ok(Reply::new(
        Status::Ok,
        json!({
            "command": "gen",
            "family": fam.name(),
            "params": params,
            "n": g.n(),
            "m": g.edge_count(),
            "edges": g.edges().collect::<Vec<_>>(),
        }),
    ))
}

pub fn cnf(
    path: &Path,
    family: Family,
    k: usize,
    output: &Path,
    sym: bool,
) -> Result<Reply, CliError> {
    if k == 0 {
        return Err(CliError("-k must be at least 1".into()));
    }
    let g = read_graph(path)?;
    let text = write_dimacs(&g, family, k, sym);
    fs::write(output, &text).map_err(|e| CliError(format!("{}: {e}", output.display())))?;
    let header = text
        .lines()
        .find(|l| l.starts_with("p cnf"))
        .unwrap_or_default();
    let nums: Vec<u64> = header
        .split(' ')
        .skip(2)
        .filter_map(|x| x.parse().ok())
        .collect();
    Ok(Reply::new(
        Status::Ok,
        json!({
            "command": "cnf",
            "family": family,
            "k": k,
            "variables": nums.first(),
            "clauses": nums.get(1),
            "output": output.display().to_string(),
        }),
    ))
}

pub fn aux(path: &Path, output: &Path) -> Result<Reply, CliError> {
    let g = read_graph(path)?;
    let a = auxiliary_graph(&g);
    fs::write(output, write_graph(&a.graph))
        .map_err(|e| CliError(format!("{}: {e}", output.display())))?;
    let mut map_path = output.as_os_str().to_owned();
    map_path.push(".map.json");
    let mapping = a.mapping_json();
    fs::write(&map_path, serde_json::to_string_pretty(&mapping)?)?;
    Ok(Reply::new(
        Status::Ok,
        json!({
            "command": "aux",
            "n": a.graph.n(),
            "m": a.graph.edge_count(),
            "output": output.display().to_string(),
            "mapping": mapping,
        }),
    ))
}
